//! Exact linear algebra over GF(p) and the rationals.
//!
//! Subspaces are stored as canonical reduced row-echelon bases, so two
//! equal spans always compare equal as plain data. Everything here is
//! immutable after construction and safe to share across threads.

use crate::error::{Error, Result};
use crate::field::{FieldDesc, Scalar};

/// A coordinate vector over a fixed field.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Vector {
    field: FieldDesc,
    entries: Vec<Scalar>,
}

impl Vector {
    pub fn new(field: FieldDesc, entries: Vec<Scalar>) -> Self {
        Vector { field, entries }
    }

    pub fn zero(field: FieldDesc, dim: usize) -> Self {
        Vector {
            field,
            entries: vec![field.zero(); dim],
        }
    }

    /// Standard basis vector e_i.
    pub fn basis(field: FieldDesc, dim: usize, i: usize) -> Self {
        assert!(i < dim, "basis index out of range");
        let mut v = Vector::zero(field, dim);
        v.entries[i] = field.one();
        v
    }

    /// Convenience constructor from signed integers.
    pub fn from_ints(field: FieldDesc, entries: &[i64]) -> Self {
        Vector {
            field,
            entries: entries.iter().map(|&x| field.from_i64(x)).collect(),
        }
    }

    pub fn field(&self) -> FieldDesc {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.entries
    }

    pub fn get(&self, i: usize) -> &Scalar {
        &self.entries[i]
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Scalar::is_zero)
    }

    /// Index of the first nonzero entry.
    pub fn leading_index(&self) -> Option<usize> {
        self.entries.iter().position(|x| !x.is_zero())
    }

    /// self += c * other
    pub fn add_scaled(&mut self, other: &Vector, c: &Scalar) {
        debug_assert_eq!(self.dim(), other.dim());
        let f = self.field;
        for (a, b) in self.entries.iter_mut().zip(&other.entries) {
            *a = f.add(a, &f.mul(c, b));
        }
    }

    pub fn scale(&mut self, c: &Scalar) {
        let f = self.field;
        for a in self.entries.iter_mut() {
            *a = f.mul(a, c);
        }
    }

    fn check_compatible(&self, field: FieldDesc, dim: usize) -> Result<()> {
        if self.field != field {
            return Err(Error::FieldMismatch);
        }
        if self.dim() != dim {
            return Err(Error::DimensionMismatch {
                expected: dim,
                got: self.dim(),
            });
        }
        Ok(())
    }
}

impl std::fmt::Display for Vector {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

/// A linear subspace in canonical form: the rows form a reduced
/// row-echelon basis with pivots normalized to 1 and pivot columns
/// strictly increasing. Equality of spans is equality of the data.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subspace {
    field: FieldDesc,
    ambient_dim: usize,
    rows: Vec<Vector>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(field: FieldDesc, ambient_dim: usize) -> Self {
        Subspace {
            field,
            ambient_dim,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn full(field: FieldDesc, ambient_dim: usize) -> Self {
        let rows = (0..ambient_dim)
            .map(|i| Vector::basis(field, ambient_dim, i))
            .collect();
        Subspace {
            field,
            ambient_dim,
            rows,
            pivots: (0..ambient_dim).collect(),
        }
    }

    /// Canonical basis of the span of the given vectors.
    pub fn span(field: FieldDesc, ambient_dim: usize, vectors: &[Vector]) -> Result<Self> {
        let mut space = Subspace::zero(field, ambient_dim);
        for v in vectors {
            v.check_compatible(field, ambient_dim)?;
            space.insert(v);
        }
        Ok(space)
    }

    pub fn field(&self) -> FieldDesc {
        self.field
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vector] {
        &self.rows
    }

    pub fn is_full(&self) -> bool {
        self.rank() == self.ambient_dim
    }

    /// Reduce `v` against the basis rows; the remainder is zero exactly
    /// when `v` lies in the subspace.
    fn reduce(&self, v: &Vector) -> Vector {
        let f = self.field;
        let mut v = v.clone();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            let c = v.get(p).clone();
            if !c.is_zero() {
                v.add_scaled(row, &f.neg(&c));
            }
        }
        v
    }

    /// Insert one vector, keeping the basis in canonical form.
    /// Returns true when the rank grew.
    pub(crate) fn insert(&mut self, v: &Vector) -> bool {
        let f = self.field;
        let mut v = self.reduce(v);
        let Some(p) = v.leading_index() else {
            return false;
        };
        let lead = v.get(p).clone();
        v.scale(&f.inv(&lead));
        // eliminate the new pivot column from the existing rows
        for row in self.rows.iter_mut() {
            let c = row.get(p).clone();
            if !c.is_zero() {
                row.add_scaled(&v, &f.neg(&c));
            }
        }
        let at = self.pivots.partition_point(|&q| q < p);
        self.pivots.insert(at, p);
        self.rows.insert(at, v);
        true
    }

    pub fn contains(&self, v: &Vector) -> Result<bool> {
        v.check_compatible(self.field, self.ambient_dim)?;
        Ok(self.reduce(v).is_zero())
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> Result<bool> {
        for row in &self.rows {
            if !other.contains(row)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Span of the union of the two subspaces.
    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        if self.field != other.field {
            return Err(Error::FieldMismatch);
        }
        if self.ambient_dim != other.ambient_dim {
            return Err(Error::DimensionMismatch {
                expected: self.ambient_dim,
                got: other.ambient_dim,
            });
        }
        let mut out = self.clone();
        for row in &other.rows {
            out.insert(row);
        }
        Ok(out)
    }
}

/// Span of all products u*v with u, v running over bases of U and V.
/// By bilinearity this equals the span of all products of elements.
pub fn bilinear_image<M>(u: &Subspace, v: &Subspace, mul: M) -> Result<Subspace>
where
    M: Fn(&Vector, &Vector) -> Vector,
{
    if u.field() != v.field() {
        return Err(Error::FieldMismatch);
    }
    if u.ambient_dim() != v.ambient_dim() {
        return Err(Error::DimensionMismatch {
            expected: u.ambient_dim(),
            got: v.ambient_dim(),
        });
    }
    let mut out = Subspace::zero(u.field(), u.ambient_dim());
    for a in u.rows() {
        for b in v.rows() {
            out.insert(&mul(a, b));
        }
    }
    Ok(out)
}

/// Streams every subspace of F^n containing `v`, each exactly once.
///
/// Subspaces containing v correspond to subspaces of the quotient
/// F^n / <v>; those are enumerated as reduced row-echelon matrices by
/// dimension, then pivot-column choice, then free entries, and lifted
/// back. Finite fields only.
pub fn subspaces_containing(
    field: FieldDesc,
    ambient_dim: usize,
    v: &Vector,
) -> Result<impl Iterator<Item = Subspace>> {
    if !field.is_prime_field() {
        return Err(Error::PrimeFieldRequired);
    }
    v.check_compatible(field, ambient_dim)?;
    if v.is_zero() {
        return Err(Error::ZeroVector);
    }

    let mut v = v.clone();
    let pivot = v.leading_index().expect("nonzero vector has a pivot");
    let lead = v.get(pivot).clone();
    v.scale(&field.inv(&lead));

    // coordinates of the quotient: every position except `pivot`
    let coords: Vec<usize> = (0..ambient_dim).filter(|&i| i != pivot).collect();
    let quotient_dim = ambient_dim - 1;

    let lift = move |rows: Vec<Vec<Scalar>>| -> Subspace {
        let mut vectors = vec![v.clone()];
        for row in &rows {
            let mut w = Vector::zero(field, ambient_dim);
            for (j, &c) in coords.iter().enumerate() {
                w.entries[c] = row[j].clone();
            }
            vectors.push(w);
        }
        Subspace::span(field, ambient_dim, &vectors).expect("lifted rows share the ambient space")
    };

    Ok(RrefEnumerator::new(field, quotient_dim).map(lift))
}

/// Enumerates all reduced row-echelon matrices over GF(p) with `dim`
/// columns: rank ascending, pivot columns in lexicographic order, free
/// entries counting up in base p.
struct RrefEnumerator {
    field: FieldDesc,
    dim: usize,
    rank: usize,
    pivot_cols: Vec<usize>,
    free_values: Vec<u8>,
    done: bool,
}

impl RrefEnumerator {
    fn new(field: FieldDesc, dim: usize) -> Self {
        RrefEnumerator {
            field,
            dim,
            rank: 0,
            pivot_cols: Vec::new(),
            free_values: Vec::new(),
            done: false,
        }
    }

    /// Positions (row, col) of the free entries for the current pivot set:
    /// to the right of the row's pivot and not a pivot column.
    fn free_positions(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (r, &p) in self.pivot_cols.iter().enumerate() {
            for c in p + 1..self.dim {
                if !self.pivot_cols.contains(&c) {
                    out.push((r, c));
                }
            }
        }
        out
    }

    fn current_rows(&self) -> Vec<Vec<Scalar>> {
        let positions = self.free_positions();
        let mut rows = vec![vec![self.field.zero(); self.dim]; self.rank];
        for (r, &p) in self.pivot_cols.iter().enumerate() {
            rows[r][p] = self.field.one();
        }
        for (&(r, c), &val) in positions.iter().zip(&self.free_values) {
            rows[r][c] = Scalar::Prime(val);
        }
        rows
    }

    /// Advance the free-entry counter; false when it wraps around.
    fn bump_free(&mut self) -> bool {
        let p = self.field.modulus().expect("prime field") as u8;
        for slot in self.free_values.iter_mut().rev() {
            if *slot + 1 < p {
                *slot += 1;
                return true;
            }
            *slot = 0;
        }
        false
    }

    /// Next pivot-column combination of the current rank, in
    /// lexicographic order; false when exhausted.
    fn bump_pivots(&mut self) -> bool {
        let k = self.pivot_cols.len();
        let n = self.dim;
        let mut i = k;
        loop {
            if i == 0 {
                return false;
            }
            i -= 1;
            if self.pivot_cols[i] < n - (k - i) {
                self.pivot_cols[i] += 1;
                for j in i + 1..k {
                    self.pivot_cols[j] = self.pivot_cols[j - 1] + 1;
                }
                return true;
            }
        }
    }

    fn start_rank(&mut self, rank: usize) {
        self.rank = rank;
        self.pivot_cols = (0..rank).collect();
        self.free_values = vec![0; self.free_positions().len()];
    }
}

impl Iterator for RrefEnumerator {
    type Item = Vec<Vec<Scalar>>;

    fn next(&mut self) -> Option<Self::Item> {
        if self.done {
            return None;
        }
        let item = self.current_rows();
        // advance: free entries, then pivot columns, then rank
        if !self.bump_free() {
            if self.bump_pivots() {
                self.free_values = vec![0; self.free_positions().len()];
            } else if self.rank < self.dim {
                let r = self.rank + 1;
                self.start_rank(r);
            } else {
                self.done = true;
            }
        }
        Some(item)
    }
}

/// Coordinates of `v` in the given (independent) basis, or `None` when
/// `v` lies outside the span or the basis is dependent.
pub fn coordinates_in_basis(basis: &[Vector], v: &Vector) -> Option<Vec<Scalar>> {
    let field = v.field();
    let dim = v.dim();
    // eliminate on rows (basis_i | e_i) so the right block tracks the
    // combination that produced each reduced row
    let mut left: Vec<Vector> = basis.to_vec();
    let mut right: Vec<Vector> = (0..basis.len())
        .map(|i| Vector::basis(field, basis.len(), i))
        .collect();
    let mut pivots: Vec<(usize, usize)> = Vec::new(); // (row, col)
    for i in 0..left.len() {
        if left[i].dim() != dim || left[i].field() != field {
            return None;
        }
        for &(r, c) in &pivots {
            let coef = left[i].get(c).clone();
            if !coef.is_zero() {
                let (lr, rr) = (left[r].clone(), right[r].clone());
                left[i].add_scaled(&lr, &field.neg(&coef));
                right[i].add_scaled(&rr, &field.neg(&coef));
            }
        }
        let p = left[i].leading_index()?; // dependent basis
        let inv = field.inv(left[i].get(p));
        left[i].scale(&inv);
        right[i].scale(&inv);
        pivots.push((i, p));
    }
    let mut rem = v.clone();
    let mut coords = vec![field.zero(); basis.len()];
    for &(r, c) in &pivots {
        let coef = rem.get(c).clone();
        if !coef.is_zero() {
            rem.add_scaled(&left[r], &field.neg(&coef));
            for (slot, x) in coords.iter_mut().zip(right[r].entries()) {
                *slot = field.add(slot, &field.mul(&coef, x));
            }
        }
    }
    if rem.is_zero() {
        Some(coords)
    } else {
        None
    }
}
