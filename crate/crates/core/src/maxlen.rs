//! Long bases and algebras of maximal length.
//!
//! A basis 1 = e_0, e_1, ..., e_{n-1} is long when e_i^2 = e_{i+1} for
//! i = 1, ..., n-2. An algebra of dimension n > 2 has the maximal
//! possible length 2^(n-2) exactly when it has a long basis whose cross
//! products satisfy e_p e_q in <e_0, ..., e_max(p,q)> for p != q. That
//! criterion replaces the exponential subspace sweep with a scan over
//! candidate vectors for e_1.

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::field::{FieldDesc, Scalar};
use crate::linalg::{coordinates_in_basis, Subspace, Vector};

/// A verified long basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LongBasis {
    vectors: Vec<Vector>,
}

impl LongBasis {
    pub fn vectors(&self) -> &[Vector] {
        &self.vectors
    }
}

/// Where a candidate chain failed the long-basis conditions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LongBasisViolation {
    /// The unit plus the squaring chain is linearly dependent.
    DependentChain,
    /// e_p e_q leaves <e_0, ..., e_max(p,q)> for this (p, q).
    CrossContainment(usize, usize),
    /// The proposed e_0 is not the unit, or squares do not chain.
    Shape(String),
}

impl std::fmt::Display for LongBasisViolation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            LongBasisViolation::DependentChain => write!(f, "squaring chain is dependent"),
            LongBasisViolation::CrossContainment(p, q) => {
                write!(f, "e_{p} e_{q} leaves the span of e_0..e_{}", p.max(q))
            }
            LongBasisViolation::Shape(msg) => write!(f, "{msg}"),
        }
    }
}

/// The maximal-length example: e_i^2 = e_{i+1} for i = 1, ..., n-2,
/// every other product of non-unit basis elements zero. Its length is
/// 2^(n-2).
pub fn long_basis_algebra(field: FieldDesc, n: usize) -> Result<Algebra> {
    if n < 3 {
        return Err(Error::ParamOutOfRange(format!(
            "long-basis algebra needs dimension >= 3, got {n}"
        )));
    }
    let mut table = vec![vec![Vector::zero(field, n); n]; n];
    for i in 0..n {
        table[0][i] = Vector::basis(field, n, i);
        table[i][0] = Vector::basis(field, n, i);
    }
    for i in 1..n - 1 {
        table[i][i] = Vector::basis(field, n, i + 1);
    }
    Algebra::new(field, n, 0, table)
}

/// Builds and checks the squaring chain for a candidate e_1: returns
/// the long basis or the first violated condition.
pub fn check_candidate(algebra: &Algebra, e1: &Vector) -> Result<LongBasis> {
    let n = algebra.dim();
    if n < 3 {
        return Err(Error::ParamOutOfRange(format!(
            "long bases need dimension >= 3, got {n}"
        )));
    }
    let mut vectors = vec![algebra.unit_vector(), e1.clone()];
    while vectors.len() < n {
        let last = vectors.last().expect("nonempty");
        vectors.push(algebra.multiply(last, last)?);
    }
    verify_long_basis(algebra, vectors)
        .map_err(|v| Error::NotLongBasis(v.to_string()))
}

/// Verifies the long-basis conditions for explicitly given vectors:
/// e_0 is the unit, squares chain, the family is independent, and all
/// cross products stay inside the prefix spans.
pub fn verify_long_basis(
    algebra: &Algebra,
    vectors: Vec<Vector>,
) -> std::result::Result<LongBasis, LongBasisViolation> {
    let n = algebra.dim();
    if vectors.len() != n {
        return Err(LongBasisViolation::Shape(format!(
            "{} vectors for dimension {n}",
            vectors.len()
        )));
    }
    if vectors[0] != algebra.unit_vector() {
        return Err(LongBasisViolation::Shape("e_0 is not the unit".into()));
    }
    for i in 1..n - 1 {
        let square = algebra
            .multiply(&vectors[i], &vectors[i])
            .map_err(|e| LongBasisViolation::Shape(e.to_string()))?;
        if square != vectors[i + 1] {
            return Err(LongBasisViolation::Shape(format!(
                "e_{i}^2 is not e_{}",
                i + 1
            )));
        }
    }
    let full = Subspace::span(algebra.field(), n, &vectors)
        .map_err(|e| LongBasisViolation::Shape(e.to_string()))?;
    if !full.is_full() {
        return Err(LongBasisViolation::DependentChain);
    }
    // prefix spans <e_0, ..., e_r>
    let mut prefixes = Vec::with_capacity(n);
    let mut acc = Subspace::zero(algebra.field(), n);
    for v in &vectors {
        acc.insert(v);
        prefixes.push(acc.clone());
    }
    for p in 1..n {
        for q in 1..n {
            if p == q {
                continue;
            }
            let prod = algebra
                .multiply(&vectors[p], &vectors[q])
                .expect("basis vectors share the space");
            let bound = p.max(q);
            if !prefixes[bound]
                .contains(&prod)
                .expect("prefix spans share the space")
            {
                return Err(LongBasisViolation::CrossContainment(p, q));
            }
        }
    }
    Ok(LongBasis { vectors })
}

/// Scans every vector of the space as a candidate e_1 (lexicographic
/// coordinate order) and returns the first long basis found.
/// Finite fields only.
pub fn find_long_basis(algebra: &Algebra) -> Result<Option<LongBasis>> {
    let p = algebra
        .field()
        .modulus()
        .ok_or(Error::PrimeFieldRequired)? as i64;
    let n = algebra.dim();
    if n < 3 {
        return Err(Error::ParamOutOfRange(format!(
            "long bases need dimension >= 3, got {n}"
        )));
    }
    let mut digits = vec![0i64; n];
    loop {
        // advance the base-p counter; last coordinate fastest keeps the
        // scan in lexicographic order on coordinate tuples
        let mut i = n;
        loop {
            if i == 0 {
                return Ok(None);
            }
            i -= 1;
            digits[i] += 1;
            if digits[i] < p {
                break;
            }
            digits[i] = 0;
        }
        let candidate = Vector::from_ints(algebra.field(), &digits);
        if let Ok(basis) = check_candidate(algebra, &candidate) {
            return Ok(Some(basis));
        }
    }
}

/// The efficient maximal-length test: an algebra of dimension n > 2 has
/// length 2^(n-2) exactly when a long basis exists.
pub fn is_max_length(algebra: &Algebra) -> Result<bool> {
    Ok(find_long_basis(algebra)?.is_some())
}

/// Structure constants of the algebra relative to a long basis: the
/// generators-and-relations data x_i^2 = x_{i+1},
/// x_p x_q = sum_j f[j](p,q) x_j (j <= max(p,q)) and
/// x_{n-1}^2 = sum_i f[i] x_i.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Presentation {
    field: FieldDesc,
    n: usize,
    /// (p, q) -> coefficients f^(0..=max(p,q)), for p != q.
    cross_coeffs: std::collections::BTreeMap<(usize, usize), Vec<Scalar>>,
    /// Coefficients of e_{n-1}^2 in the long basis.
    top_coeffs: Vec<Scalar>,
}

impl Presentation {
    pub fn field(&self) -> FieldDesc {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn cross_coeffs(&self) -> &std::collections::BTreeMap<(usize, usize), Vec<Scalar>> {
        &self.cross_coeffs
    }

    pub fn top_coeffs(&self) -> &[Scalar] {
        &self.top_coeffs
    }

    /// The algebra defined by the relations, in the basis x_0, ..., x_{n-1}.
    pub fn rebuild(&self) -> Result<Algebra> {
        let field = self.field;
        let n = self.n;
        let mut table = vec![vec![Vector::zero(field, n); n]; n];
        for i in 0..n {
            table[0][i] = Vector::basis(field, n, i);
            table[i][0] = Vector::basis(field, n, i);
        }
        for i in 1..n - 1 {
            table[i][i] = Vector::basis(field, n, i + 1);
        }
        for (&(p, q), coeffs) in &self.cross_coeffs {
            let mut entries = coeffs.clone();
            entries.resize(n, field.zero());
            table[p][q] = Vector::new(field, entries);
        }
        table[n - 1][n - 1] = Vector::new(field, self.top_coeffs.clone());
        Algebra::new(field, n, 0, table)
    }
}

/// Expands every product in the long basis to extract the presentation
/// coefficients. The basis is re-verified first.
pub fn presentation(algebra: &Algebra, basis: &LongBasis) -> Result<Presentation> {
    let basis = verify_long_basis(algebra, basis.vectors.clone())
        .map_err(|v| Error::NotLongBasis(v.to_string()))?;
    let n = algebra.dim();
    let field = algebra.field();
    let coords = |v: &Vector| -> Result<Vec<Scalar>> {
        coordinates_in_basis(&basis.vectors, v)
            .ok_or_else(|| Error::Internal("long basis lost independence".into()))
    };
    let mut cross_coeffs = std::collections::BTreeMap::new();
    for p in 1..n {
        for q in 1..n {
            if p == q {
                continue;
            }
            let prod = algebra.multiply(&basis.vectors[p], &basis.vectors[q])?;
            let mut cs = coords(&prod)?;
            debug_assert!(cs[p.max(q) + 1..].iter().all(Scalar::is_zero));
            cs.truncate(p.max(q) + 1);
            cross_coeffs.insert((p, q), cs);
        }
    }
    let top = algebra.multiply(&basis.vectors[n - 1], &basis.vectors[n - 1])?;
    let top_coeffs = coords(&top)?;
    Ok(Presentation {
        field,
        n,
        cross_coeffs,
        top_coeffs,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{assoc_family, zero_mult};
    use crate::length::{algebra_length, char_seq, set_length};

    fn gf2() -> FieldDesc {
        FieldDesc::gf(2).unwrap()
    }

    #[test]
    fn long_basis_algebra_lengths() {
        let f = gf2();
        assert_eq!(algebra_length(&long_basis_algebra(f, 3).unwrap()).unwrap(), 2);
        assert_eq!(algebra_length(&long_basis_algebra(f, 4).unwrap()).unwrap(), 4);
        let a5 = long_basis_algebra(f, 5).unwrap();
        assert_eq!(set_length(&a5, &[a5.basis_vector(1)]).unwrap(), 8);
        assert!(long_basis_algebra(f, 2).is_err());
    }

    #[test]
    fn long_basis_algebra_is_not_associative() {
        let a = long_basis_algebra(gf2(), 4).unwrap();
        assert!(a.is_unital());
        assert!(!a.is_associative());
        // the witnessing associator: (e_2 e_1) e_1 = 0 but e_2 (e_1 e_1) = e_3
        let e1 = a.basis_vector(1);
        let e2 = a.basis_vector(2);
        let left = a
            .multiply(&a.multiply(&e2, &e1).unwrap(), &e1)
            .unwrap();
        let right = a
            .multiply(&e2, &a.multiply(&e1, &e1).unwrap())
            .unwrap();
        assert!(left.is_zero());
        assert_eq!(right, a.basis_vector(3));
    }

    #[test]
    fn find_long_basis_on_the_families() {
        let f = gf2();
        let found = find_long_basis(&long_basis_algebra(f, 4).unwrap()).unwrap();
        assert!(found.is_some());
        assert!(find_long_basis(&zero_mult(f, 4).unwrap()).unwrap().is_none());
        assert!(find_long_basis(&assoc_family(f, 4, 3).unwrap())
            .unwrap()
            .is_none());
    }

    #[test]
    fn found_basis_yields_the_doubling_char_seq() {
        let f = gf2();
        for n in [4, 5] {
            let a = long_basis_algebra(f, n).unwrap();
            let basis = find_long_basis(&a).unwrap().unwrap();
            let e1 = basis.vectors()[1].clone();
            let seq = char_seq(&a, &[e1]).unwrap();
            let expected: Vec<u64> = std::iter::once(0)
                .chain((0..n - 1).map(|h| 1u64 << h))
                .collect();
            assert_eq!(seq.values(), &expected[..]);
        }
    }

    #[test]
    fn is_max_length_examples() {
        let f = gf2();
        assert!(is_max_length(&long_basis_algebra(f, 5).unwrap()).unwrap());
        assert!(!is_max_length(&assoc_family(f, 5, 4).unwrap()).unwrap());
        assert!(!is_max_length(&zero_mult(f, 3).unwrap()).unwrap());
        let q = FieldDesc::rational();
        assert!(matches!(
            is_max_length(&zero_mult(q, 3).unwrap()),
            Err(Error::PrimeFieldRequired)
        ));
    }

    #[test]
    fn verify_long_basis_works_over_the_rationals() {
        let q = FieldDesc::rational();
        let a = long_basis_algebra(q, 4).unwrap();
        let vectors: Vec<Vector> = (0..4).map(|i| a.basis_vector(i)).collect();
        assert!(verify_long_basis(&a, vectors).is_ok());
        // a broken chain is refused
        let bad: Vec<Vector> = vec![
            a.basis_vector(0),
            a.basis_vector(1),
            a.basis_vector(3),
            a.basis_vector(2),
        ];
        assert!(verify_long_basis(&a, bad).is_err());
    }

    #[test]
    fn perturbed_cross_product_is_located() {
        // give e_1 e_2 a component on e_3 = e_(max+1): the defining
        // candidate now fails the containment check exactly at (1, 2)
        let f = gf2();
        let a = long_basis_algebra(f, 4).unwrap();
        let n = 4;
        let mut table: Vec<Vec<Vector>> = (0..n)
            .map(|i| (0..n).map(|j| a.table_entry(i, j).clone()).collect())
            .collect();
        table[1][2] = Vector::basis(f, n, 3);
        let perturbed = Algebra::new(f, n, 0, table).unwrap();
        let verdict = verify_long_basis(
            &perturbed,
            (0..n).map(|i| perturbed.basis_vector(i)).collect(),
        );
        assert_eq!(verdict, Err(LongBasisViolation::CrossContainment(1, 2)));
    }

    #[test]
    fn presentation_of_the_plain_family_is_zero() {
        let f = gf2();
        let a = long_basis_algebra(f, 4).unwrap();
        let basis = find_long_basis(&a).unwrap().unwrap();
        let pres = presentation(&a, &basis).unwrap();
        assert!(pres.top_coeffs().iter().all(Scalar::is_zero));
        for coeffs in pres.cross_coeffs().values() {
            assert!(coeffs.iter().all(Scalar::is_zero));
        }
        assert_eq!(pres.rebuild().unwrap(), a);
    }

    #[test]
    fn presentation_extracts_added_cross_terms() {
        // e_2 e_1 = e_1 keeps the long-basis conditions and shows up as
        // the single coefficient f^(1)(2,1) = 1
        let f = gf2();
        let n = 4;
        let base = long_basis_algebra(f, n).unwrap();
        let mut table: Vec<Vec<Vector>> = (0..n)
            .map(|i| (0..n).map(|j| base.table_entry(i, j).clone()).collect())
            .collect();
        table[2][1] = Vector::basis(f, n, 1);
        let a = Algebra::new(f, n, 0, table).unwrap();
        assert_eq!(algebra_length(&a).unwrap(), 4);
        assert!(is_max_length(&a).unwrap());

        let basis = verify_long_basis(&a, (0..n).map(|i| a.basis_vector(i)).collect()).unwrap();
        let pres = presentation(&a, &basis).unwrap();
        for (&(p, q), coeffs) in pres.cross_coeffs() {
            for (j, c) in coeffs.iter().enumerate() {
                if (p, q, j) == (2, 1, 1) {
                    assert_eq!(c, &f.one());
                } else {
                    assert!(c.is_zero(), "({p}, {q}) coefficient {j}");
                }
            }
        }
        assert_eq!(pres.rebuild().unwrap(), a);
    }

    #[test]
    fn presentation_round_trip_through_a_nontrivial_basis() {
        // find_long_basis may land on a basis other than the defining
        // one; rebuilding from the presentation must reproduce the
        // algebra expressed in that basis
        let f = gf2();
        let n = 4;
        let base = long_basis_algebra(f, n).unwrap();
        let mut table: Vec<Vec<Vector>> = (0..n)
            .map(|i| (0..n).map(|j| base.table_entry(i, j).clone()).collect())
            .collect();
        table[2][1] = Vector::basis(f, n, 1);
        table[3][3] = Vector::basis(f, n, 1);
        let a = Algebra::new(f, n, 0, table).unwrap();
        let basis = find_long_basis(&a).unwrap().expect("still maximal");
        let pres = presentation(&a, &basis).unwrap();
        let rebuilt = pres.rebuild().unwrap();
        let conjugated = a.change_basis(basis.vectors()).unwrap();
        assert_eq!(rebuilt, conjugated);
    }
}
