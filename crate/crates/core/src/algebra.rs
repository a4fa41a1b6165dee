//! Structure-constant representation of finite-dimensional unital
//! algebras, together with the named example families.
//!
//! An algebra is a dense table c[i][j] giving the product of the basis
//! elements e_i * e_j as a coordinate vector. Multiplication of general
//! elements is the bilinear extension of the table. The unit is always
//! a basis element (index `unit_index`, 0 by default).

use rand::Rng;

use crate::error::{Error, Result};
use crate::field::FieldDesc;
use crate::linalg::{coordinates_in_basis, Vector};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Algebra {
    field: FieldDesc,
    dim: usize,
    unit_index: usize,
    table: Vec<Vec<Vector>>,
}

impl Algebra {
    /// Builds an algebra from its multiplication table. Shape is
    /// validated here; use [`Algebra::is_unital`] to check the unit axiom.
    pub fn new(
        field: FieldDesc,
        dim: usize,
        unit_index: usize,
        table: Vec<Vec<Vector>>,
    ) -> Result<Self> {
        if dim == 0 {
            return Err(Error::ParamOutOfRange("dimension must be positive".into()));
        }
        if unit_index >= dim {
            return Err(Error::ParamOutOfRange(format!(
                "unit index {unit_index} out of range for dimension {dim}"
            )));
        }
        if table.len() != dim {
            return Err(Error::DimensionMismatch {
                expected: dim,
                got: table.len(),
            });
        }
        for row in &table {
            if row.len() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    got: row.len(),
                });
            }
            for entry in row {
                if entry.field() != field {
                    return Err(Error::FieldMismatch);
                }
                if entry.dim() != dim {
                    return Err(Error::DimensionMismatch {
                        expected: dim,
                        got: entry.dim(),
                    });
                }
            }
        }
        Ok(Algebra {
            field,
            dim,
            unit_index,
            table,
        })
    }

    pub fn field(&self) -> FieldDesc {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn unit_index(&self) -> usize {
        self.unit_index
    }

    /// The unit as a coordinate vector.
    pub fn unit_vector(&self) -> Vector {
        Vector::basis(self.field, self.dim, self.unit_index)
    }

    /// Product of two basis elements, straight from the table.
    pub fn table_entry(&self, i: usize, j: usize) -> &Vector {
        &self.table[i][j]
    }

    pub fn basis_vector(&self, i: usize) -> Vector {
        Vector::basis(self.field, self.dim, i)
    }

    /// Bilinear extension of the table to arbitrary elements.
    pub fn multiply(&self, x: &Vector, y: &Vector) -> Result<Vector> {
        for v in [x, y] {
            if v.field() != self.field {
                return Err(Error::FieldMismatch);
            }
            if v.dim() != self.dim {
                return Err(Error::DimensionMismatch {
                    expected: self.dim,
                    got: v.dim(),
                });
            }
        }
        let f = self.field;
        let mut acc = Vector::zero(f, self.dim);
        for (i, xi) in x.entries().iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.entries().iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                acc.add_scaled(&self.table[i][j], &f.mul(xi, yj));
            }
        }
        Ok(acc)
    }

    /// Checks e_u * e_i = e_i * e_u = e_i on every basis element.
    pub fn is_unital(&self) -> bool {
        let u = self.unit_index;
        (0..self.dim).all(|i| {
            let ei = self.basis_vector(i);
            self.table[u][i] == ei && self.table[i][u] == ei
        })
    }

    /// Checks (e_i e_j) e_k = e_i (e_j e_k) on every basis triple.
    pub fn is_associative(&self) -> bool {
        for i in 0..self.dim {
            for j in 0..self.dim {
                let ij = &self.table[i][j];
                for k in 0..self.dim {
                    let ek = self.basis_vector(k);
                    let left = self.multiply(ij, &ek).expect("table entries share the space");
                    let right = self
                        .multiply(&self.basis_vector(i), &self.table[j][k])
                        .expect("table entries share the space");
                    if left != right {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Restates the algebra in a new basis. The basis must be
    /// independent and its first vector must be the unit; the result
    /// has `unit_index` 0.
    pub fn change_basis(&self, basis: &[Vector]) -> Result<Algebra> {
        if basis.len() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                got: basis.len(),
            });
        }
        if basis[0] != self.unit_vector() {
            return Err(Error::ParamOutOfRange(
                "first basis vector must be the unit".into(),
            ));
        }
        let mut table = Vec::with_capacity(self.dim);
        for bi in basis {
            let mut row = Vec::with_capacity(self.dim);
            for bj in basis {
                let prod = self.multiply(bi, bj)?;
                let coords = coordinates_in_basis(basis, &prod)
                    .ok_or_else(|| Error::ParamOutOfRange("basis is not independent".into()))?;
                row.push(Vector::new(self.field, coords));
            }
            table.push(row);
        }
        Algebra::new(self.field, self.dim, 0, table)
    }
}

/// Fills in the unit row and column of a table whose non-unit products
/// are already set.
fn with_unit_products(
    field: FieldDesc,
    dim: usize,
    unit_index: usize,
    mut table: Vec<Vec<Vector>>,
) -> Vec<Vec<Vector>> {
    for i in 0..dim {
        table[unit_index][i] = Vector::basis(field, dim, i);
        table[i][unit_index] = Vector::basis(field, dim, i);
    }
    table
}

/// The associative family: basis 1 = e_0, e_1, ..., e_{n-1} with
/// e_p e_q = e_{p+q} when p, q >= 1 and p + q <= l, and 0 otherwise.
/// Its length is exactly `l`.
pub fn assoc_family(field: FieldDesc, n: usize, l: usize) -> Result<Algebra> {
    if n < 2 {
        return Err(Error::ParamOutOfRange(format!(
            "assoc family needs dimension >= 2, got {n}"
        )));
    }
    if l < 1 || l > n - 1 {
        return Err(Error::ParamOutOfRange(format!(
            "assoc family parameter l = {l} outside 1..={}",
            n - 1
        )));
    }
    let mut table = vec![vec![Vector::zero(field, n); n]; n];
    for p in 1..n {
        for q in 1..n {
            if p + q <= l {
                table[p][q] = Vector::basis(field, n, p + q);
            }
        }
    }
    Algebra::new(field, n, 0, with_unit_products(field, n, 0, table))
}

/// The zero-multiplication algebra: every product of non-unit basis
/// elements vanishes. Its length is 1.
pub fn zero_mult(field: FieldDesc, n: usize) -> Result<Algebra> {
    if n < 2 {
        return Err(Error::ParamOutOfRange(format!(
            "zero-multiplication algebra needs dimension >= 2, got {n}"
        )));
    }
    let table = vec![vec![Vector::zero(field, n); n]; n];
    Algebra::new(field, n, 0, with_unit_products(field, n, 0, table))
}

/// A random unital algebra: uniformly random products of non-unit basis
/// elements, with the unit row and column forced.
pub fn random_unital<R: Rng + ?Sized>(
    field: FieldDesc,
    n: usize,
    rng: &mut R,
) -> Result<Algebra> {
    if n < 2 {
        return Err(Error::ParamOutOfRange(format!(
            "random algebra needs dimension >= 2, got {n}"
        )));
    }
    let p = field.modulus().ok_or(Error::PrimeFieldRequired)? as i64;
    let mut table = vec![vec![Vector::zero(field, n); n]; n];
    for i in 1..n {
        for j in 1..n {
            let entries: Vec<i64> = (0..n).map(|_| rng.random_range(0..p)).collect();
            table[i][j] = Vector::from_ints(field, &entries);
        }
    }
    Algebra::new(field, n, 0, with_unit_products(field, n, 0, table))
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::rngs::StdRng;
    use rand::SeedableRng;

    fn gf2() -> FieldDesc {
        FieldDesc::gf(2).unwrap()
    }

    #[test]
    fn unit_axiom_via_multiply() {
        let a = assoc_family(gf2(), 5, 3).unwrap();
        let unit = a.unit_vector();
        let y = Vector::from_ints(gf2(), &[1, 0, 1, 1, 0]);
        assert_eq!(a.multiply(&unit, &y).unwrap(), y);
        assert_eq!(a.multiply(&y, &unit).unwrap(), y);
    }

    #[test]
    fn assoc_family_table_entries() {
        let f = gf2();
        let a = assoc_family(f, 6, 3).unwrap();
        // e_1 e_2 = e_3, e_2 e_3 = 0
        assert_eq!(*a.table_entry(1, 2), Vector::basis(f, 6, 3));
        assert_eq!(*a.table_entry(2, 3), Vector::zero(f, 6));

        let a43 = assoc_family(f, 4, 3).unwrap();
        assert_eq!(*a43.table_entry(1, 1), Vector::basis(f, 4, 2));
        assert_eq!(*a43.table_entry(1, 2), Vector::basis(f, 4, 3));
        assert_eq!(*a43.table_entry(2, 2), Vector::zero(f, 4));

        // l = 1 forces e_1 e_1 = 0 and degenerates to zero multiplication
        let a21 = assoc_family(f, 2, 1).unwrap();
        assert_eq!(*a21.table_entry(1, 1), Vector::zero(f, 2));
        assert_eq!(assoc_family(f, 5, 1).unwrap(), zero_mult(f, 5).unwrap());
    }

    #[test]
    fn assoc_family_parameter_range() {
        let f = gf2();
        assert!(assoc_family(f, 4, 0).is_err());
        assert!(assoc_family(f, 4, 4).is_err());
        assert!(assoc_family(f, 1, 1).is_err());
    }

    #[test]
    fn families_are_unital_and_associativity_is_detected() {
        let f = gf2();
        for n in 2..=7 {
            for l in 1..n {
                let a = assoc_family(f, n, l).unwrap();
                assert!(a.is_unital());
                assert!(a.is_associative(), "assoc family n={n} l={l}");
            }
        }
        let z = zero_mult(f, 5).unwrap();
        assert!(z.is_unital());
        assert!(z.is_associative());
    }

    #[test]
    fn zero_mult_products_stay_in_span_of_factors_and_unit() {
        let f = FieldDesc::gf(3).unwrap();
        let a = zero_mult(f, 5).unwrap();
        let mut rng = StdRng::seed_from_u64(7);
        for _ in 0..50 {
            let u = Vector::from_ints(f, &(0..5).map(|_| rng.random_range(0..3)).collect::<Vec<_>>());
            let v = Vector::from_ints(f, &(0..5).map(|_| rng.random_range(0..3)).collect::<Vec<_>>());
            let uv = a.multiply(&u, &v).unwrap();
            let span = crate::linalg::Subspace::span(
                f,
                5,
                &[a.unit_vector(), u.clone(), v.clone()],
            )
            .unwrap();
            assert!(span.contains(&uv).unwrap());
        }
    }

    #[test]
    fn change_basis_preserves_products() {
        let f = FieldDesc::gf(5).unwrap();
        let a = assoc_family(f, 4, 2).unwrap();
        let basis = vec![
            a.unit_vector(),
            Vector::from_ints(f, &[0, 1, 1, 0]),
            Vector::from_ints(f, &[0, 0, 2, 1]),
            Vector::from_ints(f, &[0, 0, 0, 3]),
        ];
        let b = a.change_basis(&basis).unwrap();
        assert!(b.is_unital());
        // spot-check: product of new basis vectors agrees after mapping back
        let prod_old = a.multiply(&basis[1], &basis[2]).unwrap();
        let coords = coordinates_in_basis(&basis, &prod_old).unwrap();
        assert_eq!(b.table_entry(1, 2), &Vector::new(f, coords));
    }

    #[test]
    fn random_algebras_are_unital() {
        let mut rng = StdRng::seed_from_u64(42);
        for _ in 0..20 {
            let a = random_unital(gf2(), 4, &mut rng).unwrap();
            assert!(a.is_unital());
        }
    }

    mod properties {
        use super::*;
        use proptest::prelude::*;

        fn vec5() -> impl Strategy<Value = Vec<i64>> {
            proptest::collection::vec(0i64..5, 4)
        }

        proptest! {
            #[test]
            fn multiply_is_bilinear(x in vec5(), y in vec5(), z in vec5(), c in 0i64..5) {
                let f = FieldDesc::gf(5).unwrap();
                let a = assoc_family(f, 4, 3).unwrap();
                let x = Vector::from_ints(f, &x);
                let y = Vector::from_ints(f, &y);
                let z = Vector::from_ints(f, &z);
                let c = f.from_i64(c);

                // (x + c z) y = x y + c (z y)
                let mut left_arg = x.clone();
                left_arg.add_scaled(&z, &c);
                let left = a.multiply(&left_arg, &y).unwrap();
                let mut right = a.multiply(&x, &y).unwrap();
                right.add_scaled(&a.multiply(&z, &y).unwrap(), &c);
                prop_assert_eq!(&left, &right);

                // x (y + c z) = x y + c (x z)
                let mut right_arg = y.clone();
                right_arg.add_scaled(&z, &c);
                let left2 = a.multiply(&x, &right_arg).unwrap();
                let mut right2 = a.multiply(&x, &y).unwrap();
                right2.add_scaled(&a.multiply(&x, &z).unwrap(), &c);
                prop_assert_eq!(&left2, &right2);
            }
        }
    }
}
