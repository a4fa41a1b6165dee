//! Builds a concrete algebra from a proto-characteristic sequence and
//! witness: the zero-padded construction.
//!
//! Basis 1 = e_0, e_1, ..., e_{n-1}; the only nonzero products of
//! non-unit basis elements are e_{t1(k)} e_{t2(k)} = e_k for the levels
//! k in the witness domain. The canonical generating set
//! {e_1, ..., e_{k1}} then reproduces the sequence exactly: the unique
//! shortest word hitting e_k goes through the recorded pair.

use crate::algebra::Algebra;
use crate::charseq::CharSeq;
use crate::error::{Error, Result};
use crate::field::FieldDesc;
use crate::length::{algebra_length, char_seq};
use crate::linalg::Vector;
use crate::proto::{check_witness, ProtoWitness};

/// Canonical generating set of a realized algebra: the pure basis
/// vectors e_1, ..., e_{k1}.
pub fn canonical_generators(algebra: &Algebra, seq: &CharSeq) -> Vec<Vector> {
    (1..=seq.k1()).map(|i| algebra.basis_vector(i)).collect()
}

/// Realizes a validated (sequence, witness) pair as an algebra over the
/// given field. All structure constants are 0 or 1, so any field works.
pub fn realize(seq: &CharSeq, witness: &ProtoWitness, field: FieldDesc) -> Result<Algebra> {
    check_witness(seq, witness)?;
    let n = seq.len();
    let mut table = vec![vec![Vector::zero(field, n); n]; n];
    for i in 0..n {
        table[0][i] = Vector::basis(field, n, i);
        table[i][0] = Vector::basis(field, n, i);
    }
    for (k, t1, t2) in witness.entries() {
        if !table[t1][t2].is_zero() {
            // distinct pairs are guaranteed by the witness check
            return Err(Error::Internal(format!(
                "witness pair ({t1}, {t2}) assigned twice"
            )));
        }
        table[t1][t2] = Vector::basis(field, n, k);
    }
    Algebra::new(field, n, 0, table)
}

/// Outcome of [`realize_and_certify`]: the realized algebra together
/// with the two checks of the realization claim.
#[derive(Debug, Clone)]
pub struct Certificate {
    pub algebra: Algebra,
    /// Characteristic sequence of the canonical generators.
    pub observed_seq: CharSeq,
    pub seq_matches: bool,
    pub expected_length: u64,
    /// Exhaustive oracle value of the algebra length.
    pub oracle_length: u64,
    pub length_matches: bool,
}

impl Certificate {
    pub fn certified(&self) -> bool {
        self.seq_matches && self.length_matches
    }
}

/// Realizes the pair and checks both claims against the engine: the
/// canonical generators reproduce the sequence, and the exhaustive
/// oracle confirms the algebra length equals the last entry. The
/// oracle sweep is exponential in the dimension, hence the guard.
pub fn realize_and_certify(
    seq: &CharSeq,
    witness: &ProtoWitness,
    field: FieldDesc,
    oracle_guard: usize,
) -> Result<Certificate> {
    if seq.len() > oracle_guard {
        return Err(Error::GuardExceeded {
            dim: seq.len(),
            guard: oracle_guard,
        });
    }
    if !field.is_prime_field() {
        return Err(Error::PrimeFieldRequired);
    }
    let algebra = realize(seq, witness, field)?;
    let gens = canonical_generators(&algebra, seq);
    let observed_seq = char_seq(&algebra, &gens)?;
    let seq_matches = &observed_seq == seq;
    let expected_length = seq.last().expect("validated sequences are nonempty");
    let oracle_length = algebra_length(&algebra)?;
    Ok(Certificate {
        algebra,
        seq_matches,
        observed_seq,
        expected_length,
        length_matches: oracle_length == expected_length,
        oracle_length,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::zero_mult;
    use crate::length::set_length;
    use crate::maxlen::long_basis_algebra;
    use crate::proto::{append_double, append_succ, enumerate, prepend_one, validate};

    fn gf2() -> FieldDesc {
        FieldDesc::gf(2).unwrap()
    }

    fn seq(m: &[u64]) -> CharSeq {
        CharSeq::new(m.to_vec())
    }

    #[test]
    fn powers_of_two_realization_is_the_squaring_chain() {
        for n in 3..=6 {
            let m: Vec<u64> = std::iter::once(0)
                .chain((0..n - 1).map(|h| 1u64 << h))
                .collect();
            let s = seq(&m);
            let w = validate(&s).unwrap();
            // the witness is forced: every pair is (k-1, k-1)
            for (k, t1, t2) in w.entries() {
                assert_eq!((t1, t2), (k - 1, k - 1));
            }
            let a = realize(&s, &w, gf2()).unwrap();
            assert_eq!(a, long_basis_algebra(gf2(), n).unwrap());
        }
    }

    #[test]
    fn all_ones_realization_is_zero_multiplication() {
        let s = seq(&[0, 1, 1, 1, 1]);
        let w = validate(&s).unwrap();
        let a = realize(&s, &w, gf2()).unwrap();
        assert_eq!(a, zero_mult(gf2(), 5).unwrap());
    }

    #[test]
    fn dim8_length23_realization() {
        let s = seq(&[0, 1, 2, 3, 5, 10, 20, 23]);
        let w = validate(&s).unwrap();
        let a = realize(&s, &w, gf2()).unwrap();
        let gens = canonical_generators(&a, &s);
        assert_eq!(gens.len(), 1);
        assert_eq!(char_seq(&a, &gens).unwrap(), s);
        assert_eq!(set_length(&a, &gens).unwrap(), 23);
    }

    #[test]
    fn graded_basis_of_realized_algebra_recovers_the_witness() {
        let s = seq(&[0, 1, 2, 3, 5, 10, 20, 23]);
        let w = validate(&s).unwrap();
        let a = realize(&s, &w, gf2()).unwrap();
        let gens = canonical_generators(&a, &s);
        let gb = crate::length::graded_basis(&a, &gens).unwrap();
        assert_eq!(gb.seq(), &s);
        assert_eq!(gb.witness(), &w);
    }

    #[test]
    fn realization_works_over_the_rationals_for_char_seq_checks() {
        let s = seq(&[0, 1, 2, 4]);
        let w = validate(&s).unwrap();
        let a = realize(&s, &w, FieldDesc::rational()).unwrap();
        let gens = canonical_generators(&a, &s);
        assert_eq!(char_seq(&a, &gens).unwrap(), s);
    }

    #[test]
    fn certified_small_cases() {
        for (m, expected) in [
            (vec![0, 1, 2, 4], 4),
            (vec![0, 1, 1, 2], 2),
            (vec![0, 1, 2, 3], 3),
        ] {
            let s = seq(&m);
            let w = validate(&s).unwrap();
            let cert = realize_and_certify(&s, &w, gf2(), 5).unwrap();
            assert!(cert.certified(), "{s}");
            assert_eq!(cert.oracle_length, expected);
        }
    }

    #[test]
    fn certify_guard_is_enforced() {
        let s = seq(&[0, 1, 2, 3, 5, 10]);
        let w = validate(&s).unwrap();
        assert!(matches!(
            realize_and_certify(&s, &w, gf2(), 5),
            Err(Error::GuardExceeded { dim: 6, guard: 5 })
        ));
    }

    #[test]
    fn realize_rejects_broken_witnesses() {
        let s = seq(&[0, 1, 2]);
        let bad = ProtoWitness::new(1, vec![(1, 2)]);
        assert!(matches!(
            realize(&s, &bad, gf2()),
            Err(Error::InvalidWitness(_))
        ));
    }

    #[test]
    fn realized_tables_never_produce_the_unit_coordinate() {
        for n in 2..=5 {
            for s in enumerate(n).unwrap() {
                let w = validate(&s).unwrap();
                let a = realize(&s, &w, gf2()).unwrap();
                for i in 1..a.dim() {
                    for j in 1..a.dim() {
                        assert!(a.table_entry(i, j).get(0).is_zero());
                    }
                }
            }
        }
    }

    #[test]
    fn transforms_respect_the_oracle_on_small_inputs() {
        // inputs of length <= 4 keep the transformed realization within
        // the n <= 5 oracle range
        for n in 2..=4 {
            for s in enumerate(n).unwrap() {
                let w = validate(&s).unwrap();
                let base = realize_and_certify(&s, &w, gf2(), 5).unwrap();
                assert!(base.certified());
                let l = base.oracle_length;

                let (s1, w1) = prepend_one(&s, &w).unwrap();
                let c1 = realize_and_certify(&s1, &w1, gf2(), 5).unwrap();
                assert!(c1.certified());
                assert_eq!(c1.oracle_length, l);

                let (s2, w2) = append_double(&s, &w).unwrap();
                let c2 = realize_and_certify(&s2, &w2, gf2(), 5).unwrap();
                assert!(c2.certified());
                assert_eq!(c2.oracle_length, 2 * l);

                let (s3, w3) = append_succ(&s, &w).unwrap();
                let c3 = realize_and_certify(&s3, &w3, gf2(), 5).unwrap();
                assert!(c3.certified());
                assert_eq!(c3.oracle_length, l + 1);
            }
        }
    }
}
