//! Exact length-function computations for finite-dimensional unital,
//! not necessarily associative algebras.
//!
//! The crate computes span chains and characteristic sequences of
//! generating sets, the length of an algebra over a finite field by
//! exhaustive subspace sweep, validates and enumerates
//! proto-characteristic sequences, realizes them as concrete algebras,
//! evaluates closed-form realizability predicates for length values,
//! and detects algebras of maximal length through long bases.

pub mod algebra;
pub mod charseq;
pub mod error;
pub mod feasibility;
pub mod field;
pub mod length;
pub mod linalg;
pub mod maxlen;
pub mod proto;
pub mod realize;

pub use algebra::{assoc_family, random_unital, zero_mult, Algebra};
pub use charseq::{check_charseq_invariants, CharSeq, SeqCheckReport, SeqRule};
pub use error::{Error, Result};
pub use feasibility::{
    b_of_n, b_recurrences_check, binary_sufficient, feasibility_report, interval_count,
    top_half_verdict, FeasibilityReport, IntervalCount, TopHalfVerdict,
};
pub use field::{FieldDesc, Scalar};
pub use length::{
    algebra_length, char_seq, graded_basis, irreducible_word_lengths, set_length, span_chain,
    GradedBasis, GradedWord, SpanChain, StopReason, WordTree,
};
pub use linalg::{bilinear_image, coordinates_in_basis, subspaces_containing, Subspace, Vector};
pub use maxlen::{
    find_long_basis, is_max_length, long_basis_algebra, presentation, verify_long_basis,
    LongBasis, LongBasisViolation, Presentation,
};
pub use proto::{
    append_double, append_succ, check_witness, enumerate, prepend_one, realizable_lengths,
    validate, ProtoRejection, ProtoWitness,
};
pub use realize::{canonical_generators, realize, realize_and_certify, Certificate};
