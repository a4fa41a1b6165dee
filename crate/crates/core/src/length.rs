//! The length engine: span chains of generating sets, characteristic
//! sequences, lengths, the exhaustive algebra-length oracle over finite
//! fields, and graded bases.
//!
//! For a generating set S of a unital algebra, L_k is the span of all
//! words in S of length at most k (L_0 is the span of the unit). The
//! chain satisfies
//!
//!     L_k = L_{k-1} + sum over i of  <L_i * L_{k-i}>,   1 <= i <= k-1,
//!
//! and its dimension growth determines the characteristic sequence and
//! the length of S.

use rayon::prelude::*;

use crate::algebra::Algebra;
use crate::charseq::CharSeq;
use crate::error::{Error, Result};
use crate::linalg::{subspaces_containing, Subspace, Vector};
use crate::proto::ProtoWitness;

/// Why the span chain stopped extending.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StopReason {
    /// The chain reached the full space.
    Full,
    /// No growth on the window (j*, 2 j*] where j* is the last level
    /// that grew; a longer irreducible word would factor into two words
    /// of length at most j*, so the chain is stable forever.
    Stabilized,
    /// Hard cap 2^(n-2) reached. Unreachable for unital algebras; kept
    /// as a safety net for degenerate tables.
    Cap,
}

/// The computed filtration L_0 <= L_1 <= ... <= L_T.
#[derive(Debug, Clone)]
pub struct SpanChain {
    levels: Vec<Subspace>,
    generated: bool,
    stop_reason: StopReason,
}

impl SpanChain {
    pub fn levels(&self) -> &[Subspace] {
        &self.levels
    }

    pub fn generated(&self) -> bool {
        self.generated
    }

    pub fn stop_reason(&self) -> StopReason {
        self.stop_reason
    }

    pub fn dims(&self) -> Vec<usize> {
        self.levels.iter().map(|s| s.rank()).collect()
    }

    /// Final subspace of the chain (the generated subalgebra plus unit).
    pub fn closure(&self) -> &Subspace {
        self.levels.last().expect("chain has at least L_0")
    }

    /// Least k with dim L_k = n, when the set generates.
    pub fn generation_level(&self) -> Option<usize> {
        let n = self.closure().ambient_dim();
        self.levels.iter().position(|s| s.rank() == n)
    }
}

fn check_generators(algebra: &Algebra, gens: &[Vector]) -> Result<()> {
    if gens.is_empty() {
        return Err(Error::ParamOutOfRange("empty generating set".into()));
    }
    for g in gens {
        if g.field() != algebra.field() {
            return Err(Error::FieldMismatch);
        }
        if g.dim() != algebra.dim() {
            return Err(Error::DimensionMismatch {
                expected: algebra.dim(),
                got: g.dim(),
            });
        }
    }
    Ok(())
}

fn hard_cap(n: usize) -> usize {
    if n < 2 {
        1
    } else {
        1usize << (n - 2)
    }
}

/// Computes the span chain of a generating set.
///
/// Failure to generate is a reported state (`generated` = false), not
/// an error, because callers routinely probe candidate subspaces.
pub fn span_chain(algebra: &Algebra, gens: &[Vector]) -> Result<SpanChain> {
    check_generators(algebra, gens)?;
    let n = algebra.dim();
    let field = algebra.field();

    let mut levels = vec![Subspace::span(field, n, &[algebra.unit_vector()])?];
    // raw spanning vectors that first appeared at each level; products
    // of two spans reduce to products of these increments, so stalled
    // levels contribute nothing
    let mut increments: Vec<Vec<Vector>> = vec![Vec::new()];

    let mut current = levels[0].clone();
    let mut new_vectors = Vec::new();
    for g in gens {
        if current.insert(g) {
            new_vectors.push(g.clone());
        }
    }
    levels.push(current.clone());
    increments.push(new_vectors);

    let mut last_growth = if levels[1].rank() > levels[0].rank() {
        1
    } else {
        0
    };
    let cap = hard_cap(n);
    let mut stop_reason = None;

    let mut k = 1;
    while stop_reason.is_none() {
        if current.is_full() {
            stop_reason = Some(StopReason::Full);
            break;
        }
        if k >= 2 * last_growth {
            stop_reason = Some(StopReason::Stabilized);
            break;
        }
        if k >= cap {
            stop_reason = Some(StopReason::Cap);
            break;
        }
        k += 1;
        let mut added = Vec::new();
        for i in 1..k {
            let j = k - i;
            if increments[i].is_empty() || increments[j].is_empty() {
                continue;
            }
            for a in &increments[i] {
                for b in &increments[j] {
                    let prod = algebra.multiply(a, b).expect("generators share the space");
                    if current.insert(&prod) {
                        added.push(prod);
                    }
                }
            }
        }
        if !added.is_empty() {
            last_growth = k;
        }
        levels.push(current.clone());
        increments.push(added);
    }

    Ok(SpanChain {
        generated: current.is_full(),
        levels,
        stop_reason: stop_reason.expect("loop sets a stop reason"),
    })
}

/// Characteristic sequence of a generating set: starts at 0, then each
/// level k contributes dim L_k - dim L_{k-1} copies of k. Errors when
/// the set does not generate.
pub fn char_seq(algebra: &Algebra, gens: &[Vector]) -> Result<CharSeq> {
    let chain = span_chain(algebra, gens)?;
    char_seq_of_chain(&chain)
}

pub(crate) fn char_seq_of_chain(chain: &SpanChain) -> Result<CharSeq> {
    if !chain.generated() {
        return Err(Error::NonGenerating);
    }
    let dims = chain.dims();
    let top = chain.generation_level().expect("generated chain is full");
    let mut m = vec![0u64];
    for k in 1..=top {
        for _ in dims[k - 1]..dims[k] {
            m.push(k as u64);
        }
    }
    Ok(CharSeq::new(m))
}

/// Length of a generating set: least k with L_k = A.
pub fn set_length(algebra: &Algebra, gens: &[Vector]) -> Result<u64> {
    let chain = span_chain(algebra, gens)?;
    match chain.generation_level() {
        Some(k) => Ok(k as u64),
        None => Err(Error::NonGenerating),
    }
}

/// Multiset of lengths of linearly independent irreducible words: the
/// nonzero entries of the characteristic sequence, sorted.
pub fn irreducible_word_lengths(algebra: &Algebra, gens: &[Vector]) -> Result<Vec<u64>> {
    let seq = char_seq(algebra, gens)?;
    Ok(seq.values().iter().copied().filter(|&x| x > 0).collect())
}

/// Length of the algebra: the maximum of `set_length` over all
/// generating sets.
///
/// The length of S only depends on L_1(S), the span of S and the unit,
/// so one representative basis per subspace containing the unit covers
/// every generating set. Finite fields only; the sweep runs in
/// parallel and reduces by an order-independent maximum.
pub fn algebra_length(algebra: &Algebra) -> Result<u64> {
    if !algebra.field().is_prime_field() {
        return Err(Error::PrimeFieldRequired);
    }
    let candidates = subspaces_containing(algebra.field(), algebra.dim(), &algebra.unit_vector())?;
    let best = candidates
        .par_bridge()
        .filter_map(|space| {
            let chain = span_chain(algebra, space.rows()).expect("enumerated spaces match");
            chain.generation_level().map(|k| k as u64)
        })
        .max();
    best.ok_or_else(|| Error::Internal("no generating subspace found".into()))
}

/// A fully parenthesized product of generators; leaves hold indices
/// into the generating set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum WordTree {
    Leaf(usize),
    Pair(Box<WordTree>, Box<WordTree>),
}

impl WordTree {
    /// Number of letters.
    pub fn len(&self) -> usize {
        match self {
            WordTree::Leaf(_) => 1,
            WordTree::Pair(a, b) => a.len() + b.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn evaluate(&self, algebra: &Algebra, gens: &[Vector]) -> Result<Vector> {
        match self {
            WordTree::Leaf(i) => gens
                .get(*i)
                .cloned()
                .ok_or_else(|| Error::ParamOutOfRange(format!("generator index {i}"))),
            WordTree::Pair(a, b) => {
                let left = a.evaluate(algebra, gens)?;
                let right = b.evaluate(algebra, gens)?;
                algebra.multiply(&left, &right)
            }
        }
    }
}

impl std::fmt::Display for WordTree {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            WordTree::Leaf(i) => write!(f, "g{}", i + 1),
            WordTree::Pair(a, b) => write!(f, "({a} {b})"),
        }
    }
}

/// A basis element of a graded basis: the unit (the word of length 0)
/// or a word in the generators.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GradedWord {
    Unit,
    Word(WordTree),
}

impl GradedWord {
    pub fn len(&self) -> usize {
        match self {
            GradedWord::Unit => 0,
            GradedWord::Word(w) => w.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        matches!(self, GradedWord::Unit)
    }
}

impl std::fmt::Display for GradedWord {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            GradedWord::Unit => write!(f, "1"),
            GradedWord::Word(w) => write!(f, "{w}"),
        }
    }
}

/// A basis of words e_0 = 1, e_1, ..., e_{n-1} layered along the span
/// chain: the word length of e_i is m_i, the first 1 + k1 elements span
/// L_1, and every later element is the product of two earlier ones as
/// recorded by the witness pairs.
#[derive(Debug, Clone)]
pub struct GradedBasis {
    words: Vec<GradedWord>,
    vectors: Vec<Vector>,
    seq: CharSeq,
    witness: ProtoWitness,
    /// Number of basis elements inside W_r, for r = 0, ..., l(S).
    level_sizes: Vec<usize>,
}

impl GradedBasis {
    pub fn words(&self) -> &[GradedWord] {
        &self.words
    }

    pub fn vectors(&self) -> &[Vector] {
        &self.vectors
    }

    pub fn seq(&self) -> &CharSeq {
        &self.seq
    }

    /// The product table t1, t2: e_{t1(k)} e_{t2(k)} = e_k.
    pub fn witness(&self) -> &ProtoWitness {
        &self.witness
    }

    pub fn level_sizes(&self) -> &[usize] {
        &self.level_sizes
    }
}

/// Builds a graded basis for a generating set.
///
/// The generators are filtered to a maximal subset independent modulo
/// the unit (greedy, input order); each level K then scans products of
/// earlier basis words with length sum K in lexicographic index order
/// and keeps exactly the rank-increasing ones. The lexicographic scan
/// makes the recorded pairs satisfy the coordinate-increase condition.
pub fn graded_basis(algebra: &Algebra, gens: &[Vector]) -> Result<GradedBasis> {
    let chain = span_chain(algebra, gens)?;
    let seq = char_seq_of_chain(&chain)?;
    let dims = chain.dims();
    let top = chain.generation_level().expect("chain is full");

    let field = algebra.field();
    let n = algebra.dim();

    let mut words = vec![GradedWord::Unit];
    let mut vectors = vec![algebra.unit_vector()];
    let mut span = Subspace::span(field, n, &vectors)?;
    for (i, g) in gens.iter().enumerate() {
        if span.insert(g) {
            words.push(GradedWord::Word(WordTree::Leaf(i)));
            vectors.push(g.clone());
        }
    }
    let k1 = words.len() - 1;
    debug_assert_eq!(k1, seq.k1());

    let mut level_sizes = vec![1, words.len()];
    let mut pairs = Vec::new();
    let word_len = |w: &GradedWord| w.len() as u64;

    for level in 2..=top {
        let fixed = words.len();
        for j1 in 1..fixed {
            for j2 in 1..fixed {
                if word_len(&words[j1]) + word_len(&words[j2]) != level as u64 {
                    continue;
                }
                let prod = algebra.multiply(&vectors[j1], &vectors[j2])?;
                if span.insert(&prod) {
                    let (w1, w2) = (words[j1].clone(), words[j2].clone());
                    let (GradedWord::Word(t1), GradedWord::Word(t2)) = (w1, w2) else {
                        unreachable!("indices >= 1 are words");
                    };
                    words.push(GradedWord::Word(WordTree::Pair(
                        Box::new(t1),
                        Box::new(t2),
                    )));
                    vectors.push(prod);
                    pairs.push((j1, j2));
                }
            }
        }
        if words.len() != dims[level] {
            return Err(Error::Internal(format!(
                "graded basis level {level} reached {} elements, expected {}",
                words.len(),
                dims[level]
            )));
        }
        level_sizes.push(words.len());
    }

    if words.len() != n {
        return Err(Error::Internal(format!(
            "graded basis has {} elements in a dimension-{n} algebra",
            words.len()
        )));
    }

    Ok(GradedBasis {
        words,
        vectors,
        seq,
        witness: ProtoWitness::new(k1, pairs),
        level_sizes,
    })
}
