//! Proto-characteristic sequences: validation with witness search,
//! exhaustive enumeration per dimension, and the three
//! sequence transforms that modify realizable lengths.
//!
//! A sequence (m_0, ..., m_{n-1}) is proto-characteristic when
//! m_0 = 0, a ones-prefix m_1 = ... = m_{k1} = 1 exists, the sequence
//! is non-decreasing, and every later entry m_k splits as
//! m_{t1(k)} + m_{t2(k)} with t1(k), t2(k) < k such that for any two
//! levels h1 < h2 at least one coordinate of the pair strictly
//! increases.

use std::collections::BTreeSet;

use crate::charseq::CharSeq;
use crate::error::{Error, Result};

/// The pair maps t1, t2 on the domain {k1+1, ..., n-1} certifying a
/// sequence proto-characteristic. All ordered pairs are distinct as a
/// consequence of the coordinate-increase condition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProtoWitness {
    k1: usize,
    pairs: Vec<(usize, usize)>,
}

impl ProtoWitness {
    pub fn new(k1: usize, pairs: Vec<(usize, usize)>) -> Self {
        ProtoWitness { k1, pairs }
    }

    pub fn k1(&self) -> usize {
        self.k1
    }

    /// First level carrying a pair.
    pub fn domain_start(&self) -> usize {
        self.k1 + 1
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn pair(&self, k: usize) -> Option<(usize, usize)> {
        k.checked_sub(self.k1 + 1)
            .and_then(|i| self.pairs.get(i))
            .copied()
    }

    /// Iterates (k, t1, t2) over the domain in increasing k.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, usize)> + '_ {
        self.pairs
            .iter()
            .enumerate()
            .map(move |(i, &(t1, t2))| (self.k1 + 1 + i, t1, t2))
    }
}

/// Why a sequence failed validation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ProtoRejection {
    /// Too short, wrong first entry, broken ones-prefix or not
    /// non-decreasing; the message pinpoints the defect.
    Structural(String),
    /// Structure is fine but no witness assignment exists.
    NoWitness,
}

impl std::fmt::Display for ProtoRejection {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ProtoRejection::Structural(msg) => write!(f, "structural defect: {msg}"),
            ProtoRejection::NoWitness => write!(f, "no witness assignment exists"),
        }
    }
}

fn structural_check(seq: &CharSeq) -> std::result::Result<usize, ProtoRejection> {
    let m = seq.values();
    if m.len() < 2 {
        return Err(ProtoRejection::Structural(
            "a proto-characteristic sequence has at least two entries".into(),
        ));
    }
    if m[0] != 0 {
        return Err(ProtoRejection::Structural(format!(
            "m_0 = {} instead of 0",
            m[0]
        )));
    }
    if !seq.is_non_decreasing() {
        return Err(ProtoRejection::Structural("sequence decreases".into()));
    }
    if m[1] != 1 {
        return Err(ProtoRejection::Structural(format!(
            "m_1 = {} instead of 1",
            m[1]
        )));
    }
    Ok(seq.k1())
}

/// The two coordinate conditions a new pair must satisfy against every
/// committed one: distinct levels never weakly dominate later ones.
fn pair_compatible(committed: &[(usize, usize)], cand: (usize, usize)) -> bool {
    committed.iter().all(|&(a, b)| a < cand.0 || b < cand.1)
}

/// Candidate pairs (t1, t2) with m_{t1} + m_{t2} = target and both
/// indices in 1..k, in lexicographic order.
fn candidate_pairs(m: &[u64], k: usize, target: u64) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for t1 in 1..k {
        if m[t1] >= target {
            continue;
        }
        let need = target - m[t1];
        for t2 in 1..k {
            if m[t2] == need {
                out.push((t1, t2));
            }
        }
    }
    out
}

/// Searches for the lexicographically least witness; `None` when the
/// (structurally sound) sequence admits no witness. Depth-first over
/// levels in increasing k with pairs tried in lexicographic order, so
/// the first complete assignment is the least one.
fn search_witness(m: &[u64], k1: usize) -> Option<Vec<(usize, usize)>> {
    let per_level: Vec<Vec<(usize, usize)>> = (k1 + 1..m.len())
        .map(|k| candidate_pairs(m, k, m[k]))
        .collect();
    if per_level.iter().any(|c| c.is_empty()) {
        return None;
    }

    fn assign(
        per_level: &[Vec<(usize, usize)>],
        depth: usize,
        committed: &mut Vec<(usize, usize)>,
    ) -> bool {
        if depth == per_level.len() {
            return true;
        }
        for &cand in &per_level[depth] {
            if pair_compatible(committed, cand) {
                committed.push(cand);
                if assign(per_level, depth + 1, committed) {
                    return true;
                }
                committed.pop();
            }
        }
        false
    }

    let mut committed = Vec::new();
    assign(&per_level, 0, &mut committed).then_some(committed)
}

/// Validates a sequence, returning the lex-least witness (pairs compared
/// as (t1, t2) tuples, levels in increasing k).
pub fn validate(seq: &CharSeq) -> std::result::Result<ProtoWitness, ProtoRejection> {
    let k1 = structural_check(seq)?;
    match search_witness(seq.values(), k1) {
        Some(pairs) => Ok(ProtoWitness::new(k1, pairs)),
        None => Err(ProtoRejection::NoWitness),
    }
}

/// Verifies a given witness against a sequence without searching.
pub fn check_witness(seq: &CharSeq, witness: &ProtoWitness) -> Result<()> {
    let k1 = structural_check(seq)
        .map_err(|r| Error::InvalidWitness(format!("sequence invalid: {r}")))?;
    if witness.k1 != k1 {
        return Err(Error::InvalidWitness(format!(
            "witness declares k1 = {} but the sequence has k1 = {k1}",
            witness.k1
        )));
    }
    let m = seq.values();
    let n = m.len();
    if witness.pairs.len() != n - 1 - k1 {
        return Err(Error::InvalidWitness(format!(
            "witness covers {} levels, expected {}",
            witness.pairs.len(),
            n - 1 - k1
        )));
    }
    for (k, t1, t2) in witness.entries() {
        if t1 == 0 || t2 == 0 || t1 >= k || t2 >= k {
            return Err(Error::InvalidWitness(format!(
                "pair at level {k} has indices ({t1}, {t2}) outside 1..{k}"
            )));
        }
        if m[t1] + m[t2] != m[k] {
            return Err(Error::InvalidWitness(format!(
                "m_{t1} + m_{t2} = {} but m_{k} = {}",
                m[t1] + m[t2],
                m[k]
            )));
        }
    }
    for (i, &(a1, b1)) in witness.pairs.iter().enumerate() {
        for &(a2, b2) in &witness.pairs[i + 1..] {
            if !(a1 < a2 || b1 < b2) {
                return Err(Error::InvalidWitness(format!(
                    "pairs ({a1}, {b1}) and ({a2}, {b2}) violate the coordinate-increase condition"
                )));
            }
        }
    }
    Ok(())
}

const ENUMERATION_GUARD: usize = 10;

fn guard(n: usize) -> Result<()> {
    if n < 2 {
        return Err(Error::ParamOutOfRange(format!(
            "sequence length {n} below 2"
        )));
    }
    if n > ENUMERATION_GUARD {
        return Err(Error::GuardExceeded {
            dim: n,
            guard: ENUMERATION_GUARD,
        });
    }
    Ok(())
}

/// The exact set of proto-characteristic sequences of length `n`
/// (2 <= n <= 10), in lexicographic order.
///
/// Depth-first over sequence values: a prefix extends either by another
/// 1 (while still in the ones-prefix) or by any sum of two earlier
/// entries that keeps the sequence non-decreasing and still admits a
/// witness. A sequence is emitted once no matter how many witnesses it
/// has.
pub fn enumerate(n: usize) -> Result<BTreeSet<CharSeq>> {
    guard(n)?;
    let mut out = BTreeSet::new();
    let mut prefix: Vec<u64> = vec![0, 1];
    extend(&mut prefix, n, &mut out);
    Ok(out)
}

fn extend(prefix: &mut Vec<u64>, n: usize, out: &mut BTreeSet<CharSeq>) {
    if prefix.len() == n {
        out.insert(CharSeq::new(prefix.clone()));
        return;
    }
    let k = prefix.len();
    let all_ones = prefix[1..].iter().all(|&x| x == 1);
    if all_ones {
        prefix.push(1);
        extend(prefix, n, out);
        prefix.pop();
    }
    let last = prefix[k - 1];
    let mut sums: BTreeSet<u64> = BTreeSet::new();
    for a in 1..k {
        for b in a..k {
            let s = prefix[a] + prefix[b];
            if s >= last && s >= 2 {
                sums.insert(s);
            }
        }
    }
    for value in sums {
        prefix.push(value);
        let k1 = prefix.iter().filter(|&&x| x == 1).count();
        if search_witness(prefix, k1).is_some() {
            extend(prefix, n, out);
        }
        prefix.pop();
    }
}

/// Last entries of all proto-characteristic sequences of length `n`:
/// exactly the realizable length values in dimension `n`.
pub fn realizable_lengths(n: usize) -> Result<BTreeSet<u64>> {
    Ok(enumerate(n)?
        .iter()
        .map(|s| s.last().expect("sequences are nonempty"))
        .collect())
}

fn debug_check_output(seq: &CharSeq, witness: &ProtoWitness) {
    debug_assert!(
        check_witness(seq, witness).is_ok(),
        "transform produced an invalid witness"
    );
}

/// (m_0, ..., m_{n-1}) -> (0, 1, m_1, ..., m_{n-1}): one more dimension,
/// same final length. Pairs shift by one in both coordinates.
pub fn prepend_one(seq: &CharSeq, witness: &ProtoWitness) -> Result<(CharSeq, ProtoWitness)> {
    check_witness(seq, witness)?;
    let mut m = vec![0, 1];
    m.extend_from_slice(&seq.values()[1..]);
    let out_seq = CharSeq::new(m);
    let pairs = witness
        .pairs
        .iter()
        .map(|&(t1, t2)| (t1 + 1, t2 + 1))
        .collect();
    let out_witness = ProtoWitness::new(witness.k1 + 1, pairs);
    debug_check_output(&out_seq, &out_witness);
    Ok((out_seq, out_witness))
}

/// Appends 2 * m_{n-1} with the pair (n-1, n-1): doubles the length.
pub fn append_double(seq: &CharSeq, witness: &ProtoWitness) -> Result<(CharSeq, ProtoWitness)> {
    check_witness(seq, witness)?;
    let n = seq.len();
    let last = seq.last().expect("nonempty");
    let mut m = seq.values().to_vec();
    m.push(2 * last);
    let out_seq = CharSeq::new(m);
    let mut pairs = witness.pairs.clone();
    pairs.push((n - 1, n - 1));
    let out_witness = ProtoWitness::new(witness.k1, pairs);
    debug_check_output(&out_seq, &out_witness);
    Ok((out_seq, out_witness))
}

/// Appends m_{n-1} + 1 with the pair (1, n-1): increments the length.
pub fn append_succ(seq: &CharSeq, witness: &ProtoWitness) -> Result<(CharSeq, ProtoWitness)> {
    check_witness(seq, witness)?;
    let n = seq.len();
    let last = seq.last().expect("nonempty");
    let mut m = seq.values().to_vec();
    m.push(last + 1);
    let out_seq = CharSeq::new(m);
    let mut pairs = witness.pairs.clone();
    pairs.push((1, n - 1));
    let out_witness = ProtoWitness::new(witness.k1, pairs);
    debug_check_output(&out_seq, &out_witness);
    Ok((out_seq, out_witness))
}
