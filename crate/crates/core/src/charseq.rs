//! Characteristic sequences and the necessary conditions every one of
//! them must satisfy.

/// A candidate characteristic sequence (m_0, ..., m_{N}).
///
/// The constructor accepts arbitrary data so that diagnostic routines
/// can be pointed at invalid input; sequences produced by the length
/// engine always start at 0, are non-decreasing and have one entry per
/// dimension.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CharSeq {
    m: Vec<u64>,
}

impl CharSeq {
    pub fn new(m: Vec<u64>) -> Self {
        CharSeq { m }
    }

    pub fn values(&self) -> &[u64] {
        &self.m
    }

    pub fn len(&self) -> usize {
        self.m.len()
    }

    pub fn is_empty(&self) -> bool {
        self.m.is_empty()
    }

    pub fn get(&self, i: usize) -> u64 {
        self.m[i]
    }

    pub fn last(&self) -> Option<u64> {
        self.m.last().copied()
    }

    /// Multiplicity s_k = #{ i : m_i = k } for k >= 1.
    pub fn multiplicity(&self, k: u64) -> usize {
        debug_assert!(k >= 1);
        self.m.iter().filter(|&&x| x == k).count()
    }

    /// Number of entries equal to 1.
    pub fn k1(&self) -> usize {
        self.multiplicity(1)
    }

    pub fn is_non_decreasing(&self) -> bool {
        self.m.windows(2).all(|w| w[0] <= w[1])
    }
}

impl std::fmt::Display for CharSeq {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.m.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

/// The necessary conditions checked by [`check_charseq_invariants`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SeqRule {
    /// m_0 = 0 and the sequence is non-decreasing.
    Structure,
    /// Every entry >= 2 is a sum of two earlier positive entries.
    SumDecomposition,
    /// m_h <= 2^(h-1).
    GrowthBound,
    /// m_{h+1} <= 2 m_h.
    DoubleStep,
    /// Either m_h = 2^(h-1) or m_h <= 3 * 2^(h-3).
    DoublingDichotomy,
    /// When m_h > 2^(h-2) (h >= 4), m_h = 2^(h-2) + 2^q.
    TopHalfForm,
}

impl SeqRule {
    pub fn name(&self) -> &'static str {
        match self {
            SeqRule::Structure => "structure",
            SeqRule::SumDecomposition => "sum-decomposition",
            SeqRule::GrowthBound => "growth-bound",
            SeqRule::DoubleStep => "double-step",
            SeqRule::DoublingDichotomy => "doubling-dichotomy",
            SeqRule::TopHalfForm => "top-half-form",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RuleOutcome {
    pub rule: SeqRule,
    pub pass: bool,
    /// Index h of the first violation, when failing.
    pub violating_index: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeqCheckReport {
    pub outcomes: Vec<RuleOutcome>,
}

impl SeqCheckReport {
    pub fn all_pass(&self) -> bool {
        self.outcomes.iter().all(|o| o.pass)
    }

    pub fn first_failure(&self) -> Option<&RuleOutcome> {
        self.outcomes.iter().find(|o| !o.pass)
    }
}

fn pow2(e: u64) -> u64 {
    1u64.checked_shl(e as u32).expect("exponent in range")
}

/// Evaluates every necessary condition on the sequence and reports the
/// first violating index per rule.
pub fn check_charseq_invariants(seq: &CharSeq) -> SeqCheckReport {
    let m = seq.values();
    let mut outcomes = Vec::new();

    let structure_bad = if m.is_empty() || m[0] != 0 {
        Some(0)
    } else {
        m.windows(2).position(|w| w[0] > w[1]).map(|i| i + 1)
    };
    outcomes.push(RuleOutcome {
        rule: SeqRule::Structure,
        pass: structure_bad.is_none(),
        violating_index: structure_bad,
    });

    // every entry >= 2 must split as m_t1 + m_t2 with 0 < t1 <= t2 < h
    let mut sum_bad = None;
    'outer: for h in 0..m.len() {
        if m[h] < 2 {
            continue;
        }
        for t1 in 1..h {
            for t2 in t1..h {
                if m[t1].checked_add(m[t2]) == Some(m[h]) {
                    continue 'outer;
                }
            }
        }
        sum_bad = Some(h);
        break;
    }
    outcomes.push(RuleOutcome {
        rule: SeqRule::SumDecomposition,
        pass: sum_bad.is_none(),
        violating_index: sum_bad,
    });

    let growth_bad = (1..m.len()).find(|&h| h < 64 && m[h] > pow2(h as u64 - 1));
    outcomes.push(RuleOutcome {
        rule: SeqRule::GrowthBound,
        pass: growth_bad.is_none(),
        violating_index: growth_bad,
    });

    let double_bad = (1..m.len().saturating_sub(1)).find(|&h| m[h + 1] > 2 * m[h]);
    outcomes.push(RuleOutcome {
        rule: SeqRule::DoubleStep,
        pass: double_bad.is_none(),
        violating_index: double_bad.map(|h| h + 1),
    });

    // m_h = 2^(h-1) or 8 m_h <= 3 * 2^h (integer form of 3 * 2^(h-3))
    let dichotomy_bad = (1..m.len())
        .find(|&h| h < 64 && m[h] != pow2(h as u64 - 1) && 8 * m[h] > 3 * pow2(h as u64));
    outcomes.push(RuleOutcome {
        rule: SeqRule::DoublingDichotomy,
        pass: dichotomy_bad.is_none(),
        violating_index: dichotomy_bad,
    });

    // top-half entries split as 2^(h-2) + 2^q; stated for h >= 4
    let top_bad = (4..m.len()).find(|&h| {
        if h >= 64 || m[h] <= pow2(h as u64 - 2) {
            return false;
        }
        let rest = m[h] - pow2(h as u64 - 2);
        !(rest.is_power_of_two() && rest <= pow2(h as u64 - 2))
    });
    outcomes.push(RuleOutcome {
        rule: SeqRule::TopHalfForm,
        pass: top_bad.is_none(),
        violating_index: top_bad,
    });

    SeqCheckReport { outcomes }
}
