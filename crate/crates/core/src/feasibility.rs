//! Closed-form realizability predicates for length values: the binary
//! sufficiency test, the exact top-half description, per-interval
//! counts, and B(n).
//!
//! Everything here is pure integer arithmetic with no dependence on the
//! sequence enumerator; agreement with the enumerator is asserted in
//! tests, not wired into the code paths.

use crate::error::{Error, Result};
use crate::proto::realizable_lengths;

/// Bit length of l (0 for l = 0).
fn bits(l: u64) -> usize {
    (64 - l.leading_zeros()) as usize
}

/// l > 2^e, without shifting (safe for any e).
fn exceeds_pow2(l: u64, e: usize) -> bool {
    bits(l) > e + 1 || (bits(l) == e + 1 && !l.is_power_of_two())
}

/// Which closed-form rule certifies a value realizable.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SufficiencyRule {
    /// l = 2^h with h <= n-2.
    PowerOfTwo,
    /// l < 2^(n-k) where k is the number of ones in the binary
    /// decomposition of l (k at least 2).
    BinaryDigits,
}

impl SufficiencyRule {
    pub fn name(&self) -> &'static str {
        match self {
            SufficiencyRule::PowerOfTwo => "power-of-two",
            SufficiencyRule::BinaryDigits => "binary-digits",
        }
    }
}

/// Rules that fire for (l, n); nonempty exactly when the value is
/// certified realizable.
pub fn sufficiency_rules(l: u64, n: usize) -> Vec<SufficiencyRule> {
    let mut rules = Vec::new();
    if l == 0 {
        return rules;
    }
    if l.is_power_of_two() && (l.trailing_zeros() as usize) + 2 <= n {
        rules.push(SufficiencyRule::PowerOfTwo);
    }
    let k = (l.count_ones() as usize).max(2);
    if k < n && bits(l) <= n - k {
        rules.push(SufficiencyRule::BinaryDigits);
    }
    rules
}

/// True when l is certified realizable in dimension n by the binary
/// decomposition rules. Sufficient but not necessary.
pub fn binary_sufficient(l: u64, n: usize) -> bool {
    !sufficiency_rules(l, n).is_empty()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TopHalfVerdict {
    Feasible,
    Infeasible,
    NotApplicable,
}

impl TopHalfVerdict {
    pub fn name(&self) -> &'static str {
        match self {
            TopHalfVerdict::Feasible => "feasible",
            TopHalfVerdict::Infeasible => "infeasible",
            TopHalfVerdict::NotApplicable => "not-applicable",
        }
    }
}

/// Exact verdict for values above half of the maximum: for n > 4 and
/// l > 2^(n-3), l is realizable iff l = 2^(n-3) + 2^p with
/// 0 <= p <= n-3. Errors when (l, n) is not in the top half.
pub fn top_half_verdict(l: u64, n: usize) -> Result<TopHalfVerdict> {
    if n <= 4 {
        return Err(Error::ParamOutOfRange(format!(
            "top-half verdict needs dimension > 4, got {n}"
        )));
    }
    if !exceeds_pow2(l, n - 3) {
        return Err(Error::ParamOutOfRange(format!(
            "{l} is not above 2^({n}-3)"
        )));
    }
    // l > 2^(n-3) bounds n-3 below 64, so the shift is safe
    let half = 1u64 << (n - 3);
    let rest = l - half;
    let ok = rest.is_power_of_two() && rest <= half;
    Ok(if ok {
        TopHalfVerdict::Feasible
    } else {
        TopHalfVerdict::Infeasible
    })
}

/// Closed-form feasibility summary for one (l, n).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FeasibilityReport {
    pub l: u64,
    pub n: usize,
    pub sufficient: bool,
    pub rules: Vec<SufficiencyRule>,
    pub top_half: TopHalfVerdict,
}

pub fn feasibility_report(l: u64, n: usize) -> FeasibilityReport {
    let rules = sufficiency_rules(l, n);
    let top_half = if n > 4 && exceeds_pow2(l, n - 3) {
        top_half_verdict(l, n).expect("applicability checked")
    } else {
        TopHalfVerdict::NotApplicable
    };
    FeasibilityReport {
        l,
        n,
        sufficient: !rules.is_empty(),
        rules,
        top_half,
    }
}

/// Realizable-value count for the interval [2^(n-k-1), 2^(n-k) - 1].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntervalCount {
    pub n: usize,
    pub k: usize,
    pub lo: u64,
    pub hi: u64,
    /// Binomial lower bound: 1 + C(n-k-1, 1) + ... up to min(k-1, n-k-1).
    pub lower_bound: u64,
    /// Exact count when the closed forms decide it: n-2 for k = 2, the
    /// full interval when the binomial bound saturates it.
    pub exact: Option<u64>,
}

fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc = 1u64;
    for i in 0..k {
        acc = acc
            .checked_mul(n - i)
            .expect("binomial fits in u64 at these sizes")
            / (i + 1);
    }
    acc
}

pub fn interval_count(n: usize, k: usize) -> Result<IntervalCount> {
    if k <= 1 || k >= n {
        return Err(Error::ParamOutOfRange(format!(
            "interval index k = {k} outside 1 < k < n = {n}"
        )));
    }
    if n > 64 {
        return Err(Error::GuardExceeded { dim: n, guard: 64 });
    }
    let lo = 1u64 << (n - k - 1);
    let hi = (1u64 << (n - k)) - 1;
    let top = (k - 1).min(n - k - 1) as u64;
    let lower_bound: u64 = (0..=top).map(|h| binomial((n - k - 1) as u64, h)).sum();
    let interval_size = lo; // 2^(n-k-1) values in the interval
    let exact = if k == 2 {
        Some((n - 2) as u64)
    } else if lower_bound == interval_size {
        Some(interval_size)
    } else {
        None
    };
    Ok(IntervalCount {
        n,
        k,
        lo,
        hi,
        lower_bound,
        exact,
    })
}

/// B(n): the largest l such that every value 1, ..., l is realizable in
/// dimension n. Computed from the enumerated realizable set; guarded
/// like the enumerator (2 <= n <= 10).
pub fn b_of_n(n: usize) -> Result<u64> {
    let values = realizable_lengths(n)?;
    let mut l = 0;
    while values.contains(&(l + 1)) {
        l += 1;
    }
    Ok(l)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RecurrenceCheck {
    pub lhs: u64,
    pub rhs: u64,
    pub pass: bool,
}

/// The two lower-bound recurrences on computed B values:
/// B(n+2) >= 2 B(n) + 1, and B(n) >= 2^ceil(n/2) for n >= 6.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BRecurrenceReport {
    pub n: usize,
    /// B(n+2) >= 2 B(n) + 1, when n + 2 is within the computed range.
    pub doubling: Option<RecurrenceCheck>,
    /// B(n) >= 2^ceil(n/2), when n >= 6.
    pub power_bound: Option<RecurrenceCheck>,
}

impl BRecurrenceReport {
    pub fn all_pass(&self) -> bool {
        self.doubling.iter().all(|c| c.pass) && self.power_bound.iter().all(|c| c.pass)
    }
}

pub fn b_recurrences_check(n: usize) -> Result<BRecurrenceReport> {
    let doubling = if n + 2 <= 10 {
        let lhs = b_of_n(n + 2)?;
        let rhs = 2 * b_of_n(n)? + 1;
        Some(RecurrenceCheck {
            lhs,
            rhs,
            pass: lhs >= rhs,
        })
    } else {
        None
    };
    let power_bound = if n >= 6 {
        let lhs = b_of_n(n)?;
        let rhs = 1u64 << n.div_ceil(2);
        Some(RecurrenceCheck {
            lhs,
            rhs,
            pass: lhs >= rhs,
        })
    } else {
        None
    };
    Ok(BRecurrenceReport {
        n,
        doubling,
        power_bound,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binary_sufficiency_examples() {
        assert!(binary_sufficient(6, 5)); // two ones, 6 < 2^3
        assert!(!binary_sufficient(7, 5)); // three ones, 7 >= 2^2
        assert!(!binary_sufficient(23, 8)); // four ones, 23 >= 2^4
        assert!(binary_sufficient(4, 4)); // 2^2 with h = n-2
        assert!(binary_sufficient(1, 2));
        assert!(!binary_sufficient(2, 2)); // above the maximum 2^0
        assert!(!binary_sufficient(0, 5));
    }

    #[test]
    fn sufficiency_rules_are_reported() {
        let rules = sufficiency_rules(8, 6);
        // 8 = 2^3 <= 2^4 and also a one-digit value below 2^(6-2)
        assert!(rules.contains(&SufficiencyRule::PowerOfTwo));
        assert!(rules.contains(&SufficiencyRule::BinaryDigits));
        assert_eq!(sufficiency_rules(16, 6), vec![SufficiencyRule::PowerOfTwo]);
        assert_eq!(sufficiency_rules(6, 5), vec![SufficiencyRule::BinaryDigits]);
    }

    #[test]
    fn top_half_examples() {
        assert_eq!(top_half_verdict(12, 6).unwrap(), TopHalfVerdict::Feasible);
        assert_eq!(top_half_verdict(13, 6).unwrap(), TopHalfVerdict::Infeasible);
        assert_eq!(top_half_verdict(8, 5).unwrap(), TopHalfVerdict::Feasible);
        assert_eq!(top_half_verdict(7, 5).unwrap(), TopHalfVerdict::Infeasible);
        // not in the top half, or dimension too small
        assert!(top_half_verdict(4, 5).is_err());
        assert!(top_half_verdict(3, 4).is_err());
    }

    #[test]
    fn report_top_half_applicability() {
        assert_eq!(
            feasibility_report(7, 5).top_half,
            TopHalfVerdict::Infeasible
        );
        assert_eq!(
            feasibility_report(4, 5).top_half,
            TopHalfVerdict::NotApplicable
        );
        assert_eq!(
            feasibility_report(3, 4).top_half,
            TopHalfVerdict::NotApplicable
        );
        let r = feasibility_report(23, 8);
        assert!(!r.sufficient);
        assert_eq!(r.top_half, TopHalfVerdict::NotApplicable); // 23 < 32
    }

    #[test]
    fn interval_examples() {
        let c = interval_count(6, 2).unwrap();
        assert_eq!((c.lo, c.hi), (8, 15));
        assert_eq!(c.exact, Some(4)); // n - 2

        let c = interval_count(7, 4).unwrap();
        assert_eq!((c.lo, c.hi), (4, 7));
        assert_eq!(c.lower_bound, 4);
        assert_eq!(c.exact, Some(4)); // bound saturates the interval

        let c = interval_count(8, 4).unwrap();
        assert_eq!((c.lo, c.hi), (8, 15));
        assert_eq!(c.lower_bound, 8); // 1 + 3 + 3 + 1
        assert_eq!(c.exact, Some(8));

        assert!(interval_count(5, 1).is_err());
        assert!(interval_count(5, 5).is_err());
    }

    #[test]
    fn b_values_small_dimensions() {
        assert_eq!(b_of_n(2).unwrap(), 1);
        assert_eq!(b_of_n(3).unwrap(), 2);
        assert_eq!(b_of_n(4).unwrap(), 4);
        assert_eq!(b_of_n(5).unwrap(), 6);
        assert_eq!(b_of_n(6).unwrap(), 10);
    }

    #[test]
    fn b_recurrence_examples() {
        let r = b_recurrences_check(3).unwrap();
        let d = r.doubling.unwrap();
        assert_eq!((d.lhs, d.rhs), (6, 5));
        assert!(d.pass);

        let r = b_recurrences_check(4).unwrap();
        let d = r.doubling.unwrap();
        assert_eq!((d.lhs, d.rhs), (10, 9));
        assert!(d.pass);

        let r = b_recurrences_check(6).unwrap();
        let p = r.power_bound.unwrap();
        assert_eq!((p.lhs, p.rhs), (10, 8));
        assert!(p.pass);
        assert!(r.all_pass());
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(3, 0), 1);
        assert_eq!(binomial(3, 1), 3);
        assert_eq!(binomial(3, 2), 3);
        assert_eq!(binomial(3, 3), 1);
        assert_eq!(binomial(3, 4), 0);
        assert_eq!(binomial(60, 30), 118264581564861424);
    }
}
