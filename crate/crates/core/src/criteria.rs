//! Closed-form connectedness classifiers and constructive certificates.
//!
//! For consecutive collinear digit sets `{0, ..., m}v`, the proven rules
//! give a sharp threshold on `m` in two regimes: real spectrum with both
//! eigenvalue moduli at least 2, and complex spectrum at the four solved
//! argument classes. For digit sets with one trailing gap the connected
//! range of the gap offset `s` is known exactly. Everything else is
//! reported `Unknown`, annotated with the conjectured (unproven) threshold;
//! the exact oracle remains available per instance.

use crate::algebra::{ComplexAngle, LatticePoint, Quadratic};
use crate::neighbors::{state_box, transition, DifferenceSet};
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CriteriaError {
    #[error("polynomial {0} is not expanding")]
    NotExpanding(Quadratic),
    #[error("m must be at least 1, got {0}")]
    InvalidM(i64),
    #[error("gap family needs integer factors with |p| >= 2 and |q| >= 2, got p={0}, q={1}")]
    InvalidGapFactor(i64, i64),
    #[error("gap offset s must be nonnegative, got {0}")]
    InvalidGapOffset(i64),
    #[error("digit set must contain at least one digit")]
    EmptyDigits,
    #[error("no proven connected verdict for {quad} with m = {m}; nothing to certify")]
    NotProvenConnected { quad: Quadratic, m: i64 },
    #[error("no explicit expansion is available for {0} (b = 0 with c > 0)")]
    NoCertificateBranch(Quadratic),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Connected,
    Disconnected,
    Unknown,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Connected => "Connected",
            Status::Disconnected => "Disconnected",
            Status::Unknown => "Unknown",
        })
    }
}

/// Which rule produced a verdict.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RuleSource {
    /// Real spectrum, both eigenvalue moduli at least 2.
    RealSpectrum,
    /// Complex spectrum at a solved argument class.
    ComplexSpectrum,
    /// Consecutive digits with one trailing gap.
    GapDigits,
    /// The unproven threshold formula.
    Conjecture,
    /// Exact lattice reachability.
    Oracle,
}

impl fmt::Display for RuleSource {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RuleSource::RealSpectrum => "real-spectrum criterion",
            RuleSource::ComplexSpectrum => "complex-spectrum criterion",
            RuleSource::GapDigits => "gap-digit criterion",
            RuleSource::Conjecture => "conjecture",
            RuleSource::Oracle => "exact oracle",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub status: Status,
    pub source: RuleSource,
    /// The minimal connected `m` (consecutive rules) or maximal connected
    /// gap offset `s` (gap rule) the source asserts.
    pub threshold: Option<i64>,
    pub note: Option<&'static str>,
}

const UNPROVEN_NOTE: &str = "conjectured; unproven";

/// Proven sharp threshold for consecutive digits, if a theorem covers
/// the parameters.
pub fn theorem_threshold(quad: Quadratic) -> Option<i64> {
    if !quad.is_expanding() {
        return None;
    }
    let k = quad.b.abs();
    if quad.discriminant() >= 0 {
        if !quad.min_eigen_modulus_at_least_two() {
            return None;
        }
        Some(if quad.c == 4 {
            2
        } else if quad.c > 0 {
            (quad.c - k + 1).max(k - 1)
        } else {
            -quad.c - k - 1
        })
    } else {
        match quad.spectral_data().angle? {
            ComplexAngle::PiOver6 => Some((quad.c - k + 1).max(k - 1)),
            ComplexAngle::PiOver4 | ComplexAngle::PiOver3 => Some(quad.c - k + 1),
            ComplexAngle::PiOver2 => Some(quad.c - 1),
            ComplexAngle::Other => None,
        }
    }
}

/// Conjectured threshold for consecutive digits; covers every expanding
/// quadratic, proven or not. `None` only for non-expanding input.
pub fn conjecture_threshold(quad: Quadratic) -> Option<i64> {
    if !quad.is_expanding() {
        return None;
    }
    let k = quad.b.abs();
    Some(if quad.c == 4 && k == 4 {
        2
    } else if quad.c > 0 && k >= 2 {
        (quad.c - k + 1).max(k - 1)
    } else if quad.c > 0 {
        quad.c - 1
    } else {
        (-quad.c - k - 1).max(k + 1)
    })
}

/// Classify `T(A, {0..m}v)` by the proven rules; `Unknown` outside them,
/// annotated with the conjectured threshold.
pub fn classify_consecutive(quad: Quadratic, m: i64) -> Result<Verdict, CriteriaError> {
    if !quad.is_expanding() {
        return Err(CriteriaError::NotExpanding(quad));
    }
    if m < 1 {
        return Err(CriteriaError::InvalidM(m));
    }
    match theorem_threshold(quad) {
        Some(threshold) => Ok(Verdict {
            status: if m >= threshold {
                Status::Connected
            } else {
                Status::Disconnected
            },
            source: if quad.discriminant() >= 0 {
                RuleSource::RealSpectrum
            } else {
                RuleSource::ComplexSpectrum
            },
            threshold: Some(threshold),
            note: None,
        }),
        None => Ok(Verdict {
            status: Status::Unknown,
            source: RuleSource::Conjecture,
            threshold: conjecture_threshold(quad),
            note: Some(UNPROVEN_NOTE),
        }),
    }
}

/// The conjectured verdict, for callers who explicitly opt in. Always
/// carries the unproven marker.
pub fn conjecture_verdict(quad: Quadratic, m: i64) -> Result<Verdict, CriteriaError> {
    if !quad.is_expanding() {
        return Err(CriteriaError::NotExpanding(quad));
    }
    if m < 1 {
        return Err(CriteriaError::InvalidM(m));
    }
    let threshold = conjecture_threshold(quad).expect("expanding was checked");
    Ok(Verdict {
        status: if m >= threshold {
            Status::Connected
        } else {
            Status::Disconnected
        },
        source: RuleSource::Conjecture,
        threshold: Some(threshold),
        note: Some(UNPROVEN_NOTE),
    })
}

/// Classify `T(A, D)` for `f(x) = (x - p)(x - q)` and the gap digit set
/// `D = {0, ..., |pq|-2, |pq|-1+s}v`: connected exactly for `s = 0`, except
/// that `x^2 ± 4x + 4` and `x^2 ± 7x + 12` also admit `s = 1`.
pub fn classify_nonconsecutive(p: i64, q: i64, s: i64) -> Result<Verdict, CriteriaError> {
    if p.abs() < 2 || q.abs() < 2 {
        return Err(CriteriaError::InvalidGapFactor(p, q));
    }
    if s < 0 {
        return Err(CriteriaError::InvalidGapOffset(s));
    }
    let b = -(p + q);
    let c = p * q;
    let exceptional = (b.abs() == 4 && c == 4) || (b.abs() == 7 && c == 12);
    let s_max = if exceptional { 1 } else { 0 };
    Ok(Verdict {
        status: if s <= s_max {
            Status::Connected
        } else {
            Status::Disconnected
        },
        source: RuleSource::GapDigits,
        threshold: Some(s_max),
        note: None,
    })
}

/// How a digit list was specified.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DigitSetKind {
    Consecutive { m: i64 },
    GapSet { p: i64, q: i64, s: i64 },
    General,
}

/// A collinear digit set `{d_1, ..., d_k}v`: sorted, distinct, starting
/// at 0 (connectedness is invariant under translating all digits).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CollinearDigitSet {
    digits: Vec<i64>,
    kind: DigitSetKind,
}

impl CollinearDigitSet {
    /// `{0, 1, ..., m}`.
    pub fn consecutive(m: i64) -> Result<Self, CriteriaError> {
        if m < 0 {
            return Err(CriteriaError::InvalidM(m));
        }
        Ok(CollinearDigitSet {
            digits: (0..=m).collect(),
            kind: DigitSetKind::Consecutive { m },
        })
    }

    /// `{0, ..., |pq|-2, |pq|-1+s}` for `f(x) = (x - p)(x - q)`.
    pub fn gap(p: i64, q: i64, s: i64) -> Result<Self, CriteriaError> {
        if p.abs() < 2 || q.abs() < 2 {
            return Err(CriteriaError::InvalidGapFactor(p, q));
        }
        if s < 0 {
            return Err(CriteriaError::InvalidGapOffset(s));
        }
        let pq = (p * q).abs();
        let mut digits: Vec<i64> = (0..=pq - 2).collect();
        digits.push(pq - 1 + s);
        Ok(CollinearDigitSet {
            digits,
            kind: DigitSetKind::GapSet { p, q, s },
        })
    }

    /// Arbitrary digits, normalized: sorted, deduplicated, translated so
    /// the smallest is 0.
    pub fn from_digits(digits: &[i64]) -> Result<Self, CriteriaError> {
        if digits.is_empty() {
            return Err(CriteriaError::EmptyDigits);
        }
        let mut d = digits.to_vec();
        d.sort_unstable();
        d.dedup();
        let base = d[0];
        for x in &mut d {
            *x -= base;
        }
        let m = *d.last().expect("nonempty");
        let kind = if m + 1 == d.len() as i64 {
            DigitSetKind::Consecutive { m }
        } else {
            DigitSetKind::General
        };
        Ok(CollinearDigitSet { digits: d, kind })
    }

    pub fn digits(&self) -> &[i64] {
        &self.digits
    }

    pub fn kind(&self) -> DigitSetKind {
        self.kind
    }

    pub fn max_digit(&self) -> i64 {
        *self.digits.last().expect("nonempty by construction")
    }

    pub fn len(&self) -> usize {
        self.digits.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn difference_set(&self) -> DifferenceSet {
        DifferenceSet::of_digits(&self.digits).expect("nonempty by construction")
    }
}

/// An eventually periodic coefficient stream `v = Σ e_i A^{-i} v`:
/// `head` holds `e_1..e_h`, then `tail` repeats forever (period 1 or 2).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HrpExpansion {
    pub head: Vec<i64>,
    pub tail: Vec<i64>,
}

impl HrpExpansion {
    /// The coefficient at 1-based position `i`.
    pub fn coefficient(&self, i: usize) -> i64 {
        assert!(i >= 1);
        if i <= self.head.len() {
            self.head[i - 1]
        } else {
            self.tail[(i - 1 - self.head.len()) % self.tail.len()]
        }
    }
}

fn expansion_for_nonpositive_b(quad: Quadratic) -> HrpExpansion {
    let k = quad.b.abs();
    if quad.c == 4 && k == 4 {
        HrpExpansion {
            head: vec![2, 2],
            tail: vec![-2],
        }
    } else if quad.c > 0 {
        HrpExpansion {
            head: vec![k - 1],
            tail: vec![-(quad.c - k + 1)],
        }
    } else {
        let t = -quad.c - k - 1;
        HrpExpansion {
            head: vec![k + 1],
            tail: vec![t, -t],
        }
    }
}

/// Transport an expansion across `b -> -b` by re-signing coefficient `i`
/// with `(-1)^i`; the tail block is expanded to length 2 first so the
/// parity pattern stays aligned, then collapsed if constant.
fn resign(e: HrpExpansion) -> HrpExpansion {
    let sign = |i: usize| if i.is_multiple_of(2) { 1 } else { -1 };
    let head: Vec<i64> = e
        .head
        .iter()
        .enumerate()
        .map(|(j, &x)| x * sign(j + 1))
        .collect();
    let start = head.len() + 1;
    let block: Vec<i64> = match e.tail.len() {
        1 => vec![e.tail[0], e.tail[0]],
        2 => e.tail.clone(),
        n => unreachable!("tail period {n} is never emitted"),
    };
    let mut tail = vec![block[0] * sign(start), block[1] * sign(start + 1)];
    if tail[0] == tail[1] {
        tail.truncate(1);
    }
    HrpExpansion { head, tail }
}

/// Explicit digit stream certifying `v ∈ T - T` for `D = {0..m}v`, i.e.
/// connectedness. Only emitted where a proven Connected verdict has a
/// printed construction; `b = 0` with `c > 0` is refused (those cases are
/// settled without an explicit stream — use the oracle).
pub fn hrp_expansion(quad: Quadratic, m: i64) -> Result<HrpExpansion, CriteriaError> {
    let verdict = classify_consecutive(quad, m)?;
    if verdict.status != Status::Connected {
        return Err(CriteriaError::NotProvenConnected { quad, m });
    }
    if quad.b == 0 && quad.c > 0 {
        return Err(CriteriaError::NoCertificateBranch(quad));
    }
    if quad.b > 0 {
        Ok(resign(expansion_for_nonpositive_b(quad.mirror())))
    } else {
        Ok(expansion_for_nonpositive_b(quad))
    }
}

/// Check an expansion by running the transition machine from `(1, 0)`:
/// every coefficient must be a legal digit difference, every visited state
/// must stay inside the state box, and one full tail period must return to
/// its anchor state. A bounded eventually-periodic walk certifies that the
/// infinite sum converges to `v` exactly.
pub fn verify_expansion(quad: Quadratic, diffs: &DifferenceSet, e: &HrpExpansion) -> bool {
    if e.tail.is_empty() || e.tail.len() > 2 {
        return false;
    }
    if e.head.iter().chain(&e.tail).any(|&d| !diffs.contains(d)) {
        return false;
    }
    let Ok(sb) = state_box(quad, diffs) else {
        return false;
    };
    let mut state = LatticePoint::new(1, 0);
    if !sb.contains(state) {
        return false;
    }
    for &d in &e.head {
        state = transition(quad, state, d);
        if !sb.contains(state) {
            return false;
        }
    }
    let anchor = state;
    for &d in &e.tail {
        state = transition(quad, state, d);
        if !sb.contains(state) {
            return false;
        }
    }
    state == anchor
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::neighbors::hata_connected;
    use proptest::prelude::*;

    fn classify(b: i64, c: i64, m: i64) -> Status {
        classify_consecutive(Quadratic::new(b, c), m)
            .unwrap()
            .status
    }

    #[test]
    fn consecutive_figure_verdicts() {
        let cases: &[(i64, i64, i64, i64)] = &[
            (-4, 4, 1, 2),
            (-10, 24, 13, 15),
            (-2, -24, 19, 21),
            (6, 12, 6, 7),
            (4, 8, 4, 5),
            (3, 9, 6, 7),
        ];
        for &(b, c, below, at) in cases {
            assert_eq!(classify(b, c, below), Status::Disconnected, "b={b} c={c}");
            assert_eq!(classify(b, c, at), Status::Connected, "b={b} c={c}");
            let v = classify_consecutive(Quadratic::new(b, c), at).unwrap();
            assert_eq!(v.threshold, Some(at));
            assert!(v.note.is_none());
        }
    }

    #[test]
    fn verdict_sources() {
        let v = classify_consecutive(Quadratic::new(-10, 24), 15).unwrap();
        assert_eq!(v.source, RuleSource::RealSpectrum);
        let v = classify_consecutive(Quadratic::new(6, 12), 7).unwrap();
        assert_eq!(v.source, RuleSource::ComplexSpectrum);
        assert_eq!(
            RuleSource::RealSpectrum.to_string(),
            "real-spectrum criterion"
        );
    }

    #[test]
    fn unknown_outside_theorems() {
        // Real spectrum with an eigenvalue modulus inside (1, 2).
        for m in 1..=6 {
            let v = classify_consecutive(Quadratic::new(-5, 5), m).unwrap();
            assert_eq!(v.status, Status::Unknown);
            assert_eq!(v.source, RuleSource::Conjecture);
            assert_eq!(v.threshold, Some(4));
            assert_eq!(v.note, Some("conjectured; unproven"));
        }
        // Complex spectrum off the solved angle classes.
        let v = classify_consecutive(Quadratic::new(-1, 3), 2).unwrap();
        assert_eq!(v.status, Status::Unknown);
    }

    #[test]
    fn conjecture_examples() {
        assert_eq!(conjecture_threshold(Quadratic::new(-1, 3)), Some(2));
        assert_eq!(conjecture_threshold(Quadratic::new(-10, 24)), Some(15));
        assert_eq!(conjecture_threshold(Quadratic::new(-2, -24)), Some(21));
        assert_eq!(conjecture_threshold(Quadratic::new(1, 1)), None);

        let v = conjecture_verdict(Quadratic::new(-1, 3), 2).unwrap();
        assert_eq!(v.status, Status::Connected);
        assert_eq!(v.source, RuleSource::Conjecture);
        assert_eq!(v.note, Some("conjectured; unproven"));
        let v = conjecture_verdict(Quadratic::new(-1, 3), 1).unwrap();
        assert_eq!(v.status, Status::Disconnected);
    }

    #[test]
    fn conjecture_agrees_with_theorems_on_their_domain() {
        for b in -10..=10i64 {
            for c in -30..=30i64 {
                let q = Quadratic::new(b, c);
                if let Some(t) = theorem_threshold(q) {
                    assert_eq!(conjecture_threshold(q), Some(t), "b={b} c={c}");
                }
            }
        }
    }

    #[test]
    fn gap_figure_verdicts() {
        let gap = |p, q, s| classify_nonconsecutive(p, q, s).unwrap().status;
        assert_eq!(gap(6, 4, 0), Status::Connected);
        assert_eq!(gap(6, 4, 1), Status::Disconnected);
        assert_eq!(gap(2, 2, 1), Status::Connected);
        assert_eq!(gap(2, 2, 2), Status::Disconnected);
        assert_eq!(gap(3, 4, 1), Status::Connected);
        assert_eq!(gap(3, 4, 2), Status::Disconnected);
        // Sign variants hit the same exceptional polynomials.
        assert_eq!(gap(-2, -2, 1), Status::Connected);
        assert_eq!(gap(-3, -4, 1), Status::Connected);
        assert_eq!(gap(2, -2, 1), Status::Disconnected);
    }

    #[test]
    fn gap_errors() {
        assert_eq!(
            classify_nonconsecutive(1, 4, 0),
            Err(CriteriaError::InvalidGapFactor(1, 4))
        );
        assert_eq!(
            classify_nonconsecutive(2, 2, -1),
            Err(CriteriaError::InvalidGapOffset(-1))
        );
    }

    #[test]
    fn digit_set_construction() {
        let d = CollinearDigitSet::consecutive(3).unwrap();
        assert_eq!(d.digits(), &[0, 1, 2, 3]);
        assert_eq!(d.kind(), DigitSetKind::Consecutive { m: 3 });

        let d = CollinearDigitSet::gap(2, 2, 1).unwrap();
        assert_eq!(d.digits(), &[0, 1, 2, 4]);
        let d = CollinearDigitSet::gap(3, 4, 2).unwrap();
        assert_eq!(d.digits()[..11], (0..=10).collect::<Vec<_>>()[..]);
        assert_eq!(d.max_digit(), 13);

        let d = CollinearDigitSet::from_digits(&[5, 3, 4, 5]).unwrap();
        assert_eq!(d.digits(), &[0, 1, 2]);
        assert_eq!(d.kind(), DigitSetKind::Consecutive { m: 2 });
        let d = CollinearDigitSet::from_digits(&[7, 3]).unwrap();
        assert_eq!(d.digits(), &[0, 4]);
        assert_eq!(d.kind(), DigitSetKind::General);
        assert_eq!(
            CollinearDigitSet::from_digits(&[]),
            Err(CriteriaError::EmptyDigits)
        );
    }

    #[test]
    fn expansion_examples() {
        let e = hrp_expansion(Quadratic::new(-4, 4), 2).unwrap();
        assert_eq!(e.head, vec![2, 2]);
        assert_eq!(e.tail, vec![-2]);
        let e = hrp_expansion(Quadratic::new(-10, 24), 15).unwrap();
        assert_eq!(e.head, vec![9]);
        assert_eq!(e.tail, vec![-15]);
        let e = hrp_expansion(Quadratic::new(-2, -24), 21).unwrap();
        assert_eq!(e.head, vec![3]);
        assert_eq!(e.tail, vec![21, -21]);
    }

    #[test]
    fn resigned_expansion_examples() {
        let e = hrp_expansion(Quadratic::new(10, 24), 15).unwrap();
        assert_eq!(e.head, vec![-9]);
        assert_eq!(e.tail, vec![-15, 15]);
        let e = hrp_expansion(Quadratic::new(2, -24), 21).unwrap();
        assert_eq!(e.head, vec![-3]);
        assert_eq!(e.tail, vec![21]);
        let e = hrp_expansion(Quadratic::new(4, 4), 2).unwrap();
        assert_eq!(e.head, vec![-2, 2]);
        assert_eq!(e.tail, vec![2, -2]);
    }

    #[test]
    fn coefficient_indexing() {
        let e = HrpExpansion {
            head: vec![3],
            tail: vec![21, -21],
        };
        let want = [3, 21, -21, 21, -21, 21];
        for (i, &w) in want.iter().enumerate() {
            assert_eq!(e.coefficient(i + 1), w);
        }
    }

    #[test]
    fn emitted_expansions_verify() {
        for (b, c, m) in [
            (-4, 4, 2),
            (4, 4, 2),
            (-4, 4, 5),
            (-10, 24, 15),
            (10, 24, 15),
            (-10, 24, 20),
            (-2, -24, 21),
            (2, -24, 21),
            (0, -4, 3),
            (-6, 12, 7),
            (6, 12, 7),
            (4, 8, 5),
            (-3, 9, 7),
            (3, 9, 7),
        ] {
            let q = Quadratic::new(b, c);
            let e = hrp_expansion(q, m).unwrap();
            let diffs = DifferenceSet::consecutive(m).unwrap();
            assert!(verify_expansion(q, &diffs, &e), "b={b} c={c} m={m}: {e:?}");
        }
    }

    #[test]
    fn expansion_refusals() {
        // Connected but proven without a printed stream.
        assert_eq!(
            hrp_expansion(Quadratic::new(0, 5), 4),
            Err(CriteriaError::NoCertificateBranch(Quadratic::new(0, 5)))
        );
        // Disconnected.
        assert!(matches!(
            hrp_expansion(Quadratic::new(-10, 24), 14),
            Err(CriteriaError::NotProvenConnected { .. })
        ));
        // Unknown.
        assert!(matches!(
            hrp_expansion(Quadratic::new(-5, 5), 10),
            Err(CriteriaError::NotProvenConnected { .. })
        ));
    }

    #[test]
    fn verify_rejects_bad_streams() {
        let q = Quadratic::new(-4, 4);
        let e = HrpExpansion {
            head: vec![2, 2],
            tail: vec![-2],
        };
        // Digit 2 is outside ΔD for m = 1.
        assert!(!verify_expansion(
            q,
            &DifferenceSet::consecutive(1).unwrap(),
            &e
        ));

        // Wrong tail constant: the walk never becomes periodic.
        let q = Quadratic::new(-10, 24);
        let e = HrpExpansion {
            head: vec![9],
            tail: vec![-14],
        };
        assert!(!verify_expansion(
            q,
            &DifferenceSet::consecutive(15).unwrap(),
            &e
        ));

        // Malformed period.
        let e = HrpExpansion {
            head: vec![9],
            tail: vec![-15, -15, -15],
        };
        assert!(!verify_expansion(
            q,
            &DifferenceSet::consecutive(15).unwrap(),
            &e
        ));
        let e = HrpExpansion {
            head: vec![9],
            tail: vec![],
        };
        assert!(!verify_expansion(
            q,
            &DifferenceSet::consecutive(15).unwrap(),
            &e
        ));
    }

    #[test]
    fn thresholds_are_sharp_against_oracle() {
        for (b, c) in [
            (-4, 4),
            (-10, 24),
            (-2, -24),
            (6, 12),
            (4, 8),
            (3, 9),
            (2, 2),
        ] {
            let q = Quadratic::new(b, c);
            let t = theorem_threshold(q).unwrap();
            if t > 1 {
                let digits: Vec<i64> = (0..t).collect();
                assert!(!hata_connected(q, &digits).unwrap(), "below at b={b} c={c}");
            }
            let digits: Vec<i64> = (0..=t).collect();
            assert!(
                hata_connected(q, &digits).unwrap(),
                "at threshold b={b} c={c}"
            );
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(128))]
        #[test]
        fn mirror_invariance(b in -10i64..=10, c in -30i64..=30, m in 1i64..=40) {
            let q = Quadratic::new(b, c);
            prop_assume!(q.is_expanding());
            let v = classify_consecutive(q, m).unwrap();
            let vm = classify_consecutive(q.mirror(), m).unwrap();
            prop_assert_eq!(v.status, vm.status);
            prop_assert_eq!(v.threshold, vm.threshold);
            prop_assert_eq!(v.source, vm.source);
        }

        #[test]
        fn proven_expansions_always_verify(b in -10i64..=10, c in -30i64..=30) {
            let q = Quadratic::new(b, c);
            prop_assume!(q.is_expanding());
            prop_assume!(!(q.b == 0 && q.c > 0));
            let Some(t) = theorem_threshold(q) else {
                return Ok(());
            };
            for m in [t, t + 1] {
                let e = hrp_expansion(q, m).unwrap();
                let diffs = DifferenceSet::consecutive(m).unwrap();
                prop_assert!(verify_expansion(q, &diffs, &e), "b={b} c={c} m={m} {e:?}");
            }
        }
    }
}
