//! Theorem-versus-oracle sweeps over parameter grids.
//!
//! For every expanding `(b, c)` in range where a proven rule applies, the
//! sweep emits rows at `m ∈ {threshold-1, threshold, threshold+1}` and runs
//! the exact oracle independently, recording agreement. Rows whose state
//! box exceeds the cap are kept but marked skipped.

use crate::algebra::Quadratic;
use crate::criteria::{theorem_threshold, Status};
use crate::neighbors::{hata_connected, OracleError};
#[cfg(feature = "parallel")]
use rayon::prelude::*;
use std::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SweepRange {
    pub b_min: i64,
    pub b_max: i64,
    pub c_min: i64,
    pub c_max: i64,
    /// Drop rows with `m` above this, when set.
    pub m_max: Option<i64>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OracleOutcome {
    Connected,
    Disconnected,
    /// State box over the cap; no oracle verdict.
    Skipped,
}

impl fmt::Display for OracleOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            OracleOutcome::Connected => "Connected",
            OracleOutcome::Disconnected => "Disconnected",
            OracleOutcome::Skipped => "Skipped",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SweepRow {
    pub b: i64,
    pub c: i64,
    pub m: i64,
    pub theorem: Status,
    pub oracle: OracleOutcome,
    pub threshold: i64,
    /// `None` when the oracle was skipped.
    pub agree: Option<bool>,
}

pub const CSV_HEADER: &str = "b,c,m,theorem_verdict,oracle_verdict,threshold,agree";

impl SweepRow {
    pub fn csv(&self) -> String {
        let agree = match self.agree {
            Some(true) => "true",
            Some(false) => "false",
            None => "na",
        };
        format!(
            "{},{},{},{},{},{},{}",
            self.b, self.c, self.m, self.theorem, self.oracle, self.threshold, agree
        )
    }
}

fn rows_for(q: Quadratic, m_max: Option<i64>) -> Vec<SweepRow> {
    let Some(threshold) = theorem_threshold(q) else {
        return Vec::new();
    };
    let mut rows = Vec::new();
    let mut last = None;
    for m in [threshold - 1, threshold, threshold + 1] {
        if m < 1 || last == Some(m) || m_max.is_some_and(|cap| m > cap) {
            continue;
        }
        last = Some(m);
        let theorem = if m >= threshold {
            Status::Connected
        } else {
            Status::Disconnected
        };
        let digits: Vec<i64> = (0..=m).collect();
        let oracle = match hata_connected(q, &digits) {
            Ok(true) => OracleOutcome::Connected,
            Ok(false) => OracleOutcome::Disconnected,
            Err(OracleError::StateBoxTooLarge { .. }) => OracleOutcome::Skipped,
            Err(e) => unreachable!("oracle failed on proven parameters: {e}"),
        };
        let agree = match oracle {
            OracleOutcome::Connected => Some(theorem == Status::Connected),
            OracleOutcome::Disconnected => Some(theorem == Status::Disconnected),
            OracleOutcome::Skipped => None,
        };
        rows.push(SweepRow {
            b: q.b,
            c: q.c,
            m,
            theorem,
            oracle,
            threshold,
            agree,
        });
    }
    rows
}

fn grid(range: &SweepRange) -> Vec<Quadratic> {
    let mut cells = Vec::new();
    for b in range.b_min..=range.b_max {
        for c in range.c_min..=range.c_max {
            cells.push(Quadratic::new(b, c));
        }
    }
    cells
}

/// Sequential sweep; rows ordered by `(b, c, m)`.
pub fn theorem_oracle_sweep_seq(range: &SweepRange) -> Vec<SweepRow> {
    grid(range)
        .into_iter()
        .flat_map(|q| rows_for(q, range.m_max))
        .collect()
}

/// Sweep with per-cell parallelism when the `parallel` feature is on;
/// output order is identical to the sequential sweep.
#[cfg(feature = "parallel")]
pub fn theorem_oracle_sweep(range: &SweepRange) -> Vec<SweepRow> {
    grid(range)
        .into_par_iter()
        .map(|q| rows_for(q, range.m_max))
        .collect::<Vec<_>>()
        .into_iter()
        .flatten()
        .collect()
}

#[cfg(not(feature = "parallel"))]
pub fn theorem_oracle_sweep(range: &SweepRange) -> Vec<SweepRow> {
    theorem_oracle_sweep_seq(range)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_cell_rows() {
        let range = SweepRange {
            b_min: -4,
            b_max: -4,
            c_min: 4,
            c_max: 4,
            m_max: None,
        };
        let rows = theorem_oracle_sweep(&range);
        assert_eq!(rows.len(), 3);
        assert_eq!(rows.iter().map(|r| r.m).collect::<Vec<_>>(), vec![1, 2, 3]);
        assert_eq!(rows[0].theorem, Status::Disconnected);
        assert_eq!(rows[0].oracle, OracleOutcome::Disconnected);
        assert_eq!(rows[1].theorem, Status::Connected);
        assert_eq!(rows[2].theorem, Status::Connected);
        assert!(rows.iter().all(|r| r.agree == Some(true)));
        assert_eq!(rows[1].csv(), "-4,4,2,Connected,Connected,2,true");
    }

    #[test]
    fn threshold_one_emits_two_rows() {
        // (2, 2) has threshold 1, so m = 0 is dropped.
        let range = SweepRange {
            b_min: 2,
            b_max: 2,
            c_min: 2,
            c_max: 2,
            m_max: None,
        };
        let rows = theorem_oracle_sweep(&range);
        assert_eq!(rows.iter().map(|r| r.m).collect::<Vec<_>>(), vec![1, 2]);
        assert!(rows.iter().all(|r| r.theorem == Status::Connected));
    }

    #[test]
    fn m_max_clamps_rows() {
        let range = SweepRange {
            b_min: -10,
            b_max: -10,
            c_min: 24,
            c_max: 24,
            m_max: Some(15),
        };
        let rows = theorem_oracle_sweep(&range);
        assert_eq!(rows.iter().map(|r| r.m).collect::<Vec<_>>(), vec![14, 15]);
    }

    #[test]
    fn unproven_cells_emit_nothing() {
        let range = SweepRange {
            b_min: -5,
            b_max: -5,
            c_min: 5,
            c_max: 5,
            m_max: None,
        };
        assert!(theorem_oracle_sweep(&range).is_empty());
    }

    #[test]
    fn parallel_matches_sequential() {
        let range = SweepRange {
            b_min: -4,
            b_max: 4,
            c_min: -12,
            c_max: 12,
            m_max: None,
        };
        assert_eq!(
            theorem_oracle_sweep(&range),
            theorem_oracle_sweep_seq(&range)
        );
    }

    #[test]
    fn moderate_grid_always_agrees() {
        let range = SweepRange {
            b_min: -3,
            b_max: 3,
            c_min: -10,
            c_max: 10,
            m_max: None,
        };
        let rows = theorem_oracle_sweep(&range);
        assert!(!rows.is_empty());
        for row in rows {
            assert_eq!(row.agree, Some(true), "{}", row.csv());
        }
    }
}
