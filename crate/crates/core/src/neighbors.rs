//! Exact oracle for translate intersections.
//!
//! `T` meets `T + γv + δAv` exactly when `γv + δAv = Σ A^{-i}(e_i v)` for
//! some digit-difference sequence `e_i ∈ D - D`. Peeling one term off the
//! sum maps the remainder to `A(γv + δAv) - e_1 v`, whose coordinates are
//! again integers, and every partial remainder is bounded coordinatewise by
//! `maxd·α~` and `maxd·β~`. So membership is equivalent to an infinite walk
//! in a finite directed graph: a state survives iff some out-edge leads to a
//! state that survives. The greatest fixed point of that pruning is computed
//! by a worklist over predecessor counts.

use crate::algebra::{LatticePoint, Quadratic};
use crate::series::{tilde_sums, SeriesError};
use num::{BigInt, BigRational, ToPrimitive};
use std::collections::VecDeque;
use thiserror::Error;

/// Hard cap on `(2·γmax+1)(2·δmax+1)`.
pub const STATE_CAP: u64 = 10_000_000;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum OracleError {
    #[error("polynomial {0} is not expanding")]
    NotExpanding(Quadratic),
    #[error("digit set must contain at least one digit")]
    EmptyDigitSet,
    #[error("state box holds {states} states, exceeding the cap of {cap}")]
    StateBoxTooLarge { states: u128, cap: u64 },
    #[error(transparent)]
    Series(#[from] SeriesError),
}

/// Symmetric set `D - D` of digit differences: sorted, deduplicated,
/// always containing 0.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DifferenceSet {
    values: Vec<i64>,
}

impl DifferenceSet {
    /// All pairwise differences of the given digits.
    pub fn of_digits(digits: &[i64]) -> Result<Self, OracleError> {
        if digits.is_empty() {
            return Err(OracleError::EmptyDigitSet);
        }
        let mut values: Vec<i64> = digits
            .iter()
            .flat_map(|a| digits.iter().map(move |b| a - b))
            .collect();
        values.sort_unstable();
        values.dedup();
        Ok(DifferenceSet { values })
    }

    /// Differences of the consecutive digit set `{0, 1, ..., m}`,
    /// i.e. `{-m, ..., m}`.
    pub fn consecutive(m: i64) -> Result<Self, OracleError> {
        if m < 0 {
            return Err(OracleError::EmptyDigitSet);
        }
        Ok(DifferenceSet {
            values: (-m..=m).collect(),
        })
    }

    pub fn values(&self) -> &[i64] {
        &self.values
    }

    pub fn max_abs(&self) -> i64 {
        self.values.last().copied().unwrap_or(0).abs()
    }

    pub fn contains(&self, d: i64) -> bool {
        self.values.binary_search(&d).is_ok()
    }
}

/// Coordinate box `|γ| <= gamma_max`, `|δ| <= delta_max` holding every
/// reachable remainder state.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct StateBox {
    pub gamma_max: i64,
    pub delta_max: i64,
}

impl StateBox {
    pub fn contains(&self, l: LatticePoint) -> bool {
        l.gamma.abs() <= self.gamma_max && l.delta.abs() <= self.delta_max
    }

    fn width(&self) -> usize {
        (2 * self.delta_max + 1) as usize
    }

    fn index(&self, l: LatticePoint) -> usize {
        let row = (l.gamma + self.gamma_max) as usize;
        let col = (l.delta + self.delta_max) as usize;
        row * self.width() + col
    }

    fn states(&self) -> usize {
        (2 * self.gamma_max + 1) as usize * self.width()
    }
}

/// One step of the remainder dynamics: `(γ, δ) -> A(γ, δ) - (d, 0)`.
pub fn transition(quad: Quadratic, state: LatticePoint, digit: i64) -> LatticePoint {
    let g = -(quad.c as i128) * state.delta as i128 - digit as i128;
    let d = state.gamma as i128 - quad.b as i128 * state.delta as i128;
    LatticePoint::new(
        g.try_into().expect("transition overflow"),
        d.try_into().expect("transition overflow"),
    )
}

/// The survivors of infinite pruning: exactly the lattice points `l` with
/// `T ∩ (T + l) ≠ ∅`.
#[derive(Clone, Debug)]
pub struct SurvivorSet {
    quad: Quadratic,
    state_box: StateBox,
    mask: Vec<bool>,
    points: Vec<LatticePoint>,
}

impl SurvivorSet {
    pub fn quadratic(&self) -> Quadratic {
        self.quad
    }

    pub fn state_box(&self) -> StateBox {
        self.state_box
    }

    pub fn contains(&self, l: LatticePoint) -> bool {
        self.state_box.contains(l) && self.mask[self.state_box.index(l)]
    }

    /// All survivors in lexicographic `(γ, δ)` order.
    pub fn points(&self) -> &[LatticePoint] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// Nonzero survivors: the translates that actually touch `T`.
    pub fn neighbors(&self) -> Vec<LatticePoint> {
        self.points
            .iter()
            .copied()
            .filter(|l| *l != LatticePoint::ZERO)
            .collect()
    }
}

/// The box every reachable remainder state lives in, derived from the
/// series bounds: `|γ| <= maxd·α~`, `|δ| <= maxd·β~`. Rejects boxes over
/// the state cap.
pub fn state_box(quad: Quadratic, diffs: &DifferenceSet) -> Result<StateBox, OracleError> {
    if !quad.is_expanding() {
        return Err(OracleError::NotExpanding(quad));
    }
    let bounds = tilde_sums(quad)?;
    let maxd = BigRational::from_integer(BigInt::from(diffs.max_abs()));
    let gm = (&maxd * &bounds.alpha_tilde).floor().to_integer();
    let dm = (&maxd * &bounds.beta_tilde).floor().to_integer();
    let count: BigInt = (&gm * 2 + 1) * (&dm * 2 + 1);
    if count > BigInt::from(STATE_CAP) {
        return Err(OracleError::StateBoxTooLarge {
            states: count.to_u128().unwrap_or(u128::MAX),
            cap: STATE_CAP,
        });
    }
    Ok(StateBox {
        gamma_max: gm.to_i64().expect("bounded by state cap"),
        delta_max: dm.to_i64().expect("bounded by state cap"),
    })
}

/// Greatest fixed point of the pruning operator on the state box.
pub fn survivor_set(quad: Quadratic, diffs: &DifferenceSet) -> Result<SurvivorSet, OracleError> {
    let state_box = state_box(quad, diffs)?;
    let n = state_box.states();
    let (b, c) = (quad.b as i128, quad.c as i128);
    let (gm, dm) = (state_box.gamma_max, state_box.delta_max);

    // Out-degrees within the box; states with none are dead immediately.
    let mut succ = vec![0u32; n];
    let mut dead = vec![false; n];
    let mut queue: VecDeque<LatticePoint> = VecDeque::new();
    for gamma in -gm..=gm {
        for delta in -dm..=dm {
            let s = LatticePoint::new(gamma, delta);
            let td = gamma as i128 - b * delta as i128;
            let mut count = 0u32;
            if td.abs() <= dm as i128 {
                for &d in diffs.values() {
                    let tg = -c * delta as i128 - d as i128;
                    if tg.abs() <= gm as i128 {
                        count += 1;
                    }
                }
            }
            let idx = state_box.index(s);
            succ[idx] = count;
            if count == 0 {
                dead[idx] = true;
                queue.push_back(s);
            }
        }
    }

    // Removing a state decrements the out-degree of each of its
    // predecessors; the digit of a candidate edge is forced, so
    // predecessors enumerate in O(2·δmax+1).
    while let Some(t) = queue.pop_front() {
        for delta in -dm..=dm {
            let gamma = t.delta as i128 + b * delta as i128;
            if gamma.abs() > gm as i128 {
                continue;
            }
            let digit = -c * delta as i128 - t.gamma as i128;
            let Ok(digit) = i64::try_from(digit) else {
                continue;
            };
            if !diffs.contains(digit) {
                continue;
            }
            let s = LatticePoint::new(gamma as i64, delta);
            let idx = state_box.index(s);
            if !dead[idx] {
                succ[idx] -= 1;
                if succ[idx] == 0 {
                    dead[idx] = true;
                    queue.push_back(s);
                }
            }
        }
    }

    let mut mask = vec![false; n];
    let mut points = Vec::new();
    for gamma in -gm..=gm {
        for delta in -dm..=dm {
            let s = LatticePoint::new(gamma, delta);
            let idx = state_box.index(s);
            if !dead[idx] {
                mask[idx] = true;
                points.push(s);
            }
        }
    }
    Ok(SurvivorSet {
        quad,
        state_box,
        mask,
        points,
    })
}

/// Does `T` meet `T + l`?
pub fn is_member(
    quad: Quadratic,
    diffs: &DifferenceSet,
    l: LatticePoint,
) -> Result<bool, OracleError> {
    Ok(survivor_set(quad, diffs)?.contains(l))
}

/// Nonzero lattice translates touching `T`, in lexicographic order.
pub fn enumerate_neighbors(
    quad: Quadratic,
    diffs: &DifferenceSet,
) -> Result<Vec<LatticePoint>, OracleError> {
    Ok(survivor_set(quad, diffs)?.neighbors())
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra] = rb;
        }
    }
}

/// Connectedness of `T(A, D)` for a collinear digit set `D = {d_i v}`:
/// the pieces `A^{-1}(T + d_i v)` form a graph with an edge where two
/// pieces intersect, and `T` is connected iff that graph is connected.
pub fn hata_connected(quad: Quadratic, digits: &[i64]) -> Result<bool, OracleError> {
    if digits.is_empty() {
        return Err(OracleError::EmptyDigitSet);
    }
    let mut digits = digits.to_vec();
    digits.sort_unstable();
    digits.dedup();
    if digits.len() == 1 {
        return Ok(true);
    }
    let diffs = DifferenceSet::of_digits(&digits)?;
    let survivors = survivor_set(quad, &diffs)?;
    let mut uf = UnionFind::new(digits.len());
    for i in 0..digits.len() {
        for j in i + 1..digits.len() {
            let l = LatticePoint::new(digits[j] - digits[i], 0);
            if survivors.contains(l) {
                uf.union(i, j);
            }
        }
    }
    let root = uf.find(0);
    Ok((1..digits.len()).all(|i| uf.find(i) == root))
}
