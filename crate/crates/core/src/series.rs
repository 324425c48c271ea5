//! Coefficient sequences of `A^{-i} v` in the lattice basis `{v, Av}` and
//! exact values (or rigorous upper bounds) for their absolute sums.
//!
//! Writing `A^{-i} v = α_i v + β_i Av`, both coordinate sequences satisfy
//! the recurrence `c x_{i+2} + b x_{i+1} + x_i = 0` with starts
//! `α_1 = -b/c`, `α_2 = (b^2 - c)/c^2`, `β_1 = -1/c`, `β_2 = b/c^2`
//! (read off `A^{-1}` and `A^{-2}` directly). The absolute sums
//! `α~ = Σ|α_i|` and `β~ = Σ|β_i|` bound the lattice coordinates of any
//! translate `T + l` that meets `T`; they are what makes the reachability
//! oracle's state space finite.

use crate::algebra::{ComplexAngle, Quadratic};
use num::complex::Complex64;
use num::{BigInt, BigRational, One, Signed, Zero};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SeriesError {
    #[error("polynomial {0} is not expanding")]
    NotExpanding(Quadratic),
    #[error("closed form needs distinct roots, but {0} has a repeated root")]
    RepeatedRoot(Quadratic),
    #[error("sequence indices start at 1")]
    IndexOutOfRange,
}

/// Whether a reported pair of series bounds is exact or only a certified
/// upper bound.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Exactness {
    ExactClosedForm,
    RigorousUpperBound,
}

/// Values (or upper bounds) for `Σ|α_i|` and `Σ|β_i|`.
#[derive(Clone, Debug, PartialEq)]
pub struct SeriesBounds {
    pub alpha_tilde: BigRational,
    pub beta_tilde: BigRational,
    pub exactness: Exactness,
}

fn rat_i64(x: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(x))
}

fn rat(n: BigInt, d: BigInt) -> BigRational {
    BigRational::new(n, d)
}

/// Lazily extended table of exact `(α_i, β_i)` pairs, 1-indexed. Not meant
/// for shared mutation; confine each instance to one thread.
pub struct AlphaBetaSequence {
    quad: Quadratic,
    table: Vec<(BigRational, BigRational)>,
}

impl AlphaBetaSequence {
    pub fn new(quad: Quadratic) -> Result<Self, SeriesError> {
        if !quad.is_expanding() {
            return Err(SeriesError::NotExpanding(quad));
        }
        let b = BigInt::from(quad.b);
        let c = BigInt::from(quad.c);
        let c2 = &c * &c;
        let a1 = rat(-&b, c.clone());
        let b1 = rat(BigInt::from(-1), c.clone());
        let a2 = rat(&b * &b - &c, c2.clone());
        let b2 = rat(b, c2);
        Ok(AlphaBetaSequence {
            quad,
            table: vec![(a1, b1), (a2, b2)],
        })
    }

    pub fn quadratic(&self) -> Quadratic {
        self.quad
    }

    /// The pair `(α_i, β_i)`; `i >= 1`.
    pub fn get(&mut self, i: usize) -> (BigRational, BigRational) {
        assert!(i >= 1, "sequence indices start at 1");
        let b = rat_i64(self.quad.b);
        let c = rat_i64(self.quad.c);
        while self.table.len() < i {
            let n = self.table.len();
            let (a_prev, b_prev) = &self.table[n - 2];
            let (a_last, b_last) = &self.table[n - 1];
            let a_next = -(&b * a_last + a_prev) / &c;
            let b_next = -(&b * b_last + b_prev) / &c;
            self.table.push((a_next, b_next));
        }
        self.table[i - 1].clone()
    }
}

/// Exact `(α_i, β_i)` by the two-term recurrence.
pub fn alpha_beta(quad: Quadratic, i: usize) -> Result<(BigRational, BigRational), SeriesError> {
    if i < 1 {
        return Err(SeriesError::IndexOutOfRange);
    }
    Ok(AlphaBetaSequence::new(quad)?.get(i))
}

/// Floating-point `(α_i, β_i)` through the root formula
/// `α_i = c (r1^{i+1} - r2^{i+1}) / sqrt(Δ)`, `β_i = -(r1^i - r2^i) / sqrt(Δ)`
/// with `r1, r2` the roots of `c x^2 + b x + 1`. Rejects repeated roots.
pub fn alpha_beta_closed(quad: Quadratic, i: usize) -> Result<(f64, f64), SeriesError> {
    if !quad.is_expanding() {
        return Err(SeriesError::NotExpanding(quad));
    }
    if quad.discriminant() == 0 {
        return Err(SeriesError::RepeatedRoot(quad));
    }
    if i < 1 {
        return Err(SeriesError::IndexOutOfRange);
    }
    let b = quad.b as f64;
    let c = quad.c as f64;
    let sq = Complex64::new(quad.discriminant() as f64, 0.0).sqrt();
    let r1 = (Complex64::new(-b, 0.0) + sq) / (2.0 * c);
    let r2 = (Complex64::new(-b, 0.0) - sq) / (2.0 * c);
    let alpha = ((r1.powu(i as u32 + 1) - r2.powu(i as u32 + 1)) * c / sq).re;
    let beta = (-(r1.powu(i as u32) - r2.powu(i as u32)) / sq).re;
    Ok((alpha, beta))
}

/// Exact signed sums `(Σ α_i, Σ β_i)`, i.e. the coordinates of
/// `(A - I)^{-1} v`: `(-(b+1)/f(1), -1/f(1))` with `f(1) = 1 + b + c`.
pub fn signed_series_sums(quad: Quadratic) -> Result<(BigRational, BigRational), SeriesError> {
    if !quad.is_expanding() {
        return Err(SeriesError::NotExpanding(quad));
    }
    let f_one = BigInt::from(1 + quad.b + quad.c);
    Ok((
        rat(BigInt::from(-(quad.b + 1)), f_one.clone()),
        rat(BigInt::from(-1), f_one),
    ))
}

/// Rational interval `[lo, hi]` containing `sqrt(n)`, width `2^-bits`.
fn sqrt_interval(n: &BigInt, bits: u64) -> (BigRational, BigRational) {
    let scaled = n << (2 * bits);
    let s = scaled.sqrt();
    let den = BigInt::one() << bits;
    (rat(s.clone(), den.clone()), rat(s + BigInt::one(), den))
}

const SQRT_BITS: u64 = 96;

/// Certified rational upper bounds for the tails `Σ_{i>n} |α_i|` and
/// `Σ_{i>n} |β_i|`.
///
/// Real distinct roots: `|α_i| <= 2|c| r^{i+1} / sqrt(Δ)` and
/// `|β_i| <= 2 r^i / sqrt(Δ)` with `r` the larger root modulus of
/// `c x^2 + b x + 1`. A repeated root `x0 = -b/2` gives exactly
/// `|α_i| = (i+1) r^i`, `|β_i| = i r^{i+1}` with `r = 2/|b|`. A complex pair
/// gives the same exponential envelopes with `r = 1/sqrt(c)` and `sqrt(|Δ|)`
/// in the denominator. All square roots are replaced by outward-rounded
/// rationals, so every returned value is a true upper bound.
pub fn abs_tail_upper_bound(
    quad: Quadratic,
    n: usize,
) -> Result<(BigRational, BigRational), SeriesError> {
    if !quad.is_expanding() {
        return Err(SeriesError::NotExpanding(quad));
    }
    let one = BigRational::one();
    let disc = quad.discriminant();
    let n = n as i32;
    if disc == 0 {
        let r = rat(BigInt::from(2), BigInt::from(quad.b.abs()));
        let geom = &one - &r;
        // Σ_{i>n} i x^i = x^{n+1} ((n+1)/(1-x) + x/(1-x)^2)
        let tail_i = r.pow(n + 1) * (rat_i64((n + 1) as i64) / &geom + &r / (&geom * &geom));
        let tail_alpha = &tail_i + r.pow(n + 1) / &geom;
        let tail_beta = &r * &tail_i;
        return Ok((tail_alpha, tail_beta));
    }

    let (r_up, sqrt_disc_lo, scale) = if disc > 0 {
        // Outward-rounded moduli of (-b ± sqrt(Δ)) / (2c).
        let (lo, hi) = sqrt_interval(&BigInt::from(disc), SQRT_BITS);
        let two_c = rat_i64(2 * quad.c);
        let minus_b = rat_i64(-quad.b);
        let mut r_up = BigRational::zero();
        for root in [
            (&minus_b + &lo) / &two_c,
            (&minus_b + &hi) / &two_c,
            (&minus_b - &lo) / &two_c,
            (&minus_b - &hi) / &two_c,
        ] {
            let a = root.abs();
            if a > r_up {
                r_up = a;
            }
        }
        (r_up, lo, rat_i64(2 * quad.c.abs()))
    } else {
        // Complex pair: both reciprocal roots have modulus 1/sqrt(c).
        let (lo, _) = sqrt_interval(&BigInt::from(quad.c), SQRT_BITS);
        let r_up = lo.recip();
        let (dlo, _) = sqrt_interval(&BigInt::from(-disc), SQRT_BITS);
        (r_up, dlo, rat_i64(2 * quad.c))
    };
    assert!(
        r_up < one && sqrt_disc_lo.is_positive(),
        "tail envelope degenerated for {quad}"
    );
    let geom = &one - &r_up;
    let tail_alpha = &scale * r_up.pow(n + 2) / (&geom * &sqrt_disc_lo);
    let tail_beta = rat_i64(2) * r_up.pow(n + 1) / (&geom * &sqrt_disc_lo);
    Ok((tail_alpha, tail_beta))
}

/// Exact values of `Σ|α_i|`, `Σ|β_i|` where a closed form exists, and a
/// certified rational upper bound otherwise.
///
/// Real spectrum: with `k = |b|`, positive `c` gives
/// `((k-1)/(c-k+1), 1/(c-k+1))` and negative `c` gives
/// `((k+1)/(|c|-k-1), 1/(|c|-k-1))`. Complex spectrum at the solved angles
/// (`b^2/c` equal to 3, 2, 1, or `b = 0`): the terms `|sin((i+1)θ)|` repeat
/// with period 6, 4, 3, 2, so the sums telescope to rational functions of
/// `|b|` and `c`. Elsewhere the value is an exact partial sum plus a
/// geometric tail envelope, rounded outward.
pub fn tilde_sums(quad: Quadratic) -> Result<SeriesBounds, SeriesError> {
    if !quad.is_expanding() {
        return Err(SeriesError::NotExpanding(quad));
    }
    let k = BigInt::from(quad.b.abs());
    let exact = |alpha: BigRational, beta: BigRational| SeriesBounds {
        alpha_tilde: alpha,
        beta_tilde: beta,
        exactness: Exactness::ExactClosedForm,
    };
    if quad.discriminant() >= 0 {
        return Ok(if quad.c > 0 {
            let den: BigInt = BigInt::from(quad.c) - &k + 1;
            exact(rat(&k - 1, den.clone()), rat(BigInt::one(), den))
        } else {
            let den: BigInt = BigInt::from(-quad.c) - &k - 1;
            exact(rat(&k + 1, den.clone()), rat(BigInt::one(), den))
        });
    }
    let angle = quad
        .spectral_data()
        .angle
        .expect("complex spectrum has an angle class");
    match angle {
        ComplexAngle::PiOver2 => {
            let den = BigInt::from(quad.c - 1);
            Ok(exact(
                rat(BigInt::one(), den.clone()),
                rat(BigInt::one(), den),
            ))
        }
        ComplexAngle::PiOver6 => {
            let den: BigInt = k.pow(6) - 27;
            let na = k.pow(5) * 3 + k.pow(4) * 6 + k.pow(3) * 9 + k.pow(2) * 9 + 27;
            let nb = (k.pow(4) + k.pow(3) * 3 + k.pow(2) * 6 + &k * 9 + 9) * 3;
            Ok(exact(rat(na, den.clone()), rat(nb, den)))
        }
        ComplexAngle::PiOver4 => {
            let den: BigInt = k.pow(4) - 4;
            let na = k.pow(3) * 2 + k.pow(2) * 2 + 4;
            let nb = k.pow(2) * 2 + &k * 4 + 4;
            Ok(exact(rat(na, den.clone()), rat(nb, den)))
        }
        ComplexAngle::PiOver3 => {
            let den: BigInt = k.pow(3) - 1;
            let na = k.pow(2) + 1;
            let nb = &k + 1;
            Ok(exact(rat(na, den.clone()), rat(nb, den)))
        }
        ComplexAngle::Other => {
            let mut seq = AlphaBetaSequence::new(quad)?;
            let mut partial_alpha = BigRational::zero();
            let mut partial_beta = BigRational::zero();
            let precision: BigRational = rat_i64(10).pow(12);
            let mut n = 0;
            loop {
                for i in n + 1..=n + 32 {
                    let (a, b) = seq.get(i);
                    partial_alpha += a.abs();
                    partial_beta += b.abs();
                }
                n += 32;
                let (ta, tb) = abs_tail_upper_bound(quad, n)?;
                let small_a = &ta * &precision < partial_alpha;
                let small_b = &tb * &precision < partial_beta;
                if (small_a && small_b) || n >= 4096 {
                    return Ok(SeriesBounds {
                        alpha_tilde: partial_alpha + ta,
                        beta_tilde: partial_beta + tb,
                        exactness: Exactness::RigorousUpperBound,
                    });
                }
            }
        }
    }
}
