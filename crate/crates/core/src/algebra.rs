//! Integer quadratics and the companion-matrix action on the lattice
//! spanned by `{v, Av}`.
//!
//! Everything in this module is exact integer arithmetic; no floating point
//! enters any decision path.

use std::fmt;
use std::ops::{Add, Neg, Sub};

/// Monic integer quadratic `x^2 + b x + c`, the characteristic polynomial of
/// the expanding matrix under study. The matrix is only ever needed through
/// its action on lattice coordinates, so the coefficient pair is the whole
/// parameterization.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Quadratic {
    pub b: i64,
    pub c: i64,
}

impl Quadratic {
    pub const fn new(b: i64, c: i64) -> Self {
        Quadratic { b, c }
    }

    /// Discriminant `b^2 - 4c`.
    pub fn discriminant(self) -> i128 {
        let b = self.b as i128;
        b * b - 4 * self.c as i128
    }

    /// Coefficients of the sign-flipped matrix `-A`, i.e. `(-b, c)`.
    ///
    /// This is an involution, and connectedness questions are invariant
    /// under it: a digit expansion for one side maps to the other by
    /// negating every odd-position coefficient.
    pub fn mirror(self) -> Self {
        Quadratic {
            b: -self.b,
            c: self.c,
        }
    }

    /// True iff both roots of `x^2 + bx + c` lie strictly outside the unit
    /// circle.
    ///
    /// Decided by the Schur-Cohn conditions applied to the reversed
    /// polynomial `c x^2 + b x + 1`, whose roots are the reciprocals. Over
    /// the integers the conditions collapse to `|c| >= 2` and
    /// `|b| <= |c + 1| - 1`.
    pub fn is_expanding(self) -> bool {
        let b = (self.b as i128).abs();
        let c = self.c as i128;
        c.abs() >= 2 && b < (c + 1).abs()
    }

    /// True iff both roots have modulus at least 2 (equality allowed).
    ///
    /// For a complex pair the common modulus is `sqrt(c)`, so the test is
    /// `c >= 4`. For real roots, integer sign tests of `f(2)`, `f(-2)` and
    /// the vertex `-b/2` decide whether the open interval `(-2, 2)` is
    /// root-free.
    pub fn min_eigen_modulus_at_least_two(self) -> bool {
        let b = self.b as i128;
        let c = self.c as i128;
        if self.discriminant() < 0 {
            return c >= 4;
        }
        let at_two = 4 + 2 * b + c;
        let at_minus_two = 4 - 2 * b + c;
        // Both roots >= 2, both <= -2, or one on each side of (-2, 2).
        (at_two >= 0 && b <= -4)
            || (at_minus_two >= 0 && b >= 4)
            || (at_two <= 0 && at_minus_two <= 0)
    }

    /// Companion-matrix action on lattice coordinates:
    /// `A (γ v + δ Av) = -cδ v + (γ - bδ) Av`.
    pub fn apply_a(self, l: LatticePoint) -> LatticePoint {
        LatticePoint {
            gamma: -self.c * l.delta,
            delta: l.gamma - self.b * l.delta,
        }
    }

    /// Root-type and angle classification used to dispatch the closed-form
    /// machinery.
    pub fn spectral_data(self) -> SpectralData {
        let delta = self.discriminant();
        if delta > 0 {
            return SpectralData {
                delta,
                root_kind: RootKind::RealDistinct,
                modulus_squared: None,
                angle: None,
            };
        }
        if delta == 0 {
            return SpectralData {
                delta,
                root_kind: RootKind::RealDouble,
                modulus_squared: None,
                angle: None,
            };
        }
        let b2 = (self.b as i128) * (self.b as i128);
        let c = self.c as i128;
        let angle = if self.b == 0 {
            ComplexAngle::PiOver2
        } else if b2 == 3 * c {
            ComplexAngle::PiOver6
        } else if b2 == 2 * c {
            ComplexAngle::PiOver4
        } else if b2 == c {
            ComplexAngle::PiOver3
        } else {
            ComplexAngle::Other
        };
        SpectralData {
            delta,
            root_kind: RootKind::Complex,
            modulus_squared: Some(self.c),
            angle: Some(angle),
        }
    }
}

impl fmt::Display for Quadratic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "x^2")?;
        match self.b {
            0 => {}
            1 => write!(f, " + x")?,
            -1 => write!(f, " - x")?,
            b if b > 0 => write!(f, " + {b}x")?,
            b => write!(f, " - {}x", -b)?,
        }
        match self.c {
            0 => {}
            c if c > 0 => write!(f, " + {c}")?,
            c => write!(f, " - {}", -c)?,
        }
        Ok(())
    }
}

/// Root type of the quadratic.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RootKind {
    RealDistinct,
    RealDouble,
    Complex,
}

/// Argument of the complex roots when it is one of the exactly-solved
/// angles, classified by the integer ratio `b^2 : c`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ComplexAngle {
    /// `b^2 = 3c`
    PiOver6,
    /// `b^2 = 2c`
    PiOver4,
    /// `b^2 = c`
    PiOver3,
    /// `b = 0`
    PiOver2,
    Other,
}

/// Spectral classification of a quadratic: discriminant, root type, and for
/// complex pairs the squared modulus (`= c`) and the angle class.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SpectralData {
    pub delta: i128,
    pub root_kind: RootKind,
    pub modulus_squared: Option<i64>,
    pub angle: Option<ComplexAngle>,
}

/// Integer coordinates `(γ, δ)` of the lattice point `γ v + δ Av`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LatticePoint {
    pub gamma: i64,
    pub delta: i64,
}

impl LatticePoint {
    pub const ZERO: LatticePoint = LatticePoint { gamma: 0, delta: 0 };

    pub const fn new(gamma: i64, delta: i64) -> Self {
        LatticePoint { gamma, delta }
    }
}

impl Add for LatticePoint {
    type Output = LatticePoint;
    fn add(self, rhs: LatticePoint) -> LatticePoint {
        LatticePoint::new(self.gamma + rhs.gamma, self.delta + rhs.delta)
    }
}

impl Sub for LatticePoint {
    type Output = LatticePoint;
    fn sub(self, rhs: LatticePoint) -> LatticePoint {
        LatticePoint::new(self.gamma - rhs.gamma, self.delta - rhs.delta)
    }
}

impl Neg for LatticePoint {
    type Output = LatticePoint;
    fn neg(self) -> LatticePoint {
        LatticePoint::new(-self.gamma, -self.delta)
    }
}

impl fmt::Display for LatticePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.gamma, self.delta)
    }
}
