//! Exact arithmetic on `Num(S) = Z A0 + Z B0` and on Mukai vectors.
//!
//! `Num(S)` is the hyperbolic plane: `(a, b).(c, d) = ad + bc`. The Todd class
//! of a bielliptic surface is trivial, so a Mukai vector is the Chern character
//! `(r, c1, ch2)` and `chi = ch2`. Because `c1^2` is always even every component
//! stays integral, including after twists.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::surface::{CoverDescriptor, SurfaceType};

/// A numerical class `a A0 + b B0`. Serialized as `[a, b]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(from = "[i64; 2]", into = "[i64; 2]")]
pub struct NumClass {
    pub a: i64,
    pub b: i64,
}

impl NumClass {
    pub const ZERO: NumClass = NumClass { a: 0, b: 0 };

    pub const fn new(a: i64, b: i64) -> Self {
        NumClass { a, b }
    }

    pub fn dot(self, other: NumClass) -> i64 {
        self.a * other.b + self.b * other.a
    }

    pub fn square(self) -> i64 {
        2 * self.a * self.b
    }

    /// `gcd(a, b)`, zero for the zero class.
    pub fn content(self) -> i64 {
        self.a.gcd(&self.b)
    }

    pub fn is_primitive(self) -> bool {
        self.content() == 1
    }

    pub fn is_zero(self) -> bool {
        self == NumClass::ZERO
    }
}

impl From<[i64; 2]> for NumClass {
    fn from([a, b]: [i64; 2]) -> Self {
        NumClass { a, b }
    }
}

impl From<NumClass> for [i64; 2] {
    fn from(c: NumClass) -> Self {
        [c.a, c.b]
    }
}

impl Add for NumClass {
    type Output = NumClass;
    fn add(self, o: NumClass) -> NumClass {
        NumClass::new(self.a + o.a, self.b + o.b)
    }
}

impl Sub for NumClass {
    type Output = NumClass;
    fn sub(self, o: NumClass) -> NumClass {
        NumClass::new(self.a - o.a, self.b - o.b)
    }
}

impl Neg for NumClass {
    type Output = NumClass;
    fn neg(self) -> NumClass {
        NumClass::new(-self.a, -self.b)
    }
}

impl Mul<NumClass> for i64 {
    type Output = NumClass;
    fn mul(self, c: NumClass) -> NumClass {
        NumClass::new(self * c.a, self * c.b)
    }
}

impl fmt::Display for NumClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{}", self.a, self.b)
    }
}

fn parse_ints(s: &str, n: usize, expected: &'static str) -> Result<Vec<i64>> {
    let err = || Error::Parse { input: s.to_string(), expected };
    let parts: Vec<i64> = s
        .split(',')
        .map(|p| p.trim().parse::<i64>())
        .collect::<std::result::Result<_, _>>()
        .map_err(|_| err())?;
    if parts.len() != n {
        return Err(err());
    }
    Ok(parts)
}

/// Parses the literal `a,b`.
impl FromStr for NumClass {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let p = parse_ints(s, 2, "a numerical class `a,b`")?;
        Ok(NumClass::new(p[0], p[1]))
    }
}

pub fn intersect(x: NumClass, y: NumClass) -> i64 {
    x.dot(y)
}

/// `(r, c1, s)` with `s = ch2 = chi`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct MukaiVector {
    pub r: i64,
    pub c1: NumClass,
    pub s: i64,
}

impl MukaiVector {
    pub const fn new(r: i64, c1: NumClass, s: i64) -> Self {
        MukaiVector { r, c1, s }
    }

    /// Shorthand for `(r, a A0 + b B0, s)`.
    pub const fn from_parts(r: i64, a: i64, b: i64, s: i64) -> Self {
        MukaiVector::new(r, NumClass::new(a, b), s)
    }

    /// `v(O_S) = (1, 0, 0)`.
    pub const STRUCTURE_SHEAF: MukaiVector = MukaiVector::from_parts(1, 0, 0, 0);

    /// Line bundle `O_S(D)`: `(1, D, D^2/2)`.
    pub fn line_bundle(d: NumClass) -> Self {
        MukaiVector::new(1, d, d.a * d.b)
    }

    pub fn pair(self, w: MukaiVector) -> i64 {
        self.c1.dot(w.c1) - self.r * w.s - w.r * self.s
    }

    /// `v^2 = c1^2 - 2rs`.
    pub fn square(self) -> i64 {
        self.pair(self)
    }

    pub fn chi(self) -> i64 {
        self.s
    }

    /// Product with `e^D = (1, D, D^2/2)` in the cohomology ring.
    pub fn twist(self, d: NumClass) -> MukaiVector {
        MukaiVector::new(
            self.r,
            self.c1 + self.r * d,
            self.s + self.c1.dot(d) + self.r * (d.a * d.b),
        )
    }

    /// `v(E*) = (r, -c1, s)`.
    pub fn dual(self) -> MukaiVector {
        MukaiVector::new(self.r, -self.c1, self.s)
    }

    /// `gcd(r, a, b, s)`.
    pub fn content(self) -> i64 {
        [self.c1.a, self.c1.b, self.s].iter().fold(self.r, |g, x| g.gcd(x))
    }

    pub fn is_primitive(self) -> bool {
        self.content() == 1
    }

    pub fn scale(self, n: i64) -> MukaiVector {
        MukaiVector::new(n * self.r, n * self.c1, n * self.s)
    }

    /// Splits `v = n * v0` with `v0` primitive and `n >= 1`. The zero vector
    /// is returned unchanged with `n = 0`.
    pub fn primitive_part(self) -> (i64, MukaiVector) {
        let n = self.content();
        if n == 0 {
            return (0, self);
        }
        (n, MukaiVector::new(self.r / n, NumClass::new(self.c1.a / n, self.c1.b / n), self.s / n))
    }
}

impl fmt::Display for MukaiVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{},{},{}", self.r, self.c1.a, self.c1.b, self.s)
    }
}

/// Parses the literal `r,a,b,s`.
impl FromStr for MukaiVector {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let p = parse_ints(s, 4, "a Mukai vector `r,a,b,s`")?;
        Ok(MukaiVector::from_parts(p[0], p[1], p[2], p[3]))
    }
}

/// An ample class: both coefficients positive.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(into = "[i64; 2]")]
pub struct Polarization(NumClass);

impl Polarization {
    pub fn new(cls: NumClass) -> Result<Self> {
        if cls.a > 0 && cls.b > 0 {
            Ok(Polarization(cls))
        } else {
            Err(Error::NotAmple(cls))
        }
    }

    pub fn class(self) -> NumClass {
        self.0
    }

    pub fn a(self) -> i64 {
        self.0.a
    }

    pub fn b(self) -> i64 {
        self.0.b
    }

    pub fn is_primitive(self) -> bool {
        self.0.is_primitive()
    }
}

impl From<Polarization> for [i64; 2] {
    fn from(h: Polarization) -> Self {
        h.0.into()
    }
}

impl fmt::Display for Polarization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

pub fn mukai_pair(v: MukaiVector, w: MukaiVector) -> i64 {
    v.pair(w)
}

pub fn chi(v: MukaiVector) -> i64 {
    v.chi()
}

pub fn twist(v: MukaiVector, d: NumClass) -> MukaiVector {
    v.twist(d)
}

/// Numerical Mukai vector of `E* (x) omega_S (x) O(3H)`; `omega_S` is
/// numerically trivial.
pub fn serre_dual_ulrich(v: MukaiVector, h: Polarization) -> MukaiVector {
    v.dual().twist(3 * h.class())
}

/// `(r, pi^* c1, deg * s)`, with `c1` expressed in the cover's basis.
pub fn pullback_cover(v: MukaiVector, cover: &CoverDescriptor) -> MukaiVector {
    MukaiVector::new(v.r, cover.pullback_class(v.c1), cover.degree * v.s)
}

/// Mukai pairing on the cover, where the fibre classes meet with multiplicity
/// `cover.form_scale()`.
pub fn cover_pair(cover: &CoverDescriptor, v: MukaiVector, w: MukaiVector) -> i64 {
    cover.target_intersect(v.c1, w.c1) - v.r * w.s - w.r * v.s
}

pub fn is_primitive(v: MukaiVector) -> bool {
    v.is_primitive()
}

/// `l(v) = gcd(r, a, (ord/lambda) b, ord * s)`.
pub fn l_of_v(v: MukaiVector, t: SurfaceType) -> Result<i64> {
    if !v.is_primitive() {
        return Err(Error::NotPrimitive(v));
    }
    let ord = t.canonical_order();
    let b_factor = ord / t.lambda();
    Ok([v.c1.a, b_factor * v.c1.b, ord * v.s]
        .iter()
        .fold(v.r, |g, x| g.gcd(x)))
}
