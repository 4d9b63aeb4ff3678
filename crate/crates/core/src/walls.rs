//! Bogomolov, walls in the ample cone and statements about moduli spaces.
//!
//! A wall for `v = (r, c1, s)` comes from a splitting `v = v' + v''` with
//! `0 < r' < r`, both pieces satisfying Bogomolov, and equal `H`-slopes. With
//! `xi = r' c1 - r c1'` the slopes agree iff `xi . H = 0`, and
//!
//! ```text
//! r' r'' v^2 = r r'' v'^2 + r r' v''^2 - xi^2
//! ```
//!
//! so `0 < -xi^2 <= r' r'' v^2 <= (r^2 / 4) v^2`. In the hyperbolic plane
//! `xi . H = 0` with `H` ample forces `xi` to have coefficients of opposite
//! signs, hence `xi^2 < 0` unless `xi = 0`.

use std::fmt;

use num_integer::Integer;
use serde::{Serialize, Serializer};

use crate::cite;
use crate::error::{Error, Result};
use crate::lattice::{l_of_v, MukaiVector, NumClass, Polarization};
use crate::surface::SurfaceType;

/// A wall `{H : xi . H = 0}`; `xi` is primitive with `xi.a > 0 > xi.b`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Wall {
    pub xi: NumClass,
    /// Primitive ample class on the wall, `(xi.a, -xi.b)`.
    pub ample_direction: NumClass,
}

impl Wall {
    fn from_direction(xi: NumClass) -> Self {
        Wall { xi, ample_direction: NumClass::new(xi.a, -xi.b) }
    }

    pub fn contains(&self, h: NumClass) -> bool {
        self.xi.dot(h) == 0
    }
}

/// A numerical splitting realizing a wall.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Splitting {
    pub sub: MukaiVector,
    pub quotient: MukaiVector,
    /// `r' c1 - r c1'`; a positive multiple of the wall's `xi`.
    pub xi: NumClass,
}

pub fn bogomolov_ok(v: MukaiVector) -> Result<bool> {
    if v.r < 1 {
        return Err(Error::RankTooSmall { rank: v.r, requirement: "Bogomolov needs r >= 1" });
    }
    Ok(v.square() >= 0)
}

/// `4 (-xi^2) <= r^2 v^2`.
fn within_bound(v: MukaiVector, xi: NumClass) -> bool {
    4 * -xi.square() <= v.r * v.r * v.square()
}

/// Largest `s` with `c^2 - 2 r s >= 0`.
fn max_chi(rank: i64, c: NumClass) -> i64 {
    Integer::div_floor(&c.square(), &(2 * rank))
}

/// Looks for `v = v' + v''` with `r' c1 - r c1' = xi` and both pieces
/// satisfying Bogomolov.
pub fn splitting_for(v: MukaiVector, xi: NumClass) -> Option<Splitting> {
    for r1 in 1..v.r {
        let num = r1 * v.c1 - xi;
        if num.a % v.r != 0 || num.b % v.r != 0 {
            continue;
        }
        let c1_sub = NumClass::new(num.a / v.r, num.b / v.r);
        let c1_quo = v.c1 - c1_sub;
        let r2 = v.r - r1;
        let s_sub = max_chi(r1, c1_sub);
        let s_quo = v.s - s_sub;
        if s_quo <= max_chi(r2, c1_quo) {
            return Some(Splitting {
                sub: MukaiVector::new(r1, c1_sub, s_sub),
                quotient: MukaiVector::new(r2, c1_quo, s_quo),
                xi,
            });
        }
    }
    None
}

/// A splitting realizing the primitive direction `xi0`, through some
/// multiple `m xi0` within the Bogomolov bound.
fn realize_direction(v: MukaiVector, xi0: NumClass) -> Option<Splitting> {
    (1..)
        .map(|m| m * xi0)
        .take_while(|&xi| within_bound(v, xi))
        .find_map(|xi| splitting_for(v, xi))
}

fn check_wall_preconditions(v: MukaiVector) -> Result<()> {
    if v.r < 1 {
        return Err(Error::RankTooSmall { rank: v.r, requirement: "walls need r >= 1" });
    }
    let square = v.square();
    if square < 0 {
        return Err(Error::NegativeSquare { v, square });
    }
    Ok(())
}

/// Every wall for `v`, sorted by `xi`. Rank one vectors have none.
pub fn enumerate_walls(v: MukaiVector) -> Result<Vec<Wall>> {
    check_wall_preconditions(v)?;
    if v.r < 2 {
        return Ok(Vec::new());
    }
    // -xi^2 = 2 x |y| <= r^2 v^2 / 4
    let max_product = v.r * v.r * v.square() / 8;
    let mut walls = Vec::new();
    for x in 1..=max_product {
        for y in 1..=max_product / x {
            if x.gcd(&y) != 1 {
                continue;
            }
            let xi0 = NumClass::new(x, -y);
            if realize_direction(v, xi0).is_some() {
                walls.push(Wall::from_direction(xi0));
            }
        }
    }
    walls.sort();
    Ok(walls)
}

/// Walls whose `xi` has both coefficients bounded by `bound` in absolute value.
pub fn enumerate_walls_in_box(v: MukaiVector, bound: i64) -> Result<Vec<Wall>> {
    Ok(enumerate_walls(v)?
        .into_iter()
        .filter(|w| w.xi.a.abs() <= bound && w.xi.b.abs() <= bound)
        .collect())
}

/// The wall through `h`, if `h` lies on one. At most one wall passes
/// through a given ray.
pub fn wall_through(h: Polarization, v: MukaiVector) -> Option<(Wall, Splitting)> {
    if v.r < 2 || v.square() < 0 {
        return None;
    }
    let g = h.a().gcd(&h.b());
    let xi0 = NumClass::new(h.a() / g, -h.b() / g);
    realize_direction(v, xi0).map(|s| (Wall::from_direction(xi0), s))
}

pub fn is_generic(h: Polarization, v: MukaiVector) -> bool {
    wall_through(h, v).is_none()
}

/// Three-valued flag, serialized as `true`, `false` or `"UNKNOWN"`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Tri {
    True,
    False,
    Unknown,
}

impl Tri {
    pub fn known(self) -> Option<bool> {
        match self {
            Tri::True => Some(true),
            Tri::False => Some(false),
            Tri::Unknown => None,
        }
    }
}

impl Serialize for Tri {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Tri::True => serializer.serialize_bool(true),
            Tri::False => serializer.serialize_bool(false),
            Tri::Unknown => serializer.serialize_str("UNKNOWN"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NonemptinessVerdict {
    pub nonempty: bool,
    pub stable_nonempty: Tri,
    pub reason: Vec<&'static str>,
}

/// Non-emptiness of `M_H(v)` and of its `mu_H`-stable locus for generic `H`.
pub fn moduli_nonempty(
    v: MukaiVector,
    h: Polarization,
    t: SurfaceType,
) -> Result<NonemptinessVerdict> {
    if v.r < 1 {
        return Err(Error::RankTooSmall { rank: v.r, requirement: "moduli of sheaves need r >= 1" });
    }
    if let Some((wall, _)) = wall_through(h, v) {
        return Err(Error::NotGeneric { polarization: h.class(), v, wall: wall.xi });
    }
    let square = v.square();
    let nonempty = square >= 0;
    let mut reason = vec![cite::BOGOMOLOV];
    if nonempty {
        reason.push(cite::NONEMPTY_GENERIC);
    }
    let stable_nonempty = if !nonempty {
        Tri::False
    } else if square == 0 {
        let (n, v0) = v.primitive_part();
        let l = l_of_v(v0, t)?;
        let ord = t.canonical_order();
        if ord % (n * l) == 0 && v0.c1.square() != 0 {
            reason.push(cite::ISOTROPIC_STABLE_EXISTS);
            Tri::True
        } else if ord % (n * l) != 0 && v0.r == 1 {
            reason.push(cite::ISOTROPIC_DIVISIBLE_EMPTY);
            Tri::False
        } else {
            Tri::Unknown
        }
    } else {
        Tri::Unknown
    };
    Ok(NonemptinessVerdict { nonempty, stable_nonempty, reason })
}

/// Number of irreducible components of `M_H(r, D, s)`: the order of
/// `H^2(S, Z)_tor`, under `r >= 2`, `gcd(r, D) = gcd(r, ord(omega_S)) = 1`
/// and `D^2 - 2rs > 0`.
pub fn component_count(v: MukaiVector, t: SurfaceType) -> Result<i64> {
    if v.r < 2 {
        return Err(Error::RankTooSmall { rank: v.r, requirement: "component count needs r >= 2" });
    }
    let g = v.r.gcd(&v.c1.content());
    if g != 1 {
        return Err(Error::RankNotCoprimeToClass { rank: v.r, class: v.c1, gcd: g });
    }
    let ord = t.canonical_order();
    let g = v.r.gcd(&ord);
    if g != 1 {
        return Err(Error::RankNotCoprimeToCanonicalOrder { rank: v.r, order: ord, gcd: g });
    }
    let disc = v.square();
    if disc <= 0 {
        return Err(Error::NonPositiveDiscriminant(disc));
    }
    Ok(t.torsion_order())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct IsotropicWbn {
    /// `true`: `M_H(n v)` has the weak Brill-Noether property. `false` only
    /// means the criterion does not apply.
    pub holds: bool,
    pub l: i64,
    pub citation: &'static str,
}

impl fmt::Display for IsotropicWbn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (l = {}; {})", self.holds, self.l, self.citation)
    }
}

/// Weak Brill-Noether for `M_H(n v)` with `v` primitive isotropic and
/// `c1(v)^2 != 0`: holds when `n l(v) | ord(omega_S)`.
pub fn isotropic_wbn(v: MukaiVector, n: i64, t: SurfaceType) -> Result<IsotropicWbn> {
    if v.r < 1 {
        return Err(Error::RankTooSmall { rank: v.r, requirement: "isotropic criterion needs r >= 1" });
    }
    if n < 1 {
        return Err(Error::RankTooSmall { rank: n, requirement: "multiplicity n must be positive" });
    }
    if !v.is_primitive() {
        return Err(Error::NotPrimitive(v));
    }
    if v.square() != 0 {
        return Err(Error::NotIsotropic(v, v.square()));
    }
    if v.c1.square() == 0 {
        return Err(Error::DegenerateFirstChern(v));
    }
    let l = l_of_v(v, t)?;
    Ok(IsotropicWbn { holds: t.canonical_order() % (n * l) == 0, l, citation: cite::ISOTROPIC_WBN })
}
