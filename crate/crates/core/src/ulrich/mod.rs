//! Ulrich Mukai vectors and their existence per surface type.
//!
//! If `E` is Ulrich for `H = aA0 + bB0` then `chi(E(-H)) = chi(E(-2H)) = 0`,
//! which forces `v(E) = (r, D, 0) e^H` with `2 D.H = r H^2`, i.e.
//! `D = xA0 + yB0` on the line `xb + ya = rab`. Bogomolov for `E(-H)` keeps
//! `(x, y)` in the nef quadrant, leaving finitely many candidates per rank.

mod certificate;
mod engine;

pub use certificate::{replay, Step};
pub use engine::{
    decide, decide_with, every_rank_witness, EngineOptions, Fact, Hypotheses, Rule, Saturation,
    UlrichStatus, UlrichVerdict, Witness,
};

use num_integer::Integer;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::lattice::{MukaiVector, NumClass, Polarization};

/// A candidate Ulrich Mukai vector.
///
/// `solution` is `c1(E(-H)) = (x, y)`. For primitive `H`, `x = (k - r) a`
/// and `v = v^Ulrich(r, k) = (r, (k a, (3r - k) b), 2rab)`. For divisible
/// `H = g H0`, `k - r` counts steps of `(a/g, -b/g)` along the segment.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct UlrichCandidate {
    pub r: i64,
    pub k: i64,
    pub solution: NumClass,
    pub v: MukaiVector,
}

impl UlrichCandidate {
    /// `v^Ulrich(r, k)` for the given polarization.
    pub fn new(h: Polarization, r: i64, k: i64) -> Result<Self> {
        if r < 1 {
            return Err(Error::RankTooSmall { rank: r, requirement: "Ulrich rank must be >= 1" });
        }
        if k < r || k > 2 * r {
            return Err(Error::IndexOutOfRange { rank: r, k });
        }
        let (a, b) = (h.a(), h.b());
        let solution = NumClass::new((k - r) * a, (2 * r - k) * b);
        Ok(UlrichCandidate {
            r,
            k,
            solution,
            v: MukaiVector::new(r, NumClass::new(k * a, (3 * r - k) * b), 2 * r * a * b),
        })
    }
}

fn check_rank(r: i64) -> Result<()> {
    if r < 1 {
        return Err(Error::RankTooSmall { rank: r, requirement: "Ulrich rank must be >= 1" });
    }
    Ok(())
}

/// The `r + 1` candidates `v^Ulrich(r, k)`, `r <= k <= 2r`, for primitive `H`.
///
/// Integer solutions of `xb + ya = rab` are `(j a, (r - j) b)` because
/// `gcd(a, b) = 1`; Bogomolov on `(r, D, 0)` is `D^2 = 2 j (r - j) ab >= 0`,
/// so `0 <= j <= r`.
pub fn enumerate_candidates(h: Polarization, r: i64) -> Result<Vec<UlrichCandidate>> {
    check_rank(r)?;
    if !h.is_primitive() {
        return Err(Error::DivisiblePolarization(h.class()));
    }
    (r..=2 * r).map(|k| UlrichCandidate::new(h, r, k)).collect()
}

/// Candidates for an arbitrary ample `H`: lattice points of `xb + ya = rab`
/// in the nef quadrant, stepping by `(a/g, -b/g)` with `g = gcd(a, b)`.
pub fn enumerate_candidates_divisible(h: Polarization, r: i64) -> Result<Vec<UlrichCandidate>> {
    check_rank(r)?;
    let (a, b) = (h.a(), h.b());
    let g = a.gcd(&b);
    let step = NumClass::new(a / g, -b / g);
    Ok((0..=r * g)
        .map(|j| {
            let solution = NumClass::new(0, r * b) + j * step;
            let v = MukaiVector::new(r, solution, 0).twist(h.class());
            UlrichCandidate { r, k: r + j, solution, v }
        })
        .collect())
}
