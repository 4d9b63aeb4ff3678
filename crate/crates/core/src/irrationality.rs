//! Degree of irrationality.
//!
//! Types 1 and 2 carry a rational involution and have `irr = 2`; the others
//! have `irr >= 3` from the known lower bound. The upper bound `irr <= 3` comes
//! from a rank 2 bundle `E` with `v(E) = (2, D, 3)`, `D = 3A0 + 2B0`: its three
//! sections define a map to `P^2` of degree at most `c2(E) = 3`. This module
//! checks every numeric ingredient of that construction.

use serde::Serialize;

use crate::cite;
use crate::error::{Error, Result};
use crate::lattice::{l_of_v, MukaiVector, NumClass};
use crate::surface::SurfaceType;
use crate::walls::isotropic_wbn;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IrrResult {
    #[serde(rename = "type")]
    pub surface_type: SurfaceType,
    pub lower: i64,
    pub upper: i64,
    /// Set only when the bounds agree.
    pub value: Option<i64>,
    pub citations: Vec<&'static str>,
}

pub fn irr(t: SurfaceType) -> IrrResult {
    let (lower, upper, citations) = match t.id() {
        1 | 2 => (2, 2, vec![cite::IRR_INVOLUTION]),
        _ => (3, 3, vec![cite::IRR_LOWER_BOUND, cite::IRR_UPPER_BOUND]),
    };
    IrrResult { surface_type: t, lower, upper, value: (lower == upper).then_some(lower), citations }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CertificateChecks {
    #[serde(rename = "D_squared_is_12")]
    pub d_squared_is_12: bool,
    pub v_isotropic: bool,
    pub chi_is_3: bool,
    pub l_v_is_1: bool,
    #[serde(rename = "D12_primitive")]
    pub d12_primitive: bool,
    /// `h^2(E) = h^0(E*) = 0`, from stability and positive slope.
    pub h2_vanishes_reason: bool,
    /// `c2(E) = D^2/2 - chi = 3`.
    pub degree_bound: bool,
    /// `M_H(v)` has the weak Brill-Noether property, so `h^0(E) = chi = 3`.
    pub isotropic_wbn: bool,
    /// Good pair numerics: `chi(E) >= n + 1 = 3` for a map to `P^2`.
    pub good_pair_sections: bool,
}

impl CertificateChecks {
    fn named(&self) -> [(&'static str, bool); 9] {
        [
            ("D_squared_is_12", self.d_squared_is_12),
            ("v_isotropic", self.v_isotropic),
            ("chi_is_3", self.chi_is_3),
            ("l_v_is_1", self.l_v_is_1),
            ("D12_primitive", self.d12_primitive),
            ("h2_vanishes_reason", self.h2_vanishes_reason),
            ("degree_bound", self.degree_bound),
            ("isotropic_wbn", self.isotropic_wbn),
            ("good_pair_sections", self.good_pair_sections),
        ]
    }

    pub fn all_pass(&self) -> bool {
        self.named().iter().all(|(_, ok)| *ok)
    }

    pub fn first_failure(&self) -> Option<&'static str> {
        self.named().iter().find(|(_, ok)| !ok).map(|(name, _)| *name)
    }
}

/// A geometric step taken on citation rather than computed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Assumption {
    pub name: &'static str,
    pub cite: &'static str,
}

const ASSUMPTIONS: [Assumption; 3] = [
    Assumption { name: "E mu_H-stable with positive slope, so H^0(E*) = 0", cite: cite::STABLE_POSITIVE_SLOPE_H2 },
    Assumption { name: "(E, V) is a good pair with V = H^0(E)", cite: cite::GOOD_PAIR_DEGREE },
    Assumption { name: "projection by |D| is generically finite", cite: cite::DEGREE_12_GENERICALLY_FINITE },
];

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IrrCertificate {
    #[serde(rename = "type")]
    pub surface_type: SurfaceType,
    #[serde(rename = "D")]
    pub d: NumClass,
    pub v: MukaiVector,
    pub l: i64,
    pub checks: CertificateChecks,
    pub degree_bound: i64,
    pub assumptions: Vec<Assumption>,
}

pub const CERTIFICATE_D: NumClass = NumClass::new(3, 2);
pub const CERTIFICATE_V: MukaiVector = MukaiVector::new(2, CERTIFICATE_D, 3);

pub fn build_certificate(t: SurfaceType) -> Result<IrrCertificate> {
    certify(t, CERTIFICATE_D, CERTIFICATE_V)
}

fn certify(t: SurfaceType, d: NumClass, v: MukaiVector) -> Result<IrrCertificate> {
    let d_squared = d.square();
    let l = if v.is_primitive() { l_of_v(v, t)? } else { 0 };
    let wbn_holds = l != 0 && d_squared != 0 && v.square() == 0 && isotropic_wbn(v, 1, t)?.holds;
    let c2 = d_squared / 2 - v.s;
    let checks = CertificateChecks {
        d_squared_is_12: d_squared == 12,
        v_isotropic: v.square() == 0,
        chi_is_3: v.chi() == 3,
        l_v_is_1: l == 1,
        d12_primitive: d_squared == 12 && check_deg12_primitive(d)?,
        h2_vanishes_reason: v.r > 0 && v.c1.dot(NumClass::new(1, 1)) > 0,
        degree_bound: c2 == 3,
        isotropic_wbn: wbn_holds,
        good_pair_sections: v.chi() >= 3,
    };
    if let Some(name) = checks.first_failure() {
        return Err(Error::CertificateCheckFailed(name));
    }
    Ok(IrrCertificate {
        surface_type: t,
        d,
        v,
        l,
        checks,
        degree_bound: c2,
        assumptions: ASSUMPTIONS.to_vec(),
    })
}

/// Whether a class of square 12 is primitive. In an even lattice `D = n D'`
/// with `n >= 2` would need `n^2 | 12` and `(D')^2 = 12 / n^2` even, which
/// fails for `n = 2`, so the answer is always `true`.
pub fn check_deg12_primitive(d: NumClass) -> Result<bool> {
    let square = d.square();
    if square != 12 {
        return Err(Error::WrongDegree { class: d, square });
    }
    Ok(d.is_primitive())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ScanRow {
    pub d_squared: i64,
    pub s: i64,
    pub feasible: bool,
    pub c2: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MinimalityReport {
    pub rows: Vec<ScanRow>,
    pub min_c2: i64,
    pub minimizers: Vec<(i64, i64)>,
    pub holds: bool,
    pub citation: &'static str,
}

/// Scans even `D^2` in `2..=40` and `3 <= s <= D^2 / 2` for the smallest
/// `c2 = D^2/2 - s` among rows with `D^2 - 4s >= 0`.
pub fn minimality_check() -> MinimalityReport {
    let rows: Vec<ScanRow> = (2..=40)
        .step_by(2)
        .flat_map(|d2| {
            (3..=d2 / 2).map(move |s| ScanRow { d_squared: d2, s, feasible: d2 - 4 * s >= 0, c2: d2 / 2 - s })
        })
        .collect();
    let min_c2 = rows.iter().filter(|r| r.feasible).map(|r| r.c2).min().expect("D^2 = 12, s = 3 is feasible");
    let minimizers: Vec<(i64, i64)> =
        rows.iter().filter(|r| r.feasible && r.c2 == min_c2).map(|r| (r.d_squared, r.s)).collect();
    let holds = min_c2 == 3 && minimizers == [(12, 3)];
    MinimalityReport { rows, min_c2, minimizers, holds, citation: cite::C2_MINIMALITY }
}
