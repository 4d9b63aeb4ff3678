//! The seven Bagnera-de Franchis families and their discrete invariants.
//!
//! Everything here is classification data. The table is hard-coded and the
//! cover combinatorics are derived from it: a family is determined by the
//! pair `(ord(omega_S), lambda_S)`, which is what makes the targets of the
//! intermediate covers computable.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::lattice::NumClass;

/// One of the seven families of bielliptic surfaces, numbered 1..=7.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SurfaceType(u8);

impl SurfaceType {
    pub fn new(id: i64) -> Result<Self> {
        if (1..=7).contains(&id) {
            Ok(SurfaceType(id as u8))
        } else {
            Err(Error::InvalidSurfaceType(id))
        }
    }

    pub fn id(self) -> u8 {
        self.0
    }

    pub fn all() -> impl Iterator<Item = SurfaceType> {
        (1..=7).map(SurfaceType)
    }

    pub fn invariants(self) -> &'static SurfaceInvariants {
        &TABLE[usize::from(self.0) - 1]
    }

    pub fn canonical_order(self) -> i64 {
        self.invariants().canonical_order
    }

    pub fn lambda(self) -> i64 {
        self.invariants().lambda
    }

    pub fn torsion_order(self) -> i64 {
        self.invariants().torsion_order
    }

    /// Types 1, 2, 3, 5: `H^2(S, Z)` has non-trivial torsion.
    pub fn has_torsion(self) -> bool {
        self.torsion_order() > 1
    }

    /// The family with the given canonical order and lambda, if any.
    pub fn from_orders(canonical_order: i64, lambda: i64) -> Option<SurfaceType> {
        SurfaceType::all()
            .find(|t| t.canonical_order() == canonical_order && t.lambda() == lambda)
    }
}

impl fmt::Display for SurfaceType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl Serialize for SurfaceType {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_u8(self.0)
    }
}

/// Finite abelian group given by its cyclic factors; the empty list is the trivial group.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TorsionStructure(pub &'static [i64]);

impl TorsionStructure {
    pub fn order(&self) -> i64 {
        self.0.iter().product()
    }
}

impl Serialize for TorsionStructure {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.0.serialize(serializer)
    }
}

impl fmt::Display for TorsionStructure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.0.iter().map(|n| format!("Z/{n}")).collect();
        write!(f, "{}", parts.join(" x "))
    }
}

/// A row of the invariant table.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SurfaceInvariants {
    /// `|G|`.
    pub group_order: i64,
    /// `ord(omega_S)`.
    pub canonical_order: i64,
    /// `lambda_S = |G| / ord(omega_S)`.
    pub lambda: i64,
    /// Multiplicities of the multiple fibres of `S -> P^1`.
    pub multiplicities: &'static [i64],
    /// `|H^2(S, Z)_tor|`.
    pub torsion_order: i64,
    pub torsion_structure: TorsionStructure,
}

const fn row(
    group_order: i64,
    canonical_order: i64,
    lambda: i64,
    multiplicities: &'static [i64],
    torsion: &'static [i64],
    torsion_order: i64,
) -> SurfaceInvariants {
    SurfaceInvariants {
        group_order,
        canonical_order,
        lambda,
        multiplicities,
        torsion_order,
        torsion_structure: TorsionStructure(torsion),
    }
}

/// Rows for types 1..=7 in order.
pub static TABLE: [SurfaceInvariants; 7] = [
    row(2, 2, 1, &[2, 2, 2, 2], &[2, 2], 4),
    row(4, 2, 2, &[2, 2, 2, 2], &[2], 2),
    row(4, 4, 1, &[2, 4, 4], &[2], 2),
    row(8, 4, 2, &[2, 4, 4], &[], 1),
    row(3, 3, 1, &[3, 3, 3], &[3], 3),
    row(9, 3, 3, &[3, 3, 3], &[], 1),
    row(6, 6, 1, &[2, 3, 6], &[], 1),
];

pub fn invariants(t: SurfaceType) -> &'static SurfaceInvariants {
    t.invariants()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CoverKind {
    CanonicalCover,
    IntermediateOrderQuotient,
    IntermediateSplit,
}

/// What sits on top of an etale cover of a bielliptic surface.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case", tag = "kind")]
pub enum CoverTarget {
    Bielliptic { surface_type: SurfaceType },
    /// The canonical cover. Its fibre classes `A, B` meet with `A.B = form_scale`.
    AbelianSurface { form_scale: i64 },
}

/// An etale cover `S' -> S` together with the pullback of the generators `A0, B0`.
///
/// The pullback acts diagonally: `A0 -> a_factor * A'`, `B0 -> b_factor * B'`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CoverDescriptor {
    pub kind: CoverKind,
    pub degree: i64,
    pub pullback_a0: i64,
    pub pullback_b0: i64,
    pub target: CoverTarget,
}

impl CoverDescriptor {
    pub fn canonical(t: SurfaceType) -> Self {
        let ord = t.canonical_order();
        let lambda = t.lambda();
        CoverDescriptor {
            kind: CoverKind::CanonicalCover,
            degree: ord,
            pullback_a0: 1,
            pullback_b0: ord / lambda,
            target: CoverTarget::AbelianSurface { form_scale: lambda },
        }
    }

    pub fn pullback_class(&self, c: NumClass) -> NumClass {
        NumClass::new(self.pullback_a0 * c.a, self.pullback_b0 * c.b)
    }

    /// Intersection number of two classes written in the target's basis.
    pub fn target_intersect(&self, x: NumClass, y: NumClass) -> i64 {
        self.form_scale() * x.dot(y)
    }

    pub fn form_scale(&self) -> i64 {
        match self.target {
            CoverTarget::Bielliptic { .. } => 1,
            CoverTarget::AbelianSurface { form_scale } => form_scale,
        }
    }
}

fn proper_divisors(n: i64) -> impl Iterator<Item = i64> {
    (2..n).filter(move |d| n % d == 0)
}

/// Every intermediate cover plus the canonical cover, in a fixed order:
/// composite-order quotients by increasing `d`, then the split cover, then
/// the canonical cover.
pub fn intermediate_covers(t: SurfaceType) -> Vec<CoverDescriptor> {
    let ord = t.canonical_order();
    let lambda = t.lambda();
    let mut covers = Vec::new();
    for d in proper_divisors(ord) {
        let target = SurfaceType::from_orders(ord / d, lambda)
            .expect("every (ord/d, lambda) below a family is a family");
        covers.push(CoverDescriptor {
            kind: CoverKind::IntermediateOrderQuotient,
            degree: d,
            pullback_a0: 1,
            pullback_b0: d,
            target: CoverTarget::Bielliptic { surface_type: target },
        });
    }
    if lambda > 1 {
        let target = SurfaceType::from_orders(ord, 1).expect("split family exists");
        covers.push(CoverDescriptor {
            kind: CoverKind::IntermediateSplit,
            degree: lambda,
            pullback_a0: lambda,
            pullback_b0: 1,
            target: CoverTarget::Bielliptic { surface_type: target },
        });
    }
    covers.push(CoverDescriptor::canonical(t));
    covers
}

/// Pullback along the isogeny `A x B -> X~` of degree `lambda_S` from the
/// canonical cover to the product of the two elliptic curves.
pub fn product_isogeny_pullback(t: SurfaceType, c: NumClass) -> NumClass {
    NumClass::new(t.lambda() * c.a, t.lambda() * c.b)
}
