//! Built-in invariant suites, each small enough to run in well under a second.

use clap::ValueEnum;
use num_integer::Integer;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use serde::Serialize;

use crate::irrationality::{build_certificate, check_deg12_primitive, irr, minimality_check};
use crate::lattice::{serre_dual_ulrich, MukaiVector, NumClass, Polarization};
use crate::surface::{SurfaceInvariants, SurfaceType, TABLE};
use crate::ulrich::{
    decide, enumerate_candidates, every_rank_witness, replay, EngineOptions, Fact, Hypotheses,
    Saturation, UlrichStatus,
};
use crate::walls::enumerate_walls;
use crate::wbn::{wbn, WbnStatus};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Table,
    Lattice,
    Wbn,
    Walls,
    Ulrich,
    Engine,
    Irr,
}

impl Suite {
    pub const ALL: [Suite; 7] =
        [Suite::Table, Suite::Lattice, Suite::Wbn, Suite::Walls, Suite::Ulrich, Suite::Engine, Suite::Irr];
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub suite: Suite,
    pub checks: usize,
    pub failures: Vec<String>,
}

impl SuiteReport {
    fn new(suite: Suite) -> Self {
        SuiteReport { suite, checks: 0, failures: Vec::new() }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok && self.failures.len() < 20 {
            self.failures.push(what());
        }
    }
}

pub fn run_suites(only: Option<Suite>) -> Vec<SuiteReport> {
    Suite::ALL.iter().filter(|s| only.is_none_or(|o| o == **s)).map(|&s| run_suite(s)).collect()
}

pub fn run_suite(suite: Suite) -> SuiteReport {
    match suite {
        Suite::Table => table_suite(&TABLE),
        Suite::Lattice => lattice_suite(),
        Suite::Wbn => wbn_suite(),
        Suite::Walls => walls_suite(),
        Suite::Ulrich => ulrich_suite(),
        Suite::Engine => engine_suite(),
        Suite::Irr => irr_suite(),
    }
}

/// Checks a table against the reference values and its internal relations.
/// Takes the rows as an argument so that corrupted tables can be fed in.
pub fn table_suite(rows: &[SurfaceInvariants]) -> SuiteReport {
    const GROUP: [i64; 7] = [2, 4, 4, 8, 3, 9, 6];
    const ORD: [i64; 7] = [2, 2, 4, 4, 3, 3, 6];
    const LAMBDA: [i64; 7] = [1, 2, 1, 2, 1, 3, 1];
    const TORSION: [i64; 7] = [4, 2, 2, 1, 3, 1, 1];
    const MULT: [&[i64]; 7] =
        [&[2, 2, 2, 2], &[2, 2, 2, 2], &[2, 4, 4], &[2, 4, 4], &[3, 3, 3], &[3, 3, 3], &[2, 3, 6]];

    let mut rep = SuiteReport::new(Suite::Table);
    rep.check(rows.len() == 7, || format!("{} rows", rows.len()));
    for (i, row) in rows.iter().enumerate().take(7) {
        let t = i + 1;
        rep.check(row.group_order == GROUP[i], || format!("type {t}: |G| = {}", row.group_order));
        rep.check(row.canonical_order == ORD[i], || format!("type {t}: ord = {}", row.canonical_order));
        rep.check(row.lambda == LAMBDA[i], || format!("type {t}: lambda = {}", row.lambda));
        rep.check(row.torsion_order == TORSION[i], || format!("type {t}: torsion = {}", row.torsion_order));
        rep.check(row.multiplicities == MULT[i], || format!("type {t}: multiplicities {:?}", row.multiplicities));
        rep.check(row.group_order == row.canonical_order * row.lambda, || {
            format!("type {t}: |G| != ord * lambda")
        });
        rep.check(row.torsion_order == row.torsion_structure.order(), || {
            format!("type {t}: torsion order disagrees with its structure")
        });
        let lcm = row.multiplicities.iter().fold(1, |l, m| l.lcm(m));
        rep.check(lcm == row.canonical_order, || format!("type {t}: lcm of multiplicities {lcm}"));
        let twins = rows
            .iter()
            .filter(|o| o.canonical_order == row.canonical_order && o.lambda == row.lambda)
            .count();
        rep.check(twins == 1, || format!("type {t}: (ord, lambda) not unique"));
    }
    rep
}

fn lattice_suite() -> SuiteReport {
    let mut rep = SuiteReport::new(Suite::Lattice);
    for a in -20..=20 {
        for b in -20..=20 {
            let d = NumClass::new(a, b);
            let chi = MukaiVector::STRUCTURE_SHEAF.twist(d).chi();
            rep.check(chi == a * b, || format!("chi(O({a},{b})) = {chi}"));
        }
    }
    let mut rng = StdRng::seed_from_u64(0x5eed);
    let random = |rng: &mut StdRng| {
        MukaiVector::from_parts(rng.gen_range(-9..=9), rng.gen_range(-9..=9), rng.gen_range(-9..=9), rng.gen_range(-9..=9))
    };
    for _ in 0..10_000 {
        let (v, w) = (random(&mut rng), random(&mut rng));
        let d = NumClass::new(rng.gen_range(-5..=5), rng.gen_range(-5..=5));
        rep.check(v.chi() == -MukaiVector::STRUCTURE_SHEAF.pair(v), || format!("chi({v}) != -<O,v>"));
        rep.check(v.pair(w) == w.pair(v), || format!("<{v},{w}> not symmetric"));
        rep.check(v.twist(d).pair(w.twist(d)) == v.pair(w), || format!("twist by {d} not an isometry"));
        rep.check(v.square() % 2 == 0, || format!("{v}^2 odd"));
    }
    rep
}

fn wbn_suite() -> SuiteReport {
    let mut rep = SuiteReport::new(Suite::Wbn);
    for t in SurfaceType::all() {
        for a in -10..=10 {
            for b in -10..=10 {
                let report = wbn(t, NumClass::new(a, b));
                let expect_fail = !t.has_torsion() && a == 0 && b.abs() >= t.lambda();
                let fails = report.moduli_status == WbnStatus::Fails;
                rep.check(fails == expect_fail, || format!("type {t} class ({a},{b}): {:?}", report.moduli_status));
            }
        }
    }
    for (t, want) in [(1, 3), (2, 1), (3, 1), (5, 2)] {
        let t = SurfaceType::new(t).expect("valid type");
        for b in (1..=10).filter(|b| b % t.lambda() == 0) {
            let got = wbn(t, NumClass::new(0, b)).satisfied_components();
            rep.check(got == want, || format!("type {t} class (0,{b}): {got} satisfied components"));
        }
    }
    rep
}

/// Every splitting `v = v' + v''` with `c1(v')` in `[-3, 3]^2`, both pieces
/// Bogomolov, and `xi = r' c1 - r c1'` orthogonal to some ample class.
fn brute_force_splittings(v: MukaiVector) -> Vec<NumClass> {
    let mut out = Vec::new();
    for r1 in 1..v.r {
        let r2 = v.r - r1;
        for a in -3..=3 {
            for b in -3..=3 {
                let c = NumClass::new(a, b);
                let q = v.c1 - c;
                let xi = r1 * v.c1 - v.r * c;
                if !(xi.a > 0 && xi.b < 0 || xi.a < 0 && xi.b > 0) {
                    continue;
                }
                // v'^2 >= 0 and v''^2 >= 0 bound s' from both sides.
                let hi = Integer::div_floor(&c.square(), &(2 * r1));
                let lo = v.s - Integer::div_floor(&q.square(), &(2 * r2));
                if lo <= hi {
                    out.push(xi);
                }
            }
        }
    }
    out
}

fn walls_suite() -> SuiteReport {
    let mut rep = SuiteReport::new(Suite::Walls);
    for r in 2..=3 {
        for a in -3..=3 {
            for b in -3..=3 {
                for s in -4..=4 {
                    let v = MukaiVector::from_parts(r, a, b, s);
                    if v.square() < 0 {
                        continue;
                    }
                    let walls = enumerate_walls(v).expect("v^2 >= 0");
                    for xi in brute_force_splittings(v) {
                        let bound = r * r * v.square();
                        rep.check(4 * -xi.square() <= bound, || format!("{v}: xi = {xi} outside the bound"));
                        let g = xi.content();
                        let dir = if xi.a > 0 { NumClass::new(xi.a / g, xi.b / g) } else { NumClass::new(-xi.a / g, -xi.b / g) };
                        rep.check(walls.iter().any(|w| w.xi == dir), || format!("{v}: direction {dir} missing"));
                    }
                }
            }
        }
    }
    let v = MukaiVector::from_parts(2, 1, 1, 0);
    let walls: Vec<NumClass> = enumerate_walls(v).expect("v^2 = 2").iter().map(|w| w.xi).collect();
    rep.check(walls == [NumClass::new(1, -1)], || format!("walls of {v}: {walls:?}"));
    rep
}

fn ulrich_suite() -> SuiteReport {
    let mut rep = SuiteReport::new(Suite::Ulrich);
    for a in 1..=5i64 {
        for b in (1..=5i64).filter(|b| a.gcd(b) == 1) {
            let h = Polarization::new(NumClass::new(a, b)).expect("ample");
            for r in 1..=6 {
                let mut oracle = Vec::new();
                for x in 0..=r * a {
                    for y in 0..=r * b {
                        if x * b + y * a == r * a * b {
                            oracle.push(MukaiVector::new(r, NumClass::new(x, y), 0).twist(h.class()));
                        }
                    }
                }
                let got: Vec<MukaiVector> =
                    enumerate_candidates(h, r).expect("primitive H").iter().map(|c| c.v).collect();
                rep.check(got == oracle, || format!("H = {h:?}, r = {r}: enumeration differs"));
                for c in enumerate_candidates(h, r).expect("primitive H") {
                    let v = c.v;
                    rep.check(v.twist(-h.class()).chi() == 0 && v.twist(-2 * h.class()).chi() == 0, || {
                        format!("{v}: Euler characteristics do not vanish")
                    });
                    let dual = enumerate_candidates(h, r).expect("primitive H")[(2 * r - c.k) as usize].v;
                    rep.check(serre_dual_ulrich(v, h) == dual, || format!("{v}: dual mismatch"));
                }
            }
        }
    }
    rep
}

fn engine_suite() -> SuiteReport {
    let mut rep = SuiteReport::new(Suite::Engine);
    let status = |t: u8, r: i64, k: i64| {
        let t = SurfaceType::new(i64::from(t)).expect("valid type");
        decide(t, r, k, Hypotheses::asserted()).expect("k in range").status
    };
    for t in [1, 2, 3, 5] {
        for r in 1..=6 {
            for k in r..=2 * r {
                rep.check(status(t, r, k) == UlrichStatus::Exists, || format!("type {t} ({r},{k})"));
            }
        }
    }
    let expected = [
        (4, 1, 1, UlrichStatus::NotExists),
        (4, 1, 2, UlrichStatus::NotExists),
        (6, 1, 1, UlrichStatus::NotExists),
        (6, 1, 2, UlrichStatus::NotExists),
        (7, 1, 1, UlrichStatus::NotExists),
        (7, 1, 2, UlrichStatus::NotExists),
        (4, 3, 3, UlrichStatus::NotExists),
        (6, 2, 2, UlrichStatus::NotExists),
        (4, 2, 2, UlrichStatus::Exists),
        (4, 3, 4, UlrichStatus::Exists),
        (6, 3, 3, UlrichStatus::Exists),
        (7, 2, 2, UlrichStatus::Exists),
        (7, 3, 3, UlrichStatus::Exists),
    ];
    for (t, r, k, want) in expected {
        rep.check(status(t, r, k) == want, || format!("type {t} ({r},{k}) expected {}", want.as_str()));
    }
    for t in SurfaceType::all() {
        rep.check(status(t.id(), 2, 3) == UlrichStatus::Exists, || format!("type {t} (2,3)"));
        for r in 2..=12 {
            rep.check(every_rank_witness(t, r).is_ok(), || format!("type {t}: no witness in rank {r}"));
        }
        let reference = Saturation::run(t, 6, EngineOptions::default());
        rep.check(reference.conflicts().is_empty(), || format!("type {t}: conflicting facts"));
        for fact in reference.facts() {
            rep.check(replay(t, &reference.certificate(fact)) == Ok(Some(fact)), || format!("type {t}: {fact} does not replay"));
        }
        let mut rng = StdRng::seed_from_u64(u64::from(t.id()));
        for _ in 0..8 {
            let shuffled = Saturation::run_with(t, 6, EngineOptions::default(), |n| rng.gen_range(0..n));
            let same = reference.facts().eq(shuffled.facts());
            rep.check(same, || format!("type {t}: saturation depends on order"));
        }
        for r in 1..=6 {
            for k in r..=2 * r {
                if reference.contains(Fact::NotExists { r, k }) {
                    let dual = Fact::NotExists { r, k: 3 * r - k };
                    rep.check(reference.contains(dual), || format!("type {t}: {dual} missing"));
                }
            }
        }
    }
    rep
}

fn irr_suite() -> SuiteReport {
    let mut rep = SuiteReport::new(Suite::Irr);
    for t in SurfaceType::all() {
        let cert = build_certificate(t);
        rep.check(matches!(&cert, Ok(c) if c.degree_bound == 3 && c.l == 1), || format!("type {t}: {cert:?}"));
    }
    let values: Vec<Option<i64>> = SurfaceType::all().map(|t| irr(t).value).collect();
    rep.check(values == [2, 2, 3, 3, 3, 3, 3].map(Some), || format!("irr values {values:?}"));
    for a in -12..=12 {
        for b in -12..=12 {
            if 2 * a * b == 12 {
                let d = NumClass::new(a, b);
                rep.check(check_deg12_primitive(d) == Ok(true), || format!("{d} reported divisible"));
            }
        }
    }
    let min = minimality_check();
    rep.check(min.holds, || format!("minimizers {:?}", min.minimizers));
    rep
}
