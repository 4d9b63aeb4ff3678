//! Acceptance gate: one PASS/FAIL line per criterion, non-zero exit on any failure.

mod support;

use std::process::{Command, ExitCode};
use std::time::Instant;

use bielliptic::cli;
use bielliptic::irrationality::{build_certificate, check_deg12_primitive, irr, minimality_check};
use bielliptic::lattice::{l_of_v, serre_dual_ulrich, MukaiVector, NumClass, Polarization};
use bielliptic::surface::SurfaceType;
use bielliptic::ulrich::{
    decide, enumerate_candidates, every_rank_witness, replay, EngineOptions, Hypotheses, Saturation,
    UlrichCandidate, UlrichStatus,
};
use bielliptic::walls::{component_count, enumerate_walls};
use bielliptic::wbn::{wbn, WbnStatus};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use serde_json::{json, Value};

type Outcome = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

fn ty(n: i64) -> SurfaceType {
    SurfaceType::new(n).unwrap()
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 { a.abs() } else { gcd(b, a % b) }
}

fn tuple(v: MukaiVector) -> (i64, (i64, i64), i64) {
    (v.r, (v.c1.a, v.c1.b), v.s)
}

fn table_reproduction() -> Outcome {
    let group = [2, 4, 4, 8, 3, 9, 6];
    let mult: [&[i64]; 7] = [&[2, 2, 2, 2], &[2, 2, 2, 2], &[2, 4, 4], &[2, 4, 4], &[3, 3, 3], &[3, 3, 3], &[2, 3, 6]];
    let ord = [2, 2, 4, 4, 3, 3, 6];
    let lambda = [1, 2, 1, 2, 1, 3, 1];
    let torsion = [4, 2, 2, 1, 3, 1, 1];
    for t in 1..=7usize {
        let out = cli::run(["bielliptic", "surface", "--type", &t.to_string()]);
        ensure!(out.code == 0, "surface --type {t} exited {}", out.code);
        let v: Value = serde_json::from_str(&out.stdout).map_err(|e| e.to_string())?;
        let r = &v["result"];
        let i = t - 1;
        let want = json!({
            "group_order": group[i],
            "multiplicities": mult[i],
            "canonical_order": ord[i],
            "lambda": lambda[i],
            "torsion_order": torsion[i],
        });
        for (key, value) in want.as_object().unwrap() {
            ensure!(&r[key] == value, "type {t}: {key} = {} (want {value})", r[key]);
        }
    }
    Ok("7 rows exact".into())
}

fn riemann_roch() -> Outcome {
    for a in -20..=20 {
        for b in -20..=20 {
            let v = MukaiVector::from_parts(1, a, b, a * b);
            ensure!(v.chi() == a * b, "chi(1,({a},{b}),{}) = {}", a * b, v.chi());
        }
    }
    let mut rng = StdRng::seed_from_u64(20);
    for _ in 0..10_000 {
        let v = MukaiVector::from_parts(
            rng.gen_range(-50..=50),
            rng.gen_range(-50..=50),
            rng.gen_range(-50..=50),
            rng.gen_range(-500..=500),
        );
        ensure!(v.chi() == -MukaiVector::STRUCTURE_SHEAF.pair(v), "chi({v}) != -<O,v>");
    }
    Ok("1681 line bundles, 10^4 random vectors".into())
}

fn coprime_grid() -> Vec<(i64, i64)> {
    (1..=5).flat_map(|a| (1..=5).map(move |b| (a, b))).filter(|&(a, b)| gcd(a, b) == 1).collect()
}

fn ulrich_oracle() -> Outcome {
    let mut n = 0;
    for (a, b) in coprime_grid() {
        let h = Polarization::new(NumClass::new(a, b)).unwrap();
        for r in 1..=6 {
            let cands = enumerate_candidates(h, r).map_err(|e| e.to_string())?;
            let got: Vec<_> = cands.iter().map(|c| tuple(c.v)).collect();
            ensure!(got == support::ulrich_scan(a, b, r), "H = ({a},{b}), r = {r}: {got:?}");
            ensure!(cands.len() as i64 == r + 1, "H = ({a},{b}), r = {r}: {} candidates", cands.len());
            for c in &cands {
                let v = tuple(c.v);
                ensure!(support::twist(v, (-a, -b)).2 == 0, "chi(v(-H)) != 0 for {}", c.v);
                ensure!(support::twist(v, (-2 * a, -2 * b)).2 == 0, "chi(v(-2H)) != 0 for {}", c.v);
                n += 1;
            }
        }
    }
    Ok(format!("{n} candidates"))
}

fn duality() -> Outcome {
    let mut n = 0;
    for (a, b) in coprime_grid() {
        let h = Polarization::new(NumClass::new(a, b)).unwrap();
        for r in 1..=6 {
            for k in r..=2 * r {
                let v = UlrichCandidate::new(h, r, k).map_err(|e| e.to_string())?.v;
                let w = UlrichCandidate::new(h, r, 3 * r - k).map_err(|e| e.to_string())?.v;
                ensure!(serre_dual_ulrich(v, h) == w, "H = ({a},{b}): ({r},{k}) does not map to ({r},{})", 3 * r - k);
                n += 1;
            }
        }
    }
    Ok(format!("{n} pairs"))
}

fn classification() -> Outcome {
    let status = |t: i64, r: i64, k: i64| -> Result<UlrichStatus, String> {
        let v = decide(ty(t), r, k, Hypotheses::asserted()).map_err(|e| e.to_string())?;
        let replayed = replay(ty(t), &v.certificate)?;
        if v.status != UlrichStatus::Unknown && replayed.is_none() {
            return Err(format!("type {t} ({r},{k}): empty certificate"));
        }
        Ok(v.status)
    };
    for t in [1, 2, 3, 5] {
        for r in 1..=6 {
            for k in r..=2 * r {
                ensure!(status(t, r, k)? == UlrichStatus::Exists, "type {t} ({r},{k}) not EXISTS");
            }
        }
    }
    for t in [4, 6, 7] {
        for k in 1..=2 {
            ensure!(status(t, 1, k)? == UlrichStatus::NotExists, "type {t} (1,{k}) not NOT_EXISTS");
        }
    }
    for (t, r, k) in [(4, 3, 3), (6, 2, 2)] {
        ensure!(status(t, r, k)? == UlrichStatus::NotExists, "type {t} ({r},{k}) not NOT_EXISTS");
    }
    for (t, r, k) in [(4, 2, 2), (4, 3, 4), (6, 3, 3), (7, 2, 2), (7, 3, 3)] {
        ensure!(status(t, r, k)? == UlrichStatus::Exists, "type {t} ({r},{k}) not EXISTS");
    }
    for t in 1..=7 {
        ensure!(status(t, 2, 3)? == UlrichStatus::Exists, "type {t} (2,3) not EXISTS");
        for r in 2..=12 {
            let w = every_rank_witness(ty(t), r).map_err(|e| format!("type {t} rank {r}: {e}"))?;
            ensure!(w.verdict.status == UlrichStatus::Exists, "type {t} rank {r}: witness not EXISTS");
            ensure!(replay(ty(t), &w.verdict.certificate)?.is_some(), "type {t} rank {r}: witness certificate empty");
        }
    }
    Ok("base facts, closures and witnesses r <= 12 replayed".into())
}

fn wbn_reproduction() -> Outcome {
    for t in 1..=7 {
        let s = ty(t);
        for a in -10..=10 {
            for b in -10..=10 {
                let fails = wbn(s, NumClass::new(a, b)).moduli_status == WbnStatus::Fails;
                let expected = [4, 6, 7].contains(&t) && a == 0 && b.abs() >= s.lambda();
                ensure!(fails == expected, "type {t} class ({a},{b}): fails = {fails}");
            }
        }
    }
    for (t, want) in [(1, 3), (2, 1), (3, 1), (5, 2)] {
        let s = ty(t);
        for b in (s.lambda()..=10).filter(|b| b % s.lambda() == 0) {
            let got = wbn(s, NumClass::new(0, b)).satisfied_components();
            ensure!(got == want, "type {t} class (0,{b}): {got} satisfied components, want {want}");
        }
    }
    Ok("7 x 441 classes".into())
}

fn wall_bound() -> Outcome {
    let mut splits = 0;
    for r in 2..=3 {
        for a in -3..=3 {
            for b in -3..=3 {
                for s in -3..=3 {
                    let v = MukaiVector::from_parts(r, a, b, s);
                    let v2 = v.square();
                    if v2 < 0 {
                        continue;
                    }
                    let walls = enumerate_walls(v).map_err(|e| e.to_string())?;
                    for sp in support::splittings(tuple(v), 3, 40) {
                        let xi2 = support::dot(sp.xi, sp.xi);
                        ensure!(0 <= -xi2 && 4 * -xi2 <= r * r * v2, "{v}: xi = {:?} breaks the bound", sp.xi);
                        let dir = support::direction(sp.xi);
                        ensure!(walls.iter().any(|w| (w.xi.a, w.xi.b) == dir), "{v}: direction {dir:?} not enumerated");
                        splits += 1;
                    }
                }
            }
        }
    }
    let v = MukaiVector::from_parts(2, 1, 1, 0);
    let got: Vec<_> = enumerate_walls(v).map_err(|e| e.to_string())?.iter().map(|w| (w.xi.a, w.xi.b)).collect();
    let oracle: Vec<_> = support::wall_directions(tuple(v), 12, 200).into_iter().collect();
    ensure!(got == oracle && got == [(1, -1)], "walls of {v}: {got:?}, oracle {oracle:?}");
    Ok(format!("{splits} splittings inside the bound; single wall a = b"))
}

fn irrationality() -> Outcome {
    let v = MukaiVector::from_parts(2, 3, 2, 3);
    for t in SurfaceType::all() {
        let cert = build_certificate(t).map_err(|e| format!("type {t}: {e}"))?;
        ensure!(cert.degree_bound == 3, "type {t}: degree bound {}", cert.degree_bound);
        ensure!(l_of_v(v, t) == Ok(1), "type {t}: l(v) = {:?}", l_of_v(v, t));
    }
    let mut boxed = 0;
    for a in -12..=12 {
        for b in -12..=12 {
            if 2 * a * b == 12 {
                ensure!(check_deg12_primitive(NumClass::new(a, b)) == Ok(true), "({a},{b}) not primitive");
                boxed += 1;
            }
        }
    }
    let values: Vec<_> = SurfaceType::all().map(|t| irr(t).value).collect();
    ensure!(values == [2, 2, 3, 3, 3, 3, 3].map(Some), "irr = {values:?}");
    let min = minimality_check();
    ensure!(min.minimizers == [(12, 3)] && min.min_c2 == 3, "minimizers {:?}", min.minimizers);
    Ok(format!("7 certificates, {boxed} degree-12 classes"))
}

fn component_counts() -> Outcome {
    let v = MukaiVector::from_parts(2, 3, 2, 1);
    let mut problems = Vec::new();
    for t in [1, 2, 5] {
        match component_count(v, ty(t)) {
            Ok(n) if n == ty(t).torsion_order() => {}
            other => problems.push(format!("type {t}: {other:?}, want Ok({})", ty(t).torsion_order())),
        }
    }
    if component_count(v, ty(3)).is_ok() {
        problems.push("type 3: accepted".into());
    }
    for t in [4, 6, 7] {
        match component_count(v, ty(t)) {
            Ok(1) => {}
            other => problems.push(format!("type {t}: {other:?}, want Ok(1)")),
        }
    }
    if problems.is_empty() { Ok("7 types".into()) } else { Err(problems.join("; ")) }
}

fn determinism() -> Outcome {
    let commands: [&[&str]; 5] = [
        &["surface", "--type", "3"],
        &["ulrich", "decide", "--type", "7", "--r", "5", "--k", "8"],
        &["wbn", "--type", "2", "--class", "0,3"],
        &["walls", "--v", "3,2,1,-3"],
        &["irr", "--type", "6", "--certificate"],
    ];
    for args in commands {
        let run = || {
            Command::new(env!("CARGO_BIN_EXE_bielliptic"))
                .args(args)
                .output()
                .map(|o| o.stdout)
                .map_err(|e| e.to_string())
        };
        let first = run()?;
        for _ in 0..2 {
            ensure!(run()? == first, "{args:?} output differs between runs");
        }
    }
    let mut rng = StdRng::seed_from_u64(10);
    for t in SurfaceType::all() {
        let fifo = Saturation::run(t, 8, EngineOptions::default());
        for _ in 0..20 {
            let shuffled = Saturation::run_with(t, 8, EngineOptions::default(), |n| rng.gen_range(0..n));
            for r in 1..=8 {
                for k in r..=2 * r {
                    ensure!(fifo.status(r, k) == shuffled.status(r, k), "type {t} ({r},{k}) depends on rule order");
                }
            }
        }
    }
    Ok("5 commands x 3 runs, 140 shuffled saturations".into())
}

type Criterion = (&'static str, fn() -> Outcome);

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("table reproduction", table_reproduction),
        ("Riemann-Roch", riemann_roch),
        ("Ulrich enumeration oracle", ulrich_oracle),
        ("duality involution", duality),
        ("Ulrich classification", classification),
        ("weak Brill-Noether reproduction", wbn_reproduction),
        ("wall-bound oracle", wall_bound),
        ("irrationality pipeline", irrationality),
        ("component count", component_counts),
        ("determinism", determinism),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = check();
        let ms = start.elapsed().as_millis();
        match outcome {
            Ok(detail) => println!("PASS  {:>2}  {name} ({detail}; {ms} ms)", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL  {:>2}  {name}: {why} ({ms} ms)", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 { ExitCode::SUCCESS } else { ExitCode::FAILURE }
}
