//! Fixpoint saturation over `(r, k)` facts.
//!
//! Base facts are the per-type existence and non-existence results; the
//! closure rules are duality `k <-> 3r - k` (both polarities) and direct sums
//! (existence only). Every derived fact keeps the first derivation that
//! produced it, which makes certificates a DAG over the fact store.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;

use serde::{Serialize, Serializer};

use super::certificate::Step;
use super::UlrichCandidate;
use crate::cite;
use crate::error::{Error, Result};
use crate::lattice::Polarization;
use crate::surface::SurfaceType;
use crate::walls::is_generic;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Fact {
    Exists { r: i64, k: i64 },
    NotExists { r: i64, k: i64 },
    /// Ulrich bundles of rank `rank` exist for every multiple of `H`.
    ExistsForMultiples { rank: i64 },
}

impl Fact {
    pub fn index(self) -> Option<(i64, i64)> {
        match self {
            Fact::Exists { r, k } | Fact::NotExists { r, k } => Some((r, k)),
            Fact::ExistsForMultiples { .. } => None,
        }
    }
}

impl fmt::Display for Fact {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Fact::Exists { r, k } => write!(f, "EXISTS({r},{k})"),
            Fact::NotExists { r, k } => write!(f, "NOT_EXISTS({r},{k})"),
            Fact::ExistsForMultiples { rank } => write!(f, "EXISTS_FOR_MULTIPLES(rank={rank})"),
        }
    }
}

impl Serialize for Fact {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Rule {
    /// Types 1, 2, 3, 5: every `(r, k)`.
    B1,
    /// Types 4, 6, 7: no Ulrich line bundles.
    B2,
    /// `(2, 3)` on every type.
    B3,
    /// Rank 2 and 3 existence on types 4, 6, 7.
    B4,
    /// Type 4 `(3, 3)` and type 6 `(2, 2)` do not exist.
    B5,
    /// `(r, k) <-> (r, 3r - k)`.
    C1,
    /// `(r1, k1) + (r2, k2) -> (r1 + r2, k1 + k2)`.
    C2,
    /// Rank `r` for `H` gives rank `2r` for every multiple of `H`.
    D1,
}

impl Rule {
    pub fn citation(self) -> &'static str {
        match self {
            Rule::B1 => cite::ULRICH_TORSION_TYPES,
            Rule::B2 => cite::ULRICH_NO_LINE_BUNDLES,
            Rule::B3 => cite::ULRICH_SPECIAL_RANK2,
            Rule::B4 => cite::ULRICH_PUSHFORWARD,
            Rule::B5 => cite::ULRICH_JH_OBSTRUCTION,
            Rule::C1 => cite::ULRICH_DUAL,
            Rule::C2 => cite::ULRICH_DIRECT_SUM,
            Rule::D1 => cite::ULRICH_DOUBLING,
        }
    }
}

/// Base facts for `t` with rank at most `max_rank`, in a fixed order.
pub(crate) fn base_facts(t: SurfaceType, max_rank: i64) -> Vec<(Fact, Rule)> {
    let mut out = Vec::new();
    if t.has_torsion() {
        for r in 1..=max_rank {
            for k in r..=2 * r {
                out.push((Fact::Exists { r, k }, Rule::B1));
            }
        }
        return out;
    }
    let mut push = |fact: Fact, rule: Rule| {
        let (r, _) = fact.index().expect("base facts are indexed");
        if r <= max_rank {
            out.push((fact, rule));
        }
    };
    push(Fact::NotExists { r: 1, k: 1 }, Rule::B2);
    push(Fact::NotExists { r: 1, k: 2 }, Rule::B2);
    push(Fact::Exists { r: 2, k: 3 }, Rule::B3);
    match t.id() {
        4 => {
            push(Fact::Exists { r: 2, k: 2 }, Rule::B4);
            push(Fact::Exists { r: 3, k: 4 }, Rule::B4);
            push(Fact::NotExists { r: 3, k: 3 }, Rule::B5);
        }
        6 => {
            push(Fact::Exists { r: 3, k: 3 }, Rule::B4);
            push(Fact::NotExists { r: 2, k: 2 }, Rule::B5);
        }
        7 => {
            push(Fact::Exists { r: 2, k: 2 }, Rule::B4);
            push(Fact::Exists { r: 3, k: 3 }, Rule::B4);
        }
        _ => unreachable!("torsion-free types are 4, 6 and 7"),
    }
    out
}

/// Switches for optional rules.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
pub struct EngineOptions {
    /// Enables `D1`. Its conclusions concern multiples of `H` and never feed
    /// back into `(r, k)` verdicts.
    pub doubling_for_multiples: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
struct Derivation {
    rule: Rule,
    premises: Vec<Fact>,
}

/// A saturated fact store for one surface type up to a rank bound.
#[derive(Debug, Clone)]
pub struct Saturation {
    surface: SurfaceType,
    max_rank: i64,
    derivations: BTreeMap<Fact, Derivation>,
}

impl Saturation {
    /// Saturates with a FIFO agenda.
    pub fn run(t: SurfaceType, max_rank: i64, options: EngineOptions) -> Self {
        Self::run_with(t, max_rank, options, |_| 0)
    }

    /// Saturates, asking `pick(len)` which pending derivation to process next.
    /// The resulting fact set does not depend on `pick`; the recorded
    /// derivations may.
    pub fn run_with(
        t: SurfaceType,
        max_rank: i64,
        options: EngineOptions,
        mut pick: impl FnMut(usize) -> usize,
    ) -> Self {
        let mut agenda: VecDeque<(Fact, Derivation)> = base_facts(t, max_rank)
            .into_iter()
            .map(|(fact, rule)| (fact, Derivation { rule, premises: Vec::new() }))
            .collect();
        let mut derivations: BTreeMap<Fact, Derivation> = BTreeMap::new();
        let mut existing: BTreeSet<(i64, i64)> = BTreeSet::new();

        while !agenda.is_empty() {
            let at = pick(agenda.len()).min(agenda.len() - 1);
            let (fact, derivation) = agenda.remove(at).expect("index in range");
            if derivations.contains_key(&fact) {
                continue;
            }
            derivations.insert(fact, derivation);

            match fact {
                Fact::Exists { r, k } => {
                    let dual = Fact::Exists { r, k: 3 * r - k };
                    agenda.push_back((dual, Derivation { rule: Rule::C1, premises: vec![fact] }));
                    existing.insert((r, k));
                    for &(r2, k2) in &existing {
                        if r + r2 > max_rank {
                            continue;
                        }
                        let other = Fact::Exists { r: r2, k: k2 };
                        let mut premises = vec![other, fact];
                        premises.sort();
                        let sum = Fact::Exists { r: r + r2, k: k + k2 };
                        agenda.push_back((sum, Derivation { rule: Rule::C2, premises }));
                    }
                    if options.doubling_for_multiples {
                        let doubled = Fact::ExistsForMultiples { rank: 2 * r };
                        agenda.push_back((doubled, Derivation { rule: Rule::D1, premises: vec![fact] }));
                    }
                }
                Fact::NotExists { r, k } => {
                    let dual = Fact::NotExists { r, k: 3 * r - k };
                    agenda.push_back((dual, Derivation { rule: Rule::C1, premises: vec![fact] }));
                }
                Fact::ExistsForMultiples { .. } => {}
            }
        }
        Saturation { surface: t, max_rank, derivations }
    }

    pub fn surface(&self) -> SurfaceType {
        self.surface
    }

    pub fn max_rank(&self) -> i64 {
        self.max_rank
    }

    pub fn facts(&self) -> impl Iterator<Item = Fact> + '_ {
        self.derivations.keys().copied()
    }

    pub fn contains(&self, fact: Fact) -> bool {
        self.derivations.contains_key(&fact)
    }

    pub fn status(&self, r: i64, k: i64) -> UlrichStatus {
        match (
            self.contains(Fact::Exists { r, k }),
            self.contains(Fact::NotExists { r, k }),
        ) {
            (true, false) => UlrichStatus::Exists,
            (false, true) => UlrichStatus::NotExists,
            (false, false) => UlrichStatus::Unknown,
            (true, true) => panic!("inconsistent fact store at ({r},{k}) for type {}", self.surface),
        }
    }

    /// Indices carrying both an existence and a non-existence fact.
    pub fn conflicts(&self) -> Vec<(i64, i64)> {
        self.facts()
            .filter_map(|f| match f {
                Fact::Exists { r, k } if self.contains(Fact::NotExists { r, k }) => Some((r, k)),
                _ => None,
            })
            .collect()
    }

    /// The derivation DAG of `fact`, premises before conclusions.
    pub fn certificate(&self, fact: Fact) -> Vec<Step> {
        let mut steps = Vec::new();
        let mut emitted = BTreeSet::new();
        self.emit(fact, &mut emitted, &mut steps);
        steps
    }

    fn emit(&self, fact: Fact, emitted: &mut BTreeSet<Fact>, steps: &mut Vec<Step>) {
        if emitted.contains(&fact) {
            return;
        }
        let Some(d) = self.derivations.get(&fact) else {
            return;
        };
        for &p in &d.premises {
            self.emit(p, emitted, steps);
        }
        emitted.insert(fact);
        steps.push(Step { rule: d.rule, cite: d.rule.citation(), premises: d.premises.clone(), conclusion: fact });
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum UlrichStatus {
    Exists,
    NotExists,
    Unknown,
}

impl UlrichStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            UlrichStatus::Exists => "EXISTS",
            UlrichStatus::NotExists => "NOT_EXISTS",
            UlrichStatus::Unknown => "UNKNOWN",
        }
    }
}

/// The standing hypotheses on `H = aA0 + bB0` under which verdicts hold.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Hypotheses {
    pub b_at_least_lambda: bool,
    pub h_primitive: bool,
    pub h_generic: bool,
    /// Set when the flags were checked against a concrete polarization.
    pub polarization: Option<Polarization>,
}

impl Hypotheses {
    /// Flags asserted by the caller without a concrete polarization.
    pub fn asserted() -> Self {
        Hypotheses { b_at_least_lambda: true, h_primitive: true, h_generic: true, polarization: None }
    }

    /// Computes the flags for `H` against `v^Ulrich(r, k)`.
    pub fn check(t: SurfaceType, h: Polarization, r: i64, k: i64) -> Result<Self> {
        let candidate = UlrichCandidate::new(h, r, k)?;
        Ok(Hypotheses {
            b_at_least_lambda: h.b() >= t.lambda(),
            h_primitive: h.is_primitive(),
            h_generic: is_generic(h, candidate.v),
            polarization: Some(h),
        })
    }

    pub fn violations(&self) -> Vec<&'static str> {
        let mut out = Vec::new();
        if !self.b_at_least_lambda {
            out.push("b >= lambda_S");
        }
        if !self.h_primitive {
            out.push("H not divisible in Num(S)");
        }
        if !self.h_generic {
            out.push("H generic for v^Ulrich(r,k)");
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct UlrichVerdict {
    pub status: UlrichStatus,
    #[serde(rename = "type")]
    pub surface_type: SurfaceType,
    pub r: i64,
    pub k: i64,
    pub hypotheses: Hypotheses,
    pub certificate: Vec<Step>,
}

impl UlrichVerdict {
    /// The concluding fact of the certificate, if any.
    pub fn conclusion(&self) -> Option<Fact> {
        self.certificate.last().map(|s| s.conclusion)
    }

    /// Reattaches the concrete Mukai vector for a polarization.
    pub fn candidate(&self, h: Polarization) -> Result<UlrichCandidate> {
        UlrichCandidate::new(h, self.r, self.k)
    }
}

fn check_index(r: i64, k: i64) -> Result<()> {
    if r < 1 {
        return Err(Error::RankTooSmall { rank: r, requirement: "Ulrich rank must be >= 1" });
    }
    if k < r || k > 2 * r {
        return Err(Error::IndexOutOfRange { rank: r, k });
    }
    Ok(())
}

fn verdict_from(sat: &Saturation, r: i64, k: i64, hypotheses: Hypotheses) -> UlrichVerdict {
    let status = sat.status(r, k);
    let certificate = match status {
        UlrichStatus::Exists => sat.certificate(Fact::Exists { r, k }),
        UlrichStatus::NotExists => sat.certificate(Fact::NotExists { r, k }),
        UlrichStatus::Unknown => Vec::new(),
    };
    UlrichVerdict { status, surface_type: sat.surface(), r, k, hypotheses, certificate }
}

pub fn decide(t: SurfaceType, r: i64, k: i64, hypotheses: Hypotheses) -> Result<UlrichVerdict> {
    decide_with(t, r, k, hypotheses, EngineOptions::default())
}

pub fn decide_with(
    t: SurfaceType,
    r: i64,
    k: i64,
    hypotheses: Hypotheses,
    options: EngineOptions,
) -> Result<UlrichVerdict> {
    check_index(r, k)?;
    if let Some(first) = hypotheses.violations().first() {
        return Err(Error::HypothesisViolated((*first).to_string()));
    }
    let sat = Saturation::run(t, r, options);
    Ok(verdict_from(&sat, r, k, hypotheses))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub r: i64,
    pub k: i64,
    pub verdict: UlrichVerdict,
}

/// The smallest `k` with a certified Ulrich bundle of index `(r, k)`.
pub fn every_rank_witness(t: SurfaceType, r: i64) -> Result<Witness> {
    if r < 2 {
        return Err(Error::RankTooSmall { rank: r, requirement: "witnesses are for r >= 2" });
    }
    let sat = Saturation::run(t, r, EngineOptions::default());
    let k = (r..=2 * r)
        .find(|&k| sat.status(r, k) == UlrichStatus::Exists)
        .expect("(2,3) and a rank-3 base fact generate every rank >= 2");
    let verdict = verdict_from(&sat, r, k, Hypotheses::asserted());
    Ok(Witness { r, k, verdict })
}
