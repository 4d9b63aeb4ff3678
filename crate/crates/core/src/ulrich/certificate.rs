//! Replayable certificates.
//!
//! `replay` re-checks every step against the rule patterns without consulting
//! the saturation engine, so a certificate can be audited on its own.

use std::collections::BTreeSet;

use serde::Serialize;

use super::engine::{base_facts, Fact, Rule};
use crate::surface::SurfaceType;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Step {
    pub rule: Rule,
    pub cite: &'static str,
    pub premises: Vec<Fact>,
    pub conclusion: Fact,
}

fn in_range(fact: Fact) -> bool {
    match fact.index() {
        Some((r, k)) => r >= 1 && r <= k && k <= 2 * r,
        None => true,
    }
}

fn check_step(t: SurfaceType, step: &Step) -> Result<(), String> {
    let c = step.conclusion;
    if !in_range(c) {
        return Err(format!("{c} has index out of range"));
    }
    if step.cite != step.rule.citation() {
        return Err(format!("{:?} cited as {:?}", step.rule, step.cite));
    }
    let p = step.premises.as_slice();
    let ok = match step.rule {
        Rule::B1 | Rule::B2 | Rule::B3 | Rule::B4 | Rule::B5 => {
            let rank = c.index().map_or(0, |(r, _)| r);
            p.is_empty() && base_facts(t, rank).contains(&(c, step.rule))
        }
        Rule::C1 => match (p, c) {
            ([Fact::Exists { r, k }], Fact::Exists { r: r2, k: k2 })
            | ([Fact::NotExists { r, k }], Fact::NotExists { r: r2, k: k2 }) => {
                *r == r2 && k2 == 3 * r - k
            }
            _ => false,
        },
        Rule::C2 => match (p, c) {
            ([Fact::Exists { r: r1, k: k1 }, Fact::Exists { r: r2, k: k2 }], Fact::Exists { r, k }) => {
                r == r1 + r2 && k == k1 + k2
            }
            _ => false,
        },
        Rule::D1 => match (p, c) {
            ([Fact::Exists { r, .. }], Fact::ExistsForMultiples { rank }) => rank == 2 * r,
            _ => false,
        },
    };
    if ok {
        Ok(())
    } else {
        Err(format!("{:?} does not derive {c} from {:?}", step.rule, step.premises))
    }
}

/// Checks each step in order; premises must be concluded by earlier steps.
/// Returns the final conclusion.
pub fn replay(t: SurfaceType, steps: &[Step]) -> Result<Option<Fact>, String> {
    let mut known = BTreeSet::new();
    for step in steps {
        if let Some(missing) = step.premises.iter().find(|f| !known.contains(*f)) {
            return Err(format!("premise {missing} used before it was derived"));
        }
        check_step(t, step)?;
        known.insert(step.conclusion);
    }
    Ok(steps.last().map(|s| s.conclusion))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cite;

    fn ty(n: i64) -> SurfaceType {
        SurfaceType::new(n).unwrap()
    }

    fn step(rule: Rule, premises: Vec<Fact>, conclusion: Fact) -> Step {
        Step { rule, cite: rule.citation(), premises, conclusion }
    }

    #[test]
    fn rejects_forged_base_fact() {
        let forged = step(Rule::B4, vec![], Fact::Exists { r: 2, k: 2 });
        assert!(replay(ty(6), std::slice::from_ref(&forged)).is_err());
        assert!(replay(ty(7), &[forged]).is_ok());
    }

    #[test]
    fn rejects_sum_of_nonexistence() {
        let s = vec![
            step(Rule::B2, vec![], Fact::NotExists { r: 1, k: 1 }),
            step(
                Rule::C2,
                vec![Fact::NotExists { r: 1, k: 1 }, Fact::NotExists { r: 1, k: 1 }],
                Fact::NotExists { r: 2, k: 2 },
            ),
        ];
        assert!(replay(ty(6), &s).is_err());
    }

    #[test]
    fn rejects_missing_premise_and_wrong_cite() {
        let s = vec![step(Rule::C1, vec![Fact::Exists { r: 3, k: 3 }], Fact::Exists { r: 3, k: 6 })];
        assert!(replay(ty(7), &s).is_err());
        let mut bad = step(Rule::B3, vec![], Fact::Exists { r: 2, k: 3 });
        bad.cite = cite::ULRICH_DUAL;
        assert!(replay(ty(1), &[bad]).is_err());
    }
}
