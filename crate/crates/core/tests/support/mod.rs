//! Brute-force oracles shared by the integration tests. Everything here uses
//! plain tuples and its own arithmetic so that it does not lean on the crate.

#![allow(dead_code)]

use std::collections::BTreeSet;

/// `(a, b) . (c, d) = ad + bc`.
pub fn dot(x: (i64, i64), y: (i64, i64)) -> i64 {
    x.0 * y.1 + x.1 * y.0
}

/// `(r, c, s) . e^D`, expanded by hand.
pub fn twist(v: (i64, (i64, i64), i64), d: (i64, i64)) -> (i64, (i64, i64), i64) {
    let (r, c, s) = v;
    (r, (c.0 + r * d.0, c.1 + r * d.1), s + dot(c, d) + r * dot(d, d) / 2)
}

/// Ulrich candidates for `H = (a, b)` in rank `r`: all `(x, y)` in a wide box
/// with `x b + y a = r a b` and `(x, y)^2 >= 0`, shifted by `e^H`, sorted by `x`.
pub fn ulrich_scan(a: i64, b: i64, r: i64) -> Vec<(i64, (i64, i64), i64)> {
    let mut out = Vec::new();
    for x in -60..=60 {
        for y in -60..=60 {
            if x * b + y * a == r * a * b && dot((x, y), (x, y)) >= 0 {
                out.push(twist((r, (x, y), 0), (a, b)));
            }
        }
    }
    out
}

/// A splitting `v = (r1, c1, s1) + (r - r1, c - c1, s - s1)` found by search.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Split {
    pub r1: i64,
    pub c1: (i64, i64),
    pub s1: i64,
    pub xi: (i64, i64),
}

/// Every splitting with `0 < r1 < r`, `c1` in `[-bound, bound]^2`, both parts
/// satisfying `c^2 - 2 r s >= 0`, and `xi = r1 c - r c1` orthogonal to some
/// ample class (coefficients of strictly opposite sign). `s1` is scanned over
/// `[-smax, smax]`.
pub fn splittings(v: (i64, (i64, i64), i64), bound: i64, smax: i64) -> Vec<Split> {
    let (r, c, s) = v;
    let mut out = Vec::new();
    for r1 in 1..r {
        let r2 = r - r1;
        for a in -bound..=bound {
            for b in -bound..=bound {
                let c1 = (a, b);
                let c2 = (c.0 - a, c.1 - b);
                let xi = (r1 * c.0 - r * a, r1 * c.1 - r * b);
                if xi.0 * xi.1 >= 0 {
                    continue;
                }
                for s1 in -smax..=smax {
                    let s2 = s - s1;
                    if dot(c1, c1) - 2 * r1 * s1 >= 0 && dot(c2, c2) - 2 * r2 * s2 >= 0 {
                        out.push(Split { r1, c1, s1, xi });
                    }
                }
            }
        }
    }
    out
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 { a.abs() } else { gcd(b, a % b) }
}

/// Primitive direction of `xi`, normalized to a positive first coefficient.
pub fn direction(xi: (i64, i64)) -> (i64, i64) {
    let g = gcd(xi.0, xi.1);
    let sign = if xi.0 < 0 { -1 } else { 1 };
    (sign * xi.0 / g, sign * xi.1 / g)
}

pub fn wall_directions(v: (i64, (i64, i64), i64), bound: i64, smax: i64) -> BTreeSet<(i64, i64)> {
    splittings(v, bound, smax).into_iter().map(|s| direction(s.xi)).collect()
}

pub fn square(v: (i64, (i64, i64), i64)) -> i64 {
    dot(v.1, v.1) - 2 * v.0 * v.2
}

pub type Index = (i64, i64);

/// Naive closure of `(r, k)` facts: duality on both sets, sums on the first,
/// iterated until nothing changes. Returns `(exists, not_exists)`.
pub fn naive_closure(
    exists: &[(i64, i64)],
    not_exists: &[(i64, i64)],
    max_rank: i64,
) -> (BTreeSet<Index>, BTreeSet<Index>) {
    let mut yes: BTreeSet<(i64, i64)> = exists.iter().copied().filter(|p| p.0 <= max_rank).collect();
    let mut no: BTreeSet<(i64, i64)> = not_exists.iter().copied().filter(|p| p.0 <= max_rank).collect();
    loop {
        let mut next = yes.clone();
        for &(r, k) in &yes {
            next.insert((r, 3 * r - k));
            for &(r2, k2) in &yes {
                if r + r2 <= max_rank {
                    next.insert((r + r2, k + k2));
                }
            }
        }
        let next_no: BTreeSet<(i64, i64)> = no.iter().flat_map(|&(r, k)| [(r, k), (r, 3 * r - k)]).collect();
        if next == yes && next_no == no {
            return (yes, no);
        }
        yes = next;
        no = next_no;
    }
}
