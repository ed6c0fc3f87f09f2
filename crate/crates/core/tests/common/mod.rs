#![allow(dead_code)]

use std::collections::{BTreeSet, HashMap};

use polyideal_core::geometry::{Cell, CellCollection, GridPoint, Interval};
use polyideal_core::polyalg::{Field, Monomial, Polynomial};
use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

pub fn cells(corners: &[(i64, i64)]) -> CellCollection {
    CellCollection::from_corners(corners.iter().copied()).unwrap()
}

pub fn six_cell() -> CellCollection {
    cells(&[(1, 1), (2, 1), (3, 1), (2, 2), (3, 2), (2, 3)])
}

pub fn seven_cell() -> CellCollection {
    cells(&[(1, 1), (2, 2), (2, 1), (3, 2), (2, 3), (4, 1), (3, 4)])
}

pub fn closed_path() -> CellCollection {
    cells(&[
        (2, 1),
        (2, 2),
        (1, 2),
        (1, 3),
        (1, 4),
        (2, 4),
        (2, 5),
        (3, 5),
        (4, 5),
        (4, 4),
        (5, 4),
        (5, 3),
        (5, 2),
        (4, 2),
        (4, 1),
        (3, 1),
    ])
}

pub fn convex12() -> CellCollection {
    cells(&[
        (1, 3),
        (2, 2),
        (2, 3),
        (2, 4),
        (3, 4),
        (3, 3),
        (3, 2),
        (3, 1),
        (3, 5),
        (4, 4),
        (4, 3),
        (5, 4),
    ])
}

pub fn nonconvex12() -> CellCollection {
    cells(&[
        (3, 1),
        (3, 2),
        (4, 2),
        (4, 3),
        (4, 4),
        (5, 3),
        (3, 4),
        (2, 4),
        (2, 3),
        (2, 2),
        (1, 3),
        (3, 5),
    ])
}

pub fn block2x2() -> CellCollection {
    cells(&[(1, 1), (2, 1), (1, 2), (2, 2)])
}

pub fn gp(i: i64, j: i64) -> GridPoint {
    GridPoint::new(i, j)
}

/// Nonempty subsets of a `w`×`h` box of cells.
pub fn arb_collection(w: i64, h: i64) -> impl Strategy<Value = CellCollection> {
    prop::collection::vec(any::<bool>(), (w * h) as usize)
        .prop_filter("nonempty", |bits| bits.iter().any(|&b| b))
        .prop_map(move |bits| {
            let cs = bits
                .iter()
                .enumerate()
                .filter(|(_, &b)| b)
                .map(|(n, _)| Cell::at(1 + n as i64 % w, 1 + n as i64 / w));
            CellCollection::new(cs).unwrap()
        })
}

/// Random weakly connected collection grown cell by cell from `(1,1)`.
pub fn random_weakly_connected(rng: &mut StdRng, n: usize) -> CellCollection {
    let mut set: BTreeSet<(i64, i64)> = BTreeSet::new();
    set.insert((1, 1));
    while set.len() < n {
        let v: Vec<_> = set.iter().copied().collect();
        let (i, j) = v[rng.gen_range(0..v.len())];
        let (di, dj) = (rng.gen_range(-1..=1), rng.gen_range(-1..=1));
        set.insert((i + di, j + dj));
    }
    cells(&set.into_iter().collect::<Vec<_>>())
}

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

/// All proper intervals of the bounding box whose cells lie in `p`.
pub fn brute_inner_intervals(p: &CellCollection) -> Vec<Interval> {
    let cs: BTreeSet<(i64, i64)> = p
        .cells()
        .map(|c| (c.lower_left().i, c.lower_left().j))
        .collect();
    let (mi, xi) = (
        cs.iter().map(|c| c.0).min().unwrap(),
        cs.iter().map(|c| c.0).max().unwrap() + 1,
    );
    let (mj, xj) = (
        cs.iter().map(|c| c.1).min().unwrap(),
        cs.iter().map(|c| c.1).max().unwrap() + 1,
    );
    let mut out = Vec::new();
    for a in mi..=xi {
        for b in mj..=xj {
            for c in a + 1..=xi {
                for d in b + 1..=xj {
                    if (a..c).all(|x| (b..d).all(|y| cs.contains(&(x, y)))) {
                        out.push(Interval {
                            a: gp(a, b),
                            b: gp(c, d),
                        });
                    }
                }
            }
        }
    }
    out.sort();
    out
}

/// Bounded components of the complement, by union-find on a box padded by
/// two cells; each component as a sorted list of lower left corners.
pub fn brute_holes(p: &CellCollection) -> Vec<Vec<(i64, i64)>> {
    let cs: BTreeSet<(i64, i64)> = p
        .cells()
        .map(|c| (c.lower_left().i, c.lower_left().j))
        .collect();
    let lo_i = cs.iter().map(|c| c.0).min().unwrap() - 2;
    let hi_i = cs.iter().map(|c| c.0).max().unwrap() + 2;
    let lo_j = cs.iter().map(|c| c.1).min().unwrap() - 2;
    let hi_j = cs.iter().map(|c| c.1).max().unwrap() + 2;
    let w = (hi_i - lo_i + 1) as usize;
    let h = (hi_j - lo_j + 1) as usize;
    let idx = |i: i64, j: i64| (i - lo_i) as usize + w * (j - lo_j) as usize;
    let mut parent: Vec<usize> = (0..w * h).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        p[x] = r;
        r
    }
    for i in lo_i..=hi_i {
        for j in lo_j..=hi_j {
            if cs.contains(&(i, j)) {
                continue;
            }
            for (ni, nj) in [(i + 1, j), (i, j + 1)] {
                if ni <= hi_i && nj <= hi_j && !cs.contains(&(ni, nj)) {
                    let (a, b) = (find(&mut parent, idx(i, j)), find(&mut parent, idx(ni, nj)));
                    parent[a] = b;
                }
            }
        }
    }
    let outside = find(&mut parent, idx(lo_i, lo_j));
    let mut comps: HashMap<usize, Vec<(i64, i64)>> = HashMap::new();
    for i in lo_i..=hi_i {
        for j in lo_j..=hi_j {
            if !cs.contains(&(i, j)) {
                let r = find(&mut parent, idx(i, j));
                if r != outside {
                    comps.entry(r).or_default().push((i, j));
                }
            }
        }
    }
    let mut out: Vec<Vec<(i64, i64)>> = comps
        .into_values()
        .map(|mut v| {
            v.sort();
            v
        })
        .collect();
    out.sort();
    out
}

const P: u64 = 1_000_000_007;

fn modp<K: Field>(c: &K) -> u64 {
    // coefficients in these tests are small integers
    let s = format!("{}", c);
    let v: i64 = s.parse().expect("integer coefficient");
    v.rem_euclid(P as i64) as u64
}

fn pow(mut b: u64, mut e: u64) -> u64 {
    let mut r = 1;
    b %= P;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % P;
        }
        b = b * b % P;
        e >>= 1;
    }
    r
}

fn all_monomials(nvars: u32, degree: u32) -> Vec<Monomial> {
    fn rec(v: u32, nvars: u32, left: u32, cur: &mut Vec<(u32, u32)>, out: &mut Vec<Monomial>) {
        if v == nvars {
            if left == 0 {
                out.push(Monomial::from_exponents(cur.iter().copied()));
            }
            return;
        }
        for e in 0..=left {
            cur.push((v, e));
            rec(v + 1, nvars, left - e, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, nvars, degree, &mut Vec::new(), &mut out);
    out
}

/// Whether the homogeneous `f` of degree `d` lies in the degree-`d` part
/// of the ideal generated by the homogeneous `gens`, by Gaussian
/// elimination modulo a large prime over the spanning set `m * g`.
pub fn in_degree_span<K: Field>(f: &Polynomial<K>, gens: &[Polynomial<K>]) -> bool {
    let d = match f.degree() {
        None => return true,
        Some(d) => d,
    };
    let nvars = f.ring().nvars() as u32;
    let mut rows: Vec<HashMap<Monomial, u64>> = Vec::new();
    for g in gens {
        let Some(dg) = g.degree() else { continue };
        if dg > d {
            continue;
        }
        for m in all_monomials(nvars, d - dg) {
            rows.push(
                g.terms()
                    .iter()
                    .map(|(c, t)| (t.mul(&m), modp(c)))
                    .collect(),
            );
        }
    }
    let mut basis: Vec<(Monomial, HashMap<Monomial, u64>)> = Vec::new();
    let reduce = |mut v: HashMap<Monomial, u64>, basis: &[(Monomial, HashMap<Monomial, u64>)]| {
        for (piv, b) in basis {
            if let Some(&c) = v.get(piv) {
                if c != 0 {
                    for (m, bc) in b {
                        let e = v.entry(m.clone()).or_insert(0);
                        *e = (*e + P - c * bc % P) % P;
                    }
                }
            }
        }
        v.retain(|_, c| *c != 0);
        v
    };
    for r in rows {
        let mut v = reduce(r, &basis);
        if let Some(piv) = v.keys().max().cloned() {
            let inv = pow(v[&piv], P - 2);
            for c in v.values_mut() {
                *c = *c * inv % P;
            }
            basis.push((piv, std::mem::take(&mut v)));
        }
    }
    let target: HashMap<Monomial, u64> = f
        .terms()
        .iter()
        .map(|(c, t)| (t.clone(), modp(c)))
        .collect();
    reduce(target, &basis).is_empty()
}

/// Number of monomials of each degree `0..=max` in `nvars` variables not
/// divisible by any of `gens`.
pub fn standard_monomial_counts(gens: &[Monomial], nvars: u32, max: u32) -> Vec<i128> {
    (0..=max)
        .map(|d| {
            all_monomials(nvars, d)
                .into_iter()
                .filter(|m| !gens.iter().any(|g| g.divides(m)))
                .count() as i128
        })
        .collect()
}
