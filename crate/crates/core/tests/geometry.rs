mod common;

use std::collections::BTreeSet;

use common::*;
use polyideal_core::geometry::{Cell, CellCollection, Direction, GridPoint};
use proptest::prelude::*;

fn unit_edges(p: &CellCollection, dir: Direction) -> BTreeSet<(i64, i64)> {
    let mut out = BTreeSet::new();
    for c in p.cells() {
        let GridPoint { i, j } = c.lower_left();
        match dir {
            Direction::Horizontal => {
                out.insert((j, i));
                out.insert((j + 1, i));
            }
            Direction::Vertical => {
                out.insert((i, j));
                out.insert((i + 1, j));
            }
        }
    }
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(600))]

    #[test]
    fn inner_intervals_match_brute_force(p in arb_collection(8, 8)) {
        prop_assert_eq!(p.inner_intervals(), brute_inner_intervals(&p));
    }

    #[test]
    fn holes_match_union_find(p in arb_collection(8, 8)) {
        let got: Vec<Vec<(i64, i64)>> = p
            .detect_holes()
            .into_iter()
            .map(|h| {
                let mut v: Vec<_> = h.cells.iter().map(|c| (c.lower_left().i, c.lower_left().j)).collect();
                v.sort();
                v
            })
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        prop_assert_eq!(got, brute_holes(&p));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn corners_of_inner_intervals_are_vertices(p in arb_collection(6, 6)) {
        for iv in p.inner_intervals() {
            for c in iv.corners() {
                prop_assert!(p.is_vertex(c));
            }
        }
    }

    #[test]
    fn edge_intervals_partition_edges(p in arb_collection(6, 6)) {
        for dir in [Direction::Horizontal, Direction::Vertical] {
            let ivs = p.maximal_edge_intervals(dir);
            let mut covered = Vec::new();
            for iv in &ivs {
                prop_assert!(iv.lo < iv.hi);
                for k in iv.lo..iv.hi {
                    covered.push((iv.fixed, k));
                }
            }
            let set: BTreeSet<_> = covered.iter().copied().collect();
            prop_assert_eq!(set.len(), covered.len());
            let edges = unit_edges(&p, dir);
            prop_assert_eq!(&set, &edges);
            // maximality: the unit segments just beyond each end are not edges
            for iv in &ivs {
                prop_assert!(!edges.contains(&(iv.fixed, iv.lo - 1)));
                prop_assert!(!edges.contains(&(iv.fixed, iv.hi)));
            }
            for v in p.vertex_set() {
                prop_assert_eq!(ivs.iter().filter(|iv| iv.contains(v)).count(), 1);
            }
        }
    }

    #[test]
    fn filling_holes_leaves_none(p in arb_collection(6, 6)) {
        let holes = p.detect_holes();
        let mut all: Vec<Cell> = p.cells().collect();
        for h in &holes {
            for c in &h.cells {
                prop_assert!(!p.contains(*c));
                all.push(*c);
            }
            let min = h.cells.iter().flat_map(|c| c.vertices()).min().unwrap();
            prop_assert_eq!(h.corner, min);
        }
        let filled = CellCollection::new(all).unwrap();
        prop_assert_eq!(filled.classify().hole_count, 0);
    }

    #[test]
    fn translation_equivariance(p in arb_collection(5, 5), di in -20i64..20, dj in -20i64..20) {
        let q = p.translate(di, dj).unwrap();
        let shift = |g: GridPoint| g.offset(di, dj);
        prop_assert_eq!(q.vertex_set(), p.vertex_set().into_iter().map(shift).collect::<Vec<_>>());
        prop_assert_eq!(q.inner_intervals(), p.inner_intervals().iter().map(|iv| iv.translate(di, dj)).collect::<Vec<_>>());
        for dir in [Direction::Horizontal, Direction::Vertical] {
            let (a, b) = (p.maximal_edge_intervals(dir), q.maximal_edge_intervals(dir));
            prop_assert_eq!(a.len(), b.len());
            for (x, y) in a.iter().zip(&b) {
                let (e1, e2) = x.endpoints();
                prop_assert_eq!(y.endpoints(), (shift(e1), shift(e2)));
            }
        }
        let hc: Vec<_> = p.detect_holes().iter().map(|h| shift(h.corner)).collect();
        prop_assert_eq!(q.detect_holes().iter().map(|h| h.corner).collect::<Vec<_>>(), hc);
        prop_assert_eq!(q.classify(), p.classify());
    }

    #[test]
    fn classification_is_consistent(p in arb_collection(5, 5)) {
        let c = p.classify();
        prop_assert_eq!(c.convex, c.row_convex && c.column_convex);
        prop_assert_eq!(c.hole_count, p.detect_holes().len());
        if c.weakly_connected {
            prop_assert_eq!(c.simple, c.hole_count == 0);
        }
        if c.is_polyomino {
            prop_assert!(c.weakly_connected);
            prop_assert_eq!(c.component_count, 1);
        }
        prop_assert!(c.component_count >= 1);
    }
}

#[test]
fn reference_collections() {
    assert_eq!(six_cell().vertex_set().len(), 13);
    assert_eq!(six_cell().vertex_set()[0], gp(4, 3));
    assert_eq!(*six_cell().vertex_set().last().unwrap(), gp(1, 1));
    assert_eq!(six_cell().inner_intervals().len(), 15);
    let c = six_cell().classify();
    assert!(c.is_polyomino && c.weakly_connected && c.convex && c.simple);

    let c = seven_cell().classify();
    assert!(c.weakly_connected && c.simple && !c.is_polyomino);

    let c = closed_path().classify();
    assert!(c.is_polyomino && !c.simple && c.hole_count == 1);
    assert!(!c.convex);
    let holes = closed_path().detect_holes();
    assert_eq!(holes[0].corner, gp(2, 3));
    let cells: BTreeSet<_> = holes[0].cells.iter().map(|c| c.lower_left()).collect();
    assert_eq!(
        cells,
        [gp(3, 2), gp(2, 3), gp(3, 3), gp(4, 3), gp(3, 4)]
            .into_iter()
            .collect()
    );

    let holes = nonconvex12().detect_holes();
    assert_eq!(holes.len(), 1);
    assert_eq!(holes[0].cells, vec![Cell::at(3, 3)]);
    assert_eq!(holes[0].corner, gp(3, 3));
    assert_eq!(nonconvex12().vertex_set().len(), 24);

    assert!(convex12().classify().convex);
    assert_eq!(convex12().inner_intervals().len(), 44);
}

#[test]
fn single_cell_edges() {
    let p = cells(&[(1, 1)]);
    let h = p.maximal_edge_intervals(Direction::Horizontal);
    assert_eq!(
        h.iter().map(|e| (e.fixed, e.lo, e.hi)).collect::<Vec<_>>(),
        vec![(1, 1, 2), (2, 1, 2)]
    );
}
