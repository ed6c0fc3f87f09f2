//! Inner 2-minors, the ideal `I_P` and the matrix `M(P)`.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::geometry::{CellCollection, GridPoint, Interval};
use crate::groebner::IdealHandle;
use crate::polyalg::{build_ring, Field, Monomial, OrderKind, Polynomial, Ring, RingRef, Variable};
use crate::{Error, Result};

/// Which ambient ring `polyo_ideal` uses.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum RingChoice {
    /// Vertex-ranked ring with the requested [`TermOrder`].
    #[default]
    Default,
    /// The convex-collection order, under which the generators are a
    /// reduced Gröbner basis. Needs a weakly connected convex collection.
    ConvexCollection,
}

impl RingChoice {
    /// `1` or `2`, as in the package option.
    pub fn from_number(n: u32) -> Option<Self> {
        match n {
            1 => Some(RingChoice::Default),
            2 => Some(RingChoice::ConvexCollection),
            _ => None,
        }
    }

    pub fn number(self) -> u32 {
        match self {
            RingChoice::Default => 1,
            RingChoice::ConvexCollection => 2,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum TermOrder {
    #[default]
    Lex,
    GRevLex,
}

impl TermOrder {
    pub fn kind(self) -> OrderKind {
        match self {
            TermOrder::Lex => OrderKind::RankedLex,
            TermOrder::GRevLex => OrderKind::RankedGRevLex,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct IdealOptions {
    pub ring_choice: RingChoice,
    /// Ignored for [`RingChoice::ConvexCollection`].
    pub term_order: TermOrder,
}

/// The ring `polyo_ideal` would use.
pub fn ideal_ring<K: Field>(
    p: &CellCollection,
    ctx: K::Context,
    opts: IdealOptions,
) -> Result<RingRef<K>> {
    let kind = match opts.ring_choice {
        RingChoice::Default => opts.term_order.kind(),
        RingChoice::ConvexCollection => OrderKind::ConvexCollection,
    };
    build_ring(p, ctx, kind)
}

/// `x_a x_b - x_c x_d` for the interval with diagonal corners `a`, `b` and
/// anti-diagonal corners `c`, `d`.
pub fn inner_minor<K: Field>(iv: &Interval, ring: &RingRef<K>) -> Result<Polynomial<K>> {
    let (a, b) = iv.diagonal();
    let (c, d) = iv.anti_diagonal();
    let m = |p: GridPoint, q: GridPoint| ring.monomial([(Variable::X(p), 1), (Variable::X(q), 1)]);
    Ok(Polynomial::binomial(ring, m(a, b)?, m(c, d)?))
}

/// The ideal generated by the inner 2-minors, one generator per inner
/// interval in canonical interval order.
pub fn polyo_ideal<K: Field>(
    p: &CellCollection,
    ctx: K::Context,
    opts: IdealOptions,
) -> Result<IdealHandle<K>> {
    let ring = ideal_ring(p, ctx, opts)?;
    polyo_ideal_in(p, &ring)
}

/// [`polyo_ideal`] in a given ring containing all vertex variables.
pub fn polyo_ideal_in<K: Field>(p: &CellCollection, ring: &RingRef<K>) -> Result<IdealHandle<K>> {
    let gens = p
        .inner_intervals()
        .iter()
        .map(|iv| inner_minor(iv, ring))
        .collect::<Result<Vec<_>>>()?;
    IdealHandle::new(ring, gens)
}

/// `M(P)`: rows from the top row of the bounding interval down, columns
/// left to right; an entry is the vertex at that position or `None`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyoMatrix {
    /// Lower left and upper right corner of the smallest interval holding
    /// the collection.
    pub bounds: Interval,
    pub rows: Vec<Vec<Option<GridPoint>>>,
}

impl PolyoMatrix {
    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.rows.first().map_or(0, Vec::len)
    }

    /// Entry at the grid position `(i, j)`, if inside the bounds.
    pub fn at(&self, p: GridPoint) -> Option<Option<GridPoint>> {
        let Interval { a, b } = self.bounds;
        if p.i < a.i || p.i > b.i || p.j < a.j || p.j > b.j {
            return None;
        }
        Some(self.rows[(b.j - p.j) as usize][(p.i - a.i) as usize])
    }

    /// Plain text rendering with aligned columns, zeros as `0`.
    pub fn render(&self) -> String {
        let cell = |e: &Option<GridPoint>| match e {
            Some(p) => alloc::format!("{}", Variable::X(*p)),
            None => String::from("0"),
        };
        let width = self
            .rows
            .iter()
            .flatten()
            .map(|e| cell(e).len())
            .max()
            .unwrap_or(1);
        let mut out = String::new();
        for row in &self.rows {
            out.push('|');
            for e in row {
                out.push(' ');
                let s = cell(e);
                out.push_str(&s);
                out.extend(core::iter::repeat_n(' ', width - s.len()));
            }
            out.push_str(" |\n");
        }
        out
    }
}

impl fmt::Display for PolyoMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

pub fn polyo_matrix(p: &CellCollection) -> PolyoMatrix {
    let bounds = p.bounding_interval();
    let Interval { a, b } = bounds;
    let rows = (a.j..=b.j)
        .rev()
        .map(|j| {
            (a.i..=b.i)
                .map(|i| {
                    let g = GridPoint::new(i, j);
                    p.is_vertex(g).then_some(g)
                })
                .collect()
        })
        .collect();
    PolyoMatrix { bounds, rows }
}

fn minor<K: Field>(m: &PolyoMatrix, ring: &RingRef<K>, iv: &Interval) -> Result<Polynomial<K>> {
    let (a, b) = iv.diagonal();
    let (c, d) = iv.anti_diagonal();
    let entry = |p: GridPoint| -> Result<Polynomial<K>> {
        match m.at(p) {
            None => Err(Error::MatrixMismatch),
            Some(None) => Ok(Polynomial::zero(ring)),
            Some(Some(v)) => Polynomial::var(ring, Variable::X(v)),
        }
    };
    entry(a)?.mul(&entry(b)?)?.sub(&entry(c)?.mul(&entry(d)?)?)
}

/// The 2-minors of `M(P)` on the rows and columns of the inner intervals of
/// `P`; equal to the generators of `polyo_ideal`.
pub fn matrix_inner_minors<K: Field>(
    m: &PolyoMatrix,
    p: &CellCollection,
    ring: &RingRef<K>,
) -> Result<Vec<Polynomial<K>>> {
    if *m != polyo_matrix(p) {
        return Err(Error::MatrixMismatch);
    }
    p.inner_intervals()
        .iter()
        .map(|iv| minor(m, ring, iv))
        .collect()
}

/// Every nonzero 2-minor of `M(P)`, over all pairs of rows and columns.
/// For non-convex collections this is generally not the polyomino ideal.
pub fn matrix_all_minors<K: Field>(
    m: &PolyoMatrix,
    ring: &RingRef<K>,
) -> Result<Vec<Polynomial<K>>> {
    let Interval { a, b } = m.bounds;
    let mut out = Vec::new();
    for i1 in a.i..=b.i {
        for i2 in i1 + 1..=b.i {
            for j1 in a.j..=b.j {
                for j2 in j1 + 1..=b.j {
                    let iv = Interval {
                        a: GridPoint::new(i1, j1),
                        b: GridPoint::new(i2, j2),
                    };
                    let f = minor(m, ring, &iv)?;
                    if !f.is_zero() {
                        out.push(f);
                    }
                }
            }
        }
    }
    Ok(out)
}

/// The edge ring map `x_(i,j) -> s_i t_j`: the target ring (variables `s`
/// then `t`, lex) and the image of every variable of `ring`.
pub fn edge_ring_map<K: Field>(ring: &RingRef<K>) -> Result<(RingRef<K>, Vec<Polynomial<K>>)> {
    let mut is: Vec<i64> = Vec::new();
    let mut js: Vec<i64> = Vec::new();
    for v in ring.variables() {
        match v {
            Variable::X(p) => {
                is.push(p.i);
                js.push(p.j);
            }
            other => return Err(Error::UnknownVariable(*other)),
        }
    }
    is.sort_unstable();
    is.dedup();
    js.sort_unstable();
    js.dedup();
    let vars = is
        .iter()
        .map(|&i| Variable::S(i))
        .chain(js.iter().map(|&j| Variable::T(j)))
        .collect();
    let target = Ring::new(ring.context().clone(), vars, OrderKind::RankedLex)?;
    let images = ring
        .variables()
        .iter()
        .map(|v| {
            let Variable::X(p) = v else { unreachable!() };
            let m: Monomial = target.monomial([(Variable::S(p.i), 1), (Variable::T(p.j), 1)])?;
            Ok(Polynomial::term(&target, target.one(), m))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok((target, images))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyalg::Rational;
    use alloc::string::ToString;

    fn six_cell() -> CellCollection {
        CellCollection::from_corners([(1, 1), (2, 1), (3, 1), (2, 2), (3, 2), (2, 3)]).unwrap()
    }

    #[test]
    fn minors_follow_sign_convention() {
        let p = six_cell();
        let ring = ideal_ring::<Rational>(&p, (), IdealOptions::default()).unwrap();
        let iv = Interval {
            a: GridPoint::new(2, 1),
            b: GridPoint::new(4, 3),
        };
        assert_eq!(
            inner_minor(&iv, &ring).unwrap().to_string(),
            "x_(4,3)x_(2,1)-x_(4,1)x_(2,3)"
        );
        let iv = Interval {
            a: GridPoint::new(3, 2),
            b: GridPoint::new(4, 3),
        };
        assert_eq!(
            inner_minor(&iv, &ring).unwrap().to_string(),
            "x_(4,3)x_(3,2)-x_(4,2)x_(3,3)"
        );
    }

    #[test]
    fn matrix_layout() {
        let m = polyo_matrix(&six_cell());
        assert_eq!((m.nrows(), m.ncols()), (4, 4));
        assert_eq!(
            m.rows[0],
            [
                None,
                Some(GridPoint::new(2, 4)),
                Some(GridPoint::new(3, 4)),
                None
            ]
        );
        assert_eq!(
            m.rows[3],
            (1..=4)
                .map(|i| Some(GridPoint::new(i, 1)))
                .collect::<Vec<_>>()
        );
        assert!(m
            .render()
            .starts_with("| 0       x_(2,4) x_(3,4) 0       |\n"));
        let single = polyo_matrix(&CellCollection::from_corners([(5, 7)]).unwrap());
        assert_eq!(
            single.rows,
            [
                [Some(GridPoint::new(5, 8)), Some(GridPoint::new(6, 8))],
                [Some(GridPoint::new(5, 7)), Some(GridPoint::new(6, 7))]
            ]
        );
    }

    #[test]
    fn ring_choice_two_needs_convexity() {
        let path = CellCollection::from_corners([(1, 1), (2, 1), (2, 2), (2, 3), (1, 3)]).unwrap();
        let opts = IdealOptions {
            ring_choice: RingChoice::ConvexCollection,
            ..Default::default()
        };
        assert_eq!(
            polyo_ideal::<Rational>(&path, (), opts).unwrap_err(),
            Error::NotConvex
        );
        assert!(polyo_ideal::<Rational>(&six_cell(), (), opts).is_ok());
    }
}
