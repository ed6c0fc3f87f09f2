use alloc::collections::BTreeMap;
use alloc::format;
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use super::{Field, Monomial, MonomialOrder, OrderKind};
use crate::geometry::{CellCollection, GridPoint};
use crate::{Error, Result};

/// A ring variable.
///
/// `X` are the vertex variables `x_(i,j)`; `H`, `V`, `W` the auxiliary
/// variables of the toric parametrization (maximal horizontal and vertical
/// edge intervals, holes); `S`, `T` the row/column variables of the edge
/// ring `x_(i,j) -> s_i t_j`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Variable {
    X(GridPoint),
    H(u32),
    V(u32),
    W(u32),
    S(i64),
    T(i64),
}

impl fmt::Display for Variable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Variable::X(p) => write!(f, "x_({},{})", p.i, p.j),
            Variable::H(k) => write!(f, "h_{}", k),
            Variable::V(k) => write!(f, "v_{}", k),
            Variable::W(k) => write!(f, "w_{}", k),
            Variable::S(k) => write!(f, "s_{}", k),
            Variable::T(k) => write!(f, "t_{}", k),
        }
    }
}

/// A polynomial ring `K[vars]` with a fixed monomial order.
///
/// Variables are ranked by their position in `vars`: position 0 is the
/// largest variable.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Ring<K: Field> {
    ctx: K::Context,
    vars: Vec<Variable>,
    index: BTreeMap<Variable, u32>,
    order: MonomialOrder,
}

pub type RingRef<K> = Arc<Ring<K>>;

impl<K: Field> Ring<K> {
    pub fn new(ctx: K::Context, vars: Vec<Variable>, kind: OrderKind) -> Result<RingRef<K>> {
        let mut index = BTreeMap::new();
        for (n, v) in vars.iter().enumerate() {
            if index.insert(*v, n as u32).is_some() {
                return Err(Error::Internal(format!("variable {} listed twice", v)));
            }
        }
        if let OrderKind::Elimination { block } = kind {
            if block as usize > vars.len() {
                return Err(Error::NotEliminationOrder);
            }
        }
        Ok(Arc::new(Ring {
            ctx,
            vars,
            index,
            order: MonomialOrder::new(kind),
        }))
    }

    pub fn context(&self) -> &K::Context {
        &self.ctx
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn variables(&self) -> &[Variable] {
        &self.vars
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn rank_of(&self, v: Variable) -> Result<u32> {
        self.index.get(&v).copied().ok_or(Error::UnknownVariable(v))
    }

    pub fn variable(&self, rank: u32) -> Variable {
        self.vars[rank as usize]
    }

    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Ordering {
        self.order.compare(a, b)
    }

    /// Monomial from `(variable, exponent)` pairs.
    pub fn monomial<I: IntoIterator<Item = (Variable, u32)>>(&self, pairs: I) -> Result<Monomial> {
        let mut exps = Vec::new();
        for (v, e) in pairs {
            exps.push((self.rank_of(v)?, e));
        }
        Ok(Monomial::from_exponents(exps))
    }

    pub fn zero(&self) -> K {
        K::zero(&self.ctx)
    }

    pub fn one(&self) -> K {
        K::one(&self.ctx)
    }

    /// Same variables and field, different order kind.
    pub fn with_order(&self, kind: OrderKind) -> Result<RingRef<K>> {
        Ring::new(self.ctx.clone(), self.vars.clone(), kind)
    }

    /// `QQ[x_(4,3), x_(4,2), ...]`.
    pub fn describe(&self) -> alloc::string::String {
        let mut s = K::describe(&self.ctx);
        s.push('[');
        for (n, v) in self.vars.iter().enumerate() {
            if n > 0 {
                s.push_str(", ");
            }
            s.push_str(&format!("{}", v));
        }
        s.push(']');
        s
    }
}

/// The ring `S_P = K[x_v : v ∈ V(P)]` with the requested order.
///
/// For `RankedLex`, `RankedGRevLex` and `Elimination` the variables are
/// ranked by the vertex order, largest vertex first. For `ConvexCollection`
/// the collection must be weakly connected and convex; the ranking is
/// [`convex_ranking`] and the ring is only returned once the inner 2-minors
/// have been checked to form a reduced Gröbner basis with squarefree
/// quadratic leading terms.
pub fn build_ring<K: Field>(
    p: &CellCollection,
    ctx: K::Context,
    kind: OrderKind,
) -> Result<RingRef<K>> {
    if kind != OrderKind::ConvexCollection {
        let vars = p.vertex_set().into_iter().map(Variable::X).collect();
        return Ring::new(ctx, vars, kind);
    }
    let class = p.classify();
    if !class.weakly_connected || !class.convex {
        return Err(Error::NotConvex);
    }
    let vars = convex_ranking(p).into_iter().map(Variable::X).collect();
    let ring = Ring::new(ctx, vars, kind)?;
    validate_convex_ring(p, &ring)?;
    Ok(ring)
}

/// Vertex ranking for the convex-collection order: column major over a
/// permutation of the columns and rows of `M(P)`.
///
/// Columns of vertices are taken by lowest vertex ascending, then highest
/// vertex descending, then the number of vertices in the two adjacent
/// columns ascending, then coordinate descending. Rows are taken by
/// rightmost vertex ascending, then leftmost vertex descending, then the
/// number of vertices in the two adjacent rows descending, then coordinate
/// descending.
pub fn convex_ranking(p: &CellCollection) -> Vec<GridPoint> {
    let verts = p.vertex_set();
    let mut cols: BTreeMap<i64, (i64, i64, i64)> = BTreeMap::new();
    let mut rows: BTreeMap<i64, (i64, i64, i64)> = BTreeMap::new();
    for v in &verts {
        let c = cols.entry(v.i).or_insert((v.j, v.j, 0));
        c.0 = c.0.min(v.j);
        c.1 = c.1.max(v.j);
        c.2 += 1;
        let r = rows.entry(v.j).or_insert((v.i, v.i, 0));
        r.0 = r.0.min(v.i);
        r.1 = r.1.max(v.i);
        r.2 += 1;
    }
    let size = |m: &BTreeMap<i64, (i64, i64, i64)>, k: i64| m.get(&k).map_or(0, |e| e.2);
    let mut col_order: Vec<i64> = cols.keys().copied().collect();
    col_order.sort_by_key(|&i| {
        let (lo, hi, _) = cols[&i];
        (lo, -hi, size(&cols, i - 1) + size(&cols, i + 1), -i)
    });
    let mut row_order: Vec<i64> = rows.keys().copied().collect();
    row_order.sort_by_key(|&j| {
        let (lo, hi, _) = rows[&j];
        (hi, -lo, -(size(&rows, j - 1) + size(&rows, j + 1)), -j)
    });
    let mut out = Vec::with_capacity(verts.len());
    for &i in &col_order {
        for &j in &row_order {
            let g = GridPoint::new(i, j);
            if p.is_vertex(g) {
                out.push(g);
            }
        }
    }
    out
}

fn validate_convex_ring<K: Field>(p: &CellCollection, ring: &RingRef<K>) -> Result<()> {
    let gens = p
        .inner_intervals()
        .iter()
        .map(|iv| crate::ideals::inner_minor(iv, ring))
        .collect::<Result<Vec<_>>>()?;
    for g in &gens {
        let lead = g.leading_monomial().expect("binomial");
        if lead.degree() != 2 || !lead.is_squarefree() {
            return Err(Error::ConvexOrderInvalid(format!(
                "leading term of {} is not a squarefree quadric",
                g
            )));
        }
    }
    if !crate::groebner::is_reduced_groebner_basis(&gens)? {
        return Err(Error::ConvexOrderInvalid(
            "inner 2-minors are not a reduced Gröbner basis".into(),
        ));
    }
    Ok(())
}
