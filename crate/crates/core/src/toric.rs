//! The toric ideal `J_P`.
//!
//! Each vertex `a` is sent to `h_i v_j ∏ w_k`, where `h_i` and `v_j` are the
//! maximal horizontal and vertical edge intervals through `a` and `k` runs
//! over the holes whose set `F_k = {(i,j) ∈ V(P) : i ≤ i_k, j ≤ j_k}`
//! contains `a`, `(i_k, j_k)` being the lower left corner of the hole.
//! `J_P` is the kernel of the induced map, computed by eliminating the
//! auxiliary variables from `⟨x_a - α(a)⟩`.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::geometry::{CellCollection, Direction, EdgeInterval, GridPoint};
use crate::groebner::IdealHandle;
use crate::ideals::{ideal_ring, polyo_ideal_in, IdealOptions};
use crate::polyalg::{Field, Monomial, OrderKind, Polynomial, Ring, RingRef, Variable};
use crate::{Error, Limits, Result};

/// `F_k` for every hole corner, each sorted descending like the vertex set.
pub fn f_sets(p: &CellCollection, holes: &[GridPoint]) -> Vec<Vec<GridPoint>> {
    let verts = p.vertex_set();
    holes
        .iter()
        .map(|e| {
            verts
                .iter()
                .copied()
                .filter(|v| v.i <= e.i && v.j <= e.j)
                .collect()
        })
        .collect()
}

/// The data of the monomial map `α`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlphaAssignment {
    /// Maximal horizontal edge intervals; `h_k` is the `k`-th.
    pub horizontal: Vec<EdgeInterval>,
    /// Maximal vertical edge intervals; `v_k` is the `k`-th.
    pub vertical: Vec<EdgeInterval>,
    /// Hole corners; `w_k` is the `k`-th.
    pub holes: Vec<GridPoint>,
    /// Per vertex: indices of its horizontal and vertical interval and of
    /// the holes whose `F_k` contains it.
    pub images: BTreeMap<GridPoint, (u32, u32, Vec<u32>)>,
}

impl AlphaAssignment {
    /// `h_0.., v_0.., w_0..`.
    pub fn auxiliary_variables(&self) -> Vec<Variable> {
        let h = (0..self.horizontal.len() as u32).map(Variable::H);
        let v = (0..self.vertical.len() as u32).map(Variable::V);
        let w = (0..self.holes.len() as u32).map(Variable::W);
        h.chain(v).chain(w).collect()
    }

    /// `α(a)` as variable/exponent pairs.
    pub fn image(&self, a: GridPoint) -> Option<Vec<(Variable, u32)>> {
        let (h, v, ws) = self.images.get(&a)?;
        let mut out = alloc::vec![(Variable::H(*h), 1), (Variable::V(*v), 1)];
        out.extend(ws.iter().map(|&k| (Variable::W(k), 1)));
        Some(out)
    }
}

/// Builds `α`. `holes` are the hole corners; `None` means the detected
/// holes.
pub fn alpha(p: &CellCollection, holes: Option<&[GridPoint]>) -> Result<AlphaAssignment> {
    if !p.is_weakly_connected() {
        return Err(Error::NotWeaklyConnected);
    }
    let holes: Vec<GridPoint> = match holes {
        Some(h) => h.to_vec(),
        None => p.detect_holes().into_iter().map(|h| h.corner).collect(),
    };
    let horizontal = p.maximal_edge_intervals(Direction::Horizontal);
    let vertical = p.maximal_edge_intervals(Direction::Vertical);
    let f = f_sets(p, &holes);
    let find = |ivs: &[EdgeInterval], v: GridPoint| -> Result<u32> {
        let mut hits = ivs.iter().enumerate().filter(|(_, iv)| iv.contains(v));
        match (hits.next(), hits.next()) {
            (Some((k, _)), None) => Ok(k as u32),
            _ => Err(Error::Internal(alloc::format!(
                "vertex {} not in exactly one maximal edge interval",
                v
            ))),
        }
    };
    let mut images = BTreeMap::new();
    for v in p.vertex_set() {
        let ws = (0..holes.len() as u32)
            .filter(|&k| f[k as usize].contains(&v))
            .collect();
        images.insert(v, (find(&horizontal, v)?, find(&vertical, v)?, ws));
    }
    Ok(AlphaAssignment {
        horizontal,
        vertical,
        holes,
        images,
    })
}

/// The parametrization ring: auxiliaries first (eliminated block), then the
/// vertex variables in the order of `x_ring`.
fn elimination_ring<K: Field>(a: &AlphaAssignment, x_ring: &RingRef<K>) -> Result<RingRef<K>> {
    let aux = a.auxiliary_variables();
    let block = aux.len() as u32;
    let mut vars = aux;
    vars.extend_from_slice(x_ring.variables());
    Ring::new(
        x_ring.context().clone(),
        vars,
        OrderKind::Elimination { block },
    )
}

/// `J_P` in `x_ring`, which must consist of the vertex variables of `P`.
pub fn polyo_toric_in<K: Field>(
    p: &CellCollection,
    holes: Option<&[GridPoint]>,
    x_ring: &RingRef<K>,
    limits: Limits<'_>,
) -> Result<IdealHandle<K>> {
    let a = alpha(p, holes)?;
    let ring = elimination_ring(&a, x_ring)?;
    let mut gens = Vec::with_capacity(a.images.len());
    for (&v, _) in a.images.iter().rev() {
        let x = ring.monomial([(Variable::X(v), 1)])?;
        let img = ring.monomial(a.image(v).expect("vertex"))?;
        gens.push(Polynomial::binomial(&ring, x, img));
    }
    let elim = IdealHandle::new(&ring, gens)?.eliminate(&a.auxiliary_variables(), limits)?;
    let mapped = elim
        .generators()
        .iter()
        .map(|g| g.map_to(x_ring).map(|f| f.monic()))
        .collect::<Result<Vec<_>>>()?;
    IdealHandle::new(x_ring, mapped)
}

/// `J_P` in the default ring of `polyo_ideal`.
pub fn polyo_toric<K: Field>(
    p: &CellCollection,
    holes: Option<&[GridPoint]>,
    ctx: K::Context,
    limits: Limits<'_>,
) -> Result<IdealHandle<K>> {
    let ring = ideal_ring(p, ctx, IdealOptions::default())?;
    polyo_toric_in(p, holes, &ring, limits)
}

/// Substitutes `α` into `f`: the image of `f` in the ring of the
/// auxiliary variables. Zero exactly when `f ∈ J_P`.
pub fn alpha_image<K: Field>(a: &AlphaAssignment, f: &Polynomial<K>) -> Result<Polynomial<K>> {
    let aux_ring = Ring::new(
        f.ring().context().clone(),
        a.auxiliary_variables(),
        OrderKind::RankedLex,
    )?;
    let mut terms = Vec::with_capacity(f.len());
    for (c, m) in f.terms() {
        let mut img = Monomial::one();
        for &(r, e) in m.exponents() {
            let Variable::X(v) = f.ring().variable(r) else {
                return Err(Error::UnknownVariable(f.ring().variable(r)));
            };
            let pairs = a.image(v).ok_or(Error::UnknownVariable(Variable::X(v)))?;
            let single = aux_ring.monomial(pairs.into_iter().map(|(x, k)| (x, k * e)))?;
            img = img.mul(&single);
        }
        terms.push((c.clone(), img));
    }
    Ok(Polynomial::from_terms(&aux_ring, terms))
}

#[derive(Debug, Clone)]
pub struct ToricComparison<K: Field> {
    pub equal: bool,
    /// Minimal generators of `J_P` of degree at least 3; empty when equal.
    pub extra_generators: Vec<Polynomial<K>>,
    /// Whether the collection is simple and weakly connected, in which case
    /// the two ideals are known to coincide.
    pub theorem_applies: bool,
    pub ideal: IdealHandle<K>,
    pub toric: IdealHandle<K>,
}

/// Compares `I_P` with `J_P` in the ring of `polyo_ideal` with `opts`.
pub fn toric_compare<K: Field>(
    p: &CellCollection,
    holes: Option<&[GridPoint]>,
    ctx: K::Context,
    opts: IdealOptions,
    limits: Limits<'_>,
) -> Result<ToricComparison<K>> {
    let class = p.classify();
    if !class.weakly_connected {
        return Err(Error::NotWeaklyConnected);
    }
    let ring = ideal_ring(p, ctx, opts)?;
    let ideal = polyo_ideal_in(p, &ring)?;
    let toric = polyo_toric_in(p, holes, &ring, limits)?;
    let equal = ideal.ideal_equal(&toric, limits)?;
    let extra_generators = if equal {
        Vec::new()
    } else {
        toric
            .minimal_generators(limits)?
            .into_iter()
            .filter(|g| g.degree().is_some_and(|d| d >= 3))
            .collect()
    };
    Ok(ToricComparison {
        equal,
        extra_generators,
        theorem_applies: class.simple && class.weakly_connected,
        ideal,
        toric,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyalg::Rational;
    use alloc::string::ToString;

    #[test]
    fn single_cell_kernel() {
        let p = CellCollection::from_corners([(1, 1)]).unwrap();
        let j = polyo_toric::<Rational>(&p, None, (), Limits::default()).unwrap();
        assert_eq!(j.generators().len(), 1);
        assert_eq!(
            j.generators()[0].to_string(),
            "x_(2,2)x_(1,1)-x_(2,1)x_(1,2)"
        );
        let c = toric_compare::<Rational>(&p, None, (), IdealOptions::default(), Limits::default())
            .unwrap();
        assert!(c.equal && c.theorem_applies && c.extra_generators.is_empty());
    }

    #[test]
    fn f_sets_filter_by_corner() {
        let p = CellCollection::from_corners([(1, 1), (2, 1)]).unwrap();
        assert!(f_sets(&p, &[]).is_empty());
        assert_eq!(f_sets(&p, &[GridPoint::new(0, 0)]), [Vec::new()]);
        assert_eq!(
            f_sets(&p, &[GridPoint::new(2, 1)]),
            [[GridPoint::new(2, 1), GridPoint::new(1, 1)]]
        );
    }

    #[test]
    fn rejects_disconnected() {
        let p = CellCollection::from_corners([(1, 1), (4, 4)]).unwrap();
        assert_eq!(alpha(&p, None).unwrap_err(), Error::NotWeaklyConnected);
    }
}
