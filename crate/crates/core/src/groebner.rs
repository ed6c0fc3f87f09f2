//! Buchberger's algorithm and the ideal operations built on it.
//!
//! S-pairs are selected by the normal strategy (smallest lcm degree first)
//! and pruned with the Gebauer–Möller installation of Buchberger's product
//! and chain criteria. Reduced Gröbner bases are unique, so the selection
//! order never shows in the output.

use alloc::boxed::Box;
use alloc::vec::Vec;
use core::cmp::Ordering;

use once_cell::race::OnceBox;

use crate::polyalg::{Field, Monomial, MonomialOrder, Polynomial, RingRef, Term, Variable};
use crate::{Error, Limits, Result};

fn check_ring<K: Field>(ring: &RingRef<K>, polys: &[Polynomial<K>]) -> Result<()> {
    if polys
        .iter()
        .all(|p| crate::polyalg::same_ring(p.ring(), ring))
    {
        Ok(())
    } else {
        Err(Error::RingMismatch)
    }
}

/// Division with remainder. Returns the quotients (one per divisor) and the
/// remainder, whose terms are not divisible by any leading monomial of `g`.
///
/// The leftmost (largest) reducible term is rewritten first, trying the
/// divisors in sequence order.
pub fn divide<K: Field>(
    f: &Polynomial<K>,
    g: &[Polynomial<K>],
) -> Result<(Vec<Polynomial<K>>, Polynomial<K>)> {
    check_ring(f.ring(), g)?;
    let ring = f.ring();
    let mut quotients: Vec<Vec<Term<K>>> = g.iter().map(|_| Vec::new()).collect();
    let rem = reduce_terms(
        ring,
        f.terms().to_vec(),
        g.iter().filter(|p| !p.is_zero()),
        Some(&mut quotients),
        g,
    )?;
    let quotients = quotients
        .into_iter()
        .map(|t| Polynomial::from_terms(ring, t))
        .collect();
    Ok((quotients, Polynomial::from_sorted(ring, rem)))
}

/// Remainder of `f` on division by `g` (see [`divide`]).
pub fn normal_form<K: Field>(f: &Polynomial<K>, g: &[Polynomial<K>]) -> Result<Polynomial<K>> {
    check_ring(f.ring(), g)?;
    let ring = f.ring();
    let rem = reduce_terms(
        ring,
        f.terms().to_vec(),
        g.iter().filter(|p| !p.is_zero()),
        None,
        g,
    )?;
    Ok(Polynomial::from_sorted(ring, rem))
}

fn reduce_terms<'a, K: Field, I>(
    ring: &RingRef<K>,
    mut rest: Vec<Term<K>>,
    reducers: I,
    mut quotients: Option<&mut Vec<Vec<Term<K>>>>,
    all: &[Polynomial<K>],
) -> Result<Vec<Term<K>>>
where
    I: Iterator<Item = &'a Polynomial<K>> + Clone,
{
    let order = ring.order();
    let mut done: Vec<Term<K>> = Vec::new();
    // `rest` is kept reversed so the current largest term pops off the end
    rest.reverse();
    while let Some((c, m)) = rest.pop() {
        let hit = reducers.clone().find_map(|g| {
            let (lc, lm) = g.leading_term()?;
            m.div(lm).map(|q| (g, lc, q))
        });
        match hit {
            None => done.push((c, m)),
            Some((g, lc, q)) => {
                let factor = c.div(lc);
                if let Some(qs) = quotients.as_deref_mut() {
                    let k = all
                        .iter()
                        .position(|p| core::ptr::eq(p, g))
                        .expect("reducer from list");
                    qs[k].push((factor.clone(), q.clone()));
                }
                let tail = &g.terms()[1..];
                rest.reverse();
                let neg = factor.neg();
                rest = crate::polyalg::merge_add(order, &rest, tail, Some((&neg, &q)));
                rest.reverse();
            }
        }
    }
    Ok(done)
}

/// The S-polynomial of `f` and `g`.
pub fn s_polynomial<K: Field>(f: &Polynomial<K>, g: &Polynomial<K>) -> Result<Polynomial<K>> {
    let (Some((cf, mf)), Some((cg, mg))) = (f.leading_term(), g.leading_term()) else {
        return Ok(Polynomial::zero(f.ring()));
    };
    let l = mf.lcm(mg);
    let a = f.mul_term(&cf.inv(), &l.div(mf).expect("lcm"));
    let b = g.mul_term(&cg.inv(), &l.div(mg).expect("lcm"));
    a.sub(&b)
}

#[derive(Debug, Clone)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
}

/// Incremental Buchberger state. Supports adding generators after a
/// partial run and running only up to a degree bound, which is what the
/// degree-by-degree minimal generator computation needs.
struct Engine<'l, K: Field> {
    ring: RingRef<K>,
    order: MonomialOrder,
    basis: Vec<Polynomial<K>>,
    active: Vec<bool>,
    pairs: Vec<Pair>,
    pairs_done: usize,
    limits: Limits<'l>,
}

impl<'l, K: Field> Engine<'l, K> {
    fn new(ring: &RingRef<K>, limits: Limits<'l>) -> Self {
        Engine {
            ring: ring.clone(),
            order: ring.order(),
            basis: Vec::new(),
            active: Vec::new(),
            pairs: Vec::new(),
            pairs_done: 0,
            limits,
        }
    }

    fn reducers(&self) -> impl Iterator<Item = &Polynomial<K>> + Clone {
        self.basis
            .iter()
            .zip(&self.active)
            .filter(|(_, &a)| a)
            .map(|(p, _)| p)
    }

    fn reduce(&self, f: &Polynomial<K>) -> Result<Polynomial<K>> {
        let rem = reduce_terms(&self.ring, f.terms().to_vec(), self.reducers(), None, &[])?;
        Ok(Polynomial::from_sorted(&self.ring, rem))
    }

    /// Reduces `f` and, if nonzero, installs it with the Gebauer–Möller
    /// update. Returns whether the basis grew.
    fn insert(&mut self, f: &Polynomial<K>) -> Result<bool> {
        let h = self.reduce(f)?.monic();
        if h.is_zero() {
            return Ok(false);
        }
        let t = self.basis.len();
        let lh = h.leading_monomial().expect("nonzero").clone();
        self.basis.push(h);
        self.active.push(true);

        let lead = |k: usize| self.basis[k].leading_monomial().expect("nonzero");
        let mut c: Vec<(usize, Monomial, bool)> = (0..t)
            .filter(|&k| self.active[k])
            .map(|k| {
                let lk = lead(k);
                (k, lk.lcm(&lh), lk.is_coprime(&lh))
            })
            .collect();
        // chain criterion among the new pairs
        let mut d: Vec<(usize, Monomial, bool)> = Vec::new();
        while let Some((k, l, coprime)) = c.pop() {
            let dominated = c.iter().chain(d.iter()).any(|(_, l2, _)| l2.divides(&l));
            if coprime || !dominated {
                d.push((k, l, coprime));
            }
        }
        // old pairs made redundant by the new lead
        let basis = &self.basis;
        self.pairs.retain(|p| {
            if !lh.divides(&p.lcm) {
                return true;
            }
            let li = basis[p.i].leading_monomial().expect("nonzero").lcm(&lh);
            let lj = basis[p.j].leading_monomial().expect("nonzero").lcm(&lh);
            li == p.lcm || lj == p.lcm
        });
        // product criterion
        for (k, l, coprime) in d {
            if !coprime {
                self.pairs.push(Pair { i: k, j: t, lcm: l });
            }
        }
        for k in 0..t {
            if self.active[k] && lh.divides(lead(k)) {
                self.active[k] = false;
            }
        }
        Ok(true)
    }

    /// Processes pairs, smallest lcm degree first, while the lcm degree is
    /// at most `bound` (unbounded when `None`).
    fn run(&mut self, bound: Option<u32>) -> Result<()> {
        loop {
            let order = self.order;
            let best = self
                .pairs
                .iter()
                .enumerate()
                .filter(|(_, p)| bound.is_none_or(|b| p.lcm.degree() <= b))
                .min_by(|(_, a), (_, b)| {
                    a.lcm
                        .degree()
                        .cmp(&b.lcm.degree())
                        .then_with(|| order.compare(&a.lcm, &b.lcm))
                        .then_with(|| (a.j, a.i).cmp(&(b.j, b.i)))
                })
                .map(|(n, _)| n);
            let Some(n) = best else { return Ok(()) };
            let pair = self.pairs.swap_remove(n);
            self.pairs_done += 1;
            self.limits.check(self.pairs_done)?;
            let s = s_polynomial(&self.basis[pair.i], &self.basis[pair.j])?;
            self.insert(&s)?;
        }
    }

    /// The reduced Gröbner basis of what has been inserted (valid after an
    /// unbounded `run`).
    fn reduced(&self) -> Result<Vec<Polynomial<K>>> {
        let minimal: Vec<&Polynomial<K>> = self.reducers().collect();
        let mut out = Vec::with_capacity(minimal.len());
        for (n, g) in minimal.iter().enumerate() {
            let others = minimal
                .iter()
                .enumerate()
                .filter(|&(m, _)| m != n)
                .map(|(_, p)| *p);
            let (head, tail) = g.terms().split_first().expect("nonzero");
            let rem = reduce_terms(&self.ring, tail.to_vec(), others, None, &[])?;
            let mut terms = Vec::with_capacity(rem.len() + 1);
            terms.push(head.clone());
            terms.extend(rem);
            out.push(Polynomial::from_sorted(&self.ring, terms).monic());
        }
        let order = self.order;
        out.sort_by(|a, b| {
            order.compare(b.leading_monomial().unwrap(), a.leading_monomial().unwrap())
        });
        Ok(out)
    }
}

/// The reduced Gröbner basis of the ideal generated by `f`, under the order
/// of their ring: monic, inter-reduced, sorted by leading monomial
/// descending.
pub fn buchberger_reduced<K: Field>(
    f: &[Polynomial<K>],
    limits: Limits<'_>,
) -> Result<Vec<Polynomial<K>>> {
    let Some(first) = f.first() else {
        return Ok(Vec::new());
    };
    check_ring(first.ring(), f)?;
    let mut engine = Engine::new(first.ring(), limits);
    for p in f {
        engine.insert(p)?;
    }
    engine.run(None)?;
    engine.reduced()
}

/// Whether every S-pair of `g` reduces to zero modulo `g`.
pub fn is_groebner_basis<K: Field>(g: &[Polynomial<K>]) -> Result<bool> {
    let g: Vec<Polynomial<K>> = g.iter().filter(|p| !p.is_zero()).cloned().collect();
    for i in 0..g.len() {
        for j in i + 1..g.len() {
            if !normal_form(&s_polynomial(&g[i], &g[j])?, &g)?.is_zero() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Whether `g` is a reduced Gröbner basis up to scaling: a Gröbner basis in
/// which no term of any element is divisible by the lead of another.
pub fn is_reduced_groebner_basis<K: Field>(g: &[Polynomial<K>]) -> Result<bool> {
    for (n, p) in g.iter().enumerate() {
        for (m, q) in g.iter().enumerate() {
            if n == m {
                continue;
            }
            let lq = q
                .leading_monomial()
                .ok_or(Error::Internal("zero element".into()))?;
            if p.terms().iter().any(|(_, t)| lq.divides(t)) {
                return Ok(false);
            }
        }
    }
    is_groebner_basis(g)
}

/// A finitely generated ideal together with its ring. The reduced Gröbner
/// basis is computed on first use and cached.
pub struct IdealHandle<K: Field> {
    ring: RingRef<K>,
    generators: Vec<Polynomial<K>>,
    gb: OnceBox<Vec<Polynomial<K>>>,
}

impl<K: Field> Clone for IdealHandle<K> {
    fn clone(&self) -> Self {
        let gb = OnceBox::new();
        if let Some(g) = self.gb.get() {
            let _ = gb.set(Box::new(g.clone()));
        }
        IdealHandle {
            ring: self.ring.clone(),
            generators: self.generators.clone(),
            gb,
        }
    }
}

impl<K: Field> core::fmt::Debug for IdealHandle<K> {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.debug_struct("IdealHandle")
            .field("generators", &self.generators)
            .finish_non_exhaustive()
    }
}

impl<K: Field> IdealHandle<K> {
    pub fn new(ring: &RingRef<K>, generators: Vec<Polynomial<K>>) -> Result<Self> {
        check_ring(ring, &generators)?;
        Ok(IdealHandle {
            ring: ring.clone(),
            generators,
            gb: OnceBox::new(),
        })
    }

    pub fn ring(&self) -> &RingRef<K> {
        &self.ring
    }

    pub fn generators(&self) -> &[Polynomial<K>] {
        &self.generators
    }

    /// Reduced Gröbner basis under the ring's order.
    pub fn groebner_basis(&self, limits: Limits<'_>) -> Result<&[Polynomial<K>]> {
        self.gb
            .get_or_try_init(|| buchberger_reduced(&self.generators, limits).map(Box::new))
            .map(|g| g.as_slice())
    }

    /// The cached basis, if already computed.
    pub fn cached_groebner_basis(&self) -> Option<&[Polynomial<K>]> {
        self.gb.get().map(|g| g.as_slice())
    }

    pub fn is_zero_ideal(&self) -> bool {
        self.generators.iter().all(Polynomial::is_zero)
    }

    pub fn member(&self, f: &Polynomial<K>, limits: Limits<'_>) -> Result<bool> {
        if !crate::polyalg::same_ring(f.ring(), &self.ring) {
            return Err(Error::RingMismatch);
        }
        Ok(normal_form(f, self.groebner_basis(limits)?)?.is_zero())
    }

    /// Whether every generator of `self` lies in `other`.
    pub fn is_subset_of(&self, other: &IdealHandle<K>, limits: Limits<'_>) -> Result<bool> {
        for g in &self.generators {
            if !other.member(g, limits)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Equality of ideals, by comparing reduced Gröbner bases.
    pub fn ideal_equal(&self, other: &IdealHandle<K>, limits: Limits<'_>) -> Result<bool> {
        if !crate::polyalg::same_ring(&self.ring, &other.ring) {
            return Err(Error::RingMismatch);
        }
        Ok(self.groebner_basis(limits)? == other.groebner_basis(limits)?)
    }

    /// Minimal generators of the initial ideal, sorted descending.
    pub fn initial_ideal(&self, limits: Limits<'_>) -> Result<Vec<Monomial>> {
        Ok(self
            .groebner_basis(limits)?
            .iter()
            .filter_map(|g| g.leading_monomial().cloned())
            .collect())
    }

    /// `I ∩ K[other variables]`, as the Gröbner basis elements free of
    /// `block`. The ring order must eliminate `block`, which has to be the
    /// set of leading variables of the ring.
    pub fn eliminate(&self, block: &[Variable], limits: Limits<'_>) -> Result<IdealHandle<K>> {
        let mut ranks = Vec::with_capacity(block.len());
        for &v in block {
            ranks.push(self.ring.rank_of(v)?);
        }
        ranks.sort_unstable();
        ranks.dedup();
        let n = ranks.len() as u32;
        if ranks.iter().enumerate().any(|(k, &r)| r != k as u32) || !self.ring.order().eliminates(n)
        {
            return Err(Error::NotEliminationOrder);
        }
        let kept = self
            .groebner_basis(limits)?
            .iter()
            .filter(|g| g.terms().iter().all(|(_, m)| m.support().all(|r| r >= n)))
            .cloned()
            .collect();
        IdealHandle::new(&self.ring, kept)
    }

    /// A minimal homogeneous generating set, built degree by degree: a
    /// generator is kept iff it is not in the ideal of the lower-degree and
    /// already kept generators. Generators are visited by degree, then in
    /// their given order.
    pub fn minimal_generators(&self, limits: Limits<'_>) -> Result<Vec<Polynomial<K>>> {
        if !self.generators.iter().all(Polynomial::is_homogeneous) {
            return Err(Error::NotHomogeneous);
        }
        let mut gens: Vec<&Polynomial<K>> =
            self.generators.iter().filter(|g| !g.is_zero()).collect();
        gens.sort_by_key(|g| g.degree());
        let mut engine = Engine::new(&self.ring, limits);
        let mut kept = Vec::new();
        for g in gens {
            let d = g.degree().expect("nonzero");
            // for homogeneous input, pairs of lcm degree <= d give the basis up to degree d
            engine.run(Some(d))?;
            if engine.insert(g)? {
                kept.push(g.clone());
            }
        }
        Ok(kept)
    }
}

/// Minimal generators of a monomial ideal, sorted descending by `order`.
pub fn minimize_monomials(mut monos: Vec<Monomial>, order: MonomialOrder) -> Vec<Monomial> {
    monos.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| a.cmp(b)));
    monos.dedup();
    let mut out: Vec<Monomial> = Vec::new();
    for m in monos {
        if !out.iter().any(|n| n.divides(&m)) {
            out.push(m);
        }
    }
    out.sort_by(|a, b| order.compare(b, a));
    out
}

/// Sorting helper: descending by leading monomial.
pub fn sort_by_lead_desc<K: Field>(polys: &mut [Polynomial<K>]) {
    polys.sort_by(|a, b| match (a.leading_monomial(), b.leading_monomial()) {
        (Some(x), Some(y)) => a.ring().compare(y, x),
        (None, None) => Ordering::Equal,
        (None, _) => Ordering::Greater,
        (_, None) => Ordering::Less,
    });
}
