use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use super::{Field, Monomial, MonomialOrder, RingRef, Variable};
use crate::{Error, Result};

pub type Term<K> = (K, Monomial);

/// A polynomial over a [`super::Ring`]: terms strictly decreasing under the
/// ring's order, no zero coefficients.
#[derive(Clone)]
pub struct Polynomial<K: Field> {
    ring: RingRef<K>,
    terms: Vec<Term<K>>,
}

impl<K: Field> PartialEq for Polynomial<K> {
    fn eq(&self, other: &Self) -> bool {
        same_ring(&self.ring, &other.ring) && self.terms == other.terms
    }
}

impl<K: Field> Eq for Polynomial<K> {}

pub(crate) fn same_ring<K: Field>(a: &RingRef<K>, b: &RingRef<K>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

impl<K: Field> Polynomial<K> {
    pub fn zero(ring: &RingRef<K>) -> Self {
        Polynomial {
            ring: ring.clone(),
            terms: Vec::new(),
        }
    }

    pub fn constant(ring: &RingRef<K>, c: K) -> Self {
        Self::term(ring, c, Monomial::one())
    }

    pub fn one(ring: &RingRef<K>) -> Self {
        Self::constant(ring, ring.one())
    }

    pub fn term(ring: &RingRef<K>, c: K, m: Monomial) -> Self {
        let terms = if c.is_zero() {
            Vec::new()
        } else {
            alloc::vec![(c, m)]
        };
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    pub fn var(ring: &RingRef<K>, v: Variable) -> Result<Self> {
        let r = ring.rank_of(v)?;
        Ok(Self::term(ring, ring.one(), Monomial::var(r, 1)))
    }

    /// Builds a polynomial from arbitrary terms: sorts, merges equal
    /// monomials and drops zeros.
    pub fn from_terms<I: IntoIterator<Item = Term<K>>>(ring: &RingRef<K>, terms: I) -> Self {
        let mut terms: Vec<Term<K>> = terms.into_iter().collect();
        let order = ring.order();
        terms.sort_by(|a, b| order.compare(&b.1, &a.1));
        let mut out: Vec<Term<K>> = Vec::with_capacity(terms.len());
        for (c, m) in terms {
            match out.last_mut() {
                Some(last) if last.1 == m => last.0 = last.0.add(&c),
                _ => out.push((c, m)),
            }
        }
        out.retain(|(c, _)| !c.is_zero());
        Polynomial {
            ring: ring.clone(),
            terms: out,
        }
    }

    /// `m1 - m2` with unit coefficients; the workhorse for binomial ideals.
    pub fn binomial(ring: &RingRef<K>, m1: Monomial, m2: Monomial) -> Self {
        let one = ring.one();
        Self::from_terms(ring, [(one.clone(), m1), (one.neg(), m2)])
    }

    pub(crate) fn from_sorted(ring: &RingRef<K>, terms: Vec<Term<K>>) -> Self {
        debug_assert!(terms
            .windows(2)
            .all(|w| ring.compare(&w[0].1, &w[1].1) == Ordering::Greater));
        debug_assert!(terms.iter().all(|(c, _)| !c.is_zero()));
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    pub fn ring(&self) -> &RingRef<K> {
        &self.ring
    }

    pub fn terms(&self) -> &[Term<K>] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn leading_term(&self) -> Option<&Term<K>> {
        self.terms.first()
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|t| &t.1)
    }

    pub fn leading_coefficient(&self) -> Option<&K> {
        self.terms.first().map(|t| &t.0)
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.iter().map(|t| t.1.degree()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        match self.terms.first() {
            None => true,
            Some((_, m)) => self.terms.iter().all(|t| t.1.degree() == m.degree()),
        }
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    fn check(&self, other: &Self) -> Result<()> {
        if same_ring(&self.ring, &other.ring) {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let terms = merge_add(self.ring.order(), &self.terms, &other.terms, None);
        Ok(Polynomial {
            ring: self.ring.clone(),
            terms,
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let minus = self.ring.one().neg();
        let terms = merge_add(
            self.ring.order(),
            &self.terms,
            &other.terms,
            Some((&minus, &Monomial::one())),
        );
        Ok(Polynomial {
            ring: self.ring.clone(),
            terms,
        })
    }

    pub fn neg(&self) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|(c, m)| (c.neg(), m.clone()))
            .collect();
        Polynomial {
            ring: self.ring.clone(),
            terms,
        }
    }

    pub fn scale(&self, c: &K) -> Self {
        if c.is_zero() {
            return Self::zero(&self.ring);
        }
        let terms = self
            .terms
            .iter()
            .map(|(d, m)| (d.mul(c), m.clone()))
            .collect();
        Polynomial {
            ring: self.ring.clone(),
            terms,
        }
    }

    /// `c * m * self`.
    pub fn mul_term(&self, c: &K, m: &Monomial) -> Self {
        if c.is_zero() {
            return Self::zero(&self.ring);
        }
        let terms = self
            .terms
            .iter()
            .map(|(d, n)| (d.mul(c), n.mul(m)))
            .collect();
        Polynomial {
            ring: self.ring.clone(),
            terms,
        }
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut acc: Vec<Term<K>> = Vec::new();
        for (c, m) in &other.terms {
            let shifted: Vec<Term<K>> = self
                .terms
                .iter()
                .map(|(d, n)| (d.mul(c), n.mul(m)))
                .collect();
            acc = merge_add(self.ring.order(), &acc, &shifted, None);
        }
        Ok(Polynomial {
            ring: self.ring.clone(),
            terms: acc,
        })
    }

    /// Divides by the leading coefficient.
    pub fn monic(&self) -> Self {
        match self.terms.first() {
            None => self.clone(),
            Some((c, _)) if c.is_one() => self.clone(),
            Some((c, _)) => self.scale(&c.inv()),
        }
    }

    /// Ring homomorphism: substitutes `images[rank]` for each variable of
    /// the source ring. All images must live in `target`.
    pub fn substitute(
        &self,
        target: &RingRef<K>,
        images: &[Polynomial<K>],
    ) -> Result<Polynomial<K>> {
        if images.len() != self.ring.nvars() || images.iter().any(|p| !same_ring(&p.ring, target)) {
            return Err(Error::RingMismatch);
        }
        let mut acc = Polynomial::zero(target);
        for (c, m) in &self.terms {
            let mut t = Polynomial::constant(target, c.clone());
            for &(v, e) in m.exponents() {
                for _ in 0..e {
                    t = t.mul(&images[v as usize])?;
                }
            }
            acc = acc.add(&t)?;
        }
        Ok(acc)
    }

    /// Same polynomial read in another ring holding all of its variables.
    pub fn map_to(&self, target: &RingRef<K>) -> Result<Polynomial<K>> {
        let mut terms = Vec::with_capacity(self.terms.len());
        for (c, m) in &self.terms {
            let mut exps = Vec::with_capacity(m.exponents().len());
            for &(r, e) in m.exponents() {
                exps.push((target.rank_of(self.ring.variable(r))?, e));
            }
            terms.push((c.clone(), Monomial::from_exponents(exps)));
        }
        Ok(Polynomial::from_terms(target, terms))
    }

    /// Variables occurring in the polynomial.
    pub fn variables(&self) -> Vec<Variable> {
        let mut ranks: Vec<u32> = self.terms.iter().flat_map(|t| t.1.support()).collect();
        ranks.sort_unstable();
        ranks.dedup();
        ranks.into_iter().map(|r| self.ring.variable(r)).collect()
    }

    /// Renders a monomial of this ring, M2 style (`x_(1,1)^2x_(2,1)`).
    pub fn render_monomial(ring: &RingRef<K>, m: &Monomial) -> String {
        let mut s = String::new();
        write_monomial(&mut s, ring, m).expect("writing to a String");
        s
    }
}

fn write_monomial<K: Field, W: fmt::Write>(
    w: &mut W,
    ring: &RingRef<K>,
    m: &Monomial,
) -> fmt::Result {
    if m.is_one() {
        return w.write_str("1");
    }
    for &(r, e) in m.exponents() {
        write!(w, "{}", ring.variable(r))?;
        if e > 1 {
            write!(w, "^{}", e)?;
        }
    }
    Ok(())
}

/// Merges `a + c*m*b` (or `a + b` when `scale` is `None`), both sorted
/// descending.
pub(crate) fn merge_add<K: Field>(
    order: MonomialOrder,
    a: &[Term<K>],
    b: &[Term<K>],
    scale: Option<(&K, &Monomial)>,
) -> Vec<Term<K>> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let mut i = 0;
    let mut j = 0;
    let shift = |t: &Term<K>| -> Term<K> {
        match scale {
            None => t.clone(),
            Some((c, m)) => (t.0.mul(c), t.1.mul(m)),
        }
    };
    let mut pending: Option<Term<K>> = b.first().map(shift);
    while i < a.len() || pending.is_some() {
        match (a.get(i), pending.as_ref()) {
            (Some(x), Some(y)) => match order.compare(&x.1, &y.1) {
                Ordering::Greater => {
                    out.push(x.clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push(pending.take().unwrap());
                    j += 1;
                    pending = b.get(j).map(shift);
                }
                Ordering::Equal => {
                    let c = x.0.add(&y.0);
                    if !c.is_zero() {
                        out.push((c, x.1.clone()));
                    }
                    i += 1;
                    j += 1;
                    pending = b.get(j).map(shift);
                }
            },
            (Some(x), None) => {
                out.push(x.clone());
                i += 1;
            }
            (None, Some(_)) => {
                out.push(pending.take().unwrap());
                j += 1;
                pending = b.get(j).map(shift);
            }
            (None, None) => break,
        }
    }
    out
}

impl<K: Field> fmt::Display for Polynomial<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (n, (c, m)) in self.terms.iter().enumerate() {
            let neg = format_is_negative(c);
            let abs = if neg { c.neg() } else { c.clone() };
            if n == 0 {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { "-" } else { "+" })?;
            }
            if m.is_one() {
                write!(f, "{}", abs)?;
            } else {
                if !abs.is_one() {
                    write!(f, "{}", abs)?;
                }
                write_monomial(f, &self.ring, m)?;
            }
        }
        Ok(())
    }
}

// both fields print negatives with a leading minus sign
fn format_is_negative<K: Field>(c: &K) -> bool {
    let mut s = String::new();
    let _ = fmt::write(&mut s, format_args!("{}", c));
    s.starts_with('-')
}

impl<K: Field> fmt::Debug for Polynomial<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
