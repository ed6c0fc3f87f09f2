//! Hilbert series of `S/I` for homogeneous `I`, through the initial ideal.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::groebner::IdealHandle;
use crate::polyalg::{Field, Monomial};
use crate::{Error, Limits, Result};

/// `numerator(T) / (1 - T)^denominator_exponent`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct HilbertSeries {
    /// Coefficients by ascending power of `T`.
    pub numerator: Vec<i128>,
    pub denominator_exponent: u32,
}

impl HilbertSeries {
    /// Cancels `(1 - T)` factors until the numerator does not vanish at 1.
    pub fn reduce(mut self) -> Self {
        while self.denominator_exponent > 0
            && !self.numerator.is_empty()
            && self.numerator.iter().sum::<i128>() == 0
        {
            // synthetic division by (1 - T): q_k = sum_{i<=k} n_i
            let mut q = Vec::with_capacity(self.numerator.len() - 1);
            let mut acc = 0;
            for &c in &self.numerator[..self.numerator.len() - 1] {
                acc += c;
                q.push(acc);
            }
            self.numerator = trim(q);
            self.denominator_exponent -= 1;
        }
        self
    }

    /// `N(1)`: the multiplicity when the series is reduced.
    pub fn numerator_at_one(&self) -> i128 {
        self.numerator.iter().sum()
    }

    /// Coefficients of the power series up to `T^max_degree`.
    pub fn expand(&self, max_degree: usize) -> Vec<i128> {
        let mut out: Vec<i128> = (0..=max_degree)
            .map(|k| self.numerator.get(k).copied().unwrap_or(0))
            .collect();
        for _ in 0..self.denominator_exponent {
            for k in 1..out.len() {
                out[k] += out[k - 1];
            }
        }
        out
    }

    /// `1+12T+50T^2`.
    pub fn numerator_string(&self) -> String {
        render_poly(&self.numerator)
    }
}

impl fmt::Display for HilbertSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({})/(1-T)^{}",
            self.numerator_string(),
            self.denominator_exponent
        )
    }
}

fn render_poly(coeffs: &[i128]) -> String {
    use core::fmt::Write;
    let mut s = String::new();
    for (k, &c) in coeffs.iter().enumerate() {
        if c == 0 {
            continue;
        }
        if !s.is_empty() || c < 0 {
            s.push(if c < 0 { '-' } else { '+' });
        }
        let a = c.unsigned_abs();
        match k {
            0 => write!(s, "{}", a).unwrap(),
            _ => {
                if a != 1 {
                    write!(s, "{}", a).unwrap();
                }
                s.push('T');
                if k > 1 {
                    write!(s, "^{}", k).unwrap();
                }
            }
        }
    }
    if s.is_empty() {
        s.push('0');
    }
    s
}

fn trim(mut v: Vec<i128>) -> Vec<i128> {
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

fn add(a: &[i128], b: &[i128]) -> Vec<i128> {
    let mut out = vec![0; a.len().max(b.len())];
    for (k, c) in a.iter().enumerate() {
        out[k] += c;
    }
    for (k, c) in b.iter().enumerate() {
        out[k] += c;
    }
    trim(out)
}

fn mul(a: &[i128], b: &[i128]) -> Vec<i128> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(out)
}

fn minimize(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| a.cmp(b)));
    gens.dedup();
    let mut out: Vec<Monomial> = Vec::with_capacity(gens.len());
    for m in gens {
        if !out.iter().any(|n| n.divides(&m)) {
            out.push(m);
        }
    }
    out.sort();
    out
}

struct Numerator {
    memo: BTreeMap<Vec<Monomial>, Vec<i128>>,
}

impl Numerator {
    /// Numerator of the Hilbert series of `S/M` over `(1-T)^n`; `gens`
    /// minimal and canonically sorted.
    fn eval(&mut self, gens: Vec<Monomial>) -> Vec<i128> {
        if gens.is_empty() {
            return vec![1];
        }
        if gens.iter().any(Monomial::is_one) {
            return Vec::new();
        }
        // pairwise coprime generators: a complete intersection
        let coprime = gens
            .iter()
            .enumerate()
            .all(|(n, g)| gens[n + 1..].iter().all(|h| g.is_coprime(h)));
        if coprime {
            return gens.iter().fold(vec![1], |acc, g| {
                let mut f = vec![0; g.degree() as usize + 1];
                f[0] = 1;
                f[g.degree() as usize] = -1;
                mul(&acc, &f)
            });
        }
        if let Some(v) = self.memo.get(&gens) {
            return v.clone();
        }
        let pivot = pivot(&gens);
        let x = Monomial::var(pivot, 1);
        let mut plus: Vec<Monomial> = gens
            .iter()
            .filter(|g| g.exponent(pivot) == 0)
            .cloned()
            .collect();
        plus.push(x.clone());
        let colon: Vec<Monomial> = gens
            .iter()
            .map(|g| g.div(&x).unwrap_or_else(|| g.clone()))
            .collect();
        let a = self.eval(minimize(plus));
        let b = self.eval(minimize(colon));
        let mut tb = vec![0];
        tb.extend(b);
        let out = add(&a, &trim(tb));
        self.memo.insert(gens, out.clone());
        out
    }
}

/// Most frequent variable, ties broken by smaller rank.
fn pivot(gens: &[Monomial]) -> u32 {
    let mut count: BTreeMap<u32, usize> = BTreeMap::new();
    for g in gens {
        for r in g.support() {
            *count.entry(r).or_default() += 1;
        }
    }
    let (&r, _) = count
        .iter()
        .max_by(|a, b| a.1.cmp(b.1).then_with(|| b.0.cmp(a.0)))
        .expect("nonconstant generators");
    r
}

/// Numerator `N(T)` with `HS(S/M) = N(T)/(1-T)^n`, `n` the number of
/// variables, for the monomial ideal `M` generated by `gens`.
pub fn hilbert_numerator(gens: &[Monomial]) -> Vec<i128> {
    Numerator {
        memo: BTreeMap::new(),
    }
    .eval(minimize(gens.to_vec()))
}

/// The series of `S/M`, not reduced.
pub fn monomial_hilbert_series(gens: &[Monomial], nvars: u32) -> HilbertSeries {
    HilbertSeries {
        numerator: hilbert_numerator(gens),
        denominator_exponent: nvars,
    }
}

/// Reduced Hilbert series of `S/I` for a homogeneous ideal, computed from
/// the initial ideal under the ring's order.
pub fn reduced_hilbert_series<K: Field>(
    ideal: &IdealHandle<K>,
    limits: Limits<'_>,
) -> Result<HilbertSeries> {
    if !ideal.generators().iter().all(|g| g.is_homogeneous()) {
        return Err(Error::NotHomogeneous);
    }
    let init = ideal.initial_ideal(limits)?;
    Ok(monomial_hilbert_series(&init, ideal.ring().nvars() as u32).reduce())
}
