use alloc::vec::Vec;
use core::cmp::Ordering;
use core::hash::{Hash, Hasher};

/// A monomial stored sparsely as `(variable rank, exponent)` pairs sorted by
/// rank, with zero exponents never stored.
///
/// Rank 0 is the largest variable of the ring.
#[derive(Clone, Default)]
pub struct Monomial {
    exps: Vec<(u32, u32)>,
    degree: u32,
    // bit r % 64 set for every variable present; a cheap divisibility filter
    mask: u64,
}

impl PartialEq for Monomial {
    fn eq(&self, other: &Self) -> bool {
        self.exps == other.exps
    }
}

impl Eq for Monomial {}

impl Hash for Monomial {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.exps.hash(state)
    }
}

/// Structural order (rank/exponent pairs), used only for canonical
/// containers; monomial orders live in [`super::MonomialOrder`].
impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.exps.cmp(&other.exps)
    }
}

impl core::fmt::Debug for Monomial {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        if self.exps.is_empty() {
            return f.write_str("1");
        }
        for (n, (v, e)) in self.exps.iter().enumerate() {
            if n > 0 {
                f.write_str("*")?;
            }
            write!(f, "v{}", v)?;
            if *e > 1 {
                write!(f, "^{}", e)?;
            }
        }
        Ok(())
    }
}

impl Monomial {
    pub fn one() -> Self {
        Monomial::default()
    }

    pub fn var(rank: u32, exp: u32) -> Self {
        if exp == 0 {
            return Monomial::one();
        }
        Monomial {
            exps: alloc::vec![(rank, exp)],
            degree: exp,
            mask: bit(rank),
        }
    }

    /// Builds a monomial from `(rank, exponent)` pairs in any order;
    /// repeated ranks are multiplied together.
    pub fn from_exponents<I: IntoIterator<Item = (u32, u32)>>(pairs: I) -> Self {
        let mut exps: Vec<(u32, u32)> = pairs.into_iter().filter(|&(_, e)| e > 0).collect();
        exps.sort_unstable();
        let mut merged: Vec<(u32, u32)> = Vec::with_capacity(exps.len());
        for (v, e) in exps {
            match merged.last_mut() {
                Some(last) if last.0 == v => last.1 += e,
                _ => merged.push((v, e)),
            }
        }
        Self::from_sorted(merged)
    }

    fn from_sorted(exps: Vec<(u32, u32)>) -> Self {
        let degree = exps.iter().map(|&(_, e)| e).sum();
        let mask = exps.iter().fold(0, |m, &(v, _)| m | bit(v));
        Monomial { exps, degree, mask }
    }

    /// Product of the given variables (with repetition).
    pub fn product<I: IntoIterator<Item = u32>>(ranks: I) -> Self {
        Self::from_exponents(ranks.into_iter().map(|r| (r, 1)))
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn is_one(&self) -> bool {
        self.exps.is_empty()
    }

    /// `(rank, exponent)` pairs, ascending by rank.
    pub fn exponents(&self) -> &[(u32, u32)] {
        &self.exps
    }

    pub fn exponent(&self, rank: u32) -> u32 {
        match self.exps.binary_search_by_key(&rank, |&(v, _)| v) {
            Ok(pos) => self.exps[pos].1,
            Err(_) => 0,
        }
    }

    /// Ranks of the variables occurring, ascending.
    pub fn support(&self) -> impl Iterator<Item = u32> + '_ {
        self.exps.iter().map(|&(v, _)| v)
    }

    pub fn max_rank(&self) -> Option<u32> {
        self.exps.last().map(|&(v, _)| v)
    }

    pub fn is_squarefree(&self) -> bool {
        self.exps.iter().all(|&(_, e)| e == 1)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut out = Vec::with_capacity(self.exps.len() + other.exps.len());
        let (mut a, mut b) = (self.exps.iter().peekable(), other.exps.iter().peekable());
        loop {
            match (a.peek(), b.peek()) {
                (Some(&&(va, ea)), Some(&&(vb, eb))) => match va.cmp(&vb) {
                    Ordering::Less => {
                        out.push((va, ea));
                        a.next();
                    }
                    Ordering::Greater => {
                        out.push((vb, eb));
                        b.next();
                    }
                    Ordering::Equal => {
                        out.push((va, ea + eb));
                        a.next();
                        b.next();
                    }
                },
                (Some(&&x), None) => {
                    out.push(x);
                    a.next();
                }
                (None, Some(&&y)) => {
                    out.push(y);
                    b.next();
                }
                (None, None) => break,
            }
        }
        Monomial {
            exps: out,
            degree: self.degree + other.degree,
            mask: self.mask | other.mask,
        }
    }

    /// Whether `self` divides `other`.
    pub fn divides(&self, other: &Monomial) -> bool {
        if self.degree > other.degree || self.mask & !other.mask != 0 {
            return false;
        }
        let mut it = other.exps.iter();
        'outer: for &(v, e) in &self.exps {
            for &(w, f) in it.by_ref() {
                if w == v {
                    if f < e {
                        return false;
                    }
                    continue 'outer;
                }
                if w > v {
                    return false;
                }
            }
            return false;
        }
        true
    }

    /// `self / other` when `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        if !other.divides(self) {
            return None;
        }
        let mut out = Vec::with_capacity(self.exps.len());
        let mut it = other.exps.iter().peekable();
        for &(v, e) in &self.exps {
            match it.peek() {
                Some(&&(w, f)) if w == v => {
                    it.next();
                    if e > f {
                        out.push((v, e - f));
                    }
                }
                _ => out.push((v, e)),
            }
        }
        Some(Self::from_sorted(out))
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        self.merge_with(other, u32::max)
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        if self.mask & other.mask == 0 {
            return Monomial::one();
        }
        let mut out = Vec::new();
        let mut it = other.exps.iter().peekable();
        for &(v, e) in &self.exps {
            while let Some(&&(w, _)) = it.peek() {
                if w < v {
                    it.next();
                } else {
                    break;
                }
            }
            if let Some(&&(w, f)) = it.peek() {
                if w == v {
                    out.push((v, e.min(f)));
                }
            }
        }
        Self::from_sorted(out)
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.mask & other.mask == 0 || self.gcd(other).is_one()
    }

    fn merge_with(&self, other: &Monomial, f: impl Fn(u32, u32) -> u32) -> Monomial {
        let mut out = Vec::with_capacity(self.exps.len() + other.exps.len());
        let (mut i, mut j) = (0, 0);
        while i < self.exps.len() || j < other.exps.len() {
            let a = self.exps.get(i);
            let b = other.exps.get(j);
            match (a, b) {
                (Some(&(va, ea)), Some(&(vb, eb))) if va == vb => {
                    out.push((va, f(ea, eb)));
                    i += 1;
                    j += 1;
                }
                (Some(&(va, ea)), Some(&(vb, _))) if va < vb => {
                    out.push((va, f(ea, 0)));
                    i += 1;
                }
                (Some(_), Some(&(vb, eb))) => {
                    out.push((vb, f(0, eb)));
                    j += 1;
                }
                (Some(&(va, ea)), None) => {
                    out.push((va, f(ea, 0)));
                    i += 1;
                }
                (None, Some(&(vb, eb))) => {
                    out.push((vb, f(0, eb)));
                    j += 1;
                }
                (None, None) => unreachable!(),
            }
        }
        out.retain(|&(_, e)| e > 0);
        Self::from_sorted(out)
    }

    /// Renumbers the variables; `map` must be injective on the support.
    pub fn remap(&self, map: impl Fn(u32) -> u32) -> Monomial {
        Self::from_exponents(self.exps.iter().map(|&(v, e)| (map(v), e)))
    }
}

fn bit(rank: u32) -> u64 {
    1u64 << (rank % 64)
}
