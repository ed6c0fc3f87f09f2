use core::cmp::Ordering;

use super::Monomial;

/// The monomial orders offered on a ring.
///
/// All orders compare variables by rank, rank 0 being the largest variable;
/// the ring decides which variable gets which rank.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum OrderKind {
    /// Lexicographic.
    RankedLex,
    /// Graded reverse lexicographic.
    RankedGRevLex,
    /// Block order eliminating the variables of rank `< block`: grevlex on
    /// that block, ties broken by grevlex on the remaining variables.
    Elimination { block: u32 },
    /// Lexicographic over the ranking built for convex collections, under
    /// which the inner 2-minors are a reduced Gröbner basis.
    ConvexCollection,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct MonomialOrder {
    pub kind: OrderKind,
}

impl MonomialOrder {
    pub const fn new(kind: OrderKind) -> Self {
        MonomialOrder { kind }
    }

    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match self.kind {
            OrderKind::RankedLex | OrderKind::ConvexCollection => lex(a, b),
            OrderKind::RankedGRevLex => a
                .degree()
                .cmp(&b.degree())
                .then_with(|| revlex_tail(a.exponents(), b.exponents())),
            OrderKind::Elimination { block } => {
                let (a_hi, a_lo) = split(a, block);
                let (b_hi, b_lo) = split(b, block);
                grevlex_slices(a_hi, b_hi).then_with(|| grevlex_slices(a_lo, b_lo))
            }
        }
    }

    /// Whether every monomial containing a variable of rank `< block` is
    /// larger than every monomial free of them.
    pub fn eliminates(&self, block: u32) -> bool {
        match self.kind {
            OrderKind::RankedLex | OrderKind::ConvexCollection => true,
            OrderKind::Elimination { block: b } => block <= b,
            OrderKind::RankedGRevLex => block == 0,
        }
    }
}

fn lex(a: &Monomial, b: &Monomial) -> Ordering {
    let (a, b) = (a.exponents(), b.exponents());
    for (&(va, ea), &(vb, eb)) in a.iter().zip(b) {
        if va != vb {
            // the monomial holding the smaller rank (larger variable) wins
            return vb.cmp(&va);
        }
        if ea != eb {
            return ea.cmp(&eb);
        }
    }
    a.len().cmp(&b.len())
}

/// Reverse lexicographic comparison of equal-degree exponent slices: the
/// monomial with the larger exponent in the last differing variable is
/// smaller.
fn revlex_tail(a: &[(u32, u32)], b: &[(u32, u32)]) -> Ordering {
    let mut ai = a.iter().rev();
    let mut bi = b.iter().rev();
    loop {
        match (ai.next(), bi.next()) {
            (Some(&(va, ea)), Some(&(vb, eb))) => {
                if va != vb {
                    // the one holding the smaller variable (larger rank) is smaller
                    return vb.cmp(&va);
                }
                if ea != eb {
                    return eb.cmp(&ea);
                }
            }
            (None, None) => return Ordering::Equal,
            // with equal degree one side cannot run out first
            (Some(_), None) => return Ordering::Less,
            (None, Some(_)) => return Ordering::Greater,
        }
    }
}

fn grevlex_slices(a: &[(u32, u32)], b: &[(u32, u32)]) -> Ordering {
    let da: u32 = a.iter().map(|&(_, e)| e).sum();
    let db: u32 = b.iter().map(|&(_, e)| e).sum();
    da.cmp(&db).then_with(|| revlex_tail(a, b))
}

type Exponents = [(u32, u32)];

fn split(m: &Monomial, block: u32) -> (&Exponents, &Exponents) {
    let exps = m.exponents();
    let cut = exps.partition_point(|&(v, _)| v < block);
    exps.split_at(cut)
}
