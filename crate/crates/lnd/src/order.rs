//! Monomial orders: lexicographic, degree-reverse-lexicographic, and block
//! (elimination) orders.

use std::cmp::Ordering;

use crate::poly::Monomial;

/// A total, multiplicative order on monomials.
///
/// `Block` compares the exponents restricted to `first` before the exponents
/// restricted to `second` (degrevlex within each block), so any monomial that
/// touches a first-block generator exceeds every monomial that does not: the
/// order eliminates its first block.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MonomialOrder {
    Lex,
    DegRevLex,
    Block { first: Vec<usize>, second: Vec<usize> },
}

/// Degree-reverse-lexicographic comparison of exponent slices: higher total
/// degree wins; on ties the smaller exponent at the last differing slot wins.
fn degrevlex(a: &[u32], b: &[u32]) -> Ordering {
    let da: u64 = a.iter().map(|&e| e as u64).sum();
    let db: u64 = b.iter().map(|&e| e as u64).sum();
    match da.cmp(&db) {
        Ordering::Equal => {}
        other => return other,
    }
    for (&ea, &eb) in a.iter().zip(b.iter()).rev() {
        match ea.cmp(&eb) {
            Ordering::Equal => {}
            Ordering::Less => return Ordering::Greater,
            Ordering::Greater => return Ordering::Less,
        }
    }
    Ordering::Equal
}

fn projected_degrevlex(indices: &[usize], a: &Monomial, b: &Monomial) -> Ordering {
    let da: u64 = indices.iter().map(|&i| a.exponent(i) as u64).sum();
    let db: u64 = indices.iter().map(|&i| b.exponent(i) as u64).sum();
    match da.cmp(&db) {
        Ordering::Equal => {}
        other => return other,
    }
    for &i in indices.iter().rev() {
        match a.exponent(i).cmp(&b.exponent(i)) {
            Ordering::Equal => {}
            Ordering::Less => return Ordering::Greater,
            Ordering::Greater => return Ordering::Less,
        }
    }
    Ordering::Equal
}

impl MonomialOrder {
    /// Block order whose first block is the given generator indices; the
    /// remaining indices of a ring with `total` generators form the second
    /// block. Used for elimination ideals and subalgebra membership.
    pub fn eliminating(first: impl IntoIterator<Item = usize>, total: usize) -> MonomialOrder {
        let mut first: Vec<usize> = first.into_iter().collect();
        first.sort_unstable();
        first.dedup();
        let second: Vec<usize> = (0..total).filter(|i| !first.contains(i)).collect();
        MonomialOrder::Block { first, second }
    }

    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match self {
            MonomialOrder::Lex => a.exponents().cmp(b.exponents()),
            MonomialOrder::DegRevLex => degrevlex(a.exponents(), b.exponents()),
            MonomialOrder::Block { first, second } => projected_degrevlex(first, a, b)
                .then_with(|| projected_degrevlex(second, a, b)),
        }
    }

    pub fn max<'a>(&self, a: &'a Monomial, b: &'a Monomial) -> &'a Monomial {
        if self.compare(a, b) == Ordering::Less {
            b
        } else {
            a
        }
    }
}
