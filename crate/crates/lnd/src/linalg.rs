//! Sparse exact Gaussian elimination over the rationals, used for the
//! degree-bounded kernel oracle. Columns are inserted incrementally; a
//! dependent column yields the exact combination of earlier columns that
//! reproduces it.

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::poly::Rational;

pub type SparseVec<K> = BTreeMap<K, Rational>;

fn axpy<K: Ord + Clone>(v: &mut SparseVec<K>, factor: &Rational, w: &SparseVec<K>) {
    for (k, c) in w {
        let entry = v.entry(k.clone()).or_insert_with(Rational::zero);
        *entry -= factor * c;
        if entry.is_zero() {
            v.remove(k);
        }
    }
}

fn scale<K: Ord + Clone>(v: &mut SparseVec<K>, factor: &Rational) {
    for c in v.values_mut() {
        *c = &*c * factor;
    }
}

/// Incremental column echelonization. Pivots are chosen at the smallest
/// remaining row key, so the result is deterministic for a fixed insertion
/// order.
pub struct Echelon<K: Ord + Clone> {
    /// pivot row -> (column vector with a 1 at the pivot row, expression of
    /// that vector as a combination of original columns).
    pivots: BTreeMap<K, (SparseVec<K>, SparseVec<usize>)>,
}

impl<K: Ord + Clone> Default for Echelon<K> {
    fn default() -> Self {
        Echelon {
            pivots: BTreeMap::new(),
        }
    }
}

impl<K: Ord + Clone> Echelon<K> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Reduces `v` against the pivots. Returns the residual and the pivot
    /// combination used, so that `v = residual + sum(combo_i * column_i)`.
    fn eliminate(&self, mut v: SparseVec<K>) -> (SparseVec<K>, SparseVec<usize>) {
        let mut combo: SparseVec<usize> = BTreeMap::new();
        loop {
            let hit = v
                .keys()
                .find(|k| self.pivots.contains_key(*k))
                .cloned();
            match hit {
                None => return (v, combo),
                Some(k) => {
                    let factor = v[&k].clone();
                    let (pivot_vec, pivot_combo) = &self.pivots[&k];
                    axpy(&mut v, &factor, pivot_vec);
                    for (i, c) in pivot_combo {
                        let entry = combo.entry(*i).or_insert_with(Rational::zero);
                        *entry += &factor * c;
                        if entry.is_zero() {
                            combo.remove(i);
                        }
                    }
                }
            }
        }
    }

    /// Inserts column `index` with value `v`. Returns the zero combination
    /// (with coefficient 1 at `index`) when the column is linearly dependent
    /// on the columns inserted before it; otherwise records a new pivot.
    pub fn insert(&mut self, index: usize, v: SparseVec<K>) -> Option<SparseVec<usize>> {
        let (mut residual, used) = self.eliminate(v);
        if residual.is_empty() {
            let mut combo = used;
            for c in combo.values_mut() {
                *c = -c.clone();
            }
            combo.insert(index, Rational::from_integer(1.into()));
            return Some(combo);
        }
        let pivot_key = residual.keys().next().cloned().unwrap();
        let lead = residual[&pivot_key].clone();
        let inv = lead.recip();
        scale(&mut residual, &inv);
        let mut combo: SparseVec<usize> = BTreeMap::new();
        combo.insert(index, inv.clone());
        for (i, c) in &used {
            let value = -(&inv * c);
            if !value.is_zero() {
                combo.insert(*i, value);
            }
        }
        self.pivots.insert(pivot_key, (residual, combo));
        None
    }

    /// Expresses `target` as a combination of the inserted columns, if it
    /// lies in their span.
    pub fn solve(&self, target: SparseVec<K>) -> Option<SparseVec<usize>> {
        let (residual, combo) = self.eliminate(target);
        if residual.is_empty() {
            Some(combo)
        } else {
            None
        }
    }
}
