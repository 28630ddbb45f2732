//! Exact linear algebra over [`ScalarQ`]: rank, nullspace and an
//! incremental echelon basis for span-closure searches.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::qarith::{Mode, ScalarQ};

/// A sparse vector indexed by an ordered key.
pub type SparseVec<K> = BTreeMap<K, ScalarQ>;

fn axpy<K: Ord + Clone>(v: &mut SparseVec<K>, c: &ScalarQ, w: &SparseVec<K>) {
    for (k, x) in w {
        let add = c * x;
        match v.get_mut(k) {
            Some(y) => {
                *y += &add;
                if y.is_zero() {
                    v.remove(k);
                }
            }
            None => {
                if !add.is_zero() {
                    v.insert(k.clone(), add);
                }
            }
        }
    }
}

/// Row-echelon basis of a growing subspace; each stored row has leading
/// coefficient 1 at its pivot key.
#[derive(Clone, Debug)]
pub struct Echelon<K: Ord + Clone> {
    rows: BTreeMap<K, SparseVec<K>>,
}

impl<K: Ord + Clone> Default for Echelon<K> {
    fn default() -> Self {
        Self { rows: BTreeMap::new() }
    }
}

impl<K: Ord + Clone> Echelon<K> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduces `v` against the stored rows; the residue is zero iff `v` lies in the span.
    pub fn reduce(&self, mut v: SparseVec<K>) -> SparseVec<K> {
        // Stored rows are fully reduced, so one pass over the pivots suffices.
        for (k, row) in &self.rows {
            if let Some(c) = v.get(k).cloned() {
                axpy(&mut v, &-c, row);
            }
        }
        v
    }

    /// Inserts `v`; returns `true` when the rank grew.
    pub fn insert(&mut self, v: SparseVec<K>) -> bool {
        let mut v = self.reduce(v);
        let Some(k) = v.keys().next().cloned() else { return false };
        let inv = v[&k].inv().expect("nonzero pivot");
        for x in v.values_mut() {
            *x = &*x * &inv;
        }
        // Keep stored rows reduced against the new pivot so `reduce` stays one-pass.
        let keys: Vec<K> = self.rows.keys().cloned().collect();
        for pk in keys {
            let row = self.rows.get_mut(&pk).expect("present");
            if let Some(c) = row.get(&k).cloned() {
                axpy(row, &-c, &v);
            }
        }
        self.rows.insert(k, v);
        true
    }

    pub fn contains(&self, v: SparseVec<K>) -> bool {
        self.reduce(v).is_empty()
    }

    /// The stored rows in pivot order.
    pub fn basis(&self) -> Vec<SparseVec<K>> {
        self.rows.values().cloned().collect()
    }
}

/// Rank of a family of sparse vectors.
pub fn exact_rank<K: Ord + Clone>(vectors: impl IntoIterator<Item = SparseVec<K>>) -> usize {
    let mut e = Echelon::new();
    for v in vectors {
        e.insert(v);
    }
    e.rank()
}

/// Basis of `{x : M x = 0}` for a dense `rows × ncols` matrix.
pub fn nullspace(mode: &Mode, matrix: &[Vec<ScalarQ>], ncols: usize) -> Vec<Vec<ScalarQ>> {
    let mut a: Vec<Vec<ScalarQ>> = matrix.to_vec();
    let mut pivots: Vec<usize> = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..a.len()).find(|&i| !a[i][c].is_zero()) else { continue };
        a.swap(r, p);
        let inv = a[r][c].inv().expect("nonzero pivot");
        for x in a[r].iter_mut() {
            *x = &*x * &inv;
        }
        for i in 0..a.len() {
            if i != r && !a[i][c].is_zero() {
                let f = a[i][c].clone();
                let (pivot_row, row_i) = if i < r {
                    let (lo, hi) = a.split_at_mut(r);
                    (&hi[0], &mut lo[i])
                } else {
                    let (lo, hi) = a.split_at_mut(i);
                    (&lo[r], &mut hi[0])
                };
                for (y, x) in row_i.iter_mut().zip(pivot_row) {
                    *y = &*y - &(&f * x);
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == a.len() {
            break;
        }
    }
    let mut basis = Vec::new();
    for free in (0..ncols).filter(|c| !pivots.contains(c)) {
        let mut v = alloc::vec![mode.zero(); ncols];
        v[free] = mode.one();
        for (row, &pc) in pivots.iter().enumerate() {
            v[pc] = -a[row][free].clone();
        }
        basis.push(v);
    }
    basis
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_and_nullspace() {
        let g = Mode::Generic;
        let q = g.q();
        let row = |xs: &[ScalarQ]| xs.to_vec();
        let m = alloc::vec![
            row(&[g.one(), q.clone(), g.zero()]),
            row(&[&q * &g.one(), &q * &q, g.zero()]),
        ];
        let ns = nullspace(&g, &m, 3);
        assert_eq!(ns.len(), 2);
        for v in &ns {
            let dot = m[0].iter().zip(v).fold(g.zero(), |acc, (a, b)| &acc + &(a * b));
            assert!(dot.is_zero());
        }
        let sparse = |r: &Vec<ScalarQ>| -> SparseVec<usize> {
            r.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(i, c)| (i, c.clone())).collect()
        };
        assert_eq!(exact_rank(m.iter().map(sparse)), 1);
    }

    #[test]
    fn echelon_membership() {
        let g = Mode::Generic;
        let mut e: Echelon<u8> = Echelon::new();
        let v = |a: i64, b: i64| -> SparseVec<u8> {
            [(0u8, g.int(a)), (1u8, g.int(b))].into_iter().filter(|(_, c)| !c.is_zero()).collect()
        };
        assert!(e.insert(v(1, 2)));
        assert!(!e.insert(v(2, 4)));
        assert!(e.insert(v(0, 1)));
        assert!(e.contains(v(5, 7)));
    }
}
