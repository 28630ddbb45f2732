//! Finitely generated abelian groups `Z^k / L` with canonical
//! representatives from the Hermite normal form of `L`.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

/// `Z^k` modulo the row lattice of `hnf`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AbelianGroup {
    pub names: Vec<String>,
    /// Rows in echelon form: positive pivots, entries above each pivot in `[0, pivot)`.
    hnf: Vec<Vec<i64>>,
}

fn pivot_of(row: &[i64]) -> Option<usize> {
    row.iter().position(|&x| x != 0)
}

/// Hermite normal form of the row lattice spanned by `rows`.
pub fn hermite(rows: &[Vec<i64>], k: usize) -> Vec<Vec<i64>> {
    let mut a: Vec<Vec<i64>> = rows.iter().filter(|r| r.iter().any(|&x| x != 0)).cloned().collect();
    let mut out: Vec<Vec<i64>> = Vec::new();
    for c in 0..k {
        loop {
            let nz: Vec<usize> = (0..a.len()).filter(|&i| a[i][c] != 0).collect();
            if nz.len() <= 1 {
                break;
            }
            let p = *nz.iter().min_by_key(|&&i| a[i][c].abs()).expect("nonempty");
            let prow = a[p].clone();
            for &i in &nz {
                if i != p {
                    let f = a[i][c].div_euclid(prow[c]);
                    for (x, y) in a[i].iter_mut().zip(&prow) {
                        *x -= f * y;
                    }
                }
            }
        }
        if let Some(i) = (0..a.len()).find(|&i| a[i][c] != 0) {
            let mut row = a.swap_remove(i);
            if row[c] < 0 {
                row.iter_mut().for_each(|x| *x = -*x);
            }
            out.push(row);
        }
        a.retain(|r| r.iter().any(|&x| x != 0));
    }
    // Reduce entries above each pivot.
    for j in 0..out.len() {
        let pc = pivot_of(&out[j]).expect("nonzero row");
        let d = out[j][pc];
        for i in 0..j {
            let f = out[i][pc].div_euclid(d);
            if f != 0 {
                let rj = out[j].clone();
                for (x, y) in out[i].iter_mut().zip(&rj) {
                    *x -= f * y;
                }
            }
        }
    }
    out
}

impl AbelianGroup {
    pub fn new(names: Vec<String>, relations: &[Vec<i64>]) -> Self {
        let k = names.len();
        Self { hnf: hermite(relations, k), names }
    }

    pub fn rank(&self) -> usize {
        self.names.len()
    }

    pub fn hnf(&self) -> &[Vec<i64>] {
        &self.hnf
    }

    pub fn identity(&self) -> Vec<i64> {
        vec![0; self.rank()]
    }

    /// The canonical representative of the coset of `v`.
    pub fn reduce(&self, mut v: Vec<i64>) -> Vec<i64> {
        for row in &self.hnf {
            let p = pivot_of(row).expect("nonzero row");
            let f = v[p].div_euclid(row[p]);
            if f != 0 {
                for (x, y) in v.iter_mut().zip(row) {
                    *x -= f * y;
                }
            }
        }
        v
    }

    pub fn generator(&self, j: usize, power: i64) -> Vec<i64> {
        let mut v = self.identity();
        v[j] = power;
        self.reduce(v)
    }

    pub fn add(&self, a: &[i64], b: &[i64]) -> Vec<i64> {
        self.reduce(a.iter().zip(b).map(|(x, y)| x + y).collect())
    }

    pub fn neg(&self, a: &[i64]) -> Vec<i64> {
        self.reduce(a.iter().map(|x| -x).collect())
    }

    /// Whether `v` lies in the relation lattice.
    pub fn is_trivial(&self, v: &[i64]) -> bool {
        self.reduce(v.to_vec()).iter().all(|&x| x == 0)
    }

    /// Group order, `None` when infinite.
    pub fn order(&self) -> Option<u128> {
        if self.hnf.len() < self.rank() {
            return None;
        }
        Some(self.hnf.iter().map(|r| r[pivot_of(r).expect("nonzero")] as u128).product())
    }

    /// All canonical representatives of a finite group.
    pub fn elements(&self) -> Option<Vec<Vec<i64>>> {
        self.order()?;
        let mut out = vec![self.identity()];
        for row in &self.hnf {
            let p = pivot_of(row).expect("nonzero");
            let mut next = Vec::new();
            for v in &out {
                for e in 0..row[p] {
                    let mut w = v.clone();
                    w[p] = e;
                    next.push(w);
                }
            }
            out = next;
        }
        out.sort();
        Some(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn names(k: usize) -> Vec<String> {
        (0..k).map(|i| i.to_string()).collect()
    }

    #[test]
    fn cyclic_and_diagonal() {
        let g = AbelianGroup::new(names(2), &[vec![3, 0], vec![0, 2]]);
        assert_eq!(g.order(), Some(6));
        assert_eq!(g.reduce(vec![-1, 5]), vec![2, 1]);
        assert_eq!(g.elements().unwrap().len(), 6);
    }

    #[test]
    fn dependent_relations() {
        // <a,b | 2a = 2b, 4a = 0>: order 8.
        let g = AbelianGroup::new(names(2), &[vec![2, -2], vec![4, 0]]);
        assert_eq!(g.order(), Some(8));
        let els = g.elements().unwrap();
        assert_eq!(els.len(), 8);
        for e in &els {
            assert_eq!(&g.reduce(e.clone()), e);
        }
        assert!(g.is_trivial(&[2, -2]));
        assert!(!g.is_trivial(&[1, -1]));
    }

    #[test]
    fn infinite_when_rank_deficient() {
        let g = AbelianGroup::new(names(3), &[vec![1, 1, -1]]);
        assert_eq!(g.order(), None);
        assert_eq!(g.reduce(vec![1, 0, 0]), g.reduce(vec![0, -1, 1]));
    }
}
