//! Exact linear algebra over a cyclotomic field.
//!
//! Matrices are first split into connected blocks (rows and columns linked by
//! shared nonzeros). Rank uses fraction-free Bareiss elimination on small
//! dense blocks and sparse elimination on large ones; solving and kernels use
//! a sparse reduced row echelon form.

use std::collections::HashMap;

use super::{Cyclotomic, ExactError, SparseMatrix, SparseVec};

/// Blocks with at most this many columns are densified for Bareiss.
const DENSE_BLOCK_COLS: usize = 48;

/// Reduced row echelon form: each row has leading coefficient 1 at its pivot
/// and zeros in every other pivot column.
#[derive(Clone, Debug)]
pub struct Rref {
    pub cols: usize,
    pub conductor: u32,
    /// Rows sorted by pivot column.
    pub rows: Vec<SparseVec>,
    pub pivots: Vec<usize>,
}

impl Rref {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn free_columns(&self) -> Vec<usize> {
        let mut is_pivot = vec![false; self.cols];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        (0..self.cols).filter(|&c| !is_pivot[c]).collect()
    }

    /// Kernel basis, one vector per free column.
    pub fn kernel(&self) -> Vec<SparseVec> {
        let minus = Cyclotomic::from_int(self.conductor, -1);
        let mut per_free: HashMap<usize, Vec<(usize, Cyclotomic)>> = HashMap::new();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            for (j, v) in row.iter() {
                if *j != p {
                    per_free.entry(*j).or_default().push((p, v * &minus));
                }
            }
        }
        self.free_columns()
            .into_iter()
            .map(|f| {
                let mut e = per_free.remove(&f).unwrap_or_default();
                e.push((f, Cyclotomic::one(self.conductor)));
                SparseVec::from_entries(e)
            })
            .collect()
    }
}

/// Incremental sparse echelon builder.
struct Eliminator {
    conductor: u32,
    pivot_rows: HashMap<usize, SparseVec>,
}

impl Eliminator {
    fn new(conductor: u32) -> Self {
        Eliminator {
            conductor,
            pivot_rows: HashMap::new(),
        }
    }

    /// Reduces `v` against the current pivots; keeps it as a new pivot row when
    /// something survives. Returns whether the rank grew.
    fn insert(&mut self, mut v: SparseVec) -> bool {
        let minus = Cyclotomic::from_int(self.conductor, -1);
        let mut start = 0usize;
        loop {
            let lead = v.entries().iter().position(|(c, _)| *c >= start);
            let Some(pos) = lead else { return false };
            let (c, coef) = v.entries()[pos].clone();
            match self.pivot_rows.get(&c) {
                Some(p) => {
                    v = v.add_scaled(p, &(&coef * &minus));
                    start = c + 1;
                }
                None => {
                    // Entries before `pos` are non-pivot leftovers below `start`; they
                    // never occur since the lead is always the smallest index.
                    debug_assert_eq!(pos, 0);
                    let inv = coef.inverse().expect("nonzero leading coefficient");
                    self.pivot_rows.insert(c, v.scale(&inv));
                    return true;
                }
            }
        }
    }

    fn into_rref(self, cols: usize) -> Rref {
        let minus = Cyclotomic::from_int(self.conductor, -1);
        let mut pivots: Vec<usize> = self.pivot_rows.keys().copied().collect();
        pivots.sort_unstable();
        let mut rows = self.pivot_rows;
        let mut reduced: HashMap<usize, SparseVec> = HashMap::new();
        for &p in pivots.iter().rev() {
            let mut r = rows.remove(&p).expect("pivot row present");
            let targets: Vec<(usize, Cyclotomic)> = r
                .iter()
                .filter(|(j, _)| *j != p && reduced.contains_key(j))
                .cloned()
                .collect();
            for (j, coef) in targets {
                r = r.add_scaled(&reduced[&j], &(&coef * &minus));
            }
            reduced.insert(p, r);
        }
        let rows = pivots.iter().map(|p| reduced.remove(p).unwrap()).collect();
        Rref {
            cols,
            conductor: self.conductor,
            rows,
            pivots,
        }
    }
}

/// Sparse reduced row echelon form of `m`.
pub fn rref(m: &SparseMatrix) -> Rref {
    let mut el = Eliminator::new(m.conductor());
    for r in m.row_vectors() {
        if !r.is_empty() {
            el.insert(r.clone());
        }
    }
    el.into_rref(m.cols())
}

/// Fraction-free rank of a dense block (Bareiss elimination).
pub fn bareiss_rank(mut a: Vec<Vec<Cyclotomic>>, conductor: u32) -> usize {
    let nrows = a.len();
    if nrows == 0 {
        return 0;
    }
    let ncols = a[0].len();
    let mut prev_inv = Cyclotomic::one(conductor);
    let mut r = 0usize;
    for c in 0..ncols {
        if r == nrows {
            break;
        }
        let Some(p) = (r..nrows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let pivot = a[r][c].clone();
        for i in r + 1..nrows {
            if a[i][c].is_zero() {
                for j in c + 1..ncols {
                    if !a[i][j].is_zero() {
                        a[i][j] = &(&pivot * &a[i][j]) * &prev_inv;
                    }
                }
                continue;
            }
            let lead = a[i][c].clone();
            for j in c + 1..ncols {
                let t = &(&pivot * &a[i][j]) - &(&lead * &a[r][j]);
                a[i][j] = &t * &prev_inv;
            }
            a[i][c] = Cyclotomic::zero(conductor);
        }
        prev_inv = pivot.inverse().expect("nonzero pivot");
        r += 1;
    }
    r
}

/// Connected blocks of a matrix: groups of column indices linked by rows.
fn column_blocks(m: &SparseMatrix) -> Vec<Vec<usize>> {
    let n = m.cols();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    let mut used = vec![false; n];
    for r in m.row_vectors() {
        let mut it = r.iter();
        if let Some((first, _)) = it.next() {
            used[*first] = true;
            let a = find(&mut parent, *first);
            for (j, _) in it {
                used[*j] = true;
                let b = find(&mut parent, *j);
                if a != b {
                    parent[b] = find(&mut parent, a);
                }
            }
        }
    }
    let mut groups: HashMap<usize, Vec<usize>> = HashMap::new();
    for c in 0..n {
        if used[c] {
            let root = find(&mut parent, c);
            groups.entry(root).or_default().push(c);
        }
    }
    let mut out: Vec<Vec<usize>> = groups.into_values().collect();
    out.sort_unstable_by_key(|g| g[0]);
    out
}

pub fn rank(m: &SparseMatrix) -> usize {
    let blocks = column_blocks(m);
    if blocks.len() <= 1 && m.cols() > DENSE_BLOCK_COLS {
        return rref(m).rank();
    }
    let mut block_of = vec![usize::MAX; m.cols()];
    let mut local = vec![0usize; m.cols()];
    for (b, cols) in blocks.iter().enumerate() {
        for (k, &c) in cols.iter().enumerate() {
            block_of[c] = b;
            local[c] = k;
        }
    }
    let mut block_rows: Vec<Vec<&SparseVec>> = vec![Vec::new(); blocks.len()];
    for r in m.row_vectors() {
        if let Some((c, _)) = r.iter().next() {
            block_rows[block_of[*c]].push(r);
        }
    }
    let cond = m.conductor();
    blocks
        .iter()
        .zip(block_rows)
        .map(|(cols, rows)| {
            if cols.len() <= DENSE_BLOCK_COLS {
                let dense = rows
                    .iter()
                    .map(|r| {
                        let mut d = vec![Cyclotomic::zero(cond); cols.len()];
                        for (j, v) in r.iter() {
                            d[local[*j]] = v.clone();
                        }
                        d
                    })
                    .collect();
                bareiss_rank(dense, cond)
            } else {
                let mut el = Eliminator::new(cond);
                rows.into_iter().filter(|r| el.insert((*r).clone())).count()
            }
        })
        .sum()
}

pub fn nullspace(m: &SparseMatrix) -> Vec<SparseVec> {
    rref(m).kernel()
}

pub fn nullspace_dim(m: &SparseMatrix) -> usize {
    m.cols() - rank(m)
}

/// Solves `m x = b`; `None` when the system is inconsistent.
pub fn solve_linear(m: &SparseMatrix, b: &[Cyclotomic]) -> Result<Option<Vec<Cyclotomic>>, ExactError> {
    if b.len() != m.rows() {
        return Err(ExactError::DimensionMismatch {
            expected: m.rows(),
            found: b.len(),
        });
    }
    let sb = SparseVec::from_dense(b);
    Ok(solve_sparse(m, &sb).map(|x| x.to_dense(m.cols(), m.conductor())))
}

/// Sparse variant of [`solve_linear`]; free variables are set to zero.
pub fn solve_sparse(m: &SparseMatrix, b: &SparseVec) -> Option<SparseVec> {
    let n = m.cols();
    let cond = m.conductor();
    let mut el = Eliminator::new(cond);
    for (i, r) in m.row_vectors().iter().enumerate() {
        let mut e: Vec<(usize, Cyclotomic)> = r.entries().to_vec();
        if let Some(v) = b.get(i) {
            e.push((n, v.clone()));
        }
        if !e.is_empty() {
            el.insert(SparseVec::from_sorted(e));
        }
    }
    let rr = el.into_rref(n + 1);
    if rr.pivots.last() == Some(&n) {
        return None;
    }
    let sol = rr
        .rows
        .iter()
        .zip(&rr.pivots)
        .filter_map(|(row, &p)| row.get(n).map(|v| (p, v.clone())))
        .collect();
    Some(SparseVec::from_sorted(sol))
}

/// Inverse of a square matrix, `None` when singular.
pub fn inverse(m: &SparseMatrix) -> Result<Option<SparseMatrix>, ExactError> {
    let n = m.rows();
    if m.cols() != n {
        return Err(ExactError::DimensionMismatch {
            expected: n,
            found: m.cols(),
        });
    }
    let cond = m.conductor();
    let mut el = Eliminator::new(cond);
    for (i, r) in m.row_vectors().iter().enumerate() {
        let mut e: Vec<(usize, Cyclotomic)> = r.entries().to_vec();
        e.push((n + i, Cyclotomic::one(cond)));
        el.insert(SparseVec::from_sorted(e));
    }
    let rr = el.into_rref(2 * n);
    if rr.pivots.len() != n || rr.pivots.last().is_some_and(|&p| p >= n) {
        return Ok(None);
    }
    let rows = rr
        .rows
        .into_iter()
        .map(|r| {
            SparseVec::from_sorted(
                r.iter()
                    .filter(|(j, _)| *j >= n)
                    .map(|(j, v)| (j - n, v.clone()))
                    .collect(),
            )
        })
        .collect();
    Ok(Some(SparseMatrix::from_rows(n, cond, rows)))
}

/// Rank factorization `m = c * r` with `c` made of the pivot columns of `m`
/// and `r` the nonzero rows of its reduced echelon form.
///
/// For an idempotent `m`, `r * c` is the identity, so `c` and `r` are a
/// section and retraction of `m`.
pub fn rank_factorization(m: &SparseMatrix) -> (SparseMatrix, SparseMatrix) {
    let rr = rref(m);
    let c = m.select_columns(&rr.pivots);
    let r = SparseMatrix::from_rows(m.cols(), m.conductor(), rr.rows);
    (c, r)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(v: i64) -> Cyclotomic {
        Cyclotomic::from_int(1, v)
    }

    fn mat(rows: usize, cols: usize, e: &[(usize, usize, i64)]) -> SparseMatrix {
        SparseMatrix::from_triples(rows, cols, 1, e.iter().map(|&(i, j, v)| (i, j, q(v)))).unwrap()
    }

    #[test]
    fn identity_solve() {
        let m = SparseMatrix::identity(3, 1);
        let x = solve_linear(&m, &[q(1), q(0), q(0)]).unwrap().unwrap();
        assert_eq!(x, vec![q(1), q(0), q(0)]);
    }

    #[test]
    fn all_ones_has_rank_one() {
        let m = mat(2, 2, &[(0, 0, 1), (0, 1, 1), (1, 0, 1), (1, 1, 1)]);
        assert_eq!(rank(&m), 1);
        assert_eq!(rref(&m).rank(), 1);
    }

    #[test]
    fn zero_matrix_kernel() {
        let m = SparseMatrix::zero(2, 3, 1);
        assert_eq!(nullspace_dim(&m), 3);
        assert_eq!(nullspace(&m).len(), 3);
    }

    #[test]
    fn inconsistent_system() {
        let m = mat(2, 1, &[(0, 0, 1), (1, 0, 1)]);
        assert_eq!(solve_linear(&m, &[q(1), q(2)]).unwrap(), None);
        assert!(solve_linear(&m, &[q(1)]).is_err());
    }

    #[test]
    fn inverse_of_two_by_two() {
        let m = mat(2, 2, &[(0, 0, 2), (0, 1, 1), (1, 0, 1), (1, 1, 1)]);
        let inv = inverse(&m).unwrap().unwrap();
        assert_eq!(m.mul(&inv).unwrap(), SparseMatrix::identity(2, 1));
        let sing = mat(2, 2, &[(0, 0, 1), (1, 0, 1)]);
        assert!(inverse(&sing).unwrap().is_none());
    }

    #[test]
    fn rank_factorization_of_projector() {
        // projector onto span{(1,1)} along (1,-1), times 2 to stay integral
        let half = Cyclotomic::from_rational(1, crate::exactmath::Rational::from_pair(1, 2).unwrap());
        let m = SparseMatrix::from_triples(
            2,
            2,
            1,
            vec![(0, 0, half.clone()), (0, 1, half.clone()), (1, 0, half.clone()), (1, 1, half)],
        )
        .unwrap();
        let (c, r) = rank_factorization(&m);
        assert_eq!(r.mul(&c).unwrap(), SparseMatrix::identity(1, 1));
        assert_eq!(c.mul(&r).unwrap(), m);
    }

    #[test]
    fn cyclotomic_kernel() {
        // [1, z3] has kernel spanned by (-z3, 1)
        let z = Cyclotomic::root(3, 1);
        let m = SparseMatrix::from_triples(1, 2, 3, vec![(0, 0, Cyclotomic::one(3)), (0, 1, z.clone())]).unwrap();
        let k = nullspace(&m);
        assert_eq!(k.len(), 1);
        assert!(m.mul_vec(&k[0]).is_empty());
    }
}
