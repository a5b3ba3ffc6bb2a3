//! Sparse exact containers: vectors, matrices and order-3 structure tensors.

use std::collections::HashMap;
use std::hash::Hash;

use super::{Cyclotomic, ExactError};

/// Sparse vector: strictly increasing indices, no stored zeros.
#[derive(Clone, Debug, PartialEq, Eq, Default, Hash)]
pub struct SparseVec {
    entries: Vec<(usize, Cyclotomic)>,
}

impl SparseVec {
    pub fn new() -> Self {
        SparseVec { entries: Vec::new() }
    }

    pub fn unit(i: usize, conductor: u32) -> Self {
        SparseVec {
            entries: vec![(i, Cyclotomic::one(conductor))],
        }
    }

    /// Builds from unsorted, possibly repeated entries, summing duplicates.
    pub fn from_entries<I: IntoIterator<Item = (usize, Cyclotomic)>>(it: I) -> Self {
        let mut acc = Accumulator::new();
        for (i, v) in it {
            acc.add(i, &v);
        }
        acc.into_vec()
    }

    /// Builds from sorted, zero-free entries without checking.
    pub(crate) fn from_sorted(entries: Vec<(usize, Cyclotomic)>) -> Self {
        debug_assert!(entries.windows(2).all(|w| w[0].0 < w[1].0));
        debug_assert!(entries.iter().all(|(_, v)| !v.is_zero()));
        SparseVec { entries }
    }

    pub fn from_dense(v: &[Cyclotomic]) -> Self {
        SparseVec {
            entries: v
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(i, c)| (i, c.clone()))
                .collect(),
        }
    }

    pub fn to_dense(&self, len: usize, conductor: u32) -> Vec<Cyclotomic> {
        let mut out = vec![Cyclotomic::zero(conductor); len];
        for (i, v) in &self.entries {
            out[*i] = v.clone();
        }
        out
    }

    pub fn entries(&self) -> &[(usize, Cyclotomic)] {
        &self.entries
    }

    pub fn iter(&self) -> impl Iterator<Item = &(usize, Cyclotomic)> {
        self.entries.iter()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, i: usize) -> Option<&Cyclotomic> {
        self.entries
            .binary_search_by_key(&i, |e| e.0)
            .ok()
            .map(|p| &self.entries[p].1)
    }

    pub fn scale(&self, c: &Cyclotomic) -> SparseVec {
        if c.is_zero() {
            return SparseVec::new();
        }
        SparseVec {
            entries: self.entries.iter().map(|(i, v)| (*i, v * c)).collect(),
        }
    }

    /// `self + c * other`, merging sorted index lists.
    pub fn add_scaled(&self, other: &SparseVec, c: &Cyclotomic) -> SparseVec {
        if c.is_zero() {
            return self.clone();
        }
        let mut out = Vec::with_capacity(self.entries.len() + other.entries.len());
        let (mut a, mut b) = (self.entries.iter().peekable(), other.entries.iter().peekable());
        loop {
            match (a.peek(), b.peek()) {
                (Some((i, x)), Some((j, y))) => {
                    if i < j {
                        out.push((*i, x.clone()));
                        a.next();
                    } else if j < i {
                        out.push((*j, y * c));
                        b.next();
                    } else {
                        let s = x + &(y * c);
                        if !s.is_zero() {
                            out.push((*i, s));
                        }
                        a.next();
                        b.next();
                    }
                }
                (Some((i, x)), None) => {
                    out.push((*i, x.clone()));
                    a.next();
                }
                (None, Some((j, y))) => {
                    out.push((*j, y * c));
                    b.next();
                }
                (None, None) => break,
            }
        }
        SparseVec { entries: out }
    }

    pub fn dot(&self, other: &SparseVec) -> Option<Cyclotomic> {
        let mut acc: Option<Cyclotomic> = None;
        let (mut p, mut q) = (0, 0);
        while p < self.entries.len() && q < other.entries.len() {
            let (i, x) = &self.entries[p];
            let (j, y) = &other.entries[q];
            if i < j {
                p += 1;
            } else if j < i {
                q += 1;
            } else {
                let t = x * y;
                acc = Some(match acc {
                    Some(a) => &a + &t,
                    None => t,
                });
                p += 1;
                q += 1;
            }
        }
        acc
    }

    pub fn max_index(&self) -> Option<usize> {
        self.entries.last().map(|e| e.0)
    }
}

/// Hash-map accumulator for sparse sums keyed by arbitrary indices.
#[derive(Clone, Debug)]
pub struct Accumulator<K: Eq + Hash> {
    map: HashMap<K, Cyclotomic>,
}

impl<K: Eq + Hash + Ord + Copy> Default for Accumulator<K> {
    fn default() -> Self {
        Self::new()
    }
}

impl<K: Eq + Hash + Ord + Copy> Accumulator<K> {
    pub fn new() -> Self {
        Accumulator { map: HashMap::new() }
    }

    pub fn add(&mut self, k: K, v: &Cyclotomic) {
        if v.is_zero() {
            return;
        }
        match self.map.get_mut(&k) {
            Some(e) => *e += v,
            None => {
                self.map.insert(k, v.clone());
            }
        }
    }

    pub fn add_owned(&mut self, k: K, v: Cyclotomic) {
        if v.is_zero() {
            return;
        }
        match self.map.get_mut(&k) {
            Some(e) => *e += &v,
            None => {
                self.map.insert(k, v);
            }
        }
    }

    pub fn is_empty(&self) -> bool {
        self.map.values().all(Cyclotomic::is_zero)
    }

    /// Sorted, zero-free entries.
    pub fn into_sorted(self) -> Vec<(K, Cyclotomic)> {
        let mut v: Vec<(K, Cyclotomic)> =
            self.map.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        v.sort_unstable_by_key(|a| a.0);
        v
    }
}

impl Accumulator<usize> {
    pub fn into_vec(self) -> SparseVec {
        SparseVec {
            entries: self.into_sorted(),
        }
    }
}

/// Sparse matrix stored by rows.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseMatrix {
    rows: usize,
    cols: usize,
    conductor: u32,
    data: Vec<SparseVec>,
}

impl SparseMatrix {
    pub fn zero(rows: usize, cols: usize, conductor: u32) -> Self {
        SparseMatrix {
            rows,
            cols,
            conductor,
            data: vec![SparseVec::new(); rows],
        }
    }

    pub fn identity(n: usize, conductor: u32) -> Self {
        SparseMatrix {
            rows: n,
            cols: n,
            conductor,
            data: (0..n).map(|i| SparseVec::unit(i, conductor)).collect(),
        }
    }

    /// Builds from `(row, col, value)` triples; duplicates are summed.
    pub fn from_triples<I>(rows: usize, cols: usize, conductor: u32, it: I) -> Result<Self, ExactError>
    where
        I: IntoIterator<Item = (usize, usize, Cyclotomic)>,
    {
        let mut per_row: Vec<Accumulator<usize>> = (0..rows).map(|_| Accumulator::new()).collect();
        for (i, j, v) in it {
            if i >= rows || j >= cols {
                return Err(ExactError::OutOfBounds { row: i, col: j, rows, cols });
            }
            if v.conductor() != conductor {
                return Err(ExactError::ConductorMismatch { left: conductor, right: v.conductor() });
            }
            per_row[i].add(j, &v);
        }
        Ok(SparseMatrix {
            rows,
            cols,
            conductor,
            data: per_row.into_iter().map(Accumulator::into_vec).collect(),
        })
    }

    pub fn from_rows(cols: usize, conductor: u32, data: Vec<SparseVec>) -> Self {
        debug_assert!(data.iter().all(|r| r.max_index().is_none_or(|m| m < cols)));
        SparseMatrix {
            rows: data.len(),
            cols,
            conductor,
            data,
        }
    }

    /// Builds from columns given as sparse vectors of length `rows`.
    pub fn from_columns(rows: usize, conductor: u32, columns: &[SparseVec]) -> Self {
        let mut per_row: Vec<Vec<(usize, Cyclotomic)>> = vec![Vec::new(); rows];
        for (j, col) in columns.iter().enumerate() {
            for (i, v) in col.iter() {
                per_row[*i].push((j, v.clone()));
            }
        }
        SparseMatrix {
            rows,
            cols: columns.len(),
            conductor,
            data: per_row.into_iter().map(SparseVec::from_sorted).collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    pub fn row(&self, i: usize) -> &SparseVec {
        &self.data[i]
    }

    pub fn row_vectors(&self) -> &[SparseVec] {
        &self.data
    }

    pub fn get(&self, i: usize, j: usize) -> Cyclotomic {
        self.data[i].get(j).cloned().unwrap_or_else(|| Cyclotomic::zero(self.conductor))
    }

    pub fn nnz(&self) -> usize {
        self.data.iter().map(SparseVec::len).sum()
    }

    pub fn triples(&self) -> impl Iterator<Item = (usize, usize, &Cyclotomic)> {
        self.data
            .iter()
            .enumerate()
            .flat_map(|(i, r)| r.iter().map(move |(j, v)| (i, *j, v)))
    }

    pub fn transpose(&self) -> SparseMatrix {
        let mut per_row: Vec<Vec<(usize, Cyclotomic)>> = vec![Vec::new(); self.cols];
        for (i, r) in self.data.iter().enumerate() {
            for (j, v) in r.iter() {
                per_row[*j].push((i, v.clone()));
            }
        }
        SparseMatrix {
            rows: self.cols,
            cols: self.rows,
            conductor: self.conductor,
            data: per_row.into_iter().map(SparseVec::from_sorted).collect(),
        }
    }

    /// Columns as sparse vectors.
    pub fn columns(&self) -> Vec<SparseVec> {
        self.transpose().data
    }

    pub fn mul_vec(&self, x: &SparseVec) -> SparseVec {
        let mut out = Vec::new();
        for (i, r) in self.data.iter().enumerate() {
            if let Some(v) = r.dot(x) {
                if !v.is_zero() {
                    out.push((i, v));
                }
            }
        }
        SparseVec::from_sorted(out)
    }

    pub fn mul(&self, other: &SparseMatrix) -> Result<SparseMatrix, ExactError> {
        if self.cols != other.rows {
            return Err(ExactError::DimensionMismatch {
                expected: self.cols,
                found: other.rows,
            });
        }
        let data = self
            .data
            .iter()
            .map(|r| {
                let mut acc = Accumulator::new();
                for (k, a) in r.iter() {
                    for (j, b) in other.data[*k].iter() {
                        acc.add_owned(*j, a * b);
                    }
                }
                acc.into_vec()
            })
            .collect();
        Ok(SparseMatrix {
            rows: self.rows,
            cols: other.cols,
            conductor: self.conductor,
            data,
        })
    }

    pub fn sub(&self, other: &SparseMatrix) -> SparseMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let minus = Cyclotomic::from_int(self.conductor, -1);
        SparseMatrix {
            rows: self.rows,
            cols: self.cols,
            conductor: self.conductor,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a.add_scaled(b, &minus))
                .collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(SparseVec::is_empty)
    }

    pub fn add(&self, other: &SparseMatrix) -> SparseMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let one = Cyclotomic::one(self.conductor);
        SparseMatrix {
            rows: self.rows,
            cols: self.cols,
            conductor: self.conductor,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a.add_scaled(b, &one)).collect(),
        }
    }

    pub fn scale(&self, c: &Cyclotomic) -> SparseMatrix {
        SparseMatrix {
            rows: self.rows,
            cols: self.cols,
            conductor: self.conductor,
            data: self.data.iter().map(|r| r.scale(c)).collect(),
        }
    }

    /// Kronecker product; row `(i, k)` sits at `i * other.rows + k`.
    pub fn kron(&self, other: &SparseMatrix) -> SparseMatrix {
        let mut data = Vec::with_capacity(self.rows * other.rows);
        for r in &self.data {
            for q in &other.data {
                let mut e = Vec::with_capacity(r.len() * q.len());
                for (j, a) in r.iter() {
                    for (l, b) in q.iter() {
                        e.push((j * other.cols + l, a * b));
                    }
                }
                data.push(SparseVec::from_sorted(e));
            }
        }
        SparseMatrix {
            rows: self.rows * other.rows,
            cols: self.cols * other.cols,
            conductor: self.conductor,
            data,
        }
    }

    /// Sub-matrix keeping the listed columns, in the given order.
    pub fn select_columns(&self, cols: &[usize]) -> SparseMatrix {
        let mut pos = vec![usize::MAX; self.cols];
        for (p, &c) in cols.iter().enumerate() {
            pos[c] = p;
        }
        let data = self
            .data
            .iter()
            .map(|r| {
                let mut e: Vec<(usize, Cyclotomic)> = r
                    .iter()
                    .filter(|(j, _)| pos[*j] != usize::MAX)
                    .map(|(j, v)| (pos[*j], v.clone()))
                    .collect();
                e.sort_unstable_by_key(|x| x.0);
                SparseVec::from_sorted(e)
            })
            .collect();
        SparseMatrix {
            rows: self.rows,
            cols: cols.len(),
            conductor: self.conductor,
            data,
        }
    }
}

/// One entry of a structure tensor: `T(i, j, k) = value`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TensorEntry {
    pub j: usize,
    pub k: usize,
    pub value: Cyclotomic,
}

/// Order-3 sparse tensor grouped by its first index, sorted by `(j, k)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseTensor3 {
    dims: (usize, usize, usize),
    conductor: u32,
    slices: Vec<Vec<TensorEntry>>,
}

impl SparseTensor3 {
    pub fn from_triples<I>(dims: (usize, usize, usize), conductor: u32, it: I) -> Result<Self, ExactError>
    where
        I: IntoIterator<Item = (usize, usize, usize, Cyclotomic)>,
    {
        let mut acc: Vec<Accumulator<(usize, usize)>> = (0..dims.0).map(|_| Accumulator::new()).collect();
        for (i, j, k, v) in it {
            if i >= dims.0 || j >= dims.1 || k >= dims.2 {
                return Err(ExactError::TensorOutOfBounds { index: (i, j, k), dims });
            }
            if v.conductor() != conductor {
                return Err(ExactError::ConductorMismatch { left: conductor, right: v.conductor() });
            }
            acc[i].add((j, k), &v);
        }
        let slices = acc
            .into_iter()
            .map(|a| {
                a.into_sorted()
                    .into_iter()
                    .map(|((j, k), value)| TensorEntry { j, k, value })
                    .collect()
            })
            .collect();
        Ok(SparseTensor3 { dims, conductor, slices })
    }

    pub fn dims(&self) -> (usize, usize, usize) {
        self.dims
    }

    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    /// All entries with first index `i`.
    pub fn slice(&self, i: usize) -> &[TensorEntry] {
        &self.slices[i]
    }

    /// Entries with first two indices `(i, j)`.
    pub fn pair(&self, i: usize, j: usize) -> &[TensorEntry] {
        let s = &self.slices[i];
        let lo = s.partition_point(|e| e.j < j);
        let hi = s.partition_point(|e| e.j <= j);
        &s[lo..hi]
    }

    pub fn nnz(&self) -> usize {
        self.slices.iter().map(Vec::len).sum()
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, &TensorEntry)> {
        self.slices
            .iter()
            .enumerate()
            .flat_map(|(i, s)| s.iter().map(move |e| (i, e)))
    }

    /// Tensor with the first and second indices exchanged.
    pub fn swap_first_two(&self) -> SparseTensor3 {
        SparseTensor3::from_triples(
            (self.dims.1, self.dims.0, self.dims.2),
            self.conductor,
            self.entries().map(|(i, e)| (e.j, i, e.k, e.value.clone())),
        )
        .expect("indices stay in range")
    }

    /// Tensor with the second and third indices exchanged.
    pub fn swap_last(&self) -> SparseTensor3 {
        SparseTensor3::from_triples(
            (self.dims.0, self.dims.2, self.dims.1),
            self.conductor,
            self.entries().map(|(i, e)| (i, e.k, e.j, e.value.clone())),
        )
        .expect("indices stay in range")
    }
}
