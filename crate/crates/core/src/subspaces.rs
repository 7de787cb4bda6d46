//! Subspaces of `GF(q)^k` in canonical reduced row echelon form.
//!
//! Scalars are `GF(q)` values (see [`crate::gf`]); `0` and `1` are the zero
//! and one of every field, which is all enumeration needs. Arithmetic goes
//! through the base [`FieldTable`].
//!
//! Enumeration walks pivot sets in lexicographic order and, inside a pivot
//! set, the free entries in lexicographic order (last entry fastest). Each
//! pivot set is an independent partition, so workers can split the stream
//! without sharing state.

use alloc::vec;
use alloc::vec::Vec;
use core::ops::Range;

use rand_core::RngCore;

use crate::codes::CodeSpec;
use crate::gf::FieldTable;
use crate::{Error, Result};

/// Default bound on the number of subspaces a single enumeration may visit.
pub const DEFAULT_ENUMERATION_CAP: u128 = 100_000_000;

/// The space a [`SubspaceBasis`] lives in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Ambient {
    /// `GF(Q1) x GF(Q2)` flattened to `GF(q)^(k1 + k2)` in the polynomial
    /// bases `1, g_i, .., g_i^(k_i - 1)`.
    Product { k1: usize, k2: usize },
    /// The length-`n` codeword space `GF(q)^n`.
    Codewords { n: usize },
    /// Plain `GF(q)^dim`.
    Coordinates { dim: usize },
}

impl Ambient {
    pub fn dim(&self) -> usize {
        match *self {
            Ambient::Product { k1, k2 } => k1 + k2,
            Ambient::Codewords { n } => n,
            Ambient::Coordinates { dim } => dim,
        }
    }
}

/// Which factor of `GF(Q1) x GF(Q2)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    First,
    Second,
}

impl Side {
    fn columns(self, k1: usize, k2: usize) -> Range<usize> {
        match self {
            Side::First => 0..k1,
            Side::Second => k1..k1 + k2,
        }
    }
}

/// Row-reduces `rows` in place (each of length `ncols`), drops zero rows and
/// returns the pivot columns.
pub fn rref(field: &FieldTable, rows: &mut Vec<Vec<u32>>, ncols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut rank = 0;
    for col in 0..ncols {
        if rank == rows.len() {
            break;
        }
        let Some(found) = (rank..rows.len()).find(|&r| rows[r][col] != 0) else {
            continue;
        };
        rows.swap(rank, found);
        let inv = field.val_inv(rows[rank][col]);
        if inv != 1 {
            for x in rows[rank].iter_mut() {
                *x = field.val_mul(*x, inv);
            }
        }
        let pivot_row = rows[rank].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r == rank || row[col] == 0 {
                continue;
            }
            let c = row[col];
            for (x, &y) in row.iter_mut().zip(&pivot_row).skip(col) {
                if y != 0 {
                    *x = field.val_sub(*x, field.val_mul(c, y));
                }
            }
        }
        pivots.push(col);
        rank += 1;
    }
    rows.truncate(rank);
    pivots
}

/// Rank of a list of vectors.
pub fn rank(field: &FieldTable, rows: &[Vec<u32>], ncols: usize) -> usize {
    let mut rows = rows.to_vec();
    rref(field, &mut rows, ncols).len()
}

/// Basis of `{x : A x = 0}` for the matrix with the given rows.
pub fn nullspace(field: &FieldTable, rows: &[Vec<u32>], ncols: usize) -> Vec<Vec<u32>> {
    let mut a = rows.to_vec();
    let pivots = rref(field, &mut a, ncols);
    let mut is_pivot = vec![false; ncols];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    (0..ncols)
        .filter(|&c| !is_pivot[c])
        .map(|free| {
            let mut x = vec![0u32; ncols];
            x[free] = 1;
            for (r, &p) in pivots.iter().enumerate() {
                x[p] = field.val_neg(a[r][free]);
            }
            x
        })
        .collect()
}

/// A subspace given by its unique RREF basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SubspaceBasis {
    ambient: Ambient,
    /// Row-major, `dim * ambient.dim()` entries.
    rows: Vec<u32>,
    pivots: Vec<usize>,
}

impl SubspaceBasis {
    pub fn zero(ambient: Ambient) -> SubspaceBasis {
        SubspaceBasis { ambient, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn full(ambient: Ambient) -> SubspaceBasis {
        let k = ambient.dim();
        let mut rows = vec![0u32; k * k];
        for i in 0..k {
            rows[i * k + i] = 1;
        }
        SubspaceBasis { ambient, rows, pivots: (0..k).collect() }
    }

    /// Span of arbitrary vectors.
    pub fn span<V: AsRef<[u32]>>(field: &FieldTable, ambient: Ambient, vectors: &[V]) -> Result<SubspaceBasis> {
        let k = ambient.dim();
        let mut rows = Vec::with_capacity(vectors.len());
        for v in vectors {
            let v = v.as_ref();
            if v.len() != k {
                return Err(Error::LengthMismatch { expected: k, found: v.len() });
            }
            rows.push(v.to_vec());
        }
        let pivots = rref(field, &mut rows, k);
        Ok(SubspaceBasis { ambient, rows: rows.concat(), pivots })
    }

    pub fn ambient(&self) -> Ambient {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.pivots.len()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn row(&self, i: usize) -> &[u32] {
        let k = self.ambient.dim();
        &self.rows[i * k..(i + 1) * k]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[u32]> + '_ {
        (0..self.dim()).map(move |i| self.row(i))
    }

    pub fn rows_vec(&self) -> Vec<Vec<u32>> {
        self.rows().map(|r| r.to_vec()).collect()
    }

    /// Flat RREF entries; equal fingerprints in the same ambient mean equal
    /// subspaces.
    pub fn fingerprint(&self) -> &[u32] {
        &self.rows
    }

    /// Reduces `v` against the basis in place; the result is zero iff `v`
    /// lies in the subspace.
    pub fn reduce_in_place(&self, field: &FieldTable, v: &mut [u32]) {
        for (r, &p) in self.pivots.iter().enumerate() {
            let c = v[p];
            if c == 0 {
                continue;
            }
            for (x, &y) in v.iter_mut().zip(self.row(r)) {
                if y != 0 {
                    *x = field.val_sub(*x, field.val_mul(c, y));
                }
            }
        }
    }

    pub fn contains(&self, field: &FieldTable, v: &[u32]) -> bool {
        let mut scratch = v.to_vec();
        self.contains_with(field, v, &mut scratch)
    }

    /// [`SubspaceBasis::contains`] reusing a caller-provided buffer.
    pub fn contains_with(&self, field: &FieldTable, v: &[u32], scratch: &mut Vec<u32>) -> bool {
        scratch.clear();
        scratch.extend_from_slice(v);
        self.reduce_in_place(field, scratch);
        scratch.iter().all(|&x| x == 0)
    }

    pub fn contains_subspace(&self, field: &FieldTable, other: &SubspaceBasis) -> bool {
        other.rows().all(|r| self.contains(field, r))
    }

    /// All `q^dim` vectors of the subspace, zero first.
    pub fn elements(&self, field: &FieldTable) -> Vec<Vec<u32>> {
        let q = field.size();
        let k = self.ambient.dim();
        let j = self.dim();
        let total = (q as usize).pow(j as u32);
        let mut out = Vec::with_capacity(total);
        let mut coeffs = vec![0u32; j];
        for _ in 0..total {
            let mut v = vec![0u32; k];
            for (r, &c) in coeffs.iter().enumerate() {
                if c == 0 {
                    continue;
                }
                for (x, &y) in v.iter_mut().zip(self.row(r)) {
                    *x = field.val_add(*x, field.val_mul(c, y));
                }
            }
            out.push(v);
            for c in coeffs.iter_mut().rev() {
                *c += 1;
                if *c < q {
                    break;
                }
                *c = 0;
            }
        }
        out
    }

    /// Rank of the basis restricted to a block of columns.
    pub fn rank_of_columns(&self, field: &FieldTable, cols: Range<usize>) -> usize {
        let rows: Vec<Vec<u32>> = self.rows().map(|r| r[cols.clone()].to_vec()).collect();
        rank(field, &rows, cols.len())
    }

    /// Draws a subspace of dimension `j` from uniformly random spanning sets.
    pub fn random<R: RngCore>(field: &FieldTable, ambient: Ambient, j: usize, rng: &mut R) -> Result<SubspaceBasis> {
        let k = ambient.dim();
        if j > k {
            return Err(Error::RangeError { value: j as u64, min: 0, max: k as u64 });
        }
        let q = field.size() as u64;
        loop {
            let vectors: Vec<Vec<u32>> = (0..j)
                .map(|_| (0..k).map(|_| (rng.next_u64() % q) as u32).collect())
                .collect();
            let s = SubspaceBasis::span(field, ambient, &vectors)?;
            if s.dim() == j {
                return Ok(s);
            }
        }
    }
}

/// Number of `j`-dimensional subspaces of `GF(q)^k`.
pub fn gaussian_binomial(k: u32, j: u32, q: u64) -> Result<u128> {
    if j > k {
        return Err(Error::RangeError { value: j as u64, min: 0, max: k as u64 });
    }
    let q = q as u128;
    let pow = |e: u32| q.checked_pow(e).ok_or(Error::Overflow);
    let mut acc: u128 = 1;
    for i in 0..j {
        let num = pow(k - i)? - 1;
        let den = pow(i + 1)? - 1;
        // acc * num / den is the next binomial, hence integral
        acc = acc.checked_mul(num).ok_or(Error::Overflow)? / den;
    }
    Ok(acc)
}

/// Deterministic stream of all `j`-dimensional subspaces of an ambient space.
#[derive(Clone, Debug)]
pub struct SubspaceEnumerator {
    ambient: Ambient,
    j: usize,
    q: u32,
    pivot_sets: Vec<Vec<usize>>,
}

impl SubspaceEnumerator {
    pub fn new(ambient: Ambient, j: usize, q: u32) -> Result<SubspaceEnumerator> {
        Self::with_cap(ambient, j, q, DEFAULT_ENUMERATION_CAP)
    }

    pub fn with_cap(ambient: Ambient, j: usize, q: u32, cap: u128) -> Result<SubspaceEnumerator> {
        let k = ambient.dim();
        let count = gaussian_binomial(k as u32, j as u32, q as u64)?;
        if count > cap {
            return Err(Error::CapExceeded { count, cap });
        }
        Ok(SubspaceEnumerator { ambient, j, q, pivot_sets: combinations(k, j) })
    }

    pub fn count(&self) -> u128 {
        gaussian_binomial(self.ambient.dim() as u32, self.j as u32, self.q as u64).unwrap_or(u128::MAX)
    }

    pub fn dim(&self) -> usize {
        self.j
    }

    /// Pivot sets in enumeration order; one partition each.
    pub fn pivot_sets(&self) -> &[Vec<usize>] {
        &self.pivot_sets
    }

    pub fn partitions(&self) -> usize {
        self.pivot_sets.len()
    }

    /// Subspaces whose RREF has the `index`-th pivot set.
    pub fn partition(&self, index: usize) -> PartitionIter {
        PartitionIter::new(self.ambient, self.q, &self.pivot_sets[index])
    }

    pub fn iter(&self) -> impl Iterator<Item = SubspaceBasis> + '_ {
        (0..self.partitions()).flat_map(move |i| self.partition(i))
    }
}

/// `enumerate_subspaces(k, j, q)` over plain coordinates.
pub fn enumerate_subspaces(k: usize, j: usize, q: u32) -> Result<SubspaceEnumerator> {
    SubspaceEnumerator::new(Ambient::Coordinates { dim: k }, j, q)
}

/// Lexicographic `j`-subsets of `0..k`.
fn combinations(k: usize, j: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..j).collect();
    if j > k {
        return out;
    }
    loop {
        out.push(cur.clone());
        let Some(i) = (0..j).rev().find(|&i| cur[i] < k - j + i) else {
            return out;
        };
        cur[i] += 1;
        for t in i + 1..j {
            cur[t] = cur[t - 1] + 1;
        }
    }
}

/// Iterator over one pivot-set partition.
#[derive(Clone, Debug)]
pub struct PartitionIter {
    ambient: Ambient,
    q: u32,
    pivots: Vec<usize>,
    free: Vec<usize>,
    current: Vec<u32>,
    done: bool,
}

impl PartitionIter {
    fn new(ambient: Ambient, q: u32, pivots: &[usize]) -> PartitionIter {
        let k = ambient.dim();
        let mut current = vec![0u32; pivots.len() * k];
        let mut free = Vec::new();
        for (r, &p) in pivots.iter().enumerate() {
            current[r * k + p] = 1;
            for c in p + 1..k {
                if !pivots.contains(&c) {
                    free.push(r * k + c);
                }
            }
        }
        PartitionIter { ambient, q, pivots: pivots.to_vec(), free, current, done: false }
    }

    /// Number of subspaces in this partition.
    pub fn len_hint(&self) -> u128 {
        (self.q as u128).pow(self.free.len() as u32)
    }
}

impl Iterator for PartitionIter {
    type Item = SubspaceBasis;

    fn next(&mut self) -> Option<SubspaceBasis> {
        if self.done {
            return None;
        }
        let item = SubspaceBasis { ambient: self.ambient, rows: self.current.clone(), pivots: self.pivots.clone() };
        self.done = true;
        for &slot in self.free.iter().rev() {
            self.current[slot] += 1;
            if self.current[slot] < self.q {
                self.done = false;
                break;
            }
            self.current[slot] = 0;
        }
        Some(item)
    }
}

/// Image and kernel of a coordinate projection restricted to `H`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Projection {
    /// Subspace of `GF(Q_side)` in flattened coordinates.
    pub image: SubspaceBasis,
    /// Subspace of `H`, in the product ambient.
    pub kernel: SubspaceBasis,
}

/// Projection of `H` onto one factor of the product space.
pub fn project(field: &FieldTable, h: &SubspaceBasis, side: Side) -> Result<Projection> {
    let Ambient::Product { k1, k2 } = h.ambient() else {
        return Err(Error::FieldMismatch);
    };
    let cols = side.columns(k1, k2);
    let width = cols.len();
    let projected: Vec<Vec<u32>> = h.rows().map(|r| r[cols.clone()].to_vec()).collect();
    let image = SubspaceBasis::span(field, Ambient::Coordinates { dim: width }, &projected)?;

    // coefficient vectors c with sum c_r * proj(row_r) = 0
    let j = h.dim();
    let transposed: Vec<Vec<u32>> = (0..width).map(|c| projected.iter().map(|r| r[c]).collect()).collect();
    let kernel_vectors: Vec<Vec<u32>> = nullspace(field, &transposed, j)
        .into_iter()
        .map(|coeffs| {
            let mut v = vec![0u32; k1 + k2];
            for (r, &c) in coeffs.iter().enumerate() {
                for (x, &y) in v.iter_mut().zip(h.row(r)) {
                    *x = field.val_add(*x, field.val_mul(c, y));
                }
            }
            v
        })
        .collect();
    let kernel = SubspaceBasis::span(field, h.ambient(), &kernel_vectors)?;
    Ok(Projection { image, kernel })
}

/// A bilinear form on `GF(q)^dim` given by its Gram matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BilinearForm {
    dim: usize,
    gram: Vec<u32>,
}

impl BilinearForm {
    pub fn new(dim: usize, gram: Vec<u32>) -> Result<BilinearForm> {
        if gram.len() != dim * dim {
            return Err(Error::LengthMismatch { expected: dim * dim, found: gram.len() });
        }
        Ok(BilinearForm { dim, gram })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn entry(&self, a: usize, b: usize) -> u32 {
        self.gram[a * self.dim + b]
    }

    /// `u^T M v`.
    pub fn pair(&self, field: &FieldTable, u: &[u32], v: &[u32]) -> u32 {
        let mut acc = 0;
        for (a, &x) in u.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (b, &y) in v.iter().enumerate() {
                if y != 0 {
                    acc = field.val_add(acc, field.val_mul(x, field.val_mul(self.entry(a, b), y)));
                }
            }
        }
        acc
    }

    /// `u^T M` as a row vector.
    pub fn left_apply(&self, field: &FieldTable, u: &[u32]) -> Vec<u32> {
        (0..self.dim)
            .map(|b| {
                u.iter().enumerate().fold(0, |acc, (a, &x)| {
                    if x == 0 {
                        acc
                    } else {
                        field.val_add(acc, field.val_mul(x, self.entry(a, b)))
                    }
                })
            })
            .collect()
    }

    pub fn is_nondegenerate(&self, field: &FieldTable) -> bool {
        let rows: Vec<Vec<u32>> = self.gram.chunks(self.dim).map(|r| r.to_vec()).collect();
        rank(field, &rows, self.dim) == self.dim
    }
}

/// `H^perp = {v : <w, v> = 0 for all w in H}` under `form`.
pub fn dual_subspace(field: &FieldTable, h: &SubspaceBasis, form: &BilinearForm) -> Result<SubspaceBasis> {
    let k = h.ambient().dim();
    if form.dim() != k {
        return Err(Error::LengthMismatch { expected: k, found: form.dim() });
    }
    let constraints: Vec<Vec<u32>> = h.rows().map(|r| form.left_apply(field, r)).collect();
    let basis = nullspace(field, &constraints, k);
    SubspaceBasis::span(field, h.ambient(), &basis)
}

/// `|{i in 0..n : (a1^i, a2^i) in H}|`.
pub fn intersect_with_cyclic_group(spec: &CodeSpec, h: &SubspaceBasis) -> usize {
    let field = spec.base();
    let mut scratch = Vec::with_capacity(h.ambient().dim());
    spec.cyclic_points()
        .iter()
        .filter(|pt| h.contains_with(field, pt, &mut scratch))
        .count()
}
