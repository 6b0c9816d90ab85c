//! Exact rational simplicial homology and the Hochster Betti oracle.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::Zero;
use thiserror::Error;

use crate::algebra::BettiTable;
use crate::complex::{Face, SimplicialComplex};
use crate::par::Exec;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HomologyError {
    #[error("Hochster oracle needs 2^{n} induced subcomplexes; budget allows n <= {max}")]
    BudgetExceeded { n: usize, max: usize },
}

/// Oriented boundary maps `∂_k : C_k -> C_{k-1}` for `k = 0..=dim`, with `C_{-1}` spanned by `∅`.
#[derive(Clone, Debug)]
pub struct ChainBoundary {
    /// `faces[k + 1]` lists the `k`-faces in sorted order.
    faces: Vec<Vec<Face>>,
}

/// Sparse matrix as `(row, column, ±1)` triples.
pub type SparseMatrix = Vec<(usize, usize, i8)>;

impl ChainBoundary {
    pub fn new(delta: &SimplicialComplex) -> Self {
        let faces = (-1..=delta.dim()).map(|k| delta.faces_of_dim(k)).collect();
        ChainBoundary { faces }
    }

    pub fn dim(&self) -> isize {
        self.faces.len() as isize - 2
    }

    pub fn faces(&self, k: isize) -> &[Face] {
        usize::try_from(k + 1).ok().and_then(|i| self.faces.get(i)).map_or(&[], Vec::as_slice)
    }

    /// `∂_k`, rows indexed by `(k-1)`-faces; the sign of dropping the vertex at position `p` is `(-1)^p`.
    pub fn matrix(&self, k: isize) -> SparseMatrix {
        if k < 0 || k > self.dim() {
            return Vec::new();
        }
        let index: HashMap<&Face, usize> = self.faces(k - 1).iter().enumerate().map(|(i, f)| (f, i)).collect();
        let mut out = Vec::new();
        for (col, face) in self.faces(k).iter().enumerate() {
            for p in 0..face.len() {
                let mut sub = face.clone();
                sub.remove(p);
                let sign = if p % 2 == 0 { 1 } else { -1 };
                out.push((index[&sub], col, sign));
            }
        }
        out
    }

    /// Whether `∂_{k-1} ∘ ∂_k` vanishes.
    pub fn composition_vanishes(&self, k: isize) -> bool {
        let outer = self.matrix(k - 1);
        let inner = self.matrix(k);
        let mut product: HashMap<(usize, usize), i64> = HashMap::new();
        let mut by_row: HashMap<usize, Vec<(usize, i8)>> = HashMap::new();
        for &(r, c, v) in &outer {
            by_row.entry(c).or_default().push((r, v));
        }
        for &(mid, col, v) in &inner {
            for &(row, w) in by_row.get(&mid).into_iter().flatten() {
                *product.entry((row, col)).or_default() += (v as i64) * (w as i64);
            }
        }
        product.values().all(|&x| x == 0)
    }

    pub fn rank(&self, k: isize) -> usize {
        if k < 0 || k > self.dim() {
            return 0;
        }
        let rows = self.faces(k - 1).len();
        let cols = self.faces(k).len();
        matrix_rank(rows, cols, &self.matrix(k))
    }
}

/// Rank over the rationals by fraction-free (Bareiss) elimination.
///
/// Runs on `i128` and restarts with arbitrary-precision integers if an intermediate overflows.
pub fn matrix_rank(rows: usize, cols: usize, entries: &[(usize, usize, i8)]) -> usize {
    let mut dense = vec![vec![0i128; cols]; rows];
    for &(r, c, v) in entries {
        dense[r][c] += v as i128;
    }
    if let Some(rank) = bareiss_rank(dense.clone()) {
        return rank;
    }
    let big = dense.into_iter().map(|row| row.into_iter().map(BigInt::from).collect()).collect();
    bareiss_rank::<BigInt>(big).expect("arbitrary precision cannot overflow")
}

trait Entry: Clone {
    fn is_zero(&self) -> bool;
    fn zero() -> Self;
    fn one() -> Self;
    /// `(akk * aij - aik * akj) / prev`, exact by Sylvester's identity.
    fn step(akk: &Self, aij: &Self, aik: &Self, akj: &Self, prev: &Self) -> Option<Self>;
}

impl Entry for i128 {
    fn is_zero(&self) -> bool {
        *self == 0
    }

    fn zero() -> Self {
        0
    }

    fn one() -> Self {
        1
    }

    fn step(akk: &i128, aij: &i128, aik: &i128, akj: &i128, prev: &i128) -> Option<i128> {
        let x = akk.checked_mul(*aij)?;
        let y = aik.checked_mul(*akj)?;
        Some(x.checked_sub(y)? / prev)
    }
}

impl Entry for BigInt {
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }

    fn zero() -> Self {
        <BigInt as Zero>::zero()
    }

    fn one() -> Self {
        BigInt::from(1)
    }

    fn step(akk: &BigInt, aij: &BigInt, aik: &BigInt, akj: &BigInt, prev: &BigInt) -> Option<BigInt> {
        Some((akk * aij - aik * akj) / prev)
    }
}

fn bareiss_rank<T: Entry>(mut a: Vec<Vec<T>>) -> Option<usize> {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut prev = T::one();
    let mut k = 0;
    for col in 0..cols {
        if k == rows {
            break;
        }
        let Some(p) = (k..rows).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        a.swap(k, p);
        let (top, rest) = a.split_at_mut(k + 1);
        let pivot = &top[k];
        for row in rest.iter_mut() {
            let aik = row[col].clone();
            for j in col + 1..cols {
                row[j] = T::step(&pivot[col], &row[j], &aik, &pivot[j], &prev)?;
            }
            row[col] = T::zero();
        }
        prev = pivot[col].clone();
        k += 1;
    }
    Some(k)
}

/// Reduced Betti numbers over the rationals in dimensions `-1..=dim Δ`.
pub fn reduced_betti(delta: &SimplicialComplex) -> Vec<usize> {
    let chain = ChainBoundary::new(delta);
    (-1..=chain.dim())
        .map(|k| chain.faces(k).len() - chain.rank(k) - chain.rank(k + 1))
        .collect()
}

#[derive(Clone, Copy, Debug)]
pub struct HochsterOptions {
    /// Largest ambient vertex count accepted.
    pub max_vertices: usize,
    pub exec: Exec,
}

impl Default for HochsterOptions {
    fn default() -> Self {
        HochsterOptions { max_vertices: 18, exec: Exec::default() }
    }
}

/// Graded Betti numbers of the Stanley-Reisner ideal `I_Δ`:
/// `β_{i,j} = Σ_{|W| = j} dim H̃_{j-i-2}(Δ_W)`.
pub fn hochster_betti(delta: &SimplicialComplex, options: HochsterOptions) -> Result<BettiTable, HomologyError> {
    let n = delta.n();
    if n > options.max_vertices {
        return Err(HomologyError::BudgetExceeded { n, max: options.max_vertices });
    }
    let subsets: Vec<u64> = (1u64..(1u64 << n)).collect();
    let contributions = options.exec.map_collect(subsets, |mask| {
        let w: Vec<usize> = (1..=n).filter(|v| mask >> (v - 1) & 1 == 1).collect();
        let j = w.len();
        let betti = reduced_betti(&delta.induced(&w));
        // betti[k + 1] = dim H̃_k; k = j - i - 2
        betti
            .iter()
            .enumerate()
            .filter(|&(_, &b)| b > 0)
            .filter_map(|(idx, &b)| {
                let k = idx as isize - 1;
                let i = j as isize - 2 - k;
                (i >= 0).then_some((i as usize, j, b as u64))
            })
            .collect::<Vec<_>>()
    });
    let mut table = BettiTable::default();
    for (i, j, b) in contributions.into_iter().flatten() {
        table.add(i, j, b);
    }
    Ok(table)
}
