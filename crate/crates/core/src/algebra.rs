//! Stable operators, Stanley-Reisner ideals, Eliahou-Kervaire Betti tables
//! and Hilbert functions.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use crate::complex::{binomial, Face, SimplicialComplex};
use crate::homology::{self, HochsterOptions, HomologyError};
use crate::monomial::{Monomial, MonomialError, MonomialIdeal, OrderIdeal};
use crate::squeeze;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("ideal is not strongly stable")]
    NotStronglyStable,
    #[error("shift sequence must start at 0 and be non-decreasing, got {0:?}")]
    InvalidShiftSequence(Vec<usize>),
    #[error(transparent)]
    Monomial(#[from] MonomialError),
    #[error(transparent)]
    Homology(#[from] HomologyError),
}

/// A shift sequence `a = (a_1, a_2, ...)` acting by `x_{i_1}...x_{i_s} ↦ x_{i_1+a_1}...x_{i_s+a_s}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum StableOperator {
    /// `φ_ℓ`: `a_k = 2(k-1)` for `k <= ℓ`, `a_k = k+ℓ-1` for `k > ℓ`.
    Phi(usize),
    /// Explicit prefix, continued by its last value.
    Custom(Vec<usize>),
}

impl StableOperator {
    pub fn custom(a: Vec<usize>) -> Result<Self, AlgebraError> {
        let ok = a.first().is_none_or(|&a1| a1 == 0) && a.windows(2).all(|w| w[0] <= w[1]);
        if ok {
            Ok(StableOperator::Custom(a))
        } else {
            Err(AlgebraError::InvalidShiftSequence(a))
        }
    }

    /// Polarization.
    pub fn polarization() -> Self {
        StableOperator::Phi(0)
    }

    /// `a_k`, 1-based.
    pub fn shift(&self, k: usize) -> usize {
        match self {
            StableOperator::Phi(l) if k <= *l => 2 * (k - 1),
            StableOperator::Phi(l) => k + l - 1,
            StableOperator::Custom(a) => a.get(k - 1).or(a.last()).copied().unwrap_or(0),
        }
    }

    fn image_indices(&self, u: &Monomial) -> Vec<usize> {
        u.indices().iter().enumerate().map(|(pos, &i)| i + self.shift(pos + 1)).collect()
    }
}

/// Image of one monomial, over `max(nvars, largest image index)` variables.
pub fn apply_operator(op: &StableOperator, u: &Monomial) -> Monomial {
    let idx = op.image_indices(u);
    let n = u.nvars().max(idx.iter().copied().max().unwrap_or(0));
    Monomial::from_indices(n, &idx)
}

/// Minimal generators of the ideal generated by the images of `G(I)`.
pub fn apply_operator_to_ideal(op: &StableOperator, ideal: &MonomialIdeal) -> MonomialIdeal {
    let images: Vec<Vec<usize>> = ideal.generators().iter().map(|g| op.image_indices(g)).collect();
    let n = images.iter().flatten().copied().max().unwrap_or(0).max(ideal.nvars());
    MonomialIdeal::generated_by(n, images.iter().map(|idx| Monomial::from_indices(n, idx)))
        .expect("uniform arity")
}

/// Minimal non-faces of `Δ` as squarefree monomials in `n` variables.
pub fn stanley_reisner_ideal(delta: &SimplicialComplex) -> MonomialIdeal {
    let n = delta.n();
    let mut minimal: BTreeSet<Face> = BTreeSet::new();
    // a minimal non-face F is a face G = F \ {max F} extended by a larger vertex
    let mut faces: Vec<Face> = Vec::new();
    for k in -1..=delta.dim() {
        faces.extend(delta.faces_of_dim(k));
    }
    for g in &faces {
        let start = g.last().map_or(1, |&v| v + 1);
        for v in start..=n {
            let mut f = g.clone();
            f.push(v);
            if delta.contains_face(&f) {
                continue;
            }
            let all_subfaces = (0..f.len()).all(|skip| {
                let sub: Face = f.iter().enumerate().filter(|&(p, _)| p != skip).map(|(_, &x)| x).collect();
                delta.contains_face(&sub)
            });
            if all_subfaces {
                minimal.insert(f);
            }
        }
    }
    MonomialIdeal::generated_by(n, minimal.iter().map(|f| Monomial::from_indices(n, f))).expect("uniform arity")
}

/// Graded Betti numbers `β_{i,j}` (homological degree `i`, internal degree `j`), nonzero entries only.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BettiTable {
    entries: BTreeMap<(usize, usize), u64>,
}

impl BettiTable {
    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    pub fn add(&mut self, i: usize, j: usize, beta: u64) {
        if beta > 0 {
            *self.entries.entry((i, j)).or_default() += beta;
        }
    }

    /// `(i, j, β_{i,j})` sorted by `(j, i)`.
    pub fn nonzero(&self) -> Vec<(usize, usize, u64)> {
        let mut out: Vec<_> = self.entries.iter().map(|(&(i, j), &b)| (i, j, b)).collect();
        out.sort_by_key(|&(i, j, _)| (j, i));
        out
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// `Σ_i (-1)^i β_{i,j}` for each internal degree `j` present.
    pub fn alternating_sums(&self) -> BTreeMap<usize, i64> {
        let mut out = BTreeMap::new();
        for (&(i, j), &b) in &self.entries {
            let sign = if i % 2 == 0 { 1 } else { -1 };
            *out.entry(j).or_default() += sign * b as i64;
        }
        out
    }
}

#[derive(Serialize, Deserialize)]
struct BettiEntry {
    i: usize,
    j: usize,
    beta: u64,
}

#[derive(Serialize, Deserialize)]
struct BettiDocument {
    entries: Vec<BettiEntry>,
}

impl Serialize for BettiTable {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let entries = self.nonzero().into_iter().map(|(i, j, beta)| BettiEntry { i, j, beta }).collect();
        BettiDocument { entries }.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for BettiTable {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let doc = BettiDocument::deserialize(deserializer)?;
        let mut table = BettiTable::default();
        for e in doc.entries {
            if e.j < e.i {
                return Err(serde::de::Error::custom(format!("beta_{{{},{}}} below the diagonal", e.i, e.j)));
            }
            table.add(e.i, e.j, e.beta);
        }
        Ok(table)
    }
}

/// `β_{i,i+j} = Σ_{u ∈ G(I), deg u = j} C(max(u) - 1, i)`.
pub fn ek_betti(ideal: &MonomialIdeal) -> Result<BettiTable, AlgebraError> {
    if !ideal.is_strongly_stable() {
        return Err(AlgebraError::NotStronglyStable);
    }
    let mut table = BettiTable::default();
    for u in ideal.generators() {
        let top = u.max_index();
        for i in 0..top {
            table.add(i, i + u.degree(), binomial(top - 1, i));
        }
    }
    Ok(table)
}

/// Number of monomials of `P(n)` outside `I` in each degree `0..=up_to`.
pub fn hilbert_function(ideal: &MonomialIdeal, n: usize, up_to: usize) -> Vec<u64> {
    let ideal = ideal.extended(n);
    let mut counts = Vec::with_capacity(up_to + 1);
    // standard monomials as non-decreasing index tuples; extend only at or beyond the last index
    let mut layer: Vec<Monomial> = vec![Monomial::one(n)];
    for k in 0..=up_to {
        if k > 0 {
            let mut next = Vec::new();
            for w in &layer {
                for i in w.max_index().max(1)..=n {
                    let v = w.times_var(i);
                    if !ideal.contains(&v) {
                        next.push(v);
                    }
                }
            }
            layer = next;
        } else if ideal.contains(&layer[0]) {
            layer.clear();
        }
        counts.push(layer.len() as u64);
    }
    counts
}

/// Outcome of the two consistency checks behind `gin(I_{Δ_t(U)}) = I(U)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GinReport {
    pub n: usize,
    pub up_to: usize,
    pub hilbert_squarefree: Vec<u64>,
    pub hilbert_extended: Vec<u64>,
    pub ek: BettiTable,
    pub hochster: BettiTable,
}

impl GinReport {
    pub fn hilbert_ok(&self) -> bool {
        self.hilbert_squarefree == self.hilbert_extended
    }

    pub fn betti_ok(&self) -> bool {
        self.ek == self.hochster
    }

    pub fn passed(&self) -> bool {
        self.hilbert_ok() && self.betti_ok()
    }
}

/// Compare `φ_t(I(U))` with `I(U)·P(n)` by Hilbert function through degree `d+2`,
/// and the Eliahou-Kervaire table of `I(U)` with the Hochster table of `Δ_t(U)`.
pub fn verify_gin_claim(u: &OrderIdeal, t: usize, options: HochsterOptions) -> Result<GinReport, AlgebraError> {
    u.require_shifted()?;
    let (m, d) = (u.m(), u.d_max());
    let n = m + t + d;
    let up_to = d + 2;
    let ideal = u.ideal();
    let phi = apply_operator_to_ideal(&StableOperator::Phi(t), &ideal);
    let delta = squeeze::build(u, t).expect("shiftedness checked");
    Ok(GinReport {
        n,
        up_to,
        hilbert_squarefree: hilbert_function(&phi, n, up_to),
        hilbert_extended: hilbert_function(&ideal, n, up_to),
        ek: ek_betti(&ideal)?,
        hochster: homology::hochster_betti(&delta, options)?,
    })
}
