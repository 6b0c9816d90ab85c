//! Weak and strong Lefschetz verdicts for squeezed complexes, read off `U`.
//!
//! Both properties reduce to maximal rank of the monomial maps
//! `ψ : [U]_i -> [U]_{i+j}, u ↦ u·x_m^j`. The criterion mode checks the
//! divisibility and shift-generator conditions; the oracle mode counts ranks.

use serde::Serialize;
use thiserror::Error;

use crate::monomial::{Monomial, MonomialError, OrderIdeal};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LefschetzError {
    #[error(transparent)]
    Monomial(#[from] MonomialError),
    #[error("criterion says {criterion} but the rank oracle says {oracle} for the {property}")]
    ModeDisagreement { property: Property, criterion: bool, oracle: bool },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Property {
    #[serde(rename = "WLP")]
    Wlp,
    #[serde(rename = "SLP")]
    Slp,
}

impl std::fmt::Display for Property {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Property::Wlp => "WLP",
            Property::Slp => "SLP",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Mode {
    #[default]
    Criterion,
    Oracle,
    Both,
}

impl std::str::FromStr for Mode {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "criterion" => Ok(Mode::Criterion),
            "oracle" => Ok(Mode::Oracle),
            "both" => Ok(Mode::Both),
            other => Err(format!("unknown mode {other:?} (expected criterion, oracle or both)")),
        }
    }
}

/// Why a verdict failed.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Violation {
    /// A member of the target layer is not divisible by `x_m^power`.
    NotDivisible {
        #[serde(serialize_with = "as_display")]
        monomial: Monomial,
        power: u32,
    },
    /// A shift generator times `x_m^power` is missing from `U`.
    MissingProduct {
        #[serde(serialize_with = "as_display")]
        generator: Monomial,
        #[serde(serialize_with = "as_display")]
        product: Monomial,
    },
    /// `ψ` falls short of maximal rank.
    RankDeficient { rank: usize, max: usize },
}

fn as_display<S: serde::Serializer>(u: &Monomial, s: S) -> Result<S::Ok, S::Error> {
    s.collect_str(u)
}

/// The failing map `ψ : [U]_i -> [U]_{i+j}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub i: usize,
    pub j: usize,
    pub violation: Violation,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LefschetzVerdict {
    pub property: Property,
    pub holds: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub alpha: Option<usize>,
}

/// Least degree where the degree histogram of `U` is largest.
pub fn alpha(u: &OrderIdeal) -> Result<usize, LefschetzError> {
    u.require_shifted()?;
    let h = u.degree_histogram();
    let max = *h.iter().max().expect("non-empty histogram");
    Ok(h.iter().position(|&x| x == max).unwrap())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct PsiRank {
    pub rank: usize,
    pub max: usize,
}

impl PsiRank {
    pub fn is_maximal(&self) -> bool {
        self.rank == self.max
    }
}

/// Rank of `ψ : [U]_i -> [U]_{i+j}` against `min(|[U]_i|, |[U]_{i+j}|)`.
pub fn psi_rank(u: &OrderIdeal, i: usize, j: usize) -> Result<PsiRank, LefschetzError> {
    u.require_shifted()?;
    Ok(psi_rank_unchecked(u, i, j))
}

fn psi_rank_unchecked(u: &OrderIdeal, i: usize, j: usize) -> PsiRank {
    let m = u.m();
    let source = u.layer(i);
    let target = u.layer(i + j);
    // multiplication by a monomial is injective, so the rank is the number of images inside U
    let rank = source.iter().filter(|w| u.contains(&w.times_var_pow(m, j as u32))).count();
    PsiRank { rank, max: source.len().min(target.len()) }
}

fn check_surjective(u: &OrderIdeal, i: usize, j: usize) -> Option<Witness> {
    let m = u.m();
    u.layer(i + j)
        .into_iter()
        .find(|w| w.exponent(m) < j as u32)
        .map(|w| Witness { i, j, violation: Violation::NotDivisible { monomial: w.clone(), power: j as u32 } })
}

fn check_injective(u: &OrderIdeal, generators: &[Monomial], i: usize, j: usize) -> Option<Witness> {
    let m = u.m();
    generators.iter().filter(|g| g.degree() == i).find_map(|g| {
        let product = g.times_var_pow(m, j as u32);
        (!u.contains(&product)).then(|| Witness {
            i,
            j,
            violation: Violation::MissingProduct { generator: g.clone(), product },
        })
    })
}

fn oracle_witness(u: &OrderIdeal, i: usize, j: usize) -> Option<Witness> {
    let r = psi_rank_unchecked(u, i, j);
    (!r.is_maximal()).then_some(Witness { i, j, violation: Violation::RankDeficient { rank: r.rank, max: r.max } })
}

/// Weak Lefschetz property of every `Δ_t(U)`.
pub fn has_wlp(u: &OrderIdeal, mode: Mode) -> Result<LefschetzVerdict, LefschetzError> {
    let a = alpha(u)?;
    let d = u.d_max();
    let generators = u.shift_generators()?;
    let criterion = || {
        (1..=d).find_map(|j| {
            if j > a {
                check_surjective(u, j - 1, 1)
            } else {
                check_injective(u, &generators, j - 1, 1)
            }
        })
    };
    let oracle = || (1..=d).find_map(|j| oracle_witness(u, j - 1, 1));
    let witness = decide(Property::Wlp, mode, criterion, oracle)?;
    Ok(LefschetzVerdict { property: Property::Wlp, holds: witness.is_none(), witness, alpha: Some(a) })
}

/// Strong Lefschetz property of every `Δ_t(U)`.
pub fn has_slp(u: &OrderIdeal, mode: Mode) -> Result<LefschetzVerdict, LefschetzError> {
    u.require_shifted()?;
    let d = u.d_max();
    let h = u.degree_histogram();
    let generators = u.shift_generators()?;
    let pairs: Vec<(usize, usize)> = (0..=d).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
    let criterion = || {
        pairs.iter().find_map(|&(i, j)| {
            let injective = if h[i] <= h[j] { check_injective(u, &generators, i, j - i) } else { None };
            let surjective = if h[i] >= h[j] { check_surjective(u, i, j - i) } else { None };
            injective.or(surjective)
        })
    };
    let oracle = || pairs.iter().find_map(|&(i, j)| oracle_witness(u, i, j - i));
    let witness = decide(Property::Slp, mode, criterion, oracle)?;
    Ok(LefschetzVerdict { property: Property::Slp, holds: witness.is_none(), witness, alpha: None })
}

fn decide(
    property: Property,
    mode: Mode,
    criterion: impl Fn() -> Option<Witness>,
    oracle: impl Fn() -> Option<Witness>,
) -> Result<Option<Witness>, LefschetzError> {
    match mode {
        Mode::Criterion => Ok(criterion()),
        Mode::Oracle => Ok(oracle()),
        Mode::Both => {
            let c = criterion();
            let o = oracle();
            if c.is_none() != o.is_none() {
                return Err(LefschetzError::ModeDisagreement { property, criterion: c.is_none(), oracle: o.is_none() });
            }
            Ok(c)
        }
    }
}
