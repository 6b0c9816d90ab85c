//! The squeezed complexes `Δ_t(U)` and their family structure in `t`.

use thiserror::Error;

use crate::algebra;
use crate::complex::{ComplexError, Face, SimplicialComplex};
use crate::monomial::{Monomial, MonomialError, MonomialIdeal, OrderIdeal};
use crate::par::Exec;
use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SqueezeError {
    #[error("monomial {monomial} has degree {degree} > d = {d}")]
    DegreeExceedsD { monomial: Monomial, degree: usize, d: usize },
    #[error(transparent)]
    Monomial(#[from] MonomialError),
    #[error("t = {t} outside [0, {d}]")]
    TOutOfRange { t: usize, d: usize },
    #[error("complex is not pure")]
    NotPure,
    #[error("not a shifted complex of squeezed type: {0}")]
    NotShiftedComplex(String),
    #[error(transparent)]
    Complex(#[from] ComplexError),
}

/// A shifted order ideal together with the parameter `t`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SqueezedSpec {
    ideal: OrderIdeal,
    t: usize,
}

impl SqueezedSpec {
    pub fn new(ideal: OrderIdeal, t: usize) -> Result<Self, SqueezeError> {
        ideal.require_shifted()?;
        Ok(SqueezedSpec { ideal, t })
    }

    pub fn ideal(&self) -> &OrderIdeal {
        &self.ideal
    }

    pub fn t(&self) -> usize {
        self.t
    }

    pub fn m(&self) -> usize {
        self.ideal.m()
    }

    pub fn d(&self) -> usize {
        self.ideal.d_max()
    }

    pub fn vertex_count(&self) -> usize {
        self.m() + self.t + self.d()
    }

    pub fn dim(&self) -> isize {
        (self.d() + self.t) as isize - 1
    }

    /// `d_max(U) - t`.
    pub fn index(&self) -> isize {
        self.d() as isize - self.t as isize
    }

    pub fn build(&self) -> SimplicialComplex {
        build_unchecked(&self.ideal, self.t)
    }
}

/// `F_t(u) ⊆ [m+t+d]`, a `(d+t)`-element vertex set.
pub fn facet_of(u: &Monomial, t: usize, m: usize, d: usize) -> Result<Face, SqueezeError> {
    let s = u.degree();
    if s > d {
        return Err(SqueezeError::DegreeExceedsD { monomial: u.clone(), degree: s, d });
    }
    let idx = u.indices();
    let mut face = Vec::with_capacity(d + t);
    for (pos, &i) in idx.iter().enumerate() {
        let l = pos + 1;
        if l <= t {
            face.push(i + 2 * (l - 1));
            face.push(i + 2 * l - 1);
        } else {
            face.push(i + l + t - 1);
        }
    }
    let tail_start = if s <= t { m + 2 * s + 1 } else { m + t + s + 1 };
    face.extend(tail_start..=m + t + d);
    debug_assert!(face.windows(2).all(|w| w[0] < w[1]));
    Ok(face)
}

/// `Δ_t(U)` on `[m+t+d]`, one facet per member of `U`.
pub fn build(ideal: &OrderIdeal, t: usize) -> Result<SimplicialComplex, SqueezeError> {
    ideal.require_shifted()?;
    Ok(build_unchecked(ideal, t))
}

fn build_unchecked(ideal: &OrderIdeal, t: usize) -> SimplicialComplex {
    let (m, d) = (ideal.m(), ideal.d_max());
    facets_over(ideal.iter(), t, m, d, m + t + d)
}

fn facets_over<'a>(
    members: impl Iterator<Item = &'a Monomial>,
    t: usize,
    m: usize,
    d: usize,
    n: usize,
) -> SimplicialComplex {
    let facets = members.map(|u| facet_of(u, t, m, d).expect("member degree within d")).collect();
    SimplicialComplex::from_faces_unchecked(n, facets)
}

/// Degree histogram of `U` padded with zeros to length `d+t+1`.
pub fn squeezed_h_vector(ideal: &OrderIdeal, t: usize) -> Result<Vec<usize>, SqueezeError> {
    ideal.require_shifted()?;
    let d = ideal.d_max();
    if t > d {
        return Err(SqueezeError::TOutOfRange { t, d });
    }
    let mut h = ideal.degree_histogram();
    h.resize(d + t + 1, 0);
    Ok(h)
}

/// `Δ_t(U) = {apex} ∗ Δ_{t-1}(U)` after relabeling the base by `relabel`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConeStructure {
    pub apex: usize,
    pub base_t: usize,
    /// Single vertex moved when embedding the base, if any.
    pub relabel: Option<(usize, usize)>,
    /// `Δ_{t-1}(U)` with its own labels.
    pub base: SimplicialComplex,
}

impl ConeStructure {
    /// The cone rebuilt from the base, on the labels of `Δ_t(U)`.
    pub fn assemble(&self) -> SimplicialComplex {
        let n = self.base.n() + 1;
        let facets = self
            .base
            .facets()
            .iter()
            .map(|f| {
                let mut g: Face = f
                    .iter()
                    .map(|&v| match self.relabel {
                        Some((from, to)) if v == from => to,
                        _ => v,
                    })
                    .collect();
                g.push(self.apex);
                g.sort_unstable();
                g
            })
            .collect();
        SimplicialComplex::from_faces_unchecked(n, facets)
    }
}

/// Cone decomposition at `t > d` (apex `m+t+d`), and at `t = d` when `x_m` divides every
/// top-degree member (apex `m+2d-1`); `None` otherwise.
pub fn cone_structure(ideal: &OrderIdeal, t: usize) -> Result<Option<ConeStructure>, SqueezeError> {
    ideal.require_shifted()?;
    let (m, d) = (ideal.m(), ideal.d_max());
    let candidate = if t > d {
        Some((m + t + d, None))
    } else if t == d && d >= 1 && ideal.layer(d).iter().all(|u| u.exponent(m) > 0) {
        Some((m + 2 * d - 1, Some((m + 2 * d - 1, m + 2 * d))))
    } else {
        None
    };
    let Some((apex, relabel)) = candidate else {
        return Ok(None);
    };
    let cone = ConeStructure { apex, base_t: t - 1, relabel, base: build_unchecked(ideal, t - 1) };
    debug_assert_eq!(cone.assemble(), build_unchecked(ideal, t));
    Ok(Some(cone))
}

/// `(D(Δ_0(U)), ..., D(Δ_d(U)))`; an entry is `None` when `Δ_t(U)` has dimension 0.
pub fn sing_index_profile(ideal: &OrderIdeal) -> Result<Vec<Option<Rational>>, SqueezeError> {
    sing_index_profile_with(ideal, Exec::default())
}

pub fn sing_index_profile_with(ideal: &OrderIdeal, exec: Exec) -> Result<Vec<Option<Rational>>, SqueezeError> {
    ideal.require_shifted()?;
    let ts: Vec<usize> = (0..=ideal.d_max()).collect();
    exec.try_map_collect(ts, |t| match build_unchecked(ideal, t).singularity_index() {
        Ok(d) => Ok(Some(d)),
        Err(ComplexError::NoRidges(_)) => Ok(None),
        Err(e) => Err(SqueezeError::from(e)),
    })
}

/// Predicted `lk(1)` in `Δ_t(U)`, assembled from `Ũ = {u : x_1 u ∈ U}`.
pub fn predicted_link_of_first_vertex(ideal: &OrderIdeal, t: usize) -> SimplicialComplex {
    let (m, d) = (ideal.m(), ideal.d_max());
    let n = m + t + d;
    let quotient = ideal.first_variable_quotient();
    let facets = quotient
        .iter()
        .map(|u| {
            if t >= 1 {
                let mut f: Face = vec![2];
                f.extend(facet_of(u, t - 1, m, d - 1).unwrap().into_iter().map(|v| v + 2));
                f
            } else {
                facet_of(u, 0, m, d - 1).unwrap().into_iter().map(|v| v + 1).collect()
            }
        })
        .collect();
    SimplicialComplex::from_faces_unchecked(n, facets)
}

/// Predicted `Δ_t(U) \ 1`, the facets of the members not divisible by `x_1`.
pub fn predicted_deletion_of_first_vertex(ideal: &OrderIdeal, t: usize) -> SimplicialComplex {
    let (m, d) = (ideal.m(), ideal.d_max());
    let rest = ideal.without_first_variable();
    facets_over(rest.iter(), t, m, d, m + t + d)
}

/// `Δ ≅ Δ_0(U) ∗ (simplex of dimension e)`; `e = -1` means no join factor.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    pub ideal: OrderIdeal,
    pub cone_dim: isize,
}

/// Recover `(U, e)` from a pure shifted complex by inverting polarization on `I_Δ`.
pub fn decompose_shifted(delta: &SimplicialComplex) -> Result<Decomposition, SqueezeError> {
    if !delta.is_pure() {
        return Err(SqueezeError::NotPure);
    }
    if !delta.is_shifted() {
        return Err(SqueezeError::NotShiftedComplex("not closed under index-raising shifts".into()));
    }
    let n = delta.n();
    let sr = algebra::stanley_reisner_ideal(delta);
    if sr.is_zero() {
        return Err(SqueezeError::NotShiftedComplex("Stanley-Reisner ideal is zero".into()));
    }
    let m = sr
        .generators()
        .iter()
        .map(|g| g.indices().iter().enumerate().map(|(k, &i)| i - k).max().unwrap_or(0))
        .max()
        .unwrap_or(0);
    let depolarized = sr.generators().iter().map(|g| {
        let idx: Vec<usize> = g.indices().iter().enumerate().map(|(k, &i)| i - k).collect();
        Monomial::from_indices(m, &idx)
    });
    let ideal = MonomialIdeal::generated_by(m, depolarized)?;
    let u = ideal
        .complement()
        .map_err(|e| SqueezeError::NotShiftedComplex(format!("depolarized ideal has no valid complement: {e}")))?;
    if !u.is_shifted() {
        return Err(SqueezeError::NotShiftedComplex("complement is not shifted".into()));
    }
    let base_n = m + u.d_max();
    if base_n > n {
        return Err(SqueezeError::NotShiftedComplex("vertex count too small for the recovered ideal".into()));
    }
    let rebuilt = build_unchecked(&u, 0).join_simplex(n - base_n);
    if &rebuilt != delta {
        return Err(SqueezeError::NotShiftedComplex("rebuilt complex differs".into()));
    }
    Ok(Decomposition { ideal: u, cone_dim: n as isize - base_n as isize - 1 })
}
