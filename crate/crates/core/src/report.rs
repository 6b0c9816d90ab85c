//! Analysis and profile reports, in JSON or CSV.

use serde::Serialize;

use crate::complex::{BallSphere, ComplexError, SimplicialComplex, VdOptions};
use crate::monomial::OrderIdeal;
use crate::par::Exec;
use crate::rational::Rational;
use crate::squeeze::{self, SqueezeError};

/// Search budget used for vertex decomposability inside reports.
pub const DEFAULT_VD_BUDGET: usize = 200_000;

/// Summary of a complex; fields that need purity are absent for non-pure input.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AnalysisReport {
    pub n: usize,
    pub dimension: isize,
    pub pure: bool,
    pub f_vector: Vec<usize>,
    pub h_vector: Option<Vec<i64>>,
    pub strongly_connected: Option<bool>,
    pub pseudomanifold: Option<bool>,
    /// `None` when the search budget ran out.
    pub vertex_decomposable: Option<bool>,
    pub shedding: Vec<usize>,
    pub ball_sphere: Option<BallSphere>,
    pub singularity_index: Option<Rational>,
}

pub fn analyze(delta: &SimplicialComplex, vd_budget: usize) -> Result<AnalysisReport, ComplexError> {
    let pure = delta.is_pure();
    let mut report = AnalysisReport {
        n: delta.n(),
        dimension: delta.dim(),
        pure,
        f_vector: delta.f_vector(),
        h_vector: None,
        strongly_connected: None,
        pseudomanifold: None,
        vertex_decomposable: None,
        shedding: Vec::new(),
        ball_sphere: None,
        singularity_index: None,
    };
    if !pure || delta.dim() < 0 {
        return Ok(report);
    }
    report.h_vector = Some(delta.h_vector()?);
    report.strongly_connected = Some(delta.is_strongly_connected()?);
    report.pseudomanifold = Some(delta.is_pseudomanifold()?);
    let options = VdOptions { budget: vd_budget, ..VdOptions::strict() };
    match delta.vertex_decomposable(&options) {
        Ok(outcome) => {
            report.vertex_decomposable = Some(outcome.decomposable);
            report.shedding = outcome.shedding;
        }
        Err(ComplexError::BudgetExceeded(_)) => {}
        Err(e) => return Err(e),
    }
    report.ball_sphere = Some(delta.classify_ball_sphere(vd_budget)?.verdict);
    report.singularity_index = match delta.singularity_index() {
        Ok(d) => Some(d),
        Err(ComplexError::NoRidges(_)) => None,
        Err(e) => return Err(e),
    };
    Ok(report)
}

fn opt<T: ToString>(v: &Option<T>) -> String {
    v.as_ref().map_or_else(|| "NA".to_string(), T::to_string)
}

fn joined<T: ToString>(v: &[T]) -> String {
    v.iter().map(T::to_string).collect::<Vec<_>>().join(";")
}

impl AnalysisReport {
    /// Header plus one row; vectors are `;`-separated, absent values are `NA`.
    pub fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record([
            "n",
            "dimension",
            "pure",
            "f_vector",
            "h_vector",
            "strongly_connected",
            "pseudomanifold",
            "vertex_decomposable",
            "shedding",
            "ball_sphere",
            "singularity_index",
        ])
        .unwrap();
        w.write_record([
            self.n.to_string(),
            self.dimension.to_string(),
            self.pure.to_string(),
            joined(&self.f_vector),
            self.h_vector.as_deref().map_or("NA".into(), joined),
            opt(&self.strongly_connected),
            opt(&self.pseudomanifold),
            opt(&self.vertex_decomposable),
            joined(&self.shedding),
            opt(&self.ball_sphere),
            opt(&self.singularity_index),
        ])
        .unwrap();
        String::from_utf8(w.into_inner().unwrap()).unwrap()
    }
}

/// One row of a singularity-index profile.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ProfileRow {
    pub t: usize,
    /// `None` for zero-dimensional complexes.
    pub singularity_index: Option<Rational>,
    pub pseudomanifold: bool,
    pub ball_sphere: BallSphere,
}

/// `D(Δ_t(U))` with pseudomanifold and ball/sphere verdicts for `t = 0..=d_max(U)`.
pub fn profile(u: &OrderIdeal, exec: Exec, vd_budget: usize) -> Result<Vec<ProfileRow>, SqueezeError> {
    let indices = squeeze::sing_index_profile_with(u, exec)?;
    let rows: Vec<(usize, Option<Rational>)> = indices.into_iter().enumerate().collect();
    exec.try_map_collect(rows, |(t, singularity_index)| {
        let delta = squeeze::build(u, t)?;
        Ok(ProfileRow {
            t,
            singularity_index,
            pseudomanifold: delta.is_pseudomanifold()?,
            ball_sphere: delta.classify_ball_sphere(vd_budget)?.verdict,
        })
    })
}

/// Columns `t, numerator, denominator, pseudomanifold, ball_sphere`.
pub fn profile_csv(rows: &[ProfileRow]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["t", "numerator", "denominator", "pseudomanifold", "ball_sphere"]).unwrap();
    for r in rows {
        let (num, den) = match &r.singularity_index {
            Some(d) => (d.numer().to_string(), d.denom().to_string()),
            None => ("NA".into(), "NA".into()),
        };
        w.write_record([r.t.to_string(), num, den, r.pseudomanifold.to_string(), r.ball_sphere.to_string()])
            .unwrap();
    }
    String::from_utf8(w.into_inner().unwrap()).unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn path_report() {
        let path = SimplicialComplex::new(4, vec![vec![1, 2], vec![2, 3], vec![3, 4]]).unwrap();
        let r = analyze(&path, DEFAULT_VD_BUDGET).unwrap();
        assert_eq!(r.pseudomanifold, Some(true));
        assert_eq!(r.ball_sphere, Some(BallSphere::Ball));
        assert_eq!(r.singularity_index, Some(Rational::zero()));
        let json = serde_json::to_value(&r).unwrap();
        assert_eq!(json["singularity_index"], "0/1");
        let csv = r.to_csv();
        assert!(csv.lines().nth(1).unwrap().ends_with("ball,0/1"));
    }

    #[test]
    fn non_pure_report() {
        let mixed = SimplicialComplex::new(3, vec![vec![1, 2], vec![3]]).unwrap();
        let r = analyze(&mixed, DEFAULT_VD_BUDGET).unwrap();
        assert!(!r.pure);
        assert_eq!(r.h_vector, None);
        assert!(r.to_csv().contains("NA"));
    }

    #[test]
    fn profile_rows() {
        let rows = profile(&OrderIdeal::maximal(2, 2), Exec::Sequential, DEFAULT_VD_BUDGET).unwrap();
        let csv = profile_csv(&rows);
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(lines[0], "t,numerator,denominator,pseudomanifold,ball_sphere");
        assert_eq!(lines[1], "0,1,1,false,neither");
        assert_eq!(lines[2], "1,1,5,false,neither");
        assert_eq!(lines[3], "2,0,1,true,ball");
    }
}
