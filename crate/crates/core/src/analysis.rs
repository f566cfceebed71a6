//! Whole-code analysis: per-dimension statistics in the layout of the
//! paper-style parameter tables, plus the routed characterization verdict.

use crate::characterization::{
    check_dminus4, check_qodfc_disjoint, check_qodfc_nondisjoint, Certificate,
};
use crate::error::Result;
use crate::flags::FlagCode;

/// One row per type-vector dimension: the projected subspace code's distance
/// and cardinality against their best possible values.
#[derive(Clone, Debug, PartialEq)]
pub struct DimensionReport {
    pub dim: usize,
    pub projected_distance: usize,
    pub max_component_distance: usize,
    /// "d_S(C_i) is maximum" column.
    pub distance_is_max: bool,
    pub projected_size: usize,
    /// "|C_i| = |C|" column.
    pub size_matches: bool,
}

#[derive(Clone, Debug, PartialEq)]
pub enum CharacterizationOutcome {
    /// d_f(C) = D - 2 and the structural checker agreed.
    Qodfc,
    /// d_f(C) = D - 4 and the structural checker agreed.
    DistanceMinusFour,
    /// Any other distance; `deficit` is D - d_f(C).
    Other { deficit: usize },
    /// Singleton codes, whose distance convention leaves the predicates
    /// undefined.
    Undefined { reason: String },
}

#[derive(Clone, Debug, PartialEq)]
pub struct AnalysisReport {
    /// True when the code was replaced by its dual before analysis because
    /// every dimension exceeded n/2.
    pub dualized: bool,
    pub n: usize,
    pub type_dims: Vec<usize>,
    pub cardinality: usize,
    pub min_distance: usize,
    pub max_distance: usize,
    pub min_witness: Option<(usize, usize)>,
    pub per_dimension: Vec<DimensionReport>,
    pub disjoint: bool,
    pub collapse_dims: Vec<usize>,
    pub t_l: Option<usize>,
    pub t_r: Option<usize>,
    pub distinguished_type: Vec<usize>,
    pub outcome: CharacterizationOutcome,
    /// Routed certificate; absent for singletons.
    pub certificate: Option<Certificate>,
}

/// Analyzes a flag code. Types with every dimension above n/2 are dualized
/// first (and the report says so); distances and cardinalities are invariant
/// under that move.
pub fn analyze(code: &FlagCode) -> Result<AnalysisReport> {
    let ty = code.type_vector();
    if ty.lr_indices().l.is_none() && ty.r() > 0 {
        let dual = code.dual();
        let mut report = analyze_inner(&dual)?;
        report.dualized = true;
        return Ok(report);
    }
    analyze_inner(code)
}

fn analyze_inner(code: &FlagCode) -> Result<AnalysisReport> {
    let ty = code.type_vector().clone();
    let report = code.disjointness_report()?;
    let (min_distance, min_witness) = code.min_distance_witness()?;
    let max_distance = code.max_distance();

    let mut per_dimension = Vec::with_capacity(ty.r());
    for i in 0..ty.r() {
        let proj = code.projected_subspace_code(i)?;
        let projected_distance = proj.min_distance()?;
        let max_component_distance = ty.max_component_distance(i);
        per_dimension.push(DimensionReport {
            dim: ty.dims()[i],
            projected_distance,
            max_component_distance,
            distance_is_max: projected_distance == max_component_distance,
            projected_size: proj.len(),
            size_matches: proj.len() == code.len(),
        });
    }

    let lr = ty.lr_indices();
    let (outcome, certificate) = if code.len() < 2 {
        (
            CharacterizationOutcome::Undefined {
                reason: "singleton code: the distance convention d_f = 0 leaves the predicate undefined"
                    .to_string(),
            },
            None,
        )
    } else {
        let deficit = max_distance - min_distance;
        let qodfc_cert = if report.is_disjoint {
            check_qodfc_disjoint(code)?
        } else {
            check_qodfc_nondisjoint(code)?
        };
        match deficit {
            2 => {
                let outcome = if qodfc_cert.verdict {
                    CharacterizationOutcome::Qodfc
                } else {
                    CharacterizationOutcome::Other { deficit }
                };
                (outcome, Some(qodfc_cert))
            }
            4 => {
                let cert = check_dminus4(code)?;
                let outcome = if cert.verdict {
                    CharacterizationOutcome::DistanceMinusFour
                } else {
                    CharacterizationOutcome::Other { deficit }
                };
                (outcome, Some(cert))
            }
            _ => (CharacterizationOutcome::Other { deficit }, Some(qodfc_cert)),
        }
    };

    Ok(AnalysisReport {
        dualized: false,
        n: ty.n(),
        type_dims: ty.dims().to_vec(),
        cardinality: code.len(),
        min_distance,
        max_distance,
        min_witness,
        per_dimension,
        disjoint: report.is_disjoint,
        collapse_dims: report.collapse_dims,
        t_l: lr.l.map(|i| ty.dims()[i]),
        t_r: lr.r.map(|i| ty.dims()[i]),
        distinguished_type: ty.distinguished_type(),
        outcome,
        certificate,
    })
}

impl AnalysisReport {
    /// The "d_S(C_i) is maximum" pattern, one entry per dimension.
    pub fn max_pattern(&self) -> Vec<bool> {
        self.per_dimension.iter().map(|d| d.distance_is_max).collect()
    }

    /// The "|C_i| = |C|" pattern, one entry per dimension.
    pub fn size_pattern(&self) -> Vec<bool> {
        self.per_dimension.iter().map(|d| d.size_matches).collect()
    }
}
