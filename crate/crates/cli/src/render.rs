//! Text rendering: the analysis parameter table and the plaintext dumps.

use std::fmt::Write as _;

use flagcode::analysis::{AnalysisReport, CharacterizationOutcome};
use flagcode::{ConstantDimensionCode, FlagCode, Subspace};

fn yes_no(b: bool) -> &'static str {
    if b {
        "YES"
    } else {
        "NO"
    }
}

fn dims_list(dims: &[usize]) -> String {
    let parts: Vec<String> = dims.iter().map(|d| d.to_string()).collect();
    format!("({})", parts.join(", "))
}

/// Renders the per-dimension parameter table plus verdict, in the layout of
/// the analysis examples: one row per dimension with the "d_S maximum?" and
/// "|C_i| = |C|?" columns.
pub fn render_analysis(report: &AnalysisReport) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "n = {}   type = {}   |C| = {}",
        report.n,
        dims_list(&report.type_dims),
        report.cardinality
    );
    if report.dualized {
        let _ = writeln!(
            out,
            "note: every dimension exceeds n/2; the dual code (type {}) was analyzed",
            dims_list(&report.type_dims)
        );
    }
    let _ = writeln!(
        out,
        "d_f(C) = {}   D = {}   deficit = {}",
        report.min_distance,
        report.max_distance,
        report.max_distance - report.min_distance
    );
    if let Some((a, b)) = report.min_witness {
        let _ = writeln!(out, "minimal pair: flags #{a} and #{b} (sorted order)");
    }
    let tl = report.t_l.map_or("-".to_string(), |t| t.to_string());
    let tr = report.t_r.map_or("-".to_string(), |t| t.to_string());
    let _ = writeln!(
        out,
        "t_L = {}   t_R = {}   distinguished type = {}",
        tl,
        tr,
        dims_list(&report.distinguished_type)
    );
    let collapses = if report.collapse_dims.is_empty() {
        "none".to_string()
    } else {
        report
            .collapse_dims
            .iter()
            .map(|d| d.to_string())
            .collect::<Vec<_>>()
            .join(", ")
    };
    let _ = writeln!(
        out,
        "disjoint: {}   collapses at: {}",
        yes_no(report.disjoint),
        collapses
    );
    let _ = writeln!(out);
    let _ = writeln!(out, " dim | d_S(C_i) | best | d_S maximum? | |C_i| | |C_i| = |C|?");
    let _ = writeln!(out, "-----+----------+------+--------------+-------+-------------");
    for row in &report.per_dimension {
        let _ = writeln!(
            out,
            "{:>4} | {:>8} | {:>4} | {:>12} | {:>5} | {:>12}",
            row.dim,
            row.projected_distance,
            row.max_component_distance,
            yes_no(row.distance_is_max),
            row.projected_size,
            yes_no(row.size_matches),
        );
    }
    let _ = writeln!(out);
    match &report.outcome {
        CharacterizationOutcome::Qodfc => {
            let _ = writeln!(out, "verdict: QODFC (d_f = D - 2)");
        }
        CharacterizationOutcome::DistanceMinusFour => {
            let _ = writeln!(out, "verdict: distance D - 4");
        }
        CharacterizationOutcome::Other { deficit: 0 } => {
            let _ = writeln!(out, "verdict: optimum distance (d_f = D)");
        }
        CharacterizationOutcome::Other { deficit } => {
            let _ = writeln!(out, "verdict: d_f = D - {deficit}");
        }
        CharacterizationOutcome::Undefined { reason } => {
            let _ = writeln!(out, "verdict: undefined (singleton)");
            let _ = writeln!(out, "  {reason}");
        }
    }
    if let Some(cert) = &report.certificate {
        let _ = writeln!(out, "route: {}", cert.route);
        let bound_value = cert.bounds.value.as_deref().unwrap_or("symbolic");
        let compliant = match cert.bounds.compliant {
            Some(true) => "satisfied",
            Some(false) => "VIOLATED",
            None => "not evaluated",
        };
        let _ = writeln!(
            out,
            "bound: {} = {}   ({})",
            cert.bounds.formula, bound_value, compliant
        );
        if let (Some(f), Some(v)) = (
            cert.bounds.printed_statement_formula.as_deref(),
            cert.bounds.printed_statement_value.as_deref(),
        ) {
            let _ = writeln!(out, "bound as printed elsewhere: {f} = {v}");
        }
    }
    out
}

fn render_subspace_rows(out: &mut String, s: &Subspace, spaced: bool) {
    for r in 0..s.dim() {
        let row = s.basis().row(r);
        let parts: Vec<String> = row.iter().map(|e| e.encoding().to_string()).collect();
        let sep = if spaced { " " } else { "" };
        let _ = writeln!(out, "{}", parts.join(sep));
    }
}

/// Plaintext dump of a flag code: each flag prints its subspaces' basis rows
/// in increasing dimension order, one row of digits per line; flags are
/// separated by blank lines.
pub fn render_flag_code_text(code: &FlagCode) -> String {
    let mut out = String::new();
    let spaced = code.field().order() > 9;
    let _ = writeln!(
        out,
        "# field GF({}), n = {}, type = {}, {} flags",
        code.field().order(),
        code.n(),
        dims_list(code.type_vector().dims()),
        code.len()
    );
    for flag in code.flags() {
        let _ = writeln!(out);
        for s in flag.subspaces() {
            render_subspace_rows(&mut out, s, spaced);
        }
    }
    out
}

/// Plaintext dump of a constant dimension code, one basis per block.
pub fn render_cdc_text(code: &ConstantDimensionCode) -> String {
    let mut out = String::new();
    let spaced = code.field().order() > 9;
    let _ = writeln!(
        out,
        "# field GF({}), n = {}, k = {}, {} subspaces",
        code.field().order(),
        code.ambient(),
        code.dim(),
        code.len()
    );
    for s in code.elements() {
        let _ = writeln!(out);
        render_subspace_rows(&mut out, s, spaced);
    }
    out
}
