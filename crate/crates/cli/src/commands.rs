//! Subcommand implementations and the dispatch entry point.

use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use anyhow::{bail, Context, Result};

use flagcode::analysis::analyze;
use flagcode::characterization::{qodfc_cardinality_bound, DisjointnessCase};
use flagcode::constructions::{
    build_flag_variety_line_hyperplane, build_max_cdc_high, build_qodfc,
    build_qodfc_hyperplane_type, build_spread_scaffold, build_sunflower, build_c_ell,
    truncated_partial_spread,
};
use flagcode::json::{cdc_to_json, flag_code_from_json, flag_code_to_json, CdcFile};
use flagcode::{
    enumerate_grassmannian, partial_spread_bound, ConstantDimensionCode, FlagCode,
    SunflowerOutcome, TypeVector,
};

use crate::args::{
    AnalyzeArgs, BoundArgs, CaseName, Cli, Command, ConstructArgs, ConstructionName,
    EnumerateArgs, EnumerationTarget, Format, SuiteName, VerifyArgs,
};
use crate::render::{render_analysis, render_cdc_text, render_flag_code_text};
use crate::verify;

/// Process exit contract: 0 success, 1 verification failure, 2 usage or
/// parse error (the last is produced by returning an error from `run`).
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ExitStatus {
    Success,
    VerificationFailed,
}

impl ExitStatus {
    pub fn code(self) -> u8 {
        match self {
            ExitStatus::Success => 0,
            ExitStatus::VerificationFailed => 1,
        }
    }
}

pub fn run(cli: Cli) -> Result<ExitStatus> {
    match cli.command {
        Command::Construct(args) => cmd_construct(args),
        Command::Analyze(args) => cmd_analyze(args),
        Command::Verify(args) => cmd_verify(args),
        Command::Bound(args) => cmd_bound(args),
        Command::Enumerate(args) => cmd_enumerate(args),
    }
}

fn write_or_print(out: Option<&Path>, payload: &str) -> Result<()> {
    match out {
        Some(path) => {
            fs::write(path, payload)
                .with_context(|| format!("cannot write {}", path.display()))?;
            println!("wrote {}", path.display());
        }
        None => println!("{payload}"),
    }
    Ok(())
}

fn emit_flag_code(args: &ConstructArgs, code: &FlagCode) -> Result<()> {
    let payload = match args.format {
        Format::Json => flag_code_to_json(code)?,
        Format::Text => render_flag_code_text(code),
    };
    write_or_print(args.out.as_deref(), &payload)
}

fn emit_cdc(args: &ConstructArgs, code: &ConstantDimensionCode) -> Result<()> {
    let payload = match args.format {
        Format::Json => cdc_to_json(code)?,
        Format::Text => render_cdc_text(code),
    };
    write_or_print(args.out.as_deref(), &payload)
}

fn print_flag_summary(code: &FlagCode, dualized: bool) -> Result<()> {
    let report = analyze(code)?;
    if dualized {
        println!("note: built through the dual type and dualized back");
    }
    print!("{}", render_analysis(&report));
    Ok(())
}

fn print_cdc_summary(code: &ConstantDimensionCode) -> Result<()> {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "n = {}   k = {}   |C| = {}   d_S(C) = {}",
        code.ambient(),
        code.dim(),
        code.len(),
        code.min_distance()?
    );
    let _ = writeln!(
        out,
        "partial spread: {}   maximum distance: {}",
        if code.is_partial_spread() { "YES" } else { "NO" },
        if code.is_max_distance() { "YES" } else { "NO" },
    );
    if code.len() >= 2 {
        match code.sunflower_center()? {
            SunflowerOutcome::Sunflower { center } => {
                let _ = writeln!(out, "sunflower with a center of dimension {}", center.dim());
            }
            SunflowerOutcome::NotASunflower { .. } => {
                let _ = writeln!(out, "not a sunflower");
            }
        }
    }
    if 2 * code.dim() <= code.ambient() {
        let bound = partial_spread_bound(code.field().order(), code.ambient(), code.dim())?;
        let _ = writeln!(
            out,
            "partial-spread bound: |C| = {} <= {}{}",
            code.len(),
            bound.value,
            if bound.exact { " (exact spread size)" } else { "" }
        );
    }
    print!("{out}");
    Ok(())
}

fn cmd_construct(args: ConstructArgs) -> Result<ExitStatus> {
    let field = args.field.build()?;
    let check = args.check_mode();
    match args.construction {
        ConstructionName::Qodfc => {
            let built = build_qodfc(&field, &args.require_type()?, check)?;
            print_flag_summary(&built.code, built.dualized)?;
            emit_flag_code(&args, &built.code)?;
        }
        ConstructionName::CEll => {
            let ell = args.ell.context("--ell is required for c-ell")?;
            let built = build_c_ell(&field, &args.require_type()?, ell, check)?;
            print_flag_summary(&built.code, built.dualized)?;
            emit_flag_code(&args, &built.code)?;
        }
        ConstructionName::Hyperplane => {
            let built = build_qodfc_hyperplane_type(&field, &args.require_type()?, check)?;
            print_flag_summary(&built.code, built.dualized)?;
            emit_flag_code(&args, &built.code)?;
        }
        ConstructionName::Variety1Nm1 => {
            let n = args.require_n()?;
            let code = build_flag_variety_line_hyperplane(&field, n, args.cap)?;
            print_flag_summary(&code, false)?;
            emit_flag_code(&args, &code)?;
        }
        ConstructionName::Spread => {
            let k = args.k.context("--k is required for spread")?;
            let n = args.n.unwrap_or(2 * k);
            let scaffold = build_spread_scaffold(&field, k, n)?;
            let code = truncated_partial_spread(&scaffold, k)?;
            print_cdc_summary(&code)?;
            emit_cdc(&args, &code)?;
        }
        ConstructionName::Sunflower => {
            let k = args.k.context("--k is required for sunflower")?;
            let j = args.j.context("--j is required for sunflower")?;
            let n = args.require_n()?;
            let scaffold = build_spread_scaffold(&field, k, n)?;
            let code = build_sunflower(&scaffold, j)?;
            print_cdc_summary(&code)?;
            emit_cdc(&args, &code)?;
        }
        ConstructionName::MaxCdc => {
            let k = args.k.context("--k is required for max-cdc")?;
            let j = args.j.context("--j is required for max-cdc")?;
            let n = args.require_n()?;
            let scaffold = build_spread_scaffold(&field, k, n)?;
            let code = build_max_cdc_high(&scaffold, j)?;
            print_cdc_summary(&code)?;
            emit_cdc(&args, &code)?;
        }
    }
    Ok(ExitStatus::Success)
}

fn cmd_analyze(args: AnalyzeArgs) -> Result<ExitStatus> {
    let text = fs::read_to_string(&args.input)
        .with_context(|| format!("cannot read {}", args.input.display()))?;
    let loaded = flag_code_from_json(&text)
        .with_context(|| format!("malformed flag-code file {}", args.input.display()))?;
    if loaded.recanonicalized {
        println!("warning: some stored bases were not in reduced row echelon form and were re-canonicalized");
    }
    let report = analyze(&loaded.code)?;
    print!("{}", render_analysis(&report));

    match &report.certificate {
        Some(cert) => {
            let cert_json = serde_json::to_string_pretty(cert)?;
            if args.format == Format::Json {
                println!("{cert_json}");
            }
            if let Some(path) = &args.out {
                fs::write(path, cert_json)
                    .with_context(|| format!("cannot write {}", path.display()))?;
                println!("wrote {}", path.display());
            }
        }
        None => {
            if args.out.is_some() {
                println!("no certificate emitted: the verdict is undefined for singletons");
            }
        }
    }
    Ok(ExitStatus::Success)
}

fn cmd_verify(args: VerifyArgs) -> Result<ExitStatus> {
    let report = match args.suite {
        SuiteName::PaperExamples => verify::suite_paper_examples()?,
        SuiteName::EquivalenceExhaustive => {
            let q = args.q.unwrap_or(2);
            let n = args.n.unwrap_or(4);
            let dims = args.type_dims.clone().unwrap_or_else(|| vec![1, 2, 3]);
            verify::suite_equivalence(q, n, &dims, args.cap)?
        }
        SuiteName::ConstructionGrid => verify::suite_construction_grid()?,
        SuiteName::Bounds => verify::suite_bounds()?,
        SuiteName::Duality => verify::suite_duality()?,
    };
    print!("{}", report.render());
    if report.passed() {
        Ok(ExitStatus::Success)
    } else {
        Ok(ExitStatus::VerificationFailed)
    }
}

fn cmd_bound(args: BoundArgs) -> Result<ExitStatus> {
    let field = args.field.build()?;
    let ty = TypeVector::new(args.n, args.type_dims.clone()).context("invalid type vector")?;
    let cases: Vec<(DisjointnessCase, &str)> = match args.case {
        Some(CaseName::Disjoint) => vec![(DisjointnessCase::Disjoint, "disjoint")],
        Some(CaseName::Nondisjoint) => vec![(DisjointnessCase::NonDisjoint, "non-disjoint")],
        None => vec![
            (DisjointnessCase::Disjoint, "disjoint"),
            (DisjointnessCase::NonDisjoint, "non-disjoint"),
        ],
    };
    for (case, label) in cases {
        let b = qodfc_cardinality_bound(&ty, field.order(), case);
        match &b.value {
            Some(v) => println!("{label}: |C| <= {v}   [{}]", b.formula),
            None => println!("{label}: {} ({})", b.formula, b.kind),
        }
        if let (Some(f), Some(v)) =
            (b.printed_statement_formula.as_deref(), b.printed_statement_value.as_deref())
        {
            println!("{label} (statement as printed): |C| <= {v}   [{f}]");
        }
    }
    Ok(ExitStatus::Success)
}

fn cmd_enumerate(args: EnumerateArgs) -> Result<ExitStatus> {
    let field = args.field.build()?;
    match args.target {
        EnumerationTarget::Grassmannian => {
            let k = args.k.context("--k is required for grassmannian")?;
            if k > args.n {
                bail!("--k must not exceed --n");
            }
            let subspaces = enumerate_grassmannian(&field, args.n, k, args.cap)?;
            let code = ConstantDimensionCode::new(field, args.n, k, subspaces)?;
            println!("{} subspaces", code.len());
            let payload = match args.format {
                Format::Json => serde_json::to_string_pretty(&CdcFile::from_code(&code))?,
                Format::Text => render_cdc_text(&code),
            };
            write_or_print(args.out.as_deref(), &payload)?;
        }
        EnumerationTarget::Variety1Nm1 => {
            let code = build_flag_variety_line_hyperplane(&field, args.n, args.cap)?;
            println!("{} flags", code.len());
            let payload = match args.format {
                Format::Json => flag_code_to_json(&code)?,
                Format::Text => render_flag_code_text(&code),
            };
            write_or_print(args.out.as_deref(), &payload)?;
        }
    }
    Ok(ExitStatus::Success)
}
