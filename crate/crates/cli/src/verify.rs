//! The named verification suites behind `flagcode verify`. Each suite runs a
//! list of checks and reports one pass/fail line per item; hard errors
//! (unbuildable inputs) abort the suite instead of failing an item.

use anyhow::{Context, Result};
use serde_json::json;

use flagcode::analysis::analyze;
use flagcode::characterization::{
    check_dminus4, check_qodfc_disjoint, check_qodfc_nondisjoint, dminus4_oracle,
    nonmax_propagation_check, qodfc_cardinality_bound, qodfc_oracle, DisjointnessCase,
};
use flagcode::constructions::{
    build_flag_variety_line_hyperplane, build_max_cdc_high, build_qodfc,
    build_qodfc_hyperplane_type, build_spread_scaffold, build_sunflower, build_c_ell,
    enumerate_flag_variety, flag_variety_count, truncated_partial_spread, CheckMode,
};
use flagcode::{
    make_field, partial_spread_bound, FieldSpec, Flag, FlagCode, SunflowerOutcome, TypeVector,
};

use crate::fixtures;
use crate::sampling::Rng;

#[derive(Clone, Debug)]
pub struct SuiteItem {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

#[derive(Clone, Debug)]
pub struct SuiteReport {
    pub suite: String,
    pub items: Vec<SuiteItem>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.items.iter().all(|i| i.pass)
    }

    /// One pass/fail line per item, plus a machine-readable JSON summary.
    pub fn render(&self) -> String {
        let mut out = String::new();
        for item in &self.items {
            let status = if item.pass { "PASS" } else { "FAIL" };
            out.push_str(&format!("{status}  {}", item.name));
            if !item.detail.is_empty() {
                out.push_str(&format!("  [{}]", item.detail));
            }
            out.push('\n');
        }
        let summary = json!({
            "suite": self.suite,
            "total": self.items.len(),
            "passed": self.items.iter().filter(|i| i.pass).count(),
            "failed": self.items.iter().filter(|i| !i.pass).count(),
            "ok": self.passed(),
        });
        out.push_str(&summary.to_string());
        out.push('\n');
        out
    }
}

fn push(items: &mut Vec<SuiteItem>, name: impl Into<String>, pass: bool, detail: impl Into<String>) {
    items.push(SuiteItem { name: name.into(), pass, detail: detail.into() });
}

/// The worked reference codes: distances, projected parameters, the
/// distinguished-type table at n = 10, and the analysis table of the n = 6
/// sub-codes.
pub fn suite_paper_examples() -> Result<SuiteReport> {
    let mut items = Vec::new();

    for q in [2u64, 3] {
        let field = make_field(q, 1, None)?;
        let mut all_ok = true;
        let mut detail = String::new();
        let expected = [
            (vec![0usize, 1], [2usize, 2, 4]),
            (vec![0, 2], [2, 4, 2]),
            (vec![0, 1, 2], [2, 2, 2]),
        ];
        for (indices, triple) in &expected {
            let code = fixtures::reference_code_n5(&field, indices);
            let d = code.min_distance()?;
            let dmax = code.max_distance();
            let per: Vec<usize> = (0..3)
                .map(|i| code.projected_subspace_code(i).unwrap().min_distance().unwrap())
                .collect();
            let proj23 = code.projected_flag_code(&[1, 2])?.min_distance()?;
            let ok = d == 8 && dmax == 10 && per == triple.to_vec() && proj23 == 6;
            if !ok {
                all_ok = false;
                detail = format!(
                    "indices {indices:?}: d_f={d}, D={dmax}, projected={per:?}, proj(2,3)={proj23}"
                );
            }
        }
        push(
            &mut items,
            format!("n=5 type (1,2,3) family at q={q}: distances 8 = D-2, projected triples, (2,3)-projections at 6"),
            all_ok,
            detail,
        );
    }

    {
        let field = make_field(2, 1, None)?;
        let flags = fixtures::reference_flags_n6(&field);
        let mut all_ok = true;
        let mut detail = String::new();
        for ((a, b), components, total) in fixtures::reference_pair_distances_n6() {
            let got = flags[a].distance_components(&flags[b])?;
            if got != components.to_vec() || got.iter().sum::<usize>() != total {
                all_ok = false;
                detail = format!("pair ({a},{b}): got {got:?}");
            }
        }
        let code = fixtures::reference_code_n6(&field, &[0, 1, 2, 3, 4]);
        if code.min_distance()? != 8 || code.max_distance() != 12 {
            all_ok = false;
            detail = format!("five-flag code: d_f={}", code.min_distance()?);
        }
        push(
            &mut items,
            "n=6 type (1,2,4,5) family: all ten pairwise distances and breakdowns, minimum 8 = D-4",
            all_ok,
            detail,
        );
    }

    {
        let rows: &[(&[usize], Option<usize>, Option<usize>, &[usize])] = &[
            (&[1, 2, 4, 6, 8], Some(4), Some(6), &[2, 4, 6, 8]),
            (&[1, 2, 4, 6], Some(4), Some(6), &[2, 4, 6]),
            (&[1, 2, 4], Some(4), None, &[2, 4]),
            (&[1, 2, 5, 6, 8], Some(5), Some(5), &[2, 5, 6]),
            (&[5, 6, 8], Some(5), Some(5), &[5, 6]),
            (&[6, 7, 9], None, Some(6), &[6, 7]),
        ];
        let mut all_ok = true;
        let mut detail = String::new();
        for &(dims, t_l, t_r, distinguished) in rows {
            let ty = TypeVector::new(10, dims.to_vec())?;
            let lr = ty.lr_indices();
            let got_l = lr.l.map(|i| dims[i]);
            let got_r = lr.r.map(|i| dims[i]);
            let got_d = ty.distinguished_type();
            if got_l != t_l || got_r != t_r || got_d != distinguished {
                all_ok = false;
                detail = format!("type {dims:?}: t_L={got_l:?}, t_R={got_r:?}, distinguished={got_d:?}");
            }
        }
        push(
            &mut items,
            "distinguished-type table at n=10: t_L, t_R and distinguished types for all six rows",
            all_ok,
            detail,
        );
    }

    {
        let field = make_field(2, 1, None)?;
        let mut all_ok = true;
        let mut detail = String::new();
        for (label, indices, max_pattern, size_pattern) in fixtures::reference_table_n6() {
            let code = fixtures::reference_code_n6(&field, &indices);
            let report = analyze(&code)?;
            if report.max_pattern() != max_pattern.to_vec()
                || report.size_pattern() != size_pattern.to_vec()
            {
                all_ok = false;
                detail = format!(
                    "{label}: max {:?}, size {:?}",
                    report.max_pattern(),
                    report.size_pattern()
                );
            }
        }
        push(
            &mut items,
            "analysis table for the seven n=6 sub-codes: every d_S-maximum? and |C_i|=|C|? entry",
            all_ok,
            detail,
        );
    }

    Ok(SuiteReport { suite: "paper-examples".into(), items })
}

/// Exhaustive oracle/checker agreement over every two-element code of a flag
/// variety, plus the quantifier sweep on type (1, n-1).
pub fn suite_equivalence(
    q: u64,
    n: usize,
    dims: &[usize],
    cap: usize,
) -> Result<SuiteReport> {
    let mut items = Vec::new();
    let field = make_field(q, 1, None)?;
    let ty = TypeVector::new(n, dims.to_vec())?;

    let flags = enumerate_flag_variety(&field, &ty, cap)
        .context("flag variety enumeration exceeded the cap")?;
    let expected = flag_variety_count(field.order(), &ty);
    push(
        &mut items,
        format!("flag variety of type {dims:?} in GF({q})^{n} enumerates completely"),
        expected.to_string() == flags.len().to_string(),
        format!("{} flags", flags.len()),
    );

    let (qodfc_mismatches, dminus4_mismatches, pairs) =
        equivalence_sweep(&field, &ty, &flags)?;
    push(
        &mut items,
        format!("QODFC checker agrees with the distance oracle on all {pairs} two-element codes"),
        qodfc_mismatches.is_empty(),
        mismatch_detail(&qodfc_mismatches),
    );
    push(
        &mut items,
        format!("D-4 checker agrees with the distance oracle on all {pairs} two-element codes"),
        dminus4_mismatches.is_empty(),
        mismatch_detail(&dminus4_mismatches),
    );

    // Quantifier sweep at type (1, n-1): the "for some" reading of the
    // third non-disjoint clause is the one the oracle supports; codes
    // collapsing at exactly one of the two dimensions separate the
    // readings.
    {
        let field = make_field(2, 1, None)?;
        let ty = TypeVector::new(3, vec![1, 2])?;
        let flags = enumerate_flag_variety(&field, &ty, 1_000)?;
        let mut mismatches = Vec::new();
        let mut separating = 0usize;
        let mut pairs = 0usize;
        for i in 0..flags.len() {
            for j in i + 1..flags.len() {
                pairs += 1;
                let code = FlagCode::new(
                    field.clone(),
                    ty.clone(),
                    vec![flags[i].clone(), flags[j].clone()],
                )?;
                let oracle = qodfc_oracle(&code)?;
                let report = code.disjointness_report()?;
                let checker = if report.is_disjoint {
                    check_qodfc_disjoint(&code)?.verdict
                } else {
                    check_qodfc_nondisjoint(&code)?.verdict
                };
                if oracle != checker {
                    mismatches.push((i, j));
                }
                let small = report
                    .projected_sizes
                    .iter()
                    .filter(|&&s| s < code.len())
                    .count();
                if small == 1 && oracle {
                    // QODFC satisfying "some" but not "all".
                    separating += 1;
                }
            }
        }
        push(
            &mut items,
            format!(
                "type (1,2) in GF(2)^3 settles the third-clause quantifier: \"for some\" agrees on all {pairs} codes"
            ),
            mismatches.is_empty() && separating > 0,
            format!(
                "{separating} QODFCs collapse at exactly one dimension, so the \"for all\" reading fails on them"
            ),
        );
    }

    Ok(SuiteReport { suite: "equivalence-exhaustive".into(), items })
}

fn mismatch_detail(mismatches: &[(usize, usize)]) -> String {
    if mismatches.is_empty() {
        "0 mismatches".into()
    } else {
        format!("{} mismatches, first at pair {:?}", mismatches.len(), mismatches[0])
    }
}

/// Runs both oracle/checker comparisons over all two-element codes.
pub fn equivalence_sweep(
    field: &FieldSpec,
    ty: &TypeVector,
    flags: &[Flag],
) -> Result<(Vec<(usize, usize)>, Vec<(usize, usize)>, usize)> {
    let mut qodfc_mismatches = Vec::new();
    let mut dminus4_mismatches = Vec::new();
    let mut pairs = 0usize;
    for i in 0..flags.len() {
        for j in i + 1..flags.len() {
            pairs += 1;
            let code = FlagCode::new(
                field.clone(),
                ty.clone(),
                vec![flags[i].clone(), flags[j].clone()],
            )?;
            let report = code.disjointness_report()?;
            let qodfc_check = if report.is_disjoint {
                check_qodfc_disjoint(&code)?.verdict
            } else {
                check_qodfc_nondisjoint(&code)?.verdict
            };
            if qodfc_check != qodfc_oracle(&code)? {
                qodfc_mismatches.push((i, j));
            }
            if check_dminus4(&code)?.verdict != dminus4_oracle(&code)? {
                dminus4_mismatches.push((i, j));
            }
        }
    }
    Ok((qodfc_mismatches, dminus4_mismatches, pairs))
}

/// One cell of the construction grid: a field size, a spread dimension and
/// the type vectors exercised on GF(q)^n for n in {2k+1, 2k+2}.
#[derive(Clone, Debug)]
pub struct GridCell {
    pub q: u64,
    pub k: usize,
    pub n: usize,
    pub types: Vec<Vec<usize>>,
}

/// The (q, k) grid with the full type and three sub-types per cell; even
/// cells include a type containing n/2.
pub fn construction_grid() -> Vec<GridCell> {
    let mut cells = Vec::new();
    for (q, k) in [(2u64, 2usize), (2, 3), (3, 2)] {
        for n in [2 * k + 1, 2 * k + 2] {
            let full: Vec<usize> = (1..n).collect();
            let types: Vec<Vec<usize>> = match n {
                5 => vec![full, vec![1, 2, 3], vec![2, 3], vec![2, 3, 4]],
                6 => vec![full, vec![1, 3, 5], vec![2, 4], vec![1, 2, 4]],
                7 => vec![full, vec![1, 2, 3], vec![2, 3, 5], vec![3, 4]],
                8 => vec![full, vec![2, 4, 6], vec![1, 3, 5, 7], vec![2, 3, 6]],
                _ => vec![full],
            };
            cells.push(GridCell { q, k, n, types });
        }
    }
    cells
}

/// Builds every grid cell and verifies all construction contracts: sizes,
/// distances, disjoint certificates, the C(l) distance law, the sunflower
/// and maximum-distance predicates, the non-disjoint builders and the
/// (1, n-1) variety.
pub fn suite_construction_grid() -> Result<SuiteReport> {
    let mut items = Vec::new();

    for cell in construction_grid() {
        let field = make_field(cell.q, 1, None)?;
        let expected_size = (cell.q as usize).pow(cell.k as u32) + 1;

        let scaffold = build_spread_scaffold(&field, cell.k, cell.n)?;
        let spread = truncated_partial_spread(&scaffold, cell.k)?;
        let mut scaffold_ok = spread.is_partial_spread() && spread.len() == expected_size;
        for j in 1..cell.k {
            scaffold_ok &= truncated_partial_spread(&scaffold, j)?.is_partial_spread();
        }
        let mut detail = String::new();
        for j in 1..=cell.k.min((cell.n - 1) / 2) {
            if 2 * (j + 1) > cell.n {
                continue;
            }
            let sunflower = build_sunflower(&scaffold, j)?;
            let center_ok = match sunflower.sunflower_center()? {
                SunflowerOutcome::Sunflower { center } => Some(center) == scaffold.u_line(),
                SunflowerOutcome::NotASunflower { .. } => false,
            };
            let quotient_ok =
                sunflower.sunflower_quotient_check(&scaffold.u_line().unwrap())?;
            let d_ok = sunflower.min_distance()? == 2 * j;
            if !(center_ok && quotient_ok && d_ok) {
                scaffold_ok = false;
                detail = format!("sunflower j={j} failed");
            }
        }
        for j in 1..=cell.k {
            let high = build_max_cdc_high(&scaffold, j)?;
            if !high.is_max_distance() || high.len() != expected_size {
                scaffold_ok = false;
                detail = format!("max-distance code j={j} failed");
            }
        }
        push(
            &mut items,
            format!(
                "scaffold q={} k={} n={}: spread, truncations, sunflowers and high codes",
                cell.q, cell.k, cell.n
            ),
            scaffold_ok,
            detail,
        );

        for dims in &cell.types {
            let ty = TypeVector::new(cell.n, dims.clone())?;
            let built = build_qodfc(&field, &ty, CheckMode::Never)?;
            let size_ok = built.code.len() == expected_size;
            let oracle_ok = qodfc_oracle(&built.code)?;
            let cert = check_qodfc_disjoint(&built.code)?;
            push(
                &mut items,
                format!(
                    "qodfc q={} n={} type {:?}: size q^k+1, oracle D-2, disjoint certificate",
                    cell.q, cell.n, dims
                ),
                size_ok && oracle_ok && cert.verdict,
                format!(
                    "|C|={}, d_f={}, route {}",
                    built.code.len(),
                    built.code.min_distance()?,
                    cert.route
                ),
            );

            // Exactly one projected code misses maximum distance, at t_L.
            let lr = ty.lr_indices();
            let report = analyze(&built.code)?;
            let non_max: Vec<usize> = report
                .per_dimension
                .iter()
                .filter(|d| !d.distance_is_max)
                .map(|d| d.dim)
                .collect();
            let expected_dim = lr.l.map(|l| ty.dims()[l]);
            push(
                &mut items,
                format!(
                    "qodfc q={} n={} type {:?}: exactly one non-maximum projected code, at t_L",
                    cell.q, cell.n, dims
                ),
                non_max.len() == 1 && Some(non_max[0]) == expected_dim,
                format!("non-maximum at {non_max:?}, t_L = {expected_dim:?}"),
            );

            let l = lr.l.expect("grid types keep a dimension at or below n/2");
            let mut ell_ok = true;
            let mut ell_detail = String::new();
            for ell in 1..=l + 1 {
                let built_ell = build_c_ell(&field, &ty, ell, CheckMode::Never)?;
                let want = ty.max_flag_distance() - 2 * ell;
                let got = built_ell.code.min_distance()?;
                if got != want || built_ell.code.len() != expected_size {
                    ell_ok = false;
                    ell_detail = format!("l={ell}: d_f={got}, want {want}");
                }
                if ell == 1 && built_ell.code != built_qodfc_code(&field, &ty)? {
                    ell_ok = false;
                    ell_detail = "C(1) differs from the QODFC build".into();
                }
            }
            push(
                &mut items,
                format!(
                    "c-ell q={} n={} type {:?}: distance law D-2l for every l in [1, {}]",
                    cell.q, cell.n, dims, l + 1
                ),
                ell_ok,
                ell_detail,
            );
        }
    }

    // Non-disjoint constructions.
    for (q, n, dims) in [
        (2u64, 6usize, vec![2usize, 5]),
        (2, 5, vec![1, 2, 4]),
        (3, 5, vec![2, 4]),
    ] {
        let field = make_field(q, 1, None)?;
        let ty = TypeVector::new(n, dims.clone())?;
        let built = build_qodfc_hyperplane_type(&field, &ty, CheckMode::Never)?;
        let code = &built.code;
        let expected_size = (q as usize).pow(ty.dims()[ty.r() - 2] as u32) + 1;
        let d = code.min_distance()?;
        let top = code.projected_subspace_code(ty.r() - 1)?;
        let cert = check_qodfc_nondisjoint(code)?;
        push(
            &mut items,
            format!("hyperplane q={q} n={n} type {dims:?}: oracle D-2, top collapse, certificate"),
            d + 2 == ty.max_flag_distance()
                && top.len() < code.len()
                && code.len() == expected_size
                && cert.verdict,
            format!("|C|={}, d_f={d}, |C_r|={}, route {}", code.len(), top.len(), cert.route),
        );
    }

    {
        let field = make_field(2, 1, None)?;
        let code = build_flag_variety_line_hyperplane(&field, 3, 10_000)?;
        let cert = check_qodfc_nondisjoint(&code)?;
        push(
            &mut items,
            "variety-1-nm1 q=2 n=3: 21 flags at distance 2, certificate via the (1, n-1) clause",
            code.len() == 21 && code.min_distance()? == 2 && cert.verdict,
            format!("|C|={}, d_f={}", code.len(), code.min_distance()?),
        );
    }

    Ok(SuiteReport { suite: "construction-grid".into(), items })
}

fn built_qodfc_code(field: &FieldSpec, ty: &TypeVector) -> Result<FlagCode> {
    Ok(build_qodfc(field, ty, CheckMode::Never)?.code)
}

/// Cardinality bounds: the two closed-form reference values, compliance of
/// every constructed code, and the partial-spread bound spot values.
pub fn suite_bounds() -> Result<SuiteReport> {
    let mut items = Vec::new();

    {
        let ty = TypeVector::new(10, vec![2, 4, 6, 8])?;
        let b = qodfc_cardinality_bound(&ty, 2, DisjointnessCase::Disjoint);
        push(
            &mut items,
            "disjoint bound for type (2,4,6,8), n=10, q=2 evaluates to 341",
            b.value.as_deref() == Some("341"),
            format!("{} = {:?}", b.formula, b.value),
        );
    }
    {
        let ty = TypeVector::new(3, vec![1, 2])?;
        let b = qodfc_cardinality_bound(&ty, 2, DisjointnessCase::NonDisjoint);
        push(
            &mut items,
            "variety bound for type (1,2), n=3, q=2 evaluates to 21",
            b.value.as_deref() == Some("21"),
            format!("{} = {:?}", b.formula, b.value),
        );
    }
    {
        let checks = [
            (2u32, 4usize, 2usize, "5", true),
            (2, 5, 2, "10", false),
            (2, 6, 6, "1", true),
        ];
        let mut ok = true;
        let mut detail = String::new();
        for (q, n, k, want, exact) in checks {
            let b = partial_spread_bound(q, n, k)?;
            if b.value.to_string() != want || b.exact != exact {
                ok = false;
                detail = format!("({q},{n},{k}) gave {}", b.value);
            }
        }
        push(&mut items, "partial-spread bound spot values", ok, detail);
    }

    for cell in construction_grid() {
        let field = make_field(cell.q, 1, None)?;
        let mut ok = true;
        let mut detail = String::new();
        for dims in &cell.types {
            let ty = TypeVector::new(cell.n, dims.clone())?;
            let built = build_qodfc(&field, &ty, CheckMode::Never)?;
            let cert = check_qodfc_disjoint(&built.code)?;
            if cert.bounds.compliant == Some(false) {
                ok = false;
                detail = format!("type {dims:?} violates {}", cert.bounds.formula);
            }
        }
        push(
            &mut items,
            format!("every constructed code at q={} n={} respects its bound", cell.q, cell.n),
            ok,
            detail,
        );
    }

    {
        let field = make_field(2, 1, None)?;
        let code = build_flag_variety_line_hyperplane(&field, 3, 10_000)?;
        let cert = check_qodfc_nondisjoint(&code)?;
        push(
            &mut items,
            "the (1,2) variety on GF(2)^3 meets its bound with equality",
            cert.bounds.value.as_deref() == Some("21") && cert.bounds.compliant == Some(true),
            format!("|C| = {}", code.len()),
        );
    }

    Ok(SuiteReport { suite: "bounds".into(), items })
}

/// Duality invariants on deterministic pseudo-random codes: cardinality and
/// distance preservation, double duals, componentwise isometry and inclusion
/// reversal.
pub fn suite_duality() -> Result<SuiteReport> {
    let mut items = Vec::new();
    let mut rng = Rng::new(0x5eed_f1a6);

    let mut code_ok = true;
    let mut detail = String::new();
    for trial in 0..100 {
        let q = [2u64, 3][rng.below(2)];
        let n = 4 + rng.below(3);
        let field = make_field(q, 1, None)?;
        let ty = rng.type_vector(n);
        let size = 2 + rng.below(3);
        let code = rng.flag_code(&field, &ty, size);
        let dual = code.dual();
        let same = dual.len() == code.len()
            && dual.min_distance()? == code.min_distance()?
            && dual.dual() == code
            && dual.type_vector() == &ty.dual();
        if !same {
            code_ok = false;
            detail = format!("trial {trial}: q={q}, n={n}, type {:?}", ty.dims());
        }
    }
    push(
        &mut items,
        "100 pseudo-random flag codes: |C| and d_f preserved, double dual is the identity",
        code_ok,
        detail,
    );

    let mut pair_ok = true;
    let mut detail = String::new();
    for trial in 0..200 {
        let q = [2u64, 3][rng.below(2)];
        let n = 4 + rng.below(3);
        let field = make_field(q, 1, None)?;
        let ty = rng.type_vector(n);
        let a = rng.flag(&field, &ty);
        let b = rng.flag(&field, &ty);
        if a.distance(&b)? != a.dual().distance(&b.dual())? {
            pair_ok = false;
            detail = format!("trial {trial}");
        }
    }
    push(
        &mut items,
        "200 pseudo-random flag pairs: componentwise distance preserved under dualization",
        pair_ok,
        detail,
    );

    let mut incl_ok = true;
    let mut detail = String::new();
    for trial in 0..200 {
        let q = [2u64, 3][rng.below(2)];
        let n = 3 + rng.below(4);
        let field = make_field(q, 1, None)?;
        let small_dim = rng.below(n);
        let big_dim = small_dim + rng.below(n - small_dim + 1);
        let big = rng.subspace(&field, n, big_dim);
        // A random subspace of `big`, from random combinations of its basis.
        let rows: Vec<Vec<flagcode::FieldElement>> = (0..small_dim)
            .map(|_| {
                let coefficients = rng.vector(&field, big_dim);
                let mut v = vec![flagcode::FieldElement::ZERO; n];
                for (c, r) in coefficients.iter().zip(0..big_dim) {
                    for (slot, &entry) in v.iter_mut().zip(big.basis().row(r)) {
                        *slot = field.add(*slot, field.mul(*c, entry));
                    }
                }
                v
            })
            .collect();
        let small = flagcode::Subspace::from_rows(&field, n, &rows)?;
        let contained = big.contains(&small)?
            && small.orthogonal_complement().contains(&big.orthogonal_complement())?;
        let isometry =
            big.distance(&small)? == big.orthogonal_complement().distance(&small.orthogonal_complement())?;
        if !contained || !isometry {
            incl_ok = false;
            detail = format!("trial {trial}");
        }
    }
    push(
        &mut items,
        "200 pseudo-random nested pairs: inclusion reverses and distance is preserved under complement",
        incl_ok,
        detail,
    );

    let mut prop_ok = true;
    let mut detail = String::new();
    for trial in 0..500 {
        let q = [2u64, 3][rng.below(2)];
        let n = 4 + rng.below(3);
        let field = make_field(q, 1, None)?;
        let ty = rng.type_vector(n);
        let a = rng.flag(&field, &ty);
        let b = rng.flag(&field, &ty);
        if !nonmax_propagation_check(&a, &b)?.monotone {
            prop_ok = false;
            detail = format!("trial {trial}: type {:?}", ty.dims());
        }
    }
    push(
        &mut items,
        "500 pseudo-random flag pairs: non-maximality propagates monotonically toward the center",
        prop_ok,
        detail,
    );

    Ok(SuiteReport { suite: "duality".into(), items })
}
