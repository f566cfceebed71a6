//! Systematic builders: the field-extension spread scaffold, truncated
//! partial spreads, sunflowers, the maximum-distance codes above n/2, the
//! disjoint flag-code construction and its distance-D-2l generalization, the
//! hyperplane-type non-disjoint construction, and the (1, n-1) flag variety.
//!
//! Everything here is deterministic: member order follows the field
//! enumeration, the appended vectors are u = e_{2k+1} and v = e_{2k+2}, and
//! hyperplanes are picked through canonical complement bases.

use num_bigint::BigUint;
use num_traits::One;

use crate::cdc::{enumerate_grassmannian, ConstantDimensionCode};
use crate::error::{Error, Result};
use crate::field::{FieldElement, FieldSpec, MAX_ORDER};
use crate::flags::{Flag, FlagCode, TypeVector};
use crate::matrix::MatrixGF;
use crate::poly::ExtensionField;
use crate::subspace::Subspace;

/// One spread member with its fixed full-rank generator matrix. Row-prefix
/// truncations are taken from this matrix, never from a recomputed basis, so
/// "the first j rows" is stable.
#[derive(Clone, Debug)]
pub struct ScaffoldMember {
    pub generator: MatrixGF,
    pub subspace: Subspace,
}

/// A k-spread of X = <e_1, ..., e_2k> inside GF(q)^n, with the distinguished
/// vectors u = e_{2k+1} and v = e_{2k+2} when those coordinates exist.
///
/// Members are the row spaces of [I_k | M_alpha | 0] for alpha running over
/// GF(q^k) in enumeration order, followed by [0 | I_k | 0]; M_alpha is the
/// multiplication-by-alpha matrix of GF(q)[x]/(f) for the deterministic
/// irreducible f of degree k.
#[derive(Clone, Debug)]
pub struct SpreadScaffold {
    field: FieldSpec,
    k: usize,
    n: usize,
    members: Vec<ScaffoldMember>,
    u: Option<Vec<FieldElement>>,
    v: Option<Vec<FieldElement>>,
}

pub fn build_spread_scaffold(field: &FieldSpec, k: usize, n: usize) -> Result<SpreadScaffold> {
    if k < 1 {
        return Err(Error::BadConstruction("spread dimension k must be at least 1".into()));
    }
    if n < 2 * k {
        return Err(Error::BadConstruction(format!(
            "ambient dimension {n} cannot hold a {k}-spread of a 2k-dimensional subspace"
        )));
    }
    let ext = ExtensionField::new(field, k);
    if ext.order() > MAX_ORDER as u128 {
        return Err(Error::BadConstruction(format!(
            "q^k = {} exceeds the supported scale",
            ext.order()
        )));
    }
    let count = ext.order() as usize;
    let mut members = Vec::with_capacity(count + 1);
    for idx in 0..count {
        let alpha = ext.element(idx as u128);
        let mult = ext.multiplication_matrix(&alpha)?;
        let mut rows = Vec::with_capacity(k);
        for (i, mrow) in mult.iter().enumerate() {
            let mut row = vec![FieldElement::ZERO; n];
            row[i] = FieldElement::ONE;
            row[k..2 * k].copy_from_slice(mrow);
            rows.push(row);
        }
        members.push(make_member(field, n, k, rows)?);
    }
    let mut rows = Vec::with_capacity(k);
    for i in 0..k {
        let mut row = vec![FieldElement::ZERO; n];
        row[k + i] = FieldElement::ONE;
        rows.push(row);
    }
    members.push(make_member(field, n, k, rows)?);

    let unit = |coord: usize| {
        let mut row = vec![FieldElement::ZERO; n];
        row[coord] = FieldElement::ONE;
        row
    };
    Ok(SpreadScaffold {
        field: field.clone(),
        k,
        n,
        members,
        u: (n > 2 * k).then(|| unit(2 * k)),
        v: (n > 2 * k + 1).then(|| unit(2 * k + 1)),
    })
}

fn make_member(
    field: &FieldSpec,
    n: usize,
    k: usize,
    rows: Vec<Vec<FieldElement>>,
) -> Result<ScaffoldMember> {
    let generator = MatrixGF::from_rows(field.clone(), n, &rows)?;
    let subspace = Subspace::from_matrix(&generator);
    if subspace.dim() != k {
        return Err(Error::ConstructionCheck(format!(
            "spread member generator has rank {} instead of {k}",
            subspace.dim()
        )));
    }
    Ok(ScaffoldMember { generator, subspace })
}

impl SpreadScaffold {
    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// q^k + 1.
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn members(&self) -> &[ScaffoldMember] {
        &self.members
    }

    pub fn u_vector(&self) -> Option<&[FieldElement]> {
        self.u.as_deref()
    }

    pub fn v_vector(&self) -> Option<&[FieldElement]> {
        self.v.as_deref()
    }

    /// The line spanned by u, when u exists.
    pub fn u_line(&self) -> Option<Subspace> {
        self.u.as_ref().map(|u| {
            Subspace::from_rows(&self.field, self.n, std::slice::from_ref(u))
                .expect("u is a unit vector")
        })
    }

    /// First `j` generator rows of member `i`.
    fn prefix_rows(&self, i: usize, j: usize) -> Vec<Vec<FieldElement>> {
        (0..j).map(|r| self.members[i].generator.row(r).to_vec()).collect()
    }

    /// Row space of the first `j` generator rows of member `i`.
    pub fn truncated_member(&self, i: usize, j: usize) -> Result<Subspace> {
        if j > self.k {
            return Err(Error::BadConstruction(format!(
                "truncation depth {j} exceeds the spread dimension {}",
                self.k
            )));
        }
        let s = Subspace::from_rows(&self.field, self.n, &self.prefix_rows(i, j))?;
        if s.dim() != j {
            return Err(Error::ConstructionCheck(format!(
                "member {i} truncated to {j} rows has dimension {}",
                s.dim()
            )));
        }
        Ok(s)
    }

    fn assemble(&self, rows: Vec<Vec<FieldElement>>, expect_dim: usize, what: &str) -> Result<Subspace> {
        let s = Subspace::from_rows(&self.field, self.n, &rows)?;
        if s.dim() != expect_dim {
            return Err(Error::ConstructionCheck(format!(
                "{what} has dimension {} instead of {expect_dim}",
                s.dim()
            )));
        }
        Ok(s)
    }
}

/// The partial j-spread of the row-prefix truncations, size q^k + 1.
pub fn truncated_partial_spread(
    scaffold: &SpreadScaffold,
    j: usize,
) -> Result<ConstantDimensionCode> {
    if j < 1 || j > scaffold.k() {
        return Err(Error::BadConstruction(format!(
            "truncation depth must lie in [1, {}], got {j}",
            scaffold.k()
        )));
    }
    let subs: Result<Vec<Subspace>> =
        (0..scaffold.len()).map(|i| scaffold.truncated_member(i, j)).collect();
    let code =
        ConstantDimensionCode::new(scaffold.field().clone(), scaffold.n(), j, subs?)?;
    if code.len() != scaffold.len() {
        return Err(Error::ConstructionCheck(
            "truncated members are not pairwise distinct".into(),
        ));
    }
    Ok(code)
}

/// The sunflower of dimension j+1 and center <u>: members are the prefix
/// truncations summed with the line <u>.
pub fn build_sunflower(scaffold: &SpreadScaffold, j: usize) -> Result<ConstantDimensionCode> {
    let n = scaffold.n();
    if j < 1 || 2 * (j + 1) > n {
        return Err(Error::BadConstruction(format!(
            "sunflower depth must satisfy 1 <= j < n/2, got j={j}, n={n}"
        )));
    }
    if j > scaffold.k() {
        return Err(Error::BadConstruction(format!(
            "sunflower depth {j} exceeds the spread dimension {}",
            scaffold.k()
        )));
    }
    let Some(u) = scaffold.u_vector() else {
        return Err(Error::BadConstruction(
            "scaffold has no u vector (ambient dimension is 2k)".into(),
        ));
    };
    let mut subs = Vec::with_capacity(scaffold.len());
    for i in 0..scaffold.len() {
        let mut rows = scaffold.prefix_rows(i, j);
        rows.push(u.to_vec());
        subs.push(scaffold.assemble(rows, j + 1, &format!("sunflower member {i}"))?);
    }
    let code =
        ConstantDimensionCode::new(scaffold.field().clone(), n, j + 1, subs)?;
    if code.len() != scaffold.len() {
        return Err(Error::ConstructionCheck("sunflower members are not distinct".into()));
    }
    Ok(code)
}

/// The maximum-distance code above n/2: members S_i + S_{i+1}^(j-1) + <u>
/// (n = 2k+1, dimension k+j) or S_i + S_{i+1}^(j-1) + <u, v> (n = 2k+2,
/// dimension k+j+1), with the successor index wrapping cyclically.
pub fn build_max_cdc_high(scaffold: &SpreadScaffold, j: usize) -> Result<ConstantDimensionCode> {
    let k = scaffold.k();
    let n = scaffold.n();
    if j < 1 || j > k {
        return Err(Error::BadConstruction(format!(
            "parameter j must lie in [1, {k}], got {j}"
        )));
    }
    if n != 2 * k + 1 && n != 2 * k + 2 {
        return Err(Error::BadConstruction(format!(
            "maximum-distance members need n in {{2k+1, 2k+2}}, got n={n}, k={k}"
        )));
    }
    let u = scaffold.u_vector().expect("n > 2k implies u exists");
    let dim = if n == 2 * k + 1 { k + j } else { k + j + 1 };
    let mut subs = Vec::with_capacity(scaffold.len());
    for i in 0..scaffold.len() {
        let succ = (i + 1) % scaffold.len();
        let mut rows = scaffold.prefix_rows(i, k);
        rows.extend(scaffold.prefix_rows(succ, j - 1));
        rows.push(u.to_vec());
        if n == 2 * k + 2 {
            rows.push(scaffold.v_vector().expect("n = 2k+2 implies v exists").to_vec());
        }
        subs.push(scaffold.assemble(rows, dim, &format!("maximum-distance member {i}"))?);
    }
    let code = ConstantDimensionCode::new(scaffold.field().clone(), n, dim, subs)?;
    if code.len() != scaffold.len() {
        return Err(Error::ConstructionCheck(
            "maximum-distance members are not distinct".into(),
        ));
    }
    Ok(code)
}

/// Whether builders verify their distance contract after assembly.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub enum CheckMode {
    /// Verify below a million flag pairs, skip above.
    #[default]
    Auto,
    Always,
    Never,
}

impl CheckMode {
    fn verify(self, pairs: usize) -> bool {
        match self {
            CheckMode::Auto => pairs <= 1_000_000,
            CheckMode::Always => true,
            CheckMode::Never => false,
        }
    }
}

/// A built flag code, with a note when the requested type was reached
/// through its dual.
#[derive(Clone, Debug)]
pub struct BuiltFlagCode {
    pub code: FlagCode,
    pub dualized: bool,
}

/// The distance-(D - 2l) family: prefix dimensions get spread truncations,
/// the l central dimensions become sunflower members through <u>, dimensions
/// above n/2 get the maximum-distance members. l = 1 is the flag-code
/// construction with distance D - 2.
pub fn build_c_ell(
    field: &FieldSpec,
    ty: &TypeVector,
    ell: usize,
    check: CheckMode,
) -> Result<BuiltFlagCode> {
    let n = ty.n();
    if n < 3 {
        return Err(Error::BadConstruction("the construction needs n >= 3".into()));
    }
    let Some(l) = ty.lr_indices().l else {
        // Every dimension exceeds n/2: build the dual type and dualize back.
        let inner = build_c_ell(field, &ty.dual(), ell, check)?;
        return Ok(BuiltFlagCode { code: inner.code.dual(), dualized: true });
    };
    if ell < 1 || ell > l + 1 {
        return Err(Error::BadConstruction(format!(
            "the sunflower band size must lie in [1, {}], got {ell}",
            l + 1
        )));
    }
    let k = (n - 1) / 2;
    let scaffold = build_spread_scaffold(field, k, n)?;
    let dims = ty.dims();
    let odd = n == 2 * k + 1;
    let u = scaffold.u_vector().expect("n >= 2k+1").to_vec();

    let mut flags = Vec::with_capacity(scaffold.len());
    for i in 0..scaffold.len() {
        let succ = (i + 1) % scaffold.len();
        let mut subspaces = Vec::with_capacity(dims.len());
        for (pos, &t) in dims.iter().enumerate() {
            let what = format!("flag {i}, dimension {t}");
            let s = if pos + ell <= l {
                if t > k {
                    return Err(Error::ConstructionCheck(format!(
                        "{what}: prefix dimension exceeds the spread dimension {k}"
                    )));
                }
                scaffold.assemble(scaffold.prefix_rows(i, t), t, &what)?
            } else if pos <= l {
                if t - 1 > k {
                    return Err(Error::ConstructionCheck(format!(
                        "{what}: sunflower depth exceeds the spread dimension {k}"
                    )));
                }
                let mut rows = scaffold.prefix_rows(i, t - 1);
                rows.push(u.clone());
                scaffold.assemble(rows, t, &what)?
            } else {
                let succ_rows = if odd {
                    if t <= k || t > 2 * k {
                        return Err(Error::ConstructionCheck(format!(
                            "{what}: dimension outside [k+1, 2k] for n = 2k+1"
                        )));
                    }
                    t - k - 1
                } else {
                    if t <= k + 1 || t > 2 * k + 1 {
                        return Err(Error::ConstructionCheck(format!(
                            "{what}: dimension outside [k+2, 2k+1] for n = 2k+2"
                        )));
                    }
                    t - k - 2
                };
                let mut rows = scaffold.prefix_rows(i, k);
                rows.extend(scaffold.prefix_rows(succ, succ_rows));
                rows.push(u.clone());
                if !odd {
                    rows.push(scaffold.v_vector().expect("n = 2k+2").to_vec());
                }
                scaffold.assemble(rows, t, &what)?
            };
            subspaces.push(s);
        }
        let flag = Flag::new(subspaces)
            .map_err(|e| Error::ConstructionCheck(format!("flag {i} is invalid: {e}")))?;
        flags.push(flag);
    }

    let code = FlagCode::new(field.clone(), ty.clone(), flags)?;
    if code.len() != scaffold.len() {
        return Err(Error::ConstructionCheck("constructed flags are not distinct".into()));
    }
    let pairs = code.len() * (code.len() - 1) / 2;
    if check.verify(pairs) {
        let expected = ty.max_flag_distance() - 2 * ell;
        let got = code.min_distance()?;
        if got != expected {
            return Err(Error::ConstructionCheck(format!(
                "distance self-check failed: expected {expected}, computed {got}"
            )));
        }
    }
    Ok(BuiltFlagCode { code, dualized: false })
}

/// The distance-(D - 2) construction for an arbitrary type vector; dualizes
/// first when every dimension exceeds n/2.
pub fn build_qodfc(field: &FieldSpec, ty: &TypeVector, check: CheckMode) -> Result<BuiltFlagCode> {
    build_c_ell(field, ty, 1, check)
}

/// Non-disjoint construction for types ending at n-1 with t_{r-1} < n/2 (or
/// starting at 1 with t_2 > n/2, reached through duality): the first two
/// flags share a hyperplane containing S_1 + S_2, every other flag tops out
/// at a deterministic hyperplane containing its spread member.
pub fn build_qodfc_hyperplane_type(
    field: &FieldSpec,
    ty: &TypeVector,
    check: CheckMode,
) -> Result<BuiltFlagCode> {
    let n = ty.n();
    let dims = ty.dims();
    let r = ty.r();
    let hyperplane_shape = r >= 2 && dims[r - 1] == n - 1 && 2 * dims[r - 2] < n;
    if !hyperplane_shape {
        if r >= 2 && dims[0] == 1 && 2 * dims[1] > n {
            let inner = build_qodfc_hyperplane_type(field, &ty.dual(), check)?;
            return Ok(BuiltFlagCode { code: inner.code.dual(), dualized: true });
        }
        return Err(Error::BadConstruction(format!(
            "type {dims:?} does not end at n-1 with t_(r-1) < n/2 (nor the dual shape)"
        )));
    }

    let k = dims[r - 1 - 1];
    let scaffold = build_spread_scaffold(field, k, n)?;
    let s = scaffold.len();

    let shared_perp = scaffold.members()[0]
        .subspace
        .sum(&scaffold.members()[1].subspace)?
        .orthogonal_complement();
    let shared_hyperplane = hyperplane_from_normal(field, n, shared_perp.basis().row(0))?;

    let mut flags = Vec::with_capacity(s);
    for i in 0..s {
        let mut subspaces = Vec::with_capacity(r);
        for &t in &dims[..r - 1] {
            subspaces.push(scaffold.assemble(
                scaffold.prefix_rows(i, t),
                t,
                &format!("flag {i}, dimension {t}"),
            )?);
        }
        let top = if i < 2 {
            shared_hyperplane.clone()
        } else {
            let perp = scaffold.members()[i].subspace.orthogonal_complement();
            hyperplane_from_normal(field, n, perp.basis().row(0))?
        };
        subspaces.push(top);
        let flag = Flag::new(subspaces)
            .map_err(|e| Error::ConstructionCheck(format!("flag {i} is invalid: {e}")))?;
        flags.push(flag);
    }

    let code = FlagCode::new(field.clone(), ty.clone(), flags)?;
    if code.len() != s {
        return Err(Error::ConstructionCheck("constructed flags are not distinct".into()));
    }
    let pairs = code.len() * (code.len() - 1) / 2;
    if check.verify(pairs) {
        let expected = ty.max_flag_distance() - 2;
        let got = code.min_distance()?;
        if got != expected {
            return Err(Error::ConstructionCheck(format!(
                "distance self-check failed: expected {expected}, computed {got}"
            )));
        }
        if code.projected_subspace_code(r - 1)?.len() >= code.len() {
            return Err(Error::ConstructionCheck(
                "top projected code did not collapse".into(),
            ));
        }
    }
    Ok(BuiltFlagCode { code, dualized: false })
}

fn hyperplane_from_normal(
    field: &FieldSpec,
    n: usize,
    normal: &[FieldElement],
) -> Result<Subspace> {
    let line = Subspace::from_rows(field, n, &[normal.to_vec()])?;
    let h = line.orthogonal_complement();
    if h.dim() != n - 1 {
        return Err(Error::ConstructionCheck("normal vector did not span a line".into()));
    }
    Ok(h)
}

/// All incident (line, hyperplane) pairs of GF(q)^n: the full flag variety
/// of type (1, n-1), the largest code of its type at distance D - 2.
pub fn build_flag_variety_line_hyperplane(
    field: &FieldSpec,
    n: usize,
    cap: usize,
) -> Result<FlagCode> {
    if n < 3 {
        return Err(Error::BadConstruction("the (1, n-1) variety needs n >= 3".into()));
    }
    let q = BigUint::from(field.order());
    let lines_count = (q.pow(n as u32) - BigUint::one()) / (&q - BigUint::one());
    let hyps_count = (q.pow(n as u32 - 1) - BigUint::one()) / (&q - BigUint::one());
    let total = &lines_count * &hyps_count;
    if total > BigUint::from(cap) {
        return Err(Error::CapExceeded { needed: total.to_string(), cap });
    }
    let lines = enumerate_grassmannian(field, n, 1, cap)?;
    let hyperplanes = enumerate_grassmannian(field, n, n - 1, cap)?;
    let mut flags = Vec::new();
    for hyp in &hyperplanes {
        for line in &lines {
            if hyp.contains(line)? {
                flags.push(Flag::new(vec![line.clone(), hyp.clone()])?);
            }
        }
    }
    let ty = TypeVector::new(n, vec![1, n - 1])?;
    let code = FlagCode::new(field.clone(), ty, flags)?;
    if BigUint::from(code.len()) != total {
        return Err(Error::ConstructionCheck(format!(
            "variety has {} flags, expected {total}",
            code.len()
        )));
    }
    Ok(code)
}

/// Number of flags of the given type over GF(q): the product of the
/// extension counts, one Gaussian binomial per nesting step.
pub fn flag_variety_count(q: u32, ty: &TypeVector) -> BigUint {
    let mut count = BigUint::one();
    let mut prev = 0;
    for &t in ty.dims() {
        count *= crate::cdc::gaussian_binomial(q, ty.n() - prev, t - prev);
        prev = t;
    }
    count
}

/// Every flag of the given type, exactly once, built by extending chains one
/// type dimension at a time. Oracle support for exhaustive sweeps; the total
/// is checked against the cap before anything is enumerated.
pub fn enumerate_flag_variety(field: &FieldSpec, ty: &TypeVector, cap: usize) -> Result<Vec<Flag>> {
    let total = flag_variety_count(field.order(), ty);
    if total > BigUint::from(cap) {
        return Err(Error::CapExceeded { needed: total.to_string(), cap });
    }
    let mut chains: Vec<Vec<Subspace>> = vec![Vec::new()];
    for &t in ty.dims() {
        let grassmannian = enumerate_grassmannian(field, ty.n(), t, cap)?;
        let mut next = Vec::new();
        for chain in &chains {
            for s in &grassmannian {
                let extends = match chain.last() {
                    Some(last) => s.contains(last)?,
                    None => true,
                };
                if extends {
                    let mut grown = chain.clone();
                    grown.push(s.clone());
                    next.push(grown);
                }
            }
        }
        chains = next;
    }
    let flags: Result<Vec<Flag>> = chains.into_iter().map(Flag::new).collect();
    let flags = flags?;
    if BigUint::from(flags.len()) != total {
        return Err(Error::ConstructionCheck(format!(
            "flag variety enumeration produced {} flags, expected {total}",
            flags.len()
        )));
    }
    Ok(flags)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cdc::SunflowerOutcome;
    use crate::characterization::{check_qodfc_disjoint, qodfc_oracle};
    use crate::field::make_field;

    #[test]
    fn scaffold_members_form_a_spread() {
        let f = make_field(2, 1, None).unwrap();
        let scaffold = build_spread_scaffold(&f, 2, 5).unwrap();
        assert_eq!(scaffold.len(), 5);
        let spread = truncated_partial_spread(&scaffold, 2).unwrap();
        assert!(spread.is_partial_spread());
        assert_eq!(spread.min_distance().unwrap(), 4);
    }

    #[test]
    fn scaffold_lines_for_k_one() {
        let f = make_field(2, 1, None).unwrap();
        let scaffold = build_spread_scaffold(&f, 1, 3).unwrap();
        let encs: Vec<Vec<u32>> = scaffold
            .members()
            .iter()
            .map(|m| m.generator.row(0).iter().map(|e| e.encoding()).collect())
            .collect();
        assert_eq!(encs, vec![vec![1, 0, 0], vec![1, 1, 0], vec![0, 1, 0]]);
    }

    #[test]
    fn truncations_nest_and_spread() {
        let f = make_field(2, 1, None).unwrap();
        let scaffold = build_spread_scaffold(&f, 2, 5).unwrap();
        let lines = truncated_partial_spread(&scaffold, 1).unwrap();
        assert_eq!(lines.len(), 5);
        assert!(lines.is_partial_spread());
        assert_eq!(lines.min_distance().unwrap(), 2);
        let full = truncated_partial_spread(&scaffold, 2).unwrap();
        for i in 0..scaffold.len() {
            let small = scaffold.truncated_member(i, 1).unwrap();
            let big = scaffold.truncated_member(i, 2).unwrap();
            assert!(big.contains(&small).unwrap());
        }
        assert_eq!(full.len(), 5);
    }

    #[test]
    fn sunflower_center_is_u() {
        let f = make_field(2, 1, None).unwrap();
        let scaffold = build_spread_scaffold(&f, 2, 5).unwrap();
        let sunflower = build_sunflower(&scaffold, 1).unwrap();
        assert_eq!(sunflower.len(), 5);
        assert_eq!(sunflower.min_distance().unwrap(), 2);
        match sunflower.sunflower_center().unwrap() {
            SunflowerOutcome::Sunflower { center } => {
                assert_eq!(center, scaffold.u_line().unwrap());
            }
            other => panic!("expected sunflower, got {other:?}"),
        }
        assert!(sunflower.sunflower_quotient_check(&scaffold.u_line().unwrap()).unwrap());
    }

    #[test]
    fn high_members_attain_maximum_distance() {
        let f = make_field(2, 1, None).unwrap();
        let scaffold = build_spread_scaffold(&f, 2, 5).unwrap();
        let code = build_max_cdc_high(&scaffold, 1).unwrap();
        assert_eq!(code.dim(), 3);
        assert!(code.is_max_distance());
        assert_eq!(code.min_distance().unwrap(), 4);

        let scaffold = build_spread_scaffold(&f, 2, 6).unwrap();
        let code = build_max_cdc_high(&scaffold, 1).unwrap();
        assert_eq!(code.dim(), 4);
        assert!(code.is_max_distance());
        assert_eq!(code.min_distance().unwrap(), 4);
    }

    #[test]
    fn qodfc_construction_examples() {
        let f2 = make_field(2, 1, None).unwrap();
        let ty = TypeVector::new(5, vec![1, 2, 3, 4]).unwrap();
        let built = build_qodfc(&f2, &ty, CheckMode::Always).unwrap();
        assert!(!built.dualized);
        assert_eq!(built.code.len(), 5);
        assert_eq!(built.code.min_distance().unwrap(), 10);
        assert!(qodfc_oracle(&built.code).unwrap());
        assert!(check_qodfc_disjoint(&built.code).unwrap().verdict);

        let f3 = make_field(3, 1, None).unwrap();
        let ty = TypeVector::new(5, vec![2, 3]).unwrap();
        let built = build_qodfc(&f3, &ty, CheckMode::Always).unwrap();
        assert_eq!(built.code.len(), 10);
        assert_eq!(built.code.min_distance().unwrap(), 6);
    }

    #[test]
    fn c_ell_distance_law_small() {
        let f = make_field(2, 1, None).unwrap();
        let ty = TypeVector::new(5, vec![1, 2, 3, 4]).unwrap();
        for ell in 1..=2 {
            let built = build_c_ell(&f, &ty, ell, CheckMode::Always).unwrap();
            assert_eq!(built.code.min_distance().unwrap(), 12 - 2 * ell);
        }
        let c1 = build_c_ell(&f, &ty, 1, CheckMode::Always).unwrap();
        let qodfc = build_qodfc(&f, &ty, CheckMode::Always).unwrap();
        assert_eq!(c1.code, qodfc.code);
        assert!(build_c_ell(&f, &ty, 3, CheckMode::Always).is_err());
    }

    #[test]
    fn all_high_types_are_dualized() {
        let f = make_field(2, 1, None).unwrap();
        let ty = TypeVector::new(5, vec![3, 4]).unwrap();
        let built = build_qodfc(&f, &ty, CheckMode::Always).unwrap();
        assert!(built.dualized);
        assert_eq!(built.code.type_vector(), &ty);
        assert!(qodfc_oracle(&built.code).unwrap());
    }

    #[test]
    fn hyperplane_construction_examples() {
        let f = make_field(2, 1, None).unwrap();
        let ty = TypeVector::new(6, vec![2, 5]).unwrap();
        let built = build_qodfc_hyperplane_type(&f, &ty, CheckMode::Always).unwrap();
        assert_eq!(built.code.len(), 5);
        assert_eq!(built.code.min_distance().unwrap(), 4);
        let report = built.code.disjointness_report().unwrap();
        assert!(!report.is_disjoint);
        assert_eq!(report.collapse_dims, vec![5]);

        let ty = TypeVector::new(5, vec![1, 2, 4]).unwrap();
        let built = build_qodfc_hyperplane_type(&f, &ty, CheckMode::Always).unwrap();
        assert_eq!(built.code.len(), 5);
        assert_eq!(built.code.min_distance().unwrap(), 6);
        let report = built.code.disjointness_report().unwrap();
        assert_eq!(report.collapse_dims, vec![4]);
    }

    #[test]
    fn hyperplane_dual_shape() {
        let f = make_field(2, 1, None).unwrap();
        // Type (1, 4) on GF(2)^6: reached by dualizing the (2, 5) build.
        let ty = TypeVector::new(6, vec![1, 4]).unwrap();
        let built = build_qodfc_hyperplane_type(&f, &ty, CheckMode::Always).unwrap();
        assert!(built.dualized);
        assert_eq!(built.code.type_vector(), &ty);
        assert!(qodfc_oracle(&built.code).unwrap());
    }

    #[test]
    fn flag_variety_enumeration_counts() {
        let f = make_field(2, 1, None).unwrap();
        let ty = TypeVector::new(4, vec![1, 2, 3]).unwrap();
        assert_eq!(flag_variety_count(2, &ty), BigUint::from(315u32));
        let flags = enumerate_flag_variety(&f, &ty, 1000).unwrap();
        assert_eq!(flags.len(), 315);
        assert!(matches!(
            enumerate_flag_variety(&f, &ty, 100),
            Err(Error::CapExceeded { .. })
        ));
    }

    #[test]
    fn variety_line_hyperplane() {
        let f = make_field(2, 1, None).unwrap();
        let code = build_flag_variety_line_hyperplane(&f, 3, 1000).unwrap();
        assert_eq!(code.len(), 21);
        assert_eq!(code.min_distance().unwrap(), 2);
        for flag in code.flags() {
            assert!(flag.subspace(1).contains(flag.subspace(0)).unwrap());
        }
        assert!(matches!(
            build_flag_variety_line_hyperplane(&f, 3, 10),
            Err(Error::CapExceeded { .. })
        ));
    }
}
