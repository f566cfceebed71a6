//! Interchange formats. Field elements serialize as their base-p integer
//! encodings; subspaces as {"n", "basis"}; codes as documents carrying their
//! field spec. Bases that arrive out of canonical form are re-canonicalized
//! on load and the loader says so.

use serde::{Deserialize, Serialize};

use crate::cdc::ConstantDimensionCode;
use crate::error::{Error, Result};
use crate::field::{FieldElement, FieldSpec};
use crate::flags::{Flag, FlagCode, TypeVector};
use crate::matrix::MatrixGF;
use crate::subspace::Subspace;

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SubspaceJson {
    pub n: usize,
    pub basis: Vec<Vec<u32>>,
}

impl SubspaceJson {
    pub fn from_subspace(s: &Subspace) -> SubspaceJson {
        SubspaceJson { n: s.ambient(), basis: basis_rows(s) }
    }

    /// Parses against the given field; the flag reports whether the stored
    /// basis had to be re-canonicalized.
    pub fn to_subspace(&self, field: &FieldSpec) -> Result<(Subspace, bool)> {
        let (subspace, recanonicalized) = parse_basis(field, self.n, &self.basis)?;
        Ok((subspace, recanonicalized))
    }
}

fn basis_rows(s: &Subspace) -> Vec<Vec<u32>> {
    (0..s.dim())
        .map(|r| s.basis().row(r).iter().map(|e| e.encoding()).collect())
        .collect()
}

fn parse_basis(field: &FieldSpec, n: usize, rows: &[Vec<u32>]) -> Result<(Subspace, bool)> {
    let mut parsed: Vec<Vec<FieldElement>> = Vec::with_capacity(rows.len());
    for row in rows {
        parsed.push(row.iter().map(|&v| field.element(v)).collect::<Result<_>>()?);
    }
    let matrix = MatrixGF::from_rows(field.clone(), n, &parsed)?;
    if matrix.rows() == 0 || matrix.is_canonical_rref() {
        Ok((Subspace::from_canonical(matrix), false))
    } else {
        Ok((Subspace::from_matrix(&matrix), true))
    }
}

/// File format for a constant dimension code.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CdcFile {
    pub field: FieldSpec,
    pub n: usize,
    pub k: usize,
    pub subspaces: Vec<SubspaceJson>,
}

#[derive(Clone, Debug)]
pub struct LoadedCdc {
    pub code: ConstantDimensionCode,
    pub recanonicalized: bool,
}

impl CdcFile {
    pub fn from_code(code: &ConstantDimensionCode) -> CdcFile {
        CdcFile {
            field: code.field().clone(),
            n: code.ambient(),
            k: code.dim(),
            subspaces: code.iter().map(SubspaceJson::from_subspace).collect(),
        }
    }

    pub fn to_code(&self) -> Result<LoadedCdc> {
        let mut any_recanonicalized = false;
        let mut subs = Vec::with_capacity(self.subspaces.len());
        for s in &self.subspaces {
            if s.n != self.n {
                return Err(Error::AmbientMismatch(self.n, s.n));
            }
            let (sub, re) = s.to_subspace(&self.field)?;
            any_recanonicalized |= re;
            subs.push(sub);
        }
        Ok(LoadedCdc {
            code: ConstantDimensionCode::new(self.field.clone(), self.n, self.k, subs)?,
            recanonicalized: any_recanonicalized,
        })
    }
}

/// File format for a flag code: each flag lists its basis matrices in
/// increasing dimension order; every entry is a base-p encoding.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct FlagCodeFile {
    pub field: FieldSpec,
    pub n: usize,
    #[serde(rename = "type")]
    pub type_dims: Vec<usize>,
    pub flags: Vec<Vec<Vec<Vec<u32>>>>,
}

#[derive(Clone, Debug)]
pub struct LoadedFlagCode {
    pub code: FlagCode,
    pub recanonicalized: bool,
}

impl FlagCodeFile {
    pub fn from_code(code: &FlagCode) -> FlagCodeFile {
        FlagCodeFile {
            field: code.field().clone(),
            n: code.n(),
            type_dims: code.type_vector().dims().to_vec(),
            flags: code
                .flags()
                .iter()
                .map(|f| f.subspaces().iter().map(basis_rows).collect())
                .collect(),
        }
    }

    pub fn to_code(&self) -> Result<LoadedFlagCode> {
        let ty = TypeVector::new(self.n, self.type_dims.clone())?;
        let mut any_recanonicalized = false;
        let mut flags = Vec::with_capacity(self.flags.len());
        for (index, flag_bases) in self.flags.iter().enumerate() {
            let mut subspaces = Vec::with_capacity(flag_bases.len());
            for basis in flag_bases {
                let (sub, re) = parse_basis(&self.field, self.n, basis)?;
                any_recanonicalized |= re;
                subspaces.push(sub);
            }
            let flag = Flag::new(subspaces)
                .map_err(|e| Error::Malformed(format!("flag {index}: {e}")))?;
            if flag.type_vector() != ty {
                return Err(Error::Malformed(format!(
                    "flag {index} has dimensions {:?}, expected {:?}",
                    flag.type_vector().dims(),
                    ty.dims()
                )));
            }
            flags.push(flag);
        }
        Ok(LoadedFlagCode {
            code: FlagCode::new(self.field.clone(), ty, flags)?,
            recanonicalized: any_recanonicalized,
        })
    }
}

pub fn flag_code_to_json(code: &FlagCode) -> Result<String> {
    Ok(serde_json::to_string_pretty(&FlagCodeFile::from_code(code))?)
}

pub fn flag_code_from_json(text: &str) -> Result<LoadedFlagCode> {
    let file: FlagCodeFile = serde_json::from_str(text)?;
    file.to_code()
}

pub fn cdc_to_json(code: &ConstantDimensionCode) -> Result<String> {
    Ok(serde_json::to_string_pretty(&CdcFile::from_code(code))?)
}

pub fn cdc_from_json(text: &str) -> Result<LoadedCdc> {
    let file: CdcFile = serde_json::from_str(text)?;
    file.to_code()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{build_qodfc, build_spread_scaffold, truncated_partial_spread, CheckMode};
    use crate::field::make_field;

    #[test]
    fn flag_code_round_trip() {
        let f = make_field(2, 1, None).unwrap();
        let ty = TypeVector::new(5, vec![1, 2, 3]).unwrap();
        let built = build_qodfc(&f, &TypeVector::new(5, vec![1, 2, 3]).unwrap(), CheckMode::Always)
            .unwrap();
        let text = flag_code_to_json(&built.code).unwrap();
        let loaded = flag_code_from_json(&text).unwrap();
        assert!(!loaded.recanonicalized);
        assert_eq!(loaded.code, built.code);
        assert_eq!(loaded.code.type_vector(), &ty);
    }

    #[test]
    fn cdc_round_trip() {
        let f = make_field(3, 1, None).unwrap();
        let scaffold = build_spread_scaffold(&f, 2, 5).unwrap();
        let code = truncated_partial_spread(&scaffold, 2).unwrap();
        let text = cdc_to_json(&code).unwrap();
        let loaded = cdc_from_json(&text).unwrap();
        assert_eq!(loaded.code, code);
    }

    #[test]
    fn non_rref_bases_are_recanonicalized_with_warning() {
        let f = make_field(2, 1, None).unwrap();
        let text = r#"{
            "field": {"p": 2, "m": 1, "modulus": [0, 1]},
            "n": 3,
            "k": 2,
            "subspaces": [{"n": 3, "basis": [[1, 1, 0], [0, 1, 0]]}]
        }"#;
        let loaded = cdc_from_json(text).unwrap();
        assert!(loaded.recanonicalized);
        assert_eq!(loaded.code.elements()[0].dim(), 2);
    }

    #[test]
    fn malformed_inputs_are_reported() {
        // Entry out of range for GF(2).
        let text = r#"{
            "field": {"p": 2, "m": 1, "modulus": [0, 1]},
            "n": 3,
            "k": 1,
            "subspaces": [{"n": 3, "basis": [[2, 0, 0]]}]
        }"#;
        assert!(cdc_from_json(text).is_err());

        // Flag with broken nesting.
        let text = r#"{
            "field": {"p": 2, "m": 1, "modulus": [0, 1]},
            "n": 3,
            "type": [1, 2],
            "flags": [[[[1, 0, 0]], [[0, 1, 0], [0, 0, 1]]]]
        }"#;
        assert!(flag_code_from_json(text).is_err());
    }
}
