//! Canonical subspaces of GF(q)^n and the subspace distance.
//!
//! A subspace is stored as its reduced row echelon basis, which is unique,
//! so equality of subspaces is entrywise equality of matrices. The zero
//! subspace (empty basis) and the full space are ordinary values.

use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::field::{FieldElement, FieldSpec};
use crate::matrix::MatrixGF;

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Subspace {
    basis: MatrixGF,
}

impl Subspace {
    /// Row space of the given rows, canonicalized.
    pub fn from_rows(field: &FieldSpec, n: usize, rows: &[Vec<FieldElement>]) -> Result<Subspace> {
        let m = MatrixGF::from_rows(field.clone(), n, rows)?;
        Ok(Subspace::from_matrix(&m))
    }

    /// Row space of an arbitrary matrix, canonicalized.
    pub fn from_matrix(m: &MatrixGF) -> Subspace {
        let (basis, _) = m.rref();
        Subspace { basis }
    }

    /// Wraps a matrix that is already a canonical RREF basis.
    pub(crate) fn from_canonical(basis: MatrixGF) -> Subspace {
        debug_assert!(basis.rows() == 0 || basis.is_canonical_rref());
        Subspace { basis }
    }

    pub fn zero(field: &FieldSpec, n: usize) -> Subspace {
        Subspace { basis: MatrixGF::zeros(field.clone(), 0, n) }
    }

    pub fn full(field: &FieldSpec, n: usize) -> Subspace {
        Subspace { basis: MatrixGF::identity(field.clone(), n) }
    }

    pub fn field(&self) -> &FieldSpec {
        self.basis.field()
    }

    pub fn ambient(&self) -> usize {
        self.basis.cols()
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    /// Canonical RREF basis, one row per dimension.
    pub fn basis(&self) -> &MatrixGF {
        &self.basis
    }

    fn check_compatible(&self, other: &Subspace) -> Result<()> {
        if self.field() != other.field() {
            return Err(Error::FieldMismatch);
        }
        if self.ambient() != other.ambient() {
            return Err(Error::AmbientMismatch(self.ambient(), other.ambient()));
        }
        Ok(())
    }

    /// U + V, the row space of the stacked bases.
    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check_compatible(other)?;
        Ok(Subspace::from_matrix(&self.basis.stack(&other.basis)?))
    }

    /// U intersected with V, via the left kernel of the stacked bases: a
    /// combination of U-rows equals a combination of V-rows exactly when the
    /// stacked coefficient vector annihilates the stacked matrix.
    pub fn intersect(&self, other: &Subspace) -> Result<Subspace> {
        self.check_compatible(other)?;
        let a = self.dim();
        let stacked = self.basis.stack(&other.basis)?;
        let left_kernel = stacked.transpose().nullspace();
        let field = self.field().clone();
        let n = self.ambient();
        let mut rows = Vec::with_capacity(left_kernel.rows());
        for r in 0..left_kernel.rows() {
            let coeffs = left_kernel.row(r);
            let mut vec = vec![FieldElement::ZERO; n];
            for (i, &c) in coeffs.iter().take(a).enumerate() {
                if c.is_zero() {
                    continue;
                }
                for (j, slot) in vec.iter_mut().enumerate() {
                    *slot = field.add(*slot, field.mul(c, self.basis.get(i, j)));
                }
            }
            rows.push(vec);
        }
        Subspace::from_rows(&field, n, &rows)
    }

    /// U^perp w.r.t. the standard inner product. In characteristic 2 a space
    /// may meet its complement, so this is computed as a kernel, never by
    /// basis completion.
    pub fn orthogonal_complement(&self) -> Subspace {
        Subspace::from_matrix(&self.basis.nullspace())
    }

    /// dim(U + V) - dim(U intersect V), computed from the rank of the
    /// stacked bases alone.
    pub fn distance(&self, other: &Subspace) -> Result<usize> {
        self.check_compatible(other)?;
        let sum_dim = self.basis.stack(&other.basis)?.rank();
        Ok(2 * sum_dim - self.dim() - other.dim())
    }

    pub fn contains(&self, other: &Subspace) -> Result<bool> {
        self.check_compatible(other)?;
        Ok(self.basis.stack(&other.basis)?.rank() == self.dim())
    }

    pub fn contains_vector(&self, v: &[FieldElement]) -> Result<bool> {
        let row = MatrixGF::from_rows(self.field().clone(), self.ambient(), &[v.to_vec()])?;
        Ok(self.basis.stack(&row)?.rank() == self.dim())
    }

    /// Flattened entry encodings of the canonical basis; the sort key used
    /// everywhere subspace sets need a deterministic order.
    pub fn encoding(&self) -> Vec<u32> {
        self.basis.entries().iter().map(|e| e.encoding()).collect()
    }
}

impl PartialOrd for Subspace {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Subspace {
    fn cmp(&self, other: &Self) -> Ordering {
        self.ambient()
            .cmp(&other.ambient())
            .then_with(|| self.dim().cmp(&other.dim()))
            .then_with(|| {
                self.basis
                    .entries()
                    .iter()
                    .map(|e| e.encoding())
                    .cmp(other.basis.entries().iter().map(|e| e.encoding()))
            })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::make_field;

    pub(crate) fn sp(field: &FieldSpec, n: usize, rows: &[&[u32]]) -> Subspace {
        let data: Vec<Vec<FieldElement>> = rows
            .iter()
            .map(|r| r.iter().map(|&v| field.element(v).unwrap()).collect())
            .collect();
        Subspace::from_rows(field, n, &data).unwrap()
    }

    #[test]
    fn duplicate_rows_collapse() {
        let f = make_field(2, 1, None).unwrap();
        let s = sp(&f, 4, &[&[1, 0, 0, 0], &[1, 0, 0, 0]]);
        assert_eq!(s.dim(), 1);
    }

    #[test]
    fn empty_rows_give_zero_subspace() {
        let f = make_field(2, 1, None).unwrap();
        let s = Subspace::from_rows(&f, 4, &[]).unwrap();
        assert_eq!(s.dim(), 0);
        assert!(s.is_zero());
    }

    #[test]
    fn rref_canonicalizes_generators() {
        let f = make_field(2, 1, None).unwrap();
        let s = sp(&f, 4, &[&[1, 0, 1, 0], &[0, 1, 0, 0]]);
        assert_eq!(s.dim(), 2);
        assert_eq!(s, sp(&f, 4, &[&[0, 1, 0, 0], &[1, 1, 1, 0]]));
    }

    #[test]
    fn sums_and_intersections() {
        let f = make_field(2, 1, None).unwrap();
        let e1 = sp(&f, 3, &[&[1, 0, 0]]);
        let e2 = sp(&f, 3, &[&[0, 1, 0]]);
        assert_eq!(e1.sum(&e2).unwrap(), sp(&f, 3, &[&[1, 0, 0], &[0, 1, 0]]));
        assert_eq!(e1.sum(&e1).unwrap(), e1);
        assert!(e1.intersect(&e2).unwrap().is_zero());

        // Planes sharing e1 in GF(2)^5 meet exactly in that line.
        let u = sp(&f, 5, &[&[1, 0, 0, 0, 0], &[0, 1, 0, 0, 0]]);
        let v = sp(&f, 5, &[&[1, 0, 0, 0, 0], &[0, 0, 0, 1, 0]]);
        assert_eq!(u.intersect(&v).unwrap(), sp(&f, 5, &[&[1, 0, 0, 0, 0]]));
        assert_eq!(u.intersect(&u).unwrap(), u);
    }

    #[test]
    fn sum_rank_over_gf2_six() {
        let f = make_field(2, 1, None).unwrap();
        let u = sp(&f, 6, &[&[1, 0, 0, 0, 0, 0], &[0, 1, 0, 0, 0, 0], &[0, 0, 1, 0, 0, 0]]);
        let v = sp(&f, 6, &[&[1, 0, 0, 0, 0, 0], &[0, 0, 0, 1, 0, 0], &[0, 0, 0, 0, 1, 0]]);
        assert_eq!(u.sum(&v).unwrap().dim(), 5);
    }

    #[test]
    fn orthogonal_complements() {
        let f = make_field(2, 1, None).unwrap();
        let e1 = sp(&f, 3, &[&[1, 0, 0]]);
        assert_eq!(e1.orthogonal_complement(), sp(&f, 3, &[&[0, 1, 0], &[0, 0, 1]]));

        let zero = Subspace::zero(&f, 3);
        assert_eq!(zero.orthogonal_complement(), Subspace::full(&f, 3));

        // Self-orthogonality is allowed in characteristic 2.
        let diag = sp(&f, 3, &[&[1, 1, 0]]);
        let perp = diag.orthogonal_complement();
        assert_eq!(perp.dim(), 2);
        assert!(perp.contains_vector(&[f.one(), f.one(), f.zero()]).unwrap());
        assert!(perp.contains_vector(&[f.zero(), f.zero(), f.one()]).unwrap());
        assert_eq!(perp.orthogonal_complement(), diag);
    }

    #[test]
    fn distances_match_the_lattice() {
        let f = make_field(2, 1, None).unwrap();
        let u = sp(&f, 6, &[&[1, 0, 0, 0, 0, 0], &[0, 1, 0, 0, 0, 0]]);
        assert_eq!(u.distance(&u).unwrap(), 0);

        let a = sp(&f, 6, &[
            &[1, 0, 0, 0, 0, 0],
            &[0, 1, 0, 0, 0, 0],
            &[0, 0, 1, 0, 0, 0],
            &[0, 0, 0, 1, 0, 0],
        ]);
        let b = sp(&f, 6, &[
            &[1, 0, 0, 0, 0, 0],
            &[0, 1, 0, 0, 0, 0],
            &[0, 0, 0, 0, 1, 0],
            &[0, 0, 0, 0, 0, 1],
        ]);
        assert_eq!(a.distance(&b).unwrap(), 4);
    }

    #[test]
    fn mismatched_operands_error() {
        let f2 = make_field(2, 1, None).unwrap();
        let f3 = make_field(3, 1, None).unwrap();
        let a = sp(&f2, 3, &[&[1, 0, 0]]);
        let b = sp(&f3, 3, &[&[1, 0, 0]]);
        assert!(matches!(a.distance(&b), Err(Error::FieldMismatch)));
        let c = sp(&f2, 4, &[&[1, 0, 0, 0]]);
        assert!(matches!(a.sum(&c), Err(Error::AmbientMismatch(3, 4))));
    }
}
