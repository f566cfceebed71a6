//! Dense matrices over GF(q) and Gauss-Jordan elimination.

use std::fmt;

use crate::error::{Error, Result};
use crate::field::{FieldElement, FieldSpec};

/// Row-major matrix over a fixed field.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MatrixGF {
    field: FieldSpec,
    rows: usize,
    cols: usize,
    entries: Vec<FieldElement>,
}

impl fmt::Debug for MatrixGF {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "MatrixGF {}x{} over {}", self.rows, self.cols, self.field)?;
        for r in 0..self.rows {
            let row: Vec<String> = self.row(r).iter().map(|e| e.to_string()).collect();
            writeln!(f, "  [{}]", row.join(" "))?;
        }
        Ok(())
    }
}

impl MatrixGF {
    pub fn new(
        field: FieldSpec,
        rows: usize,
        cols: usize,
        entries: Vec<FieldElement>,
    ) -> Result<MatrixGF> {
        if entries.len() != rows * cols {
            return Err(Error::EntryCount { expected: rows * cols, got: entries.len() });
        }
        Ok(MatrixGF { field, rows, cols, entries })
    }

    pub fn zeros(field: FieldSpec, rows: usize, cols: usize) -> MatrixGF {
        MatrixGF { field, rows, cols, entries: vec![FieldElement::ZERO; rows * cols] }
    }

    pub fn identity(field: FieldSpec, n: usize) -> MatrixGF {
        let mut m = MatrixGF::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, FieldElement::ONE);
        }
        m
    }

    pub fn from_rows(field: FieldSpec, cols: usize, rows: &[Vec<FieldElement>]) -> Result<MatrixGF> {
        let mut entries = Vec::with_capacity(rows.len() * cols);
        for (index, row) in rows.iter().enumerate() {
            if row.len() != cols {
                return Err(Error::RowLength { index, expected: cols, got: row.len() });
            }
            entries.extend_from_slice(row);
        }
        MatrixGF::new(field, rows.len(), cols, entries)
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> FieldElement {
        self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: FieldElement) {
        self.entries[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[FieldElement] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<FieldElement>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn entries(&self) -> &[FieldElement] {
        &self.entries
    }

    /// Vertical concatenation.
    pub fn stack(&self, other: &MatrixGF) -> Result<MatrixGF> {
        if self.field != other.field {
            return Err(Error::FieldMismatch);
        }
        if self.cols != other.cols {
            return Err(Error::ShapeMismatch(format!(
                "cannot stack {} columns on {} columns",
                other.cols, self.cols
            )));
        }
        let mut entries = self.entries.clone();
        entries.extend_from_slice(&other.entries);
        MatrixGF::new(self.field.clone(), self.rows + other.rows, self.cols, entries)
    }

    pub fn transpose(&self) -> MatrixGF {
        let mut out = MatrixGF::zeros(self.field.clone(), self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.set(c, r, self.get(r, c));
            }
        }
        out
    }

    pub fn mul(&self, other: &MatrixGF) -> Result<MatrixGF> {
        if self.field != other.field {
            return Err(Error::FieldMismatch);
        }
        if self.cols != other.rows {
            return Err(Error::ShapeMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let f = &self.field;
        let mut out = MatrixGF::zeros(f.clone(), self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let t = f.mul(a, other.get(k, c));
                    out.set(r, c, f.add(out.get(r, c), t));
                }
            }
        }
        Ok(out)
    }

    /// Gauss-Jordan elimination in place. Returns the pivot columns; the
    /// first `pivots.len()` rows hold the reduced basis, the rest are zero.
    fn reduce_in_place(&mut self) -> Vec<usize> {
        let f = self.field.clone();
        let mut pivots = Vec::new();
        let mut pivot_row = 0;
        for col in 0..self.cols {
            if pivot_row == self.rows {
                break;
            }
            let Some(found) =
                (pivot_row..self.rows).find(|&r| !self.get(r, col).is_zero())
            else {
                continue;
            };
            if found != pivot_row {
                for c in 0..self.cols {
                    let tmp = self.get(found, c);
                    self.set(found, c, self.get(pivot_row, c));
                    self.set(pivot_row, c, tmp);
                }
            }
            let inv = f
                .inv(self.get(pivot_row, col))
                .expect("pivot is nonzero by construction");
            for c in col..self.cols {
                let v = f.mul(self.get(pivot_row, c), inv);
                self.set(pivot_row, c, v);
            }
            for r in 0..self.rows {
                if r == pivot_row {
                    continue;
                }
                let factor = self.get(r, col);
                if factor.is_zero() {
                    continue;
                }
                for c in col..self.cols {
                    let t = f.mul(factor, self.get(pivot_row, c));
                    let v = f.sub(self.get(r, c), t);
                    self.set(r, c, v);
                }
            }
            pivots.push(col);
            pivot_row += 1;
        }
        pivots
    }

    /// Reduced row echelon form with zero rows removed, plus the rank.
    /// Idempotent: applying it to its own output returns the same matrix.
    pub fn rref(&self) -> (MatrixGF, usize) {
        let (m, pivots) = self.rref_with_pivots();
        let rank = pivots.len();
        (m, rank)
    }

    pub fn rref_with_pivots(&self) -> (MatrixGF, Vec<usize>) {
        let mut work = self.clone();
        let pivots = work.reduce_in_place();
        let rank = pivots.len();
        work.entries.truncate(rank * self.cols);
        work.rows = rank;
        (work, pivots)
    }

    pub fn rank(&self) -> usize {
        self.clone().reduce_in_place().len()
    }

    /// Basis of the right kernel {x : self * x^T = 0}, one vector per row.
    pub fn nullspace(&self) -> MatrixGF {
        let f = self.field.clone();
        let (reduced, pivots) = self.rref_with_pivots();
        let rank = pivots.len();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut out = MatrixGF::zeros(f.clone(), free.len(), self.cols);
        for (row, &fc) in free.iter().enumerate() {
            out.set(row, fc, FieldElement::ONE);
            for i in 0..rank {
                let v = reduced.get(i, fc);
                if !v.is_zero() {
                    out.set(row, pivots[i], f.neg(v));
                }
            }
        }
        out
    }

    /// True when the matrix already is a reduced row echelon basis: strictly
    /// increasing pivot columns, unit pivots, pivot columns otherwise zero,
    /// and no zero rows.
    pub fn is_canonical_rref(&self) -> bool {
        let mut last_pivot: Option<usize> = None;
        let mut pivot_cols = Vec::new();
        for r in 0..self.rows {
            let Some(pc) = (0..self.cols).find(|&c| !self.get(r, c).is_zero()) else {
                return false;
            };
            if last_pivot.is_some_and(|lp| pc <= lp) {
                return false;
            }
            if self.get(r, pc) != FieldElement::ONE {
                return false;
            }
            last_pivot = Some(pc);
            pivot_cols.push(pc);
        }
        for &pc in &pivot_cols {
            for r in 0..self.rows {
                if pivot_cols.get(r) == Some(&pc) {
                    continue;
                }
                if !self.get(r, pc).is_zero() {
                    return false;
                }
            }
        }
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::make_field;

    fn mat(field: &FieldSpec, cols: usize, rows: &[&[u32]]) -> MatrixGF {
        let data: Vec<Vec<FieldElement>> = rows
            .iter()
            .map(|r| r.iter().map(|&v| field.element(v).unwrap()).collect())
            .collect();
        MatrixGF::from_rows(field.clone(), cols, &data).unwrap()
    }

    #[test]
    fn rref_identity_is_fixed_point() {
        let f = make_field(2, 1, None).unwrap();
        let id = MatrixGF::identity(f, 3);
        let (r, rank) = id.rref();
        assert_eq!(rank, 3);
        assert_eq!(r, id);
    }

    #[test]
    fn rref_eliminates_dependent_rows() {
        let f = make_field(2, 1, None).unwrap();
        // Rows e1+e2, e2 reduce to e1, e2.
        let m = mat(&f, 3, &[&[1, 1, 0], &[0, 1, 0]]);
        let (r, rank) = m.rref();
        assert_eq!(rank, 2);
        assert_eq!(r, mat(&f, 3, &[&[1, 0, 0], &[0, 1, 0]]));
    }

    #[test]
    fn rref_scales_over_gf3() {
        let f = make_field(3, 1, None).unwrap();
        // Second row is 2 times the first: rank 1, normalized first row kept.
        let m = mat(&f, 4, &[&[2, 1, 0, 2], &[1, 2, 0, 1]]);
        let (r, rank) = m.rref();
        assert_eq!(rank, 1);
        assert_eq!(r, mat(&f, 4, &[&[1, 2, 0, 1]]));
        let (again, rank2) = r.rref();
        assert_eq!(rank2, 1);
        assert_eq!(again, r);
    }

    #[test]
    fn nullspace_vectors_annihilate() {
        let f = make_field(3, 1, None).unwrap();
        let m = mat(&f, 4, &[&[1, 2, 0, 1], &[0, 0, 1, 2]]);
        let ns = m.nullspace();
        assert_eq!(ns.rows(), 2);
        let prod = m.mul(&ns.transpose()).unwrap();
        assert!(prod.entries().iter().all(|e| e.is_zero()));
    }

    #[test]
    fn canonical_rref_detection() {
        let f = make_field(2, 1, None).unwrap();
        assert!(mat(&f, 3, &[&[1, 0, 1], &[0, 1, 1]]).is_canonical_rref());
        // Zero row.
        assert!(!mat(&f, 3, &[&[1, 0, 1], &[0, 0, 0]]).is_canonical_rref());
        // Pivot not cleared above.
        assert!(!mat(&f, 3, &[&[1, 1, 0], &[0, 1, 1]]).is_canonical_rref());
    }
}
