//! Flags, flag codes, the flag distance, projected codes, the L/R indices
//! and the distinguished type vector.

use std::cmp::Ordering;

use crate::cdc::ConstantDimensionCode;
use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::subspace::Subspace;

/// Type vector (t_1, ..., t_r) with 0 < t_1 < ... < t_r < n.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct TypeVector {
    n: usize,
    dims: Vec<usize>,
}

/// Positions (0-based) of the dimensions t_L = max{t_i | 2 t_i <= n} and
/// t_R = min{t_i | 2 t_i >= n}; either may be absent. When n/2 appears in the
/// type vector both point at it.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct LRIndices {
    pub l: Option<usize>,
    pub r: Option<usize>,
}

impl TypeVector {
    pub fn new(n: usize, dims: Vec<usize>) -> Result<TypeVector> {
        if dims.is_empty() {
            return Err(Error::BadTypeVector("type vector is empty".into()));
        }
        if dims[0] == 0 {
            return Err(Error::BadTypeVector("dimensions must be positive".into()));
        }
        if !dims.windows(2).all(|w| w[0] < w[1]) {
            return Err(Error::BadTypeVector(
                "dimensions must be strictly increasing".into(),
            ));
        }
        if *dims.last().unwrap() >= n {
            return Err(Error::BadTypeVector(format!(
                "dimensions must stay below the ambient dimension {n}"
            )));
        }
        Ok(TypeVector { n, dims })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn r(&self) -> usize {
        self.dims.len()
    }

    /// Largest distance a pair of subspaces of dimension t_i can attain.
    pub fn max_component_distance(&self, i: usize) -> usize {
        let t = self.dims[i];
        2 * t.min(self.n - t)
    }

    /// D^(t,n), the largest possible flag distance for this type.
    pub fn max_flag_distance(&self) -> usize {
        (0..self.dims.len()).map(|i| self.max_component_distance(i)).sum()
    }

    pub fn lr_indices(&self) -> LRIndices {
        let l = self.dims.iter().rposition(|&t| 2 * t <= self.n);
        let r = self.dims.iter().position(|&t| 2 * t >= self.n);
        LRIndices { l, r }
    }

    /// Positions of the existing dimensions among t_{L-1}, t_L, t_R, t_{R+1},
    /// deduplicated (t_L = t_R when n/2 is in the type).
    pub fn distinguished_indices(&self) -> Vec<usize> {
        let LRIndices { l, r } = self.lr_indices();
        let mut out = Vec::new();
        if let Some(l) = l {
            if l > 0 {
                out.push(l - 1);
            }
            out.push(l);
        }
        if let Some(r) = r {
            out.push(r);
            if r + 1 < self.dims.len() {
                out.push(r + 1);
            }
        }
        out.dedup();
        out
    }

    /// The distinguished type vector: the dimensions at the distinguished
    /// indices.
    pub fn distinguished_type(&self) -> Vec<usize> {
        self.distinguished_indices().iter().map(|&i| self.dims[i]).collect()
    }

    /// Dual type (n - t_r, ..., n - t_1).
    pub fn dual(&self) -> TypeVector {
        let dims: Vec<usize> = self.dims.iter().rev().map(|&t| self.n - t).collect();
        TypeVector { n: self.n, dims }
    }

    pub fn subtype(&self, indices: &[usize]) -> Result<TypeVector> {
        if indices.is_empty()
            || !indices.windows(2).all(|w| w[0] < w[1])
            || indices.iter().any(|&i| i >= self.dims.len())
        {
            return Err(Error::BadProjectionIndices);
        }
        Ok(TypeVector {
            n: self.n,
            dims: indices.iter().map(|&i| self.dims[i]).collect(),
        })
    }
}

/// A strictly nested sequence of subspaces with prescribed dimensions,
/// validated at construction.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Flag {
    subspaces: Vec<Subspace>,
}

impl Flag {
    pub fn new(subspaces: Vec<Subspace>) -> Result<Flag> {
        if subspaces.is_empty() {
            return Err(Error::BadFlag("a flag needs at least one subspace".into()));
        }
        let field = subspaces[0].field().clone();
        let n = subspaces[0].ambient();
        for s in &subspaces {
            if s.field() != &field {
                return Err(Error::FieldMismatch);
            }
            if s.ambient() != n {
                return Err(Error::AmbientMismatch(n, s.ambient()));
            }
        }
        let dims: Vec<usize> = subspaces.iter().map(|s| s.dim()).collect();
        TypeVector::new(n, dims).map_err(|_| {
            Error::BadFlag(format!(
                "subspace dimensions {:?} do not form a type vector below n = {n}",
                subspaces.iter().map(|s| s.dim()).collect::<Vec<_>>()
            ))
        })?;
        for w in subspaces.windows(2) {
            if !w[1].contains(&w[0])? {
                return Err(Error::BadFlag(format!(
                    "nesting fails between dimensions {} and {}",
                    w[0].dim(),
                    w[1].dim()
                )));
            }
        }
        Ok(Flag { subspaces })
    }

    pub fn field(&self) -> &FieldSpec {
        self.subspaces[0].field()
    }

    pub fn ambient(&self) -> usize {
        self.subspaces[0].ambient()
    }

    pub fn r(&self) -> usize {
        self.subspaces.len()
    }

    pub fn subspaces(&self) -> &[Subspace] {
        &self.subspaces
    }

    pub fn subspace(&self, i: usize) -> &Subspace {
        &self.subspaces[i]
    }

    pub fn type_vector(&self) -> TypeVector {
        TypeVector {
            n: self.ambient(),
            dims: self.subspaces.iter().map(|s| s.dim()).collect(),
        }
    }

    fn check_same_type(&self, other: &Flag) -> Result<()> {
        if self.type_vector() != other.type_vector() || self.field() != other.field() {
            return Err(Error::FlagTypeMismatch {
                expected: self.type_vector().dims.clone(),
                got: other.type_vector().dims.clone(),
            });
        }
        Ok(())
    }

    /// Componentwise subspace distances.
    pub fn distance_components(&self, other: &Flag) -> Result<Vec<usize>> {
        self.check_same_type(other)?;
        self.subspaces
            .iter()
            .zip(&other.subspaces)
            .map(|(a, b)| a.distance(b))
            .collect()
    }

    /// Flag distance: the sum of the componentwise subspace distances.
    pub fn distance(&self, other: &Flag) -> Result<usize> {
        Ok(self.distance_components(other)?.into_iter().sum())
    }

    /// Componentwise projection onto the given strictly increasing indices.
    pub fn project(&self, indices: &[usize]) -> Result<Flag> {
        if indices.is_empty()
            || !indices.windows(2).all(|w| w[0] < w[1])
            || indices.iter().any(|&i| i >= self.subspaces.len())
        {
            return Err(Error::BadProjectionIndices);
        }
        Ok(Flag {
            subspaces: indices.iter().map(|&i| self.subspaces[i].clone()).collect(),
        })
    }

    /// (F_r^perp, ..., F_1^perp), a flag of the dual type.
    pub fn dual(&self) -> Flag {
        Flag {
            subspaces: self.subspaces.iter().rev().map(|s| s.orthogonal_complement()).collect(),
        }
    }
}

impl PartialOrd for Flag {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Flag {
    fn cmp(&self, other: &Self) -> Ordering {
        self.subspaces.cmp(&other.subspaces)
    }
}

/// One collapse witness: two distinct flags sharing the subspace of the given
/// dimension.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct CollapseWitness {
    pub dim: usize,
    pub pair: (usize, usize),
}

/// Per-dimension cardinality census of a flag code.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DisjointnessReport {
    pub is_disjoint: bool,
    /// Dimensions t_i at which some pair of distinct flags collapses.
    pub collapse_dims: Vec<usize>,
    /// One witness pair per collapsing dimension.
    pub witnesses: Vec<CollapseWitness>,
    /// |C_i| for each i.
    pub projected_sizes: Vec<usize>,
}

/// A set of flags of one type, kept sorted and deduplicated.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FlagCode {
    field: FieldSpec,
    ty: TypeVector,
    flags: Vec<Flag>,
}

impl FlagCode {
    pub fn new(field: FieldSpec, ty: TypeVector, flags: Vec<Flag>) -> Result<FlagCode> {
        for f in &flags {
            if f.field() != &field {
                return Err(Error::FieldMismatch);
            }
            let got = f.type_vector();
            if got != ty {
                return Err(Error::FlagTypeMismatch {
                    expected: ty.dims.clone(),
                    got: got.dims,
                });
            }
        }
        let mut flags = flags;
        flags.sort();
        flags.dedup();
        Ok(FlagCode { field, ty, flags })
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    pub fn type_vector(&self) -> &TypeVector {
        &self.ty
    }

    pub fn n(&self) -> usize {
        self.ty.n
    }

    pub fn len(&self) -> usize {
        self.flags.len()
    }

    pub fn is_empty(&self) -> bool {
        self.flags.is_empty()
    }

    pub fn flags(&self) -> &[Flag] {
        &self.flags
    }

    pub fn iter(&self) -> impl Iterator<Item = &Flag> {
        self.flags.iter()
    }

    /// D^(t,n) for this code's type.
    pub fn max_distance(&self) -> usize {
        self.ty.max_flag_distance()
    }

    /// Minimum pairwise flag distance; 0 for a singleton.
    pub fn min_distance(&self) -> Result<usize> {
        self.min_distance_witness().map(|(d, _)| d)
    }

    /// Minimum distance plus one witnessing minimal pair.
    pub fn min_distance_witness(&self) -> Result<(usize, Option<(usize, usize)>)> {
        if self.flags.is_empty() {
            return Err(Error::EmptyCode);
        }
        let mut best: Option<(usize, (usize, usize))> = None;
        for i in 0..self.flags.len() {
            for j in i + 1..self.flags.len() {
                let d = self.flags[i].distance(&self.flags[j])?;
                if best.is_none_or(|(b, _)| d < b) {
                    best = Some((d, (i, j)));
                }
            }
        }
        Ok(match best {
            Some((d, pair)) => (d, Some(pair)),
            None => (0, None),
        })
    }

    /// The i-th projected subspace code {F_i | F in C}, deduplicated.
    pub fn projected_subspace_code(&self, i: usize) -> Result<ConstantDimensionCode> {
        if i >= self.ty.r() {
            return Err(Error::IndexOutOfRange { index: i + 1, len: self.ty.r() });
        }
        ConstantDimensionCode::new(
            self.field.clone(),
            self.ty.n,
            self.ty.dims[i],
            self.flags.iter().map(|f| f.subspace(i).clone()).collect(),
        )
    }

    /// Componentwise projection of every flag onto the given indices.
    pub fn projected_flag_code(&self, indices: &[usize]) -> Result<FlagCode> {
        let ty = self.ty.subtype(indices)?;
        let flags: Result<Vec<Flag>> = self.flags.iter().map(|f| f.project(indices)).collect();
        FlagCode::new(self.field.clone(), ty, flags?)
    }

    /// Projected-size census: the code is disjoint when every projected
    /// subspace code has as many elements as the code itself.
    pub fn disjointness_report(&self) -> Result<DisjointnessReport> {
        let mut collapse_dims = Vec::new();
        let mut witnesses = Vec::new();
        let mut projected_sizes = Vec::new();
        for i in 0..self.ty.r() {
            let proj = self.projected_subspace_code(i)?;
            projected_sizes.push(proj.len());
            if proj.len() == self.flags.len() {
                continue;
            }
            let dim = self.ty.dims[i];
            collapse_dims.push(dim);
            'outer: for a in 0..self.flags.len() {
                for b in a + 1..self.flags.len() {
                    if self.flags[a].subspace(i) == self.flags[b].subspace(i) {
                        witnesses.push(CollapseWitness { dim, pair: (a, b) });
                        break 'outer;
                    }
                }
            }
        }
        Ok(DisjointnessReport {
            is_disjoint: collapse_dims.is_empty(),
            collapse_dims,
            witnesses,
            projected_sizes,
        })
    }

    /// Componentwise dual code of the dual type; preserves cardinality and
    /// minimum distance.
    pub fn dual(&self) -> FlagCode {
        let flags: Vec<Flag> = self.flags.iter().map(Flag::dual).collect();
        FlagCode::new(self.field.clone(), self.ty.dual(), flags)
            .expect("dualizing preserves flag validity")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{make_field, FieldElement};

    pub(crate) fn sp(field: &FieldSpec, n: usize, rows: &[&[u32]]) -> Subspace {
        let data: Vec<Vec<FieldElement>> = rows
            .iter()
            .map(|r| r.iter().map(|&v| field.element(v).unwrap()).collect())
            .collect();
        Subspace::from_rows(field, n, &data).unwrap()
    }

    fn tv(n: usize, dims: &[usize]) -> TypeVector {
        TypeVector::new(n, dims.to_vec()).unwrap()
    }

    #[test]
    fn type_vector_validation() {
        assert!(TypeVector::new(5, vec![1, 2, 3]).is_ok());
        assert!(TypeVector::new(5, vec![]).is_err());
        assert!(TypeVector::new(5, vec![0, 1]).is_err());
        assert!(TypeVector::new(5, vec![1, 1]).is_err());
        assert!(TypeVector::new(5, vec![2, 5]).is_err());
    }

    #[test]
    fn max_flag_distance_values() {
        assert_eq!(tv(5, &[1, 2, 3]).max_flag_distance(), 10);
        assert_eq!(tv(6, &[1, 2, 4, 5]).max_flag_distance(), 12);
        assert_eq!(tv(8, &[4]).max_flag_distance(), 8);
    }

    #[test]
    fn lr_indices_table() {
        // The n = 10 table rows.
        let cases: &[(&[usize], Option<usize>, Option<usize>, &[usize])] = &[
            (&[1, 2, 4, 6, 8], Some(4), Some(6), &[2, 4, 6, 8]),
            (&[1, 2, 4, 6], Some(4), Some(6), &[2, 4, 6]),
            (&[1, 2, 4], Some(4), None, &[2, 4]),
            (&[1, 2, 5, 6, 8], Some(5), Some(5), &[2, 5, 6]),
            (&[5, 6, 8], Some(5), Some(5), &[5, 6]),
            (&[6, 7, 9], None, Some(6), &[6, 7]),
        ];
        for &(dims, t_l, t_r, distinguished) in cases {
            let ty = tv(10, dims);
            let lr = ty.lr_indices();
            assert_eq!(lr.l.map(|i| dims[i]), t_l, "t_L for {dims:?}");
            assert_eq!(lr.r.map(|i| dims[i]), t_r, "t_R for {dims:?}");
            assert_eq!(ty.distinguished_type(), distinguished, "distinguished for {dims:?}");
            if let (Some(l), Some(r)) = (lr.l, lr.r) {
                if dims[l] != dims[r] {
                    assert_eq!(r, l + 1);
                    assert!(2 * dims[l] <= 10 && 10 <= 2 * dims[r]);
                }
            }
        }
    }

    #[test]
    fn dual_types() {
        assert_eq!(tv(6, &[1, 2, 4, 5]).dual(), tv(6, &[1, 2, 4, 5]));
        assert_eq!(tv(5, &[1, 2, 3]).dual(), tv(5, &[2, 3, 4]));
    }

    fn example_flags(field: &FieldSpec) -> (Flag, Flag, Flag) {
        // The three flags of type (1,2,3) on GF(q)^5 from the worked example.
        let f1 = Flag::new(vec![
            sp(field, 5, &[&[1, 0, 0, 0, 0]]),
            sp(field, 5, &[&[1, 0, 0, 0, 0], &[0, 1, 0, 0, 0]]),
            sp(field, 5, &[&[1, 0, 0, 0, 0], &[0, 1, 0, 0, 0], &[0, 0, 1, 0, 0]]),
        ])
        .unwrap();
        let f2 = Flag::new(vec![
            sp(field, 5, &[&[0, 0, 0, 1, 0]]),
            sp(field, 5, &[&[1, 0, 0, 0, 0], &[0, 0, 0, 1, 0]]),
            sp(field, 5, &[&[1, 0, 0, 0, 0], &[0, 0, 0, 1, 0], &[0, 0, 0, 0, 1]]),
        ])
        .unwrap();
        let f3 = Flag::new(vec![
            sp(field, 5, &[&[0, 0, 1, 0, 0]]),
            sp(field, 5, &[&[0, 0, 1, 0, 0], &[0, 0, 0, 1, 0]]),
            sp(field, 5, &[&[0, 1, 0, 0, 0], &[0, 0, 1, 0, 0], &[0, 0, 0, 1, 0]]),
        ])
        .unwrap();
        (f1, f2, f3)
    }

    #[test]
    fn flag_validation_rejects_broken_nesting() {
        let f = make_field(2, 1, None).unwrap();
        let line = sp(&f, 4, &[&[1, 0, 0, 0]]);
        let plane = sp(&f, 4, &[&[0, 1, 0, 0], &[0, 0, 1, 0]]);
        assert!(Flag::new(vec![line, plane]).is_err());
    }

    #[test]
    fn example_distances_and_projections() {
        let field = make_field(2, 1, None).unwrap();
        let (f1, f2, f3) = example_flags(&field);
        assert_eq!(f1.distance(&f2).unwrap(), 8);
        assert_eq!(f1.distance(&f3).unwrap(), 8);
        assert_eq!(f2.distance(&f3).unwrap(), 8);
        assert_eq!(f1.distance(&f1).unwrap(), 0);

        let ty = tv(5, &[1, 2, 3]);
        let code = FlagCode::new(field.clone(), ty, vec![f1, f2, f3]).unwrap();
        assert_eq!(code.min_distance().unwrap(), 8);
        assert_eq!(code.max_distance(), 10);

        let c1 = code.projected_subspace_code(0).unwrap();
        assert_eq!(c1.len(), 3);
        assert_eq!(c1.min_distance().unwrap(), 2);
        let c2 = code.projected_subspace_code(1).unwrap();
        assert_eq!(c2.min_distance().unwrap(), 2);

        let c23 = code.projected_flag_code(&[1, 2]).unwrap();
        assert_eq!(c23.type_vector().dims(), &[2, 3]);
        assert_eq!(c23.min_distance().unwrap(), 6);

        let report = code.disjointness_report().unwrap();
        assert!(report.is_disjoint);
        assert_eq!(report.projected_sizes, vec![3, 3, 3]);

        // Projecting onto all indices returns the code itself.
        assert_eq!(code.projected_flag_code(&[0, 1, 2]).unwrap(), code);
    }

    #[test]
    fn singleton_code_conventions() {
        let field = make_field(2, 1, None).unwrap();
        let (f1, _, _) = example_flags(&field);
        let code = FlagCode::new(field, tv(5, &[1, 2, 3]), vec![f1]).unwrap();
        assert_eq!(code.min_distance().unwrap(), 0);
        assert!(code.disjointness_report().unwrap().is_disjoint);
        let proj = code.projected_subspace_code(0).unwrap();
        assert_eq!(proj.len(), 1);
    }

    #[test]
    fn dual_preserves_distance_and_size() {
        let field = make_field(2, 1, None).unwrap();
        let (f1, f2, f3) = example_flags(&field);
        let code = FlagCode::new(field, tv(5, &[1, 2, 3]), vec![f1, f2, f3]).unwrap();
        let dual = code.dual();
        assert_eq!(dual.type_vector().dims(), &[2, 3, 4]);
        assert_eq!(dual.len(), code.len());
        assert_eq!(dual.min_distance().unwrap(), code.min_distance().unwrap());
        assert_eq!(dual.dual(), code);
    }
}
