//! Deterministic pseudo-random generators for the verification suites: a
//! small splitmix-style generator, random subspaces, nested flags and flag
//! codes. Reproducible across platforms by construction.

use flagcode::{Flag, FlagCode, FieldElement, FieldSpec, Subspace, TypeVector};

/// SplitMix64; deterministic and platform independent.
#[derive(Clone, Debug)]
pub struct Rng(u64);

impl Rng {
    pub fn new(seed: u64) -> Rng {
        Rng(seed)
    }

    pub fn next_u64(&mut self) -> u64 {
        self.0 = self.0.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z ^ (z >> 31)
    }

    /// Uniform value below `bound` (bound > 0).
    pub fn below(&mut self, bound: usize) -> usize {
        (self.next_u64() % bound as u64) as usize
    }

    pub fn element(&mut self, field: &FieldSpec) -> FieldElement {
        field
            .element(self.below(field.order() as usize) as u32)
            .expect("sampled below q")
    }

    pub fn vector(&mut self, field: &FieldSpec, n: usize) -> Vec<FieldElement> {
        (0..n).map(|_| self.element(field)).collect()
    }

    /// Random generator rows spanning exactly `dim` dimensions: random
    /// vectors are kept only when they grow the span, so the loop adds one
    /// dimension per accepted row.
    fn spanning_rows(
        &mut self,
        field: &FieldSpec,
        n: usize,
        dim: usize,
        rows: &mut Vec<Vec<FieldElement>>,
        current: &mut usize,
    ) {
        while *current < dim {
            rows.push(self.vector(field, n));
            let spanned = Subspace::from_rows(field, n, rows).expect("rows have length n");
            if spanned.dim() > *current {
                *current = spanned.dim();
            } else {
                rows.pop();
            }
        }
    }

    /// Random subspace of the exact dimension.
    pub fn subspace(&mut self, field: &FieldSpec, n: usize, dim: usize) -> Subspace {
        assert!(dim <= n);
        let mut rows = Vec::new();
        let mut current = 0;
        self.spanning_rows(field, n, dim, &mut rows, &mut current);
        Subspace::from_rows(field, n, &rows).expect("rows have length n")
    }

    /// Random flag of the given type, built by growing one chain of
    /// generator rows and snapshotting it at every type dimension.
    pub fn flag(&mut self, field: &FieldSpec, ty: &TypeVector) -> Flag {
        let n = ty.n();
        let mut rows = Vec::new();
        let mut current = 0;
        let mut chain = Vec::with_capacity(ty.r());
        for &t in ty.dims() {
            self.spanning_rows(field, n, t, &mut rows, &mut current);
            chain.push(Subspace::from_rows(field, n, &rows).expect("rows have length n"));
        }
        Flag::new(chain).expect("chain grows strictly through the type dimensions")
    }

    /// Random flag code with `size` distinct flags.
    pub fn flag_code(&mut self, field: &FieldSpec, ty: &TypeVector, size: usize) -> FlagCode {
        let mut flags: Vec<Flag> = Vec::with_capacity(size);
        loop {
            let code = FlagCode::new(field.clone(), ty.clone(), flags.clone())
                .expect("flags match the type");
            if code.len() == size {
                return code;
            }
            flags = code.flags().to_vec();
            flags.push(self.flag(field, ty));
        }
    }

    /// Random type vector on GF(q)^n: a nonempty subset of 1..n.
    pub fn type_vector(&mut self, n: usize) -> TypeVector {
        loop {
            let dims: Vec<usize> = (1..n).filter(|_| self.below(2) == 0).collect();
            if dims.is_empty() {
                continue;
            }
            return TypeVector::new(n, dims).expect("increasing dims below n");
        }
    }
}
