//! Constant dimension codes: minimum distance, partial-spread / sunflower /
//! maximum-distance predicates, duals, cardinality bounds and Grassmannian
//! enumeration.

use num_bigint::BigUint;
use num_traits::One;

use crate::error::{Error, Result};
use crate::field::{FieldElement, FieldSpec};
use crate::matrix::MatrixGF;
use crate::subspace::Subspace;

/// A set of equal-dimension subspaces of GF(q)^n, kept sorted in canonical
/// order and deduplicated.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ConstantDimensionCode {
    field: FieldSpec,
    n: usize,
    k: usize,
    elements: Vec<Subspace>,
}

/// Result of the sunflower test.
#[derive(Clone, Debug)]
pub enum SunflowerOutcome {
    /// All pairwise intersections equal this subspace (possibly zero, in
    /// which case the code is also a partial spread).
    Sunflower { center: Subspace },
    /// Two pairs whose intersections differ.
    NotASunflower {
        pair_a: (usize, usize),
        pair_b: (usize, usize),
    },
}

impl ConstantDimensionCode {
    pub fn new(
        field: FieldSpec,
        n: usize,
        k: usize,
        subspaces: Vec<Subspace>,
    ) -> Result<ConstantDimensionCode> {
        for s in &subspaces {
            if s.field() != &field {
                return Err(Error::FieldMismatch);
            }
            if s.ambient() != n {
                return Err(Error::AmbientMismatch(n, s.ambient()));
            }
            if s.dim() != k {
                return Err(Error::WrongDimension { expected: k, got: s.dim() });
            }
        }
        let mut elements = subspaces;
        elements.sort();
        elements.dedup();
        Ok(ConstantDimensionCode { field, n, k, elements })
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    pub fn ambient(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.k
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[Subspace] {
        &self.elements
    }

    pub fn iter(&self) -> impl Iterator<Item = &Subspace> {
        self.elements.iter()
    }

    pub fn contains(&self, s: &Subspace) -> bool {
        self.elements.binary_search(s).is_ok()
    }

    /// Largest distance two subspaces of this dimension can attain.
    pub fn max_possible_distance(&self) -> usize {
        2 * self.k.min(self.n - self.k)
    }

    /// Minimum pairwise subspace distance; 0 for a singleton.
    pub fn min_distance(&self) -> Result<usize> {
        self.min_distance_witness().map(|(d, _)| d)
    }

    /// Minimum distance plus one witnessing pair (absent for singletons).
    pub fn min_distance_witness(&self) -> Result<(usize, Option<(usize, usize)>)> {
        if self.elements.is_empty() {
            return Err(Error::EmptyCode);
        }
        let mut best: Option<(usize, (usize, usize))> = None;
        for i in 0..self.elements.len() {
            for j in i + 1..self.elements.len() {
                let d = self.elements[i].distance(&self.elements[j])?;
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

    /// First pair with a nontrivial intersection, if any.
    pub fn partial_spread_violation(&self) -> Option<(usize, usize)> {
        for i in 0..self.elements.len() {
            for j in i + 1..self.elements.len() {
                let sum_dim = self.elements[i]
                    .sum(&self.elements[j])
                    .expect("elements share field and ambient")
                    .dim();
                if sum_dim < 2 * self.k {
                    return Some((i, j));
                }
            }
        }
        None
    }

    /// Every distinct pair intersects trivially.
    pub fn is_partial_spread(&self) -> bool {
        self.partial_spread_violation().is_none()
    }

    /// Maximum-distance test: trivial pairwise intersections when 2k <= n,
    /// pairwise sums equal to the full space when 2k >= n (the two criteria
    /// coincide at 2k = n).
    pub fn is_max_distance(&self) -> bool {
        if 2 * self.k <= self.n {
            return self.is_partial_spread();
        }
        for i in 0..self.elements.len() {
            for j in i + 1..self.elements.len() {
                let sum_dim = self.elements[i]
                    .sum(&self.elements[j])
                    .expect("elements share field and ambient")
                    .dim();
                if sum_dim < self.n {
                    return false;
                }
            }
        }
        true
    }

    /// Tests whether all pairwise intersections coincide; needs at least two
    /// elements for the center to be determined.
    pub fn sunflower_center(&self) -> Result<SunflowerOutcome> {
        if self.elements.len() < 2 {
            return Err(Error::CenterUndetermined);
        }
        let center = self.elements[0].intersect(&self.elements[1])?;
        for i in 0..self.elements.len() {
            for j in i + 1..self.elements.len() {
                if (i, j) == (0, 1) {
                    continue;
                }
                let meet = self.elements[i].intersect(&self.elements[j])?;
                if meet != center {
                    return Ok(SunflowerOutcome::NotASunflower {
                        pair_a: (0, 1),
                        pair_b: (i, j),
                    });
                }
            }
        }
        Ok(SunflowerOutcome::Sunflower { center })
    }

    /// Verifies the sunflower decomposition against a claimed center: every
    /// pairwise intersection equals it exactly and the minimum distance is
    /// 2(k - c).
    pub fn sunflower_quotient_check(&self, center: &Subspace) -> Result<bool> {
        match self.sunflower_center()? {
            SunflowerOutcome::Sunflower { center: found } if &found == center => {}
            _ => return Err(Error::NotTheCenter),
        }
        let c = center.dim();
        let (d, _) = self.min_distance_witness()?;
        Ok(d == 2 * (self.k - c))
    }

    /// Elementwise orthogonal complement; preserves cardinality and distance.
    pub fn dual(&self) -> ConstantDimensionCode {
        let elements: Vec<Subspace> =
            self.elements.iter().map(|s| s.orthogonal_complement()).collect();
        ConstantDimensionCode::new(self.field.clone(), self.n, self.n - self.k, elements)
            .expect("complements share dimension n - k")
    }
}

/// Upper bound on the size of a partial k-spread of GF(q)^n.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpreadBound {
    /// floor((q^n - 1) / (q^k - 1))
    pub value: BigUint,
    /// True when k divides n, in which case the bound is the exact size of a
    /// spread.
    pub exact: bool,
}

pub fn partial_spread_bound(q: u32, n: usize, k: usize) -> Result<SpreadBound> {
    if k < 1 || k > n {
        return Err(Error::BadConstruction(format!(
            "partial spread bound needs 1 <= k <= n, got k={k}, n={n}"
        )));
    }
    let q = BigUint::from(q);
    let num = q.pow(n as u32) - BigUint::one();
    let den = q.pow(k as u32) - BigUint::one();
    Ok(SpreadBound { value: num / den, exact: n % k == 0 })
}

/// Exact q-binomial coefficient, the number of k-dimensional subspaces of
/// GF(q)^n.
pub fn gaussian_binomial(q: u32, n: usize, k: usize) -> BigUint {
    assert!(k <= n, "gaussian binomial needs 0 <= k <= n");
    let q = BigUint::from(q);
    let mut num = BigUint::one();
    let mut den = BigUint::one();
    for i in 0..k {
        num *= q.pow((n - i) as u32) - BigUint::one();
        den *= q.pow((i + 1) as u32) - BigUint::one();
    }
    num / den
}

/// Every k-dimensional subspace of GF(q)^n exactly once, sorted by canonical
/// basis encoding. The count is checked against the cap before any
/// enumeration happens.
pub fn enumerate_grassmannian(
    field: &FieldSpec,
    n: usize,
    k: usize,
    cap: usize,
) -> Result<Vec<Subspace>> {
    assert!(k <= n, "grassmannian needs 0 <= k <= n");
    let expected = gaussian_binomial(field.order(), n, k);
    if expected > BigUint::from(cap) {
        return Err(Error::CapExceeded { needed: expected.to_string(), cap });
    }
    let mut out = Vec::new();
    let mut pivots: Vec<usize> = (0..k).collect();
    loop {
        emit_for_pivots(field, n, k, &pivots, &mut out);
        // Next k-combination of columns in lexicographic order.
        let mut i = k;
        loop {
            if i == 0 {
                out.sort();
                debug_assert_eq!(BigUint::from(out.len()), expected);
                return Ok(out);
            }
            i -= 1;
            if pivots[i] != i + n - k {
                pivots[i] += 1;
                for j in i + 1..k {
                    pivots[j] = pivots[j - 1] + 1;
                }
                break;
            }
        }
    }
}

/// All RREF matrices with the given pivot columns: free entries are the
/// positions right of each pivot that are not pivot columns themselves.
fn emit_for_pivots(
    field: &FieldSpec,
    n: usize,
    k: usize,
    pivots: &[usize],
    out: &mut Vec<Subspace>,
) {
    let mut free: Vec<(usize, usize)> = Vec::new();
    for (i, &p) in pivots.iter().enumerate() {
        for c in p + 1..n {
            if !pivots.contains(&c) {
                free.push((i, c));
            }
        }
    }
    let q = field.order();
    let mut digits = vec![0u32; free.len()];
    loop {
        let mut m = MatrixGF::zeros(field.clone(), k, n);
        for (i, &p) in pivots.iter().enumerate() {
            m.set(i, p, FieldElement::ONE);
        }
        for (slot, &(r, c)) in free.iter().enumerate() {
            m.set(r, c, field.element(digits[slot]).expect("digit below q"));
        }
        out.push(Subspace::from_canonical(m));
        // Odometer over the free entries.
        let mut idx = 0;
        loop {
            if idx == digits.len() {
                return;
            }
            digits[idx] += 1;
            if digits[idx] < q {
                break;
            }
            digits[idx] = 0;
            idx += 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::make_field;

    fn sp(field: &FieldSpec, n: usize, rows: &[&[u32]]) -> Subspace {
        let data: Vec<Vec<FieldElement>> = rows
            .iter()
            .map(|r| r.iter().map(|&v| field.element(v).unwrap()).collect())
            .collect();
        Subspace::from_rows(field, n, &data).unwrap()
    }

    fn code(field: &FieldSpec, n: usize, k: usize, subs: Vec<Subspace>) -> ConstantDimensionCode {
        ConstantDimensionCode::new(field.clone(), n, k, subs).unwrap()
    }

    #[test]
    fn singleton_distance_is_zero() {
        let f = make_field(2, 1, None).unwrap();
        let c = code(&f, 3, 1, vec![sp(&f, 3, &[&[1, 0, 0]])]);
        assert_eq!(c.min_distance().unwrap(), 0);
    }

    #[test]
    fn distinct_lines_have_distance_two() {
        let f = make_field(2, 1, None).unwrap();
        let c = code(
            &f,
            3,
            1,
            vec![
                sp(&f, 3, &[&[1, 0, 0]]),
                sp(&f, 3, &[&[0, 1, 0]]),
                sp(&f, 3, &[&[0, 0, 1]]),
            ],
        );
        assert_eq!(c.min_distance().unwrap(), 2);
    }

    #[test]
    fn partial_spread_detection() {
        let f = make_field(2, 1, None).unwrap();
        let good = code(
            &f,
            4,
            2,
            vec![
                sp(&f, 4, &[&[1, 0, 0, 0], &[0, 1, 0, 0]]),
                sp(&f, 4, &[&[0, 0, 1, 0], &[0, 0, 0, 1]]),
            ],
        );
        assert!(good.is_partial_spread());
        assert_eq!(good.min_distance().unwrap(), 4);

        let bad = code(
            &f,
            4,
            2,
            vec![
                sp(&f, 4, &[&[1, 0, 0, 0], &[0, 1, 0, 0]]),
                sp(&f, 4, &[&[1, 0, 0, 0], &[0, 0, 1, 0]]),
            ],
        );
        let witness = bad.partial_spread_violation().unwrap();
        let shared = bad.elements()[witness.0].intersect(&bad.elements()[witness.1]).unwrap();
        assert_eq!(shared, sp(&f, 4, &[&[1, 0, 0, 0]]));
    }

    #[test]
    fn max_distance_above_half_dimension() {
        let f = make_field(2, 1, None).unwrap();
        let full_sum = code(
            &f,
            5,
            3,
            vec![
                sp(&f, 5, &[&[1, 0, 0, 0, 0], &[0, 1, 0, 0, 0], &[0, 0, 1, 0, 0]]),
                sp(&f, 5, &[&[0, 0, 1, 0, 0], &[0, 0, 0, 1, 0], &[0, 0, 0, 0, 1]]),
            ],
        );
        assert!(full_sum.is_max_distance());

        let shallow = code(
            &f,
            5,
            3,
            vec![
                sp(&f, 5, &[&[1, 0, 0, 0, 0], &[0, 1, 0, 0, 0], &[0, 0, 1, 0, 0]]),
                sp(&f, 5, &[&[1, 0, 0, 0, 0], &[0, 1, 0, 0, 0], &[0, 0, 0, 1, 0]]),
            ],
        );
        assert!(!shallow.is_max_distance());

        let singleton = code(&f, 5, 3, vec![sp(&f, 5, &[&[1, 0, 0, 0, 0], &[0, 1, 0, 0, 0], &[0, 0, 1, 0, 0]])]);
        assert!(singleton.is_max_distance());
    }

    #[test]
    fn sunflower_outcomes() {
        let f = make_field(2, 1, None).unwrap();
        // A partial spread is a sunflower with zero center.
        let spread = code(
            &f,
            4,
            2,
            vec![
                sp(&f, 4, &[&[1, 0, 0, 0], &[0, 1, 0, 0]]),
                sp(&f, 4, &[&[0, 0, 1, 0], &[0, 0, 0, 1]]),
            ],
        );
        match spread.sunflower_center().unwrap() {
            SunflowerOutcome::Sunflower { center } => assert!(center.is_zero()),
            other => panic!("expected a sunflower, got {other:?}"),
        }
        assert!(spread.sunflower_quotient_check(&Subspace::zero(&f, 4)).unwrap());

        // Pairwise intersections <e1>, <e2>, <e3> differ.
        let tangled = code(
            &f,
            4,
            2,
            vec![
                sp(&f, 4, &[&[1, 0, 0, 0], &[0, 1, 0, 0]]),
                sp(&f, 4, &[&[1, 0, 0, 0], &[0, 0, 1, 0]]),
                sp(&f, 4, &[&[0, 1, 0, 0], &[0, 0, 1, 0]]),
            ],
        );
        assert!(matches!(
            tangled.sunflower_center().unwrap(),
            SunflowerOutcome::NotASunflower { .. }
        ));
        assert!(matches!(
            tangled.sunflower_quotient_check(&Subspace::zero(&f, 4)),
            Err(Error::NotTheCenter)
        ));

        let lonely = code(&f, 4, 2, vec![sp(&f, 4, &[&[1, 0, 0, 0], &[0, 1, 0, 0]])]);
        assert!(matches!(lonely.sunflower_center(), Err(Error::CenterUndetermined)));
    }

    #[test]
    fn duals_preserve_parameters() {
        let f = make_field(2, 1, None).unwrap();
        let c = code(&f, 3, 1, vec![sp(&f, 3, &[&[1, 0, 0]])]);
        let d = c.dual();
        assert_eq!(d.dim(), 2);
        assert_eq!(d.elements()[0], sp(&f, 3, &[&[0, 1, 0], &[0, 0, 1]]));
        assert_eq!(d.dual(), c);
    }

    #[test]
    fn spread_bound_values() {
        let b = partial_spread_bound(2, 4, 2).unwrap();
        assert_eq!(b.value, BigUint::from(5u32));
        assert!(b.exact);

        let b = partial_spread_bound(2, 5, 2).unwrap();
        assert_eq!(b.value, BigUint::from(10u32));
        assert!(!b.exact);

        let b = partial_spread_bound(7, 6, 6).unwrap();
        assert_eq!(b.value, BigUint::one());
        assert!(b.exact);
    }

    #[test]
    fn gaussian_binomial_values() {
        assert_eq!(gaussian_binomial(2, 2, 1), BigUint::from(3u32));
        assert_eq!(gaussian_binomial(2, 4, 1), BigUint::from(15u32));
        assert_eq!(gaussian_binomial(2, 4, 2), BigUint::from(35u32));
        assert_eq!(gaussian_binomial(3, 3, 1), BigUint::from(13u32));
        assert_eq!(gaussian_binomial(2, 4, 0), BigUint::one());
        assert_eq!(gaussian_binomial(2, 4, 4), BigUint::one());
    }

    #[test]
    fn grassmannian_enumeration_counts() {
        let f2 = make_field(2, 1, None).unwrap();
        assert_eq!(enumerate_grassmannian(&f2, 2, 1, 100).unwrap().len(), 3);
        let g24 = enumerate_grassmannian(&f2, 4, 2, 100).unwrap();
        assert_eq!(g24.len(), 35);
        // Sorted, duplicate-free, all canonical.
        assert!(g24.windows(2).all(|w| w[0] < w[1]));

        let f3 = make_field(3, 1, None).unwrap();
        assert_eq!(enumerate_grassmannian(&f3, 3, 1, 100).unwrap().len(), 13);

        assert!(matches!(
            enumerate_grassmannian(&f2, 4, 2, 10),
            Err(Error::CapExceeded { .. })
        ));
    }

    #[test]
    fn max_distance_criteria_match_distance_exhaustively() {
        // 2k <= n: partial spread iff distance 2k, over all pairs in G_2(2,4).
        let f = make_field(2, 1, None).unwrap();
        let all = enumerate_grassmannian(&f, 4, 2, 1000).unwrap();
        for i in 0..all.len() {
            for j in i + 1..all.len() {
                let c = code(&f, 4, 2, vec![all[i].clone(), all[j].clone()]);
                assert_eq!(c.is_partial_spread(), c.min_distance().unwrap() == 4);
            }
        }

        // 2k >= n: max distance iff distance 2(n-k), over all pairs in G_2(3,5).
        let all = enumerate_grassmannian(&f, 5, 3, 1000).unwrap();
        for i in 0..all.len() {
            for j in i + 1..all.len() {
                let c = code(&f, 5, 3, vec![all[i].clone(), all[j].clone()]);
                assert_eq!(c.is_max_distance(), c.min_distance().unwrap() == 4);
            }
        }
    }
}
