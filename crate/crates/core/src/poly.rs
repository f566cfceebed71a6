//! Polynomials with coefficients in GF(q), used to build degree-k extension
//! data for the spread scaffold.

use crate::error::Result;
use crate::field::{FieldElement, FieldSpec};

/// Dense polynomial over GF(q); coefficients ascending, trailing zeros
/// trimmed (the zero polynomial has no coefficients).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Poly {
    coeffs: Vec<FieldElement>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<FieldElement>) -> Poly {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Poly {
        Poly { coeffs: Vec::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[FieldElement] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> FieldElement {
        self.coeffs.get(i).copied().unwrap_or(FieldElement::ZERO)
    }

    pub fn mul(&self, other: &Poly, field: &FieldSpec) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![FieldElement::ZERO; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = field.add(out[i + j], field.mul(a, b));
            }
        }
        Poly::new(out)
    }

    /// Remainder modulo a monic divisor.
    pub fn rem(&self, divisor: &Poly, field: &FieldSpec) -> Poly {
        let dd = divisor.degree().expect("divisor must be nonzero");
        debug_assert_eq!(divisor.coeff(dd), FieldElement::ONE, "divisor must be monic");
        let mut rem = self.coeffs.clone();
        while rem.len() > dd {
            let lead = *rem.last().unwrap();
            let shift = rem.len() - 1 - dd;
            if !lead.is_zero() {
                for (j, &c) in divisor.coeffs.iter().enumerate() {
                    let t = field.mul(lead, c);
                    rem[shift + j] = field.sub(rem[shift + j], t);
                }
            }
            rem.pop();
        }
        Poly::new(rem)
    }

    /// Multiplies by x^k.
    pub fn shift(&self, k: usize) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![FieldElement::ZERO; k];
        coeffs.extend_from_slice(&self.coeffs);
        Poly { coeffs }
    }
}

/// Monic polynomial of degree `deg` whose non-leading coefficient encodings
/// form the base-q digits of `index` (x^0 least significant).
fn monic_by_index(field: &FieldSpec, deg: usize, index: u128) -> Poly {
    let q = field.order() as u128;
    let mut coeffs = Vec::with_capacity(deg + 1);
    let mut v = index;
    for _ in 0..deg {
        coeffs.push(FieldElement::from_raw((v % q) as u32));
        v /= q;
    }
    coeffs.push(FieldElement::ONE);
    Poly { coeffs }
}

/// Brute-force irreducibility over GF(q): trial division by every monic
/// polynomial of degree 1..=deg/2.
pub fn is_irreducible(poly: &Poly, field: &FieldSpec) -> bool {
    let Some(deg) = poly.degree() else {
        return false;
    };
    if deg == 0 {
        return false;
    }
    let q = field.order() as u128;
    for d in 1..=deg / 2 {
        let count = q.pow(d as u32);
        for idx in 0..count {
            let divisor = monic_by_index(field, d, idx);
            if poly.rem(&divisor, field).is_zero() {
                return false;
            }
        }
    }
    true
}

/// The deterministically-smallest monic irreducible polynomial of degree k
/// over GF(q): candidates are ordered by the base-q integer reading of their
/// coefficient vector with the x^{k-1} coefficient most significant.
///
/// Returns the k+1 coefficients, x^0 first.
pub fn find_irreducible(field: &FieldSpec, k: usize) -> Vec<FieldElement> {
    assert!(k >= 1, "degree must be at least 1");
    let q = field.order() as u128;
    let count = q.pow(k as u32);
    for idx in 0..count {
        let candidate = monic_by_index(field, k, idx);
        if is_irreducible(&candidate, field) {
            return candidate.coeffs;
        }
    }
    unreachable!("irreducible polynomials exist over every finite field for every degree")
}

/// GF(q^k) presented as GF(q)[x]/(f) with f = `find_irreducible(field, k)`.
///
/// Elements are coefficient vectors of length k over GF(q), enumerated in
/// base-q order of their encodings, matching the field enumeration rule.
pub(crate) struct ExtensionField {
    base: FieldSpec,
    k: usize,
    modulus: Poly,
}

impl ExtensionField {
    pub fn new(base: &FieldSpec, k: usize) -> ExtensionField {
        let modulus = Poly::new(find_irreducible(base, k));
        ExtensionField { base: base.clone(), k, modulus }
    }

    pub fn order(&self) -> u128 {
        (self.base.order() as u128).pow(self.k as u32)
    }

    /// The element whose coefficient encodings are the base-q digits of `index`.
    pub fn element(&self, index: u128) -> Poly {
        let q = self.base.order() as u128;
        let mut coeffs = Vec::with_capacity(self.k);
        let mut v = index;
        for _ in 0..self.k {
            coeffs.push(FieldElement::from_raw((v % q) as u32));
            v /= q;
        }
        Poly::new(coeffs)
    }

    /// k-by-k matrix of multiplication by `alpha` w.r.t. the basis
    /// {1, x, ..., x^{k-1}}: row i holds the coordinates of alpha * x^i.
    pub fn multiplication_matrix(&self, alpha: &Poly) -> Result<Vec<Vec<FieldElement>>> {
        let mut rows = Vec::with_capacity(self.k);
        for i in 0..self.k {
            let shifted = alpha.shift(i).rem(&self.modulus, &self.base);
            let mut row = vec![FieldElement::ZERO; self.k];
            for (j, slot) in row.iter_mut().enumerate() {
                *slot = shifted.coeff(j);
            }
            rows.push(row);
        }
        Ok(rows)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::make_field;

    #[test]
    fn smallest_irreducibles() {
        let f2 = make_field(2, 1, None).unwrap();
        // Exhausting the 4 monic quadratics over GF(2) leaves x^2+x+1.
        let encs: Vec<u32> = find_irreducible(&f2, 2).iter().map(|c| c.encoding()).collect();
        assert_eq!(encs, vec![1, 1, 1]);
        // Smallest monic linear is x itself.
        let encs: Vec<u32> = find_irreducible(&f2, 1).iter().map(|c| c.encoding()).collect();
        assert_eq!(encs, vec![0, 1]);

        let f3 = make_field(3, 1, None).unwrap();
        // x^2+1 has no root mod 3.
        let encs: Vec<u32> = find_irreducible(&f3, 2).iter().map(|c| c.encoding()).collect();
        assert_eq!(encs, vec![1, 0, 1]);
    }

    #[test]
    fn irreducible_outputs_never_factor() {
        // Exhaustive product check: no pair of lower-degree monic factors
        // multiplies to the returned polynomial (q^k <= 2^16).
        for (p, m, k) in [(2u64, 1u32, 2usize), (2, 1, 4), (3, 1, 3), (2, 2, 2), (5, 1, 2)] {
            let f = make_field(p, m, None).unwrap();
            let won = Poly::new(find_irreducible(&f, k));
            let q = f.order() as u128;
            for da in 1..=k / 2 {
                let db = k - da;
                for ia in 0..q.pow(da as u32) {
                    let a = monic_by_index(&f, da, ia);
                    for ib in 0..q.pow(db as u32) {
                        let b = monic_by_index(&f, db, ib);
                        assert_ne!(a.mul(&b, &f), won, "find_irreducible returned a product");
                    }
                }
            }
        }
    }

    #[test]
    fn extension_multiplication_matrix_gf4() {
        // GF(4) = GF(2)[x]/(x^2+x+1): multiplication by x maps 1 -> x and
        // x -> x+1.
        let f2 = make_field(2, 1, None).unwrap();
        let ext = ExtensionField::new(&f2, 2);
        let x = ext.element(2);
        let m = ext.multiplication_matrix(&x).unwrap();
        let encs: Vec<Vec<u32>> =
            m.iter().map(|row| row.iter().map(|c| c.encoding()).collect()).collect();
        assert_eq!(encs, vec![vec![0, 1], vec![1, 1]]);
    }
}
