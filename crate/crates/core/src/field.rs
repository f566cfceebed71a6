//! Exact arithmetic in GF(p^m).
//!
//! A [`FieldSpec`] fixes the prime `p`, the extension degree `m` and a monic
//! irreducible modulus of degree `m` over GF(p). Elements are stored as the
//! base-`p` integer encoding of their coefficient vector (coefficient of x^0
//! least significant), so the all-zero vector encodes as `0` and the constant
//! `1` as `1` in every field. All operations are pure; a spec is cheap to
//! clone and safe to share across threads.

use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Largest supported field order. Encodings fit in a `u32` with room to spare;
/// anything bigger is outside the desk scale this crate targets.
pub const MAX_ORDER: u64 = 1 << 16;

const MAX_M: usize = 16;

/// An element of some GF(p^m), identified by its base-`p` encoding.
///
/// The element does not know its field; every operation goes through the
/// owning [`FieldSpec`]. Ordering follows the encoding, which matches the
/// enumeration order of the field.
#[derive(Copy, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct FieldElement(u32);

impl FieldElement {
    pub const ZERO: FieldElement = FieldElement(0);
    pub const ONE: FieldElement = FieldElement(1);

    pub fn encoding(self) -> u32 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }

    pub(crate) fn from_raw(enc: u32) -> FieldElement {
        FieldElement(enc)
    }
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

#[derive(Debug)]
struct FieldData {
    p: u32,
    m: u32,
    q: u32,
    /// Monic modulus of degree `m`, coefficient of x^0 first, length m+1.
    modulus: Vec<u32>,
}

/// A finite field GF(p^m) with a fixed irreducible modulus.
#[derive(Clone)]
pub struct FieldSpec {
    data: Arc<FieldData>,
}

impl PartialEq for FieldSpec {
    fn eq(&self, other: &Self) -> bool {
        self.data.p == other.data.p
            && self.data.m == other.data.m
            && self.data.modulus == other.data.modulus
    }
}

impl Eq for FieldSpec {}

impl Hash for FieldSpec {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.data.p.hash(state);
        self.data.m.hash(state);
        self.data.modulus.hash(state);
    }
}

impl fmt::Debug for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.data.m == 1 {
            write!(f, "GF({})", self.data.p)
        } else {
            write!(
                f,
                "GF({}^{} = {}, modulus {:?})",
                self.data.p, self.data.m, self.data.q, self.data.modulus
            )
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({})", self.data.q)
    }
}

/// Constructs GF(p^m).
///
/// With `modulus` omitted and m > 1, the modulus is the monic irreducible
/// polynomial of degree m over GF(p) whose coefficient vector, read as a
/// base-p integer with the x^{m-1} coefficient most significant, is smallest.
/// For m = 1 the modulus is the placeholder `x` and arithmetic is integers
/// mod p.
pub fn make_field(p: u64, m: u32, modulus: Option<&[u32]>) -> Result<FieldSpec> {
    if !is_prime(p) {
        return Err(Error::NonPrime(p));
    }
    if m < 1 {
        return Err(Error::DegreeTooSmall);
    }
    let q = (0..m).try_fold(1u64, |acc, _| {
        let next = acc.checked_mul(p)?;
        (next <= MAX_ORDER).then_some(next)
    });
    let q = q.ok_or(Error::FieldTooLarge(p.saturating_pow(m)))?;
    let p = p as u32;

    let modulus = match modulus {
        Some(coeffs) => {
            if coeffs.len() != m as usize + 1 {
                return Err(Error::BadModulus(format!(
                    "expected {} coefficients, got {}",
                    m + 1,
                    coeffs.len()
                )));
            }
            if coeffs.iter().any(|&c| c >= p) {
                return Err(Error::BadModulus(format!(
                    "coefficients must lie in [0, {p})"
                )));
            }
            if coeffs[m as usize] != 1 {
                return Err(Error::BadModulus("modulus must be monic".into()));
            }
            if m > 1 && !zp_is_irreducible(coeffs, p) {
                return Err(Error::BadModulus(
                    "modulus factors over the prime field".into(),
                ));
            }
            coeffs.to_vec()
        }
        None => {
            if m == 1 {
                vec![0, 1]
            } else {
                smallest_irreducible_zp(p, m as usize)
            }
        }
    };

    Ok(FieldSpec {
        data: Arc::new(FieldData { p, m, q: q as u32, modulus }),
    })
}

impl FieldSpec {
    pub fn p(&self) -> u32 {
        self.data.p
    }

    /// Extension degree m.
    pub fn extension_degree(&self) -> u32 {
        self.data.m
    }

    /// Field order q = p^m.
    pub fn order(&self) -> u32 {
        self.data.q
    }

    pub fn modulus(&self) -> &[u32] {
        &self.data.modulus
    }

    pub fn is_prime_field(&self) -> bool {
        self.data.m == 1
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement::ZERO
    }

    pub fn one(&self) -> FieldElement {
        FieldElement::ONE
    }

    /// The element with the given base-p encoding.
    pub fn element(&self, enc: u32) -> Result<FieldElement> {
        if enc < self.data.q {
            Ok(FieldElement(enc))
        } else {
            Err(Error::ElementOutOfRange { enc, order: self.data.q })
        }
    }

    /// Coefficient vector of `a`, x^0 first, length m.
    pub fn coeffs(&self, a: FieldElement) -> Vec<u32> {
        let mut digits = [0u32; MAX_M];
        self.decode(a, &mut digits);
        digits[..self.data.m as usize].to_vec()
    }

    pub fn element_from_coeffs(&self, coeffs: &[u32]) -> Result<FieldElement> {
        if coeffs.len() != self.data.m as usize {
            return Err(Error::BadModulus(format!(
                "expected {} coefficients, got {}",
                self.data.m,
                coeffs.len()
            )));
        }
        let p = self.data.p;
        if coeffs.iter().any(|&c| c >= p) {
            return Err(Error::ElementOutOfRange {
                enc: *coeffs.iter().find(|&&c| c >= p).unwrap(),
                order: p,
            });
        }
        let mut enc = 0u32;
        for &c in coeffs.iter().rev() {
            enc = enc * p + c;
        }
        Ok(FieldElement(enc))
    }

    /// All q elements, zero first, in ascending encoding order.
    pub fn elements(&self) -> impl Iterator<Item = FieldElement> {
        (0..self.data.q).map(FieldElement)
    }

    fn decode(&self, a: FieldElement, out: &mut [u32; MAX_M]) {
        debug_assert!(a.0 < self.data.q, "element out of range for {self}");
        let p = self.data.p;
        let mut v = a.0;
        for slot in out.iter_mut().take(self.data.m as usize) {
            *slot = v % p;
            v /= p;
        }
    }

    fn encode(&self, digits: &[u32]) -> FieldElement {
        let p = self.data.p;
        let m = self.data.m as usize;
        let mut enc = 0u32;
        for i in (0..m).rev() {
            enc = enc * p + digits[i];
        }
        FieldElement(enc)
    }

    pub fn add(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        let p = self.data.p;
        if self.is_prime_field() {
            return FieldElement((a.0 + b.0) % p);
        }
        let (mut da, mut db) = ([0u32; MAX_M], [0u32; MAX_M]);
        self.decode(a, &mut da);
        self.decode(b, &mut db);
        for i in 0..self.data.m as usize {
            da[i] = (da[i] + db[i]) % p;
        }
        self.encode(&da)
    }

    pub fn neg(&self, a: FieldElement) -> FieldElement {
        let p = self.data.p;
        if self.is_prime_field() {
            return FieldElement((p - a.0) % p);
        }
        let mut da = [0u32; MAX_M];
        self.decode(a, &mut da);
        for d in da.iter_mut().take(self.data.m as usize) {
            *d = (p - *d) % p;
        }
        self.encode(&da)
    }

    pub fn sub(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        let p = self.data.p as u64;
        if self.is_prime_field() {
            return FieldElement(((a.0 as u64 * b.0 as u64) % p) as u32);
        }
        let m = self.data.m as usize;
        let (mut da, mut db) = ([0u32; MAX_M], [0u32; MAX_M]);
        self.decode(a, &mut da);
        self.decode(b, &mut db);
        // Schoolbook product, then reduce by the monic modulus.
        let mut prod = [0u64; 2 * MAX_M];
        for i in 0..m {
            if da[i] == 0 {
                continue;
            }
            for j in 0..m {
                prod[i + j] = (prod[i + j] + da[i] as u64 * db[j] as u64) % p;
            }
        }
        let modulus = &self.data.modulus;
        for deg in (m..2 * m - 1).rev() {
            let c = prod[deg];
            if c == 0 {
                continue;
            }
            prod[deg] = 0;
            for j in 0..m {
                let sub = c * modulus[j] as u64 % p;
                prod[deg - m + j] = (prod[deg - m + j] + p - sub) % p;
            }
        }
        let mut digits = [0u32; MAX_M];
        for i in 0..m {
            digits[i] = prod[i] as u32;
        }
        self.encode(&digits)
    }

    /// Multiplicative inverse, computed as a^(q-2).
    pub fn inv(&self, a: FieldElement) -> Result<FieldElement> {
        if a.is_zero() {
            return Err(Error::ZeroInverse);
        }
        Ok(self.pow_unsigned(a, self.data.q as u64 - 2))
    }

    /// `a^e`; negative exponents invert first, with 0^0 = 1.
    pub fn pow(&self, a: FieldElement, e: i64) -> Result<FieldElement> {
        if e >= 0 {
            Ok(self.pow_unsigned(a, e as u64))
        } else {
            let inv = self.inv(a)?;
            Ok(self.pow_unsigned(inv, e.unsigned_abs()))
        }
    }

    fn pow_unsigned(&self, a: FieldElement, mut e: u64) -> FieldElement {
        let mut base = a;
        let mut acc = FieldElement::ONE;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }
}

impl Serialize for FieldSpec {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Repr<'a> {
            p: u32,
            m: u32,
            modulus: &'a [u32],
        }
        Repr { p: self.data.p, m: self.data.m, modulus: &self.data.modulus }.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for FieldSpec {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Repr {
            p: u64,
            m: u32,
            modulus: Vec<u32>,
        }
        let repr = Repr::deserialize(deserializer)?;
        make_field(repr.p, repr.m, Some(&repr.modulus)).map_err(D::Error::custom)
    }
}

pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// Remainder of `a` divided by monic `b`, coefficients over Z_p, ascending.
fn zp_rem(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    let mut rem: Vec<u64> = a.iter().map(|&c| c as u64).collect();
    let db = b.len() - 1;
    let p64 = p as u64;
    while rem.len() > db {
        let lead = *rem.last().unwrap();
        let shift = rem.len() - 1 - db;
        if lead != 0 {
            for (j, &bc) in b.iter().enumerate() {
                let idx = shift + j;
                rem[idx] = (rem[idx] + p64 - lead * bc as u64 % p64) % p64;
            }
        }
        rem.pop();
    }
    rem.iter().map(|&c| c as u32).collect()
}

/// Brute-force irreducibility over GF(p): trial division by every monic
/// polynomial of degree 1..=deg/2.
fn zp_is_irreducible(coeffs: &[u32], p: u32) -> bool {
    let deg = coeffs.len() - 1;
    for d in 1..=deg / 2 {
        let count = (p as u64).pow(d as u32);
        for idx in 0..count {
            let mut divisor = Vec::with_capacity(d + 1);
            let mut v = idx;
            for _ in 0..d {
                divisor.push((v % p as u64) as u32);
                v /= p as u64;
            }
            divisor.push(1);
            if zp_rem(coeffs, &divisor, p).iter().all(|&c| c == 0) {
                return false;
            }
        }
    }
    true
}

/// Smallest monic irreducible of degree m over GF(p), ordered by the base-p
/// integer reading of the non-leading coefficients.
fn smallest_irreducible_zp(p: u32, m: usize) -> Vec<u32> {
    let count = (p as u64).pow(m as u32);
    for idx in 0..count {
        let mut coeffs = Vec::with_capacity(m + 1);
        let mut v = idx;
        for _ in 0..m {
            coeffs.push((v % p as u64) as u32);
            v /= p as u64;
        }
        coeffs.push(1);
        if zp_is_irreducible(&coeffs, p) {
            return coeffs;
        }
    }
    unreachable!("irreducible polynomials exist over every finite field for every degree")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_field_of_order_two() {
        let f = make_field(2, 1, None).unwrap();
        assert_eq!(f.order(), 2);
        let one = f.one();
        assert_eq!(f.add(one, one), f.zero());
    }

    #[test]
    fn default_modulus_gf4() {
        // The only irreducible monic quadratic over GF(2), out of the 4
        // monic quadratics x^2, x^2+1, x^2+x, x^2+x+1.
        let f = make_field(2, 2, None).unwrap();
        assert_eq!(f.modulus(), &[1, 1, 1]);
        assert_eq!(f.order(), 4);
    }

    #[test]
    fn non_prime_p_rejected() {
        assert!(matches!(make_field(4, 1, None), Err(Error::NonPrime(4))));
        assert!(matches!(make_field(1, 1, None), Err(Error::NonPrime(1))));
    }

    #[test]
    fn reducible_modulus_rejected() {
        // x^2 + 1 = (x+1)^2 over GF(2).
        assert!(make_field(2, 2, Some(&[1, 0, 1])).is_err());
        // Non-monic.
        assert!(make_field(3, 2, Some(&[1, 0, 2])).is_err());
    }

    #[test]
    fn gf4_multiplication() {
        let f = make_field(2, 2, None).unwrap();
        // x * x = x + 1 after reduction by x^2+x+1.
        let x = f.element(2).unwrap();
        let x_plus_1 = f.element(3).unwrap();
        assert_eq!(f.mul(x, x), x_plus_1);
    }

    #[test]
    fn gf3_inverse() {
        let f = make_field(3, 1, None).unwrap();
        let two = f.element(2).unwrap();
        assert_eq!(f.inv(two).unwrap(), two);
        assert!(f.inv(f.zero()).is_err());
    }

    #[test]
    fn enumeration_order() {
        let f2 = make_field(2, 1, None).unwrap();
        let encs: Vec<u32> = f2.elements().map(|e| e.encoding()).collect();
        assert_eq!(encs, vec![0, 1]);

        let f3 = make_field(3, 1, None).unwrap();
        assert_eq!(f3.elements().count(), 3);

        let f4 = make_field(2, 2, None).unwrap();
        let coeffs: Vec<Vec<u32>> = f4.elements().map(|e| f4.coeffs(e)).collect();
        assert_eq!(coeffs, vec![vec![0, 0], vec![1, 0], vec![0, 1], vec![1, 1]]);
    }

    #[test]
    fn field_axioms_exhaustive_small() {
        for (p, m) in [(2u64, 1u32), (3, 1), (5, 1), (2, 2), (3, 2), (2, 3), (7, 1), (2, 6)] {
            let f = make_field(p, m, None).unwrap();
            let els: Vec<FieldElement> = f.elements().collect();
            for &a in &els {
                // Inverses exist for every nonzero element.
                if !a.is_zero() {
                    let inv = f.inv(a).unwrap();
                    assert_eq!(f.mul(a, inv), f.one());
                }
                assert_eq!(f.add(a, f.neg(a)), f.zero());
                for &b in &els {
                    assert_eq!(f.add(a, b), f.add(b, a));
                    assert_eq!(f.mul(a, b), f.mul(b, a));
                    for &c in &els {
                        assert_eq!(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
                        assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
                        assert_eq!(
                            f.mul(a, f.add(b, c)),
                            f.add(f.mul(a, b), f.mul(a, c))
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn pow_handles_negative_exponents() {
        let f = make_field(5, 1, None).unwrap();
        let a = f.element(3).unwrap();
        let cube = f.pow(a, 3).unwrap();
        assert_eq!(f.mul(cube, f.pow(a, -3).unwrap()), f.one());
        assert_eq!(f.pow(f.zero(), 0).unwrap(), f.one());
        assert!(f.pow(f.zero(), -1).is_err());
    }

    #[test]
    fn spec_round_trips_through_json() {
        let f = make_field(3, 2, None).unwrap();
        let text = serde_json::to_string(&f).unwrap();
        assert_eq!(text, r#"{"p":3,"m":2,"modulus":[1,0,1]}"#);
        let back: FieldSpec = serde_json::from_str(&text).unwrap();
        assert_eq!(back, f);
    }

    #[test]
    fn order_cap_enforced() {
        assert!(matches!(make_field(2, 17, None), Err(Error::FieldTooLarge(_))));
        assert!(make_field(2, 16, None).is_ok());
    }
}
