use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::IntPolynomial;

/// Laurent polynomial in `v` and `z` with integer coefficients.
///
/// Keys are `(v exponent, z exponent)`; zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly2 {
    terms: BTreeMap<(i64, i64), BigInt>,
}

/// One `c · v^v · z^z` term, as it appears in the JSON form.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LaurentTerm {
    pub v: i64,
    pub z: i64,
    #[serde(with = "super::bigint_json")]
    pub c: BigInt,
}

impl LaurentPoly2 {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(1, 0, 0)
    }

    pub fn monomial(c: impl Into<BigInt>, v: i64, z: i64) -> Self {
        let mut p = Self::zero();
        p.add_term(v, z, c.into());
        p
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (i64, i64, i64)>) -> Self {
        let mut p = Self::zero();
        for (v, z, c) in terms {
            p.add_term(v, z, c.into());
        }
        p
    }

    /// `Σ c_k v^(2k + shift)`, the substitution `x = v²` followed by a shift.
    pub fn from_poly_in_v_squared(p: &IntPolynomial, shift: i64) -> Self {
        let mut out = Self::zero();
        for (k, c) in p.coeffs().iter().enumerate() {
            out.add_term(2 * k as i64 + shift, 0, c.clone());
        }
        out
    }

    fn add_term(&mut self, v: i64, z: i64, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry((v, z)).or_default();
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&(v, z));
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, v: i64, z: i64) -> BigInt {
        self.terms.get(&(v, z)).cloned().unwrap_or_default()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn iter(&self) -> impl Iterator<Item = (i64, i64, &BigInt)> {
        self.terms.iter().map(|(&(v, z), c)| (v, z, c))
    }

    /// The `v`-polynomial multiplying `z^zexp`, returned with `z` exponent 0.
    pub fn coeff_of_z(&self, zexp: i64) -> Self {
        let terms = self
            .terms
            .iter()
            .filter(|((_, z), _)| *z == zexp)
            .map(|(&(v, _), c)| ((v, 0), c.clone()))
            .collect();
        Self { terms }
    }

    pub fn max_z_degree(&self) -> Option<i64> {
        self.terms.keys().map(|&(_, z)| z).max()
    }

    pub fn min_z_degree(&self) -> Option<i64> {
        self.terms.keys().map(|&(_, z)| z).min()
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        let mut out = Self::zero();
        for (&(v, z), a) in &self.terms {
            out.add_term(v, z, a * c);
        }
        out
    }

    /// Multiplies by `v^dv z^dz`.
    pub fn shift(&self, dv: i64, dz: i64) -> Self {
        let terms = self.terms.iter().map(|(&(v, z), c)| ((v + dv, z + dz), c.clone())).collect();
        Self { terms }
    }

    pub fn pow(&self, n: usize) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Terms sorted by descending `z`, then ascending `v`.
    pub fn to_terms(&self) -> Vec<LaurentTerm> {
        let mut out: Vec<LaurentTerm> =
            self.terms.iter().map(|(&(v, z), c)| LaurentTerm { v, z, c: c.clone() }).collect();
        out.sort_by(|a, b| b.z.cmp(&a.z).then(a.v.cmp(&b.v)));
        out
    }
}

impl fmt::Display for LaurentPoly2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for t in self.to_terms() {
            let sign = if t.c.is_negative() { '-' } else { '+' };
            write!(f, "{sign}{}v^{}z^{}", t.c.abs(), t.v, t.z)?;
        }
        Ok(())
    }
}

impl Serialize for LaurentPoly2 {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Out {
            terms: Vec<LaurentTerm>,
        }
        Out { terms: self.to_terms() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for LaurentPoly2 {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct In {
            terms: Vec<LaurentTerm>,
        }
        let mut p = LaurentPoly2::zero();
        for t in In::deserialize(d)?.terms {
            p.add_term(t.v, t.z, t.c);
        }
        Ok(p)
    }
}

impl Add for &LaurentPoly2 {
    type Output = LaurentPoly2;

    fn add(self, rhs: &LaurentPoly2) -> LaurentPoly2 {
        let mut out = self.clone();
        for (&(v, z), c) in &rhs.terms {
            out.add_term(v, z, c.clone());
        }
        out
    }
}

impl Sub for &LaurentPoly2 {
    type Output = LaurentPoly2;

    fn sub(self, rhs: &LaurentPoly2) -> LaurentPoly2 {
        let mut out = self.clone();
        for (&(v, z), c) in &rhs.terms {
            out.add_term(v, z, -c);
        }
        out
    }
}

impl Mul for &LaurentPoly2 {
    type Output = LaurentPoly2;

    fn mul(self, rhs: &LaurentPoly2) -> LaurentPoly2 {
        let mut out = LaurentPoly2::zero();
        for (&(v1, z1), a) in &self.terms {
            for (&(v2, z2), b) in &rhs.terms {
                out.add_term(v1 + v2, z1 + z2, a * b);
            }
        }
        out
    }
}

impl Neg for &LaurentPoly2 {
    type Output = LaurentPoly2;

    fn neg(self) -> LaurentPoly2 {
        LaurentPoly2 { terms: self.terms.iter().map(|(k, c)| (*k, -c)).collect() }
    }
}

macro_rules! forward_owned {
    ($($tr:ident $method:ident),*) => {$(
        impl $tr for LaurentPoly2 {
            type Output = LaurentPoly2;
            fn $method(self, rhs: LaurentPoly2) -> LaurentPoly2 {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&LaurentPoly2> for LaurentPoly2 {
            type Output = LaurentPoly2;
            fn $method(self, rhs: &LaurentPoly2) -> LaurentPoly2 {
                (&self).$method(rhs)
            }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl Neg for LaurentPoly2 {
    type Output = LaurentPoly2;

    fn neg(self) -> LaurentPoly2 {
        -&self
    }
}

impl One for LaurentPoly2 {
    fn one() -> Self {
        LaurentPoly2::one()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn lp(t: &[(i64, i64, i64)]) -> LaurentPoly2 {
        LaurentPoly2::from_terms(t.iter().copied())
    }

    #[test]
    fn hopf_top_extraction() {
        // v z + (v - v^3) z^-1
        let hopf = lp(&[(1, 1, 1), (1, -1, 1), (3, -1, -1)]);
        assert_eq!(hopf.coeff_of_z(1), lp(&[(1, 0, 1)]));
        assert_eq!(hopf.max_z_degree(), Some(1));
        assert_eq!(LaurentPoly2::one().coeff_of_z(0), LaurentPoly2::one());
        assert!(hopf.coeff_of_z(3).is_zero());
    }

    #[test]
    fn figure_table_top() {
        let p = lp(&[
            (3, 3, 1), (5, 3, 3), (7, 3, 3),
            (5, 1, 3), (7, 1, 4), (9, 1, -4),
            (7, -1, 2), (9, -1, -3), (11, -1, 1),
        ]);
        assert_eq!(p.coeff_of_z(3), lp(&[(3, 0, 1), (5, 0, 3), (7, 0, 3)]));
    }

    #[test]
    fn cancellation_keeps_canonical_form() {
        let a = lp(&[(1, 1, 2), (0, 0, 1)]);
        let b = lp(&[(1, 1, -2)]);
        assert_eq!(&a + &b, LaurentPoly2::one());
        assert_eq!((&a + &b).num_terms(), 1);
    }

    #[test]
    fn json_form() {
        let p = lp(&[(3, 3, 1), (1, -1, -1)]);
        let json = serde_json::to_string(&p).unwrap();
        assert_eq!(json, r#"{"terms":[{"v":3,"z":3,"c":1},{"v":1,"z":-1,"c":-1}]}"#);
        let back: LaurentPoly2 = serde_json::from_str(&json).unwrap();
        assert_eq!(back, p);
        assert_eq!(p.to_string(), "+1v^3z^3-1v^1z^-1");
    }

    #[test]
    fn substitution_in_v_squared() {
        let p = IntPolynomial::from_i64s(&[0, 0, 0, 1]);
        assert_eq!(LaurentPoly2::from_poly_in_v_squared(&p, -3), lp(&[(3, 0, 1)]));
    }

    fn arb_lp() -> impl Strategy<Value = LaurentPoly2> {
        prop::collection::vec((-4i64..4, -3i64..3, -5i64..5), 0..6).prop_map(|t| lp(&t))
    }

    proptest! {
        #[test]
        fn ring_axioms(a in arb_lp(), b in arb_lp(), c in arb_lp()) {
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a - &a, LaurentPoly2::zero());
        }

        #[test]
        fn slice_of_product_is_convolution_of_slices(a in arb_lp(), b in arb_lp(), zexp in -6i64..6) {
            let direct = (&a * &b).coeff_of_z(zexp);
            let mut conv = LaurentPoly2::zero();
            for za in -3..3 {
                conv = &conv + &(&a.coeff_of_z(za) * &b.coeff_of_z(zexp - za));
            }
            prop_assert_eq!(direct, conv);
        }
    }
}
