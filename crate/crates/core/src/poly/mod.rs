//! Exact polynomial arithmetic.
//!
//! Three value types, all in canonical form so that `==` is structural:
//! [`IntPolynomial`] (dense, univariate, integer coefficients),
//! [`PowerSeriesTrunc`] (rational power series truncated at a fixed order) and
//! [`LaurentPoly2`] (sparse Laurent polynomials in `v` and `z`).

mod int_poly;
mod laurent;
mod series;

pub use int_poly::IntPolynomial;
pub use laurent::{LaurentPoly2, LaurentTerm};
pub use series::{series_from_poly_over_power, PowerSeriesTrunc};

/// JSON encoding of big integers: a plain number when it fits in `i64`,
/// otherwise a decimal string.
pub mod bigint_json {
    use num_bigint::BigInt;
    use num_traits::ToPrimitive;
    use serde::de::{self, Deserializer, Visitor};
    use serde::Serializer;
    use std::fmt;

    pub fn serialize<S: Serializer>(n: &BigInt, s: S) -> Result<S::Ok, S::Error> {
        match n.to_i64() {
            Some(small) => s.serialize_i64(small),
            None => s.serialize_str(&n.to_string()),
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigInt, D::Error> {
        struct BigIntVisitor;

        impl Visitor<'_> for BigIntVisitor {
            type Value = BigInt;

            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("an integer or a decimal string")
            }

            fn visit_i64<E: de::Error>(self, v: i64) -> Result<BigInt, E> {
                Ok(v.into())
            }

            fn visit_u64<E: de::Error>(self, v: u64) -> Result<BigInt, E> {
                Ok(v.into())
            }

            fn visit_str<E: de::Error>(self, v: &str) -> Result<BigInt, E> {
                v.parse().map_err(|_| E::custom(format!("invalid integer `{v}`")))
            }
        }

        d.deserialize_any(BigIntVisitor)
    }

    pub mod vec {
        use num_bigint::BigInt;
        use serde::{Deserialize, Deserializer, Serialize, Serializer};

        #[derive(Serialize, Deserialize)]
        struct Wrap(#[serde(with = "super")] BigInt);

        pub fn serialize<S: Serializer>(v: &[BigInt], s: S) -> Result<S::Ok, S::Error> {
            s.collect_seq(v.iter().map(|n| Wrap(n.clone())))
        }

        pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<BigInt>, D::Error> {
            let v: Vec<Wrap> = Vec::deserialize(d)?;
            Ok(v.into_iter().map(|w| w.0).collect())
        }
    }
}
