//! Serde adapters: big integers travel as decimal strings and rationals as
//! `{"num": "...", "den": "..."}` so no JSON consumer loses precision.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

#[derive(Serialize, Deserialize)]
pub struct RationalJson {
    pub num: String,
    pub den: String,
}

impl From<&BigRational> for RationalJson {
    fn from(q: &BigRational) -> Self {
        RationalJson {
            num: q.numer().to_string(),
            den: q.denom().to_string(),
        }
    }
}

impl RationalJson {
    fn parse<E: serde::de::Error>(&self) -> Result<BigRational, E> {
        let num: BigInt = self.num.parse().map_err(E::custom)?;
        let den: BigInt = self.den.parse().map_err(E::custom)?;
        if den == BigInt::from(0) {
            return Err(E::custom("zero denominator"));
        }
        Ok(BigRational::new(num, den))
    }
}

pub mod big {
    use super::*;

    pub fn serialize<S: Serializer>(x: &BigUint, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&x.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigUint, D::Error> {
        String::deserialize(d)?.parse().map_err(D::Error::custom)
    }
}

pub mod big_vec {
    use super::*;

    pub fn serialize<S: Serializer>(xs: &[BigUint], s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(xs.iter().map(|x| x.to_string()))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<BigUint>, D::Error> {
        Vec::<String>::deserialize(d)?
            .iter()
            .map(|x| x.parse().map_err(D::Error::custom))
            .collect()
    }
}

pub mod signed {
    use super::*;

    pub fn serialize<S: Serializer>(x: &BigInt, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&x.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigInt, D::Error> {
        String::deserialize(d)?.parse().map_err(D::Error::custom)
    }
}

pub mod signed_vec {
    use super::*;

    pub fn serialize<S: Serializer>(xs: &[BigInt], s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(xs.iter().map(|x| x.to_string()))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<BigInt>, D::Error> {
        Vec::<String>::deserialize(d)?
            .iter()
            .map(|x| x.parse().map_err(D::Error::custom))
            .collect()
    }
}

pub mod rational {
    use super::*;

    pub fn serialize<S: Serializer>(q: &BigRational, s: S) -> Result<S::Ok, S::Error> {
        RationalJson::from(q).serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigRational, D::Error> {
        RationalJson::deserialize(d)?.parse()
    }
}

pub mod rational_vec {
    use super::*;

    pub fn serialize<S: Serializer>(qs: &[BigRational], s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(qs.iter().map(RationalJson::from))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<BigRational>, D::Error> {
        Vec::<RationalJson>::deserialize(d)?
            .iter()
            .map(RationalJson::parse)
            .collect()
    }
}
