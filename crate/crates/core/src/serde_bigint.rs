//! JSON encoding for big integers: a plain number when it fits in `i64`,
//! otherwise a decimal string. Both forms are accepted on input.

use num_bigint::BigInt;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum Repr {
    Int(i64),
    Text(String),
}

fn to_repr(v: &BigInt) -> Repr {
    match i64::try_from(v) {
        Ok(i) => Repr::Int(i),
        Err(_) => Repr::Text(v.to_string()),
    }
}

fn from_repr<E: serde::de::Error>(r: Repr) -> Result<BigInt, E> {
    match r {
        Repr::Int(i) => Ok(BigInt::from(i)),
        Repr::Text(s) => s.parse().map_err(|_| E::custom(format!("not an integer: {s}"))),
    }
}

pub mod vec {
    use super::*;

    pub fn serialize<S: Serializer>(v: &[BigInt], s: S) -> Result<S::Ok, S::Error> {
        let reprs: Vec<Repr> = v.iter().map(to_repr).collect();
        reprs.serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<BigInt>, D::Error> {
        let reprs = Vec::<Repr>::deserialize(d).map_err(D::Error::custom)?;
        reprs.into_iter().map(from_repr).collect()
    }
}
