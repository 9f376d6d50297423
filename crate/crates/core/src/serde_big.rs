//! Big integers serialize as exact JSON numbers (serde_json is built with
//! `arbitrary_precision`).

use std::str::FromStr;

use num_bigint::BigUint;
use serde::{Serialize, Serializer};

pub fn serialize<S: Serializer>(value: &BigUint, serializer: S) -> Result<S::Ok, S::Error> {
    serde_json::Number::from_str(&value.to_str_radix(10))
        .map_err(serde::ser::Error::custom)?
        .serialize(serializer)
}
