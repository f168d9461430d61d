//! Decimal-string serialization for big integers, keeping JSON output exact
//! and readable.

use num_bigint::BigUint;
use serde::Serializer;

pub fn serialize<S: Serializer>(value: &BigUint, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&value.to_string())
}
