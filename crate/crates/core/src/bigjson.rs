//! Big integers as plain JSON numbers (needs serde_json's `arbitrary_precision`).

use num_bigint::BigInt;
use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

fn number(v: &BigInt) -> serde_json::Number {
    v.to_string().parse().expect("decimal integer is a valid JSON number")
}

pub(crate) struct Numbers<'a>(pub &'a [BigInt]);

impl Serialize for Numbers<'_> {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.0.len()))?;
        for v in self.0 {
            seq.serialize_element(&number(v))?;
        }
        seq.end()
    }
}

/// For `#[serde(serialize_with = "crate::bigjson::int")]`.
pub(crate) fn int<S: Serializer>(v: &BigInt, serializer: S) -> Result<S::Ok, S::Error> {
    number(v).serialize(serializer)
}
