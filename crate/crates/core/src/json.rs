//! JSON helpers for arbitrary-precision integers.
//!
//! Counts outgrow `u64` quickly, so they are written as exact JSON numbers
//! through `serde_json`'s arbitrary-precision `Number`.

use std::fmt::Display;

use serde::ser::{Error as _, SerializeSeq};
use serde::{Serialize, Serializer};

pub(crate) struct BigNum<'a, T>(pub &'a T);

impl<T: Display> Serialize for BigNum<'_, T> {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let n: serde_json::Number = self.0.to_string().parse().map_err(S::Error::custom)?;
        n.serialize(serializer)
    }
}

pub(crate) struct BigSeq<'a, T>(pub &'a [T]);

impl<T: Display> Serialize for BigSeq<'_, T> {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.0.len()))?;
        for x in self.0 {
            seq.serialize_element(&BigNum(x))?;
        }
        seq.end()
    }
}

pub(crate) fn serialize_big<T: Display, S: Serializer>(x: &T, s: S) -> Result<S::Ok, S::Error> {
    BigNum(x).serialize(s)
}
