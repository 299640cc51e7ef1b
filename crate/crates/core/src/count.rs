//! Integer types usable for enumeration results and ranks.
//!
//! Every counting and decoding routine is generic over [`Count`]. Machine
//! integers (`u64`, `u128`) are fast but report [`Error::Overflow`] once a
//! count exceeds their range; [`num_bigint::BigUint`] never overflows.

use std::fmt::{Debug, Display};
use std::hash::Hash;
use std::ops::Div;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{CheckedAdd, CheckedMul, CheckedSub, FromPrimitive, One, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub trait Count:
    Clone
    + Ord
    + Hash
    + Debug
    + Display
    + FromStr
    + Zero
    + One
    + CheckedAdd
    + CheckedSub
    + CheckedMul
    + Div<Output = Self>
    + FromPrimitive
    + ToPrimitive
    + Send
    + Sync
    + 'static
{
}

impl Count for u64 {}
impl Count for u128 {}
impl Count for BigUint {}

pub(crate) fn add<C: Count>(a: &C, b: &C) -> Result<C> {
    a.checked_add(b).ok_or(Error::Overflow)
}

pub(crate) fn sub<C: Count>(a: &C, b: &C) -> Result<C> {
    a.checked_sub(b).ok_or(Error::Overflow)
}

pub(crate) fn mul<C: Count>(a: &C, b: &C) -> Result<C> {
    a.checked_mul(b).ok_or(Error::Overflow)
}

pub(crate) fn from_usize<C: Count>(v: usize) -> Result<C> {
    C::from_usize(v).ok_or(Error::Overflow)
}

/// Converts a count to `usize`, failing when it does not fit.
pub fn to_usize<C: Count>(v: &C) -> Result<usize> {
    v.to_usize().ok_or(Error::Overflow)
}

/// Parses a decimal count.
pub fn parse<C: Count>(text: &str) -> Result<C> {
    text.trim()
        .parse::<C>()
        .map_err(|_| Error::Parse(format!("{text:?} is not a non-negative integer")))
}

/// `base^exp` with overflow detection.
pub fn pow<C: Count>(base: u32, exp: usize) -> Result<C> {
    let b: C = C::from_u32(base).ok_or(Error::Overflow)?;
    let mut acc = C::one();
    for _ in 0..exp {
        acc = mul(&acc, &b)?;
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn machine_types_report_overflow() {
        assert_eq!(pow::<u64>(2, 64), Err(Error::Overflow));
        assert_eq!(pow::<u64>(2, 63).unwrap(), 1u64 << 63);
        assert!(pow::<BigUint>(2, 200).is_ok());
    }

    #[test]
    fn parse_rejects_garbage() {
        assert_eq!(parse::<u64>(" 17 ").unwrap(), 17);
        assert!(parse::<BigUint>("-3").is_err());
        assert!(parse::<u64>("x").is_err());
    }
}
