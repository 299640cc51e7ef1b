//! Bounded-weight de Bruijn sequences.
//!
//! The cycle for the length-`n` strings over `{1..k}` with weight at least
//! `w` is the concatenation of the aperiodic prefixes of the necklaces of
//! weight at least `w`, in lexicographic order. The cycle for weight at most
//! `w` is the symbol-wise complement of the cycle for weight at least
//! `k*n - w + n`. This crate builds both cycles and decodes them: a window
//! can be ranked and a position unranked in time polynomial in `n` and `k`,
//! without walking the cycle.
//!
//! The same decoder gives universal cycles for `t`-subsets and
//! `t`-multisets through difference representatives (see [`subset`]).
//!
//! Counting and decoding are generic over the integer type used for counts
//! and ranks ([`Count`]). The aliases at the crate root pick
//! arbitrary precision; the `*64` variants use `u64` and fail with
//! [`Error::Overflow`] once a count no longer fits.
//!
//! ```
//! use bwdb::{Decoder, KString, Params};
//!
//! let params = Params::up(3, 4, 9).unwrap();
//! let cycle: String = bwdb::cycle::generate(&params)
//!     .map(|x| char::from_digit(x, 10).unwrap())
//!     .collect();
//! assert_eq!(cycle, "14423424324433343444");
//!
//! let decoder = Decoder::new(params).unwrap();
//! let s = KString::parse("423", 4).unwrap();
//! assert_eq!(decoder.rank(&s).unwrap(), 3u32.into());
//! assert_eq!(decoder.unrank(&3u32.into()).unwrap(), s);
//! ```

pub mod count;
pub mod counting;
pub mod cycle;
pub mod decode;
pub mod error;
pub mod necklace;
pub mod params;
pub mod selftest;
pub mod string;
pub mod subset;

#[cfg(test)]
mod testutil;

pub use count::Count;
pub use error::{Error, Result};
pub use params::{Direction, Params};
pub use string::{KString, Necklace, PqSplit, Symbol};
pub use subset::{Multiset, Subset};

use num_bigint::BigUint;

/// Arbitrary-precision count.
pub type BigCount = BigUint;

pub type Decoder = decode::Decoder<BigCount>;
pub type DecodeContext = counting::DecodeContext<BigCount>;
pub type WeightCounts = counting::WeightCounts<BigCount>;
pub type SubsetDecoder = subset::SubsetDecoder<BigCount>;
pub type MultisetDecoder = subset::MultisetDecoder<BigCount>;

pub type Decoder64 = decode::Decoder<u64>;
pub type DecodeContext64 = counting::DecodeContext<u64>;
pub type SubsetDecoder64 = subset::SubsetDecoder<u64>;
pub type MultisetDecoder64 = subset::MultisetDecoder<u64>;
