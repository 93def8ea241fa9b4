//! Exact character theory for symmetric and alternating groups.
//!
//! The crate computes character tables by the Murnaghan–Nakayama rule,
//! Kostka, Littlewood–Richardson and Kronecker coefficients, and the
//! covering numbers of irreducible and permutation characters: the least
//! power of a character that contains every irreducible as a constituent.
//!
//! ```
//! use symcover::{covering, Partition};
//!
//! let lambda: Partition = "3,2".parse().unwrap();
//! let run = covering::ccn_char(&lambda, 5).unwrap();
//! assert_eq!(run.result, covering::Covering::Covered(3));
//! ```
//!
//! All arithmetic is exact. Tables are indexed by the partitions of `n` in
//! descending lexicographic order (see [`partitions::enumerate_partitions`]).

pub mod alternating;
pub mod cache;
pub mod characters;
pub mod covering;
pub mod durfee;
mod error;
pub mod kronecker;
pub mod partitions;
pub mod tableaux;
pub mod verify;

pub use error::{Error, Result};
pub use partitions::{Partition, SkewShape};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/partitions.md")]
    mod partitions {}
    #[doc = include_str!("../../../book/src/tableaux.md")]
    mod tableaux {}
    #[doc = include_str!("../../../book/src/characters.md")]
    mod characters {}
    #[doc = include_str!("../../../book/src/kronecker.md")]
    mod kronecker {}
    #[doc = include_str!("../../../book/src/covering.md")]
    mod covering {}
    #[doc = include_str!("../../../book/src/alternating.md")]
    mod alternating {}
    #[doc = include_str!("../../../book/src/durfee.md")]
    mod durfee {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
