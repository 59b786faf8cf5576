//! Young diagrams crossing Farey walls: partitions, residue signatures, the
//! Mullineux involution, chamber orders and wall-crossing orbits.

pub mod conjectures;
pub mod crossing;
pub mod crystal;
pub mod error;
pub mod farey;
pub mod mullineux;
pub mod order;
pub mod partition;

pub use error::{Error, Result};
pub use farey::{farey_walls, Wall, WallSequence};
pub use partition::{enumerate_partitions, Base, BoxPos, Partition};

/// The guide's code samples, compiled as doctests.
#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/partitions.md")]
    mod partitions {}
    #[doc = include_str!("../../../book/src/farey.md")]
    mod farey {}
    #[doc = include_str!("../../../book/src/crystal.md")]
    mod crystal {}
    #[doc = include_str!("../../../book/src/mullineux.md")]
    mod mullineux {}
    #[doc = include_str!("../../../book/src/chambers.md")]
    mod chambers {}
    #[doc = include_str!("../../../book/src/crossing.md")]
    mod crossing {}
    #[doc = include_str!("../../../book/src/conjectures.md")]
    mod conjectures {}
}
