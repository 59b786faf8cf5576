use thiserror::Error;

use crate::farey::Wall;
use crate::partition::{BoxPos, Partition};

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("base must be at least 2, got {0}")]
    InvalidBase(u32),

    #[error("parts must be weakly decreasing and positive: {0:?}")]
    InvalidParts(Vec<usize>),

    #[error("cannot parse partition from {0:?}")]
    ParsePartition(String),

    #[error("cannot parse wall from {0:?}")]
    ParseWall(String),

    #[error("invalid wall {a}/{b}: need 0 < a/b <= 1")]
    InvalidWall { a: u64, b: u64 },

    #[error("Farey order must be at least 1")]
    InvalidOrder,

    #[error("{partition} is not {base}-regular")]
    NotRegular { partition: Partition, base: u32 },

    #[error("{partition} is not {base}-restricted")]
    NotRestricted { partition: Partition, base: u32 },

    #[error("{partition} is neither {base}-regular nor {base}-restricted")]
    NeitherRegularNorRestricted { partition: Partition, base: u32 },

    #[error("{0} cannot be added to {1}")]
    NotAddable(BoxPos, Partition),

    #[error("{0} cannot be removed from {1}")]
    NotRemovable(BoxPos, Partition),

    #[error("the empty partition has no rim")]
    EmptyPartition,

    #[error("no good addable box of residue {residue} on {partition} (base {base})")]
    MissingGoodAddable {
        partition: Partition,
        base: u32,
        residue: u32,
    },

    #[error("residue {residue} out of range for base {base}")]
    ResidueOutOfRange { residue: u32, base: u32 },

    #[error("box set is not a Young diagram (ladder value {ladder})")]
    NotAYoungDiagram { ladder: i64 },

    #[error("partitions have different sizes: {0} vs {1}")]
    SizeMismatch(usize, usize),

    #[error("{0} is not prime")]
    NotPrime(usize),

    #[error("crossing wall {wall}: {source}")]
    Step { wall: Wall, source: Box<Error> },
}
