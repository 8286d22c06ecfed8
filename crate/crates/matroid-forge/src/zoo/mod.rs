//! Concrete matroid families and the uniform-matroid procedures.

mod classify;
mod corpus;
mod gf2;
mod graphic;
mod partition;
mod uniform;

pub use classify::{
    base_exchange_with_uniform, classify_uniform, independent_or_spanning, BaseExchange,
    SetStatus, UniformClass,
};
pub use corpus::corpus;
pub use gf2::{LinearMatroidGf2, GF2_MAX_DIM};
pub use graphic::GraphicMatroid;
pub use partition::{Part, PartitionMatroid};
pub use uniform::UniformMatroid;
