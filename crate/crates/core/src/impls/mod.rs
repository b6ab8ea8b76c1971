//! Concrete independence oracles.

mod graphic;
mod partition;
mod uniform;
mod union_find;

pub use graphic::GraphicMatroid;
pub use partition::PartitionMatroid;
pub use uniform::UniformMatroid;
pub use union_find::UnionFind;
