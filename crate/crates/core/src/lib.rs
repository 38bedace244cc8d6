//! Generation and application of local symmetry-preserving operations on
//! embedded graphs, represented as decorations of chamber systems.

pub mod embedded;
pub mod decoration;
pub mod predecoration;
pub mod generator;
pub mod completion;
pub mod chamber;
pub mod catalog;
pub mod oracle;
