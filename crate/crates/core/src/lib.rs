//! Conjugacy class sizes of finite groups, the divisibility-cover graph on
//! them, and recognition of groups whose class sizes form a primitive set.

pub mod arith;
pub mod classgraph;
pub mod classifier;
pub mod error;
pub mod families;
pub mod gf;
pub mod groups;
pub mod predicates;
pub mod report;
pub mod specfile;
pub mod verify;

pub use error::{Error, Result};
pub use groups::{FiniteGroup, GroupElement, SubgroupHandle};
