//! Exact descent statistics and quasisymmetric expansions for multisets of
//! permutations, together with the tableau bijections and decision procedures
//! that characterize when such a multiset is symmetric.

pub mod combinat;
pub mod error;
pub mod io;
pub mod ordered_partition;
pub mod perm;
pub mod psi;
pub mod qsym;
pub mod tableau;
pub mod verifier;

pub use combinat::{Partition, Subset, SubsetComposition};
pub use error::{Error, Result};
pub use ordered_partition::{enumerate_partitions, OrderedSetPartition};
pub use perm::{PermMultiset, Permutation, Word};
pub use qsym::{Basis, Classification, GradedVector};
pub use tableau::{StandardTableau, TableauPair};
