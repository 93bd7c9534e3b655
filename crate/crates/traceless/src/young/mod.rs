//! Young-diagram combinatorics.

mod admissible;
mod characters;
mod lr;
mod partition;
mod tableau;

pub use admissible::{admissible_lambda, admissible_sigma, closure_set, closure_set_generic};
pub(crate) use admissible::{in_lambda, in_sigma};
pub use characters::{centralizer_order, class_size, factorial, hook_dim, mn_character};
pub use lr::{jdt_quotient, lr_coefficient, lr_coefficient_by_rectification};
pub use partition::{partitions_of, skew_content, transpose, Bound, Partition, SkewShape};
pub use tableau::{is_yamanouchi, rectify, rectify_with, semistandard_tableaux, Tableau};
