//! Decidable invariants of group presentations: abelianization through the
//! integer Smith normal form, the rank-zero test excluding a `Z` retract, and
//! bounded Tietze simplification.

mod abelian;
mod snf;
mod tietze;

pub use abelian::{abelianization, no_z_retract_sufficient, relator_matrix, AbelianInvariants, RetractVerdict};
pub use snf::{smith_normal_form, IntegerMatrix};
pub use tietze::tietze_simplify;
