//! Finitely presented groupoids: words, connected components, spanning-tree
//! retractions onto object groups, quotients and free products.
//!
//! Words compose left to right. A retraction conjugates an arrow `g : x -> y`
//! to the loop `τ_x · g · τ_y^-1` at the basepoint.

mod group;
mod presentation;
mod tree;
mod word;

pub use group::{parse_group_word, render_word, GroupPresentation};
pub use presentation::{free_product, free_product_tagged, Arrow, FreeProduct, GroupoidPresentation, RelationFamily};
pub use tree::{
    object_group_presentation, object_group_with_tree, retract_arrow, rewrite_over_generators, spanning_tree,
    spanning_tree_ranked, SpanningTreeData, TreeEntry,
};
pub use word::{free_reduce, invert_letters, GroupWord, Ident, Letter, ObjectId, Sign, Word};
