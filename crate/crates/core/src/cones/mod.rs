//! The string cone from explicit inequalities, from Littelmann's recursion and
//! from the Berenstein–Zelevinsky inequalities.

mod bz;
mod explicit;
mod form;
mod index;
mod littelmann;

pub use bz::{bz_form, bz_inequalities, bz_subwords, word_labels};
pub use explicit::{
    a_string_cone, cone_from_relations, cone_poset, lemma_b_literal_relations, poset_dot,
    poset_edges, product_split, string_cone_explicit, tilde_string_cone, Block, PosetLevel,
};
pub use form::{ConeH, CoordLabel, LinearForm, Relation};
pub use index::{DoubleIndex, IndexMap, Sign};
pub use littelmann::{littelmann_member, DeltaTable, LittelmannChecker};
