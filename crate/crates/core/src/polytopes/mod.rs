//! String polytopes, Lusztig polytopes and the maps between them.

mod enumerate;
mod lusztig;
mod string;

pub use enumerate::enumerate_h_rep;
pub(crate) use enumerate::ChainEnumerator;
pub use lusztig::{
    dual_weight, lusztig_box, lusztig_branching_h_rep, lusztig_branching_points,
    lusztig_branching_symbolic, lusztig_polytope_h_rep, lusztig_polytope_points,
    lusztig_polytope_symbolic, lusztig_to_string, string_to_lusztig, LusztigPoint, PsiData,
    SymbolicForm,
};
pub use string::{canonical_cone, string_polytope_points, weight_bound, StringPolytope};
