//! Exact polynomial arithmetic, real and complex root isolation, and
//! Pisot/Salem classification.

mod classify;
mod poly;
mod roots;
mod sturm;

pub use classify::{
    classify_base_product, is_monic_integer, modulus_orderings, primitive_integer_part, unit_circle_census,
    unit_circle_root_count, BaseClass, UnitCircleCensus,
};
pub use poly::Poly;
pub use roots::{has_root_in, isolate_complex_roots, refine_root, refine_to, RootBox, RootKind};
pub use sturm::{bisect_step, cauchy_bound, cauchy_index, isolate_real_roots, SturmSequence};
