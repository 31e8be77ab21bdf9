//! Arithmetic over F_2 and its extensions.

mod ext;
mod factor;
mod field;
mod moebius;
mod poly;
mod resultant;

pub use ext::{embed, embedding, roots_in_extension, roots_of_ext, UniPolyExt};
pub use factor::{factorize, squarefree_decomposition};
pub use field::{
    artin_schreier_count, artin_schreier_solve, field, is_irreducible, make_field, FieldCtx,
    FieldElem, MAX_EXTENSION_DEGREE,
};
pub use moebius::{apply_images, moebius_action, pgl2_stabilizer, MoebiusMap};
pub use poly::UniPolyF2;
pub use resultant::{binary_form_resultant, determinant, sylvester_resultant, BinaryForm};

