//! Linear groups over F_2 acting on spaces of forms.

mod forms;
mod matrix;
mod orbits;

pub use forms::{act, FormSpace, LinearRep, Quadric15, Quintic21};
pub use matrix::{enumerate_gl, generators, gl_order, GlIter, MatGF2};
pub use orbits::{
    quadric_orbits, stabilizer, stabilizers, OrbitTable, QuadricClasses, QUADRIC_CLASS_FORMS,
};
