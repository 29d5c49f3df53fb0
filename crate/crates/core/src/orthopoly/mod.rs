//! Polynomials in `z` over `Q(q)`, the Favard three-term recurrence engine
//! and the big q-Jacobi families built on it.

mod families;
mod favard;
mod zpoly;

pub use families::{
    affine_transform, affine_transform_data, build_j_via_phi, build_j_via_recurrence,
    build_jtilde_via_phi, build_p_via_phi2, coeffs_ab, coeffs_monic, coeffs_p, family_polys,
    favard_jtilde, favard_p, p1_at_zero_closed, p_from_jtilde, FamilyId, FamilyKind,
};
pub use favard::{three_term_build, Coeffs, FavardData};
pub use zpoly::ZPoly;
