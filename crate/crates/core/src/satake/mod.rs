//! Unramified representations of classical groups through their Satake
//! parameters, and the explicit transfer to general linear groups.

pub mod group;
pub mod param;
pub mod transfer;

pub use group::{modulus_exponents, parse_group_name, GroupKind, GroupType};
pub use param::{GLParam, SatakeParam};
pub use transfer::{
    charpoly, congruent_mod_ell, det_twist, is_integral_gl, is_integral_satake, is_selfdual,
    same_support_mod_ell, so2_split_transfer, sqrt_flip, transfer, unramified_base_change,
};
