//! Character computations over finite fields: cuspidal representations of
//! `GL_2(F_q)`, simple characters in characteristic 2, Kloosterman sums and
//! self-dual parameters.

pub mod cyclotomic;
pub mod green;
pub mod selfdual;
pub mod simple_cuspidal;
pub mod small_field;

pub use cyclotomic::Cyclo;
pub use green::{base_change_length, congruent_green, green_character_value, is_regular_green, CyclicExponent, GreenClass};
pub use selfdual::{selfdual_cuspidal_params, SelfDualParam};
pub use simple_cuspidal::{
    count_simple_cuspidals, iwahori_conjugation_action, kloosterman_value, simple_cuspidal_normal_form, SimpleCount,
};
pub use small_field::SmallField;
