//! The affine symmetric group as affine permutations: length, descents,
//! support, parabolic quotients, Bruhat order and Poincaré polynomials.

mod affine;
mod bruhat;
mod io;
mod parabolic;
mod poly;
mod quotient;

pub use affine::{elements_up_to_length, AffinePermutation, MAX_PERIOD};
pub use bruhat::{bruhat_leq, bruhat_lower_interval, poincare_polynomial, DEFAULT_LENGTH_CAP};
pub use io::ElementJson;
pub use parabolic::ParabolicSubset;
pub use poly::Polynomial;
pub use quotient::{coset_decompose, coset_decompose_left, longest_element, longest_length};
