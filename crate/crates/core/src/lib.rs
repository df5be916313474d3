//! Exact arithmetic for the free monoid generated by
//!
//! ```text
//!   L_u = [[1, 0], [u, 1]]      R_v = [[1, v], [0, 1]]      (u, v >= 1)
//! ```
//!
//! The crate computes the largest entry among all depth-`n` elements of the
//! monoid (closed forms reduced to Lucas sequences, explicit witness words,
//! and a brute-force oracle over the Calkin-Wilf style tree), provides the
//! polynomial dominance order used to compare left-column entries when
//! `v = 1`, and implements the BSV hash over `SL2(F_p)` together with the
//! string length below which it provably has no collisions.
//!
//! Module map:
//!
//! * [`matrix`]: `Mat2`, generator words, factorization.
//! * [`tree`]: rows and cells of the tree `T^(u,v)(M)`, dominance classes,
//!   bivariate entry polynomials, the brute-force maximum.
//! * [`extremal`]: Lucas pairs, the `(alpha, gamma)` system, exact and
//!   high-precision maximal entries, witnesses, collision horizon.
//! * [`poly`]: natural-coefficient polynomials and the dominance order.
//! * [`hash`]: BSV hash state, digests and the exhaustive collision checker.
//! * [`verify`]: the property suites behind `matmonoid verify`.
//! * [`cli`]: the command-line front end.

pub mod cli;
pub mod error;
pub mod extremal;
pub mod hash;
pub mod matrix;
pub mod poly;
pub mod prime;
pub mod tree;
pub mod verify;

pub use error::{Error, Result};
pub use extremal::{
    alpha_gamma, closed_form_float, collision_horizon, fseq, lucas, mu_depth, witness,
    AlphaGammaPair, DepthParity, LucasPair, Witness,
};
pub use hash::{Digest, HashParams, HashState};
pub use matrix::{factor, lmat, rmat, word_to_matrix, Letter, Mat2, MonoidParams, Word};
pub use poly::{BiPolyN, PolyN};
pub use tree::{DominanceClass, TreeRow};
