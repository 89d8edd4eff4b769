//! Exact solution counts for linearized equations over finite fields.
//!
//! For nonzero `f_1, …, f_k ∈ F_q[x]` and degrees `d_i`, the equation
//! `L_{f_1}(x_1) + … + L_{f_k}(x_k) = b` with `x_i ∈ F_{q^{d_i}}` is solvable
//! iff `L_H(b) = 0`, where `H = (x^ℓ - 1)/G` and `G` is the gcd of `x^ℓ - 1`
//! with every `f_i·(x^ℓ - 1)/(x^{d_i} - 1)`; the number of solutions is then
//! `q^{Σ d_i - deg H}`. The crate also sizes subfield sumsets and solves
//! systems of prescribed traces, and ships brute-force oracles for all three.

pub mod arith;
pub mod base;
pub mod error;
pub mod field;
pub mod irreducible;
pub mod linalg;
pub mod linearized;
pub mod oracle;
pub mod poly;
pub mod solver;
pub mod verify;

pub use base::{BaseField, Fq, PrimePower};
pub use error::{Error, Result};
pub use field::{make_field, FieldCtx, FieldElem, FieldOp, FieldParams};
pub use poly::FqPoly;
