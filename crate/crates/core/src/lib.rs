//! Exact definiteness decisions for binary quartic forms
//! `e₄x⁴ + e₃x³y + e₂x²y² + e₁xy³ + e₀y⁴`.
//!
//! A monic form is written as `vᵀ M_λ v` with `v = (x², xy, y²)` for a
//! one-parameter pencil of symmetric matrices `M_λ`. Positive
//! (semi)definiteness reduces to two sign tests at the larger stationary
//! point λ₀ of `g(λ) = det M_λ`, evaluated exactly in `Q(√d)`. Positive
//! semidefinite verdicts carry `M_λ₀` as a checkable certificate and
//! indefinite ones carry two rational sign witnesses.
//!
//! Modules, bottom up:
//! - [`exactnum`]: rationals, `p + q√d`, decimal rendering.
//! - [`forms`]: coefficient normalisation and evaluation.
//! - [`pencil`]: `M_λ`, `g(λ)`, λ₀.
//! - [`positivity`]: the decision, certificates, negative side.
//! - [`classifier`]: the nine root configurations, root counts, oracles.
//! - [`classical`]: the discriminant-based criterion, used as a cross-check.
//! - [`report`], [`cli`]: JSON/text reports and the command surface.

pub mod classical;
pub mod classifier;
pub mod cli;
pub mod corpus;
pub mod error;
pub mod exactnum;
pub mod forms;
pub mod pencil;
pub mod positivity;
pub mod report;
