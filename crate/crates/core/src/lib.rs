//! Exact origami constructibility for real algebraic numbers.
//!
//! A real number can be folded from the unit segment exactly when it is
//! totally real and lies in a tower of square-root extensions. This crate
//! decides that for radical expressions, rewrites origami numbers using only
//! `hyp(a) = sqrt(1+a^2)`, and replays or searches fold constructions in
//! exact arithmetic.
//!
//! ## Examples
//!
//! - **`decide`** - verdicts, minimal polynomials and conjugate profiles
//! - **`minpoly_check`** - which polynomials have totally real roots
//! - **`synthesize`** - `sqrt` expressions rewritten with `hyp` only
//! - **`annihilators`** - companion-matrix polynomials for sums and products
//! - **`algebraic_arithmetic`** - exact arithmetic and comparison
//! - **`one_fifth`** - folding the point (1/5, 0) and writing its trace
//! - **`parallel`** - the nine-step parallel through a point
//! - **`angle_fold`** - folding an angle bisector onto the opposite side
//! - **`closure`** - breadth-first closure of the seed points
//! - **`render_svg`** - drawing a replayed trace
//!
//! ```bash
//! cargo run --example decide -- "sqrt(3+sqrt(5))"
//! cargo run --example one_fifth
//! ```
//!
//! ## Modules
//!
//! [`numeric`] and [`poly`] hold rationals, intervals and exact polynomial
//! algebra. [`annihilator`] builds polynomials vanishing at sums, products
//! and `hyp` of roots; [`algebraic`] uses them for arithmetic on
//! [`algebraic::AlgebraicNumber`]. [`expression`] parses, decides and
//! synthesizes. [`plane`] has the fold axioms, traces and closure search,
//! and [`cli`] is the command-line front end behind the `origami` binary.

pub mod algebraic;
pub mod annihilator;
pub mod cli;
pub mod expression;
pub mod numeric;
pub mod plane;
pub mod poly;
