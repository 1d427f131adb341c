//! Exact solvers for one-dimensional, finite-horizon, box-constrained
//! minimax control, together with the machinery that builds provably
//! optimal affine disturbance-feedback policies and affine stage-cost
//! relaxations.
//!
//! The crate is organized around a closed algebra of convex piecewise
//! affine functions ([`pwa`]), an exact backward recursion ([`dp`]),
//! plane zonogon geometry ([`zonogon`]), the forward-induction policy
//! construction ([`construct`]), LP reformulations ([`reform`]) backed
//! by a self-contained simplex kernel ([`lp`]), independent certificate
//! checkers ([`verify`]), and a retailer-supplier application
//! ([`inventory`]).

pub mod construct;
pub mod dp;
pub mod inventory;
pub mod lp;
pub mod pwa;
pub mod reform;
pub mod verify;
pub mod zonogon;

pub use dp::{normalize, solve_dp, DpSolution, Instance, Stage, TransformRecord};
pub use pwa::PwaConvex;
pub use zonogon::{AffineExpr, Zonogon};
