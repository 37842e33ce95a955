//! Exact digit frequencies of repeating base-b expansions of m/p, predicted
//! from class numbers of imaginary quadratic fields and verified against
//! long-division oracles.
//!
//! For a prime p = 3 mod 4 (p > 3) whose period length in base 10 is
//! (p-1)/2, the count of each digit k in one period of m/p is
//!
//! ```text
//! n_k = (floor((k+1)p/10) - floor(kp/10) + delta_k) / 2,
//! n_{9-k} = n_k - delta_k,
//! ```
//!
//! where the integers delta_k are explicit combinations of h(Q(sqrt(-p)))
//! and h(Q(sqrt(-5p))). Analogous displays cover 10 a primitive root
//! (odd/even positions split), residues of smaller order (coset-aggregated
//! counts), the octal expansion (with h(Q(sqrt(-2p)))), and the zero-digit
//! count for p = 1 mod 4 via a generalized Bernoulli number over the
//! Gaussian rationals.
//!
//! Modules:
//! - [`modular`]: residues, Legendre/Kronecker symbols, orders, the digit
//!   function, residue interval counts.
//! - [`expansion`]: long-division periods, frequency tables, parity splits,
//!   coset aggregation.
//! - [`classnum`]: class numbers by reduced-form enumeration and by the
//!   finite character-sum formula.
//! - [`theorems`]: the delta vectors and per-regime predictors,
//!   classification, the mean-digit-sum diagnostic, Artin's constant.
//! - [`report`]: per-prime prediction/verification reports.
//! - [`cli`]: the command-line surface.

pub mod classnum;
pub mod cli;
pub mod error;
pub mod expansion;
pub mod modular;
pub mod primes;
pub mod report;
pub mod theorems;

pub use error::{Error, Result};
