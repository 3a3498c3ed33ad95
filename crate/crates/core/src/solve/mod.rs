//! Solvers: exhaustive HSP/HSSP, the simulated abelian coset sampler,
//! procedure R for univariate quadratics, univariate HPGP and the Grover scan.

mod brute;
mod grover;
mod quotient;
mod sampler;
mod univariate;

pub use brute::{brute_force_hsp, brute_force_hssp, find_linear_kernel, SubgroupFamily};
pub use grover::{grover_recover, grover_scan, GroverScan};
pub use quotient::{procedure_r, QuotientReport};
pub use sampler::{reconstruct_subgroup, same_subspace, CosetSampler};
pub use univariate::{univariate_hpgp_solver, HpgpPath, UnivariateSolution};
