//! Reductions: HSSP to HSP via strong bases, the HQPP equivalences, the
//! quadratic HPP engine, HPGP(1, d) to HSP over function graph groups and
//! the `Z_p^m ⋊ Z_p` construction.

mod fg;
mod hqpp;
mod lift;
mod quadratic;
mod zpmzp;

pub use fg::{hpgp1_as_hssp, hpgp1_to_hsp, recover_poly_from_complement, solve_hpgp1_via_hsp};
pub use hqpp::{
    affine_hsp_to_hqpp, hqpp_subgroup, hqpp_to_hssp, hssp_to_hqpp, solve_hqpp_brute_force, u_from_subgroup,
};
pub use lift::{check_lifted_promise, hidden_subgroup, lift_hssp_to_hsp, lift_unchecked};
pub use quadratic::{
    coefficient_labels, normalize, quadratic_coefficients, solve_bivariate_quadratic, solve_multivariate_quadratic,
    LineRecord, QuadraticSolution, ALL_BRANCHES, R_CALL_CONSTANT,
};
pub use zpmzp::{nilpotency_index, zpmzp_to_hpgp, ZpmzpSolution};
