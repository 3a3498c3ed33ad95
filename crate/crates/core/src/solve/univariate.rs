use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ff::{lagrange_interpolate, Field, FieldElement, Poly};
use crate::oracle::Oracle;

/// How the univariate HPGP solver works.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum HpgpPath {
    /// Reduce to HSP over the function graph group, solve by brute force,
    /// then interpolate from the complement's generators.
    A,
    /// Match level sets of `(x, 0)` against `(0, y)`.
    B,
    /// Run both and require agreement.
    Both,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnivariateSolution {
    /// `Q - Q(0)`.
    pub poly: Poly,
    pub queries: u64,
    pub path: HpgpPath,
}

impl UnivariateSolution {
    /// `(Q_1, ..., Q_d)`.
    pub fn coefficients(&self, d: usize) -> Vec<FieldElement> {
        self.poly.padded(d)[1..].to_vec()
    }
}

/// Solve HPGP(F_q, 1, d) on an oracle over `F_q × F_q` indexed `x + q y`.
pub fn univariate_hpgp_solver<O: Oracle>(oracle: &O, field: &Field, d: usize, path: HpgpPath) -> Result<UnivariateSolution> {
    let q = field.q() as usize;
    if oracle.domain_size() != q * q {
        return Err(Error::DomainMismatch(oracle.domain_size()));
    }
    if q < d + 1 {
        return Err(Error::FieldTooSmall {
            q: field.q(),
            needed: d + 1,
        });
    }
    let before = oracle.query_count();
    let poly = match path {
        HpgpPath::A => crate::reduce::solve_hpgp1_via_hsp(oracle, field, d)?,
        HpgpPath::B => path_b(oracle, field, d)?,
        HpgpPath::Both => {
            let a = crate::reduce::solve_hpgp1_via_hsp(oracle, field, d)?;
            let b = path_b(oracle, field, d)?;
            if a != b {
                return Err(Error::PromiseViolation("paths A and B disagree".into()));
            }
            a
        }
    };
    Ok(UnivariateSolution {
        poly,
        queries: oracle.query_count() - before,
        path,
    })
}

/// `f(x, 0)` labels `-Q(x)` and `f(0, y)` labels `y - Q(0)`, so they agree
/// exactly at `y = Q(0) - Q(x)`.
fn path_b<O: Oracle>(oracle: &O, field: &Field, d: usize) -> Result<Poly> {
    let q = field.q() as usize;
    let mut column: HashMap<O::Output, FieldElement> = HashMap::with_capacity(q);
    for y in field.elements() {
        if column.insert(oracle.query(q * y.value() as usize), y).is_some() {
            return Err(Error::PromiseViolation("column x = 0 is not injective".into()));
        }
    }
    let mut points = vec![(field.zero(), field.zero())];
    for x in field.nonzero().take(d) {
        let y = column
            .get(&oracle.query(x.value() as usize))
            .ok_or_else(|| Error::PromiseViolation("row label missing from column x = 0".into()))?;
        points.push((x, field.neg(*y)));
    }
    lagrange_interpolate(field, &points, d)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ff::MultiPoly;
    use crate::oracle::{make_hpgp_oracle, Scrambled};

    fn solve(q: u64, d: usize, coeffs: &[u64], path: HpgpPath) -> Vec<u32> {
        let f = Field::with_order(q).unwrap();
        let p = Poly::from_values(&f, coeffs).unwrap();
        let inst = make_hpgp_oracle(&f, 1, &MultiPoly::from_univariate(&p), d).unwrap();
        let s = Scrambled::new(&inst.oracle, 11);
        let sol = univariate_hpgp_solver(&s, &f, d, path).unwrap();
        sol.coefficients(d).iter().map(|c| c.value()).collect()
    }

    #[test]
    fn examples() {
        assert_eq!(solve(5, 2, &[0, 0, 1], HpgpPath::Both), vec![0, 1]);
        assert_eq!(solve(5, 2, &[], HpgpPath::Both), vec![0, 0]);
        assert_eq!(solve(7, 3, &[0, 1, 0, 2], HpgpPath::B), vec![1, 0, 2]);
        assert_eq!(solve(5, 2, &[3, 0, 1], HpgpPath::B), vec![0, 1]);
    }

    #[test]
    fn path_b_query_count() {
        let f = Field::new(7, 1).unwrap();
        let p = Poly::from_values(&f, &[0, 1, 5]).unwrap();
        let inst = make_hpgp_oracle(&f, 1, &MultiPoly::from_univariate(&p), 2).unwrap();
        let sol = univariate_hpgp_solver(&inst.oracle, &f, 2, HpgpPath::B).unwrap();
        assert_eq!(sol.queries, 7 + 2);
    }

    #[test]
    fn paths_agree_exhaustively_small() {
        for q in [3u64, 5] {
            for idx in 0..q * q * q {
                let c = [idx % q, (idx / q) % q, idx / (q * q)];
                let a = solve(q, 2, &c, HpgpPath::A);
                let b = solve(q, 2, &c, HpgpPath::B);
                assert_eq!(a, b);
                assert_eq!(a, vec![c[1] as u32, c[2] as u32]);
            }
        }
    }

    #[test]
    fn field_too_small() {
        let f = Field::new(2, 1).unwrap();
        let o = crate::oracle::LevelSetOracle::new(4, |x| x as u64);
        assert!(matches!(
            univariate_hpgp_solver(&o, &f, 2, HpgpPath::B),
            Err(Error::FieldTooSmall { .. })
        ));
    }
}
