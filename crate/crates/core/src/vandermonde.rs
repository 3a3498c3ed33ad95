//! Exponent sets, generalized Vandermonde systems and the reduction of
//! multivariate HPGP to univariate instances.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::ff::{monomial_eval, Field, FieldElement, Matrix, MultiPoly};
use crate::oracle::{diagonal_restriction, Oracle};
use crate::solve::{univariate_hpgp_solver, HpgpPath};

/// `α ∈ N^j` with `Σα ≤ d`, `α_i ≤ min(d, q-1)`, `α ≠ 0`, graded by total
/// degree and then in decreasing lexicographic order (`x_1` before `x_2`).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExponentSet {
    pub q: u64,
    pub j: usize,
    pub d: usize,
    pub exponents: Vec<Vec<u32>>,
}

fn binom(n: i64, k: i64) -> i64 {
    if n < 0 || k < 0 || k > n {
        return 0;
    }
    (0..k).fold(1i64, |acc, i| acc * (n - i) / (i + 1))
}

/// `C(d + j, j) - 1`, valid when the local degree cap does not bind.
pub fn count_simple(j: usize, d: usize) -> usize {
    (binom((d + j) as i64, j as i64) - 1) as usize
}

/// `Σ_i (-1)^i C(j, i) C(d - iq + j, j) - 1`.
pub fn count_inclusion_exclusion(q: u64, j: usize, d: usize) -> usize {
    let total: i64 = (0..=j as i64)
        .map(|i| {
            let sign = if i % 2 == 0 { 1 } else { -1 };
            sign * binom(j as i64, i) * binom(d as i64 - i * q as i64 + j as i64, j as i64)
        })
        .sum();
    (total - 1) as usize
}

/// The closed form that applies: inclusion-exclusion once `q - 1 < d`.
pub fn count_exponents(q: u64, j: usize, d: usize) -> usize {
    if (q as usize) - 1 < d {
        count_inclusion_exclusion(q, j, d)
    } else {
        count_simple(j, d)
    }
}

pub fn exponent_set(q: u64, j: usize, d: usize) -> Result<ExponentSet> {
    if j == 0 {
        return Err(Error::Unsupported("need at least one variable".into()));
    }
    let b = d.min(q as usize - 1) as u32;
    let mut out = Vec::new();
    let mut cur = vec![0u32; j];
    loop {
        let s: u32 = cur.iter().sum();
        if s > 0 && s as usize <= d {
            out.push(cur.clone());
        }
        // Odometer over [0, b]^j.
        let mut i = 0;
        while i < j && cur[i] == b {
            cur[i] = 0;
            i += 1;
        }
        if i == j {
            break;
        }
        cur[i] += 1;
    }
    out.sort_by(|a, c| {
        let (sa, sc) = (a.iter().sum::<u32>(), c.iter().sum::<u32>());
        sa.cmp(&sc).then_with(|| c.cmp(a))
    });
    let set = ExponentSet { q, j, d, exponents: out };
    let expect = count_exponents(q, j, d);
    if set.exponents.len() != expect {
        return Err(Error::Inconsistent);
    }
    Ok(set)
}

impl ExponentSet {
    pub fn len(&self) -> usize {
        self.exponents.len()
    }

    pub fn is_empty(&self) -> bool {
        self.exponents.is_empty()
    }
}

/// `V^(j)` with its square, full-rank `M^(j) = [m_α(v)]`.
#[derive(Clone, Debug)]
pub struct VandermondeSystem {
    pub field: Field,
    pub exponents: ExponentSet,
    pub points: Vec<Vec<FieldElement>>,
    pub matrix: Matrix,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VandermondeJson {
    pub q: u64,
    pub n: usize,
    pub d: usize,
    pub exponents: Vec<Vec<u32>>,
    pub points: Vec<Vec<u32>>,
    pub matrix: Vec<Vec<u32>>,
    pub size: usize,
    pub rank: usize,
}

impl VandermondeSystem {
    pub fn to_json(&self) -> VandermondeJson {
        let m = &self.matrix;
        VandermondeJson {
            q: self.exponents.q,
            n: self.exponents.j,
            d: self.exponents.d,
            exponents: self.exponents.exponents.clone(),
            points: self.points.iter().map(|v| v.iter().map(|x| x.value()).collect()).collect(),
            matrix: (0..m.rows()).map(|r| m.row(r).iter().map(|x| x.value()).collect()).collect(),
            size: self.exponents.len(),
            rank: m.rank(),
        }
    }
}

fn row(field: &Field, exps: &ExponentSet, v: &[FieldElement]) -> Vec<FieldElement> {
    exps.exponents.iter().map(|a| monomial_eval(field, a, v)).collect()
}

fn eval_sparse(field: &Field, terms: &[(Vec<u32>, FieldElement)], v: &[FieldElement]) -> FieldElement {
    terms
        .iter()
        .fold(field.zero(), |acc, (a, c)| field.add(acc, field.mul(*c, monomial_eval(field, a, v))))
}

/// Build `V^(1), ..., V^(j)`.
fn build_levels(field: &Field, j: usize, d: usize) -> Result<Vec<VandermondeSystem>> {
    let q = field.q() as u64;
    let b = d.min(q as usize - 1);
    let mut levels: Vec<VandermondeSystem> = Vec::with_capacity(j);
    let e1 = exponent_set(q, 1, d)?;
    let v1: Vec<Vec<FieldElement>> = field.nonzero().take(b).map(|x| vec![x]).collect();
    let m1 = Matrix::from_rows(field, v1.iter().map(|v| row(field, &e1, v)).collect())?;
    levels.push(VandermondeSystem {
        field: field.clone(),
        exponents: e1,
        points: v1,
        matrix: m1,
    });
    for k in 2..=j {
        let exps = exponent_set(q, k, d)?;
        let mut points = vec![vec![field.one(); k]];
        let mut l = Matrix::from_rows(field, vec![row(field, &exps, &points[0])])?;
        let prev = &levels[k - 2].points;
        let first = &levels[0].points;
        let mut guard = 0;
        while let Some(c) = l.kernel_vector() {
            guard += 1;
            if guard > exps.len() + 1 {
                return Err(Error::Undetermined("Vandermonde construction did not converge".into()));
            }
            // G = Σ_i F_i(x_1..x_{k-1}) x_k^i; F is the nonzero F_i with smallest i.
            let g: Vec<(Vec<u32>, FieldElement)> = exps
                .exponents
                .iter()
                .cloned()
                .zip(c)
                .filter(|(_, c)| !c.is_zero())
                .collect();
            let i = g.iter().map(|(a, _)| a[k - 1]).min().expect("kernel vector is nonzero");
            let f: Vec<(Vec<u32>, FieldElement)> = g
                .iter()
                .filter(|(a, _)| a[k - 1] == i)
                .map(|(a, c)| (a[..k - 1].to_vec(), *c))
                .collect();
            // F may carry a constant term, so the origin joins V^(k-1).
            let origin = vec![field.zero(); k - 1];
            let v = prev
                .iter()
                .chain(std::iter::once(&origin))
                .find(|v| !eval_sparse(field, &f, v).is_zero())
                .ok_or(Error::Singular)?
                .clone();
            let zero = vec![field.zero()];
            let u = first
                .iter()
                .chain(std::iter::once(&zero))
                .map(|w| {
                    let mut u = v.clone();
                    u.push(w[0]);
                    u
                })
                .find(|u| !eval_sparse(field, &g, u).is_zero())
                .ok_or(Error::Singular)?;
            l.push_row(row(field, &exps, &u))?;
            points.push(u);
        }
        if points.len() != exps.len() {
            return Err(Error::Singular);
        }
        levels.push(VandermondeSystem {
            field: field.clone(),
            exponents: exps,
            points,
            matrix: l,
        });
    }
    Ok(levels)
}

pub fn build_vandermonde(q: u64, j: usize, d: usize) -> Result<VandermondeSystem> {
    let field = Field::with_order(q)?;
    build_vandermonde_over(&field, j, d)
}

pub fn build_vandermonde_over(field: &Field, j: usize, d: usize) -> Result<VandermondeSystem> {
    if j == 0 || d == 0 {
        return Err(Error::Unsupported("need j ≥ 1 and d ≥ 1".into()));
    }
    Ok(build_levels(field, j, d)?.pop().expect("j ≥ 1"))
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct InformationReport {
    pub monomials: usize,
    pub univariate_solves: usize,
    pub learned_bits: f64,
    pub lower_bound_bits: f64,
    pub ratio: f64,
}

/// Bits learned (`d |I| log2 q`) against the `|I| log2 q` needed.
pub fn information_ratio(q: u64, n: usize, d: usize, solves: usize) -> Result<InformationReport> {
    let size = count_exponents(q, n, d);
    let lg = (q as f64).log2();
    let learned = (d * solves) as f64 * lg;
    let lower = size as f64 * lg;
    Ok(InformationReport {
        monomials: size,
        univariate_solves: solves,
        learned_bits: learned,
        lower_bound_bits: lower,
        ratio: learned / lower,
    })
}

#[derive(Clone, Debug)]
pub struct MultivariateHpgpSolution {
    pub poly: MultiPoly,
    pub univariate_solves: usize,
    pub queries: u64,
    pub information: InformationReport,
}

/// Recover `Q` on `F_q^n` from an HPGP oracle indexed `x + q^n y` by
/// univariate solves along the diagonals `x_i = v_i x`, `v ∈ V^(n)`.
///
/// Each solve yields `Q_ℓ(v)` for every degree `ℓ`. The coefficients are
/// solved per degree and again from `M z = y` with `y_v = Σ_ℓ Q_ℓ(v)`;
/// the two must agree.
pub fn reduce_hpgp_multivariate<O: Oracle>(
    oracle: &O,
    field: &Field,
    n: usize,
    d: usize,
    path: HpgpPath,
) -> Result<MultivariateHpgpSolution> {
    let q = field.q() as usize;
    if q < d + 1 {
        return Err(Error::FieldTooSmall {
            q: field.q(),
            needed: d + 1,
        });
    }
    let before = oracle.query_count();
    let sys = build_vandermonde_over(field, n, d)?;
    let exps = &sys.exponents.exponents;
    let mut per_degree: Vec<Vec<FieldElement>> = Vec::with_capacity(sys.points.len());
    for v in &sys.points {
        let restricted = diagonal_restriction(oracle, field, v)?;
        let sol = univariate_hpgp_solver(&restricted, field, d, path)?;
        per_degree.push(sol.coefficients(d));
    }
    let solves = per_degree.len();

    let mut z = vec![field.zero(); exps.len()];
    for l in 1..=d {
        let cols: Vec<usize> = (0..exps.len())
            .filter(|&c| exps[c].iter().sum::<u32>() as usize == l)
            .collect();
        if cols.is_empty() {
            if per_degree.iter().any(|qv| !qv[l - 1].is_zero()) {
                return Err(Error::PromiseViolation(format!("degree {l} part beyond the exponent set")));
            }
            continue;
        }
        let sub = sys.matrix.select_columns(&cols);
        let y: Vec<FieldElement> = per_degree.iter().map(|qv| qv[l - 1]).collect();
        let part = sub.solve(&y).map_err(|e| match e {
            Error::Inconsistent => Error::PromiseViolation(format!("degree {l} values admit no polynomial")),
            other => other,
        })?;
        for (&c, val) in cols.iter().zip(part) {
            z[c] = val;
        }
    }
    let y: Vec<FieldElement> = per_degree
        .iter()
        .map(|qv| qv.iter().fold(field.zero(), |a, &b| field.add(a, b)))
        .collect();
    let whole = sys.matrix.solve(&y)?;
    if whole != z {
        return Err(Error::PromiseViolation("per-degree and summed systems disagree".into()));
    }
    let poly = MultiPoly::from_terms(field, n, exps.iter().cloned().zip(z))?;
    Ok(MultivariateHpgpSolution {
        poly,
        univariate_solves: solves,
        queries: oracle.query_count() - before,
        information: information_ratio(field.q() as u64, n, d, solves)?,
    })
}
