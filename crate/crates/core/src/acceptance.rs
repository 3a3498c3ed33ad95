//! The acceptance battery. Each check recomputes its expected values by a
//! route independent of the code under test where one exists.

use std::collections::{BTreeSet, HashSet};
use std::sync::Arc;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::base::{deterministic_base_pm1, random_base, random_base_size, separator_table, verify_base};
use crate::error::Result;
use crate::ff::{Field, FieldElement, MultiPoly, Poly};
use crate::group::{all_subgroups, Action, Group, Partition, Subgroup};
use crate::oracle::{
    make_grover_oracle, make_hpgp_oracle, make_hpp_oracle, make_hqpp_oracle, make_hsp_oracle, make_hssp_oracle,
    Hidden, Oracle, Scrambled,
};
use crate::reduce::{
    affine_hsp_to_hqpp, hqpp_subgroup, hqpp_to_hssp, lift_hssp_to_hsp, solve_hqpp_brute_force, solve_multivariate_quadratic,
    u_from_subgroup, ALL_BRANCHES,
};
use crate::solve::{brute_force_hsp, brute_force_hssp, grover_recover, grover_scan, univariate_hpgp_solver, HpgpPath, SubgroupFamily};
use crate::vandermonde::{build_vandermonde, exponent_set, reduce_hpgp_multivariate};

#[derive(Clone, Debug, Serialize)]
pub struct CriterionResult {
    pub id: u8,
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
    pub elapsed_s: f64,
    pub budget_s: f64,
}

impl CriterionResult {
    pub fn line(&self) -> String {
        format!(
            "{} [{}] {}: {} ({:.2} s of {} s)",
            if self.passed { "PASS" } else { "FAIL" },
            self.id,
            self.name,
            self.detail,
            self.elapsed_s,
            self.budget_s
        )
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct AcceptanceReport {
    pub quick: bool,
    pub results: Vec<CriterionResult>,
}

impl AcceptanceReport {
    pub fn passed(&self) -> bool {
        self.results.iter().all(|r| r.passed)
    }
}

type Check = fn(bool) -> Result<(bool, String)>;

const CRITERIA: &[(u8, &str, f64, Check)] = &[
    (1, "lifted oracle soundness", 60.0, lifted_soundness),
    (2, "separator bound", 30.0, separator_bound),
    (3, "randomized base failure rate", 120.0, random_base_rate),
    (4, "HQPP equivalence chain", 120.0, hqpp_chain),
    (5, "multivariate quadratic recovery", 300.0, quadratic_recovery),
    (6, "generalized Vandermonde", 120.0, vandermonde_grid),
    (7, "multivariate HPGP end to end", 300.0, hpgp_end_to_end),
    (8, "HPGP to HSP path", 60.0, hpgp_path_a),
    (9, "Grover as HSSP", 10.0, grover),
    (10, "Galois connection", 60.0, galois),
];

pub fn criterion_ids() -> Vec<u8> {
    CRITERIA.iter().map(|c| c.0).collect()
}

/// Run one criterion; the budget is part of the verdict.
pub fn run_criterion(id: u8, quick: bool) -> Option<CriterionResult> {
    let &(id, name, budget, check) = CRITERIA.iter().find(|c| c.0 == id)?;
    let start = Instant::now();
    let (mut passed, mut detail) = match check(quick) {
        Ok(r) => r,
        Err(e) => (false, format!("error: {e}")),
    };
    let elapsed = start.elapsed().as_secs_f64();
    if elapsed > budget {
        passed = false;
        detail.push_str("; over time budget");
    }
    Some(CriterionResult {
        id,
        name,
        passed,
        detail,
        elapsed_s: elapsed,
        budget_s: budget,
    })
}

pub fn run_all(quick: bool) -> AcceptanceReport {
    AcceptanceReport {
        quick,
        results: CRITERIA.iter().filter_map(|c| run_criterion(c.0, quick)).collect(),
    }
}

/// `Aff_q(H)` for `q ∈ {5,7,9,11,13}` and `1 < |H| < q - 1`.
fn frobenius_grid() -> Result<Vec<(Field, Vec<FieldElement>)>> {
    let mut out = Vec::new();
    for q in [5u64, 7, 9, 11, 13] {
        let f = Field::with_order(q)?;
        for order in 2..(q as u32 - 1) {
            if (q as u32 - 1).is_multiple_of(order) {
                out.push((f.clone(), f.multiplicative_subgroup(order)?));
            }
        }
    }
    Ok(out)
}

fn lifted_soundness(_quick: bool) -> Result<(bool, String)> {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let (mut instances, mut pairs) = (0usize, 0usize);
    for (f, h) in frobenius_grid()? {
        let action = Action::kernel(Arc::new(Group::affine(&f, &h)?));
        let g = action.group().clone();
        let base = loop {
            let b = random_base(&action, 0.25, &mut rng)?;
            if verify_base(&b)? {
                break b;
            }
        };
        for c in f.elements() {
            // H_c = {(c(1 - a), a)} straight from the fixed-point equation.
            let hc: HashSet<usize> = h
                .iter()
                .map(|&a| g.affine_element(f.mul(c, f.sub(f.one(), a)), a))
                .collect::<Result<_>>()?;
            let sub = Subgroup::from_elements(&g, &hc.iter().copied().collect::<Vec<_>>())?;
            let inst = make_hssp_oracle(action.clone(), &sub)?;
            let lifted = lift_hssp_to_hsp(inst, &base)?;
            let labels: Vec<_> = (0..g.order()).map(|x| lifted.oracle.query(x)).collect();
            for x in 0..g.order() {
                for y in 0..g.order() {
                    let same_coset = hc.contains(&g.mul(x, g.inv(y)));
                    if (labels[x] == labels[y]) != same_coset {
                        return Ok((false, format!("q={} |H|={} c={} pair ({x},{y})", f.q(), h.len(), c.value())));
                    }
                    pairs += 1;
                }
            }
            instances += 1;
        }
    }
    Ok((true, format!("{instances} instances, {pairs} element pairs")))
}

fn separator_bound(_quick: bool) -> Result<(bool, String)> {
    let mut checked = 0;
    for (f, h) in frobenius_grid()? {
        let action = Action::kernel(Arc::new(Group::affine(&f, &h)?));
        let k = f.q() as usize;
        let table = separator_table(&action)?;
        for (u, v, n) in table {
            let (fu, fv) = (FieldElement::from_index(u), FieldElement::from_index(v));
            // z separates u, v iff v + z ∉ H (u + z).
            let direct = f
                .elements()
                .filter(|&z| {
                    let (uz, vz) = (f.add(fu, z), f.add(fv, z));
                    !h.iter().any(|&a| f.mul(a, uz) == vz)
                })
                .count();
            if direct != n || n < k - h.len() + 1 || 2 * n <= k {
                return Ok((false, format!("q={} |H|={} pair ({u},{v}) count {n}", f.q(), h.len())));
            }
            checked += 1;
        }
    }
    Ok((true, format!("{checked} pairs meet |K|-|H|+1 and |K|/2")))
}

fn random_base_rate(_quick: bool) -> Result<(bool, String)> {
    let f9 = Field::new(3, 2)?;
    let f13 = Field::new(13, 1)?;
    let groups = [
        Group::affine_pm1(&f9)?,
        Group::affine(&f13, &f13.multiplicative_subgroup(3)?)?,
    ];
    let trials = 200;
    let mut notes = Vec::new();
    for g in groups {
        let action = Action::kernel(Arc::new(g));
        let k = action.domain_size();
        for eps in [0.25f64, 1.0 / 16.0] {
            let pairs = (k * (k - 1) / 2) as f64;
            let l = (pairs.log2() + (1.0 / eps).log2()).ceil() as usize;
            if random_base_size(k, eps)? != l {
                return Ok((false, format!("base size mismatch for |K|={k}, eps={eps}")));
            }
            let mut rng = ChaCha8Rng::seed_from_u64(0xba5e + k as u64);
            let mut failures = 0;
            for _ in 0..trials {
                let b = random_base(&action, eps, &mut rng)?;
                if !verify_base(&b)? {
                    failures += 1;
                }
            }
            let rate = failures as f64 / trials as f64;
            let bound = eps + 3.0 * (eps * (1.0 - eps) / trials as f64).sqrt();
            if rate > bound {
                return Ok((false, format!("|K|={k} eps={eps}: rate {rate} > {bound:.4}")));
            }
            notes.push(format!("|K|={k} eps={eps} l={l} rate={rate}"));
        }
    }
    Ok((true, notes.join("; ")))
}

fn hqpp_chain(_quick: bool) -> Result<(bool, String)> {
    let mut solved = 0;
    for q in [5u64, 7, 9, 27] {
        let f = Field::with_order(q)?;
        for u in f.elements() {
            let hssp = hqpp_to_hssp(make_hqpp_oracle(&f, u)?)?;
            let action = hssp.action().expect("group setting").clone();
            let g = action.group().clone();
            let base = deterministic_base_pm1(&action)?;
            let lifted = lift_hssp_to_hsp(hssp, &base)?;
            let h = brute_force_hsp(&Scrambled::new(&lifted.oracle, q), &g, &SubgroupFamily::Any)?;
            let route1 = u_from_subgroup(&g, &h)?;

            let hsp = make_hsp_oracle(g.clone(), &hqpp_subgroup(&g, u)?)?;
            let folded = affine_hsp_to_hqpp(&hsp.oracle, g.clone())?;
            let route2 = solve_hqpp_brute_force(&folded, &f)?;
            if route1 != u || route2 != u {
                return Ok((false, format!("q={q} u={}", u.value())));
            }
            solved += 1;
        }
    }
    Ok((true, format!("{solved} values of u recovered by both routes")))
}

/// Coefficient vector in engine order drawn from one of several structural strata.
fn stratified_quadratic(rng: &mut ChaCha8Rng, f: &Field, n: usize, stratum: usize) -> Vec<FieldElement> {
    let q = f.q() as usize;
    let len = n * (n + 3) / 2;
    let ncross = n * (n - 1) / 2;
    let square = |i: usize| i < n;
    let cross = |i: usize| i >= n && i < n + ncross;
    let linear = |i: usize| i >= n + ncross;
    let nonzero = |rng: &mut ChaCha8Rng| FieldElement::from_index(rng.gen_range(1..q));
    let any = |rng: &mut ChaCha8Rng| FieldElement::from_index(rng.gen_range(0..q));
    loop {
        let mut v = vec![f.zero(); len];
        match stratum % 6 {
            0 => v.iter_mut().for_each(|c| *c = any(rng)),
            1 => v.iter_mut().for_each(|c| {
                if rng.gen_bool(1.0 / 3.0) {
                    *c = nonzero(rng)
                }
            }),
            2 => (0..len).filter(|&i| !square(i)).for_each(|i| v[i] = any(rng)),
            3 => (0..len).filter(|&i| cross(i)).for_each(|i| {
                if rng.gen_bool(0.5) {
                    v[i] = nonzero(rng)
                }
            }),
            4 => (0..len).filter(|&i| linear(i)).for_each(|i| v[i] = any(rng)),
            _ => {
                if n >= 4 && rng.gen_bool(0.5) {
                    // a_ij x_i x_j + a_kl x_k x_l on disjoint pairs.
                    let mut vars: Vec<usize> = (0..n).collect();
                    for i in (1..n).rev() {
                        vars.swap(i, rng.gen_range(0..=i));
                    }
                    for pair in [(vars[0], vars[1]), (vars[2], vars[3])] {
                        let (i, j) = (pair.0.min(pair.1), pair.0.max(pair.1));
                        v[n + i * (2 * n - i - 1) / 2 + (j - i - 1)] = nonzero(rng);
                    }
                } else {
                    let i = rng.gen_range(0..len);
                    v[i] = nonzero(rng);
                }
            }
        }
        if q == 2 {
            (0..n).for_each(|i| v[i] = f.zero());
        }
        if v.iter().any(|c| !c.is_zero()) {
            return v;
        }
    }
}

fn vector_to_poly(f: &Field, n: usize, v: &[FieldElement]) -> Result<MultiPoly> {
    let mut terms = Vec::new();
    let mut idx = 0;
    for i in 0..n {
        let mut e = vec![0u32; n];
        e[i] = 2;
        terms.push((e, v[idx]));
        idx += 1;
    }
    for i in 0..n {
        for j in i + 1..n {
            let mut e = vec![0u32; n];
            e[i] = 1;
            e[j] = 1;
            terms.push((e, v[idx]));
            idx += 1;
        }
    }
    for i in 0..n {
        let mut e = vec![0u32; n];
        e[i] = 1;
        terms.push((e, v[idx]));
        idx += 1;
    }
    MultiPoly::from_terms(f, n, terms)
}

fn is_scalar_multiple(f: &Field, got: &[FieldElement], truth: &[FieldElement]) -> bool {
    let Some(i) = truth.iter().position(|c| !c.is_zero()) else {
        return false;
    };
    if got[i].is_zero() {
        return false;
    }
    let lambda = f.div(got[i], truth[i]).expect("nonzero");
    got.iter().zip(truth).all(|(&g, &t)| g == f.mul(lambda, t))
}

fn quadratic_recovery(quick: bool) -> Result<(bool, String)> {
    let per = if quick { 30 } else { 500 };
    let mut branches: BTreeSet<String> = BTreeSet::new();
    let mut max_c = 0.0f64;
    let mut total = 0;
    for n in 2..=5usize {
        for q in [2u64, 3, 5, 7, 9] {
            let f = Field::with_order(q)?;
            let mut rng = ChaCha8Rng::seed_from_u64(1000 * n as u64 + q);
            for t in 0..per {
                let truth = stratified_quadratic(&mut rng, &f, n, t);
                let p = vector_to_poly(&f, n, &truth)?;
                let inst = make_hpp_oracle(&f, n, &p)?;
                let sol = solve_multivariate_quadratic(&Scrambled::new(&inst.oracle, t as u64), &f, n)?;
                if !is_scalar_multiple(&f, &sol.coefficients(), &truth) {
                    return Ok((false, format!("n={n} q={q} trial {t}: wrong coefficients")));
                }
                if sol.r_calls > crate::reduce::R_CALL_CONSTANT * n * n {
                    return Ok((false, format!("n={n} q={q} trial {t}: {} R calls", sol.r_calls)));
                }
                max_c = max_c.max(sol.r_calls as f64 / (n * n) as f64);
                branches.extend(sol.branches);
                total += 1;
            }
        }
    }
    let missing: Vec<&str> = ALL_BRANCHES.iter().copied().filter(|b| !branches.contains(*b)).collect();
    if !missing.is_empty() {
        return Ok((false, format!("branches never hit: {missing:?}")));
    }
    Ok((
        true,
        format!(
            "{total} quadratics, max R calls / n^2 = {max_c:.2} (C = {}), all {} branches hit",
            crate::reduce::R_CALL_CONSTANT,
            ALL_BRANCHES.len()
        ),
    ))
}

/// Rank by a separate elimination over plain `u32` rows.
fn independent_rank(f: &Field, mut rows: Vec<Vec<FieldElement>>) -> usize {
    let cols = rows.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..rows.len()).find(|&r| !rows[r][c].is_zero()) else {
            continue;
        };
        rows.swap(rank, p);
        let inv = f.inv(rows[rank][c]).expect("pivot nonzero");
        let pivot: Vec<FieldElement> = rows[rank].iter().map(|&x| f.mul(x, inv)).collect();
        for (r, row) in rows.iter_mut().enumerate() {
            if r != rank && !row[c].is_zero() {
                let k = row[c];
                for (x, &y) in row.iter_mut().zip(&pivot) {
                    *x = f.sub(*x, f.mul(k, y));
                }
            }
        }
        rows[rank] = pivot;
        rank += 1;
    }
    rank
}

fn binom(n: i64, k: i64) -> i64 {
    if n < 0 || k < 0 || k > n {
        0
    } else {
        (1..=k).fold(1, |acc, i| acc * (n - k + i) / i)
    }
}

fn vandermonde_grid(_quick: bool) -> Result<(bool, String)> {
    let (mut systems, mut ie_branch) = (0, 0);
    for q in [2u64, 3, 4, 5, 7, 9, 11, 13] {
        for j in 1..=3usize {
            for d in 1..=4usize {
                let (qi, ji, di) = (q as i64, j as i64, d as i64);
                let closed = if q - 1 < d as u64 {
                    ie_branch += 1;
                    (0..=ji).map(|i| (-1i64).pow(i as u32) * binom(ji, i) * binom(di - i * qi + ji, ji)).sum::<i64>() - 1
                } else {
                    binom(di + ji, ji) - 1
                };
                if closed > 400 {
                    continue;
                }
                let set = exponent_set(q, j, d)?;
                if set.len() as i64 != closed {
                    return Ok((false, format!("q={q} j={j} d={d}: {} vs {closed}", set.len())));
                }
                let sys = build_vandermonde(q, j, d)?;
                let m = &sys.matrix;
                let rows: Vec<Vec<FieldElement>> = (0..m.rows()).map(|r| m.row(r).to_vec()).collect();
                if m.rows() != set.len() || m.cols() != set.len() || independent_rank(&sys.field, rows) != set.len() {
                    return Ok((false, format!("q={q} j={j} d={d}: matrix not square full rank")));
                }
                systems += 1;
            }
        }
    }
    if count_check_q2() != 3 {
        return Ok((false, "q=2 j=2 d=2 count is not 3".into()));
    }
    Ok((true, format!("{systems} systems, {ie_branch} via inclusion-exclusion")))
}

fn count_check_q2() -> usize {
    exponent_set(2, 2, 2).map(|s| s.len()).unwrap_or(0)
}

fn hpgp_end_to_end(quick: bool) -> Result<(bool, String)> {
    let per = if quick { 20 } else { 200 };
    let mut total = 0;
    for (n, d, q) in [(2usize, 2usize, 5u64), (2, 3, 7), (3, 2, 5), (3, 3, 7)] {
        let f = Field::with_order(q)?;
        let set = exponent_set(q, n, d)?;
        let size = (binom((d + n) as i64, n as i64) - 1) as usize;
        let mut rng = ChaCha8Rng::seed_from_u64(77 + q + 10 * n as u64 + 100 * d as u64);
        for t in 0..per {
            let terms: Vec<(Vec<u32>, FieldElement)> = set
                .exponents
                .iter()
                .map(|a| (a.clone(), FieldElement::from_index(rng.gen_range(0..q as usize))))
                .collect();
            let truth = MultiPoly::from_terms(&f, n, terms)?;
            let inst = make_hpgp_oracle(&f, n, &truth, d)?;
            let sol = reduce_hpgp_multivariate(&Scrambled::new(&inst.oracle, t), &f, n, d, HpgpPath::B)?;
            if sol.poly != truth {
                return Ok((false, format!("(n,d,q)=({n},{d},{q}) trial {t}: wrong polynomial")));
            }
            if sol.univariate_solves != size {
                return Ok((false, format!("{} solves, expected {size}", sol.univariate_solves)));
            }
            let bits = (d * size) as f64 * (q as f64).log2();
            if (sol.information.learned_bits - bits).abs() > 1e-9 {
                return Ok((false, "learned-bits report mismatch".into()));
            }
            total += 1;
        }
    }
    Ok((true, format!("{total} polynomials recovered bit-exactly")))
}

fn hpgp_path_a(_quick: bool) -> Result<(bool, String)> {
    let mut total = 0;
    for (q, d) in [(3u64, 1usize), (5, 1)] {
        let f = Field::new(q, 1)?;
        for c0 in 0..q {
            for c1 in 0..q {
                let p = Poly::from_values(&f, &[c0, c1])?;
                let inst = make_hpgp_oracle(&f, 1, &MultiPoly::from_univariate(&p), d)?;
                let sol = univariate_hpgp_solver(&inst.oracle, &f, d, HpgpPath::A)?;
                if sol.poly.coeff(0) != f.zero() || sol.poly.coeff(1).value() as u64 != c1 {
                    return Ok((false, format!("q={q} Q={c0}+{c1}x")));
                }
                total += 1;
            }
        }
    }
    Ok((true, format!("{total} polynomials recovered through Fg")))
}

fn grover(_quick: bool) -> Result<(bool, String)> {
    let mut notes = Vec::new();
    for q in [5u64, 7, 9] {
        let f = Field::with_order(q)?;
        let order: Vec<usize> = (0..q as usize).collect();
        let mut total_queries = 0;
        for c in f.elements() {
            let inst = make_grover_oracle(&f, c)?;
            let action = inst.action().expect("group").clone();
            let h = brute_force_hssp(&inst.oracle, &action, &SubgroupFamily::Any)?;
            let Hidden::GroverTarget { stabilizer, .. } = inst.hidden() else {
                unreachable!("Grover instance")
            };
            if &h != stabilizer {
                return Ok((false, format!("q={q} c={}: wrong stabilizer", c.value())));
            }
            for &g in h.elements().iter().filter(|&&g| g != action.group().identity()) {
                let (b, a) = action.group().affine_parts(g)?;
                if grover_recover(&f, b, a)? != c {
                    return Ok((false, format!("q={q} c={}: recovery failed", c.value())));
                }
            }
            let scan = grover_scan(&make_grover_oracle(&f, c)?.oracle, &order)?;
            if scan.c != c.value() as usize {
                return Ok((false, "scan found the wrong point".into()));
            }
            total_queries += scan.queries;
        }
        if 2 * total_queries != q * (q + 1) {
            return Ok((false, format!("q={q}: average {} != (q+1)/2", total_queries as f64 / q as f64)));
        }
        notes.push(format!("q={q} avg {}", total_queries as f64 / q as f64));
    }
    Ok((true, notes.join(", ")))
}

/// Orbits by breadth-first search from the generators only.
fn orbit_partition(action: &Action, h: &Subgroup) -> Partition {
    let n = action.domain_size();
    let mut label = vec![usize::MAX; n];
    for m in 0..n {
        if label[m] != usize::MAX {
            continue;
        }
        label[m] = m;
        let mut stack = vec![m];
        while let Some(x) = stack.pop() {
            for &g in h.generators() {
                let y = action.act(g, x);
                if label[y] == usize::MAX {
                    label[y] = m;
                    stack.push(y);
                }
            }
        }
    }
    Partition::from_class_map(&label)
}

/// `π*`: group elements fixing every class setwise.
fn star_of_partition(action: &Action, pi: &Partition) -> Vec<usize> {
    action
        .group()
        .elements()
        .filter(|&g| (0..action.domain_size()).all(|m| pi.class_of(action.act(g, m)) == pi.class_of(m)))
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GaloisReport {
    pub subgroups: usize,
    pub closed: usize,
    /// First property that failed, if any.
    pub failure: Option<String>,
}

/// `H ⊆ H**`, order reversal in both directions and idempotence of the
/// closure, over every subgroup of the acting group.
pub fn galois_suite(action: &Action) -> Result<GaloisReport> {
    let g = action.group();
    let subs = all_subgroups(g)?;
    let stars: Vec<Partition> = subs.iter().map(|h| orbit_partition(action, h)).collect();
    let mut closed = 0;
    let fail = |msg: &str| {
        Ok(GaloisReport {
            subgroups: subs.len(),
            closed: 0,
            failure: Some(msg.to_string()),
        })
    };
    for (h, pi) in subs.iter().zip(&stars) {
        if &action.subgroup_star(h) != pi {
            return fail("orbit partitions disagree");
        }
        let closure = star_of_partition(action, pi);
        if !h.elements().iter().all(|x| closure.binary_search(x).is_ok()) {
            return fail("H is not inside its closure");
        }
        if action.closure(h).elements() != closure.as_slice() {
            return fail("closure disagrees with the direct computation");
        }
        let hh = Subgroup::from_elements(g, &closure)?;
        if orbit_partition(action, &hh) != *pi || action.closure(&hh) != hh {
            return fail("closure is not idempotent");
        }
        if hh.elements() == h.elements() {
            closed += 1;
        }
    }
    for (a, pa) in subs.iter().zip(&stars) {
        for (b, pb) in subs.iter().zip(&stars) {
            if a.is_subgroup_of(b) && !pa.refines(pb) {
                return fail("subgroup order not reversed on partitions");
            }
            if pa.refines(pb) {
                let (sa, sb) = (star_of_partition(action, pa), star_of_partition(action, pb));
                if !sa.iter().all(|x| sb.binary_search(x).is_ok()) {
                    return fail("partition order not reversed on subgroups");
                }
            }
        }
    }
    Ok(GaloisReport {
        subgroups: subs.len(),
        closed,
        failure: None,
    })
}

fn galois(_quick: bool) -> Result<(bool, String)> {
    let f5 = Field::new(5, 1)?;
    let f7 = Field::new(7, 1)?;
    let f3 = Field::new(3, 1)?;
    let actions = [
        Action::kernel(Arc::new(Group::affine_pm1(&f5)?)),
        Action::kernel(Arc::new(Group::affine_pm1(&f7)?)),
        Action::shifting(Arc::new(Group::function_graph(&f3, 1)?))?,
    ];
    let mut checked = 0;
    for action in &actions {
        let r = galois_suite(action)?;
        if let Some(msg) = r.failure {
            return Ok((false, msg));
        }
        checked += r.subgroups;
    }
    Ok((true, format!("{checked} subgroups over three groups")))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn independent_rank_matches() {
        let f = Field::new(5, 1).unwrap();
        let sys = build_vandermonde(5, 2, 2).unwrap();
        let rows: Vec<_> = (0..sys.matrix.rows()).map(|r| sys.matrix.row(r).to_vec()).collect();
        assert_eq!(independent_rank(&f, rows), 5);
        assert_eq!(independent_rank(&f, vec![vec![f.one(), f.one()], vec![f.one(), f.one()]]), 1);
    }

    #[test]
    fn quick_criteria_that_are_cheap() {
        for id in [2, 9] {
            let r = run_criterion(id, true).unwrap();
            assert!(r.passed, "{}", r.line());
        }
    }
}
