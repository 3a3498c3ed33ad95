//! Worked examples with hand-checkable values, run through the public API.

use std::sync::Arc;

use hssp_lab::base::{count_separators, deterministic_base_pm1, fg_point_base, random_base_size, verify_base, BaseFamily, BaseSet};
use hssp_lab::ff::{lagrange_interpolate, monomial_eval, Field, Matrix, MultiPoly, Poly};
use hssp_lab::group::{Action, Group, Subgroup};
use hssp_lab::oracle::{level_partition, make_hpgp_oracle, make_hpp_oracle, make_hqpp_oracle, make_hsp_oracle, make_hssp_oracle, Scrambled};
use hssp_lab::reduce::{
    hqpp_subgroup, lift_hssp_to_hsp, nilpotency_index, normalize, quadratic_coefficients, solve_multivariate_quadratic,
};
use hssp_lab::solve::{brute_force_hsp, grover_recover, procedure_r, univariate_hpgp_solver, HpgpPath, SubgroupFamily};
use hssp_lab::vandermonde::{build_vandermonde, count_exponents, exponent_set, reduce_hpgp_multivariate};
use hssp_lab::Error;

fn f(q: u64) -> Field {
    Field::with_order(q).unwrap()
}

fn el(field: &Field, v: u64) -> hssp_lab::ff::FieldElement {
    field.element(v).unwrap()
}

#[test]
fn field_arithmetic() {
    let f9 = Field::new(3, 2).unwrap();
    assert_eq!(f9.modulus(), &[1, 0, 1]);
    let x = el(&f9, 3);
    assert_eq!(f9.mul(x, x).value(), 2);
    let f7 = f(7);
    assert_eq!(f7.inv(el(&f7, 6)).unwrap().value(), 6);
}

#[test]
fn polynomial_evaluation() {
    let f7 = f(7);
    // x^2 - 6x = x^2 + x over F_7.
    let pu = Poly::from_values(&f7, &[0, 1, 1]).unwrap();
    assert_eq!(pu.eval(el(&f7, 1)).value(), 2);
    assert_eq!(monomial_eval(&f7, &[1, 2], &[el(&f7, 2), el(&f7, 3)]).value(), 4);
    let m = Matrix::from_rows(&f7, vec![vec![el(&f7, 1), el(&f7, 1)], vec![el(&f7, 2), el(&f7, 4)]]).unwrap();
    assert_eq!(m.rank(), 2);
    let pts = [(0, 0), (1, 1), (2, 4)].map(|(x, y)| (el(&f7, x), el(&f7, y)));
    assert_eq!(lagrange_interpolate(&f7, &pts, 2).unwrap(), Poly::from_values(&f7, &[0, 0, 1]).unwrap());
}

#[test]
fn affine_action_and_orbits() {
    let f7 = f(7);
    let full = Action::kernel(Arc::new(Group::affine_full(&f7).unwrap()));
    let g = full.group().affine_element(el(&f7, 1), el(&f7, 2)).unwrap();
    assert_eq!(full.act(g, 3), 0);
    let whole = Subgroup::whole(full.group());
    assert_eq!(full.orbit(&whole, 4).len(), 7);

    let pm1 = Action::kernel(Arc::new(Group::affine_pm1(&f7).unwrap()));
    let h3 = hqpp_subgroup(pm1.group(), el(&f7, 3)).unwrap();
    assert_eq!(pm1.orbit(&h3, 1), vec![1, 5]);
    let classes = pm1.subgroup_star(&h3).classes();
    assert_eq!(classes, vec![vec![0, 6], vec![1, 5], vec![2, 4], vec![3]]);
    assert!(pm1.is_closed(&h3));
}

#[test]
fn grover_stabilizer_and_recovery() {
    let f5 = f(5);
    let act = Action::kernel(Arc::new(Group::affine_full(&f5).unwrap()));
    let h0 = act.stabilizer(0);
    assert_eq!(h0.order(), 4);
    for &g in h0.elements() {
        assert!(act.group().affine_parts(g).unwrap().0.is_zero());
    }
    let f7 = f(7);
    assert_eq!(grover_recover(&f7, el(&f7, 4), el(&f7, 2)).unwrap().value(), 3);
}

#[test]
fn level_sets_of_hidden_objects() {
    let f7 = f(7);
    let hq = make_hqpp_oracle(&f7, el(&f7, 0)).unwrap();
    assert_eq!(level_partition(&hq.oracle).classes(), vec![vec![0], vec![1, 6], vec![2, 5], vec![3, 4]]);

    let f3 = f(3);
    let xy = MultiPoly::from_terms(&f3, 2, [(vec![1, 1], f3.one())]).unwrap();
    let hp = make_hpp_oracle(&f3, 2, &xy).unwrap();
    let zero_class = level_partition(&hp.oracle).classes().into_iter().find(|c| c.contains(&0)).unwrap();
    assert_eq!(zero_class.len(), 5);

    let f5 = f(5);
    let sq = MultiPoly::from_terms(&f5, 1, [(vec![2], f5.one())]).unwrap();
    let hg = make_hpgp_oracle(&f5, 1, &sq, 2).unwrap();
    let part = level_partition(&hg.oracle);
    assert_eq!(part.class_of(2 + 5 * 4), part.class_of(3 + 5 * 4));
    assert!(part.shape().iter().all(|&s| s == 5));
}

#[test]
fn separators_and_bases() {
    let f7 = f(7);
    let act = Action::kernel(Arc::new(Group::affine_pm1(&f7).unwrap()));
    for u in 0..7 {
        for v in 0..7 {
            if u != v {
                let n = count_separators(&act, u, v).unwrap();
                assert!((6..=7).contains(&n));
            }
        }
    }
    assert_eq!(deterministic_base_pm1(&act).unwrap().points(), &[0, 1]);
    assert_eq!(random_base_size(7, 0.25).unwrap(), 7);
    for m in 0..7 {
        let single = BaseSet::new(act.clone(), vec![m], BaseFamily::FrobeniusComplements).unwrap();
        assert!(!verify_base(&single).unwrap());
    }
    let all = BaseSet::new(act, (0..7).collect(), BaseFamily::Closed).unwrap();
    assert!(verify_base(&all).unwrap());

    assert_eq!(fg_point_base(&f(5), 2, 1).unwrap(), vec![0, 1, 2]);
    assert_eq!(fg_point_base(&f(5), 2, 2), Err(Error::NoPolynomialSizeBase { n: 2 }));
}

#[test]
fn lifting_and_weak_bases() {
    let f7 = f(7);
    let act = Action::kernel(Arc::new(Group::affine_pm1(&f7).unwrap()));
    let h3 = hqpp_subgroup(act.group(), el(&f7, 3)).unwrap();
    let base = deterministic_base_pm1(&act).unwrap();
    let lifted = lift_hssp_to_hsp(make_hssp_oracle(act.clone(), &h3).unwrap(), &base).unwrap();
    let g = act.group().clone();
    let found = brute_force_hsp(&Scrambled::new(&lifted.oracle, 3), &g, &SubgroupFamily::Any).unwrap();
    assert_eq!(found, h3);

    let weak = BaseSet::new(act.clone(), vec![3], BaseFamily::FrobeniusComplements).unwrap();
    let inst = make_hssp_oracle(act, &h3).unwrap();
    assert!(matches!(lift_hssp_to_hsp(inst, &weak), Err(Error::BadBase(_))));
}

#[test]
fn hsp_brute_force_on_h4() {
    let f7 = f(7);
    let g = Arc::new(Group::affine_pm1(&f7).unwrap());
    let h4 = hqpp_subgroup(&g, el(&f7, 4)).unwrap();
    let inst = make_hsp_oracle(g.clone(), &h4).unwrap();
    assert_eq!(brute_force_hsp(&inst.oracle, &g, &SubgroupFamily::Any).unwrap(), h4);
    assert_eq!(brute_force_hsp(&Scrambled::new(&inst.oracle, 99), &g, &SubgroupFamily::Any).unwrap(), h4);
}

#[test]
fn quotient_procedure() {
    let f7 = f(7);
    let sq = MultiPoly::from_terms(&f7, 1, [(vec![2], f7.one())]).unwrap();
    let r = procedure_r(&make_hpp_oracle(&f7, 1, &sq).unwrap().oracle, &f7).unwrap();
    assert!(!r.azero);
    assert_eq!(r.ratio().unwrap().value(), 0);

    let f5 = f(5);
    let p = MultiPoly::from_terms(&f5, 1, [(vec![2], f5.one()), (vec![1], el(&f5, 4))]).unwrap();
    let r = procedure_r(&make_hpp_oracle(&f5, 1, &p).unwrap().oracle, &f5).unwrap();
    assert_eq!(r.ratio().unwrap().value(), 4);
}

#[test]
fn quadratic_examples() {
    let f7 = f(7);
    let p = MultiPoly::from_terms(&f7, 2, [(vec![2, 0], el(&f7, 2)), (vec![0, 1], el(&f7, 3))]).unwrap();
    let truth = normalize(&f7, &quadratic_coefficients(&p).unwrap());
    assert_eq!(truth.iter().map(|c| c.value()).collect::<Vec<_>>(), vec![1, 0, 0, 0, 5]);
    let sol = solve_multivariate_quadratic(&make_hpp_oracle(&f7, 2, &p).unwrap().oracle, &f7, 2).unwrap();
    assert_eq!(sol.coefficients(), truth);

    let f5 = f(5);
    let p = MultiPoly::from_terms(&f5, 4, [(vec![1, 1, 0, 0], f5.one()), (vec![0, 0, 1, 1], f5.one())]).unwrap();
    let sol = solve_multivariate_quadratic(&make_hpp_oracle(&f5, 4, &p).unwrap().oracle, &f5, 4).unwrap();
    assert_eq!(sol.coefficients(), normalize(&f5, &quadratic_coefficients(&p).unwrap()));
    assert!(sol.branches.iter().any(|b| b.starts_with("n4")));
}

#[test]
fn univariate_hpgp_examples() {
    let f5 = f(5);
    let sq = MultiPoly::from_terms(&f5, 1, [(vec![2], f5.one()), (vec![0], f5.one())]).unwrap();
    let inst = make_hpgp_oracle(&f5, 1, &sq, 2).unwrap();
    let sol = univariate_hpgp_solver(&inst.oracle, &f5, 2, HpgpPath::Both).unwrap();
    assert_eq!(sol.coefficients(2), vec![f5.zero(), f5.one()]);

    let f7 = f(7);
    let p = MultiPoly::from_terms(&f7, 1, [(vec![3], el(&f7, 2)), (vec![1], f7.one())]).unwrap();
    let inst = make_hpgp_oracle(&f7, 1, &p, 3).unwrap();
    let sol = univariate_hpgp_solver(&inst.oracle, &f7, 3, HpgpPath::B).unwrap();
    assert_eq!(sol.coefficients(3).iter().map(|c| c.value()).collect::<Vec<_>>(), vec![1, 0, 2]);

    let f9 = f(9);
    let p = MultiPoly::from_terms(&f9, 1, [(vec![2], el(&f9, 5)), (vec![1], el(&f9, 7))]).unwrap();
    let inst = make_hpgp_oracle(&f9, 1, &p, 2).unwrap();
    let sol = univariate_hpgp_solver(&inst.oracle, &f9, 2, HpgpPath::A).unwrap();
    assert_eq!(MultiPoly::from_univariate(&sol.poly), p);
}

#[test]
fn vandermonde_examples() {
    assert_eq!(count_exponents(7, 2, 2), 5);
    let s = exponent_set(2, 2, 2).unwrap();
    assert_eq!(s.exponents, vec![vec![1, 0], vec![0, 1], vec![1, 1]]);
    let v = build_vandermonde(3, 2, 2).unwrap();
    assert_eq!((v.points.len(), v.matrix.rank()), (5, 5));
    let v1 = build_vandermonde(7, 1, 2).unwrap();
    assert_eq!(v1.points.len(), 2);
    assert_eq!(v1.matrix.rank(), 2);
}

#[test]
fn multivariate_hpgp_examples() {
    let f5 = f(5);
    let p = MultiPoly::from_terms(&f5, 2, [(vec![2, 0], f5.one()), (vec![1, 1], el(&f5, 2))]).unwrap();
    let inst = make_hpgp_oracle(&f5, 2, &p, 2).unwrap();
    let sol = reduce_hpgp_multivariate(&inst.oracle, &f5, 2, 2, HpgpPath::B).unwrap();
    assert_eq!(sol.poly, p);
    assert_eq!(sol.univariate_solves, 5);

    let f7 = f(7);
    let terms: Vec<_> = exponent_set(7, 3, 3)
        .unwrap()
        .exponents
        .into_iter()
        .enumerate()
        .map(|(i, e)| (e, el(&f7, (i as u64 * 3 + 1) % 7)))
        .collect();
    let p = MultiPoly::from_terms(&f7, 3, terms).unwrap();
    let inst = make_hpgp_oracle(&f7, 3, &p, 3).unwrap();
    let sol = reduce_hpgp_multivariate(&inst.oracle, &f7, 3, 3, HpgpPath::B).unwrap();
    assert_eq!(sol.poly, p);
    assert_eq!(sol.univariate_solves, 19);
}

#[test]
fn nilpotent_action() {
    assert_eq!(nilpotency_index(3, &[vec![1, 1], vec![0, 1]]).unwrap(), 2);
    assert_eq!(hssp_lab::oracle::zpmzp_qv(3, &[vec![1, 1], vec![0, 1]], &[1, 0], 2), vec![2, 0]);
    assert_eq!(hssp_lab::oracle::zpmzp_qv(3, &[vec![1, 1], vec![0, 1]], &[1, 0], 1), vec![1, 0]);
}
