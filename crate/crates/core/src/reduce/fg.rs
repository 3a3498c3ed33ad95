use std::sync::Arc;

use crate::base::{fg_point_base, BaseFamily, BaseSet};
use crate::error::{Error, Result};
use crate::ff::{lagrange_interpolate, Field, FieldElement, Matrix, Poly};
use crate::group::{fg_conjugate_complement, Action, Group};
use crate::oracle::{Family, Hidden, LiftedOracle, Oracle, ProblemInstance, Setting};
use crate::reduce::lift_hssp_to_hsp;
use crate::solve::{brute_force_hsp, SubgroupFamily};

fn univariate_setting<O: Oracle>(inst: &ProblemInstance<O>) -> Result<(Field, usize)> {
    match (&inst.family, &inst.setting) {
        (Family::Hpgp, Setting::Field { field, n: 1, d }) => Ok((field.clone(), *d)),
        _ => Err(Error::Unsupported("expected an HPGP(F_q, 1, d) instance".into())),
    }
}

/// The HPGP oracle hides `A_Q` under the shifting action of `Fg(F_q^(d)[x])`.
pub fn hpgp1_as_hssp<O: Oracle>(inst: ProblemInstance<O>) -> Result<ProblemInstance<O>> {
    let (field, d) = univariate_setting(&inst)?;
    let Hidden::Polynomial(q) = inst.hidden() else {
        return Err(Error::Unsupported("expected a hidden polynomial".into()));
    };
    let coeffs: Vec<FieldElement> = (0..=d).map(|i| q.coeff(&[i as u32])).collect();
    let q = Poly::new(&field, coeffs)?;
    let group = Arc::new(Group::function_graph(&field, d)?);
    let h = fg_conjugate_complement(&group, &q)?;
    Ok(ProblemInstance::assemble(
        Family::Hssp,
        Setting::Group {
            action: Action::shifting(group)?,
        },
        inst.oracle,
        Hidden::Subgroup(h),
    ))
}

/// HPGP(F_q, 1, d) as HSP over `Fg(F_q^(d)[x])`, lifted through the points
/// `(x_i, 0)`.
pub fn hpgp1_to_hsp<O: Oracle>(inst: ProblemInstance<O>) -> Result<ProblemInstance<LiftedOracle<O>>> {
    let (field, d) = univariate_setting(&inst)?;
    let points = fg_point_base(&field, d, 1)?;
    let hssp = hpgp1_as_hssp(inst)?;
    let base = BaseSet::new(hssp.action().expect("group").clone(), points, BaseFamily::StandardComplements)?;
    lift_hssp_to_hsp(hssp, &base)
}

/// `Q - Q(0)` from generators of `A_Q`.
///
/// An element `(Q - a_s Q, s)` of `A_Q` is a product of generator powers
/// once `s` is written in their `t`-parts over `F_p`; evaluating its
/// polynomial part at `s` gives `Q(s) - Q(0)`.
pub fn recover_poly_from_complement(group: &Group, gens: &[usize]) -> Result<Poly> {
    let d = group.fg_degree()?;
    let field = group.field().expect("function graph groups carry a field");
    let k = field.k() as usize;
    let fp = Field::new(field.p() as u64, 1)?;
    let ts: Vec<FieldElement> = gens
        .iter()
        .map(|&g| group.fg_parts(g).map(|(_, t)| t))
        .collect::<Result<_>>()?;
    // Column i holds the F_p coordinates of t_i.
    let mut m = Matrix::zeros(&fp, k, ts.len());
    for (i, &t) in ts.iter().enumerate() {
        for (r, &c) in field.coeffs(t).iter().enumerate() {
            m.set(r, i, fp.element(c as u64)?);
        }
    }
    if m.rank() < k {
        return Err(Error::NotGenerating);
    }
    let mut points = vec![(field.zero(), field.zero())];
    for s in field.nonzero().take(d) {
        let target: Vec<FieldElement> = field
            .coeffs(s)
            .iter()
            .map(|&c| fp.element(c as u64))
            .collect::<Result<_>>()?;
        let c = m.solve(&target)?;
        let elem = gens
            .iter()
            .zip(&c)
            .fold(group.identity(), |acc, (&g, e)| group.mul(acc, group.pow(g, e.value() as usize)));
        let (p, t) = group.fg_parts(elem)?;
        if t != s {
            return Err(Error::NotGenerating);
        }
        points.push((s, p.eval(s)));
    }
    lagrange_interpolate(field, &points, d)
}

/// Path A of the univariate solver: lift, brute-force the HSP, interpolate.
pub fn solve_hpgp1_via_hsp<O: Oracle>(oracle: &O, field: &Field, d: usize) -> Result<Poly> {
    let group = Arc::new(Group::function_graph(field, d)?);
    let action = Action::shifting(group.clone())?;
    let points = fg_point_base(field, d, 1)?;
    let lifted = LiftedOracle::new(oracle, action, points)?;
    let h = brute_force_hsp(&lifted, &group, &SubgroupFamily::Any)?;
    recover_poly_from_complement(&group, h.generators())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ff::MultiPoly;
    use crate::group::fg_complement_element;
    use crate::oracle::make_hpgp_oracle;
    use crate::reduce::check_lifted_promise;

    fn hpgp(f: &Field, d: usize, c: &[u64]) -> ProblemInstance {
        let p = Poly::from_values(f, c).unwrap();
        make_hpgp_oracle(f, 1, &MultiPoly::from_univariate(&p), d).unwrap()
    }

    #[test]
    fn zero_poly_hides_standard_complement() {
        let f = Field::new(5, 1).unwrap();
        let lifted = hpgp1_to_hsp(hpgp(&f, 1, &[])).unwrap();
        let g = lifted.action().unwrap().group().clone();
        let Hidden::Subgroup(h) = lifted.hidden() else { panic!() };
        for t in f.elements() {
            assert!(h.contains(g.fg_element(&Poly::zero(&f), t).unwrap()));
        }
    }

    #[test]
    fn exhaustive_coset_scan_f3() {
        let f = Field::new(3, 1).unwrap();
        for idx in 0..9 {
            let lifted = hpgp1_to_hsp(hpgp(&f, 1, &[idx % 3, idx / 3])).unwrap();
            assert_eq!(lifted.action().unwrap().group().order(), 27);
            check_lifted_promise(&lifted).unwrap();
        }
    }

    #[test]
    fn field_too_small() {
        let f = Field::new(2, 1).unwrap();
        let inst = hpgp(&f, 2, &[0, 1]);
        assert!(matches!(hpgp1_to_hsp(inst), Err(Error::FieldTooSmall { .. })));
    }

    #[test]
    fn recovery_examples() {
        let f = Field::new(5, 1).unwrap();
        let g = Group::function_graph(&f, 2).unwrap();
        let q = Poly::from_values(&f, &[1, 0, 1]).unwrap();
        let gen = fg_complement_element(&g, &q, f.one()).unwrap();
        assert_eq!(recover_poly_from_complement(&g, &[gen]).unwrap(), Poly::from_values(&f, &[0, 0, 1]).unwrap());
        let zero = fg_complement_element(&g, &Poly::zero(&f), f.from_int(2)).unwrap();
        assert!(recover_poly_from_complement(&g, &[zero]).unwrap().is_zero());
        assert_eq!(recover_poly_from_complement(&g, &[]).unwrap_err(), Error::NotGenerating);

        let f9 = Field::new(3, 2).unwrap();
        let g9 = Group::function_graph(&f9, 2).unwrap();
        let q = Poly::from_values(&f9, &[4, 7, 5]).unwrap();
        let gens: Vec<usize> = f9
            .additive_basis()
            .into_iter()
            .map(|t| fg_complement_element(&g9, &q, t).unwrap())
            .collect();
        assert_eq!(recover_poly_from_complement(&g9, &gens).unwrap(), q.without_constant());
        assert_eq!(recover_poly_from_complement(&g9, &gens[..1]).unwrap_err(), Error::NotGenerating);
    }
}
