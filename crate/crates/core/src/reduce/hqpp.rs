use std::sync::Arc;

use crate::error::{Error, Result};
use crate::ff::{Field, FieldElement};
use crate::group::{Action, Group, Subgroup};
use crate::oracle::{FoldedOracle, Family, Hidden, Oracle, ProblemInstance, Setting};
use crate::solve::procedure_r;

fn pm1_action(field: &Field) -> Result<Action> {
    if field.p() == 2 {
        return Err(Error::EvenCharacteristic);
    }
    Ok(Action::kernel(Arc::new(Group::affine_pm1(field)?)))
}

/// `H_u = {(0, 1), (2u, -1)}` in `Aff_q({±1})`.
pub fn hqpp_subgroup(group: &Group, u: FieldElement) -> Result<Subgroup> {
    let field = group.field().ok_or_else(|| Error::InvalidGroup("not an affine group".into()))?;
    let g = group.affine_element(field.add(u, u), field.neg(field.one()))?;
    Ok(Subgroup::generate(group, &[g]))
}

/// Inverse of [`hqpp_subgroup`].
pub fn u_from_subgroup(group: &Group, h: &Subgroup) -> Result<FieldElement> {
    let field = group.field().ok_or_else(|| Error::InvalidGroup("not an affine group".into()))?;
    let minus = field.neg(field.one());
    let mut reflections = h.elements().iter().filter_map(|&g| {
        let (b, a) = group.affine_parts(g).ok()?;
        (a == minus).then_some(b)
    });
    match (h.order(), reflections.next()) {
        (2, Some(b)) => field.div(b, field.add(field.one(), field.one())),
        _ => Err(Error::Unsupported("subgroup is not of the form H_u".into())),
    }
}

/// Read an HQPP instance as HSSP over `Aff_q({±1})`; the oracle is unchanged.
pub fn hqpp_to_hssp<O: Oracle>(inst: ProblemInstance<O>) -> Result<ProblemInstance<O>> {
    let (Family::Hqpp, Hidden::QuadraticShift { u }) = (inst.family, inst.hidden()) else {
        return Err(Error::Unsupported("expected an HQPP instance".into()));
    };
    let u = *u;
    let field = inst.field().expect("HQPP instances carry a field").clone();
    let action = pm1_action(&field)?;
    let h = hqpp_subgroup(action.group(), u)?;
    Ok(ProblemInstance::assemble(
        Family::Hssp,
        Setting::Group { action },
        inst.oracle,
        Hidden::Subgroup(h),
    ))
}

/// Read an HSSP instance over `Aff_q({±1})` hiding some `H_u` as HQPP.
pub fn hssp_to_hqpp<O: Oracle>(inst: ProblemInstance<O>) -> Result<ProblemInstance<O>> {
    let action = inst
        .action()
        .filter(|a| a.is_affine_pm1())
        .ok_or_else(|| Error::InvalidGroup("expected Aff_q({±1}) acting on F_q".into()))?;
    let field = action.group().field().expect("affine").clone();
    let Hidden::Subgroup(h) = inst.hidden() else {
        return Err(Error::Unsupported("expected a hidden subgroup".into()));
    };
    let u = u_from_subgroup(action.group(), h)?;
    Ok(ProblemInstance::assemble(
        Family::Hqpp,
        Setting::Field { field, n: 1, d: 2 },
        inst.oracle,
        Hidden::QuadraticShift { u },
    ))
}

/// `f°(b) = min(f(b, 1), f(b, -1))`.
pub fn affine_hsp_to_hqpp<O: Oracle>(oracle: O, group: Arc<Group>) -> Result<FoldedOracle<O>> {
    FoldedOracle::new(oracle, group)
}

/// HQPP by procedure R: `P_u = x^2 - 2ux` has `b / a = -2u`.
pub fn solve_hqpp_brute_force<O: Oracle>(oracle: &O, field: &Field) -> Result<FieldElement> {
    let r = procedure_r(oracle, field)?;
    let ratio = r
        .ratio()
        .ok_or_else(|| Error::PromiseViolation("level sets are not those of a quadratic".into()))?;
    field.div(field.neg(ratio), field.from_int(2))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::base::deterministic_base_pm1;
    use crate::oracle::{make_hqpp_oracle, make_hsp_oracle, Scrambled};
    use crate::reduce::lift_hssp_to_hsp;
    use crate::solve::{brute_force_hsp, SubgroupFamily};

    #[test]
    fn subgroup_examples() {
        let f = Field::new(7, 1).unwrap();
        let g = Group::affine_pm1(&f).unwrap();
        let h0 = hqpp_subgroup(&g, f.zero()).unwrap();
        assert!(h0.contains(g.affine_element(f.zero(), f.from_int(-1)).unwrap()));
        let h3 = hqpp_subgroup(&g, f.from_int(3)).unwrap();
        assert!(h3.contains(g.affine_element(f.from_int(6), f.from_int(6)).unwrap()));
        assert_eq!(u_from_subgroup(&g, &h3).unwrap(), f.from_int(3));
    }

    #[test]
    fn round_trip() {
        let f = Field::new(3, 2).unwrap();
        for u in f.elements() {
            let inst = make_hqpp_oracle(&f, u).unwrap();
            let back = hssp_to_hqpp(hqpp_to_hssp(inst).unwrap()).unwrap();
            assert_eq!(back.hidden(), &Hidden::QuadraticShift { u });
        }
    }

    #[test]
    fn folding_collisions() {
        let f = Field::new(7, 1).unwrap();
        let g = Arc::new(Group::affine_pm1(&f).unwrap());
        let u = f.from_int(3);
        let hsp = make_hsp_oracle(g.clone(), &hqpp_subgroup(&g, u).unwrap()).unwrap();
        let folded = affine_hsp_to_hqpp(&hsp.oracle, g).unwrap();
        assert_eq!(folded.query(1), folded.query(5));
        assert_eq!(hsp.oracle.query_count(), 4);
        assert_eq!(solve_hqpp_brute_force(&folded, &f).unwrap(), u);
    }

    #[test]
    fn both_routes_every_u_f7() {
        let f = Field::new(7, 1).unwrap();
        for u in f.elements() {
            let hssp = hqpp_to_hssp(make_hqpp_oracle(&f, u).unwrap()).unwrap();
            let act = hssp.action().unwrap().clone();
            let base = deterministic_base_pm1(&act).unwrap();
            let lifted = lift_hssp_to_hsp(hssp, &base).unwrap();
            let h = brute_force_hsp(&Scrambled::new(&lifted.oracle, 1), act.group(), &SubgroupFamily::Any).unwrap();
            assert_eq!(u_from_subgroup(act.group(), &h).unwrap(), u);

            let g = act.group().clone();
            let hsp = make_hsp_oracle(g.clone(), &hqpp_subgroup(&g, u).unwrap()).unwrap();
            let folded = affine_hsp_to_hqpp(&hsp.oracle, g).unwrap();
            assert_eq!(solve_hqpp_brute_force(&folded, &f).unwrap(), u);
        }
    }
}
