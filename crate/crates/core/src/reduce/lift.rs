use crate::base::{verify_base, BaseSet};
use crate::error::{Error, Result};
use crate::group::{Action, Subgroup, MAX_LATTICE_ORDER};
use crate::oracle::{Family, Hidden, LiftedOracle, Oracle, ProblemInstance, Setting};

/// The hidden subgroup of a group-based instance, if it has one.
pub fn hidden_subgroup(h: &Hidden) -> Option<&Subgroup> {
    match h {
        Hidden::Subgroup(s) => Some(s),
        Hidden::GroverTarget { stabilizer, .. } => Some(stabilizer),
        Hidden::ZpmzpVector { subgroup, .. } => Some(subgroup),
        _ => None,
    }
}

/// Lift an HSSP instance to HSP over the acting group.
///
/// The base is verified exhaustively for its family when the group has at
/// most `MAX_LATTICE_ORDER` elements; above that the caller vouches for it.
pub fn lift_hssp_to_hsp<O: Oracle>(inst: ProblemInstance<O>, base: &BaseSet) -> Result<ProblemInstance<LiftedOracle<O>>> {
    let action = inst
        .action()
        .ok_or_else(|| Error::Unsupported("lifting needs a group action".into()))?;
    if action.kind() != base.action().kind() || action.domain_size() != base.action().domain_size() {
        return Err(Error::BadBase("base belongs to a different action".into()));
    }
    if action.group().order() <= MAX_LATTICE_ORDER && !verify_base(base)? {
        return Err(Error::BadBase("base fails the intersection condition".into()));
    }
    lift_unchecked(inst, base.points())
}

/// Lift without checking the base.
pub fn lift_unchecked<O: Oracle>(inst: ProblemInstance<O>, points: &[usize]) -> Result<ProblemInstance<LiftedOracle<O>>> {
    let action = inst
        .action()
        .ok_or_else(|| Error::Unsupported("lifting needs a group action".into()))?
        .clone();
    let regular = Action::regular(action.group().clone());
    let hidden = hidden_subgroup(inst.hidden())
        .ok_or_else(|| Error::Unsupported("instance hides no subgroup".into()))?
        .clone();
    let oracle = LiftedOracle::new(inst.oracle, action, points.to_vec())?;
    Ok(ProblemInstance::assemble(
        Family::Hsp,
        Setting::Group { action: regular },
        oracle,
        Hidden::Subgroup(hidden),
    ))
}

/// Harness check that a lifted oracle satisfies `f(x) = f(y) ⇔ Hx = Hy`,
/// over all pairs when the group is small enough.
pub fn check_lifted_promise<O: Oracle>(inst: &ProblemInstance<O>) -> Result<()> {
    let g = inst.action().expect("lifted instances live on a group").group().clone();
    let h = hidden_subgroup(inst.hidden()).expect("lifted instances hide a subgroup");
    let n = g.order();
    if n > MAX_LATTICE_ORDER {
        return Err(Error::GroupTooLarge {
            order: n,
            bound: MAX_LATTICE_ORDER,
            what: "the exhaustive coset check",
        });
    }
    let labels: Vec<O::Output> = (0..n).map(|x| inst.oracle.query(x)).collect();
    for x in 0..n {
        for y in x + 1..n {
            if (labels[x] == labels[y]) != h.contains(g.mul(x, g.inv(y))) {
                return Err(Error::BadBase(format!("elements {x} and {y} break the coset promise")));
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::base::{deterministic_base_pm1, BaseFamily};
    use crate::ff::Field;
    use crate::group::Group;
    use crate::oracle::make_hssp_oracle;
    use crate::solve::{brute_force_hsp, SubgroupFamily};
    use std::sync::Arc;

    fn aff7() -> Action {
        Action::kernel(Arc::new(Group::affine_pm1(&Field::new(7, 1).unwrap()).unwrap()))
    }

    #[test]
    fn deterministic_base_lifts_soundly() {
        let act = aff7();
        let base = deterministic_base_pm1(&act).unwrap();
        let h = act.stabilizer(3);
        let lifted = lift_hssp_to_hsp(make_hssp_oracle(act.clone(), &h).unwrap(), &base).unwrap();
        check_lifted_promise(&lifted).unwrap();
        let (outer, inner) = (lifted.oracle.query_count(), lifted.oracle.inner().query_count());
        let got = brute_force_hsp(&lifted.oracle, act.group(), &SubgroupFamily::Any).unwrap();
        assert_eq!(got, h);
        let outer = lifted.oracle.query_count() - outer;
        assert_eq!(lifted.oracle.inner().query_count() - inner, 2 * outer);
    }

    #[test]
    fn trivial_subgroup_plain_base() {
        let act = aff7();
        let h = Subgroup::trivial(act.group());
        let base = BaseSet::new(act.clone(), vec![0, 1], BaseFamily::Closed).unwrap();
        let lifted = lift_hssp_to_hsp(make_hssp_oracle(act, &h).unwrap(), &base).unwrap();
        check_lifted_promise(&lifted).unwrap();
    }

    #[test]
    fn weak_base_detected() {
        let act = aff7();
        let h = act.stabilizer(3);
        let weak = BaseSet::new(act.clone(), vec![0], BaseFamily::FrobeniusComplements).unwrap();
        let inst = || make_hssp_oracle(act.clone(), &h).unwrap();
        assert!(matches!(lift_hssp_to_hsp(inst(), &weak), Err(Error::BadBase(_))));
        let lifted = lift_unchecked(inst(), &[0]).unwrap();
        assert!(matches!(check_lifted_promise(&lifted), Err(Error::BadBase(_))));
    }
}
