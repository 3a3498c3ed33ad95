use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::promise::check_partition_promise;
use super::{decode_point, LevelSetOracle, Oracle};
use crate::error::{Error, Result};
use crate::ff::{Field, FieldElement, MultiPoly};
use crate::group::{Action, Group, Subgroup};

/// Largest domain an oracle may have.
pub const MAX_ORACLE_DOMAIN: usize = 1 << 22;

/// Fixed seed for the randomized part of promise validation.
const PROMISE_SEED: u64 = 0x5eed_0f_0ac1e;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    Hsp,
    Hssp,
    Hpp,
    Hqpp,
    Hpgp,
    GroverHssp,
    ZpmzpHsp,
}

/// Public parameters of an instance; solvers may read these.
#[derive(Clone, Debug)]
pub enum Setting {
    /// Oracle on the domain of `action` (the group itself for HSP).
    Group { action: Action },
    /// Oracle on `F_q^n` (HPP, HQPP) or `F_q^n × F_q` (HPGP).
    Field { field: Field, n: usize, d: usize },
}

/// The hidden object. Harness-side only.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Hidden {
    Subgroup(Subgroup),
    /// `P_u(x) = x^2 - 2ux`, equivalently `H_u = {(0,1), (2u,-1)}`.
    QuadraticShift { u: FieldElement },
    Polynomial(MultiPoly),
    GroverTarget { c: FieldElement, stabilizer: Subgroup },
    ZpmzpVector { v: Vec<u32>, subgroup: Subgroup },
}

/// An oracle together with its hidden answer.
///
/// The answer is private and exposed only through [`ProblemInstance::hidden`],
/// which the harness uses to grade solvers; solvers take oracles, not instances.
#[derive(Debug)]
pub struct ProblemInstance<O = LevelSetOracle> {
    pub family: Family,
    pub setting: Setting,
    pub oracle: O,
    hidden: Hidden,
}

impl<O: Oracle> ProblemInstance<O> {
    pub(crate) fn assemble(family: Family, setting: Setting, oracle: O, hidden: Hidden) -> Self {
        ProblemInstance {
            family,
            setting,
            oracle,
            hidden,
        }
    }

    /// Harness-side access to the hidden object.
    pub fn hidden(&self) -> &Hidden {
        &self.hidden
    }

    /// Same instance with the oracle replaced, e.g. by a scrambled wrapper.
    pub fn map_oracle<P: Oracle>(self, f: impl FnOnce(O) -> P) -> ProblemInstance<P> {
        ProblemInstance {
            family: self.family,
            setting: self.setting,
            oracle: f(self.oracle),
            hidden: self.hidden,
        }
    }

    pub fn action(&self) -> Option<&Action> {
        match &self.setting {
            Setting::Group { action } => Some(action),
            Setting::Field { .. } => None,
        }
    }

    pub fn field(&self) -> Option<&Field> {
        match &self.setting {
            Setting::Field { field, .. } => Some(field),
            Setting::Group { action } => action.group().field(),
        }
    }
}

fn check_domain(size: Option<usize>) -> Result<usize> {
    match size {
        Some(n) if n <= MAX_ORACLE_DOMAIN => Ok(n),
        _ => Err(Error::Unsupported(format!(
            "oracle domain exceeds the desk-scale bound {MAX_ORACLE_DOMAIN}"
        ))),
    }
}

/// HSP oracle constant exactly on right cosets `Hg`.
pub fn make_hsp_oracle(group: Arc<Group>, h: &Subgroup) -> Result<ProblemInstance> {
    let action = Action::regular(group.clone());
    let classes = action.subgroup_star(h);
    let table: Vec<u64> = classes.as_slice().iter().map(|&c| c as u64).collect();
    let oracle = LevelSetOracle::from_table(table);
    check_partition_promise(
        group.order(),
        |x| oracle.peek(x),
        |x, y| h.contains(group.mul(x, group.inv(y))),
        PROMISE_SEED,
    )?;
    Ok(ProblemInstance::assemble(
        Family::Hsp,
        Setting::Group { action },
        oracle,
        Hidden::Subgroup(h.clone()),
    ))
}

/// HSSP oracle whose level sets are the `H`-orbits; `H` must be closed.
pub fn make_hssp_oracle(action: Action, h: &Subgroup) -> Result<ProblemInstance> {
    if !action.is_closed(h) {
        return Err(Error::NotClosed);
    }
    let classes = action.subgroup_star(h);
    let table: Vec<u64> = classes.as_slice().iter().map(|&c| c as u64).collect();
    let oracle = LevelSetOracle::from_table(table);
    check_partition_promise(
        action.domain_size(),
        |x| oracle.peek(x),
        |x, y| h.elements().iter().any(|&g| action.act(g, x) == y),
        PROMISE_SEED,
    )?;
    Ok(ProblemInstance::assemble(
        Family::Hssp,
        Setting::Group { action },
        oracle,
        Hidden::Subgroup(h.clone()),
    ))
}

/// HQPP oracle for `P_u(x) = x^2 - 2ux`, labelled by `min(x, 2u - x)`.
pub fn make_hqpp_oracle(field: &Field, u: FieldElement) -> Result<ProblemInstance> {
    field.check(u)?;
    if field.p() == 2 {
        return Err(Error::EvenCharacteristic);
    }
    let f = field.clone();
    let two_u = field.add(u, u);
    let oracle = LevelSetOracle::new(field.q() as usize, move |x| {
        let x = FieldElement::from_index(x);
        x.min(f.sub(two_u, x)).value() as u64
    });
    let pu = |x: usize| {
        let x = FieldElement::from_index(x);
        field.sub(field.mul(x, x), field.mul(two_u, x))
    };
    check_partition_promise(
        field.q() as usize,
        |x| oracle.peek(x),
        |x, y| pu(x) == pu(y),
        PROMISE_SEED,
    )?;
    Ok(ProblemInstance::assemble(
        Family::Hqpp,
        Setting::Field {
            field: field.clone(),
            n: 1,
            d: 2,
        },
        oracle,
        Hidden::QuadraticShift { u },
    ))
}

/// HPP oracle labelled by the value `P(x)`.
pub fn make_hpp_oracle(field: &Field, n: usize, p: &MultiPoly) -> Result<ProblemInstance> {
    if p.field() != field {
        return Err(Error::FieldMismatch);
    }
    if p.nvars() != n {
        return Err(Error::ArityMismatch {
            expected: n,
            got: p.nvars(),
        });
    }
    let domain = check_domain((field.q() as usize).checked_pow(n as u32))?;
    let (f, poly) = (field.clone(), p.clone());
    let oracle = LevelSetOracle::new(domain, move |x| {
        poly.eval_unchecked(&decode_point(&f, x, n)).value() as u64
    });
    // Independent route: Horner-free monomial sums over explicit coordinates.
    let value = |x: usize| {
        let pt = decode_point(field, x, n);
        p.terms().iter().fold(field.zero(), |acc, (e, &c)| {
            let m = e.iter().zip(&pt).fold(field.one(), |m, (&a, &v)| {
                (0..a).fold(m, |m, _| field.mul(m, v))
            });
            field.add(acc, field.mul(c, m))
        })
    };
    check_partition_promise(domain, |x| oracle.peek(x), |x, y| value(x) == value(y), PROMISE_SEED)?;
    let d = p.total_degree().unwrap_or(0) as usize;
    Ok(ProblemInstance::assemble(
        Family::Hpp,
        Setting::Field {
            field: field.clone(),
            n,
            d,
        },
        oracle,
        Hidden::Polynomial(p.clone()),
    ))
}

/// HPGP oracle on `F_q^n × F_q` labelled by `y - Q(x)`; the point `(x, y)`
/// is encoded as `index(x) + q^n y`.
pub fn make_hpgp_oracle(field: &Field, n: usize, q: &MultiPoly, d: usize) -> Result<ProblemInstance> {
    if q.field() != field {
        return Err(Error::FieldMismatch);
    }
    if q.nvars() != n {
        return Err(Error::ArityMismatch {
            expected: n,
            got: q.nvars(),
        });
    }
    if q.total_degree().unwrap_or(0) as usize > d {
        return Err(Error::Unsupported(format!("polynomial degree exceeds d = {d}")));
    }
    let qn = (field.q() as usize)
        .checked_pow(n as u32)
        .ok_or_else(|| Error::Unsupported("domain too large".into()))?;
    let domain = check_domain(qn.checked_mul(field.q() as usize))?;
    let (f, poly) = (field.clone(), q.clone());
    let oracle = LevelSetOracle::new(domain, move |i| {
        let x = decode_point(&f, i % qn, n);
        let y = FieldElement::from_index(i / qn);
        f.sub(y, poly.eval_unchecked(&x)).value() as u64
    });
    let graph_shift = |i: usize| {
        let x = decode_point(field, i % qn, n);
        let y = FieldElement::from_index(i / qn);
        field.sub(y, q.eval(&x).expect("arity checked"))
    };
    check_partition_promise(
        domain,
        |x| oracle.peek(x),
        |a, b| graph_shift(a) == graph_shift(b),
        PROMISE_SEED,
    )?;
    Ok(ProblemInstance::assemble(
        Family::Hpgp,
        Setting::Field {
            field: field.clone(),
            n,
            d,
        },
        oracle,
        Hidden::Polynomial(q.clone()),
    ))
}

/// `f_c = δ_c` on `F_q`, hiding the stabilizer `H_c` of `c` in `Aff_q`.
pub fn make_grover_oracle(field: &Field, c: FieldElement) -> Result<ProblemInstance> {
    field.check(c)?;
    let action = Action::kernel(Arc::new(Group::affine_full(field)?));
    let stabilizer = action.stabilizer(c.value() as usize);
    let cv = c.value() as usize;
    let oracle = LevelSetOracle::new(field.q() as usize, move |x| u64::from(x == cv));
    check_partition_promise(
        field.q() as usize,
        |x| oracle.peek(x),
        |x, y| stabilizer.elements().iter().any(|&g| action.act(g, x) == y),
        PROMISE_SEED,
    )?;
    Ok(ProblemInstance::assemble(
        Family::GroverHssp,
        Setting::Group { action },
        oracle,
        Hidden::GroverTarget { c, stabilizer },
    ))
}

/// `Q_v(t) = Σ_{j<t} A^j v` over `F_p`.
pub fn zpmzp_qv(p: u32, a: &[Vec<u64>], v: &[u32], t: u32) -> Vec<u32> {
    let m = v.len();
    let mut acc = vec![0u64; m];
    let mut cur: Vec<u64> = v.iter().map(|&x| x as u64).collect();
    for _ in 0..t {
        for i in 0..m {
            acc[i] = (acc[i] + cur[i]) % p as u64;
        }
        cur = (0..m)
            .map(|i| (0..m).map(|j| a[i][j] * cur[j]).sum::<u64>() % p as u64)
            .collect();
    }
    acc.into_iter().map(|x| x as u32).collect()
}

/// HSP oracle on `Z_p^m ⋊ Z_p` hiding `H_v = <(v, 1)>` via right cosets.
pub fn make_zpmzp_oracle(p: u64, m: usize, a: &[Vec<u64>], v: &[u32]) -> Result<ProblemInstance> {
    let group = Arc::new(Group::zpmzp(p, m, a)?);
    let gen = group.zpmzp_element(v, 1 % p as u32)?;
    let h = Subgroup::generate(&group, &[gen]);
    let mut inst = make_hsp_oracle(group, &h)?;
    inst.family = Family::ZpmzpHsp;
    inst.hidden = Hidden::ZpmzpVector {
        v: v.to_vec(),
        subgroup: h,
    };
    Ok(inst)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::level_partition;

    fn el(f: &Field, v: u64) -> FieldElement {
        f.element(v).unwrap()
    }

    #[test]
    fn hsp_trivial_and_whole() {
        let g = Arc::new(Group::affine_pm1(&Field::new(5, 1).unwrap()).unwrap());
        let inj = make_hsp_oracle(g.clone(), &Subgroup::trivial(&g)).unwrap();
        assert_eq!(level_partition(&inj.oracle).num_classes(), 10);
        let cst = make_hsp_oracle(g.clone(), &Subgroup::whole(&g)).unwrap();
        assert_eq!(level_partition(&cst.oracle).num_classes(), 1);
    }

    #[test]
    fn hsp_cosets_match_brute_force() {
        let f = Field::new(5, 1).unwrap();
        let g = Arc::new(Group::affine_pm1(&f).unwrap());
        // H_2 = {(0,1), (4,-1)}
        let h2 = Subgroup::generate(&g, &[g.affine_element(el(&f, 4), el(&f, 4)).unwrap()]);
        let inst = make_hsp_oracle(g.clone(), &h2).unwrap();
        let part = level_partition(&inst.oracle);
        for x in g.elements() {
            let coset: Vec<usize> = h2.elements().iter().map(|&h| g.mul(h, x)).collect();
            for y in g.elements() {
                assert_eq!(part.class_of(x) == part.class_of(y), coset.contains(&y));
            }
        }
    }

    #[test]
    fn hssp_examples() {
        let f = Field::new(7, 1).unwrap();
        let g = Arc::new(Group::affine_pm1(&f).unwrap());
        let h3 = Subgroup::generate(&g, &[g.affine_element(el(&f, 6), el(&f, 6)).unwrap()]);
        let inst = make_hssp_oracle(Action::kernel(g.clone()), &h3).unwrap();
        assert_eq!(
            level_partition(&inst.oracle).classes(),
            vec![vec![0, 6], vec![1, 5], vec![2, 4], vec![3]]
        );
        // The translation subgroup is not closed: its orbit partition is trivial.
        let t = Subgroup::generate(&g, &[g.affine_element(el(&f, 1), el(&f, 1)).unwrap()]);
        assert_eq!(make_hssp_oracle(Action::kernel(g.clone()), &t).unwrap_err(), Error::NotClosed);
        // Regular action gives the HSP partition.
        let reg = make_hssp_oracle(Action::regular(g.clone()), &h3).unwrap();
        let hsp = make_hsp_oracle(g, &h3).unwrap();
        assert_eq!(level_partition(&reg.oracle), level_partition(&hsp.oracle));
    }

    #[test]
    fn hqpp_examples() {
        let f7 = Field::new(7, 1).unwrap();
        let inst = make_hqpp_oracle(&f7, f7.zero()).unwrap();
        assert_eq!(
            level_partition(&inst.oracle).classes(),
            vec![vec![0], vec![1, 6], vec![2, 5], vec![3, 4]]
        );
        let f9 = Field::new(3, 2).unwrap();
        let p = level_partition(&make_hqpp_oracle(&f9, f9.zero()).unwrap().oracle);
        for x in f9.elements() {
            assert_eq!(p.class_of(x.value() as usize), p.class_of(f9.neg(x).value() as usize));
        }
        assert_eq!(
            make_hqpp_oracle(&Field::new(2, 1).unwrap(), FieldElement::ZERO).unwrap_err(),
            Error::EvenCharacteristic
        );
    }

    #[test]
    fn hpp_examples() {
        let f3 = Field::new(3, 1).unwrap();
        let xy = MultiPoly::from_terms(&f3, 2, [(vec![1, 1], f3.one())]).unwrap();
        let inst = make_hpp_oracle(&f3, 2, &xy).unwrap();
        let part = level_partition(&inst.oracle);
        let zero_class = part.classes().into_iter().find(|c| c.contains(&0)).unwrap();
        assert_eq!(zero_class.len(), 5);
        let f5 = Field::new(5, 1).unwrap();
        let lin = MultiPoly::from_terms(&f5, 3, [(vec![0, 1, 0], el(&f5, 2)), (vec![1, 0, 0], f5.one())]).unwrap();
        let part = level_partition(&make_hpp_oracle(&f5, 3, &lin).unwrap().oracle);
        assert_eq!(part.shape(), vec![25; 5]);
    }

    #[test]
    fn hpgp_examples() {
        let f5 = Field::new(5, 1).unwrap();
        let sq = MultiPoly::from_terms(&f5, 1, [(vec![2], f5.one())]).unwrap();
        let inst = make_hpgp_oracle(&f5, 1, &sq, 2).unwrap();
        let o = &inst.oracle;
        assert_eq!(o.query(2 + 5 * 4), o.query(3 + 5 * 4));
        assert_eq!(level_partition(o).shape(), vec![5; 5]);
        let zero = MultiPoly::zero(&f5, 2);
        let flat = make_hpgp_oracle(&f5, 2, &zero, 2).unwrap();
        let p = level_partition(&flat.oracle);
        assert_eq!(p.class_of(3 + 25 * 2), p.class_of(24 + 25 * 2));
    }

    #[test]
    fn grover_example() {
        let f = Field::new(5, 1).unwrap();
        let inst = make_grover_oracle(&f, el(&f, 3)).unwrap();
        assert_eq!(level_partition(&inst.oracle).classes(), vec![vec![0, 1, 2, 4], vec![3]]);
        match inst.hidden() {
            Hidden::GroverTarget { stabilizer, .. } => assert_eq!(stabilizer.order(), 4),
            h => panic!("unexpected {h:?}"),
        }
    }

    #[test]
    fn zpmzp_qv_example() {
        let a = vec![vec![1, 1], vec![0, 1]];
        assert_eq!(zpmzp_qv(3, &a, &[1, 0], 2), vec![2, 0]);
        assert_eq!(zpmzp_qv(3, &a, &[1, 0], 1), vec![1, 0]);
        assert_eq!(zpmzp_qv(3, &a, &[0, 0], 2), vec![0, 0]);
        let inst = make_zpmzp_oracle(3, 2, &a, &[1, 0]).unwrap();
        assert_eq!(level_partition(&inst.oracle).shape(), vec![3; 9]);
    }
}
