//! Strong bases: the intersection condition, Frobenius separation, random
//! and deterministic constructions, and exhaustive verification.

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ff::Field;
use crate::group::{all_subgroups, fg_conjugate_complement, fg_decode, Action, ActionKind, Subgroup};

/// The subgroup family a base is meant to serve.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BaseFamily {
    /// Point stabilizers of a Frobenius action (the conjugates of the complement).
    FrobeniusComplements,
    /// The standard complements `A_Q` of a function graph group.
    StandardComplements,
    /// All closed subgroups; needs the subgroup lattice.
    Closed,
    /// An explicit list, not assumed closed under conjugation.
    Explicit(Vec<Subgroup>),
}

impl BaseFamily {
    fn conjugation_closed(&self) -> bool {
        !matches!(self, BaseFamily::Explicit(_))
    }

    /// Enumerate the family.
    pub fn members(&self, action: &Action) -> Result<Vec<Subgroup>> {
        let group = action.group();
        match self {
            BaseFamily::FrobeniusComplements => {
                let mut out: Vec<Subgroup> = (0..action.domain_size()).map(|m| action.stabilizer(m)).collect();
                out.dedup();
                Ok(out)
            }
            BaseFamily::StandardComplements => {
                let d = group.fg_degree()?;
                let field = group.field().expect("function graph groups carry a field");
                // A_Q depends on Q only up to constants.
                (0..group.k_order())
                    .map(|k| fg_decode(field, d, k))
                    .filter(|q| q.coeff(0).is_zero())
                    .map(|q| fg_conjugate_complement(group, &q))
                    .collect()
            }
            BaseFamily::Closed => Ok(all_subgroups(group)?
                .into_iter()
                .filter(|h| action.is_closed(h))
                .collect()),
            BaseFamily::Explicit(list) => Ok(list.clone()),
        }
    }
}

/// A candidate strong base `B ⊆ M`.
#[derive(Clone, Debug)]
pub struct BaseSet {
    action: Action,
    points: Vec<usize>,
    family: BaseFamily,
}

/// Wire form of a base.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BaseJson {
    pub points: Vec<usize>,
}

impl BaseSet {
    pub fn new(action: Action, points: Vec<usize>, family: BaseFamily) -> Result<BaseSet> {
        let mut sorted = points.clone();
        sorted.sort_unstable();
        sorted.dedup();
        if points.is_empty() || sorted.len() != points.len() {
            return Err(Error::InvalidBase);
        }
        if let Some(&m) = points.iter().find(|&&m| m >= action.domain_size()) {
            return Err(Error::DomainMismatch(m));
        }
        Ok(BaseSet {
            action,
            points,
            family,
        })
    }

    pub fn points(&self) -> &[usize] {
        &self.points
    }

    pub fn action(&self) -> &Action {
        &self.action
    }

    pub fn family(&self) -> &BaseFamily {
        &self.family
    }

    pub fn to_json(&self) -> BaseJson {
        BaseJson {
            points: self.points.clone(),
        }
    }
}

/// Bitset of the product set `H · G_m`.
fn product_set(action: &Action, h: &Subgroup, stab: &Subgroup) -> Vec<bool> {
    let g = action.group();
    let mut out = vec![false; g.order()];
    for &a in h.elements() {
        for &b in stab.elements() {
            out[g.mul(a, b)] = true;
        }
    }
    out
}

/// Whether `∩_{m ∈ points} H G_m = H`.
fn intersection_is_h(action: &Action, h: &Subgroup, points: impl Iterator<Item = usize>) -> bool {
    let g = action.group();
    let mut acc = vec![true; g.order()];
    for m in points {
        let p = product_set(action, h, &action.stabilizer(m));
        for (a, b) in acc.iter_mut().zip(p) {
            *a &= b;
        }
    }
    acc.iter().filter(|&&x| x).count() == h.order()
}

/// Exhaustive strong-base check over the whole family.
///
/// Conjugation-closed families use `∩_{m∈B} H G_m = H` for every member;
/// explicit lists use the full condition over all `g ∈ G`.
pub fn verify_base(base: &BaseSet) -> Result<bool> {
    let action = &base.action;
    let members = base.family.members(action)?;
    for h in &members {
        let ok = if base.family.conjugation_closed() {
            intersection_is_h(action, h, base.points.iter().copied())
        } else {
            action.group().elements().all(|g| {
                intersection_is_h(action, h, base.points.iter().map(|&m| action.act(g, m)))
            })
        };
        if !ok {
            return Ok(false);
        }
    }
    Ok(true)
}

fn frobenius_complement(action: &Action) -> Result<Subgroup> {
    if action.kind() != ActionKind::Kernel {
        return Err(Error::NotFrobenius("separation is defined for the kernel action".into()));
    }
    action.check_frobenius()?;
    Ok(action.stabilizer(0))
}

/// Whether `z` separates `u ≠ v` in `K`: `v z ∉ H ∘ (u z)`.
pub fn separates(action: &Action, z: usize, u: usize, v: usize) -> Result<bool> {
    let h = frobenius_complement(action)?;
    separates_with(action, &h, z, u, v)
}

fn separates_with(action: &Action, h: &Subgroup, z: usize, u: usize, v: usize) -> Result<bool> {
    let k = action.domain_size();
    if u == v {
        return Err(Error::InvalidBase);
    }
    if let Some(&bad) = [z, u, v].iter().find(|&&x| x >= k) {
        return Err(Error::DomainMismatch(bad));
    }
    let g = action.group();
    let uz = g.k_op(u, z);
    let vz = g.k_op(v, z);
    Ok(!h.elements().iter().any(|&x| action.act(x, uz) == vz))
}

/// Number of `z ∈ K` separating `u` and `v`.
pub fn count_separators(action: &Action, u: usize, v: usize) -> Result<usize> {
    let h = frobenius_complement(action)?;
    let mut n = 0;
    for z in 0..action.domain_size() {
        n += usize::from(separates_with(action, &h, z, u, v)?);
    }
    Ok(n)
}

/// All pairs `u < v` with their separator counts.
pub fn separator_table(action: &Action) -> Result<Vec<(usize, usize, usize)>> {
    let h = frobenius_complement(action)?;
    let k = action.domain_size();
    let mut out = Vec::new();
    for u in 0..k {
        for v in u + 1..k {
            let mut n = 0;
            for z in 0..k {
                n += usize::from(separates_with(action, &h, z, u, v)?);
            }
            out.push((u, v, n));
        }
    }
    Ok(out)
}

/// Every pair of distinct kernel elements has a separator among `points`.
pub fn separates_all_pairs(action: &Action, points: &[usize]) -> Result<bool> {
    let h = frobenius_complement(action)?;
    let k = action.domain_size();
    for u in 0..k {
        for v in u + 1..k {
            let mut found = false;
            for &z in points {
                if separates_with(action, &h, z, u, v)? {
                    found = true;
                    break;
                }
            }
            if !found {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Smallest `ℓ` with `C(|K|, 2) · 2^{-ℓ} ≤ ε`.
pub fn random_base_size(kernel_order: usize, epsilon: f64) -> Result<usize> {
    if !(epsilon > 0.0 && epsilon < 1.0) {
        return Err(Error::Unsupported("epsilon must lie in (0, 1)".into()));
    }
    let pairs = (kernel_order * kernel_order.saturating_sub(1) / 2) as f64;
    let mut l = 0;
    while pairs * 0.5f64.powi(l as i32) > epsilon {
        l += 1;
    }
    Ok(l)
}

/// Sample `ℓ` kernel points uniformly with replacement; duplicates collapse.
pub fn random_base<R: Rng + ?Sized>(action: &Action, epsilon: f64, rng: &mut R) -> Result<BaseSet> {
    let h = frobenius_complement(action)?;
    let k = action.domain_size();
    if h.order() + 1 == k {
        return Err(Error::SharplyTwoTransitive);
    }
    let l = random_base_size(k, epsilon)?;
    let mut points: Vec<usize> = Vec::with_capacity(l);
    for _ in 0..l {
        let z = rng.gen_range(0..k);
        if !points.contains(&z) {
            points.push(z);
        }
    }
    BaseSet::new(action.clone(), points, BaseFamily::FrobeniusComplements)
}

/// First verified two-point base of `Aff_q({±1})` in canonical order.
pub fn deterministic_base_pm1(action: &Action) -> Result<BaseSet> {
    if !action.is_affine_pm1() {
        return Err(Error::InvalidGroup("expected Aff_q({±1}) with q odd".into()));
    }
    let k = action.domain_size();
    for a in 0..k {
        for b in a + 1..k {
            let base = BaseSet::new(action.clone(), vec![a, b], BaseFamily::FrobeniusComplements)?;
            if verify_base(&base)? {
                return Ok(base);
            }
        }
    }
    Err(Error::NotFrobenius("no two-point strong base exists".into()))
}

/// The points `(x_i, 0)` for the `d + 1` smallest field elements, encoded
/// as `x + q y` for the shifting action.
pub fn fg_point_base(field: &Field, d: usize, n: usize) -> Result<Vec<usize>> {
    if n >= 2 {
        return Err(Error::NoPolynomialSizeBase { n });
    }
    if (field.q() as usize) < d + 1 {
        return Err(Error::FieldTooSmall {
            q: field.q(),
            needed: d + 1,
        });
    }
    Ok((0..=d).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::Group;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;
    use std::sync::Arc;

    fn kernel(g: Group) -> Action {
        Action::kernel(Arc::new(g))
    }

    fn pm1(q: u64) -> Action {
        kernel(Group::affine_pm1(&Field::with_order(q).unwrap()).unwrap())
    }

    #[test]
    fn separation_example() {
        let act = pm1(7);
        assert!(separates(&act, 0, 0, 1).unwrap());
        assert_eq!(separates(&act, 0, 1, 1).unwrap_err(), Error::InvalidBase);
    }

    #[test]
    fn separator_counts_aff7_pm1() {
        let act = pm1(7);
        for (_, _, n) in separator_table(&act).unwrap() {
            assert!((6..=7).contains(&n));
        }
        let act = pm1(5);
        for (_, _, n) in separator_table(&act).unwrap() {
            assert!(n >= 4 && 2 * n > 5);
        }
    }

    #[test]
    fn sharply_two_transitive_has_weak_pairs() {
        let act = kernel(Group::affine_full(&Field::new(5, 1).unwrap()).unwrap());
        let min = separator_table(&act).unwrap().iter().map(|t| t.2).min().unwrap();
        assert!(2 * min <= 5);
        let mut rng = ChaCha8Rng::seed_from_u64(0);
        assert_eq!(random_base(&act, 0.25, &mut rng).unwrap_err(), Error::SharplyTwoTransitive);
    }

    #[test]
    fn base_size_formula() {
        assert_eq!(random_base_size(7, 0.25).unwrap(), 7);
        assert_eq!(random_base_size(9, 1.0 / 16.0).unwrap(), 10);
    }

    #[test]
    fn deterministic_bases() {
        assert_eq!(deterministic_base_pm1(&pm1(7)).unwrap().points(), &[0, 1]);
        assert_eq!(deterministic_base_pm1(&pm1(9)).unwrap().points().len(), 2);
        for q in [5u64, 7, 9] {
            let act = pm1(q);
            for z in 0..q as usize {
                let b = BaseSet::new(act.clone(), vec![z], BaseFamily::FrobeniusComplements).unwrap();
                assert!(!verify_base(&b).unwrap());
            }
        }
    }

    #[test]
    fn whole_domain_is_closed_family_base() {
        let act = pm1(5);
        let b = BaseSet::new(act.clone(), (0..5).collect(), BaseFamily::Closed).unwrap();
        assert!(verify_base(&b).unwrap());
    }

    #[test]
    fn separator_and_strong_base_agree_small() {
        for g in [
            Group::affine_pm1(&Field::new(7, 1).unwrap()).unwrap(),
            Group::affine(&Field::new(13, 1).unwrap(), &Field::new(13, 1).unwrap().multiplicative_subgroup(3).unwrap()).unwrap(),
        ] {
            let act = kernel(g);
            let k = act.domain_size();
            for a in 0..k {
                for b in a + 1..k {
                    let pts = vec![a, b];
                    let base = BaseSet::new(act.clone(), pts.clone(), BaseFamily::FrobeniusComplements).unwrap();
                    assert_eq!(verify_base(&base).unwrap(), separates_all_pairs(&act, &pts).unwrap());
                }
            }
        }
    }

    #[test]
    fn explicit_family_general_form_agrees() {
        let act = pm1(7);
        let fc = BaseFamily::FrobeniusComplements.members(&act).unwrap();
        for pts in [vec![0, 1], vec![2], vec![3, 5]] {
            let closed = BaseSet::new(act.clone(), pts.clone(), BaseFamily::FrobeniusComplements).unwrap();
            let general = BaseSet::new(act.clone(), pts, BaseFamily::Explicit(fc.clone())).unwrap();
            assert_eq!(verify_base(&closed).unwrap(), verify_base(&general).unwrap());
        }
    }

    #[test]
    fn fg_base() {
        let f5 = Field::new(5, 1).unwrap();
        assert_eq!(fg_point_base(&f5, 2, 1).unwrap(), vec![0, 1, 2]);
        assert!(matches!(
            fg_point_base(&Field::new(2, 1).unwrap(), 2, 1),
            Err(Error::FieldTooSmall { .. })
        ));
        assert_eq!(fg_point_base(&f5, 2, 2).unwrap_err(), Error::NoPolynomialSizeBase { n: 2 });
        let g = Arc::new(Group::function_graph(&Field::new(3, 1).unwrap(), 1).unwrap());
        let act = Action::shifting(g).unwrap();
        let pts = fg_point_base(&Field::new(3, 1).unwrap(), 1, 1).unwrap();
        let b = BaseSet::new(act.clone(), pts, BaseFamily::StandardComplements).unwrap();
        assert!(verify_base(&b).unwrap());
        let weak = BaseSet::new(act, vec![0], BaseFamily::StandardComplements).unwrap();
        assert!(!verify_base(&weak).unwrap());
    }
}
