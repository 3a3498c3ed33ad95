use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::ff::{Field, FieldElement};
use crate::group::{Action, Group, Subgroup};
use crate::oracle::{decode_point, level_partition, Oracle};

/// Which subgroups the solver may return.
#[derive(Clone, Debug, Default)]
pub enum SubgroupFamily {
    /// Any subgroup (closed ones, for HSSP).
    #[default]
    Any,
    /// Exactly one of these.
    List(Vec<Subgroup>),
}

fn pick(family: &SubgroupFamily, h: Subgroup) -> Result<Subgroup> {
    match family {
        SubgroupFamily::Any => Ok(h),
        SubgroupFamily::List(list) => match list.iter().filter(|c| **c == h).count() {
            0 => Err(Error::NoConsistentSubgroup),
            1 => Ok(h),
            n => Err(Error::Ambiguous(n)),
        },
    }
}

/// Query every group element; the class of the identity is the hidden
/// subgroup, and the level sets must be exactly its right cosets.
pub fn brute_force_hsp<O: Oracle>(oracle: &O, group: &Group, family: &SubgroupFamily) -> Result<Subgroup> {
    if oracle.domain_size() != group.order() {
        return Err(Error::DomainMismatch(oracle.domain_size()));
    }
    let labels: Vec<O::Output> = (0..group.order()).map(|g| oracle.query(g)).collect();
    let id = &labels[group.identity()];
    let members: Vec<usize> = (0..group.order()).filter(|&g| &labels[g] == id).collect();
    let h = Subgroup::from_elements(group, &members).map_err(|_| Error::NoConsistentSubgroup)?;
    for g in 0..group.order() {
        for &x in h.elements() {
            if labels[group.mul(x, g)] != labels[g] {
                return Err(Error::NoConsistentSubgroup);
            }
        }
    }
    let mut classes: HashMap<&O::Output, usize> = HashMap::new();
    for l in &labels {
        *classes.entry(l).or_default() += 1;
    }
    if classes.values().any(|&n| n != h.order()) {
        return Err(Error::NoConsistentSubgroup);
    }
    pick(family, h)
}

/// Query every point; recover `π*` of the level-set partition and check
/// that its orbits reproduce the level sets.
pub fn brute_force_hssp<O: Oracle>(oracle: &O, action: &Action, family: &SubgroupFamily) -> Result<Subgroup> {
    if oracle.domain_size() != action.domain_size() {
        return Err(Error::DomainMismatch(oracle.domain_size()));
    }
    let pi = level_partition(oracle);
    let h = action.partition_star(&pi);
    if action.subgroup_star(&h) != pi {
        return Err(Error::NoConsistentSubgroup);
    }
    pick(family, h)
}

/// Exhaustive abelian HSP on the plane `F_q^2`: returns a nonzero direction
/// spanning the level set of the origin, or `None` when the oracle is
/// constant. The level sets must be the cosets of a line through the origin.
pub fn find_linear_kernel<O: Oracle>(oracle: &O, field: &Field) -> Result<Option<[FieldElement; 2]>> {
    let q = field.q() as usize;
    if oracle.domain_size() != q * q {
        return Err(Error::DomainMismatch(oracle.domain_size()));
    }
    let labels: Vec<O::Output> = (0..q * q).map(|x| oracle.query(x)).collect();
    let zero: Vec<usize> = (0..q * q).filter(|&x| labels[x] == labels[0]).collect();
    if zero.len() == q * q {
        return Ok(None);
    }
    if zero.len() != q {
        return Err(Error::PromiseViolation("level sets are not cosets of a line".into()));
    }
    let dir = decode_point(field, zero[1], 2);
    for t in field.elements() {
        for s in field.elements() {
            let base = decode_point(field, s.value() as usize, 2);
            let p = [field.add(base[0], field.mul(t, dir[0])), field.add(base[1], field.mul(t, dir[1]))];
            let idx = crate::oracle::encode_point(field, &p);
            if labels[idx] != labels[s.value() as usize] {
                return Err(Error::PromiseViolation("level sets are not cosets of a line".into()));
            }
        }
    }
    Ok(Some([dir[0], dir[1]]))
}
