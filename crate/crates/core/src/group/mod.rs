//! Semidirect products, their actions, and the Galois connection between
//! subgroups and partitions.

mod action;
#[allow(clippy::module_inception)]
mod group;
mod partition;
mod subgroup;

pub use action::{Action, ActionKind};
pub(crate) use group::fg_decode;
pub use group::{Group, GroupDescriptor, MAX_GROUP_ORDER};
pub use partition::Partition;
pub use subgroup::{all_subgroups, Subgroup, MAX_LATTICE_ORDER};

use crate::error::Result;
use crate::ff::{FieldElement, Poly};

/// The standard complement `A_Q = {a_{Q,t}}`, generated by `a_{Q,t_i}` for the
/// power-basis units `t_i` of `F_q`, where `a_{Q,t} = (Q - a_t Q, t)`.
pub fn fg_conjugate_complement(group: &Group, q: &Poly) -> Result<Subgroup> {
    let field = group
        .field()
        .ok_or_else(|| crate::Error::InvalidGroup("not a function graph group".into()))?;
    let gens = field
        .additive_basis()
        .into_iter()
        .map(|t| fg_complement_element(group, q, t))
        .collect::<Result<Vec<_>>>()?;
    Ok(Subgroup::generate(group, &gens))
}

/// `a_{Q,t} = (Q - a_t Q, t)`.
pub fn fg_complement_element(group: &Group, q: &Poly, t: FieldElement) -> Result<usize> {
    let k = q.sub(&q.shift(t))?;
    group.fg_element(&k, t)
}
