use std::sync::Arc;

use super::group::{fg_decode, Group, GroupDescriptor};
use super::partition::Partition;
use super::subgroup::Subgroup;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ActionKind {
    /// Left multiplication on `G` itself; orbits of `H` are right cosets `Hg`.
    Regular,
    /// `(y, h) ∘ x = y φ_h(x)` on `K`.
    Kernel,
    /// `(Q, t) ∘ (x, y) = (x + t, y + Q(x + t))` on `F_q × F_q`, with the
    /// point `(x, y)` encoded as `x + q y`.
    Shifting,
}

/// A left action of a group on `0..domain_size`.
#[derive(Clone, Debug)]
pub struct Action {
    group: Arc<Group>,
    kind: ActionKind,
    domain: usize,
    // Shifting only: evals[k * q + x] = Q_k(x).
    evals: Vec<u32>,
    q: usize,
}

impl Action {
    pub fn regular(group: Arc<Group>) -> Action {
        let domain = group.order();
        Action {
            group,
            kind: ActionKind::Regular,
            domain,
            evals: Vec::new(),
            q: 0,
        }
    }

    pub fn kernel(group: Arc<Group>) -> Action {
        let domain = group.k_order();
        Action {
            group,
            kind: ActionKind::Kernel,
            domain,
            evals: Vec::new(),
            q: 0,
        }
    }

    /// The shifting action of a function graph group.
    pub fn shifting(group: Arc<Group>) -> Result<Action> {
        let d = group.fg_degree()?;
        let field = group.field().expect("function graph groups carry a field").clone();
        let q = field.q() as usize;
        let mut evals = vec![0u32; group.k_order() * q];
        for k in 0..group.k_order() {
            let p = fg_decode(&field, d, k);
            for x in field.elements() {
                evals[k * q + x.value() as usize] = p.eval(x).value();
            }
        }
        Ok(Action {
            group,
            kind: ActionKind::Shifting,
            domain: q * q,
            evals,
            q,
        })
    }

    pub fn group(&self) -> &Arc<Group> {
        &self.group
    }

    pub fn kind(&self) -> ActionKind {
        self.kind
    }

    pub fn domain_size(&self) -> usize {
        self.domain
    }

    pub fn apply(&self, g: usize, m: usize) -> Result<usize> {
        if m >= self.domain {
            return Err(Error::DomainMismatch(m));
        }
        if g >= self.group.order() {
            return Err(Error::InvalidGroup(format!("{g} is not a group element")));
        }
        Ok(self.act(g, m))
    }

    /// `g ∘ m` without range checks.
    #[inline]
    pub fn act(&self, g: usize, m: usize) -> usize {
        let grp = &*self.group;
        match self.kind {
            ActionKind::Regular => grp.mul(g, m),
            ActionKind::Kernel => grp.k_op(grp.kpart(g), grp.phi(grp.hpart(g), m)),
            ActionKind::Shifting => {
                let field = grp.field().expect("shifting action has a field");
                let q = self.q;
                let (x, y) = (m % q, m / q);
                let t = grp.hpart(g);
                let xt = field
                    .add(
                        crate::ff::FieldElement::from_index(x),
                        crate::ff::FieldElement::from_index(t),
                    )
                    .value() as usize;
                let qv = self.evals[grp.kpart(g) * q + xt] as usize;
                let ny = field
                    .add(
                        crate::ff::FieldElement::from_index(y),
                        crate::ff::FieldElement::from_index(qv),
                    )
                    .value() as usize;
                xt + q * ny
            }
        }
    }

    /// Exhaustive check of `e ∘ m = m` and `g ∘ (h ∘ m) = (gh) ∘ m`.
    pub fn verify_axioms(&self) -> Result<()> {
        let grp = &*self.group;
        for m in 0..self.domain {
            if self.act(grp.identity(), m) != m {
                return Err(Error::InvalidGroup(format!("identity moves {m}")));
            }
        }
        for g in grp.elements() {
            for h in grp.elements() {
                let gh = grp.mul(g, h);
                for m in 0..self.domain {
                    if self.act(g, self.act(h, m)) != self.act(gh, m) {
                        return Err(Error::InvalidGroup(format!(
                            "compatibility fails at ({g}, {h}, {m})"
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    /// Only the identity fixes every point.
    pub fn is_faithful(&self) -> bool {
        self.group
            .elements()
            .skip(1)
            .all(|g| (0..self.domain).any(|m| self.act(g, m) != m))
    }

    /// `H ∘ m`, sorted.
    pub fn orbit(&self, h: &Subgroup, m: usize) -> Vec<usize> {
        let mut o: Vec<usize> = h.elements().iter().map(|&g| self.act(g, m)).collect();
        o.sort_unstable();
        o.dedup();
        o
    }

    /// `G_m = {g : g ∘ m = m}`.
    pub fn stabilizer(&self, m: usize) -> Subgroup {
        let els: Vec<usize> = self
            .group
            .elements()
            .filter(|&g| self.act(g, m) == m)
            .collect();
        Subgroup::from_elements(&self.group, &els).expect("stabilizers are subgroups")
    }

    /// `H*`: the orbit partition of `H`.
    pub fn subgroup_star(&self, h: &Subgroup) -> Partition {
        let mut class = vec![usize::MAX; self.domain];
        for m in 0..self.domain {
            if class[m] != usize::MAX {
                continue;
            }
            for &g in h.elements() {
                class[self.act(g, m)] = m;
            }
        }
        Partition::from_class_map(&class)
    }

    /// `π*`: elements mapping every class of `π` onto itself.
    pub fn partition_star(&self, pi: &Partition) -> Subgroup {
        let els: Vec<usize> = self
            .group
            .elements()
            .filter(|&g| (0..self.domain).all(|m| pi.class_of(self.act(g, m)) == pi.class_of(m)))
            .collect();
        Subgroup::from_elements(&self.group, &els).expect("symmetry groups are subgroups")
    }

    /// `H**`.
    pub fn closure(&self, h: &Subgroup) -> Subgroup {
        self.partition_star(&self.subgroup_star(h))
    }

    pub fn is_closed(&self, h: &Subgroup) -> bool {
        self.closure(h).order() == h.order()
    }

    /// Check the action is a Frobenius action: transitive, some non-identity
    /// element fixes a point, and no non-identity element fixes two.
    pub fn check_frobenius(&self) -> Result<()> {
        let whole = Subgroup::whole(&self.group);
        if self.orbit(&whole, 0).len() != self.domain {
            return Err(Error::NotFrobenius("action is not transitive".into()));
        }
        let mut some_fix = false;
        for g in self.group.elements().skip(1) {
            let fixed = (0..self.domain).filter(|&m| self.act(g, m) == m).count();
            if fixed > 1 {
                return Err(Error::NotFrobenius(format!("element {g} fixes {fixed} points")));
            }
            some_fix |= fixed == 1;
        }
        if !some_fix {
            return Err(Error::NotFrobenius("the action is regular".into()));
        }
        Ok(())
    }

    /// True when the group is `Aff_q({±1})` with `q` odd under its kernel action.
    pub fn is_affine_pm1(&self) -> bool {
        match self.group.descriptor() {
            GroupDescriptor::Affine { q, h } => {
                let minus_one = self.group.field().map(|f| f.neg(f.one()).value() as u64);
                self.kind == ActionKind::Kernel
                    && q % 2 == 1
                    && h.len() == 2
                    && h[0] == 1
                    && Some(h[1]) == minus_one
            }
            _ => false,
        }
    }
}
