//! Query-counted level-set oracles and the problem instances built on them.
//!
//! Solvers only ever see something implementing [`Oracle`]. The hidden
//! object lives in [`ProblemInstance`], which solvers never receive.

mod codec;
mod instance;
mod promise;
mod wrappers;

use std::fmt::Debug;
use std::hash::Hash;
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::Arc;

pub use codec::{InstanceJson, HarnessSection};
pub use instance::{
    make_grover_oracle, make_hpgp_oracle, make_hpp_oracle, make_hqpp_oracle, make_hsp_oracle,
    make_hssp_oracle, make_zpmzp_oracle, zpmzp_qv, Family, Hidden, ProblemInstance, Setting,
};
pub use promise::{check_partition_promise, PROMISE_RANDOM_PAIRS};
pub use wrappers::{
    diagonal_restriction, line_restriction, FoldedOracle, LiftedOracle, MappedOracle, Scrambled,
};

use crate::ff::{Field, FieldElement};
use crate::group::Partition;

/// A black-box function on `0..domain_size()` whose only useful content is
/// its level-set partition. Every call to [`Oracle::query`] counts.
pub trait Oracle {
    type Output: Clone + Eq + Ord + Hash + Debug;

    fn domain_size(&self) -> usize;

    /// Panics when `x` is outside the domain.
    fn query(&self, x: usize) -> Self::Output;

    fn query_count(&self) -> u64;
}

impl<O: Oracle + ?Sized> Oracle for &O {
    type Output = O::Output;

    fn domain_size(&self) -> usize {
        (**self).domain_size()
    }

    fn query(&self, x: usize) -> O::Output {
        (**self).query(x)
    }

    fn query_count(&self) -> u64 {
        (**self).query_count()
    }
}

impl<O: Oracle + ?Sized> Oracle for Arc<O> {
    type Output = O::Output;

    fn domain_size(&self) -> usize {
        (**self).domain_size()
    }

    fn query(&self, x: usize) -> O::Output {
        (**self).query(x)
    }

    fn query_count(&self) -> u64 {
        (**self).query_count()
    }
}

type Canon = Arc<dyn Fn(usize) -> u64 + Send + Sync>;

/// Oracle defined by a canonical-label map on its domain.
pub struct LevelSetOracle {
    domain: usize,
    canon: Canon,
    count: AtomicU64,
}

impl Debug for LevelSetOracle {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("LevelSetOracle")
            .field("domain", &self.domain)
            .field("queries", &self.query_count())
            .finish()
    }
}

impl LevelSetOracle {
    pub fn new(domain: usize, canon: impl Fn(usize) -> u64 + Send + Sync + 'static) -> Self {
        LevelSetOracle {
            domain,
            canon: Arc::new(canon),
            count: AtomicU64::new(0),
        }
    }

    /// Oracle whose label at `x` is `class[x]`.
    pub fn from_table(class: Vec<u64>) -> Self {
        let class = Arc::new(class);
        let n = class.len();
        LevelSetOracle::new(n, move |x| class[x])
    }

    /// A fresh oracle with the same function and a zero counter.
    pub fn fresh(&self) -> Self {
        LevelSetOracle {
            domain: self.domain,
            canon: self.canon.clone(),
            count: AtomicU64::new(0),
        }
    }

    /// Label without touching the counter, for harness-side checks.
    pub(crate) fn peek(&self, x: usize) -> u64 {
        (self.canon)(x)
    }
}

impl Oracle for LevelSetOracle {
    type Output = u64;

    fn domain_size(&self) -> usize {
        self.domain
    }

    fn query(&self, x: usize) -> u64 {
        assert!(x < self.domain, "query {x} outside domain of size {}", self.domain);
        self.count.fetch_add(1, Ordering::Relaxed);
        (self.canon)(x)
    }

    fn query_count(&self) -> u64 {
        self.count.load(Ordering::Relaxed)
    }
}

/// Query every point and return the induced partition.
pub fn level_partition<O: Oracle>(oracle: &O) -> Partition {
    let labels: Vec<O::Output> = (0..oracle.domain_size()).map(|x| oracle.query(x)).collect();
    Partition::from_labels(labels.len(), |x| labels[x].clone())
}

/// `Σ x_i q^i`, the index of a point of `F_q^n`.
pub fn encode_point(field: &Field, coords: &[FieldElement]) -> usize {
    let q = field.q() as usize;
    coords.iter().rev().fold(0, |acc, c| acc * q + c.value() as usize)
}

pub fn decode_point(field: &Field, mut idx: usize, n: usize) -> Vec<FieldElement> {
    let q = field.q() as usize;
    (0..n)
        .map(|_| {
            let c = FieldElement::from_index(idx % q);
            idx /= q;
            c
        })
        .collect()
}
