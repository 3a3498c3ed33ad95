use std::collections::{HashMap, HashSet};
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::{Arc, Mutex};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{encode_point, Oracle};
use crate::error::{Error, Result};
use crate::ff::{Field, FieldElement};
use crate::group::{Action, Group};

/// `f_HSP(g) = (f(g ∘ m_1), ..., f(g ∘ m_t))` on the acting group.
pub struct LiftedOracle<O> {
    inner: O,
    action: Action,
    base: Vec<usize>,
    count: AtomicU64,
}

impl<O: Oracle> LiftedOracle<O> {
    pub fn new(inner: O, action: Action, base: Vec<usize>) -> Result<Self> {
        if base.is_empty() {
            return Err(Error::InvalidBase);
        }
        if inner.domain_size() != action.domain_size() {
            return Err(Error::DomainMismatch(inner.domain_size()));
        }
        if let Some(&m) = base.iter().find(|&&m| m >= action.domain_size()) {
            return Err(Error::DomainMismatch(m));
        }
        Ok(LiftedOracle {
            inner,
            action,
            base,
            count: AtomicU64::new(0),
        })
    }

    pub fn inner(&self) -> &O {
        &self.inner
    }

    pub fn base(&self) -> &[usize] {
        &self.base
    }
}

impl<O: Oracle> Oracle for LiftedOracle<O> {
    type Output = Vec<O::Output>;

    fn domain_size(&self) -> usize {
        self.action.group().order()
    }

    fn query(&self, g: usize) -> Vec<O::Output> {
        assert!(g < self.domain_size(), "query {g} outside the group");
        self.count.fetch_add(1, Ordering::Relaxed);
        self.base
            .iter()
            .map(|&m| self.inner.query(self.action.act(g, m)))
            .collect()
    }

    fn query_count(&self) -> u64 {
        self.count.load(Ordering::Relaxed)
    }
}

/// `f°(b) = min(f(b, 1), f(b, -1))` on `F_q`, from an oracle on `Aff_q({±1})`.
pub struct FoldedOracle<O> {
    inner: O,
    group: Arc<Group>,
    count: AtomicU64,
}

impl<O: Oracle> FoldedOracle<O> {
    pub fn new(inner: O, group: Arc<Group>) -> Result<Self> {
        if !Action::kernel(group.clone()).is_affine_pm1() {
            return Err(Error::InvalidGroup("folding needs Aff_q({±1}) with q odd".into()));
        }
        if inner.domain_size() != group.order() {
            return Err(Error::DomainMismatch(inner.domain_size()));
        }
        Ok(FoldedOracle {
            inner,
            group,
            count: AtomicU64::new(0),
        })
    }
}

impl<O: Oracle> Oracle for FoldedOracle<O> {
    type Output = O::Output;

    fn domain_size(&self) -> usize {
        self.group.k_order()
    }

    fn query(&self, b: usize) -> O::Output {
        assert!(b < self.domain_size());
        self.count.fetch_add(1, Ordering::Relaxed);
        // Complement indices: 0 is 1, 1 is -1.
        let plus = self.inner.query(self.group.compose(b, 0));
        let minus = self.inner.query(self.group.compose(b, 1));
        plus.min(minus)
    }

    fn query_count(&self) -> u64 {
        self.count.load(Ordering::Relaxed)
    }
}

type IndexMap = Arc<dyn Fn(usize) -> usize + Send + Sync>;

/// `x -> f(map(x))` on a new domain.
pub struct MappedOracle<O> {
    inner: O,
    map: IndexMap,
    domain: usize,
    count: AtomicU64,
}

impl<O: Oracle> MappedOracle<O> {
    pub fn new(inner: O, domain: usize, map: impl Fn(usize) -> usize + Send + Sync + 'static) -> Self {
        MappedOracle {
            inner,
            map: Arc::new(map),
            domain,
            count: AtomicU64::new(0),
        }
    }

    pub fn inner(&self) -> &O {
        &self.inner
    }
}

impl<O: Oracle> Oracle for MappedOracle<O> {
    type Output = O::Output;

    fn domain_size(&self) -> usize {
        self.domain
    }

    fn query(&self, x: usize) -> O::Output {
        assert!(x < self.domain, "query {x} outside domain of size {}", self.domain);
        self.count.fetch_add(1, Ordering::Relaxed);
        self.inner.query((self.map)(x))
    }

    fn query_count(&self) -> u64 {
        self.count.load(Ordering::Relaxed)
    }
}

/// Restrict an oracle on `F_q^n` to the line `t -> s + t d`.
pub fn line_restriction<O: Oracle>(
    inner: O,
    field: &Field,
    s: &[FieldElement],
    d: &[FieldElement],
) -> Result<MappedOracle<O>> {
    if s.len() != d.len() {
        return Err(Error::ArityMismatch {
            expected: s.len(),
            got: d.len(),
        });
    }
    let q = field.q() as usize;
    if q.checked_pow(s.len() as u32) != Some(inner.domain_size()) {
        return Err(Error::DomainMismatch(inner.domain_size()));
    }
    let (f, s, d) = (field.clone(), s.to_vec(), d.to_vec());
    Ok(MappedOracle::new(inner, q, move |t| {
        let t = FieldElement::from_index(t);
        let pt: Vec<FieldElement> = s.iter().zip(&d).map(|(&a, &b)| f.add(a, f.mul(t, b))).collect();
        encode_point(&f, &pt)
    }))
}

/// Restrict an oracle on `F_q^n × F_q` to `(x, y) -> ((v_1 x, ..., v_n x), y)`,
/// with `(x, y)` encoded as `x + q y`.
pub fn diagonal_restriction<O: Oracle>(inner: O, field: &Field, v: &[FieldElement]) -> Result<MappedOracle<O>> {
    let q = field.q() as usize;
    let n = v.len();
    let qn = q.checked_pow(n as u32).ok_or(Error::DomainMismatch(usize::MAX))?;
    if qn.checked_mul(q) != Some(inner.domain_size()) {
        return Err(Error::DomainMismatch(inner.domain_size()));
    }
    let (f, v) = (field.clone(), v.to_vec());
    Ok(MappedOracle::new(inner, q * q, move |i| {
        let (x, y) = (FieldElement::from_index(i % q), i / q);
        let pt: Vec<FieldElement> = v.iter().map(|&c| f.mul(c, x)).collect();
        encode_point(&f, &pt) + qn * y
    }))
}

struct ScrambleState<T> {
    labels: HashMap<T, u64>,
    used: HashSet<u64>,
    rng: ChaCha8Rng,
}

/// Replaces every output by a seeded random label, consistently.
/// Solvers must give the same answers through it.
pub struct Scrambled<O: Oracle> {
    inner: O,
    state: Mutex<ScrambleState<O::Output>>,
}

impl<O: Oracle> Scrambled<O> {
    pub fn new(inner: O, seed: u64) -> Self {
        Scrambled {
            inner,
            state: Mutex::new(ScrambleState {
                labels: HashMap::new(),
                used: HashSet::new(),
                rng: ChaCha8Rng::seed_from_u64(seed),
            }),
        }
    }
}

impl<O: Oracle> Oracle for Scrambled<O> {
    type Output = u64;

    fn domain_size(&self) -> usize {
        self.inner.domain_size()
    }

    fn query(&self, x: usize) -> u64 {
        let out = self.inner.query(x);
        let mut st = self.state.lock().expect("scrambler lock");
        if let Some(&l) = st.labels.get(&out) {
            return l;
        }
        let l = loop {
            let cand: u64 = st.rng.gen();
            if st.used.insert(cand) {
                break cand;
            }
        };
        st.labels.insert(out, l);
        l
    }

    fn query_count(&self) -> u64 {
        self.inner.query_count()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::{level_partition, LevelSetOracle};

    #[test]
    fn lifted_query_accounting() {
        let f = Field::new(7, 1).unwrap();
        let g = Arc::new(Group::affine_pm1(&f).unwrap());
        let act = Action::kernel(g);
        let inner = LevelSetOracle::new(7, |x| x as u64);
        let lifted = LiftedOracle::new(&inner, act, vec![0, 1, 2]).unwrap();
        for g in 0..14 {
            lifted.query(g);
        }
        assert_eq!(lifted.query_count(), 14);
        assert_eq!(inner.query_count(), 42);
    }

    #[test]
    fn line_and_diagonal() {
        let f = Field::new(3, 1).unwrap();
        let inner = LevelSetOracle::new(9, |x| x as u64);
        let one = f.one();
        let line = line_restriction(&inner, &f, &[f.zero(), one], &[one, one]).unwrap();
        // t = 2 -> (2, 1 + 2) = (2, 0)
        assert_eq!(line.query(2), 2);
        let hp = LevelSetOracle::new(27, |x| x as u64);
        let diag = diagonal_restriction(&hp, &f, &[one, f.element(2).unwrap()]).unwrap();
        // x = 1, y = 2 -> (1, 2) and y = 2: 1 + 3*2 + 9*2
        assert_eq!(diag.query(1 + 3 * 2), 1 + 6 + 18);
    }

    #[test]
    fn scrambling_keeps_partition() {
        let inner = LevelSetOracle::new(20, |x| (x % 7) as u64);
        let s = Scrambled::new(&inner, 99);
        assert_eq!(level_partition(&s), level_partition(&inner.fresh()));
        assert_ne!(s.query(3), 3);
    }
}
