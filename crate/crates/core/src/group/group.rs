use std::fmt;

use serde::{Deserialize, Serialize};
use serde_json::json;

use crate::error::{Error, Result};
use crate::ff::{Field, FieldElement, Poly};

/// Largest group enumerated element by element.
pub const MAX_GROUP_ORDER: usize = 1_000_000;

/// JSON descriptor of a group, as consumed by the CLI.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum GroupDescriptor {
    /// `F_q ⋊ H` for a subgroup `H` of `F_q^*`, listed by element encodings.
    Affine {
        q: u64,
        #[serde(rename = "H")]
        h: Vec<u64>,
    },
    /// Polynomials of degree at most `d` in `n` variables, shifted by `F_q^n`.
    FunctionGraph {
        q: u64,
        d: usize,
        #[serde(default = "one")]
        n: usize,
    },
    /// `Z_p^m ⋊ Z_p` with the generator of `Z_p` acting by `A`.
    Zpmzp {
        p: u64,
        m: usize,
        #[serde(rename = "A")]
        a: Vec<Vec<u64>>,
    },
    /// Explicit multiplication tables; identity at index 0 in both factors.
    /// `phi[h][k]` is the image of `k` under the automorphism of `h`.
    SemidirectTable {
        #[serde(rename = "K")]
        k: Vec<Vec<usize>>,
        #[serde(rename = "H")]
        h: Vec<Vec<usize>>,
        phi: Vec<Vec<usize>>,
    },
}

fn one() -> usize {
    1
}

#[derive(Clone, Debug)]
enum Factor {
    /// `Z_p^r`, indexed by base-`p` digits.
    Elementary { p: u32, r: u32, order: usize },
    Table {
        order: usize,
        mul: Vec<u32>,
        inv: Vec<u32>,
    },
}

impl Factor {
    fn elementary(p: u32, r: u32) -> Factor {
        Factor::Elementary {
            p,
            r,
            order: (p as usize).pow(r),
        }
    }

    fn table(rows: &[Vec<usize>]) -> Result<Factor> {
        let n = rows.len();
        if n == 0 || rows.iter().any(|r| r.len() != n || r.iter().any(|&x| x >= n)) {
            return Err(Error::InvalidGroup("multiplication table must be square".into()));
        }
        if (0..n).any(|a| rows[0][a] != a || rows[a][0] != a) {
            return Err(Error::InvalidGroup("index 0 must be the identity".into()));
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if rows[rows[a][b]][c] != rows[a][rows[b][c]] {
                        return Err(Error::InvalidGroup("table is not associative".into()));
                    }
                }
            }
        }
        let mut inv = vec![0u32; n];
        for a in 0..n {
            let b = (0..n)
                .find(|&b| rows[a][b] == 0)
                .ok_or_else(|| Error::InvalidGroup(format!("element {a} has no inverse")))?;
            inv[a] = b as u32;
        }
        Ok(Factor::Table {
            order: n,
            mul: rows.iter().flatten().map(|&x| x as u32).collect(),
            inv,
        })
    }

    fn order(&self) -> usize {
        match self {
            Factor::Elementary { order, .. } | Factor::Table { order, .. } => *order,
        }
    }

    #[inline]
    fn op(&self, a: usize, b: usize) -> usize {
        match self {
            Factor::Elementary { p, r, .. } => {
                let p = *p as usize;
                let (mut a, mut b) = (a, b);
                let mut out = 0;
                let mut scale = 1;
                for _ in 0..*r {
                    out += ((a % p + b % p) % p) * scale;
                    a /= p;
                    b /= p;
                    scale *= p;
                }
                out
            }
            Factor::Table { order, mul, .. } => mul[a * order + b] as usize,
        }
    }

    #[inline]
    fn inv(&self, a: usize) -> usize {
        match self {
            Factor::Elementary { p, r, .. } => {
                let p = *p as usize;
                let mut a = a;
                let mut out = 0;
                let mut scale = 1;
                for _ in 0..*r {
                    out += ((p - a % p) % p) * scale;
                    a /= p;
                    scale *= p;
                }
                out
            }
            Factor::Table { inv, .. } => inv[a] as usize,
        }
    }
}

/// A finite semidirect product `K ⋊ H`.
///
/// Elements are indices `k * |H| + h`; the identity is 0. Multiplication is
/// `(k, h)(k', h') = (k φ_h(k'), h h')`.
#[derive(Clone)]
pub struct Group {
    desc: GroupDescriptor,
    field: Option<Field>,
    k: Factor,
    h: Factor,
    // phi[h * |K| + k]
    phi: Vec<u32>,
    affine_h: Vec<FieldElement>,
    fg_d: usize,
    zpmzp_m: usize,
}

impl fmt::Debug for Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Group({:?}, order {})", self.desc, self.order())
    }
}

impl Group {
    pub fn from_descriptor(desc: &GroupDescriptor) -> Result<Group> {
        match desc {
            GroupDescriptor::Affine { q, h } => {
                let field = Field::with_order(*q)?;
                let h = h
                    .iter()
                    .map(|&v| field.element(v))
                    .collect::<Result<Vec<_>>>()?;
                Group::affine(&field, &h)
            }
            GroupDescriptor::FunctionGraph { q, d, n } => {
                if *n != 1 {
                    return Err(Error::Unsupported(
                        "only univariate function graph groups are enumerated".into(),
                    ));
                }
                Group::function_graph(&Field::with_order(*q)?, *d)
            }
            GroupDescriptor::Zpmzp { p, m, a } => Group::zpmzp(*p, *m, a),
            GroupDescriptor::SemidirectTable { k, h, phi } => Group::semidirect_table(k, h, phi),
        }
    }

    fn check_order(order: usize, what: &'static str) -> Result<()> {
        if order > MAX_GROUP_ORDER {
            Err(Error::GroupTooLarge {
                order,
                bound: MAX_GROUP_ORDER,
                what,
            })
        } else {
            Ok(())
        }
    }

    /// `Aff_q(H) = F_q ⋊ H` with `H ≤ F_q^*` acting by multiplication.
    pub fn affine(field: &Field, h: &[FieldElement]) -> Result<Group> {
        let mut hs: Vec<FieldElement> = h.to_vec();
        hs.sort();
        hs.dedup();
        if hs.is_empty() || hs.iter().any(|x| x.is_zero()) {
            return Err(Error::InvalidGroup("H must be a non-empty subset of F_q^*".into()));
        }
        let q = field.q() as usize;
        Group::check_order(q * hs.len(), "affine group")?;
        let mut index = vec![usize::MAX; q];
        for (i, &a) in hs.iter().enumerate() {
            index[a.value() as usize] = i;
        }
        let n = hs.len();
        let mut rows = vec![vec![0usize; n]; n];
        for (i, &a) in hs.iter().enumerate() {
            for (j, &b) in hs.iter().enumerate() {
                let c = index[field.mul(a, b).value() as usize];
                if c == usize::MAX {
                    return Err(Error::InvalidGroup(
                        "H is not closed under multiplication".into(),
                    ));
                }
                rows[i][j] = c;
            }
        }
        let h_factor = Factor::table(&rows)?;
        let mut phi = Vec::with_capacity(n * q);
        for &a in &hs {
            for b in field.elements() {
                phi.push(field.mul(a, b).value());
            }
        }
        Ok(Group {
            desc: GroupDescriptor::Affine {
                q: q as u64,
                h: hs.iter().map(|x| x.value() as u64).collect(),
            },
            field: Some(field.clone()),
            k: Factor::elementary(field.p(), field.k()),
            h: h_factor,
            phi,
            affine_h: hs,
            fg_d: 0,
            zpmzp_m: 0,
        })
    }

    /// `Aff_q({±1})`.
    pub fn affine_pm1(field: &Field) -> Result<Group> {
        let mut h = vec![field.one(), field.neg(field.one())];
        h.dedup();
        Group::affine(field, &h)
    }

    /// The full affine group `Aff_q = F_q ⋊ F_q^*`.
    pub fn affine_full(field: &Field) -> Result<Group> {
        Group::affine(field, &field.nonzero().collect::<Vec<_>>())
    }

    /// `Fg(F_q^(d)[x])`: polynomials of degree at most `d`, with `t ∈ F_q`
    /// acting by `(a_t Q)(x) = Q(x - t)`.
    pub fn function_graph(field: &Field, d: usize) -> Result<Group> {
        let q = field.q() as usize;
        let k_order = q
            .checked_pow(d as u32 + 1)
            .filter(|&k| k.saturating_mul(q) <= MAX_GROUP_ORDER)
            .ok_or(Error::GroupTooLarge {
                order: usize::MAX,
                bound: MAX_GROUP_ORDER,
                what: "function graph group",
            })?;
        let mut phi = vec![0u32; q * k_order];
        for t in field.elements() {
            for kidx in 0..k_order {
                let p = fg_decode(field, d, kidx);
                phi[t.value() as usize * k_order + kidx] = fg_encode(field, d, &p.shift(t)) as u32;
            }
        }
        Ok(Group {
            desc: GroupDescriptor::FunctionGraph {
                q: q as u64,
                d,
                n: 1,
            },
            field: Some(field.clone()),
            k: Factor::elementary(field.p(), field.k() * (d as u32 + 1)),
            h: Factor::elementary(field.p(), field.k()),
            phi,
            affine_h: Vec::new(),
            fg_d: d,
            zpmzp_m: 0,
        })
    }

    /// `Z_p^m ⋊ Z_p` where `t` acts by `A^t`; requires `A^p = I`.
    pub fn zpmzp(p: u64, m: usize, a: &[Vec<u64>]) -> Result<Group> {
        let field = Field::new(p, 1)?;
        if m == 0 || a.len() != m || a.iter().any(|r| r.len() != m) {
            return Err(Error::InvalidGroup(format!("A must be {m}x{m}")));
        }
        let pu = p as usize;
        let k_order = pu
            .checked_pow(m as u32)
            .filter(|&k| k.saturating_mul(pu) <= MAX_GROUP_ORDER)
            .ok_or(Error::GroupTooLarge {
                order: usize::MAX,
                bound: MAX_GROUP_ORDER,
                what: "Z_p^m ⋊ Z_p",
            })?;
        let a: Vec<Vec<u64>> = a.iter().map(|r| r.iter().map(|&x| x % p).collect()).collect();
        let powers = matrix_powers(&a, p, pu + 1);
        let id: Vec<Vec<u64>> = (0..m)
            .map(|i| (0..m).map(|j| u64::from(i == j)).collect())
            .collect();
        if powers[pu] != id {
            return Err(Error::InvalidGroup("A^p must be the identity".into()));
        }
        let mut phi = vec![0u32; pu * k_order];
        for (t, at) in powers.iter().take(pu).enumerate() {
            for kidx in 0..k_order {
                let v = digits(kidx, pu, m);
                let w: Vec<usize> = (0..m)
                    .map(|i| (0..m).map(|j| at[i][j] as usize * v[j]).sum::<usize>() % pu)
                    .collect();
                phi[t * k_order + kidx] = undigits(&w, pu) as u32;
            }
        }
        Ok(Group {
            desc: GroupDescriptor::Zpmzp { p, m, a },
            field: Some(field),
            k: Factor::elementary(p as u32, m as u32),
            h: Factor::elementary(p as u32, 1),
            phi,
            affine_h: Vec::new(),
            fg_d: 0,
            zpmzp_m: m,
        })
    }

    /// Semidirect product from explicit tables, with every `phi[h]` checked
    /// to be an automorphism and `h -> phi[h]` a homomorphism.
    pub fn semidirect_table(k: &[Vec<usize>], h: &[Vec<usize>], phi: &[Vec<usize>]) -> Result<Group> {
        let kf = Factor::table(k)?;
        let hf = Factor::table(h)?;
        let (nk, nh) = (kf.order(), hf.order());
        Group::check_order(nk * nh, "semidirect table")?;
        if phi.len() != nh || phi.iter().any(|r| r.len() != nk || r.iter().any(|&x| x >= nk)) {
            return Err(Error::InvalidGroup("phi must be |H| rows of |K| entries".into()));
        }
        for (hi, row) in phi.iter().enumerate() {
            let mut seen = vec![false; nk];
            for &x in row {
                seen[x] = true;
            }
            if seen.iter().any(|s| !s) {
                return Err(Error::InvalidGroup(format!("phi[{hi}] is not a bijection")));
            }
            for a in 0..nk {
                for b in 0..nk {
                    if row[kf.op(a, b)] != kf.op(row[a], row[b]) {
                        return Err(Error::InvalidGroup(format!(
                            "phi[{hi}] is not a homomorphism"
                        )));
                    }
                }
            }
        }
        if (0..nk).any(|x| phi[0][x] != x) {
            return Err(Error::InvalidGroup("phi of the identity must be trivial".into()));
        }
        for h1 in 0..nh {
            for h2 in 0..nh {
                let h12 = hf.op(h1, h2);
                if (0..nk).any(|x| phi[h12][x] != phi[h1][phi[h2][x]]) {
                    return Err(Error::InvalidGroup("phi is not a homomorphism of H".into()));
                }
            }
        }
        Ok(Group {
            desc: GroupDescriptor::SemidirectTable {
                k: k.to_vec(),
                h: h.to_vec(),
                phi: phi.to_vec(),
            },
            field: None,
            k: kf,
            h: hf,
            phi: phi.iter().flatten().map(|&x| x as u32).collect(),
            affine_h: Vec::new(),
            fg_d: 0,
            zpmzp_m: 0,
        })
    }

    pub fn descriptor(&self) -> &GroupDescriptor {
        &self.desc
    }

    pub fn field(&self) -> Option<&Field> {
        self.field.as_ref()
    }

    pub fn order(&self) -> usize {
        self.k.order() * self.h.order()
    }

    pub fn k_order(&self) -> usize {
        self.k.order()
    }

    pub fn h_order(&self) -> usize {
        self.h.order()
    }

    pub fn identity(&self) -> usize {
        0
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order()
    }

    /// Element with kernel part `k` and complement part `h`.
    #[inline]
    pub fn compose(&self, k: usize, h: usize) -> usize {
        k * self.h.order() + h
    }

    #[inline]
    pub fn kpart(&self, g: usize) -> usize {
        g / self.h.order()
    }

    #[inline]
    pub fn hpart(&self, g: usize) -> usize {
        g % self.h.order()
    }

    #[inline]
    pub fn k_op(&self, a: usize, b: usize) -> usize {
        self.k.op(a, b)
    }

    #[inline]
    pub fn k_inv(&self, a: usize) -> usize {
        self.k.inv(a)
    }

    #[inline]
    pub fn h_op(&self, a: usize, b: usize) -> usize {
        self.h.op(a, b)
    }

    #[inline]
    pub fn h_inv(&self, a: usize) -> usize {
        self.h.inv(a)
    }

    /// `φ_h(k)`.
    #[inline]
    pub fn phi(&self, h: usize, k: usize) -> usize {
        self.phi[h * self.k.order() + k] as usize
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        let (k1, h1) = (self.kpart(a), self.hpart(a));
        let (k2, h2) = (self.kpart(b), self.hpart(b));
        self.compose(self.k_op(k1, self.phi(h1, k2)), self.h_op(h1, h2))
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        let (k, h) = (self.kpart(a), self.hpart(a));
        let hi = self.h_inv(h);
        self.compose(self.phi(hi, self.k_inv(k)), hi)
    }

    pub fn pow(&self, a: usize, e: usize) -> usize {
        (0..e).fold(self.identity(), |acc, _| self.mul(acc, a))
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut n = 1;
        while x != 0 {
            x = self.mul(x, a);
            n += 1;
        }
        n
    }

    // Affine helpers.

    /// The complement `H ≤ F_q^*` of an affine group.
    pub fn affine_complement(&self) -> &[FieldElement] {
        &self.affine_h
    }

    /// The element `(b, a) : x -> a x + b`.
    pub fn affine_element(&self, b: FieldElement, a: FieldElement) -> Result<usize> {
        let field = self.affine_field()?;
        field.check(b)?;
        let h = self
            .affine_h
            .binary_search(&a)
            .map_err(|_| Error::InvalidGroup(format!("{a} is not in the complement")))?;
        Ok(self.compose(b.value() as usize, h))
    }

    /// `(b, a)` for an affine group element.
    pub fn affine_parts(&self, g: usize) -> Result<(FieldElement, FieldElement)> {
        self.affine_field()?;
        Ok((
            FieldElement::from_index(self.kpart(g)),
            self.affine_h[self.hpart(g)],
        ))
    }

    fn affine_field(&self) -> Result<&Field> {
        match (&self.desc, &self.field) {
            (GroupDescriptor::Affine { .. }, Some(f)) => Ok(f),
            _ => Err(Error::InvalidGroup("not an affine group".into())),
        }
    }

    // Function graph helpers.

    pub fn fg_degree(&self) -> Result<usize> {
        match self.desc {
            GroupDescriptor::FunctionGraph { .. } => Ok(self.fg_d),
            _ => Err(Error::InvalidGroup("not a function graph group".into())),
        }
    }

    /// The element `(Q, t)`.
    pub fn fg_element(&self, q: &Poly, t: FieldElement) -> Result<usize> {
        let d = self.fg_degree()?;
        let field = self.field.as_ref().expect("function graph groups carry a field");
        if q.field() != field {
            return Err(Error::FieldMismatch);
        }
        if q.degree().unwrap_or(0) > d {
            return Err(Error::InvalidGroup(format!("polynomial degree exceeds {d}")));
        }
        field.check(t)?;
        Ok(self.compose(fg_encode(field, d, q), t.value() as usize))
    }

    /// `(Q, t)` for a function graph group element.
    pub fn fg_parts(&self, g: usize) -> Result<(Poly, FieldElement)> {
        let d = self.fg_degree()?;
        let field = self.field.as_ref().expect("function graph groups carry a field");
        Ok((
            fg_decode(field, d, self.kpart(g)),
            FieldElement::from_index(self.hpart(g)),
        ))
    }

    // Z_p^m ⋊ Z_p helpers.

    pub fn zpmzp_dim(&self) -> Result<usize> {
        match self.desc {
            GroupDescriptor::Zpmzp { .. } => Ok(self.zpmzp_m),
            _ => Err(Error::InvalidGroup("not a Z_p^m ⋊ Z_p group".into())),
        }
    }

    pub fn zpmzp_element(&self, v: &[u32], t: u32) -> Result<usize> {
        let m = self.zpmzp_dim()?;
        let p = self.field.as_ref().expect("carries F_p").p();
        if v.len() != m {
            return Err(Error::ArityMismatch {
                expected: m,
                got: v.len(),
            });
        }
        if v.iter().any(|&x| x >= p) || t >= p {
            return Err(Error::InvalidGroup("coordinates must lie in [0, p)".into()));
        }
        let w: Vec<usize> = v.iter().map(|&x| x as usize).collect();
        Ok(self.compose(undigits(&w, p as usize), t as usize))
    }

    pub fn zpmzp_parts(&self, g: usize) -> Result<(Vec<u32>, u32)> {
        let m = self.zpmzp_dim()?;
        let p = self.field.as_ref().expect("carries F_p").p() as usize;
        let v = digits(self.kpart(g), p, m).into_iter().map(|x| x as u32).collect();
        Ok((v, self.hpart(g) as u32))
    }

    /// Human-readable JSON for one element.
    pub fn describe(&self, g: usize) -> serde_json::Value {
        match &self.desc {
            GroupDescriptor::Affine { .. } => {
                let (b, a) = self.affine_parts(g).expect("affine");
                json!({"b": b.value(), "a": a.value()})
            }
            GroupDescriptor::FunctionGraph { .. } => {
                let (q, t) = self.fg_parts(g).expect("function graph");
                let c: Vec<u32> = q.coeffs().iter().map(|c| c.value()).collect();
                json!({"Q": c, "t": t.value()})
            }
            GroupDescriptor::Zpmzp { .. } => {
                let (v, t) = self.zpmzp_parts(g).expect("zpmzp");
                json!({"v": v, "t": t})
            }
            GroupDescriptor::SemidirectTable { .. } => {
                json!({"k": self.kpart(g), "h": self.hpart(g)})
            }
        }
    }
}

fn digits(mut x: usize, base: usize, len: usize) -> Vec<usize> {
    let mut out = vec![0; len];
    for d in out.iter_mut() {
        *d = x % base;
        x /= base;
    }
    out
}

fn undigits(d: &[usize], base: usize) -> usize {
    d.iter().rev().fold(0, |acc, &x| acc * base + x)
}

/// Index of a polynomial of degree `<= d` in the kernel of `Fg`.
pub(crate) fn fg_encode(field: &Field, d: usize, p: &Poly) -> usize {
    let q = field.q() as usize;
    (0..=d).rev().fold(0, |acc, i| acc * q + p.coeff(i).value() as usize)
}

pub(crate) fn fg_decode(field: &Field, d: usize, idx: usize) -> Poly {
    let q = field.q() as usize;
    let c = digits(idx, q, d + 1)
        .into_iter()
        .map(FieldElement::from_index)
        .collect();
    Poly::new(field, c).expect("digits are field elements")
}

fn matrix_powers(a: &[Vec<u64>], p: u64, count: usize) -> Vec<Vec<Vec<u64>>> {
    let m = a.len();
    let mut out = Vec::with_capacity(count);
    let mut cur: Vec<Vec<u64>> = (0..m)
        .map(|i| (0..m).map(|j| u64::from(i == j)).collect())
        .collect();
    for _ in 0..count {
        out.push(cur.clone());
        cur = (0..m)
            .map(|i| {
                (0..m)
                    .map(|j| (0..m).map(|l| a[i][l] * cur[l][j]).sum::<u64>() % p)
                    .collect()
            })
            .collect();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(q: u64) -> Field {
        Field::with_order(q).unwrap()
    }

    fn check_group_axioms(g: &Group) {
        for a in g.elements() {
            assert_eq!(g.mul(a, 0), a);
            assert_eq!(g.mul(0, a), a);
            assert_eq!(g.mul(a, g.inv(a)), 0);
            for b in g.elements() {
                for c in g.elements().step_by(3) {
                    assert_eq!(g.mul(g.mul(a, b), c), g.mul(a, g.mul(b, c)));
                }
            }
        }
    }

    #[test]
    fn affine_multiplication_is_composition() {
        let field = f(7);
        let g = Group::affine_full(&field).unwrap();
        assert_eq!(g.order(), 42);
        for x in g.elements() {
            for y in g.elements() {
                let (b1, a1) = g.affine_parts(x).unwrap();
                let (b2, a2) = g.affine_parts(y).unwrap();
                let (b, a) = g.affine_parts(g.mul(x, y)).unwrap();
                // (b1,a1)(b2,a2) = (b1 + a1 b2, a1 a2)
                assert_eq!(b, field.add(b1, field.mul(a1, b2)));
                assert_eq!(a, field.mul(a1, a2));
            }
        }
        check_group_axioms(&g);
    }

    #[test]
    fn affine_rejects_non_subgroup() {
        let field = f(7);
        let two = field.element(2).unwrap();
        assert!(Group::affine(&field, &[field.one(), two]).is_err());
        assert!(Group::affine(&field, &[field.zero()]).is_err());
    }

    #[test]
    fn function_graph_product_matches_formula() {
        for (q, d) in [(3, 1), (5, 1), (5, 2), (4, 1)] {
            let field = f(q);
            let g = Group::function_graph(&field, d).unwrap();
            assert_eq!(g.order(), (q as usize).pow(d as u32 + 2));
            for x in g.elements() {
                for y in g.elements().step_by(7) {
                    let (q1, t1) = g.fg_parts(x).unwrap();
                    let (q2, t2) = g.fg_parts(y).unwrap();
                    let (qq, tt) = g.fg_parts(g.mul(x, y)).unwrap();
                    assert_eq!(qq, q1.add(&q2.shift(t1)).unwrap());
                    assert_eq!(tt, field.add(t1, t2));
                }
            }
        }
        check_group_axioms(&Group::function_graph(&f(3), 1).unwrap());
    }

    #[test]
    fn zpmzp_group() {
        let g = Group::zpmzp(3, 2, &[vec![1, 1], vec![0, 1]]).unwrap();
        assert_eq!(g.order(), 27);
        check_group_axioms(&g);
        // A = [[1,1],[0,1]] has order 3, but [[2,0],[0,1]] has order 2 mod 3.
        assert!(Group::zpmzp(3, 2, &[vec![2, 0], vec![0, 1]]).is_err());
        let x = g.zpmzp_element(&[1, 0], 1).unwrap();
        assert_eq!(g.zpmzp_parts(x).unwrap(), (vec![1, 0], 1));
    }

    #[test]
    fn table_group_from_affine_tables() {
        // Rebuild Aff_5({±1}) from tables and compare orders of elements.
        let k: Vec<Vec<usize>> = (0..5).map(|a| (0..5).map(|b| (a + b) % 5).collect()).collect();
        let h = vec![vec![0, 1], vec![1, 0]];
        let phi = vec![(0..5).collect(), (0..5).map(|x| (5 - x) % 5).collect()];
        let t = Group::semidirect_table(&k, &h, &phi).unwrap();
        let a = Group::affine_pm1(&f(5)).unwrap();
        let mut o1: Vec<_> = t.elements().map(|x| t.element_order(x)).collect();
        let mut o2: Vec<_> = a.elements().map(|x| a.element_order(x)).collect();
        o1.sort();
        o2.sort();
        assert_eq!(o1, o2);
        check_group_axioms(&t);
        let bad_phi = vec![(0..5).collect(), (0..5).map(|x| (2 * x) % 5).collect()];
        assert!(Group::semidirect_table(&k, &h, &bad_phi).is_err());
    }

    #[test]
    fn descriptor_json() {
        let d: GroupDescriptor = serde_json::from_str(r#"{"kind":"affine","q":7,"H":[1,6]}"#).unwrap();
        let g = Group::from_descriptor(&d).unwrap();
        assert_eq!(g.order(), 14);
        let d: GroupDescriptor =
            serde_json::from_str(r#"{"kind":"function_graph","q":3,"d":1}"#).unwrap();
        assert_eq!(Group::from_descriptor(&d).unwrap().order(), 27);
        let d: GroupDescriptor =
            serde_json::from_str(r#"{"kind":"zpmzp","p":3,"m":2,"A":[[1,1],[0,1]]}"#).unwrap();
        assert_eq!(Group::from_descriptor(&d).unwrap().order(), 27);
    }

    #[test]
    fn order_cap() {
        assert!(matches!(
            Group::function_graph(&f(16), 4),
            Err(Error::GroupTooLarge { .. })
        ));
    }
}
