use std::collections::{BTreeSet, HashMap};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::ff::{Field, FieldElement, Matrix, MultiPoly};
use crate::oracle::{line_restriction, MappedOracle, Oracle};
use crate::solve::{find_linear_kernel, procedure_r, QuotientReport};

/// Bound `r_calls ≤ R_CALL_CONSTANT · n²` checked by the acceptance suite.
pub const R_CALL_CONSTANT: usize = 20;

/// Every branch id the engine can report.
pub const ALL_BRANCHES: &[&str] = &[
    "bi.both.cross",
    "bi.both.sum",
    "bi.both.sum_zero",
    "bi.both.degenerate",
    "bi.a11_only.no_cross",
    "bi.a11_only.cross",
    "bi.a22_only.no_cross",
    "bi.a22_only.cross",
    "bi.none.cross",
    "bi.none.linear",
    "bi.q2",
    "n3.pivot",
    "n3.cross",
    "n4.pairing",
    "many.pivot_var",
    "many.pivot_cross",
];

/// One line the engine restricted the oracle to.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LineRecord {
    pub s: Vec<u32>,
    pub d: Vec<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub report: Option<QuotientReport>,
    /// q = 2: whether the two points of the line got different labels.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub differs: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QuadraticSolution {
    /// `(a_11..a_nn, a_ij for i<j in lex order, b_1..b_n)`, first nonzero entry 1.
    pub coeffs: Vec<u32>,
    pub r_calls: usize,
    /// q = 2 constant tests.
    pub line_tests: usize,
    pub kernel_finder_calls: usize,
    pub queries: u64,
    pub branches: Vec<String>,
    pub r_call_bound: usize,
    pub lines: Vec<LineRecord>,
}

impl QuadraticSolution {
    pub fn coefficients(&self) -> Vec<FieldElement> {
        self.coeffs.iter().map(|&c| FieldElement::from_index(c as usize)).collect()
    }
}

fn num_coeffs(n: usize) -> usize {
    n * (n + 3) / 2
}

fn cross_index(n: usize, i: usize, j: usize) -> usize {
    debug_assert!(i < j);
    // Pairs (a, b) with a < i come first.
    n + i * (2 * n - i - 1) / 2 + (j - i - 1)
}

/// Names in coefficient order, 1-based: `a11`, `a12`, `b1`, ...
pub fn coefficient_labels(n: usize) -> Vec<String> {
    let mut out: Vec<String> = (1..=n).map(|i| format!("a{i}{i}")).collect();
    for i in 1..=n {
        for j in i + 1..=n {
            out.push(format!("a{i}{j}"));
        }
    }
    out.extend((1..=n).map(|k| format!("b{k}")));
    out
}

/// The coefficient vector of a quadratic without constant term.
pub fn quadratic_coefficients(p: &MultiPoly) -> Result<Vec<FieldElement>> {
    let n = p.nvars();
    if p.has_constant_term() || p.total_degree().unwrap_or(0) > 2 {
        return Err(Error::Unsupported("expected a quadratic without constant term".into()));
    }
    let mut out = vec![p.field().zero(); num_coeffs(n)];
    for (e, &c) in p.terms() {
        let nz: Vec<usize> = (0..n).filter(|&i| e[i] > 0).collect();
        let idx = match (nz.as_slice(), e.iter().sum::<u32>()) {
            ([i], 2) => *i,
            ([i], 1) => num_coeffs(n) - n + i,
            ([i, j], 2) => cross_index(n, *i, *j),
            _ => unreachable!("degree checked"),
        };
        out[idx] = c;
    }
    Ok(out)
}

/// Scale so that the first nonzero entry is 1.
pub fn normalize(field: &Field, v: &[FieldElement]) -> Vec<FieldElement> {
    match v.iter().find(|c| !c.is_zero()) {
        None => v.to_vec(),
        Some(&lead) => {
            let inv = field.inv(lead).expect("nonzero");
            v.iter().map(|&c| field.mul(c, inv)).collect()
        }
    }
}

/// `o + x e + y f` inside `F_q^n`.
#[derive(Clone)]
struct Plane {
    o: Vec<FieldElement>,
    e: Vec<FieldElement>,
    f: Vec<FieldElement>,
}

struct Engine<'a, O> {
    oracle: &'a O,
    field: Field,
    n: usize,
    rows: Vec<Vec<FieldElement>>,
    rhs: Vec<FieldElement>,
    nonzero: Vec<Vec<FieldElement>>,
    reports: HashMap<(Vec<u32>, Vec<u32>), QuotientReport>,
    tests: HashMap<(Vec<u32>, Vec<u32>), bool>,
    lines: Vec<LineRecord>,
    branches: BTreeSet<&'static str>,
    r_calls: usize,
    finder_calls: usize,
}

impl<'a, O: Oracle> Engine<'a, O> {
    fn unit(&self, i: usize) -> Vec<FieldElement> {
        let mut v = vec![self.field.zero(); self.n];
        v[i] = self.field.one();
        v
    }

    fn zero_vec(&self) -> Vec<FieldElement> {
        vec![self.field.zero(); self.n]
    }

    fn add(&self, a: &[FieldElement], b: &[FieldElement]) -> Vec<FieldElement> {
        a.iter().zip(b).map(|(&x, &y)| self.field.add(x, y)).collect()
    }

    fn comb(&self, a: &[FieldElement], x: FieldElement, b: &[FieldElement], y: FieldElement) -> Vec<FieldElement> {
        let f = &self.field;
        a.iter().zip(b).map(|(&u, &v)| f.add(f.mul(x, u), f.mul(y, v))).collect()
    }

    /// Coefficient of `t^2` in `P(s + t d)`, as a row over the coefficients.
    fn a_row(&self, d: &[FieldElement]) -> Vec<FieldElement> {
        let (f, n) = (&self.field, self.n);
        let mut row = vec![f.zero(); num_coeffs(n)];
        for i in 0..n {
            row[i] = f.mul(d[i], d[i]);
            for j in i + 1..n {
                row[cross_index(n, i, j)] = f.mul(d[i], d[j]);
            }
        }
        row
    }

    /// Coefficient of `t` in `P(s + t d)`.
    fn b_row(&self, s: &[FieldElement], d: &[FieldElement]) -> Vec<FieldElement> {
        let (f, n) = (&self.field, self.n);
        let mut row = vec![f.zero(); num_coeffs(n)];
        for i in 0..n {
            let sd = f.mul(s[i], d[i]);
            row[i] = f.add(sd, sd);
            for j in i + 1..n {
                row[cross_index(n, i, j)] = f.add(f.mul(s[i], d[j]), f.mul(s[j], d[i]));
            }
            row[num_coeffs(n) - n + i] = d[i];
        }
        row
    }

    fn key(s: &[FieldElement], d: &[FieldElement]) -> (Vec<u32>, Vec<u32>) {
        (s.iter().map(|x| x.value()).collect(), d.iter().map(|x| x.value()).collect())
    }

    fn equation(&mut self, row: Vec<FieldElement>, rhs: FieldElement) {
        self.rows.push(row);
        self.rhs.push(rhs);
    }

    /// Run procedure R on a line and record what it says.
    fn line(&mut self, s: &[FieldElement], d: &[FieldElement]) -> Result<QuotientReport> {
        let key = Self::key(s, d);
        if let Some(r) = self.reports.get(&key) {
            return Ok(*r);
        }
        let restricted = line_restriction(self.oracle, &self.field, s, d)?;
        let rep = procedure_r(&restricted, &self.field)?;
        self.r_calls += 1;
        let (a, b) = (self.a_row(d), self.b_row(s, d));
        let zero = self.field.zero();
        if rep.vanishing {
            self.equation(a, zero);
            self.equation(b, zero);
        } else if rep.azero {
            self.equation(a, zero);
            self.nonzero.push(b);
        } else {
            let rho = rep.ratio().expect("ratio present when a ≠ 0");
            let row = b
                .iter()
                .zip(&a)
                .map(|(&bb, &aa)| self.field.sub(bb, self.field.mul(rho, aa)))
                .collect();
            self.equation(row, zero);
            self.nonzero.push(a);
        }
        self.lines.push(LineRecord {
            s: key.0.clone(),
            d: key.1.clone(),
            report: Some(rep),
            differs: None,
        });
        self.reports.insert(key, rep);
        Ok(rep)
    }

    /// q = 2: compare the two points of a line; `P(s + d) - P(s) = A + B`.
    fn line_test(&mut self, s: &[FieldElement], d: &[FieldElement]) -> Result<bool> {
        let key = Self::key(s, d);
        if let Some(&t) = self.tests.get(&key) {
            return Ok(t);
        }
        let restricted = line_restriction(self.oracle, &self.field, s, d)?;
        let differs = restricted.query(0) != restricted.query(1);
        let row = self.add(&self.a_row(d), &self.b_row(s, d));
        let rhs = if differs { self.field.one() } else { self.field.zero() };
        self.equation(row, rhs);
        self.lines.push(LineRecord {
            s: key.0.clone(),
            d: key.1.clone(),
            report: None,
            differs: Some(differs),
        });
        self.tests.insert(key, differs);
        Ok(differs)
    }

    /// Line `(s1 + t d1, s2 + t d2)` of a plane.
    fn plane_line(&mut self, pl: &Plane, s: (u64, u64), d: (FieldElement, FieldElement)) -> Result<QuotientReport> {
        let (s1, s2) = (self.field.from_int(s.0 as i64), self.field.from_int(s.1 as i64));
        let gs = self.add(&pl.o, &self.comb(&pl.e, s1, &pl.f, s2));
        let gd = self.comb(&pl.e, d.0, &pl.f, d.1);
        self.line(&gs, &gd)
    }

    fn ratio(rep: &QuotientReport) -> Result<FieldElement> {
        rep.ratio()
            .ok_or_else(|| Error::PromiseViolation("procedure R answers are inconsistent".into()))
    }

    fn bivariate(&mut self, pl: &Plane) -> Result<()> {
        let (zero, one) = (self.field.zero(), self.field.one());
        if self.field.q() == 2 {
            self.branches.insert("bi.q2");
            for (s, d) in [((0, 0), (one, zero)), ((0, 0), (zero, one)), ((0, 1), (one, zero))] {
                let gs = self.add(&pl.o, &self.comb(&pl.e, self.field.from_int(s.0), &pl.f, self.field.from_int(s.1)));
                let gd = self.comb(&pl.e, d.0, &pl.f, d.1);
                self.line_test(&gs, &gd)?;
            }
            return Ok(());
        }
        let r1 = self.plane_line(pl, (0, 0), (one, zero))?;
        let r3 = self.plane_line(pl, (0, 0), (zero, one))?;
        match (!r1.azero, !r3.azero) {
            (true, true) => {
                let r2 = self.plane_line(pl, (0, 1), (one, zero))?;
                let r4 = self.plane_line(pl, (1, 0), (zero, one))?;
                let k12 = self.field.sub(Self::ratio(&r2)?, Self::ratio(&r1)?);
                Self::ratio(&r4)?;
                if !k12.is_zero() {
                    self.branches.insert("bi.both.cross");
                    return Ok(());
                }
                let r5 = self.plane_line(pl, (0, 0), (one, one))?;
                if r5.azero {
                    self.branches.insert("bi.both.sum_zero");
                } else if Self::ratio(&r5)? != Self::ratio(&r3)? {
                    self.branches.insert("bi.both.sum");
                } else {
                    // b1/a11 = b2/a22: the sum line repeats that ratio, so
                    // shift it to pick up 2 a22.
                    self.plane_line(pl, (0, 1), (one, one))?;
                    self.branches.insert("bi.both.degenerate");
                }
            }
            (true, false) => {
                let r2 = self.plane_line(pl, (0, 1), (one, zero))?;
                let k12 = self.field.sub(Self::ratio(&r2)?, Self::ratio(&r1)?);
                if k12.is_zero() {
                    self.plane_line(pl, (0, 0), (one, one))?;
                    self.branches.insert("bi.a11_only.no_cross");
                } else {
                    let alpha = self.first_alpha(k12);
                    self.plane_line(pl, (0, 0), (one, alpha))?;
                    self.branches.insert("bi.a11_only.cross");
                }
            }
            (false, true) => {
                let r4 = self.plane_line(pl, (1, 0), (zero, one))?;
                let k21 = self.field.sub(Self::ratio(&r4)?, Self::ratio(&r3)?);
                if k21.is_zero() {
                    self.plane_line(pl, (0, 0), (one, one))?;
                    self.branches.insert("bi.a22_only.no_cross");
                } else {
                    let alpha = self.first_alpha(k21);
                    self.plane_line(pl, (0, 0), (alpha, one))?;
                    self.branches.insert("bi.a22_only.cross");
                }
            }
            (false, false) => {
                let r5 = self.plane_line(pl, (0, 0), (one, one))?;
                if !r5.azero {
                    let alpha = self
                        .field
                        .elements()
                        .find(|&a| a != zero && a != one)
                        .expect("q odd, so q ≥ 3");
                    self.plane_line(pl, (0, 0), (one, alpha))?;
                    self.branches.insert("bi.none.cross");
                } else {
                    self.branches.insert("bi.none.linear");
                    if !(r1.vanishing || r3.vanishing || r5.vanishing) {
                        self.linear_kernel(pl)?;
                    }
                }
            }
        }
        Ok(())
    }

    /// Smallest nonzero `α` with `1 + α k ≠ 0`.
    fn first_alpha(&self, k: FieldElement) -> FieldElement {
        let f = &self.field;
        f.nonzero()
            .find(|&a| !f.add(f.one(), f.mul(a, k)).is_zero())
            .expect("at most one α is excluded and q ≥ 3")
    }

    /// The plane restriction is linear: find its kernel direction by the
    /// exhaustive abelian kernel finder and confirm it with R.
    fn linear_kernel(&mut self, pl: &Plane) -> Result<()> {
        let q = self.field.q() as usize;
        let (f, pl2) = (self.field.clone(), pl.clone());
        let restricted = MappedOracle::new(self.oracle, q * q, move |i| {
            let (x, y) = (FieldElement::from_index(i % q), FieldElement::from_index(i / q));
            let p: Vec<FieldElement> = (0..pl2.o.len())
                .map(|k| f.add(pl2.o[k], f.add(f.mul(x, pl2.e[k]), f.mul(y, pl2.f[k]))))
                .collect();
            crate::oracle::encode_point(&f, &p)
        });
        self.finder_calls += 1;
        let dir = find_linear_kernel(&restricted, &self.field)?
            .ok_or_else(|| Error::PromiseViolation("procedure R answers are inconsistent".into()))?;
        let rep = self.plane_line(pl, (0, 0), (dir[0], dir[1]))?;
        if !rep.vanishing {
            return Err(Error::PromiseViolation("kernel direction is not a level line".into()));
        }
        Ok(())
    }

    fn coordinate_plane(&self, i: usize, j: usize) -> Plane {
        Plane {
            o: self.zero_vec(),
            e: self.unit(i),
            f: self.unit(j),
        }
    }

    fn axis_vanishes(&mut self, v: usize) -> Result<bool> {
        let (o, e) = (self.zero_vec(), self.unit(v));
        Ok(self.line(&o, &e)?.vanishing)
    }

    fn n3(&mut self, vars: [usize; 3]) -> Result<()> {
        let mut pivot = None;
        for (pos, &v) in vars.iter().enumerate() {
            if !self.axis_vanishes(v)? {
                pivot = Some(pos);
                break;
            }
        }
        match pivot {
            Some(pos) => {
                self.branches.insert("n3.pivot");
                let v = vars[pos];
                let rest: Vec<usize> = vars.iter().copied().filter(|&x| x != v).collect();
                let (j, k) = (rest[0], rest[1]);
                self.bivariate(&self.coordinate_plane(v, j))?;
                self.bivariate(&self.coordinate_plane(v, k))?;
                // x_j = x_k = y brings a_jk into the y^2 coefficient.
                let link = Plane {
                    o: self.zero_vec(),
                    e: self.unit(v),
                    f: self.add(&self.unit(j), &self.unit(k)),
                };
                self.bivariate(&link)
            }
            None => {
                // Only cross terms: set the last variable to 1.
                self.branches.insert("n3.cross");
                let pl = Plane {
                    o: self.unit(vars[2]),
                    e: self.unit(vars[0]),
                    f: self.unit(vars[1]),
                };
                self.bivariate(&pl)
            }
        }
    }

    fn kernel_dim(&self) -> usize {
        num_coeffs(self.n) - self.matrix().rank()
    }

    fn matrix(&self) -> Matrix {
        Matrix::from_rows(&self.field, self.rows.clone()).unwrap_or_else(|_| Matrix::zeros(&self.field, 0, num_coeffs(self.n)))
    }

    fn n4(&mut self, vars: [usize; 4]) -> Result<()> {
        for skip in (0..4).rev() {
            let t: Vec<usize> = (0..4).filter(|&i| i != skip).map(|i| vars[i]).collect();
            self.n3([t[0], t[1], t[2]])?;
        }
        // a_12 x1x2 + a_34 x3x4 and its relabelings: pair the variables.
        for (a, b, c, d) in [(0, 1, 2, 3), (0, 2, 1, 3), (0, 3, 1, 2)] {
            if self.kernel_dim() <= 1 {
                break;
            }
            self.branches.insert("n4.pairing");
            let pl = Plane {
                o: self.zero_vec(),
                e: self.add(&self.unit(vars[a]), &self.unit(vars[b])),
                f: self.add(&self.unit(vars[c]), &self.unit(vars[d])),
            };
            self.bivariate(&pl)?;
        }
        Ok(())
    }

    fn many(&mut self) -> Result<()> {
        let n = self.n;
        let mut pivot = None;
        for v in 0..n {
            if !self.axis_vanishes(v)? && pivot.is_none() {
                pivot = Some(v);
            }
        }
        if let Some(v) = pivot {
            self.branches.insert("many.pivot_var");
            let rest: Vec<usize> = (0..n).filter(|&x| x != v).collect();
            for (a, &j) in rest.iter().enumerate() {
                for &k in &rest[a + 1..] {
                    self.n3([v, j, k])?;
                }
            }
            return Ok(());
        }
        let mut pair = None;
        'outer: for i in 0..n {
            for j in i + 1..n {
                let d = self.add(&self.unit(i), &self.unit(j));
                if !self.line(&self.zero_vec(), &d)?.azero {
                    pair = Some((i, j));
                    break 'outer;
                }
            }
        }
        // No pivot pair: every recorded fact forces zero, caught by the caller.
        let Some((i, j)) = pair else { return Ok(()) };
        self.branches.insert("many.pivot_cross");
        let rest: Vec<usize> = (0..n).filter(|&x| x != i && x != j).collect();
        for &k in &rest {
            self.n3([i, j, k])?;
        }
        for (a, &k) in rest.iter().enumerate() {
            for &l in &rest[a + 1..] {
                let pl = Plane {
                    o: self.zero_vec(),
                    e: self.add(&self.unit(i), &self.unit(j)),
                    f: self.add(&self.unit(k), &self.unit(l)),
                };
                self.bivariate(&pl)?;
            }
        }
        Ok(())
    }

    fn drive(&mut self) -> Result<()> {
        let n = self.n;
        if self.field.q() == 2 {
            for i in 0..n {
                let mut row = vec![self.field.zero(); num_coeffs(n)];
                row[i] = self.field.one();
                self.equation(row, self.field.zero());
            }
            if n == 1 {
                self.line_test(&self.zero_vec(), &self.unit(0))?;
            }
            for i in 0..n {
                for j in i + 1..n {
                    self.bivariate(&self.coordinate_plane(i, j))?;
                }
            }
            return Ok(());
        }
        match n {
            1 => {
                self.line(&self.zero_vec(), &self.unit(0))?;
            }
            2 => self.bivariate(&self.coordinate_plane(0, 1))?,
            3 => self.n3([0, 1, 2])?,
            4 => self.n4([0, 1, 2, 3])?,
            _ => self.many()?,
        }
        Ok(())
    }

    fn answer(&self) -> Result<Vec<FieldElement>> {
        let f = &self.field;
        let m = self.matrix();
        let sol = if f.q() == 2 {
            match m.solve(&self.rhs) {
                Ok(v) => v,
                Err(Error::Inconsistent) => {
                    return Err(Error::PromiseViolation("line tests admit no quadratic".into()))
                }
                Err(Error::Singular) => return Err(Error::Undetermined("line tests leave freedom".into())),
                Err(e) => return Err(e),
            }
        } else {
            let basis = m.kernel_basis();
            match basis.len() {
                0 => return Err(Error::PromiseViolation("oracle is constant or inconsistent".into())),
                1 => normalize(f, &basis[0]),
                k => return Err(Error::Undetermined(format!("{k}-dimensional solution space"))),
            }
        };
        if sol.iter().all(|c| c.is_zero()) {
            return Err(Error::PromiseViolation("oracle is constant".into()));
        }
        let dot = |row: &[FieldElement]| {
            row.iter()
                .zip(&sol)
                .fold(f.zero(), |acc, (&a, &b)| f.add(acc, f.mul(a, b)))
        };
        if self.nonzero.iter().any(|row| dot(row).is_zero()) {
            return Err(Error::PromiseViolation("procedure R answers are inconsistent".into()));
        }
        Ok(sol)
    }
}

/// Recover a quadratic `P` on `F_q^n` (no constant term, `a_ii = 0` when
/// q = 2) up to a scalar from its level sets.
pub fn solve_multivariate_quadratic<O: Oracle>(oracle: &O, field: &Field, n: usize) -> Result<QuadraticSolution> {
    if n == 0 {
        return Err(Error::Unsupported("need at least one variable".into()));
    }
    if field.p() == 2 && field.q() != 2 {
        return Err(Error::Unsupported("even q > 2 is not covered".into()));
    }
    let q = field.q() as usize;
    if q.checked_pow(n as u32) != Some(oracle.domain_size()) {
        return Err(Error::DomainMismatch(oracle.domain_size()));
    }
    let before = oracle.query_count();
    let mut eng = Engine {
        oracle,
        field: field.clone(),
        n,
        rows: Vec::new(),
        rhs: Vec::new(),
        nonzero: Vec::new(),
        reports: HashMap::new(),
        tests: HashMap::new(),
        lines: Vec::new(),
        branches: BTreeSet::new(),
        r_calls: 0,
        finder_calls: 0,
    };
    eng.drive()?;
    let coeffs = eng.answer()?;
    Ok(QuadraticSolution {
        coeffs: coeffs.iter().map(|c| c.value()).collect(),
        r_calls: eng.r_calls,
        line_tests: eng.tests.len(),
        kernel_finder_calls: eng.finder_calls,
        queries: oracle.query_count() - before,
        branches: eng.branches.iter().map(|s| s.to_string()).collect(),
        r_call_bound: R_CALL_CONSTANT * n * n,
        lines: eng.lines,
    })
}

/// The bivariate case: `(a11, a22, a12, b1, b2)` up to a scalar.
pub fn solve_bivariate_quadratic<O: Oracle>(oracle: &O, field: &Field) -> Result<QuadraticSolution> {
    solve_multivariate_quadratic(oracle, field, 2)
}
