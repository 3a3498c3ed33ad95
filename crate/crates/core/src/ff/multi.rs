use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::field::{Field, FieldElement};
use super::poly::Poly;
use crate::error::{Error, Result};

/// Sparse multivariate polynomial, reduced modulo `x_i^q - x_i`.
#[derive(Clone, PartialEq, Eq)]
pub struct MultiPoly {
    field: Field,
    nvars: usize,
    terms: BTreeMap<Vec<u32>, FieldElement>,
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(e, c)| format!("{}*{:?}", c.value(), e))
            .collect();
        write!(f, "MultiPoly({})", parts.join(" + "))
    }
}

/// Reduce one exponent using `x^q = x`.
fn reduce_exp(e: u32, q: u32) -> u32 {
    if e == 0 {
        0
    } else {
        (e - 1) % (q - 1) + 1
    }
}

/// `prod v_i^{alpha_i}`.
pub fn monomial_eval(field: &Field, alpha: &[u32], v: &[FieldElement]) -> FieldElement {
    alpha
        .iter()
        .zip(v)
        .fold(FieldElement::ONE, |acc, (&a, &x)| field.mul(acc, field.pow(x, a as u64)))
}

impl MultiPoly {
    pub fn zero(field: &Field, nvars: usize) -> MultiPoly {
        MultiPoly {
            field: field.clone(),
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn from_terms(
        field: &Field,
        nvars: usize,
        terms: impl IntoIterator<Item = (Vec<u32>, FieldElement)>,
    ) -> Result<MultiPoly> {
        let mut p = MultiPoly::zero(field, nvars);
        for (exp, c) in terms {
            p.add_term(exp, c)?;
        }
        Ok(p)
    }

    /// Add `c * x^exp` in place.
    pub fn add_term(&mut self, exp: Vec<u32>, c: FieldElement) -> Result<()> {
        if exp.len() != self.nvars {
            return Err(Error::ArityMismatch {
                expected: self.nvars,
                got: exp.len(),
            });
        }
        self.field.check(c)?;
        let q = self.field.q();
        let exp: Vec<u32> = exp.into_iter().map(|e| reduce_exp(e, q)).collect();
        let entry = self.terms.entry(exp).or_insert(FieldElement::ZERO);
        *entry = self.field.add(*entry, c);
        if entry.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
        Ok(())
    }

    pub fn from_univariate(p: &Poly) -> MultiPoly {
        let terms = p
            .coeffs()
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, &c)| (vec![i as u32], c));
        MultiPoly::from_terms(p.field(), 1, terms).expect("univariate terms are well formed")
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> &BTreeMap<Vec<u32>, FieldElement> {
        &self.terms
    }

    pub fn coeff(&self, exp: &[u32]) -> FieldElement {
        self.terms.get(exp).copied().unwrap_or(FieldElement::ZERO)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    pub fn has_constant_term(&self) -> bool {
        self.terms.keys().any(|e| e.iter().all(|&a| a == 0))
    }

    pub fn eval(&self, point: &[FieldElement]) -> Result<FieldElement> {
        if point.len() != self.nvars {
            return Err(Error::ArityMismatch {
                expected: self.nvars,
                got: point.len(),
            });
        }
        Ok(self.eval_unchecked(point))
    }

    pub(crate) fn eval_unchecked(&self, point: &[FieldElement]) -> FieldElement {
        let f = &self.field;
        self.terms.iter().fold(FieldElement::ZERO, |acc, (e, &c)| {
            f.add(acc, f.mul(c, monomial_eval(f, e, point)))
        })
    }

    /// Univariate `x -> P(v_1 x, ..., v_n x)`.
    pub fn restrict_to_line(&self, v: &[FieldElement]) -> Result<Poly> {
        if v.len() != self.nvars {
            return Err(Error::ArityMismatch {
                expected: self.nvars,
                got: v.len(),
            });
        }
        let f = &self.field;
        let mut out = Poly::zero(f);
        for (e, &c) in &self.terms {
            let deg: u32 = e.iter().sum();
            let coef = f.mul(c, monomial_eval(f, e, v));
            out = out.add(&Poly::monomial(f, coef, deg as usize))?;
        }
        Ok(out)
    }

    pub fn to_json(&self) -> PolyJson {
        PolyJson {
            field: FieldJson {
                p: self.field.p() as u64,
                k: self.field.k(),
            },
            terms: self
                .terms
                .iter()
                .map(|(e, c)| TermJson {
                    exp: e.clone(),
                    coef: c.value() as u64,
                })
                .collect(),
        }
    }

    /// Parse the JSON form; `nvars` is taken from the first term unless given.
    pub fn from_json(json: &PolyJson, nvars: Option<usize>) -> Result<MultiPoly> {
        let field = Field::new(json.field.p, json.field.k)?;
        let n = nvars
            .or_else(|| json.terms.first().map(|t| t.exp.len()))
            .ok_or_else(|| Error::Parse("cannot infer the number of variables".into()))?;
        let mut p = MultiPoly::zero(&field, n);
        for t in &json.terms {
            p.add_term(t.exp.clone(), field.element(t.coef)?)?;
        }
        Ok(p)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldJson {
    pub p: u64,
    pub k: u32,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub exp: Vec<u32>,
    pub coef: u64,
}

/// Wire format for polynomials.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyJson {
    pub field: FieldJson,
    pub terms: Vec<TermJson>,
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn monomial_value() {
        let f = Field::new(7, 1).unwrap();
        let v = [f.element(2).unwrap(), f.element(3).unwrap()];
        assert_eq!(monomial_eval(&f, &[1, 2], &v), f.element(4).unwrap());
    }

    #[test]
    fn reduction_mod_frobenius() {
        let f = Field::new(3, 1).unwrap();
        let p = MultiPoly::from_terms(&f, 1, [(vec![3], f.one())]).unwrap();
        assert_eq!(p.coeff(&[1]), f.one());
        let q = MultiPoly::from_terms(&f, 2, [(vec![5, 2], f.one())]).unwrap();
        assert_eq!(q.terms().keys().next().unwrap(), &vec![1, 2]);
        for x in f.elements() {
            for y in f.elements() {
                let direct = f.mul(f.pow(x, 5), f.pow(y, 2));
                assert_eq!(q.eval(&[x, y]).unwrap(), direct);
            }
        }
    }

    #[test]
    fn cancellation_drops_terms() {
        let f = Field::new(5, 1).unwrap();
        let mut p = MultiPoly::zero(&f, 2);
        p.add_term(vec![1, 1], f.element(2).unwrap()).unwrap();
        p.add_term(vec![1, 1], f.element(3).unwrap()).unwrap();
        assert!(p.is_zero());
        assert!(matches!(
            p.add_term(vec![1], f.one()),
            Err(Error::ArityMismatch { expected: 2, got: 1 })
        ));
        assert!(p.eval(&[f.one()]).is_err());
    }

    #[test]
    fn line_restriction() {
        let f = Field::new(5, 1).unwrap();
        // x1^2 + 2 x1 x2
        let p = MultiPoly::from_terms(
            &f,
            2,
            [(vec![2, 0], f.one()), (vec![1, 1], f.element(2).unwrap())],
        )
        .unwrap();
        let v = [f.element(2).unwrap(), f.element(3).unwrap()];
        let line = p.restrict_to_line(&v).unwrap();
        // 4 + 12 = 16 = 1 on x^2
        assert_eq!(line, Poly::monomial(&f, f.one(), 2));
    }

    #[test]
    fn json_round_trip() {
        let f = Field::new(3, 2).unwrap();
        let p = MultiPoly::from_terms(
            &f,
            2,
            [(vec![1, 0], f.element(5).unwrap()), (vec![0, 2], f.one())],
        )
        .unwrap();
        let s = serde_json::to_string(&p.to_json()).unwrap();
        let back: PolyJson = serde_json::from_str(&s).unwrap();
        assert_eq!(MultiPoly::from_json(&back, None).unwrap(), p);
    }
}
