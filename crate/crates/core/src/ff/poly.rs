use std::fmt;

use super::field::{Field, FieldElement};
use crate::error::{Error, Result};

/// Dense univariate polynomial over `F_q`, lowest degree first, no trailing zeros.
#[derive(Clone, PartialEq, Eq)]
pub struct Poly {
    field: Field,
    coeffs: Vec<FieldElement>,
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c: Vec<u32> = self.coeffs.iter().map(|c| c.value()).collect();
        write!(f, "Poly{c:?}")
    }
}

impl Poly {
    pub fn new(field: &Field, coeffs: Vec<FieldElement>) -> Result<Poly> {
        for &c in &coeffs {
            field.check(c)?;
        }
        let mut p = Poly {
            field: field.clone(),
            coeffs,
        };
        p.normalize();
        Ok(p)
    }

    /// Build from integer encodings, lowest degree first.
    pub fn from_values(field: &Field, values: &[u64]) -> Result<Poly> {
        let coeffs = values
            .iter()
            .map(|&v| field.element(v))
            .collect::<Result<Vec<_>>>()?;
        Poly::new(field, coeffs)
    }

    pub fn zero(field: &Field) -> Poly {
        Poly {
            field: field.clone(),
            coeffs: Vec::new(),
        }
    }

    pub fn constant(field: &Field, c: FieldElement) -> Poly {
        let mut p = Poly {
            field: field.clone(),
            coeffs: vec![c],
        };
        p.normalize();
        p
    }

    /// `c * x^e`.
    pub fn monomial(field: &Field, c: FieldElement, e: usize) -> Poly {
        let mut coeffs = vec![FieldElement::ZERO; e + 1];
        coeffs[e] = c;
        let mut p = Poly {
            field: field.clone(),
            coeffs,
        };
        p.normalize();
        p
    }

    fn normalize(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn coeffs(&self) -> &[FieldElement] {
        &self.coeffs
    }

    /// Coefficient of `x^i`, zero past the degree.
    pub fn coeff(&self, i: usize) -> FieldElement {
        self.coeffs.get(i).copied().unwrap_or(FieldElement::ZERO)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Horner evaluation.
    pub fn eval(&self, x: FieldElement) -> FieldElement {
        let f = &self.field;
        self.coeffs
            .iter()
            .rev()
            .fold(FieldElement::ZERO, |acc, &c| f.add(f.mul(acc, x), c))
    }

    fn check_field(&self, other: &Poly) -> Result<()> {
        if self.field == other.field {
            Ok(())
        } else {
            Err(Error::FieldMismatch)
        }
    }

    pub fn add(&self, other: &Poly) -> Result<Poly> {
        self.check_field(other)?;
        let f = &self.field;
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|i| f.add(self.coeff(i), other.coeff(i))).collect();
        let mut p = Poly {
            field: f.clone(),
            coeffs,
        };
        p.normalize();
        Ok(p)
    }

    pub fn neg(&self) -> Poly {
        Poly {
            field: self.field.clone(),
            coeffs: self.coeffs.iter().map(|&c| self.field.neg(c)).collect(),
        }
    }

    pub fn sub(&self, other: &Poly) -> Result<Poly> {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Poly) -> Result<Poly> {
        self.check_field(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Poly::zero(&self.field));
        }
        let f = &self.field;
        let mut coeffs = vec![FieldElement::ZERO; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] = f.add(coeffs[i + j], f.mul(a, b));
            }
        }
        let mut p = Poly {
            field: f.clone(),
            coeffs,
        };
        p.normalize();
        Ok(p)
    }

    pub fn scale(&self, c: FieldElement) -> Poly {
        let mut p = Poly {
            field: self.field.clone(),
            coeffs: self.coeffs.iter().map(|&a| self.field.mul(a, c)).collect(),
        };
        p.normalize();
        p
    }

    /// `x -> P(x - t)`, the shift used by function graph groups.
    pub fn shift(&self, t: FieldElement) -> Poly {
        let f = &self.field;
        // Horner in the ring: ((c_n)(x - t) + c_{n-1})(x - t) + ...
        let lin = Poly {
            field: f.clone(),
            coeffs: vec![f.neg(t), FieldElement::ONE],
        };
        let mut acc = Poly::zero(f);
        for &c in self.coeffs.iter().rev() {
            acc = acc.mul(&lin).expect("same field");
            acc = acc.add(&Poly::constant(f, c)).expect("same field");
        }
        acc
    }

    /// Drop the constant coefficient.
    pub fn without_constant(&self) -> Poly {
        let mut p = self.clone();
        if let Some(c) = p.coeffs.first_mut() {
            *c = FieldElement::ZERO;
        }
        p.normalize();
        p
    }

    /// Coefficients `c_0..=c_d` padded with zeros.
    pub fn padded(&self, d: usize) -> Vec<FieldElement> {
        (0..=d).map(|i| self.coeff(i)).collect()
    }
}

/// The unique polynomial of degree at most `d` through `points`.
///
/// Extra points beyond `d + 1` must be consistent with the interpolant.
pub fn lagrange_interpolate(
    field: &Field,
    points: &[(FieldElement, FieldElement)],
    d: usize,
) -> Result<Poly> {
    if points.len() < d + 1 {
        return Err(Error::TooFewPoints {
            needed: d + 1,
            got: points.len(),
        });
    }
    let mut seen = std::collections::HashSet::new();
    for &(x, y) in points {
        field.check(x)?;
        field.check(y)?;
        if !seen.insert(x) {
            return Err(Error::DuplicateAbscissa(x.value()));
        }
    }
    let used = &points[..d + 1];
    let f = field;
    let mut result = Poly::zero(f);
    for (i, &(xi, yi)) in used.iter().enumerate() {
        let mut basis = Poly::constant(f, FieldElement::ONE);
        let mut denom = FieldElement::ONE;
        for (j, &(xj, _)) in used.iter().enumerate() {
            if i == j {
                continue;
            }
            basis = basis.mul(&Poly::new(f, vec![f.neg(xj), FieldElement::ONE])?)?;
            denom = f.mul(denom, f.sub(xi, xj));
        }
        let scale = f.div(yi, denom)?;
        result = result.add(&basis.scale(scale))?;
    }
    if points[d + 1..].iter().any(|&(x, y)| result.eval(x) != y) {
        return Err(Error::Inconsistent);
    }
    Ok(result)
}
