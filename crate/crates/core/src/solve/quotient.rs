use serde::Serialize;

use crate::error::{Error, Result};
use crate::ff::{Field, FieldElement};
use crate::oracle::{level_partition, Oracle};

/// What procedure R learns about `ax^2 + bx` from its level sets.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct QuotientReport {
    /// `a = 0`.
    pub azero: bool,
    /// `b / a` when `a ≠ 0`.
    pub ratio: Option<u32>,
    /// `a = b = 0`: the oracle is constant.
    pub vanishing: bool,
}

impl QuotientReport {
    pub fn ratio(&self) -> Option<FieldElement> {
        self.ratio.map(|r| FieldElement::from_index(r as usize))
    }
}

/// Classify `f(x) = ax^2 + bx + c` on `F_q` (q odd) from its level sets.
///
/// With `a ≠ 0`, `f(x) = f(y)` for `x ≠ y` iff `x + y = -b/a`, so the classes
/// are pairs summing to `-b/a` plus one singleton at `-b/(2a)`.
pub fn procedure_r<O: Oracle>(oracle: &O, field: &Field) -> Result<QuotientReport> {
    if field.p() == 2 {
        return Err(Error::EvenCharacteristic);
    }
    let q = field.q() as usize;
    if oracle.domain_size() != q {
        return Err(Error::DomainMismatch(oracle.domain_size()));
    }
    let pi = level_partition(oracle);
    if pi.num_classes() == 1 {
        return Ok(QuotientReport {
            azero: true,
            ratio: None,
            vanishing: true,
        });
    }
    if pi.num_classes() == q {
        return Ok(QuotientReport {
            azero: true,
            ratio: None,
            vanishing: false,
        });
    }
    let bad = || Error::PromiseViolation("level sets are not those of a quadratic".into());
    if pi.num_classes() != q.div_ceil(2) {
        return Err(bad());
    }
    let mut sum = None;
    let mut singleton = None;
    for class in pi.classes() {
        match class.as_slice() {
            [x] => {
                if singleton.replace(*x).is_some() {
                    return Err(bad());
                }
            }
            [x, y] => {
                let s = field.add(FieldElement::from_index(*x), FieldElement::from_index(*y));
                if *sum.get_or_insert(s) != s {
                    return Err(bad());
                }
            }
            _ => return Err(bad()),
        }
    }
    let (Some(s), Some(x)) = (sum, singleton) else {
        return Err(bad());
    };
    let x = FieldElement::from_index(x);
    if field.add(x, x) != s {
        return Err(bad());
    }
    Ok(QuotientReport {
        azero: false,
        ratio: Some(field.neg(s).value()),
        vanishing: false,
    })
}
