use std::collections::HashMap;
use std::sync::Arc;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::ff::{lagrange_interpolate, Field, FieldElement};
use crate::group::{Group, GroupDescriptor};
use crate::oracle::{MappedOracle, Oracle};

/// Smallest `d ≥ 1` with `(A - I)^d = 0` over `F_p`.
pub fn nilpotency_index(p: u64, a: &[Vec<u64>]) -> Result<usize> {
    let m = a.len();
    let n: Vec<Vec<u64>> = (0..m)
        .map(|i| (0..m).map(|j| (a[i][j] + p - u64::from(i == j)) % p).collect())
        .collect();
    let mut cur = n.clone();
    for d in 1..=m {
        if cur.iter().flatten().all(|&x| x == 0) {
            return Ok(d);
        }
        cur = (0..m)
            .map(|i| (0..m).map(|j| (0..m).map(|k| cur[i][k] * n[k][j]).sum::<u64>() % p).collect())
            .collect();
    }
    Err(Error::InvalidGroup("A - I is not nilpotent".into()))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ZpmzpSolution {
    pub v: Vec<u32>,
    /// Nilpotency index of `A - I`, bounding the degree of each `Q_v^(i)`.
    pub d: usize,
    /// Coefficients of `Q_v^(i)(t)` in `t`, constant first, per coordinate.
    pub coordinate_polys: Vec<Vec<u32>>,
    pub queries: u64,
}

/// Solve HSP on `Z_p^m ⋊ Z_p` hiding `H_v = <(v, 1)>` through its HPGP view.
///
/// With `h(g) = f(g^{-1})` the level sets of `h` are left cosets, and
/// `(w, 0)(Q_v(t), t) = (w + Q_v(t), t)`, so `h(y, t)` labels `y - Q_v(t)`:
/// an m-dimensional HPGP in `t`. Its columns are read off by matching
/// `h(t, 0)` against `h(0, w)`.
pub fn zpmzp_to_hpgp<O: Oracle>(oracle: &O, group: &Arc<Group>) -> Result<ZpmzpSolution> {
    let GroupDescriptor::Zpmzp { p, m, a } = group.descriptor() else {
        return Err(Error::InvalidGroup("expected Z_p^m ⋊ Z_p".into()));
    };
    let (p, m) = (*p, *m);
    if oracle.domain_size() != group.order() {
        return Err(Error::DomainMismatch(oracle.domain_size()));
    }
    let d = nilpotency_index(p, a)?;
    let deg = d.min(p as usize - 1);
    let pu = p as usize;
    let k_order = group.k_order();
    let before = oracle.query_count();

    // View index t + p * w.
    let g = group.clone();
    let view = MappedOracle::new(oracle, group.order(), move |i| {
        let (t, w) = (i % pu, i / pu);
        g.inv(g.compose(w, t))
    });
    let mut column = HashMap::with_capacity(k_order);
    for w in 0..k_order {
        if column.insert(view.query(pu * w), w).is_some() {
            return Err(Error::Unsupported("H_v has order larger than p".into()));
        }
    }
    let fp = Field::new(p, 1)?;
    let mut values: Vec<Vec<u32>> = Vec::with_capacity(deg + 1);
    for t in 0..=deg {
        let w = *column
            .get(&view.query(t))
            .ok_or_else(|| Error::PromiseViolation("row label missing from the t = 0 column".into()))?;
        let (wv, _) = group.zpmzp_parts(group.compose(w, 0))?;
        values.push(wv.iter().map(|&x| fp.neg(FieldElement::from_index(x as usize)).value()).collect());
    }
    let coordinate_polys = (0..m)
        .map(|i| {
            let pts: Vec<(FieldElement, FieldElement)> = (0..=deg)
                .map(|t| (FieldElement::from_index(t), FieldElement::from_index(values[t][i] as usize)))
                .collect();
            let poly = lagrange_interpolate(&fp, &pts, deg)?;
            Ok(poly.padded(deg).iter().map(|c| c.value()).collect())
        })
        .collect::<Result<Vec<Vec<u32>>>>()?;
    let v = if deg >= 1 { values[1].clone() } else { vec![0; m] };
    Ok(ZpmzpSolution {
        v,
        d,
        coordinate_polys,
        queries: oracle.query_count() - before,
    })
}
