use crate::error::{Error, Result};
use crate::ff::{Field, FieldElement};
use crate::oracle::Oracle;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GroverScan {
    pub c: usize,
    pub queries: u64,
}

/// Classical scan for the marked point of `δ_c`, in the given order.
pub fn grover_scan<O: Oracle<Output = u64>>(oracle: &O, order: &[usize]) -> Result<GroverScan> {
    let mut queries = 0;
    for &x in order {
        if x >= oracle.domain_size() {
            return Err(Error::DomainMismatch(x));
        }
        queries += 1;
        if oracle.query(x) == 1 {
            return Ok(GroverScan { c: x, queries });
        }
    }
    Err(Error::PromiseViolation("no marked point in the scan order".into()))
}

/// The fixed point `c = (1 - a)^{-1} b` of `x -> ax + b`, for `a ≠ 1`.
pub fn grover_recover(field: &Field, b: FieldElement, a: FieldElement) -> Result<FieldElement> {
    field.div(b, field.sub(field.one(), a))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::{make_grover_oracle, Hidden};
    use crate::solve::{brute_force_hssp, SubgroupFamily};

    #[test]
    fn scan_counts() {
        let f = Field::new(5, 1).unwrap();
        let order: Vec<usize> = (0..5).collect();
        let inst = make_grover_oracle(&f, f.from_int(4)).unwrap();
        assert_eq!(grover_scan(&inst.oracle, &order).unwrap(), GroverScan { c: 4, queries: 5 });
        let inst = make_grover_oracle(&f, f.zero()).unwrap();
        assert_eq!(grover_scan(&inst.oracle, &order).unwrap().queries, 1);
        let total: u64 = f
            .elements()
            .map(|c| grover_scan(&make_grover_oracle(&f, c).unwrap().oracle, &order).unwrap().queries)
            .sum();
        assert_eq!(2 * total, 5 * 6);
    }

    #[test]
    fn recovery_from_stabilizer() {
        let f = Field::new(5, 1).unwrap();
        for c in f.elements() {
            let inst = make_grover_oracle(&f, c).unwrap();
            let act = inst.action().unwrap().clone();
            let h = brute_force_hssp(&inst.oracle, &act, &SubgroupFamily::Any).unwrap();
            let Hidden::GroverTarget { stabilizer, .. } = inst.hidden() else { unreachable!() };
            assert_eq!(&h, stabilizer);
            for &g in h.elements().iter().filter(|&&g| g != 0) {
                let (b, a) = act.group().affine_parts(g).unwrap();
                assert_eq!(grover_recover(&f, b, a).unwrap(), c);
            }
        }
        assert_eq!(grover_recover(&f, f.one(), f.one()).unwrap_err(), Error::DivisionByZero);
    }
}
