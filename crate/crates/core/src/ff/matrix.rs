use std::fmt;

use super::field::{Field, FieldElement};
use crate::error::{Error, Result};

/// Dense row-major matrix over `F_q`.
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<FieldElement>,
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{}", self.rows, self.cols)?;
        for r in 0..self.rows {
            let row: Vec<u32> = self.row(r).iter().map(|x| x.value()).collect();
            writeln!(f, "  {row:?}")?;
        }
        Ok(())
    }
}

/// Reduced row echelon form plus pivot columns.
struct Echelon {
    m: Matrix,
    pivots: Vec<usize>,
}

impl Matrix {
    pub fn zeros(field: &Field, rows: usize, cols: usize) -> Matrix {
        Matrix {
            field: field.clone(),
            rows,
            cols,
            data: vec![FieldElement::ZERO; rows * cols],
        }
    }

    pub fn identity(field: &Field, n: usize) -> Matrix {
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, FieldElement::ONE);
        }
        m
    }

    pub fn from_rows(field: &Field, rows: Vec<Vec<FieldElement>>) -> Result<Matrix> {
        let cols = rows.first().map_or(0, |r| r.len());
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::DimensionMismatch("ragged rows".into()));
        }
        for &x in rows.iter().flatten() {
            field.check(x)?;
        }
        Ok(Matrix {
            field: field.clone(),
            rows: rows.len(),
            cols,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> FieldElement {
        self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: FieldElement) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[FieldElement] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn push_row(&mut self, row: Vec<FieldElement>) -> Result<()> {
        if self.rows > 0 && row.len() != self.cols {
            return Err(Error::DimensionMismatch(format!(
                "row of length {} for {} columns",
                row.len(),
                self.cols
            )));
        }
        self.cols = row.len();
        self.data.extend(row);
        self.rows += 1;
        Ok(())
    }

    /// Keep only the listed columns, in the given order.
    pub fn select_columns(&self, cols: &[usize]) -> Matrix {
        let mut out = Matrix::zeros(&self.field, self.rows, cols.len());
        for r in 0..self.rows {
            for (j, &c) in cols.iter().enumerate() {
                out.set(r, j, self.get(r, c));
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[FieldElement]) -> Result<Vec<FieldElement>> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch(format!(
                "vector of length {} for {} columns",
                v.len(),
                self.cols
            )));
        }
        let f = &self.field;
        Ok((0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .zip(v)
                    .fold(FieldElement::ZERO, |acc, (&a, &b)| f.add(acc, f.mul(a, b)))
            })
            .collect())
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for c in 0..self.cols {
                self.data.swap(a * self.cols + c, b * self.cols + c);
            }
        }
    }

    fn rref(&self) -> Echelon {
        let f = &self.field;
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m.get(i, c).is_zero()) else {
                continue;
            };
            m.swap_rows(r, p);
            let inv = f.inv(m.get(r, c)).expect("pivot is nonzero");
            for j in c..m.cols {
                let v = f.mul(m.get(r, j), inv);
                m.set(r, j, v);
            }
            for i in 0..m.rows {
                let factor = m.get(i, c);
                if i == r || factor.is_zero() {
                    continue;
                }
                for j in c..m.cols {
                    let v = f.sub(m.get(i, j), f.mul(factor, m.get(r, j)));
                    m.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        Echelon { m, pivots }
    }

    pub fn rank(&self) -> usize {
        self.rref().pivots.len()
    }

    /// A basis of the right kernel, one vector per free column.
    pub fn kernel_basis(&self) -> Vec<Vec<FieldElement>> {
        let Echelon { m, pivots } = self.rref();
        let f = &self.field;
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&fc| {
                let mut v = vec![FieldElement::ZERO; self.cols];
                v[fc] = FieldElement::ONE;
                for (r, &pc) in pivots.iter().enumerate() {
                    v[pc] = f.neg(m.get(r, fc));
                }
                v
            })
            .collect()
    }

    /// Some nonzero `v` with `M v = 0`, if the columns are dependent.
    pub fn kernel_vector(&self) -> Option<Vec<FieldElement>> {
        self.kernel_basis().into_iter().next()
    }

    /// Solve `M z = y` and require the solution to be unique.
    pub fn solve(&self, y: &[FieldElement]) -> Result<Vec<FieldElement>> {
        if y.len() != self.rows {
            return Err(Error::DimensionMismatch(format!(
                "right-hand side of length {} for {} rows",
                y.len(),
                self.rows
            )));
        }
        let mut aug = Matrix::zeros(&self.field, self.rows, self.cols + 1);
        for r in 0..self.rows {
            for c in 0..self.cols {
                aug.set(r, c, self.get(r, c));
            }
            aug.set(r, self.cols, y[r]);
        }
        let Echelon { m, pivots } = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return Err(Error::Inconsistent);
        }
        if pivots.len() < self.cols {
            return Err(Error::Singular);
        }
        Ok((0..self.cols).map(|r| m.get(r, self.cols)).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn mat(f: &Field, rows: &[&[u64]]) -> Matrix {
        Matrix::from_rows(
            f,
            rows.iter()
                .map(|r| r.iter().map(|&v| f.element(v).unwrap()).collect())
                .collect(),
        )
        .unwrap()
    }

    fn els(f: &Field, v: &[u64]) -> Vec<FieldElement> {
        v.iter().map(|&x| f.element(x).unwrap()).collect()
    }

    #[test]
    fn identity_solve() {
        let f = Field::new(5, 1).unwrap();
        let id = Matrix::identity(&f, 3);
        assert_eq!(id.solve(&els(&f, &[1, 2, 3])).unwrap(), els(&f, &[1, 2, 3]));
    }

    #[test]
    fn zero_row_kernel() {
        let f = Field::new(5, 1).unwrap();
        let z = Matrix::zeros(&f, 1, 2);
        let v = z.kernel_vector().unwrap();
        assert_eq!(v, els(&f, &[1, 0]));
    }

    #[test]
    fn vandermonde_rank() {
        let f = Field::new(7, 1).unwrap();
        assert_eq!(mat(&f, &[&[1, 1], &[2, 4]]).rank(), 2);
    }

    #[test]
    fn solve_errors() {
        let f = Field::new(7, 1).unwrap();
        let m = mat(&f, &[&[1, 2], &[2, 4]]);
        assert_eq!(m.solve(&els(&f, &[1, 3])).unwrap_err(), Error::Inconsistent);
        assert_eq!(m.solve(&els(&f, &[1, 2])).unwrap_err(), Error::Singular);
        // Overdetermined but consistent.
        let tall = mat(&f, &[&[1, 0], &[0, 1], &[1, 1]]);
        assert_eq!(tall.solve(&els(&f, &[2, 3, 5])).unwrap(), els(&f, &[2, 3]));
    }

    proptest! {
        #[test]
        fn solve_and_kernel_are_exact(
            q in prop::sample::select(vec![2u64, 3, 4, 7, 9]),
            rows in 1usize..5,
            cols in 1usize..5,
            raw in prop::collection::vec(0u64..1000, 25),
        ) {
            let f = Field::with_order(q).unwrap();
            let data: Vec<Vec<FieldElement>> = (0..rows)
                .map(|r| (0..cols).map(|c| f.element(raw[r * 5 + c] % q).unwrap()).collect())
                .collect();
            let m = Matrix::from_rows(&f, data).unwrap();
            for v in m.kernel_basis() {
                prop_assert!(v.iter().any(|x| !x.is_zero()));
                prop_assert!(m.mul_vec(&v).unwrap().iter().all(|x| x.is_zero()));
            }
            prop_assert_eq!(m.kernel_basis().len(), cols - m.rank());
            let z: Vec<_> = (0..cols).map(|c| f.element(raw[20 + c % 5] % q).unwrap()).collect();
            let y = m.mul_vec(&z).unwrap();
            match m.solve(&y) {
                Ok(sol) => prop_assert_eq!(m.mul_vec(&sol).unwrap(), y),
                Err(e) => prop_assert_eq!(e, Error::Singular),
            }
        }
    }
}
