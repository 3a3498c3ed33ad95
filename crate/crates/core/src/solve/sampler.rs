use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::ff::{Field, FieldElement, Matrix};

/// Classical stand-in for Fourier sampling over `Z_p^r`: each sample is a
/// uniform character vanishing on the hidden subgroup. It reads the hidden
/// generators, so it is a harness-side component.
pub struct CosetSampler {
    field: Field,
    r: usize,
    perp: Vec<Vec<FieldElement>>,
    rng: ChaCha8Rng,
    samples: u64,
}

fn to_matrix(field: &Field, r: usize, rows: &[Vec<u32>]) -> Result<Matrix> {
    let mut m = Matrix::zeros(field, 0, r);
    for row in rows {
        if row.len() != r {
            return Err(Error::ArityMismatch {
                expected: r,
                got: row.len(),
            });
        }
        m.push_row(row.iter().map(|&x| field.element(x as u64)).collect::<Result<_>>()?)?;
    }
    Ok(m)
}

fn basis(field: &Field, r: usize, rows: &[Vec<u32>]) -> Result<Vec<Vec<FieldElement>>> {
    Ok(to_matrix(field, r, rows)?.kernel_basis())
}

impl CosetSampler {
    pub fn new(p: u64, r: usize, hidden: &[Vec<u32>], seed: u64) -> Result<CosetSampler> {
        let field = Field::new(p, 1)?;
        let perp = basis(&field, r, hidden)?;
        Ok(CosetSampler {
            field,
            r,
            perp,
            rng: ChaCha8Rng::seed_from_u64(seed),
            samples: 0,
        })
    }

    pub fn sample(&mut self) -> Vec<u32> {
        self.samples += 1;
        let mut out = vec![self.field.zero(); self.r];
        for b in &self.perp {
            let c = FieldElement::from_index(self.rng.gen_range(0..self.field.q() as usize));
            for (o, &x) in out.iter_mut().zip(b) {
                *o = self.field.add(*o, self.field.mul(c, x));
            }
        }
        out.into_iter().map(|x| x.value()).collect()
    }

    pub fn samples_drawn(&self) -> u64 {
        self.samples
    }
}

/// The subgroup annihilated by every sample, as a basis of `Z_p^r`.
pub fn reconstruct_subgroup(p: u64, r: usize, samples: &[Vec<u32>]) -> Result<Vec<Vec<u32>>> {
    let field = Field::new(p, 1)?;
    Ok(basis(&field, r, samples)?
        .into_iter()
        .map(|v| v.into_iter().map(|x| x.value()).collect())
        .collect())
}

/// Whether two generating sets span the same subgroup of `Z_p^r`.
pub fn same_subspace(p: u64, r: usize, a: &[Vec<u32>], b: &[Vec<u32>]) -> Result<bool> {
    let field = Field::new(p, 1)?;
    let ra = to_matrix(&field, r, a)?.rank();
    let rb = to_matrix(&field, r, b)?.rank();
    let both: Vec<Vec<u32>> = a.iter().chain(b).cloned().collect();
    Ok(ra == rb && to_matrix(&field, r, &both)?.rank() == ra)
}
