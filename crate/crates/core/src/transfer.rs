//! Transfer matrices over level vectors and exact counting.
//!
//! An independent set is read level by level from the outside in. Entry
//! `(v, w)` of the transfer matrix is 1 when level vector `w` may follow `v`
//! on the next inner level. The number of independent sets on `n` levels is
//! the first entry of `M^n u`, where `u` marks the vectors allowed on the
//! innermost level; row 0 belongs to the zero vector, which places no
//! constraint on the first real level.

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::Result;
use crate::graphs::{self, accepts, level_vectors, Family, FamilySpec, LevelVector};

/// Exact independent-set count.
pub type BigCount = BigUint;

/// Above this dimension products go through a subset-sum transform instead
/// of the dense double loop.
const DENSE_LIMIT: usize = 256;

/// The 0/1 compatibility matrix of a family, indexed by its level vectors.
///
/// Entries are derived from the index order on demand, so even the
/// `2^16`-dimensional matrices take no quadratic storage.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TransferMatrix {
    family: Family,
    ell: usize,
    index_order: Vec<LevelVector>,
}

impl TransferMatrix {
    pub fn family(&self) -> Family {
        self.family
    }

    pub fn ell(&self) -> usize {
        self.ell
    }

    pub fn dim(&self) -> usize {
        self.index_order.len()
    }

    pub fn index_order(&self) -> &[LevelVector] {
        &self.index_order
    }

    pub fn entry(&self, row: usize, col: usize) -> bool {
        let (v, w) = (&self.index_order[row], &self.index_order[col]);
        w.mask() & !v.allowed_below() == 0
    }

    pub fn row(&self, row: usize) -> Vec<u8> {
        (0..self.dim()).map(|c| u8::from(self.entry(row, c))).collect()
    }

    pub fn to_dense(&self) -> Vec<Vec<u8>> {
        (0..self.dim()).map(|r| self.row(r)).collect()
    }

    /// Acceptance vector as exact 0/1 counts.
    pub fn acceptance(&self) -> Vec<BigCount> {
        self.index_order
            .iter()
            .map(|v| {
                if accepts(self.family, v) {
                    BigCount::one()
                } else {
                    BigCount::zero()
                }
            })
            .collect()
    }

    /// Computes `M x`.
    pub fn apply(&self, x: &[BigCount]) -> Vec<BigCount> {
        assert_eq!(x.len(), self.dim(), "vector length does not match matrix");
        if self.dim() <= DENSE_LIMIT {
            self.apply_dense(x)
        } else {
            self.apply_subset_sum(x)
        }
    }

    fn apply_dense(&self, x: &[BigCount]) -> Vec<BigCount> {
        (0..self.dim())
            .map(|r| {
                let mut acc = BigCount::zero();
                for (c, xc) in x.iter().enumerate() {
                    if self.entry(r, c) {
                        acc += xc;
                    }
                }
                acc
            })
            .collect()
    }

    /// `(M x)_v` is the sum of `x_w` over `w` inside the allowed mask of `v`,
    /// so one zeta transform over the `2^ell` cube serves every row.
    fn apply_subset_sum(&self, x: &[BigCount]) -> Vec<BigCount> {
        let size = 1usize << self.ell;
        let mut z = vec![BigCount::zero(); size];
        for (v, xv) in self.index_order.iter().zip(x) {
            z[v.mask() as usize] = xv.clone();
        }
        for bit in 0..self.ell {
            let step = 1usize << bit;
            for m in 0..size {
                if m & step != 0 {
                    let (lo, hi) = z.split_at_mut(m);
                    hi[0] += &lo[m ^ step];
                }
            }
        }
        self.index_order
            .iter()
            .map(|v| z[v.allowed_below() as usize].clone())
            .collect()
    }
}

/// Builds the transfer matrix of `family` for cycle size `ell`.
pub fn build_transfer(family: Family, ell: usize) -> Result<TransferMatrix> {
    Ok(TransferMatrix {
        family,
        ell,
        index_order: level_vectors(family, ell)?,
    })
}

/// Number of independent sets of the instance.
pub fn count(spec: &FamilySpec) -> Result<BigCount> {
    let mut series = count_series(spec.family, spec.ell, spec.n)?;
    Ok(series.pop().expect("series has n + 1 terms"))
}

/// Counts for `n = 0..=n_max`, from one sweep of vector iterates.
pub fn count_series(family: Family, ell: usize, n_max: usize) -> Result<Vec<BigCount>> {
    graphs::check_ell(family, ell)?;
    let m = build_transfer(family, ell)?;
    let mut x = m.acceptance();
    let mut out = Vec::with_capacity(n_max + 1);
    out.push(x[0].clone());
    for _ in 0..n_max {
        x = m.apply(&x);
        out.push(x[0].clone());
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::compatible;

    fn nums(v: &[u64]) -> Vec<BigCount> {
        v.iter().map(|&x| BigCount::from(x)).collect()
    }

    #[test]
    fn g3_matrix_matches_display() {
        let expected = vec![
            vec![1, 1, 1, 1, 1, 1, 1, 1],
            vec![1, 0, 0, 0, 1, 0, 0, 0],
            vec![1, 1, 0, 0, 0, 0, 0, 0],
            vec![1, 0, 0, 0, 0, 0, 0, 0],
            vec![1, 0, 1, 0, 0, 0, 0, 0],
            vec![1, 0, 0, 0, 0, 0, 0, 0],
            vec![1, 0, 0, 0, 0, 0, 0, 0],
            vec![1, 0, 0, 0, 0, 0, 0, 0],
        ];
        let g = build_transfer(Family::G, 3).unwrap();
        assert_eq!(g.to_dense(), expected);
        assert_eq!(build_transfer(Family::K, 3).unwrap().to_dense(), expected);
    }

    #[test]
    fn r3_matrix() {
        let r = build_transfer(Family::R, 3).unwrap();
        assert_eq!(
            r.to_dense(),
            vec![
                vec![1, 1, 1, 1],
                vec![1, 0, 0, 1],
                vec![1, 1, 0, 0],
                vec![1, 0, 1, 0],
            ]
        );
    }

    #[test]
    fn p_matrix_shape() {
        for ell in 3..9 {
            let p = build_transfer(Family::P, ell).unwrap();
            assert_eq!(p.dim(), ell + 1);
            let unit_index = |v: &LevelVector| (1..=ell).find(|&i| v.get(i) == 1).unwrap();
            for r in 0..=ell {
                assert!(p.entry(r, 0) && p.entry(0, r));
            }
            for r in 1..=ell {
                for c in 1..=ell {
                    let i = unit_index(&p.index_order()[r]);
                    let j = unit_index(&p.index_order()[c]);
                    let blocked = j == i || j % ell + 1 == i;
                    assert_eq!(p.entry(r, c), !blocked, "ell={ell} e_{i} e_{j}");
                }
            }
        }
    }

    #[test]
    fn entries_follow_compatibility() {
        for family in Family::ALL {
            let m = build_transfer(family, 5).unwrap();
            for (r, v) in m.index_order().iter().enumerate() {
                for (c, w) in m.index_order().iter().enumerate() {
                    assert_eq!(m.entry(r, c), compatible(v, w).unwrap());
                }
            }
        }
    }

    #[test]
    fn subset_sum_matches_dense() {
        for (family, ell) in [(Family::G, 9), (Family::R, 12), (Family::K, 10)] {
            let m = build_transfer(family, ell).unwrap();
            let x: Vec<BigCount> = (0..m.dim()).map(|i| BigCount::from(i as u64 * 7 + 1)).collect();
            assert_eq!(m.apply_subset_sum(&x), m.apply_dense(&x));
        }
    }

    #[test]
    fn published_counts() {
        assert_eq!(count(&FamilySpec::new(Family::G, 3, 5).unwrap()).unwrap(), BigCount::from(560u32));
        assert_eq!(count(&FamilySpec::new(Family::R, 3, 3).unwrap()).unwrap(), BigCount::from(28u32));
        assert_eq!(count(&FamilySpec::new(Family::P, 4, 5).unwrap()).unwrap(), BigCount::from(773u32));
        for family in Family::ALL {
            assert_eq!(count(&FamilySpec::new(family, 7, 0).unwrap()).unwrap(), BigCount::one());
        }
    }

    #[test]
    fn series_examples() {
        assert_eq!(count_series(Family::K, 3, 4).unwrap(), nums(&[1, 4, 14, 48, 164]));
        assert_eq!(count_series(Family::K, 4, 2).unwrap(), nums(&[1, 5, 32]));
        assert_eq!(count_series(Family::P, 3, 3).unwrap(), nums(&[1, 4, 10, 28]));
    }

    #[test]
    fn large_cycles() {
        // one level: independent sets of C_16 (Lucas) and of K_16
        assert_eq!(count(&FamilySpec::new(Family::G, 16, 1).unwrap()).unwrap(), BigCount::from(2207u32));
        assert_eq!(count(&FamilySpec::new(Family::K, 16, 1).unwrap()).unwrap(), BigCount::from(17u32));
        assert_eq!(count(&FamilySpec::new(Family::P, 24, 1).unwrap()).unwrap(), BigCount::from(25u32));
    }
}
