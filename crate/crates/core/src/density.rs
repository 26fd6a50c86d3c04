//! Discrete densities on an `n x n` grid of rank atoms.

use crate::error::{Error, Result};

/// Tolerance on the sum-to-one invariant of a grid density.
pub const MASS_TOTAL_TOL: f64 = 1e-9;

/// Nonnegative mass on the grid of rank atoms `(p/n, q/n)`, `p, q = 1..=n`.
///
/// Cell `(i, j)` (0-based, row-major) carries the mass of the atom with
/// first-coordinate rank `i + 1` and second-coordinate rank `j + 1`.
/// Invariants: every entry is nonnegative and the total mass is 1 within
/// [`MASS_TOTAL_TOL`].
#[derive(Debug, Clone, PartialEq)]
pub struct DiscreteCopulaDensity {
    n: usize,
    mass: Vec<f64>,
}

/// Neumaier-compensated sum; keeps grid totals exact to well below the
/// 1e-9 invariant even for millions of cells.
pub(crate) fn compensated_sum(values: impl IntoIterator<Item = f64>) -> f64 {
    let mut sum = 0.0;
    let mut comp = 0.0;
    for v in values {
        let t = sum + v;
        if sum.abs() >= v.abs() {
            comp += (sum - t) + v;
        } else {
            comp += (v - t) + sum;
        }
        sum = t;
    }
    sum + comp
}

impl DiscreteCopulaDensity {
    /// Validate and wrap a mass grid (row-major, length `n * n`).
    pub fn new(n: usize, mass: Vec<f64>) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidDensity(format!("grid size {n} < 2")));
        }
        if mass.len() != n * n {
            return Err(Error::InvalidDensity(format!(
                "mass has {} entries, expected {}",
                mass.len(),
                n * n
            )));
        }
        if mass.iter().any(|&v| !v.is_finite() || v < 0.0) {
            return Err(Error::InvalidDensity(
                "negative or non-finite mass entry".to_string(),
            ));
        }
        let total = compensated_sum(mass.iter().copied());
        if (total - 1.0).abs() > MASS_TOTAL_TOL {
            return Err(Error::InvalidDensity(format!(
                "total mass {total} differs from 1 by more than {MASS_TOTAL_TOL}"
            )));
        }
        Ok(Self { n, mass })
    }

    /// Normalize an integer count grid into a density. Counts are exact,
    /// so the invariants hold to one rounding each.
    pub fn from_counts(n: usize, counts: &[u64]) -> Result<Self> {
        let total: u64 = counts.iter().sum();
        if total == 0 {
            return Err(Error::InvalidDensity("empty count grid".to_string()));
        }
        let inv = 1.0 / total as f64;
        Self::new(n, counts.iter().map(|&c| c as f64 * inv).collect())
    }

    /// The uniform density: `1/n^2` on every cell.
    pub fn uniform(n: usize) -> Self {
        assert!(n >= 2, "grid size must be at least 2");
        Self {
            n,
            mass: vec![1.0 / (n * n) as f64; n * n],
        }
    }

    pub fn grid_size(&self) -> usize {
        self.n
    }

    /// Mass of cell `(i, j)`, 0-based (rank atom `(i + 1, j + 1)`).
    pub fn mass(&self, i: usize, j: usize) -> f64 {
        self.mass[i * self.n + j]
    }

    /// Row-major view of all cells.
    pub fn cells(&self) -> &[f64] {
        &self.mass
    }

    pub fn row_sums(&self) -> Vec<f64> {
        (0..self.n)
            .map(|i| compensated_sum(self.mass[i * self.n..(i + 1) * self.n].iter().copied()))
            .collect()
    }

    pub fn col_sums(&self) -> Vec<f64> {
        (0..self.n)
            .map(|j| compensated_sum((0..self.n).map(|i| self.mass[i * self.n + j])))
            .collect()
    }

    pub fn total(&self) -> f64 {
        compensated_sum(self.mass.iter().copied())
    }
}
