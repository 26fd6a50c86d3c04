//! Bivariate samples and joint ranks.

use crate::error::{Error, Result};

/// `N` paired observations of two real variables.
///
/// Construction validates the invariants once; everything downstream
/// relies on them (equal lengths, `N >= 2`, all values finite).
#[derive(Debug, Clone, PartialEq)]
pub struct BivariateSample {
    xs: Vec<f64>,
    ys: Vec<f64>,
}

impl BivariateSample {
    pub fn new(xs: Vec<f64>, ys: Vec<f64>) -> Result<Self> {
        if xs.len() != ys.len() {
            return Err(Error::InvalidSample(format!(
                "coordinate lengths differ: {} vs {}",
                xs.len(),
                ys.len()
            )));
        }
        if xs.len() < 2 {
            return Err(Error::InvalidSample(format!(
                "need at least 2 observations, got {}",
                xs.len()
            )));
        }
        if xs.iter().chain(ys.iter()).any(|v| !v.is_finite()) {
            return Err(Error::InvalidSample(
                "non-finite value in sample".to_string(),
            ));
        }
        Ok(Self { xs, ys })
    }

    pub fn from_pairs(pairs: &[(f64, f64)]) -> Result<Self> {
        let xs = pairs.iter().map(|p| p.0).collect();
        let ys = pairs.iter().map(|p| p.1).collect();
        Self::new(xs, ys)
    }

    pub fn len(&self) -> usize {
        self.xs.len()
    }

    pub fn is_empty(&self) -> bool {
        false // invariant: N >= 2
    }

    pub fn xs(&self) -> &[f64] {
        &self.xs
    }

    pub fn ys(&self) -> &[f64] {
        &self.ys
    }
}

/// Joint ranks of a sample: `r[i]` is the rank of `xs[i]` among all xs,
/// `s[i]` likewise for ys, both in `1..=k`. Tie-free by construction --
/// ranking refuses tied data, so `r` and `s` are permutations of `1..=k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JointRanks {
    r: Vec<u32>,
    s: Vec<u32>,
}

impl JointRanks {
    pub fn k(&self) -> usize {
        self.r.len()
    }

    /// Ranks of the first coordinate, values in `1..=k`.
    pub fn r(&self) -> &[u32] {
        &self.r
    }

    /// Ranks of the second coordinate, values in `1..=k`.
    pub fn s(&self) -> &[u32] {
        &self.s
    }
}

/// Rank a single coordinate: `rank[i] = #{j : v[j] <= v[i]}`.
///
/// Returns `None` when two values are exactly equal (the caller decides
/// the tie policy).
pub(crate) fn rank_coordinate(values: &[f64], order: &mut Vec<u32>, ranks: &mut Vec<u32>) -> bool {
    let k = values.len();
    order.clear();
    order.extend(0..k as u32);
    order.sort_unstable_by(|&a, &b| values[a as usize].total_cmp(&values[b as usize]));
    ranks.clear();
    ranks.resize(k, 0);
    for (pos, &idx) in order.iter().enumerate() {
        if pos > 0 && values[order[pos - 1] as usize] == values[idx as usize] {
            return false;
        }
        ranks[idx as usize] = pos as u32 + 1;
    }
    true
}

/// Compute the joint ranks of a sample, refusing tied coordinates.
pub fn compute_ranks(sample: &BivariateSample) -> Result<JointRanks> {
    let mut order = Vec::new();
    let mut r = Vec::new();
    let mut s = Vec::new();
    if !rank_coordinate(sample.xs(), &mut order, &mut r) {
        return Err(Error::TiesDetected { coordinate: "x" });
    }
    if !rank_coordinate(sample.ys(), &mut order, &mut s) {
        return Err(Error::TiesDetected { coordinate: "y" });
    }
    Ok(JointRanks { r, s })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranks_by_inspection() {
        let sample = BivariateSample::new(vec![10.0, 20.0, 30.0], vec![3.0, 1.0, 2.0]).unwrap();
        let ranks = compute_ranks(&sample).unwrap();
        assert_eq!(ranks.r(), &[1, 2, 3]);
        assert_eq!(ranks.s(), &[3, 1, 2]);
    }

    #[test]
    fn degenerate_sample_rejected() {
        assert!(matches!(
            BivariateSample::new(vec![5.0], vec![3.0]),
            Err(Error::InvalidSample(_))
        ));
        assert!(matches!(
            BivariateSample::new(vec![1.0, 2.0], vec![3.0]),
            Err(Error::InvalidSample(_))
        ));
        assert!(matches!(
            BivariateSample::new(vec![1.0, f64::NAN], vec![3.0, 4.0]),
            Err(Error::InvalidSample(_))
        ));
    }

    #[test]
    fn exact_duplicate_is_a_tie() {
        let sample = BivariateSample::new(vec![1.0, 1.0, 2.0], vec![1.0, 2.0, 3.0]).unwrap();
        assert!(matches!(
            compute_ranks(&sample),
            Err(Error::TiesDetected { coordinate: "x" })
        ));
        let sample = BivariateSample::new(vec![1.0, 3.0, 2.0], vec![7.0, 2.0, 7.0]).unwrap();
        assert!(matches!(
            compute_ranks(&sample),
            Err(Error::TiesDetected { coordinate: "y" })
        ));
    }

    #[test]
    fn tie_free_ranks_are_permutations() {
        let sample =
            BivariateSample::new(vec![0.3, -1.2, 5.0, 2.2], vec![9.0, -3.0, 0.1, 0.2]).unwrap();
        let ranks = compute_ranks(&sample).unwrap();
        let mut r = ranks.r().to_vec();
        let mut s = ranks.s().to_vec();
        r.sort_unstable();
        s.sort_unstable();
        assert_eq!(r, vec![1, 2, 3, 4]);
        assert_eq!(s, vec![1, 2, 3, 4]);
    }

    #[test]
    fn ranks_invariant_under_increasing_transform() {
        let xs = vec![0.3, -1.2, 5.0, 2.2, 0.7];
        let ys = vec![9.0, -3.0, 0.1, 0.2, 4.4];
        let base = BivariateSample::new(xs.clone(), ys.clone()).unwrap();
        let transformed = BivariateSample::new(
            xs.iter().map(|x| (x * 0.5).exp()).collect(),
            ys.clone(),
        )
        .unwrap();
        assert_eq!(
            compute_ranks(&base).unwrap().r(),
            compute_ranks(&transformed).unwrap().r()
        );
    }

    #[test]
    fn subset_ranking_matches_restricted_sample() {
        // Ranking a subset of indices within the full sample, then
        // re-ranking, equals ranking the restricted sample directly.
        let xs = vec![0.3, -1.2, 5.0, 2.2, 0.7, -0.4];
        let ys = vec![9.0, -3.0, 0.1, 0.2, 4.4, 1.3];
        let subset = [1usize, 3, 4];
        let sub = BivariateSample::new(
            subset.iter().map(|&i| xs[i]).collect(),
            subset.iter().map(|&i| ys[i]).collect(),
        )
        .unwrap();
        let ranks = compute_ranks(&sub).unwrap();
        assert_eq!(ranks.r(), &[1, 3, 2]);
        assert_eq!(ranks.s(), &[1, 2, 3]);
    }
}
