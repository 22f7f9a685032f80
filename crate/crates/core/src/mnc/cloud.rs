//! Point-cloud machinery for the covering and packing estimators.
//!
//! Clouds are embedded through a semi-norm's feature map, after which all
//! pairwise semi-norm distances are Euclidean distances of coefficient
//! tuples. Greedy searches are deterministic: the covering picks the
//! uncovered point of largest semi-norm first, the packing grows by
//! farthest-point insertion seeded at the largest point; ties break by
//! index.

use num_complex::Complex64;

use super::seminorm::SemiNorm;
use crate::error::Result;
use crate::hilbert_module::ModuleVector;

/// A sampled member cloud together with its semi-norm features.
#[derive(Debug, Clone)]
pub struct Cloud {
    feats: Vec<Vec<Complex64>>,
}

impl Cloud {
    pub fn len(&self) -> usize {
        self.feats.len()
    }

    pub fn is_empty(&self) -> bool {
        self.feats.is_empty()
    }

    pub fn dist(&self, i: usize, j: usize) -> f64 {
        feat_dist(&self.feats[i], &self.feats[j])
    }

    pub fn point_norm(&self, i: usize) -> f64 {
        self.feats[i].iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }
}

pub(crate) fn feat_dist(a: &[Complex64], b: &[Complex64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y).norm_sqr()).sum::<f64>().sqrt()
}

/// Embed members through the semi-norm's feature map.
pub fn embed(points: &[ModuleVector], p: &SemiNorm) -> Result<Cloud> {
    let feats = points.iter().map(|x| p.features(x)).collect::<Result<Vec<_>>>()?;
    Ok(Cloud { feats })
}

/// Geometric grid of candidate radii between `lo_frac·scale` and
/// `hi_frac·scale` with the given ratio, ascending.
pub fn eps_grid(scale: f64, lo_frac: f64, hi_frac: f64, ratio: f64) -> Vec<f64> {
    debug_assert!(ratio > 1.0 && lo_frac > 0.0 && hi_frac > lo_frac);
    let mut out = Vec::new();
    let mut eps = lo_frac * scale;
    let top = hi_frac * scale;
    while eps < top {
        out.push(eps);
        eps *= ratio;
    }
    out.push(top);
    out
}

/// Greedy covering of the cloud by balls of radius `eps` centered at cloud
/// points; returns the chosen centers when at most `max_centers` suffice.
pub fn greedy_cover(cloud: &Cloud, eps: f64, max_centers: usize) -> Option<Vec<usize>> {
    let n = cloud.len();
    let mut covered = vec![false; n];
    let mut centers = Vec::new();
    loop {
        let next = (0..n)
            .filter(|&i| !covered[i])
            .max_by(|&i, &j| {
                cloud
                    .point_norm(i)
                    .partial_cmp(&cloud.point_norm(j))
                    .unwrap()
                    .then(j.cmp(&i))
            });
        let Some(c) = next else {
            return Some(centers);
        };
        if centers.len() == max_centers {
            return None;
        }
        centers.push(c);
        for i in 0..n {
            if !covered[i] && cloud.dist(c, i) <= eps {
                covered[i] = true;
            }
        }
    }
}

/// Farthest-point packing: indices pairwise at least `eps` apart, at least
/// `min_count` of them if possible.
pub fn greedy_pack(cloud: &Cloud, eps: f64, min_count: usize) -> Option<Vec<usize>> {
    let n = cloud.len();
    if n == 0 {
        return None;
    }
    let seed = (0..n)
        .max_by(|&i, &j| {
            cloud
                .point_norm(i)
                .partial_cmp(&cloud.point_norm(j))
                .unwrap()
                .then(j.cmp(&i))
        })
        .unwrap();
    let mut chosen = vec![seed];
    let mut min_dist: Vec<f64> = (0..n).map(|i| cloud.dist(seed, i)).collect();
    while chosen.len() < min_count {
        let far = (0..n)
            .max_by(|&i, &j| min_dist[i].partial_cmp(&min_dist[j]).unwrap().then(j.cmp(&i)))
            .unwrap();
        if min_dist[far] < eps {
            return None;
        }
        chosen.push(far);
        for i in 0..n {
            min_dist[i] = min_dist[i].min(cloud.dist(far, i));
        }
    }
    Some(chosen)
}

/// Smallest grid radius whose greedy cover succeeds.
pub fn cover_eps(cloud: &Cloud, grid: &[f64], max_centers: usize) -> Option<f64> {
    grid.iter().copied().find(|&eps| greedy_cover(cloud, eps, max_centers).is_some())
}

/// Largest grid separation admitting a packing of `min_count` points.
pub fn pack_eps(cloud: &Cloud, grid: &[f64], min_count: usize) -> Option<f64> {
    grid.iter().rev().copied().find(|&eps| greedy_pack(cloud, eps, min_count).is_some())
}
