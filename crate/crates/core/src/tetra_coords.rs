//! Coordinates on the fundamental tetrahedron.
//!
//! Two tetrahedra show up:
//!
//! * the corner simplex `△* = {0 <= x3 <= x2 <= x1 <= 1}`, reached from `△_H`
//!   by `x_i = t_i - t_4`. Under this map the node `j/4n` goes to `k/n` with
//!   `k_i = (j_i - j_4)/4`, and `Λ_n` becomes `{0 <= k3 <= k2 <= k1 <= n}`;
//! * the reference tetrahedron `△ = {0 <= x3 ± x2, x2 ± x1 <= 1}` in the
//!   Cartesian coordinates of the dodecahedron, reached by
//!   [`from_homogeneous`](crate::lattice::from_homogeneous).
//!
//! Both are images of
//! `△_H = {0 <= t1 - t2, t2 - t3, t3 - t4, t1 - t4 <= 1}`.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::index_sets::weight_lambda;
use crate::interpolation::{InterpKind, Interpolant};
use crate::lattice::{is_h_index, HIndex, HomoPoint, Point3};

const TOL: f64 = 1e-12;

/// A node index of `△*`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RegularIndex {
    pub k1: i64,
    pub k2: i64,
    pub k3: i64,
}

impl RegularIndex {
    pub fn new(k1: i64, k2: i64, k3: i64) -> Self {
        RegularIndex { k1, k2, k3 }
    }

    /// `0 <= k3 <= k2 <= k1 <= n`.
    pub fn in_range(&self, n: u32) -> bool {
        0 <= self.k3 && self.k3 <= self.k2 && self.k2 <= self.k1 && self.k1 <= i64::from(n)
    }

    /// All indices with `0 <= k3 <= k2 <= k1 <= n`, lexicographically.
    pub fn all(n: u32) -> Vec<RegularIndex> {
        let n = i64::from(n);
        let mut out = Vec::new();
        for k1 in 0..=n {
            for k2 in 0..=k1 {
                for k3 in 0..=k2 {
                    out.push(RegularIndex::new(k1, k2, k3));
                }
            }
        }
        out
    }

    /// `λ` of the corresponding node of `Λ_n`; zero outside the range.
    pub fn weight(&self, n: u32) -> u32 {
        weight_lambda(&index_regular_to_h(self), n).unwrap_or(0)
    }
}

/// `k_i = (j_i - j_4)/4`.
pub fn index_h_to_regular(j: [i64; 4]) -> Result<RegularIndex> {
    if !is_h_index(&j) {
        return Err(Error::NotAnIndex(j));
    }
    Ok(RegularIndex::new((j[0] - j[3]) / 4, (j[1] - j[3]) / 4, (j[2] - j[3]) / 4))
}

pub fn index_regular_to_h(k: &RegularIndex) -> HIndex {
    HIndex::from_offsets([k.k1, k.k2, k.k3])
}

/// `x_i = t_i - t_4`.
pub fn homo_to_regular(t: &HomoPoint) -> Point3 {
    let c = t.coords();
    Point3::new(c[0] - c[3], c[1] - c[3], c[2] - c[3])
}

/// Inverse of [`homo_to_regular`]: `t_4 = -(x1 + x2 + x3)/4`, `t_i = x_i + t_4`.
pub fn regular_to_homo(x: &Point3) -> HomoPoint {
    let t4 = -(x.x1 + x.x2 + x.x3) / 4.0;
    HomoPoint::new([x.x1 + t4, x.x2 + t4, x.x3 + t4, t4])
}

/// The point `k/n` of `△*`.
pub fn regular_node(k: &RegularIndex, n: u32) -> Point3 {
    let s = f64::from(n);
    Point3::new(k.k1 as f64 / s, k.k2 as f64 / s, k.k3 as f64 / s)
}

pub fn in_tetra_h(t: &HomoPoint) -> bool {
    let c = t.coords();
    [c[0] - c[1], c[1] - c[2], c[2] - c[3], c[0] - c[3]]
        .iter()
        .all(|&d| (-TOL..=1.0 + TOL).contains(&d))
}

/// `0 <= x3 <= x2 <= x1 <= 1`.
pub fn in_tetra_regular(x: &Point3) -> bool {
    -TOL <= x.x3 && x.x3 <= x.x2 + TOL && x.x2 <= x.x1 + TOL && x.x1 <= 1.0 + TOL
}

/// `0 <= x3 - x2, x3 + x2, x2 - x1, x2 + x1 <= 1`.
pub fn in_tetra_reference(x: &Point3) -> bool {
    [x.x3 - x.x2, x.x3 + x.x2, x.x2 - x.x1, x.x2 + x.x1]
        .iter()
        .all(|&d| (-TOL..=1.0 + TOL).contains(&d))
}

/// Tetrahedral cosine interpolation of `f3` on `△*`, evaluated at `x`.
///
/// The interpolant reads `f3` at the nodes `k/n` and agrees with
/// `𝓛_n*` applied to `f3 ∘ homo_to_regular`.
pub fn regular_interpolate<F>(f3: F, n: u32, x: &Point3) -> Result<Complex64>
where
    F: Fn(&Point3) -> Complex64 + Sync,
{
    Ok(regular_interpolant(f3, n)?.eval(&regular_to_homo(x)))
}

/// The interpolant behind [`regular_interpolate`], for repeated evaluation.
pub fn regular_interpolant<F>(f3: F, n: u32) -> Result<Interpolant>
where
    F: Fn(&Point3) -> Complex64 + Sync,
{
    let values = RegularIndex::all(n)
        .into_iter()
        .map(|k| (index_regular_to_h(&k), f3(&regular_node(&k, n))));
    Interpolant::from_values(InterpKind::LnStar, n, values)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::index_sets::generate_lambda_n;
    use crate::lattice::from_homogeneous;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn index_map_examples() {
        assert_eq!(index_h_to_regular([0, 0, 0, 0]).unwrap(), RegularIndex::new(0, 0, 0));
        for n in 1..=4 {
            assert_eq!(index_h_to_regular([n, n, n, -3 * n]).unwrap(), RegularIndex::new(n, n, n));
            assert_eq!(index_h_to_regular([3 * n, -n, -n, -n]).unwrap(), RegularIndex::new(n, 0, 0));
        }
        assert_eq!(index_h_to_regular([1, 0, 0, -1]), Err(Error::NotAnIndex([1, 0, 0, -1])));
    }

    #[test]
    fn index_maps_are_inverse_bijections() {
        for n in 1..=5 {
            let lambda = generate_lambda_n(n);
            let regular = RegularIndex::all(n);
            assert_eq!(lambda.len(), regular.len());
            for (j, s) in &lambda {
                let k = index_h_to_regular(j.components()).unwrap();
                assert!(k.in_range(n));
                assert_eq!(index_regular_to_h(&k), *j);
                assert_eq!(k.weight(n), s.weight());
            }
            for k in &regular {
                assert_eq!(index_h_to_regular(index_regular_to_h(k).components()).unwrap(), *k);
            }
        }
    }

    #[test]
    fn corners() {
        for c in [[0.75, -0.25, -0.25, -0.25], [0.0; 4], [0.25, 0.25, 0.25, -0.75], [0.5, 0.5, -0.5, -0.5]] {
            let t = HomoPoint::new(c);
            assert!(in_tetra_h(&t));
            assert!(in_tetra_regular(&homo_to_regular(&t)));
            assert!(in_tetra_reference(&from_homogeneous(&t)));
        }
        assert!(!in_tetra_h(&HomoPoint::new([-0.75, 0.25, 0.25, 0.25])));
    }

    #[test]
    fn random_points_land_in_both_tetrahedra() {
        let mut rng = ChaCha8Rng::seed_from_u64(40);
        for _ in 0..1000 {
            let mut x: [f64; 3] = std::array::from_fn(|_| rng.gen_range(0.0..1.0));
            x.sort_unstable_by(|a, b| b.partial_cmp(a).unwrap());
            let x = Point3::new(x[0], x[1], x[2]);
            let t = regular_to_homo(&x);
            assert!(in_tetra_h(&t));
            assert!(in_tetra_reference(&from_homogeneous(&t)));
            let back = homo_to_regular(&t);
            assert!((back.x1 - x.x1).abs() < 1e-14 && (back.x2 - x.x2).abs() < 1e-14 && (back.x3 - x.x3).abs() < 1e-14);
        }
    }
}
