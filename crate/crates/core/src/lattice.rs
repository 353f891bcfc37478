//! Homogeneous coordinates for the face-centered cubic lattice.
//!
//! A point `x ∈ ℝ³` is represented by four coordinates `t = U x` that sum to
//! zero. In these coordinates the fcc lattice becomes `ℤ⁴_H` (integer vectors
//! with zero sum), the rhombic dodecahedron becomes
//!
//! ```text
//! Ω_H = { t : -1 < t_i - t_j <= 1, 1 <= i < j <= 4 }
//! ```
//!
//! and the exponentials that are orthonormal on it are indexed by
//! `ℍ = { k ∈ ℤ⁴_H : k1 ≡ k2 ≡ k3 ≡ k4 (mod 4) }`.

use std::fmt;
use std::ops::{Add, Index, Neg, Sub};

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Generator matrix of the fcc lattice.
pub const FCC_GENERATOR: [[i64; 3]; 3] = [[0, 1, 1], [1, 0, 1], [1, 1, 0]];

/// Embedding of lattice coordinates into `ℤ⁴_H`: `H u = (u1, u2, u3, -u1-u2-u3)`.
pub const HOMOGENEOUS_EMBEDDING: [[i64; 3]; 4] = [[1, 0, 0], [0, 1, 0], [0, 0, 1], [-1, -1, -1]];

/// Orthonormal frame `U` with `t = U x`. Entries are all `±1/2`.
pub const ORTHONORMAL_FRAME: [[f64; 3]; 4] = [
    [-0.5, 0.5, 0.5],
    [0.5, -0.5, 0.5],
    [0.5, 0.5, -0.5],
    [-0.5, -0.5, -0.5],
];

/// A point of ℝ³ in ordinary Cartesian coordinates.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Point3 {
    pub x1: f64,
    pub x2: f64,
    pub x3: f64,
}

impl Point3 {
    pub const ORIGIN: Point3 = Point3 { x1: 0.0, x2: 0.0, x3: 0.0 };

    pub fn new(x1: f64, x2: f64, x3: f64) -> Self {
        Point3 { x1, x2, x3 }
    }

    pub fn to_array(self) -> [f64; 3] {
        [self.x1, self.x2, self.x3]
    }
}

/// A point of `ℝ⁴_H`: four reals summing to zero.
///
/// Construction re-projects onto the zero-sum hyperplane by subtracting the
/// coordinate mean.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct HomoPoint([f64; 4]);

impl HomoPoint {
    pub const ORIGIN: HomoPoint = HomoPoint([0.0; 4]);

    pub fn new(t: [f64; 4]) -> Self {
        let mean = (t[0] + t[1] + t[2] + t[3]) / 4.0;
        HomoPoint([t[0] - mean, t[1] - mean, t[2] - mean, t[3] - mean])
    }

    /// The node `k / 4n`.
    pub fn from_index(k: &HIndex, n: u32) -> Self {
        let scale = 4.0 * f64::from(n);
        let c = k.components();
        HomoPoint::new([
            c[0] as f64 / scale,
            c[1] as f64 / scale,
            c[2] as f64 / scale,
            c[3] as f64 / scale,
        ])
    }

    /// Builds `t = H u` from lattice coordinates `u`.
    pub fn from_lattice_coords(u: [f64; 3]) -> Self {
        HomoPoint([u[0], u[1], u[2], -(u[0] + u[1] + u[2])])
    }

    #[inline]
    pub fn coords(&self) -> [f64; 4] {
        self.0
    }

    /// Adds an integer zero-sum vector without re-projecting.
    pub fn translate(&self, v: [i64; 4]) -> Self {
        let t = self.0;
        HomoPoint([
            t[0] + v[0] as f64,
            t[1] + v[1] as f64,
            t[2] + v[2] as f64,
            t[3] + v[3] as f64,
        ])
    }

    pub fn max_abs_diff(&self, other: &HomoPoint) -> f64 {
        (0..4).map(|i| (self.0[i] - other.0[i]).abs()).fold(0.0, f64::max)
    }

    /// Largest pairwise difference `max_{i,j} (t_i - t_j)`.
    pub fn spread(&self) -> f64 {
        let t = self.0;
        let max = t.iter().copied().fold(f64::NEG_INFINITY, f64::max);
        let min = t.iter().copied().fold(f64::INFINITY, f64::min);
        max - min
    }
}

impl Index<usize> for HomoPoint {
    type Output = f64;

    fn index(&self, i: usize) -> &f64 {
        &self.0[i]
    }
}

impl Add for HomoPoint {
    type Output = HomoPoint;

    fn add(self, rhs: HomoPoint) -> HomoPoint {
        HomoPoint(std::array::from_fn(|i| self.0[i] + rhs.0[i]))
    }
}

impl Sub for HomoPoint {
    type Output = HomoPoint;

    fn sub(self, rhs: HomoPoint) -> HomoPoint {
        HomoPoint(std::array::from_fn(|i| self.0[i] - rhs.0[i]))
    }
}

impl Neg for HomoPoint {
    type Output = HomoPoint;

    fn neg(self) -> HomoPoint {
        HomoPoint(self.0.map(|v| -v))
    }
}

/// A frequency index `k ∈ ℍ`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HIndex([i64; 4]);

impl HIndex {
    pub const ZERO: HIndex = HIndex([0; 4]);

    pub fn new(k: [i64; 4]) -> Result<Self> {
        if is_h_index(&k) {
            Ok(HIndex(k))
        } else {
            Err(Error::NotAnIndex(k))
        }
    }

    /// The index with `(k_i - k_4) / 4 = m_i` for `i = 1, 2, 3`.
    ///
    /// Every element of `ℍ` arises exactly once this way.
    pub fn from_offsets(m: [i64; 3]) -> Self {
        let s = m[0] + m[1] + m[2];
        HIndex([4 * m[0] - s, 4 * m[1] - s, 4 * m[2] - s, -s])
    }

    /// Inverse of [`HIndex::from_offsets`].
    pub fn offsets(&self) -> [i64; 3] {
        let k = self.0;
        [(k[0] - k[3]) / 4, (k[1] - k[3]) / 4, (k[2] - k[3]) / 4]
    }

    #[inline]
    pub fn components(&self) -> [i64; 4] {
        self.0
    }

    /// `max_i k_i - min_i k_i`, the smallest `4n` with `k ∈ ℍ_n*`.
    pub fn spread(&self) -> i64 {
        let k = self.0;
        let max = k.iter().copied().max().unwrap_or(0);
        let min = k.iter().copied().min().unwrap_or(0);
        max - min
    }

    pub fn dot(&self, t: &HomoPoint) -> f64 {
        let k = self.0;
        let t = t.coords();
        k[0] as f64 * t[0] + k[1] as f64 * t[1] + k[2] as f64 * t[2] + k[3] as f64 * t[3]
    }
}

impl fmt::Display for HIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let k = self.0;
        write!(f, "({},{},{},{})", k[0], k[1], k[2], k[3])
    }
}

impl Add for HIndex {
    type Output = HIndex;

    fn add(self, rhs: HIndex) -> HIndex {
        HIndex(std::array::from_fn(|i| self.0[i] + rhs.0[i]))
    }
}

impl Sub for HIndex {
    type Output = HIndex;

    fn sub(self, rhs: HIndex) -> HIndex {
        HIndex(std::array::from_fn(|i| self.0[i] - rhs.0[i]))
    }
}

impl Neg for HIndex {
    type Output = HIndex;

    fn neg(self) -> HIndex {
        HIndex(self.0.map(|v| -v))
    }
}

pub fn is_h_index(k: &[i64; 4]) -> bool {
    k.iter().sum::<i64>() == 0 && k.iter().all(|&v| (v - k[0]).rem_euclid(4) == 0)
}

/// `t = U x`.
pub fn to_homogeneous(x: Point3) -> HomoPoint {
    let x = x.to_array();
    HomoPoint::new(std::array::from_fn(|i| {
        let row = ORTHONORMAL_FRAME[i];
        row[0] * x[0] + row[1] * x[1] + row[2] * x[2]
    }))
}

/// `x1 = t2 + t3`, `x2 = t1 + t3`, `x3 = t1 + t2`.
pub fn from_homogeneous(t: &HomoPoint) -> Point3 {
    let t = t.coords();
    Point3::new(t[1] + t[2], t[0] + t[2], t[0] + t[1])
}

/// Membership in the half-open dodecahedron `-1 < t_i - t_j <= 1` for `i < j`.
///
/// Comparisons are exact. Node membership should be decided on integer
/// indices instead (see [`crate::index_sets`]).
pub fn in_omega_h(t: &HomoPoint) -> bool {
    let t = t.coords();
    for i in 0..4 {
        for j in (i + 1)..4 {
            let d = t[i] - t[j];
            if !(d > -1.0 && d <= 1.0) {
                return false;
            }
        }
    }
    true
}

/// Membership in the closed dodecahedron, `|t_i - t_j| <= 1 + 1e-12`.
pub fn in_closed_omega_h(t: &HomoPoint) -> bool {
    t.spread() <= 1.0 + 1e-12
}

/// Returns the unique `s ∈ Ω_H` with `s - t ∈ ℤ⁴_H`.
///
/// `t` is written as `H u + r` with `u = floor(t1, t2, t3)`; since every
/// point of `Ω_H` has `|s_i| <= 3/4`, the representative is among the eight
/// translates `t - H(u + w)`, `w ∈ {0,1}³`.
pub fn fold_to_omega_h(t: &HomoPoint) -> HomoPoint {
    let c = t.coords();
    let base = [c[0].floor() as i64, c[1].floor() as i64, c[2].floor() as i64];
    let mut best: Option<(f64, HomoPoint)> = None;
    for w in 0..8 {
        let u = [
            base[0] + (w & 1),
            base[1] + ((w >> 1) & 1),
            base[2] + ((w >> 2) & 1),
        ];
        let shift = [-u[0], -u[1], -u[2], u[0] + u[1] + u[2]];
        let s = t.translate(shift);
        if in_omega_h(&s) {
            return s;
        }
        // Rounding can push a boundary point just outside every candidate;
        // fall back to the least-violating one.
        let spread = s.spread();
        if best.is_none_or(|(b, _)| spread < b) {
            best = Some((spread, s));
        }
    }
    best.map(|(_, s)| s).unwrap_or(*t)
}

/// `φ_k(t) = exp((πi/2) k·t)`.
#[inline]
pub fn phi(k: &HIndex, t: &HomoPoint) -> Complex64 {
    Complex64::from_polar(1.0, std::f64::consts::FRAC_PI_2 * k.dot(t))
}
