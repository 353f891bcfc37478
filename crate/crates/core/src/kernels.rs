//! Scalar and multivariate kernels.
//!
//! Each kernel comes in two forms: a closed product formula used in
//! production, and a `*_reference` function that sums exponentials over the
//! defining index set. The tests check one against the other.
//!
//! The closed forms are built from the sine ratio `sin(mπt)/sin(πt)`, which
//! has removable singularities at the integers. [`sin_ratio`] reduces `t` to
//! its nearest integer first, so the formulas stay accurate right up to the
//! singular set.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::index_sets::{generate_hn, generate_hn_star, in_hn, weight_c};
use crate::lattice::{phi, HIndex, HomoPoint};
use crate::numeric::pairwise_sum;

/// Below this value of `|sin πδ|` the sine ratio is replaced by its limit.
pub const SINGULAR_TOL: f64 = 1e-8;

/// `sin(mπt) / sin(πt)`, continuous across the integers.
pub fn sin_ratio(m: i64, t: f64) -> f64 {
    let p = t.round();
    let delta = t - p;
    // (-1)^{p(m-1)}
    let odd = (p as i64).rem_euclid(2) == 1 && m.rem_euclid(2) == 0;
    let sign = if odd { -1.0 } else { 1.0 };
    let den = (PI * delta).sin();
    if den.abs() < SINGULAR_TOL {
        sign * m as f64
    } else {
        sign * (m as f64 * PI * delta).sin() / den
    }
}

/// `K_n(t) = Σ_{j=0}^{n} e^{2πijt} = e^{iπnt} sin(π(n+1)t)/sin(πt)`.
pub fn k_n(n: u32, t: f64) -> Complex64 {
    Complex64::from_polar(1.0, PI * f64::from(n) * t) * sin_ratio(i64::from(n) + 1, t)
}

/// Direct summation of `K_n`.
pub fn k_n_reference(n: u32, t: f64) -> Complex64 {
    let terms: Vec<Complex64> = (0..=n).map(|j| Complex64::from_polar(1.0, 2.0 * PI * f64::from(j) * t)).collect();
    pairwise_sum(&terms)
}

/// `Θ_n(t) = Π_j sin(nπt_j)/sin(πt_j)`.
pub fn theta(n: u32, t: &HomoPoint) -> f64 {
    t.coords().iter().map(|&v| sin_ratio(i64::from(n), v)).product()
}

/// The Dirichlet kernel `D_n = Θ_{n+1} - Θ_n`, the sum of `φ_k` over `ℍ_n*`.
pub fn dirichlet(n: u32, t: &HomoPoint) -> f64 {
    theta(n + 1, t) - theta(n, t)
}

/// `Σ_{k∈ℍ_n*} φ_k(t)` by direct summation.
pub fn dirichlet_reference(n: u32, t: &HomoPoint) -> Complex64 {
    let terms: Vec<Complex64> = generate_hn_star(n).iter().map(|k| phi(k, t)).collect();
    pairwise_sum(&terms)
}

/// `D_n` through the one-dimensional kernels: `Π K_n(t_j) - Π (K_n(t_j) - 1)`.
pub fn dirichlet_product(n: u32, t: &HomoPoint) -> Complex64 {
    let c = t.coords();
    let full: Complex64 = c.iter().map(|&v| k_n(n, v)).product();
    let shifted: Complex64 = c.iter().map(|&v| k_n(n, v) - 1.0).product();
    full - shifted
}

/// Per-coordinate quantities from which every closed-form kernel of degree
/// `n` is assembled.
#[derive(Clone, Copy, Debug, Default)]
pub(crate) struct CoordFactors {
    /// `sin((n+1)πs)/sin(πs)`
    pub sr_next: f64,
    /// `sin(nπs)/sin(πs)`
    pub sr: f64,
    /// `sin((n-1)πs)/sin(πs)`
    pub sr_prev: f64,
    /// `e^{iπns}`
    pub half: Complex64,
    /// `e^{2πins}`
    pub full: Complex64,
}

impl CoordFactors {
    pub fn new(n: u32, s: f64) -> Self {
        let m = i64::from(n);
        let half = Complex64::from_polar(1.0, PI * f64::from(n) * s);
        CoordFactors {
            sr_next: sin_ratio(m + 1, s),
            sr: sin_ratio(m, s),
            sr_prev: sin_ratio(m - 1, s),
            half,
            full: half * half,
        }
    }
}

/// `4n³ Φ_n*` from the factors of the four coordinates.
#[inline]
pub(crate) fn phi_star_unscaled(f: [&CoordFactors; 4]) -> f64 {
    let theta_next = f[0].sr_next * f[1].sr_next * f[2].sr_next * f[3].sr_next;
    let theta_prev = f[0].sr_prev * f[1].sr_prev * f[2].sr_prev * f[3].sr_prev;
    let mut edge = 0.0;
    for nu in 0..4 {
        let mut inner = 0.0;
        for j in 0..4 {
            if j != nu {
                inner += (f[j].full * f[nu].half).re;
            }
        }
        edge += f[nu].sr_prev * inner;
    }
    let faces: f64 = f.iter().map(|c| c.full.re).sum();
    let mut pairs = 0.0;
    for mu in 0..4 {
        for nu in (mu + 1)..4 {
            pairs += (f[mu].full * f[nu].full).re;
        }
    }
    0.5 * (theta_next - theta_prev) - edge / 3.0 - 0.5 * faces - pairs / 3.0
}

/// `Θ_n - Θ_{n-1}` from the factors of the four coordinates.
#[inline]
pub(crate) fn theta_step(f: [&CoordFactors; 4]) -> f64 {
    f[0].sr * f[1].sr * f[2].sr * f[3].sr - f[0].sr_prev * f[1].sr_prev * f[2].sr_prev * f[3].sr_prev
}

fn factors_of(n: u32, t: &HomoPoint) -> [CoordFactors; 4] {
    t.coords().map(|v| CoordFactors::new(n, v))
}

/// The symmetric interpolation kernel `Φ_n*`.
///
/// ```text
/// 4n³ Φ_n*(t) = ½(D_n + D_{n-1})
///             - ⅓ Σ_ν sin((n-1)πt_ν)/sin(πt_ν) Σ_{j≠ν} cos nπ(2t_j + t_ν)
///             - ½ Σ_j cos 2πn t_j - ⅓ Σ_{μ<ν} cos 2πn(t_μ + t_ν)
/// ```
pub fn phi_n_star(n: u32, t: &HomoPoint) -> f64 {
    let f = factors_of(n, t);
    phi_star_unscaled([&f[0], &f[1], &f[2], &f[3]]) / scale(n)
}

/// `(1/4n³) Σ_{k∈ℍ_n*} c_k φ_k(t)` by direct summation.
pub fn phi_n_star_reference(n: u32, t: &HomoPoint) -> Complex64 {
    let terms: Vec<Complex64> = generate_hn_star(n)
        .iter()
        .map(|k| phi(k, t) * ratio_to_f64(weight_c(k, n).expect("index from ℍ_n*")))
        .collect();
    pairwise_sum(&terms) / scale(n)
}

/// `2 Σ_ν sin((n-1)πt_ν)/sin(πt_ν) Σ_{j≠ν} cos nπ(2t_j + t_ν)`, which equals
/// the sum of `φ_k` over the edge strata `(1,2)` and `(2,1)` of `ℍ_n*`.
pub fn edge_sum(n: u32, t: &HomoPoint) -> f64 {
    let f = factors_of(n, t);
    let mut edge = 0.0;
    for nu in 0..4 {
        let inner: f64 = (0..4).filter(|&j| j != nu).map(|j| (f[j].full * f[nu].half).re).sum();
        edge += f[nu].sr_prev * inner;
    }
    2.0 * edge
}

/// The interpolation kernel `Φ_n = (1/4n³) Σ_{k∈ℍ_n} φ_k` on the half-open
/// node set.
///
/// `Φ_n` differs from `Φ_n*` only on the boundary of `ℍ_n*`, where the weight
/// `c_k` is replaced by membership in `ℍ_n`. The boundary has `12n² + 2`
/// indices, so a kernel object caches them.
#[derive(Clone, Debug)]
pub struct PhiKernel {
    n: u32,
    corrections: Vec<(HIndex, f64)>,
}

impl PhiKernel {
    pub fn new(n: u32) -> Self {
        let corrections = generate_hn_star(n)
            .into_iter()
            .filter(|k| k.spread() == 4 * i64::from(n))
            .map(|k| {
                let inside = if in_hn(&k, n) { 1.0 } else { 0.0 };
                (k, inside - ratio_to_f64(weight_c(&k, n).expect("index from ℍ_n*")))
            })
            .collect();
        PhiKernel { n, corrections }
    }

    pub fn degree(&self) -> u32 {
        self.n
    }

    /// Boundary indices of `ℍ_n*` with their coefficient `χ_{ℍ_n}(k) - c_k`.
    pub fn corrections(&self) -> &[(HIndex, f64)] {
        &self.corrections
    }

    pub fn eval(&self, t: &HomoPoint) -> Complex64 {
        let terms: Vec<Complex64> = self.corrections.iter().map(|(k, w)| phi(k, t) * *w).collect();
        Complex64::new(phi_n_star(self.n, t), 0.0) + pairwise_sum(&terms) / scale(self.n)
    }
}

/// `Φ_n(t)`; builds a [`PhiKernel`] on every call.
pub fn phi_n(n: u32, t: &HomoPoint) -> Complex64 {
    PhiKernel::new(n).eval(t)
}

/// `(1/4n³) Σ_{k∈ℍ_n} φ_k(t)` by direct summation.
pub fn phi_n_reference(n: u32, t: &HomoPoint) -> Complex64 {
    let terms: Vec<Complex64> = generate_hn(n).iter().map(|k| phi(k, t)).collect();
    pairwise_sum(&terms) / scale(n)
}

#[inline]
pub(crate) fn scale(n: u32) -> f64 {
    4.0 * f64::from(n).powi(3)
}

pub(crate) fn ratio_to_f64(r: num_rational::Ratio<i64>) -> f64 {
    *r.numer() as f64 / *r.denom() as f64
}
