//! Discrete and continuous inner products, Fourier partial sums and cubature.
//!
//! All node sums evaluate the integrand in parallel, collect the terms in
//! node order and reduce them with [`pairwise_sum`], so results are identical
//! for any thread count.

use std::collections::{BTreeMap, HashMap};

use num_complex::Complex64;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::index_sets::{generate_hn, generate_hn_star, generate_lambda_n, generate_lambda_n_circ, weight_c};
use crate::kernels::{ratio_to_f64, scale, sin_ratio};
use crate::lattice::{phi, HIndex, HomoPoint, Point3};
use crate::numeric::pairwise_sum;
use crate::tetra_coords::{regular_node, RegularIndex};

/// A function on `ℝ⁴_H` that can be sampled, possibly failing.
pub trait SampleFunction: Sync {
    fn eval(&self, t: &HomoPoint) -> Result<Complex64>;
}

impl<F> SampleFunction for F
where
    F: Fn(&HomoPoint) -> Complex64 + Sync,
{
    fn eval(&self, t: &HomoPoint) -> Result<Complex64> {
        Ok(self(t))
    }
}

/// Node values `f(k/4n)` keyed by index, extended periodically.
///
/// Evaluation is only defined at points `k/4n`; a point whose index is not
/// stored is looked up through its lattice translates `k + 4n v`.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct NodeTable {
    n: u32,
    values: HashMap<HIndex, Complex64>,
}

impl NodeTable {
    pub fn new(n: u32) -> Self {
        NodeTable { n, values: HashMap::new() }
    }

    pub fn from_values(n: u32, values: impl IntoIterator<Item = (HIndex, Complex64)>) -> Self {
        NodeTable { n, values: values.into_iter().collect() }
    }

    pub fn insert(&mut self, k: HIndex, value: Complex64) {
        self.values.insert(k, value);
    }

    pub fn degree(&self) -> u32 {
        self.n
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn get(&self, k: &HIndex) -> Option<Complex64> {
        if let Some(v) = self.values.get(k) {
            return Some(*v);
        }
        let m = 4 * i64::from(self.n);
        let c = k.components();
        for a in -1..=1 {
            for b in -1..=1 {
                for d in -1..=1 {
                    let e = -(a + b + d);
                    let key = [c[0] + a * m, c[1] + b * m, c[2] + d * m, c[3] + e * m];
                    if let Some(v) = HIndex::new(key).ok().and_then(|key| self.values.get(&key)) {
                        return Some(*v);
                    }
                }
            }
        }
        None
    }

    /// The index `k` with `t = k/4n`, if there is one.
    pub fn index_of(&self, t: &HomoPoint) -> Option<HIndex> {
        node_index(t, self.n)
    }
}

impl SampleFunction for NodeTable {
    fn eval(&self, t: &HomoPoint) -> Result<Complex64> {
        self.index_of(t).and_then(|k| self.get(&k)).ok_or(Error::NotANode(t.coords()))
    }
}

/// The index `k ∈ ℍ` with `t = k/4n` to within `1e-9`, if there is one.
pub fn node_index(t: &HomoPoint, n: u32) -> Option<HIndex> {
    let s = 4.0 * f64::from(n);
    let c = t.coords();
    let mut k = [0i64; 4];
    for i in 0..4 {
        let v = c[i] * s;
        let r = v.round();
        if (v - r).abs() > 1e-9 * s.max(1.0) {
            return None;
        }
        k[i] = r as i64;
    }
    HIndex::new(k).ok()
}

fn weighted_node_sum<F, G>(f: &F, g: &G, n: u32, nodes: &[(HIndex, f64)]) -> Result<Complex64>
where
    F: SampleFunction + ?Sized,
    G: SampleFunction + ?Sized,
{
    let terms = nodes
        .par_iter()
        .map(|(k, w)| {
            let t = HomoPoint::from_index(k, n);
            Ok(f.eval(&t)? * g.eval(&t)?.conj() * *w)
        })
        .collect::<Result<Vec<Complex64>>>()?;
    Ok(pairwise_sum(&terms))
}

fn check_degree(n: u32) -> Result<()> {
    if n == 0 {
        Err(Error::InvalidDegree { n, min: 1 })
    } else {
        Ok(())
    }
}

/// `⟨f,g⟩_n = (1/4n³) Σ_{j∈ℍ_n} f(j/4n) conj(g(j/4n))`.
pub fn inner_n<F, G>(f: &F, g: &G, n: u32) -> Result<Complex64>
where
    F: SampleFunction + ?Sized,
    G: SampleFunction + ?Sized,
{
    check_degree(n)?;
    let w = 1.0 / scale(n);
    let nodes: Vec<(HIndex, f64)> = generate_hn(n).into_iter().map(|k| (k, w)).collect();
    weighted_node_sum(f, g, n, &nodes)
}

/// Nodes of `ℍ_n*` with the weights `c_j / 4n³`.
pub fn hn_star_weights(n: u32) -> Vec<(HIndex, f64)> {
    let s = scale(n);
    generate_hn_star(n)
        .into_iter()
        .map(|k| {
            let c = ratio_to_f64(weight_c(&k, n).expect("index from ℍ_n*"));
            (k, c / s)
        })
        .collect()
}

/// `⟨f,g⟩_n* = (1/4n³) Σ_{j∈ℍ_n*} c_j f(j/4n) conj(g(j/4n))`.
pub fn inner_n_star<F, G>(f: &F, g: &G, n: u32) -> Result<Complex64>
where
    F: SampleFunction + ?Sized,
    G: SampleFunction + ?Sized,
{
    check_degree(n)?;
    weighted_node_sum(f, g, n, &hn_star_weights(n))
}

/// Nodes of `Λ_n` with the weights `λ_j / 4n³`.
pub fn lambda_weights(n: u32) -> Vec<(HIndex, f64)> {
    let s = scale(n);
    generate_lambda_n(n).into_iter().map(|(k, st)| (k, f64::from(st.weight()) / s)).collect()
}

/// `⟨f,g⟩_{△,n} = (1/4n³) Σ_{j∈Λ_n} λ_j f(j/4n) conj(g(j/4n))`.
pub fn inner_tetra<F, G>(f: &F, g: &G, n: u32) -> Result<Complex64>
where
    F: SampleFunction + ?Sized,
    G: SampleFunction + ?Sized,
{
    check_degree(n)?;
    weighted_node_sum(f, g, n, &lambda_weights(n))
}

/// `⟨f,g⟩_{△°,n} = (6/n³) Σ_{j∈Λ_n°} f(j/4n) conj(g(j/4n))`.
pub fn inner_tetra_interior<F, G>(f: &F, g: &G, n: u32) -> Result<Complex64>
where
    F: SampleFunction + ?Sized,
    G: SampleFunction + ?Sized,
{
    check_degree(n)?;
    let w = 6.0 / f64::from(n).powi(3);
    let nodes: Vec<(HIndex, f64)> = generate_lambda_n_circ(n).into_iter().map(|k| (k, w)).collect();
    weighted_node_sum(f, g, n, &nodes)
}

fn one(_: &HomoPoint) -> Complex64 {
    Complex64::new(1.0, 0.0)
}

/// Node rule for `(1/2)∫_{Ω_H} f`, exact on trigonometric polynomials of
/// degree `2n - 1`.
pub fn cubature_dodeca<F: SampleFunction + ?Sized>(f: &F, n: u32) -> Result<Complex64> {
    inner_n_star(f, &one, n)
}

/// Node rule on `Λ_n` for the normalized integral over the tetrahedron,
/// exact on generalized cosines of degree `2n - 1`.
pub fn cubature_tetra<F: SampleFunction + ?Sized>(f: &F, n: u32) -> Result<Complex64> {
    inner_tetra(f, &one, n)
}

/// The tetrahedral rule in the coordinates `0 <= x3 <= x2 <= x1 <= 1`: `f3` is
/// read at `(k1/n, k2/n, k3/n)` with the weight of the corresponding node of
/// `Λ_n`.
pub fn cubature_tetra_regular<F>(f3: F, n: u32) -> Result<f64>
where
    F: Fn(&Point3) -> f64 + Sync,
{
    check_degree(n)?;
    let nodes = RegularIndex::all(n);
    let s = scale(n);
    let terms: Vec<f64> = nodes
        .par_iter()
        .map(|k| f64::from(k.weight(n)) / s * f3(&regular_node(k, n)))
        .collect();
    Ok(pairwise_sum(&terms))
}

fn check_quad(q: usize) -> Result<()> {
    if q < 2 {
        Err(Error::InvalidQuadOrder(q))
    } else {
        Ok(())
    }
}

/// Points `H u` for `u` on the uniform `q³` grid of the unit cell.
fn cell_points(q: usize) -> Vec<HomoPoint> {
    let h = 1.0 / q as f64;
    let mut out = Vec::with_capacity(q * q * q);
    for a in 0..q {
        for b in 0..q {
            for c in 0..q {
                out.push(HomoPoint::from_lattice_coords([a as f64 * h, b as f64 * h, c as f64 * h]));
            }
        }
    }
    out
}

/// `(1/2)∫_{Ω_H} f conj(g)` for `H`-periodic `f conj(g)`.
///
/// The integral is taken over the lattice cell `{H u : u ∈ [0,1)³}`, which
/// has the same volume as `Ω_H`, with the trapezoid rule of `quad_order`
/// points per axis. Since `φ_k(H u) = e^{2πi m·u}` with `m` the offsets of
/// `k`, the rule is exact for trigonometric polynomials whose offsets are
/// smaller than `quad_order` in absolute value.
pub fn continuous_inner<F, G>(f: &F, g: &G, quad_order: usize) -> Result<Complex64>
where
    F: SampleFunction + ?Sized,
    G: SampleFunction + ?Sized,
{
    check_quad(quad_order)?;
    let terms = cell_points(quad_order)
        .par_iter()
        .map(|t| Ok(f.eval(t)? * g.eval(t)?.conj()))
        .collect::<Result<Vec<Complex64>>>()?;
    Ok(pairwise_sum(&terms) / (quad_order as f64).powi(3))
}

/// Fourier coefficients `f̂_k = ⟨f, φ_k⟩` for `k ∈ ℍ_n*`.
#[derive(Clone, Debug, PartialEq)]
pub struct FourierCoeffs {
    n: u32,
    coeffs: BTreeMap<HIndex, Complex64>,
}

impl FourierCoeffs {
    pub fn degree(&self) -> u32 {
        self.n
    }

    pub fn get(&self, k: &HIndex) -> Option<Complex64> {
        self.coeffs.get(k).copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&HIndex, &Complex64)> {
        self.coeffs.iter()
    }
}

/// Coefficients of `f` on `ℍ_n*` by the unit-cell trapezoid rule.
pub fn fourier_coeffs<F: SampleFunction + ?Sized>(f: &F, n: u32, quad_order: usize) -> Result<FourierCoeffs> {
    check_quad(quad_order)?;
    let points = cell_points(quad_order);
    let samples = points.par_iter().map(|t| f.eval(t)).collect::<Result<Vec<Complex64>>>()?;
    let norm = (quad_order as f64).powi(3);
    let coeffs = generate_hn_star(n)
        .into_par_iter()
        .map(|k| {
            let terms: Vec<Complex64> =
                points.iter().zip(&samples).map(|(t, v)| v * phi(&k, t).conj()).collect();
            (k, pairwise_sum(&terms) / norm)
        })
        .collect();
    Ok(FourierCoeffs { n, coeffs })
}

/// `S_n f(t) = Σ_{k∈ℍ_n*} f̂_k φ_k(t)`.
pub fn partial_sum(coeffs: &FourierCoeffs, t: &HomoPoint) -> Complex64 {
    let terms: Vec<Complex64> = coeffs.coeffs.iter().map(|(k, c)| c * phi(k, t)).collect();
    pairwise_sum(&terms)
}

/// Estimate of `‖S_n‖_∞ = max_t (1/2)∫_{Ω_H} |D_n(t - s)| ds`.
///
/// `t` runs over the `grid_per_axis³` grid of the unit cell, the integral is
/// the trapezoid rule with `quad_order` points per axis.
pub fn lebesgue_sn(n: u32, grid_per_axis: usize, quad_order: usize) -> Result<f64> {
    check_degree(n)?;
    check_quad(quad_order)?;
    if grid_per_axis == 0 {
        return Err(Error::InvalidQuadOrder(grid_per_axis));
    }
    let q = quad_order;
    let g = grid_per_axis;
    let t_grid: Vec<[f64; 3]> = (0..g * g * g)
        .map(|i| [(i / (g * g)) as f64 / g as f64, ((i / g) % g) as f64 / g as f64, (i % g) as f64 / g as f64])
        .collect();
    let m = i64::from(n);
    let values: Vec<f64> = t_grid
        .par_iter()
        .map(|u| {
            // With w = u - v the kernel argument is (w1, w2, w3, -w1-w2-w3);
            // tabulate the sine ratios per axis and per value of v1+v2+v3.
            let axis = |c: usize, deg: i64| -> Vec<f64> {
                (0..q).map(|v| sin_ratio(deg, u[c] - v as f64 / q as f64)).collect()
            };
            let last = |deg: i64| -> Vec<f64> {
                let su = u[0] + u[1] + u[2];
                (0..3 * q).map(|v| sin_ratio(deg, -su + v as f64 / q as f64)).collect()
            };
            let hi: [Vec<f64>; 3] = [axis(0, m + 1), axis(1, m + 1), axis(2, m + 1)];
            let lo: [Vec<f64>; 3] = [axis(0, m), axis(1, m), axis(2, m)];
            let hi4 = last(m + 1);
            let lo4 = last(m);
            let mut rows = Vec::with_capacity(q * q);
            for a in 0..q {
                for b in 0..q {
                    let mut row = 0.0;
                    for c in 0..q {
                        let s = a + b + c;
                        let d = hi[0][a] * hi[1][b] * hi[2][c] * hi4[s] - lo[0][a] * lo[1][b] * lo[2][c] * lo4[s];
                        row += d.abs();
                    }
                    rows.push(row);
                }
            }
            pairwise_sum(&rows) / (q as f64).powi(3)
        })
        .collect();
    Ok(values.into_iter().fold(0.0, f64::max))
}
