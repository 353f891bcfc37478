//! The four interpolation operators and their Lebesgue constants.
//!
//! | kind     | nodes  | fundamental function at node `j`                 |
//! |----------|--------|--------------------------------------------------|
//! | `In`     | `ℍ_n`  | `Φ_n(t - j/4n)`                                  |
//! | `InStar` | `ℍ_n*` | `Φ_n*(t - j/4n)`                                 |
//! | `Ln`     | `Λ_n°` | `(6/n³) P⁻_t [Θ_n - Θ_{n-1}](t - j/4n)`          |
//! | `LnStar` | `Λ_n`  | `λ_j P⁺_t Φ_n*(t - j/4n)`                        |
//!
//! An [`Interpolant`] keeps the node values and evaluates the kernel sum
//! directly. `In`, `Ln` and `LnStar` reproduce the sampled values at their
//! nodes. `InStar` returns, at a boundary node, the sum of the values over
//! the class of congruent boundary nodes.

use std::collections::HashSet;
use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::index_sets::{generate_hn, generate_hn_star, generate_lambda_n, generate_lambda_n_circ, NodeSet};
use crate::kernels::{phi_n_reference, phi_n_star_reference, phi_star_unscaled, scale, theta_step, CoordFactors, PhiKernel};
use crate::lattice::{in_closed_omega_h, phi, to_homogeneous, HIndex, HomoPoint, Point3};
use crate::numeric::pairwise_sum;
use crate::symmetry::ALL;
use crate::tetra_coords::regular_to_homo;
use crate::transforms::SampleFunction;
use crate::trig_basis::{tc, ts, TetraIndex};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum InterpKind {
    /// Dodecahedral interpolation on the half-open nodes `ℍ_n`.
    In,
    /// Symmetric dodecahedral interpolation on `ℍ_n*`.
    InStar,
    /// Tetrahedral sine interpolation on `Λ_n°`.
    Ln,
    /// Tetrahedral cosine interpolation on `Λ_n`.
    LnStar,
}

impl InterpKind {
    pub const ALL: [InterpKind; 4] = [InterpKind::In, InterpKind::InStar, InterpKind::Ln, InterpKind::LnStar];

    pub fn node_set(&self) -> NodeSet {
        match self {
            InterpKind::In => NodeSet::Hn,
            InterpKind::InStar => NodeSet::HnStar,
            InterpKind::Ln => NodeSet::LambdaCirc,
            InterpKind::LnStar => NodeSet::Lambda,
        }
    }

    /// Smallest degree with a nonempty node set; `Λ_n°` has `C(n-1, 3)` points.
    pub fn min_degree(&self) -> u32 {
        match self {
            InterpKind::Ln => 4,
            _ => 1,
        }
    }

    /// Whether the operator lives on the tetrahedron rather than the dodecahedron.
    pub fn is_tetrahedral(&self) -> bool {
        matches!(self, InterpKind::Ln | InterpKind::LnStar)
    }

    pub fn name(&self) -> &'static str {
        match self {
            InterpKind::In => "in",
            InterpKind::InStar => "instar",
            InterpKind::Ln => "ln",
            InterpKind::LnStar => "lnstar",
        }
    }

    pub fn nodes(&self, n: u32) -> Vec<HIndex> {
        match self {
            InterpKind::In => generate_hn(n),
            InterpKind::InStar => generate_hn_star(n),
            InterpKind::Ln => generate_lambda_n_circ(n),
            InterpKind::LnStar => generate_lambda_n(n).into_iter().map(|(k, _)| k).collect(),
        }
    }

    fn check_degree(&self, n: u32) -> Result<()> {
        if n < self.min_degree() {
            Err(Error::InvalidDegree { n, min: self.min_degree() })
        } else {
            Ok(())
        }
    }
}

impl fmt::Display for InterpKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for InterpKind {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        InterpKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| format!("unknown interpolation kind `{s}` (expected in, instar, ln or lnstar)"))
    }
}

/// Closed-form kernel factors of `t_c - j/4n` for every coordinate `c` and
/// every integer `-3n <= j <= 3n`, which covers all node components.
struct ShiftTable {
    n: i64,
    rows: [Vec<CoordFactors>; 4],
}

impl ShiftTable {
    fn new(n: u32, t: &HomoPoint) -> Self {
        let c = t.coords();
        let m = i64::from(n);
        let s = 4.0 * f64::from(n);
        let rows = std::array::from_fn(|i| (-3 * m..=3 * m).map(|j| CoordFactors::new(n, c[i] - j as f64 / s)).collect());
        ShiftTable { n: m, rows }
    }

    /// Factors of `(tσ - j/4n)_c = t_{σ(c)} - j_c/4n`.
    #[inline]
    fn factors(&self, images: [u8; 4], j: &[i64; 4]) -> [&CoordFactors; 4] {
        std::array::from_fn(|c| &self.rows[images[c] as usize][(j[c] + 3 * self.n) as usize])
    }
}

const IDENTITY: [u8; 4] = [0, 1, 2, 3];

/// `e^{-iπ r/8n}` for `r` modulo `16n`.
fn roots_of_unity(n: u32) -> Vec<Complex64> {
    let m = 16 * n as usize;
    (0..m).map(|r| Complex64::from_polar(1.0, -2.0 * PI * r as f64 / m as f64)).collect()
}

/// `e^{-(πi/2) k·j/4n}`, looked up in the table of [`roots_of_unity`].
#[inline]
fn node_phase(roots: &[Complex64], k: &HIndex, j: &HIndex) -> Complex64 {
    let kc = k.components();
    let jc = j.components();
    let dot: i64 = (0..4).map(|i| kc[i] * jc[i]).sum();
    roots[dot.rem_euclid(roots.len() as i64) as usize]
}

/// Evaluates all fundamental functions of one kind at one point.
struct FundamentalEvaluator<'a> {
    kind: InterpKind,
    n: u32,
    phi_kernel: Option<&'a PhiKernel>,
    roots: Option<&'a [Complex64]>,
}

impl FundamentalEvaluator<'_> {
    /// `fundamental_j(t)` for every `j` in `nodes`.
    fn values(&self, t: &HomoPoint, nodes: &[HIndex]) -> Vec<Complex64> {
        let table = ShiftTable::new(self.n, t);
        let s = scale(self.n);
        match self.kind {
            InterpKind::InStar => nodes
                .iter()
                .map(|j| Complex64::new(phi_star_unscaled(table.factors(IDENTITY, &j.components())) / s, 0.0))
                .collect(),
            InterpKind::In => {
                let kernel = self.phi_kernel.expect("Φ_n kernel for In");
                let roots = self.roots.expect("roots of unity for In");
                let at_t: Vec<(Complex64, &HIndex)> =
                    kernel.corrections().iter().map(|(k, w)| (phi(k, t) * *w, k)).collect();
                nodes
                    .iter()
                    .map(|j| {
                        let star = phi_star_unscaled(table.factors(IDENTITY, &j.components()));
                        let terms: Vec<Complex64> = at_t.iter().map(|(a, k)| a * node_phase(roots, k, j)).collect();
                        (Complex64::new(star, 0.0) + pairwise_sum(&terms)) / s
                    })
                    .collect()
            }
            InterpKind::LnStar => nodes
                .iter()
                .map(|j| {
                    let c = j.components();
                    let lambda = f64::from(crate::index_sets::weight_lambda(j, self.n).expect("node of Λ_n"));
                    let sum: f64 = ALL.iter().map(|p| phi_star_unscaled(table.factors(p.images(), &c))).sum();
                    Complex64::new(lambda * sum / (24.0 * s), 0.0)
                })
                .collect(),
            InterpKind::Ln => {
                let coef = 6.0 / f64::from(self.n).powi(3) / 24.0;
                nodes
                    .iter()
                    .map(|j| {
                        let c = j.components();
                        let sum: f64 = ALL
                            .iter()
                            .map(|p| f64::from(p.parity()) * theta_step(table.factors(p.images(), &c)))
                            .sum();
                        Complex64::new(coef * sum, 0.0)
                    })
                    .collect()
            }
        }
    }
}

/// A fundamental interpolation function by its closed form.
pub fn fundamental(kind: InterpKind, n: u32, j: &HIndex, t: &HomoPoint) -> Result<Complex64> {
    kind.check_degree(n)?;
    if !kind.node_set().contains(j, n) {
        return Err(Error::IndexNotInSet { index: j.components(), set: kind.node_set().name(), n });
    }
    let kernel = (kind == InterpKind::In).then(|| PhiKernel::new(n));
    let roots = roots_of_unity(n);
    let eval = FundamentalEvaluator { kind, n, phi_kernel: kernel.as_ref(), roots: Some(&roots) };
    Ok(eval.values(t, std::slice::from_ref(j))[0])
}

/// A fundamental interpolation function by direct summation over its
/// frequency set: `ℍ_n` for `In`, `ℍ_n*` with weights `c` for `InStar`,
/// `(144/n³) Σ_{k∈Λ_n°} TS_k(t) conj(TS_k(j/4n))` for `Ln` and
/// `(λ_j/4n³) Σ_{k∈Λ_n} λ_k TC_k(t) conj(TC_k(j/4n))` for `LnStar`.
pub fn fundamental_reference(kind: InterpKind, n: u32, j: &HIndex, t: &HomoPoint) -> Result<Complex64> {
    kind.check_degree(n)?;
    if !kind.node_set().contains(j, n) {
        return Err(Error::IndexNotInSet { index: j.components(), set: kind.node_set().name(), n });
    }
    let node = HomoPoint::from_index(j, n);
    Ok(match kind {
        InterpKind::In => phi_n_reference(n, &(*t - node)),
        InterpKind::InStar => phi_n_star_reference(n, &(*t - node)),
        InterpKind::Ln => {
            let terms = generate_lambda_n_circ(n)
                .into_iter()
                .map(|k| {
                    let k = TetraIndex::new(k)?;
                    Ok(ts(&k, t)? * ts(&k, &node)?.conj())
                })
                .collect::<Result<Vec<Complex64>>>()?;
            pairwise_sum(&terms) * 144.0 / f64::from(n).powi(3)
        }
        InterpKind::LnStar => {
            let lambda_j = f64::from(crate::index_sets::weight_lambda(j, n)?);
            let terms: Vec<Complex64> = generate_lambda_n(n)
                .into_iter()
                .map(|(k, st)| {
                    let k = TetraIndex::new(k).expect("Λ_n is ordered");
                    tc(&k, t) * tc(&k, &node).conj() * f64::from(st.weight())
                })
                .collect();
            pairwise_sum(&terms) * lambda_j / scale(n)
        }
    })
}

/// An interpolation operator applied to node values.
#[derive(Clone, Debug)]
pub struct Interpolant {
    kind: InterpKind,
    n: u32,
    nodes: Vec<HIndex>,
    values: Vec<Complex64>,
    /// For `In`: boundary frequencies of `ℍ_n*` with `w_k Σ_j f_j e^{-(πi/2) k·j/4n}`.
    boundary: Vec<(HIndex, Complex64)>,
}

impl Interpolant {
    /// Samples `f` at the nodes of `kind`.
    pub fn from_fn<F: SampleFunction + ?Sized>(kind: InterpKind, f: &F, n: u32) -> Result<Self> {
        kind.check_degree(n)?;
        let nodes = kind.nodes(n);
        let values = nodes
            .par_iter()
            .map(|j| f.eval(&HomoPoint::from_index(j, n)))
            .collect::<Result<Vec<Complex64>>>()?;
        Ok(Self::build(kind, n, nodes, values))
    }

    /// Uses given node values; the keys must be exactly the node set of `kind`.
    pub fn from_values(
        kind: InterpKind,
        n: u32,
        values: impl IntoIterator<Item = (HIndex, Complex64)>,
    ) -> Result<Self> {
        kind.check_degree(n)?;
        let nodes = kind.nodes(n);
        let given: Vec<(HIndex, Complex64)> = values.into_iter().collect();
        let mismatch = || Error::NodeSetMismatch {
            set: kind.node_set().name(),
            n,
            expected: nodes.len(),
            got: given.len(),
        };
        let keys: HashSet<HIndex> = given.iter().map(|(k, _)| *k).collect();
        if keys.len() != given.len() || given.len() != nodes.len() || !nodes.iter().all(|k| keys.contains(k)) {
            return Err(mismatch());
        }
        let lookup: std::collections::HashMap<HIndex, Complex64> = given.into_iter().collect();
        let values = nodes.iter().map(|k| lookup[k]).collect();
        Ok(Self::build(kind, n, nodes, values))
    }

    fn build(kind: InterpKind, n: u32, nodes: Vec<HIndex>, values: Vec<Complex64>) -> Self {
        let boundary = if kind == InterpKind::In {
            let roots = roots_of_unity(n);
            PhiKernel::new(n)
                .corrections()
                .par_iter()
                .map(|(k, w)| {
                    let terms: Vec<Complex64> =
                        nodes.iter().zip(&values).map(|(j, v)| v * node_phase(&roots, k, j)).collect();
                    (*k, pairwise_sum(&terms) * *w)
                })
                .collect()
        } else {
            Vec::new()
        };
        Interpolant { kind, n, nodes, values, boundary }
    }

    pub fn kind(&self) -> InterpKind {
        self.kind
    }

    pub fn degree(&self) -> u32 {
        self.n
    }

    /// Nodes with their values, in node-set order.
    pub fn node_values(&self) -> impl Iterator<Item = (&HIndex, &Complex64)> {
        self.nodes.iter().zip(&self.values)
    }

    pub fn eval(&self, t: &HomoPoint) -> Complex64 {
        let table = ShiftTable::new(self.n, t);
        let s = scale(self.n);
        let terms: Vec<Complex64> = match self.kind {
            InterpKind::In | InterpKind::InStar => self
                .nodes
                .iter()
                .zip(&self.values)
                .map(|(j, v)| v * (phi_star_unscaled(table.factors(IDENTITY, &j.components())) / s))
                .collect(),
            _ => {
                let eval = FundamentalEvaluator { kind: self.kind, n: self.n, phi_kernel: None, roots: None };
                let fundamentals = eval.values(t, &self.nodes);
                fundamentals.iter().zip(&self.values).map(|(l, v)| l * v).collect()
            }
        };
        let mut total = pairwise_sum(&terms);
        if !self.boundary.is_empty() {
            let corr: Vec<Complex64> = self.boundary.iter().map(|(k, g)| g * phi(k, t)).collect();
            total += pairwise_sum(&corr) / s;
        }
        total
    }

    /// Evaluates at many points in parallel, preserving order.
    pub fn eval_many(&self, points: &[HomoPoint]) -> Vec<Complex64> {
        points.par_iter().map(|t| self.eval(t)).collect()
    }
}

/// Sampling grid for the Lebesgue scan of `kind`.
///
/// For the dodecahedral operators: the `g³` Cartesian grid of `[-1,1]³`
/// restricted to the closed dodecahedron. For the tetrahedral ones: the
/// points `(a, b, c)/(g-1)` of `0 <= x3 <= x2 <= x1 <= 1`.
pub fn lebesgue_grid(kind: InterpKind, grid_per_axis: usize) -> Vec<HomoPoint> {
    let g = grid_per_axis.max(2);
    let step = 1.0 / (g - 1) as f64;
    let mut out = Vec::new();
    if kind.is_tetrahedral() {
        for a in 0..g {
            for b in 0..=a {
                for c in 0..=b {
                    let x = Point3::new(a as f64 * step, b as f64 * step, c as f64 * step);
                    out.push(regular_to_homo(&x));
                }
            }
        }
    } else {
        for a in 0..g {
            for b in 0..g {
                for c in 0..g {
                    let x = Point3::new(2.0 * a as f64 * step - 1.0, 2.0 * b as f64 * step - 1.0, 2.0 * c as f64 * step - 1.0);
                    let t = to_homogeneous(x);
                    if in_closed_omega_h(&t) {
                        out.push(t);
                    }
                }
            }
        }
    }
    out
}

/// `Σ_j |fundamental_j(t)|` over the nodes of `kind`.
pub fn lebesgue_function(kind: InterpKind, n: u32, t: &HomoPoint) -> Result<f64> {
    Ok(lebesgue_scan(kind, n, std::slice::from_ref(t))?[0])
}

fn lebesgue_scan(kind: InterpKind, n: u32, points: &[HomoPoint]) -> Result<Vec<f64>> {
    kind.check_degree(n)?;
    let nodes = kind.nodes(n);
    let kernel = (kind == InterpKind::In).then(|| PhiKernel::new(n));
    let roots = roots_of_unity(n);
    let eval = FundamentalEvaluator { kind, n, phi_kernel: kernel.as_ref(), roots: Some(&roots) };
    Ok(points
        .par_iter()
        .map(|t| {
            let abs: Vec<f64> = eval.values(t, &nodes).iter().map(|v| v.norm()).collect();
            pairwise_sum(&abs)
        })
        .collect())
}

/// Lower estimate of the operator norm of `kind`: the maximum of the
/// Lebesgue function over [`lebesgue_grid`].
pub fn lebesgue_interp(n: u32, kind: InterpKind, grid_per_axis: usize) -> Result<f64> {
    let grid = lebesgue_grid(kind, grid_per_axis);
    Ok(lebesgue_scan(kind, n, &grid)?.into_iter().fold(0.0, f64::max))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::boundary::congruent_orbit_index;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn tetra_point(rng: &mut ChaCha8Rng) -> HomoPoint {
        let mut x: [f64; 3] = std::array::from_fn(|_| rng.gen_range(0.0..1.0));
        x.sort_unstable_by(|a, b| b.partial_cmp(a).unwrap());
        regular_to_homo(&Point3::new(x[0], x[1], x[2]))
    }

    fn random_point(rng: &mut ChaCha8Rng) -> HomoPoint {
        HomoPoint::new(std::array::from_fn(|_| rng.gen_range(-1.0..1.0)))
    }

    fn probe(t: &HomoPoint) -> Complex64 {
        let c = t.coords();
        Complex64::new((c[0] - 0.3 * c[1]).cos() + c[2] * c[3], c[0] * c[0])
    }

    #[test]
    fn kind_parsing() {
        for k in InterpKind::ALL {
            assert_eq!(k.name().parse::<InterpKind>().unwrap(), k);
        }
        assert!("xx".parse::<InterpKind>().is_err());
    }

    #[test]
    fn closed_forms_match_references() {
        let mut rng = ChaCha8Rng::seed_from_u64(50);
        for n in 2..=5 {
            for kind in InterpKind::ALL.into_iter().filter(|k| n >= k.min_degree()) {
                let nodes = kind.nodes(n);
                for _ in 0..10 {
                    let j = nodes[rng.gen_range(0..nodes.len())];
                    let t = if kind.is_tetrahedral() { tetra_point(&mut rng) } else { random_point(&mut rng) };
                    let a = fundamental(kind, n, &j, &t).unwrap();
                    let b = fundamental_reference(kind, n, &j, &t).unwrap();
                    assert!((a - b).norm() < 1e-9, "{kind} n={n} j={j}: {a} vs {b}");
                }
            }
        }
    }

    #[test]
    fn interpolation_conditions() {
        for n in 2..=5 {
            for kind in [InterpKind::In, InterpKind::Ln, InterpKind::LnStar].into_iter().filter(|k| n >= k.min_degree()) {
                let interp = Interpolant::from_fn(kind, &probe, n).unwrap();
                for (j, v) in interp.node_values() {
                    let got = interp.eval(&HomoPoint::from_index(j, n));
                    assert!((got - v).norm() < 1e-9, "{kind} n={n} j={j}");
                }
            }
            if n > 3 {
                continue;
            }
            let interp = Interpolant::from_fn(InterpKind::InStar, &probe, n).unwrap();
            for j in generate_hn_star(n) {
                let expected: Complex64 = congruent_orbit_index(&j, n)
                    .unwrap()
                    .iter()
                    .map(|k| probe(&HomoPoint::from_index(k, n)))
                    .sum();
                let got = interp.eval(&HomoPoint::from_index(&j, n));
                assert!((got - expected).norm() < 1e-9, "n={n} j={j}");
            }
        }
    }

    #[test]
    fn node_value_validation() {
        let n = 2;
        let good: Vec<(HIndex, Complex64)> = generate_hn(n).into_iter().map(|k| (k, Complex64::new(1.0, 0.0))).collect();
        assert!(Interpolant::from_values(InterpKind::In, n, good.clone()).is_ok());
        let err = Interpolant::from_values(InterpKind::In, n, good[1..].to_vec()).unwrap_err();
        assert_eq!(err, Error::NodeSetMismatch { set: "H", n, expected: 32, got: 31 });
        assert!(Interpolant::from_values(InterpKind::InStar, n, good).is_err());
        assert_eq!(
            Interpolant::from_fn(InterpKind::Ln, &probe, 3).unwrap_err(),
            Error::InvalidDegree { n: 3, min: 4 }
        );
    }

    #[test]
    fn lebesgue_at_least_one() {
        for kind in InterpKind::ALL {
            let v = lebesgue_interp(kind.min_degree().max(2), kind, 5).unwrap();
            assert!(v >= 1.0 - 1e-12, "{kind}: {v}");
        }
    }
}
