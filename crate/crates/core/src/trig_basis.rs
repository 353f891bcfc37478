//! Generalized cosines `TC_k = P⁺φ_k` and sines `TS_k = -P⁻φ_k`.
//!
//! Restricted to the tetrahedron `△_H` these depend only on the orbit of `k`,
//! so they are indexed by `k` with `k1 >= k2 >= k3 >= k4`. Sines vanish
//! identically unless the entries of `k` are distinct.

use std::f64::consts::{FRAC_PI_2, FRAC_PI_4};

use num_complex::Complex64;
use num_rational::Ratio;

use crate::error::{Error, Result};
use crate::lattice::{phi, HIndex, HomoPoint};
use crate::numeric::pairwise_sum;
use crate::symmetry::{act_point, orbit, ALL};

/// An index with non-increasing entries.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TetraIndex(HIndex);

impl TetraIndex {
    pub fn new(k: HIndex) -> Result<Self> {
        let c = k.components();
        if c[0] >= c[1] && c[1] >= c[2] && c[2] >= c[3] {
            Ok(TetraIndex(k))
        } else {
            Err(Error::UnorderedIndex(c))
        }
    }

    pub fn from_components(k: [i64; 4]) -> Result<Self> {
        TetraIndex::new(HIndex::new(k)?)
    }

    pub fn index(&self) -> HIndex {
        self.0
    }

    /// True when all four entries differ, so that `TS_k` is not identically zero.
    pub fn is_strict(&self) -> bool {
        let c = self.0.components();
        c[0] > c[1] && c[1] > c[2] && c[2] > c[3]
    }

    /// `|kG|`, the size of the orbit of `k`.
    pub fn orbit_size(&self) -> usize {
        let c = self.0.components();
        let eq = [c[0] == c[1], c[1] == c[2], c[2] == c[3]];
        match eq {
            [false, false, false] => 24,
            [true, false, false] | [false, true, false] | [false, false, true] => 12,
            [true, false, true] => 6,
            [true, true, false] | [false, true, true] => 4,
            _ => 1,
        }
    }
}

impl From<TetraIndex> for HIndex {
    fn from(k: TetraIndex) -> HIndex {
        k.0
    }
}

/// Product form of the orbit sums. Each pairing `{p,q}|{r,s}` of the
/// coordinates contributes `E trig(d12 Δpq) trig(d34 Δrs)` and its swap
/// `conj(E) trig(d12 Δrs) trig(d34 Δpq)`, with `E = e^{(πi/2)(k1+k2)(tp+tq)}`.
/// `trig` is `cos` for `TC` and `sin` for `TS`.
fn product_form(k: &HIndex, t: &HomoPoint, trig: fn(f64) -> f64) -> Complex64 {
    let k = k.components().map(|v| v as f64);
    let t = t.coords();
    let a = k[0] + k[1];
    let d12 = k[0] - k[1];
    let d34 = k[2] - k[3];
    let pairing = |p: usize, q: usize, r: usize, s: usize| {
        let e = Complex64::from_polar(1.0, FRAC_PI_2 * a * (t[p] + t[q]));
        let (u, v) = (t[p] - t[q], t[r] - t[s]);
        e * trig(FRAC_PI_4 * d12 * u) * trig(FRAC_PI_4 * d34 * v)
            + e.conj() * trig(FRAC_PI_4 * d12 * v) * trig(FRAC_PI_4 * d34 * u)
    };
    (pairing(0, 1, 2, 3) + pairing(0, 2, 3, 1) + pairing(0, 3, 1, 2)) / 6.0
}

/// `TC_k(t)` by the product formula.
pub fn tc(k: &TetraIndex, t: &HomoPoint) -> Complex64 {
    product_form(&k.0, t, f64::cos)
}

/// `TS_k(t)` by the product formula; an error when two entries of
/// `k` coincide.
pub fn ts(k: &TetraIndex, t: &HomoPoint) -> Result<Complex64> {
    if !k.is_strict() {
        return Err(Error::DegenerateSine(k.0.components()));
    }
    Ok(product_form(&k.0, t, f64::sin))
}

/// `TC_k(t) = (1/|kG|) Σ_{j∈kG} φ_j(t)`.
pub fn tc_reference(k: &TetraIndex, t: &HomoPoint) -> Complex64 {
    let terms: Vec<Complex64> = orbit(&k.0).iter().map(|j| phi(j, t)).collect();
    pairwise_sum(&terms) / terms.len() as f64
}

/// `TS_k(t) = -(1/24) Σ_σ sgn(σ) φ_k(tσ)`.
pub fn ts_reference(k: &TetraIndex, t: &HomoPoint) -> Result<Complex64> {
    if !k.is_strict() {
        return Err(Error::DegenerateSine(k.0.components()));
    }
    let terms: Vec<Complex64> =
        ALL.iter().map(|s| phi(&k.0, &act_point(s, t)) * f64::from(s.parity())).collect();
    Ok(-pairwise_sum(&terms) / 24.0)
}

/// `⟨TC_k, TC_k⟩_{△_H} = 1/|kG|`.
pub fn tc_orthogonality_value(k: &TetraIndex) -> Ratio<i64> {
    Ratio::new(1, k.orbit_size() as i64)
}
