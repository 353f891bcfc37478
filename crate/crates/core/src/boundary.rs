//! Boundary strata of the closed dodecahedron.
//!
//! A point of `Ω̄_H` lies on the stratum `B_{I,J}` where
//! `I = {i : t_i - t_j = 1 for some j}` and `J = {j : t_i - t_j = 1 for some i}`.
//! Points on the same stratum that differ by a lattice vector form a
//! congruence class of size `C(|I|+|J|, |I|)`.

use std::fmt;

use crate::error::{Error, Result};
use crate::index_sets::in_hn_star;
use crate::lattice::{in_closed_omega_h, HIndex, HomoPoint};
use crate::symmetry::{act_index, act_point, Perm4, ALL};

/// Tolerance for `t_i - t_j = 1` on floating-point inputs.
pub const BOUNDARY_TOL: f64 = 1e-9;

/// The pair `(I, J)` as bitmasks over coordinates `0..4`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub struct BoundaryClass {
    i: u8,
    j: u8,
}

impl BoundaryClass {
    pub const INTERIOR: BoundaryClass = BoundaryClass { i: 0, j: 0 };

    fn from_relation(rel: impl Fn(usize, usize) -> bool) -> Self {
        let mut class = BoundaryClass::INTERIOR;
        for a in 0..4 {
            for b in 0..4 {
                if a != b && rel(a, b) {
                    class.i |= 1 << a;
                    class.j |= 1 << b;
                }
            }
        }
        class
    }

    /// Zero-based coordinates in `I`.
    pub fn i_set(&self) -> Vec<usize> {
        (0..4).filter(|a| self.i & (1 << a) != 0).collect()
    }

    /// Zero-based coordinates in `J`.
    pub fn j_set(&self) -> Vec<usize> {
        (0..4).filter(|a| self.j & (1 << a) != 0).collect()
    }

    pub fn i_mask(&self) -> u8 {
        self.i
    }

    pub fn j_mask(&self) -> u8 {
        self.j
    }

    pub fn is_interior(&self) -> bool {
        self.i == 0 && self.j == 0
    }

    /// `(|I|, |J|)`.
    pub fn sizes(&self) -> (u32, u32) {
        (self.i.count_ones(), self.j.count_ones())
    }

    /// `C(|I|+|J|, |I|)`, the number of congruent points on the stratum.
    pub fn class_size(&self) -> usize {
        let (a, b) = self.sizes();
        binomial(a + b, a)
    }
}

impl fmt::Display for BoundaryClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let show = |s: Vec<usize>| {
            s.iter().map(|v| (v + 1).to_string()).collect::<Vec<_>>().join(",")
        };
        write!(f, "I={{{}}} J={{{}}}", show(self.i_set()), show(self.j_set()))
    }
}

fn binomial(n: u32, k: u32) -> usize {
    (0..k).fold(1usize, |acc, r| acc * (n - r) as usize / (r + 1) as usize)
}

/// Classifies a point of `Ω̄_H`, testing `t_i - t_j = 1` to within
/// [`BOUNDARY_TOL`].
pub fn classify(t: &HomoPoint) -> Result<BoundaryClass> {
    if !in_closed_omega_h(t) {
        return Err(Error::OutsideDomain(t.coords()));
    }
    let c = t.coords();
    Ok(BoundaryClass::from_relation(|a, b| (c[a] - c[b] - 1.0).abs() <= BOUNDARY_TOL))
}

/// Classifies the node `k / 4n` exactly, testing `k_i - k_j = 4n`.
pub fn classify_index(k: &HIndex, n: u32) -> Result<BoundaryClass> {
    if !in_hn_star(k, n) {
        return Err(Error::IndexNotInSet { index: k.components(), set: "H*", n });
    }
    let c = k.components();
    let m = 4 * i64::from(n);
    Ok(BoundaryClass::from_relation(|a, b| c[a] - c[b] == m))
}

/// Permutations that move only the coordinates in `I ∪ J`.
fn moving_group(class: &BoundaryClass) -> impl Iterator<Item = &'static Perm4> {
    let support = class.i | class.j;
    ALL.iter()
        .filter(move |s| (0..4).all(|a| support & (1 << a) != 0 || s.image(a) == a))
}

/// All points of `Ω̄_H` congruent to `t` modulo the lattice.
///
/// The result starts with `t` itself.
pub fn congruent_orbit(t: &HomoPoint) -> Result<Vec<HomoPoint>> {
    let class = classify(t)?;
    let mut out = vec![*t];
    for s in moving_group(&class) {
        let p = act_point(s, t);
        if out.iter().all(|q| q.max_abs_diff(&p) > 1e-10) {
            out.push(p);
        }
    }
    Ok(out)
}

/// The congruence class of the node `k / 4n` as indices in `ℍ_n*`.
///
/// The result starts with `k` itself.
pub fn congruent_orbit_index(k: &HIndex, n: u32) -> Result<Vec<HIndex>> {
    let class = classify_index(k, n)?;
    let mut out = vec![*k];
    for s in moving_group(&class) {
        let p = act_index(s, k);
        if !out.contains(&p) {
            out.push(p);
        }
    }
    Ok(out)
}
