//! The symmetric group `S4` acting on homogeneous coordinates.
//!
//! A permutation acts on the right by `(tσ)_i = t_{σ(i)}`, and products are
//! composed so that `(tσ)τ = t(στ)`.

use std::sync::OnceLock;

use num_complex::Complex64;

use crate::error::Result;
use crate::lattice::{HIndex, HomoPoint};
use crate::transforms::SampleFunction;

/// A permutation of `{0, 1, 2, 3}` (coordinates are zero-based here).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm4 {
    images: [u8; 4],
}

/// All 24 permutations in lexicographic order of their image arrays.
pub const ALL: [Perm4; 24] = {
    let mut out = [Perm4 { images: [0; 4] }; 24];
    let mut idx = 0;
    let mut a = 0;
    while a < 4 {
        let mut b = 0;
        while b < 4 {
            let mut c = 0;
            while c < 4 {
                if a != b && b != c && a != c {
                    let d = 6 - a - b - c;
                    out[idx] = Perm4 { images: [a, b, c, d] };
                    idx += 1;
                }
                c += 1;
            }
            b += 1;
        }
        a += 1;
    }
    out
};

impl Perm4 {
    pub const IDENTITY: Perm4 = Perm4 { images: [0, 1, 2, 3] };

    /// Builds a permutation from zero-based images; `None` unless they are
    /// a rearrangement of `0..4`.
    pub fn from_images(images: [u8; 4]) -> Option<Self> {
        let mut seen = [false; 4];
        for &v in &images {
            if v > 3 || seen[v as usize] {
                return None;
            }
            seen[v as usize] = true;
        }
        Some(Perm4 { images })
    }

    /// The transposition of coordinates `i` and `j` (zero-based).
    pub fn transposition(i: usize, j: usize) -> Self {
        assert!(i < 4 && j < 4 && i != j, "transposition needs two distinct coordinates");
        let mut images = [0, 1, 2, 3];
        images.swap(i, j);
        Perm4 { images }
    }

    #[inline]
    pub fn images(&self) -> [u8; 4] {
        self.images
    }

    #[inline]
    pub fn image(&self, i: usize) -> usize {
        self.images[i] as usize
    }

    pub fn inversions(&self) -> u32 {
        let p = self.images;
        let mut count = 0;
        for i in 0..4 {
            for j in (i + 1)..4 {
                if p[i] > p[j] {
                    count += 1;
                }
            }
        }
        count
    }

    /// `+1` on the even permutations, `-1` on the odd ones.
    pub fn parity(&self) -> i32 {
        if self.inversions().is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    pub fn is_even(&self) -> bool {
        self.parity() == 1
    }

    /// Position of this permutation in [`ALL`].
    pub fn rank(&self) -> usize {
        let p = self.images;
        const FACT: [usize; 4] = [6, 2, 1, 1];
        (0..4)
            .map(|i| (i + 1..4).filter(|&j| p[j] < p[i]).count() * FACT[i])
            .sum()
    }

    /// The product `στ` with `(στ)(i) = σ(τ(i))`.
    pub fn compose(&self, tau: &Perm4) -> Perm4 {
        ALL[composition_table()[self.rank()][tau.rank()] as usize]
    }

    pub fn inverse(&self) -> Perm4 {
        let mut images = [0u8; 4];
        for (i, &v) in self.images.iter().enumerate() {
            images[v as usize] = i as u8;
        }
        Perm4 { images }
    }
}

fn composition_table() -> &'static [[u8; 24]; 24] {
    static TABLE: OnceLock<[[u8; 24]; 24]> = OnceLock::new();
    TABLE.get_or_init(|| {
        let mut table = [[0u8; 24]; 24];
        for (a, s) in ALL.iter().enumerate() {
            for (b, t) in ALL.iter().enumerate() {
                let images = std::array::from_fn(|i| s.images[t.images[i] as usize]);
                let prod = Perm4 { images };
                table[a][b] = prod.rank() as u8;
            }
        }
        table
    })
}

/// The even permutations.
pub fn even() -> impl Iterator<Item = &'static Perm4> {
    ALL.iter().filter(|p| p.is_even())
}

/// The odd permutations.
pub fn odd() -> impl Iterator<Item = &'static Perm4> {
    ALL.iter().filter(|p| !p.is_even())
}

#[inline]
pub fn act_point(sigma: &Perm4, t: &HomoPoint) -> HomoPoint {
    let c = t.coords();
    HomoPoint::new(std::array::from_fn(|i| c[sigma.image(i)]))
}

#[inline]
pub fn act_index(sigma: &Perm4, k: &HIndex) -> HIndex {
    let c = k.components();
    HIndex::new(std::array::from_fn(|i| c[sigma.image(i)])).expect("permutation preserves ℍ")
}

#[inline]
pub fn act_array<T: Copy>(sigma: &Perm4, v: [T; 4]) -> [T; 4] {
    std::array::from_fn(|i| v[sigma.image(i)])
}

/// The distinct images `kσ`, sorted.
pub fn orbit(k: &HIndex) -> Vec<HIndex> {
    let mut out: Vec<HIndex> = ALL.iter().map(|s| act_index(s, k)).collect();
    out.sort_unstable();
    out.dedup();
    out
}

/// Permutations fixing `k`.
pub fn stabilizer(k: &HIndex) -> Vec<Perm4> {
    ALL.iter().filter(|s| act_index(s, k) == *k).copied().collect()
}

fn project<F: SampleFunction + ?Sized>(f: &F, t: &HomoPoint, sign: f64) -> Result<Complex64> {
    let mut plus = Complex64::new(0.0, 0.0);
    let mut minus = Complex64::new(0.0, 0.0);
    for s in ALL.iter() {
        let v = f.eval(&act_point(s, t))?;
        if s.is_even() {
            plus += v;
        } else {
            minus += v;
        }
    }
    Ok((plus + sign * minus) / 24.0)
}

/// `P⁺f(t)`, the average of `f` over the orbit of `t`.
pub fn project_plus<F: SampleFunction + ?Sized>(f: &F, t: &HomoPoint) -> Result<Complex64> {
    project(f, t, 1.0)
}

/// `P⁻f(t)`, the signed average of `f` over the orbit of `t`.
pub fn project_minus<F: SampleFunction + ?Sized>(f: &F, t: &HomoPoint) -> Result<Complex64> {
    project(f, t, -1.0)
}
