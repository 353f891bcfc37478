//! Index and node sets with their strata and cubature weights.
//!
//! Every set is enumerated through the offsets `m_i = (k_i - k_4)/4`, so
//! generation is exact integer arithmetic with no duplicates:
//!
//! | set    | condition on `k`                         | size              |
//! |--------|------------------------------------------|-------------------|
//! | `ℍ_n`  | `-4n < k_i - k_j <= 4n` for `i < j`      | `4n³`             |
//! | `ℍ_n*` | `|k_i - k_j| <= 4n`                      | `(n+1)⁴ - n⁴`     |
//! | `ℍ_n°` | `|k_i - k_j| < 4n`                       | `n⁴ - (n-1)⁴`     |
//! | `Λ_n`  | `k_4 <= k_3 <= k_2 <= k_1 <= k_4 + 4n`   | `C(n+3, 3)`       |

use std::fmt;

use num_rational::Ratio;

use crate::boundary::classify_index;
use crate::error::{Error, Result};
use crate::lattice::HIndex;

/// Which of the node sets an index belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum NodeSet {
    /// `ℍ_n`, the half-open set.
    Hn,
    /// `ℍ_n*`, the closed set.
    HnStar,
    /// `ℍ_n°`, the interior.
    HnCirc,
    /// `Λ_n`, the tetrahedral set.
    Lambda,
    /// `Λ_n°`, the interior of the tetrahedral set.
    LambdaCirc,
}

impl NodeSet {
    pub fn name(&self) -> &'static str {
        match self {
            NodeSet::Hn => "H",
            NodeSet::HnStar => "H*",
            NodeSet::HnCirc => "H°",
            NodeSet::Lambda => "Λ",
            NodeSet::LambdaCirc => "Λ°",
        }
    }

    pub fn generate(&self, n: u32) -> Vec<HIndex> {
        match self {
            NodeSet::Hn => generate_hn(n),
            NodeSet::HnStar => generate_hn_star(n),
            NodeSet::HnCirc => generate_hn_circ(n),
            NodeSet::Lambda => generate_lambda_n(n).into_iter().map(|(k, _)| k).collect(),
            NodeSet::LambdaCirc => generate_lambda_n_circ(n),
        }
    }

    pub fn contains(&self, k: &HIndex, n: u32) -> bool {
        match self {
            NodeSet::Hn => in_hn(k, n),
            NodeSet::HnStar => in_hn_star(k, n),
            NodeSet::HnCirc => in_hn_circ(k, n),
            NodeSet::Lambda => in_lambda_n(k, n),
            NodeSet::LambdaCirc => in_lambda_n(k, n) && is_strictly_decreasing(k) && k.spread() < 4 * i64::from(n),
        }
    }
}

fn offsets_where(n: u32, keep: impl Fn([i64; 3]) -> bool) -> Vec<HIndex> {
    let n = i64::from(n);
    let mut out = Vec::new();
    for m1 in -n..=n {
        for m2 in -n..=n {
            for m3 in -n..=n {
                let m = [m1, m2, m3];
                if keep(m) {
                    out.push(HIndex::from_offsets(m));
                }
            }
        }
    }
    out
}

/// Pairwise differences `(k_i - k_j)/4` for `i < j`, in the order
/// `(1,2), (1,3), (1,4), (2,3), (2,4), (3,4)`.
fn scaled_differences(m: [i64; 3]) -> [i64; 6] {
    [m[0] - m[1], m[0] - m[2], m[0], m[1] - m[2], m[1], m[2]]
}

fn half_open(m: [i64; 3], n: i64) -> bool {
    scaled_differences(m).iter().all(|&d| -n < d && d <= n)
}

fn closed(m: [i64; 3], n: i64) -> bool {
    scaled_differences(m).iter().all(|&d| d.abs() <= n)
}

fn open(m: [i64; 3], n: i64) -> bool {
    scaled_differences(m).iter().all(|&d| d.abs() < n)
}

/// `ℍ_n` in lexicographic order of offsets.
pub fn generate_hn(n: u32) -> Vec<HIndex> {
    offsets_where(n, |m| half_open(m, i64::from(n)))
}

/// `ℍ_n*` in lexicographic order of offsets.
pub fn generate_hn_star(n: u32) -> Vec<HIndex> {
    offsets_where(n, |m| closed(m, i64::from(n)))
}

/// `ℍ_n°` in lexicographic order of offsets.
pub fn generate_hn_circ(n: u32) -> Vec<HIndex> {
    offsets_where(n, |m| open(m, i64::from(n)))
}

pub fn in_hn(k: &HIndex, n: u32) -> bool {
    half_open(k.offsets(), i64::from(n))
}

pub fn in_hn_star(k: &HIndex, n: u32) -> bool {
    k.spread() <= 4 * i64::from(n)
}

pub fn in_hn_circ(k: &HIndex, n: u32) -> bool {
    k.spread() < 4 * i64::from(n)
}

pub fn in_lambda_n(k: &HIndex, n: u32) -> bool {
    let c = k.components();
    c[3] <= c[2] && c[2] <= c[1] && c[1] <= c[0] && c[0] <= c[3] + 4 * i64::from(n)
}

fn is_strictly_decreasing(k: &HIndex) -> bool {
    let c = k.components();
    c[0] > c[1] && c[1] > c[2] && c[2] > c[3]
}

/// Boundary stratum of a node of `ℍ_n*`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum StratumLabel {
    Interior,
    /// `(|I|, |J|)`.
    Stratum(u8, u8),
}

impl StratumLabel {
    /// The six boundary strata.
    pub const BOUNDARY: [StratumLabel; 6] = [
        StratumLabel::Stratum(1, 1),
        StratumLabel::Stratum(1, 2),
        StratumLabel::Stratum(2, 1),
        StratumLabel::Stratum(1, 3),
        StratumLabel::Stratum(3, 1),
        StratumLabel::Stratum(2, 2),
    ];

    /// Number of nodes of `ℍ_n*` in this stratum: `4!/(i! j! (4-i-j)!) (n-1)^(4-i-j)`
    /// on the boundary and `|ℍ_n°| = n⁴ - (n-1)⁴` inside.
    pub fn count(&self, n: u32) -> u64 {
        let (i, j) = match *self {
            StratumLabel::Interior => return u64::from(n).pow(4) - u64::from(n.saturating_sub(1)).pow(4),
            StratumLabel::Stratum(i, j) => (u32::from(i), u32::from(j)),
        };
        let fact = |v: u32| (1..=u64::from(v)).product::<u64>();
        let rest = 4 - i - j;
        24 / (fact(i) * fact(j) * fact(rest)) * u64::from(n.saturating_sub(1)).pow(rest)
    }
}

impl fmt::Display for StratumLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            StratumLabel::Interior => f.write_str("interior"),
            StratumLabel::Stratum(i, j) => write!(f, "B{i}{j}"),
        }
    }
}

pub fn stratum_of_index(k: &HIndex, n: u32) -> Result<StratumLabel> {
    let class = classify_index(k, n)?;
    Ok(if class.is_interior() {
        StratumLabel::Interior
    } else {
        let (i, j) = class.sizes();
        StratumLabel::Stratum(i as u8, j as u8)
    })
}

/// The weight `c_k = 1 / C(|I|+|J|, |I|)` of the symmetric cubature on `ℍ_n*`.
pub fn weight_c(k: &HIndex, n: u32) -> Result<Ratio<i64>> {
    let class = classify_index(k, n)?;
    Ok(Ratio::new(1, class.class_size() as i64))
}

/// Boundary stratum of a node of `Λ_n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TetraStratum {
    Interior,
    Face,
    /// Edges where two non-adjacent ordering constraints are tight.
    Edge1,
    /// Edges where two adjacent ordering constraints are tight.
    Edge2,
    Vertex,
}

impl TetraStratum {
    pub const ALL: [TetraStratum; 5] = [
        TetraStratum::Interior,
        TetraStratum::Face,
        TetraStratum::Edge1,
        TetraStratum::Edge2,
        TetraStratum::Vertex,
    ];

    /// The tetrahedral cubature weight `λ`.
    pub fn weight(&self) -> u32 {
        match self {
            TetraStratum::Interior => 24,
            TetraStratum::Face => 12,
            TetraStratum::Edge1 => 6,
            TetraStratum::Edge2 => 4,
            TetraStratum::Vertex => 1,
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            TetraStratum::Interior => "interior",
            TetraStratum::Face => "face",
            TetraStratum::Edge1 => "edge1",
            TetraStratum::Edge2 => "edge2",
            TetraStratum::Vertex => "vertex",
        }
    }
}

impl fmt::Display for TetraStratum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Stratum of `k ∈ Λ_n`.
///
/// The four facets of `Λ_n` are `k1 = k2`, `k2 = k3`, `k3 = k4` and
/// `k1 = k4 + 4n`; they form a cycle in which consecutive facets meet along
/// the `Edge2` edges and opposite ones along the `Edge1` edges.
pub fn tetra_stratum(k: &HIndex, n: u32) -> Result<TetraStratum> {
    if !in_lambda_n(k, n) {
        return Err(Error::IndexNotInSet { index: k.components(), set: "Λ", n });
    }
    let c = k.components();
    let tight = [c[0] == c[1], c[1] == c[2], c[2] == c[3], c[0] == c[3] + 4 * i64::from(n)];
    let count = tight.iter().filter(|&&b| b).count();
    Ok(match count {
        0 => TetraStratum::Interior,
        1 => TetraStratum::Face,
        2 if (tight[0] && tight[2]) || (tight[1] && tight[3]) => TetraStratum::Edge1,
        2 => TetraStratum::Edge2,
        _ => TetraStratum::Vertex,
    })
}

/// `Λ_n` with strata, ordered lexicographically by `(k_i - k_4)/4`.
pub fn generate_lambda_n(n: u32) -> Vec<(HIndex, TetraStratum)> {
    let n64 = i64::from(n);
    let mut out = Vec::new();
    for a in 0..=n64 {
        for b in 0..=a {
            for c in 0..=b {
                let k = HIndex::from_offsets([a, b, c]);
                let stratum = tetra_stratum(&k, n).expect("generated index lies in Λ_n");
                out.push((k, stratum));
            }
        }
    }
    out
}

/// `Λ_n°`, the strictly interior tetrahedral nodes.
pub fn generate_lambda_n_circ(n: u32) -> Vec<HIndex> {
    generate_lambda_n(n)
        .into_iter()
        .filter(|(_, s)| *s == TetraStratum::Interior)
        .map(|(k, _)| k)
        .collect()
}

pub fn weight_lambda(k: &HIndex, n: u32) -> Result<u32> {
    tetra_stratum(k, n).map(|s| s.weight())
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    fn set(v: Vec<HIndex>) -> BTreeSet<HIndex> {
        v.into_iter().collect()
    }

    fn h(k: [i64; 4]) -> HIndex {
        HIndex::new(k).unwrap()
    }

    #[test]
    fn small_cardinalities() {
        assert_eq!(generate_hn(1).len(), 4);
        assert_eq!(generate_hn(2).len(), 32);
        assert_eq!(generate_hn_star(1).len(), 15);
        assert_eq!(generate_hn_circ(2).len(), 15);
        assert_eq!(generate_hn_circ(1), vec![HIndex::ZERO]);
    }

    #[test]
    fn set_inclusions() {
        for n in 1..=5 {
            let hn = set(generate_hn(n));
            let star = set(generate_hn_star(n));
            let circ = set(generate_hn_circ(n));
            assert!(hn.is_subset(&star));
            assert!(circ.is_subset(&hn));
            if n > 1 {
                assert_eq!(circ, set(generate_hn_star(n - 1)));
            }
            for k in &star {
                assert_eq!(hn.contains(k), in_hn(k, n));
                assert_eq!(circ.contains(k), in_hn_circ(k, n));
            }
        }
    }

    #[test]
    fn half_open_set_by_differences() {
        // Independent check on the components themselves.
        for n in 1..=4u32 {
            let m = 4 * i64::from(n);
            for k in generate_hn_star(n) {
                let c = k.components();
                let expected = (0..4).all(|i| (i + 1..4).all(|j| -m < c[i] - c[j] && c[i] - c[j] <= m));
                assert_eq!(in_hn(&k, n), expected);
            }
        }
    }

    #[test]
    fn stratum_examples() {
        for n in 1..=4i64 {
            let nu = n as u32;
            assert_eq!(stratum_of_index(&h([n, n, n, -3 * n]), nu).unwrap(), StratumLabel::Stratum(3, 1));
            assert_eq!(stratum_of_index(&h([3 * n, -n, -n, -n]), nu).unwrap(), StratumLabel::Stratum(1, 3));
            assert_eq!(stratum_of_index(&h([2 * n, 2 * n, -2 * n, -2 * n]), nu).unwrap(), StratumLabel::Stratum(2, 2));
            assert_eq!(stratum_of_index(&HIndex::ZERO, nu).unwrap(), StratumLabel::Interior);
        }
    }

    #[test]
    fn weights() {
        assert_eq!(weight_c(&HIndex::ZERO, 2).unwrap(), Ratio::from_integer(1));
        assert_eq!(weight_c(&h([4, 4, -4, -4]), 2).unwrap(), Ratio::new(1, 6));
        assert_eq!(weight_c(&h([4, 0, 0, -4]), 2).unwrap(), Ratio::new(1, 2));
        assert!(weight_c(&h([8, 0, 0, -8]), 1).is_err());
    }

    #[test]
    fn lambda_vertices_and_edges() {
        for n in 1..=6i64 {
            let nu = n as u32;
            let lambda = generate_lambda_n(nu);
            let with = |s: TetraStratum| -> BTreeSet<HIndex> {
                lambda.iter().filter(|(_, t)| *t == s).map(|(k, _)| *k).collect()
            };
            let vertices: BTreeSet<HIndex> =
                [[0, 0, 0, 0], [2 * n, 2 * n, -2 * n, -2 * n], [3 * n, -n, -n, -n], [n, n, n, -3 * n]]
                    .into_iter()
                    .map(h)
                    .collect();
            assert_eq!(with(TetraStratum::Vertex), vertices);
            let edge1: BTreeSet<HIndex> = (1..n)
                .flat_map(|k| [[2 * k, 2 * k, -2 * k, -2 * k], [2 * k + n, n - 2 * k, n - 2 * k, 2 * k - 3 * n]])
                .map(h)
                .collect();
            assert_eq!(with(TetraStratum::Edge1), edge1);
            let edge2: BTreeSet<HIndex> = (1..n)
                .flat_map(|k| {
                    [
                        [k, k, k, -3 * k],
                        [3 * k, -k, -k, -k],
                        [n + k, n + k, n - 3 * k, k - 3 * n],
                        [3 * n - k, 3 * k - n, -n - k, -n - k],
                    ]
                })
                .map(h)
                .collect();
            assert_eq!(with(TetraStratum::Edge2), edge2);
            assert_eq!(edge1.len() as i64, 2 * (n - 1));
            assert_eq!(edge2.len() as i64, 4 * (n - 1));
        }
    }

    #[test]
    fn lambda_is_ordered_part_of_hn_star() {
        for n in 1..=5 {
            let lambda: BTreeSet<HIndex> = generate_lambda_n(n).into_iter().map(|(k, _)| k).collect();
            let expected: BTreeSet<HIndex> = generate_hn_star(n)
                .into_iter()
                .filter(|k| {
                    let c = k.components();
                    c[0] >= c[1] && c[1] >= c[2] && c[2] >= c[3]
                })
                .collect();
            assert_eq!(lambda, expected);
        }
    }

    /// Shape of `k ∈ Λ` from its equal components alone.
    fn wedge_shape(k: &HIndex) -> &'static str {
        let c = k.components();
        let eq = [c[0] == c[1], c[1] == c[2], c[2] == c[3]];
        match eq.iter().filter(|&&b| b).count() {
            0 => "open",
            1 => "face",
            2 if eq[0] && eq[2] => "e1",
            2 => "e2",
            _ => "zero",
        }
    }

    #[test]
    fn tetra_strata_match_set_algebra() {
        use StratumLabel::*;
        for n in 1..=6 {
            for (k, s) in generate_lambda_n(n) {
                let b = stratum_of_index(&k, n).unwrap();
                let expected = match (wedge_shape(&k), b) {
                    ("open", Interior) => TetraStratum::Interior,
                    ("face", Interior) | ("open", Stratum(1, 1)) => TetraStratum::Face,
                    ("e1", Interior) | ("face", Stratum(1, 1)) => TetraStratum::Edge1,
                    ("e2", Interior) | ("face", Stratum(1, 2)) | ("face", Stratum(2, 1)) => TetraStratum::Edge2,
                    ("zero", _) | ("e1", Stratum(2, 2)) | ("e2", Stratum(1, 3)) | ("e2", Stratum(3, 1)) => {
                        TetraStratum::Vertex
                    }
                    other => panic!("{k} at n={n} has unexpected pattern {other:?}"),
                };
                assert_eq!(s, expected, "{k} n={n}");
            }
        }
    }
}
