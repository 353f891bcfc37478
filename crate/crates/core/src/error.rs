use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("{0:?} is not a frequency index (needs zero sum and all entries congruent mod 4)")]
    NotAnIndex([i64; 4]),

    #[error("point {0:?} lies outside the closed rhombic dodecahedron")]
    OutsideDomain([f64; 4]),

    #[error("index {index:?} is not in the node set {set} for degree {n}")]
    IndexNotInSet { index: [i64; 4], set: &'static str, n: u32 },

    #[error("degree n = {n} is invalid here (need n >= {min})")]
    InvalidDegree { n: u32, min: u32 },

    #[error("index {0:?} is not ordered k1 >= k2 >= k3 >= k4")]
    UnorderedIndex([i64; 4]),

    #[error("generalized sine with repeated entries {0:?} vanishes identically")]
    DegenerateSine([i64; 4]),

    #[error("quadrature order {0} is too small (need at least 2)")]
    InvalidQuadOrder(usize),

    #[error("point {0:?} is not a node of the sample table")]
    NotANode([f64; 4]),

    #[error("node values do not match node set {set} for degree {n}: expected {expected} nodes, got {got}")]
    NodeSetMismatch { set: &'static str, n: u32, expected: usize, got: usize },

    #[error("sample function failed: {0}")]
    Evaluation(String),
}
