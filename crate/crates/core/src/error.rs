use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("group order must be positive")]
    ZeroOrder,

    #[error("invalid group table: {0}")]
    InvalidTable(String),

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("permutation degree mismatch: expected {expected}, found {found}")]
    DegreeMismatch { expected: usize, found: usize },

    #[error("{what} of size {size} exceeds the enumeration bound {bound}")]
    BoundExceeded {
        what: &'static str,
        size: usize,
        bound: usize,
    },

    #[error("subset is not a subgroup")]
    NotSubgroup,

    #[error("subgroup is not normal")]
    NotNormal,

    #[error("map is not a group homomorphism at ({0}, {1})")]
    NotHomomorphism(usize, usize),

    #[error("map is not surjective")]
    NotSurjective,

    #[error("action has {found} rows but G has order {expected}")]
    ActionShape { expected: usize, found: usize },

    #[error("action is not a homomorphism: action[{g}*{h}] != action[{g}] o action[{h}]")]
    ActionNotHomomorphism { g: usize, h: usize },

    #[error("action is not transitive: element {missing} is not in the orbit of the identity")]
    NotTransitive { missing: usize },

    #[error("skew bracoid relation fails at (g, eta, mu) = ({g}, {eta}, {mu})")]
    RelationFails { g: usize, eta: usize, mu: usize },

    #[error("skew brace relation fails at (a, b, c) = ({a}, {b}, {c})")]
    BraceRelationFails { a: usize, b: usize, c: usize },

    #[error("permutation {0} is not an automorphism")]
    NotAutomorphism(String),

    #[error("subgroup is not contained in the holomorph: {0}")]
    NotInHolomorph(String),

    #[error("cocycle identity fails at ({g}, {h})")]
    CocycleFails { g: usize, h: usize },

    #[error("action is not regular")]
    NotRegular,

    #[error("subset is not a left ideal")]
    NotLeftIdeal,

    #[error("subset is not an ideal")]
    NotIdeal,

    #[error("subset is not stable under the gamma-function")]
    NotGammaStable,

    #[error("stabilizer is not mapped into the target stabilizer at g = {0}")]
    StabilizerNotPreserved(usize),

    #[error("induced map on N is not well defined")]
    InducedMapIllDefined,

    #[error("skew bracoid is not reduced")]
    NotReduced,

    #[error("skew bracoids have different N")]
    DifferentN,

    #[error("internal consistency check failed: {0}")]
    Inconsistent(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("parse error: {0}")]
    Parse(String),
}
