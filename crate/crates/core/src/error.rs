use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("cannot parse `{0}` as an exact rational")]
pub struct ParseScalarError(pub String);

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("dimension must be positive")]
    ZeroDimension,
    #[error("index {index} out of range for dimension {dim}")]
    IndexOutOfRange { index: usize, dim: usize },
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("bracket is not a Lie bracket ({reason}) at basis tuple {witness:?}")]
    NotALieAlgebra { reason: &'static str, witness: Vec<usize> },
    #[error("product violates the left Leibniz identity at basis tuple {witness:?}")]
    NotALeibnizAlgebra { witness: Vec<usize> },
    #[error("product is not a Malcev algebra ({reason}) at basis tuple {witness:?}")]
    NotAMalcevAlgebra { reason: &'static str, witness: Vec<usize> },
    #[error("commutative algebra fails {law} at basis tuple {witness:?}")]
    InvalidCommAlgebra { law: &'static str, witness: Vec<usize> },
    #[error("Lie-Yamaguti axiom {axiom} fails at basis tuple {witness:?}")]
    AxiomFailure { axiom: &'static str, witness: Vec<usize> },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("polynomials live over different variable sets ({expected} vs {found} variables)")]
    MixedVarSets { expected: usize, found: usize },
    #[error("polynomial parse error at byte {position}: {message}")]
    Parse { position: usize, message: String },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum UniversalError {
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error("universal algebra of a non-square pair has no bialgebra structure")]
    NotSquare,
    #[error("point does not vanish on generator {generator}")]
    UnverifiedPoint { generator: String },
    #[error("point has {found} images, presentation needs {expected}")]
    PointShape { expected: usize, found: usize },
    #[error("map is not a Lie-Yamaguti morphism: {bracket} bracket fails at {witness:?}")]
    NotAMorphism { bracket: &'static str, witness: Vec<usize> },
    #[error("target algebra must be finite-dimensional to decide point equations")]
    FiniteTargetRequired,
    #[error("ideal membership undecided for {generator} at degree cap {cap}; raise the cap")]
    MembershipUnknown { generator: String, cap: u32 },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RepError {
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error("dimension mismatch in {what}: expected {expected}, found {found}")]
    DimensionMismatch { what: &'static str, expected: usize, found: usize },
    #[error("module axiom {axiom} fails at {witness:?}")]
    InvalidModule { axiom: &'static str, witness: Vec<usize> },
    #[error("matrix point violates relation {generator}")]
    RelationViolated { generator: String },
    #[error("matrix images of {first} and {second} do not commute")]
    NonCommutingImages { first: String, second: String },
    #[error("map is not a module morphism: {map} fails at {witness:?}")]
    NotAModuleMorphism { map: &'static str, witness: Vec<usize> },
    #[error("module and algebra presentation disagree: {0}")]
    Incompatible(&'static str),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SymmetryError {
    #[error(transparent)]
    Universal(#[from] UniversalError),
    #[error("matrix is not a point: generator {generator} does not vanish")]
    RelationViolated { generator: String },
    #[error("expected a {expected}x{expected} matrix")]
    NotSquare { expected: usize },
    #[error("point is not invertible in the convolution monoid")]
    NonInvertiblePoint,
    #[error("subspaces do not form a direct-sum decomposition: {0}")]
    NotADecomposition(&'static str),
    #[error("components of the point do not sum to the algebra")]
    ComponentsDoNotSum,
    #[error("group-algebra point fails {law} at entry {witness:?}")]
    NotABialgebraMap { law: &'static str, witness: Vec<usize> },
    #[error("group of order {order} exceeds the cap {cap}")]
    GroupTooLarge { order: usize, cap: usize },
    #[error("invalid group specification `{0}`")]
    InvalidGroup(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HopfError {
    #[error("envelope depth must be at least 1")]
    ZeroDepth,
    #[error(transparent)]
    Universal(#[from] UniversalError),
}

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("JSON error at line {line}, column {column}: {message}")]
    Json { line: usize, column: usize, message: String },
    #[error("field `{field}`: {message}")]
    Field { field: String, message: String },
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl From<serde_json::Error> for FormatError {
    fn from(e: serde_json::Error) -> Self {
        FormatError::Json { line: e.line(), column: e.column(), message: e.to_string() }
    }
}

impl FormatError {
    pub fn field(field: impl Into<String>, message: impl Into<String>) -> Self {
        FormatError::Field { field: field.into(), message: message.into() }
    }
}
