use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("duplicate element identifier `{0}`")]
    DuplicateElement(String),

    #[error("unknown element `{0}`")]
    UnknownElement(String),

    #[error("empty carrier: a lattice needs at least one element")]
    EmptyCarrier,

    #[error("not a poset: `{0}` <= `{1}` and `{1}` <= `{0}` but they are distinct")]
    NotAPoset(String, String),

    #[error("not a lattice: `{0}` and `{1}` have no {2}")]
    NotALattice(String, String, &'static str),

    #[error("not distributive: {0} /\\ ({1} \\/ {2}) != ({0} /\\ {1}) \\/ ({0} /\\ {2})")]
    NotDistributive(String, String, String),

    #[error("a Boolean algebra needs at least one atom")]
    ZeroAtoms,

    #[error("too many atoms ({0}); at most {1} are supported")]
    TooManyAtoms(usize, usize),

    #[error("not complemented: `{0}` has no complement")]
    NotComplemented(String),

    #[error("sublattice must contain bottom `{0}` and top `{1}`")]
    MissingBounds(String, String),

    #[error("subset not closed: {2} of `{0}` and `{1}` is `{3}`, outside the subset")]
    NotClosed(String, String, &'static str, String),

    #[error("not a homomorphism: {law} fails at {witness}")]
    NotAHom { law: &'static str, witness: String },

    #[error("map is not total: no image for `{0}`")]
    PartialMap(String),

    #[error("not injective: `{0}` and `{1}` share the image `{2}`")]
    NotInjective(String, String, String),

    #[error("foreign element `{0}`")]
    ForeignElement(String),

    #[error("succedent has {0} statements, above the limit of {1}")]
    SuccedentTooLarge(usize, usize),

    #[error("mismatched structures: {0}")]
    Mismatch(String),

    #[error(
        "invalid seed: the graph of the given hom is inconsistent over the super-lattice ({0})"
    )]
    InvalidSeed(String),

    #[error("extension stuck at `{0}`: no value is consistent")]
    ExtensionStuck(String),

    #[error("no counterexample: the lattice is complemented")]
    NoCounterexample,

    #[error("degenerate lattice: 1 = 0, the generated algebra is trivial")]
    DegenerateLattice,

    #[error("generated carrier exceeds {0} classes")]
    TooManyClasses(usize),

    #[error("not an interpretation: {0}")]
    NotAnInterpretation(String),

    #[error("ill-defined factorization: {0}")]
    IllDefined(String),

    #[error("internal invariant violated: {0}")]
    Internal(String),
}

impl Error {
    /// Errors that can only arise from a bug, never from bad input.
    pub fn is_internal(&self) -> bool {
        matches!(self, Error::ExtensionStuck(_) | Error::Internal(_))
    }
}
