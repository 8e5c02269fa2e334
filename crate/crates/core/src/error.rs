use thiserror::Error;

use crate::fincat::{MorId, ObjId};

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unknown object id {0}")]
    UnknownObject(ObjId),
    #[error("unknown morphism id {0}")]
    UnknownMorphism(MorId),
    #[error("morphisms {g} and {f} are not composable as {g}∘{f}")]
    NotComposable { g: MorId, f: MorId },
    #[error("composite {g}∘{f} is missing from the composition table")]
    MissingComposite { g: MorId, f: MorId },
    #[error("morphisms {f} and {g} are not parallel")]
    NotParallel { f: MorId, g: MorId },
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("search budget of {bound} exceeded in {what}{}", required.map(|r| format!(" (requires {r})")).unwrap_or_default())]
    BudgetExceeded {
        what: &'static str,
        bound: u64,
        required: Option<u64>,
    },
    #[error("invalid group: {0}")]
    InvalidGroup(String),
    #[error("invalid category: {0}")]
    InvalidCategory(String),
    #[error("not a homomorphism: {0}")]
    NotHomomorphism(String),
    #[error("generator {0} is not bound by the assignment")]
    UnboundGenerator(usize),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("isotropy component mismatch: {0}")]
    ComponentMismatch(String),
    #[error("image escapes the target subcategory: {0}")]
    ImageEscapes(String),
    #[error("schema error: {0}")]
    Schema(String),
    #[error("i/o error: {0}")]
    Io(String),
}

impl Error {
    pub fn is_budget(&self) -> bool {
        matches!(self, Error::BudgetExceeded { .. })
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Schema(e.to_string())
    }
}
