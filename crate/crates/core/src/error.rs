use griess_exact::LinearError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GriessError {
    #[error("sector index (r,s)=({r},{s}) out of range for series n={n}")]
    IndexOutOfRange { n: u32, r: u32, s: u32 },
    #[error("sector (r,s)=({r},{s}) is not a sigma sector of series n={n}")]
    NotSigmaSector { n: u32, r: u32, s: u32 },
    #[error("element is not an Ising vector")]
    NotIsing,
    #[error("adjoint spectrum leaves residual rank {residual} outside the expected eigenvalues")]
    BadSpectrum { residual: usize },
    #[error("constructed involution is not an algebra automorphism: {0}")]
    NotAutomorphism(String),
    #[error("axis is not of sigma type: its 1/16-eigenspace is nonzero")]
    NotSigmaType,
    #[error("element is not fixed by the tau involution of the axis")]
    NotTauFixed,
    #[error("axes do not form a 2A pair")]
    NotTwoAPair,
    #[error("axes do not form a 3A pair")]
    NotThreeAPair,
    #[error("constructed element fails the Virasoro condition e*e = 2e")]
    NotVirasoro,
    #[error("Gram matrix of the spanning set is singular")]
    SingularGram,
    #[error("solved vector is not a conformal vector: {0}")]
    NotConformal(String),
    #[error("inner product {scaled} (scaled by 2^10) with closure dimension {dim} matches no dihedral type")]
    UnknownType { scaled: String, dim: usize },
    #[error("algebra invariant violated: {0}")]
    InvariantViolation(String),
    #[error(transparent)]
    Linear(#[from] LinearError),
}
