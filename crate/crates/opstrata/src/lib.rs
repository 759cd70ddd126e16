//! Exact-arithmetic machinery for studying how kernels and cokernels of
//! finite-dimensional operator models jump along families.
//!
//! Everything here is computed over exact scalars (rationals, Gaussian
//! rationals, rational quaternions); there is no floating point anywhere.
//! The main subsystems are:
//!
//! * [`scalar`] / [`matrix`] — the scalar tower and dense exact linear algebra
//!   (rank, nullspaces, solving) over all three scalars;
//! * [`schur`] — block Schur reduction of an operator near a reference
//!   operator, with invertible witnesses, plus the closed-form codimension
//!   calculators for kernel/cokernel strata;
//! * [`group`] / [`rep`] — finite groups as multiplication tables and their
//!   real representation theory: intertwiners, division types, isotypic
//!   multiplicities, coset permutation representations, normal cores;
//! * [`cover`] / [`petri`] — graph-based finite models of first-order elliptic
//!   operators with local systems: twisting, pulling back along covers,
//!   kernel decompositions, and the Petri/evaluation-map duality;
//! * [`jet`] — truncated polynomial jet spaces, formal differential operators
//!   built from symbols, surjectivity and kernel-dimension checks, polynomial
//!   Petri matrices;
//! * [`wendl`] — exact rank certificates for the complex-linear operator block
//!   attached to a Cauchy-Riemann symbol and a Petri-kernel element;
//! * [`orbifold`] — branched covers as orbifold covers, twisted index
//!   arithmetic, and the super-rigidity codimension ledger;
//! * [`report`] — JSON report emission and the reproducible verification
//!   suite behind the `opstrata` binary.

pub mod cover;
pub mod group;
pub mod jet;
pub mod matrix;
pub mod orbifold;
pub mod petri;
pub mod poly;
pub mod rep;
pub mod report;
pub mod scalar;
pub mod schur;
pub mod wendl;

use thiserror::Error;

/// Errors shared by all subsystems.
#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch in {context}: {left} vs {right}")]
    DimensionMismatch {
        context: &'static str,
        left: usize,
        right: usize,
    },
    #[error("matrix is singular in {0}")]
    Singular(&'static str),
    #[error("T11 block is singular: operator lies outside the reduction neighborhood")]
    OutsideReductionNeighborhood,
    #[error("rank parameter {r} exceeds min({dim_x}, {dim_y})")]
    RankTooLarge { r: usize, dim_x: usize, dim_y: usize },
    #[error("commuting-algebra dimension must lie in {{1,2,4}}, got {0}")]
    BadDivisionDimension(usize),
    #[error("not a valid group table: {0}")]
    BadGroupTable(String),
    #[error("not a representation: {0}")]
    BadRepresentation(String),
    #[error("representation is not irreducible: {0}")]
    NotIrreducible(String),
    #[error("catalog is not complete: sum of deg^2/k is {got}, group order is {want}")]
    IncompleteCatalog { got: String, want: usize },
    #[error("subgroup is not closed under products and inverses")]
    SubgroupNotClosed,
    #[error("subgroup is not normal; pass to the normal core and quotient first")]
    NonNormalSubgroup,
    #[error("invalid graph: {0}")]
    BadGraph(String),
    #[error("edge coefficient {0} is singular; discrete ellipticity requires invertibility")]
    SingularCoefficient(usize),
    #[error("cover graph is disconnected; the pullback model requires a connected cover")]
    DisconnectedCover,
    #[error("graph mismatch between operator and auxiliary data")]
    GraphMismatch,
    #[error("symbol is not elliptic: {0}")]
    NotElliptic(String),
    #[error("truncated formal operator is not surjective")]
    NotSurjective,
    #[error("kernel element is zero")]
    ZeroKernelElement,
    #[error("invalid ramification profile: {0}")]
    BadProfile(String),
    #[error("invalid monodromy datum: {0}")]
    BadMonodromy(String),
    #[error("invalid input: {0}")]
    BadInput(String),
}

/// Crate-wide result type.
pub type Result<T> = std::result::Result<T, Error>;
