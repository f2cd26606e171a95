//! Bigraded cohomology of the exterior model for Morava stabilizer algebras.
//!
//! At an odd prime `p` and height `n` the continuous cohomology `H*S(n)` of
//! the Morava stabilizer algebra is computed, under the collapse condition
//! `n^2 <= 2p-1` and `n <= p-2`, by an exterior complex on the `n^2`
//! generators `h_{i,j}` (`1 <= i <= n`, `j` in `Z/n`) with differential
//!
//! ```text
//! d(h_{i,j}) = sum_{s=1}^{i-1} h_{s,j} h_{i-s, s+j}
//! ```
//!
//! and internal degree `|h_{i,j}| = 2 p^j (p^i - 1)` taken modulo
//! `2(p^n - 1)`.  This crate implements that complex exactly over `F_p`:
//!
//! * [`arithmetic`] — degree and index bookkeeping: derived constants,
//!   epsilon-vector negation identities, Lambda-sets of generalized Moore
//!   spectra, Greek-letter degrees, Moore-dual shifts.
//! * [`complex`] — the exterior complex itself: bitmask monomials, Koszul
//!   signs, the quadratic differential, complement duality, and bidegree
//!   basis enumeration.
//! * [`linalg`] — dense exact linear algebra over `F_p`: rank, kernel,
//!   coboundary membership, and per-slice cohomology with reduced
//!   representatives.
//! * [`lemmas`] — machine verification of the finite computations the
//!   theory rests on, emitting structured pass/fail reports with
//!   counterexamples.

pub mod arithmetic;
pub mod complex;
pub mod lemmas;
pub mod linalg;

pub use arithmetic::{
    ext_reduction, greek_degree, greek_internal_degree, lambda_set, lemma_int_negate,
    moore_dual_shift, signed_rep, EpsilonVector, ExtReduction, GreekDegree, InternalDegree,
    LambdaElement, LemmaIntWitness, PrimeContext,
};
pub use complex::{BasisBuckets, Cochain, ExteriorComplex, GeneratorId, Monomial, SignedMonomial};
pub use lemmas::{
    degree_table, e2_wn, ph_element, verify_d_squared, verify_degree_table, verify_diff_list,
    verify_duality, verify_e2ex, verify_ext_reduction, verify_gen_e, verify_hs_bound, verify_htpy,
    verify_int, verify_lan, verify_lanc, verify_lemma_zero, verify_ph_shift, CaseDetail,
    Counterexample, DegreeRow, DegreeTable, LemmaId, LemmaParams, LemmaReport, PhElement, Status,
};
pub use linalg::{
    build_slice, build_slice_cached, cohomology, cohomology_scan, in_image, BidegreeSlice,
    CohomologyResult, FpMatrix,
};

/// Errors shared across the crate.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("p = {0} is not an odd prime")]
    NotOddPrime(u64),
    #[error("height n = {n} out of range at p = {p} (need 1 <= n < p)")]
    HeightOutOfRange { p: u64, n: u32 },
    #[error("derived constants overflow 64-bit degree arithmetic")]
    ContextTooLarge,
    #[error("n^2 = {0} generators exceed the 63-bit monomial mask")]
    TooManyGenerators(u32),
    #[error("epsilon vector has length {got}, expected n = {expected}")]
    EpsilonLength { expected: u32, got: usize },
    #[error("{got} exponents given, at most k = n = {n} allowed")]
    LambdaTooLong { n: u32, got: usize },
    #[error("exponent list has length {got}, expected n = {expected}")]
    ExponentLength { expected: u32, got: usize },
    #[error("ideal exponents must be >= 1")]
    ZeroExponent,
    #[error("Greek-letter suffix s must be nonzero")]
    ZeroSuffix,
    #[error("invalid generator h_({i},{j}) at height n = {n}")]
    InvalidGenerator { i: u32, j: u32, n: u32 },
    #[error("duplicate generator in square-free monomial")]
    DuplicateGenerator,
    #[error("cohomological degree s = {got} out of range 0..={max}")]
    DegreeOutOfRange { max: u32, got: i64 },
    #[error("connecting degree shift e must be 1 or 2, got {0}")]
    InvalidExtShift(u32),
    #[error("element u = {0} does not lie in Lambda_n for the prime ideal")]
    NotInLambdaN(u64),
    #[error("cochain bidegree ({s}, {t}) does not match slice ({slice_s}, {slice_t})")]
    BidegreeMismatch {
        s: u32,
        t: u64,
        slice_s: u32,
        slice_t: u64,
    },
    #[error("d_out * d_in != 0 on slice (s = {s}, t = {t}); sign error upstream")]
    NotAComplex { s: u32, t: u64 },
    #[error("{lemma} requires (p, n) = ({p}, {n})")]
    WrongContext { lemma: &'static str, p: u64, n: u32 },
    #[error("scan limit {limit} exceeded: e(n) = {en}; restrict t or raise the limit")]
    ScanLimitExceeded { limit: u64, en: u64 },
}

pub type Result<T> = std::result::Result<T, Error>;
