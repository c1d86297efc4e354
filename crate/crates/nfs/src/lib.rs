//! Desk-scale Number Field Sieve for integer factorization and prime-field
//! discrete logarithm.
//!
//! The crate implements the full GNFS / NFS-DL pipeline at sizes that fit on
//! a single machine: polynomial selection (Kleinjung and Joux-Lercier
//! searches with Murphy-E ranking), lattice sieving over prime and composite
//! special-q with bucket sieving and batch smoothness detection, relation
//! filtering (singleton/clique removal and merge), block Wiedemann linear
//! algebra over GF(2) and GF(l), the factoring endgame (quadratic
//! characters, rational and p-adic algebraic square roots) and the discrete
//! logarithm endgame (Schirokauer maps, virtual logarithm database,
//! smoothing and descent). A campaign simulator predicts matrix sizes from
//! sample sieving, and a small work-unit server distributes relation
//! collection to flaky clients.
//!
//! The `examples/` directory contains one runnable example per major
//! capability; the `nfs` binary exposes every phase as a subcommand.
//!
//! Bibliography:
//! - Lenstra, Lenstra (eds.), The development of the number field sieve, 1993
//! - Coppersmith, Solving homogeneous linear equations over GF(2) via block
//!   Wiedemann, Math. Comp. 62, 1994
//! - Bernstein, How to find smooth parts of integers, 2004
//! - Cavallar, Strategies in filtering in the number field sieve, ANTS 2000

pub mod batchsmooth;
pub mod blockwiedemann;
pub mod cli;
pub mod error;
pub mod filter;
pub mod finish;
pub mod latsieve;
pub mod ntkernel;
pub mod polyselect;
pub mod published;
pub mod relations;
pub mod simulate;
pub mod workunits;

pub use error::{Error, Result};
