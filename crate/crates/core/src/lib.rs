//! Exact computations on the 3-parameter generalized quaternion algebras
//! `K(λ1, λ2, λ3)` over the rationals.
//!
//! Every space (derivations, local-derivation probe spaces, biderivations,
//! commuting maps, centroid, quasi-centroid) is computed as the nullspace of
//! a linear constraint system assembled from structure constants. Closed-form
//! classifications are then compared against those nullspaces with exact
//! subspace equality.
//!
//! ```
//! use quatalg::{derivation_space, make_3pgq, Params};
//!
//! let hamilton = make_3pgq(&Params::from_ints(1, 1, 1));
//! assert_eq!(derivation_space(&hamilton).dim(), 3);
//! ```

pub mod algebra;
pub mod battery;
pub mod biderivation;
pub mod centroid;
pub mod derivation;
pub mod error;
pub mod linalg;
pub mod rational;

pub use algebra::{bilinear_f, cross, make_3pgq, wedge, Element, Params, StructureTensor};
pub use battery::{section_checks, verify_all, Battery, BatteryConfig, Check, Section, Status};
pub use biderivation::{
    biderivation_space, is_biderivation, split_symmetric_skew, symmetric_family_lambda3_zero,
    tagged_basis, verify_biderivation_theorem, verify_skew_lambda3_zero, wedge_tensor,
    BilinearTensor, Symmetry, TaggedTensor,
};
pub use centroid::{
    centroid, centroid_report, commuting_space, quasi_centroid, verify_gamma_der_lemma,
    CentroidReport, CommutingReport,
};
pub use derivation::{
    ad_wedge, derivation_space, global_witness, image_subspace, is_derivation, local_probe_space,
    standard_probes, theorem_probes, two_local_witness, verify_ad_basis, verify_local_theorem,
    verify_two_local_theorem, Derivations, LinearMap, LocalReport, TwoLocalReport, ValueAssignment,
};
pub use error::{Error, Result};
pub use linalg::{Matrix, Subspace};
pub use rational::Rational;
