//! Quadratic and Hermitian form invariants over the rationals, local
//! classification of special orthogonal groups, and globalization.

pub mod certificate;
pub mod classify;
pub mod exists;
pub mod globalize;
pub mod profile;
pub mod realize;

pub use certificate::{certificate_check, find_auxiliary_split_place, Anchor, CertKind, CheckReport, GlobalCertificate};
pub use classify::{classify_so_local, SoClass};
pub use exists::{exists_definite_quasisplit, ExistenceDecision, FormKind};
pub use globalize::{default_global_disc, globalize_hermitian, globalize_quadratic, positive_disc_representative, DEFAULT_SEARCH_BOUND};
pub use profile::{
    globally_equivalent, hermitian_trace_hasse, local_profile, locally_equivalent, split_so_hasse, DiagQuadForm,
    LocalProfile, Parity,
};
pub use realize::realize_form;
