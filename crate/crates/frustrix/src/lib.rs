//! Frustrated Ising models on periodic isoradial graphs: elliptic special
//! functions, torus-embedded graph combinatorics, Kasteleyn characteristic
//! polynomials, elliptic dimer weights, spectral-curve sampling, and the
//! classification of gauge classes into the three elliptic families.

pub mod elliptic;
pub mod kasteleyn;
pub mod lattice;

pub use elliptic::{
    complete_elliptic_k, identity_suite, inverse_jacobi, jacobi, modulus_suite, theta,
    EResult, EllipticError, HalfPeriod, IdentityCheck, IdentityReport, Jacobi, ThetaChar,
    TorusParams, C, TH00, TH01, TH10, TH11,
};
pub use kasteleyn::{
    assemble_kmatrix, check_central_symmetry, det_laurent, find_kasteleyn_signs,
    kasteleyn_violations, proportionality, proportionality_scaled, KMatrix, KasteleynError,
    LaurentPoly2, ScaledFit,
};
pub use lattice::{
    build_GQ, build_dual, build_fisher, discrete_abel, extract_train_tracks, hexagonal,
    is_isoradial, is_minimal, square, triangular, AbelMap, AngleMap, Color, DecoratedGraph,
    DecorationKind, EdgeRole, FaceOrigin, LatticeError, PeriodicGraph, TrainTrack,
};
