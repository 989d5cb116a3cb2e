//! Number-theoretic Hilbert transforms (NHT) over residue rings.
//!
//! An NHT is a circulant matrix over `Z_m` whose first row interleaves zeros
//! with nonzero entries and whose Gram product (or square) is a scalar matrix
//! modulo a suitably chosen modulus, which makes it exactly invertible. This
//! crate provides:
//!
//! * [`modarith`]: the exact modular-arithmetic kernel (extended Euclid,
//!   inverses, square roots, element orders, rationals);
//! * [`circulant`]: circulant matrices over `Z_m` with exact products;
//! * [`nht`]: the 4-, 6- and 8-point transform families, verification,
//!   gcd reduction, normalization and parameter search;
//! * [`ntt`]: a companion number-theoretic Fourier transform in dense form;
//! * [`pipeline`]: chained, optionally braided, blockwise scrambling built
//!   from invertible NHT/NTT stages.

pub mod circulant;
pub mod modarith;
pub mod nht;
pub mod ntt;
pub mod pipeline;

pub use circulant::{CirculantMatrix, ResidueVector};
pub use modarith::{Modulus, Rational};
pub use nht::{NhtKind, NhtParams, NhtTransform, NormalizeTarget, VerificationReport};
pub use ntt::NttTransform;
pub use pipeline::{Braid, DataStream, DiffusionReport, PipelineSpec, Stage};
