//! Number-theoretic Hilbert transforms: construction, verification,
//! normalization, inversion and parameter search.
//!
//! An NHT is a circulant matrix over `Z_m` whose first row alternates zeros
//! (even offsets) with nonzero entries (odd offsets), together with a modulus
//! chosen so that one of two identities holds:
//!
//! * Gram route: `N N^T = c I (mod m)`, inverted through the transpose;
//! * Square route: `N N = q I (mod m)`, inverted through the matrix itself.
//!
//! Each constructor family picks its modulus so the relevant identity holds
//! exactly, with the scalar recorded as `diag_const`. Normalizing divides the
//! row by a square root of that scalar, turning the identity into
//! `M M^T = I` or `M M = I`.

use std::fmt;

use thiserror::Error;

use crate::circulant::{
    cyclic_convolve, transpose_first_row, CirculantError, CirculantMatrix, ResidueVector,
};
use crate::modarith::{gcd, mod_sqrt, ModArithError, Modulus, Rational};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum NhtError {
    #[error("degenerate modulus {0}")]
    DegenerateModulus(Rational),
    #[error("parameter condition violated: ab+bc+cd+da = {lhs} but 2ac+2bd = {rhs}")]
    ConditionViolated { lhs: i128, rhs: i128 },
    #[error("first row is not a Hilbert pattern (zeros at even offsets, nonzeros at odd)")]
    PatternViolated,
    #[error("row gcd {gcd} does not reduce modulus {modulus}")]
    NotReducible { gcd: u64, modulus: u64 },
    #[error("no square root of {value} modulo {modulus}")]
    NoSquareRoot { value: u64, modulus: u64 },
    #[error("product is not a scalar matrix modulo {modulus}")]
    NotScalar { modulus: u64 },
    #[error("not invertible: gcd({value}, {modulus}) != 1")]
    NotInvertible { value: u64, modulus: u64 },
    #[error("invalid parameters: {0}")]
    InvalidParams(&'static str),
    #[error(transparent)]
    Arith(#[from] ModArithError),
    #[error(transparent)]
    Circulant(#[from] CirculantError),
}

/// Normalization state of a transform.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NhtKind {
    Unnormalized,
    /// `M M^T = I (mod m)`: the inverse is the transpose.
    TransposeInverse,
    /// `M M = I (mod m)`: the transform is its own inverse.
    Involution,
}

impl fmt::Display for NhtKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            NhtKind::Unnormalized => "unnormalized",
            NhtKind::TransposeInverse => "transpose_inverse",
            NhtKind::Involution => "involution",
        };
        f.write_str(s)
    }
}

/// Which identity defines (and inverts) a transform.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IdentityRoute {
    /// `N N^T = c I`
    Gram,
    /// `N N = q I`
    Square,
}

impl fmt::Display for IdentityRoute {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            IdentityRoute::Gram => "gram",
            IdentityRoute::Square => "square",
        })
    }
}

/// Target of [`NhtTransform::normalize`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NormalizeTarget {
    TransposeInverse,
    Involution,
}

/// Constructor parameters, kept as provenance on the transform.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NhtParams {
    FourPoint { a: Rational, b: Rational },
    SixPointAp { a: i64 },
    SixPointGeneral { a: i64, k: i64, l: i64 },
    EightPoint { a: i64, b: i64, c: i64, d: i64 },
    GeneralRow { odd_entries: Vec<i64> },
}

impl fmt::Display for NhtParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NhtParams::FourPoint { a, b } => write!(f, "four a={a} b={b}"),
            NhtParams::SixPointAp { a } => write!(f, "six_ap a={a}"),
            NhtParams::SixPointGeneral { a, k, l } => write!(f, "six_gen a={a} k={k} l={l}"),
            NhtParams::EightPoint { a, b, c, d } => write!(f, "eight a={a} b={b} c={c} d={d}"),
            NhtParams::GeneralRow { odd_entries } => {
                let list: Vec<String> = odd_entries.iter().map(|e| e.to_string()).collect();
                write!(f, "row entries={}", list.join(","))
            }
        }
    }
}

/// What [`NhtTransform::verify`] found, recomputed from scratch.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    /// First row alternates zeros and nonzeros.
    pub structural_ok: bool,
    /// Scalar `c` with `N N^T = c I (mod m)`, when the Gram is scalar.
    pub gram_scalar: Option<u64>,
    /// Scalar `q` with `N N = q I (mod m)`, when the square is scalar.
    pub square_scalar: Option<u64>,
    /// `gcd(diag_const, m)`.
    pub gcd_c_m: u64,
    pub invertible: bool,
    pub notes: Vec<String>,
}

/// A number-theoretic Hilbert transform over `Z_m`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NhtTransform {
    matrix: CirculantMatrix,
    kind: NhtKind,
    route: IdentityRoute,
    /// Scalar of the defining identity, reduced mod `m`.
    diag_const: u64,
    /// Normalization root `s`, once normalized.
    scale: Option<u64>,
    params: NhtParams,
    // cached identity scalars of the current matrix
    gram_scalar: Option<u64>,
    square_scalar: Option<u64>,
}

impl NhtTransform {
    pub fn n(&self) -> usize {
        self.matrix.n()
    }

    pub fn modulus(&self) -> Modulus {
        self.matrix.modulus()
    }

    pub fn matrix(&self) -> &CirculantMatrix {
        &self.matrix
    }

    pub fn kind(&self) -> NhtKind {
        self.kind
    }

    pub fn route(&self) -> IdentityRoute {
        self.route
    }

    pub fn diag_const(&self) -> u64 {
        self.diag_const
    }

    pub fn scale(&self) -> Option<u64> {
        self.scale
    }

    pub fn params(&self) -> &NhtParams {
        &self.params
    }

    pub fn gram_scalar(&self) -> Option<u64> {
        self.gram_scalar
    }

    pub fn square_scalar(&self) -> Option<u64> {
        self.square_scalar
    }

    /// `G = N F (mod m)`.
    pub fn forward(&self, f: &ResidueVector) -> Result<ResidueVector, NhtError> {
        Ok(self.matrix.mul_vec(f)?)
    }

    /// Exact inverse of [`forward`](Self::forward).
    ///
    /// Normalized transforms invert through their defining identity directly.
    /// Unnormalized transforms divide by the identity scalar: `c^{-1} N^T g`
    /// on the Gram route, `q^{-1} N g` on the square route.
    pub fn inverse(&self, g: &ResidueVector) -> Result<ResidueVector, NhtError> {
        let m = self.modulus();
        match self.kind {
            NhtKind::TransposeInverse => Ok(self.matrix.transpose().mul_vec(g)?),
            NhtKind::Involution => Ok(self.matrix.mul_vec(g)?),
            NhtKind::Unnormalized => {
                if let Some(c) = self.gram_scalar.filter(|&c| unit(c, m)) {
                    let t = self.matrix.transpose().mul_vec(g)?;
                    Ok(scale_vec(&t, m.inv(c)?))
                } else if let Some(q) = self.square_scalar.filter(|&q| unit(q, m)) {
                    let t = self.matrix.mul_vec(g)?;
                    Ok(scale_vec(&t, m.inv(q)?))
                } else {
                    Err(NhtError::NotInvertible {
                        value: self.diag_const,
                        modulus: m.get(),
                    })
                }
            }
        }
    }

    pub fn is_invertible(&self) -> bool {
        let m = self.modulus();
        match self.kind {
            NhtKind::TransposeInverse | NhtKind::Involution => true,
            NhtKind::Unnormalized => {
                self.gram_scalar.is_some_and(|c| unit(c, m))
                    || self.square_scalar.is_some_and(|q| unit(q, m))
            }
        }
    }

    /// Recomputes the Gram and the square from scratch and reports what holds.
    pub fn verify(&self) -> VerificationReport {
        let m = self.modulus();
        let transpose = self.matrix.transpose();
        let gram = self
            .matrix
            .mul_mat(&transpose)
            .expect("same shape and modulus");
        let square = self.matrix.mul_mat(&self.matrix).expect("same shape and modulus");
        let gram_scalar = gram.scalar_identity_residue();
        let square_scalar = square.scalar_identity_residue();
        let gcd_c_m = gcd(self.diag_const as i128, m.get() as i128) as u64;

        let mut notes = Vec::new();
        let structural_ok = self.matrix.is_hilbert_pattern();
        if !structural_ok {
            notes.push("first row is not an alternating Hilbert pattern".to_string());
        }
        let invertible = match self.kind {
            NhtKind::TransposeInverse => {
                let ok = gram_scalar == Some(1);
                if !ok {
                    notes.push(format!("M M^T != I mod {m}"));
                }
                ok
            }
            NhtKind::Involution => {
                let ok = square_scalar == Some(1);
                if !ok {
                    notes.push(format!("M M != I mod {m}"));
                }
                ok
            }
            NhtKind::Unnormalized => {
                let by_gram = gram_scalar.is_some_and(|c| unit(c, m));
                let by_square = square_scalar.is_some_and(|q| unit(q, m));
                if gram_scalar.is_none() && square_scalar.is_none() {
                    notes.push(format!("no scalar identity mod {m}"));
                }
                if !(by_gram || by_square) {
                    notes.push(format!(
                        "non-invertible: gcd({}, {}) = {}",
                        self.diag_const,
                        m.get(),
                        gcd_c_m
                    ));
                }
                by_gram || by_square
            }
        };
        VerificationReport {
            structural_ok,
            gram_scalar,
            square_scalar,
            gcd_c_m,
            invertible,
            notes,
        }
    }

    /// Divides the modulus by `g^2` where `g` is the gcd of the nonzero row
    /// entries, keeping the row itself.
    pub fn reduce_by_gcd(&self) -> Result<NhtTransform, NhtError> {
        let m = self.modulus().get();
        let g = self
            .matrix
            .first_row()
            .iter()
            .filter(|&&v| v != 0)
            .fold(0i128, |acc, &v| gcd(acc, v as i128)) as u64;
        if g < 2 || m % (g * g) != 0 {
            return Err(NhtError::NotReducible { gcd: g, modulus: m });
        }
        let reduced = Modulus::new(m / (g * g))
            .map_err(|_| NhtError::DegenerateModulus(Rational::from_int((m / (g * g)) as i128)))?;
        let row: Vec<i128> = self
            .matrix
            .first_row()
            .iter()
            .map(|&v| v as i128)
            .collect();
        assemble(&row, reduced, Some(self.route), self.params.clone())
    }

    /// Scales the row by `s^{-1}` where `s^2` equals the identity scalar,
    /// using the smallest invertible square root.
    pub fn normalize(&self, target: NormalizeTarget) -> Result<NhtTransform, NhtError> {
        let (m, q) = self.normalization_scalar(target)?;
        let roots = mod_sqrt(q as i128, m)?;
        if roots.is_empty() {
            return Err(NhtError::NoSquareRoot {
                value: q,
                modulus: m.get(),
            });
        }
        let root = roots
            .iter()
            .copied()
            .find(|&s| unit(s, m))
            .ok_or(NhtError::NotInvertible {
                value: q,
                modulus: m.get(),
            })?;
        self.normalize_with_root(target, root)
    }

    /// Like [`normalize`](Self::normalize) with an explicit root, for callers
    /// that want the other representative `m - s`.
    pub fn normalize_with_root(
        &self,
        target: NormalizeTarget,
        root: u64,
    ) -> Result<NhtTransform, NhtError> {
        let (m, q) = self.normalization_scalar(target)?;
        let root = root % m.get();
        if m.mul(root, root) != q {
            return Err(NhtError::NoSquareRoot {
                value: q,
                modulus: m.get(),
            });
        }
        if !unit(root, m) {
            return Err(NhtError::NotInvertible {
                value: root,
                modulus: m.get(),
            });
        }
        let inv = m.inv(root)?;
        let row: Vec<i128> = self
            .matrix
            .first_row()
            .iter()
            .map(|&v| m.mul(v, inv) as i128)
            .collect();
        let mut t = assemble(
            &row,
            m,
            Some(match target {
                NormalizeTarget::TransposeInverse => IdentityRoute::Gram,
                NormalizeTarget::Involution => IdentityRoute::Square,
            }),
            self.params.clone(),
        )?;
        t.kind = match target {
            NormalizeTarget::TransposeInverse => NhtKind::TransposeInverse,
            NormalizeTarget::Involution => NhtKind::Involution,
        };
        t.scale = Some(root);
        debug_assert_eq!(t.diag_const, 1);
        Ok(t)
    }

    fn normalization_scalar(&self, target: NormalizeTarget) -> Result<(Modulus, u64), NhtError> {
        if self.kind != NhtKind::Unnormalized {
            return Err(NhtError::InvalidParams("transform is already normalized"));
        }
        let m = self.modulus();
        let scalar = match target {
            NormalizeTarget::TransposeInverse => self.gram_scalar,
            NormalizeTarget::Involution => self.square_scalar,
        };
        let q = scalar.ok_or(NhtError::NotScalar { modulus: m.get() })?;
        if !unit(q, m) {
            return Err(NhtError::NotInvertible {
                value: q,
                modulus: m.get(),
            });
        }
        Ok((m, q))
    }
}

fn unit(v: u64, m: Modulus) -> bool {
    gcd(v as i128, m.get() as i128) == 1
}

fn scale_vec(v: &ResidueVector, factor: u64) -> ResidueVector {
    let m = v.modulus();
    ResidueVector::from_residues(v.values().iter().map(|&x| m.mul(x, factor)).collect(), m)
}

/// Shared constructor: reduces the row, checks the Hilbert pattern, caches the
/// identity scalars and picks the defining route.
fn assemble(
    row: &[i128],
    modulus: Modulus,
    route: Option<IdentityRoute>,
    params: NhtParams,
) -> Result<NhtTransform, NhtError> {
    let matrix = CirculantMatrix::from_first_row(row, modulus);
    if !matrix.is_hilbert_pattern() {
        return Err(NhtError::PatternViolated);
    }
    let transpose = matrix.transpose();
    let gram = matrix.mul_mat(&transpose)?;
    let square = matrix.mul_mat(&matrix)?;
    let gram_scalar = gram.scalar_identity_residue();
    let square_scalar = square.scalar_identity_residue();
    let (route, diag_const) = match route {
        Some(IdentityRoute::Gram) => (
            IdentityRoute::Gram,
            gram_scalar.unwrap_or_else(|| gram.first_row()[0]),
        ),
        Some(IdentityRoute::Square) => (
            IdentityRoute::Square,
            square_scalar.unwrap_or_else(|| square.first_row()[0]),
        ),
        None => {
            if let Some(c) = gram_scalar {
                (IdentityRoute::Gram, c)
            } else if let Some(q) = square_scalar {
                (IdentityRoute::Square, q)
            } else {
                (IdentityRoute::Gram, gram.first_row()[0])
            }
        }
    };
    Ok(NhtTransform {
        matrix,
        kind: NhtKind::Unnormalized,
        route,
        diag_const,
        scale: None,
        params,
        gram_scalar,
        square_scalar,
    })
}

/// 4-point candidates for the row `(0, a, 0, b)` with rational `a`, `b`.
///
/// Over the rationals `N N^T = (a^2+b^2) I + 2ab P_2` and
/// `N N = 2ab I + (a^2+b^2) P_2`, so the Gram candidate lives modulo the
/// numerator of `2ab` and the square candidate modulo the numerator of
/// `a^2 + b^2` (denominators cleared). Either side can fail independently,
/// e.g. when a denominator is not invertible modulo that side's modulus.
pub fn four_point(
    a: Rational,
    b: Rational,
) -> (Result<NhtTransform, NhtError>, Result<NhtTransform, NhtError>) {
    if a.is_zero() || b.is_zero() {
        let err = || Err(NhtError::InvalidParams("a and b must be nonzero"));
        return (err(), err());
    }
    let two_ab = Rational::from_int(2) * a * b;
    let sum_sq = a * a + b * b;
    let params = NhtParams::FourPoint { a, b };
    let gram = four_candidate(a, b, two_ab, IdentityRoute::Gram, params.clone());
    let square = four_candidate(a, b, sum_sq, IdentityRoute::Square, params);
    (gram, square)
}

fn four_candidate(
    a: Rational,
    b: Rational,
    modulus_of: Rational,
    route: IdentityRoute,
    params: NhtParams,
) -> Result<NhtTransform, NhtError> {
    let m_int = modulus_of.numer().abs();
    if m_int < 2 {
        return Err(NhtError::DegenerateModulus(modulus_of));
    }
    let m = Modulus::new(m_int as u64).expect("checked >= 2");
    let row = [0, a.lift(m)? as i128, 0, b.lift(m)? as i128];
    assemble(&row, m, Some(route), params)
}

/// 6-point arithmetic-progression pair for the row `(0, a, 0, a+2, 0, a+4)`.
///
/// Returns the Gram candidate modulo `3a^2 + 12a + 8` (where `N N^T = 12 I`)
/// and the square candidate modulo `3a^2 + 12a + 16` (where `N N = -12 I`).
pub fn six_point_ap(a: i64) -> Result<(NhtTransform, NhtTransform), NhtError> {
    if a < 1 {
        return Err(NhtError::InvalidParams("a must be at least 1"));
    }
    let a_ = a as i128;
    let m1 = 3 * a_ * a_ + 12 * a_ + 8;
    let m2 = 3 * a_ * a_ + 12 * a_ + 16;
    let row = [0, a_, 0, a_ + 2, 0, a_ + 4];
    let params = NhtParams::SixPointAp { a };
    let t1 = assemble(
        &row,
        Modulus::new(m1 as u64).map_err(|_| NhtError::DegenerateModulus(m1.into()))?,
        Some(IdentityRoute::Gram),
        params.clone(),
    )?;
    let t2 = assemble(
        &row,
        Modulus::new(m2 as u64).map_err(|_| NhtError::DegenerateModulus(m2.into()))?,
        Some(IdentityRoute::Square),
        params,
    )?;
    Ok((t1, t2))
}

/// General 6-point transform for the row `(0, a, 0, a+k, 0, a+l)`:
/// `N N^T = (k^2 + l^2 - kl) I` modulo `3a^2 + 2ak + 2al + kl`.
pub fn six_point_general(a: i64, k: i64, l: i64) -> Result<NhtTransform, NhtError> {
    if k == 0 || l == 0 || k == l {
        return Err(NhtError::InvalidParams("need k != l and k, l nonzero"));
    }
    let (a_, k_, l_) = (a as i128, k as i128, l as i128);
    let m_int = 3 * a_ * a_ + 2 * a_ * k_ + 2 * a_ * l_ + k_ * l_;
    if m_int.abs() < 2 {
        return Err(NhtError::DegenerateModulus(m_int.into()));
    }
    let m = Modulus::new(m_int.unsigned_abs() as u64).expect("checked >= 2");
    let row = [0, a_, 0, a_ + k_, 0, a_ + l_];
    assemble(&row, m, Some(IdentityRoute::Gram), NhtParams::SixPointGeneral { a, k, l })
}

/// 8-point transform for the row `(0, a, 0, b, 0, c, 0, d)`.
///
/// Requires `ab + bc + cd + da = 2ac + 2bd` exactly; the common value is the
/// modulus and the Gram diagonal is `a^2 + b^2 + c^2 + d^2`.
pub fn eight_point(a: i64, b: i64, c: i64, d: i64) -> Result<NhtTransform, NhtError> {
    let (a_, b_, c_, d_) = (a as i128, b as i128, c as i128, d as i128);
    let lhs = a_ * b_ + b_ * c_ + c_ * d_ + d_ * a_;
    let rhs = 2 * a_ * c_ + 2 * b_ * d_;
    if lhs != rhs {
        return Err(NhtError::ConditionViolated { lhs, rhs });
    }
    if lhs.abs() < 2 {
        return Err(NhtError::DegenerateModulus(lhs.into()));
    }
    let m = Modulus::new(lhs.unsigned_abs() as u64).expect("checked >= 2");
    let row = [0, a_, 0, b_, 0, c_, 0, d_];
    assemble(&row, m, Some(IdentityRoute::Gram), NhtParams::EightPoint { a, b, c, d })
}

/// Transform from explicit odd-position entries and a modulus.
///
/// The defining route is whichever identity turns out scalar (Gram first);
/// rows with no scalar identity are still constructible so that `verify` can
/// report on them.
pub fn from_row(odd_entries: &[i64], modulus: u64) -> Result<NhtTransform, NhtError> {
    if odd_entries.is_empty() {
        return Err(NhtError::InvalidParams("need at least one odd-position entry"));
    }
    let m = Modulus::new(modulus)
        .map_err(|_| NhtError::DegenerateModulus((modulus as i128).into()))?;
    let mut row = Vec::with_capacity(odd_entries.len() * 2);
    for &e in odd_entries {
        row.push(0);
        row.push(e as i128);
    }
    assemble(
        &row,
        m,
        None,
        NhtParams::GeneralRow {
            odd_entries: odd_entries.to_vec(),
        },
    )
}

/// Integer Gram analysis of a signed Hilbert-pattern row: returns
/// `(gram_gcd, diag)` where `diag` is the Gram diagonal and `gram_gcd` the gcd
/// of the even-offset off-diagonal Gram entries. Divisors of `gram_gcd` that
/// are at least 2 are exactly the moduli making the Gram scalar.
pub fn infer_moduli(first_row: &[i64]) -> Result<(i128, i128), NhtError> {
    let n = first_row.len();
    if n < 4 || n % 2 != 0 {
        return Err(NhtError::PatternViolated);
    }
    let ok = first_row
        .iter()
        .enumerate()
        .all(|(i, &v)| if i % 2 == 0 { v == 0 } else { v != 0 });
    if !ok {
        return Err(NhtError::PatternViolated);
    }
    let row: Vec<i128> = first_row.iter().map(|&v| v as i128).collect();
    let gram = cyclic_convolve(&row, &transpose_first_row(&row));
    debug_assert!(gram.iter().skip(1).step_by(2).all(|&v| v == 0));
    let diag = gram[0];
    let gram_gcd = gram[2..]
        .iter()
        .step_by(2)
        .fold(0i128, |acc, &v| gcd(acc, v));
    Ok((gram_gcd, diag))
}

/// Enumerates 8-point parameter sets with entries bounded by `bound`,
/// in lexicographic order over `(a, b, c, d)`.
///
/// Sets whose entries vanish modulo the induced modulus are skipped (they do
/// not form Hilbert-pattern rows), so every returned set constructs and
/// passes verification.
pub fn search_eight_point(bound: i64, require_invertible: bool) -> Vec<NhtParams> {
    let mut found = Vec::new();
    if bound < 1 {
        return found;
    }
    let range = (-bound..=bound).filter(|&v| v != 0).collect::<Vec<_>>();
    for &a in &range {
        for &b in &range {
            for &c in &range {
                for &d in &range {
                    let (a_, b_, c_, d_) = (a as i128, b as i128, c as i128, d as i128);
                    let lhs = a_ * b_ + b_ * c_ + c_ * d_ + d_ * a_;
                    let rhs = 2 * a_ * c_ + 2 * b_ * d_;
                    if lhs != rhs || lhs.abs() < 2 {
                        continue;
                    }
                    let Ok(t) = eight_point(a, b, c, d) else {
                        continue;
                    };
                    if require_invertible && !t.is_invertible() {
                        continue;
                    }
                    found.push(NhtParams::EightPoint { a, b, c, d });
                }
            }
        }
    }
    found
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(s: &str) -> Rational {
        s.parse().unwrap()
    }

    fn vec_mod(values: &[i128], m: u64) -> ResidueVector {
        ResidueVector::new(values, Modulus::new(m).unwrap())
    }

    fn eq20() -> NhtTransform {
        from_row(&[2, 4, 6], 13).unwrap()
    }

    #[test]
    fn four_point_known_candidates() {
        let (gram, square) = four_point(rat("3/2"), rat("5"));
        let t = gram.unwrap();
        assert_eq!(t.modulus().get(), 15);
        assert_eq!(t.matrix().first_row(), &[0, 9, 0, 5]);
        assert_eq!(t.diag_const(), 1);
        // the square candidate clears the denominator of 109/4
        let t2 = square.unwrap();
        assert_eq!(t2.modulus().get(), 109);
        assert_eq!(t2.diag_const(), 15);

        let (_, square) = four_point(rat("1"), rat("2"));
        let t2 = square.unwrap();
        assert_eq!(t2.modulus().get(), 5);
        assert_eq!(t2.matrix().first_row(), &[0, 1, 0, 2]);
        assert_eq!(t2.diag_const(), 4);

        let (gram, _) = four_point(rat("1"), rat("1"));
        let t = gram.unwrap();
        assert_eq!(t.modulus().get(), 2);
        assert_eq!(t.diag_const(), 0);
        assert!(!t.verify().invertible);
    }

    #[test]
    fn four_point_rejects_zero_params() {
        let (g, s) = four_point(Rational::from_int(0), rat("5"));
        assert!(g.is_err() && s.is_err());
    }

    #[test]
    fn six_point_ap_known_values() {
        let (t1, t2) = six_point_ap(1).unwrap();
        assert_eq!((t1.modulus().get(), t2.modulus().get()), (23, 31));
        assert_eq!(t1.matrix().first_row(), &[0, 1, 0, 3, 0, 5]);
        assert_eq!(t1.diag_const(), 12);
        assert_eq!(t1.gram_scalar(), Some(12));
        // square scalar mod 31 is -12 = 19
        assert_eq!(t2.diag_const(), 19);
        assert_eq!(t2.square_scalar(), Some(19));

        let (t1, t2) = six_point_ap(2).unwrap();
        assert_eq!((t1.modulus().get(), t2.modulus().get()), (44, 52));
        assert!(six_point_ap(0).is_err());
    }

    #[test]
    fn six_point_general_known_values() {
        let t = six_point_general(1, 4, 6).unwrap();
        assert_eq!(t.modulus().get(), 47);
        assert_eq!(t.diag_const(), 28);
        let t = six_point_general(1, 2, 4).unwrap();
        assert_eq!(t.modulus().get(), 23);
        assert_eq!(t.diag_const(), 12);
        let t = six_point_general(1, 1, 2).unwrap();
        assert_eq!(t.modulus().get(), 11);
        assert_eq!(t.diag_const(), 3);
        assert!(six_point_general(1, 3, 3).is_err());
    }

    #[test]
    fn eight_point_known_values() {
        for (params, m, diag) in [
            ((3, -3, 9, 5), 24, 4),
            ((5, -5, 10, 7), 30, 19),
            ((77, -7, 7, 17), 840, 436),
            ((36, -9, 27, 31), 1386, 295),
            ((1, 1, 1, 1), 4, 0),
        ] {
            let t = eight_point(params.0, params.1, params.2, params.3).unwrap();
            assert_eq!(t.modulus().get(), m, "{params:?}");
            assert_eq!(t.diag_const(), diag, "{params:?}");
            assert_eq!(t.gram_scalar(), Some(diag));
        }
        assert!(matches!(
            eight_point(1, 2, 3, 4),
            Err(NhtError::ConditionViolated { .. })
        ));
    }

    #[test]
    fn infer_moduli_known_values() {
        assert_eq!(infer_moduli(&[0, 1, 0, 2, 0, 3]).unwrap(), (11, 14));
        assert_eq!(infer_moduli(&[0, 1, 0, 3, 0, 5]).unwrap(), (23, 35));
        assert_eq!(infer_moduli(&[0, 3, 0, -3, 0, 9, 0, 5]).unwrap(), (24, 124));
        assert!(infer_moduli(&[0, 1]).is_err());
        assert!(infer_moduli(&[0, 1, 1, 2, 0, 3]).is_err());
    }

    #[test]
    fn reduce_by_gcd_known_values() {
        let (t1, t2) = six_point_ap(2).unwrap();
        assert_eq!(t1.reduce_by_gcd().unwrap().modulus().get(), 11);
        let r2 = t2.reduce_by_gcd().unwrap();
        assert_eq!(r2.modulus().get(), 13);
        assert_eq!(r2.matrix().first_row(), &[0, 2, 0, 4, 0, 6]);
        assert_eq!(r2.diag_const(), 1); // involution without normalization

        let (t1, _) = six_point_ap(1).unwrap();
        assert!(matches!(
            t1.reduce_by_gcd(),
            Err(NhtError::NotReducible { gcd: 1, .. })
        ));
    }

    #[test]
    fn normalize_reproduces_known_rows() {
        let (t1, t2) = six_point_ap(1).unwrap();
        let n1 = t1.normalize(NormalizeTarget::TransposeInverse).unwrap();
        assert_eq!(n1.matrix().first_row(), &[0, 18, 0, 8, 0, 21]);
        assert_eq!(n1.scale(), Some(9));
        assert!(n1
            .matrix()
            .mul_mat(&n1.matrix().transpose())
            .unwrap()
            .is_identity());

        let n2 = t2.normalize(NormalizeTarget::Involution).unwrap();
        assert_eq!(n2.matrix().first_row(), &[0, 7, 0, 21, 0, 4]);
        assert_eq!(n2.scale(), Some(9));
        assert!(n2.matrix().mul_mat(n2.matrix()).unwrap().is_identity());

        let t = six_point_general(1, 4, 6).unwrap();
        let with_override = t
            .normalize_with_root(NormalizeTarget::TransposeInverse, 34)
            .unwrap();
        assert_eq!(with_override.matrix().first_row(), &[0, 18, 0, 43, 0, 32]);
        let canonical = t.normalize(NormalizeTarget::TransposeInverse).unwrap();
        assert_eq!(canonical.scale(), Some(13));
        assert_eq!(canonical.matrix().first_row(), &[0, 29, 0, 4, 0, 15]);

        let bad = eight_point(3, -3, 9, 5)
            .unwrap()
            .normalize(NormalizeTarget::TransposeInverse);
        assert!(matches!(bad, Err(NhtError::NotInvertible { value: 4, modulus: 24 })));
    }

    #[test]
    fn normalize_rejects_wrong_root() {
        let (t1, _) = six_point_ap(1).unwrap();
        assert!(matches!(
            t1.normalize_with_root(NormalizeTarget::TransposeInverse, 10),
            Err(NhtError::NoSquareRoot { value: 12, modulus: 23 })
        ));
        // the involution target on the mod-23 side: square is not scalar there
        assert!(matches!(
            t1.normalize(NormalizeTarget::Involution),
            Err(NhtError::NotScalar { modulus: 23 })
        ));
    }

    #[test]
    fn forward_matches_known_pairs() {
        let t = eq20();
        let g = t.forward(&vec_mod(&[1, 1, 1, 1, 1, 1], 13)).unwrap();
        assert_eq!(g.values(), &[12, 12, 12, 12, 12, 12]);
        let g = t.forward(&vec_mod(&[1, 0, 0, 0, 0, 0], 13)).unwrap();
        assert_eq!(g.values(), &[0, 6, 0, 4, 0, 2]);
        let g = t.forward(&vec_mod(&[3, 2, 1, 1, 2, 3], 13)).unwrap();
        assert_eq!(g.values(), &[0, 2, 0, 9, 7, 9]);
    }

    #[test]
    fn inverse_matches_known_pairs() {
        let t = eq20();
        // N is an involution mod 13, so the square route inverts row 11 back
        let f = t.inverse(&vec_mod(&[0, 6, 0, 4, 0, 2], 13)).unwrap();
        assert_eq!(f.values(), &[1, 0, 0, 0, 0, 0]);
        let f0 = vec_mod(&[4, 4, 4, 4, 4, 4], 13);
        let g = t.forward(&f0).unwrap();
        assert_eq!(g.values(), &[9, 9, 9, 9, 9, 9]);
        assert_eq!(t.inverse(&g).unwrap(), f0);

        // gram-route unnormalized inverse is 19^{-1} N^T = 19 N^T mod 30
        let t = eight_point(5, -5, 10, 7).unwrap();
        let f0 = vec_mod(&[1, 2, 3, 4, 5, 6, 7, 8], 30);
        let g = t.forward(&f0).unwrap();
        assert_eq!(t.inverse(&g).unwrap(), f0);
        let m = t.modulus();
        let by_hand = t
            .matrix()
            .transpose()
            .mul_vec(&g)
            .map(|v| {
                ResidueVector::from_residues(
                    v.values().iter().map(|&x| m.mul(x, 19)).collect(),
                    m,
                )
            })
            .unwrap();
        assert_eq!(t.inverse(&g).unwrap(), by_hand);

        let bad = eight_point(3, -3, 9, 5).unwrap();
        assert!(matches!(
            bad.inverse(&vec_mod(&[0; 8], 24)),
            Err(NhtError::NotInvertible { .. })
        ));
    }

    #[test]
    fn verify_reports_known_findings() {
        let r = eight_point(3, -3, 9, 5).unwrap().verify();
        assert_eq!(r.gram_scalar, Some(4));
        assert_eq!(r.gcd_c_m, 4);
        assert!(!r.invertible);
        assert!(r.structural_ok);

        let (t1, _) = six_point_ap(1).unwrap();
        let r = t1.verify();
        assert_eq!(r.gram_scalar, Some(12));
        assert!(r.invertible);

        // identity-like transform: normalized six-point, defining identity holds
        let n1 = t1.normalize(NormalizeTarget::TransposeInverse).unwrap();
        let r = n1.verify();
        assert_eq!(r.gram_scalar, Some(1));
        assert!(r.invertible);
    }

    #[test]
    fn search_contains_known_parameter_sets() {
        let all = search_eight_point(10, false);
        assert!(all.contains(&NhtParams::EightPoint { a: 3, b: -3, c: 9, d: 5 }));
        let invertible = search_eight_point(10, true);
        assert!(invertible.contains(&NhtParams::EightPoint { a: 5, b: -5, c: 10, d: 7 }));
        assert!(!invertible.contains(&NhtParams::EightPoint { a: 3, b: -3, c: 9, d: 5 }));

        let tiny = search_eight_point(1, false);
        assert_eq!(
            tiny,
            vec![
                NhtParams::EightPoint { a: -1, b: -1, c: -1, d: -1 },
                NhtParams::EightPoint { a: 1, b: 1, c: 1, d: 1 },
            ]
        );
        assert!(search_eight_point(1, true).is_empty());
    }

    #[test]
    fn erratum_row_fails_identity() {
        // the reference-table row (0, 18, 0, 13, 0, 8) mod 23 does not satisfy
        // M M^T = I; the consistent normalization is (0, 18, 0, 8, 0, 21)
        let m = Modulus::new(23).unwrap();
        let bad = CirculantMatrix::from_first_row(&[0, 18, 0, 13, 0, 8], m);
        let gram = bad.mul_mat(&bad.transpose()).unwrap();
        assert!(!gram.is_identity());
        assert_eq!(gram.first_row()[0], 5);
        assert_eq!(gram.scalar_identity_residue(), None);
    }
}
