//! Circulant matrices over `Z_m`, stored by their first row.
//!
//! Row `i` is the first row cyclically right-shifted by `i`, so entry `(i, j)`
//! is `first_row[(j - i) mod n]`. Products are computed naively in `O(n^2)`;
//! block lengths here are small and exactness matters more than speed.

use thiserror::Error;

use crate::modarith::Modulus;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CirculantError {
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },
    #[error("modulus mismatch: {left} vs {right}")]
    ModulusMismatch { left: u64, right: u64 },
}

/// A fixed-length vector of residues modulo `m`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResidueVector {
    modulus: Modulus,
    values: Vec<u64>,
}

impl ResidueVector {
    /// Builds a vector from signed integers, reducing each into `[0, m)`.
    pub fn new(values: &[i128], modulus: Modulus) -> Self {
        ResidueVector {
            modulus,
            values: values.iter().map(|&v| modulus.reduce(v)).collect(),
        }
    }

    /// Wraps values that are already canonical residues.
    pub fn from_residues(values: Vec<u64>, modulus: Modulus) -> Self {
        assert!(
            values.iter().all(|&v| v < modulus.get()),
            "values must already be reduced"
        );
        ResidueVector { modulus, values }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn modulus(&self) -> Modulus {
        self.modulus
    }

    pub fn values(&self) -> &[u64] {
        &self.values
    }

    pub fn into_values(self) -> Vec<u64> {
        self.values
    }

    /// Cyclic right rotation: entry `j` of the result is entry `(j - shift) mod n`.
    pub fn rotated(&self, shift: usize) -> Self {
        let n = self.values.len();
        let shift = shift % n.max(1);
        let values = (0..n)
            .map(|j| self.values[(j + n - shift) % n])
            .collect();
        ResidueVector {
            modulus: self.modulus,
            values,
        }
    }
}

/// An `n x n` circulant over `Z_m`, stored as its first row.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CirculantMatrix {
    modulus: Modulus,
    first_row: Vec<u64>,
}

impl CirculantMatrix {
    /// Builds a circulant from a signed first row; entries reduce into `[0, m)`.
    pub fn from_first_row(row: &[i128], modulus: Modulus) -> Self {
        assert!(!row.is_empty(), "circulant needs a non-empty first row");
        CirculantMatrix {
            modulus,
            first_row: row.iter().map(|&v| modulus.reduce(v)).collect(),
        }
    }

    pub fn identity(n: usize, modulus: Modulus) -> Self {
        assert!(n > 0);
        let mut row = vec![0u64; n];
        row[0] = 1;
        CirculantMatrix {
            modulus,
            first_row: row,
        }
    }

    pub fn n(&self) -> usize {
        self.first_row.len()
    }

    pub fn modulus(&self) -> Modulus {
        self.modulus
    }

    pub fn first_row(&self) -> &[u64] {
        &self.first_row
    }

    pub fn entry(&self, i: usize, j: usize) -> u64 {
        let n = self.n();
        self.first_row[(j + n - i % n) % n]
    }

    pub fn row(&self, i: usize) -> Vec<u64> {
        (0..self.n()).map(|j| self.entry(i, j)).collect()
    }

    /// `g = C f (mod m)`.
    pub fn mul_vec(&self, f: &ResidueVector) -> Result<ResidueVector, CirculantError> {
        self.check_vec(f)?;
        let n = self.n();
        let m = self.modulus;
        let values = (0..n)
            .map(|i| {
                let mut acc = 0u64;
                for j in 0..n {
                    acc = m.add(acc, m.mul(self.entry(i, j), f.values[j]));
                }
                acc
            })
            .collect();
        Ok(ResidueVector { modulus: m, values })
    }

    /// Circulant product: the first row of `C D` is the cyclic convolution of
    /// the two first rows.
    pub fn mul_mat(&self, other: &CirculantMatrix) -> Result<CirculantMatrix, CirculantError> {
        if self.n() != other.n() {
            return Err(CirculantError::DimensionMismatch {
                left: self.n(),
                right: other.n(),
            });
        }
        if self.modulus != other.modulus {
            return Err(CirculantError::ModulusMismatch {
                left: self.modulus.get(),
                right: other.modulus.get(),
            });
        }
        let n = self.n();
        let m = self.modulus;
        let mut row = vec![0u64; n];
        for (j, out) in row.iter_mut().enumerate() {
            let mut acc = 0u64;
            for k in 0..n {
                acc = m.add(acc, m.mul(self.first_row[k], other.first_row[(j + n - k % n) % n]));
            }
            *out = acc;
        }
        Ok(CirculantMatrix {
            modulus: m,
            first_row: row,
        })
    }

    /// The transpose, also circulant: first row `(c0, c_{n-1}, ..., c1)`.
    pub fn transpose(&self) -> CirculantMatrix {
        let n = self.n();
        let row = (0..n).map(|j| self.first_row[(n - j) % n]).collect();
        CirculantMatrix {
            modulus: self.modulus,
            first_row: row,
        }
    }

    /// `Some(c)` when this matrix is `c * I (mod m)`, i.e. every off-diagonal
    /// first-row entry is zero.
    pub fn scalar_identity_residue(&self) -> Option<u64> {
        self.first_row[1..]
            .iter()
            .all(|&v| v == 0)
            .then(|| self.first_row[0])
    }

    pub fn is_identity(&self) -> bool {
        self.scalar_identity_residue() == Some(1)
    }

    /// Even length, zeros exactly at even offsets, nonzeros at odd offsets.
    pub fn is_hilbert_pattern(&self) -> bool {
        let n = self.n();
        n % 2 == 0
            && self
                .first_row
                .iter()
                .enumerate()
                .all(|(i, &v)| if i % 2 == 0 { v == 0 } else { v != 0 })
    }

    fn check_vec(&self, f: &ResidueVector) -> Result<(), CirculantError> {
        if self.n() != f.len() {
            return Err(CirculantError::DimensionMismatch {
                left: self.n(),
                right: f.len(),
            });
        }
        if self.modulus != f.modulus {
            return Err(CirculantError::ModulusMismatch {
                left: self.modulus.get(),
                right: f.modulus.get(),
            });
        }
        Ok(())
    }
}

/// Cyclic convolution of two equal-length integer rows, exact over `i128`.
pub fn cyclic_convolve(a: &[i128], b: &[i128]) -> Vec<i128> {
    assert_eq!(a.len(), b.len());
    let n = a.len();
    let mut out = vec![0i128; n];
    for (j, slot) in out.iter_mut().enumerate() {
        for (k, &ak) in a.iter().enumerate() {
            *slot += ak * b[(j + n - k) % n];
        }
    }
    out
}

/// First row of the transpose of a circulant with this first row.
pub fn transpose_first_row(row: &[i128]) -> Vec<i128> {
    let n = row.len();
    (0..n).map(|j| row[(n - j) % n]).collect()
}

/// Exact integer product of a circulant (given by its signed first row) and a
/// vector.
pub fn apply_circulant_exact(row: &[i128], v: &[i128]) -> Vec<i128> {
    assert_eq!(row.len(), v.len());
    let n = row.len();
    (0..n)
        .map(|i| (0..n).map(|j| row[(j + n - i) % n] * v[j]).sum())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn m(v: u64) -> Modulus {
        Modulus::new(v).unwrap()
    }

    fn eq20() -> CirculantMatrix {
        CirculantMatrix::from_first_row(&[0, 2, 0, 4, 0, 6], m(13))
    }

    #[test]
    fn from_first_row_reduces_entries() {
        let c = CirculantMatrix::from_first_row(&[0, 3, 0, -3, 0, 9, 0, 5], m(24));
        assert_eq!(c.first_row(), &[0, 3, 0, 21, 0, 9, 0, 5]);
        let id = CirculantMatrix::from_first_row(&[1, 0, 0, 0], m(7));
        assert!(id.is_identity());
        assert_eq!(eq20().first_row(), &[0, 2, 0, 4, 0, 6]);
    }

    #[test]
    fn rows_are_right_shifts() {
        let c = eq20();
        assert_eq!(c.row(0), vec![0, 2, 0, 4, 0, 6]);
        assert_eq!(c.row(1), vec![6, 0, 2, 0, 4, 0]);
        assert_eq!(c.row(5), vec![2, 0, 4, 0, 6, 0]);
    }

    #[test]
    fn mul_vec_matches_known_pairs() {
        let c = eq20();
        let f = ResidueVector::new(&[1, 1, 1, 0, 0, 0], m(13));
        assert_eq!(c.mul_vec(&f).unwrap().values(), &[2, 8, 6, 10, 4, 6]);
        let f = ResidueVector::new(&[1, 2, 3, 4, 5, 6], m(13));
        assert_eq!(c.mul_vec(&f).unwrap().values(), &[4, 6, 5, 6, 5, 5]);
        let id = CirculantMatrix::identity(6, m(13));
        let f = ResidueVector::new(&[7, 1, 0, 3, 12, 5], m(13));
        assert_eq!(id.mul_vec(&f).unwrap(), f);
    }

    #[test]
    fn mul_vec_rejects_mismatches() {
        let c = eq20();
        let short = ResidueVector::new(&[1, 2, 3], m(13));
        assert!(matches!(
            c.mul_vec(&short),
            Err(CirculantError::DimensionMismatch { .. })
        ));
        let wrong_m = ResidueVector::new(&[1, 2, 3, 4, 5, 6], m(31));
        assert!(matches!(
            c.mul_vec(&wrong_m),
            Err(CirculantError::ModulusMismatch { .. })
        ));
    }

    #[test]
    fn mul_mat_matches_known_products() {
        let c = eq20();
        // N^2 = I mod 13: over the integers the square has diagonal 40 and
        // off-diagonals 52.
        assert!(c.mul_mat(&c).unwrap().is_identity());
        let id = CirculantMatrix::identity(6, m(13));
        assert_eq!(c.mul_mat(&id).unwrap(), c);
        let n25 = CirculantMatrix::from_first_row(&[0, 3, 0, -3, 0, 9, 0, 5], m(24));
        let gram = n25.mul_mat(&n25.transpose()).unwrap();
        assert_eq!(gram.scalar_identity_residue(), Some(4));
    }

    #[test]
    fn transpose_reverses_tail() {
        let c = eq20();
        assert_eq!(c.transpose().first_row(), &[0, 6, 0, 4, 0, 2]);
        let id = CirculantMatrix::identity(4, m(7));
        assert_eq!(id.transpose(), id);
        let four = CirculantMatrix::from_first_row(&[0, 3, 0, 5], m(11));
        assert_eq!(four.transpose().first_row(), &[0, 5, 0, 3]);
    }

    #[test]
    fn scalar_identity_detection() {
        let four_i = CirculantMatrix::from_first_row(&[4, 0, 0, 0, 0, 0, 0, 0], m(24));
        assert_eq!(four_i.scalar_identity_residue(), Some(4));
        let id = CirculantMatrix::identity(6, m(13));
        assert_eq!(id.scalar_identity_residue(), Some(1));
        assert_eq!(eq20().scalar_identity_residue(), None);
    }

    #[test]
    fn hilbert_pattern_detection() {
        let n25 = CirculantMatrix::from_first_row(&[0, 3, 0, -3, 0, 9, 0, 5], m(24));
        assert!(n25.is_hilbert_pattern());
        assert!(!CirculantMatrix::identity(4, m(7)).is_hilbert_pattern());
        let zero_odd = CirculantMatrix::from_first_row(&[0, 2, 0, 4, 0, 0], m(13));
        assert!(!zero_odd.is_hilbert_pattern());
        let odd_len = CirculantMatrix::from_first_row(&[0, 2, 0], m(13));
        assert!(!odd_len.is_hilbert_pattern());
    }

    #[test]
    fn hilbert_gram_has_structural_zero_odd_offsets() {
        // Products of a Hilbert-pattern row with its transpose vanish at odd
        // offsets over the integers, not just mod m.
        let row: Vec<i128> = vec![0, 3, 0, -3, 0, 9, 0, 5];
        let gram = cyclic_convolve(&row, &transpose_first_row(&row));
        for (offset, &v) in gram.iter().enumerate() {
            if offset % 2 == 1 {
                assert_eq!(v, 0);
            }
        }
        assert_eq!(gram, vec![124, 0, 24, 0, 24, 0, 24, 0]);
    }

    #[test]
    fn apply_circulant_exact_matches_modular_path() {
        let row: Vec<i128> = vec![0, 2, 0, 4, 0, 6];
        let v: Vec<i128> = vec![1, 2, 3, 3, 2, 1];
        let exact = apply_circulant_exact(&row, &v);
        let modular = eq20()
            .mul_vec(&ResidueVector::new(&v, m(13)))
            .unwrap();
        let reduced: Vec<u64> = exact.iter().map(|&x| m(13).reduce(x)).collect();
        assert_eq!(reduced, modular.values());
        assert_eq!(exact, vec![22, 20, 22, 26, 28, 26]);
    }

    proptest! {
        #[test]
        fn shift_commutation(
            row in proptest::collection::vec(-20i128..20, 6),
            f in proptest::collection::vec(-20i128..20, 6),
            modulus in 2u64..200,
            shift in 0usize..6,
        ) {
            let mm = m(modulus);
            let c = CirculantMatrix::from_first_row(&row, mm);
            let v = ResidueVector::new(&f, mm);
            let lhs = c.mul_vec(&v.rotated(shift)).unwrap();
            let rhs = c.mul_vec(&v).unwrap().rotated(shift);
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn linearity(
            row in proptest::collection::vec(-20i128..20, 4),
            f in proptest::collection::vec(-20i128..20, 4),
            g in proptest::collection::vec(-20i128..20, 4),
            alpha in -20i128..20,
            beta in -20i128..20,
            modulus in 2u64..200,
        ) {
            let mm = m(modulus);
            let c = CirculantMatrix::from_first_row(&row, mm);
            let combo: Vec<i128> = f.iter().zip(&g).map(|(&x, &y)| alpha * x + beta * y).collect();
            let lhs = c.mul_vec(&ResidueVector::new(&combo, mm)).unwrap();
            let cf = c.mul_vec(&ResidueVector::new(&f, mm)).unwrap();
            let cg = c.mul_vec(&ResidueVector::new(&g, mm)).unwrap();
            let a = mm.reduce(alpha);
            let b = mm.reduce(beta);
            let rhs: Vec<u64> = cf
                .values()
                .iter()
                .zip(cg.values())
                .map(|(&x, &y)| mm.add(mm.mul(a, x), mm.mul(b, y)))
                .collect();
            prop_assert_eq!(lhs.values(), rhs.as_slice());
        }

        #[test]
        fn transpose_is_involutive(
            row in proptest::collection::vec(-50i128..50, 1..12),
            modulus in 2u64..500,
        ) {
            let c = CirculantMatrix::from_first_row(&row, m(modulus));
            prop_assert_eq!(c.transpose().transpose(), c);
        }

        #[test]
        fn gram_is_symmetric_circulant(
            odd in proptest::collection::vec(1i128..30, 3),
            modulus in 2u64..300,
        ) {
            // Hilbert-pattern row: zeros interleaved with the odd entries.
            let mut row = Vec::new();
            for &e in &odd {
                row.push(0);
                row.push(e);
            }
            let mm = m(modulus);
            let c = CirculantMatrix::from_first_row(&row, mm);
            let gram = c.mul_mat(&c.transpose()).unwrap();
            // symmetric: first row equals its own reversal
            prop_assert_eq!(gram.transpose(), gram.clone());
            for (offset, &v) in gram.first_row().iter().enumerate() {
                if offset % 2 == 1 {
                    prop_assert_eq!(v, 0);
                }
            }
        }
    }
}
