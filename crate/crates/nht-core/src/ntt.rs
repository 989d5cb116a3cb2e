//! Number-theoretic Fourier transform over a prime field, dense matrix form.
//!
//! The kernel is `L[i][j] = g^(i*j) mod p` for an element `g` of
//! multiplicative order exactly `n`; the inverse kernel uses `g^(-i*j)` with
//! an `n^{-1}` prefactor.

use thiserror::Error;

use crate::circulant::ResidueVector;
use crate::modarith::{element_order, is_prime, mod_inv, ModArithError, Modulus};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum NttError {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("no element of order {n} modulo {p} ({n} does not divide {p}-1)")]
    NoSuchElement { p: u64, n: usize },
    #[error("{g} has order {order} modulo {p}, expected {expected}")]
    InvalidGenerator { g: u64, p: u64, order: u64, expected: usize },
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },
    #[error("modulus mismatch: {left} vs {right}")]
    ModulusMismatch { left: u64, right: u64 },
    #[error(transparent)]
    Arith(#[from] ModArithError),
}

/// Smallest residue `g >= 2` of multiplicative order exactly `n` modulo the
/// prime `p`.
pub fn find_order_n_element(p: u64, n: usize) -> Result<u64, NttError> {
    if !is_prime(p) {
        return Err(NttError::NotPrime(p));
    }
    let m = Modulus::new(p).expect("primes are >= 2");
    if n == 0 || (p - 1) % n as u64 != 0 {
        return Err(NttError::NoSuchElement { p, n });
    }
    (2..p)
        .find(|&g| element_order(g as i128, m) == Ok(n as u64))
        .ok_or(NttError::NoSuchElement { p, n })
}

/// A length-`n` transform modulo the prime `p`, with kernel element `g`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NttTransform {
    p: Modulus,
    n: usize,
    g: u64,
}

impl NttTransform {
    /// Builds the transform with the smallest admissible kernel element.
    pub fn new(p: u64, n: usize) -> Result<Self, NttError> {
        let g = find_order_n_element(p, n)?;
        Ok(NttTransform {
            p: Modulus::new(p).expect("primes are >= 2"),
            n,
            g,
        })
    }

    /// Builds the transform with an explicit kernel element of order `n`.
    pub fn with_generator(p: u64, n: usize, g: u64) -> Result<Self, NttError> {
        if !is_prime(p) {
            return Err(NttError::NotPrime(p));
        }
        let m = Modulus::new(p).expect("primes are >= 2");
        let order = element_order(g as i128, m).map_err(|_| NttError::InvalidGenerator {
            g,
            p,
            order: 0,
            expected: n,
        })?;
        if order != n as u64 {
            return Err(NttError::InvalidGenerator { g, p, order, expected: n });
        }
        Ok(NttTransform { p: m, n, g: m.reduce(g as i128) })
    }

    pub fn p(&self) -> Modulus {
        self.p
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn generator(&self) -> u64 {
        self.g
    }

    /// The dense kernel: `L[i][j] = g^(i*j) mod p`.
    pub fn matrix(&self) -> Vec<Vec<u64>> {
        self.kernel(self.g)
    }

    /// The inverse kernel without the `n^{-1}` prefactor:
    /// row `i` is `1, g^{-i}, g^{-2i}, ...`.
    pub fn inverse_matrix_unscaled(&self) -> Vec<Vec<u64>> {
        let g_inv = mod_inv(self.g as i128, self.p).expect("g is a unit mod p");
        self.kernel(g_inv)
    }

    /// `n^{-1} mod p`; always defined because `n` divides `p - 1`.
    pub fn inverse_scale(&self) -> u64 {
        mod_inv(self.n as i128, self.p).expect("n divides p-1, hence n < p")
    }

    fn kernel(&self, base: u64) -> Vec<Vec<u64>> {
        // exponents only matter mod n since base has order n
        let powers: Vec<u64> = {
            let mut acc = Vec::with_capacity(self.n);
            let mut x = 1u64;
            for _ in 0..self.n {
                acc.push(x);
                x = self.p.mul(x, base);
            }
            acc
        };
        (0..self.n)
            .map(|i| (0..self.n).map(|j| powers[i * j % self.n]).collect())
            .collect()
    }

    /// `h = L f (mod p)`.
    pub fn forward(&self, f: &ResidueVector) -> Result<ResidueVector, NttError> {
        self.check(f)?;
        Ok(self.apply_kernel(self.g, f, 1))
    }

    /// `f = n^{-1} M h (mod p)` with `M[i][j] = g^{-ij}`.
    pub fn inverse(&self, h: &ResidueVector) -> Result<ResidueVector, NttError> {
        self.check(h)?;
        let g_inv = mod_inv(self.g as i128, self.p)?;
        let scale = mod_inv(self.n as i128, self.p)?;
        Ok(self.apply_kernel(g_inv, h, scale))
    }

    fn apply_kernel(&self, base: u64, v: &ResidueVector, scale: u64) -> ResidueVector {
        let p = self.p;
        let mut powers = Vec::with_capacity(self.n);
        let mut x = 1u64;
        for _ in 0..self.n {
            powers.push(x);
            x = p.mul(x, base);
        }
        let values = (0..self.n)
            .map(|i| {
                let mut acc = 0u64;
                for (j, &vj) in v.values().iter().enumerate() {
                    acc = p.add(acc, p.mul(powers[i * j % self.n], vj));
                }
                p.mul(acc, scale)
            })
            .collect();
        ResidueVector::from_residues(values, p)
    }

    fn check(&self, v: &ResidueVector) -> Result<(), NttError> {
        if v.len() != self.n {
            return Err(NttError::DimensionMismatch {
                left: self.n,
                right: v.len(),
            });
        }
        if v.modulus() != self.p {
            return Err(NttError::ModulusMismatch {
                left: self.p.get(),
                right: v.modulus().get(),
            });
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vec31(values: &[i128]) -> ResidueVector {
        ResidueVector::new(values, Modulus::new(31).unwrap())
    }

    #[test]
    fn find_order_n_element_known_values() {
        assert_eq!(find_order_n_element(31, 6).unwrap(), 6);
        assert_eq!(find_order_n_element(31, 2).unwrap(), 30);
        assert_eq!(
            find_order_n_element(31, 4),
            Err(NttError::NoSuchElement { p: 31, n: 4 })
        );
        assert_eq!(find_order_n_element(24, 6), Err(NttError::NotPrime(24)));
    }

    #[test]
    fn matrix_rows_match_known_kernel() {
        let t = NttTransform::new(31, 6).unwrap();
        assert_eq!(t.generator(), 6);
        let l = t.matrix();
        assert_eq!(l[0], vec![1, 1, 1, 1, 1, 1]);
        assert_eq!(l[1], vec![1, 6, 5, 30, 25, 26]);
        assert_eq!(l[3], vec![1, 30, 1, 30, 1, 30]);
    }

    #[test]
    fn inverse_matrix_and_scale() {
        let t = NttTransform::new(31, 6).unwrap();
        let li = t.inverse_matrix_unscaled();
        assert_eq!(li[1], vec![1, 26, 25, 30, 5, 6]);
        assert_eq!(t.inverse_scale(), 26);
    }

    #[test]
    fn forward_known_vectors() {
        let t = NttTransform::new(31, 6).unwrap();
        let h = t.forward(&vec31(&[1, 0, 0, 0, 0, 0])).unwrap();
        assert_eq!(h.values(), &[1, 1, 1, 1, 1, 1]);
        let h = t.forward(&vec31(&[0, 1, 0, 0, 0, 0])).unwrap();
        assert_eq!(h.values(), &[1, 6, 5, 30, 25, 26]);
        let h = t.forward(&vec31(&[1, 1, 1, 1, 1, 1])).unwrap();
        assert_eq!(h.values(), &[6, 0, 0, 0, 0, 0]);
    }

    #[test]
    fn inverse_round_trips() {
        let t = NttTransform::new(31, 6).unwrap();
        let f = vec31(&[1, 2, 3, 4, 5, 6]);
        let back = t.inverse(&t.forward(&f).unwrap()).unwrap();
        assert_eq!(back, f);
    }

    #[test]
    fn with_generator_validates_order() {
        assert!(NttTransform::with_generator(31, 6, 6).is_ok());
        assert_eq!(
            NttTransform::with_generator(31, 6, 2),
            Err(NttError::InvalidGenerator { g: 2, p: 31, order: 5, expected: 6 })
        );
    }

    #[test]
    fn kernel_products_are_identity() {
        for (p, n) in [(31u64, 6usize), (13, 4), (13, 6), (13, 12)] {
            let t = NttTransform::new(p, n).unwrap();
            let m = Modulus::new(p).unwrap();
            let l = t.matrix();
            let li = t.inverse_matrix_unscaled();
            let scale = t.inverse_scale();
            for i in 0..n {
                for j in 0..n {
                    let mut acc = 0u64;
                    for k in 0..n {
                        acc = m.add(acc, m.mul(l[i][k], li[k][j]));
                    }
                    acc = m.mul(acc, scale);
                    assert_eq!(acc, u64::from(i == j), "p={p} n={n} ({i},{j})");
                }
            }
        }
    }

    #[test]
    fn shift_multiplies_spectrum_by_twiddles() {
        let t = NttTransform::new(31, 6).unwrap();
        let m = Modulus::new(31).unwrap();
        let f = vec31(&[3, 1, 4, 1, 5, 9]);
        let spectrum = t.forward(&f).unwrap();
        let shifted = t.forward(&f.rotated(1)).unwrap();
        for (i, (&a, &b)) in spectrum.values().iter().zip(shifted.values()).enumerate() {
            assert_eq!(b, m.mul(a, m.pow(6, i as u64)));
        }
    }

    #[test]
    fn rejects_mismatched_input() {
        let t = NttTransform::new(31, 6).unwrap();
        let short = vec31(&[1, 2, 3]);
        assert!(matches!(
            t.forward(&short),
            Err(NttError::DimensionMismatch { .. })
        ));
        let wrong = ResidueVector::new(&[1, 2, 3, 4, 5, 6], Modulus::new(13).unwrap());
        assert!(matches!(
            t.forward(&wrong),
            Err(NttError::ModulusMismatch { .. })
        ));
    }
}
