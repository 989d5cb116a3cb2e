//! Exact modular arithmetic over small residue rings.
//!
//! Everything works on canonical residues in `[0, m)`. Products are taken
//! through `u128` intermediates and reduced eagerly, so no input modulus can
//! overflow a dot product.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

/// Largest composite modulus accepted by the brute-force square-root scan.
pub const SQRT_BRUTE_FORCE_LIMIT: u64 = 1 << 20;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ModArithError {
    #[error("modulus {0} is degenerate (must be at least 2)")]
    DegenerateModulus(i128),
    #[error("{value} is not invertible modulo {modulus}")]
    NotInvertible { value: i128, modulus: u64 },
    #[error("square roots modulo composite {0} are only supported up to 2^20")]
    UnsupportedModulus(u64),
    #[error("element has no multiplicative order (zero or shares a factor with the modulus)")]
    InvalidElement,
    #[error("zero denominator")]
    ZeroDenominator,
}

/// A modulus `m >= 2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Modulus(u64);

impl Modulus {
    pub fn new(m: u64) -> Result<Self, ModArithError> {
        if m < 2 {
            return Err(ModArithError::DegenerateModulus(m as i128));
        }
        Ok(Modulus(m))
    }

    pub fn get(self) -> u64 {
        self.0
    }

    /// Canonical representative of `x` in `[0, m)`.
    pub fn reduce(self, x: i128) -> u64 {
        let m = self.0 as i128;
        x.rem_euclid(m) as u64
    }

    pub fn add(self, a: u64, b: u64) -> u64 {
        debug_assert!(a < self.0 && b < self.0);
        let s = a as u128 + b as u128;
        (s % self.0 as u128) as u64
    }

    pub fn sub(self, a: u64, b: u64) -> u64 {
        debug_assert!(a < self.0 && b < self.0);
        if a >= b {
            a - b
        } else {
            self.0 - b + a
        }
    }

    pub fn mul(self, a: u64, b: u64) -> u64 {
        (a as u128 * b as u128 % self.0 as u128) as u64
    }

    pub fn neg(self, a: u64) -> u64 {
        debug_assert!(a < self.0);
        if a == 0 {
            0
        } else {
            self.0 - a
        }
    }

    pub fn pow(self, base: u64, mut exp: u64) -> u64 {
        let mut base = base % self.0;
        let mut acc = 1 % self.0;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }

    pub fn inv(self, a: u64) -> Result<u64, ModArithError> {
        mod_inv(a as i128, self)
    }
}

impl fmt::Display for Modulus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Non-negative gcd of two integers.
pub fn gcd(a: i128, b: i128) -> i128 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Extended Euclid: returns `(g, x, y)` with `g = gcd(|a|, |b|) >= 0` and
/// `a*x + b*y = g` exactly. When `b != 0` the coefficient `x` is canonicalized
/// into `[0, |b|/g)` so the output is deterministic.
pub fn egcd(a: i128, b: i128) -> (i128, i128, i128) {
    let (mut old_r, mut r) = (a, b);
    let (mut old_s, mut s) = (1i128, 0i128);
    let (mut old_t, mut t) = (0i128, 1i128);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
        (old_t, t) = (t, old_t - q * t);
    }
    let (mut g, mut x, mut y) = (old_r, old_s, old_t);
    if g < 0 {
        g = -g;
        x = -x;
        y = -y;
    }
    if b != 0 && g != 0 {
        let k = (b / g).abs();
        x = x.rem_euclid(k);
        y = (g - a * x) / b;
    }
    (g, x, y)
}

/// Inverse of `a` modulo `m`.
pub fn mod_inv(a: i128, m: Modulus) -> Result<u64, ModArithError> {
    let r = m.reduce(a);
    let (g, x, _) = egcd(r as i128, m.get() as i128);
    if g != 1 {
        return Err(ModArithError::NotInvertible {
            value: a,
            modulus: m.get(),
        });
    }
    Ok(m.reduce(x))
}

/// `num / den` lifted into `Z_m`, i.e. `num * den^{-1} mod m`.
pub fn lift_rational(num: i128, den: i128, m: Modulus) -> Result<u64, ModArithError> {
    let den_inv = mod_inv(den, m).map_err(|_| ModArithError::NotInvertible {
        value: den,
        modulus: m.get(),
    })?;
    Ok(m.mul(m.reduce(num), den_inv))
}

/// Deterministic Miller-Rabin, exact for every `u64`.
pub fn is_prime(n: u64) -> bool {
    const WITNESSES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    if n < 2 {
        return false;
    }
    for &p in &WITNESSES {
        if n % p == 0 {
            return n == p;
        }
    }
    let m = Modulus(n);
    let mut d = n - 1;
    let mut s = 0u32;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for &w in &WITNESSES {
        let mut x = m.pow(w, d);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = m.mul(x, x);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// All square roots of `c` modulo `m`, ascending.
///
/// Prime moduli go through Tonelli-Shanks; composite moduli up to
/// [`SQRT_BRUTE_FORCE_LIMIT`] are scanned exhaustively. Larger composites
/// would need a factorization and are rejected.
pub fn mod_sqrt(c: i128, m: Modulus) -> Result<Vec<u64>, ModArithError> {
    let c = m.reduce(c);
    let n = m.get();
    if is_prime(n) {
        return Ok(prime_sqrt(c, m));
    }
    if n > SQRT_BRUTE_FORCE_LIMIT {
        return Err(ModArithError::UnsupportedModulus(n));
    }
    let mut roots = Vec::new();
    for r in 0..n {
        if m.mul(r, r) == c {
            roots.push(r);
        }
    }
    Ok(roots)
}

fn prime_sqrt(c: u64, m: Modulus) -> Vec<u64> {
    let p = m.get();
    if c == 0 {
        return vec![0];
    }
    if p == 2 {
        return vec![1];
    }
    if m.pow(c, (p - 1) / 2) != 1 {
        return Vec::new();
    }
    let r = if p % 4 == 3 {
        m.pow(c, (p + 1) / 4)
    } else {
        tonelli_shanks(c, m)
    };
    let mut roots = vec![r, p - r];
    roots.sort_unstable();
    roots.dedup();
    roots
}

// Tonelli-Shanks for p = 1 mod 4; the caller guarantees c is a residue.
fn tonelli_shanks(c: u64, m: Modulus) -> u64 {
    let p = m.get();
    let mut q = p - 1;
    let mut s = 0u32;
    while q % 2 == 0 {
        q /= 2;
        s += 1;
    }
    let z = (2..p)
        .find(|&z| m.pow(z, (p - 1) / 2) == p - 1)
        .expect("a quadratic non-residue exists for every odd prime");
    let mut max_pow = s;
    let mut g = m.pow(z, q);
    let mut t = m.pow(c, q);
    let mut r = m.pow(c, (q + 1) / 2);
    while t != 1 {
        let mut i = 0u32;
        let mut t2 = t;
        while t2 != 1 {
            t2 = m.mul(t2, t2);
            i += 1;
        }
        let b = m.pow(g, 1u64 << (max_pow - i - 1));
        r = m.mul(r, b);
        g = m.mul(b, b);
        t = m.mul(t, g);
        max_pow = i;
    }
    r
}

/// Smallest `k >= 1` with `g^k = 1 mod p`, for prime `p` and a unit `g`.
pub fn element_order(g: i128, p: Modulus) -> Result<u64, ModArithError> {
    let r = p.reduce(g);
    if r == 0 || gcd(r as i128, p.get() as i128) != 1 {
        return Err(ModArithError::InvalidElement);
    }
    for d in divisors(p.get() - 1) {
        if p.pow(r, d) == 1 {
            return Ok(d);
        }
    }
    // Unreachable for prime p by Fermat; non-prime moduli violate the
    // precondition and land here.
    Err(ModArithError::InvalidElement)
}

fn divisors(n: u64) -> Vec<u64> {
    let mut divs = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n % d == 0 {
            divs.push(d);
            if d != n / d {
                divs.push(n / d);
            }
        }
        d += 1;
    }
    divs.sort_unstable();
    divs
}

/// An exact rational with reduced terms and a positive denominator.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Rational {
    num: i128,
    den: i128,
}

impl Rational {
    pub fn new(num: i128, den: i128) -> Result<Self, ModArithError> {
        if den == 0 {
            return Err(ModArithError::ZeroDenominator);
        }
        let g = gcd(num, den).max(1);
        let sign = if den < 0 { -1 } else { 1 };
        Ok(Rational {
            num: sign * num / g,
            den: sign * den / g,
        })
    }

    pub fn from_int(n: i128) -> Self {
        Rational { num: n, den: 1 }
    }

    pub fn numer(self) -> i128 {
        self.num
    }

    pub fn denom(self) -> i128 {
        self.den
    }

    pub fn is_zero(self) -> bool {
        self.num == 0
    }

    pub fn is_integer(self) -> bool {
        self.den == 1
    }

    pub fn as_integer(self) -> Option<i128> {
        self.is_integer().then_some(self.num)
    }

    /// This rational lifted into `Z_m`.
    pub fn lift(self, m: Modulus) -> Result<u64, ModArithError> {
        lift_rational(self.num, self.den, m)
    }
}

impl std::ops::Add for Rational {
    type Output = Rational;
    fn add(self, rhs: Rational) -> Rational {
        Rational::new(self.num * rhs.den + rhs.num * self.den, self.den * rhs.den)
            .expect("denominators are nonzero")
    }
}

impl std::ops::Mul for Rational {
    type Output = Rational;
    fn mul(self, rhs: Rational) -> Rational {
        Rational::new(self.num * rhs.num, self.den * rhs.den).expect("denominators are nonzero")
    }
}

impl From<i128> for Rational {
    fn from(n: i128) -> Self {
        Rational::from_int(n)
    }
}

impl FromStr for Rational {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let (num, den) = match s.split_once('/') {
            Some((n, d)) => (
                n.trim().parse::<i128>().map_err(|e| e.to_string())?,
                d.trim().parse::<i128>().map_err(|e| e.to_string())?,
            ),
            None => (s.parse::<i128>().map_err(|e| e.to_string())?, 1),
        };
        Rational::new(num, den).map_err(|e| e.to_string())
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == 1 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}
