//! Integer utilities: deterministic primality, gcd, continued fractions and
//! overflow-checked helpers.
//!
//! Every quantity in this crate is a signed 64-bit integer. Overflow is always
//! reported as [`Error::Overflow`], never wrapped.

use crate::error::{Error, Result};

/// Witnesses that make Miller-Rabin deterministic for every `u64`.
const MR_WITNESSES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Deterministic primality test over the whole `u64` range.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for &sp in &MR_WITNESSES {
        if n % sp == 0 {
            return n == sp;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for &a in &MR_WITNESSES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Greatest common divisor of a nonempty list of positive integers.
pub fn gcd_all(values: &[u64]) -> Result<u64> {
    let (&first, rest) = values
        .split_first()
        .ok_or_else(|| Error::input("gcd of an empty list"))?;
    if values.contains(&0) {
        return Err(Error::input("gcd_all expects positive integers"));
    }
    Ok(rest.iter().fold(first, |g, &v| gcd(g, v)))
}

/// Simple continued fraction `num/den = q1 + 1/(q2 + 1/(... + 1/qn))`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ContinuedFraction {
    pub numerator: u64,
    pub denominator: u64,
    pub partial_quotients: Vec<u64>,
}

impl ContinuedFraction {
    /// Folds the partial quotients back into a reduced fraction.
    pub fn fold(&self) -> Result<(u64, u64)> {
        let mut quotients = self.partial_quotients.iter().rev();
        let Some(&last) = quotients.next() else {
            return Err(Error::input("empty continued fraction"));
        };
        let (mut num, mut den) = (last, 1u64);
        for &a in quotients {
            let next = a
                .checked_mul(num)
                .and_then(|v| v.checked_add(den))
                .ok_or(Error::Overflow("continued fraction fold"))?;
            (num, den) = (next, num);
        }
        Ok((num, den))
    }

    /// Convergents `h_k / k_k` in order.
    pub fn convergents(&self) -> Result<Vec<(u64, u64)>> {
        let (mut h_prev, mut h) = (1u64, 0u64);
        let (mut k_prev, mut k) = (0u64, 1u64);
        let mut out = Vec::with_capacity(self.partial_quotients.len());
        for &a in &self.partial_quotients {
            let h_next = a
                .checked_mul(h_prev)
                .and_then(|v| v.checked_add(h))
                .ok_or(Error::Overflow("convergent numerator"))?;
            let k_next = a
                .checked_mul(k_prev)
                .and_then(|v| v.checked_add(k))
                .ok_or(Error::Overflow("convergent denominator"))?;
            (h, h_prev) = (h_prev, h_next);
            (k, k_prev) = (k_prev, k_next);
            out.push((h_prev, k_prev));
        }
        Ok(out)
    }
}

/// Canonical expansion of `num/den` for coprime `num > den >= 1`.
pub fn continued_fraction(num: u64, den: u64) -> Result<ContinuedFraction> {
    if den == 0 || num <= den {
        return Err(Error::input(format!(
            "continued fraction needs num > den >= 1, got {num}/{den}"
        )));
    }
    if gcd(num, den) != 1 {
        return Err(Error::input(format!("{num}/{den} is not in lowest terms")));
    }
    let mut partial_quotients = Vec::new();
    let (mut a, mut b) = (num, den);
    while b != 0 {
        partial_quotients.push(a / b);
        (a, b) = (b, a % b);
    }
    Ok(ContinuedFraction {
        numerator: num,
        denominator: den,
        partial_quotients,
    })
}

pub(crate) fn add(a: i64, b: i64, what: &'static str) -> Result<i64> {
    a.checked_add(b).ok_or(Error::Overflow(what))
}

pub(crate) fn sub(a: i64, b: i64, what: &'static str) -> Result<i64> {
    a.checked_sub(b).ok_or(Error::Overflow(what))
}

pub(crate) fn mul(a: i64, b: i64, what: &'static str) -> Result<i64> {
    a.checked_mul(b).ok_or(Error::Overflow(what))
}

/// Dot product with overflow checks on every step.
pub(crate) fn dot(coeffs: &[i64], weights: &[i64], what: &'static str) -> Result<i64> {
    coeffs
        .iter()
        .zip(weights)
        .try_fold(0i64, |acc, (&c, &w)| add(acc, mul(c, w, what)?, what))
}
