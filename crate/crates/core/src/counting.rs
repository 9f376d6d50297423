//! Closed-form counts of gluings, fixed points and isomorphism classes.
//!
//! Every orbit count is a Burnside average over the rotation group. The
//! sums are divided only after checking they are exact multiples of the
//! group order; a remainder means a formula is wrong, never something to
//! round away.

use std::fmt::Write as _;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};

pub fn factorial(n: u64) -> BigUint {
    (2..=n).fold(BigUint::one(), |acc, i| acc * i)
}

/// `m!! = m (m-2) ... 1` for odd `m`, with `(-1)!! = 1`.
pub fn double_factorial(m: i64) -> Result<BigUint> {
    if m < -1 {
        return Err(Error::NegativeInput(m));
    }
    if m.rem_euclid(2) == 0 {
        return Err(Error::EvenInput(m));
    }
    Ok((1..=m.max(0) as u64).step_by(2).fold(BigUint::one(), |acc, i| acc * i))
}

/// Euler's totient; `euler_phi(1) = 1`.
///
/// Panics if `q == 0`.
pub fn euler_phi(q: u64) -> u64 {
    assert!(q >= 1, "euler_phi is defined for q >= 1");
    let mut rest = q;
    let mut phi = q;
    let mut p = 2;
    while p * p <= rest {
        if rest.is_multiple_of(p) {
            while rest.is_multiple_of(p) {
                rest /= p;
            }
            phi -= phi / p;
        }
        p += 1;
    }
    if rest > 1 {
        phi -= phi / rest;
    }
    phi
}

pub fn is_prime(p: u64) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
}

pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    // each partial product is itself a binomial coefficient, so the
    // division is exact at every step
    (0..k).fold(BigUint::one(), |acc, i| acc * (n - i) / (i + 1))
}

fn divisors(n: u64) -> impl Iterator<Item = u64> {
    (1..=n).filter(move |d| n.is_multiple_of(*d))
}

/// Matchings of `cycles * len` points that are invariant under a rotation
/// whose cycles on the points all have length `len`.
///
/// With `len` odd no chord can stay inside a cycle, so the cycles pair up
/// and each pair can be matched with `len` offsets. With `len` even, `2r`
/// cycles pair up and the rest are matched across their own diameter.
fn rotation_invariant_matchings(cycles: u64, len: u64) -> BigUint {
    let len_big = BigUint::from(len);
    if len % 2 == 1 {
        debug_assert!(cycles.is_multiple_of(2));
        double_factorial(cycles as i64 - 1).expect("odd") * len_big.pow((cycles / 2) as u32)
    } else {
        (0..=cycles / 2)
            .map(|r| {
                binomial(cycles, 2 * r)
                    * double_factorial(2 * r as i64 - 1).expect("odd")
                    * len_big.pow(r as u32)
            })
            .sum()
    }
}

fn check_size(n: usize) -> Result<u64> {
    if n == 0 {
        Err(Error::ZeroSize)
    } else {
        Ok(n as u64)
    }
}

fn exact_quotient(sum: BigUint, order: u64) -> Result<BigUint> {
    let order_big = BigUint::from(order);
    if !(&sum % &order_big).is_zero() {
        return Err(Error::DivisibilityViolation { sum, order });
    }
    Ok(sum / order_big)
}

/// Number of gluings fixed by the rotation by `2m`, for `m | n`.
pub fn p_fixed_colored(n: usize, m: usize) -> Result<BigUint> {
    let n = check_size(n)?;
    let m = m as u64;
    if m == 0 || n % m != 0 {
        return Err(Error::NonDivisor { divisor: m, value: n });
    }
    Ok(rotation_invariant_matchings(2 * m, n / m))
}

/// Number of uncolored chord diagrams fixed by the rotation by `k`, for
/// `k | 2n`.
pub fn fix_uncolored(n: usize, k: usize) -> Result<BigUint> {
    let n = check_size(n)?;
    let k = k as u64;
    if k == 0 || (2 * n) % k != 0 {
        return Err(Error::NonDivisor { divisor: k, value: 2 * n });
    }
    Ok(rotation_invariant_matchings(k, 2 * n / k))
}

/// Number of O-gluings fixed by the rotation by `2i`, for `i | n`:
/// `i! (n/i)^i`.
pub fn chi_o_fixed(n: usize, i: usize) -> Result<BigUint> {
    let n = check_size(n)?;
    let i = i as u64;
    if i == 0 || n % i != 0 {
        return Err(Error::NonDivisor { divisor: i, value: n });
    }
    Ok(factorial(i) * BigUint::from(n / i).pow(i as u32))
}

/// Non-isomorphic uncolored chord diagrams (all `2n` rotations).
pub fn d_star(n: usize) -> Result<BigUint> {
    let n64 = check_size(n)?;
    let mut sum = BigUint::zero();
    for k in divisors(2 * n64) {
        sum += BigUint::from(euler_phi(2 * n64 / k)) * fix_uncolored(n, k as usize)?;
    }
    exact_quotient(sum, 2 * n64)
}

/// Non-isomorphic color chord diagrams (even rotations).
pub fn d_double_star(n: usize) -> Result<BigUint> {
    let n64 = check_size(n)?;
    let mut sum = BigUint::zero();
    for m in divisors(n64) {
        sum += BigUint::from(euler_phi(n64 / m)) * p_fixed_colored(n, m as usize)?;
    }
    exact_quotient(sum, n64)
}

fn check_odd_prime(p: usize) -> Result<u64> {
    let p = p as u64;
    if p < 3 || !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    Ok(p)
}

/// `(2p-1)!!/p + p - 1` for an odd prime `p`.
pub fn d_double_star_prime(p: usize) -> Result<BigUint> {
    let p = check_odd_prime(p)?;
    let total = double_factorial(2 * p as i64 - 1)?;
    Ok(exact_quotient(total, p)? + (p - 1))
}

/// Non-isomorphic O-diagrams.
pub fn d_o(n: usize) -> Result<BigUint> {
    let n64 = check_size(n)?;
    let mut sum = BigUint::zero();
    for i in divisors(n64) {
        sum += BigUint::from(euler_phi(n64 / i)) * chi_o_fixed(n, i as usize)?;
    }
    exact_quotient(sum, n64)
}

/// `(p-1)! + p - 1` for an odd prime `p`.
pub fn d_o_prime(p: usize) -> Result<BigUint> {
    let p = check_odd_prime(p)?;
    Ok(factorial(p - 1) + (p - 1))
}

/// Non-isomorphic N-diagrams. Zero at `n = 1`, where the only gluing is O.
pub fn d_n_class(n: usize) -> Result<BigUint> {
    Ok(d_double_star(n)? - d_o(n)?)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FixedPoints {
    /// The rotation `2m` with `m | n`.
    pub shift: usize,
    #[serde(serialize_with = "crate::serde_big::serialize")]
    pub all: BigUint,
    #[serde(serialize_with = "crate::serde_big::serialize")]
    pub o: BigUint,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CountRow {
    pub n: usize,
    #[serde(serialize_with = "crate::serde_big::serialize")]
    pub total: BigUint,
    #[serde(serialize_with = "crate::serde_big::serialize")]
    pub o_total: BigUint,
    #[serde(serialize_with = "crate::serde_big::serialize")]
    pub d_star: BigUint,
    #[serde(serialize_with = "crate::serde_big::serialize")]
    pub d_double_star: BigUint,
    #[serde(serialize_with = "crate::serde_big::serialize")]
    pub d_o: BigUint,
    #[serde(serialize_with = "crate::serde_big::serialize")]
    pub d_n: BigUint,
    pub fixed_points: Vec<FixedPoints>,
}

impl CountRow {
    pub fn new(n: usize) -> Result<CountRow> {
        let n64 = check_size(n)?;
        let fixed_points = divisors(n64)
            .map(|m| {
                Ok(FixedPoints {
                    shift: 2 * m as usize,
                    all: p_fixed_colored(n, m as usize)?,
                    o: chi_o_fixed(n, m as usize)?,
                })
            })
            .collect::<Result<_>>()?;
        let d_double_star = d_double_star(n)?;
        let d_o = d_o(n)?;
        Ok(CountRow {
            n,
            total: double_factorial(2 * n64 as i64 - 1)?,
            o_total: factorial(n64),
            d_star: d_star(n)?,
            d_n: &d_double_star - &d_o,
            d_double_star,
            d_o,
            fixed_points,
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CountTable {
    pub rows: Vec<CountRow>,
}

pub const CSV_HEADER: &str = "n,total,o_total,d_star,d_double_star,d_o,d_n";

impl CountTable {
    pub fn to_csv(&self) -> String {
        let mut out = String::from(CSV_HEADER);
        out.push('\n');
        for r in &self.rows {
            let _ = writeln!(
                out,
                "{},{},{},{},{},{},{}",
                r.n, r.total, r.o_total, r.d_star, r.d_double_star, r.d_o, r.d_n
            );
        }
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("count table serializes")
    }
}

pub fn build_table(n_min: usize, n_max: usize) -> Result<CountTable> {
    if n_min == 0 || n_min > n_max {
        return Err(Error::InvalidRange { from: n_min, to: n_max });
    }
    let rows = (n_min..=n_max).map(CountRow::new).collect::<Result<_>>()?;
    Ok(CountTable { rows })
}
