//! Exact dimensions of U(n) irreducibles via the hook-content formula, plus
//! two published closed-form expressions for the complement dimension that
//! the reports cross-check.
//!
//! The closed forms are transcribed exactly as published and deliberately
//! not corrected; whether they agree with the hook-content values is
//! emitted as data, never assumed.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::partition::Partition;

/// `dim V(lambda)` for U(n): the product over diagram cells of
/// `(n + content) / hook`, taken as a single exact rational and asserted
/// integral. Shapes with more than `n` rows are rejected explicitly rather
/// than silently evaluating to zero.
pub fn dim_gl(lambda: &Partition, n: usize) -> Result<BigUint> {
    if lambda.rows() > n {
        return Err(Error::TooManyRows {
            lambda: lambda.clone(),
            n,
        });
    }
    let mut num = BigUint::one();
    let mut den = BigUint::one();
    for cell in lambda.cells() {
        let factor = n as i64 + cell.content;
        debug_assert!(factor > 0, "content bounded below by 1 - rows");
        num *= BigUint::from(factor as u64);
        den *= BigUint::from(cell.hook);
    }
    let (q, r) = num_integer::Integer::div_rem(&num, &den);
    assert!(
        r.is_zero(),
        "hook-content product for {lambda} in U({n}) is not integral"
    );
    Ok(q)
}

fn binomial(top: i64, bottom: i64) -> BigInt {
    if bottom < 0 || bottom > top {
        return BigInt::zero();
    }
    let mut acc = BigInt::one();
    for i in 0..bottom {
        acc = acc * BigInt::from(top - i) / BigInt::from(i + 1);
    }
    acc
}

fn ratio(num: BigInt, den: i64) -> BigRational {
    BigRational::new(num, BigInt::from(den))
}

/// Published binomial expression for the real dimension of the complement
/// module at `(m, k)`:
///
/// ```text
///   1/(k+1)^2 * C(m-1+k, m-1) * C(m-2+k, m-2)
///             * (k + 1 + C(m-1+k, m-1) * C(m-2+k, m-2))
///   - 2/(2k+1) * C(m-1+2k, m-1) * C(m-2+2k, m-2)
/// ```
///
/// Evaluated with exact rationals, verbatim.
pub fn complement_dim_binomial_form(m: u32, k: u32) -> BigInt {
    let m = i64::from(m);
    let k = i64::from(k);
    let a = binomial(m - 1 + k, m - 1);
    let b = binomial(m - 2 + k, m - 2);
    let ab = &a * &b;
    let first = ratio(&ab * (BigInt::from(k + 1) + &ab), (k + 1) * (k + 1));
    let second = ratio(
        BigInt::from(2) * binomial(m - 1 + 2 * k, m - 1) * binomial(m - 2 + 2 * k, m - 2),
        2 * k + 1,
    );
    let value = first - second;
    assert!(
        value.is_integer(),
        "published binomial expression is not integral at m={m}, k={k}"
    );
    value.to_integer()
}

/// Published polynomial for the real dimension of the complement module at
/// `m = 2`:
///
/// ```text
///   -(2/3) (1+k)^2 (1+2k) (3+2k)
///   + (1/144) (1+k)^5 (2+k)^2 (3+k) (24 + k (4+k) (7 + k (4+k)))
/// ```
///
/// Evaluated with exact rationals, verbatim.
pub fn complement_dim_m2_polynomial(k: u32) -> BigInt {
    let k = BigInt::from(k);
    let one = BigInt::one();
    let pow = |base: &BigInt, e: u32| -> BigInt {
        let mut acc = BigInt::one();
        for _ in 0..e {
            acc *= base;
        }
        acc
    };
    let k1 = &one + &k;
    let two_k = BigInt::from(2) * &k;
    let inner = BigInt::from(24)
        + &k * (BigInt::from(4) + &k) * (BigInt::from(7) + &k * (BigInt::from(4) + &k));
    let first = ratio(
        BigInt::from(-2) * pow(&k1, 2) * (&one + &two_k) * (BigInt::from(3) + &two_k),
        3,
    );
    let second = ratio(
        pow(&k1, 5) * pow(&(BigInt::from(2) + &k), 2) * (BigInt::from(3) + &k) * inner,
        144,
    );
    let value = first + second;
    assert!(
        value.is_integer(),
        "published m=2 polynomial is not integral at k={k}"
    );
    value.to_integer()
}
