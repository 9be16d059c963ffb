//! Closed forms for paths, cycles, stars and the three-handle broom.
//!
//! The path and cycle formulas are Binet expressions; evaluated through
//! Fibonacci and Lucas numbers they reduce to integer arithmetic with
//! one division by five, which must be exact and is asserted so.

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::Zero;
use thiserror::Error;

use crate::exact::BigCount;
use crate::fib::{fibonacci, lucas};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ClosedFormError {
    #[error("cycle order {0} below minimum of 3")]
    CycleTooSmall(usize),
    #[error("star order {0} below minimum of 3")]
    StarTooSmall(usize),
    #[error("broom order {0} below minimum of 4")]
    BroomTooSmall(usize),
}

/// Z_0(P_n) = F(n+1); by convention 1 for n <= 1.
pub fn z0_path_closed(n: usize) -> BigCount {
    fibonacci(n + 1)
}

/// sigma_1(P_n) = ((n-1) L(n) + 2 F(n-1)) / 5, zero for n <= 1.
pub fn sigma1_path_closed(n: usize) -> BigCount {
    if n <= 1 {
        return BigCount::zero();
    }
    let numerator = BigUint::from(n as u64 - 1) * lucas(n) + 2u32 * fibonacci(n - 1);
    let (q, r) = numerator.div_rem(&BigUint::from(5u32));
    assert!(r.is_zero(), "path sigma_1 numerator must divide by 5");
    q
}

/// Z_1(P_n) = sigma_1(P_{n-1}); zero for n <= 2.
pub fn z1_path_closed(n: usize) -> BigCount {
    if n <= 2 {
        return BigCount::zero();
    }
    sigma1_path_closed(n - 1)
}

/// sigma_1(C_n) = n F(n-2) for n >= 3.
pub fn sigma1_cycle_closed(n: usize) -> Result<BigCount, ClosedFormError> {
    if n < 3 {
        return Err(ClosedFormError::CycleTooSmall(n));
    }
    Ok(BigUint::from(n as u64) * fibonacci(n - 2))
}

/// Z_1(C_n) = sigma_1(C_n) for n >= 3.
pub fn z1_cycle_closed(n: usize) -> Result<BigCount, ClosedFormError> {
    sigma1_cycle_closed(n)
}

/// Z_1(K_{1,n-1}) = (n-1)(n-2)/2: the one-pair subsets of a star are
/// exactly its edge pairs.
pub fn z1_star_closed(n: usize) -> Result<BigCount, ClosedFormError> {
    if n < 3 {
        return Err(ClosedFormError::StarTooSmall(n));
    }
    Ok(BigUint::from((n as u64 - 1) * (n as u64 - 2) / 2))
}

/// Z_1(B^3_n) = (n-3)^2 + 1 for the broom with a three-vertex handle.
pub fn z1_broom3_closed(n: usize) -> Result<BigCount, ClosedFormError> {
    if n < 4 {
        return Err(ClosedFormError::BroomTooSmall(n));
    }
    Ok(BigUint::from((n as u64 - 3) * (n as u64 - 3) + 1))
}
