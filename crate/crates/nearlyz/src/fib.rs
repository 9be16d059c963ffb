//! Fibonacci and Lucas numbers.
//!
//! The closed forms for path and cycle invariants are Binet-style
//! expressions in the golden ratio roots; evaluated through these
//! integer recurrences they stay exact at any order.

use num_bigint::BigUint;

/// F(0) = 0, F(1) = 1, F(n) = F(n-1) + F(n-2).
pub fn fibonacci(n: usize) -> BigUint {
    fib_pair(n).0
}

/// L(0) = 2, L(1) = 1, L(n) = L(n-1) + L(n-2).
pub fn lucas(n: usize) -> BigUint {
    // L(n) = F(n-1) + F(n+1) = 2 F(n+1) - F(n)
    let (f_n, f_n1) = fib_pair(n);
    2u32 * f_n1 - f_n
}

fn fib_pair(n: usize) -> (BigUint, BigUint) {
    let mut a = BigUint::from(0u32);
    let mut b = BigUint::from(1u32);
    for _ in 0..n {
        let next = &a + &b;
        a = b;
        b = next;
    }
    (a, b)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_values() {
        let fibs: Vec<u32> = (0..12).map(|n| fibonacci(n).try_into().unwrap()).collect();
        assert_eq!(fibs, [0, 1, 1, 2, 3, 5, 8, 13, 21, 34, 55, 89]);
        let lucs: Vec<u32> = (0..12).map(|n| lucas(n).try_into().unwrap()).collect();
        assert_eq!(lucs, [2, 1, 3, 4, 7, 11, 18, 29, 47, 76, 123, 199]);
    }

    #[test]
    fn identity_l_squared() {
        // L(n)^2 - 5 F(n)^2 = +-4
        for n in 1..60 {
            let l2 = lucas(n).pow(2);
            let f2 = 5u32 * fibonacci(n).pow(2);
            let diff = if l2 > f2 { &l2 - &f2 } else { &f2 - &l2 };
            assert_eq!(diff, BigUint::from(4u32), "n = {n}");
        }
    }
}
