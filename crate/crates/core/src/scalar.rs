//! The exact coefficient rings the library is generic over.
//!
//! Every identity checked by this crate is integral, so the only requirement on a coefficient
//! type is that it behaves like a signed integer ring with exact division. [`num_bigint::BigInt`]
//! is the default (see the aliases at the crate root); machine integers work for small inputs
//! and are handy for quick experiments, but they overflow on large products.

use std::fmt::{Debug, Display};
use std::hash::Hash;
use std::str::FromStr;

use num_integer::Integer;
use num_traits::Signed;

/// An exact signed integer ring usable as polynomial coefficients.
pub trait Coeff:
    Clone + Debug + Display + Eq + Ord + Hash + Signed + Integer + FromStr + From<i32> + Send + Sync + 'static
{
    /// Exact quotient, or `None` if `self` is not divisible by `d`.
    fn exact_div(&self, d: &Self) -> Option<Self> {
        if d.is_zero() {
            return None;
        }
        let (q, r) = self.div_rem(d);
        r.is_zero().then_some(q)
    }
}

impl<T> Coeff for T where
    T: Clone
        + Debug
        + Display
        + Eq
        + Ord
        + Hash
        + Signed
        + Integer
        + FromStr
        + From<i32>
        + Send
        + Sync
        + 'static
{
}

/// `n!` in the coefficient ring.
pub fn factorial<C: Coeff>(n: usize) -> C {
    (1..=n).fold(C::one(), |acc, k| acc * C::from(k as i32))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    #[test]
    fn exact_division() {
        assert_eq!(BigInt::from(12).exact_div(&BigInt::from(-4)), Some(BigInt::from(-3)));
        assert_eq!(7i64.exact_div(&2), None);
        assert_eq!(7i64.exact_div(&0), None);
    }

    #[test]
    fn factorials() {
        assert_eq!(factorial::<i64>(0), 1);
        assert_eq!(factorial::<i64>(5), 120);
        assert_eq!(factorial::<BigInt>(25).to_string(), "15511210043330985984000000");
    }
}
