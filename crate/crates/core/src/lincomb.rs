//! Sparse linear combinations over an exact scalar ring.
//!
//! Every basis-tagged element in this crate stores its terms as a
//! [`LinComb`] from an index type to a nonzero scalar. The scalar is generic:
//! anything satisfying [`Coeff`] works, with [`num_bigint::BigInt`] as the
//! default choice at the crate root and [`num_rational::BigRational`] used
//! where a division is unavoidable. Floating-point types do not satisfy the
//! bound (`Eq` is required): all results in scope are exact.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_traits::{FromPrimitive, Signed};

/// Exact scalar coefficient ring.
pub trait Coeff: Clone + Eq + fmt::Debug + fmt::Display + Signed + FromPrimitive {}

impl<T: Clone + Eq + fmt::Debug + fmt::Display + Signed + FromPrimitive> Coeff for T {}

/// Converts an unsigned count into a scalar.
pub(crate) fn coeff_from_count<C: Coeff>(count: u64) -> C {
    C::from_u64(count).expect("count representable in the scalar ring")
}

/// A finite formal sum of keys with nonzero scalar coefficients.
///
/// Keys are kept in a `BTreeMap`, so iteration is in increasing key order;
/// for composition and partition keys that is lexicographic order, the order
/// every serialization of this crate uses.
#[derive(Clone, PartialEq, Eq)]
pub struct LinComb<K: Ord + Clone, C: Coeff> {
    terms: BTreeMap<K, C>,
}

impl<K: Ord + Clone, C: Coeff> LinComb<K, C> {
    pub fn zero() -> Self {
        Self {
            terms: BTreeMap::new(),
        }
    }

    /// The single term `1 * key`.
    pub fn unit(key: K) -> Self {
        Self::term(key, C::one())
    }

    /// The single term `coeff * key`; the zero coefficient gives zero.
    pub fn term(key: K, coeff: C) -> Self {
        let mut out = Self::zero();
        out.add_term(key, coeff);
        out
    }

    pub fn from_terms<I: IntoIterator<Item = (K, C)>>(terms: I) -> Self {
        let mut out = Self::zero();
        for (k, c) in terms {
            out.add_term(k, c);
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of stored (nonzero) terms.
    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&K, &C)> {
        self.terms.iter()
    }

    pub fn keys(&self) -> impl Iterator<Item = &K> {
        self.terms.keys()
    }

    pub fn get(&self, key: &K) -> Option<&C> {
        self.terms.get(key)
    }

    /// The coefficient of `key`, zero if absent.
    pub fn coeff(&self, key: &K) -> C {
        self.terms.get(key).cloned().unwrap_or_else(C::zero)
    }

    /// Adds `coeff * key`, removing the entry if the sum cancels.
    pub fn add_term(&mut self, key: K, coeff: C) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(key) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get().clone() + coeff;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn add_assign(&mut self, other: &Self) {
        for (k, c) in other.iter() {
            self.add_term(k.clone(), c.clone());
        }
    }

    pub fn scale(&self, factor: &C) -> Self {
        if factor.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self
                .terms
                .iter()
                .map(|(k, c)| (k.clone(), c.clone() * factor.clone()))
                .collect(),
        }
    }

    /// Linear extension of a map on keys: each key expands to a combination
    /// and is weighted by its coefficient.
    pub fn flat_map<L: Ord + Clone>(&self, f: impl Fn(&K) -> LinComb<L, C>) -> LinComb<L, C> {
        let mut out = LinComb::zero();
        for (k, c) in self.iter() {
            for (l, d) in f(k).iter() {
                out.add_term(l.clone(), c.clone() * d.clone());
            }
        }
        out
    }

    pub fn map_coeffs<D: Coeff>(&self, f: impl Fn(&C) -> D) -> LinComb<K, D> {
        let mut out = LinComb::zero();
        for (k, c) in self.iter() {
            out.add_term(k.clone(), f(c));
        }
        out
    }
}

impl<K: Ord + Clone, C: Coeff> Add for &LinComb<K, C> {
    type Output = LinComb<K, C>;

    fn add(self, rhs: Self) -> LinComb<K, C> {
        let mut out = self.clone();
        out.add_assign(rhs);
        out
    }
}

impl<K: Ord + Clone, C: Coeff> Sub for &LinComb<K, C> {
    type Output = LinComb<K, C>;

    fn sub(self, rhs: Self) -> LinComb<K, C> {
        let mut out = self.clone();
        for (k, c) in rhs.iter() {
            out.add_term(k.clone(), -c.clone());
        }
        out
    }
}

impl<K: Ord + Clone, C: Coeff> Neg for &LinComb<K, C> {
    type Output = LinComb<K, C>;

    fn neg(self) -> LinComb<K, C> {
        LinComb {
            terms: self
                .terms
                .iter()
                .map(|(k, c)| (k.clone(), -c.clone()))
                .collect(),
        }
    }
}

impl<K: Ord + Clone + fmt::Debug, C: Coeff> fmt::Debug for LinComb<K, C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.terms.iter()).finish()
    }
}

/// Renders a combination as `a*K1 + b*K2 - ...`, folding signs into the
/// separators and hiding unit coefficients; the zero combination is "0".
pub(crate) fn fmt_terms<K: Ord + Clone, C: Coeff>(
    f: &mut fmt::Formatter<'_>,
    comb: &LinComb<K, C>,
    render_key: impl Fn(&K) -> String,
) -> fmt::Result {
    if comb.is_zero() {
        return write!(f, "0");
    }
    for (i, (k, c)) in comb.iter().enumerate() {
        let negative = c.is_negative();
        if i == 0 {
            if negative {
                write!(f, "-")?;
            }
        } else if negative {
            write!(f, " - ")?;
        } else {
            write!(f, " + ")?;
        }
        let magnitude = c.abs();
        if !magnitude.is_one() {
            write!(f, "{magnitude}*")?;
        }
        write!(f, "{}", render_key(k))?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    type L = LinComb<Vec<u32>, i64>;

    #[test]
    fn terms_cancel_to_zero() {
        let mut a = L::term(vec![2, 1], 3);
        a.add_term(vec![2, 1], -3);
        assert!(a.is_zero());
        assert_eq!(L::term(vec![1], 0), L::zero());
    }

    #[test]
    fn add_and_sub() {
        let a = L::from_terms([(vec![1], 2), (vec![2], 1)]);
        let b = L::from_terms([(vec![1], -2), (vec![3], 5)]);
        let sum = &a + &b;
        assert_eq!(sum, L::from_terms([(vec![2], 1), (vec![3], 5)]));
        let diff = &a - &a;
        assert!(diff.is_zero());
        assert_eq!(-&a, a.scale(&-1));
    }

    #[test]
    fn flat_map_is_linear() {
        let a = L::from_terms([(vec![1], 2), (vec![2], -1)]);
        let doubled = a.flat_map(|k| LinComb::term(k.clone(), 2));
        assert_eq!(doubled, a.scale(&2));
    }

    #[test]
    fn iteration_is_sorted() {
        let a = L::from_terms([(vec![3], 1), (vec![1, 2], 1), (vec![1], 1)]);
        let keys: Vec<_> = a.keys().cloned().collect();
        assert_eq!(keys, vec![vec![1], vec![1, 2], vec![3]]);
    }
}
