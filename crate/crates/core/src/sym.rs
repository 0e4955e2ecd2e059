//! The commutative symmetric functions, at the level this crate needs:
//! Schur functions of arbitrary integer tuples via the Jacobi-Trudi
//! determinant with straightening, the forgetful map from `NSym`, and the
//! Newton-identity conversion of `h` into power sums.
//!
//! Rational scalars appear only in [`h_to_p`]; every other operation is
//! integral.

use std::fmt;

use itertools::Itertools;
use num_rational::BigRational;

use crate::composition::{IntTuple, Partition};
use crate::error::{Error, Result};
use crate::lincomb::{fmt_terms, Coeff, LinComb};
use crate::nsym::{permutation_sign, NSymBasis, NSymElt};

/// Bases of the commutative symmetric functions.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SymBasis {
    /// Complete homogeneous `h`.
    H,
    /// Schur `s`.
    S,
    /// Power sum `p`.
    P,
    /// Monomial `m`.
    M,
}

impl fmt::Display for SymBasis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SymBasis::H => "h",
            SymBasis::S => "s",
            SymBasis::P => "p",
            SymBasis::M => "m",
        })
    }
}

/// A symmetric function: basis tag plus sparse combination of partitions.
#[derive(Clone, PartialEq, Eq)]
pub struct SymElt<C: Coeff> {
    pub(crate) basis: SymBasis,
    pub(crate) terms: LinComb<Partition, C>,
}

impl<C: Coeff> SymElt<C> {
    pub fn zero(basis: SymBasis) -> Self {
        Self {
            basis,
            terms: LinComb::zero(),
        }
    }

    pub fn one(basis: SymBasis) -> Self {
        Self::basis_element(basis, Partition::empty())
    }

    pub fn basis_element(basis: SymBasis, index: Partition) -> Self {
        Self {
            basis,
            terms: LinComb::unit(index),
        }
    }

    pub fn from_terms<I: IntoIterator<Item = (Partition, C)>>(basis: SymBasis, terms: I) -> Self {
        Self {
            basis,
            terms: LinComb::from_terms(terms),
        }
    }

    pub fn basis(&self) -> SymBasis {
        self.basis
    }

    pub fn terms(&self) -> &LinComb<Partition, C> {
        &self.terms
    }

    pub fn coeff(&self, index: &Partition) -> C {
        self.terms.coeff(index)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_zero()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.num_terms()
    }

    pub fn degree(&self) -> Option<u32> {
        let mut degree = None;
        for k in self.terms.keys() {
            match degree {
                None => degree = Some(k.size()),
                Some(d) if d == k.size() => {}
                Some(_) => return None,
            }
        }
        degree
    }

    pub fn map_coeffs<D: Coeff>(&self, f: impl Fn(&C) -> D) -> SymElt<D> {
        SymElt {
            basis: self.basis,
            terms: self.terms.map_coeffs(f),
        }
    }
}

impl<C: Coeff> fmt::Display for SymElt<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let basis = self.basis;
        fmt_terms(f, &self.terms, |k| format!("{basis}[{k}]"))
    }
}

impl<C: Coeff> fmt::Debug for SymElt<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Result of straightening a Schur index.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Straightened {
    /// `s_alpha = 0`.
    Zero,
    /// `s_alpha = sign * s_partition`.
    NonZero { sign: i32, partition: Partition },
}

/// Straightens an arbitrary integer tuple: `s_alpha` vanishes iff two
/// entries satisfy `alpha_i - i = alpha_j - j`; otherwise the unique
/// permutation sorting `alpha_i - i` decreasingly produces
/// `sign * s_lambda`. Straightened parts equal to 0 are dropped (`h_0 = 1`);
/// a negative straightened part forces zero (`h_{-m} = 0`).
pub fn schur_straighten(alpha: &IntTuple) -> Straightened {
    let staircase: Vec<i64> = alpha
        .entries()
        .iter()
        .enumerate()
        .map(|(i, &a)| a - (i as i64 + 1))
        .collect();
    let mut order: Vec<usize> = (0..staircase.len()).collect();
    order.sort_by_key(|&i| std::cmp::Reverse(staircase[i]));
    for w in order.windows(2) {
        if staircase[w[0]] == staircase[w[1]] {
            return Straightened::Zero;
        }
    }
    // sign of the permutation sending position i to order[i]
    let sigma: Vec<i64> = order.iter().map(|&i| i as i64 + 1).collect();
    let sign = permutation_sign(&sigma);
    let mut parts = Vec::with_capacity(order.len());
    for (i, &src) in order.iter().enumerate() {
        let entry = staircase[src] + (i as i64 + 1);
        if entry < 0 {
            return Straightened::Zero;
        }
        if entry > 0 {
            parts.push(entry as u32);
        }
    }
    let partition = Partition::new(parts).expect("sorted staircase yields a partition");
    Straightened::NonZero { sign, partition }
}

/// The Schur function `s_alpha` of an arbitrary integer tuple, expanded in
/// the `h` basis through the Jacobi-Trudi determinant
/// `det |h_{alpha_i + j - i}|` with `h_0 = 1` and `h_{-m} = 0`.
pub fn schur_to_h<C: Coeff>(alpha: &IntTuple) -> SymElt<C> {
    let l = alpha.len();
    let mut acc = LinComb::zero();
    'sigma: for sigma in (1..=l as i64).permutations(l) {
        let mut parts: Vec<u32> = Vec::with_capacity(l);
        for (i, &a) in alpha.entries().iter().enumerate() {
            let e = a + sigma[i] - (i as i64 + 1);
            if e < 0 {
                continue 'sigma;
            }
            if e > 0 {
                parts.push(e as u32);
            }
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        let key = Partition::new(parts).expect("sorted positive parts");
        let one = C::one();
        acc.add_term(key, if permutation_sign(&sigma) < 0 { -one } else { one });
    }
    SymElt {
        basis: SymBasis::H,
        terms: acc,
    }
}

/// The forgetful map `chi: NSym -> Sym`, sending `H_alpha` to
/// `h_{a_1} h_{a_2} ... = h_{sort(alpha)}`. Elements in other bases are
/// routed through their `H` expansion.
pub fn forgetful<C: Coeff>(f: &NSymElt<C>) -> SymElt<C> {
    let h = f.to_basis(NSymBasis::H).expect("H is always reachable");
    let mut acc = LinComb::zero();
    for (idx, c) in h.terms().iter() {
        acc.add_term(idx.sorted_partition(), c.clone());
    }
    SymElt {
        basis: SymBasis::H,
        terms: acc,
    }
}

/// Multiplies two power-sum basis indices: merge the part multisets.
fn p_merge(a: &Partition, b: &Partition) -> Partition {
    let mut parts: Vec<u32> = a.parts().iter().chain(b.parts()).copied().collect();
    parts.sort_unstable_by(|x, y| y.cmp(x));
    Partition::new(parts).expect("merged positive parts")
}

/// `h_n` in the power-sum basis with rational coefficients, for n = 0..=max,
/// by the Newton recurrence `n h_n = sum_{k=1}^{n} p_k h_{n-k}`.
fn h_in_p_table(max: u32) -> Vec<LinComb<Partition, BigRational>> {
    let mut table: Vec<LinComb<Partition, BigRational>> = Vec::with_capacity(max as usize + 1);
    table.push(LinComb::unit(Partition::empty()));
    for n in 1..=max {
        let mut acc: LinComb<Partition, BigRational> = LinComb::zero();
        let inv_n = BigRational::new(1.into(), (n as i64).into());
        for k in 1..=n {
            let p_k = Partition::new([k]).expect("positive part");
            for (idx, c) in table[(n - k) as usize].iter() {
                acc.add_term(p_merge(&p_k, idx), c * &inv_n);
            }
        }
        table.push(acc);
    }
    table
}

/// Converts an `h`-basis element to the power-sum basis via the Newton
/// identities. Coefficients are rational in general, which is why this
/// operation is only offered over [`BigRational`] scalars; the integral
/// checks in this crate compare both sides after conversion.
pub fn h_to_p(f: &SymElt<BigRational>) -> Result<SymElt<BigRational>> {
    if f.basis != SymBasis::H {
        return Err(Error::BasisMismatch {
            expected: SymBasis::H.to_string(),
            found: f.basis.to_string(),
        });
    }
    let max = f.terms.keys().map(Partition::size).max().unwrap_or(0);
    let table = h_in_p_table(max);
    let mut acc: LinComb<Partition, BigRational> = LinComb::zero();
    for (lambda, c) in f.terms.iter() {
        // h_lambda = product of the h_{lambda_i}, multiplied out in p.
        let mut prod: LinComb<Partition, BigRational> = LinComb::unit(Partition::empty());
        for &part in lambda.parts() {
            let mut next = LinComb::zero();
            for (a, ca) in prod.iter() {
                for (b, cb) in table[part as usize].iter() {
                    next.add_term(p_merge(a, b), ca * cb);
                }
            }
            prod = next;
        }
        for (idx, d) in prod.iter() {
            acc.add_term(idx.clone(), c * d);
        }
    }
    Ok(SymElt {
        basis: SymBasis::P,
        terms: acc,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::composition::Composition;
    use num_traits::One;

    type Elt = SymElt<i64>;

    fn part(parts: &[u32]) -> Partition {
        Partition::new(parts.iter().copied()).unwrap()
    }

    fn h_terms(terms: &[(&[u32], i64)]) -> Elt {
        SymElt::from_terms(SymBasis::H, terms.iter().map(|(p, c)| (part(p), *c)))
    }

    #[test]
    fn straighten_examples() {
        assert_eq!(
            schur_straighten(&IntTuple::new([1, 3])),
            Straightened::NonZero {
                sign: -1,
                partition: part(&[2, 2])
            }
        );
        assert_eq!(
            schur_straighten(&IntTuple::new([2, 2, 2, 1])),
            Straightened::NonZero {
                sign: 1,
                partition: part(&[2, 2, 2, 1])
            }
        );
        assert_eq!(schur_straighten(&IntTuple::new([1, 2])), Straightened::Zero);
        // Zero parts are dropped; negatives kill.
        assert_eq!(
            schur_straighten(&IntTuple::new([2, 0])),
            Straightened::NonZero {
                sign: 1,
                partition: part(&[2])
            }
        );
        assert_eq!(schur_straighten(&IntTuple::new([-1])), Straightened::Zero);
        assert_eq!(
            schur_straighten(&IntTuple::new([])),
            Straightened::NonZero {
                sign: 1,
                partition: Partition::empty()
            }
        );
    }

    #[test]
    fn schur_to_h_small_cases() {
        for a in 1..=5 {
            assert_eq!(
                schur_to_h::<i64>(&IntTuple::new([a])),
                Elt::basis_element(SymBasis::H, part(&[a as u32]))
            );
        }
        assert_eq!(
            schur_to_h::<i64>(&IntTuple::new([2, 2])),
            h_terms(&[(&[2, 2], 1), (&[3, 1], -1)])
        );
        assert_eq!(
            schur_to_h::<i64>(&IntTuple::new([1, 3])),
            h_terms(&[(&[2, 2], -1), (&[3, 1], 1)])
        );
    }

    #[test]
    fn schur_to_h_agrees_with_straightening() {
        // Exhaustive over entries in [-2, 6], lengths up to 4.
        for len in 0..=4usize {
            let mut tuple = vec![-2i64; len];
            loop {
                let alpha = IntTuple::new(tuple.clone());
                let direct = schur_to_h::<i64>(&alpha);
                match schur_straighten(&alpha) {
                    Straightened::Zero => {
                        assert!(direct.is_zero(), "alpha={alpha:?}");
                    }
                    Straightened::NonZero { sign, partition } => {
                        let canonical = schur_to_h::<i64>(&partition.as_composition().to_int_tuple());
                        let scaled = SymElt {
                            basis: SymBasis::H,
                            terms: canonical.terms.scale(&i64::from(sign)),
                        };
                        assert_eq!(direct, scaled, "alpha={alpha:?}");
                    }
                }
                // increment odometer over [-2, 6]^len
                let mut i = 0;
                loop {
                    if i == tuple.len() {
                        break;
                    }
                    tuple[i] += 1;
                    if tuple[i] <= 6 {
                        break;
                    }
                    tuple[i] = -2;
                    i += 1;
                }
                if i == tuple.len() {
                    break;
                }
            }
        }
    }

    proptest::proptest! {
        /// Switching two adjacent rows of the Jacobi-Trudi matrix flips the
        /// sign: s_{..., a_r, a_{r+1}, ...} = -s_{..., a_{r+1}-1, a_r+1, ...}.
        #[test]
        fn adjacent_exchange_identity(
            entries in proptest::collection::vec(-3i64..7, 2..=4),
            seed in 0usize..3,
        ) {
            let r = seed % (entries.len() - 1);
            let mut swapped = entries.clone();
            swapped[r] = entries[r + 1] - 1;
            swapped[r + 1] = entries[r] + 1;
            let lhs = schur_to_h::<i64>(&IntTuple::new(entries));
            let rhs = schur_to_h::<i64>(&IntTuple::new(swapped));
            let negated = SymElt { basis: SymBasis::H, terms: rhs.terms.scale(&-1) };
            proptest::prop_assert_eq!(lhs, negated);
        }
    }

    #[test]
    fn forgetful_sorts_indices() {
        let f = NSymElt::<i64>::basis_element(
            NSymBasis::H,
            Composition::new([2, 1, 3]).unwrap(),
        );
        assert_eq!(
            forgetful(&f),
            Elt::basis_element(SymBasis::H, part(&[3, 2, 1]))
        );
    }

    #[test]
    fn forgetful_of_immaculate_is_schur() {
        use crate::composition::compositions_of;
        for n in 0..=5u32 {
            for alpha in compositions_of(n) {
                let s = NSymElt::<i64>::basis_element(NSymBasis::S, alpha.clone());
                let chi = forgetful(&s);
                let schur = schur_to_h::<i64>(&alpha.to_int_tuple());
                assert_eq!(chi, schur, "alpha={alpha:?}");
            }
        }
    }

    fn rational(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    fn to_rational(f: &Elt) -> SymElt<BigRational> {
        f.map_coeffs(|c| rational(*c, 1))
    }

    #[test]
    fn newton_conversion_small_cases() {
        let p1 = h_to_p(&to_rational(&h_terms(&[(&[1], 1)]))).unwrap();
        assert_eq!(
            p1,
            SymElt::basis_element(SymBasis::P, part(&[1]))
        );

        // 2 h_2 - h_{11} = p_2
        let lhs = h_to_p(&to_rational(&h_terms(&[(&[2], 2), (&[1, 1], -1)]))).unwrap();
        assert_eq!(lhs, SymElt::basis_element(SymBasis::P, part(&[2])));

        // 3 h_3 - 3 h_{21} + h_{111} = p_3
        let lhs = h_to_p(&to_rational(&h_terms(&[
            (&[3], 3),
            (&[2, 1], -3),
            (&[1, 1, 1], 1),
        ])))
        .unwrap();
        assert_eq!(lhs, SymElt::basis_element(SymBasis::P, part(&[3])));

        // h_2 alone has genuinely rational coefficients.
        let h2 = h_to_p(&to_rational(&h_terms(&[(&[2], 1)]))).unwrap();
        assert_eq!(h2.coeff(&part(&[2])), rational(1, 2));
        assert_eq!(h2.coeff(&part(&[1, 1])), rational(1, 2));
    }

    #[test]
    fn h_to_p_requires_h_basis() {
        let p = SymElt::<BigRational>::basis_element(SymBasis::P, part(&[1]));
        assert!(h_to_p(&p).is_err());
    }

    #[test]
    fn psi_projects_to_power_sums() {
        for n in 1..=6u32 {
            let psi = crate::nsym::psi_to_h::<i64>(n);
            let chi = forgetful(&psi);
            let p = h_to_p(&to_rational(&chi)).unwrap();
            let expected = SymElt::basis_element(SymBasis::P, part(&[n]));
            assert_eq!(p, expected, "n={n}");
            assert!(p.coeff(&part(&[n])).is_one());
        }
    }
}
