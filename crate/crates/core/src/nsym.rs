//! The noncommutative symmetric functions.
//!
//! `NSym` is the free algebra on generators `H_1, H_2, ...` graded by degree.
//! Elements here are sparse integer linear combinations tagged with one of
//! four bases:
//!
//! - `H`: complete homogeneous, `H_alpha = H_{a_1} H_{a_2} ...` (the
//!   multiplication is index concatenation);
//! - `R`: ribbon, related to `H` by inclusion-exclusion over coarsenings;
//! - `Psi`: the power-sum lift, `Psi_n = n H_n - sum_j H_j Psi_{n-j}`;
//! - `S`: the immaculate basis, built by the creation operators
//!   `B_m = sum_i (-1)^i H_{m+i} (M_{1^i})^perp`.
//!
//! Indices of `H` with non-positive entries are normalized in exactly one
//! place (`normalize_h_index`): a zero entry is dropped (`H_0 = 1`) and a
//! negative entry kills the whole term (`H_{-r} = 0`).

use std::fmt;

use itertools::Itertools;

use crate::composition::{compositions_of, pieri_successors, Composition, IntTuple, Partition};
use crate::error::{Error, Result};
use crate::lincomb::{coeff_from_count, fmt_terms, Coeff, LinComb};
use crate::tableau::{descent_count, kostka_immaculate, lr_coefficient};

/// The four bases an element can be expressed in.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum NSymBasis {
    /// Complete homogeneous `H`.
    H,
    /// Ribbon `R`.
    R,
    /// Power sum `Psi`.
    Psi,
    /// Immaculate `S`.
    S,
}

impl fmt::Display for NSymBasis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            NSymBasis::H => "H",
            NSymBasis::R => "R",
            NSymBasis::Psi => "Psi",
            NSymBasis::S => "S",
        })
    }
}

/// A noncommutative symmetric function: a basis tag plus a sparse linear
/// combination of composition indices with nonzero exact coefficients.
#[derive(Clone, PartialEq, Eq)]
pub struct NSymElt<C: Coeff> {
    pub(crate) basis: NSymBasis,
    pub(crate) terms: LinComb<Composition, C>,
}

impl<C: Coeff> NSymElt<C> {
    pub fn zero(basis: NSymBasis) -> Self {
        Self {
            basis,
            terms: LinComb::zero(),
        }
    }

    /// The multiplicative unit: the empty-composition term with coefficient 1.
    pub fn one(basis: NSymBasis) -> Self {
        Self::basis_element(basis, Composition::empty())
    }

    /// The single basis element `B_index`.
    pub fn basis_element(basis: NSymBasis, index: Composition) -> Self {
        Self {
            basis,
            terms: LinComb::unit(index),
        }
    }

    pub fn from_terms<I: IntoIterator<Item = (Composition, C)>>(basis: NSymBasis, terms: I) -> Self {
        Self {
            basis,
            terms: LinComb::from_terms(terms),
        }
    }

    pub fn basis(&self) -> NSymBasis {
        self.basis
    }

    pub fn terms(&self) -> &LinComb<Composition, C> {
        &self.terms
    }

    pub fn coeff(&self, index: &Composition) -> C {
        self.terms.coeff(index)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_zero()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.num_terms()
    }

    /// The common size of all indices, `None` when the element is zero or
    /// mixes degrees.
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

    pub fn map_coeffs<D: Coeff>(&self, f: impl Fn(&C) -> D) -> NSymElt<D> {
        NSymElt {
            basis: self.basis,
            terms: self.terms.map_coeffs(f),
        }
    }

    /// Converts to `target`; see [`change_basis`].
    pub fn to_basis(&self, target: NSymBasis) -> Result<Self> {
        change_basis(self, target)
    }
}

impl<C: Coeff> fmt::Display for NSymElt<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let basis = self.basis;
        fmt_terms(f, &self.terms, |k| format!("{basis}[{k}]"))
    }
}

impl<C: Coeff> fmt::Debug for NSymElt<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// The one normalization routine for `H` indexed by arbitrary integers:
/// zero entries are deleted (`H_0 = 1`); a negative entry returns `None`,
/// meaning the whole term vanishes (`H_{-r} = 0`).
pub(crate) fn normalize_h_index<I: IntoIterator<Item = i64>>(entries: I) -> Option<Composition> {
    let mut parts = Vec::new();
    for e in entries {
        if e < 0 {
            return None;
        }
        if e > 0 {
            parts.push(e as u32);
        }
    }
    Some(Composition::from_parts_unchecked(parts))
}

/// Product in the `H` basis: the bilinear extension of index concatenation.
/// Both operands must be tagged `H`.
pub fn h_multiply<C: Coeff>(a: &NSymElt<C>, b: &NSymElt<C>) -> Result<NSymElt<C>> {
    for side in [a, b] {
        if side.basis != NSymBasis::H {
            return Err(Error::BasisMismatch {
                expected: NSymBasis::H.to_string(),
                found: side.basis.to_string(),
            });
        }
    }
    let mut terms = LinComb::zero();
    for (ka, ca) in a.terms.iter() {
        for (kb, cb) in b.terms.iter() {
            terms.add_term(ka.concat(kb), ca.clone() * cb.clone());
        }
    }
    Ok(NSymElt {
        basis: NSymBasis::H,
        terms,
    })
}

/// `R_alpha` in the `H` basis: the signed sum over coarsenings,
/// `R_alpha = sum_{beta >= alpha} (-1)^{l(alpha) - l(beta)} H_beta`.
pub fn ribbon_to_h<C: Coeff>(alpha: &Composition) -> NSymElt<C> {
    let mut terms = LinComb::zero();
    for beta in crate::composition::coarsenings(alpha) {
        let sign_negative = (alpha.len() - beta.len()) % 2 == 1;
        let one = C::one();
        terms.add_term(beta, if sign_negative { -one } else { one });
    }
    NSymElt {
        basis: NSymBasis::H,
        terms,
    }
}

/// `H_alpha` in the ribbon basis: `H_alpha = sum_{beta >= alpha} R_beta`.
pub fn h_to_ribbon<C: Coeff>(alpha: &Composition) -> NSymElt<C> {
    let mut terms = LinComb::zero();
    for beta in crate::composition::coarsenings(alpha) {
        terms.add_term(beta, C::one());
    }
    NSymElt {
        basis: NSymBasis::R,
        terms,
    }
}

/// `Psi_k` in the `H` basis via the recurrence
/// `Psi_n = n H_n - sum_{j=1}^{n-1} H_j Psi_{n-j}`.
pub fn psi_to_h<C: Coeff>(k: u32) -> NSymElt<C> {
    assert!(k >= 1, "Psi_k requires k >= 1");
    let mut table: Vec<LinComb<Composition, C>> = Vec::with_capacity(k as usize + 1);
    table.push(LinComb::unit(Composition::empty()));
    for n in 1..=k {
        let mut acc = LinComb::term(
            Composition::from_parts_unchecked(vec![n]),
            coeff_from_count::<C>(n as u64),
        );
        for j in 1..n {
            for (idx, c) in table[(n - j) as usize].iter() {
                let mut parts = Vec::with_capacity(idx.len() + 1);
                parts.push(j);
                parts.extend_from_slice(idx.parts());
                acc.add_term(Composition::from_parts_unchecked(parts), -c.clone());
            }
        }
        table.push(acc);
    }
    NSymElt {
        basis: NSymBasis::H,
        terms: table.pop().expect("k >= 1"),
    }
}

/// `Psi_alpha` in the `H` basis: the concatenation product of the `Psi_{a_i}`.
pub fn psi_index_to_h<C: Coeff>(alpha: &Composition) -> NSymElt<C> {
    let mut out = NSymElt::one(NSymBasis::H);
    for &part in alpha.parts() {
        out = h_multiply(&out, &psi_to_h(part)).expect("both operands in H");
    }
    out
}

/// The action of `(M_gamma)^perp` on a single `H_beta`: the sum over
/// position choices `j_1 < ... < j_k` with `beta_{j_t} >= gamma_t` of the
/// `H` index obtained by subtracting `gamma_t` at `j_t` and deleting zeros.
fn perp_index<C: Coeff>(gamma: &[u32], beta: &[u32]) -> LinComb<Composition, C> {
    fn go<C: Coeff>(
        gamma: &[u32],
        beta: &[u32],
        gi: usize,
        bi: usize,
        current: &mut Vec<u32>,
        out: &mut LinComb<Composition, C>,
    ) {
        if gamma.len() - gi > beta.len() - bi {
            return; // not enough positions left for the rest of gamma
        }
        if bi == beta.len() {
            out.add_term(Composition::from_parts_unchecked(current.clone()), C::one());
            return;
        }
        current.push(beta[bi]);
        go(gamma, beta, gi, bi + 1, current, out);
        current.pop();
        if gi < gamma.len() && beta[bi] >= gamma[gi] {
            let rest = beta[bi] - gamma[gi];
            if rest > 0 {
                current.push(rest);
            }
            go(gamma, beta, gi + 1, bi + 1, current, out);
            if rest > 0 {
                current.pop();
            }
        }
    }
    let mut out = LinComb::zero();
    let mut current = Vec::with_capacity(beta.len());
    go(gamma, beta, 0, 0, &mut current, &mut out);
    out
}

/// The perp operator `(M_gamma)^perp`, the pairing adjoint of left
/// multiplication by the monomial quasi-symmetric function `M_gamma`.
/// Operands in other bases are routed through the `H` expansion first.
pub fn monomial_perp<C: Coeff>(gamma: &Composition, f: &NSymElt<C>) -> NSymElt<C> {
    let h = to_h(f);
    NSymElt {
        basis: NSymBasis::H,
        terms: h.terms.flat_map(|beta| perp_index(gamma.parts(), beta.parts())),
    }
}

/// The creation operator `B_m` as a value: prepending a row of length `m`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct BernsteinOperator {
    pub m: i64,
}

impl BernsteinOperator {
    pub fn new(m: i64) -> Self {
        Self { m }
    }

    pub fn apply<C: Coeff>(&self, f: &NSymElt<C>) -> NSymElt<C> {
        bernstein_apply(self.m, f)
    }
}

/// The noncommutative Bernstein creation operator
/// `B_m = sum_{i >= 0} (-1)^i H_{m+i} (F_{1^i})^perp`, with `F_{1^i} = M_{1^i}`.
///
/// The sum truncates at the maximal index length of `f` since `(M_{1^i})^perp`
/// needs `i` distinct positions. Left multiplication by `H_{m+i}` follows the
/// `H_0 = 1`, `H_{-r} = 0` conventions.
pub fn bernstein_apply<C: Coeff>(m: i64, f: &NSymElt<C>) -> NSymElt<C> {
    let h = to_h(f);
    let max_len = h.terms.keys().map(Composition::len).max().unwrap_or(0);
    let mut acc = LinComb::zero();
    for i in 0..=max_len {
        let head = m + i as i64;
        if head < 0 {
            continue;
        }
        let gamma = vec![1u32; i];
        for (beta, c) in h.terms.iter() {
            for (idx, d) in perp_index::<C>(&gamma, beta.parts()).iter() {
                let entries = std::iter::once(head)
                    .chain(idx.parts().iter().map(|&p| p as i64));
                if let Some(key) = normalize_h_index(entries) {
                    let coeff = c.clone() * d.clone();
                    acc.add_term(key, if i % 2 == 1 { -coeff } else { coeff });
                }
            }
        }
    }
    NSymElt {
        basis: NSymBasis::H,
        terms: acc,
    }
}

/// The immaculate function `S_alpha` in the `H` basis, built as
/// `B_{a_1} B_{a_2} ... B_{a_m} (1)`. Defined for arbitrary integer tuples;
/// on compositions it coincides with [`jacobi_trudi_h`].
pub fn immaculate_to_h<C: Coeff>(alpha: &IntTuple) -> NSymElt<C> {
    let mut f = NSymElt::one(NSymBasis::H);
    for &m in alpha.entries().iter().rev() {
        f = bernstein_apply(m, &f);
        if f.is_zero() {
            break;
        }
    }
    f
}

/// `S_alpha` in the `H` basis by the Jacobi-Trudi style signed sum
/// `sum_{sigma} (-1)^sigma H_{a_1 + sigma_1 - 1, ..., a_m + sigma_m - m}`.
pub fn jacobi_trudi_h<C: Coeff>(alpha: &Composition) -> NSymElt<C> {
    let m = alpha.len();
    let mut acc = LinComb::zero();
    for sigma in (1..=m as i64).permutations(m) {
        let entries = alpha
            .parts()
            .iter()
            .enumerate()
            .map(|(i, &a)| a as i64 + sigma[i] - (i as i64 + 1));
        if let Some(key) = normalize_h_index(entries) {
            let one = C::one();
            acc.add_term(key, if permutation_sign(&sigma) < 0 { -one } else { one });
        }
    }
    NSymElt {
        basis: NSymBasis::H,
        terms: acc,
    }
}

pub(crate) fn permutation_sign(sigma: &[i64]) -> i32 {
    let mut inversions = 0usize;
    for i in 0..sigma.len() {
        for j in (i + 1)..sigma.len() {
            if sigma[i] > sigma[j] {
                inversions += 1;
            }
        }
    }
    if inversions.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// `H_beta` in the immaculate basis: `H_beta = sum_alpha K[alpha, beta] S_alpha`,
/// computed directly from tableau counts (never by matrix inversion).
pub fn h_to_immaculate<C: Coeff>(beta: &Composition) -> NSymElt<C> {
    let mut acc = LinComb::zero();
    for alpha in compositions_of(beta.size()) {
        let k = kostka_immaculate(&alpha, beta.parts()).expect("sizes match");
        if k > 0 {
            acc.add_term(alpha, coeff_from_count::<C>(k));
        }
    }
    NSymElt {
        basis: NSymBasis::S,
        terms: acc,
    }
}

/// `R_beta` in the immaculate basis: the coefficient of `S_alpha` counts the
/// standard immaculate tableaux of shape `alpha` with descent composition
/// `beta`.
pub fn ribbon_to_immaculate<C: Coeff>(beta: &Composition) -> NSymElt<C> {
    let mut acc = LinComb::zero();
    for alpha in compositions_of(beta.size()) {
        let l = descent_count(&alpha, beta);
        if l > 0 {
            acc.add_term(alpha, coeff_from_count::<C>(l));
        }
    }
    NSymElt {
        basis: NSymBasis::S,
        terms: acc,
    }
}

/// The right-Pieri rule: `S_alpha H_s` as the multiplicity-free sum of
/// `S_beta` over the growth relation `alpha subset_s beta`.
pub fn pieri_multiply<C: Coeff>(alpha: &Composition, s: u32) -> NSymElt<C> {
    let mut acc = LinComb::zero();
    for beta in pieri_successors(alpha, s) {
        acc.add_term(beta, C::one());
    }
    NSymElt {
        basis: NSymBasis::S,
        terms: acc,
    }
}

/// The Littlewood-Richardson rule: `S_alpha S_lambda` for a partition
/// `lambda`, with the coefficient of `S_beta` counting Yamanouchi skew
/// immaculate tableaux. All coefficients are non-negative.
pub fn lr_multiply<C: Coeff>(alpha: &Composition, lambda: &Partition) -> NSymElt<C> {
    let mut acc = LinComb::zero();
    for beta in compositions_of(alpha.size() + lambda.size()) {
        let c = lr_coefficient(alpha, lambda, &beta).expect("sizes match");
        if c > 0 {
            acc.add_term(beta, coeff_from_count::<C>(c));
        }
    }
    NSymElt {
        basis: NSymBasis::S,
        terms: acc,
    }
}

/// The Murnaghan-Nakayama product `S_alpha Psi_k` before normalization: one
/// term per way of adding `k` to a part of `alpha` padded with `k` zeros.
/// The first `l(alpha)` tuples add `k` to an existing part; the remaining `k`
/// append `j` zeros and a final part `k`, for `j = 0, ..., k-1`.
pub fn mn_multiply_raw(alpha: &Composition, k: u32) -> Vec<IntTuple> {
    assert!(k >= 1, "Psi_k requires k >= 1");
    let base: Vec<i64> = alpha.parts().iter().map(|&p| p as i64).collect();
    let mut out = Vec::with_capacity(alpha.len() + k as usize);
    for j in 0..alpha.len() {
        let mut entries = base.clone();
        entries[j] += k as i64;
        out.push(IntTuple::new(entries));
    }
    for j in 0..k {
        let mut entries = base.clone();
        entries.extend(std::iter::repeat_n(0, j as usize));
        entries.push(k as i64);
        out.push(IntTuple::new(entries));
    }
    out
}

/// The Murnaghan-Nakayama product `S_alpha Psi_k`, normalized: the raw
/// zero-padded tuples are evaluated through the creation operators and the
/// sum is re-expanded in the composition-indexed immaculate basis.
pub fn mn_multiply<C: Coeff>(alpha: &Composition, k: u32) -> NSymElt<C> {
    let mut acc = LinComb::zero();
    for tuple in mn_multiply_raw(alpha, k) {
        acc.add_assign(&immaculate_to_h::<C>(&tuple).terms);
    }
    let h = NSymElt {
        basis: NSymBasis::H,
        terms: acc,
    };
    change_basis(&h, NSymBasis::S).expect("H to S is always defined")
}

/// The element in the `H` basis equal to `f`.
fn to_h<C: Coeff>(f: &NSymElt<C>) -> NSymElt<C> {
    let terms = match f.basis {
        NSymBasis::H => f.terms.clone(),
        NSymBasis::R => f.terms.flat_map(|a| ribbon_to_h::<C>(a).terms),
        NSymBasis::Psi => f.terms.flat_map(|a| psi_index_to_h::<C>(a).terms),
        NSymBasis::S => f
            .terms
            .flat_map(|a| immaculate_to_h::<C>(&a.to_int_tuple()).terms),
    };
    NSymElt {
        basis: NSymBasis::H,
        terms,
    }
}

/// Linear basis change over the conversion graph `H <-> R`, `Psi -> H`,
/// `S <-> H`; other pairs route through `H`. No conversion targets `Psi`
/// (except the identity).
pub fn change_basis<C: Coeff>(f: &NSymElt<C>, target: NSymBasis) -> Result<NSymElt<C>> {
    if f.basis == target {
        return Ok(f.clone());
    }
    match target {
        NSymBasis::H => Ok(to_h(f)),
        NSymBasis::R => {
            let h = to_h(f);
            Ok(NSymElt {
                basis: NSymBasis::R,
                terms: h.terms.flat_map(|a| h_to_ribbon::<C>(a).terms),
            })
        }
        NSymBasis::S => {
            let h = to_h(f);
            Ok(NSymElt {
                basis: NSymBasis::S,
                terms: h.terms.flat_map(|a| h_to_immaculate::<C>(a).terms),
            })
        }
        NSymBasis::Psi => Err(Error::NoConversionPath {
            from: f.basis.to_string(),
            to: target.to_string(),
        }),
    }
}
