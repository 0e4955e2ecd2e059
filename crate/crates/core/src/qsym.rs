//! The quasi-symmetric functions, graded dual of `NSym`.
//!
//! Elements carry one of three basis tags:
//!
//! - `M`: monomial, dual to the complete homogeneous basis of `NSym`;
//! - `F`: fundamental, dual to the ribbon basis;
//! - `Sstar`: dual immaculate, dual to the immaculate basis. `Sstar` is a
//!   formal tag: elements convert to `M` or `F` on demand and no arithmetic
//!   is performed directly in it.
//!
//! The duality pairing `<H_alpha, M_beta> = delta` (equivalently
//! `<R_alpha, F_beta> = delta`) is evaluated through the `H`/`M` expansions;
//! the ribbon/fundamental route is kept alongside as a cross-check.

use std::fmt;

use crate::composition::{compositions_of, refinements, Composition, Partition};
use crate::error::{Error, Result};
use crate::lincomb::{coeff_from_count, fmt_terms, Coeff, LinComb};
use crate::nsym::{NSymBasis, NSymElt};
use crate::tableau::{descent_count, kostka_immaculate};

/// The three bases a quasi-symmetric element can be expressed in.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum QSymBasis {
    /// Monomial `M`.
    M,
    /// Fundamental `F`.
    F,
    /// Dual immaculate `S*`.
    Sstar,
}

impl fmt::Display for QSymBasis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            QSymBasis::M => "M",
            QSymBasis::F => "F",
            QSymBasis::Sstar => "Sstar",
        })
    }
}

/// A quasi-symmetric function: basis tag plus sparse integer combination of
/// composition indices.
#[derive(Clone, PartialEq, Eq)]
pub struct QSymElt<C: Coeff> {
    pub(crate) basis: QSymBasis,
    pub(crate) terms: LinComb<Composition, C>,
}

impl<C: Coeff> QSymElt<C> {
    pub fn zero(basis: QSymBasis) -> Self {
        Self {
            basis,
            terms: LinComb::zero(),
        }
    }

    pub fn one(basis: QSymBasis) -> Self {
        Self::basis_element(basis, Composition::empty())
    }

    pub fn basis_element(basis: QSymBasis, index: Composition) -> Self {
        Self {
            basis,
            terms: LinComb::unit(index),
        }
    }

    pub fn from_terms<I: IntoIterator<Item = (Composition, C)>>(basis: QSymBasis, terms: I) -> Self {
        Self {
            basis,
            terms: LinComb::from_terms(terms),
        }
    }

    pub fn basis(&self) -> QSymBasis {
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

    pub fn to_basis(&self, target: QSymBasis) -> Result<Self> {
        change_basis(self, target)
    }
}

impl<C: Coeff> fmt::Display for QSymElt<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let basis = self.basis;
        fmt_terms(f, &self.terms, |k| format!("{basis}[{k}]"))
    }
}

impl<C: Coeff> fmt::Debug for QSymElt<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// `F_alpha` in the monomial basis: the sum of `M_beta` over all refinements
/// `beta` of `alpha`.
pub fn fundamental_to_monomial<C: Coeff>(alpha: &Composition) -> QSymElt<C> {
    let mut terms = LinComb::zero();
    for beta in refinements(alpha) {
        terms.add_term(beta, C::one());
    }
    QSymElt {
        basis: QSymBasis::M,
        terms,
    }
}

/// `M_alpha` in the fundamental basis, the Moebius inverse of
/// [`fundamental_to_monomial`]: `M_alpha = sum_{beta <= alpha}
/// (-1)^{l(beta) - l(alpha)} F_beta`.
pub fn monomial_to_fundamental<C: Coeff>(alpha: &Composition) -> QSymElt<C> {
    let mut terms = LinComb::zero();
    for beta in refinements(alpha) {
        let one = C::one();
        let sign_negative = (beta.len() - alpha.len()) % 2 == 1;
        terms.add_term(beta, if sign_negative { -one } else { one });
    }
    QSymElt {
        basis: QSymBasis::F,
        terms,
    }
}

/// The quasi-shuffle (overlapping shuffle) product `M_alpha * M_beta`:
/// interleavings of the two part lists in which one part of each may merge
/// by addition. Realizes the product of the defining power series.
pub fn quasi_shuffle<C: Coeff>(alpha: &Composition, beta: &Composition) -> QSymElt<C> {
    fn go<C: Coeff>(
        a: &[u32],
        b: &[u32],
        prefix: &mut Vec<u32>,
        out: &mut LinComb<Composition, C>,
    ) {
        if a.is_empty() && b.is_empty() {
            out.add_term(Composition::from_parts_unchecked(prefix.clone()), C::one());
            return;
        }
        if !a.is_empty() {
            prefix.push(a[0]);
            go(&a[1..], b, prefix, out);
            prefix.pop();
        }
        if !b.is_empty() {
            prefix.push(b[0]);
            go(a, &b[1..], prefix, out);
            prefix.pop();
        }
        if !a.is_empty() && !b.is_empty() {
            prefix.push(a[0] + b[0]);
            go(&a[1..], &b[1..], prefix, out);
            prefix.pop();
        }
    }
    let mut terms = LinComb::zero();
    let mut prefix = Vec::with_capacity(alpha.len() + beta.len());
    go(alpha.parts(), beta.parts(), &mut prefix, &mut terms);
    QSymElt {
        basis: QSymBasis::M,
        terms,
    }
}

/// The dual immaculate function `S*_alpha` in the monomial basis:
/// `S*_alpha = sum_beta K[alpha, beta] M_beta`.
pub fn dual_immaculate_to_monomial<C: Coeff>(alpha: &Composition) -> QSymElt<C> {
    let mut terms = LinComb::zero();
    for beta in compositions_of(alpha.size()) {
        let k = kostka_immaculate(alpha, beta.parts()).expect("sizes match");
        if k > 0 {
            terms.add_term(beta, coeff_from_count::<C>(k));
        }
    }
    QSymElt {
        basis: QSymBasis::M,
        terms,
    }
}

/// The dual immaculate function `S*_alpha` in the fundamental basis:
/// `S*_alpha = sum_beta L[alpha, beta] F_beta`, with `L` counting standard
/// immaculate tableaux by descent composition.
pub fn dual_immaculate_to_fundamental<C: Coeff>(alpha: &Composition) -> QSymElt<C> {
    let mut terms = LinComb::zero();
    for beta in compositions_of(alpha.size()) {
        let l = descent_count(alpha, &beta);
        if l > 0 {
            terms.add_term(beta, coeff_from_count::<C>(l));
        }
    }
    QSymElt {
        basis: QSymBasis::F,
        terms,
    }
}

/// `M_alpha` in the dual immaculate basis by uni-triangular back-substitution
/// against [`dual_immaculate_to_monomial`]. Provided as a testing aid; it is
/// not part of the basis-change graph.
pub fn monomial_to_dual_immaculate<C: Coeff>(alpha: &Composition) -> QSymElt<C> {
    let n = alpha.size();
    let mut expansions: std::collections::BTreeMap<Composition, LinComb<Composition, C>> =
        std::collections::BTreeMap::new();
    // Process shapes in increasing lexicographic order: K[gamma, beta] = 0
    // unless gamma >= beta, so every M_beta needed below is already solved.
    for gamma in compositions_of(n) {
        let mut acc = LinComb::unit(gamma.clone());
        for (beta, k) in dual_immaculate_to_monomial::<C>(&gamma).terms.iter() {
            if *beta == gamma {
                continue;
            }
            let solved = expansions
                .get(beta)
                .expect("lex-smaller index already solved");
            for (idx, c) in solved.iter() {
                acc.add_term(idx.clone(), -(k.clone() * c.clone()));
            }
        }
        expansions.insert(gamma, acc);
    }
    QSymElt {
        basis: QSymBasis::Sstar,
        terms: expansions.remove(alpha).expect("alpha is a composition of n"),
    }
}

/// The Schur function `s_lambda` decomposed in the dual immaculate basis:
/// the signed sum over permutations `sigma` of `{1, ..., k}` with every
/// entry `lambda_{sigma_i} + i - sigma_i` positive of
/// `(-1)^sigma S*_{(lambda_{sigma_1} + 1 - sigma_1, ...)}`.
///
/// Permutations are generated with position-wise positivity pruning, so the
/// `k!` blowup never materializes for the partitions this crate targets.
pub fn schur_to_dual_immaculate<C: Coeff>(lambda: &Partition) -> QSymElt<C> {
    let k = lambda.len();
    let parts = lambda.parts();
    let mut terms = LinComb::zero();
    let mut chosen: Vec<u32> = Vec::with_capacity(k);
    let mut used = vec![false; k + 1];
    fn go<C: Coeff>(
        parts: &[u32],
        used: &mut Vec<bool>,
        chosen: &mut Vec<u32>,
        inversions: usize,
        entries: &mut Vec<u32>,
        terms: &mut LinComb<Composition, C>,
    ) {
        let k = parts.len();
        let i = chosen.len() + 1; // next position, 1-based
        if i > k {
            let key = Composition::from_parts_unchecked(entries.clone());
            let one = C::one();
            terms.add_term(key, if inversions % 2 == 1 { -one } else { one });
            return;
        }
        for j in 1..=k {
            if used[j] {
                continue;
            }
            // Positivity filter: entry_i = lambda_j + i - j must be > 0.
            let entry = parts[j - 1] as i64 + i as i64 - j as i64;
            if entry <= 0 {
                continue;
            }
            let new_inversions = chosen.iter().filter(|&&prev| prev > j as u32).count();
            used[j] = true;
            chosen.push(j as u32);
            entries.push(entry as u32);
            go(parts, used, chosen, inversions + new_inversions, entries, terms);
            entries.pop();
            chosen.pop();
            used[j] = false;
        }
    }
    let mut entries = Vec::with_capacity(k);
    go(parts, &mut used, &mut chosen, 0, &mut entries, &mut terms);
    QSymElt {
        basis: QSymBasis::Sstar,
        terms,
    }
}

/// The monomial symmetric function `m_lambda` viewed inside `QSym`:
/// `m_lambda = sum_{sort(alpha) = lambda} M_alpha`.
pub fn monomial_symmetric_embed<C: Coeff>(lambda: &Partition) -> QSymElt<C> {
    let mut terms = LinComb::zero();
    for alpha in lambda.rearrangements() {
        terms.add_term(alpha, C::one());
    }
    QSymElt {
        basis: QSymBasis::M,
        terms,
    }
}

/// The element in the monomial basis equal to `f`.
fn to_monomial<C: Coeff>(f: &QSymElt<C>) -> QSymElt<C> {
    let terms = match f.basis {
        QSymBasis::M => f.terms.clone(),
        QSymBasis::F => f.terms.flat_map(|a| fundamental_to_monomial::<C>(a).terms),
        QSymBasis::Sstar => f
            .terms
            .flat_map(|a| dual_immaculate_to_monomial::<C>(a).terms),
    };
    QSymElt {
        basis: QSymBasis::M,
        terms,
    }
}

/// Linear basis change: `M <-> F`, `Sstar -> M`, `Sstar -> F`. Nothing
/// converts into `Sstar` (the back-substitution inverse is a separate
/// testing aid).
pub fn change_basis<C: Coeff>(f: &QSymElt<C>, target: QSymBasis) -> Result<QSymElt<C>> {
    if f.basis == target {
        return Ok(f.clone());
    }
    match target {
        QSymBasis::M => Ok(to_monomial(f)),
        QSymBasis::F => {
            let terms = match f.basis {
                QSymBasis::M => f.terms.flat_map(|a| monomial_to_fundamental::<C>(a).terms),
                QSymBasis::Sstar => f
                    .terms
                    .flat_map(|a| dual_immaculate_to_fundamental::<C>(a).terms),
                QSymBasis::F => unreachable!("identity handled above"),
            };
            Ok(QSymElt {
                basis: QSymBasis::F,
                terms,
            })
        }
        QSymBasis::Sstar => Err(Error::NoConversionPath {
            from: f.basis.to_string(),
            to: target.to_string(),
        }),
    }
}

/// The Hall-type duality pairing `NSym x QSym -> Z`, evaluated through the
/// `H` and `M` expansions: `<H_alpha, M_beta> = delta_{alpha,beta}` extended
/// bilinearly. Inhomogeneous inputs are fine; cross-degree terms pair to 0.
pub fn pairing<C: Coeff>(f: &NSymElt<C>, g: &QSymElt<C>) -> C {
    let fh = f.to_basis(NSymBasis::H).expect("H is always reachable");
    let gm = to_monomial(g);
    let mut acc = C::zero();
    for (idx, c) in fh.terms.iter() {
        if let Some(d) = gm.terms.get(idx) {
            acc = acc + c.clone() * d.clone();
        }
    }
    acc
}

/// The same pairing through the ribbon and fundamental expansions,
/// `<R_alpha, F_beta> = delta_{alpha,beta}`. Kept as an independent route;
/// both evaluations must agree.
pub fn pairing_ribbon_route<C: Coeff>(f: &NSymElt<C>, g: &QSymElt<C>) -> C {
    let fr = f.to_basis(NSymBasis::R).expect("R is always reachable");
    let gf = change_basis(g, QSymBasis::F).expect("F is always reachable");
    let mut acc = C::zero();
    for (idx, c) in fr.terms.iter() {
        if let Some(d) = gf.terms.get(idx) {
            acc = acc + c.clone() * d.clone();
        }
    }
    acc
}
