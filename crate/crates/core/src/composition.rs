//! Compositions, integer tuples, and partitions, together with the orders and
//! growth relations the bases are indexed by.
//!
//! A composition of `n` is a list of positive integers summing to `n`.
//! Compositions of `n` are identified with subsets of `{1, ..., n-1}` through
//! the descent map `D(alpha) = {a_1, a_1+a_2, ...}`; refinement order compares
//! descent sets, and the Pieri growth relation `alpha subset_s beta` governs
//! right multiplication by a one-part complete homogeneous generator.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A composition: a finite list of positive integers.
///
/// The derived `Ord` is lexicographic on the part lists, which is the order
/// used everywhere an enumeration order or a triangularity statement needs one.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Composition {
    parts: Vec<u32>,
}

impl Composition {
    /// Builds a composition, rejecting zero parts.
    pub fn new<I: IntoIterator<Item = u32>>(parts: I) -> Result<Self> {
        let parts: Vec<u32> = parts.into_iter().collect();
        match parts.iter().find(|&&p| p == 0) {
            Some(_) => Err(Error::NonPositivePart(0)),
            None => Ok(Self { parts }),
        }
    }

    /// The unique empty composition (size 0, length 0).
    pub fn empty() -> Self {
        Self { parts: Vec::new() }
    }

    /// Crate-internal constructor for parts already known to be positive.
    pub(crate) fn from_parts_unchecked(parts: Vec<u32>) -> Self {
        debug_assert!(parts.iter().all(|&p| p > 0));
        Self { parts }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// The size `|alpha|`: sum of the parts.
    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// The length `l(alpha)`: number of parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Concatenation `alpha . beta`, the index-level product of the H basis.
    pub fn concat(&self, other: &Self) -> Self {
        let mut parts = self.parts.clone();
        parts.extend_from_slice(&other.parts);
        Self { parts }
    }

    /// The descent set `D(alpha)`: partial sums of the parts, excluding `|alpha|`.
    pub fn descent_set(&self) -> BTreeSet<u32> {
        let mut set = BTreeSet::new();
        let mut sum = 0;
        for &p in &self.parts[..self.parts.len().saturating_sub(1)] {
            sum += p;
            set.insert(sum);
        }
        set
    }

    /// Inverse of [`Composition::descent_set`]: the composition of `n` whose
    /// descent set is `subset`. Rejects elements outside `{1, ..., n-1}`.
    pub fn from_descent_set(subset: &BTreeSet<u32>, n: u32) -> Result<Self> {
        if let Some(&bad) = subset.iter().find(|&&s| s == 0 || s >= n) {
            return Err(Error::SubsetOutOfRange { element: bad, n });
        }
        let mut parts = Vec::with_capacity(subset.len() + 1);
        let mut prev = 0;
        for &s in subset {
            parts.push(s - prev);
            prev = s;
        }
        if n > prev {
            parts.push(n - prev);
        }
        Ok(Self { parts })
    }

    /// The parts sorted decreasingly, as a partition.
    pub fn sorted_partition(&self) -> Partition {
        let mut parts = self.parts.clone();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub fn to_int_tuple(&self) -> IntTuple {
        IntTuple::new(self.parts.iter().map(|&p| p as i64))
    }
}

impl fmt::Display for Composition {
    /// Serializes as comma-separated parts; the empty composition is "".
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for p in &self.parts {
            if !first {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
            first = false;
        }
        Ok(())
    }
}

impl fmt::Debug for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{self}]")
    }
}

impl FromStr for Composition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s.is_empty() {
            return Ok(Self::empty());
        }
        let mut parts = Vec::new();
        for piece in s.split(',') {
            let v: i64 = piece
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("invalid composition part {piece:?}")))?;
            if v <= 0 {
                return Err(Error::NonPositivePart(v));
            }
            parts.push(v as u32);
        }
        Ok(Self { parts })
    }
}

/// A tuple of arbitrary integers, the generalized index of immaculate and
/// Schur functions. Zero and negative entries are allowed.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct IntTuple {
    entries: Vec<i64>,
}

impl IntTuple {
    pub fn new<I: IntoIterator<Item = i64>>(entries: I) -> Self {
        Self {
            entries: entries.into_iter().collect(),
        }
    }

    pub fn entries(&self) -> &[i64] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Conversion to a composition, defined only when every entry is positive.
    pub fn to_composition(&self) -> Option<Composition> {
        if self.entries.iter().all(|&e| e > 0) {
            Some(Composition {
                parts: self.entries.iter().map(|&e| e as u32).collect(),
            })
        } else {
            None
        }
    }
}

impl fmt::Display for IntTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for e in &self.entries {
            if !first {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
            first = false;
        }
        Ok(())
    }
}

impl fmt::Debug for IntTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{self}]")
    }
}

impl FromStr for IntTuple {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s.is_empty() {
            return Ok(Self::new([]));
        }
        let mut entries = Vec::new();
        for piece in s.split(',') {
            entries.push(
                piece
                    .trim()
                    .parse()
                    .map_err(|_| Error::Parse(format!("invalid integer entry {piece:?}")))?,
            );
        }
        Ok(Self { entries })
    }
}

/// A partition: a weakly decreasing list of positive integers.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Builds a partition, rejecting parts that are zero or out of order.
    pub fn new<I: IntoIterator<Item = u32>>(parts: I) -> Result<Self> {
        let parts: Vec<u32> = parts.into_iter().collect();
        let ok = parts.iter().all(|&p| p > 0) && parts.windows(2).all(|w| w[0] >= w[1]);
        if ok {
            Ok(Self { parts })
        } else {
            Err(Error::NotAPartition(
                parts.iter().map(|&p| p as i64).collect(),
            ))
        }
    }

    pub fn empty() -> Self {
        Self { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// The partition read as a composition (the identity on part lists).
    pub fn as_composition(&self) -> Composition {
        Composition {
            parts: self.parts.clone(),
        }
    }

    /// All distinct rearrangements of the parts, in lexicographic order.
    pub fn rearrangements(&self) -> Vec<Composition> {
        let mut out = BTreeSet::new();
        let mut remaining = self.parts.clone();
        let mut acc = Vec::with_capacity(remaining.len());
        rearrange(&mut remaining, &mut acc, &mut out);
        out.into_iter().collect()
    }
}

fn rearrange(remaining: &mut Vec<u32>, acc: &mut Vec<u32>, out: &mut BTreeSet<Composition>) {
    if remaining.is_empty() {
        out.insert(Composition { parts: acc.clone() });
        return;
    }
    let mut seen = BTreeSet::new();
    for i in 0..remaining.len() {
        let v = remaining[i];
        if !seen.insert(v) {
            continue;
        }
        remaining.swap_remove(i);
        acc.push(v);
        rearrange(remaining, acc, out);
        acc.pop();
        remaining.push(v);
        let last = remaining.len() - 1;
        remaining.swap(i, last);
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for p in &self.parts {
            if !first {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
            first = false;
        }
        Ok(())
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{self}]")
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let comp = Composition::from_str(s)?;
        Partition::new(comp.parts)
    }
}

/// All compositions of `n`, each exactly once, in lexicographically
/// increasing order of their part lists. `n = 0` yields just the empty
/// composition; otherwise there are `2^(n-1)` of them.
pub fn compositions_of(n: u32) -> Vec<Composition> {
    let mut out = Vec::new();
    let mut prefix = Vec::new();
    fn go(remaining: u32, prefix: &mut Vec<u32>, out: &mut Vec<Composition>) {
        if remaining == 0 {
            out.push(Composition {
                parts: prefix.clone(),
            });
            return;
        }
        for first in 1..=remaining {
            prefix.push(first);
            go(remaining - first, prefix, out);
            prefix.pop();
        }
    }
    go(n, &mut prefix, &mut out);
    out
}

/// All partitions of `n`, in lexicographically increasing order of part lists.
pub fn partitions_of(n: u32) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut prefix = Vec::new();
    fn go(remaining: u32, max: u32, prefix: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition {
                parts: prefix.clone(),
            });
            return;
        }
        for first in 1..=remaining.min(max) {
            prefix.push(first);
            go(remaining - first, first, prefix, out);
            prefix.pop();
        }
    }
    go(n, n, &mut prefix, &mut out);
    out.sort();
    out
}

/// Refinement order: `alpha <= beta` iff `D(beta)` is a subset of `D(alpha)`,
/// i.e. `beta` is obtained from `alpha` by merging adjacent parts.
/// Both arguments must have the same size.
pub fn refinement_leq(alpha: &Composition, beta: &Composition) -> Result<bool> {
    if alpha.size() != beta.size() {
        return Err(Error::SizeMismatch {
            left: alpha.size(),
            right: beta.size(),
        });
    }
    let d_alpha = alpha.descent_set();
    Ok(beta.descent_set().is_subset(&d_alpha))
}

/// All compositions obtained from `alpha` by refining: concatenations of
/// compositions of the individual parts. These are exactly the `beta <= alpha`
/// in refinement order.
pub fn refinements(alpha: &Composition) -> Vec<Composition> {
    let mut acc: Vec<Vec<u32>> = vec![Vec::new()];
    for &part in alpha.parts() {
        let blocks = compositions_of(part);
        let mut next = Vec::with_capacity(acc.len() * blocks.len());
        for prefix in &acc {
            for block in &blocks {
                let mut parts = prefix.clone();
                parts.extend_from_slice(block.parts());
                next.push(parts);
            }
        }
        acc = next;
    }
    let mut out: Vec<Composition> = acc
        .into_iter()
        .map(|parts| Composition { parts })
        .collect();
    out.sort();
    out
}

/// All compositions obtained from `alpha` by merging adjacent parts: the
/// `beta >= alpha` in refinement order, indexed by subsets of `D(alpha)`.
pub fn coarsenings(alpha: &Composition) -> Vec<Composition> {
    let descents: Vec<u32> = alpha.descent_set().into_iter().collect();
    let n = alpha.size();
    let mut out = Vec::with_capacity(1 << descents.len());
    for mask in 0u32..(1 << descents.len()) {
        let subset: BTreeSet<u32> = descents
            .iter()
            .enumerate()
            .filter(|(i, _)| mask & (1 << i) != 0)
            .map(|(_, &d)| d)
            .collect();
        out.push(Composition::from_descent_set(&subset, n).expect("subset of D(alpha)"));
    }
    out.sort();
    out
}

/// The Pieri growth relation: all `beta` with `|beta| = |alpha| + s`,
/// `alpha_j <= beta_j` for `1 <= j <= l(alpha)`, and `l(beta) <= l(alpha) + 1`,
/// in lexicographic order.
pub fn pieri_successors(alpha: &Composition, s: u32) -> Vec<Composition> {
    let mut out = BTreeSet::new();
    let mut acc = Vec::with_capacity(alpha.len() + 1);
    fn go(
        parts: &[u32],
        idx: usize,
        remaining: u32,
        acc: &mut Vec<u32>,
        out: &mut BTreeSet<Composition>,
    ) {
        if idx == parts.len() {
            if remaining == 0 {
                out.insert(Composition { parts: acc.clone() });
            } else {
                acc.push(remaining);
                out.insert(Composition { parts: acc.clone() });
                acc.pop();
            }
            return;
        }
        for add in 0..=remaining {
            acc.push(parts[idx] + add);
            go(parts, idx + 1, remaining - add, acc, out);
            acc.pop();
        }
    }
    go(alpha.parts(), 0, s, &mut acc, &mut out);
    out.into_iter().collect()
}

/// Lexicographic comparison on part lists; a total order on compositions of a
/// fixed size (no composition of `n` is a proper prefix of another).
pub fn lex_leq(alpha: &Composition, beta: &Composition) -> bool {
    alpha <= beta
}

/// Renders a subset as sorted comma-separated integers in braces, "{4,8,10}".
pub fn format_subset(subset: &BTreeSet<u32>) -> String {
    let inner: Vec<String> = subset.iter().map(|s| s.to_string()).collect();
    format!("{{{}}}", inner.join(","))
}
