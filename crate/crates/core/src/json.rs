//! The JSON element schema shared by every algebra module:
//! `{"basis": "...", "terms": [{"index": [...], "coeff": "<decimal string>"}]}`
//! with terms sorted lexicographically by index and coefficients carried as
//! decimal strings so consumers never overflow.

use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::composition::{Composition, IntTuple, Partition};
use crate::error::{Error, Result};
use crate::lincomb::Coeff;
use crate::nsym::{NSymBasis, NSymElt};
use crate::qsym::{QSymBasis, QSymElt};
use crate::sym::{SymBasis, SymElt};
use crate::Int;

/// One serialized term.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct TermJson {
    pub index: Vec<i64>,
    pub coeff: String,
}

/// A serialized basis-tagged element.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct ElementJson {
    pub basis: String,
    pub terms: Vec<TermJson>,
}

fn terms_json<C: Coeff, K: Ord + Clone>(
    terms: &crate::lincomb::LinComb<K, C>,
    index_of: impl Fn(&K) -> Vec<i64>,
) -> Vec<TermJson> {
    terms
        .iter()
        .map(|(k, c)| TermJson {
            index: index_of(k),
            coeff: c.to_string(),
        })
        .collect()
}

fn composition_index(k: &Composition) -> Vec<i64> {
    k.parts().iter().map(|&p| p as i64).collect()
}

impl<C: Coeff> From<&NSymElt<C>> for ElementJson {
    fn from(f: &NSymElt<C>) -> Self {
        ElementJson {
            basis: f.basis().to_string(),
            terms: terms_json(f.terms(), composition_index),
        }
    }
}

impl<C: Coeff> From<&QSymElt<C>> for ElementJson {
    fn from(f: &QSymElt<C>) -> Self {
        ElementJson {
            basis: f.basis().to_string(),
            terms: terms_json(f.terms(), composition_index),
        }
    }
}

impl<C: Coeff> From<&SymElt<C>> for ElementJson {
    fn from(f: &SymElt<C>) -> Self {
        ElementJson {
            basis: f.basis().to_string(),
            terms: terms_json(f.terms(), |k: &Partition| {
                k.parts().iter().map(|&p| p as i64).collect()
            }),
        }
    }
}

/// Serializes the raw (zero-padded) Murnaghan-Nakayama terms: immaculate
/// indices that are integer tuples, each with coefficient 1. Terms are
/// sorted lexicographically by index like every other serialization.
pub fn mn_raw_element(raw: &[IntTuple]) -> ElementJson {
    let mut indices: Vec<Vec<i64>> = raw.iter().map(|t| t.entries().to_vec()).collect();
    indices.sort();
    ElementJson {
        basis: NSymBasis::S.to_string(),
        terms: indices
            .into_iter()
            .map(|index| TermJson {
                index,
                coeff: "1".to_string(),
            })
            .collect(),
    }
}

fn parse_coeff(s: &str) -> Result<Int> {
    let c = Int::from_str(s).map_err(|_| Error::Parse(format!("invalid coefficient {s:?}")))?;
    if c == Int::from(0) {
        return Err(Error::Parse("zero coefficient stored in terms".into()));
    }
    Ok(c)
}

fn parse_composition(index: &[i64]) -> Result<Composition> {
    let mut parts = Vec::with_capacity(index.len());
    for &e in index {
        if e <= 0 {
            return Err(Error::NonPositivePart(e));
        }
        parts.push(e as u32);
    }
    Ok(Composition::new(parts).expect("positive parts"))
}

impl TryFrom<&ElementJson> for crate::NSymElement {
    type Error = Error;

    fn try_from(e: &ElementJson) -> Result<Self> {
        let basis = match e.basis.as_str() {
            "H" => NSymBasis::H,
            "R" => NSymBasis::R,
            "Psi" => NSymBasis::Psi,
            "S" => NSymBasis::S,
            other => return Err(Error::Parse(format!("unknown NSym basis {other:?}"))),
        };
        let mut terms = Vec::with_capacity(e.terms.len());
        for t in &e.terms {
            terms.push((parse_composition(&t.index)?, parse_coeff(&t.coeff)?));
        }
        Ok(NSymElt::from_terms(basis, terms))
    }
}

impl TryFrom<&ElementJson> for crate::QSymElement {
    type Error = Error;

    fn try_from(e: &ElementJson) -> Result<Self> {
        let basis = match e.basis.as_str() {
            "M" => QSymBasis::M,
            "F" => QSymBasis::F,
            "Sstar" => QSymBasis::Sstar,
            other => return Err(Error::Parse(format!("unknown QSym basis {other:?}"))),
        };
        let mut terms = Vec::with_capacity(e.terms.len());
        for t in &e.terms {
            terms.push((parse_composition(&t.index)?, parse_coeff(&t.coeff)?));
        }
        Ok(QSymElt::from_terms(basis, terms))
    }
}

impl TryFrom<&ElementJson> for crate::SymElement {
    type Error = Error;

    fn try_from(e: &ElementJson) -> Result<Self> {
        let basis = match e.basis.as_str() {
            "h" => SymBasis::H,
            "s" => SymBasis::S,
            "p" => SymBasis::P,
            "m" => SymBasis::M,
            other => return Err(Error::Parse(format!("unknown Sym basis {other:?}"))),
        };
        let mut terms = Vec::with_capacity(e.terms.len());
        for t in &e.terms {
            let comp = parse_composition(&t.index)?;
            let partition = Partition::new(comp.parts().iter().copied())
                .map_err(|_| Error::Parse(format!("index {:?} is not a partition", t.index)))?;
            terms.push((partition, parse_coeff(&t.coeff)?));
        }
        Ok(SymElt::from_terms(basis, terms))
    }
}
