//! Parsing of `<Basis>:<index>` operands and target basis names.
//!
//! Basis tags are case-sensitive: `H`, `R`, `Psi`, `S` (noncommutative),
//! `M`, `F`, `Sstar` (quasi-symmetric), `s`, `h` (symmetric). Indices are
//! comma-separated integers; the empty string is the empty index. `S` and
//! `s` accept arbitrary integer tuples; all other bases require positive
//! parts, and `h` requires a partition.

use immaculata::nsym::NSymBasis;
use immaculata::qsym::QSymBasis;
use immaculata::{Composition, IntTuple, Partition};

/// A parsed operand.
#[derive(Clone, Debug)]
pub enum Operand {
    /// `H:...`, `R:...`, `Psi:...` with a composition index.
    NSym { basis: NSymBasis, index: Composition },
    /// `S:...` with an arbitrary integer tuple index.
    Immaculate(IntTuple),
    /// `M:...`, `F:...`, `Sstar:...` with a composition index.
    QSym { basis: QSymBasis, index: Composition },
    /// `s:...` with an arbitrary integer tuple index.
    Schur(IntTuple),
    /// `h:...` with a partition index.
    SymH(Partition),
}

impl Operand {
    pub fn basis_tag(&self) -> &'static str {
        match self {
            Operand::NSym { basis: NSymBasis::H, .. } => "H",
            Operand::NSym { basis: NSymBasis::R, .. } => "R",
            Operand::NSym { basis: NSymBasis::Psi, .. } => "Psi",
            Operand::NSym { basis: NSymBasis::S, .. } => "S",
            Operand::Immaculate(_) => "S",
            Operand::QSym { basis: QSymBasis::M, .. } => "M",
            Operand::QSym { basis: QSymBasis::F, .. } => "F",
            Operand::QSym { basis: QSymBasis::Sstar, .. } => "Sstar",
            Operand::Schur(_) => "s",
            Operand::SymH(_) => "h",
        }
    }
}

/// A parsed target basis name.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Target {
    NSym(NSymBasis),
    QSym(QSymBasis),
    Schur,
    SymH,
}

impl Target {
    pub fn tag(&self) -> &'static str {
        match self {
            Target::NSym(NSymBasis::H) => "H",
            Target::NSym(NSymBasis::R) => "R",
            Target::NSym(NSymBasis::Psi) => "Psi",
            Target::NSym(NSymBasis::S) => "S",
            Target::QSym(QSymBasis::M) => "M",
            Target::QSym(QSymBasis::F) => "F",
            Target::QSym(QSymBasis::Sstar) => "Sstar",
            Target::Schur => "s",
            Target::SymH => "h",
        }
    }
}

pub fn parse_target(tag: &str) -> Result<Target, String> {
    Ok(match tag {
        "H" => Target::NSym(NSymBasis::H),
        "R" => Target::NSym(NSymBasis::R),
        "Psi" => Target::NSym(NSymBasis::Psi),
        "S" => Target::NSym(NSymBasis::S),
        "M" => Target::QSym(QSymBasis::M),
        "F" => Target::QSym(QSymBasis::F),
        "Sstar" => Target::QSym(QSymBasis::Sstar),
        "s" => Target::Schur,
        "h" => Target::SymH,
        other => return Err(format!("unknown basis {other:?} (expected one of H, R, Psi, S, M, F, Sstar, s, h)")),
    })
}

pub fn parse_operand(text: &str) -> Result<Operand, String> {
    let Some((tag, index)) = text.split_once(':') else {
        return Err(format!("operand {text:?} is not of the form <Basis>:<index>"));
    };
    let composition = |index: &str| -> Result<Composition, String> {
        index
            .parse::<Composition>()
            .map_err(|e| format!("invalid index {index:?} for basis {tag}: {e}"))
    };
    Ok(match tag {
        "H" => Operand::NSym { basis: NSymBasis::H, index: composition(index)? },
        "R" => Operand::NSym { basis: NSymBasis::R, index: composition(index)? },
        "Psi" => Operand::NSym { basis: NSymBasis::Psi, index: composition(index)? },
        "S" => Operand::Immaculate(
            index
                .parse::<IntTuple>()
                .map_err(|e| format!("invalid index {index:?} for basis S: {e}"))?,
        ),
        "M" => Operand::QSym { basis: QSymBasis::M, index: composition(index)? },
        "F" => Operand::QSym { basis: QSymBasis::F, index: composition(index)? },
        "Sstar" => Operand::QSym { basis: QSymBasis::Sstar, index: composition(index)? },
        "s" => Operand::Schur(
            index
                .parse::<IntTuple>()
                .map_err(|e| format!("invalid index {index:?} for basis s: {e}"))?,
        ),
        "h" => Operand::SymH(
            index
                .parse::<Partition>()
                .map_err(|e| format!("invalid index {index:?} for basis h: {e}"))?,
        ),
        other => {
            return Err(format!(
                "unknown basis {other:?} (expected one of H, R, Psi, S, M, F, Sstar, s, h)"
            ))
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn operands_parse() {
        assert!(matches!(
            parse_operand("H:2,3").unwrap(),
            Operand::NSym { basis: NSymBasis::H, .. }
        ));
        assert!(matches!(parse_operand("S:1,3,2,0,3").unwrap(), Operand::Immaculate(_)));
        assert!(matches!(parse_operand("Sstar:2").unwrap(), Operand::QSym { .. }));
        assert!(matches!(parse_operand("s:2,2,2,1").unwrap(), Operand::Schur(_)));
        assert!(matches!(parse_operand("h:3,1").unwrap(), Operand::SymH(_)));
        assert!(matches!(parse_operand("S:").unwrap(), Operand::Immaculate(t) if t.is_empty()));
    }

    #[test]
    fn bad_operands_are_rejected() {
        assert!(parse_operand("X:1").is_err());
        assert!(parse_operand("noindex").is_err());
        assert!(parse_operand("H:0,1").is_err());
        assert!(parse_operand("h:1,2").is_err());
        assert!(parse_operand("M:-1").is_err());
        // Case sensitivity.
        assert!(parse_operand("SSTAR:2").is_err());
        assert!(parse_target("psi").is_err());
    }
}
