//! Immaculate tableaux: straight, standard, and skew.
//!
//! An immaculate tableau of shape `alpha` and content `beta` labels the boxes
//! of the composition diagram of `alpha` (rows left-justified, first row on
//! top) so that the number of boxes labelled `i` is `beta_i`, every row
//! weakly increases left to right, and the entries of the first column
//! strictly increase top to bottom. Besides the first column there is no
//! column condition.
//!
//! The counts computed here index every expansion theorem of the crate:
//! `K[alpha, beta]` (tableaux of shape `alpha`, content `beta`),
//! `L[alpha, beta]` (standard tableaux of shape `alpha` with descent
//! composition `beta`), and the Littlewood-Richardson numbers
//! `c[alpha, lambda; beta]` counting Yamanouchi skew tableaux.

use std::collections::BTreeSet;
use std::fmt;

use crate::composition::{Composition, Partition};
use crate::error::{Error, Result};

/// An immaculate tableau on a straight composition shape.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct ImmaculateTableau {
    shape: Composition,
    rows: Vec<Vec<u32>>,
}

impl ImmaculateTableau {
    /// Builds a tableau from explicit rows, validating the defining rules:
    /// row lengths match the shape, every row weakly increases, and the
    /// first column strictly increases.
    pub fn new(shape: Composition, rows: Vec<Vec<u32>>) -> Result<Self> {
        let lengths_ok = rows.len() == shape.len()
            && rows
                .iter()
                .zip(shape.parts())
                .all(|(row, &len)| row.len() == len as usize);
        if !lengths_ok {
            return Err(Error::Parse(format!(
                "rows do not match shape [{shape}]"
            )));
        }
        let entries_ok = rows.iter().flatten().all(|&v| v >= 1);
        let rows_weak = rows.iter().all(|row| row.windows(2).all(|w| w[0] <= w[1]));
        let col_strict = rows
            .iter()
            .filter_map(|r| r.first())
            .collect::<Vec<_>>()
            .windows(2)
            .all(|w| w[0] < w[1]);
        if !(entries_ok && rows_weak && col_strict) {
            return Err(Error::Parse(
                "filling violates the immaculate tableau rules".into(),
            ));
        }
        Ok(Self { shape, rows })
    }

    pub fn shape(&self) -> &Composition {
        &self.shape
    }

    /// Row fillings, first row on top.
    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    /// Occurrence counts of the entries: slot `i` holds the number of
    /// boxes labelled `i + 1`. Trailing zeros are trimmed.
    pub fn content(&self) -> Vec<u32> {
        let max = self
            .rows
            .iter()
            .flat_map(|r| r.iter().copied())
            .max()
            .unwrap_or(0);
        let mut counts = vec![0u32; max as usize];
        for row in &self.rows {
            for &v in row {
                counts[(v - 1) as usize] += 1;
            }
        }
        counts
    }
}

impl fmt::Display for ImmaculateTableau {
    /// Left-justified rows of entries, first row on top.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.rows.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            let cells: Vec<String> = row.iter().map(|v| v.to_string()).collect();
            write!(f, "{}", cells.join(" "))?;
        }
        Ok(())
    }
}

impl fmt::Debug for ImmaculateTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.rows)
    }
}

/// An immaculate tableau of content `1^n`: entries are exactly `1, ..., n`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct StandardImmaculateTableau {
    tableau: ImmaculateTableau,
}

impl StandardImmaculateTableau {
    /// Wraps a tableau after checking its content is `1^n`.
    pub fn new(tableau: ImmaculateTableau) -> Result<Self> {
        let n = tableau.shape().size();
        let standard = tableau.content() == vec![1u32; n as usize];
        if standard {
            Ok(Self { tableau })
        } else {
            Err(Error::Parse("tableau content is not 1^n".into()))
        }
    }

    pub fn as_tableau(&self) -> &ImmaculateTableau {
        &self.tableau
    }

    pub fn shape(&self) -> &Composition {
        self.tableau.shape()
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        self.tableau.rows()
    }

    /// The descent composition: `i` is a descent when `i + 1` sits in a row
    /// strictly lower than `i`; the descent positions, read as a subset of
    /// `{1, ..., n-1}`, determine a composition of `n`.
    pub fn descent_composition(&self) -> Composition {
        let n = self.shape().size();
        let mut row_of = vec![0usize; (n + 1) as usize];
        for (r, row) in self.rows().iter().enumerate() {
            for &v in row {
                row_of[v as usize] = r;
            }
        }
        let mut descents = BTreeSet::new();
        for i in 1..n {
            if row_of[(i + 1) as usize] > row_of[i as usize] {
                descents.insert(i);
            }
        }
        Composition::from_descent_set(&descents, n).expect("descents lie in 1..n")
    }
}

/// A skew shape `outer / inner`: rows are matched top-aligned by index, every
/// matched row of `inner` fits inside the corresponding row of `outer`, and
/// `inner` has at most as many rows. The cells are those of `outer`'s diagram
/// not covered by `inner`'s.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SkewShape {
    inner: Composition,
    outer: Composition,
}

impl SkewShape {
    /// Builds the skew shape when `inner` is contained in `outer`.
    pub fn new(inner: Composition, outer: Composition) -> Option<Self> {
        let fits = inner.len() <= outer.len()
            && inner
                .parts()
                .iter()
                .zip(outer.parts())
                .all(|(&i, &o)| i <= o);
        fits.then_some(Self { inner, outer })
    }

    pub fn inner(&self) -> &Composition {
        &self.inner
    }

    pub fn outer(&self) -> &Composition {
        &self.outer
    }

    /// Number of skew cells.
    pub fn cells(&self) -> u32 {
        self.outer.size() - self.inner.size()
    }

    /// Skew cells in row `i` (0-based): `outer_i - inner_i`.
    fn row_cells(&self, i: usize) -> u32 {
        let inner = self.inner.parts().get(i).copied().unwrap_or(0);
        self.outer.parts()[i] - inner
    }

    /// Whether row `i` starts at column 1, i.e. has no inner cells.
    fn starts_at_first_column(&self, i: usize) -> bool {
        i >= self.inner.len()
    }
}

/// A filling of a skew shape by the immaculate rules: rows weakly increase,
/// and the entries in the first column of the diagram (the leftmost cells of
/// the rows with no inner cells) strictly increase top to bottom.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SkewImmaculateTableau {
    shape: SkewShape,
    rows: Vec<Vec<u32>>,
}

impl SkewImmaculateTableau {
    pub fn shape(&self) -> &SkewShape {
        &self.shape
    }

    /// Fillings of the skew cells, row by row; rows covered entirely by the
    /// inner shape are present as empty rows.
    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    /// The reading word: right to left in each row, top row first.
    pub fn reading_word(&self) -> Vec<u32> {
        let mut word = Vec::new();
        for row in &self.rows {
            word.extend(row.iter().rev());
        }
        word
    }
}

/// Reading word of a skew tableau (right to left in each row, top row first).
pub fn reading_word(tableau: &SkewImmaculateTableau) -> Vec<u32> {
    tableau.reading_word()
}

/// Whether every prefix of `word` contains at least as many `i` as `i + 1`,
/// for all `i >= 1`.
pub fn is_yamanouchi(word: &[u32]) -> bool {
    let max = word.iter().copied().max().unwrap_or(0);
    let mut counts = vec![0u32; (max + 1) as usize];
    for &v in word {
        counts[v as usize] += 1;
        if v > 1 && counts[v as usize] > counts[(v - 1) as usize] {
            return false;
        }
    }
    true
}

/// Occurrence-count vector of a word: slot `i` is the number of `i + 1`s.
pub fn word_content(word: &[u32]) -> Vec<u32> {
    let max = word.iter().copied().max().unwrap_or(0);
    let mut counts = vec![0u32; max as usize];
    for &v in word {
        counts[(v - 1) as usize] += 1;
    }
    counts
}

/// Shared backtracking enumerator over skew fillings. Straight shapes are the
/// `inner = []` case. Fillings are produced in row-reading lexicographic
/// order: rows are filled top to bottom, cells left to right, values
/// ascending.
fn enumerate_fillings(shape: &SkewShape, content: &[u32]) -> Vec<Vec<Vec<u32>>> {
    let mut remaining: Vec<u32> = content.to_vec();
    let mut rows: Vec<Vec<u32>> = Vec::with_capacity(shape.outer().len());
    let mut out = Vec::new();
    fill_row(shape, 0, 0, &mut remaining, &mut rows, &mut out);
    out
}

fn fill_row(
    shape: &SkewShape,
    row: usize,
    prev_first_col: u32,
    remaining: &mut Vec<u32>,
    rows: &mut Vec<Vec<u32>>,
    out: &mut Vec<Vec<Vec<u32>>>,
) {
    if row == shape.outer().len() {
        debug_assert!(remaining.iter().all(|&c| c == 0));
        out.push(rows.clone());
        return;
    }
    let cells = shape.row_cells(row) as usize;
    let first_col = shape.starts_at_first_column(row);
    let mut current = Vec::with_capacity(cells);
    fill_cell(
        shape,
        row,
        cells,
        first_col,
        prev_first_col,
        remaining,
        rows,
        &mut current,
        out,
    );
}

#[allow(clippy::too_many_arguments)]
fn fill_cell(
    shape: &SkewShape,
    row: usize,
    cells: usize,
    first_col: bool,
    prev_first_col: u32,
    remaining: &mut Vec<u32>,
    rows: &mut Vec<Vec<u32>>,
    current: &mut Vec<u32>,
    out: &mut Vec<Vec<Vec<u32>>>,
) {
    if current.len() == cells {
        let next_prev = if first_col && cells > 0 {
            current[0]
        } else {
            prev_first_col
        };
        rows.push(current.clone());
        fill_row(shape, row + 1, next_prev, remaining, rows, out);
        rows.pop();
        return;
    }
    // Weak increase along the row; strict increase down the first column.
    let min = match current.last() {
        Some(&last) => last,
        None if first_col => prev_first_col + 1,
        None => 1,
    };
    for v in min..=(remaining.len() as u32) {
        if remaining[(v - 1) as usize] == 0 {
            continue;
        }
        remaining[(v - 1) as usize] -= 1;
        current.push(v);
        fill_cell(
            shape,
            row,
            cells,
            first_col,
            prev_first_col,
            remaining,
            rows,
            current,
            out,
        );
        current.pop();
        remaining[(v - 1) as usize] += 1;
    }
}

/// All immaculate tableaux of the given shape and content, in row-reading
/// lexicographic order. The content is a weak composition: zeros are allowed
/// and trailing zeros do not change the result. The content must sum to the
/// number of cells.
pub fn enumerate_immaculate_tableaux(
    shape: &Composition,
    content: &[u32],
) -> Result<Vec<ImmaculateTableau>> {
    let total: u32 = content.iter().sum();
    if total != shape.size() {
        return Err(Error::ContentSizeMismatch {
            cells: shape.size(),
            content: total,
        });
    }
    let skew = SkewShape::new(Composition::empty(), shape.clone()).expect("empty inner fits");
    Ok(enumerate_fillings(&skew, content)
        .into_iter()
        .map(|rows| ImmaculateTableau {
            shape: shape.clone(),
            rows,
        })
        .collect())
}

/// The immaculate Kostka number `K[shape, content]`.
pub fn kostka_immaculate(shape: &Composition, content: &[u32]) -> Result<u64> {
    Ok(enumerate_immaculate_tableaux(shape, content)?.len() as u64)
}

/// All standard immaculate tableaux of the given shape.
pub fn standard_immaculate_tableaux(shape: &Composition) -> Vec<StandardImmaculateTableau> {
    let content = vec![1u32; shape.size() as usize];
    enumerate_immaculate_tableaux(shape, &content)
        .expect("content 1^n matches the shape size")
        .into_iter()
        .map(|tableau| StandardImmaculateTableau { tableau })
        .collect()
}

/// The descent composition of a standard immaculate tableau.
pub fn descent_composition(tableau: &StandardImmaculateTableau) -> Composition {
    tableau.descent_composition()
}

/// The number of standard immaculate tableaux of shape `alpha` with descent
/// composition `beta`.
pub fn descent_count(alpha: &Composition, beta: &Composition) -> u64 {
    standard_immaculate_tableaux(alpha)
        .iter()
        .filter(|t| &t.descent_composition() == beta)
        .count() as u64
}

/// All skew immaculate tableaux on `outer / inner` with the given content,
/// in row-reading lexicographic order. Returns an empty list when the inner
/// shape is not contained in the outer one.
pub fn enumerate_skew_immaculate_tableaux(
    inner: &Composition,
    outer: &Composition,
    content: &[u32],
) -> Result<Vec<SkewImmaculateTableau>> {
    let Some(shape) = SkewShape::new(inner.clone(), outer.clone()) else {
        return Ok(Vec::new());
    };
    let total: u32 = content.iter().sum();
    if total != shape.cells() {
        return Err(Error::ContentSizeMismatch {
            cells: shape.cells(),
            content: total,
        });
    }
    Ok(enumerate_fillings(&shape, content)
        .into_iter()
        .map(|rows| SkewImmaculateTableau {
            shape: shape.clone(),
            rows,
        })
        .collect())
}

/// The Littlewood-Richardson coefficient: the number of skew immaculate
/// tableaux with inner shape `alpha` and outer shape `beta` whose reading
/// word is Yamanouchi of content `lambda`. Zero when the skew shape is
/// undefined. Requires `|beta| = |alpha| + |lambda|`.
pub fn lr_coefficient(alpha: &Composition, lambda: &Partition, beta: &Composition) -> Result<u64> {
    if alpha.size() + lambda.size() != beta.size() {
        return Err(Error::SizeMismatch {
            left: alpha.size() + lambda.size(),
            right: beta.size(),
        });
    }
    let content: Vec<u32> = lambda.parts().to_vec();
    let fillings = enumerate_skew_immaculate_tableaux(alpha, beta, &content)?;
    Ok(fillings
        .iter()
        .filter(|t| is_yamanouchi(&t.reading_word()))
        .count() as u64)
}
