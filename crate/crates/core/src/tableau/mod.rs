//! Standard ribbon tableaux (SRT) on generalized ribbon diagrams and standard
//! immaculate tableaux (SIT) on composition diagrams.

mod maps;
mod strips;

pub use maps::{chi, l_map, tau_t, LImage};
pub use strips::{
    candidate_sets, in_iota_image, in_theta, iota_tableau, sign, sign_brute_force, strips, tau_sum, tau_tja, word_wtj,
    StripLayout, WordTj,
};

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use thiserror::Error;

use crate::composition::{Composition, CompositionError, GeneralizedComposition};
use crate::permutation::Permutation;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum TableauError {
    #[error("filling {filling} is not a standard tableau of shape {shape}")]
    Invalid { shape: String, filling: String },
    #[error("cannot parse tableau {0:?}")]
    Parse(String),
    #[error(transparent)]
    Composition(#[from] CompositionError),
    #[error("precondition failed: {0}")]
    Precondition(String),
}

/// Result of letting a generator `π_i` act on a basis tableau.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PiAction<T> {
    Zero,
    Fixed,
    Moved(T),
}

/// Geometry of a generalized ribbon diagram. Columns are numbered left to
/// right across all blocks; rows are heights `y`, bottom row `0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RibbonShape {
    blocks: Vec<Composition>,
    lengths: Vec<usize>,
    bottoms: Vec<usize>,
    joined: Vec<bool>,
}

impl RibbonShape {
    pub fn new(g: &GeneralizedComposition) -> Self {
        Self::build(g.blocks().to_vec())
    }

    /// Single-block shape; the empty composition gives the empty diagram.
    pub fn from_composition(c: &Composition) -> Self {
        Self::build(vec![c.clone()])
    }

    fn build(blocks: Vec<Composition>) -> Self {
        let mut lengths = Vec::new();
        let mut bottoms = Vec::new();
        let mut joined = Vec::new();
        for block in blocks.iter() {
            for (k, &len) in block.parts().iter().enumerate() {
                let bottom = match lengths.last() {
                    None => 0,
                    Some(&prev_len) => {
                        let prev_top = bottoms.last().unwrap() + prev_len - 1;
                        if k == 0 {
                            prev_top + 1
                        } else {
                            prev_top
                        }
                    }
                };
                lengths.push(len);
                bottoms.push(bottom);
                joined.push(k > 0);
            }
        }
        RibbonShape { blocks, lengths, bottoms, joined }
    }

    pub fn blocks(&self) -> &[Composition] {
        &self.blocks
    }

    pub fn generalized(&self) -> Option<GeneralizedComposition> {
        GeneralizedComposition::new(self.blocks.clone()).ok()
    }

    pub fn size(&self) -> usize {
        self.lengths.iter().sum()
    }

    pub fn num_columns(&self) -> usize {
        self.lengths.len()
    }

    pub fn column_len(&self, c: usize) -> usize {
        self.lengths[c]
    }

    /// Whether column `c` shares a row with column `c − 1` (same block).
    pub fn joined_to_previous(&self, c: usize) -> bool {
        self.joined[c]
    }

    pub fn top_y(&self, c: usize) -> usize {
        self.bottoms[c] + self.lengths[c] - 1
    }

    /// Height of the cell `t` steps below the top of column `c`.
    pub fn cell_y(&self, c: usize, t: usize) -> usize {
        self.top_y(c) - t
    }

    /// Cells `(column, index from top)` ordered for the reading word:
    /// rows from the bottom up, each row left to right.
    pub fn reading_order(&self) -> Vec<(usize, usize)> {
        let mut cells: Vec<(usize, usize)> =
            (0..self.num_columns()).flat_map(|c| (0..self.lengths[c]).map(move |t| (c, t))).collect();
        cells.sort_by_key(|&(c, t)| (self.cell_y(c, t), c));
        cells
    }

    /// Cells ordered rows from the top down, each row left to right.
    pub fn row_major_order(&self) -> Vec<(usize, usize)> {
        let mut cells = self.reading_order();
        cells.sort_by_key(|&(c, t)| (std::cmp::Reverse(self.cell_y(c, t)), c));
        cells
    }
}

impl fmt::Display for RibbonShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.blocks.iter().map(|b| b.to_string()).collect();
        write!(f, "{}", s.join("|"))
    }
}

/// A standard ribbon tableau: `columns[c]` lists column `c` from top to bottom.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Srt {
    shape: Arc<RibbonShape>,
    columns: Vec<Vec<usize>>,
}

fn fill_valid(shape: &RibbonShape, columns: &[Vec<usize>]) -> bool {
    if columns.len() != shape.num_columns() {
        return false;
    }
    let n = shape.size();
    let mut seen = vec![false; n + 1];
    for (c, col) in columns.iter().enumerate() {
        if col.len() != shape.column_len(c) {
            return false;
        }
        for &x in col {
            if x == 0 || x > n || seen[x] {
                return false;
            }
            seen[x] = true;
        }
        if col.windows(2).any(|w| w[0] >= w[1]) {
            return false;
        }
        if c > 0 && shape.joined_to_previous(c) && columns[c - 1][0] >= *col.last().unwrap() {
            return false;
        }
    }
    true
}

impl Srt {
    pub fn new(shape: Arc<RibbonShape>, columns: Vec<Vec<usize>>) -> Result<Self, TableauError> {
        if !fill_valid(&shape, &columns) {
            return Err(TableauError::Invalid { shape: shape.to_string(), filling: format!("{columns:?}") });
        }
        Ok(Srt { shape, columns })
    }

    /// Fills the shape in reading order with `word`; `None` if not standard.
    pub fn from_reading_word(shape: Arc<RibbonShape>, word: &[usize]) -> Option<Self> {
        let mut columns: Vec<Vec<usize>> = (0..shape.num_columns()).map(|c| vec![0; shape.column_len(c)]).collect();
        let order = shape.reading_order();
        if order.len() != word.len() {
            return None;
        }
        for (&(c, t), &x) in order.iter().zip(word) {
            columns[c][t] = x;
        }
        fill_valid(&shape, &columns).then_some(Srt { shape, columns })
    }

    pub fn shape(&self) -> &Arc<RibbonShape> {
        &self.shape
    }

    pub fn columns(&self) -> &[Vec<usize>] {
        &self.columns
    }

    pub fn column(&self, c: usize) -> &[usize] {
        &self.columns[c]
    }

    /// Top entry of column `c` (0-based column).
    pub fn top(&self, c: usize) -> usize {
        self.columns[c][0]
    }

    pub fn size(&self) -> usize {
        self.shape.size()
    }

    pub fn locate(&self, x: usize) -> (usize, usize) {
        for (c, col) in self.columns.iter().enumerate() {
            if let Some(t) = col.iter().position(|&y| y == x) {
                return (c, t);
            }
        }
        panic!("{x} not in tableau");
    }

    fn heights(&self) -> Vec<usize> {
        let mut y = vec![0; self.size() + 1];
        for (c, col) in self.columns.iter().enumerate() {
            for (t, &x) in col.iter().enumerate() {
                y[x] = self.shape.cell_y(c, t);
            }
        }
        y
    }

    pub fn reading_word_vec(&self) -> Vec<usize> {
        self.shape.reading_order().into_iter().map(|(c, t)| self.columns[c][t]).collect()
    }

    pub fn reading_word(&self) -> Permutation {
        Permutation::new(self.reading_word_vec()).expect("standard filling")
    }

    /// `{i : i weakly below i + 1}`
    pub fn descents(&self) -> BTreeSet<usize> {
        let y = self.heights();
        (1..self.size()).filter(|&i| y[i] <= y[i + 1]).collect()
    }

    pub fn descent_composition(&self) -> Composition {
        Composition::from_set(&self.descents(), self.size()).unwrap()
    }

    fn swapped(&self, i: usize) -> Srt {
        let columns = self
            .columns
            .iter()
            .map(|col| {
                col.iter()
                    .map(|&x| {
                        if x == i {
                            i + 1
                        } else if x == i + 1 {
                            i
                        } else {
                            x
                        }
                    })
                    .collect()
            })
            .collect();
        Srt { shape: self.shape.clone(), columns }
    }

    pub fn pi(&self, i: usize) -> PiAction<Srt> {
        let y = self.heights();
        if y[i] > y[i + 1] {
            PiAction::Fixed
        } else if y[i] == y[i + 1] {
            PiAction::Zero
        } else {
            PiAction::Moved(self.swapped(i))
        }
    }

    /// Rows of each block, top row first, entries left to right.
    pub fn rows_by_block(&self) -> Vec<Vec<Vec<usize>>> {
        let mut out = Vec::new();
        let mut c = 0;
        for block in self.shape.blocks() {
            let cols: Vec<usize> = (c..c + block.len()).collect();
            c += block.len();
            let mut rows: Vec<(usize, Vec<usize>)> = Vec::new();
            let mut cells: Vec<(usize, usize, usize)> = cols
                .iter()
                .flat_map(|&cc| (0..self.shape.column_len(cc)).map(move |t| (cc, t)))
                .map(|(cc, t)| (self.shape.cell_y(cc, t), cc, self.columns[cc][t]))
                .collect();
            cells.sort_by_key(|&(y, cc, _)| (std::cmp::Reverse(y), cc));
            for (y, _, x) in cells {
                match rows.last_mut() {
                    Some((yy, r)) if *yy == y => r.push(x),
                    _ => rows.push((y, vec![x])),
                }
            }
            out.push(rows.into_iter().map(|(_, r)| r).collect());
        }
        out
    }
}

pub fn pi_on_srt(i: usize, t: &Srt) -> PiAction<Srt> {
    t.pi(i)
}

fn format_rows(rows: &[Vec<usize>]) -> String {
    rows.iter().map(|r| r.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")).collect::<Vec<_>>().join("/")
}

impl fmt::Display for Srt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let blocks: Vec<String> = self.rows_by_block().iter().map(|b| format_rows(b)).collect();
        write!(f, "{}", blocks.join("|"))
    }
}

fn parse_rows(s: &str) -> Result<Vec<Vec<usize>>, TableauError> {
    s.split('/')
        .map(|r| {
            r.split(',')
                .map(|x| x.trim().parse::<usize>())
                .collect::<Result<Vec<_>, _>>()
                .map_err(|_| TableauError::Parse(s.to_string()))
        })
        .collect()
}

impl FromStr for Srt {
    type Err = TableauError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s.is_empty() {
            return Srt::new(Arc::new(RibbonShape::from_composition(&Composition::empty())), Vec::new());
        }
        let mut blocks = Vec::new();
        let mut columns = Vec::new();
        for block in s.split('|') {
            let rows = parse_rows(block)?;
            // bottom row starts at x = 0; each higher row starts above the
            // last cell of the row below it
            let mut cells: Vec<(usize, usize, usize)> = Vec::new();
            let mut x0 = 0;
            for (depth, row) in rows.iter().rev().enumerate() {
                for (k, &v) in row.iter().enumerate() {
                    cells.push((x0 + k, depth, v));
                }
                x0 += row.len() - 1;
            }
            let width = x0 + 1;
            let mut cols: Vec<Vec<(usize, usize)>> = vec![Vec::new(); width];
            for (x, y, v) in cells {
                cols[x].push((y, v));
            }
            let mut parts = Vec::new();
            for mut col in cols {
                col.sort_by_key(|&(y, _)| std::cmp::Reverse(y));
                parts.push(col.len());
                columns.push(col.into_iter().map(|(_, v)| v).collect());
            }
            blocks.push(Composition::new(parts)?);
        }
        let g = GeneralizedComposition::new(blocks)?;
        Srt::new(Arc::new(RibbonShape::new(&g)), columns)
    }
}

/// A standard immaculate tableau: `rows[r]` lists row `r` (top row first).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Sit {
    shape: Composition,
    rows: Vec<Vec<usize>>,
}

impl Sit {
    pub fn new(rows: Vec<Vec<usize>>) -> Result<Self, TableauError> {
        let shape = Composition::new(rows.iter().map(Vec::len).collect())?;
        let n = shape.size();
        let mut seen = vec![false; n + 1];
        let mut ok = true;
        for r in &rows {
            for &x in r {
                if x == 0 || x > n || seen[x] {
                    ok = false;
                } else {
                    seen[x] = true;
                }
            }
            ok &= r.windows(2).all(|w| w[0] < w[1]);
        }
        ok &= rows.windows(2).all(|w| w[0][0] < w[1][0]);
        if !ok {
            return Err(TableauError::Invalid { shape: shape.to_string(), filling: format!("{rows:?}") });
        }
        Ok(Sit { shape, rows })
    }

    pub fn shape(&self) -> &Composition {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn size(&self) -> usize {
        self.shape.size()
    }

    /// Rows concatenated top to bottom.
    pub fn row_word(&self) -> Vec<usize> {
        self.rows.concat()
    }

    fn places(&self) -> Vec<(usize, usize)> {
        let mut p = vec![(0, 0); self.size() + 1];
        for (r, row) in self.rows.iter().enumerate() {
            for (k, &x) in row.iter().enumerate() {
                p[x] = (r, k);
            }
        }
        p
    }

    /// `{i : i strictly above i + 1}`
    pub fn descents(&self) -> BTreeSet<usize> {
        let p = self.places();
        (1..self.size()).filter(|&i| p[i].0 < p[i + 1].0).collect()
    }

    pub fn descent_composition(&self) -> Composition {
        Composition::from_set(&self.descents(), self.size()).unwrap()
    }

    pub fn pi(&self, i: usize) -> PiAction<Sit> {
        let p = self.places();
        if p[i].0 >= p[i + 1].0 {
            PiAction::Fixed
        } else if p[i].1 == 0 && p[i + 1].1 == 0 {
            PiAction::Zero
        } else {
            let rows = self
                .rows
                .iter()
                .map(|r| {
                    r.iter()
                        .map(|&x| {
                            if x == i {
                                i + 1
                            } else if x == i + 1 {
                                i
                            } else {
                                x
                            }
                        })
                        .collect()
                })
                .collect();
            PiAction::Moved(Sit { shape: self.shape.clone(), rows })
        }
    }
}

pub fn pi_on_sit(i: usize, t: &Sit) -> PiAction<Sit> {
    t.pi(i)
}

impl fmt::Display for Sit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", format_rows(&self.rows))
    }
}

impl FromStr for Sit {
    type Err = TableauError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s.is_empty() {
            return Sit::new(Vec::new());
        }
        Sit::new(parse_rows(s)?)
    }
}

/// All SRTs of a shape, sorted by reading word.
pub fn enumerate_srt_shape(shape: &Arc<RibbonShape>) -> Vec<Srt> {
    let n = shape.size();
    let cells: Vec<(usize, usize)> =
        (0..shape.num_columns()).flat_map(|c| (0..shape.column_len(c)).map(move |t| (c, t))).collect();
    let index: HashMap<(usize, usize), usize> = cells.iter().enumerate().map(|(k, &ct)| (ct, k)).collect();
    let prereq: Vec<Vec<usize>> = cells
        .iter()
        .map(|&(c, t)| {
            let mut p = Vec::new();
            if t > 0 {
                p.push(index[&(c, t - 1)]);
            }
            if t + 1 == shape.column_len(c) && c > 0 && shape.joined_to_previous(c) {
                p.push(index[&(c - 1, 0)]);
            }
            p
        })
        .collect();
    let mut fill = vec![0usize; cells.len()];
    let mut out = Vec::new();
    fn rec(v: usize, n: usize, prereq: &[Vec<usize>], fill: &mut Vec<usize>, done: &mut dyn FnMut(&[usize])) {
        if v > n {
            done(fill);
            return;
        }
        for k in 0..fill.len() {
            if fill[k] == 0 && prereq[k].iter().all(|&p| fill[p] != 0) {
                fill[k] = v;
                rec(v + 1, n, prereq, fill, done);
                fill[k] = 0;
            }
        }
    }
    let mut done = |f: &[usize]| {
        let mut columns: Vec<Vec<usize>> = (0..shape.num_columns()).map(|c| vec![0; shape.column_len(c)]).collect();
        for (k, &(c, t)) in cells.iter().enumerate() {
            columns[c][t] = f[k];
        }
        out.push(Srt { shape: shape.clone(), columns });
    };
    rec(1, n, &prereq, &mut fill, &mut done);
    out.sort_by_cached_key(Srt::reading_word_vec);
    out
}

pub fn enumerate_srt(g: &GeneralizedComposition) -> Vec<Srt> {
    enumerate_srt_shape(&Arc::new(RibbonShape::new(g)))
}

/// All SITs of shape `alpha`, sorted by row word.
pub fn enumerate_sit(alpha: &Composition) -> Vec<Sit> {
    let parts = alpha.parts().to_vec();
    let n = alpha.size();
    let mut rows: Vec<Vec<usize>> = parts.iter().map(|_| Vec::new()).collect();
    let mut out = Vec::new();
    fn rec(v: usize, n: usize, parts: &[usize], rows: &mut Vec<Vec<usize>>, out: &mut Vec<Sit>) {
        if v > n {
            out.push(Sit { shape: Composition::of(parts), rows: rows.clone() });
            return;
        }
        for r in 0..parts.len() {
            let len = rows[r].len();
            if len == parts[r] {
                continue;
            }
            if len == 0 && r > 0 && rows[r - 1].is_empty() {
                continue;
            }
            rows[r].push(v);
            rec(v + 1, n, parts, rows, out);
            rows[r].pop();
        }
    }
    rec(1, n, &parts, &mut rows, &mut out);
    out.sort_by_cached_key(Sit::row_word);
    out
}

/// `T_𝜶`: columns filled left to right, each from top to bottom.
pub fn source_tableau_shape(shape: &Arc<RibbonShape>) -> Srt {
    let mut next = 1;
    let columns = (0..shape.num_columns())
        .map(|c| {
            let col: Vec<usize> = (next..next + shape.column_len(c)).collect();
            next += shape.column_len(c);
            col
        })
        .collect();
    Srt { shape: shape.clone(), columns }
}

pub fn source_tableau(g: &GeneralizedComposition) -> Srt {
    source_tableau_shape(&Arc::new(RibbonShape::new(g)))
}

/// `T^←_𝜶`: rows filled from the top down, each left to right.
pub fn sink_tableau_shape(shape: &Arc<RibbonShape>) -> Srt {
    let mut columns: Vec<Vec<usize>> = (0..shape.num_columns()).map(|c| vec![0; shape.column_len(c)]).collect();
    for (k, (c, t)) in shape.row_major_order().into_iter().enumerate() {
        columns[c][t] = k + 1;
    }
    Srt { shape: shape.clone(), columns }
}

pub fn sink_tableau(g: &GeneralizedComposition) -> Srt {
    sink_tableau_shape(&Arc::new(RibbonShape::new(g)))
}

/// `𝒯_α`: rows filled from the top down, each left to right.
pub fn sit_source(alpha: &Composition) -> Sit {
    let mut next = 1;
    let rows = alpha
        .parts()
        .iter()
        .map(|&p| {
            let r: Vec<usize> = (next..next + p).collect();
            next += p;
            r
        })
        .collect();
    Sit { shape: alpha.clone(), rows }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(s: &str) -> GeneralizedComposition {
        s.parse().unwrap()
    }

    fn c(s: &str) -> Composition {
        s.parse().unwrap()
    }

    #[test]
    fn counts() {
        assert_eq!(enumerate_sit(&c("1,2,2")).len(), 3);
        assert_eq!(enumerate_srt(&g("4")).len(), 1);
        assert_eq!(enumerate_srt(&g("2,1|1")).len(), 8);
        assert_eq!(enumerate_srt(&g("1,2,1")).len(), 5);
    }

    #[test]
    fn geometry_of_two_blocks() {
        // (2,1)|(1): columns [1,2],[3],[4]; 2 and 3 share the bottom row? no:
        // top of column 0 (entry 1) shares a row with column 1 (entry 3)
        let t = source_tableau(&g("2,1|1"));
        assert_eq!(t.columns(), &[vec![1, 2], vec![3], vec![4]]);
        assert_eq!(t.reading_word_vec(), vec![2, 1, 3, 4]);
        assert_eq!(t.pi(1), PiAction::Fixed);
        assert_eq!(t.pi(3), PiAction::Moved(t.swapped(3)));
        assert_eq!(t.to_string(), "1,3/2|4");
        assert_eq!(t.to_string().parse::<Srt>().unwrap(), t);
    }

    #[test]
    fn single_column() {
        let t = source_tableau(&g("4"));
        assert!(t.descents().is_empty());
        assert_eq!(t.reading_word_vec(), vec![4, 3, 2, 1]);
        for i in 1..4 {
            assert_eq!(t.pi(i), PiAction::Fixed);
        }
    }

    #[test]
    fn sit_basics() {
        let s = sit_source(&c("1,2,2"));
        assert_eq!(s.rows(), &[vec![1], vec![2, 3], vec![4, 5]]);
        assert_eq!(s.descents(), c("1,2,2").descent_set());
        assert_eq!(s.to_string(), "1/2,3/4,5");
        assert_eq!("1/2,3/4,5".parse::<Sit>().unwrap(), s);
        assert!("2/1".parse::<Sit>().is_err());
        assert_eq!(s.pi(1), PiAction::Zero);
        assert_eq!(s.pi(2), PiAction::Fixed);
        assert!(matches!(s.pi(3), PiAction::Moved(_)));
    }

    #[test]
    fn srt_round_trips() {
        for s in ["2,1|1", "1|1|3,1,1,1", "1,2,2", "3,1,2"] {
            for t in enumerate_srt(&g(s)) {
                let text = t.to_string();
                let back: Srt = text.parse().unwrap();
                assert_eq!(back, t);
                assert_eq!(back.to_string(), text);
            }
        }
    }

    #[test]
    fn sink_is_stable() {
        for s in ["2,1|1", "1|1|2,1,1", "3,2"] {
            let t = sink_tableau(&g(s));
            for i in 1..t.size() {
                assert!(!matches!(t.pi(i), PiAction::Moved(_)));
            }
        }
    }
}
