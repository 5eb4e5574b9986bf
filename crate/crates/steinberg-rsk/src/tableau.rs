//! Row-standard tableaux as chains of partitions, with restriction,
//! extension, jeu-de-taquin rectification, and evacuation.
//!
//! A row-standard tableau of content `(a_1, ..., a_n)` is a chain of
//! partitions `T(1) < ... < T(n)` where `|T(i)| = a_1 + ... + a_i` and each
//! skew `T(i)/T(i-1)` is a column strip. Equivalently it is a filling whose
//! rows strictly increase and whose columns weakly increase, with label `i`
//! occurring `a_i` times. The chain is the canonical representation here;
//! fillings are derived views.

use std::fmt;

use serde::de::Error as _;
use serde::ser::SerializeStruct;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::partition::{is_column_strip, Composition, Partition};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RowStandardTableau {
    chain: Vec<Partition>,
}

impl RowStandardTableau {
    pub fn new(chain: Vec<Partition>) -> Result<Self> {
        let mut prev = Partition::empty();
        for (idx, t) in chain.iter().enumerate() {
            if t.size() <= prev.size() {
                return Err(Error::InvalidTableau(format!(
                    "chain element {} does not grow: {} then {}",
                    idx + 1,
                    prev,
                    t
                )));
            }
            if !is_column_strip(&prev, t) {
                return Err(Error::InvalidTableau(format!(
                    "{} / {} is not a column strip",
                    t, prev
                )));
            }
            prev = t.clone();
        }
        Ok(RowStandardTableau { chain })
    }

    /// Convenience constructor from slices of parts.
    pub fn from_parts(chain: &[&[usize]]) -> Result<Self> {
        let chain = chain
            .iter()
            .map(|p| Partition::new(p.to_vec()))
            .collect::<Result<Vec<_>>>()?;
        Self::new(chain)
    }

    pub fn empty() -> Self {
        RowStandardTableau { chain: Vec::new() }
    }

    /// Number of chain steps `n`.
    pub fn steps(&self) -> usize {
        self.chain.len()
    }

    pub fn chain(&self) -> &[Partition] {
        &self.chain
    }

    /// The final chain element (the shape of the tableau).
    pub fn shape(&self) -> Partition {
        self.chain.last().cloned().unwrap_or_else(Partition::empty)
    }

    pub fn content(&self) -> Composition {
        let mut prev = 0;
        let parts = self
            .chain
            .iter()
            .map(|t| {
                let a = t.size() - prev;
                prev = t.size();
                a
            })
            .collect();
        Composition::new(parts).expect("chain sizes strictly increase")
    }

    /// True when every content part is 1.
    pub fn is_standard(&self) -> bool {
        self.content().parts().iter().all(|&a| a == 1)
    }

    /// The prefix chain `T(1), ..., T(i)`.
    pub fn restrict(&self, i: usize) -> Result<Self> {
        if i < 1 || i > self.steps() {
            return Err(Error::IndexOutOfRange {
                index: i,
                max: self.steps(),
            });
        }
        Ok(RowStandardTableau {
            chain: self.chain[..i].to_vec(),
        })
    }

    /// Appends `outer` to the chain. The new skew must be a nonempty column
    /// strip.
    pub fn extend(&self, outer: &Partition) -> Result<Self> {
        let top = self.shape();
        if outer.size() <= top.size() {
            return Err(Error::NotColumnStrip(format!(
                "extension {} of {} adds no boxes",
                outer, top
            )));
        }
        if !is_column_strip(&top, outer) {
            return Err(Error::NotColumnStrip(format!("{} / {}", outer, top)));
        }
        let mut chain = self.chain.clone();
        chain.push(outer.clone());
        Ok(RowStandardTableau { chain })
    }

    /// Jeu-de-taquin rectification of the skew tableau `T / T(i)`; the
    /// result is a straight-shape tableau of content `(a_{i+1}, ..., a_n)`.
    /// `rectify(t, 0)` returns `t` unchanged.
    pub fn rectify(&self, i: usize) -> Result<Self> {
        if i > self.steps() {
            return Err(Error::IndexOutOfRange {
                index: i,
                max: self.steps(),
            });
        }
        if i == 0 {
            return Ok(self.clone());
        }
        SkewFilling::from_chain(self, i)?.rectify()
    }

    /// Evacuation, computed literally as the chain of shapes of the
    /// rectified quotients: the `j`-th element is `shape(rectify(t, n-j))`.
    /// An involution; the content is reversed and the shape preserved.
    pub fn evacuate(&self) -> Result<Self> {
        let n = self.steps();
        let chain = (1..=n)
            .map(|j| self.rectify(n - j).map(|t| t.shape()))
            .collect::<Result<Vec<_>>>()?;
        RowStandardTableau::new(chain)
    }

    /// The filling view: `filling[r][c]` is the label of cell `(r, c)`.
    pub fn to_filling(&self) -> Vec<Vec<usize>> {
        let shape = self.shape();
        (0..shape.len())
            .map(|r| {
                (0..shape.part(r))
                    .map(|c| {
                        self.chain
                            .iter()
                            .position(|t| t.part(r) > c)
                            .expect("cell lies in the final shape")
                            + 1
                    })
                    .collect()
            })
            .collect()
    }

    /// Rebuilds the chain from a filling, validating that rows strictly
    /// increase, columns weakly increase, and labels are contiguous from 1.
    pub fn from_filling(rows: &[Vec<usize>]) -> Result<Self> {
        let m = rows.iter().flatten().copied().max().unwrap_or(0);
        if rows.iter().flatten().any(|&l| l == 0) {
            return Err(Error::InvalidTableau("label 0 in filling".into()));
        }
        let chain = (1..=m)
            .map(|label| {
                Partition::new(
                    rows.iter()
                        .map(|row| row.iter().take_while(|&&l| l <= label).count())
                        .collect(),
                )
                .map_err(|_| {
                    Error::InvalidTableau(format!("labels <= {label} do not form a partition"))
                })
            })
            .collect::<Result<Vec<_>>>()?;
        let t = RowStandardTableau::new(chain)?;
        if t.to_filling() != rows {
            return Err(Error::InvalidTableau(
                "filling is not row-strict and column-weak".into(),
            ));
        }
        Ok(t)
    }
}

impl fmt::Display for RowStandardTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, t) in self.chain.iter().enumerate() {
            if i > 0 {
                write!(f, ";")?;
            }
            write!(f, "{t}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for RowStandardTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Serialize for RowStandardTableau {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("RowStandardTableau", 3)?;
        st.serialize_field("content", &self.content())?;
        st.serialize_field("chain", &self.chain)?;
        // human-readable render; never parsed back
        st.serialize_field("filling", &self.to_filling())?;
        st.end()
    }
}

impl<'de> Deserialize<'de> for RowStandardTableau {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            #[serde(default)]
            content: Option<Vec<usize>>,
            chain: Vec<Partition>,
        }
        let raw = Raw::deserialize(d)?;
        let t = RowStandardTableau::new(raw.chain).map_err(D::Error::custom)?;
        if let Some(content) = raw.content {
            if content != t.content().parts() {
                return Err(D::Error::custom(format!(
                    "declared content {:?} does not match the chain",
                    content
                )));
            }
        }
        Ok(t)
    }
}

/// A skew tableau as a grid of labels over `outer / inner`.
#[derive(Clone, PartialEq, Eq)]
pub struct SkewFilling {
    inner: Partition,
    /// `grid[r]` has `outer.part(r)` slots; `None` marks inner cells.
    grid: Vec<Vec<Option<usize>>>,
}

impl SkewFilling {
    /// The skew tableau `T / T(i)`, with labels `1..=(n-i)`.
    pub fn from_chain(t: &RowStandardTableau, i: usize) -> Result<Self> {
        if i > t.steps() {
            return Err(Error::IndexOutOfRange {
                index: i,
                max: t.steps(),
            });
        }
        let inner = if i == 0 {
            Partition::empty()
        } else {
            t.chain()[i - 1].clone()
        };
        let outer = t.shape();
        let filling = t.to_filling();
        let grid = (0..outer.len())
            .map(|r| {
                (0..outer.part(r))
                    .map(|c| {
                        if c < inner.part(r) {
                            None
                        } else {
                            Some(filling[r][c] - i)
                        }
                    })
                    .collect()
            })
            .collect();
        Ok(SkewFilling { inner, grid })
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    pub fn outer(&self) -> Partition {
        Partition::from_unsorted(self.grid.iter().map(|row| row.len()).collect())
    }

    /// Validity in the filling sense: rows strictly increase, columns weakly
    /// increase, labels contiguous from 1 and each label set a column strip.
    pub fn is_valid(&self) -> bool {
        let outer: Vec<usize> = self.grid.iter().map(|row| row.len()).collect();
        if !outer.windows(2).all(|w| w[0] >= w[1]) {
            return false;
        }
        for (r, row) in self.grid.iter().enumerate() {
            for c in 0..row.len() {
                if (c < self.inner.part(r)) != row[c].is_none() {
                    return false;
                }
                if let Some(l) = row[c] {
                    if c + 1 < row.len() {
                        if let Some(right) = row[c + 1] {
                            if right <= l {
                                return false;
                            }
                        }
                    }
                    if r + 1 < self.grid.len() && c < self.grid[r + 1].len() {
                        if let Some(below) = self.grid[r + 1][c] {
                            if below < l {
                                return false;
                            }
                        }
                    }
                }
            }
        }
        let labels: Vec<usize> = self.grid.iter().flatten().flatten().copied().collect();
        let m = labels.iter().copied().max().unwrap_or(0);
        (1..=m).all(|l| labels.contains(&l))
    }

    /// Slides one hole out, starting from the bottom-most inner corner.
    /// Of the two candidate neighbours the smaller label moves into the
    /// hole; on a tie the cell from the right moves (this is the rule that
    /// preserves strict rows and weak columns for this tableau family).
    fn slide_once(&mut self) {
        let r0 = self.inner.len() - 1;
        let c0 = self.inner.part(r0) - 1;
        let (mut r, mut c) = (r0, c0);
        loop {
            let right = self.grid[r].get(c + 1).copied().flatten();
            let below = if r + 1 < self.grid.len() && c < self.grid[r + 1].len() {
                self.grid[r + 1][c]
            } else {
                None
            };
            match (right, below) {
                (None, None) => {
                    self.grid[r].truncate(c);
                    if self.grid[r].is_empty() {
                        self.grid.truncate(r);
                    }
                    break;
                }
                (Some(_), None) => {
                    self.grid[r][c] = self.grid[r][c + 1].take();
                    c += 1;
                }
                (None, Some(_)) => {
                    self.grid[r][c] = self.grid[r + 1][c].take();
                    r += 1;
                }
                (Some(a), Some(b)) => {
                    if a <= b {
                        self.grid[r][c] = self.grid[r][c + 1].take();
                        c += 1;
                    } else {
                        self.grid[r][c] = self.grid[r + 1][c].take();
                        r += 1;
                    }
                }
            }
        }
        self.inner = self.inner.remove_box(r0).expect("inner corner is removable");
    }

    /// Full rectification to a straight-shape tableau.
    pub fn rectify(mut self) -> Result<RowStandardTableau> {
        while !self.inner.is_empty() {
            self.slide_once();
        }
        let filling: Vec<Vec<usize>> = self
            .grid
            .iter()
            .map(|row| row.iter().map(|l| l.expect("no holes left")).collect())
            .collect();
        RowStandardTableau::from_filling(&filling)
    }
}

impl fmt::Debug for SkewFilling {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in &self.grid {
            for cell in row {
                match cell {
                    Some(l) => write!(f, "{l:>2} ")?,
                    None => write!(f, " . ")?,
                }
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// All standard Young tableaux of the given shape, as saturated chains
/// adding one box at a time.
pub fn enumerate_syt(shape: &Partition) -> Vec<RowStandardTableau> {
    fn go(
        current: &Partition,
        target: &Partition,
        chain: &mut Vec<Partition>,
        out: &mut Vec<RowStandardTableau>,
    ) {
        if current == target {
            out.push(RowStandardTableau {
                chain: chain.clone(),
            });
            return;
        }
        for r in 0..target.len() {
            if current.part(r) < target.part(r) && (r == 0 || current.part(r) < current.part(r - 1))
            {
                let next = current.add_box(r).expect("addable by construction");
                chain.push(next.clone());
                go(&next, target, chain, out);
                chain.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(
        &Partition::empty(),
        shape,
        &mut Vec::new(),
        &mut out,
    );
    out
}

/// All partitions obtained from `base` by adding a column strip of `size`
/// boxes.
pub fn column_strip_extensions(base: &Partition, size: usize) -> Vec<Partition> {
    fn go(
        base: &Partition,
        row: usize,
        remaining: usize,
        parts: &mut Vec<usize>,
        out: &mut Vec<Partition>,
    ) {
        if remaining == 0 {
            let mut full = parts.clone();
            for r in row..base.len() {
                full.push(base.part(r));
            }
            out.push(Partition::new(full).expect("weakly decreasing by construction"));
            return;
        }
        let prev = if row == 0 { usize::MAX } else { parts[row - 1] };
        // leave this row unchanged; past the base this would end the diagram
        if row < base.len() {
            parts.push(base.part(row));
            go(base, row + 1, remaining, parts, out);
            parts.pop();
        }
        // add one box in this row
        if base.part(row) < prev {
            parts.push(base.part(row) + 1);
            go(base, row + 1, remaining - 1, parts, out);
            parts.pop();
        }
    }
    let mut out = Vec::new();
    go(base, 0, size, &mut Vec::new(), &mut out);
    out.sort();
    out.dedup();
    out
}

/// All row-standard tableaux with the given content.
pub fn enumerate_with_content(content: &Composition) -> Vec<RowStandardTableau> {
    fn go(
        content: &[usize],
        current: &Partition,
        chain: &mut Vec<Partition>,
        out: &mut Vec<RowStandardTableau>,
    ) {
        match content.split_first() {
            None => out.push(RowStandardTableau {
                chain: chain.clone(),
            }),
            Some((&a, rest)) => {
                for next in column_strip_extensions(current, a) {
                    chain.push(next.clone());
                    go(rest, &next, chain, out);
                    chain.pop();
                }
            }
        }
    }
    let mut out = Vec::new();
    go(
        content.parts(),
        &Partition::empty(),
        &mut Vec::new(),
        &mut out,
    );
    out
}
