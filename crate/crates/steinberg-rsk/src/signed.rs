//! Signed Young diagrams: alternating +/- rows up to permutation of equal
//! rows. These classify nilpotent pairs (x, y) with x: V_q -> V_p and
//! y: V_p -> V_q up to base change, via the Jordan data of yx, xy and the
//! kernel filtration of x and y. Admissible diagrams are the ones whose
//! shape is the componentwise sum of the plus and minus shapes; they are
//! exactly the diagrams reached from partial permutations.

use std::fmt;

use serde::de::Error as _;
use serde::ser::SerializeStruct;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::partition::Partition;

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum Sign {
    Minus,
    Plus,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Minus => Sign::Plus,
            Sign::Plus => Sign::Minus,
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Sign::Minus => '-',
            Sign::Plus => '+',
        }
    }

    pub fn from_char(c: char) -> Result<Sign> {
        match c {
            '-' => Ok(Sign::Minus),
            '+' => Ok(Sign::Plus),
            _ => Err(Error::InvalidDiagram(format!("bad sign {c:?}"))),
        }
    }
}

/// One row: its length and the sign of its first box. Signs alternate
/// within the row.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct SignedRow {
    pub len: usize,
    pub first: Sign,
}

impl SignedRow {
    pub fn new(len: usize, first: Sign) -> Result<Self> {
        if len == 0 {
            return Err(Error::InvalidDiagram("zero-length row".into()));
        }
        Ok(SignedRow { len, first })
    }

    /// Sign of the box in 1-based column `col`.
    pub fn sign_at(&self, col: usize) -> Sign {
        if col % 2 == 1 {
            self.first
        } else {
            self.first.flip()
        }
    }

    pub fn last_sign(&self) -> Sign {
        self.sign_at(self.len)
    }

    pub fn plus_count(&self) -> usize {
        match self.first {
            Sign::Plus => self.len.div_ceil(2),
            Sign::Minus => self.len / 2,
        }
    }

    pub fn minus_count(&self) -> usize {
        self.len - self.plus_count()
    }

    /// Count of `sign` boxes among the first `cols` columns.
    pub fn count_in_columns(&self, sign: Sign, cols: usize) -> usize {
        let c = self.len.min(cols);
        if sign == self.first {
            c.div_ceil(2)
        } else {
            c / 2
        }
    }

    pub fn render(&self) -> String {
        (1..=self.len).map(|c| self.sign_at(c).as_char()).collect()
    }

    /// Canonical ordering key: longer rows first, then minus-first rows
    /// before plus-first rows.
    fn key(&self) -> (std::cmp::Reverse<usize>, Sign) {
        (std::cmp::Reverse(self.len), self.first)
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct Signature {
    pub q: usize,
    pub p: usize,
}

/// A signed Young diagram in canonical form: rows sorted by length
/// descending, with minus-first rows before plus-first rows at equal length.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SignedYoungDiagram {
    rows: Vec<SignedRow>,
}

impl SignedYoungDiagram {
    pub fn new(mut rows: Vec<SignedRow>) -> Result<Self> {
        if rows.iter().any(|r| r.len == 0) {
            return Err(Error::InvalidDiagram("zero-length row".into()));
        }
        rows.sort_by_key(|r| r.key());
        Ok(SignedYoungDiagram { rows })
    }

    pub fn empty() -> Self {
        SignedYoungDiagram { rows: Vec::new() }
    }

    /// Parses rows like `"+-+"`; a test and CLI convenience.
    pub fn from_strings(rows: &[&str]) -> Result<Self> {
        let rows = rows
            .iter()
            .map(|s| {
                let signs = s
                    .chars()
                    .map(Sign::from_char)
                    .collect::<Result<Vec<_>>>()?;
                if signs.is_empty() {
                    return Err(Error::InvalidDiagram("empty row".into()));
                }
                if signs.windows(2).any(|w| w[0] == w[1]) {
                    return Err(Error::InvalidDiagram(format!(
                        "row {s:?} does not alternate"
                    )));
                }
                SignedRow::new(signs.len(), signs[0])
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(rows)
    }

    pub fn rows(&self) -> &[SignedRow] {
        &self.rows
    }

    /// Row lengths as a partition.
    pub fn shape(&self) -> Partition {
        Partition::from_unsorted(self.rows.iter().map(|r| r.len).collect())
    }

    pub fn signature(&self) -> Signature {
        Signature {
            q: self.rows.iter().map(|r| r.plus_count()).sum(),
            p: self.rows.iter().map(|r| r.minus_count()).sum(),
        }
    }

    /// Per-row counts of plus boxes, sorted decreasing.
    pub fn plus_shape(&self) -> Partition {
        Partition::from_unsorted(self.rows.iter().map(|r| r.plus_count()).collect())
    }

    /// Per-row counts of minus boxes, sorted decreasing.
    pub fn minus_shape(&self) -> Partition {
        Partition::from_unsorted(self.rows.iter().map(|r| r.minus_count()).collect())
    }

    /// Admissibility: the shape equals the componentwise sum of the plus
    /// and minus shapes.
    pub fn is_admissible(&self) -> bool {
        self.shape() == self.plus_shape().add(&self.minus_shape())
    }

    /// Equivalent admissibility criterion: for each odd length, all rows of
    /// that length carry the same signs.
    pub fn odd_rows_uniform(&self) -> bool {
        self.rows.iter().all(|r| {
            r.len % 2 == 0
                || self
                    .rows
                    .iter()
                    .all(|s| s.len != r.len || s.first == r.first)
        })
    }

    /// Jordan type of the associated one-step shift: drop every plus box
    /// outside the first column, left-align what remains, and append a
    /// one-box row for every plus box dropped.
    pub fn jordan_shape(&self) -> Partition {
        let mut kept = Vec::new();
        let mut dropped = 0;
        for r in &self.rows {
            let removed = match r.first {
                Sign::Plus => r.plus_count() - 1,
                Sign::Minus => r.plus_count(),
            };
            kept.push(r.len - removed);
            dropped += removed;
        }
        kept.extend(std::iter::repeat_n(1, dropped));
        Partition::from_unsorted(kept)
    }

    /// Number of `sign` boxes within the first `cols` columns; `cols` must
    /// be odd.
    pub fn boxes_in_first_columns(&self, sign: Sign, cols: usize) -> Result<usize> {
        if cols.is_multiple_of(2) {
            return Err(Error::InvalidInput(format!(
                "column count {cols} must be odd"
            )));
        }
        Ok(self
            .rows
            .iter()
            .map(|r| r.count_in_columns(sign, cols))
            .sum())
    }

    /// The closure order on orbits of nilpotent pairs: `self` lies in the
    /// closure of `other` iff the plus and minus shapes are dominated and
    /// every odd-column box count of `self` is at least that of `other`.
    pub fn closure_leq(&self, other: &SignedYoungDiagram) -> Result<bool> {
        let (s, o) = (self.signature(), other.signature());
        if s != o {
            return Err(Error::SignatureMismatch(s.q, s.p, o.q, o.p));
        }
        if !self.plus_shape().dominance_leq(&other.plus_shape())?
            || !self.minus_shape().dominance_leq(&other.minus_shape())?
        {
            return Ok(false);
        }
        let max_len = self
            .shape()
            .part(0)
            .max(other.shape().part(0));
        for i in 0..=max_len / 2 {
            let cols = 2 * i + 1;
            for sign in [Sign::Plus, Sign::Minus] {
                if self.boxes_in_first_columns(sign, cols)?
                    < other.boxes_in_first_columns(sign, cols)?
                {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Dimension of the orbit of nilpotent pairs classified by this
    /// diagram: half the nilpotent-orbit dimension of the shape.
    pub fn orbit_dim(&self) -> u64 {
        self.shape().nilpotent_orbit_dim() / 2
    }

    /// Flips every sign; swaps the signature; an involution.
    pub fn dual(&self) -> SignedYoungDiagram {
        SignedYoungDiagram::new(
            self.rows
                .iter()
                .map(|r| SignedRow {
                    len: r.len,
                    first: r.first.flip(),
                })
                .collect(),
        )
        .expect("row lengths unchanged")
    }

    pub fn render(&self) -> Vec<String> {
        self.rows.iter().map(|r| r.render()).collect()
    }
}

impl fmt::Display for SignedYoungDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, r) in self.rows.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", r.render())?;
        }
        write!(f, "}}")
    }
}

impl fmt::Debug for SignedYoungDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Serialize for SignedRow {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("SignedRow", 2)?;
        st.serialize_field("len", &self.len)?;
        st.serialize_field("first", &self.first.as_char().to_string())?;
        st.end()
    }
}

impl<'de> Deserialize<'de> for SignedRow {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            len: usize,
            first: String,
        }
        let raw = Raw::deserialize(d)?;
        let mut chars = raw.first.chars();
        let (Some(c), None) = (chars.next(), chars.next()) else {
            return Err(D::Error::custom("first must be \"+\" or \"-\""));
        };
        let first = Sign::from_char(c).map_err(D::Error::custom)?;
        SignedRow::new(raw.len, first).map_err(D::Error::custom)
    }
}

impl Serialize for SignedYoungDiagram {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("SignedYoungDiagram", 3)?;
        st.serialize_field("rows", &self.rows)?;
        st.serialize_field("signature", &self.signature())?;
        // output-only render of the +/- filling
        st.serialize_field("render", &self.render())?;
        st.end()
    }
}

impl<'de> Deserialize<'de> for SignedYoungDiagram {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            rows: Vec<SignedRow>,
        }
        let raw = Raw::deserialize(d)?;
        SignedYoungDiagram::new(raw.rows).map_err(D::Error::custom)
    }
}

/// All signed Young diagrams of the given signature, in canonical form.
pub fn enumerate_syd(sig: Signature) -> Vec<SignedYoungDiagram> {
    fn go(
        rem_q: usize,
        rem_p: usize,
        max_key: (usize, Sign),
        rows: &mut Vec<SignedRow>,
        out: &mut Vec<SignedYoungDiagram>,
    ) {
        if rem_q == 0 && rem_p == 0 {
            out.push(SignedYoungDiagram { rows: rows.clone() });
            return;
        }
        let (max_len, max_sign) = max_key;
        for len in (1..=(rem_q + rem_p).min(max_len)).rev() {
            for first in [Sign::Minus, Sign::Plus] {
                if len == max_len && first < max_sign {
                    continue;
                }
                let row = SignedRow { len, first };
                if row.plus_count() <= rem_q && row.minus_count() <= rem_p {
                    rows.push(row);
                    go(
                        rem_q - row.plus_count(),
                        rem_p - row.minus_count(),
                        (len, first),
                        rows,
                        out,
                    );
                    rows.pop();
                }
            }
        }
    }
    let mut out = Vec::new();
    go(
        sig.q,
        sig.p,
        (sig.q + sig.p, Sign::Minus),
        &mut Vec::new(),
        &mut out,
    );
    out
}

/// The admissible sublist of `enumerate_syd`.
pub fn enumerate_asyd(sig: Signature) -> Vec<SignedYoungDiagram> {
    enumerate_syd(sig)
        .into_iter()
        .filter(|d| d.is_admissible())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d(rows: &[&str]) -> SignedYoungDiagram {
        SignedYoungDiagram::from_strings(rows).unwrap()
    }

    fn pt(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn shapes() {
        assert_eq!(d(&["+-", "+-"]).shape(), pt(&[2, 2]));
        assert_eq!(d(&["-+-", "+"]).shape(), pt(&[3, 1]));
        assert_eq!(SignedYoungDiagram::empty().shape(), Partition::empty());
    }

    #[test]
    fn plus_minus_shapes() {
        let a = d(&["+-", "+-"]);
        assert_eq!(a.plus_shape(), pt(&[1, 1]));
        assert_eq!(a.minus_shape(), pt(&[1, 1]));
        let b = d(&["-+-+"]);
        assert_eq!(b.plus_shape(), pt(&[2]));
        assert_eq!(b.minus_shape(), pt(&[2]));
        let c = d(&["+"]);
        assert_eq!(c.plus_shape(), pt(&[1]));
        assert_eq!(c.minus_shape(), Partition::empty());
    }

    #[test]
    fn admissibility() {
        assert!(d(&["+-", "+-"]).is_admissible());
        assert!(!d(&["+", "-"]).is_admissible());
        assert!(d(&["+-", "-+"]).is_admissible());
        // all three criteria agree on every small diagram
        for q in 0..=4 {
            for p in 0..=4 {
                for dia in enumerate_syd(Signature { q, p }) {
                    assert_eq!(dia.is_admissible(), dia.odd_rows_uniform(), "{dia}");
                }
            }
        }
    }

    #[test]
    fn jordan_shapes() {
        assert_eq!(d(&["-+-+"]).jordan_shape(), pt(&[2, 1, 1]));
        assert_eq!(d(&["+-", "+-"]).jordan_shape(), pt(&[2, 2]));
        assert_eq!(d(&["+-+-"]).jordan_shape(), pt(&[3, 1]));
        // size is preserved
        for q in 0..=3 {
            for p in 0..=3 {
                for dia in enumerate_syd(Signature { q, p }) {
                    assert_eq!(dia.jordan_shape().size(), q + p);
                }
            }
        }
    }

    #[test]
    fn first_column_counts() {
        assert_eq!(
            d(&["+-+-"]).boxes_in_first_columns(Sign::Plus, 1).unwrap(),
            1
        );
        assert_eq!(
            d(&["-+-+"]).boxes_in_first_columns(Sign::Plus, 1).unwrap(),
            0
        );
        let a = d(&["+-+", "-+"]);
        let sig = a.signature();
        assert_eq!(
            a.boxes_in_first_columns(Sign::Plus, 9).unwrap(),
            sig.q
        );
        assert_eq!(
            a.boxes_in_first_columns(Sign::Minus, 9).unwrap(),
            sig.p
        );
        assert!(a.boxes_in_first_columns(Sign::Plus, 2).is_err());
    }

    #[test]
    fn closure_examples() {
        assert!(d(&["+-", "+-"]).closure_leq(&d(&["+-+-"])).unwrap());
        assert!(!d(&["+-+-"]).closure_leq(&d(&["+-", "+-"])).unwrap());
        let a = d(&["+-", "-+"]);
        assert!(a.closure_leq(&a).unwrap());
        assert!(d(&["+"]).closure_leq(&d(&["-"])).is_err());
    }

    #[test]
    fn orbit_dims() {
        assert_eq!(d(&["+-", "+-"]).orbit_dim(), 4);
        assert_eq!(d(&["+", "-"]).orbit_dim(), 0);
        assert_eq!(d(&["-+-+"]).orbit_dim(), 6);
    }

    #[test]
    fn duality() {
        assert_eq!(d(&["+-", "+-"]).dual(), d(&["-+", "-+"]));
        assert_eq!(d(&["-+-", "+"]).dual(), d(&["+-+", "-"]));
        for q in 0..=3 {
            for p in 0..=3 {
                for dia in enumerate_syd(Signature { q, p }) {
                    assert_eq!(dia.dual().dual(), dia);
                    let sig = dia.dual().signature();
                    assert_eq!((sig.q, sig.p), (p, q));
                }
            }
        }
    }

    #[test]
    fn enumeration_counts() {
        let syd11 = enumerate_syd(Signature { q: 1, p: 1 });
        assert_eq!(syd11.len(), 3);
        assert!(syd11.contains(&d(&["+-"])));
        assert!(syd11.contains(&d(&["-+"])));
        assert!(syd11.contains(&d(&["+", "-"])));
        assert_eq!(enumerate_asyd(Signature { q: 1, p: 1 }).len(), 2);

        let asyd22 = enumerate_asyd(Signature { q: 2, p: 2 });
        assert_eq!(asyd22.len(), 7);
        for rows in [
            vec!["+-", "+-"],
            vec!["-+", "-+"],
            vec!["+-", "-+"],
            vec!["+-+", "-"],
            vec!["-+-", "+"],
            vec!["+-+-"],
            vec!["-+-+"],
        ] {
            assert!(asyd22.contains(&d(&rows)), "{rows:?}");
        }

        let syd00 = enumerate_syd(Signature { q: 0, p: 0 });
        assert_eq!(syd00, vec![SignedYoungDiagram::empty()]);
    }

    #[test]
    fn canonical_form_is_order_independent() {
        let a = SignedYoungDiagram::from_strings(&["+", "-+-", "+-"]).unwrap();
        let b = SignedYoungDiagram::from_strings(&["-+-", "+-", "+"]).unwrap();
        assert_eq!(a, b);
        // minus-first rows come before plus-first rows of the same length
        let c = d(&["+-", "-+"]);
        assert_eq!(c.rows()[0].first, Sign::Minus);
    }

    #[test]
    fn json_round_trip() {
        let a = d(&["-+-", "+"]);
        let s = serde_json::to_string(&a).unwrap();
        assert!(s.contains("\"render\""));
        assert!(s.contains("\"signature\""));
        let back: SignedYoungDiagram = serde_json::from_str(&s).unwrap();
        assert_eq!(a, back);
        let parsed: SignedYoungDiagram =
            serde_json::from_str("{\"rows\":[{\"len\":3,\"first\":\"-\"},{\"len\":1,\"first\":\"+\"}]}")
                .unwrap();
        assert_eq!(parsed, a);
    }

    #[test]
    fn from_strings_rejects_non_alternating() {
        assert!(SignedYoungDiagram::from_strings(&["++"]).is_err());
        assert!(SignedYoungDiagram::from_strings(&[""]).is_err());
    }
}
