//! Partial permutations, the bordering construction, and the bijection
//! between partial permutations and triples (admissible signed Young
//! diagram, standard tableau, standard tableau), with its inverse, duality,
//! and the census identity.

use std::collections::HashMap;
use std::fmt;

use rand::Rng;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::oracle::matrix::FieldMatrix;
use crate::partition::Partition;
use crate::rsk::{MarginMatrix, VariantRsk};
use crate::signed::{enumerate_asyd, Sign, SignedRow, SignedYoungDiagram, Signature};
use crate::tableau::RowStandardTableau;

/// A 0/1 matrix of size p x q with at most one nonzero entry in every row
/// and every column; positions are 1-indexed (row, column) pairs.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PartialPermutation {
    p: usize,
    q: usize,
    ones: Vec<(usize, usize)>,
}

impl PartialPermutation {
    pub fn new(p: usize, q: usize, mut ones: Vec<(usize, usize)>) -> Result<Self> {
        if p == 0 || q == 0 {
            return Err(Error::InvalidPermutation(
                "dimensions must be positive".into(),
            ));
        }
        ones.sort_unstable();
        if ones.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidPermutation("duplicate cell".into()));
        }
        for &(r, c) in &ones {
            if r < 1 || r > p || c < 1 || c > q {
                return Err(Error::InvalidPermutation(format!(
                    "cell ({r},{c}) outside {p}x{q}"
                )));
            }
        }
        for w in ones.windows(2) {
            if w[0].0 == w[1].0 {
                return Err(Error::InvalidPermutation(format!(
                    "two entries in row {}",
                    w[0].0
                )));
            }
        }
        let mut cols: Vec<usize> = ones.iter().map(|&(_, c)| c).collect();
        cols.sort_unstable();
        if cols.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidPermutation("two entries in one column".into()));
        }
        Ok(PartialPermutation { p, q, ones })
    }

    pub fn zero(p: usize, q: usize) -> Result<Self> {
        PartialPermutation::new(p, q, Vec::new())
    }

    pub fn p(&self) -> usize {
        self.p
    }

    pub fn q(&self) -> usize {
        self.q
    }

    pub fn ones(&self) -> &[(usize, usize)] {
        &self.ones
    }

    pub fn rank(&self) -> usize {
        self.ones.len()
    }

    pub fn entry(&self, r: usize, c: usize) -> usize {
        usize::from(self.ones.binary_search(&(r, c)).is_ok())
    }

    /// The transposed partial permutation in PP(q, p).
    pub fn transpose(&self) -> PartialPermutation {
        let mut ones: Vec<(usize, usize)> = self.ones.iter().map(|&(r, c)| (c, r)).collect();
        ones.sort_unstable();
        PartialPermutation {
            p: self.q,
            q: self.p,
            ones,
        }
    }

    pub fn as_field_matrix(&self, modulus: u64) -> FieldMatrix {
        let mut m = FieldMatrix::zero(self.p, self.q, modulus);
        for &(r, c) in &self.ones {
            m.set(r - 1, c - 1, 1);
        }
        m
    }
}

impl fmt::Display for PartialPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "pp({}x{};", self.p, self.q)?;
        for (i, &(r, c)) in self.ones.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, " {r}->{c}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for PartialPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Serialize for PartialPermutation {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("PartialPermutation", 3)?;
        st.serialize_field("p", &self.p)?;
        st.serialize_field("q", &self.q)?;
        st.serialize_field("ones", &self.ones)?;
        st.end()
    }
}

impl<'de> Deserialize<'de> for PartialPermutation {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            p: usize,
            q: usize,
            #[serde(default)]
            ones: Vec<(usize, usize)>,
        }
        let raw = Raw::deserialize(d)?;
        PartialPermutation::new(raw.p, raw.q, raw.ones).map_err(D::Error::custom)
    }
}

/// The (p+1) x (q+1) bordered matrix of a partial permutation: a new top
/// row marking the free columns and the rank, and a new right column
/// marking the free rows. Row margins are (q, 1, ..., 1) and column margins
/// (1, ..., 1, p).
#[allow(clippy::needless_range_loop)] // the border formula is clearest with indices
pub fn bordered_matrix(t: &PartialPermutation) -> MarginMatrix {
    let (p, q) = (t.p(), t.q());
    let mut entries = vec![vec![0usize; q + 1]; p + 1];
    for c in 1..=q {
        entries[0][c - 1] = 1 - t.ones().iter().filter(|&&(_, cc)| cc == c).count();
    }
    entries[0][q] = t.rank();
    for r in 1..=p {
        for c in 1..=q {
            entries[r][c - 1] = t.entry(r, c);
        }
        entries[r][q] = 1 - t.ones().iter().filter(|&&(rr, _)| rr == r).count();
    }
    MarginMatrix::new(entries).expect("bordered margins are positive")
}

/// The triple attached to a partial permutation: an admissible signed
/// diagram and two standard tableaux whose shapes are its plus and minus
/// shapes.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize)]
pub struct CorrespondenceTriple {
    pub diagram: SignedYoungDiagram,
    pub q_tab: RowStandardTableau,
    pub p_tab: RowStandardTableau,
}

impl CorrespondenceTriple {
    pub fn new(
        diagram: SignedYoungDiagram,
        q_tab: RowStandardTableau,
        p_tab: RowStandardTableau,
    ) -> Result<Self> {
        if !diagram.is_admissible() {
            return Err(Error::InvalidDiagram(format!(
                "{diagram} is not admissible"
            )));
        }
        if !q_tab.is_standard() || q_tab.shape() != diagram.plus_shape() {
            return Err(Error::InvalidTableau(format!(
                "first tableau must be standard of shape {}",
                diagram.plus_shape()
            )));
        }
        if !p_tab.is_standard() || p_tab.shape() != diagram.minus_shape() {
            return Err(Error::InvalidTableau(format!(
                "second tableau must be standard of shape {}",
                diagram.minus_shape()
            )));
        }
        Ok(CorrespondenceTriple {
            diagram,
            q_tab,
            p_tab,
        })
    }
}

impl<'de> Deserialize<'de> for CorrespondenceTriple {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            diagram: SignedYoungDiagram,
            q_tab: RowStandardTableau,
            p_tab: RowStandardTableau,
        }
        let raw = Raw::deserialize(d)?;
        CorrespondenceTriple::new(raw.diagram, raw.q_tab, raw.p_tab).map_err(D::Error::custom)
    }
}

/// Forward direction of the bijection. The bordered matrix is pushed
/// through the variant RSK; the first tableau restricts to the recording
/// side, the second rectifies to the insertion side, and the diagram is
/// assembled row by row from the two shapes with the sign rule "plus first
/// exactly when the minus shape falls short of the generic Jordan type".
/// Internal consistency failures are hard errors: they indicate convention
/// drift, not bad input.
pub fn forward<R: Rng + ?Sized>(
    t: &PartialPermutation,
    rsk: &mut VariantRsk,
    rng: &mut R,
) -> Result<CorrespondenceTriple> {
    let (q_hat, p_hat) = rsk.variant_rsk(&bordered_matrix(t), rng)?;
    let lambda = q_hat.shape();
    let q_tab = q_hat.restrict(t.q())?;
    let p_tab = p_hat.rectify(1)?;
    let plus = q_tab.shape();
    let minus = p_tab.shape();
    let mut rows = Vec::new();
    for i in 0..plus.len().max(minus.len()) {
        let len = plus.part(i) + minus.part(i);
        let first = if minus.part(i) < lambda.part(i) {
            Sign::Plus
        } else {
            Sign::Minus
        };
        rows.push(SignedRow::new(len, first)?);
    }
    let diagram = SignedYoungDiagram::new(rows)?;
    if !diagram.is_admissible() {
        return Err(Error::Inconsistent(format!(
            "forward image {diagram} of {t} is not admissible"
        )));
    }
    if diagram.jordan_shape() != lambda {
        return Err(Error::Inconsistent(format!(
            "shift shape of {diagram} is not the generic Jordan type {lambda}"
        )));
    }
    if diagram.plus_shape() != plus || diagram.minus_shape() != minus {
        return Err(Error::Inconsistent(format!(
            "row signs of {diagram} disagree with the tableau shapes {plus}, {minus}"
        )));
    }
    CorrespondenceTriple::new(diagram, q_tab, p_tab)
}

/// Inverse direction: rebuild the bordered pair by extending the first
/// tableau with the diagram's shift shape and conjugating the second with
/// evacuation, then invert the variant RSK and cut out the lower-left
/// block.
pub fn inverse<R: Rng + ?Sized>(
    tr: &CorrespondenceTriple,
    rsk: &mut VariantRsk,
    rng: &mut R,
) -> Result<PartialPermutation> {
    let Signature { q, p } = tr.diagram.signature();
    let lambda = tr.diagram.jordan_shape();
    let q_hat = tr.q_tab.extend(&lambda)?;
    let p_hat = tr.p_tab.evacuate()?.extend(&lambda)?.evacuate()?;
    let sigma = rsk.variant_rsk_inverse(&q_hat, &p_hat, rng)?;
    if sigma.rows() != p + 1 || sigma.cols() != q + 1 {
        return Err(Error::NoPreimage(format!(
            "preimage is {}x{}, expected {}x{}",
            sigma.rows(),
            sigma.cols(),
            p + 1,
            q + 1
        )));
    }
    let mut ones = Vec::new();
    for r in 1..=p {
        for c in 1..=q {
            match sigma.entry(r, c - 1) {
                0 => {}
                1 => ones.push((r, c)),
                _ => {
                    return Err(Error::NoPreimage(
                        "lower-left block is not a partial permutation".into(),
                    ))
                }
            }
        }
    }
    let tau = PartialPermutation::new(p, q, ones)?;
    if bordered_matrix(&tau) != sigma {
        return Err(Error::Inconsistent(
            "preimage border does not match its own bordered matrix".into(),
        ));
    }
    Ok(tau)
}

/// The diagram component of the forward map; always admissible.
pub fn orbit_diagram<R: Rng + ?Sized>(
    t: &PartialPermutation,
    rsk: &mut VariantRsk,
    rng: &mut R,
) -> Result<SignedYoungDiagram> {
    Ok(forward(t, rsk, rng)?.diagram)
}

/// The dual partial permutation: with forward image (diagram, Q, P), the
/// element of PP(q, p) whose triple is (flipped diagram, P, Q). An
/// involution.
pub fn dual<R: Rng + ?Sized>(
    t: &PartialPermutation,
    rsk: &mut VariantRsk,
    rng: &mut R,
) -> Result<PartialPermutation> {
    let tr = forward(t, rsk, rng)?;
    let flipped = CorrespondenceTriple::new(tr.diagram.dual(), tr.p_tab, tr.q_tab)?;
    inverse(&flipped, rsk, rng)
}

/// All partial permutations of size p x q.
pub fn enumerate_pp(p: usize, q: usize) -> Vec<PartialPermutation> {
    fn go(
        p: usize,
        q: usize,
        row: usize,
        used: &mut Vec<bool>,
        ones: &mut Vec<(usize, usize)>,
        out: &mut Vec<PartialPermutation>,
    ) {
        if row > p {
            out.push(PartialPermutation {
                p,
                q,
                ones: ones.clone(),
            });
            return;
        }
        go(p, q, row + 1, used, ones, out);
        for c in 1..=q {
            if !used[c] {
                used[c] = true;
                ones.push((row, c));
                go(p, q, row + 1, used, ones, out);
                ones.pop();
                used[c] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(
        p,
        q,
        1,
        &mut vec![false; q + 1],
        &mut Vec::new(),
        &mut out,
    );
    out.sort();
    out
}

/// A random partial permutation: uniform rank bound, then random distinct
/// rows, columns, and matching.
pub fn random_pp<R: Rng + ?Sized>(p: usize, q: usize, rng: &mut R) -> PartialPermutation {
    let k = rng.random_range(0..=p.min(q));
    let mut rows: Vec<usize> = (1..=p).collect();
    let mut cols: Vec<usize> = (1..=q).collect();
    for i in (1..rows.len()).rev() {
        rows.swap(i, rng.random_range(0..=i));
    }
    for i in (1..cols.len()).rev() {
        cols.swap(i, rng.random_range(0..=i));
    }
    let ones = rows[..k]
        .iter()
        .zip(&cols[..k])
        .map(|(&r, &c)| (r, c))
        .collect();
    PartialPermutation::new(p, q, ones).expect("distinct rows and columns")
}

/// Per-diagram tallies for the census identity.
#[derive(Clone, Debug, Serialize)]
pub struct DiagramCount {
    pub diagram: SignedYoungDiagram,
    pub observed: u64,
    pub expected: u64,
}

#[derive(Clone, Debug, Serialize)]
pub struct CensusReport {
    pub p: usize,
    pub q: usize,
    pub pp_count: u64,
    pub identity_holds: bool,
    pub per_diagram: Vec<DiagramCount>,
    pub failures: Vec<String>,
}

/// Verifies the census identity: the forward map is injective, lands in the
/// disjoint union over admissible diagrams of pairs of standard tableaux,
/// and covers it. Failures name the first offending triple.
pub fn census<R: Rng + ?Sized>(
    p: usize,
    q: usize,
    rsk: &mut VariantRsk,
    rng: &mut R,
) -> Result<CensusReport> {
    let pps = enumerate_pp(p, q);
    let mut failures = Vec::new();
    let mut seen: HashMap<(SignedYoungDiagram, Vec<Partition>, Vec<Partition>), PartialPermutation> =
        HashMap::new();
    let mut observed: HashMap<SignedYoungDiagram, u64> = HashMap::new();
    for t in &pps {
        let tr = forward(t, rsk, rng)?;
        let key = (
            tr.diagram.clone(),
            tr.q_tab.chain().to_vec(),
            tr.p_tab.chain().to_vec(),
        );
        if let Some(other) = seen.get(&key) {
            failures.push(format!(
                "collision: {t} and {other} share the triple ({}, {}, {})",
                tr.diagram, tr.q_tab, tr.p_tab
            ));
        } else {
            seen.insert(key, t.clone());
        }
        *observed.entry(tr.diagram).or_insert(0) += 1;
    }
    let admissible = enumerate_asyd(Signature { q, p });
    let mut per_diagram = Vec::new();
    for d in &admissible {
        let expected = d.plus_shape().count_syt()? * d.minus_shape().count_syt()?;
        let got = observed.remove(d).unwrap_or(0);
        if got != expected {
            failures.push(format!(
                "diagram {d}: observed {got} triples, expected {expected}"
            ));
        }
        per_diagram.push(DiagramCount {
            diagram: d.clone(),
            observed: got,
            expected,
        });
    }
    let mut leftovers: Vec<_> = observed.into_iter().collect();
    leftovers.sort_by_key(|(d, _)| d.render());
    for (d, got) in leftovers {
        failures.push(format!(
            "diagram {d} is hit {got} times but is not admissible of signature ({q},{p})"
        ));
    }
    let expected_total: u64 = per_diagram.iter().map(|c| c.expected).sum();
    if expected_total != pps.len() as u64 {
        failures.push(format!(
            "expected total {expected_total} differs from the permutation count {}",
            pps.len()
        ));
    }
    Ok(CensusReport {
        p,
        q,
        pp_count: pps.len() as u64,
        identity_holds: failures.is_empty(),
        per_diagram,
        failures,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn pp(p: usize, q: usize, ones: &[(usize, usize)]) -> PartialPermutation {
        PartialPermutation::new(p, q, ones.to_vec()).unwrap()
    }

    fn mm(entries: &[&[usize]]) -> MarginMatrix {
        MarginMatrix::new(entries.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    fn rst(chain: &[&[usize]]) -> RowStandardTableau {
        RowStandardTableau::from_parts(chain).unwrap()
    }

    fn d(rows: &[&str]) -> SignedYoungDiagram {
        SignedYoungDiagram::from_strings(rows).unwrap()
    }

    #[test]
    fn validation() {
        assert!(PartialPermutation::new(1, 1, vec![(1, 1), (1, 1)]).is_err());
        assert!(PartialPermutation::new(2, 2, vec![(1, 1), (1, 2)]).is_err());
        assert!(PartialPermutation::new(2, 2, vec![(1, 1), (2, 1)]).is_err());
        assert!(PartialPermutation::new(2, 2, vec![(3, 1)]).is_err());
        assert!(PartialPermutation::new(0, 1, vec![]).is_err());
    }

    #[test]
    fn bordered_fixtures() {
        assert_eq!(bordered_matrix(&pp(1, 1, &[])), mm(&[&[1, 0], &[0, 1]]));
        assert_eq!(
            bordered_matrix(&pp(1, 1, &[(1, 1)])),
            mm(&[&[0, 1], &[1, 0]])
        );
        assert_eq!(
            bordered_matrix(&pp(2, 2, &[])),
            mm(&[&[1, 1, 0], &[0, 0, 1], &[0, 0, 1]])
        );
        assert_eq!(
            bordered_matrix(&pp(2, 2, &[(1, 2)])),
            mm(&[&[1, 0, 1], &[0, 1, 0], &[0, 0, 1]])
        );
    }

    #[test]
    fn forward_fixtures() {
        let mut rsk = VariantRsk::new().unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let tr = forward(&pp(1, 1, &[]), &mut rsk, &mut rng).unwrap();
        assert_eq!(tr.diagram, d(&["+-"]));
        assert_eq!(tr.q_tab, rst(&[&[1]]));
        assert_eq!(tr.p_tab, rst(&[&[1]]));

        let tr = forward(&pp(2, 2, &[]), &mut rsk, &mut rng).unwrap();
        assert_eq!(tr.diagram, d(&["+-", "+-"]));
        assert_eq!(tr.q_tab, rst(&[&[1], &[1, 1]]));
        assert_eq!(tr.p_tab, rst(&[&[1], &[1, 1]]));

        let tr = forward(&pp(2, 2, &[(1, 1), (2, 2)]), &mut rsk, &mut rng).unwrap();
        assert_eq!(tr.diagram, d(&["-+-+"]));
        assert_eq!(tr.q_tab, rst(&[&[1], &[2]]));
        assert_eq!(tr.p_tab, rst(&[&[1], &[2]]));

        let tr = forward(&pp(2, 2, &[(1, 2)]), &mut rsk, &mut rng).unwrap();
        assert_eq!(tr.diagram, d(&["+-+-"]));
        assert_eq!(tr.q_tab, rst(&[&[1], &[2]]));
        assert_eq!(tr.p_tab, rst(&[&[1], &[2]]));
    }

    #[test]
    fn diagram_fixtures() {
        let mut rsk = VariantRsk::new().unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(8);
        assert_eq!(
            orbit_diagram(&pp(1, 1, &[(1, 1)]), &mut rsk, &mut rng).unwrap(),
            d(&["-+"])
        );
        assert_eq!(
            orbit_diagram(&pp(2, 2, &[(1, 2), (2, 1)]), &mut rsk, &mut rng).unwrap(),
            d(&["-+", "-+"])
        );
        assert_eq!(
            orbit_diagram(&pp(2, 2, &[(2, 1)]), &mut rsk, &mut rng).unwrap(),
            d(&["+-", "-+"])
        );
    }

    #[test]
    fn inverse_fixtures() {
        let mut rsk = VariantRsk::new().unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        let tr =
            CorrespondenceTriple::new(d(&["+-"]), rst(&[&[1]]), rst(&[&[1]])).unwrap();
        assert_eq!(inverse(&tr, &mut rsk, &mut rng).unwrap(), pp(1, 1, &[]));

        let col = rst(&[&[1], &[1, 1]]);
        let tr = CorrespondenceTriple::new(d(&["+-", "+-"]), col.clone(), col).unwrap();
        assert_eq!(inverse(&tr, &mut rsk, &mut rng).unwrap(), pp(2, 2, &[]));

        let row = rst(&[&[1], &[2]]);
        let tr = CorrespondenceTriple::new(d(&["+-+-"]), row.clone(), row).unwrap();
        assert_eq!(
            inverse(&tr, &mut rsk, &mut rng).unwrap(),
            pp(2, 2, &[(1, 2)])
        );
    }

    #[test]
    fn round_trip_small() {
        let mut rsk = VariantRsk::new().unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(10);
        for (p, q) in [(1, 1), (1, 2), (2, 1), (2, 2)] {
            for t in enumerate_pp(p, q) {
                let tr = forward(&t, &mut rsk, &mut rng).unwrap();
                assert_eq!(inverse(&tr, &mut rsk, &mut rng).unwrap(), t, "{t}");
            }
        }
    }

    #[test]
    fn dual_fixtures() {
        let mut rsk = VariantRsk::new().unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let zero = pp(2, 2, &[]);
        let anti = pp(2, 2, &[(1, 2), (2, 1)]);
        assert_eq!(dual(&zero, &mut rsk, &mut rng).unwrap(), anti);
        assert_eq!(dual(&anti, &mut rsk, &mut rng).unwrap(), zero);
        let id2 = pp(2, 2, &[(1, 1), (2, 2)]);
        let e12 = pp(2, 2, &[(1, 2)]);
        assert_eq!(dual(&id2, &mut rsk, &mut rng).unwrap(), e12);
        assert_eq!(dual(&e12, &mut rsk, &mut rng).unwrap(), id2);
        let e21 = pp(2, 2, &[(2, 1)]);
        assert_eq!(dual(&e21, &mut rsk, &mut rng).unwrap(), e21);
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(enumerate_pp(1, 1).len(), 2);
        assert_eq!(enumerate_pp(2, 2).len(), 7);
        assert_eq!(enumerate_pp(2, 3).len(), 13);
        assert_eq!(enumerate_pp(3, 3).len(), 34);
    }

    #[test]
    fn census_small() {
        let mut rsk = VariantRsk::new().unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(12);
        let report = census(1, 1, &mut rsk, &mut rng).unwrap();
        assert!(report.identity_holds);
        assert_eq!(report.pp_count, 2);
        assert_eq!(report.per_diagram.len(), 2);

        let report = census(2, 2, &mut rsk, &mut rng).unwrap();
        assert!(report.identity_holds, "{:?}", report.failures);
        assert_eq!(report.pp_count, 7);
        assert_eq!(report.per_diagram.len(), 7);

        let report = census(2, 3, &mut rsk, &mut rng).unwrap();
        assert!(report.identity_holds, "{:?}", report.failures);
        assert_eq!(report.pp_count, 13);
    }

    #[test]
    fn json_round_trip() {
        let t = pp(2, 2, &[(1, 2)]);
        let s = serde_json::to_string(&t).unwrap();
        assert_eq!(s, "{\"p\":2,\"q\":2,\"ones\":[[1,2]]}");
        let back: PartialPermutation = serde_json::from_str(&s).unwrap();
        assert_eq!(t, back);
        assert!(serde_json::from_str::<PartialPermutation>(
            "{\"p\":2,\"q\":2,\"ones\":[[1,1],[1,2]]}"
        )
        .is_err());
    }
}
