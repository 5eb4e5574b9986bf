//! Partial flags over the prime field, flag-restricted Jordan chains, and
//! relative positions of flag pairs.

use crate::error::{Error, Result};
use crate::oracle::matrix::FieldMatrix;
use crate::partition::{Composition, Partition};
use crate::rsk::MarginMatrix;
use crate::tableau::RowStandardTableau;

/// A partial flag of a given composition. Coordinate flags take the pieces
/// to be spans of leading basis vectors; general flags carry an invertible
/// change-of-basis matrix whose leading columns span the pieces.
#[derive(Clone, Debug)]
pub struct Flag {
    dim: usize,
    cuts: Vec<usize>,
    basis: Option<FieldMatrix>,
}

impl Flag {
    pub fn coordinate(comp: &Composition) -> Flag {
        Flag {
            dim: comp.total(),
            cuts: comp.cuts(),
            basis: None,
        }
    }

    /// Full coordinate flag in dimension `n`.
    pub fn full(n: usize) -> Flag {
        Flag::coordinate(&Composition::ones(n))
    }

    pub fn with_basis(comp: &Composition, basis: FieldMatrix) -> Result<Flag> {
        if basis.rows() != comp.total() || basis.cols() != comp.total() {
            return Err(Error::InvalidMatrix(format!(
                "basis is {}x{}, flag needs {}",
                basis.rows(),
                basis.cols(),
                comp.total()
            )));
        }
        Ok(Flag {
            dim: comp.total(),
            cuts: comp.cuts(),
            basis: Some(basis),
        })
    }

    /// Coordinate flag whose `j`-th basis vector is `e_{order[j]}`.
    pub fn from_order(comp: &Composition, order: &[usize], modulus: u64) -> Result<Flag> {
        if order.len() != comp.total() {
            return Err(Error::InvalidMatrix("order length mismatch".into()));
        }
        Flag::with_basis(comp, FieldMatrix::permutation(order, modulus))
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn pieces(&self) -> usize {
        self.cuts.len()
    }

    pub fn cuts(&self) -> &[usize] {
        &self.cuts
    }

    pub fn composition(&self) -> Composition {
        let mut prev = 0;
        Composition::new(
            self.cuts
                .iter()
                .map(|&c| {
                    let a = c - prev;
                    prev = c;
                    a
                })
                .collect(),
        )
        .expect("cuts strictly increase")
    }

    /// Basis of the `i`-th piece (1-based; 0 gives the zero space) as a
    /// `dim x cut` matrix of column vectors.
    pub fn piece_basis(&self, i: usize, modulus: u64) -> FieldMatrix {
        let cut = if i == 0 { 0 } else { self.cuts[i - 1] };
        match &self.basis {
            None => {
                let mut out = FieldMatrix::zero(self.dim, cut, modulus);
                for j in 0..cut {
                    out.set(j, j, 1);
                }
                out
            }
            Some(b) => b.submatrix(0..self.dim, 0..cut),
        }
    }

    /// Rewrites `m` in the flag's basis.
    pub fn adapt(&self, m: &FieldMatrix) -> Result<FieldMatrix> {
        match &self.basis {
            None => Ok(m.clone()),
            Some(b) => m.conjugate_by(b),
        }
    }
}

/// The chain of Jordan types of `m` restricted to the pieces of `f`.
/// Requires `m F_i` inside `F_{i-1}` for every piece (so in particular the
/// first piece lies in the kernel); the violation index is reported.
pub fn tab_chain(m: &FieldMatrix, f: &Flag) -> Result<RowStandardTableau> {
    let a = f.adapt(m)?;
    let mut lower = 0; // dimension of the previous piece
    for (i, &cut) in f.cuts().iter().enumerate() {
        for c in lower..cut {
            for r in lower..a.rows() {
                if a.get(r, c) != 0 {
                    return Err(Error::FlagViolation { index: i + 1 });
                }
            }
        }
        lower = cut;
    }
    let chain = f
        .cuts()
        .iter()
        .map(|&cut| a.principal(cut).jordan_type())
        .collect::<Result<Vec<_>>>()?;
    RowStandardTableau::new(chain)
}

/// Jordan types of `m` on the quotients `V/F_{n-1}, ..., V/F_0`: the
/// geometric evacuation chain of `tab_chain(m, f)`.
pub fn quotient_chain(m: &FieldMatrix, f: &Flag) -> Result<Vec<Partition>> {
    let a = f.adapt(m)?;
    let mut cuts: Vec<usize> = f.cuts().to_vec();
    cuts.pop(); // V/F_n is zero
    cuts.insert(0, 0);
    cuts.reverse();
    cuts.iter().map(|&cut| a.trailing(cut).jordan_type()).collect()
}

/// The relative position of two flags in one ambient space: the matrix of
/// intersection-rank increments, with rows indexed by the pieces of `f` and
/// columns by the pieces of `e`.
#[allow(clippy::needless_range_loop)] // 2-d rank tables read naturally with indices
pub fn schubert_position(e: &Flag, f: &Flag, modulus: u64) -> Result<MarginMatrix> {
    if e.dim() != f.dim() {
        return Err(Error::InvalidMatrix("flags in different ambient spaces".into()));
    }
    let ne = e.pieces();
    let nf = f.pieces();
    // T[l][k] = dim(E_k meet F_l)
    let mut table = vec![vec![0usize; ne + 1]; nf + 1];
    for l in 0..=nf {
        for k in 0..=ne {
            let eb = e.piece_basis(k, modulus);
            let fb = f.piece_basis(l, modulus);
            let joint = FieldMatrix::hstack(&[&eb, &fb]).rank();
            table[l][k] = eb.cols() + fb.cols() - joint;
        }
    }
    let entries = (1..=nf)
        .map(|l| {
            (1..=ne)
                .map(|k| {
                    table[l][k] + table[l - 1][k - 1] - table[l - 1][k] - table[l][k - 1]
                })
                .collect()
        })
        .collect();
    let m = MarginMatrix::new(entries)?;
    if m.row_margins() != f.composition() || m.col_margins() != e.composition() {
        return Err(Error::Inconsistent(
            "relative position margins do not match the flag compositions".into(),
        ));
    }
    Ok(m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::matrix::DEFAULT_PRIME;

    const P: u64 = DEFAULT_PRIME;

    fn comp(parts: &[usize]) -> Composition {
        Composition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn zero_map_full_flag() {
        let z = FieldMatrix::zero(2, 2, P);
        let t = tab_chain(&z, &Flag::full(2)).unwrap();
        assert_eq!(t, RowStandardTableau::from_parts(&[&[1], &[1, 1]]).unwrap());
    }

    #[test]
    fn block_nilpotent_fixtures() {
        // z = [[0, y], [0, 0]] with y invertible 2x2, on coordinates (e1, e2, f1, f2)
        let y = FieldMatrix::from_rows(vec![vec![1, 2], vec![3, 5]], P).unwrap();
        let z = FieldMatrix::from_blocks(
            &FieldMatrix::zero(2, 2, P),
            &y,
            &FieldMatrix::zero(2, 2, P),
            &FieldMatrix::zero(2, 2, P),
        );
        let q = tab_chain(&z, &Flag::coordinate(&comp(&[1, 1, 2]))).unwrap();
        assert_eq!(
            q,
            RowStandardTableau::from_parts(&[&[1], &[1, 1], &[2, 2]]).unwrap()
        );
        let p = tab_chain(&z, &Flag::coordinate(&comp(&[2, 1, 1]))).unwrap();
        assert_eq!(
            p,
            RowStandardTableau::from_parts(&[&[1, 1], &[2, 1], &[2, 2]]).unwrap()
        );
    }

    #[test]
    fn violation_reports_index() {
        let mut m = FieldMatrix::zero(2, 2, P);
        m.set(1, 0, 1); // maps e1 outside the zero space
        let err = tab_chain(&m, &Flag::full(2)).unwrap_err();
        assert!(matches!(err, Error::FlagViolation { index: 1 }));
    }

    #[test]
    fn quotient_chain_of_column_flag() {
        let y = FieldMatrix::from_rows(vec![vec![1, 2], vec![3, 5]], P).unwrap();
        let z = FieldMatrix::from_blocks(
            &FieldMatrix::zero(2, 2, P),
            &y,
            &FieldMatrix::zero(2, 2, P),
            &FieldMatrix::zero(2, 2, P),
        );
        let f = Flag::coordinate(&comp(&[2, 1, 1]));
        let chain = quotient_chain(&z, &f).unwrap();
        // on V/F_2 and V/F_1 the map vanishes; on V/F_0 = V it is z
        assert_eq!(chain[0], Partition::new(vec![1]).unwrap());
        assert_eq!(chain[1], Partition::new(vec![1, 1]).unwrap());
        assert_eq!(chain[2], Partition::new(vec![2, 2]).unwrap());
    }

    #[test]
    fn coincident_full_flags_are_diagonal() {
        let e = Flag::full(3);
        let f = Flag::full(3);
        let m = schubert_position(&e, &f, P).unwrap();
        assert_eq!(
            m.entries(),
            &[vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]]
        );
    }

    #[test]
    fn opposite_full_flags_are_antidiagonal() {
        let e = Flag::full(3);
        let f = Flag::from_order(&Composition::ones(3), &[2, 1, 0], P).unwrap();
        let m = schubert_position(&e, &f, P).unwrap();
        assert_eq!(
            m.entries(),
            &[vec![0, 0, 1], vec![0, 1, 0], vec![1, 0, 0]]
        );
    }
}
