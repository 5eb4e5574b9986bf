//! Explicit matrix models of the indecomposable nilpotent representations
//! of the two-vertex cyclic quiver: a pair x: V_q -> V_p, y: V_p -> V_q
//! acting on a zigzag basis.
//!
//! Each indecomposable is a single alternating row; the sign of the
//! rightmost box names the module. Both maps send a basis box to its left
//! neighbour when the signs allow it and to zero otherwise.

use crate::error::{Error, Result};
use crate::oracle::matrix::FieldMatrix;
use crate::signed::{Sign, SignedRow, SignedYoungDiagram};

/// A nilpotent pair: `x` maps V_q to V_p and `y` maps V_p to V_q, with
/// `xy` (equivalently `yx`) nilpotent.
#[derive(Clone, Debug)]
pub struct ModulePoint {
    x: FieldMatrix,
    y: FieldMatrix,
}

impl ModulePoint {
    pub fn new(x: FieldMatrix, y: FieldMatrix) -> Result<Self> {
        if x.rows() != y.cols() || x.cols() != y.rows() {
            return Err(Error::InvalidMatrix(format!(
                "pair dimensions do not match: x is {}x{}, y is {}x{}",
                x.rows(),
                x.cols(),
                y.rows(),
                y.cols()
            )));
        }
        let pt = ModulePoint { x, y };
        let nil = pt.xy().jordan_type().is_ok();
        if !nil {
            return Err(Error::NonNilpotent);
        }
        Ok(pt)
    }

    pub fn x(&self) -> &FieldMatrix {
        &self.x
    }

    pub fn y(&self) -> &FieldMatrix {
        &self.y
    }

    /// dim V_q.
    pub fn q(&self) -> usize {
        self.x.cols()
    }

    /// dim V_p.
    pub fn p(&self) -> usize {
        self.x.rows()
    }

    pub fn yx(&self) -> FieldMatrix {
        self.y.mul(&self.x)
    }

    pub fn xy(&self) -> FieldMatrix {
        self.x.mul(&self.y)
    }

    /// The nilpotent endomorphism of V_q (+) V_p sending (u, v) to
    /// (y v, x y v); block form [[0, y], [0, xy]].
    pub fn induced_nilpotent(&self) -> FieldMatrix {
        let m = self.x.modulus();
        FieldMatrix::from_blocks(
            &FieldMatrix::zero(self.q(), self.q(), m),
            &self.y,
            &FieldMatrix::zero(self.p(), self.q(), m),
            &self.xy(),
        )
    }
}

/// The indecomposable module of dimension `len` whose rightmost box carries
/// `last`. Plus boxes span the V_q part, minus boxes the V_p part.
pub fn indecomposable(last: Sign, len: usize, modulus: u64) -> Result<ModulePoint> {
    if len == 0 {
        return Err(Error::InvalidDiagram("zero-dimensional module".into()));
    }
    let row = SignedRow::new(len, if len % 2 == 1 { last } else { last.flip() })?;
    debug_assert_eq!(row.last_sign(), last);
    let q = row.plus_count();
    let p = row.minus_count();
    let mut x = FieldMatrix::zero(p, q, modulus);
    let mut y = FieldMatrix::zero(q, p, modulus);
    // box j (1-based) gets the next index within its part
    let mut q_idx = vec![usize::MAX; len + 1];
    let mut p_idx = vec![usize::MAX; len + 1];
    let (mut nq, mut np) = (0, 0);
    for j in 1..=len {
        match row.sign_at(j) {
            Sign::Plus => {
                q_idx[j] = nq;
                nq += 1;
            }
            Sign::Minus => {
                p_idx[j] = np;
                np += 1;
            }
        }
    }
    for j in 2..=len {
        match row.sign_at(j) {
            // x moves a plus box onto the minus box to its left
            Sign::Plus => x.set(p_idx[j - 1], q_idx[j], 1),
            // y moves a minus box onto the plus box to its left
            Sign::Minus => y.set(q_idx[j - 1], p_idx[j], 1),
        }
    }
    ModulePoint::new(x, y)
}

/// Block-diagonal direct sum of module points.
pub fn direct_sum(parts: &[ModulePoint], modulus: u64) -> ModulePoint {
    let q: usize = parts.iter().map(|m| m.q()).sum();
    let p: usize = parts.iter().map(|m| m.p()).sum();
    let mut x = FieldMatrix::zero(p, q, modulus);
    let mut y = FieldMatrix::zero(q, p, modulus);
    let (mut oq, mut op) = (0, 0);
    for part in parts {
        for r in 0..part.p() {
            for c in 0..part.q() {
                x.set(op + r, oq + c, part.x().get(r, c));
            }
        }
        for r in 0..part.q() {
            for c in 0..part.p() {
                y.set(oq + r, op + c, part.y().get(r, c));
            }
        }
        oq += part.q();
        op += part.p();
    }
    ModulePoint { x, y }
}

/// The signed diagram whose rows are the given (rightmost sign, length)
/// summands.
pub fn diagram_of_summands(summands: &[(Sign, usize)]) -> Result<SignedYoungDiagram> {
    SignedYoungDiagram::new(
        summands
            .iter()
            .map(|&(last, len)| {
                SignedRow::new(len, if len % 2 == 1 { last } else { last.flip() })
            })
            .collect::<Result<Vec<_>>>()?,
    )
}
