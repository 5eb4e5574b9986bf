//! Exact dense linear algebra over a word-sized prime field.

use std::fmt;

use rand::Rng;
use serde::de::Error as _;
use serde::ser::SerializeStruct;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::partition::Partition;

/// Default field prime, 2^31 - 1. Overridable through the
/// `STEINBERG_RSK_PRIME` environment variable.
pub const DEFAULT_PRIME: u64 = 2_147_483_647;

const PRIME_ENV: &str = "STEINBERG_RSK_PRIME";

/// Trial-division primality check; ample for word-sized candidates.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// The field prime to use: the explicit argument, else the environment
/// override, else the default. Must be an odd prime below 2^31.
pub fn resolve_prime(explicit: Option<u64>) -> Result<u64> {
    let candidate = match explicit {
        Some(p) => p,
        None => match std::env::var(PRIME_ENV) {
            Ok(s) => s
                .trim()
                .parse::<u64>()
                .map_err(|_| Error::InvalidInput(format!("{PRIME_ENV}={s:?} is not an integer")))?,
            Err(_) => DEFAULT_PRIME,
        },
    };
    if !(3..1 << 31).contains(&candidate) || !is_prime(candidate) {
        return Err(Error::NotPrime(candidate));
    }
    Ok(candidate)
}

fn mod_pow(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % m;
        }
        base = base * base % m;
        exp >>= 1;
    }
    acc
}

fn mod_inv(a: u64, m: u64) -> u64 {
    debug_assert!(!a.is_multiple_of(m));
    mod_pow(a, m - 2, m)
}

/// A dense matrix over F_p, entries stored reduced mod p.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FieldMatrix {
    rows: usize,
    cols: usize,
    modulus: u64,
    data: Vec<u64>,
}

impl FieldMatrix {
    pub fn zero(rows: usize, cols: usize, modulus: u64) -> Self {
        FieldMatrix {
            rows,
            cols,
            modulus,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(n: usize, modulus: u64) -> Self {
        let mut m = Self::zero(n, n, modulus);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<u64>>, modulus: u64) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::InvalidMatrix("ragged rows".into()));
        }
        Ok(FieldMatrix {
            rows: r,
            cols: c,
            modulus,
            data: rows.into_iter().flatten().map(|v| v % modulus).collect(),
        })
    }

    /// Parses `rows` lines of comma-separated integers, reduced mod p.
    pub fn from_csv(text: &str, modulus: u64) -> Result<Self> {
        let rows = text
            .lines()
            .filter(|l| !l.trim().is_empty())
            .map(|line| {
                line.split(',')
                    .map(|tok| {
                        let tok = tok.trim();
                        if let Some(neg) = tok.strip_prefix('-') {
                            let v: u64 = neg
                                .parse()
                                .map_err(|_| Error::InvalidInput(format!("bad entry {tok:?}")))?;
                            Ok((modulus - v % modulus) % modulus)
                        } else {
                            tok.parse::<u64>()
                                .map_err(|_| Error::InvalidInput(format!("bad entry {tok:?}")))
                        }
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_rows(rows, modulus)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> u64 {
        self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: u64) {
        self.data[r * self.cols + c] = v % self.modulus;
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&v| v == 0)
    }

    pub fn to_rows(&self) -> Vec<Vec<u64>> {
        (0..self.rows)
            .map(|r| self.data[r * self.cols..(r + 1) * self.cols].to_vec())
            .collect()
    }

    pub fn mul(&self, other: &FieldMatrix) -> FieldMatrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        assert_eq!(self.modulus, other.modulus);
        let m = self.modulus;
        let mut out = FieldMatrix::zero(self.rows, other.cols, m);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a == 0 {
                    continue;
                }
                for c in 0..other.cols {
                    let v = (out.get(r, c) + a * other.get(k, c)) % m;
                    out.data[r * other.cols + c] = v;
                }
            }
        }
        out
    }

    pub fn add(&self, other: &FieldMatrix) -> FieldMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let mut out = self.clone();
        for (a, &b) in out.data.iter_mut().zip(&other.data) {
            *a = (*a + b) % self.modulus;
        }
        out
    }

    pub fn sub(&self, other: &FieldMatrix) -> FieldMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let mut out = self.clone();
        for (a, &b) in out.data.iter_mut().zip(&other.data) {
            *a = (*a + self.modulus - b) % self.modulus;
        }
        out
    }

    pub fn transpose(&self) -> FieldMatrix {
        let mut out = FieldMatrix::zero(self.cols, self.rows, self.modulus);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.set(c, r, self.get(r, c));
            }
        }
        out
    }

    pub fn submatrix(
        &self,
        rr: std::ops::Range<usize>,
        cc: std::ops::Range<usize>,
    ) -> FieldMatrix {
        let mut out = FieldMatrix::zero(rr.len(), cc.len(), self.modulus);
        for (i, r) in rr.clone().enumerate() {
            for (j, c) in cc.clone().enumerate() {
                out.set(i, j, self.get(r, c));
            }
        }
        out
    }

    /// Leading principal `k`-square block.
    pub fn principal(&self, k: usize) -> FieldMatrix {
        self.submatrix(0..k, 0..k)
    }

    /// Trailing square block on coordinates `k..`.
    pub fn trailing(&self, k: usize) -> FieldMatrix {
        self.submatrix(k..self.rows, k..self.cols)
    }

    /// Horizontal concatenation.
    pub fn hstack(blocks: &[&FieldMatrix]) -> FieldMatrix {
        let rows = blocks.first().map_or(0, |b| b.rows);
        let modulus = blocks.first().map_or(DEFAULT_PRIME, |b| b.modulus);
        let cols = blocks.iter().map(|b| b.cols).sum();
        let mut out = FieldMatrix::zero(rows, cols, modulus);
        let mut offset = 0;
        for b in blocks {
            assert_eq!(b.rows, rows);
            for r in 0..rows {
                for c in 0..b.cols {
                    out.set(r, offset + c, b.get(r, c));
                }
            }
            offset += b.cols;
        }
        out
    }

    /// 2x2 block assembly `[[a, b], [c, d]]`.
    pub fn from_blocks(
        a: &FieldMatrix,
        b: &FieldMatrix,
        c: &FieldMatrix,
        d: &FieldMatrix,
    ) -> FieldMatrix {
        assert_eq!(a.rows, b.rows);
        assert_eq!(c.rows, d.rows);
        assert_eq!(a.cols, c.cols);
        assert_eq!(b.cols, d.cols);
        let mut out = FieldMatrix::zero(a.rows + c.rows, a.cols + b.cols, a.modulus);
        for (block, r0, c0) in [
            (a, 0, 0),
            (b, 0, a.cols),
            (c, a.rows, 0),
            (d, a.rows, a.cols),
        ] {
            for r in 0..block.rows {
                for c in 0..block.cols {
                    out.set(r0 + r, c0 + c, block.get(r, c));
                }
            }
        }
        out
    }

    /// Permutation matrix whose `j`-th column is the basis vector
    /// `e_{order[j]}`.
    pub fn permutation(order: &[usize], modulus: u64) -> FieldMatrix {
        let n = order.len();
        let mut out = FieldMatrix::zero(n, n, modulus);
        for (j, &i) in order.iter().enumerate() {
            out.set(i, j, 1);
        }
        out
    }

    fn echelon(&self) -> (FieldMatrix, Vec<usize>) {
        let m = self.modulus;
        let mut a = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..a.cols {
            let Some(pivot_row) = (row..a.rows).find(|&r| a.get(r, col) != 0) else {
                continue;
            };
            for c in 0..a.cols {
                let tmp = a.get(row, c);
                let v = a.get(pivot_row, c);
                a.set(row, c, v);
                a.set(pivot_row, c, tmp);
            }
            let inv = mod_inv(a.get(row, col), m);
            for c in 0..a.cols {
                let v = a.get(row, c) * inv % m;
                a.set(row, c, v);
            }
            for r in 0..a.rows {
                if r != row {
                    let factor = a.get(r, col);
                    if factor != 0 {
                        for c in 0..a.cols {
                            let v = (a.get(r, c) + (m - factor) * a.get(row, c)) % m;
                            a.set(r, c, v);
                        }
                    }
                }
            }
            pivots.push(col);
            row += 1;
            if row == a.rows {
                break;
            }
        }
        (a, pivots)
    }

    pub fn rank(&self) -> usize {
        self.echelon().1.len()
    }

    pub fn kernel_dim(&self) -> usize {
        self.cols - self.rank()
    }

    /// A basis of the right kernel, one vector of length `cols` per element.
    pub fn kernel_basis(&self) -> Vec<Vec<u64>> {
        let m = self.modulus;
        let (rref, pivots) = self.echelon();
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if pivots.contains(&free) {
                continue;
            }
            let mut v = vec![0u64; self.cols];
            v[free] = 1;
            for (r, &pc) in pivots.iter().enumerate() {
                let coeff = rref.get(r, free);
                if coeff != 0 {
                    v[pc] = (m - coeff) % m;
                }
            }
            basis.push(v);
        }
        basis
    }

    pub fn inverse(&self) -> Result<FieldMatrix> {
        if self.rows != self.cols {
            return Err(Error::InvalidMatrix("inverse of a non-square matrix".into()));
        }
        let n = self.rows;
        let aug = FieldMatrix::hstack(&[self, &FieldMatrix::identity(n, self.modulus)]);
        let (rref, pivots) = aug.echelon();
        if pivots.len() < n || pivots[..n] != (0..n).collect::<Vec<_>>()[..] {
            return Err(Error::InvalidMatrix("singular matrix".into()));
        }
        Ok(rref.submatrix(0..n, n..2 * n))
    }

    /// `basis^{-1} * self * basis`.
    pub fn conjugate_by(&self, basis: &FieldMatrix) -> Result<FieldMatrix> {
        Ok(basis.inverse()?.mul(self).mul(basis))
    }

    pub fn random<R: Rng + ?Sized>(rows: usize, cols: usize, modulus: u64, rng: &mut R) -> Self {
        let data = (0..rows * cols)
            .map(|_| rng.random_range(0..modulus))
            .collect();
        FieldMatrix {
            rows,
            cols,
            modulus,
            data,
        }
    }

    /// Random invertible upper-triangular matrix: nonzero diagonal, uniform
    /// strictly-upper entries.
    pub fn random_invertible_upper<R: Rng + ?Sized>(
        n: usize,
        modulus: u64,
        rng: &mut R,
    ) -> Self {
        let mut out = FieldMatrix::zero(n, n, modulus);
        for r in 0..n {
            out.set(r, r, rng.random_range(1..modulus));
            for c in r + 1..n {
                out.set(r, c, rng.random_range(0..modulus));
            }
        }
        out
    }

    /// Jordan type of a nilpotent square matrix. Nilpotency is verified by
    /// repeated squaring up to the ambient dimension; the conjugate parts of
    /// the output are the kernel-dimension increments of the powers.
    pub fn jordan_type(&self) -> Result<Partition> {
        if self.rows != self.cols {
            return Err(Error::InvalidMatrix("Jordan type of a non-square matrix".into()));
        }
        let n = self.rows;
        if n == 0 {
            return Ok(Partition::empty());
        }
        let mut s = self.clone();
        let mut exp = 1usize;
        while exp < n {
            s = s.mul(&s);
            exp *= 2;
        }
        if !s.is_zero() {
            return Err(Error::NonNilpotent);
        }
        let mut increments = Vec::new();
        let mut power = self.clone();
        let mut prev = 0;
        loop {
            let k = power.kernel_dim();
            increments.push(k - prev);
            prev = k;
            if k == n {
                break;
            }
            power = power.mul(self);
        }
        Ok(Partition::new(increments)?.conjugate())
    }
}

impl fmt::Debug for FieldMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "[{}x{} mod {}]", self.rows, self.cols, self.modulus)?;
        for r in 0..self.rows {
            for c in 0..self.cols {
                write!(f, "{:>4} ", self.get(r, c))?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

impl Serialize for FieldMatrix {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("FieldMatrix", 4)?;
        st.serialize_field("rows", &self.rows)?;
        st.serialize_field("cols", &self.cols)?;
        st.serialize_field("mod", &self.modulus)?;
        st.serialize_field("entries", &self.to_rows())?;
        st.end()
    }
}

impl<'de> Deserialize<'de> for FieldMatrix {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            rows: usize,
            cols: usize,
            #[serde(rename = "mod")]
            modulus: u64,
            entries: Vec<Vec<u64>>,
        }
        let raw = Raw::deserialize(d)?;
        if raw.entries.len() != raw.rows || raw.entries.iter().any(|r| r.len() != raw.cols) {
            return Err(D::Error::custom("entries do not match declared dimensions"));
        }
        FieldMatrix::from_rows(raw.entries, raw.modulus).map_err(D::Error::custom)
    }
}
