//! Square matrices over exact rationals.
//!
//! Multiplication clears denominators first and runs an integer product, using
//! native `i128` arithmetic whenever a conservative bit-width bound proves the
//! dot products cannot overflow and falling back to `BigInt` otherwise. Both
//! routes are exact; the window check only selects the representation. This
//! matters because exhaustive scans multiply millions of small adjacency
//! matrices, where per-entry rational normalization would dominate the cost.

use std::ops::Mul;

use num::{Integer, One, ToPrimitive, Zero};

use crate::error::Error;
use crate::rational::{parse_rational_at, BigInt, Rational};

/// A square matrix with exact rational entries, stored row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalMatrix {
    n: usize,
    entries: Vec<Rational>,
}

impl RationalMatrix {
    /// Builds an `n x n` matrix from `n * n` row-major entries.
    pub fn new(n: usize, entries: Vec<Rational>) -> Result<Self, Error> {
        if entries.len() != n * n {
            return Err(Error::LengthMismatch {
                left: entries.len(),
                right: n * n,
            });
        }
        Ok(RationalMatrix { n, entries })
    }

    /// The `n x n` zero matrix.
    pub fn zeros(n: usize) -> Self {
        RationalMatrix {
            n,
            entries: vec![Rational::zero(); n * n],
        }
    }

    /// The `n x n` identity matrix.
    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            m.entries[i * n + i] = Rational::one();
        }
        m
    }

    /// Builds a matrix from machine integers; handy in tests.
    pub fn from_integers(n: usize, values: &[i64]) -> Result<Self, Error> {
        let entries = values
            .iter()
            .map(|&v| Rational::from_integer(BigInt::from(v)))
            .collect();
        Self::new(n, entries)
    }

    /// Side length of the matrix.
    pub fn dim(&self) -> usize {
        self.n
    }

    /// Entry at row `i`, column `j` (0-indexed).
    pub fn entry(&self, i: usize, j: usize) -> &Rational {
        &self.entries[i * self.n + j]
    }

    /// All entries, row-major.
    pub fn entries(&self) -> &[Rational] {
        &self.entries
    }

    /// Parses the matrix text format: a header line `matrix <n>` followed by
    /// `n` rows of `n` whitespace-separated rationals. Lines starting with `#`
    /// and blank lines are ignored.
    pub fn parse(text: &str) -> Result<Self, Error> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

        let (header_line, header) = lines
            .next()
            .ok_or_else(|| Error::parse(1, "empty matrix input"))?;
        let mut parts = header.split_whitespace();
        match parts.next() {
            Some("matrix") => {}
            other => {
                return Err(Error::parse(
                    header_line,
                    format!("expected header starting with \"matrix\", found {other:?}"),
                ))
            }
        }
        let n: usize = parts
            .next()
            .ok_or_else(|| Error::parse(header_line, "missing dimension in header"))?
            .parse()
            .map_err(|_| Error::parse(header_line, "dimension must be a nonnegative integer"))?;
        if parts.next().is_some() {
            return Err(Error::parse(header_line, "trailing tokens after header"));
        }

        let mut entries = Vec::with_capacity(n * n);
        for _ in 0..n {
            let (line_no, row) = lines
                .next()
                .ok_or_else(|| Error::parse(0, format!("expected {n} rows, input ended early")))?;
            let tokens: Vec<&str> = row.split_whitespace().collect();
            if tokens.len() != n {
                return Err(Error::parse(
                    line_no,
                    format!("expected {n} entries in row, found {}", tokens.len()),
                ));
            }
            for tok in tokens {
                entries.push(parse_rational_at(tok, line_no)?);
            }
        }
        if let Some((line_no, _)) = lines.next() {
            return Err(Error::parse(line_no, "unexpected extra content after matrix"));
        }
        Self::new(n, entries)
    }

    /// Renders the matrix in the same text format `parse` accepts.
    pub fn to_text(&self) -> String {
        let mut out = format!("matrix {}\n", self.n);
        for i in 0..self.n {
            let row: Vec<String> = (0..self.n).map(|j| self.entry(i, j).to_string()).collect();
            out.push_str(&row.join(" "));
            out.push('\n');
        }
        out
    }

    /// Sum of all entries.
    pub fn entry_sum(&self) -> Rational {
        let mut total = Rational::zero();
        for e in &self.entries {
            total += e;
        }
        total
    }

    /// Vector of row sums.
    pub fn row_sums(&self) -> Vec<Rational> {
        let mut sums = vec![Rational::zero(); self.n];
        for i in 0..self.n {
            for j in 0..self.n {
                sums[i] += &self.entries[i * self.n + j];
            }
        }
        sums
    }

    /// Vector of column sums.
    pub fn col_sums(&self) -> Vec<Rational> {
        let mut sums = vec![Rational::zero(); self.n];
        for i in 0..self.n {
            for j in 0..self.n {
                sums[j] += &self.entries[i * self.n + j];
            }
        }
        sums
    }

    /// True when the row sum vector equals the column sum vector.
    pub fn is_sum_symmetric(&self) -> bool {
        self.row_sums() == self.col_sums()
    }

    /// True when the matrix equals its transpose.
    pub fn is_symmetric(&self) -> bool {
        for i in 0..self.n {
            for j in (i + 1)..self.n {
                if self.entries[i * self.n + j] != self.entries[j * self.n + i] {
                    return false;
                }
            }
        }
        true
    }

    /// `p`-th power by repeated squaring; the zeroth power is the identity.
    pub fn power(&self, p: usize) -> Self {
        let mut result: Option<RationalMatrix> = None;
        let mut base = self.clone();
        let mut e = p;
        while e > 0 {
            if e & 1 == 1 {
                result = Some(match result {
                    None => base.clone(),
                    Some(r) => &r * &base,
                });
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result.unwrap_or_else(|| Self::identity(self.n))
    }

    /// When every entry is an integer, returns `(row_sums, col_sums, total)`
    /// as plain big integers, summed without any rational normalization.
    pub(crate) fn integer_sums(&self) -> Option<(Vec<BigInt>, Vec<BigInt>, BigInt)> {
        if !self.entries.iter().all(|e| e.denom().is_one()) {
            return None;
        }
        let mut rows = vec![BigInt::zero(); self.n];
        let mut cols = vec![BigInt::zero(); self.n];
        for i in 0..self.n {
            for j in 0..self.n {
                let v = self.entries[i * self.n + j].numer();
                rows[i] += v;
                cols[j] += v;
            }
        }
        let mut total = BigInt::zero();
        for r in &rows {
            total += r;
        }
        Some((rows, cols, total))
    }
}

impl Mul for &RationalMatrix {
    type Output = RationalMatrix;

    fn mul(self, rhs: &RationalMatrix) -> RationalMatrix {
        assert_eq!(self.n, rhs.n, "matrix dimensions must agree");
        let n = self.n;
        let (da, ia) = clear_denominators(self);
        let (db, ib) = clear_denominators(rhs);
        let prod = int_matmul(n, &ia, &ib);
        let denom = da * db;
        let entries = if denom.is_one() {
            prod.into_iter().map(Rational::from_integer).collect()
        } else {
            prod.into_iter()
                .map(|v| Rational::new(v, denom.clone()))
                .collect()
        };
        RationalMatrix { n, entries }
    }
}

/// Scales all entries to integers: returns `(d, v)` with `matrix = v / d`
/// where `d` is the least common multiple of the entry denominators.
fn clear_denominators(m: &RationalMatrix) -> (BigInt, Vec<BigInt>) {
    let mut lcm = BigInt::one();
    for e in &m.entries {
        if !e.denom().is_one() {
            lcm = lcm.lcm(e.denom());
        }
    }
    let ints = if lcm.is_one() {
        m.entries.iter().map(|e| e.numer().clone()).collect()
    } else {
        m.entries
            .iter()
            .map(|e| e.numer() * (&lcm / e.denom()))
            .collect()
    };
    (lcm, ints)
}

/// Integer matrix product, choosing `i128` when the bit-width bound
/// `bits(a) + bits(b) + ceil(log2 n) + 2 <= 126` guarantees no overflow.
fn int_matmul(n: usize, a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let max_bits = |m: &[BigInt]| m.iter().map(|v| v.bits()).max().unwrap_or(0);
    let log_n = if n <= 1 { 0 } else { (n as u64).ilog2() as u64 + 1 };
    if max_bits(a) + max_bits(b) + log_n + 2 <= 126 {
        let aa: Vec<i128> = a.iter().map(|v| v.to_i128().unwrap()).collect();
        let bb: Vec<i128> = b.iter().map(|v| v.to_i128().unwrap()).collect();
        let mut out = vec![0i128; n * n];
        for i in 0..n {
            for k in 0..n {
                let aik = aa[i * n + k];
                if aik == 0 {
                    continue;
                }
                let (row_b, row_out) = (&bb[k * n..(k + 1) * n], &mut out[i * n..(i + 1) * n]);
                for j in 0..n {
                    row_out[j] += aik * row_b[j];
                }
            }
        }
        out.into_iter().map(BigInt::from).collect()
    } else {
        let mut out = vec![BigInt::zero(); n * n];
        for i in 0..n {
            for k in 0..n {
                let aik = &a[i * n + k];
                if aik.is_zero() {
                    continue;
                }
                for j in 0..n {
                    out[i * n + j] += aik * &b[k * n + j];
                }
            }
        }
        out
    }
}
