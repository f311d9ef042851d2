//! Exact linear algebra over arbitrary-precision integers.
//!
//! Everything here is fraction-free or rational-exact; no floating point.
//! Suspension and Kronecker constructions blow entries up quickly, so all
//! scalars are `BigInt`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::cmp::min;
use std::fmt;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ShapeError {
    #[error("matrix is {rows}x{cols}, expected square")]
    NotSquare { rows: usize, cols: usize },
    #[error("{context}: {left_rows}x{left_cols} is incompatible with {right_rows}x{right_cols}")]
    Incompatible {
        context: &'static str,
        left_rows: usize,
        left_cols: usize,
        right_rows: usize,
        right_cols: usize,
    },
    #[error("vector has length {found}, expected {expected}")]
    VectorLength { expected: usize, found: usize },
    #[error("{found} entries do not fill a {rows}x{cols} matrix")]
    EntryCount {
        rows: usize,
        cols: usize,
        found: usize,
    },
}

/// Dense integer matrix, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BigInt>,
}

impl IntMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<BigInt>) -> Result<Self, ShapeError> {
        if entries.len() != rows * cols {
            return Err(ShapeError::EntryCount {
                rows,
                cols,
                found: entries.len(),
            });
        }
        Ok(IntMatrix {
            rows,
            cols,
            entries,
        })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> BigInt) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        IntMatrix {
            rows,
            cols,
            entries,
        }
    }

    /// Test helper; panics on ragged input.
    pub fn from_rows(rows: Vec<Vec<i64>>) -> Self {
        let r = rows.len();
        let c = if r == 0 { 0 } else { rows[0].len() };
        for row in &rows {
            assert_eq!(row.len(), c, "ragged rows");
        }
        IntMatrix::from_fn(r, c, |i, j| BigInt::from(rows[i][j]))
    }

    pub fn zero(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            entries: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        IntMatrix::from_fn(n, n, |i, j| {
            if i == j {
                BigInt::one()
            } else {
                BigInt::zero()
            }
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: BigInt) {
        self.entries[i * self.cols + j] = value;
    }

    pub fn entries(&self) -> &[BigInt] {
        &self.entries
    }

    pub fn is_nonnegative(&self) -> bool {
        self.entries.iter().all(|e| !e.is_negative())
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero())
    }

    pub fn transpose(&self) -> IntMatrix {
        IntMatrix::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn apply(&self, v: &[BigInt]) -> Result<Vec<BigInt>, ShapeError> {
        if v.len() != self.cols {
            return Err(ShapeError::VectorLength {
                expected: self.cols,
                found: v.len(),
            });
        }
        let out = (0..self.rows)
            .map(|i| {
                let mut acc = BigInt::zero();
                for (j, x) in v.iter().enumerate() {
                    let e = self.get(i, j);
                    if !e.is_zero() {
                        acc += e * x;
                    }
                }
                acc
            })
            .collect();
        Ok(out)
    }

    /// `M^k` by repeated squaring; `M^0` is the identity.
    pub fn pow(&self, k: u32) -> Result<IntMatrix, ShapeError> {
        if !self.is_square() {
            return Err(ShapeError::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let mut result = IntMatrix::identity(self.rows);
        let mut base = self.clone();
        let mut exp = k;
        while exp > 0 {
            if exp & 1 == 1 {
                result = &result * &base;
            }
            exp >>= 1;
            if exp > 0 {
                base = &base * &base;
            }
        }
        Ok(result)
    }

    /// Kronecker product; block `(i, j)` equals `self[i][j] * other`.
    pub fn kronecker(&self, other: &IntMatrix) -> IntMatrix {
        let rows = self.rows * other.rows;
        let cols = self.cols * other.cols;
        IntMatrix::from_fn(rows, cols, |i, j| {
            let a = self.get(i / other.rows, j / other.cols);
            if a.is_zero() {
                BigInt::zero()
            } else {
                a * other.get(i % other.rows, j % other.cols)
            }
        })
    }

    /// Exact determinant by the Bareiss fraction-free elimination.
    pub fn det(&self) -> Result<BigInt, ShapeError> {
        if !self.is_square() {
            return Err(ShapeError::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        if n == 0 {
            return Ok(BigInt::one());
        }
        let mut m = self.clone();
        let mut sign = 1i32;
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if m.get(k, k).is_zero() {
                match (k + 1..n).find(|&r| !m.get(r, k).is_zero()) {
                    Some(r) => {
                        m.swap_rows(k, r);
                        sign = -sign;
                    }
                    None => return Ok(BigInt::zero()),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = m.get(i, j) * m.get(k, k) - m.get(i, k) * m.get(k, j);
                    m.set(i, j, exact_div(num, &prev));
                }
            }
            prev = m.get(k, k).clone();
        }
        let d = m.get(n - 1, n - 1).clone();
        Ok(if sign < 0 { -d } else { d })
    }

    /// Whether `v` lies in the eventual kernel `ker M^n = ker M^{n+1} = ...`.
    ///
    /// The kernel chain of an n x n matrix stabilizes by power n
    /// (Cayley-Hamilton), so checking `M^n v = 0` is both sound and complete.
    pub fn in_eventual_kernel(&self, v: &[BigInt]) -> Result<bool, ShapeError> {
        if !self.is_square() {
            return Err(ShapeError::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        if v.len() != self.cols {
            return Err(ShapeError::VectorLength {
                expected: self.cols,
                found: v.len(),
            });
        }
        let mut w = v.to_vec();
        for _ in 0..self.rows {
            if w.iter().all(|x| x.is_zero()) {
                return Ok(true);
            }
            w = self.apply(&w)?;
        }
        Ok(w.iter().all(|x| x.is_zero()))
    }

    /// Characteristic polynomial `det(tI - M)`, exact.
    ///
    /// Evaluates the determinant at t = 0..=n and interpolates over the
    /// rationals; the result is asserted integral and monic.
    pub fn char_poly(&self) -> Result<IntPolynomial, ShapeError> {
        if !self.is_square() {
            return Err(ShapeError::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        let values: Vec<BigInt> = (0..=n)
            .map(|t| {
                let shifted = IntMatrix::from_fn(n, n, |i, j| {
                    let mut e = -self.get(i, j);
                    if i == j {
                        e += BigInt::from(t);
                    }
                    e
                });
                shifted.det().expect("square by construction")
            })
            .collect();
        let poly = interpolate_integer(&values);
        debug_assert_eq!(poly.degree(), Some(n));
        Ok(poly)
    }

    /// Smith normal form `D = U * self * V` with unimodular `U`, `V` and a
    /// nonnegative diagonal divisibility chain.
    pub fn smith_normal_form(&self) -> SmithDecomposition {
        let mut work = SnfWork {
            d: self.clone(),
            u: IntMatrix::identity(self.rows),
            v: IntMatrix::identity(self.cols),
        };
        work.reduce();
        SmithDecomposition {
            u: work.u,
            d: work.d,
            v: work.v,
        }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.entries.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.entries.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// row a += q * row b
    fn add_row_multiple(&mut self, a: usize, b: usize, q: &BigInt) {
        if q.is_zero() {
            return;
        }
        for j in 0..self.cols {
            let add = q * self.get(b, j);
            let e = &mut self.entries[a * self.cols + j];
            *e += add;
        }
    }

    /// col a += q * col b
    fn add_col_multiple(&mut self, a: usize, b: usize, q: &BigInt) {
        if q.is_zero() {
            return;
        }
        for i in 0..self.rows {
            let add = q * self.get(i, b);
            let e = &mut self.entries[i * self.cols + a];
            *e += add;
        }
    }

    fn negate_row(&mut self, a: usize) {
        for j in 0..self.cols {
            let e = &mut self.entries[a * self.cols + j];
            *e = -std::mem::take(e);
        }
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

impl std::ops::Mul for &IntMatrix {
    type Output = IntMatrix;

    fn mul(self, rhs: &IntMatrix) -> IntMatrix {
        assert_eq!(
            self.cols, rhs.rows,
            "product shape mismatch: {}x{} * {}x{}",
            self.rows, self.cols, rhs.rows, rhs.cols
        );
        let mut out = IntMatrix::zero(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.get(k, j);
                    if !b.is_zero() {
                        let e = &mut out.entries[i * rhs.cols + j];
                        *e += a * b;
                    }
                }
            }
        }
        out
    }
}

impl std::ops::Add for &IntMatrix {
    type Output = IntMatrix;

    fn add(self, rhs: &IntMatrix) -> IntMatrix {
        assert_eq!(
            (self.rows, self.cols),
            (rhs.rows, rhs.cols),
            "sum shape mismatch"
        );
        IntMatrix::from_fn(self.rows, self.cols, |i, j| self.get(i, j) + rhs.get(i, j))
    }
}

impl std::ops::Sub for &IntMatrix {
    type Output = IntMatrix;

    fn sub(self, rhs: &IntMatrix) -> IntMatrix {
        assert_eq!(
            (self.rows, self.cols),
            (rhs.rows, rhs.cols),
            "difference shape mismatch"
        );
        IntMatrix::from_fn(self.rows, self.cols, |i, j| self.get(i, j) - rhs.get(i, j))
    }
}

fn exact_div(num: BigInt, den: &BigInt) -> BigInt {
    debug_assert!(!den.is_zero());
    let (q, r) = num.div_rem(den);
    debug_assert!(
        r.is_zero(),
        "non-exact division in fraction-free elimination"
    );
    q
}

/// `D = U * M * V`; `U`, `V` unimodular, `D` diagonal with `d_i | d_{i+1}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SmithDecomposition {
    pub u: IntMatrix,
    pub d: IntMatrix,
    pub v: IntMatrix,
}

impl SmithDecomposition {
    /// Diagonal entries, padded implicitly by the matrix shape.
    pub fn diagonal(&self) -> Vec<BigInt> {
        (0..min(self.d.rows(), self.d.cols()))
            .map(|i| self.d.get(i, i).clone())
            .collect()
    }
}

struct SnfWork {
    d: IntMatrix,
    u: IntMatrix,
    v: IntMatrix,
}

impl SnfWork {
    fn swap_rows(&mut self, a: usize, b: usize) {
        self.d.swap_rows(a, b);
        self.u.swap_rows(a, b);
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        self.d.swap_cols(a, b);
        self.v.swap_cols(a, b);
    }

    fn add_row_multiple(&mut self, a: usize, b: usize, q: &BigInt) {
        self.d.add_row_multiple(a, b, q);
        self.u.add_row_multiple(a, b, q);
    }

    fn add_col_multiple(&mut self, a: usize, b: usize, q: &BigInt) {
        self.d.add_col_multiple(a, b, q);
        self.v.add_col_multiple(a, b, q);
    }

    fn negate_row(&mut self, a: usize) {
        self.d.negate_row(a);
        self.u.negate_row(a);
    }

    /// Smallest nonzero entry (by absolute value) of the trailing submatrix.
    fn min_abs_pivot(&self, t: usize) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize)> = None;
        for i in t..self.d.rows() {
            for j in t..self.d.cols() {
                let e = self.d.get(i, j);
                if e.is_zero() {
                    continue;
                }
                match best {
                    Some((bi, bj)) if self.d.get(bi, bj).abs() <= e.abs() => {}
                    _ => best = Some((i, j)),
                }
            }
        }
        best
    }

    fn reduce(&mut self) {
        let n = min(self.d.rows(), self.d.cols());
        for t in 0..n {
            if self.min_abs_pivot(t).is_none() {
                break;
            }
            loop {
                let (pi, pj) = self.min_abs_pivot(t).expect("nonzero entry present");
                self.swap_rows(t, pi);
                self.swap_cols(t, pj);

                let mut residue = false;
                for i in t + 1..self.d.rows() {
                    if !self.d.get(i, t).is_zero() {
                        let q = -(self.d.get(i, t) / self.d.get(t, t));
                        self.add_row_multiple(i, t, &q);
                        residue |= !self.d.get(i, t).is_zero();
                    }
                }
                for j in t + 1..self.d.cols() {
                    if !self.d.get(t, j).is_zero() {
                        let q = -(self.d.get(t, j) / self.d.get(t, t));
                        self.add_col_multiple(j, t, &q);
                        residue |= !self.d.get(t, j).is_zero();
                    }
                }
                if residue {
                    continue;
                }
                // divisibility chain: the pivot must divide the rest
                let offender = (t + 1..self.d.rows())
                    .flat_map(|i| (t + 1..self.d.cols()).map(move |j| (i, j)))
                    .find(|&(i, j)| !self.d.get(i, j).mod_floor(self.d.get(t, t)).is_zero());
                match offender {
                    Some((i, _)) => {
                        self.add_row_multiple(t, i, &BigInt::one());
                    }
                    None => break,
                }
            }
            if self.d.get(t, t).is_negative() {
                self.negate_row(t);
            }
        }
    }
}

/// Integer polynomial with ascending coefficients; the zero polynomial is the
/// empty list, and no trailing zero coefficients are stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    pub fn zero() -> Self {
        IntPolynomial { coeffs: Vec::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Splits off the power of `t` dividing the polynomial: returns
    /// `(q, z)` with `self = t^z * q` and `q(0) != 0`.
    /// For the zero polynomial, returns `(0, 0)`.
    pub fn strip_zero_roots(&self) -> (IntPolynomial, usize) {
        if self.is_zero() {
            return (IntPolynomial::zero(), 0);
        }
        let z = self
            .coeffs
            .iter()
            .position(|c| !c.is_zero())
            .expect("nonzero polynomial");
        (
            IntPolynomial {
                coeffs: self.coeffs[z..].to_vec(),
            },
            z,
        )
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if k == 0 {
                write!(f, "{mag}")?;
            } else {
                if !mag.is_one() {
                    write!(f, "{mag}")?;
                }
                if k == 1 {
                    write!(f, "t")?;
                } else {
                    write!(f, "t^{k}")?;
                }
            }
        }
        Ok(())
    }
}

/// Lagrange interpolation through `(k, values[k])` for k = 0..values.len(),
/// asserting the result has integer coefficients.
fn interpolate_integer(values: &[BigInt]) -> IntPolynomial {
    let n = values.len();
    let mut acc = vec![BigRational::zero(); n];
    for (k, value) in values.iter().enumerate() {
        if value.is_zero() {
            continue;
        }
        // basis numerator: prod_{j != k} (x - j)
        let mut basis = vec![BigRational::zero(); n];
        basis[0] = BigRational::one();
        let mut deg = 0;
        let mut denom = BigInt::one();
        for j in 0..n {
            if j == k {
                continue;
            }
            denom *= BigInt::from(k as i64) - BigInt::from(j as i64);
            let root = BigRational::from_integer(BigInt::from(j as i64));
            for d in (0..=deg).rev() {
                let carry = basis[d].clone();
                basis[d + 1] += &carry;
                basis[d] = -(&carry * &root);
                // shift: basis *= (x - j) done coefficient by coefficient
            }
            deg += 1;
        }
        let scale = BigRational::new(value.clone(), denom);
        for (a, b) in acc.iter_mut().zip(basis.iter()) {
            *a += &scale * b;
        }
    }
    let coeffs: Vec<BigInt> = acc
        .into_iter()
        .map(|c| {
            assert!(
                c.is_integer(),
                "interpolation produced a non-integer coefficient"
            );
            c.to_integer()
        })
        .collect();
    IntPolynomial::from_coeffs(coeffs)
}
