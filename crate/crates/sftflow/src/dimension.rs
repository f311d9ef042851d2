//! Bilateral dimension groups as computable inductive limits.
//!
//! A class `[v, n]` of the limit `Z^N -> Z^N -> ...` under a transition
//! matrix `T` is stored as the pair (vector, level) with the defining
//! relation `(v, n) ~ (T v, n+1)`. Equality is decided by lifting to a
//! common level and testing membership in the eventual kernel of `T`, which
//! is sound and complete because the kernel chain stabilizes by power `N`.
//!
//! Convention, fixed here once and checked by the fixed-point test on the
//! distinguished element: the future group of `A` is the limit under `A^t`,
//! the past group is the limit under `A`. Tensor elements store a flattened
//! `N^2` vector whose first factor is the past group and whose second factor
//! is the future group, so the level-raising map of the tensor group is
//! `A (x) A^t`.

use crate::certificates::{verify_shift_equivalence, SeCertificate};
use crate::intlin::{IntMatrix, ShapeError};
use crate::markov::BinMatrix;
use crate::suspension::{CeilingFunction, SuspensionError};
use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DimensionError {
    #[error("elements live over different context matrices")]
    ContextMismatch,
    #[error("vector has length {found}, expected {expected}")]
    VectorLength { expected: usize, found: usize },
    #[error(transparent)]
    Shape(#[from] ShapeError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CertificateError {
    #[error(transparent)]
    Shape(#[from] ShapeError),
    #[error("certificate rejected: {relation} fails")]
    Rejected { relation: &'static str },
    #[error("element does not live over the certificate's source matrix")]
    WrongContext,
}

/// Which one-sided dimension group an element belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    /// Limit under `A^t` (the future group of `A`).
    Future,
    /// Limit under `A` (the past group of `A`, i.e. the future group of `A^t`).
    Past,
}

/// Element `[v, n]` of a one-sided dimension group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DimElement {
    matrix: BinMatrix,
    side: Side,
    vector: Vec<BigInt>,
    level: usize,
}

impl DimElement {
    pub fn new(
        matrix: BinMatrix,
        side: Side,
        vector: Vec<BigInt>,
        level: usize,
    ) -> Result<Self, DimensionError> {
        if vector.len() != matrix.size() {
            return Err(DimensionError::VectorLength {
                expected: matrix.size(),
                found: vector.len(),
            });
        }
        Ok(DimElement {
            matrix,
            side,
            vector,
            level,
        })
    }

    /// `[e_i, level]` with a 0-based state index.
    pub fn basis(matrix: BinMatrix, side: Side, i: usize, level: usize) -> Self {
        let n = matrix.size();
        let mut vector = vec![BigInt::zero(); n];
        vector[i] = BigInt::from(1);
        DimElement {
            matrix,
            side,
            vector,
            level,
        }
    }

    pub fn matrix(&self) -> &BinMatrix {
        &self.matrix
    }

    pub fn side(&self) -> Side {
        self.side
    }

    pub fn vector(&self) -> &[BigInt] {
        &self.vector
    }

    pub fn level(&self) -> usize {
        self.level
    }

    fn transition(&self) -> IntMatrix {
        match self.side {
            Side::Future => self.matrix.to_int_matrix().transpose(),
            Side::Past => self.matrix.to_int_matrix(),
        }
    }

    fn lifted_vector(&self, to_level: usize) -> Vec<BigInt> {
        debug_assert!(to_level >= self.level);
        let t = self.transition();
        let mut v = self.vector.clone();
        for _ in self.level..to_level {
            v = t.apply(&v).expect("square transition");
        }
        v
    }

    /// The level-raising automorphism `[v, n] -> [v, n+1]`.
    pub fn shift(&self) -> DimElement {
        DimElement {
            level: self.level + 1,
            ..self.clone()
        }
    }

    /// Inverse of `shift`, realized without lowering the level:
    /// `[v, n] -> [T v, n]`, which equals `[v, n-1]`.
    pub fn shift_inv(&self) -> DimElement {
        let v = self
            .transition()
            .apply(&self.vector)
            .expect("square transition");
        DimElement {
            vector: v,
            ..self.clone()
        }
    }

    pub fn add(&self, other: &DimElement) -> Result<DimElement, DimensionError> {
        let (a, b) = align(self, other)?;
        Ok(DimElement {
            matrix: self.matrix.clone(),
            side: self.side,
            vector: a.iter().zip(&b).map(|(x, y)| x + y).collect(),
            level: self.level.max(other.level),
        })
    }

    pub fn neg(&self) -> DimElement {
        DimElement {
            vector: self.vector.iter().map(|x| -x).collect(),
            ..self.clone()
        }
    }

    /// Whether two pairs present the same class of the inductive limit.
    pub fn same_class(&self, other: &DimElement) -> Result<bool, DimensionError> {
        let (a, b) = align(self, other)?;
        let diff: Vec<BigInt> = a.iter().zip(&b).map(|(x, y)| x - y).collect();
        Ok(self.transition().in_eventual_kernel(&diff)?)
    }

    /// Membership test for the positive cone at a finite depth: all
    /// coordinates nonnegative after lifting `extra_levels` more times.
    /// Full cone membership is the union over all depths.
    pub fn positive_at_level(&self, extra_levels: usize) -> bool {
        self.lifted_vector(self.level + extra_levels)
            .iter()
            .all(|x| !x.is_negative())
    }
}

fn align(a: &DimElement, b: &DimElement) -> Result<(Vec<BigInt>, Vec<BigInt>), DimensionError> {
    if a.matrix != b.matrix || a.side != b.side {
        return Err(DimensionError::ContextMismatch);
    }
    let k = a.level.max(b.level);
    Ok((a.lifted_vector(k), b.lifted_vector(k)))
}

/// Element of the bilateral (tensor) dimension group, stored as a flattened
/// `N^2` vector at a single common level.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuadElement {
    matrix: BinMatrix,
    vector: Vec<BigInt>,
    level: usize,
}

impl QuadElement {
    pub fn new(
        matrix: BinMatrix,
        vector: Vec<BigInt>,
        level: usize,
    ) -> Result<Self, DimensionError> {
        let n = matrix.size();
        if vector.len() != n * n {
            return Err(DimensionError::VectorLength {
                expected: n * n,
                found: vector.len(),
            });
        }
        Ok(QuadElement {
            matrix,
            vector,
            level,
        })
    }

    pub fn zero(matrix: BinMatrix, level: usize) -> Self {
        let n = matrix.size();
        QuadElement {
            vector: vec![BigInt::zero(); n * n],
            matrix,
            level,
        }
    }

    /// Split tensor `[u, n] (x) [v, m]` (past factor `u`, future factor `v`)
    /// brought to the common level `max(n, m)`.
    pub fn from_split(
        matrix: BinMatrix,
        past: (&[BigInt], usize),
        future: (&[BigInt], usize),
    ) -> Result<Self, DimensionError> {
        let n = matrix.size();
        let past_el = DimElement::new(matrix.clone(), Side::Past, past.0.to_vec(), past.1)?;
        let future_el = DimElement::new(matrix.clone(), Side::Future, future.0.to_vec(), future.1)?;
        let level = past.1.max(future.1);
        let u = past_el.lifted_vector(level);
        let v = future_el.lifted_vector(level);
        let mut vector = Vec::with_capacity(n * n);
        for x in &u {
            for y in &v {
                vector.push(x * y);
            }
        }
        Ok(QuadElement {
            matrix,
            vector,
            level,
        })
    }

    pub fn matrix(&self) -> &BinMatrix {
        &self.matrix
    }

    pub fn vector(&self) -> &[BigInt] {
        &self.vector
    }

    pub fn level(&self) -> usize {
        self.level
    }

    pub fn is_zero(&self) -> bool {
        self.vector.iter().all(|x| x.is_zero())
    }

    /// Level-raising map of the tensor limit: `A (x) A^t`.
    fn step_matrix(&self) -> IntMatrix {
        let a = self.matrix.to_int_matrix();
        let at = a.transpose();
        a.kronecker(&at)
    }

    fn lifted_vector(&self, to_level: usize) -> Vec<BigInt> {
        debug_assert!(to_level >= self.level);
        let step = self.step_matrix();
        let mut v = self.vector.clone();
        for _ in self.level..to_level {
            v = step.apply(&v).expect("square step");
        }
        v
    }

    pub fn add(&self, other: &QuadElement) -> Result<QuadElement, DimensionError> {
        if self.matrix != other.matrix {
            return Err(DimensionError::ContextMismatch);
        }
        let k = self.level.max(other.level);
        let a = self.lifted_vector(k);
        let b = other.lifted_vector(k);
        Ok(QuadElement {
            matrix: self.matrix.clone(),
            vector: a.iter().zip(&b).map(|(x, y)| x + y).collect(),
            level: k,
        })
    }

    pub fn neg(&self) -> QuadElement {
        QuadElement {
            vector: self.vector.iter().map(|x| -x).collect(),
            ..self.clone()
        }
    }

    /// Equality in the bilateral group.
    pub fn same_class(&self, other: &QuadElement) -> Result<bool, DimensionError> {
        if self.matrix != other.matrix {
            return Err(DimensionError::ContextMismatch);
        }
        let k = self.level.max(other.level);
        let a = self.lifted_vector(k);
        let b = other.lifted_vector(k);
        let diff: Vec<BigInt> = a.iter().zip(&b).map(|(x, y)| x - y).collect();
        Ok(self.step_matrix().in_eventual_kernel(&diff)?)
    }

    /// The bilateral shift automorphism. On split tensors it sends
    /// `[u, n] (x) [v, m]` to `[A u, n] (x) [v, m+1]`; on the common-level
    /// representation this is `vector <- (A^2 (x) I) vector`, `level + 1`.
    pub fn shift(&self) -> QuadElement {
        let a = self.matrix.to_int_matrix();
        let n = self.matrix.size();
        let step = (&a * &a).kronecker(&IntMatrix::identity(n));
        QuadElement {
            matrix: self.matrix.clone(),
            vector: step.apply(&self.vector).expect("square step"),
            level: self.level + 1,
        }
    }

    /// Positive-cone membership at a finite depth, as for `DimElement`.
    pub fn positive_at_level(&self, extra_levels: usize) -> bool {
        self.lifted_vector(self.level + extra_levels)
            .iter()
            .all(|x| !x.is_negative())
    }
}

/// The distinguished element of the bilateral group: the class of the unit,
/// `sum_j [e_j, 1] (x) [A^t e_j, 1]`. Its flattened level-1 vector is the
/// row-major flattening of `A` itself.
pub fn distinguished_element(a: &BinMatrix) -> QuadElement {
    let n = a.size();
    let vector = (0..n * n)
        .map(|idx| {
            if a.entry(idx / n, idx % n) {
                BigInt::from(1)
            } else {
                BigInt::zero()
            }
        })
        .collect();
    QuadElement {
        matrix: a.clone(),
        vector,
        level: 1,
    }
}

/// Transports an element along a verified shift-equivalence certificate.
///
/// On split tensors the certificate acts by `[u, n] (x) [v, m] ->
/// [K u, n + l] (x) [H^t v, m]`; realigning to a common level multiplies the
/// future factor by `(B^t)^l`, so the stored transform is
/// `(K (x) (B^t)^l H^t)` with the level raised by `l`.
pub fn apply_certificate(
    a: &BinMatrix,
    b: &BinMatrix,
    cert: &SeCertificate,
    element: &QuadElement,
) -> Result<QuadElement, CertificateError> {
    if element.matrix != *a {
        return Err(CertificateError::WrongContext);
    }
    let verdict = verify_shift_equivalence(&a.to_int_matrix(), &b.to_int_matrix(), cert)?;
    if let Some(relation) = verdict.first_violation() {
        return Err(CertificateError::Rejected { relation });
    }
    let bt = b.to_int_matrix().transpose();
    let future_factor = &bt.pow(cert.lag)? * &cert.h.transpose();
    let transform = cert.k.kronecker(&future_factor);
    let vector = transform
        .apply(element.vector())
        .expect("shapes checked by the certificate verdict");
    Ok(QuadElement {
        matrix: b.clone(),
        vector,
        level: element.level + cert.lag as usize,
    })
}

/// Whether a certificate carries the distinguished element of `A` to the
/// distinguished element of `B`. This holds for every valid certificate;
/// `false` indicates a bug in this library, not a property of the input.
pub fn transports_distinguished(
    a: &BinMatrix,
    b: &BinMatrix,
    cert: &SeCertificate,
) -> Result<bool, CertificateError> {
    let image = apply_certificate(a, b, cert, &distinguished_element(a))?;
    image
        .same_class(&distinguished_element(b))
        .map_err(|_| CertificateError::WrongContext)
}

/// Weighting for the suspension class: the displayed formula uses
/// `f_j - 1`; the full-ceiling variant is kept for comparison because the
/// surrounding projection count suggests a possible off-by-one.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CeilingWeight {
    CeilingMinusOne,
    FullCeiling,
}

/// K-theoretic class of a discrete suspension's unit defect:
/// `sum_j m_j [e_j, 1] (x) [A^t e_j, 1]` with `m_j = f_j - 1`.
pub fn suspension_class(
    a: &BinMatrix,
    f: &CeilingFunction,
) -> Result<QuadElement, SuspensionError> {
    suspension_class_weighted(a, f, CeilingWeight::CeilingMinusOne)
}

pub fn suspension_class_weighted(
    a: &BinMatrix,
    f: &CeilingFunction,
    weight: CeilingWeight,
) -> Result<QuadElement, SuspensionError> {
    let n = a.size();
    if f.len() != n {
        return Err(SuspensionError::SizeMismatch {
            states: n,
            found: f.len(),
        });
    }
    let vector = (0..n * n)
        .map(|idx| {
            let (j, i) = (idx / n, idx % n);
            if a.entry(j, i) {
                let m = match weight {
                    CeilingWeight::CeilingMinusOne => f.value(j) as i64 - 1,
                    CeilingWeight::FullCeiling => f.value(j) as i64,
                };
                BigInt::from(m)
            } else {
                BigInt::zero()
            }
        })
        .collect();
    Ok(QuadElement {
        matrix: a.clone(),
        vector,
        level: 1,
    })
}
