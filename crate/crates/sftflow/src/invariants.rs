//! Flow-equivalence invariants and the Franks decision procedure.
//!
//! The complete invariant pair for irreducible non-permutation matrices is
//! `det(I - A)` together with the Bowen-Franks group `Z^N / (I - A) Z^N`.
//! Spectral multisets are compared through exact characteristic polynomials,
//! never through numerically computed eigenvalues.

use crate::intlin::{IntMatrix, IntPolynomial};
use crate::markov::BinMatrix;
use num_bigint::BigInt;
use num_traits::{One, Zero};
use std::fmt;
use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HypothesisViolation {
    Reducible,
    Permutation,
}

impl fmt::Display for HypothesisViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HypothesisViolation::Reducible => write!(f, "not irreducible"),
            HypothesisViolation::Permutation => write!(f, "a permutation matrix"),
        }
    }
}

/// Franks's theorem assumes irreducible non-permutation matrices; callers get
/// a refusal naming the offending matrix rather than a guess.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("matrix {name} is {violation}")]
pub struct HypothesisError {
    pub name: String,
    pub violation: HypothesisViolation,
}

pub fn check_franks_hypothesis(m: &BinMatrix, name: &str) -> Result<(), HypothesisError> {
    if !m.is_irreducible() {
        return Err(HypothesisError {
            name: name.to_string(),
            violation: HypothesisViolation::Reducible,
        });
    }
    if m.is_permutation() {
        return Err(HypothesisError {
            name: name.to_string(),
            violation: HypothesisViolation::Permutation,
        });
    }
    Ok(())
}

/// Finitely generated abelian group in canonical presentation: invariant
/// factors (each at least 2, each dividing the next) plus free rank.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AbelianGroup {
    invariant_factors: Vec<BigInt>,
    free_rank: usize,
}

impl AbelianGroup {
    /// Cokernel `Z^rows / M Z^cols` from the Smith normal form of `M`.
    pub fn cokernel(m: &IntMatrix) -> AbelianGroup {
        let diag = m.smith_normal_form().diagonal();
        let mut invariant_factors = Vec::new();
        let mut free_rank = m.rows().saturating_sub(diag.len());
        for d in diag {
            if d.is_zero() {
                free_rank += 1;
            } else if !d.is_one() {
                invariant_factors.push(d);
            }
        }
        AbelianGroup {
            invariant_factors,
            free_rank,
        }
    }

    pub fn trivial() -> AbelianGroup {
        AbelianGroup {
            invariant_factors: Vec::new(),
            free_rank: 0,
        }
    }

    pub fn is_trivial(&self) -> bool {
        self.invariant_factors.is_empty() && self.free_rank == 0
    }

    pub fn invariant_factors(&self) -> &[BigInt] {
        &self.invariant_factors
    }

    pub fn free_rank(&self) -> usize {
        self.free_rank
    }

    /// Group order; `None` when infinite.
    pub fn order(&self) -> Option<BigInt> {
        if self.free_rank > 0 {
            return None;
        }
        Some(self.invariant_factors.iter().product())
    }
}

impl fmt::Display for AbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return write!(f, "trivial");
        }
        let mut parts = Vec::new();
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        for d in &self.invariant_factors {
            parts.push(format!("Z/{d}"));
        }
        write!(f, "{}", parts.join(" \u{2295} "))
    }
}

/// Characteristic polynomial with all factors of `t` stripped, plus the
/// multiplicity of the zero eigenvalue. Two matrices have equal nonzero
/// eigenvalue multisets exactly when the stripped polynomials agree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpectrumFingerprint {
    pub nonzero_char_poly: IntPolynomial,
    pub zero_multiplicity: usize,
}

/// `det(I - A)`, the Parry-Sullivan flow-equivalence invariant.
pub fn parry_sullivan_determinant(a: &BinMatrix) -> BigInt {
    let n = a.size();
    let m = IntMatrix::from_fn(n, n, |i, j| {
        let diag = if i == j {
            BigInt::one()
        } else {
            BigInt::zero()
        };
        if a.entry(i, j) {
            diag - BigInt::one()
        } else {
            diag
        }
    });
    m.det().expect("square by construction")
}

/// Bowen-Franks group `Z^N / (I - A) Z^N` in canonical presentation.
pub fn bowen_franks(a: &BinMatrix) -> AbelianGroup {
    let n = a.size();
    let m = IntMatrix::from_fn(n, n, |i, j| {
        let diag = if i == j {
            BigInt::one()
        } else {
            BigInt::zero()
        };
        if a.entry(i, j) {
            diag - BigInt::one()
        } else {
            diag
        }
    });
    AbelianGroup::cokernel(&m)
}

pub fn spectrum_fingerprint(a: &BinMatrix) -> SpectrumFingerprint {
    fingerprint_of(&a.to_int_matrix())
}

fn fingerprint_of(m: &IntMatrix) -> SpectrumFingerprint {
    let (nonzero_char_poly, zero_multiplicity) = m
        .char_poly()
        .expect("square by construction")
        .strip_zero_roots();
    SpectrumFingerprint {
        nonzero_char_poly,
        zero_multiplicity,
    }
}

/// Whether the nonzero eigenvalue multisets of `a` and `b` agree. The zero
/// multiplicities are allowed to differ.
pub fn same_nonzero_spectrum(a: &BinMatrix, b: &BinMatrix) -> bool {
    spectrum_fingerprint(a).nonzero_char_poly == spectrum_fingerprint(b).nonzero_char_poly
}

/// Whether `A^t (x) A` and `B^t (x) B` have equal nonzero eigenvalue
/// multisets.
pub fn kronecker_spectrum_equal(a: &BinMatrix, b: &BinMatrix) -> bool {
    kronecker_fingerprint(a).nonzero_char_poly == kronecker_fingerprint(b).nonzero_char_poly
}

fn kronecker_fingerprint(a: &BinMatrix) -> SpectrumFingerprint {
    let m = a.to_int_matrix();
    fingerprint_of(&m.transpose().kronecker(&m))
}

/// Joint spectral comparison of two shifts. The three predicates form an
/// implication chain (each implies the next); `violation` is set when the
/// chain is falsified, which signals a bug in this library, never a property
/// of the input.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SpectraReport {
    pub kronecker_equal: bool,
    pub nonzero_spectrum_equal: bool,
    pub determinant_equal: bool,
    pub violation: bool,
}

pub fn compare_spectra(a: &BinMatrix, b: &BinMatrix) -> Result<SpectraReport, HypothesisError> {
    check_franks_hypothesis(a, "left")?;
    check_franks_hypothesis(b, "right")?;
    let kronecker_equal = kronecker_spectrum_equal(a, b);
    let nonzero_spectrum_equal = same_nonzero_spectrum(a, b);
    let determinant_equal = parry_sullivan_determinant(a) == parry_sullivan_determinant(b);
    let violation = (kronecker_equal && !nonzero_spectrum_equal)
        || (nonzero_spectrum_equal && !determinant_equal);
    Ok(SpectraReport {
        kronecker_equal,
        nonzero_spectrum_equal,
        determinant_equal,
        violation,
    })
}

/// Franks's classification: flow equivalence holds exactly when the
/// Parry-Sullivan determinants and the Bowen-Franks groups agree.
pub fn flow_equivalent(a: &BinMatrix, b: &BinMatrix) -> Result<bool, HypothesisError> {
    check_franks_hypothesis(a, "left")?;
    check_franks_hypothesis(b, "right")?;
    Ok(
        parry_sullivan_determinant(a) == parry_sullivan_determinant(b)
            && bowen_franks(a) == bowen_franks(b),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Signed;

    fn golden_mean() -> BinMatrix {
        BinMatrix::from_rows(vec![vec![1, 1], vec![1, 0]]).unwrap()
    }

    fn full(n: usize) -> BinMatrix {
        BinMatrix::full_shift(n).unwrap()
    }

    #[test]
    fn ps_determinant_cases() {
        assert_eq!(parry_sullivan_determinant(&full(2)), BigInt::from(-1));
        assert_eq!(parry_sullivan_determinant(&golden_mean()), BigInt::from(-1));
        // det(1 - full n-shift) = 1 - n
        for n in 2..6 {
            assert_eq!(
                parry_sullivan_determinant(&full(n)),
                BigInt::from(1 - n as i64)
            );
        }
    }

    #[test]
    fn bowen_franks_cases() {
        assert!(bowen_franks(&full(2)).is_trivial());
        let bf3 = bowen_franks(&full(3));
        assert_eq!(bf3.invariant_factors(), &[BigInt::from(2)]);
        assert_eq!(bf3.free_rank(), 0);
        assert_eq!(bf3.to_string(), "Z/2");
        assert!(bowen_franks(&golden_mean()).is_trivial());
    }

    #[test]
    fn bf_order_matches_determinant() {
        for m in [golden_mean(), full(2), full(3), full(4)] {
            let det = parry_sullivan_determinant(&m);
            let bf = bowen_franks(&m);
            if det.is_zero() {
                assert!(bf.free_rank() >= 1);
            } else {
                assert_eq!(bf.order().unwrap(), det.abs());
            }
        }
        // free rank appears exactly when the determinant vanishes
        let fixed =
            BinMatrix::from_rows(vec![vec![0, 1, 1], vec![1, 0, 1], vec![1, 1, 0]]).unwrap();
        let det = parry_sullivan_determinant(&fixed);
        let bf = bowen_franks(&fixed);
        assert_eq!(det.is_zero(), bf.free_rank() >= 1);
    }

    #[test]
    fn fingerprint_cases() {
        let fp = spectrum_fingerprint(&full(2));
        assert_eq!(fp.nonzero_char_poly.to_string(), "t - 2");
        assert_eq!(fp.zero_multiplicity, 1);

        let fp = spectrum_fingerprint(&golden_mean());
        assert_eq!(fp.nonzero_char_poly.to_string(), "t^2 - t - 1");
        assert_eq!(fp.zero_multiplicity, 0);

        let cycle =
            BinMatrix::from_rows(vec![vec![0, 1, 0], vec![0, 0, 1], vec![1, 0, 0]]).unwrap();
        let fp = spectrum_fingerprint(&cycle);
        assert_eq!(fp.nonzero_char_poly.to_string(), "t^3 - 1");
        assert_eq!(fp.zero_multiplicity, 0);
    }

    #[test]
    fn fingerprint_transpose_invariant() {
        for m in [golden_mean(), full(3)] {
            assert_eq!(
                spectrum_fingerprint(&m),
                spectrum_fingerprint(&m.transpose())
            );
        }
    }

    #[test]
    fn nonzero_spectrum_cases() {
        let gm = golden_mean();
        assert!(same_nonzero_spectrum(&gm, &gm));
        assert!(!same_nonzero_spectrum(&gm, &full(2)));
        // conjugacy (higher block) preserves the nonzero spectrum
        let hb = gm.higher_block(2).unwrap().matrix;
        assert!(same_nonzero_spectrum(&gm, &hb));
        assert_ne!(gm.size(), hb.size());
    }

    #[test]
    fn kronecker_spectrum_cases() {
        let gm = golden_mean();
        assert!(kronecker_spectrum_equal(&gm, &gm));
        assert!(!kronecker_spectrum_equal(&gm, &full(2)));
        // frozen from an independent computer-algebra run
        let m = gm.to_int_matrix();
        let poly = m.transpose().kronecker(&m).char_poly().unwrap();
        assert_eq!(poly.to_string(), "t^4 - t^3 - 4t^2 - t + 1");
    }

    #[test]
    fn six_state_frozen_values() {
        // values frozen from an independent computer-algebra run
        let a = BinMatrix::from_rows(vec![
            vec![0, 1, 1, 0, 0, 1],
            vec![1, 0, 1, 1, 0, 0],
            vec![0, 1, 0, 1, 1, 0],
            vec![1, 0, 0, 0, 1, 1],
            vec![0, 1, 1, 0, 0, 1],
            vec![1, 1, 0, 1, 0, 0],
        ])
        .unwrap();
        assert_eq!(parry_sullivan_determinant(&a), BigInt::from(-20));
        let bf = bowen_franks(&a);
        assert_eq!(bf.invariant_factors(), &[BigInt::from(2), BigInt::from(10)]);
        assert_eq!(bf.free_rank(), 0);
        let fp = spectrum_fingerprint(&a);
        assert_eq!(fp.nonzero_char_poly.to_string(), "t^4 - 5t^2 - 10t - 6");
        assert_eq!(fp.zero_multiplicity, 2);
    }

    #[test]
    fn spectra_report_cases() {
        let gm = golden_mean();
        let r = compare_spectra(&gm, &gm).unwrap();
        assert_eq!(
            (
                r.kronecker_equal,
                r.nonzero_spectrum_equal,
                r.determinant_equal,
                r.violation
            ),
            (true, true, true, false)
        );

        let r = compare_spectra(&gm, &full(2)).unwrap();
        assert_eq!(
            (
                r.kronecker_equal,
                r.nonzero_spectrum_equal,
                r.determinant_equal,
                r.violation
            ),
            (false, false, true, false)
        );

        let r = compare_spectra(&full(2), &full(3)).unwrap();
        assert_eq!(
            (
                r.kronecker_equal,
                r.nonzero_spectrum_equal,
                r.determinant_equal,
                r.violation
            ),
            (false, false, false, false)
        );
    }

    #[test]
    fn spectra_report_rejects_bad_hypotheses() {
        let cycle =
            BinMatrix::from_rows(vec![vec![0, 1, 0], vec![0, 0, 1], vec![1, 0, 0]]).unwrap();
        let err = compare_spectra(&cycle, &full(2)).unwrap_err();
        assert_eq!(err.violation, HypothesisViolation::Permutation);
        assert_eq!(err.name, "left");
    }

    #[test]
    fn flow_equivalence_cases() {
        let gm = golden_mean();
        assert!(flow_equivalent(&full(2), &gm).unwrap());
        assert!(!flow_equivalent(&full(2), &full(3)).unwrap());
        assert!(flow_equivalent(&gm, &gm).unwrap());
        // symmetry
        assert_eq!(
            flow_equivalent(&full(2), &gm).unwrap(),
            flow_equivalent(&gm, &full(2)).unwrap()
        );
    }

    #[test]
    fn flow_equivalence_rejects_bad_hypotheses() {
        let reducible = BinMatrix::from_rows(vec![vec![1, 0], vec![0, 1]]).unwrap();
        let err = flow_equivalent(&reducible, &full(2)).unwrap_err();
        assert_eq!(err.violation, HypothesisViolation::Reducible);
    }
}
