//! Command reports, rendered as text or JSON. Every field shown in a text
//! report is present in the JSON object.

use crate::certificates::CertificateVerdict;
use crate::invariants::{
    bowen_franks, parry_sullivan_determinant, spectrum_fingerprint, AbelianGroup, SpectraReport,
    SpectrumFingerprint,
};
use crate::markov::BinMatrix;
use serde::Serialize;
use std::fmt;

#[derive(Debug, Clone, Serialize)]
pub struct GroupReport {
    pub invariant_factors: Vec<String>,
    pub free_rank: usize,
    pub display: String,
}

impl From<&AbelianGroup> for GroupReport {
    fn from(g: &AbelianGroup) -> Self {
        GroupReport {
            invariant_factors: g
                .invariant_factors()
                .iter()
                .map(|d| d.to_string())
                .collect(),
            free_rank: g.free_rank(),
            display: g.to_string(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct FingerprintReport {
    pub nonzero_poly: String,
    pub coefficients: Vec<String>,
    pub zero_multiplicity: usize,
}

impl From<&SpectrumFingerprint> for FingerprintReport {
    fn from(fp: &SpectrumFingerprint) -> Self {
        FingerprintReport {
            nonzero_poly: fp.nonzero_char_poly.to_string(),
            coefficients: fp
                .nonzero_char_poly
                .coeffs()
                .iter()
                .map(|c| c.to_string())
                .collect(),
            zero_multiplicity: fp.zero_multiplicity,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct InvariantsReport {
    pub size: usize,
    pub irreducible: bool,
    pub permutation: bool,
    pub period: Option<usize>,
    pub determinant: String,
    pub bowen_franks: GroupReport,
    pub fingerprint: FingerprintReport,
}

impl InvariantsReport {
    pub fn collect(a: &BinMatrix) -> Self {
        InvariantsReport {
            size: a.size(),
            irreducible: a.is_irreducible(),
            permutation: a.is_permutation(),
            period: a.period().ok(),
            determinant: parry_sullivan_determinant(a).to_string(),
            bowen_franks: GroupReport::from(&bowen_franks(a)),
            fingerprint: FingerprintReport::from(&spectrum_fingerprint(a)),
        }
    }
}

impl fmt::Display for InvariantsReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "size: {}", self.size)?;
        writeln!(f, "irreducible: {}", self.irreducible)?;
        writeln!(f, "permutation: {}", self.permutation)?;
        match self.period {
            Some(p) => writeln!(f, "period: {p}")?,
            None => writeln!(f, "period: undefined (reducible)")?,
        }
        writeln!(f, "det(I - A): {}", self.determinant)?;
        writeln!(f, "Bowen-Franks group: {}", self.bowen_franks.display)?;
        write!(
            f,
            "spectrum fingerprint: {} (zero multiplicity {})",
            self.fingerprint.nonzero_poly, self.fingerprint.zero_multiplicity
        )
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct InvariantPair {
    pub determinant: String,
    pub bowen_franks: GroupReport,
}

impl InvariantPair {
    pub fn collect(a: &BinMatrix) -> Self {
        InvariantPair {
            determinant: parry_sullivan_determinant(a).to_string(),
            bowen_franks: GroupReport::from(&bowen_franks(a)),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct FlowEqReport {
    pub equivalent: bool,
    pub verdict: String,
    pub left: InvariantPair,
    pub right: InvariantPair,
}

impl FlowEqReport {
    pub fn new(equivalent: bool, a: &BinMatrix, b: &BinMatrix) -> Self {
        FlowEqReport {
            equivalent,
            verdict: if equivalent {
                "EQUIVALENT".into()
            } else {
                "NOT-EQUIVALENT".into()
            },
            left: InvariantPair::collect(a),
            right: InvariantPair::collect(b),
        }
    }
}

impl fmt::Display for FlowEqReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.verdict)?;
        writeln!(
            f,
            "left:  det(I - A) = {}, BF = {}",
            self.left.determinant, self.left.bowen_franks.display
        )?;
        write!(
            f,
            "right: det(I - B) = {}, BF = {}",
            self.right.determinant, self.right.bowen_franks.display
        )
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct RelationReport {
    pub name: String,
    pub holds: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct CertificateReport {
    pub pass: bool,
    pub relations: Vec<RelationReport>,
    pub first_violation: Option<String>,
}

impl From<&CertificateVerdict> for CertificateReport {
    fn from(v: &CertificateVerdict) -> Self {
        CertificateReport {
            pass: v.passed(),
            relations: v
                .relations
                .iter()
                .map(|r| RelationReport {
                    name: r.name.to_string(),
                    holds: r.holds,
                })
                .collect(),
            first_violation: v.first_violation().map(|s| s.to_string()),
        }
    }
}

impl fmt::Display for CertificateReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", if self.pass { "PASS" } else { "FAIL" })?;
        for (i, r) in self.relations.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(
                f,
                "  {}: {}",
                r.name,
                if r.holds { "holds" } else { "VIOLATED" }
            )?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct QuadCheckReport {
    pub pass: bool,
    pub lag: u32,
}

impl fmt::Display for QuadCheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}: certificate (lag {}) {} the distinguished element",
            if self.pass { "PASS" } else { "FAIL" },
            self.lag,
            if self.pass {
                "transports"
            } else {
                "does not transport"
            }
        )
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SpectraCliReport {
    pub kronecker_equal: bool,
    pub nonzero_spectrum_equal: bool,
    pub determinant_equal: bool,
    pub violation: bool,
    pub left_determinant: String,
    pub right_determinant: String,
    pub left_fingerprint: FingerprintReport,
    pub right_fingerprint: FingerprintReport,
}

impl SpectraCliReport {
    pub fn new(r: &SpectraReport, a: &BinMatrix, b: &BinMatrix) -> Self {
        SpectraCliReport {
            kronecker_equal: r.kronecker_equal,
            nonzero_spectrum_equal: r.nonzero_spectrum_equal,
            determinant_equal: r.determinant_equal,
            violation: r.violation,
            left_determinant: parry_sullivan_determinant(a).to_string(),
            right_determinant: parry_sullivan_determinant(b).to_string(),
            left_fingerprint: FingerprintReport::from(&spectrum_fingerprint(a)),
            right_fingerprint: FingerprintReport::from(&spectrum_fingerprint(b)),
        }
    }
}

impl fmt::Display for SpectraCliReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn word(equal: bool) -> &'static str {
            if equal {
                "equal"
            } else {
                "differ"
            }
        }
        writeln!(
            f,
            "kronecker: {}, nonzero-spectrum: {}, det: {}",
            word(self.kronecker_equal),
            word(self.nonzero_spectrum_equal),
            word(self.determinant_equal)
        )?;
        writeln!(
            f,
            "left:  det = {}, fingerprint = {} (zero multiplicity {})",
            self.left_determinant,
            self.left_fingerprint.nonzero_poly,
            self.left_fingerprint.zero_multiplicity
        )?;
        write!(
            f,
            "right: det = {}, fingerprint = {} (zero multiplicity {})",
            self.right_determinant,
            self.right_fingerprint.nonzero_poly,
            self.right_fingerprint.zero_multiplicity
        )?;
        if self.violation {
            write!(f, "\nWARNING: implication chain violated (library bug)")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct WitnessReport {
    pub r: MatrixBody,
    pub s: MatrixBody,
}

#[derive(Debug, Clone, Serialize)]
pub struct MatrixBody {
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<String>,
}

impl From<&crate::intlin::IntMatrix> for MatrixBody {
    fn from(m: &crate::intlin::IntMatrix) -> Self {
        MatrixBody {
            rows: m.rows(),
            cols: m.cols(),
            entries: m.entries().iter().map(|e| e.to_string()).collect(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct MoveReport {
    pub label: String,
    pub size: usize,
    pub entries: Vec<u8>,
    pub labels: Option<Vec<String>>,
    pub witness: Option<WitnessReport>,
}

#[derive(Debug, Clone, Serialize)]
pub struct MovesReport {
    pub count: usize,
    pub moves: Vec<MoveReport>,
}

#[derive(Debug, Clone, Serialize)]
pub struct SuspendCheckReport {
    pub determinant_preserved: bool,
    pub bowen_franks_preserved: bool,
    pub determinant: String,
    pub bowen_franks: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct SuspendReport {
    pub size: usize,
    pub entries: Vec<u8>,
    pub labels: Option<Vec<String>>,
    pub check: Option<SuspendCheckReport>,
}
