//! Shift-equivalence and strong-shift-equivalence witnesses: verification,
//! bounded toy search, and one-step flow-equivalence move generation.
//!
//! Deciding shift equivalence in general is out of scope; the search here is
//! explicitly bounded and a `None` result never implies non-equivalence.

use crate::intlin::{IntMatrix, ShapeError};
use crate::invariants::HypothesisError;
use crate::markov::BinMatrix;
use crate::suspension::{suspend, CeilingFunction};
use num_bigint::BigInt;
use num_traits::Zero;
use thiserror::Error;

/// Shift-equivalence witness: nonnegative rectangular `H`, `K` and a lag
/// `l >= 1` with `A^l = HK`, `B^l = KH`, `AH = HB`, `KA = BK`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeCertificate {
    pub h: IntMatrix,
    pub k: IntMatrix,
    pub lag: u32,
}

/// Outcome of checking one labelled matrix relation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelationCheck {
    pub name: &'static str,
    pub holds: bool,
}

/// Per-relation verdict for a certificate; `passed` requires every relation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CertificateVerdict {
    pub relations: Vec<RelationCheck>,
}

impl CertificateVerdict {
    pub fn passed(&self) -> bool {
        self.relations.iter().all(|r| r.holds)
    }

    pub fn first_violation(&self) -> Option<&'static str> {
        self.relations.iter().find(|r| !r.holds).map(|r| r.name)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SearchError {
    #[error("search space of about {candidates} candidates exceeds the 10^8 budget")]
    TooLarge { candidates: u128 },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MoveError {
    #[error(transparent)]
    Hypothesis(#[from] HypothesisError),
    #[error("state {state} has degree {degree}; splitting enumeration is capped at degree {max}")]
    DegreeTooLarge {
        state: usize,
        degree: usize,
        max: usize,
    },
}

/// Splittings per state grow as 2^(degree-1); past this the move list is
/// unusable anyway.
const MAX_SPLIT_DEGREE: usize = 16;

fn expect_square(m: &IntMatrix) -> Result<usize, ShapeError> {
    if m.is_square() {
        Ok(m.rows())
    } else {
        Err(ShapeError::NotSquare {
            rows: m.rows(),
            cols: m.cols(),
        })
    }
}

fn expect_shape(
    m: &IntMatrix,
    rows: usize,
    cols: usize,
    context: &'static str,
) -> Result<(), ShapeError> {
    if m.rows() == rows && m.cols() == cols {
        Ok(())
    } else {
        Err(ShapeError::Incompatible {
            context,
            left_rows: rows,
            left_cols: cols,
            right_rows: m.rows(),
            right_cols: m.cols(),
        })
    }
}

/// Checks the four shift-equivalence relations plus nonnegativity for
/// general nonnegative integer square matrices.
pub fn verify_shift_equivalence(
    a: &IntMatrix,
    b: &IntMatrix,
    cert: &SeCertificate,
) -> Result<CertificateVerdict, ShapeError> {
    let n = expect_square(a)?;
    let m = expect_square(b)?;
    expect_shape(&cert.h, n, m, "H")?;
    expect_shape(&cert.k, m, n, "K")?;
    let al = a.pow(cert.lag)?;
    let bl = b.pow(cert.lag)?;
    let relations = vec![
        RelationCheck {
            name: "H >= 0 and K >= 0",
            holds: cert.h.is_nonnegative() && cert.k.is_nonnegative(),
        },
        RelationCheck {
            name: "A^l = HK",
            holds: al == &cert.h * &cert.k,
        },
        RelationCheck {
            name: "B^l = KH",
            holds: bl == &cert.k * &cert.h,
        },
        RelationCheck {
            name: "AH = HB",
            holds: a * &cert.h == &cert.h * b,
        },
        RelationCheck {
            name: "KA = BK",
            holds: &cert.k * a == b * &cert.k,
        },
    ];
    Ok(CertificateVerdict { relations })
}

/// Elementary strong-shift-equivalence witness: `A = RS`, `B = SR`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ElementaryEquivalence {
    pub r: IntMatrix,
    pub s: IntMatrix,
}

impl ElementaryEquivalence {
    /// Every elementary equivalence is a lag-1 shift equivalence.
    pub fn to_certificate(&self) -> SeCertificate {
        SeCertificate {
            h: self.r.clone(),
            k: self.s.clone(),
            lag: 1,
        }
    }
}

pub fn verify_elementary_equivalence(
    a: &IntMatrix,
    b: &IntMatrix,
    r: &IntMatrix,
    s: &IntMatrix,
) -> Result<bool, ShapeError> {
    let n = expect_square(a)?;
    let m = expect_square(b)?;
    expect_shape(r, n, m, "R")?;
    expect_shape(s, m, n, "S")?;
    Ok(r.is_nonnegative() && s.is_nonnegative() && &(r * s) == a && &(s * r) == b)
}

/// Checks a certificate for the Kronecker squares: the lag relations for
/// `A^t (x) A` and `B^t (x) B` together with the one-sided intertwinings of
/// `1 (x) A` and `A^t (x) 1`.
pub fn verify_kronecker_certificate(
    a: &BinMatrix,
    b: &BinMatrix,
    cert: &SeCertificate,
) -> Result<CertificateVerdict, ShapeError> {
    let n = a.size();
    let m = b.size();
    expect_shape(&cert.h, n * n, m * m, "H")?;
    expect_shape(&cert.k, m * m, n * n, "K")?;
    let am = a.to_int_matrix();
    let bm = b.to_int_matrix();
    let at = am.transpose();
    let bt = bm.transpose();
    let ka = at.kronecker(&am);
    let kb = bt.kronecker(&bm);
    let one_a = IntMatrix::identity(n).kronecker(&am);
    let one_b = IntMatrix::identity(m).kronecker(&bm);
    let at_one = at.kronecker(&IntMatrix::identity(n));
    let bt_one = bt.kronecker(&IntMatrix::identity(m));
    let relations = vec![
        RelationCheck {
            name: "H >= 0 and K >= 0",
            holds: cert.h.is_nonnegative() && cert.k.is_nonnegative(),
        },
        RelationCheck {
            name: "(A^t(x)A)^l = HK",
            holds: ka.pow(cert.lag)? == &cert.h * &cert.k,
        },
        RelationCheck {
            name: "(B^t(x)B)^l = KH",
            holds: kb.pow(cert.lag)? == &cert.k * &cert.h,
        },
        RelationCheck {
            name: "(1(x)A)H = H(1(x)B)",
            holds: &one_a * &cert.h == &cert.h * &one_b,
        },
        RelationCheck {
            name: "K(1(x)A) = (1(x)B)K",
            holds: &cert.k * &one_a == &one_b * &cert.k,
        },
        RelationCheck {
            name: "(A^t(x)1)H = H(B^t(x)1)",
            holds: &at_one * &cert.h == &cert.h * &bt_one,
        },
        RelationCheck {
            name: "K(A^t(x)1) = (B^t(x)1)K",
            holds: &cert.k * &at_one == &bt_one * &cert.k,
        },
    ];
    Ok(CertificateVerdict { relations })
}

/// Lifts an elementary equivalence of `(A, B)` to a Kronecker-square
/// certificate `(S^t (x) R, R^t (x) S, 1)`.
pub fn lift_elementary_to_kronecker(witness: &ElementaryEquivalence) -> SeCertificate {
    SeCertificate {
        h: witness.s.transpose().kronecker(&witness.r),
        k: witness.r.transpose().kronecker(&witness.s),
        lag: 1,
    }
}

/// Exhaustive bounded search for an elementary equivalence `A = RS`,
/// `B = SR`. The shapes force `R` to be `N x M` and `S` to be `M x N`, so
/// the inner dimension is the size of `B`; nothing is searched when it
/// exceeds `inner_dim_max`. Entries range over `0..=entry_max`. Deterministic
/// first match in lexicographic order of `R`, then of `S` column choices.
pub fn search_elementary_equivalence(
    a: &BinMatrix,
    b: &BinMatrix,
    inner_dim_max: usize,
    entry_max: u32,
) -> Result<Option<ElementaryEquivalence>, SearchError> {
    let n = a.size();
    let m = b.size();
    if m > inner_dim_max {
        return Ok(None);
    }
    let base = entry_max as u128 + 1;
    let candidates = base.checked_pow((2 * n * m) as u32).unwrap_or(u128::MAX);
    if candidates > 100_000_000 {
        return Err(SearchError::TooLarge { candidates });
    }
    let am = a.to_int_matrix();
    let bm = b.to_int_matrix();
    let mut r_entries = vec![0u32; n * m];
    loop {
        if let Some(found) = try_r_matrix(&am, &bm, &r_entries, n, m, entry_max) {
            return Ok(Some(found));
        }
        if !increment(&mut r_entries, entry_max) {
            return Ok(None);
        }
    }
}

/// Odometer increment in lexicographic order (last entry fastest).
fn increment(digits: &mut [u32], max: u32) -> bool {
    for d in digits.iter_mut().rev() {
        if *d < max {
            *d += 1;
            return true;
        }
        *d = 0;
    }
    false
}

fn try_r_matrix(
    a: &IntMatrix,
    b: &IntMatrix,
    r_entries: &[u32],
    n: usize,
    m: usize,
    entry_max: u32,
) -> Option<ElementaryEquivalence> {
    let r = IntMatrix::from_fn(n, m, |i, j| BigInt::from(r_entries[i * m + j]));
    // columns of S solve R * s_col = A_col independently
    let mut column_choices: Vec<Vec<Vec<u32>>> = Vec::with_capacity(n);
    for col in 0..n {
        let target: Vec<BigInt> = (0..n).map(|row| a.get(row, col).clone()).collect();
        let sols = column_solutions(&r, &target, m, entry_max);
        if sols.is_empty() {
            return None;
        }
        column_choices.push(sols);
    }
    // cartesian product over column choices, first match wins
    let mut pick = vec![0usize; n];
    loop {
        let s = IntMatrix::from_fn(m, n, |i, j| BigInt::from(column_choices[j][pick[j]][i]));
        if &(&s * &r) == b {
            debug_assert_eq!(&(&r * &s), a);
            return Some(ElementaryEquivalence { r, s });
        }
        let mut pos = n;
        loop {
            if pos == 0 {
                return None;
            }
            pos -= 1;
            pick[pos] += 1;
            if pick[pos] < column_choices[pos].len() {
                break;
            }
            pick[pos] = 0;
        }
    }
}

/// All nonnegative integer vectors `v` with entries `<= entry_max` and
/// `R v = target`, in lexicographic order.
fn column_solutions(r: &IntMatrix, target: &[BigInt], m: usize, entry_max: u32) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut v = vec![0u32; m];
    loop {
        let vec_big: Vec<BigInt> = v.iter().map(|&x| BigInt::from(x)).collect();
        if r.apply(&vec_big).expect("length matches") == target {
            out.push(v.clone());
        }
        if !increment(&mut v, entry_max) {
            return out;
        }
    }
}

/// A one-step flow-equivalence move: the resulting matrix plus, for state
/// splittings, its elementary-equivalence witness. Symbol expansions are
/// suspensions, so they carry no witness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FlowMove {
    pub label: String,
    pub matrix: BinMatrix,
    pub witness: Option<ElementaryEquivalence>,
}

/// Deterministic family of one-step flow-equivalent neighbours of `A`:
/// symbol expansions by state, then out-splittings, then in-splittings, each
/// partition in lexicographic order.
pub fn flow_moves(a: &BinMatrix) -> Result<Vec<FlowMove>, MoveError> {
    crate::invariants::check_franks_hypothesis(a, "input")?;
    let n = a.size();
    for j in 0..n {
        let degree = a.out_neighbors(j).len().max(a.in_neighbors(j).len());
        if degree > MAX_SPLIT_DEGREE {
            return Err(MoveError::DegreeTooLarge {
                state: j + 1,
                degree,
                max: MAX_SPLIT_DEGREE,
            });
        }
    }
    let mut moves = Vec::new();
    for j in 0..n {
        let mut values = vec![1u32; n];
        values[j] = 2;
        let f = CeilingFunction::new(values).expect("positive by construction");
        let matrix = suspend(a, &f).expect("sizes match");
        moves.push(FlowMove {
            label: format!("expand state {}", j + 1),
            matrix,
            witness: None,
        });
    }
    for j in 0..n {
        for (first, second) in bipartitions(&a.out_neighbors(j)) {
            let (matrix, witness) = out_split(a, j, &first, &second);
            moves.push(FlowMove {
                label: format!(
                    "out-split state {} [{} | {}]",
                    j + 1,
                    set_label(&first),
                    set_label(&second)
                ),
                matrix,
                witness: Some(witness),
            });
        }
    }
    for j in 0..n {
        for (first, second) in bipartitions(&a.in_neighbors(j)) {
            let (matrix, witness) = in_split(a, j, &first, &second);
            moves.push(FlowMove {
                label: format!(
                    "in-split state {} [{} | {}]",
                    j + 1,
                    set_label(&first),
                    set_label(&second)
                ),
                matrix,
                witness: Some(witness),
            });
        }
    }
    Ok(moves)
}

fn set_label(states: &[usize]) -> String {
    let inner: Vec<String> = states.iter().map(|s| (s + 1).to_string()).collect();
    format!("{{{}}}", inner.join(","))
}

/// Unordered two-part partitions of a neighbour set, canonicalized so the
/// first part contains the smallest element; emitted in lexicographic order
/// of the membership mask of the remaining elements.
fn bipartitions(neighbors: &[usize]) -> Vec<(Vec<usize>, Vec<usize>)> {
    let d = neighbors.len();
    if d < 2 {
        return Vec::new();
    }
    let mut out = Vec::new();
    // mask over neighbors[1..]: bit set sends the element to the second part
    for mask in 1u32..(1 << (d - 1)) {
        let mut first = vec![neighbors[0]];
        let mut second = Vec::new();
        for (idx, &v) in neighbors[1..].iter().enumerate() {
            if mask & (1 << idx) != 0 {
                second.push(v);
            } else {
                first.push(v);
            }
        }
        out.push((first, second));
    }
    out
}

/// Williams out-splitting of state `j` by a partition of its out-neighbours.
/// The split matrix is `E * D` for the division matrix `D` and edge matrix
/// `E`, and `(D, E)` witnesses `A = DE`, `B = ED`.
fn out_split(
    a: &BinMatrix,
    j: usize,
    first: &[usize],
    second: &[usize],
) -> (BinMatrix, ElementaryEquivalence) {
    let n = a.size();
    // split state j becomes indices j and j+1; later states shift by one
    let copy_of = |split: usize| -> usize {
        if split <= j {
            split
        } else {
            split - 1
        }
    };
    let d = IntMatrix::from_fn(n, n + 1, |row, col| {
        if copy_of(col) == row {
            BigInt::from(1)
        } else {
            BigInt::zero()
        }
    });
    let e = IntMatrix::from_fn(n + 1, n, |row, col| {
        let hit = if row == j {
            first.contains(&col)
        } else if row == j + 1 {
            second.contains(&col)
        } else {
            a.entry(copy_of(row), col)
        };
        if hit {
            BigInt::from(1)
        } else {
            BigInt::zero()
        }
    });
    let split = &e * &d;
    let matrix =
        BinMatrix::from_fn(n + 1, |r, c| split.get(r, c) == &BigInt::from(1)).expect("nonempty");
    (matrix, ElementaryEquivalence { r: d, s: e })
}

/// Williams in-splitting of state `j` by a partition of its in-neighbours;
/// witnesses `A = ED`, `B = DE` with the roles of the factors swapped.
fn in_split(
    a: &BinMatrix,
    j: usize,
    first: &[usize],
    second: &[usize],
) -> (BinMatrix, ElementaryEquivalence) {
    let n = a.size();
    let copy_of = |split: usize| -> usize {
        if split <= j {
            split
        } else {
            split - 1
        }
    };
    let e = IntMatrix::from_fn(n, n + 1, |row, col| {
        let hit = if col == j {
            first.contains(&row)
        } else if col == j + 1 {
            second.contains(&row)
        } else {
            a.entry(row, copy_of(col))
        };
        if hit {
            BigInt::from(1)
        } else {
            BigInt::zero()
        }
    });
    let d = IntMatrix::from_fn(n + 1, n, |row, col| {
        if copy_of(row) == col {
            BigInt::from(1)
        } else {
            BigInt::zero()
        }
    });
    let split = &d * &e;
    let matrix =
        BinMatrix::from_fn(n + 1, |r, c| split.get(r, c) == &BigInt::from(1)).expect("nonempty");
    (matrix, ElementaryEquivalence { r: e, s: d })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::invariants::{bowen_franks, flow_equivalent, parry_sullivan_determinant};

    fn golden_mean() -> BinMatrix {
        BinMatrix::from_rows(vec![vec![1, 1], vec![1, 0]]).unwrap()
    }

    fn full(n: usize) -> BinMatrix {
        BinMatrix::full_shift(n).unwrap()
    }

    #[test]
    fn self_certificate_verifies() {
        for m in [golden_mean(), full(3)] {
            let a = m.to_int_matrix();
            let cert = SeCertificate {
                h: a.clone(),
                k: a.clone(),
                lag: 2,
            };
            assert!(verify_shift_equivalence(&a, &a, &cert).unwrap().passed());
        }
    }

    #[test]
    fn elementary_pair_certificate_verifies() {
        let gm = golden_mean();
        let moves = flow_moves(&gm).unwrap();
        let split = moves.iter().find(|m| m.witness.is_some()).unwrap();
        let w = split.witness.as_ref().unwrap();
        let verdict = verify_shift_equivalence(
            &gm.to_int_matrix(),
            &split.matrix.to_int_matrix(),
            &w.to_certificate(),
        )
        .unwrap();
        assert!(verdict.passed(), "failed: {:?}", verdict.first_violation());
    }

    #[test]
    fn negative_entry_fails_with_reason() {
        let a = golden_mean().to_int_matrix();
        let mut h = a.clone();
        h.set(0, 0, BigInt::from(-1));
        let cert = SeCertificate {
            h,
            k: a.clone(),
            lag: 2,
        };
        let verdict = verify_shift_equivalence(&a, &a, &cert).unwrap();
        assert!(!verdict.passed());
        assert_eq!(verdict.first_violation(), Some("H >= 0 and K >= 0"));
    }

    #[test]
    fn shape_mismatch_is_an_error() {
        let a = golden_mean().to_int_matrix();
        let cert = SeCertificate {
            h: IntMatrix::zero(3, 2),
            k: IntMatrix::zero(2, 2),
            lag: 1,
        };
        assert!(verify_shift_equivalence(&a, &a, &cert).is_err());
    }

    #[test]
    fn elementary_identity_factorizations() {
        let a = golden_mean().to_int_matrix();
        let id = IntMatrix::identity(2);
        assert!(verify_elementary_equivalence(&a, &a, &a, &id).unwrap());
        assert!(verify_elementary_equivalence(&a, &a, &id, &a).unwrap());
    }

    #[test]
    fn hand_built_out_splitting_verifies() {
        // golden mean, out-split state 1 by {1} | {2}
        let gm = golden_mean();
        let (matrix, w) = out_split(&gm, 0, &[0], &[1]);
        assert_eq!(matrix.entries_u8(), vec![1, 1, 0, 0, 0, 1, 1, 1, 0]);
        assert!(verify_elementary_equivalence(
            &gm.to_int_matrix(),
            &matrix.to_int_matrix(),
            &w.r,
            &w.s
        )
        .unwrap());
    }

    #[test]
    fn kronecker_certificate_self() {
        let gm = golden_mean();
        let m = gm.to_int_matrix();
        let k = m.transpose().kronecker(&m);
        let cert = SeCertificate {
            h: k.clone(),
            k: k.clone(),
            lag: 2,
        };
        assert!(verify_kronecker_certificate(&gm, &gm, &cert)
            .unwrap()
            .passed());
    }

    #[test]
    fn kronecker_certificate_from_elementary_lift() {
        let gm = golden_mean();
        let moves = flow_moves(&gm).unwrap();
        for mv in moves.iter().filter(|m| m.witness.is_some()).take(3) {
            let lifted = lift_elementary_to_kronecker(mv.witness.as_ref().unwrap());
            let verdict = verify_kronecker_certificate(&gm, &mv.matrix, &lifted).unwrap();
            assert!(verdict.passed(), "failed: {:?}", verdict.first_violation());
        }
    }

    #[test]
    fn kronecker_certificate_isolated_intertwining_failure() {
        // Hand-built: A = B = full 2-shift, H = F + x y^t with F all ones and
        // x, y zero-sum; every relation holds except (A^t(x)1)H = H(B^t(x)1).
        let f2 = full(2);
        let h = IntMatrix::from_rows(vec![
            vec![2, 0, 1, 1],
            vec![0, 2, 1, 1],
            vec![1, 1, 1, 1],
            vec![1, 1, 1, 1],
        ]);
        let k = IntMatrix::from_fn(4, 4, |_, _| BigInt::from(1));
        let cert = SeCertificate { h, k, lag: 2 };
        let verdict = verify_kronecker_certificate(&f2, &f2, &cert).unwrap();
        assert!(!verdict.passed());
        assert_eq!(verdict.first_violation(), Some("(A^t(x)1)H = H(B^t(x)1)"));
        let failed: Vec<&str> = verdict
            .relations
            .iter()
            .filter(|r| !r.holds)
            .map(|r| r.name)
            .collect();
        assert_eq!(failed, vec!["(A^t(x)1)H = H(B^t(x)1)"]);
    }

    #[test]
    fn search_finds_self_factorization() {
        let gm = golden_mean();
        let found = search_elementary_equivalence(&gm, &gm, 4, 1)
            .unwrap()
            .expect("self pair is elementary");
        assert!(verify_elementary_equivalence(
            &gm.to_int_matrix(),
            &gm.to_int_matrix(),
            &found.r,
            &found.s
        )
        .unwrap());
    }

    #[test]
    fn search_finds_out_splitting() {
        let gm = golden_mean();
        let (split, _) = out_split(&gm, 0, &[0], &[1]);
        let found = search_elementary_equivalence(&gm, &split, 3, 1)
            .unwrap()
            .expect("splitting is elementary");
        assert!(verify_elementary_equivalence(
            &gm.to_int_matrix(),
            &split.to_int_matrix(),
            &found.r,
            &found.s
        )
        .unwrap());
    }

    #[test]
    fn search_exhausts_on_distinct_entropy() {
        assert_eq!(
            search_elementary_equivalence(&full(2), &full(3), 3, 1).unwrap(),
            None
        );
    }

    #[test]
    fn search_respects_bounds() {
        assert_eq!(
            search_elementary_equivalence(&full(2), &full(3), 2, 1).unwrap(),
            None
        );
        assert!(matches!(
            search_elementary_equivalence(&full(5), &full(5), 5, 3),
            Err(SearchError::TooLarge { .. })
        ));
    }

    #[test]
    fn moves_match_expansion_example() {
        let gm = golden_mean();
        let moves = flow_moves(&gm).unwrap();
        assert_eq!(moves[0].label, "expand state 1");
        assert_eq!(
            moves[0].matrix.entries_u8(),
            vec![0, 1, 0, 1, 0, 1, 1, 0, 0]
        );
    }

    #[test]
    fn moves_full_shift_out_split() {
        let f2 = full(2);
        let moves = flow_moves(&f2).unwrap();
        let split = moves
            .iter()
            .find(|m| m.label == "out-split state 1 [{1} | {2}]")
            .unwrap();
        assert_eq!(split.matrix.size(), 3);
        assert_eq!(split.matrix.entries_u8(), vec![1, 1, 0, 0, 0, 1, 1, 1, 1]);
        let w = split.witness.as_ref().unwrap();
        assert!(verify_elementary_equivalence(
            &f2.to_int_matrix(),
            &split.matrix.to_int_matrix(),
            &w.r,
            &w.s
        )
        .unwrap());
    }

    #[test]
    fn moves_preserve_flow_invariants() {
        for a in [golden_mean(), full(2), full(3)] {
            let det = parry_sullivan_determinant(&a);
            let bf = bowen_franks(&a);
            for mv in flow_moves(&a).unwrap() {
                assert_eq!(parry_sullivan_determinant(&mv.matrix), det, "{}", mv.label);
                assert_eq!(bowen_franks(&mv.matrix), bf, "{}", mv.label);
                assert!(flow_equivalent(&a, &mv.matrix).unwrap(), "{}", mv.label);
                if let Some(w) = &mv.witness {
                    assert!(verify_elementary_equivalence(
                        &a.to_int_matrix(),
                        &mv.matrix.to_int_matrix(),
                        &w.r,
                        &w.s
                    )
                    .unwrap());
                }
            }
        }
    }

    #[test]
    fn moves_reject_bad_hypotheses() {
        let perm = BinMatrix::from_rows(vec![vec![0, 1], vec![1, 0]]).unwrap();
        assert!(flow_moves(&perm).is_err());
    }

    #[test]
    fn moves_reject_oversized_degrees() {
        let big = full(17);
        assert!(matches!(
            flow_moves(&big),
            Err(MoveError::DegreeTooLarge { degree: 17, .. })
        ));
        assert!(flow_moves(&full(4)).is_ok());
    }
}
