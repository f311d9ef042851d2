//! Discrete suspensions: ceiling functions, the suspension matrix, and
//! integer cocycle sums.

use crate::markov::{BinMatrix, MarkovError};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SuspensionError {
    #[error("ceiling value at state {state} must be positive")]
    ZeroCeiling { state: usize },
    #[error("ceiling has {found} values for {states} states")]
    SizeMismatch { states: usize, found: usize },
    #[error(transparent)]
    Markov(#[from] MarkovError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CocycleError {
    #[error("need {needed} coordinates for exponent {exponent}, got {found}")]
    InsufficientSymbols {
        exponent: i64,
        needed: usize,
        found: usize,
    },
    #[error("symbol {symbol} out of range 1..={states}")]
    BadSymbol { symbol: usize, states: usize },
}

/// Positive integer ceiling, one value per state.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CeilingFunction {
    values: Vec<u32>,
}

impl CeilingFunction {
    pub fn new(values: Vec<u32>) -> Result<Self, SuspensionError> {
        for (j, &v) in values.iter().enumerate() {
            if v == 0 {
                return Err(SuspensionError::ZeroCeiling { state: j + 1 });
            }
        }
        Ok(CeilingFunction { values })
    }

    pub fn constant(states: usize, value: u32) -> Result<Self, SuspensionError> {
        CeilingFunction::new(vec![value; states])
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn values(&self) -> &[u32] {
        &self.values
    }

    /// Value at a 0-based state index.
    pub fn value(&self, state: usize) -> u32 {
        self.values[state]
    }

    /// Total number of suspension states.
    pub fn total(&self) -> usize {
        self.values.iter().map(|&v| v as usize).sum()
    }
}

/// The suspension matrix: state `j` is replaced by a chain of `f_j` vertices
/// `j_0, ..., j_{f_j - 1}`; the last chain vertex inherits row `j` of `A`.
/// Vertices are ordered state-major, chain-minor, labelled `"j_i"` with
/// 1-based states.
pub fn suspend(a: &BinMatrix, f: &CeilingFunction) -> Result<BinMatrix, SuspensionError> {
    let n = a.size();
    if f.len() != n {
        return Err(SuspensionError::SizeMismatch {
            states: n,
            found: f.len(),
        });
    }
    let total = f.total();
    let mut offsets = Vec::with_capacity(n);
    let mut acc = 0usize;
    for j in 0..n {
        offsets.push(acc);
        acc += f.value(j) as usize;
    }
    let mut rows = vec![vec![0u8; total]; total];
    let mut labels = vec![String::new(); total];
    for j in 0..n {
        let fj = f.value(j) as usize;
        for i in 0..fj {
            labels[offsets[j] + i] = format!("{}_{}", j + 1, i);
        }
        for i in 0..fj - 1 {
            rows[offsets[j] + i][offsets[j] + i + 1] = 1;
        }
        for k in 0..n {
            if a.entry(j, k) {
                rows[offsets[j] + fj - 1][offsets[k]] = 1;
            }
        }
    }
    Ok(BinMatrix::from_rows(rows)?.with_labels(labels)?)
}

/// Cocycle sum `f^n` evaluated on a finite coordinate window. The ceiling
/// depends only on coordinate 0, so `n >= 1` needs `x_0..x_{n-1}` and
/// `n <= -1` needs `x_n..x_{-1}`; symbols are 1-based.
pub fn cocycle_sum(f: &CeilingFunction, symbols: &[usize], n: i64) -> Result<i64, CocycleError> {
    let needed = n.unsigned_abs() as usize;
    if symbols.len() < needed {
        return Err(CocycleError::InsufficientSymbols {
            exponent: n,
            needed,
            found: symbols.len(),
        });
    }
    let mut sum = 0i64;
    for &s in &symbols[..needed] {
        if s == 0 || s > f.len() {
            return Err(CocycleError::BadSymbol {
                symbol: s,
                states: f.len(),
            });
        }
        sum += f.value(s - 1) as i64;
    }
    Ok(if n >= 0 { sum } else { -sum })
}

/// Re-presents a ceiling that depends on a window of `k` coordinates as a
/// coordinate-0 ceiling on the k-th higher block presentation. `f` maps each
/// admissible k-word (1-based symbols) to its positive value.
pub fn reduce_to_markov_ceiling(
    a: &BinMatrix,
    k: usize,
    f: impl Fn(&[usize]) -> u32,
) -> Result<(BinMatrix, CeilingFunction), SuspensionError> {
    let presentation = a.higher_block(k)?;
    let mut values = Vec::with_capacity(presentation.words.len());
    for word in &presentation.words {
        let v = f(word);
        if v == 0 {
            return Err(SuspensionError::ZeroCeiling {
                state: values.len() + 1,
            });
        }
        values.push(v);
    }
    Ok((presentation.matrix, CeilingFunction::new(values)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::invariants::{bowen_franks, parry_sullivan_determinant};

    fn golden_mean() -> BinMatrix {
        BinMatrix::from_rows(vec![vec![1, 1], vec![1, 0]]).unwrap()
    }

    #[test]
    fn ceiling_validation() {
        assert!(CeilingFunction::new(vec![2, 1]).is_ok());
        assert!(matches!(
            CeilingFunction::new(vec![1, 0]),
            Err(SuspensionError::ZeroCeiling { state: 2 })
        ));
    }

    #[test]
    fn suspend_identity_ceiling() {
        let gm = golden_mean();
        let s = suspend(&gm, &CeilingFunction::constant(2, 1).unwrap()).unwrap();
        assert_eq!(s.entries_u8(), gm.entries_u8());
        assert_eq!(s.labels().unwrap(), &["1_0".to_string(), "2_0".to_string()]);
    }

    #[test]
    fn suspend_golden_mean() {
        let s = suspend(&golden_mean(), &CeilingFunction::new(vec![2, 1]).unwrap()).unwrap();
        assert_eq!(s.size(), 3);
        assert_eq!(s.entries_u8(), vec![0, 1, 0, 1, 0, 1, 1, 0, 0]);
        assert_eq!(
            s.labels().unwrap(),
            &["1_0".to_string(), "1_1".to_string(), "2_0".to_string()]
        );
    }

    #[test]
    fn suspend_full_shift() {
        let full = BinMatrix::full_shift(2).unwrap();
        let s = suspend(&full, &CeilingFunction::new(vec![2, 2]).unwrap()).unwrap();
        assert_eq!(s.size(), 4);
        assert_eq!(
            s.entries_u8(),
            vec![0, 1, 0, 0, 1, 0, 1, 0, 0, 0, 0, 1, 1, 0, 1, 0]
        );
    }

    #[test]
    fn suspend_size_and_mismatch() {
        let gm = golden_mean();
        let f = CeilingFunction::new(vec![3, 2]).unwrap();
        assert_eq!(suspend(&gm, &f).unwrap().size(), f.total());
        assert!(matches!(
            suspend(&gm, &CeilingFunction::new(vec![1]).unwrap()),
            Err(SuspensionError::SizeMismatch { .. })
        ));
    }

    #[test]
    fn suspend_preserves_irreducibility() {
        let gm = golden_mean();
        for f in [
            CeilingFunction::new(vec![2, 1]).unwrap(),
            CeilingFunction::new(vec![3, 4]).unwrap(),
        ] {
            assert!(suspend(&gm, &f).unwrap().is_irreducible());
        }
        let reducible = BinMatrix::from_rows(vec![vec![1, 0], vec![0, 1]]).unwrap();
        let f = CeilingFunction::new(vec![2, 2]).unwrap();
        assert!(!suspend(&reducible, &f).unwrap().is_irreducible());
    }

    #[test]
    fn suspend_preserves_invariants() {
        let gm = golden_mean();
        let f = CeilingFunction::new(vec![2, 3]).unwrap();
        let s = suspend(&gm, &f).unwrap();
        assert_eq!(
            parry_sullivan_determinant(&s),
            parry_sullivan_determinant(&gm)
        );
        assert_eq!(bowen_franks(&s), bowen_franks(&gm));
    }

    #[test]
    fn cocycle_cases() {
        let f = CeilingFunction::new(vec![2, 1]).unwrap();
        assert_eq!(cocycle_sum(&f, &[], 0).unwrap(), 0);
        assert_eq!(cocycle_sum(&f, &[1, 2, 1], 3).unwrap(), 5);
        assert_eq!(cocycle_sum(&f, &[2, 1], -2).unwrap(), -3);
        assert!(matches!(
            cocycle_sum(&f, &[1], 2),
            Err(CocycleError::InsufficientSymbols { .. })
        ));
        assert!(matches!(
            cocycle_sum(&f, &[3], 1),
            Err(CocycleError::BadSymbol { symbol: 3, .. })
        ));
    }

    #[test]
    fn cocycle_identity() {
        // f^{a+b}(x) = f^a(x) + f^b(sigma^a x) on a fixed word
        let f = CeilingFunction::new(vec![2, 1, 4]).unwrap();
        let word = [1usize, 3, 2, 1, 3, 3, 2, 1];
        for a in 0..4i64 {
            for b in 0..4i64 {
                let lhs = cocycle_sum(&f, &word, a + b).unwrap();
                let rhs = cocycle_sum(&f, &word, a).unwrap()
                    + cocycle_sum(&f, &word[a as usize..], b).unwrap();
                assert_eq!(lhs, rhs);
            }
        }
        // f^0(x) = f^n(x) + f^{-n}(sigma^n x)
        for n in 1..5i64 {
            let fwd = cocycle_sum(&f, &word, n).unwrap();
            let back = cocycle_sum(&f, &word[..n as usize], -n).unwrap();
            assert_eq!(fwd + back, 0);
        }
    }

    #[test]
    fn reduce_window_one_is_identity() {
        let gm = golden_mean();
        let (m, f) = reduce_to_markov_ceiling(&gm, 1, |w| w[0] as u32).unwrap();
        assert_eq!(m.entries_u8(), gm.entries_u8());
        assert_eq!(f.values(), &[1, 2]);
    }

    #[test]
    fn reduce_golden_mean_window_two() {
        let gm = golden_mean();
        let (m, f) = reduce_to_markov_ceiling(&gm, 2, |w| match w {
            [1, 1] => 1,
            [1, 2] => 2,
            [2, 1] => 1,
            _ => unreachable!(),
        })
        .unwrap();
        assert_eq!(m.size(), 3);
        assert_eq!(f.values(), &[1, 2, 1]);
    }

    #[test]
    fn reduce_constant_matches_constant() {
        let gm = golden_mean();
        let (m, f) = reduce_to_markov_ceiling(&gm, 2, |_| 3).unwrap();
        let via_blocks = suspend(&m, &f).unwrap();
        let direct = suspend(&gm, &CeilingFunction::constant(2, 3).unwrap()).unwrap();
        assert_eq!(
            parry_sullivan_determinant(&via_blocks),
            parry_sullivan_determinant(&direct)
        );
        assert_eq!(bowen_franks(&via_blocks), bowen_franks(&direct));
    }

    #[test]
    fn reduce_rejects_zero_values() {
        let gm = golden_mean();
        assert!(matches!(
            reduce_to_markov_ceiling(&gm, 2, |_| 0),
            Err(SuspensionError::ZeroCeiling { .. })
        ));
    }
}
