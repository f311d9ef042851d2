//! 0-1 transition matrices regarded as topological Markov shifts.
//!
//! States are `1..=N` in every user-visible word or label and `0..N`
//! internally.

use crate::intlin::IntMatrix;
use num_bigint::BigInt;
use num_traits::{One, Zero};
use std::collections::VecDeque;
use std::fmt;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MarkovError {
    #[error("transition matrix must have at least one state")]
    Empty,
    #[error("transition matrix must be square, got {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },
    #[error("entry at row {row}, column {col} is {value}, expected 0 or 1")]
    BadEntry { row: usize, col: usize, value: i64 },
    #[error("{found} labels for {states} states")]
    LabelCount { states: usize, found: usize },
    #[error("matrix is not irreducible")]
    Reducible,
    #[error("no admissible words of length {k}")]
    NoWords { k: usize },
}

/// Square 0-1 matrix with optional state labels.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BinMatrix {
    size: usize,
    bits: Vec<bool>,
    labels: Option<Vec<String>>,
}

impl BinMatrix {
    pub fn from_rows(rows: Vec<Vec<u8>>) -> Result<Self, MarkovError> {
        let size = rows.len();
        if size == 0 {
            return Err(MarkovError::Empty);
        }
        let mut bits = Vec::with_capacity(size * size);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != size {
                return Err(MarkovError::NotSquare {
                    rows: size,
                    cols: row.len(),
                });
            }
            for (j, &e) in row.iter().enumerate() {
                match e {
                    0 => bits.push(false),
                    1 => bits.push(true),
                    other => {
                        return Err(MarkovError::BadEntry {
                            row: i + 1,
                            col: j + 1,
                            value: other as i64,
                        })
                    }
                }
            }
        }
        Ok(BinMatrix {
            size,
            bits,
            labels: None,
        })
    }

    pub fn from_fn(
        size: usize,
        mut f: impl FnMut(usize, usize) -> bool,
    ) -> Result<Self, MarkovError> {
        if size == 0 {
            return Err(MarkovError::Empty);
        }
        let mut bits = Vec::with_capacity(size * size);
        for i in 0..size {
            for j in 0..size {
                bits.push(f(i, j));
            }
        }
        Ok(BinMatrix {
            size,
            bits,
            labels: None,
        })
    }

    /// Full shift on `n` symbols: every transition allowed.
    pub fn full_shift(n: usize) -> Result<Self, MarkovError> {
        BinMatrix::from_fn(n, |_, _| true)
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self, MarkovError> {
        if labels.len() != self.size {
            return Err(MarkovError::LabelCount {
                states: self.size,
                found: labels.len(),
            });
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn size(&self) -> usize {
        self.size
    }

    /// 0-based entry access.
    pub fn entry(&self, i: usize, j: usize) -> bool {
        self.bits[i * self.size + j]
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// Row-major 0/1 entries.
    pub fn entries_u8(&self) -> Vec<u8> {
        self.bits.iter().map(|&b| b as u8).collect()
    }

    pub fn to_int_matrix(&self) -> IntMatrix {
        IntMatrix::from_fn(self.size, self.size, |i, j| {
            if self.entry(i, j) {
                BigInt::one()
            } else {
                BigInt::zero()
            }
        })
    }

    pub fn transpose(&self) -> BinMatrix {
        BinMatrix {
            size: self.size,
            bits: (0..self.size * self.size)
                .map(|idx| self.entry(idx % self.size, idx / self.size))
                .collect(),
            labels: self.labels.clone(),
        }
    }

    pub fn out_neighbors(&self, i: usize) -> Vec<usize> {
        (0..self.size).filter(|&j| self.entry(i, j)).collect()
    }

    pub fn in_neighbors(&self, j: usize) -> Vec<usize> {
        (0..self.size).filter(|&i| self.entry(i, j)).collect()
    }

    fn reaches_all(&self, start: usize, reversed: bool) -> bool {
        let mut seen = vec![false; self.size];
        let mut queue = VecDeque::from([start]);
        seen[start] = true;
        let mut count = 1;
        while let Some(u) = queue.pop_front() {
            for (v, visited) in seen.iter_mut().enumerate() {
                let edge = if reversed {
                    self.entry(v, u)
                } else {
                    self.entry(u, v)
                };
                if edge && !*visited {
                    *visited = true;
                    count += 1;
                    queue.push_back(v);
                }
            }
        }
        count == self.size
    }

    /// Irreducibility in the matrix sense: for all i, j some power has
    /// `A^k(i,j) > 0`. For a single state this requires a self-loop.
    pub fn is_irreducible(&self) -> bool {
        if self.size == 1 {
            return self.entry(0, 0);
        }
        self.reaches_all(0, false) && self.reaches_all(0, true)
    }

    pub fn is_permutation(&self) -> bool {
        let row_ok = (0..self.size).all(|i| self.out_neighbors(i).len() == 1);
        let col_ok = (0..self.size).all(|j| self.in_neighbors(j).len() == 1);
        row_ok && col_ok
    }

    /// Period of an irreducible matrix: gcd of all cycle lengths, computed
    /// from BFS level differences across edges.
    pub fn period(&self) -> Result<usize, MarkovError> {
        if !self.is_irreducible() {
            return Err(MarkovError::Reducible);
        }
        let mut dist = vec![usize::MAX; self.size];
        let mut queue = VecDeque::from([0usize]);
        dist[0] = 0;
        while let Some(u) = queue.pop_front() {
            for v in self.out_neighbors(u) {
                if dist[v] == usize::MAX {
                    dist[v] = dist[u] + 1;
                    queue.push_back(v);
                }
            }
        }
        let mut g: usize = 0;
        for u in 0..self.size {
            for v in self.out_neighbors(u) {
                let diff = (dist[u] as i64 + 1 - dist[v] as i64).unsigned_abs() as usize;
                g = gcd(g, diff);
            }
        }
        debug_assert!(g >= 1);
        Ok(g)
    }

    /// Admissible words of length `k`, lexicographically ordered, with
    /// 1-based symbols.
    pub fn admissible_words(&self, k: usize) -> Vec<Vec<usize>> {
        assert!(k >= 1, "word length must be positive");
        let mut words = Vec::new();
        let mut current = Vec::with_capacity(k);
        self.extend_words(k, &mut current, &mut words);
        words
    }

    fn extend_words(&self, k: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if current.len() == k {
            out.push(current.iter().map(|&s| s + 1).collect());
            return;
        }
        for next in 0..self.size {
            if let Some(&last) = current.last() {
                if !self.entry(last, next) {
                    continue;
                }
            }
            current.push(next);
            self.extend_words(k, current, out);
            current.pop();
        }
    }

    /// The k-th higher block presentation over admissible k-words.
    pub fn higher_block(&self, k: usize) -> Result<WordPresentation, MarkovError> {
        assert!(k >= 1, "block length must be positive");
        let words = self.admissible_words(k);
        if words.is_empty() {
            return Err(MarkovError::NoWords { k });
        }
        let n = words.len();
        let matrix = BinMatrix::from_fn(n, |a, b| {
            let (w, w2) = (&words[a], &words[b]);
            w[1..] == w2[..k - 1] && self.entry(w[k - 1] - 1, w2[k - 1] - 1)
        })?
        .with_labels(words.iter().map(|w| word_label(w)).collect())?;
        Ok(WordPresentation {
            block_length: k,
            words,
            matrix,
        })
    }
}

impl fmt::Display for BinMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.size {
            for j in 0..self.size {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", self.entry(i, j) as u8)?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// Higher-block presentation: ordered word list plus the transition matrix
/// over those words.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WordPresentation {
    pub block_length: usize,
    pub words: Vec<Vec<usize>>,
    pub matrix: BinMatrix,
}

/// Words print as digit strings when every symbol is a single digit,
/// dot-separated otherwise.
pub fn word_label(word: &[usize]) -> String {
    if word.iter().all(|&s| s <= 9) {
        word.iter().map(|s| s.to_string()).collect()
    } else {
        word.iter()
            .map(|s| s.to_string())
            .collect::<Vec<_>>()
            .join(".")
    }
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}
