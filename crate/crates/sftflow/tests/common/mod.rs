#![allow(dead_code)]

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use sftflow::certificates::ElementaryEquivalence;
use sftflow::intlin::{IntMatrix, IntPolynomial};
use sftflow::markov::BinMatrix;
use sftflow::suspension::CeilingFunction;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn golden_mean() -> BinMatrix {
    BinMatrix::from_rows(vec![vec![1, 1], vec![1, 0]]).unwrap()
}

pub fn full(n: usize) -> BinMatrix {
    BinMatrix::full_shift(n).unwrap()
}

pub fn random_bin_matrix(rng: &mut ChaCha8Rng, n: usize) -> BinMatrix {
    BinMatrix::from_fn(n, |_, _| rng.gen_bool(0.5)).unwrap()
}

/// Random irreducible non-permutation matrix by rejection; n must be >= 2
/// since no 1x1 matrix satisfies both conditions.
pub fn random_irreducible_nonperm(rng: &mut ChaCha8Rng, n: usize) -> BinMatrix {
    assert!(n >= 2);
    for _ in 0..100_000 {
        let m = random_bin_matrix(rng, n);
        if m.is_irreducible() && !m.is_permutation() {
            return m;
        }
    }
    unreachable!("rejection sampling failed");
}

pub fn random_ceiling(rng: &mut ChaCha8Rng, n: usize, max: u32) -> CeilingFunction {
    CeilingFunction::new((0..n).map(|_| rng.gen_range(1..=max)).collect()).unwrap()
}

pub fn random_int_matrix(
    rng: &mut ChaCha8Rng,
    rows: usize,
    cols: usize,
    lo: i64,
    hi: i64,
) -> IntMatrix {
    IntMatrix::from_fn(rows, cols, |_, _| BigInt::from(rng.gen_range(lo..=hi)))
}

pub fn random_permutation_matrix(rng: &mut ChaCha8Rng, n: usize) -> IntMatrix {
    let mut perm: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        let j = rng.gen_range(0..=i);
        perm.swap(i, j);
    }
    IntMatrix::from_fn(n, n, |i, j| {
        if perm[i] == j {
            BigInt::one()
        } else {
            BigInt::zero()
        }
    })
}

/// Elementary pair (A, P A P^t) with witness (A P^t, P).
pub fn permutation_conjugate_pair(
    rng: &mut ChaCha8Rng,
    a: &BinMatrix,
) -> (BinMatrix, ElementaryEquivalence) {
    let n = a.size();
    let p = random_permutation_matrix(rng, n);
    let am = a.to_int_matrix();
    let r = &am * &p.transpose();
    let conjugate = &(&p * &am) * &p.transpose();
    let b = BinMatrix::from_fn(n, |i, j| conjugate.get(i, j) == &BigInt::one()).unwrap();
    (b, ElementaryEquivalence { r, s: p })
}

/// Cofactor-expansion determinant (exponential, oracle use only).
pub fn det_cofactor(a: &IntMatrix) -> BigInt {
    let n = a.rows();
    if n == 0 {
        return BigInt::one();
    }
    if n == 1 {
        return a.get(0, 0).clone();
    }
    let mut acc = BigInt::zero();
    for j in 0..n {
        if a.get(0, j).is_zero() {
            continue;
        }
        let minor = IntMatrix::from_fn(n - 1, n - 1, |r, c| {
            a.get(r + 1, if c < j { c } else { c + 1 }).clone()
        });
        let term = a.get(0, j) * det_cofactor(&minor);
        if j % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    acc
}

/// Faddeev-LeVerrier characteristic polynomial, independent of the
/// interpolation path in the library.
pub fn char_poly_leverrier(a: &IntMatrix) -> IntPolynomial {
    let n = a.rows();
    let mut coeffs = vec![BigInt::zero(); n + 1];
    coeffs[n] = BigInt::one();
    let mut mk = IntMatrix::zero(n, n);
    for k in 1..=n {
        let ck1 = coeffs[n - k + 1].clone();
        let shift = IntMatrix::from_fn(
            n,
            n,
            |i, j| {
                if i == j {
                    ck1.clone()
                } else {
                    BigInt::zero()
                }
            },
        );
        mk = &(a * &mk) + &shift;
        let am = a * &mk;
        let trace: BigInt = (0..n).map(|i| am.get(i, i).clone()).sum();
        let (q, r) = num_integer::Integer::div_rem(&(-trace), &BigInt::from(k as i64));
        assert!(r.is_zero(), "Faddeev-LeVerrier division must be exact");
        coeffs[n - k] = q;
    }
    IntPolynomial::from_coeffs(coeffs)
}
