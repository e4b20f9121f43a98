//! Theta characteristic counts against direct enumeration of quadratic
//! forms, and fixed odd thetas of a transvection.

use std::time::Instant;

use divfield_core::discriminant::{theta_fixed_count, theta_fixed_count_enumerated};
use divfield_core::symplectic::{theta_count, Parity, SymplecticSpace};

/// Counts quadratic refinements of the standard pairing on `F_2^{2n}` by
/// brute force over all values on the basis, classifying each by the
/// majority value (odd forms take the value 1 more often).
fn count_by_values(n: usize) -> (u64, u64) {
    let dim = 2 * n;
    let pair = |x: usize, y: usize| -> u32 { (0..n).map(|j| ((x >> j) & (y >> (n + j)) & 1) ^ ((x >> (n + j)) & (y >> j) & 1)).fold(0, |a, b| a ^ b) as u32 };
    let (mut odd, mut even) = (0, 0);
    for basis_values in 0usize..(1 << dim) {
        // θ(x) = Σ x_i θ(b_i) + Σ_{i<j} x_i x_j [b_i, b_j].
        let theta = |x: usize| -> u32 {
            let mut v = 0;
            for i in 0..dim {
                if (x >> i) & 1 == 1 {
                    v ^= ((basis_values >> i) & 1) as u32;
                    for j in i + 1..dim {
                        if (x >> j) & 1 == 1 {
                            v ^= pair(1 << i, 1 << j);
                        }
                    }
                }
            }
            v
        };
        let ones = (0..1usize << dim).filter(|&x| theta(x) == 1).count();
        if 2 * ones > 1 << dim {
            odd += 1;
        } else {
            even += 1;
        }
    }
    (odd, even)
}

#[test]
fn counts_match_enumeration() {
    let start = Instant::now();
    let mut cases: Vec<(u32, usize)> = (1..=4).map(|n| (2, n)).collect();
    cases.extend([(4, 1), (4, 2)]);
    for (q, n) in cases {
        let space = SymplecticSpace::new(n, q).unwrap();
        for parity in [Parity::Odd, Parity::Even, Parity::All] {
            let listed = space.enumerate_theta(parity).unwrap().len() as u64;
            assert_eq!(listed, theta_count(q as u64, n as u32, parity), "q={q} n={n} {parity:?}");
        }
    }
    assert!(start.elapsed().as_secs_f64() < 5.0);
}

#[test]
fn counts_match_independent_forms() {
    for n in 1..=3usize {
        let (odd, even) = count_by_values(n);
        assert_eq!(odd, theta_count(2, n as u32, Parity::Odd));
        assert_eq!(even, theta_count(2, n as u32, Parity::Even));
    }
}

#[test]
fn fixed_odd_thetas_of_a_transvection() {
    let start = Instant::now();
    for (q, n) in [(2u64, 1u32), (2, 2), (2, 3), (4, 1), (4, 2)] {
        let closed = q.pow(2 * n - 1) / 2;
        assert_eq!(theta_fixed_count(q, n).unwrap(), closed);
        assert_eq!(theta_fixed_count_enumerated(q, n).unwrap(), closed, "q={q} n={n}");
    }
    assert!(start.elapsed().as_secs_f64() < 10.0);
}
