//! Integer partitions of d and the combinatorial coefficients z_π, y_π, plus
//! the star-placement enumeration behind the trace monomials T_π.

use crate::error::{Error, Result};
use crate::linalg::{Letter, Word};

/// Integer partition π = (π_1 ≥ … ≥ π_r) of d.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Partition {
    parts: Vec<u32>,
    d: u32,
}

impl Partition {
    pub fn new(mut parts: Vec<u32>) -> Self {
        assert!(!parts.is_empty() && parts.iter().all(|&p| p > 0));
        parts.sort_unstable_by(|a, b| b.cmp(a));
        let d = parts.iter().sum();
        Partition { parts, d }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn d(&self) -> u32 {
        self.d
    }

    /// Number of parts r = |π|.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Multiplicity m_i of the part i, for i = 1..=d.
    pub fn multiplicity(&self, i: u32) -> u32 {
        self.parts.iter().filter(|&&p| p == i).count() as u32
    }
}

/// All partitions of d in reverse-lexicographic order: (d) first, (1,…,1) last.
pub fn enumerate_partitions(d: u32) -> Result<Vec<Partition>> {
    if !(1..=32).contains(&d) {
        return Err(Error::OutOfRange { what: "d", value: d as f64, lo: 1.0, hi: 32.0 });
    }
    let mut out = Vec::new();
    let mut current: Vec<u32> = Vec::new();
    descend(d, d, &mut current, &mut out);
    Ok(out)
}

fn descend(remaining: u32, max_part: u32, current: &mut Vec<u32>, out: &mut Vec<Partition>) {
    if remaining == 0 {
        out.push(Partition { parts: current.clone(), d: current.iter().sum() });
        return;
    }
    let top = remaining.min(max_part);
    for part in (1..=top).rev() {
        current.push(part);
        descend(remaining - part, part, current, out);
        current.pop();
    }
}

fn factorial(n: u32) -> u128 {
    (1..=n as u128).product()
}

/// z_π = Π_i i^{m_i} · m_i!, the centralizer size of a permutation of cycle
/// type π. Exact in 128-bit arithmetic for d ≤ 32.
pub fn z_coeff(pi: &Partition) -> u128 {
    let mut z: u128 = 1;
    for i in 1..=pi.d() {
        let m = pi.multiplicity(i);
        if m > 0 {
            z *= (i as u128).pow(m) * factorial(m);
        }
    }
    z
}

/// y_π = d! / Π_i (i!)^{m_i} · m_i!, the number of set partitions of a
/// d-element set with block sizes π. Exact for d ≤ 32.
pub fn y_coeff(pi: &Partition) -> u128 {
    let mut denom: u128 = 1;
    for i in 1..=pi.d() {
        let m = pi.multiplicity(i);
        if m > 0 {
            denom *= factorial(i).pow(m) * factorial(m);
        }
    }
    factorial(pi.d()) / denom
}

/// All C(d, d/2) assignments of d/2 adjoint letters among the d slots of π,
/// each returned as the tuple of words (w_1, …, w_r) with |w_j| = π_j.
pub fn star_placements(pi: &Partition) -> Result<Vec<Vec<Word>>> {
    let d = pi.d();
    if d % 2 != 0 {
        return Err(Error::OddDegree(d));
    }
    if d > 12 {
        return Err(Error::DegreeTooLarge(d, 12));
    }
    let half = d / 2;
    let mut out = Vec::new();
    for mask in 0u32..(1 << d) {
        if mask.count_ones() != half {
            continue;
        }
        let mut tuple = Vec::with_capacity(pi.len());
        let mut slot = 0;
        for &part in pi.parts() {
            let letters = (0..part)
                .map(|k| {
                    if mask & (1 << (slot + k)) != 0 {
                        Letter::ZStar
                    } else {
                        Letter::Z
                    }
                })
                .collect();
            slot += part;
            tuple.push(Word::new(letters));
        }
        out.push(tuple);
    }
    Ok(out)
}

/// Binomial coefficient as f64 via exact integer arithmetic (n ≤ 64 or so).
pub fn binomial_u128(n: u32, k: u32) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut num: u128 = 1;
    for i in 0..k {
        num = num * (n - i) as u128 / (i + 1) as u128;
    }
    num
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Bell numbers by the Bell-triangle recurrence — an oracle independent of
    /// the partition enumeration.
    fn bell_numbers(up_to: usize) -> Vec<u128> {
        let mut bell = vec![1u128];
        let mut row = vec![1u128];
        for _ in 1..=up_to {
            let mut next = vec![*row.last().unwrap()];
            for &x in &row {
                next.push(next.last().unwrap() + x);
            }
            bell.push(next[0]);
            row = next;
        }
        bell
    }

    /// Brute-force partition count by naive recursion (independent oracle).
    fn count_partitions(remaining: u32, max_part: u32) -> u64 {
        if remaining == 0 {
            return 1;
        }
        (1..=remaining.min(max_part)).map(|p| count_partitions(remaining - p, p)).sum()
    }

    #[test]
    fn enumerate_d4_reverse_lex() {
        let ps = enumerate_partitions(4).unwrap();
        let expect: Vec<Vec<u32>> =
            vec![vec![4], vec![3, 1], vec![2, 2], vec![2, 1, 1], vec![1, 1, 1, 1]];
        let got: Vec<Vec<u32>> = ps.iter().map(|p| p.parts().to_vec()).collect();
        assert_eq!(got, expect);
    }

    #[test]
    fn enumerate_d1_and_counts() {
        assert_eq!(enumerate_partitions(1).unwrap().len(), 1);
        assert_eq!(enumerate_partitions(10).unwrap().len(), 42);
        for d in 1..=12u32 {
            assert_eq!(
                enumerate_partitions(d).unwrap().len() as u64,
                count_partitions(d, d)
            );
        }
    }

    #[test]
    fn enumerate_rejects_out_of_range() {
        assert!(enumerate_partitions(0).is_err());
        assert!(enumerate_partitions(33).is_err());
    }

    #[test]
    fn z_coeff_examples() {
        assert_eq!(z_coeff(&Partition::new(vec![4, 4, 2, 1, 1, 1])), 384);
        assert_eq!(z_coeff(&Partition::new(vec![1])), 1);
        for d in 1..=8u32 {
            assert_eq!(z_coeff(&Partition::new(vec![d])), d as u128);
        }
    }

    #[test]
    fn y_coeff_examples() {
        assert_eq!(y_coeff(&Partition::new(vec![4, 4, 2, 1, 1, 1])), 450_450);
        assert_eq!(y_coeff(&Partition::new(vec![1; 9])), 1);
        let total: u128 = enumerate_partitions(4).unwrap().iter().map(y_coeff).sum();
        assert_eq!(total, 15);
    }

    #[test]
    fn y_sums_to_bell_numbers() {
        let bell = bell_numbers(12);
        for d in 1..=12u32 {
            let total: u128 = enumerate_partitions(d).unwrap().iter().map(y_coeff).sum();
            assert_eq!(total, bell[d as usize], "d = {d}");
        }
    }

    #[test]
    fn stanley_power_sum_identity() {
        // Σ_{π⊢d} n^{|π|}/z_π = C(n+d−1, d) = h_d(1,…,1).
        for d in 1..=12u32 {
            for n in [1u32, 2, 3, 5] {
                let sum: f64 = enumerate_partitions(d)
                    .unwrap()
                    .iter()
                    .map(|p| (n as f64).powi(p.len() as i32) / z_coeff(p) as f64)
                    .sum();
                let expect = binomial_u128(n + d - 1, d) as f64;
                assert!((sum - expect).abs() <= 1e-10 * expect, "d={d} n={n}");
            }
        }
    }

    #[test]
    fn star_placements_counts_and_shapes() {
        for parts in [vec![2u32], vec![1, 1], vec![3, 1], vec![2, 2], vec![4, 2]] {
            let pi = Partition::new(parts);
            let placements = star_placements(&pi).unwrap();
            let d = pi.d();
            assert_eq!(placements.len() as u128, binomial_u128(d, d / 2));
            for tuple in &placements {
                assert_eq!(tuple.len(), pi.len());
                let stars: usize = tuple
                    .iter()
                    .flat_map(|w| &w.letters)
                    .filter(|&&l| l == Letter::ZStar)
                    .count();
                assert_eq!(stars as u32, d / 2);
                for (w, &p) in tuple.iter().zip(pi.parts()) {
                    assert_eq!(w.letters.len() as u32, p);
                }
            }
        }
    }

    #[test]
    fn star_placements_d2_cases() {
        let single = star_placements(&Partition::new(vec![2])).unwrap();
        assert_eq!(single.len(), 2);
        let pair = star_placements(&Partition::new(vec![1, 1])).unwrap();
        // {(z),(z*)} and {(z*),(z)}
        assert_eq!(pair.len(), 2);
        assert!(pair.iter().any(|t| t[0].letters == vec![Letter::Z]));
        assert!(pair.iter().any(|t| t[0].letters == vec![Letter::ZStar]));
    }

    #[test]
    fn star_placements_rejects_odd_and_large() {
        assert!(matches!(
            star_placements(&Partition::new(vec![3])),
            Err(Error::OddDegree(3))
        ));
        assert!(matches!(
            star_placements(&Partition::new(vec![14])),
            Err(Error::DegreeTooLarge(14, 12))
        ));
    }
}
