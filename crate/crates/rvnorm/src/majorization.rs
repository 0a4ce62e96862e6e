//! Majorization machinery behind Schur-convexity of the norm in the spectrum:
//! the majorization predicate, Hardy–Littlewood–Pólya transport matrices,
//! Birkhoff decomposition with an augmenting-path matching subroutine, and a
//! numerical Schur–Ostrowski criterion.

use crate::error::{Error, Result};
use crate::rng::SplitMix64;

/// Threshold below which a matrix entry is treated as a structural zero.
const ZERO_TOL: f64 = 1e-12;

/// Dense doubly stochastic matrix (all rows and columns sum to 1).
#[derive(Clone, Debug)]
pub struct DoublyStochastic {
    pub n: usize,
    /// Row-major entries.
    pub entries: Vec<f64>,
}

impl DoublyStochastic {
    pub fn new(n: usize, entries: Vec<f64>) -> Result<Self> {
        if entries.len() != n * n {
            return Err(Error::LengthMismatch(entries.len(), n * n));
        }
        for (idx, &e) in entries.iter().enumerate() {
            if !(-ZERO_TOL..=1.0 + 1e-9).contains(&e) {
                return Err(Error::BadParameter(format!(
                    "entry {idx} = {e} outside [0, 1]"
                )));
            }
        }
        for i in 0..n {
            let row: f64 = (0..n).map(|j| entries[i * n + j]).sum();
            let col: f64 = (0..n).map(|j| entries[j * n + i]).sum();
            if (row - 1.0).abs() > 1e-10 || (col - 1.0).abs() > 1e-10 {
                return Err(Error::BadParameter(format!(
                    "row/col {i} sums {row}/{col} differ from 1"
                )));
            }
        }
        Ok(DoublyStochastic { n, entries })
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.entries[i * self.n + j]
    }

    pub fn identity(n: usize) -> Self {
        let mut entries = vec![0.0; n * n];
        for i in 0..n {
            entries[i * n + i] = 1.0;
        }
        DoublyStochastic { n, entries }
    }

    pub fn apply(&self, x: &[f64]) -> Vec<f64> {
        (0..self.n)
            .map(|i| (0..self.n).map(|j| self.get(i, j) * x[j]).sum())
            .collect()
    }

    /// Random doubly stochastic matrix: exponentiated Gaussian entries
    /// balanced by 200 Sinkhorn row/column normalization sweeps.
    pub fn random(n: usize, rng: &mut SplitMix64) -> Self {
        let mut entries: Vec<f64> =
            (0..n * n).map(|_| (rng.next_normal()).exp()).collect();
        for _ in 0..200 {
            for i in 0..n {
                let s: f64 = entries[i * n..(i + 1) * n].iter().sum();
                for j in 0..n {
                    entries[i * n + j] /= s;
                }
            }
            for j in 0..n {
                let s: f64 = (0..n).map(|i| entries[i * n + j]).sum();
                for i in 0..n {
                    entries[i * n + j] /= s;
                }
            }
        }
        DoublyStochastic { n, entries }
    }
}

/// One term of a Birkhoff decomposition: weight × permutation, where the
/// permutation matrix has ones at (i, perm[i]).
#[derive(Clone, Debug)]
pub struct PermutationTerm {
    pub weight: f64,
    pub perm: Vec<usize>,
}

/// Convex combination Σ w_k P_k reproducing a doubly stochastic matrix.
#[derive(Clone, Debug)]
pub struct BirkhoffDecomposition {
    pub terms: Vec<PermutationTerm>,
    /// max_{ij} |D_ij − Σ_k w_k (P_k)_ij|.
    pub residual: f64,
}

/// Does x majorize y (y ≺ x)? Both vectors are sorted descending internally;
/// requires all prefix-sum dominances and equal totals.
pub fn majorizes(x: &[f64], y: &[f64]) -> Result<bool> {
    if x.len() != y.len() {
        return Err(Error::LengthMismatch(x.len(), y.len()));
    }
    let mut xs = x.to_vec();
    let mut ys = y.to_vec();
    xs.sort_by(|a, b| b.partial_cmp(a).unwrap());
    ys.sort_by(|a, b| b.partial_cmp(a).unwrap());
    let scale: f64 = 1.0 + xs.iter().chain(ys.iter()).map(|v| v.abs()).sum::<f64>();
    let mut px = 0.0;
    let mut py = 0.0;
    for k in 0..xs.len() {
        px += xs[k];
        py += ys[k];
        if k + 1 < xs.len() && px < py - 1e-12 * scale {
            return Ok(false);
        }
    }
    Ok((px - py).abs() <= 1e-9 * scale)
}

/// Descending sort permutation: returns p with sorted[k] = v[p[k]].
fn sort_perm_desc(v: &[f64]) -> Vec<usize> {
    let mut idx: Vec<usize> = (0..v.len()).collect();
    idx.sort_by(|&a, &b| v[b].partial_cmp(&v[a]).unwrap());
    idx
}

/// n×n matrix product helper (row-major).
fn mat_mul(n: usize, a: &[f64], b: &[f64]) -> Vec<f64> {
    let mut out = vec![0.0; n * n];
    for i in 0..n {
        for k in 0..n {
            let aik = a[i * n + k];
            if aik != 0.0 {
                for j in 0..n {
                    out[i * n + j] += aik * b[k * n + j];
                }
            }
        }
    }
    out
}

/// Hardy–Littlewood–Pólya transport: given y ≺ x, build a doubly stochastic
/// D with Dx = y as a composition of at most n−1 T-transforms (each a convex
/// combination of the identity and one transposition), conjugated by the
/// sorting permutations of x and y.
pub fn hlp_transport(x: &[f64], y: &[f64]) -> Result<DoublyStochastic> {
    if !majorizes(x, y)? {
        return Err(Error::NotMajorized);
    }
    let n = x.len();
    let px = sort_perm_desc(x);
    let py = sort_perm_desc(y);
    let mut cur: Vec<f64> = px.iter().map(|&k| x[k]).collect();
    let target: Vec<f64> = py.iter().map(|&k| y[k]).collect();
    let scale: f64 =
        1.0 + cur.iter().chain(target.iter()).map(|v| v.abs()).sum::<f64>();

    // M accumulates the product of T-transform matrices acting on sorted x.
    let mut m = DoublyStochastic::identity(n).entries;
    for _ in 0..n {
        let Some(i) = (0..n).find(|&k| (cur[k] - target[k]).abs() > 1e-12 * scale)
        else {
            break;
        };
        // Majorization forces cur[i] > target[i]; some later coordinate must
        // sit below its target to absorb the surplus.
        let j = (i + 1..n)
            .find(|&k| cur[k] < target[k] - 1e-12 * scale)
            .ok_or(Error::NotMajorized)?;
        let delta = (cur[i] - target[i]).min(target[j] - cur[j]);
        let t = 1.0 - delta / (cur[i] - cur[j]);
        // T = t·I + (1−t)·(i j); apply to cur and fold into M.
        let (a, b) = (cur[i], cur[j]);
        cur[i] = t * a + (1.0 - t) * b;
        cur[j] = (1.0 - t) * a + t * b;
        let mut tm = DoublyStochastic::identity(n).entries;
        tm[i * n + i] = t;
        tm[j * n + j] = t;
        tm[i * n + j] = 1.0 - t;
        tm[j * n + i] = 1.0 - t;
        m = mat_mul(n, &tm, &m);
    }
    if cur
        .iter()
        .zip(&target)
        .any(|(a, b)| (a - b).abs() > 1e-9 * scale)
    {
        return Err(Error::NotMajorized);
    }
    // D = Q_yᵀ · M · P_x with (P_x)[k][px[k]] = 1 so that D x = y.
    let mut d = vec![0.0; n * n];
    for r in 0..n {
        // Row r of D: y[r] = sorted-target[rank of r in py].
        let k = py.iter().position(|&v| v == r).unwrap();
        for c in 0..n {
            for (s, &pc) in px.iter().enumerate() {
                if pc == c {
                    d[r * n + c] = m[k * n + s];
                }
            }
        }
    }
    DoublyStochastic::new(n, d)
}

/// Find a perfect matching on the support {(i,j): supported} by augmenting
/// paths (Kuhn's algorithm). Returns the image map row → column.
fn support_matching(n: usize, supported: &[bool]) -> Option<Vec<usize>> {
    let mut col_of_row = vec![usize::MAX; n];
    let mut row_of_col = vec![usize::MAX; n];
    fn try_row(
        r: usize,
        n: usize,
        supported: &[bool],
        seen: &mut [bool],
        col_of_row: &mut [usize],
        row_of_col: &mut [usize],
    ) -> bool {
        for c in 0..n {
            if supported[r * n + c] && !seen[c] {
                seen[c] = true;
                if row_of_col[c] == usize::MAX
                    || try_row(row_of_col[c], n, supported, seen, col_of_row, row_of_col)
                {
                    col_of_row[r] = c;
                    row_of_col[c] = r;
                    return true;
                }
            }
        }
        false
    }
    for r in 0..n {
        let mut seen = vec![false; n];
        if !try_row(r, n, supported, &mut seen, &mut col_of_row, &mut row_of_col) {
            return None;
        }
    }
    Some(col_of_row)
}

/// Birkhoff–von Neumann: peel permutation matrices off a doubly stochastic
/// matrix. Each step matches on the positive support and subtracts the
/// minimal matched entry (re-zeroed exactly so the support strictly shrinks);
/// terminates in at most n² − n + 1 terms.
pub fn birkhoff_decompose(s: &DoublyStochastic) -> Result<BirkhoffDecomposition> {
    let n = s.n;
    let mut rem = s.entries.clone();
    let mut terms: Vec<PermutationTerm> = Vec::new();
    for _ in 0..(n * n - n + 1) {
        if rem.iter().all(|&e| e.abs() <= ZERO_TOL) {
            break;
        }
        let supported: Vec<bool> = rem.iter().map(|&e| e > ZERO_TOL).collect();
        let perm = support_matching(n, &supported).ok_or(Error::MatchingNotFound)?;
        let w = (0..n)
            .map(|i| rem[i * n + perm[i]])
            .fold(f64::INFINITY, f64::min);
        for (i, &c) in perm.iter().enumerate() {
            rem[i * n + c] -= w;
            if rem[i * n + c].abs() <= ZERO_TOL {
                rem[i * n + c] = 0.0;
            }
        }
        terms.push(PermutationTerm { weight: w, perm });
    }
    let mut recon = vec![0.0; n * n];
    for term in &terms {
        for (i, &c) in term.perm.iter().enumerate() {
            recon[i * n + c] += term.weight;
        }
    }
    let residual = recon
        .iter()
        .zip(&s.entries)
        .map(|(a, b)| (a - b).abs())
        .fold(0.0, f64::max);
    if residual > 1e-8 {
        return Err(Error::MatchingNotFound);
    }
    Ok(BirkhoffDecomposition { terms, residual })
}

/// Numerical Schur–Ostrowski quantity at a point for one pair (i, j):
/// (x_i − x_j)·(∂f/∂x_i − ∂f/∂x_j) by central differences with step h.
/// Schur convexity requires this to be ≥ 0 (up to discretization) everywhere.
pub fn schur_ostrowski_check<F: Fn(&[f64]) -> f64>(
    f: F,
    x: &[f64],
    i: usize,
    j: usize,
    h: f64,
) -> f64 {
    assert_ne!(i, j);
    let diff = |k: usize| {
        let mut xp = x.to_vec();
        let mut xm = x.to_vec();
        xp[k] += h;
        xm[k] -= h;
        (f(&xp) - f(&xm)) / (2.0 * h)
    };
    (x[i] - x[j]) * (diff(i) - diff(j))
}
