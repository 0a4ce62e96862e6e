//! Dense complex matrix arithmetic, Hermitian eigendecomposition (cyclic
//! Jacobi), Faddeev–LeVerrier characteristic polynomial, and trace words.

use crate::error::{Error, Result};
use crate::rng::SplitMix64;
use num_complex::Complex64;

/// Dense square complex matrix, row-major.
#[derive(Clone, Debug, PartialEq)]
pub struct ComplexMatrix {
    pub n: usize,
    entries: Vec<Complex64>,
}

impl ComplexMatrix {
    /// Build from row-major entries; checks squareness and finiteness.
    pub fn new(n: usize, entries: Vec<Complex64>) -> Result<Self> {
        if n == 0 || entries.len() != n * n {
            return Err(Error::Parse(format!(
                "expected {}x{} = {} entries, got {}",
                n,
                n,
                n * n,
                entries.len()
            )));
        }
        if entries.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
            return Err(Error::Parse("matrix entries must be finite".into()));
        }
        Ok(ComplexMatrix { n, entries })
    }

    pub fn zeros(n: usize) -> Self {
        ComplexMatrix { n, entries: vec![Complex64::new(0.0, 0.0); n * n] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            m[(i, i)] = Complex64::new(1.0, 0.0);
        }
        m
    }

    /// Real diagonal matrix.
    pub fn diag(values: &[f64]) -> Self {
        let mut m = Self::zeros(values.len());
        for (i, &v) in values.iter().enumerate() {
            m[(i, i)] = Complex64::new(v, 0.0);
        }
        m
    }

    pub fn entries(&self) -> &[Complex64] {
        &self.entries
    }

    /// Conjugate transpose Z*.
    pub fn adjoint(&self) -> Self {
        let mut out = Self::zeros(self.n);
        for i in 0..self.n {
            for j in 0..self.n {
                out[(j, i)] = self[(i, j)].conj();
            }
        }
        out
    }

    pub fn trace(&self) -> Complex64 {
        (0..self.n).map(|i| self[(i, i)]).sum()
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.entries.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    pub fn scale(&self, c: Complex64) -> Self {
        ComplexMatrix { n: self.n, entries: self.entries.iter().map(|z| z * c).collect() }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n);
        ComplexMatrix {
            n: self.n,
            entries: self.entries.iter().zip(&other.entries).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n);
        ComplexMatrix {
            n: self.n,
            entries: self.entries.iter().zip(&other.entries).map(|(a, b)| a - b).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n);
        let n = self.n;
        let mut out = Self::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = self[(i, k)];
                if a == Complex64::new(0.0, 0.0) {
                    continue;
                }
                for j in 0..n {
                    out[(i, j)] += a * other[(k, j)];
                }
            }
        }
        out
    }

    /// Matrix–vector product.
    pub fn matvec(&self, v: &[Complex64]) -> Vec<Complex64> {
        assert_eq!(self.n, v.len());
        (0..self.n)
            .map(|i| (0..self.n).map(|j| self[(i, j)] * v[j]).sum())
            .collect()
    }

    /// Largest entry magnitude.
    pub fn max_abs(&self) -> f64 {
        self.entries.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }
}

impl std::ops::Index<(usize, usize)> for ComplexMatrix {
    type Output = Complex64;
    fn index(&self, (i, j): (usize, usize)) -> &Complex64 {
        &self.entries[i * self.n + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for ComplexMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Complex64 {
        &mut self.entries[i * self.n + j]
    }
}

/// Hermitian matrix: validated at construction, then symmetrized exactly.
#[derive(Clone, Debug)]
pub struct HermitianMatrix {
    mat: ComplexMatrix,
    /// max |a_ij − conj(a_ji)| observed before symmetrization.
    pub defect: f64,
}

impl HermitianMatrix {
    /// Accepts matrices with Hermiticity defect ≤ 1e-12·max(1, max|a_ij|);
    /// stores a_ij ← (a_ij + conj(a_ji))/2 so the invariant holds exactly.
    pub fn new(mut m: ComplexMatrix) -> Result<Self> {
        let n = m.n;
        let scale = f64::max(1.0, m.max_abs());
        let mut defect: f64 = 0.0;
        for i in 0..n {
            for j in 0..n {
                defect = defect.max((m[(i, j)] - m[(j, i)].conj()).norm());
            }
        }
        if defect > 1e-12 * scale {
            return Err(Error::Parse(format!(
                "matrix is not Hermitian (defect {defect:.3e} vs scale {scale:.3e})"
            )));
        }
        for i in 0..n {
            m[(i, i)] = Complex64::new(m[(i, i)].re, 0.0);
            for j in (i + 1)..n {
                let avg = (m[(i, j)] + m[(j, i)].conj()) * 0.5;
                m[(i, j)] = avg;
                m[(j, i)] = avg.conj();
            }
        }
        Ok(HermitianMatrix { mat: m, defect })
    }

    /// Real symmetric input.
    pub fn from_real(n: usize, rows: &[f64]) -> Result<Self> {
        let entries = rows.iter().map(|&x| Complex64::new(x, 0.0)).collect();
        Self::new(ComplexMatrix::new(n, entries)?)
    }

    pub fn from_diag(values: &[f64]) -> Self {
        HermitianMatrix { mat: ComplexMatrix::diag(values), defect: 0.0 }
    }

    pub fn n(&self) -> usize {
        self.mat.n
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.mat
    }

    pub fn trace_re(&self) -> f64 {
        self.mat.trace().re
    }
}

/// Eigenvalues of a Hermitian matrix, nonincreasing, with a residual diagnostic.
#[derive(Clone, Debug)]
pub struct Spectrum {
    /// λ_1 ≥ λ_2 ≥ … ≥ λ_n.
    pub eigenvalues: Vec<f64>,
    /// max_i ‖A v_i − λ_i v_i‖₂ over the computed eigenpairs.
    pub residual: f64,
}

/// Letter of a trace word: the matrix or its adjoint.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Letter {
    Z,
    ZStar,
}

/// Word over {z, z*}; evaluated by multiplying the letters in order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Word {
    pub letters: Vec<Letter>,
}

impl Word {
    pub fn new(letters: Vec<Letter>) -> Self {
        assert!(!letters.is_empty(), "word must have length >= 1");
        Word { letters }
    }
}

const MAX_SWEEPS: usize = 30;

/// Hermitian eigendecomposition by cyclic Jacobi rotations.
///
/// Each sweep visits every off-diagonal pair (p, q) and applies the unitary
/// rotation that zeroes a_pq; convergence is quadratic once the off-diagonal
/// mass is small. Eigenvectors are accumulated only to report the residual.
pub fn eig_hermitian(a: &HermitianMatrix) -> Result<Spectrum> {
    let n = a.n();
    let mut m = a.matrix().clone();
    let mut v = ComplexMatrix::identity(n);
    let fro = m.frobenius_norm();
    let tol = 1e-14 * (1.0 + fro);

    let off = |m: &ComplexMatrix| -> f64 {
        let mut s = 0.0;
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    s += m[(i, j)].norm_sqr();
                }
            }
        }
        s.sqrt()
    };

    let mut converged = false;
    for _ in 0..MAX_SWEEPS {
        if off(&m) <= tol {
            converged = true;
            break;
        }
        for p in 0..n {
            for q in (p + 1)..n {
                let apq = m[(p, q)];
                let r = apq.norm();
                if r <= tol / (n as f64) {
                    continue;
                }
                let phase = apq / r;
                let app = m[(p, p)].re;
                let aqq = m[(q, q)].re;
                let theta = (aqq - app) / (2.0 * r);
                let t = if theta >= 0.0 {
                    1.0 / (theta + (1.0 + theta * theta).sqrt())
                } else {
                    -1.0 / (-theta + (1.0 + theta * theta).sqrt())
                };
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = phase * (t * c);

                // A ← J* A J with J[p][p]=c, J[p][q]=s, J[q][p]=−conj(s), J[q][q]=c.
                for i in 0..n {
                    let mip = m[(i, p)];
                    let miq = m[(i, q)];
                    m[(i, p)] = mip * c - miq * s.conj();
                    m[(i, q)] = mip * s + miq * c;
                }
                for j in 0..n {
                    let mpj = m[(p, j)];
                    let mqj = m[(q, j)];
                    m[(p, j)] = mpj * c - mqj * s;
                    m[(q, j)] = mpj * s.conj() + mqj * c;
                }
                m[(p, q)] = Complex64::new(0.0, 0.0);
                m[(q, p)] = Complex64::new(0.0, 0.0);
                m[(p, p)] = Complex64::new(m[(p, p)].re, 0.0);
                m[(q, q)] = Complex64::new(m[(q, q)].re, 0.0);

                for i in 0..n {
                    let vip = v[(i, p)];
                    let viq = v[(i, q)];
                    v[(i, p)] = vip * c - viq * s.conj();
                    v[(i, q)] = vip * s + viq * c;
                }
            }
        }
    }
    if !converged && off(&m) > tol {
        return Err(Error::NonConvergence { sweeps: MAX_SWEEPS, offdiag: off(&m) });
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| m[(j, j)].re.partial_cmp(&m[(i, i)].re).unwrap());
    let eigenvalues: Vec<f64> = order.iter().map(|&i| m[(i, i)].re).collect();

    let mut residual: f64 = 0.0;
    for (rank, &col) in order.iter().enumerate() {
        let vec: Vec<Complex64> = (0..n).map(|i| v[(i, col)]).collect();
        let av = a.matrix().matvec(&vec);
        let lam = eigenvalues[rank];
        let r2: f64 = av
            .iter()
            .zip(&vec)
            .map(|(aw, w)| (aw - w * lam).norm_sqr())
            .sum();
        residual = residual.max(r2.sqrt());
    }
    Ok(Spectrum { eigenvalues, residual })
}

/// Coefficients of det(xI − A), ascending (c_0, …, c_n) with c_n = 1, by the
/// Faddeev–LeVerrier trace recursion.
pub fn char_poly(a: &ComplexMatrix) -> Vec<Complex64> {
    let n = a.n;
    let mut coeffs = vec![Complex64::new(0.0, 0.0); n + 1];
    coeffs[n] = Complex64::new(1.0, 0.0);
    let mut m = a.clone(); // M_1 = A
    for k in 1..=n {
        let c = -m.trace() / (k as f64); // coefficient of x^{n−k}
        coeffs[n - k] = c;
        if k < n {
            let mut shifted = m.clone();
            for i in 0..n {
                shifted[(i, i)] += c;
            }
            m = a.mul(&shifted);
        }
    }
    coeffs
}

/// Characteristic polynomial of a Hermitian matrix: real coefficients
/// (imaginary round-off is discarded).
pub fn char_poly_real(a: &HermitianMatrix) -> Vec<f64> {
    char_poly(a.matrix()).iter().map(|c| c.re).collect()
}

/// tr(w(Z)) where each letter multiplies Z or Z* in order.
pub fn trace_word(z: &ComplexMatrix, w: &Word) -> Complex64 {
    let zs = z.adjoint();
    let mut prod: Option<ComplexMatrix> = None;
    for letter in &w.letters {
        let factor = match letter {
            Letter::Z => z,
            Letter::ZStar => &zs,
        };
        prod = Some(match prod {
            None => factor.clone(),
            Some(p) => p.mul(factor),
        });
    }
    prod.unwrap().trace()
}

/// tr(A^1), …, tr(A^d) by repeated multiplication.
pub fn power_traces(a: &HermitianMatrix, d: usize) -> Vec<f64> {
    assert!(d >= 1);
    let mut out = Vec::with_capacity(d);
    let base = a.matrix();
    let mut p = base.clone();
    out.push(p.trace().re);
    for _ in 1..d {
        p = p.mul(base);
        out.push(p.trace().re);
    }
    out
}

/// Power traces of an arbitrary complex matrix (complex-valued).
pub fn power_traces_complex(z: &ComplexMatrix, d: usize) -> Vec<Complex64> {
    assert!(d >= 1);
    let mut out = Vec::with_capacity(d);
    let mut p = z.clone();
    out.push(p.trace());
    for _ in 1..d {
        p = p.mul(z);
        out.push(p.trace());
    }
    out
}

/// Random matrix with i.i.d. standard-normal real and imaginary parts.
pub fn random_complex(n: usize, rng: &mut SplitMix64) -> ComplexMatrix {
    let entries = (0..n * n)
        .map(|_| Complex64::new(rng.next_normal(), rng.next_normal()))
        .collect();
    ComplexMatrix { n, entries }
}

/// Random Hermitian matrix: (G + G*)/2 for Ginibre G.
pub fn random_hermitian(n: usize, rng: &mut SplitMix64) -> HermitianMatrix {
    let g = random_complex(n, rng);
    let h = g.add(&g.adjoint()).scale(Complex64::new(0.5, 0.0));
    HermitianMatrix::new(h).expect("construction is Hermitian by symmetrization")
}

/// Haar-ish random unitary: modified Gram–Schmidt QR of a Ginibre matrix.
pub fn random_unitary(n: usize, rng: &mut SplitMix64) -> ComplexMatrix {
    let g = random_complex(n, rng);
    let mut cols: Vec<Vec<Complex64>> = (0..n)
        .map(|j| (0..n).map(|i| g[(i, j)]).collect())
        .collect();
    for j in 0..n {
        for k in 0..j {
            let proj: Complex64 = (0..n).map(|i| cols[k][i].conj() * cols[j][i]).sum();
            for i in 0..n {
                let c = cols[k][i];
                cols[j][i] -= proj * c;
            }
        }
        let norm: f64 = cols[j].iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        for i in 0..n {
            cols[j][i] /= norm;
        }
    }
    let mut u = ComplexMatrix::zeros(n);
    for j in 0..n {
        for i in 0..n {
            u[(i, j)] = cols[j][i];
        }
    }
    u
}
