//! Complete-homogeneous-symmetric norm specializations:
//! ‖A‖_d = h_d(λ(A))^{1/d}, its characteristic-polynomial and Newton–Girard
//! evaluations, the determinant-series method on M_n, generalized Hunter
//! polynomials, equivalence constants, and the inner-product defect.

use crate::distributions::DistributionSpec;
use crate::error::{Error, Result};
use crate::hnorm::norm_bell;
use crate::linalg::{char_poly, eig_hermitian, power_traces, ComplexMatrix, HermitianMatrix};
use crate::partitions::{binomial_u128, enumerate_partitions};
use crate::symfun::{chs_from_power_sums, TruncatedSeries};
use num_complex::Complex64;

/// Parameters of a CHS-norm evaluation: even degree d and the generalized
/// Hunter order α (α = 1 is the plain CHS polynomial h_d).
#[derive(Clone, Copy, Debug)]
pub struct ChsNormRequest {
    pub d: u32,
    pub alpha: u32,
}

impl ChsNormRequest {
    pub fn new(d: u32, alpha: u32) -> Result<Self> {
        if d % 2 != 0 || d == 0 {
            return Err(Error::OddDegree(d));
        }
        if alpha == 0 {
            return Err(Error::BadParameter("alpha must be >= 1".into()));
        }
        Ok(ChsNormRequest { d, alpha })
    }
}

/// The distribution whose random vector norm is exactly h_d^{1/d}:
/// Gamma(1, (d!)^{−1/d}).
pub fn chs_spec(d: u32) -> DistributionSpec {
    let d_fact: f64 = (1..=d as u64).map(|k| k as f64).product();
    DistributionSpec::Gamma { alpha: 1.0, beta: d_fact.powf(-1.0 / d as f64) }
}

fn check_even(d: u32, max: u32) -> Result<()> {
    if d % 2 != 0 || d == 0 {
        return Err(Error::OddDegree(d));
    }
    if d > max {
        return Err(Error::DegreeTooLarge(d, max));
    }
    Ok(())
}

/// ‖A‖_d via Thm of the characteristic polynomial: h_d(λ) is the coefficient
/// of x^d in 1/(xⁿ p_A(1/x)) — no eigendecomposition.
pub fn chs_norm_charpoly(a: &HermitianMatrix, d: u32) -> Result<f64> {
    check_even(d, 32)?;
    let n = a.n();
    let coeffs = char_poly(a.matrix()); // c_0..c_n ascending, det(xI − A)
    // Reversed polynomial xⁿ p_A(1/x) = Σ_j c_{n−j} x^j; constant term is 1.
    let mut q = TruncatedSeries::zero(d as usize);
    for j in 0..=(d as usize) {
        if j <= n {
            q.set_coeff(j, coeffs[n - j].re);
        }
    }
    let h = q.recip()?.coeff(d as usize);
    Ok(h.max(0.0).powf(1.0 / d as f64))
}

/// ‖A‖_d via the Newton–Girard recursion k·h_k = Σ h_{k−i} tr(A^i).
pub fn chs_norm_recursive(a: &HermitianMatrix, d: u32) -> Result<f64> {
    check_even(d, 32)?;
    let traces = power_traces(a, d as usize);
    let h = chs_from_power_sums(d as usize, &traces);
    Ok(h[d as usize].max(0.0).powf(1.0 / d as f64))
}

/// Truncated bivariate series in (z, z̄): coefficients c[j][k] of z^j z̄^k for
/// j ≤ jmax, k ≤ kmax. The rectangle is closed under the ring operations.
#[derive(Clone, Debug)]
struct Bivariate {
    jmax: usize,
    kmax: usize,
    c: Vec<Complex64>, // (jmax+1) × (kmax+1), row-major in j
}

impl Bivariate {
    fn zero(jmax: usize, kmax: usize) -> Self {
        Bivariate { jmax, kmax, c: vec![Complex64::new(0.0, 0.0); (jmax + 1) * (kmax + 1)] }
    }

    fn one(jmax: usize, kmax: usize) -> Self {
        let mut s = Self::zero(jmax, kmax);
        s.c[0] = Complex64::new(1.0, 0.0);
        s
    }

    fn get(&self, j: usize, k: usize) -> Complex64 {
        self.c[j * (self.kmax + 1) + k]
    }

    fn set(&mut self, j: usize, k: usize, v: Complex64) {
        self.c[j * (self.kmax + 1) + k] = v;
    }

    fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (a, b) in out.c.iter_mut().zip(&other.c) {
            *a += b;
        }
        out
    }

    fn scale(&self, s: Complex64) -> Self {
        let mut out = self.clone();
        for a in &mut out.c {
            *a *= s;
        }
        out
    }

    fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero(self.jmax, self.kmax);
        for j1 in 0..=self.jmax {
            for k1 in 0..=self.kmax {
                let a = self.get(j1, k1);
                if a == Complex64::new(0.0, 0.0) {
                    continue;
                }
                for j2 in 0..=(self.jmax - j1) {
                    for k2 in 0..=(self.kmax - k1) {
                        let b = other.get(j2, k2);
                        if b != Complex64::new(0.0, 0.0) {
                            let cur = out.get(j1 + j2, k1 + k2);
                            out.set(j1 + j2, k1 + k2, cur + a * b);
                        }
                    }
                }
            }
        }
        out
    }

    /// Reciprocal; requires a nonzero constant term. The (j, k) coefficient
    /// depends only on componentwise-smaller indices, so the rectangle closes.
    fn recip(&self) -> Result<Self> {
        let c00 = self.get(0, 0);
        if c00 == Complex64::new(0.0, 0.0) {
            return Err(Error::DivisionByZeroConstantTerm);
        }
        let mut b = Self::zero(self.jmax, self.kmax);
        b.set(0, 0, Complex64::new(1.0, 0.0) / c00);
        for j in 0..=self.jmax {
            for k in 0..=self.kmax {
                if j == 0 && k == 0 {
                    continue;
                }
                let mut s = Complex64::new(0.0, 0.0);
                for a in 0..=j {
                    for bb in 0..=k {
                        if a == 0 && bb == 0 {
                            continue;
                        }
                        s += self.get(a, bb) * b.get(j - a, k - bb);
                    }
                }
                b.set(j, k, -s / c00);
            }
        }
        Ok(b)
    }
}

/// ⦀Z⦀_d for the CHS norm via the determinant series:
/// C(d,d/2)·⦀Z⦀_d^d = [z^{d/2} z̄^{d/2}] det(I − zZ − z̄Z*)^{−1}.
/// The determinant of the pencil is expanded by Faddeev–LeVerrier with
/// bivariate-series scalars.
pub fn chs_cnorm_det_series(z: &ComplexMatrix, d: u32) -> Result<f64> {
    check_even(d, 12)?;
    let half = (d / 2) as usize;
    let n = z.n;
    let zs = z.adjoint();

    // Pencil B = zZ + z̄Z* as a matrix of bivariate series.
    let entry = |i: usize, j: usize| -> Bivariate {
        let mut e = Bivariate::zero(half, half);
        if half >= 1 {
            e.set(1, 0, z[(i, j)]);
            e.set(0, 1, zs[(i, j)]);
        }
        e
    };
    let pencil: Vec<Vec<Bivariate>> =
        (0..n).map(|i| (0..n).map(|j| entry(i, j)).collect()).collect();

    let mat_mul = |a: &[Vec<Bivariate>], b: &[Vec<Bivariate>]| -> Vec<Vec<Bivariate>> {
        (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        let mut s = Bivariate::zero(half, half);
                        for k in 0..n {
                            s = s.add(&a[i][k].mul(&b[k][j]));
                        }
                        s
                    })
                    .collect()
            })
            .collect()
    };
    let mat_trace = |a: &[Vec<Bivariate>]| -> Bivariate {
        let mut t = Bivariate::zero(half, half);
        for i in 0..n {
            t = t.add(&a[i][i]);
        }
        t
    };

    // Faddeev–LeVerrier: char-poly coefficients of B (as series scalars);
    // det(I − B) = Σ_k c_k with c_0 = 1 after evaluating det(xI − B) at x = 1
    // and absorbing signs into the recursion.
    let mut det = Bivariate::one(half, half); // running Σ c_k, starts at c_0 = 1
    let mut m = pencil.clone(); // M_1 = B
    let mut c_prev;
    for k in 1..=n {
        let c_k = mat_trace(&m).scale(Complex64::new(-1.0 / k as f64, 0.0));
        det = det.add(&c_k);
        c_prev = c_k;
        if k < n {
            // M_{k+1} = B (M_k + c_k I)
            let mut shifted = m.clone();
            for i in 0..n {
                shifted[i][i] = shifted[i][i].add(&c_prev);
            }
            m = mat_mul(&pencil, &shifted);
        }
    }

    let series = det.recip()?;
    let coeff = series.get(half, half);
    let binom = binomial_u128(d, d / 2) as f64;
    let interior = coeff.re / binom;
    if coeff.im.abs() > 1e-9 * (1.0 + coeff.re.abs()) {
        return Err(Error::NegativeInterior(coeff.im));
    }
    Ok(interior.max(0.0).powf(1.0 / d as f64))
}

/// Generalized Hunter polynomial H_{d,α}(x) = Σ_{π⊢d, |π|≤α} c_π Π_j h_{π_j}(x),
/// with c_π = α!/((α−r)! Π_i m_i!).
pub fn generalized_hunter(x: &[f64], d: u32, alpha: u32) -> Result<f64> {
    check_even(d, 32)?;
    if alpha == 0 {
        return Err(Error::BadParameter("alpha must be >= 1".into()));
    }
    let p: Vec<f64> = (1..=d).map(|k| crate::symfun::power_sum(k, x)).collect();
    let h = chs_from_power_sums(d as usize, &p);
    let mut total = 0.0;
    for pi in enumerate_partitions(d)? {
        let r = pi.len() as u32;
        if r > alpha {
            continue;
        }
        // c_π = α (α−1) … (α−r+1) / Π m_i!
        let mut c = 1.0;
        for i in 0..r {
            c *= (alpha - i) as f64;
        }
        for i in 1..=d {
            let m = pi.multiplicity(i);
            if m > 1 {
                c /= (1..=m as u64).map(|v| v as f64).product::<f64>();
            }
        }
        let prod: f64 = pi.parts().iter().map(|&j| h[j as usize]).product();
        total += c * prod;
    }
    Ok(total)
}

/// H_{d,α} by the recursion H_{d,α} = Σ_{i=0}^{d} h_i · H_{d−i,α−1}
/// with h_0 = 1, H_{0,0} = 1, H_{m,0} = 0 for m > 0; retained as a cross-check.
pub fn generalized_hunter_recursive(x: &[f64], d: u32, alpha: u32) -> Result<f64> {
    check_even(d, 32)?;
    let p: Vec<f64> = (1..=d).map(|k| crate::symfun::power_sum(k, x)).collect();
    let h = chs_from_power_sums(d as usize, &p);
    // table[a][m] = H_{m,a}
    let dm = d as usize;
    let am = alpha as usize;
    let mut table = vec![vec![0.0; dm + 1]; am + 1];
    table[0][0] = 1.0;
    for a in 1..=am {
        for m in 0..=dm {
            // i = 0 contributes h_0 · H_{m,a−1} = table[a−1][m].
            let mut s = table[a - 1][m];
            for i in 1..=m {
                s += h[i] * table[a - 1][m - i];
            }
            table[a][m] = s;
        }
    }
    Ok(table[am][dm])
}

/// Hunter/Tao equivalence sandwich for the CHS norm:
/// (2^{d/2}(d/2)!)^{−1/d}·σ_max ≤ ‖A‖_d ≤ C(n+d−1, d)^{1/d}·σ_max.
pub fn equivalence_bounds(a: &HermitianMatrix, d: u32) -> Result<(f64, f64, f64)> {
    check_even(d, 32)?;
    let value = chs_norm_recursive(a, d)?;
    let spectrum = eig_hermitian(a)?;
    let sigma_max = spectrum.eigenvalues.iter().fold(0.0f64, |m, &l| m.max(l.abs()));
    let half = (d / 2) as u64;
    let lower_const = 1.0
        / (2f64.powi((d / 2) as i32) * (1..=half).map(|k| k as f64).product::<f64>())
            .powf(1.0 / d as f64);
    let upper_const =
        (binomial_u128(a.n() as u32 + d - 1, d) as f64).powf(1.0 / d as f64);
    Ok((lower_const * sigma_max, value, upper_const * sigma_max))
}

/// Baston's improvement constant γ_p for n variables:
/// γ_p = n^{−p}·(C(n+2p−1, 2p)·n^{−p} − (2^p p!)^{−1}).
pub fn baston_gamma(n: usize, p: u32) -> f64 {
    let np = (n as f64).powi(p as i32);
    let binom = binomial_u128((n as u32) + 2 * p - 1, 2 * p) as f64;
    let fact = 2f64.powi(p as i32) * (1..=p as u64).map(|k| k as f64).product::<f64>();
    (binom / np - 1.0 / fact) / np
}

/// Parallelogram defect ‖A+B‖² + ‖A−B‖² − 2(‖A‖² + ‖B‖²) for the random
/// vector norm of `spec` at even degree d (deterministic Bell pathway).
pub fn parallelogram_defect(
    spec: &DistributionSpec,
    d: u32,
    a: &HermitianMatrix,
    b: &HermitianMatrix,
) -> Result<f64> {
    let sum = HermitianMatrix::new(a.matrix().add(b.matrix()))?;
    let diff = HermitianMatrix::new(a.matrix().sub(b.matrix()))?;
    let n = |m: &HermitianMatrix| -> Result<f64> { Ok(norm_bell(m, spec, d)?.value) };
    Ok(n(&sum)?.powi(2) + n(&diff)?.powi(2) - 2.0 * (n(a)?.powi(2) + n(b)?.powi(2)))
}

/// Geometric-series oracle for h_d from the characteristic polynomial:
/// 1/p̃(x) = Σ_k (1 − p̃(x))^k, expanded to degree d. Slow; test use only.
pub fn chs_geometric_series_oracle(a: &HermitianMatrix, d: u32) -> Result<f64> {
    check_even(d, 12)?;
    let n = a.n();
    let coeffs = char_poly(a.matrix());
    let mut q = TruncatedSeries::zero(d as usize);
    for j in 0..=(d as usize) {
        if j <= n {
            q.set_coeff(j, coeffs[n - j].re);
        }
    }
    // u = 1 − p̃(x) has zero constant term; Σ_{k=0}^{d} u^k suffices.
    let mut u = q.clone();
    u.set_coeff(0, 1.0 - q.coeff(0));
    for j in 1..=(d as usize) {
        u.set_coeff(j, -q.coeff(j));
    }
    let mut total = TruncatedSeries::one(d as usize);
    let mut upow = TruncatedSeries::one(d as usize);
    for _ in 1..=(d as usize) {
        upow = upow.mul(&u);
        total = total.add(&upow);
    }
    Ok(total.coeff(d as usize).max(0.0).powf(1.0 / d as f64))
}
