//! Property suites shared by the CLI `verify` subcommand and the acceptance
//! tests: norm axioms, Schur-convexity, bound checks, cross-method oracles,
//! golden CHS values, and Birkhoff/HLP round trips.

use crate::bounds;
use crate::chs;
use crate::cxnorm::{central_binomial, cnorm_quadrature, cnorm_trace_poly, default_nodes};
use crate::distributions::DistributionSpec;
use crate::error::Result;
use crate::hnorm::{norm_bell, norm_mgf_coeff, norm_monte_carlo, norm_partition_sum};
use crate::linalg::{
    random_complex, random_hermitian, random_unitary, ComplexMatrix, HermitianMatrix,
};
use crate::majorization::{birkhoff_decompose, hlp_transport, DoublyStochastic};
use crate::rng::SplitMix64;
use num_complex::Complex64;
use serde::Serialize;

/// One verification result row.
#[derive(Clone, Debug, Serialize)]
pub struct CheckRow {
    pub suite: &'static str,
    pub name: String,
    pub detail: String,
    pub pass: bool,
}

impl CheckRow {
    fn new(suite: &'static str, name: impl Into<String>, pass: bool, detail: String) -> Self {
        CheckRow { suite, name: name.into(), detail, pass }
    }
}

/// Standing list of distribution families used by property suites.
pub fn standard_families() -> Vec<DistributionSpec> {
    vec![
        DistributionSpec::Exponential,
        DistributionSpec::Gamma { alpha: 2.0, beta: 0.7 },
        DistributionSpec::Normal { mu: 1.0, sigma2: 1.0 },
        DistributionSpec::Poisson { alpha: 1.3 },
        DistributionSpec::Bernoulli { q: 0.3 },
        DistributionSpec::Rademacher,
        DistributionSpec::Uniform { a: -1.0, b: 2.0 },
        DistributionSpec::Laplace { mu: 0.5, beta: 1.0 },
        DistributionSpec::FiniteDiscrete {
            values: vec![-2.0, 0.0, 1.0],
            probs: vec![0.25, 0.25, 0.5],
        },
    ]
}

/// Norm axioms on ⦀·⦀_{X,d} (and its Hermitian restriction): absolute
/// homogeneity, triangle inequality, positive definiteness, weak unitary
/// invariance, and ⦀A⦀ = ‖A‖ for Hermitian A.
pub fn suite_axioms(
    spec: &DistributionSpec,
    d: u32,
    trials: usize,
    seed: u64,
) -> Result<Vec<CheckRow>> {
    let mut rng = SplitMix64::new(seed);
    let mut worst_hom = 0.0f64;
    let mut worst_tri = f64::INFINITY;
    let mut worst_pd = f64::INFINITY;
    let mut worst_unit = 0.0f64;
    let mut worst_restrict = 0.0f64;
    for _ in 0..trials {
        let n = 2 + (rng.next_u64() % 3) as usize;
        let z1 = random_complex(n, &mut rng);
        let z2 = random_complex(n, &mut rng);
        let n1 = cnorm_trace_poly(&z1, spec, d)?.value;
        let n2 = cnorm_trace_poly(&z2, spec, d)?.value;

        // |c|-homogeneity (complex scalar).
        let c = Complex64::new(rng.next_normal(), rng.next_normal());
        let nc = cnorm_trace_poly(&z1.scale(c), spec, d)?.value;
        worst_hom = worst_hom.max((nc - c.norm() * n1).abs() / (1.0 + n1));

        // Triangle inequality.
        let ns = cnorm_trace_poly(&z1.add(&z2), spec, d)?.value;
        worst_tri = worst_tri.min((n1 + n2 - ns) / (1.0 + n1 + n2));

        // Positive definiteness at unit Frobenius norm.
        let unit = z1.scale(Complex64::new(1.0 / z1.frobenius_norm(), 0.0));
        worst_pd = worst_pd.min(cnorm_trace_poly(&unit, spec, d)?.value);

        // Weak unitary invariance of the Hermitian norm.
        let a = random_hermitian(n, &mut rng);
        let u = random_unitary(n, &mut rng);
        let conj = HermitianMatrix::new(u.adjoint().mul(a.matrix()).mul(&u))?;
        let na = norm_bell(&a, spec, d)?.value;
        let nconj = norm_bell(&conj, spec, d)?.value;
        worst_unit = worst_unit.max((na - nconj).abs() / (1.0 + na));

        // Restriction: ⦀A⦀ = ‖A‖ on H_n.
        let ca = cnorm_trace_poly(a.matrix(), spec, d)?.value;
        worst_restrict = worst_restrict.max((ca - na).abs() / (1.0 + na));
    }
    Ok(vec![
        CheckRow::new("axioms", "homogeneity", worst_hom <= 1e-10, format!("worst {worst_hom:.3e}")),
        CheckRow::new("axioms", "triangle", worst_tri >= -1e-9, format!("worst slack {worst_tri:.3e}")),
        CheckRow::new("axioms", "positive_definite", worst_pd >= 1e-6, format!("min value {worst_pd:.3e}")),
        CheckRow::new("axioms", "unitary_invariance", worst_unit <= 1e-9, format!("worst {worst_unit:.3e}")),
        CheckRow::new("axioms", "hermitian_restriction", worst_restrict <= 1e-9, format!("worst {worst_restrict:.3e}")),
    ])
}

/// Schur-convexity in the spectrum via generated majorization pairs, plus the
/// Ky Fan eigenvalue majorization.
pub fn suite_schur(
    spec: &DistributionSpec,
    d: u32,
    trials: usize,
    seed: u64,
) -> Result<Vec<CheckRow>> {
    let mut rng = SplitMix64::new(seed);
    let mut worst = f64::INFINITY;
    let mut kyfan_ok = true;
    for _ in 0..trials {
        let n = 2 + (rng.next_u64() % 3) as usize;
        let mu: Vec<f64> = (0..n).map(|_| rng.next_normal()).collect();
        let s = DoublyStochastic::random(n, &mut rng);
        let lam = s.apply(&mu); // λ ≺ μ
        let nl = norm_bell(&HermitianMatrix::from_diag(&lam), spec, d)?.value;
        let nm = norm_bell(&HermitianMatrix::from_diag(&mu), spec, d)?.value;
        worst = worst.min((nm - nl) / (1.0 + nm));

        let a = random_hermitian(n, &mut rng);
        let b = random_hermitian(n, &mut rng);
        let sum = HermitianMatrix::new(a.matrix().add(b.matrix()))?;
        let mut la = crate::linalg::eig_hermitian(&a)?.eigenvalues;
        let mut lb = crate::linalg::eig_hermitian(&b)?.eigenvalues;
        let ls = crate::linalg::eig_hermitian(&sum)?.eigenvalues;
        la.sort_by(|p, q| q.partial_cmp(p).unwrap());
        lb.sort_by(|p, q| q.partial_cmp(p).unwrap());
        let lab: Vec<f64> = la.iter().zip(&lb).map(|(p, q)| p + q).collect();
        kyfan_ok &= crate::majorization::majorizes(&lab, &ls)?;
    }
    Ok(vec![
        CheckRow::new("schur", "schur_convexity", worst >= -1e-9, format!("worst slack {worst:.3e}")),
        CheckRow::new("schur", "ky_fan_majorization", kyfan_ok, format!("{trials} pairs")),
    ])
}

/// Bound suite: trace lower bound, Schatten upper bound, Frobenius sandwich
/// (on a centered stand-in when `spec` is not centered), d ↔ 2 comparison,
/// binomial monotonicity, and the CHS Hunter bound.
pub fn suite_bounds(
    spec: &DistributionSpec,
    d: u32,
    trials: usize,
    seed: u64,
) -> Result<Vec<CheckRow>> {
    let mut rng = SplitMix64::new(seed);
    let centered = if spec.mean().abs() <= 1e-12 {
        spec.clone()
    } else {
        DistributionSpec::Normal { mu: 0.0, sigma2: 1.0 }
    };
    let mut rows: Vec<(&'static str, bool, f64)> = vec![
        ("trace_lower_bound", true, f64::INFINITY),
        ("schatten_upper_bound", true, f64::INFINITY),
        ("frobenius_sandwich", true, f64::INFINITY),
        ("main_ineq_lower", true, f64::INFINITY),
        ("binomial_monotone", true, f64::INFINITY),
        ("hunter_frobenius_lower", true, f64::INFINITY),
    ];
    for _ in 0..trials {
        let n = 2 + (rng.next_u64() % 3) as usize;
        let z = random_complex(n, &mut rng);
        let a = random_hermitian(n, &mut rng);
        let reports = [
            bounds::trace_lower_bound(&z, spec, d)?,
            bounds::schatten_upper_bound(&a, spec, d)?,
            bounds::frobenius_sandwich(&a, &centered, d.max(2))?,
            bounds::main_ineq_lower(&z, spec, d)?,
            bounds::binomial_monotone(&z, spec, 2, d.max(4))?,
            bounds::hunter_frobenius_lower(&a, d)?,
        ];
        for (slot, r) in rows.iter_mut().zip(reports.iter()) {
            slot.1 &= r.pass;
            slot.2 = slot.2.min(r.slack);
        }
    }
    Ok(rows
        .into_iter()
        .map(|(name, pass, slack)| {
            CheckRow::new("bounds", name, pass, format!("min slack {slack:.3e}"))
        })
        .collect())
}

/// Cross-method oracle: the three deterministic Hermitian pathways agree to
/// 1e-9; trace polynomial ≡ angular quadrature on M_n to 1e-8; Monte Carlo
/// agrees with the deterministic value within 4·stderr.
pub fn suite_oracle(trials: usize, samples: usize, seed: u64) -> Result<Vec<CheckRow>> {
    let families = standard_families();
    let mut rng = SplitMix64::new(seed);
    let mut worst_h = 0.0f64;
    let mut worst_c = 0.0f64;
    let mut mc_fail = 0usize;
    for t in 0..trials {
        let spec = &families[(rng.next_u64() % families.len() as u64) as usize];
        let d = 2 * (1 + (rng.next_u64() % 4) as u32); // 2, 4, 6, 8
        let n = 2 + (rng.next_u64() % 3) as usize;
        let a = random_hermitian(n, &mut rng);
        let v1 = norm_partition_sum(&a, spec, d)?.value;
        let v2 = norm_bell(&a, spec, d)?.value;
        let v3 = norm_mgf_coeff(&a, spec, d)?.value;
        worst_h = worst_h
            .max((v1 - v2).abs() / (1.0 + v1))
            .max((v1 - v3).abs() / (1.0 + v1));

        let z = random_complex(n, &mut rng);
        let dc = 2 * (1 + (rng.next_u64() % 4) as u32);
        let c1 = cnorm_trace_poly(&z, spec, dc)?.value;
        let c2 = cnorm_quadrature(&z, spec, dc as f64, default_nodes(dc as f64), 0, 0)?.value;
        worst_c = worst_c.max((c1 - c2).abs() / (1.0 + c1));

        // Monte Carlo spot checks on a subset to keep the suite fast; d ≤ 6
        // keeps the sample variance of |⟨X,λ⟩|^d moderate.
        if t % 10 == 0 && d <= 6 {
            let mc = norm_monte_carlo(&a, spec, d as f64, samples, seed ^ t as u64)?;
            let se = mc.stderr.unwrap_or(0.0).max(1e-12);
            if (mc.value - v2).abs() > 4.0 * se {
                mc_fail += 1;
            }
        }
    }
    Ok(vec![
        CheckRow::new("oracle", "hermitian_pathways", worst_h <= 1e-9, format!("worst {worst_h:.3e}")),
        CheckRow::new("oracle", "trace_poly_vs_quadrature", worst_c <= 1e-8, format!("worst {worst_c:.3e}")),
        CheckRow::new("oracle", "monte_carlo_4sigma", mc_fail == 0, format!("{mc_fail} misses")),
    ])
}

/// Singularly cospectral pair: K ⊕ K and the bipartite double cover
/// [[0, K], [K, 0]] with K = J₃ − I₃ share singular values but differ in
/// spectrum; Gamma(1, ½) at d = 6 separates them as 1350 vs 1260.
pub fn cospectral_pair() -> (HermitianMatrix, HermitianMatrix) {
    let n = 6;
    let mut a = ComplexMatrix::zeros(n);
    let mut b = ComplexMatrix::zeros(n);
    for i in 0..3 {
        for j in 0..3 {
            if i != j {
                a[(i, j)] = Complex64::new(1.0, 0.0);
                a[(i + 3, j + 3)] = Complex64::new(1.0, 0.0);
                b[(i, j + 3)] = Complex64::new(1.0, 0.0);
                b[(i + 3, j)] = Complex64::new(1.0, 0.0);
            }
        }
    }
    (HermitianMatrix::new(a).unwrap(), HermitianMatrix::new(b).unwrap())
}

/// Golden values: Fibonacci CHS norms, cyclic-shift and nilpotent
/// complexified CHS norms, and the cospectral discrimination pair.
pub fn suite_chs_golden() -> Result<Vec<CheckRow>> {
    let mut rows = Vec::new();
    let rel = |a: f64, b: f64| (a - b).abs() / b.abs().max(1e-300);

    // ‖F‖_d^d = f_d for the Fibonacci matrix (f_0 = f_1 = 1).
    let fib = HermitianMatrix::from_real(2, &[1.0, 1.0, 1.0, 0.0])?;
    let mut worst = 0.0f64;
    for (d, f) in [(2u32, 2.0), (4, 5.0), (6, 13.0), (8, 34.0)] {
        worst = worst.max(rel(chs::chs_norm_charpoly(&fib, d)?.powi(d as i32), f));
    }
    rows.push(CheckRow::new("chs-golden", "fibonacci", worst <= 1e-10, format!("worst {worst:.3e}")));

    // Cyclic 3×3 shift: ⦀Z⦀_d^d = 3/2, 3/2, 29/20, 99/70.
    let mut shift = ComplexMatrix::zeros(3);
    shift[(0, 1)] = Complex64::new(1.0, 0.0);
    shift[(1, 2)] = Complex64::new(1.0, 0.0);
    shift[(2, 0)] = Complex64::new(1.0, 0.0);
    let mut worst = 0.0f64;
    for (d, v) in [(2u32, 1.5), (4, 1.5), (6, 29.0 / 20.0), (8, 99.0 / 70.0)] {
        worst = worst.max(rel(chs::chs_cnorm_det_series(&shift, d)?.powi(d as i32), v));
    }
    rows.push(CheckRow::new("chs-golden", "cyclic_shift", worst <= 1e-9, format!("worst {worst:.3e}")));

    // Nilpotent Jordan block: ⦀Z⦀_d^d = C(d, d/2)^{−1}.
    let mut nil = ComplexMatrix::zeros(2);
    nil[(0, 1)] = Complex64::new(1.0, 0.0);
    let mut worst = 0.0f64;
    for d in [2u32, 4, 6] {
        let expect = 1.0 / central_binomial(d as f64);
        worst = worst.max(rel(chs::chs_cnorm_det_series(&nil, d)?.powi(d as i32), expect));
    }
    rows.push(CheckRow::new("chs-golden", "nilpotent", worst <= 1e-9, format!("worst {worst:.3e}")));

    // Cospectral discrimination: 1350 vs 1260 under Gamma(1, ½) at d = 6.
    let (two_triangles, bipartite) = cospectral_pair();
    let spec = DistributionSpec::Gamma { alpha: 1.0, beta: 0.5 };
    let va = norm_bell(&two_triangles, &spec, 6)?.value.powi(6);
    let vb = norm_bell(&bipartite, &spec, 6)?.value.powi(6);
    let worst = rel(va, 1350.0).max(rel(vb, 1260.0));
    rows.push(CheckRow::new("chs-golden", "cospectral_1350_1260", worst <= 1e-9, format!("worst {worst:.3e}")));
    Ok(rows)
}

/// Birkhoff decomposition and HLP transport on Sinkhorn-generated inputs.
pub fn suite_birkhoff(trials: usize, seed: u64) -> Result<Vec<CheckRow>> {
    let mut rng = SplitMix64::new(seed);
    let mut worst_resid = 0.0f64;
    let mut terms_ok = true;
    let mut worst_hlp = 0.0f64;
    for _ in 0..trials {
        let n = 2 + (rng.next_u64() % 4) as usize;
        let s = DoublyStochastic::random(n, &mut rng);
        let dec = birkhoff_decompose(&s)?;
        worst_resid = worst_resid.max(dec.residual);
        terms_ok &= dec.terms.len() <= n * n - n + 1;

        let x: Vec<f64> = (0..n).map(|_| rng.next_normal()).collect();
        let y = s.apply(&x);
        let d = hlp_transport(&x, &y)?;
        let dx = d.apply(&x);
        let scale: f64 = 1.0 + x.iter().map(|v| v.abs()).sum::<f64>();
        for (a, b) in dx.iter().zip(&y) {
            worst_hlp = worst_hlp.max((a - b).abs() / scale);
        }
    }
    Ok(vec![
        CheckRow::new("birkhoff", "reconstruction", worst_resid <= 1e-8, format!("worst residual {worst_resid:.3e}")),
        CheckRow::new("birkhoff", "term_count", terms_ok, "≤ n²−n+1 terms".into()),
        CheckRow::new("birkhoff", "hlp_transport", worst_hlp <= 1e-9, format!("worst {worst_hlp:.3e}")),
    ])
}
