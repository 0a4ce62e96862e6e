//! File and CLI-string parsing: matrix JSON/CSV and the distribution
//! key–value grammar (`gamma:alpha=1,beta=1`).

use crate::distributions::DistributionSpec;
use crate::error::{Error, Result};
use crate::linalg::{ComplexMatrix, HermitianMatrix};
use num_complex::Complex64;
use serde::Deserialize;

/// Matrix file schema: {"n": int, "entries": [[re, im], ...]} row-major.
#[derive(Deserialize)]
struct MatrixJson {
    n: usize,
    entries: Vec<[f64; 2]>,
}

/// Parse a matrix from JSON, or from real-only CSV (one row per line,
/// comma-separated; interpreted as a real square matrix).
pub fn parse_matrix(text: &str) -> Result<ComplexMatrix> {
    let trimmed = text.trim();
    if trimmed.starts_with('{') {
        let m: MatrixJson = serde_json::from_str(trimmed)
            .map_err(|e| Error::Parse(format!("matrix JSON: {e}")))?;
        let entries: Vec<Complex64> =
            m.entries.iter().map(|&[re, im]| Complex64::new(re, im)).collect();
        return ComplexMatrix::new(m.n, entries);
    }
    // CSV fallback.
    let mut rows: Vec<Vec<f64>> = Vec::new();
    for line in trimmed.lines() {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let row: Vec<f64> = line
            .split(',')
            .map(|c| {
                c.trim()
                    .parse::<f64>()
                    .map_err(|e| Error::Parse(format!("CSV entry {c:?}: {e}")))
            })
            .collect::<Result<_>>()?;
        rows.push(row);
    }
    let n = rows.len();
    if n == 0 || rows.iter().any(|r| r.len() != n) {
        return Err(Error::Parse(format!("CSV matrix must be square, got {n} rows")));
    }
    let entries: Vec<Complex64> = rows
        .into_iter()
        .flatten()
        .map(|x| Complex64::new(x, 0.0))
        .collect();
    ComplexMatrix::new(n, entries)
}

/// Parse a matrix and require it to be Hermitian.
pub fn parse_hermitian(text: &str) -> Result<HermitianMatrix> {
    HermitianMatrix::new(parse_matrix(text)?)
}

fn get_param(params: &[(String, f64)], key: &str) -> Option<f64> {
    params.iter().find(|(k, _)| k == key).map(|(_, v)| *v)
}

fn require(params: &[(String, f64)], key: &str, family: &str) -> Result<f64> {
    get_param(params, key)
        .ok_or_else(|| Error::Parse(format!("{family} requires parameter {key}")))
}

/// Parse a distribution string: `family` or `family:key=value,key=value`.
/// Families: gamma(alpha,beta), exponential, normal(mu,sigma2), poisson(alpha),
/// bernoulli(q), rademacher, uniform(a,b), laplace(mu,beta), pareto(alpha,xm),
/// stable(alpha,gamma), discrete(v0,p0,v1,p1,…).
pub fn parse_dist(text: &str) -> Result<DistributionSpec> {
    let text = text.trim();
    let (family, rest) = match text.split_once(':') {
        Some((f, r)) => (f.trim(), r.trim()),
        None => (text, ""),
    };
    let mut params: Vec<(String, f64)> = Vec::new();
    if !rest.is_empty() {
        for kv in rest.split(',') {
            let (k, v) = kv
                .split_once('=')
                .ok_or_else(|| Error::Parse(format!("expected key=value, got {kv:?}")))?;
            let val: f64 = v
                .trim()
                .parse()
                .map_err(|e| Error::Parse(format!("parameter {k}: {e}")))?;
            params.push((k.trim().to_string(), val));
        }
    }
    let spec = match family.to_ascii_lowercase().as_str() {
        "gamma" => DistributionSpec::Gamma {
            alpha: require(&params, "alpha", "gamma")?,
            beta: require(&params, "beta", "gamma")?,
        },
        "exponential" | "exp" => DistributionSpec::Exponential,
        "normal" | "gaussian" => DistributionSpec::Normal {
            mu: get_param(&params, "mu").unwrap_or(0.0),
            sigma2: get_param(&params, "sigma2").unwrap_or(1.0),
        },
        "poisson" => DistributionSpec::Poisson {
            alpha: require(&params, "alpha", "poisson")?,
        },
        "bernoulli" => DistributionSpec::Bernoulli {
            q: require(&params, "q", "bernoulli")?,
        },
        "rademacher" => DistributionSpec::Rademacher,
        "uniform" => DistributionSpec::Uniform {
            a: require(&params, "a", "uniform")?,
            b: require(&params, "b", "uniform")?,
        },
        "laplace" => DistributionSpec::Laplace {
            mu: get_param(&params, "mu").unwrap_or(0.0),
            beta: require(&params, "beta", "laplace")?,
        },
        "pareto" => DistributionSpec::Pareto {
            alpha: require(&params, "alpha", "pareto")?,
            xm: require(&params, "xm", "pareto")?,
        },
        "stable" => DistributionSpec::SymmetricAlphaStable {
            alpha: require(&params, "alpha", "stable")?,
            gamma: get_param(&params, "gamma").unwrap_or(1.0),
        },
        "discrete" => {
            // discrete:v0=…,p0=…,v1=…,p1=…
            let mut values = Vec::new();
            let mut probs = Vec::new();
            for i in 0.. {
                match (
                    get_param(&params, &format!("v{i}")),
                    get_param(&params, &format!("p{i}")),
                ) {
                    (Some(v), Some(p)) => {
                        values.push(v);
                        probs.push(p);
                    }
                    (None, None) => break,
                    _ => {
                        return Err(Error::Parse(format!(
                            "discrete needs paired v{i}/p{i}"
                        )))
                    }
                }
            }
            DistributionSpec::FiniteDiscrete { values, probs }
        }
        other => return Err(Error::Parse(format!("unknown family {other:?}"))),
    };
    spec.validate()?;
    Ok(spec)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_matrix_round_trip() {
        let z = parse_matrix(
            r#"{"n": 2, "entries": [[0,0],[1,0],[0,0],[0,0]]}"#,
        )
        .unwrap();
        assert_eq!(z.n, 2);
        assert_eq!(z[(0, 1)], Complex64::new(1.0, 0.0));
        assert_eq!(z[(1, 1)], Complex64::new(0.0, 0.0));
    }

    #[test]
    fn csv_matrix() {
        let a = parse_hermitian("1, 1\n1, 0\n").unwrap();
        assert_eq!(a.n(), 2);
        assert_eq!(a.matrix()[(0, 1)].re, 1.0);
    }

    #[test]
    fn csv_rejects_ragged() {
        assert!(parse_matrix("1,2\n3\n").is_err());
    }

    #[test]
    fn dist_grammar() {
        assert_eq!(
            parse_dist("gamma:alpha=1,beta=0.5").unwrap(),
            DistributionSpec::Gamma { alpha: 1.0, beta: 0.5 }
        );
        assert_eq!(parse_dist("rademacher").unwrap(), DistributionSpec::Rademacher);
        assert_eq!(
            parse_dist("normal:mu=1,sigma2=2").unwrap(),
            DistributionSpec::Normal { mu: 1.0, sigma2: 2.0 }
        );
        assert_eq!(
            parse_dist("stable:alpha=1.5,gamma=1").unwrap(),
            DistributionSpec::SymmetricAlphaStable { alpha: 1.5, gamma: 1.0 }
        );
        assert_eq!(
            parse_dist("discrete:v0=-1,p0=0.5,v1=1,p1=0.5").unwrap(),
            DistributionSpec::FiniteDiscrete {
                values: vec![-1.0, 1.0],
                probs: vec![0.5, 0.5]
            }
        );
        // Validation runs: bad parameters are rejected at parse time.
        assert!(parse_dist("uniform:a=1,b=0").is_err());
        assert!(parse_dist("bernoulli:q=1.5").is_err());
        assert!(parse_dist("nosuch:x=1").is_err());
        assert!(parse_dist("gamma:alpha=1").is_err());
    }
}
