//! Least-squares fit of a step function to `y = λ·ln x + κ`.

use serde::{Deserialize, Serialize};

use crate::error::{domain, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Sampling {
    /// Every integer `x` from the first jump to `x_max`.
    Dense,
    /// Only the jump points, plus `x_max`.
    Jumps,
}

impl std::str::FromStr for Sampling {
    type Err = crate::Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "dense" => Ok(Sampling::Dense),
            "jumps" => Ok(Sampling::Jumps),
            _ => Err(crate::Error::Parse(format!("unknown sampling {s:?}"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FitResult {
    pub lambda: f64,
    pub kappa: f64,
    pub rms: f64,
    pub samples: usize,
    pub sampling: Option<Sampling>,
}

/// Samples `(x, #T≤x)` of the step function with jumps `steps`
/// (ascending `(x, count)` pairs) up to `x_max`.
pub fn step_samples(steps: &[(u64, usize)], x_max: u64, sampling: Sampling) -> Vec<(u64, f64)> {
    let Some(&(first, _)) = steps.first() else {
        return Vec::new();
    };
    match sampling {
        Sampling::Dense => {
            let mut out = Vec::with_capacity(x_max.saturating_sub(first) as usize + 1);
            let mut i = 0;
            let mut count = 0;
            for x in first..=x_max {
                while i < steps.len() && steps[i].0 <= x {
                    count = steps[i].1;
                    i += 1;
                }
                out.push((x, count as f64));
            }
            out
        }
        Sampling::Jumps => {
            let mut out: Vec<(u64, f64)> =
                steps.iter().filter(|(x, _)| *x <= x_max).map(|&(x, c)| (x, c as f64)).collect();
            if let Some(&(last_x, last_c)) = out.last() {
                if last_x < x_max {
                    out.push((x_max, last_c));
                }
            }
            out
        }
    }
}

/// Ordinary least squares of `y` against `ln x`.
pub fn fit_log(samples: &[(u64, f64)]) -> Result<FitResult> {
    if samples.len() < 3 {
        return domain(format!("need at least 3 samples, got {}", samples.len()));
    }
    if samples.iter().any(|(x, _)| *x <= 1) {
        return domain("sample abscissae must exceed 1");
    }
    let n = samples.len() as f64;
    let ln: Vec<f64> = samples.iter().map(|(x, _)| (*x as f64).ln()).collect();
    let mean_x = ln.iter().sum::<f64>() / n;
    let mean_y = samples.iter().map(|(_, y)| y).sum::<f64>() / n;
    let (mut sxx, mut sxy) = (0.0, 0.0);
    for (lx, (_, y)) in ln.iter().zip(samples) {
        sxx += (lx - mean_x) * (lx - mean_x);
        sxy += (lx - mean_x) * (y - mean_y);
    }
    if sxx <= f64::EPSILON * n {
        return domain("degenerate design: all abscissae coincide");
    }
    let lambda = sxy / sxx;
    let kappa = mean_y - lambda * mean_x;
    let sse: f64 = ln.iter().zip(samples).map(|(lx, (_, y))| (y - lambda * lx - kappa).powi(2)).sum();
    Ok(FitResult { lambda, kappa, rms: (sse / n).sqrt(), samples: samples.len(), sampling: None })
}

/// [`step_samples`] followed by [`fit_log`].
pub fn fit_steps(steps: &[(u64, usize)], x_max: u64, sampling: Sampling) -> Result<FitResult> {
    let samples = step_samples(steps, x_max, sampling);
    let mut res = fit_log(&samples)?;
    res.sampling = Some(sampling);
    Ok(res)
}
