//! Small statistics toolbox: running moments, batch means, KS tests,
//! Wilson intervals, and the delta method for ratio estimators.

use crate::error::{Error, Result};

/// Welford online mean/variance.
#[derive(Debug, Clone, Default)]
pub struct Running {
    n: u64,
    mean: f64,
    m2: f64,
}

impl Running {
    pub fn push(&mut self, x: f64) {
        self.n += 1;
        let d = x - self.mean;
        self.mean += d / self.n as f64;
        self.m2 += d * (x - self.mean);
    }

    pub fn count(&self) -> u64 {
        self.n
    }

    pub fn mean(&self) -> f64 {
        self.mean
    }

    /// Sample variance (n − 1 denominator).
    pub fn variance(&self) -> f64 {
        if self.n < 2 {
            0.0
        } else {
            self.m2 / (self.n - 1) as f64
        }
    }

    /// Standard error of the mean.
    pub fn se(&self) -> f64 {
        if self.n < 2 {
            f64::INFINITY
        } else {
            (self.variance() / self.n as f64).sqrt()
        }
    }
}

/// Mean and standard error of a batch of values (used for batch means).
pub fn mean_se(xs: &[f64]) -> Result<(f64, f64)> {
    if xs.len() < 2 {
        return Err(Error::InsufficientData(format!(
            "need at least 2 batches, got {}",
            xs.len()
        )));
    }
    let mut r = Running::default();
    for &x in xs {
        r.push(x);
    }
    Ok((r.mean(), r.se()))
}

/// Two-sided z-score between two independent estimates.
pub fn z_score(a: f64, se_a: f64, b: f64, se_b: f64) -> f64 {
    let denom = (se_a * se_a + se_b * se_b).sqrt();
    if denom == 0.0 {
        if a == b {
            0.0
        } else {
            f64::INFINITY
        }
    } else {
        (a - b) / denom
    }
}

/// Wilson score interval for a binomial proportion.
pub fn wilson_interval(successes: u64, trials: u64, z: f64) -> (f64, f64) {
    if trials == 0 {
        return (0.0, 1.0);
    }
    let n = trials as f64;
    let p = successes as f64 / n;
    let z2 = z * z;
    let denom = 1.0 + z2 / n;
    let center = (p + z2 / (2.0 * n)) / denom;
    let half = z * (p * (1.0 - p) / n + z2 / (4.0 * n * n)).sqrt() / denom;
    ((center - half).max(0.0), (center + half).min(1.0))
}

/// One-sample Kolmogorov–Smirnov distance against an arbitrary CDF.
///
/// For discrete target distributions this is conservative: the true
/// p-value is larger than the continuous-case p-value reported by
/// [`ks_p_value`].
pub fn ks_distance<F: Fn(f64) -> f64>(samples: &mut [f64], cdf: F) -> f64 {
    samples.sort_by(|a, b| a.partial_cmp(b).unwrap());
    let n = samples.len() as f64;
    let mut d: f64 = 0.0;
    for (i, &x) in samples.iter().enumerate() {
        let f = cdf(x);
        let lo = i as f64 / n;
        let hi = (i + 1) as f64 / n;
        d = d.max((f - lo).abs()).max((hi - f).abs());
    }
    d
}

/// Two-sample Kolmogorov–Smirnov distance.
pub fn ks_two_sample(a: &mut [f64], b: &mut [f64]) -> f64 {
    a.sort_by(|x, y| x.partial_cmp(y).unwrap());
    b.sort_by(|x, y| x.partial_cmp(y).unwrap());
    let (na, nb) = (a.len(), b.len());
    let (mut i, mut j) = (0usize, 0usize);
    let mut d: f64 = 0.0;
    while i < na && j < nb {
        let x = a[i].min(b[j]);
        while i < na && a[i] <= x {
            i += 1;
        }
        while j < nb && b[j] <= x {
            j += 1;
        }
        d = d.max((i as f64 / na as f64 - j as f64 / nb as f64).abs());
    }
    d
}

/// Asymptotic Kolmogorov p-value for a KS distance on `n_eff` samples.
///
/// `n_eff` is `n` for one-sample tests and `n*m/(n+m)` for two-sample tests.
pub fn ks_p_value(d: f64, n_eff: f64) -> f64 {
    if d <= 0.0 {
        return 1.0;
    }
    let sqrt_n = n_eff.sqrt();
    let lambda = (sqrt_n + 0.12 + 0.11 / sqrt_n) * d;
    let mut p = 0.0;
    for k in 1..=100 {
        let sign = if k % 2 == 1 { 1.0 } else { -1.0 };
        let term = sign * (-2.0 * (k as f64) * (k as f64) * lambda * lambda).exp();
        p += term;
        if term.abs() < 1e-16 {
            break;
        }
    }
    (2.0 * p).clamp(0.0, 1.0)
}

/// Standard error of `mean(num)/mean(den)` by the delta method, with the
/// pairs `(num[k], den[k])` i.i.d. across `k`.
pub fn ratio_se(num: &[f64], den: &[f64]) -> Result<f64> {
    let k = num.len();
    if k != den.len() || k < 2 {
        return Err(Error::InsufficientData(
            "ratio_se needs >= 2 paired observations".into(),
        ));
    }
    let kf = k as f64;
    let nbar = num.iter().sum::<f64>() / kf;
    let dbar = den.iter().sum::<f64>() / kf;
    let v = nbar / dbar;
    // Var(v) ~ Var(num - v*den) / (k * dbar^2)
    let mut s2 = 0.0;
    for i in 0..k {
        let r = num[i] - v * den[i];
        s2 += r * r;
    }
    s2 /= (k - 1) as f64;
    Ok((s2 / kf).sqrt() / dbar.abs())
}

/// Pearson correlation of two equal-length series.
pub fn correlation(a: &[f64], b: &[f64]) -> f64 {
    let n = a.len().min(b.len()) as f64;
    let ma = a.iter().sum::<f64>() / n;
    let mb = b.iter().sum::<f64>() / n;
    let (mut sab, mut saa, mut sbb) = (0.0, 0.0, 0.0);
    for i in 0..a.len().min(b.len()) {
        let (da, db) = (a[i] - ma, b[i] - mb);
        sab += da * db;
        saa += da * da;
        sbb += db * db;
    }
    if saa == 0.0 || sbb == 0.0 {
        0.0
    } else {
        sab / (saa * sbb).sqrt()
    }
}

/// Ordinary least squares slope and intercept of `y` on `x`.
pub fn linear_fit(x: &[f64], y: &[f64]) -> (f64, f64) {
    let n = x.len() as f64;
    let mx = x.iter().sum::<f64>() / n;
    let my = y.iter().sum::<f64>() / n;
    let (mut sxy, mut sxx) = (0.0, 0.0);
    for i in 0..x.len() {
        sxy += (x[i] - mx) * (y[i] - my);
        sxx += (x[i] - mx) * (x[i] - mx);
    }
    let slope = sxy / sxx;
    (slope, my - slope * mx)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::StreamKey;

    #[test]
    fn welford_matches_two_pass() {
        let xs = [1.0, 2.0, 4.0, 8.0, 16.5];
        let mut r = Running::default();
        for &x in &xs {
            r.push(x);
        }
        let mean = xs.iter().sum::<f64>() / xs.len() as f64;
        let var = xs.iter().map(|x| (x - mean).powi(2)).sum::<f64>() / (xs.len() - 1) as f64;
        assert!((r.mean() - mean).abs() < 1e-12);
        assert!((r.variance() - var).abs() < 1e-12);
    }

    #[test]
    fn mean_se_rejects_single_batch() {
        assert!(mean_se(&[1.0]).is_err());
    }

    #[test]
    fn wilson_contains_proportion() {
        let (lo, hi) = wilson_interval(50, 100, 1.96);
        assert!(lo < 0.5 && 0.5 < hi);
        assert!(hi - lo < 0.25);
    }

    #[test]
    fn ks_uniform_accepts_uniform() {
        let mut s = StreamKey::new(11).stream();
        let mut xs: Vec<f64> = (0..5000).map(|_| s.next_f64()).collect();
        let d = ks_distance(&mut xs, |x| x.clamp(0.0, 1.0));
        assert!(ks_p_value(d, 5000.0) > 0.01, "d = {d}");
    }

    #[test]
    fn ks_uniform_rejects_squared() {
        let mut s = StreamKey::new(12).stream();
        let mut xs: Vec<f64> = (0..5000).map(|_| s.next_f64().powi(2)).collect();
        let d = ks_distance(&mut xs, |x| x.clamp(0.0, 1.0));
        assert!(ks_p_value(d, 5000.0) < 1e-6);
    }

    #[test]
    fn two_sample_ks_same_law() {
        let mut s = StreamKey::new(13).stream();
        let mut a: Vec<f64> = (0..4000).map(|_| s.exponential(1.0)).collect();
        let mut b: Vec<f64> = (0..4000).map(|_| s.exponential(1.0)).collect();
        let d = ks_two_sample(&mut a, &mut b);
        let n_eff = 4000.0 * 4000.0 / 8000.0;
        assert!(ks_p_value(d, n_eff) > 0.01);
    }

    #[test]
    fn ratio_se_shrinks_with_k() {
        let mut s = StreamKey::new(14).stream();
        let num: Vec<f64> = (0..400).map(|_| 2.0 + s.next_f64()).collect();
        let den: Vec<f64> = (0..400).map(|_| 1.0 + s.next_f64()).collect();
        let se_full = ratio_se(&num, &den).unwrap();
        let se_half = ratio_se(&num[..100], &den[..100]).unwrap();
        assert!(se_full < se_half);
    }

    #[test]
    fn linear_fit_recovers_line() {
        let x: Vec<f64> = (0..10).map(|i| i as f64).collect();
        let y: Vec<f64> = x.iter().map(|v| 3.0 - 2.0 * v).collect();
        let (slope, intercept) = linear_fit(&x, &y);
        assert!((slope + 2.0).abs() < 1e-12);
        assert!((intercept - 3.0).abs() < 1e-12);
    }
}
