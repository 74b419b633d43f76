//! Gaussian process view of the ridge fit.
//!
//! Under a zero-mean GP prior with the same kernel and noise variance
//! `sigma2 * lambda`, the KRR prediction is the posterior mean and the
//! posterior variance at a test point is
//! `sigma2 * (lambda + k(x,x) - k_x' (lambda I + K)^{-1} k_x)`.
//! This module computes that posterior, the matching credible interval, the
//! log marginal likelihood, and a grid MLE for the kernel precision with the
//! noise scale profiled out in closed form.

use crate::error::{Error, Result};
use crate::kernel::{self, Dataset, KernelParams};
use crate::krr::{self, FittedKrr};
use crate::linalg::cholesky_factorize;
use crate::util::{dot, map_indexed};

const LN_2PI: f64 = 1.8378770664093453;

/// Posterior summary at one test point. `interval` stays `None` until a
/// significance level is supplied.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GprPrediction {
    pub mean: f64,
    pub variance: f64,
    pub interval: Option<(f64, f64)>,
}

/// Predictive mean and variance at `point` given `sigma2 > 0`.
pub fn posterior(model: &FittedKrr, point: &[f64], sigma2: f64) -> Result<GprPrediction> {
    if !(sigma2 > 0.0) || !sigma2.is_finite() {
        return Err(Error::InvalidParameter {
            name: "sigma2",
            value: sigma2,
        });
    }
    let k = kernel::kernel_vector(model.params(), model.data().inputs(), point)?;
    let mean = dot(&k, model.beta());
    let v = model.factor().solve(&k)?;
    let self_sim = model.params().eval_sq_dist(0.0);
    let spread = model.lambda() + self_sim - dot(&k, &v);
    Ok(GprPrediction {
        mean,
        variance: sigma2 * spread.max(0.0),
        interval: None,
    })
}

/// Central credible interval `mean ± z_{1-alpha/2} sqrt(variance)`.
pub fn interval(model: &FittedKrr, point: &[f64], sigma2: f64, alpha: f64) -> Result<GprPrediction> {
    if !(alpha > 0.0 && alpha < 1.0) {
        return Err(Error::InvalidAlpha(alpha));
    }
    let mut pred = posterior(model, point, sigma2)?;
    let z = std_normal_quantile(1.0 - alpha / 2.0)?;
    let half = z * pred.variance.sqrt();
    pred.interval = Some((pred.mean - half, pred.mean + half));
    Ok(pred)
}

/// Log marginal likelihood of the targets under the GP model.
pub fn log_marginal_likelihood(
    data: &Dataset,
    lambda: f64,
    params: &KernelParams,
    sigma2: f64,
) -> Result<f64> {
    if !(sigma2 > 0.0) || !sigma2.is_finite() {
        return Err(Error::InvalidParameter {
            name: "sigma2",
            value: sigma2,
        });
    }
    let model = krr::fit(data.clone(), lambda, *params)?;
    Ok(log_likelihood_from_fit(&model, sigma2))
}

fn log_likelihood_from_fit(model: &FittedKrr, sigma2: f64) -> f64 {
    let n = model.data().len() as f64;
    let quad = dot(model.data().targets(), model.beta());
    -0.5 * n * LN_2PI - 0.5 * n * sigma2.ln() - 0.5 * model.factor().log_det()
        - 0.5 * quad / sigma2
}

/// Closed-form profile of the noise scale, `y' (lambda I + K)^{-1} y / n`,
/// floored at 1e-12 for degenerate all-zero targets.
pub fn profile_sigma2(data: &Dataset, lambda: f64, params: &KernelParams) -> Result<f64> {
    let model = krr::fit(data.clone(), lambda, *params)?;
    Ok(model.profile_sigma2())
}

/// Result of the grid search over the kernel precision.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MleResult {
    pub theta_hat: f64,
    pub sigma2_hat: f64,
    pub log_likelihood: f64,
}

/// Default precision grid: 25 log-spaced points on `[1, 1e4]`.
pub fn default_theta_grid() -> Vec<f64> {
    let count = 25;
    (0..count)
        .map(|i| 10f64.powf(4.0 * i as f64 / (count - 1) as f64))
        .collect()
}

/// Maximizes the profile likelihood over a precision grid.
///
/// Grid points that fail to factorize are skipped; ties in likelihood go to
/// the smaller precision. Grid points are evaluated independently, so the
/// search parallelizes with a deterministic reduction.
pub fn mle_theta(data: &Dataset, lambda: f64, grid: &[f64]) -> Result<MleResult> {
    if grid.is_empty() {
        return Err(Error::InvalidParameter {
            name: "grid size",
            value: 0.0,
        });
    }
    for &theta in grid {
        if !(theta > 0.0) || !theta.is_finite() {
            return Err(Error::InvalidParameter {
                name: "theta",
                value: theta,
            });
        }
    }
    let evaluated: Vec<Option<MleResult>> = map_indexed(grid.len(), |i| {
        let theta = grid[i];
        let params = KernelParams::gaussian(theta).ok()?;
        let model = krr::fit(data.clone(), lambda, params).ok()?;
        let sigma2 = model.profile_sigma2();
        Some(MleResult {
            theta_hat: theta,
            sigma2_hat: sigma2,
            log_likelihood: log_likelihood_from_fit(&model, sigma2),
        })
    });
    let mut best: Option<MleResult> = None;
    for candidate in evaluated.into_iter().flatten() {
        best = Some(match best {
            None => candidate,
            Some(current) => {
                let better = candidate.log_likelihood > current.log_likelihood
                    || (candidate.log_likelihood == current.log_likelihood
                        && candidate.theta_hat < current.theta_hat);
                if better {
                    candidate
                } else {
                    current
                }
            }
        });
    }
    best.ok_or(Error::AllPointsFailed)
}

/// Standard normal CDF, accurate to machine precision via `erfc`.
pub fn std_normal_cdf(z: f64) -> f64 {
    0.5 * erfc(-z / std::f64::consts::SQRT_2)
}

/// Inverse standard normal CDF.
///
/// Rational initial estimate refined by one Newton step on the CDF; absolute
/// error stays below 1e-8 across `[1e-10, 1 - 1e-10]`.
pub fn std_normal_quantile(g: f64) -> Result<f64> {
    if !(g > 0.0 && g < 1.0) {
        return Err(Error::InvalidProbability(g));
    }
    let z = quantile_estimate(g);
    let density = (-0.5 * z * z).exp() / (2.0 * std::f64::consts::PI).sqrt();
    if density <= f64::MIN_POSITIVE {
        return Ok(z);
    }
    Ok(z - (std_normal_cdf(z) - g) / density)
}

/// Rational approximation to the inverse normal CDF (relative error about
/// 1e-9 over the open unit interval).
fn quantile_estimate(g: f64) -> f64 {
    const A: [f64; 6] = [
        -39.6968302866538,
        220.946098424521,
        -275.928510446969,
        138.357751867269,
        -30.6647980661472,
        2.50662827745924,
    ];
    const B: [f64; 5] = [
        -54.4760987982241,
        161.585836858041,
        -155.698979859887,
        66.8013118877197,
        -13.2806815528857,
    ];
    const C: [f64; 6] = [
        -7.78489400243029e-3,
        -0.322396458041136,
        -2.40075827716184,
        -2.54973253934373,
        4.37466414146497,
        2.93816398269878,
    ];
    const D: [f64; 4] = [
        7.78469570904146e-3,
        0.32246712907004,
        2.445134137143,
        3.75440866190742,
    ];
    const LOW: f64 = 0.02425;

    if g < LOW {
        let q = (-2.0 * g.ln()).sqrt();
        (((((C[0] * q + C[1]) * q + C[2]) * q + C[3]) * q + C[4]) * q + C[5])
            / ((((D[0] * q + D[1]) * q + D[2]) * q + D[3]) * q + 1.0)
    } else if g <= 1.0 - LOW {
        let q = g - 0.5;
        let r = q * q;
        (((((A[0] * r + A[1]) * r + A[2]) * r + A[3]) * r + A[4]) * r + A[5]) * q
            / (((((B[0] * r + B[1]) * r + B[2]) * r + B[3]) * r + B[4]) * r + 1.0)
    } else {
        let q = (-2.0 * (1.0 - g).ln()).sqrt();
        -(((((C[0] * q + C[1]) * q + C[2]) * q + C[3]) * q + C[4]) * q + C[5])
            / ((((D[0] * q + D[1]) * q + D[2]) * q + D[3]) * q + 1.0)
    }
}

/// Complementary error function (Cody-style rational approximations, three
/// ranges, near machine precision).
fn erfc(x: f64) -> f64 {
    let y = x.abs();
    let result = if y <= 0.46875 {
        return 1.0 - erf_small(x);
    } else if y <= 4.0 {
        const C: [f64; 9] = [
            5.64188496988670089e-1,
            8.88314979438837594,
            6.61191906371416295e1,
            2.98635138197400131e2,
            8.81952221241769090e2,
            1.71204761263407058e3,
            2.05107837782607147e3,
            1.23033935479799725e3,
            2.15311535474403846e-8,
        ];
        const D: [f64; 8] = [
            1.57449261107098347e1,
            1.17693950891312499e2,
            5.37181101862009858e2,
            1.62138957456669019e3,
            3.29079923573345963e3,
            4.36261909014324716e3,
            3.43936767414372164e3,
            1.23033935480374942e3,
        ];
        let mut num = C[8] * y;
        let mut den = y;
        for i in 0..7 {
            num = (num + C[i]) * y;
            den = (den + D[i]) * y;
        }
        scaled_exp(y) * (num + C[7]) / (den + D[7])
    } else {
        const P: [f64; 6] = [
            3.05326634961232344e-1,
            3.60344899949804439e-1,
            1.25781726111229246e-1,
            1.60837851487422766e-2,
            6.58749161529837803e-4,
            1.63153871373020978e-2,
        ];
        const Q: [f64; 5] = [
            2.56852019228982242,
            1.87295284992346047,
            5.27905102951428412e-1,
            6.05183413124413191e-2,
            2.33520497626869185e-3,
        ];
        const INV_SQRT_PI: f64 = 5.6418958354775628695e-1;
        let z = 1.0 / (y * y);
        let mut num = P[5] * z;
        let mut den = z;
        for i in 0..4 {
            num = (num + P[i]) * z;
            den = (den + Q[i]) * z;
        }
        let tail = z * (num + P[4]) / (den + Q[4]);
        scaled_exp(y) * (INV_SQRT_PI - tail) / y
    };
    if x < 0.0 {
        2.0 - result
    } else {
        result
    }
}

/// `exp(-y^2)` split so the squared argument loses no low-order bits.
fn scaled_exp(y: f64) -> f64 {
    let rounded = (y * 16.0).trunc() / 16.0;
    let del = (y - rounded) * (y + rounded);
    (-rounded * rounded).exp() * (-del).exp()
}

/// `erf` on `|x| <= 0.46875`.
fn erf_small(x: f64) -> f64 {
    const A: [f64; 5] = [
        3.16112374387056560,
        1.13864154151050156e2,
        3.77485237685302021e2,
        3.20937758913846947e3,
        1.85777706184603153e-1,
    ];
    const B: [f64; 4] = [
        2.36012909523441209e1,
        2.44024637934444173e2,
        1.28261652607737228e3,
        2.84423683343917062e3,
    ];
    let z = x * x;
    let mut num = A[4] * z;
    let mut den = z;
    for i in 0..3 {
        num = (num + A[i]) * z;
        den = (den + B[i]) * z;
    }
    x * (num + A[3]) / (den + B[3])
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn close(a: f64, b: f64, tol: f64) -> bool {
        (a - b).abs() <= tol
    }

    fn single_point_model() -> FittedKrr {
        let data = Dataset::new(vec![vec![0.0]], vec![1.0]).unwrap();
        krr::fit(data, 1.0, KernelParams::gaussian(1.0).unwrap()).unwrap()
    }

    #[test]
    fn erfc_reference_values() {
        // Frozen from an independent high-precision evaluation.
        assert!(close(1.0 - erfc(0.3), 0.3286267594591274, 1e-14));
        assert!(close(1.0 - erfc(1.0), 0.8427007929497148, 1e-14));
        assert!(close(erfc(2.0), 0.004677734981047266, 1e-16));
        assert!((erfc(5.0) / 1.5374597944280347e-12 - 1.0).abs() < 1e-12);
        assert!((erfc(10.0) / 2.0884875837625446e-45 - 1.0).abs() < 1e-12);
    }

    #[test]
    fn cdf_reference_values() {
        assert_eq!(std_normal_cdf(0.0), 0.5);
        assert!(close(std_normal_cdf(1.0), 0.8413447460685429, 1e-14));
        assert!(close(std_normal_cdf(-3.0), 0.0013498980316300933, 1e-16));
        assert!(close(std_normal_cdf(5.5), 0.9999999810104375, 1e-15));
    }

    #[test]
    fn quantile_reference_values() {
        assert_eq!(std_normal_quantile(0.5).unwrap(), 0.0);
        assert!(close(std_normal_quantile(0.975).unwrap(), 1.95996398, 1e-8));
        // Frozen expectations across the requested range.
        let table = [
            (1e-10, -6.361340902404056),
            (1e-6, -4.753424308822899),
            (0.025, -1.9599639845400545),
            (0.25, -0.6744897501960817),
            (0.841344746068543, 1.0),
            (0.99, 2.3263478740408408),
            (1.0 - 1e-6, 4.753424308817087),
            (1.0 - 1e-10, 6.361340889697422),
        ];
        for (g, want) in table {
            let z = std_normal_quantile(g).unwrap();
            assert!(close(z, want, 1e-8), "g={g}: {z} vs {want}");
        }
    }

    #[test]
    fn quantile_is_antisymmetric() {
        for g in [0.01, 0.1, 0.3, 0.45, 0.72, 0.999] {
            let a = std_normal_quantile(g).unwrap();
            let b = std_normal_quantile(1.0 - g).unwrap();
            assert!(close(a, -b, 1e-12), "g={g}");
        }
    }

    #[test]
    fn quantile_matches_bisection_oracle() {
        // Independent inversion of the CDF by bisection.
        let bisect = |g: f64| {
            let (mut lo, mut hi) = (-10.0f64, 10.0f64);
            for _ in 0..80 {
                let mid = 0.5 * (lo + hi);
                if std_normal_cdf(mid) < g {
                    lo = mid;
                } else {
                    hi = mid;
                }
            }
            0.5 * (lo + hi)
        };
        for g in [1e-8, 1e-4, 0.2, 0.5, 0.9, 1.0 - 1e-4, 1.0 - 1e-8] {
            let z = std_normal_quantile(g).unwrap();
            assert!(close(z, bisect(g), 1e-8), "g={g}");
        }
    }

    #[test]
    fn quantile_rejects_out_of_range() {
        assert!(std_normal_quantile(0.0).is_err());
        assert!(std_normal_quantile(1.0).is_err());
        assert!(std_normal_quantile(-0.5).is_err());
    }

    #[test]
    fn posterior_hand_checked() {
        let m = single_point_model();
        let p = posterior(&m, &[0.0], 1.0).unwrap();
        assert!(close(p.mean, 0.5, 1e-12));
        assert!(close(p.variance, 1.5, 1e-12));
        assert!(p.interval.is_none());
    }

    #[test]
    fn posterior_far_point_reverts_to_prior() {
        let data = Dataset::new(vec![vec![0.0]], vec![1.0]).unwrap();
        let m = krr::fit(data, 0.25, KernelParams::gaussian(1e6).unwrap()).unwrap();
        let p = posterior(&m, &[1.0], 2.0).unwrap();
        assert_eq!(p.mean, 0.0);
        assert!(close(p.variance, 2.0 * (0.25 + 1.0), 1e-12));
    }

    #[test]
    fn posterior_variance_ignores_targets() {
        let inputs = vec![vec![0.0], vec![0.4]];
        let params = KernelParams::gaussian(2.0).unwrap();
        let zero = krr::fit(Dataset::new(inputs.clone(), vec![0.0, 0.0]).unwrap(), 0.5, params).unwrap();
        let nonzero = krr::fit(Dataset::new(inputs, vec![1.0, -2.0]).unwrap(), 0.5, params).unwrap();
        let a = posterior(&zero, &[0.2], 1.0).unwrap();
        let b = posterior(&nonzero, &[0.2], 1.0).unwrap();
        assert_eq!(a.mean, 0.0);
        assert!(close(a.variance, b.variance, 1e-15));
    }

    #[test]
    fn interval_hand_checked() {
        let m = single_point_model();
        let p = interval(&m, &[0.0], 1.0, 0.05).unwrap();
        let (lo, hi) = p.interval.unwrap();
        assert!(close(lo, -1.900432, 1e-6), "{lo}");
        assert!(close(hi, 2.900432, 1e-6), "{hi}");
        assert!(close((lo + hi) / 2.0, p.mean, 1e-12));
    }

    #[test]
    fn interval_width_grows_as_alpha_shrinks() {
        let m = single_point_model();
        let width = |alpha: f64| {
            let (lo, hi) = interval(&m, &[0.3], 1.0, alpha).unwrap().interval.unwrap();
            hi - lo
        };
        assert!(width(0.05) > width(0.25));
    }

    #[test]
    fn interval_degenerates_with_vanishing_scale() {
        let m = single_point_model();
        let p = interval(&m, &[0.0], 1e-300, 0.1).unwrap();
        let (lo, hi) = p.interval.unwrap();
        assert!(close(lo, p.mean, 1e-140));
        assert!(close(hi, p.mean, 1e-140));
        assert!(interval(&m, &[0.0], 1.0, 1.0).is_err());
    }

    #[test]
    fn posterior_mean_matches_krr_prediction() {
        let mut rng = ChaCha8Rng::seed_from_u64(37);
        let inputs: Vec<Vec<f64>> = (0..15).map(|_| vec![rng.gen_range(0.0..1.0)]).collect();
        let targets: Vec<f64> = (0..15).map(|_| rng.gen_range(-1.0..1.0)).collect();
        let m = krr::fit(
            Dataset::new(inputs, targets).unwrap(),
            0.1,
            KernelParams::gaussian(30.0).unwrap(),
        )
        .unwrap();
        for _ in 0..20 {
            let x = vec![rng.gen_range(-0.2..1.2)];
            let p = posterior(&m, &x, 1.0).unwrap();
            assert!(close(p.mean, m.predict_one(&x).unwrap(), 1e-12));
        }
    }

    #[test]
    fn posterior_spread_bounded_by_prior() {
        let mut rng = ChaCha8Rng::seed_from_u64(41);
        let lambda = 0.2;
        let inputs: Vec<Vec<f64>> = (0..20).map(|_| vec![rng.gen_range(0.0..1.0)]).collect();
        let targets = vec![0.0; 20];
        let m = krr::fit(
            Dataset::new(inputs, targets).unwrap(),
            lambda,
            KernelParams::gaussian(50.0).unwrap(),
        )
        .unwrap();
        for _ in 0..50 {
            let x = vec![rng.gen_range(-1.0..2.0)];
            let spread = posterior(&m, &x, 1.0).unwrap().variance;
            assert!(spread >= lambda - 1e-10, "{spread}");
            assert!(spread <= lambda + 1.0 + 1e-10, "{spread}");
        }
    }

    #[test]
    fn log_likelihood_hand_checked() {
        let data = Dataset::new(vec![vec![0.0]], vec![1.0]).unwrap();
        let params = KernelParams::gaussian(1.0).unwrap();
        let ll = log_marginal_likelihood(&data, 1.0, &params, 1.0).unwrap();
        assert!(close(ll, -1.5155121, 1e-6), "{ll}");
    }

    #[test]
    fn log_likelihood_zero_targets_drops_quadratic_term() {
        let data = Dataset::new(vec![vec![0.0], vec![0.7]], vec![0.0, 0.0]).unwrap();
        let params = KernelParams::gaussian(2.0).unwrap();
        let sigma2 = 0.8;
        let ll = log_marginal_likelihood(&data, 0.5, &params, sigma2).unwrap();
        let model = krr::fit(data, 0.5, params).unwrap();
        let expected = -1.0 * LN_2PI - sigma2.ln() - 0.5 * model.factor().log_det();
        assert!(close(ll, expected, 1e-12));
    }

    #[test]
    fn log_likelihood_quadratic_scales_with_targets() {
        let inputs = vec![vec![0.0], vec![0.5], vec![0.9]];
        let y: Vec<f64> = vec![0.4, -1.0, 0.3];
        let y2: Vec<f64> = y.iter().map(|v| 2.0 * v).collect();
        let params = KernelParams::gaussian(5.0).unwrap();
        let ll1 =
            log_marginal_likelihood(&Dataset::new(inputs.clone(), y).unwrap(), 0.3, &params, 1.0)
                .unwrap();
        let ll2 =
            log_marginal_likelihood(&Dataset::new(inputs.clone(), y2).unwrap(), 0.3, &params, 1.0)
                .unwrap();
        let zero = log_marginal_likelihood(
            &Dataset::new(inputs, vec![0.0; 3]).unwrap(),
            0.3,
            &params,
            1.0,
        )
        .unwrap();
        // Quadratic term scales by 4 when targets scale by 2.
        assert!(close(zero - ll2, 4.0 * (zero - ll1), 1e-10));
    }

    #[test]
    fn profile_sigma2_hand_checked() {
        let data = Dataset::new(vec![vec![0.0]], vec![1.0]).unwrap();
        let params = KernelParams::gaussian(1.0).unwrap();
        assert!(close(profile_sigma2(&data, 1.0, &params).unwrap(), 0.5, 1e-12));
    }

    #[test]
    fn profile_sigma2_floor_for_zero_targets() {
        let data = Dataset::new(vec![vec![0.0], vec![1.0]], vec![0.0, 0.0]).unwrap();
        let params = KernelParams::gaussian(1.0).unwrap();
        assert_eq!(profile_sigma2(&data, 1.0, &params).unwrap(), 1e-12);
    }

    #[test]
    fn profile_sigma2_is_stationary_point() {
        let mut rng = ChaCha8Rng::seed_from_u64(43);
        let inputs: Vec<Vec<f64>> = (0..12).map(|_| vec![rng.gen_range(0.0..1.0)]).collect();
        let targets: Vec<f64> = (0..12).map(|_| rng.gen_range(-1.0..1.0)).collect();
        let data = Dataset::new(inputs, targets).unwrap();
        let params = KernelParams::gaussian(8.0).unwrap();
        let s2 = profile_sigma2(&data, 0.4, &params).unwrap();
        let h = s2 * 1e-5;
        let up = log_marginal_likelihood(&data, 0.4, &params, s2 + h).unwrap();
        let down = log_marginal_likelihood(&data, 0.4, &params, s2 - h).unwrap();
        let derivative = (up - down) / (2.0 * h);
        assert!(derivative.abs() < 1e-6, "{derivative}");

        let at = log_marginal_likelihood(&data, 0.4, &params, s2).unwrap();
        for factor in [0.99, 1.01] {
            let nearby = log_marginal_likelihood(&data, 0.4, &params, s2 * factor).unwrap();
            assert!(at >= nearby);
        }
    }

    #[test]
    fn mle_theta_single_point_grid() {
        let data = Dataset::new(vec![vec![0.0], vec![0.3]], vec![1.0, -0.5]).unwrap();
        let r = mle_theta(&data, 0.1, &[7.0]).unwrap();
        assert_eq!(r.theta_hat, 7.0);
        let params = KernelParams::gaussian(7.0).unwrap();
        assert!(close(
            r.sigma2_hat,
            profile_sigma2(&data, 0.1, &params).unwrap(),
            1e-14
        ));
        assert!(close(
            r.log_likelihood,
            log_marginal_likelihood(&data, 0.1, &params, r.sigma2_hat).unwrap(),
            1e-12
        ));
    }

    #[test]
    fn mle_theta_ties_prefer_smaller() {
        // A single observation gives the same likelihood for every theta.
        let data = Dataset::new(vec![vec![0.0]], vec![1.0]).unwrap();
        let r = mle_theta(&data, 1.0, &[100.0, 10.0, 1000.0]).unwrap();
        assert_eq!(r.theta_hat, 10.0);
    }

    #[test]
    fn mle_theta_recovers_generating_precision() {
        // Data drawn from the prior at theta = 100 should pick 100 from a
        // decade grid most of the time.
        let mut wins = 0;
        for seed in 0..20u64 {
            let mut rng = ChaCha8Rng::seed_from_u64(1000 + seed);
            let inputs: Vec<Vec<f64>> = (0..200).map(|_| vec![rng.gen_range(0.0..1.0)]).collect();
            let targets = crate::experiment::sample_gp_path(
                &inputs,
                &KernelParams::gaussian(100.0).unwrap(),
                1e-6,
                1.0,
                9000 + seed,
            )
            .unwrap();
            let data = Dataset::new(inputs, targets).unwrap();
            let r = mle_theta(&data, 1e-6, &[10.0, 100.0, 1000.0]).unwrap();
            if r.theta_hat == 100.0 {
                wins += 1;
            }
        }
        assert!(wins > 10, "recovered true precision only {wins}/20 times");
    }

    #[test]
    fn default_grid_spans_four_decades() {
        let grid = default_theta_grid();
        assert_eq!(grid.len(), 25);
        assert!(close(grid[0], 1.0, 1e-12));
        assert!(close(grid[24], 1e4, 1e-8));
        assert!(grid.windows(2).all(|w| w[0] < w[1]));
    }
}
