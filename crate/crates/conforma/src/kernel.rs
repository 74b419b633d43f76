//! Kernel evaluation and Gram matrix assembly.
//!
//! Only the isotropic Gaussian kernel `exp(-theta * ||x - x'||^2)` is
//! implemented. `theta` is a precision: large values make the kernel decay
//! fast, small values make distant points look similar. The kind enum exists
//! so other kernels can be added without touching call sites.

use crate::error::{Error, Result};
use crate::linalg::SymMatrix;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum KernelKind {
    GaussianIsotropic,
}

/// Kernel family plus its precision parameter.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KernelParams {
    kind: KernelKind,
    theta: f64,
}

impl KernelParams {
    /// Isotropic Gaussian kernel with precision `theta > 0`.
    pub fn gaussian(theta: f64) -> Result<Self> {
        if !(theta > 0.0) || !theta.is_finite() {
            return Err(Error::InvalidParameter {
                name: "theta",
                value: theta,
            });
        }
        Ok(Self {
            kind: KernelKind::GaussianIsotropic,
            theta,
        })
    }

    pub fn kind(&self) -> KernelKind {
        self.kind
    }

    pub fn theta(&self) -> f64 {
        self.theta
    }

    /// Kernel value for a precomputed squared distance.
    #[inline]
    pub(crate) fn eval_sq_dist(&self, sq_dist: f64) -> f64 {
        match self.kind {
            KernelKind::GaussianIsotropic => (-self.theta * sq_dist).exp(),
        }
    }
}

#[inline]
fn sq_dist(x: &[f64], y: &[f64]) -> f64 {
    x.iter().zip(y).map(|(a, b)| (a - b) * (a - b)).sum()
}

/// Evaluates the kernel at a pair of points.
pub fn eval_kernel(params: &KernelParams, x: &[f64], y: &[f64]) -> Result<f64> {
    if x.len() != y.len() {
        return Err(Error::DimensionMismatch {
            expected: x.len(),
            got: y.len(),
        });
    }
    Ok(params.eval_sq_dist(sq_dist(x, y)))
}

/// Gram matrix over one point set; symmetric with unit diagonal.
pub fn gram(params: &KernelParams, points: &[Vec<f64>]) -> Result<SymMatrix> {
    check_points(points)?;
    Ok(SymMatrix::from_fn(points.len(), |i, j| {
        if i == j {
            params.eval_sq_dist(0.0)
        } else {
            params.eval_sq_dist(sq_dist(&points[i], &points[j]))
        }
    }))
}

/// Rectangular kernel matrix: rows over `points`, columns over `others`.
pub fn cross_gram(
    params: &KernelParams,
    points: &[Vec<f64>],
    others: &[Vec<f64>],
) -> Result<Vec<Vec<f64>>> {
    check_points(points)?;
    check_points(others)?;
    if let (Some(a), Some(b)) = (points.first(), others.first()) {
        if a.len() != b.len() {
            return Err(Error::DimensionMismatch {
                expected: a.len(),
                got: b.len(),
            });
        }
    }
    Ok(points
        .iter()
        .map(|x| {
            others
                .iter()
                .map(|y| params.eval_sq_dist(sq_dist(x, y)))
                .collect()
        })
        .collect())
}

/// Kernel values between every point of `points` and a single `target`.
pub fn kernel_vector(params: &KernelParams, points: &[Vec<f64>], target: &[f64]) -> Result<Vec<f64>> {
    check_points(points)?;
    if let Some(p) = points.first() {
        if p.len() != target.len() {
            return Err(Error::DimensionMismatch {
                expected: p.len(),
                got: target.len(),
            });
        }
    }
    Ok(points
        .iter()
        .map(|x| params.eval_sq_dist(sq_dist(x, target)))
        .collect())
}

fn check_points(points: &[Vec<f64>]) -> Result<()> {
    if let Some(first) = points.first() {
        let dim = first.len();
        for p in points {
            if p.len() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    got: p.len(),
                });
            }
        }
    }
    Ok(())
}

/// Regression sample: input points with scalar targets.
#[derive(Debug, Clone)]
pub struct Dataset {
    inputs: Vec<Vec<f64>>,
    targets: Vec<f64>,
}

impl Dataset {
    pub fn new(inputs: Vec<Vec<f64>>, targets: Vec<f64>) -> Result<Self> {
        if inputs.len() != targets.len() {
            return Err(Error::DimensionMismatch {
                expected: inputs.len(),
                got: targets.len(),
            });
        }
        check_points(&inputs)?;
        for p in &inputs {
            for &c in p {
                if !c.is_finite() {
                    return Err(Error::InvalidParameter {
                        name: "input coordinate",
                        value: c,
                    });
                }
            }
        }
        for &t in &targets {
            if !t.is_finite() {
                return Err(Error::InvalidParameter {
                    name: "target",
                    value: t,
                });
            }
        }
        Ok(Self { inputs, targets })
    }

    pub fn len(&self) -> usize {
        self.inputs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.inputs.is_empty()
    }

    /// Input dimension; zero for an empty dataset.
    pub fn dim(&self) -> usize {
        self.inputs.first().map_or(0, Vec::len)
    }

    pub fn inputs(&self) -> &[Vec<f64>] {
        &self.inputs
    }

    pub fn targets(&self) -> &[f64] {
        &self.targets
    }

    /// Subsample by index; indices may repeat and come in any order.
    pub fn subset(&self, indices: &[usize]) -> Dataset {
        Dataset {
            inputs: indices.iter().map(|&i| self.inputs[i].clone()).collect(),
            targets: indices.iter().map(|&i| self.targets[i]).collect(),
        }
    }

    /// Copy of the dataset with one extra observation appended.
    pub fn augmented(&self, input: &[f64], target: f64) -> Result<Dataset> {
        if !self.is_empty() && input.len() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                got: input.len(),
            });
        }
        let mut inputs = self.inputs.clone();
        let mut targets = self.targets.clone();
        inputs.push(input.to_vec());
        targets.push(target);
        Ok(Dataset { inputs, targets })
    }
}
