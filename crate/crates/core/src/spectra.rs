//! Laplacian and adjacency matrices, a dense symmetric eigensolver, closed-form
//! cycle and path spectra, and the synchronizability eigenratio.
//!
//! The eigensolver is cyclic Jacobi: each sweep visits the strictly upper
//! pairs `(p, q)` in row-major order and annihilates `a[p][q]` with a plane
//! rotation. It stops once the off-diagonal Frobenius norm drops below the
//! tolerance. The pivot order is fixed, so results are bit-for-bit repeatable.

use std::f64::consts::PI;

use thiserror::Error;

use crate::graph::Graph;

/// Default absolute tolerance for "this eigenvalue equals that value".
pub const EQ_TOL: f64 = 1e-8;
/// Sweep budget for the Jacobi iteration.
pub const MAX_SWEEPS: usize = 100;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SpectraError {
    #[error("matrix is not symmetric at ({0}, {1})")]
    NotSymmetric(usize, usize),
    #[error("matrix has a non-finite entry at ({0}, {1})")]
    NonFinite(usize, usize),
    #[error("matrix data length {len} does not match order {order}")]
    Shape { order: usize, len: usize },
    #[error("Jacobi iteration did not converge after {sweeps} sweeps (off-diagonal norm {off_norm:e})")]
    NoConvergence { sweeps: usize, off_norm: f64 },
    #[error("tolerance must be positive, got {0}")]
    BadTolerance(f64),
    #[error("graph is disconnected; the eigenratio needs lambda2 > 0")]
    Disconnected,
    #[error("graph has a single node; lambda2 is undefined")]
    SingleNode,
    #[error("numerical health: {zeros} near-zero Laplacian eigenvalues but {components} components")]
    ZeroMultiplicityMismatch { zeros: usize, components: usize },
    #[error("{family} spectrum requires size >= {min}, got {got}")]
    TooSmall { family: &'static str, min: usize, got: usize },
}

/// Dense symmetric matrix, stored row-major in full.
#[derive(Debug, Clone, PartialEq)]
pub struct SymMatrix {
    order: usize,
    data: Vec<f64>,
}

impl SymMatrix {
    pub fn from_rows(order: usize, data: Vec<f64>) -> Result<Self, SpectraError> {
        if data.len() != order * order || order == 0 {
            return Err(SpectraError::Shape { order, len: data.len() });
        }
        for i in 0..order {
            for j in 0..order {
                let x = data[i * order + j];
                if !x.is_finite() {
                    return Err(SpectraError::NonFinite(i, j));
                }
                if j > i && x != data[j * order + i] {
                    return Err(SpectraError::NotSymmetric(i, j));
                }
            }
        }
        Ok(SymMatrix { order, data })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.order + j]
    }

    pub fn trace(&self) -> f64 {
        (0..self.order).map(|i| self.get(i, i)).sum()
    }
}

/// Frobenius norm of the off-diagonal part of a full row-major matrix.
fn off_norm(data: &[f64], n: usize) -> f64 {
    let mut s = 0.0;
    for i in 0..n {
        for j in (i + 1)..n {
            let x = data[i * n + j];
            s += 2.0 * x * x;
        }
    }
    s.sqrt()
}

/// Degree on the diagonal, -1 for each edge.
pub fn laplacian(g: &Graph) -> SymMatrix {
    let n = g.node_count();
    let mut data = vec![0.0; n * n];
    for &(u, v) in g.edges() {
        data[u * n + v] = -1.0;
        data[v * n + u] = -1.0;
        data[u * n + u] += 1.0;
        data[v * n + v] += 1.0;
    }
    SymMatrix { order: n, data }
}

pub fn adjacency(g: &Graph) -> SymMatrix {
    let n = g.node_count();
    let mut data = vec![0.0; n * n];
    for &(u, v) in g.edges() {
        data[u * n + v] = 1.0;
        data[v * n + u] = 1.0;
    }
    SymMatrix { order: n, data }
}

/// Eigenvalues of a symmetric matrix, sorted ascending.
#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum {
    values: Vec<f64>,
    zero_multiplicity: usize,
}

impl Spectrum {
    /// Sorts `values` ascending and counts entries within `zero_tol` of 0.
    pub fn from_values(mut values: Vec<f64>, zero_tol: f64) -> Self {
        values.sort_by(f64::total_cmp);
        let zero_multiplicity = values.iter().filter(|x| x.abs() < zero_tol).count();
        Spectrum { values, zero_multiplicity }
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn min(&self) -> f64 {
        self.values[0]
    }

    /// Second-smallest eigenvalue; `None` for a 1x1 matrix.
    pub fn lambda2(&self) -> Option<f64> {
        self.values.get(1).copied()
    }

    pub fn lambda_max(&self) -> f64 {
        *self.values.last().expect("spectrum is never empty")
    }

    pub fn zero_multiplicity(&self) -> usize {
        self.zero_multiplicity
    }

    pub fn multiplicity_near(&self, target: f64, tol: f64) -> usize {
        self.values.iter().filter(|x| (*x - target).abs() < tol).count()
    }

    pub fn sum(&self) -> f64 {
        self.values.iter().sum()
    }
}

/// Default Jacobi tolerance for a matrix of the given order.
pub fn default_tol(order: usize) -> f64 {
    1e-10 * order as f64
}

/// All eigenvalues of `m` by cyclic Jacobi rotation.
pub fn sym_eigenvalues(m: &SymMatrix, tol: f64) -> Result<Spectrum, SpectraError> {
    if tol.is_nan() || tol <= 0.0 {
        return Err(SpectraError::BadTolerance(tol));
    }
    let n = m.order;
    let mut a = m.data.clone();
    let mut off = off_norm(&a, n);
    let mut sweeps = 0;
    while off >= tol {
        if sweeps == MAX_SWEEPS {
            return Err(SpectraError::NoConvergence { sweeps, off_norm: off });
        }
        for p in 0..n {
            for q in (p + 1)..n {
                let apq = a[p * n + q];
                if apq == 0.0 {
                    continue;
                }
                let app = a[p * n + p];
                let aqq = a[q * n + q];
                // Rutishauser's stable choice of the smaller rotation angle.
                let theta = (aqq - app) / (2.0 * apq);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for k in 0..n {
                    let akp = a[k * n + p];
                    let akq = a[k * n + q];
                    a[k * n + p] = c * akp - s * akq;
                    a[k * n + q] = s * akp + c * akq;
                }
                for k in 0..n {
                    let apk = a[p * n + k];
                    let aqk = a[q * n + k];
                    a[p * n + k] = c * apk - s * aqk;
                    a[q * n + k] = s * apk + c * aqk;
                }
                a[p * n + q] = 0.0;
                a[q * n + p] = 0.0;
            }
        }
        sweeps += 1;
        off = off_norm(&a, n);
    }
    let diag = (0..n).map(|i| a[i * n + i]).collect();
    Ok(Spectrum::from_values(diag, EQ_TOL))
}

/// Laplacian spectrum with the default tolerance.
pub fn laplacian_spectrum(g: &Graph) -> Result<Spectrum, SpectraError> {
    sym_eigenvalues(&laplacian(g), default_tol(g.node_count()))
}

/// Laplacian eigenvalue `mu_{j+1}` of `C_k` in the sine-ratio form, defined
/// for `1 <= j < k`.
pub fn cycle_eigenvalue_sine_form(k: usize, j: usize) -> f64 {
    let x = j as f64 * PI / k as f64;
    3.0 - (3.0 * x).sin() / x.sin()
}

/// Laplacian spectrum of `C_k`. Uses the sine-ratio form for `k >= 4` and
/// `2 - 2cos(2 pi j / k)` for the triangle.
pub fn cycle_spectrum_closed_form(k: usize) -> Result<Spectrum, SpectraError> {
    if k < 3 {
        return Err(SpectraError::TooSmall { family: "cycle", min: 3, got: k });
    }
    let mut values = vec![0.0];
    for j in 1..k {
        values.push(if k >= 4 {
            cycle_eigenvalue_sine_form(k, j)
        } else {
            2.0 - 2.0 * (2.0 * PI * j as f64 / k as f64).cos()
        });
    }
    Ok(Spectrum::from_values(values, EQ_TOL))
}

/// Largest Laplacian eigenvalue of `C_k`: 4 for even `k`, otherwise the
/// sine-ratio expression at `j = (k-1)/2`.
pub fn cycle_lambda_max(k: usize) -> f64 {
    if k.is_multiple_of(2) {
        4.0
    } else {
        let k = k as f64;
        let x = (k - 1.0) * PI / (2.0 * k);
        3.0 - (3.0 * x).sin() / x.sin()
    }
}

/// Laplacian spectrum of `P_k`: `2 - 2cos(j pi / k)`, `j = 0..k`.
pub fn path_spectrum_closed_form(k: usize) -> Result<Spectrum, SpectraError> {
    if k < 1 {
        return Err(SpectraError::TooSmall { family: "path", min: 1, got: k });
    }
    let values = (0..k)
        .map(|j| 2.0 - 2.0 * (j as f64 * PI / k as f64).cos())
        .collect();
    Ok(Spectrum::from_values(values, EQ_TOL))
}

/// `r = lambda2 / lambda_max`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SyncIndex {
    pub r: f64,
    pub lambda2: f64,
    pub lambda_max: f64,
}

/// Eigenratio from an already computed Laplacian spectrum. The traversal
/// verdict is authoritative; a disagreeing zero count is a health error.
pub fn eigenratio_from(g: &Graph, spectrum: &Spectrum) -> Result<SyncIndex, SpectraError> {
    if g.node_count() < 2 {
        return Err(SpectraError::SingleNode);
    }
    let components = g.components().len();
    if spectrum.zero_multiplicity() != components {
        return Err(SpectraError::ZeroMultiplicityMismatch {
            zeros: spectrum.zero_multiplicity(),
            components,
        });
    }
    if components > 1 {
        return Err(SpectraError::Disconnected);
    }
    let lambda2 = spectrum.values()[1];
    let lambda_max = spectrum.lambda_max();
    Ok(SyncIndex { r: lambda2 / lambda_max, lambda2, lambda_max })
}

pub fn eigenratio(g: &Graph) -> Result<SyncIndex, SpectraError> {
    if !g.is_connected() {
        return Err(SpectraError::Disconnected);
    }
    eigenratio_from(g, &laplacian_spectrum(g)?)
}

/// Laplacian spectrum of the complement without eigensolving:
/// `{0} ∪ {N - lambda_j(G) : j = 2..N}`.
pub fn complement_spectrum(g: &Graph, spectrum: &Spectrum) -> Spectrum {
    let n = g.node_count() as f64;
    let mut values = vec![0.0];
    values.extend(spectrum.values().iter().skip(1).map(|l| n - l));
    Spectrum::from_values(values, EQ_TOL)
}

pub fn adjacency_min_eigenvalue(g: &Graph) -> Result<f64, SpectraError> {
    Ok(sym_eigenvalues(&adjacency(g), default_tol(g.node_count()))?.min())
}
