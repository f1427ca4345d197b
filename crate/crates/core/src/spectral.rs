//! Laplacian and signless Laplacian spectra via cyclic Jacobi rotations.

use serde::Serialize;

use crate::error::SpectralError;
use crate::graph::Graph;

/// Stop once every off-diagonal entry is below this magnitude.
pub const OFF_DIAGONAL_TOL: f64 = 1e-12;
pub const MAX_SWEEPS: usize = 100;

/// Dense symmetric matrix, row-major.
#[derive(Clone, Debug, PartialEq)]
pub struct SymMatrix {
    order: usize,
    entries: Vec<f64>,
}

impl SymMatrix {
    pub fn new(order: usize, entries: Vec<f64>) -> Result<Self, SpectralError> {
        if order > 64 {
            return Err(SpectralError::TooLarge(order));
        }
        assert_eq!(entries.len(), order * order, "entry count must be order^2");
        for i in 0..order {
            for j in i + 1..order {
                if entries[i * order + j] != entries[j * order + i] {
                    return Err(SpectralError::NotSymmetric(i, j));
                }
            }
        }
        Ok(SymMatrix { order, entries })
    }

    pub fn zeros(order: usize) -> Result<Self, SpectralError> {
        SymMatrix::new(order, vec![0.0; order * order])
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.entries[i * self.order + j]
    }

    /// All eigenvalues in ascending order.
    pub fn eigenvalues(&self) -> Result<Vec<f64>, SpectralError> {
        let mut values = jacobi(self.order, self.entries.clone())?;
        values.sort_by(f64::total_cmp);
        Ok(values)
    }

    /// Largest eigenvalue; 0 for the empty matrix.
    pub fn eigen_max(&self) -> Result<f64, SpectralError> {
        Ok(self.eigenvalues()?.last().copied().unwrap_or(0.0))
    }
}

fn max_off_diagonal(n: usize, a: &[f64]) -> f64 {
    let mut off = 0.0f64;
    for i in 0..n {
        for j in i + 1..n {
            off = off.max(a[i * n + j].abs());
        }
    }
    off
}

/// Cyclic Jacobi; returns the diagonal after convergence.
fn jacobi(n: usize, mut a: Vec<f64>) -> Result<Vec<f64>, SpectralError> {
    let mut sweep = 0;
    loop {
        let off = max_off_diagonal(n, &a);
        if off < OFF_DIAGONAL_TOL {
            break;
        }
        if sweep == MAX_SWEEPS {
            return Err(SpectralError::NoConvergence { sweeps: sweep, off });
        }
        sweep += 1;
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[p * n + q];
                let app = a[p * n + p];
                let aqq = a[q * n + q];
                let g = 100.0 * apq.abs();
                // entries below the diagonal's rounding level are dropped
                if sweep > 4 && app.abs() + g == app.abs() && aqq.abs() + g == aqq.abs() {
                    a[p * n + q] = 0.0;
                    a[q * n + p] = 0.0;
                    continue;
                }
                if apq == 0.0 {
                    continue;
                }
                let h = aqq - app;
                let t = if h.abs() + g == h.abs() {
                    apq / h
                } else {
                    let theta = 0.5 * h / apq;
                    let t = 1.0 / (theta.abs() + (1.0 + theta * theta).sqrt());
                    if theta < 0.0 {
                        -t
                    } else {
                        t
                    }
                };
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = t * c;
                let tau = s / (1.0 + c);
                a[p * n + p] = app - t * apq;
                a[q * n + q] = aqq + t * apq;
                a[p * n + q] = 0.0;
                a[q * n + p] = 0.0;
                for r in 0..n {
                    if r == p || r == q {
                        continue;
                    }
                    let arp = a[r * n + p];
                    let arq = a[r * n + q];
                    let new_rp = arp - s * (arq + arp * tau);
                    let new_rq = arq + s * (arp - arq * tau);
                    a[r * n + p] = new_rp;
                    a[p * n + r] = new_rp;
                    a[r * n + q] = new_rq;
                    a[q * n + r] = new_rq;
                }
            }
        }
    }
    Ok((0..n).map(|i| a[i * n + i]).collect())
}

fn degree_matrix_plus(g: &Graph, off_diagonal: f64) -> SymMatrix {
    let n = g.order();
    let mut entries = vec![0.0; n * n];
    for v in 0..n {
        entries[v * n + v] = g.degree(v) as f64;
    }
    for (u, v) in g.edges() {
        entries[u * n + v] = off_diagonal;
        entries[v * n + u] = off_diagonal;
    }
    SymMatrix { order: n, entries }
}

/// `L = D - A`
pub fn laplacian(g: &Graph) -> SymMatrix {
    degree_matrix_plus(g, -1.0)
}

/// `Q = D + A`
pub fn signless_laplacian(g: &Graph) -> SymMatrix {
    degree_matrix_plus(g, 1.0)
}

fn largest(m: SymMatrix) -> f64 {
    m.eigen_max().expect("Jacobi converges on graph matrices")
}

/// Laplacian spectral radius.
pub fn mu(g: &Graph) -> f64 {
    if g.edge_count() == 0 {
        return 0.0;
    }
    largest(laplacian(g))
}

/// Signless Laplacian spectral radius.
pub fn q(g: &Graph) -> f64 {
    if g.edge_count() == 0 {
        return 0.0;
    }
    largest(signless_laplacian(g))
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SpectralSummary {
    pub mu: f64,
    pub q: f64,
    pub max_degree: usize,
    pub avg_degree: f64,
    pub laplacian_spectrum: Vec<f64>,
    pub signless_spectrum: Vec<f64>,
}

pub fn summary(g: &Graph) -> SpectralSummary {
    let laplacian_spectrum = laplacian(g)
        .eigenvalues()
        .expect("Jacobi converges on graph matrices");
    let signless_spectrum = signless_laplacian(g)
        .eigenvalues()
        .expect("Jacobi converges on graph matrices");
    let (mu, q) = if g.edge_count() == 0 {
        (0.0, 0.0)
    } else {
        (
            *laplacian_spectrum.last().unwrap(),
            *signless_spectrum.last().unwrap(),
        )
    };
    SpectralSummary {
        mu,
        q,
        max_degree: g.max_degree(),
        avg_degree: g.average_degree(),
        laplacian_spectrum,
        signless_spectrum,
    }
}

/// `max |N(u) ∪ N(v)|` over edges `uv`.
pub fn neighborhood_union_bound(g: &Graph) -> Result<usize, SpectralError> {
    g.edges()
        .map(|(u, v)| g.neighbors(u).union(g.neighbors(v)).len())
        .max()
        .ok_or(SpectralError::Edgeless)
}
