//! Laplacian spectra and vertex connectivity for small graphs.
//!
//! The eigensolver is a classical Jacobi iteration: rotate away the
//! largest off-diagonal entry until the off-diagonal Frobenius norm
//! drops below 1e-10. Orders here are at most 64, where this is both
//! fast and numerically boring.

use crate::bits::Subsets;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

const OFF_DIAG_TOL: f64 = 1e-10;

/// Dense symmetric real matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct SymMatrix {
    order: usize,
    entries: Vec<f64>,
}

impl SymMatrix {
    pub fn zeros(order: usize) -> SymMatrix {
        SymMatrix {
            order,
            entries: vec![0.0; order * order],
        }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.entries[i * self.order + j]
    }

    pub fn set_sym(&mut self, i: usize, j: usize, v: f64) {
        self.entries[i * self.order + j] = v;
        self.entries[j * self.order + i] = v;
    }

    pub fn trace(&self) -> f64 {
        (0..self.order).map(|i| self.get(i, i)).sum()
    }

    fn off_diag_norm(&self) -> f64 {
        let mut s = 0.0;
        for i in 0..self.order {
            for j in 0..self.order {
                if i != j {
                    s += self.get(i, j) * self.get(i, j);
                }
            }
        }
        s.sqrt()
    }
}

/// Sorted eigenvalues of a symmetric matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum {
    pub eigenvalues: Vec<f64>,
}

/// Laplacian L = D - A: degrees on the diagonal, -1 per edge.
pub fn laplacian(g: &Graph) -> SymMatrix {
    let n = g.n_vertices();
    let mut m = SymMatrix::zeros(n);
    for v in 0..n {
        let adj = g.adjacency(v).expect("vertex in range");
        m.set_sym(v, v, adj.len() as f64);
        for u in adj.iter() {
            m.set_sym(v, u, -1.0);
        }
    }
    m
}

/// All eigenvalues, ascending, by Jacobi rotations on the largest
/// off-diagonal pivot. Errors out after `100 * order^2` rotations.
pub fn eigenvalues(m: &SymMatrix) -> Result<Spectrum> {
    let n = m.order;
    let mut a = m.clone();
    let cap = 100 * n * n;

    for _ in 0..cap.max(1) {
        // largest off-diagonal pivot
        let (mut p, mut q, mut big) = (0, 0, 0.0f64);
        for i in 0..n {
            for j in i + 1..n {
                if a.get(i, j).abs() > big {
                    big = a.get(i, j).abs();
                    (p, q) = (i, j);
                }
            }
        }
        if a.off_diag_norm() <= OFF_DIAG_TOL {
            let mut ev: Vec<f64> = (0..n).map(|i| a.get(i, i)).collect();
            ev.sort_by(|x, y| x.partial_cmp(y).expect("finite eigenvalues"));
            return Ok(Spectrum { eigenvalues: ev });
        }

        let apq = a.get(p, q);
        let theta = (a.get(q, q) - a.get(p, p)) / (2.0 * apq);
        let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
        let c = 1.0 / (t * t + 1.0).sqrt();
        let s = t * c;

        let app = a.get(p, p);
        let aqq = a.get(q, q);
        a.set_sym(p, p, c * c * app - 2.0 * s * c * apq + s * s * aqq);
        a.set_sym(q, q, s * s * app + 2.0 * s * c * apq + c * c * aqq);
        a.set_sym(p, q, 0.0);
        for k in 0..n {
            if k != p && k != q {
                let akp = a.get(k, p);
                let akq = a.get(k, q);
                a.set_sym(k, p, c * akp - s * akq);
                a.set_sym(k, q, s * akp + c * akq);
            }
        }
    }
    Err(Error::EigenNoConvergence {
        sweeps: cap,
        remaining: a.off_diag_norm(),
    })
}

/// Second-smallest Laplacian eigenvalue.
pub fn algebraic_connectivity(g: &Graph) -> Result<f64> {
    if g.n_vertices() < 2 {
        return Err(Error::TooFewVertices {
            min: 2,
            actual: g.n_vertices(),
        });
    }
    Ok(eigenvalues(&laplacian(g))?.eigenvalues[1])
}

/// Vertex connectivity by exhaustive cut search: smallest `s` such that
/// deleting some `s` vertices leaves a disconnected graph on >= 2
/// vertices. Complete graphs give n - 1. Disconnected input reports 0.
pub fn vertex_connectivity(g: &Graph) -> usize {
    let n = g.n_vertices();
    if n < 2 {
        return 0;
    }
    if !g.is_connected() {
        return 0;
    }
    if g.min_degree() == n - 1 {
        return n - 1;
    }
    for s in 1..=g.min_degree() {
        for cut in Subsets::new(n, s) {
            let rest = VertexSet::from_mask(cut).complement(n);
            if rest.len() >= 2 && !g.is_connected_within(rest) {
                return s;
            }
        }
    }
    // a non-complete graph always has a cut of at most min_degree
    unreachable!("non-complete connected graph must have a vertex cut");
}
