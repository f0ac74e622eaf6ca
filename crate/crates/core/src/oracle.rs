//! Ground-truth effective resistance via the Laplacian pseudoinverse.
//!
//! For a connected network the Laplacian `L` has rank deficiency exactly
//! one, with kernel spanned by the all-ones vector. The Moore-Penrose
//! inverse is recovered through the rank completion
//!
//! ```text
//! L⁺ = (L + (1/n)·J)⁻¹ − (1/n)·J
//! ```
//!
//! where `J` is the all-ones matrix, and the effective resistance reads off
//! its entries as `r(p, q) = l⁺_pp + l⁺_qq − 2·l⁺_pq`. The completed matrix
//! is symmetric positive definite, so a dense Cholesky factorization serves
//! as the backend; that is plenty for the desk-scale networks this crate
//! targets (a few thousand vertices).

use thiserror::Error;

use crate::graph::{build_laplacian, LaplacianMatrix, ResistorNetwork};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("network is disconnected; resistance distance is undefined")]
    Disconnected,
    #[error("vertex {vertex} out of range for network of {count} vertices")]
    VertexOutOfRange { vertex: usize, count: usize },
    #[error("rank-completed Laplacian is numerically singular (disconnected network?)")]
    Singular,
    #[error("network has no vertices")]
    Empty,
}

/// Dense Moore-Penrose inverse of a network Laplacian.
#[derive(Debug, Clone)]
pub struct PseudoInverse {
    n: usize,
    mat: Vec<f64>,
}

impl PseudoInverse {
    pub fn dimension(&self) -> usize {
        self.n
    }

    pub fn entry(&self, i: usize, j: usize) -> f64 {
        self.mat[i * self.n + j]
    }

    /// `l⁺_pp + l⁺_qq − 2·l⁺_pq`.
    pub fn resistance(&self, p: usize, q: usize) -> f64 {
        self.entry(p, p) + self.entry(q, q) - 2.0 * self.entry(p, q)
    }
}

/// Lower-triangular Cholesky factor of a symmetric positive definite
/// matrix, or `None` when a pivot degenerates.
fn cholesky(a: &mut [f64], n: usize) -> Option<()> {
    for j in 0..n {
        let mut d = a[j * n + j];
        for k in 0..j {
            d -= a[j * n + k] * a[j * n + k];
        }
        if d <= 1e-12 {
            return None;
        }
        let d = d.sqrt();
        a[j * n + j] = d;
        for i in j + 1..n {
            let mut s = a[i * n + j];
            for k in 0..j {
                s -= a[i * n + k] * a[j * n + k];
            }
            a[i * n + j] = s / d;
        }
    }
    Some(())
}

/// Solves `A x = e_col` given the Cholesky factor of `A`, writing the
/// column into `out`.
fn solve_unit(l: &[f64], n: usize, col: usize, out: &mut [f64]) {
    // Forward substitution L y = e_col.
    for i in 0..n {
        let mut s = if i == col { 1.0 } else { 0.0 };
        for k in 0..i {
            s -= l[i * n + k] * out[k];
        }
        out[i] = s / l[i * n + i];
    }
    // Back substitution Lᵀ x = y.
    for i in (0..n).rev() {
        let mut s = out[i];
        for k in i + 1..n {
            s -= l[k * n + i] * out[k];
        }
        out[i] = s / l[i * n + i];
    }
}

/// Moore-Penrose inverse of a connected network's Laplacian via the
/// rank-completion `(L + (1/n)J)⁻¹ − (1/n)J`.
pub fn pseudo_inverse(lap: &LaplacianMatrix) -> Result<PseudoInverse, OracleError> {
    let n = lap.dimension();
    if n == 0 {
        return Err(OracleError::Empty);
    }
    let shift = 1.0 / n as f64;
    let mut a = lap.to_f64();
    for v in a.iter_mut() {
        *v += shift;
    }
    cholesky(&mut a, n).ok_or(OracleError::Singular)?;
    let mut inv = vec![0.0; n * n];
    let mut col = vec![0.0; n];
    for j in 0..n {
        solve_unit(&a, n, j, &mut col);
        for i in 0..n {
            inv[i * n + j] = col[i];
        }
    }
    // Subtract J/n and symmetrize away factorization round-off.
    let mut mat = vec![0.0; n * n];
    for i in 0..n {
        for j in 0..=i {
            let v = 0.5 * (inv[i * n + j] + inv[j * n + i]) - shift;
            mat[i * n + j] = v;
            mat[j * n + i] = v;
        }
    }
    Ok(PseudoInverse { n, mat })
}

fn connected_pinv(net: &ResistorNetwork) -> Result<PseudoInverse, OracleError> {
    if net.vertex_count() == 0 {
        return Err(OracleError::Empty);
    }
    if !net.is_connected() {
        return Err(OracleError::Disconnected);
    }
    pseudo_inverse(&build_laplacian(net))
}

fn check_vertex(net: &ResistorNetwork, v: usize) -> Result<(), OracleError> {
    if v >= net.vertex_count() {
        Err(OracleError::VertexOutOfRange { vertex: v, count: net.vertex_count() })
    } else {
        Ok(())
    }
}

/// Effective resistance between `p` and `q` in ohms.
pub fn effective_resistance(net: &ResistorNetwork, p: usize, q: usize) -> Result<f64, OracleError> {
    check_vertex(net, p)?;
    check_vertex(net, q)?;
    if p == q {
        return Ok(0.0);
    }
    Ok(connected_pinv(net)?.resistance(p, q))
}

/// All pairwise effective resistances; symmetric with a zero diagonal.
#[allow(clippy::needless_range_loop)] // mirrored writes read clearer with indices
pub fn resistance_matrix(net: &ResistorNetwork) -> Result<Vec<Vec<f64>>, OracleError> {
    let pinv = connected_pinv(net)?;
    let n = net.vertex_count();
    let mut out = vec![vec![0.0; n]; n];
    for i in 0..n {
        for j in 0..i {
            let r = pinv.resistance(i, j);
            out[i][j] = r;
            out[j][i] = r;
        }
    }
    Ok(out)
}

/// Kirchhoff index: the sum of effective resistances over unordered
/// vertex pairs.
pub fn kirchhoff_index(net: &ResistorNetwork) -> Result<f64, OracleError> {
    let pinv = connected_pinv(net)?;
    let n = net.vertex_count();
    let mut acc = 0.0;
    for i in 0..n {
        for j in 0..i {
            acc += pinv.resistance(i, j);
        }
    }
    Ok(acc)
}
