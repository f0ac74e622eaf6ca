//! Closed-form resistance theory of the linear hexagonal chain `L_n`.
//!
//! Six base formulas cover the pair classes `p-p`, `q-p`, `u-p`, `v-p`,
//! `u-u` and `v-u` for ordered indices; every other family combination and
//! index order is first mapped onto these by the two chain automorphisms
//! (vertical flip `p↔q`/`u↔v`, horizontal mirror `i ↦ n−i`). The chain
//! sequences `z_n`, `t_n`, `x_n`, `y_n` and the `K₄` replacement of the
//! whole chain live here as well.

use crate::graph::ResistorNetwork;
use crate::quad::QuadNum;

use super::{alpha, ChainError, Family, VertexLabel};

/// `α^k`, exact, any integer exponent.
fn ap(k: i64) -> QuadNum {
    alpha().pow(k).expect("alpha is nonzero")
}

fn int(k: i64) -> QuadNum {
    QuadNum::integer(k)
}

fn sqrt2() -> QuadNum {
    QuadNum::sqrt2()
}

/// `z_n = r(p_n, q_n)`: the rung resistance, `-(2+2√2) + 4√2/(1−α^{2n+2})`.
pub fn seq_z(n: usize) -> QuadNum {
    let n = n as i64;
    let tail = (int(4) * sqrt2()) / (QuadNum::one() - ap(2 * n + 2));
    QuadNum::parts(-2, 1, -2, 1) + tail
}

/// `t_n = x_n − y_n = −4√2·α^{n+1}/(1−α^{2n+2})`; always rational.
pub fn seq_t(n: usize) -> QuadNum {
    let n = n as i64;
    (int(-4) * sqrt2() * ap(n + 1)) / (QuadNum::one() - ap(2 * n + 2))
}

/// `x_n = r(p_n, p_0) = 2√2/(1+α^{n+1}) − 1 − √2 + n`.
pub fn seq_x(n: usize) -> QuadNum {
    let k = n as i64;
    (int(2) * sqrt2()) / (QuadNum::one() + ap(k + 1)) + QuadNum::parts(k - 1, 1, -1, 1)
}

/// `y_n = r(p_n, q_0) = 2√2/(1−α^{n+1}) − 1 − √2 + n`.
pub fn seq_y(n: usize) -> QuadNum {
    let k = n as i64;
    (int(2) * sqrt2()) / (QuadNum::one() - ap(k + 1)) + QuadNum::parts(k - 1, 1, -1, 1)
}

/// `a_k = 1 + x_k`: end-to-end resistance of the capped chain `L_k'`.
pub fn seq_a(k: usize) -> QuadNum {
    QuadNum::one() + seq_x(k)
}

/// `b_k = 1 + y_k`.
pub fn seq_b(k: usize) -> QuadNum {
    QuadNum::one() + seq_y(k)
}

/// `c_k = 2 + z_k`.
pub fn seq_c(k: usize) -> QuadNum {
    int(2) + seq_z(k)
}

/// `A_n = r(p_n,q_n) + r(p_n,q_0) − r(p_n,p_0) = −2−2√2 + 4√2/(1−α^{n+1})`.
pub fn k4_a(n: usize) -> QuadNum {
    let k = n as i64;
    QuadNum::parts(-2, 1, -2, 1) + (int(4) * sqrt2()) / (QuadNum::one() - ap(k + 1))
}

/// `B_n = r(p_n,q_n) − r(p_n,q_0) + r(p_n,p_0) = −2−2√2 + 4√2/(1+α^{n+1})`.
pub fn k4_b(n: usize) -> QuadNum {
    let k = n as i64;
    QuadNum::parts(-2, 1, -2, 1) + (int(4) * sqrt2()) / (QuadNum::one() + ap(k + 1))
}

/// `C_n = −r(p_n,q_n) + r(p_n,q_0) + r(p_n,p_0) = 2n`.
pub fn k4_c(n: usize) -> QuadNum {
    int(2 * n as i64)
}

/// The three edge-resistance classes of the `K₄` replacement of `L_n` on
/// the corner vertices `(p_n, q_n, p_0, q_0)`: `w` on the rungs, `u` on the
/// straight sides, `t` on the diagonals.
///
/// At `n = 1` the diagonal branch carries no current at all — its
/// conductance `(1/A − 1/B + 1/C)/2` vanishes exactly — so `t` is an open
/// circuit and the equivalent degenerates to a 4-cycle; `t` is therefore
/// optional.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct K4Equivalent {
    pub w: QuadNum,
    pub u: QuadNum,
    pub t: Option<QuadNum>,
}

impl K4Equivalent {
    /// The 4-vertex network realizing the equivalence, with vertices
    /// ordered `(p_n, q_n, p_0, q_0)`.
    pub fn to_network(&self) -> ResistorNetwork {
        let names = ["p_n", "q_n", "p_0", "q_0"];
        let mut net = ResistorNetwork::with_names(names.iter().map(|s| s.to_string()).collect());
        net.add_edge(0, 1, self.w.clone()).expect("w > 0");
        net.add_edge(2, 3, self.w.clone()).expect("w > 0");
        net.add_edge(0, 2, self.u.clone()).expect("u > 0");
        net.add_edge(1, 3, self.u.clone()).expect("u > 0");
        if let Some(t) = &self.t {
            net.add_edge(0, 3, t.clone()).expect("t > 0");
            net.add_edge(1, 2, t.clone()).expect("t > 0");
        }
        net
    }
}

/// Solves the harmonic system `w∥t = A_n`, `u∥w = B_n`, `u∥t = C_n` for the
/// `K₄` edge classes.
pub fn k4_equivalent(n: usize) -> Result<K4Equivalent, ChainError> {
    if n < 1 {
        return Err(ChainError::K4TooSmall(n));
    }
    let ia = k4_a(n).inverse().expect("A_n > 0 for n ≥ 1");
    let ib = k4_b(n).inverse().expect("B_n > 0 for n ≥ 1");
    let ic = k4_c(n).inverse().expect("C_n > 0 for n ≥ 1");
    let two = int(2);
    let w = &two / &(&(&ia + &ib) - &ic);
    let u = &two / &(&(&ib + &ic) - &ia);
    let t_conductance_doubled = &(&ia + &ic) - &ib;
    let t = if t_conductance_doubled.is_zero() {
        None
    } else {
        Some(&two / &t_conductance_doubled)
    };
    debug_assert!(w.is_positive() && u.is_positive());
    debug_assert!(t.as_ref().is_none_or(QuadNum::is_positive));
    Ok(K4Equivalent { w, u, t })
}

// ---------------------------------------------------------------------------
// Base pair-class formulas, ordered indices
// ---------------------------------------------------------------------------

/// Common denominator `4√2·(1 − α^{2n+2})`.
fn denom4(n: i64) -> QuadNum {
    int(4) * sqrt2() * (QuadNum::one() - ap(2 * n + 2))
}

/// `r(p_i, p_j)` for `0 ≤ j ≤ i ≤ n`.
fn pp(n: i64, i: i64, j: i64) -> QuadNum {
    let head = QuadNum::one() - ap(i - j);
    let inner = int(2) - ap(i + j + 1)
        + ap(2 * j + 1)
        + ap(2 * n - 2 * i + 1) * (QuadNum::one() - ap(i - j) - int(2) * ap(i + j + 1));
    int(i - j) + (head * inner) / denom4(n)
}

/// `r(q_i, p_j)` for `0 ≤ j ≤ i ≤ n`.
fn qp(n: i64, i: i64, j: i64) -> QuadNum {
    let head = QuadNum::one() + ap(i - j);
    let inner = int(2) + ap(i + j + 1)
        + ap(2 * j + 1)
        + ap(2 * n - 2 * i + 1) * (QuadNum::one() + ap(i - j) + int(2) * ap(i + j + 1));
    int(i - j) + (head * inner) / denom4(n)
}

/// `r(u_i, p_j)` for `0 ≤ j ≤ i ≤ n−1`.
fn up(n: i64, i: i64, j: i64) -> QuadNum {
    let f = int(2) * ap(2 * i + 2)
        + ap(2 * n - 2 * j + 1)
        + int(2) * ap(2 * n - 2 * i)
        + ap(2 * n + 3)
        - ap(-i - j)
            * (alpha() + QuadNum::one())
            * (QuadNum::one() + ap(2 * j + 1))
            * (ap(2 * i) + ap(2 * n))
        + ap(-1)
        + ap(2 * j + 1);
    int(i - j) + f / denom4(n)
}

/// `r(v_i, p_j)` for `0 ≤ j ≤ i ≤ n−1`.
fn vp(n: i64, i: i64, j: i64) -> QuadNum {
    let g = int(2) * ap(2 * i + 2)
        + ap(2 * n - 2 * j + 1)
        + int(2) * ap(2 * n - 2 * i)
        + ap(2 * n + 3)
        + ap(-i - j)
            * (alpha() + QuadNum::one())
            * (QuadNum::one() + ap(2 * j + 1))
            * (ap(2 * i) + ap(2 * n))
        + ap(-1)
        + ap(2 * j + 1);
    int(i - j) + g / denom4(n)
}

/// `r(u_i, u_j)` for `0 ≤ j ≤ i ≤ n−1`.
fn uu(n: i64, i: i64, j: i64) -> QuadNum {
    let head = ap(i + 1) - ap(j + 1);
    let inner = ap(i + 1) - ap(j + 1) - int(2) * ap(-j - 1) + ap(2 * n - i - 2 * j - 1)
        - ap(2 * n - j - 2 * i - 1)
        + int(2) * ap(2 * n - i + 1);
    int(i - j) + (head * inner) / (int(2) * sqrt2() * (QuadNum::one() - ap(2 * n + 2)))
}

/// `r(v_i, u_j)` for `0 ≤ j ≤ i ≤ n−1`.
fn vu(n: i64, i: i64, j: i64) -> QuadNum {
    let head = ap(i + 1) + ap(j + 1);
    let inner = ap(i + 1)
        + ap(j + 1)
        + int(2) * ap(-j - 1)
        + ap(2 * n - i - 2 * j - 1)
        + ap(2 * n - j - 2 * i - 1)
        + int(2) * ap(2 * n - i + 1);
    int(i - j) + (head * inner) / (int(2) * sqrt2() * (QuadNum::one() - ap(2 * n + 2)))
}

// ---------------------------------------------------------------------------
// Dispatch over all ten family combinations
// ---------------------------------------------------------------------------

/// Exact resistance between any two vertices of `L_n`.
pub fn resistance_linear(n: usize, a: VertexLabel, b: VertexLabel) -> Result<QuadNum, ChainError> {
    let kind = super::ChainKind::linear(n)?;
    kind.check_label(a)?;
    kind.check_label(b)?;
    if a == b {
        return Ok(QuadNum::zero());
    }
    Ok(route(n as i64, a, b))
}

/// Routes an arbitrary valid pair into a base formula using the vertical
/// flip and the horizontal mirror.
fn route(n: i64, a: VertexLabel, b: VertexLabel) -> QuadNum {
    use Family::*;
    let (x, y) = (a.index as i64, b.index as i64);
    let hi = x.max(y);
    let lo = x.min(y);
    match (a.family, b.family) {
        // Same family: both orders coincide.
        (P, P) | (Q, Q) => pp(n, hi, lo),
        // r(q_i, p_j) with i ≥ j covers both orders via the vertical flip.
        (P, Q) | (Q, P) => qp(n, hi, lo),
        (U, U) | (V, V) => uu(n, hi, lo),
        // The v-role takes the larger index, again via the vertical flip.
        (U, V) | (V, U) => vu(n, hi, lo),
        // Rung-interior pairs: formulas need the interior index ≥ the rung
        // index; otherwise mirror left-right first.
        (P, U) => pu_pair(n, x, y),
        (U, P) => pu_pair(n, y, x),
        (Q, V) => pu_pair(n, x, y),
        (V, Q) => pu_pair(n, y, x),
        (P, V) => pv_pair(n, x, y),
        (V, P) => pv_pair(n, y, x),
        (Q, U) => pv_pair(n, x, y),
        (U, Q) => pv_pair(n, y, x),
    }
}

/// `r(p_j, u_i)` for arbitrary valid indices (`j ≤ n`, `i ≤ n−1`).
fn pu_pair(n: i64, p_idx: i64, u_idx: i64) -> QuadNum {
    if p_idx <= u_idx {
        up(n, u_idx, p_idx)
    } else {
        // mirror: p_j ↦ p_{n−j}, u_i ↦ u_{n−1−i}
        up(n, n - 1 - u_idx, n - p_idx)
    }
}

/// `r(p_j, v_i)` for arbitrary valid indices.
fn pv_pair(n: i64, p_idx: i64, v_idx: i64) -> QuadNum {
    if p_idx <= v_idx {
        vp(n, v_idx, p_idx)
    } else {
        vp(n, n - 1 - v_idx, n - p_idx)
    }
}

/// Kirchhoff index of `L_n`, exact.
pub fn kirchhoff_linear(n: usize) -> QuadNum {
    let k = n as i64;
    let a2 = ap(2 * k + 2);
    let lead = int(1 + 2 * k);
    let pos = QuadNum::parts(21, 1, -6, 1) + int(2 * k) * QuadNum::parts(8, 1, 9, 1);
    let neg = QuadNum::parts(21, 1, 6, 1) + int(2 * k) * QuadNum::parts(8, 1, -9, 1);
    let frac = (&lead * (pos - a2.clone() * neg)) / (int(12) * (QuadNum::one() - a2));
    let cubic = QuadNum::ratio(4, 3) * lead * int(k) * int(k);
    frac + cubic
}
