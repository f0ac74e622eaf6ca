//! Closed-form resistance theory of the hexagonal cylinder chain `R_n`.
//!
//! `R_n` is vertex-index cyclic: rotating every index and mirroring are
//! automorphisms, so each pair class only needs its `(x_1, y_i)` form. The
//! six base formulas below all take the cyclic gap `i = ((other − anchor)
//! mod n) + 1 ∈ [1, n]` and are exactly invariant under the reflection
//! that swaps a gap with its complement, which makes the anchoring choice
//! irrelevant.

use crate::quad::{QuadNum, Rational};

use super::{alpha, ChainError, Family, VertexLabel};

fn ap(k: i64) -> QuadNum {
    alpha().pow(k).expect("alpha is nonzero")
}

fn int(k: i64) -> QuadNum {
    QuadNum::integer(k)
}

fn sqrt2() -> QuadNum {
    QuadNum::sqrt2()
}

/// The exact rational walk term `(n−i+1)(i−1)/n`.
fn walk_term(n: i64, i: i64) -> QuadNum {
    QuadNum::from_rational(Rational::new(((n - i + 1) * (i - 1)).into(), n.into()))
}

/// `r(p_1, p_i) = (1+α^n−α^{n−i+1}−α^{i−1}) / (2√2(1−α^n)) + (n−i+1)(i−1)/n`.
fn pp(n: i64, i: i64) -> QuadNum {
    let num = QuadNum::one() + ap(n) - ap(n - i + 1) - ap(i - 1);
    num / (int(2) * sqrt2() * (QuadNum::one() - ap(n))) + walk_term(n, i)
}

/// `r(p_1, q_i)`: the `+α` variant of [`pp`].
fn pq(n: i64, i: i64) -> QuadNum {
    let num = QuadNum::one() + ap(n) + ap(n - i + 1) + ap(i - 1);
    num / (int(2) * sqrt2() * (QuadNum::one() - ap(n))) + walk_term(n, i)
}

/// `r(u_1, u_i)`: twice the [`pp`] spectral part.
fn uu(n: i64, i: i64) -> QuadNum {
    let num = QuadNum::one() + ap(n) - ap(n - i + 1) - ap(i - 1);
    num / (sqrt2() * (QuadNum::one() - ap(n))) + walk_term(n, i)
}

/// `r(u_1, v_i)`: the `+α` variant of [`uu`].
fn uv(n: i64, i: i64) -> QuadNum {
    let num = QuadNum::one() + ap(n) + ap(n - i + 1) + ap(i - 1);
    num / (sqrt2() * (QuadNum::one() - ap(n))) + walk_term(n, i)
}

/// `r(p_1, u_i)`; valid on all of `1 ≤ i ≤ n` (the `i = n` evaluation uses
/// `α⁻¹` and collapses exactly onto `i = 1`).
fn pu(n: i64, i: i64) -> QuadNum {
    let num = QuadNum::parts(11, 1, 2, 1)
        - QuadNum::parts(20, 1, 14, 1) * ap(i + 1)
        - QuadNum::parts(20, 1, -14, 1) * ap(n - i - 1)
        - QuadNum::parts(5, 1, 2, 1) * ap(n);
    let spectral = num / (int(4) * sqrt2() * (QuadNum::one() - ap(n)));
    let square = QuadNum::from_rational(Rational::new(((2 * i - 1) * (2 * i - 1)).into(), (4 * n).into()));
    spectral - square + QuadNum::parts(i - 1, 1, -1, 1)
}

/// `r(p_1, v_i)`: the `+` variant of [`pu`].
fn pv(n: i64, i: i64) -> QuadNum {
    let num = QuadNum::parts(11, 1, 2, 1)
        + QuadNum::parts(20, 1, 14, 1) * ap(i + 1)
        + QuadNum::parts(20, 1, -14, 1) * ap(n - i - 1)
        - QuadNum::parts(5, 1, 2, 1) * ap(n);
    let spectral = num / (int(4) * sqrt2() * (QuadNum::one() - ap(n)));
    let square = QuadNum::from_rational(Rational::new(((2 * i - 1) * (2 * i - 1)).into(), (4 * n).into()));
    spectral - square + QuadNum::parts(i - 1, 1, -1, 1)
}

/// Exact resistance between any two vertices of `R_n` (`n ≥ 3`, indices in
/// `1..=n`).
pub fn resistance_cylinder(
    n: usize,
    a: VertexLabel,
    b: VertexLabel,
) -> Result<QuadNum, ChainError> {
    let kind = super::ChainKind::cylinder(n)?;
    kind.check_label(a)?;
    kind.check_label(b)?;
    if a == b {
        return Ok(QuadNum::zero());
    }
    let n = n as i64;
    // Cyclic gap measured from `anchor` to `other`, shifted to [1, n].
    let gap = |anchor: VertexLabel, other: VertexLabel| -> i64 {
        let d = (other.index as i64 - anchor.index as i64).rem_euclid(n);
        d + 1
    };
    use Family::*;
    let value = match (a.family, b.family) {
        (P, P) | (Q, Q) => pp(n, gap(a, b)),
        (U, U) | (V, V) => uu(n, gap(a, b)),
        // Vertical flip maps (q, p) onto (p, q) keeping indices.
        (P, Q) | (Q, P) => pq(n, gap(a, b)),
        (U, V) | (V, U) => uv(n, gap(a, b)),
        (P, U) | (Q, V) => pu(n, gap(a, b)),
        (U, P) | (V, Q) => pu(n, gap(b, a)),
        (P, V) | (Q, U) => pv(n, gap(a, b)),
        (V, P) | (U, Q) => pv(n, gap(b, a)),
    };
    Ok(value)
}

/// Kirchhoff index of `R_n`: `(4n³−n)/3 + 3√2·n²·(1+α^n)/(1−α^n)`, exact.
pub fn kirchhoff_cylinder(n: usize) -> QuadNum {
    assert!(n >= 1, "kirchhoff_cylinder needs n ≥ 1");
    let k = n as i64;
    let cubic = QuadNum::from_rational(Rational::new((4 * k * k * k - k).into(), 3.into()));
    let an = ap(k);
    let spectral = int(3) * sqrt2() * int(k * k) * (QuadNum::one() + &an)
        / (QuadNum::one() - &an);
    cubic + spectral
}
