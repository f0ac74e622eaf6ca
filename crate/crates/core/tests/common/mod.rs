//! Shared helpers for the integration suites: seeded generators and small
//! independent numeric oracles (kept free of the library's solver path).
//! Each test binary uses its own subset.
#![allow(dead_code)]
#![allow(clippy::needless_range_loop)] // dense matrix code reads clearer indexed

use hexohm::{QuadNum, ResistorNetwork};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Small positive rational resistance.
pub fn random_resistance(rng: &mut ChaCha8Rng) -> QuadNum {
    QuadNum::ratio(rng.gen_range(1..=12), rng.gen_range(1..=6))
}

/// Random ℚ(√2) element with small coefficients.
pub fn random_quad(rng: &mut ChaCha8Rng) -> QuadNum {
    QuadNum::parts(
        rng.gen_range(-30..=30),
        rng.gen_range(1..=9),
        rng.gen_range(-30..=30),
        rng.gen_range(1..=9),
    )
}

/// Random connected multigraph: a random spanning tree plus up to
/// `max_extra` extra edges, rational resistances throughout.
pub fn random_connected_net(
    rng: &mut ChaCha8Rng,
    max_vertices: usize,
    max_extra: usize,
) -> ResistorNetwork {
    let n = rng.gen_range(2..=max_vertices.max(2));
    let mut net = ResistorNetwork::new(n);
    for v in 1..n {
        let u = rng.gen_range(0..v);
        net.add_edge(u, v, random_resistance(rng)).unwrap();
    }
    for _ in 0..rng.gen_range(0..=max_extra) {
        let u = rng.gen_range(0..n);
        let v = rng.gen_range(0..n);
        if u != v {
            net.add_edge(u, v, random_resistance(rng)).unwrap();
        }
    }
    net
}

/// Eigenvalues of a symmetric matrix by cyclic Jacobi rotations. Written
/// here as an independent route; it never touches the library solver.
pub fn jacobi_eigenvalues(mut a: Vec<f64>, n: usize) -> Vec<f64> {
    assert_eq!(a.len(), n * n);
    for _sweep in 0..200 {
        let mut off = 0.0;
        for i in 0..n {
            for j in i + 1..n {
                off += a[i * n + j] * a[i * n + j];
            }
        }
        if off < 1e-26 {
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[p * n + q];
                if apq.abs() < 1e-30 {
                    continue;
                }
                let theta = (a[q * n + q] - a[p * n + p]) / (2.0 * apq);
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
            }
        }
    }
    (0..n).map(|i| a[i * n + i]).collect()
}

/// Shortest-path distances from `source` with edge weights equal to the
/// resistances (a Dijkstra pass over the multigraph).
pub fn shortest_resistance_paths(net: &ResistorNetwork, source: usize) -> Vec<f64> {
    let n = net.vertex_count();
    let mut dist = vec![f64::INFINITY; n];
    let mut done = vec![false; n];
    dist[source] = 0.0;
    for _ in 0..n {
        let mut best = None;
        for v in 0..n {
            if !done[v] && dist[v].is_finite() {
                best = match best {
                    Some(b) if dist[b] <= dist[v] => Some(b),
                    _ => Some(v),
                };
            }
        }
        let Some(v) = best else { break };
        done[v] = true;
        for e in net.edges() {
            let (a, b) = (e.u, e.v);
            let w = e.resistance.to_f64();
            if a == v && dist[v] + w < dist[b] {
                dist[b] = dist[v] + w;
            }
            if b == v && dist[v] + w < dist[a] {
                dist[a] = dist[v] + w;
            }
        }
    }
    dist
}
