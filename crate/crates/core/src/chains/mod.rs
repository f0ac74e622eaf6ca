//! Hexagonal chain graphs and their closed-form resistance theory.
//!
//! Two families are covered, both with unit resistors on every edge:
//!
//! * the linear hexagonal chain `L_n` — `n` hexagons fused in a row, order
//!   `4n+2`, size `5n+1`, vertices labelled `p_i`, `q_i` (rung ends, index
//!   `0..=n`) and `u_i`, `v_i` (top/bottom interior, index `0..n`);
//! * the hexagonal cylinder chain `R_n` — the same band with its lateral
//!   rungs identified, order `4n`, size `5n`, indices `1..=n` wrapping
//!   modulo `n`. `n ≥ 3` keeps the graph simple.
//!
//! Every vertex pair resistance evaluates exactly in ℚ(√2) through a small
//! set of base formulas closed under the chain automorphisms (the p↔q
//! vertical flip, the left-right mirror, and for `R_n` the rotations).

mod cylinder;
mod linear;

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::graph::ResistorNetwork;
use crate::quad::QuadNum;

pub use cylinder::{kirchhoff_cylinder, resistance_cylinder};
pub use linear::{
    k4_a, k4_b, k4_c, k4_equivalent, kirchhoff_linear, resistance_linear, seq_a, seq_b, seq_c,
    seq_t, seq_x, seq_y, seq_z, K4Equivalent,
};

/// The decay constant α = 3 − 2√2 of all closed forms; 0 < α < 1 and
/// α·(3 + 2√2) = 1.
pub fn alpha() -> QuadNum {
    QuadNum::parts(3, 1, -2, 1)
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ChainError {
    #[error("linear chains need n ≥ 1 (got {0})")]
    LinearTooSmall(usize),
    #[error("cylinder chains need n ≥ 3 to stay simple (got {0})")]
    CylinderTooSmall(usize),
    #[error("label {label} is out of range for {chain}")]
    LabelOutOfRange { label: VertexLabel, chain: String },
    #[error("invalid vertex label `{0}`: expected `family:index` like `p:0`")]
    ParseLabel(String),
    #[error("the K₄ equivalent is defined for n ≥ 1 (got {0})")]
    K4TooSmall(usize),
}

/// Vertex family of a chain coordinate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    P,
    Q,
    U,
    V,
}

impl Family {
    pub fn letter(self) -> char {
        match self {
            Family::P => 'p',
            Family::Q => 'q',
            Family::U => 'u',
            Family::V => 'v',
        }
    }

    /// Partner under the vertical (top-bottom) flip.
    pub fn flipped(self) -> Family {
        match self {
            Family::P => Family::Q,
            Family::Q => Family::P,
            Family::U => Family::V,
            Family::V => Family::U,
        }
    }

    fn is_rung(self) -> bool {
        matches!(self, Family::P | Family::Q)
    }
}

/// Chain coordinate: family plus index.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexLabel {
    pub family: Family,
    pub index: usize,
}

impl VertexLabel {
    pub fn new(family: Family, index: usize) -> Self {
        VertexLabel { family, index }
    }

    /// Name used in generated networks, e.g. `p_3`.
    pub fn vertex_name(&self) -> String {
        format!("{}_{}", self.family.letter(), self.index)
    }
}

/// Shorthand constructors: `p(3)` is the label `p:3`.
pub fn p(index: usize) -> VertexLabel {
    VertexLabel::new(Family::P, index)
}
pub fn q(index: usize) -> VertexLabel {
    VertexLabel::new(Family::Q, index)
}
pub fn u(index: usize) -> VertexLabel {
    VertexLabel::new(Family::U, index)
}
pub fn v(index: usize) -> VertexLabel {
    VertexLabel::new(Family::V, index)
}

impl fmt::Display for VertexLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.family.letter(), self.index)
    }
}

impl FromStr for VertexLabel {
    type Err = ChainError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || ChainError::ParseLabel(s.to_string());
        let (fam, idx) = s.trim().split_once(':').ok_or_else(err)?;
        let family = match fam.trim() {
            "p" => Family::P,
            "q" => Family::Q,
            "u" => Family::U,
            "v" => Family::V,
            _ => return Err(err()),
        };
        let index = idx.trim().parse().map_err(|_| err())?;
        Ok(VertexLabel { family, index })
    }
}

/// Which chain, and how many hexagons.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ChainKind {
    Linear { n: usize },
    Cylinder { n: usize },
}

impl ChainKind {
    pub fn linear(n: usize) -> Result<Self, ChainError> {
        if n < 1 {
            return Err(ChainError::LinearTooSmall(n));
        }
        Ok(ChainKind::Linear { n })
    }

    pub fn cylinder(n: usize) -> Result<Self, ChainError> {
        if n < 3 {
            return Err(ChainError::CylinderTooSmall(n));
        }
        Ok(ChainKind::Cylinder { n })
    }

    pub fn n(&self) -> usize {
        match *self {
            ChainKind::Linear { n } | ChainKind::Cylinder { n } => n,
        }
    }

    pub fn kind_name(&self) -> &'static str {
        match self {
            ChainKind::Linear { .. } => "linear",
            ChainKind::Cylinder { .. } => "cylinder",
        }
    }

    /// Number of vertices: `4n+2` for `L_n`, `4n` for `R_n`.
    pub fn order(&self) -> usize {
        match *self {
            ChainKind::Linear { n } => 4 * n + 2,
            ChainKind::Cylinder { n } => 4 * n,
        }
    }

    /// Number of edges: `5n+1` for `L_n`, `5n` for `R_n`.
    pub fn size(&self) -> usize {
        match *self {
            ChainKind::Linear { n } => 5 * n + 1,
            ChainKind::Cylinder { n } => 5 * n,
        }
    }

    pub fn check_label(&self, label: VertexLabel) -> Result<(), ChainError> {
        let ok = match *self {
            ChainKind::Linear { n } => {
                if label.family.is_rung() {
                    label.index <= n
                } else {
                    label.index < n
                }
            }
            ChainKind::Cylinder { n } => (1..=n).contains(&label.index),
        };
        if ok {
            Ok(())
        } else {
            Err(ChainError::LabelOutOfRange {
                label,
                chain: format!("{} n={}", self.kind_name(), self.n()),
            })
        }
    }

    /// All labels, ordered to match the vertex indices of
    /// [`build_chain`]: the `p` family first, then `q`, `u`, `v`.
    pub fn labels(&self) -> Vec<VertexLabel> {
        let mut out = Vec::with_capacity(self.order());
        let range = |rung: bool| -> std::ops::RangeInclusive<usize> {
            match *self {
                ChainKind::Linear { n } => {
                    if rung {
                        0..=n
                    } else {
                        0..=n - 1
                    }
                }
                ChainKind::Cylinder { n } => 1..=n,
            }
        };
        for family in [Family::P, Family::Q, Family::U, Family::V] {
            for i in range(family.is_rung()) {
                out.push(VertexLabel::new(family, i));
            }
        }
        out
    }

    /// Vertex index of a label in the generated network.
    pub fn vertex_index(&self, label: VertexLabel) -> Result<usize, ChainError> {
        self.check_label(label)?;
        Ok(match *self {
            ChainKind::Linear { n } => {
                let i = label.index;
                match label.family {
                    Family::P => i,
                    Family::Q => n + 1 + i,
                    Family::U => 2 * n + 2 + i,
                    Family::V => 3 * n + 2 + i,
                }
            }
            ChainKind::Cylinder { n } => {
                let i = label.index - 1;
                match label.family {
                    Family::P => i,
                    Family::Q => n + i,
                    Family::U => 2 * n + i,
                    Family::V => 3 * n + i,
                }
            }
        })
    }

    /// Closed-form resistance between two labelled vertices.
    pub fn resistance(&self, a: VertexLabel, b: VertexLabel) -> Result<QuadNum, ChainError> {
        match *self {
            ChainKind::Linear { n } => resistance_linear(n, a, b),
            ChainKind::Cylinder { n } => resistance_cylinder(n, a, b),
        }
    }

    /// Closed-form Kirchhoff index.
    pub fn kirchhoff(&self) -> QuadNum {
        match *self {
            ChainKind::Linear { n } => kirchhoff_linear(n),
            ChainKind::Cylinder { n } => kirchhoff_cylinder(n),
        }
    }

    // --- automorphisms -----------------------------------------------------

    /// Top-bottom flip `p↔q`, `u↔v`.
    pub fn vertical_flip(&self, label: VertexLabel) -> VertexLabel {
        VertexLabel::new(label.family.flipped(), label.index)
    }

    /// Left-right mirror. For `L_n`: `p_i → p_{n−i}`, `u_i → u_{n−1−i}`.
    /// For `R_n`: the reflection fixing rung 1, `p_i → p_{2−i}`,
    /// `u_i → u_{1−i}` (indices mod `n`).
    pub fn mirror(&self, label: VertexLabel) -> VertexLabel {
        match *self {
            ChainKind::Linear { n } => {
                let i = if label.family.is_rung() {
                    n - label.index
                } else {
                    n - 1 - label.index
                };
                VertexLabel::new(label.family, i)
            }
            ChainKind::Cylinder { n } => {
                let target = if label.family.is_rung() { 2 } else { 1 };
                let i = wrap(target + n as i64 - label.index as i64, n);
                VertexLabel::new(label.family, i)
            }
        }
    }

    /// Rotation by `s` hexagons (cylinder only; identity on linear chains).
    pub fn rotate(&self, label: VertexLabel, s: usize) -> VertexLabel {
        match *self {
            ChainKind::Linear { .. } => label,
            ChainKind::Cylinder { n } => {
                VertexLabel::new(label.family, wrap(label.index as i64 + s as i64, n))
            }
        }
    }

    /// Orbit of an unordered pair under the chain automorphism group
    /// (vertical flip and mirror, plus rotations for `R_n`). Pairs are
    /// returned sorted and deduplicated.
    pub fn pair_orbit(&self, a: VertexLabel, b: VertexLabel) -> Vec<(VertexLabel, VertexLabel)> {
        let mut out = Vec::new();
        let rotations = match self {
            ChainKind::Linear { .. } => 1,
            ChainKind::Cylinder { n } => *n,
        };
        for s in 0..rotations {
            for mirrored in [false, true] {
                for flipped in [false, true] {
                    let map = |l: VertexLabel| {
                        let mut l = self.rotate(l, s);
                        if mirrored {
                            l = self.mirror(l);
                        }
                        if flipped {
                            l = self.vertical_flip(l);
                        }
                        l
                    };
                    let (x, y) = (map(a), map(b));
                    out.push(if x <= y { (x, y) } else { (y, x) });
                }
            }
        }
        out.sort_unstable();
        out.dedup();
        out
    }
}

/// Wraps a 1-based cyclic index into `1..=n`.
fn wrap(i: i64, n: usize) -> usize {
    let n = n as i64;
    (((i - 1) % n + n) % n + 1) as usize
}

/// Builds the unit-resistance chain network. Vertex names follow the label
/// convention (`p_0`, `u_3`, ...), and vertex indices agree with
/// [`ChainKind::vertex_index`].
pub fn build_chain(kind: ChainKind) -> ResistorNetwork {
    let labels = kind.labels();
    let mut net = ResistorNetwork::with_names(labels.iter().map(|l| l.vertex_name()).collect());
    let vx = |l: VertexLabel| kind.vertex_index(l).expect("generator label in range");
    let mut connect = |a: VertexLabel, b: VertexLabel| {
        net.add_edge(vx(a), vx(b), QuadNum::one())
            .expect("generator edges are valid");
    };
    match kind {
        ChainKind::Linear { n } => {
            for i in 0..=n {
                connect(p(i), q(i));
            }
            for i in 0..n {
                connect(p(i), u(i));
                connect(u(i), p(i + 1));
                connect(q(i), v(i));
                connect(v(i), q(i + 1));
            }
        }
        ChainKind::Cylinder { n } => {
            for i in 1..=n {
                connect(p(i), q(i));
            }
            for i in 1..=n {
                let next = if i == n { 1 } else { i + 1 };
                connect(p(i), u(i));
                connect(u(i), p(next));
                connect(q(i), v(i));
                connect(v(i), q(next));
            }
        }
    }
    debug_assert_eq!(net.vertex_count(), kind.order());
    debug_assert_eq!(net.edge_count(), kind.size());
    net
}

/// The extremal resistance pairs of a chain with their exact values.
#[derive(Debug, Clone)]
pub struct ExtremalPairs {
    pub max_pair: (VertexLabel, VertexLabel),
    pub max_value: QuadNum,
    pub min_pair: (VertexLabel, VertexLabel),
    pub min_value: QuadNum,
}

/// Maximum and minimum resistance pairs.
///
/// For `L_n` the maximum sits at `(p_0, q_n)` and the minimum at the middle
/// rung `(p_⌊n/2⌋, q_⌊n/2⌋)`; for `R_n` the maximum is `(u_1, v_⌊(n+2)/2⌋)`
/// and the minimum the rung `(p_1, q_1)`.
pub fn extremal_pairs(kind: ChainKind) -> ExtremalPairs {
    match kind {
        ChainKind::Linear { n } => {
            let max_pair = (p(0), q(n));
            let mid = n / 2;
            let min_pair = (p(mid), q(mid));
            ExtremalPairs {
                max_value: kind.resistance(max_pair.0, max_pair.1).unwrap(),
                min_value: kind.resistance(min_pair.0, min_pair.1).unwrap(),
                max_pair,
                min_pair,
            }
        }
        ChainKind::Cylinder { n } => {
            let max_pair = (u(1), v((n + 2) / 2));
            let min_pair = (p(1), q(1));
            ExtremalPairs {
                max_value: kind.resistance(max_pair.0, max_pair.1).unwrap(),
                min_value: kind.resistance(min_pair.0, min_pair.1).unwrap(),
                max_pair,
                min_pair,
            }
        }
    }
}

/// A named asymptotic constant of a chain family.
#[derive(Debug, Clone)]
pub struct AsymptoticLimit {
    pub name: &'static str,
    pub description: &'static str,
    pub value: QuadNum,
}

/// The asymptotic constants of the family as exact values.
pub fn asymptotic_limits(kind: ChainKind) -> Vec<AsymptoticLimit> {
    let lim = |name, description, value| AsymptoticLimit { name, description, value };
    match kind {
        ChainKind::Linear { .. } => vec![
            lim(
                "min-rung limit",
                "limit of the middle-rung resistance r(p_⌊n/2⌋, q_⌊n/2⌋) as n → ∞",
                QuadNum::parts(0, 1, 1, 2),
            ),
            lim(
                "adjacent-top limit",
                "limit of r(p_⌊(n−1)/2⌋+1, p_⌊(n−1)/2⌋) as n → ∞",
                QuadNum::parts(2, 1, -1, 2),
            ),
            lim(
                "end-to-end slope",
                "limit of r(p_n, p_0)/n and r(q_n, p_0)/n",
                QuadNum::one(),
            ),
            lim(
                "end-to-end increment",
                "limit of r(p_{n+1}, p_0) in L_{n+1} minus r(p_n, p_0) in L_n",
                QuadNum::one(),
            ),
        ],
        ChainKind::Cylinder { .. } => vec![
            lim(
                "antipodal slope",
                "limit of r(p_1, p_⌊(n+2)/2⌋)/n and r(p_1, q_⌊(n+2)/2⌋)/n",
                QuadNum::ratio(1, 4),
            ),
            lim(
                "antipodal increment",
                "limit of r(p_1, p_⌊(n+3)/2⌋) in R_{n+1} minus r(p_1, p_⌊(n+2)/2⌋) in R_n",
                QuadNum::ratio(1, 4),
            ),
            lim(
                "adjacent-top limit",
                "limit of r(p_1, p_2) as n → ∞",
                QuadNum::parts(2, 1, -1, 2),
            ),
            lim(
                "min-rung limit",
                "limit of r(p_1, q_1) as n → ∞",
                QuadNum::parts(0, 1, 1, 2),
            ),
            lim(
                "Kf ratio",
                "limit of Kf(R_n)/Kf(L_n) as n → ∞",
                QuadNum::ratio(1, 2),
            ),
        ],
    }
}
