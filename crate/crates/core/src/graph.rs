//! Resistor-network representation and weighted Laplacian construction.
//!
//! A [`ResistorNetwork`] is an undirected multigraph whose edges carry
//! positive resistances (ohms). Resistances are exact [`QuadNum`]s so the
//! same type serves plain rational netlists and the ℚ(√2)-valued equivalent
//! circuits produced by the chain machinery; the textual network format
//! only admits rationals.

use std::collections::VecDeque;
use std::fmt;

use thiserror::Error;

use crate::quad::QuadNum;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("self-loop at vertex {0} is not allowed")]
    SelfLoop(usize),
    #[error("edge {u}-{v} has non-positive resistance")]
    NonPositiveResistance { u: usize, v: usize },
    #[error("vertex {vertex} out of range for network of {count} vertices")]
    VertexOutOfRange { vertex: usize, count: usize },
    #[error("network file line {line}: {message}")]
    Parse { line: usize, message: String },
}

/// One resistor between two vertex indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Edge {
    pub u: usize,
    pub v: usize,
    pub resistance: QuadNum,
}

/// Undirected multigraph with positive edge resistances. Parallel edges are
/// allowed; self-loops are not.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResistorNetwork {
    names: Vec<String>,
    edges: Vec<Edge>,
}

impl ResistorNetwork {
    /// Empty network with `vertex_count` vertices named by their index.
    pub fn new(vertex_count: usize) -> Self {
        ResistorNetwork {
            names: (0..vertex_count).map(|i| i.to_string()).collect(),
            edges: Vec::new(),
        }
    }

    /// Empty network adopting the given vertex names.
    pub fn with_names(names: Vec<String>) -> Self {
        ResistorNetwork { names, edges: Vec::new() }
    }

    pub fn vertex_count(&self) -> usize {
        self.names.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn name(&self, v: usize) -> &str {
        &self.names[v]
    }

    pub fn set_name(&mut self, v: usize, name: impl Into<String>) -> Result<(), GraphError> {
        self.check_vertex(v)?;
        self.names[v] = name.into();
        Ok(())
    }

    pub fn vertex_by_name(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    fn check_vertex(&self, v: usize) -> Result<(), GraphError> {
        if v >= self.vertex_count() {
            Err(GraphError::VertexOutOfRange { vertex: v, count: self.vertex_count() })
        } else {
            Ok(())
        }
    }

    /// Adds a resistor of `resistance` ohms between `u` and `v`.
    pub fn add_edge(&mut self, u: usize, v: usize, resistance: QuadNum) -> Result<(), GraphError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        if !resistance.is_positive() {
            return Err(GraphError::NonPositiveResistance { u, v });
        }
        self.edges.push(Edge { u, v, resistance });
        Ok(())
    }

    /// Number of edge endpoints incident to `v` (parallel edges count each).
    pub fn degree(&self, v: usize) -> usize {
        self.edges.iter().filter(|e| e.u == v || e.v == v).count()
    }

    /// Breadth-first connectivity; the empty network is connected by
    /// convention.
    pub fn is_connected(&self) -> bool {
        let n = self.vertex_count();
        if n <= 1 {
            return true;
        }
        let mut adj = vec![Vec::new(); n];
        for e in &self.edges {
            adj[e.u].push(e.v);
            adj[e.v].push(e.u);
        }
        let mut seen = vec![false; n];
        let mut queue = VecDeque::from([0usize]);
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = queue.pop_front() {
            for &w in &adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    queue.push_back(w);
                }
            }
        }
        count == n
    }

    /// Parses the line-oriented network format:
    ///
    /// ```text
    /// vertices <count>
    /// name <index> <string>            # optional
    /// edge <u> <v> <resistance>        # resistance is a positive rational
    /// ```
    ///
    /// Blank lines and `#` comments are ignored.
    pub fn parse(text: &str) -> Result<Self, GraphError> {
        let fail = |line: usize, message: &str| GraphError::Parse {
            line,
            message: message.to_string(),
        };
        let mut net: Option<ResistorNetwork> = None;
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = match raw.find('#') {
                Some(pos) => &raw[..pos],
                None => raw,
            }
            .trim();
            if line.is_empty() {
                continue;
            }
            let mut tokens = line.split_whitespace();
            let keyword = tokens.next().unwrap();
            match keyword {
                "vertices" => {
                    if net.is_some() {
                        return Err(fail(line_no, "duplicate `vertices` header"));
                    }
                    let count: usize = tokens
                        .next()
                        .and_then(|t| t.parse().ok())
                        .ok_or_else(|| fail(line_no, "expected `vertices <count>`"))?;
                    net = Some(ResistorNetwork::new(count));
                }
                "name" => {
                    let net = net
                        .as_mut()
                        .ok_or_else(|| fail(line_no, "`vertices` header must come first"))?;
                    let v: usize = tokens
                        .next()
                        .and_then(|t| t.parse().ok())
                        .ok_or_else(|| fail(line_no, "expected `name <index> <string>`"))?;
                    let name = tokens.collect::<Vec<_>>().join(" ");
                    if name.is_empty() {
                        return Err(fail(line_no, "expected `name <index> <string>`"));
                    }
                    net.set_name(v, name)
                        .map_err(|e| fail(line_no, &e.to_string()))?;
                }
                "edge" => {
                    let net = net
                        .as_mut()
                        .ok_or_else(|| fail(line_no, "`vertices` header must come first"))?;
                    let mut next = || {
                        tokens
                            .next()
                            .ok_or_else(|| fail(line_no, "expected `edge <u> <v> <resistance>`"))
                    };
                    let u: usize = next()?
                        .parse()
                        .map_err(|_| fail(line_no, "bad vertex index"))?;
                    let v: usize = next()?
                        .parse()
                        .map_err(|_| fail(line_no, "bad vertex index"))?;
                    let r: QuadNum = next()?
                        .parse()
                        .map_err(|_| fail(line_no, "bad resistance; expected a rational like 5/6"))?;
                    if !r.is_rational() {
                        return Err(fail(line_no, "network files carry rational resistances only"));
                    }
                    if tokens.next().is_some() {
                        return Err(fail(line_no, "trailing tokens after edge"));
                    }
                    net.add_edge(u, v, r)
                        .map_err(|e| fail(line_no, &e.to_string()))?;
                }
                other => return Err(fail(line_no, &format!("unknown keyword `{other}`"))),
            }
        }
        net.ok_or_else(|| fail(0, "missing `vertices` header"))
    }
}

impl fmt::Display for ResistorNetwork {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "network({} vertices, {} edges)",
            self.vertex_count(),
            self.edge_count()
        )
    }
}

/// Symmetric conductance-weighted Laplacian with exact entries: diagonal
/// holds the incident conductance sums, entry (i, j) the negated conductance
/// between i and j, so every row sums to exactly zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LaplacianMatrix {
    n: usize,
    entries: Vec<QuadNum>,
}

impl LaplacianMatrix {
    pub fn dimension(&self) -> usize {
        self.n
    }

    pub fn entry(&self, i: usize, j: usize) -> &QuadNum {
        &self.entries[i * self.n + j]
    }

    pub fn row_sum(&self, i: usize) -> QuadNum {
        let mut acc = QuadNum::zero();
        for j in 0..self.n {
            acc = &acc + self.entry(i, j);
        }
        acc
    }

    /// Row-major f64 copy for the numeric solver.
    pub fn to_f64(&self) -> Vec<f64> {
        self.entries.iter().map(QuadNum::to_f64).collect()
    }
}

/// Builds the conductance-weighted Laplacian; parallel edges accumulate.
pub fn build_laplacian(net: &ResistorNetwork) -> LaplacianMatrix {
    let n = net.vertex_count();
    let mut entries = vec![QuadNum::zero(); n * n];
    for e in net.edges() {
        let g = QuadNum::one() / &e.resistance;
        entries[e.u * n + e.u] = &entries[e.u * n + e.u] + &g;
        entries[e.v * n + e.v] = &entries[e.v * n + e.v] + &g;
        entries[e.u * n + e.v] = &entries[e.u * n + e.v] - &g;
        entries[e.v * n + e.u] = &entries[e.v * n + e.u] - &g;
    }
    LaplacianMatrix { n, entries }
}
