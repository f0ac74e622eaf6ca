//! Circuit-reduction engine: series, parallel and Δ-Y transformations with
//! full step traces.
//!
//! [`Circuit`] is a mutable working copy of a network in which vertex ids
//! stay stable: removed vertices are tombstoned and Δ-Y centers get fresh
//! ids, so a recorded [`ReductionTrace`] can be replayed deterministically.
//! [`reduce_to_terminals`] runs a fixed greedy loop (prune dead ends,
//! series-collapse, merge parallels, then Δ-Y a triangle anchored at a
//! minimum-degree non-terminal) until only terminals remain or no rule
//! applies; the latter outcome is flagged `stuck`, not an error.
//!
//! All resistances are computed exactly; rational inputs stay rational
//! through every step.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::ResistorNetwork;
use crate::quad::QuadNum;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ReduceError {
    #[error("network is disconnected")]
    Disconnected,
    #[error("bad terminals: {0}")]
    BadTerminals(String),
    #[error("vertex {vertex} out of range for {count} vertices")]
    VertexOutOfRange { vertex: usize, count: usize },
    #[error("pattern mismatch: {0}")]
    Pattern(String),
    #[error("trace replay diverged at step {0}")]
    ReplayMismatch(usize),
}

/// One transformation kind applied by the engine.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum StepKind {
    Series,
    Parallel,
    DeltaY,
    /// Removal of a dead-end (degree ≤ 1) non-terminal, which carries no
    /// current between terminals.
    Prune,
}

/// An edge binding inside a trace; `r` uses the exact textual grammar.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceEdge {
    pub u: usize,
    pub v: usize,
    #[serde(rename = "r")]
    pub resistance: QuadNum,
}

/// Vertex and edge bindings on one side of a step.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct StepBindings {
    pub vertices: Vec<usize>,
    pub edges: Vec<TraceEdge>,
}

/// One applied transformation: what it bound before the move and what it
/// left behind. For `Series` and `Prune` the consumed vertices are removed;
/// `DeltaY` binds the triangle corners (which survive) and produces the
/// fresh star center.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReductionStep {
    pub kind: StepKind,
    pub consumed: StepBindings,
    pub produced: StepBindings,
}

/// Network state after (partial) reduction, over original/fresh vertex ids.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReducedNetwork {
    pub vertices: Vec<usize>,
    pub edges: Vec<TraceEdge>,
}

/// Full audit trail of one reduction run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionTrace {
    pub initial: ResistorNetwork,
    pub terminals: Vec<usize>,
    pub steps: Vec<ReductionStep>,
    pub final_net: ReducedNetwork,
    /// True when the greedy loop halted with non-terminal vertices left.
    pub stuck: bool,
}

/// Outcome of a two-terminal reduction.
#[derive(Debug, Clone)]
pub enum TwoTerminalResistance {
    Exact(QuadNum),
    Stuck(Box<ReductionTrace>),
}

/// Mutable reduction state with stable vertex ids.
#[derive(Debug, Clone)]
pub struct Circuit {
    alive: Vec<bool>,
    edges: Vec<Option<TraceEdge>>,
}

impl Circuit {
    pub fn from_network(net: &ResistorNetwork) -> Self {
        let edges = net
            .edges()
            .iter()
            .map(|e| {
                let (u, v) = if e.u <= e.v { (e.u, e.v) } else { (e.v, e.u) };
                Some(TraceEdge { u, v, resistance: e.resistance.clone() })
            })
            .collect();
        Circuit { alive: vec![true; net.vertex_count()], edges }
    }

    pub fn is_alive(&self, v: usize) -> bool {
        self.alive.get(v).copied().unwrap_or(false)
    }

    pub fn live_vertices(&self) -> Vec<usize> {
        (0..self.alive.len()).filter(|&v| self.alive[v]).collect()
    }

    pub fn live_edges(&self) -> Vec<TraceEdge> {
        self.edges.iter().flatten().cloned().collect()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges
            .iter()
            .flatten()
            .filter(|e| e.u == v || e.v == v)
            .count()
    }

    fn incident(&self, v: usize) -> Vec<usize> {
        (0..self.edges.len())
            .filter(|&id| {
                self.edges[id]
                    .as_ref()
                    .is_some_and(|e| e.u == v || e.v == v)
            })
            .collect()
    }

    fn edges_between(&self, u: usize, v: usize) -> Vec<usize> {
        let (u, v) = if u <= v { (u, v) } else { (v, u) };
        (0..self.edges.len())
            .filter(|&id| {
                self.edges[id]
                    .as_ref()
                    .is_some_and(|e| e.u == u && e.v == v)
            })
            .collect()
    }

    fn take_edge(&mut self, id: usize) -> TraceEdge {
        self.edges[id].take().expect("edge already consumed")
    }

    fn push_edge(&mut self, u: usize, v: usize, resistance: QuadNum) -> TraceEdge {
        let (u, v) = if u <= v { (u, v) } else { (v, u) };
        let e = TraceEdge { u, v, resistance };
        self.edges.push(Some(e.clone()));
        e
    }

    fn check_alive(&self, v: usize) -> Result<(), ReduceError> {
        if v >= self.alive.len() {
            return Err(ReduceError::VertexOutOfRange { vertex: v, count: self.alive.len() });
        }
        if !self.alive[v] {
            return Err(ReduceError::Pattern(format!("vertex {v} was already removed")));
        }
        Ok(())
    }

    /// Series transformation: deletes degree-2 vertex `middle` and joins its
    /// neighbors with the resistances added.
    pub fn apply_series(&mut self, middle: usize) -> Result<ReductionStep, ReduceError> {
        self.check_alive(middle)?;
        let inc = self.incident(middle);
        if inc.len() != 2 {
            return Err(ReduceError::Pattern(format!(
                "series needs a degree-2 vertex; vertex {middle} has degree {}",
                inc.len()
            )));
        }
        let other = |e: &TraceEdge| if e.u == middle { e.v } else { e.u };
        let n1 = other(self.edges[inc[0]].as_ref().unwrap());
        let n3 = other(self.edges[inc[1]].as_ref().unwrap());
        if n1 == n3 {
            return Err(ReduceError::Pattern(format!(
                "series at vertex {middle} would form a self-loop at {n1}"
            )));
        }
        let e1 = self.take_edge(inc[0]);
        let e2 = self.take_edge(inc[1]);
        self.alive[middle] = false;
        let sum = &e1.resistance + &e2.resistance;
        let produced = self.push_edge(n1, n3, sum);
        Ok(ReductionStep {
            kind: StepKind::Series,
            consumed: StepBindings { vertices: vec![middle], edges: vec![e1, e2] },
            produced: StepBindings { vertices: vec![], edges: vec![produced] },
        })
    }

    /// Parallel transformation: merges the two lowest-id edges between `u`
    /// and `v` into one of resistance `(1/Rₐ + 1/R_b)⁻¹`.
    pub fn apply_parallel(&mut self, u: usize, v: usize) -> Result<ReductionStep, ReduceError> {
        self.check_alive(u)?;
        self.check_alive(v)?;
        let ids = self.edges_between(u, v);
        if ids.len() < 2 {
            return Err(ReduceError::Pattern(format!(
                "parallel needs two edges between {u} and {v}; found {}",
                ids.len()
            )));
        }
        let e1 = self.take_edge(ids[0]);
        let e2 = self.take_edge(ids[1]);
        let merged = &(&e1.resistance * &e2.resistance) / &(&e1.resistance + &e2.resistance);
        let produced = self.push_edge(u, v, merged);
        Ok(ReductionStep {
            kind: StepKind::Parallel,
            consumed: StepBindings { vertices: vec![], edges: vec![e1, e2] },
            produced: StepBindings { vertices: vec![], edges: vec![produced] },
        })
    }

    /// Δ-Y transformation: replaces the triangle on `a`, `b`, `c` by a star
    /// through a fresh vertex. The star resistance at each corner is the
    /// product of its two incident triangle resistances over the triangle
    /// sum.
    pub fn apply_delta_y(&mut self, a: usize, b: usize, c: usize) -> Result<ReductionStep, ReduceError> {
        for v in [a, b, c] {
            self.check_alive(v)?;
        }
        if a == b || b == c || a == c {
            return Err(ReduceError::Pattern("triangle corners must be distinct".into()));
        }
        let pick = |me: &Self, x: usize, y: usize| -> Result<usize, ReduceError> {
            me.edges_between(x, y).first().copied().ok_or_else(|| {
                ReduceError::Pattern(format!("no edge between {x} and {y}; not a triangle"))
            })
        };
        let id_ab = pick(self, a, b)?;
        let id_bc = pick(self, b, c)?;
        let id_ca = pick(self, c, a)?;
        let e_ab = self.take_edge(id_ab);
        let e_bc = self.take_edge(id_bc);
        let e_ca = self.take_edge(id_ca);
        let total = &(&e_ab.resistance + &e_bc.resistance) + &e_ca.resistance;
        let center = self.alive.len();
        self.alive.push(true);
        let star_a = &(&e_ab.resistance * &e_ca.resistance) / &total;
        let star_b = &(&e_ab.resistance * &e_bc.resistance) / &total;
        let star_c = &(&e_bc.resistance * &e_ca.resistance) / &total;
        let p1 = self.push_edge(a, center, star_a);
        let p2 = self.push_edge(b, center, star_b);
        let p3 = self.push_edge(c, center, star_c);
        Ok(ReductionStep {
            kind: StepKind::DeltaY,
            consumed: StepBindings { vertices: vec![a, b, c], edges: vec![e_ab, e_bc, e_ca] },
            produced: StepBindings { vertices: vec![center], edges: vec![p1, p2, p3] },
        })
    }

    /// Removes a dead-end vertex together with its at most one edge.
    fn apply_prune(&mut self, v: usize) -> Result<ReductionStep, ReduceError> {
        self.check_alive(v)?;
        let inc = self.incident(v);
        if inc.len() > 1 {
            return Err(ReduceError::Pattern(format!(
                "prune needs degree ≤ 1; vertex {v} has degree {}",
                inc.len()
            )));
        }
        let edges: Vec<TraceEdge> = inc.into_iter().map(|id| self.take_edge(id)).collect();
        self.alive[v] = false;
        Ok(ReductionStep {
            kind: StepKind::Prune,
            consumed: StepBindings { vertices: vec![v], edges },
            produced: StepBindings::default(),
        })
    }

    fn snapshot(&self) -> ReducedNetwork {
        ReducedNetwork { vertices: self.live_vertices(), edges: self.live_edges() }
    }

    // --- greedy-loop scans, all deterministic by lowest index -------------

    fn find_prunable(&self, terminal: &[bool]) -> Option<usize> {
        (0..self.alive.len())
            .find(|&v| self.alive[v] && !terminal[v] && self.degree(v) <= 1)
    }

    fn find_series(&self, terminal: &[bool]) -> Option<usize> {
        (0..self.alive.len()).find(|&v| {
            if !self.alive[v] || terminal[v] {
                return false;
            }
            let inc = self.incident(v);
            if inc.len() != 2 {
                return false;
            }
            let other = |id: usize| {
                let e = self.edges[id].as_ref().unwrap();
                if e.u == v {
                    e.v
                } else {
                    e.u
                }
            };
            other(inc[0]) != other(inc[1])
        })
    }

    fn find_parallel(&self) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize)> = None;
        let mut seen = std::collections::BTreeMap::new();
        for e in self.edges.iter().flatten() {
            let count = seen.entry((e.u, e.v)).or_insert(0usize);
            *count += 1;
            if *count == 2 {
                best = Some(match best {
                    Some(b) if b <= (e.u, e.v) => b,
                    _ => (e.u, e.v),
                });
            }
        }
        best
    }

    fn find_triangle(&self, terminal: &[bool]) -> Option<(usize, usize, usize)> {
        let mut candidates: Vec<usize> = (0..self.alive.len())
            .filter(|&v| self.alive[v] && !terminal[v])
            .collect();
        candidates.sort_by_key(|&v| (self.degree(v), v));
        for v in candidates {
            let mut nbrs: Vec<usize> = self
                .edges
                .iter()
                .flatten()
                .filter_map(|e| {
                    if e.u == v {
                        Some(e.v)
                    } else if e.v == v {
                        Some(e.u)
                    } else {
                        None
                    }
                })
                .collect();
            nbrs.sort_unstable();
            nbrs.dedup();
            for (xi, &x) in nbrs.iter().enumerate() {
                for &y in &nbrs[xi + 1..] {
                    if !self.edges_between(x, y).is_empty() {
                        return Some((v, x, y));
                    }
                }
            }
        }
        None
    }
}

fn terminal_mask(circuit: &Circuit, terminals: &[usize]) -> Vec<bool> {
    let mut mask = vec![false; circuit.alive.len()];
    for &t in terminals {
        mask[t] = true;
    }
    mask
}

/// Reduces `net` down to the given 2 or 3 terminals. On success the final
/// network contains only terminal vertices and its pairwise resistances
/// equal the original effective resistances; a run that exhausts every rule
/// first returns a partial trace flagged `stuck`.
pub fn reduce_to_terminals(
    net: &ResistorNetwork,
    terminals: &[usize],
) -> Result<ReductionTrace, ReduceError> {
    if !(2..=3).contains(&terminals.len()) {
        return Err(ReduceError::BadTerminals(format!(
            "expected 2 or 3 terminals, got {}",
            terminals.len()
        )));
    }
    for &t in terminals {
        if t >= net.vertex_count() {
            return Err(ReduceError::VertexOutOfRange { vertex: t, count: net.vertex_count() });
        }
    }
    let mut sorted = terminals.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted.len() != terminals.len() {
        return Err(ReduceError::BadTerminals("terminals must be distinct".into()));
    }
    if !net.is_connected() {
        return Err(ReduceError::Disconnected);
    }

    let mut circuit = Circuit::from_network(net);
    let mut terminal = terminal_mask(&circuit, terminals);
    let mut steps = Vec::new();
    let mut stuck = false;
    let delta_y_cap = 10 * (net.vertex_count() + net.edge_count()) + 16;
    let mut delta_y_used = 0usize;

    loop {
        if let Some(v) = circuit.find_prunable(&terminal) {
            steps.push(circuit.apply_prune(v)?);
            continue;
        }
        if let Some(v) = circuit.find_series(&terminal) {
            steps.push(circuit.apply_series(v)?);
            continue;
        }
        if let Some((u, v)) = circuit.find_parallel() {
            steps.push(circuit.apply_parallel(u, v)?);
            continue;
        }
        let non_terminals_left = circuit
            .live_vertices()
            .iter()
            .any(|&v| !terminal[v]);
        if !non_terminals_left {
            break;
        }
        if delta_y_used >= delta_y_cap {
            stuck = true;
            break;
        }
        match circuit.find_triangle(&terminal) {
            Some((a, b, c)) => {
                steps.push(circuit.apply_delta_y(a, b, c)?);
                delta_y_used += 1;
                // The fresh star center is a plain internal vertex.
                terminal.push(false);
            }
            None => {
                stuck = true;
                break;
            }
        }
    }

    Ok(ReductionTrace {
        initial: net.clone(),
        terminals: terminals.to_vec(),
        steps,
        final_net: circuit.snapshot(),
        stuck,
    })
}

/// Convenience wrapper: reduce to `{p, q}` and read off the single
/// surviving edge.
pub fn two_terminal_resistance(
    net: &ResistorNetwork,
    p: usize,
    q: usize,
) -> Result<TwoTerminalResistance, ReduceError> {
    let trace = reduce_to_terminals(net, &[p, q])?;
    if trace.stuck {
        return Ok(TwoTerminalResistance::Stuck(Box::new(trace)));
    }
    debug_assert_eq!(trace.final_net.edges.len(), 1);
    let r = trace.final_net.edges[0].resistance.clone();
    Ok(TwoTerminalResistance::Exact(r))
}

impl ReductionTrace {
    /// Reapplies every recorded step to the initial network, verifying that
    /// each regenerated step matches the recorded one exactly.
    pub fn replay(&self) -> Result<ReducedNetwork, ReduceError> {
        let mut circuit = Circuit::from_network(&self.initial);
        let mut terminal = terminal_mask(&circuit, &self.terminals);
        for (idx, step) in self.steps.iter().enumerate() {
            let redone = match step.kind {
                StepKind::Series => circuit.apply_series(step.consumed.vertices[0])?,
                StepKind::Prune => circuit.apply_prune(step.consumed.vertices[0])?,
                StepKind::Parallel => {
                    let e = &step.consumed.edges[0];
                    circuit.apply_parallel(e.u, e.v)?
                }
                StepKind::DeltaY => {
                    let v = &step.consumed.vertices;
                    terminal.push(false);
                    circuit.apply_delta_y(v[0], v[1], v[2])?
                }
            };
            if redone != *step {
                return Err(ReduceError::ReplayMismatch(idx));
            }
        }
        let _ = terminal;
        Ok(circuit.snapshot())
    }

    /// Steps as JSON lines, one step object per line.
    pub fn steps_to_json_lines(&self) -> String {
        self.steps
            .iter()
            .map(|s| serde_json::to_string(s).expect("step serializes"))
            .collect::<Vec<_>>()
            .join("\n")
    }

    pub fn steps_from_json_lines(text: &str) -> Result<Vec<ReductionStep>, serde_json::Error> {
        text.lines()
            .filter(|l| !l.trim().is_empty())
            .map(serde_json::from_str)
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn unit_net(vertices: usize, edges: &[(usize, usize)]) -> ResistorNetwork {
        let mut net = ResistorNetwork::new(vertices);
        for &(u, v) in edges {
            net.add_edge(u, v, QuadNum::one()).unwrap();
        }
        net
    }

    #[test]
    fn series_adds_resistances() {
        let net = unit_net(3, &[(0, 1), (1, 2)]);
        let mut c = Circuit::from_network(&net);
        let step = c.apply_series(1).unwrap();
        assert_eq!(step.produced.edges[0].resistance, QuadNum::integer(2));
        assert_eq!(c.live_vertices(), vec![0, 2]);
        assert_eq!(c.live_edges().len(), 1);
    }

    #[test]
    fn parallel_merges_conductances() {
        let net = unit_net(2, &[(0, 1), (0, 1)]);
        let mut c = Circuit::from_network(&net);
        let step = c.apply_parallel(0, 1).unwrap();
        assert_eq!(step.produced.edges[0].resistance, QuadNum::ratio(1, 2));
    }

    #[test]
    fn symmetric_delta_becomes_unit_star() {
        let mut net = ResistorNetwork::new(3);
        for (u, v) in [(0, 1), (1, 2), (0, 2)] {
            net.add_edge(u, v, QuadNum::integer(3)).unwrap();
        }
        let mut c = Circuit::from_network(&net);
        let step = c.apply_delta_y(0, 1, 2).unwrap();
        assert_eq!(step.produced.vertices, vec![3]);
        for e in &step.produced.edges {
            assert_eq!(e.resistance, QuadNum::one());
        }
    }

    #[test]
    fn pattern_mismatches_are_reported() {
        let net = unit_net(4, &[(0, 1), (1, 2), (1, 3)]);
        let mut c = Circuit::from_network(&net);
        // vertex 1 has degree 3: no series.
        assert!(matches!(c.apply_series(1), Err(ReduceError::Pattern(_))));
        // no parallel pair between 0 and 1.
        assert!(matches!(c.apply_parallel(0, 1), Err(ReduceError::Pattern(_))));
        // 0-1-2 is a path, not a triangle.
        assert!(matches!(c.apply_delta_y(0, 1, 2), Err(ReduceError::Pattern(_))));
    }

    #[test]
    fn series_refuses_to_create_self_loop() {
        let net = unit_net(2, &[(0, 1), (0, 1)]);
        let mut c = Circuit::from_network(&net);
        assert!(matches!(c.apply_series(1), Err(ReduceError::Pattern(_))));
    }

    #[test]
    fn six_cycle_reduces_to_five_sixths() {
        // Adjacent terminals on a unit 6-cycle: 1Ω in parallel with 5Ω.
        let net = unit_net(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0)]);
        match two_terminal_resistance(&net, 0, 1).unwrap() {
            TwoTerminalResistance::Exact(r) => assert_eq!(r, QuadNum::ratio(5, 6)),
            TwoTerminalResistance::Stuck(_) => panic!("6-cycle must reduce"),
        }
    }

    #[test]
    fn triangle_reduces_to_two_thirds() {
        // Series through the free corner, then a parallel merge.
        let net = unit_net(3, &[(0, 1), (1, 2), (0, 2)]);
        let trace = reduce_to_terminals(&net, &[0, 2]).unwrap();
        assert!(!trace.stuck);
        match two_terminal_resistance(&net, 0, 2).unwrap() {
            TwoTerminalResistance::Exact(r) => assert_eq!(r, QuadNum::ratio(2, 3)),
            TwoTerminalResistance::Stuck(_) => panic!("triangle must reduce"),
        }
    }

    #[test]
    fn complete_graph_needs_a_delta_y() {
        // K₄ has no degree-2 vertex and no parallel pair, so the greedy
        // must Δ-Y its way in; any unit pair gives 1/2.
        let net = unit_net(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]);
        let trace = reduce_to_terminals(&net, &[0, 1]).unwrap();
        assert!(!trace.stuck);
        assert!(trace.steps.iter().any(|s| s.kind == StepKind::DeltaY));
        match two_terminal_resistance(&net, 0, 1).unwrap() {
            TwoTerminalResistance::Exact(r) => assert_eq!(r, QuadNum::ratio(1, 2)),
            TwoTerminalResistance::Stuck(_) => panic!("K4 must reduce"),
        }
    }

    #[test]
    fn three_terminal_reduction_keeps_terminals() {
        let net = unit_net(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0)]);
        let trace = reduce_to_terminals(&net, &[0, 2, 4]).unwrap();
        assert!(!trace.stuck);
        assert_eq!(trace.final_net.vertices, vec![0, 2, 4]);
        assert_eq!(trace.final_net.edges.len(), 3);
    }

    #[test]
    fn pendant_paths_are_pruned() {
        // Path 0-1-2 plus pendant 3 hanging off vertex 1.
        let net = unit_net(4, &[(0, 1), (1, 2), (1, 3)]);
        let trace = reduce_to_terminals(&net, &[0, 2]).unwrap();
        assert!(!trace.stuck);
        assert_eq!(trace.steps[0].kind, StepKind::Prune);
        assert_eq!(trace.final_net.edges[0].resistance, QuadNum::integer(2));
    }

    #[test]
    fn bad_inputs_error() {
        let net = unit_net(3, &[(0, 1), (1, 2)]);
        assert!(matches!(
            reduce_to_terminals(&net, &[0]),
            Err(ReduceError::BadTerminals(_))
        ));
        assert!(matches!(
            reduce_to_terminals(&net, &[0, 0]),
            Err(ReduceError::BadTerminals(_))
        ));
        assert!(matches!(
            reduce_to_terminals(&net, &[0, 7]),
            Err(ReduceError::VertexOutOfRange { .. })
        ));
        let disconnected = unit_net(4, &[(0, 1), (2, 3)]);
        assert_eq!(
            reduce_to_terminals(&disconnected, &[0, 1]),
            Err(ReduceError::Disconnected)
        );
    }

    #[test]
    fn replay_reproduces_the_final_network() {
        let net = unit_net(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (1, 4)]);
        let trace = reduce_to_terminals(&net, &[0, 3]).unwrap();
        let replayed = trace.replay().unwrap();
        assert_eq!(replayed, trace.final_net);
    }

    #[test]
    fn steps_round_trip_through_json_lines() {
        let net = unit_net(3, &[(0, 1), (1, 2), (0, 2)]);
        let trace = reduce_to_terminals(&net, &[0, 1]).unwrap();
        let text = trace.steps_to_json_lines();
        let parsed = ReductionTrace::steps_from_json_lines(&text).unwrap();
        assert_eq!(parsed, trace.steps);
        // Resistances travel in the exact textual grammar.
        assert!(text.contains("*sqrt2"));
    }

    #[test]
    fn rational_inputs_stay_rational() {
        let mut net = ResistorNetwork::new(4);
        net.add_edge(0, 1, QuadNum::ratio(3, 7)).unwrap();
        net.add_edge(1, 2, QuadNum::ratio(5, 2)).unwrap();
        net.add_edge(2, 3, QuadNum::one()).unwrap();
        net.add_edge(0, 3, QuadNum::ratio(9, 4)).unwrap();
        net.add_edge(0, 2, QuadNum::integer(2)).unwrap();
        let trace = reduce_to_terminals(&net, &[0, 1]).unwrap();
        for step in &trace.steps {
            for e in step.consumed.edges.iter().chain(&step.produced.edges) {
                assert!(e.resistance.is_rational());
            }
        }
        assert!(!trace.stuck);
    }
}
