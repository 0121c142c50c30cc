//! Generic lazy-burning engine for hypergraphs, plus the two hypergraph
//! constructions attached to a Latin square.
//!
//! A burn starts from a seed set at round 0. In each synchronous round,
//! every vertex that is the only unburned member of some non-singleton
//! hyperedge (measured against the previous round's burned set) catches
//! fire; the process stops at the first round that burns nothing. Singleton
//! hyperedges never propagate, so a vertex covered only by singletons must
//! be seeded.

use serde::Serialize;
use serde_json::{json, Value};
use thiserror::Error;

use crate::latin::{Entry, LatinSquare, LineRef};

mod search;

pub use search::{min_lazy_burning_set, min_lbs_complement_search, COMPLEMENT_GUARD};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BurnError {
    #[error("hyperedge {index} is empty")]
    EmptyEdge { index: usize },
    #[error("hyperedge {index} refers to vertex {vertex} but there are only {vertices} vertices")]
    EdgeOutOfRange {
        index: usize,
        vertex: usize,
        vertices: usize,
    },
    #[error("hyperedge {index} repeats vertex {vertex}")]
    DuplicateInEdge { index: usize, vertex: usize },
    #[error("label list has {labels} entries for {vertices} vertices")]
    BadLabels { labels: usize, vertices: usize },
    #[error("seed vertex {vertex} is out of range ({vertices} vertices)")]
    BadSeed { vertex: usize, vertices: usize },
    #[error("bounds {lower}..={upper} are invalid for {vertices} vertices")]
    InvalidBounds {
        lower: usize,
        upper: usize,
        vertices: usize,
    },
    #[error("no lazy burning set of size at most {upper} exists")]
    NoSolutionInRange { upper: usize },
    #[error("order {order} exceeds the guard ({guard})")]
    OrderTooLarge { order: usize, guard: usize },
}

/// Reporting label attached to a hypergraph vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum VertexLabel {
    Entry(Entry),
    Line(LineRef),
}

/// A vertex/hyperedge incidence structure. Hyperedges are stored as vertex
/// index lists; each vertex also knows its incident edges.
#[derive(Debug, Clone)]
pub struct Hypergraph {
    vertices: usize,
    edges: Vec<Vec<usize>>,
    incident: Vec<Vec<usize>>,
    labels: Option<Vec<VertexLabel>>,
}

impl Hypergraph {
    /// Builds a hypergraph, rejecting empty edges, out-of-range vertices,
    /// and repeated vertices within an edge.
    pub fn new(vertices: usize, edges: Vec<Vec<usize>>) -> Result<Self, BurnError> {
        let mut incident = vec![Vec::new(); vertices];
        let mut seen = vec![usize::MAX; vertices];
        for (i, edge) in edges.iter().enumerate() {
            if edge.is_empty() {
                return Err(BurnError::EmptyEdge { index: i });
            }
            for &v in edge {
                if v >= vertices {
                    return Err(BurnError::EdgeOutOfRange {
                        index: i,
                        vertex: v,
                        vertices,
                    });
                }
                if seen[v] == i {
                    return Err(BurnError::DuplicateInEdge {
                        index: i,
                        vertex: v,
                    });
                }
                seen[v] = i;
                incident[v].push(i);
            }
        }
        Ok(Hypergraph {
            vertices,
            edges,
            incident,
            labels: None,
        })
    }

    pub fn with_labels(
        vertices: usize,
        edges: Vec<Vec<usize>>,
        labels: Vec<VertexLabel>,
    ) -> Result<Self, BurnError> {
        if labels.len() != vertices {
            return Err(BurnError::BadLabels {
                labels: labels.len(),
                vertices,
            });
        }
        let mut h = Self::new(vertices, edges)?;
        h.labels = Some(labels);
        Ok(h)
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Vec<usize>] {
        &self.edges
    }

    pub fn edge(&self, i: usize) -> &[usize] {
        &self.edges[i]
    }

    pub fn incident_edges(&self, v: usize) -> &[usize] {
        &self.incident[v]
    }

    pub fn label(&self, v: usize) -> Option<&VertexLabel> {
        self.labels.as_ref().map(|l| &l[v])
    }

    fn label_json(&self, v: usize) -> Value {
        match self.label(v) {
            Some(label) => serde_json::to_value(label).expect("labels serialize"),
            None => json!(v),
        }
    }
}

/// `H_L`: the `n`-uniform hypergraph of `sq`, with the `n^2` entries as
/// vertices (row-major) and the `3n` lines as hyperedges (`n` row-edges,
/// then `n` column-edges, then `n` symbol-edges).
pub fn build_hl(sq: &LatinSquare) -> Hypergraph {
    let n = sq.order();
    let labels = sq.entries().map(VertexLabel::Entry).collect();
    let edges = sq
        .lines()
        .map(|line| {
            sq.line_entries(line)
                .iter()
                .map(|e| sq.entry_vertex(e))
                .collect()
        })
        .collect();
    Hypergraph::with_labels(n * n, edges, labels).expect("H_L is well formed")
}

/// `H^L`: the 3-uniform hypergraph of `sq`, with the `3n` lines as vertices
/// (rows, then columns, then symbols) and one size-3 hyperedge
/// `{row r, col c, sym s}` per entry, in row-major entry order.
pub fn build_h3l(sq: &LatinSquare) -> Hypergraph {
    let n = sq.order();
    let labels = sq.lines().map(VertexLabel::Line).collect();
    let edges = sq
        .entries()
        .map(|e| e.lines().iter().map(|l| l.vertex_index(n)).collect())
        .collect();
    Hypergraph::with_labels(3 * n, edges, labels).expect("H^L is well formed")
}

/// Outcome of a lazy burn.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BurnTrace {
    /// Seed vertices (sorted, deduplicated); these have round 0.
    pub seed: Vec<usize>,
    /// Round at which each vertex burned; `None` if it never burned.
    pub round_of: Vec<Option<u32>>,
    /// Vertices burned in each propagation round (round `r` at index
    /// `r - 1`, each sorted). Empty rounds are not recorded.
    pub rounds: Vec<Vec<usize>>,
    pub complete: bool,
}

impl BurnTrace {
    /// Number of propagation rounds that burned at least one vertex.
    pub fn rounds_executed(&self) -> usize {
        self.rounds.len()
    }

    pub fn burned_count(&self) -> usize {
        self.round_of.iter().filter(|r| r.is_some()).count()
    }

    /// `{"seed": [...], "rounds": [[...], ...], "complete": bool}` with
    /// vertices reported as labels.
    pub fn to_json(&self, h: &Hypergraph) -> Value {
        let seed: Vec<Value> = self.seed.iter().map(|&v| h.label_json(v)).collect();
        let rounds: Vec<Vec<Value>> = self
            .rounds
            .iter()
            .map(|round| round.iter().map(|&v| h.label_json(v)).collect())
            .collect();
        json!({ "seed": seed, "rounds": rounds, "complete": self.complete })
    }
}

/// Runs the synchronous lazy-burning process from `seed`.
pub fn lazy_burn(h: &Hypergraph, seed: &[usize]) -> Result<BurnTrace, BurnError> {
    for &v in seed {
        if v >= h.vertices {
            return Err(BurnError::BadSeed {
                vertex: v,
                vertices: h.vertices,
            });
        }
    }
    let mut seed: Vec<usize> = seed.to_vec();
    seed.sort_unstable();
    seed.dedup();

    let mut round_of: Vec<Option<u32>> = vec![None; h.vertices];
    let mut unburned: Vec<usize> = h.edges.iter().map(|e| e.len()).collect();
    let mut burned = 0usize;

    let mut frontier: Vec<usize> = Vec::new();
    for &v in &seed {
        round_of[v] = Some(0);
        burned += 1;
        frontier.push(v);
    }

    let mut rounds: Vec<Vec<usize>> = Vec::new();
    let mut round = 0u32;
    while !frontier.is_empty() {
        round += 1;
        let mut next: Vec<usize> = Vec::new();
        for &v in &frontier {
            for &e in h.incident_edges(v) {
                unburned[e] -= 1;
                if unburned[e] == 1 && h.edges[e].len() >= 2 {
                    // the survivor may already be scheduled for this round
                    if let Some(&u) = h.edges[e].iter().find(|&&u| round_of[u].is_none()) {
                        round_of[u] = Some(round);
                        burned += 1;
                        next.push(u);
                    }
                }
            }
        }
        next.sort_unstable();
        if !next.is_empty() {
            rounds.push(next.clone());
        }
        frontier = next;
    }

    Ok(BurnTrace {
        seed,
        round_of,
        rounds,
        complete: burned == h.vertices,
    })
}

/// Whether `seed` eventually burns every vertex of `h`.
pub fn is_lazy_burning_set(h: &Hypergraph, seed: &[usize]) -> Result<bool, BurnError> {
    Ok(lazy_burn(h, seed)?.complete)
}

/// Allocation-free repeated completeness checks, for the subset searches.
pub(crate) struct BurnChecker<'h> {
    h: &'h Hypergraph,
    edge_sizes: Vec<usize>,
    unburned: Vec<usize>,
    burned_mark: Vec<u64>,
    generation: u64,
    frontier: Vec<usize>,
    next: Vec<usize>,
}

impl<'h> BurnChecker<'h> {
    pub(crate) fn new(h: &'h Hypergraph) -> Self {
        let edge_sizes: Vec<usize> = h.edges.iter().map(|e| e.len()).collect();
        BurnChecker {
            h,
            unburned: edge_sizes.clone(),
            edge_sizes,
            burned_mark: vec![0; h.vertices],
            generation: 0,
            frontier: Vec::with_capacity(h.vertices),
            next: Vec::with_capacity(h.vertices),
        }
    }

    /// Seed vertices must be in range and duplicate-free.
    pub(crate) fn burns_completely(&mut self, seed: &[usize]) -> bool {
        self.generation += 1;
        let generation = self.generation;
        self.unburned.copy_from_slice(&self.edge_sizes);
        self.frontier.clear();
        let mut burned = 0usize;
        for &v in seed {
            self.burned_mark[v] = generation;
            burned += 1;
            self.frontier.push(v);
        }
        while !self.frontier.is_empty() {
            self.next.clear();
            for i in 0..self.frontier.len() {
                let v = self.frontier[i];
                for &e in self.h.incident_edges(v) {
                    self.unburned[e] -= 1;
                    if self.unburned[e] == 1 && self.edge_sizes[e] >= 2 {
                        if let Some(&u) = self.h.edges[e]
                            .iter()
                            .find(|&&u| self.burned_mark[u] != generation)
                        {
                            self.burned_mark[u] = generation;
                            burned += 1;
                            self.next.push(u);
                        }
                    }
                }
            }
            std::mem::swap(&mut self.frontier, &mut self.next);
        }
        burned == self.h.vertices
    }
}
