//! Graph corpora for the verification harness: graph6 files, seeded
//! random graphs, and exhaustive one-per-isomorphism-class enumeration of
//! small graphs.

use crate::graph::{Graph, GraphError};
use crate::graph6;
use crate::rng::SplitMix64;
use std::path::PathBuf;
use thiserror::Error;

/// Exhaustive enumeration is capped here; the candidate count and the
/// per-candidate canonicalization cost both explode factorially beyond it.
pub const EXHAUSTIVE_MAX_VERTICES: usize = 7;

/// Non-isomorphic graph counts for 1..=7 vertices, used as a self-check.
pub const GRAPH_COUNTS: [usize; 7] = [1, 2, 4, 11, 34, 156, 1044];

#[derive(Debug, Error)]
pub enum CorpusError {
    #[error("cannot read corpus file {path}: {message}")]
    Io { path: String, message: String },
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("exhaustive corpora are capped at {max} vertices, requested {n}")]
    ExhaustiveTooLarge { n: usize, max: usize },
    #[error("bad corpus spec `{spec}`: {message}")]
    BadSpec { spec: String, message: String },
}

/// Where the graphs of a verification run come from. Generation is
/// deterministic: the same spec always yields the same graphs in the same
/// order.
#[derive(Clone, Debug, PartialEq)]
pub enum CorpusSpec {
    /// Lines of graph6 text read from a file; blank lines are skipped.
    File(PathBuf),
    /// Seeded random graphs: `count` graphs whose vertex counts are drawn
    /// uniformly from `n_min..=n_max`, each pair joined independently with
    /// probability `edge_probability`.
    Random {
        count: usize,
        n_min: usize,
        n_max: usize,
        edge_probability: f64,
        seed: u64,
    },
    /// Every graph with 1..=max_n vertices, one representative per
    /// isomorphism class, in canonical-code order.
    Exhaustive { max_n: usize },
}

impl CorpusSpec {
    /// Parse the command-line corpus forms: a bare path, or
    /// `gen:n=8,p=0.4,seed=7,count=500` (n may be a range `n=4..8`), or
    /// `exhaustive:n=6`.
    pub fn parse(text: &str) -> Result<CorpusSpec, CorpusError> {
        let bad = |message: &str| CorpusError::BadSpec {
            spec: text.to_string(),
            message: message.to_string(),
        };
        if let Some(rest) = text.strip_prefix("exhaustive:") {
            let n = rest
                .strip_prefix("n=")
                .ok_or_else(|| bad("expected `exhaustive:n=<k>`"))?
                .parse::<usize>()
                .map_err(|_| bad("vertex count is not a number"))?;
            return Ok(CorpusSpec::Exhaustive { max_n: n });
        }
        if let Some(rest) = text.strip_prefix("gen:") {
            let (mut n_min, mut n_max, mut p, mut seed, mut count) =
                (None, None, None, None, None);
            for field in rest.split(',') {
                let (key, value) = field
                    .split_once('=')
                    .ok_or_else(|| bad("expected key=value fields"))?;
                match key {
                    "n" => {
                        if let Some((lo, hi)) = value.split_once("..") {
                            n_min = Some(lo.parse().map_err(|_| bad("bad n range"))?);
                            n_max = Some(hi.parse().map_err(|_| bad("bad n range"))?);
                        } else {
                            let n = value.parse().map_err(|_| bad("bad n"))?;
                            n_min = Some(n);
                            n_max = Some(n);
                        }
                    }
                    "p" => p = Some(value.parse().map_err(|_| bad("bad probability"))?),
                    "seed" => seed = Some(value.parse().map_err(|_| bad("bad seed"))?),
                    "count" => count = Some(value.parse().map_err(|_| bad("bad count"))?),
                    other => {
                        return Err(bad(&format!("unknown field `{other}`")));
                    }
                }
            }
            let n_min = n_min.ok_or_else(|| bad("missing n"))?;
            let n_max = n_max.ok_or_else(|| bad("missing n"))?;
            if n_min == 0 || n_min > n_max {
                return Err(bad("vertex range must be nonempty and positive"));
            }
            let edge_probability: f64 = p.ok_or_else(|| bad("missing p"))?;
            if !(0.0..=1.0).contains(&edge_probability) {
                return Err(bad("probability must be in [0, 1]"));
            }
            return Ok(CorpusSpec::Random {
                count: count.ok_or_else(|| bad("missing count"))?,
                n_min,
                n_max,
                edge_probability,
                seed: seed.ok_or_else(|| bad("missing seed"))?,
            });
        }
        Ok(CorpusSpec::File(PathBuf::from(text)))
    }

    /// Materialize the corpus, rejecting any graph above vertex_cap.
    pub fn graphs(&self, vertex_cap: usize) -> Result<Vec<Graph>, CorpusError> {
        match self {
            CorpusSpec::File(path) => {
                let text = std::fs::read_to_string(path).map_err(|e| CorpusError::Io {
                    path: path.display().to_string(),
                    message: e.to_string(),
                })?;
                let mut out = Vec::new();
                for line in text.lines() {
                    if line.trim().is_empty() {
                        continue;
                    }
                    out.push(graph6::decode(line, vertex_cap)?);
                }
                Ok(out)
            }
            CorpusSpec::Random {
                count,
                n_min,
                n_max,
                edge_probability,
                seed,
            } => {
                assert!(*n_min >= 1 && n_min <= n_max, "empty vertex range");
                if *n_max > vertex_cap {
                    return Err(CorpusError::Graph(GraphError::TooLarge {
                        n: *n_max,
                        max: vertex_cap,
                    }));
                }
                let mut rng = SplitMix64::new(*seed);
                let mut out = Vec::with_capacity(*count);
                for _ in 0..*count {
                    let n = *n_min + rng.next_below((n_max - n_min + 1) as u64) as usize;
                    let mut g = Graph::new(n);
                    for v in 1..n {
                        for u in 0..v {
                            if rng.next_bool(*edge_probability) {
                                g.add_edge(u, v).expect("generated vertices are in range");
                            }
                        }
                    }
                    out.push(g);
                }
                Ok(out)
            }
            CorpusSpec::Exhaustive { max_n } => {
                if *max_n > vertex_cap {
                    return Err(CorpusError::Graph(GraphError::TooLarge {
                        n: *max_n,
                        max: vertex_cap,
                    }));
                }
                let mut out = Vec::new();
                for n in 1..=*max_n {
                    out.extend(exhaustive_graphs(n)?);
                }
                Ok(out)
            }
        }
    }
}

/// Pair index of (u, v) with u < v in the column-major order the codes
/// use: all pairs ending at v come before all pairs ending at v + 1, so
/// extending a graph by one vertex appends bits without moving old ones.
fn pair_index(u: usize, v: usize) -> usize {
    debug_assert!(u < v);
    v * (v - 1) / 2 + u
}

#[cfg(test)]
fn code_of(g: &Graph) -> u64 {
    let mut code = 0u64;
    for (u, v) in g.edges() {
        code |= 1 << pair_index(u, v);
    }
    code
}

fn graph_of(code: u64, n: usize) -> Graph {
    let mut g = Graph::new(n);
    for v in 1..n {
        for u in 0..v {
            if code & (1 << pair_index(u, v)) != 0 {
                g.add_edge(u, v).expect("indices are in range");
            }
        }
    }
    g
}

fn all_permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut items: Vec<usize> = (0..n).collect();
    permute(&mut items, 0, &mut out);
    out
}

fn permute(items: &mut Vec<usize>, k: usize, out: &mut Vec<Vec<usize>>) {
    if k == items.len() {
        out.push(items.clone());
        return;
    }
    for i in k..items.len() {
        items.swap(k, i);
        permute(items, k + 1, out);
        items.swap(k, i);
    }
}

/// The least pair-code over all relabelings of the graph.
fn canonical_code(code: u64, perms: &[Vec<usize>]) -> u64 {
    let mut best = u64::MAX;
    for perm in perms {
        let mut mapped = 0u64;
        let mut rest = code;
        while rest != 0 {
            let idx = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            // Invert idx = v(v-1)/2 + u.
            let mut v = 1;
            while (v + 1) * v / 2 <= idx {
                v += 1;
            }
            let u = idx - v * (v - 1) / 2;
            let (a, b) = (perm[u], perm[v]);
            mapped |= 1 << pair_index(a.min(b), a.max(b));
        }
        best = best.min(mapped);
        if best == 0 {
            break;
        }
    }
    best
}

/// All graphs on exactly n vertices, one per isomorphism class, sorted by
/// canonical code. Each class representative is the labeling with the
/// least pair-code. Built level by level: every class on n vertices is an
/// extension of some class on n − 1 vertices by one new vertex with some
/// neighborhood, so extending every representative by every neighborhood
/// and canonicalizing reaches everything.
pub fn exhaustive_graphs(n: usize) -> Result<Vec<Graph>, CorpusError> {
    if n > EXHAUSTIVE_MAX_VERTICES {
        return Err(CorpusError::ExhaustiveTooLarge {
            n,
            max: EXHAUSTIVE_MAX_VERTICES,
        });
    }
    assert!(n >= 1, "graphs need at least one vertex");
    let mut level: Vec<u64> = vec![0];
    for size in 2..=n {
        let perms = all_permutations(size);
        let mut next = std::collections::BTreeSet::new();
        let new_vertex = size - 1;
        let base_bits = new_vertex * (new_vertex - 1) / 2;
        for &code in &level {
            for nbhd in 0u64..(1 << new_vertex) {
                let mut extended = code;
                for u in 0..new_vertex {
                    if nbhd & (1 << u) != 0 {
                        extended |= 1 << (base_bits + u);
                    }
                }
                next.insert(canonical_code(extended, &perms));
            }
        }
        level = next.into_iter().collect();
    }
    Ok(level.into_iter().map(|code| graph_of(code, n)).collect())
}
