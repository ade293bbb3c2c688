//! Graph operators built from pair deletions: for each shift r in −2..=2,
//! the graph whose edges are the vertex pairs whose deletion moves the
//! multiplicity of theta by exactly r, plus the supergraph that joins every
//! special vertex to all other vertices.
//!
//! Each operator has two routes: direct computation from multiplicities, and
//! closed-form reconstructions from the decomposition alone. The two routes
//! are kept separate so they can be compared against each other.

use crate::classify::ThetaDecomposition;
use crate::graph::{Graph, View};
use crate::matching::ThetaCache;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum OperatorError {
    #[error("the formula needs root multiplicity at least {needs}, the graph has {has}")]
    PremiseNotMet { needs: usize, has: usize },
    #[error("no closed-form clause covers the pair ({u}, {v})")]
    NoClauseApplies { u: usize, v: usize },
}

fn assert_valid_r(r: i32) {
    assert!((-2..=2).contains(&r), "shift {r} out of range -2..=2");
}

/// Pairs of live vertices whose deletion shifts the multiplicity by exactly
/// r. The result lives on the full vertex range of the root graph; edges
/// only appear between live vertices.
pub fn d_r_graph(view: &View, cache: &mut ThetaCache, r: i32) -> Graph {
    assert_valid_r(r);
    let target = cache.mult(view) as i64 + i64::from(r);
    pair_filter_graph(view, cache, |m| m == target)
}

/// Pairs whose deletion does not raise the multiplicity (the union of the
/// r = −2, −1, 0 graphs).
pub fn d_graph(view: &View, cache: &mut ThetaCache) -> Graph {
    let base = cache.mult(view) as i64;
    pair_filter_graph(view, cache, |m| m <= base)
}

fn pair_filter_graph(
    view: &View,
    cache: &mut ThetaCache,
    keep: impl Fn(i64) -> bool,
) -> Graph {
    let mut out = Graph::new(view.graph().n());
    let live = view.live().to_vec();
    for (i, &u) in live.iter().enumerate() {
        for &v in &live[i + 1..] {
            let m = cache.mult_without(view, &[u, v]) as i64;
            if keep(m) {
                out.add_edge(u, v).expect("live vertices are in range");
            }
        }
    }
    out
}

/// All five shift graphs of one view, computed with one deletion per pair.
pub struct DGraphBundle {
    by_r: [Graph; 5],
    d_theta: Graph,
    g_plus: Graph,
}

impl DGraphBundle {
    pub fn build(view: &View, cache: &mut ThetaCache) -> Self {
        let n = view.graph().n();
        let base = cache.mult(view) as i64;
        let mut by_r = [
            Graph::new(n),
            Graph::new(n),
            Graph::new(n),
            Graph::new(n),
            Graph::new(n),
        ];
        let live = view.live().to_vec();
        for (i, &u) in live.iter().enumerate() {
            for &v in &live[i + 1..] {
                let m = cache.mult_without(view, &[u, v]) as i64;
                let r = m - base;
                assert!((-2..=2).contains(&r), "pair deletion shifted by {r}");
                by_r[(r + 2) as usize]
                    .add_edge(u, v)
                    .expect("live vertices are in range");
            }
        }
        let d_theta = by_r[0].union_edges(&by_r[1]).union_edges(&by_r[2]);
        let g_plus = by_r[3].union_edges(&by_r[4]);
        DGraphBundle {
            by_r,
            d_theta,
            g_plus,
        }
    }

    /// The graph for one shift r in −2..=2.
    pub fn by_r(&self, r: i32) -> &Graph {
        assert_valid_r(r);
        &self.by_r[(r + 2) as usize]
    }

    /// Union of the non-raising shifts r = −2, −1, 0.
    pub fn d_theta(&self) -> &Graph {
        &self.d_theta
    }

    /// Union of the raising shifts r = 1, 2.
    pub fn g_plus(&self) -> &Graph {
        &self.g_plus
    }
}

/// The supergraph that joins every special vertex to all other vertices.
/// With no special vertices this is the graph itself.
pub fn s_graph(g: &Graph, decomp: &ThetaDecomposition) -> Graph {
    let mut s = g.clone();
    for a in decomp.special().iter() {
        for v in 0..g.n() {
            if v != a {
                s.add_edge(a, v).expect("vertices are in range");
            }
        }
    }
    s
}

/// Reconstruction of the non-raising pair graph of G from its decomposition:
/// an edge is any pair with an essential endpoint, a neutral pair spanning
/// two distinct root-free components, or a shift-0 pair inside one root-free
/// component. Compare with [`d_graph`].
pub fn d_graph_closed_form(
    g: &Graph,
    decomp: &ThetaDecomposition,
    cache: &mut ThetaCache,
) -> Graph {
    let n = g.n();
    let mut out = Graph::new(n);
    for u in 0..n {
        for v in (u + 1)..n {
            let essential_endpoint =
                decomp.essential().contains(u) || decomp.essential().contains(v);
            let neutral_cross = decomp.neutral_rest().contains(u)
                && decomp.neutral_rest().contains(v)
                && distinct_indices(decomp.rootfree_index(u), decomp.rootfree_index(v));
            if essential_endpoint || neutral_cross {
                out.add_edge(u, v).expect("vertices are in range");
            }
        }
    }
    for q in decomp.rootfree() {
        let inner = d_r_graph(&View::of(g, q.clone()), cache, 0);
        out = out.union_edges(&inner);
    }
    out
}

fn distinct_indices(a: Option<usize>, b: Option<usize>) -> bool {
    matches!((a, b), (Some(x), Some(y)) if x != y)
}

/// Reconstruction of the shift-r pair graph of the special-join supergraph,
/// from the decomposition of g alone. Compare with [`d_r_graph`] on the
/// supergraph.
///
/// The lowering shifts need the formula premises: r = 0 and r = −1 have no
/// closed form below multiplicity 2 (except that the r = −1 graph is forced
/// empty at multiplicity 0), while the r = −2 graph is forced empty below
/// multiplicity 2 because multiplicities cannot go negative.
pub fn d_r_closed_form_on_s(
    g: &Graph,
    decomp: &ThetaDecomposition,
    cache: &mut ThetaCache,
    r: i32,
) -> Result<Graph, OperatorError> {
    assert_valid_r(r);
    let n = g.n();
    let base = decomp.base_mult();
    if (r == 0 && base < 2) || (r == -1 && base == 1) {
        return Err(OperatorError::PremiseNotMet { needs: 2, has: base });
    }
    let mut out = Graph::new(n);
    if base < 2 && (r == -2 || r == -1) {
        return Ok(out);
    }
    let mut add = |u: usize, v: usize| {
        if u != v {
            out.add_edge(u, v).expect("vertices are in range");
        }
    };
    match r {
        -2 => {
            // Pairs spanning two distinct critical components.
            for u in 0..n {
                for v in (u + 1)..n {
                    if distinct_indices(decomp.critical_index(u), decomp.critical_index(v)) {
                        add(u, v);
                    }
                }
            }
        }
        -1 => {
            // Neutral-essential pairs, or lowering pairs inside one critical
            // component.
            for u in decomp.neutral_rest().iter() {
                for v in decomp.essential().iter() {
                    add(u, v);
                }
            }
            for h in decomp.criticals() {
                out = out.union_edges(&d_r_graph(&View::of(g, h.clone()), cache, -1));
            }
        }
        0 => {
            // (positive or special, essential) pairs, neutral pairs across
            // distinct root-free components, and shift-0 pairs inside one
            // component of either kind.
            let pos_or_special = decomp.positive_rest().union(decomp.special());
            for u in pos_or_special.iter() {
                for v in decomp.essential().iter() {
                    add(u, v);
                }
            }
            for u in decomp.neutral_rest().iter() {
                for v in decomp.neutral_rest().iter() {
                    if u < v && distinct_indices(decomp.rootfree_index(u), decomp.rootfree_index(v))
                    {
                        add(u, v);
                    }
                }
            }
            for c in decomp.criticals().iter().chain(decomp.rootfree()) {
                out = out.union_edges(&d_r_graph(&View::of(g, c.clone()), cache, 0));
            }
        }
        1 => {
            // (special, neutral) pairs, (positive, neutral) pairs across
            // distinct root-free components, and raising pairs inside one
            // root-free component.
            for u in decomp.special().iter() {
                for v in decomp.neutral_rest().iter() {
                    add(u, v);
                }
            }
            for u in decomp.positive_rest().iter() {
                for v in decomp.neutral_rest().iter() {
                    if distinct_indices(decomp.rootfree_index(u), decomp.rootfree_index(v)) {
                        add(u, v);
                    }
                }
            }
            for q in decomp.rootfree() {
                out = out.union_edges(&d_r_graph(&View::of(g, q.clone()), cache, 1));
            }
        }
        2 => {
            // Special-special, special-positive, positive pairs across
            // distinct root-free components, and double-raising pairs inside
            // one root-free component.
            let special: Vec<usize> = decomp.special().to_vec();
            for (i, &u) in special.iter().enumerate() {
                for &v in &special[i + 1..] {
                    add(u, v);
                }
                for v in decomp.positive_rest().iter() {
                    add(u, v);
                }
            }
            for u in decomp.positive_rest().iter() {
                for v in decomp.positive_rest().iter() {
                    if u < v && distinct_indices(decomp.rootfree_index(u), decomp.rootfree_index(v))
                    {
                        add(u, v);
                    }
                }
            }
            for q in decomp.rootfree() {
                out = out.union_edges(&d_r_graph(&View::of(g, q.clone()), cache, 2));
            }
        }
        _ => unreachable!(),
    }
    Ok(out)
}

/// Predicted multiplicity after deleting the non-special pair {u, v} from
/// the special-join supergraph, from component formulas on g alone.
/// The cross-critical clause needs multiplicity at least 2.
pub fn pair_mult_on_s(
    g: &Graph,
    decomp: &ThetaDecomposition,
    cache: &mut ThetaCache,
    u: usize,
    v: usize,
) -> Result<i64, OperatorError> {
    assert!(u != v, "pair formulas need two distinct vertices");
    let base = decomp.base_mult() as i64;
    let comp_mult_without = |cache: &mut ThetaCache, comp: usize, kind_critical: bool, drops: &[usize]| {
        let set = if kind_critical {
            &decomp.criticals()[comp]
        } else {
            &decomp.rootfree()[comp]
        };
        cache.mult_without(&View::of(g, set.clone()), drops) as i64
    };
    match (place(decomp, u), place(decomp, v)) {
        (Place::Critical(i), Place::Rootfree(j)) => {
            let _ = i;
            Ok(base - 1 + comp_mult_without(cache, j, false, &[v]))
        }
        (Place::Rootfree(j), Place::Critical(i)) => {
            let _ = i;
            Ok(base - 1 + comp_mult_without(cache, j, false, &[u]))
        }
        (Place::Rootfree(j1), Place::Rootfree(j2)) if j1 == j2 => {
            Ok(base + comp_mult_without(cache, j1, false, &[u, v]))
        }
        (Place::Rootfree(j1), Place::Rootfree(j2)) => Ok(base
            + comp_mult_without(cache, j1, false, &[u])
            + comp_mult_without(cache, j2, false, &[v])),
        (Place::Critical(i1), Place::Critical(i2)) if i1 == i2 => {
            Ok(base - 1 + comp_mult_without(cache, i1, true, &[u, v]))
        }
        (Place::Critical(_), Place::Critical(_)) => {
            if decomp.base_mult() >= 2 {
                Ok(base - 2)
            } else {
                Err(OperatorError::PremiseNotMet {
                    needs: 2,
                    has: decomp.base_mult(),
                })
            }
        }
        _ => Err(OperatorError::NoClauseApplies { u, v }),
    }
}

/// Predicted multiplicity after deleting {u, v} from g itself; only pairs
/// inside root-free components have a formula.
pub fn pair_mult_on_g(
    g: &Graph,
    decomp: &ThetaDecomposition,
    cache: &mut ThetaCache,
    u: usize,
    v: usize,
) -> Result<i64, OperatorError> {
    assert!(u != v, "pair formulas need two distinct vertices");
    let base = decomp.base_mult() as i64;
    match (place(decomp, u), place(decomp, v)) {
        (Place::Rootfree(j1), Place::Rootfree(j2)) if j1 == j2 => {
            let set = decomp.rootfree()[j1].clone();
            Ok(base + cache.mult_without(&View::of(g, set), &[u, v]) as i64)
        }
        (Place::Rootfree(j1), Place::Rootfree(j2)) => {
            let s1 = decomp.rootfree()[j1].clone();
            let s2 = decomp.rootfree()[j2].clone();
            Ok(base
                + cache.mult_without(&View::of(g, s1), &[u]) as i64
                + cache.mult_without(&View::of(g, s2), &[v]) as i64)
        }
        _ => Err(OperatorError::NoClauseApplies { u, v }),
    }
}

enum Place {
    Special,
    Critical(usize),
    Rootfree(usize),
}

fn place(decomp: &ThetaDecomposition, v: usize) -> Place {
    if let Some(i) = decomp.critical_index(v) {
        Place::Critical(i)
    } else if let Some(j) = decomp.rootfree_index(v) {
        Place::Rootfree(j)
    } else {
        Place::Special
    }
}
