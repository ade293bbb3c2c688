//! Nice, extreme, and Tutte sets at an algebraic number theta, the
//! constructive matching attached to a nice set, and the path identities
//! that support it.
//!
//! A set X (|X| > 1) is nice when deleting any two of its vertices raises
//! the multiplicity by exactly 2; extreme when deleting all of X raises it
//! by |X|; Tutte when the graph left after deleting X has exactly
//! mult + |X| critical components. Brute-force enumerations over all
//! subsets are provided as separate, size-capped oracles.

use crate::classify::{count_critical_components, vertex_class, VertexClass};
use crate::graph::{maximal_cliques, Graph, VertexSet, View};
use crate::matching::{matching_polynomial, MatchPolyCache, ThetaCache};
use crate::operators::{d_graph, d_r_graph};
use crate::poly::Polynomial;
use crate::rng::SplitMix64;
use serde_json::{json, Value};
use thiserror::Error;

/// Hard cap for the all-subsets oracles.
pub const BRUTE_FORCE_MAX_VERTICES: usize = 10;

/// Certificates enumerate every pair subset up to this matching size, and
/// fall back to seeded sampling beyond it.
pub const EXHAUSTIVE_CERTIFICATE_LIMIT: usize = 12;

const SAMPLED_CERTIFICATES: usize = 4096;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum TutteError {
    #[error("the set must have more than one vertex, got {size}")]
    SetTooSmall { size: usize },
    #[error(
        "the set is not nice: deleting ({u}, {v}) gives multiplicity {actual}, expected {expected}"
    )]
    NotNice {
        u: usize,
        v: usize,
        expected: usize,
        actual: usize,
    },
    #[error("vertex {x} has no neighbor that is essential once {x} is deleted")]
    EssentialNeighborMissing { x: usize },
    #[error("more than {cap} paths between {u} and {v}")]
    PathCapExceeded { u: usize, v: usize, cap: usize },
    #[error("brute-force enumeration is capped at {max} vertices, the graph has {n}")]
    GraphTooLarge { n: usize, max: usize },
}

/// True iff every pair from x raises the multiplicity by exactly 2 —
/// equivalently, x is a clique of the shift-2 pair graph. Sets of size
/// at most 1 are rejected.
pub fn is_nice(view: &View, cache: &mut ThetaCache, x: &VertexSet) -> Result<bool, TutteError> {
    Ok(nice_witness(view, cache, x)?.is_none())
}

/// None when x is nice; otherwise the first offending pair with the
/// multiplicity it actually produced.
pub fn nice_witness(
    view: &View,
    cache: &mut ThetaCache,
    x: &VertexSet,
) -> Result<Option<(usize, usize, usize)>, TutteError> {
    if x.len() <= 1 {
        return Err(TutteError::SetTooSmall { size: x.len() });
    }
    assert!(
        x.is_subset_of(view.live()),
        "the set must consist of live vertices"
    );
    let base = cache.mult(view);
    let xs = x.to_vec();
    for (i, &u) in xs.iter().enumerate() {
        for &v in &xs[i + 1..] {
            let m = cache.mult_without(view, &[u, v]);
            if m != base + 2 {
                return Ok(Some((u, v, m)));
            }
        }
    }
    Ok(None)
}

/// True iff deleting all of x raises the multiplicity by exactly |x|.
pub fn is_extreme(view: &View, cache: &mut ThetaCache, x: &VertexSet) -> bool {
    assert!(!x.is_empty(), "extreme sets are nonempty");
    assert!(
        x.is_subset_of(view.live()),
        "the set must consist of live vertices"
    );
    let base = cache.mult(view);
    cache.mult(&view.without_set(x)) == base + x.len()
}

/// True iff the graph left after deleting x has exactly mult + |x|
/// critical components.
pub fn is_tutte(view: &View, cache: &mut ThetaCache, x: &VertexSet) -> bool {
    assert!(!x.is_empty(), "Tutte sets are nonempty");
    assert!(
        x.is_subset_of(view.live()),
        "the set must consist of live vertices"
    );
    let base = cache.mult(view);
    count_critical_components(cache, &view.without_set(x)) == base + x.len()
}

/// All maximal nice sets: the maximal cliques of the shift-2 pair graph
/// that have more than one vertex, in lexicographic order.
pub fn maximal_nice_sets(view: &View, cache: &mut ThetaCache) -> Vec<VertexSet> {
    let d2 = d_r_graph(view, cache, 2);
    let n = view.graph().n();
    maximal_cliques(&d2)
        .into_iter()
        .filter(|c| c.len() > 1)
        .map(|c| VertexSet::from_vertices(n, &c))
        .collect()
}

/// One multiplicity record: the graph minus the vertices of the selected
/// pairs, and the multiplicity it was measured at.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubsetCertificate {
    pub pair_indices: Vec<usize>,
    pub mult: usize,
}

/// A matching x_i — y_i produced from a nice set X: each y_i is the
/// least-index neighbor of x_i that is essential once x_i is deleted, and
/// the construction recurses on the rest of X with both vertices removed.
/// Certificates record the multiplicity after deleting each subset of the
/// pairs (all subsets up to [`EXHAUSTIVE_CERTIFICATE_LIMIT`] pairs, a
/// seeded sample beyond).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NiceMatchingResult {
    pairs: Vec<(usize, usize)>,
    x: VertexSet,
    y: VertexSet,
    base_mult: usize,
    certificates: Vec<SubsetCertificate>,
    exhaustive: bool,
}

impl NiceMatchingResult {
    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    pub fn x(&self) -> &VertexSet {
        &self.x
    }

    pub fn y(&self) -> &VertexSet {
        &self.y
    }

    pub fn base_mult(&self) -> usize {
        self.base_mult
    }

    pub fn certificates(&self) -> &[SubsetCertificate] {
        &self.certificates
    }

    /// Whether the certificates cover every subset of the pairs.
    pub fn exhaustive(&self) -> bool {
        self.exhaustive
    }

    /// Every recorded subset deletion left the multiplicity unchanged.
    pub fn certificates_all_at_base(&self) -> bool {
        self.certificates.iter().all(|c| c.mult == self.base_mult)
    }

    /// The pairs are disjoint edges of g.
    pub fn is_matching_in(&self, g: &Graph) -> bool {
        let mut seen = VertexSet::empty(g.n());
        for &(x, y) in &self.pairs {
            if seen.contains(x) || seen.contains(y) || !g.has_edge(x, y) {
                return false;
            }
            seen.insert(x);
            seen.insert(y);
        }
        true
    }

    /// No edge of g joins two matched partners y_i, y_j.
    pub fn y_independent_in(&self, g: &Graph) -> bool {
        let ys = self.y.to_vec();
        ys.iter()
            .enumerate()
            .all(|(i, &u)| ys[i + 1..].iter().all(|&v| !g.has_edge(u, v)))
    }

    pub fn to_json(&self) -> Value {
        json!({
            "pairs": self.pairs.iter().map(|&(x, y)| json!([x, y])).collect::<Vec<_>>(),
            "X": self.x.to_vec(),
            "Y": self.y.to_vec(),
            "base_mult": self.base_mult,
            "exhaustive": self.exhaustive,
            "certificates": self
                .certificates
                .iter()
                .map(|c| json!({"pairs": c.pair_indices, "mult": c.mult}))
                .collect::<Vec<_>>(),
        })
    }
}

/// Build the matching attached to a nice set x; rejects sets that are not
/// nice. A missing essential neighbor would contradict the theory the
/// construction rests on, so it is reported as an error carrying the
/// offending vertex rather than a panic.
pub fn nice_matching(
    view: &View,
    cache: &mut ThetaCache,
    x: &VertexSet,
) -> Result<NiceMatchingResult, TutteError> {
    if let Some((u, v, actual)) = nice_witness(view, cache, x)? {
        let base = cache.mult(view);
        return Err(TutteError::NotNice {
            u,
            v,
            expected: base + 2,
            actual,
        });
    }
    let g = view.graph();
    let base = cache.mult(view);
    let mut live = view.live().clone();
    let xs = x.to_vec();
    let mut pairs = Vec::with_capacity(xs.len());
    for &xi in &xs {
        live.remove(xi);
        let sub = View::of(g, live.clone());
        let mut chosen = None;
        for v in g.neighbors(xi).intersect(&live).iter() {
            if vertex_class(cache, &sub, v) == VertexClass::Essential {
                chosen = Some(v);
                break;
            }
        }
        let yi = chosen.ok_or(TutteError::EssentialNeighborMissing { x: xi })?;
        live.remove(yi);
        pairs.push((xi, yi));
    }
    let y = VertexSet::from_vertices(g.n(), &pairs.iter().map(|&(_, y)| y).collect::<Vec<_>>());
    let certificates = certify_subsets(view, cache, &pairs);
    let exhaustive = pairs.len() <= EXHAUSTIVE_CERTIFICATE_LIMIT;
    Ok(NiceMatchingResult {
        pairs,
        x: x.clone(),
        y,
        base_mult: base,
        certificates,
        exhaustive,
    })
}

fn certify_subsets(
    view: &View,
    cache: &mut ThetaCache,
    pairs: &[(usize, usize)],
) -> Vec<SubsetCertificate> {
    let m = pairs.len();
    let masks: Vec<u64> = if m <= EXHAUSTIVE_CERTIFICATE_LIMIT {
        (0..(1u64 << m)).collect()
    } else {
        let mut rng = SplitMix64::new(0x6E1C_E5E7 ^ m as u64);
        let mut set = std::collections::BTreeSet::new();
        set.insert(0u64);
        set.insert(if m >= 64 { u64::MAX } else { (1u64 << m) - 1 });
        while set.len() < SAMPLED_CERTIFICATES {
            let mut mask = 0u64;
            for i in 0..m.min(64) {
                if rng.next_bool(0.5) {
                    mask |= 1 << i;
                }
            }
            set.insert(mask);
        }
        set.into_iter().collect()
    };
    masks
        .into_iter()
        .map(|mask| {
            let mut drop = Vec::new();
            let mut indices = Vec::new();
            for (i, &(x, y)) in pairs.iter().enumerate() {
                if mask & (1 << i) != 0 {
                    indices.push(i);
                    drop.push(x);
                    drop.push(y);
                }
            }
            let mult = cache.mult_without(view, &drop);
            SubsetCertificate {
                pair_indices: indices,
                mult,
            }
        })
        .collect()
}

/// Check that swapping each matched pair embeds the induced subgraph on
/// X ∪ Y into the non-raising pair graph: every edge (a, b) of g inside
/// X ∪ Y must reappear as the edge (swap(a), swap(b)).
pub fn embed_check(view: &View, cache: &mut ThetaCache, result: &NiceMatchingResult) -> bool {
    let g = view.graph();
    let d = d_graph(view, cache);
    let union = result.x().union(result.y());
    let mut swap = vec![usize::MAX; g.n()];
    for &(x, y) in result.pairs() {
        swap[x] = y;
        swap[y] = x;
    }
    g.edges().into_iter().all(|(a, b)| {
        !(union.contains(a) && union.contains(b)) || d.has_edge(swap[a], swap[b])
    })
}

/// True iff every pair the swap map of `embed_check` produces is forced
/// into the non-raising pair graph: a matched pair maps to itself, a pair
/// with an essential endpoint cannot raise the multiplicity past the base
/// (delete the essential vertex first and interlace), and a pair of two
/// positive vertices is joined through its matched partners by a path
/// whose deletion keeps the base multiplicity. Only a pair with a neutral
/// endpoint — possible for a matched partner when the multiplicity is
/// zero — escapes all three arguments, and `embed_check` can then return
/// false even though every certificate holds.
pub fn embed_premise(view: &View, cache: &mut ThetaCache, result: &NiceMatchingResult) -> bool {
    let g = view.graph();
    let union = result.x().union(result.y());
    let mut swap = vec![usize::MAX; g.n()];
    for &(x, y) in result.pairs() {
        swap[x] = y;
        swap[y] = x;
    }
    let edges = g.edges();
    edges.into_iter().all(|(a, b)| {
        if !(union.contains(a) && union.contains(b)) || swap[a] == b {
            return true;
        }
        let cu = vertex_class(cache, view, swap[a]);
        let cv = vertex_class(cache, view, swap[b]);
        cu == VertexClass::Essential
            || cv == VertexClass::Essential
            || (cu == VertexClass::Positive && cv == VertexClass::Positive)
    })
}

/// Exact polynomial identity tying the four vertex-deleted matching
/// polynomials of a pair to the paths joining it:
/// mu(G−u)·mu(G−v) − mu(G)·mu(G−u−v) = sum over u–v paths P of mu(G−P)².
pub fn heilmann_lieb_check(
    view: &View,
    mu: &mut MatchPolyCache,
    u: usize,
    v: usize,
    max_paths: usize,
) -> Result<bool, TutteError> {
    assert!(u != v, "the identity needs two distinct vertices");
    let paths = view
        .paths_between(u, v, max_paths)
        .ok_or(TutteError::PathCapExceeded { u, v, cap: max_paths })?;
    let n = view.graph().n();
    let whole = matching_polynomial(view, mu);
    let no_u = matching_polynomial(&view.without(u), mu);
    let no_v = matching_polynomial(&view.without(v), mu);
    let no_uv = matching_polynomial(&view.without_set(&VertexSet::from_vertices(n, &[u, v])), mu);
    let lhs = no_u.mul(&no_v).sub(&whole.mul(&no_uv));
    let mut rhs = Polynomial::zero();
    for p in &paths {
        let rest = matching_polynomial(&view.without_set(&VertexSet::from_vertices(n, p)), mu);
        rhs = rhs.add(&rest.mul(&rest));
    }
    Ok(lhs == rhs)
}

/// Whether some u–v path P keeps the multiplicity of the path-deleted
/// graph at or below the base multiplicity.
pub fn path_criterion(
    view: &View,
    cache: &mut ThetaCache,
    u: usize,
    v: usize,
    max_paths: usize,
) -> Result<bool, TutteError> {
    assert!(u != v, "the criterion needs two distinct vertices");
    let base = cache.mult(view);
    let paths = view
        .paths_between(u, v, max_paths)
        .ok_or(TutteError::PathCapExceeded { u, v, cap: max_paths })?;
    Ok(paths.iter().any(|p| cache.mult_without(view, p) <= base))
}

fn brute_subsets(
    view: &View,
    min_size: usize,
    mut keep: impl FnMut(&VertexSet) -> bool,
) -> Result<Vec<VertexSet>, TutteError> {
    let live = view.live().to_vec();
    if live.len() > BRUTE_FORCE_MAX_VERTICES {
        return Err(TutteError::GraphTooLarge {
            n: live.len(),
            max: BRUTE_FORCE_MAX_VERTICES,
        });
    }
    let n = view.graph().n();
    let mut out = Vec::new();
    for mask in 1u32..(1u32 << live.len()) {
        if (mask.count_ones() as usize) < min_size {
            continue;
        }
        let vs: Vec<usize> = live
            .iter()
            .enumerate()
            .filter(|(i, _)| mask & (1 << i) != 0)
            .map(|(_, &v)| v)
            .collect();
        let set = VertexSet::from_vertices(n, &vs);
        if keep(&set) {
            out.push(set);
        }
    }
    Ok(out)
}

/// All nice sets, by brute force over every subset of more than one live
/// vertex. Capped at [`BRUTE_FORCE_MAX_VERTICES`] live vertices.
pub fn enumerate_nice_sets(
    view: &View,
    cache: &mut ThetaCache,
) -> Result<Vec<VertexSet>, TutteError> {
    brute_subsets(view, 2, |x| {
        is_nice(view, cache, x).expect("subsets of size >= 2 are accepted")
    })
}

/// All extreme sets, by brute force over every nonempty subset.
pub fn enumerate_extreme_sets(
    view: &View,
    cache: &mut ThetaCache,
) -> Result<Vec<VertexSet>, TutteError> {
    brute_subsets(view, 1, |x| is_extreme(view, cache, x))
}

/// All Tutte sets, by brute force over every nonempty subset.
pub fn enumerate_tutte_sets(
    view: &View,
    cache: &mut ThetaCache,
) -> Result<Vec<VertexSet>, TutteError> {
    brute_subsets(view, 1, |x| is_tutte(view, cache, x))
}

/// Members of a family that are not strictly contained in another member,
/// sorted lexicographically by vertex list.
pub fn maximal_members(family: &[VertexSet]) -> Vec<VertexSet> {
    let mut out: Vec<VertexSet> = family
        .iter()
        .filter(|x| {
            !family
                .iter()
                .any(|f| x.len() < f.len() && x.is_subset_of(f))
        })
        .cloned()
        .collect();
    out.sort_by_key(|s| s.to_vec());
    out.dedup();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebraic::AlgebraicNumber;
    use crate::fixtures::hub_tree;
    use crate::matching::theta_candidates;
    use proptest::prelude::*;

    fn graph(n: usize, edges: &[(usize, usize)]) -> Graph {
        Graph::from_edges(n, edges).unwrap()
    }

    fn int(k: i64) -> AlgebraicNumber {
        AlgebraicNumber::from_integer(k)
    }

    fn set(n: usize, vs: &[usize]) -> VertexSet {
        VertexSet::from_vertices(n, vs)
    }

    fn two_disjoint_edges() -> Graph {
        graph(4, &[(0, 1), (2, 3)])
    }

    #[test]
    fn niceness_on_two_disjoint_edges() {
        let g = two_disjoint_edges();
        let mut cache = ThetaCache::new(&g, int(0));
        let v = g.view();
        assert_eq!(is_nice(&v, &mut cache, &set(4, &[0, 2])), Ok(true));
        assert_eq!(is_nice(&v, &mut cache, &set(4, &[0, 3])), Ok(true));
        assert_eq!(is_nice(&v, &mut cache, &set(4, &[0, 1])), Ok(false));
        assert_eq!(
            is_nice(&v, &mut cache, &set(4, &[0])),
            Err(TutteError::SetTooSmall { size: 1 })
        );
        // A set with an essential vertex is never nice: in K2 at theta = 1
        // both vertices are essential.
        let k2 = graph(2, &[(0, 1)]);
        let mut k2_cache = ThetaCache::new(&k2, int(1));
        assert_eq!(is_nice(&k2.view(), &mut k2_cache, &set(2, &[0, 1])), Ok(false));
    }

    #[test]
    fn extremeness_examples() {
        let g = two_disjoint_edges();
        let mut cache = ThetaCache::new(&g, int(0));
        assert!(is_extreme(&g.view(), &mut cache, &set(4, &[0, 2])));
        assert!(!is_extreme(&g.view(), &mut cache, &set(4, &[0, 1])));
        let star = graph(4, &[(0, 1), (0, 2), (0, 3)]);
        let mut star_cache = ThetaCache::new(&star, int(0));
        assert!(is_extreme(&star.view(), &mut star_cache, &set(4, &[0])));
        let k2 = graph(2, &[(0, 1)]);
        let mut k2_cache = ThetaCache::new(&k2, int(1));
        assert!(!is_extreme(&k2.view(), &mut k2_cache, &set(2, &[0])));
    }

    #[test]
    fn tutte_examples() {
        let g = two_disjoint_edges();
        let mut cache = ThetaCache::new(&g, int(0));
        assert!(is_tutte(&g.view(), &mut cache, &set(4, &[0, 2])));
        let k2 = graph(2, &[(0, 1)]);
        let mut k2_cache = ThetaCache::new(&k2, int(0));
        assert!(is_tutte(&k2.view(), &mut k2_cache, &set(2, &[0])));
        let hub = hub_tree();
        let mut hub_cache = ThetaCache::new(&hub, int(1));
        assert!(is_tutte(&hub.view(), &mut hub_cache, &set(10, &[0, 1])));
        // Singletons of the hub tree are extreme but not Tutte: the spider
        // left after deleting one hub is a single non-critical component.
        assert!(is_extreme(&hub.view(), &mut hub_cache, &set(10, &[0])));
        assert!(!is_tutte(&hub.view(), &mut hub_cache, &set(10, &[0])));
    }

    #[test]
    fn maximal_nice_sets_examples() {
        let g = two_disjoint_edges();
        let mut cache = ThetaCache::new(&g, int(0));
        let sets = maximal_nice_sets(&g.view(), &mut cache);
        let lists: Vec<Vec<usize>> = sets.iter().map(|s| s.to_vec()).collect();
        assert_eq!(lists, vec![vec![0, 2], vec![0, 3], vec![1, 2], vec![1, 3]]);

        let k2 = graph(2, &[(0, 1)]);
        let mut k2_cache = ThetaCache::new(&k2, int(0));
        assert!(maximal_nice_sets(&k2.view(), &mut k2_cache).is_empty());

        let star = graph(4, &[(0, 1), (0, 2), (0, 3)]);
        let mut star_cache = ThetaCache::new(&star, int(0));
        assert!(maximal_nice_sets(&star.view(), &mut star_cache).is_empty());

        let hub = hub_tree();
        let mut hub_cache = ThetaCache::new(&hub, int(1));
        let hub_sets = maximal_nice_sets(&hub.view(), &mut hub_cache);
        assert_eq!(hub_sets.len(), 1);
        assert_eq!(hub_sets[0].to_vec(), vec![0, 1]);
    }

    #[test]
    fn matching_on_two_disjoint_edges() {
        let g = two_disjoint_edges();
        let mut cache = ThetaCache::new(&g, int(0));
        let result = nice_matching(&g.view(), &mut cache, &set(4, &[0, 2])).unwrap();
        assert_eq!(result.pairs(), &[(0, 1), (2, 3)]);
        assert_eq!(result.y().to_vec(), vec![1, 3]);
        assert!(result.x().is_disjoint_from(result.y()));
        assert!(result.is_matching_in(&g));
        assert!(result.y_independent_in(&g));
        assert!(result.exhaustive());
        assert_eq!(result.certificates().len(), 4);
        assert!(result.certificates_all_at_base());
        assert!(embed_check(&g.view(), &mut cache, &result));
    }

    #[test]
    fn matching_on_hub_tree() {
        let g = hub_tree();
        let mut cache = ThetaCache::new(&g, int(1));
        let result = nice_matching(&g.view(), &mut cache, &set(10, &[0, 1])).unwrap();
        // Least essential neighbor of 0 after deleting it is 2; then the
        // least essential neighbor of 1 in what remains is 4.
        assert_eq!(result.pairs(), &[(0, 2), (1, 4)]);
        assert_eq!(result.base_mult(), 2);
        assert!(result.certificates_all_at_base());
        assert!(result.y_independent_in(&g));
        assert!(embed_check(&g.view(), &mut cache, &result));
        // The certificate list covers all four subsets, in mask order.
        let sizes: Vec<usize> = result
            .certificates()
            .iter()
            .map(|c| c.pair_indices.len())
            .collect();
        assert_eq!(sizes, vec![0, 1, 1, 2]);
    }

    #[test]
    fn swap_embedding_can_miss_without_positive_backing() {
        // At a theta of multiplicity zero a matched partner can be neutral;
        // a swapped pair with two neutral endpoints is then free to raise
        // the multiplicity, and the canonical embedding misses even though
        // every matching certificate holds.
        let g = graph(6, &[(0, 2), (0, 3), (1, 2), (1, 5), (4, 5)]);
        let mut cache = ThetaCache::new(&g, int(1));
        let view = g.view();
        assert_eq!(cache.mult(&view), 0);
        let sets = maximal_nice_sets(&view, &mut cache);
        let listed: Vec<Vec<usize>> = sets.iter().map(|s| s.to_vec()).collect();
        assert_eq!(listed, vec![vec![1, 2], vec![1, 3], vec![2, 4]]);

        let result = nice_matching(&view, &mut cache, &sets[0]).unwrap();
        assert_eq!(result.pairs(), &[(1, 5), (2, 0)]);
        assert!(result.is_matching_in(&g));
        assert!(result.y_independent_in(&g));
        assert!(result.certificates_all_at_base());
        // Both partners are neutral, so the edge (1, 2) swaps onto the
        // pair (5, 0), whose deletion raises the multiplicity to 1.
        assert_eq!(vertex_class(&mut cache, &view, 0), VertexClass::Neutral);
        assert_eq!(vertex_class(&mut cache, &view, 5), VertexClass::Neutral);
        assert_eq!(cache.mult_without(&view, &[0, 5]), 1);
        assert!(!embed_premise(&view, &mut cache, &result));
        assert!(!embed_check(&view, &mut cache, &result));

        // The other maximal sets swap every induced edge onto a matched
        // pair, so the premise holds and the embedding goes through.
        for x in &sets[1..] {
            let result = nice_matching(&view, &mut cache, x).unwrap();
            assert!(embed_premise(&view, &mut cache, &result));
            assert!(embed_check(&view, &mut cache, &result));
        }
    }

    #[test]
    fn matching_rejects_bad_sets() {
        let g = two_disjoint_edges();
        let mut cache = ThetaCache::new(&g, int(0));
        assert_eq!(
            nice_matching(&g.view(), &mut cache, &set(4, &[0])),
            Err(TutteError::SetTooSmall { size: 1 })
        );
        assert_eq!(
            nice_matching(&g.view(), &mut cache, &set(4, &[0, 1])),
            Err(TutteError::NotNice {
                u: 0,
                v: 1,
                expected: 2,
                actual: 0
            })
        );
    }

    #[test]
    fn heilmann_lieb_frozen_cases() {
        // Path on three vertices, both leaves: the difference collapses to
        // the constant 1, matched by the unique path through the graph.
        let p3 = graph(3, &[(0, 1), (1, 2)]);
        let mut mu = MatchPolyCache::new();
        assert_eq!(
            heilmann_lieb_check(&p3.view(), &mut mu, 0, 2, 100),
            Ok(true)
        );
        let k2 = graph(2, &[(0, 1)]);
        let mut mu = MatchPolyCache::new();
        assert_eq!(heilmann_lieb_check(&k2.view(), &mut mu, 0, 1, 100), Ok(true));
        // Disconnected pair: no paths, and the two sides factor equally.
        let g = two_disjoint_edges();
        let mut mu = MatchPolyCache::new();
        assert_eq!(heilmann_lieb_check(&g.view(), &mut mu, 0, 2, 100), Ok(true));
        // Cap refusal.
        let mut mu = MatchPolyCache::new();
        assert_eq!(
            heilmann_lieb_check(&p3.view(), &mut mu, 0, 2, 0),
            Err(TutteError::PathCapExceeded { u: 0, v: 2, cap: 0 })
        );
    }

    #[test]
    fn path_criterion_cases() {
        // On the 4-cycle at 0, adjacent vertices have a short path whose
        // deletion keeps the multiplicity at the base.
        let c4 = graph(4, &[(0, 1), (1, 2), (2, 3), (0, 3)]);
        let mut cache = ThetaCache::new(&c4, int(0));
        assert_eq!(path_criterion(&c4.view(), &mut cache, 0, 1, 100), Ok(true));
        assert_eq!(cache.mult_without(&c4.view(), &[0, 1]), 0);
        // Opposite vertices only raise it.
        assert_eq!(path_criterion(&c4.view(), &mut cache, 0, 2, 100), Ok(false));
        assert_eq!(cache.mult_without(&c4.view(), &[0, 2]), 2);
        // Disconnected vertices have no path at all.
        let g = two_disjoint_edges();
        let mut cache = ThetaCache::new(&g, int(0));
        assert_eq!(path_criterion(&g.view(), &mut cache, 0, 2, 100), Ok(false));
    }

    #[test]
    fn brute_force_families_on_hub_tree() {
        let g = hub_tree();
        let mut cache = ThetaCache::new(&g, int(1));
        let nice = enumerate_nice_sets(&g.view(), &mut cache).unwrap();
        let extreme = enumerate_extreme_sets(&g.view(), &mut cache).unwrap();
        let tutte = enumerate_tutte_sets(&g.view(), &mut cache).unwrap();
        let to_lists =
            |v: &[VertexSet]| -> Vec<Vec<usize>> { v.iter().map(|s| s.to_vec()).collect() };
        assert_eq!(to_lists(&nice), vec![vec![0, 1]]);
        let mut extreme_lists = to_lists(&extreme);
        extreme_lists.sort();
        assert_eq!(extreme_lists, vec![vec![0], vec![0, 1], vec![1]]);
        assert_eq!(to_lists(&tutte), vec![vec![0, 1]]);
        // Every Tutte set is extreme, not conversely.
        for t in &tutte {
            assert!(extreme.contains(t));
        }
        assert_eq!(to_lists(&maximal_members(&extreme)), vec![vec![0, 1]]);
        assert_eq!(to_lists(&maximal_members(&tutte)), vec![vec![0, 1]]);
        assert_eq!(
            to_lists(&maximal_nice_sets(&g.view(), &mut cache)),
            vec![vec![0, 1]]
        );
    }

    #[test]
    fn brute_force_rejects_large_graphs() {
        let g = Graph::new(11);
        let mut cache = ThetaCache::new(&g, int(0));
        assert_eq!(
            enumerate_extreme_sets(&g.view(), &mut cache),
            Err(TutteError::GraphTooLarge { n: 11, max: 10 })
        );
    }

    #[test]
    fn maximal_members_keeps_incomparable_sets() {
        let family = vec![
            set(5, &[0]),
            set(5, &[0, 1]),
            set(5, &[2, 3]),
            set(5, &[3]),
            set(5, &[0, 1]),
        ];
        let maximal = maximal_members(&family);
        let lists: Vec<Vec<usize>> = maximal.iter().map(|s| s.to_vec()).collect();
        assert_eq!(lists, vec![vec![0, 1], vec![2, 3]]);
    }

    fn arbitrary_graph(max_n: usize) -> impl Strategy<Value = Graph> {
        (1usize..=max_n).prop_flat_map(|n| {
            let pairs: Vec<(usize, usize)> =
                (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
            proptest::collection::vec(proptest::bool::ANY, pairs.len()).prop_map(move |mask| {
                let chosen: Vec<(usize, usize)> = pairs
                    .iter()
                    .zip(mask.iter())
                    .filter(|(_, &keep)| keep)
                    .map(|(&e, _)| e)
                    .collect();
                Graph::from_edges(n, &chosen).unwrap()
            })
        })
    }

    // The set predicates are stated for arbitrary real theta, so their
    // properties get probed at a non-root value too.
    fn thetas_for(g: &Graph) -> Vec<AlgebraicNumber> {
        let mut out = theta_candidates(g);
        out.push(int(1000));
        out
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(16))]

        #[test]
        fn nice_equals_extreme_for_pairs_and_beyond(g in arbitrary_graph(6)) {
            for theta in thetas_for(&g) {
                let mut cache = ThetaCache::new(&g, theta);
                let nice = enumerate_nice_sets(&g.view(), &mut cache).unwrap();
                let extreme = enumerate_extreme_sets(&g.view(), &mut cache).unwrap();
                let extreme_big: Vec<VertexSet> =
                    extreme.iter().filter(|x| x.len() > 1).cloned().collect();
                prop_assert_eq!(nice, extreme_big);
            }
        }

        #[test]
        fn tutte_implies_extreme(g in arbitrary_graph(6)) {
            for theta in thetas_for(&g) {
                let mut cache = ThetaCache::new(&g, theta);
                let extreme = enumerate_extreme_sets(&g.view(), &mut cache).unwrap();
                for t in enumerate_tutte_sets(&g.view(), &mut cache).unwrap() {
                    prop_assert!(extreme.contains(&t));
                }
            }
        }

        #[test]
        fn maximal_families_coincide(g in arbitrary_graph(6)) {
            for theta in thetas_for(&g) {
                let mut cache = ThetaCache::new(&g, theta);
                let nice_max = maximal_nice_sets(&g.view(), &mut cache);
                let extreme = enumerate_extreme_sets(&g.view(), &mut cache).unwrap();
                let tutte = enumerate_tutte_sets(&g.view(), &mut cache).unwrap();
                let big = |v: Vec<VertexSet>| -> Vec<VertexSet> {
                    v.into_iter().filter(|x| x.len() > 1).collect()
                };
                let extreme_max = big(maximal_members(&extreme));
                let tutte_max = big(maximal_members(&tutte));
                let mut nice_sorted = nice_max;
                nice_sorted.sort_by_key(|s| s.to_vec());
                prop_assert_eq!(&nice_sorted, &extreme_max);
                prop_assert_eq!(&nice_sorted, &tutte_max);
                // Without the size restriction, maximal extreme and maximal
                // Tutte families also agree.
                prop_assert_eq!(maximal_members(&extreme), maximal_members(&tutte));
            }
        }

        #[test]
        fn positive_deletions_never_lose_exactly_one(g in arbitrary_graph(6)) {
            for theta in thetas_for(&g) {
                let mut cache = ThetaCache::new(&g, theta);
                let base = cache.mult(&g.view()) as i64;
                let positive: Vec<usize> = (0..g.n())
                    .filter(|&v| {
                        vertex_class(&mut cache, &g.view(), v) == VertexClass::Positive
                    })
                    .collect();
                for mask in 1u32..(1u32 << positive.len()) {
                    let vs: Vec<usize> = positive
                        .iter()
                        .enumerate()
                        .filter(|(i, _)| mask & (1 << i) != 0)
                        .map(|(_, &v)| v)
                        .collect();
                    let k = vs.len() as i64;
                    let m = cache.mult_without(&g.view(), &vs) as i64;
                    prop_assert!(m == base + k || m <= base + k - 2,
                        "deleting {:?} gave {} from base {}", vs, m, base);
                }
            }
        }

        #[test]
        fn path_deletions_lose_at_most_one(g in arbitrary_graph(6)) {
            for theta in theta_candidates(&g) {
                let mut cache = ThetaCache::new(&g, theta);
                let base = cache.mult(&g.view()) as i64;
                for u in 0..g.n() {
                    for v in (u + 1)..g.n() {
                        let paths = g.view().paths_between(u, v, 10_000).unwrap();
                        for p in paths {
                            let m = cache.mult_without(&g.view(), &p) as i64;
                            prop_assert!(m >= base - 1);
                            if m == base - 1 {
                                // A full drop forces essential endpoints.
                                for &e in [u, v].iter() {
                                    prop_assert_eq!(
                                        vertex_class(&mut cache, &g.view(), e),
                                        VertexClass::Essential
                                    );
                                }
                            }
                        }
                    }
                }
            }
        }

        #[test]
        fn heilmann_lieb_holds_everywhere(g in arbitrary_graph(6)) {
            let mut mu = MatchPolyCache::new();
            for u in 0..g.n() {
                for v in (u + 1)..g.n() {
                    prop_assert_eq!(
                        heilmann_lieb_check(&g.view(), &mut mu, u, v, 10_000),
                        Ok(true)
                    );
                }
            }
        }

        #[test]
        fn path_criterion_matches_pair_deletion_for_positive_pairs(g in arbitrary_graph(6)) {
            for theta in thetas_for(&g) {
                let mut cache = ThetaCache::new(&g, theta);
                let base = cache.mult(&g.view());
                for u in 0..g.n() {
                    for v in (u + 1)..g.n() {
                        let both_positive =
                            vertex_class(&mut cache, &g.view(), u) == VertexClass::Positive
                                && vertex_class(&mut cache, &g.view(), v) == VertexClass::Positive;
                        if both_positive {
                            let lowered = cache.mult_without(&g.view(), &[u, v]) <= base;
                            prop_assert_eq!(
                                path_criterion(&g.view(), &mut cache, u, v, 10_000),
                                Ok(lowered)
                            );
                        }
                    }
                }
            }
        }

        #[test]
        fn matchings_from_maximal_nice_sets_certify(g in arbitrary_graph(6)) {
            for theta in thetas_for(&g) {
                let mut cache = ThetaCache::new(&g, theta);
                let base = cache.mult(&g.view());
                for x in maximal_nice_sets(&g.view(), &mut cache) {
                    let result = nice_matching(&g.view(), &mut cache, &x);
                    prop_assert!(result.is_ok(), "construction failed: {:?}", result);
                    let result = result.unwrap();
                    prop_assert!(result.is_matching_in(&g));
                    prop_assert!(result.x().is_disjoint_from(result.y()));
                    prop_assert!(result.y_independent_in(&g));
                    prop_assert!(result.certificates_all_at_base());
                    // The swapped embedding is only forced when every
                    // swapped pair carries an essential endpoint or two
                    // positive endpoints.
                    if embed_premise(&g.view(), &mut cache, &result) {
                        prop_assert!(embed_check(&g.view(), &mut cache, &result));
                    }
                    // Residual niceness: removing the vertices of any pair
                    // subset leaves the untouched part of X nice.
                    for cert in result.certificates() {
                        let mut dropped = VertexSet::empty(g.n());
                        for &i in &cert.pair_indices {
                            let (px, py) = result.pairs()[i];
                            dropped.insert(px);
                            dropped.insert(py);
                        }
                        let residual = x.minus(&dropped);
                        if residual.len() > 1 {
                            let sub = g.view().without_set(&dropped);
                            prop_assert_eq!(is_nice(&sub, &mut cache, &residual), Ok(true));
                        }
                        prop_assert_eq!(cert.mult, base);
                    }
                }
            }
        }
    }
}
