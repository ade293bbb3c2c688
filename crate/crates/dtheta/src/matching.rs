//! Matching polynomials and root multiplicities, computed exactly.
//!
//! The polynomial of an n-vertex graph is sum over r of (-1)^r m_r x^(n-2r),
//! where m_r counts the r-edge matchings. It is monic of degree n, has only
//! real roots, and multiplies over disjoint unions. Two independent routes
//! compute it: a memoized deletion recursion for real work, and a direct
//! matching enumerator kept as an oracle for tests.

use crate::algebraic::AlgebraicNumber;
use crate::graph::{Graph, VertexSet, View};
use crate::poly::Polynomial;
use num::BigInt;
use std::collections::hash_map::DefaultHasher;
use std::collections::HashMap;
use std::hash::{Hash, Hasher};

const DEFAULT_MEMO_CAP: usize = 1 << 18;

/// Memo from live-vertex masks to matching polynomials. Use one cache per
/// root graph; masks from different graphs must not share a cache.
pub struct MatchPolyCache {
    memo: HashMap<VertexSet, Polynomial>,
    cap: usize,
}

impl Default for MatchPolyCache {
    fn default() -> Self {
        Self::new()
    }
}

impl MatchPolyCache {
    pub fn new() -> Self {
        Self::with_capacity_limit(DEFAULT_MEMO_CAP)
    }

    /// A cache that drops everything once it holds cap entries.
    pub fn with_capacity_limit(cap: usize) -> Self {
        MatchPolyCache {
            memo: HashMap::new(),
            cap: cap.max(1),
        }
    }

    pub fn len(&self) -> usize {
        self.memo.len()
    }

    pub fn is_empty(&self) -> bool {
        self.memo.is_empty()
    }

    fn insert(&mut self, key: VertexSet, value: Polynomial) {
        if self.memo.len() >= self.cap {
            self.memo.clear();
        }
        self.memo.insert(key, value);
    }
}

/// Matching polynomial of the live part of a view.
pub fn matching_polynomial(view: &View, cache: &mut MatchPolyCache) -> Polynomial {
    if view.n_live() == 0 {
        return Polynomial::one();
    }
    if let Some(p) = cache.memo.get(view.live()) {
        return p.clone();
    }
    let comps = view.components();
    let result = if comps.len() > 1 {
        let mut acc = Polynomial::one();
        for c in &comps {
            acc = acc.mul(&matching_polynomial(&view.restricted_to(c), cache));
        }
        acc
    } else {
        // Connected and nonempty: expand on a max-degree vertex u via
        // mu(G) = x mu(G - u) - sum over neighbors v of mu(G - u - v).
        let pivot = view
            .live()
            .iter()
            .max_by_key(|&v| (view.degree(v), usize::MAX - v))
            .unwrap();
        let rest = view.without(pivot);
        let mut acc = matching_polynomial(&rest, cache).shift_up(1);
        for v in view.live_neighbors(pivot).iter() {
            acc = acc.sub(&matching_polynomial(&rest.without(v), cache));
        }
        acc
    };
    cache.insert(view.live().clone(), result.clone());
    result
}

/// Matching polynomial with a throwaway cache.
pub fn matching_polynomial_simple(g: &Graph) -> Polynomial {
    matching_polynomial(&g.view(), &mut MatchPolyCache::new())
}

/// Independent oracle: enumerates every matching directly. Returns None when
/// the view has more than max_vertices live vertices.
pub fn matching_polynomial_oracle(view: &View, max_vertices: usize) -> Option<Polynomial> {
    let n = view.n_live();
    if n > max_vertices {
        return None;
    }
    let edges = view.edges();
    let mut counts = vec![BigInt::from(0); n / 2 + 1];
    let mut used = VertexSet::empty(view.graph().n());
    count_matchings(&edges, 0, 0, &mut used, &mut counts);
    // Assemble sum of (-1)^r counts[r] x^(n - 2r), low degree first.
    let mut coeffs = vec![BigInt::from(0); n + 1];
    for (r, c) in counts.iter().enumerate() {
        let sign = if r % 2 == 0 { 1 } else { -1 };
        coeffs[n - 2 * r] = c * BigInt::from(sign);
    }
    Some(Polynomial::new(coeffs))
}

fn count_matchings(
    edges: &[(usize, usize)],
    start: usize,
    size: usize,
    used: &mut VertexSet,
    counts: &mut [BigInt],
) {
    counts[size] += 1;
    for i in start..edges.len() {
        let (u, v) = edges[i];
        if !used.contains(u) && !used.contains(v) {
            used.insert(u);
            used.insert(v);
            count_matchings(edges, i + 1, size + 1, used, counts);
            used.remove(u);
            used.remove(v);
        }
    }
}

/// Distinct real roots of the matching polynomial, ascending. Every root of
/// the polynomial is real, so these account for all of them.
pub fn theta_candidates(g: &Graph) -> Vec<AlgebraicNumber> {
    let mu = matching_polynomial_simple(g);
    if mu.degree() == Some(0) {
        return vec![];
    }
    AlgebraicNumber::roots_of(&mu)
}

fn graph_fingerprint(g: &Graph) -> u64 {
    let mut h = DefaultHasher::new();
    g.n().hash(&mut h);
    for v in 0..g.n() {
        g.neighbors(v).hash(&mut h);
    }
    h.finish()
}

/// Shared state for all multiplicity queries against one (graph, theta)
/// pair: the polynomial memo plus a memo of multiplicities per live mask.
pub struct ThetaCache {
    theta: AlgebraicNumber,
    fingerprint: u64,
    mu: MatchPolyCache,
    mult_memo: HashMap<VertexSet, usize>,
}

impl ThetaCache {
    pub fn new(g: &Graph, theta: AlgebraicNumber) -> Self {
        ThetaCache {
            theta,
            fingerprint: graph_fingerprint(g),
            mu: MatchPolyCache::new(),
            mult_memo: HashMap::new(),
        }
    }

    pub fn theta(&self) -> &AlgebraicNumber {
        &self.theta
    }

    /// Multiplicity of theta as a root of the view's matching polynomial.
    pub fn mult(&mut self, view: &View) -> usize {
        debug_assert_eq!(
            graph_fingerprint(view.graph()),
            self.fingerprint,
            "view belongs to a different graph than this cache"
        );
        if let Some(&m) = self.mult_memo.get(view.live()) {
            return m;
        }
        // Multiplicativity over disjoint unions: sum per component, so the
        // square-free work happens on small polynomials.
        let mut total = 0;
        for c in view.components() {
            if let Some(&m) = self.mult_memo.get(&c) {
                total += m;
                continue;
            }
            let comp_view = view.restricted_to(&c);
            let mu = matching_polynomial(&comp_view, &mut self.mu);
            let m = self.theta.root_multiplicity(&mu);
            if self.mult_memo.len() >= DEFAULT_MEMO_CAP {
                self.mult_memo.clear();
            }
            self.mult_memo.insert(c, m);
            total += m;
        }
        if self.mult_memo.len() >= DEFAULT_MEMO_CAP {
            self.mult_memo.clear();
        }
        self.mult_memo.insert(view.live().clone(), total);
        total
    }

    /// Multiplicity after deleting the given vertices from the view.
    pub fn mult_without(&mut self, view: &View, drop: &[usize]) -> usize {
        let mut live = view.live().clone();
        for &v in drop {
            live.remove(v);
        }
        self.mult(&View::of(view.graph(), live))
    }
}

/// One-off multiplicity of theta in the matching polynomial of g.
pub fn multiplicity_at(theta: &AlgebraicNumber, g: &Graph) -> usize {
    theta.root_multiplicity(&matching_polynomial_simple(g))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Rational;
    use proptest::prelude::*;

    fn graph(n: usize, edges: &[(usize, usize)]) -> Graph {
        Graph::from_edges(n, edges).unwrap()
    }

    fn p(cs: &[i64]) -> Polynomial {
        Polynomial::from_ints(cs)
    }

    #[test]
    fn frozen_small_polynomials() {
        assert_eq!(matching_polynomial_simple(&graph(0, &[])), p(&[1]));
        assert_eq!(matching_polynomial_simple(&graph(1, &[])), p(&[0, 1]));
        assert_eq!(matching_polynomial_simple(&graph(2, &[(0, 1)])), p(&[-1, 0, 1]));
        // Path on 3 vertices: x^3 - 2x.
        assert_eq!(
            matching_polynomial_simple(&graph(3, &[(0, 1), (1, 2)])),
            p(&[0, -2, 0, 1])
        );
        // 4-cycle: one empty matching, four edges, two disjoint pairs.
        assert_eq!(
            matching_polynomial_simple(&graph(4, &[(0, 1), (1, 2), (2, 3), (0, 3)])),
            p(&[2, 0, -4, 0, 1])
        );
        // Complete graph on 4: six edges, three perfect matchings.
        assert_eq!(
            matching_polynomial_simple(&graph(
                4,
                &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]
            )),
            p(&[3, 0, -6, 0, 1])
        );
    }

    fn petersen() -> Graph {
        let mut edges = vec![];
        for i in 0..5 {
            edges.push((i, (i + 1) % 5)); // outer cycle
            edges.push((i, i + 5)); // spokes
            edges.push((i + 5, 5 + (i + 2) % 5)); // inner pentagram
        }
        graph(10, &edges)
    }

    #[test]
    fn engine_matches_oracle_on_petersen() {
        let g = petersen();
        let fast = matching_polynomial_simple(&g);
        let slow = matching_polynomial_oracle(&g.view(), 12).unwrap();
        assert_eq!(fast, slow);
        assert_eq!(fast.degree(), Some(10));
        assert_eq!(fast.leading(), Some(&BigInt::from(1)));
        // Six perfect matchings.
        assert_eq!(fast.coeff(0), BigInt::from(-6));
    }

    #[test]
    fn oracle_respects_cap() {
        let g = petersen();
        assert!(matching_polynomial_oracle(&g.view(), 9).is_none());
        assert!(matching_polynomial_oracle(&g.view(), 10).is_some());
    }

    #[test]
    fn oracle_on_views_keeps_labels_out() {
        let g = graph(4, &[(0, 1), (1, 2), (2, 3)]);
        let v = g.view().without(0);
        // Path on vertices 1,2,3: x^3 - 2x.
        assert_eq!(
            matching_polynomial_oracle(&v, 12).unwrap(),
            p(&[0, -2, 0, 1])
        );
        assert_eq!(
            matching_polynomial(&v, &mut MatchPolyCache::new()),
            p(&[0, -2, 0, 1])
        );
    }

    #[test]
    fn multiplicities_and_candidates() {
        // mu(P3) = x(x^2 - 2).
        let p3 = graph(3, &[(0, 1), (1, 2)]);
        let zero = AlgebraicNumber::from_integer(0);
        assert_eq!(multiplicity_at(&zero, &p3), 1);
        let cands = theta_candidates(&p3);
        assert_eq!(cands.len(), 3);
        assert!(cands[0] < cands[1] && cands[1] < cands[2]);
        assert!(cands[1].is_zero());
        assert_eq!(cands[2].negate(), cands[0]);
        // Two disjoint edges: mu = (x^2 - 1)^2, so 1 has multiplicity 2.
        let two_k2 = graph(4, &[(0, 1), (2, 3)]);
        let one = AlgebraicNumber::from_integer(1);
        assert_eq!(multiplicity_at(&one, &two_k2), 2);
        assert_eq!(theta_candidates(&graph(0, &[])).len(), 0);
    }

    #[test]
    fn theta_cache_memoizes_and_sums_components() {
        let g = graph(6, &[(0, 1), (2, 3), (4, 5)]);
        let mut cache = ThetaCache::new(&g, AlgebraicNumber::from_integer(1));
        assert_eq!(cache.mult(&g.view()), 3);
        assert_eq!(cache.mult(&g.view()), 3);
        assert_eq!(cache.mult_without(&g.view(), &[0]), 2);
        assert_eq!(cache.mult_without(&g.view(), &[0, 1]), 2);
        assert_eq!(cache.mult_without(&g.view(), &[0, 2, 4]), 0);
    }

    #[test]
    #[cfg(debug_assertions)]
    #[should_panic(expected = "different graph")]
    fn theta_cache_rejects_foreign_views() {
        let g = graph(3, &[(0, 1)]);
        let h = graph(3, &[(1, 2)]);
        let mut cache = ThetaCache::new(&g, AlgebraicNumber::from_integer(0));
        cache.mult(&h.view());
    }

    #[test]
    fn tiny_cache_still_correct() {
        let g = petersen();
        let mut small = MatchPolyCache::with_capacity_limit(2);
        let got = matching_polynomial(&g.view(), &mut small);
        assert_eq!(got, matching_polynomial_simple(&g));
        assert!(small.len() <= 2);
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

    proptest! {
        #[test]
        fn engine_agrees_with_oracle(g in arbitrary_graph(8)) {
            let fast = matching_polynomial_simple(&g);
            let slow = matching_polynomial_oracle(&g.view(), 12).unwrap();
            prop_assert_eq!(fast, slow);
        }

        #[test]
        fn multiplies_over_disjoint_unions(a in arbitrary_graph(5), b in arbitrary_graph(5)) {
            // Place b after a with shifted labels.
            let mut edges = a.edges();
            edges.extend(b.edges().iter().map(|&(u, v)| (u + a.n(), v + a.n())));
            let both = Graph::from_edges(a.n() + b.n(), &edges).unwrap();
            prop_assert_eq!(
                matching_polynomial_simple(&both),
                matching_polynomial_simple(&a).mul(&matching_polynomial_simple(&b))
            );
        }

        #[test]
        fn edge_recurrence(g in arbitrary_graph(7)) {
            prop_assume!(g.edge_count() > 0);
            let (u, v) = g.edges()[0];
            let mut without_edge = g.clone();
            without_edge.remove_edge(u, v);
            let without_ends = g.view().without(u).without(v);
            let expect = matching_polynomial_simple(&without_edge)
                .sub(&matching_polynomial(&without_ends, &mut MatchPolyCache::new()));
            prop_assert_eq!(matching_polynomial_simple(&g), expect);
        }

        #[test]
        fn vertex_recurrence(g in arbitrary_graph(7), pick in 0usize..7) {
            let u = pick % g.n();
            let mut cache = MatchPolyCache::new();
            let rest = g.view().without(u);
            let mut expect = matching_polynomial(&rest, &mut cache).shift_up(1);
            for v in g.neighbors(u).iter() {
                expect = expect.sub(&matching_polynomial(&rest.without(v), &mut cache));
            }
            prop_assert_eq!(matching_polynomial_simple(&g), expect);
        }

        #[test]
        fn derivative_sums_vertex_deletions(g in arbitrary_graph(7)) {
            let mut cache = MatchPolyCache::new();
            let mut sum = Polynomial::zero();
            for v in 0..g.n() {
                sum = sum.add(&matching_polynomial(&g.view().without(v), &mut cache));
            }
            prop_assert_eq!(matching_polynomial_simple(&g).derivative(), sum);
        }

        #[test]
        fn monic_with_alternating_gapped_signs(g in arbitrary_graph(8)) {
            let mu = matching_polynomial_simple(&g);
            let n = g.n();
            prop_assert_eq!(mu.degree(), Some(n));
            prop_assert_eq!(mu.leading(), Some(&BigInt::from(1)));
            for r in 0..=n {
                let c = mu.coeff(n - r);
                if r % 2 == 1 {
                    prop_assert_eq!(c, BigInt::from(0));
                } else {
                    let sign_ok = if (r / 2) % 2 == 0 {
                        c >= BigInt::from(0)
                    } else {
                        c <= BigInt::from(0)
                    };
                    prop_assert!(sign_ok);
                }
            }
        }

        #[test]
        fn all_roots_are_real(g in arbitrary_graph(7)) {
            let mu = matching_polynomial_simple(&g);
            let total: usize = AlgebraicNumber::roots_of(&mu)
                .iter()
                .map(|t| t.root_multiplicity(&mu))
                .sum();
            prop_assert_eq!(total, g.n());
        }

        #[test]
        fn component_multiplicity_sums(g in arbitrary_graph(7), num in -3i64..4, den in 1i64..3) {
            let theta = AlgebraicNumber::from_rational(
                Rational::new(num.into(), den.into()));
            let mut cache = ThetaCache::new(&g, theta.clone());
            let direct = theta.root_multiplicity(&matching_polynomial_simple(&g));
            prop_assert_eq!(cache.mult(&g.view()), direct);
        }

        #[test]
        fn candidate_count_is_bounded_by_degree(g in arbitrary_graph(6)) {
            let cands = theta_candidates(&g);
            prop_assert!(cands.len() <= g.n());
            for w in cands.windows(2) {
                prop_assert!(w[0] < w[1]);
            }
        }
    }
}
