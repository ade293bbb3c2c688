//! Vertex classification at a matching-polynomial root, and the induced
//! decomposition of the graph.
//!
//! Deleting a vertex changes the multiplicity of theta by exactly -1, 0, or
//! +1 (interlacing), which sorts vertices into essential, neutral, and
//! positive. A special vertex is a non-essential one adjacent to an
//! essential one. Removing the special set splits the rest into components
//! that either keep theta as a root (critical) or drop it (root-free).

use crate::algebraic::AlgebraicNumber;
use crate::graph::{Graph, VertexSet, View};
use crate::matching::ThetaCache;
use serde_json::{json, Value};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum VertexClass {
    /// Deletion lowers the multiplicity by one.
    Essential,
    /// Deletion keeps the multiplicity.
    Neutral,
    /// Deletion raises the multiplicity by one.
    Positive,
}

/// Class of live vertex v in the view, at the cache's theta.
pub fn vertex_class(cache: &mut ThetaCache, view: &View, v: usize) -> VertexClass {
    assert!(view.is_live(v), "classifying a deleted vertex");
    let base = cache.mult(view) as i64;
    let after = cache.mult(&view.without(v)) as i64;
    match after - base {
        -1 => VertexClass::Essential,
        0 => VertexClass::Neutral,
        1 => VertexClass::Positive,
        d => unreachable!("vertex deletion moved the multiplicity by {d}"),
    }
}

/// The decomposition of a graph at theta: vertex classes, the special set,
/// and the components left after removing it.
pub struct ThetaDecomposition {
    theta: AlgebraicNumber,
    base_mult: usize,
    classes: Vec<VertexClass>,
    essential: VertexSet,
    special: VertexSet,
    neutral_rest: VertexSet,
    positive_rest: VertexSet,
    criticals: Vec<VertexSet>,
    rootfree: Vec<VertexSet>,
    critical_of: Vec<Option<usize>>,
    rootfree_of: Vec<Option<usize>>,
}

/// Decomposition of the whole graph at the cache's theta.
pub fn decomposition(g: &Graph, cache: &mut ThetaCache) -> ThetaDecomposition {
    let n = g.n();
    let view = g.view();
    let base_mult = cache.mult(&view);
    let classes: Vec<VertexClass> = (0..n).map(|v| vertex_class(cache, &view, v)).collect();

    let mut essential = VertexSet::empty(n);
    for (v, class) in classes.iter().enumerate() {
        if *class == VertexClass::Essential {
            essential.insert(v);
        }
    }
    let mut special = VertexSet::empty(n);
    for (v, class) in classes.iter().enumerate() {
        if *class != VertexClass::Essential && !g.neighbors(v).is_disjoint_from(&essential) {
            special.insert(v);
        }
    }
    let mut neutral_rest = VertexSet::empty(n);
    let mut positive_rest = VertexSet::empty(n);
    for (v, class) in classes.iter().enumerate() {
        if !special.contains(v) {
            match class {
                VertexClass::Neutral => neutral_rest.insert(v),
                VertexClass::Positive => positive_rest.insert(v),
                VertexClass::Essential => {}
            }
        }
    }

    let mut criticals = vec![];
    let mut rootfree = vec![];
    let mut critical_of = vec![None; n];
    let mut rootfree_of = vec![None; n];
    for comp in view.without_set(&special).components() {
        if cache.mult(&View::of(g, comp.clone())) > 0 {
            for v in comp.iter() {
                critical_of[v] = Some(criticals.len());
            }
            criticals.push(comp);
        } else {
            for v in comp.iter() {
                rootfree_of[v] = Some(rootfree.len());
            }
            rootfree.push(comp);
        }
    }

    ThetaDecomposition {
        theta: cache.theta().clone(),
        base_mult,
        classes,
        essential,
        special,
        neutral_rest,
        positive_rest,
        criticals,
        rootfree,
        critical_of,
        rootfree_of,
    }
}

impl ThetaDecomposition {
    pub fn theta(&self) -> &AlgebraicNumber {
        &self.theta
    }

    /// Multiplicity of theta in the whole graph's matching polynomial.
    pub fn base_mult(&self) -> usize {
        self.base_mult
    }

    pub fn class(&self, v: usize) -> VertexClass {
        self.classes[v]
    }

    pub fn classes(&self) -> &[VertexClass] {
        &self.classes
    }

    /// B: the essential vertices.
    pub fn essential(&self) -> &VertexSet {
        &self.essential
    }

    /// A: the special vertices (non-essential with an essential neighbor).
    pub fn special(&self) -> &VertexSet {
        &self.special
    }

    /// N: neutral vertices outside A.
    pub fn neutral_rest(&self) -> &VertexSet {
        &self.neutral_rest
    }

    /// P: positive vertices outside A.
    pub fn positive_rest(&self) -> &VertexSet {
        &self.positive_rest
    }

    /// Components of G minus A where theta stays a root, by smallest member.
    pub fn criticals(&self) -> &[VertexSet] {
        &self.criticals
    }

    /// Components of G minus A where theta is not a root, by smallest member.
    pub fn rootfree(&self) -> &[VertexSet] {
        &self.rootfree
    }

    /// Index into criticals() of the component holding v, if any.
    pub fn critical_index(&self, v: usize) -> Option<usize> {
        self.critical_of[v]
    }

    /// Index into rootfree() of the component holding v, if any.
    pub fn rootfree_index(&self, v: usize) -> Option<usize> {
        self.rootfree_of[v]
    }

    pub fn to_json(&self) -> Value {
        json!({
            "theta": self.theta.to_json(),
            "base_mult": self.base_mult,
            "B": self.essential.to_vec(),
            "A": self.special.to_vec(),
            "N": self.neutral_rest.to_vec(),
            "P": self.positive_rest.to_vec(),
            "criticals": self.criticals.iter().map(VertexSet::to_vec).collect::<Vec<_>>(),
            "rootfree": self.rootfree.iter().map(VertexSet::to_vec).collect::<Vec<_>>(),
        })
    }
}

/// Whether the view is a critical graph at the cache's theta: connected,
/// nonempty, and every vertex essential. Panics on empty or disconnected
/// views.
pub fn is_theta_critical(cache: &mut ThetaCache, view: &View) -> bool {
    assert!(view.n_live() > 0, "criticality of the empty graph");
    assert!(view.is_connected(), "criticality needs a connected graph");
    view.live()
        .to_vec()
        .into_iter()
        .all(|v| vertex_class(cache, view, v) == VertexClass::Essential)
}

/// Number of components of the view that are critical at the cache's theta.
pub fn count_critical_components(cache: &mut ThetaCache, view: &View) -> usize {
    view.components()
        .into_iter()
        .filter(|c| is_theta_critical(cache, &view.restricted_to(c)))
        .count()
}
