//! Built-in example graphs used by tests, the guide, and the test corpus.

use crate::graph::Graph;

/// graph6 form of [`hub_tree`]; `fixtures/hub_tree.g6` holds the same string.
pub const HUB_TREE_G6: &str = "IPoI?D??G";

/// A ten-vertex tree: two hub vertices 0 and 1 hang off four pendant edges
/// {2,3}, {4,5}, {6,7}, {8,9}, sharing the middle edge {4,5}.
///
/// At theta = 1 the hubs form the special set, the four pendant edges are
/// exactly the critical components, and the pair (3, 5) distinguishes the
/// graph from its supergraph that joins the hubs to everything: deleting
/// {3, 5} lowers the multiplicity by one in the former and by two in the
/// latter.
pub fn hub_tree() -> Graph {
    Graph::from_edges(
        10,
        &[
            (0, 2),
            (0, 4),
            (1, 4),
            (1, 6),
            (1, 8),
            (2, 3),
            (4, 5),
            (6, 7),
            (8, 9),
        ],
    )
    .unwrap()
}
