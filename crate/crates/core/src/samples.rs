//! Small hand-drawn trees with known codes, used by tests and examples.
//!
//! Unless a function says otherwise, colors follow [`palette`], which orders
//! color names alphabetically.

use crate::tree::{Color, ColoredArborescence, VertexId};

pub mod palette {
    use crate::tree::Color;

    pub const BLUE: Color = Color(0);
    pub const GREEN: Color = Color(1);
    pub const RED: Color = Color(2);
    pub const VIOLET: Color = Color(3);
    pub const YELLOW: Color = Color(4);

    pub const NAMES: [(&str, Color); 5] = [
        ("blue", BLUE),
        ("green", GREEN),
        ("red", RED),
        ("violet", VIOLET),
        ("yellow", YELLOW),
    ];

    /// One-letter abbreviation used when printing codes.
    pub fn letter(c: Color) -> char {
        NAMES
            .iter()
            .find(|(_, v)| *v == c)
            .and_then(|(name, _)| name.chars().next())
            .unwrap_or('?')
    }
}

use palette::*;

fn tree(parents: &[Option<VertexId>], colors: &[Color]) -> ColoredArborescence {
    ColoredArborescence::from_parents(parents, colors.to_vec()).expect("sample trees are valid")
}

/// Red root with a blue leaf and a blue child holding green and yellow
/// leaves. Code `[0, 2, 2, 0, ∅; b, g, y, b, r]`.
pub fn pruning_example() -> ColoredArborescence {
    tree(
        &[None, Some(0), Some(0), Some(2), Some(2)],
        &[RED, BLUE, BLUE, GREEN, YELLOW],
    )
}

/// Red root with two identical blue children, each holding green and
/// yellow leaves. Swapping the branches is an automorphism.
pub fn automorphic() -> ColoredArborescence {
    tree(
        &[None, Some(0), Some(1), Some(1), Some(0), Some(4), Some(4)],
        &[RED, BLUE, GREEN, YELLOW, BLUE, GREEN, YELLOW],
    )
}

/// Host for the first subarborescence pair; the pattern is
/// [`pruning_example`].
pub fn subtree_host_rooted() -> ColoredArborescence {
    tree(
        &[
            None,
            Some(0),
            Some(0),
            Some(1),
            Some(1),
            Some(2),
            Some(2),
            Some(2),
            Some(5),
            Some(5),
        ],
        &[RED, BLUE, BLUE, GREEN, RED, GREEN, YELLOW, YELLOW, BLUE, YELLOW],
    )
}

/// Host for the second and third pairs: the first host's top two levels
/// hung under a green root that also has a red leaf.
pub fn subtree_host_lifted() -> ColoredArborescence {
    tree(
        &[
            Some(8),
            Some(0),
            Some(0),
            Some(1),
            Some(1),
            Some(2),
            Some(2),
            Some(2),
            None,
            Some(8),
        ],
        &[RED, BLUE, BLUE, GREEN, RED, GREEN, YELLOW, YELLOW, GREEN, RED],
    )
}

/// Pattern of the third pair: [`pruning_example`] plus a green leaf under
/// the root. It does not embed in [`subtree_host_lifted`].
pub fn subtree_pattern_wide() -> ColoredArborescence {
    tree(
        &[None, Some(0), Some(0), Some(2), Some(2), Some(0)],
        &[RED, BLUE, BLUE, GREEN, YELLOW, GREEN],
    )
}

/// Violet root over a red vertex with green and violet leaves.
pub fn motivating_pattern() -> ColoredArborescence {
    tree(&[None, Some(0), Some(1), Some(1)], &[VIOLET, RED, GREEN, VIOLET])
}

/// Contains [`motivating_pattern`]: violet over red with green, red and
/// two violet leaves.
pub fn motivating_star() -> ColoredArborescence {
    tree(
        &[None, Some(0), Some(1), Some(1), Some(1), Some(1)],
        &[VIOLET, RED, GREEN, RED, VIOLET, VIOLET],
    )
}

/// Colors and shape columns line up with [`motivating_pattern`], yet the
/// pattern does not embed: a blue vertex separates violet from red.
pub fn motivating_decoy() -> ColoredArborescence {
    tree(
        &[None, Some(0), Some(1), Some(2), Some(2), Some(0)],
        &[VIOLET, BLUE, RED, GREEN, VIOLET, RED],
    )
}

/// Ten-vertex tree whose subtree arrays are worked out by hand. Uses its own
/// colors: blue = 0, green = 1, yellow = 2.
pub fn ld_example() -> ColoredArborescence {
    let (b, g, y) = (Color(0), Color(1), Color(2));
    tree(
        &[
            None,
            Some(0),
            Some(0),
            Some(1),
            Some(1),
            Some(2),
            Some(2),
            Some(6),
            Some(6),
            Some(6),
        ],
        &[b, y, g, g, b, g, g, b, y, b],
    )
}

/// Two seven-vertex trees paired with their expected canonical ranks
/// (`ranks[v]`). Colors: black = 0, green = 1, red = 2, yellow = 3.
pub fn ld_order_examples() -> Vec<(ColoredArborescence, Vec<usize>)> {
    let (k, g, r, y) = (Color(0), Color(1), Color(2), Color(3));
    let parents = [None, Some(0), Some(0), Some(1), Some(1), Some(2), Some(2)];
    vec![
        // siblings differ by color
        (tree(&parents, &[k, y, g, r, g, y, k]), vec![0, 4, 1, 6, 5, 3, 2]),
        // equal-colored siblings decided by their arrays
        (tree(&parents, &[k, r, r, y, g, y, k]), vec![0, 4, 1, 6, 5, 3, 2]),
    ]
}

/// Undirected seven-vertex tree with classical Prüfer code `[4, 4, 1, 4, 4]`.
pub fn classical_example_edges() -> Vec<(usize, usize)> {
    vec![(3, 1), (1, 4), (4, 0), (4, 2), (4, 5), (4, 6)]
}

/// A pattern and host where the pattern embeds only by swapping sibling
/// order: `(pattern, host)`. Code-based matching (which preserves the
/// depth-first order) reports no embedding here.
pub fn order_sensitive_pair() -> (ColoredArborescence, ColoredArborescence) {
    let pattern = tree(&[None, Some(0), Some(0), Some(2)], &[BLUE, GREEN, GREEN, RED]);
    let host = tree(
        &[None, Some(0), Some(1), Some(0), Some(3)],
        &[BLUE, GREEN, RED, GREEN, VIOLET],
    );
    (pattern, host)
}
