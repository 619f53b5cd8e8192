//! Exhaustive enumeration of free trees, one representative per
//! isomorphism class, and the extremal verification built on it.
//!
//! Trees are generated through canonical level sequences: a rooted tree
//! is written as the depth-first list of vertex levels with subtrees in
//! non-increasing order, and a free tree is rooted so that the first
//! subtree of the root is no "heavier" than the rest. Successive
//! representatives come from the constant-amortized-time successor of
//! Wright, Richmond, Odlyzko and McKay; each step rewrites only a suffix
//! of the sequence.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::invariants::{modified_albertson, tree_bound_is_tight, tree_lower_bound};

/// Enumeration cap; above this the sequences are still correct but the
/// counts grow into the hundreds of thousands.
pub const MAX_TREE_ORDER: usize = 18;

/// Iterator over all non-isomorphic free trees of a fixed order.
pub struct FreeTrees {
    /// Pending canonical level sequence, `None` once exhausted.
    layout: Option<Vec<usize>>,
    /// The order-1 tree is emitted directly, outside the successor walk.
    single_pending: bool,
}

/// All free trees on `n` vertices, `1 <= n <= 18`.
pub fn free_trees(n: usize) -> Result<FreeTrees> {
    if n < 1 {
        return Err(Error::SizeTooSmall {
            what: "tree order",
            size: n,
            min: 1,
        });
    }
    if n > MAX_TREE_ORDER {
        return Err(Error::Unsupported(format!(
            "free-tree enumeration is capped at order {MAX_TREE_ORDER}, got {n}"
        )));
    }
    if n == 1 {
        return Ok(FreeTrees {
            layout: None,
            single_pending: true,
        });
    }
    // Start from the path rooted at its center.
    let mut layout: Vec<usize> = (0..=n / 2).collect();
    layout.extend(1..n.div_ceil(2));
    Ok(FreeTrees {
        layout: Some(layout),
        single_pending: false,
    })
}

impl Iterator for FreeTrees {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        if self.single_pending {
            self.single_pending = false;
            return Some(Graph::new(1));
        }
        let candidate = self.layout.take()?;
        let snapped = snap_to_free_tree(&candidate);
        let graph = layout_to_graph(&snapped);
        self.layout = next_rooted_layout(&snapped, None);
        Some(graph)
    }
}

/// Splits a level sequence into the root's first subtree (levels shifted
/// down by one) and the remaining tree (root kept).
fn split_layout(layout: &[usize]) -> (Vec<usize>, Vec<usize>) {
    let mut seen_one = false;
    let mut m = layout.len();
    for (i, &level) in layout.iter().enumerate() {
        if level == 1 {
            if seen_one {
                m = i;
                break;
            }
            seen_one = true;
        }
    }
    let left: Vec<usize> = layout[1..m].iter().map(|&l| l - 1).collect();
    let mut rest = Vec::with_capacity(layout.len() - m + 1);
    rest.push(0);
    rest.extend_from_slice(&layout[m..]);
    (left, rest)
}

/// Successor of a canonical rooted level sequence; `None` after the
/// star, which is the last sequence. With `at` given, the change is
/// forced at that position.
fn next_rooted_layout(layout: &[usize], at: Option<usize>) -> Option<Vec<usize>> {
    let p = match at {
        Some(p) => p,
        None => {
            let mut p = layout.len() - 1;
            while layout[p] == 1 {
                p -= 1;
            }
            p
        }
    };
    if p == 0 {
        return None;
    }
    let mut q = p - 1;
    while layout[q] != layout[p] - 1 {
        q -= 1;
    }
    let mut next = layout.to_vec();
    // Replicate the block starting at q over the tail; reads may hit
    // already-rewritten positions, which is what keeps it periodic.
    for i in p..next.len() {
        next[i] = next[i - p + q];
    }
    Some(next)
}

/// Returns `candidate` itself when it encodes a centered free tree, or
/// jumps to the next sequence that does.
fn snap_to_free_tree(candidate: &[usize]) -> Vec<usize> {
    let (left, rest) = split_layout(candidate);
    let left_height = *left.iter().max().expect("first subtree is nonempty");
    let rest_height = *rest.iter().max().expect("rest contains the root");

    let mut valid = rest_height >= left_height;
    if valid
        && rest_height == left_height
        && (left.len() > rest.len() || (left.len() == rest.len() && left > rest))
    {
        valid = false;
    }
    if valid {
        return candidate.to_vec();
    }

    let p = left.len();
    let mut next =
        next_rooted_layout(candidate, Some(p)).expect("first subtree is never at position 0");
    if candidate[p] > 2 {
        let (new_left, _) = split_layout(&next);
        let new_left_height = *new_left.iter().max().expect("nonempty");
        let suffix_start = next.len() - (new_left_height + 1);
        for (offset, slot) in next[suffix_start..].iter_mut().enumerate() {
            *slot = offset + 1;
        }
    }
    next
}

/// Materializes a level sequence: each vertex is joined to the nearest
/// earlier vertex one level up.
fn layout_to_graph(layout: &[usize]) -> Graph {
    let mut g = Graph::new(layout.len());
    let mut stack: Vec<usize> = Vec::new();
    for (i, &level) in layout.iter().enumerate() {
        if !stack.is_empty() {
            while layout[*stack.last().expect("nonempty")] != level - 1 {
                stack.pop();
            }
            g.add_edge(*stack.last().expect("root never pops"), i)
                .expect("layout positions are distinct");
        }
        stack.push(i);
    }
    g
}

/// Outcome of sweeping every free tree of one order.
#[derive(Debug, Clone)]
pub struct TreeReport {
    pub order: usize,
    pub tree_count: usize,
    pub min_value: u64,
    pub max_value: u64,
    pub min_witnesses: usize,
    pub max_witnesses: usize,
    /// Trees whose index falls below `max_degree (max_degree^2 - 1)`;
    /// expected empty.
    pub bound_violations: Vec<Graph>,
    /// Trees where attaining the bound disagrees with the path-or-spider
    /// classification; expected empty.
    pub equality_mismatches: Vec<Graph>,
}

/// Sweeps all free trees of order `n >= 5`, recording the extremal
/// values, how often they are attained, and any counterexamples to the
/// lower bound or its equality classification. Counterexamples are
/// returned verbatim, never suppressed.
pub fn verify_trees(n: usize) -> Result<TreeReport> {
    if n < 5 {
        return Err(Error::Precondition(format!(
            "the extremal tree characterization assumes order >= 5, got {n}"
        )));
    }
    let mut report = TreeReport {
        order: n,
        tree_count: 0,
        min_value: u64::MAX,
        max_value: 0,
        min_witnesses: 0,
        max_witnesses: 0,
        bound_violations: Vec::new(),
        equality_mismatches: Vec::new(),
    };
    for tree in free_trees(n)? {
        debug_assert!(tree.is_tree());
        report.tree_count += 1;
        let value = modified_albertson(&tree);

        if value < report.min_value {
            report.min_value = value;
            report.min_witnesses = 1;
        } else if value == report.min_value {
            report.min_witnesses += 1;
        }
        if value > report.max_value {
            report.max_value = value;
            report.max_witnesses = 1;
        } else if value == report.max_value {
            report.max_witnesses += 1;
        }

        let bound = tree_lower_bound(tree.max_degree() as u64);
        if value < bound {
            report.bound_violations.push(tree.clone());
        }
        let tight = tree_bound_is_tight(&tree).expect("enumerated graphs are trees");
        if (value == bound) != tight {
            report.equality_mismatches.push(tree);
        }
    }
    Ok(report)
}
