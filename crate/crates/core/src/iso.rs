//! Graph isomorphism testing for desk-scale graphs.
//!
//! Degree-sequence filter, then iterated degree refinement (vertices are
//! recolored by the multiset of their neighbors' colors until stable),
//! then backtracking over color-respecting candidate maps. Intended for
//! n <= 16; larger inputs work but may be slow.

use std::collections::BTreeMap;

use crate::graph::Graph;

/// Stable colors after iterated neighborhood refinement, renumbered so
/// equal signatures get equal colors across both graphs.
fn refine(g1: &Graph, g2: &Graph) -> (Vec<u32>, Vec<u32>) {
    let n1 = g1.order();
    let mut c1: Vec<u32> = (0..n1).map(|v| g1.degree(v) as u32).collect();
    let mut c2: Vec<u32> = (0..g2.order()).map(|v| g2.degree(v) as u32).collect();
    loop {
        let mut table: BTreeMap<(u32, Vec<u32>), u32> = BTreeMap::new();
        let sig = |g: &Graph, colors: &[u32]| -> Vec<(u32, Vec<u32>)> {
            (0..g.order())
                .map(|v| {
                    let mut around: Vec<u32> = g.neighbors(v).iter().map(|&w| colors[w]).collect();
                    around.sort_unstable();
                    (colors[v], around)
                })
                .collect()
        };
        let s1 = sig(g1, &c1);
        let s2 = sig(g2, &c2);
        for s in s1.iter().chain(s2.iter()) {
            let next = table.len() as u32;
            table.entry(s.clone()).or_insert(next);
        }
        let n1_new: Vec<u32> = s1.iter().map(|s| table[s]).collect();
        let n2_new: Vec<u32> = s2.iter().map(|s| table[s]).collect();
        let class_count = |c: &[u32]| {
            let mut v = c.to_vec();
            v.sort_unstable();
            v.dedup();
            v.len()
        };
        let stable = class_count(&n1_new) == class_count(&c1);
        c1 = n1_new;
        c2 = n2_new;
        if stable {
            return (c1, c2);
        }
    }
}

/// True iff an edge-preserving vertex bijection between `g1` and `g2`
/// exists.
pub fn are_isomorphic(g1: &Graph, g2: &Graph) -> bool {
    if g1.order() != g2.order() || g1.edge_count() != g2.edge_count() {
        return false;
    }
    let n = g1.order();
    if n == 0 {
        return true;
    }

    let mut d1: Vec<usize> = (0..n).map(|v| g1.degree(v)).collect();
    let mut d2: Vec<usize> = (0..n).map(|v| g2.degree(v)).collect();
    d1.sort_unstable();
    d2.sort_unstable();
    if d1 != d2 {
        return false;
    }

    let (c1, c2) = refine(g1, g2);
    let mut h1 = c1.clone();
    let mut h2 = c2.clone();
    h1.sort_unstable();
    h2.sort_unstable();
    if h1 != h2 {
        return false;
    }

    // Candidates of each g1 vertex: g2 vertices of the same stable color.
    let mut candidates: Vec<Vec<usize>> = vec![Vec::new(); n];
    for u in 0..n {
        for (v, &color) in c2.iter().enumerate() {
            if c1[u] == color {
                candidates[u].push(v);
            }
        }
    }

    // Assign the most constrained vertices first.
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&u| (candidates[u].len(), std::cmp::Reverse(g1.degree(u))));

    let mut map: Vec<Option<usize>> = vec![None; n];
    let mut used = vec![false; n];
    backtrack(g1, g2, &order, 0, &candidates, &mut map, &mut used)
}

fn backtrack(
    g1: &Graph,
    g2: &Graph,
    order: &[usize],
    depth: usize,
    candidates: &[Vec<usize>],
    map: &mut Vec<Option<usize>>,
    used: &mut Vec<bool>,
) -> bool {
    if depth == order.len() {
        return true;
    }
    let u = order[depth];
    'cand: for &v in &candidates[u] {
        if used[v] {
            continue;
        }
        // Adjacency with every already-placed vertex must match exactly.
        for &w in &order[..depth] {
            let img = map[w].expect("placed");
            if g1.has_edge(u, w) != g2.has_edge(v, img) {
                continue 'cand;
            }
        }
        map[u] = Some(v);
        used[v] = true;
        if backtrack(g1, g2, order, depth + 1, candidates, map, used) {
            return true;
        }
        map[u] = None;
        used[v] = false;
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn relabeled_path_is_isomorphic() {
        let p = Graph::path(4).unwrap();
        let q = p.permuted(&[2, 0, 3, 1]);
        assert!(are_isomorphic(&p, &q));
    }

    #[test]
    fn path_vs_star_differ() {
        let p = Graph::path(4).unwrap();
        let s = Graph::star(4).unwrap();
        assert!(!are_isomorphic(&p, &s));
    }

    #[test]
    fn cycle_vs_two_triangles() {
        let c6 = Graph::cycle(6).unwrap();
        let two_c3 =
            Graph::from_edges(6, &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]).unwrap();
        assert!(!are_isomorphic(&c6, &two_c3));
    }

    #[test]
    fn regular_graphs_need_backtracking() {
        // Prism vs K_{3,3}: both 3-regular on 6 vertices, not isomorphic
        // (K_{3,3} is triangle-free).
        let prism = Graph::prism(3).unwrap();
        let k33 = Graph::from_edges(
            6,
            &[
                (0, 3),
                (0, 4),
                (0, 5),
                (1, 3),
                (1, 4),
                (1, 5),
                (2, 3),
                (2, 4),
                (2, 5),
            ],
        )
        .unwrap();
        assert!(!are_isomorphic(&prism, &k33));
        assert!(are_isomorphic(&k33, &k33.permuted(&[4, 2, 0, 5, 3, 1])));
    }

    #[test]
    fn empty_and_trivial() {
        assert!(are_isomorphic(&Graph::new(0), &Graph::new(0)));
        assert!(are_isomorphic(&Graph::new(1), &Graph::new(1)));
        assert!(!are_isomorphic(&Graph::new(1), &Graph::new(2)));
    }
}
