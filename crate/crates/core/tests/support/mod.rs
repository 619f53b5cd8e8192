//! Shared oracle helpers for the integration suites.
//!
//! Everything here is deliberately independent of the library's
//! enumeration and isomorphism code paths: labeled trees come from
//! Prüfer sequences, and canonical forms from center-rooted AHU codes.

#![allow(dead_code)]

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use albertson::Graph;

/// Decodes a Prüfer sequence over `0..n` (length `n - 2`) into its
/// labeled tree.
pub fn prufer_decode(seq: &[usize], n: usize) -> Graph {
    assert!(n >= 2);
    assert_eq!(seq.len(), n - 2);
    let mut degree = vec![1usize; n];
    for &a in seq {
        degree[a] += 1;
    }
    let mut leaves: BinaryHeap<Reverse<usize>> =
        (0..n).filter(|&v| degree[v] == 1).map(Reverse).collect();
    let mut edges = Vec::with_capacity(n - 1);
    for &a in seq {
        let Reverse(u) = leaves.pop().expect("a leaf always remains");
        degree[u] -= 1;
        degree[a] -= 1;
        edges.push((u, a));
        if degree[a] == 1 {
            leaves.push(Reverse(a));
        }
    }
    let Reverse(u) = leaves.pop().expect("two vertices remain");
    let Reverse(v) = leaves.pop().expect("two vertices remain");
    edges.push((u, v));
    Graph::from_edges(n, &edges).expect("Prüfer decoding yields a simple tree")
}

/// Iterates every Prüfer sequence over `0..n` in odometer order, calling
/// `f` with each decoded labeled tree. Covers all `n^(n-2)` trees.
pub fn for_each_labeled_tree(n: usize, mut f: impl FnMut(&Graph)) {
    if n == 1 {
        f(&Graph::new(1));
        return;
    }
    let mut seq = vec![0usize; n - 2];
    loop {
        f(&prufer_decode(&seq, n));
        let mut pos = seq.len();
        loop {
            if pos == 0 {
                return;
            }
            pos -= 1;
            if seq[pos] + 1 < n {
                seq[pos] += 1;
                seq[pos + 1..].fill(0);
                break;
            }
        }
    }
}

/// Tree centers by iterated leaf stripping (one or two vertices).
pub fn tree_centers(t: &Graph) -> Vec<usize> {
    let n = t.order();
    assert!(t.is_tree());
    if n <= 2 {
        return (0..n).collect();
    }
    let mut degree: Vec<usize> = (0..n).map(|v| t.degree(v)).collect();
    let mut removed = vec![false; n];
    let mut layer: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    let mut remaining = n;
    while remaining > 2 {
        let mut next = Vec::new();
        for &v in &layer {
            removed[v] = true;
            remaining -= 1;
            for &w in t.neighbors(v) {
                if !removed[w] {
                    degree[w] -= 1;
                    if degree[w] == 1 {
                        next.push(w);
                    }
                }
            }
        }
        layer = next;
    }
    (0..n).filter(|&v| !removed[v]).collect()
}

fn rooted_code(t: &Graph, v: usize, parent: Option<usize>) -> Vec<u8> {
    let mut child_codes: Vec<Vec<u8>> = t
        .neighbors(v)
        .iter()
        .filter(|&&w| Some(w) != parent)
        .map(|&w| rooted_code(t, w, Some(v)))
        .collect();
    child_codes.sort();
    let mut code = Vec::with_capacity(2 + child_codes.iter().map(Vec::len).sum::<usize>());
    code.push(b'(');
    for c in child_codes {
        code.extend_from_slice(&c);
    }
    code.push(b')');
    code
}

/// Canonical form of a free tree: the lexicographically smallest AHU
/// code over its centers. Two trees get equal codes iff isomorphic.
pub fn canonical_tree_code(t: &Graph) -> Vec<u8> {
    tree_centers(t)
        .into_iter()
        .map(|c| rooted_code(t, c, None))
        .min()
        .expect("trees have at least one center")
}

/// Iterates every labeled graph on `n` vertices (all `2^C(n,2)` edge
/// subsets).
pub fn for_each_labeled_graph(n: usize, mut f: impl FnMut(&Graph)) {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    assert!(pairs.len() < 63, "labeled iteration is for small orders");
    for mask in 0u64..(1 << pairs.len()) {
        let mut g = Graph::new(n);
        for (k, &(u, v)) in pairs.iter().enumerate() {
            if mask >> k & 1 == 1 {
                g.add_edge(u, v).expect("fresh pair");
            }
        }
        f(&g);
    }
}
