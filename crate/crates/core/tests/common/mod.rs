#![allow(dead_code)]

use std::collections::HashSet;

use eds_lab::Tree;

/// Decodes a Prüfer sequence over `0..n` (length `n - 2`).
pub fn prufer_tree(seq: &[usize]) -> Tree {
    let n = seq.len() + 2;
    let mut degree = vec![1usize; n];
    for &x in seq {
        degree[x] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &x in seq {
        let leaf = (0..n).find(|&v| degree[v] == 1).unwrap();
        edges.push((leaf, x));
        degree[leaf] -= 1;
        degree[x] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    edges.push((rest[0], rest[1]));
    Tree::from_edges(n, &edges).unwrap()
}

/// Number of isomorphism classes among all labeled trees on `n` vertices.
pub fn prufer_class_count(n: usize) -> usize {
    if n <= 2 {
        return 1;
    }
    let len = n - 2;
    let mut seq = vec![0usize; len];
    let mut seen: HashSet<String> = HashSet::new();
    loop {
        seen.insert(ahu_form(&prufer_tree(&seq)));
        let mut i = 0;
        loop {
            if i == len {
                return seen.len();
            }
            seq[i] += 1;
            if seq[i] < n {
                break;
            }
            seq[i] = 0;
            i += 1;
        }
    }
}

/// Parenthesis string of the tree rooted at `v`, children sorted.
fn ahu_rooted(t: &Tree, v: usize, parent: usize) -> String {
    let mut kids: Vec<String> = t
        .neighbors(v)
        .iter()
        .filter(|&&c| c != parent)
        .map(|&c| ahu_rooted(t, c, v))
        .collect();
    kids.sort();
    format!("({})", kids.concat())
}

/// Isomorphism invariant of a free tree: smallest rooted form over its centers,
/// found by peeling leaves.
pub fn ahu_form(t: &Tree) -> String {
    let n = t.order();
    let mut degree: Vec<usize> = (0..n).map(|v| t.degree(v)).collect();
    let mut layer: Vec<usize> = (0..n).filter(|&v| degree[v] <= 1).collect();
    let mut left = n;
    while left > 2 {
        left -= layer.len();
        let mut next = Vec::new();
        for &v in &layer {
            for &u in t.neighbors(v) {
                degree[u] -= 1;
                if degree[u] == 1 {
                    next.push(u);
                }
            }
        }
        layer = next;
    }
    layer.iter().map(|&c| ahu_rooted(t, c, usize::MAX)).min().unwrap()
}
