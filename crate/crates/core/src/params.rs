//! Domination and matching numbers: linear tree DPs plus exhaustive oracles.

use crate::error::{Error, Result};
use crate::tree::Tree;

pub const DOMINATION_ORACLE_CAP: usize = 20;
pub const MATCHING_ORACLE_CAP: usize = 16;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ParamKind {
    Domination,
    Matching,
}

impl ParamKind {
    pub fn dp(self, t: &Tree) -> usize {
        match self {
            ParamKind::Domination => domination_number(t),
            ParamKind::Matching => matching_number(t),
        }
    }

    pub fn oracle(self, t: &Tree) -> Result<usize> {
        match self {
            ParamKind::Domination => domination_number_oracle(t),
            ParamKind::Matching => matching_number_oracle(t),
        }
    }
}

/// Parent pointers and a BFS order from vertex 0.
fn rooted_order(t: &Tree) -> (Vec<usize>, Vec<usize>) {
    let n = t.order();
    let mut parent = vec![usize::MAX; n];
    let mut order = Vec::with_capacity(n);
    parent[0] = 0;
    order.push(0);
    let mut i = 0;
    while i < order.len() {
        let x = order[i];
        i += 1;
        for &y in t.neighbors(x) {
            if parent[y] == usize::MAX {
                parent[y] = x;
                order.push(y);
            }
        }
    }
    (parent, order)
}

const INF: usize = usize::MAX / 4;

/// Minimum dominating set size.
///
/// Three states per vertex, rooted at 0:
/// `chosen` (in the set), `covered` (not in the set, dominated by a child),
/// `open` (not in the set, not yet dominated; the parent must be chosen).
pub fn domination_number(t: &Tree) -> usize {
    let (parent, order) = rooted_order(t);
    let n = t.order();
    let mut chosen = vec![1usize; n];
    let mut covered = vec![0usize; n];
    let mut open = vec![0usize; n];
    // smallest extra cost of forcing one child into the set
    let mut best_swap = vec![INF; n];
    let mut has_chosen_child = vec![false; n];

    for &v in order.iter().rev() {
        // every child of v precedes it in reverse BFS order
        if !has_chosen_child[v] {
            covered[v] = covered[v].saturating_add(best_swap[v]).min(INF);
        }
        if v != 0 {
            let p = parent[v];
            chosen[p] += chosen[v].min(covered[v]).min(open[v]);
            let cheaper = chosen[v].min(covered[v]);
            covered[p] += cheaper;
            if chosen[v] <= covered[v] {
                has_chosen_child[p] = true;
            } else {
                best_swap[p] = best_swap[p].min(chosen[v] - covered[v]);
            }
            open[p] = (open[p] + covered[v]).min(INF);
        }
    }
    chosen[0].min(covered[0])
}

/// Maximum matching size.
pub fn matching_number(t: &Tree) -> usize {
    let (parent, order) = rooted_order(t);
    let n = t.order();
    // free[v]: best in subtree with v unmatched; best[v]: best overall
    let mut free = vec![0usize; n];
    let mut best = vec![0usize; n];
    let mut gain = vec![0usize; n];
    for &v in order.iter().rev() {
        best[v] = free[v] + gain[v];
        if v != 0 {
            let p = parent[v];
            free[p] += best[v];
            // matching p-v trades best[v] for free[v] + 1
            let g = (free[v] + 1).saturating_sub(best[v]);
            gain[p] = gain[p].max(g);
        }
    }
    best[0]
}

/// Exhaustive subset scan; `n <= DOMINATION_ORACLE_CAP`.
pub fn domination_number_oracle(t: &Tree) -> Result<usize> {
    let n = t.order();
    if n > DOMINATION_ORACLE_CAP {
        return Err(Error::CapExceeded {
            n,
            cap: DOMINATION_ORACLE_CAP,
        });
    }
    let closed: Vec<u32> = (0..n)
        .map(|v| t.neighbors(v).iter().fold(1u32 << v, |m, &u| m | 1 << u))
        .collect();
    let full = (1u32 << n) - 1;
    let mut best = n;
    for set in 1u32..=full {
        let size = set.count_ones() as usize;
        if size >= best {
            continue;
        }
        let mut cover = 0u32;
        let mut rest = set;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            cover |= closed[v];
            rest &= rest - 1;
        }
        if cover == full {
            best = size;
        }
    }
    Ok(best)
}

/// Exhaustive edge-subset scan; `n <= MATCHING_ORACLE_CAP`.
pub fn matching_number_oracle(t: &Tree) -> Result<usize> {
    let n = t.order();
    if n > MATCHING_ORACLE_CAP {
        return Err(Error::CapExceeded {
            n,
            cap: MATCHING_ORACLE_CAP,
        });
    }
    let edges = t.edges();
    let mut best = 0;
    for subset in 0u32..(1u32 << edges.len()) {
        let size = subset.count_ones() as usize;
        if size <= best {
            continue;
        }
        let mut used = 0u32;
        let mut ok = true;
        for (i, &(u, v)) in edges.iter().enumerate() {
            if subset >> i & 1 == 1 {
                let m = 1 << u | 1 << v;
                if used & m != 0 {
                    ok = false;
                    break;
                }
                used |= m;
            }
        }
        if ok {
            best = size;
        }
    }
    Ok(best)
}
