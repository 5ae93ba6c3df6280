//! Free trees up to isomorphism.
//!
//! Trees are generated as canonical level sequences rooted at a center with
//! the successor algorithm of Wright, Richmond, Odlyzko and McKay: rooted
//! level sequences are walked in decreasing lexicographic order
//! (Beyer-Hedetniemi successor) and whole runs of sequences whose root is
//! not a center are skipped at once.
//!
//! A sequence is accepted when the root is a center: the first subtree
//! (always the tallest) is at most one level taller than the rest of the
//! tree. When the tree is bicentral, both centers are candidate roots and
//! the root is chosen so that the first subtree is the smaller half, by
//! `(size, level sequence)`.
//!
//! [`canonical_code`] computes the same normal form for an arbitrary
//! labeled tree, so the code of a generated tree is its own level sequence.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::params::{domination_number, matching_number};
use crate::tree::Tree;

pub const DEFAULT_CAP: usize = 18;

/// Level sequence of a tree rooted at its canonical center.
///
/// Equal codes mean isomorphic trees. Ordered lexicographically.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalCode(Vec<u32>);

impl CanonicalCode {
    pub fn levels(&self) -> &[u32] {
        &self.0
    }

    pub fn order(&self) -> usize {
        self.0.len()
    }

    pub fn to_tree(&self) -> Tree {
        Tree::from_level_sequence(&self.0).expect("canonical codes are valid level sequences")
    }
}

const DIGITS: &[u8] = b"0123456789abcdefghijklmnopqrstuvwxyz";

/// One base-36 digit per vertex when every level is below 36, otherwise
/// dot-separated decimal levels.
impl fmt::Display for CanonicalCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.iter().all(|&l| (l as usize) < DIGITS.len()) {
            for &l in &self.0 {
                write!(f, "{}", DIGITS[l as usize] as char)?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = self.0.iter().map(u32::to_string).collect();
            f.write_str(&parts.join("."))
        }
    }
}

impl fmt::Debug for CanonicalCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalCode({self})")
    }
}

impl FromStr for CanonicalCode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let levels: Vec<u32> = if s.contains('.') {
            s.split('.')
                .map(|p| p.parse().map_err(|e| Error::Parse(format!("bad level '{p}': {e}"))))
                .collect::<Result<_>>()?
        } else {
            s.chars()
                .map(|c| {
                    c.to_digit(36)
                        .filter(|_| !c.is_ascii_uppercase())
                        .ok_or_else(|| Error::Parse(format!("bad level digit '{c}'")))
                })
                .collect::<Result<_>>()?
        };
        let tree = Tree::from_level_sequence(&levels)?;
        let code = canonical_code(&tree);
        if code.0 != levels {
            return Err(Error::Parse(format!("'{s}' is a level sequence but not a canonical code")));
        }
        Ok(code)
    }
}

impl Serialize for CanonicalCode {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for CanonicalCode {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Center vertices (one or two) by repeatedly peeling leaves.
pub fn centers(t: &Tree) -> Vec<usize> {
    let n = t.order();
    if n <= 2 {
        return (0..n).collect();
    }
    let mut degree: Vec<usize> = (0..n).map(|v| t.degree(v)).collect();
    let mut layer: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    let mut remaining = n;
    while remaining > 2 {
        remaining -= layer.len();
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
    layer.sort_unstable();
    layer
}

/// Canonical level sequence of the subtree at `root`, never entering `blocked`.
fn rooted_canonical(t: &Tree, root: usize, blocked: Option<usize>) -> Vec<u32> {
    let n = t.order();
    let mut parent = vec![usize::MAX; n];
    let mut order = vec![root];
    parent[root] = root;
    if let Some(b) = blocked {
        parent[b] = b;
    }
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
    let mut children: Vec<Vec<Vec<u32>>> = vec![Vec::new(); n];
    let mut done: Vec<Vec<u32>> = vec![Vec::new(); n];
    for &v in order.iter().rev() {
        let mut kids = std::mem::take(&mut children[v]);
        kids.sort_unstable_by(|a, b| b.cmp(a));
        let mut seq = Vec::with_capacity(1 + kids.iter().map(Vec::len).sum::<usize>());
        seq.push(0);
        for k in kids {
            seq.extend(k.into_iter().map(|l| l + 1));
        }
        if v == root {
            done[v] = seq;
        } else {
            children[parent[v]].push(seq);
        }
    }
    std::mem::take(&mut done[root])
}

/// `(size, sequence)` order used to pick the root of a bicentral tree.
fn half_order(a: &[u32], b: &[u32]) -> Ordering {
    a.len().cmp(&b.len()).then_with(|| a.cmp(b))
}

pub fn canonical_code(t: &Tree) -> CanonicalCode {
    let c = centers(t);
    if c.len() == 1 {
        return CanonicalCode(rooted_canonical(t, c[0], None));
    }
    let (a, b) = (c[0], c[1]);
    let half_a = rooted_canonical(t, a, Some(b));
    let half_b = rooted_canonical(t, b, Some(a));
    // root at the center whose opposite half is not larger
    let (first, rest) = if half_order(&half_b, &half_a) != Ordering::Greater {
        (half_b, half_a)
    } else {
        (half_a, half_b)
    };
    let mut seq = Vec::with_capacity(t.order());
    seq.push(0);
    seq.extend(first.iter().map(|l| l + 1));
    seq.extend_from_slice(&rest[1..]);
    CanonicalCode(seq)
}

pub fn isomorphic(a: &Tree, b: &Tree) -> bool {
    a.order() == b.order() && canonical_code(a) == canonical_code(b)
}

/// Streaming generator of one canonical level sequence per free tree.
///
/// Restartable (construct again) and chunkable with `skip`/`take`; the
/// sequence order is fixed, so index ranges are stable across runs.
#[derive(Clone, Debug)]
pub struct FreeTrees {
    layout: Vec<u32>,
    state: State,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum State {
    /// `layout` holds a candidate that still needs the center check.
    Candidate,
    Done,
}

impl FreeTrees {
    pub fn new(n: usize) -> Result<FreeTrees> {
        FreeTrees::with_cap(n, DEFAULT_CAP)
    }

    pub fn with_cap(n: usize, cap: usize) -> Result<FreeTrees> {
        if n == 0 {
            return Err(Error::Empty);
        }
        if n > cap {
            return Err(Error::CapExceeded { n, cap });
        }
        // path rooted at its center
        let layout: Vec<u32> = (0..=(n / 2) as u32).chain(1..n.div_ceil(2) as u32).collect();
        Ok(FreeTrees {
            layout,
            state: State::Candidate,
        })
    }
}

/// Length of the first subtree of the root (positions `1..=len`).
fn first_subtree_len(layout: &[u32]) -> usize {
    layout[2..].iter().position(|&l| l == 1).map_or(layout.len() - 1, |i| i + 1)
}

enum Check {
    Valid,
    /// Skip ahead by advancing at this position.
    Invalid(usize),
}

fn center_check(layout: &[u32]) -> Check {
    let n = layout.len();
    if n <= 2 {
        return Check::Valid;
    }
    let m = first_subtree_len(layout);
    if m == n - 1 {
        // root has a single child, so it is a leaf and never a center for n >= 3
        return Check::Invalid(m);
    }
    let left = &layout[1..=m];
    let rest = &layout[m + 1..];
    let left_height = left.iter().max().unwrap() - 1;
    let rest_height = *rest.iter().max().unwrap();
    let valid = match rest_height.cmp(&left_height) {
        Ordering::Less => false,
        Ordering::Greater => true,
        Ordering::Equal => {
            // halves: left re-rooted at its own root, rest is [0] + rest
            let rest_len = rest.len() + 1;
            match m.cmp(&rest_len) {
                Ordering::Less => true,
                Ordering::Greater => false,
                Ordering::Equal => {
                    let l = left.iter().map(|x| x - 1);
                    let r = std::iter::once(0).chain(rest.iter().copied());
                    l.le(r)
                }
            }
        }
    };
    if valid {
        Check::Valid
    } else {
        Check::Invalid(m)
    }
}

/// Beyer-Hedetniemi successor, advancing at position `p` (or at the last
/// position whose level exceeds 1 when `p` is `None`). Returns false when
/// the sequence is the star, which has no successor.
fn next_rooted(layout: &mut [u32], p: Option<usize>) -> bool {
    let p = match p {
        Some(p) => p,
        None => match layout.iter().rposition(|&l| l > 1) {
            Some(p) => p,
            None => return false,
        },
    };
    if p == 0 || layout[p] <= 1 {
        return false;
    }
    let mut q = p - 1;
    while layout[q] != layout[p] - 1 {
        q -= 1;
    }
    for i in p..layout.len() {
        layout[i] = layout[i - p + q];
    }
    true
}

impl Iterator for FreeTrees {
    type Item = CanonicalCode;

    fn next(&mut self) -> Option<CanonicalCode> {
        loop {
            if self.state == State::Done {
                return None;
            }
            match center_check(&self.layout) {
                Check::Valid => {
                    let out = CanonicalCode(self.layout.clone());
                    if !next_rooted(&mut self.layout, None) {
                        self.state = State::Done;
                    }
                    return Some(out);
                }
                Check::Invalid(p) => {
                    let deep = self.layout[p] > 2;
                    if !next_rooted(&mut self.layout, Some(p)) {
                        self.state = State::Done;
                        continue;
                    }
                    if deep {
                        // the rest of the tree must be at least as tall as the new first subtree
                        let m = first_subtree_len(&self.layout);
                        let h = self.layout[1..=m].iter().max().copied().unwrap();
                        let n = self.layout.len();
                        let suffix_len = h as usize;
                        for (k, slot) in self.layout[n - suffix_len..].iter_mut().enumerate() {
                            *slot = k as u32 + 1;
                        }
                    }
                }
            }
        }
    }
}

/// All free trees of order `n` as labeled trees (vertex `i` is position `i`
/// of the canonical code).
pub fn free_trees(n: usize) -> Result<impl Iterator<Item = Tree>> {
    Ok(FreeTrees::new(n)?.map(|c| c.to_tree()))
}

/// Class filter: every field that is set must match.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConstraintSpec {
    pub leaf_count: Option<usize>,
    pub domination: Option<usize>,
    pub matching: Option<usize>,
    pub bipartition: Option<(usize, usize)>,
}

impl ConstraintSpec {
    pub fn accepts(&self, t: &Tree) -> bool {
        if let Some(k) = self.leaf_count {
            if t.leaves().len() != k {
                return false;
            }
        }
        if let Some((p, q)) = self.bipartition {
            if t.bipartition_sizes() != (p.min(q), p.max(q)) {
                return false;
            }
        }
        if let Some(g) = self.domination {
            if domination_number(t) != g {
                return false;
            }
        }
        if let Some(b) = self.matching {
            if matching_number(t) != b {
                return false;
            }
        }
        true
    }
}

pub fn filtered_trees(n: usize, c: ConstraintSpec) -> Result<impl Iterator<Item = Tree>> {
    Ok(free_trees(n)?.filter(move |t| c.accepts(t)))
}
