//! Tree surgeries with a known effect on the eccentric distance sum.
//!
//! Each operation validates its preconditions, builds a new tree (the input
//! is never modified) and reports the EDS before and after.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::invariants::{diameter, eccentricities, eds, DistanceProfile};
use crate::tree::Tree;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Relation {
    StrictDecrease,
    Equal,
    StrictIncrease,
}

impl Relation {
    pub fn between(before: u64, after: u64) -> Relation {
        match after.cmp(&before) {
            std::cmp::Ordering::Less => Relation::StrictDecrease,
            std::cmp::Ordering::Equal => Relation::Equal,
            std::cmp::Ordering::Greater => Relation::StrictIncrease,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Relation::StrictDecrease => "strict-decrease",
            Relation::Equal => "equal",
            Relation::StrictIncrease => "strict-increase",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TransformOutcome {
    pub result: Tree,
    pub eds_before: u64,
    pub eds_after: u64,
    pub relation: Relation,
}

impl TransformOutcome {
    fn new(before: &Tree, result: Tree) -> TransformOutcome {
        let eds_before = eds(before);
        let eds_after = eds(&result);
        TransformOutcome {
            result,
            eds_before,
            eds_after,
            relation: Relation::between(eds_before, eds_after),
        }
    }
}

fn require_edge(t: &Tree, u: usize, v: usize) -> Result<()> {
    t.check_vertex(u)?;
    t.check_vertex(v)?;
    if !t.has_edge(u, v) {
        return Err(Error::precondition(format!("{u}-{v} is not an edge")));
    }
    Ok(())
}

/// Moves every neighbor of `from` in `moved` over to `to`.
fn reattach(t: &Tree, from: usize, to: usize, moved: &[usize]) -> Result<Tree> {
    let remove: Vec<_> = moved.iter().map(|&x| (from, x)).collect();
    let add: Vec<_> = moved.iter().map(|&x| (to, x)).collect();
    t.rewire(&remove, &add)
}

/// Contracts the non-pendant edge `uv` into `u` and hangs `v` back on `u`
/// as a new leaf.
pub fn edge_growing(t: &Tree, u: usize, v: usize) -> Result<TransformOutcome> {
    if t.order() <= 3 {
        return Err(Error::precondition("edge-growing needs more than 3 vertices"));
    }
    require_edge(t, u, v)?;
    if t.degree(u) < 2 || t.degree(v) < 2 {
        return Err(Error::precondition(format!("{u}-{v} is a pendant edge")));
    }
    let moved: Vec<usize> = t.neighbors(v).iter().copied().filter(|&x| x != u).collect();
    Ok(TransformOutcome::new(t, reattach(t, v, u, &moved)?))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RhoOutcome {
    pub outcome: TransformOutcome,
    /// Root of the hanging path kept at `v`.
    pub kept_path: usize,
    /// Whether the equality condition (equal eccentricities of `v` and `w`
    /// and a longest path through the kept part) holds for the input.
    pub equality_predicted: bool,
}

/// Whether the branch at `root` (away from `parent`) is a path starting at `root`.
fn hanging_path(t: &Tree, parent: usize, root: usize) -> bool {
    let (mut prev, mut cur) = (parent, root);
    loop {
        let next: Vec<usize> = t.neighbors(cur).iter().copied().filter(|&x| x != prev).collect();
        match next.as_slice() {
            [] => return true,
            [x] => {
                prev = cur;
                cur = *x;
            }
            _ => return false,
        }
    }
}

/// Whether `set` induces a path (connected, every induced degree at most 2).
fn induces_path(t: &Tree, set: &[usize]) -> bool {
    let mut inside = vec![false; t.order()];
    for &x in set {
        inside[x] = true;
    }
    let induced_edges = t.edges().iter().filter(|&&(a, b)| inside[a] && inside[b]).count();
    induced_edges + 1 == set.len()
        && set.iter().all(|&x| t.neighbors(x).iter().filter(|&&y| inside[y]).count() <= 2)
}

/// At `v` with `m + 1 >= 3` neighbors, keeps `w` and one hanging path
/// (smallest root id) and moves every other branch of `v` onto `w`.
/// Requires `ecc(v) >= ecc(w)`.
pub fn rho_transform(t: &Tree, v: usize, w: usize) -> Result<RhoOutcome> {
    require_edge(t, v, w)?;
    if t.degree(v) < 3 {
        return Err(Error::precondition(format!("vertex {v} has degree {} < 3", t.degree(v))));
    }
    let ecc = eccentricities(t);
    if ecc[v] < ecc[w] {
        return Err(Error::precondition(format!(
            "ecc({v}) = {} is smaller than ecc({w}) = {}",
            ecc[v], ecc[w]
        )));
    }
    let branches: Vec<usize> = t.neighbors(v).iter().copied().filter(|&x| x != w).collect();
    let kept = branches
        .iter()
        .copied()
        .find(|&x| hanging_path(t, v, x))
        .ok_or_else(|| Error::precondition(format!("no branch at {v} away from {w} is a path")))?;
    let moved: Vec<usize> = branches.iter().copied().filter(|&x| x != kept).collect();
    let result = reattach(t, v, w, &moved)?;

    let mut s = t.component_avoiding(w, &[v]);
    s.extend(t.component_avoiding(kept, &[v]));
    s.push(v);
    let equality_predicted =
        ecc[v] == ecc[w] && induces_path(t, &s) && s.len() as u64 - 1 == ecc.iter().copied().max().unwrap_or(0);

    Ok(RhoOutcome {
        outcome: TransformOutcome::new(t, result),
        kept_path: kept,
        equality_predicted,
    })
}

fn check_spine(t: &Tree, spine: &[usize]) -> Result<()> {
    for &x in spine {
        t.check_vertex(x)?;
    }
    let mut seen = vec![false; t.order()];
    for &x in spine {
        if std::mem::replace(&mut seen[x], true) {
            return Err(Error::precondition(format!("spine repeats vertex {x}")));
        }
    }
    if let Some(w) = spine.windows(2).find(|w| !t.has_edge(w[0], w[1])) {
        return Err(Error::precondition(format!("spine step {}-{} is not an edge", w[0], w[1])));
    }
    if spine.len() < 2 || (spine.len() - 1) as u64 != diameter(t) {
        return Err(Error::precondition("spine is not a longest path"));
    }
    Ok(())
}

/// Sizes of the branches hanging at each interior spine vertex; index `i`
/// holds `|T_i|` (including `v_i`), ends are 0.
pub fn spine_branch_sizes(t: &Tree, spine: &[usize]) -> Vec<usize> {
    let d = spine.len() - 1;
    (0..=d)
        .map(|i| {
            if i == 0 || i == d {
                0
            } else {
                t.component_avoiding(spine[i], &[spine[i - 1], spine[i + 1]]).len()
            }
        })
        .collect()
}

/// On a longest path `v_0 .. v_d` with `|T_1| <= |T_{d-1}|`, takes the first
/// `r` in `2..=d-2` whose branch is nontrivial and moves all off-spine
/// neighbors of `v_r` to `v_1`.
pub fn leaf_block_slide(t: &Tree, spine: &[usize]) -> Result<TransformOutcome> {
    check_spine(t, spine)?;
    let d = spine.len() - 1;
    if d < 4 {
        return Err(Error::precondition("no interior branch: the spine is too short"));
    }
    let sizes = spine_branch_sizes(t, spine);
    if sizes[1] > sizes[d - 1] {
        return Err(Error::precondition(format!(
            "branch at v_1 has {} vertices, more than the {} at v_{}; reverse the spine",
            sizes[1],
            sizes[d - 1],
            d - 1
        )));
    }
    let r = (2..=d - 2)
        .find(|&i| sizes[i] > 1)
        .ok_or_else(|| Error::precondition("no interior branch: the tree is a double broom on this spine"))?;
    let vr = spine[r];
    let moved: Vec<usize> = t
        .neighbors(vr)
        .iter()
        .copied()
        .filter(|&x| x != spine[r - 1] && x != spine[r + 1])
        .collect();
    Ok(TransformOutcome::new(t, reattach(t, vr, spine[1], &moved)?))
}

/// With edges `wu`, `uv`, `deg(w) >= 2` and every neighbor of `v` other than
/// `u` a leaf, moves those leaves from `v` to `w`.
pub fn transformation_i(t: &Tree, w: usize, u: usize, v: usize) -> Result<TransformOutcome> {
    require_edge(t, w, u)?;
    require_edge(t, u, v)?;
    if w == v {
        return Err(Error::precondition("w and v must differ"));
    }
    if t.degree(w) < 2 {
        return Err(Error::precondition(format!("vertex {w} is a leaf")));
    }
    let moved: Vec<usize> = t.neighbors(v).iter().copied().filter(|&x| x != u).collect();
    if moved.is_empty() {
        return Err(Error::precondition(format!("vertex {v} has no leaves to move")));
    }
    if let Some(&x) = moved.iter().find(|&&x| t.degree(x) != 1) {
        return Err(Error::precondition(format!("neighbor {x} of {v} is not a leaf")));
    }
    Ok(TransformOutcome::new(t, reattach(t, v, w, &moved)?))
}

/// Every edge on which [`edge_growing`] applies.
pub fn edge_growing_sites(t: &Tree) -> Vec<(usize, usize)> {
    if t.order() <= 3 {
        return Vec::new();
    }
    let mut out = Vec::new();
    for &(a, b) in t.edges() {
        if t.degree(a) >= 2 && t.degree(b) >= 2 {
            out.push((a, b));
            out.push((b, a));
        }
    }
    out
}

/// Every `(v, w)` on which [`rho_transform`] applies.
pub fn rho_sites(t: &Tree) -> Vec<(usize, usize)> {
    let ecc = eccentricities(t);
    let mut out = Vec::new();
    for v in 0..t.order() {
        if t.degree(v) < 3 {
            continue;
        }
        for &w in t.neighbors(v) {
            if ecc[v] >= ecc[w] && t.neighbors(v).iter().any(|&x| x != w && hanging_path(t, v, x)) {
                out.push((v, w));
            }
        }
    }
    out
}

/// Every longest path, in both directions.
pub fn longest_paths(t: &Tree) -> Vec<Vec<usize>> {
    let profile = DistanceProfile::of(t);
    let d = profile.diameter();
    let leaves = t.leaves();
    let mut out = Vec::new();
    for &a in &leaves {
        if profile.eccentricity[a] != d {
            continue;
        }
        let dist = t.distances_from(a);
        for &b in &leaves {
            if b != a && dist[b] == d {
                out.push(t.path_between(a, b).expect("vertices are in range"));
            }
        }
    }
    out
}

/// Every spine on which [`leaf_block_slide`] applies.
pub fn slide_spines(t: &Tree) -> Vec<Vec<usize>> {
    longest_paths(t)
        .into_iter()
        .filter(|spine| {
            let d = spine.len() - 1;
            if d < 4 {
                return false;
            }
            let sizes = spine_branch_sizes(t, spine);
            sizes[1] <= sizes[d - 1] && (2..=d - 2).any(|i| sizes[i] > 1)
        })
        .collect()
}

/// Every `(w, u, v)` on which [`transformation_i`] applies.
pub fn transformation_i_sites(t: &Tree) -> Vec<(usize, usize, usize)> {
    let mut out = Vec::new();
    for u in 0..t.order() {
        for &v in t.neighbors(u) {
            let others: Vec<usize> = t.neighbors(v).iter().copied().filter(|&x| x != u).collect();
            if others.is_empty() || others.iter().any(|&x| t.degree(x) != 1) {
                continue;
            }
            for &w in t.neighbors(u) {
                if w != v && t.degree(w) >= 2 {
                    out.push((w, u, v));
                }
            }
        }
    }
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum TransformOp {
    #[serde(rename = "egt")]
    EdgeGrowing,
    #[serde(rename = "rho")]
    Rho,
    #[serde(rename = "slide")]
    Slide,
    #[serde(rename = "t1")]
    TransformationI,
}

impl TransformOp {
    pub fn name(self) -> &'static str {
        match self {
            TransformOp::EdgeGrowing => "egt",
            TransformOp::Rho => "rho",
            TransformOp::Slide => "slide",
            TransformOp::TransformationI => "t1",
        }
    }

    /// Applies the operation; `args` are `u,v` / `v,w` / the spine / `w,u,v`.
    pub fn apply(self, t: &Tree, args: &[usize]) -> Result<(TransformOutcome, Option<bool>)> {
        let arity = |k: usize| {
            if args.len() == k {
                Ok(())
            } else {
                Err(Error::param(format!("{} takes {k} vertex arguments, got {}", self.name(), args.len())))
            }
        };
        Ok(match self {
            TransformOp::EdgeGrowing => {
                arity(2)?;
                (edge_growing(t, args[0], args[1])?, None)
            }
            TransformOp::Rho => {
                arity(2)?;
                let r = rho_transform(t, args[0], args[1])?;
                (r.outcome, Some(r.equality_predicted))
            }
            TransformOp::Slide => (leaf_block_slide(t, args)?, None),
            TransformOp::TransformationI => {
                arity(3)?;
                (transformation_i(t, args[0], args[1], args[2])?, None)
            }
        })
    }
}

impl fmt::Display for TransformOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for TransformOp {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "egt" => TransformOp::EdgeGrowing,
            "rho" => TransformOp::Rho,
            "slide" => TransformOp::Slide,
            "t1" => TransformOp::TransformationI,
            other => return Err(Error::Parse(format!("unknown transformation '{other}'"))),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumeration::isomorphic;
    use crate::families::{double_broom, double_star, path, spider, star, t_s};

    #[test]
    fn egt_on_p4_gives_s4() {
        let out = edge_growing(&path(4).unwrap(), 1, 2).unwrap();
        assert!(isomorphic(&out.result, &star(4).unwrap()));
        assert_eq!((out.eds_before, out.eds_after), (52, 33));
        assert_eq!(out.relation, Relation::StrictDecrease);
    }

    #[test]
    fn egt_on_p5() {
        let out = edge_growing(&path(5).unwrap(), 1, 2).unwrap();
        assert!(isomorphic(&out.result, &spider(&[1, 1, 2]).unwrap()));
        assert_eq!(out.relation, Relation::StrictDecrease);
    }

    #[test]
    fn egt_errors() {
        let p4 = path(4).unwrap();
        assert!(matches!(edge_growing(&p4, 0, 1), Err(Error::Precondition(_))));
        assert!(matches!(edge_growing(&p4, 0, 2), Err(Error::Precondition(_))));
        assert!(matches!(edge_growing(&path(3).unwrap(), 0, 1), Err(Error::Precondition(_))));
        assert!(matches!(edge_growing(&p4, 1, 9), Err(Error::VertexOutOfRange { .. })));
    }

    /// z - y - w - v with leaves c, d on v: labels z=0, y=1, w=2, v=3, c=4, d=5.
    fn broom() -> Tree {
        Tree::from_edges(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (3, 5)]).unwrap()
    }

    #[test]
    fn rho_on_broom() {
        let r = rho_transform(&broom(), 3, 2).unwrap();
        assert_eq!(r.kept_path, 4);
        assert_eq!((r.outcome.eds_before, r.outcome.eds_after), (222, 205));
        assert_eq!(r.outcome.relation, Relation::StrictDecrease);
        assert!(!r.equality_predicted);
        assert!(isomorphic(&r.outcome.result, &spider(&[1, 2, 2]).unwrap()));
    }

    #[test]
    fn rho_equality_case() {
        // spider S(1,1,2): hub 0, legs 1 | 2 | 3-4
        let t = spider(&[1, 1, 2]).unwrap();
        let r = rho_transform(&t, 0, 3).unwrap();
        assert!(isomorphic(&r.outcome.result, &t));
        assert_eq!(r.outcome.relation, Relation::Equal);
        assert!(r.equality_predicted);
    }

    #[test]
    fn rho_errors() {
        let p4 = path(4).unwrap();
        assert!(matches!(rho_transform(&p4, 1, 2), Err(Error::Precondition(_))));
        // ecc(center) < ecc(leaf)
        assert!(matches!(rho_transform(&star(4).unwrap(), 0, 1), Err(Error::Precondition(_))));
    }

    #[test]
    fn slide_caterpillar() {
        // z=0 - y=1 - w=2 - v=3 - d=4 with c=5 on w
        let t = Tree::from_edges(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (2, 5)]).unwrap();
        let out = leaf_block_slide(&t, &[0, 1, 2, 3, 4]).unwrap();
        assert_eq!((out.eds_before, out.eds_after), (205, 222));
        assert_eq!(out.relation, Relation::StrictIncrease);
    }

    #[test]
    fn slide_errors() {
        let b = double_broom(5, 2, 3).unwrap();
        let spine = [5, 0, 1, 2, 3, 4, 7];
        assert!(matches!(leaf_block_slide(&b, &spine), Err(Error::Precondition(_))));
        let t = Tree::from_edges(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (2, 5)]).unwrap();
        assert!(leaf_block_slide(&t, &[0, 1, 2, 3]).is_err());
        assert!(leaf_block_slide(&t, &[0, 2, 1, 3, 4]).is_err());
    }

    #[test]
    fn transformation_i_example() {
        let t = t_s(3, 3, 1).unwrap();
        let out = transformation_i(&t, 1, 0, 2).unwrap();
        assert!(isomorphic(&out.result, &double_star(3, 3).unwrap()));
        assert_eq!((out.eds_before, out.eds_after), (205, 160));
        assert_eq!(out.result.bipartition_sizes(), (3, 3));
        // w and v coincide
        assert!(transformation_i(&t, 0, 1, 0).is_err());
        let p5 = path(5).unwrap();
        assert!(matches!(transformation_i(&p5, 0, 1, 2), Err(Error::Precondition(_))));
    }

    #[test]
    fn sites_are_applicable() {
        let t = Tree::from_edges(9, &[(0, 1), (1, 2), (2, 3), (3, 4), (2, 5), (5, 6), (1, 7), (3, 8)]).unwrap();
        for (u, v) in edge_growing_sites(&t) {
            edge_growing(&t, u, v).unwrap();
        }
        for (v, w) in rho_sites(&t) {
            rho_transform(&t, v, w).unwrap();
        }
        for spine in slide_spines(&t) {
            leaf_block_slide(&t, &spine).unwrap();
        }
        for (w, u, v) in transformation_i_sites(&t) {
            transformation_i(&t, w, u, v).unwrap();
        }
        assert!(!slide_spines(&t).is_empty());
    }

    #[test]
    fn op_names() {
        for op in ["egt", "rho", "slide", "t1"] {
            assert_eq!(op.parse::<TransformOp>().unwrap().name(), op);
        }
        assert!("x".parse::<TransformOp>().is_err());
    }
}
