//! Named tree families with fixed vertex labelings.
//!
//! Every constructor numbers its named vertices first and then appends
//! pendant-leaf groups in the order listed in its doc comment, so the same
//! parameters always give the same labeled tree.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::tree::Tree;

struct Builder {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl Builder {
    fn new() -> Builder {
        Builder { n: 0, edges: Vec::new() }
    }

    fn vertex(&mut self) -> usize {
        self.n += 1;
        self.n - 1
    }

    fn child(&mut self, parent: usize) -> usize {
        let v = self.vertex();
        self.edges.push((parent, v));
        v
    }

    fn leaves(&mut self, on: usize, count: usize) {
        for _ in 0..count {
            self.child(on);
        }
    }

    fn build(self) -> Tree {
        Tree::from_edges(self.n, &self.edges).expect("family constructors produce trees")
    }
}

fn leaf_count(what: &str, value: i64) -> Result<usize> {
    usize::try_from(value).map_err(|_| Error::param(format!("{what} would be {value}")))
}

fn at_least(name: &str, value: usize, min: usize) -> Result<()> {
    if value < min {
        return Err(Error::param(format!("{name} must be at least {min}, got {value}")));
    }
    Ok(())
}

/// Path `0 - 1 - ... - (n-1)`.
pub fn path(n: usize) -> Result<Tree> {
    at_least("n", n, 1)?;
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    Tree::from_edges(n, &edges)
}

/// Star with center 0.
pub fn star(n: usize) -> Result<Tree> {
    at_least("n", n, 1)?;
    let edges: Vec<_> = (1..n).map(|i| (0, i)).collect();
    Tree::from_edges(n, &edges)
}

/// `P_l(a, b)`: spine `0..l`, then `a` leaves on 0, then `b` leaves on `l - 1`.
pub fn double_broom(l: usize, a: usize, b: usize) -> Result<Tree> {
    at_least("l", l, 2)?;
    let mut g = Builder::new();
    let first = g.vertex();
    let mut last = first;
    for _ in 1..l {
        last = g.child(last);
    }
    g.leaves(first, a);
    g.leaves(last, b);
    Ok(g.build())
}

/// `T_{n,beta}`: center 0 adjacent to `1..=n-beta`; vertex `n-beta+i` is a
/// pendant on support `i` for `i` in `1..beta`.
pub fn t_n_beta(n: usize, beta: usize) -> Result<Tree> {
    if beta < 1 || 2 * beta > n {
        return Err(Error::param(format!("need 1 <= beta <= n/2, got n={n}, beta={beta}")));
    }
    let mut g = Builder::new();
    let c = g.vertex();
    g.leaves(c, n - beta);
    for support in 1..beta {
        g.child(support);
    }
    Ok(g.build())
}

/// Spider with hub 0; legs are laid out one after another.
pub fn spider(legs: &[usize]) -> Result<Tree> {
    if let Some(i) = legs.iter().position(|&l| l == 0) {
        return Err(Error::param(format!("leg {i} has length 0")));
    }
    let mut g = Builder::new();
    let hub = g.vertex();
    for &len in legs {
        let mut end = hub;
        for _ in 0..len {
            end = g.child(end);
        }
    }
    Ok(g.build())
}

/// Leg lengths of the balanced spider: `r` legs of `ceil((n-1)/k)` followed
/// by `k - r` legs of `floor((n-1)/k)`, where `r = (n-1) mod k`.
pub fn balanced_legs(n: usize, k: usize) -> Result<Vec<usize>> {
    at_least("k", k, 2)?;
    if n == 0 || n - 1 < k {
        return Err(Error::param(format!("need n - 1 >= k, got n={n}, k={k}")));
    }
    let (q, r) = ((n - 1) / k, (n - 1) % k);
    let mut legs = vec![q + 1; r];
    legs.resize(k, q);
    Ok(legs)
}

pub fn balanced_spider(n: usize, k: usize) -> Result<Tree> {
    spider(&balanced_legs(n, k)?)
}

/// `G^(p)`: the `j`-th pendant of vertex `i` is `n + i*p + j`.
pub fn pendant_expansion(t: &Tree, p: usize) -> Result<Tree> {
    at_least("p", p, 1)?;
    let n = t.order();
    let mut edges = t.edges().to_vec();
    for i in 0..n {
        for j in 0..p {
            edges.push((i, n + i * p + j));
        }
    }
    Tree::from_edges((p + 1) * n, &edges)
}

/// `G o K_1`.
pub fn corona_k1(t: &Tree) -> Tree {
    pendant_expansion(t, 1).expect("p = 1 is valid")
}

/// `T(p, q)`: adjacent centers `u = 0`, `w = 1`; then `p - 1` leaves on `u`
/// and `q - 1` leaves on `w`.
pub fn double_star(p: usize, q: usize) -> Result<Tree> {
    at_least("p", p, 2)?;
    at_least("q", q, 2)?;
    let mut g = Builder::new();
    let u = g.vertex();
    let w = g.child(u);
    g.leaves(u, p - 1);
    g.leaves(w, q - 1);
    Ok(g.build())
}

/// Center `c` with a leaf group, adjacent to `a` and `b`, each carrying a
/// leaf group. Labels `c = 0, a = 1, b = 2`, then the groups of `c`, `a`, `b`.
fn three_star(c_leaves: i64, a_leaves: i64, b_leaves: i64) -> Result<Tree> {
    let counts = [
        leaf_count("center leaf group", c_leaves)?,
        leaf_count("a leaf group", a_leaves)?,
        leaf_count("b leaf group", b_leaves)?,
    ];
    let mut g = Builder::new();
    let c = g.vertex();
    let a = g.child(c);
    let b = g.child(c);
    for (v, k) in [c, a, b].into_iter().zip(counts) {
        g.leaves(v, k);
    }
    Ok(g.build())
}

fn family_param(name: &str, value: usize) -> Result<()> {
    at_least(name, value, 1)
}

/// `T_s`: `c` has `q - 2` leaves, `a` has `p - s - 1`, `b` has `s`.
pub fn t_s(p: usize, q: usize, s: usize) -> Result<Tree> {
    family_param("s", s)?;
    three_star(q as i64 - 2, p as i64 - s as i64 - 1, s as i64)
}

/// `T'_t`: `c` has `p - 2` leaves, `a` has `q - t - 1`, `b` has `t`.
pub fn t_prime_t(p: usize, q: usize, t: usize) -> Result<Tree> {
    family_param("t", t)?;
    three_star(p as i64 - 2, q as i64 - t as i64 - 1, t as i64)
}

/// Hat `T_s`: labels `c = 0, x = 1, y = 2, a = 3, b = 4` with path
/// `c - x - y` and `a`, `b` on `c`; then `q - 3` leaves on `c`, `p - s - 2`
/// on `a`, `s` on `b`.
pub fn hat_t_s(p: usize, q: usize, s: usize) -> Result<Tree> {
    family_param("s", s)?;
    let c_leaves = leaf_count("center leaf group", q as i64 - 3)?;
    let a_leaves = leaf_count("a leaf group", p as i64 - s as i64 - 2)?;
    let mut g = Builder::new();
    let c = g.vertex();
    let x = g.child(c);
    g.child(x);
    let a = g.child(c);
    let b = g.child(c);
    g.leaves(c, c_leaves);
    g.leaves(a, a_leaves);
    g.leaves(b, s);
    Ok(g.build())
}

/// Tilde `T_t`: spine `w1 = 0, w2 = 1, w3 = 2, b = 3`; then `p - 2` leaves
/// on `w1`, `q - t - 2` on `w2`, `t` on `b`.
pub fn tilde_t_t(p: usize, q: usize, t: usize) -> Result<Tree> {
    family_param("t", t)?;
    let w1_leaves = leaf_count("w1 leaf group", p as i64 - 2)?;
    let w2_leaves = leaf_count("w2 leaf group", q as i64 - t as i64 - 2)?;
    let mut g = Builder::new();
    let w1 = g.vertex();
    let w2 = g.child(w1);
    let w3 = g.child(w2);
    let b = g.child(w3);
    g.leaves(w1, w1_leaves);
    g.leaves(w2, w2_leaves);
    g.leaves(b, t);
    Ok(g.build())
}

/// Vec `T_r`: labels `u = 0, b = 1, v = 2, x = 3, y = 4` with `b`, `v` on
/// `u` and path `v - x - y`; then `p - 3` leaves on `u`, `r` on `b`,
/// `q - r - 2` on `v`.
pub fn vec_t_r(p: usize, q: usize, r: usize) -> Result<Tree> {
    family_param("r", r)?;
    let u_leaves = leaf_count("u leaf group", p as i64 - 3)?;
    let v_leaves = leaf_count("v leaf group", q as i64 - r as i64 - 2)?;
    let mut g = Builder::new();
    let u = g.vertex();
    let b = g.child(u);
    let v = g.child(u);
    let x = g.child(v);
    g.child(x);
    g.leaves(u, u_leaves);
    g.leaves(b, r);
    g.leaves(v, v_leaves);
    Ok(g.build())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FamilyId {
    Path,
    Star,
    DoubleBroom,
    TnBeta,
    Spider,
    BalancedSpider,
    Corona,
    PendantExpansion,
    DoubleStar,
    Ts,
    TPrimeT,
    HatTs,
    TildeTt,
    VecTr,
}

/// A family member by name and parameters, with text syntax such as
/// `tnbeta:8,3`, `spider:2,2,2`, `corona:path:3` or `pexp:2:star:4`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum FamilySpec {
    Path(usize),
    Star(usize),
    DoubleBroom(usize, usize, usize),
    TnBeta(usize, usize),
    Spider(Vec<usize>),
    BalancedSpider(usize, usize),
    Corona(Box<FamilySpec>),
    PendantExpansion(usize, Box<FamilySpec>),
    DoubleStar(usize, usize),
    Ts(usize, usize, usize),
    TPrimeT(usize, usize, usize),
    HatTs(usize, usize, usize),
    TildeTt(usize, usize, usize),
    VecTr(usize, usize, usize),
}

impl FamilySpec {
    pub fn family(&self) -> FamilyId {
        match self {
            FamilySpec::Path(_) => FamilyId::Path,
            FamilySpec::Star(_) => FamilyId::Star,
            FamilySpec::DoubleBroom(..) => FamilyId::DoubleBroom,
            FamilySpec::TnBeta(..) => FamilyId::TnBeta,
            FamilySpec::Spider(_) => FamilyId::Spider,
            FamilySpec::BalancedSpider(..) => FamilyId::BalancedSpider,
            FamilySpec::Corona(_) => FamilyId::Corona,
            FamilySpec::PendantExpansion(..) => FamilyId::PendantExpansion,
            FamilySpec::DoubleStar(..) => FamilyId::DoubleStar,
            FamilySpec::Ts(..) => FamilyId::Ts,
            FamilySpec::TPrimeT(..) => FamilyId::TPrimeT,
            FamilySpec::HatTs(..) => FamilyId::HatTs,
            FamilySpec::TildeTt(..) => FamilyId::TildeTt,
            FamilySpec::VecTr(..) => FamilyId::VecTr,
        }
    }

    pub fn build(&self) -> Result<Tree> {
        match self {
            FamilySpec::Path(n) => path(*n),
            FamilySpec::Star(n) => star(*n),
            FamilySpec::DoubleBroom(l, a, b) => double_broom(*l, *a, *b),
            FamilySpec::TnBeta(n, b) => t_n_beta(*n, *b),
            FamilySpec::Spider(legs) => spider(legs),
            FamilySpec::BalancedSpider(n, k) => balanced_spider(*n, *k),
            FamilySpec::Corona(inner) => Ok(corona_k1(&inner.build()?)),
            FamilySpec::PendantExpansion(p, inner) => pendant_expansion(&inner.build()?, *p),
            FamilySpec::DoubleStar(p, q) => double_star(*p, *q),
            FamilySpec::Ts(p, q, s) => t_s(*p, *q, *s),
            FamilySpec::TPrimeT(p, q, t) => t_prime_t(*p, *q, *t),
            FamilySpec::HatTs(p, q, s) => hat_t_s(*p, *q, *s),
            FamilySpec::TildeTt(p, q, t) => tilde_t_t(*p, *q, *t),
            FamilySpec::VecTr(p, q, r) => vec_t_r(*p, *q, *r),
        }
    }
}

fn join(values: &[usize]) -> String {
    values.iter().map(usize::to_string).collect::<Vec<_>>().join(",")
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilySpec::Path(n) => write!(f, "path:{n}"),
            FamilySpec::Star(n) => write!(f, "star:{n}"),
            FamilySpec::DoubleBroom(l, a, b) => write!(f, "broom:{l},{a},{b}"),
            FamilySpec::TnBeta(n, b) => write!(f, "tnbeta:{n},{b}"),
            FamilySpec::Spider(legs) => write!(f, "spider:{}", join(legs)),
            FamilySpec::BalancedSpider(n, k) => write!(f, "bspider:{n},{k}"),
            FamilySpec::Corona(inner) => write!(f, "corona:{inner}"),
            FamilySpec::PendantExpansion(p, inner) => write!(f, "pexp:{p}:{inner}"),
            FamilySpec::DoubleStar(p, q) => write!(f, "dstar:{p},{q}"),
            FamilySpec::Ts(p, q, s) => write!(f, "ts:{p},{q},{s}"),
            FamilySpec::TPrimeT(p, q, t) => write!(f, "tprime:{p},{q},{t}"),
            FamilySpec::HatTs(p, q, s) => write!(f, "hat:{p},{q},{s}"),
            FamilySpec::TildeTt(p, q, t) => write!(f, "tilde:{p},{q},{t}"),
            FamilySpec::VecTr(p, q, r) => write!(f, "vec:{p},{q},{r}"),
        }
    }
}

fn ints(name: &str, text: &str) -> Result<Vec<usize>> {
    text.split(',')
        .map(|s| {
            s.trim()
                .parse()
                .map_err(|_| Error::Parse(format!("{name}: '{s}' is not a non-negative integer")))
        })
        .collect()
}

fn exactly<const K: usize>(name: &str, text: &str) -> Result<[usize; K]> {
    let v = ints(name, text)?;
    v.try_into()
        .map_err(|v: Vec<usize>| Error::Parse(format!("{name} takes {K} parameters, got {}", v.len())))
}

impl FromStr for FamilySpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (id, rest) = s
            .split_once(':')
            .ok_or_else(|| Error::Parse(format!("family spec '{s}' needs the form name:params")))?;
        Ok(match id {
            "path" => FamilySpec::Path(exactly::<1>(id, rest)?[0]),
            "star" => FamilySpec::Star(exactly::<1>(id, rest)?[0]),
            "broom" => {
                let [l, a, b] = exactly(id, rest)?;
                FamilySpec::DoubleBroom(l, a, b)
            }
            "tnbeta" => {
                let [n, b] = exactly(id, rest)?;
                FamilySpec::TnBeta(n, b)
            }
            "spider" => FamilySpec::Spider(ints(id, rest)?),
            "bspider" => {
                let [n, k] = exactly(id, rest)?;
                FamilySpec::BalancedSpider(n, k)
            }
            "corona" => FamilySpec::Corona(Box::new(rest.parse()?)),
            "pexp" => {
                let (p, inner) = rest
                    .split_once(':')
                    .ok_or_else(|| Error::Parse("pexp needs the form pexp:p:spec".into()))?;
                FamilySpec::PendantExpansion(exactly::<1>(id, p)?[0], Box::new(inner.parse()?))
            }
            "dstar" => {
                let [p, q] = exactly(id, rest)?;
                FamilySpec::DoubleStar(p, q)
            }
            "ts" | "tprime" | "hat" | "tilde" | "vec" => {
                let [p, q, x] = exactly(id, rest)?;
                match id {
                    "ts" => FamilySpec::Ts(p, q, x),
                    "tprime" => FamilySpec::TPrimeT(p, q, x),
                    "hat" => FamilySpec::HatTs(p, q, x),
                    "tilde" => FamilySpec::TildeTt(p, q, x),
                    _ => FamilySpec::VecTr(p, q, x),
                }
            }
            other => return Err(Error::Parse(format!("unknown family '{other}'"))),
        })
    }
}

#[cfg(test)]
mod tests {
    use std::collections::BTreeMap;

    use super::*;
    use crate::enumeration::isomorphic;
    use crate::invariants::{eds, DistanceProfile};
    use crate::params::{domination_number, matching_number};

    /// Multiset of (eccentricity, transmission) pairs.
    fn profile(t: &Tree) -> BTreeMap<(u64, u64), u64> {
        let d = DistanceProfile::of(t);
        let mut m = BTreeMap::new();
        for v in 0..t.order() {
            *m.entry((d.eccentricity[v], d.transmission[v])).or_insert(0) += 1;
        }
        m
    }

    fn groups(list: &[(i64, i64, i64)]) -> BTreeMap<(u64, u64), u64> {
        let mut m = BTreeMap::new();
        for &(count, ecc, dist) in list {
            if count > 0 {
                *m.entry((ecc as u64, dist as u64)).or_insert(0) += count as u64;
            }
        }
        m
    }

    #[test]
    fn basic_examples() {
        assert_eq!(eds(&path(4).unwrap()), 52);
        assert_eq!(eds(&star(4).unwrap()), 33);
        assert!(isomorphic(&path(2).unwrap(), &star(2).unwrap()));
        assert!(matches!(path(0), Err(Error::Parameter(_))));
        assert!(isomorphic(&double_broom(2, 1, 1).unwrap(), &path(4).unwrap()));
        assert!(double_broom(1, 2, 2).is_err());
    }

    #[test]
    fn broom_chain_l4_n10() {
        let v: Vec<u64> = (1..=3).map(|a| eds(&double_broom(4, a, 6 - a).unwrap())).collect();
        assert!(v[0] < v[1] && v[1] < v[2], "{v:?}");
    }

    #[test]
    fn degenerate_broom_is_a_double_star() {
        for n in 4..10 {
            let b = double_broom(3, 0, n - 3).unwrap();
            assert!(isomorphic(&b, &double_star(2, n - 2).unwrap()));
            assert!(!isomorphic(&b, &star(n).unwrap()));
        }
    }

    #[test]
    fn t_n_beta_examples() {
        assert_eq!(eds(&t_n_beta(8, 3).unwrap()), 383);
        assert!(isomorphic(&t_n_beta(4, 2).unwrap(), &path(4).unwrap()));
        for n in 2..10 {
            assert!(isomorphic(&t_n_beta(n, 1).unwrap(), &star(n).unwrap()));
        }
        assert!(t_n_beta(8, 5).is_err());
        assert!(t_n_beta(8, 0).is_err());
    }

    #[test]
    fn t_n_beta_parameters() {
        for n in 2..=16 {
            for b in 1..=n / 2 {
                let t = t_n_beta(n, b).unwrap();
                assert_eq!(matching_number(&t), b, "n={n} beta={b}");
                assert_eq!(domination_number(&t), b, "n={n} gamma={b}");
            }
        }
    }

    #[test]
    fn spiders() {
        assert_eq!(eds(&balanced_spider(7, 3).unwrap()), 330);
        assert_eq!(eds(&spider(&[1, 2, 2]).unwrap()), 205);
        assert_eq!(balanced_legs(8, 3).unwrap(), vec![3, 2, 2]);
        for n in 3..10 {
            assert!(isomorphic(&balanced_spider(n, n - 1).unwrap(), &star(n).unwrap()));
        }
        assert!(spider(&[1, 0]).is_err());
        assert!(balanced_spider(3, 3).is_err());
        let s = spider(&[2, 3, 1]).unwrap();
        assert_eq!(s.leaves().len(), 3);
        assert_eq!(s.edges(), &[(0, 1), (0, 3), (0, 6), (1, 2), (3, 4), (4, 5)]);
    }

    #[test]
    fn pendant_expansions() {
        let p2 = path(2).unwrap();
        assert!(isomorphic(&pendant_expansion(&p2, 1).unwrap(), &path(4).unwrap()));
        assert_eq!(eds(&corona_k1(&p2)), 52);
        assert_eq!(domination_number(&corona_k1(&path(3).unwrap())), 3);
        let t = spider(&[1, 2]).unwrap();
        for p in 1..4 {
            let g = pendant_expansion(&t, p).unwrap();
            assert_eq!(g.order(), (p + 1) * t.order());
            assert!(g.has_edge(1, 4 + p));
        }
        assert!(pendant_expansion(&t, 0).is_err());
    }

    #[test]
    fn double_stars() {
        let t = double_star(3, 4).unwrap();
        assert_eq!(eds(&t), 235);
        assert_eq!(t.bipartition_sizes(), (3, 4));
        assert!(isomorphic(&double_star(2, 2).unwrap(), &path(4).unwrap()));
        assert!(double_star(1, 3).is_err());
    }

    #[test]
    fn section_four_examples() {
        assert_eq!(eds(&t_s(3, 3, 1).unwrap()), 205);
        assert_eq!(eds(&t_s(4, 5, 2).unwrap()), 534);
        assert_eq!(eds(&t_prime_t(4, 5, 1).unwrap()), 564);
        for p in 3..8 {
            for s in 1..p {
                assert!(isomorphic(&t_s(p, p, s).unwrap(), &t_prime_t(p, p, s).unwrap()));
            }
        }
        assert!(t_s(3, 3, 0).is_err());
        assert!(t_s(3, 3, 3).is_err());
        assert!(tilde_t_t(5, 6, 5).is_err());
        assert!(vec_t_r(2, 6, 1).is_err());
    }

    #[test]
    fn bipartitions_are_p_q() {
        for p in 4..9 {
            for q in p..12 {
                let mut trees = vec![double_star(p, q).unwrap()];
                for x in 1..=p - 3 {
                    trees.push(t_s(p, q, x).unwrap());
                    trees.push(t_prime_t(p, q, x).unwrap());
                    trees.push(hat_t_s(p, q, x).unwrap());
                    trees.push(tilde_t_t(p, q, x).unwrap());
                }
                for r in 1..=q - 3 {
                    trees.push(vec_t_r(p, q, r).unwrap());
                }
                for t in trees {
                    assert_eq!(t.bipartition_sizes(), (p, q));
                    assert_eq!(t.order(), p + q);
                }
            }
        }
    }

    #[test]
    fn t_s_and_t_prime_profiles() {
        for p in 3..8i64 {
            for q in p..10i64 {
                for s in 1..=(p - 1) / 2 {
                    let expected = groups(&[
                        (p - s - 1, 4, 1 + 2 * (p - s - 1) + 3 * (q - 1) + 4 * s),
                        (1, 3, p - s + 2 * (q - 1) + 3 * s),
                        (1, 2, q + 2 * (p - 1)),
                        (q - 2, 3, 1 + 2 * (q - 1) + 3 * (p - 1)),
                        (1, 3, s + 1 + 2 * (q - 1) + 3 * (p - s - 1)),
                        (s, 4, 1 + 2 * s + 3 * (q - 1) + 4 * (p - s - 1)),
                    ]);
                    let t = t_s(p as usize, q as usize, s as usize).unwrap();
                    assert_eq!(profile(&t), expected, "T_s p={p} q={q} s={s}");
                }
                for t in 1..=(q - 1) / 2 {
                    let expected = groups(&[
                        (q - t - 1, 4, 1 + 2 * (q - t - 1) + 3 * (p - 1) + 4 * t),
                        (1, 3, q - t + 2 * (p - 1) + 3 * t),
                        (1, 2, p + 2 * (q - 1)),
                        (p - 2, 3, 1 + 2 * (p - 1) + 3 * (q - 1)),
                        (1, 3, t + 1 + 2 * (p - 1) + 3 * (q - t - 1)),
                        (t, 4, 1 + 2 * t + 3 * (p - 1) + 4 * (q - t - 1)),
                    ]);
                    let tree = t_prime_t(p as usize, q as usize, t as usize).unwrap();
                    assert_eq!(profile(&tree), expected, "T'_t p={p} q={q} t={t}");
                }
            }
        }
    }

    #[test]
    fn hat_tilde_vec_profiles() {
        for p in 4..8i64 {
            for q in p + 1..11i64 {
                for s in 1..=p - 3 {
                    let expected = groups(&[
                        (p - s - 2, 4, 1 + 2 * (p - s - 2) + 3 * (q - 1) + 4 * (s + 1)),
                        (1, 3, p - s - 1 + 2 * (q - 1) + 3 * (s + 1)),
                        (1, 2, q + 2 * (p - 1)),
                        (q - 3, 3, 1 + 2 * (q - 1) + 3 * (p - 1)),
                        (1, 3, 2 + 2 * (q - 1) + 3 * (p - 2)),
                        (1, 3, s + 1 + 2 * (q - 1) + 3 * (p - s - 1)),
                        (1, 4, 1 + 2 + 3 * (q - 1) + 4 * (p - 2)),
                        (s, 4, 1 + 2 * s + 3 * (q - 1) + 4 * (p - s - 1)),
                    ]);
                    let t = hat_t_s(p as usize, q as usize, s as usize).unwrap();
                    assert_eq!(profile(&t), expected, "hat p={p} q={q} s={s}");
                }
                for t in 1..=p - 3 {
                    let expected = groups(&[
                        (t, 5, 1 + 2 * t + 3 + 4 * (q - t - 1) + 5 * (p - 2)),
                        (1, 4, t + 1 + 2 + 3 * (q - t - 1) + 4 * (p - 2)),
                        (q - t - 2, 4, 1 + 2 * (q - t - 1) + 3 * (p - 1) + 4 * t),
                        (1, 3, 2 + 2 * (q - 1) + 3 * (p - 2)),
                        (1, 3, q - t + 2 * (p - 1) + 3 * t),
                        (1, 4, p - 1 + 2 * (q - t - 1) + 3 + 4 * t),
                        (p - 2, 5, 1 + 2 * (p - 2) + 3 * (q - t - 1) + 4 + 5 * t),
                    ]);
                    let tree = tilde_t_t(p as usize, q as usize, t as usize).unwrap();
                    assert_eq!(profile(&tree), expected, "tilde p={p} q={q} t={t}");
                }
                for r in 1..=q - 3 {
                    let expected = groups(&[
                        (r, 5, 1 + 2 * r + 3 * (p - 2) + 4 * (q - r - 1) + 5),
                        (1, 4, r + 1 + 2 * (p - 2) + 3 * (q - r - 1) + 4),
                        (p - 3, 4, 1 + 2 * (p - 2) + 3 * (q - 1) + 4),
                        (1, 3, p - 1 + 2 * (q - 1) + 3),
                        (1, 3, q - r + 2 * (p - 1) + 3 * r),
                        (q - r - 2, 4, 1 + 2 * (q - r - 1) + 3 * (p - 1) + 4 * r),
                        (1, 4, 2 + 2 * (q - r - 1) + 3 * (p - 2) + 4 * r),
                        (1, 5, 1 + 2 + 3 * (q - r - 1) + 4 * (p - 2) + 5 * r),
                    ]);
                    let tree = vec_t_r(p as usize, q as usize, r as usize).unwrap();
                    assert_eq!(profile(&tree), expected, "vec p={p} q={q} r={r}");
                }
            }
        }
    }

    #[test]
    fn spec_text_roundtrip() {
        for text in [
            "path:5",
            "star:4",
            "broom:4,1,5",
            "tnbeta:8,3",
            "spider:2,2,2",
            "bspider:7,3",
            "corona:path:3",
            "pexp:2:star:4",
            "dstar:3,4",
            "ts:4,5,2",
            "tprime:4,5,1",
            "hat:5,6,1",
            "tilde:5,6,1",
            "vec:5,6,1",
        ] {
            let spec: FamilySpec = text.parse().unwrap();
            assert_eq!(spec.to_string(), text);
            spec.build().unwrap();
        }
        assert_eq!("tnbeta:8,3".parse::<FamilySpec>().unwrap().family(), FamilyId::TnBeta);
        for bad in ["path", "path:x", "dstar:3", "ts:1,2,3,4", "blob:3", "pexp:2"] {
            assert!(bad.parse::<FamilySpec>().is_err(), "{bad}");
        }
    }
}
