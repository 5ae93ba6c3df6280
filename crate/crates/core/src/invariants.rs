//! Distance-based invariants: transmission, eccentricity, the eccentric
//! distance sum and its relatives. All values are exact `u64`.

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::tree::{Tree, VertexVector};

/// Largest order for which [`DistanceMatrix`] is materialized.
pub const MATRIX_LIMIT: usize = 2048;

/// Eccentricity and transmission of every vertex, from `n` BFS passes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceProfile {
    pub eccentricity: VertexVector,
    pub transmission: VertexVector,
}

impl DistanceProfile {
    pub fn of(t: &Tree) -> DistanceProfile {
        let n = t.order();
        let mut ecc = Vec::with_capacity(n);
        let mut trans = Vec::with_capacity(n);
        for v in 0..n {
            let d = t.distances_from(v);
            ecc.push(d.iter().copied().max().unwrap_or(0));
            trans.push(d.iter().sum());
        }
        DistanceProfile {
            eccentricity: ecc.into(),
            transmission: trans.into(),
        }
    }

    pub fn radius(&self) -> u64 {
        self.eccentricity.iter().copied().min().unwrap_or(0)
    }

    pub fn diameter(&self) -> u64 {
        self.eccentricity.iter().copied().max().unwrap_or(0)
    }

    pub fn center(&self) -> Vec<usize> {
        let r = self.radius();
        (0..self.eccentricity.len())
            .filter(|&v| self.eccentricity[v] == r)
            .collect()
    }

    /// Vertex form `sum_v ecc(v) * D(v)`.
    pub fn eds(&self) -> u64 {
        self.eccentricity
            .iter()
            .zip(self.transmission.iter())
            .map(|(e, d)| e * d)
            .sum()
    }

    pub fn wiener(&self) -> u64 {
        self.transmission.sum() / 2
    }

    pub fn total_eccentricity(&self) -> u64 {
        self.eccentricity.sum()
    }
}

/// Full all-pairs distance table, row-major, for `n <= MATRIX_LIMIT`.
pub struct DistanceMatrix {
    n: usize,
    data: Vec<u32>,
}

impl DistanceMatrix {
    pub fn of(t: &Tree) -> Option<DistanceMatrix> {
        let n = t.order();
        if n > MATRIX_LIMIT {
            return None;
        }
        let mut data = Vec::with_capacity(n * n);
        for v in 0..n {
            data.extend(t.distances_from(v).into_iter().map(|d| d as u32));
        }
        Some(DistanceMatrix { n, data })
    }

    pub fn get(&self, u: usize, v: usize) -> u64 {
        self.data[u * self.n + v] as u64
    }
}

pub fn transmission(t: &Tree, v: usize) -> Result<u64> {
    Ok(t.bfs_distances(v)?.sum())
}

pub fn eccentricity(t: &Tree, v: usize) -> Result<u64> {
    Ok(t.bfs_distances(v)?.iter().copied().max().unwrap_or(0))
}

pub fn eccentricities(t: &Tree) -> VertexVector {
    DistanceProfile::of(t).eccentricity
}

pub fn transmissions(t: &Tree) -> VertexVector {
    DistanceProfile::of(t).transmission
}

pub fn radius(t: &Tree) -> u64 {
    DistanceProfile::of(t).radius()
}

pub fn diameter(t: &Tree) -> u64 {
    DistanceProfile::of(t).diameter()
}

pub fn center(t: &Tree) -> Vec<usize> {
    DistanceProfile::of(t).center()
}

/// Eccentric distance sum, vertex form.
pub fn eds(t: &Tree) -> u64 {
    DistanceProfile::of(t).eds()
}

/// Eccentric distance sum, pair form `sum_{u<v} (ecc(u) + ecc(v)) d(u, v)`.
pub fn eds_pair_form(t: &Tree) -> u64 {
    let ecc = eccentricities(t);
    let n = t.order();
    let mut total = 0;
    match DistanceMatrix::of(t) {
        Some(m) => {
            for u in 0..n {
                for v in u + 1..n {
                    total += (ecc[u] + ecc[v]) * m.get(u, v);
                }
            }
        }
        None => {
            for u in 0..n {
                let d = t.distances_from(u);
                for v in u + 1..n {
                    total += (ecc[u] + ecc[v]) * d[v];
                }
            }
        }
    }
    total
}

pub fn wiener(t: &Tree) -> u64 {
    DistanceProfile::of(t).wiener()
}

pub fn degree_distance(t: &Tree) -> u64 {
    let trans = transmissions(t);
    (0..t.order()).map(|v| t.degree(v) as u64 * trans[v]).sum()
}

pub fn ecc_connectivity(t: &Tree) -> u64 {
    let ecc = eccentricities(t);
    (0..t.order()).map(|v| t.degree(v) as u64 * ecc[v]).sum()
}

pub fn total_eccentricity(t: &Tree) -> u64 {
    DistanceProfile::of(t).total_eccentricity()
}

/// The scalar invariants that can be ranked by an extremal scan.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Invariant {
    Eds,
    Wiener,
    DegreeDistance,
    EccConnectivity,
    TotalEcc,
}

impl Invariant {
    pub fn evaluate(self, t: &Tree) -> u64 {
        match self {
            Invariant::Eds => eds(t),
            Invariant::Wiener => wiener(t),
            Invariant::DegreeDistance => degree_distance(t),
            Invariant::EccConnectivity => ecc_connectivity(t),
            Invariant::TotalEcc => total_eccentricity(t),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Invariant::Eds => "eds",
            Invariant::Wiener => "wiener",
            Invariant::DegreeDistance => "degree-distance",
            Invariant::EccConnectivity => "ecc-connectivity",
            Invariant::TotalEcc => "total-ecc",
        }
    }
}

impl std::str::FromStr for Invariant {
    type Err = crate::Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "eds" => Invariant::Eds,
            "wiener" => Invariant::Wiener,
            "degree-distance" => Invariant::DegreeDistance,
            "ecc-connectivity" => Invariant::EccConnectivity,
            "total-ecc" => Invariant::TotalEcc,
            other => return Err(crate::Error::Parse(format!("unknown invariant '{other}'"))),
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantRecord {
    pub n: usize,
    pub eds: u64,
    pub wiener: u64,
    pub degree_distance: u64,
    pub ecc_connectivity: u64,
    pub total_eccentricity: u64,
    pub radius: u64,
    pub diameter: u64,
    pub center: Vec<usize>,
    pub leaf_count: usize,
    pub bipartition: (usize, usize),
}

impl InvariantRecord {
    pub fn of(t: &Tree) -> InvariantRecord {
        let profile = DistanceProfile::of(t);
        let n = t.order();
        let degree_distance = (0..n).map(|v| t.degree(v) as u64 * profile.transmission[v]).sum();
        let ecc_connectivity = (0..n).map(|v| t.degree(v) as u64 * profile.eccentricity[v]).sum();
        InvariantRecord {
            n,
            eds: profile.eds(),
            wiener: profile.wiener(),
            degree_distance,
            ecc_connectivity,
            total_eccentricity: profile.total_eccentricity(),
            radius: profile.radius(),
            diameter: profile.diameter(),
            center: profile.center(),
            leaf_count: t.leaves().len(),
            bipartition: t.bipartition_sizes(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p4() -> Tree {
        Tree::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap()
    }

    fn s4() -> Tree {
        Tree::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap()
    }

    #[test]
    fn transmission_examples() {
        assert_eq!(transmission(&p4(), 0).unwrap(), 6);
        assert_eq!(transmission(&p4(), 1).unwrap(), 4);
        assert_eq!(transmission(&s4(), 0).unwrap(), 3);
        assert!(transmission(&p4(), 9).is_err());
        assert!(eccentricity(&p4(), 4).is_err());
    }

    #[test]
    fn eccentricity_radius_diameter_center() {
        assert_eq!(&*eccentricities(&p4()), &[3, 2, 2, 3]);
        assert_eq!(radius(&p4()), 2);
        assert_eq!(diameter(&p4()), 3);
        assert_eq!(center(&p4()), vec![1, 2]);
        assert_eq!(eccentricity(&s4(), 0).unwrap(), 1);
        assert_eq!(eccentricity(&s4(), 2).unwrap(), 2);
        let k1 = Tree::from_edges(1, &[]).unwrap();
        assert_eq!(eccentricity(&k1, 0).unwrap(), 0);
        assert_eq!(radius(&k1), 0);
        assert_eq!(diameter(&k1), 0);
        assert_eq!(eds(&k1), 0);
        assert_eq!(wiener(&k1), 0);
    }

    #[test]
    fn eds_examples() {
        assert_eq!(eds(&p4()), 52);
        assert_eq!(eds(&s4()), 33);
        assert_eq!(eds_pair_form(&p4()), 52);
        let p2 = Tree::from_edges(2, &[(0, 1)]).unwrap();
        assert_eq!(eds_pair_form(&p2), 2);
        // spider with legs 1, 2, 2 around hub 0
        let spider = Tree::from_edges(6, &[(0, 1), (0, 2), (2, 3), (0, 4), (4, 5)]).unwrap();
        assert_eq!(eds(&spider), 205);
    }

    #[test]
    fn other_indices_on_p4_and_s4() {
        assert_eq!(wiener(&p4()), 10);
        assert_eq!(wiener(&s4()), 9);
        assert_eq!(degree_distance(&p4()), 28);
        assert_eq!(ecc_connectivity(&p4()), 14);
        assert_eq!(total_eccentricity(&p4()), 10);
        assert_eq!(total_eccentricity(&s4()), 7);
    }

    #[test]
    fn record_is_consistent() {
        let r = InvariantRecord::of(&p4());
        assert_eq!(r.eds, 52);
        assert_eq!(r.center, vec![1, 2]);
        assert_eq!(r.leaf_count, 2);
        assert_eq!(r.bipartition, (2, 2));
    }
}
