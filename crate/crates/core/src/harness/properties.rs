//! Exhaustive checks of the tree transformations: every application site
//! of every tree of one order.

use rayon::prelude::*;

use super::classes::ClassRecord;
use super::{Params, Side, TheoremId, VerificationReport, Verdict, Verifier};
use crate::enumeration::{canonical_code, isomorphic, CanonicalCode};
use crate::error::Result;
use crate::families;
use crate::formulas;
use crate::invariants::{diameter, eds, total_eccentricity, wiener};
use crate::transform::{self, Relation};

#[derive(Clone, Copy, Debug, Default)]
struct Tally {
    applications: usize,
    failures: usize,
    equalities: usize,
}

impl Tally {
    fn record(&mut self, ok: bool) {
        self.applications += 1;
        if !ok {
            self.failures += 1;
        }
    }
}

impl Verifier {
    /// Runs `check` on every tree of order `point.n` in parallel and folds the
    /// tallies in enumeration order.
    fn suite(
        &self,
        theorem: TheoremId,
        point: Params,
        check: impl Fn(&ClassRecord) -> Result<Tally> + Sync,
    ) -> Result<VerificationReport> {
        let table = self.table(point.n)?;
        let tallies: Vec<Tally> = self.install(|| table.records.par_iter().map(&check).collect::<Result<_>>())?;
        let mut total = Tally::default();
        let mut first: Option<CanonicalCode> = None;
        for (t, r) in tallies.iter().zip(&table.records) {
            total.applications += t.applications;
            total.failures += t.failures;
            total.equalities += t.equalities;
            if t.failures > 0 && first.is_none() {
                first = Some(r.code.clone());
            }
        }
        let mut note = format!("{} applications", total.applications);
        if theorem == TheoremId::L3_1Prop {
            note.push_str(&format!(", {} with equal eds", total.equalities));
        }
        Ok(VerificationReport {
            theorem,
            params: point,
            claimed: Side::default(),
            observed: Side { codes: first.into_iter().collect(), value: total.failures as i64 },
            verdict: if total.failures == 0 { Verdict::Confirmed } else { Verdict::Refuted },
            class_size: table.records.len(),
            ms: None,
            note: Some(note),
        })
    }

    pub(super) fn edge_growing_suite(&self, point: Params) -> Result<VerificationReport> {
        self.suite(TheoremId::L2_5Prop, point, |r| {
            let mut tally = Tally::default();
            for (u, v) in transform::edge_growing_sites(&r.tree) {
                let out = transform::edge_growing(&r.tree, u, v)?;
                tally.record(out.relation == Relation::StrictDecrease);
            }
            Ok(tally)
        })
    }

    pub(super) fn rho_suite(&self, point: Params) -> Result<VerificationReport> {
        self.suite(TheoremId::L3_1Prop, point, |r| {
            let mut tally = Tally::default();
            for (v, w) in transform::rho_sites(&r.tree) {
                let out = transform::rho_transform(&r.tree, v, w)?;
                let equal = out.outcome.relation == Relation::Equal;
                if equal {
                    tally.equalities += 1;
                }
                tally.record(out.outcome.relation != Relation::StrictIncrease && equal == out.equality_predicted);
            }
            Ok(tally)
        })
    }

    pub(super) fn slide_suite(&self, point: Params) -> Result<VerificationReport> {
        self.suite(TheoremId::L3_2Prop, point, |r| {
            let mut tally = Tally::default();
            for spine in transform::slide_spines(&r.tree) {
                let out = transform::leaf_block_slide(&r.tree, &spine)?;
                tally.record(out.relation == Relation::StrictIncrease);
            }
            Ok(tally)
        })
    }

    pub(super) fn transformation_i_suite(&self, point: Params) -> Result<VerificationReport> {
        self.suite(TheoremId::L4_1Prop, point, |r| {
            let mut tally = Tally::default();
            let d = diameter(&r.tree);
            for (w, u, v) in transform::transformation_i_sites(&r.tree) {
                let out = transform::transformation_i(&r.tree, w, u, v)?;
                tally.record(
                    out.relation == Relation::StrictDecrease
                        && out.result.bipartition_sizes() == r.bipartition
                        && diameter(&out.result) <= d,
                );
            }
            Ok(tally)
        })
    }

    /// Closed form of the pendant expansion, and the star and path as its
    /// extremes among all trees of the same order.
    pub(super) fn corona_suite(&self, point: Params) -> Result<VerificationReport> {
        let (n, m) = (point.n, point.m.unwrap());
        let star = families::pendant_expansion(&families::star(n)?, m)?;
        let path = families::pendant_expansion(&families::path(n)?, m)?;
        let (low, high) = (eds(&star), eds(&path));
        self.suite(TheoremId::L2_6Corona, point, |r| {
            let mut tally = Tally::default();
            let expanded = families::pendant_expansion(&r.tree, m)?;
            let value = eds(&expanded);
            let formula = formulas::corona_eds(
                n as i128,
                m as i128,
                r.eds as i128,
                wiener(&r.tree) as i128,
                total_eccentricity(&r.tree) as i128,
            )?;
            tally.record(formula == value as i128);
            let is_star = isomorphic(&expanded, &star);
            let is_path = isomorphic(&expanded, &path);
            tally.record(value >= low && (value == low) == is_star);
            tally.record(value <= high && (value == high) == is_path);
            Ok(tally)
        })
    }

    /// Double brooms with a fixed spine get strictly more eccentric as the
    /// leaves are balanced between the two ends.
    pub(super) fn broom_chain(&self, point: Params) -> Result<VerificationReport> {
        let (n, l) = (point.n, point.l.unwrap());
        let brooms = (1..=(n - l) / 2)
            .map(|a| families::double_broom(l, a, n - l - a))
            .collect::<Result<Vec<_>>>()?;
        let values: Vec<u64> = brooms.iter().map(eds).collect();
        let bad = values.windows(2).position(|w| w[0] >= w[1]);
        let violations = values.windows(2).filter(|w| w[0] >= w[1]).count();
        let chain: Vec<String> = values.iter().map(u64::to_string).collect();
        Ok(VerificationReport {
            theorem: TheoremId::L2_4,
            params: point,
            claimed: Side::default(),
            observed: Side {
                codes: bad.map(|i| canonical_code(&brooms[i + 1])).into_iter().collect(),
                value: violations as i64,
            },
            verdict: if violations == 0 { Verdict::Confirmed } else { Verdict::Refuted },
            class_size: brooms.len(),
            ms: None,
            note: Some(if chain.is_empty() { "empty chain".into() } else { format!("eds chain {}", chain.join(" < ")) }),
        })
    }
}
