//! Verification of extremal claims against exhaustive enumeration.
//!
//! Every claim is checked one parameter point at a time. The claimed side
//! comes from the constructions and closed forms, the observed side from
//! enumerating the whole tree class and computing EDS directly.

mod classes;
mod properties;
mod report;
mod scan;
mod theorems;

use std::fmt;
use std::ops::RangeInclusive;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::enumeration::CanonicalCode;
use crate::error::{Error, Result};
use crate::formulas::Variant;

pub use classes::{ClassRecord, ClassTable};
pub use report::{read_reports, summarize, write_reports, Summary};
pub use scan::{extremal_scan, ScanRow, ScanTable};
pub use theorems::Verifier;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum TheoremId {
    L2_4,
    L2_5Prop,
    L2_6Corona,
    L2_8,
    T2_10,
    T2_11,
    T2_12,
    T2_13,
    L3_1Prop,
    L3_2Prop,
    T3_4,
    T3_5,
    L4_1Prop,
    T4_2,
    T4_3,
    T4_4,
    P2Chain,
}

impl TheoremId {
    pub const ALL: [TheoremId; 17] = [
        TheoremId::L2_4,
        TheoremId::L2_5Prop,
        TheoremId::L2_6Corona,
        TheoremId::L2_8,
        TheoremId::T2_10,
        TheoremId::T2_11,
        TheoremId::T2_12,
        TheoremId::T2_13,
        TheoremId::L3_1Prop,
        TheoremId::L3_2Prop,
        TheoremId::T3_4,
        TheoremId::T3_5,
        TheoremId::L4_1Prop,
        TheoremId::T4_2,
        TheoremId::T4_3,
        TheoremId::T4_4,
        TheoremId::P2Chain,
    ];

    pub fn name(self) -> &'static str {
        match self {
            TheoremId::L2_4 => "L2.4",
            TheoremId::L2_5Prop => "L2.5-prop",
            TheoremId::L2_6Corona => "L2.6-corona",
            TheoremId::L2_8 => "L2.8",
            TheoremId::T2_10 => "T2.10",
            TheoremId::T2_11 => "T2.11",
            TheoremId::T2_12 => "T2.12",
            TheoremId::T2_13 => "T2.13",
            TheoremId::L3_1Prop => "L3.1-prop",
            TheoremId::L3_2Prop => "L3.2-prop",
            TheoremId::T3_4 => "T3.4",
            TheoremId::T3_5 => "T3.5",
            TheoremId::L4_1Prop => "L4.1-prop",
            TheoremId::T4_2 => "T4.2",
            TheoremId::T4_3 => "T4.3",
            TheoremId::T4_4 => "T4.4",
            TheoremId::P2Chain => "P2-chain",
        }
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for TheoremId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        TheoremId::ALL
            .into_iter()
            .find(|t| t.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::Parse(format!("unknown theorem id '{s}'")))
    }
}

impl Serialize for TheoremId {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.name())
    }
}

impl<'de> Deserialize<'de> for TheoremId {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Confirmed,
    Refuted,
    BoundaryExcluded,
    ClassEmpty,
}

impl Verdict {
    pub fn name(self) -> &'static str {
        match self {
            Verdict::Confirmed => "confirmed",
            Verdict::Refuted => "refuted",
            Verdict::BoundaryExcluded => "boundary-excluded",
            Verdict::ClassEmpty => "class-empty",
        }
    }
}

/// Parameter point of a report. Only the fields relevant to the claim are set.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Params {
    pub n: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub gamma: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub p: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub q: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub l: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub m: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub variant: Option<Variant>,
}

impl Params {
    pub fn order(n: usize) -> Params {
        Params { n, ..Params::default() }
    }
}

/// Restriction of the parameter points to verify, e.g. `p=7,variant=paper`.
/// A point is kept when it carries every set key with the same value.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ParamFilter {
    pub gamma: Option<usize>,
    pub k: Option<usize>,
    pub p: Option<usize>,
    pub q: Option<usize>,
    pub l: Option<usize>,
    pub m: Option<usize>,
    pub variant: Option<Variant>,
}

impl ParamFilter {
    pub fn accepts(&self, p: &Params) -> bool {
        fn same<T: PartialEq>(want: &Option<T>, have: &Option<T>) -> bool {
            want.is_none() || want == have
        }
        same(&self.gamma, &p.gamma)
            && same(&self.k, &p.k)
            && same(&self.p, &p.p)
            && same(&self.q, &p.q)
            && same(&self.l, &p.l)
            && same(&self.m, &p.m)
            && same(&self.variant, &p.variant)
    }
}

impl FromStr for ParamFilter {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut f = ParamFilter::default();
        for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            let (key, value) = part
                .split_once('=')
                .ok_or_else(|| Error::Parse(format!("parameter '{part}' needs the form key=value")))?;
            if key == "variant" {
                f.variant = Some(value.parse()?);
                continue;
            }
            let v: usize = value
                .parse()
                .map_err(|_| Error::Parse(format!("parameter {key}: '{value}' is not an integer")))?;
            let slot = match key {
                "gamma" => &mut f.gamma,
                "k" => &mut f.k,
                "p" => &mut f.p,
                "q" => &mut f.q,
                "l" => &mut f.l,
                "m" => &mut f.m,
                other => return Err(Error::Parse(format!("unknown parameter '{other}'"))),
            };
            *slot = Some(v);
        }
        Ok(f)
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Side {
    pub codes: Vec<CanonicalCode>,
    pub value: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub theorem: TheoremId,
    pub params: Params,
    pub claimed: Side,
    pub observed: Side,
    pub verdict: Verdict,
    pub class_size: usize,
    pub ms: Option<u64>,
    pub note: Option<String>,
}

/// Parses `a..b`, `a..=b` or a single order `n`.
pub fn parse_order_range(s: &str) -> Result<RangeInclusive<usize>> {
    let bad = || Error::Parse(format!("order range '{s}' must look like 4..10 or 7"));
    let num = |x: &str| x.trim().parse::<usize>().map_err(|_| bad());
    let range = match s.split_once("..") {
        Some((a, b)) => num(a)?..=num(b.strip_prefix('=').unwrap_or(b))?,
        None => {
            let n = num(s)?;
            n..=n
        }
    };
    if range.start() > range.end() || *range.start() == 0 {
        return Err(bad());
    }
    Ok(range)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn theorem_ids_roundtrip() {
        for id in TheoremId::ALL {
            assert_eq!(id.name().parse::<TheoremId>().unwrap(), id);
            let json = serde_json::to_string(&id).unwrap();
            assert_eq!(serde_json::from_str::<TheoremId>(&json).unwrap(), id);
        }
        assert!("T9.9".parse::<TheoremId>().is_err());
    }

    #[test]
    fn order_ranges() {
        assert_eq!(parse_order_range("4..10").unwrap(), 4..=10);
        assert_eq!(parse_order_range("4..=10").unwrap(), 4..=10);
        assert_eq!(parse_order_range("7").unwrap(), 7..=7);
        assert!(parse_order_range("9..4").is_err());
        assert!(parse_order_range("0..3").is_err());
        assert!(parse_order_range("a..3").is_err());
    }

    #[test]
    fn filters() {
        let f: ParamFilter = "p=7,variant=paper".parse().unwrap();
        let mut point = Params { p: Some(7), q: Some(8), ..Params::order(15) };
        assert!(!f.accepts(&point));
        point.variant = Some(Variant::Paper);
        assert!(f.accepts(&point));
        assert!(!f.accepts(&Params::order(15)));
        assert!("x=1".parse::<ParamFilter>().is_err());
        assert!("p".parse::<ParamFilter>().is_err());
    }

    #[test]
    fn params_serialize_only_set_fields() {
        let p = Params { gamma: Some(3), ..Params::order(8) };
        assert_eq!(serde_json::to_string(&p).unwrap(), r#"{"n":8,"gamma":3}"#);
    }
}
