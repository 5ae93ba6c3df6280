use std::collections::BTreeMap;
use std::fmt;
use std::io::{BufRead, Write};

use super::{TheoremId, VerificationReport, Verdict};
use crate::error::{Error, Result};

/// Writes one JSON object per line.
pub fn write_reports(mut out: impl Write, reports: &[VerificationReport]) -> Result<()> {
    for r in reports {
        let line = serde_json::to_string(r).map_err(|e| Error::Parse(e.to_string()))?;
        writeln!(out, "{line}")?;
    }
    Ok(())
}

pub fn read_reports(input: impl BufRead) -> Result<Vec<VerificationReport>> {
    let mut out = Vec::new();
    for (i, line) in input.lines().enumerate() {
        let line = line?;
        if line.trim().is_empty() {
            continue;
        }
        let r = serde_json::from_str(&line).map_err(|e| Error::Parse(format!("line {}: {e}", i + 1)))?;
        out.push(r);
    }
    Ok(out)
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Counts {
    pub confirmed: usize,
    pub refuted: usize,
    pub boundary_excluded: usize,
    pub class_empty: usize,
}

impl Counts {
    fn add(&mut self, v: Verdict) {
        match v {
            Verdict::Confirmed => self.confirmed += 1,
            Verdict::Refuted => self.refuted += 1,
            Verdict::BoundaryExcluded => self.boundary_excluded += 1,
            Verdict::ClassEmpty => self.class_empty += 1,
        }
    }
}

/// Verdict counts per theorem.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Summary {
    pub rows: BTreeMap<TheoremId, Counts>,
}

impl Summary {
    pub fn refuted(&self) -> usize {
        self.rows.values().map(|c| c.refuted).sum()
    }
}

pub fn summarize(reports: &[VerificationReport]) -> Summary {
    let mut s = Summary::default();
    for r in reports {
        s.rows.entry(r.theorem).or_default().add(r.verdict);
    }
    s
}

impl fmt::Display for Summary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{:<12} {:>9} {:>8} {:>9} {:>6}", "theorem", "confirmed", "refuted", "boundary", "empty")?;
        for (id, c) in &self.rows {
            writeln!(
                f,
                "{:<12} {:>9} {:>8} {:>9} {:>6}",
                id.name(),
                c.confirmed,
                c.refuted,
                c.boundary_excluded,
                c.class_empty
            )?;
        }
        Ok(())
    }
}
