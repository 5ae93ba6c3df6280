use rayon::prelude::*;
use serde::Serialize;

use crate::enumeration::{CanonicalCode, ConstraintSpec, FreeTrees, DEFAULT_CAP};
use crate::error::Result;
use crate::invariants::Invariant;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ScanRow {
    pub code: CanonicalCode,
    pub value: u64,
}

/// Smallest and largest values of an invariant over a constrained class.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ScanTable {
    pub n: usize,
    pub invariant: Invariant,
    pub class_size: usize,
    pub bottom: Vec<ScanRow>,
    pub top: Vec<ScanRow>,
}

/// Bottom rows are sorted by value then code, top rows by descending value
/// then code, so ties are broken the same way on every run.
pub fn extremal_scan(
    n: usize,
    spec: ConstraintSpec,
    invariant: Invariant,
    bottom_k: usize,
    top_k: usize,
) -> Result<ScanTable> {
    let codes: Vec<CanonicalCode> = FreeTrees::with_cap(n, DEFAULT_CAP)?.collect();
    let mut rows: Vec<ScanRow> = codes
        .into_par_iter()
        .filter_map(|code| {
            let t = code.to_tree();
            spec.accepts(&t).then(|| ScanRow { value: invariant.evaluate(&t), code })
        })
        .collect();
    let class_size = rows.len();
    rows.sort_by(|a, b| a.value.cmp(&b.value).then_with(|| a.code.cmp(&b.code)));
    let bottom = rows.iter().take(bottom_k).cloned().collect();
    rows.sort_by(|a, b| b.value.cmp(&a.value).then_with(|| a.code.cmp(&b.code)));
    let top = rows.into_iter().take(top_k).collect();
    Ok(ScanTable { n, invariant, class_size, bottom, top })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn path_and_star_are_the_extremes() {
        let s = extremal_scan(7, ConstraintSpec::default(), Invariant::Eds, 1, 1).unwrap();
        assert_eq!(s.class_size, 11);
        assert_eq!(s.bottom[0].code.to_string(), "0111111");
        assert_eq!(s.top[0].code.to_tree().leaves().len(), 2);
        let spec = ConstraintSpec { leaf_count: Some(3), ..Default::default() };
        let s = extremal_scan(7, spec, Invariant::Eds, 2, 2).unwrap();
        assert!(s.bottom[0].value < s.bottom[1].value || s.bottom[0].code < s.bottom[1].code);
        assert!(s.top[0].value >= s.top[1].value);
    }
}
