use crate::enumeration::{CanonicalCode, FreeTrees};
use crate::error::Result;
use crate::invariants::eds;
use crate::params::{domination_number, matching_number};
use crate::tree::Tree;
use rayon::prelude::*;

/// Everything the verifiers need about one isomorphism class.
#[derive(Clone, Debug)]
pub struct ClassRecord {
    pub code: CanonicalCode,
    pub tree: Tree,
    pub eds: u64,
    pub gamma: usize,
    pub beta: usize,
    pub leaves: usize,
    pub bipartition: (usize, usize),
}

impl ClassRecord {
    pub fn of(code: CanonicalCode) -> ClassRecord {
        let tree = code.to_tree();
        ClassRecord {
            eds: eds(&tree),
            gamma: domination_number(&tree),
            beta: matching_number(&tree),
            leaves: tree.leaves().len(),
            bipartition: tree.bipartition_sizes(),
            code,
            tree,
        }
    }
}

/// All free trees of one order, in enumeration order.
#[derive(Clone, Debug)]
pub struct ClassTable {
    pub n: usize,
    pub records: Vec<ClassRecord>,
}

impl ClassTable {
    /// Builds the table on the current rayon pool; record order does not
    /// depend on the number of workers.
    pub fn build(n: usize, cap: usize) -> Result<ClassTable> {
        let codes: Vec<CanonicalCode> = FreeTrees::with_cap(n, cap)?.collect();
        let records = codes.into_par_iter().map(ClassRecord::of).collect();
        Ok(ClassTable { n, records })
    }

    pub fn filter(&self, keep: impl Fn(&ClassRecord) -> bool) -> Vec<&ClassRecord> {
        self.records.iter().filter(|r| keep(r)).collect()
    }
}
