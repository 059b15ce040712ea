use num_bigint::BigInt;
use serde::Serialize;

use super::identities::{IdentityId, IdentityParams};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Outcome {
    Pass,
    Fail,
}

/// First coefficient where the two sides of an identity disagree.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Mismatch {
    /// Which comparison failed, for identities checked along more than one route.
    pub comparison: String,
    pub first_exponent: usize,
    #[serde(serialize_with = "crate::bigjson::int")]
    pub lhs_coeff: BigInt,
    #[serde(serialize_with = "crate::bigjson::int")]
    pub rhs_coeff: BigInt,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IdentityReport {
    pub identity_id: IdentityId,
    pub parameters: IdentityParams,
    pub order: usize,
    pub outcome: Outcome,
    pub mismatch: Option<Mismatch>,
    pub warnings: Vec<String>,
}

impl IdentityReport {
    pub fn passed(&self) -> bool {
        self.outcome == Outcome::Pass
    }
}

/// A point where the asserted sign or parity fails.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Finding {
    pub k: Option<usize>,
    pub n: usize,
    #[serde(serialize_with = "crate::bigjson::int")]
    pub value: BigInt,
}

/// A point where the value disagrees with the claimed strictness threshold.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct BoundaryMismatch {
    pub k: usize,
    pub n: usize,
    #[serde(serialize_with = "crate::bigjson::int")]
    pub value: BigInt,
    /// `"zero"` below the threshold, `"positive"` at or above it.
    pub expected: &'static str,
}

/// Result of sweeping one family, conjecture or parity claim.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FamilyReport {
    pub family_id: String,
    /// Proved results fail the run on any finding; conjectures never do.
    pub proved: bool,
    pub k_range: Option<[usize; 2]>,
    pub n_range: [usize; 2],
    pub violations: Vec<Finding>,
    pub boundary_mismatches: Vec<BoundaryMismatch>,
    /// Points outside the asserted domain whose value would violate the sign.
    pub unasserted: Vec<Finding>,
    pub evidence_count: u64,
}

impl FamilyReport {
    pub(crate) fn new(family_id: impl Into<String>, proved: bool, k_range: Option<[usize; 2]>, n_range: [usize; 2]) -> Self {
        FamilyReport {
            family_id: family_id.into(),
            proved,
            k_range,
            n_range,
            violations: Vec::new(),
            boundary_mismatches: Vec::new(),
            unasserted: Vec::new(),
            evidence_count: 0,
        }
    }

    /// Folds another partial report for the same family into this one.
    pub(crate) fn absorb(&mut self, other: FamilyReport) {
        self.violations.extend(other.violations);
        self.boundary_mismatches.extend(other.boundary_mismatches);
        self.unasserted.extend(other.unasserted);
        self.evidence_count += other.evidence_count;
    }

    /// Sorts the finding lists so output does not depend on merge order.
    pub(crate) fn finish(mut self) -> Self {
        self.violations.sort();
        self.boundary_mismatches.sort();
        self.unasserted.sort();
        self
    }

    pub fn is_clean(&self) -> bool {
        self.violations.is_empty() && self.boundary_mismatches.is_empty()
    }
}
