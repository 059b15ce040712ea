//! Parity of representation counts against membership in a figurate set.

use super::id_enum;
use super::report::{FamilyReport, Finding};
use crate::error::{invalid, Result};
use crate::figurate::{representation_count, FigurateSeq};
use crate::par::{self, Mode};

id_enum! {
    ParityId {
        Cor13 => "COR13",
        Cor16A => "COR16A",
        Cor16B => "COR16B",
        Cor16C => "COR16C",
        Cor43A => "COR43A",
        Cor43B => "COR43B",
    }
}

impl ParityId {
    /// `(a, b, m)`: the count of `n = a_i + b_j` is odd exactly when `n` is in `m`.
    pub fn sequences(self) -> (FigurateSeq, FigurateSeq, FigurateSeq) {
        let gp = FigurateSeq::gen_pentagonal;
        match self {
            ParityId::Cor13 => (gp(1), gp(2), FigurateSeq::triangular(1)),
            ParityId::Cor16A => (gp(1), FigurateSeq::square(1), gp(1)),
            ParityId::Cor16B => (gp(1), FigurateSeq::square(2), gp(1)),
            ParityId::Cor16C => (gp(1), FigurateSeq::square(3), gp(1)),
            ParityId::Cor43A => (gp(1), gp(1), gp(2)),
            ParityId::Cor43B => (gp(1), FigurateSeq::triangular(1), gp(4)),
        }
    }
}

pub fn verify_parity(id: ParityId, n_max: usize) -> Result<FamilyReport> {
    verify_parity_with(id, n_max, Mode::default())
}

/// Checks every `0 <= n <= n_max`; findings carry the offending count.
pub fn verify_parity_with(id: ParityId, n_max: usize, mode: Mode) -> Result<FamilyReport> {
    if n_max < 1 {
        return Err(invalid("n_max must be >= 1"));
    }
    let (a, b, member) = id.sequences();
    let counts = par::map_range(mode, n_max + 1, |n| representation_count(n as u64, &a, &b));
    let mut rep = FamilyReport::new(id.as_str(), true, None, [0, n_max]);
    for (n, count) in counts.into_iter().enumerate() {
        rep.evidence_count += 1;
        if (count % 2 == 1) != member.contains(n as u64) {
            rep.violations.push(Finding { k: None, n, value: count.into() });
        }
    }
    Ok(rep)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::Series;

    fn indicator(seq: &FigurateSeq, order: usize) -> Series {
        Series::from_terms(
            order,
            seq.values_up_to(order as u64).map(|(i, v)| (v as usize, seq.multiplicity(i) as i64)),
        )
    }

    #[test]
    fn counts_match_indicator_products() {
        let n = 300;
        for &id in ParityId::ALL {
            let (a, b, _) = id.sequences();
            let prod = &indicator(&a, n) * &indicator(&b, n);
            for m in 0..=n {
                assert_eq!(prod.coeff(m), &representation_count(m as u64, &a, &b).into(), "{id} n={m}");
            }
        }
    }

    #[test]
    fn small_ranges_hold() {
        for &id in ParityId::ALL {
            let rep = verify_parity_with(id, 2000, Mode::Sequential).unwrap();
            assert!(rep.is_clean(), "{id}: {:?}", rep.violations.first());
        }
    }

    #[test]
    fn hand_points() {
        let (a, b, _) = ParityId::Cor13.sequences();
        assert_eq!(representation_count(6, &a, &b), 1);
        let (a, b, m) = ParityId::Cor43A.sequences();
        assert_eq!(representation_count(0, &a, &b), 1);
        assert!(m.contains(0));
    }
}
