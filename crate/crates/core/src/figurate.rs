//! Triangular, generalized pentagonal and square numbers, scaled variants,
//! membership lookup and representation counts.
//!
//! Representations are counted over each sequence's natural theta-series
//! index set: triangular numbers `T_j` and generalized pentagonal numbers
//! `G_j` over `j >= 0` (the `G_j` are in bijection with `j(3j-1)/2`, `j` in Z),
//! and squares over `j` in Z. A nonzero square `j^2` is therefore reached by
//! two indices, `j` and `-j`, and carries multiplicity 2.

use serde::Serialize;

/// `n(n+1)/2`
pub fn triangular(n: u64) -> u64 {
    n * (n + 1) / 2
}

/// `T_n - T_{floor(n/2)}`: 0, 1, 2, 5, 7, 12, 15, ...
pub fn gen_pentagonal(n: u64) -> u64 {
    triangular(n) - triangular(n / 2)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum FigurateKind {
    Triangular,
    GenPentagonal,
    Square,
}

/// `multiplier * value(i)` for one base sequence.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct FigurateSeq {
    pub kind: FigurateKind,
    pub multiplier: u64,
}

impl FigurateSeq {
    pub fn new(kind: FigurateKind, multiplier: u64) -> Self {
        assert!(multiplier >= 1, "multiplier must be positive");
        FigurateSeq { kind, multiplier }
    }

    pub fn triangular(multiplier: u64) -> Self {
        Self::new(FigurateKind::Triangular, multiplier)
    }

    pub fn gen_pentagonal(multiplier: u64) -> Self {
        Self::new(FigurateKind::GenPentagonal, multiplier)
    }

    pub fn square(multiplier: u64) -> Self {
        Self::new(FigurateKind::Square, multiplier)
    }

    /// Unscaled base value at index `i`.
    pub fn base(&self, i: u64) -> u64 {
        match self.kind {
            FigurateKind::Triangular => triangular(i),
            FigurateKind::GenPentagonal => gen_pentagonal(i),
            FigurateKind::Square => i * i,
        }
    }

    pub fn value(&self, i: u64) -> u64 {
        self.multiplier * self.base(i)
    }

    /// How many theta-series indices map to index `i`.
    pub fn multiplicity(&self, i: u64) -> u64 {
        match self.kind {
            FigurateKind::Square if i > 0 => 2,
            _ => 1,
        }
    }

    /// Values `value(0), value(1), ...` up to and including `limit`.
    pub fn values_up_to(&self, limit: u64) -> impl Iterator<Item = (u64, u64)> + '_ {
        (0..).map(move |i| (i, self.value(i))).take_while(move |&(_, v)| v <= limit)
    }

    /// The unique `m` with `value(m) == x`.
    pub fn index_of(&self, x: u64) -> Option<u64> {
        if x % self.multiplier != 0 {
            return None;
        }
        let target = x / self.multiplier;
        // every base sequence satisfies base(i) >= i, so the index is at most target
        let (mut lo, mut hi) = (0u64, target + 1);
        while lo < hi {
            let mid = lo + (hi - lo) / 2;
            if self.base(mid) < target {
                lo = mid + 1;
            } else {
                hi = mid;
            }
        }
        (lo <= target && self.base(lo) == target).then_some(lo)
    }

    pub fn contains(&self, x: u64) -> bool {
        self.index_of(x).is_some()
    }
}

/// Number of representations `n = a.value(i) + b.value(j)`, weighted by
/// index multiplicity (see the module docs).
pub fn representation_count(n: u64, a: &FigurateSeq, b: &FigurateSeq) -> u64 {
    a.values_up_to(n)
        .filter_map(|(i, v)| b.index_of(n - v).map(|j| a.multiplicity(i) * b.multiplicity(j)))
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triangular_values() {
        assert_eq!(triangular(0), 0);
        assert_eq!(triangular(4), 10);
        assert_eq!(triangular(7), 28);
    }

    #[test]
    fn pentagonal_values() {
        let g: Vec<u64> = (0..7).map(gen_pentagonal).collect();
        assert_eq!(g, [0, 1, 2, 5, 7, 12, 15]);
        assert_eq!(triangular(3) % 2, 0);
    }

    #[test]
    fn strictly_increasing() {
        for seq in [FigurateSeq::triangular(1), FigurateSeq::gen_pentagonal(3), FigurateSeq::square(2)] {
            for i in 0..2000 {
                assert!(seq.value(i) < seq.value(i + 1), "{seq:?} at {i}");
            }
        }
    }

    #[test]
    fn index_lookup() {
        assert_eq!(FigurateSeq::gen_pentagonal(1).index_of(12), Some(5));
        assert_eq!(FigurateSeq::triangular(1).index_of(11), None);
        assert_eq!(FigurateSeq::gen_pentagonal(2).index_of(4), Some(2));
        assert_eq!(FigurateSeq::gen_pentagonal(2).index_of(5), None);
        assert_eq!(FigurateSeq::square(1).index_of(0), Some(0));
        assert_eq!(FigurateSeq::triangular(4).index_of(0), Some(0));
    }

    #[test]
    fn index_roundtrip() {
        for seq in [
            FigurateSeq::triangular(1),
            FigurateSeq::gen_pentagonal(1),
            FigurateSeq::gen_pentagonal(4),
            FigurateSeq::square(3),
        ] {
            for m in 0..=10_000 {
                assert_eq!(seq.index_of(seq.value(m)), Some(m));
            }
        }
    }

    #[test]
    fn representation_examples() {
        let gp = FigurateSeq::gen_pentagonal(1);
        // 6 = G_2 + 2*G_2 only, found by scanning all index pairs
        assert_eq!(representation_count(6, &gp, &FigurateSeq::gen_pentagonal(2)), 1);
        for b in [FigurateSeq::triangular(1), FigurateSeq::gen_pentagonal(2)] {
            assert_eq!(representation_count(0, &gp, &b), 1);
        }
        // 1 = G_1 + 0^2 = G_0 + 1^2 = G_0 + (-1)^2
        assert_eq!(representation_count(1, &gp, &FigurateSeq::square(1)), 3);
        // 3 = G_2 + 1^2 = G_2 + (-1)^2
        assert_eq!(representation_count(3, &gp, &FigurateSeq::square(1)), 2);
    }
}
