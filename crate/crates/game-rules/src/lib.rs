//! Card model and information-set space for baccara banque (with
//! replacement).
//!
//! Under the with-replacement model only two-card totals matter: a two-card
//! total is distributed as `q(i) = (16 + 9·[i=0])/169` and a single card value
//! as `q'(k) = (1 + 3·[k=0])/13`.  A Banker information set is the triple
//! `(k1, k2, j)` of Player 1's third-card code, Player 2's third-card code
//! (values 0–9, 10 = "stand", 11 = "natural") and Banker's two-card total
//! `j ∈ 0..=7`; the pair `(11, 11)` is excluded because play ends when both
//! Players hold naturals, leaving `(12·12 − 1)·8 = 1144` sets.
//!
//! The stake ratio θ is canonicalized to `(0, 1/2]`: an input above 1/2 is
//! mapped to `1 − θ` with a player-swap flag that callers propagate to
//! reports.

use std::fmt;
use std::str::FromStr;

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Zero};
use numeric_kernel::ExactScalar;
use thiserror::Error;

/// Number of Banker information sets.
pub const INFO_SET_COUNT: usize = 1144;

/// Player third-card code meaning "stood on 5 (or 6, 7)".
pub const CODE_STAND: u8 = 10;

/// Player third-card code meaning "natural (two-card total 8 or 9)".
pub const CODE_NATURAL: u8 = 11;

/// Errors raised by the rules layer.
#[derive(Debug, Error)]
pub enum RulesError {
    /// A two-card total outside 0..=9 was supplied.
    #[error("two-card total {0} out of range 0..=9")]
    TotalOutOfRange(u32),
    /// A card value outside 0..=9 was supplied.
    #[error("card value {0} out of range 0..=9")]
    CardOutOfRange(u32),
    /// An invalid information-set triple was supplied.
    #[error("invalid information set ({0}, {1}, {2})")]
    InvalidInfoSet(u8, u8, u8),
    /// A stake ratio outside the open interval (0, 1) was supplied.
    #[error("stake ratio {0} outside the open interval (0, 1)")]
    ThetaOutOfRange(String),
    /// An information-set triple failed to parse.
    #[error("cannot parse info set from {0:?}")]
    ParseInfoSet(String),
}

/// A Banker information set `(k1, k2, j)`.
///
/// `k1` and `k2` are the Players' third-card codes (0–9 card value,
/// 10 = stand, 11 = natural) and `j` is Banker's two-card total (0–7).
/// Serialized as the text triple `"k1,k2,j"`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct InfoSet {
    /// Player 1's third-card code.
    pub k1: u8,
    /// Player 2's third-card code.
    pub k2: u8,
    /// Banker's two-card total.
    pub j: u8,
}

impl InfoSet {
    /// Validating constructor; rejects codes out of range and the excluded
    /// `(11, 11, ·)` triples.
    pub fn new(k1: u8, k2: u8, j: u8) -> Result<Self, RulesError> {
        if k1 > CODE_NATURAL || k2 > CODE_NATURAL || j > 7 || (k1 == CODE_NATURAL && k2 == CODE_NATURAL)
        {
            return Err(RulesError::InvalidInfoSet(k1, k2, j));
        }
        Ok(InfoSet { k1, k2, j })
    }

    /// Dense index of this set in canonical (lexicographic) enumeration
    /// order; the inverse of `enumerate_info_sets()[index]`.
    pub fn index(&self) -> usize {
        let pair = (self.k1 as usize) * 12 + self.k2 as usize;
        // Pairs after the excluded (11,11) do not occur, so no gap correction
        // is needed: (11,11) is the very last pair.
        pair * 8 + self.j as usize
    }

    /// The mirrored set with the two Players' codes swapped.
    pub fn mirror(&self) -> InfoSet {
        InfoSet {
            k1: self.k2,
            k2: self.k1,
            j: self.j,
        }
    }
}

impl fmt::Display for InfoSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{},{}", self.k1, self.k2, self.j)
    }
}

impl FromStr for InfoSet {
    type Err = RulesError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let parts: Vec<&str> = s.split(',').collect();
        if parts.len() != 3 {
            return Err(RulesError::ParseInfoSet(s.to_string()));
        }
        let nums: Result<Vec<u8>, _> = parts.iter().map(|p| p.trim().parse::<u8>()).collect();
        let nums = nums.map_err(|_| RulesError::ParseInfoSet(s.to_string()))?;
        InfoSet::new(nums[0], nums[1], nums[2]).map_err(|_| RulesError::ParseInfoSet(s.to_string()))
    }
}

/// All 1144 information sets in canonical lexicographic order by `(k1, k2, j)`.
pub fn enumerate_info_sets() -> Vec<InfoSet> {
    let mut sets = Vec::with_capacity(INFO_SET_COUNT);
    for k1 in 0..=CODE_NATURAL {
        for k2 in 0..=CODE_NATURAL {
            if k1 == CODE_NATURAL && k2 == CODE_NATURAL {
                continue;
            }
            for j in 0..=7 {
                sets.push(InfoSet { k1, k2, j });
            }
        }
    }
    debug_assert_eq!(sets.len(), INFO_SET_COUNT);
    sets
}

/// The distribution `q(i) = (16 + 9·δ_{i,0})/169` of a two-card total.
pub fn two_card_total_pmf(i: u32) -> Result<ExactScalar, RulesError> {
    if i > 9 {
        return Err(RulesError::TotalOutOfRange(i));
    }
    Ok(ExactScalar::ratio(if i == 0 { 25 } else { 16 }, 169))
}

/// The distribution `q'(k) = (1 + 3·δ_{k,0})/13` of a single card value.
pub fn card_value_pmf(k: u32) -> Result<ExactScalar, RulesError> {
    if k > 9 {
        return Err(RulesError::CardOutOfRange(k));
    }
    Ok(ExactScalar::ratio(if k == 0 { 4 } else { 1 }, 13))
}

/// `M(i)`: the remainder of `i` modulo 10 (hand totals count only the last
/// digit).
pub fn mod10(i: u32) -> u32 {
    i % 10
}

/// The stake ratio θ, canonicalized to `(0, 1/2]`.
///
/// `value` is the canonical ratio actually used by the solvers; when the
/// input exceeded 1/2 the two Players are exchanged and `swapped` records it
/// so that reports can restore the original labeling.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ThetaParam {
    /// Canonical stake ratio in `(0, 1/2]`.
    value: BigRational,
    /// True when the input was above 1/2 and the Players were exchanged.
    swapped: bool,
}

impl ThetaParam {
    /// Builds a canonical stake ratio from any θ in the open interval (0, 1).
    ///
    /// Inputs above 1/2 are mapped to `1 − θ` with the swap flag set; θ ∈
    /// {0, 1} is rejected (the game's domain is the open interval).
    pub fn new(theta: BigRational) -> Result<Self, RulesError> {
        if theta <= BigRational::zero() || theta >= BigRational::one() {
            return Err(RulesError::ThetaOutOfRange(theta.to_string()));
        }
        let half = BigRational::new(BigInt::one(), BigInt::from(2));
        if theta > half {
            Ok(ThetaParam {
                value: BigRational::one() - theta,
                swapped: true,
            })
        } else {
            Ok(ThetaParam {
                value: theta,
                swapped: false,
            })
        }
    }

    /// Convenience constructor from an integer fraction.
    pub fn from_ratio(num: i64, den: i64) -> Result<Self, RulesError> {
        if den == 0 {
            return Err(RulesError::ThetaOutOfRange(format!("{num}/0")));
        }
        ThetaParam::new(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    /// The canonical stake ratio in `(0, 1/2]`.
    pub fn value(&self) -> &BigRational {
        &self.value
    }

    /// The canonical ratio as an [`ExactScalar`].
    pub fn scalar(&self) -> ExactScalar {
        ExactScalar::from_rational(self.value.clone())
    }

    /// True when the Players were exchanged to reach the canonical range.
    pub fn swapped(&self) -> bool {
        self.swapped
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pmfs_match_definitions_and_normalize() {
        assert_eq!(two_card_total_pmf(0).unwrap(), ExactScalar::ratio(25, 169));
        assert_eq!(two_card_total_pmf(5).unwrap(), ExactScalar::ratio(16, 169));
        assert_eq!(card_value_pmf(0).unwrap(), ExactScalar::ratio(4, 13));
        assert_eq!(card_value_pmf(7).unwrap(), ExactScalar::ratio(1, 13));
        let total: ExactScalar = (0..10)
            .map(|i| two_card_total_pmf(i).unwrap())
            .fold(ExactScalar::zero(), |acc, x| &acc + &x);
        assert_eq!(total, ExactScalar::one());
        let cards: ExactScalar = (0..10)
            .map(|k| card_value_pmf(k).unwrap())
            .fold(ExactScalar::zero(), |acc, x| &acc + &x);
        assert_eq!(cards, ExactScalar::one());
        assert!(two_card_total_pmf(10).is_err());
        assert!(card_value_pmf(10).is_err());
    }

    #[test]
    fn mod10_examples() {
        assert_eq!(mod10(0), 0);
        assert_eq!(mod10(17), 7);
        assert_eq!(mod10(10), 0);
    }

    #[test]
    fn enumeration_is_canonical_and_complete() {
        let sets = enumerate_info_sets();
        assert_eq!(sets.len(), INFO_SET_COUNT);
        assert_eq!(sets[0], InfoSet { k1: 0, k2: 0, j: 0 });
        assert!(InfoSet::new(11, 11, 0).is_err());
        for (i, s) in sets.iter().enumerate() {
            assert_eq!(s.index(), i, "canonical index mismatch at {s}");
        }
        let mut sorted = sets.clone();
        sorted.sort();
        assert_eq!(sorted, sets);
    }

    #[test]
    fn info_set_round_trips_through_text() {
        let s = InfoSet::new(6, 10, 6).unwrap();
        assert_eq!(s.to_string(), "6,10,6");
        assert_eq!("6,10,6".parse::<InfoSet>().unwrap(), s);
        assert!("11,11,0".parse::<InfoSet>().is_err());
    }

    #[test]
    fn theta_canonicalization() {
        let t = ThetaParam::from_ratio(3, 4).unwrap();
        assert_eq!(t.value(), &BigRational::new(1.into(), 4.into()));
        assert!(t.swapped());
        let u = ThetaParam::from_ratio(1, 2).unwrap();
        assert!(!u.swapped());
        assert!(ThetaParam::from_ratio(0, 1).is_err());
        assert!(ThetaParam::from_ratio(1, 1).is_err());
        assert!(ThetaParam::from_ratio(7, 5).is_err());
    }
}
