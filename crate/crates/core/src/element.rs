//! Partial injections of `{1, ..., n}` and their algebra.
//!
//! Points are 1-based everywhere in the public API. Products read left to
//! right: `a.compose(&b)` applies `a` first, so `(a·b)(x) = b(a(x))`.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::chart::ChartDecomposition;
use crate::error::{Error, Result};

/// A partial injective self-map of `{1, ..., n}`.
///
/// The map table holds `Some(y)` at index `x - 1` when `x ↦ y` and `None`
/// where the element is undefined.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "ElementJson", into = "ElementJson")]
pub struct PartialInjection {
    map: Vec<Option<usize>>,
}

#[derive(Serialize, Deserialize)]
struct ElementJson {
    n: usize,
    map: Vec<Option<usize>>,
}

impl TryFrom<ElementJson> for PartialInjection {
    type Error = Error;

    fn try_from(raw: ElementJson) -> Result<Self> {
        if raw.map.len() != raw.n {
            return Err(Error::SizeMismatch {
                left: raw.n,
                right: raw.map.len(),
            });
        }
        PartialInjection::from_map(raw.map)
    }
}

impl From<PartialInjection> for ElementJson {
    fn from(a: PartialInjection) -> Self {
        ElementJson {
            n: a.n(),
            map: a.map,
        }
    }
}

impl PartialInjection {
    /// Builds an element from a 1-based map table, checking injectivity.
    pub fn from_map(map: Vec<Option<usize>>) -> Result<Self> {
        let n = map.len();
        let mut seen = vec![false; n + 1];
        for &y in map.iter().flatten() {
            if y == 0 || y > n {
                return Err(Error::PointOutOfRange { point: y, n });
            }
            if seen[y] {
                return Err(Error::DuplicateImagePoint { point: y });
            }
            seen[y] = true;
        }
        Ok(PartialInjection { map })
    }

    /// Builds the element whose graph is exactly `pairs`.
    pub fn from_pairs(n: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        let mut map = vec![None; n];
        for &(x, y) in pairs {
            for p in [x, y] {
                if p == 0 || p > n {
                    return Err(Error::PointOutOfRange { point: p, n });
                }
            }
            if map[x - 1].is_some() {
                return Err(Error::DuplicateDomainPoint { point: x });
            }
            map[x - 1] = Some(y);
        }
        Self::from_map(map)
    }

    /// Trusted constructor for internal callers that already guarantee
    /// injectivity.
    pub(crate) fn from_map_unchecked(map: Vec<Option<usize>>) -> Self {
        debug_assert!(Self::from_map(map.clone()).is_ok());
        PartialInjection { map }
    }

    pub fn identity(n: usize) -> Self {
        PartialInjection {
            map: (1..=n).map(Some).collect(),
        }
    }

    /// The empty map, the zero of the semigroup.
    pub fn zero(n: usize) -> Self {
        PartialInjection { map: vec![None; n] }
    }

    pub fn n(&self) -> usize {
        self.map.len()
    }

    /// Image of `x`, or `None` when `x` is outside the domain or out of range.
    pub fn apply(&self, x: usize) -> Option<usize> {
        if x == 0 {
            return None;
        }
        self.map.get(x - 1).copied().flatten()
    }

    pub fn map_table(&self) -> &[Option<usize>] {
        &self.map
    }

    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.map
            .iter()
            .enumerate()
            .filter_map(|(i, y)| y.map(|y| (i + 1, y)))
    }

    pub fn domain(&self) -> impl Iterator<Item = usize> + '_ {
        self.pairs().map(|(x, _)| x)
    }

    pub fn image(&self) -> impl Iterator<Item = usize> + '_ {
        self.pairs().map(|(_, y)| y)
    }

    pub fn in_domain(&self, x: usize) -> bool {
        self.apply(x).is_some()
    }

    pub fn rank(&self) -> usize {
        self.map.iter().filter(|y| y.is_some()).count()
    }

    pub fn defect(&self) -> usize {
        self.n() - self.rank()
    }

    /// Left-to-right product: apply `self`, then `other`.
    pub fn compose(&self, other: &PartialInjection) -> Result<PartialInjection> {
        if self.n() != other.n() {
            return Err(Error::SizeMismatch {
                left: self.n(),
                right: other.n(),
            });
        }
        Ok(self.then(other))
    }

    /// `compose` without the size check; sizes must agree.
    pub(crate) fn then(&self, other: &PartialInjection) -> PartialInjection {
        let map = self
            .map
            .iter()
            .map(|y| y.and_then(|y| other.map[y - 1]))
            .collect();
        PartialInjection { map }
    }

    pub fn inverse(&self) -> PartialInjection {
        let mut map = vec![None; self.n()];
        for (x, y) in self.pairs() {
            map[y - 1] = Some(x);
        }
        PartialInjection { map }
    }

    /// `k`-th power; `a^0` is the identity.
    pub fn power(&self, k: u64) -> PartialInjection {
        let mut result = PartialInjection::identity(self.n());
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                result = result.then(&base);
            }
            base = base.then(&base);
            k >>= 1;
        }
        result
    }

    pub fn is_idempotent(&self) -> bool {
        self.then(self) == *self
    }

    pub fn is_zero(&self) -> bool {
        self.map.iter().all(Option::is_none)
    }

    pub fn chart(&self) -> ChartDecomposition {
        ChartDecomposition::of(self)
    }

    pub fn chain_type(&self) -> ChainType {
        self.chart().chain_type(self.n())
    }

    /// Nilpotent iff the chart has no cycles.
    pub fn is_nilpotent(&self) -> bool {
        // A point lies on a cycle iff iterating from it returns to it.
        let n = self.n();
        (1..=n).all(|x| {
            let mut y = x;
            for _ in 0..n {
                match self.apply(y) {
                    Some(z) if z == x => return false,
                    Some(z) => y = z,
                    None => return true,
                }
            }
            true
        })
    }

    pub fn profile(&self) -> Profile {
        let chart = self.chart();
        let stable_rank = chart.cycles.iter().map(Vec::len).sum();
        let is_nilpotent = chart.cycles.is_empty();
        let nilpotency_index = if is_nilpotent {
            chart.chains.iter().map(Vec::len).max().unwrap_or(0)
        } else {
            0
        };
        let fixed_point_count = chart.cycles.iter().filter(|c| c.len() == 1).count();
        Profile {
            rank: self.rank(),
            defect: self.defect(),
            stable_rank,
            is_nilpotent,
            nilpotency_index,
            fixed_point_count,
            chain_type: chart.chain_type(self.n()),
        }
    }

    /// Orbit `{x, α(x), α²(x), ...}` of `x`; empty when `x ∉ dom(α)`.
    pub fn orbit(&self, x: usize) -> Result<OrbitTrace> {
        let n = self.n();
        if x == 0 || x > n {
            return Err(Error::PointOutOfRange { point: x, n });
        }
        let mut points = Vec::new();
        let mut terminal = OrbitEnd::LeavesDomain;
        if self.in_domain(x) {
            let mut y = x;
            loop {
                points.push(y);
                match self.apply(y) {
                    None => break,
                    Some(z) if z == x => {
                        terminal = OrbitEnd::ClosesCycle;
                        break;
                    }
                    Some(z) => y = z,
                }
            }
        }
        Ok(OrbitTrace {
            start: x,
            length: points.len(),
            points,
            terminal,
        })
    }

    /// Conjugation by a permutation `pi` (given as a full map table):
    /// the result sends `pi(x)` to `pi(a(x))`.
    pub fn conjugate(&self, pi: &PartialInjection) -> Result<PartialInjection> {
        if pi.rank() != pi.n() {
            return Err(Error::InvalidArgument(
                "conjugator must be a permutation".into(),
            ));
        }
        if pi.n() != self.n() {
            return Err(Error::SizeMismatch {
                left: self.n(),
                right: pi.n(),
            });
        }
        Ok(pi.inverse().then(self).then(pi))
    }
}

impl Ord for PartialInjection {
    /// Rank-major, then lexicographic on the map table with "undefined"
    /// before every point. This is the enumeration order.
    fn cmp(&self, other: &Self) -> Ordering {
        self.n()
            .cmp(&other.n())
            .then_with(|| self.rank().cmp(&other.rank()))
            .then_with(|| self.map.cmp(&other.map))
    }
}

impl PartialOrd for PartialInjection {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for PartialInjection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.chart())
    }
}

impl fmt::Debug for PartialInjection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IS_{}{}", self.n(), self.chart())
    }
}

/// Cycle and chain counts by length: `cycle_counts[i - 1]` is the number of
/// cycles of length `i`, likewise for chains.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ChainType {
    pub cycle_counts: Vec<usize>,
    pub chain_counts: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Profile {
    pub rank: usize,
    pub defect: usize,
    pub stable_rank: usize,
    pub is_nilpotent: bool,
    /// Smallest `k` with `a^k = 0`; 0 when not nilpotent.
    pub nilpotency_index: usize,
    pub fixed_point_count: usize,
    pub chain_type: ChainType,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum OrbitEnd {
    LeavesDomain,
    ClosesCycle,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbitTrace {
    pub start: usize,
    pub points: Vec<usize>,
    pub length: usize,
    pub terminal: OrbitEnd,
}

#[cfg(test)]
mod tests {
    use super::*;

    fn example() -> PartialInjection {
        PartialInjection::from_pairs(
            10,
            &[(1, 7), (2, 4), (3, 5), (4, 1), (5, 10), (7, 2), (9, 6)],
        )
        .unwrap()
    }

    #[test]
    fn from_pairs_errors() {
        assert_eq!(
            PartialInjection::from_pairs(2, &[(1, 1), (2, 1)]),
            Err(Error::DuplicateImagePoint { point: 1 })
        );
        assert_eq!(
            PartialInjection::from_pairs(2, &[(1, 1), (1, 2)]),
            Err(Error::DuplicateDomainPoint { point: 1 })
        );
        assert_eq!(
            PartialInjection::from_pairs(2, &[(1, 3)]),
            Err(Error::PointOutOfRange { point: 3, n: 2 })
        );
        let a = PartialInjection::from_pairs(2, &[(1, 2)]).unwrap();
        assert_eq!(a.to_string(), "[1,2]");
    }

    #[test]
    fn pair_order_is_irrelevant() {
        let a = PartialInjection::from_pairs(3, &[(1, 2), (3, 1)]).unwrap();
        let b = PartialInjection::from_pairs(3, &[(3, 1), (1, 2)]).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn compose_by_hand() {
        let a = PartialInjection::from_pairs(2, &[(1, 2)]).unwrap();
        let b = PartialInjection::from_pairs(2, &[(2, 1)]).unwrap();
        // 1 -> 2 -> 1, and 2 is undefined under a.
        assert_eq!(a.compose(&b).unwrap().to_string(), "(1)[2]");
        assert_eq!(
            a.compose(&PartialInjection::zero(3)),
            Err(Error::SizeMismatch { left: 2, right: 3 })
        );
        let x = example();
        assert_eq!(x.compose(&PartialInjection::identity(10)).unwrap(), x);
        assert_eq!(
            x.compose(&PartialInjection::zero(10)).unwrap(),
            PartialInjection::zero(10)
        );
    }

    #[test]
    fn inverse_cases() {
        let a = PartialInjection::from_pairs(2, &[(1, 2)]).unwrap();
        assert_eq!(a.inverse().to_string(), "[2,1]");
        assert_eq!(
            PartialInjection::zero(4).inverse(),
            PartialInjection::zero(4)
        );
        let x = example();
        assert_eq!(x.inverse().chain_type(), x.chain_type());
        assert_eq!(x.inverse().inverse(), x);
    }

    #[test]
    fn powers() {
        let a = PartialInjection::from_pairs(2, &[(1, 2)]).unwrap();
        assert_eq!(a.power(2), PartialInjection::zero(2));
        assert_eq!(a.power(0), PartialInjection::identity(2));
        assert_eq!(
            PartialInjection::identity(3).power(100),
            PartialInjection::identity(3)
        );
        let x4 = example().power(4);
        for p in [1, 7, 2, 4] {
            assert_eq!(x4.apply(p), Some(p));
        }
        assert_eq!(x4.rank(), 4);
    }

    #[test]
    fn profile_of_example() {
        let p = example().profile();
        assert_eq!(p.rank, 7);
        assert_eq!(p.defect, 3);
        assert_eq!(p.stable_rank, 4);
        assert!(!p.is_nilpotent);
        assert_eq!(p.nilpotency_index, 0);
        assert_eq!(p.fixed_point_count, 0);
        assert_eq!(
            p.chain_type.cycle_counts,
            vec![0, 0, 0, 1, 0, 0, 0, 0, 0, 0]
        );
        assert_eq!(
            p.chain_type.chain_counts,
            vec![1, 1, 1, 0, 0, 0, 0, 0, 0, 0]
        );
    }

    #[test]
    fn profile_of_zero_and_identity() {
        let z = PartialInjection::zero(4).profile();
        assert_eq!((z.rank, z.defect, z.stable_rank), (0, 4, 0));
        assert!(z.is_nilpotent);
        assert_eq!(z.nilpotency_index, 1);
        assert_eq!(z.fixed_point_count, 0);
        let e = PartialInjection::identity(4).profile();
        assert_eq!((e.rank, e.defect, e.stable_rank), (4, 0, 4));
        assert!(!e.is_nilpotent);
        assert_eq!(e.fixed_point_count, 4);
    }

    #[test]
    fn nilpotency_index_is_longest_chain() {
        let a = PartialInjection::from_pairs(5, &[(1, 2), (2, 3), (4, 5)]).unwrap();
        let p = a.profile();
        assert_eq!(p.nilpotency_index, 3);
        assert!(!a.power(2).is_zero());
        assert!(a.power(3).is_zero());
    }

    #[test]
    fn orbits() {
        let x = example();
        let o = x.orbit(1).unwrap();
        assert_eq!(o.points, vec![1, 7, 2, 4]);
        assert_eq!(o.length, 4);
        assert_eq!(o.terminal, OrbitEnd::ClosesCycle);
        let o = x.orbit(3).unwrap();
        assert_eq!(o.points, vec![3, 5, 10]);
        assert_eq!(o.terminal, OrbitEnd::LeavesDomain);
        assert_eq!(x.orbit(10).unwrap().length, 0);
        assert_eq!(PartialInjection::zero(3).orbit(1).unwrap().length, 0);
        assert!(x.orbit(11).is_err());
        assert!(x.orbit(0).is_err());
    }

    #[test]
    fn json_form() {
        let a = PartialInjection::from_pairs(3, &[(1, 3)]).unwrap();
        let s = serde_json::to_string(&a).unwrap();
        assert_eq!(s, r#"{"n":3,"map":[3,null,null]}"#);
        let back: PartialInjection = serde_json::from_str(&s).unwrap();
        assert_eq!(back, a);
        assert!(serde_json::from_str::<PartialInjection>(r#"{"n":2,"map":[1,1]}"#).is_err());
        assert!(serde_json::from_str::<PartialInjection>(r#"{"n":3,"map":[1]}"#).is_err());
    }
}
