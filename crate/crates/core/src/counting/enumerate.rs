//! Brute-force enumeration of IS_n in a fixed order, plus ranking and
//! unranking in that order.
//!
//! Order: rank-major, then lexicographic on the map table with "undefined"
//! before every point. This is the same order as `Ord for PartialInjection`.

use std::fmt;

use num_bigint::BigUint;
use num_traits::{ToPrimitive, Zero};

use super::sequences::{rank_count, Sequences};
use crate::arith::{binomial, falling};
use crate::element::PartialInjection;
use crate::error::{Error, Result};

/// Default element budget for brute-force enumeration.
pub const DEFAULT_BUDGET: u64 = 100_000_000;

/// Environment variable overriding [`DEFAULT_BUDGET`] for the command line.
pub const BUDGET_ENV: &str = "PINJ_BUDGET";

pub fn budget_from_env() -> u64 {
    std::env::var(BUDGET_ENV)
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(DEFAULT_BUDGET)
}

pub enum Filter {
    All,
    Rank(usize),
    Nilpotent,
    NilpotentWithDefect(usize),
    Custom(Box<dyn Fn(&PartialInjection) -> bool + Send + Sync>),
}

impl Filter {
    pub fn custom(f: impl Fn(&PartialInjection) -> bool + Send + Sync + 'static) -> Self {
        Filter::Custom(Box::new(f))
    }

    /// Rank classes that have to be scanned (none for an impossible rank).
    #[allow(clippy::reversed_empty_ranges)]
    fn ranks(&self, n: usize) -> std::ops::RangeInclusive<usize> {
        match *self {
            Filter::Rank(k) if k <= n => k..=k,
            Filter::NilpotentWithDefect(d) if d <= n => (n - d)..=(n - d),
            Filter::Rank(_) | Filter::NilpotentWithDefect(_) => 1..=0,
            Filter::All | Filter::Nilpotent | Filter::Custom(_) => 0..=n,
        }
    }

    fn accepts(&self, a: &PartialInjection) -> bool {
        match self {
            Filter::All | Filter::Rank(_) => true,
            Filter::Nilpotent | Filter::NilpotentWithDefect(_) => a.is_nilpotent(),
            Filter::Custom(f) => f(a),
        }
    }
}

impl fmt::Debug for Filter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Filter::All => f.write_str("All"),
            Filter::Rank(k) => write!(f, "Rank({k})"),
            Filter::Nilpotent => f.write_str("Nilpotent"),
            Filter::NilpotentWithDefect(k) => write!(f, "NilpotentWithDefect({k})"),
            Filter::Custom(_) => f.write_str("Custom(..)"),
        }
    }
}

/// Number of elements a filter forces us to scan.
pub fn scan_size(n: usize, filter: &Filter) -> BigUint {
    filter.ranks(n).map(|k| rank_count(n, k)).sum()
}

pub fn check_budget(required: BigUint, budget: u64) -> Result<()> {
    if required > BigUint::from(budget) {
        Err(Error::BudgetExceeded { required, budget })
    } else {
        Ok(())
    }
}

/// Streams matching elements under [`DEFAULT_BUDGET`].
pub fn enumerate(n: usize, filter: Filter) -> Result<Elements> {
    enumerate_within(n, filter, DEFAULT_BUDGET)
}

pub fn enumerate_within(n: usize, filter: Filter, budget: u64) -> Result<Elements> {
    check_budget(scan_size(n, &filter), budget)?;
    let ranks = filter.ranks(n);
    Ok(Elements {
        n,
        next_rank: *ranks.start(),
        last_rank: *ranks.end(),
        current: None,
        filter,
    })
}

/// Iterator returned by [`enumerate`].
pub struct Elements {
    n: usize,
    next_rank: usize,
    last_rank: usize,
    current: Option<RankClass>,
    filter: Filter,
}

impl Iterator for Elements {
    type Item = PartialInjection;

    fn next(&mut self) -> Option<PartialInjection> {
        loop {
            if let Some(class) = &mut self.current {
                match class.next() {
                    Some(a) if self.filter.accepts(&a) => return Some(a),
                    Some(_) => continue,
                    None => self.current = None,
                }
            }
            if self.next_rank > self.last_rank {
                return None;
            }
            self.current = Some(RankClass::new(self.n, self.next_rank));
            self.next_rank += 1;
        }
    }
}

/// All elements of one rank, in lexicographic order of the map table.
#[derive(Debug, Clone)]
pub struct RankClass {
    n: usize,
    rank: usize,
    map: Vec<Option<usize>>,
    used: Vec<bool>,
    defined: usize,
    started: bool,
    done: bool,
}

impl RankClass {
    pub fn new(n: usize, rank: usize) -> Self {
        RankClass {
            n,
            rank,
            map: vec![None; n],
            used: vec![false; n + 1],
            defined: 0,
            started: false,
            done: rank > n,
        }
    }

    /// Lexicographically smallest completion of positions `from..n`.
    fn fill_from(&mut self, from: usize) {
        for pos in from..self.n {
            let need = self.rank - self.defined;
            if need < self.n - pos {
                self.map[pos] = None;
            } else {
                let v = (1..=self.n)
                    .find(|&v| !self.used[v])
                    .expect("enough values");
                self.map[pos] = Some(v);
                self.used[v] = true;
                self.defined += 1;
            }
        }
    }

    fn advance(&mut self) -> bool {
        for pos in (0..self.n).rev() {
            let current = self.map[pos].take();
            if let Some(v) = current {
                self.used[v] = false;
                self.defined -= 1;
            }
            // Only a defined entry can follow; check there is room for it.
            if self.defined >= self.rank || self.rank - self.defined - 1 > self.n - pos - 1 {
                continue;
            }
            let floor = current.unwrap_or(0);
            if let Some(w) = ((floor + 1)..=self.n).find(|&w| !self.used[w]) {
                self.map[pos] = Some(w);
                self.used[w] = true;
                self.defined += 1;
                self.fill_from(pos + 1);
                return true;
            }
        }
        false
    }
}

impl Iterator for RankClass {
    type Item = PartialInjection;

    fn next(&mut self) -> Option<PartialInjection> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            self.fill_from(0);
        } else if !self.advance() {
            self.done = true;
            return None;
        }
        Some(PartialInjection::from_map_unchecked(self.map.clone()))
    }
}

/// Bijection between IS_n and `0..|IS_n|` following the enumeration order.
#[derive(Debug, Clone)]
pub struct Unranker {
    n: usize,
    class_sizes: Vec<BigUint>,
    total: BigUint,
    // completions[k][m][r]: ways to fill m positions with r more defined
    // entries when the class rank is k.
    completions: Vec<Vec<Vec<BigUint>>>,
}

impl Unranker {
    pub fn new(n: usize) -> Self {
        let class_sizes: Vec<BigUint> = (0..=n).map(|k| rank_count(n, k)).collect();
        let total = Sequences::up_to(n).semigroup[n].clone();
        let completions = (0..=n)
            .map(|k| {
                (0..=n)
                    .map(|m| {
                        (0..=k)
                            .map(|r| binomial(m, r) * falling(n - k + r, r))
                            .collect()
                    })
                    .collect()
            })
            .collect();
        Unranker {
            n,
            class_sizes,
            total,
            completions,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn total(&self) -> &BigUint {
        &self.total
    }

    fn completions(&self, k: usize, m: usize, r: usize) -> BigUint {
        if r > m || r > k {
            BigUint::zero()
        } else {
            self.completions[k][m][r].clone()
        }
    }

    /// The element at position `index` of the enumeration order.
    pub fn unrank(&self, index: &BigUint) -> Result<PartialInjection> {
        if index >= &self.total {
            return Err(Error::InvalidArgument(format!(
                "index {index} outside 0..{}",
                self.total
            )));
        }
        let n = self.n;
        let mut idx = index.clone();
        let mut k = 0;
        while idx >= self.class_sizes[k] {
            idx -= &self.class_sizes[k];
            k += 1;
        }
        let mut map = vec![None; n];
        let mut used = vec![false; n + 1];
        let mut defined = 0;
        for (pos, slot) in map.iter_mut().enumerate() {
            let rest = n - pos - 1;
            let need = k - defined;
            if need <= rest {
                let c = self.completions(k, rest, need);
                if idx < c {
                    continue;
                }
                idx -= c;
            }
            // A defined entry; every unused value has the same number of
            // completions, so pick by division.
            let c = self.completions(k, rest, need - 1);
            let q = (&idx / &c).to_usize().expect("small quotient");
            idx -= &c * q;
            let v = (1..=n)
                .filter(|&v| !used[v])
                .nth(q)
                .expect("index within class");
            *slot = Some(v);
            used[v] = true;
            defined += 1;
        }
        Ok(PartialInjection::from_map_unchecked(map))
    }

    /// Position of `a` in the enumeration order.
    pub fn rank_of(&self, a: &PartialInjection) -> Result<BigUint> {
        if a.n() != self.n {
            return Err(Error::SizeMismatch {
                left: self.n,
                right: a.n(),
            });
        }
        let n = self.n;
        let k = a.rank();
        let mut idx: BigUint = self.class_sizes[..k].iter().sum();
        let mut used = vec![false; n + 1];
        let mut defined = 0;
        for (pos, entry) in a.map_table().iter().enumerate() {
            let rest = n - pos - 1;
            let need = k - defined;
            if let Some(v) = *entry {
                if need <= rest {
                    idx += self.completions(k, rest, need);
                }
                let smaller = (1..v).filter(|&w| !used[w]).count();
                idx += self.completions(k, rest, need - 1) * smaller;
                used[v] = true;
                defined += 1;
            }
        }
        Ok(idx)
    }
}
