//! Brute-force counterpart of [`count_table`](super::count_table): every
//! field is tallied by walking IS_n element by element.

use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::Zero;
use rayon::prelude::*;

use super::enumerate::{check_budget, scan_size, Filter, RankClass};
use super::table::{frac, CountTable};
use crate::element::PartialInjection;
use crate::error::Result;

/// Per-element statistics accumulated over a set of elements; merging two
/// tallies is addition, so rank classes can be processed in parallel.
#[derive(Debug, Clone, Default)]
pub struct Tally {
    pub n: usize,
    pub elements: u64,
    pub nilpotents: u64,
    pub by_rank: Vec<u64>,
    pub by_defect: Vec<u64>,
    pub nilpotent_by_defect: Vec<u64>,
    pub by_stable_rank: Vec<u64>,
    pub chains: u64,
    pub nilpotent_chains: u64,
    pub chains_by_length: Vec<u64>,
    pub cycles_by_length: Vec<u64>,
    pub fixed_points: u64,
    pub stable_rank_sum: u64,
    pub rank_sum: u64,
    pub orbit_of_one: Vec<u64>,
    pub nilpotent_orbit_of_one: Vec<u64>,
    pub idempotents: u64,
    pub permutations: u64,
    /// Elements with 1 in the domain.
    pub one_in_domain: u64,
    /// Elements with both 1 and 2 in the domain.
    pub one_two_in_domain: u64,
    /// Nilpotents whose chart contains the singleton chain `[1]`.
    pub nilpotent_with_singleton_one: u64,
}

impl Tally {
    pub fn new(n: usize) -> Self {
        let orbit_len = if n > 0 { n + 1 } else { 0 };
        Tally {
            n,
            by_rank: vec![0; n + 1],
            by_defect: vec![0; n + 1],
            nilpotent_by_defect: vec![0; n + 1],
            by_stable_rank: vec![0; n + 1],
            chains_by_length: vec![0; n + 1],
            cycles_by_length: vec![0; n + 1],
            orbit_of_one: vec![0; orbit_len],
            nilpotent_orbit_of_one: vec![0; orbit_len],
            ..Default::default()
        }
    }

    pub fn add(&mut self, a: &PartialInjection) {
        let chart = a.chart();
        let rank = a.rank();
        let defect = a.defect();
        let nilpotent = chart.cycles.is_empty();
        let stable_rank: usize = chart.cycles.iter().map(Vec::len).sum();

        self.elements += 1;
        self.by_rank[rank] += 1;
        self.by_defect[defect] += 1;
        self.by_stable_rank[stable_rank] += 1;
        self.chains += chart.chains.len() as u64;
        self.stable_rank_sum += stable_rank as u64;
        self.rank_sum += rank as u64;
        for c in &chart.chains {
            self.chains_by_length[c.len()] += 1;
        }
        for c in &chart.cycles {
            self.cycles_by_length[c.len()] += 1;
        }
        self.fixed_points += (1..=self.n).filter(|&x| a.apply(x) == Some(x)).count() as u64;
        if a.is_idempotent() {
            self.idempotents += 1;
        }
        if rank == self.n {
            self.permutations += 1;
        }
        if a.in_domain(1) {
            self.one_in_domain += 1;
            if a.in_domain(2) {
                self.one_two_in_domain += 1;
            }
        }
        if self.n > 0 {
            let len = a.orbit(1).expect("1 is a point").length;
            self.orbit_of_one[len] += 1;
            if nilpotent {
                self.nilpotent_orbit_of_one[len] += 1;
            }
        }
        if nilpotent {
            self.nilpotents += 1;
            self.nilpotent_by_defect[defect] += 1;
            self.nilpotent_chains += chart.chains.len() as u64;
            if self.n > 0 && a.apply(1).is_none() && !a.image().any(|y| y == 1) {
                self.nilpotent_with_singleton_one += 1;
            }
        }
    }

    pub fn merge(mut self, other: Tally) -> Tally {
        fn add_vec(a: &mut [u64], b: &[u64]) {
            for (x, y) in a.iter_mut().zip(b) {
                *x += y;
            }
        }
        self.elements += other.elements;
        self.nilpotents += other.nilpotents;
        add_vec(&mut self.by_rank, &other.by_rank);
        add_vec(&mut self.by_defect, &other.by_defect);
        add_vec(&mut self.nilpotent_by_defect, &other.nilpotent_by_defect);
        add_vec(&mut self.by_stable_rank, &other.by_stable_rank);
        self.chains += other.chains;
        self.nilpotent_chains += other.nilpotent_chains;
        add_vec(&mut self.chains_by_length, &other.chains_by_length);
        add_vec(&mut self.cycles_by_length, &other.cycles_by_length);
        self.fixed_points += other.fixed_points;
        self.stable_rank_sum += other.stable_rank_sum;
        self.rank_sum += other.rank_sum;
        add_vec(&mut self.orbit_of_one, &other.orbit_of_one);
        add_vec(
            &mut self.nilpotent_orbit_of_one,
            &other.nilpotent_orbit_of_one,
        );
        self.idempotents += other.idempotents;
        self.permutations += other.permutations;
        self.one_in_domain += other.one_in_domain;
        self.one_two_in_domain += other.one_two_in_domain;
        self.nilpotent_with_singleton_one += other.nilpotent_with_singleton_one;
        self
    }

    /// Total number of chain and cycle components.
    pub fn components(&self) -> u64 {
        self.chains + self.cycles_by_length.iter().sum::<u64>()
    }

    pub fn into_table(self) -> CountTable {
        let n = self.n;
        let big = |x: u64| BigUint::from(x);
        let bigs = |xs: &[u64]| xs.iter().copied().map(BigUint::from).collect::<Vec<_>>();
        let c_avg = if self.elements == 0 {
            BigRational::zero()
        } else {
            frac(&big(self.components()), &big(self.elements))
        };
        CountTable {
            n,
            card_is: big(self.elements),
            card_t: big(self.nilpotents),
            r: bigs(&self.by_rank),
            d: bigs(&self.by_defect),
            lah: bigs(&self.nilpotent_by_defect[1..]),
            st: bigs(&self.by_stable_rank),
            chains_total: big(self.chains),
            chains_total_nilpotent: big(self.nilpotent_chains),
            chains_by_length: bigs(&self.chains_by_length[1..]),
            cycles_by_length: bigs(&self.cycles_by_length[1..]),
            fixed_points_total: big(self.fixed_points),
            orbit_counts: bigs(&self.orbit_of_one),
            orbit_counts_nilpotent: bigs(&self.nilpotent_orbit_of_one),
            idempotents: big(self.idempotents),
            b: frac(&big(self.elements), &big(self.permutations)),
            c_avg,
        }
    }
}

/// Tallies all of IS_n, one rank class per task.
pub fn tally(n: usize, budget: u64) -> Result<Tally> {
    check_budget(scan_size(n, &Filter::All), budget)?;
    Ok((0..=n)
        .into_par_iter()
        .map(|k| {
            let mut t = Tally::new(n);
            for a in RankClass::new(n, k) {
                t.add(&a);
            }
            t
        })
        .reduce(|| Tally::new(n), Tally::merge))
}

/// The count table obtained by enumeration rather than closed forms.
pub fn enumerated_table(n: usize, budget: u64) -> Result<CountTable> {
    Ok(tally(n, budget)?.into_table())
}
