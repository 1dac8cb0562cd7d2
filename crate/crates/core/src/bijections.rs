//! Five explicit bijections between sets of marked partial injections, each
//! with its inverse and an exhaustive sweep checking both directions.
//!
//! | map              | domain                                   | codomain                              |
//! |------------------|------------------------------------------|---------------------------------------|
//! | `lah_defect`     | nilpotent α, point x                      | β with the same defect, chain of β    |
//! | `cycle_chain`    | α, cycle of α, base point on it           | β, chain of β                         |
//! | `fixed_point`    | α, point x                                | β with chain, or γ with fixed y and z |
//! | `orbit_chain`    | α, point on the orbit of 1                | β, chain of β                         |
//! | `permpart_chain` | point x of n+1, α on the other n points   | nilpotent β on n+1 points, chain      |

use std::collections::HashSet;
use std::fmt;

use num_bigint::BigUint;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::chart::ChartDecomposition;
use crate::counting::{count_table, enumerate_within, Filter, Sequences};
use crate::element::PartialInjection;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Mark {
    Point {
        x: usize,
    },
    /// A fixed point `y` together with an arbitrary point `z`.
    PointPair {
        y: usize,
        z: usize,
    },
    /// Index into the canonical chain list.
    Chain {
        chain: usize,
    },
    /// Index into the canonical cycle list, plus a base point on that cycle.
    CyclePoint {
        cycle: usize,
        base: usize,
    },
}

#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "MarkedJson")]
pub struct MarkedElement {
    pub element: PartialInjection,
    pub mark: Mark,
}

#[derive(Deserialize)]
struct MarkedJson {
    element: PartialInjection,
    mark: Mark,
}

impl TryFrom<MarkedJson> for MarkedElement {
    type Error = Error;

    fn try_from(j: MarkedJson) -> Result<Self> {
        MarkedElement::new(j.element, j.mark)
    }
}

impl MarkedElement {
    /// Checks that the mark names points, chains or cycles the element has.
    pub fn new(element: PartialInjection, mark: Mark) -> Result<Self> {
        let n = element.n();
        let point = |p: usize| {
            if p == 0 || p > n {
                Err(Error::InvalidMark(format!("point {p} outside 1..={n}")))
            } else {
                Ok(())
            }
        };
        match mark {
            Mark::Point { x } => point(x)?,
            Mark::PointPair { y, z } => {
                point(y)?;
                point(z)?;
            }
            Mark::Chain { chain } => {
                let count = element.chart().chains.len();
                if chain >= count {
                    return Err(Error::InvalidMark(format!(
                        "chain {chain} but the element has {count} chains"
                    )));
                }
            }
            Mark::CyclePoint { cycle, base } => {
                let chart = element.chart();
                match chart.cycles.get(cycle) {
                    None => {
                        return Err(Error::InvalidMark(format!(
                            "cycle {cycle} but the element has {} cycles",
                            chart.cycles.len()
                        )))
                    }
                    Some(c) if !c.contains(&base) => {
                        return Err(Error::InvalidMark(format!(
                            "base {base} is not on cycle {cycle}"
                        )))
                    }
                    Some(_) => {}
                }
            }
        }
        Ok(MarkedElement { element, mark })
    }

    pub fn point(element: PartialInjection, x: usize) -> Result<Self> {
        Self::new(element, Mark::Point { x })
    }

    pub fn point_pair(element: PartialInjection, y: usize, z: usize) -> Result<Self> {
        Self::new(element, Mark::PointPair { y, z })
    }

    /// Marks the chain that contains `x`.
    pub fn chain_through(element: PartialInjection, x: usize) -> Result<Self> {
        let chain = element
            .chart()
            .chain_of(x)
            .ok_or_else(|| Error::InvalidMark(format!("{x} is not on a chain")))?;
        Ok(MarkedElement {
            element,
            mark: Mark::Chain { chain },
        })
    }

    /// Marks the cycle that contains `base`, with `base` as base point.
    pub fn cycle_at(element: PartialInjection, base: usize) -> Result<Self> {
        let cycle = element
            .chart()
            .cycle_of(base)
            .ok_or_else(|| Error::InvalidMark(format!("{base} is not on a cycle")))?;
        Ok(MarkedElement {
            element,
            mark: Mark::CyclePoint { cycle, base },
        })
    }

    /// The marked chain's points, source first.
    pub fn marked_chain(&self) -> Option<Vec<usize>> {
        match self.mark {
            Mark::Chain { chain } => self.element.chart().chains.get(chain).cloned(),
            _ => None,
        }
    }
}

impl fmt::Display for MarkedElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} ", self.element)?;
        match self.mark {
            Mark::Point { x } => write!(f, "x={x}"),
            Mark::PointPair { y, z } => write!(f, "y={y} z={z}"),
            Mark::Chain { .. } => {
                let l = self.marked_chain().unwrap_or_default();
                let l: Vec<String> = l.iter().map(usize::to_string).collect();
                write!(f, "l=[{}]", l.join(","))
            }
            Mark::CyclePoint { cycle, base } => write!(f, "cycle#{cycle} base={base}"),
        }
    }
}

impl fmt::Debug for MarkedElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidMark(msg.into())
}

fn expect_point(m: &MarkedElement) -> Result<usize> {
    match m.mark {
        Mark::Point { x } => Ok(x),
        other => Err(invalid(format!("expected a point mark, got {other:?}"))),
    }
}

fn expect_chain(m: &MarkedElement) -> Result<(ChartDecomposition, usize)> {
    match m.mark {
        Mark::Chain { chain } => {
            let chart = m.element.chart();
            if chain >= chart.chains.len() {
                return Err(invalid(format!("no chain {chain}")));
            }
            Ok((chart, chain))
        }
        other => Err(invalid(format!("expected a chain mark, got {other:?}"))),
    }
}

/// Cycle rotated so that it starts at `x`.
fn rotate_to(cycle: &[usize], x: usize) -> Vec<usize> {
    let at = cycle.iter().position(|&p| p == x).expect("x on cycle");
    cycle[at..].iter().chain(&cycle[..at]).copied().collect()
}

// ----- nilpotent with a point <-> element with a chain, same defect -----

/// `(α, x)` with α nilpotent goes to `(β, l)`: the points `α(x), α²(x), …`
/// are sorted into `t₁ < … < t_s`, β sends `αⁱ(x)` to `tᵢ`, drops `x` from
/// the domain and otherwise agrees with α. The marked chain ends at `x`.
pub fn lah_defect_forward(m: &MarkedElement) -> Result<MarkedElement> {
    let a = &m.element;
    let x = expect_point(m)?;
    if !a.is_nilpotent() {
        return Err(Error::NotNilpotent);
    }
    let mut path = Vec::new();
    let mut y = x;
    while let Some(z) = a.apply(y) {
        path.push(z);
        y = z;
    }
    let mut sorted = path.clone();
    sorted.sort_unstable();
    let mut map = a.map_table().to_vec();
    map[x - 1] = None;
    for (p, t) in path.iter().zip(&sorted) {
        map[p - 1] = Some(*t);
    }
    MarkedElement::chain_through(PartialInjection::from_map(map)?, x)
}

/// Inverse of [`lah_defect_forward`]. The cycle points of β are exactly the
/// former orbit of `x`, which is recovered from the sorted order.
pub fn lah_defect_backward(m: &MarkedElement) -> Result<MarkedElement> {
    let (chart, idx) = expect_chain(m)?;
    let b = &m.element;
    let x = *chart.chains[idx].last().expect("chains are non-empty");
    let mut sorted: Vec<usize> = chart.cycles.iter().flatten().copied().collect();
    sorted.sort_unstable();
    let inv = b.inverse();
    let mut map = b.map_table().to_vec();
    let mut prev = x;
    for t in &sorted {
        let u = inv.apply(*t).expect("cycle points have preimages");
        map[prev - 1] = Some(u);
        prev = u;
    }
    map[prev - 1] = None;
    MarkedElement::point(PartialInjection::from_map(map)?, x)
}

// ----- cycle with a base point <-> chain -----

/// Opens the marked cycle at its base point: `(x, a, …, b)` becomes the
/// chain `[x, a, …, b]`.
pub fn cycle_chain_forward(m: &MarkedElement) -> Result<MarkedElement> {
    let (cycle, base) = match m.mark {
        Mark::CyclePoint { cycle, base } => (cycle, base),
        other => return Err(invalid(format!("expected a cycle mark, got {other:?}"))),
    };
    let chart = m.element.chart();
    let c = chart
        .cycles
        .get(cycle)
        .filter(|c| c.contains(&base))
        .ok_or_else(|| invalid("base point not on the marked cycle"))?;
    let opened = rotate_to(c, base);
    let mut map = m.element.map_table().to_vec();
    map[opened[opened.len() - 1] - 1] = None;
    MarkedElement::chain_through(PartialInjection::from_map(map)?, base)
}

/// Closes the marked chain into a cycle based at its source.
pub fn cycle_chain_backward(m: &MarkedElement) -> Result<MarkedElement> {
    let (chart, idx) = expect_chain(m)?;
    let l = &chart.chains[idx];
    let mut map = m.element.map_table().to_vec();
    map[l[l.len() - 1] - 1] = Some(l[0]);
    MarkedElement::cycle_at(PartialInjection::from_map(map)?, l[0])
}

// ----- a point <-> a chain, or a fixed point with a point -----

/// `(α, x)`: if `x` is on a cycle, open that cycle at `x` (result marked by
/// a chain). If `x` is on a chain, cut `x` out as a fixed point `y = x`:
/// a source `x` of `[x, a, …, b]` leaves the cycle `(a, …, b)` and `z = a`;
/// a singleton `[x]` gives `z = x`; otherwise `z` is the predecessor of `x`
/// and the chain closes up around the gap.
pub fn fixed_point_forward(m: &MarkedElement) -> Result<MarkedElement> {
    let a = &m.element;
    let x = expect_point(m)?;
    let chart = a.chart();
    if chart.cycle_of(x).is_some() {
        let opened = MarkedElement::cycle_at(a.clone(), x)?;
        return cycle_chain_forward(&opened);
    }
    let chain = &chart.chains[chart.chain_of(x).expect("x on a chain")];
    let pos = chain.iter().position(|&p| p == x).expect("x on its chain");
    let mut cycles = chart.cycles.clone();
    let mut chains: Vec<Vec<usize>> = chart
        .chains
        .iter()
        .filter(|c| !c.contains(&x))
        .cloned()
        .collect();
    cycles.push(vec![x]);
    let z = if pos == 0 && chain.len() > 1 {
        cycles.push(chain[1..].to_vec());
        chain[1]
    } else if chain.len() == 1 {
        x
    } else {
        let mut rest = chain.clone();
        rest.remove(pos);
        chains.push(rest);
        chain[pos - 1]
    };
    let g = ChartDecomposition::assemble(a.n(), &cycles, &chains)?;
    MarkedElement::point_pair(g, x, z)
}

/// Inverse of [`fixed_point_forward`] on either kind of codomain element.
pub fn fixed_point_backward(m: &MarkedElement) -> Result<MarkedElement> {
    let (y, z) = match m.mark {
        Mark::Chain { .. } => {
            let back = cycle_chain_backward(m)?;
            let base = match back.mark {
                Mark::CyclePoint { base, .. } => base,
                _ => unreachable!("cycle_chain_backward marks a cycle"),
            };
            return MarkedElement::point(back.element, base);
        }
        Mark::PointPair { y, z } => (y, z),
        other => {
            return Err(invalid(format!(
                "expected a chain or point pair, got {other:?}"
            )))
        }
    };
    let g = &m.element;
    if g.apply(y) != Some(y) {
        return Err(invalid(format!("{y} is not a fixed point")));
    }
    let chart = g.chart();
    let mut cycles: Vec<Vec<usize>> = chart
        .cycles
        .iter()
        .filter(|c| c.as_slice() != [y])
        .cloned()
        .collect();
    let mut chains = chart.chains.clone();
    if z == y {
        chains.push(vec![y]);
    } else if let Some(ci) = chart.chain_of(z) {
        let c = &mut chains[ci];
        let at = c.iter().position(|&p| p == z).expect("z on its chain");
        c.insert(at + 1, y);
    } else {
        let ci = cycles
            .iter()
            .position(|c| c.contains(&z))
            .expect("z on a cycle");
        let c = cycles.remove(ci);
        let mut chain = vec![y];
        chain.extend(rotate_to(&c, z));
        chains.push(chain);
    }
    let a = ChartDecomposition::assemble(g.n(), &cycles, &chains)?;
    MarkedElement::point(a, y)
}

// ----- a point on the orbit of 1 <-> a chain -----

/// `(α, x)` with `x` on the orbit of 1. A cycle through 1 is opened at `x`;
/// on a chain `[…, 1, …, p, x, …, c]` the tail from `x` is split off; for
/// `x = 1` on `[a, …, 1, b, …, c]` the head closes into the cycle
/// `(a, …, 1)` and the tail `[b, …, c]` is marked.
pub fn orbit_chain_forward(m: &MarkedElement) -> Result<MarkedElement> {
    let a = &m.element;
    let x = expect_point(m)?;
    if a.n() == 0 || !a.orbit(1)?.points.contains(&x) {
        return Err(invalid(format!("{x} is not on the orbit of 1")));
    }
    let chart = a.chart();
    if chart.cycle_of(1).is_some() {
        let opened = MarkedElement::cycle_at(a.clone(), x)?;
        return cycle_chain_forward(&opened);
    }
    let chain = &chart.chains[chart.chain_of(1).expect("1 on a chain")];
    let pos = chain
        .iter()
        .position(|&p| p == x)
        .expect("x on the chain of 1");
    let mut cycles = chart.cycles.clone();
    let mut chains: Vec<Vec<usize>> = chart
        .chains
        .iter()
        .filter(|c| !c.contains(&1))
        .cloned()
        .collect();
    let tail = if x == 1 {
        cycles.push(chain[..=pos].to_vec());
        chain[pos + 1..].to_vec()
    } else {
        chains.push(chain[..pos].to_vec());
        chain[pos..].to_vec()
    };
    let head = tail[0];
    chains.push(tail);
    let b = ChartDecomposition::assemble(a.n(), &cycles, &chains)?;
    MarkedElement::chain_through(b, head)
}

/// Inverse of [`orbit_chain_forward`].
pub fn orbit_chain_backward(m: &MarkedElement) -> Result<MarkedElement> {
    let (chart, idx) = expect_chain(m)?;
    let b = &m.element;
    let l = chart.chains[idx].clone();
    if l.contains(&1) {
        let back = cycle_chain_backward(m)?;
        return MarkedElement::point(back.element, l[0]);
    }
    let mut cycles = chart.cycles.clone();
    let mut chains = chart.chains.clone();
    chains.remove(idx);
    let x = if let Some(ci) = chains.iter().position(|c| c.contains(&1)) {
        chains[ci].extend(&l);
        l[0]
    } else {
        let ci = cycles
            .iter()
            .position(|c| c.contains(&1))
            .expect("1 on a cycle");
        let c = cycles.remove(ci);
        // Rotate so the cycle ends at 1.
        let mut chain = rotate_to(&c, b.apply(1).expect("1 on a cycle"));
        chain.extend(&l);
        chains.push(chain);
        1
    };
    let a = ChartDecomposition::assemble(b.n(), &cycles, &chains)?;
    MarkedElement::point(a, x)
}

// ----- a point of n+1 with an element on the rest <-> nilpotent chain -----

/// Input is an element on `n + 1` points in which `x` is isolated (neither
/// in the domain nor the image), marked with `x`. With the cycle points
/// sorted `a₁ < … < a_k` and `α(a_j) = a_{i_j}`, the cycles are replaced by
/// the chain `[a_{i_1}, …, a_{i_k}, x]`.
pub fn permpart_chain_forward(m: &MarkedElement) -> Result<MarkedElement> {
    let a = &m.element;
    let x = expect_point(m)?;
    if a.in_domain(x) || a.image().any(|y| y == x) {
        return Err(invalid(format!("{x} is not isolated")));
    }
    let chart = a.chart();
    let mut sorted: Vec<usize> = chart.cycles.iter().flatten().copied().collect();
    sorted.sort_unstable();
    let mut l: Vec<usize> = sorted
        .iter()
        .map(|&p| a.apply(p).expect("cycle point"))
        .collect();
    l.push(x);
    let mut chains: Vec<Vec<usize>> = chart
        .chains
        .iter()
        .filter(|c| c[..] != [x])
        .cloned()
        .collect();
    chains.push(l);
    let b = ChartDecomposition::assemble(a.n(), &[], &chains)?;
    MarkedElement::chain_through(b, x)
}

/// Inverse of [`permpart_chain_forward`]: the last point of the marked
/// chain is `x`; the others, sorted `s₁ < … < s_k`, get `α(s_j) = l_j`.
pub fn permpart_chain_backward(m: &MarkedElement) -> Result<MarkedElement> {
    let (chart, idx) = expect_chain(m)?;
    let b = &m.element;
    if !chart.cycles.is_empty() {
        return Err(Error::NotNilpotent);
    }
    let l = &chart.chains[idx];
    let (&x, rest) = l.split_last().expect("chains are non-empty");
    let mut sorted = rest.to_vec();
    sorted.sort_unstable();
    let mut map = b.map_table().to_vec();
    map[x - 1] = None;
    for (s, t) in sorted.iter().zip(rest) {
        map[s - 1] = Some(*t);
    }
    MarkedElement::point(PartialInjection::from_map(map)?, x)
}

// ----- exhaustive sweeps -----

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Bijection {
    LahDefect,
    CycleChain,
    FixedPoint,
    OrbitChain,
    PermpartChain,
}

impl Bijection {
    pub const ALL: [Bijection; 5] = [
        Bijection::LahDefect,
        Bijection::CycleChain,
        Bijection::FixedPoint,
        Bijection::OrbitChain,
        Bijection::PermpartChain,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Bijection::LahDefect => "lah_defect",
            Bijection::CycleChain => "cycle_chain",
            Bijection::FixedPoint => "fixed_point",
            Bijection::OrbitChain => "orbit_chain",
            Bijection::PermpartChain => "permpart_chain",
        }
    }

    pub fn from_name(name: &str) -> Option<Bijection> {
        Self::ALL.into_iter().find(|b| b.name() == name)
    }

    pub fn forward(self, m: &MarkedElement) -> Result<MarkedElement> {
        match self {
            Bijection::LahDefect => lah_defect_forward(m),
            Bijection::CycleChain => cycle_chain_forward(m),
            Bijection::FixedPoint => fixed_point_forward(m),
            Bijection::OrbitChain => orbit_chain_forward(m),
            Bijection::PermpartChain => permpart_chain_forward(m),
        }
    }

    pub fn backward(self, m: &MarkedElement) -> Result<MarkedElement> {
        match self {
            Bijection::LahDefect => lah_defect_backward(m),
            Bijection::CycleChain => cycle_chain_backward(m),
            Bijection::FixedPoint => fixed_point_backward(m),
            Bijection::OrbitChain => orbit_chain_backward(m),
            Bijection::PermpartChain => permpart_chain_backward(m),
        }
    }

    /// Every marked element the forward map accepts at size `n`.
    pub fn domain(self, n: usize, budget: u64) -> Result<Vec<MarkedElement>> {
        let mut out = Vec::new();
        match self {
            Bijection::LahDefect => {
                for a in enumerate_within(n, Filter::Nilpotent, budget)? {
                    for x in 1..=n {
                        out.push(MarkedElement::point(a.clone(), x)?);
                    }
                }
            }
            Bijection::CycleChain => {
                for a in enumerate_within(n, Filter::All, budget)? {
                    for (cycle, c) in a.chart().cycles.iter().enumerate() {
                        for &base in c {
                            out.push(MarkedElement::new(
                                a.clone(),
                                Mark::CyclePoint { cycle, base },
                            )?);
                        }
                    }
                }
            }
            Bijection::FixedPoint => {
                for a in enumerate_within(n, Filter::All, budget)? {
                    for x in 1..=n {
                        out.push(MarkedElement::point(a.clone(), x)?);
                    }
                }
            }
            Bijection::OrbitChain => {
                for a in enumerate_within(n, Filter::All, budget)? {
                    if n == 0 {
                        continue;
                    }
                    for x in a.orbit(1)?.points {
                        out.push(MarkedElement::point(a.clone(), x)?);
                    }
                }
            }
            Bijection::PermpartChain => {
                let elements: Vec<PartialInjection> =
                    enumerate_within(n, Filter::All, budget)?.collect();
                for x in 1..=n + 1 {
                    let lift = |p: usize| if p < x { p } else { p + 1 };
                    for a in &elements {
                        let pairs: Vec<(usize, usize)> =
                            a.pairs().map(|(p, q)| (lift(p), lift(q))).collect();
                        let e = PartialInjection::from_pairs(n + 1, &pairs)?;
                        out.push(MarkedElement::point(e, x)?);
                    }
                }
            }
        }
        Ok(out)
    }

    /// Every marked element the backward map accepts at size `n`.
    pub fn codomain(self, n: usize, budget: u64) -> Result<Vec<MarkedElement>> {
        let chains_of = |size: usize, filter: Filter| -> Result<Vec<MarkedElement>> {
            let mut out = Vec::new();
            for b in enumerate_within(size, filter, budget)? {
                for chain in 0..b.chart().chains.len() {
                    out.push(MarkedElement::new(b.clone(), Mark::Chain { chain })?);
                }
            }
            Ok(out)
        };
        match self {
            Bijection::LahDefect | Bijection::CycleChain | Bijection::OrbitChain => {
                chains_of(n, Filter::All)
            }
            Bijection::PermpartChain => chains_of(n + 1, Filter::Nilpotent),
            Bijection::FixedPoint => {
                let mut out = chains_of(n, Filter::All)?;
                for g in enumerate_within(n, Filter::All, budget)? {
                    for y in (1..=n).filter(|&y| g.apply(y) == Some(y)) {
                        for z in 1..=n {
                            out.push(MarkedElement::point_pair(g.clone(), y, z)?);
                        }
                    }
                }
                Ok(out)
            }
        }
    }

    /// Size of domain and codomain according to the closed forms.
    pub fn expected_size(self, n: usize) -> BigUint {
        let t = count_table(n);
        match self {
            // n |T_n| = Σ_k n L'(n,k) = Σ_k k D_{n,k} = L_n
            Bijection::LahDefect => &t.card_t * n,
            Bijection::CycleChain | Bijection::OrbitChain => t.chains_total,
            // n |IS_n| = L_n + n P_n
            Bijection::FixedPoint => &t.card_is * n,
            Bijection::PermpartChain => Sequences::up_to(n + 1).nilpotent_chains[n + 1].clone(),
        }
    }
}

impl fmt::Display for Bijection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepReport {
    pub bijection: Bijection,
    pub n: usize,
    pub domain_size: usize,
    pub codomain_size: usize,
    #[serde(with = "crate::json::big")]
    pub expected_size: BigUint,
    /// `backward(forward(m)) = m` on the whole domain.
    pub left_inverse: bool,
    /// `forward(backward(m)) = m` on the whole codomain.
    pub right_inverse: bool,
    /// Forward images are pairwise distinct and all lie in the codomain.
    pub injective: bool,
    /// Defect preserved (`lah_defect`) or result nilpotent (`permpart_chain`).
    pub preserves_type: bool,
    pub failures: Vec<String>,
}

impl SweepReport {
    pub fn passed(&self) -> bool {
        let expected = BigUint::from(self.domain_size);
        self.left_inverse
            && self.right_inverse
            && self.injective
            && self.preserves_type
            && expected == self.expected_size
            && self.codomain_size == self.domain_size
    }
}

impl fmt::Display for SweepReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} {} n={} |domain|={} |codomain|={} expected={} left_inverse={} right_inverse={} injective={} preserves_type={}",
            if self.passed() { "PASS" } else { "FAIL" },
            self.bijection,
            self.n,
            self.domain_size,
            self.codomain_size,
            self.expected_size,
            self.left_inverse,
            self.right_inverse,
            self.injective,
            self.preserves_type
        )
    }
}

fn preserves(b: Bijection, from: &MarkedElement, to: &MarkedElement) -> bool {
    match b {
        Bijection::LahDefect => from.element.defect() == to.element.defect(),
        Bijection::PermpartChain => to.element.is_nilpotent(),
        _ => true,
    }
}

/// Runs both directions of `b` over every input at size `n`.
pub fn sweep(b: Bijection, n: usize, budget: u64) -> Result<SweepReport> {
    let domain = b.domain(n, budget)?;
    let codomain = b.codomain(n, budget)?;
    let target: HashSet<&MarkedElement> = codomain.iter().collect();

    let forward: Vec<Result<MarkedElement>> = domain.par_iter().map(|m| b.forward(m)).collect();
    let mut failures = Vec::new();
    let mut left_inverse = true;
    let mut preserves_type = true;
    let mut images = HashSet::new();
    let mut in_target = true;
    for (m, f) in domain.iter().zip(&forward) {
        match f {
            Ok(f) => {
                if !preserves(b, m, f) {
                    preserves_type = false;
                    failures.push(format!("type changed: {m} -> {f}"));
                }
                if !target.contains(f) {
                    in_target = false;
                    failures.push(format!("outside codomain: {m} -> {f}"));
                }
                match b.backward(f) {
                    Ok(back) if &back == m => {}
                    Ok(back) => {
                        left_inverse = false;
                        failures.push(format!("{m} -> {f} -> {back}"));
                    }
                    Err(e) => {
                        left_inverse = false;
                        failures.push(format!("{m} -> {f} -> error {e}"));
                    }
                }
                images.insert(f.clone());
            }
            Err(e) => {
                left_inverse = false;
                failures.push(format!("{m} -> error {e}"));
            }
        }
    }
    let right_inverse = codomain.par_iter().all(|m| {
        b.backward(m)
            .and_then(|back| b.forward(&back))
            .map(|f| &f == m)
            .unwrap_or(false)
    });
    if !right_inverse {
        failures.push("forward(backward(m)) differs from m somewhere".to_string());
    }
    failures.truncate(20);
    Ok(SweepReport {
        bijection: b,
        n,
        domain_size: domain.len(),
        codomain_size: codomain.len(),
        expected_size: b.expected_size(n),
        left_inverse,
        right_inverse,
        injective: in_target && images.len() == domain.len(),
        preserves_type,
        failures,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chart::parse_chart;
    use crate::counting::{count_table, DEFAULT_BUDGET};

    fn el(chart: &str, n: usize) -> PartialInjection {
        parse_chart(chart, n).unwrap()
    }

    #[test]
    fn lah_defect_small_case() {
        let m = MarkedElement::point(el("[1,2]", 2), 1).unwrap();
        let f = lah_defect_forward(&m).unwrap();
        assert_eq!(f.element, el("(2)[1]", 2));
        assert_eq!(f.marked_chain(), Some(vec![1]));
        assert_eq!(lah_defect_backward(&f).unwrap(), m);
    }

    #[test]
    fn lah_defect_rejects_non_nilpotent() {
        let m = MarkedElement::point(PartialInjection::identity(2), 1).unwrap();
        assert!(matches!(lah_defect_forward(&m), Err(Error::NotNilpotent)));
    }

    #[test]
    fn opens_cycle_at_base() {
        let a = el("(1,7,2,4)[3,5,10][9,6][8]", 10);
        let m = MarkedElement::cycle_at(a, 7).unwrap();
        let f = cycle_chain_forward(&m).unwrap();
        assert_eq!(f.element, el("[3,5,10][7,2,4,1][9,6][8]", 10));
        assert_eq!(f.marked_chain(), Some(vec![7, 2, 4, 1]));
        let m = MarkedElement::cycle_at(PartialInjection::identity(1), 1).unwrap();
        let f = cycle_chain_forward(&m).unwrap();
        assert_eq!(f.element, PartialInjection::zero(1));
        assert_eq!(f.marked_chain(), Some(vec![1]));
    }

    #[test]
    fn fixed_point_cases() {
        let f = fixed_point_forward(&MarkedElement::point(el("[1,2]", 2), 1).unwrap()).unwrap();
        assert_eq!(f.element, PartialInjection::identity(2));
        assert_eq!(f.mark, Mark::PointPair { y: 1, z: 2 });
        let f = fixed_point_forward(&MarkedElement::point(PartialInjection::zero(1), 1).unwrap())
            .unwrap();
        assert_eq!(f.element, PartialInjection::identity(1));
        assert_eq!(f.mark, Mark::PointPair { y: 1, z: 1 });
        // x last on its chain: predecessor becomes z.
        let m = MarkedElement::point(el("[3,1,2]", 3), 2).unwrap();
        let f = fixed_point_forward(&m).unwrap();
        assert_eq!(f.element, el("(2)[3,1]", 3));
        assert_eq!(f.mark, Mark::PointPair { y: 2, z: 1 });
        assert_eq!(fixed_point_backward(&f).unwrap(), m);
    }

    #[test]
    fn orbit_chain_cases() {
        let m = MarkedElement::point(PartialInjection::identity(1), 1).unwrap();
        let f = orbit_chain_forward(&m).unwrap();
        assert_eq!(f.element, PartialInjection::zero(1));
        let m = MarkedElement::point(el("(1,2)", 2), 2).unwrap();
        let f = orbit_chain_forward(&m).unwrap();
        assert_eq!(f.marked_chain(), Some(vec![2, 1]));
        let m = MarkedElement::point(el("[3,1,2]", 3), 1).unwrap();
        let f = orbit_chain_forward(&m).unwrap();
        assert_eq!(f.element, el("(1,3)[2]", 3));
        assert_eq!(f.marked_chain(), Some(vec![2]));
        assert_eq!(orbit_chain_backward(&f).unwrap(), m);
        let m = MarkedElement::point(PartialInjection::zero(2), 2).unwrap();
        assert!(orbit_chain_forward(&m).is_err());
    }

    #[test]
    fn permpart_cases() {
        let m = MarkedElement::point(el("(1)[2]", 2), 2).unwrap();
        let f = permpart_chain_forward(&m).unwrap();
        assert_eq!(f.element, el("[1,2]", 2));
        assert_eq!(f.marked_chain(), Some(vec![1, 2]));
        let m = MarkedElement::point(PartialInjection::zero(3), 1).unwrap();
        let f = permpart_chain_forward(&m).unwrap();
        assert_eq!(f.element, PartialInjection::zero(3));
        assert_eq!(f.marked_chain(), Some(vec![1]));
    }

    #[test]
    fn mark_json() {
        let m = MarkedElement::point_pair(PartialInjection::identity(2), 1, 2).unwrap();
        let s = serde_json::to_string(&m).unwrap();
        assert_eq!(
            s,
            r#"{"element":{"n":2,"map":[1,2]},"mark":{"kind":"point_pair","y":1,"z":2}}"#
        );
        assert_eq!(serde_json::from_str::<MarkedElement>(&s).unwrap(), m);
        let bad = r#"{"element":{"n":2,"map":[1,2]},"mark":{"kind":"chain","chain":0}}"#;
        assert!(serde_json::from_str::<MarkedElement>(bad).is_err());
    }

    #[test]
    fn cardinalities_from_table() {
        let t = count_table(5);
        assert_eq!(&t.lah[1] * 5u32, &t.d[2] * 2u32);
        assert_eq!(
            Bijection::FixedPoint.expected_size(3),
            BigUint::from(102u32)
        );
        assert_eq!(
            Bijection::PermpartChain.expected_size(2),
            BigUint::from(21u32)
        );
    }

    #[test]
    fn lah_defect_on_n4_k2() {
        for a in enumerate_within(4, Filter::NilpotentWithDefect(2), DEFAULT_BUDGET).unwrap() {
            for x in 1..=4 {
                let m = MarkedElement::point(a.clone(), x).unwrap();
                let f = lah_defect_forward(&m).unwrap();
                assert_eq!(f.element.defect(), 2);
                assert_eq!(lah_defect_backward(&f).unwrap(), m);
            }
        }
    }

    #[test]
    fn sweeps_pass() {
        for b in Bijection::ALL {
            for n in 0..=4 {
                let r = sweep(b, n, DEFAULT_BUDGET).unwrap();
                assert!(r.passed(), "{r}\n{:?}", r.failures);
            }
        }
    }
}
