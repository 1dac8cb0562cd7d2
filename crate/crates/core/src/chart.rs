//! Chart (chain) decomposition and the bracket notation
//! `(1,7,2,4)[3,5,10][9,6][8]`.
//!
//! Canonical form: every cycle starts at its minimum and cycles are sorted by
//! that minimum; every chain is written source first and chains are sorted by
//! their minimum point; cycles are printed before chains.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::element::{ChainType, PartialInjection};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ChartDecomposition {
    pub cycles: Vec<Vec<usize>>,
    pub chains: Vec<Vec<usize>>,
}

impl ChartDecomposition {
    pub fn of(a: &PartialInjection) -> Self {
        let n = a.n();
        let mut in_image = vec![false; n + 1];
        for y in a.image() {
            in_image[y] = true;
        }
        let mut seen = vec![false; n + 1];

        let mut chains = Vec::new();
        for source in (1..=n).filter(|&x| !in_image[x]) {
            let mut chain = vec![source];
            seen[source] = true;
            let mut x = source;
            while let Some(y) = a.apply(x) {
                chain.push(y);
                seen[y] = true;
                x = y;
            }
            chains.push(chain);
        }
        chains.sort_by_key(|c| *c.iter().min().expect("chains are non-empty"));

        let mut cycles = Vec::new();
        for start in 1..=n {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut x = a.apply(start).expect("unvisited points lie on cycles");
            while x != start {
                cycle.push(x);
                seen[x] = true;
                x = a.apply(x).expect("unvisited points lie on cycles");
            }
            cycles.push(cycle);
        }
        ChartDecomposition { cycles, chains }
    }

    /// Rebuilds an element from arbitrary (not necessarily canonical) cycles
    /// and chains, which must partition `{1, ..., n}`.
    pub fn assemble(
        n: usize,
        cycles: &[Vec<usize>],
        chains: &[Vec<usize>],
    ) -> Result<PartialInjection> {
        let mut seen = vec![false; n + 1];
        let mut map = vec![None; n];
        let mut mark = |p: usize| -> Result<()> {
            if p == 0 || p > n {
                return Err(Error::PointOutOfRange { point: p, n });
            }
            if seen[p] {
                return Err(Error::RepeatedPoint { point: p });
            }
            seen[p] = true;
            Ok(())
        };
        for cycle in cycles {
            for (i, &p) in cycle.iter().enumerate() {
                mark(p)?;
                map[p - 1] = Some(cycle[(i + 1) % cycle.len()]);
            }
        }
        for chain in chains {
            for (i, &p) in chain.iter().enumerate() {
                mark(p)?;
                map[p - 1] = chain.get(i + 1).copied();
            }
        }
        if let Some(p) = (1..=n).find(|&p| !seen[p]) {
            return Err(Error::MissingPoint { point: p });
        }
        Ok(PartialInjection::from_map_unchecked(map))
    }

    pub fn to_element(&self, n: usize) -> Result<PartialInjection> {
        Self::assemble(n, &self.cycles, &self.chains)
    }

    pub fn chain_type(&self, n: usize) -> ChainType {
        let mut cycle_counts = vec![0; n];
        let mut chain_counts = vec![0; n];
        for c in &self.cycles {
            cycle_counts[c.len() - 1] += 1;
        }
        for c in &self.chains {
            chain_counts[c.len() - 1] += 1;
        }
        ChainType {
            cycle_counts,
            chain_counts,
        }
    }

    /// Index of the chain containing `x`, in canonical order.
    pub fn chain_of(&self, x: usize) -> Option<usize> {
        self.chains.iter().position(|c| c.contains(&x))
    }

    pub fn cycle_of(&self, x: usize) -> Option<usize> {
        self.cycles.iter().position(|c| c.contains(&x))
    }
}

impl fmt::Display for ChartDecomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let write_list = |f: &mut fmt::Formatter<'_>, points: &[usize]| -> fmt::Result {
            for (i, p) in points.iter().enumerate() {
                if i > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{p}")?;
            }
            Ok(())
        };
        for c in &self.cycles {
            f.write_str("(")?;
            write_list(f, c)?;
            f.write_str(")")?;
        }
        for c in &self.chains {
            f.write_str("[")?;
            write_list(f, c)?;
            f.write_str("]")?;
        }
        Ok(())
    }
}

pub fn render_chart(a: &PartialInjection) -> String {
    a.chart().to_string()
}

/// Parses chart notation over `{1, ..., n}`.
///
/// Grammar: `element ::= term*`, `term ::= '(' intlist ')' | '[' intlist ']'`,
/// `intlist ::= int (',' int)*`. Whitespace is allowed only between terms.
pub fn parse_chart(text: &str, n: usize) -> Result<PartialInjection> {
    let bytes = text.as_bytes();
    let mut pos = 0;
    let mut cycles = Vec::new();
    let mut chains = Vec::new();
    let syntax = |offset: usize, message: &str| Error::Syntax {
        offset,
        message: message.to_string(),
    };

    loop {
        while pos < bytes.len() && bytes[pos].is_ascii_whitespace() {
            pos += 1;
        }
        if pos == bytes.len() {
            break;
        }
        let close = match bytes[pos] {
            b'(' => b')',
            b'[' => b']',
            _ => return Err(syntax(pos, "expected '(' or '['")),
        };
        pos += 1;
        let mut points = Vec::new();
        loop {
            let start = pos;
            while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                pos += 1;
            }
            if start == pos {
                return Err(syntax(pos, "expected a point"));
            }
            let point: usize = text[start..pos]
                .parse()
                .map_err(|_| Error::PointOutOfRange {
                    point: usize::MAX,
                    n,
                })?;
            points.push(point);
            match bytes.get(pos) {
                Some(b',') => pos += 1,
                Some(&c) if c == close => {
                    pos += 1;
                    break;
                }
                Some(_) => return Err(syntax(pos, "expected ',' or a matching bracket")),
                None => return Err(syntax(pos, "unterminated term")),
            }
        }
        if close == b')' {
            cycles.push(points);
        } else {
            chains.push(points);
        }
    }
    ChartDecomposition::assemble(n, &cycles, &chains)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn example_decomposition() {
        let a = PartialInjection::from_pairs(
            10,
            &[(1, 7), (2, 4), (3, 5), (4, 1), (5, 10), (7, 2), (9, 6)],
        )
        .unwrap();
        let c = a.chart();
        assert_eq!(c.cycles, vec![vec![1, 7, 2, 4]]);
        assert_eq!(c.chains, vec![vec![3, 5, 10], vec![9, 6], vec![8]]);
        assert_eq!(c.to_string(), "(1,7,2,4)[3,5,10][9,6][8]");
        assert_eq!(parse_chart("(1,7,2,4)[3,5,10][9,6][8]", 10).unwrap(), a);
        // Non-canonical input parses to the same element.
        assert!(parse_chart("[8] [6]  ", 10).is_err());
        assert_eq!(parse_chart("[9,6](2,4,1,7)[8][3,5,10]", 10).unwrap(), a);
    }

    #[test]
    fn zero_and_identity() {
        let z = PartialInjection::zero(3);
        assert_eq!(z.chart().chains, vec![vec![1], vec![2], vec![3]]);
        assert!(z.chart().cycles.is_empty());
        assert_eq!(parse_chart("[1][2][3]", 3).unwrap(), z);
        let e = PartialInjection::identity(3);
        assert_eq!(e.to_string(), "(1)(2)(3)");
        assert_eq!(parse_chart("", 0).unwrap(), PartialInjection::zero(0));
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(
            parse_chart("(1,2](3)", 3),
            Err(Error::Syntax { .. })
        ));
        assert!(matches!(
            parse_chart("(1,,2)(3)", 3),
            Err(Error::Syntax { .. })
        ));
        assert!(matches!(parse_chart("()", 0), Err(Error::Syntax { .. })));
        assert!(matches!(
            parse_chart("(1, 2)", 2),
            Err(Error::Syntax { .. })
        ));
        assert!(matches!(parse_chart("(1,2", 2), Err(Error::Syntax { .. })));
        assert!(matches!(parse_chart("x", 2), Err(Error::Syntax { .. })));
        assert_eq!(
            parse_chart("(1,2)", 3),
            Err(Error::MissingPoint { point: 3 })
        );
        assert_eq!(
            parse_chart("(1,2)[2]", 2),
            Err(Error::RepeatedPoint { point: 2 })
        );
        assert_eq!(
            parse_chart("(1,4)", 2),
            Err(Error::PointOutOfRange { point: 4, n: 2 })
        );
        assert_eq!(
            parse_chart("[0]", 1),
            Err(Error::PointOutOfRange { point: 0, n: 1 })
        );
    }
}
