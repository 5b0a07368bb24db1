//! Threshold graphs given by creation sequences.
//!
//! Vertices are numbered `1..=n`. For `i < j`, `{i, j}` is an edge exactly
//! when bit `i` of the creation sequence is set, so vertex `i` either
//! dominates or ignores every higher-numbered vertex.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::oracle::{DenseIntMatrix, DEFAULT_ORACLE_CAP};

/// Bits `b_1 … b_(n-1)` of a threshold graph on `n` vertices.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CreationSequence {
    bits: Vec<bool>,
}

impl CreationSequence {
    pub fn from_bools(bits: Vec<bool>) -> Self {
        CreationSequence { bits }
    }

    pub fn from_bits(bits: &[u8]) -> Result<Self> {
        bits.iter()
            .enumerate()
            .map(|(i, &b)| match b {
                0 => Ok(false),
                1 => Ok(true),
                value => Err(Error::NotABit {
                    position: i + 1,
                    value,
                }),
            })
            .collect::<Result<Vec<_>>>()
            .map(Self::from_bools)
    }

    /// Single vertex, no bits.
    pub fn singleton() -> Self {
        CreationSequence { bits: Vec::new() }
    }

    pub fn n(&self) -> usize {
        self.bits.len() + 1
    }

    pub fn bits(&self) -> &[bool] {
        &self.bits
    }

    /// Bit `b_i` for `1 <= i <= n-1`.
    pub fn bit(&self, i: usize) -> bool {
        self.bits[i - 1]
    }
}

impl FromStr for CreationSequence {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        text.chars()
            .enumerate()
            .map(|(i, ch)| match ch {
                '0' => Ok(false),
                '1' => Ok(true),
                found => Err(Error::Parse {
                    position: i + 1,
                    found,
                }),
            })
            .collect::<Result<Vec<_>>>()
            .map(Self::from_bools)
    }
}

/// Parses a creation sequence; the empty string is the single-vertex graph.
pub fn parse_sequence(text: &str) -> Result<CreationSequence> {
    text.parse()
}

impl fmt::Display for CreationSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &b in &self.bits {
            f.write_str(if b { "1" } else { "0" })?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ThresholdGraph {
    seq: CreationSequence,
}

impl ThresholdGraph {
    pub fn new(seq: CreationSequence) -> Self {
        ThresholdGraph { seq }
    }

    pub fn complete(n: usize) -> Self {
        Self::new(CreationSequence::from_bools(vec![true; n.saturating_sub(1)]))
    }

    pub fn empty(n: usize) -> Self {
        Self::new(CreationSequence::from_bools(vec![false; n.saturating_sub(1)]))
    }

    /// Vertex 1 joined to every other vertex, no other edges.
    pub fn star(n: usize) -> Self {
        let mut bits = vec![false; n.saturating_sub(1)];
        if let Some(first) = bits.first_mut() {
            *first = true;
        }
        Self::new(CreationSequence::from_bools(bits))
    }

    pub fn sequence(&self) -> &CreationSequence {
        &self.seq
    }

    pub fn n(&self) -> usize {
        self.seq.n()
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v == 0 || v > self.n() {
            return Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.n(),
            });
        }
        Ok(())
    }

    /// Whether `{i, j}` is an edge.
    pub fn has_edge(&self, i: usize, j: usize) -> Result<bool> {
        self.check_vertex(i)?;
        self.check_vertex(j)?;
        if i == j {
            return Err(Error::SelfPair(i));
        }
        Ok(self.seq.bit(i.min(j)))
    }

    pub fn edge_count(&self) -> u64 {
        let n = self.n() as u64;
        self.seq
            .bits()
            .iter()
            .zip(1u64..)
            .filter(|(&b, _)| b)
            .map(|(_, i)| n - i)
            .sum()
    }

    /// Degree of vertex `v`.
    pub fn degree(&self, v: usize) -> Result<usize> {
        self.check_vertex(v)?;
        let later = if v < self.n() && self.seq.bit(v) {
            self.n() - v
        } else {
            0
        };
        let earlier = self.seq.bits()[..v - 1].iter().filter(|&&b| b).count();
        Ok(later + earlier)
    }

    /// Vertex 1 is isolated iff `b_1 = 0` (or n = 1).
    pub fn is_connected(&self) -> bool {
        self.n() == 1 || self.seq.bit(1)
    }

    pub fn to_dense_adjacency(&self) -> Result<DenseIntMatrix> {
        self.to_dense_adjacency_capped(DEFAULT_ORACLE_CAP)
    }

    /// Explicit adjacency matrix, refused when `n > cap`.
    pub fn to_dense_adjacency_capped(&self, cap: usize) -> Result<DenseIntMatrix> {
        let n = self.n();
        if n > cap {
            return Err(Error::OracleCapExceeded { n, cap });
        }
        let bits = self.seq.bits();
        Ok(DenseIntMatrix::from_fn(n, |r, c| {
            if r == c {
                BigInt::from(0)
            } else {
                BigInt::from(u8::from(bits[r.min(c)]))
            }
        }))
    }
}

impl From<CreationSequence> for ThresholdGraph {
    fn from(seq: CreationSequence) -> Self {
        ThresholdGraph::new(seq)
    }
}

impl FromStr for ThresholdGraph {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        text.parse().map(ThresholdGraph::new)
    }
}
