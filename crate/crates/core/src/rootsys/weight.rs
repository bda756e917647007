use std::fmt;

use num_bigint::BigInt;
use serde::{Serialize, Serializer};
use thiserror::Error;

use super::HalfInt;
use crate::error::{Error, Result};

/// Rank of the so(k) part: `m = floor(k/2)`.
pub fn rank_of(k: u32) -> usize {
    (k / 2) as usize
}

/// A weight `(λ0 | λ1, …, λm)` of osp(k|2).
///
/// `coords[0]` is the δ-coordinate, `coords[i]` the εi-coordinate.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SuperWeight {
    k: u32,
    coords: Vec<HalfInt>,
}

impl SuperWeight {
    pub fn new(k: u32, coords: Vec<HalfInt>) -> Result<Self> {
        if k <= 2 {
            return Err(Error::InvalidRank(k));
        }
        let expected = rank_of(k) + 1;
        if coords.len() != expected {
            return Err(Error::Arity {
                k,
                expected,
                found: coords.len(),
            });
        }
        Ok(Self { k, coords })
    }

    /// Integer coordinates, mostly for tests and literals.
    pub fn from_ints(k: u32, coords: &[i64]) -> Result<Self> {
        Self::new(k, coords.iter().map(|&c| HalfInt::from_int(c)).collect())
    }

    /// Coordinates given as doubles, so `&[-3, 3, 1]` is `(-3/2|3/2,1/2)`.
    pub fn from_doubled(k: u32, doubled: &[i64]) -> Result<Self> {
        Self::new(
            k,
            doubled.iter().map(|&c| HalfInt::from_doubled(c)).collect(),
        )
    }

    pub fn zero(k: u32) -> Result<Self> {
        Self::new(k, vec![HalfInt::zero(); rank_of(k) + 1])
    }

    /// `δ`
    pub fn delta(k: u32) -> Result<Self> {
        let mut w = Self::zero(k)?;
        w.coords[0] = HalfInt::from_int(1);
        Ok(w)
    }

    /// `εi` for `1 <= i <= m`.
    pub fn epsilon(k: u32, i: usize) -> Result<Self> {
        let mut w = Self::zero(k)?;
        let m = w.m();
        if i == 0 || i > m {
            return Err(Error::Internal(format!(
                "epsilon index {i} outside 1..={m}"
            )));
        }
        w.coords[i] = HalfInt::from_int(1);
        Ok(w)
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn m(&self) -> usize {
        self.coords.len() - 1
    }

    pub fn coords(&self) -> &[HalfInt] {
        &self.coords
    }

    pub fn lambda0(&self) -> &HalfInt {
        &self.coords[0]
    }

    /// `(λ1, …, λm)`
    pub fn tail(&self) -> &[HalfInt] {
        &self.coords[1..]
    }

    pub(crate) fn with_coords(&self, coords: Vec<HalfInt>) -> Self {
        debug_assert_eq!(coords.len(), self.coords.len());
        Self { k: self.k, coords }
    }

    pub(crate) fn same_algebra(&self, other: &Self) -> Result<()> {
        if self.k == other.k {
            Ok(())
        } else {
            Err(Error::RankMismatch {
                left: self.k,
                right: other.k,
            })
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same_algebra(other)?;
        Ok(self.with_coords(
            self.coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a + b)
                .collect(),
        ))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.same_algebra(other)?;
        Ok(self.with_coords(
            self.coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a - b)
                .collect(),
        ))
    }

    pub fn scale(&self, factor: impl Into<BigInt>) -> Self {
        let factor = factor.into();
        self.with_coords(
            self.coords
                .iter()
                .map(|c| c.scale(factor.clone()))
                .collect(),
        )
    }

    pub fn neg(&self) -> Self {
        self.with_coords(self.coords.iter().map(|c| -c).collect())
    }

    /// Parses the literal syntax `l0|l1,...,lm` and checks the arity against `k`.
    pub fn parse(k: u32, literal: &str) -> std::result::Result<Self, WeightParseError> {
        let coords = parse_coords(literal)?;
        let expected = rank_of(k) + 1;
        if coords.len() != expected {
            return Err(WeightParseError {
                position: literal.len(),
                message: format!("k = {k} needs {expected} coordinates, got {}", coords.len()),
            });
        }
        Self::new(k, coords).map_err(|e| WeightParseError {
            position: 0,
            message: e.to_string(),
        })
    }
}

impl fmt::Display for SuperWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}|", self.coords[0])?;
        for (i, c) in self.tail().iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for SuperWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

impl Serialize for SuperWeight {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("malformed weight literal at position {position}: {message}")]
pub struct WeightParseError {
    /// Byte offset of the offending character.
    pub position: usize,
    pub message: String,
}

fn parse_error(position: usize, message: impl Into<String>) -> WeightParseError {
    WeightParseError {
        position,
        message: message.into(),
    }
}

/// Parses `l0|l1,...,lm` without arity checks.
///
/// Entries are integers without leading zeros or halves `p/2` with `p` odd, so
/// every value has exactly one spelling and printing inverts parsing.
pub fn parse_coords(literal: &str) -> std::result::Result<Vec<HalfInt>, WeightParseError> {
    let bar = literal
        .find('|')
        .ok_or_else(|| parse_error(literal.len(), "expected '|' after the δ-coordinate"))?;
    let mut coords = vec![parse_entry(&literal[..bar], 0)?];
    let rest = &literal[bar + 1..];
    let mut offset = bar + 1;
    for piece in rest.split(',') {
        coords.push(parse_entry(piece, offset)?);
        offset += piece.len() + 1;
    }
    Ok(coords)
}

fn parse_entry(text: &str, offset: usize) -> std::result::Result<HalfInt, WeightParseError> {
    let bytes = text.as_bytes();
    let mut pos = 0;
    if bytes.first() == Some(&b'-') {
        pos += 1;
    }
    let digits_start = pos;
    while pos < bytes.len() && bytes[pos].is_ascii_digit() {
        pos += 1;
    }
    let digits = &text[digits_start..pos];
    if digits.is_empty() {
        return Err(parse_error(offset + pos, "expected a digit"));
    }
    if digits.len() > 1 && digits.starts_with('0') {
        return Err(parse_error(offset + digits_start, "leading zero"));
    }
    let numerator: BigInt = text[..pos]
        .parse()
        .map_err(|_| parse_error(offset, "integer out of range"))?;
    match &text[pos..] {
        "" => Ok(HalfInt::from_int(numerator)),
        "/2" => {
            let value = HalfInt::from_doubled(numerator);
            if value.is_integer() {
                Err(parse_error(
                    offset + pos,
                    "p/2 needs odd p; write the integer instead",
                ))
            } else {
                Ok(value)
            }
        }
        _ => Err(parse_error(offset + pos, "unexpected character")),
    }
}
