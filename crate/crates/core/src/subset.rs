//! Fixed-width label bitstrings.

use std::fmt;
use std::str::FromStr;

use rand::Rng;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

const WORD: usize = 64;

/// A subset of the labels `0..width`, stored as a packed bitstring.
///
/// Bit `i` corresponds to internal label `i` (label `i + 1` in files and on
/// the command line). The textual form is a 0/1 string whose first character
/// is label 1.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LabelSubset {
    width: usize,
    words: Vec<u64>,
}

impl LabelSubset {
    pub fn empty(width: usize) -> Self {
        LabelSubset {
            width,
            words: vec![0; width.div_ceil(WORD)],
        }
    }

    pub fn full(width: usize) -> Self {
        let mut s = Self::empty(width);
        for i in 0..width {
            s.insert(i);
        }
        s
    }

    /// Builds a subset from 0-based label indices.
    ///
    /// Panics if an index is `>= width`.
    pub fn from_indices<I: IntoIterator<Item = usize>>(width: usize, labels: I) -> Self {
        let mut s = Self::empty(width);
        for l in labels {
            s.insert(l);
        }
        s
    }

    /// Builds a subset from 1-based label ids, as they appear in files.
    pub fn from_label_ids(width: usize, ids: &[usize]) -> Result<Self> {
        let mut s = Self::empty(width);
        for &id in ids {
            if id == 0 || id > width {
                return Err(Error::ParamOutOfRange(format!(
                    "label {id} outside 1..={width}"
                )));
            }
            s.insert(id - 1);
        }
        Ok(s)
    }

    /// Uniform sample over all `2^width` bitstrings.
    pub fn random<R: Rng + ?Sized>(width: usize, rng: &mut R) -> Self {
        let mut s = Self::empty(width);
        for i in 0..width {
            if rng.gen::<bool>() {
                s.insert(i);
            }
        }
        s
    }

    pub fn width(&self) -> usize {
        self.width
    }

    /// Number of selected labels, `|X|`.
    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn contains(&self, label: usize) -> bool {
        debug_assert!(label < self.width);
        self.words[label / WORD] >> (label % WORD) & 1 == 1
    }

    pub fn insert(&mut self, label: usize) {
        assert!(
            label < self.width,
            "label {label} outside width {}",
            self.width
        );
        self.words[label / WORD] |= 1 << (label % WORD);
    }

    pub fn remove(&mut self, label: usize) {
        assert!(
            label < self.width,
            "label {label} outside width {}",
            self.width
        );
        self.words[label / WORD] &= !(1 << (label % WORD));
    }

    /// Overwrites `self` with `other` without reallocating.
    ///
    /// Panics if the widths differ.
    pub fn copy_from(&mut self, other: &LabelSubset) {
        assert_eq!(self.width, other.width, "width mismatch");
        self.words.copy_from_slice(&other.words);
    }

    pub fn toggle(&mut self, label: usize) {
        assert!(
            label < self.width,
            "label {label} outside width {}",
            self.width
        );
        self.words[label / WORD] ^= 1 << (label % WORD);
    }

    /// Selected labels in ascending order (0-based).
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &word)| {
            let mut w = word;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let bit = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(wi * WORD + bit)
            })
        })
    }

    /// Unselected labels in ascending order (0-based).
    pub fn complement_iter(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.width).filter(move |&l| !self.contains(l))
    }

    /// Selected labels as 1-based ids.
    pub fn label_ids(&self) -> Vec<usize> {
        self.iter().map(|l| l + 1).collect()
    }

    pub fn is_subset_of(&self, other: &LabelSubset) -> bool {
        self.width == other.width
            && self
                .words
                .iter()
                .zip(&other.words)
                .all(|(a, b)| a & !b == 0)
    }

    /// `|self - other|`: labels in `self` but not in `other`.
    pub fn difference_len(&self, other: &LabelSubset) -> usize {
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & !b).count_ones() as usize)
            .sum()
    }

    pub fn hamming_distance(&self, other: &LabelSubset) -> usize {
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a ^ b).count_ones() as usize)
            .sum()
    }

    /// The subset as a single machine word; only defined for `width <= 64`.
    pub fn as_mask(&self) -> Option<u64> {
        match self.words.len() {
            0 => Some(0),
            1 => Some(self.words[0]),
            _ => None,
        }
    }

    pub fn from_mask(width: usize, mask: u64) -> Self {
        assert!(width <= WORD, "mask subsets are limited to 64 labels");
        let mut s = Self::empty(width);
        if width > 0 {
            let keep = if width == WORD {
                u64::MAX
            } else {
                (1 << width) - 1
            };
            s.words[0] = mask & keep;
        }
        s
    }

    /// One byte (0 or 1) per label, label 1 first.
    pub fn to_bytes(&self) -> Vec<u8> {
        (0..self.width).map(|l| self.contains(l) as u8).collect()
    }

    pub fn from_bytes(bytes: &[u8]) -> Self {
        Self::from_indices(
            bytes.len(),
            bytes
                .iter()
                .enumerate()
                .filter(|(_, &b)| b != 0)
                .map(|(i, _)| i),
        )
    }
}

impl fmt::Display for LabelSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in 0..self.width {
            f.write_str(if self.contains(l) { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for LabelSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LabelSubset({self})")
    }
}

impl FromStr for LabelSubset {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let mut out = LabelSubset::empty(s.len());
        for (i, c) in s.chars().enumerate() {
            match c {
                '1' => out.insert(i),
                '0' => {}
                other => {
                    return Err(Error::ParamOutOfRange(format!(
                        "bitstring may only contain 0 and 1, found {other:?}"
                    )))
                }
            }
        }
        Ok(out)
    }
}

impl Serialize for LabelSubset {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for LabelSubset {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn text_form_starts_with_label_one() {
        let s = LabelSubset::from_label_ids(5, &[3, 5]).unwrap();
        assert_eq!(s.to_string(), "00101");
        assert_eq!(s.len(), 2);
        assert_eq!(s.label_ids(), vec![3, 5]);
    }

    #[test]
    fn rejects_bad_digits_and_ids() {
        assert!("0120".parse::<LabelSubset>().is_err());
        assert!(LabelSubset::from_label_ids(3, &[0]).is_err());
        assert!(LabelSubset::from_label_ids(3, &[4]).is_err());
    }

    #[test]
    fn wide_subsets_span_several_words() {
        let mut s = LabelSubset::empty(130);
        s.insert(0);
        s.insert(64);
        s.insert(129);
        assert_eq!(s.iter().collect::<Vec<_>>(), vec![0, 64, 129]);
        assert_eq!(s.as_mask(), None);
        assert_eq!(LabelSubset::full(130).len(), 130);
    }

    proptest! {
        #[test]
        fn textual_round_trip(bits in proptest::collection::vec(any::<bool>(), 0..150)) {
            let s = LabelSubset::from_indices(bits.len(), bits.iter().enumerate().filter(|(_, b)| **b).map(|(i, _)| i));
            let back: LabelSubset = s.to_string().parse().unwrap();
            prop_assert_eq!(&back, &s);
            prop_assert_eq!(s.iter().count(), s.len());
            prop_assert_eq!(LabelSubset::from_bytes(&s.to_bytes()), s);
        }

        #[test]
        fn difference_counts_agree_with_hamming(a in any::<u64>(), b in any::<u64>()) {
            let x = LabelSubset::from_mask(64, a);
            let y = LabelSubset::from_mask(64, b);
            prop_assert_eq!(x.difference_len(&y) + y.difference_len(&x), x.hamming_distance(&y));
        }
    }
}
