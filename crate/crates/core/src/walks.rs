//! Rank-one alcove walks.
//!
//! Alcoves are the unit intervals `(a, a+1)` of the real line. Wall `i` is
//! labelled `s1` when `i` is even and `s0` when `i` is odd, so every alcove
//! has exactly one wall of each label. The group element `2nX s1^b` sits in
//! the alcove whose left endpoint is `2n - b`.
//!
//! A walk starts in `(0, 1)` and, for each letter of its word, either crosses
//! the wall of that label or folds back from it. The geometric traversal is
//! the ground truth; the h-word encoding (final arrow direction per step) is
//! derived from it.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::{Family, Specialization};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WalkError {
    #[error("malformed walk: {0}")]
    MalformedWalk(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Reflection {
    S0,
    S1,
}

impl Reflection {
    /// Label of wall `i`.
    pub fn of_wall(i: i64) -> Reflection {
        if i.rem_euclid(2) == 0 {
            Reflection::S1
        } else {
            Reflection::S0
        }
    }
}

/// The group element `2nX s1^b`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct AlcoveElement {
    pub n: i64,
    pub b: u8,
}

impl AlcoveElement {
    pub const IDENTITY: AlcoveElement = AlcoveElement { n: 0, b: 0 };

    pub fn from_left_endpoint(a: i64) -> AlcoveElement {
        if a.rem_euclid(2) == 0 {
            AlcoveElement { n: a / 2, b: 0 }
        } else {
            AlcoveElement { n: (a + 1) / 2, b: 1 }
        }
    }

    pub fn left_endpoint(self) -> i64 {
        2 * self.n - self.b as i64
    }

    /// `(left, right)` endpoints.
    pub fn endpoints(self) -> (i64, i64) {
        let a = self.left_endpoint();
        (a, a + 1)
    }

    pub fn wt(self) -> i64 {
        self.n
    }

    pub fn d(self) -> u8 {
        self.b
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WalkWord {
    letters: Vec<Reflection>,
}

impl WalkWord {
    /// `(s1, s0, ..., s1, s0)` of length `2|n|` for `n <= 0`, and
    /// `(s0, s1, ..., s0)` of length `2n - 1` for `n > 0`.
    pub fn for_target(n: i64) -> WalkWord {
        let (first, len) = if n > 0 { (Reflection::S0, 2 * n - 1) } else { (Reflection::S1, -2 * n) };
        let letters = (0..len)
            .map(|i| match (first, i % 2) {
                (Reflection::S1, 0) | (Reflection::S0, 1) => Reflection::S1,
                _ => Reflection::S0,
            })
            .collect();
        WalkWord { letters }
    }

    pub fn from_letters(letters: Vec<Reflection>) -> Result<WalkWord, WalkError> {
        if letters.windows(2).any(|w| w[0] == w[1]) {
            return Err(WalkError::MalformedWalk("repeated adjacent letter".into()));
        }
        Ok(WalkWord { letters })
    }

    pub fn letters(&self) -> &[Reflection] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// `+1` for words of positive targets (starting with `s0`), `-1` otherwise.
    pub fn target_sign(&self) -> i64 {
        match self.letters.first() {
            Some(Reflection::S0) => 1,
            _ => -1,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AlcoveWalk {
    pub word: WalkWord,
    /// `true` = crossing, `false` = folding.
    pub mask: Vec<bool>,
}

impl AlcoveWalk {
    pub fn new(word: WalkWord, mask: Vec<bool>) -> Result<AlcoveWalk, WalkError> {
        if word.len() != mask.len() {
            return Err(WalkError::MalformedWalk(format!(
                "mask length {} differs from word length {}",
                mask.len(),
                word.len()
            )));
        }
        Ok(AlcoveWalk { word, mask })
    }

    /// Builds a walk from a `0`/`1` mask string (`1` = crossing).
    pub fn from_mask_str(n: i64, mask: &str) -> Result<AlcoveWalk, WalkError> {
        let bits = mask
            .chars()
            .map(|c| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                other => Err(WalkError::MalformedWalk(format!("bad mask character {other:?}"))),
            })
            .collect::<Result<Vec<_>, _>>()?;
        AlcoveWalk::new(WalkWord::for_target(n), bits)
    }

    pub fn mask_string(&self) -> String {
        self.mask.iter().map(|b| if *b { '1' } else { '0' }).collect()
    }

    pub fn len(&self) -> usize {
        self.mask.len()
    }

    pub fn is_empty(&self) -> bool {
        self.mask.is_empty()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StepKind {
    Crossing,
    Folding,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Step {
    pub letter: Reflection,
    pub kind: StepKind,
    /// Direction of the arrow that ends the step.
    pub rightward: bool,
}

/// Result of a traversal. Step indices are 1-based.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WalkStats {
    pub final_alcove: AlcoveElement,
    pub steps: Vec<Step>,
    /// All foldings.
    pub folded: Vec<usize>,
    pub j0_pos: Vec<usize>,
    pub j0_neg: Vec<usize>,
    pub j_pos: Vec<usize>,
    pub j_neg: Vec<usize>,
}

impl WalkStats {
    pub fn wt(&self) -> i64 {
        self.final_alcove.wt()
    }

    pub fn d(&self) -> u8 {
        self.final_alcove.d()
    }

    /// Positive foldings of either label.
    pub fn positive_folds(&self) -> impl Iterator<Item = usize> + '_ {
        self.j0_pos.iter().chain(&self.j_pos).copied()
    }

    /// Negative foldings of either label.
    pub fn negative_folds(&self) -> impl Iterator<Item = usize> + '_ {
        self.j0_neg.iter().chain(&self.j_neg).copied()
    }
}

pub fn traverse(walk: &AlcoveWalk) -> Result<WalkStats, WalkError> {
    if walk.word.len() != walk.mask.len() {
        return Err(WalkError::MalformedWalk("mask/word length mismatch".into()));
    }
    let mut left = 0i64;
    let mut stats = WalkStats {
        final_alcove: AlcoveElement::IDENTITY,
        steps: Vec::with_capacity(walk.len()),
        folded: Vec::new(),
        j0_pos: Vec::new(),
        j0_neg: Vec::new(),
        j_pos: Vec::new(),
        j_neg: Vec::new(),
    };
    for (i, (&letter, &cross)) in walk.word.letters().iter().zip(&walk.mask).enumerate() {
        let step_no = i + 1;
        let wall_on_left = Reflection::of_wall(left) == letter;
        let wall = if wall_on_left { left } else { left + 1 };
        if Reflection::of_wall(wall) != letter {
            return Err(WalkError::MalformedWalk(format!("step {step_no}: no {letter:?} wall")));
        }
        if cross {
            left += if wall_on_left { -1 } else { 1 };
            stats.steps.push(Step { letter, kind: StepKind::Crossing, rightward: !wall_on_left });
        } else {
            // A folding bounces off the wall: positive when the wall is on the left.
            let positive = wall_on_left;
            stats.steps.push(Step { letter, kind: StepKind::Folding, rightward: positive });
            stats.folded.push(step_no);
            let bucket = match (letter, positive) {
                (Reflection::S0, true) => &mut stats.j0_pos,
                (Reflection::S0, false) => &mut stats.j0_neg,
                (Reflection::S1, true) => &mut stats.j_pos,
                (Reflection::S1, false) => &mut stats.j_neg,
            };
            bucket.push(step_no);
        }
    }
    stats.final_alcove = AlcoveElement::from_left_endpoint(left);
    Ok(stats)
}

/// Direction word `(h_0, ..., h_l)`: `1` for a rightward arrow, `2` for
/// leftward; `h_0` is `1` for positive targets and `2` for negative ones.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HWord {
    pub h: Vec<u8>,
}

impl HWord {
    pub fn new(h: Vec<u8>) -> HWord {
        HWord { h }
    }

    pub fn l(&self) -> usize {
        self.h.len().saturating_sub(1)
    }

    pub fn to_string_compact(&self) -> String {
        self.h.iter().map(|d| char::from(b'0' + d)).collect()
    }

    /// Step `i` (1-based) is a folding iff the direction changes there.
    pub fn is_folding(&self, i: usize) -> bool {
        self.h[i] != self.h[i - 1]
    }
}

pub fn to_hword(walk: &AlcoveWalk, target_sign: i64) -> Result<HWord, WalkError> {
    let stats = traverse(walk)?;
    Ok(hword_from_stats(&stats, target_sign))
}

pub fn hword_from_stats(stats: &WalkStats, target_sign: i64) -> HWord {
    let mut h = Vec::with_capacity(stats.steps.len() + 1);
    h.push(if target_sign > 0 { 1 } else { 2 });
    h.extend(stats.steps.iter().map(|s| if s.rightward { 1 } else { 2 }));
    HWord { h }
}

/// `floor((#{i>0: h_i=1} - #{i>0: h_i=2} + 1) / 2)`
pub fn x_weight(h: &HWord) -> i64 {
    let ones = h.h.iter().skip(1).filter(|&&d| d == 1).count() as i64;
    let twos = h.h.iter().skip(1).filter(|&&d| d == 2).count() as i64;
    (ones - twos + 1).div_euclid(2)
}

/// `sum j` over `j` with `h_{l-j} = 1` and `h_{l-j+1} = 2`.
pub fn leg(h: &HWord) -> i64 {
    let l = h.l();
    (1..=l).filter(|&j| h.h[l - j] == 1 && h.h[l - j + 1] == 2).map(|j| j as i64).sum()
}

/// `sum j` over `j` with `h_{l-j} = 1` and `h_{l-j-1} = 2`, read literally
/// (so `j = 0` can match and contribute nothing).
pub fn legprime(h: &HWord) -> i64 {
    legprime_matches(h).map(|j| j as i64).sum()
}

/// Same pattern as [`legprime`], but each match at `j` contributes `j + 1`,
/// i.e. the root degree of the folded step `l - j`.
pub fn legprime_shifted(h: &HWord) -> i64 {
    legprime_matches(h).map(|j| j as i64 + 1).sum()
}

fn legprime_matches(h: &HWord) -> impl Iterator<Item = usize> + '_ {
    let l = h.l();
    (0..l).filter(move |&j| h.h[l - j] == 1 && h.h[l - j - 1] == 2)
}

/// Degree of the root attached to step `j` of a word of length `l`:
/// `l - j + 1`.
pub fn beta_degree(j: usize, l: usize) -> i64 {
    assert!(j >= 1 && j <= l, "step {j} out of range 1..={l}");
    (l - j + 1) as i64
}

/// All `2^l` walks for the target, masks in lexicographic order (`0 < 1`,
/// step 1 most significant).
pub fn enumerate_walks(n: i64) -> Vec<AlcoveWalk> {
    let word = WalkWord::for_target(n);
    let l = word.len();
    (0u64..1 << l)
        .map(|bits| {
            let mask = (0..l).map(|i| bits >> (l - 1 - i) & 1 == 1).collect();
            AlcoveWalk { word: word.clone(), mask }
        })
        .collect()
}

/// Whether a walk survives the specialization (no 0-foldings of the sign
/// that forces a positive power of `v` at the limit).
pub fn survives(stats: &WalkStats, family: Family, spec: Specialization) -> bool {
    use Family::*;
    use Specialization::*;
    match (family, spec) {
        (A2, T0) | (A2Dagger, TinfQinv) => stats.j0_pos.is_empty(),
        (A2, TinfQinv) | (A2Dagger, T0) => stats.j0_neg.is_empty(),
    }
}

pub fn qb_filter(walks: &[AlcoveWalk], family: Family, spec: Specialization) -> Vec<AlcoveWalk> {
    walks.iter().filter(|w| traverse(w).map(|s| survives(&s, family, spec)).unwrap_or(false)).cloned().collect()
}

/// JSON record for one walk.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WalkRecord {
    pub mask: String,
    pub wt: i64,
    pub d: u8,
    #[serde(rename = "J0+")]
    pub j0_pos: Vec<usize>,
    #[serde(rename = "J0-")]
    pub j0_neg: Vec<usize>,
    #[serde(rename = "J+")]
    pub j_pos: Vec<usize>,
    #[serde(rename = "J-")]
    pub j_neg: Vec<usize>,
    pub h: String,
    pub leg: i64,
}

impl WalkRecord {
    pub fn from_walk(walk: &AlcoveWalk) -> Result<WalkRecord, WalkError> {
        let stats = traverse(walk)?;
        let h = hword_from_stats(&stats, walk.word.target_sign());
        Ok(WalkRecord {
            mask: walk.mask_string(),
            wt: stats.wt(),
            d: stats.d(),
            j0_pos: stats.j0_pos,
            j0_neg: stats.j0_neg,
            j_pos: stats.j_pos,
            j_neg: stats.j_neg,
            leg: leg(&h),
            h: h.to_string_compact(),
        })
    }
}
