//! Words in the simple reflections, shuffles of two words, and the
//! successor (`k⁺`) combinatorics that index the quiver.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::cartan_graph::{CartanMatrix, Label};

/// A vertex index of the quiver: `-r..=-1` for the prefix, `1..=n` for the shuffle.
pub type Index = i32;

pub type Word = Vec<Label>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn value(self) -> i32 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }
}

/// How signs are attached to the letters of `u` and `v`.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum SignConvention {
    /// `u` letters positive, `v` letters negative.
    #[default]
    #[serde(rename = "example")]
    Example,
    /// `u` letters always negative, `v` letters always positive.
    #[serde(rename = "strict-bfz")]
    StrictBfz,
}

impl SignConvention {
    /// Signs `(u, v)`.
    pub fn signs(self) -> (Sign, Sign) {
        match self {
            SignConvention::Example => (Sign::Plus, Sign::Minus),
            SignConvention::StrictBfz => (Sign::Minus, Sign::Plus),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            SignConvention::Example => "example",
            SignConvention::StrictBfz => "strict-bfz",
        }
    }
}

impl std::str::FromStr for SignConvention {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "example" => Ok(SignConvention::Example),
            "strict-bfz" => Ok(SignConvention::StrictBfz),
            other => Err(format!("unknown sign convention `{other}`")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Source {
    U,
    V,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct ShuffleEntry {
    pub letter: Label,
    pub sign: Sign,
    pub source: Source,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WordError {
    #[error("letter {letter} of {word} is not a vertex label in 1..={rank}")]
    BadLetter {
        word: &'static str,
        letter: i64,
        rank: usize,
    },
    #[error("word {word} is not reduced")]
    NotReduced { word: &'static str },
    #[error("shuffle pattern has length {found}, expected {expected}")]
    PatternLength { expected: usize, found: usize },
    #[error("shuffle pattern has {found} ones, expected {expected} (the length of v)")]
    PatternCount { expected: usize, found: usize },
    #[error("shuffle pattern entries must be 0 or 1, found {0}")]
    PatternValue(i64),
}

impl WordError {
    pub fn code(&self) -> &'static str {
        match self {
            WordError::BadLetter { .. } => "word.bad_letter",
            WordError::NotReduced { .. } => "word.not_reduced",
            WordError::PatternLength { .. } => "pattern.length",
            WordError::PatternCount { .. } => "pattern.count",
            WordError::PatternValue(_) => "pattern.value",
        }
    }
}

/// The sequence `(-r, ..., -1, ±i_1, ..., ±i_n)` together with its sources.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ShuffledWord {
    rank: usize,
    u: Word,
    v: Word,
    entries: Vec<ShuffleEntry>,
}

impl ShuffledWord {
    /// Builds the shuffle without validating reducedness; signs given explicitly.
    ///
    /// `pattern[j] == 1` takes the next letter of `v`, `0` the next of `u`.
    pub fn with_signs(
        rank: usize,
        u: &[Label],
        v: &[Label],
        pattern: &[u8],
        u_sign: Sign,
        v_sign: Sign,
    ) -> Self {
        let (mut iu, mut iv) = (u.iter(), v.iter());
        let entries = pattern
            .iter()
            .map(|&p| {
                if p == 0 {
                    ShuffleEntry {
                        letter: *iu.next().expect("pattern matches u"),
                        sign: u_sign,
                        source: Source::U,
                    }
                } else {
                    ShuffleEntry {
                        letter: *iv.next().expect("pattern matches v"),
                        sign: v_sign,
                        source: Source::V,
                    }
                }
            })
            .collect();
        ShuffledWord {
            rank,
            u: u.to_vec(),
            v: v.to_vec(),
            entries,
        }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Length of the shuffle part, `ℓ(u) + ℓ(v)`.
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn u(&self) -> &[Label] {
        &self.u
    }

    pub fn v(&self) -> &[Label] {
        &self.v
    }

    pub fn entries(&self) -> &[ShuffleEntry] {
        &self.entries
    }

    pub fn pattern(&self) -> Vec<u8> {
        self.entries
            .iter()
            .map(|e| u8::from(e.source == Source::V))
            .collect()
    }

    /// All indices in increasing order: `-r..=-1` then `1..=n`.
    pub fn indices(&self) -> Vec<Index> {
        let r = self.rank as Index;
        (-r..=-1).chain(1..=self.len() as Index).collect()
    }

    pub fn contains(&self, k: Index) -> bool {
        (k < 0 && -k <= self.rank as Index) || (k > 0 && k as usize <= self.len())
    }

    /// `|i_k|`.
    pub fn letter(&self, k: Index) -> Label {
        if k < 0 {
            (-k) as Label
        } else {
            self.entries[k as usize - 1].letter
        }
    }

    /// `ε(i_k)`; prefix entries are negative.
    pub fn sign(&self, k: Index) -> Sign {
        if k < 0 {
            Sign::Minus
        } else {
            self.entries[k as usize - 1].sign
        }
    }

    /// The signed sequence `ĩ`.
    pub fn hat(&self) -> Vec<i64> {
        let r = self.rank as i64;
        (-r..=-1)
            .chain(
                self.entries
                    .iter()
                    .map(|e| i64::from(e.letter) * i64::from(e.sign.value())),
            )
            .collect()
    }

    /// Indices carrying each letter, bottom to top. Every letter has at least
    /// its prefix vertex.
    pub fn strings(&self) -> BTreeMap<Label, Vec<Index>> {
        let mut out: BTreeMap<Label, Vec<Index>> = BTreeMap::new();
        for k in self.indices() {
            out.entry(self.letter(k)).or_default().push(k);
        }
        out
    }

    /// Same word with every shuffle sign flipped.
    pub fn flipped(&self) -> Self {
        let mut w = self.clone();
        for e in &mut w.entries {
            e.sign = e.sign.flip();
        }
        w
    }

    /// `self` followed by `other`: shuffle entries concatenated, and likewise
    /// the source words.
    pub fn concat(&self, other: &ShuffledWord) -> ShuffledWord {
        assert_eq!(self.rank, other.rank);
        let mut w = self.clone();
        w.u.extend_from_slice(&other.u);
        w.v.extend_from_slice(&other.v);
        w.entries.extend_from_slice(&other.entries);
        w
    }

    /// The words `(u, e)` and `(e, v)` carrying the signs their letters have here.
    pub fn gluing_factors(&self) -> (ShuffledWord, ShuffledWord) {
        let sign_of = |src: Source, default: Sign| {
            self.entries
                .iter()
                .find(|e| e.source == src)
                .map_or(default, |e| e.sign)
        };
        let u_sign = sign_of(Source::U, Sign::Minus);
        let v_sign = sign_of(Source::V, Sign::Plus);
        let bottom = ShuffledWord::with_signs(
            self.rank,
            &self.u,
            &[],
            &vec![0; self.u.len()],
            u_sign,
            v_sign,
        );
        let top = ShuffledWord::with_signs(
            self.rank,
            &[],
            &self.v,
            &vec![1; self.v.len()],
            u_sign,
            v_sign,
        );
        (bottom, top)
    }
}

impl fmt::Display for ShuffledWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.hat().iter().map(|x| x.to_string()).collect();
        write!(f, "({})", parts.join(", "))
    }
}

fn check_letters(word: &'static str, w: &[Label], rank: usize) -> Result<(), WordError> {
    for &a in w {
        if a == 0 || a as usize > rank {
            return Err(WordError::BadLetter {
                word,
                letter: a as i64,
                rank,
            });
        }
    }
    Ok(())
}

/// Converts loosely typed letters (as read from JSON) into a word.
pub fn word_from_ints(word: &'static str, letters: &[i64], rank: usize) -> Result<Word, WordError> {
    letters
        .iter()
        .map(|&a| {
            if a >= 1 && a as usize <= rank {
                Ok(a as Label)
            } else {
                Err(WordError::BadLetter {
                    word,
                    letter: a,
                    rank,
                })
            }
        })
        .collect()
}

/// Shuffles `u` and `v` after checking both are reduced. `None` means all of
/// `u` followed by all of `v`.
pub fn shuffle(
    u: &[Label],
    v: &[Label],
    pattern: Option<&[u8]>,
    cartan: &CartanMatrix,
    convention: SignConvention,
) -> Result<ShuffledWord, WordError> {
    let rank = cartan.rank();
    check_letters("u", u, rank)?;
    check_letters("v", v, rank)?;
    if !is_reduced(u, cartan) {
        return Err(WordError::NotReduced { word: "u" });
    }
    if !is_reduced(v, cartan) {
        return Err(WordError::NotReduced { word: "v" });
    }
    let default: Vec<u8>;
    let pattern = match pattern {
        Some(p) => p,
        None => {
            default = std::iter::repeat_n(0, u.len())
                .chain(std::iter::repeat_n(1, v.len()))
                .collect();
            &default
        }
    };
    validate_pattern(pattern, u.len(), v.len())?;
    let (su, sv) = convention.signs();
    Ok(ShuffledWord::with_signs(rank, u, v, pattern, su, sv))
}

pub fn validate_pattern(pattern: &[u8], u_len: usize, v_len: usize) -> Result<(), WordError> {
    if let Some(&bad) = pattern.iter().find(|&&p| p > 1) {
        return Err(WordError::PatternValue(bad as i64));
    }
    if pattern.len() != u_len + v_len {
        return Err(WordError::PatternLength {
            expected: u_len + v_len,
            found: pattern.len(),
        });
    }
    let ones = pattern.iter().filter(|&&p| p == 1).count();
    if ones != v_len {
        return Err(WordError::PatternCount {
            expected: v_len,
            found: ones,
        });
    }
    Ok(())
}

/// `s_j(x) = x - <x, α_j^∨> α_j` on simple-root coordinates.
fn reflect(cartan: &CartanMatrix, j: Label, x: &mut [i64]) {
    let pairing: i64 = (1..=cartan.rank() as Label)
        .map(|i| x[i as usize - 1] * i64::from(cartan.get(i, j)))
        .sum();
    x[j as usize - 1] -= pairing;
}

/// The roots `β_k = s_{i_1} ... s_{i_{k-1}}(α_{i_k})` in simple-root coordinates.
pub fn root_sequence(w: &[Label], cartan: &CartanMatrix) -> Vec<Vec<i64>> {
    let rank = cartan.rank();
    (0..w.len())
        .map(|k| {
            let mut beta = vec![0i64; rank];
            beta[w[k] as usize - 1] = 1;
            for &j in w[..k].iter().rev() {
                reflect(cartan, j, &mut beta);
            }
            beta
        })
        .collect()
}

/// A word is reduced iff its roots `β_k` are all positive and pairwise distinct.
pub fn is_reduced(w: &[Label], cartan: &CartanMatrix) -> bool {
    let mut seen = BTreeSet::new();
    root_sequence(w, cartan)
        .into_iter()
        .all(|beta| beta.iter().all(|&c| c >= 0) && seen.insert(beta))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuccessorMap {
    n: usize,
    kplus: BTreeMap<Index, Index>,
    exchangeable: BTreeSet<Index>,
}

impl SuccessorMap {
    pub fn plus(&self, k: Index) -> Index {
        self.kplus[&k]
    }

    pub fn kplus(&self) -> &BTreeMap<Index, Index> {
        &self.kplus
    }

    pub fn exchangeable(&self) -> &BTreeSet<Index> {
        &self.exchangeable
    }

    pub fn is_exchangeable(&self, k: Index) -> bool {
        self.exchangeable.contains(&k)
    }

    /// The value `n + 1` used when a letter does not recur.
    pub fn end(&self) -> Index {
        self.n as Index + 1
    }
}

pub fn successor_map(w: &ShuffledWord) -> SuccessorMap {
    let n = w.len();
    let end = n as Index + 1;
    let mut kplus = BTreeMap::new();
    for positions in w.strings().values() {
        for (i, &k) in positions.iter().enumerate() {
            kplus.insert(k, positions.get(i + 1).copied().unwrap_or(end));
        }
    }
    let exchangeable = kplus
        .iter()
        .filter(|&(&k, &kp)| k >= 1 && kp <= n as Index)
        .map(|(&k, _)| k)
        .collect();
    SuccessorMap {
        n,
        kplus,
        exchangeable,
    }
}
