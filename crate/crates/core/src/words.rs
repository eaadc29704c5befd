//! Alphabets and words for the two presentations of `A_k`.
//!
//! Artin words are written over `a`, `b`, `A`, `B` (uppercase is the inverse
//! letter). Dual words are whitespace-separated tokens `s<i>` and `S<i>` with
//! `1 <= i <= k`. The empty string is the identity in both grammars.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// The parameter `k >= 3` of the group `A_k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupParams {
    k: usize,
}

impl GroupParams {
    pub fn new(k: usize) -> Result<Self> {
        if k < 3 {
            return Err(Error::InvalidK(k));
        }
        Ok(GroupParams { k })
    }

    #[inline]
    pub fn k(self) -> usize {
        self.k
    }

    #[inline]
    pub fn is_odd(self) -> bool {
        self.k % 2 == 1
    }
}

/// Which generating set a word or ball is expressed in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Gens {
    Artin,
    Dual,
}

impl FromStr for Gens {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "artin" => Ok(Gens::Artin),
            "dual" => Ok(Gens::Dual),
            other => Err(format!("unknown generating set `{other}`")),
        }
    }
}

impl fmt::Display for Gens {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Gens::Artin => "artin",
            Gens::Dual => "dual",
        })
    }
}

/// One of the two Artin generators `a`, `b`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Base {
    A,
    B,
}

impl Base {
    #[inline]
    pub fn other(self) -> Base {
        match self {
            Base::A => Base::B,
            Base::B => Base::A,
        }
    }
}

/// Common behaviour of letters in either alphabet.
pub trait Letter: Copy + Eq + fmt::Debug + fmt::Display {
    /// Text inserted between consecutive letters when formatting a word.
    const SEPARATOR: &'static str;

    fn inverse(self) -> Self;
    fn is_positive(self) -> bool;
}

/// An Artin generator or its inverse.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ArtinLetter {
    pub base: Base,
    pub positive: bool,
}

impl ArtinLetter {
    pub const A: ArtinLetter = ArtinLetter::pos(Base::A);
    pub const B: ArtinLetter = ArtinLetter::pos(Base::B);
    pub const A_INV: ArtinLetter = ArtinLetter::neg(Base::A);
    pub const B_INV: ArtinLetter = ArtinLetter::neg(Base::B);

    /// All four generators in the fixed order `a, b, A, B`.
    pub const ALL: [ArtinLetter; 4] = [Self::A, Self::B, Self::A_INV, Self::B_INV];

    pub const fn pos(base: Base) -> Self {
        ArtinLetter { base, positive: true }
    }

    pub const fn neg(base: Base) -> Self {
        ArtinLetter { base, positive: false }
    }

    fn from_char(c: char) -> Option<Self> {
        match c {
            'a' => Some(Self::A),
            'b' => Some(Self::B),
            'A' => Some(Self::A_INV),
            'B' => Some(Self::B_INV),
            _ => None,
        }
    }
}

impl Letter for ArtinLetter {
    const SEPARATOR: &'static str = "";

    fn inverse(self) -> Self {
        ArtinLetter { base: self.base, positive: !self.positive }
    }

    fn is_positive(self) -> bool {
        self.positive
    }
}

impl fmt::Display for ArtinLetter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match (self.base, self.positive) {
            (Base::A, true) => 'a',
            (Base::B, true) => 'b',
            (Base::A, false) => 'A',
            (Base::B, false) => 'B',
        };
        write!(f, "{c}")
    }
}

/// A dual generator `σ_i` or its inverse, `1 <= i <= k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DualLetter {
    pub index: usize,
    pub positive: bool,
}

impl DualLetter {
    pub fn new(index: usize, positive: bool, params: GroupParams) -> Result<Self> {
        if index == 0 || index > params.k() {
            return Err(Error::IndexOutOfRange { index, k: params.k() });
        }
        Ok(DualLetter { index, positive })
    }

    pub const fn pos(index: usize) -> Self {
        DualLetter { index, positive: true }
    }

    pub const fn neg(index: usize) -> Self {
        DualLetter { index, positive: false }
    }

    /// All `2k` generators: `σ_1..σ_k` followed by their inverses.
    pub fn all(params: GroupParams) -> Vec<DualLetter> {
        let k = params.k();
        (1..=k).map(Self::pos).chain((1..=k).map(Self::neg)).collect()
    }
}

impl Letter for DualLetter {
    const SEPARATOR: &'static str = " ";

    fn inverse(self) -> Self {
        DualLetter { index: self.index, positive: !self.positive }
    }

    fn is_positive(self) -> bool {
        self.positive
    }
}

impl fmt::Display for DualLetter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = if self.positive { 's' } else { 'S' };
        write!(f, "{s}{}", self.index)
    }
}

/// A word over one of the two alphabets.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Word<L> {
    letters: Vec<L>,
}

pub type ArtinWord = Word<ArtinLetter>;
pub type DualWord = Word<DualLetter>;

impl<L: Letter> Word<L> {
    pub fn new() -> Self {
        Word { letters: Vec::new() }
    }

    pub fn from_letters(letters: Vec<L>) -> Self {
        Word { letters }
    }

    pub fn letters(&self) -> &[L] {
        &self.letters
    }

    pub fn into_letters(self) -> Vec<L> {
        self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn push(&mut self, letter: L) {
        self.letters.push(letter);
    }

    pub fn pop(&mut self) -> Option<L> {
        self.letters.pop()
    }

    pub fn extend_from(&mut self, other: &Word<L>) {
        self.letters.extend_from_slice(&other.letters);
    }

    /// Concatenation `self · other`.
    pub fn concat(&self, other: &Word<L>) -> Word<L> {
        let mut letters = Vec::with_capacity(self.len() + other.len());
        letters.extend_from_slice(&self.letters);
        letters.extend_from_slice(&other.letters);
        Word { letters }
    }

    /// Reverses the word and inverts every letter.
    pub fn inverse(&self) -> Word<L> {
        Word { letters: self.letters.iter().rev().map(|l| l.inverse()).collect() }
    }

    /// Cancels adjacent inverse pairs with a single stack scan.
    pub fn free_reduce(&self) -> Word<L> {
        let mut out: Vec<L> = Vec::with_capacity(self.len());
        for &l in &self.letters {
            match out.last() {
                Some(&top) if top == l.inverse() => {
                    out.pop();
                }
                _ => out.push(l),
            }
        }
        Word { letters: out }
    }

    pub fn is_freely_reduced(&self) -> bool {
        self.letters.windows(2).all(|w| w[0] != w[1].inverse())
    }

    pub fn is_positive(&self) -> bool {
        self.letters.iter().all(|l| l.is_positive())
    }
}

impl<L: Letter> fmt::Display for Word<L> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, l) in self.letters.iter().enumerate() {
            if i > 0 {
                f.write_str(L::SEPARATOR)?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

impl<L> FromIterator<L> for Word<L> {
    fn from_iter<I: IntoIterator<Item = L>>(iter: I) -> Self {
        Word { letters: iter.into_iter().collect() }
    }
}

impl ArtinWord {
    /// Parses a string over `{a, b, A, B}`.
    pub fn parse(text: &str) -> Result<Self> {
        text.char_indices()
            .map(|(pos, c)| {
                ArtinLetter::from_char(c).ok_or_else(|| Error::Syntax {
                    pos,
                    msg: format!("unexpected character `{c}`, expected one of a, b, A, B"),
                })
            })
            .collect()
    }
}

impl DualWord {
    /// Parses whitespace-separated `s<i>` / `S<i>` tokens.
    pub fn parse(text: &str, params: GroupParams) -> Result<Self> {
        let mut letters = Vec::new();
        let mut rest = text;
        let mut offset = 0;
        loop {
            let trimmed = rest.trim_start();
            offset += rest.len() - trimmed.len();
            if trimmed.is_empty() {
                break;
            }
            let end = trimmed.find(char::is_whitespace).unwrap_or(trimmed.len());
            let token = &trimmed[..end];
            letters.push(parse_dual_token(token, offset, params)?);
            offset += end;
            rest = &trimmed[end..];
        }
        Ok(Word { letters })
    }
}

fn parse_dual_token(token: &str, pos: usize, params: GroupParams) -> Result<DualLetter> {
    let positive = match token.as_bytes()[0] {
        b's' => true,
        b'S' => false,
        _ => {
            return Err(Error::Syntax {
                pos,
                msg: format!("token `{token}` must start with `s` or `S`"),
            })
        }
    };
    let digits = &token[1..];
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(Error::Syntax {
            pos: pos + 1,
            msg: format!("token `{token}` must carry a decimal index"),
        });
    }
    let index: usize = digits.parse().map_err(|_| Error::Syntax {
        pos: pos + 1,
        msg: format!("index in `{token}` is too large"),
    })?;
    DualLetter::new(index, positive, params)
}

/// A word in either alphabet, as produced by [`parse_word`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AnyWord {
    Artin(ArtinWord),
    Dual(DualWord),
}

impl fmt::Display for AnyWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AnyWord::Artin(w) => w.fmt(f),
            AnyWord::Dual(w) => w.fmt(f),
        }
    }
}

pub fn parse_word(text: &str, gens: Gens, params: GroupParams) -> Result<AnyWord> {
    match gens {
        Gens::Artin => ArtinWord::parse(text).map(AnyWord::Artin),
        Gens::Dual => DualWord::parse(text, params).map(AnyWord::Dual),
    }
}

/// The alternating word `s t s t ...` with `n` letters.
pub fn prodd(s: Base, t: Base, n: usize) -> ArtinWord {
    (0..n)
        .map(|i| ArtinLetter::pos(if i % 2 == 0 { s } else { t }))
        .collect()
}

/// The alternating word `s⁻¹ t⁻¹ s⁻¹ ...` with `n` letters.
pub fn prodd_inv(s: Base, t: Base, n: usize) -> ArtinWord {
    (0..n)
        .map(|i| ArtinLetter::neg(if i % 2 == 0 { s } else { t }))
        .collect()
}
