//! Left Garside normal forms for the Artin generators, the `π` vector, the
//! word-length formula and the geodesic criterion.
//!
//! An element is stored as `Δ^r f_1 ⋯ f_n` where every `f_i` is a positive
//! alternating word of length `1..k-1` and the last letter of `f_i` equals
//! the first letter of `f_{i+1}`. Right multiplication by a generator touches
//! only the last factor, except when a `Δ` is created or borrowed; then the
//! remaining factors are conjugated by `Δ`.

use std::fmt;

use crate::error::{Error, Result};
use crate::words::{prodd, ArtinLetter, ArtinWord, Base, GroupParams, Letter};

/// A positive alternating word `prodd(start, ·; len)` with `1 <= len <= k-1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalFactor {
    pub start: Base,
    pub len: usize,
}

impl CanonicalFactor {
    pub fn new(start: Base, len: usize, params: GroupParams) -> Result<Self> {
        if len == 0 || len >= params.k() {
            return Err(Error::InvalidFactor(format!(
                "length {len} outside 1..={}",
                params.k() - 1
            )));
        }
        Ok(CanonicalFactor { start, len })
    }

    #[inline]
    pub fn first(self) -> Base {
        self.start
    }

    #[inline]
    pub fn last(self) -> Base {
        if self.len % 2 == 1 {
            self.start
        } else {
            self.start.other()
        }
    }

    pub fn to_word(self) -> ArtinWord {
        prodd(self.start, self.start.other(), self.len)
    }
}

impl fmt::Display for CanonicalFactor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.to_word().fmt(f)
    }
}

/// Conjugation by `Δ`. Swaps `a` and `b` when `k` is odd, identity otherwise.
#[inline]
pub fn tau(f: CanonicalFactor, params: GroupParams) -> CanonicalFactor {
    if params.is_odd() {
        CanonicalFactor { start: f.start.other(), len: f.len }
    } else {
        f
    }
}

/// `τ^times` applied letterwise to an arbitrary word.
pub fn tau_word(w: &ArtinWord, times: u64, params: GroupParams) -> ArtinWord {
    if params.is_odd() && times % 2 == 1 {
        w.letters()
            .iter()
            .map(|l| ArtinLetter { base: l.base.other(), positive: l.positive })
            .collect()
    } else {
        w.clone()
    }
}

/// `Δ^c` as a word: `c` copies of `prodd(a,b;k)`, or of its inverse for `c < 0`.
pub fn delta_power_word(c: i64, params: GroupParams) -> ArtinWord {
    let block = if c >= 0 {
        prodd(Base::A, Base::B, params.k())
    } else {
        prodd(Base::A, Base::B, params.k()).inverse()
    };
    let mut out = ArtinWord::new();
    for _ in 0..c.unsigned_abs() {
        out.extend_from(&block);
    }
    out
}

/// Which of the four right-multiplication transitions happened.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Transition {
    /// (i) the last factor grew by one; `completed_delta` when it became `Δ`.
    Lengthen { completed_delta: bool },
    /// (ii) a new factor of length one was appended.
    Append,
    /// (iii) the last factor shrank by one (and was dropped if it emptied).
    Shorten,
    /// (iv) a `Δ` was borrowed: `r -> r-1` and a factor of length `k-1` appended.
    BorrowDelta,
}

/// Left normal form `Δ^r f_1 ⋯ f_n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ArtinNormalForm {
    params: GroupParams,
    delta: i64,
    factors: Vec<CanonicalFactor>,
}

impl ArtinNormalForm {
    pub fn identity(params: GroupParams) -> Self {
        ArtinNormalForm { params, delta: 0, factors: Vec::new() }
    }

    /// Builds a normal form from its parts, checking factor lengths and the
    /// junction condition.
    pub fn from_parts(params: GroupParams, delta: i64, factors: Vec<CanonicalFactor>) -> Result<Self> {
        for f in &factors {
            CanonicalFactor::new(f.start, f.len, params)?;
        }
        if let Some(i) = factors.windows(2).position(|p| p[0].last() != p[1].first()) {
            return Err(Error::InvalidNormalForm(format!(
                "factors {} and {} violate the junction condition",
                i,
                i + 1
            )));
        }
        Ok(ArtinNormalForm { params, delta, factors })
    }

    pub fn params(&self) -> GroupParams {
        self.params
    }

    /// The exponent `r` of `Δ`.
    pub fn delta_exponent(&self) -> i64 {
        self.delta
    }

    pub fn factors(&self) -> &[CanonicalFactor] {
        &self.factors
    }

    pub fn is_identity(&self) -> bool {
        self.delta == 0 && self.factors.is_empty()
    }

    /// Folds [`ArtinNormalForm::right_multiply_mut`] over the letters of `w`.
    pub fn of_word(w: &ArtinWord, params: GroupParams) -> Self {
        let mut nf = Self::identity(params);
        for &l in w.letters() {
            nf.right_multiply_mut(l);
        }
        nf
    }

    pub fn right_multiply(&self, g: ArtinLetter) -> Self {
        let mut out = self.clone();
        out.right_multiply_mut(g);
        out
    }

    fn apply_tau_all(&mut self) {
        if self.params.is_odd() {
            for f in &mut self.factors {
                *f = tau(*f, self.params);
            }
        }
    }

    /// Multiplies on the right by one generator, in place.
    pub fn right_multiply_mut(&mut self, g: ArtinLetter) -> Transition {
        let k = self.params.k();
        if g.positive {
            match self.factors.last_mut() {
                Some(last) if last.last() != g.base => {
                    last.len += 1;
                    if last.len == k {
                        // w Δ = Δ τ(w)
                        self.factors.pop();
                        self.delta += 1;
                        self.apply_tau_all();
                        Transition::Lengthen { completed_delta: true }
                    } else {
                        Transition::Lengthen { completed_delta: false }
                    }
                }
                _ => {
                    self.factors.push(CanonicalFactor { start: g.base, len: 1 });
                    Transition::Append
                }
            }
        } else {
            match self.factors.last_mut() {
                Some(last) if last.last() == g.base => {
                    last.len -= 1;
                    if last.len == 0 {
                        self.factors.pop();
                    }
                    Transition::Shorten
                }
                _ => {
                    // g⁻¹ = Δ⁻¹ (Δ g⁻¹); Δ g⁻¹ is the alternating word of length
                    // k-1 whose continuation by g would be Δ.
                    self.delta -= 1;
                    self.apply_tau_all();
                    let start = if k % 2 == 1 { g.base } else { g.base.other() };
                    self.factors.push(CanonicalFactor { start, len: k - 1 });
                    Transition::BorrowDelta
                }
            }
        }
    }

    /// Expands to `Δ^r` followed by the factors.
    pub fn to_word(&self) -> ArtinWord {
        let mut w = delta_power_word(self.delta, self.params);
        for f in &self.factors {
            w.extend_from(&f.to_word());
        }
        w
    }

    /// `m_i`: number of factors of length `i`, indexed `0..k` (entry 0 unused).
    pub fn length_counts(&self) -> Vec<u64> {
        let mut m = vec![0u64; self.params.k()];
        for f in &self.factors {
            m[f.len] += 1;
        }
        m
    }

    /// `π = (r, r + m_{k-1}, r + m_{k-1} + m_{k-2}, …, r + m_{k-1} + ⋯ + m_1)`.
    pub fn pi(&self) -> Vec<i64> {
        let k = self.params.k();
        let m = self.length_counts();
        let mut p = Vec::with_capacity(k);
        let mut acc = self.delta;
        p.push(acc);
        for i in 1..k {
            acc += m[k - i] as i64;
            p.push(acc);
        }
        p
    }

    /// Word length with respect to `{a, b, a⁻¹, b⁻¹}`: `Σ |π_i|`.
    pub fn distance(&self) -> u64 {
        self.pi().iter().map(|p| p.unsigned_abs()).sum()
    }

    /// A geodesic word for this element.
    ///
    /// For `r < 0` every `Δ⁻¹` is moved right and absorbed by one of the
    /// longest factors (leftmost first on ties); a factor of length `i`
    /// becomes a negative word of length `k - i`. Any `Δ⁻¹` left over is
    /// written out as a negative block of length `k` at the front.
    pub fn geodesic_representative(&self) -> ArtinWord {
        if self.delta >= 0 {
            return self.to_word();
        }
        let params = self.params;
        let k = params.k();
        let owed = self.delta.unsigned_abs() as usize;
        let n = self.factors.len();
        let absorbed = owed.min(n);

        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by(|&i, &j| self.factors[j].len.cmp(&self.factors[i].len).then(i.cmp(&j)));
        let mut chosen = vec![false; n];
        for &i in order.iter().take(absorbed) {
            chosen[i] = true;
        }

        let mut out = delta_power_word(-((owed - absorbed) as i64), params);
        // Number of Δ⁻¹ still travelling when factor i is reached.
        let mut travelling = absorbed as u64;
        for (i, f) in self.factors.iter().enumerate() {
            if chosen[i] {
                // Δ = f·g, so Δ⁻¹ f = g⁻¹.
                let next = f.last().other();
                let g = prodd(next, next.other(), k - f.len);
                travelling -= 1;
                out.extend_from(&tau_word(&g.inverse(), travelling, params));
            } else {
                out.extend_from(&tau_word(&f.to_word(), travelling, params));
            }
        }
        out
    }
}

impl fmt::Display for ArtinNormalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Δ^{}", self.delta)?;
        for x in &self.factors {
            write!(f, " {x}")?;
        }
        Ok(())
    }
}

pub fn normal_form(w: &ArtinWord, params: GroupParams) -> ArtinNormalForm {
    ArtinNormalForm::of_word(w, params)
}

pub fn artin_distance(w: &ArtinWord, params: GroupParams) -> u64 {
    normal_form(w, params).distance()
}

/// `d(y, x) = d(e, y⁻¹ x)`.
pub fn distance_between(y: &ArtinWord, x: &ArtinWord, params: GroupParams) -> u64 {
    artin_distance(&y.inverse().concat(x), params)
}

// Longest contiguous alternating run of letters with the given sign, capped at k.
fn longest_alternating_run(u: &ArtinWord, positive: bool, k: usize) -> usize {
    let mut best = 0;
    let mut run = 0;
    let mut prev: Option<Base> = None;
    for l in u.letters() {
        if l.is_positive() != positive {
            run = 0;
            prev = None;
            continue;
        }
        run = match prev {
            Some(b) if b != l.base => run + 1,
            _ => 1,
        };
        prev = Some(l.base);
        best = best.max(run);
    }
    best.min(k)
}

/// Length of the longest element of `M⁺ ∪ {Δ}` spelled by a contiguous
/// subword of `u`.
pub fn poss(u: &ArtinWord, params: GroupParams) -> usize {
    longest_alternating_run(u, true, params.k())
}

/// Length of the longest element of `M⁻ ∪ {Δ⁻¹}` spelled by a contiguous
/// subword of `u`.
pub fn negg(u: &ArtinWord, params: GroupParams) -> usize {
    longest_alternating_run(u, false, params.k())
}

/// A word is geodesic iff it is freely reduced and `poss + negg <= k`.
pub fn is_geodesic_artin(u: &ArtinWord, params: GroupParams) -> bool {
    u.is_freely_reduced() && poss(u, params) + negg(u, params) <= params.k()
}
