//! Left normal forms for the dual generators `σ_1, …, σ_k`.
//!
//! `δ = σ_1σ_2 = σ_2σ_3 = ⋯ = σ_kσ_1`, so an element is `δ^r σ_{i_1} ⋯ σ_{i_s}`
//! with no adjacent pair `(i, i+1 mod k)`. Moving `δ` leftwards across a
//! letter shifts its index by `+2` (`σ_i δ = δ σ_{i+2}`); moving `δ⁻¹` shifts
//! by `-2`.

use std::fmt;

use crate::error::{Error, Result};
use crate::words::{prodd, prodd_inv, ArtinLetter, ArtinWord, Base, DualLetter, DualWord, GroupParams, Letter};

#[inline]
pub(crate) fn succ(i: usize, k: usize) -> usize {
    i % k + 1
}

#[inline]
pub(crate) fn shift(i: usize, by: i64, k: usize) -> usize {
    ((i as i64 - 1 + by).rem_euclid(k as i64)) as usize + 1
}

/// Which of the four right-multiplication cases happened.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DualTransition {
    /// (a) the last factor and the new letter formed `δ`.
    FormDelta,
    /// (b) a positive letter was appended.
    Append,
    /// (c) the last factor was cancelled.
    Cancel,
    /// (d) a `δ` was borrowed and a positive letter appended.
    BorrowDelta,
}

/// Left normal form `δ^r σ_{i_1} ⋯ σ_{i_s}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DualNormalForm {
    params: GroupParams,
    delta: i64,
    factors: Vec<usize>,
}

impl DualNormalForm {
    pub fn identity(params: GroupParams) -> Self {
        DualNormalForm { params, delta: 0, factors: Vec::new() }
    }

    pub fn from_parts(params: GroupParams, delta: i64, factors: Vec<usize>) -> Result<Self> {
        let k = params.k();
        if let Some(&i) = factors.iter().find(|&&i| i == 0 || i > k) {
            return Err(Error::IndexOutOfRange { index: i, k });
        }
        if let Some(pos) = factors.windows(2).position(|w| w[1] == succ(w[0], k)) {
            return Err(Error::InvalidNormalForm(format!(
                "factors {} and {} multiply to δ",
                pos,
                pos + 1
            )));
        }
        Ok(DualNormalForm { params, delta, factors })
    }

    pub fn params(&self) -> GroupParams {
        self.params
    }

    pub fn delta_exponent(&self) -> i64 {
        self.delta
    }

    pub fn factors(&self) -> &[usize] {
        &self.factors
    }

    pub fn is_identity(&self) -> bool {
        self.delta == 0 && self.factors.is_empty()
    }

    pub fn of_word(w: &DualWord, params: GroupParams) -> Self {
        let mut nf = Self::identity(params);
        for &l in w.letters() {
            nf.right_multiply_mut(l);
        }
        nf
    }

    pub fn right_multiply(&self, g: DualLetter) -> Self {
        let mut out = self.clone();
        out.right_multiply_mut(g);
        out
    }

    fn shift_all(&mut self, by: i64) {
        let k = self.params.k();
        for f in &mut self.factors {
            *f = shift(*f, by, k);
        }
    }

    pub fn right_multiply_mut(&mut self, g: DualLetter) -> DualTransition {
        let k = self.params.k();
        let last = self.factors.last().copied();
        if g.positive {
            if last.is_some_and(|i| g.index == succ(i, k)) {
                self.factors.pop();
                self.delta += 1;
                self.shift_all(2);
                DualTransition::FormDelta
            } else {
                self.factors.push(g.index);
                DualTransition::Append
            }
        } else if last == Some(g.index) {
            self.factors.pop();
            DualTransition::Cancel
        } else {
            // σ_j⁻¹ = δ⁻¹ σ_{j-1}
            self.delta -= 1;
            self.shift_all(-2);
            self.factors.push(shift(g.index, -1, k));
            DualTransition::BorrowDelta
        }
    }

    /// `δ^r` written as `(σ_1σ_2)^r`, followed by the factors.
    pub fn to_word(&self) -> DualWord {
        let mut w = delta_power_dual(self.delta);
        for &i in &self.factors {
            w.push(DualLetter::pos(i));
        }
        w
    }

    /// `π̃ = (r, r + s)`.
    pub fn pi(&self) -> [i64; 2] {
        [self.delta, self.delta + self.factors.len() as i64]
    }

    /// Word length with respect to the dual generators: `|r| + |r + s|`.
    pub fn distance(&self) -> u64 {
        let [p0, p1] = self.pi();
        p0.unsigned_abs() + p1.unsigned_abs()
    }

    /// A geodesic word for this element.
    ///
    /// With `r >= 0` this is the normal form itself. Otherwise the `δ⁻¹`s
    /// are absorbed by the leading factors (`δ⁻¹σ_i = σ_{i+1}⁻¹`), and any
    /// that remain are written as `σ_2⁻¹σ_1⁻¹` blocks in front.
    pub fn geodesic_representative(&self) -> DualWord {
        if self.delta >= 0 {
            return self.to_word();
        }
        let k = self.params.k();
        let owed = self.delta.unsigned_abs() as usize;
        let absorbed = owed.min(self.factors.len());
        let mut out = delta_power_dual(-((owed - absorbed) as i64));
        for (t, &i) in self.factors[..absorbed].iter().enumerate() {
            // each δ⁻¹ still to the right of this letter shifts it by +2
            let remaining = (absorbed - 1 - t) as i64;
            out.push(DualLetter::neg(shift(i, 1 + 2 * remaining, k)));
        }
        for &i in &self.factors[absorbed..] {
            out.push(DualLetter::pos(i));
        }
        out
    }
}

impl fmt::Display for DualNormalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "δ^{}", self.delta)?;
        for i in &self.factors {
            write!(f, " s{i}")?;
        }
        Ok(())
    }
}

/// `δ^c` written with `σ_1σ_2` blocks, or `σ_2⁻¹σ_1⁻¹` blocks for `c < 0`.
pub fn delta_power_dual(c: i64) -> DualWord {
    let mut w = DualWord::new();
    for _ in 0..c.unsigned_abs() {
        if c > 0 {
            w.push(DualLetter::pos(1));
            w.push(DualLetter::pos(2));
        } else {
            w.push(DualLetter::neg(2));
            w.push(DualLetter::neg(1));
        }
    }
    w
}

pub fn dual_normal_form(w: &DualWord, params: GroupParams) -> DualNormalForm {
    DualNormalForm::of_word(w, params)
}

pub fn dual_distance(w: &DualWord, params: GroupParams) -> u64 {
    dual_normal_form(w, params).distance()
}

pub fn dual_distance_between(y: &DualWord, x: &DualWord, params: GroupParams) -> u64 {
    dual_distance(&y.inverse().concat(x), params)
}

/// 2 if some adjacent pair of positive letters multiplies to `δ`, else 1 if
/// any positive letter occurs, else 0.
pub fn dual_poss(y: &DualWord, params: GroupParams) -> usize {
    let k = params.k();
    let ls = y.letters();
    if ls.windows(2).any(|w| w[0].positive && w[1].positive && w[1].index == succ(w[0].index, k)) {
        2
    } else if ls.iter().any(|l| l.positive) {
        1
    } else {
        0
    }
}

/// Mirror of [`dual_poss`] for `δ⁻¹ = σ_{i+1}⁻¹σ_i⁻¹`.
pub fn dual_negg(y: &DualWord, params: GroupParams) -> usize {
    let k = params.k();
    let ls = y.letters();
    if ls.windows(2).any(|w| !w[0].positive && !w[1].positive && w[0].index == succ(w[1].index, k)) {
        2
    } else if ls.iter().any(|l| !l.positive) {
        1
    } else {
        0
    }
}

pub fn is_geodesic_dual(y: &DualWord, params: GroupParams) -> bool {
    y.is_freely_reduced() && dual_poss(y, params) + dual_negg(y, params) <= 2
}

/// Image of a single dual generator in the Artin generators.
pub fn dual_letter_to_artin(l: DualLetter) -> ArtinWord {
    let j = l.index;
    let pos = match j {
        1 => prodd(Base::A, Base::B, 1),
        2 => prodd(Base::B, Base::A, 1),
        _ => {
            let head = prodd_inv(Base::B, Base::A, j - 2);
            let tail = if j % 2 == 1 {
                prodd(Base::A, Base::B, j - 1)
            } else {
                prodd(Base::B, Base::A, j - 1)
            };
            head.concat(&tail)
        }
    };
    if l.positive {
        pos
    } else {
        pos.inverse()
    }
}

pub fn dual_to_artin(w: &DualWord) -> ArtinWord {
    let mut out = ArtinWord::new();
    for &l in w.letters() {
        out.extend_from(&dual_letter_to_artin(l));
    }
    out
}

/// `a ↦ σ_1`, `b ↦ σ_2`.
pub fn artin_to_dual(w: &ArtinWord) -> DualWord {
    w.letters()
        .iter()
        .map(|l: &ArtinLetter| {
            let i = match l.base {
                Base::A => 1,
                Base::B => 2,
            };
            DualLetter { index: i, positive: l.is_positive() }
        })
        .collect()
}
