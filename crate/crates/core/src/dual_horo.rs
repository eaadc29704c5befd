//! Horofunctions for the dual generators.
//!
//! Points are pairs `(p, z)` with `p = (p_0, p_1)` and `z` a positive dual
//! word with no adjacent pair multiplying to `δ`. The gap `p_1 − p_0` equals
//! the number of letters of `z`, which is infinite for infinite `z`.

use std::fmt;

use crate::dual::{delta_power_dual, dual_normal_form, shift, succ, DualNormalForm};
use crate::error::{Error, Result};
use crate::extended::ExtendedInt;
use crate::horo::{anchored_start, Membership, PointClass, Tail};
use crate::words::{DualLetter, DualWord, GroupParams};

/// A positive dual word with no `δ` sub-product, possibly infinite.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DualZWord {
    params: GroupParams,
    letters: Vec<usize>,
    tail: Tail,
}

impl DualZWord {
    pub fn empty(params: GroupParams) -> Self {
        DualZWord { params, letters: Vec::new(), tail: Tail::Finite }
    }

    pub fn new(letters: Vec<usize>, tail: Tail, params: GroupParams) -> Result<Self> {
        let k = params.k();
        if let Some(&i) = letters.iter().find(|&&i| i == 0 || i > k) {
            return Err(Error::IndexOutOfRange { index: i, k });
        }
        if letters.windows(2).any(|w| w[1] == succ(w[0], k)) {
            return Err(Error::ContainsGarside);
        }
        if let Tail::Periodic { cycle_start } = tail {
            if cycle_start >= letters.len() {
                return Err(Error::InvalidFactor("empty cycle".into()));
            }
            if letters[cycle_start] == succ(letters[letters.len() - 1], k) {
                return Err(Error::ContainsGarside);
            }
        }
        Ok(DualZWord { params, letters, tail })
    }

    /// Parses `s1 s3` or `s1 (s3 s1)`; see [`crate::horo::ZWord::parse`].
    pub fn parse(text: &str, infinite: bool, params: GroupParams) -> Result<Self> {
        let positive = |w: DualWord| -> Result<Vec<usize>> {
            if !w.is_positive() {
                return Err(Error::NotPositive);
            }
            Ok(w.letters().iter().map(|l| l.index).collect())
        };
        let text = text.trim();
        let Some(open) = text.find('(') else {
            let tail = if infinite { Tail::Truncated } else { Tail::Finite };
            return DualZWord::new(positive(DualWord::parse(text, params)?)?, tail, params);
        };
        if !text.ends_with(')') {
            return Err(Error::Syntax { pos: text.len(), msg: "expected `)` at the end".into() });
        }
        let mut letters = positive(DualWord::parse(&text[..open], params)?)?;
        let cycle_start = letters.len();
        let cycle = positive(DualWord::parse(&text[open + 1..text.len() - 1], params)?)?;
        if cycle.is_empty() {
            return Err(Error::Syntax { pos: open, msg: "empty cycle".into() });
        }
        letters.extend(cycle);
        DualZWord::new(letters, Tail::Periodic { cycle_start }, params)
    }

    pub fn params(&self) -> GroupParams {
        self.params
    }

    pub fn letters(&self) -> &[usize] {
        &self.letters
    }

    pub fn tail(&self) -> Tail {
        self.tail
    }

    pub fn is_finite(&self) -> bool {
        self.tail == Tail::Finite
    }

    pub fn letter(&self, i: usize) -> Option<usize> {
        if let Some(&l) = self.letters.get(i) {
            return Some(l);
        }
        match self.tail {
            Tail::Periodic { cycle_start } => {
                let period = self.letters.len() - cycle_start;
                Some(self.letters[cycle_start + (i - cycle_start) % period])
            }
            _ => None,
        }
    }

    pub fn first_letters(&self, n: usize) -> Result<Vec<usize>> {
        match self.tail {
            Tail::Finite => Ok(self.letters.iter().copied().take(n).collect()),
            Tail::Truncated if n > self.letters.len() => {
                Err(Error::PrefixTooShort { needed: n, available: self.letters.len() })
            }
            _ => Ok((0..n).map(|i| self.letter(i).expect("periodic or long enough")).collect()),
        }
    }

    pub fn to_word(&self) -> DualWord {
        self.letters.iter().map(|&i| DualLetter::pos(i)).collect()
    }
}

impl fmt::Display for DualZWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let word = |ls: &[usize]| ls.iter().map(|i| format!("s{i}")).collect::<Vec<_>>().join(" ");
        match self.tail {
            Tail::Finite => f.write_str(&word(&self.letters)),
            Tail::Truncated => write!(f, "{} …", word(&self.letters)),
            Tail::Periodic { cycle_start } => {
                let head = word(&self.letters[..cycle_start]);
                let cycle = word(&self.letters[cycle_start..]);
                if head.is_empty() {
                    write!(f, "({cycle})")
                } else {
                    write!(f, "{head} ({cycle})")
                }
            }
        }
    }
}

/// `π̃(w) = (r, r + s)` of the dual normal form.
pub fn dual_pi(w: &DualWord, params: GroupParams) -> [i64; 2] {
    dual_normal_form(w, params).pi()
}

/// Letters of `z` read before `φ̃(w, z)` is compared between prefixes.
pub fn dual_stabilization_letters(w_len: usize) -> usize {
    w_len + 2
}

/// `φ̃(w, z) = π̃(w⁻¹z) − π̃(z)`, stabilized along prefixes for infinite `z`.
pub fn dual_phi(w: &DualWord, z: &DualZWord) -> Result<[i64; 2]> {
    let params = z.params();
    let mut state = dual_normal_form(&w.inverse(), params);
    let value = |state: &DualNormalForm, read: usize| {
        let [a, b] = state.pi();
        [a, b - read as i64]
    };
    if z.is_finite() {
        for &i in z.letters() {
            state.right_multiply_mut(DualLetter::pos(i));
        }
        return Ok(value(&state, z.letters().len()));
    }
    let next = |i: usize| {
        z.letter(i).ok_or(Error::PrefixTooShort { needed: i + 1, available: z.letters().len() })
    };
    let mut read = 0;
    while read < dual_stabilization_letters(w.len()) {
        state.right_multiply_mut(DualLetter::pos(next(read)?));
        read += 1;
    }
    let mut current = value(&state, read);
    loop {
        state.right_multiply_mut(DualLetter::pos(next(read)?));
        read += 1;
        let v = value(&state, read);
        if v == current {
            return Ok(v);
        }
        current = v;
    }
}

fn classify(p: &[ExtendedInt], z: &DualZWord) -> std::result::Result<(Membership, PointClass), String> {
    let [p0, p1] = <[ExtendedInt; 2]>::try_from(p).map_err(|_| format!("p has {} entries, expected 2", p.len()))?;
    if let Some(x) = [p0, p1].into_iter().find(|x| !x.is_coordinate()) {
        return Err(format!("{x} is not an integer or ±inf"));
    }
    if p0 == ExtendedInt::POS_INF && p1 == ExtendedInt::POS_INF {
        return Ok((Membership::Boundary, PointClass::Plus));
    }
    if p0 == ExtendedInt::NEG_INF && p1 == ExtendedInt::NEG_INF {
        return Ok((Membership::Boundary, PointClass::Minus));
    }
    let gap = p1 - p0;
    if z.is_finite() {
        if gap != ExtendedInt::finite(z.letters().len() as i64) {
            return Err(format!("p_1 - p_0 = {gap} but z has {} letters", z.letters().len()));
        }
        Ok((Membership::Omega0, PointClass::Generic))
    } else if gap.inf > 0 {
        Ok((Membership::Boundary, PointClass::Generic))
    } else {
        Err(format!("p_1 - p_0 = {gap} but z is infinite"))
    }
}

pub fn validate_dual_omega(p: &[ExtendedInt], z: &DualZWord) -> Membership {
    classify(p, z).map_or(Membership::Invalid, |(m, _)| m)
}

/// A validated point `(p, z)` for the dual generators.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DualOmegaPoint {
    p: [ExtendedInt; 2],
    z: DualZWord,
    membership: Membership,
    class: PointClass,
}

impl DualOmegaPoint {
    pub fn new(p: Vec<ExtendedInt>, z: DualZWord) -> Result<Self> {
        let (membership, class) = classify(&p, &z).map_err(Error::InvalidPoint)?;
        let z = if class == PointClass::Generic { z } else { DualZWord::empty(z.params()) };
        Ok(DualOmegaPoint { p: [p[0], p[1]], z, membership, class })
    }

    pub fn plus(params: GroupParams) -> Self {
        DualOmegaPoint::new(vec![ExtendedInt::POS_INF; 2], DualZWord::empty(params)).expect("valid")
    }

    pub fn minus(params: GroupParams) -> Self {
        DualOmegaPoint::new(vec![ExtendedInt::NEG_INF; 2], DualZWord::empty(params)).expect("valid")
    }

    /// The point `(π̃(x), z)` of `x = zδ^{p_0}`.
    pub fn from_element(x: &DualNormalForm) -> Self {
        let params = x.params();
        let r = x.delta_exponent();
        let letters = x.factors().iter().map(|&i| shift(i, -2 * r, params.k())).collect();
        let z = DualZWord::new(letters, Tail::Finite, params).expect("normal form letters avoid δ");
        let p = x.pi().into_iter().map(ExtendedInt::finite).collect();
        DualOmegaPoint::new(p, z).expect("group elements lie in Ω̃₀")
    }

    pub fn params(&self) -> GroupParams {
        self.z.params()
    }

    pub fn p(&self) -> [ExtendedInt; 2] {
        self.p
    }

    pub fn z(&self) -> &DualZWord {
        &self.z
    }

    pub fn membership(&self) -> Membership {
        self.membership
    }

    pub fn class(&self) -> PointClass {
        self.class
    }

    /// `zδ^{p_0}` for a point of `Ω̃₀`.
    pub fn element(&self) -> Option<DualWord> {
        if self.membership != Membership::Omega0 {
            return None;
        }
        Some(self.z.to_word().concat(&delta_power_dual(self.p[0].fin)))
    }
}

impl fmt::Display for DualOmegaPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "p=({},{}) z={}", self.p[0], self.p[1], self.z)
    }
}

/// `ψ̃(w) = |p_0 + φ̃_0| + |p_1 + φ̃_1| − |p_0| − |p_1|`.
pub fn dual_psi(point: &DualOmegaPoint, w: &DualWord) -> Result<i64> {
    let params = point.params();
    let sum_inv = || dual_pi(&w.inverse(), params).iter().sum::<i64>();
    match point.class {
        PointClass::Plus => return Ok(sum_inv()),
        PointClass::Minus => return Ok(-sum_inv()),
        PointClass::Generic => {}
    }
    let f = dual_phi(w, &point.z)?;
    let moved: ExtendedInt = (0..2).map(|i| (point.p[i] + ExtendedInt::finite(f[i])).abs()).sum();
    let base: ExtendedInt = point.p.iter().map(|p| p.abs()).sum();
    let diff = moved - base;
    debug_assert!(diff.is_finite());
    Ok(diff.fin)
}

/// The `n`-th element of a geodesic sequence converging to the point.
///
/// The classes use `σ_1σ_2σ_1⋯` and `σ_2⁻¹σ_1⁻¹σ_2⁻¹⋯`. A generic point uses
/// the first `n` letters of `z` followed by `δ^{q_0}`, with `q` pinned to `p`
/// as on the Artin side.
pub fn dual_approach_element(point: &DualOmegaPoint, n: usize) -> Result<DualWord> {
    let alternate = |a: DualLetter, b: DualLetter| (0..n).map(|i| if i % 2 == 0 { a } else { b }).collect();
    match point.class {
        PointClass::Plus => return Ok(alternate(DualLetter::pos(1), DualLetter::pos(2))),
        PointClass::Minus => return Ok(alternate(DualLetter::neg(2), DualLetter::neg(1))),
        PointClass::Generic => {}
    }
    let letters = point.z.first_letters(n)?;
    let q0 = anchored_start(&point.p, &[0, letters.len() as u64]);
    let head: DualWord = letters.into_iter().map(DualLetter::pos).collect();
    Ok(head.concat(&delta_power_dual(q0)))
}

/// `d̃(e, x) + ψ̃(x)` along [`dual_approach_element`].
pub fn dual_detour(point: &DualOmegaPoint, n: usize) -> Result<i64> {
    let x = dual_approach_element(point, n)?;
    Ok(dual_normal_form(&x, point.params()).distance() as i64 + dual_psi(point, &x)?)
}
