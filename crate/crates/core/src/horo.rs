//! Horofunctions for the Artin generators.
//!
//! A point of the compactified group is a pair `(p, z)`: an integer-or-infinite
//! vector `p` of length `k` and a positive word `z` with no `Δ` sub-product,
//! split into maximal alternating runs. The horofunction attached to it is
//! `ψ(w) = Σ|p_i + φ_i(w, z)| − Σ|p_i|` with `φ(w, z) = π(w⁻¹z) − π(z)`.

use std::fmt;

use crate::error::{Error, Result};
use crate::extended::ExtendedInt;
use crate::garside::{delta_power_word, normal_form, tau, ArtinNormalForm, CanonicalFactor};
use crate::words::{prodd, prodd_inv, ArtinWord, Base, GroupParams};

/// How a [`ZWord`] continues after its stored runs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Tail {
    /// The word ends after the stored runs.
    Finite,
    /// The stored runs are a prefix of an infinite word that is not known further.
    Truncated,
    /// The runs from `cycle_start` onwards repeat forever.
    Periodic { cycle_start: usize },
}

/// How often a run length occurs in a [`ZWord`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RunCount {
    Exact(u64),
    Infinite,
    /// Seen this many times in a truncated prefix.
    AtLeast(u64),
}

/// A positive word without `Δ` sub-products, stored as its maximal alternating runs.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ZWord {
    params: GroupParams,
    runs: Vec<CanonicalFactor>,
    tail: Tail,
}

fn check_junctions(runs: &[CanonicalFactor]) -> Result<()> {
    match runs.windows(2).position(|w| w[0].last() != w[1].first()) {
        Some(i) => Err(Error::InvalidFactor(format!(
            "runs {i} and {} do not meet at a repeated letter",
            i + 1
        ))),
        None => Ok(()),
    }
}

impl ZWord {
    pub fn empty(params: GroupParams) -> Self {
        ZWord { params, runs: Vec::new(), tail: Tail::Finite }
    }

    pub fn from_runs(runs: Vec<CanonicalFactor>, tail: Tail, params: GroupParams) -> Result<Self> {
        if let Some(f) = runs.iter().find(|f| f.len == 0 || f.len >= params.k()) {
            return Err(Error::InvalidFactor(format!("run {f} has length {}", f.len)));
        }
        check_junctions(&runs)?;
        if let Tail::Periodic { cycle_start } = tail {
            if cycle_start >= runs.len() {
                return Err(Error::InvalidFactor("empty cycle".into()));
            }
            let (first, last) = (runs[cycle_start], runs[runs.len() - 1]);
            if last.last() != first.first() {
                return Err(Error::InvalidFactor("cycle does not close at a repeated letter".into()));
            }
        }
        Ok(ZWord { params, runs, tail })
    }

    /// Splits a positive word into maximal alternating runs.
    pub fn decompose(w: &ArtinWord, tail: Tail, params: GroupParams) -> Result<Self> {
        if !w.is_positive() {
            return Err(Error::NotPositive);
        }
        let mut runs: Vec<CanonicalFactor> = Vec::new();
        for l in w.letters() {
            match runs.last_mut() {
                Some(f) if f.last() != l.base => {
                    f.len += 1;
                    if f.len >= params.k() {
                        return Err(Error::ContainsGarside);
                    }
                }
                _ => runs.push(CanonicalFactor { start: l.base, len: 1 }),
            }
        }
        ZWord::from_runs(runs, tail, params)
    }

    /// Parses `prefix` or `prefix(cycle)`, e.g. `bba` or `b(aabb)` for `b·aabb·aabb⋯`.
    /// Without a cycle, `infinite` marks the word as a truncated prefix.
    pub fn parse(text: &str, infinite: bool, params: GroupParams) -> Result<Self> {
        let text = text.trim();
        let Some(open) = text.find('(') else {
            let tail = if infinite { Tail::Truncated } else { Tail::Finite };
            return ZWord::decompose(&ArtinWord::parse(text)?, tail, params);
        };
        if !text.ends_with(')') {
            return Err(Error::Syntax { pos: text.len(), msg: "expected `)` at the end".into() });
        }
        let prefix = ArtinWord::parse(&text[..open])?;
        let cycle = ArtinWord::parse(&text[open + 1..text.len() - 1])
            .map_err(|e| shift_syntax(e, open + 1))?;
        if cycle.is_empty() {
            return Err(Error::Syntax { pos: open, msg: "empty cycle".into() });
        }
        // Three copies of the cycle are enough to see one full period of runs
        // that starts at or after the prefix and ends before the last copy.
        let mut unrolled = prefix.clone();
        for _ in 0..3 {
            unrolled.extend_from(&cycle);
        }
        let whole = ZWord::decompose(&unrolled, Tail::Finite, params)?;
        let mut bounds = vec![0];
        for f in &whole.runs {
            bounds.push(bounds[bounds.len() - 1] + f.len);
        }
        let (p, c) = (prefix.len(), cycle.len());
        // With no repeated letter anywhere in the cycle the tail would be one
        // endless alternating run, which contains `Δ`.
        let (start, end) = bounds
            .iter()
            .enumerate()
            .filter(|&(_, &b)| b >= p)
            .find_map(|(s, &b)| bounds[..bounds.len() - 1].iter().position(|&e| e == b + c).map(|e| (s, e)))
            .ok_or(Error::ContainsGarside)?;
        let runs = whole.runs[..end].to_vec();
        ZWord::from_runs(runs, Tail::Periodic { cycle_start: start }, params)
    }

    pub fn params(&self) -> GroupParams {
        self.params
    }

    pub fn runs(&self) -> &[CanonicalFactor] {
        &self.runs
    }

    pub fn tail(&self) -> Tail {
        self.tail
    }

    pub fn is_finite(&self) -> bool {
        self.tail == Tail::Finite
    }

    /// The `i`-th run, unrolling a periodic tail.
    pub fn run(&self, i: usize) -> Option<CanonicalFactor> {
        if let Some(&f) = self.runs.get(i) {
            return Some(f);
        }
        match self.tail {
            Tail::Periodic { cycle_start } => {
                let period = self.runs.len() - cycle_start;
                Some(self.runs[cycle_start + (i - cycle_start) % period])
            }
            _ => None,
        }
    }

    /// The first `n` runs, or an error if a truncated prefix is shorter.
    /// A finite word returns all its runs when it has fewer than `n`.
    pub fn first_runs(&self, n: usize) -> Result<Vec<CanonicalFactor>> {
        match self.tail {
            Tail::Finite => Ok(self.runs.iter().copied().take(n).collect()),
            Tail::Truncated if n > self.runs.len() => {
                Err(Error::PrefixTooShort { needed: n, available: self.runs.len() })
            }
            _ => Ok((0..n).map(|i| self.run(i).expect("periodic or long enough")).collect()),
        }
    }

    /// `m_len(z)`: the number of runs of length `len`.
    pub fn count(&self, len: usize) -> RunCount {
        let c = |runs: &[CanonicalFactor]| runs.iter().filter(|f| f.len == len).count() as u64;
        match self.tail {
            Tail::Finite => RunCount::Exact(c(&self.runs)),
            Tail::Truncated => RunCount::AtLeast(c(&self.runs)),
            Tail::Periodic { cycle_start } => {
                if c(&self.runs[cycle_start..]) > 0 {
                    RunCount::Infinite
                } else {
                    RunCount::Exact(c(&self.runs))
                }
            }
        }
    }

    /// The stored runs as a word; for a periodic word, prefix and one cycle.
    pub fn to_word(&self) -> ArtinWord {
        let mut w = ArtinWord::new();
        for f in &self.runs {
            w.extend_from(&f.to_word());
        }
        w
    }
}

fn shift_syntax(e: Error, by: usize) -> Error {
    match e {
        Error::Syntax { pos, msg } => Error::Syntax { pos: pos + by, msg },
        other => other,
    }
}

impl fmt::Display for ZWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let word = |runs: &[CanonicalFactor]| {
            runs.iter().map(|r| r.to_word().to_string()).collect::<String>()
        };
        match self.tail {
            Tail::Finite => f.write_str(&word(&self.runs)),
            Tail::Truncated => write!(f, "{}…", word(&self.runs)),
            Tail::Periodic { cycle_start } => write!(
                f,
                "{}({})",
                word(&self.runs[..cycle_start]),
                word(&self.runs[cycle_start..])
            ),
        }
    }
}

/// Decomposes a finite positive word into its maximal alternating runs.
pub fn z_decompose(w: &ArtinWord, params: GroupParams) -> Result<ZWord> {
    ZWord::decompose(w, Tail::Finite, params)
}

/// `π` of a positive word from its run counts: `(0, m_{k-1}, m_{k-1}+m_{k-2}, …)`.
fn pi_of_counts(counts: &[u64]) -> Vec<i64> {
    let k = counts.len();
    let mut p = Vec::with_capacity(k);
    let mut acc = 0i64;
    p.push(0);
    for i in 1..k {
        acc += counts[k - i] as i64;
        p.push(acc);
    }
    p
}

/// Letters of `z` that must be read past before `φ(w, z)` is compared
/// between consecutive prefixes.
pub fn stabilization_letters(w_len: usize, params: GroupParams) -> usize {
    (params.k() - 1) * w_len + params.k()
}

/// `φ(w, z) = π(w⁻¹z) − π(z)`.
///
/// For an infinite `z` the value along prefixes is eventually constant. It is
/// taken once at least [`stabilization_letters`] letters have been read and
/// one further run leaves it unchanged.
pub fn phi(w: &ArtinWord, z: &ZWord) -> Result<Vec<i64>> {
    let params = z.params();
    let k = params.k();
    let mut state = normal_form(&w.inverse(), params);
    let mut counts = vec![0u64; k];
    let feed = |state: &mut ArtinNormalForm, counts: &mut Vec<u64>, f: CanonicalFactor| {
        for l in f.to_word().letters() {
            state.right_multiply_mut(*l);
        }
        counts[f.len] += 1;
    };
    let value = |state: &ArtinNormalForm, counts: &[u64]| -> Vec<i64> {
        state.pi().iter().zip(pi_of_counts(counts)).map(|(a, b)| a - b).collect()
    };

    if z.is_finite() {
        for &f in z.runs() {
            feed(&mut state, &mut counts, f);
        }
        return Ok(value(&state, &counts));
    }

    let next = |i: usize| {
        z.run(i).ok_or(Error::PrefixTooShort { needed: i + 1, available: z.runs().len() })
    };
    let threshold = stabilization_letters(w.len(), params);
    let (mut i, mut read) = (0usize, 0usize);
    while read < threshold {
        let f = next(i)?;
        feed(&mut state, &mut counts, f);
        read += f.len;
        i += 1;
    }
    let mut current = value(&state, &counts);
    loop {
        feed(&mut state, &mut counts, next(i)?);
        i += 1;
        let v = value(&state, &counts);
        if v == current {
            return Ok(v);
        }
        current = v;
    }
}

/// Where a pair `(p, z)` sits in the compactification.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Membership {
    /// A group element.
    Omega0,
    /// A point at infinity.
    Boundary,
    Invalid,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PointClass {
    Generic,
    /// `p ≡ +∞`; every `z` gives the same point.
    Plus,
    /// `p ≡ −∞`.
    Minus,
}

impl fmt::Display for PointClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PointClass::Generic => "generic",
            PointClass::Plus => "plus",
            PointClass::Minus => "minus",
        })
    }
}

impl fmt::Display for Membership {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Membership::Omega0 => "omega0",
            Membership::Boundary => "boundary",
            Membership::Invalid => "invalid",
        })
    }
}

/// `p_i − p_{i−1}`, or `None` when both are the same infinity.
fn gap(p: &[ExtendedInt], i: usize) -> Option<ExtendedInt> {
    let (lo, hi) = (p[i - 1], p[i]);
    if !lo.is_finite() && lo == hi {
        None
    } else {
        Some(hi - lo)
    }
}

fn classify(p: &[ExtendedInt], z: &ZWord) -> std::result::Result<(Membership, PointClass), String> {
    let k = z.params().k();
    if p.len() != k {
        return Err(format!("p has {} entries, expected {k}", p.len()));
    }
    if let Some(x) = p.iter().find(|x| !x.is_coordinate()) {
        return Err(format!("{x} is not an integer or ±inf"));
    }
    if p.iter().all(|&x| x == ExtendedInt::POS_INF) {
        return Ok((Membership::Boundary, PointClass::Plus));
    }
    if p.iter().all(|&x| x == ExtendedInt::NEG_INF) {
        return Ok((Membership::Boundary, PointClass::Minus));
    }
    let all_finite = p.iter().all(|x| x.is_finite());
    if !z.is_finite() && all_finite {
        return Err("an infinite z needs an infinite coordinate".into());
    }
    for i in 1..k {
        let Some(g) = gap(p, i) else { continue };
        if g.inf < 0 {
            return Err(format!("p_{i} < p_{}", i - 1));
        }
        let len = k - i;
        match (z.count(len), g.as_finite()) {
            (RunCount::Exact(c), Some(g)) if z.is_finite() && g != c as i64 => {
                return Err(format!("p_{i} - p_{} = {g} but z has {c} runs of length {len}", i - 1));
            }
            (RunCount::Exact(_), None) if z.is_finite() => {
                return Err(format!("finite z needs finite p_{i} - p_{}", i - 1));
            }
            (RunCount::Exact(c) | RunCount::AtLeast(c), Some(g)) if g < c as i64 => {
                return Err(format!("p_{i} - p_{} = {g} < {c} runs of length {len}", i - 1));
            }
            (RunCount::Infinite, Some(g)) => {
                return Err(format!("p_{i} - p_{} = {g} but z has infinitely many runs of length {len}", i - 1));
            }
            _ => {}
        }
    }
    let membership = if all_finite { Membership::Omega0 } else { Membership::Boundary };
    Ok((membership, PointClass::Generic))
}

/// Classifies `(p, z)` as a group element, a boundary point, or neither.
pub fn validate_omega(p: &[ExtendedInt], z: &ZWord) -> Membership {
    classify(p, z).map_or(Membership::Invalid, |(m, _)| m)
}

/// A validated point `(p, z)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OmegaPoint {
    p: Vec<ExtendedInt>,
    z: ZWord,
    membership: Membership,
    class: PointClass,
}

impl OmegaPoint {
    pub fn new(p: Vec<ExtendedInt>, z: ZWord) -> Result<Self> {
        let (membership, class) = classify(&p, &z).map_err(Error::InvalidPoint)?;
        let z = if class == PointClass::Generic { z } else { ZWord::empty(z.params()) };
        Ok(OmegaPoint { p, z, membership, class })
    }

    pub fn plus(params: GroupParams) -> Self {
        OmegaPoint::new(vec![ExtendedInt::POS_INF; params.k()], ZWord::empty(params)).expect("valid")
    }

    pub fn minus(params: GroupParams) -> Self {
        OmegaPoint::new(vec![ExtendedInt::NEG_INF; params.k()], ZWord::empty(params)).expect("valid")
    }

    /// The point `(π(x), z)` of a group element `x = zΔ^{p_0}`.
    pub fn from_element(x: &ArtinNormalForm) -> Self {
        let params = x.params();
        let r = x.delta_exponent();
        let runs = x
            .factors()
            .iter()
            .map(|&f| if r.rem_euclid(2) == 1 { tau(f, params) } else { f })
            .collect();
        let z = ZWord::from_runs(runs, Tail::Finite, params).expect("normal form factors are runs");
        let p = x.pi().into_iter().map(ExtendedInt::finite).collect();
        OmegaPoint::new(p, z).expect("group elements lie in Ω₀")
    }

    pub fn params(&self) -> GroupParams {
        self.z.params()
    }

    pub fn p(&self) -> &[ExtendedInt] {
        &self.p
    }

    pub fn z(&self) -> &ZWord {
        &self.z
    }

    pub fn membership(&self) -> Membership {
        self.membership
    }

    pub fn class(&self) -> PointClass {
        self.class
    }

    /// `zΔ^{p_0}` for a point of `Ω₀`.
    pub fn element(&self) -> Option<ArtinWord> {
        if self.membership != Membership::Omega0 {
            return None;
        }
        let mut w = self.z.to_word();
        w.extend_from(&delta_power_word(self.p[0].fin, self.params()));
        Some(w)
    }
}

impl fmt::Display for OmegaPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let p: Vec<String> = self.p.iter().map(ToString::to_string).collect();
        write!(f, "p=({}) z={}", p.join(","), self.z)
    }
}

/// `ψ(w) = Σ|p_i + φ_i(w, z)| − Σ|p_i|`.
pub fn psi(point: &OmegaPoint, w: &ArtinWord) -> Result<i64> {
    let params = point.params();
    match point.class {
        PointClass::Plus => return Ok(normal_form(&w.inverse(), params).pi().iter().sum()),
        PointClass::Minus => return Ok(-normal_form(&w.inverse(), params).pi().iter().sum::<i64>()),
        PointClass::Generic => {}
    }
    let f = phi(w, &point.z)?;
    let moved: ExtendedInt = point.p.iter().zip(&f).map(|(&p, &d)| (p + ExtendedInt::finite(d)).abs()).sum();
    let base: ExtendedInt = point.p.iter().map(|p| p.abs()).sum();
    let diff = moved - base;
    debug_assert!(diff.is_finite());
    Ok(diff.fin)
}

/// Whether the point is the limit of a geodesic ray: every gap of `p` not
/// between equal infinities matches the run count of `z` exactly.
pub fn is_busemann(point: &OmegaPoint) -> bool {
    match (point.class, point.membership) {
        (PointClass::Plus | PointClass::Minus, _) => return true,
        (_, Membership::Omega0) => return false,
        _ => {}
    }
    let k = point.params().k();
    (1..k).all(|i| {
        let Some(g) = gap(&point.p, i) else { return true };
        match (point.z.count(k - i), g.as_finite()) {
            (RunCount::Exact(c) | RunCount::AtLeast(c), Some(g)) => g == c as i64,
            (RunCount::Infinite, None) => true,
            (RunCount::AtLeast(c), None) => c > 0,
            _ => false,
        }
    })
}

fn counts_of(runs: &[CanonicalFactor], k: usize) -> Vec<u64> {
    let mut m = vec![0u64; k];
    for f in runs {
        m[f.len] += 1;
    }
    m
}

/// `q_0` of the integer vector with consecutive differences `gaps` that best
/// tracks `p`.
///
/// The vector is pinned to `p` at the first non-negative coordinate or, if
/// that one is infinite, at the last non-positive one. When both are
/// infinite, `p` jumps from `−∞` to `+∞` there and the vector is split so
/// that the two sides straddle zero.
pub(crate) fn anchored_start(p: &[ExtendedInt], gaps: &[u64]) -> i64 {
    let first_nonneg = p.iter().position(|&x| x >= ExtendedInt::ZERO);
    let last_nonpos = p.iter().rposition(|&x| x <= ExtendedInt::ZERO);
    let below = |j: usize| gaps[1..=j].iter().sum::<u64>() as i64;
    let pinned = [first_nonneg, last_nonpos]
        .into_iter()
        .flatten()
        .find(|&j| p[j].is_finite());
    match (pinned, first_nonneg) {
        (Some(j), _) => p[j].fin - below(j),
        (None, Some(t)) => -((gaps[t] / 2) as i64) - below(t - 1),
        (None, None) => unreachable!("all coordinates −∞"),
    }
}

/// The group element with `π = q` and run word `runs`, i.e. `runs · Δ^{q_0}`.
fn element_of(runs: &[CanonicalFactor], q0: i64, params: GroupParams) -> ArtinWord {
    let mut w = ArtinWord::new();
    for f in runs {
        w.extend_from(&f.to_word());
    }
    w.extend_from(&delta_power_word(q0, params));
    w
}

/// The `n`-th element of the geodesic sequence converging to a Busemann point.
///
/// For the two classes this is `prodd(a,b;n)` or its negative counterpart.
/// Otherwise it is `w^n Δ^{q_0}` where `w^n` is the first `n` runs of `z`
/// and `q` has the gaps of `w^n`, pinned to `p` by [`anchored_start`].
pub fn approach_element(point: &OmegaPoint, n: usize) -> Result<ArtinWord> {
    match point.class {
        PointClass::Plus => return Ok(prodd(Base::A, Base::B, n)),
        PointClass::Minus => return Ok(prodd_inv(Base::A, Base::B, n)),
        PointClass::Generic => {}
    }
    let params = point.params();
    let k = params.k();
    let runs = point.z.first_runs(n)?;
    let m = counts_of(&runs, k);
    let gaps: Vec<u64> = (0..k).map(|i| if i == 0 { 0 } else { m[k - i] }).collect();
    let q0 = anchored_start(&point.p, &gaps);
    Ok(element_of(&runs, q0, params))
}

/// The `n`-th element of a sequence in `Ω₀` converging to any boundary point.
///
/// Each gap is truncated at `n` (never below the run count of the first `n`
/// runs of `z`), extra runs are appended to make up the difference, and
/// `p_0` is clamped to `[-kn, kn]`.
pub fn density_element(point: &OmegaPoint, n: usize) -> Result<ArtinWord> {
    let params = point.params();
    let k = params.k();
    let mut runs = match point.class {
        PointClass::Generic => point.z.first_runs(n)?,
        _ => Vec::new(),
    };
    let m = counts_of(&runs, k);
    for i in 1..k {
        let len = k - i;
        let target = match gap(&point.p, i) {
            None => m[len],
            Some(g) => m[len].max(g.clamp_finite(n as i64).max(0) as u64),
        };
        for _ in m[len]..target {
            let start = runs.last().map_or(Base::A, |f| f.last());
            runs.push(CanonicalFactor { start, len });
        }
    }
    let q0 = point.p[0].clamp_finite((k * n) as i64);
    Ok(element_of(&runs, q0, params))
}

/// `d(e, x) + ψ(x)` along the approach sequence: [`approach_element`] for
/// Busemann points, [`density_element`] otherwise.
pub fn detour_upper(point: &OmegaPoint, n: usize) -> Result<i64> {
    let params = point.params();
    let x = if is_busemann(point) {
        approach_element(point, n)?
    } else {
        density_element(point, n)?
    };
    Ok(normal_form(&x, params).distance() as i64 + psi(point, &x)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::extended::parse_coordinates;
    use crate::garside::{artin_distance, distance_between};

    fn k3() -> GroupParams {
        GroupParams::new(3).unwrap()
    }

    fn w(s: &str) -> ArtinWord {
        ArtinWord::parse(s).unwrap()
    }

    fn pt(p: &str, z: &str, params: GroupParams) -> OmegaPoint {
        OmegaPoint::new(parse_coordinates(p).unwrap(), ZWord::parse(z, false, params).unwrap()).unwrap()
    }

    #[test]
    fn decompose_examples() {
        let z = z_decompose(&w("bba"), k3()).unwrap();
        assert_eq!(z.runs(), &[CanonicalFactor { start: Base::B, len: 1 }, CanonicalFactor { start: Base::B, len: 2 }]);
        assert_eq!(z.count(1), RunCount::Exact(1));
        assert_eq!(z.count(2), RunCount::Exact(1));
        assert_eq!(z_decompose(&w("a"), k3()).unwrap().runs().len(), 1);
        assert_eq!(z_decompose(&w("aba"), k3()), Err(Error::ContainsGarside));
        assert_eq!(z_decompose(&w("aB"), k3()), Err(Error::NotPositive));
    }

    #[test]
    fn periodic_parse() {
        let params = k3();
        assert_eq!(ZWord::parse("(ab)", false, params), Err(Error::ContainsGarside));
        assert_eq!(ZWord::parse("(aab)", false, params), Err(Error::ContainsGarside));
        let z = ZWord::parse("(aab)", false, GroupParams::new(4).unwrap()).unwrap();
        assert_eq!(z.count(1), RunCount::Exact(1));
        assert_eq!(z.count(2), RunCount::Exact(0));
        assert_eq!(z.count(3), RunCount::Infinite);
        let z = ZWord::parse("(abbaa)", false, params).unwrap();
        assert_eq!(z.count(1), RunCount::Infinite);
        assert_eq!(z.count(2), RunCount::Infinite);
        let z = ZWord::parse("bb(a)", false, params).unwrap();
        assert_eq!(z.to_string(), "bba(a)");
        assert_eq!(z.count(1), RunCount::Infinite);
        assert_eq!(z.count(2), RunCount::Exact(1));
        let first: Vec<String> = z.first_runs(4).unwrap().iter().map(ToString::to_string).collect();
        assert_eq!(first, ["b", "ba", "a", "a"]);
    }

    #[test]
    fn phi_examples() {
        let z = z_decompose(&w("bba"), k3()).unwrap();
        assert_eq!(phi(&ArtinWord::new(), &z).unwrap(), vec![0, 0, 0]);
        assert_eq!(phi(&w("b"), &z).unwrap(), vec![0, 0, -1]);
        for c in -2..=2 {
            let d = delta_power_word(c, k3());
            assert_eq!(phi(&d, &z).unwrap(), vec![-c; 3]);
        }
    }

    #[test]
    fn phi_on_truncated_prefix() {
        let params = k3();
        let short = ZWord::parse("ab", true, params).unwrap();
        assert!(matches!(phi(&w("ab"), &short), Err(Error::PrefixTooShort { .. })));
        let periodic = ZWord::parse("(abbaa)", false, params).unwrap();
        let long = ZWord::from_runs(periodic.first_runs(40).unwrap(), Tail::Truncated, params).unwrap();
        for s in ["a", "B", "abA", "bbaBA"] {
            assert_eq!(phi(&w(s), &periodic).unwrap(), phi(&w(s), &long).unwrap());
        }
    }

    #[test]
    fn validate_examples() {
        let params = k3();
        let bba = z_decompose(&w("bba"), params).unwrap();
        let p = |s| parse_coordinates(s).unwrap();
        assert_eq!(validate_omega(&p("-1,0,1"), &bba), Membership::Omega0);
        assert_eq!(validate_omega(&p("0,2,3"), &bba), Membership::Invalid);
        assert_eq!(validate_omega(&p("inf,inf,inf"), &bba), Membership::Boundary);
        assert_eq!(validate_omega(&p("1,0,1"), &ZWord::empty(params)), Membership::Invalid);
        let cyc = ZWord::parse("(abbaa)", false, params).unwrap();
        assert_eq!(validate_omega(&p("0,inf,inf"), &cyc), Membership::Boundary);
        assert_eq!(validate_omega(&p("0,3,inf"), &cyc), Membership::Invalid);
        assert_eq!(validate_omega(&p("-inf,-inf,inf"), &cyc), Membership::Boundary);
        assert_eq!(validate_omega(&p("0,1,2"), &cyc), Membership::Invalid);
        let plus = OmegaPoint::new(p("inf,inf,inf"), bba).unwrap();
        assert_eq!(plus.class(), PointClass::Plus);
        assert!(plus.z().runs().is_empty());
    }

    #[test]
    fn psi_examples() {
        let params = k3();
        let plus = OmegaPoint::plus(params);
        assert_eq!(psi(&plus, &w("A")).unwrap(), 1);
        assert_eq!(psi(&plus, &ArtinWord::new()).unwrap(), 0);
        let point = pt("-1,0,1", "bba", params);
        let x = point.element().unwrap();
        assert_eq!(psi(&point, &x).unwrap(), -2);
        assert_eq!(psi(&point, &ArtinWord::new()).unwrap(), 0);
        assert_eq!(psi(&OmegaPoint::minus(params), &w("A")).unwrap(), -1);
    }

    #[test]
    fn psi_matches_distance_difference_in_omega0() {
        let params = GroupParams::new(4).unwrap();
        for x in ["", "abab", "bbA", "BAbaa", "abBBa"] {
            let nf = normal_form(&w(x), params);
            let point = OmegaPoint::from_element(&nf);
            let e = point.element().unwrap();
            assert_eq!(normal_form(&e, params), nf);
            for y in ["", "a", "B", "abA", "bbab", "AAB"] {
                let expected = distance_between(&w(y), &e, params) as i64 - artin_distance(&e, params) as i64;
                assert_eq!(psi(&point, &w(y)).unwrap(), expected, "x={x} y={y}");
            }
        }
    }

    #[test]
    fn busemann_classification() {
        let params = k3();
        assert!(is_busemann(&OmegaPoint::plus(params)));
        assert!(is_busemann(&OmegaPoint::minus(params)));
        assert!(!is_busemann(&pt("-1,0,1", "bba", params)));
        assert!(is_busemann(&pt("0,inf,inf", "(abbaa)", params)));
        assert!(is_busemann(&pt("2,2,inf", "(a)", params)));
        assert!(!is_busemann(&pt("2,3,inf", "(a)", params)));
        assert!(!is_busemann(&pt("0,inf,inf", "(a)", params)));
    }

    #[test]
    fn approach_sequences() {
        let params = k3();
        assert_eq!(approach_element(&OmegaPoint::plus(params), 4).unwrap(), w("abab"));
        assert_eq!(approach_element(&OmegaPoint::minus(params), 3).unwrap(), w("ABA"));
        let point = pt("2,2,inf", "(a)", params);
        let x = approach_element(&point, 1).unwrap();
        assert_eq!(normal_form(&x, params).factors()[0].len, 1);
    }

    #[test]
    fn detour_vanishes_at_busemann_points() {
        let params = k3();
        for (p, z) in [("inf,inf,inf", ""), ("-inf,-inf,-inf", ""), ("0,inf,inf", "(abbaa)"), ("2,2,inf", "(a)"), ("-inf,-inf,inf", "(abbaa)")] {
            let point = pt(p, z, params);
            for n in 20..=24 {
                assert_eq!(detour_upper(&point, n).unwrap(), 0, "p={p} z={z} n={n}");
            }
        }
    }

    #[test]
    fn detour_positive_at_strict_gap() {
        let params = k3();
        let point = pt("2,3,inf", "(a)", params);
        for n in 10..=20 {
            assert!(detour_upper(&point, n).unwrap() >= 1, "n={n}");
        }
    }
}
