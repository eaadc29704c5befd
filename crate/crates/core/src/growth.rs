//! Geodesic growth for the dual generators: the closed-form series, its
//! inclusion–exclusion decomposition, brute-force enumeration and a finite
//! automaton accepting exactly the geodesic words.

use num_bigint::{BigInt, BigUint};
use num_traits::Zero;
use rayon::prelude::*;

use crate::dual::{is_geodesic_dual, succ};
use crate::series::{IntPolynomial, RationalSeries};
use crate::words::{DualLetter, DualWord, GroupParams, Letter};

/// `(1 + (3−2k)x + (k²−3k+2)x² − 2k(k−1)x³) / ((1−kx)(1−2(k−1)x)(1−(k−1)x))`.
pub fn closed_form_growth(params: GroupParams) -> RationalSeries {
    let k = params.k() as i64;
    let numerator = IntPolynomial::from_i64(&[1, 3 - 2 * k, k * k - 3 * k + 2, -2 * k * (k - 1)]);
    let denominator = [k, 2 * (k - 1), k - 1]
        .iter()
        .map(|&c| IntPolynomial::from_i64(&[1, -c]))
        .fold(IntPolynomial::one(), |acc, f| &acc * &f);
    RationalSeries::new(numerator, denominator)
}

/// The series `Γ_ij` counts freely reduced words with `dual_poss ≤ i` and
/// `dual_negg ≤ j`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Component {
    C20,
    C02,
    C11,
    C10,
    C01,
}

impl Component {
    pub const ALL: [Component; 5] = [Component::C20, Component::C02, Component::C11, Component::C10, Component::C01];
}

impl std::str::FromStr for Component {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "20" => Ok(Component::C20),
            "02" => Ok(Component::C02),
            "11" => Ok(Component::C11),
            "10" => Ok(Component::C10),
            "01" => Ok(Component::C01),
            other => Err(format!("unknown component `{other}`")),
        }
    }
}

pub fn component_series(params: GroupParams, which: Component) -> RationalSeries {
    let k = params.k() as i64;
    match which {
        Component::C20 | Component::C02 => RationalSeries::from_i64(&[1], &[1, -k]),
        Component::C11 => RationalSeries::from_i64(&[1, 2], &[1, -2 * (k - 1)]),
        Component::C10 | Component::C01 => RationalSeries::from_i64(&[1, 1], &[1, -(k - 1)]),
    }
}

/// `Γ_20 + Γ_02 + Γ_11 − Γ_10 − Γ_01`.
pub fn inclusion_exclusion(params: GroupParams) -> RationalSeries {
    let c = |w| component_series(params, w);
    let plus = &(&c(Component::C20) + &c(Component::C02)) + &c(Component::C11);
    &(&plus - &c(Component::C10)) - &c(Component::C01)
}

/// Number of freely reduced dual words of length `n` that pass the geodesic criterion.
pub fn count_geodesics_enumeration(params: GroupParams, n: usize) -> u64 {
    if n == 0 {
        return 1;
    }
    let alphabet = DualLetter::all(params);

    fn dfs(word: &mut DualWord, left: usize, alphabet: &[DualLetter], params: GroupParams) -> u64 {
        if left == 0 {
            return u64::from(is_geodesic_dual(word, params));
        }
        let mut total = 0;
        for &l in alphabet {
            if word.letters().last() == Some(&l.inverse()) {
                continue;
            }
            word.push(l);
            total += dfs(word, left - 1, alphabet, params);
            word.pop();
        }
        total
    }

    alphabet
        .par_iter()
        .map(|&first| {
            let mut word = DualWord::from_letters(vec![first]);
            dfs(&mut word, n - 1, &alphabet, params)
        })
        .sum()
}

const POS: u8 = 1;
const NEG: u8 = 2;
const DELTA: u8 = 4;
const DELTA_INV: u8 = 8;

/// What the acceptor remembers about the word read so far.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum AcceptorState {
    Start,
    /// Last letter read and which of positive, negative, `δ` and `δ⁻¹` pairs occurred.
    Live { last: DualLetter, flags: u8 },
    /// The word is not freely reduced or fails the criterion; absorbing.
    Dead,
}

/// A complete deterministic automaton over the `2k` dual letters accepting
/// exactly the geodesic words.
#[derive(Debug, Clone)]
pub struct GeodesicAcceptor {
    params: GroupParams,
    alphabet: Vec<DualLetter>,
    states: Vec<AcceptorState>,
    /// `transitions[state][letter]` indexes into `states`.
    transitions: Vec<Vec<usize>>,
    accepting: Vec<bool>,
}

fn step(state: AcceptorState, l: DualLetter, k: usize) -> AcceptorState {
    let (last, flags) = match state {
        AcceptorState::Dead => return AcceptorState::Dead,
        AcceptorState::Start => {
            let flags = if l.positive { POS } else { NEG };
            return AcceptorState::Live { last: l, flags };
        }
        AcceptorState::Live { last, flags } => (last, flags),
    };
    if l == last.inverse() {
        return AcceptorState::Dead;
    }
    let mut flags = flags | if l.positive { POS } else { NEG };
    if last.positive && l.positive && l.index == succ(last.index, k) {
        flags |= DELTA;
    }
    if !last.positive && !l.positive && last.index == succ(l.index, k) {
        flags |= DELTA_INV;
    }
    let weight = |f: u8, single: u8, pair: u8| {
        if f & pair != 0 {
            2
        } else if f & single != 0 {
            1
        } else {
            0
        }
    };
    if weight(flags, POS, DELTA) + weight(flags, NEG, DELTA_INV) > 2 {
        AcceptorState::Dead
    } else {
        AcceptorState::Live { last: l, flags }
    }
}

impl GeodesicAcceptor {
    /// Builds the reachable part of the automaton from the start state.
    pub fn build(params: GroupParams) -> Self {
        let alphabet = DualLetter::all(params);
        let mut states = vec![AcceptorState::Start];
        let mut transitions: Vec<Vec<usize>> = Vec::new();
        let mut i = 0;
        while i < states.len() {
            let row = alphabet
                .iter()
                .map(|&l| {
                    let next = step(states[i], l, params.k());
                    states.iter().position(|&s| s == next).unwrap_or_else(|| {
                        states.push(next);
                        states.len() - 1
                    })
                })
                .collect();
            transitions.push(row);
            i += 1;
        }
        let accepting = states.iter().map(|&s| s != AcceptorState::Dead).collect();
        GeodesicAcceptor { params, alphabet, states, transitions, accepting }
    }

    pub fn params(&self) -> GroupParams {
        self.params
    }

    pub fn num_states(&self) -> usize {
        self.states.len()
    }

    pub fn states(&self) -> &[AcceptorState] {
        &self.states
    }

    pub fn accepts(&self, w: &DualWord) -> bool {
        let mut s = 0;
        for l in w.letters() {
            let j = self.alphabet.iter().position(|a| a == l).expect("letter of this group");
            s = self.transitions[s][j];
        }
        self.accepting[s]
    }

    /// Number of accepted words of each length `0..=n`, by iterating the
    /// state-count vector through the transition table.
    pub fn counts(&self, n: usize) -> Vec<BigUint> {
        let mut v = vec![BigUint::zero(); self.states.len()];
        v[0] = BigUint::from(1u32);
        let mut out = Vec::with_capacity(n + 1);
        for len in 0..=n {
            out.push(
                v.iter()
                    .zip(&self.accepting)
                    .filter(|(_, &a)| a)
                    .map(|(c, _)| c)
                    .sum(),
            );
            if len == n {
                break;
            }
            let mut next = vec![BigUint::zero(); self.states.len()];
            for (s, c) in v.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                for &t in &self.transitions[s] {
                    next[t] += c;
                }
            }
            v = next;
        }
        out
    }
}

pub fn build_acceptor(params: GroupParams) -> GeodesicAcceptor {
    GeodesicAcceptor::build(params)
}

pub fn count_via_acceptor(acceptor: &GeodesicAcceptor, n: usize) -> BigUint {
    acceptor.counts(n).pop().expect("at least one entry")
}

/// `a_0..=a_n` from the closed form.
pub fn closed_form_counts(params: GroupParams, n: usize) -> Vec<BigInt> {
    closed_form_growth(params).expand(n).expect("denominator has constant term 1")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k(n: usize) -> GroupParams {
        GroupParams::new(n).unwrap()
    }

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&c| BigInt::from(c)).collect()
    }

    #[test]
    fn closed_form_k3() {
        let s = closed_form_growth(k(3));
        assert_eq!(s.numerator, IntPolynomial::from_i64(&[1, -3, 2, -12]));
        let expected_den = &(&IntPolynomial::from_i64(&[1, -3]) * &IntPolynomial::from_i64(&[1, -4]))
            * &IntPolynomial::from_i64(&[1, -2]);
        assert_eq!(s.denominator, expected_den);
        assert_eq!(s.expand(3).unwrap(), ints(&[1, 6, 30, 126]));
    }

    #[test]
    fn first_coefficients_match_general_formula() {
        for kk in 3..=9i64 {
            let a = closed_form_counts(k(kk as usize), 3);
            let expected = [1, 2 * kk, 2 * (2 * kk * kk - kk), 2 * (kk.pow(3) + 3 * kk * (kk - 1).pow(2))];
            assert_eq!(a, ints(&expected), "k={kk}");
        }
    }

    #[test]
    fn component_expansions() {
        for kk in 3..=6i64 {
            let p = k(kk as usize);
            let e = |c| component_series(p, c).expand(3).unwrap();
            assert_eq!(e(Component::C20), ints(&[1, kk, kk * kk, kk.pow(3)]));
            assert_eq!(e(Component::C11), ints(&[1, 2 * kk, 2 * kk * (2 * kk - 2), 2 * kk * (2 * kk - 2).pow(2)]));
            assert_eq!(e(Component::C10), ints(&[1, kk, kk * (kk - 1), kk * (kk - 1).pow(2)]));
            assert_eq!(e(Component::C02), e(Component::C20));
            assert_eq!(e(Component::C01), e(Component::C10));
        }
    }

    #[test]
    fn inclusion_exclusion_matches_closed_form() {
        for kk in 3..=8 {
            let p = k(kk);
            assert!(inclusion_exclusion(p).same_function(&closed_form_growth(p)));
            assert_eq!(inclusion_exclusion(p).expand(12).unwrap(), closed_form_counts(p, 12));
        }
        assert_eq!(inclusion_exclusion(k(4)).expand(0).unwrap(), ints(&[1]));
        assert_eq!(inclusion_exclusion(k(5)).expand(1).unwrap()[1], BigInt::from(10));
    }

    #[test]
    fn enumeration_small() {
        assert_eq!(count_geodesics_enumeration(k(3), 0), 1);
        assert_eq!(count_geodesics_enumeration(k(3), 1), 6);
        assert_eq!(count_geodesics_enumeration(k(3), 3), 126);
    }

    #[test]
    fn acceptor_examples() {
        let a = build_acceptor(k(3));
        assert_eq!(count_via_acceptor(&a, 2), BigUint::from(30u32));
        assert_eq!(count_via_acceptor(&a, 0), BigUint::from(1u32));
        assert!(!a.accepts(&DualWord::parse("s1 s2 S3", k(3)).unwrap()));
        assert!(a.accepts(&DualWord::parse("s1 s2 s3", k(3)).unwrap()));
    }

    #[test]
    fn acceptor_language_equals_criterion_exhaustively() {
        let params = k(3);
        let a = build_acceptor(params);
        let alphabet = DualLetter::all(params);
        fn visit(w: &mut DualWord, left: usize, a: &GeodesicAcceptor, alphabet: &[DualLetter]) {
            assert_eq!(a.accepts(w), is_geodesic_dual(w, a.params()), "{w}");
            if left == 0 {
                return;
            }
            for &l in alphabet {
                w.push(l);
                visit(w, left - 1, a, alphabet);
                w.pop();
            }
        }
        visit(&mut DualWord::new(), 8, &a, &alphabet);
    }
}
