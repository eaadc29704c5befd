//! Brute-force ground truth: breadth-first search in the Cayley graph.
//!
//! Elements of a ball are keyed by the normal form of the presentation under
//! test. Every edge explored is also keyed by the normal form of the *other*
//! presentation (after converting the word), and the two partitions of words
//! into elements must agree; any disagreement is recorded as an audit
//! conflict instead of being silently merged.

use std::collections::HashMap;
use std::hash::Hash;

use crate::dual::{artin_to_dual, dual_to_artin, is_geodesic_dual, DualNormalForm};
use crate::error::{Error, Result};
use crate::garside::{is_geodesic_artin, ArtinNormalForm};
use crate::words::{ArtinLetter, ArtinWord, DualLetter, DualWord, Gens, GroupParams, Letter, Word};

/// Default element budget for [`CayleyBall::build`].
pub const DEFAULT_BUDGET: usize = 2_000_000;

/// A generating set together with the normal form used to identify elements.
pub trait Presentation {
    type Letter: Letter + Hash + Ord;
    type NormalForm: Clone + Eq + Hash;
    /// Element key computed through the other presentation.
    type AuditKey: Clone + Eq + Hash;

    const GENS: Gens;

    fn generators(params: GroupParams) -> Vec<Self::Letter>;
    fn identity(params: GroupParams) -> Self::NormalForm;
    fn multiply(nf: &Self::NormalForm, g: Self::Letter) -> Self::NormalForm;
    fn normal_form(w: &Word<Self::Letter>, params: GroupParams) -> Self::NormalForm;
    /// The closed-form word length being tested.
    fn formula_distance(nf: &Self::NormalForm) -> u64;
    fn is_geodesic(w: &Word<Self::Letter>, params: GroupParams) -> bool;
    fn audit_key(w: &Word<Self::Letter>, params: GroupParams) -> Self::AuditKey;
}

/// Artin generators `a, b, a⁻¹, b⁻¹`.
pub struct Artin;

/// Dual generators `σ_1, …, σ_k` and inverses.
pub struct Dual;

impl Presentation for Artin {
    type Letter = ArtinLetter;
    type NormalForm = ArtinNormalForm;
    type AuditKey = DualNormalForm;

    const GENS: Gens = Gens::Artin;

    fn generators(_params: GroupParams) -> Vec<ArtinLetter> {
        ArtinLetter::ALL.to_vec()
    }

    fn identity(params: GroupParams) -> ArtinNormalForm {
        ArtinNormalForm::identity(params)
    }

    fn multiply(nf: &ArtinNormalForm, g: ArtinLetter) -> ArtinNormalForm {
        nf.right_multiply(g)
    }

    fn normal_form(w: &ArtinWord, params: GroupParams) -> ArtinNormalForm {
        ArtinNormalForm::of_word(w, params)
    }

    fn formula_distance(nf: &ArtinNormalForm) -> u64 {
        nf.distance()
    }

    fn is_geodesic(w: &ArtinWord, params: GroupParams) -> bool {
        is_geodesic_artin(w, params)
    }

    fn audit_key(w: &ArtinWord, params: GroupParams) -> DualNormalForm {
        DualNormalForm::of_word(&artin_to_dual(w), params)
    }
}

impl Presentation for Dual {
    type Letter = DualLetter;
    type NormalForm = DualNormalForm;
    type AuditKey = ArtinNormalForm;

    const GENS: Gens = Gens::Dual;

    fn generators(params: GroupParams) -> Vec<DualLetter> {
        DualLetter::all(params)
    }

    fn identity(params: GroupParams) -> DualNormalForm {
        DualNormalForm::identity(params)
    }

    fn multiply(nf: &DualNormalForm, g: DualLetter) -> DualNormalForm {
        nf.right_multiply(g)
    }

    fn normal_form(w: &DualWord, params: GroupParams) -> DualNormalForm {
        DualNormalForm::of_word(w, params)
    }

    fn formula_distance(nf: &DualNormalForm) -> u64 {
        nf.distance()
    }

    fn is_geodesic(w: &DualWord, params: GroupParams) -> bool {
        is_geodesic_dual(w, params)
    }

    fn audit_key(w: &DualWord, params: GroupParams) -> ArtinNormalForm {
        ArtinNormalForm::of_word(&dual_to_artin(w), params)
    }
}

/// One element of a ball: its normal form, BFS distance and the first word
/// (in BFS order) that reached it.
#[derive(Debug, Clone)]
pub struct BallElement<P: Presentation> {
    pub key: P::NormalForm,
    pub distance: u32,
    pub word: Word<P::Letter>,
    audit: P::AuditKey,
}

/// Exact metric ball around the identity.
pub struct CayleyBall<P: Presentation> {
    params: GroupParams,
    radius: u32,
    generators: Vec<P::Letter>,
    elements: Vec<BallElement<P>>,
    index: HashMap<P::NormalForm, usize>,
    audit_conflicts: Vec<String>,
}

impl<P: Presentation> CayleyBall<P> {
    pub fn build(params: GroupParams, radius: u32) -> Result<Self> {
        Self::build_with(params, radius, P::generators(params), DEFAULT_BUDGET)
    }

    /// Level-synchronous BFS with the given generator order and element budget.
    pub fn build_with(
        params: GroupParams,
        radius: u32,
        generators: Vec<P::Letter>,
        budget: usize,
    ) -> Result<Self> {
        let identity = P::identity(params);
        let empty = Word::new();
        let mut ball = CayleyBall {
            params,
            radius,
            elements: vec![BallElement {
                key: identity.clone(),
                distance: 0,
                audit: P::audit_key(&empty, params),
                word: empty,
            }],
            generators,
            index: HashMap::from([(identity, 0)]),
            audit_conflicts: Vec::new(),
        };

        let mut level_start = 0;
        for d in 0..radius {
            let level_end = ball.elements.len();
            for i in level_start..level_end {
                for gi in 0..ball.generators.len() {
                    let g = ball.generators[gi];
                    let key = P::multiply(&ball.elements[i].key, g);
                    let mut word = ball.elements[i].word.clone();
                    word.push(g);
                    let audit = P::audit_key(&word, params);
                    match ball.index.get(&key) {
                        Some(&j) => {
                            if ball.elements[j].audit != audit {
                                ball.audit_conflicts.push(format!(
                                    "words `{}` and `{}` share a normal form but differ in the other presentation",
                                    ball.elements[j].word, word
                                ));
                            }
                        }
                        None => {
                            if ball.elements.len() >= budget {
                                return Err(Error::BudgetExceeded(budget));
                            }
                            ball.index.insert(key.clone(), ball.elements.len());
                            ball.elements.push(BallElement { key, distance: d + 1, word, audit });
                        }
                    }
                }
            }
            level_start = level_end;
        }

        // Distinct normal forms must stay distinct in the other presentation.
        let mut seen: HashMap<&P::AuditKey, usize> = HashMap::new();
        let mut extra = Vec::new();
        for (i, e) in ball.elements.iter().enumerate() {
            if let Some(&j) = seen.get(&e.audit) {
                extra.push(format!(
                    "words `{}` and `{}` have distinct normal forms but are equal in the other presentation",
                    ball.elements[j].word, e.word
                ));
            } else {
                seen.insert(&e.audit, i);
            }
        }
        ball.audit_conflicts.extend(extra);
        Ok(ball)
    }

    pub fn params(&self) -> GroupParams {
        self.params
    }

    pub fn radius(&self) -> u32 {
        self.radius
    }

    pub fn gens(&self) -> Gens {
        P::GENS
    }

    pub fn generators(&self) -> &[P::Letter] {
        &self.generators
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// Elements in BFS order.
    pub fn elements(&self) -> &[BallElement<P>] {
        &self.elements
    }

    pub fn distance_of(&self, key: &P::NormalForm) -> Option<u32> {
        self.index.get(key).map(|&i| self.elements[i].distance)
    }

    /// Normal-form disagreements found between the two presentations.
    pub fn audit_conflicts(&self) -> &[String] {
        &self.audit_conflicts
    }

    /// Number of elements at each distance `0..=radius`.
    pub fn sphere_sizes(&self) -> Vec<usize> {
        let mut sizes = vec![0; self.radius as usize + 1];
        for e in &self.elements {
            sizes[e.distance as usize] += 1;
        }
        sizes
    }

    /// Distance map keyed by normal form.
    pub fn distance_map(&self) -> HashMap<P::NormalForm, u32> {
        self.elements.iter().map(|e| (e.key.clone(), e.distance)).collect()
    }
}

/// Outcome of one verification pass.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Report {
    pub check: &'static str,
    pub checked: usize,
    pub failures: Vec<String>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    /// One machine-readable summary line.
    pub fn summary(&self) -> String {
        format!(
            "check={} checked={} failures={} result={}",
            self.check,
            self.checked,
            self.failures.len(),
            if self.passed() { "PASS" } else { "FAIL" }
        )
    }
}

/// Compares an arbitrary length formula with BFS distances on the ball.
pub fn verify_distance_with<P, F>(ball: &CayleyBall<P>, formula: F) -> Report
where
    P: Presentation,
    F: Fn(&P::NormalForm) -> u64,
{
    let mut failures: Vec<String> = ball
        .elements()
        .iter()
        .filter_map(|e| {
            let f = formula(&e.key);
            (f != u64::from(e.distance))
                .then(|| format!("word `{}`: formula {} but BFS {}", e.word, f, e.distance))
        })
        .collect();
    failures.extend(ball.audit_conflicts().iter().cloned());
    Report { check: "dist", checked: ball.len(), failures }
}

/// Closed-form distance against BFS, zero tolerance.
pub fn verify_distance_formula<P: Presentation>(ball: &CayleyBall<P>) -> Report {
    verify_distance_with(ball, P::formula_distance)
}

/// Calls `visit` on every freely reduced word of length `0..=max_len`.
pub fn for_each_freely_reduced<L: Letter, F: FnMut(&Word<L>)>(generators: &[L], max_len: usize, mut visit: F) {
    fn go<L: Letter, F: FnMut(&Word<L>)>(gens: &[L], max_len: usize, w: &mut Word<L>, visit: &mut F) {
        visit(w);
        if w.len() == max_len {
            return;
        }
        for &g in gens {
            if w.letters().last().is_some_and(|&l| l == g.inverse()) {
                continue;
            }
            w.push(g);
            go(gens, max_len, w, visit);
            w.pop();
        }
    }
    let mut w = Word::new();
    go(generators, max_len, &mut w, &mut visit);
}

/// Checks `criterion(u) ⟺ |u| = d(e, u)` for every freely reduced word of
/// length at most the ball's radius.
pub fn verify_geodesic_criterion<P: Presentation>(ball: &CayleyBall<P>) -> Report {
    let params = ball.params();
    let mut checked = 0;
    let mut failures = Vec::new();
    for_each_freely_reduced(ball.generators(), ball.radius() as usize, |u| {
        checked += 1;
        let key = P::normal_form(u, params);
        let Some(d) = ball.distance_of(&key) else {
            failures.push(format!("word `{u}` evaluates outside the ball"));
            return;
        };
        let criterion = P::is_geodesic(u, params);
        let realizes = u.len() == d as usize;
        if criterion != realizes {
            failures.push(format!(
                "word `{u}`: criterion says {criterion}, but |u| = {} and d = {d}",
                u.len()
            ));
        }
    });
    Report { check: "geo", checked, failures }
}

/// Checks the length-function axioms for the closed-form distance on the ball:
/// `l(e) = 0`, `|l(wg) - l(w)| <= 1`, and some generator decreases `l` at every `w != e`.
pub fn verify_length_axioms<P: Presentation>(ball: &CayleyBall<P>) -> Report {
    let params = ball.params();
    let mut failures = Vec::new();
    if P::formula_distance(&P::identity(params)) != 0 {
        failures.push("l(e) != 0".to_string());
    }
    for e in ball.elements() {
        let l = P::formula_distance(&e.key);
        let mut decreases = false;
        for &g in ball.generators() {
            let lg = P::formula_distance(&P::multiply(&e.key, g));
            if lg.abs_diff(l) > 1 {
                failures.push(format!("jump at `{}` with `{g}`: {l} -> {lg}", e.word));
            }
            decreases |= lg < l;
        }
        if l > 0 && !decreases {
            failures.push(format!("no descent at `{}`: no generator decreases {l}", e.word));
        }
    }
    Report { check: "axioms", checked: ball.len(), failures }
}
