//! Random samplers shared by the integration tests.
#![allow(dead_code)]

use dihedral_artin::dual_horo::{DualOmegaPoint, DualZWord};
use dihedral_artin::extended::ExtendedInt;
use dihedral_artin::garside::CanonicalFactor;
use dihedral_artin::horo::{OmegaPoint, RunCount, Tail, ZWord};
use dihedral_artin::words::{ArtinLetter, ArtinWord, Base, DualLetter, DualWord, GroupParams};
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::Rng;

pub fn params(k: usize) -> GroupParams {
    GroupParams::new(k).unwrap()
}

pub fn random_artin_word(rng: &mut StdRng, max_len: usize) -> ArtinWord {
    let n = rng.gen_range(0..=max_len);
    (0..n).map(|_| *ArtinLetter::ALL.choose(rng).unwrap()).collect()
}

pub fn random_dual_word(rng: &mut StdRng, max_len: usize, params: GroupParams) -> DualWord {
    let letters = DualLetter::all(params);
    let n = rng.gen_range(0..=max_len);
    (0..n).map(|_| *letters.choose(rng).unwrap()).collect()
}

fn random_base(rng: &mut StdRng) -> Base {
    if rng.gen() {
        Base::A
    } else {
        Base::B
    }
}

/// `count` runs, each starting with the last letter of the previous one.
fn random_runs(rng: &mut StdRng, count: usize, mut start: Base, k: usize) -> Vec<CanonicalFactor> {
    let mut runs = Vec::with_capacity(count);
    for _ in 0..count {
        let f = CanonicalFactor { start, len: rng.gen_range(1..k) };
        start = f.last();
        runs.push(f);
    }
    runs
}

pub fn random_finite_z(rng: &mut StdRng, max_runs: usize, params: GroupParams) -> ZWord {
    let count = rng.gen_range(0..=max_runs);
    let start = random_base(rng);
    ZWord::from_runs(random_runs(rng, count, start, params.k()), Tail::Finite, params).unwrap()
}

/// An eventually periodic word; the cycle closes on a repeated letter.
pub fn random_periodic_z(rng: &mut StdRng, params: GroupParams) -> ZWord {
    let k = params.k();
    let start = random_base(rng);
    let prefix_len = rng.gen_range(0..=3);
    let mut runs = random_runs(rng, prefix_len, start, k);
    let cycle_start = runs.len();
    let cycle_base = runs.last().map_or(start, |f| f.last());
    let cycle_len = rng.gen_range(1..=3);
    let mut cycle = random_runs(rng, cycle_len, cycle_base, k);
    let last = cycle.last_mut().unwrap();
    if last.last() != cycle_base {
        // Flip the parity of the final run's length so it ends on the cycle's first letter.
        last.len = if last.len + 1 < k { last.len + 1 } else { last.len - 1 };
    }
    runs.extend(cycle);
    ZWord::from_runs(runs, Tail::Periodic { cycle_start }, params).unwrap()
}

pub fn random_dual_z(rng: &mut StdRng, len: usize, tail: Tail, params: GroupParams) -> DualZWord {
    let k = params.k();
    loop {
        let mut letters: Vec<usize> = Vec::with_capacity(len);
        for _ in 0..len {
            let i = loop {
                let i = rng.gen_range(1..=k);
                if letters.last().is_none_or(|&l| i != l % k + 1) {
                    break i;
                }
            };
            letters.push(i);
        }
        if let Ok(z) = DualZWord::new(letters, tail, params) {
            return z;
        }
    }
}

/// Shapes of `p`: a block of `−∞`, a block of finite values, a block of `+∞`.
fn shapes(k: usize) -> Vec<(usize, usize, usize)> {
    let mut out = Vec::new();
    for neg in 0..=k {
        for fin in 0..=k - neg {
            let pos = k - neg - fin;
            if neg < k && pos < k && fin < k {
                out.push((neg, fin, pos));
            }
        }
    }
    out
}

fn count_is_infinite(z: &ZWord, len: usize) -> bool {
    z.count(len) == RunCount::Infinite
}

fn finite_count(z: &ZWord, len: usize) -> Option<i64> {
    match z.count(len) {
        RunCount::Exact(c) => Some(c as i64),
        _ => None,
    }
}

/// A boundary point whose finite gaps equal the run counts of `z`, or with
/// one finite gap enlarged by `extra` when `extra > 0`. Returns `None` when
/// `z` admits no point of the requested kind.
pub fn boundary_point(rng: &mut StdRng, z: &ZWord, extra: i64) -> Option<OmegaPoint> {
    let k = z.params().k();
    let mut candidates = Vec::new();
    for (neg, fin, pos) in shapes(k) {
        // Every jump between blocks needs infinitely many runs of that length.
        let jumps: Vec<usize> = [neg, neg + fin].into_iter().filter(|&i| i > 0 && i < k).collect();
        let jumps_ok = jumps.iter().all(|&i| count_is_infinite(z, k - i));
        let inner_ok = (neg + 1..neg + fin).all(|i| finite_count(z, k - i).is_some());
        if jumps_ok && inner_ok && (extra == 0 || fin >= 2) {
            candidates.push((neg, fin, pos));
        }
    }
    let &(neg, fin, _) = candidates.choose(rng)?;
    let bumped = (extra > 0).then(|| rng.gen_range(neg + 1..neg + fin));
    let mut p = vec![ExtendedInt::NEG_INF; k];
    let mut value = rng.gen_range(-6..=6);
    for (i, slot) in p.iter_mut().enumerate().skip(neg) {
        if i >= neg + fin {
            *slot = ExtendedInt::POS_INF;
            continue;
        }
        if i > neg {
            value += finite_count(z, k - i).unwrap();
            if Some(i) == bumped {
                value += extra;
            }
        }
        *slot = ExtendedInt::finite(value);
    }
    OmegaPoint::new(p, z.clone()).ok()
}

/// A generic dual boundary point: `(−∞, c)`, `(c, +∞)` or `(−∞, +∞)`.
pub fn dual_boundary_point(rng: &mut StdRng, params: GroupParams) -> DualOmegaPoint {
    let prefix = rng.gen_range(0..=3);
    let cycle = rng.gen_range(1..=4);
    let z = random_dual_z(rng, prefix + cycle, Tail::Periodic { cycle_start: prefix }, params);
    let c = ExtendedInt::finite(rng.gen_range(-6..=6));
    let p = match rng.gen_range(0..3) {
        0 => vec![ExtendedInt::NEG_INF, c],
        1 => vec![c, ExtendedInt::POS_INF],
        _ => vec![ExtendedInt::NEG_INF, ExtendedInt::POS_INF],
    };
    DualOmegaPoint::new(p, z).unwrap()
}
