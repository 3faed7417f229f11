//! Exhaustive and seeded random instance families.
//!
//! Exhaustive families come in a fixed order. With `up_to_symmetry` only
//! one representative per orbit of variable permutations is kept, namely the
//! one whose sorted encoding is lexicographically smallest.

use itertools::Itertools;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::bits::{self, Mask};
use crate::error::{Error, Result};
use crate::monomial::{Monomial, MonomialIdeal};
use crate::polymatroidal::{TransversalSpec, VeroneseSpec};
use crate::simplicial::{permute_mask, SimplicialComplex};

/// Largest vertex count for exhaustive complex and squarefree enumeration.
pub const MAX_EXHAUSTIVE_COMPLEX_N: usize = 5;
/// Largest variable count for exhaustive transversal enumeration.
pub const MAX_EXHAUSTIVE_TRANSVERSAL_N: usize = 6;

pub fn seeded(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    (1..=n).permutations(n).collect()
}

fn canonical_masks(masks: &[Mask], perms: &[Vec<usize>]) -> Vec<Mask> {
    perms
        .iter()
        .map(|p| {
            let mut v: Vec<Mask> = masks.iter().map(|&m| permute_mask(m, p)).collect();
            v.sort_unstable();
            v
        })
        .min()
        .expect("at least the identity permutation")
}

/// Non-decreasing sequences of length `d` drawn from `items`.
fn multisets<T: Copy>(items: &[T], d: usize) -> Vec<Vec<T>> {
    fn go<T: Copy>(items: &[T], start: usize, d: usize, prefix: &mut Vec<T>, out: &mut Vec<Vec<T>>) {
        if prefix.len() == d {
            out.push(prefix.clone());
            return;
        }
        for k in start..items.len() {
            prefix.push(items[k]);
            go(items, k, d, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(items, 0, d, &mut Vec::with_capacity(d), &mut out);
    out
}

fn binomial(n: u128, k: u128) -> u128 {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// Transversal specs on `n` variables with `d` factors, as unordered
/// collections of non-empty subsets.
pub fn transversal_specs(n: usize, d: usize, up_to_symmetry: bool) -> Result<Vec<TransversalSpec>> {
    if n == 0 || n > MAX_EXHAUSTIVE_TRANSVERSAL_N {
        return Err(Error::InvalidSpec(format!("exhaustive transversal enumeration needs 1 <= n <= {MAX_EXHAUSTIVE_TRANSVERSAL_N}")));
    }
    if d == 0 {
        return Err(Error::InvalidSpec("d must be at least 1".into()));
    }
    let subsets: Vec<Mask> = (1..=bits::full(n)).collect();
    let mut tuples = multisets(&subsets, d);
    if up_to_symmetry {
        let perms = permutations(n);
        tuples = tuples.into_par_iter().filter(|t| canonical_masks(t, &perms) == *t).collect();
    }
    tuples.into_iter().map(|t| TransversalSpec::new(n, t)).collect()
}

/// `C(2^n - 1 + d - 1, d)`: the size of [`transversal_specs`] without symmetry reduction.
pub fn transversal_count(n: usize, d: usize) -> u128 {
    let subsets = (1u128 << n) - 1;
    binomial(subsets + d as u128 - 1, d as u128)
}

/// All transversal specs with `n` in `1..=n_max` and `d` in `d_range`.
pub fn transversal_family(
    n_max: usize,
    d_range: std::ops::RangeInclusive<usize>,
    up_to_symmetry: bool,
) -> Result<Vec<TransversalSpec>> {
    let mut out = Vec::new();
    for n in 1..=n_max {
        for d in d_range.clone() {
            out.extend(transversal_specs(n, d, up_to_symmetry)?);
        }
    }
    Ok(out)
}

/// Veronese specs `(d; a)` with `a ∈ [1, d]^n` and `Σ a >= d`. With
/// symmetry reduction `a` is non-decreasing.
pub fn veronese_specs(n: usize, d: u32, up_to_symmetry: bool) -> Result<Vec<VeroneseSpec>> {
    if n == 0 || n > bits::MAX_VERTICES || d == 0 {
        return Err(Error::InvalidSpec("Veronese enumeration needs n >= 1 and d >= 1".into()));
    }
    let bounds: Vec<u32> = (1..=d).collect();
    let vectors: Vec<Vec<u32>> = if up_to_symmetry {
        multisets(&bounds, n)
    } else {
        std::iter::repeat(bounds.iter().copied()).take(n).multi_cartesian_product().collect()
    };
    vectors
        .into_iter()
        .filter(|a| a.iter().sum::<u32>() >= d)
        .map(|a| VeroneseSpec::new(d, a))
        .collect()
}

/// `d^n - C(d - 1, n)`: bound vectors minus those summing below `d`.
pub fn veronese_count(n: usize, d: u32) -> u128 {
    u128::from(d).pow(n as u32) - binomial(u128::from(d) - 1, n as u128)
}

pub fn veronese_family(n_max: usize, d_range: std::ops::RangeInclusive<u32>, up_to_symmetry: bool) -> Result<Vec<VeroneseSpec>> {
    let mut out = Vec::new();
    for n in 1..=n_max {
        for d in d_range.clone() {
            out.extend(veronese_specs(n, d, up_to_symmetry)?);
        }
    }
    Ok(out)
}

/// Antichains of subsets of `candidates`, each as a sorted mask list.
fn antichains(candidates: &[Mask]) -> Vec<Vec<Mask>> {
    fn go(candidates: &[Mask], start: usize, chosen: &mut Vec<Mask>, out: &mut Vec<Vec<Mask>>) {
        out.push(chosen.clone());
        for k in start..candidates.len() {
            let c = candidates[k];
            if chosen.iter().all(|&f| !bits::is_subset(f, c) && !bits::is_subset(c, f)) {
                chosen.push(c);
                go(candidates, k + 1, chosen, out);
                chosen.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(candidates, 0, &mut Vec::new(), &mut out);
    out
}

fn checked_complex_n(n: usize) -> Result<()> {
    if n == 0 || n > MAX_EXHAUSTIVE_COMPLEX_N {
        return Err(Error::InvalidSpec(format!("exhaustive complex enumeration needs 1 <= n <= {MAX_EXHAUSTIVE_COMPLEX_N}")));
    }
    Ok(())
}

fn symmetry_filter(sets: Vec<Vec<Mask>>, n: usize, up_to_symmetry: bool) -> Vec<Vec<Mask>> {
    if !up_to_symmetry {
        return sets;
    }
    let perms = permutations(n);
    sets.into_par_iter().filter(|s| canonical_masks(s, &perms) == *s).collect()
}

/// Every non-void complex on vertex set `[n]`; vertices need not occur in a face.
pub fn all_complexes(n: usize, up_to_symmetry: bool) -> Result<Vec<SimplicialComplex>> {
    checked_complex_n(n)?;
    let subsets: Vec<Mask> = (0..=bits::full(n)).collect();
    let facet_sets: Vec<Vec<Mask>> = antichains(&subsets).into_iter().filter(|a| !a.is_empty()).collect();
    symmetry_filter(facet_sets, n, up_to_symmetry)
        .into_iter()
        .map(|fs| SimplicialComplex::from_facets(n, fs))
        .collect()
}

/// Dedekind numbers minus one for the empty antichain (the void complex).
pub fn complex_count(n: usize) -> Option<u128> {
    [2u128, 3, 6, 20, 168, 7581, 7828354].get(n).map(|m| m - 1)
}

pub fn complex_family(n_max: usize, up_to_symmetry: bool) -> Result<Vec<SimplicialComplex>> {
    (1..=n_max).map(|n| all_complexes(n, up_to_symmetry)).flatten_ok().collect()
}

/// Every non-zero proper squarefree ideal on `n` variables.
pub fn all_squarefree_ideals(n: usize, up_to_symmetry: bool) -> Result<Vec<MonomialIdeal>> {
    checked_complex_n(n)?;
    let subsets: Vec<Mask> = (1..=bits::full(n)).collect();
    let generator_sets: Vec<Vec<Mask>> = antichains(&subsets).into_iter().filter(|a| !a.is_empty()).collect();
    symmetry_filter(generator_sets, n, up_to_symmetry)
        .into_iter()
        .map(|gs| MonomialIdeal::from_masks(n, &gs))
        .collect()
}

/// Dedekind numbers minus the empty antichain and `{∅}`.
pub fn squarefree_count(n: usize) -> Option<u128> {
    complex_count(n).map(|c| c - 1)
}

pub fn squarefree_family(n_max: usize, up_to_symmetry: bool) -> Result<Vec<MonomialIdeal>> {
    (1..=n_max).map(|n| all_squarefree_ideals(n, up_to_symmetry)).flatten_ok().collect()
}

fn random_mask<R: Rng>(rng: &mut R, n: usize) -> Mask {
    rng.gen_range(1..=bits::full(n))
}

/// A random non-zero proper squarefree ideal with `2 <= n <= n_max` and
/// up to six generators.
pub fn random_squarefree_ideal<R: Rng>(rng: &mut R, n_max: usize) -> MonomialIdeal {
    let n = rng.gen_range(2..=n_max.max(2));
    let k = rng.gen_range(1..=6);
    let gens: Vec<Mask> = (0..k).map(|_| random_mask(rng, n)).collect();
    MonomialIdeal::from_masks(n, &gens).expect("non-empty supports")
}

/// A random non-void complex with `1 <= n <= n_max` and up to six facets.
pub fn random_complex<R: Rng>(rng: &mut R, n_max: usize) -> SimplicialComplex {
    let n = rng.gen_range(1..=n_max.max(1));
    let k = rng.gen_range(1..=6);
    let facets: Vec<Mask> = (0..k).map(|_| rng.gen_range(0..=bits::full(n))).collect();
    SimplicialComplex::from_facets(n, facets).expect("masks within n")
}

pub fn random_transversal<R: Rng>(rng: &mut R, n_max: usize, d_max: usize) -> TransversalSpec {
    let n = rng.gen_range(1..=n_max.max(1));
    let d = rng.gen_range(1..=d_max.max(1));
    TransversalSpec::new(n, (0..d).map(|_| random_mask(rng, n)).collect()).expect("non-empty factors within n")
}

/// Monomials with pairwise disjoint supports: the variables of a random
/// subset are dealt into `r` non-empty blocks with exponents in `1..=3`.
pub fn random_coprime_family<R: Rng>(rng: &mut R, n_max: usize) -> (usize, Vec<Monomial>) {
    let n = rng.gen_range(1..=n_max.max(1));
    let mut vars: Vec<usize> = (1..=n).collect();
    vars.shuffle(rng);
    vars.truncate(rng.gen_range(1..=n));
    let r = rng.gen_range(1..=vars.len());
    let mut cuts: Vec<usize> = (1..vars.len()).collect();
    cuts.shuffle(rng);
    let mut cuts: Vec<usize> = cuts.into_iter().take(r - 1).collect();
    cuts.sort_unstable();
    cuts.push(vars.len());
    let mut start = 0;
    let mut out = Vec::with_capacity(r);
    for end in cuts {
        let mut exps = vec![0u32; n];
        for &v in &vars[start..end] {
            exps[v - 1] = rng.gen_range(1..=3);
        }
        out.push(Monomial::new(exps));
        start = end;
    }
    (n, out)
}

/// `count` random instances from one seed, in generation order.
pub fn sample<T, R: Rng>(rng: &mut R, count: usize, mut f: impl FnMut(&mut R) -> T) -> Vec<T> {
    (0..count).map(|_| f(rng)).collect()
}
