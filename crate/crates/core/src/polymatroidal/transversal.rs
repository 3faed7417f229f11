use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::bits::{self, Mask};
use crate::error::{Error, Result};
use crate::monomial::{Monomial, MonomialIdeal, MonomialPrime};

/// `I = P_{F_1} ⋯ P_{F_d}` over `n` variables. Factors keep their input order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TransversalSpec {
    n: usize,
    sets: Vec<Mask>,
}

impl TransversalSpec {
    pub fn new(n: usize, sets: Vec<Mask>) -> Result<Self> {
        if n == 0 || n > bits::MAX_VERTICES {
            return Err(Error::InvalidSpec(format!("variable count {n} outside 1..={}", bits::MAX_VERTICES)));
        }
        if sets.is_empty() {
            return Err(Error::InvalidSpec("a transversal ideal needs at least one factor".into()));
        }
        for &s in &sets {
            if s == 0 {
                return Err(Error::InvalidSpec("empty factor".into()));
            }
            if !bits::is_subset(s, bits::full(n)) {
                return Err(Error::InvalidSpec(format!("factor {} exceeds {n} variables", bits::format_set(s))));
            }
        }
        Ok(TransversalSpec { n, sets })
    }

    pub fn from_vertex_lists(n: usize, sets: &[&[usize]]) -> Result<Self> {
        Self::new(n, sets.iter().map(|s| bits::from_vertices(s.iter().copied())).collect())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn sets(&self) -> &[Mask] {
        &self.sets
    }

    /// Number of factors `d`, which is also the generating degree.
    pub fn d(&self) -> usize {
        self.sets.len()
    }

    pub fn union(&self) -> Mask {
        self.sets.iter().fold(0, |a, &s| a | s)
    }

    pub fn is_full_supported(&self) -> bool {
        self.union() == bits::full(self.n)
    }

    pub fn ideal(&self) -> MonomialIdeal {
        self.sets
            .iter()
            .map(|&s| MonomialIdeal::prime(self.n, s))
            .reduce(|acc, p| acc.product(&p).expect("same ambient ring"))
            .expect("at least one factor")
    }

    /// Adjacency masks of `G_I` on factor indices `0..d`: `i ~ j` iff
    /// `F_i ∩ F_j ≠ ∅` for `i ≠ j`.
    pub fn graph(&self) -> Vec<u64> {
        let d = self.d();
        (0..d)
            .map(|i| (0..d).filter(|&j| j != i && self.sets[i] & self.sets[j] != 0).fold(0, |m, j| m | (1 << j)))
            .collect()
    }

    /// Connected components of `G_I`, as masks over factor indices.
    pub fn component_masks(&self) -> Vec<u64> {
        let adj = self.graph();
        let mut seen = 0u64;
        let mut out = Vec::new();
        for start in 0..self.d() {
            if seen & (1 << start) != 0 {
                continue;
            }
            let comp = closure(&adj, 1 << start, u64::MAX);
            seen |= comp;
            out.push(comp);
        }
        out
    }

    /// `c(G_I)`.
    pub fn components(&self) -> usize {
        self.component_masks().len()
    }

    pub fn to_json(&self) -> TransversalJson {
        TransversalJson { n: self.n, sets: self.sets.iter().map(|&s| bits::vertices(s)).collect() }
    }

    pub fn from_json(json: &TransversalJson) -> Result<Self> {
        for set in &json.sets {
            if let Some(&v) = set.iter().find(|&&v| v == 0 || v > json.n) {
                return Err(Error::Parse(format!("variable {v} outside 1..={}", json.n)));
            }
        }
        Self::new(json.n, json.sets.iter().map(|s| bits::from_vertices(s.iter().copied())).collect())
    }
}

/// Vertices reachable from `start` inside `allowed`.
fn closure(adj: &[u64], start: u64, allowed: u64) -> u64 {
    let mut reached = start;
    loop {
        let mut next = reached;
        for (i, &nbrs) in adj.iter().enumerate() {
            if reached & (1 << i) != 0 {
                next |= nbrs & allowed;
            }
        }
        if next == reached {
            return reached;
        }
        reached = next;
    }
}

/// Non-empty factor subsets inducing a connected subgraph of `G_I`.
fn connected_subsets(spec: &TransversalSpec) -> impl Iterator<Item = u64> + '_ {
    let adj = spec.graph();
    let all = if spec.d() == 64 { u64::MAX } else { (1u64 << spec.d()) - 1 };
    bits::submasks(all).filter(move |&s| s != 0 && closure(&adj, s & s.wrapping_neg(), s) == s)
}

/// For each associated prime `P = P_{∪_{i∈S} F_i}` (`S` connected in `G_I`),
/// the largest `|S|` producing it.
fn prime_weights(spec: &TransversalSpec) -> BTreeMap<MonomialPrime, u32> {
    let mut out: BTreeMap<MonomialPrime, u32> = BTreeMap::new();
    for s in connected_subsets(spec) {
        let union = bits::vertices(s).into_iter().fold(0, |m, i| m | spec.sets[i - 1]);
        let w = out.entry(MonomialPrime::new(union).expect("non-empty")).or_insert(0);
        *w = (*w).max(s.count_ones());
    }
    out
}

/// `Ass(I)`: the primes `P_{∪_{i∈S} F_i}` over connected vertex sets `S`
/// of `G_I`. A tree only contributes through its vertex set, and every
/// connected vertex set carries a spanning tree, so enumerating connected
/// subsets covers all trees without repetition.
pub fn transversal_ass(spec: &TransversalSpec) -> Vec<MonomialPrime> {
    prime_weights(spec).into_keys().collect()
}

/// `c(G_I) - 1 + n - |∪ F_i|`.
pub fn transversal_depth(spec: &TransversalSpec) -> usize {
    spec.components() - 1 + spec.n - bits::size(spec.union())
}

/// `n - min |F_i|`.
pub fn transversal_dim(spec: &TransversalSpec) -> usize {
    spec.n - spec.sets.iter().map(|&s| bits::size(s)).min().expect("at least one factor")
}

/// Closed-form aCM test from the depth and dimension formulas:
/// `c(G_I) >= |∪ F_i| - min |F_i|`.
pub fn transversal_is_acm(spec: &TransversalSpec) -> bool {
    transversal_depth(spec) + 1 >= transversal_dim(spec)
}

/// `I^k = ∩ P^{k·a(P)}` with `a(P)` the largest connected factor set giving `P`.
pub fn transversal_power_decomposition(spec: &TransversalSpec, k: u32) -> Result<Vec<(MonomialPrime, u32)>> {
    if k == 0 {
        return Err(Error::InvalidSpec("power must be at least 1".into()));
    }
    Ok(prime_weights(spec).into_iter().map(|(p, w)| (p, k * w)).collect())
}

/// `∩ P_j^{e_j}`. Intersecting with `P^e` keeps generators already inside
/// and pads the others by every monomial of the missing `P`-degree.
pub fn intersect_prime_powers(n: usize, powers: &[(MonomialPrime, u32)]) -> Result<MonomialIdeal> {
    let mut gens = vec![Monomial::one(n)];
    for (p, e) in powers {
        let vars = p.variables();
        let mut next = Vec::new();
        for g in &gens {
            let have: u32 = vars.iter().map(|&v| g.exponent(v)).sum();
            if have >= *e {
                next.push(g.clone());
            } else {
                pad(g, &vars, e - have, &mut next);
            }
        }
        gens = MonomialIdeal::new(n, next)?.generators().to_vec();
    }
    MonomialIdeal::new(n, gens)
}

fn pad(g: &Monomial, vars: &[usize], missing: u32, out: &mut Vec<Monomial>) {
    fn go(exps: &mut Vec<u32>, vars: &[usize], missing: u32, out: &mut Vec<Monomial>) {
        match vars.split_first() {
            None => {
                if missing == 0 {
                    out.push(Monomial::new(exps.clone()));
                }
            }
            Some((&v, rest)) => {
                let lo = if rest.is_empty() { missing } else { 0 };
                for e in lo..=missing {
                    exps[v - 1] += e;
                    go(exps, rest, missing - e, out);
                    exps[v - 1] -= e;
                }
            }
        }
    }
    go(&mut g.exponents().to_vec(), vars, missing, out);
}

/// Expands the decomposition and compares it with `I^k` as ideals.
pub fn power_decomposition_holds(spec: &TransversalSpec, k: u32) -> Result<bool> {
    let decomposition = transversal_power_decomposition(spec, k)?;
    Ok(intersect_prime_powers(spec.n, &decomposition)? == spec.ideal().power(k)?)
}

impl fmt::Display for TransversalSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sets: Vec<String> = self.sets.iter().map(|&s| bits::format_set(s)).collect();
        write!(f, "T(n={}; {})", self.n, sets.join(","))
    }
}

/// JSON form `{"n":4,"sets":[[1,2],[3,4]]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TransversalJson {
    pub n: usize,
    pub sets: Vec<Vec<usize>>,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::invariants::{ass_brute_force, depth_dim_pd};
    use crate::linalg::Field;
    use crate::polymatroidal::is_polymatroidal;
    use proptest::prelude::*;

    fn spec(n: usize, sets: &[&[usize]]) -> TransversalSpec {
        TransversalSpec::from_vertex_lists(n, sets).unwrap()
    }

    fn primes(ps: &[MonomialPrime]) -> Vec<Vec<usize>> {
        ps.iter().map(MonomialPrime::variables).collect()
    }

    #[test]
    fn graph_components() {
        assert_eq!(spec(7, &[&[1, 2, 3], &[4, 5, 6, 7]]).components(), 2);
        let s = spec(3, &[&[1], &[2], &[1, 3]]);
        assert_eq!(s.graph(), vec![0b100, 0, 0b001]);
        assert_eq!(s.components(), 2);
        assert_eq!(spec(3, &[&[1, 2]]).components(), 1);
    }

    #[test]
    fn ass_examples() {
        let s = spec(3, &[&[1, 2], &[2, 3]]);
        assert_eq!(primes(&transversal_ass(&s)), vec![vec![1, 2], vec![1, 2, 3], vec![2, 3]]);
        assert_eq!(transversal_ass(&s), ass_brute_force(&s.ideal()).unwrap());
        assert_eq!(primes(&transversal_ass(&spec(7, &[&[1, 2, 3], &[4, 5, 6, 7]]))), vec![vec![1, 2, 3], vec![4, 5, 6, 7]]);
        assert_eq!(primes(&transversal_ass(&spec(4, &[&[2, 4]]))), vec![vec![2, 4]]);
    }

    #[test]
    fn depth_and_dim_formulas() {
        let s = spec(7, &[&[1, 2, 3], &[4, 5, 6, 7]]);
        assert_eq!((transversal_depth(&s), transversal_dim(&s)), (1, 4));
        let s = spec(3, &[&[1], &[2], &[1, 3]]);
        assert_eq!((transversal_depth(&s), transversal_dim(&s)), (1, 2));
        assert_eq!(s.ideal().to_string(), "(x1^2*x2, x1*x2*x3)");
        let s = spec(4, &[&[1, 2], &[3, 4]]);
        assert_eq!((transversal_depth(&s), transversal_dim(&s)), (1, 2));
    }

    #[test]
    fn power_decompositions() {
        let s = spec(3, &[&[1, 2], &[2, 3]]);
        let dec = transversal_power_decomposition(&s, 1).unwrap();
        let shown: Vec<(Vec<usize>, u32)> = dec.iter().map(|(p, e)| (p.variables(), *e)).collect();
        assert_eq!(shown, vec![(vec![1, 2], 1), (vec![1, 2, 3], 2), (vec![2, 3], 1)]);
        assert_eq!(intersect_prime_powers(3, &dec).unwrap().to_string(), "(x1*x2, x1*x3, x2^2, x2*x3)");
        assert!(power_decomposition_holds(&s, 1).unwrap());
        assert!(power_decomposition_holds(&spec(4, &[&[1, 2], &[3, 4]]), 2).unwrap());
        assert!(power_decomposition_holds(&spec(3, &[&[1, 3]]), 3).unwrap());
    }

    #[test]
    fn intersect_prime_powers_matches_pairwise_intersection() {
        let p = MonomialPrime::from_vertices([1, 2]).unwrap();
        let q = MonomialPrime::from_vertices([2, 3]).unwrap();
        let direct = MonomialIdeal::prime(3, p.mask())
            .power(2)
            .unwrap()
            .intersect(&MonomialIdeal::prime(3, q.mask()).power(3).unwrap())
            .unwrap();
        assert_eq!(intersect_prime_powers(3, &[(p, 2), (q, 3)]).unwrap(), direct);
    }

    fn arb_spec(max_n: usize, max_d: usize) -> impl Strategy<Value = TransversalSpec> {
        (1..=max_n).prop_flat_map(move |n| {
            proptest::collection::vec(1..(1u64 << n), 1..=max_d).prop_map(move |sets| TransversalSpec::new(n, sets).unwrap())
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]
        #[test]
        fn closed_forms_match_pipeline(s in arb_spec(5, 3)) {
            let i = s.ideal();
            prop_assert!(is_polymatroidal(&i));
            let c = depth_dim_pd(&i, Field::RATIONALS);
            prop_assert_eq!(transversal_depth(&s), c.depth);
            prop_assert_eq!(transversal_dim(&s), c.dim);
            prop_assert_eq!(transversal_is_acm(&s), c.is_acm());
            prop_assert_eq!(transversal_ass(&s), ass_brute_force(&i).unwrap());
            prop_assert!(power_decomposition_holds(&s, 2).unwrap());
        }
    }
}
