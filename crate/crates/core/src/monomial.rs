//! Monomials, monomial ideals and monomial primes.
//!
//! A [`MonomialIdeal`] always stores its unique minimal generating set,
//! deduplicated and sorted in descending lexicographic order of exponent
//! vectors (so `x1*x3` precedes `x1*x4` precedes `x2*x3`).

use std::cmp::Ordering;
use std::fmt;

use serde::{Serialize, Serializer};

use crate::bits::{self, Mask, MAX_VERTICES};
use crate::error::{Error, Result};

/// A monomial `x1^e1 * ... * xn^en`, stored as its exponent vector.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    exps: Vec<u32>,
}

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        Monomial { exps }
    }

    pub fn one(n: usize) -> Self {
        Monomial { exps: vec![0; n] }
    }

    /// The variable `x_i`, 1-based.
    pub fn var(n: usize, i: usize) -> Self {
        let mut exps = vec![0; n];
        exps[i - 1] = 1;
        Monomial { exps }
    }

    /// Squarefree monomial `prod_{i in mask} x_i`.
    pub fn from_mask(n: usize, mask: Mask) -> Self {
        let exps = (1..=n).map(|i| u32::from(mask & bits::bit(i) != 0)).collect();
        Monomial { exps }
    }

    pub fn n(&self) -> usize {
        self.exps.len()
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    /// Exponent of `x_i`, 1-based.
    pub fn exponent(&self, i: usize) -> u32 {
        self.exps[i - 1]
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn is_squarefree(&self) -> bool {
        self.exps.iter().all(|&e| e <= 1)
    }

    pub fn support(&self) -> Mask {
        self.exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .fold(0, |m, (i, _)| m | (1 << i))
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial::new(self.exps.iter().zip(&other.exps).map(|(a, b)| a + b).collect())
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial::new(self.exps.iter().zip(&other.exps).map(|(a, b)| *a.max(b)).collect())
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        Monomial::new(self.exps.iter().zip(&other.exps).map(|(a, b)| *a.min(b)).collect())
    }

    /// `self / gcd(self, other)`.
    pub fn strip(&self, other: &Monomial) -> Monomial {
        Monomial::new(self.exps.iter().zip(&other.exps).map(|(a, b)| a.saturating_sub(*b)).collect())
    }

    /// Exact quotient, when `other` divides `self`.
    pub fn checked_div(&self, other: &Monomial) -> Option<Monomial> {
        other.divides(self).then(|| self.strip(other))
    }

    /// Squarefree part `prod_{e_i > 0} x_i`.
    pub fn radical(&self) -> Monomial {
        Monomial::new(self.exps.iter().map(|&e| u32::from(e > 0)).collect())
    }

    /// Every monomial dividing `self`, in lexicographic order of exponents.
    pub fn divisors(&self) -> Divisors<'_> {
        Divisors { bound: &self.exps, current: Some(vec![0; self.exps.len()]) }
    }
}

/// Iterator over the divisors of a monomial.
pub struct Divisors<'a> {
    bound: &'a [u32],
    current: Option<Vec<u32>>,
}

impl Iterator for Divisors<'_> {
    type Item = Monomial;

    fn next(&mut self) -> Option<Monomial> {
        let out = self.current.take()?;
        let mut next = out.clone();
        let mut i = next.len();
        let mut advanced = false;
        while i > 0 {
            i -= 1;
            if next[i] < self.bound[i] {
                next[i] += 1;
                advanced = true;
                break;
            }
            next[i] = 0;
        }
        if advanced {
            self.current = Some(next);
        }
        Some(Monomial::new(out))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        let mut first = true;
        for (i, &e) in self.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            write!(f, "x{}", i + 1)?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Monomial prime `P_F = (x_i : i in F)` for a non-empty `F`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct MonomialPrime {
    vars: Mask,
}

impl MonomialPrime {
    pub fn new(vars: Mask) -> Result<Self> {
        if vars == 0 {
            return Err(Error::InvalidSpec("a monomial prime needs at least one variable".into()));
        }
        Ok(MonomialPrime { vars })
    }

    pub fn from_vertices<I: IntoIterator<Item = usize>>(vs: I) -> Result<Self> {
        Self::new(bits::from_vertices(vs))
    }

    pub fn mask(&self) -> Mask {
        self.vars
    }

    pub fn height(&self) -> usize {
        bits::size(self.vars)
    }

    pub fn variables(&self) -> Vec<usize> {
        bits::vertices(self.vars)
    }

    pub fn to_ideal(&self, n: usize) -> MonomialIdeal {
        MonomialIdeal::prime(n, self.vars)
    }
}

impl Ord for MonomialPrime {
    fn cmp(&self, other: &Self) -> Ordering {
        bits::cmp_vertex_lists(self.vars, other.vars)
    }
}

impl PartialOrd for MonomialPrime {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for MonomialPrime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let vars: Vec<String> = self.variables().iter().map(|i| format!("x{i}")).collect();
        write!(f, "({})", vars.join(","))
    }
}

impl fmt::Debug for MonomialPrime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for MonomialPrime {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.variables().serialize(s)
    }
}

/// A proper monomial ideal of `k[x1..xn]`, held as its minimal generators.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    n: usize,
    gens: Vec<Monomial>,
}

impl MonomialIdeal {
    /// Minimizes `generators` into the canonical minimal generating set.
    pub fn new<I: IntoIterator<Item = Monomial>>(n: usize, generators: I) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidSpec("the ambient ring needs at least one variable".into()));
        }
        if n > MAX_VERTICES {
            return Err(Error::TooManyVariables { max: MAX_VERTICES, found: n });
        }
        let gens: Vec<Monomial> = generators.into_iter().collect();
        if let Some(bad) = gens.iter().find(|g| g.n() != n) {
            return Err(Error::AmbientMismatch { expected: n, found: bad.n() });
        }
        if gens.iter().any(Monomial::is_one) {
            return Err(Error::UnitIdeal);
        }
        Ok(MonomialIdeal { n, gens: minimize(gens) })
    }

    /// Builds from exponent rows; convenient in tests and examples.
    pub fn from_exponents(n: usize, rows: &[&[u32]]) -> Result<Self> {
        Self::new(n, rows.iter().map(|r| Monomial::new(r.to_vec())))
    }

    pub fn zero(n: usize) -> Self {
        MonomialIdeal { n, gens: Vec::new() }
    }

    /// `P_F` for the variables in `mask`.
    pub fn prime(n: usize, mask: Mask) -> Self {
        let gens = bits::vertices(mask).into_iter().map(|i| Monomial::var(n, i)).collect();
        MonomialIdeal { n, gens: minimize(gens) }
    }

    /// The homogeneous maximal ideal.
    pub fn maximal(n: usize) -> Self {
        Self::prime(n, bits::full(n))
    }

    /// Ideal generated by squarefree monomials given as masks.
    pub fn from_masks(n: usize, masks: &[Mask]) -> Result<Self> {
        Self::new(n, masks.iter().map(|&m| Monomial::from_mask(n, m)))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.is_zero()
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(m))
    }

    pub fn is_squarefree(&self) -> bool {
        self.gens.iter().all(Monomial::is_squarefree)
    }

    /// Supports of the generators, as masks. Meaningful for squarefree ideals.
    pub fn generator_masks(&self) -> Vec<Mask> {
        self.gens.iter().map(Monomial::support).collect()
    }

    pub fn support(&self) -> Mask {
        self.gens.iter().fold(0, |m, g| m | g.support())
    }

    pub fn is_full_supported(&self) -> bool {
        self.support() == bits::full(self.n)
    }

    /// Minimal generator degree; `None` for the zero ideal.
    pub fn indeg(&self) -> Option<u32> {
        self.gens.iter().map(Monomial::degree).min()
    }

    /// The common degree when all generators share one.
    pub fn generating_degree(&self) -> Option<u32> {
        let d = self.indeg()?;
        self.gens.iter().all(|g| g.degree() == d).then_some(d)
    }

    pub fn lcm(&self) -> Monomial {
        self.gens.iter().fold(Monomial::one(self.n), |acc, g| acc.lcm(g))
    }

    fn check_ambient(&self, other: &MonomialIdeal) -> Result<()> {
        if self.n != other.n {
            return Err(Error::AmbientMismatch { expected: self.n, found: other.n });
        }
        Ok(())
    }

    /// `I : m`. Fails with [`Error::UnitIdeal`] when `m` already lies in `I`.
    pub fn colon(&self, m: &Monomial) -> Result<MonomialIdeal> {
        if m.n() != self.n {
            return Err(Error::AmbientMismatch { expected: self.n, found: m.n() });
        }
        Self::new(self.n, self.gens.iter().map(|u| u.strip(m)))
    }

    pub fn intersect(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check_ambient(other)?;
        let mut lcms = Vec::with_capacity(self.gens.len() * other.gens.len());
        for u in &self.gens {
            for v in &other.gens {
                lcms.push(u.lcm(v));
            }
        }
        Ok(MonomialIdeal { n: self.n, gens: minimize(lcms) })
    }

    pub fn product(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check_ambient(other)?;
        let mut prods = Vec::with_capacity(self.gens.len() * other.gens.len());
        for u in &self.gens {
            for v in &other.gens {
                prods.push(u.mul(v));
            }
        }
        Ok(MonomialIdeal { n: self.n, gens: minimize(prods) })
    }

    pub fn sum(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check_ambient(other)?;
        let gens = self.gens.iter().chain(&other.gens).cloned().collect();
        Ok(MonomialIdeal { n: self.n, gens: minimize(gens) })
    }

    /// `I^k` for `k >= 1`.
    pub fn power(&self, k: u32) -> Result<MonomialIdeal> {
        if k == 0 {
            return Err(Error::UnitIdeal);
        }
        let mut acc = self.clone();
        for _ in 1..k {
            acc = acc.product(self)?;
        }
        Ok(acc)
    }

    pub fn radical(&self) -> MonomialIdeal {
        MonomialIdeal { n: self.n, gens: minimize(self.gens.iter().map(Monomial::radical).collect()) }
    }

    /// Squarefree ideal in more variables with the same graded Betti numbers.
    ///
    /// Variable `x_i` with maximal generator exponent `e_i` becomes
    /// `max(e_i, 1)` copies `x{i}_1..x{i}_{e_i}`; `x_i^a` maps to the product
    /// of the first `a` copies. Squarefree ideals are fixed points.
    pub fn polarize(&self) -> Result<Polarization> {
        let lcm = self.lcm();
        let mut copies = Vec::new();
        let mut offset = Vec::with_capacity(self.n);
        for i in 1..=self.n {
            offset.push(copies.len());
            for j in 1..=lcm.exponent(i).max(1) {
                copies.push((i, j));
            }
        }
        let new_n = copies.len();
        if new_n > MAX_VERTICES {
            return Err(Error::TooManyVariables { max: MAX_VERTICES, found: new_n });
        }
        let gens = self.gens.iter().map(|g| {
            let mut exps = vec![0; new_n];
            for (i, &e) in g.exponents().iter().enumerate() {
                for j in 0..e as usize {
                    exps[offset[i] + j] = 1;
                }
            }
            Monomial::new(exps)
        });
        let ideal = MonomialIdeal::new(new_n, gens)?;
        Ok(Polarization { original_n: self.n, ideal, copies })
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens: Vec<String> = self.gens.iter().map(|g| g.to_string()).collect();
        write!(f, "({})", gens.join(", "))
    }
}

impl fmt::Debug for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self} in {} variables", self.n)
    }
}

/// Result of [`MonomialIdeal::polarize`].
#[derive(Clone, Debug)]
pub struct Polarization {
    original_n: usize,
    pub ideal: MonomialIdeal,
    /// `(original variable, copy number)` for each new variable, both 1-based.
    pub copies: Vec<(usize, u32)>,
}

impl Polarization {
    pub fn new_n(&self) -> usize {
        self.copies.len()
    }

    /// Substitutes every copy back by its original variable.
    pub fn depolarize(&self) -> Result<MonomialIdeal> {
        let gens = self.ideal.generators().iter().map(|g| {
            let mut exps = vec![0; self.original_n];
            for (k, &e) in g.exponents().iter().enumerate() {
                exps[self.copies[k].0 - 1] += e;
            }
            Monomial::new(exps)
        });
        MonomialIdeal::new(self.original_n, gens)
    }

    /// Renders the polarized ideal with `x{i}_{j}` variable names.
    pub fn display(&self) -> String {
        let gens: Vec<String> = self
            .ideal
            .generators()
            .iter()
            .map(|g| {
                let names: Vec<String> = g
                    .exponents()
                    .iter()
                    .enumerate()
                    .filter(|(_, &e)| e > 0)
                    .map(|(k, _)| format!("x{}_{}", self.copies[k].0, self.copies[k].1))
                    .collect();
                names.join("*")
            })
            .collect();
        format!("({})", gens.join(", "))
    }
}

/// Divisibility-minimal subset of `gens`, sorted in descending lex order.
fn minimize(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort_unstable_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| a.cmp(b)));
    gens.dedup();
    // Distinct monomials of equal degree never divide each other, so each
    // candidate is only compared against strictly lower-degree survivors.
    let mut kept: Vec<(Monomial, Mask)> = Vec::with_capacity(gens.len());
    let mut level_start = 0;
    let mut level_degree = None;
    for g in gens {
        let d = g.degree();
        if level_degree != Some(d) {
            level_start = kept.len();
            level_degree = Some(d);
        }
        let supp = g.support();
        let divisible = kept[..level_start]
            .iter()
            .any(|(k, ks)| bits::is_subset(*ks, supp) && k.divides(&g));
        if !divisible {
            kept.push((g, supp));
        }
    }
    let mut out: Vec<Monomial> = kept.into_iter().map(|(g, _)| g).collect();
    out.sort_unstable_by(|a, b| b.cmp(a));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn ideal(n: usize, rows: &[&[u32]]) -> MonomialIdeal {
        MonomialIdeal::from_exponents(n, rows).unwrap()
    }

    /// All monomials of total degree at most `max_degree` in `n` variables.
    fn monomials_up_to(n: usize, max_degree: u32) -> Vec<Monomial> {
        let top = Monomial::new(vec![max_degree; n]);
        top.divisors().filter(|m| m.degree() <= max_degree).collect()
    }

    #[test]
    fn minimize_drops_multiples() {
        let i = ideal(3, &[&[1, 1, 0], &[1, 1, 1]]);
        assert_eq!(i.generators(), &[Monomial::new(vec![1, 1, 0])]);
    }

    #[test]
    fn minimize_keeps_antichain_in_lex_order() {
        let i = ideal(4, &[&[0, 1, 0, 1], &[1, 0, 1, 0], &[0, 1, 1, 0], &[1, 0, 0, 1]]);
        assert_eq!(i.to_string(), "(x1*x3, x1*x4, x2*x3, x2*x4)");
    }

    #[test]
    fn empty_generators_give_zero_ideal() {
        let i = MonomialIdeal::new(3, Vec::new()).unwrap();
        assert!(i.is_zero());
        assert_eq!(i.to_string(), "()");
    }

    #[test]
    fn unit_generator_is_rejected() {
        let err = MonomialIdeal::new(2, vec![Monomial::one(2)]).unwrap_err();
        assert_eq!(err, Error::UnitIdeal);
        let err = MonomialIdeal::new(2, vec![Monomial::var(3, 1)]).unwrap_err();
        assert!(matches!(err, Error::AmbientMismatch { .. }));
    }

    #[test]
    fn support_and_full_support() {
        let i = ideal(3, &[&[1, 1, 0], &[1, 0, 1]]);
        assert_eq!(i.support(), 0b111);
        assert!(i.is_full_supported());
        let j = ideal(3, &[&[1, 1, 0]]);
        assert_eq!(j.support(), 0b011);
        assert!(!j.is_full_supported());
        assert_eq!(MonomialIdeal::zero(3).support(), 0);
    }

    #[test]
    fn colon_examples() {
        let i = ideal(3, &[&[1, 1, 0], &[1, 0, 1]]);
        assert_eq!(i.colon(&Monomial::var(3, 1)).unwrap(), ideal(3, &[&[0, 1, 0], &[0, 0, 1]]));
        assert_eq!(i.colon(&Monomial::var(3, 2)).unwrap(), ideal(3, &[&[1, 0, 0]]));
        assert_eq!(i.colon(&Monomial::one(3)).unwrap(), i);
        assert_eq!(i.colon(&Monomial::new(vec![1, 1, 0])).unwrap_err(), Error::UnitIdeal);
    }

    #[test]
    fn colon_matches_membership_oracle() {
        // (I : x2) contains m iff m*x2 in I, checked on all monomials of degree <= 3.
        let i = ideal(3, &[&[1, 1, 0], &[1, 0, 1]]);
        let x2 = Monomial::var(3, 2);
        let colon = i.colon(&x2).unwrap();
        for m in monomials_up_to(3, 3) {
            assert_eq!(colon.contains(&m), i.contains(&m.mul(&x2)), "{m}");
        }
    }

    #[test]
    fn intersection_of_three_primes() {
        let p = |vs: &[usize]| MonomialIdeal::prime(5, bits::from_vertices(vs.iter().copied()));
        let i = p(&[1, 2, 3]).intersect(&p(&[3, 4, 5])).unwrap().intersect(&p(&[1, 2, 4, 5])).unwrap();
        assert_eq!(
            i.to_string(),
            "(x1*x3, x1*x4, x1*x5, x2*x3, x2*x4, x2*x5, x3*x4, x3*x5)"
        );
    }

    #[test]
    fn intersection_with_square_of_maximal_ideal() {
        let p12 = MonomialIdeal::prime(3, 0b011);
        let p23 = MonomialIdeal::prime(3, 0b110);
        let m2 = MonomialIdeal::maximal(3).power(2).unwrap();
        let i = p12.intersect(&p23).unwrap().intersect(&m2).unwrap();
        let expected = ideal(3, &[&[1, 1, 0], &[0, 2, 0], &[0, 1, 1], &[1, 0, 1]]);
        assert_eq!(i, expected);
        for m in monomials_up_to(3, 3) {
            let oracle = p12.contains(&m) && p23.contains(&m) && m2.contains(&m);
            assert_eq!(i.contains(&m), oracle, "{m}");
        }
        assert_eq!(i.intersect(&i).unwrap(), i);
    }

    #[test]
    fn product_examples() {
        let i = MonomialIdeal::prime(7, 0b0000111).product(&MonomialIdeal::prime(7, 0b1111000)).unwrap();
        assert_eq!(i.len(), 12);
        assert!(i.generators().iter().all(|g| g.degree() == 2 && g.is_squarefree()));

        let x1 = MonomialIdeal::prime(3, 0b001);
        let x2 = MonomialIdeal::prime(3, 0b010);
        let p13 = MonomialIdeal::prime(3, 0b101);
        let j = x1.product(&x2).unwrap().product(&p13).unwrap();
        assert_eq!(j, ideal(3, &[&[2, 1, 0], &[1, 1, 1]]));
        assert_eq!(j.power(1).unwrap(), j);
    }

    #[test]
    fn radical_examples() {
        let i = ideal(3, &[&[2, 1, 0], &[1, 1, 1]]);
        assert_eq!(i.radical(), ideal(3, &[&[1, 1, 0]]));
        let sq = ideal(3, &[&[1, 1, 0], &[0, 1, 1]]);
        assert_eq!(sq.radical(), sq);
        assert_eq!(MonomialIdeal::maximal(3).power(3).unwrap().radical(), MonomialIdeal::maximal(3));
    }

    #[test]
    fn polarization_examples() {
        let sq = ideal(3, &[&[1, 1, 0], &[0, 1, 1]]);
        let p = sq.polarize().unwrap();
        assert_eq!(p.new_n(), 3);
        assert_eq!(p.ideal, sq);

        let x1sq = ideal(1, &[&[2]]);
        let p = x1sq.polarize().unwrap();
        assert_eq!(p.new_n(), 2);
        assert_eq!(p.ideal, ideal(2, &[&[1, 1]]));
        assert_eq!(p.display(), "(x1_1*x1_2)");

        let zero = MonomialIdeal::zero(4).polarize().unwrap();
        assert_eq!(zero.new_n(), 4);
        assert!(zero.ideal.is_zero());
    }

    #[test]
    fn divisors_enumerates_box() {
        let m = Monomial::new(vec![2, 0, 1]);
        let ds: Vec<Monomial> = m.divisors().collect();
        assert_eq!(ds.len(), 6);
        assert!(ds.iter().all(|d| d.divides(&m)));
    }

    fn arb_ideal(max_n: usize, max_exp: u32) -> impl Strategy<Value = MonomialIdeal> {
        (1..=max_n).prop_flat_map(move |n| {
            proptest::collection::vec(proptest::collection::vec(0..=max_exp, n), 0..6).prop_map(move |rows| {
                let gens = rows.into_iter().map(Monomial::new).filter(|m| !m.is_one());
                MonomialIdeal::new(n, gens).unwrap()
            })
        })
    }

    proptest! {
        #[test]
        fn minimize_is_idempotent_and_order_free(i in arb_ideal(5, 3)) {
            let mut reversed: Vec<Monomial> = i.generators().to_vec();
            reversed.reverse();
            prop_assert_eq!(MonomialIdeal::new(i.n(), reversed).unwrap(), i.clone());
            prop_assert_eq!(MonomialIdeal::new(i.n(), i.generators().to_vec()).unwrap(), i);
        }

        #[test]
        fn operations_agree_with_membership(i in arb_ideal(4, 2), j_rows in proptest::collection::vec(proptest::collection::vec(0u32..=2, 4), 1..4)) {
            let n = i.n();
            let j = MonomialIdeal::new(n, j_rows.into_iter().map(|mut r| { r.truncate(n); r.resize(n, 0); Monomial::new(r) }).filter(|m| !m.is_one())).unwrap();
            let d = i.generators().iter().chain(j.generators()).map(Monomial::degree).max().unwrap_or(0) + 2;
            let inter = i.intersect(&j).unwrap();
            let prod = i.product(&j).unwrap();
            let all = monomials_up_to(n, d);
            for m in &all {
                prop_assert_eq!(inter.contains(m), i.contains(m) && j.contains(m));
                // m in IJ iff m = u*v*w with u in G(I), v in G(J).
                let in_prod = i.generators().iter().any(|u| j.generators().iter().any(|v| u.mul(v).divides(m)));
                prop_assert_eq!(prod.contains(m), in_prod);
            }
            if let Some(g) = j.generators().first() {
                match i.colon(g) {
                    Ok(c) => for m in &all { prop_assert_eq!(c.contains(m), i.contains(&m.mul(g))); },
                    Err(e) => { prop_assert_eq!(e, Error::UnitIdeal); prop_assert!(i.contains(g)); }
                }
            }
        }

        #[test]
        fn radical_is_idempotent(i in arb_ideal(5, 3)) {
            let r = i.radical();
            prop_assert!(r.is_squarefree());
            prop_assert_eq!(r.radical(), r);
        }

        #[test]
        fn polarization_is_squarefree_and_invertible(i in arb_ideal(4, 3)) {
            let p = i.polarize().unwrap();
            prop_assert!(p.ideal.is_squarefree());
            prop_assert_eq!(p.depolarize().unwrap(), i);
        }
    }
}
