use std::fmt;

use serde::{Deserialize, Serialize};

use crate::bits::{self, Mask};
use crate::error::{Error, Result};
use crate::invariants::depth_dim_pd;
use crate::linalg::Field;
use crate::monomial::{Monomial, MonomialIdeal, MonomialPrime};

/// `I_{(d; a_1, ..., a_n)}`: degree-`d` monomials with `deg_{x_i} <= a_i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct VeroneseSpec {
    pub n: usize,
    pub d: u32,
    pub a: Vec<u32>,
}

impl VeroneseSpec {
    /// Requires `d >= 1` and `1 <= a_i <= d`; bounds need not be sorted.
    pub fn new(d: u32, a: Vec<u32>) -> Result<Self> {
        if a.is_empty() {
            return Err(Error::InvalidSpec("Veronese spec needs at least one variable".into()));
        }
        if a.len() > bits::MAX_VERTICES {
            return Err(Error::TooManyVariables { max: bits::MAX_VERTICES, found: a.len() });
        }
        if d == 0 {
            return Err(Error::InvalidSpec("degree must be at least 1".into()));
        }
        if let Some(bad) = a.iter().find(|&&x| x == 0 || x > d) {
            return Err(Error::InvalidSpec(format!("bound {bad} outside 1..={d}")));
        }
        Ok(VeroneseSpec { n: a.len(), d, a })
    }

    pub fn bound_sum(&self) -> u32 {
        self.a.iter().sum()
    }
}

impl fmt::Display for VeroneseSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let a: Vec<String> = self.a.iter().map(u32::to_string).collect();
        write!(f, "V(d={}; a={}; n={})", self.d, a.join(","), self.n)
    }
}

fn bounded_vectors(a: &[u32], d: u32, prefix: &mut Vec<u32>, out: &mut Vec<Monomial>) {
    let k = prefix.len();
    if k == a.len() {
        if d == 0 {
            out.push(Monomial::new(prefix.clone()));
        }
        return;
    }
    let rest: u32 = a[k + 1..].iter().sum();
    let lo = d.saturating_sub(rest);
    for e in lo..=a[k].min(d) {
        prefix.push(e);
        bounded_vectors(a, d - e, prefix, out);
        prefix.pop();
    }
}

/// All degree-`d` monomials under the bounds.
pub fn veronese_generate(spec: &VeroneseSpec) -> Result<MonomialIdeal> {
    if spec.bound_sum() < spec.d {
        return Err(Error::InvalidSpec(format!("{spec} has no generators: bounds sum below d")));
    }
    let mut gens = Vec::new();
    bounded_vectors(&spec.a, spec.d, &mut Vec::with_capacity(spec.n), &mut gens);
    MonomialIdeal::new(spec.n, gens)
}

/// The spec generating `ideal`, if any: equigenerated of degree `d`, every
/// variable present, and regeneration from `a_i = max deg_{x_i}` gives back `ideal`.
pub fn veronese_recognize(ideal: &MonomialIdeal) -> Option<VeroneseSpec> {
    let d = ideal.generating_degree()?;
    let lcm = ideal.lcm();
    let spec = VeroneseSpec::new(d, lcm.exponents().to_vec()).ok()?;
    (veronese_generate(&spec).ok()? == *ideal).then_some(spec)
}

/// `P_A ∈ Ass(I)` iff `Σ a_i >= d - 1 + |A|` and `Σ_{i ∉ A} a_i <= d - 1`.
/// Stated for `d > 1` only.
pub fn veronese_ass(spec: &VeroneseSpec) -> Result<Vec<MonomialPrime>> {
    if spec.d <= 1 {
        return Err(Error::TheoremOutOfScope("associated primes of Veronese type need d > 1"));
    }
    let total = spec.bound_sum();
    let mut primes: Vec<MonomialPrime> = bits::submasks(bits::full(spec.n))
        .filter(|&m| m != 0)
        .filter(|&m| {
            let outside: u32 = (1..=spec.n).filter(|&i| m & bits::bit(i) == 0).map(|i| spec.a[i - 1]).sum();
            total + 1 >= spec.d + bits::size(m) as u32 && outside < spec.d
        })
        .map(|m: Mask| MonomialPrime::new(m).expect("non-empty"))
        .collect();
    primes.sort();
    Ok(primes)
}

/// `max{0, d + n - 1 - Σ a_i}`.
pub fn veronese_depth(spec: &VeroneseSpec) -> usize {
    (i64::from(spec.d) + spec.n as i64 - 1 - i64::from(spec.bound_sum())).max(0) as usize
}

fn height_spread(spec: &VeroneseSpec) -> Option<(usize, usize)> {
    let ass = veronese_ass(spec).ok()?;
    let heights = ass.iter().map(MonomialPrime::height);
    Some((heights.clone().min()?, heights.max()?))
}

/// `bight - hte <= 1`; for `d = 1` the answer comes from the general pipeline.
pub fn veronese_is_acm(spec: &VeroneseSpec) -> bool {
    match height_spread(spec) {
        Some((hte, bight)) => bight - hte <= 1,
        None => pipeline_check(spec).0,
    }
}

/// `bight = hte`; for `d = 1` the answer comes from the general pipeline.
pub fn veronese_is_cm(spec: &VeroneseSpec) -> bool {
    match height_spread(spec) {
        Some((hte, bight)) => bight == hte,
        None => pipeline_check(spec).1,
    }
}

fn pipeline_check(spec: &VeroneseSpec) -> (bool, bool) {
    let ideal = veronese_generate(spec).expect("a_i >= 1 and d = 1 always has generators");
    let c = depth_dim_pd(&ideal, Field::RATIONALS);
    (c.is_acm(), c.is_cm())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::invariants::ass_brute_force;

    fn spec(d: u32, a: &[u32]) -> VeroneseSpec {
        VeroneseSpec::new(d, a.to_vec()).unwrap()
    }

    fn primes(ps: &[MonomialPrime]) -> Vec<Vec<usize>> {
        ps.iter().map(MonomialPrime::variables).collect()
    }

    #[test]
    fn generation() {
        assert_eq!(veronese_generate(&spec(2, &[1, 1, 1])).unwrap().to_string(), "(x1*x2, x1*x3, x2*x3)");
        assert_eq!(
            veronese_generate(&spec(2, &[2, 2, 1])).unwrap().to_string(),
            "(x1^2, x1*x2, x1*x3, x2^2, x2*x3)"
        );
        assert_eq!(veronese_generate(&spec(3, &[3, 3, 3])).unwrap(), MonomialIdeal::maximal(3).power(3).unwrap());
        assert!(veronese_generate(&spec(3, &[1, 1])).is_err());
        assert!(VeroneseSpec::new(2, vec![3]).is_err());
        assert!(VeroneseSpec::new(2, vec![0, 1]).is_err());
    }

    #[test]
    fn recognition() {
        let path = MonomialIdeal::from_exponents(3, &[&[1, 1, 0], &[1, 0, 1]]).unwrap();
        assert_eq!(veronese_recognize(&path), None);
        let i = MonomialIdeal::from_exponents(3, &[&[1, 1, 0], &[1, 0, 1], &[0, 2, 0], &[0, 1, 1]]).unwrap();
        assert_eq!(veronese_recognize(&i), Some(spec(2, &[1, 2, 1])));
        let m4 = MonomialIdeal::maximal(3).power(4).unwrap();
        assert_eq!(veronese_recognize(&m4), Some(spec(4, &[4, 4, 4])));
    }

    #[test]
    fn associated_primes() {
        assert_eq!(primes(&veronese_ass(&spec(2, &[1, 1, 1])).unwrap()), vec![vec![1, 2], vec![1, 3], vec![2, 3]]);
        assert_eq!(primes(&veronese_ass(&spec(2, &[2, 2, 1])).unwrap()), vec![vec![1, 2], vec![1, 2, 3]]);
        assert_eq!(primes(&veronese_ass(&spec(2, &[2, 2])).unwrap()), vec![vec![1, 2]]);
        assert!(matches!(veronese_ass(&spec(1, &[1, 1])), Err(Error::TheoremOutOfScope(_))));
        for s in [spec(2, &[1, 1, 1]), spec(2, &[2, 2, 1]), spec(3, &[2, 1, 3])] {
            assert_eq!(veronese_ass(&s).unwrap(), ass_brute_force(&veronese_generate(&s).unwrap()).unwrap());
        }
    }

    #[test]
    fn depth_and_predicates() {
        assert_eq!(veronese_depth(&spec(2, &[1, 1, 1])), 1);
        assert_eq!(veronese_depth(&spec(2, &[2, 2, 1])), 0);
        assert_eq!(veronese_depth(&spec(3, &[3, 3])), 0);
        let s = spec(2, &[2, 2, 1]);
        assert!(veronese_is_acm(&s) && !veronese_is_cm(&s));
        assert!(veronese_is_cm(&spec(2, &[1, 1, 1])));
        assert!(veronese_is_cm(&spec(3, &[3, 3, 3])));
        assert!(veronese_is_cm(&spec(1, &[1, 1, 1])));
    }
}
