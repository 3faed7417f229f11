use std::fmt;

use itertools::Itertools;
use serde::Serialize;

use crate::bits::{self, Mask};
use crate::error::{Error, Result};
use crate::monomial::MonomialIdeal;

use super::transversal::TransversalSpec;
use super::veronese::veronese_recognize;
use super::is_polymatroidal;

/// The five aCM patterns for full-supported transversal ideals, in the
/// original variable indexing.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "case", rename_all = "snake_case")]
pub enum AcmVerdict {
    /// A single generator.
    Principal,
    /// `(x_1⋯x̂_i⋯x_n, x_1⋯x̂_j⋯x_n)`.
    TwoComplements { i: usize, j: usize },
    /// `(x_1⋯x_i^2⋯x̂_m, x_1⋯x_n)`: `x_i` squared, `x_m` missing.
    SquareCase { i: usize, missing: usize },
    /// `I_{(d; a)}` with `r` bounds equal to `d - 1` and the rest equal to `d`.
    VeroneseTypeCase { r: usize },
    /// `P_{F_1} P_{F_2}` with `|F_1| = |F_2| = 2` disjoint.
    DisjointPairProduct,
    NotACM,
}

impl AcmVerdict {
    pub fn is_acm(&self) -> bool {
        *self != AcmVerdict::NotACM
    }
}

impl fmt::Display for AcmVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AcmVerdict::Principal => write!(f, "principal"),
            AcmVerdict::TwoComplements { i, j } => write!(f, "two complements (i={i}, j={j})"),
            AcmVerdict::SquareCase { i, missing } => write!(f, "square case (i={i}, missing={missing})"),
            AcmVerdict::VeroneseTypeCase { r } => write!(f, "Veronese type (r={r})"),
            AcmVerdict::DisjointPairProduct => write!(f, "disjoint pair product"),
            AcmVerdict::NotACM => write!(f, "not aCM"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct AcmClassification {
    pub verdict: AcmVerdict,
    /// Set for Veronese matches with every bound equal to `d - 1`, where the
    /// stated range of `r` is ambiguous.
    pub needs_review: bool,
}

/// Matches a full-supported transversal ideal against the five aCM
/// patterns. `d = 1` gives `P_{F_1}`, which with full support is the
/// maximal ideal: principal when `n = 1`, otherwise the Veronese pattern
/// with `r = 0`.
pub fn classify_acm_transversal(spec: &TransversalSpec) -> Result<AcmClassification> {
    if !spec.is_full_supported() {
        return Err(Error::NotFullSupported);
    }
    let plain = |verdict| Ok(AcmClassification { verdict, needs_review: false });
    let n = spec.n();
    if spec.d() == 1 {
        return plain(if n == 1 { AcmVerdict::Principal } else { AcmVerdict::VeroneseTypeCase { r: 0 } });
    }
    let ideal = spec.ideal();
    let gens = ideal.generators();
    if gens.len() == 1 {
        return plain(AcmVerdict::Principal);
    }
    if let Some(v) = two_complements(&ideal) {
        return plain(v);
    }
    if let Some(v) = square_case(&ideal) {
        return plain(v);
    }
    if disjoint_pair(spec) {
        return plain(AcmVerdict::DisjointPairProduct);
    }
    if let Some(vs) = veronese_recognize(&ideal) {
        let d = vs.d;
        if vs.a.iter().all(|&a| a == d || a + 1 == d) {
            let r = vs.a.iter().filter(|&&a| a + 1 == d).count();
            return Ok(AcmClassification { verdict: AcmVerdict::VeroneseTypeCase { r }, needs_review: r == n });
        }
    }
    plain(AcmVerdict::NotACM)
}

/// Two squarefree generators of degree `n - 1`, each missing one variable.
fn two_complements(ideal: &MonomialIdeal) -> Option<AcmVerdict> {
    let n = ideal.n();
    let full = bits::full(n);
    let [a, b] = ideal.generators() else { return None };
    if !(a.is_squarefree() && b.is_squarefree() && a.degree() as usize + 1 == n && b.degree() as usize + 1 == n) {
        return None;
    }
    let mut missing = [bits::vertices(full & !a.support())[0], bits::vertices(full & !b.support())[0]];
    missing.sort_unstable();
    Some(AcmVerdict::TwoComplements { i: missing[0], j: missing[1] })
}

/// `x_1⋯x_n` together with a degree-`n` monomial having one exponent 2,
/// one exponent 0 and all others 1.
fn square_case(ideal: &MonomialIdeal) -> Option<AcmVerdict> {
    let n = ideal.n();
    let gens = ideal.generators();
    if gens.len() != 2 {
        return None;
    }
    let (all, other) = match gens.iter().position(|g| g.exponents().iter().all(|&e| e == 1))? {
        0 => (&gens[0], &gens[1]),
        _ => (&gens[1], &gens[0]),
    };
    debug_assert_eq!(all.degree() as usize, n);
    let e = other.exponents();
    let twos = e.iter().positions(|&x| x == 2).collect_vec();
    let zeros = e.iter().positions(|&x| x == 0).collect_vec();
    let ones = e.iter().filter(|&&x| x == 1).count();
    (twos.len() == 1 && zeros.len() == 1 && ones + 2 == n)
        .then(|| AcmVerdict::SquareCase { i: twos[0] + 1, missing: zeros[0] + 1 })
}

fn disjoint_pair(spec: &TransversalSpec) -> bool {
    let sets: &[Mask] = spec.sets();
    sets.len() == 2 && bits::size(sets[0]) == 2 && bits::size(sets[1]) == 2 && sets[0] & sets[1] == 0
}

/// Cohen-Macaulay polymatroidal ideals, relative to their support `S`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CmVerdict {
    Principal,
    /// `P_S^d`.
    Veronese,
    /// All squarefree degree-`d` monomials in the variables of `S`.
    SquarefreeVeronese,
    NotCM,
}

impl CmVerdict {
    pub fn is_cm(&self) -> bool {
        *self != CmVerdict::NotCM
    }
}

impl fmt::Display for CmVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CmVerdict::Principal => "principal",
            CmVerdict::Veronese => "Veronese",
            CmVerdict::SquarefreeVeronese => "squarefree Veronese",
            CmVerdict::NotCM => "not CM",
        })
    }
}

pub fn classify_cm_polymatroidal(ideal: &MonomialIdeal) -> Result<CmVerdict> {
    if !is_polymatroidal(ideal) {
        return Err(Error::NotPolymatroidal);
    }
    if ideal.len() == 1 {
        return Ok(CmVerdict::Principal);
    }
    let n = ideal.n();
    let support = ideal.support();
    let d = ideal.generating_degree().expect("polymatroidal ideals are equigenerated");
    if MonomialIdeal::prime(n, support).power(d)? == *ideal {
        return Ok(CmVerdict::Veronese);
    }
    let squarefree: Vec<Mask> = bits::submasks(support).filter(|&m| bits::size(m) == d as usize).collect();
    if !squarefree.is_empty() && MonomialIdeal::from_masks(n, &squarefree)? == *ideal {
        return Ok(CmVerdict::SquarefreeVeronese);
    }
    Ok(CmVerdict::NotCM)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::invariants::depth_dim_pd;
    use crate::linalg::Field;
    use crate::polymatroidal::{transversal_is_acm, veronese_generate, VeroneseSpec};

    fn spec(n: usize, sets: &[&[usize]]) -> TransversalSpec {
        TransversalSpec::from_vertex_lists(n, sets).unwrap()
    }

    fn verdict(n: usize, sets: &[&[usize]]) -> AcmVerdict {
        classify_acm_transversal(&spec(n, sets)).unwrap().verdict
    }

    #[test]
    fn constructive_instances() {
        assert_eq!(verdict(3, &[&[1], &[2], &[1, 3]]), AcmVerdict::SquareCase { i: 1, missing: 3 });
        assert_eq!(verdict(4, &[&[1, 2], &[3, 4]]), AcmVerdict::DisjointPairProduct);
        assert_eq!(verdict(7, &[&[1, 2, 3], &[4, 5, 6, 7]]), AcmVerdict::NotACM);
    }

    #[test]
    fn remaining_patterns() {
        assert_eq!(verdict(3, &[&[1], &[2], &[3]]), AcmVerdict::Principal);
        // (x3)(x1, x2) = (x1x3, x2x3): complements of x2 and x1.
        assert_eq!(verdict(3, &[&[3], &[1, 2]]), AcmVerdict::TwoComplements { i: 1, j: 2 });
        // m * (x1, x2) = I_(2; 2, 2, 1).
        assert_eq!(verdict(3, &[&[1, 2, 3], &[1, 2]]), AcmVerdict::VeroneseTypeCase { r: 1 });
        assert_eq!(verdict(3, &[&[1, 2, 3], &[1, 2, 3]]), AcmVerdict::VeroneseTypeCase { r: 0 });
        assert_eq!(verdict(3, &[&[1, 2, 3]]), AcmVerdict::VeroneseTypeCase { r: 0 });
        assert_eq!(verdict(1, &[&[1]]), AcmVerdict::Principal);
        assert_eq!(classify_acm_transversal(&spec(3, &[&[1, 2]])), Err(Error::NotFullSupported));
    }

    #[test]
    fn all_bounds_below_degree_is_flagged() {
        // (x1, x2)(x1, x3)(x2, x3) has a = (2, 2, 2) with d = 3.
        let c = classify_acm_transversal(&spec(3, &[&[1, 2], &[1, 3], &[2, 3]])).unwrap();
        assert_eq!(c.verdict, AcmVerdict::VeroneseTypeCase { r: 3 });
        assert!(c.needs_review);
    }

    #[test]
    fn repeated_singleton_factor_escapes_the_patterns() {
        // x1^2 (x2, x3): aCM by depth 1 >= dim 2 - 1, yet matches none of the five patterns.
        let s = spec(3, &[&[1], &[1], &[2, 3]]);
        let c = depth_dim_pd(&s.ideal(), Field::RATIONALS);
        assert!(c.is_acm() && transversal_is_acm(&s));
        assert_eq!(classify_acm_transversal(&s).unwrap().verdict, AcmVerdict::NotACM);
    }

    #[test]
    fn cm_classification() {
        assert_eq!(classify_cm_polymatroidal(&MonomialIdeal::maximal(3).power(3).unwrap()).unwrap(), CmVerdict::Veronese);
        let sqv = veronese_generate(&VeroneseSpec::new(2, vec![1, 1, 1]).unwrap()).unwrap();
        assert_eq!(classify_cm_polymatroidal(&sqv).unwrap(), CmVerdict::SquarefreeVeronese);
        let path = MonomialIdeal::from_exponents(3, &[&[1, 1, 0], &[1, 0, 1]]).unwrap();
        assert_eq!(classify_cm_polymatroidal(&path).unwrap(), CmVerdict::NotCM);
        let bad = MonomialIdeal::from_exponents(4, &[&[1, 1, 0, 0], &[0, 0, 1, 1]]).unwrap();
        assert_eq!(classify_cm_polymatroidal(&bad), Err(Error::NotPolymatroidal));
        let principal = MonomialIdeal::from_exponents(3, &[&[2, 0, 1]]).unwrap();
        assert_eq!(classify_cm_polymatroidal(&principal).unwrap(), CmVerdict::Principal);
        // Veronese relative to the support only.
        let partial = MonomialIdeal::prime(4, 0b0110).power(2).unwrap();
        assert_eq!(classify_cm_polymatroidal(&partial).unwrap(), CmVerdict::Veronese);
    }
}
