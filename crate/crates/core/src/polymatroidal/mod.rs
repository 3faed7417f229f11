//! Polymatroidal ideals: the exchange property, Veronese type and
//! transversal families with their closed-form invariants, and the
//! Cohen-Macaulay / almost Cohen-Macaulay classifiers.

mod classify;
mod transversal;
mod veronese;

pub use classify::{classify_acm_transversal, classify_cm_polymatroidal, AcmClassification, AcmVerdict, CmVerdict};
pub use transversal::{
    intersect_prime_powers, power_decomposition_holds, transversal_ass, transversal_depth, transversal_dim,
    transversal_is_acm, transversal_power_decomposition, TransversalSpec,
};
pub use veronese::{
    veronese_ass, veronese_depth, veronese_generate, veronese_is_acm, veronese_is_cm, veronese_recognize,
    VeroneseSpec,
};

use std::collections::HashSet;

use crate::monomial::{Monomial, MonomialIdeal};

/// Exchange property: for `u, v ∈ G(I)` and `i` with `deg_i u > deg_i v`
/// there is `j` with `deg_j u < deg_j v` and `x_j u / x_i ∈ G(I)`.
/// Ideals not generated in a single degree are rejected outright.
pub fn is_polymatroidal(ideal: &MonomialIdeal) -> bool {
    if ideal.generating_degree().is_none() {
        return false;
    }
    let gens = ideal.generators();
    let set: HashSet<&Monomial> = gens.iter().collect();
    let n = ideal.n();
    let mut probe = vec![0u32; n];
    for u in gens {
        let ue = u.exponents();
        for v in gens {
            let ve = v.exponents();
            for i in 0..n {
                if ue[i] <= ve[i] {
                    continue;
                }
                let exchanged = (0..n).any(|j| {
                    if ue[j] >= ve[j] {
                        return false;
                    }
                    probe.copy_from_slice(ue);
                    probe[i] -= 1;
                    probe[j] += 1;
                    set.contains(&Monomial::new(probe.clone()))
                });
                if !exchanged {
                    return false;
                }
            }
        }
    }
    true
}

/// Squarefree polymatroidal.
pub fn is_matroidal(ideal: &MonomialIdeal) -> bool {
    ideal.is_squarefree() && is_polymatroidal(ideal)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ideal(n: usize, rows: &[&[u32]]) -> MonomialIdeal {
        MonomialIdeal::from_exponents(n, rows).unwrap()
    }

    #[test]
    fn exchange_examples() {
        assert!(is_polymatroidal(&ideal(3, &[&[1, 1, 0], &[0, 1, 1]])));
        assert!(!is_polymatroidal(&ideal(4, &[&[1, 1, 0, 0], &[0, 0, 1, 1]])));
        assert!(!is_polymatroidal(&ideal(3, &[&[1, 0, 0], &[0, 1, 1]])));
        assert!(!is_polymatroidal(&MonomialIdeal::zero(3)));
        assert!(is_matroidal(&ideal(4, &[&[1, 0, 1, 0], &[1, 0, 0, 1], &[0, 1, 1, 0], &[0, 1, 0, 1]])));
        assert!(!is_matroidal(&MonomialIdeal::maximal(2).power(2).unwrap()));
        assert!(is_polymatroidal(&MonomialIdeal::maximal(3).power(3).unwrap()));
    }
}
