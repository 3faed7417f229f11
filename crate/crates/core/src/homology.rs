//! Reduced simplicial homology over a field.

use std::collections::HashMap;
use std::fmt;

use serde::Serialize;

use crate::bits::{self, Mask};
use crate::linalg::{rank_over_field, Field, IntMatrix};
use crate::simplicial::SimplicialComplex;

/// Ranks of `H̃_i(Δ; k)` for `-1 <= i <= dim Δ`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct HomologyProfile {
    /// `ranks[k]` is the rank in degree `k - 1`.
    ranks: Vec<usize>,
}

impl HomologyProfile {
    fn zero(dim: i32) -> Self {
        HomologyProfile { ranks: vec![0; (dim + 2).max(0) as usize] }
    }

    /// Rank of `H̃_i`; zero outside the stored range.
    pub fn rank(&self, i: i32) -> usize {
        if i < -1 {
            return 0;
        }
        self.ranks.get((i + 1) as usize).copied().unwrap_or(0)
    }

    /// Top stored degree, `dim Δ`.
    pub fn dim(&self) -> i32 {
        self.ranks.len() as i32 - 2
    }

    /// `(i, rank)` pairs from `i = -1` upwards.
    pub fn iter(&self) -> impl Iterator<Item = (i32, usize)> + '_ {
        self.ranks.iter().enumerate().map(|(k, &r)| (k as i32 - 1, r))
    }

    pub fn is_acyclic(&self) -> bool {
        self.ranks.iter().all(|&r| r == 0)
    }

    /// True when `H̃_i = 0` for every `i < bound`.
    pub fn vanishes_below(&self, bound: i32) -> bool {
        self.iter().all(|(i, r)| i >= bound || r == 0)
    }

    /// `Σ (-1)^i rank H̃_i`.
    pub fn euler_characteristic(&self) -> i64 {
        self.iter().map(|(i, r)| if i.rem_euclid(2) == 0 { r as i64 } else { -(r as i64) }).sum()
    }
}

impl fmt::Display for HomologyProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.iter().map(|(i, r)| format!("H~{i}: {r}")).collect();
        f.write_str(&parts.join("\n"))
    }
}

/// Faces of each size, in the standard order.
fn faces_by_size(delta: &SimplicialComplex) -> Vec<Vec<Mask>> {
    let mut out = vec![Vec::new(); (delta.dim() + 2).max(0) as usize];
    for face in delta.faces() {
        out[bits::size(face)].push(face);
    }
    out
}

fn boundary_between(lower: &[Mask], upper: &[Mask]) -> IntMatrix {
    let index: HashMap<Mask, usize> = lower.iter().enumerate().map(|(k, &f)| (f, k)).collect();
    let mut m = IntMatrix::zeros(lower.len(), upper.len());
    for (col, &face) in upper.iter().enumerate() {
        for (pos, v) in bits::vertices(face).into_iter().enumerate() {
            let row = index[&(face & !bits::bit(v))];
            m.set(row, col, if pos % 2 == 0 { 1 } else { -1 });
        }
    }
    m
}

/// Matrix of `∂ : C_{s-1} -> C_{s-2}` on faces of size `s`, rows indexed by
/// faces of size `s - 1`. Size 0 maps to the zero space.
pub fn boundary_matrix(delta: &SimplicialComplex, size: usize) -> IntMatrix {
    let faces = faces_by_size(delta);
    let upper = faces.get(size).map_or(&[][..], Vec::as_slice);
    if size == 0 {
        return IntMatrix::zeros(0, upper.len());
    }
    let lower = faces.get(size - 1).map_or(&[][..], Vec::as_slice);
    boundary_between(lower, upper)
}

/// A vertex lying in every facet makes `Δ` a cone, hence acyclic.
fn is_cone(delta: &SimplicialComplex) -> bool {
    let common = delta.facets().iter().fold(!0u64, |acc, &f| acc & f);
    !delta.facets().is_empty() && common != 0
}

/// Reduced homology of the augmented chain complex. The void complex has
/// no chains at all and gets an empty profile.
pub fn reduced_homology(delta: &SimplicialComplex, field: Field) -> HomologyProfile {
    if delta.is_void() {
        return HomologyProfile { ranks: Vec::new() };
    }
    let dim = delta.dim();
    if is_cone(delta) {
        return HomologyProfile::zero(dim);
    }
    if let Some(nerve) = cheaper_nerve(delta) {
        let h = chain_homology(&nerve, field);
        return HomologyProfile { ranks: (-1..=dim).map(|i| h.rank(i)).collect() };
    }
    chain_homology(delta, field)
}

/// Upper bound on the number of faces.
fn face_estimate(facets: &[Mask]) -> u128 {
    facets.iter().map(|&f| 1u128 << bits::size(f)).sum()
}

/// The nerve of the facet cover. Its vertices are the facets, and facets
/// sharing a vertex span a face, so it is generated by `{F : v ∈ F}` over
/// the vertices `v`. By the nerve lemma it has the homotopy type of `delta`.
fn nerve(delta: &SimplicialComplex) -> Option<SimplicialComplex> {
    let facets = delta.facets();
    if facets.len() > bits::MAX_VERTICES || facets.iter().any(|&f| f == 0) {
        return None;
    }
    let used = facets.iter().fold(0, |a, &f| a | f);
    let stars = bits::vertices(used)
        .into_iter()
        .map(|v| facets.iter().enumerate().filter(|(_, &f)| f & bits::bit(v) != 0).fold(0, |m, (k, _)| m | (1 << k)));
    Some(SimplicialComplex::from_facets(facets.len(), stars).expect("at most MAX_VERTICES facets"))
}

fn cheaper_nerve(delta: &SimplicialComplex) -> Option<SimplicialComplex> {
    nerve(delta).filter(|n| face_estimate(n.facets()) < face_estimate(delta.facets()))
}

fn chain_homology(delta: &SimplicialComplex, field: Field) -> HomologyProfile {
    let faces = faces_by_size(delta);
    let top = faces.len();
    // rank[s] = rank of the boundary leaving faces of size s.
    let mut rank = vec![0usize; top + 1];
    for s in 1..top {
        rank[s] = rank_over_field(&boundary_between(&faces[s - 1], &faces[s]), field);
    }
    let ranks = (0..top).map(|s| faces[s].len() - rank[s] - rank[s + 1]).collect();
    HomologyProfile { ranks }
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;
    use proptest::prelude::*;

    pub(crate) fn rp2() -> SimplicialComplex {
        SimplicialComplex::from_vertex_lists(
            6,
            &[
                &[1, 2, 3], &[1, 3, 4], &[1, 4, 5], &[1, 5, 6], &[1, 2, 6],
                &[2, 3, 5], &[2, 4, 5], &[2, 4, 6], &[3, 4, 6], &[3, 5, 6],
            ],
        )
        .unwrap()
    }

    fn c(n: usize, facets: &[&[usize]]) -> SimplicialComplex {
        SimplicialComplex::from_vertex_lists(n, facets).unwrap()
    }

    const Q: Field = Field::RATIONALS;

    #[test]
    fn circle() {
        let h = reduced_homology(&c(3, &[&[1, 2], &[1, 3], &[2, 3]]), Q);
        assert_eq!((h.rank(-1), h.rank(0), h.rank(1)), (0, 0, 1));
    }

    #[test]
    fn two_components() {
        let h = reduced_homology(&c(4, &[&[1, 2], &[3, 4]]), Q);
        assert_eq!((h.rank(0), h.rank(1)), (1, 0));
    }

    #[test]
    fn irrelevant_and_simplex() {
        let h = reduced_homology(&SimplicialComplex::irrelevant(3), Q);
        assert_eq!(h.rank(-1), 1);
        assert_eq!(h.dim(), -1);
        assert!(reduced_homology(&SimplicialComplex::simplex(4), Q).is_acyclic());
        assert!(reduced_homology(&c(1, &[&[1]]), Q).is_acyclic());
    }

    #[test]
    fn sphere_boundary_of_tetrahedron() {
        let h = reduced_homology(&c(4, &[&[1, 2, 3], &[1, 2, 4], &[1, 3, 4], &[2, 3, 4]]), Q);
        assert_eq!(h.rank(2), 1);
        assert_eq!(h.rank(1) + h.rank(0), 0);
    }

    #[test]
    fn projective_plane_is_field_sensitive() {
        let d = rp2();
        assert_eq!(d.f_counts(), vec![1, 6, 15, 10]);
        let q = reduced_homology(&d, Q);
        let f2 = reduced_homology(&d, Field::new(2).unwrap());
        let f3 = reduced_homology(&d, Field::new(3).unwrap());
        assert_eq!((q.rank(1), q.rank(2)), (0, 0));
        assert_eq!((f2.rank(1), f2.rank(2)), (1, 1));
        assert_eq!(f3, q);
    }

    #[test]
    fn boundary_of_triangle_has_rank_two() {
        let d = c(3, &[&[1, 2], &[1, 3], &[2, 3]]);
        assert_eq!(rank_over_field(&boundary_matrix(&d, 2), Q), 2);
        assert_eq!(boundary_matrix(&d, 1).rows(), 1);
    }

    pub(crate) fn arb_complex(max_n: usize) -> impl Strategy<Value = SimplicialComplex> {
        (1..=max_n).prop_flat_map(|n| {
            proptest::collection::vec(0..(1u64 << n), 1..6)
                .prop_map(move |fs| SimplicialComplex::from_facets(n, fs).unwrap())
        })
    }

    proptest! {
        #[test]
        fn boundary_squares_to_zero(d in arb_complex(6)) {
            for s in 1..=(d.dim() + 1) as usize {
                let outer = boundary_matrix(&d, s);
                let inner = boundary_matrix(&d, s + 1);
                if outer.cols() > 0 && inner.cols() > 0 {
                    prop_assert!(outer.mul(&inner).is_zero());
                }
            }
        }

        #[test]
        fn euler_poincare(d in arb_complex(6)) {
            let h = reduced_homology(&d, Q);
            let faces: i64 = d.f_counts().iter().enumerate()
                .map(|(size, &f)| if size % 2 == 1 { f as i64 } else { -(f as i64) })
                .sum();
            // Size-s faces have dimension s - 1, so the empty face enters with sign -1.
            prop_assert_eq!(h.euler_characteristic(), faces);
        }

        #[test]
        fn relabeling_invariance(d in arb_complex(6), seed in any::<u64>()) {
            use rand::seq::SliceRandom;
            use rand::SeedableRng;
            let mut perm: Vec<usize> = (1..=d.n()).collect();
            perm.shuffle(&mut rand_chacha::ChaCha8Rng::seed_from_u64(seed));
            prop_assert_eq!(reduced_homology(&d, Q), reduced_homology(&d.relabel(&perm), Q));
        }

        #[test]
        fn nerve_has_the_same_homology(
            n in 1usize..9,
            fs in proptest::collection::vec(any::<u64>(), 1..10),
            two in any::<bool>(),
        ) {
            let field = if two { Field::new(2).unwrap() } else { Q };
            let d = SimplicialComplex::from_facets(n, fs.into_iter().map(|f| f & bits::full(n))).unwrap();
            let direct = chain_homology(&d, field);
            prop_assert_eq!(reduced_homology(&d, field), direct.clone());
            if let Some(nv) = nerve(&d) {
                let h = chain_homology(&nv, field);
                for i in -1..=d.dim().max(nv.dim()) {
                    prop_assert_eq!(h.rank(i), direct.rank(i), "degree {}", i);
                }
            }
        }

        #[test]
        fn large_prime_agrees_with_rationals(d in arb_complex(6)) {
            prop_assert_eq!(reduced_homology(&d, Q), reduced_homology(&d, Field::new(32003).unwrap()));
        }
    }
}
