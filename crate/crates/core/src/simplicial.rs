//! Simplicial complexes on `{1..n}` with faces as bitmasks, and their
//! Stanley-Reisner and Alexander-dual translations.

use std::collections::HashSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::bits::{self, Mask, MAX_VERTICES};
use crate::error::{Error, Result};
use crate::monomial::{MonomialIdeal, MonomialPrime};

/// A simplicial complex given by its facets.
///
/// The void complex (no faces) has no facets; the irrelevant complex `{∅}`
/// has the single facet `0`. Vertices need not be faces.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SimplicialComplex {
    n: usize,
    facets: Vec<Mask>,
}

impl SimplicialComplex {
    /// Stores the inclusion-maximal members of `facets`.
    pub fn from_facets<I: IntoIterator<Item = Mask>>(n: usize, facets: I) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::TooManyVariables { max: MAX_VERTICES, found: n });
        }
        let facets: Vec<Mask> = facets.into_iter().collect();
        if let Some(&bad) = facets.iter().find(|&&f| !bits::is_subset(f, bits::full(n))) {
            return Err(Error::InvalidSpec(format!("face {} exceeds {n} vertices", bits::format_set(bad))));
        }
        Ok(SimplicialComplex { n, facets: bits::maximal(facets) })
    }

    /// Convenience constructor from vertex lists.
    pub fn from_vertex_lists(n: usize, facets: &[&[usize]]) -> Result<Self> {
        Self::from_facets(n, facets.iter().map(|f| bits::from_vertices(f.iter().copied())))
    }

    pub fn void(n: usize) -> Self {
        SimplicialComplex { n, facets: Vec::new() }
    }

    pub fn irrelevant(n: usize) -> Self {
        SimplicialComplex { n, facets: vec![0] }
    }

    pub fn simplex(n: usize) -> Self {
        SimplicialComplex { n, facets: vec![bits::full(n)] }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn facets(&self) -> &[Mask] {
        &self.facets
    }

    pub fn is_void(&self) -> bool {
        self.facets.is_empty()
    }

    pub fn is_simplex(&self) -> bool {
        self.facets == [bits::full(self.n)]
    }

    /// `max |F| - 1` over facets; `-1` for `{∅}` and, by convention, for the void complex.
    pub fn dim(&self) -> i32 {
        self.facets.iter().map(|&f| bits::size(f) as i32).max().unwrap_or(0) - 1
    }

    pub fn contains(&self, face: Mask) -> bool {
        self.facets.iter().any(|&f| bits::is_subset(face, f))
    }

    /// Every face, sorted by size and then by vertex list.
    pub fn faces(&self) -> Vec<Mask> {
        let mut seen: HashSet<Mask> = HashSet::new();
        for &f in &self.facets {
            seen.extend(bits::submasks(f));
        }
        let mut faces: Vec<Mask> = seen.into_iter().collect();
        faces.sort_by(|a, b| bits::size(*a).cmp(&bits::size(*b)).then_with(|| bits::cmp_vertex_lists(*a, *b)));
        faces
    }

    /// Number of faces of each size, index = size.
    pub fn f_counts(&self) -> Vec<usize> {
        let mut counts = vec![0; (self.dim() + 2).max(0) as usize];
        for f in self.faces() {
            counts[bits::size(f)] += 1;
        }
        counts
    }

    /// Restriction to the vertex set `w`.
    pub fn induced(&self, w: Mask) -> SimplicialComplex {
        if self.is_void() {
            return self.clone();
        }
        SimplicialComplex { n: self.n, facets: bits::maximal(self.facets.iter().map(|&f| f & w)) }
    }

    /// Minimal non-faces: the minimal transversals of the facet complements.
    pub fn minimal_nonfaces(&self) -> Vec<Mask> {
        let full = bits::full(self.n);
        let complements: Vec<Mask> = self.facets.iter().map(|&f| full & !f).collect();
        bits::minimal_transversals(&complements)
    }

    /// `I_Δ`, generated by the minimal non-faces.
    pub fn stanley_reisner_ideal(&self) -> Result<MonomialIdeal> {
        if self.is_void() {
            return Err(Error::VoidComplex);
        }
        MonomialIdeal::from_masks(self.n, &self.minimal_nonfaces())
    }

    /// The complex whose Stanley-Reisner ideal is `ideal`.
    ///
    /// Faces are the sets containing no generator support, so the facets are
    /// the complements of the minimal vertex covers of those supports.
    pub fn of_ideal(ideal: &MonomialIdeal) -> Result<SimplicialComplex> {
        if !ideal.is_squarefree() {
            return Err(Error::NotSquarefree);
        }
        let n = ideal.n();
        if ideal.is_zero() {
            return Ok(Self::simplex(n));
        }
        let full = bits::full(n);
        let covers = bits::minimal_transversals(&ideal.generator_masks());
        Ok(SimplicialComplex { n, facets: bits::maximal(covers.into_iter().map(|c| full & !c)) })
    }

    /// `Δ∨ = {V \ F : F ∉ Δ}`; its facets are the complements of the minimal non-faces.
    pub fn alexander_dual(&self) -> Result<SimplicialComplex> {
        if self.is_void() {
            return Err(Error::VoidComplex);
        }
        if self.is_simplex() {
            return Err(Error::FullSimplex);
        }
        let full = bits::full(self.n);
        let facets = self.minimal_nonfaces().into_iter().map(|g| full & !g);
        Ok(SimplicialComplex { n: self.n, facets: bits::maximal(facets) })
    }

    /// `lk(F) = {G ∈ Δ : G ∩ F = ∅, G ∪ F ∈ Δ}` on the same vertex count.
    pub fn link(&self, face: Mask) -> Result<SimplicialComplex> {
        if !self.contains(face) {
            return Err(Error::FaceNotInComplex(bits::format_set(face)));
        }
        let facets = self.facets.iter().filter(|&&g| bits::is_subset(face, g)).map(|&g| g & !face);
        Ok(SimplicialComplex { n: self.n, facets: bits::maximal(facets) })
    }

    fn check_skeleton_index(&self, i: i32) -> Result<()> {
        let dim = self.dim();
        if i < -1 || i > dim || self.is_void() {
            return Err(Error::SkeletonOutOfRange { index: i, dim });
        }
        Ok(())
    }

    /// All faces of size at most `i + 1`.
    pub fn skeleton(&self, i: i32) -> Result<SimplicialComplex> {
        self.check_skeleton_index(i)?;
        let k = (i + 1) as usize;
        let mut facets = Vec::new();
        for &f in &self.facets {
            if bits::size(f) <= k {
                facets.push(f);
            } else {
                facets.extend(bits::submasks(f).filter(|&s| bits::size(s) == k));
            }
        }
        Ok(SimplicialComplex { n: self.n, facets: bits::maximal(facets) })
    }

    /// The pure subcomplex generated by the faces of size exactly `i + 1`.
    pub fn pure_skeleton(&self, i: i32) -> Result<SimplicialComplex> {
        self.check_skeleton_index(i)?;
        let k = (i + 1) as usize;
        let facets = self.faces().into_iter().filter(|&f| bits::size(f) == k);
        Ok(SimplicialComplex { n: self.n, facets: bits::maximal(facets) })
    }

    pub fn is_pure(&self) -> bool {
        let mut sizes = self.facets.iter().map(|&f| bits::size(f));
        match sizes.next() {
            Some(first) => sizes.all(|s| s == first),
            None => true,
        }
    }

    /// Facet cardinalities differ by at most one.
    pub fn is_almost_pure(&self) -> bool {
        let sizes = self.facets.iter().map(|&f| bits::size(f));
        match (sizes.clone().min(), sizes.max()) {
            (Some(lo), Some(hi)) => hi - lo <= 1,
            _ => true,
        }
    }

    /// Connectivity of the facet-intersection graph.
    ///
    /// A single facet is connected, and so is `{∅}` (vacuously).
    pub fn is_connected(&self) -> bool {
        if self.facets.len() <= 1 {
            return true;
        }
        let mut reached = self.facets[0];
        let mut remaining: Vec<Mask> = self.facets[1..].to_vec();
        loop {
            let before = remaining.len();
            remaining.retain(|&f| {
                if f & reached != 0 {
                    reached |= f;
                    false
                } else {
                    true
                }
            });
            if remaining.is_empty() {
                return true;
            }
            if remaining.len() == before {
                return false;
            }
        }
    }

    /// Faces contained in some facet of maximal size.
    pub fn in_pure_top(&self, face: Mask) -> bool {
        let top = self.dim() + 1;
        self.facets
            .iter()
            .any(|&f| bits::size(f) as i32 == top && bits::is_subset(face, f))
    }

    /// Minimal primes of `I_Δ`, one per facet: `P_{V \ G}`.
    pub fn facet_primes(&self) -> Vec<MonomialPrime> {
        let full = bits::full(self.n);
        let mut primes: Vec<MonomialPrime> =
            self.facets.iter().filter_map(|&g| MonomialPrime::new(full & !g).ok()).collect();
        primes.sort();
        primes
    }

    /// Relabels vertices: vertex `v` becomes `perm[v - 1]` (1-based).
    pub fn relabel(&self, perm: &[usize]) -> SimplicialComplex {
        let facets = self.facets.iter().map(|&f| permute_mask(f, perm));
        SimplicialComplex { n: self.n, facets: bits::maximal(facets) }
    }

    pub fn to_json(&self) -> ComplexJson {
        ComplexJson { n: self.n, facets: self.facets.iter().map(|&f| bits::vertices(f)).collect() }
    }

    pub fn from_json(json: &ComplexJson) -> Result<Self> {
        for face in &json.facets {
            if let Some(&v) = face.iter().find(|&&v| v == 0 || v > json.n) {
                return Err(Error::Parse(format!("vertex {v} outside 1..={}", json.n)));
            }
        }
        Self::from_facets(json.n, json.facets.iter().map(|f| bits::from_vertices(f.iter().copied())))
    }
}

/// Squarefree Alexander dual: generated by `prod_{x_j in p} x_j` over the
/// minimal primes `p` of `ideal`, which are the minimal vertex covers of the
/// generator supports.
pub fn alexander_dual_ideal(ideal: &MonomialIdeal) -> Result<MonomialIdeal> {
    if !ideal.is_squarefree() {
        return Err(Error::NotSquarefree);
    }
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal("Alexander dual"));
    }
    MonomialIdeal::from_masks(ideal.n(), &bits::minimal_transversals(&ideal.generator_masks()))
}

/// Maps vertex `v` to `perm[v - 1]`.
pub fn permute_mask(mask: Mask, perm: &[usize]) -> Mask {
    bits::vertices(mask).into_iter().fold(0, |m, v| m | bits::bit(perm[v - 1]))
}

/// JSON form `{"n":5,"facets":[[1,2],[4,5],[3]]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComplexJson {
    pub n: usize,
    pub facets: Vec<Vec<usize>>,
}

impl fmt::Display for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let facets: Vec<String> = self.facets.iter().map(|&m| bits::format_set(m)).collect();
        write!(f, "n={}; {}", self.n, facets.join(","))
    }
}

impl fmt::Debug for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
