//! Graded Betti numbers of `R/I` for monomial ideals.
//!
//! Squarefree ideals use Hochster's formula over induced subcomplexes.
//! General ideals use the upper Koszul simplicial complex of each multidegree
//! `b` in the lcm lattice: `β_{i,b}(I) = dim H̃_{i-1}(K^b; k)` where
//! `K^b = {F ⊆ supp b : x^{b-F} ∈ I}`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bits::{self, Mask};
use crate::error::{Error, Result};
use crate::homology::{reduced_homology, HomologyProfile};
use crate::linalg::Field;
use crate::monomial::{Monomial, MonomialIdeal};
use crate::simplicial::SimplicialComplex;

/// Graded Betti numbers `β_{i,j}(R/I)`, including `β_{0,0} = 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BettiTable {
    entries: BTreeMap<(usize, u32), u64>,
}

impl BettiTable {
    fn new() -> Self {
        let mut entries = BTreeMap::new();
        entries.insert((0, 0), 1);
        BettiTable { entries }
    }

    fn add(&mut self, i: usize, j: u32, v: u64) {
        if v > 0 {
            *self.entries.entry((i, j)).or_insert(0) += v;
        }
    }

    pub fn get(&self, i: usize, j: u32) -> u64 {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    /// Non-zero `(i, j, β_{i,j})`, ordered by `i` then `j`.
    pub fn entries(&self) -> impl Iterator<Item = (usize, u32, u64)> + '_ {
        self.entries.iter().map(|(&(i, j), &v)| (i, j, v))
    }

    /// `Σ_j β_{i,j}`.
    pub fn total(&self, i: usize) -> u64 {
        self.entries().filter(|e| e.0 == i).map(|e| e.2).sum()
    }

    /// Projective dimension of `R/I`.
    pub fn pd(&self) -> usize {
        self.entries.keys().map(|k| k.0).max().unwrap_or(0)
    }

    /// Regularity of `R/I`: `max{j - i}`.
    pub fn reg(&self) -> i64 {
        self.entries.keys().map(|&(i, j)| j as i64 - i as i64).max().unwrap_or(0)
    }

    /// Regularity of `I` itself, `reg(R/I) + 1`; `None` for the zero ideal.
    pub fn reg_ideal(&self) -> Option<i64> {
        (self.pd() > 0).then(|| self.reg() + 1)
    }

    /// Least generator degree, read from the first syzygy column.
    pub fn indeg(&self) -> Option<u32> {
        self.entries.keys().filter(|k| k.0 == 1).map(|k| k.1).min()
    }

    /// Column sums `β_{1,j}` as a degree multiset.
    pub fn generator_degrees(&self) -> Vec<u32> {
        let mut out = Vec::new();
        for (i, j, v) in self.entries() {
            if i == 1 {
                out.extend(std::iter::repeat(j).take(v as usize));
            }
        }
        out
    }

    pub fn to_json(&self) -> BettiJson {
        BettiJson { betti: self.entries().map(|(i, j, v)| [i as u64, u64::from(j), v]).collect() }
    }

    pub fn from_json(json: &BettiJson) -> Result<Self> {
        let mut entries = BTreeMap::new();
        for &[i, j, v] in &json.betti {
            let j = u32::try_from(j).map_err(|_| Error::Parse(format!("degree {j} out of range")))?;
            if v > 0 {
                entries.insert((i as usize, j), v);
            }
        }
        Ok(BettiTable { entries })
    }
}

/// JSON form `{"betti":[[i,j,value],...]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BettiJson {
    pub betti: Vec<[u64; 3]>,
}

/// Macaulay2-style grid: rows `j - i`, columns `i`.
impl fmt::Display for BettiTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let pd = self.pd();
        let reg = self.reg().max(0) as usize;
        let width = self.entries.values().map(|v| v.to_string().len()).max().unwrap_or(1).max(pd.to_string().len());
        let label = "total:".len().max(reg.to_string().len() + 1);
        write!(f, "{:>label$}", "")?;
        for i in 0..=pd {
            write!(f, " {i:>width$}")?;
        }
        writeln!(f)?;
        write!(f, "{:>label$}", "total:")?;
        for i in 0..=pd {
            write!(f, " {:>width$}", self.total(i))?;
        }
        for row in 0..=reg {
            writeln!(f)?;
            write!(f, "{:>label$}", format!("{row}:"))?;
            for i in 0..=pd {
                let v = self.get(i, (row + i) as u32);
                if v == 0 {
                    write!(f, " {:>width$}", ".")?;
                } else {
                    write!(f, " {v:>width$}")?;
                }
            }
        }
        Ok(())
    }
}

/// Hochster's formula: `β_{i,j}(k[Δ]) = Σ_{|W|=j} dim H̃_{j-i-1}(Δ_W; k)`.
pub fn hochster_betti(ideal: &MonomialIdeal, field: Field) -> Result<BettiTable> {
    if !ideal.is_squarefree() {
        return Err(Error::NotSquarefree);
    }
    let mut table = BettiTable::new();
    if ideal.is_zero() {
        return Ok(table);
    }
    let gens = ideal.generator_masks();
    let support = ideal.support();
    // Unless W is a union of non-faces, some vertex of W lies in no minimal
    // non-face inside W and Δ_W is a cone over it.
    let candidates: Vec<Mask> = bits::submasks(support)
        .filter(|&w| w != 0 && gens.iter().filter(|&&g| bits::is_subset(g, w)).fold(0, |acc, &g| acc | g) == w)
        .collect();
    // Alexander duality on W: H̃_i(Δ_W) ≅ H̃^{|W|-i-3}(Γ), where Γ has facets
    // W \ g over the generators g inside W, so β_{i,j} picks up H̃_{i-2}(Γ).
    let n = ideal.n();
    let found: Vec<(usize, u32, u64)> = candidates
        .par_iter()
        .flat_map_iter(|&w| {
            let j = bits::size(w) as i32;
            let dual_facets = gens.iter().filter(|&&g| bits::is_subset(g, w)).map(|&g| w & !g);
            let dual = SimplicialComplex::from_facets(n, dual_facets).expect("facets inside the support");
            let h = reduced_homology(&dual, field);
            h.iter()
                .filter(|&(_, r)| r > 0)
                .map(move |(deg, r)| ((deg + 2) as usize, j as u32, r as u64))
                .collect::<Vec<_>>()
        })
        .collect();
    for (i, j, v) in found {
        table.add(i, j, v);
    }
    Ok(table)
}

/// Upper Koszul complex of `b`: facets are the maximal slack sets
/// `{i : g_i < b_i}` over generators `g | x^b`. `None` when `b` is not the
/// lcm of the generators it dominates, in which case every `β_{i,b}` vanishes.
fn koszul_facets(gens: &[Monomial], b: &[u32]) -> Option<Vec<Mask>> {
    let mut lcm = vec![0u32; b.len()];
    let mut slacks = Vec::new();
    for g in gens {
        let e = g.exponents();
        if e.iter().zip(b).all(|(x, y)| x <= y) {
            let mut slack: Mask = 0;
            for k in 0..b.len() {
                lcm[k] = lcm[k].max(e[k]);
                if e[k] < b[k] {
                    slack |= 1 << k;
                }
            }
            slacks.push(slack);
        }
    }
    (lcm == b).then(|| bits::maximal(slacks))
}

/// Packs the vertices actually used into `{1..k}`, keeping their order.
fn compress(facets: &[Mask]) -> Vec<Mask> {
    let used = facets.iter().fold(0, |a, &f| a | f);
    let order = bits::vertices(used);
    facets
        .iter()
        .map(|&f| order.iter().enumerate().filter(|(_, &v)| f & bits::bit(v) != 0).fold(0, |m, (k, _)| m | (1 << k)))
        .collect()
}

/// Betti numbers of `R/I` for any monomial ideal, via upper Koszul complexes
/// over the lcm lattice. Homology is memoized by the compressed facet list.
pub fn koszul_betti(ideal: &MonomialIdeal, field: Field) -> BettiTable {
    let mut table = BettiTable::new();
    if ideal.is_zero() {
        return table;
    }
    let gens = ideal.generators();
    let lcm = ideal.lcm();
    let complexes: Vec<(u32, Vec<Mask>)> = lcm
        .divisors()
        .collect::<Vec<_>>()
        .into_par_iter()
        .filter_map(|b| koszul_facets(gens, b.exponents()).map(|fs| (b.degree(), compress(&fs))))
        .collect();

    let mut unique: Vec<&Vec<Mask>> = complexes.iter().map(|(_, fs)| fs).collect();
    unique.sort();
    unique.dedup();
    let memo: HashMap<&Vec<Mask>, HomologyProfile> = unique
        .into_par_iter()
        .map(|fs| {
            let n = bits::size(fs.iter().fold(0, |a, &f| a | f));
            let k = SimplicialComplex::from_facets(n, fs.iter().copied()).expect("compressed facets fit");
            (fs, reduced_homology(&k, field))
        })
        .collect();

    for (degree, fs) in &complexes {
        for (i, r) in memo[fs].iter() {
            // β_{i+1,b}(I) = H̃_i(K^b), which is β_{i+2,b}(R/I).
            table.add((i + 2) as usize, *degree, r as u64);
        }
    }
    table
}

/// Betti table of `R/I`: Hochster's formula for squarefree ideals, upper
/// Koszul complexes otherwise.
pub fn betti_table(ideal: &MonomialIdeal, field: Field) -> BettiTable {
    if ideal.is_squarefree() {
        hochster_betti(ideal, field).expect("squarefree input")
    } else {
        koszul_betti(ideal, field)
    }
}

/// Betti table of `R'/I^pol` via Hochster's formula on the polarization.
/// Polarization preserves graded Betti numbers.
pub fn betti_via_polarization(ideal: &MonomialIdeal, field: Field) -> Result<BettiTable> {
    let pol = ideal.polarize()?;
    hochster_betti(&pol.ideal, field)
}
