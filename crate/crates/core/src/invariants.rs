//! Dimension, depth, projective dimension, regularity, heights and
//! associated primes of `R/I`, with the Cohen-Macaulay predicates.

use std::fmt;

use serde::Serialize;

use crate::betti::{betti_table, BettiTable};
use crate::bits::{self, Mask};
use crate::error::{Error, Result};
use crate::linalg::Field;
use crate::monomial::{Monomial, MonomialIdeal, MonomialPrime};
use crate::simplicial::{alexander_dual_ideal, SimplicialComplex};

/// Minimal primes: minimal vertex covers of the supports of `G(√I)`.
pub fn minimal_primes(ideal: &MonomialIdeal) -> Result<Vec<MonomialPrime>> {
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal("minimal primes"));
    }
    let supports = ideal.radical().generator_masks();
    let mut primes: Vec<MonomialPrime> =
        bits::minimal_transversals(&supports).into_iter().map(|c| MonomialPrime::new(c).expect("non-empty cover")).collect();
    primes.sort();
    Ok(primes)
}

/// Least height of a minimal prime; `0` for the zero ideal.
pub fn height(ideal: &MonomialIdeal) -> usize {
    minimal_primes(ideal).map_or(0, |ps| ps.iter().map(MonomialPrime::height).min().unwrap_or(0))
}

/// `I : m` when it is a monomial prime, decided on the stripped generators
/// `u / gcd(u, m)` without minimizing them.
fn colon_prime(ideal: &MonomialIdeal, m: &Monomial) -> Option<Mask> {
    let stripped: Vec<Monomial> = ideal.generators().iter().map(|u| u.strip(m)).collect();
    let mut vars: Mask = 0;
    for s in &stripped {
        if s.is_one() {
            return None;
        }
        if s.degree() == 1 {
            vars |= s.support();
        }
    }
    (vars != 0 && stripped.iter().all(|s| s.support() & vars != 0)).then_some(vars)
}

/// `Ass(I)` by exhaustion: every prime of the form `I : m` with `m | lcm(G(I))`.
pub fn ass_brute_force(ideal: &MonomialIdeal) -> Result<Vec<MonomialPrime>> {
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal("associated primes"));
    }
    let mut masks: Vec<Mask> = ideal.lcm().divisors().filter_map(|m| colon_prime(ideal, &m)).collect();
    masks.sort_unstable();
    masks.dedup();
    let mut primes: Vec<MonomialPrime> = masks.into_iter().map(|v| MonomialPrime::new(v).expect("non-empty")).collect();
    primes.sort();
    Ok(primes)
}

/// Largest height over the associated primes; `0` for the zero ideal.
pub fn big_height(ideal: &MonomialIdeal) -> usize {
    ass_brute_force(ideal).map_or(0, |ps| ps.iter().map(MonomialPrime::height).max().unwrap_or(0))
}

/// The scalar invariants of `R/I` read off the Betti table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoreInvariants {
    pub n: usize,
    pub dim: usize,
    pub depth: usize,
    pub pd: usize,
    /// `reg(I)`, absent for the zero ideal.
    pub reg: Option<i64>,
    pub indeg: Option<u32>,
    pub hte: usize,
    pub betti: BettiTable,
}

impl CoreInvariants {
    pub fn is_cm(&self) -> bool {
        self.depth == self.dim
    }

    pub fn is_acm(&self) -> bool {
        self.depth + 1 >= self.dim
    }

    /// The height form of the aCM condition: `hte(I) >= pd(R/I) - 1`.
    pub fn is_acm_by_height(&self) -> bool {
        self.hte + 1 >= self.pd
    }
}

/// pd from the Betti table, depth by Auslander-Buchsbaum, dim from the
/// minimal primes.
pub fn depth_dim_pd(ideal: &MonomialIdeal, field: Field) -> CoreInvariants {
    let betti = betti_table(ideal, field);
    let n = ideal.n();
    let hte = height(ideal);
    let pd = betti.pd();
    CoreInvariants {
        n,
        dim: n - hte,
        depth: n - pd,
        pd,
        reg: betti.reg_ideal(),
        indeg: ideal.indeg(),
        hte,
        betti,
    }
}

/// Everything known about `R/I`, including `Ass(I)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InvariantReport {
    pub n: usize,
    pub dim: usize,
    pub depth: usize,
    pub pd: usize,
    pub reg: Option<i64>,
    pub indeg: Option<u32>,
    pub hte: usize,
    pub bight: usize,
    pub cm: bool,
    pub acm: bool,
    pub ass: Vec<MonomialPrime>,
}

pub fn invariant_report(ideal: &MonomialIdeal, field: Field) -> InvariantReport {
    let core = depth_dim_pd(ideal, field);
    let ass = ass_brute_force(ideal).unwrap_or_default();
    InvariantReport {
        n: core.n,
        dim: core.dim,
        depth: core.depth,
        pd: core.pd,
        reg: core.reg,
        indeg: core.indeg,
        hte: core.hte,
        bight: ass.iter().map(MonomialPrime::height).max().unwrap_or(0),
        cm: core.is_cm(),
        acm: core.is_acm(),
        ass,
    }
}

impl fmt::Display for InvariantReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let opt = |v: Option<String>| v.unwrap_or_else(|| "-".into());
        writeln!(f, "n:      {}", self.n)?;
        writeln!(f, "dim:    {}", self.dim)?;
        writeln!(f, "depth:  {}", self.depth)?;
        writeln!(f, "pd:     {}", self.pd)?;
        writeln!(f, "reg:    {}", opt(self.reg.map(|v| v.to_string())))?;
        writeln!(f, "indeg:  {}", opt(self.indeg.map(|v| v.to_string())))?;
        writeln!(f, "hte:    {}", self.hte)?;
        writeln!(f, "bight:  {}", self.bight)?;
        writeln!(f, "CM:     {}", self.cm)?;
        writeln!(f, "aCM:    {}", self.acm)?;
        let ass: Vec<String> = self.ass.iter().map(|p| p.to_string()).collect();
        write!(f, "Ass:    {}", ass.join(", "))
    }
}

/// A predicate value together with the scalars that decide it.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub holds: bool,
    pub dim: usize,
    pub depth: usize,
}

impl Verdict {
    pub fn render(&self, name: &str) -> String {
        format!("{name}: {} (dim {}, depth {})", self.holds, self.dim, self.depth)
    }
}

pub fn is_cm(ideal: &MonomialIdeal, field: Field) -> Verdict {
    let c = depth_dim_pd(ideal, field);
    Verdict { holds: c.is_cm(), dim: c.dim, depth: c.depth }
}

/// `depth R/I >= dim R/I - 1`.
pub fn is_acm(ideal: &MonomialIdeal, field: Field) -> Verdict {
    let c = depth_dim_pd(ideal, field);
    debug_assert_eq!(c.is_acm(), c.is_acm_by_height(), "aCM routes disagree on {ideal}");
    Verdict { holds: c.is_acm(), dim: c.dim, depth: c.depth }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ResolutionShape {
    Linear,
    AlmostLinear,
    Neither,
}

impl fmt::Display for ResolutionShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ResolutionShape::Linear => "linear",
            ResolutionShape::AlmostLinear => "almost linear",
            ResolutionShape::Neither => "neither",
        })
    }
}

/// Linear when `reg(I) = indeg(I)`, almost linear when `reg(I) = indeg(I) + 1`.
pub fn resolution_shape(ideal: &MonomialIdeal, field: Field) -> Result<ResolutionShape> {
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal("resolution shape"));
    }
    let betti = betti_table(ideal, field);
    let reg = betti.reg_ideal().expect("non-zero ideal");
    let indeg = i64::from(ideal.indeg().expect("non-zero ideal"));
    Ok(match reg - indeg {
        0 => ResolutionShape::Linear,
        1 => ResolutionShape::AlmostLinear,
        _ => ResolutionShape::Neither,
    })
}

/// Monomials form a regular sequence exactly when their supports are pairwise disjoint.
pub fn is_monomial_regular_sequence(monomials: &[Monomial]) -> bool {
    let mut seen: Mask = 0;
    for m in monomials {
        if m.is_one() || m.support() & seen != 0 {
            return false;
        }
        seen |= m.support();
    }
    true
}

/// `reg(f_1, ..., f_r) = Σ deg f_i - r + 1` for a regular sequence.
pub fn reg_of_regular_sequence(monomials: &[Monomial]) -> Result<i64> {
    if monomials.is_empty() {
        return Err(Error::InvalidSpec("empty sequence".into()));
    }
    if monomials.iter().any(Monomial::is_one) {
        return Err(Error::UnitIdeal);
    }
    if !is_monomial_regular_sequence(monomials) {
        return Err(Error::NotRegularSequence);
    }
    let total: i64 = monomials.iter().map(|m| i64::from(m.degree())).sum();
    Ok(total - monomials.len() as i64 + 1)
}

/// Both sides of `reg(I_Δ) - indeg(I_Δ) = dim k[Δ∨] - depth k[Δ∨]`, plus
/// the companion identities `reg(I_Δ) = pd k[Δ∨]` and
/// `indeg(I_Δ) = n - dim k[Δ∨]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct TeraiCheck {
    pub lhs: i64,
    pub rhs: i64,
    pub equal: bool,
    pub reg_equals_dual_pd: bool,
    pub indeg_equals_dual_codim: bool,
}

impl TeraiCheck {
    pub fn holds(&self) -> bool {
        self.equal && self.reg_equals_dual_pd && self.indeg_equals_dual_codim
    }
}

pub fn terai_identity_check(delta: &SimplicialComplex, field: Field) -> Result<TeraiCheck> {
    let dual = delta.alexander_dual()?;
    let ideal = delta.stanley_reisner_ideal()?;
    let dual_ideal = dual.stanley_reisner_ideal()?;
    let primal = betti_table(&ideal, field);
    let reg = primal.reg_ideal().expect("not the simplex");
    let indeg = i64::from(ideal.indeg().expect("not the simplex"));
    let d = depth_dim_pd(&dual_ideal, field);
    let lhs = reg - indeg;
    let rhs = d.dim as i64 - d.depth as i64;
    Ok(TeraiCheck {
        lhs,
        rhs,
        equal: lhs == rhs,
        reg_equals_dual_pd: reg == d.pd as i64,
        indeg_equals_dual_codim: indeg == (delta.n() - d.dim) as i64,
    })
}

/// For squarefree `I`: aCM exactly when `I∨` has a linear or almost linear
/// resolution, and CM exactly when it is linear. Returns the two
/// equivalences as booleans.
pub fn dual_shape_equivalences(ideal: &MonomialIdeal, field: Field) -> Result<(bool, bool)> {
    let dual = alexander_dual_ideal(ideal)?;
    let shape = resolution_shape(&dual, field)?;
    let c = depth_dim_pd(ideal, field);
    let acm_side = c.is_acm() == matches!(shape, ResolutionShape::Linear | ResolutionShape::AlmostLinear);
    let cm_side = c.is_cm() == (shape == ResolutionShape::Linear);
    Ok((acm_side, cm_side))
}
