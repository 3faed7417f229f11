//! Fast paths checked against the general pipeline over instance families.

use std::fmt;

use rand::Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::acm_simplicial::{
    acm_implies_almost_pure, connected_iff_acm_in_dim_two, is_acm_via_links, is_cm_via_reisner, links_of_acm_are_acm,
};
use crate::error::{Error, Result};
use crate::families;
use crate::homology::reduced_homology;
use crate::invariants::{ass_brute_force, depth_dim_pd, dual_shape_equivalences, minimal_primes, terai_identity_check, CoreInvariants};
use crate::linalg::Field;
use crate::monomial::{MonomialIdeal, MonomialPrime};
use crate::polymatroidal::{
    classify_acm_transversal, is_polymatroidal, power_decomposition_holds, transversal_ass, transversal_depth,
    transversal_dim, transversal_is_acm, veronese_ass, veronese_depth, veronese_generate, veronese_is_acm,
    veronese_is_cm, veronese_recognize, TransversalSpec, VeroneseSpec,
};
use crate::simplicial::SimplicialComplex;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    Veronese,
    Transversal,
    Complex,
    Squarefree,
}

impl Family {
    pub const ALL: [Family; 4] = [Family::Veronese, Family::Transversal, Family::Complex, Family::Squarefree];

    pub fn name(self) -> &'static str {
        match self {
            Family::Veronese => "veronese",
            Family::Transversal => "transversal",
            Family::Complex => "complex",
            Family::Squarefree => "squarefree",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Family::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown family `{s}`; expected veronese, transversal, complex or squarefree")))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckTally {
    pub name: &'static str,
    pub passed: usize,
    pub failed: usize,
    pub skipped: usize,
    /// The first failing instance in family order.
    pub counterexample: Option<String>,
}

impl CheckTally {
    pub fn ok(&self) -> bool {
        self.failed == 0
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ValidationMatrix {
    pub family: String,
    pub instances: usize,
    pub checks: Vec<CheckTally>,
}

impl ValidationMatrix {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(CheckTally::ok)
    }

    pub fn check(&self, name: &str) -> Option<&CheckTally> {
        self.checks.iter().find(|c| c.name == name)
    }
}

impl fmt::Display for ValidationMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}: {} instances", self.family, self.instances)?;
        let width = self.checks.iter().map(|c| c.name.len()).max().unwrap_or(5).max(5);
        writeln!(f, "  {:width$}  {:>7}  {:>7}  {:>7}", "check", "pass", "fail", "skip")?;
        for c in &self.checks {
            let mark = if c.ok() { "PASS" } else { "FAIL" };
            writeln!(f, "  {:width$}  {:>7}  {:>7}  {:>7}  {mark}", c.name, c.passed, c.failed, c.skipped)?;
        }
        for c in self.checks.iter().filter(|c| !c.ok()) {
            if let Some(ex) = &c.counterexample {
                writeln!(f, "  first counterexample for {}: {ex}", c.name)?;
            }
        }
        Ok(())
    }
}

/// Runs `eval` on every item in parallel and tallies outcomes in item order.
/// `None` marks a check as not applicable; an error fails every check.
pub fn run_checks<T: Sync>(
    family: impl Into<String>,
    names: &[&'static str],
    items: &[T],
    describe: impl Fn(&T) -> String + Sync,
    eval: impl Fn(&T) -> Result<Vec<Option<bool>>> + Sync,
) -> ValidationMatrix {
    let outcomes: Vec<std::result::Result<Vec<Option<bool>>, String>> =
        items.par_iter().map(|t| eval(t).map_err(|e| e.to_string())).collect();
    let mut checks: Vec<CheckTally> =
        names.iter().map(|&name| CheckTally { name, passed: 0, failed: 0, skipped: 0, counterexample: None }).collect();
    for (item, outcome) in items.iter().zip(outcomes) {
        for (k, tally) in checks.iter_mut().enumerate() {
            let result = match &outcome {
                Ok(v) => v[k].map(Ok),
                Err(msg) => Some(Err(msg)),
            };
            match result {
                None => tally.skipped += 1,
                Some(Ok(true)) => tally.passed += 1,
                Some(fail) => {
                    tally.failed += 1;
                    if tally.counterexample.is_none() {
                        tally.counterexample = Some(match fail {
                            Err(msg) => format!("{} ({msg})", describe(item)),
                            _ => describe(item),
                        });
                    }
                }
            }
        }
    }
    ValidationMatrix { family: family.into(), instances: items.len(), checks }
}

/// Checks shared by every ideal family.
fn ideal_checks(ideal: &MonomialIdeal, core: &CoreInvariants, ass: &[MonomialPrime]) -> [Option<bool>; 3] {
    let hte = core.hte;
    let bight = ass.iter().map(MonomialPrime::height).max().unwrap_or(0);
    let max_ideal = (1u64 << ideal.n()) - 1;
    let m_associated = ass.iter().any(|p| p.mask() == max_ideal);
    [
        Some(core.is_acm_by_height() == core.is_acm()),
        core.is_acm().then(|| bight <= hte + 1),
        (core.is_acm() && m_associated && is_polymatroidal(ideal)).then(|| veronese_recognize(ideal).is_some()),
    ]
}

const IDEAL_CHECK_NAMES: [&str; 3] = ["height route agrees", "aCM bounds big height", "m associated forces Veronese type"];

pub const TRANSVERSAL_CHECKS: [&str; 10] = [
    "depth closed form",
    "dim closed form",
    "ass via connected subsets",
    "aCM closed form",
    "aCM classifier",
    "polymatroidal",
    "power decomposition",
    IDEAL_CHECK_NAMES[0],
    IDEAL_CHECK_NAMES[1],
    IDEAL_CHECK_NAMES[2],
];

pub fn validate_transversal(specs: &[TransversalSpec], field: Field) -> ValidationMatrix {
    run_checks("transversal", &TRANSVERSAL_CHECKS, specs, ToString::to_string, |spec| {
        let ideal = spec.ideal();
        let core = depth_dim_pd(&ideal, field);
        let ass = ass_brute_force(&ideal)?;
        let classifier = if spec.is_full_supported() {
            Some(classify_acm_transversal(spec)?.verdict.is_acm() == core.is_acm())
        } else {
            None
        };
        let powers = power_decomposition_holds(spec, 1)? && power_decomposition_holds(spec, 2)?;
        let [p23, c24, p28] = ideal_checks(&ideal, &core, &ass);
        Ok(vec![
            Some(transversal_depth(spec) == core.depth),
            Some(transversal_dim(spec) == core.dim),
            Some(transversal_ass(spec) == ass),
            Some(transversal_is_acm(spec) == core.is_acm()),
            classifier,
            Some(is_polymatroidal(&ideal)),
            Some(powers),
            p23,
            c24,
            p28,
        ])
    })
}

pub const VERONESE_CHECKS: [&str; 9] = [
    "ass closed form",
    "depth closed form",
    "aCM closed form",
    "CM closed form",
    "polymatroidal",
    "recognized",
    IDEAL_CHECK_NAMES[0],
    IDEAL_CHECK_NAMES[1],
    IDEAL_CHECK_NAMES[2],
];

pub fn validate_veronese(specs: &[VeroneseSpec], field: Field) -> ValidationMatrix {
    run_checks("veronese", &VERONESE_CHECKS, specs, ToString::to_string, |spec| {
        let ideal = veronese_generate(spec)?;
        let core = depth_dim_pd(&ideal, field);
        let ass = ass_brute_force(&ideal)?;
        let ass_check = if spec.d > 1 { Some(veronese_ass(spec)? == ass) } else { None };
        let [p23, c24, p28] = ideal_checks(&ideal, &core, &ass);
        Ok(vec![
            ass_check,
            Some(veronese_depth(spec) == core.depth),
            Some(veronese_is_acm(spec) == core.is_acm()),
            Some(veronese_is_cm(spec) == core.is_cm()),
            Some(is_polymatroidal(&ideal)),
            Some(veronese_recognize(&ideal).as_ref() == Some(spec)),
            p23,
            c24,
            p28,
        ])
    })
}

/// `H̃_i(lk F) = 0` for every face `F` and `i < dim lk F - 1`.
fn weak_link_vanishing(delta: &SimplicialComplex, field: Field) -> Result<bool> {
    for face in delta.faces() {
        let link = delta.link(face)?;
        let bound = link.dim() - 1;
        if reduced_homology(&link, field).iter().any(|(i, r)| i < bound && r > 0) {
            return Ok(false);
        }
    }
    Ok(true)
}

pub const COMPLEX_CHECKS: [&str; 6] = [
    "links vs pipeline aCM",
    "Reisner vs pipeline CM",
    "aCM implies almost pure",
    "dim 2: connected iff aCM",
    "links of aCM are aCM",
    "link vanishing forces connected",
];

pub fn validate_complexes(complexes: &[SimplicialComplex], field: Field) -> ValidationMatrix {
    run_checks("complex", &COMPLEX_CHECKS, complexes, ToString::to_string, |delta| {
        let core = depth_dim_pd(&delta.stanley_reisner_ideal()?, field);
        let (acm, _) = is_acm_via_links(delta, field)?;
        let dim_two = if delta.dim() == 2 { Some(connected_iff_acm_in_dim_two(delta, field)?) } else { None };
        let links = if acm { Some(links_of_acm_are_acm(delta, field)?) } else { None };
        let connected = if delta.dim() >= 2 && weak_link_vanishing(delta, field)? { Some(delta.is_connected()) } else { None };
        Ok(vec![
            Some(acm == core.is_acm()),
            Some(is_cm_via_reisner(delta, field)? == core.is_cm()),
            Some(acm_implies_almost_pure(delta, field)?),
            dim_two,
            links,
            connected,
        ])
    })
}

pub const SQUAREFREE_CHECKS: [&str; 6] = [
    "Terai identity",
    "aCM iff dual (almost) linear",
    "CM iff dual linear",
    "ass equals minimal primes",
    IDEAL_CHECK_NAMES[0],
    IDEAL_CHECK_NAMES[1],
];

pub fn describe_ideal(ideal: &MonomialIdeal) -> String {
    format!("n={} {ideal}", ideal.n())
}

pub fn validate_squarefree(ideals: &[MonomialIdeal], field: Field) -> ValidationMatrix {
    run_checks("squarefree", &SQUAREFREE_CHECKS, ideals, describe_ideal, |ideal| {
        let delta = SimplicialComplex::of_ideal(ideal)?;
        let core = depth_dim_pd(ideal, field);
        let ass = ass_brute_force(ideal)?;
        let (acm_side, cm_side) = dual_shape_equivalences(ideal, field)?;
        let [p23, c24, _] = ideal_checks(ideal, &core, &ass);
        Ok(vec![
            Some(terai_identity_check(&delta, field)?.holds()),
            Some(acm_side),
            Some(cm_side),
            Some(minimal_primes(ideal)? == ass),
            p23,
            c24,
        ])
    })
}

/// Parameters of one `validate` run.
#[derive(Clone, Debug)]
pub struct ValidateConfig {
    pub family: Family,
    pub n_max: usize,
    pub d_max: usize,
    pub up_to_symmetry: bool,
    pub field: Field,
    /// Extra random instances drawn from `seed`, bounded by `n_max` and `d_max`.
    pub samples: usize,
    pub seed: u64,
}

fn random_veronese<R: Rng>(rng: &mut R, n_max: usize, d_max: u32) -> VeroneseSpec {
    let n = rng.gen_range(1..=n_max.max(1));
    let d = rng.gen_range(1..=d_max.max(1));
    loop {
        let a: Vec<u32> = (0..n).map(|_| rng.gen_range(1..=d)).collect();
        if a.iter().sum::<u32>() >= d {
            return VeroneseSpec::new(d, a).expect("bounds in range");
        }
    }
}

pub fn validate(config: &ValidateConfig) -> Result<ValidationMatrix> {
    let c = config;
    let mut rng = families::seeded(c.seed);
    let mut matrix = match c.family {
        Family::Transversal => {
            let mut specs = families::transversal_family(c.n_max, 1..=c.d_max, c.up_to_symmetry)?;
            specs.extend(families::sample(&mut rng, c.samples, |r| families::random_transversal(r, c.n_max, c.d_max)));
            validate_transversal(&specs, c.field)
        }
        Family::Veronese => {
            let d_max = c.d_max as u32;
            let mut specs = families::veronese_family(c.n_max, 1..=d_max, c.up_to_symmetry)?;
            specs.extend(families::sample(&mut rng, c.samples, |r| random_veronese(r, c.n_max, d_max)));
            validate_veronese(&specs, c.field)
        }
        Family::Complex => {
            let mut complexes = families::complex_family(c.n_max, c.up_to_symmetry)?;
            complexes.extend(families::sample(&mut rng, c.samples, |r| families::random_complex(r, c.n_max)));
            validate_complexes(&complexes, c.field)
        }
        Family::Squarefree => {
            let mut ideals = families::squarefree_family(c.n_max, c.up_to_symmetry)?;
            ideals.extend(families::sample(&mut rng, c.samples, |r| families::random_squarefree_ideal(r, c.n_max)));
            validate_squarefree(&ideals, c.field)
        }
    };
    let bounds = match c.family {
        Family::Complex | Family::Squarefree => format!("n <= {}", c.n_max),
        _ => format!("n <= {}, d <= {}", c.n_max, c.d_max),
    };
    matrix.family = format!("{} ({bounds}, {})", c.family, c.field);
    Ok(matrix)
}
