use std::fmt::Write as _;

use acm_core::acm_simplicial::is_acm_via_links;
use acm_core::betti::betti_table;
use acm_core::families;
use acm_core::homology::reduced_homology;
use acm_core::invariants::{ass_brute_force, big_height, depth_dim_pd, invariant_report, is_acm, is_cm};
use acm_core::polymatroidal::{
    classify_acm_transversal, classify_cm_polymatroidal, is_polymatroidal, transversal_ass, transversal_depth,
    transversal_dim, transversal_is_acm, transversal_power_decomposition, veronese_ass, veronese_depth,
    veronese_generate, veronese_is_acm, veronese_is_cm, veronese_recognize, TransversalSpec,
};
use acm_core::simplicial::alexander_dual_ideal;
use acm_core::text::{ideal_to_json, parse_ideal, parse_transversal, parse_veronese};
use acm_core::validate::{describe_ideal, validate, Family, ValidateConfig};
use acm_core::{Field, MonomialIdeal, MonomialPrime, Result, SimplicialComplex};
use rayon::prelude::*;
use serde_json::json;

use crate::input::{parse_object, warn_partial_support, Object};

/// What a verb prints and the exit code it asks for.
pub struct Output {
    pub text: String,
    pub code: u8,
}

impl Output {
    fn ok(text: impl Into<String>) -> Self {
        Output { text: text.into(), code: 0 }
    }
}

fn json_text(value: &impl serde::Serialize) -> String {
    serde_json::to_string(value).expect("serializable")
}

fn primes_text(primes: &[MonomialPrime]) -> String {
    primes.iter().map(ToString::to_string).collect::<Vec<_>>().join(", ")
}

pub fn analyze(src: &str, n: Option<usize>, field: Field, as_json: bool) -> Result<Output> {
    let report = invariant_report(&parse_object(src, n)?.ideal()?, field);
    Ok(Output::ok(if as_json { json_text(&report) } else { report.to_string() }))
}

pub fn acm(src: &str, n: Option<usize>, field: Field, as_json: bool) -> Result<Output> {
    let object = parse_object(src, n)?;
    let verdict = is_acm(&object.ideal()?, field);
    let report = match &object {
        Object::Complex(c) => Some(is_acm_via_links(c, field)?.1),
        Object::Ideal(_) => None,
    };
    if as_json {
        let mut value = json!({ "acm": verdict.holds, "dim": verdict.dim, "depth": verdict.depth });
        if let Some(r) = &report {
            value["failures"] = serde_json::to_value(r.failures().collect::<Vec<_>>()).expect("serializable");
        }
        return Ok(Output::ok(value.to_string()));
    }
    let mut text = verdict.render("aCM");
    for failure in report.iter().flat_map(|r| r.failures()) {
        let degrees: Vec<String> = failure.offending.iter().map(ToString::to_string).collect();
        let _ = write!(
            text,
            "\nface {}: link of dim {} has nonzero H~ in degree {}",
            acm_core::bits::format_set(failure.face),
            failure.link_dim,
            degrees.join(", ")
        );
    }
    Ok(Output::ok(text))
}

pub fn cm(src: &str, n: Option<usize>, field: Field, as_json: bool) -> Result<Output> {
    let verdict = is_cm(&parse_object(src, n)?.ideal()?, field);
    Ok(Output::ok(if as_json {
        json!({ "cm": verdict.holds, "dim": verdict.dim, "depth": verdict.depth }).to_string()
    } else {
        verdict.render("CM")
    }))
}

pub fn dual(src: &str, n: Option<usize>, as_json: bool) -> Result<Output> {
    Ok(Output::ok(match parse_object(src, n)? {
        Object::Ideal(i) => {
            let d = alexander_dual_ideal(&i)?;
            if as_json { json_text(&ideal_to_json(&d)) } else { d.to_string() }
        }
        Object::Complex(c) => {
            let d = c.alexander_dual()?;
            if as_json { json_text(&d.to_json()) } else { d.to_string() }
        }
    }))
}

pub fn homology(src: &str, n: Option<usize>, field: Field, as_json: bool) -> Result<Output> {
    let complex = parse_object(src, n)?.complex()?;
    let profile = reduced_homology(&complex, field);
    Ok(Output::ok(if as_json {
        let ranks: Vec<_> = profile.iter().map(|(i, r)| json!({ "degree": i, "rank": r })).collect();
        json!({ "field": field.to_string(), "reduced_homology": ranks }).to_string()
    } else if profile.iter().next().is_none() {
        "void complex: all reduced homology vanishes".to_string()
    } else {
        profile.to_string()
    }))
}

pub fn betti(src: &str, n: Option<usize>, field: Field, as_json: bool) -> Result<Output> {
    let table = betti_table(&parse_object(src, n)?.ideal()?, field);
    Ok(Output::ok(if as_json { json_text(&table.to_json()) } else { table.to_string() }))
}

fn is_transversal_text(src: &str) -> bool {
    let t: String = src.chars().filter(|c| !c.is_whitespace()).collect();
    t.starts_with("T(") || (t.starts_with("{\"") && t.contains("\"sets\""))
}

pub fn classify(src: &str, n: Option<usize>, as_json: bool) -> Result<Output> {
    if is_transversal_text(src) {
        let spec = parse_transversal(src)?;
        let acm = classify_acm_transversal(&spec)?;
        let cm = classify_cm_polymatroidal(&spec.ideal())?;
        if as_json {
            return Ok(Output::ok(json!({ "spec": spec.to_string(), "acm": acm, "cm": cm }).to_string()));
        }
        let mut text = format!("{spec}\naCM classification: {}", acm.verdict);
        if acm.needs_review {
            text.push_str(" (every bound equals d - 1; flagged for review)");
        }
        let _ = write!(text, "\nCM classification: {cm}");
        return Ok(Output::ok(text));
    }
    let ideal = parse_ideal(src, n)?;
    warn_partial_support(&ideal);
    let cm = classify_cm_polymatroidal(&ideal)?;
    let veronese = veronese_recognize(&ideal);
    if as_json {
        return Ok(Output::ok(json!({ "cm": cm, "veronese": veronese.map(|v| v.to_string()) }).to_string()));
    }
    let mut text = format!("CM classification: {cm}");
    if let Some(v) = veronese {
        let _ = write!(text, "\nVeronese type: {v}");
    }
    Ok(Output::ok(text))
}

pub fn veronese(src: &str, field: Field, as_json: bool) -> Result<Output> {
    let spec = parse_veronese(src)?;
    let ideal = veronese_generate(&spec)?;
    let ass = if spec.d > 1 { veronese_ass(&spec)? } else { ass_brute_force(&ideal)? };
    let depth = veronese_depth(&spec);
    let (acm, cm) = if spec.d > 1 {
        (veronese_is_acm(&spec), veronese_is_cm(&spec))
    } else {
        let c = depth_dim_pd(&ideal, field);
        (c.is_acm(), c.is_cm())
    };
    Ok(Output::ok(if as_json {
        json!({ "spec": spec, "ideal": ideal_to_json(&ideal), "ass": ass, "depth": depth, "acm": acm, "cm": cm }).to_string()
    } else {
        format!("{spec}\nideal:  {ideal}\nAss:    {}\ndepth:  {depth}\naCM:    {acm}\nCM:     {cm}", primes_text(&ass))
    }))
}

pub fn transversal(src: &str, power: u32, as_json: bool) -> Result<Output> {
    let spec = parse_transversal(src)?;
    let ideal = spec.ideal();
    let ass = transversal_ass(&spec);
    let decomposition = transversal_power_decomposition(&spec, power)?;
    let pieces: Vec<String> = decomposition.iter().map(|(p, e)| format!("{p}^{e}")).collect();
    Ok(Output::ok(if as_json {
        let pieces: Vec<_> = decomposition.iter().map(|(p, e)| json!({ "prime": p, "exponent": e })).collect();
        json!({
            "spec": spec.to_json(),
            "ideal": ideal_to_json(&ideal),
            "components": spec.components(),
            "ass": ass,
            "depth": transversal_depth(&spec),
            "dim": transversal_dim(&spec),
            "acm": transversal_is_acm(&spec),
            "power": power,
            "decomposition": pieces,
        })
        .to_string()
    } else {
        format!(
            "{spec}\nideal:       {ideal}\ncomponents:  {}\nAss:         {}\ndepth:       {}\ndim:         {}\naCM:         {}\n{:<13}{}",
            spec.components(),
            primes_text(&ass),
            transversal_depth(&spec),
            transversal_dim(&spec),
            transversal_is_acm(&spec),
            format!("I^{power}:"),
            pieces.join(" ∩ ")
        )
    }))
}

pub fn run_validate(config: &ValidateConfig, as_json: bool) -> Result<Output> {
    let matrix = validate(config)?;
    let code = if matrix.all_passed() { 0 } else { 3 };
    let text = if as_json { json_text(&matrix) } else { matrix.to_string().trim_end().to_string() };
    Ok(Output { text, code })
}

/// Bounds for `enumerate`.
pub struct Sweep {
    pub family: Family,
    pub n_max: usize,
    pub d_max: usize,
    pub up_to_symmetry: bool,
    pub field: Field,
}

type Row = [String; 8];

fn row(spec: String, ideal: &MonomialIdeal, field: Field, classification: String) -> Row {
    let c = depth_dim_pd(ideal, field);
    [
        spec,
        c.dim.to_string(),
        c.depth.to_string(),
        c.hte.to_string(),
        big_height(ideal).to_string(),
        c.is_cm().to_string(),
        c.is_acm().to_string(),
        classification,
    ]
}

fn transversal_row(spec: &TransversalSpec, field: Field) -> Result<Row> {
    let class = if spec.is_full_supported() {
        classify_acm_transversal(spec)?.verdict.to_string()
    } else {
        "not full-supported".to_string()
    };
    Ok(row(spec.to_string(), &spec.ideal(), field, class))
}

fn complex_row(delta: &SimplicialComplex, field: Field) -> Result<Row> {
    let purity = if delta.is_pure() {
        "pure"
    } else if delta.is_almost_pure() {
        "almost pure"
    } else {
        "not almost pure"
    };
    Ok(row(delta.to_string(), &delta.stanley_reisner_ideal()?, field, purity.to_string()))
}

fn squarefree_row(ideal: &MonomialIdeal, field: Field) -> Result<Row> {
    let class = if is_polymatroidal(ideal) {
        classify_cm_polymatroidal(ideal)?.to_string()
    } else {
        "not polymatroidal".to_string()
    };
    Ok(row(describe_ideal(ideal), ideal, field, class))
}

pub fn enumerate(sweep: &Sweep) -> Result<Output> {
    let f = sweep.field;
    let rows: Vec<Row> = match sweep.family {
        Family::Transversal => families::transversal_family(sweep.n_max, 1..=sweep.d_max, sweep.up_to_symmetry)?
            .par_iter()
            .map(|s| transversal_row(s, f))
            .collect::<Result<_>>()?,
        Family::Veronese => families::veronese_family(sweep.n_max, 1..=sweep.d_max as u32, sweep.up_to_symmetry)?
            .par_iter()
            .map(|s| {
                let ideal = veronese_generate(s)?;
                Ok(row(s.to_string(), &ideal, f, classify_cm_polymatroidal(&ideal)?.to_string()))
            })
            .collect::<Result<_>>()?,
        Family::Complex => families::complex_family(sweep.n_max, sweep.up_to_symmetry)?
            .par_iter()
            .map(|d| complex_row(d, f))
            .collect::<Result<_>>()?,
        Family::Squarefree => families::squarefree_family(sweep.n_max, sweep.up_to_symmetry)?
            .par_iter()
            .map(|i| squarefree_row(i, f))
            .collect::<Result<_>>()?,
    };
    let mut writer = csv::Writer::from_writer(Vec::new());
    let write_err = |e: csv::Error| acm_core::Error::InvalidSpec(format!("csv: {e}"));
    writer
        .write_record(["spec", "dim", "depth", "hte", "bight", "cm", "acm", "classification"])
        .map_err(write_err)?;
    for r in &rows {
        writer.write_record(r).map_err(write_err)?;
    }
    let bytes = writer.into_inner().map_err(|e| acm_core::Error::InvalidSpec(format!("csv: {e}")))?;
    let text = String::from_utf8(bytes).expect("utf-8 records");
    Ok(Output::ok(text.trim_end().to_string()))
}
