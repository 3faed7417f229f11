use std::io::Read;
use std::path::PathBuf;

use acm_core::bits;
use acm_core::text::{parse_complex, parse_ideal};
use acm_core::{Error, MonomialIdeal, Result, SimplicialComplex};

/// Reads the positional argument, the file, or stdin, in that order.
pub fn read_source(inline: Option<&str>, file: Option<&PathBuf>) -> Result<String> {
    if let Some(s) = inline {
        return Ok(s.to_string());
    }
    if let Some(path) = file {
        return std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("cannot read {}: {e}", path.display())));
    }
    let mut buf = String::new();
    std::io::stdin().read_to_string(&mut buf).map_err(|e| Error::Parse(format!("cannot read stdin: {e}")))?;
    if buf.trim().is_empty() {
        return Err(Error::Parse("no input: pass it inline, with --file, or on stdin".into()));
    }
    Ok(buf)
}

pub enum Object {
    Ideal(MonomialIdeal),
    Complex(SimplicialComplex),
}

fn looks_like_complex(s: &str) -> bool {
    let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if t.starts_with("{\"") {
        return t.contains("\"facets\"");
    }
    t.starts_with('{') || t.starts_with("n=")
}

/// Complexes are recognised by their `{..}` facets or a `"facets"` JSON key;
/// anything else is read as an ideal.
pub fn parse_object(s: &str, n: Option<usize>) -> Result<Object> {
    if looks_like_complex(s) {
        Ok(Object::Complex(parse_complex(s, n)?))
    } else {
        let ideal = parse_ideal(s, n)?;
        warn_partial_support(&ideal);
        Ok(Object::Ideal(ideal))
    }
}

pub fn warn_partial_support(ideal: &MonomialIdeal) {
    if !ideal.is_zero() && !ideal.is_full_supported() {
        eprintln!(
            "warning: the generators involve only {} out of x1..x{}",
            bits::format_set(ideal.support()),
            ideal.n()
        );
    }
}

impl Object {
    /// The ideal itself, or the Stanley-Reisner ideal of a complex.
    pub fn ideal(&self) -> Result<MonomialIdeal> {
        match self {
            Object::Ideal(i) => Ok(i.clone()),
            Object::Complex(c) => c.stanley_reisner_ideal(),
        }
    }

    /// The complex itself, or the complex of a squarefree ideal.
    pub fn complex(&self) -> Result<SimplicialComplex> {
        match self {
            Object::Ideal(i) => SimplicialComplex::of_ideal(i),
            Object::Complex(c) => Ok(c.clone()),
        }
    }
}
