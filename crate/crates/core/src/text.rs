//! Text and JSON formats for ideals, complexes and structured specs.
//!
//! * ideal: `(x1*x3, x2^2)`, `()` for the zero ideal; `1` denotes the unit monomial
//! * complex: `{1,2},{4,5},{3}` with an optional `n=5;` prefix; `{}` is the empty face
//! * Veronese: `V(d=2; a=1,2,1; n=3)`
//! * transversal: `T(n=4; {1,2},{3,4})`
//!
//! Whitespace is ignored everywhere. When the variable count is neither
//! given nor written, it is inferred from the largest index that occurs.

use serde::{Deserialize, Serialize};

use crate::bits::{self, Mask, MAX_VERTICES};
use crate::error::{Error, Result};
use crate::monomial::{Monomial, MonomialIdeal};
use crate::polymatroidal::{TransversalSpec, VeroneseSpec};
use crate::simplicial::{ComplexJson, SimplicialComplex};

fn parse_err(msg: impl Into<String>) -> Error {
    Error::Parse(msg.into())
}

fn strip_ws(s: &str) -> String {
    s.chars().filter(|c| !c.is_whitespace()).collect()
}

fn looks_like_json(s: &str) -> bool {
    let t = s.trim_start();
    t.starts_with('{') && t[1..].trim_start().starts_with('"')
}

fn parse_index(s: &str, what: &str) -> Result<usize> {
    let v: usize = s.parse().map_err(|_| parse_err(format!("bad {what} `{s}`")))?;
    if v == 0 {
        return Err(parse_err(format!("{what} indices start at 1")));
    }
    if v > MAX_VERTICES {
        return Err(Error::TooManyVariables { max: MAX_VERTICES, found: v });
    }
    Ok(v)
}

/// `(variable, exponent)` factors of one monomial term.
fn parse_term(term: &str) -> Result<Vec<(usize, u32)>> {
    if term.is_empty() {
        return Err(parse_err("empty monomial"));
    }
    if term == "1" {
        return Ok(Vec::new());
    }
    term.split('*')
        .map(|factor| {
            let (var, exp) = match factor.split_once('^') {
                Some((v, e)) => (v, e.parse::<u32>().map_err(|_| parse_err(format!("bad exponent in `{factor}`")))?),
                None => (factor, 1),
            };
            let idx = var
                .strip_prefix('x')
                .ok_or_else(|| parse_err(format!("expected a variable like x3, got `{var}`")))?;
            Ok((parse_index(idx, "variable")?, exp))
        })
        .collect()
}

fn build_monomial(n: usize, factors: &[(usize, u32)]) -> Result<Monomial> {
    let mut exps = vec![0u32; n];
    for &(v, e) in factors {
        if v > n {
            return Err(Error::AmbientMismatch { expected: n, found: v });
        }
        exps[v - 1] = exps[v - 1].checked_add(e).ok_or_else(|| parse_err("exponent overflow"))?;
    }
    Ok(Monomial::new(exps))
}

fn resolve_n(n: Option<usize>, largest: usize) -> Result<usize> {
    match n {
        Some(n) => Ok(n),
        None if largest == 0 => Err(parse_err("cannot infer the number of variables; pass it explicitly")),
        None => Ok(largest),
    }
}

/// A single monomial such as `x1^2*x2` or `1`.
pub fn parse_monomial(s: &str, n: Option<usize>) -> Result<Monomial> {
    let factors = parse_term(&strip_ws(s))?;
    let n = resolve_n(n, factors.iter().map(|f| f.0).max().unwrap_or(0))?;
    build_monomial(n, &factors)
}

/// JSON form of an ideal: `{"n":3,"generators":[[1,1,0],[1,0,1]]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdealJson {
    pub n: usize,
    pub generators: Vec<Vec<u32>>,
}

pub fn ideal_to_json(ideal: &MonomialIdeal) -> IdealJson {
    IdealJson { n: ideal.n(), generators: ideal.generators().iter().map(|g| g.exponents().to_vec()).collect() }
}

/// Parses the ideal grammar or its JSON form. Outer parentheses are optional.
pub fn parse_ideal(s: &str, n: Option<usize>) -> Result<MonomialIdeal> {
    if looks_like_json(s) {
        let json: IdealJson = serde_json::from_str(s).map_err(|e| parse_err(e.to_string()))?;
        if let Some(n) = n.filter(|&n| n != json.n) {
            return Err(Error::AmbientMismatch { expected: n, found: json.n });
        }
        return MonomialIdeal::new(json.n, json.generators.into_iter().map(Monomial::new));
    }
    let body = strip_ws(s);
    let inner = match body.strip_prefix('(') {
        Some(rest) => rest.strip_suffix(')').ok_or_else(|| parse_err("unbalanced parentheses"))?,
        None => body.as_str(),
    };
    let terms: Vec<Vec<(usize, u32)>> =
        if inner.is_empty() { Vec::new() } else { inner.split(',').map(parse_term).collect::<Result<_>>()? };
    let largest = terms.iter().flatten().map(|f| f.0).max().unwrap_or(0);
    let n = resolve_n(n, largest)?;
    let gens = terms.iter().map(|t| build_monomial(n, t)).collect::<Result<Vec<_>>>()?;
    MonomialIdeal::new(n, gens)
}

/// Comma-separated `{..}` groups of vertex indices.
fn parse_sets(body: &str) -> Result<Vec<Vec<usize>>> {
    let mut out = Vec::new();
    let mut rest = body;
    while !rest.is_empty() {
        let open = rest.strip_prefix('{').ok_or_else(|| parse_err(format!("expected `{{` at `{rest}`")))?;
        let close = open.find('}').ok_or_else(|| parse_err("unclosed `{`"))?;
        let inner = &open[..close];
        let set = if inner.is_empty() {
            Vec::new()
        } else {
            inner.split(',').map(|v| parse_index(v, "vertex")).collect::<Result<Vec<_>>>()?
        };
        out.push(set);
        rest = &open[close + 1..];
        if let Some(after) = rest.strip_prefix(',') {
            if after.is_empty() {
                return Err(parse_err("trailing comma"));
            }
            rest = after;
        } else if !rest.is_empty() {
            return Err(parse_err(format!("expected `,` at `{rest}`")));
        }
    }
    Ok(out)
}

fn split_n_prefix(body: &str) -> Result<(Option<usize>, &str)> {
    match body.strip_prefix("n=") {
        Some(rest) => {
            let (num, tail) = rest.split_once(';').ok_or_else(|| parse_err("expected `;` after n=..."))?;
            let n: usize = num.parse().map_err(|_| parse_err(format!("bad vertex count `{num}`")))?;
            Ok((Some(n), tail))
        }
        None => Ok((None, body)),
    }
}

fn merge_n(flag: Option<usize>, written: Option<usize>) -> Result<Option<usize>> {
    match (flag, written) {
        (Some(a), Some(b)) if a != b => Err(Error::AmbientMismatch { expected: a, found: b }),
        (a, b) => Ok(a.or(b)),
    }
}

/// Parses the complex grammar or its JSON form. An empty facet list is the
/// void complex.
pub fn parse_complex(s: &str, n: Option<usize>) -> Result<SimplicialComplex> {
    if looks_like_json(s) {
        let json: ComplexJson = serde_json::from_str(s).map_err(|e| parse_err(e.to_string()))?;
        merge_n(n, Some(json.n))?;
        return SimplicialComplex::from_json(&json);
    }
    let body = strip_ws(s);
    let (written, rest) = split_n_prefix(&body)?;
    let n = merge_n(n, written)?;
    let sets = parse_sets(rest)?;
    let largest = sets.iter().flatten().copied().max().unwrap_or(0);
    let n = resolve_n(n, largest)?;
    if largest > n {
        return Err(Error::AmbientMismatch { expected: n, found: largest });
    }
    SimplicialComplex::from_facets(n, sets.iter().map(|f| bits::from_vertices(f.iter().copied())))
}

/// Parses `V(d=2; a=1,2,1; n=3)` or `{"n":3,"d":2,"a":[1,2,1]}`. `n` may be omitted.
pub fn parse_veronese(s: &str) -> Result<VeroneseSpec> {
    if looks_like_json(s) {
        let json: VeroneseSpec = serde_json::from_str(s).map_err(|e| parse_err(e.to_string()))?;
        if json.n != json.a.len() {
            return Err(Error::AmbientMismatch { expected: json.n, found: json.a.len() });
        }
        return VeroneseSpec::new(json.d, json.a);
    }
    let body = strip_ws(s);
    let inner = body
        .strip_prefix("V(")
        .and_then(|r| r.strip_suffix(')'))
        .ok_or_else(|| parse_err("expected V(d=..; a=..; n=..)"))?;
    let (mut d, mut a, mut n) = (None, None, None);
    for part in inner.split(';') {
        let (key, value) = part.split_once('=').ok_or_else(|| parse_err(format!("expected key=value, got `{part}`")))?;
        match key {
            "d" => d = Some(value.parse::<u32>().map_err(|_| parse_err(format!("bad degree `{value}`")))?),
            "a" => {
                a = Some(
                    value
                        .split(',')
                        .map(|x| x.parse::<u32>().map_err(|_| parse_err(format!("bad bound `{x}`"))))
                        .collect::<Result<Vec<_>>>()?,
                )
            }
            "n" => n = Some(value.parse::<usize>().map_err(|_| parse_err(format!("bad variable count `{value}`")))?),
            other => return Err(parse_err(format!("unknown key `{other}`"))),
        }
    }
    let d = d.ok_or_else(|| parse_err("missing d="))?;
    let a = a.ok_or_else(|| parse_err("missing a="))?;
    if let Some(n) = n.filter(|&n| n != a.len()) {
        return Err(Error::AmbientMismatch { expected: n, found: a.len() });
    }
    VeroneseSpec::new(d, a)
}

/// Parses `T(n=4; {1,2},{3,4})` or `{"n":4,"sets":[[1,2],[3,4]]}`.
pub fn parse_transversal(s: &str) -> Result<TransversalSpec> {
    if looks_like_json(s) {
        let json = serde_json::from_str(s).map_err(|e| parse_err(e.to_string()))?;
        return TransversalSpec::from_json(&json);
    }
    let body = strip_ws(s);
    let inner = body
        .strip_prefix("T(")
        .and_then(|r| r.strip_suffix(')'))
        .ok_or_else(|| parse_err("expected T(n=..; {..},{..})"))?;
    let (written, rest) = split_n_prefix(inner)?;
    let sets = parse_sets(rest)?;
    let largest = sets.iter().flatten().copied().max().unwrap_or(0);
    let n = resolve_n(written, largest)?;
    if largest > n {
        return Err(Error::AmbientMismatch { expected: n, found: largest });
    }
    let masks: Vec<Mask> = sets.iter().map(|f| bits::from_vertices(f.iter().copied())).collect();
    TransversalSpec::new(n, masks)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn ideals() {
        let i = parse_ideal("(x1*x3, x2^2)", None).unwrap();
        assert_eq!(i.n(), 3);
        assert_eq!(i.to_string(), "(x1*x3, x2^2)");
        assert_eq!(parse_ideal(" ( x1 * x2 ,x1*x3 ) ", Some(4)).unwrap().n(), 4);
        assert_eq!(parse_ideal("x1*x1", None).unwrap().to_string(), "(x1^2)");
        assert!(parse_ideal("()", Some(3)).unwrap().is_zero());
        assert!(parse_ideal("()", None).unwrap_err().is_parse());
        assert_eq!(parse_ideal("(1, x2)", Some(2)), Err(Error::UnitIdeal));
        assert!(parse_ideal("(y1)", None).unwrap_err().is_parse());
        assert!(parse_ideal("(x1,", None).unwrap_err().is_parse());
        assert!(parse_ideal("(x0)", None).unwrap_err().is_parse());
        assert_eq!(parse_ideal("(x5)", Some(3)), Err(Error::AmbientMismatch { expected: 3, found: 5 }));
    }

    #[test]
    fn ideal_json_round_trip() {
        let i = parse_ideal("(x1*x2, x1*x3)", None).unwrap();
        let json = serde_json::to_string(&ideal_to_json(&i)).unwrap();
        assert_eq!(json, r#"{"n":3,"generators":[[1,1,0],[1,0,1]]}"#);
        assert_eq!(parse_ideal(&json, None).unwrap(), i);
    }

    #[test]
    fn monomials() {
        assert_eq!(parse_monomial("x1^2*x2", None).unwrap().exponents(), &[2, 1]);
        assert!(parse_monomial("1", Some(3)).unwrap().is_one());
    }

    #[test]
    fn complexes() {
        let d = parse_complex("{1,2},{4,5},{3}", None).unwrap();
        assert_eq!(d.n(), 5);
        assert_eq!(d.to_string(), "n=5; {1,2},{3},{4,5}");
        let d = parse_complex("n=7; {1,2}", None).unwrap();
        assert_eq!(d.n(), 7);
        assert_eq!(parse_complex("n=2; {}", None).unwrap(), SimplicialComplex::irrelevant(2));
        assert!(parse_complex("n=2;", None).unwrap().is_void());
        let json = r#"{"n":5,"facets":[[1,2],[4,5],[3]]}"#;
        assert_eq!(parse_complex(json, None).unwrap(), parse_complex("{1,2},{4,5},{3}", None).unwrap());
        assert!(parse_complex("{1,2", None).unwrap_err().is_parse());
        assert!(parse_complex("{1,2},", None).unwrap_err().is_parse());
        assert!(parse_complex("n=3; {1,4}", None).is_err());
        assert!(parse_complex("n=3; {1}", Some(4)).is_err());
    }

    #[test]
    fn specs() {
        let v = parse_veronese("V(d=2; a=1,2,1; n=3)").unwrap();
        assert_eq!((v.d, v.a.clone(), v.n), (2, vec![1, 2, 1], 3));
        assert_eq!(v.to_string(), "V(d=2; a=1,2,1; n=3)");
        assert_eq!(parse_veronese(r#"{"n":3,"d":2,"a":[1,2,1]}"#).unwrap(), v);
        assert!(parse_veronese("V(d=2; a=1,2; n=3)").is_err());
        assert!(parse_veronese("V(a=1)").unwrap_err().is_parse());

        let t = parse_transversal("T(n=4; {1,2},{3,4})").unwrap();
        assert_eq!(t.to_string(), "T(n=4; {1,2},{3,4})");
        assert_eq!(parse_transversal(r#"{"n":4,"sets":[[1,2],[3,4]]}"#).unwrap(), t);
        assert_eq!(parse_transversal("T({1},{2,3})").unwrap().n(), 3);
        assert!(parse_transversal("T(n=2; {})").is_err());
    }

    proptest! {
        #[test]
        fn ideal_display_round_trips(rows in proptest::collection::vec(proptest::collection::vec(0u32..3, 4), 1..5)) {
            if let Ok(i) = MonomialIdeal::new(4, rows.into_iter().map(Monomial::new)) {
                prop_assert_eq!(parse_ideal(&i.to_string(), Some(4)).unwrap(), i);
            }
        }

        #[test]
        fn complex_display_round_trips(fs in proptest::collection::vec(0u64..64, 1..5)) {
            let d = SimplicialComplex::from_facets(6, fs).unwrap();
            prop_assert_eq!(parse_complex(&d.to_string(), None).unwrap(), d);
        }
    }
}
