//! Link-homology tests for Cohen-Macaulay and almost Cohen-Macaulay
//! complexes, independent of Betti numbers.

use rayon::prelude::*;
use serde::Serialize;

use crate::bits::{self, Mask};
use crate::error::{Error, Result};
use crate::homology::reduced_homology;
use crate::linalg::Field;
use crate::simplicial::SimplicialComplex;

/// Outcome of the link test for one face.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FaceRecord {
    #[serde(serialize_with = "as_vertex_list")]
    pub face: Mask,
    /// The face lies in a facet of maximal dimension.
    pub in_pure_top: bool,
    pub link_dim: i32,
    /// Degrees `i` below the bound with `H̃_i(lk F) ≠ 0`.
    pub offending: Vec<i32>,
}

fn as_vertex_list<S: serde::Serializer>(mask: &Mask, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(bits::vertices(*mask))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LinkConditionReport {
    pub dim: i32,
    pub records: Vec<FaceRecord>,
}

impl LinkConditionReport {
    pub fn holds(&self) -> bool {
        self.records.iter().all(|r| r.offending.is_empty())
    }

    pub fn failures(&self) -> impl Iterator<Item = &FaceRecord> {
        self.records.iter().filter(|r| !r.offending.is_empty())
    }

    /// `{"dim":d,"acm":bool,"failures":[{"face":[..],"in_pure_top":..,"link_dim":..,"offending":[..]}]}`.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "dim": self.dim,
            "acm": self.holds(),
            "failures": self.failures().collect::<Vec<_>>(),
        })
    }
}

/// Checks `H̃_i(lk F) = 0` for `i < dim lk F - slack(F)` on every face.
fn link_report(delta: &SimplicialComplex, field: Field, slack: impl Fn(bool) -> i32 + Sync) -> Result<LinkConditionReport> {
    if delta.is_void() {
        return Err(Error::VoidComplex);
    }
    let records = delta
        .faces()
        .into_par_iter()
        .map(|face| {
            let link = delta.link(face).expect("face of the complex");
            let in_pure_top = delta.in_pure_top(face);
            let link_dim = link.dim();
            let bound = link_dim - slack(in_pure_top);
            let offending = reduced_homology(&link, field).iter().filter(|&(i, r)| i < bound && r > 0).map(|(i, _)| i).collect();
            FaceRecord { face, in_pure_top, link_dim, offending }
        })
        .collect();
    Ok(LinkConditionReport { dim: delta.dim(), records })
}

/// aCM test: faces outside the pure top skeleton need `H̃_i(lk F) = 0` for
/// `i < dim lk F`; faces inside it only for `i < dim lk F - 1`.
pub fn is_acm_via_links(delta: &SimplicialComplex, field: Field) -> Result<(bool, LinkConditionReport)> {
    let report = link_report(delta, field, |top| i32::from(top))?;
    Ok((report.holds(), report))
}

/// Reisner: CM iff `H̃_i(lk F) = 0` for all faces and `i < dim lk F`.
pub fn is_cm_via_reisner(delta: &SimplicialComplex, field: Field) -> Result<bool> {
    Ok(link_report(delta, field, |_| 0)?.holds())
}

/// An aCM complex is almost pure. Returns whether the implication holds.
pub fn acm_implies_almost_pure(delta: &SimplicialComplex, field: Field) -> Result<bool> {
    Ok(!is_acm_via_links(delta, field)?.0 || delta.is_almost_pure())
}

/// For 2-dimensional complexes, connected iff aCM. Returns whether the
/// equivalence holds.
pub fn connected_iff_acm_in_dim_two(delta: &SimplicialComplex, field: Field) -> Result<bool> {
    if delta.dim() != 2 {
        return Err(Error::WrongDimension { expected: 2, found: delta.dim() });
    }
    Ok(delta.is_connected() == is_acm_via_links(delta, field)?.0)
}

/// Links of an aCM complex are aCM, and links of faces outside the pure
/// top skeleton are CM. Returns whether this holds for every non-empty face.
pub fn links_of_acm_are_acm(delta: &SimplicialComplex, field: Field) -> Result<bool> {
    if !is_acm_via_links(delta, field)?.0 {
        return Err(Error::PreconditionNotACM);
    }
    for face in delta.faces().into_iter().filter(|&f| f != 0) {
        let link = delta.link(face)?;
        if !is_acm_via_links(&link, field)?.0 {
            return Ok(false);
        }
        if !delta.in_pure_top(face) && !is_cm_via_reisner(&link, field)? {
            return Ok(false);
        }
    }
    Ok(true)
}
