//! Document formats: instances, targets, and bid profiles as JSON, plus the
//! audit table as CSV.
//!
//! Rationals travel as strings — `"p"` or `"p/q"` — so no precision is lost;
//! bids additionally allow `"+inf"`. Instances are query-major on disk
//! (`{"bidders": 2, "queries": [{"values": ["4", "1"]}, ...]}`) while bid
//! profiles are bidder-major (`{"bids": [["12", "3"], ["1", "2"]]}`), matching
//! how each is naturally read.

use serde::{Deserialize, Serialize};

use crate::audit::AuditReport;
use crate::error::{Error, Result};
use crate::model::{Instance, Targets};
use crate::nonuniform::BidProfile;
use crate::rational::{format_rat, parse_ext, parse_rat, ExtRat};

#[derive(Serialize, Deserialize)]
struct InstanceDoc {
    bidders: usize,
    queries: Vec<QueryDoc>,
}

#[derive(Serialize, Deserialize)]
struct QueryDoc {
    values: Vec<String>,
}

#[derive(Serialize, Deserialize)]
struct TargetsDoc {
    targets: Vec<String>,
}

#[derive(Serialize, Deserialize)]
struct BidsDoc {
    bids: Vec<Vec<String>>,
}

fn bad_json(err: serde_json::Error) -> Error {
    Error::Parse(format!("malformed document: {err}"))
}

pub fn instance_to_json(instance: &Instance) -> String {
    let doc = InstanceDoc {
        bidders: instance.bidders(),
        queries: (0..instance.queries())
            .map(|j| QueryDoc {
                values: (0..instance.bidders())
                    .map(|i| format_rat(instance.value(i, j)))
                    .collect(),
            })
            .collect(),
    };
    let mut text = serde_json::to_string_pretty(&doc).expect("document serializes");
    text.push('\n');
    text
}

pub fn instance_from_json(text: &str) -> Result<Instance> {
    let doc: InstanceDoc = serde_json::from_str(text).map_err(bad_json)?;
    let mut rows = vec![Vec::with_capacity(doc.queries.len()); doc.bidders];
    for (j, query) in doc.queries.iter().enumerate() {
        if query.values.len() != doc.bidders {
            return Err(Error::InvalidInput(format!(
                "query {j} has {} values for {} bidders",
                query.values.len(),
                doc.bidders
            )));
        }
        for (i, value) in query.values.iter().enumerate() {
            rows[i].push(parse_rat(value)?);
        }
    }
    Instance::new(rows)
}

pub fn targets_to_json(targets: &Targets) -> String {
    let doc = TargetsDoc {
        targets: targets.as_slice().iter().map(format_rat).collect(),
    };
    let mut text = serde_json::to_string_pretty(&doc).expect("document serializes");
    text.push('\n');
    text
}

pub fn targets_from_json(text: &str) -> Result<Targets> {
    let doc: TargetsDoc = serde_json::from_str(text).map_err(bad_json)?;
    Targets::new(doc.targets.iter().map(|t| parse_rat(t)).collect::<Result<_>>()?)
}

pub fn bids_to_json(profile: &BidProfile) -> String {
    let doc = BidsDoc {
        bids: profile
            .rows()
            .iter()
            .map(|row| row.iter().map(ExtRat::to_string).collect())
            .collect(),
    };
    let mut text = serde_json::to_string_pretty(&doc).expect("document serializes");
    text.push('\n');
    text
}

pub fn bids_from_json(text: &str) -> Result<BidProfile> {
    let doc: BidsDoc = serde_json::from_str(text).map_err(bad_json)?;
    BidProfile::new(
        doc.bids
            .iter()
            .map(|row| row.iter().map(|b| parse_ext(b)).collect::<Result<_>>())
            .collect::<Result<_>>()?,
    )
}

/// The audit table as CSV: one row per report, equilibrium indices joined by
/// `;`, empty cells where no equilibrium exists.
pub fn audit_csv(report: &AuditReport) -> String {
    let mut out = String::from("report,ks,min_lw,max_lw\n");
    for row in &report.rows {
        let ks = row
            .equilibrium_set
            .iter()
            .map(usize::to_string)
            .collect::<Vec<_>>()
            .join(";");
        let min = row.min_lw.as_ref().map(format_rat).unwrap_or_default();
        let max = row.max_lw.as_ref().map(format_rat).unwrap_or_default();
        out.push_str(&format!("{},{ks},{min},{max}\n", format_rat(&row.report)));
    }
    out
}
