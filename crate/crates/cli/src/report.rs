use std::fmt::Write;

use serde::Serialize;
use shadowbracket::exactq::{HalfInt, Order};
use shadowbracket::shadowcore::{Coloring, RibbonBoundReport};

#[derive(Debug, Serialize)]
pub struct StateLine {
    pub coloring: Coloring,
    pub value: String,
    pub ord_i: Order,
    /// Present with `--verify`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub odd_chi: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub red_boundary: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bound: Option<HalfInt>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub holds: Option<bool>,
}

#[derive(Debug, Serialize)]
pub struct Verification {
    pub states: usize,
    pub failures: usize,
    pub min_slack: Option<HalfInt>,
}

#[derive(Debug, Serialize)]
pub struct RunReport {
    pub input_sha256: String,
    pub regions: Vec<String>,
    pub cap: u32,
    pub states: usize,
    pub complete: bool,
    pub unanchored: Vec<String>,
    pub bracket: String,
    pub ord_i: Order,
    /// Absent for graphs, and when the enumeration is incomplete.
    pub ribbon: Option<RibbonBoundReport>,
    pub verification: Option<Verification>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub state_list: Option<Vec<StateLine>>,
}

impl RunReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes") + "\n"
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "input sha256: {}", self.input_sha256);
        let _ = writeln!(s, "bracket: {}", self.bracket);
        let _ = writeln!(s, "ord_i: {}", self.ord_i);
        let _ = writeln!(s, "states: {}", self.states);
        let _ = writeln!(s, "cap: {}", self.cap);
        let cert = if self.complete {
            "complete (heuristic: every free region is tied to the boundary and stayed below the cap)".to_string()
        } else if !self.unanchored.is_empty() {
            format!("incomplete (regions not tied to the boundary: {})", self.unanchored.join(", "))
        } else {
            "incomplete (a free region reached the cap; raise --cap)".to_string()
        };
        let _ = writeln!(s, "certificate: {cert}");
        match &self.ribbon {
            Some(r) => {
                let _ = writeln!(s, "ribbon: {}", r.summary);
            }
            None if !self.complete => {
                let _ = writeln!(s, "ribbon: withheld (enumeration incomplete)");
            }
            None => {}
        }
        if let Some(v) = &self.verification {
            let slack = v.min_slack.map_or("none".to_string(), |h| h.to_string());
            let _ = writeln!(
                s,
                "verification: {} states, {} failures, min slack {}",
                v.states, v.failures, slack
            );
        }
        if let Some(list) = &self.state_list {
            let _ = writeln!(s, "regions: {}", self.regions.join(" "));
            for st in list {
                let cols: Vec<String> = st.coloring.colors.iter().map(|c| c.to_string()).collect();
                let _ = write!(s, "state [{}]: ord {}", cols.join(" "), st.ord_i);
                if let (Some(chi), Some(r), Some(b), Some(h)) = (st.odd_chi, st.red_boundary, st.bound, st.holds) {
                    let _ = write!(s, ", χ(S) {chi}, r {r}, bound {b}, {}", if h { "ok" } else { "FAIL" });
                }
                let _ = writeln!(s, ", value {}", st.value);
            }
        }
        s
    }
}
