use std::fmt::Write as _;

use serde::Serialize;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PointRecord {
    pub c: u64,
    pub b: u64,
    /// 0-based element ids (edge or item order in the instance file).
    pub basis: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SwapRecord {
    pub out: usize,
    #[serde(rename = "in")]
    pub inc: usize,
    /// `c(in) - c(out)` in the costs of the instance file.
    pub cost: i64,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Counts {
    pub elements: usize,
    pub rank: usize,
    /// |Y_N|
    pub nondominated: usize,
    /// |X_E|, only when every efficient basis is known.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub efficient: Option<usize>,
    /// |X|, only after complete enumeration.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bases: Option<u64>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Report {
    pub algorithm: &'static str,
    pub sense: String,
    /// One basis per non-dominated point, outcomes in the instance's sense.
    pub front: Vec<PointRecord>,
    pub swaps: Vec<SwapRecord>,
    /// All efficient bases, for the exact oracles.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub efficient: Option<Vec<PointRecord>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<f64>,
    pub counts: Counts,
}

fn ids(basis: &[usize]) -> String {
    basis.iter().map(|e| e.to_string()).collect::<Vec<_>>().join(" ")
}

impl Report {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes") + "\n"
    }

    /// One row per front point; the swap columns name the swap that led to
    /// the point. Efficient bases follow as `efficient` rows.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("kind,c,b,basis,swap_out,swap_in,swap_cost\n");
        let offset = self.front.len() as isize - self.swaps.len() as isize;
        for (i, p) in self.front.iter().enumerate() {
            // the swap that led to this point, if any
            let j = i as isize - offset;
            let swap = (j >= 0).then(|| &self.swaps[j as usize]);
            match swap {
                Some(s) => {
                    let _ = writeln!(out, "front,{},{},{},{},{},{}", p.c, p.b, ids(&p.basis), s.out, s.inc, s.cost);
                }
                None => {
                    let _ = writeln!(out, "front,{},{},{},,,", p.c, p.b, ids(&p.basis));
                }
            }
        }
        for p in self.efficient.iter().flatten() {
            let _ = writeln!(out, "efficient,{},{},{},,,", p.c, p.b, ids(&p.basis));
        }
        out
    }
}
