//! Plain-text instance files.
//!
//! ```text
//! # comment
//! graphic <n> <m> <min|max>
//! <u> <v> <c> <b>        (m lines, vertices 1-based)
//!
//! uniform <n> <k> <beta> <min|max>
//! <c> <b>                (n lines)
//! ```

use std::fmt::Write as _;
use std::str::FromStr;

use matroid_biopt::{
    BicriteriaInstance, CostPair, Error, GraphicMatroid, Sense, UniformMatroid,
};

use crate::error::{CliError, CliResult};

#[derive(Clone, Debug)]
pub enum InstanceFile {
    Graphic(BicriteriaInstance<GraphicMatroid>),
    Uniform(BicriteriaInstance<UniformMatroid>),
}

impl InstanceFile {
    pub fn kind(&self) -> &'static str {
        match self {
            InstanceFile::Graphic(_) => "graphic",
            InstanceFile::Uniform(_) => "uniform",
        }
    }
}

struct Lines<'a> {
    inner: std::iter::Enumerate<std::str::Lines<'a>>,
}

impl<'a> Lines<'a> {
    /// Next non-empty line with comments stripped, split into fields.
    fn next_record(&mut self) -> Option<(usize, Vec<&'a str>)> {
        for (i, raw) in self.inner.by_ref() {
            let text = raw.split('#').next().unwrap_or("");
            let fields: Vec<&str> = text.split_whitespace().collect();
            if !fields.is_empty() {
                return Some((i + 1, fields));
            }
        }
        None
    }
}

fn field<T: FromStr>(line: usize, fields: &[&str], idx: usize, name: &str) -> CliResult<T> {
    let raw = fields
        .get(idx)
        .ok_or_else(|| CliError::parse(line, format!("missing field `{name}`")))?;
    raw.parse()
        .map_err(|_| CliError::parse(line, format!("invalid {name} `{raw}`")))
}

fn sense(line: usize, raw: &str) -> CliResult<Sense> {
    match raw {
        "min" => Ok(Sense::Minimize),
        "max" => Ok(Sense::Maximize),
        _ => Err(CliError::parse(line, format!("sense must be `min` or `max`, got `{raw}`"))),
    }
}

fn arity(line: usize, fields: &[&str], n: usize) -> CliResult<()> {
    if fields.len() != n {
        return Err(CliError::parse(
            line,
            format!("expected {n} fields, found {}", fields.len()),
        ));
    }
    Ok(())
}

/// Errors from instance construction: no feasible basis is exit code 3,
/// anything else is a malformed file.
fn classify(line: usize, err: Error) -> CliError {
    match err {
        Error::Disconnected | Error::ZeroRank => CliError::Infeasible(err),
        other => CliError::parse(line, other.to_string()),
    }
}

pub fn parse(text: &str) -> CliResult<InstanceFile> {
    let mut lines = Lines {
        inner: text.lines().enumerate(),
    };
    let (hline, header) = lines
        .next_record()
        .ok_or_else(|| CliError::parse(1, "empty instance file"))?;
    match header[0] {
        "graphic" => {
            arity(hline, &header, 4)?;
            let n: usize = field(hline, &header, 1, "n")?;
            let m: usize = field(hline, &header, 2, "m")?;
            let sense = sense(hline, header[3])?;
            let mut edges = Vec::with_capacity(m);
            let mut costs = Vec::with_capacity(m);
            for _ in 0..m {
                let (line, f) = lines
                    .next_record()
                    .ok_or_else(|| CliError::parse(hline, format!("expected {m} edge lines")))?;
                arity(line, &f, 4)?;
                let u: usize = field(line, &f, 0, "u")?;
                let v: usize = field(line, &f, 1, "v")?;
                let c: u64 = field(line, &f, 2, "c")?;
                let b: u32 = field(line, &f, 3, "b")?;
                if u == 0 || v == 0 || u > n || v > n {
                    return Err(CliError::parse(line, format!("vertex out of range 1..={n}")));
                }
                if b > 1 {
                    return Err(CliError::parse(line, format!("b must be 0 or 1, got {b}")));
                }
                edges.push((u - 1, v - 1));
                costs.push(CostPair::new(c, b));
            }
            trailing(&mut lines)?;
            let g = GraphicMatroid::new(n, edges).map_err(|e| classify(hline, e))?;
            BicriteriaInstance::new(g, costs, sense)
                .map(InstanceFile::Graphic)
                .map_err(|e| classify(hline, e))
        }
        "uniform" => {
            arity(hline, &header, 5)?;
            let n: usize = field(hline, &header, 1, "n")?;
            let k: usize = field(hline, &header, 2, "k")?;
            let beta: u32 = field(hline, &header, 3, "beta")?;
            let sense = sense(hline, header[4])?;
            if k == 0 || k > n {
                return Err(CliError::parse(hline, format!("need 1 <= k <= n, got k = {k}, n = {n}")));
            }
            let mut costs = Vec::with_capacity(n);
            for _ in 0..n {
                let (line, f) = lines
                    .next_record()
                    .ok_or_else(|| CliError::parse(hline, format!("expected {n} element lines")))?;
                arity(line, &f, 2)?;
                let c: u64 = field(line, &f, 0, "c")?;
                let b: u32 = field(line, &f, 1, "b")?;
                if b > beta {
                    return Err(CliError::parse(line, format!("b = {b} exceeds beta = {beta}")));
                }
                costs.push(CostPair::new(c, b));
            }
            trailing(&mut lines)?;
            let u = UniformMatroid::new(n, k).map_err(|e| classify(hline, e))?;
            BicriteriaInstance::with_beta(u, costs, sense, beta)
                .map(InstanceFile::Uniform)
                .map_err(|e| classify(hline, e))
        }
        other => Err(CliError::parse(
            hline,
            format!("unknown instance kind `{other}`, expected `graphic` or `uniform`"),
        )),
    }
}

fn trailing(lines: &mut Lines<'_>) -> CliResult<()> {
    match lines.next_record() {
        Some((line, _)) => Err(CliError::parse(line, "unexpected trailing data")),
        None => Ok(()),
    }
}

pub fn write(file: &InstanceFile) -> String {
    let mut out = String::new();
    match file {
        InstanceFile::Graphic(inst) => {
            let g = inst.matroid();
            let _ = writeln!(out, "graphic {} {} {}", g.n_vertices(), g.n_edges(), inst.sense());
            for (&(u, v), cp) in g.edges().iter().zip(inst.original_costs()) {
                let _ = writeln!(out, "{} {} {} {}", u + 1, v + 1, cp.c, cp.b);
            }
        }
        InstanceFile::Uniform(inst) => {
            let u = inst.matroid();
            let _ = writeln!(out, "uniform {} {} {} {}", u.n(), u.k(), inst.beta(), inst.sense());
            for cp in inst.original_costs() {
                let _ = writeln!(out, "{} {}", cp.c, cp.b);
            }
        }
    }
    out
}
