use affine_schubert::series::{assembled_series, closed_series, SeriesKind};
use affine_schubert::staircase::DiagramCounter;
use affine_schubert::Error;
use clap::{Args, ValueEnum};
use serde::Serialize;

use crate::output::{json, lines, Format, Output};
use crate::{CliError, Context};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Closed,
    Assembled,
    Enumerate,
    All,
}

#[derive(Args, Debug)]
pub struct SeriesArgs {
    /// A, AM, AB, AF, ABAR or ASTAR.
    #[arg(long)]
    pub which: String,
    /// Highest power of `t` reported.
    #[arg(long)]
    pub order: usize,
    #[arg(long, value_enum, default_value = "closed")]
    pub method: Method,
    /// Exit with status 2 when the methods disagree.
    #[arg(long)]
    pub diff: bool,
}

#[derive(Serialize)]
struct Row {
    n: usize,
    in_domain: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    closed: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    assembled: Option<String>,
    /// `None` inside the row when enumeration is out of reach.
    #[serde(skip_serializing_if = "Option::is_none")]
    enumerate: Option<Option<String>>,
}

impl Row {
    fn values(&self) -> Vec<&str> {
        let mut out = Vec::new();
        out.extend(self.closed.as_deref());
        out.extend(self.assembled.as_deref());
        out.extend(self.enumerate.as_ref().and_then(|e| e.as_deref()));
        out
    }

    fn cells(&self) -> Vec<String> {
        let mut out = vec![self.n.to_string()];
        out.extend(self.closed.clone());
        out.extend(self.assembled.clone());
        if let Some(e) = &self.enumerate {
            out.push(e.clone().unwrap_or_else(|| "-".into()));
        }
        if !self.in_domain {
            out.push("outside_domain".into());
        }
        out
    }
}

pub fn run(ctx: &Context, args: &SeriesArgs) -> Result<Output, CliError> {
    let kind = SeriesKind::parse(&args.which)?;
    let (closed, assembled, enumerate) = match args.method {
        Method::Closed => (true, false, false),
        Method::Assembled => (false, true, false),
        Method::Enumerate => (false, false, true),
        Method::All => (true, true, true),
    };
    let closed_coeffs = closed.then(|| closed_series(kind, args.order));
    let assembled_coeffs = assembled.then(|| assembled_series(kind, args.order));
    let mut counter = DiagramCounter::new();
    let mut rows = Vec::with_capacity(args.order);
    let mut skipped = Vec::new();
    for n in 1..=args.order {
        let enumerated = if enumerate && kind.in_domain(n) {
            match counter.count(kind, n) {
                Ok(c) => Some(Some(c.to_string())),
                Err(Error::BudgetExceeded(_)) => {
                    skipped.push(n);
                    Some(None)
                }
                Err(e) => return Err(e.into()),
            }
        } else {
            enumerate.then_some(None)
        };
        rows.push(Row {
            n,
            in_domain: kind.in_domain(n),
            closed: closed_coeffs.as_ref().map(|s| s.coeff(n).to_string()),
            assembled: assembled_coeffs.as_ref().map(|s| s.coeff(n).to_string()),
            enumerate: enumerated,
        });
    }
    let mismatches: Vec<usize> =
        rows.iter().filter(|r| r.values().windows(2).any(|w| w[0] != w[1])).map(|r| r.n).collect();
    let body = match ctx.format.unwrap_or(Format::Tsv) {
        Format::Json => json(&serde_json::json!({ "which": kind.name(), "order": args.order, "rows": rows })),
        Format::Tsv => lines(rows.iter().map(|r| r.cells().join("\t"))),
        Format::Text => lines(rows.iter().map(|r| r.cells().join(" "))),
    };
    let mut out = Output::ok(body);
    if !skipped.is_empty() {
        out.diagnostic = Some(format!("enumeration skipped for n = {skipped:?}"));
    }
    if args.diff && !mismatches.is_empty() {
        out = out.with_code(2, format!("methods disagree at n = {mismatches:?}"));
    }
    Ok(out)
}
