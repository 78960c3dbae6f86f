use std::collections::BTreeSet;

use affine_schubert::coxeter::AffinePermutation;
use affine_schubert::series::{in_domain, series_a_closed};
use affine_schubert::smoothness::{enumerate_smooth, EnumerationOptions};
use affine_schubert::staircase::{enumerate_diagrams, to_element, CoxGraph};
use clap::{Args, ValueEnum};
use num_traits::ToPrimitive;
use serde::Serialize;

use crate::output::{join, json, lines, Format, Output};
use crate::{CliError, Context};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Method {
    /// Breadth-first search for 3412- and 4231-avoiding elements.
    Patterns,
    /// Images of the spherical staircase diagrams on the cycle.
    Staircase,
}

#[derive(Args, Debug)]
pub struct EnumerateArgs {
    /// Period.
    #[arg(long)]
    pub n: usize,
    /// Print only the number of elements.
    #[arg(long)]
    pub count_only: bool,
    #[arg(long, value_enum, default_value = "patterns")]
    pub method: Method,
}

#[derive(Serialize)]
struct Entry {
    length: usize,
    window: Vec<i64>,
}

fn smooth_elements(ctx: &Context, args: &EnumerateArgs) -> Result<Vec<AffinePermutation>, CliError> {
    let expected = series_a_closed(args.n).coeff(args.n).to_u64();
    match args.method {
        Method::Patterns => {
            let mut options = EnumerationOptions::new(expected);
            options.workers = ctx.workers;
            options.deadline = ctx.deadline;
            Ok(enumerate_smooth(args.n, &options)?)
        }
        Method::Staircase => {
            let diagrams = enumerate_diagrams(CoxGraph::cycle(args.n)?, true, false)?;
            let images: BTreeSet<AffinePermutation> = diagrams.iter().map(to_element).collect::<Result<_, _>>()?;
            if images.len() != diagrams.len() {
                return Err(CliError::CrossCheck(format!(
                    "{} diagrams map to {} elements",
                    diagrams.len(),
                    images.len()
                )));
            }
            let mut out: Vec<_> = images.into_iter().collect();
            out.sort_by(|a, b| (a.length(), a.window()).cmp(&(b.length(), b.window())));
            Ok(out)
        }
    }
}

pub fn run(ctx: &Context, args: &EnumerateArgs) -> Result<Output, CliError> {
    if !in_domain(args.n) {
        return Err(CliError::invalid("--n must be at least 2"));
    }
    let elements = smooth_elements(ctx, args)?;
    if let Some(deadline) = ctx.deadline {
        if std::time::Instant::now() > deadline {
            return Err(CliError::invalid("budget exceeded"));
        }
    }
    let expected = series_a_closed(args.n).coeff(args.n).to_u64();
    let count = elements.len();
    let body = if args.count_only {
        match ctx.format.unwrap_or(Format::Text) {
            Format::Json => json(&serde_json::json!({ "n": args.n, "count": count })),
            Format::Tsv => lines([format!("{}\t{count}", args.n)]),
            Format::Text => lines([count.to_string()]),
        }
    } else {
        let entries: Vec<Entry> =
            elements.iter().map(|w| Entry { length: w.length(), window: w.window().to_vec() }).collect();
        match ctx.format.unwrap_or(Format::Text) {
            Format::Json => json(&serde_json::json!({ "n": args.n, "count": count, "elements": entries })),
            Format::Tsv => lines(entries.iter().map(|e| format!("{}\t{}", e.length, join(&e.window, ",")))),
            Format::Text => lines(elements.iter().map(|w| w.to_string())),
        }
    };
    let out = Output::ok(body);
    if expected != Some(count as u64) {
        return Ok(out.with_code(2, format!("found {count} elements, the series predicts {expected:?}")));
    }
    Ok(out)
}
