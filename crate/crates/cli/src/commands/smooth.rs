use affine_schubert::bp::{complete_bp_decomposition, is_smooth_partial};
use affine_schubert::coxeter::AffinePermutation;
use affine_schubert::smoothness::{is_rationally_smooth, is_smooth, is_twisted_spiral};
use clap::Args;
use serde::Serialize;

use crate::input::{parse_subset, ElementArgs};
use crate::output::{join, json, lines, Format, Output};
use crate::{CliError, Context};

#[derive(Args, Debug)]
pub struct SmoothArgs {
    #[command(flatten)]
    pub element: ElementArgs,
}

#[derive(Args, Debug)]
pub struct DecomposeArgs {
    #[command(flatten)]
    pub element: ElementArgs,
    /// Parabolic subset `J`, comma separated; the element must be minimal in `wW_J`.
    #[arg(long = "J", value_name = "J")]
    pub j: Option<String>,
}

#[derive(Serialize)]
struct SmoothReport {
    n: usize,
    window: Vec<i64>,
    smooth: bool,
    rationally_smooth: bool,
    twisted_spiral: bool,
    length: usize,
}

pub fn smooth(ctx: &Context, args: &SmoothArgs) -> Result<Output, CliError> {
    let w = args.element.parse()?;
    let r = SmoothReport {
        n: w.period(),
        window: w.window().to_vec(),
        smooth: is_smooth(&w),
        rationally_smooth: is_rationally_smooth(&w),
        twisted_spiral: is_twisted_spiral(&w),
        length: w.length(),
    };
    let fields = [
        ("n", r.n.to_string()),
        ("window", join(&r.window, ",")),
        ("smooth", r.smooth.to_string()),
        ("rationally_smooth", r.rationally_smooth.to_string()),
        ("twisted_spiral", r.twisted_spiral.to_string()),
        ("length", r.length.to_string()),
    ];
    Ok(Output::ok(match ctx.format.unwrap_or(Format::Json) {
        Format::Json => json(&r),
        Format::Tsv => lines(fields.iter().map(|(k, v)| format!("{k}\t{v}"))),
        Format::Text => lines(fields.iter().map(|(k, v)| format!("{k}: {v}"))),
    }))
}

#[derive(Serialize)]
struct Grassmannian {
    nodes: Vec<usize>,
    missing: usize,
}

#[derive(Serialize)]
struct Factor {
    word: Vec<usize>,
    #[serde(rename = "K")]
    k: Vec<usize>,
    maximal: bool,
    grassmannian: Option<Grassmannian>,
}

#[derive(Serialize)]
struct DecomposeReport {
    n: usize,
    window: Vec<i64>,
    #[serde(rename = "J")]
    j: Vec<usize>,
    complete: bool,
    factors: Vec<Factor>,
    smooth: bool,
}

pub fn decompose(ctx: &Context, args: &DecomposeArgs) -> Result<Output, CliError> {
    let w: AffinePermutation = args.element.parse()?;
    let j = parse_subset(w.period(), args.j.as_deref())?;
    let smooth = is_smooth_partial(&w, &j)?;
    let decomposition = complete_bp_decomposition(&w, &j)?;
    let factors: Vec<Factor> = decomposition
        .iter()
        .flat_map(|d| d.factors.iter())
        .map(|f| Factor {
            word: f.v.reduced_word(),
            k: f.k.to_vec(),
            maximal: f.maximal,
            grassmannian: f.label.as_ref().map(|l| Grassmannian { nodes: l.nodes.clone(), missing: l.missing }),
        })
        .collect();
    let r = DecomposeReport {
        n: w.period(),
        window: w.window().to_vec(),
        j: j.to_vec(),
        complete: decomposition.is_some(),
        factors,
        smooth,
    };
    Ok(Output::ok(match ctx.format.unwrap_or(Format::Json) {
        Format::Json => json(&r),
        Format::Tsv | Format::Text => {
            let mut rows = vec![format!("complete\t{}", r.complete), format!("smooth\t{}", r.smooth)];
            for f in &r.factors {
                let gr = match &f.grassmannian {
                    Some(g) => format!("{}\t{}", join(&g.nodes, ","), g.missing),
                    None => "-\t-".into(),
                };
                rows.push(format!("factor\t{}\t{}\t{}\t{gr}", join(&f.word, ","), join(&f.k, ","), f.maximal));
            }
            if ctx.format == Some(Format::Text) {
                rows = rows.into_iter().map(|r| r.replace('\t', " ")).collect();
            }
            lines(rows)
        }
    }))
}
