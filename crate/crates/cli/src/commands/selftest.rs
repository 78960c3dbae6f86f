use affine_schubert::selftest::{run_all, Scale};
use clap::{Args, ValueEnum};

use crate::output::{json, lines, Format, Output};
use crate::{CliError, Context};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ScaleArg {
    Small,
    Full,
}

#[derive(Args, Debug)]
pub struct SelftestArgs {
    /// `small` lowers every size cap by one.
    #[arg(long, value_enum, default_value = "small")]
    pub scale: ScaleArg,
}

pub fn run(ctx: &Context, args: &SelftestArgs) -> Result<Output, CliError> {
    let scale = match args.scale {
        ScaleArg::Small => Scale::Small,
        ScaleArg::Full => Scale::Full,
    };
    let report = run_all(scale, ctx.workers);
    let verdict = |passed: bool| if passed { "PASS" } else { "FAIL" };
    let body = match ctx.format.unwrap_or(Format::Text) {
        Format::Json => json(&report),
        Format::Tsv => lines(report.criteria.iter().map(|c| {
            format!("{}\t{}\t{:.3}\t{}\t{}", c.id, verdict(c.passed), c.seconds, c.name, c.detail)
        })),
        Format::Text => {
            let mut rows: Vec<String> = report
                .criteria
                .iter()
                .map(|c| format!("criterion {:>2} {} [{:.2}s] {}: {}", c.id, verdict(c.passed), c.seconds, c.name, c.detail))
                .collect();
            let failed = report.criteria.iter().filter(|c| !c.passed).count();
            rows.push(format!("selftest: {} passed, {failed} failed", report.criteria.len() - failed));
            lines(rows)
        }
    };
    let out = Output::ok(body);
    if let Some(deadline) = ctx.deadline {
        if std::time::Instant::now() > deadline {
            return Ok(out.with_code(2, "budget exceeded"));
        }
    }
    Ok(if report.passed() { out } else { out.with_code(2, "some criteria failed") })
}
