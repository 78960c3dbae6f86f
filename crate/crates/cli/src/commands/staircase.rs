use affine_schubert::smoothness::is_smooth;
use affine_schubert::staircase::{
    cycle_decompose, line_decompose, render, to_dyck, to_element, BrokenStaircase, CoxGraph, Direction, GraphKind,
    StaircaseDiagram,
};
use clap::{Args, Subcommand};
use serde::Serialize;

use crate::input::read_diagram;
use crate::output::{join, json, lines, Format, Output};
use crate::{CliError, Context};

#[derive(Args, Debug)]
pub struct FileArgs {
    /// Diagram JSON file, or `-` for standard input.
    #[arg(long)]
    pub file: String,
}

#[derive(Subcommand, Debug)]
pub enum StaircaseCommand {
    /// Check the staircase axioms; exits 1 when one fails.
    Validate(FileArgs),
    /// Draw the blocks as an ASCII picture.
    Render(FileArgs),
    /// Dyck path of a fully supported increasing diagram on a path.
    Dyck(FileArgs),
    /// Split into broken staircases.
    Decompose(FileArgs),
    /// The element of a spherical diagram.
    Element(FileArgs),
}

pub fn run(ctx: &Context, cmd: &StaircaseCommand) -> Result<Output, CliError> {
    match cmd {
        StaircaseCommand::Validate(f) => validate(ctx, &read_diagram(&f.file)?),
        StaircaseCommand::Render(f) => {
            let d = read_diagram(&f.file)?;
            Ok(Output::ok(match ctx.format.unwrap_or(Format::Text) {
                Format::Json => json(&serde_json::json!({ "render": render(&d) })),
                Format::Tsv | Format::Text => render(&d),
            }))
        }
        StaircaseCommand::Dyck(f) => dyck(ctx, &read_diagram(&f.file)?),
        StaircaseCommand::Decompose(f) => decompose(ctx, &read_diagram(&f.file)?),
        StaircaseCommand::Element(f) => element(ctx, &read_diagram(&f.file)?),
    }
}

fn valid(d: &StaircaseDiagram) -> Result<(), CliError> {
    d.validate().map_err(|v| CliError::invalid(format!("not a staircase diagram: {v}")))
}

#[derive(Serialize)]
struct Validation {
    valid: bool,
    axiom: Option<u8>,
    violation: Option<String>,
    spherical: bool,
    fully_supported: bool,
}

fn validate(ctx: &Context, d: &StaircaseDiagram) -> Result<Output, CliError> {
    let result = d.validate();
    let v = Validation {
        valid: result.is_ok(),
        axiom: result.as_ref().err().and_then(|v| v.axiom()),
        violation: result.as_ref().err().map(|v| v.to_string()),
        spherical: d.is_spherical(),
        fully_supported: d.is_fully_supported(),
    };
    let body = match ctx.format.unwrap_or(Format::Json) {
        Format::Json => json(&v),
        Format::Tsv | Format::Text => {
            let sep = if ctx.format == Some(Format::Tsv) { "\t" } else { ": " };
            let mut rows = vec![format!("valid{sep}{}", v.valid)];
            if let Some(msg) = &v.violation {
                rows.push(format!("violation{sep}{msg}"));
            }
            rows.push(format!("spherical{sep}{}", v.spherical));
            rows.push(format!("fully_supported{sep}{}", v.fully_supported));
            lines(rows)
        }
    };
    let out = Output::ok(body);
    Ok(match &v.violation {
        Some(msg) => out.with_code(1, format!("invalid diagram: {msg}")),
        None => out,
    })
}

fn dyck(ctx: &Context, d: &StaircaseDiagram) -> Result<Output, CliError> {
    valid(d)?;
    let path = to_dyck(d)?;
    let steps: Vec<[usize; 2]> = path.steps().iter().map(|&(r, u)| [r, u]).collect();
    Ok(Output::ok(match ctx.format.unwrap_or(Format::Json) {
        Format::Json => json(&serde_json::json!({ "steps": steps })),
        Format::Tsv => lines(steps.iter().map(|[r, u]| format!("{r}\t{u}"))),
        Format::Text => {
            // r_i north steps then u_i east steps
            let word: String = steps.iter().map(|[r, u]| "N".repeat(*r) + &"E".repeat(*u)).collect();
            lines([word])
        }
    }))
}

#[derive(Serialize)]
struct Piece {
    n: usize,
    direction: Direction,
    blocks: Vec<Vec<usize>>,
}

impl From<&BrokenStaircase> for Piece {
    fn from(b: &BrokenStaircase) -> Self {
        let g = CoxGraph::path(b.n()).expect("valid piece");
        Piece { n: b.n(), direction: b.direction(), blocks: b.blocks().iter().map(|&m| g.ordered_vertices(m)).collect() }
    }
}

fn piece_row(p: &Piece) -> String {
    let blocks: Vec<String> = p.blocks.iter().map(|b| join(b, ",")).collect();
    let dir = serde_json::to_value(p.direction).expect("serializable");
    format!("piece\t{}\t{}\t{}", p.n, dir.as_str().unwrap_or_default(), blocks.join(" "))
}

fn decompose(ctx: &Context, d: &StaircaseDiagram) -> Result<Output, CliError> {
    valid(d)?;
    let (value, rows) = match d.graph().kind {
        GraphKind::Cycle => {
            let c = cycle_decompose(d)?;
            let pieces: Vec<Piece> = c.pieces.iter().map(Piece::from).collect();
            let mut rows: Vec<String> = pieces.iter().map(piece_row).collect();
            rows.push(format!("marked\t{}", c.marked));
            (serde_json::json!({ "kind": "cycle", "pieces": pieces, "marked": c.marked }), rows)
        }
        GraphKind::Path => {
            let l = line_decompose(d)?;
            let pieces: Vec<Piece> = l.broken.iter().map(Piece::from).collect();
            let mut rows: Vec<String> = pieces.iter().map(piece_row).collect();
            let last = l.last.to_json();
            rows.push(format!("last\t{}", serde_json::to_string(&last).expect("serializable")));
            (serde_json::json!({ "kind": "path", "broken": pieces, "last": last }), rows)
        }
    };
    Ok(Output::ok(match ctx.format.unwrap_or(Format::Json) {
        Format::Json => json(&value),
        Format::Tsv => lines(rows),
        Format::Text => lines(rows.into_iter().map(|r| r.replace('\t', " "))),
    }))
}

fn element(ctx: &Context, d: &StaircaseDiagram) -> Result<Output, CliError> {
    valid(d)?;
    let w = to_element(d)?;
    let fields = [
        ("n", w.period().to_string()),
        ("window", join(w.window(), ",")),
        ("word", join(&w.reduced_word(), ",")),
        ("length", w.length().to_string()),
        ("smooth", is_smooth(&w).to_string()),
    ];
    Ok(Output::ok(match ctx.format.unwrap_or(Format::Json) {
        Format::Json => json(&serde_json::json!({
            "n": w.period(),
            "window": w.window(),
            "word": w.reduced_word(),
            "length": w.length(),
            "smooth": is_smooth(&w),
        })),
        Format::Tsv => lines(fields.iter().map(|(k, v)| format!("{k}\t{v}"))),
        Format::Text => lines(fields.iter().map(|(k, v)| format!("{k}: {v}"))),
    }))
}
