use std::fs;
use std::io::Read;

use affine_schubert::coxeter::{AffinePermutation, ElementJson, ParabolicSubset};
use affine_schubert::staircase::StaircaseDiagram;
use clap::Args;

use crate::CliError;

/// An element given as a window, a reduced word, or a JSON document.
#[derive(Args, Debug)]
pub struct ElementArgs {
    /// Period of the affine symmetric group.
    #[arg(long)]
    pub n: Option<usize>,
    /// Window `w(1),...,w(n)`, comma separated.
    #[arg(long, allow_hyphen_values = true, conflicts_with_all = ["word", "element"])]
    pub window: Option<String>,
    /// Word in the simple reflections `0..n-1`, comma separated (empty for the identity).
    #[arg(long, conflicts_with = "element")]
    pub word: Option<String>,
    /// `{"n":4,"window":[...]}` or `{"n":4,"word":[...]}`.
    #[arg(long)]
    pub element: Option<String>,
}

impl ElementArgs {
    pub fn parse(&self) -> Result<AffinePermutation, CliError> {
        if let Some(json) = &self.element {
            let w = ElementJson::parse(json)?;
            if self.n.is_some_and(|n| n != w.period()) {
                return Err(CliError::invalid("--n disagrees with the element's period"));
            }
            return Ok(w);
        }
        let n = self.n.ok_or_else(|| CliError::invalid("--n is required with --window or --word"))?;
        match (&self.window, &self.word) {
            (Some(window), None) => Ok(AffinePermutation::from_window(n, parse_list(window, "--window")?)?),
            (None, Some(word)) => Ok(AffinePermutation::from_word(n, &parse_list(word, "--word")?)?),
            _ => Err(CliError::invalid("give one of --window, --word or --element")),
        }
    }
}

/// Comma separated integers; the empty string is the empty list.
pub fn parse_list<T: std::str::FromStr>(text: &str, flag: &str) -> Result<Vec<T>, CliError> {
    let text = text.trim();
    if text.is_empty() {
        return Ok(Vec::new());
    }
    text.split(',')
        .map(|part| {
            part.trim().parse().map_err(|_| CliError::invalid(format!("{flag}: cannot parse {:?}", part.trim())))
        })
        .collect()
}

pub fn parse_subset(n: usize, text: Option<&str>) -> Result<ParabolicSubset, CliError> {
    match text {
        None => Ok(ParabolicSubset::empty(n)),
        Some(text) => Ok(ParabolicSubset::from_indices(n, parse_list::<usize>(text, "--J")?)?),
    }
}

/// Reads a file, or standard input for `-`.
pub fn read_source(path: &str) -> Result<String, CliError> {
    if path == "-" {
        let mut text = String::new();
        std::io::stdin().read_to_string(&mut text).map_err(|e| CliError::invalid(format!("stdin: {e}")))?;
        return Ok(text);
    }
    fs::read_to_string(path).map_err(|e| CliError::invalid(format!("{path}: {e}")))
}

pub fn read_diagram(path: &str) -> Result<StaircaseDiagram, CliError> {
    Ok(StaircaseDiagram::from_json_str(&read_source(path)?)?)
}
