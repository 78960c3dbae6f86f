use clap::ValueEnum;
use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Tsv,
    Text,
}

/// What a command writes to standard output, and how it exits.
pub struct Output {
    pub body: String,
    pub code: u8,
    pub diagnostic: Option<String>,
}

impl Output {
    pub fn ok(body: String) -> Self {
        Output { body, code: 0, diagnostic: None }
    }

    pub fn with_code(mut self, code: u8, diagnostic: impl Into<String>) -> Self {
        self.code = code;
        self.diagnostic = Some(diagnostic.into());
        self
    }
}

pub fn json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable");
    s.push('\n');
    s
}

/// Lines joined with a trailing newline.
pub fn lines<I: IntoIterator<Item = String>>(rows: I) -> String {
    rows.into_iter().map(|r| r + "\n").collect()
}

pub fn join<T: ToString>(values: &[T], sep: &str) -> String {
    values.iter().map(ToString::to_string).collect::<Vec<_>>().join(sep)
}
