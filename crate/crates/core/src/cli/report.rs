use std::fmt::Write as _;

use serde::Serialize;
use sha2::{Digest, Sha256};

/// Process exit statuses.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Exit {
    Ok = 0,
    /// The mathematical check failed: axioms, freeness, isomorphism.
    Failure = 2,
    /// The input could not be read or parsed.
    Input = 3,
    /// A search ran out of budget before deciding.
    Budget = 4,
}

impl Exit {
    pub fn code(self) -> i32 {
        self as i32
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InputDigest {
    pub name: String,
    pub sha256: String,
}

impl InputDigest {
    pub fn new(name: impl Into<String>, bytes: &[u8]) -> Self {
        let hash = Sha256::digest(bytes);
        let mut hex = String::with_capacity(64);
        for b in hash {
            let _ = write!(hex, "{b:02x}");
        }
        Self {
            name: name.into(),
            sha256: hex,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Line {
    pub key: String,
    pub value: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Section {
    pub title: String,
    pub lines: Vec<Line>,
}

impl Section {
    pub fn new(title: impl Into<String>) -> Self {
        Self {
            title: title.into(),
            lines: Vec::new(),
        }
    }

    pub fn line(&mut self, key: impl Into<String>, value: impl Into<String>) -> &mut Self {
        self.lines.push(Line {
            key: key.into(),
            value: value.into(),
        });
        self
    }
}

/// Output of one command. Rendering is a pure function of the fields, so
/// identical inputs give byte-identical output.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Report {
    pub command: String,
    pub inputs: Vec<InputDigest>,
    pub result: String,
    pub sections: Vec<Section>,
    #[serde(serialize_with = "exit_code")]
    pub exit: Exit,
}

fn exit_code<S: serde::Serializer>(e: &Exit, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_i32(e.code())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, clap::ValueEnum)]
pub enum Format {
    #[default]
    Human,
    Machine,
}

impl Report {
    pub fn new(command: impl Into<String>) -> Self {
        Self {
            command: command.into(),
            inputs: Vec::new(),
            result: String::new(),
            sections: Vec::new(),
            exit: Exit::Ok,
        }
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Human => self.human(),
            Format::Machine => {
                let mut out = serde_json::to_string_pretty(self).expect("reports serialize");
                out.push('\n');
                out
            }
        }
    }

    fn human(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "command: {}", self.command);
        for i in &self.inputs {
            let _ = writeln!(out, "input: {} sha256:{}", i.name, i.sha256);
        }
        let _ = writeln!(out, "result: {}", self.result);
        for s in &self.sections {
            let _ = writeln!(out, "\n[{}]", s.title);
            let width = s
                .lines
                .iter()
                .map(|l| l.key.chars().count())
                .max()
                .unwrap_or(0);
            for l in &s.lines {
                if l.value.is_empty() {
                    let _ = writeln!(out, "  {}", l.key);
                } else {
                    let _ = writeln!(out, "  {:width$}  {}", l.key, l.value);
                }
            }
        }
        let _ = writeln!(out, "\nexit: {}", self.exit.code());
        out
    }
}
