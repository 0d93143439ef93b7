//! The `freemod/1` text format.
//!
//! ```text
//! freemod/1
//! kind structure
//! semiring boolean
//! carrier bot a b top
//! add
//!   bot a b top
//!   a a top top
//!   b top b top
//!   top top top top
//! action
//!   bot bot bot bot
//!   bot a b top
//! ```
//!
//! A line is a keyword followed by arguments; a keyword with no arguments
//! opens a table whose rows are the indented lines that follow. `#` starts a
//! comment. Tokens are separated by whitespace, so labels cannot contain
//! spaces.

use std::fmt;

use crate::semiring::{Boolean, GfP, TableSemiring, TruncatedTropical};
use crate::structures::FiniteStructure;

pub const HEADER: &str = "freemod/1";

/// A parse or validation error at a 1-based line and column.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}: {}", self.line, self.column, self.message)
    }
}

impl std::error::Error for ParseError {}

type Parsed<T> = std::result::Result<T, ParseError>;

#[derive(Debug, Clone, PartialEq, Eq)]
struct Token {
    text: String,
    line: usize,
    column: usize,
}

impl Token {
    fn error(&self, message: impl Into<String>) -> ParseError {
        ParseError {
            line: self.line,
            column: self.column,
            message: message.into(),
        }
    }
}

#[derive(Debug)]
struct Entry {
    key: Token,
    args: Vec<Token>,
    rows: Vec<Vec<Token>>,
}

#[derive(Debug)]
struct Document {
    kind: Token,
    entries: Vec<Entry>,
    last_line: usize,
}

fn tokenize(line: &str, number: usize) -> Vec<Token> {
    let content = line.split('#').next().unwrap_or("");
    let mut out = Vec::new();
    let mut start: Option<(usize, usize)> = None;
    for (col, (byte, ch)) in content.char_indices().enumerate() {
        match (ch.is_whitespace(), start) {
            (false, None) => start = Some((byte, col)),
            (true, Some((b, c))) => {
                out.push(Token {
                    text: content[b..byte].to_string(),
                    line: number,
                    column: c + 1,
                });
                start = None;
            }
            _ => {}
        }
    }
    if let Some((b, c)) = start {
        out.push(Token {
            text: content[b..].to_string(),
            line: number,
            column: c + 1,
        });
    }
    out
}

fn at(line: usize, column: usize, message: impl Into<String>) -> ParseError {
    ParseError {
        line,
        column,
        message: message.into(),
    }
}

fn read_document(text: &str) -> Parsed<Document> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.starts_with([' ', '\t']), tokenize(l, i + 1)))
        .filter(|(_, _, t)| !t.is_empty());
    let last_line = text.lines().count().max(1);

    let (_, _, header) = lines
        .next()
        .ok_or_else(|| at(1, 1, format!("empty file, expected `{HEADER}`")))?;
    let h = &header[0];
    if h.text != HEADER || header.len() > 1 {
        let message = match h.text.strip_prefix("freemod/") {
            Some(v) if h.text != HEADER => format!("unsupported schema version `{v}`"),
            _ => format!("expected header `{HEADER}`"),
        };
        return Err(h.error(message));
    }

    let mut entries: Vec<Entry> = Vec::new();
    for (number, indented, tokens) in lines {
        if indented {
            match entries.last_mut() {
                Some(e) if e.args.is_empty() => e.rows.push(tokens),
                _ => return Err(tokens[0].error("indented row outside a table")),
            }
            continue;
        }
        let mut tokens = tokens.into_iter();
        let key = tokens.next().expect("non-empty line");
        let args: Vec<Token> = tokens.collect();
        let is_mapping = args.first().is_some_and(|t| t.text == "->");
        if !is_mapping {
            if let Some(prev) = entries.iter().find(|e| e.key.text == key.text) {
                return Err(key.error(format!(
                    "duplicate `{}` (first given on line {})",
                    key.text, prev.key.line
                )));
            }
        }
        debug_assert_eq!(key.line, number);
        entries.push(Entry {
            key,
            args,
            rows: Vec::new(),
        });
    }

    let kind_pos = entries
        .iter()
        .position(|e| e.key.text == "kind")
        .ok_or_else(|| at(h.line + 1, 1, "missing `kind` line"))?;
    let kind_entry = entries.remove(kind_pos);
    let kind = single_arg(&kind_entry)?.clone();
    Ok(Document {
        kind,
        entries,
        last_line,
    })
}

fn single_arg(e: &Entry) -> Parsed<&Token> {
    match e.args.as_slice() {
        [one] => Ok(one),
        [] => Err(e.key.error(format!("`{}` needs a value", e.key.text))),
        [_, extra, ..] => Err(extra.error(format!("`{}` takes one value", e.key.text))),
    }
}

struct Fields<'a> {
    doc: &'a Document,
    used: Vec<bool>,
}

impl<'a> Fields<'a> {
    fn new(doc: &'a Document) -> Self {
        Self {
            doc,
            used: vec![false; doc.entries.len()],
        }
    }

    fn take(&mut self, key: &str) -> Option<&'a Entry> {
        let pos = self.doc.entries.iter().position(|e| e.key.text == key)?;
        self.used[pos] = true;
        Some(&self.doc.entries[pos])
    }

    fn require(&mut self, key: &str) -> Parsed<&'a Entry> {
        self.take(key)
            .ok_or_else(|| at(self.doc.last_line, 1, format!("missing `{key}`")))
    }

    fn mappings(&mut self) -> Vec<&'a Entry> {
        let mut out = Vec::new();
        for (i, e) in self.doc.entries.iter().enumerate() {
            if e.args.first().is_some_and(|t| t.text == "->") {
                self.used[i] = true;
                out.push(e);
            }
        }
        out
    }

    /// Rejects any entry not consumed by the schema.
    fn finish(self) -> Parsed<()> {
        match self.used.iter().position(|u| !u) {
            Some(i) => {
                let k = &self.doc.entries[i].key;
                Err(k.error(format!("unexpected `{}`", k.text)))
            }
            None => Ok(()),
        }
    }
}

fn labels(e: &Entry) -> Parsed<Vec<String>> {
    if e.args.is_empty() {
        return Err(e
            .key
            .error(format!("`{}` needs at least one label", e.key.text)));
    }
    for (i, t) in e.args.iter().enumerate() {
        if e.args[..i].iter().any(|p| p.text == t.text) {
            return Err(t.error(format!("duplicate label `{}`", t.text)));
        }
    }
    Ok(e.args.iter().map(|t| t.text.clone()).collect())
}

fn index(t: &Token, carrier: &[String], what: &str) -> Parsed<usize> {
    carrier
        .iter()
        .position(|l| *l == t.text)
        .ok_or_else(|| t.error(format!("`{}` is not in the {what}", t.text)))
}

/// A `rows × cols` label matrix read into carrier indices.
fn matrix(
    e: &Entry,
    rows: usize,
    cols: usize,
    carrier: &[String],
    what: &str,
) -> Parsed<Vec<usize>> {
    if let Some(t) = e.args.first() {
        return Err(t.error(format!(
            "`{}` rows go on indented lines below it",
            e.key.text
        )));
    }
    if e.rows.len() != rows {
        return Err(e.key.error(format!(
            "`{}` has {} rows, expected {rows}",
            e.key.text,
            e.rows.len()
        )));
    }
    let mut out = Vec::with_capacity(rows * cols);
    for row in &e.rows {
        if row.len() != cols {
            let t = row.get(cols).unwrap_or(&row[0]);
            return Err(t.error(format!("row has {} entries, expected {cols}", row.len())));
        }
        for t in row {
            out.push(index(t, carrier, what)?);
        }
    }
    Ok(out)
}

/// A semiring named on the command line or in a file.
#[derive(Debug, Clone)]
pub enum Builtin {
    Gf(GfP),
    Boolean,
    Integers,
    Naturals,
    Rationals,
    NonNegRationals,
    Tropical,
    Truncated(TruncatedTropical),
}

impl Builtin {
    pub fn parse(name: &str) -> Option<Self> {
        let arg = |prefix: &str| {
            name.strip_prefix(prefix)?
                .strip_suffix(')')?
                .parse::<u32>()
                .ok()
        };
        Some(match name {
            "boolean" => Builtin::Boolean,
            "integers" => Builtin::Integers,
            "naturals" => Builtin::Naturals,
            "rationals" => Builtin::Rationals,
            "nonneg-rationals" => Builtin::NonNegRationals,
            "tropical-min-plus" => Builtin::Tropical,
            _ => {
                if let Some(p) = arg("gf(") {
                    Builtin::Gf(GfP::new(p.into()).ok()?)
                } else {
                    let cap = arg("tropical-truncated(")?;
                    Builtin::Truncated(TruncatedTropical::new(cap))
                }
            }
        })
    }

    /// Cayley tables, for finite systems.
    pub fn table(&self) -> Option<TableSemiring> {
        match self {
            Builtin::Gf(g) => TableSemiring::from_finite(g).ok(),
            Builtin::Boolean => TableSemiring::from_finite(&Boolean).ok(),
            Builtin::Truncated(t) => TableSemiring::from_finite(t).ok(),
            _ => None,
        }
    }
}

fn builtin(t: &Token) -> Parsed<Builtin> {
    Builtin::parse(&t.text).ok_or_else(|| {
        let message = match t.text.strip_prefix("gf(").and_then(|r| r.strip_suffix(')')) {
            Some(p) => format!("gf({p}) needs a prime modulus"),
            None => format!("unknown semiring `{}`", t.text),
        };
        t.error(message)
    })
}

fn finite_builtin(t: &Token) -> Parsed<TableSemiring> {
    builtin(t)?
        .table()
        .ok_or_else(|| t.error(format!("semiring `{}` is infinite", t.text)))
}

/// Reads semiring tables from entries named `prefix` + carrier/zero/one/add/mul.
fn table_semiring(
    f: &mut Fields<'_>,
    name: String,
    carrier_key: &str,
    prefix: &str,
) -> Parsed<TableSemiring> {
    let carrier_entry = f.require(carrier_key)?;
    let carrier = labels(carrier_entry)?;
    let n = carrier.len();
    let zero = index(
        single_arg(f.require(&format!("{prefix}zero"))?)?,
        &carrier,
        "scalars",
    )?;
    let one = index(
        single_arg(f.require(&format!("{prefix}one"))?)?,
        &carrier,
        "scalars",
    )?;
    let add = matrix(
        f.require(&format!("{prefix}add"))?,
        n,
        n,
        &carrier,
        "scalars",
    )?;
    let mul = matrix(
        f.require(&format!("{prefix}mul"))?,
        n,
        n,
        &carrier,
        "scalars",
    )?;
    TableSemiring::named(name, carrier, add, mul, zero, one)
        .map_err(|e| carrier_entry.key.error(e.to_string()))
}

/// Contents of a `kind semiring` file.
#[derive(Debug, Clone)]
pub enum SemiringFile {
    Builtin(Builtin),
    Table(TableSemiring),
}

/// Contents of a `kind map` file. The domain is supplied separately.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MapFile {
    pub codomain: Codomain,
    /// `(domain label, codomain label, line)`.
    pub pairs: Vec<(String, String, usize)>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Codomain {
    /// The domain structure itself.
    Same,
    /// `R^k` realized over the domain's scalars, labels like `[0,1]`.
    Power(usize),
}

fn expect_kind(doc: &Document, kind: &str) -> Parsed<()> {
    if doc.kind.text == kind {
        Ok(())
    } else {
        Err(doc.kind.error(format!(
            "expected a `{kind}` file, found `{}`",
            doc.kind.text
        )))
    }
}

pub fn parse_semiring(text: &str) -> Parsed<SemiringFile> {
    let doc = read_document(text)?;
    expect_kind(&doc, "semiring")?;
    let mut f = Fields::new(&doc);
    let out = if let Some(b) = f.take("builtin") {
        SemiringFile::Builtin(builtin(single_arg(b)?)?)
    } else {
        let name = match f.take("name") {
            Some(e) => single_arg(e)?.text.clone(),
            None => "table".into(),
        };
        SemiringFile::Table(table_semiring(&mut f, name, "carrier", "")?)
    };
    f.finish()?;
    Ok(out)
}

fn parse_count(t: &Token, what: &str) -> Parsed<usize> {
    t.text
        .parse()
        .map_err(|_| t.error(format!("{what} must be a non-negative integer")))
}

pub fn parse_structure(text: &str) -> Parsed<FiniteStructure> {
    let doc = read_document(text)?;
    expect_kind(&doc, "structure")?;
    let mut f = Fields::new(&doc);
    let sr = f.require("semiring")?;
    let name = single_arg(sr)?;
    let semiring = if name.text == "table" {
        let label = match f.take("scalar-name") {
            Some(e) => single_arg(e)?.text.clone(),
            None => "table".into(),
        };
        table_semiring(&mut f, label, "scalars", "scalar-")?
    } else {
        finite_builtin(name)?
    };
    let s = if let Some(p) = f.take("power") {
        let t = single_arg(p)?;
        FiniteStructure::power(&semiring, parse_count(t, "power")?)
            .map_err(|e| t.error(e.to_string()))?
    } else {
        let carrier_entry = f.require("carrier")?;
        let carrier = labels(carrier_entry)?;
        let (n, r) = (carrier.len(), semiring.size());
        let add = matrix(f.require("add")?, n, n, &carrier, "carrier")?;
        let action = matrix(f.require("action")?, r, n, &carrier, "carrier")?;
        FiniteStructure::new(semiring, carrier, add, action)
            .map_err(|e| carrier_entry.key.error(e.to_string()))?
    };
    f.finish()?;
    Ok(s)
}

pub fn parse_map(text: &str) -> Parsed<MapFile> {
    let doc = read_document(text)?;
    expect_kind(&doc, "map")?;
    let mut f = Fields::new(&doc);
    let c = f.require("codomain")?;
    let codomain = match c.args.as_slice() {
        [same] if same.text == "same" => Codomain::Same,
        [power, k] if power.text == "power" => Codomain::Power(parse_count(k, "power")?),
        [] => return Err(c.key.error("`codomain` needs `same` or `power k`")),
        [t, ..] => return Err(t.error("expected `same` or `power k`")),
    };
    let pairs = f
        .mappings()
        .into_iter()
        .map(|e| match e.args.as_slice() {
            [_, to] => Ok((e.key.text.clone(), to.text.clone(), e.key.line)),
            [arrow] => Err(arrow.error("missing image after `->`")),
            [_, _, extra, ..] => Err(extra.error("one image per line")),
            [] => unreachable!(),
        })
        .collect::<Parsed<Vec<_>>>()?;
    f.finish()?;
    Ok(MapFile { codomain, pairs })
}
