//! The free objects `R^N` (dense) and `R^J` (finitely supported).

mod dense;
mod finsupp;

use std::fmt;

use crate::error::{Error, Result};

pub use dense::{dense_add, dense_scale, dense_to_finsupp, DenseVec};
pub use finsupp::{finsupp_add, finsupp_scale, finsupp_to_dense, FinSupp};

/// An index in `J`. Integers sort before strings.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Key {
    Int(i64),
    Str(String),
}

impl Key {
    pub fn parse(text: &str) -> Key {
        text.parse()
            .map(Key::Int)
            .unwrap_or_else(|_| Key::Str(text.to_string()))
    }
}

impl From<i64> for Key {
    fn from(v: i64) -> Self {
        Key::Int(v)
    }
}

impl From<&str> for Key {
    fn from(v: &str) -> Self {
        Key::Str(v.to_string())
    }
}

impl fmt::Display for Key {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Key::Int(i) => i.fmt(f),
            Key::Str(s) => f.write_str(s),
        }
    }
}

fn strip_delims(text: &str, open: char, close: char) -> Result<&str> {
    text.trim()
        .strip_prefix(open)
        .and_then(|t| t.strip_suffix(close))
        .ok_or_else(|| Error::Literal {
            input: text.to_string(),
            reason: format!("expected `{open}...{close}`"),
        })
}

fn split_items(body: &str) -> impl Iterator<Item = &str> {
    let body = body.trim();
    body.split(',')
        .map(str::trim)
        .filter(move |_| !body.is_empty())
}
