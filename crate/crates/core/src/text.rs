//! Line-oriented text encoding for symbol strings.
//!
//! Alphabets up to 9 symbols are written as contiguous decimal digits
//! (`123121321`); larger alphabets use comma-separated decimal tokens
//! (`1,2,…,10,11`). Neither form contains whitespace.

use std::fmt;

use crate::builder::SymbolString;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EncodingStyle {
    Digits,
    CommaSeparated,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TextEncoding {
    pub n: usize,
    pub style: EncodingStyle,
}

impl TextEncoding {
    pub fn for_alphabet(n: usize) -> Self {
        let style = if n <= 9 { EncodingStyle::Digits } else { EncodingStyle::CommaSeparated };
        TextEncoding { n, style }
    }

    pub fn encode(&self, s: &SymbolString) -> String {
        encode_symbols(self.style, s.chars())
    }

    /// Parses one line. Surrounding whitespace is ignored; interior whitespace is an error.
    pub fn decode(&self, line: &str) -> Result<SymbolString> {
        let body = line.trim();
        let symbols = match self.style {
            EncodingStyle::Digits => parse_digits(body)?,
            EncodingStyle::CommaSeparated => parse_comma(body)?,
        };
        SymbolString::new(self.n, symbols)
    }
}

fn encode_symbols(style: EncodingStyle, chars: &[u8]) -> String {
    match style {
        EncodingStyle::Digits => chars.iter().map(|&c| char::from(b'0' + c)).collect(),
        EncodingStyle::CommaSeparated => {
            let parts: Vec<String> = chars.iter().map(u8::to_string).collect();
            parts.join(",")
        }
    }
}

pub(crate) fn write_symbols(f: &mut fmt::Formatter<'_>, n: usize, chars: &[u8]) -> fmt::Result {
    f.write_str(&encode_symbols(TextEncoding::for_alphabet(n).style, chars))
}

fn parse_digits(body: &str) -> Result<Vec<u8>> {
    body.char_indices()
        .map(|(offset, c)| {
            c.to_digit(10).map(|d| d as u8).ok_or_else(|| Error::Parse {
                offset,
                message: format!("expected a decimal digit, found {c:?}"),
            })
        })
        .collect()
}

fn parse_comma(body: &str) -> Result<Vec<u8>> {
    if body.is_empty() {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    let mut offset = 0;
    for token in body.split(',') {
        let v: u8 = token.parse().map_err(|_| Error::Parse {
            offset,
            message: format!("expected a decimal symbol, found {token:?}"),
        })?;
        out.push(v);
        offset += token.len() + 1;
    }
    Ok(out)
}

/// Comma-separated if the input contains a comma, contiguous digits otherwise.
pub(crate) fn parse_symbols_auto(s: &str) -> Result<Vec<u8>> {
    let body = s.trim();
    if body.contains(',') {
        parse_comma(body)
    } else {
        parse_digits(body)
    }
}
