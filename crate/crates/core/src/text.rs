//! Identifier grammar, string escaping and the line tokenizer shared by the
//! canonical record formats.

use std::fmt::Write as _;

/// `[A-Za-z_][A-Za-z0-9_.-]*`
pub fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_') && chars.all(is_ident_continue)
}

pub(crate) fn is_ident_continue(c: char) -> bool {
    c.is_ascii_alphanumeric() || matches!(c, '_' | '.' | '-')
}

/// Double-quoted form of `s` with backslash escapes.
pub fn quote(s: &str) -> String {
    let mut out = String::with_capacity(s.len() + 2);
    out.push('"');
    for c in s.chars() {
        match c {
            '"' => out.push_str("\\\""),
            '\\' => out.push_str("\\\\"),
            '\n' => out.push_str("\\n"),
            '\r' => out.push_str("\\r"),
            '\t' => out.push_str("\\t"),
            c if c.is_control() => {
                let _ = write!(out, "\\u{{{:x}}}", c as u32);
            }
            c => out.push(c),
        }
    }
    out.push('"');
    out
}

/// Result of scanning a quoted string starting at its opening quote.
#[derive(Debug, PartialEq, Eq)]
pub(crate) enum Scanned {
    /// Decoded value and the number of chars consumed, quotes included.
    Ok(String, usize),
    /// Bad escape: char offset of the backslash and a message.
    BadEscape(usize, String),
    /// No closing quote before end of line.
    Unterminated,
}

/// Scans a quoted string; `chars[0]` must be `"`. Stops at a raw newline.
pub(crate) fn scan_quoted(chars: &[char]) -> Scanned {
    debug_assert_eq!(chars.first(), Some(&'"'));
    let mut out = String::new();
    let mut i = 1;
    while i < chars.len() {
        match chars[i] {
            '"' => return Scanned::Ok(out, i + 1),
            '\n' => return Scanned::Unterminated,
            '\\' => {
                let start = i;
                i += 1;
                match chars.get(i) {
                    Some('"') => out.push('"'),
                    Some('\\') => out.push('\\'),
                    Some('n') => out.push('\n'),
                    Some('r') => out.push('\r'),
                    Some('t') => out.push('\t'),
                    Some('u') => {
                        if chars.get(i + 1) != Some(&'{') {
                            return Scanned::BadEscape(start, "expected `{` after `\\u`".into());
                        }
                        let hex_start = i + 2;
                        let Some(len) = chars[hex_start..].iter().position(|&c| c == '}') else {
                            return Scanned::BadEscape(start, "unterminated `\\u{...}` escape".into());
                        };
                        let hex: String = chars[hex_start..hex_start + len].iter().collect();
                        match u32::from_str_radix(&hex, 16).ok().and_then(char::from_u32) {
                            Some(c) if (1..=6).contains(&len) => out.push(c),
                            _ => return Scanned::BadEscape(start, format!("invalid unicode escape `\\u{{{hex}}}`")),
                        }
                        i = hex_start + len;
                    }
                    Some(c) => return Scanned::BadEscape(start, format!("unknown escape `\\{c}`")),
                    None => return Scanned::Unterminated,
                }
            }
            c => out.push(c),
        }
        i += 1;
    }
    Scanned::Unterminated
}

/// One whitespace-separated field of a canonical record line.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Field {
    Bare(String),
    Quoted(String),
}

impl Field {
    pub fn as_str(&self) -> &str {
        match self {
            Field::Bare(s) | Field::Quoted(s) => s,
        }
    }
}

/// Splits a canonical record line into fields. Fields are separated by
/// single spaces; leading indentation is reported separately.
pub fn tokenize_record(line: &str) -> Result<(usize, Vec<Field>), String> {
    let chars: Vec<char> = line.chars().collect();
    let indent = chars.iter().take_while(|&&c| c == ' ').count();
    let mut fields = Vec::new();
    let mut i = indent;
    while i < chars.len() {
        if chars[i] == '"' {
            match scan_quoted(&chars[i..]) {
                Scanned::Ok(s, n) => {
                    fields.push(Field::Quoted(s));
                    i += n;
                }
                Scanned::BadEscape(at, msg) => return Err(format!("column {}: {msg}", i + at + 1)),
                Scanned::Unterminated => return Err(format!("column {}: unterminated string", i + 1)),
            }
        } else {
            let start = i;
            while i < chars.len() && chars[i] != ' ' && chars[i] != '"' {
                i += 1;
            }
            fields.push(Field::Bare(chars[start..i].iter().collect()));
        }
        match chars.get(i) {
            None => break,
            Some(' ') if i + 1 < chars.len() && chars[i + 1] != ' ' => i += 1,
            Some(_) => return Err(format!("column {}: expected a single space between fields", i + 1)),
        }
    }
    Ok((indent, fields))
}
