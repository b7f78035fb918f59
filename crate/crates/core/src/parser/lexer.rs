//! Character cursor with line/column tracking.

use crate::text::{is_ident_continue, scan_quoted, Scanned};

use super::Pos;

pub(super) const KEYWORDS: [&str; 3] = ["entity", "rel", "comp"];

pub(super) struct Cursor {
    chars: Vec<char>,
    i: usize,
    line: usize,
    column: usize,
}

impl Cursor {
    pub(super) fn new(text: &str) -> Cursor {
        Cursor {
            chars: text.chars().collect(),
            i: 0,
            line: 1,
            column: 1,
        }
    }

    pub(super) fn pos(&self) -> Pos {
        Pos {
            line: self.line,
            column: self.column,
        }
    }

    pub(super) fn peek(&self) -> Option<char> {
        self.chars.get(self.i).copied()
    }

    fn peek_at(&self, offset: usize) -> Option<char> {
        self.chars.get(self.i + offset).copied()
    }

    pub(super) fn at_eof(&self) -> bool {
        self.i >= self.chars.len()
    }

    pub(super) fn bump(&mut self) -> Option<char> {
        let c = self.peek()?;
        self.i += 1;
        if c == '\n' {
            self.line += 1;
            self.column = 1;
        } else {
            self.column += 1;
        }
        Some(c)
    }

    /// Skips whitespace, newlines and `#` comments.
    pub(super) fn skip_trivia(&mut self) {
        while let Some(c) = self.peek() {
            if c.is_whitespace() {
                self.bump();
            } else if c == '#' {
                while self.peek().is_some_and(|c| c != '\n') {
                    self.bump();
                }
            } else {
                break;
            }
        }
    }

    /// Skips spaces, tabs and a trailing `#` comment, but not the newline.
    pub(super) fn skip_inline(&mut self) {
        while let Some(c) = self.peek() {
            if c == ' ' || c == '\t' || c == '\r' {
                self.bump();
            } else if c == '#' {
                while self.peek().is_some_and(|c| c != '\n') {
                    self.bump();
                }
            } else {
                break;
            }
        }
    }

    pub(super) fn at_arrow(&self) -> bool {
        self.peek() == Some('-') && self.peek_at(1) == Some('>')
    }

    /// `[A-Za-z_][A-Za-z0-9_.-]*`, stopping before a `->`.
    pub(super) fn ident(&mut self) -> Option<(String, Pos)> {
        let pos = self.pos();
        if !self.peek().is_some_and(|c| c.is_ascii_alphabetic() || c == '_') {
            return None;
        }
        let mut s = String::new();
        while let Some(c) = self.peek() {
            if !is_ident_continue(c) || self.at_arrow() {
                break;
            }
            s.push(c);
            self.bump();
        }
        Some((s, pos))
    }

    /// An unquoted value: a run of letters, digits and `_ . : + -`.
    pub(super) fn bare_literal(&mut self) -> (String, Pos) {
        let pos = self.pos();
        let mut s = String::new();
        while let Some(c) = self.peek() {
            if !(c.is_ascii_alphanumeric() || matches!(c, '_' | '.' | ':' | '+' | '-')) {
                break;
            }
            s.push(c);
            self.bump();
        }
        (s, pos)
    }

    /// A double-quoted string starting at the cursor. Errors carry the
    /// position to report.
    pub(super) fn quoted(&mut self) -> Result<(String, Pos), (Pos, String)> {
        let pos = self.pos();
        match scan_quoted(&self.chars[self.i..]) {
            Scanned::Ok(s, used) => {
                for _ in 0..used {
                    self.bump();
                }
                Ok((s, pos))
            }
            Scanned::BadEscape(offset, msg) => {
                for _ in 0..offset {
                    self.bump();
                }
                Err((self.pos(), msg))
            }
            Scanned::Unterminated => Err((pos, "unterminated string".into())),
        }
    }

    /// Moves to the next line that starts with a statement keyword, or to
    /// the end of input.
    pub(super) fn recover(&mut self) {
        loop {
            while self.peek().is_some_and(|c| c != '\n') {
                self.bump();
            }
            if self.bump().is_none() {
                return;
            }
            while self.peek().is_some_and(|c| c == ' ' || c == '\t' || c == '\r') {
                self.bump();
            }
            if self.at_keyword() {
                return;
            }
        }
    }

    fn at_keyword(&self) -> bool {
        KEYWORDS.iter().any(|kw| {
            let n = kw.chars().count();
            self.chars
                .get(self.i..self.i + n)
                .is_some_and(|s| s.iter().copied().eq(kw.chars()))
                && !self.peek_at(n).is_some_and(is_ident_continue)
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn positions_advance_by_character() {
        let mut c = Cursor::new("é\nab");
        c.bump();
        assert_eq!(c.pos(), Pos { line: 1, column: 2 });
        c.bump();
        assert_eq!(c.pos(), Pos { line: 2, column: 1 });
    }

    #[test]
    fn ident_stops_before_arrow() {
        let mut c = Cursor::new("a-b->c");
        assert_eq!(c.ident().unwrap().0, "a-b");
        assert!(c.at_arrow());
        let mut c = Cursor::new("x- ->");
        assert_eq!(c.ident().unwrap().0, "x-");
    }

    #[test]
    fn trivia_and_literals() {
        let mut c = Cursor::new("  # note\n 2024-03-01T09:30:00+01:00}");
        c.skip_trivia();
        assert_eq!(c.pos(), Pos { line: 2, column: 2 });
        assert_eq!(c.bare_literal().0, "2024-03-01T09:30:00+01:00");
        assert_eq!(c.peek(), Some('}'));
    }

    #[test]
    fn recovery_lands_on_keywords_only() {
        let mut c = Cursor::new("bad stuff\n  name = 1\nentityx\n  rel a -> b\n");
        c.recover();
        assert_eq!(c.pos(), Pos { line: 4, column: 3 });
        c.recover();
        assert!(c.at_eof());
    }

    #[test]
    fn quoted_errors() {
        let mut c = Cursor::new("\"abc");
        assert_eq!(c.quoted().unwrap_err().0, Pos { line: 1, column: 1 });
        let mut c = Cursor::new("\"ab\\q\"");
        assert_eq!(c.quoted().unwrap_err().0, Pos { line: 1, column: 4 });
        let mut c = Cursor::new("\"a\\\"b\" rest");
        assert_eq!(c.quoted().unwrap().0, "a\"b");
        assert_eq!(c.pos().column, 7);
    }
}
