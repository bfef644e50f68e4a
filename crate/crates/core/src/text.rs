//! Hand-rolled recursive-descent reader for the text grammar.
//!
//! ```text
//! exponent     := ['-'|'+'] digits ['/' ['-'] digits]
//! segment      := [line ':'] '(' exponent '..' exponent ')'
//! multisegment := '1' | segment ('+' segment)*
//! term         := ['-'] digits ('·'|'*') multisegment
//! ring         := '0' | term (('+'|'-') term)*
//! points       := point (',' point)*      point := [line ':'] exponent
//! ```
//! Whitespace is allowed between tokens. Line labels start with a letter or
//! underscore.

use crate::error::{Error, Result};
use crate::exponent::{self, Exponent};
use crate::segment::{Line, Point, Segment};

pub(crate) struct Cursor<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    pub(crate) fn new(src: &'a str) -> Self {
        Cursor { src, pos: 0 }
    }

    fn rest(&self) -> &'a str {
        &self.src[self.pos..]
    }

    pub(crate) fn skip_ws(&mut self) {
        let r = self.rest();
        self.pos += r.len() - r.trim_start().len();
    }

    pub(crate) fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.rest().chars().next()
    }

    /// Peeks past the next char, after whitespace.
    fn peek2(&mut self) -> Option<char> {
        self.skip_ws();
        let mut it = self.rest().chars();
        it.next()?;
        it.as_str().trim_start().chars().next()
    }

    pub(crate) fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, tok: &str) -> Result<()> {
        self.skip_ws();
        if self.rest().starts_with(tok) {
            self.pos += tok.len();
            Ok(())
        } else {
            Err(self.err(format!("expected `{tok}`")))
        }
    }

    pub(crate) fn err(&self, msg: impl Into<String>) -> Error {
        Error::parse(self.pos, msg)
    }

    pub(crate) fn finish(&mut self) -> Result<()> {
        match self.peek() {
            None => Ok(()),
            Some(c) => Err(self.err(format!("unexpected `{c}`"))),
        }
    }

    fn take_while(&mut self, f: impl Fn(usize, char) -> bool) -> &'a str {
        let r = self.rest();
        let n = r
            .char_indices()
            .find(|&(i, c)| !f(i, c))
            .map_or(r.len(), |(i, _)| i);
        self.pos += n;
        &r[..n]
    }

    pub(crate) fn exponent(&mut self) -> Result<Exponent> {
        self.skip_ws();
        let start = self.pos;
        let r = self.rest();
        let mut len = 0;
        let bytes = r.as_bytes();
        if len < bytes.len() && (bytes[len] == b'-' || bytes[len] == b'+') {
            len += 1;
        }
        while len < bytes.len() && bytes[len].is_ascii_digit() {
            len += 1;
        }
        if len < bytes.len() && bytes[len] == b'/' {
            len += 1;
            if len < bytes.len() && bytes[len] == b'-' {
                len += 1;
            }
            while len < bytes.len() && bytes[len].is_ascii_digit() {
                len += 1;
            }
        }
        self.pos += len;
        exponent::parse_at(&r[..len], start)
    }

    pub(crate) fn unsigned(&mut self) -> Result<u64> {
        self.skip_ws();
        let start = self.pos;
        let digits = self.take_while(|_, c| c.is_ascii_digit());
        digits
            .parse()
            .map_err(|_| Error::parse(start, "expected an unsigned integer"))
    }

    fn at_line_label(&mut self) -> bool {
        matches!(self.peek(), Some(c) if c.is_ascii_alphabetic() || c == '_')
    }

    fn line_prefix(&mut self) -> Result<Line> {
        if !self.at_line_label() {
            return Ok(Line::default());
        }
        let name = self.take_while(|_, c| c.is_ascii_alphanumeric() || c == '_' || c == '\'');
        self.expect(":")?;
        Ok(Line::new(name))
    }

    pub(crate) fn segment(&mut self) -> Result<Segment> {
        let line = self.line_prefix()?;
        self.expect("(")?;
        let at = self.pos;
        let b = self.exponent()?;
        self.expect("..")?;
        let e = self.exponent()?;
        self.expect(")")?;
        Segment::on_line(line, b, e).map_err(|e| match e {
            Error::Precondition(msg) => Error::parse(at, msg),
            other => other,
        })
    }

    /// A multisegment as a raw segment list (not yet canonical).
    pub(crate) fn multisegment(&mut self) -> Result<Vec<Segment>> {
        if self.peek() == Some('1') {
            self.pos += 1;
            return Ok(Vec::new());
        }
        let mut segs = vec![self.segment()?];
        // '+' continues the multisegment only when a segment follows.
        while self.peek() == Some('+')
            && matches!(self.peek2(), Some(c) if c == '(' || c.is_ascii_alphabetic() || c == '_')
        {
            self.eat('+');
            segs.push(self.segment()?);
        }
        Ok(segs)
    }

    /// A ring element as a raw term list.
    pub(crate) fn ring_terms(&mut self) -> Result<Vec<(i64, Vec<Segment>)>> {
        if self.peek() == Some('0') && self.peek2().is_none() {
            self.pos += 1;
            return Ok(Vec::new());
        }
        let mut terms = Vec::new();
        let mut negative = self.eat('-');
        loop {
            let at = {
                self.skip_ws();
                self.pos
            };
            let c = self.unsigned()?;
            let c = i64::try_from(c).map_err(|_| Error::parse(at, "coefficient too large"))?;
            if !(self.eat('·') || self.eat('*')) {
                return Err(self.err("expected `·` after coefficient"));
            }
            let m = self.multisegment()?;
            terms.push((if negative { -c } else { c }, m));
            if self.eat('+') {
                negative = false;
            } else if self.eat('-') {
                negative = true;
            } else {
                break;
            }
        }
        Ok(terms)
    }

    pub(crate) fn points(&mut self) -> Result<Vec<Point>> {
        let mut pts = Vec::new();
        if self.peek().is_none() {
            return Ok(pts);
        }
        loop {
            let line = self.line_prefix()?;
            let x = self.exponent()?;
            pts.push(Point::new(line, x));
            if !self.eat(',') {
                break;
            }
        }
        Ok(pts)
    }
}

/// Parses a comma-separated point list such as `-1,0,0,1/2` or `sigma:0,1`.
pub fn parse_points(s: &str) -> Result<Vec<Point>> {
    let mut cur = Cursor::new(s);
    let pts = cur.points()?;
    cur.finish()?;
    Ok(pts)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn points() {
        let p = parse_points("-1, 0,1/2,sigma:3").unwrap();
        assert_eq!(p.len(), 4);
        assert_eq!(p[2].x, Exponent::HALF);
        assert_eq!(p[3].line.as_str(), "sigma");
        assert!(parse_points("").unwrap().is_empty());
        assert!(matches!(parse_points("0,,1"), Err(Error::Parse { pos: 2, .. })));
    }

    #[test]
    fn error_positions() {
        let mut c = Cursor::new("(0..1)+(2..x)");
        assert!(matches!(c.multisegment(), Err(Error::Parse { pos: 11, .. })));
        let mut c = Cursor::new("(0..1");
        assert!(matches!(c.segment(), Err(Error::Parse { pos: 5, .. })));
    }
}
