//! Plain-text cochain files.
//!
//! ```text
//! # comment
//! B = 2,2
//! A = 2
//! arity = 2
//! ((1,0),(0,1)) : (1)
//! ```
//!
//! Omitted tuples are 0. For a single-factor group the inner parentheses of
//! elements may be dropped, and the outer parentheses around the argument
//! list are optional: `(1),(1),(1) : 1` and `(1,1,1) : 1` both name the
//! tuple `(1,1,1)` when `B = 2`.

use std::collections::BTreeSet;
use std::fmt;

use cocycle_core::{Cochain, FinAbGroup, GroupElem};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}: {}", self.line, self.message)
    }
}

impl std::error::Error for ParseError {}

fn err<T>(line: usize, message: impl Into<String>) -> Result<T, ParseError> {
    Err(ParseError { line, message: message.into() })
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Item {
    Int(u64),
    Group(Vec<Item>),
}

struct Lexer<'a> {
    s: &'a [u8],
    pos: usize,
    line: usize,
}

impl Lexer<'_> {
    fn skip_ws(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.s.get(self.pos).copied()
    }

    /// Comma-separated items up to (not including) `close`, or end of input.
    fn list(&mut self, close: Option<u8>) -> Result<Vec<Item>, ParseError> {
        let mut items = Vec::new();
        if self.peek() == close {
            return Ok(items);
        }
        loop {
            items.push(self.item()?);
            match self.peek() {
                Some(b',') => self.pos += 1,
                c if c == close => return Ok(items),
                Some(c) => return err(self.line, format!("unexpected `{}`", c as char)),
                None => return err(self.line, "unbalanced parentheses"),
            }
        }
    }

    fn item(&mut self) -> Result<Item, ParseError> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.list(Some(b')'))?;
                self.pos += 1;
                Ok(Item::Group(inner))
            }
            Some(c) if c.is_ascii_digit() => {
                let start = self.pos;
                while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
                    self.pos += 1;
                }
                let text = std::str::from_utf8(&self.s[start..self.pos]).expect("ascii digits");
                text.parse().map(Item::Int).or_else(|_| err(self.line, format!("number `{text}` too large")))
            }
            Some(b'-') => err(self.line, "negative residue"),
            Some(c) => err(self.line, format!("unexpected `{}`", c as char)),
            None => err(self.line, "missing value"),
        }
    }
}

fn parse_items(text: &str, line: usize) -> Result<Vec<Item>, ParseError> {
    let mut lx = Lexer { s: text.as_bytes(), pos: 0, line };
    let items = lx.list(None)?;
    if lx.peek().is_some() {
        return err(line, "trailing characters");
    }
    Ok(items)
}

fn ints(items: &[Item]) -> Option<Vec<u64>> {
    items.iter().map(|i| if let Item::Int(v) = i { Some(*v) } else { None }).collect()
}

fn element(g: &FinAbGroup, item: &Item, line: usize, what: &str) -> Result<GroupElem, ParseError> {
    let coords = match item {
        Item::Int(v) if g.num_factors() == 1 => vec![*v],
        Item::Int(_) => return err(line, format!("{what} needs {} coordinates", g.num_factors())),
        Item::Group(inner) => match ints(inner) {
            Some(c) => c,
            None => return err(line, format!("nested parentheses in {what}")),
        },
    };
    if coords.len() != g.num_factors() {
        return err(line, format!("{what} has {} coordinates, expected {}", coords.len(), g.num_factors()));
    }
    for (c, n) in coords.iter().zip(g.orders()) {
        if c >= n {
            return err(line, format!("residue {c} out of range for Z/{n} in {what}"));
        }
    }
    Ok(g.element(coords).expect("validated coordinates"))
}

fn arguments(b: &FinAbGroup, arity: usize, text: &str, line: usize) -> Result<Vec<GroupElem>, ParseError> {
    let mut items = parse_items(text, line)?;
    // optional outer parentheses around the whole argument list
    if let [Item::Group(inner)] = items.as_slice() {
        let wraps_list = inner.iter().any(|i| matches!(i, Item::Group(_)))
            || (arity > 1 && b.num_factors() == 1 && inner.len() == arity);
        if wraps_list {
            items = inner.clone();
        }
    }
    if items.len() == b.num_factors() && arity == 1 && b.num_factors() > 1 && ints(&items).is_some() {
        items = vec![Item::Group(items)];
    }
    if items.len() != arity {
        return err(line, format!("expected {arity} arguments, found {}", items.len()));
    }
    items.iter().enumerate().map(|(i, it)| element(b, it, line, &format!("argument {}", i + 1))).collect()
}

fn value(a: &FinAbGroup, text: &str, line: usize) -> Result<GroupElem, ParseError> {
    let items = parse_items(text, line)?;
    match items.as_slice() {
        [one] => element(a, one, line, "value"),
        _ if a.num_factors() > 1 => element(a, &Item::Group(items), line, "value"),
        _ => err(line, "value must be a single element"),
    }
}

/// Parses a cochain file.
pub fn parse_cochain(text: &str) -> Result<Cochain, ParseError> {
    let mut b: Option<FinAbGroup> = None;
    let mut a: Option<FinAbGroup> = None;
    let mut arity: Option<usize> = None;
    let mut cochain: Option<Cochain> = None;
    let mut seen = BTreeSet::new();
    let mut last_line = 0;

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        last_line = line;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        if let Some((lhs, rhs)) = content.split_once(':') {
            if cochain.is_none() {
                let (Some(bg), Some(ag), Some(n)) = (&b, &a, arity) else {
                    return err(line, "entry before the header (B, A, arity) is complete");
                };
                cochain = Some(Cochain::zero(bg, ag, n));
            }
            let c = cochain.as_mut().expect("initialized above");
            let (bg, ag) = (c.domain().clone(), c.codomain().clone());
            let args = arguments(&bg, c.arity(), lhs, line)?;
            let val = value(&ag, rhs, line)?;
            let key: Vec<Vec<u64>> = args.iter().map(|e| e.coords().to_vec()).collect();
            let shown: Vec<String> = args.iter().map(ToString::to_string).collect();
            if !seen.insert(key) {
                return err(line, format!("duplicate tuple ({})", shown.join(",")));
            }
            if args.iter().any(GroupElem::is_zero) {
                if !val.is_zero() {
                    return err(line, format!("tuple ({}) has a zero argument but a nonzero value", shown.join(",")));
                }
                continue;
            }
            c.set(&args, &val).or_else(|e| err(line, e.to_string()))?;
        } else if let Some((key, rhs)) = content.split_once('=') {
            if cochain.is_some() {
                return err(line, "header line after entries");
            }
            let rhs = rhs.trim();
            match key.trim() {
                "B" | "A" => {
                    let slot = if key.trim() == "B" { &mut b } else { &mut a };
                    if slot.is_some() {
                        return err(line, format!("duplicate key `{}`", key.trim()));
                    }
                    *slot = Some(FinAbGroup::parse(rhs).or_else(|e| err(line, e.to_string()))?);
                }
                "arity" => {
                    if arity.is_some() {
                        return err(line, "duplicate key `arity`");
                    }
                    let n: usize = rhs.parse().or_else(|_| err(line, format!("bad arity `{rhs}`")))?;
                    if n == 0 {
                        return err(line, "arity must be at least 1");
                    }
                    arity = Some(n);
                }
                other => return err(line, format!("unknown key `{other}`")),
            }
        } else {
            return err(line, format!("cannot parse `{content}`"));
        }
    }
    match (cochain, b, a, arity) {
        (Some(c), ..) => Ok(c),
        (None, Some(b), Some(a), Some(n)) => Ok(Cochain::zero(&b, &a, n)),
        (None, b, a, _) => {
            let missing = if b.is_none() {
                "B"
            } else if a.is_none() {
                "A"
            } else {
                "arity"
            };
            err(last_line.max(1), format!("missing header key `{missing}`"))
        }
    }
}

/// Canonical text: header, then nonzero entries in lexicographic order.
pub fn serialize_cochain(c: &Cochain) -> String {
    let mut out = format!("B = {}\nA = {}\narity = {}\n", c.domain(), c.codomain(), c.arity());
    for (idx, v) in c.nonzero_entries() {
        let shown: Vec<String> = idx.iter().map(|&i| c.domain().element_at(i).to_string()).collect();
        let v = c.codomain().element(v.to_vec()).expect("stored residues are reduced");
        out.push_str(&format!("({}) : {}\n", shown.join(","), v));
    }
    out
}
