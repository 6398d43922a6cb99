//! Text formats for algebras and codes.
//!
//! Algebra files:
//!
//! ```text
//! kind: wajsberg
//! order: 2
//! one: 1
//! unary: 1 0
//! 1 1
//! 0 1
//! ```
//!
//! The constants line is `zero: i one: j` for `bck`, `zero: i` for `mv` and
//! `one: j` for `wajsberg`; the `unary:` line (complement or negation) is
//! present for `mv` and `wajsberg` only. Lines starting with `#` and blank
//! lines are skipped. Several algebras in one file are separated by `---`.

use crate::algebra::{Algebra, BckAlgebra, FiniteAlgebra, Kind, MvAlgebra, WajsbergAlgebra};
use crate::code::{BlockCode, Codeword};
use crate::error::{Error, Result};
use crate::table::{CayleyTable, Element};

/// The unverified content of an algebra file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RawAlgebra {
    pub kind: Kind,
    pub zero: Option<Element>,
    pub one: Option<Element>,
    pub unary: Option<Vec<Element>>,
    pub table: CayleyTable,
}

impl RawAlgebra {
    /// Runs the axiom check and builds the typed algebra.
    pub fn build(self) -> Result<Algebra> {
        let missing = |what: &str| Error::MalformedTable(format!("missing {what}"));
        Ok(match self.kind {
            Kind::Bck => BckAlgebra::new(
                self.table,
                self.zero.ok_or_else(|| missing("zero"))?,
                self.one.ok_or_else(|| missing("one"))?,
            )?
            .into(),
            Kind::Mv => MvAlgebra::new(
                self.table,
                self.unary.ok_or_else(|| missing("unary"))?,
                self.zero.ok_or_else(|| missing("zero"))?,
            )?
            .into(),
            Kind::Wajsberg => WajsbergAlgebra::new(
                self.table,
                self.unary.ok_or_else(|| missing("unary"))?,
                self.one.ok_or_else(|| missing("one"))?,
            )?
            .into(),
        })
    }
}

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn parse_index(line: usize, tok: &str) -> Result<Element> {
    tok.parse()
        .map_err(|_| Error::parse(line, format!("expected an element index, found `{tok}`")))
}

/// Splits `key: rest`, requiring the given key.
fn keyed<'a>(line: usize, text: &'a str, key: &str) -> Result<&'a str> {
    let (k, rest) = text
        .split_once(':')
        .ok_or_else(|| Error::parse(line, format!("expected `{key}:`, found `{text}`")))?;
    if k.trim() != key {
        return Err(Error::parse(line, format!("expected key `{key}`, found `{}`", k.trim())));
    }
    Ok(rest.trim())
}

fn parse_constants(line: usize, text: &str, kind: Kind) -> Result<(Option<Element>, Option<Element>)> {
    let toks: Vec<&str> = text.split_whitespace().collect();
    let expected: &[&str] = match kind {
        Kind::Bck => &["zero:", "one:"],
        Kind::Mv => &["zero:"],
        Kind::Wajsberg => &["one:"],
    };
    if toks.len() != 2 * expected.len() {
        return Err(Error::parse(
            line,
            format!("constants for {kind} must read `{}`", expected.join(" <i> ") + " <i>"),
        ));
    }
    let mut zero = None;
    let mut one = None;
    for (pair, key) in toks.chunks(2).zip(expected) {
        if pair[0] != *key {
            return Err(Error::parse(line, format!("expected `{key}`, found `{}`", pair[0])));
        }
        let v = parse_index(line, pair[1])?;
        if *key == "zero:" {
            zero = Some(v);
        } else {
            one = Some(v);
        }
    }
    Ok((zero, one))
}

fn parse_block(lines: &[(usize, &str)], end_line: usize) -> Result<RawAlgebra> {
    let mut it = lines.iter().copied();
    let mut next = |what: &str| {
        it.next()
            .ok_or_else(|| Error::parse(end_line, format!("unexpected end of input, expected {what}")))
    };

    let (ln, text) = next("`kind:`")?;
    let kind: Kind = keyed(ln, text, "kind")?
        .parse()
        .map_err(|e: String| Error::parse(ln, e))?;

    let (ln, text) = next("`order:`")?;
    let order_text = keyed(ln, text, "order")?;
    let order: usize = order_text
        .parse()
        .map_err(|_| Error::parse(ln, format!("invalid order `{order_text}`")))?;
    if order == 0 {
        return Err(Error::parse(ln, "order must be positive"));
    }

    let (ln, text) = next("constants")?;
    let (zero, one) = parse_constants(ln, text, kind)?;

    let unary = if kind == Kind::Bck {
        None
    } else {
        let (ln, text) = next("`unary:`")?;
        let row = keyed(ln, text, "unary")?
            .split_whitespace()
            .map(|t| parse_index(ln, t))
            .collect::<Result<Vec<_>>>()?;
        if row.len() != order {
            return Err(Error::parse(ln, format!("unary row has {} entries, expected {order}", row.len())));
        }
        Some(row)
    };

    let mut rows = Vec::with_capacity(order);
    for r in 0..order {
        let (ln, text) = next(&format!("table row {r}"))?;
        if text.contains(':') {
            return Err(Error::parse(ln, format!("unexpected key in `{text}`")));
        }
        let row = text
            .split_whitespace()
            .map(|t| parse_index(ln, t))
            .collect::<Result<Vec<_>>>()?;
        if row.len() != order {
            return Err(Error::parse(ln, format!("row has {} entries, expected {order}", row.len())));
        }
        rows.push(row);
    }
    if let Some((ln, text)) = it.next() {
        return Err(Error::parse(ln, format!("unexpected trailing line `{text}`")));
    }

    Ok(RawAlgebra {
        kind,
        zero,
        one,
        unary,
        table: CayleyTable::from_rows(rows)?,
    })
}

/// Parses every `---`-separated block without checking axioms.
pub fn parse_raw_algebras(text: &str) -> Result<Vec<RawAlgebra>> {
    let end_line = text.lines().count().max(1);
    let mut blocks: Vec<Vec<(usize, &str)>> = vec![Vec::new()];
    for (ln, line) in content_lines(text) {
        if line == "---" {
            blocks.push(Vec::new());
        } else {
            blocks.last_mut().expect("nonempty").push((ln, line));
        }
    }
    blocks.iter().map(|b| parse_block(b, end_line)).collect()
}

/// Parses exactly one algebra, without checking axioms.
pub fn parse_raw_algebra(text: &str) -> Result<RawAlgebra> {
    let mut all = parse_raw_algebras(text)?;
    if all.len() != 1 {
        return Err(Error::parse(1, format!("expected one algebra, found {}", all.len())));
    }
    Ok(all.remove(0))
}

/// Parses and verifies one algebra.
pub fn parse_algebra(text: &str) -> Result<Algebra> {
    parse_raw_algebra(text)?.build()
}

fn write_row(out: &mut String, row: &[Element]) {
    let cells: Vec<String> = row.iter().map(ToString::to_string).collect();
    out.push_str(&cells.join(" "));
    out.push('\n');
}

pub fn render_algebra(a: &Algebra) -> String {
    let mut out = format!("kind: {}\norder: {}\n", a.kind(), a.size());
    let (table, unary) = match a {
        Algebra::Bck(b) => {
            out.push_str(&format!("zero: {} one: {}\n", b.zero(), b.one()));
            (b.table(), None)
        }
        Algebra::Mv(m) => {
            out.push_str(&format!("zero: {}\n", m.zero()));
            (m.oplus_table(), Some(m.complements()))
        }
        Algebra::Wajsberg(w) => {
            out.push_str(&format!("one: {}\n", w.one()));
            (w.table(), Some(w.negations()))
        }
    };
    if let Some(u) = unary {
        out.push_str("unary: ");
        write_row(&mut out, u);
    }
    for row in table.rows() {
        write_row(&mut out, row);
    }
    out
}

pub fn render_algebras<'a>(algebras: impl IntoIterator<Item = &'a Algebra>) -> String {
    algebras
        .into_iter()
        .map(render_algebra)
        .collect::<Vec<_>>()
        .join("---\n")
}

/// One bitstring per line; `#` comments and blank lines skipped.
pub fn parse_code(text: &str) -> Result<BlockCode> {
    let words = content_lines(text)
        .map(|(ln, l)| {
            l.parse::<Codeword>().map_err(|e| match e {
                Error::MalformedCode(m) => Error::parse(ln, m),
                other => other,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    BlockCode::new(words)
}

pub fn render_code(code: &BlockCode) -> String {
    code.to_string()
}
