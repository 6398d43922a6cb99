//! Cayley tables over a dense carrier `0..k`.

use std::fmt;

use crate::error::{Error, Result};

/// An element of a finite carrier, stored as its dense index.
pub type Element = usize;

/// A square `k x k` operation table whose entries all lie in `0..k`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CayleyTable {
    order: usize,
    entries: Vec<Element>,
}

impl CayleyTable {
    /// Builds a table from row-major entries, checking shape and closure.
    pub fn new(order: usize, entries: Vec<Element>) -> Result<Self> {
        if order == 0 {
            return Err(Error::MalformedTable("empty carrier".into()));
        }
        if entries.len() != order * order {
            return Err(Error::MalformedTable(format!(
                "expected {} entries for order {order}, found {}",
                order * order,
                entries.len()
            )));
        }
        if let Some(pos) = entries.iter().position(|&e| e >= order) {
            return Err(Error::MalformedTable(format!(
                "entry ({}, {}) = {} is outside 0..{order}",
                pos / order,
                pos % order,
                entries[pos]
            )));
        }
        Ok(Self { order, entries })
    }

    pub fn from_rows(rows: Vec<Vec<Element>>) -> Result<Self> {
        let order = rows.len();
        if let Some((x, row)) = rows.iter().enumerate().find(|(_, r)| r.len() != order) {
            return Err(Error::MalformedTable(format!(
                "row {x} has {} entries, expected {order}",
                row.len()
            )));
        }
        Self::new(order, rows.into_iter().flatten().collect())
    }

    /// Tabulates `op` over the carrier.
    ///
    /// Panics if `op` leaves the carrier; callers use it only for
    /// operations that are closed by construction.
    pub fn from_fn(order: usize, op: impl Fn(Element, Element) -> Element) -> Self {
        let mut entries = Vec::with_capacity(order * order);
        for x in 0..order {
            for y in 0..order {
                let v = op(x, y);
                assert!(v < order, "operation left the carrier at ({x}, {y})");
                entries.push(v);
            }
        }
        Self { order, entries }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn get(&self, x: Element, y: Element) -> Element {
        self.entries[x * self.order + y]
    }

    pub fn row(&self, x: Element) -> &[Element] {
        &self.entries[x * self.order..(x + 1) * self.order]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[Element]> {
        self.entries.chunks(self.order)
    }

    pub fn to_rows(&self) -> Vec<Vec<Element>> {
        self.rows().map(<[Element]>::to_vec).collect()
    }

    /// Returns a copy with entry `(x, y)` replaced.
    pub fn with_entry(&self, x: Element, y: Element, value: Element) -> Result<Self> {
        let mut entries = self.entries.clone();
        entries[x * self.order + y] = value;
        Self::new(self.order, entries)
    }
}

impl fmt::Debug for CayleyTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "CayleyTable(order {})", self.order)?;
        for row in self.rows() {
            let line: Vec<String> = row.iter().map(ToString::to_string).collect();
            writeln!(f, "  {}", line.join(" "))?;
        }
        Ok(())
    }
}

/// Checks that a unary operation is total and closed on `0..order`.
pub(crate) fn check_unary(map: &[Element], order: usize, what: &str) -> Result<()> {
    if map.len() != order {
        return Err(Error::MalformedTable(format!(
            "{what} has {} entries, expected {order}",
            map.len()
        )));
    }
    if let Some(x) = map.iter().position(|&v| v >= order) {
        return Err(Error::MalformedTable(format!(
            "{what} of {x} is {} which is outside 0..{order}",
            map[x]
        )));
    }
    Ok(())
}

pub(crate) fn check_constant(c: Element, order: usize, what: &str) -> Result<()> {
    if c >= order {
        return Err(Error::MalformedTable(format!(
            "{what} {c} is outside 0..{order}"
        )));
    }
    Ok(())
}
