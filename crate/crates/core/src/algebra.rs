//! Verified BCK, MV and Wajsberg algebras on a dense carrier.
//!
//! Every constructor runs the full axiom scan and refuses tables that fail
//! it, so a value of these types is always a genuine algebra and its natural
//! order is always a bounded partial order with `zero` at the bottom and
//! `one` at the top.

use std::fmt;

use crate::axioms::{AxiomReport, Signature};
use crate::error::{Error, Result};
use crate::poset::Poset;
use crate::table::{CayleyTable, Element};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Kind {
    Bck,
    Mv,
    Wajsberg,
}

impl Kind {
    pub fn name(self) -> &'static str {
        match self {
            Kind::Bck => "bck",
            Kind::Mv => "mv",
            Kind::Wajsberg => "wajsberg",
        }
    }
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for Kind {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "bck" => Ok(Kind::Bck),
            "mv" => Ok(Kind::Mv),
            "wajsberg" => Ok(Kind::Wajsberg),
            other => Err(format!("unknown algebra kind `{other}`")),
        }
    }
}

/// Common view of the three presentations.
pub trait FiniteAlgebra {
    fn kind(&self) -> Kind;
    fn size(&self) -> usize;
    fn zero(&self) -> Element;
    fn one(&self) -> Element;

    /// `x <= y` evaluated straight from the operation: `x*y = 0` (BCK),
    /// `x'+y = 1` (MV) or `x->y = 1` (Wajsberg).
    fn leq_by_operation(&self, x: Element, y: Element) -> bool;

    fn natural_order(&self) -> &Poset;

    fn elements(&self) -> std::ops::Range<Element> {
        0..self.size()
    }
}

fn require_valid(report: AxiomReport) -> Result<()> {
    if report.is_valid() {
        Ok(())
    } else {
        Err(Error::AxiomsViolated(report))
    }
}

fn order_from<A: FiniteAlgebra + ?Sized>(a: &A) -> Result<Poset> {
    Poset::from_fn(a.size(), |x, y| a.leq_by_operation(x, y)).map_err(Error::NotAPoset)
}

/// A bounded commutative BCK-algebra `(X, *, 0, 1)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BckAlgebra {
    table: CayleyTable,
    zero: Element,
    one: Element,
    order: Poset,
}

impl BckAlgebra {
    pub fn new(table: CayleyTable, zero: Element, one: Element) -> Result<Self> {
        require_valid(Signature::Bck { table: &table, zero, one }.verify()?)?;
        let mut alg = Self {
            table,
            zero,
            one,
            order: Poset::chain(1),
        };
        alg.order = order_from(&alg)?;
        Ok(alg)
    }

    pub fn table(&self) -> &CayleyTable {
        &self.table
    }

    pub fn star(&self, x: Element, y: Element) -> Element {
        self.table.get(x, y)
    }

    /// `x ^ y = y*(y*x)`
    pub fn meet(&self, x: Element, y: Element) -> Element {
        self.star(y, self.star(y, x))
    }

    pub fn signature(&self) -> Signature<'_> {
        Signature::Bck {
            table: &self.table,
            zero: self.zero,
            one: self.one,
        }
    }
}

impl FiniteAlgebra for BckAlgebra {
    fn kind(&self) -> Kind {
        Kind::Bck
    }
    fn size(&self) -> usize {
        self.table.order()
    }
    fn zero(&self) -> Element {
        self.zero
    }
    fn one(&self) -> Element {
        self.one
    }
    fn leq_by_operation(&self, x: Element, y: Element) -> bool {
        self.star(x, y) == self.zero
    }
    fn natural_order(&self) -> &Poset {
        &self.order
    }
}

/// An MV-algebra `(X, +, ', 0)` with `1 = 0'`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MvAlgebra {
    oplus: CayleyTable,
    complement: Vec<Element>,
    zero: Element,
    order: Poset,
}

impl MvAlgebra {
    pub fn new(oplus: CayleyTable, complement: Vec<Element>, zero: Element) -> Result<Self> {
        require_valid(
            Signature::Mv {
                oplus: &oplus,
                complement: &complement,
                zero,
            }
            .verify()?,
        )?;
        let mut alg = Self {
            oplus,
            complement,
            zero,
            order: Poset::chain(1),
        };
        alg.order = order_from(&alg)?;
        Ok(alg)
    }

    pub fn oplus_table(&self) -> &CayleyTable {
        &self.oplus
    }

    pub fn complements(&self) -> &[Element] {
        &self.complement
    }

    pub fn oplus(&self, x: Element, y: Element) -> Element {
        self.oplus.get(x, y)
    }

    pub fn complement(&self, x: Element) -> Element {
        self.complement[x]
    }

    /// `x . y = (x' + y')'`
    pub fn odot(&self, x: Element, y: Element) -> Element {
        self.complement(self.oplus(self.complement(x), self.complement(y)))
    }

    /// `x - y = (x' + y)'`
    pub fn ominus(&self, x: Element, y: Element) -> Element {
        self.complement(self.oplus(self.complement(x), y))
    }

    /// Tabulated `(odot, ominus)`.
    pub fn derived_ops(&self) -> (CayleyTable, CayleyTable) {
        let k = self.size();
        (
            CayleyTable::from_fn(k, |x, y| self.odot(x, y)),
            CayleyTable::from_fn(k, |x, y| self.ominus(x, y)),
        )
    }

    /// Evaluates the four equivalent characterisations of `x <= y`:
    /// `x'+y = 1`, `x.y' = 0`, `y = x+(y-x)`, and `x+z = y` for some `z`.
    /// They must agree on any MV-algebra.
    pub fn leq_equivalences(&self, x: Element, y: Element) -> Result<bool> {
        let values = [
            self.oplus(self.complement(x), y) == self.one(),
            self.odot(x, self.complement(y)) == self.zero,
            y == self.oplus(x, self.ominus(y, x)),
            self.elements().any(|z| self.oplus(x, z) == y),
        ];
        if values.iter().all(|&v| v == values[0]) {
            Ok(values[0])
        } else {
            Err(Error::EquivalenceBroken { x, y, values })
        }
    }

    pub fn signature(&self) -> Signature<'_> {
        Signature::Mv {
            oplus: &self.oplus,
            complement: &self.complement,
            zero: self.zero,
        }
    }
}

impl FiniteAlgebra for MvAlgebra {
    fn kind(&self) -> Kind {
        Kind::Mv
    }
    fn size(&self) -> usize {
        self.oplus.order()
    }
    fn zero(&self) -> Element {
        self.zero
    }
    fn one(&self) -> Element {
        self.complement[self.zero]
    }
    fn leq_by_operation(&self, x: Element, y: Element) -> bool {
        self.oplus(self.complement(x), y) == self.one()
    }
    fn natural_order(&self) -> &Poset {
        &self.order
    }
}

/// A Wajsberg algebra `(W, ->, ~, 1)` with `0 = ~1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WajsbergAlgebra {
    circ: CayleyTable,
    negation: Vec<Element>,
    one: Element,
    order: Poset,
}

impl WajsbergAlgebra {
    pub fn new(circ: CayleyTable, negation: Vec<Element>, one: Element) -> Result<Self> {
        require_valid(
            Signature::Wajsberg {
                circ: &circ,
                negation: &negation,
                one,
            }
            .verify()?,
        )?;
        let mut alg = Self {
            circ,
            negation,
            one,
            order: Poset::chain(1),
        };
        alg.order = order_from(&alg)?;
        Ok(alg)
    }

    pub fn table(&self) -> &CayleyTable {
        &self.circ
    }

    pub fn negations(&self) -> &[Element] {
        &self.negation
    }

    pub fn circ(&self, x: Element, y: Element) -> Element {
        self.circ.get(x, y)
    }

    pub fn negation(&self, x: Element) -> Element {
        self.negation[x]
    }

    pub fn signature(&self) -> Signature<'_> {
        Signature::Wajsberg {
            circ: &self.circ,
            negation: &self.negation,
            one: self.one,
        }
    }
}

impl FiniteAlgebra for WajsbergAlgebra {
    fn kind(&self) -> Kind {
        Kind::Wajsberg
    }
    fn size(&self) -> usize {
        self.circ.order()
    }
    fn zero(&self) -> Element {
        self.negation[self.one]
    }
    fn one(&self) -> Element {
        self.one
    }
    fn leq_by_operation(&self, x: Element, y: Element) -> bool {
        self.circ(x, y) == self.one
    }
    fn natural_order(&self) -> &Poset {
        &self.order
    }
}

/// Any of the three presentations, as read from a file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Algebra {
    Bck(BckAlgebra),
    Mv(MvAlgebra),
    Wajsberg(WajsbergAlgebra),
}

impl Algebra {
    fn inner(&self) -> &dyn FiniteAlgebra {
        match self {
            Algebra::Bck(a) => a,
            Algebra::Mv(a) => a,
            Algebra::Wajsberg(a) => a,
        }
    }
}

impl FiniteAlgebra for Algebra {
    fn kind(&self) -> Kind {
        self.inner().kind()
    }
    fn size(&self) -> usize {
        self.inner().size()
    }
    fn zero(&self) -> Element {
        self.inner().zero()
    }
    fn one(&self) -> Element {
        self.inner().one()
    }
    fn leq_by_operation(&self, x: Element, y: Element) -> bool {
        self.inner().leq_by_operation(x, y)
    }
    fn natural_order(&self) -> &Poset {
        self.inner().natural_order()
    }
}

impl From<BckAlgebra> for Algebra {
    fn from(a: BckAlgebra) -> Self {
        Algebra::Bck(a)
    }
}

impl From<MvAlgebra> for Algebra {
    fn from(a: MvAlgebra) -> Self {
        Algebra::Mv(a)
    }
}

impl From<WajsbergAlgebra> for Algebra {
    fn from(a: WajsbergAlgebra) -> Self {
        Algebra::Wajsberg(a)
    }
}
