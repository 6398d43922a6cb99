//! Exhaustive axiom checking for BCK, MV and Wajsberg Cayley tables.
//!
//! Every law is scanned over all tuples of the carrier in lexicographic
//! order; the first failing tuple becomes the witness. All failing laws are
//! reported, not just the first one.

use std::fmt;

use crate::error::Result;
use crate::table::{check_constant, check_unary, CayleyTable, Element};

/// Identifies one checked law.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum AxiomId {
    /// `((x*y)*(x*z))*(z*y) = 0`
    Bck1,
    /// `(x*(x*y))*y = 0`
    Bck2,
    /// `x*x = 0`
    Bck3,
    /// `x*y = 0` and `y*x = 0` imply `x = y`
    Bck4,
    /// `0*x = 0`
    Bck5,
    /// `x*1 = 0`
    BckBounded,
    /// `y*(y*x) = x*(x*y)`
    BckCommutative,
    MvAssociative,
    MvCommutative,
    /// `x+0 = x`
    MvIdentity,
    /// `x'' = x`
    MvInvolution,
    /// `x+0' = 0'`
    MvAbsorbing,
    /// `(x'+y)'+y = (y'+x)'+x`
    MvLukasiewicz,
    /// `x+x' = 1`, a consequence of the MV laws
    MvComplementSum,
    /// `1->x = x`
    WajsbergUnit,
    /// `(x->y)->((y->z)->(x->z)) = 1`
    WajsbergTransitivity,
    /// `(x->y)->y = (y->x)->x`
    WajsbergJoin,
    /// `(~x->~y)->(y->x) = 1`
    WajsbergContraposition,
    /// `~~x = x`, derivable from the four Wajsberg laws
    WajsbergInvolution,
    /// Code matrix: first row is all ones.
    MatrixFirstRow,
    /// Code matrix: last column is all ones.
    MatrixLastColumn,
    /// Code matrix: last row is `0...01`.
    MatrixLastRow,
    /// Code matrix: first column is `10...0`.
    MatrixFirstColumn,
    /// Code matrix: every diagonal entry is one.
    MatrixDiagonal,
}

impl AxiomId {
    pub const BCK: [AxiomId; 7] = [
        AxiomId::Bck1,
        AxiomId::Bck2,
        AxiomId::Bck3,
        AxiomId::Bck4,
        AxiomId::Bck5,
        AxiomId::BckBounded,
        AxiomId::BckCommutative,
    ];

    pub const MV: [AxiomId; 7] = [
        AxiomId::MvAssociative,
        AxiomId::MvCommutative,
        AxiomId::MvIdentity,
        AxiomId::MvInvolution,
        AxiomId::MvAbsorbing,
        AxiomId::MvLukasiewicz,
        AxiomId::MvComplementSum,
    ];

    pub const WAJSBERG: [AxiomId; 5] = [
        AxiomId::WajsbergUnit,
        AxiomId::WajsbergTransitivity,
        AxiomId::WajsbergJoin,
        AxiomId::WajsbergContraposition,
        AxiomId::WajsbergInvolution,
    ];

    /// Number of variables the law quantifies over.
    pub fn arity(self) -> usize {
        use AxiomId::*;
        match self {
            Bck1 | MvAssociative | WajsbergTransitivity => 3,
            Bck2 | Bck4 | BckCommutative | MvCommutative | MvLukasiewicz | WajsbergJoin
            | WajsbergContraposition => 2,
            Bck3 | Bck5 | BckBounded | MvIdentity | MvInvolution | MvAbsorbing
            | MvComplementSum | WajsbergUnit | WajsbergInvolution => 1,
            MatrixFirstRow | MatrixLastColumn | MatrixLastRow | MatrixFirstColumn
            | MatrixDiagonal => 2,
        }
    }

    pub fn code(self) -> &'static str {
        use AxiomId::*;
        match self {
            Bck1 => "bck-1",
            Bck2 => "bck-2",
            Bck3 => "bck-3",
            Bck4 => "bck-4",
            Bck5 => "bck-5",
            BckBounded => "bck-bounded",
            BckCommutative => "bck-commutative",
            MvAssociative => "mv-associative",
            MvCommutative => "mv-commutative",
            MvIdentity => "mv-identity",
            MvInvolution => "mv-i",
            MvAbsorbing => "mv-ii",
            MvLukasiewicz => "mv-iii",
            MvComplementSum => "mv-complement-sum",
            WajsbergUnit => "w-i",
            WajsbergTransitivity => "w-ii",
            WajsbergJoin => "w-iii",
            WajsbergContraposition => "w-iv",
            WajsbergInvolution => "w-involution",
            MatrixFirstRow => "matrix-first-row",
            MatrixLastColumn => "matrix-last-column",
            MatrixLastRow => "matrix-last-row",
            MatrixFirstColumn => "matrix-first-column",
            MatrixDiagonal => "matrix-diagonal",
        }
    }

    pub fn law(self) -> &'static str {
        use AxiomId::*;
        match self {
            Bck1 => "((x*y)*(x*z))*(z*y) = 0",
            Bck2 => "(x*(x*y))*y = 0",
            Bck3 => "x*x = 0",
            Bck4 => "x*y = 0 and y*x = 0 imply x = y",
            Bck5 => "0*x = 0",
            BckBounded => "x*1 = 0",
            BckCommutative => "y*(y*x) = x*(x*y)",
            MvAssociative => "(x+y)+z = x+(y+z)",
            MvCommutative => "x+y = y+x",
            MvIdentity => "x+0 = x",
            MvInvolution => "x'' = x",
            MvAbsorbing => "x+0' = 0'",
            MvLukasiewicz => "(x'+y)'+y = (y'+x)'+x",
            MvComplementSum => "x+x' = 1",
            WajsbergUnit => "1->x = x",
            WajsbergTransitivity => "(x->y)->((y->z)->(x->z)) = 1",
            WajsbergJoin => "(x->y)->y = (y->x)->x",
            WajsbergContraposition => "(~x->~y)->(y->x) = 1",
            WajsbergInvolution => "~~x = x",
            MatrixFirstRow => "first row is 11...1",
            MatrixLastColumn => "last column is 11...1",
            MatrixLastRow => "last row is 0...01",
            MatrixFirstColumn => "first column is 10...0",
            MatrixDiagonal => "diagonal entries are 1",
        }
    }
}

impl fmt::Display for AxiomId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.code())
    }
}

/// A failed law and the least tuple at which it fails.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub axiom: AxiomId,
    pub witness: Vec<Element>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct AxiomReport {
    pub violations: Vec<Violation>,
}

impl AxiomReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn violates(&self, axiom: AxiomId) -> bool {
        self.violations.iter().any(|v| v.axiom == axiom)
    }

    pub fn witness(&self, axiom: AxiomId) -> Option<&[Element]> {
        self.violations
            .iter()
            .find(|v| v.axiom == axiom)
            .map(|v| v.witness.as_slice())
    }
}

impl fmt::Display for AxiomReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_valid() {
            return f.write_str("valid");
        }
        for (i, v) in self.violations.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            let w: Vec<String> = v.witness.iter().map(ToString::to_string).collect();
            write!(f, "{} at ({}): {}", v.axiom, w.join(", "), v.axiom.law())?;
        }
        Ok(())
    }
}

/// The operations of one presentation, borrowed for checking.
#[derive(Debug, Clone, Copy)]
pub enum Signature<'a> {
    Bck {
        table: &'a CayleyTable,
        zero: Element,
        one: Element,
    },
    Mv {
        oplus: &'a CayleyTable,
        complement: &'a [Element],
        zero: Element,
    },
    Wajsberg {
        circ: &'a CayleyTable,
        negation: &'a [Element],
        one: Element,
    },
}

impl Signature<'_> {
    pub fn order(&self) -> usize {
        match self {
            Signature::Bck { table, .. } => table.order(),
            Signature::Mv { oplus, .. } => oplus.order(),
            Signature::Wajsberg { circ, .. } => circ.order(),
        }
    }

    pub fn axioms(&self) -> &'static [AxiomId] {
        match self {
            Signature::Bck { .. } => &AxiomId::BCK,
            Signature::Mv { .. } => &AxiomId::MV,
            Signature::Wajsberg { .. } => &AxiomId::WAJSBERG,
        }
    }

    fn check_shape(&self) -> Result<()> {
        let k = self.order();
        match *self {
            Signature::Bck { zero, one, .. } => {
                check_constant(zero, k, "zero")?;
                check_constant(one, k, "one")
            }
            Signature::Mv {
                complement, zero, ..
            } => {
                check_unary(complement, k, "complement")?;
                check_constant(zero, k, "zero")
            }
            Signature::Wajsberg { negation, one, .. } => {
                check_unary(negation, k, "negation")?;
                check_constant(one, k, "one")
            }
        }
    }

    /// Evaluates `axiom` at `witness`. Returns `None` when the law does not
    /// belong to this presentation or the witness has the wrong arity.
    pub fn holds(&self, axiom: AxiomId, witness: &[Element]) -> Option<bool> {
        if witness.len() != axiom.arity() || witness.iter().any(|&v| v >= self.order()) {
            return None;
        }
        let a = |i: usize| witness.get(i).copied().unwrap_or(0);
        let (x, y, z) = (a(0), a(1), a(2));
        use AxiomId::*;
        let ok = match (*self, axiom) {
            (Signature::Bck { table, zero, one }, _) => {
                let s = |p, q| table.get(p, q);
                match axiom {
                    Bck1 => s(s(s(x, y), s(x, z)), s(z, y)) == zero,
                    Bck2 => s(s(x, s(x, y)), y) == zero,
                    Bck3 => s(x, x) == zero,
                    Bck4 => !(s(x, y) == zero && s(y, x) == zero) || x == y,
                    Bck5 => s(zero, x) == zero,
                    BckBounded => s(x, one) == zero,
                    BckCommutative => s(y, s(y, x)) == s(x, s(x, y)),
                    _ => return None,
                }
            }
            (
                Signature::Mv {
                    oplus,
                    complement,
                    zero,
                },
                _,
            ) => {
                let p = |u, v| oplus.get(u, v);
                let c = |u: Element| complement[u];
                let one = c(zero);
                match axiom {
                    MvAssociative => p(p(x, y), z) == p(x, p(y, z)),
                    MvCommutative => p(x, y) == p(y, x),
                    MvIdentity => p(x, zero) == x,
                    MvInvolution => c(c(x)) == x,
                    MvAbsorbing => p(x, one) == one,
                    MvLukasiewicz => p(c(p(c(x), y)), y) == p(c(p(c(y), x)), x),
                    MvComplementSum => p(x, c(x)) == one,
                    _ => return None,
                }
            }
            (
                Signature::Wajsberg {
                    circ,
                    negation,
                    one,
                },
                _,
            ) => {
                let i = |u, v| circ.get(u, v);
                let n = |u: Element| negation[u];
                match axiom {
                    WajsbergUnit => i(one, x) == x,
                    WajsbergTransitivity => i(i(x, y), i(i(y, z), i(x, z))) == one,
                    WajsbergJoin => i(i(x, y), y) == i(i(y, x), x),
                    WajsbergContraposition => i(i(n(x), n(y)), i(y, x)) == one,
                    WajsbergInvolution => n(n(x)) == x,
                    _ => return None,
                }
            }
        };
        Some(ok)
    }

    /// Scans every law of this presentation.
    pub fn verify(&self) -> Result<AxiomReport> {
        self.check_shape()?;
        let k = self.order();
        let mut report = AxiomReport::default();
        for &axiom in self.axioms() {
            if let Some(witness) =
                first_tuple(k, axiom.arity(), |t| self.holds(axiom, t) == Some(false))
            {
                report.violations.push(Violation { axiom, witness });
            }
        }
        Ok(report)
    }

    /// Like [`Signature::verify`] but stops at the first failing law.
    pub fn satisfies_all(&self) -> Result<bool> {
        self.check_shape()?;
        let k = self.order();
        Ok(self.axioms().iter().all(|&axiom| {
            first_tuple(k, axiom.arity(), |t| self.holds(axiom, t) == Some(false)).is_none()
        }))
    }
}

/// First tuple in `0..k`^arity (lexicographic) satisfying `pred`.
pub(crate) fn first_tuple(
    k: usize,
    arity: usize,
    mut pred: impl FnMut(&[Element]) -> bool,
) -> Option<Vec<Element>> {
    if k == 0 {
        return None;
    }
    let mut t = vec![0; arity];
    loop {
        if pred(&t) {
            return Some(t);
        }
        // odometer increment, last position fastest
        let mut i = arity;
        loop {
            if i == 0 {
                return None;
            }
            i -= 1;
            t[i] += 1;
            if t[i] < k {
                break;
            }
            t[i] = 0;
        }
    }
}

pub fn verify_bck(table: &CayleyTable, zero: Element, one: Element) -> Result<AxiomReport> {
    Signature::Bck { table, zero, one }.verify()
}

pub fn verify_mv(oplus: &CayleyTable, complement: &[Element], zero: Element) -> Result<AxiomReport> {
    Signature::Mv {
        oplus,
        complement,
        zero,
    }
    .verify()
}

pub fn verify_wajsberg(
    circ: &CayleyTable,
    negation: &[Element],
    one: Element,
) -> Result<AxiomReport> {
    Signature::Wajsberg {
        circ,
        negation,
        one,
    }
    .verify()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;

    #[test]
    fn tuples_are_lexicographic() {
        let mut seen = Vec::new();
        first_tuple(2, 2, |t| {
            seen.push(t.to_vec());
            false
        });
        assert_eq!(seen, vec![vec![0, 0], vec![0, 1], vec![1, 0], vec![1, 1]]);
        assert_eq!(first_tuple(3, 0, |_| true), Some(vec![]));
    }

    #[test]
    fn singleton_bck_is_valid() {
        let t = CayleyTable::from_rows(vec![vec![0]]).unwrap();
        assert!(verify_bck(&t, 0, 0).unwrap().is_valid());
    }

    #[test]
    fn boolean_mv_is_valid() {
        let t = CayleyTable::from_rows(vec![vec![0, 1], vec![1, 1]]).unwrap();
        assert!(verify_mv(&t, &[1, 0], 0).unwrap().is_valid());
    }

    #[test]
    fn classical_implication_is_wajsberg() {
        let t = CayleyTable::from_rows(vec![vec![1, 1], vec![0, 1]]).unwrap();
        assert!(verify_wajsberg(&t, &[1, 0], 1).unwrap().is_valid());
    }

    #[test]
    fn constants_out_of_range_are_malformed() {
        let t = CayleyTable::from_rows(vec![vec![0]]).unwrap();
        assert!(matches!(verify_bck(&t, 0, 3), Err(Error::MalformedTable(_))));
        assert!(matches!(verify_mv(&t, &[0, 0], 0), Err(Error::MalformedTable(_))));
        assert!(matches!(verify_wajsberg(&t, &[2], 0), Err(Error::MalformedTable(_))));
    }

    #[test]
    fn holds_rejects_foreign_axioms_and_bad_arity() {
        let t = CayleyTable::from_rows(vec![vec![0]]).unwrap();
        let sig = Signature::Bck {
            table: &t,
            zero: 0,
            one: 0,
        };
        assert_eq!(sig.holds(AxiomId::MvIdentity, &[0]), None);
        assert_eq!(sig.holds(AxiomId::Bck1, &[0]), None);
        assert_eq!(sig.holds(AxiomId::Bck1, &[0, 0, 0]), Some(true));
    }

    #[test]
    fn every_law_reported_with_least_witness() {
        // x*y = x for all x, y: breaks x*x = 0 except at 0
        let t = CayleyTable::from_fn(3, |x, _| x);
        let r = verify_bck(&t, 0, 2).unwrap();
        assert_eq!(r.witness(AxiomId::Bck3), Some(&[1][..]));
        assert!(r.violates(AxiomId::BckBounded));
        assert!(!r.violates(AxiomId::Bck5));
    }
}
