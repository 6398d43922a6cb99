//! Attaching a Wajsberg (and so MV and BCK) algebra to a binary block code,
//! and embedding codes that cannot be attached into a larger algebra's code.

use std::fmt;

use crate::algebra::{BckAlgebra, FiniteAlgebra, MvAlgebra, WajsbergAlgebra};
use crate::axioms::{AxiomId, AxiomReport, Violation};
use crate::code::{cut_functions, BlockCode, Codeword, Skeleton};
use crate::convert::{mv_to_bck, wajsberg_to_mv};
use crate::enumerate::{enumerate_wajsberg, FactorMultiset, DEFAULT_ORDER_LIMIT};
use crate::error::{Error, Result};
use crate::iso::{all_poset_isomorphisms, poset_isomorphism, transport_structure, OrderIsomorphism};
use crate::poset::{Poset, PosetViolation};
use crate::table::Element;

/// The words of a square code as rows of a matrix, in a fixed order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CodeMatrix {
    rows: Vec<Codeword>,
}

impl CodeMatrix {
    pub fn new(rows: Vec<Codeword>) -> Result<Self> {
        let n = rows.len();
        if let Some(r) = rows.iter().find(|r| r.len() != n) {
            return Err(Error::NonSquare {
                rows: n,
                columns: r.len(),
            });
        }
        Ok(Self { rows })
    }

    /// Rows in the code's descending lexicographic order.
    pub fn canonical(code: &BlockCode) -> Result<Self> {
        Self::new(code.words().to_vec())
    }

    /// Rows placed so that row `i` is the greatest word (in the codeword
    /// order) among those with a one in column `i`. This is the carrier
    /// order of any algebra that generates the code. Falls back to the
    /// canonical order when no such placement exists.
    pub fn aligned(code: &BlockCode) -> Result<Self> {
        let canonical = Self::canonical(code)?;
        let poset = code.poset()?;
        let n = code.len();
        let mut order = Vec::with_capacity(n);
        let mut taken = vec![false; n];
        for col in 0..n {
            let holders: Vec<usize> = (0..n).filter(|&r| code.words()[r].bit(col)).collect();
            match poset.greatest_of(&holders) {
                Some(r) if !taken[r] => {
                    taken[r] = true;
                    order.push(r);
                }
                _ => return Ok(canonical),
            }
        }
        Self::new(order.into_iter().map(|r| code.words()[r].clone()).collect())
    }

    pub fn size(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Codeword] {
        &self.rows
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        self.rows[i].bit(j)
    }

    pub fn skeleton(&self) -> Skeleton {
        Skeleton::from_fn(self.size(), |i, j| self.get(i, j))
    }
}

impl fmt::Display for CodeMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in &self.rows {
            writeln!(f, "{r}")?;
        }
        Ok(())
    }
}

/// Boundary form: first row and last column all ones, last row `0...01`,
/// first column `10...0`, ones on the diagonal. Witnesses are `[row, col]`.
pub fn validate_code_matrix(m: &CodeMatrix) -> AxiomReport {
    let n = m.size();
    let mut violations = Vec::new();
    let last = n.saturating_sub(1);
    let mut check = |axiom: AxiomId, cells: Vec<(usize, usize, bool)>| {
        if let Some(&(i, j, _)) = cells.iter().find(|&&(i, j, want)| m.get(i, j) != want) {
            violations.push(Violation {
                axiom,
                witness: vec![i, j],
            });
        }
    };
    check(AxiomId::MatrixFirstRow, (0..n).map(|j| (0, j, true)).collect());
    check(AxiomId::MatrixLastColumn, (0..n).map(|i| (i, last, true)).collect());
    check(AxiomId::MatrixLastRow, (0..n).map(|j| (last, j, j == last)).collect());
    check(AxiomId::MatrixFirstColumn, (0..n).map(|i| (i, 0, i == 0)).collect());
    check(AxiomId::MatrixDiagonal, (0..n).map(|i| (i, i, true)).collect());
    AxiomReport { violations }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RejectionKind {
    BoundaryViolation,
    NotAPoset,
    TransitivityFailure,
    NoCatalogMatch,
}

impl fmt::Display for RejectionKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RejectionKind::BoundaryViolation => "boundary violation",
            RejectionKind::NotAPoset => "not a partial order",
            RejectionKind::TransitivityFailure => "transitivity failure",
            RejectionKind::NoCatalogMatch => "no catalog match",
        })
    }
}

/// Why a code has no attached algebra. `witness` indexes the rows of
/// `matrix` (for a boundary violation it is the first failing cell).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RejectionReason {
    pub kind: RejectionKind,
    pub witness: Vec<usize>,
    pub matrix: CodeMatrix,
    pub report: Option<AxiomReport>,
}

impl RejectionReason {
    /// Re-evaluates the witness against the matrix.
    pub fn recheck(&self) -> bool {
        let m = &self.matrix;
        let w = &self.witness;
        match self.kind {
            RejectionKind::BoundaryViolation => !validate_code_matrix(m).is_valid(),
            RejectionKind::TransitivityFailure => {
                w.len() == 3 && m.get(w[0], w[1]) && m.get(w[1], w[2]) && !m.get(w[0], w[2])
            }
            RejectionKind::NotAPoset => {
                // either antisymmetry fails or the skeleton disagrees with the code order
                w.len() == 2 && {
                    let (i, j) = (w[0], w[1]);
                    let antisym = i != j && m.get(i, j) && m.get(j, i);
                    let code_leq = m.rows()[j]
                        .bits()
                        .iter()
                        .zip(m.rows()[i].bits())
                        .all(|(&b, &a)| b <= a);
                    antisym || code_leq != m.get(i, j)
                }
            }
            RejectionKind::NoCatalogMatch => {
                let n = m.size();
                match (Poset::from_fn(n, |i, j| m.get(i, j)), enumerate_wajsberg(n)) {
                    (Ok(p), Ok(catalog)) => catalog.iter().all(|e| {
                        matches!(poset_isomorphism(e.algebra.natural_order(), &p), Ok(None))
                    }),
                    _ => false,
                }
            }
        }
    }
}

impl fmt::Display for RejectionReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows = self.matrix.rows();
        let w = &self.witness;
        match self.kind {
            RejectionKind::BoundaryViolation => {
                write!(f, "{}", self.kind)?;
                if let Some(r) = &self.report {
                    write!(f, "\n{r}")?;
                }
                Ok(())
            }
            RejectionKind::TransitivityFailure => write!(
                f,
                "{}: rows {} <= {} <= {} but not {} <= {} ({} <= {} <= {})",
                self.kind, w[0], w[1], w[2], w[0], w[2], rows[w[0]], rows[w[1]], rows[w[2]]
            ),
            RejectionKind::NotAPoset => write!(
                f,
                "{}: rows {} and {} ({} and {})",
                self.kind, w[0], w[1], rows[w[0]], rows[w[1]]
            ),
            RejectionKind::NoCatalogMatch => write!(
                f,
                "{}: the order of the {} words is not a product of chains",
                self.kind,
                rows.len()
            ),
        }
    }
}

/// An algebra whose code is the input code. Element `i` of `algebra`
/// corresponds to `rows[i]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AttachmentResult {
    pub algebra: WajsbergAlgebra,
    pub rows: Vec<Codeword>,
    pub iso: OrderIsomorphism,
    pub catalog_index: usize,
    pub factors: FactorMultiset,
}

fn reject(kind: RejectionKind, witness: Vec<usize>, matrix: &CodeMatrix) -> Error {
    Error::Rejected(Box::new(RejectionReason {
        kind,
        witness,
        matrix: matrix.clone(),
        report: None,
    }))
}

/// Checks the matrix and returns the order its skeleton defines.
fn code_order(code: &BlockCode) -> Result<(CodeMatrix, Poset)> {
    if code.len() != code.length() {
        return Err(Error::NonSquare {
            rows: code.len(),
            columns: code.length(),
        });
    }
    let matrix = CodeMatrix::aligned(code)?;
    let report = validate_code_matrix(&matrix);
    if !report.is_valid() {
        let witness = report.violations[0].witness.clone();
        return Err(Error::Rejected(Box::new(RejectionReason {
            kind: RejectionKind::BoundaryViolation,
            witness,
            matrix,
            report: Some(report),
        })));
    }
    let n = matrix.size();
    let skeleton = match Poset::from_fn(n, |i, j| matrix.get(i, j)) {
        Ok(p) => p,
        Err(PosetViolation::Transitivity { x, y, z }) => {
            return Err(reject(RejectionKind::TransitivityFailure, vec![x, y, z], &matrix))
        }
        Err(PosetViolation::Antisymmetry { x, y }) => {
            return Err(reject(RejectionKind::NotAPoset, vec![x, y], &matrix))
        }
        Err(PosetViolation::Reflexivity { x }) => {
            return Err(reject(RejectionKind::NotAPoset, vec![x, x], &matrix))
        }
    };
    let rows = matrix.rows();
    for i in 0..n {
        for j in 0..n {
            let code_leq = rows[i].precedes(&rows[j])?;
            if code_leq != skeleton.leq(i, j) {
                return Err(reject(RejectionKind::NotAPoset, vec![i, j], &matrix));
            }
        }
    }
    Ok((matrix, skeleton))
}

fn certify(code: &BlockCode, result: AttachmentResult) -> Result<AttachmentResult> {
    let words = cut_functions(&result.algebra);
    assert_eq!(words, result.rows, "attached algebra must regenerate the rows");
    assert_eq!(&BlockCode::new(words)?, code);
    Ok(result)
}

fn attach_matches(code: &BlockCode, all: bool) -> Result<Vec<AttachmentResult>> {
    let (matrix, order) = code_order(code)?;
    let n = matrix.size();
    let catalog = enumerate_wajsberg(n)?;
    let mut out = Vec::new();
    for (index, entry) in catalog.iter().enumerate() {
        let source = entry.algebra.natural_order();
        let isos = if all {
            all_poset_isomorphisms(source, &order)?
        } else {
            poset_isomorphism(source, &order)?.into_iter().collect()
        };
        for iso in isos {
            let algebra = transport_structure(&entry.algebra, &iso)?;
            out.push(certify(
                code,
                AttachmentResult {
                    algebra,
                    rows: matrix.rows().to_vec(),
                    iso,
                    catalog_index: index,
                    factors: entry.factors.clone(),
                },
            )?);
            if !all {
                return Ok(out);
            }
        }
    }
    if out.is_empty() {
        return Err(reject(RejectionKind::NoCatalogMatch, Vec::new(), &matrix));
    }
    Ok(out)
}

/// The first catalog algebra whose order matches the code, moved onto the
/// code's rows.
pub fn attach_wajsberg(code: &BlockCode) -> Result<AttachmentResult> {
    Ok(attach_matches(code, false)?.remove(0))
}

/// Every (catalog algebra, order isomorphism) pair.
pub fn attach_wajsberg_all(code: &BlockCode) -> Result<Vec<AttachmentResult>> {
    attach_matches(code, true)
}

pub fn attach_mv(code: &BlockCode) -> Result<MvAlgebra> {
    wajsberg_to_mv(&attach_wajsberg(code)?.algebra)
}

pub fn attach_bck(code: &BlockCode) -> Result<BckAlgebra> {
    mv_to_bck(&attach_mv(code)?)
}

/// A host algebra whose code, cut down to `columns`, contains the input.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EmbeddingResult {
    pub q: usize,
    pub factors: FactorMultiset,
    pub catalog_index: usize,
    pub host: WajsbergAlgebra,
    pub columns: Vec<Element>,
    pub restriction: BlockCode,
}

/// Column search state; `candidates[t]` marks host rows that still agree
/// with word `t` on the columns chosen so far.
struct ColumnSearch<'a> {
    host_rows: &'a [Codeword],
    words: &'a [Codeword],
    columns: Vec<usize>,
    used: Vec<bool>,
}

impl ColumnSearch<'_> {
    fn run(&mut self, candidates: &[u64]) -> bool {
        let p = self.columns.len();
        if p == self.words[0].len() {
            return true;
        }
        let q = self.host_rows.len();
        for c in 0..q {
            if self.used[c] {
                continue;
            }
            let ones: u64 = (0..q)
                .filter(|&r| self.host_rows[r].bit(c))
                .fold(0, |m, r| m | 1 << r);
            let next: Vec<u64> = self
                .words
                .iter()
                .zip(candidates)
                .map(|(w, &m)| if w.bit(p) { m & ones } else { m & !ones })
                .collect();
            if next.contains(&0) {
                continue;
            }
            self.used[c] = true;
            self.columns.push(c);
            if self.run(&next) {
                return true;
            }
            self.columns.pop();
            self.used[c] = false;
        }
        false
    }
}

fn find_columns(host: &WajsbergAlgebra, code: &BlockCode) -> Option<Vec<usize>> {
    let q = host.size();
    if code.length() > q {
        return None;
    }
    let host_rows = cut_functions(host);
    let mut search = ColumnSearch {
        host_rows: &host_rows,
        words: code.words(),
        columns: Vec::new(),
        used: vec![false; q],
    };
    let all_rows = if q == 64 { u64::MAX } else { (1u64 << q) - 1 };
    search
        .run(&vec![all_rows; code.len()])
        .then_some(search.columns)
}

fn embeddings(code: &BlockCode, max_order: Option<usize>, all: bool) -> Result<Vec<EmbeddingResult>> {
    let start = code.len().max(code.length());
    let max_order = max_order.unwrap_or(start + 4);
    if max_order > DEFAULT_ORDER_LIMIT {
        return Err(Error::OrderTooLarge {
            order: max_order,
            limit: DEFAULT_ORDER_LIMIT,
        });
    }
    let mut out = Vec::new();
    for q in start..=max_order {
        for (index, entry) in enumerate_wajsberg(q)?.into_iter().enumerate() {
            let Some(columns) = find_columns(&entry.algebra, code) else {
                continue;
            };
            let restriction = BlockCode::new(cut_functions(&entry.algebra))?.restrict(&columns)?;
            debug_assert!(restriction.is_superset_of(code));
            out.push(EmbeddingResult {
                q,
                factors: entry.factors,
                catalog_index: index,
                host: entry.algebra,
                columns,
                restriction,
            });
            if !all {
                return Ok(out);
            }
        }
    }
    if out.is_empty() {
        return Err(Error::NoEmbeddingFound(max_order));
    }
    Ok(out)
}

/// Searches orders `max(m, n)..=max_order` (default `max(m, n) + 4`) in
/// catalog order and returns the first host.
pub fn embed_code(code: &BlockCode, max_order: Option<usize>) -> Result<EmbeddingResult> {
    Ok(embeddings(code, max_order, false)?.remove(0))
}

/// The first column choice for every host that admits one.
pub fn embed_code_all(code: &BlockCode, max_order: Option<usize>) -> Result<Vec<EmbeddingResult>> {
    embeddings(code, max_order, true)
}
