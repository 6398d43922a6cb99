//! Translations between the BCK, MV and Wajsberg presentations.
//!
//! All conversions keep the carrier indexing, so tables compare entry by
//! entry and round trips are identities.

use crate::algebra::{Algebra, BckAlgebra, FiniteAlgebra, Kind, MvAlgebra, WajsbergAlgebra};
use crate::error::Result;
use crate::table::CayleyTable;

/// `x' = 1*x`, `x+y = (x'*y)'`.
pub fn bck_to_mv(b: &BckAlgebra) -> Result<MvAlgebra> {
    let k = b.size();
    let one = b.one();
    let complement: Vec<_> = (0..k).map(|x| b.star(one, x)).collect();
    let oplus = CayleyTable::from_fn(k, |x, y| complement[b.star(complement[x], y)]);
    MvAlgebra::new(oplus, complement, b.zero())
}

/// `x*y := x-y = (x'+y)'`.
pub fn mv_to_bck(m: &MvAlgebra) -> Result<BckAlgebra> {
    let (_, ominus) = m.derived_ops();
    BckAlgebra::new(ominus, m.zero(), m.one())
}

/// `x+y = ~x->y`, complement is negation, `0 = ~1`.
pub fn wajsberg_to_mv(w: &WajsbergAlgebra) -> Result<MvAlgebra> {
    let oplus = CayleyTable::from_fn(w.size(), |x, y| w.circ(w.negation(x), y));
    MvAlgebra::new(oplus, w.negations().to_vec(), w.zero())
}

/// `x->y = x'+y`, negation is complement, `1 = 0'`.
pub fn mv_to_wajsberg(m: &MvAlgebra) -> Result<WajsbergAlgebra> {
    let circ = CayleyTable::from_fn(m.size(), |x, y| m.oplus(m.complement(x), y));
    WajsbergAlgebra::new(circ, m.complements().to_vec(), m.one())
}

pub fn bck_to_wajsberg(b: &BckAlgebra) -> Result<WajsbergAlgebra> {
    mv_to_wajsberg(&bck_to_mv(b)?)
}

pub fn wajsberg_to_bck(w: &WajsbergAlgebra) -> Result<BckAlgebra> {
    mv_to_bck(&wajsberg_to_mv(w)?)
}

/// Converts along the shortest path to `target`; same-kind is a clone.
pub fn convert(a: &Algebra, target: Kind) -> Result<Algebra> {
    Ok(match (a, target) {
        (Algebra::Bck(b), Kind::Bck) => Algebra::Bck(b.clone()),
        (Algebra::Bck(b), Kind::Mv) => Algebra::Mv(bck_to_mv(b)?),
        (Algebra::Bck(b), Kind::Wajsberg) => Algebra::Wajsberg(bck_to_wajsberg(b)?),
        (Algebra::Mv(m), Kind::Bck) => Algebra::Bck(mv_to_bck(m)?),
        (Algebra::Mv(m), Kind::Mv) => Algebra::Mv(m.clone()),
        (Algebra::Mv(m), Kind::Wajsberg) => Algebra::Wajsberg(mv_to_wajsberg(m)?),
        (Algebra::Wajsberg(w), Kind::Bck) => Algebra::Bck(wajsberg_to_bck(w)?),
        (Algebra::Wajsberg(w), Kind::Mv) => Algebra::Mv(wajsberg_to_mv(w)?),
        (Algebra::Wajsberg(w), Kind::Wajsberg) => Algebra::Wajsberg(w.clone()),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn two_chain_bck() -> BckAlgebra {
        // 0*0 = 0*1 = 1*1 = 0, 1*0 = 1
        let t = CayleyTable::from_rows(vec![vec![0, 0], vec![1, 0]]).unwrap();
        BckAlgebra::new(t, 0, 1).unwrap()
    }

    #[test]
    fn two_element_bck_gives_boolean_mv() {
        let m = bck_to_mv(&two_chain_bck()).unwrap();
        assert_eq!(m.oplus_table().to_rows(), vec![vec![0, 1], vec![1, 1]]);
        assert_eq!(m.complements(), &[1, 0]);
        assert_eq!(mv_to_bck(&m).unwrap(), two_chain_bck());
    }

    #[test]
    fn boolean_mv_gives_classical_implication() {
        let m = bck_to_mv(&two_chain_bck()).unwrap();
        let w = mv_to_wajsberg(&m).unwrap();
        assert_eq!(w.table().to_rows(), vec![vec![1, 1], vec![0, 1]]);
        assert_eq!(wajsberg_to_mv(&w).unwrap(), m);
    }

    #[test]
    fn convert_dispatches_every_pair() {
        let b: Algebra = two_chain_bck().into();
        for target in [Kind::Bck, Kind::Mv, Kind::Wajsberg] {
            let c = convert(&b, target).unwrap();
            assert_eq!(c.kind(), target);
            assert_eq!(convert(&c, Kind::Bck).unwrap(), b);
        }
    }
}
