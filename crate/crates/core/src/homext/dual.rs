//! Vector-space duality `Fun(C, Vect) → Fun(C^op, Vect)^op`.

use alloc::sync::Arc;
use alloc::vec::Vec;

use super::hom::{is_projective, SplitTest};
use crate::error::Error;
use crate::exact::Mat;
use crate::fincat::FinCat;
use crate::rep::{NatMap, Rep, Ses};

/// `F*` over `op`, which must be the opposite of `F`'s category.
pub fn dual_over(f: &Rep, op: &Arc<FinCat>) -> Rep {
    let action = f.actions().iter().map(Mat::transpose).collect();
    Rep::new_unchecked(op.clone(), f.field(), f.dims().to_vec(), action)
}

pub fn dual(f: &Rep) -> Rep {
    dual_over(f, &Arc::new(f.cat().opposite()))
}

/// `φ*: G* → F*` for `φ: F → G`.
pub fn dual_map_over(phi: &NatMap, op: &Arc<FinCat>) -> NatMap {
    let comp: Vec<Mat> = phi.comps().iter().map(Mat::transpose).collect();
    NatMap::new_unchecked(dual_over(phi.tgt(), op), dual_over(phi.src(), op), comp)
}

pub fn dual_map(phi: &NatMap) -> NatMap {
    dual_map_over(phi, &Arc::new(phi.src().cat().opposite()))
}

/// `0 → C* → B* → A* → 0`.
pub fn dual_ses_over(s: &Ses, op: &Arc<FinCat>) -> Ses {
    Ses::new(dual_map_over(s.epi(), op), dual_map_over(s.mono(), op)).expect("duality is exact")
}

pub fn dual_ses(s: &Ses) -> Ses {
    dual_ses_over(s, &Arc::new(s.sub().cat().opposite()))
}

/// `F` is injective iff `F*` is projective over the opposite category.
pub fn is_injective(f: &Rep) -> Result<SplitTest, Error> {
    is_projective(&dual(f))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::Field;
    use crate::fincat::shapes;
    use crate::homext::hom::representable;
    use alloc::vec;

    const Q: Field = Field::Rationals;

    #[test]
    fn dual_is_involutive() {
        let a2 = Arc::new(shapes::a2());
        let r1 = representable(&a2, 0, Q);
        let d = dual(&r1);
        assert_eq!(d.dims(), &[1, 1]);
        let dd = dual(&d);
        assert_eq!(dd.dims(), r1.dims());
        assert_eq!(dd.actions(), r1.actions());
    }

    #[test]
    fn injectivity_over_a2() {
        let a2 = Arc::new(shapes::a2());
        // R_1 = (k → k) is also injective; S_1 = (k → 0) is injective but not projective.
        assert!(is_injective(&representable(&a2, 0, Q)).unwrap().holds);
        let s1 = Rep::from_generators(a2.clone(), Q, vec![1, 0], vec![(1, Mat::zeros(Q, 0, 1))]).unwrap();
        assert!(is_injective(&s1).unwrap().holds);
        assert!(!is_projective(&s1).unwrap().holds);
        let s2 = representable(&a2, 1, Q);
        assert!(!is_injective(&s2).unwrap().holds);
    }
}
