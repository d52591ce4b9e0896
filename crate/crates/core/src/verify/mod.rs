//! Decision procedures for exactness of `colim_Σ` and `lim_Σ` with
//! certificates, and sampled checks of the equivalences relating exactness to
//! `f_η`, `Ψ`, `Φ` and the discrete case.

mod decide;
mod gen;
mod theorems;

use alloc::string::String;
use alloc::vec::Vec;

use crate::construct::{ColimStarCheck, ZEtaData};
use crate::exact::{Mat, Scalar};
use crate::homext::SplitTest;
use crate::rep::{NatMap, Rep, Ses};

pub use decide::{decide_colim_exact, decide_lim_exact, find_non_mono_eta};
pub use gen::{free_generator, indecomposable_injectives, injective_cogenerator, Gen};
pub use theorems::{
    verify_discrete_corollaries, verify_lemma_colim_star, verify_thm_first, verify_thm_second, EtaMode,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Outcome {
    Holds,
    HoldsSampled { budget: usize },
    Fails,
    Inconclusive,
}

impl Outcome {
    pub fn holds(&self) -> bool {
        matches!(self, Outcome::Holds | Outcome::HoldsSampled { .. })
    }
}

/// Evidence attached to a verdict.
#[derive(Clone, Debug)]
#[allow(clippy::large_enum_variant)]
pub enum Certificate {
    None,
    Split(SplitTest),
    NonMonoEta { eta: Ses, z: ZEtaData },
    /// A monomorphism whose colimit is not a monomorphism.
    NonMonoColim { mono: NatMap, colim: NatMap },
    /// `Ψ_{F,A}` with a codomain class outside its image.
    PsiNotOnto { f: Rep, a: Rep, matrix: Mat, outside: Vec<Scalar> },
    ColimStar { eta: Ses, check: ColimStarCheck },
    Parts(Vec<(String, Certificate)>),
    Mismatch(String),
}

/// The result of checking one claim.
#[derive(Clone, Debug)]
pub struct Verdict {
    pub claim: String,
    pub outcome: Outcome,
    pub certificate: Certificate,
    pub seed: Option<u64>,
    pub budget: Option<usize>,
    /// Counters and sub-results, in a fixed order.
    pub stats: Vec<(String, String)>,
}

impl Verdict {
    pub fn new(claim: &str, outcome: Outcome, certificate: Certificate) -> Verdict {
        Verdict { claim: claim.into(), outcome, certificate, seed: None, budget: None, stats: Vec::new() }
    }

    pub fn stat(mut self, key: &str, value: impl core::fmt::Display) -> Verdict {
        self.stats.push((key.into(), alloc::format!("{value}")));
        self
    }

    pub fn stat_value(&self, key: &str) -> Option<&str> {
        self.stats.iter().find(|(k, _)| k == key).map(|(_, v)| v.as_str())
    }
}
