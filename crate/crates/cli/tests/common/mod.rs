#![allow(dead_code)]

pub mod oracle;

use std::io::Write;
use std::sync::{Arc, Mutex, MutexGuard};
use std::time::Duration;

use exactlim::commands::Context;
use exactlim::Workspace;
use exactlim_core::fincat::{shapes, FinCat};
use exactlim_core::{Diagrams, Field, Ses};

pub const Q: Field = Field::Rationals;

pub fn f2() -> Field {
    Field::prime(2).unwrap()
}

pub fn f3() -> Field {
    Field::prime(3).unwrap()
}

/// The worked span sequence `κ(k) ↪ (k ← k² → k) ↠ (0 ← k → 0)`.
pub const SPAN_ETA: &str = "
functor K over Span field Q { dim c = 1; dim a = 1; dim b = 1; map p = [[1]]; map q = [[1]]; }
functor F over Span field Q { dim c = 2; dim a = 1; dim b = 1; map p = [[1, 0]]; map q = [[0, 1]]; }
functor X over Span field Q { dim c = 1; }
natmap phi: K -> F { at c = [[1], [1]]; at a = [[1]]; at b = [[1]]; }
natmap psi: F -> X { at c = [[1, -1]]; }
ses eta { mono = phi; epi = psi; }
";

/// `κ(k) ↪ k[C2] ↠ sign` through the norm element.
pub fn bc2_augmentation_text(field: Field) -> String {
    format!(
        "functor K over BC2 field {field} {{ dim x = 1; map g = [[1]]; }}
functor R over BC2 field {field} {{ dim x = 2; map g = [[0, 1], [1, 0]]; }}
functor S over BC2 field {field} {{ dim x = 1; map g = [[-1]]; }}
natmap norm: K -> R {{ at x = [[1], [1]]; }}
natmap aug: R -> S {{ at x = [[1, -1]]; }}
ses eta {{ mono = norm; epi = aug; }}
"
    )
}

pub fn context(src: &str) -> Context {
    Context { ws: Workspace::parse(src).unwrap(), field: None, seed: 0, budget: 0 }
}

pub fn sequence(src: &str, name: &str) -> (Diagrams, Ses) {
    context(src).sequence(name).unwrap()
}

pub struct Case {
    pub label: &'static str,
    pub sigma: FinCat,
    pub field: Field,
    pub exact: bool,
}

/// Shapes with their known verdicts for `colim_Σ` over `Vect`.
pub fn verdict_table() -> Vec<Case> {
    let c = |label, sigma, field, exact| Case { label, sigma, field, exact };
    vec![
        c("discrete1/Q", shapes::discrete(1), Q, true),
        c("discrete2/Q", shapes::discrete(2), Q, true),
        c("discrete3/Q", shapes::discrete(3), Q, true),
        c("A2/Q", shapes::a2(), Q, true),
        c("span/Q", shapes::span(), Q, false),
        c("span/F2", shapes::span(), f2(), false),
        c("span/F3", shapes::span(), f3(), false),
        c("BC2/F2", shapes::cyclic_group(2), f2(), false),
        c("BC2/Q", shapes::cyclic_group(2), Q, true),
        c("BC2/F3", shapes::cyclic_group(2), f3(), true),
    ]
}

impl Case {
    pub fn diagrams(&self) -> Diagrams {
        Diagrams::new(Arc::new(self.sigma.clone()), Arc::new(shapes::point()), self.field)
    }
}

static SERIAL: Mutex<()> = Mutex::new(());

/// Criteria run one at a time so that their timings are meaningful.
pub fn serial() -> MutexGuard<'static, ()> {
    SERIAL.lock().unwrap_or_else(|e| e.into_inner())
}

/// Prints the criterion's line outside the test harness's capture and
/// returns whether it passed, counting a blown time limit as a failure.
pub fn criterion(n: u32, title: &str, ok: bool, detail: &str, elapsed: Duration, limit_secs: Option<u64>) -> bool {
    let secs = elapsed.as_secs_f64();
    let in_time = limit_secs.is_none_or(|l| secs < l as f64);
    let pass = ok && in_time;
    let limit = limit_secs.map(|l| format!(", limit {l} s")).unwrap_or_default();
    let line = format!(
        "criterion {n} ({title}): {} ; {detail} [{secs:.2} s{limit}]\n",
        if pass { "PASS" } else { "FAIL" }
    );
    let _ = std::io::stderr().write_all(line.as_bytes());
    pass
}
