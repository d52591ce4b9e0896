//! JSON reports. Rational entries are `"p/q"` strings (integers as `"n"`),
//! prime-field entries are integers. Key order is fixed.

use exactlim_core::construct::{ColimStarCheck, ZEtaData};
use exactlim_core::homext::{SplitTest, SplitWitness};
use exactlim_core::verify::{Certificate, Outcome, Verdict};
use exactlim_core::{Mat, NatMap, Rep, Scalar, Ses};
use serde_json::{json, Map, Value};

pub const SCHEMA_VERSION: u32 = 1;

pub fn scalar(s: &Scalar) -> Value {
    match s {
        Scalar::Rat(_) => Value::String(s.to_string()),
        Scalar::Mod(v) => json!(v),
    }
}

pub fn matrix(m: &Mat) -> Value {
    Value::Array((0..m.rows()).map(|r| Value::Array(m.row(r).iter().map(scalar).collect())).collect())
}

pub fn vector(v: &[Scalar]) -> Value {
    Value::Array(v.iter().map(scalar).collect())
}

pub fn rep(r: &Rep) -> Value {
    let cat = r.cat();
    let dims: Map<String, Value> = (0..cat.n_objects()).map(|o| (cat.object_name(o).to_string(), json!(r.dim(o)))).collect();
    let maps: Map<String, Value> =
        cat.non_identities().map(|m| (cat.morphism(m).name.clone(), matrix(r.action(m)))).collect();
    json!({ "field": r.field().name(), "dims": dims, "maps": maps })
}

/// Components only; the endpoints are reported separately where needed.
pub fn natmap(n: &NatMap) -> Value {
    let cat = n.src().cat();
    let comps: Map<String, Value> =
        (0..cat.n_objects()).map(|o| (cat.object_name(o).to_string(), matrix(n.comp(o)))).collect();
    Value::Object(comps)
}

pub fn ses(s: &Ses) -> Value {
    json!({
        "sub": rep(s.sub()),
        "middle": rep(s.middle()),
        "quotient": rep(s.quotient()),
        "mono": natmap(s.mono()),
        "epi": natmap(s.epi()),
    })
}

pub fn split_test(t: &SplitTest) -> Value {
    let witness = match &t.witness {
        SplitWitness::Section(s) => json!({ "section": natmap(s) }),
        SplitWitness::Obstruction(m) => json!({ "obstruction": matrix(m) }),
    };
    json!({ "holds": t.holds, "witness": witness })
}

pub fn z_eta(z: &ZEtaData) -> Value {
    json!({
        "a": rep(&z.a),
        "z": rep(&z.z),
        "f_eta": natmap(&z.f_eta),
        "g_eta": natmap(&z.g_eta),
        "mu_eta": natmap(&z.mu_eta),
        "nabla": natmap(&z.nabla),
        "f_eta_mono": z.f_is_mono(),
        "f_eta_zero": z.f_eta.is_zero(),
    })
}

pub fn colim_star(c: &ColimStarCheck) -> Value {
    json!({
        "z_dims": c.z_dims,
        "colim_dims": c.colim_dims,
        "comparison": natmap(&c.comparison),
        "inverse": c.inverse.as_ref().map(natmap),
        "iso": c.is_iso(),
    })
}

pub fn certificate(c: &Certificate) -> Value {
    match c {
        Certificate::None => Value::Null,
        Certificate::Split(t) => json!({ "kind": "split-test", "test": split_test(t) }),
        Certificate::NonMonoEta { eta, z } => {
            json!({ "kind": "non-mono-f-eta", "eta": ses(eta), "z_eta": z_eta(z) })
        }
        Certificate::NonMonoColim { mono, colim } => json!({
            "kind": "non-mono-colim",
            "mono_src": rep(mono.src()),
            "mono_tgt": rep(mono.tgt()),
            "mono": natmap(mono),
            "colim": natmap(colim),
        }),
        Certificate::PsiNotOnto { f, a, matrix: m, outside } => json!({
            "kind": "psi-not-onto",
            "f": rep(f),
            "a": rep(a),
            "matrix": matrix(m),
            "outside_image": vector(outside),
        }),
        Certificate::ColimStar { eta, check } => {
            json!({ "kind": "colim-star", "eta": ses(eta), "check": colim_star(check) })
        }
        Certificate::Parts(parts) => Value::Array(
            parts.iter().map(|(name, c)| json!({ "name": name, "certificate": certificate(c) })).collect(),
        ),
        Certificate::Mismatch(msg) => json!({ "kind": "mismatch", "message": msg }),
    }
}

pub fn outcome(o: &Outcome) -> String {
    match o {
        Outcome::Holds => "holds".into(),
        Outcome::HoldsSampled { budget } => format!("holds (sampled, budget {budget})"),
        Outcome::Fails => "fails".into(),
        Outcome::Inconclusive => "inconclusive".into(),
    }
}

/// One command's result.
#[derive(Clone, Debug)]
pub struct Report {
    pub command: String,
    pub claim: String,
    pub inputs: Map<String, Value>,
    pub verdict: String,
    pub success: bool,
    pub seed: Option<u64>,
    pub budget: Option<usize>,
    pub result: Value,
    pub certificate: Value,
}

impl Report {
    pub fn success(command: &str, inputs: Map<String, Value>, result: Value) -> Report {
        Report {
            command: command.into(),
            claim: command.into(),
            inputs,
            verdict: "success".into(),
            success: true,
            seed: None,
            budget: None,
            result,
            certificate: Value::Null,
        }
    }

    pub fn from_verdict(command: &str, inputs: Map<String, Value>, v: &Verdict) -> Report {
        let stats: Map<String, Value> = v.stats.iter().map(|(k, x)| (k.clone(), stat_value(x))).collect();
        Report {
            command: command.into(),
            claim: v.claim.clone(),
            inputs,
            verdict: outcome(&v.outcome),
            success: v.outcome.holds(),
            seed: v.seed,
            budget: v.budget,
            result: Value::Object(stats),
            certificate: certificate(&v.certificate),
        }
    }

    pub fn exit_code(&self) -> i32 {
        if self.success {
            0
        } else {
            1
        }
    }

    pub fn to_json(&self) -> Value {
        json!({
            "schema_version": SCHEMA_VERSION,
            "command": self.command,
            "claim": self.claim,
            "inputs": self.inputs,
            "verdict": self.verdict,
            "seed": self.seed,
            "budget": self.budget,
            "result": self.result,
            "certificate": self.certificate,
        })
    }

    pub fn render(&self) -> String {
        let mut s = serde_json::to_string_pretty(&self.to_json()).expect("reports serialize");
        s.push('\n');
        s
    }
}

/// Counters stay numbers and flags stay booleans; everything else is text.
fn stat_value(x: &str) -> Value {
    if let Ok(n) = x.parse::<u64>() {
        return json!(n);
    }
    match x {
        "true" => Value::Bool(true),
        "false" => Value::Bool(false),
        _ => Value::String(x.into()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use exactlim_core::Field;

    #[test]
    fn scalars_keep_their_exact_form() {
        let q = Field::Rationals;
        assert_eq!(scalar(&q.from_ratio(-3, 4).unwrap()), json!("-3/4"));
        assert_eq!(scalar(&q.from_i64(2)), json!("2"));
        let f5 = Field::prime(5).unwrap();
        assert_eq!(scalar(&f5.from_i64(-1)), json!(4));
    }
}
