//! One test per acceptance criterion; each prints a single PASS/FAIL line.

mod common;

use std::sync::Arc;
use std::time::Instant;

use common::oracle;
use common::*;
use exactlim_core::construct::{phi_by_duality, psi, verify_colim_star, z_eta};
use exactlim_core::fincat::shapes;
use exactlim_core::homext::{ext1, SplitWitness};
use exactlim_core::verify::{
    decide_colim_exact, decide_lim_exact, verify_discrete_corollaries, verify_lemma_colim_star, verify_thm_first,
    verify_thm_second, Certificate, EtaMode, Gen,
};
use exactlim_core::{Diagrams, Field, Mat, Rep};

const SEED: u64 = 20_240_917;

#[test]
fn criterion_1_verdict_table() {
    let _g = serial();
    let start = Instant::now();
    let mut wrong = Vec::new();
    for case in verdict_table() {
        let v = decide_colim_exact(&case.diagrams(), true).unwrap();
        let replays = match &v.certificate {
            Certificate::Parts(parts) => parts.iter().all(|(_, c)| match c {
                Certificate::NonMonoEta { eta, z } => {
                    let again = z_eta(&case.diagrams(), eta).unwrap();
                    again.f_eta == z.f_eta && !again.f_is_mono()
                }
                _ => true,
            }),
            _ => true,
        };
        if v.outcome.holds() != case.exact || !replays {
            wrong.push(case.label);
        }
    }
    let ok = wrong.is_empty();
    let detail = if ok { "10/10 verdicts match, fail certificates replay".to_string() } else { format!("wrong: {wrong:?}") };
    assert!(criterion(1, "verdict table", ok, &detail, start.elapsed(), Some(10)));
}

#[test]
fn criterion_2_f_eta_mono_equivalence() {
    let _g = serial();
    let start = Instant::now();
    let mut bad = Vec::new();
    for case in verdict_table() {
        let v = verify_thm_first(&case.diagrams(), 100, SEED, EtaMode::Both).unwrap();
        let exact = v.stat_value("colim_exact") == Some("true");
        if !v.outcome.holds() || exact != case.exact {
            bad.push(format!("{}: {:?}", case.label, v.stats));
        }
    }
    let ok = bad.is_empty();
    let detail = if ok { "0 disagreements over 10 cases x 100 samples".to_string() } else { bad.join("; ") };
    assert!(criterion(2, "f_eta mono iff colim exact", ok, &detail, start.elapsed(), Some(60)));
}

#[test]
fn criterion_3_psi() {
    let _g = serial();
    let start = Instant::now();
    let mut bad = Vec::new();
    let mut samples = 0;
    for case in verdict_table() {
        let v = verify_thm_second(&case.diagrams(), 20, SEED).unwrap();
        samples += 20;
        let injective = v.stat_value("injective") == Some("20");
        let bijective_all = v.stat_value("bijective") == Some("20");
        if !v.outcome.holds() || !injective || bijective_all != case.exact {
            bad.push(format!("{}: {:?}", case.label, v.stats));
        }
    }
    // F = (0 ← k → 0) over the span, A = k.
    let src = "functor S over Span field Q { dim c = 1; }";
    let ctx = context(src);
    let (d, f) = ctx.diagram("S").unwrap();
    let k = Rep::new(d.delta().clone(), Q, vec![1], vec![Mat::identity(Q, 1)]).unwrap();
    let map = psi(&d, &f, &k).unwrap();
    let outside = map.class_outside_image();
    let exhibited = match &outside {
        Some(x) => {
            let col = Mat::column(Q, x.coords.clone());
            !col.is_zero() && map.matrix.solve(&col).unwrap().is_none()
        }
        None => false,
    };
    if !exhibited {
        bad.push("no class outside the image for F = (0 <- k -> 0)".into());
    }
    let ok = bad.is_empty();
    let detail = if ok {
        format!(
            "kernel 0 on {samples}/{samples} samples, invertible exactly on exact shapes, span class {:?} outside image (Ext dims {} -> {})",
            outside.unwrap().coords.iter().map(|s| s.to_string()).collect::<Vec<_>>(),
            map.domain.dim(),
            map.codomain.dim()
        )
    } else {
        bad.join("; ")
    };
    assert!(criterion(3, "psi injective, bijective iff exact", ok, &detail, start.elapsed(), Some(120)));
}

#[test]
fn criterion_4_colim_over_extension() {
    let _g = serial();
    let start = Instant::now();
    let mut bad = Vec::new();
    for case in verdict_table() {
        let v = verify_lemma_colim_star(&case.diagrams(), 100, SEED).unwrap();
        if !v.outcome.holds() || v.stat_value("isomorphisms") != Some("100") {
            bad.push(format!("{}: {:?}", case.label, v.stats));
        }
    }
    let (d, eta) = sequence(SPAN_ETA, "eta");
    let (_, check) = verify_colim_star(&d, &eta).unwrap();
    if !(check.is_iso() && check.z_dims == [0] && check.colim_dims == [0]) {
        bad.push(format!("span worked eta: {:?} vs {:?}", check.z_dims, check.colim_dims));
    }
    let (d, eta) = sequence(&bc2_augmentation_text(f2()), "eta");
    let (_, check) = verify_colim_star(&d, &eta).unwrap();
    if !(check.is_iso() && check.z_dims == [1] && check.colim_dims == [1]) {
        bad.push(format!("BC2/F2 augmentation: {:?} vs {:?}", check.z_dims, check.colim_dims));
    }
    let ok = bad.is_empty();
    let detail = if ok {
        "1000/1000 comparison maps invertible; span worked eta dims 0 = 0; BC2/F2 augmentation dims 1 = 1".to_string()
    } else {
        bad.join("; ")
    };
    assert!(criterion(4, "colim over the one-point extension", ok, &detail, start.elapsed(), Some(60)));
}

#[test]
fn criterion_5_ext_oracle() {
    let _g = serial();
    let start = Instant::now();
    let mut notes = Vec::new();
    let mut ok = true;
    for (label, cat, classes_only) in [
        ("A2", shapes::a2(), false),
        ("span", shapes::span(), true),
        ("BC2", shapes::cyclic_group(2), false),
    ] {
        let cat = Arc::new(cat);
        let mut reps = oracle::all_reps(&cat, 2);
        let total = reps.len();
        if classes_only {
            reps = oracle::iso_classes(reps);
        }
        let mut mismatches = 0;
        for m in &reps {
            for n in &reps {
                if ext1(m, n).unwrap().dim() != oracle::ext1_dim(m, n) {
                    mismatches += 1;
                }
            }
        }
        ok &= mismatches == 0;
        let scope = if classes_only { format!("{} iso classes of {total}", reps.len()) } else { format!("{total} reps") };
        notes.push(format!("{label}: {} pairs ({scope}), {mismatches} mismatches", reps.len() * reps.len()));
    }

    // Pinned values, checked literally.
    let a2 = Arc::new(shapes::a2());
    let simple = |o: usize| {
        let dims = if o == 0 { [1, 0] } else { [0, 1] };
        let a = a2.morphism_index("a").unwrap();
        Rep::from_generators(a2.clone(), f2(), dims.to_vec(), vec![(a, Mat::zeros(f2(), dims[1], dims[0]))]).unwrap()
    };
    let (s1, s2) = (simple(0), simple(1));
    let e21 = ext1(&s2, &s1).unwrap().dim();
    let e12 = ext1(&s1, &s2).unwrap().dim();
    let (o21, o12) = (oracle::ext1_dim(&s2, &s1), oracle::ext1_dim(&s1, &s2));
    let pinned_a2 = e21 == 1 && e12 == 0;
    ok &= pinned_a2;
    notes.push(format!(
        "A2 pinned Ext(S2,S1)=1, Ext(S1,S2)=0: computed {e21}, {e12} (brute force {o21}, {o12}){}",
        if pinned_a2 { "" } else { " MISMATCH" }
    ));
    let trivial = |field: Field| {
        let bc2 = Arc::new(shapes::cyclic_group(2));
        let g = bc2.morphism_index("g").unwrap();
        Rep::from_generators(bc2, field, vec![1], vec![(g, Mat::identity(field, 1))]).unwrap()
    };
    let (k2, kq) = (trivial(f2()), trivial(Q));
    let bc2_f2 = ext1(&k2, &k2).unwrap().dim();
    let bc2_q = ext1(&kq, &kq).unwrap().dim();
    ok &= bc2_f2 == 1 && bc2_q == 0;
    notes.push(format!("BC2 Ext(k,k): F2 {bc2_f2} (pinned 1), Q {bc2_q} (pinned 0)"));
    let pass = criterion(5, "ext oracle", ok, &notes.join("; "), start.elapsed(), Some(120));
    assert!(pass, "{}", notes.join("\n"));
}

#[test]
fn criterion_6_discrete_corollaries() {
    let _g = serial();
    let start = Instant::now();
    let mut bad = Vec::new();
    let mut witnesses = 0;
    for (label, delta, field) in [("A2/Q", shapes::a2(), Q), ("BC2/F2", shapes::cyclic_group(2), f2())] {
        let v = verify_discrete_corollaries(&Arc::new(delta), field, &[1, 2, 3], 5, SEED).unwrap();
        if !v.outcome.holds() {
            bad.push(format!("{label}: {:?}", v.stats));
        }
        if let Certificate::Parts(parts) = &v.certificate {
            for (name, c) in parts {
                if let Certificate::Split(t) = c {
                    if t.holds && matches!(t.witness, SplitWitness::Section(_)) {
                        witnesses += 1;
                    } else {
                        bad.push(format!("{label}: {name} has no splitting"));
                    }
                }
            }
        }
    }
    if witnesses != 12 {
        bad.push(format!("{witnesses} split witnesses instead of 12"));
    }
    let ok = bad.is_empty();
    let detail = if ok {
        "canonical map invertible and equal to Xi.Psi for sizes 1-3 over A2/Q and BC2/F2; 12 split witnesses".to_string()
    } else {
        bad.join("; ")
    };
    assert!(criterion(6, "discrete corollaries", ok, &detail, start.elapsed(), Some(60)));
}

#[test]
fn criterion_7_duality() {
    let _g = serial();
    let start = Instant::now();
    let mut cases: Vec<(String, Diagrams)> = verdict_table().iter().map(|c| (c.label.to_string(), c.diagrams())).collect();
    for (label, sigma) in [("span", shapes::span()), ("discrete2", shapes::discrete(2)), ("A2", shapes::a2())] {
        cases.push((format!("{label} over A2/Q"), Diagrams::new(Arc::new(sigma), Arc::new(shapes::a2()), Q)));
    }
    let (mut decisions, mut samples) = (0, 0);
    let mut bad = Vec::new();
    for (i, (label, d)) in cases.iter().enumerate() {
        let lim = decide_lim_exact(d, false).unwrap();
        let colim_op = decide_colim_exact(&d.opposite(), false).unwrap();
        decisions += 1;
        if lim.outcome != colim_op.outcome {
            bad.push(format!("{label}: lim {:?} vs colim of opposite {:?}", lim.outcome, colim_op.outcome));
        }
        let mut gen = Gen::new(SEED + i as u64, d.field(), 2);
        for _ in 0..10 {
            let b = gen.rep(d.delta()).unwrap();
            let f = gen.rep(d.product()).unwrap();
            samples += 1;
            if !phi_by_duality(d, &b, &f).unwrap().agrees() {
                bad.push(format!("{label}: Phi differs from the transported Psi"));
            }
        }
    }
    let ok = bad.is_empty();
    let detail =
        if ok { format!("{decisions} decisions and {samples} sampled Phi instances, 0 mismatches") } else { bad.join("; ") };
    assert!(criterion(7, "duality coherence", ok, &detail, start.elapsed(), None));
}

#[test]
fn criterion_8_determinism() {
    let _g = serial();
    let start = Instant::now();
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("span.exl");
    std::fs::write(&file, SPAN_ETA).unwrap();
    let file = file.to_str().unwrap().to_string();
    let commands: Vec<Vec<&str>> = vec![
        vec!["verify", "--claim", "thm-first", "--cat", "Span", "--budget", "10", "--seed", "7"],
        vec!["verify", "--claim", "thm-second", "--cat", "BC2", "--field", "F2", "--budget", "5", "--seed", "7"],
        vec!["verify", "--claim", "lemma-colim-star", "--cat", "Span", "--budget", "10", "--seed", "7"],
        vec!["verify", "--claim", "discrete-corollaries", "--base", "A2", "--budget", "2", "--seed", "7"],
        vec!["decide-colim-exact", "--cat", "Span", "--field", "Q"],
        vec!["decide-lim-exact", "--cat", "Cospan"],
        vec!["--file", &file, "zeta", "--ses", "eta"],
        vec!["--file", &file, "psi", "--functor", "X"],
        vec!["--file", &file, "phi", "--functor", "F"],
    ];
    let mut differing = Vec::new();
    for args in &commands {
        let run = || {
            let mut out = Vec::new();
            let mut err = Vec::new();
            let code = exactlim::run(std::iter::once("exactlim").chain(args.iter().copied()), &mut out, &mut err);
            (code, out)
        };
        let (c1, o1) = run();
        let (c2, o2) = run();
        if c1 != c2 || o1 != o2 || o1.is_empty() {
            differing.push(args.join(" "));
        }
    }
    let ok = differing.is_empty();
    let detail = if ok {
        format!("{} commands, byte-identical reports across two runs", commands.len())
    } else {
        format!("differing: {differing:?}")
    };
    assert!(criterion(8, "determinism", ok, &detail, start.elapsed(), None));
}
