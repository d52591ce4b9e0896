//! Command-line interface: argument definitions and dispatch.

use std::path::PathBuf;
use std::sync::Arc;

use clap::{Parser, Subcommand, ValueEnum};
use exactlim_core::construct::{phi_by_duality, psi, z_eta};
use exactlim_core::fincat::{shapes, FinCat};
use exactlim_core::homext::ext1;
use exactlim_core::verify::{
    decide_colim_exact, decide_lim_exact, verify_discrete_corollaries, verify_lemma_colim_star, verify_thm_first,
    verify_thm_second, Certificate, EtaMode, Outcome, Verdict,
};
use exactlim_core::{Diagrams, Field, Mat, NatMap, Rep, Ses};
use serde_json::{json, Map, Value};

use crate::report::{self, Report};
use crate::workspace::{parse_field, CatDef, DslError, FunctorEntry, Workspace};

#[derive(Debug, Parser)]
#[command(name = "exactlim", version, about = "Exactness of limits and colimits of finite-dimensional diagrams")]
pub struct Cli {
    /// Definitions file in the text format.
    #[arg(long, global = true)]
    pub file: Option<PathBuf>,
    /// Seed for sampled checks.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Number of samples for sampled checks.
    #[arg(long, global = true, default_value_t = 20)]
    pub budget: usize,
    /// Field: Q or F<p>.
    #[arg(long, global = true)]
    pub field: Option<String>,
    /// Write the report here instead of standard output.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Claim {
    ThmFirst,
    ThmSecond,
    LemmaColimStar,
    DiscreteCorollaries,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    Direct,
    Pushout,
    Both,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Colimit of a diagram, with its structure maps.
    Colim {
        #[arg(long)]
        functor: String,
    },
    /// Limit of a diagram, with its structure maps.
    Lim {
        #[arg(long)]
        functor: String,
    },
    /// Ext¹(functor, object) for two functors over the same category.
    Ext {
        #[arg(long)]
        functor: String,
        #[arg(long)]
        object: String,
    },
    /// Ψ: Ext¹(colim F, A) → Ext¹(F, κA). `A` defaults to the field over a point base.
    Psi {
        #[arg(long)]
        functor: String,
        #[arg(long)]
        object: Option<String>,
    },
    /// Φ: Ext¹(B, lim F) → Ext¹(κB, F), checked against the dual of Ψ.
    Phi {
        #[arg(long)]
        functor: String,
        #[arg(long)]
        object: Option<String>,
    },
    /// Z_η and f_η for a sequence whose first term is constant.
    Zeta {
        #[arg(long)]
        ses: String,
    },
    /// Decide whether colim over `--cat` is exact on diagrams in Fun(base, Vect)
    DecideColimExact {
        #[arg(long)]
        cat: String,
        #[arg(long, default_value = "Point")]
        base: String,
    },
    /// Decide whether lim over `--cat` is exact on diagrams in Fun(base, Vect)
    DecideLimExact {
        #[arg(long)]
        cat: String,
        #[arg(long, default_value = "Point")]
        base: String,
    },
    /// Sampled check of one claim.
    Verify {
        #[arg(long, value_enum)]
        claim: Claim,
        #[arg(long, default_value = "Point")]
        cat: String,
        #[arg(long, default_value = "Point")]
        base: String,
        #[arg(long, value_enum, default_value = "both")]
        mode: Mode,
        /// Sizes of the discrete index categories.
        #[arg(long, value_delimiter = ',', default_value = "1,2,3")]
        sizes: Vec<usize>,
    },
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Dsl(#[from] DslError),
    #[error("cannot read `{path}`: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("unknown {kind} `{name}`")]
    Unknown { kind: &'static str, name: String },
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Core(#[from] exactlim_core::Error),
}

fn usage<T>(msg: impl Into<String>) -> Result<T, CliError> {
    Err(CliError::Usage(msg.into()))
}

pub struct Context {
    pub ws: Workspace,
    pub field: Option<Field>,
    pub seed: u64,
    pub budget: usize,
}

impl Context {
    pub fn load(cli: &Cli) -> Result<Context, CliError> {
        let ws = match &cli.file {
            Some(p) => {
                let text = std::fs::read_to_string(p)
                    .map_err(|source| CliError::Io { path: p.display().to_string(), source })?;
                Workspace::parse(&text)?
            }
            None => Workspace::default(),
        };
        let field = match &cli.field {
            Some(f) => match parse_field(f) {
                Some(x) => Some(x),
                None => return usage(format!("unknown field `{f}` (expected Q or F<p> for a prime p)")),
            },
            None => None,
        };
        Ok(Context { ws, field, seed: cli.seed, budget: cli.budget })
    }

    fn category(&self, name: &str) -> Result<Arc<FinCat>, CliError> {
        match self.ws.lookup_category(name) {
            Some((_, c)) => Ok(c),
            None => Err(CliError::Unknown { kind: "category", name: name.into() }),
        }
    }

    fn functor(&self, name: &str) -> Result<&FunctorEntry, CliError> {
        let f = self.ws.functor(name).ok_or_else(|| CliError::Unknown { kind: "functor", name: name.into() })?;
        if let Some(field) = self.field {
            if field != f.rep.field() {
                return usage(format!("`{name}` is defined over {}, not {field}", f.rep.field()));
            }
        }
        Ok(f)
    }

    fn field_or_q(&self) -> Field {
        self.field.unwrap_or(Field::Rationals)
    }

    fn split_product(&self, def: &CatDef) -> Option<(CatDef, CatDef)> {
        match def {
            CatDef::Product(a, b) => Some(((**a).clone(), (**b).clone())),
            CatDef::Named(n) => self.split_product(&self.ws.category(n)?.def),
            _ => None,
        }
    }

    /// The index and base categories of a diagram, and the diagram over their
    /// product. Functors over a non-product category are diagrams in vector
    /// spaces.
    pub fn diagram(&self, name: &str) -> Result<(Diagrams, Rep), CliError> {
        let f = self.functor(name)?;
        let field = f.rep.field();
        let (sigma, delta) = match self.split_product(&f.over) {
            Some((a, b)) => {
                let eval = |d: &CatDef| self.ws.eval(d).ok_or_else(|| CliError::Usage("unresolvable category".into()));
                (eval(&a)?, eval(&b)?)
            }
            None => (f.rep.cat().clone(), Arc::new(shapes::point())),
        };
        let d = Diagrams::new(sigma, delta, field);
        let rep = transport(&f.rep, d.product())?;
        Ok((d, rep))
    }

    /// A registered sequence as a sequence of diagrams over its index and base.
    pub fn sequence(&self, name: &str) -> Result<(Diagrams, Ses), CliError> {
        let entry = self.ws.sequence(name).ok_or_else(|| CliError::Unknown { kind: "sequence", name: name.into() })?;
        let middle = &self.ws.natmaps.iter().find(|n| n.name == entry.mono).expect("registered").tgt;
        let (d, _) = self.diagram(middle)?;
        let p = d.product();
        let s = &entry.ses;
        let (sub, mid, quot) = (transport(s.sub(), p)?, transport(s.middle(), p)?, transport(s.quotient(), p)?);
        let mono = NatMap::new(sub, mid.clone(), s.mono().comps().to_vec())?;
        let epi = NatMap::new(mid, quot, s.epi().comps().to_vec())?;
        Ok((d, Ses::new(mono, epi)?))
    }

    /// A base object for `d`; the field itself over a point base when omitted.
    fn base_object(&self, d: &Diagrams, name: Option<&str>) -> Result<Rep, CliError> {
        match name {
            Some(n) => {
                let f = self.functor(n)?;
                match transport(&f.rep, d.delta()) {
                    Ok(r) => Ok(r),
                    Err(_) => usage(format!("`{n}` is not a functor over the base category")),
                }
            }
            None if d.delta().n_objects() == 1 && d.delta().n_morphisms() == 1 => {
                Ok(Rep::new(d.delta().clone(), d.field(), vec![1], vec![Mat::identity(d.field(), 1)])?)
            }
            None => usage("`--object` is required unless the base is a point"),
        }
    }
}

/// The same matrices over a category with identical tables (names may differ).
fn transport(rep: &Rep, cat: &Arc<FinCat>) -> Result<Rep, CliError> {
    let src = rep.cat();
    let same = src.n_objects() == cat.n_objects()
        && src.n_morphisms() == cat.n_morphisms()
        && (0..cat.n_morphisms()).all(|m| {
            src.src(m) == cat.src(m)
                && src.tgt(m) == cat.tgt(m)
                && (0..cat.n_morphisms()).all(|g| src.compose(g, m) == cat.compose(g, m))
        });
    if !same {
        return usage("functor is not defined over the expected category");
    }
    Ok(Rep::new(cat.clone(), rep.field(), rep.dims().to_vec(), rep.actions().to_vec())?)
}

fn inputs(pairs: &[(&str, Value)]) -> Map<String, Value> {
    pairs.iter().map(|(k, v)| (k.to_string(), v.clone())).collect()
}

fn diagrams_for(ctx: &Context, cat: &str, base: &str) -> Result<Diagrams, CliError> {
    Ok(Diagrams::new(ctx.category(cat)?, ctx.category(base)?, ctx.field_or_q()))
}

pub fn execute(cli: &Cli) -> Result<Report, CliError> {
    let ctx = Context::load(cli)?;
    let (seed, budget) = (ctx.seed, ctx.budget);
    let report = match &cli.command {
        Command::Colim { functor } | Command::Lim { functor } => {
            let is_colim = matches!(cli.command, Command::Colim { .. });
            let (d, f) = ctx.diagram(functor)?;
            let (apex, legs, name, legs_name) = if is_colim {
                let c = d.colim(&f)?;
                (c.apex, c.rho, "colim", "rho")
            } else {
                let l = d.lim(&f)?;
                (l.apex, l.pi, "lim", "pi")
            };
            let result = json!({
                "apex_dim": apex.total_dim(),
                "apex": report::rep(&apex),
                legs_name: report::natmap(&legs),
            });
            Report::success(name, inputs(&[("functor", json!(functor))]), result)
        }
        Command::Ext { functor, object } => {
            let m = &ctx.functor(functor)?.rep;
            let n = &ctx.functor(object)?.rep;
            if !m.same_category(n) {
                return usage(format!("`{functor}` and `{object}` live over different categories or fields"));
            }
            let e = ext1(m, n)?;
            let mut extensions = Vec::new();
            for k in 0..e.dim() {
                extensions.push(report::ses(&e.realize(&e.basis_class(k))?));
            }
            let result = json!({ "dim": e.dim(), "basis_extensions": extensions });
            Report::success("ext", inputs(&[("functor", json!(functor)), ("object", json!(object))]), result)
        }
        Command::Psi { functor, object } => {
            let (d, f) = ctx.diagram(functor)?;
            let a = ctx.base_object(&d, object.as_deref())?;
            let map = psi(&d, &f, &a)?;
            let outside = map.class_outside_image().map(|x| report::vector(&x.coords));
            let result = json!({
                "domain_dim": map.domain.dim(),
                "codomain_dim": map.codomain.dim(),
                "matrix": report::matrix(&map.matrix),
                "rank": map.rank(),
                "injective": map.is_injective(),
                "bijective": map.is_invertible(),
                "class_outside_image": outside,
            });
            Report::success("psi", inputs(&[("functor", json!(functor)), ("object", json!(object))]), result)
        }
        Command::Phi { functor, object } => {
            let (d, f) = ctx.diagram(functor)?;
            let b = ctx.base_object(&d, object.as_deref())?;
            let check = phi_by_duality(&d, &b, &f)?;
            let result = json!({
                "domain_dim": check.phi.domain.dim(),
                "codomain_dim": check.phi.codomain.dim(),
                "matrix": report::matrix(&check.phi.matrix),
                "rank": check.phi.rank(),
                "injective": check.phi.is_injective(),
                "bijective": check.phi.is_invertible(),
                "dual_transport_of_psi": report::matrix(&check.via_psi),
                "duality_agrees": check.agrees(),
            });
            let mut r = Report::success("phi", inputs(&[("functor", json!(functor)), ("object", json!(object))]), result);
            if !check.agrees() {
                r.verdict = "fails".into();
                r.success = false;
            }
            r
        }
        Command::Zeta { ses } => {
            let (d, moved) = ctx.sequence(ses)?;
            let z = z_eta(&d, &moved)?;
            let outcome = if z.f_is_mono() { Outcome::Holds } else { Outcome::Fails };
            let cert = if z.f_is_mono() {
                Certificate::None
            } else {
                Certificate::NonMonoEta { eta: moved, z: z.clone() }
            };
            let mut r = Report::from_verdict("zeta", inputs(&[("ses", json!(ses))]), &Verdict::new("f-eta-mono", outcome, cert));
            r.result = report::z_eta(&z);
            r
        }
        Command::DecideColimExact { cat, base } | Command::DecideLimExact { cat, base } => {
            let d = diagrams_for(&ctx, cat, base)?;
            let (name, v) = if matches!(cli.command, Command::DecideColimExact { .. }) {
                ("decide-colim-exact", decide_colim_exact(&d, true)?)
            } else {
                ("decide-lim-exact", decide_lim_exact(&d, true)?)
            };
            let ins = inputs(&[("cat", json!(cat)), ("base", json!(base)), ("field", json!(d.field().name()))]);
            Report::from_verdict(name, ins, &v)
        }
        Command::Verify { claim, cat, base, mode, sizes } => {
            let field = ctx.field_or_q();
            let mut ins = vec![("cat", json!(cat)), ("base", json!(base)), ("field", json!(field.name()))];
            let v = match claim {
                Claim::DiscreteCorollaries => {
                    ins.remove(0);
                    ins.push(("sizes", json!(sizes)));
                    verify_discrete_corollaries(&ctx.category(base)?, field, sizes, budget, seed)?
                }
                _ => {
                    let d = diagrams_for(&ctx, cat, base)?;
                    match claim {
                        Claim::ThmFirst => {
                            let m = match mode {
                                Mode::Direct => EtaMode::Direct,
                                Mode::Pushout => EtaMode::PushoutTrick,
                                Mode::Both => EtaMode::Both,
                            };
                            ins.push(("mode", json!(m.name())));
                            verify_thm_first(&d, budget, seed, m)?
                        }
                        Claim::ThmSecond => verify_thm_second(&d, budget, seed)?,
                        _ => verify_lemma_colim_star(&d, budget, seed)?,
                    }
                }
            };
            Report::from_verdict("verify", inputs(&ins), &v)
        }
    };
    Ok(report)
}

/// Runs one invocation and returns the exit code, writing the report to
/// `--out` or standard output and diagnostics to standard error.
pub fn run<I, T>(args: I, stdout: &mut dyn std::io::Write, stderr: &mut dyn std::io::Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            if e.use_stderr() {
                let _ = write!(stderr, "{e}");
                return 2;
            }
            let _ = write!(stdout, "{e}");
            return 0;
        }
    };
    match execute(&cli) {
        Ok(report) => {
            let text = report.render();
            match &cli.out {
                Some(p) => {
                    if let Err(e) = std::fs::write(p, &text) {
                        let _ = writeln!(stderr, "error: cannot write `{}`: {e}", p.display());
                        return 2;
                    }
                }
                None => {
                    let _ = stdout.write_all(text.as_bytes());
                }
            }
            report.exit_code()
        }
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            2
        }
    }
}
