//! The `traceless` command line.
//!
//! Exit status: 0 on success, 1 when the mathematics refuses the request
//! (a pole, a label with no module, a failed verification), 2 on bad flags.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use crate::brauer::{central_young_symmetriser, AlgebraElement};
use crate::exactnum::{format_combination, rat};
use crate::projector::{
    quasi_additive, quasi_additive_form, reduced_projector, spectrum_reduced, spectrum_reduced_generic,
    spectrum_universal, splitting_idempotent, to_algebra_element, universal_projector, ProjectorForm, SpectrumEntry,
};
use crate::tensor::{apply_element, is_traceless, make_metric, random_tensor, trace_ij, DenseTensor};
use crate::verify::{run_suite, Suite};
use crate::young::{jdt_quotient, lr_coefficient, Partition};
use crate::{Eps, Error, GroupParams, Regime};

#[derive(Parser, Debug)]
#[command(name = "traceless", version, about = "Traceless projectors for O(N) and Sp(N) tensors")]
struct Cli {
    /// Print machine-readable JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone, Copy)]
struct GroupFlags {
    /// Dimension N of the vector space.
    #[arg(long = "N")]
    dim: Option<usize>,
    /// Metric type: 1 for O(N), -1 for Sp(N).
    #[arg(long, allow_hyphen_values = true)]
    eps: Option<i64>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Nonzero eigenvalues of A_n.
    Spectrum {
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        group: GroupFlags,
        /// Generic δ with no size restrictions.
        #[arg(long, conflicts_with_all = ["dim", "eps"])]
        generic: bool,
        /// Restrict to the symmetry type MU (comma-separated parts).
        #[arg(long)]
        mu: Option<String>,
    },
    /// Expand a projector, or apply it to a tensor.
    Project {
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        group: GroupFlags,
        /// universal, reduced=MU, quasi or splitting.
        #[arg(long)]
        form: Option<String>,
        /// A tensor file `{"n","N","entries"}` to project.
        #[arg(long)]
        apply: Option<PathBuf>,
        /// Print the coordinates over normalized class sums instead of diagrams.
        #[arg(long)]
        bracelets: bool,
    },
    /// A Littlewood-Richardson coefficient c^mu_{lambda,nu}.
    Lr {
        #[arg(long)]
        mu: String,
        #[arg(long)]
        lambda: String,
        #[arg(long)]
        nu: String,
    },
    /// The set mu⫽nu of shapes reached by reverse slides.
    Jdt {
        #[arg(long)]
        mu: String,
        #[arg(long)]
        nu: String,
    },
    /// Run a self-check suite.
    Verify {
        #[arg(long)]
        suite: String,
    },
    /// Traceless part of a rank-four tensor antisymmetric in its last pair.
    WeylDemo {
        #[arg(long = "N")]
        dim: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

enum Failure {
    Usage(String),
    Math(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Pole { at, factor } => Failure::Math(Error::PoleOnTensors { at, factor }.to_string()),
            other => Failure::Math(other.to_string()),
        }
    }
}

type CliResult<T> = std::result::Result<T, Failure>;

fn usage(msg: impl Into<String>) -> Failure {
    Failure::Usage(msg.into())
}

fn partition(flag: &str, s: &str) -> CliResult<Partition> {
    s.parse().map_err(|e| usage(format!("--{flag}: {e}")))
}

fn group_params(flags: GroupFlags) -> CliResult<Option<GroupParams>> {
    match (flags.dim, flags.eps) {
        (None, None) => Ok(None),
        (Some(dim), Some(eps)) => {
            let eps = Eps::from_sign(eps).map_err(|e| usage(format!("--eps: {e}")))?;
            GroupParams::new(dim, eps).map(Some).map_err(|e| usage(e.to_string()))
        }
        _ => Err(usage("--N and --eps must be given together")),
    }
}

fn regime(g: Option<GroupParams>) -> Regime {
    g.map_or(Regime::Generic, Regime::Group)
}

/// Runs the command line and returns the exit status. Output goes to `out`,
/// diagnostics to `err`.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            if code == 0 {
                let _ = write!(out, "{text}");
            } else {
                let _ = write!(err, "{text}");
            }
            return code;
        }
    };
    if let Err(msg) = configure_threads() {
        let _ = writeln!(err, "error: {msg}");
        return 2;
    }
    match dispatch(&cli) {
        Ok((text, ok)) => {
            let _ = writeln!(out, "{text}");
            i32::from(!ok)
        }
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
        Err(Failure::Math(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            1
        }
    }
}

/// Honours `TRACELESS_THREADS` by sizing the global worker pool.
fn configure_threads() -> std::result::Result<(), String> {
    let Ok(value) = std::env::var("TRACELESS_THREADS") else {
        return Ok(());
    };
    let threads: usize = value
        .trim()
        .parse()
        .ok()
        .filter(|&t| t > 0)
        .ok_or_else(|| format!("TRACELESS_THREADS must be a positive integer, got {value:?}"))?;
    // A pool that already exists is left alone.
    let _ = rayon::ThreadPoolBuilder::new().num_threads(threads).build_global();
    Ok(())
}

/// Returns the rendered output and whether the command succeeded.
fn dispatch(cli: &Cli) -> CliResult<(String, bool)> {
    let json = cli.json;
    match &cli.command {
        Command::Spectrum { n, group, generic, mu } => {
            let g = group_params(*group)?;
            if g.is_none() && !generic {
                return Err(usage("give --N and --eps, or --generic"));
            }
            let entries = match mu {
                Some(mu) => {
                    let mu = partition("mu", mu)?;
                    if mu.size() != *n {
                        return Err(usage(format!("--mu {mu} is not a partition of {n}")));
                    }
                    match g {
                        Some(g) => spectrum_reduced(&mu, g.dim, g.eps)?,
                        None => spectrum_reduced_generic(&mu),
                    }
                }
                None => spectrum_universal(*n, regime(g))?,
            };
            Ok((render_spectrum(&entries, g, json), true))
        }
        Command::Project { n, group, form, apply, bracelets } => {
            let g = group_params(*group)?;
            let form = form.as_deref().unwrap_or(if g.is_some() { "universal" } else { "splitting" });
            project(*n, g, form, apply.as_ref(), *bracelets, json)
        }
        Command::Lr { mu, lambda, nu } => {
            let (mu, lambda, nu) = (partition("mu", mu)?, partition("lambda", lambda)?, partition("nu", nu)?);
            let c = lr_coefficient(&mu, &lambda, &nu);
            let text = if json {
                json!({"mu": mu.parts(), "lambda": lambda.parts(), "nu": nu.parts(), "coefficient": c}).to_string()
            } else {
                c.to_string()
            };
            Ok((text, true))
        }
        Command::Jdt { mu, nu } => {
            let (mu, nu) = (partition("mu", mu)?, partition("nu", nu)?);
            if !mu.contains(&nu) {
                return Err(Failure::Math(format!("{nu} does not fit inside {mu}")));
            }
            let shapes = jdt_quotient(&mu, &nu);
            let text = if json {
                let list: Vec<&[usize]> = shapes.iter().map(Partition::parts).collect();
                json!({"mu": mu.parts(), "nu": nu.parts(), "shapes": list}).to_string()
            } else {
                shapes.iter().map(ToString::to_string).collect::<Vec<_>>().join("\n")
            };
            Ok((text, true))
        }
        Command::Verify { suite } => {
            let suite: Suite = suite.parse().map_err(|e: Error| usage(format!("--suite: {e}")))?;
            let report = run_suite(suite)?;
            let text = if json { serde_json::to_string(&report).expect("reports serialize") } else { report.to_string() };
            Ok((text, report.passed()))
        }
        Command::WeylDemo { dim, seed } => weyl_demo(*dim, *seed, json),
    }
}

fn render_spectrum(entries: &[SpectrumEntry], g: Option<GroupParams>, json: bool) -> String {
    if json {
        let values: Vec<Value> = entries
            .iter()
            .map(|e| {
                let mut v = json!({"f": e.f, "skew": e.skew, "value": e.value, "display": e.value.to_string()});
                if let Some(s) = e.specialized {
                    v["specialized"] = json!(s);
                }
                v
            })
            .collect();
        return json!({"delta": regime(g).to_string(), "eigenvalues": values}).to_string();
    }
    entries
        .iter()
        .map(|e| match e.specialized {
            Some(s) => format!("{s}\tf={} {}", e.f, e.skew),
            None => format!("{}\tf={} {}", e.value, e.f, e.skew),
        })
        .collect::<Vec<_>>()
        .join("\n")
}

fn project(
    n: usize,
    g: Option<GroupParams>,
    form: &str,
    apply: Option<&PathBuf>,
    bracelets: bool,
    json: bool,
) -> CliResult<(String, bool)> {
    let need_group = |what: &str| g.ok_or_else(|| usage(format!("--form {what} needs --N and --eps")));
    let (element, form_data): (AlgebraElement, Option<ProjectorForm>) = match form {
        "universal" => {
            let p = universal_projector(n, Regime::Group(need_group("universal")?))?;
            (to_algebra_element(&p)?, Some(p))
        }
        "splitting" => {
            let p = splitting_idempotent(n)?;
            (to_algebra_element(&p)?, Some(p))
        }
        "quasi" => {
            let g = need_group("quasi")?;
            let x = quasi_additive(n, g.dim, g.eps)?;
            let p = if bracelets || json { Some(quasi_additive_form(n, g.dim, g.eps)?) } else { None };
            (x, p)
        }
        other => {
            let Some(mu) = other.strip_prefix("reduced=") else {
                return Err(usage(format!("--form must be universal, reduced=MU, quasi or splitting, got {other:?}")));
            };
            let mu = partition("form", mu)?;
            if mu.size() != n {
                return Err(usage(format!("reduced={mu} is not a partition of {n}")));
            }
            let p = reduced_projector(&mu, regime(g))?;
            (to_algebra_element(&p)?, Some(p))
        }
    };

    if let Some(path) = apply {
        let g = g.ok_or_else(|| usage("--apply needs --N and --eps"))?;
        let text = std::fs::read_to_string(path).map_err(|e| usage(format!("--apply {}: {e}", path.display())))?;
        let t: DenseTensor = serde_json::from_str(&text).map_err(|e| usage(format!("--apply {}: {e}", path.display())))?;
        if t.n() != n || t.dim() != g.dim {
            return Err(usage(format!("tensor has n = {}, N = {}; expected n = {n}, N = {}", t.n(), t.dim(), g.dim)));
        }
        let m = make_metric(g.dim, g.eps)?;
        let image = apply_element(&element, &t, &m)?;
        let out = if json { image.to_json(&m).to_string() } else { image.to_string() };
        return Ok((out, true));
    }

    let delta = g.map(|g| rat(g.delta()));
    if bracelets || json {
        let p = form_data.expect("every form has bracelet coordinates when requested");
        if json {
            let mut v = p.to_json()?;
            if !bracelets {
                v["basis"] = json!("diagram");
                v["terms"] = diagram_terms(&element, delta.as_ref())?;
            }
            return Ok((v.to_string(), true));
        }
        let coords = p.specialized_coordinates()?;
        return Ok((coords.format_with("ě", "δ"), true));
    }
    let element = match &delta {
        Some(d) => element.specialize(d)?,
        None => element,
    };
    Ok((format_combination(&element.display_terms(), "δ"), true))
}

fn diagram_terms(x: &AlgebraElement, delta: Option<&num_rational::BigRational>) -> crate::Result<Value> {
    let x = match delta {
        Some(d) => x.specialize(d)?,
        None => x.clone(),
    };
    let terms: Vec<Value> = x.terms().iter().map(|(b, c)| json!({"diagram": b.to_string(), "coefficient": c})).collect();
    Ok(Value::Array(terms))
}

fn weyl_demo(dim: usize, seed: u64, json: bool) -> CliResult<(String, bool)> {
    let g = GroupParams::new(dim, Eps::Orthogonal).map_err(|e| usage(e.to_string()))?;
    let m = make_metric(dim, Eps::Orthogonal)?;
    let mut components = Vec::new();
    for mu in ["3,1", "2,2", "2,1,1", "1,1,1,1"] {
        let mu: Partition = mu.parse()?;
        let spec = match spectrum_reduced(&mu, dim, Eps::Orthogonal) {
            Ok(s) => Some(s.iter().filter_map(|e| e.specialized).collect::<Vec<_>>()),
            Err(Error::InvalidLabel(_)) => None,
            Err(e) => return Err(e.into()),
        };
        components.push((mu, spec));
    }
    let r = random_tensor(4, dim, seed).antisymmetrize_pair(3, 4)?;
    let p = to_algebra_element(&universal_projector(4, Regime::Group(g))?)?;
    let w = apply_element(&p, &r, &m)?;
    let antisymmetric = w.add(&w.permute_slots(&[0, 1, 3, 2])?)?.is_zero();
    let traces: Vec<(String, bool)> = [(1, 2), (1, 3), (2, 3)]
        .iter()
        .map(|&(i, j)| Ok((format!("tr_{i}{j}"), trace_ij(&w, i, j, &m)?.is_zero())))
        .collect::<crate::Result<_>>()?;
    // The (2,2) traceless module is absent below four dimensions.
    let z22 = central_young_symmetriser(&"2,2".parse()?);
    let weyl = apply_element(&p, &apply_element(&z22, &r, &m)?, &m)?;
    let ok = antisymmetric && traces.iter().all(|(_, z)| *z) && is_traceless(&w, &m) && (dim >= 4 || weyl.is_zero());

    if json {
        let comps: Vec<Value> =
            components.iter().map(|(mu, s)| json!({"mu": mu.parts(), "reduced_spectrum": s})).collect();
        let traces: serde_json::Map<String, Value> = traces.iter().map(|(k, z)| (k.clone(), json!(z))).collect();
        let v = json!({
            "N": dim,
            "seed": seed,
            "components": comps,
            "antisymmetric_in_last_pair": antisymmetric,
            "traces_vanish": traces,
            "projection_is_zero": w.is_zero(),
            "weyl_is_zero": weyl.is_zero(),
        });
        return Ok((v.to_string(), ok));
    }
    let mut lines = vec![format!("N = {dim}, seed = {seed}")];
    for (mu, s) in &components {
        match s {
            Some(s) => lines.push(format!("reduced spectrum of {mu}: {s:?}")),
            None => lines.push(format!("{mu}: no such module for N = {dim}")),
        }
    }
    lines.push(format!("antisymmetric in the last pair: {antisymmetric}"));
    for (k, z) in &traces {
        lines.push(format!("{k} = 0: {z}"));
    }
    lines.push(format!("projected tensor is zero: {}", w.is_zero()));
    lines.push(format!("(2,2) part P_4 z^(2,2) R is zero: {}", weyl.is_zero()));
    Ok((lines.join("\n"), ok))
}
