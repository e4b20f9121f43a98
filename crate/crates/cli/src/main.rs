//! `divfield`: command-line front end for the divfield-core library.
//!
//! Exit codes: 0 success, 1 computation failure, 2 usage error, 3 data
//! file parse error, 4 oracle or fixture mismatch.

mod paper;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use divfield_core::action::{classify_transvection_group, PermModule};
use divfield_core::bounds::{
    self, asymptotic_constant, compositum_rootdisc, degree_bound, load_odlyzko, read_compositum_csv, refine_tame,
    root_disc_cap, BoundQuery, CompositumFixture,
};
use divfield_core::discriminant::{
    ordinary_disc_bound, parse_problems, pdisc_symplectic, stem_disc_oracle, stem_disc_ord, tame_stem_disc,
    tame_vector_disc, theta_fixed_count, theta_fixed_count_enumerated, OrdinaryKind,
};
use divfield_core::field::FieldElem;
use divfield_core::linalg::SympVector;
use divfield_core::ramification::{
    bound_propagation, c_m_values, conductor_exponent_abelian, fontaine_root_disc_bound, is_fontaine, root_disc_ord,
    Filtration, Profile,
};
use divfield_core::symplectic::{theta_count, Parity, SymplecticSpace, ThetaChar};
use divfield_core::{Error, Rational};

use report::{round, Format, Report};

#[derive(Parser)]
#[command(name = "divfield", version, about = "Discriminant exponents, theta characteristics, Herbrand functions and degree bounds")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value = "json", global = true)]
    format: Format,
    /// Decimal places for real-valued output.
    #[arg(long, default_value_t = 4, global = true)]
    digits: u32,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Theta characteristics: counts, listings, Arf invariants.
    Theta(ThetaArgs),
    /// Identify a group generated by symplectic transvections.
    Classify(ClassifyArgs),
    /// Stem-field discriminant exponents and their closed forms.
    Stemdisc(StemArgs),
    /// Herbrand function of a ramification filtration.
    Herbrand(HerbrandArgs),
    /// Root-discriminant caps and degree bounds.
    Bound(BoundArgs),
    /// Run the shipped fixtures and report pass/fail per check.
    Fixtures(FixtureArgs),
}

#[derive(Args)]
struct ThetaArgs {
    #[arg(long)]
    q: u32,
    #[arg(long)]
    n: usize,
    #[arg(long, default_value = "all")]
    parity: Parity,
    /// Closed-form count checked against enumeration (default).
    #[arg(long, conflicts_with_all = ["list", "arf"])]
    count: bool,
    /// List shift vectors with their Arf invariants.
    #[arg(long, conflicts_with = "arf")]
    list: bool,
    /// Arf invariant of `theta_0 + a` for a shift vector `a` (e.g. `0110`).
    #[arg(long, value_name = "SHIFT")]
    arf: Option<String>,
}

#[derive(Args)]
struct ClassifyArgs {
    #[arg(long)]
    q: Option<u32>,
    #[arg(long)]
    n: Option<usize>,
    /// Use every transvection of the space.
    #[arg(long)]
    all: bool,
    /// Transvections `z[:a]`, comma-separated vectors `z` as digit strings,
    /// separated by spaces or semicolons, e.g. `1000;0100:2`.
    #[arg(long, value_name = "LIST")]
    transvections: Option<String>,
    /// Transpositions acting on the permutation module of `S_m` (q = 2).
    #[arg(long, value_name = "M")]
    perm_module: Option<usize>,
}

#[derive(Args)]
struct StemArgs {
    /// Problem file (see the discriminant module for the format).
    #[arg(long)]
    file: Option<PathBuf>,
    /// Also evaluate the double-coset sum and fail on mismatch.
    #[arg(long)]
    check: bool,
    /// `(1 − 1/ℓ)(|X| − |X^I|)`: `X,FIXED,ELL`.
    #[arg(long, value_name = "X,FIXED,ELL")]
    tame: Option<String>,
    /// Tame exponent on nonzero vectors: `Q,S,T,ELL`.
    #[arg(long, value_name = "Q,S,T,ELL")]
    vectors: Option<String>,
    /// Closed form for an involution with invariants `(t, δ)`: `Q,N,T,DELTA`.
    #[arg(long, value_name = "Q,N,T,DELTA")]
    pdisc: Option<String>,
    /// Odd thetas fixed by a transvection: `Q,N`.
    #[arg(long, value_name = "Q,N")]
    theta_fixed: Option<String>,
    /// Bound for ordinary inertia: `theta:Q,N,EPS` or `symmetric:M`.
    #[arg(long, value_name = "KIND")]
    ordinary: Option<String>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
enum HerbrandQuery {
    Phi,
    Psi,
    Upper,
    C,
    M,
    Fontaine,
    Conductor,
    Rootdisc,
    Propagate,
    Remark,
    All,
}

#[derive(Args)]
struct HerbrandArgs {
    /// Orders `|G_0|,|G_1|,…`; `2x8` repeats; trailing 1 implied.
    #[arg(long, required_unless_present_any = ["t_ef"])]
    profile: Option<String>,
    #[arg(long, default_value_t = 2)]
    ell: u64,
    #[arg(long, value_enum, default_value = "all")]
    query: HerbrandQuery,
    /// Argument of φ, ψ or the upper numbering (e.g. `9/2`).
    #[arg(long)]
    at: Option<String>,
    /// Absolute ramification degree (defaults to `|G_0|`).
    #[arg(long)]
    e: Option<u64>,
    /// Tame degree `t_{E/F}` for `propagate` and `remark`.
    #[arg(long)]
    t_ef: Option<u64>,
    /// `m_F` for `propagate`.
    #[arg(long)]
    m_f: Option<String>,
    /// `c_F` for `propagate` and `remark`.
    #[arg(long)]
    c_f: Option<u64>,
}

#[derive(Args)]
struct BoundArgs {
    /// Root-discriminant cap for `(ℓ, N)`.
    #[arg(long)]
    cap: bool,
    /// Degree bound from an Odlyzko table.
    #[arg(long)]
    degree: bool,
    /// Tame refinement for `N = 1`.
    #[arg(long)]
    refine: bool,
    /// Root discriminant of a compositum fixture.
    #[arg(long)]
    compositum: bool,
    /// The asymptotic constant `8π e^γ`.
    #[arg(long)]
    asymptotic: bool,
    /// The shipped tables with their consistency checks.
    #[arg(long)]
    tables: bool,
    #[arg(long, default_value_t = 2)]
    ell: u64,
    #[arg(long = "N", default_value_t = 1)]
    n: u64,
    /// Use GRH-conditional rows.
    #[arg(long)]
    grh: bool,
    /// Odlyzko CSV (`b,B,E,grh`); defaults to `$DIVFIELD_DATA_DIR/odlyzko.csv`.
    #[arg(long)]
    table: Option<PathBuf>,
    /// Explicit cap for `--degree` instead of the `(ℓ, N)` cap.
    #[arg(long)]
    rho: Option<f64>,
    /// Compositum record `ELL,N,E,C,T`.
    #[arg(long, value_name = "ELL,N,E,C,T")]
    fixture: Option<String>,
    /// CSV of compositum records (`ell,N,e,c,t`).
    #[arg(long)]
    fixtures_file: Option<PathBuf>,
}

#[derive(Args)]
struct FixtureArgs {
    /// Run only checks whose group matches.
    #[arg(long)]
    only: Option<String>,
    /// Odlyzko CSV for the table-gated checks.
    #[arg(long)]
    table: Option<PathBuf>,
}

/// Failure modes mapped to exit codes.
#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Data(String),
    Compute(String),
    Mismatch(String, Box<Report>),
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            CliError::Compute(_) => 1,
            CliError::Usage(_) => 2,
            CliError::Data(_) => 3,
            CliError::Mismatch(..) => 4,
        }
    }
}

impl std::fmt::Debug for Report {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.provenance)
    }
}

fn from_lib(e: Error) -> CliError {
    match e {
        Error::Parse(m) => CliError::Data(m),
        Error::Resource { .. } | Error::Capability(_) => CliError::Compute(e.to_string()),
        other => CliError::Usage(other.to_string()),
    }
}

fn from_data(e: Error) -> CliError {
    match e {
        Error::Resource { .. } | Error::Capability(_) => CliError::Compute(e.to_string()),
        other => CliError::Data(other.to_string()),
    }
}

type CliResult<T> = std::result::Result<T, CliError>;

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

fn parse_list<T: std::str::FromStr>(s: &str, len: usize, what: &str) -> CliResult<Vec<T>> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    if parts.len() != len {
        return Err(usage(format!("{what} expects {len} comma-separated values, got `{s}`")));
    }
    parts.iter().map(|p| p.parse::<T>().map_err(|_| usage(format!("bad value `{p}` in {what}")))).collect()
}

fn parse_rational(s: &str) -> CliResult<Rational> {
    s.trim().parse::<Rational>().map_err(|_| usage(format!("`{s}` is not a rational number")))
}

fn parse_vector(space: &SymplecticSpace, s: &str) -> CliResult<SympVector> {
    let values: Vec<u8> = if s.contains(',') {
        s.split(',').map(|d| d.trim().parse::<u8>().map_err(|_| usage(format!("bad coordinate `{d}`")))).collect::<CliResult<_>>()?
    } else {
        s.chars().map(|c| c.to_digit(10).map(|d| d as u8).ok_or_else(|| usage(format!("bad coordinate `{c}`")))).collect::<CliResult<_>>()?
    };
    space.vector(&values).map_err(from_lib)
}

fn run_theta(a: &ThetaArgs) -> CliResult<Report> {
    let space = SymplecticSpace::new(a.n, a.q).map_err(from_lib)?;
    let input = json!({"q": a.q, "n": a.n, "parity": a.parity});
    if let Some(shift) = &a.arf {
        let theta = ThetaChar::with_shift(parse_vector(&space, shift)?);
        let arf = space.arf(&theta).map_err(from_lib)?;
        return Ok(Report::new(
            json!({"q": a.q, "n": a.n, "shift": shift}),
            json!({"arf": arf, "parity": if arf == 1 { "odd" } else { "even" }}),
            "Arf invariant Σ θ(e_i)θ(f_i) reduced modulo the Artin–Schreier image",
        ));
    }
    let thetas = space.enumerate_theta(a.parity).map_err(from_lib)?;
    if a.list {
        let items: Vec<Value> = thetas
            .iter()
            .map(|t| Ok(json!({"shift": t.shift().render(), "arf": space.arf(t)?})))
            .collect::<divfield_core::Result<_>>()
            .map_err(from_lib)?;
        return Ok(Report::new(input, items, "enumeration of θ_0 + a over all shifts a"));
    }
    let closed = theta_count(a.q as u64, a.n as u32, a.parity);
    if closed != thetas.len() as u64 {
        return Err(CliError::Mismatch(
            "closed-form count differs from enumeration".into(),
            Box::new(Report::new(input, json!({"closed_form": closed, "enumerated": thetas.len()}), "")),
        ));
    }
    Ok(Report::new(input, closed, "½ q^n (q^n ± 1) theta characteristics, confirmed by enumeration"))
}

fn run_classify(a: &ClassifyArgs) -> CliResult<Report> {
    let (space, gens, input) = if let Some(m) = a.perm_module {
        let pm = PermModule::new(m).map_err(from_lib)?;
        let gens = pm.transposition_matrices().map_err(from_lib)?;
        (pm.space().clone(), gens, json!({"perm_module": m}))
    } else {
        let (Some(q), Some(n)) = (a.q, a.n) else {
            return Err(usage("classify needs --q and --n, or --perm-module"));
        };
        let space = SymplecticSpace::new(n, q).map_err(from_lib)?;
        let gens = if a.all {
            space.all_transvections().map_err(from_lib)?
        } else if let Some(list) = &a.transvections {
            list.split([';', ' '])
                .filter(|s| !s.is_empty())
                .map(|item| {
                    let (z, c) = item.split_once(':').unwrap_or((item, "1"));
                    let z = parse_vector(&space, z)?;
                    let c: u32 = c.parse().map_err(|_| usage(format!("bad scalar `{c}`")))?;
                    let c: FieldElem = space.field().elem(c).map_err(from_lib)?;
                    space.transvection(&z, c).map_err(from_lib)
                })
                .collect::<CliResult<Vec<_>>>()?
        } else {
            return Err(usage("classify needs --all, --transvections or --perm-module"));
        };
        let input = json!({"q": q, "n": n, "generators": gens.len()});
        (space, gens, input)
    };
    let c = classify_transvection_group(&space, &gens).map_err(from_lib)?;
    Ok(Report::new(
        input,
        json!({"label": c.label.to_string(), "order": c.order, "irreducible": c.irreducible, "fixed_theta": c.fixed_theta}),
        "group order, irreducibility by spinning, and stabilized theta characteristic compared with |Sp|, |O^±| and |S_m|",
    ))
}

fn run_stemdisc(a: &StemArgs) -> CliResult<Report> {
    let modes = [a.file.is_some(), a.tame.is_some(), a.vectors.is_some(), a.pdisc.is_some(), a.theta_fixed.is_some(), a.ordinary.is_some()];
    if modes.iter().filter(|&&m| m).count() != 1 {
        return Err(usage("stemdisc needs exactly one of --file, --tame, --vectors, --pdisc, --theta-fixed, --ordinary"));
    }
    if let Some(path) = &a.file {
        let text = std::fs::read_to_string(path).map_err(|e| CliError::Data(format!("{}: {e}", path.display())))?;
        let records = parse_problems(&text).map_err(from_data)?;
        let mut results = Vec::new();
        let mut mismatch = false;
        for (i, r) in records.iter().enumerate() {
            let value: Rational = stem_disc_ord(&r.problem);
            let mut entry = json!({
                "name": r.name.clone().unwrap_or_else(|| format!("#{}", i + 1)),
                "degree": r.problem.degree(),
                "ord": value.to_string(),
                "integral": value.is_integer(),
            });
            if a.check {
                let oracle = stem_disc_oracle::<Rational>(&r.problem).map_err(from_lib)?;
                entry["oracle"] = json!(oracle.value.to_string());
                entry["primes"] = serde_json::to_value(
                    oracle.primes.iter().map(|p| json!({"representative": p.representative, "e": p.e, "f": p.f, "x": p.x.to_string()})).collect::<Vec<_>>(),
                )
                .expect("json");
                entry["agrees"] = json!(oracle.value == value);
                mismatch |= oracle.value != value;
            }
            results.push(entry);
        }
        let report = Report::new(
            json!({"file": path.display().to_string(), "check": a.check}),
            results,
            "Σ_m (|X| − |I_m\\X|)/[I_0:I_m]; with --check also Σ over double cosets HgD of x·f",
        );
        if mismatch {
            return Err(CliError::Mismatch("orbit formula and double-coset sum disagree".into(), Box::new(report)));
        }
        return Ok(report);
    }
    if let Some(s) = &a.tame {
        let v: Vec<u64> = parse_list(s, 3, "--tame")?;
        let r: Rational = tame_stem_disc(v[0], v[1], v[2]).map_err(from_lib)?;
        return Ok(Report::new(json!({"x": v[0], "fixed": v[1], "ell": v[2]}), r.to_string(), "(1 − 1/ℓ)(|X| − |X^I|)"));
    }
    if let Some(s) = &a.vectors {
        let v: Vec<u64> = parse_list(s, 4, "--vectors")?;
        let r: Rational = tame_vector_disc(v[0], v[1] as u32, v[2] as u32, v[3]).map_err(from_lib)?;
        return Ok(Report::new(json!({"q": v[0], "s": v[1], "t": v[2], "ell": v[3]}), r.to_string(), "(1 − 1/ℓ)(q^s − q^{s−t})"));
    }
    if let Some(s) = &a.pdisc {
        let v: Vec<u64> = parse_list(s, 4, "--pdisc")?;
        let r: Rational = pdisc_symplectic(v[0], v[1] as u32, v[2] as u32, v[3] as u8).map_err(from_lib)?;
        return Ok(Report::new(json!({"q": v[0], "n": v[1], "t": v[2], "delta": v[3]}), r.to_string(), "¼ q^n (q^n − q^{n−t} − δ)"));
    }
    if let Some(s) = &a.theta_fixed {
        let v: Vec<u64> = parse_list(s, 2, "--theta-fixed")?;
        let closed = theta_fixed_count(v[0], v[1] as u32).map_err(from_lib)?;
        let enumerated = theta_fixed_count_enumerated(v[0], v[1] as u32).map_err(from_lib)?;
        let report = Report::new(
            json!({"q": v[0], "n": v[1]}),
            json!({"closed_form": closed, "enumerated": enumerated}),
            "½ q^{2n−1} odd thetas fixed by a transvection, against enumeration",
        );
        if closed != enumerated {
            return Err(CliError::Mismatch("fixed-theta count differs from enumeration".into(), Box::new(report)));
        }
        return Ok(report);
    }
    let s = a.ordinary.as_deref().expect("one mode is set");
    let kind = match s.split_once(':') {
        Some(("theta", rest)) => {
            let v: Vec<u64> = parse_list(rest, 3, "--ordinary theta")?;
            OrdinaryKind::Theta { q: v[0], n: v[1] as u32, epsilon: v[2] as u8 }
        }
        Some(("symmetric", rest)) => OrdinaryKind::Symmetric { m: rest.trim().parse().map_err(|_| usage(format!("bad m `{rest}`")))? },
        _ => return Err(usage(format!("--ordinary expects theta:Q,N,EPS or symmetric:M, got `{s}`"))),
    };
    let bound = ordinary_disc_bound(kind).map_err(from_lib)?;
    Ok(Report::new(serde_json::to_value(kind).expect("json"), bound, "(q^n − 2)(q^n − 1 − ε), or 2⌊m/2⌋ (3m/2 for m = 4, 8)"))
}

fn run_herbrand(a: &HerbrandArgs) -> CliResult<Report> {
    use HerbrandQuery as Hq;
    if a.query == Hq::Propagate {
        let (Some(t), Some(m), Some(c)) = (a.t_ef, a.m_f.as_deref(), a.c_f) else {
            return Err(usage("propagate needs --t-ef, --m-f and --c-f"));
        };
        let (m_e, c_e) = bound_propagation(t, &parse_rational(m)?, c).map_err(from_lib)?;
        return Ok(Report::new(
            json!({"t_ef": t, "m_f": m, "c_f": c}),
            json!({"m_e_lower": m_e.to_string(), "c_e_lower": c_e}),
            "m_E ≥ t_{E/F} m_F and c_E ≥ t_{E/F} c_F",
        ));
    }
    if a.query == Hq::Remark {
        let (Some(t), Some(c), Some(e)) = (a.t_ef, a.c_f, a.e) else {
            return Err(usage("remark needs --t-ef, --c-f and --e"));
        };
        let b: Rational = fontaine_root_disc_bound(a.ell, t, c, e).map_err(from_lib)?;
        return Ok(Report::new(
            json!({"ell": a.ell, "t_ef": t, "c_f": c, "e": e}),
            b.to_string(),
            "ord_ℓ(ρ) ≤ 1 + 1/(ℓ−1) − (t·c_F + 1)/e",
        ));
    }
    let profile_text = a.profile.as_deref().ok_or_else(|| usage("--profile is required"))?;
    let profile: Profile = profile_text.parse().map_err(|e: Error| usage(e.to_string()))?;
    let f = Filtration::new(a.ell, profile.0).map_err(from_lib)?;
    let h = f.herbrand::<Rational>();
    let at = a.at.as_deref().map(parse_rational).transpose()?;
    let need_at = || at.ok_or_else(|| usage("this query needs --at"));
    let input = json!({"profile": f.render(), "ell": a.ell, "query": format!("{:?}", a.query).to_lowercase(), "at": a.at});
    let cm = c_m_values::<Rational>(&f).map_err(from_lib)?;
    let (result, provenance): (Value, &str) = match a.query {
        Hq::Phi => (json!(h.phi(&need_at()?).map_err(from_lib)?.to_string()), "φ(x) = (|G_1|+…+|G_m|+(x−m)|G_{m+1}|)/|G_0|"),
        Hq::Psi => (json!(h.psi(&need_at()?).map_err(from_lib)?.to_string()), "ψ = φ^{-1}"),
        Hq::Upper => {
            let (idx, order) = h.upper_numbering(&need_at()?).map_err(from_lib)?;
            (json!({"lower_index": idx, "order": order}), "G^u = G_{⌈ψ(u)⌉}")
        }
        Hq::C => (json!(cm.c), "largest c with G_c ≠ 1"),
        Hq::M => (json!(cm.m.to_string()), "m = ψ(1/(ℓ−1))"),
        Hq::Fontaine => (json!(is_fontaine::<Rational>(&f).map_err(from_lib)?), "c ≤ m"),
        Hq::Conductor => {
            let c = conductor_exponent_abelian::<Rational>(&f).map_err(from_lib)?;
            (json!({"value": c.value.to_string(), "integral": c.integral}), "φ(c) + 1")
        }
        Hq::Rootdisc => {
            let e = a.e.unwrap_or(f.order(0));
            (json!(root_disc_ord::<Rational>(&f, e).map_err(from_lib)?.to_string()), "ord_ℓ(ρ) = 1 + φ(c) − (c+1)/e")
        }
        Hq::All => {
            let cond = conductor_exponent_abelian::<Rational>(&f).map_err(from_lib)?;
            let mut out = json!({
                "c": cm.c,
                "m": cm.m.to_string(),
                "t": f.tame_degree(),
                "fontaine": is_fontaine::<Rational>(&f).map_err(from_lib)?,
                "conductor": cond.value.to_string(),
                "conductor_integral": cond.integral,
                "rootdisc_ord": root_disc_ord::<Rational>(&f, a.e.unwrap_or(f.order(0))).map_err(from_lib)?.to_string(),
                "breakpoints": h.breakpoints().map(|(k, v)| json!([k, v.to_string()])).collect::<Vec<_>>(),
            });
            if let Some(x) = at {
                out["phi"] = json!(h.phi(&x).map_err(from_lib)?.to_string());
                out["psi"] = json!(h.psi(&x).map_err(from_lib)?.to_string());
                out["upper_order"] = json!(h.upper_numbering(&x).map_err(from_lib)?.1);
            }
            (out, "φ, ψ, c, m = ψ(1/(ℓ−1)), conductor φ(c)+1, root discriminant 1 + φ(c) − (c+1)/e")
        }
        Hq::Propagate | Hq::Remark => unreachable!(),
    };
    Ok(Report::new(input, result, provenance))
}

fn run_bound(a: &BoundArgs, digits: u32) -> CliResult<Report> {
    let modes = [a.cap, a.degree, a.refine, a.compositum, a.asymptotic, a.tables];
    if modes.iter().filter(|&&m| m).count() != 1 {
        return Err(usage("bound needs exactly one of --cap, --degree, --refine, --compositum, --asymptotic, --tables"));
    }
    let query_input = json!({"ell": a.ell, "N": a.n, "grh": a.grh});
    if a.cap {
        let q = BoundQuery::new(a.ell, a.n, a.grh).map_err(from_lib)?;
        let c = root_disc_cap::<f64>(&q);
        return Ok(Report::new(
            query_input,
            json!({"cap": round(c.cap, digits), "ell_exponent": round(c.ell_exponent, digits), "prime_exponent": round(c.prime_exponent, digits)}),
            "ρ < ℓ^{1+1/(ℓ−1)} N^{1−1/ℓ}",
        ));
    }
    if a.asymptotic {
        return Ok(Report::new(json!({}), round(asymptotic_constant::<f64>(), digits), "8π e^γ"));
    }
    if a.compositum {
        let fixtures: Vec<CompositumFixture> = match (&a.fixture, &a.fixtures_file) {
            (Some(s), None) => {
                let v: Vec<u64> = parse_list(s, 5, "--fixture")?;
                vec![CompositumFixture { ell: v[0], n: v[1], e: v[2], c: v[3], t: v[4] }]
            }
            (None, Some(path)) => {
                let file = std::fs::File::open(path).map_err(|e| CliError::Data(format!("{}: {e}", path.display())))?;
                read_compositum_csv(file).map_err(from_data)?
            }
            (None, None) => vec![bounds::N127_FIXTURE],
            _ => return Err(usage("give at most one of --fixture and --fixtures-file")),
        };
        let results = fixtures
            .iter()
            .map(|fx| {
                let r = compositum_rootdisc::<f64>(fx)?;
                Ok(json!({"fixture": fx, "ord_ell": r.ord_ell, "rho": round(r.rho, digits)}))
            })
            .collect::<divfield_core::Result<Vec<_>>>()
            .map_err(from_lib)?;
        return Ok(Report::new(json!({"count": fixtures.len()}), results, "ρ = ℓ^{1+φ(c)−(c+1)/e} Π_{p|N} p^{1−1/ℓ}"));
    }
    if a.tables {
        let ell_one: Vec<Value> = bounds::TABLE_ELL_ONE
            .iter()
            .map(|&(ell, printed, m)| {
                let cap = root_disc_cap::<f64>(&BoundQuery::new(ell, 1, true).expect("prime")).cap;
                json!({"ell": ell, "printed_cap": printed, "cap": round(cap, digits), "agrees": (cap - printed).abs() <= 1e-3, "m": m})
            })
            .collect();
        let ray: Vec<Value> = bounds::ray_class_consistency()
            .iter()
            .map(|&(n, degree, efg)| json!({"N": n, "degree": degree, "efg": efg, "agrees": degree == efg}))
            .collect();
        return Ok(Report::new(
            json!({}),
            json!({"ell_one": ell_one, "ray_class": ray, "two_n": bounds::TABLE_TWO_N.iter().map(|&(n, b)| json!([n, b])).collect::<Vec<_>>()}),
            "shipped tables; caps recomputed as ℓ^{1+1/(ℓ−1)}, e·f·g against |Gal(E_1/E)|·2^{1+ω(N)}",
        ));
    }
    let rows = load_odlyzko(a.table.as_deref())
        .map_err(from_data)?
        .ok_or_else(|| usage(format!("no Odlyzko table: pass --table or set {}", bounds::DATA_DIR_ENV)))?;
    let rows: Vec<_> = rows.into_iter().filter(|r| a.grh || !r.grh).collect();
    if a.refine {
        let r = refine_tame(a.ell, &rows).map_err(from_lib)?;
        return Ok(Report::new(
            json!({"ell": a.ell, "grh": a.grh, "rows": rows.len()}),
            json!({
                "initial_m": r.initial_m,
                "final_m": r.final_m,
                "refined": r.refined,
                "steps": r.steps.iter().map(|s| json!({"cap": round(s.cap, digits), "degree_bound": s.degree_bound, "m": s.m})).collect::<Vec<_>>(),
            }),
            "M = ⌊n/(ℓ−1)⌋; while M < ℓ use the tame cap ℓ^{1−1/((ℓ−1)M)}",
        ));
    }
    let rho = match a.rho {
        Some(r) => r,
        None => root_disc_cap::<f64>(&BoundQuery::new(a.ell, a.n, a.grh).map_err(from_lib)?).cap,
    };
    let bound = degree_bound(&rows, rho);
    let mut input = query_input;
    input["rho"] = json!(round(rho, digits));
    input["rows"] = json!(rows.len());
    Ok(Report::new(input, bound, "n ≤ ⌊min E / log(B/ρ)⌋ over rows with B > ρ"))
}

fn run() -> CliResult<(String, bool)> {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let is_usage = e.use_stderr();
            let _ = e.print();
            if is_usage {
                return Err(CliError::Usage(String::new()));
            }
            return Ok((String::new(), true));
        }
    };
    let report = match &cli.command {
        Command::Theta(a) => run_theta(a),
        Command::Classify(a) => run_classify(a),
        Command::Stemdisc(a) => run_stemdisc(a),
        Command::Herbrand(a) => run_herbrand(a),
        Command::Bound(a) => run_bound(a, cli.digits),
        Command::Fixtures(a) => {
            let (report, ok) = paper::run_fixtures(a.only.as_deref(), a.table.as_deref())?;
            if !ok {
                return Err(CliError::Mismatch("fixture mismatch".into(), Box::new(report)));
            }
            Ok(report)
        }
    };
    match report {
        Ok(r) => Ok((r.render(cli.format), true)),
        Err(CliError::Mismatch(msg, r)) => {
            print!("{}", r.render(cli.format));
            Err(CliError::Mismatch(msg, r))
        }
        Err(e) => Err(e),
    }
}

fn main() -> ExitCode {
    match run() {
        Ok((out, _)) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            match &e {
                CliError::Usage(m) | CliError::Data(m) | CliError::Compute(m) | CliError::Mismatch(m, _) => {
                    if !m.is_empty() {
                        eprintln!("error: {m}");
                    }
                }
            }
            ExitCode::from(e.code())
        }
    }
}
