//! The shipped fixture suite behind the `fixtures` subcommand: each check
//! recomputes a published or hand-derived value through the library.

use std::path::Path;

use serde::Serialize;
use serde_json::json;

use divfield_core::action::{classify_transvection_group, ActionDomain, GroupAction, PermModule};
use divfield_core::bounds::{
    self, asymptotic_constant, compositum_rootdisc, degree_bound, load_odlyzko, root_disc_cap, BoundQuery,
};
use divfield_core::discriminant::{
    ordinary_disc_bound, pdisc_symplectic, stem_disc_oracle, stem_disc_ord, tame_stem_disc, tame_theta_disc,
    tame_vector_disc, theta_fixed_count, theta_fixed_count_enumerated, OrdinaryKind, StemFieldProblem,
};
use divfield_core::fixtures::{s4_times_c2, s4_times_c2_center, tower_fixtures};
use divfield_core::group::{Perm, PermGroup};
use divfield_core::ramification::{
    c_m_values, conductor_exponent_abelian, exact_sequence_checks, induced_filtrations, is_fontaine, root_disc_ord,
    Filtration,
};
use divfield_core::symplectic::{theta_count, Parity, SymplecticSpace};
use divfield_core::{Rational, Result};

use crate::report::Report;
use crate::CliError;

/// Outcome of one fixture check.
#[derive(Serialize)]
pub struct Check {
    pub group: &'static str,
    pub name: String,
    pub expected: String,
    pub actual: String,
    pub status: &'static str,
}

struct Suite {
    only: Option<String>,
    checks: Vec<Check>,
}

impl Suite {
    fn wants(&self, group: &str) -> bool {
        self.only.as_deref().map_or(true, |o| o == group)
    }

    fn record(&mut self, group: &'static str, name: impl Into<String>, expected: impl ToString, actual: impl ToString) {
        let (expected, actual) = (expected.to_string(), actual.to_string());
        let status = if expected == actual { "pass" } else { "fail" };
        self.checks.push(Check { group, name: name.into(), expected, actual, status });
    }

    fn record_result<T: ToString>(&mut self, group: &'static str, name: impl Into<String>, expected: impl ToString, actual: Result<T>) {
        match actual {
            Ok(v) => self.record(group, name, expected, v),
            Err(e) => self.record(group, name, expected, format!("error: {e}")),
        }
    }

    fn close(&mut self, group: &'static str, name: impl Into<String>, expected: f64, actual: f64, tol: f64) {
        let status = if (expected - actual).abs() <= tol { "pass" } else { "fail" };
        self.checks.push(Check {
            group,
            name: name.into(),
            expected: format!("{expected:.6} ± {tol:e}"),
            actual: format!("{actual:.6}"),
            status,
        });
    }

    fn skip(&mut self, group: &'static str, name: impl Into<String>, expected: impl ToString, why: &str) {
        self.checks.push(Check { group, name: name.into(), expected: expected.to_string(), actual: why.into(), status: "skipped" });
    }
}

fn q(n: i64) -> Rational {
    Rational::from_integer(n)
}

fn theta_checks(s: &mut Suite) -> Result<()> {
    let mut cases: Vec<(u32, usize)> = (1..=4).map(|n| (2, n)).collect();
    cases.extend([(4, 1), (4, 2)]);
    for (qq, n) in cases {
        let space = SymplecticSpace::new(n, qq)?;
        for parity in [Parity::Odd, Parity::Even] {
            let enumerated = space.enumerate_theta(parity)?.len();
            s.record("theta", format!("|Θ{parity:?}| q={qq} n={n}"), theta_count(qq as u64, n as u32, parity), enumerated);
        }
    }
    s.record("theta", "odd thetas q=2 n=2", 6, theta_count(2, 2, Parity::Odd));
    for (qq, n) in [(2, 1), (2, 2), (2, 3), (4, 1), (4, 2)] {
        s.record_result("theta", format!("odd thetas fixed by a transvection q={qq} n={n}"), theta_fixed_count(qq, n)?, theta_fixed_count_enumerated(qq, n));
    }
    Ok(())
}

fn classify_checks(s: &mut Suite) -> Result<()> {
    for (n, expected) in [(1usize, "symplectic(2)/6"), (2, "symplectic(2)/720")] {
        let space = SymplecticSpace::new(n, 2)?;
        let c = classify_transvection_group(&space, &space.all_transvections()?)?;
        s.record("classify", format!("all transvections of F_2^{}", 2 * n), expected, format!("{}/{}", c.label, c.order));
    }
    for (m, expected) in [(5, "orthogonal-(2)/120"), (6, "symplectic(2)/720")] {
        let pm = PermModule::new(m)?;
        let c = classify_transvection_group(pm.space(), &pm.transposition_matrices()?)?;
        s.record("classify", format!("transpositions on the S_{m} permutation module"), expected, format!("{}/{}", c.label, c.order));
    }
    Ok(())
}

fn transvection_on_vectors() -> Result<StemFieldProblem> {
    let space = SymplecticSpace::new(2, 2)?;
    let action = GroupAction::new(&space, ActionDomain::NonzeroVectors)?;
    let g = action.compile_group(&space.all_transvections()?)?;
    let tau = action.compile(&space.tau(&space.basis(0))?)?;
    let i0 = PermGroup::generate(g.degree(), vec![tau])?;
    StemFieldProblem::new(g, 0, i0.clone(), vec![i0], Some(2))
}

fn stemdisc_checks(s: &mut Suite) -> Result<()> {
    let s3 = PermGroup::symmetric(3)?;
    let t = PermGroup::generate(3, vec![Perm::transposition(3, 0, 1)?])?;
    let p = StemFieldProblem::new(s3, 0, t.clone(), vec![t], Some(2))?;
    s.record("stemdisc", "S_3 with a transposition: orbit formula", q(1), stem_disc_ord::<Rational>(&p));
    s.record_result("stemdisc", "S_3 with a transposition: double cosets", q(1), stem_disc_oracle::<Rational>(&p).map(|o| o.value));
    let p = transvection_on_vectors()?;
    s.record("stemdisc", "transvection on F_2^4 \\ 0: orbit formula", q(4), stem_disc_ord::<Rational>(&p));
    s.record_result("stemdisc", "transvection on F_2^4 \\ 0: double cosets", q(4), stem_disc_oracle::<Rational>(&p).map(|o| o.value));
    s.record_result("stemdisc", "vector closed form q=2 s=4 t=1", q(4), tame_vector_disc::<Rational>(2, 4, 1, 2));
    for m in 2..=8u64 {
        for k in 1..=m / 2 {
            s.record_result("stemdisc", format!("S_{m} with {k} disjoint transpositions"), q(k as i64), tame_stem_disc::<Rational>(m, m - 2 * k, 2));
        }
    }
    s.record_result("stemdisc", "pdisc q=2 n=2 t=1 δ=1", q(1), pdisc_symplectic::<Rational>(2, 2, 1, 1));
    s.record_result("stemdisc", "pdisc q=2 n=1 t=1 δ=1", q(0), pdisc_symplectic::<Rational>(2, 1, 1, 1));
    s.record_result("stemdisc", "pdisc t=0 δ=0", q(0), pdisc_symplectic::<Rational>(2, 2, 0, 0));
    for (qq, n) in [(2u64, 1u32), (2, 2), (2, 3), (4, 1), (4, 2)] {
        let fixed = theta_fixed_count_enumerated(qq, n)?;
        s.record_result(
            "stemdisc",
            format!("pdisc t=1 against tame count on odd thetas q={qq} n={n}"),
            tame_theta_disc::<Rational>(qq, n, fixed)?,
            pdisc_symplectic::<Rational>(qq, n, 1, 1),
        );
    }
    for (kind, expected) in [
        (OrdinaryKind::Theta { q: 2, n: 2, epsilon: 1 }, 4),
        (OrdinaryKind::Symmetric { m: 5 }, 4),
        (OrdinaryKind::Symmetric { m: 8 }, 12),
    ] {
        s.record_result("stemdisc", format!("ordinary bound {kind:?}"), expected, ordinary_disc_bound(kind));
    }
    Ok(())
}

fn herbrand_checks(s: &mut Suite) -> Result<()> {
    let f = Filtration::new(2, vec![12, 4])?;
    let h = f.herbrand::<Rational>();
    for x in [q(0), q(1), Rational::new(3, 2), q(2), q(9)] {
        let expected = if x <= q(1) { x * q(4) / q(12) } else { (q(4) + (x - q(1))) / q(12) };
        s.record_result("herbrand", format!("φ_F({x})"), expected, h.phi(&x));
    }
    let cm = c_m_values::<Rational>(&f)?;
    s.record("herbrand", "c_F", "Some(1)", format!("{:?}", cm.c));
    s.record("herbrand", "m_F", q(9), cm.m);
    s.record_result("herbrand", "F is Fontaine", true, is_fontaine::<Rational>(&f));
    let mut orders = vec![24, 8];
    orders.extend([2; 8]);
    let e = Filtration::new(2, orders)?;
    let cm = c_m_values::<Rational>(&e)?;
    s.record("herbrand", "c_E", "Some(9)", format!("{:?}", cm.c));
    s.record("herbrand", "m_E", q(9), cm.m);
    s.record_result("herbrand", "E is Fontaine", true, is_fontaine::<Rational>(&e));
    let wild = Filtration::new(2, vec![2, 2, 2])?;
    s.record_result("herbrand", "orders 2,2,2 are not Fontaine", false, is_fontaine::<Rational>(&wild));
    let qi = Filtration::new(2, vec![2, 2])?;
    s.record_result("herbrand", "conductor of 2,2", q(2), conductor_exponent_abelian::<Rational>(&qi).map(|c| c.value));
    s.record_result("herbrand", "root discriminant exponent of 2,2 with e=2", q(1), root_disc_ord::<Rational>(&qi, 2));
    s.record_result("herbrand", "conductor of a tame filtration", q(1), conductor_exponent_abelian::<Rational>(&Filtration::new(2, vec![3])?).map(|c| c.value));
    Ok(())
}

fn tower_checks(s: &mut Suite) -> Result<()> {
    let f = s4_times_c2()?;
    let induced = induced_filtrations::<Rational>(&f, &s4_times_c2_center()?)?;
    s.record("towers", "S_4 × C_2 modulo its center", "12,4", induced.quotient.render());
    let towers = tower_fixtures()?;
    s.record("towers", "at least 20 towers", true, towers.len() >= 20);
    for t in &towers {
        let outcome = exact_sequence_checks::<Rational>(&t.filtration, &t.subgroup).map(|cs| cs.iter().all(|c| c.holds));
        s.record_result("towers", format!("exact sequence: {}", t.name), true, outcome);
    }
    Ok(())
}

fn bound_checks(s: &mut Suite, table: Option<&Path>) -> std::result::Result<(), CliError> {
    let lib = |e| CliError::Compute(format!("{e}"));
    for n in [1u64, 3, 5, 7, 11, 127] {
        let cap = root_disc_cap::<f64>(&BoundQuery::new(2, n, false).map_err(lib)?).cap;
        s.close("bound", format!("cap ℓ=2 N={n} is 4√N"), 4.0 * (n as f64).sqrt(), cap, 1e-6);
    }
    for &(ell, printed, _) in &bounds::TABLE_ELL_ONE {
        let cap = root_disc_cap::<f64>(&BoundQuery::new(ell, 1, true).map_err(lib)?).cap;
        s.close("bound", format!("printed cap for ℓ={ell}"), printed, cap, 1e-3);
    }
    let rho = compositum_rootdisc::<f64>(&bounds::N127_FIXTURE).map_err(lib)?;
    s.record("bound", "ord_2 ρ for N=127", "255/128", rho.ord_ell);
    s.close("bound", "ρ for N=127", 44.834, rho.rho, 1e-3);
    s.close("bound", "asymptotic constant", 44.763, asymptotic_constant::<f64>(), 1e-3);
    for (n, degree, efg) in bounds::ray_class_consistency() {
        s.record("bound", format!("ray class data N={n}: e·f·g = degree"), degree, efg);
    }
    let rows = load_odlyzko(table).map_err(|e| CliError::Data(e.to_string()))?;
    match rows {
        Some(rows) => {
            let rows: Vec<_> = rows.into_iter().filter(|r| r.grh).collect();
            for &(n, expected) in &bounds::TABLE_TWO_N {
                let cap = root_disc_cap::<f64>(&BoundQuery::new(2, n, true).map_err(lib)?).cap;
                let got = degree_bound(&rows, cap).value().map_or("none".to_string(), |v| v.to_string());
                s.record("table2", format!("degree bound N={n}"), expected, got);
            }
        }
        None => {
            for &(n, expected) in &bounds::TABLE_TWO_N {
                s.skip("table2", format!("degree bound N={n}"), expected, "requires external Odlyzko GRH table");
            }
        }
    }
    Ok(())
}

/// Runs the suite, optionally restricted to one group
/// (`theta`, `classify`, `stemdisc`, `herbrand`, `towers`, `bound`, `table2`).
pub fn run_fixtures(only: Option<&str>, table: Option<&Path>) -> std::result::Result<(Report, bool), CliError> {
    const GROUPS: [&str; 7] = ["theta", "classify", "stemdisc", "herbrand", "towers", "bound", "table2"];
    if let Some(o) = only {
        if !GROUPS.contains(&o) {
            return Err(CliError::Usage(format!("unknown fixture group `{o}`; expected one of {}", GROUPS.join(", "))));
        }
    }
    let mut s = Suite { only: only.map(str::to_string), checks: Vec::new() };
    let lib = |e: divfield_core::Error| CliError::Compute(e.to_string());
    if s.wants("theta") {
        theta_checks(&mut s).map_err(lib)?;
    }
    if s.wants("classify") {
        classify_checks(&mut s).map_err(lib)?;
    }
    if s.wants("stemdisc") {
        stemdisc_checks(&mut s).map_err(lib)?;
    }
    if s.wants("herbrand") {
        herbrand_checks(&mut s).map_err(lib)?;
    }
    if s.wants("towers") {
        tower_checks(&mut s).map_err(lib)?;
    }
    if s.wants("bound") || s.wants("table2") {
        bound_checks(&mut s, table)?;
        if let Some(o) = only {
            s.checks.retain(|c| c.group == o);
        }
    }
    let count = |st: &str| s.checks.iter().filter(|c| c.status == st).count();
    let (passed, failed, skipped) = (count("pass"), count("fail"), count("skipped"));
    let report = Report::new(
        json!({"only": only, "table": table.map(|p| p.display().to_string())}),
        json!({"passed": passed, "failed": failed, "skipped": skipped, "checks": s.checks}),
        "published values and hand-derived values recomputed through the library",
    );
    Ok((report, failed == 0))
}
