//! Root-discriminant caps for extensions with controlled ramification,
//! degree bounds from Odlyzko-style `(b, B, E)` rows, and the root
//! discriminant of a compositum with prescribed local filtration.
//!
//! Real arithmetic is generic over [`RealScalar`]. Odlyzko's tables are not
//! shipped; they are read from a user-supplied CSV file with header
//! `b,B,E,grh`.

use std::io::Read;
use std::path::{Path, PathBuf};

use num_integer::Integer;
use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ramification::{is_prime, root_disc_ord, Filtration};
use crate::scalar::{ExactScalar, RealScalar};

/// Environment variable naming the default data directory.
pub const DATA_DIR_ENV: &str = "DIVFIELD_DATA_DIR";

/// File name of the Odlyzko table inside the data directory.
pub const ODLYZKO_FILE: &str = "odlyzko.csv";

/// Euler's constant.
pub const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;

/// Guard added before flooring a degree bound, against rounding at integers.
pub const FLOOR_GUARD: f64 = 1e-9;

/// One row: `ρ_L > B e^{−E/n}` for every number field `L` of degree `n`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct OdlyzkoRow<T> {
    pub b: T,
    pub big_b: T,
    pub e: T,
    pub grh: bool,
}

impl<T: RealScalar> OdlyzkoRow<T> {
    pub fn new(b: T, big_b: T, e: T, grh: bool) -> Result<Self> {
        if !(big_b > T::one()) || !(e > T::zero()) {
            return Err(Error::InvalidInput(format!("row needs B > 1 and E > 0, got B = {big_b}, E = {e}")));
        }
        Ok(OdlyzkoRow { b, big_b, e, grh })
    }
}

/// `ℓ`, `N` (coprime to `ℓ`) and whether GRH-conditional rows may be used.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct BoundQuery {
    pub ell: u64,
    pub n: u64,
    pub grh: bool,
}

impl BoundQuery {
    pub fn new(ell: u64, n: u64, grh: bool) -> Result<Self> {
        if !is_prime(ell) {
            return Err(Error::InvalidInput(format!("{ell} is not prime")));
        }
        if n == 0 || n.gcd(&ell) != 1 {
            return Err(Error::InvalidInput(format!("N = {n} must be positive and prime to ℓ = {ell}")));
        }
        Ok(BoundQuery { ell, n, grh })
    }
}

/// Exponent caps `ord_p(ρ) ≤ 1 − 1/ℓ` for `p | N`, `ord_ℓ(ρ) < 1 + 1/(ℓ−1)`,
/// and the resulting multiplicative cap `ℓ^{1+1/(ℓ−1)} N^{1−1/ℓ}`.
#[derive(Clone, Debug, Serialize)]
pub struct RootDiscCap<T> {
    pub cap: T,
    pub ell_exponent: T,
    pub prime_exponent: T,
}

pub fn root_disc_cap<T: RealScalar>(q: &BoundQuery) -> RootDiscCap<T> {
    let ell = T::lit(q.ell as f64);
    let ell_exponent = T::one() + T::one() / (ell - T::one());
    let prime_exponent = T::one() - T::one() / ell;
    let cap = ell.powf(ell_exponent) * T::lit(q.n as f64).powf(prime_exponent);
    RootDiscCap { cap, ell_exponent, prime_exponent }
}

/// Outcome of a degree-bound search.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum DegreeBound {
    /// `n ≤ bound`, attained by the row at `row`.
    Bounded { bound: u64, row: usize },
    /// No row has `B > ρ_cap`.
    NoBound,
}

impl DegreeBound {
    pub fn value(&self) -> Option<u64> {
        match self {
            DegreeBound::Bounded { bound, .. } => Some(*bound),
            DegreeBound::NoBound => None,
        }
    }
}

/// `⌊min E / log(B/ρ_cap)⌋` over rows with `B > ρ_cap`.
pub fn degree_bound<T: RealScalar>(rows: &[OdlyzkoRow<T>], rho_cap: T) -> DegreeBound {
    let mut best: Option<(T, usize)> = None;
    for (i, r) in rows.iter().enumerate() {
        if r.big_b <= rho_cap {
            continue;
        }
        let v = r.e / (r.big_b / rho_cap).ln();
        if best.map_or(true, |(b, _)| v < b) {
            best = Some((v, i));
        }
    }
    match best {
        Some((v, row)) => {
            let bound = (v + T::lit(FLOOR_GUARD)).floor().to_u64().unwrap_or(u64::MAX);
            DegreeBound::Bounded { bound, row }
        }
        None => DegreeBound::NoBound,
    }
}

/// One pass of the tame refinement: the cap used, the resulting degree
/// bound `n`, and `M = ⌊n/(ℓ−1)⌋`.
#[derive(Clone, Debug, Serialize)]
pub struct RefinementStep<T> {
    pub cap: T,
    pub degree_bound: Option<u64>,
    pub m: Option<u64>,
}

#[derive(Clone, Debug, Serialize)]
pub struct TameRefinement<T> {
    pub ell: u64,
    pub initial_m: Option<u64>,
    pub final_m: Option<u64>,
    /// True when `M < ℓ` forced tameness at `ℓ` and the tame cap was used.
    pub refined: bool,
    pub steps: Vec<RefinementStep<T>>,
}

/// Degree multiple below which no refinement is attempted.
pub const REFINEMENT_TARGET: u64 = 5;

/// For `N = 1`: start from the cap `ℓ^{1+1/(ℓ−1)}`, take `M = ⌊n/(ℓ−1)⌋`;
/// while `REFINEMENT_TARGET < M < ℓ` the field is tame at `ℓ`, so the cap
/// drops to `ℓ^{1−α}` with `α = 1/((ℓ−1)M)`; repeat until `M` is stable.
/// `bound` maps a cap to a degree bound.
pub fn refine_tame_with<T: RealScalar>(ell: u64, bound: impl Fn(T) -> Option<u64>) -> Result<TameRefinement<T>> {
    if !is_prime(ell) {
        return Err(Error::InvalidInput(format!("{ell} is not prime")));
    }
    let l = T::lit(ell as f64);
    let multiple = (ell - 1).max(1);
    let step = |cap: T| {
        let n = bound(cap);
        RefinementStep { cap, degree_bound: n, m: n.map(|n| n / multiple) }
    };
    let q = BoundQuery::new(ell, 1, true)?;
    let first = step(root_disc_cap::<T>(&q).cap);
    let initial_m = first.m;
    let mut steps = vec![first];
    let mut refined = false;
    let mut m = initial_m;
    while let Some(cur) = m {
        if ell == 2 || cur >= ell || cur <= REFINEMENT_TARGET || cur == 0 {
            break;
        }
        refined = true;
        let alpha = T::one() / T::lit(((ell - 1) * cur) as f64);
        let next = step(l.powf(T::one() - alpha));
        let next_m = next.m;
        steps.push(next);
        if next_m.map_or(true, |v| v >= cur) {
            m = next_m.map(|v| v.min(cur));
            break;
        }
        m = next_m;
    }
    Ok(TameRefinement { ell, initial_m, final_m: m, refined, steps })
}

/// [`refine_tame_with`] using [`degree_bound`] over `rows`.
pub fn refine_tame<T: RealScalar>(ell: u64, rows: &[OdlyzkoRow<T>]) -> Result<TameRefinement<T>> {
    refine_tame_with(ell, |cap| degree_bound(rows, cap).value())
}

/// Local data of a compositum at `ℓ`: ramification degree `e`, tame
/// degree `t` and largest lower jump `c`. The filtration is taken to be
/// `|G_0| = e`, `|G_1| = ⋯ = |G_c| = e/t`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CompositumFixture {
    pub ell: u64,
    #[serde(rename = "N")]
    pub n: u64,
    pub e: u64,
    pub c: u64,
    pub t: u64,
}

impl CompositumFixture {
    pub fn filtration(&self) -> Result<Filtration> {
        BoundQuery::new(self.ell, self.n, true)?;
        if self.e == 0 || self.t == 0 || self.e % self.t != 0 {
            return Err(Error::InvalidInput(format!("tame degree {} must divide e = {}", self.t, self.e)));
        }
        let wild = self.e / self.t;
        if wild == 1 && self.c > 0 {
            return Err(Error::InvalidInput("c > 0 needs wild ramification".into()));
        }
        if wild > 1 && self.c == 0 {
            return Err(Error::InvalidInput("wild ramification needs c ≥ 1".into()));
        }
        let mut orders = vec![self.e];
        orders.extend(std::iter::repeat(wild).take(self.c as usize));
        Filtration::new(self.ell, orders)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CompositumRootDisc<T> {
    /// `ord_ℓ(ρ)`, exact.
    pub ord_ell: String,
    pub rho: T,
}

/// `ρ = ℓ^{ord_ℓ} Π_{p | N} p^{1−1/ℓ}` with `ord_ℓ = 1 + φ(c) − (c+1)/e`.
pub fn compositum_rootdisc<T: RealScalar>(fx: &CompositumFixture) -> Result<CompositumRootDisc<T>> {
    let f = fx.filtration()?;
    let ord: Ratio<i64> = root_disc_ord(&f, fx.e)?;
    let ell = T::lit(fx.ell as f64);
    let prime_exp = T::one() - T::one() / ell;
    let rad: u64 = prime_divisors(fx.n).into_iter().product();
    let rho = ell.powf(T::lit(ord.to_f64())) * T::lit(rad as f64).powf(prime_exp);
    Ok(CompositumRootDisc { ord_ell: ord.to_string(), rho })
}

/// The asymptotic constant `8π e^γ`.
pub fn asymptotic_constant<T: RealScalar>() -> T {
    T::lit(8.0) * T::PI() * T::lit(EULER_GAMMA).exp()
}

pub fn prime_divisors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            out.push(p);
            while n % p == 0 {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

#[derive(Deserialize)]
struct RawRow {
    b: f64,
    #[serde(rename = "B")]
    big_b: f64,
    #[serde(rename = "E")]
    e: f64,
    grh: String,
}

fn parse_bool(s: &str) -> Result<bool> {
    match s.trim().to_ascii_lowercase().as_str() {
        "1" | "true" | "yes" | "y" => Ok(true),
        "0" | "false" | "no" | "n" => Ok(false),
        other => Err(Error::Parse(format!("bad grh flag `{other}`"))),
    }
}

/// Reads `b,B,E,grh` rows.
pub fn read_odlyzko_csv<R: Read>(reader: R) -> Result<Vec<OdlyzkoRow<f64>>> {
    let mut rdr = csv::ReaderBuilder::new().trim(csv::Trim::All).comment(Some(b'#')).from_reader(reader);
    let mut rows = Vec::new();
    for (i, rec) in rdr.deserialize::<RawRow>().enumerate() {
        let raw = rec.map_err(|e| Error::Parse(format!("row {}: {e}", i + 1)))?;
        let row = OdlyzkoRow::new(raw.b, raw.big_b, raw.e, parse_bool(&raw.grh)?)
            .map_err(|e| Error::Parse(format!("row {}: {e}", i + 1)))?;
        rows.push(row);
    }
    Ok(rows)
}

/// Reads `ell,N,e,c,t` records.
pub fn read_compositum_csv<R: Read>(reader: R) -> Result<Vec<CompositumFixture>> {
    let mut rdr = csv::ReaderBuilder::new().trim(csv::Trim::All).comment(Some(b'#')).from_reader(reader);
    rdr.deserialize::<CompositumFixture>()
        .enumerate()
        .map(|(i, r)| r.map_err(|e| Error::Parse(format!("record {}: {e}", i + 1))))
        .collect()
}

/// `$DIVFIELD_DATA_DIR/odlyzko.csv`, if the variable is set.
pub fn default_odlyzko_path() -> Option<PathBuf> {
    std::env::var_os(DATA_DIR_ENV).map(|d| Path::new(&d).join(ODLYZKO_FILE))
}

/// Loads the Odlyzko table at `path`, or from the data directory.
/// `Ok(None)` when no path is given and the default file is absent.
pub fn load_odlyzko(path: Option<&Path>) -> Result<Option<Vec<OdlyzkoRow<f64>>>> {
    let path = match path {
        Some(p) => p.to_path_buf(),
        None => match default_odlyzko_path() {
            Some(p) if p.exists() => p,
            _ => return Ok(None),
        },
    };
    let file = std::fs::File::open(&path)
        .map_err(|e| Error::Parse(format!("cannot open {}: {e}", path.display())))?;
    read_odlyzko_csv(file).map(Some)
}

/// Root-discriminant caps and `M` values for `(ℓ, 1)`-controlled fields.
pub const TABLE_ELL_ONE: [(u64, f64, u64); 8] = [
    (2, 4.0, 2),
    (3, 5.197, 3),
    (5, 7.477, 3),
    (7, 9.682, 3),
    (11, 13.981, 5),
    (13, 16.099, 7),
    (17, 20.294, 8),
    (19, 22.377, 10),
];

/// Degree bounds for `(2, N)`-controlled fields.
pub const TABLE_TWO_N: [(u64, u64); 33] = [
    (3, 10),
    (5, 16),
    (7, 22),
    (11, 42),
    (13, 56),
    (15, 74),
    (17, 100),
    (19, 138),
    (21, 192),
    (23, 98),
    (29, 155),
    (31, 181),
    (33, 210),
    (35, 244),
    (37, 284),
    (39, 330),
    (41, 385),
    (43, 449),
    (47, 615),
    (51, 852),
    (53, 1007),
    (55, 1196),
    (57, 1427),
    (59, 1710),
    (61, 2061),
    (65, 3046),
    (67, 3743),
    (69, 4638),
    (71, 5800),
    (73, 7332),
    (77, 12042),
    (79, 15766),
    (97, 470652),
];

/// Decomposition data of the ray class field `E_1` over
/// `E = Q(i, √p : p | N)`: `(N, |Gal(E_1/E)|, e, f, g)`.
pub const TABLE_RAY_CLASS: [(u64, u64, u64, u64, u64); 4] =
    [(73, 4, 4, 2, 2), (77, 6, 6, 2, 4), (79, 15, 2, 5, 6), (97, 4, 4, 2, 2)];

/// `[E_1 : Q] = |Gal(E_1/E)| · 2^{1 + ω(N)}` against `e·f·g`.
pub fn ray_class_consistency() -> Vec<(u64, u64, u64)> {
    TABLE_RAY_CLASS
        .iter()
        .map(|&(n, gal, e, f, g)| {
            let degree = gal * 2u64.pow(1 + prime_divisors(n).len() as u32);
            (n, degree, e * f * g)
        })
        .collect()
}

/// The compositum for `N = 127`: `|G_0| = 256` wild, `c = 1`.
pub const N127_FIXTURE: CompositumFixture = CompositumFixture { ell: 2, n: 127, e: 256, c: 1, t: 1 };

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: f64, b: f64, tol: f64) -> bool {
        (a - b).abs() <= tol
    }

    #[test]
    fn caps() {
        let c = root_disc_cap::<f64>(&BoundQuery::new(2, 3, false).unwrap());
        assert!(close(c.cap, 4.0 * 3f64.sqrt(), 1e-12));
        let c = root_disc_cap::<f64>(&BoundQuery::new(2, 1, false).unwrap());
        assert!(close(c.cap, 4.0, 1e-12));
        let c = root_disc_cap::<f64>(&BoundQuery::new(3, 1, false).unwrap());
        assert!(close(c.cap, 27f64.sqrt(), 1e-12));
        assert!(BoundQuery::new(2, 6, false).is_err());
        assert!(BoundQuery::new(4, 3, false).is_err());
        for (ell, printed, _) in TABLE_ELL_ONE {
            let c = root_disc_cap::<f64>(&BoundQuery::new(ell, 1, false).unwrap());
            assert!(close(c.cap, printed, 1e-3), "ℓ = {ell}: {} vs {printed}", c.cap);
        }
    }

    #[test]
    fn single_row_degree_bound() {
        let rows = vec![OdlyzkoRow::new(1.0, 50.0, 500.0, false).unwrap()];
        let cap = 4.0 * 3f64.sqrt();
        assert_eq!(degree_bound(&rows, cap), DegreeBound::Bounded { bound: 252, row: 0 });
        assert_eq!(degree_bound(&rows, 60.0), DegreeBound::NoBound);
        assert_eq!(degree_bound::<f64>(&[], 1.0), DegreeBound::NoBound);
        assert!(OdlyzkoRow::new(1.0, 0.5, 1.0, false).is_err());
    }

    #[test]
    fn degree_bound_is_generic() {
        let rows = vec![OdlyzkoRow::new(1.0f32, 50.0, 500.0, false).unwrap()];
        assert_eq!(degree_bound(&rows, 4.0 * 3f32.sqrt()).value(), Some(252));
    }

    #[test]
    fn compositum() {
        let r = compositum_rootdisc::<f64>(&N127_FIXTURE).unwrap();
        assert_eq!(r.ord_ell, "255/128");
        assert!(close(r.rho, 2f64.powf(2.0 - 1.0 / 128.0) * 127f64.sqrt(), 1e-12));
        assert!(close(r.rho, 44.834, 1e-3));
        assert!(close(asymptotic_constant::<f64>(), 44.763, 1e-3));
        let unram = CompositumFixture { ell: 2, n: 15, e: 1, c: 0, t: 1 };
        assert!(close(compositum_rootdisc::<f64>(&unram).unwrap().rho, 15f64.sqrt(), 1e-12));
        assert!(compositum_rootdisc::<f64>(&CompositumFixture { ell: 2, n: 3, e: 6, c: 0, t: 4 }).is_err());
    }

    #[test]
    fn csv_ingestion() {
        let rows = read_odlyzko_csv("b,B,E,grh\n1,50,500,false\n# comment\n2, 60.5, 700, 1\n".as_bytes()).unwrap();
        assert_eq!(rows.len(), 2);
        assert!(rows[1].grh);
        assert!(matches!(read_odlyzko_csv("b,B,E,grh\n1,x,2,0\n".as_bytes()), Err(Error::Parse(_))));
        assert!(matches!(read_odlyzko_csv("b,B,E,grh\n1,0.5,2,0\n".as_bytes()), Err(Error::Parse(_))));
        let fx = read_compositum_csv("ell,N,e,c,t\n2,127,256,1,1\n".as_bytes()).unwrap();
        assert_eq!(fx, vec![N127_FIXTURE]);
    }

    #[test]
    fn refinement_logic() {
        // A synthetic bound with degree proportional to the cap.
        let synthetic = |cap: f64| Some((cap * 6.0) as u64);
        let r = refine_tame_with(13, synthetic).unwrap();
        assert_eq!(r.initial_m, Some(8));
        assert!(r.refined);
        assert!(r.final_m.unwrap() < 8);
        let r = refine_tame_with(2, |_: f64| Some(2)).unwrap();
        assert_eq!((r.initial_m, r.refined), (Some(2), false));
        let r = refine_tame_with(11, |_: f64| Some(50)).unwrap();
        assert_eq!((r.initial_m, r.refined), (Some(5), false));
    }

    #[test]
    fn ray_class_table_is_consistent() {
        for (n, degree, efg) in ray_class_consistency() {
            assert_eq!(degree, efg, "N = {n}");
        }
        assert_eq!(320 * 504, 161_280);
    }
}
