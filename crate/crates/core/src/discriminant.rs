//! Discriminant exponents of stem fields: the orbit-count formula, an
//! independent double-coset evaluation, tame specializations, theta
//! characteristic counts, and the bounds for ordinary inertia.

use std::str::FromStr;

use serde::Serialize;

use crate::action::{ActionDomain, GroupAction};
use crate::error::{Error, Result};
use crate::field::FieldElem;
use crate::group::{double_cosets, Perm, PermGroup};
use crate::linalg::{Matrix, SympVector};
use crate::ramification::is_prime;
use crate::scalar::ExactScalar;
use crate::symplectic::{theta_count, Parity, SymplecticSpace};

/// Largest `q^{2n}` for which [`theta_fixed_count_enumerated`] runs.
pub const THETA_ENUMERATION_CAP: u64 = 1 << 16;

/// A transitive permutation group `G` on `X = {0, …, d−1}`, a base point
/// (its stabilizer is `H`), a decomposition group `D` and an inertia
/// filtration `I_0 ⊇ I_1 ⊇ …` inside `D`.
#[derive(Clone, Debug)]
pub struct StemFieldProblem {
    group: PermGroup,
    point: u32,
    decomposition: PermGroup,
    inertia: Vec<PermGroup>,
    ell: Option<u64>,
}

impl StemFieldProblem {
    /// Validates the problem. Trailing trivial inertia groups are dropped.
    /// The chain must be decreasing, each `I_m` normal in `I_0`, and `I_0`
    /// normal in `D`.
    pub fn new(
        group: PermGroup,
        point: u32,
        decomposition: PermGroup,
        inertia: Vec<PermGroup>,
        ell: Option<u64>,
    ) -> Result<Self> {
        if !group.is_transitive() {
            return Err(Error::InvalidProblem("G is not transitive on X".into()));
        }
        if point as usize >= group.degree() {
            return Err(Error::InvalidProblem(format!("base point {point} outside X")));
        }
        if !decomposition.is_subgroup_of(&group) {
            return Err(Error::InvalidProblem("D is not a subgroup of G".into()));
        }
        let mut inertia = inertia;
        while inertia.last().is_some_and(|g| g.is_trivial()) {
            inertia.pop();
        }
        if let Some(i0) = inertia.first() {
            if !i0.is_subgroup_of(&decomposition) {
                return Err(Error::InvalidProblem("I_0 is not contained in D".into()));
            }
            if !i0.is_normal_in(&decomposition) {
                return Err(Error::InvalidProblem("I_0 is not normal in D".into()));
            }
            for m in 1..inertia.len() {
                if !inertia[m].is_subgroup_of(&inertia[m - 1]) {
                    return Err(Error::InvalidProblem(format!("I_{m} is not contained in I_{}", m - 1)));
                }
                if !inertia[m].is_normal_in(i0) {
                    return Err(Error::InvalidProblem(format!("I_{m} is not normal in I_0")));
                }
            }
        }
        if let Some(l) = ell {
            if !is_prime(l) {
                return Err(Error::InvalidProblem(format!("{l} is not prime")));
            }
        }
        Ok(StemFieldProblem { group, point, decomposition, inertia, ell })
    }

    pub fn group(&self) -> &PermGroup {
        &self.group
    }

    pub fn point(&self) -> u32 {
        self.point
    }

    pub fn decomposition(&self) -> &PermGroup {
        &self.decomposition
    }

    pub fn inertia(&self) -> &[PermGroup] {
        &self.inertia
    }

    pub fn ell(&self) -> Option<u64> {
        self.ell
    }

    pub fn degree(&self) -> usize {
        self.group.degree()
    }

    /// `H`, the stabilizer of the base point.
    pub fn stabilizer(&self) -> PermGroup {
        self.group.stabilizer(self.point)
    }
}

/// `Σ_m (|X| − |I_m \ X|) / [I_0 : I_m]`.
pub fn stem_disc_ord<T: ExactScalar>(p: &StemFieldProblem) -> T {
    let Some(i0) = p.inertia.first() else {
        return T::zero();
    };
    let x = p.degree() as i64;
    p.inertia.iter().fold(T::zero(), |acc, im| {
        let orbits = im.orbits().len() as i64;
        acc + T::from_frac((x - orbits) * im.order() as i64, i0.order() as i64)
    })
}

/// Local data at one prime of the stem field, indexed by a double coset `H g D`.
#[derive(Clone, Debug, Serialize)]
pub struct PrimeData<T> {
    /// Representative `g`, 1-based cycle notation.
    pub representative: String,
    /// `e = [I : I ∩ H^g]`.
    pub e: u64,
    /// `f = [D : (D ∩ H^g) I]`.
    pub f: u64,
    /// `x = Σ_m (|I_m| − |I_m ∩ H^g|) / |I ∩ H^g|`.
    pub x: T,
}

#[derive(Clone, Debug, Serialize)]
pub struct OracleResult<T> {
    pub value: T,
    pub primes: Vec<PrimeData<T>>,
}

/// `Σ_{HgD} x(HgD) f(HgD)`, computed prime by prime from double cosets.
pub fn stem_disc_oracle<T: ExactScalar>(p: &StemFieldProblem) -> Result<OracleResult<T>> {
    let h = p.stabilizer();
    let trivial = PermGroup::trivial(p.degree());
    let i0 = p.inertia.first().unwrap_or(&trivial);
    let mut primes = Vec::new();
    let mut value = T::zero();
    for dc in double_cosets(&h, &p.group, &p.decomposition)? {
        let hg = h.conjugate(&dc.representative);
        let meet = |g: &PermGroup| g.elements().filter(|y| hg.contains(y)).count();
        let i_meet = meet(i0);
        let d_meet = meet(&p.decomposition);
        let e = i0.order() / i_meet;
        // |(D ∩ H^g) I| = |D ∩ H^g| |I| / |I ∩ H^g| since I is normal in D.
        let f = p.decomposition.order() * i_meet / (d_meet * i0.order());
        let x = p.inertia.iter().fold(T::zero(), |acc, im| {
            acc + T::from_frac(im.order() as i64 - meet(im) as i64, i_meet as i64)
        });
        value = value + x.clone() * T::from_int(f as i64);
        primes.push(PrimeData { representative: dc.representative.cycle_string(), e: e as u64, f: f as u64, x });
    }
    Ok(OracleResult { value, primes })
}

/// `(1 − ℓ^{-1})(|X| − |X^I|)` for inertia cyclic of prime order `ℓ`.
pub fn tame_stem_disc<T: ExactScalar>(x: u64, fixed: u64, ell: u64) -> Result<T> {
    if fixed > x {
        return Err(Error::InvalidInput(format!("{fixed} fixed points exceed |X| = {x}")));
    }
    if !is_prime(ell) {
        return Err(Error::InvalidInput(format!("{ell} is not prime")));
    }
    Ok(T::from_frac(ell as i64 - 1, ell as i64) * T::from_int((x - fixed) as i64))
}

/// `(1 − ℓ^{-1})(q^s − q^{s−t})`: the tame exponent on `X = V ∖ {0}` for
/// `dim V = s` and `t = rank(σ − 1)`.
pub fn tame_vector_disc<T: ExactScalar>(q: u64, s: u32, t: u32, ell: u64) -> Result<T> {
    if t > s {
        return Err(Error::InvalidInput(format!("rank {t} exceeds dimension {s}")));
    }
    tame_stem_disc(q.pow(s) - 1, q.pow(s - t) - 1, ell)
}

fn check_even_q(q: u64) -> Result<()> {
    if q < 2 || !q.is_power_of_two() || q > 16 {
        return Err(Error::UnsupportedField(format!("q = {q} must be 2, 4, 8 or 16")));
    }
    Ok(())
}

/// `½ q^{2n−1}`, the number of odd theta characteristics fixed by a transvection.
pub fn theta_fixed_count(q: u64, n: u32) -> Result<u64> {
    check_even_q(q)?;
    if n == 0 {
        return Err(Error::InvalidInput("n must be positive".into()));
    }
    Ok(q.pow(2 * n - 1) / 2)
}

/// Counts odd theta characteristics fixed by `τ_z`, `z = e_n`, by enumeration.
pub fn theta_fixed_count_enumerated(q: u64, n: u32) -> Result<u64> {
    check_even_q(q)?;
    if q.pow(2 * n) > THETA_ENUMERATION_CAP {
        return Err(Error::Resource { what: format!("enumerating thetas for q = {q}, n = {n}"), limit: THETA_ENUMERATION_CAP });
    }
    let space = SymplecticSpace::new(n as usize, q as u32)?;
    let tau = space.tau(&space.basis(n as usize))?;
    let action = GroupAction::new(&space, ActionDomain::Theta(Parity::Odd))?;
    Ok(action.compile(&tau)?.fixed_points() as u64)
}

/// `¼ q^n (q^n − q^{n−t} − δ)` for an involution with invariants `(t, δ)`.
pub fn pdisc_symplectic<T: ExactScalar>(q: u64, n: u32, t: u32, delta: u8) -> Result<T> {
    check_even_q(q)?;
    if t > n || delta > 1 || (t % 2 == 1 && delta != 1) || (t == 0 && delta != 0) {
        return Err(Error::InvalidInput(format!("no involution in Sp_{} has invariants (t, δ) = ({t}, {delta})", 2 * n)));
    }
    let qn = q.pow(n) as i64;
    let inner = qn - q.pow(n - t) as i64 - delta as i64;
    Ok(T::from_frac(qn * inner, 4))
}

/// An involution of `space` with invariants `(t, δ)`:
/// `τ_{e_1}⋯τ_{e_t}` when `δ = 1`, and
/// `x ↦ x + Σ_k ([e_{2k−1}, x] e_{2k} + [e_{2k}, x] e_{2k−1})` when `δ = 0`.
pub fn symplectic_involution(space: &SymplecticSpace, t: usize, delta: u8) -> Result<Matrix> {
    let n = space.half_dim();
    let f = space.field();
    if t > n || delta > 1 || (t % 2 == 1 && delta == 0) || (t == 0 && delta == 1) {
        return Err(Error::InvalidInput(format!("no involution with invariants ({t}, {delta})")));
    }
    let mut cols = Vec::with_capacity(space.dim());
    for j in 0..space.dim() {
        let x = space.basis(j);
        let mut image = x.clone();
        if delta == 1 {
            for k in 0..t {
                let z = space.basis(k);
                image = image.add(f, &z.scale(f, space.pairing(&z, &x)?));
            }
        } else {
            for k in (0..t).step_by(2) {
                let (a, b) = (space.basis(k), space.basis(k + 1));
                image = image.add(f, &b.scale(f, space.pairing(&a, &x)?));
                image = image.add(f, &a.scale(f, space.pairing(&b, &x)?));
            }
        }
        cols.push(image);
    }
    let m = Matrix::from_columns(&cols)?;
    debug_assert!(space.is_symplectic(&m));
    Ok(m)
}

/// Parameters of the bounds for ordinary inertia.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum OrdinaryKind {
    /// `G` transitive on the odd thetas (`epsilon = 0`) or on the odd
    /// thetas other than a fixed one (`epsilon = 1`).
    Theta { q: u64, n: u32, epsilon: u8 },
    /// `G` a transitive subgroup of `S_m`.
    Symmetric { m: u64 },
}

/// `(q^n − 2)(q^n − 1 − ε)`, or `2⌊m/2⌋` (`3m/2` for `m ∈ {4, 8}`).
pub fn ordinary_disc_bound(kind: OrdinaryKind) -> Result<u64> {
    match kind {
        OrdinaryKind::Theta { q, n, epsilon } => {
            check_even_q(q)?;
            if epsilon > 1 || n == 0 {
                return Err(Error::InvalidInput("need n ≥ 1 and ε ∈ {0, 1}".into()));
            }
            let qn = q.pow(n);
            Ok((qn - 2) * (qn - 1 - epsilon as u64))
        }
        OrdinaryKind::Symmetric { m } => {
            if m == 4 || m == 8 {
                Ok(3 * m / 2)
            } else {
                Ok(2 * (m / 2))
            }
        }
    }
}

/// The subgroup `Γ = ⟨τ_z : z ∈ Z⟩` for `Z = span(e_1, …, e_n)`, given by
/// the generators `τ_{c e_i}` with `c` running over a basis of the field.
pub fn ordinary_generators(space: &SymplecticSpace) -> Result<Vec<Matrix>> {
    let f = space.field();
    let mut gens = Vec::new();
    for i in 0..space.half_dim() {
        for k in 0..f.degree() {
            let c = f.pow(f.generator(), k);
            gens.push(space.tau(&space.basis(i).scale(f, c))?);
        }
    }
    Ok(gens)
}

/// Sum of the squared images `(g−1)(g'−1)` vanishing for all pairs.
pub fn is_ordinary(field: &crate::field::GaloisField, mats: &[Matrix]) -> Result<bool> {
    let Some(first) = mats.first() else {
        return Ok(true);
    };
    let id = Matrix::identity(first.dim());
    for a in mats {
        for b in mats {
            let prod = a.sub(field, &id).mul(field, &b.sub(field, &id))?;
            if prod != Matrix::zero(first.dim()) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Text format for stem-field problems. Records are separated by blank
/// lines; `#` starts a comment. Permutations are products of 1-based
/// cycles without spaces, e.g. `(1,2)(3,4)`; `()` is the identity.
///
/// ```text
/// degree 3
/// point 1
/// group (1,2) (1,2,3)
/// decomposition (1,2)
/// inertia (1,2)
/// ell 2
/// ```
///
/// Each `inertia` line adds the next group `I_0, I_1, …`.
#[derive(Clone, Debug)]
pub struct ProblemRecord {
    pub name: Option<String>,
    pub problem: StemFieldProblem,
}

pub fn parse_perm(degree: usize, word: &str) -> Result<Perm> {
    let word = word.trim();
    if !word.starts_with('(') || !word.ends_with(')') {
        return Err(Error::Parse(format!("bad permutation `{word}`")));
    }
    let mut cycles = Vec::new();
    for part in word[1..word.len() - 1].split(")(") {
        if part.trim().is_empty() {
            continue;
        }
        let cycle = part
            .split(',')
            .map(|s| {
                let v: u32 = s.trim().parse().map_err(|_| Error::Parse(format!("bad point `{s}` in `{word}`")))?;
                if v == 0 || v as usize > degree {
                    return Err(Error::Parse(format!("point {v} outside 1..={degree}")));
                }
                Ok(v - 1)
            })
            .collect::<Result<Vec<u32>>>()?;
        cycles.push(cycle);
    }
    Perm::from_cycles(degree, &cycles).map_err(|e| Error::Parse(e.to_string()))
}

fn parse_gens(degree: usize, words: &[&str]) -> Result<Vec<Perm>> {
    words.iter().map(|w| parse_perm(degree, w)).collect()
}

fn parse_record(lines: &[&str]) -> Result<ProblemRecord> {
    let mut name = None;
    let mut degree = None;
    let mut point = 0u32;
    let mut group = None;
    let mut decomposition = None;
    let mut inertia: Vec<Vec<&str>> = Vec::new();
    let mut ell = None;
    for line in lines {
        let mut words = line.split_whitespace();
        let Some(key) = words.next() else { continue };
        let rest: Vec<&str> = words.collect();
        let single = || -> Result<&str> {
            match rest.as_slice() {
                [v] => Ok(*v),
                _ => Err(Error::Parse(format!("`{key}` takes one value"))),
            }
        };
        match key {
            "name" => name = Some(rest.join(" ")),
            "degree" => degree = Some(single()?.parse::<usize>().map_err(|_| Error::Parse(format!("bad degree in `{line}`")))?),
            "point" => {
                let p: u32 = single()?.parse().map_err(|_| Error::Parse(format!("bad point in `{line}`")))?;
                if p == 0 {
                    return Err(Error::Parse("points are 1-based".into()));
                }
                point = p - 1;
            }
            "group" => group = Some(rest),
            "decomposition" => decomposition = Some(rest),
            "inertia" => inertia.push(rest),
            "ell" => ell = Some(single()?.parse::<u64>().map_err(|_| Error::Parse(format!("bad prime in `{line}`")))?),
            other => return Err(Error::Parse(format!("unknown key `{other}`"))),
        }
    }
    let degree = degree.ok_or_else(|| Error::Parse("missing `degree`".into()))?;
    let group = PermGroup::generate(degree, parse_gens(degree, &group.ok_or_else(|| Error::Parse("missing `group`".into()))?)?)?;
    let inertia = inertia
        .iter()
        .map(|w| PermGroup::generate(degree, parse_gens(degree, w)?))
        .collect::<Result<Vec<_>>>()?;
    let decomposition = match decomposition {
        Some(w) => PermGroup::generate(degree, parse_gens(degree, &w)?)?,
        None => inertia.first().cloned().unwrap_or_else(|| PermGroup::trivial(degree)),
    };
    let problem = StemFieldProblem::new(group, point, decomposition, inertia, ell)?;
    Ok(ProblemRecord { name, problem })
}

/// Parses every record of a problem file. Syntax errors are
/// [`Error::Parse`]; invalid problems keep their own error kind.
pub fn parse_problems(text: &str) -> Result<Vec<ProblemRecord>> {
    let mut records = Vec::new();
    let mut current: Vec<&str> = Vec::new();
    for raw in text.lines().chain(std::iter::once("")) {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            if raw.trim().is_empty() && !current.is_empty() {
                records.push(parse_record(&current)?);
                current.clear();
            }
            continue;
        }
        current.push(line);
    }
    Ok(records)
}

impl FromStr for ProblemRecord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut all = parse_problems(s)?;
        match all.len() {
            1 => Ok(all.remove(0)),
            k => Err(Error::Parse(format!("expected one problem, found {k}"))),
        }
    }
}

/// Renders a problem in the text format accepted by [`parse_problems`].
pub fn render_problem(p: &StemFieldProblem, name: Option<&str>) -> String {
    let gens = |g: &PermGroup| {
        if g.gens().is_empty() {
            "()".to_string()
        } else {
            g.gens().iter().map(|p| p.cycle_string()).collect::<Vec<_>>().join(" ")
        }
    };
    let mut out = String::new();
    if let Some(n) = name {
        out.push_str(&format!("name {n}\n"));
    }
    out.push_str(&format!("degree {}\npoint {}\n", p.degree(), p.point + 1));
    out.push_str(&format!("group {}\n", gens(&p.group)));
    out.push_str(&format!("decomposition {}\n", gens(&p.decomposition)));
    for im in &p.inertia {
        out.push_str(&format!("inertia {}\n", gens(im)));
    }
    if let Some(l) = p.ell {
        out.push_str(&format!("ell {l}\n"));
    }
    out
}

/// `|Θ^-|` minus the odd thetas fixed by one transvection, doubled into
/// the tame formula; a convenience used to compare with [`pdisc_symplectic`].
pub fn tame_theta_disc<T: ExactScalar>(q: u64, n: u32, fixed: u64) -> Result<T> {
    let total = theta_count(q, n, Parity::Odd);
    tame_stem_disc(total, fixed, 2)
}

/// Vector used by the ordinary fixtures: the coordinates of `z ∈ Z`.
pub fn isotropic_vector(space: &SymplecticSpace, coords: &[FieldElem]) -> Result<SympVector> {
    let n = space.half_dim();
    if coords.len() != n {
        return Err(Error::DimensionMismatch { expected: n, found: coords.len() });
    }
    let mut all = coords.to_vec();
    all.extend(std::iter::repeat(FieldElem::ZERO).take(n));
    Ok(SympVector::new(all))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::Ratio;

    type Q = Ratio<i64>;

    fn s3_problem() -> StemFieldProblem {
        let s3 = PermGroup::symmetric(3).unwrap();
        let t = PermGroup::generate(3, vec![Perm::transposition(3, 0, 1).unwrap()]).unwrap();
        StemFieldProblem::new(s3, 0, t.clone(), vec![t], Some(2)).unwrap()
    }

    #[test]
    fn s3_transposition() {
        let p = s3_problem();
        assert_eq!(stem_disc_ord::<Q>(&p), Q::from_int(1));
        assert_eq!(stem_disc_oracle::<Q>(&p).unwrap().value, Q::from_int(1));
        assert_eq!(tame_stem_disc::<Q>(3, 1, 2).unwrap(), Q::from_int(1));
    }

    #[test]
    fn unramified_is_zero() {
        let s3 = PermGroup::symmetric(3).unwrap();
        let p = StemFieldProblem::new(s3, 0, PermGroup::trivial(3), vec![], None).unwrap();
        assert_eq!(stem_disc_ord::<Q>(&p), Q::from_int(0));
        assert_eq!(stem_disc_oracle::<Q>(&p).unwrap().value, Q::from_int(0));
    }

    #[test]
    fn invalid_problems() {
        let g = PermGroup::generate(3, vec![Perm::transposition(3, 0, 1).unwrap()]).unwrap();
        assert!(matches!(
            StemFieldProblem::new(g.clone(), 0, g.clone(), vec![], None),
            Err(Error::InvalidProblem(_))
        ));
        let s3 = PermGroup::symmetric(3).unwrap();
        let c3 = PermGroup::generate(3, vec![Perm::from_cycles(3, &[vec![0, 1, 2]]).unwrap()]).unwrap();
        // I_0 = <(12)> inside D = S_3 is not normal.
        assert!(StemFieldProblem::new(s3.clone(), 0, s3.clone(), vec![g.clone()], None).is_err());
        assert!(StemFieldProblem::new(s3, 0, c3, vec![g], None).is_err());
    }

    #[test]
    fn tame_closed_forms() {
        assert_eq!(tame_stem_disc::<Q>(5, 5, 3).unwrap(), Q::from_int(0));
        assert!(tame_stem_disc::<Q>(3, 4, 2).is_err());
        assert_eq!(tame_vector_disc::<Q>(2, 4, 1, 2).unwrap(), Q::from_int(4));
        for m in 2..10u64 {
            for s in 1..=m / 2 {
                assert_eq!(tame_stem_disc::<Q>(m, m - 2 * s, 2).unwrap(), Q::from_int(s as i64));
            }
        }
    }

    #[test]
    fn fixed_theta_counts() {
        assert_eq!(theta_fixed_count(2, 1).unwrap(), 1);
        assert_eq!(theta_fixed_count(2, 2).unwrap(), 4);
        assert_eq!(theta_fixed_count(4, 1).unwrap(), 2);
        for (q, n) in [(2, 1), (2, 2), (4, 1)] {
            assert_eq!(theta_fixed_count_enumerated(q, n).unwrap(), theta_fixed_count(q, n).unwrap());
        }
        assert!(theta_fixed_count(3, 1).is_err());
    }

    #[test]
    fn symplectic_discriminant() {
        assert_eq!(pdisc_symplectic::<Q>(2, 2, 1, 1).unwrap(), Q::from_int(1));
        assert_eq!(tame_theta_disc::<Q>(2, 2, 4).unwrap(), Q::from_int(1));
        assert_eq!(pdisc_symplectic::<Q>(2, 1, 1, 1).unwrap(), Q::from_int(0));
        assert_eq!(pdisc_symplectic::<Q>(2, 2, 0, 0).unwrap(), Q::from_int(0));
        assert!(pdisc_symplectic::<Q>(2, 2, 1, 0).is_err());
        assert!(pdisc_symplectic::<Q>(2, 2, 3, 1).is_err());
    }

    #[test]
    fn involutions_have_requested_invariants() {
        let s = SymplecticSpace::new(3, 2).unwrap();
        for (t, d) in [(0, 0), (1, 1), (2, 1), (2, 0), (3, 1)] {
            let m = symplectic_involution(&s, t, d).unwrap();
            let inv = s.involution_invariants(&m).unwrap();
            assert_eq!((inv.t, inv.delta), (t, d));
        }
    }

    #[test]
    fn ordinary_bounds() {
        assert_eq!(ordinary_disc_bound(OrdinaryKind::Theta { q: 2, n: 2, epsilon: 1 }).unwrap(), 4);
        assert_eq!(ordinary_disc_bound(OrdinaryKind::Symmetric { m: 5 }).unwrap(), 4);
        assert_eq!(ordinary_disc_bound(OrdinaryKind::Symmetric { m: 8 }).unwrap(), 12);
        assert_eq!(ordinary_disc_bound(OrdinaryKind::Symmetric { m: 4 }).unwrap(), 6);
    }

    #[test]
    fn ordinary_generators_commute_and_square_to_zero() {
        for (n, q) in [(2, 2), (1, 4), (2, 4)] {
            let s = SymplecticSpace::new(n, q).unwrap();
            let gens = ordinary_generators(&s).unwrap();
            assert!(is_ordinary(s.field(), &gens).unwrap());
        }
    }

    #[test]
    fn problem_text_roundtrip() {
        let text = "# sample\nname s3\ndegree 3\npoint 1\ngroup (1,2) (1,2,3)\ndecomposition (1,2)\ninertia (1,2)\nell 2\n\n\
                    degree 3\ngroup (1,2,3)\ninertia ()\n";
        let recs = parse_problems(text).unwrap();
        assert_eq!(recs.len(), 2);
        assert_eq!(recs[0].name.as_deref(), Some("s3"));
        assert_eq!(stem_disc_ord::<Q>(&recs[0].problem), Q::from_int(1));
        let again = parse_problems(&render_problem(&recs[0].problem, Some("s3"))).unwrap();
        assert_eq!(again[0].problem.group().order(), 6);
        assert!(matches!(parse_problems("degree x\ngroup ()\n"), Err(Error::Parse(_))));
        assert!(matches!(parse_problems("degree 3\ngroup (1,4)\n"), Err(Error::Parse(_))));
        assert!(matches!(parse_problems("colour red\n"), Err(Error::Parse(_))));
    }
}
