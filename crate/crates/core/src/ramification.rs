//! Lower-numbering ramification filtrations, the Herbrand functions φ and
//! ψ, upper numbering, Fontaine predicates and conductor exponents.
//!
//! A filtration is stored as its order profile `|G_0|, |G_1|, …, |G_c|`
//! (trailing trivial groups dropped). All Herbrand arithmetic is exact and
//! generic over [`ExactScalar`].

use std::marker::PhantomData;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::group::PermGroup;
use crate::scalar::ExactScalar;

pub fn is_prime(n: u64) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| n % d != 0)
}

fn is_power_of(mut n: u64, p: u64) -> bool {
    while n % p == 0 {
        n /= p;
    }
    n == 1
}

/// Order profile of a ramification filtration with residue prime `ℓ`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Filtration {
    ell: u64,
    orders: Vec<u64>,
}

impl Filtration {
    /// Validates and normalizes an order profile (trailing 1s are dropped).
    pub fn new(ell: u64, orders: Vec<u64>) -> Result<Self> {
        if !is_prime(ell) {
            return Err(Error::InvalidFiltration(format!("residue characteristic {ell} is not prime")));
        }
        if orders.iter().any(|&o| o == 0) {
            return Err(Error::InvalidFiltration("group orders must be positive".into()));
        }
        for w in orders.windows(2) {
            if w[1] > w[0] || w[0] % w[1] != 0 {
                return Err(Error::InvalidFiltration(format!(
                    "orders must be nonincreasing with each dividing the previous ({} then {})",
                    w[0], w[1]
                )));
            }
        }
        let mut orders = orders;
        while orders.last() == Some(&1) {
            orders.pop();
        }
        let f = Filtration { ell, orders };
        if !is_power_of(f.order(1), ell) {
            return Err(Error::InvalidFiltration(format!("|G_1| = {} is not a power of {ell}", f.order(1))));
        }
        if f.tame_degree() % ell == 0 {
            return Err(Error::InvalidFiltration(format!(
                "tame degree {} is divisible by {ell}",
                f.tame_degree()
            )));
        }
        Ok(f)
    }

    /// The unramified filtration (`G_0 = 1`).
    pub fn unramified(ell: u64) -> Result<Self> {
        Filtration::new(ell, Vec::new())
    }

    pub fn ell(&self) -> u64 {
        self.ell
    }

    /// `|G_i|` for every `i ≥ 0`.
    pub fn order(&self, i: usize) -> u64 {
        self.orders.get(i).copied().unwrap_or(1)
    }

    /// The profile `|G_0|, …, |G_c|` (empty when unramified).
    pub fn orders(&self) -> &[u64] {
        &self.orders
    }

    /// `t = [G_0 : G_1]`.
    pub fn tame_degree(&self) -> u64 {
        self.order(0) / self.order(1)
    }

    /// Largest `c` with `G_c ≠ 1`; `None` when unramified.
    pub fn c(&self) -> Option<usize> {
        self.orders.len().checked_sub(1)
    }

    pub fn is_tame(&self) -> bool {
        self.order(1) == 1
    }

    pub fn herbrand<T: ExactScalar>(&self) -> HerbrandFn<T> {
        HerbrandFn::new(self)
    }

    /// Comma-separated profile, e.g. `24,8,2,2,2,2,2,2,2,2`.
    pub fn render(&self) -> String {
        if self.orders.is_empty() {
            return "1".into();
        }
        self.orders.iter().map(|o| o.to_string()).collect::<Vec<_>>().join(",")
    }
}

/// A profile as written on the command line: comma-separated orders with
/// optional run-length entries `2x8`; trailing 1s implied.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Profile(pub Vec<u64>);

impl FromStr for Profile {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut out = Vec::new();
        for token in s.split(',').map(str::trim).filter(|t| !t.is_empty()) {
            let (value, count) = match token.split_once(['x', '×', '*']) {
                Some((v, k)) => (v.trim(), k.trim()),
                None => (token, "1"),
            };
            let value: u64 = value.parse().map_err(|_| Error::Parse(format!("bad order `{value}` in profile")))?;
            let count: usize = count.parse().map_err(|_| Error::Parse(format!("bad repeat count `{count}` in profile")))?;
            out.extend(std::iter::repeat(value).take(count));
        }
        if out.is_empty() {
            return Err(Error::Parse("empty filtration profile".into()));
        }
        Ok(Profile(out))
    }
}

/// The piecewise-linear Herbrand function of a filtration,
/// `φ(x) = (|G_1|+⋯+|G_m|+(x−m)|G_{m+1}|)/|G_0|` for `m ≤ x ≤ m+1`.
#[derive(Clone, Debug)]
pub struct HerbrandFn<T> {
    orders: Vec<i64>,
    g0: i64,
    /// `φ(k)` for `k = 0..=orders.len()`.
    knots: Vec<T>,
    _marker: PhantomData<T>,
}

impl<T: ExactScalar> HerbrandFn<T> {
    pub fn new(f: &Filtration) -> Self {
        let orders: Vec<i64> = f.orders.iter().map(|&o| o as i64).collect();
        let g0 = f.order(0) as i64;
        let g = |i: usize| orders.get(i).copied().unwrap_or(1);
        let mut knots = vec![T::zero()];
        let mut acc = 0i64;
        for k in 1..=orders.len() {
            acc += g(k);
            knots.push(T::from_frac(acc, g0));
        }
        HerbrandFn { orders, g0, knots, _marker: PhantomData }
    }

    fn g(&self, i: usize) -> i64 {
        self.orders.get(i).copied().unwrap_or(1)
    }

    /// Integer points `k` where the slope may change, with `φ(k)`.
    pub fn breakpoints(&self) -> impl Iterator<Item = (usize, &T)> {
        self.knots.iter().enumerate()
    }

    pub fn phi(&self, x: &T) -> Result<T> {
        if x.is_negative() {
            return Err(Error::Domain(format!("φ is defined on x ≥ 0, got {x}")));
        }
        let len = self.orders.len();
        let m = x.floor_int() as usize;
        if m >= len {
            // Slope 1/|G_0| beyond the last nontrivial group.
            let tail = x.clone() - T::from_int(len as i64);
            return Ok(self.knots[len].clone() + tail / T::from_int(self.g0));
        }
        let frac = x.clone() - T::from_int(m as i64);
        Ok(self.knots[m].clone() + frac * T::from_frac(self.g(m + 1), self.g0))
    }

    pub fn psi(&self, y: &T) -> Result<T> {
        if y.is_negative() {
            return Err(Error::Domain(format!("ψ is defined on y ≥ 0, got {y}")));
        }
        let len = self.orders.len();
        for k in 0..len {
            if *y <= self.knots[k + 1] {
                let d = y.clone() - self.knots[k].clone();
                return Ok(T::from_int(k as i64) + d * T::from_frac(self.g0, self.g(k + 1)));
            }
        }
        let d = y.clone() - self.knots[len].clone();
        Ok(T::from_int(len as i64) + d * T::from_int(self.g0))
    }

    /// `G^u = G_{⌈ψ(u)⌉}`: returns the lower index and the group order.
    pub fn upper_numbering(&self, u: &T) -> Result<(usize, u64)> {
        let idx = self.psi(u)?.ceil_int().max(0) as usize;
        Ok((idx, self.g(idx) as u64))
    }
}

/// `c` (largest index with `G_c ≠ 1`) and `m = ψ(1/(ℓ−1))`.
#[derive(Clone, Debug, Serialize)]
pub struct CmValues<T> {
    pub c: Option<usize>,
    pub m: T,
}

pub fn c_m_values<T: ExactScalar>(f: &Filtration) -> Result<CmValues<T>> {
    let h = f.herbrand::<T>();
    let m = h.psi(&T::from_frac(1, f.ell as i64 - 1))?;
    Ok(CmValues { c: f.c(), m })
}

/// `c ≤ m`, i.e. `G^u = 1` for every `u > 1/(ℓ−1)`.
pub fn is_fontaine<T: ExactScalar>(f: &Filtration) -> Result<bool> {
    let cm = c_m_values::<T>(f)?;
    Ok(match cm.c {
        None => true,
        Some(c) => T::from_int(c as i64) <= cm.m,
    })
}

/// Lower bounds `(t·m_F, t·c_F)` for `m_E` and `c_E` in a tower `E/F/K`.
pub fn bound_propagation<T: ExactScalar>(t_ef: u64, m_f: &T, c_f: u64) -> Result<(T, u64)> {
    if t_ef == 0 {
        return Err(Error::InvalidInput("tame degree must be at least 1".into()));
    }
    Ok((T::from_int(t_ef as i64) * m_f.clone(), t_ef * c_f))
}

#[derive(Clone, Debug, Serialize)]
pub struct ConductorExponent<T> {
    pub value: T,
    /// False when `φ(c)+1` is not an integer, which cannot happen for a
    /// genuine abelian filtration; the value is reported, not rounded.
    pub integral: bool,
}

/// `φ(c)+1` (0 when unramified).
pub fn conductor_exponent_abelian<T: ExactScalar>(f: &Filtration) -> Result<ConductorExponent<T>> {
    let value = match f.c() {
        None => T::zero(),
        Some(c) => f.herbrand::<T>().phi(&T::from_int(c as i64))? + T::one(),
    };
    let integral = value.is_integral();
    Ok(ConductorExponent { value, integral })
}

/// `ord_ℓ` of the root discriminant: `1 + φ(c) − (c+1)/e` with `e = |G_0|`.
pub fn root_disc_ord<T: ExactScalar>(f: &Filtration, e: u64) -> Result<T> {
    if e == 0 {
        return Err(Error::InvalidInput("ramification degree must be positive".into()));
    }
    if e != f.order(0) {
        return Err(Error::InvalidInput(format!(
            "ramification degree {e} differs from |G_0| = {}",
            f.order(0)
        )));
    }
    match f.c() {
        None => Ok(T::zero()),
        Some(c) => {
            let phi = f.herbrand::<T>().phi(&T::from_int(c as i64))?;
            Ok(T::one() + phi - T::from_frac(c as i64 + 1, e as i64))
        }
    }
}

/// Upper bound `1 + 1/(ℓ−1) − (t·c_F + 1)/e` on `ord_ℓ` of the root
/// discriminant of a Fontaine field containing `F`.
pub fn fontaine_root_disc_bound<T: ExactScalar>(ell: u64, t: u64, c_f: u64, e: u64) -> Result<T> {
    if e == 0 || ell < 2 {
        return Err(Error::InvalidInput("need e ≥ 1 and ℓ ≥ 2".into()));
    }
    Ok(T::one() + T::from_frac(1, ell as i64 - 1) - T::from_frac((t * c_f + 1) as i64, e as i64))
}

/// A filtration given by explicit subgroups `G_0 ⊇ G_1 ⊇ …` of an ambient
/// group `G`, each normal in `G`.
#[derive(Clone, Debug)]
pub struct SubgroupFiltration {
    ell: u64,
    group: PermGroup,
    levels: Vec<PermGroup>,
}

impl SubgroupFiltration {
    pub fn new(ell: u64, group: PermGroup, levels: Vec<PermGroup>) -> Result<Self> {
        let mut levels = levels;
        while levels.last().is_some_and(|g| g.is_trivial()) {
            levels.pop();
        }
        for (i, level) in levels.iter().enumerate() {
            if !level.is_subgroup_of(&group) || !level.is_normal_in(&group) {
                return Err(Error::InvalidFiltration(format!("G_{i} is not a normal subgroup of G")));
            }
            if i > 0 && !level.is_subgroup_of(&levels[i - 1]) {
                return Err(Error::InvalidFiltration(format!("G_{i} is not contained in G_{}", i - 1)));
            }
        }
        let s = SubgroupFiltration { ell, group, levels };
        s.profile()?;
        if let Some(g0) = s.levels.first() {
            let g1 = s.level(1);
            let t = s.profile()?.tame_degree() as usize;
            let cyclic = g0.elements().any(|g| {
                let mut p = g.clone();
                let mut k = 1;
                while !g1.contains(&p) {
                    p = p.compose(g);
                    k += 1;
                }
                k == t
            });
            if !cyclic {
                return Err(Error::InvalidFiltration("G_0/G_1 is not cyclic".into()));
            }
        }
        Ok(s)
    }

    pub fn ell(&self) -> u64 {
        self.ell
    }

    pub fn group(&self) -> &PermGroup {
        &self.group
    }

    pub fn levels(&self) -> &[PermGroup] {
        &self.levels
    }

    /// `G_i`, trivial past the last stored level.
    pub fn level(&self, i: usize) -> PermGroup {
        self.levels.get(i).cloned().unwrap_or_else(|| PermGroup::trivial(self.group.degree()))
    }

    pub fn profile(&self) -> Result<Filtration> {
        Filtration::new(self.ell, self.levels.iter().map(|g| g.order() as u64).collect())
    }

    /// `H_i = G_i ∩ H`, the filtration of a subgroup `H`.
    pub fn restrict(&self, h: &PermGroup) -> Result<SubgroupFiltration> {
        if !h.is_subgroup_of(&self.group) {
            return Err(Error::InvalidSubgroup("H is not a subgroup of G".into()));
        }
        let levels: Vec<PermGroup> = self.levels.iter().map(|g| g.intersection(h)).collect();
        let mut levels = levels;
        while levels.last().is_some_and(|g| g.is_trivial()) {
            levels.pop();
        }
        Ok(SubgroupFiltration { ell: self.ell, group: h.clone(), levels })
    }
}

/// The filtration of a normal subgroup `H` and the induced filtration of `G/H`.
#[derive(Clone, Debug)]
pub struct InducedFiltrations {
    pub sub: SubgroupFiltration,
    pub quotient: Filtration,
    /// Preimages `G_k H` of the quotient groups `(G/H)_j`.
    pub quotient_preimages: Vec<PermGroup>,
}

/// Restricts the filtration to a normal subgroup `H` and pushes it to `G/H`
/// via `(G/H)_j = G_{⌈ψ_H(j)⌉} H / H`. Errors when `H` is not normal or the
/// pushed-forward chain is not constant on each interval `(j−1, j]`, which
/// rules out a genuine ramification filtration.
pub fn induced_filtrations<T: ExactScalar>(f: &SubgroupFiltration, h: &PermGroup) -> Result<InducedFiltrations> {
    if !h.is_subgroup_of(&f.group) || !h.is_normal_in(&f.group) {
        return Err(Error::InvalidInput("H is not a normal subgroup of G".into()));
    }
    let sub = f.restrict(h)?;
    let psi_h = sub.profile()?.herbrand::<T>();
    let quotient_order = |k: usize| {
        let gk = f.level(k);
        gk.order() / gk.intersection(h).order()
    };
    let len = f.levels.len();
    let mut orders = Vec::new();
    let mut preimages = Vec::new();
    let mut prev: Option<T> = None;
    loop {
        let j = orders.len() as i64;
        let x = psi_h.psi(&T::from_int(j))?;
        let k = x.ceil_int() as usize;
        let value = quotient_order(k);
        if let Some(prev) = prev {
            let lo = prev.floor_int() as usize + 1;
            if (lo..=k).any(|i| quotient_order(i) != value) {
                return Err(Error::InvalidFiltration(format!(
                    "induced quotient filtration is not constant on ({}, {j}]",
                    j - 1
                )));
            }
        }
        if k >= len {
            break;
        }
        orders.push(value as u64);
        let mut gens = f.level(k).gens().to_vec();
        gens.extend(h.gens().iter().cloned());
        preimages.push(PermGroup::generate(f.group.degree(), gens)?);
        prev = Some(x);
    }
    let quotient = Filtration::new(f.ell, orders)?;
    Ok(InducedFiltrations { sub, quotient, quotient_preimages: preimages })
}

/// One evaluation of `|G^x| = |H^{ψ_{G/H}(x)}| · |(G/H)^x|`.
#[derive(Clone, Debug, Serialize)]
pub struct ExactSequenceCheck<T> {
    pub x: T,
    pub upper_g: u64,
    pub upper_h: u64,
    pub upper_quotient: u64,
    pub holds: bool,
}

/// Checks the upper-numbering exact sequence
/// `1 → H^{ψ_{G/H}(x)} → G^x → (G/H)^x → 1` at every breakpoint of `φ_G`,
/// at the midpoints between them, and once past the last jump.
pub fn exact_sequence_checks<T: ExactScalar>(
    f: &SubgroupFiltration,
    h: &PermGroup,
) -> Result<Vec<ExactSequenceCheck<T>>> {
    let induced = induced_filtrations::<T>(f, h)?;
    let hg = f.profile()?.herbrand::<T>();
    let hh = induced.sub.profile()?.herbrand::<T>();
    let hq = induced.quotient.herbrand::<T>();
    let sub_profile = induced.sub.profile()?;
    let g_profile = f.profile()?;
    let knots: Vec<T> = hg.breakpoints().map(|(_, v)| v.clone()).collect();
    let mut points = Vec::new();
    for (i, k) in knots.iter().enumerate() {
        points.push(k.clone());
        let next = knots.get(i + 1).cloned().unwrap_or_else(|| k.clone() + T::one());
        points.push((k.clone() + next) / T::from_int(2));
    }
    points.push(knots.last().cloned().unwrap_or_else(T::zero) + T::one());
    points
        .into_iter()
        .map(|x| {
            let (_, upper_g) = hg.upper_numbering(&x)?;
            let y = hq.psi(&x)?;
            let (hi, _) = hh.upper_numbering(&y)?;
            let upper_h = sub_profile.order(hi);
            let (_, upper_quotient) = hq.upper_numbering(&x)?;
            debug_assert_eq!(upper_g, g_profile.order(hg.psi(&x)?.ceil_int() as usize));
            Ok(ExactSequenceCheck { holds: upper_g == upper_h * upper_quotient, x, upper_g, upper_h, upper_quotient })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::Ratio;

    type Q = Ratio<i64>;

    fn q(n: i64, d: i64) -> Q {
        Q::new(n, d)
    }

    fn example_f() -> Filtration {
        Filtration::new(2, vec![12, 4, 1]).unwrap()
    }

    fn example_e() -> Filtration {
        let p: Profile = "24,8,2x8,1".parse().unwrap();
        Filtration::new(2, p.0).unwrap()
    }

    #[test]
    fn profile_parsing() {
        let p: Profile = "24,8,2x8".parse().unwrap();
        assert_eq!(p.0, vec![24, 8, 2, 2, 2, 2, 2, 2, 2, 2]);
        assert!("".parse::<Profile>().is_err());
        assert!("3,a".parse::<Profile>().is_err());
    }

    #[test]
    fn validation() {
        assert!(Filtration::new(2, vec![12, 8]).is_err());
        assert!(Filtration::new(2, vec![4, 8]).is_err());
        assert!(Filtration::new(2, vec![12, 3]).is_err());
        assert!(Filtration::new(4, vec![2]).is_err());
        assert!(Filtration::new(2, vec![4, 1]).is_err()); // tame degree even
        assert_eq!(Filtration::new(3, vec![2, 1, 1]).unwrap().c(), Some(0));
    }

    #[test]
    fn phi_of_example_f() {
        let h = example_f().herbrand::<Q>();
        for k in 1..20 {
            let x = q(k, 3) + Q::from_int(1);
            assert_eq!(h.phi(&x).unwrap(), (Q::from_int(4) + (x - Q::from_int(1))) / Q::from_int(12));
        }
        assert_eq!(h.phi(&Q::from_int(9)).unwrap(), Q::from_int(1));
        assert_eq!(h.psi(&Q::from_int(1)).unwrap(), Q::from_int(9));
        assert!(h.phi(&q(-1, 2)).is_err());
        assert!(h.psi(&q(-1, 2)).is_err());
    }

    #[test]
    fn phi_is_identity_when_unramified() {
        let h = Filtration::unramified(2).unwrap().herbrand::<Q>();
        for k in 0..10 {
            assert_eq!(h.phi(&q(k, 3)).unwrap(), q(k, 3));
            assert_eq!(h.psi(&q(k, 3)).unwrap(), q(k, 3));
            if k > 0 {
                assert_eq!(h.upper_numbering(&q(k, 3)).unwrap().1, 1);
            }
        }
    }

    #[test]
    fn c_and_m_values() {
        let f = c_m_values::<Q>(&example_f()).unwrap();
        assert_eq!((f.c, f.m), (Some(1), Q::from_int(9)));
        let e = c_m_values::<Q>(&example_e()).unwrap();
        assert_eq!((e.c, e.m), (Some(9), Q::from_int(9)));
        let tame = Filtration::new(3, vec![2]).unwrap();
        assert_eq!(c_m_values::<Q>(&tame).unwrap().c, Some(0));
    }

    #[test]
    fn fontaine_predicate() {
        assert!(is_fontaine::<Q>(&example_f()).unwrap());
        assert!(is_fontaine::<Q>(&example_e()).unwrap());
        assert!(is_fontaine::<Q>(&Filtration::new(3, vec![2]).unwrap()).unwrap());
        assert!(!is_fontaine::<Q>(&Filtration::new(2, vec![2, 2, 2, 1]).unwrap()).unwrap());
    }

    #[test]
    fn upper_numbering_of_e() {
        let h = example_e().herbrand::<Q>();
        assert_eq!(h.upper_numbering(&Q::from_int(0)).unwrap(), (0, 24));
        assert_eq!(h.upper_numbering(&Q::from_int(1)).unwrap(), (9, 2));
        assert_eq!(h.upper_numbering(&q(1001, 1000)).unwrap().1, 1);
        // For F the group at u = 1 is already trivial.
        let hf = example_f().herbrand::<Q>();
        assert_eq!(hf.upper_numbering(&Q::from_int(1)).unwrap(), (9, 1));
    }

    #[test]
    fn conductor_and_root_discriminant() {
        let tame = Filtration::new(3, vec![2]).unwrap();
        assert_eq!(conductor_exponent_abelian::<Q>(&tame).unwrap().value, Q::from_int(1));
        let qi = Filtration::new(2, vec![2, 2, 1]).unwrap();
        let cond = conductor_exponent_abelian::<Q>(&qi).unwrap();
        assert_eq!(cond.value, Q::from_int(2));
        assert!(cond.integral);
        assert_eq!(root_disc_ord::<Q>(&qi, 2).unwrap(), Q::from_int(1));
        assert!(root_disc_ord::<Q>(&qi, 4).is_err());
        assert!(root_disc_ord::<Q>(&qi, 0).is_err());
        assert_eq!(root_disc_ord::<Q>(&Filtration::unramified(2).unwrap(), 1).unwrap(), Q::from_int(0));
        let big = Filtration::new(2, vec![256, 256]).unwrap();
        assert_eq!(root_disc_ord::<Q>(&big, 256).unwrap(), q(255, 128));
    }

    #[test]
    fn propagation() {
        assert_eq!(bound_propagation(1, &Q::from_int(9), 1).unwrap(), (Q::from_int(9), 1));
        assert_eq!(bound_propagation(5, &Q::from_int(3), 2).unwrap(), (Q::from_int(15), 10));
        assert!(bound_propagation(0, &Q::from_int(3), 2).is_err());
    }

    #[test]
    fn remark_bound_dominates_fontaine_root_discriminant() {
        for f in [example_f(), example_e(), Filtration::new(2, vec![2, 2]).unwrap()] {
            let e = f.order(0);
            let c = f.c().unwrap() as u64;
            let ord = root_disc_ord::<Q>(&f, e).unwrap();
            assert!(ord <= fontaine_root_disc_bound::<Q>(f.ell(), 1, c, e).unwrap());
        }
    }
}
