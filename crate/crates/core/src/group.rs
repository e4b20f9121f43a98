//! Permutation groups materialized by full enumeration: orbits,
//! stabilizers, conjugates and double cosets.

use std::collections::VecDeque;
use std::fmt;

use indexmap::IndexSet;

use crate::error::{Error, Result};

/// Default upper bound on the number of materialized group elements.
pub const DEFAULT_GROUP_CAP: usize = 1_000_000;

/// A permutation of `0..degree`, stored as its image list.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm(Vec<u32>);

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.cycle_string())
    }
}

impl Perm {
    pub fn identity(degree: usize) -> Self {
        Perm((0..degree as u32).collect())
    }

    /// Validates that `images` is a bijection of `0..images.len()`.
    pub fn from_images(images: Vec<u32>) -> Result<Self> {
        let mut seen = vec![false; images.len()];
        for &i in &images {
            match seen.get_mut(i as usize) {
                Some(s) if !*s => *s = true,
                _ => return Err(Error::InvalidInput(format!("{images:?} is not a permutation"))),
            }
        }
        Ok(Perm(images))
    }

    /// Builds a permutation of `0..degree` from 0-based cycles.
    pub fn from_cycles(degree: usize, cycles: &[Vec<u32>]) -> Result<Self> {
        let mut images: Vec<u32> = (0..degree as u32).collect();
        let mut used = vec![false; degree];
        for cycle in cycles {
            for (k, &a) in cycle.iter().enumerate() {
                let b = cycle[(k + 1) % cycle.len()];
                if a as usize >= degree || b as usize >= degree || used[a as usize] {
                    return Err(Error::InvalidInput(format!("bad cycle {cycle:?} on {degree} points")));
                }
                used[a as usize] = true;
                images[a as usize] = b;
            }
        }
        Perm::from_images(images)
    }

    /// The transposition `(i j)`.
    pub fn transposition(degree: usize, i: u32, j: u32) -> Result<Self> {
        Self::from_cycles(degree, &[vec![i, j]])
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    #[inline]
    pub fn apply(&self, x: u32) -> u32 {
        self.0[x as usize]
    }

    pub fn images(&self) -> &[u32] {
        &self.0
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Perm) -> Perm {
        Perm(other.0.iter().map(|&x| self.0[x as usize]).collect())
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0u32; self.0.len()];
        for (i, &x) in self.0.iter().enumerate() {
            inv[x as usize] = i as u32;
        }
        Perm(inv)
    }

    /// `g^{-1} self g`.
    pub fn conjugate_by(&self, g: &Perm) -> Perm {
        g.inverse().compose(self).compose(g)
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &x)| i as u32 == x)
    }

    pub fn order(&self) -> usize {
        let mut p = self.clone();
        let mut k = 1;
        while !p.is_identity() {
            p = p.compose(self);
            k += 1;
        }
        k
    }

    pub fn fixed_points(&self) -> usize {
        self.0.iter().enumerate().filter(|(i, &x)| *i as u32 == x).count()
    }

    /// Nontrivial cycles in 0-based form, each starting at its least point.
    pub fn cycles(&self) -> Vec<Vec<u32>> {
        let mut seen = vec![false; self.0.len()];
        let mut out = Vec::new();
        for start in 0..self.0.len() {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut x = start as u32;
            while !seen[x as usize] {
                seen[x as usize] = true;
                cycle.push(x);
                x = self.0[x as usize];
            }
            if cycle.len() > 1 {
                out.push(cycle);
            }
        }
        out
    }

    /// 1-based cycle notation, `()` for the identity.
    pub fn cycle_string(&self) -> String {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return "()".into();
        }
        cycles
            .iter()
            .map(|c| format!("({})", c.iter().map(|x| (x + 1).to_string()).collect::<Vec<_>>().join(",")))
            .collect()
    }
}

/// A finite permutation group with all elements materialized in
/// breadth-first order from the identity.
#[derive(Clone)]
pub struct PermGroup {
    degree: usize,
    gens: Vec<Perm>,
    elements: IndexSet<Perm>,
}

impl fmt::Debug for PermGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("PermGroup")
            .field("degree", &self.degree)
            .field("order", &self.order())
            .field("gens", &self.gens)
            .finish()
    }
}

impl PartialEq for PermGroup {
    fn eq(&self, other: &Self) -> bool {
        self.degree == other.degree
            && self.order() == other.order()
            && self.elements.iter().all(|e| other.contains(e))
    }
}

impl Eq for PermGroup {}

impl PermGroup {
    pub fn trivial(degree: usize) -> Self {
        let mut elements = IndexSet::new();
        elements.insert(Perm::identity(degree));
        PermGroup { degree, gens: Vec::new(), elements }
    }

    /// The group generated by `gens` with the default element cap.
    pub fn generate(degree: usize, gens: Vec<Perm>) -> Result<Self> {
        Self::generate_with_cap(degree, gens, DEFAULT_GROUP_CAP)
    }

    pub fn generate_with_cap(degree: usize, gens: Vec<Perm>, cap: usize) -> Result<Self> {
        if let Some(g) = gens.iter().find(|g| g.degree() != degree) {
            return Err(Error::InvalidInput(format!(
                "generator of degree {} in a group of degree {degree}",
                g.degree()
            )));
        }
        let gens: Vec<Perm> = gens.into_iter().filter(|g| !g.is_identity()).collect();
        let mut elements = IndexSet::new();
        elements.insert(Perm::identity(degree));
        let mut queue = VecDeque::from([0usize]);
        while let Some(i) = queue.pop_front() {
            for g in &gens {
                let next = g.compose(&elements[i]);
                if !elements.contains(&next) {
                    if elements.len() >= cap {
                        return Err(Error::Resource {
                            what: "group enumeration".into(),
                            limit: cap as u64,
                        });
                    }
                    elements.insert(next);
                    queue.push_back(elements.len() - 1);
                }
            }
        }
        Ok(PermGroup { degree, gens, elements })
    }

    /// The full symmetric group on `degree` points.
    pub fn symmetric(degree: usize) -> Result<Self> {
        let mut gens = Vec::new();
        if degree >= 2 {
            gens.push(Perm::transposition(degree, 0, 1)?);
            gens.push(Perm::from_cycles(degree, &[(0..degree as u32).collect()])?);
        }
        Self::generate(degree, gens)
    }

    /// A subgroup given by an explicit element list; fails unless the list
    /// is closed under composition.
    pub fn from_elements(degree: usize, elements: Vec<Perm>) -> Result<Self> {
        let set: IndexSet<Perm> = elements.iter().cloned().collect();
        if !set.contains(&Perm::identity(degree)) {
            return Err(Error::InvalidSubgroup("identity missing".into()));
        }
        for a in &set {
            if a.degree() != degree {
                return Err(Error::InvalidSubgroup("mixed degrees".into()));
            }
            for b in &set {
                if !set.contains(&a.compose(b)) {
                    return Err(Error::InvalidSubgroup("element list is not closed".into()));
                }
            }
        }
        Self::generate(degree, elements)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn gens(&self) -> &[Perm] {
        &self.gens
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> impl ExactSizeIterator<Item = &Perm> {
        self.elements.iter()
    }

    pub fn element(&self, i: usize) -> &Perm {
        &self.elements[i]
    }

    pub fn index_of(&self, g: &Perm) -> Option<usize> {
        self.elements.get_index_of(g)
    }

    pub fn contains(&self, g: &Perm) -> bool {
        self.elements.contains(g)
    }

    pub fn is_trivial(&self) -> bool {
        self.order() == 1
    }

    pub fn is_subgroup_of(&self, other: &PermGroup) -> bool {
        self.degree == other.degree && self.elements.iter().all(|g| other.contains(g))
    }

    /// `[self : sub]`; `sub` must be a subgroup.
    pub fn index(&self, sub: &PermGroup) -> usize {
        self.order() / sub.order()
    }

    /// Subgroup of elements satisfying `pred`; `pred` must cut out a subgroup.
    pub fn filter_subgroup(&self, pred: impl Fn(&Perm) -> bool) -> PermGroup {
        let elements: IndexSet<Perm> = self.elements.iter().filter(|g| pred(g)).cloned().collect();
        let gens = elements.iter().skip(1).cloned().collect::<Vec<_>>();
        let gens = minimal_gens(self.degree, gens);
        PermGroup { degree: self.degree, gens, elements }
    }

    pub fn intersection(&self, other: &PermGroup) -> PermGroup {
        self.filter_subgroup(|g| other.contains(g))
    }

    /// `g^{-1} H g`.
    pub fn conjugate(&self, g: &Perm) -> PermGroup {
        let ginv = g.inverse();
        let elements: IndexSet<Perm> = self.elements.iter().map(|h| ginv.compose(h).compose(g)).collect();
        let gens = self.gens.iter().map(|h| ginv.compose(h).compose(g)).collect();
        PermGroup { degree: self.degree, gens, elements }
    }

    /// Whether `self` is normalized by every element of `group`.
    pub fn is_normal_in(&self, group: &PermGroup) -> bool {
        self.is_subgroup_of(group)
            && group.gens.iter().all(|g| self.gens.iter().all(|h| self.contains(&h.conjugate_by(g))))
    }

    pub fn normalizer_in(&self, group: &PermGroup) -> PermGroup {
        group.filter_subgroup(|g| self.gens.iter().all(|h| self.contains(&h.conjugate_by(g))))
    }

    pub fn stabilizer(&self, x: u32) -> PermGroup {
        self.filter_subgroup(|g| g.apply(x) == x)
    }

    pub fn is_abelian(&self) -> bool {
        self.gens.iter().all(|a| self.gens.iter().all(|b| a.compose(b) == b.compose(a)))
    }

    pub fn has_element_of_order(&self, k: usize) -> bool {
        self.elements.iter().any(|g| g.order() == k)
    }

    pub fn orbit(&self, x: u32) -> Vec<u32> {
        orbit_under(&self.gens, self.degree, x)
    }

    /// Orbits on `0..degree`, each sorted, ordered by least element.
    pub fn orbits(&self) -> Vec<Vec<u32>> {
        orbits_under(&self.gens, self.degree)
    }

    pub fn is_transitive(&self) -> bool {
        self.degree == 0 || self.orbit(0).len() == self.degree
    }

    /// Number of points fixed by every element.
    pub fn fixed_points(&self) -> usize {
        (0..self.degree as u32).filter(|&x| self.gens.iter().all(|g| g.apply(x) == x)).count()
    }
}

impl PermGroup {
    /// Every subgroup, found by repeatedly adjoining single elements to the
    /// subgroups already known. Practical only for small groups.
    pub fn subgroups(&self) -> Result<Vec<PermGroup>> {
        let key = |h: &PermGroup| {
            let mut k: Vec<usize> = h.elements().map(|g| self.index_of(g).expect("subgroup element")).collect();
            k.sort_unstable();
            k
        };
        let trivial = PermGroup::trivial(self.degree);
        let mut seen: IndexSet<Vec<usize>> = IndexSet::new();
        seen.insert(key(&trivial));
        let mut found = vec![trivial];
        let mut next = 0;
        while next < found.len() {
            let base = found[next].clone();
            next += 1;
            for g in self.elements() {
                if base.contains(g) {
                    continue;
                }
                let mut gens = base.gens().to_vec();
                gens.push(g.clone());
                let h = PermGroup::generate(self.degree, gens)?;
                if seen.insert(key(&h)) {
                    found.push(h);
                }
            }
        }
        found.sort_by_key(|h| h.order());
        Ok(found)
    }

    pub fn normal_subgroups(&self) -> Result<Vec<PermGroup>> {
        Ok(self.subgroups()?.into_iter().filter(|h| h.is_normal_in(self)).collect())
    }
}

/// Drops generators already in the span of earlier ones.
fn minimal_gens(degree: usize, candidates: Vec<Perm>) -> Vec<Perm> {
    let mut gens: Vec<Perm> = Vec::new();
    let mut span = PermGroup::trivial(degree);
    for c in candidates {
        if !span.contains(&c) {
            gens.push(c);
            span = PermGroup::generate_with_cap(degree, gens.clone(), usize::MAX).expect("finite");
        }
    }
    gens
}

pub fn orbit_under(gens: &[Perm], degree: usize, x: u32) -> Vec<u32> {
    let mut seen = vec![false; degree];
    seen[x as usize] = true;
    let mut out = vec![x];
    let mut i = 0;
    while i < out.len() {
        let y = out[i];
        for g in gens {
            let z = g.apply(y);
            if !seen[z as usize] {
                seen[z as usize] = true;
                out.push(z);
            }
        }
        i += 1;
    }
    out.sort_unstable();
    out
}

/// Orbits of the group generated by `gens` on `0..degree`.
pub fn orbits_under(gens: &[Perm], degree: usize) -> Vec<Vec<u32>> {
    let mut assigned = vec![false; degree];
    let mut out = Vec::new();
    for x in 0..degree as u32 {
        if !assigned[x as usize] {
            let orb = orbit_under(gens, degree, x);
            for &y in &orb {
                assigned[y as usize] = true;
            }
            out.push(orb);
        }
    }
    out
}

/// One double coset `H g I` together with `[I : I ∩ H^g]`, `H^g = g^{-1} H g`.
#[derive(Clone, Debug)]
pub struct DoubleCoset {
    pub representative: Perm,
    pub size: usize,
    pub index_in_right: usize,
}

/// Enumerates `H \ G / I` by walking group elements. Errors unless `H` and
/// `I` are subgroups of `G`.
pub fn double_cosets(h: &PermGroup, g: &PermGroup, i: &PermGroup) -> Result<Vec<DoubleCoset>> {
    if !h.is_subgroup_of(g) {
        return Err(Error::InvalidSubgroup("left subgroup is not contained in the group".into()));
    }
    if !i.is_subgroup_of(g) {
        return Err(Error::InvalidSubgroup("right subgroup is not contained in the group".into()));
    }
    let mut assigned = vec![false; g.order()];
    let mut out = Vec::new();
    for (idx, rep) in g.elements().enumerate() {
        if assigned[idx] {
            continue;
        }
        let mut size = 0;
        for x in h.elements() {
            let xr = x.compose(rep);
            for y in i.elements() {
                let j = g.index_of(&xr.compose(y)).expect("closed under products");
                if !assigned[j] {
                    assigned[j] = true;
                    size += 1;
                }
            }
        }
        let conj = h.conjugate(rep);
        let meet = i.elements().filter(|y| conj.contains(y)).count();
        out.push(DoubleCoset { representative: rep.clone(), size, index_in_right: i.order() / meet });
    }
    Ok(out)
}
