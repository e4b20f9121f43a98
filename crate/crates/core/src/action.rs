//! Matrix groups over small fields, their permutation actions on vectors
//! and theta characteristics, irreducibility by spinning, the symmetric
//! group permutation module, and classification of groups generated by
//! transvections.

use std::collections::{HashMap, VecDeque};
use std::sync::Arc;

use indexmap::IndexSet;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::{FieldElem, GaloisField};
use crate::group::{Perm, PermGroup, DEFAULT_GROUP_CAP};
use crate::linalg::{all_vectors, echelon_basis, Matrix, SympVector};
use crate::symplectic::{Parity, SymplecticSpace, ThetaChar};

/// Largest number of projective points scanned by [`is_irreducible`].
pub const SPIN_CAP: u64 = 1 << 22;

/// A matrix group with its elements materialized breadth-first.
#[derive(Clone, Debug)]
pub struct MatrixGroup {
    field: Arc<GaloisField>,
    dim: usize,
    gens: Vec<Matrix>,
    elements: IndexSet<Matrix>,
}

impl MatrixGroup {
    pub fn generate(field: Arc<GaloisField>, dim: usize, gens: Vec<Matrix>) -> Result<Self> {
        Self::generate_with_cap(field, dim, gens, DEFAULT_GROUP_CAP)
    }

    pub fn generate_with_cap(field: Arc<GaloisField>, dim: usize, gens: Vec<Matrix>, cap: usize) -> Result<Self> {
        for g in &gens {
            if g.dim() != dim {
                return Err(Error::DimensionMismatch { expected: dim, found: g.dim() });
            }
            if !g.is_invertible(&field) {
                return Err(Error::InvalidMatrix("generator is singular".into()));
            }
        }
        let mut elements = IndexSet::new();
        elements.insert(Matrix::identity(dim));
        let mut queue = VecDeque::from([0usize]);
        while let Some(i) = queue.pop_front() {
            for g in &gens {
                let next = g.mul(&field, &elements[i])?;
                if !elements.contains(&next) {
                    if elements.len() >= cap {
                        return Err(Error::Resource { what: "matrix group enumeration".into(), limit: cap as u64 });
                    }
                    elements.insert(next);
                    queue.push_back(elements.len() - 1);
                }
            }
        }
        Ok(MatrixGroup { field, dim, gens, elements })
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn gens(&self) -> &[Matrix] {
        &self.gens
    }

    pub fn elements(&self) -> impl Iterator<Item = &Matrix> {
        self.elements.iter()
    }

    pub fn contains(&self, m: &Matrix) -> bool {
        self.elements.contains(m)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn field(&self) -> &GaloisField {
        &self.field
    }
}

/// The set a matrix group is compiled to act on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ActionDomain {
    Vectors,
    NonzeroVectors,
    Theta(Parity),
}

#[derive(Clone, Debug)]
enum Point {
    Vector(SympVector),
    Theta(ThetaChar),
}

/// A symplectic matrix action compiled to permutations of an enumerated set.
/// Thetas are acted on by `theta -> theta ∘ sigma^{-1}` so that compilation
/// is a homomorphism for left composition.
#[derive(Clone, Debug)]
pub struct GroupAction {
    space: SymplecticSpace,
    domain: ActionDomain,
    points: Vec<Point>,
    /// vector index (of the vector or theta shift) -> point index
    lookup: HashMap<usize, u32>,
}

impl GroupAction {
    pub fn new(space: &SymplecticSpace, domain: ActionDomain) -> Result<Self> {
        let q = space.q();
        let points: Vec<Point> = match domain {
            ActionDomain::Vectors => space.vectors()?.into_iter().map(Point::Vector).collect(),
            ActionDomain::NonzeroVectors => space.nonzero_vectors()?.into_iter().map(Point::Vector).collect(),
            ActionDomain::Theta(parity) => space.enumerate_theta(parity)?.into_iter().map(Point::Theta).collect(),
        };
        let lookup = points
            .iter()
            .enumerate()
            .map(|(i, p)| {
                let key = match p {
                    Point::Vector(v) => v.index(q),
                    Point::Theta(t) => t.shift().index(q),
                };
                (key, i as u32)
            })
            .collect();
        Ok(GroupAction { space: space.clone(), domain, points, lookup })
    }

    pub fn size(&self) -> usize {
        self.points.len()
    }

    pub fn domain(&self) -> ActionDomain {
        self.domain
    }

    pub fn space(&self) -> &SymplecticSpace {
        &self.space
    }

    pub fn theta(&self, i: u32) -> Option<&ThetaChar> {
        match &self.points[i as usize] {
            Point::Theta(t) => Some(t),
            Point::Vector(_) => None,
        }
    }

    pub fn vector(&self, i: u32) -> Option<&SympVector> {
        match &self.points[i as usize] {
            Point::Vector(v) => Some(v),
            Point::Theta(_) => None,
        }
    }

    /// Index of a theta characteristic in this action's point list.
    pub fn theta_index(&self, theta: &ThetaChar) -> Option<u32> {
        self.lookup.get(&theta.shift().index(self.space.q())).copied()
    }

    pub fn vector_index(&self, v: &SympVector) -> Option<u32> {
        self.lookup.get(&v.index(self.space.q())).copied()
    }

    pub fn compile(&self, sigma: &Matrix) -> Result<Perm> {
        let f = self.space.field();
        let q = self.space.q();
        let images = match self.domain {
            ActionDomain::Vectors | ActionDomain::NonzeroVectors => {
                if !sigma.is_invertible(f) {
                    return Err(Error::InvalidMatrix("matrix is singular".into()));
                }
                self.points
                    .iter()
                    .map(|p| match p {
                        Point::Vector(v) => sigma.apply(f, v).map(|w| self.lookup[&w.index(q)]),
                        Point::Theta(_) => unreachable!(),
                    })
                    .collect::<Result<Vec<u32>>>()?
            }
            ActionDomain::Theta(_) => {
                let inv = sigma.inverse(f).ok_or(Error::InvalidIsometry)?;
                self.points
                    .iter()
                    .map(|p| match p {
                        Point::Theta(t) => {
                            let image = self.space.act_on_theta(&inv, t)?;
                            self.lookup.get(&image.shift().index(q)).copied().ok_or_else(|| {
                                Error::InvalidInput("matrix does not preserve the theta set".into())
                            })
                        }
                        Point::Vector(_) => unreachable!(),
                    })
                    .collect::<Result<Vec<u32>>>()?
            }
        };
        Perm::from_images(images)
    }

    /// The permutation group generated by the compiled generators.
    pub fn compile_group(&self, gens: &[Matrix]) -> Result<PermGroup> {
        let perms = gens.iter().map(|g| self.compile(g)).collect::<Result<Vec<_>>>()?;
        PermGroup::generate(self.size(), perms)
    }
}

/// Basis of the smallest subspace containing `v` and stable under `gens`.
pub fn spin(field: &GaloisField, gens: &[Matrix], v: &SympVector) -> Result<Vec<SympVector>> {
    let mut basis = echelon_basis(field, std::slice::from_ref(v));
    let mut frontier: Vec<SympVector> = basis.clone();
    while let Some(w) = frontier.pop() {
        for g in gens {
            let image = g.apply(field, &w)?;
            let mut candidate = basis.clone();
            candidate.push(image.clone());
            let reduced = echelon_basis(field, &candidate);
            if reduced.len() > basis.len() {
                basis = reduced;
                frontier.push(image);
            }
        }
    }
    Ok(basis)
}

/// True iff no proper nonzero subspace of `F^dim` is stable under `gens`.
/// Every line is spun; a proper result witnesses reducibility.
pub fn is_irreducible(field: &GaloisField, dim: usize, gens: &[Matrix]) -> Result<bool> {
    if dim == 0 {
        return Err(Error::InvalidInput("zero-dimensional module".into()));
    }
    let q = field.order() as u64;
    let points = (q.saturating_pow(dim as u32) - 1) / (q - 1);
    if points > SPIN_CAP {
        return Err(Error::Resource { what: format!("spinning {points} lines"), limit: SPIN_CAP });
    }
    for v in all_vectors(field.order(), dim).skip(1) {
        // One representative per line: leading nonzero coordinate is 1.
        let lead = v.coords().iter().find(|c| !c.is_zero()).copied();
        if lead != Some(FieldElem::ONE) {
            continue;
        }
        if spin(field, gens, &v)?.len() < dim {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Counts symplectic isometries (optionally also preserving `theta`) by
/// backtracking over images of the standard basis.
pub fn isometry_count(space: &SymplecticSpace, theta: Option<&ThetaChar>) -> Result<u64> {
    let vectors = space.nonzero_vectors()?;
    let dim = space.dim();
    let basis: Vec<SympVector> = (0..dim).map(|i| space.basis(i)).collect();
    let targets: Vec<Option<FieldElem>> = match theta {
        Some(t) => basis.iter().map(|e| space.theta_eval(t, e).map(Some)).collect::<Result<_>>()?,
        None => vec![None; dim],
    };
    let mut chosen: Vec<SympVector> = Vec::with_capacity(dim);
    fn extend(
        space: &SymplecticSpace,
        vectors: &[SympVector],
        basis: &[SympVector],
        targets: &[Option<FieldElem>],
        theta: Option<&ThetaChar>,
        chosen: &mut Vec<SympVector>,
    ) -> Result<u64> {
        let i = chosen.len();
        if i == basis.len() {
            return Ok(1);
        }
        let mut total = 0;
        for v in vectors {
            let compatible = chosen
                .iter()
                .enumerate()
                .all(|(j, w)| space.pairing(w, v).ok() == space.pairing(&basis[j], &basis[i]).ok());
            if !compatible {
                continue;
            }
            if let (Some(t), Some(target)) = (theta, targets[i]) {
                if space.theta_eval(t, v)? != target {
                    continue;
                }
            }
            chosen.push(v.clone());
            total += extend(space, vectors, basis, targets, theta, chosen)?;
            chosen.pop();
        }
        Ok(total)
    }
    extend(space, &vectors, &basis, &targets, theta, &mut chosen)
}

/// `|Sp_{2n}(F_q)| = q^{n^2} prod_{i=1}^n (q^{2i} - 1)`.
pub fn sp_order(n: u32, q: u64) -> u128 {
    let q = q as u128;
    (1..=n).fold(q.pow(n * n), |acc, i| acc * (q.pow(2 * i) - 1))
}

/// `|O^±_{2n}(F_q)| = 2 q^{n(n-1)} (q^n ∓ 1) prod_{i=1}^{n-1} (q^{2i} - 1)`.
pub fn orthogonal_order(plus: bool, n: u32, q: u64) -> u128 {
    let q = q as u128;
    let qn = q.pow(n);
    let first = if plus { qn - 1 } else { qn + 1 };
    (1..n).fold(2 * q.pow(n * (n - 1)) * first, |acc, i| acc * (q.pow(2 * i) - 1))
}

pub fn factorial(m: u32) -> u128 {
    (1..=m as u128).product()
}

/// Label assigned to an irreducible group generated by transvections.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum GroupLabel {
    Symplectic { q: u32 },
    Orthogonal { plus: bool, q: u32 },
    Symmetric { m: u32 },
    Dihedral { m: u32 },
    Reducible,
    Unknown,
}

impl std::fmt::Display for GroupLabel {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            GroupLabel::Symplectic { q } => write!(f, "symplectic({q})"),
            GroupLabel::Orthogonal { plus: true, q } => write!(f, "orthogonal+({q})"),
            GroupLabel::Orthogonal { plus: false, q } => write!(f, "orthogonal-({q})"),
            GroupLabel::Symmetric { m } => write!(f, "symmetric({m})"),
            GroupLabel::Dihedral { m } => write!(f, "dihedral({m})"),
            GroupLabel::Reducible => write!(f, "reducible"),
            GroupLabel::Unknown => write!(f, "unknown"),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Classification {
    pub label: GroupLabel,
    pub order: u64,
    pub irreducible: bool,
    /// Shift of the theta characteristic fixed by the group, if any, and its Arf bit.
    pub fixed_theta: Option<(String, u8)>,
}

/// Identifies the group generated by transvections `gens` on `space` by
/// irreducibility, order and stabilized theta characteristic. Fingerprints
/// that match no candidate give [`GroupLabel::Unknown`].
pub fn classify_transvection_group(space: &SymplecticSpace, gens: &[Matrix]) -> Result<Classification> {
    classify_transvection_group_with_cap(space, gens, DEFAULT_GROUP_CAP)
}

pub fn classify_transvection_group_with_cap(
    space: &SymplecticSpace,
    gens: &[Matrix],
    cap: usize,
) -> Result<Classification> {
    if let Some(i) = gens.iter().position(|g| !space.is_transvection(g)) {
        return Err(Error::InvalidInput(format!("generator {i} is not a symplectic transvection")));
    }
    let f = space.field();
    let group = MatrixGroup::generate_with_cap(space.field_arc(), space.dim(), gens.to_vec(), cap)?;
    let order = group.order() as u128;
    let irreducible = is_irreducible(f, space.dim(), gens)?;

    let fixed_theta = if f.characteristic() == 2 {
        let mut found = None;
        for theta in space.enumerate_theta(Parity::All)? {
            let fixed = gens.iter().try_fold(true, |ok, g| Ok::<_, Error>(ok && space.act_on_theta(g, &theta)? == theta))?;
            if fixed {
                found = Some(theta);
                break;
            }
        }
        found
    } else {
        None
    };
    let fixed_theta_report = match &fixed_theta {
        Some(t) => Some((t.shift().render(), space.arf(t)?)),
        None => None,
    };

    let label = if !irreducible {
        GroupLabel::Reducible
    } else {
        identify(space, &group, order, fixed_theta.as_ref())?
    };
    Ok(Classification { label, order: order as u64, irreducible, fixed_theta: fixed_theta_report })
}

fn identify(space: &SymplecticSpace, group: &MatrixGroup, order: u128, theta: Option<&ThetaChar>) -> Result<GroupLabel> {
    let f = space.field();
    let n = space.half_dim() as u32;
    let mut subfields = f.subfield_orders();
    subfields.reverse();
    if let Some(&q) = subfields.iter().find(|&&q| sp_order(n, q as u64) == order) {
        return Ok(GroupLabel::Symplectic { q });
    }
    if n >= 2 {
        if let Some(theta) = theta {
            let plus = space.arf(theta)? == 0;
            if let Some(&q) = subfields.iter().find(|&&q| orthogonal_order(plus, n, q as u64) == order) {
                return Ok(GroupLabel::Orthogonal { plus, q });
            }
        }
        for m in [2 * n + 1, 2 * n + 2] {
            if factorial(m) == order {
                return Ok(GroupLabel::Symmetric { m });
            }
        }
    }
    if n == 1 && order % 2 == 0 {
        let m = (order / 2) as u64;
        let q = f.order() as u64;
        let divides = (q - 1) % m == 0 || (q + 1) % m == 0;
        if divides && has_element_of_order(group, m as usize)? {
            return Ok(GroupLabel::Dihedral { m: m as u32 });
        }
    }
    Ok(GroupLabel::Unknown)
}

fn has_element_of_order(group: &MatrixGroup, k: usize) -> Result<bool> {
    let f = group.field();
    for g in group.elements() {
        let mut p = g.clone();
        let mut ord = 1;
        while !p.is_identity() {
            p = p.mul(f, g)?;
            ord += 1;
        }
        if ord == k {
            return Ok(true);
        }
    }
    Ok(false)
}

/// The `F_2[S_m]`-module `Y = {a in F_2^m : sum a_i = 0}` (modulo the
/// all-ones vector when `m` is even) with pairing `sum a_i b_i`, written in
/// a symplectic basis so that transpositions act by transvections.
#[derive(Clone, Debug)]
pub struct PermModule {
    m: usize,
    space: SymplecticSpace,
    /// Representatives in `F_2^m` of the symplectic basis `e_1..e_n, f_1..f_n`.
    basis: Vec<Vec<u8>>,
}

fn dot(a: &[u8], b: &[u8]) -> u8 {
    a.iter().zip(b).fold(0, |acc, (x, y)| acc ^ (x & y))
}

fn axpy(a: &[u8], b: &[u8]) -> Vec<u8> {
    a.iter().zip(b).map(|(x, y)| x ^ y).collect()
}

impl PermModule {
    pub fn new(m: usize) -> Result<Self> {
        if m < 3 {
            return Err(Error::InvalidInput(format!("permutation module needs m >= 3, got {m}")));
        }
        let mut remaining: Vec<Vec<u8>> = (1..m)
            .map(|j| {
                let mut y = vec![0u8; m];
                y[0] = 1;
                y[j] = 1;
                y
            })
            .collect();
        let mut es = Vec::new();
        let mut fs = Vec::new();
        while let Some(pos) = remaining
            .iter()
            .position(|e| remaining.iter().any(|f| dot(e, f) == 1))
        {
            let e = remaining.remove(pos);
            let fpos = remaining.iter().position(|f| dot(&e, f) == 1).expect("partner exists");
            let f = remaining.remove(fpos);
            remaining = remaining
                .into_iter()
                .map(|w| {
                    let mut w = w;
                    if dot(&w, &f) == 1 {
                        w = axpy(&w, &e);
                    }
                    if dot(&w, &e) == 1 {
                        w = axpy(&w, &f);
                    }
                    w
                })
                .collect();
            es.push(e);
            fs.push(f);
        }
        let n = es.len();
        let expected = if m % 2 == 1 { m - 1 } else { m - 2 };
        debug_assert_eq!(2 * n, expected);
        let space = SymplecticSpace::new(n, 2)?;
        let mut basis = es;
        basis.extend(fs);
        Ok(PermModule { m, space, basis })
    }

    pub fn letters(&self) -> usize {
        self.m
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn space(&self) -> &SymplecticSpace {
        &self.space
    }

    /// Coordinates of `y` (a vector of `Y`) in the symplectic basis.
    pub fn coords(&self, y: &[u8]) -> Result<SympVector> {
        if y.len() != self.m {
            return Err(Error::DimensionMismatch { expected: self.m, found: y.len() });
        }
        if y.iter().fold(0, |a, b| a ^ (b & 1)) != 0 {
            return Err(Error::InvalidInput("vector has odd weight".into()));
        }
        let n = self.space.half_dim();
        let mut c = vec![0u8; 2 * n];
        for i in 0..n {
            c[i] = dot(y, &self.basis[n + i]);
            c[n + i] = dot(y, &self.basis[i]);
        }
        Ok(SympVector::from_values(&c))
    }

    /// Matrix of a permutation of the `m` letters.
    pub fn matrix_of(&self, perm: &Perm) -> Result<Matrix> {
        if perm.degree() != self.m {
            return Err(Error::DimensionMismatch { expected: self.m, found: perm.degree() });
        }
        let cols = self
            .basis
            .iter()
            .map(|b| {
                let mut image = vec![0u8; self.m];
                for (i, &x) in b.iter().enumerate() {
                    image[perm.apply(i as u32) as usize] = x;
                }
                self.coords(&image)
            })
            .collect::<Result<Vec<_>>>()?;
        Matrix::from_columns(&cols)
    }

    /// Images of all transpositions `(i j)`, `i < j`.
    pub fn transposition_matrices(&self) -> Result<Vec<Matrix>> {
        let mut out = Vec::new();
        for i in 0..self.m as u32 {
            for j in i + 1..self.m as u32 {
                out.push(self.matrix_of(&Perm::transposition(self.m, i, j)?)?);
            }
        }
        Ok(out)
    }
}
