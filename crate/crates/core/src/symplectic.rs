//! The standard symplectic space `F_q^{2n}`, transvections, theta
//! characteristics and their Arf invariants.
//!
//! Basis convention: `e_0, ..., e_{2n-1}` with `[e_i, e_j] = 1` when
//! `|i - j| = n` and `0` otherwise, so
//! `[u, v] = sum_j (u_j v_{n+j} - u_{n+j} v_j)`.

use std::sync::Arc;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::{FieldElem, GaloisField};
use crate::linalg::{all_vectors, Matrix, SympVector};

/// Largest theta/vector enumeration allowed (`q^{2n}`).
pub const ENUMERATION_CAP: u64 = 1 << 20;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymplecticSpace {
    n: usize,
    field: Arc<GaloisField>,
}

/// Which theta characteristics to enumerate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Even,
    Odd,
    All,
}

impl std::str::FromStr for Parity {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "even" | "+" => Ok(Parity::Even),
            "odd" | "-" => Ok(Parity::Odd),
            "all" => Ok(Parity::All),
            _ => Err(Error::InvalidInput(format!("unknown parity `{s}`"))),
        }
    }
}

/// A theta characteristic `theta_0 + a`, where
/// `theta_0(x) = sum_j x_j x_{n+j}` and `(theta_0 + a)(x) = theta_0(x) + [a, x]^2`.
/// Every theta characteristic has this form for a unique `a`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ThetaChar {
    shift: SympVector,
}

impl ThetaChar {
    pub fn base(dim: usize) -> Self {
        ThetaChar { shift: SympVector::zero(dim) }
    }

    pub fn with_shift(shift: SympVector) -> Self {
        ThetaChar { shift }
    }

    pub fn shift(&self) -> &SympVector {
        &self.shift
    }
}

/// Conjugacy invariants of a symplectic involution in characteristic 2.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct InvolutionInvariants {
    /// `rank(sigma - 1)`.
    pub t: usize,
    /// `1` iff `[v, (sigma - 1) v] != 0` for some `v`.
    pub delta: u8,
}

/// `1/2 q^n (q^n + 1)` even and `1/2 q^n (q^n - 1)` odd theta characteristics.
pub fn theta_count(q: u64, n: u32, parity: Parity) -> u64 {
    let qn = q.pow(n);
    match parity {
        Parity::Even => qn * (qn + 1) / 2,
        Parity::Odd => qn * (qn - 1) / 2,
        Parity::All => qn * qn,
    }
}

impl SymplecticSpace {
    pub fn new(n: usize, q: u32) -> Result<Self> {
        Self::with_field(n, Arc::new(GaloisField::new(q)?))
    }

    pub fn with_field(n: usize, field: Arc<GaloisField>) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidInput("symplectic space of dimension 0".into()));
        }
        Ok(SymplecticSpace { n, field })
    }

    pub fn half_dim(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        2 * self.n
    }

    pub fn field(&self) -> &GaloisField {
        &self.field
    }

    pub fn field_arc(&self) -> Arc<GaloisField> {
        Arc::clone(&self.field)
    }

    pub fn q(&self) -> u32 {
        self.field.order()
    }

    /// `q^{2n}`, saturating.
    pub fn size(&self) -> u64 {
        (self.q() as u64).saturating_pow(self.dim() as u32)
    }

    pub fn basis(&self, i: usize) -> SympVector {
        SympVector::unit(self.dim(), i)
    }

    pub fn vector(&self, values: &[u8]) -> Result<SympVector> {
        let v = SympVector::from_values(values);
        self.check(&v)?;
        if values.iter().any(|&c| c as u32 >= self.q()) {
            return Err(Error::InvalidInput(format!("coordinate out of range for F_{}", self.q())));
        }
        Ok(v)
    }

    fn check(&self, v: &SympVector) -> Result<()> {
        if v.dim() != self.dim() {
            return Err(Error::DimensionMismatch { expected: self.dim(), found: v.dim() });
        }
        Ok(())
    }

    fn check_matrix(&self, m: &Matrix) -> Result<()> {
        if m.dim() != self.dim() {
            return Err(Error::DimensionMismatch { expected: self.dim(), found: m.dim() });
        }
        Ok(())
    }

    fn check_enumerable(&self) -> Result<()> {
        if self.size() > ENUMERATION_CAP {
            return Err(Error::Resource {
                what: format!("enumerating {} vectors", self.size()),
                limit: ENUMERATION_CAP,
            });
        }
        Ok(())
    }

    /// All vectors in index order. Fails above [`ENUMERATION_CAP`].
    pub fn vectors(&self) -> Result<Vec<SympVector>> {
        self.check_enumerable()?;
        Ok(all_vectors(self.q(), self.dim()).collect())
    }

    pub fn nonzero_vectors(&self) -> Result<Vec<SympVector>> {
        Ok(self.vectors()?.into_iter().skip(1).collect())
    }

    /// The alternating pairing `[u, v]`.
    pub fn pairing(&self, u: &SympVector, v: &SympVector) -> Result<FieldElem> {
        self.check(u)?;
        self.check(v)?;
        Ok(self.pairing_unchecked(u, v))
    }

    fn pairing_unchecked(&self, u: &SympVector, v: &SympVector) -> FieldElem {
        let f = &*self.field;
        let n = self.n;
        (0..n).fold(FieldElem::ZERO, |acc, j| {
            let a = f.mul(u.get(j), v.get(n + j));
            let b = f.mul(u.get(n + j), v.get(j));
            f.add(acc, f.sub(a, b))
        })
    }

    /// `x + a [z, x] z`. With `a = 1` this is `tau_[z]`.
    pub fn transvection_apply(&self, z: &SympVector, a: FieldElem, x: &SympVector) -> Result<SympVector> {
        self.check(z)?;
        self.check(x)?;
        if z.is_zero() {
            return Err(Error::InvalidTransvection("direction vector is zero".into()));
        }
        if a.is_zero() {
            return Err(Error::InvalidTransvection("scalar is zero".into()));
        }
        let f = &*self.field;
        let c = f.mul(a, self.pairing_unchecked(z, x));
        Ok(x.add(f, &z.scale(f, c)))
    }

    /// Matrix of `x -> x + a [z, x] z`.
    pub fn transvection(&self, z: &SympVector, a: FieldElem) -> Result<Matrix> {
        let cols = (0..self.dim())
            .map(|i| self.transvection_apply(z, a, &self.basis(i)))
            .collect::<Result<Vec<_>>>()?;
        Matrix::from_columns(&cols)
    }

    /// `tau_[z]`.
    pub fn tau(&self, z: &SympVector) -> Result<Matrix> {
        self.transvection(z, FieldElem::ONE)
    }

    pub fn is_symplectic(&self, m: &Matrix) -> bool {
        if m.dim() != self.dim() {
            return false;
        }
        let images: Vec<SympVector> = (0..self.dim()).map(|j| m.column(j)).collect();
        for i in 0..self.dim() {
            for j in i + 1..self.dim() {
                let expected = if j - i == self.n { FieldElem::ONE } else { FieldElem::ZERO };
                if self.pairing_unchecked(&images[i], &images[j]) != expected {
                    return false;
                }
            }
        }
        true
    }

    /// A symplectic map with `rank(sigma - 1) = 1` and `(sigma - 1)^2 = 0`.
    pub fn is_transvection(&self, m: &Matrix) -> bool {
        if !self.is_symplectic(m) {
            return false;
        }
        let f = &*self.field;
        let d = m.sub(f, &Matrix::identity(self.dim()));
        d.rank(f) == 1 && d.mul(f, &d).map(|sq| sq.rank(f) == 0).unwrap_or(false)
    }

    /// `rank(sigma - 1)`, the tame conductor exponent of an inertia generator.
    pub fn conductor_exponent(&self, sigma: &Matrix) -> Result<usize> {
        self.check_matrix(sigma)?;
        conductor_exponent(&self.field, sigma)
    }

    /// The invariants `(t, delta)` of a symplectic involution.
    pub fn involution_invariants(&self, sigma: &Matrix) -> Result<InvolutionInvariants> {
        self.require_char2()?;
        self.check_matrix(sigma)?;
        let f = &*self.field;
        if !sigma.mul(f, sigma)?.is_identity() {
            return Err(Error::InvalidInput("matrix is not an involution".into()));
        }
        if !self.is_symplectic(sigma) {
            return Err(Error::InvalidIsometry);
        }
        let d = sigma.sub(f, &Matrix::identity(self.dim()));
        let t = d.rank(f);
        // v -> [v, (sigma - 1) v] is additive here, so basis vectors decide it.
        let delta = (0..self.dim()).any(|i| {
            let e = self.basis(i);
            let image = d.apply(f, &e).expect("dimension checked");
            !self.pairing_unchecked(&e, &image).is_zero()
        });
        Ok(InvolutionInvariants { t, delta: delta as u8 })
    }

    fn require_char2(&self) -> Result<()> {
        match self.field.characteristic() {
            2 => Ok(()),
            p => Err(Error::UnsupportedCharacteristic(p as u8)),
        }
    }

    /// `theta_0(x) = sum_j x_j x_{n+j}`.
    pub fn theta_base(&self, x: &SympVector) -> FieldElem {
        let f = &*self.field;
        (0..self.n).fold(FieldElem::ZERO, |acc, j| f.add(acc, f.mul(x.get(j), x.get(self.n + j))))
    }

    /// Evaluates `theta(x) = theta_0(x) + [a, x]^2`.
    pub fn theta_eval(&self, theta: &ThetaChar, x: &SympVector) -> Result<FieldElem> {
        self.require_char2()?;
        self.check(theta.shift())?;
        self.check(x)?;
        let f = &*self.field;
        let c = self.pairing_unchecked(theta.shift(), x);
        Ok(f.add(self.theta_base(x), f.mul(c, c)))
    }

    /// `theta + a`, the torsor action of `V` on theta characteristics.
    pub fn theta_translate(&self, theta: &ThetaChar, a: &SympVector) -> Result<ThetaChar> {
        self.check(a)?;
        self.check(theta.shift())?;
        Ok(ThetaChar::with_shift(theta.shift().add(&self.field, a)))
    }

    /// `sigma(theta)(x) = theta(sigma x)`, computed pointwise on the basis and
    /// re-expressed as `theta_0 + b`.
    pub fn act_on_theta(&self, sigma: &Matrix, theta: &ThetaChar) -> Result<ThetaChar> {
        self.require_char2()?;
        self.check_matrix(sigma)?;
        self.check(theta.shift())?;
        if !self.is_symplectic(sigma) {
            return Err(Error::InvalidIsometry);
        }
        let f = &*self.field;
        let n = self.n;
        // theta(sigma x) - theta_0(x) = [b, x]^2 with [b, e_i] = b_{n+i},
        // [b, e_{n+i}] = b_i in characteristic 2.
        let mut b = vec![FieldElem::ZERO; 2 * n];
        for i in 0..2 * n {
            let e = self.basis(i);
            let image = sigma.apply(f, &e)?;
            let square = f.sub(self.theta_eval(theta, &image)?, self.theta_base(&e));
            let root = f.sqrt(square)?;
            if i < n {
                b[n + i] = root;
            } else {
                b[i - n] = root;
            }
        }
        Ok(ThetaChar::with_shift(SympVector::new(b)))
    }

    /// Closed form `tau_[z](theta) = theta + sqrt(1 + theta(z)) z`.
    pub fn tau_on_theta(&self, z: &SympVector, theta: &ThetaChar) -> Result<ThetaChar> {
        self.require_char2()?;
        self.check(z)?;
        if z.is_zero() {
            return Err(Error::InvalidTransvection("direction vector is zero".into()));
        }
        let f = &*self.field;
        let c = f.sqrt(f.add(FieldElem::ONE, self.theta_eval(theta, z)?))?;
        self.theta_translate(theta, &z.scale(f, c))
    }

    /// The raw Arf value `sum_i theta(e_i) theta(e_{i+n})` in `F`.
    pub fn arf_value(&self, theta: &ThetaChar) -> Result<FieldElem> {
        self.require_char2()?;
        let f = &*self.field;
        (0..self.n).try_fold(FieldElem::ZERO, |acc, i| {
            let a = self.theta_eval(theta, &self.basis(i))?;
            let b = self.theta_eval(theta, &self.basis(i + self.n))?;
            Ok(f.add(acc, f.mul(a, b)))
        })
    }

    /// Arf invariant as its class in `F / wp(F)`, read through the absolute
    /// trace: `0` for even, `1` for odd.
    pub fn arf(&self, theta: &ThetaChar) -> Result<u8> {
        Ok(self.field.trace(self.arf_value(theta)?).value())
    }

    pub fn is_odd(&self, theta: &ThetaChar) -> Result<bool> {
        Ok(self.arf(theta)? == 1)
    }

    /// All theta characteristics of the requested parity, ordered by the
    /// index of their shift vector.
    pub fn enumerate_theta(&self, parity: Parity) -> Result<Vec<ThetaChar>> {
        self.require_char2()?;
        self.check_enumerable()?;
        let mut out = Vec::new();
        for a in all_vectors(self.q(), self.dim()) {
            let theta = ThetaChar::with_shift(a);
            let keep = match parity {
                Parity::All => true,
                Parity::Even => self.arf(&theta)? == 0,
                Parity::Odd => self.arf(&theta)? == 1,
            };
            if keep {
                out.push(theta);
            }
        }
        Ok(out)
    }

    /// Every transvection `x -> x + a [z, x] z`, one per (line, scalar) class.
    pub fn all_transvections(&self) -> Result<Vec<Matrix>> {
        let f = &*self.field;
        let mut seen = std::collections::HashSet::new();
        let mut out = Vec::new();
        for z in self.nonzero_vectors()? {
            for a in f.elements().filter(|a| !a.is_zero()) {
                let m = self.transvection(&z, a)?;
                if seen.insert(m.clone()) {
                    out.push(m);
                }
            }
        }
        Ok(out)
    }
}

/// `rank(sigma - 1)` for an invertible square matrix.
pub fn conductor_exponent(field: &GaloisField, sigma: &Matrix) -> Result<usize> {
    if !sigma.is_invertible(field) {
        return Err(Error::InvalidMatrix("matrix is singular".into()));
    }
    Ok(sigma.sub(field, &Matrix::identity(sigma.dim())).rank(field))
}
