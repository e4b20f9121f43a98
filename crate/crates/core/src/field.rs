//! Small Galois fields `F_q`, `q = p^k <= 16`, `p` in `{2, 3}`.
//!
//! Elements are encoded as integers `0..q` whose base-`p` digits are the
//! coefficients of a polynomial in a fixed primitive element. The prime
//! subfield is exactly the encodings `0..p`. All arithmetic goes through
//! precomputed tables.

use std::fmt;

use crate::error::{Error, Result};

/// An element of a [`GaloisField`], stored by its table index.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct FieldElem(pub u8);

impl FieldElem {
    pub const ZERO: FieldElem = FieldElem(0);
    pub const ONE: FieldElem = FieldElem(1);

    pub fn value(self) -> u8 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl fmt::Display for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

#[derive(Clone, PartialEq, Eq)]
pub struct GaloisField {
    p: u8,
    k: u8,
    q: u8,
    /// Coefficients `c_0..c_{k-1}` of the defining polynomial
    /// `x^k + c_{k-1} x^{k-1} + ... + c_0`.
    modulus: Vec<u8>,
    add: Vec<u8>,
    mul: Vec<u8>,
    neg: Vec<u8>,
    inv: Vec<u8>,
    exp: Vec<u8>,
    log: Vec<u8>,
    trace: Vec<u8>,
    sqrt: Vec<u8>,
}

impl fmt::Debug for GaloisField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({})", self.q)
    }
}

fn digits(mut v: u32, p: u32, k: usize) -> Vec<u32> {
    let mut d = vec![0; k];
    for slot in d.iter_mut() {
        *slot = v % p;
        v /= p;
    }
    d
}

fn undigits(d: &[u32], p: u32) -> u32 {
    d.iter().rev().fold(0, |acc, &c| acc * p + c)
}

impl GaloisField {
    /// Builds `F_q`. Only `q` in `{2, 4, 8, 16, 3, 9}` is supported.
    pub fn new(q: u32) -> Result<Self> {
        let (p, k) = match q {
            2 => (2, 1),
            4 => (2, 2),
            8 => (2, 3),
            16 => (2, 4),
            3 => (3, 1),
            9 => (3, 2),
            _ => {
                return Err(Error::UnsupportedField(format!(
                    "q = {q}; supported orders are 2, 4, 8, 16, 3, 9"
                )))
            }
        };
        Ok(Self::build(p, k))
    }

    /// The prime field `F_p`.
    pub fn prime(p: u32) -> Result<Self> {
        Self::new(p)
    }

    fn build(p: u32, k: usize) -> Self {
        let q = p.pow(k as u32);
        let qs = q as usize;

        let mut add = vec![0u8; qs * qs];
        for a in 0..q {
            let da = digits(a, p, k);
            for b in 0..q {
                let db = digits(b, p, k);
                let s: Vec<u32> = da.iter().zip(&db).map(|(x, y)| (x + y) % p).collect();
                add[(a * q + b) as usize] = undigits(&s, p) as u8;
            }
        }
        let neg: Vec<u8> = (0..q)
            .map(|a| {
                let d: Vec<u32> = digits(a, p, k).iter().map(|x| (p - x) % p).collect();
                undigits(&d, p) as u8
            })
            .collect();

        // Lexicographically first modulus for which x generates the unit group.
        let (modulus, exp) = (0..q)
            .find_map(|code| {
                let c = digits(code, p, k);
                let times_x = |v: &[u32]| -> Vec<u32> {
                    let top = v[k - 1];
                    let mut out = vec![0; k];
                    for i in (1..k).rev() {
                        out[i] = v[i - 1];
                    }
                    for i in 0..k {
                        out[i] = (out[i] + (p - c[i]) * top) % p;
                    }
                    out
                };
                let mut cur = vec![0u32; k];
                cur[0] = 1;
                let mut powers = Vec::with_capacity(qs - 1);
                let mut seen = vec![false; qs];
                for _ in 0..q - 1 {
                    let v = undigits(&cur, p);
                    if v == 0 || seen[v as usize] {
                        return None;
                    }
                    seen[v as usize] = true;
                    powers.push(v as u8);
                    cur = if k == 1 {
                        vec![(cur[0] * ((p - c[0]) % p)) % p]
                    } else {
                        times_x(&cur)
                    };
                }
                if undigits(&cur, p) != 1 {
                    return None;
                }
                Some((c.iter().map(|&x| x as u8).collect::<Vec<u8>>(), powers))
            })
            .expect("a primitive modulus exists");

        let mut log = vec![0u8; qs];
        for (i, &e) in exp.iter().enumerate() {
            log[e as usize] = i as u8;
        }
        let order = (q - 1) as usize;
        let mut mul = vec![0u8; qs * qs];
        for a in 1..qs {
            for b in 1..qs {
                let l = (log[a] as usize + log[b] as usize) % order;
                mul[a * qs + b] = exp[l];
            }
        }
        let mut inv = vec![0u8; qs];
        for a in 1..qs {
            inv[a] = exp[(order - log[a] as usize) % order];
        }

        let pow = |a: u8, e: u32| -> u8 {
            if e == 0 {
                return 1;
            }
            if a == 0 {
                return 0;
            }
            exp[(log[a as usize] as usize * e as usize) % order]
        };
        let trace: Vec<u8> = (0..qs as u8)
            .map(|a| {
                let mut acc = 0u8;
                let mut e = 1u32;
                for _ in 0..k {
                    acc = add[acc as usize * qs + pow(a, e) as usize];
                    e *= p;
                }
                acc
            })
            .collect();
        // Inverse Frobenius in characteristic 2: a -> a^(q/2).
        let sqrt: Vec<u8> = if p == 2 {
            (0..qs as u8).map(|a| pow(a, q / 2)).collect()
        } else {
            Vec::new()
        };

        GaloisField {
            p: p as u8,
            k: k as u8,
            q: q as u8,
            modulus,
            add,
            mul,
            neg,
            inv,
            exp,
            log,
            trace,
            sqrt,
        }
    }

    pub fn characteristic(&self) -> u32 {
        self.p as u32
    }

    pub fn degree(&self) -> u32 {
        self.k as u32
    }

    pub fn order(&self) -> u32 {
        self.q as u32
    }

    /// Coefficients of the defining polynomial, constant term first.
    pub fn modulus(&self) -> &[u8] {
        &self.modulus
    }

    pub fn elements(&self) -> impl Iterator<Item = FieldElem> {
        (0..self.q).map(FieldElem)
    }

    pub fn elem(&self, v: u32) -> Result<FieldElem> {
        if v < self.q as u32 {
            Ok(FieldElem(v as u8))
        } else {
            Err(Error::InvalidInput(format!("{v} is not an element of F_{}", self.q)))
        }
    }

    /// Image of an integer in the prime subfield.
    pub fn from_int(&self, n: i64) -> FieldElem {
        FieldElem(n.rem_euclid(self.p as i64) as u8)
    }

    /// The primitive element used for the log tables.
    pub fn generator(&self) -> FieldElem {
        FieldElem(self.exp[1 % self.exp.len()])
    }

    #[inline]
    pub fn add(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        FieldElem(self.add[a.0 as usize * self.q as usize + b.0 as usize])
    }

    #[inline]
    pub fn neg(&self, a: FieldElem) -> FieldElem {
        FieldElem(self.neg[a.0 as usize])
    }

    #[inline]
    pub fn sub(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        FieldElem(self.mul[a.0 as usize * self.q as usize + b.0 as usize])
    }

    pub fn inv(&self, a: FieldElem) -> Option<FieldElem> {
        (!a.is_zero()).then(|| FieldElem(self.inv[a.0 as usize]))
    }

    pub fn pow(&self, a: FieldElem, e: u32) -> FieldElem {
        if e == 0 {
            return FieldElem::ONE;
        }
        if a.is_zero() {
            return FieldElem::ZERO;
        }
        let order = self.q as usize - 1;
        FieldElem(self.exp[(self.log[a.0 as usize] as usize * e as usize) % order])
    }

    /// Absolute trace to the prime field; the result lies in `0..p`.
    pub fn trace(&self, a: FieldElem) -> FieldElem {
        FieldElem(self.trace[a.0 as usize])
    }

    /// Artin-Schreier map `x^p - x`. In characteristic 2 this is `x^2 - x`.
    pub fn wp(&self, a: FieldElem) -> FieldElem {
        self.sub(self.pow(a, self.p as u32), a)
    }

    /// Square root in characteristic 2, where squaring is a bijection.
    pub fn sqrt(&self, a: FieldElem) -> Result<FieldElem> {
        if self.p != 2 {
            return Err(Error::UnsupportedCharacteristic(self.p));
        }
        Ok(FieldElem(self.sqrt[a.0 as usize]))
    }

    /// Whether `a` lies in the image of the Artin-Schreier map, i.e. has
    /// trivial class in `F / wp(F)`.
    pub fn in_wp_image(&self, a: FieldElem) -> bool {
        self.trace(a).is_zero()
    }

    /// Orders `q'` of the subfields of this field (including itself).
    pub fn subfield_orders(&self) -> Vec<u32> {
        (1..=self.k as u32)
            .filter(|j| self.k as u32 % j == 0)
            .map(|j| (self.p as u32).pow(j))
            .collect()
    }
}
