//! Table-driven arithmetic in F_q for prime powers q <= 256.
//!
//! Elements are the integers `0..q`. For q = p^e with e > 1 an element encodes
//! the polynomial whose coefficients over F_p are its base-p digits, least
//! significant digit first, so `2` is `x` in F_4. Products are reduced modulo
//! the least monic irreducible of degree e, where "least" compares the
//! non-leading coefficients read as a base-p integer.

use crate::error::{Error, Result};

pub type Element = u8;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Inv,
    Neg,
}

#[derive(Clone)]
pub struct FieldTable {
    q: usize,
    p: u32,
    e: u32,
    /// Monic modulus, coefficients from x^0 upward (length e + 1).
    modulus: Vec<u32>,
    add: Vec<Element>,
    mul: Vec<Element>,
    neg: Vec<Element>,
    inv: Vec<Element>,
}

impl std::fmt::Debug for FieldTable {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("FieldTable")
            .field("q", &self.q)
            .field("p", &self.p)
            .field("e", &self.e)
            .field("modulus", &self.modulus)
            .finish()
    }
}

impl PartialEq for FieldTable {
    fn eq(&self, other: &Self) -> bool {
        self.q == other.q
    }
}

impl Eq for FieldTable {}

fn prime_power(q: u32) -> Option<(u32, u32)> {
    if q < 2 {
        return None;
    }
    let p = (2..=q).find(|d| q.is_multiple_of(*d))?;
    let (mut rest, mut e) = (q, 0);
    while rest % p == 0 {
        rest /= p;
        e += 1;
    }
    (rest == 1).then_some((p, e))
}

fn digits(mut value: usize, p: u32, len: usize) -> Vec<u32> {
    let mut out = vec![0; len];
    for d in out.iter_mut() {
        *d = (value % p as usize) as u32;
        value /= p as usize;
    }
    out
}

fn undigits(coeffs: &[u32], p: u32) -> usize {
    coeffs
        .iter()
        .rev()
        .fold(0usize, |acc, &c| acc * p as usize + c as usize)
}

/// Remainder of `a` modulo the monic polynomial `m`, coefficients over F_p.
fn poly_rem(a: &[u32], m: &[u32], p: u32) -> Vec<u32> {
    let mut r = a.to_vec();
    let dm = m.len() - 1;
    while r.len() > dm {
        let lead = r.pop().unwrap();
        if lead == 0 {
            continue;
        }
        let shift = r.len() - dm;
        for (i, &c) in m[..dm].iter().enumerate() {
            r[shift + i] = (r[shift + i] + p - (lead * c) % p) % p;
        }
    }
    r
}

fn poly_mul(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x * y) % p;
        }
    }
    out
}

fn is_irreducible(m: &[u32], p: u32) -> bool {
    let e = m.len() - 1;
    for deg in 1..=e / 2 {
        for low in 0..(p as usize).pow(deg as u32) {
            let mut f = digits(low, p, deg);
            f.push(1);
            if poly_rem(m, &f, p).iter().all(|&c| c == 0) {
                return false;
            }
        }
    }
    true
}

fn least_irreducible(p: u32, e: u32) -> Vec<u32> {
    (0..(p as usize).pow(e))
        .map(|low| {
            let mut m = digits(low, p, e as usize);
            m.push(1);
            m
        })
        .find(|m| is_irreducible(m, p))
        .expect("an irreducible polynomial exists for every degree")
}

impl FieldTable {
    /// Builds F_q. Fails unless q is a prime power with 2 <= q <= 256.
    pub fn new(q: u32) -> Result<Self> {
        if !(2..=256).contains(&q) {
            return Err(Error::InvalidFieldOrder(q));
        }
        let (p, e) = prime_power(q).ok_or(Error::InvalidFieldOrder(q))?;
        let modulus = least_irreducible(p, e);
        let q = q as usize;
        let mut add = vec![0; q * q];
        let mut mul = vec![0; q * q];
        for a in 0..q {
            let da = digits(a, p, e as usize);
            for b in 0..q {
                let db = digits(b, p, e as usize);
                let sum: Vec<u32> = da.iter().zip(&db).map(|(x, y)| (x + y) % p).collect();
                add[a * q + b] = undigits(&sum, p) as Element;
                let prod = poly_rem(&poly_mul(&da, &db, p), &modulus, p);
                mul[a * q + b] = undigits(&prod, p) as Element;
            }
        }
        let mut neg = vec![0; q];
        let mut inv = vec![0; q];
        for a in 0..q {
            neg[a] = (0..q).find(|&b| add[a * q + b] == 0).unwrap() as Element;
            if a != 0 {
                inv[a] = (1..q)
                    .find(|&b| mul[a * q + b] == 1)
                    .expect("nonzero elements of a field are units")
                    as Element;
            }
        }
        Ok(FieldTable {
            q,
            p,
            e,
            modulus,
            add,
            mul,
            neg,
            inv,
        })
    }

    pub fn order(&self) -> u32 {
        self.q as u32
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.e
    }

    /// The reduction polynomial, coefficients from x^0 upward.
    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    pub fn contains(&self, a: u32) -> bool {
        (a as usize) < self.q
    }

    #[inline]
    pub fn add(&self, a: Element, b: Element) -> Element {
        self.add[a as usize * self.q + b as usize]
    }

    #[inline]
    pub fn sub(&self, a: Element, b: Element) -> Element {
        self.add(a, self.neg[b as usize])
    }

    #[inline]
    pub fn mul(&self, a: Element, b: Element) -> Element {
        self.mul[a as usize * self.q + b as usize]
    }

    #[inline]
    pub fn neg(&self, a: Element) -> Element {
        self.neg[a as usize]
    }

    pub fn inv(&self, a: Element) -> Result<Element> {
        self.check(a as u32)?;
        if a == 0 {
            return Err(Error::ZeroInverse);
        }
        Ok(self.inv[a as usize])
    }

    pub fn pow(&self, a: Element, mut exp: u64) -> Element {
        let (mut base, mut acc) = (a, 1);
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }

    fn check(&self, a: u32) -> Result<()> {
        if self.contains(a) {
            Ok(())
        } else {
            Err(Error::ElementOutOfRange {
                value: a,
                q: self.q as u32,
            })
        }
    }

    /// Range-checked arithmetic. Unary ops ignore `b`; binary ops require it.
    pub fn arith(&self, op: ArithOp, a: u32, b: Option<u32>) -> Result<Element> {
        self.check(a)?;
        let a = a as Element;
        let second = || -> Result<Element> {
            let b = b.ok_or_else(|| Error::Precondition(format!("{op:?} needs two operands")))?;
            self.check(b)?;
            Ok(b as Element)
        };
        Ok(match op {
            ArithOp::Add => self.add(a, second()?),
            ArithOp::Sub => self.sub(a, second()?),
            ArithOp::Mul => self.mul(a, second()?),
            ArithOp::Neg => self.neg(a),
            ArithOp::Inv => self.inv(a)?,
        })
    }
}
