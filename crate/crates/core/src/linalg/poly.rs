//! Dense univariate polynomials over a [`Field`].

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::field::{Field, Scalar};
use crate::error::{Error, Result};

/// Coefficients in increasing degree, with no trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly {
    field: Field,
    coeffs: Vec<Scalar>,
}

impl Poly {
    pub fn new(field: Field, mut coeffs: Vec<Scalar>) -> Self {
        while coeffs.last().is_some_and(Scalar::is_zero) {
            coeffs.pop();
        }
        Poly { field, coeffs }
    }

    pub fn zero(field: Field) -> Self {
        Poly {
            field,
            coeffs: Vec::new(),
        }
    }

    pub fn constant(field: Field, c: Scalar) -> Self {
        Self::new(field, vec![c])
    }

    pub fn one(field: Field) -> Self {
        Self::constant(field, field.one())
    }

    /// `c * x^k`.
    pub fn monomial(field: Field, c: Scalar, k: usize) -> Self {
        let mut v = field.zeros(k + 1);
        v[k] = c;
        Self::new(field, v)
    }

    pub fn x(field: Field) -> Self {
        Self::monomial(field, field.one(), 1)
    }

    /// `x - a`.
    pub fn linear(field: Field, a: &Scalar) -> Self {
        Self::new(field, vec![-a, field.one()])
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    /// Coefficient of `x^k` (zero beyond the degree).
    pub fn coeff(&self, k: usize) -> Scalar {
        self.coeffs.get(k).cloned().unwrap_or_else(|| self.field.zero())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Scalar> {
        self.coeffs.last()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn monic(&self) -> Poly {
        match self.leading() {
            None => self.clone(),
            Some(l) => self.scale(&l.inv()),
        }
    }

    pub fn scale(&self, c: &Scalar) -> Poly {
        Poly::new(self.field, self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let n = self.coeffs.len().max(other.coeffs.len());
        Poly::new(self.field, (0..n).map(|k| &self.coeff(k) + &other.coeff(k)).collect())
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        let n = self.coeffs.len().max(other.coeffs.len());
        Poly::new(self.field, (0..n).map(|k| &self.coeff(k) - &other.coeff(k)).collect())
    }

    pub fn neg(&self) -> Poly {
        Poly::new(self.field, self.coeffs.iter().map(|a| -a).collect())
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero(self.field);
        }
        let mut out = self.field.zeros(self.coeffs.len() + other.coeffs.len() - 1);
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] = &out[i + j] + &(a * b);
                }
            }
        }
        Poly::new(self.field, out)
    }

    pub fn pow(&self, e: usize) -> Poly {
        (0..e).fold(Poly::one(self.field), |acc, _| acc.mul(self))
    }

    /// Euclidean division: `(q, r)` with `self = q * d + r`, `deg r < deg d`.
    pub fn div_rem(&self, d: &Poly) -> (Poly, Poly) {
        assert!(!d.is_zero(), "division by the zero polynomial");
        let dd = d.degree().unwrap();
        let inv = d.leading().unwrap().inv();
        let mut r = self.coeffs.clone();
        let mut q = self.field.zeros(self.coeffs.len().saturating_sub(dd));
        while r.len() > dd && !r.is_empty() {
            let k = r.len() - 1;
            let c = &r[k] * &inv;
            if !c.is_zero() {
                for (i, b) in d.coeffs.iter().enumerate() {
                    r[k - dd + i] = &r[k - dd + i] - &(&c * b);
                }
                q[k - dd] = c;
            }
            r.pop();
        }
        (Poly::new(self.field, q), Poly::new(self.field, r))
    }

    pub fn rem(&self, d: &Poly) -> Poly {
        self.div_rem(d).1
    }

    /// Monic greatest common divisor (zero if both are zero).
    pub fn gcd(&self, other: &Poly) -> Poly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// `(g, u, v)` with `u*self + v*other = g = gcd(self, other)` monic.
    pub fn ext_gcd(&self, other: &Poly) -> (Poly, Poly, Poly) {
        let f = self.field;
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut s0, mut s1) = (Poly::one(f), Poly::zero(f));
        let (mut t0, mut t1) = (Poly::zero(f), Poly::one(f));
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1);
            r0 = std::mem::replace(&mut r1, r);
            let s = s0.sub(&q.mul(&s1));
            s0 = std::mem::replace(&mut s1, s);
            let t = t0.sub(&q.mul(&t1));
            t0 = std::mem::replace(&mut t1, t);
        }
        match r0.leading().cloned() {
            None => (r0, s0, t0),
            Some(l) => {
                let li = l.inv();
                (r0.scale(&li), s0.scale(&li), t0.scale(&li))
            }
        }
    }

    pub fn eval(&self, x: &Scalar) -> Scalar {
        self.coeffs
            .iter()
            .rev()
            .fold(self.field.zero(), |acc, c| &(&acc * x) + c)
    }

    /// Distinct roots in the base field, sorted.
    pub fn roots(&self) -> Vec<Scalar> {
        if self.degree().unwrap_or(0) == 0 {
            return Vec::new();
        }
        let mut roots = if self.field.is_rational() {
            rational_roots(self)
        } else {
            modular_roots(self)
        };
        roots.sort();
        roots.dedup();
        roots
    }

    /// Multiplicity of `a` as a root.
    pub fn root_multiplicity(&self, a: &Scalar) -> usize {
        let lin = Poly::linear(self.field, a);
        let mut p = self.clone();
        let mut m = 0;
        while !p.is_zero() {
            let (q, r) = p.div_rem(&lin);
            if !r.is_zero() {
                break;
            }
            p = q;
            m += 1;
        }
        m
    }

    /// Parses `"x^3 + 2*x + 1"`, `"-x^2"`, `"1/2*x - 3"`: terms joined by `+`/`-`,
    /// each `coeff`, `coeff*x^k`, `coeff*x`, `x^k` or `x`.
    pub fn parse(field: Field, s: &str) -> Result<Poly> {
        let err = |msg: &str| Error::Parse(format!("polynomial {s:?}: {msg}"));
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(err("empty"));
        }
        let mut terms: Vec<(bool, String)> = Vec::new();
        let mut cur = String::new();
        let mut neg = false;
        for (i, ch) in compact.chars().enumerate() {
            if ch == '+' || ch == '-' {
                if i == 0 {
                    neg = ch == '-';
                    continue;
                }
                if cur.is_empty() {
                    return Err(err("dangling sign"));
                }
                terms.push((neg, std::mem::take(&mut cur)));
                neg = ch == '-';
            } else {
                cur.push(ch);
            }
        }
        if cur.is_empty() {
            return Err(err("dangling sign"));
        }
        terms.push((neg, cur));

        let mut acc = Poly::zero(field);
        for (neg, t) in terms {
            let (coeff, power) = parse_term(field, &t).map_err(|m| err(&m))?;
            let c = if neg { -&coeff } else { coeff };
            acc = acc.add(&Poly::monomial(field, c, power));
        }
        Ok(acc)
    }
}

fn parse_term(field: Field, t: &str) -> std::result::Result<(Scalar, usize), String> {
    let (coeff, var) = match t.find('x') {
        None => (t, None),
        Some(pos) => {
            let head = &t[..pos];
            let head = if head.is_empty() {
                ""
            } else {
                head.strip_suffix('*')
                    .ok_or_else(|| format!("expected '*' before x in {t:?}"))?
            };
            (head, Some(&t[pos + 1..]))
        }
    };
    let c = if coeff.is_empty() {
        if var.is_none() {
            return Err(format!("empty term {t:?}"));
        }
        field.one()
    } else {
        if !coeff.chars().all(|ch| ch.is_ascii_digit() || ch == '/') {
            return Err(format!("bad coefficient {coeff:?}"));
        }
        field.parse(coeff).map_err(|e| e.to_string())?
    };
    let power = match var {
        None => 0,
        Some("") => 1,
        Some(rest) => {
            let e = rest
                .strip_prefix('^')
                .ok_or_else(|| format!("unexpected {rest:?} after x"))?;
            e.parse::<usize>().map_err(|_| format!("bad exponent {e:?}"))?
        }
    };
    Ok((c, power))
}

fn rational_roots(p: &Poly) -> Vec<Scalar> {
    let field = p.field();
    // integer multiple of p
    let qs: Vec<_> = p.coeffs().iter().map(|c| c.as_rational().unwrap().clone()).collect();
    let l = qs.iter().fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
    let ints: Vec<BigInt> = qs.iter().map(|q| q.numer() * (&l / q.denom())).collect();
    let mut roots = Vec::new();
    let low = ints.iter().position(|c| !c.is_zero()).unwrap_or(0);
    if low > 0 {
        roots.push(field.zero());
    }
    let ints = &ints[low..];
    if ints.len() < 2 {
        return roots;
    }
    let a0 = ints[0].abs();
    let an = ints[ints.len() - 1].abs();
    let (Some(a0s), Some(ans)) = (a0.to_u64(), an.to_u64()) else {
        return roots;
    };
    for num in divisors(a0s) {
        for den in divisors(ans) {
            if num.gcd(&den) != 1 {
                continue;
            }
            for sign in [1i64, -1] {
                let cand = field
                    .from_ratio(&BigInt::from(sign * num as i64), &BigInt::from(den))
                    .expect("nonzero denominator");
                if p.eval(&cand).is_zero() {
                    roots.push(cand);
                }
            }
        }
    }
    roots
}

fn divisors(n: u64) -> Vec<u64> {
    let mut d = Vec::new();
    let mut i = 1;
    while i * i <= n {
        if n.is_multiple_of(i) {
            d.push(i);
            if i != n / i {
                d.push(n / i);
            }
        }
        i += 1;
    }
    d
}

fn modular_roots(p: &Poly) -> Vec<Scalar> {
    let field = p.field();
    let q = field.characteristic() as u64;
    if q <= 257 {
        return field.elements().unwrap().filter(|a| p.eval(a).is_zero()).collect();
    }
    // product of the distinct linear factors: gcd(p, x^q - x)
    let x = Poly::x(field);
    let xq = pow_mod_poly(&x, q, p);
    let g = p.gcd(&xq.sub(&x));
    let mut out = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    split_linear(&g, q, &mut rng, &mut out);
    out
}

fn pow_mod_poly(base: &Poly, mut e: u64, m: &Poly) -> Poly {
    let mut acc = Poly::one(base.field());
    let mut b = base.rem(m);
    while e > 0 {
        if e & 1 == 1 {
            acc = acc.mul(&b).rem(m);
        }
        b = b.mul(&b).rem(m);
        e >>= 1;
    }
    acc
}

/// Equal-degree splitting of a squarefree product of linear factors.
fn split_linear(g: &Poly, q: u64, rng: &mut ChaCha8Rng, out: &mut Vec<Scalar>) {
    let field = g.field();
    match g.degree() {
        None | Some(0) => {}
        Some(1) => {
            let g = g.monic();
            out.push(-&g.coeff(0));
        }
        Some(_) => loop {
            let a = field.from_i64(rng.gen_range(0..q as i64));
            let shifted = Poly::x(field).add(&Poly::constant(field, a));
            let h = pow_mod_poly(&shifted, (q - 1) / 2, g).sub(&Poly::one(field));
            let d = g.gcd(&h);
            let dd = d.degree().unwrap_or(0);
            if dd > 0 && dd < g.degree().unwrap() {
                let (rest, _) = g.div_rem(&d);
                split_linear(&d, q, rng, out);
                split_linear(&rest, q, rng, out);
                return;
            }
        },
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let (neg, mag) = match c {
                Scalar::Q(q) if q.is_negative() => (true, Scalar::Q(-q)),
                _ => (false, c.clone()),
            };
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let show_coeff = !mag.is_one() || k == 0;
            match (show_coeff, k) {
                (true, 0) => write!(f, "{mag}")?,
                (true, 1) => write!(f, "{mag}*x")?,
                (true, _) => write!(f, "{mag}*x^{k}")?,
                (false, 1) => write!(f, "x")?,
                (false, _) => write!(f, "x^{k}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({self} over {})", self.field)
    }
}
