//! Exact coefficient arithmetic: rational functions in declared parameters.
//!
//! A [`Scalar`] is an element of the field Q(p1, ..., pk) where the pi are the
//! symbols of a [`ParamSet`] (possibly empty, in which case scalars are plain
//! rationals). Internally a scalar is a reduced fraction of two integer
//! polynomials; reduction uses a primitive-PRS multivariate gcd, so equality
//! is structural and every value has one canonical representation:
//!
//! * gcd(num, den) is a unit,
//! * the integer contents of num and den are coprime,
//! * the graded-lex leading coefficient of den is positive.

use alloc::collections::BTreeMap;
use alloc::rc::Rc;
use alloc::string::String;
use alloc::vec::Vec;
use arrayvec::ArrayVec;
use core::cmp::Ordering;
use core::fmt;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Most parameter symbols a single computation may declare.
pub const MAX_PARAMS: usize = 8;

/// Exponent vector; one entry per parameter symbol.
pub(crate) type Exps = ArrayVec<u16, MAX_PARAMS>;

/// An ordered, immutable set of parameter symbol names.
///
/// Cheap to clone; two sets are compatible exactly when their name lists are
/// equal.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ParamSet {
    names: Rc<Vec<String>>,
}

impl ParamSet {
    /// The empty set: scalars are plain rationals.
    pub fn empty() -> Self {
        ParamSet { names: Rc::new(Vec::new()) }
    }

    /// Declares the given symbols, in order. Names must be distinct,
    /// nonempty, and at most [`MAX_PARAMS`] of them.
    pub fn new<I, S>(names: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        if names.len() > MAX_PARAMS {
            return Err(Error::Dimension(alloc::format!(
                "at most {MAX_PARAMS} parameters supported, got {}",
                names.len()
            )));
        }
        for (i, n) in names.iter().enumerate() {
            if n.is_empty() {
                return Err(Error::Dimension("empty parameter name".into()));
            }
            if names[..i].contains(n) {
                return Err(Error::Dimension(alloc::format!("duplicate parameter name `{n}`")));
            }
        }
        Ok(ParamSet { names: Rc::new(names) })
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }
}

fn exps_zero(n: usize) -> Exps {
    let mut e = Exps::new();
    for _ in 0..n {
        e.push(0);
    }
    e
}

fn exps_total(e: &Exps) -> u32 {
    e.iter().map(|&x| x as u32).sum()
}

/// Graded-lex comparison: first by total degree, then lexicographically.
fn grlex(a: &Exps, b: &Exps) -> Ordering {
    exps_total(a).cmp(&exps_total(b)).then_with(|| a.cmp(b))
}

/// Sparse multivariate polynomial over the integers.
///
/// Internal to the scalar layer; zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Debug)]
pub(crate) struct MPoly {
    n: usize,
    terms: BTreeMap<Exps, BigInt>,
}

impl MPoly {
    pub fn zero(n: usize) -> Self {
        MPoly { n, terms: BTreeMap::new() }
    }

    pub fn constant(n: usize, c: BigInt) -> Self {
        let mut p = MPoly::zero(n);
        if !c.is_zero() {
            p.terms.insert(exps_zero(n), c);
        }
        p
    }

    pub fn var(n: usize, i: usize) -> Self {
        debug_assert!(i < n);
        let mut e = exps_zero(n);
        e[i] = 1;
        let mut p = MPoly::zero(n);
        p.terms.insert(e, BigInt::one());
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.as_constant().map(|c| c.is_one()).unwrap_or(false)
    }

    /// Some(c) when the polynomial is the constant c (including zero).
    pub fn as_constant(&self) -> Option<BigInt> {
        match self.terms.len() {
            0 => Some(BigInt::zero()),
            1 => {
                let (e, c) = self.terms.iter().next().unwrap();
                if exps_total(e) == 0 {
                    Some(c.clone())
                } else {
                    None
                }
            }
            _ => None,
        }
    }

    fn deg_in(&self, v: usize) -> u16 {
        self.terms.keys().map(|e| e[v]).max().unwrap_or(0)
    }

    /// Graded-lex leading (exponent, coefficient).
    fn leading(&self) -> Option<(&Exps, &BigInt)> {
        self.terms.iter().max_by(|a, b| grlex(a.0, b.0))
    }

    fn insert_add(&mut self, e: Exps, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            alloc::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            alloc::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &MPoly) -> MPoly {
        debug_assert_eq!(self.n, other.n);
        let mut r = self.clone();
        for (e, c) in &other.terms {
            r.insert_add(e.clone(), c.clone());
        }
        r
    }

    pub fn neg(&self) -> MPoly {
        let mut r = self.clone();
        for c in r.terms.values_mut() {
            *c = -c.clone();
        }
        r
    }

    pub fn sub(&self, other: &MPoly) -> MPoly {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &MPoly) -> MPoly {
        debug_assert_eq!(self.n, other.n);
        let mut r = MPoly::zero(self.n);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let mut e = ea.clone();
                for (x, y) in e.iter_mut().zip(eb.iter()) {
                    *x += *y;
                }
                r.insert_add(e, ca * cb);
            }
        }
        r
    }

    /// Integer content with the sign of the graded-lex leading coefficient.
    pub fn signed_content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in self.terms.values() {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        if let Some((_, lc)) = self.leading() {
            if lc.is_negative() {
                g = -g;
            }
        }
        g
    }

    pub fn div_int_exact(&self, c: &BigInt) -> MPoly {
        debug_assert!(!c.is_zero());
        let mut r = self.clone();
        for v in r.terms.values_mut() {
            let (q, rem) = v.div_rem(c);
            debug_assert!(rem.is_zero());
            *v = q;
        }
        r
    }

    /// Exact polynomial division; `None` when the division is inexact.
    pub fn div_exact(&self, d: &MPoly) -> Option<MPoly> {
        debug_assert_eq!(self.n, d.n);
        if d.is_zero() {
            return None;
        }
        if let Some(c) = d.as_constant() {
            for v in self.terms.values() {
                if !v.div_rem(&c).1.is_zero() {
                    return None;
                }
            }
            return Some(self.div_int_exact(&c));
        }
        let (dl, dc) = d.leading().map(|(e, c)| (e.clone(), c.clone())).unwrap();
        let mut rem = self.clone();
        let mut quo = MPoly::zero(self.n);
        while let Some((rl, rc)) = rem.leading().map(|(e, c)| (e.clone(), c.clone())) {
            let mut q = rl.clone();
            for (x, y) in q.iter_mut().zip(dl.iter()) {
                if *x < *y {
                    return None;
                }
                *x -= *y;
            }
            let (qc, qr) = rc.div_rem(&dc);
            if !qr.is_zero() {
                return None;
            }
            quo.insert_add(q.clone(), qc.clone());
            // rem -= q * d
            for (e, c) in &d.terms {
                let mut ee = q.clone();
                for (x, y) in ee.iter_mut().zip(e.iter()) {
                    *x += *y;
                }
                rem.insert_add(ee, -(&qc * c));
            }
        }
        Some(quo)
    }

    /// Coefficients of `self` viewed as a univariate polynomial in variable
    /// `v`, degree ascending.
    fn coeffs_in(&self, v: usize) -> Vec<MPoly> {
        let d = self.deg_in(v) as usize;
        let mut out = alloc::vec![MPoly::zero(self.n); d + 1];
        for (e, c) in &self.terms {
            let k = e[v] as usize;
            let mut e2 = e.clone();
            e2[v] = 0;
            out[k].insert_add(e2, c.clone());
        }
        out
    }

    fn from_coeffs_in(n: usize, v: usize, coeffs: &[MPoly]) -> MPoly {
        let mut r = MPoly::zero(n);
        for (k, p) in coeffs.iter().enumerate() {
            for (e, c) in &p.terms {
                let mut e2 = e.clone();
                e2[v] += k as u16;
                r.insert_add(e2, c.clone());
            }
        }
        r
    }

    /// Makes the graded-lex leading coefficient positive.
    fn normalize_sign(mut self) -> MPoly {
        let neg = self.leading().map(|(_, c)| c.is_negative()).unwrap_or(false);
        if neg {
            self = self.neg();
        }
        self
    }

    /// Content (gcd of coefficients) of `self` in variable `v`, as a
    /// polynomial in the remaining variables.
    fn content_in(&self, v: usize) -> MPoly {
        let coeffs = self.coeffs_in(v);
        let mut g = MPoly::zero(self.n);
        for c in coeffs.iter().filter(|c| !c.is_zero()) {
            g = MPoly::gcd(&g, c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Nonnegative gcd via primitive pseudo-remainder sequences.
    pub fn gcd(a: &MPoly, b: &MPoly) -> MPoly {
        debug_assert_eq!(a.n, b.n);
        if a.is_zero() {
            return b.clone().normalize_sign();
        }
        if b.is_zero() {
            return a.clone().normalize_sign();
        }
        if let (Some(ca), Some(cb)) = (a.as_constant(), b.as_constant()) {
            return MPoly::constant(a.n, ca.gcd(&cb));
        }
        // Main variable: the highest index occurring in either operand.
        let v = (0..a.n)
            .rev()
            .find(|&v| a.deg_in(v) > 0 || b.deg_in(v) > 0)
            .expect("nonconstant polynomial must use a variable");
        if a.deg_in(v) == 0 {
            // a is free of v, so any common divisor is too.
            return MPoly::gcd(a, &b.content_in(v));
        }
        if b.deg_in(v) == 0 {
            return MPoly::gcd(&a.content_in(v), b);
        }
        let cont_a = a.content_in(v);
        let cont_b = b.content_in(v);
        let g_cont = MPoly::gcd(&cont_a, &cont_b);
        let mut p = a.div_exact(&cont_a).expect("content divides");
        let mut q = b.div_exact(&cont_b).expect("content divides");
        if p.deg_in(v) < q.deg_in(v) {
            core::mem::swap(&mut p, &mut q);
        }
        loop {
            let r = MPoly::pseudo_rem(&p, &q, v);
            if r.is_zero() {
                break;
            }
            if r.deg_in(v) == 0 {
                // Coprime in v; the gcd is the content part only.
                return g_cont.normalize_sign();
            }
            let rc = r.content_in(v);
            p = q;
            q = r.div_exact(&rc).expect("content divides");
        }
        let qc = q.content_in(v);
        let pp = q.div_exact(&qc).expect("content divides");
        g_cont.mul(&pp).normalize_sign()
    }

    /// Pseudo-remainder of `a` by `b` in variable `v` (deg_v(a) >= deg_v(b)).
    fn pseudo_rem(a: &MPoly, b: &MPoly, v: usize) -> MPoly {
        let mut r = a.coeffs_in(v);
        let d = b.coeffs_in(v);
        let db = d.len() - 1;
        let lb = d[db].clone();
        while r.len() >= d.len() {
            let dr = r.len() - 1;
            let lead = r[dr].clone();
            if lead.is_zero() {
                r.pop();
                continue;
            }
            for (k, item) in r.iter_mut().enumerate().take(dr) {
                let mut t = item.mul(&lb);
                let shift = dr - db;
                if k >= shift {
                    t = t.sub(&lead.mul(&d[k - shift]));
                }
                *item = t;
            }
            r.pop();
        }
        MPoly::from_coeffs_in(a.n, v, &r)
    }

    fn fmt_with(&self, f: &mut fmt::Formatter<'_>, names: &[String]) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        // Graded-lex descending, leading term first.
        let mut keys: Vec<&Exps> = self.terms.keys().collect();
        keys.sort_by(|a, b| grlex(b, a));
        for (i, e) in keys.iter().enumerate() {
            let c = &self.terms[*e];
            let mag = c.abs();
            if i == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let monomial = exps_total(e) > 0;
            if !monomial || !mag.is_one() {
                write!(f, "{mag}")?;
                if monomial {
                    write!(f, "*")?;
                }
            }
            let mut first = true;
            for (v, &p) in e.iter().enumerate() {
                if p == 0 {
                    continue;
                }
                if !first {
                    write!(f, "*")?;
                }
                first = false;
                write!(f, "{}", names[v])?;
                if p > 1 {
                    write!(f, "^{p}")?;
                }
            }
        }
        Ok(())
    }
}

/// An exact element of Q(p1, ..., pk): a canonical fraction of integer
/// polynomials in the declared parameters.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Scalar {
    params: ParamSet,
    num: MPoly,
    den: MPoly,
}

impl Scalar {
    fn make(params: ParamSet, num: MPoly, den: MPoly) -> Scalar {
        debug_assert!(!den.is_zero());
        Scalar { params, num, den }.normalize()
    }

    fn normalize(mut self) -> Scalar {
        if self.num.is_zero() {
            self.den = MPoly::constant(self.params.len(), BigInt::one());
            return self;
        }
        if !self.den.is_one() {
            let g = MPoly::gcd(&self.num, &self.den);
            if !g.is_one() {
                self.num = self.num.div_exact(&g).expect("gcd divides");
                self.den = self.den.div_exact(&g).expect("gcd divides");
            }
            let cn = self.num.signed_content().abs();
            let cd = self.den.signed_content();
            let c = cn.gcd(&cd);
            let c = if cd.is_negative() { -c } else { c };
            if !c.is_one() {
                self.num = self.num.div_int_exact(&c);
                self.den = self.den.div_int_exact(&c);
            }
        }
        self
    }

    pub fn params(&self) -> &ParamSet {
        &self.params
    }

    pub fn zero(params: &ParamSet) -> Scalar {
        let n = params.len();
        Scalar {
            params: params.clone(),
            num: MPoly::zero(n),
            den: MPoly::constant(n, BigInt::one()),
        }
    }

    pub fn one(params: &ParamSet) -> Scalar {
        Scalar::from_int(params, 1)
    }

    pub fn from_int(params: &ParamSet, v: i64) -> Scalar {
        let n = params.len();
        Scalar {
            params: params.clone(),
            num: MPoly::constant(n, BigInt::from(v)),
            den: MPoly::constant(n, BigInt::one()),
        }
    }

    /// The exact rational p/q. `q` must be nonzero.
    pub fn from_ratio(params: &ParamSet, p: i64, q: i64) -> Result<Scalar> {
        if q == 0 {
            return Err(Error::NonUnit("zero denominator".into()));
        }
        let n = params.len();
        Ok(Scalar::make(
            params.clone(),
            MPoly::constant(n, BigInt::from(p)),
            MPoly::constant(n, BigInt::from(q)),
        ))
    }

    /// The i-th declared parameter symbol as a scalar.
    pub fn param(params: &ParamSet, i: usize) -> Scalar {
        let n = params.len();
        Scalar {
            params: params.clone(),
            num: MPoly::var(n, i),
            den: MPoly::constant(n, BigInt::one()),
        }
    }

    /// Looks a parameter up by name.
    pub fn param_named(params: &ParamSet, name: &str) -> Result<Scalar> {
        params
            .index_of(name)
            .map(|i| Scalar::param(params, i))
            .ok_or_else(|| Error::Dimension(alloc::format!("unknown parameter `{name}`")))
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num == self.den
    }

    /// In a field every nonzero element is a unit.
    pub fn is_unit(&self) -> bool {
        !self.is_zero()
    }

    /// Some(p/q) when the scalar is a plain rational.
    pub fn as_rational(&self) -> Option<(BigInt, BigInt)> {
        Some((self.num.as_constant()?, self.den.as_constant()?))
    }

    fn check(&self, other: &Scalar) -> Result<()> {
        if self.params != other.params {
            return Err(Error::Dimension("scalars over different parameter sets".into()));
        }
        Ok(())
    }

    pub fn add(&self, other: &Scalar) -> Scalar {
        self.check(other).expect("parameter sets must match");
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        // a/b + c/d = (a*(d/g) + c*(b/g)) / (b/g * d)   with g = gcd(b, d)
        let g = MPoly::gcd(&self.den, &other.den);
        let db = self.den.div_exact(&g).expect("gcd divides");
        let dd = other.den.div_exact(&g).expect("gcd divides");
        let num = self.num.mul(&dd).add(&other.num.mul(&db));
        let den = db.mul(&other.den);
        Scalar::make(self.params.clone(), num, den)
    }

    pub fn neg(&self) -> Scalar {
        Scalar { params: self.params.clone(), num: self.num.neg(), den: self.den.clone() }
    }

    pub fn sub(&self, other: &Scalar) -> Scalar {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Scalar) -> Scalar {
        self.check(other).expect("parameter sets must match");
        if self.is_zero() || other.is_zero() {
            return Scalar::zero(&self.params);
        }
        // Cross-cancel before multiplying to keep intermediates small.
        let g1 = MPoly::gcd(&self.num, &other.den);
        let g2 = MPoly::gcd(&other.num, &self.den);
        let n1 = self.num.div_exact(&g1).expect("gcd divides");
        let d2 = other.den.div_exact(&g1).expect("gcd divides");
        let n2 = other.num.div_exact(&g2).expect("gcd divides");
        let d1 = self.den.div_exact(&g2).expect("gcd divides");
        Scalar::make(self.params.clone(), n1.mul(&n2), d1.mul(&d2))
    }

    pub fn mul_int(&self, c: i64) -> Scalar {
        let c = Scalar::from_int(&self.params, c);
        self.mul(&c)
    }

    pub fn inv(&self) -> Result<Scalar> {
        if self.is_zero() {
            return Err(Error::NonUnit("division by zero scalar".into()));
        }
        Ok(Scalar::make(self.params.clone(), self.den.clone(), self.num.clone()))
    }

    pub fn div(&self, other: &Scalar) -> Result<Scalar> {
        Ok(self.mul(&other.inv()?))
    }

    pub fn pow(&self, mut e: u32) -> Scalar {
        let mut base = self.clone();
        let mut acc = Scalar::one(&self.params);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// True when the fraction has a nonconstant denominator or a multi-term
    /// numerator; used by displays to decide on parentheses.
    pub fn needs_parens(&self) -> bool {
        self.den.as_constant().is_none() || self.num.terms.len() > 1
    }

    /// Sign of the graded-lex leading numerator coefficient (the denominator
    /// is canonically positive-leading).
    pub fn is_negative_lead(&self) -> bool {
        self.num.leading().map(|(_, c)| c.is_negative()).unwrap_or(false)
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names = self.params.names();
        if self.den.is_one() {
            return self.num.fmt_with(f, names);
        }
        let simple_num = self.num.terms.len() <= 1;
        if simple_num {
            self.num.fmt_with(f, names)?;
        } else {
            write!(f, "(")?;
            self.num.fmt_with(f, names)?;
            write!(f, ")")?;
        }
        write!(f, "/")?;
        if self.den.terms.len() <= 1 && !self.den.leading().map(|(_, c)| c.is_negative()).unwrap_or(false) {
            self.den.fmt_with(f, names)
        } else {
            write!(f, "(")?;
            self.den.fmt_with(f, names)?;
            write!(f, ")")
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ps2() -> ParamSet {
        ParamSet::new(["b", "c"]).unwrap()
    }

    #[test]
    fn rational_arithmetic() {
        let ps = ParamSet::empty();
        let a = Scalar::from_ratio(&ps, 1, 2).unwrap();
        let b = Scalar::from_ratio(&ps, 1, 3).unwrap();
        let s = a.add(&b);
        assert_eq!(s, Scalar::from_ratio(&ps, 5, 6).unwrap());
        assert_eq!(a.mul(&b), Scalar::from_ratio(&ps, 1, 6).unwrap());
        assert_eq!(a.sub(&a), Scalar::zero(&ps));
        assert!(a.div(&Scalar::zero(&ps)).is_err());
    }

    #[test]
    fn fraction_reduction_is_canonical() {
        let ps = ps2();
        let b = Scalar::param(&ps, 0);
        let c = Scalar::param(&ps, 1);
        // (b^2 - c^2)/(b - c) reduces to b + c
        let n = b.mul(&b).sub(&c.mul(&c));
        let d = b.sub(&c);
        let q = n.div(&d).unwrap();
        assert_eq!(q, b.add(&c));
        // inverse round-trip
        let x = b.add(&Scalar::from_int(&ps, 2)).div(&c.sub(&b)).unwrap();
        assert!(x.mul(&x.inv().unwrap()).is_one());
    }

    #[test]
    fn gcd_cancels_multivariate_factors() {
        let ps = ps2();
        let b = Scalar::param(&ps, 0);
        let c = Scalar::param(&ps, 1);
        let common = b.mul(&c).add(&Scalar::from_int(&ps, 1)); // bc + 1
        let x = common.mul(&b).div(&common.mul(&c)).unwrap();
        assert_eq!(x, b.div(&c).unwrap());
    }

    #[test]
    fn display_forms() {
        let ps = ps2();
        let b = Scalar::param(&ps, 0);
        let c = Scalar::param(&ps, 1);
        assert_eq!(Scalar::from_ratio(&ps, -3, 4).unwrap().to_string(), "-3/4");
        assert_eq!(b.to_string(), "b");
        let e = b.mul(&b).mul_int(2).sub(&c).to_string();
        assert_eq!(e, "2*b^2 - c");
        let q = b.add(&Scalar::from_int(&ps, 1)).div(&c).unwrap();
        assert_eq!(q.to_string(), "(b + 1)/c");
    }

    #[test]
    fn denominator_sign_is_canonical() {
        let ps = ps2();
        let b = Scalar::param(&ps, 0);
        let minus_one = Scalar::from_int(&ps, -1);
        let x = b.div(&minus_one.sub(&Scalar::param(&ps, 1))).unwrap(); // b/(-1 - c)
        let y = b.neg().div(&Scalar::param(&ps, 1).add(&Scalar::from_int(&ps, 1))).unwrap();
        assert_eq!(x, y);
    }
}
