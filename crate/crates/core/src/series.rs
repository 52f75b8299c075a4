//! Sparse truncated multivariate power series over [`Scalar`] coefficients.
//!
//! A [`TruncSeries`] stores terms up to a global truncation degree `cap` and
//! tracks a validity degree `valid <= cap`: coefficients of total degree
//! `<= valid` are guaranteed exact, everything above is discarded. Validity
//! only decreases through arithmetic (division by a series of order one costs
//! one degree, and so on), so precision loss is always explicit.
//!
//! Stored invariants: no zero coefficients, no term of total degree greater
//! than `valid`, and all coefficients share one parameter set.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use crate::error::{Error, Result};
use crate::scalar::{ParamSet, Scalar};

/// Most series variables a single computation may use.
pub const MAX_VARS: usize = 8;

/// Exponent vector of a series monomial.
pub type Mono = arrayvec::ArrayVec<u16, MAX_VARS>;

pub(crate) fn mono_zero(n: usize) -> Mono {
    let mut e = Mono::new();
    for _ in 0..n {
        e.push(0);
    }
    e
}

pub(crate) fn mono_total(e: &Mono) -> u32 {
    e.iter().map(|&x| x as u32).sum()
}

/// Graded-lex order with lexicographically larger exponents first inside a
/// degree block; this is the canonical term order for display and reports.
pub(crate) fn grlex_display(a: &Mono, b: &Mono) -> Ordering {
    mono_total(a).cmp(&mono_total(b)).then_with(|| b.cmp(a))
}

/// A multivariate power series truncated at total degree `cap`, exact through
/// total degree `valid`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TruncSeries {
    params: ParamSet,
    nvars: usize,
    cap: u32,
    valid: u32,
    terms: BTreeMap<Mono, Scalar>,
}

impl TruncSeries {
    /// The zero series (exact to `cap`).
    pub fn zero(params: &ParamSet, nvars: usize, cap: u32) -> Self {
        assert!(nvars <= MAX_VARS, "at most {MAX_VARS} series variables");
        TruncSeries {
            params: params.clone(),
            nvars,
            cap,
            valid: cap,
            terms: BTreeMap::new(),
        }
    }

    /// The constant series `c`.
    pub fn constant(params: &ParamSet, nvars: usize, cap: u32, c: Scalar) -> Self {
        let mut s = TruncSeries::zero(params, nvars, cap);
        if !c.is_zero() {
            s.terms.insert(mono_zero(nvars), c);
        }
        s
    }

    pub fn one(params: &ParamSet, nvars: usize, cap: u32) -> Self {
        TruncSeries::constant(params, nvars, cap, Scalar::one(params))
    }

    /// The variable `x_i`.
    pub fn var(params: &ParamSet, nvars: usize, cap: u32, i: usize) -> Self {
        assert!(i < nvars);
        let mut s = TruncSeries::zero(params, nvars, cap);
        if cap >= 1 {
            let mut e = mono_zero(nvars);
            e[i] = 1;
            s.terms.insert(e, Scalar::one(params));
        }
        s
    }

    /// A single monomial with the given exponents and coefficient.
    pub fn monomial(params: &ParamSet, nvars: usize, cap: u32, exps: &[u16], c: Scalar) -> Self {
        assert_eq!(exps.len(), nvars);
        let mut e = mono_zero(nvars);
        e.copy_from_slice(exps);
        let mut s = TruncSeries::zero(params, nvars, cap);
        if !c.is_zero() && mono_total(&e) <= cap {
            s.terms.insert(e, c);
        }
        s
    }

    pub fn params(&self) -> &ParamSet {
        &self.params
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn cap(&self) -> u32 {
        self.cap
    }

    pub fn valid(&self) -> u32 {
        self.valid
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Mono, &Scalar)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Coefficient of the given exponent vector (zero when absent).
    pub fn coeff(&self, exps: &[u16]) -> Scalar {
        let mut e = mono_zero(self.nvars);
        e.copy_from_slice(exps);
        self.terms.get(&e).cloned().unwrap_or_else(|| Scalar::zero(&self.params))
    }

    /// Constant term.
    pub fn eps(&self) -> Scalar {
        self.coeff(&alloc::vec![0; self.nvars])
    }

    /// Total degree of the lowest stored term; `None` when no term is stored
    /// (zero through the validity degree).
    pub fn order(&self) -> Option<u32> {
        self.terms.keys().map(mono_total).min()
    }

    /// A certified lower bound for the true order of the series.
    fn order_bound(&self) -> u32 {
        self.order().unwrap_or(self.valid + 1)
    }

    fn drop_beyond_valid(&mut self) {
        let v = self.valid;
        self.terms.retain(|e, c| mono_total(e) <= v && !c.is_zero());
    }

    /// Explicitly lowers the validity degree, discarding terms above it.
    pub fn truncated(&self, new_valid: u32) -> TruncSeries {
        let mut s = self.clone();
        s.valid = s.valid.min(new_valid);
        s.drop_beyond_valid();
        s
    }

    /// Checks that two series live in the same ambient ring.
    pub fn compat(&self, other: &TruncSeries) -> Result<()> {
        if self.nvars != other.nvars || self.cap != other.cap || self.params != other.params {
            return Err(Error::Dimension(alloc::format!(
                "series rings differ: {} vars cap {} vs {} vars cap {}",
                self.nvars, self.cap, other.nvars, other.cap
            )));
        }
        Ok(())
    }

    fn assert_compat(&self, other: &TruncSeries) {
        self.compat(other).expect("series rings must match");
    }

    pub fn add(&self, other: &TruncSeries) -> TruncSeries {
        self.assert_compat(other);
        let mut r = self.clone();
        r.valid = self.valid.min(other.valid);
        for (e, c) in &other.terms {
            match r.terms.entry(e.clone()) {
                alloc::collections::btree_map::Entry::Vacant(v) => {
                    v.insert(c.clone());
                }
                alloc::collections::btree_map::Entry::Occupied(mut o) => {
                    let s = o.get().add(c);
                    if s.is_zero() {
                        o.remove();
                    } else {
                        *o.get_mut() = s;
                    }
                }
            }
        }
        r.drop_beyond_valid();
        r
    }

    pub fn neg(&self) -> TruncSeries {
        let mut r = self.clone();
        for c in r.terms.values_mut() {
            *c = c.neg();
        }
        r
    }

    pub fn sub(&self, other: &TruncSeries) -> TruncSeries {
        self.add(&other.neg())
    }

    pub fn scalar_mul(&self, k: &Scalar) -> TruncSeries {
        if k.is_zero() {
            let mut r = TruncSeries::zero(&self.params, self.nvars, self.cap);
            r.valid = self.valid;
            return r;
        }
        let mut r = self.clone();
        for c in r.terms.values_mut() {
            *c = c.mul(k);
        }
        r
    }

    /// Product. The validity of the result is
    /// `min(cap, a.valid + ord(b), b.valid + ord(a))`: coefficients of the
    /// product at degree `d` only involve coefficients of `a` at degree
    /// `<= d - ord(b)` and of `b` at degree `<= d - ord(a)`.
    pub fn mul(&self, other: &TruncSeries) -> TruncSeries {
        self.assert_compat(other);
        let bound = self
            .cap
            .min(self.valid.saturating_add(other.order_bound()))
            .min(other.valid.saturating_add(self.order_bound()));
        let mut r = TruncSeries::zero(&self.params, self.nvars, self.cap);
        r.valid = bound;
        for (ea, ca) in &self.terms {
            let da = mono_total(ea);
            for (eb, cb) in &other.terms {
                if da + mono_total(eb) > bound {
                    continue;
                }
                let mut e = ea.clone();
                for (x, y) in e.iter_mut().zip(eb.iter()) {
                    *x += *y;
                }
                let p = ca.mul(cb);
                if p.is_zero() {
                    continue;
                }
                match r.terms.entry(e) {
                    alloc::collections::btree_map::Entry::Vacant(v) => {
                        v.insert(p);
                    }
                    alloc::collections::btree_map::Entry::Occupied(mut o) => {
                        let s = o.get().add(&p);
                        if s.is_zero() {
                            o.remove();
                        } else {
                            *o.get_mut() = s;
                        }
                    }
                }
            }
        }
        r
    }

    /// Multiplies by the monomial `x^e * k`. Shifting by an exact monomial
    /// raises the validity degree by its total degree (never past `cap`).
    pub fn mul_monomial(&self, exps: &[u16], k: &Scalar) -> TruncSeries {
        assert_eq!(exps.len(), self.nvars);
        let shift: u32 = exps.iter().map(|&x| x as u32).sum();
        let mut r = TruncSeries::zero(&self.params, self.nvars, self.cap);
        r.valid = self.cap.min(self.valid.saturating_add(shift));
        if k.is_zero() {
            return r;
        }
        for (e, c) in &self.terms {
            let mut ee = e.clone();
            for (x, y) in ee.iter_mut().zip(exps.iter()) {
                *x += *y;
            }
            if mono_total(&ee) > r.valid {
                continue;
            }
            let p = c.mul(k);
            if !p.is_zero() {
                r.terms.insert(ee, p);
            }
        }
        r
    }

    pub fn try_add(&self, other: &TruncSeries) -> Result<TruncSeries> {
        self.compat(other)?;
        Ok(self.add(other))
    }

    pub fn try_sub(&self, other: &TruncSeries) -> Result<TruncSeries> {
        self.compat(other)?;
        Ok(self.sub(other))
    }

    pub fn try_mul(&self, other: &TruncSeries) -> Result<TruncSeries> {
        self.compat(other)?;
        Ok(self.mul(other))
    }

    /// Splits the series into homogeneous components `0..=valid`.
    fn components(&self) -> Vec<BTreeMap<Mono, Scalar>> {
        let mut out = alloc::vec![BTreeMap::new(); self.valid as usize + 1];
        for (e, c) in &self.terms {
            out[mono_total(e) as usize].insert(e.clone(), c.clone());
        }
        out
    }

    fn from_components(
        params: &ParamSet,
        nvars: usize,
        cap: u32,
        valid: u32,
        comps: Vec<BTreeMap<Mono, Scalar>>,
    ) -> TruncSeries {
        let mut s = TruncSeries::zero(params, nvars, cap);
        s.valid = valid;
        for comp in comps {
            for (e, c) in comp {
                if mono_total(&e) <= valid && !c.is_zero() {
                    s.terms.insert(e, c);
                }
            }
        }
        s
    }

    /// Multiplicative inverse of a series with invertible constant term.
    pub fn invert_unit(&self) -> Result<TruncSeries> {
        let c0 = self.eps();
        if !c0.is_unit() {
            return Err(Error::NonUnit("series constant term is zero".into()));
        }
        let inv0 = c0.inv()?;
        let a = self.components();
        let v = self.valid as usize;
        let mut r: Vec<BTreeMap<Mono, Scalar>> = alloc::vec![BTreeMap::new(); v + 1];
        r[0].insert(mono_zero(self.nvars), inv0.clone());
        for d in 1..=v {
            // r_d = -inv0 * sum_{k=1..d} a_k r_{d-k}
            let mut acc: BTreeMap<Mono, Scalar> = BTreeMap::new();
            for k in 1..=d {
                mul_into(&mut acc, &a[k], &r[d - k]);
            }
            let neg = inv0.neg();
            for (e, c) in acc {
                let p = c.mul(&neg);
                if !p.is_zero() {
                    r[d].insert(e, p);
                }
            }
        }
        Ok(TruncSeries::from_components(&self.params, self.nvars, self.cap, self.valid, r))
    }

    /// Formal composition: substitutes `args[i]` for variable `i`. Every
    /// argument must have zero constant term. Arguments may live in a
    /// different variable space (all with the same cap and parameters).
    pub fn substitute(&self, args: &[&TruncSeries]) -> Result<TruncSeries> {
        if args.len() != self.nvars {
            return Err(Error::Dimension(alloc::format!(
                "substitute: {} arguments for {} variables",
                args.len(),
                self.nvars
            )));
        }
        let (out_nvars, out_params) = match args.first() {
            Some(a) => (a.nvars, a.params.clone()),
            None => (0, self.params.clone()),
        };
        for a in args {
            if a.nvars != out_nvars || a.cap != self.cap || a.params != self.params {
                return Err(Error::Dimension("substitute: inconsistent argument rings".into()));
            }
            if !a.eps().is_zero() {
                return Err(Error::Composition(
                    "substitution argument has nonzero constant term".into(),
                ));
            }
        }
        let mut used = alloc::vec![false; self.nvars];
        let mut max_exp = alloc::vec![0u16; self.nvars];
        for e in self.terms.keys() {
            for (i, &x) in e.iter().enumerate() {
                if x > 0 {
                    used[i] = true;
                    max_exp[i] = max_exp[i].max(x);
                }
            }
        }
        let mut bound = self.valid;
        for (i, a) in args.iter().enumerate() {
            if used[i] {
                bound = bound.min(a.valid);
            }
        }
        // Power tables, args[i]^k for the exponents that actually occur.
        let one = TruncSeries::one(&out_params, out_nvars, self.cap);
        let mut pows: Vec<Vec<TruncSeries>> = Vec::with_capacity(self.nvars);
        for (i, a) in args.iter().enumerate() {
            let mut table = alloc::vec![one.clone()];
            if used[i] {
                for k in 1..=max_exp[i] as usize {
                    let next = table[k - 1].mul(a);
                    table.push(next);
                }
            }
            pows.push(table);
        }
        let mut acc = TruncSeries::zero(&out_params, out_nvars, self.cap);
        acc.valid = bound;
        for (e, c) in &self.terms {
            if mono_total(e) > bound {
                continue;
            }
            let mut term = TruncSeries::constant(&out_params, out_nvars, self.cap, c.clone());
            for (i, &x) in e.iter().enumerate() {
                if x > 0 {
                    term = term.mul(&pows[i][x as usize]);
                }
            }
            term.valid = bound;
            term.drop_beyond_valid();
            acc = acc.add(&term);
        }
        acc.valid = bound;
        acc.drop_beyond_valid();
        Ok(acc)
    }

    /// Exact division by a series of order one (zero constant term, nonzero
    /// linear part). The quotient satisfies `q * den = num` through
    /// `num.valid`, and `q.valid = min(num.valid, den.valid) - 1`.
    ///
    /// An invertible linear change of variables sends the linear part of the
    /// denominator to a single coordinate, division then proceeds degree by
    /// degree, and the result is changed back.
    pub fn div_exact(&self, den: &TruncSeries) -> Result<TruncSeries> {
        self.compat(den)?;
        if !den.eps().is_zero() {
            return Err(Error::Divisibility {
                degree: 0,
                detail: "denominator has nonzero constant term; use invert_unit".into(),
            });
        }
        // Linear part of the denominator.
        let mut lin = alloc::vec![Scalar::zero(&self.params); self.nvars];
        let mut pivot = None;
        for (e, c) in &den.terms {
            if mono_total(e) == 1 {
                let i = e.iter().position(|&x| x == 1).unwrap();
                lin[i] = c.clone();
                if pivot.is_none() {
                    pivot = Some(i);
                }
            }
        }
        let p = pivot.ok_or_else(|| Error::Divisibility {
            degree: 1,
            detail: "denominator has zero linear part".into(),
        })?;
        let vq = self.valid.min(den.valid);
        if vq == 0 {
            return Err(Error::PrecisionUnderflow {
                needed: 1,
                available: 0,
                detail: "division by an order-one series".into(),
            });
        }
        let inv_p = lin[p].inv()?;

        // Forward map: x_p -> (x_p - sum_{i!=p} lin_i x_i) / lin_p.
        let fwd: Vec<TruncSeries> = (0..self.nvars)
            .map(|i| {
                if i != p {
                    TruncSeries::var(&self.params, self.nvars, self.cap, i)
                } else {
                    let mut s = TruncSeries::var(&self.params, self.nvars, self.cap, p);
                    for (j, cj) in lin.iter().enumerate() {
                        if j != p && !cj.is_zero() {
                            let xj = TruncSeries::var(&self.params, self.nvars, self.cap, j);
                            s = s.sub(&xj.scalar_mul(cj));
                        }
                    }
                    s.scalar_mul(&inv_p)
                }
            })
            .collect();
        let fwd_refs: Vec<&TruncSeries> = fwd.iter().collect();
        let num_t = self.substitute(&fwd_refs)?;
        let den_t = den.substitute(&fwd_refs)?;

        let nd = num_t.components();
        let dd = den_t.components();
        let mut q: Vec<BTreeMap<Mono, Scalar>> = alloc::vec![BTreeMap::new(); vq as usize];
        if let Some(c) = nd.first() {
            if !c.is_empty() {
                return Err(Error::Divisibility {
                    degree: 0,
                    detail: "numerator has nonzero constant term".into(),
                });
            }
        }
        for d in 0..vq as usize {
            // rhs_d = num_{d+1} - sum_{k<d} q_k * den_{d+1-k}
            let mut rhs = nd.get(d + 1).cloned().unwrap_or_default();
            for k in 0..d {
                let j = d + 1 - k;
                if j >= 2 {
                    if let Some(dj) = dd.get(j) {
                        let mut prod = BTreeMap::new();
                        mul_into(&mut prod, &q[k], dj);
                        for (e, c) in prod {
                            sub_into(&mut rhs, e, c);
                        }
                    }
                }
            }
            // Every monomial must contain x_p.
            for (e, c) in rhs {
                if e[p] == 0 {
                    return Err(Error::Divisibility {
                        degree: d as u32 + 1,
                        detail: alloc::format!("remainder term with coefficient {c}"),
                    });
                }
                let mut e2 = e.clone();
                e2[p] -= 1;
                q[d].insert(e2, c);
            }
        }
        let q_t = TruncSeries::from_components(&self.params, self.nvars, self.cap, vq - 1, q);

        // Backward map: x_p -> lin_p x_p + sum_{i!=p} lin_i x_i.
        let bwd: Vec<TruncSeries> = (0..self.nvars)
            .map(|i| {
                if i != p {
                    TruncSeries::var(&self.params, self.nvars, self.cap, i)
                } else {
                    let mut s = TruncSeries::var(&self.params, self.nvars, self.cap, p)
                        .scalar_mul(&lin[p]);
                    for (j, cj) in lin.iter().enumerate() {
                        if j != p && !cj.is_zero() {
                            let xj = TruncSeries::var(&self.params, self.nvars, self.cap, j);
                            s = s.add(&xj.scalar_mul(cj));
                        }
                    }
                    s
                }
            })
            .collect();
        let bwd_refs: Vec<&TruncSeries> = bwd.iter().collect();
        q_t.substitute(&bwd_refs)
    }

    /// Compositional inverse of a univariate series `a_1 x + a_2 x^2 + ...`
    /// with invertible `a_1`; both round trips hold through the validity
    /// degree.
    pub fn comp_inverse(&self) -> Result<TruncSeries> {
        if self.nvars != 1 {
            return Err(Error::Dimension("comp_inverse needs a univariate series".into()));
        }
        if !self.eps().is_zero() {
            return Err(Error::NoCompInverse("nonzero constant term".into()));
        }
        let a1 = self.coeff(&[1]);
        if !a1.is_unit() {
            return Err(Error::NoCompInverse("linear coefficient is not a unit".into()));
        }
        let inv1 = a1.inv()?;
        let mut f = TruncSeries::var(&self.params, 1, self.cap, 0).scalar_mul(&inv1);
        f.valid = self.valid;
        for d in 2..=self.valid {
            let g = self.substitute(&[&f])?;
            let err = g.coeff(&[d as u16]);
            if !err.is_zero() {
                let corr = TruncSeries::monomial(
                    &self.params,
                    1,
                    self.cap,
                    &[d as u16],
                    err.mul(&inv1),
                );
                f = f.sub(&corr);
            }
        }
        f.valid = self.valid;
        Ok(f)
    }

    /// First differing coefficient up to total degree `deg`, if any.
    pub fn first_diff(&self, other: &TruncSeries, deg: u32) -> Option<(Mono, Scalar, Scalar)> {
        self.assert_compat(other);
        let mut monos: Vec<&Mono> = self
            .terms
            .keys()
            .chain(other.terms.keys())
            .filter(|e| mono_total(e) <= deg)
            .collect();
        monos.sort_by(|a, b| grlex_display(a, b));
        monos.dedup();
        for e in monos {
            let a = self.terms.get(e).cloned().unwrap_or_else(|| Scalar::zero(&self.params));
            let b = other.terms.get(e).cloned().unwrap_or_else(|| Scalar::zero(&self.params));
            if a != b {
                return Some((e.clone(), a, b));
            }
        }
        None
    }

    /// True when all coefficients agree through total degree `deg`.
    pub fn agrees_with(&self, other: &TruncSeries, deg: u32) -> bool {
        self.first_diff(other, deg).is_none()
    }

    /// Renders the series with the given variable names in canonical
    /// graded-lex order.
    pub fn display_with<'a>(&'a self, names: &'a [&'a str]) -> impl fmt::Display + 'a {
        SeriesDisplay { series: self, names }
    }

    /// Canonical text form with default variable names `x0, x1, ...`.
    pub fn to_text(&self) -> String {
        let names: Vec<String> =
            (0..self.nvars).map(|i| alloc::format!("x{i}")).collect();
        let refs: Vec<&str> = names.iter().map(|s| s.as_str()).collect();
        alloc::format!("{}", self.display_with(&refs))
    }
}

fn mul_into(
    acc: &mut BTreeMap<Mono, Scalar>,
    a: &BTreeMap<Mono, Scalar>,
    b: &BTreeMap<Mono, Scalar>,
) {
    for (ea, ca) in a {
        for (eb, cb) in b {
            let mut e = ea.clone();
            for (x, y) in e.iter_mut().zip(eb.iter()) {
                *x += *y;
            }
            let p = ca.mul(cb);
            if p.is_zero() {
                continue;
            }
            match acc.entry(e) {
                alloc::collections::btree_map::Entry::Vacant(v) => {
                    v.insert(p);
                }
                alloc::collections::btree_map::Entry::Occupied(mut o) => {
                    let s = o.get().add(&p);
                    if s.is_zero() {
                        o.remove();
                    } else {
                        *o.get_mut() = s;
                    }
                }
            }
        }
    }
}

fn sub_into(acc: &mut BTreeMap<Mono, Scalar>, e: Mono, c: Scalar) {
    match acc.entry(e) {
        alloc::collections::btree_map::Entry::Vacant(v) => {
            v.insert(c.neg());
        }
        alloc::collections::btree_map::Entry::Occupied(mut o) => {
            let s = o.get().sub(&c);
            if s.is_zero() {
                o.remove();
            } else {
                *o.get_mut() = s;
            }
        }
    }
}

struct SeriesDisplay<'a> {
    series: &'a TruncSeries,
    names: &'a [&'a str],
}

impl fmt::Display for SeriesDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = self.series;
        if s.terms.is_empty() {
            return write!(f, "0");
        }
        let mut keys: Vec<&Mono> = s.terms.keys().collect();
        keys.sort_by(|a, b| grlex_display(a, b));
        for (i, e) in keys.iter().enumerate() {
            let c = &s.terms[*e];
            let constant = mono_total(e) == 0;
            let (lead_minus, body): (bool, String) = if c.needs_parens() {
                (false, alloc::format!("({c})"))
            } else if c.is_one() && !constant {
                (false, String::new())
            } else {
                let neg = c.is_negative_lead();
                let mag = if neg { c.neg() } else { c.clone() };
                if mag.is_one() && !constant {
                    (neg, String::new())
                } else {
                    (neg, alloc::format!("{mag}"))
                }
            };
            if i == 0 {
                if lead_minus {
                    write!(f, "-")?;
                }
            } else if lead_minus {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mut wrote = false;
            if !body.is_empty() {
                write!(f, "{body}")?;
                wrote = true;
            }
            for (v, &p) in e.iter().enumerate() {
                if p == 0 {
                    continue;
                }
                if wrote {
                    write!(f, "*")?;
                }
                wrote = true;
                write!(f, "{}", self.names[v])?;
                if p > 1 {
                    write!(f, "^{p}")?;
                }
            }
            if !wrote {
                write!(f, "1")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> ParamSet {
        ParamSet::empty()
    }

    fn int(c: i64) -> Scalar {
        Scalar::from_int(&q(), c)
    }

    #[test]
    fn ring_ops_basic() {
        let ps = q();
        let x = TruncSeries::var(&ps, 2, 4, 0);
        let y = TruncSeries::var(&ps, 2, 4, 1);
        let xy = x.mul(&y);
        assert_eq!(xy.coeff(&[1, 1]), int(1));
        assert_eq!(xy.terms().count(), 1);

        let one = TruncSeries::one(&ps, 2, 4);
        let a = one.add(&x);
        assert!(a.sub(&a).is_zero());

        // (1+x)(1-x) = 1 - x^2 at cap >= 2
        let b = one.sub(&x);
        let p = a.mul(&b);
        assert_eq!(p.coeff(&[0, 0]), int(1));
        assert_eq!(p.coeff(&[1, 0]), int(0));
        assert_eq!(p.coeff(&[2, 0]), int(-1));
    }

    #[test]
    fn mismatched_rings_error() {
        let ps = q();
        let x4 = TruncSeries::var(&ps, 1, 4, 0);
        let x5 = TruncSeries::var(&ps, 1, 5, 0);
        assert!(matches!(x4.try_add(&x5), Err(Error::Dimension(_))));
        let y = TruncSeries::var(&ps, 2, 4, 1);
        assert!(matches!(x4.try_mul(&y), Err(Error::Dimension(_))));
    }

    #[test]
    fn invert_unit_geometric() {
        let ps = q();
        let x = TruncSeries::var(&ps, 1, 3, 0);
        let one = TruncSeries::one(&ps, 1, 3);
        let inv = one.sub(&x).invert_unit().unwrap();
        // 1/(1-x) = 1 + x + x^2 + x^3
        for d in 0..=3u16 {
            assert_eq!(inv.coeff(&[d]), int(1));
        }
        assert!(inv.mul(&one.sub(&x)).agrees_with(&one, 3));
        assert!(one.invert_unit().unwrap().agrees_with(&one, 3));
        assert!(matches!(x.invert_unit(), Err(Error::NonUnit(_))));
    }

    #[test]
    fn substitute_examples() {
        let ps = q();
        // substitute(x+y; x:=u, y:=0) = u
        let x = TruncSeries::var(&ps, 2, 5, 0);
        let y = TruncSeries::var(&ps, 2, 5, 1);
        let sum = x.add(&y);
        let u = TruncSeries::var(&ps, 1, 5, 0);
        let z = TruncSeries::zero(&ps, 1, 5);
        let r = sum.substitute(&[&u, &z]).unwrap();
        assert!(r.agrees_with(&u, 5));

        // substitute(x^2, x := u+v) = u^2 + 2uv + v^2
        let xs = TruncSeries::var(&ps, 1, 5, 0);
        let x2 = xs.mul(&xs);
        let uu = TruncSeries::var(&ps, 2, 5, 0);
        let vv = TruncSeries::var(&ps, 2, 5, 1);
        let arg = uu.add(&vv);
        let r = x2.substitute(&[&arg]).unwrap();
        assert_eq!(r.coeff(&[2, 0]), int(1));
        assert_eq!(r.coeff(&[1, 1]), int(2));
        assert_eq!(r.coeff(&[0, 2]), int(1));

        // substitute(sum x^n, x := y^2) at cap 5 = 1 + y^2 + y^4
        let one = TruncSeries::one(&ps, 1, 5);
        let geom = one.sub(&xs).invert_unit().unwrap();
        let y2 = xs.mul(&xs);
        let r = geom.substitute(&[&y2]).unwrap();
        assert_eq!(r.coeff(&[0]), int(1));
        assert_eq!(r.coeff(&[2]), int(1));
        assert_eq!(r.coeff(&[4]), int(1));
        assert_eq!(r.coeff(&[1]), int(0));
        assert_eq!(r.coeff(&[3]), int(0));

        // unit constant term in an argument is rejected
        let bad = one.clone();
        assert!(matches!(x2.substitute(&[&bad]), Err(Error::Composition(_))));
    }

    #[test]
    fn div_exact_examples() {
        let ps = q();
        let x = TruncSeries::var(&ps, 2, 6, 0);
        let y = TruncSeries::var(&ps, 2, 6, 1);
        // (x^2 - y^2)/(x - y) = x + y
        let num = x.mul(&x).sub(&y.mul(&y));
        let den = x.sub(&y);
        let quo = num.div_exact(&den).unwrap();
        assert!(quo.agrees_with(&x.add(&y), quo.valid()));
        // xy / x = y
        let quo = x.mul(&y).div_exact(&x).unwrap();
        assert!(quo.agrees_with(&y, quo.valid()));
        // x / y fails
        assert!(matches!(x.div_exact(&y), Err(Error::Divisibility { .. })));
    }

    #[test]
    fn comp_inverse_examples() {
        let ps = q();
        let x = TruncSeries::var(&ps, 1, 3, 0);
        // inverse of -x is -x
        let f = x.neg().comp_inverse().unwrap();
        assert!(f.agrees_with(&x.neg(), 3));
        // inverse of x + x^2 at cap 3 is x - x^2 + 2x^3
        let a = x.add(&x.mul(&x));
        let f = a.comp_inverse().unwrap();
        assert_eq!(f.coeff(&[1]), int(1));
        assert_eq!(f.coeff(&[2]), int(-1));
        assert_eq!(f.coeff(&[3]), int(2));
        let round = a.substitute(&[&f]).unwrap();
        assert!(round.agrees_with(&x, 3));
        let round = f.substitute(&[&a]).unwrap();
        assert!(round.agrees_with(&x, 3));
        // x^2 has no compositional inverse
        assert!(matches!(x.mul(&x).comp_inverse(), Err(Error::NoCompInverse(_))));
    }

    #[test]
    fn validity_bookkeeping() {
        let ps = q();
        let x = TruncSeries::var(&ps, 1, 6, 0);
        let one = TruncSeries::one(&ps, 1, 6);
        let u = one.add(&x); // valid 6
        let t = u.truncated(3);
        assert_eq!(t.valid(), 3);
        assert_eq!(u.add(&t).valid(), 3);
        // multiplying by an order-1 series preserves useful degrees
        let p = t.mul(&x);
        assert_eq!(p.valid(), 4);
        // monomial shift raises validity up to cap
        let m = t.mul_monomial(&[2], &Scalar::one(&ps));
        assert_eq!(m.valid(), 5);
    }

    #[test]
    fn canonical_text() {
        let ps = ParamSet::new(["b"]).unwrap();
        let b = Scalar::param(&ps, 0);
        let x = TruncSeries::var(&ps, 2, 4, 0);
        let y = TruncSeries::var(&ps, 2, 4, 1);
        let f = x.add(&y).sub(&x.mul(&y).scalar_mul(&b));
        assert_eq!(format!("{}", f.display_with(&["x", "y"])), "x + y - b*x*y");
        let z = TruncSeries::zero(&ps, 1, 4);
        assert_eq!(z.to_text(), "0");
        let c = TruncSeries::one(&ps, 1, 4)
            .scalar_mul(&Scalar::from_ratio(&ps, 2, 3).unwrap());
        assert_eq!(c.to_text(), "2/3");
    }
}
