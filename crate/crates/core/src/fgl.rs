//! One-dimensional commutative formal group laws.
//!
//! A law is a bivariate series F(x,y) = x + y + higher cross terms satisfying
//! unit, commutativity, and associativity up to the truncation cap. On
//! construction we solve for the formal inverse i(x) (F(x, i(x)) = 0) degree
//! by degree and derive the two basic invariants
//!
//! ```text
//!   mu(x)    = i(x) / (-x)            (unit series, constant term 1)
//!   kappa(x) = 1/x + 1/i(x)           (power series, constant term -a11)
//! ```
//!
//! The kappa class (identically zero or not, up to the available degree)
//! controls which Hecke-type coefficients apply downstream. Laws with
//! kappa != 0 must have an invertible xy-coefficient `a11`.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::scalar::{ParamSet, Scalar};
use crate::series::TruncSeries;

/// Whether kappa vanishes identically (up to the certified degree).
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum KappaClass {
    Zero,
    Nonzero,
}

/// A validated formal group law with its cached invariants.
#[derive(Clone, Debug)]
pub struct FormalGroupLaw {
    desc: String,
    params: ParamSet,
    cap: u32,
    f: TruncSeries,
    a11: Scalar,
    inv: TruncSeries,
    kappa: TruncSeries,
    mu: TruncSeries,
    kappa_class: KappaClass,
}

impl FormalGroupLaw {
    /// Validates the axioms and builds the law. The error names the first
    /// axiom that fails and the total degree of the offending coefficient.
    pub fn make(f: TruncSeries) -> Result<Self> {
        Self::make_named(f, "custom")
    }

    pub fn make_named(f: TruncSeries, desc: &str) -> Result<Self> {
        Self::build(f, desc, true)
    }

    /// Builds without axiom validation. Intended for corruption/mutation
    /// testing of downstream checkers; the series must still have the
    /// x + y + (cross terms) shape so the formal inverse can be solved.
    pub fn from_series_unchecked(f: TruncSeries, desc: &str) -> Result<Self> {
        Self::build(f, desc, false)
    }

    fn build(f: TruncSeries, desc: &str, validate: bool) -> Result<Self> {
        if f.nvars() != 2 {
            return Err(Error::Dimension("a formal group law is a bivariate series".into()));
        }
        let params = f.params().clone();
        let cap = f.cap();
        let one = Scalar::one(&params);
        if !f.eps().is_zero() || f.coeff(&[1, 0]) != one || f.coeff(&[0, 1]) != one {
            return Err(Error::InvalidFgl {
                axiom: "unit",
                degree: 0,
                detail: "series must have the shape x + y + higher cross terms".into(),
            });
        }
        if validate {
            Self::validate_axioms(&f)?;
        }
        let inv = Self::solve_inverse(&f)?;
        let a11 = f.coeff(&[1, 1]);
        if inv.coeff(&[2]) != a11 {
            return Err(Error::InvalidFgl {
                axiom: "inverse-shape",
                degree: 2,
                detail: "formal inverse is not -x + a11*x^2 + O(x^3)".into(),
            });
        }
        let x = TruncSeries::var(&params, 1, cap, 0);
        let mu = inv.div_exact(&x)?.neg();
        let h = inv.add(&x).div_exact(&x)?;
        let kappa = h.div_exact(&inv)?;
        let kappa_class = if kappa.is_zero() { KappaClass::Zero } else { KappaClass::Nonzero };
        if validate && kappa_class == KappaClass::Nonzero && !a11.is_unit() {
            return Err(Error::UnsupportedRing(format!(
                "kappa is nonzero but the xy-coefficient ({a11}) is not invertible"
            )));
        }
        Ok(FormalGroupLaw {
            desc: desc.into(),
            params,
            cap,
            f,
            a11,
            inv,
            kappa,
            mu,
            kappa_class,
        })
    }

    fn validate_axioms(f: &TruncSeries) -> Result<()> {
        let params = f.params().clone();
        let cap = f.cap();
        let x2 = TruncSeries::var(&params, 2, cap, 0);
        let y2 = TruncSeries::var(&params, 2, cap, 1);
        let z2 = TruncSeries::zero(&params, 2, cap);
        // F(x, 0) = x
        let fx0 = f.substitute(&[&x2, &z2])?;
        if let Some((m, a, b)) = fx0.first_diff(&x2, fx0.valid()) {
            return Err(Error::InvalidFgl {
                axiom: "unit",
                degree: crate::series::mono_total(&m),
                detail: format!("F(x,0) coefficient {a} (expected {b})"),
            });
        }
        // F(x, y) = F(y, x)
        let fyx = f.substitute(&[&y2, &x2])?;
        if let Some((m, a, b)) = f.first_diff(&fyx, fyx.valid()) {
            return Err(Error::InvalidFgl {
                axiom: "commutativity",
                degree: crate::series::mono_total(&m),
                detail: format!("coefficients {a} vs {b}"),
            });
        }
        // F(x, F(y, z)) = F(F(x, y), z)
        let vars: Vec<TruncSeries> =
            (0..3).map(|i| TruncSeries::var(&params, 3, cap, i)).collect();
        let fyz = f.substitute(&[&vars[1], &vars[2]])?;
        let lhs = f.substitute(&[&vars[0], &fyz])?;
        let fxy = f.substitute(&[&vars[0], &vars[1]])?;
        let rhs = f.substitute(&[&fxy, &vars[2]])?;
        if let Some((m, a, b)) = lhs.first_diff(&rhs, lhs.valid().min(rhs.valid())) {
            return Err(Error::InvalidFgl {
                axiom: "associativity",
                degree: crate::series::mono_total(&m),
                detail: format!("coefficients {a} vs {b}"),
            });
        }
        Ok(())
    }

    /// Solves F(x, i(x)) = 0 for i degree by degree, through `f.valid()`.
    fn solve_inverse(f: &TruncSeries) -> Result<TruncSeries> {
        let params = f.params().clone();
        let cap = f.cap();
        let x = TruncSeries::var(&params, 1, cap, 0);
        let mut inv = x.neg().truncated(f.valid());
        for d in 2..=f.valid() {
            let residual = f.substitute(&[&x, &inv])?;
            let c = residual.coeff(&[d as u16]);
            if !c.is_zero() {
                inv = inv.sub(&TruncSeries::monomial(&params, 1, cap, &[d as u16], c));
            }
        }
        let check = f.substitute(&[&x, &inv])?;
        if !check.is_zero() {
            return Err(Error::InvalidFgl {
                axiom: "inverse",
                degree: check.order().unwrap_or(0),
                detail: "no formal inverse solves F(x, i(x)) = 0".into(),
            });
        }
        Ok(inv)
    }

    pub fn desc(&self) -> &str {
        &self.desc
    }

    pub fn params(&self) -> &ParamSet {
        &self.params
    }

    pub fn cap(&self) -> u32 {
        self.cap
    }

    /// The bivariate series F(x, y).
    pub fn f(&self) -> &TruncSeries {
        &self.f
    }

    /// Coefficient of xy.
    pub fn a11(&self) -> &Scalar {
        &self.a11
    }

    /// Formal inverse i(x), exact through `cap`.
    pub fn inv(&self) -> &TruncSeries {
        &self.inv
    }

    /// kappa(x) = 1/x + 1/i(x), exact through `cap - 2`.
    pub fn kappa(&self) -> &TruncSeries {
        &self.kappa
    }

    /// mu(x) = i(x)/(-x), exact through `cap - 1`.
    pub fn mu(&self) -> &TruncSeries {
        &self.mu
    }

    pub fn kappa_class(&self) -> KappaClass {
        self.kappa_class
    }

    /// Formal sum `a +_F b` for series in any common variable space.
    pub fn f_add(&self, a: &TruncSeries, b: &TruncSeries) -> Result<TruncSeries> {
        self.f.substitute(&[a, b])
    }

    /// Formal negation i(a).
    pub fn f_neg(&self, a: &TruncSeries) -> Result<TruncSeries> {
        self.inv.substitute(&[a])
    }

    /// mu evaluated at a series with zero constant term.
    pub fn mu_of(&self, a: &TruncSeries) -> Result<TruncSeries> {
        self.mu.substitute(&[a])
    }

    /// kappa evaluated at a series with zero constant term.
    pub fn kappa_of(&self, a: &TruncSeries) -> Result<TruncSeries> {
        self.kappa.substitute(&[a])
    }

    /// True when the formal inverse equals x/(x-1) (all coefficients -1)
    /// through its certified degree.
    pub fn is_normal(&self) -> bool {
        if self.kappa_class == KappaClass::Zero {
            return false;
        }
        let minus_one = Scalar::from_int(&self.params, -1);
        (1..=self.inv.valid()).all(|d| self.inv.coeff(&[d as u16]) == minus_one)
    }

    /// The normalization: an isomorphic law with formal inverse x/(x-1).
    ///
    /// Returns `(h, f, normalized)` where `h(x) = (i(x) + x)/x` maps the law
    /// to its normalization and `f` is the compositional inverse of `h`.
    /// Verifies that the normalized law has inverse x/(x-1), kappa = 1 and
    /// mu = 1/(1-x) through the available degrees.
    pub fn normalize(&self) -> Result<(TruncSeries, TruncSeries, FormalGroupLaw)> {
        if self.kappa_class == KappaClass::Zero || !self.a11.is_unit() {
            return Err(Error::NormalizationUnavailable(
                "requires kappa != 0 and invertible xy-coefficient".into(),
            ));
        }
        let x = TruncSeries::var(&self.params, 1, self.cap, 0);
        let h = self.inv.add(&x).div_exact(&x)?;
        let f = h.comp_inverse()?;
        // Round trips.
        let hf = h.substitute(&[&f])?;
        let fh = f.substitute(&[&h])?;
        if !hf.agrees_with(&x, hf.valid()) || !fh.agrees_with(&x, fh.valid()) {
            return Err(Error::TheoremViolation {
                statement: "normalize".into(),
                detail: "h and f are not compositional inverses".into(),
            });
        }
        let x2 = TruncSeries::var(&self.params, 2, self.cap, 0);
        let y2 = TruncSeries::var(&self.params, 2, self.cap, 1);
        let fx = f.substitute(&[&x2])?;
        let fy = f.substitute(&[&y2])?;
        let inner = self.f.substitute(&[&fx, &fy])?;
        let ft = h.substitute(&[&inner])?;
        let normalized = FormalGroupLaw::make_named(ft, &format!("normalized({})", self.desc))?;
        let minus_one = Scalar::from_int(&self.params, -1);
        for d in 1..=normalized.inv.valid() {
            if normalized.inv.coeff(&[d as u16]) != minus_one {
                return Err(Error::TheoremViolation {
                    statement: "normalize".into(),
                    detail: format!(
                        "normalized inverse coefficient at degree {d} is {}",
                        normalized.inv.coeff(&[d as u16])
                    ),
                });
            }
        }
        let one_series = TruncSeries::one(&self.params, 1, self.cap);
        if !normalized.kappa.agrees_with(
            &one_series.truncated(normalized.kappa.valid()),
            normalized.kappa.valid(),
        ) {
            return Err(Error::TheoremViolation {
                statement: "normalize".into(),
                detail: "normalized kappa is not identically 1".into(),
            });
        }
        let geometric = one_series.sub(&x).invert_unit()?;
        if !normalized.mu.agrees_with(
            &geometric.truncated(normalized.mu.valid()),
            normalized.mu.valid(),
        ) {
            return Err(Error::TheoremViolation {
                statement: "normalize".into(),
                detail: "normalized mu is not 1/(1-x)".into(),
            });
        }
        Ok((h, f, normalized))
    }
}

/// The additive law x + y over the rationals.
pub fn additive(cap: u32) -> FormalGroupLaw {
    let params = ParamSet::empty();
    let x = TruncSeries::var(&params, 2, cap, 0);
    let y = TruncSeries::var(&params, 2, cap, 1);
    FormalGroupLaw::make_named(x.add(&y), "additive").expect("additive law is valid")
}

/// The multiplicative law x + y - b*x*y; `b` must be a unit.
pub fn multiplicative(b: &Scalar, cap: u32) -> Result<FormalGroupLaw> {
    if !b.is_unit() {
        return Err(Error::UnsupportedRing("multiplicative parameter must be a unit".into()));
    }
    let params = b.params().clone();
    let x = TruncSeries::var(&params, 2, cap, 0);
    let y = TruncSeries::var(&params, 2, cap, 1);
    let f = x.add(&y).sub(&x.mul(&y).scalar_mul(b));
    FormalGroupLaw::make_named(f, "multiplicative")
}

/// The Lorentz law (x + y)/(1 + b*x*y).
pub fn lorentz(b: &Scalar, cap: u32) -> Result<FormalGroupLaw> {
    let params = b.params().clone();
    let x = TruncSeries::var(&params, 2, cap, 0);
    let y = TruncSeries::var(&params, 2, cap, 1);
    let den = TruncSeries::one(&params, 2, cap).add(&x.mul(&y).scalar_mul(b));
    let f = x.add(&y).mul(&den.invert_unit()?);
    FormalGroupLaw::make_named(f, "lorentz")
}

/// The elliptic-curve law from the Tate model, known through total degree 4:
///
/// ```text
/// u + v - a1 uv - a2 (u^2 v + u v^2) - 2 a3 (u^3 v + u v^3)
///       + (a1 a2 - 3 a3) u^2 v^2
/// ```
///
/// Coefficients are `[a1, a2, a3, a4, a6]`; `a4` and `a6` do not appear below
/// degree 5 but are part of the declared ring. The cap must be at most 4.
pub fn elliptic_tate_deg4(a: &[Scalar; 5], cap: u32) -> Result<FormalGroupLaw> {
    if cap > 4 {
        return Err(Error::InsufficientExpansion { requested: cap, available: 4 });
    }
    let params = a[0].params().clone();
    let mono =
        |eu: u16, ev: u16, c: Scalar| TruncSeries::monomial(&params, 2, cap, &[eu, ev], c);
    let a1 = &a[0];
    let a2 = &a[1];
    let a3 = &a[2];
    let mut f = TruncSeries::var(&params, 2, cap, 0).add(&TruncSeries::var(&params, 2, cap, 1));
    f = f.sub(&mono(1, 1, a1.clone()));
    f = f.sub(&mono(2, 1, a2.clone()));
    f = f.sub(&mono(1, 2, a2.clone()));
    f = f.sub(&mono(3, 1, a3.mul_int(2)));
    f = f.sub(&mono(1, 3, a3.mul_int(2)));
    f = f.add(&mono(2, 2, a1.mul(a2).sub(&a3.mul_int(3))));
    FormalGroupLaw::make_named(f, "elliptic_tate_deg4")
}

/// The logarithm series x + c[0] x^2 + c[1] x^3 + ... used by [`from_log`].
pub fn log_series(params: &ParamSet, coeffs: &[Scalar], cap: u32) -> TruncSeries {
    let mut l = TruncSeries::var(params, 1, cap, 0);
    for (k, c) in coeffs.iter().enumerate() {
        let d = k as u32 + 2;
        if d <= cap {
            l = l.add(&TruncSeries::monomial(params, 1, cap, &[d as u16], c.clone()));
        }
    }
    l
}

/// A catalog parameter: either a declared symbol or a pinned rational.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ParamValue {
    Symbol(String),
    Ratio(i64, i64),
}

impl ParamValue {
    fn symbol(&self) -> Option<&str> {
        match self {
            ParamValue::Symbol(s) => Some(s),
            ParamValue::Ratio(..) => None,
        }
    }

    fn resolve(&self, params: &ParamSet) -> Result<Scalar> {
        match self {
            ParamValue::Symbol(s) => Scalar::param_named(params, s),
            ParamValue::Ratio(p, q) => Scalar::from_ratio(params, *p, *q),
        }
    }
}

impl core::fmt::Display for ParamValue {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            ParamValue::Symbol(s) => write!(f, "{s}"),
            ParamValue::Ratio(p, 1) => write!(f, "{p}"),
            ParamValue::Ratio(p, q) => write!(f, "{p}/{q}"),
        }
    }
}

/// A buildable catalog entry, the wire form of the `--fgl` flag.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FglSpec {
    Additive,
    Multiplicative(ParamValue),
    Lorentz(ParamValue),
    /// Parameters `[a1, a2, a3, a4, a6]` of the Tate model.
    EllipticTate([ParamValue; 5]),
    /// Logarithm coefficients for x^2, x^3, ... in order.
    FromLog(Vec<ParamValue>),
}

impl FglSpec {
    fn param_values(&self) -> Vec<&ParamValue> {
        match self {
            FglSpec::Additive => Vec::new(),
            FglSpec::Multiplicative(b) | FglSpec::Lorentz(b) => alloc::vec![b],
            FglSpec::EllipticTate(a) => a.iter().collect(),
            FglSpec::FromLog(cs) => cs.iter().collect(),
        }
    }

    /// The declared symbols, in order of appearance.
    pub fn param_set(&self) -> Result<ParamSet> {
        let mut names: Vec<String> = Vec::new();
        for v in self.param_values() {
            if let Some(s) = v.symbol() {
                if !names.iter().any(|n| n == s) {
                    names.push(s.into());
                }
            }
        }
        ParamSet::new(names)
    }

    pub fn build(&self, cap: u32) -> Result<FormalGroupLaw> {
        let params = self.param_set()?;
        match self {
            FglSpec::Additive => Ok(additive(cap)),
            FglSpec::Multiplicative(b) => multiplicative(&b.resolve(&params)?, cap),
            FglSpec::Lorentz(b) => lorentz(&b.resolve(&params)?, cap),
            FglSpec::EllipticTate(a) => {
                let mut vals: Vec<Scalar> = Vec::with_capacity(5);
                for v in a {
                    vals.push(v.resolve(&params)?);
                }
                let arr: [Scalar; 5] = [
                    vals[0].clone(),
                    vals[1].clone(),
                    vals[2].clone(),
                    vals[3].clone(),
                    vals[4].clone(),
                ];
                elliptic_tate_deg4(&arr, cap)
            }
            FglSpec::FromLog(cs) => {
                let mut vals: Vec<Scalar> = Vec::with_capacity(cs.len());
                for v in cs {
                    vals.push(v.resolve(&params)?);
                }
                from_log(&log_series(&params, &vals, cap))
            }
        }
    }

    /// Canonical echo string, `name:params` with pinned values spelled out.
    pub fn desc(&self) -> String {
        let name = match self {
            FglSpec::Additive => "additive",
            FglSpec::Multiplicative(_) => "multiplicative",
            FglSpec::Lorentz(_) => "lorentz",
            FglSpec::EllipticTate(_) => "elliptic_tate_deg4",
            FglSpec::FromLog(_) => "from_log",
        };
        let vals = self.param_values();
        if vals.is_empty() {
            return name.into();
        }
        let parts: Vec<String> = match self {
            FglSpec::Multiplicative(b) | FglSpec::Lorentz(b) => {
                alloc::vec![format!("beta={b}")]
            }
            FglSpec::EllipticTate(a) => {
                let names = ["a1", "a2", "a3", "a4", "a6"];
                a.iter().zip(names).map(|(v, n)| format!("{n}={v}")).collect()
            }
            FglSpec::FromLog(cs) => {
                cs.iter().enumerate().map(|(k, v)| format!("c{}={v}", k + 2)).collect()
            }
            FglSpec::Additive => Vec::new(),
        };
        format!("{name}:{}", parts.join(","))
    }
}

/// The law with formal logarithm `l`: F(x,y) = exp(l(x) + l(y)) where exp is
/// the compositional inverse of `l`. The axioms hold by construction and are
/// re-validated.
pub fn from_log(l: &TruncSeries) -> Result<FormalGroupLaw> {
    if l.nvars() != 1 {
        return Err(Error::Dimension("logarithm must be univariate".into()));
    }
    let params = l.params().clone();
    if !l.eps().is_zero() || !l.coeff(&[1]).is_one() {
        return Err(Error::Composition("logarithm must be x + higher terms".into()));
    }
    let cap = l.cap();
    let e = l.comp_inverse()?;
    let x2 = TruncSeries::var(&params, 2, cap, 0);
    let y2 = TruncSeries::var(&params, 2, cap, 1);
    let lx = l.substitute(&[&x2])?;
    let ly = l.substitute(&[&y2])?;
    let f = e.substitute(&[&lx.add(&ly)])?;
    FormalGroupLaw::make_named(f, "from_log")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn additive_invariants() {
        let f = additive(6);
        assert_eq!(f.kappa_class(), KappaClass::Zero);
        assert!(f.kappa().is_zero());
        let one = TruncSeries::one(f.params(), 1, 6);
        assert!(f.mu().agrees_with(&one.truncated(5), 5));
        let x = TruncSeries::var(f.params(), 1, 6, 0);
        assert!(f.inv().agrees_with(&x.neg(), 6));
        assert!(!f.is_normal());
    }

    #[test]
    fn multiplicative_invariants() {
        let ps = ParamSet::new(["beta"]).unwrap();
        let beta = Scalar::param(&ps, 0);
        let f = multiplicative(&beta, 8).unwrap();
        assert_eq!(f.kappa_class(), KappaClass::Nonzero);
        assert_eq!(*f.a11(), beta.neg());
        // kappa is the constant beta
        assert_eq!(f.kappa().eps(), beta);
        assert_eq!(f.kappa().terms().count(), 1);
        // i(x) = -x - beta x^2 - beta^2 x^3 - ...
        for d in 1..=8u32 {
            assert_eq!(f.inv().coeff(&[d as u16]), beta.pow(d - 1).neg());
        }
        // mu = 1/(1 - beta x)
        for d in 0..=7u32 {
            assert_eq!(f.mu().coeff(&[d as u16]), beta.pow(d));
        }
    }

    #[test]
    fn lorentz_has_kappa_zero() {
        let ps = ParamSet::new(["beta"]).unwrap();
        let beta = Scalar::param(&ps, 0);
        let f = lorentz(&beta, 8).unwrap();
        assert_eq!(f.kappa_class(), KappaClass::Zero);
        let x = TruncSeries::var(&ps, 1, 8, 0);
        assert!(f.inv().agrees_with(&x.neg(), 8));
    }

    #[test]
    fn elliptic_fixture() {
        let ps = ParamSet::new(["a1", "a2", "a3", "a4", "a6"]).unwrap();
        let a: [Scalar; 5] = core::array::from_fn(|i| Scalar::param(&ps, i));
        let f = elliptic_tate_deg4(&a, 4).unwrap();
        let expect = a[0].mul(&a[1]).sub(&a[2].mul_int(3));
        assert_eq!(f.f().coeff(&[2, 2]), expect);
        assert_eq!(f.kappa_class(), KappaClass::Nonzero);
        assert!(matches!(elliptic_tate_deg4(&a, 5), Err(Error::InsufficientExpansion { .. })));
    }

    #[test]
    fn from_log_reproduces_known_laws() {
        let ps = ParamSet::empty();
        // l = x gives the additive law
        let l = log_series(&ps, &[], 6);
        let f = from_log(&l).unwrap();
        assert!(f.f().agrees_with(additive(6).f(), 6));

        // l = -log(1 - b x)/b = x + b x^2/2 + b^2 x^3/3 + ... gives the
        // multiplicative law
        let psb = ParamSet::new(["beta"]).unwrap();
        let beta = Scalar::param(&psb, 0);
        let cap = 8u32;
        let coeffs: Vec<Scalar> = (2..=cap)
            .map(|k| beta.pow(k - 1).mul(&Scalar::from_ratio(&psb, 1, k as i64).unwrap()))
            .collect();
        let l = log_series(&psb, &coeffs, cap);
        let f = from_log(&l).unwrap();
        let m = multiplicative(&beta, cap).unwrap();
        assert!(f.f().agrees_with(m.f(), cap));

        // symbolic l = x + c2 x^2 + c3 x^3 has a11 = -2 c2
        let psc = ParamSet::new(["c2", "c3"]).unwrap();
        let c2 = Scalar::param(&psc, 0);
        let c3 = Scalar::param(&psc, 1);
        let l = log_series(&psc, &[c2.clone(), c3], 6);
        let f = from_log(&l).unwrap();
        assert_eq!(*f.a11(), c2.mul_int(-2));
    }

    #[test]
    fn invalid_law_is_rejected() {
        let ps = ParamSet::empty();
        let x = TruncSeries::var(&ps, 2, 6, 0);
        let y = TruncSeries::var(&ps, 2, 6, 1);
        // x + y + x y^2 fails commutativity (and associativity)
        let f = x.add(&y).add(&x.mul(&y).mul(&y));
        match FormalGroupLaw::make(f) {
            Err(Error::InvalidFgl { axiom, .. }) => {
                assert!(axiom == "commutativity" || axiom == "associativity");
            }
            other => panic!("expected invalid law, got {other:?}"),
        }
    }

    #[test]
    fn normalization_of_multiplicative() {
        let ps = ParamSet::new(["beta"]).unwrap();
        let beta = Scalar::param(&ps, 0);
        let m = multiplicative(&beta, 10).unwrap();
        let (h, f, nm) = m.normalize().unwrap();
        // h = -beta x/(1 - beta x) = -beta x - beta^2 x^2 - ...
        for d in 1..=h.valid() {
            assert_eq!(h.coeff(&[d as u16]), beta.pow(d).neg());
        }
        assert!(!f.is_zero());
        // normalized law is x + y - xy on the nose
        let one = Scalar::one(&ps);
        assert_eq!(nm.f().coeff(&[1, 1]), one.neg());
        for (mono, _) in nm.f().terms() {
            assert!(crate::series::mono_total(mono) <= 2, "unexpected term {mono:?}");
        }
        assert!(nm.is_normal());
        // x + y - xy is already normal
        let pse = ParamSet::empty();
        let direct = multiplicative(&Scalar::one(&pse), 8).unwrap();
        assert!(direct.is_normal());
        // h(x) = i(x) for a normal law
        let (h2, _, _) = direct.normalize().unwrap();
        assert!(h2.agrees_with(&direct.inv().truncated(h2.valid()), h2.valid()));
        // additive cannot be normalized
        assert!(matches!(additive(6).normalize(), Err(Error::NormalizationUnavailable(_))));
    }
}
