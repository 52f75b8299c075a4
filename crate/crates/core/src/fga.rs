//! The formal group algebra of a root datum and the operators acting on it.
//!
//! Elements live in truncated series over one variable per lattice basis
//! vector plus one auxiliary rank-one variable (written `x_g` and kept fixed
//! by the Weyl action). The class `x_lambda` of an arbitrary lattice vector
//! is always evaluated through the group law: `x_{a+b} = F(x_a, x_b)` and
//! `x_{-a} = i(x_a)`, so non-basis classes are never stored symbolically.
//!
//! [`AlgebraCtx`] precomputes everything reused across checks: root classes,
//! their mu/kappa values, the substitution images of every Weyl element, and
//! the Hecke-type coefficient triple (theta, varpi, vartheta per root).

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::fgl::{FormalGroupLaw, KappaClass};
use crate::rootdata::{LatticeKind, RootDatum};
use crate::scalar::{ParamSet, Scalar};
use crate::series::TruncSeries;

/// An element of the formal group algebra: a truncated series in the basis
/// variables and the auxiliary rank-one variable.
pub type FgaElement = TruncSeries;

/// The coefficient triple attached to a law: `(vartheta, varpi)` is
/// `(2 x_g, 1)` when kappa vanishes and `(theta/kappa_alpha, mu(x_g))`
/// otherwise, with `theta = mu(x_g) - mu(x_{-g})`.
#[derive(Clone, Debug)]
pub struct HeckeCoeffs {
    pub kappa_class: KappaClass,
    /// theta, a series in the auxiliary variable only.
    pub theta: TruncSeries,
    /// varpi.
    pub varpi: TruncSeries,
    /// vartheta per root index.
    pub vartheta: Vec<TruncSeries>,
}

/// Context for computations in one formal group algebra.
pub struct AlgebraCtx {
    datum: RootDatum,
    fgl: FormalGroupLaw,
    params: ParamSet,
    nvars: usize,
    cap: u32,
    var_names: Vec<String>,
    x_vars: Vec<TruncSeries>,
    x_root: Vec<TruncSeries>,
    mu_pos: Vec<TruncSeries>,
    /// unit u with 1/x_{-rho} = u * (1/x_rho), per positive root.
    rewrite_unit: Vec<TruncSeries>,
    kappa_root: Vec<TruncSeries>,
    inv_kappa_root: Vec<TruncSeries>,
    weyl_images: Vec<Vec<TruncSeries>>,
    coeffs: HeckeCoeffs,
}

impl AlgebraCtx {
    pub fn new(datum: RootDatum, fgl: FormalGroupLaw) -> Result<AlgebraCtx> {
        let params = fgl.params().clone();
        let rank = datum.rank();
        let nvars = rank + 1;
        let cap = fgl.cap();
        let mut var_names: Vec<String> = (0..rank)
            .map(|i| match datum.lattice() {
                LatticeKind::SimplyConnected => format!("x_w{}", i + 1),
                LatticeKind::Adjoint => format!("x_r{}", i + 1),
            })
            .collect();
        var_names.push("x_g".into());
        let x_vars: Vec<TruncSeries> =
            (0..nvars).map(|i| TruncSeries::var(&params, nvars, cap, i)).collect();

        // Memoized folding of lattice vectors into classes.
        let mut memo: BTreeMap<Vec<i64>, TruncSeries> = BTreeMap::new();
        let mut x_root = Vec::with_capacity(datum.roots().len());
        for r in datum.roots() {
            let mut v = r.vec.clone();
            v.push(0);
            let s = fold_class(&fgl, &params, nvars, cap, &x_vars, &mut memo, &v)?;
            x_root.push(s);
        }
        let npos = datum.num_positive();
        let mut mu_pos = Vec::with_capacity(npos);
        let mut rewrite_unit = Vec::with_capacity(npos);
        for x in x_root.iter().take(npos) {
            let mu = fgl.mu_of(x)?;
            rewrite_unit.push(mu.invert_unit()?.neg());
            mu_pos.push(mu);
        }
        let mut kappa_root = Vec::with_capacity(datum.roots().len());
        let mut inv_kappa_root = Vec::new();
        for x in &x_root {
            kappa_root.push(fgl.kappa_of(x)?);
        }
        if fgl.kappa_class() == KappaClass::Nonzero {
            for k in &kappa_root {
                inv_kappa_root.push(k.invert_unit()?);
            }
        }

        let mut weyl_images = Vec::with_capacity(datum.num_elements());
        for w in datum.elements() {
            let mut images = Vec::with_capacity(nvars);
            for i in 0..rank {
                let mut e = alloc::vec![0i64; rank];
                e[i] = 1;
                let mut img = w.apply(&e);
                img.push(0);
                images.push(fold_class(&fgl, &params, nvars, cap, &x_vars, &mut memo, &img)?);
            }
            images.push(x_vars[rank].clone());
            weyl_images.push(images);
        }

        // Hecke-type coefficients.
        let x_g = &x_vars[rank];
        let mu_g = fgl.mu_of(x_g)?;
        let x_neg_g = fgl.f_neg(x_g)?;
        let mu_neg_g = fgl.mu_of(&x_neg_g)?;
        let theta = mu_g.sub(&mu_neg_g);
        let coeffs = match fgl.kappa_class() {
            KappaClass::Zero => {
                let two_xg = x_g.scalar_mul(&Scalar::from_int(&params, 2));
                HeckeCoeffs {
                    kappa_class: KappaClass::Zero,
                    theta,
                    varpi: TruncSeries::one(&params, nvars, cap),
                    vartheta: alloc::vec![two_xg; datum.roots().len()],
                }
            }
            KappaClass::Nonzero => {
                let vartheta: Vec<TruncSeries> =
                    inv_kappa_root.iter().map(|ik| theta.mul(ik)).collect();
                HeckeCoeffs {
                    kappa_class: KappaClass::Nonzero,
                    theta,
                    varpi: mu_g,
                    vartheta,
                }
            }
        };

        Ok(AlgebraCtx {
            datum,
            fgl,
            params,
            nvars,
            cap,
            var_names,
            x_vars,
            x_root,
            mu_pos,
            rewrite_unit,
            kappa_root,
            inv_kappa_root,
            weyl_images,
            coeffs,
        })
    }

    pub fn datum(&self) -> &RootDatum {
        &self.datum
    }

    pub fn fgl(&self) -> &FormalGroupLaw {
        &self.fgl
    }

    pub fn params(&self) -> &ParamSet {
        &self.params
    }

    pub fn cap(&self) -> u32 {
        self.cap
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn rank(&self) -> usize {
        self.datum.rank()
    }

    pub fn var_names(&self) -> Vec<&str> {
        self.var_names.iter().map(|s| s.as_str()).collect()
    }

    pub fn zero(&self) -> FgaElement {
        TruncSeries::zero(&self.params, self.nvars, self.cap)
    }

    pub fn one(&self) -> FgaElement {
        TruncSeries::one(&self.params, self.nvars, self.cap)
    }

    /// The basis variable series (the auxiliary variable is index `rank`).
    pub fn x_var(&self, i: usize) -> &FgaElement {
        &self.x_vars[i]
    }

    pub fn x_gamma(&self) -> &FgaElement {
        &self.x_vars[self.nvars - 1]
    }

    /// The class of a root.
    pub fn x_root(&self, root: usize) -> &FgaElement {
        &self.x_root[root]
    }

    /// mu(x_rho) for a positive root.
    pub fn mu_root(&self, root: usize) -> &TruncSeries {
        &self.mu_pos[root]
    }

    /// The unit u with 1/x_{-rho} = u/x_rho, for a positive root.
    pub fn rewrite_unit(&self, root: usize) -> &TruncSeries {
        &self.rewrite_unit[root]
    }

    /// kappa(x_rho); constant term is minus the xy-coefficient of the law.
    pub fn kappa_alpha(&self, root: usize) -> &FgaElement {
        &self.kappa_root[root]
    }

    /// 1/kappa(x_rho); only available when kappa != 0.
    pub fn inv_kappa_alpha(&self, root: usize) -> &TruncSeries {
        &self.inv_kappa_root[root]
    }

    pub fn coeffs(&self) -> &HeckeCoeffs {
        &self.coeffs
    }

    /// vartheta attached to a root.
    pub fn vartheta(&self, root: usize) -> &TruncSeries {
        &self.coeffs.vartheta[root]
    }

    /// The class of an arbitrary lattice vector (length `rank`, or `rank+1`
    /// including an auxiliary coordinate). Folding order does not matter by
    /// associativity of the law.
    pub fn x_of(&self, lambda: &[i64]) -> Result<FgaElement> {
        let mut v = lambda.to_vec();
        match v.len() {
            l if l == self.nvars => {}
            l if l == self.rank() => v.push(0),
            _ => return Err(Error::Dimension("lattice vector length mismatch".into())),
        }
        let mut memo = BTreeMap::new();
        fold_class(&self.fgl, &self.params, self.nvars, self.cap, &self.x_vars, &mut memo, &v)
    }

    /// Action of a Weyl element (by index) on an element.
    pub fn weyl_act(&self, w: usize, u: &FgaElement) -> Result<FgaElement> {
        if self.datum.element(w).is_identity() {
            return Ok(u.clone());
        }
        let refs: Vec<&TruncSeries> = self.weyl_images[w].iter().collect();
        u.substitute(&refs)
    }

    /// Action of the reflection attached to a root.
    pub fn refl_act(&self, root: usize, u: &FgaElement) -> Result<FgaElement> {
        self.weyl_act(self.datum.reflection(root), u)
    }

    /// The Demazure-type operator of a root: `(u - s(u)) / x_root`, losing
    /// one degree of validity.
    pub fn demazure(&self, root: usize, u: &FgaElement) -> Result<FgaElement> {
        let su = self.refl_act(root, u)?;
        u.sub(&su).div_exact(&self.x_root[root])
    }

    /// Composition along a word of simple-generator indices (leftmost
    /// operator applied last, matching operator composition).
    pub fn demazure_word(&self, word: &[u8], u: &FgaElement) -> Result<FgaElement> {
        let mut acc = u.clone();
        for &g in word.iter().rev() {
            acc = self.demazure(self.datum.simple_root(g as usize), &acc)?;
        }
        Ok(acc)
    }

    /// tau of a root: `vartheta * Demazure(u) + varpi * s(u)`.
    pub fn tau(&self, root: usize, u: &FgaElement) -> Result<FgaElement> {
        let d = self.demazure(root, u)?;
        let su = self.refl_act(root, u)?;
        Ok(self.coeffs.vartheta[root].mul(&d).add(&self.coeffs.varpi.mul(&su)))
    }

    pub fn tau_word(&self, word: &[u8], u: &FgaElement) -> Result<FgaElement> {
        let mut acc = u.clone();
        for &g in word.iter().rev() {
            acc = self.tau(self.datum.simple_root(g as usize), &acc)?;
        }
        Ok(acc)
    }

    /// Sets every lattice variable to zero, keeping the auxiliary variable.
    pub fn eps_lambda(&self, u: &FgaElement) -> FgaElement {
        let mut out = self.zero().truncated(u.valid());
        for (e, c) in u.terms() {
            if e.iter().take(self.rank()).all(|&x| x == 0) {
                let exps: Vec<u16> = e.iter().copied().collect();
                out = out.add(
                    &TruncSeries::monomial(&self.params, self.nvars, self.cap, &exps, c.clone())
                        .truncated(u.valid()),
                );
            }
        }
        out
    }

    /// Full augmentation: the constant term.
    pub fn eps_full(&self, u: &FgaElement) -> Scalar {
        u.eps()
    }

    /// Degree of `u` in the augmentation filtration: the least total degree
    /// in the lattice variables over stored terms. `None` when `u` vanishes
    /// through its validity degree.
    pub fn filtration_degree(&self, u: &FgaElement) -> Option<u32> {
        u.terms().map(|(e, _)| e.iter().take(self.rank()).map(|&x| x as u32).sum()).min()
    }

    /// The part of `u` of lattice-degree exactly `k` (auxiliary degrees kept).
    pub fn lambda_component(&self, u: &FgaElement, k: u32) -> FgaElement {
        let mut out = self.zero().truncated(u.valid());
        for (e, c) in u.terms() {
            let lam: u32 = e.iter().take(self.rank()).map(|&x| x as u32).sum();
            if lam == k {
                let exps: Vec<u16> = e.iter().copied().collect();
                out = out.add(
                    &TruncSeries::monomial(&self.params, self.nvars, self.cap, &exps, c.clone())
                        .truncated(u.valid()),
                );
            }
        }
        out
    }

    /// The generalized kappa of a pair of lattice vectors (`lam`, `nu`, and
    /// `lam + nu` all nonzero):
    ///
    /// ```text
    /// kappa_{lam,nu} = 1/(x_{lam+nu} x_nu) - 1/(x_{lam+nu} x_{-lam})
    ///                - 1/(x_lam x_nu)
    /// ```
    ///
    /// With `primed`, every `1/x_rho` factor gains a matching `1/kappa`
    /// factor following the same index pattern (which pairs `kappa_lam` with
    /// `x_{-lam}` in the middle term). The localized value is certified
    /// pole-free and returned as a plain element; a remaining pole is a
    /// theorem violation, not a silent failure.
    pub fn kappa_pair(&self, lam: &[i64], nu: &[i64], primed: bool) -> Result<FgaElement> {
        if primed && self.fgl.kappa_class() != KappaClass::Nonzero {
            return Err(Error::UnsupportedRing("primed kappa requires kappa != 0".into()));
        }
        if lam.len() != self.rank() || nu.len() != self.rank() {
            return Err(Error::Dimension("kappa pair expects lattice vectors".into()));
        }
        let sum: Vec<i64> = lam.iter().zip(nu).map(|(a, b)| a + b).collect();
        let neg_lam: Vec<i64> = lam.iter().map(|x| -x).collect();
        if lam.iter().all(|&x| x == 0) || nu.iter().all(|&x| x == 0) || sum.iter().all(|&x| x == 0)
        {
            return Err(Error::UnsupportedDatum("kappa pair needs nonzero classes".into()));
        }

        // Sign-canonical representative: first nonzero coordinate positive.
        let canon = |v: &[i64]| -> (Vec<i64>, bool) {
            let flip = v.iter().find(|&&x| x != 0).map(|&x| x < 0).unwrap_or(false);
            if flip {
                (v.iter().map(|x| -x).collect(), true)
            } else {
                (v.to_vec(), false)
            }
        };
        let mut x_memo: BTreeMap<Vec<i64>, TruncSeries> = BTreeMap::new();
        let mut x_class = |v: &[i64]| -> Result<TruncSeries> {
            if let Some(s) = x_memo.get(v) {
                return Ok(s.clone());
            }
            let s = self.x_of(v)?;
            x_memo.insert(v.to_vec(), s.clone());
            Ok(s)
        };

        // Each term is unit / (x of two canonical classes). Flipped factors
        // rewrite 1/x_{-c} = -(1/mu(x_c)) (1/x_c); primed factors contribute
        // 1/kappa(x_v) at the vector as written.
        let mut term = |a: &[i64], b: &[i64], kappas: &[&[i64]]| -> Result<(TruncSeries, Vec<Vec<i64>>)> {
            let mut unit = self.one();
            let mut dens = Vec::new();
            for v in [a, b] {
                let (c, flipped) = canon(v);
                let xc = x_class(&c)?;
                if flipped {
                    unit = unit.mul(&self.fgl.mu_of(&xc)?.invert_unit()?.neg());
                }
                dens.push(c);
            }
            for v in kappas {
                let xv = x_class(v)?;
                unit = unit.mul(&self.fgl.kappa_of(&xv)?.invert_unit()?);
            }
            dens.sort_unstable();
            Ok((unit, dens))
        };
        let empty: [&[i64]; 0] = [];
        let (u1, d1) = if primed {
            term(&sum, nu, &[&sum, nu])?
        } else {
            term(&sum, nu, &empty)?
        };
        let (u2, d2) = if primed {
            term(&sum, &neg_lam, &[&sum, lam])?
        } else {
            term(&sum, &neg_lam, &empty)?
        };
        let (u3, d3) = if primed {
            term(lam, nu, &[lam, nu])?
        } else {
            term(lam, nu, &empty)?
        };

        // Common denominator: multiset union over canonical classes.
        let mut all: BTreeMap<Vec<i64>, u32> = BTreeMap::new();
        for d in [&d1, &d2, &d3] {
            let mut counts: BTreeMap<Vec<i64>, u32> = BTreeMap::new();
            for r in d.iter() {
                *counts.entry(r.clone()).or_insert(0) += 1;
            }
            for (r, c) in counts {
                let e = all.entry(r).or_insert(0);
                *e = (*e).max(c);
            }
        }
        let mut class_of: BTreeMap<Vec<i64>, TruncSeries> = BTreeMap::new();
        for v in all.keys() {
            class_of.insert(v.clone(), x_class(v)?);
        }
        let complete = |unit: TruncSeries, dens: &[Vec<i64>]| -> TruncSeries {
            let mut counts: BTreeMap<&Vec<i64>, u32> = BTreeMap::new();
            for r in dens {
                *counts.entry(r).or_insert(0) += 1;
            }
            let mut s = unit;
            for (r, &need) in &all {
                let have = counts.get(r).copied().unwrap_or(0);
                for _ in have..need {
                    s = s.mul(&class_of[r]);
                }
            }
            s
        };
        let mut num = complete(u1, &d1);
        num = num.sub(&complete(u2, &d2));
        num = num.sub(&complete(u3, &d3));

        // Pole-freeness: the denominator must divide out entirely.
        for (r, &e) in &all {
            for _ in 0..e {
                num = num.div_exact(&class_of[r]).map_err(|err| Error::TheoremViolation {
                    statement: if primed {
                        "kappa-prime-ring".into()
                    } else {
                        "kappa-ij-ring".into()
                    },
                    detail: format!("pole at the class of {r:?} survives: {err}"),
                })?;
            }
        }
        Ok(num)
    }

    /// Deterministic pseudo-random element for property-style checks: a
    /// small-degree series with small rational coefficients.
    pub fn sample_element(&self, rng: &mut impl rand_core::RngCore, max_deg: u32) -> FgaElement {
        let mut out = self.zero();
        let monomials = enumerate_monomials(self.nvars, max_deg.min(self.cap));
        for e in monomials {
            // keep it sparse
            if rng.next_u32() % 3 != 0 {
                continue;
            }
            let p = (rng.next_u32() % 11) as i64 - 5;
            if p == 0 {
                continue;
            }
            let q = (rng.next_u32() % 3) as i64 + 1;
            let c = Scalar::from_ratio(&self.params, p, q).expect("q nonzero");
            out = out.add(&TruncSeries::monomial(&self.params, self.nvars, self.cap, &e, c));
        }
        out
    }
}

/// All exponent vectors of total degree <= max in `n` variables.
fn enumerate_monomials(n: usize, max: u32) -> Vec<Vec<u16>> {
    fn rec(out: &mut Vec<Vec<u16>>, cur: &mut Vec<u16>, i: usize, left: u32) {
        if i == cur.len() {
            out.push(cur.clone());
            return;
        }
        for d in 0..=left {
            cur[i] = d as u16;
            rec(out, cur, i + 1, left - d);
        }
        cur[i] = 0;
    }
    let mut out = Vec::new();
    let mut cur = alloc::vec![0u16; n];
    rec(&mut out, &mut cur, 0, max);
    out.sort();
    out
}

/// Exponent vectors of total degree exactly `deg` in `n` variables.
fn homogeneous_monomials(n: usize, deg: u32) -> Vec<Vec<u16>> {
    enumerate_monomials(n, deg)
        .into_iter()
        .filter(|e| e.iter().map(|&x| x as u32).sum::<u32>() == deg)
        .collect()
}

fn fold_class(
    fgl: &FormalGroupLaw,
    params: &ParamSet,
    nvars: usize,
    cap: u32,
    x_vars: &[TruncSeries],
    memo: &mut BTreeMap<Vec<i64>, TruncSeries>,
    lambda: &[i64],
) -> Result<TruncSeries> {
    if let Some(s) = memo.get(lambda) {
        return Ok(s.clone());
    }
    let mut acc = TruncSeries::zero(params, nvars, cap);
    let mut first = true;
    for (i, &m) in lambda.iter().enumerate() {
        if m == 0 {
            continue;
        }
        let piece = if m > 0 { x_vars[i].clone() } else { fgl.f_neg(&x_vars[i])? };
        for _ in 0..m.unsigned_abs() {
            if first {
                acc = piece.clone();
                first = false;
            } else {
                acc = fgl.f_add(&acc, &piece)?;
            }
        }
    }
    memo.insert(lambda.to_vec(), acc.clone());
    Ok(acc)
}

/// Solved witness for the top-filtration element used by the Gram check.
#[derive(Clone, Debug)]
pub struct U0Data {
    /// The solved element: homogeneous of lattice-degree N.
    pub u0: FgaElement,
    /// The chosen reduced word of the longest element.
    pub word: Vec<u8>,
    /// Sequences checked, with the augmentation value of Demazure along each.
    pub checked: Vec<(Vec<u8>, Scalar)>,
}

/// Solves for u0: a homogeneous degree-N combination of basis monomials with
/// `eps(Demazure_I0(u0)) = 1` for the chosen reduced word of the longest
/// element and `eps(Demazure_I(u0)) = 0` for every other sequence of length
/// at most N. Certifiable only for simply connected type-A data, where the
/// torsion index is 1.
pub fn find_u0(ctx: &AlgebraCtx) -> Result<U0Data> {
    let datum = ctx.datum();
    let label = datum.label();
    let type_a = label.len() == 2 && label.starts_with('A');
    if datum.lattice() != LatticeKind::SimplyConnected || !type_a {
        return Err(Error::UnsupportedDatum(
            "torsion index 1 is certifiable only for simply connected type A".into(),
        ));
    }
    let n = datum.rank();
    let big_n = datum.element(datum.longest()).length;
    if ctx.cap() < big_n + 1 {
        return Err(Error::PrecisionUnderflow {
            needed: big_n + 1,
            available: ctx.cap(),
            detail: "u0 solve needs cap >= N + 1".into(),
        });
    }

    // Unknowns: homogeneous lattice monomials of degree N.
    let monos = homogeneous_monomials(n, big_n);
    let mono_series: Vec<TruncSeries> = monos
        .iter()
        .map(|e| {
            let mut full = e.clone();
            full.push(0);
            TruncSeries::monomial(
                ctx.params(),
                ctx.nvars(),
                ctx.cap(),
                &full,
                Scalar::one(ctx.params()),
            )
        })
        .collect();

    // All generator sequences of length 1..=N.
    let mut seqs: Vec<Vec<u8>> = Vec::new();
    let mut frontier: Vec<Vec<u8>> = alloc::vec![Vec::new()];
    for _ in 0..big_n {
        let mut next = Vec::new();
        for s in &frontier {
            for g in 0..n as u8 {
                let mut t = s.clone();
                t.push(g);
                next.push(t);
            }
        }
        seqs.extend(next.iter().cloned());
        frontier = next;
    }

    let one = Scalar::one(ctx.params());
    let zero = Scalar::zero(ctx.params());
    let mut rows: Vec<Vec<Scalar>> = Vec::new();
    let mut rhs: Vec<Scalar> = Vec::new();
    for seq in &seqs {
        let mut row = Vec::with_capacity(monos.len());
        for m in &mono_series {
            let d = ctx.demazure_word(seq, m)?;
            row.push(ctx.eps_full(&d));
        }
        let reduced =
            seq.len() as u32 == big_n && datum.eval_word(seq) == datum.longest();
        rows.push(row);
        rhs.push(if reduced { one.clone() } else { zero.clone() });
    }

    let solution = solve_linear(ctx.params(), &rows, &rhs).ok_or_else(|| {
        Error::UnsupportedDatum("no u0 solves the augmentation constraints".into())
    })?;
    let mut u0 = ctx.zero();
    for (c, m) in solution.iter().zip(&mono_series) {
        u0 = u0.add(&m.scalar_mul(c));
    }

    // Record the verified sequence values.
    let mut checked = Vec::new();
    for seq in &seqs {
        let val = ctx.eps_full(&ctx.demazure_word(seq, &u0)?);
        checked.push((seq.clone(), val));
    }
    Ok(U0Data { u0, word: datum.element(datum.longest()).word.clone(), checked })
}

/// Exact Gaussian elimination; returns any solution of `rows * x = rhs`
/// (free variables set to zero), or `None` when inconsistent.
fn solve_linear(params: &ParamSet, rows: &[Vec<Scalar>], rhs: &[Scalar]) -> Option<Vec<Scalar>> {
    let nrows = rows.len();
    let ncols = rows.first().map(|r| r.len()).unwrap_or(0);
    let mut a: Vec<Vec<Scalar>> = rows.to_vec();
    let mut b: Vec<Scalar> = rhs.to_vec();
    let mut pivot_of_col: Vec<Option<usize>> = alloc::vec![None; ncols];
    let mut row = 0;
    for col in 0..ncols {
        let Some(p) = (row..nrows).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        a.swap(row, p);
        b.swap(row, p);
        let inv = a[row][col].inv().ok()?;
        for c in col..ncols {
            a[row][c] = a[row][c].mul(&inv);
        }
        b[row] = b[row].mul(&inv);
        for r in 0..nrows {
            if r != row && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                for c in col..ncols {
                    let t = a[row][c].mul(&f);
                    a[r][c] = a[r][c].sub(&t);
                }
                let t = b[row].mul(&f);
                b[r] = b[r].sub(&t);
            }
        }
        pivot_of_col[col] = Some(row);
        row += 1;
        if row == nrows {
            break;
        }
    }
    let mut x = alloc::vec![Scalar::zero(params); ncols];
    for (col, pr) in pivot_of_col.iter().enumerate() {
        if let Some(r) = pr {
            x[col] = b[*r].clone();
        }
    }
    // Full residual check covers inconsistent systems as well.
    for (r, rr) in rows.iter().enumerate() {
        let mut acc = Scalar::zero(params);
        for (c, coef) in rr.iter().enumerate() {
            acc = acc.add(&coef.mul(&x[c]));
        }
        if acc != rhs[r] {
            return None;
        }
    }
    Some(x)
}

/// The tau Gram matrix and its invertibility certificate.
#[derive(Clone, Debug)]
pub struct GramData {
    /// Weyl indices in enumeration order; rows and columns of `entries`.
    pub order: Vec<usize>,
    /// entries[v][w] = tau_{I_v} tau_{I_w} (u0).
    pub entries: Vec<Vec<FgaElement>>,
    /// Lattice augmentation of each entry (series in the auxiliary variable).
    pub eps_entries: Vec<Vec<TruncSeries>>,
    /// eps(vartheta), a series in the auxiliary variable.
    pub vartheta_eps: TruncSeries,
    /// Lowest coefficient of the triangular determinant (a unit).
    pub det_lowest: Scalar,
    /// Auxiliary-variable order carried by the determinant's lowest term.
    pub det_order: u32,
}

/// Computes the Gram matrix `tau_{I_v} tau_{I_w}(u0)` over all pairs and
/// certifies invertibility of its lattice augmentation: with rows ordered by
/// increasing length and columns paired as `w_k = v_k^{-1} w_0`, the matrix
/// is lower triangular with `eps(vartheta)^N` on the diagonal, so its
/// determinant has an invertible lowest coefficient.
pub fn tau_gram(ctx: &AlgebraCtx, u0: &U0Data) -> Result<GramData> {
    let datum = ctx.datum();
    let big_n = datum.element(datum.longest()).length;
    if ctx.cap() < 2 * big_n + 1 {
        return Err(Error::PrecisionUnderflow {
            needed: 2 * big_n + 1,
            available: ctx.cap(),
            detail: "gram matrix needs cap >= 2N + 1".into(),
        });
    }
    let nw = datum.num_elements();
    let inner: Vec<FgaElement> =
        (0..nw).map(|w| ctx.tau_word(&datum.element(w).word, &u0.u0)).collect::<Result<_>>()?;
    let mut entries = Vec::with_capacity(nw);
    let mut eps_entries = Vec::with_capacity(nw);
    for v in 0..nw {
        let mut row = Vec::with_capacity(nw);
        let mut eps_row = Vec::with_capacity(nw);
        for iw in inner.iter() {
            let m = ctx.tau_word(&datum.element(v).word, iw)?;
            eps_row.push(ctx.eps_lambda(&m));
            row.push(m);
        }
        entries.push(row);
        eps_entries.push(eps_row);
    }

    let vartheta_eps = ctx.eps_lambda(ctx.vartheta(datum.simple_root(0)));

    // Entries with combined length below N must have vanishing augmentation.
    for v in 0..nw {
        for w in 0..nw {
            let lv = datum.element(v).length;
            let lw = datum.element(w).length;
            if lv + lw < big_n && !eps_entries[v][w].is_zero() {
                return Err(Error::TheoremViolation {
                    statement: "gram".into(),
                    detail: format!(
                        "eps entry ({v},{w}) with combined length below N is nonzero"
                    ),
                });
            }
        }
    }

    // Triangularity in the paired order.
    let mut by_len: Vec<usize> = (0..nw).collect();
    by_len.sort_by_key(|&v| (datum.element(v).length, v));
    let cols: Vec<usize> =
        by_len.iter().map(|&v| datum.mul(datum.inv(v), datum.longest())).collect();
    let expected_diag = {
        let mut p = ctx.one();
        for _ in 0..big_n {
            p = p.mul(&vartheta_eps);
        }
        p
    };
    let mut det_lowest = Scalar::one(ctx.params());
    let mut det_order = 0u32;
    for (k, &v) in by_len.iter().enumerate() {
        for (j, &wcol) in cols.iter().enumerate() {
            let e = &eps_entries[v][wcol];
            if j > k && !e.is_zero() {
                return Err(Error::TheoremViolation {
                    statement: "gram".into(),
                    detail: format!("entry above the diagonal is nonzero (row {v}, col {wcol})"),
                });
            }
            if j == k {
                let d = e.valid().min(expected_diag.valid());
                if !e.agrees_with(&expected_diag.truncated(d), d) {
                    return Err(Error::TheoremViolation {
                        statement: "gram".into(),
                        detail: format!("diagonal entry (row {v}) differs from eps(vartheta)^N"),
                    });
                }
                let ord = e.order().ok_or_else(|| Error::TheoremViolation {
                    statement: "gram".into(),
                    detail: format!("diagonal entry (row {v}) vanishes"),
                })?;
                let mut full = alloc::vec![0u16; ctx.nvars() - 1];
                full.push(ord as u16);
                let c = e.coeff(&full);
                if !c.is_unit() {
                    return Err(Error::TheoremViolation {
                        statement: "gram".into(),
                        detail: "diagonal lowest coefficient is not a unit".into(),
                    });
                }
                det_lowest = det_lowest.mul(&c);
                det_order += ord;
            }
        }
    }
    Ok(GramData {
        order: (0..nw).collect(),
        entries,
        eps_entries,
        vartheta_eps,
        det_lowest,
        det_order,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fgl;
    use rand_core::SeedableRng;

    fn ctx_a1_additive(cap: u32) -> AlgebraCtx {
        let d = RootDatum::build("A1", LatticeKind::SimplyConnected).unwrap();
        AlgebraCtx::new(d, fgl::additive(cap)).unwrap()
    }

    fn ctx_a2(fgl: FormalGroupLaw) -> AlgebraCtx {
        let d = RootDatum::build("A2", LatticeKind::SimplyConnected).unwrap();
        AlgebraCtx::new(d, fgl).unwrap()
    }

    #[test]
    fn x_of_additive_is_linear() {
        let ctx = ctx_a2(fgl::additive(6));
        let a1 = ctx.datum().simple_root(0);
        let xa = ctx.x_root(a1).clone();
        // alpha_1 = 2w_1 - w_2 in the weight basis
        let direct =
            ctx.x_var(0).scalar_mul(&Scalar::from_int(ctx.params(), 2)).sub(ctx.x_var(1));
        assert!(xa.agrees_with(&direct, 6));
        // x_0 = 0
        assert!(ctx.x_of(&[0, 0]).unwrap().is_zero());
    }

    #[test]
    fn x_of_multiplicative_negative_weight() {
        let ps = ParamSet::new(["beta"]).unwrap();
        let beta = Scalar::param(&ps, 0);
        let d = RootDatum::build("A1", LatticeKind::SimplyConnected).unwrap();
        let ctx = AlgebraCtx::new(d, fgl::multiplicative(&beta, 6).unwrap()).unwrap();
        let x_neg = ctx.x_of(&[-1]).unwrap();
        // -x - b x^2 - b^2 x^3 - ...
        for k in 1..=6u32 {
            let e = [k as u16, 0];
            assert_eq!(x_neg.coeff(&e), beta.pow(k - 1).neg());
        }
    }

    #[test]
    fn weyl_act_examples() {
        let ctx = ctx_a1_additive(6);
        let s1 = ctx.datum().reflection(ctx.datum().simple_root(0));
        // s(w) = -w so s(x_w) = x_{-w} = -x_w for the additive law
        let xw = ctx.x_var(0).clone();
        let img = ctx.weyl_act(s1, &xw).unwrap();
        assert!(img.agrees_with(&xw.neg(), 6));
        // involution on a random element
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        let u = ctx.sample_element(&mut rng, 3);
        let s2u = ctx.weyl_act(s1, &ctx.weyl_act(s1, &u).unwrap()).unwrap();
        assert!(s2u.agrees_with(&u.truncated(s2u.valid()), s2u.valid()));
        // the auxiliary variable is fixed
        let g = ctx.x_gamma().clone();
        assert!(ctx.weyl_act(s1, &g).unwrap().agrees_with(&g, 6));
    }

    #[test]
    fn demazure_basics() {
        let ctx = ctx_a1_additive(6);
        let a = ctx.datum().simple_root(0);
        // Demazure(1) = 0
        let d1 = ctx.demazure(a, &ctx.one()).unwrap();
        assert!(d1.is_zero());
        // Demazure(x_alpha) = 2 for the additive law on A1
        let da = ctx.demazure(a, ctx.x_root(a)).unwrap();
        assert!(da.agrees_with(
            &ctx.one().scalar_mul(&Scalar::from_int(ctx.params(), 2)).truncated(da.valid()),
            da.valid()
        ));
        // Demazure(x_w) = 1 (alpha = 2w)
        let dw = ctx.demazure(a, ctx.x_var(0)).unwrap();
        assert!(dw.agrees_with(&ctx.one().truncated(dw.valid()), dw.valid()));
    }

    #[test]
    fn demazure_leibniz_and_square() {
        let ps = ParamSet::new(["beta"]).unwrap();
        let beta = Scalar::param(&ps, 0);
        let ctx = ctx_a2(fgl::multiplicative(&beta, 6).unwrap());
        let a = ctx.datum().simple_root(0);
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        let u = ctx.sample_element(&mut rng, 2);
        let v = ctx.sample_element(&mut rng, 2);
        // Leibniz
        let lhs = ctx.demazure(a, &u.mul(&v)).unwrap();
        let rhs = ctx
            .demazure(a, &u)
            .unwrap()
            .mul(&v)
            .add(&ctx.refl_act(a, &u).unwrap().mul(&ctx.demazure(a, &v).unwrap()));
        let d = lhs.valid().min(rhs.valid());
        assert!(lhs.agrees_with(&rhs.truncated(d), d));
        // Demazure^2 = kappa_alpha Demazure
        let d2 = ctx.demazure(a, &ctx.demazure(a, &u).unwrap()).unwrap();
        let kd = ctx.kappa_alpha(a).mul(&ctx.demazure(a, &u).unwrap());
        let dd = d2.valid().min(kd.valid());
        assert!(d2.agrees_with(&kd.truncated(dd), dd));
    }

    #[test]
    fn kappa_pair_vanishes_for_additive_and_multiplicative() {
        let ctx = ctx_a2(fgl::additive(6));
        let a1 = ctx.datum().roots()[ctx.datum().simple_root(0)].vec.clone();
        let a2 = ctx.datum().roots()[ctx.datum().simple_root(1)].vec.clone();
        let k = ctx.kappa_pair(&a1, &a2, false).unwrap();
        assert!(k.is_zero());

        let ps = ParamSet::new(["beta"]).unwrap();
        let beta = Scalar::param(&ps, 0);
        let ctxm = ctx_a2(fgl::multiplicative(&beta, 6).unwrap());
        let k = ctxm.kappa_pair(&a1, &a2, false).unwrap();
        assert!(k.is_zero());
    }

    #[test]
    fn tau_of_one_is_mu() {
        let ps = ParamSet::new(["beta"]).unwrap();
        let beta = Scalar::param(&ps, 0);
        let ctx = ctx_a2(fgl::multiplicative(&beta, 6).unwrap());
        let a = ctx.datum().simple_root(0);
        let t1 = ctx.tau(a, &ctx.one()).unwrap();
        let d = t1.valid().min(ctx.coeffs().varpi.valid());
        assert!(t1.agrees_with(&ctx.coeffs().varpi.truncated(d), d));
    }

    #[test]
    fn u0_on_a1_and_a2() {
        // A1 sc additive: u0 = x_w
        let ctx = ctx_a1_additive(4);
        let u0 = find_u0(&ctx).unwrap();
        assert!(u0.u0.agrees_with(ctx.x_var(0), 4));
        for (seq, val) in &u0.checked {
            if seq.len() == 1 {
                assert!(val.is_one());
            }
        }
        // A2 sc additive at cap 2N+1 = 7
        let ctx = ctx_a2(fgl::additive(7));
        let u0 = find_u0(&ctx).unwrap();
        let i0 = &u0.word;
        let val = ctx.eps_full(&ctx.demazure_word(i0, &u0.u0).unwrap());
        assert!(val.is_one());
        // shorter sequences give zero
        let val = ctx.eps_full(&ctx.demazure_word(&[0], &u0.u0).unwrap());
        assert!(val.is_zero());
        // non type-A is rejected
        let d = RootDatum::build("B2", LatticeKind::SimplyConnected).unwrap();
        let bctx = AlgebraCtx::new(d, fgl::additive(6)).unwrap();
        assert!(find_u0(&bctx).is_err());
    }

    #[test]
    fn gram_on_a1_additive() {
        let ctx = ctx_a1_additive(3);
        let u0 = find_u0(&ctx).unwrap();
        let gram = tau_gram(&ctx, &u0).unwrap();
        // eps matrix [[0, 2 x_g], [2 x_g, *]]
        let two_xg = ctx.x_gamma().scalar_mul(&Scalar::from_int(ctx.params(), 2));
        assert!(gram.eps_entries[0][0].is_zero());
        let e01 = &gram.eps_entries[0][1];
        assert!(e01.agrees_with(&two_xg.truncated(e01.valid()), e01.valid()));
        let e10 = &gram.eps_entries[1][0];
        assert!(e10.agrees_with(&two_xg.truncated(e10.valid()), e10.valid()));
        assert!(gram.det_lowest.is_unit());
        assert_eq!(gram.det_order, 2); // two linear-order diagonal entries
    }
}
