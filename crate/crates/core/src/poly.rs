//! Sparse monomial-form polynomials in one variable (`t`) and two variables
//! (`u`, `v`), and rational parametric maps assembled from them.

use std::collections::BTreeMap;
use std::fmt;
use std::hash::Hash;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::scalar::Ratio;

/// Exponent of a monomial. Multiplying monomials adds exponents.
pub trait Exponent: Copy + Ord + Eq + Hash + fmt::Debug {
    fn zero() -> Self;
    fn combine(self, other: Self) -> Self;
    /// Total degree of the monomial.
    fn total(self) -> u32;
    /// Render `x^e` style text for a monomial with this exponent; empty for
    /// the constant monomial.
    fn render(self) -> String;
}

impl Exponent for u32 {
    fn zero() -> Self {
        0
    }

    fn combine(self, other: Self) -> Self {
        self + other
    }

    fn total(self) -> u32 {
        self
    }

    fn render(self) -> String {
        power_text("t", self)
    }
}

impl Exponent for (u32, u32) {
    fn zero() -> Self {
        (0, 0)
    }

    fn combine(self, other: Self) -> Self {
        (self.0 + other.0, self.1 + other.1)
    }

    fn total(self) -> u32 {
        self.0 + self.1
    }

    fn render(self) -> String {
        match (power_text("u", self.0), power_text("v", self.1)) {
            (a, b) if a.is_empty() => b,
            (a, b) if b.is_empty() => a,
            (a, b) => format!("{a}*{b}"),
        }
    }
}

fn power_text(var: &str, e: u32) -> String {
    match e {
        0 => String::new(),
        1 => var.to_string(),
        _ => format!("{var}^{e}"),
    }
}

/// Sparse polynomial: exponent to nonzero coefficient.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SparsePoly<E: Exponent> {
    terms: BTreeMap<E, Ratio>,
}

/// Univariate polynomial in `t`.
pub type Poly1 = SparsePoly<u32>;
/// Bivariate polynomial in `u` and `v`; exponents are `(deg_u, deg_v)`.
pub type Poly2 = SparsePoly<(u32, u32)>;

impl<E: Exponent> SparsePoly<E> {
    pub fn zero() -> Self {
        SparsePoly { terms: BTreeMap::new() }
    }

    pub fn constant(c: Ratio) -> Self {
        Self::monomial(E::zero(), c)
    }

    pub fn one() -> Self {
        Self::constant(Ratio::one())
    }

    pub fn monomial(exp: E, coeff: Ratio) -> Self {
        let mut p = Self::zero();
        p.add_term(exp, coeff);
        p
    }

    /// Build from `(exponent, coefficient)` pairs. Duplicate exponents are
    /// summed; zero results are dropped.
    pub fn from_terms<I: IntoIterator<Item = (E, Ratio)>>(terms: I) -> Self {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    pub fn add_term(&mut self, exp: E, coeff: Ratio) {
        if coeff.is_zero() {
            return;
        }
        let slot = self.terms.entry(exp).or_insert_with(Ratio::zero);
        *slot += coeff;
        if slot.is_zero() {
            self.terms.remove(&exp);
        }
    }

    pub fn coeff(&self, exp: E) -> Ratio {
        self.terms.get(&exp).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (E, &Ratio)> + '_ {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// True for a nonzero constant `c`.
    pub fn as_constant(&self) -> Option<&Ratio> {
        match self.terms.len() {
            1 => self.terms.get(&E::zero()),
            _ => None,
        }
    }

    pub fn is_one(&self) -> bool {
        self.as_constant().is_some_and(Ratio::is_one)
    }

    /// Maximum total degree, `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.total()).max()
    }

    pub fn scale(&self, c: &Ratio) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        SparsePoly { terms: self.terms.iter().map(|(e, a)| (*e, a * c)).collect() }
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut acc = Self::one();
        let mut base = self.clone();
        let mut n = exp;
        while n > 0 {
            if n & 1 == 1 {
                acc = &acc * &base;
            }
            n >>= 1;
            if n > 0 {
                base = &base * &base;
            }
        }
        acc
    }
}

impl Poly1 {
    /// `t`.
    pub fn var() -> Self {
        Self::monomial(1, Ratio::one())
    }

    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().next_back().copied()
    }

    /// Horner-free direct evaluation; exact.
    pub fn eval(&self, t: &Ratio) -> Ratio {
        self.terms.iter().map(|(k, a)| a * t.pow(*k)).sum()
    }
}

impl Poly2 {
    pub fn var_u() -> Self {
        Self::monomial((1, 0), Ratio::one())
    }

    pub fn var_v() -> Self {
        Self::monomial((0, 1), Ratio::one())
    }

    pub fn maxdeg_u(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.0).max()
    }

    pub fn maxdeg_v(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.1).max()
    }

    pub fn eval(&self, u: &Ratio, v: &Ratio) -> Ratio {
        self.terms.iter().map(|((h, k), a)| a * u.pow(*h) * v.pow(*k)).sum()
    }
}

impl<E: Exponent> Default for SparsePoly<E> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<E: Exponent> Add for &SparsePoly<E> {
    type Output = SparsePoly<E>;
    fn add(self, rhs: &SparsePoly<E>) -> SparsePoly<E> {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, c.clone());
        }
        out
    }
}

impl<E: Exponent> Sub for &SparsePoly<E> {
    type Output = SparsePoly<E>;
    fn sub(self, rhs: &SparsePoly<E>) -> SparsePoly<E> {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, -c);
        }
        out
    }
}

impl<E: Exponent> Neg for &SparsePoly<E> {
    type Output = SparsePoly<E>;
    fn neg(self) -> SparsePoly<E> {
        SparsePoly { terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect() }
    }
}

/// Sparse convolution.
impl<E: Exponent> Mul for &SparsePoly<E> {
    type Output = SparsePoly<E>;
    fn mul(self, rhs: &SparsePoly<E>) -> SparsePoly<E> {
        let mut out = SparsePoly::zero();
        for (ea, a) in &self.terms {
            for (eb, b) in &rhs.terms {
                out.add_term(ea.combine(*eb), a * b);
            }
        }
        out
    }
}

/// Canonical monomial-sum text, e.g. `4*t - 64*t^3 + 1/3*t^5`. The parser in
/// [`crate::expr`] reads this form back to the same polynomial.
impl<E: Exponent> fmt::Display for SparsePoly<E> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (n, (e, c)) in self.terms.iter().enumerate() {
            let mono = e.render();
            let mag = c.abs();
            match (n, c.is_negative()) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if mono.is_empty() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                f.write_str(&mono)?;
            } else {
                write!(f, "{mag}*{mono}")?;
            }
        }
        Ok(())
    }
}

impl<E: Exponent> fmt::Debug for SparsePoly<E> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SparsePoly({self})")
    }
}

/// `d` numerator polynomials over one shared denominator polynomial. The
/// polynomial case has the constant denominator 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalMap<E: Exponent> {
    numerators: Vec<SparsePoly<E>>,
    denominator: SparsePoly<E>,
}

impl<E: Exponent> RationalMap<E> {
    pub fn new(numerators: Vec<SparsePoly<E>>, denominator: SparsePoly<E>) -> Result<Self> {
        if numerators.is_empty() {
            return Err(Error::InvalidMap("at least one coordinate is required".into()));
        }
        if denominator.is_zero() {
            return Err(Error::InvalidMap("denominator is the zero polynomial".into()));
        }
        Ok(RationalMap { numerators, denominator })
    }

    pub fn polynomial(numerators: Vec<SparsePoly<E>>) -> Result<Self> {
        Self::new(numerators, SparsePoly::one())
    }

    pub fn numerators(&self) -> &[SparsePoly<E>] {
        &self.numerators
    }

    pub fn denominator(&self) -> &SparsePoly<E> {
        &self.denominator
    }

    /// Numerators followed by the denominator.
    pub fn components(&self) -> impl Iterator<Item = &SparsePoly<E>> + '_ {
        self.numerators.iter().chain(std::iter::once(&self.denominator))
    }

    pub fn dim(&self) -> usize {
        self.numerators.len()
    }

    pub fn is_polynomial(&self) -> bool {
        self.denominator.is_one()
    }

    /// Multiply every numerator and the denominator by `c`.
    pub fn scale(&self, c: &Ratio) -> Result<Self> {
        Self::new(self.numerators.iter().map(|p| p.scale(c)).collect(), self.denominator.scale(c))
    }

    pub fn total_degree(&self) -> usize {
        self.components().filter_map(|p| p.total_degree()).max().unwrap_or(0) as usize
    }
}

/// Curve map in `t`.
pub type CurveMap = RationalMap<u32>;
/// Surface map in `u`, `v`.
pub type SurfaceMap = RationalMap<(u32, u32)>;

impl CurveMap {
    pub fn degree(&self) -> usize {
        self.total_degree()
    }

    /// `None` where the denominator vanishes.
    pub fn eval(&self, t: &Ratio) -> Option<Vec<Ratio>> {
        let w = self.denominator.eval(t);
        if w.is_zero() {
            return None;
        }
        Some(self.numerators.iter().map(|p| p.eval(t).checked_div(&w).unwrap()).collect())
    }
}

impl SurfaceMap {
    /// `(max degree in u, max degree in v)` over all components.
    pub fn bidegree(&self) -> (usize, usize) {
        let p = self.components().filter_map(Poly2::maxdeg_u).max().unwrap_or(0);
        let q = self.components().filter_map(Poly2::maxdeg_v).max().unwrap_or(0);
        (p as usize, q as usize)
    }

    pub fn eval(&self, u: &Ratio, v: &Ratio) -> Option<Vec<Ratio>> {
        let w = self.denominator.eval(u, v);
        if w.is_zero() {
            return None;
        }
        Some(self.numerators.iter().map(|p| p.eval(u, v).checked_div(&w).unwrap()).collect())
    }
}
