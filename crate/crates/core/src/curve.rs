//! Control points of polynomial and rational curves.
//!
//! The polar form of `t^k` with respect to degree `m` is the elementary
//! symmetric function `e_k(t_1..t_m)` divided by `C(m, k)`. The scaled value
//! `sigma^m_k = e_k` obeys the Pascal-like rule
//! `sigma^i_k = sigma^(i-1)_k + t_i * sigma^(i-1)_(k-1)`, so one triangle of
//! `O(m^2)` cells yields the polar values of every monomial at once.

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::poly::{CurveMap, Poly1};
use crate::rational::{HomogeneousPoint, NetIndex, WeightedPoint};
use crate::scalar::{binomial, Ratio};

/// Parameter interval `(r, s)` with `r != s`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffineFrame1 {
    r: Ratio,
    s: Ratio,
}

impl AffineFrame1 {
    pub fn new(r: Ratio, s: Ratio) -> Result<Self> {
        if r == s {
            return Err(Error::DegenerateFrame(format!("interval endpoints coincide ({r}, {s})")));
        }
        Ok(AffineFrame1 { r, s })
    }

    /// The frame `(0, 1)`.
    pub fn unit() -> Self {
        AffineFrame1 { r: Ratio::zero(), s: Ratio::one() }
    }

    pub fn r(&self) -> &Ratio {
        &self.r
    }

    pub fn s(&self) -> &Ratio {
        &self.s
    }

    /// Local coordinate `(t - r) / (s - r)`.
    pub fn local(&self, t: &Ratio) -> Ratio {
        (t - &self.r).checked_div(&(&self.s - &self.r)).expect("frame is nondegenerate")
    }

    /// Arguments of control point `b_j` of a degree-`m` net: `r` repeated
    /// `m - j` times, then `s` repeated `j` times.
    pub fn control_args(&self, m: usize, j: usize) -> Vec<Ratio> {
        debug_assert!(j <= m);
        let mut args = vec![self.r.clone(); m - j];
        args.extend(std::iter::repeat(self.s.clone()).take(j));
        args
    }
}

/// Triangle of scaled polar values `sigma^i_k(t_1..t_i)`, `0 <= k <= i <= m`.
#[derive(Clone, Debug)]
pub struct SigmaTableCurve {
    args: Vec<Ratio>,
    rows: Vec<Vec<Ratio>>,
    interior_updates: usize,
}

impl SigmaTableCurve {
    pub fn build(args: &[Ratio]) -> Self {
        let mut rows: Vec<Vec<Ratio>> = Vec::with_capacity(args.len() + 1);
        rows.push(vec![Ratio::one()]);
        let mut interior_updates = 0;
        for (i, t) in args.iter().enumerate() {
            let prev = &rows[i];
            let mut row = Vec::with_capacity(i + 2);
            row.push(Ratio::one());
            for k in 1..=i + 1 {
                let above = prev.get(k).cloned().unwrap_or_default();
                row.push(above + t * &prev[k - 1]);
                interior_updates += 1;
            }
            rows.push(row);
        }
        SigmaTableCurve { args: args.to_vec(), rows, interior_updates }
    }

    pub fn degree(&self) -> usize {
        self.args.len()
    }

    pub fn args(&self) -> &[Ratio] {
        &self.args
    }

    /// `sigma^i_k`; zero outside `0 <= k <= i`.
    pub fn sigma(&self, i: usize, k: usize) -> Ratio {
        self.rows.get(i).and_then(|row| row.get(k)).cloned().unwrap_or_default()
    }

    /// `sigma^m_k` for `k = 0..=m`.
    pub fn top_row(&self) -> &[Ratio] {
        self.rows.last().expect("row 0 always present")
    }

    pub fn cell_count(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    /// Number of cells filled by the recurrence (every cell except the
    /// `sigma^i_0 = 1` column).
    pub fn interior_updates(&self) -> usize {
        self.interior_updates
    }

    /// Polar value `f^m_k = sigma^m_k / C(m, k)`.
    pub fn polar(&self, k: usize) -> Ratio {
        let m = self.degree();
        if k > m {
            return Ratio::zero();
        }
        self.sigma(m, k).div_int(&binomial(m as u64, k as i64)).expect("k <= m")
    }

    /// Combine the top row with the coefficients of `p`.
    pub fn combine(&self, p: &Poly1) -> Ratio {
        let m = self.degree() as u64;
        p.terms().map(|(k, a)| a * self.top_row()[k as usize].div_int(&binomial(m, k as i64)).expect("k <= m")).sum()
    }
}

pub fn sigma_table_curve(args: &[Ratio]) -> SigmaTableCurve {
    SigmaTableCurve::build(args)
}

/// Polar values `f^i_k` computed without the binomial scaling, using
/// `f^i_k = ((i-k)/i) f^(i-1)_k + (k/i) t_i f^(i-1)_(k-1)`.
#[derive(Clone, Debug)]
pub struct DirectTableCurve {
    rows: Vec<Vec<Ratio>>,
}

impl DirectTableCurve {
    pub fn build(args: &[Ratio]) -> Self {
        let mut rows: Vec<Vec<Ratio>> = vec![vec![Ratio::one()]];
        for (idx, t) in args.iter().enumerate() {
            let i = idx + 1;
            let prev = &rows[idx];
            let mut row = vec![Ratio::one()];
            for k in 1..=i {
                let above = prev.get(k).cloned().unwrap_or_default();
                let keep = Ratio::new((i - k) as i64, i as i64).unwrap() * above;
                let take = Ratio::new(k as i64, i as i64).unwrap() * t * &prev[k - 1];
                row.push(keep + take);
            }
            rows.push(row);
        }
        DirectTableCurve { rows }
    }

    pub fn polar(&self, i: usize, k: usize) -> Ratio {
        self.rows.get(i).and_then(|r| r.get(k)).cloned().unwrap_or_default()
    }

    pub fn combine(&self, p: &Poly1) -> Ratio {
        let m = self.rows.len() - 1;
        p.terms().map(|(k, a)| a * self.polar(m, k as usize)).sum()
    }
}

fn check_degree(p: &Poly1, m: usize, what: impl FnOnce() -> String) -> Result<()> {
    match p.degree() {
        Some(d) if d as usize > m => {
            Err(Error::DegreeOverflow { what: what(), actual: d.to_string(), bound: m.to_string() })
        }
        _ => Ok(()),
    }
}

/// Polar value of `p` with respect to degree `args.len()`.
pub fn polar_value_curve(p: &Poly1, args: &[Ratio]) -> Result<Ratio> {
    check_degree(p, args.len(), || "polynomial".into())?;
    Ok(SigmaTableCurve::build(args).combine(p))
}

/// Same value as [`polar_value_curve`], through the direct `f` recurrence.
pub fn polar_value_curve_direct(p: &Poly1, args: &[Ratio]) -> Result<Ratio> {
    check_degree(p, args.len(), || "polynomial".into())?;
    Ok(DirectTableCurve::build(args).combine(p))
}

/// Value of `f^m_k` at an argument multiset with `count_r` copies of `r` and
/// `count_s` copies of `s`, where `m = count_r + count_s`:
/// `sum_j C(count_r, k-j) C(count_s, j) r^(k-j) s^j / C(m, k)`.
pub fn closed_form_polar_curve(count_r: usize, count_s: usize, r: &Ratio, s: &Ratio, k: usize) -> Ratio {
    let m = count_r + count_s;
    if k > m {
        return Ratio::zero();
    }
    let mut acc = Ratio::zero();
    for j in 0..=k {
        let c = binomial(count_r as u64, (k - j) as i64) * binomial(count_s as u64, j as i64);
        if c == BigInt::from(0) {
            continue;
        }
        acc += Ratio::from_integer(c) * r.pow((k - j) as u32) * s.pow(j as u32);
    }
    acc.div_int(&binomial(m as u64, k as i64)).expect("k <= m")
}

/// Control polygon `b_0..b_m` over a frame.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CurveControlNet<P = WeightedPoint> {
    pub degree: usize,
    pub frame: AffineFrame1,
    pub points: Vec<P>,
}

impl<P> CurveControlNet<P> {
    pub fn indexed(&self) -> impl Iterator<Item = (NetIndex, &P)> + '_ {
        self.points.iter().enumerate().map(|(j, p)| (NetIndex::Curve(j), p))
    }

    pub fn try_map<Q>(self, mut f: impl FnMut(NetIndex, P) -> Result<Q>) -> Result<CurveControlNet<Q>> {
        let points =
            self.points.into_iter().enumerate().map(|(j, p)| f(NetIndex::Curve(j), p)).collect::<Result<_>>()?;
        Ok(CurveControlNet { degree: self.degree, frame: self.frame, points })
    }
}

fn check_map(map: &CurveMap, m: usize) -> Result<()> {
    for (i, p) in map.numerators().iter().enumerate() {
        check_degree(p, m, || format!("coordinate {}", i + 1))?;
    }
    check_degree(map.denominator(), m, || "denominator".into())
}

/// Homogeneous control polygon: numerator polar values and the denominator
/// polar value (the weight) at each `b_j`.
pub fn homogeneous_net(map: &CurveMap, m: usize, frame: &AffineFrame1) -> Result<CurveControlNet<HomogeneousPoint>> {
    check_map(map, m)?;
    let points = (0..=m)
        .map(|j| {
            let table = SigmaTableCurve::build(&frame.control_args(m, j));
            HomogeneousPoint {
                coords: map.numerators().iter().map(|p| table.combine(p)).collect(),
                weight: table.combine(map.denominator()),
            }
        })
        .collect();
    Ok(CurveControlNet { degree: m, frame: frame.clone(), points })
}

/// Control points of a curve over `frame` with respect to degree `m`.
/// Rational maps yield weighted points; a zero weight is an error.
pub fn curve_control_points(map: &CurveMap, m: usize, frame: &AffineFrame1) -> Result<CurveControlNet> {
    homogeneous_net(map, m, frame)?.try_map(|index, p| p.to_weighted().ok_or(Error::ZeroWeight { index }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expr::parse_poly1;
    use crate::scalar::q;

    fn ints(xs: &[i64]) -> Vec<Ratio> {
        xs.iter().map(|&x| Ratio::from(x)).collect()
    }

    #[test]
    fn table_examples() {
        assert_eq!(sigma_table_curve(&ints(&[0, 0, 0])).top_row(), ints(&[1, 0, 0, 0]).as_slice());
        assert_eq!(sigma_table_curve(&ints(&[1, 1, 1, 1])).top_row(), ints(&[1, 4, 6, 4, 1]).as_slice());
        let t = sigma_table_curve(&ints(&[0, 0, 0, 0, 0, 0, 0, 0, 1, 1]));
        assert_eq!(t.sigma(10, 2), q(1, 1));
        assert_eq!(t.sigma(10, 1), q(2, 1));
        assert_eq!(t.sigma(10, 3), q(0, 1));
        assert_eq!(t.sigma(3, 7), q(0, 1));
    }

    #[test]
    fn table_shape() {
        for m in 0..8 {
            let t = sigma_table_curve(&vec![q(1, 2); m]);
            assert_eq!(t.cell_count(), (m + 1) * (m + 2) / 2);
            assert_eq!(t.interior_updates(), m * (m + 1) / 2);
            for i in 0..=m {
                assert!(t.sigma(i, 0).is_one());
            }
        }
    }

    #[test]
    fn polar_value_examples() {
        let t2 = parse_poly1("t^2").unwrap();
        assert_eq!(polar_value_curve(&t2, &ints(&[0, 1])).unwrap(), q(0, 1));

        let w = parse_poly1("(1 + t^2)^5").unwrap();
        let args = ints(&[0, 0, 0, 0, 0, 0, 0, 0, 1, 1]);
        assert_eq!(polar_value_curve(&w, &args).unwrap(), q(10, 9));

        let t = parse_poly1("t").unwrap();
        let args = vec![q(1, 3), q(-2, 1), q(5, 7), q(0, 1)];
        let mean = args.iter().sum::<Ratio>().div_int(&BigInt::from(4)).unwrap();
        assert_eq!(polar_value_curve(&t, &args).unwrap(), mean);
    }

    #[test]
    fn degree_overflow() {
        let p = parse_poly1("t^3").unwrap();
        assert!(matches!(polar_value_curve(&p, &ints(&[1, 2])), Err(Error::DegreeOverflow { .. })));
    }

    #[test]
    fn control_point_examples() {
        let frame = AffineFrame1::unit();
        let map = CurveMap::polynomial(vec![parse_poly1("t").unwrap()]).unwrap();
        let net = curve_control_points(&map, 3, &frame).unwrap();
        let xs: Vec<_> = net.points.iter().map(|p| p.affine[0].clone()).collect();
        assert_eq!(xs, vec![q(0, 1), q(1, 3), q(2, 3), q(1, 1)]);

        let map = CurveMap::polynomial(vec![parse_poly1("t^2").unwrap()]).unwrap();
        let net = curve_control_points(&map, 2, &frame).unwrap();
        let xs: Vec<_> = net.points.iter().map(|p| p.affine[0].clone()).collect();
        assert_eq!(xs, ints(&[0, 0, 1]));
    }

    #[test]
    fn degenerate_frame() {
        assert!(matches!(AffineFrame1::new(q(1, 2), q(2, 4)), Err(Error::DegenerateFrame(_))));
    }

    #[test]
    fn closed_form_examples() {
        assert_eq!(closed_form_polar_curve(8, 2, &q(0, 1), &q(1, 1), 2), q(1, 45));
        let r = q(-3, 5);
        for k in 0..=6 {
            assert_eq!(closed_form_polar_curve(6, 0, &r, &q(9, 1), k), r.pow(k as u32));
        }
        assert_eq!(closed_form_polar_curve(3, 4, &q(2, 1), &q(7, 1), 0), q(1, 1));
    }

    #[test]
    fn direct_matches_scaled() {
        let args = vec![q(1, 2), q(-3, 1), q(2, 7), q(0, 1), q(5, 3)];
        let s = SigmaTableCurve::build(&args);
        let d = DirectTableCurve::build(&args);
        for k in 0..=5 {
            assert_eq!(s.polar(k), d.polar(5, k));
        }
    }
}
