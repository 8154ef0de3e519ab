//! Slow reference implementations used to check the recurrences.
//!
//! Polar values are computed straight from their defining sums by
//! enumerating index subsets, and nets are evaluated by repeated affine
//! (or barycentric) interpolation. Nothing here shares code with the
//! recurrence tables.

use itertools::Itertools;

use crate::curve::CurveControlNet;
use crate::error::{Error, Result};
use crate::poly::{Poly1, Poly2};
use crate::rational::{ControlPoint, HomogeneousPoint};
use crate::rect::RectControlNet;
use crate::scalar::Ratio;
use crate::tri::{Point2, TriControlNet};

/// Largest curve degree the enumeration accepts.
pub const CURVE_LIMIT: usize = 12;
/// Largest `p + q` for rectangular enumeration.
pub const RECT_LIMIT: usize = 12;
/// Largest total degree for triangular enumeration.
pub const TRI_LIMIT: usize = 9;

/// Sum of the enumerated products and the number of products summed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Enumeration {
    pub sum: Ratio,
    pub terms: u64,
}

impl Enumeration {
    /// The polar value: mean of the enumerated products. Zero when nothing
    /// was enumerated.
    pub fn mean(&self) -> Ratio {
        if self.terms == 0 {
            return Ratio::zero();
        }
        self.sum.div_int(&self.terms.into()).expect("terms > 0")
    }
}

fn limit(what: &'static str, size: usize, limit: usize) -> Result<()> {
    if size > limit {
        return Err(Error::OracleLimit { what, size, limit });
    }
    Ok(())
}

fn subsets(n: usize, k: usize) -> impl Iterator<Item = Vec<usize>> {
    (0..n).combinations(k)
}

/// Sum over `I ⊆ {1..m}`, `|I| = k` of `prod_{i in I} t_i`.
pub fn enumerate_curve(k: usize, args: &[Ratio]) -> Result<Enumeration> {
    limit("curve degree", args.len(), CURVE_LIMIT)?;
    let mut out = Enumeration { sum: Ratio::zero(), terms: 0 };
    if k > args.len() {
        return Ok(out);
    }
    for set in subsets(args.len(), k) {
        out.sum += set.iter().map(|&i| args[i].clone()).product::<Ratio>();
        out.terms += 1;
    }
    Ok(out)
}

/// Double sum over `I ⊆ {1..p}`, `|I| = h` and `J ⊆ {1..q}`, `|J| = k`.
pub fn enumerate_rect(h: usize, k: usize, u_args: &[Ratio], v_args: &[Ratio]) -> Result<Enumeration> {
    limit("rect p + q", u_args.len() + v_args.len(), RECT_LIMIT)?;
    let mut out = Enumeration { sum: Ratio::zero(), terms: 0 };
    if h > u_args.len() || k > v_args.len() {
        return Ok(out);
    }
    for set_u in subsets(u_args.len(), h) {
        let pu: Ratio = set_u.iter().map(|&i| u_args[i].clone()).product();
        for set_v in subsets(v_args.len(), k) {
            let pv: Ratio = set_v.iter().map(|&j| v_args[j].clone()).product();
            out.sum += &pu * pv;
            out.terms += 1;
        }
    }
    Ok(out)
}

/// Sum over disjoint `I, J ⊆ {1..m}` with `|I| = h`, `|J| = k` of
/// `prod_{i in I} u_i * prod_{j in J} v_j`.
pub fn enumerate_tri(h: usize, k: usize, args: &[Point2]) -> Result<Enumeration> {
    let m = args.len();
    limit("tri degree", m, TRI_LIMIT)?;
    let mut out = Enumeration { sum: Ratio::zero(), terms: 0 };
    if h + k > m {
        return Ok(out);
    }
    for set_i in subsets(m, h) {
        let pu: Ratio = set_i.iter().map(|&i| args[i].u.clone()).product();
        let rest: Vec<usize> = (0..m).filter(|x| !set_i.contains(x)).collect();
        for pick in rest.iter().copied().combinations(k) {
            let pv: Ratio = pick.iter().map(|&j| args[j].v.clone()).product();
            out.sum += &pu * pv;
            out.terms += 1;
        }
    }
    Ok(out)
}

pub fn naive_polar_curve(k: usize, args: &[Ratio]) -> Result<Ratio> {
    Ok(enumerate_curve(k, args)?.mean())
}

pub fn naive_polar_rect(h: usize, k: usize, u_args: &[Ratio], v_args: &[Ratio]) -> Result<Ratio> {
    Ok(enumerate_rect(h, k, u_args, v_args)?.mean())
}

pub fn naive_polar_tri(h: usize, k: usize, args: &[Point2]) -> Result<Ratio> {
    Ok(enumerate_tri(h, k, args)?.mean())
}

/// Polar value of a whole polynomial by enumeration.
pub fn naive_polar_value_curve(p: &Poly1, args: &[Ratio]) -> Result<Ratio> {
    p.terms().map(|(k, a)| Ok(a * naive_polar_curve(k as usize, args)?)).sum()
}

pub fn naive_polar_value_rect(p: &Poly2, u_args: &[Ratio], v_args: &[Ratio]) -> Result<Ratio> {
    p.terms().map(|((h, k), a)| Ok(a * naive_polar_rect(h as usize, k as usize, u_args, v_args)?)).sum()
}

pub fn naive_polar_value_tri(p: &Poly2, args: &[Point2]) -> Result<Ratio> {
    p.terms().map(|((h, k), a)| Ok(a * naive_polar_tri(h as usize, k as usize, args)?)).sum()
}

/// Products enumerated when every `sigma^i_k` (`i <= m`, all `k`) is
/// computed from its defining sum.
pub fn naive_cost_curve(args: &[Ratio]) -> Result<u64> {
    let mut total = 0;
    for i in 0..=args.len() {
        for k in 0..=i {
            total += enumerate_curve(k, &args[..i])?.terms;
        }
    }
    Ok(total)
}

/// Products enumerated for every `sigma^(i,j)_(h,k)`, `i <= p`, `j <= q`.
pub fn naive_cost_rect(u_args: &[Ratio], v_args: &[Ratio]) -> Result<u64> {
    let mut total = 0;
    for i in 0..=u_args.len() {
        for j in 0..=v_args.len() {
            for h in 0..=i {
                for k in 0..=j {
                    total += enumerate_rect(h, k, &u_args[..i], &v_args[..j])?.terms;
                }
            }
        }
    }
    Ok(total)
}

/// Products enumerated for every `sigma^i_(h,k)`, `h + k <= i <= m`.
pub fn naive_cost_tri(args: &[Point2]) -> Result<u64> {
    let mut total = 0;
    for i in 0..=args.len() {
        for h in 0..=i {
            for k in 0..=i - h {
                total += enumerate_tri(h, k, &args[..i])?.terms;
            }
        }
    }
    Ok(total)
}

fn reduce(mut level: Vec<HomogeneousPoint>, lambda: &Ratio) -> HomogeneousPoint {
    while level.len() > 1 {
        level = level.windows(2).map(|w| w[0].lerp(&w[1], lambda)).collect();
    }
    level.pop().expect("nonempty net")
}

fn nonempty<T>(points: &[T]) -> Result<()> {
    if points.is_empty() {
        return Err(Error::InvalidArgument { field: "net".into(), detail: "no control points".into() });
    }
    Ok(())
}

fn affine_at(p: HomogeneousPoint, at: impl FnOnce() -> String) -> Result<Vec<Ratio>> {
    if p.weight.is_zero() {
        return Err(Error::VanishingWeight(at()));
    }
    p.to_affine()
}

/// Homogeneous value of a curve net at parameter `t`.
pub fn decasteljau_curve_homogeneous<P: ControlPoint>(net: &CurveControlNet<P>, t: &Ratio) -> Result<HomogeneousPoint> {
    nonempty(&net.points)?;
    let lambda = net.frame.local(t);
    Ok(reduce(net.points.iter().map(ControlPoint::homogeneous).collect(), &lambda))
}

/// Point on the curve at `t`, after division by the interpolated weight.
pub fn decasteljau_curve<P: ControlPoint>(net: &CurveControlNet<P>, t: &Ratio) -> Result<Vec<Ratio>> {
    affine_at(decasteljau_curve_homogeneous(net, t)?, || t.to_string())
}

/// Nested evaluation: each row along `v`, then the results along `u`.
pub fn decasteljau_rect_homogeneous<P: ControlPoint>(
    net: &RectControlNet<P>,
    u: &Ratio,
    v: &Ratio,
) -> Result<HomogeneousPoint> {
    nonempty(&net.points)?;
    let (lu, lv) = (net.frames.u.local(u), net.frames.v.local(v));
    let column = net
        .points
        .iter()
        .map(|row| {
            nonempty(row)?;
            Ok(reduce(row.iter().map(ControlPoint::homogeneous).collect(), &lv))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(reduce(column, &lu))
}

pub fn decasteljau_rect<P: ControlPoint>(net: &RectControlNet<P>, u: &Ratio, v: &Ratio) -> Result<Vec<Ratio>> {
    affine_at(decasteljau_rect_homogeneous(net, u, v)?, || format!("({u}, {v})"))
}

/// Repeated barycentric interpolation with respect to the net's frame.
pub fn decasteljau_tri_homogeneous<P: ControlPoint>(net: &TriControlNet<P>, at: &Point2) -> Result<HomogeneousPoint> {
    let m = net.degree;
    if net.points.len() != (m + 1) * (m + 2) / 2 {
        return Err(Error::InvalidArgument {
            field: "net".into(),
            detail: format!("{} points for degree {m}", net.points.len()),
        });
    }
    let (a, b, c) = net.frame.barycentric(at);
    // level[i][j] holds b_(i, j, n - i - j) for the current level n
    let mut level: Vec<Vec<HomogeneousPoint>> = (0..=m)
        .map(|i| (0..=m - i).map(|j| net.get(i, j, m - i - j).expect("full net").homogeneous()).collect())
        .collect();
    for n in (0..m).rev() {
        level = (0..=n)
            .map(|i| {
                (0..=n - i)
                    .map(|j| {
                        let (pr, ps, pt) = (&level[i + 1][j], &level[i][j + 1], &level[i][j]);
                        HomogeneousPoint {
                            coords: (0..pt.coords.len())
                                .map(|d| &a * &pr.coords[d] + &b * &ps.coords[d] + &c * &pt.coords[d])
                                .collect(),
                            weight: &a * &pr.weight + &b * &ps.weight + &c * &pt.weight,
                        }
                    })
                    .collect()
            })
            .collect();
    }
    Ok(level.swap_remove(0).swap_remove(0))
}

pub fn decasteljau_tri<P: ControlPoint>(net: &TriControlNet<P>, at: &Point2) -> Result<Vec<Ratio>> {
    affine_at(decasteljau_tri_homogeneous(net, at)?, || format!("({}, {})", at.u, at.v))
}

/// `B^m_k(t) = C(m,k) (1-t)^(m-k) t^k`.
pub fn bernstein_value(m: usize, k: usize, t: &Ratio) -> Ratio {
    if k > m {
        return Ratio::zero();
    }
    // C(m, k) as a product, independent of the scalar module's binomial
    let c: Ratio = (0..k).map(|i| Ratio::new((m - i) as i64, (i + 1) as i64).unwrap()).product();
    c * (Ratio::one() - t).pow((m - k) as u32) * t.pow(k as u32)
}

/// `sum_k B^m_k(t) b_k` in homogeneous form; the net must be over `(0, 1)`.
pub fn bernstein_eval<P: ControlPoint>(net: &CurveControlNet<P>, t: &Ratio) -> Result<HomogeneousPoint> {
    nonempty(&net.points)?;
    if !net.frame.r().is_zero() || !net.frame.s().is_one() {
        return Err(Error::InvalidArgument {
            field: "frame".into(),
            detail: "Bernstein evaluation needs the frame (0, 1)".into(),
        });
    }
    let m = net.points.len() - 1;
    let dim = net.points[0].dim();
    let mut acc = HomogeneousPoint { coords: vec![Ratio::zero(); dim], weight: Ratio::zero() };
    for (k, p) in net.points.iter().enumerate() {
        let b = bernstein_value(m, k, t);
        let h = p.homogeneous();
        for (a, c) in acc.coords.iter_mut().zip(&h.coords) {
            *a += &b * c;
        }
        acc.weight += b * h.weight;
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curve::AffineFrame1;
    use crate::rational::WeightedPoint;
    use crate::rect::FramePair;
    use crate::scalar::q;
    use crate::tri::AffineFrame2;

    #[test]
    fn enumeration_examples() {
        let mut args = vec![q(0, 1); 8];
        args.extend([q(1, 1), q(1, 1)]);
        assert_eq!(naive_polar_curve(2, &args).unwrap(), q(1, 45));

        let mut pts = vec![Point2::new(1, 0), Point2::new(0, 1)];
        pts.extend(vec![Point2::new(0, 0); 6]);
        assert_eq!(naive_polar_tri(1, 1, &pts).unwrap(), q(1, 56));

        let u = vec![q(3, 1), q(-1, 2)];
        let v = vec![q(7, 5)];
        assert_eq!(naive_polar_rect(0, 0, &u, &v).unwrap(), q(1, 1));
    }

    #[test]
    fn size_limits_are_errors() {
        assert!(matches!(naive_polar_curve(1, &vec![q(1, 1); 13]), Err(Error::OracleLimit { .. })));
        assert!(matches!(naive_polar_rect(1, 1, &vec![q(1, 1); 7], &vec![q(1, 1); 6]), Err(Error::OracleLimit { .. })));
        assert!(matches!(naive_polar_tri(1, 1, &vec![Point2::new(1, 1); 10]), Err(Error::OracleLimit { .. })));
    }

    fn unit_curve(values: &[i64]) -> CurveControlNet<WeightedPoint> {
        CurveControlNet {
            degree: values.len() - 1,
            frame: AffineFrame1::unit(),
            points: values.iter().map(|&x| WeightedPoint::affine(vec![Ratio::from(x)])).collect(),
        }
    }

    #[test]
    fn curve_evaluation() {
        let net = unit_curve(&[0, 0, 1]);
        assert_eq!(decasteljau_curve(&net, &q(1, 2)).unwrap(), vec![q(1, 4)]);
        let constant = unit_curve(&[7]);
        assert_eq!(decasteljau_curve(&constant, &q(-3, 2)).unwrap(), vec![q(7, 1)]);
        for t in [q(0, 1), q(1, 3), q(4, 5), q(2, 1)] {
            assert_eq!(bernstein_eval(&net, &t).unwrap().to_affine().unwrap(), decasteljau_curve(&net, &t).unwrap());
        }
    }

    #[test]
    fn bernstein_basics() {
        let t = q(1, 3);
        let total: Ratio = (0..=5).map(|k| bernstein_value(5, k, &t)).sum();
        assert_eq!(total, q(1, 1));
        assert_eq!(bernstein_value(4, 0, &q(0, 1)), q(1, 1));
        for k in 1..=4 {
            assert_eq!(bernstein_value(4, k, &q(0, 1)), q(0, 1));
        }
        let mut net = unit_curve(&[0, 1]);
        net.frame = AffineFrame1::new(q(0, 1), q(2, 1)).unwrap();
        assert!(bernstein_eval(&net, &t).is_err());
    }

    #[test]
    fn rect_bilinear() {
        let net = RectControlNet {
            bidegree: (1, 1),
            frames: FramePair::unit(),
            points: vec![
                vec![WeightedPoint::affine(vec![q(0, 1)]), WeightedPoint::affine(vec![q(0, 1)])],
                vec![WeightedPoint::affine(vec![q(0, 1)]), WeightedPoint::affine(vec![q(1, 1)])],
            ],
        };
        assert_eq!(decasteljau_rect(&net, &q(1, 2), &q(1, 2)).unwrap(), vec![q(1, 4)]);
    }

    #[test]
    fn tri_linear_and_vanishing_weight() {
        // coordinate function u over the standard frame
        let net = TriControlNet {
            degree: 1,
            frame: AffineFrame2::standard(),
            points: vec![
                WeightedPoint::affine(vec![q(0, 1)]),
                WeightedPoint::affine(vec![q(0, 1)]),
                WeightedPoint::affine(vec![q(1, 1)]),
            ],
        };
        assert_eq!(decasteljau_tri(&net, &Point2::new(q(2, 7), q(1, 9))).unwrap(), vec![q(2, 7)]);

        let weights = TriControlNet {
            degree: 1,
            frame: AffineFrame2::standard(),
            points: vec![
                HomogeneousPoint { coords: vec![q(1, 1)], weight: q(1, 1) },
                HomogeneousPoint { coords: vec![q(1, 1)], weight: q(-1, 1) },
                HomogeneousPoint { coords: vec![q(1, 1)], weight: q(1, 1) },
            ],
        };
        // weight = a*1 + b*(-1) + c*1 = 1 - 2b vanishes at v = 1/2
        let err = decasteljau_tri(&weights, &Point2::new(q(0, 1), q(1, 2))).unwrap_err();
        assert!(matches!(err, Error::VanishingWeight(_)));
    }
}
