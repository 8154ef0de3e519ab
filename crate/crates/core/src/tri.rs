//! Triangular control nets of total-degree surfaces.
//!
//! Treating `(u, v)` as one point argument, the scaled polar value of
//! `u^h v^k` is the sum over disjoint index sets `|I| = h`, `|J| = k` of
//! `prod u_i * prod v_j`. It satisfies
//! `sigma^i_(h,k) = sigma^(i-1)_(h,k) + u_i sigma^(i-1)_(h-1,k) + v_i sigma^(i-1)_(h,k-1)`,
//! which builds a tetrahedron of `O(m^3)` cells.

use crate::error::{Error, Result};
use crate::poly::{Poly2, SurfaceMap};
use crate::rational::{HomogeneousPoint, NetIndex, WeightedPoint};
use crate::scalar::{binomial, multinomial3, Ratio};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Point2 {
    pub u: Ratio,
    pub v: Ratio,
}

impl Point2 {
    pub fn new(u: impl Into<Ratio>, v: impl Into<Ratio>) -> Self {
        Point2 { u: u.into(), v: v.into() }
    }

    fn sub(&self, other: &Point2) -> (Ratio, Ratio) {
        (&self.u - &other.u, &self.v - &other.v)
    }
}

fn cross(a: &(Ratio, Ratio), b: &(Ratio, Ratio)) -> Ratio {
    &a.0 * &b.1 - &a.1 * &b.0
}

/// Three affinely independent points `r`, `s`, `t` of the parameter plane.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffineFrame2 {
    r: Point2,
    s: Point2,
    t: Point2,
}

impl AffineFrame2 {
    pub fn new(r: Point2, s: Point2, t: Point2) -> Result<Self> {
        if cross(&s.sub(&r), &t.sub(&r)).is_zero() {
            return Err(Error::DegenerateFrame("triangle vertices are collinear".into()));
        }
        Ok(AffineFrame2 { r, s, t })
    }

    /// `((1,0), (0,1), (0,0))`.
    pub fn standard() -> Self {
        AffineFrame2 { r: Point2::new(1, 0), s: Point2::new(0, 1), t: Point2::new(0, 0) }
    }

    pub fn vertices(&self) -> [&Point2; 3] {
        [&self.r, &self.s, &self.t]
    }

    /// Barycentric coordinates `(a, b, c)` of `p`: `p = a r + b s + c t`,
    /// `a + b + c = 1`.
    pub fn barycentric(&self, p: &Point2) -> (Ratio, Ratio, Ratio) {
        let rt = self.r.sub(&self.t);
        let st = self.s.sub(&self.t);
        let pt = p.sub(&self.t);
        let det = cross(&rt, &st);
        let a = cross(&pt, &st).checked_div(&det).expect("frame is nondegenerate");
        let b = cross(&rt, &pt).checked_div(&det).expect("frame is nondegenerate");
        let c = Ratio::one() - &a - &b;
        (a, b, c)
    }

    /// Arguments of `b_(i,j,k)`: `r` repeated `i` times, `s` `j` times,
    /// `t` `k` times.
    pub fn control_args(&self, i: usize, j: usize, k: usize) -> Vec<Point2> {
        let mut args = vec![self.r.clone(); i];
        args.extend(std::iter::repeat(self.s.clone()).take(j));
        args.extend(std::iter::repeat(self.t.clone()).take(k));
        args
    }
}

/// Tetrahedron of `sigma^i_(h,k)` for `h + k <= i <= m`.
#[derive(Clone, Debug)]
pub struct SigmaTableTri {
    args: Vec<Point2>,
    // layers[i][h][k], k <= i - h
    layers: Vec<Vec<Vec<Ratio>>>,
    interior_updates: usize,
}

fn read(layer: &[Vec<Ratio>], h: usize, k: usize) -> Ratio {
    layer.get(h).and_then(|row| row.get(k)).cloned().unwrap_or_default()
}

impl SigmaTableTri {
    pub fn build(args: &[Point2]) -> Self {
        let mut layers: Vec<Vec<Vec<Ratio>>> = vec![vec![vec![Ratio::one()]]];
        let mut interior_updates = 0;
        for (idx, Point2 { u, v }) in args.iter().enumerate() {
            let i = idx + 1;
            let prev = &layers[idx];
            let mut layer = Vec::with_capacity(i + 1);
            for h in 0..=i {
                let mut row = Vec::with_capacity(i - h + 1);
                row.push(if h == 0 {
                    Ratio::one()
                } else {
                    interior_updates += 1;
                    read(prev, h, 0) + u * read(prev, h - 1, 0)
                });
                for k in 1..=i - h {
                    let mut cell = read(prev, h, k) + v * read(prev, h, k - 1);
                    if h > 0 {
                        cell += u * read(prev, h - 1, k);
                    }
                    row.push(cell);
                    interior_updates += 1;
                }
                layer.push(row);
            }
            layers.push(layer);
        }
        SigmaTableTri { args: args.to_vec(), layers, interior_updates }
    }

    pub fn degree(&self) -> usize {
        self.args.len()
    }

    /// `sigma^i_(h,k)`; zero outside the tetrahedron.
    pub fn sigma(&self, i: usize, h: usize, k: usize) -> Ratio {
        self.layers.get(i).map_or_else(Ratio::zero, |l| read(l, h, k))
    }

    pub fn cell_count(&self) -> usize {
        self.layers.iter().flatten().map(Vec::len).sum()
    }

    /// Cells filled by the recurrence (all but the `sigma^i_(0,0) = 1` cells).
    pub fn interior_updates(&self) -> usize {
        self.interior_updates
    }

    /// `f^m_(h,k) = sigma^m_(h,k) / (C(m,h) C(m-h,k))`.
    pub fn polar(&self, h: usize, k: usize) -> Ratio {
        let m = self.degree();
        if h + k > m {
            return Ratio::zero();
        }
        self.sigma(m, h, k).div_int(&multinomial3(m as u64, h as i64, k as i64)).expect("h + k <= m")
    }

    pub fn combine(&self, poly: &Poly2) -> Ratio {
        poly.terms().map(|((h, l), a)| a * self.polar(h as usize, l as usize)).sum()
    }
}

pub fn sigma_table_tri(args: &[Point2]) -> SigmaTableTri {
    SigmaTableTri::build(args)
}

/// Unscaled polar values from
/// `f^i_(h,k) = ((i-h-k)/i) f^(i-1)_(h,k) + (h/i) u_i f^(i-1)_(h-1,k) + (k/i) v_i f^(i-1)_(h,k-1)`.
#[derive(Clone, Debug)]
pub struct DirectTableTri {
    layers: Vec<Vec<Vec<Ratio>>>,
}

impl DirectTableTri {
    pub fn build(args: &[Point2]) -> Self {
        let mut layers: Vec<Vec<Vec<Ratio>>> = vec![vec![vec![Ratio::one()]]];
        for (idx, Point2 { u, v }) in args.iter().enumerate() {
            let i = idx + 1;
            let frac = |a: usize| Ratio::new(a as i64, i as i64).expect("i >= 1");
            let prev = &layers[idx];
            let mut layer = Vec::with_capacity(i + 1);
            for h in 0..=i {
                let row = (0..=i - h)
                    .map(|k| {
                        if h == 0 && k == 0 {
                            return Ratio::one();
                        }
                        let mut cell = frac(i - h - k) * read(prev, h, k);
                        if h > 0 {
                            cell += frac(h) * u * read(prev, h - 1, k);
                        }
                        if k > 0 {
                            cell += frac(k) * v * read(prev, h, k - 1);
                        }
                        cell
                    })
                    .collect();
                layer.push(row);
            }
            layers.push(layer);
        }
        DirectTableTri { layers }
    }

    pub fn polar(&self, h: usize, k: usize) -> Ratio {
        read(self.layers.last().expect("layer 0 always present"), h, k)
    }

    pub fn combine(&self, poly: &Poly2) -> Ratio {
        poly.terms().map(|((h, l), a)| a * self.polar(h as usize, l as usize)).sum()
    }
}

fn check_degree(poly: &Poly2, m: usize, what: impl FnOnce() -> String) -> Result<()> {
    match poly.total_degree() {
        Some(d) if d as usize > m => {
            Err(Error::DegreeOverflow { what: what(), actual: d.to_string(), bound: m.to_string() })
        }
        _ => Ok(()),
    }
}

/// Polar value of `poly` with respect to total degree `args.len()`.
pub fn polar_value_tri(poly: &Poly2, args: &[Point2]) -> Result<Ratio> {
    check_degree(poly, args.len(), || "polynomial".into())?;
    Ok(SigmaTableTri::build(args).combine(poly))
}

pub fn polar_value_tri_direct(poly: &Poly2, args: &[Point2]) -> Result<Ratio> {
    check_degree(poly, args.len(), || "polynomial".into())?;
    Ok(DirectTableTri::build(args).combine(poly))
}

/// Polar value of `u^h v^k` at `count_r` copies of `(1,0)`, `count_s` copies
/// of `(0,1)` and `count_t` copies of `(0,0)`:
/// `C(count_r, h) C(count_s, k) / (C(m,h) C(m-h,k))`.
pub fn closed_form_tri(m: usize, count_r: usize, count_s: usize, count_t: usize, h: usize, k: usize) -> Ratio {
    debug_assert_eq!(count_r + count_s + count_t, m);
    let den = multinomial3(m as u64, h as i64, k as i64);
    if den == 0.into() {
        return Ratio::zero();
    }
    let num = binomial(count_r as u64, h as i64) * binomial(count_s as u64, k as i64);
    Ratio::from_integer(num).div_int(&den).expect("nonzero count")
}

/// Indices `(i, j, k)` of a degree-`m` net, `i` ascending outer, `j`
/// ascending inner, `k = m - i - j`.
pub fn tri_indices(m: usize) -> impl Iterator<Item = (usize, usize, usize)> {
    (0..=m).flat_map(move |i| (0..=m - i).map(move |j| (i, j, m - i - j)))
}

/// Position of `(i, j, _)` in [`tri_indices`] order.
pub fn tri_position(m: usize, i: usize, j: usize) -> usize {
    // rows 0..i hold (m+1) + m + ... + (m-i+2) points
    i * (m + 1) - i * i.saturating_sub(1) / 2 + j
}

/// `(m+1)(m+2)/2` control points in [`tri_indices`] order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TriControlNet<P = WeightedPoint> {
    pub degree: usize,
    pub frame: AffineFrame2,
    pub points: Vec<P>,
}

impl<P> TriControlNet<P> {
    pub fn indexed(&self) -> impl Iterator<Item = (NetIndex, &P)> + '_ {
        tri_indices(self.degree).zip(&self.points).map(|((i, j, k), p)| (NetIndex::Tri(i, j, k), p))
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> Option<&P> {
        if i + j + k != self.degree {
            return None;
        }
        self.points.get(tri_position(self.degree, i, j))
    }

    pub fn try_map<Q>(self, mut f: impl FnMut(NetIndex, P) -> Result<Q>) -> Result<TriControlNet<Q>> {
        let points = tri_indices(self.degree)
            .zip(self.points)
            .map(|((i, j, k), p)| f(NetIndex::Tri(i, j, k), p))
            .collect::<Result<_>>()?;
        Ok(TriControlNet { degree: self.degree, frame: self.frame, points })
    }
}

fn check_map(map: &SurfaceMap, m: usize) -> Result<()> {
    for (n, poly) in map.numerators().iter().enumerate() {
        check_degree(poly, m, || format!("coordinate {}", n + 1))?;
    }
    check_degree(map.denominator(), m, || "denominator".into())
}

pub fn homogeneous_net(map: &SurfaceMap, m: usize, frame: &AffineFrame2) -> Result<TriControlNet<HomogeneousPoint>> {
    check_map(map, m)?;
    let points = tri_indices(m)
        .map(|(i, j, k)| {
            let table = SigmaTableTri::build(&frame.control_args(i, j, k));
            HomogeneousPoint {
                coords: map.numerators().iter().map(|poly| table.combine(poly)).collect(),
                weight: table.combine(map.denominator()),
            }
        })
        .collect();
    Ok(TriControlNet { degree: m, frame: frame.clone(), points })
}

pub fn tri_control_net(map: &SurfaceMap, m: usize, frame: &AffineFrame2) -> Result<TriControlNet> {
    homogeneous_net(map, m, frame)?.try_map(|index, p| p.to_weighted().ok_or(Error::ZeroWeight { index }))
}
