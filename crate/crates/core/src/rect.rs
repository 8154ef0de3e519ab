//! Rectangular control nets of bipolynomial (tensor-product) surfaces.
//!
//! `u^h v^k` is polarized separately in `u` (degree `p`) and `v` (degree `q`).
//! Its scaled polar value `sigma^(i,j)_(h,k) = e_h(u_1..u_i) * e_k(v_1..v_j)`
//! is filled as a 4-index table: the `k = 0` cells by the `u` rule, the
//! `h = 0` cells by the `v` rule and all other cells by the four-term rule
//! reaching back to `(i-1, j-1)`.

use crate::curve::AffineFrame1;
use crate::error::{Error, Result};
use crate::poly::{Poly2, SurfaceMap};
use crate::rational::{HomogeneousPoint, NetIndex, WeightedPoint};
use crate::scalar::{binomial, Ratio};

/// One frame per parameter.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FramePair {
    pub u: AffineFrame1,
    pub v: AffineFrame1,
}

impl FramePair {
    pub fn new(u: AffineFrame1, v: AffineFrame1) -> Self {
        FramePair { u, v }
    }

    /// `(0, 1) x (0, 1)`.
    pub fn unit() -> Self {
        FramePair { u: AffineFrame1::unit(), v: AffineFrame1::unit() }
    }
}

/// Cells `sigma^(i,j)_(h,k)` for `h <= i <= p`, `k <= j <= q`.
#[derive(Clone, Debug)]
pub struct SigmaTableRect {
    u_args: Vec<Ratio>,
    v_args: Vec<Ratio>,
    // cells[i][j][h][k]
    cells: Vec<Vec<Vec<Vec<Ratio>>>>,
    interior_updates: usize,
}

fn read(cells: &[Vec<Vec<Vec<Ratio>>>], i: usize, j: usize, h: usize, k: usize) -> Ratio {
    cells.get(i).and_then(|c| c.get(j)).and_then(|c| c.get(h)).and_then(|c| c.get(k)).cloned().unwrap_or_default()
}

impl SigmaTableRect {
    pub fn build(u_args: &[Ratio], v_args: &[Ratio]) -> Self {
        let (p, q) = (u_args.len(), v_args.len());
        let mut cells: Vec<Vec<Vec<Vec<Ratio>>>> = Vec::with_capacity(p + 1);
        let mut interior_updates = 0;
        for i in 0..=p {
            cells.push(Vec::with_capacity(q + 1));
            for j in 0..=q {
                let mut layer = vec![vec![Ratio::zero(); j + 1]; i + 1];
                for (h, row) in layer.iter_mut().enumerate() {
                    for (k, cell) in row.iter_mut().enumerate() {
                        *cell = match (h, k) {
                            (0, 0) => Ratio::one(),
                            (0, _) => {
                                let v = &v_args[j - 1];
                                read(&cells, i, j - 1, 0, k) + v * read(&cells, i, j - 1, 0, k - 1)
                            }
                            (_, 0) => {
                                let u = &u_args[i - 1];
                                read(&cells, i - 1, j, h, 0) + u * read(&cells, i - 1, j, h - 1, 0)
                            }
                            _ => {
                                let (u, v) = (&u_args[i - 1], &v_args[j - 1]);
                                read(&cells, i - 1, j - 1, h, k)
                                    + u * read(&cells, i - 1, j - 1, h - 1, k)
                                    + v * read(&cells, i - 1, j - 1, h, k - 1)
                                    + u * v * read(&cells, i - 1, j - 1, h - 1, k - 1)
                            }
                        };
                        if (h, k) != (0, 0) {
                            interior_updates += 1;
                        }
                    }
                }
                cells[i].push(layer);
            }
        }
        SigmaTableRect { u_args: u_args.to_vec(), v_args: v_args.to_vec(), cells, interior_updates }
    }

    pub fn bidegree(&self) -> (usize, usize) {
        (self.u_args.len(), self.v_args.len())
    }

    /// `sigma^(i,j)_(h,k)`; zero outside the table.
    pub fn sigma(&self, i: usize, j: usize, h: usize, k: usize) -> Ratio {
        read(&self.cells, i, j, h, k)
    }

    pub fn cell_count(&self) -> usize {
        self.cells.iter().flatten().flatten().map(Vec::len).sum()
    }

    /// Cells filled by a recurrence branch (all but the `(h, k) = (0, 0)`
    /// base cells).
    pub fn interior_updates(&self) -> usize {
        self.interior_updates
    }

    /// `f^(p,q)_(h,k) = sigma^(p,q)_(h,k) / (C(p,h) C(q,k))`.
    pub fn polar(&self, h: usize, k: usize) -> Ratio {
        let (p, q) = self.bidegree();
        if h > p || k > q {
            return Ratio::zero();
        }
        let count = binomial(p as u64, h as i64) * binomial(q as u64, k as i64);
        self.sigma(p, q, h, k).div_int(&count).expect("in range")
    }

    pub fn combine(&self, poly: &Poly2) -> Ratio {
        poly.terms().map(|((h, k), a)| a * self.polar(h as usize, k as usize)).sum()
    }
}

pub fn sigma_table_rect(u_args: &[Ratio], v_args: &[Ratio]) -> SigmaTableRect {
    SigmaTableRect::build(u_args, v_args)
}

/// Unscaled polar values through the direct three-branch `f` recurrence.
#[derive(Clone, Debug)]
pub struct DirectTableRect {
    p: usize,
    q: usize,
    cells: Vec<Vec<Vec<Vec<Ratio>>>>,
}

impl DirectTableRect {
    pub fn build(u_args: &[Ratio], v_args: &[Ratio]) -> Self {
        let (p, q) = (u_args.len(), v_args.len());
        let frac = |a: usize, b: usize| Ratio::new(a as i64, b as i64).expect("nonzero denominator");
        let mut cells: Vec<Vec<Vec<Vec<Ratio>>>> = Vec::with_capacity(p + 1);
        for i in 0..=p {
            cells.push(Vec::with_capacity(q + 1));
            for j in 0..=q {
                let mut layer = vec![vec![Ratio::zero(); j + 1]; i + 1];
                for (h, row) in layer.iter_mut().enumerate() {
                    for (k, cell) in row.iter_mut().enumerate() {
                        *cell = match (h, k) {
                            (0, 0) => Ratio::one(),
                            (0, _) => {
                                let v = &v_args[j - 1];
                                frac(j - k, j) * read(&cells, i, j - 1, 0, k)
                                    + frac(k, j) * v * read(&cells, i, j - 1, 0, k - 1)
                            }
                            (_, 0) => {
                                let u = &u_args[i - 1];
                                frac(i - h, i) * read(&cells, i - 1, j, h, 0)
                                    + frac(h, i) * u * read(&cells, i - 1, j, h - 1, 0)
                            }
                            _ => {
                                let (u, v) = (&u_args[i - 1], &v_args[j - 1]);
                                let ij = i * j;
                                frac((i - h) * (j - k), ij) * read(&cells, i - 1, j - 1, h, k)
                                    + frac(h * (j - k), ij) * u * read(&cells, i - 1, j - 1, h - 1, k)
                                    + frac((i - h) * k, ij) * v * read(&cells, i - 1, j - 1, h, k - 1)
                                    + frac(h * k, ij) * u * v * read(&cells, i - 1, j - 1, h - 1, k - 1)
                            }
                        };
                    }
                }
                cells[i].push(layer);
            }
        }
        DirectTableRect { p, q, cells }
    }

    pub fn polar(&self, h: usize, k: usize) -> Ratio {
        read(&self.cells, self.p, self.q, h, k)
    }

    pub fn combine(&self, poly: &Poly2) -> Ratio {
        poly.terms().map(|((h, k), a)| a * self.polar(h as usize, k as usize)).sum()
    }
}

fn check_bidegree(poly: &Poly2, p: usize, q: usize, what: impl FnOnce() -> String) -> Result<()> {
    let du = poly.maxdeg_u().unwrap_or(0) as usize;
    let dv = poly.maxdeg_v().unwrap_or(0) as usize;
    if du > p || dv > q {
        return Err(Error::DegreeOverflow {
            what: what(),
            actual: format!("({du},{dv})"),
            bound: format!("({p},{q})"),
        });
    }
    Ok(())
}

/// Polar value of `poly` with respect to bidegree `(u_args.len(), v_args.len())`.
pub fn polar_value_rect(poly: &Poly2, u_args: &[Ratio], v_args: &[Ratio]) -> Result<Ratio> {
    check_bidegree(poly, u_args.len(), v_args.len(), || "polynomial".into())?;
    Ok(SigmaTableRect::build(u_args, v_args).combine(poly))
}

pub fn polar_value_rect_direct(poly: &Poly2, u_args: &[Ratio], v_args: &[Ratio]) -> Result<Ratio> {
    check_bidegree(poly, u_args.len(), v_args.len(), || "polynomial".into())?;
    Ok(DirectTableRect::build(u_args, v_args).combine(poly))
}

/// Polar value of `u^h v^k` over the frames `(0,1)`, with `zeros_u` of the
/// `u` arguments and `zeros_v` of the `v` arguments equal to 0 and the rest
/// equal to 1: `C(p - zeros_u, h) C(q - zeros_v, k) / (C(p,h) C(q,k))`.
pub fn closed_form_rect(p: usize, q: usize, zeros_u: usize, zeros_v: usize, h: usize, k: usize) -> Ratio {
    if h > p || k > q || zeros_u > p || zeros_v > q {
        return Ratio::zero();
    }
    let num = binomial((p - zeros_u) as u64, h as i64) * binomial((q - zeros_v) as u64, k as i64);
    let den = binomial(p as u64, h as i64) * binomial(q as u64, k as i64);
    Ratio::from_integer(num).div_int(&den).expect("h <= p, k <= q")
}

/// `(p+1) x (q+1)` grid, row `i` (u index) outer, column `j` (v index) inner.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RectControlNet<P = WeightedPoint> {
    pub bidegree: (usize, usize),
    pub frames: FramePair,
    pub points: Vec<Vec<P>>,
}

impl<P> RectControlNet<P> {
    pub fn indexed(&self) -> impl Iterator<Item = (NetIndex, &P)> + '_ {
        self.points
            .iter()
            .enumerate()
            .flat_map(|(i, row)| row.iter().enumerate().map(move |(j, p)| (NetIndex::Rect(i, j), p)))
    }

    pub fn get(&self, i: usize, j: usize) -> Option<&P> {
        self.points.get(i).and_then(|r| r.get(j))
    }

    pub fn try_map<Q>(self, mut f: impl FnMut(NetIndex, P) -> Result<Q>) -> Result<RectControlNet<Q>> {
        let mut points = Vec::with_capacity(self.points.len());
        for (i, row) in self.points.into_iter().enumerate() {
            let row =
                row.into_iter().enumerate().map(|(j, p)| f(NetIndex::Rect(i, j), p)).collect::<Result<Vec<_>>>()?;
            points.push(row);
        }
        Ok(RectControlNet { bidegree: self.bidegree, frames: self.frames, points })
    }
}

fn check_map(map: &SurfaceMap, p: usize, q: usize) -> Result<()> {
    for (n, poly) in map.numerators().iter().enumerate() {
        check_bidegree(poly, p, q, || format!("coordinate {}", n + 1))?;
    }
    check_bidegree(map.denominator(), p, q, || "denominator".into())
}

/// Homogeneous rectangular net: `b_(i,j)` is the polar value at
/// `(r1 x (p-i), s1 x i; r2 x (q-j), s2 x j)`.
pub fn homogeneous_net(
    map: &SurfaceMap,
    (p, q): (usize, usize),
    frames: &FramePair,
) -> Result<RectControlNet<HomogeneousPoint>> {
    check_map(map, p, q)?;
    let points = (0..=p)
        .map(|i| {
            let u_args = frames.u.control_args(p, i);
            (0..=q)
                .map(|j| {
                    let table = SigmaTableRect::build(&u_args, &frames.v.control_args(q, j));
                    HomogeneousPoint {
                        coords: map.numerators().iter().map(|poly| table.combine(poly)).collect(),
                        weight: table.combine(map.denominator()),
                    }
                })
                .collect()
        })
        .collect();
    Ok(RectControlNet { bidegree: (p, q), frames: frames.clone(), points })
}

pub fn rect_control_net(map: &SurfaceMap, bidegree: (usize, usize), frames: &FramePair) -> Result<RectControlNet> {
    homogeneous_net(map, bidegree, frames)?.try_map(|index, p| p.to_weighted().ok_or(Error::ZeroWeight { index }))
}
