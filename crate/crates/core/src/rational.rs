//! Weighted control points for rational maps.
//!
//! Every component of a map (each numerator and the shared denominator) is
//! polarized at the same argument tuple. The numerator values are the
//! homogeneous coordinates of the control point and the denominator value is
//! its weight. The display form divides the coordinates by the weight.

use std::fmt;

use crate::curve::{self, AffineFrame1, CurveControlNet};
use crate::error::{Error, Result};
use crate::poly::{CurveMap, SurfaceMap};
use crate::rect::{self, FramePair, RectControlNet};
use crate::scalar::Ratio;
use crate::tri::{self, AffineFrame2, TriControlNet};

/// Control point with coordinates already divided by the weight.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightedPoint {
    pub affine: Vec<Ratio>,
    pub weight: Ratio,
}

/// Control point in homogeneous form: `coords = affine * weight`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomogeneousPoint {
    pub coords: Vec<Ratio>,
    pub weight: Ratio,
}

impl WeightedPoint {
    /// Unit-weight point.
    pub fn affine(affine: Vec<Ratio>) -> Self {
        WeightedPoint { affine, weight: Ratio::one() }
    }
}

impl HomogeneousPoint {
    /// `None` when the weight is zero.
    pub fn to_weighted(&self) -> Option<WeightedPoint> {
        let affine = self.coords.iter().map(|c| c.checked_div(&self.weight)).collect::<Result<Vec<_>>>().ok()?;
        Some(WeightedPoint { affine, weight: self.weight.clone() })
    }

    pub fn to_affine(&self) -> Result<Vec<Ratio>> {
        self.coords.iter().map(|c| c.checked_div(&self.weight)).collect()
    }

    pub(crate) fn lerp(&self, other: &HomogeneousPoint, lambda: &Ratio) -> HomogeneousPoint {
        let mu = Ratio::one() - lambda;
        HomogeneousPoint {
            coords: self.coords.iter().zip(&other.coords).map(|(a, b)| &mu * a + lambda * b).collect(),
            weight: &mu * &self.weight + lambda * &other.weight,
        }
    }
}

/// Anything a de Casteljau evaluator can consume.
pub trait ControlPoint: Clone {
    fn homogeneous(&self) -> HomogeneousPoint;
    fn dim(&self) -> usize;
    /// Keep only the listed coordinates, in the listed order.
    fn project(&self, keep: &[usize]) -> Self;
}

impl ControlPoint for WeightedPoint {
    fn homogeneous(&self) -> HomogeneousPoint {
        HomogeneousPoint { coords: self.affine.iter().map(|a| a * &self.weight).collect(), weight: self.weight.clone() }
    }

    fn dim(&self) -> usize {
        self.affine.len()
    }

    fn project(&self, keep: &[usize]) -> Self {
        WeightedPoint { affine: keep.iter().map(|&i| self.affine[i].clone()).collect(), weight: self.weight.clone() }
    }
}

impl ControlPoint for HomogeneousPoint {
    fn homogeneous(&self) -> HomogeneousPoint {
        self.clone()
    }

    fn dim(&self) -> usize {
        self.coords.len()
    }

    fn project(&self, keep: &[usize]) -> Self {
        HomogeneousPoint { coords: keep.iter().map(|&i| self.coords[i].clone()).collect(), weight: self.weight.clone() }
    }
}

/// Position of a control point in its net.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum NetIndex {
    Curve(usize),
    Rect(usize, usize),
    Tri(usize, usize, usize),
}

impl NetIndex {
    pub fn to_vec(self) -> Vec<usize> {
        match self {
            NetIndex::Curve(j) => vec![j],
            NetIndex::Rect(i, j) => vec![i, j],
            NetIndex::Tri(i, j, k) => vec![i, j, k],
        }
    }
}

impl fmt::Display for NetIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NetIndex::Curve(j) => write!(f, "b_{j}"),
            NetIndex::Rect(i, j) => write!(f, "b_({i},{j})"),
            NetIndex::Tri(i, j, k) => write!(f, "b_({i},{j},{k})"),
        }
    }
}

/// A map of either kind.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AnyMap {
    Curve(CurveMap),
    Surface(SurfaceMap),
}

impl AnyMap {
    pub fn dim(&self) -> usize {
        match self {
            AnyMap::Curve(m) => m.dim(),
            AnyMap::Surface(m) => m.dim(),
        }
    }
}

/// Degree and frame of the net to compute.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NetSpec {
    Curve { degree: usize, frame: AffineFrame1 },
    Rect { bidegree: (usize, usize), frames: FramePair },
    Tri { degree: usize, frame: AffineFrame2 },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NetKind {
    Curve,
    Rect,
    Tri,
}

impl NetKind {
    pub fn name(self) -> &'static str {
        match self {
            NetKind::Curve => "curve",
            NetKind::Rect => "rect",
            NetKind::Tri => "tri",
        }
    }
}

/// Control net of any kind.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ControlNet<P = WeightedPoint> {
    Curve(CurveControlNet<P>),
    Rect(RectControlNet<P>),
    Tri(TriControlNet<P>),
}

impl<P> ControlNet<P> {
    pub fn kind(&self) -> NetKind {
        match self {
            ControlNet::Curve(_) => NetKind::Curve,
            ControlNet::Rect(_) => NetKind::Rect,
            ControlNet::Tri(_) => NetKind::Tri,
        }
    }

    /// Points in output order with their indices.
    pub fn indexed(&self) -> Vec<(NetIndex, &P)> {
        match self {
            ControlNet::Curve(n) => n.indexed().collect(),
            ControlNet::Rect(n) => n.indexed().collect(),
            ControlNet::Tri(n) => n.indexed().collect(),
        }
    }

    pub fn len(&self) -> usize {
        match self {
            ControlNet::Curve(n) => n.points.len(),
            ControlNet::Rect(n) => n.points.iter().map(Vec::len).sum(),
            ControlNet::Tri(n) => n.points.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn try_map<Q>(self, f: impl FnMut(NetIndex, P) -> Result<Q>) -> Result<ControlNet<Q>> {
        Ok(match self {
            ControlNet::Curve(n) => ControlNet::Curve(n.try_map(f)?),
            ControlNet::Rect(n) => ControlNet::Rect(n.try_map(f)?),
            ControlNet::Tri(n) => ControlNet::Tri(n.try_map(f)?),
        })
    }
}

impl<P: ControlPoint> ControlNet<P> {
    pub fn dim(&self) -> usize {
        self.indexed().first().map_or(0, |(_, p)| p.dim())
    }
}

impl ControlNet<HomogeneousPoint> {
    /// Divide through by the weights; fails naming the first zero-weight point.
    pub fn into_weighted(self) -> Result<ControlNet<WeightedPoint>> {
        self.try_map(|index, p| p.to_weighted().ok_or(Error::ZeroWeight { index }))
    }
}

/// Polarize every numerator and the denominator at each net index, giving
/// the net in homogeneous form. Zero weights are allowed here.
pub fn lift_homogeneous(map: &AnyMap, spec: &NetSpec) -> Result<ControlNet<HomogeneousPoint>> {
    match (map, spec) {
        (AnyMap::Curve(m), NetSpec::Curve { degree, frame }) => {
            Ok(ControlNet::Curve(curve::homogeneous_net(m, *degree, frame)?))
        }
        (AnyMap::Surface(m), NetSpec::Rect { bidegree, frames }) => {
            Ok(ControlNet::Rect(rect::homogeneous_net(m, *bidegree, frames)?))
        }
        (AnyMap::Surface(m), NetSpec::Tri { degree, frame }) => {
            Ok(ControlNet::Tri(tri::homogeneous_net(m, *degree, frame)?))
        }
        (AnyMap::Curve(_), _) => Err(Error::KindMismatch("a curve map needs a curve frame".into())),
        (AnyMap::Surface(_), _) => Err(Error::KindMismatch("a surface map needs a rect or tri frame".into())),
    }
}

/// Weighted control net of a rational (or polynomial) map. A zero weight is
/// reported as [`Error::ZeroWeight`]; use [`lift_homogeneous`] to get such
/// nets in homogeneous form.
pub fn lift_and_polarize(map: &AnyMap, spec: &NetSpec) -> Result<ControlNet<WeightedPoint>> {
    lift_homogeneous(map, spec)?.into_weighted()
}

/// Parallel projection: keep the listed coordinates (0-based) of every point;
/// weights are unchanged.
pub fn project_coordinates<P: ControlPoint>(net: &ControlNet<P>, keep: &[usize]) -> Result<ControlNet<P>> {
    let dim = net.dim();
    if let Some(&bad) = keep.iter().find(|&&i| i >= dim) {
        return Err(Error::CoordinateOutOfRange { index: bad, dim });
    }
    net.clone().try_map(|_, p| Ok(p.project(keep)))
}
