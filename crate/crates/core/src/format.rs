//! Serialization of control nets: canonical JSON, brace-list text, and
//! OBJ meshes sampled from the nets.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::curve::{AffineFrame1, CurveControlNet};
use crate::error::{Error, Result};
use crate::oracle;
use crate::rational::{ControlNet, ControlPoint, HomogeneousPoint, NetIndex, NetKind, WeightedPoint};
use crate::rect::{FramePair, RectControlNet};
use crate::scalar::Ratio;
use crate::tri::{tri_indices, AffineFrame2, Point2, TriControlNet};

/// A net in either display form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OutputNet {
    Weighted(ControlNet<WeightedPoint>),
    Homogeneous(ControlNet<HomogeneousPoint>),
}

impl OutputNet {
    pub fn kind(&self) -> NetKind {
        match self {
            OutputNet::Weighted(n) => n.kind(),
            OutputNet::Homogeneous(n) => n.kind(),
        }
    }

    pub fn dim(&self) -> usize {
        match self {
            OutputNet::Weighted(n) => n.dim(),
            OutputNet::Homogeneous(n) => n.dim(),
        }
    }

    pub fn len(&self) -> usize {
        match self {
            OutputNet::Weighted(n) => n.len(),
            OutputNet::Homogeneous(n) => n.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Rows of `(index, coordinates, weight)`, coordinates in the net's own form.
    pub fn rows(&self) -> Vec<(NetIndex, Vec<Ratio>, Ratio)> {
        match self {
            OutputNet::Weighted(n) => {
                n.indexed().into_iter().map(|(i, p)| (i, p.affine.clone(), p.weight.clone())).collect()
            }
            OutputNet::Homogeneous(n) => {
                n.indexed().into_iter().map(|(i, p)| (i, p.coords.clone(), p.weight.clone())).collect()
            }
        }
    }

    pub fn project(&self, keep: &[usize]) -> Result<OutputNet> {
        Ok(match self {
            OutputNet::Weighted(n) => OutputNet::Weighted(crate::rational::project_coordinates(n, keep)?),
            OutputNet::Homogeneous(n) => OutputNet::Homogeneous(crate::rational::project_coordinates(n, keep)?),
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
enum FrameDoc {
    Interval([String; 2]),
    Triangle([[String; 2]; 3]),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
struct FramesDoc {
    u: [String; 2],
    v: [String; 2],
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct PointDoc {
    index: Vec<usize>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    affine: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    homogeneous: Option<Vec<String>>,
    weight: String,
}

/// On-disk JSON layout of a net.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct NetDocument {
    kind: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    degree: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    bidegree: Option<[usize; 2]>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    frame: Option<FrameDoc>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    frames: Option<FramesDoc>,
    points: Vec<PointDoc>,
}

fn strings(v: &[Ratio]) -> Vec<String> {
    v.iter().map(Ratio::to_string).collect()
}

fn interval(f: &AffineFrame1) -> [String; 2] {
    [f.r().to_string(), f.s().to_string()]
}

fn point_strings(p: &Point2) -> [String; 2] {
    [p.u.to_string(), p.v.to_string()]
}

fn ratio(s: &str) -> Result<Ratio> {
    s.parse().map_err(|_| Error::Document(format!("bad rational {s:?}")))
}

fn ratios(v: &[String]) -> Result<Vec<Ratio>> {
    v.iter().map(|s| ratio(s)).collect()
}

fn doc_err(msg: impl Into<String>) -> Error {
    Error::Document(msg.into())
}

impl NetDocument {
    pub fn from_net(net: &OutputNet) -> NetDocument {
        let homogeneous = matches!(net, OutputNet::Homogeneous(_));
        let points = net
            .rows()
            .into_iter()
            .map(|(index, coords, weight)| {
                let coords = strings(&coords);
                PointDoc {
                    index: index.to_vec(),
                    affine: (!homogeneous).then(|| coords.clone()),
                    homogeneous: homogeneous.then_some(coords),
                    weight: weight.to_string(),
                }
            })
            .collect();
        let mut doc = NetDocument {
            kind: net.kind().name().to_string(),
            degree: None,
            bidegree: None,
            frame: None,
            frames: None,
            points,
        };
        let shape = match net {
            OutputNet::Weighted(n) => Shape::of(n),
            OutputNet::Homogeneous(n) => Shape::of(n),
        };
        match shape {
            Shape::Curve(m, f) => {
                doc.degree = Some(m);
                doc.frame = Some(FrameDoc::Interval(interval(&f)));
            }
            Shape::Rect((p, q), f) => {
                doc.bidegree = Some([p, q]);
                doc.frames = Some(FramesDoc { u: interval(&f.u), v: interval(&f.v) });
            }
            Shape::Tri(m, f) => {
                let [r, s, t] = f.vertices();
                doc.degree = Some(m);
                doc.frame = Some(FrameDoc::Triangle([point_strings(r), point_strings(s), point_strings(t)]));
            }
        }
        doc
    }

    pub fn to_net(&self) -> Result<OutputNet> {
        let homogeneous = match self.points.first() {
            Some(p) => p.homogeneous.is_some(),
            None => return Err(doc_err("no points")),
        };
        let mut rows = Vec::with_capacity(self.points.len());
        for p in &self.points {
            let coords = match (&p.affine, &p.homogeneous, homogeneous) {
                (Some(a), None, false) => a,
                (None, Some(h), true) => h,
                _ => return Err(doc_err(format!("point {:?} mixes or lacks coordinate forms", p.index))),
            };
            rows.push((p.index.clone(), ratios(coords)?, ratio(&p.weight)?));
        }
        let dim = rows[0].1.len();
        if rows.iter().any(|r| r.1.len() != dim) {
            return Err(doc_err("points have different dimensions"));
        }
        let shape = match (self.kind.as_str(), &self.frame, &self.frames) {
            ("curve", Some(FrameDoc::Interval([r, s])), None) => {
                let m = self.degree.ok_or_else(|| doc_err("curve without degree"))?;
                Shape::Curve(m, AffineFrame1::new(ratio(r)?, ratio(s)?)?)
            }
            ("rect", None, Some(f)) => {
                let [p, q] = self.bidegree.ok_or_else(|| doc_err("rect without bidegree"))?;
                let u = AffineFrame1::new(ratio(&f.u[0])?, ratio(&f.u[1])?)?;
                let v = AffineFrame1::new(ratio(&f.v[0])?, ratio(&f.v[1])?)?;
                Shape::Rect((p, q), FramePair::new(u, v))
            }
            ("tri", Some(FrameDoc::Triangle(vs)), None) => {
                let m = self.degree.ok_or_else(|| doc_err("tri without degree"))?;
                let pt = |p: &[String; 2]| -> Result<Point2> { Ok(Point2 { u: ratio(&p[0])?, v: ratio(&p[1])? }) };
                Shape::Tri(m, AffineFrame2::new(pt(&vs[0])?, pt(&vs[1])?, pt(&vs[2])?)?)
            }
            (k, _, _) => return Err(doc_err(format!("kind {k:?} with missing or mismatched frame"))),
        };
        if homogeneous {
            let pts = rows.into_iter().map(|(i, coords, weight)| (i, HomogeneousPoint { coords, weight }));
            Ok(OutputNet::Homogeneous(shape.assemble(pts.collect())?))
        } else {
            let pts = rows.into_iter().map(|(i, affine, weight)| (i, WeightedPoint { affine, weight }));
            Ok(OutputNet::Weighted(shape.assemble(pts.collect())?))
        }
    }
}

enum Shape {
    Curve(usize, AffineFrame1),
    Rect((usize, usize), FramePair),
    Tri(usize, AffineFrame2),
}

impl Shape {
    fn of<P>(net: &ControlNet<P>) -> Shape {
        match net {
            ControlNet::Curve(n) => Shape::Curve(n.degree, n.frame.clone()),
            ControlNet::Rect(n) => Shape::Rect(n.bidegree, n.frames.clone()),
            ControlNet::Tri(n) => Shape::Tri(n.degree, n.frame.clone()),
        }
    }

    /// Rebuild a net from points listed in canonical order.
    fn assemble<P>(self, pts: Vec<(Vec<usize>, P)>) -> Result<ControlNet<P>> {
        let expected: Vec<Vec<usize>> = match &self {
            Shape::Curve(m, _) => (0..=*m).map(|j| vec![j]).collect(),
            Shape::Rect((p, q), _) => (0..=*p).flat_map(|i| (0..=*q).map(move |j| vec![i, j])).collect(),
            Shape::Tri(m, _) => tri_indices(*m).map(|(i, j, k)| vec![i, j, k]).collect(),
        };
        if pts.len() != expected.len() {
            return Err(doc_err(format!("expected {} points, found {}", expected.len(), pts.len())));
        }
        if let Some(((got, _), want)) = pts.iter().zip(&expected).find(|((got, _), want)| got != *want) {
            return Err(doc_err(format!("point index {got:?} where {want:?} was expected")));
        }
        let mut points = pts.into_iter().map(|(_, p)| p);
        Ok(match self {
            Shape::Curve(degree, frame) => {
                ControlNet::Curve(CurveControlNet { degree, frame, points: points.collect() })
            }
            Shape::Rect(bidegree, frames) => {
                let rows = (0..=bidegree.0).map(|_| points.by_ref().take(bidegree.1 + 1).collect()).collect();
                ControlNet::Rect(RectControlNet { bidegree, frames, points: rows })
            }
            Shape::Tri(degree, frame) => ControlNet::Tri(TriControlNet { degree, frame, points: points.collect() }),
        })
    }
}

/// Canonical pretty-printed JSON, newline terminated.
pub fn to_json(net: &OutputNet) -> String {
    let mut s = serde_json::to_string_pretty(&NetDocument::from_net(net)).expect("document serializes");
    s.push('\n');
    s
}

pub fn from_json(text: &str) -> Result<OutputNet> {
    let doc: NetDocument = serde_json::from_str(text).map_err(|e| Error::Document(e.to_string()))?;
    doc.to_net()
}

/// Brace listing `{{x, y, w}, ...}`, optionally as `label = {...};`.
pub fn to_paper(net: &OutputNet, label: Option<&str>) -> String {
    let body = net
        .rows()
        .into_iter()
        .map(|(_, coords, w)| {
            let items: Vec<String> = coords.iter().chain(std::iter::once(&w)).map(Ratio::to_string).collect();
            format!("{{{}}}", items.join(", "))
        })
        .collect::<Vec<_>>()
        .join(", ");
    match label {
        Some(name) => format!("{name} = {{{body}}};\n"),
        None => format!("{{{body}}}\n"),
    }
}

/// What to do when the weight vanishes at a sample point.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum SingularPolicy {
    #[default]
    Fail,
    Skip,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ObjOptions {
    pub samples: usize,
    pub precision: usize,
    pub singular: SingularPolicy,
}

impl Default for ObjOptions {
    fn default() -> Self {
        ObjOptions { samples: 16, precision: 12, singular: SingularPolicy::Fail }
    }
}

/// Mesh text plus one warning per skipped sample.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mesh {
    pub text: String,
    pub warnings: Vec<String>,
}

fn grid(frame: &AffineFrame1, n: usize, i: usize) -> Ratio {
    let step = Ratio::new(i as i64, (n - 1) as i64).expect("n >= 2");
    frame.r() + step * (frame.s() - frame.r())
}

/// Tessellate the net by exact evaluation on a uniform grid.
pub fn emit_obj<P: ControlPoint>(net: &ControlNet<P>, opts: &ObjOptions) -> Result<Mesh> {
    let n = opts.samples;
    if n < 2 {
        return Err(Error::InvalidArgument { field: "--samples".into(), detail: format!("need at least 2, got {n}") });
    }
    let dim = net.dim();
    if !(2..=3).contains(&dim) {
        return Err(Error::Dimension(format!(
            "OBJ output needs 2 or 3 coordinates, the net has {dim}; drop coordinates first"
        )));
    }
    let mut samples: Vec<Result<Vec<Ratio>>> = Vec::new();
    let mut faces: Vec<Vec<usize>> = Vec::new();
    let polyline;
    match net {
        ControlNet::Curve(c) => {
            polyline = true;
            for i in 0..n {
                samples.push(oracle::decasteljau_curve(c, &grid(&c.frame, n, i)));
            }
            faces.push((0..n).collect());
        }
        ControlNet::Rect(r) => {
            polyline = false;
            for i in 0..n {
                let u = grid(&r.frames.u, n, i);
                for j in 0..n {
                    samples.push(oracle::decasteljau_rect(r, &u, &grid(&r.frames.v, n, j)));
                }
            }
            for i in 0..n - 1 {
                for j in 0..n - 1 {
                    let at = |a: usize, b: usize| a * n + b;
                    faces.push(vec![at(i, j), at(i + 1, j), at(i + 1, j + 1), at(i, j + 1)]);
                }
            }
        }
        ControlNet::Tri(t) => {
            polyline = false;
            // vertex (i, j) has barycentric coordinates (i, j, n-1-i-j) / (n-1)
            let d = n - 1;
            let [r, s, tt] = t.frame.vertices();
            let mut pos = vec![vec![0; n]; n];
            for i in 0..=d {
                for j in 0..=d - i {
                    let a = Ratio::new(i as i64, d as i64).expect("d > 0");
                    let b = Ratio::new(j as i64, d as i64).expect("d > 0");
                    let c = Ratio::one() - &a - &b;
                    let at = Point2 { u: &a * &r.u + &b * &s.u + &c * &tt.u, v: &a * &r.v + &b * &s.v + &c * &tt.v };
                    pos[i][j] = samples.len();
                    samples.push(oracle::decasteljau_tri(t, &at));
                }
            }
            for i in 0..d {
                for j in 0..d - i {
                    faces.push(vec![pos[i][j], pos[i + 1][j], pos[i][j + 1]]);
                    if i + j + 1 < d {
                        faces.push(vec![pos[i + 1][j], pos[i + 1][j + 1], pos[i][j + 1]]);
                    }
                }
            }
        }
    }

    let mut text = String::new();
    let mut warnings = Vec::new();
    let mut number = vec![None; samples.len()];
    let mut next = 1;
    for (slot, sample) in samples.into_iter().enumerate() {
        match sample {
            Ok(p) => {
                let mut coords: Vec<String> = p.iter().map(|x| x.to_decimal(opts.precision)).collect();
                if coords.len() == 2 {
                    coords.push("0".into());
                }
                writeln!(text, "v {}", coords.join(" ")).expect("string write");
                number[slot] = Some(next);
                next += 1;
            }
            Err(e @ Error::VanishingWeight(_)) => match opts.singular {
                SingularPolicy::Fail => return Err(e),
                SingularPolicy::Skip => warnings.push(format!("skipped sample: {e}")),
            },
            Err(e) => return Err(e),
        }
    }
    for face in &faces {
        if polyline {
            // split the polyline at skipped samples
            for run in face.split(|&v| number[v].is_none()).filter(|r| r.len() >= 2) {
                let ids: Vec<String> = run.iter().map(|&v| number[v].unwrap().to_string()).collect();
                writeln!(text, "l {}", ids.join(" ")).expect("string write");
            }
        } else if let Some(ids) = face.iter().map(|&v| number[v]).collect::<Option<Vec<usize>>>() {
            let ids: Vec<String> = ids.iter().map(usize::to_string).collect();
            writeln!(text, "f {}", ids.join(" ")).expect("string write");
        }
    }
    Ok(Mesh { text, warnings })
}

pub fn emit_obj_any(net: &OutputNet, opts: &ObjOptions) -> Result<Mesh> {
    match net {
        OutputNet::Weighted(n) => emit_obj(n, opts),
        OutputNet::Homogeneous(n) => emit_obj(n, opts),
    }
}
