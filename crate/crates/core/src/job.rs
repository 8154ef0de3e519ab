//! One conversion job: parse the inputs, build the net, render it.

use std::io::Write;

use crate::curve::AffineFrame1;
use crate::error::{Error, Result};
use crate::expr::{parse_poly1, parse_poly2};
use crate::format::{self, ObjOptions, OutputNet, SingularPolicy};
use crate::oracle;
use crate::poly::{CurveMap, Poly1, Poly2, SurfaceMap};
use crate::rational::{lift_homogeneous, AnyMap, ControlNet, HomogeneousPoint, NetIndex, NetKind, NetSpec};
use crate::rect::FramePair;
use crate::scalar::Ratio;
use crate::tri::{AffineFrame2, Point2};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum OutputFormat {
    #[default]
    Json,
    Paper,
    Obj,
}

/// Everything the command line can ask for.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JobSpec {
    pub kind: NetKind,
    pub coords: Vec<String>,
    pub denom: Option<String>,
    pub degree: Option<usize>,
    pub bidegree: Option<(usize, usize)>,
    /// Curve frame `r,s`.
    pub frame: Option<String>,
    pub frame_u: Option<String>,
    pub frame_v: Option<String>,
    pub tri_frame: Option<String>,
    pub format: OutputFormat,
    pub samples: usize,
    pub precision: usize,
    /// 1-based coordinates to remove before output.
    pub drop_coords: Vec<usize>,
    pub homogeneous: bool,
    pub verify: bool,
    /// Upper bound on the oracle problem size for `verify`.
    pub oracle_limit: Option<usize>,
    pub label: Option<String>,
    pub skip_singular: bool,
}

impl JobSpec {
    pub fn new(kind: NetKind, coords: Vec<String>) -> Self {
        JobSpec {
            kind,
            coords,
            denom: None,
            degree: None,
            bidegree: None,
            frame: None,
            frame_u: None,
            frame_v: None,
            tri_frame: None,
            format: OutputFormat::Json,
            samples: 16,
            precision: 12,
            drop_coords: Vec::new(),
            homogeneous: false,
            verify: false,
            oracle_limit: None,
            label: None,
            skip_singular: false,
        }
    }
}

/// Rendered output and any non-fatal diagnostics.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JobOutput {
    pub bytes: Vec<u8>,
    pub warnings: Vec<String>,
}

fn bad(field: &str, detail: impl Into<String>) -> Error {
    Error::InvalidArgument { field: field.into(), detail: detail.into() }
}

fn parse_ratio(field: &str, s: &str) -> Result<Ratio> {
    s.trim().parse().map_err(|_| bad(field, format!("{:?} is not a rational number", s.trim())))
}

/// `"r,s"` as an interval frame.
pub fn parse_frame1(field: &str, text: &str) -> Result<AffineFrame1> {
    let parts: Vec<&str> = text.split(',').collect();
    let [r, s] = parts.as_slice() else {
        return Err(bad(field, format!("expected \"r,s\", got {text:?}")));
    };
    AffineFrame1::new(parse_ratio(field, r)?, parse_ratio(field, s)?)
        .map_err(|e| Error::DegenerateFrame(format!("{field}: {e}")))
}

/// `"(a,b);(c,d);(e,f)"`. Barycentric triples `(a,b,c)` with `a + b + c = 1`
/// are accepted too and read as the point `(a, b)`.
pub fn parse_tri_frame(field: &str, text: &str) -> Result<AffineFrame2> {
    let vertices = text
        .split(';')
        .map(|part| {
            let inner = part
                .trim()
                .strip_prefix('(')
                .and_then(|p| p.strip_suffix(')'))
                .ok_or_else(|| bad(field, format!("vertex {:?} is not of the form (a,b)", part.trim())))?;
            let xs = inner.split(',').map(|x| parse_ratio(field, x)).collect::<Result<Vec<_>>>()?;
            match xs.as_slice() {
                [a, b] => Ok(Point2 { u: a.clone(), v: b.clone() }),
                [a, b, c] if (a + b + c).is_one() => Ok(Point2 { u: a.clone(), v: b.clone() }),
                [_, _, _] => Err(bad(field, format!("barycentric vertex ({inner}) does not sum to 1"))),
                _ => Err(bad(field, format!("vertex ({inner}) needs 2 coordinates"))),
            }
        })
        .collect::<Result<Vec<_>>>()?;
    let [r, s, t]: [Point2; 3] =
        vertices.try_into().map_err(|v: Vec<_>| bad(field, format!("expected 3 vertices, got {}", v.len())))?;
    AffineFrame2::new(r, s, t).map_err(|e| Error::DegenerateFrame(format!("{field}: {e}")))
}

fn coord_field(i: usize) -> String {
    format!("--coord {}", i + 1)
}

fn parse_polys<P>(
    spec: &JobSpec,
    parse: impl Fn(&str) -> Result<P, crate::expr::ParseError>,
) -> Result<(Vec<P>, Option<P>)> {
    if spec.coords.is_empty() {
        return Err(bad("--coord", "at least one coordinate expression is required"));
    }
    let nums = spec
        .coords
        .iter()
        .enumerate()
        .map(|(i, src)| parse(src).map_err(|source| Error::Parse { field: coord_field(i), source }))
        .collect::<Result<Vec<_>>>()?;
    let denom = spec
        .denom
        .as_deref()
        .map(|src| parse(src).map_err(|source| Error::Parse { field: "--denom".into(), source }))
        .transpose()?;
    Ok((nums, denom))
}

fn curve_map(spec: &JobSpec) -> Result<CurveMap> {
    let (nums, denom) = parse_polys(spec, parse_poly1)?;
    CurveMap::new(nums, denom.unwrap_or_else(Poly1::one)).map_err(|e| field_error("--denom", e))
}

fn surface_map(spec: &JobSpec) -> Result<SurfaceMap> {
    let (nums, denom) = parse_polys(spec, parse_poly2)?;
    SurfaceMap::new(nums, denom.unwrap_or_else(Poly2::one)).map_err(|e| field_error("--denom", e))
}

fn field_error(field: &str, e: Error) -> Error {
    match e {
        Error::InvalidMap(d) => bad(field, d),
        other => other,
    }
}

fn check_unused(spec: &JobSpec, flags: &[(&str, bool)]) -> Result<()> {
    for &(name, present) in flags {
        if present {
            return Err(bad(name, format!("not valid for a {} job", spec.kind.name())));
        }
    }
    Ok(())
}

/// Parse the map and degree/frame settings of a job.
pub fn net_spec(spec: &JobSpec) -> Result<(AnyMap, NetSpec)> {
    match spec.kind {
        NetKind::Curve => {
            check_unused(
                spec,
                &[
                    ("--bidegree", spec.bidegree.is_some()),
                    ("--frame-u", spec.frame_u.is_some()),
                    ("--frame-v", spec.frame_v.is_some()),
                    ("--tri-frame", spec.tri_frame.is_some()),
                ],
            )?;
            let map = curve_map(spec)?;
            let degree = spec.degree.unwrap_or_else(|| map.degree());
            let frame = match &spec.frame {
                Some(f) => parse_frame1("--frame", f)?,
                None => AffineFrame1::unit(),
            };
            Ok((AnyMap::Curve(map), NetSpec::Curve { degree, frame }))
        }
        NetKind::Rect => {
            check_unused(
                spec,
                &[
                    ("--degree", spec.degree.is_some()),
                    ("--frame", spec.frame.is_some()),
                    ("--tri-frame", spec.tri_frame.is_some()),
                ],
            )?;
            let map = surface_map(spec)?;
            let bidegree = spec.bidegree.unwrap_or_else(|| map.bidegree());
            let frame = |field: &str, f: &Option<String>| match f {
                Some(f) => parse_frame1(field, f),
                None => Ok(AffineFrame1::unit()),
            };
            let frames = FramePair::new(frame("--frame-u", &spec.frame_u)?, frame("--frame-v", &spec.frame_v)?);
            Ok((AnyMap::Surface(map), NetSpec::Rect { bidegree, frames }))
        }
        NetKind::Tri => {
            check_unused(
                spec,
                &[
                    ("--bidegree", spec.bidegree.is_some()),
                    ("--frame", spec.frame.is_some()),
                    ("--frame-u", spec.frame_u.is_some()),
                    ("--frame-v", spec.frame_v.is_some()),
                ],
            )?;
            let map = surface_map(spec)?;
            let degree = spec.degree.unwrap_or_else(|| map.total_degree());
            let frame = match &spec.tri_frame {
                Some(f) => parse_tri_frame("--tri-frame", f)?,
                None => AffineFrame2::standard(),
            };
            Ok((AnyMap::Surface(map), NetSpec::Tri { degree, frame }))
        }
    }
}

fn oracle_size(spec: &NetSpec) -> (usize, usize) {
    match spec {
        NetSpec::Curve { degree, .. } => (*degree, oracle::CURVE_LIMIT),
        NetSpec::Rect { bidegree, .. } => (bidegree.0 + bidegree.1, oracle::RECT_LIMIT),
        NetSpec::Tri { degree, .. } => (*degree, oracle::TRI_LIMIT),
    }
}

/// Recompute every control point by subset enumeration and compare.
pub fn verify_net(
    map: &AnyMap,
    spec: &NetSpec,
    net: &ControlNet<HomogeneousPoint>,
    limit: Option<usize>,
) -> Result<()> {
    let (size, hard) = oracle_size(spec);
    let limit = limit.map_or(hard, |l| l.min(hard));
    if size > limit {
        return Err(Error::OracleLimit { what: "verification size", size, limit });
    }
    for (index, point) in net.indexed() {
        let (coords, weight) = match (map, spec, index) {
            (AnyMap::Curve(m), NetSpec::Curve { degree, frame }, NetIndex::Curve(j)) => {
                let args = frame.control_args(*degree, j);
                let f = |p: &Poly1| oracle::naive_polar_value_curve(p, &args);
                (m.numerators().iter().map(f).collect::<Result<Vec<_>>>()?, f(m.denominator())?)
            }
            (AnyMap::Surface(m), NetSpec::Rect { bidegree: (p, q), frames }, NetIndex::Rect(i, j)) => {
                let (ua, va) = (frames.u.control_args(*p, i), frames.v.control_args(*q, j));
                let f = |p: &Poly2| oracle::naive_polar_value_rect(p, &ua, &va);
                (m.numerators().iter().map(f).collect::<Result<Vec<_>>>()?, f(m.denominator())?)
            }
            (AnyMap::Surface(m), NetSpec::Tri { frame, .. }, NetIndex::Tri(i, j, k)) => {
                let args = frame.control_args(i, j, k);
                let f = |p: &Poly2| oracle::naive_polar_value_tri(p, &args);
                (m.numerators().iter().map(f).collect::<Result<Vec<_>>>()?, f(m.denominator())?)
            }
            _ => return Err(Error::KindMismatch(format!("net index {index} does not fit the job"))),
        };
        if let Some(c) = (0..coords.len()).find(|&c| coords[c] != point.coords[c]) {
            return Err(Error::VerifyMismatch {
                index,
                detail: format!("coordinate {}: net has {}, oracle has {}", c + 1, point.coords[c], coords[c]),
            });
        }
        if weight != point.weight {
            return Err(Error::VerifyMismatch {
                index,
                detail: format!("weight: net has {}, oracle has {weight}", point.weight),
            });
        }
    }
    Ok(())
}

/// The control net a job describes, before projection.
pub fn compute_net(spec: &JobSpec) -> Result<OutputNet> {
    let (map, net_spec) = net_spec(spec)?;
    let net = lift_homogeneous(&map, &net_spec)?;
    if spec.verify {
        verify_net(&map, &net_spec, &net, spec.oracle_limit)?;
    }
    Ok(if spec.homogeneous { OutputNet::Homogeneous(net) } else { OutputNet::Weighted(net.into_weighted()?) })
}

fn keep_list(dim: usize, drop: &[usize]) -> Result<Vec<usize>> {
    if let Some(&i) = drop.iter().find(|&&i| i == 0 || i > dim) {
        return Err(bad("--drop-coord", format!("coordinate {i} is not in 1..={dim}")));
    }
    Ok((0..dim).filter(|i| !drop.contains(&(i + 1))).collect())
}

/// Run a job to completion, returning the rendered bytes.
pub fn execute(spec: &JobSpec) -> Result<JobOutput> {
    let mut net = compute_net(spec)?;
    if !spec.drop_coords.is_empty() {
        net = net.project(&keep_list(net.dim(), &spec.drop_coords)?)?;
    }
    match spec.format {
        OutputFormat::Json => Ok(JobOutput { bytes: format::to_json(&net).into_bytes(), warnings: Vec::new() }),
        OutputFormat::Paper => {
            Ok(JobOutput { bytes: format::to_paper(&net, spec.label.as_deref()).into_bytes(), warnings: Vec::new() })
        }
        OutputFormat::Obj => {
            let opts = ObjOptions {
                samples: spec.samples,
                precision: spec.precision,
                singular: if spec.skip_singular { SingularPolicy::Skip } else { SingularPolicy::Fail },
            };
            let mesh = format::emit_obj_any(&net, &opts)?;
            Ok(JobOutput { bytes: mesh.text.into_bytes(), warnings: mesh.warnings })
        }
    }
}

/// Run a job, writing output to `out` and diagnostics to `err`. Nothing is
/// written to `out` unless the job succeeds. Returns the exit status.
pub fn run(spec: &JobSpec, out: &mut impl Write, err: &mut impl Write) -> i32 {
    match execute(spec) {
        Ok(output) => {
            for w in &output.warnings {
                let _ = writeln!(err, "warning: {w}");
            }
            match out.write_all(&output.bytes).and_then(|_| out.flush()) {
                Ok(()) => 0,
                Err(e) => {
                    let _ = writeln!(err, "error: writing output: {e}");
                    1
                }
            }
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::q;

    #[test]
    fn frames() {
        let f = parse_frame1("--frame", " -1 , 1/2").unwrap();
        assert_eq!((f.r(), f.s()), (&q(-1, 1), &q(1, 2)));
        assert!(matches!(parse_frame1("--frame", "1,1"), Err(Error::DegenerateFrame(_))));
        assert!(matches!(parse_frame1("--frame", "1"), Err(Error::InvalidArgument { .. })));

        let t = parse_tri_frame("--tri-frame", "(1,0);(0,1);(0,0)").unwrap();
        assert_eq!(t, AffineFrame2::standard());
        let b = parse_tri_frame("--tri-frame", "(1,0,0); (0,1,0); (0,0,1)").unwrap();
        assert_eq!(b, AffineFrame2::standard());
        assert!(parse_tri_frame("--tri-frame", "(1,1,1);(0,1,0);(0,0,1)").is_err());
        assert!(matches!(parse_tri_frame("--tri-frame", "(0,0);(1,1);(2,2)"), Err(Error::DegenerateFrame(_))));
        assert!(parse_tri_frame("--tri-frame", "(0,0);(1,1)").is_err());
    }

    #[test]
    fn parabola_json() {
        let spec = JobSpec::new(NetKind::Curve, vec!["t^2".into()]);
        let out = String::from_utf8(execute(&spec).unwrap().bytes).unwrap();
        let net = format::from_json(&out).unwrap();
        let rows = net.rows();
        assert_eq!(rows.iter().map(|r| r.1[0].clone()).collect::<Vec<_>>(), vec![q(0, 1), q(0, 1), q(1, 1)]);
        assert!(rows.iter().all(|r| r.2.is_one()));
    }

    #[test]
    fn error_fields_and_codes() {
        let mut spec = JobSpec::new(NetKind::Curve, vec!["t".into(), "u".into()]);
        let e = execute(&spec).unwrap_err();
        assert_eq!(e.exit_code(), 2);
        assert!(e.to_string().starts_with("--coord 2"));

        spec.coords = vec!["t^3".into()];
        spec.degree = Some(2);
        assert_eq!(execute(&spec).unwrap_err().exit_code(), 3);

        spec.degree = None;
        spec.denom = Some("t".into());
        let e = execute(&spec).unwrap_err();
        assert_eq!(e, Error::ZeroWeight { index: NetIndex::Curve(0) });
        assert_eq!(e.exit_code(), 4);
        spec.homogeneous = true;
        assert!(execute(&spec).is_ok());

        let mut spec = JobSpec::new(NetKind::Tri, vec!["u".into()]);
        spec.frame = Some("0,1".into());
        assert_eq!(execute(&spec).unwrap_err().exit_code(), 2);
    }

    #[test]
    fn verify_and_limits() {
        let mut spec = JobSpec::new(NetKind::Rect, vec!["u*v^2 - 3".into(), "u^2".into()]);
        spec.denom = Some("1 + u*v".into());
        spec.verify = true;
        assert!(execute(&spec).is_ok());
        spec.oracle_limit = Some(2);
        assert!(matches!(execute(&spec), Err(Error::OracleLimit { .. })));
    }

    #[test]
    fn drop_coords_are_one_based() {
        let mut spec = JobSpec::new(NetKind::Curve, vec!["t".into(), "2*t".into(), "3*t".into()]);
        spec.drop_coords = vec![2];
        let net = compute_net(&spec).unwrap();
        assert_eq!(net.dim(), 3);
        let out = String::from_utf8(execute(&spec).unwrap().bytes).unwrap();
        let rows = format::from_json(&out).unwrap().rows();
        assert_eq!(rows[1].1, vec![q(1, 1), q(3, 1)]);
        spec.drop_coords = vec![4];
        assert_eq!(execute(&spec).unwrap_err().exit_code(), 2);
    }
}
