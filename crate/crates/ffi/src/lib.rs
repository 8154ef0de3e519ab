//! C interface to `polarize`.
//!
//! Nets are returned as opaque `PolarizeNet` handles. Every fallible call
//! returns a `PolarizeStatus`; on failure `polarize_last_error` describes
//! what went wrong on the calling thread. Strings handed out by the library
//! must be released with `polarize_string_free`, nets with
//! `polarize_net_free`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use polarize::format::{self, ObjOptions, OutputNet, SingularPolicy};
use polarize::job::{self, JobSpec};
use polarize::rational::{NetIndex, NetKind};
use polarize::Error;

/// Status codes. Values 2 to 5 match the command-line exit statuses.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PolarizeStatus {
    Ok = 0,
    NullArgument = 1,
    Parse = 2,
    DegreeOrFrame = 3,
    ZeroWeight = 4,
    Verify = 5,
    InvalidUtf8 = 6,
    OutOfRange = 7,
    Panic = 8,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PolarizeKind {
    Curve = 0,
    Rect = 1,
    Tri = 2,
}

/// Opaque control net.
pub struct PolarizeNet {
    net: OutputNet,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).expect("nul bytes removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

struct Failure(PolarizeStatus, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let status = match e.exit_code() {
            2 => PolarizeStatus::Parse,
            4 => PolarizeStatus::ZeroWeight,
            5 => PolarizeStatus::Verify,
            _ => PolarizeStatus::DegreeOrFrame,
        };
        Failure(status, e.to_string())
    }
}

fn null(what: &str) -> Failure {
    Failure(PolarizeStatus::NullArgument, format!("{what} is null"))
}

fn guard(f: impl FnOnce() -> Result<(), Failure>) -> PolarizeStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => PolarizeStatus::Ok,
        Ok(Err(Failure(status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal panic".into());
            PolarizeStatus::Panic
        }
    }
}

unsafe fn text<'a>(p: *const c_char, what: &str) -> Result<&'a str, Failure> {
    if p.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(p).to_str().map_err(|_| Failure(PolarizeStatus::InvalidUtf8, format!("{what} is not UTF-8")))
}

unsafe fn opt_text<'a>(p: *const c_char, what: &str) -> Result<Option<&'a str>, Failure> {
    if p.is_null() {
        Ok(None)
    } else {
        text(p, what).map(Some)
    }
}

unsafe fn net_ref<'a>(net: *const PolarizeNet) -> Result<&'a OutputNet, Failure> {
    net.as_ref().map(|n| &n.net).ok_or_else(|| null("net"))
}

unsafe fn put_string(out: *mut *mut c_char, s: String) -> Result<(), Failure> {
    if out.is_null() {
        return Err(null("out"));
    }
    let c = CString::new(s).map_err(|_| Failure(PolarizeStatus::Panic, "output contains a nul byte".into()))?;
    *out = c.into_raw();
    Ok(())
}

unsafe fn put_net(out: *mut *mut PolarizeNet, net: OutputNet) -> Result<(), Failure> {
    if out.is_null() {
        return Err(null("out"));
    }
    *out = Box::into_raw(Box::new(PolarizeNet { net }));
    Ok(())
}

unsafe fn job_spec(
    kind: NetKind,
    coords: *const *const c_char,
    n_coords: usize,
    denom: *const c_char,
    homogeneous: bool,
) -> Result<JobSpec, Failure> {
    if coords.is_null() && n_coords > 0 {
        return Err(null("coords"));
    }
    let list = (0..n_coords)
        .map(|i| text(*coords.add(i), &format!("coords[{i}]")).map(str::to_owned))
        .collect::<Result<Vec<_>, _>>()?;
    let mut spec = JobSpec::new(kind, list);
    spec.denom = opt_text(denom, "denom")?.map(str::to_owned);
    spec.homogeneous = homogeneous;
    Ok(spec)
}

fn degree(d: i64) -> Option<usize> {
    usize::try_from(d).ok()
}

/// Control polygon of a curve in `t`. `denom` and `frame` ("r,s") may be
/// null; a negative `degree_m` means the degree of the map. With
/// `homogeneous` set, coordinates are left multiplied by the weights and zero
/// weights are allowed.
///
/// # Safety
/// `coords` must point to `n_coords` valid C strings; string arguments must be
/// null or valid C strings; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn polarize_curve_net(
    coords: *const *const c_char,
    n_coords: usize,
    denom: *const c_char,
    degree_m: i64,
    frame: *const c_char,
    homogeneous: bool,
    out: *mut *mut PolarizeNet,
) -> PolarizeStatus {
    guard(|| {
        let mut spec = job_spec(NetKind::Curve, coords, n_coords, denom, homogeneous)?;
        spec.degree = degree(degree_m);
        spec.frame = opt_text(frame, "frame")?.map(str::to_owned);
        put_net(out, job::compute_net(&spec)?)
    })
}

/// Tensor-product net in `u, v`. Negative `p` or `q` means the map's own
/// bidegree; frames are "r,s" or null for `(0, 1)`.
///
/// # Safety
/// As for `polarize_curve_net`.
#[no_mangle]
pub unsafe extern "C" fn polarize_rect_net(
    coords: *const *const c_char,
    n_coords: usize,
    denom: *const c_char,
    p: i64,
    q: i64,
    frame_u: *const c_char,
    frame_v: *const c_char,
    homogeneous: bool,
    out: *mut *mut PolarizeNet,
) -> PolarizeStatus {
    guard(|| {
        let mut spec = job_spec(NetKind::Rect, coords, n_coords, denom, homogeneous)?;
        spec.bidegree = degree(p).zip(degree(q));
        spec.frame_u = opt_text(frame_u, "frame_u")?.map(str::to_owned);
        spec.frame_v = opt_text(frame_v, "frame_v")?.map(str::to_owned);
        put_net(out, job::compute_net(&spec)?)
    })
}

/// Triangular net in `u, v`. `frame` is "(a,b);(c,d);(e,f)" or null for
/// the standard frame `((1,0), (0,1), (0,0))`.
///
/// # Safety
/// As for `polarize_curve_net`.
#[no_mangle]
pub unsafe extern "C" fn polarize_tri_net(
    coords: *const *const c_char,
    n_coords: usize,
    denom: *const c_char,
    degree_m: i64,
    frame: *const c_char,
    homogeneous: bool,
    out: *mut *mut PolarizeNet,
) -> PolarizeStatus {
    guard(|| {
        let mut spec = job_spec(NetKind::Tri, coords, n_coords, denom, homogeneous)?;
        spec.degree = degree(degree_m);
        spec.tri_frame = opt_text(frame, "frame")?.map(str::to_owned);
        put_net(out, job::compute_net(&spec)?)
    })
}

/// Parse a net from its JSON form.
///
/// # Safety
/// `json` must be a valid C string and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn polarize_net_from_json(json: *const c_char, out: *mut *mut PolarizeNet) -> PolarizeStatus {
    guard(|| put_net(out, format::from_json(text(json, "json")?)?))
}

/// # Safety
/// `net` must be null or a handle returned by this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn polarize_net_free(net: *mut PolarizeNet) {
    if !net.is_null() {
        drop(Box::from_raw(net));
    }
}

/// Number of control points; 0 for a null handle.
///
/// # Safety
/// `net` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn polarize_net_len(net: *const PolarizeNet) -> usize {
    net.as_ref().map_or(0, |n| n.net.len())
}

/// Number of coordinates per point (weights excluded); 0 for null.
///
/// # Safety
/// `net` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn polarize_net_dim(net: *const PolarizeNet) -> usize {
    net.as_ref().map_or(0, |n| n.net.dim())
}

/// # Safety
/// `net` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn polarize_net_kind(net: *const PolarizeNet, out: *mut PolarizeKind) -> PolarizeStatus {
    guard(|| {
        let kind = match net_ref(net)?.kind() {
            NetKind::Curve => PolarizeKind::Curve,
            NetKind::Rect => PolarizeKind::Rect,
            NetKind::Tri => PolarizeKind::Tri,
        };
        *out.as_mut().ok_or_else(|| null("out"))? = kind;
        Ok(())
    })
}

/// Whether coordinates are homogeneous (not divided by the weights).
///
/// # Safety
/// `net` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn polarize_net_is_homogeneous(net: *const PolarizeNet) -> bool {
    matches!(net.as_ref(), Some(PolarizeNet { net: OutputNet::Homogeneous(_) }))
}

fn row(net: &OutputNet, n: usize) -> Result<(NetIndex, Vec<polarize::Ratio>, polarize::Ratio), Failure> {
    net.rows()
        .into_iter()
        .nth(n)
        .ok_or_else(|| Failure(PolarizeStatus::OutOfRange, format!("point {n} out of range for {} points", net.len())))
}

/// Net index of point `n` in output order, written to `out[0..3]`; unused
/// trailing entries are set to 0. `arity` receives 1, 2 or 3 if not null.
///
/// # Safety
/// `net` must be live, `out` must have room for 3 values.
#[no_mangle]
pub unsafe extern "C" fn polarize_net_index(
    net: *const PolarizeNet,
    n: usize,
    out: *mut usize,
    arity: *mut usize,
) -> PolarizeStatus {
    guard(|| {
        let (index, _, _) = row(net_ref(net)?, n)?;
        if out.is_null() {
            return Err(null("out"));
        }
        let v = index.to_vec();
        for slot in 0..3 {
            *out.add(slot) = v.get(slot).copied().unwrap_or(0);
        }
        if let Some(a) = arity.as_mut() {
            *a = v.len();
        }
        Ok(())
    })
}

/// Coordinate `c` of point `n` as an exact rational string "n" or "n/d".
///
/// # Safety
/// `net` must be live and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn polarize_net_coord(
    net: *const PolarizeNet,
    n: usize,
    c: usize,
    out: *mut *mut c_char,
) -> PolarizeStatus {
    guard(|| {
        let (_, coords, _) = row(net_ref(net)?, n)?;
        let value =
            coords.get(c).ok_or_else(|| Failure(PolarizeStatus::OutOfRange, format!("coordinate {c} out of range")))?;
        put_string(out, value.to_string())
    })
}

/// Weight of point `n` as an exact rational string.
///
/// # Safety
/// `net` must be live and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn polarize_net_weight(
    net: *const PolarizeNet,
    n: usize,
    out: *mut *mut c_char,
) -> PolarizeStatus {
    guard(|| {
        let (_, _, w) = row(net_ref(net)?, n)?;
        put_string(out, w.to_string())
    })
}

/// Coordinates of point `n` rounded to doubles, written to `out[0..dim]`,
/// followed by the weight at `out[dim]`.
///
/// # Safety
/// `net` must be live and `out` must have room for `dim + 1` values.
#[no_mangle]
pub unsafe extern "C" fn polarize_net_point_f64(net: *const PolarizeNet, n: usize, out: *mut f64) -> PolarizeStatus {
    guard(|| {
        let (_, coords, w) = row(net_ref(net)?, n)?;
        if out.is_null() {
            return Err(null("out"));
        }
        for (slot, x) in coords.iter().chain(std::iter::once(&w)).enumerate() {
            *out.add(slot) = x.to_f64().unwrap_or(f64::NAN);
        }
        Ok(())
    })
}

/// Canonical JSON document of the net.
///
/// # Safety
/// `net` must be live and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn polarize_net_to_json(net: *const PolarizeNet, out: *mut *mut c_char) -> PolarizeStatus {
    guard(|| put_string(out, format::to_json(net_ref(net)?)))
}

/// Brace listing `{{x, y, w}, ...}`; `label` may be null.
///
/// # Safety
/// `net` must be live, `label` null or a valid C string, `out` writable.
#[no_mangle]
pub unsafe extern "C" fn polarize_net_to_paper(
    net: *const PolarizeNet,
    label: *const c_char,
    out: *mut *mut c_char,
) -> PolarizeStatus {
    guard(|| {
        let label = opt_text(label, "label")?;
        put_string(out, format::to_paper(net_ref(net)?, label))
    })
}

/// OBJ mesh sampled on a `samples`-per-axis grid, decimals with `precision`
/// significant digits. Fails if the weight vanishes at a sample unless
/// `skip_singular` is set.
///
/// # Safety
/// `net` must be live and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn polarize_net_to_obj(
    net: *const PolarizeNet,
    samples: usize,
    precision: usize,
    skip_singular: bool,
    out: *mut *mut c_char,
) -> PolarizeStatus {
    guard(|| {
        let opts = ObjOptions {
            samples,
            precision,
            singular: if skip_singular { SingularPolicy::Skip } else { SingularPolicy::Fail },
        };
        put_string(out, format::emit_obj_any(net_ref(net)?, &opts)?.text)
    })
}

/// New net keeping only the listed coordinates (0-based), weights unchanged.
///
/// # Safety
/// `net` must be live, `keep` must point to `n_keep` values (may be null if
/// `n_keep` is 0), `out` writable.
#[no_mangle]
pub unsafe extern "C" fn polarize_net_project(
    net: *const PolarizeNet,
    keep: *const usize,
    n_keep: usize,
    out: *mut *mut PolarizeNet,
) -> PolarizeStatus {
    guard(|| {
        let keep = if n_keep == 0 {
            &[][..]
        } else if keep.is_null() {
            return Err(null("keep"));
        } else {
            std::slice::from_raw_parts(keep, n_keep)
        };
        let projected = net_ref(net)?.project(keep).map_err(|e| match e {
            Error::CoordinateOutOfRange { .. } => Failure(PolarizeStatus::OutOfRange, e.to_string()),
            other => other.into(),
        })?;
        put_net(out, projected)
    })
}

/// # Safety
/// `s` must be null or a string returned by this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn polarize_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Message for the last failed call on this thread, or null. The pointer is
/// valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn polarize_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Library version, a static string.
#[no_mangle]
pub extern "C" fn polarize_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}
