use std::ffi::{c_char, CStr, CString};
use std::ptr;

use polarize_ffi::*;

fn cstrings(items: &[&str]) -> (Vec<CString>, Vec<*const c_char>) {
    let owned: Vec<CString> = items.iter().map(|s| CString::new(*s).unwrap()).collect();
    let ptrs = owned.iter().map(|c| c.as_ptr()).collect();
    (owned, ptrs)
}

unsafe fn take(s: *mut c_char) -> String {
    let out = CStr::from_ptr(s).to_str().unwrap().to_owned();
    polarize_string_free(s);
    out
}

unsafe fn last_error() -> String {
    CStr::from_ptr(polarize_last_error()).to_str().unwrap().to_owned()
}

#[test]
fn rose_through_the_c_interface() {
    let (_keep, coords) = cstrings(&["4*t*(1 - t^2)^2*(1 - 14*t^2 + t^4)", "8*t^2*(1 - t^2)*(3 - 10*t^2 + 3*t^4)"]);
    let denom = CString::new("(1 + t^2)^5").unwrap();
    let frame = CString::new("0,1").unwrap();
    let label = CString::new("rcpoly").unwrap();
    unsafe {
        let mut net = ptr::null_mut();
        let status = polarize_curve_net(coords.as_ptr(), 2, denom.as_ptr(), -1, frame.as_ptr(), false, &mut net);
        assert_eq!(status, PolarizeStatus::Ok);
        assert_eq!(polarize_net_len(net), 11);
        assert_eq!(polarize_net_dim(net), 2);
        assert!(!polarize_net_is_homogeneous(net));

        let mut kind = PolarizeKind::Tri;
        assert_eq!(polarize_net_kind(net, &mut kind), PolarizeStatus::Ok);
        assert_eq!(kind, PolarizeKind::Curve);

        let mut s = ptr::null_mut();
        assert_eq!(polarize_net_coord(net, 2, 0, &mut s), PolarizeStatus::Ok);
        assert_eq!(take(s), "18/25");
        assert_eq!(polarize_net_weight(net, 5, &mut s), PolarizeStatus::Ok);
        assert_eq!(take(s), "148/63");

        let mut idx = [9usize; 3];
        let mut arity = 0;
        assert_eq!(polarize_net_index(net, 4, idx.as_mut_ptr(), &mut arity), PolarizeStatus::Ok);
        assert_eq!((idx, arity), ([4, 0, 0], 1));

        let mut pt = [0f64; 3];
        assert_eq!(polarize_net_point_f64(net, 10, pt.as_mut_ptr()), PolarizeStatus::Ok);
        assert_eq!(pt, [0.0, 0.0, 32.0]);

        assert_eq!(polarize_net_to_paper(net, label.as_ptr(), &mut s), PolarizeStatus::Ok);
        let listing = take(s);
        assert!(listing.starts_with("rcpoly = {{0, 0, 1}, {2/5, 0, 1}, {18/25, 12/25, 10/9}"));

        assert_eq!(polarize_net_coord(net, 11, 0, &mut s), PolarizeStatus::OutOfRange);
        assert!(last_error().contains("out of range"));
        assert_eq!(polarize_net_coord(net, 0, 2, &mut s), PolarizeStatus::OutOfRange);

        polarize_net_free(net);
    }
}

#[test]
fn json_round_trip_and_projection() {
    let (_keep, coords) = cstrings(&["u*v", "u - v", "u^2"]);
    unsafe {
        let mut net = ptr::null_mut();
        assert_eq!(
            polarize_tri_net(coords.as_ptr(), 3, ptr::null(), 2, ptr::null(), false, &mut net),
            PolarizeStatus::Ok
        );
        assert_eq!(polarize_net_len(net), 6);

        let mut json = ptr::null_mut();
        assert_eq!(polarize_net_to_json(net, &mut json), PolarizeStatus::Ok);
        let mut back = ptr::null_mut();
        assert_eq!(polarize_net_from_json(json, &mut back), PolarizeStatus::Ok);
        let mut again = ptr::null_mut();
        assert_eq!(polarize_net_to_json(back, &mut again), PolarizeStatus::Ok);
        assert_eq!(take(json), take(again));

        let keep = [2usize, 0];
        let mut projected = ptr::null_mut();
        assert_eq!(polarize_net_project(net, keep.as_ptr(), 2, &mut projected), PolarizeStatus::Ok);
        assert_eq!(polarize_net_dim(projected), 2);
        let mut s = ptr::null_mut();
        // b_(2,0,0) sits at the vertex (1, 0): u^2 = 1, u*v = 0
        assert_eq!(polarize_net_coord(projected, 5, 0, &mut s), PolarizeStatus::Ok);
        assert_eq!(take(s), "1");

        let bad = [3usize];
        let mut none = ptr::null_mut();
        assert_eq!(polarize_net_project(net, bad.as_ptr(), 1, &mut none), PolarizeStatus::OutOfRange);
        assert!(none.is_null());

        let mut obj = ptr::null_mut();
        assert_eq!(polarize_net_to_obj(projected, 2, 12, false, &mut obj), PolarizeStatus::Ok);
        assert_eq!(take(obj).lines().filter(|l| l.starts_with("v ")).count(), 3);

        polarize_net_free(projected);
        polarize_net_free(back);
        polarize_net_free(net);
    }
}

#[test]
fn errors_map_to_statuses() {
    unsafe {
        let mut net = ptr::null_mut();
        let (_k, bad) = cstrings(&["t^"]);
        assert_eq!(
            polarize_curve_net(bad.as_ptr(), 1, ptr::null(), -1, ptr::null(), false, &mut net),
            PolarizeStatus::Parse
        );
        assert!(last_error().starts_with("--coord 1"));

        let (_k, cubic) = cstrings(&["t^3"]);
        assert_eq!(
            polarize_curve_net(cubic.as_ptr(), 1, ptr::null(), 2, ptr::null(), false, &mut net),
            PolarizeStatus::DegreeOrFrame
        );
        let degenerate = CString::new("1,1").unwrap();
        assert_eq!(
            polarize_curve_net(cubic.as_ptr(), 1, ptr::null(), -1, degenerate.as_ptr(), false, &mut net),
            PolarizeStatus::DegreeOrFrame
        );

        let (_k, one) = cstrings(&["1"]);
        let t = CString::new("t").unwrap();
        assert_eq!(
            polarize_curve_net(one.as_ptr(), 1, t.as_ptr(), 1, ptr::null(), false, &mut net),
            PolarizeStatus::ZeroWeight
        );
        assert!(last_error().contains("b_0"));
        assert!(net.is_null());

        assert_eq!(polarize_curve_net(one.as_ptr(), 1, t.as_ptr(), 1, ptr::null(), true, &mut net), PolarizeStatus::Ok);
        assert!(polarize_net_is_homogeneous(net));
        let mut s = ptr::null_mut();
        assert_eq!(polarize_net_weight(net, 0, &mut s), PolarizeStatus::Ok);
        assert_eq!(take(s), "0");
        polarize_net_free(net);

        assert_eq!(
            polarize_curve_net(ptr::null(), 1, ptr::null(), -1, ptr::null(), false, &mut net),
            PolarizeStatus::NullArgument
        );
        assert_eq!(
            polarize_curve_net(one.as_ptr(), 1, ptr::null(), -1, ptr::null(), false, ptr::null_mut()),
            PolarizeStatus::NullArgument
        );
        let invalid = [0xffu8, 0];
        let ptrs = [invalid.as_ptr().cast::<c_char>()];
        assert_eq!(
            polarize_curve_net(ptrs.as_ptr(), 1, ptr::null(), -1, ptr::null(), false, &mut net),
            PolarizeStatus::InvalidUtf8
        );

        assert_eq!(polarize_net_len(ptr::null()), 0);
        polarize_net_free(ptr::null_mut());
        polarize_string_free(ptr::null_mut());
        assert_eq!(CStr::from_ptr(polarize_version()).to_str().unwrap(), env!("CARGO_PKG_VERSION"));
    }
}
