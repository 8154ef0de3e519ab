//! Exact polar forms of polynomial and rational curves and surfaces, and the
//! control nets derived from them.
//!
//! ```
//! use polarize::curve::AffineFrame1;
//! use polarize::expr::parse_poly1;
//! use polarize::poly::CurveMap;
//! use polarize::rational::{lift_and_polarize, AnyMap, NetSpec};
//!
//! let map = CurveMap::new(vec![parse_poly1("2*t").unwrap()], parse_poly1("1 + t^2").unwrap()).unwrap();
//! let spec = NetSpec::Curve { degree: 2, frame: AffineFrame1::unit() };
//! let net = lift_and_polarize(&AnyMap::Curve(map), &spec).unwrap();
//! let weights: Vec<String> = net.indexed().iter().map(|(_, p)| p.weight.to_string()).collect();
//! assert_eq!(weights, ["1", "1", "2"]);
//! ```

pub mod curve;
pub mod error;
pub mod expr;
pub mod format;
pub mod job;
pub mod oracle;
pub mod poly;
pub mod rational;
pub mod rect;
pub mod scalar;
pub mod tri;

pub use error::{Error, Result};
pub use scalar::Ratio;
