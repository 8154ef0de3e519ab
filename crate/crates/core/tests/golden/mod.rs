//! Published control nets used as golden data.

#![allow(dead_code)]

use polarize::Ratio;

pub const ROSE_X: &str = "4*t*(1 - t^2)^2*(1 - 14*t^2 + t^4)";
pub const ROSE_Y: &str = "8*t^2*(1 - t^2)*(3 - 10*t^2 + 3*t^4)";
pub const ROSE_DENOM: &str = "(1 + t^2)^5";

pub const PLANE_X: &str = "16*u*v^2*(1 - u^2)";
pub const PLANE_Y: &str = "8*u*v*(u^2 + 1)*(v^2 - 1)";
pub const PLANE_Z: &str = "4*v*(1 - u^4)*(v^2 - 1)";
pub const PLANE_T: &str = "4*v^2*(u^4 - 6*u^2 + 1)";
pub const PLANE_DENOM: &str = "(u^2 + 1)^2*(v^2 + 1)^2";

pub const RCPOLY: &str = "\
    {{0, 0, 1}, {2/5, 0, 1}, {18/25, 12/25, 10/9}, {1/2, 6/5, 4/3}, \
    {-14/45, 71/45, 12/7}, {-45/37, 45/37, 148/63}, {-71/45, 14/45, 24/7}, \
    {-6/5, -1/2, 16/3}, {-12/25, -18/25, 80/9}, {0, -2/5, 16}, {0, 0, 32}}";

pub const PROJ8NET: &str = "\
    {{0, 0, 0, 0, 1}, {0, 0, -1/2, 0, 1}, {0, 0, -14/15, 2/15, 15/14}, \
    {0, 0, -20/17, 6/17, 17/14}, {0, 0, -120/101, 60/101, 101/70}, \
    {0, 0, -1, 4/5, 25/14}, {0, 0, -11/16, 15/16, 16/7}, {0, 0, -1/3, 1, 3}, \
    {0, 0, 0, 1, 4}, {0, 0, 0, 0, 1}, {0, -1/7, -1/2, 0, 1}, \
    {4/45, -4/15, -14/15, 2/15, 15/14}, {4/17, -28/85, -20/17, 6/17, 17/14}, \
    {40/101, -32/101, -120/101, 60/101, 101/70}, \
    {8/15, -6/25, -1, 4/5, 25/14}, {5/8, -1/8, -11/16, 15/16, 16/7}, \
    {2/3, 0, -1/3, 1, 3}, {0, 0, 0, 0, 15/14}, {0, -4/15, -7/15, 0, 15/14}, \
    {20/121, -60/121, -105/121, 9/121, 121/105}, \
    {10/23, -14/23, -25/23, 9/46, 46/35}, \
    {240/331, -192/331, -360/331, 108/331, 331/210}, \
    {80/83, -36/83, -75/83, 36/83, 83/42}, {10/9, -2/9, -11/18, 1/2, 18/7}, \
    {0, 0, 0, 0, 17/14}, {0, -32/85, -7/17, 0, 17/14}, \
    {9/46, -16/23, -35/46, -1/46, 46/35}, \
    {27/53, -89/106, -50/53, -3/53, 53/35}, \
    {36/43, -100/129, -40/43, -4/43, 129/70}, \
    {12/11, -6/11, -25/33, -4/33, 33/14}, {0, 0, 0, 0, 101/70}, \
    {0, -48/101, -34/101, 0, 101/70}, \
    {56/331, -288/331, -204/331, -40/331, 331/210}, \
    {56/129, -44/43, -98/129, -40/129, 129/70}, \
    {16/23, -144/161, -120/161, -80/161, 23/10}, {0, 0, 0, 0, 25/14}, \
    {0, -14/25, -6/25, 0, 25/14}, {8/83, -84/83, -36/83, -16/83, 83/42}, \
    {8/33, -38/33, -6/11, -16/33, 33/14}, {0, 0, 0, 0, 16/7}, \
    {0, -5/8, -1/8, 0, 16/7}, {0, -10/9, -2/9, -2/9, 18/7}, {0, 0, 0, 0, 3}, \
    {0, -2/3, 0, 0, 3}, {0, 0, 0, 0, 4}}";

pub const PROJNET4: &str = "\
    {{0, 0, 0, 1}, {0, 0, 0, 1}, {0, 0, 2/15, 15/14}, {0, 0, 6/17, 17/14}, \
    {0, 0, 60/101, 101/70}, {0, 0, 4/5, 25/14}, {0, 0, 15/16, 16/7}, \
    {0, 0, 1, 3}, {0, 0, 1, 4}, {0, 0, 0, 1}, {0, -1/7, 0, 1}, \
    {4/45, -4/15, 2/15, 15/14}, {4/17, -28/85, 6/17, 17/14}, \
    {40/101, -32/101, 60/101, 101/70}, {8/15, -6/25, 4/5, 25/14}, \
    {5/8, -1/8, 15/16, 16/7}, {2/3, 0, 1, 3}, {0, 0, 0, 15/14}, \
    {0, -4/15, 0, 15/14}, {20/121, -60/121, 9/121, 121/105}, \
    {10/23, -14/23, 9/46, 46/35}, {240/331, -192/331, 108/331, 331/210}, \
    {80/83, -36/83, 36/83, 83/42}, {10/9, -2/9, 1/2, 18/7}, {0, 0, 0, 17/14}, \
    {0, -32/85, 0, 17/14}, {9/46, -16/23, -1/46, 46/35}, \
    {27/53, -89/106, -3/53, 53/35}, {36/43, -100/129, -4/43, 129/70}, \
    {12/11, -6/11, -4/33, 33/14}, {0, 0, 0, 101/70}, {0, -48/101, 0, 101/70}, \
    {56/331, -288/331, -40/331, 331/210}, {56/129, -44/43, -40/129, 129/70}, \
    {16/23, -144/161, -80/161, 23/10}, {0, 0, 0, 25/14}, \
    {0, -14/25, 0, 25/14}, {8/83, -84/83, -16/83, 83/42}, \
    {8/33, -38/33, -16/33, 33/14}, {0, 0, 0, 16/7}, {0, -5/8, 0, 16/7}, \
    {0, -10/9, -2/9, 18/7}, {0, 0, 0, 3}, {0, -2/3, 0, 3}, {0, 0, 0, 4}}";

/// Rows of a `{{a, b, ...}, ...}` listing.
pub fn rows(listing: &str) -> Vec<Vec<Ratio>> {
    let inner = listing.trim().strip_prefix('{').and_then(|s| s.strip_suffix('}')).expect("outer braces");
    inner
        .split('}')
        .map(|chunk| chunk.trim_start_matches([',', ' ', '\n']).trim())
        .filter(|chunk| !chunk.is_empty())
        .map(|chunk| {
            let chunk = chunk.strip_prefix('{').expect("inner brace");
            chunk.split(',').map(|x| x.trim().parse().expect("rational entry")).collect()
        })
        .collect()
}

/// Collapse runs of whitespace so listings can be compared as text.
pub fn squash(s: &str) -> String {
    s.split_whitespace().collect::<Vec<_>>().join(" ")
}
