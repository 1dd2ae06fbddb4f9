//! The discrete series of unitary Virasoro data: central charges,
//! highest weights, fusion products, and the sign tables behind the
//! tau and sigma involutions.

use crate::error::GriessError;
use griess_exact::ExactScalar;

/// Central charge of the n-th member of the unitary series,
/// `c_n = 1 - 6/((n+2)(n+3))`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnitaryCharge {
    pub n: u32,
    pub c: ExactScalar,
}

impl UnitaryCharge {
    pub fn new(n: u32) -> Self {
        assert!(n >= 1, "series index starts at 1");
        let m = (n as i64 + 2) * (n as i64 + 3);
        let c = &ExactScalar::one() - &ExactScalar::ratio(6, m);
        UnitaryCharge { n, c }
    }
}

/// A highest weight `h_{r,s}` of the series-n vacuum algebra, with
/// `1 <= r <= n+1`, `1 <= s <= n+2`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HighestWeight {
    pub n: u32,
    pub r: u32,
    pub s: u32,
    pub h: ExactScalar,
}

pub fn in_range(n: u32, r: u32, s: u32) -> bool {
    (1..=n + 1).contains(&r) && (1..=n + 2).contains(&s)
}

/// `h^{(n)}_{r,s} = ({r(n+3) - s(n+2)}^2 - 1) / (4(n+2)(n+3))`.
pub fn highest_weight(n: u32, r: u32, s: u32) -> Result<HighestWeight, GriessError> {
    if n < 1 || !in_range(n, r, s) {
        return Err(GriessError::IndexOutOfRange { n, r, s });
    }
    let (n_, r_, s_) = (n as i64, r as i64, s as i64);
    let t = r_ * (n_ + 3) - s_ * (n_ + 2);
    let h = ExactScalar::ratio(t * t - 1, 4 * (n_ + 2) * (n_ + 3));
    Ok(HighestWeight { n, r, s, h })
}

/// Canonical representative of the label symmetry
/// `(r, s) ~ (n+2-r, n+3-s)`: the one with smaller `r` (smaller `s` on ties).
pub fn canonical_sector(n: u32, r: u32, s: u32) -> (u32, u32) {
    let mirror = (n + 2 - r, n + 3 - s);
    std::cmp::min((r, s), mirror)
}

/// Fusion product of two sectors as a multiset of raw index pairs,
/// `(|r1-r2| + 2i - 1, |s1-s2| + 2j - 1)` for `1 <= i <= M`, `1 <= j <= N`.
/// Multiplicities are retained; canonicalize afterwards if needed.
pub fn fuse(
    n: u32,
    (r1, s1): (u32, u32),
    (r2, s2): (u32, u32),
) -> Result<Vec<(u32, u32)>, GriessError> {
    if !in_range(n, r1, s1) {
        return Err(GriessError::IndexOutOfRange { n, r: r1, s: s1 });
    }
    if !in_range(n, r2, s2) {
        return Err(GriessError::IndexOutOfRange { n, r: r2, s: s2 });
    }
    let m = [r1, r2, n + 2 - r1, n + 2 - r2].into_iter().min().unwrap();
    let nn = [s1, s2, n + 3 - s1, n + 3 - s2].into_iter().min().unwrap();
    let dr = r1.abs_diff(r2);
    let ds = s1.abs_diff(s2);
    let mut out = Vec::with_capacity((m * nn) as usize);
    for i in 1..=m {
        for j in 1..=nn {
            out.push((dr + 2 * i - 1, ds + 2 * j - 1));
        }
    }
    Ok(out)
}

/// Same fusion product with outputs canonicalized and sorted, duplicates kept.
pub fn fuse_canonical(
    n: u32,
    a: (u32, u32),
    b: (u32, u32),
) -> Result<Vec<(u32, u32)>, GriessError> {
    let mut v: Vec<(u32, u32)> = fuse(n, a, b)?
        .into_iter()
        .map(|(r, s)| canonical_sector(n, r, s))
        .collect();
    v.sort_unstable();
    Ok(v)
}

/// Sign of the tau involution on the sector `(r, s)`:
/// `(-1)^{r+1}` for even series index, `(-1)^{s+1}` for odd.
pub fn tau_sign(n: u32, r: u32, s: u32) -> Result<i32, GriessError> {
    if !in_range(n, r, s) {
        return Err(GriessError::IndexOutOfRange { n, r, s });
    }
    let e = if n % 2 == 0 { r + 1 } else { s + 1 };
    Ok(if e % 2 == 0 { 1 } else { -1 })
}

/// Is `(r, s)` (up to the label symmetry) in the sigma sector set `P_n`?
/// `P_n` is the `r = 1` row for even n and the `s = 1` column for odd n.
pub fn in_sigma_sectors(n: u32, r: u32, s: u32) -> bool {
    let check = |(r, s): (u32, u32)| if n % 2 == 0 { r == 1 } else { s == 1 };
    check((r, s)) || check((n + 2 - r, n + 3 - s))
}

/// Sign of the sigma involution on a sector of `P_n`:
/// `(-1)^{s+1}` for even n, `(-1)^{r+1}` for odd n.
pub fn sigma_sign(n: u32, r: u32, s: u32) -> Result<i32, GriessError> {
    if !in_range(n, r, s) {
        return Err(GriessError::IndexOutOfRange { n, r, s });
    }
    if !in_sigma_sectors(n, r, s) {
        return Err(GriessError::NotSigmaSector { n, r, s });
    }
    // Evaluate on the representative that actually lies in P_n.
    let (r, s) = if (n % 2 == 0 && r == 1) || (n % 2 == 1 && s == 1) {
        (r, s)
    } else {
        (n + 2 - r, n + 3 - s)
    };
    let e = if n % 2 == 0 { s + 1 } else { r + 1 };
    Ok(if e % 2 == 0 { 1 } else { -1 })
}

/// The sigma sector set `P_n` as index pairs. Has `n+2` members for even n
/// and `n+1` for odd n.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SigmaSectorSet {
    pub n: u32,
    pub weights: Vec<HighestWeight>,
}

impl SigmaSectorSet {
    pub fn new(n: u32) -> Self {
        let weights = if n % 2 == 0 {
            (1..=n + 2)
                .map(|s| highest_weight(n, 1, s).unwrap())
                .collect()
        } else {
            (1..=n + 1)
                .map(|r| highest_weight(n, r, 1).unwrap())
                .collect()
        };
        SigmaSectorSet { n, weights }
    }
}
