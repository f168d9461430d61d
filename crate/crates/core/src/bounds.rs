//! Exact evaluation of the lower and upper bounds on the minimum edge count of
//! r-uniform hypergraphs with cover number at least r, and of the related
//! covering-number quantities.
//!
//! Everything is computed with big rationals. The only transcendental, the
//! natural logarithm in the greedy estimate, is enclosed in a rational
//! interval and rounded in the safe direction.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use serde::Serialize;

use crate::combinatorics::{binomial, Combinations};
use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;

/// Terms of the `atanh` series kept before the tail is bounded.
const LN_SERIES_TERMS: u32 = 40;

fn ratio(num: BigUint, den: BigUint) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

fn int(v: u64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

fn ceil_u(x: &BigRational) -> BigUint {
    x.ceil().to_integer().to_biguint().expect("bounds are non-negative")
}

/// Renders a rational as `p/q` (or `p` when integral).
pub fn rational_string(x: &BigRational) -> String {
    if x.is_integer() {
        x.to_integer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

pub fn to_f64(x: &BigRational) -> f64 {
    x.to_f64().unwrap_or(f64::NAN)
}

fn check_range(n: usize, r: usize) -> Result<()> {
    if r < 2 || n + 1 < 2 * r {
        return Err(Error::OutOfRange(format!("need n >= 2r - 1 >= 3, got n = {n}, r = {r}")));
    }
    Ok(())
}

/// `C(n, r-1) / C(n-r, r-1)`: each (r-1)-set must miss some edge, and an
/// edge is disjoint from at most `C(n-r, r-1)` of them.
pub fn de_caen_bound(n: usize, r: usize) -> Result<BigRational> {
    check_range(n, r)?;
    let (n, r) = (n as u64, r as u64);
    Ok(ratio(binomial(n, r - 1), binomial(n - r, r - 1)))
}

pub fn de_caen_ceil(n: usize, r: usize) -> Result<BigUint> {
    Ok(ceil_u(&de_caen_bound(n, r)?))
}

/// `(n / 5r) * C(n, r-1) / C(n-r, r-1)`, a strict lower bound valid for
/// `2r - 1 <= n < r^2`.
pub fn refined_lower_bound(n: usize, r: usize) -> Result<BigRational> {
    check_range(n, r)?;
    if n >= r * r {
        return Err(Error::OutOfRange(format!("refined lower bound needs n < r^2, got n = {n}, r = {r}")));
    }
    Ok(BigRational::new(BigInt::from(n), BigInt::from(5 * r)) * de_caen_bound(n, r)?)
}

/// `t * C(n, r-t) / C(n-r, r-t)`: any `r - t` vertices leave at least `t`
/// edges untouched, and an edge avoids at most `C(n-r, r-t)` such sets.
pub fn counting_lower_bound_general(n: usize, r: usize, t: usize) -> Result<BigRational> {
    check_range(n, r)?;
    if t == 0 || t >= r {
        return Err(Error::OutOfRange(format!("t must satisfy 1 <= t <= r - 1, got t = {t}, r = {r}")));
    }
    let (n, r, t) = (n as u64, r as u64, t as u64);
    Ok(int(t) * ratio(binomial(n, r - t), binomial(n - r, r - t)))
}

/// Rational enclosure `[lo, hi]` of `ln x` for rational `x >= 1`.
pub fn ln_bounds(x: &BigRational) -> (BigRational, BigRational) {
    assert!(*x >= BigRational::one(), "ln_bounds needs x >= 1");
    let two = int(2);
    // x = m * 2^e with 1 <= m < 2.
    let mut e = x.to_integer().bits().saturating_sub(1);
    let mut m = x / BigRational::from_integer(BigInt::one() << e);
    while m >= two {
        m /= &two;
        e += 1;
    }
    let (ln2_lo, ln2_hi) = atanh_series(&BigRational::new(BigInt::one(), BigInt::from(3)));
    let y = (&m - BigRational::one()) / (&m + BigRational::one());
    let (m_lo, m_hi) = atanh_series(&y);
    let e = int(e);
    (&e * ln2_lo + m_lo, &e * ln2_hi + m_hi)
}

/// Encloses `2 atanh(y) = ln((1+y)/(1-y))` for `0 <= y <= 1/3`.
fn atanh_series(y: &BigRational) -> (BigRational, BigRational) {
    if y.is_zero() {
        return (BigRational::zero(), BigRational::zero());
    }
    let y2 = y * y;
    let mut power = y.clone();
    let mut sum = BigRational::zero();
    for k in 0..LN_SERIES_TERMS {
        sum += &power / int(2 * k as u64 + 1);
        power *= &y2;
    }
    // Remaining terms are at most y^(2K+1) / ((2K+1)(1 - y^2)).
    let tail = &power / (int(2 * LN_SERIES_TERMS as u64 + 1) * (BigRational::one() - &y2));
    let two = int(2);
    (&two * &sum, &two * (sum + tail))
}

/// `⌈ p^{-1} ln C(n, r-1) ⌉` with `p = C(n-r+1, r) / C(n, r)`: the number of
/// rounds after which greedily picking the edge inside the most still-empty
/// (n-r+1)-sets is guaranteed to have hit them all. The logarithm is rounded
/// up, so the result is a valid upper bound.
pub fn greedy_upper_estimate_u(n: usize, r: usize) -> Result<BigUint> {
    check_range(n, r)?;
    let (nn, rr) = (n as u64, r as u64);
    let inv_p = ratio(binomial(nn, rr), binomial(nn - rr + 1, rr));
    let (_, ln_hi) = ln_bounds(&BigRational::from_integer(BigInt::from(binomial(nn, rr - 1))));
    Ok(ceil_u(&(inv_p * ln_hi)))
}

/// The closed form `3r - ⌊2n/r⌋` (r even, `3r²/4 <= n <= r²`) or
/// `3r - ⌊2(n-r)/(r-1)⌋` (r odd, `(3r²+r)/4 <= n <= r²`), read as the minimum
/// size of an r-uniform hypergraph on n vertices in which every
/// (n-r+1)-set contains an edge. Absent outside those ranges.
pub fn sidorenko_reference(n: usize, r: usize) -> Option<u64> {
    if r < 2 || n > r * r {
        return None;
    }
    let (n, r) = (n as u64, r as u64);
    if r.is_even() {
        (4 * n >= 3 * r * r).then(|| 3 * r - 2 * n / r)
    } else {
        (4 * n >= 3 * r * r + r).then(|| 3 * r - 2 * (n - r) / (r - 1))
    }
}

/// All r-subsets of the vertex set that are not edges of `h`.
pub fn complement_duality(h: &Hypergraph, edge_cap: u64) -> Result<Hypergraph> {
    let r = h.require_uniform()?;
    let total = binomial(h.n() as u64, r as u64);
    if total > BigUint::from(edge_cap) {
        return Err(Error::CapExceeded { what: "complement edges", required: total, cap: edge_cap });
    }
    let present = h.edges();
    let edges = Combinations::new(h.n(), r).filter(|c| present.binary_search(c).is_err()).collect();
    Hypergraph::uniform(h.n(), r, edges)
}

/// Outcome of comparing a covering number `u` against
/// `n/(5r) <= u / ratio < 2r log2(n/r)`, with `ratio` the de Caen ratio.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SandwichCheck {
    /// `None` outside `2r - 1 <= n < r^2`, where the lower side is not claimed.
    pub lower_holds: Option<bool>,
    pub upper_holds: bool,
}

pub fn covering_sandwich(n: usize, r: usize, u: u64) -> Result<SandwichCheck> {
    let ratio = de_caen_bound(n, r)?;
    let normalized = int(u) / &ratio;
    let lower_holds = (n < r * r).then(|| BigRational::new(BigInt::from(n), BigInt::from(5 * r)) <= normalized);
    let (ln_lo, _) = ln_bounds(&BigRational::new(BigInt::from(n), BigInt::from(r)));
    let (_, ln2_hi) = ln_bounds(&int(2));
    // log2(n/r) >= ln_lo / ln2_hi; holding against that is conclusive.
    let upper_holds = normalized < int(2 * r as u64) * ln_lo / ln2_hi;
    Ok(SandwichCheck { lower_holds, upper_holds })
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BoundsReport {
    pub n: usize,
    pub r: usize,
    pub de_caen: String,
    pub de_caen_approx: f64,
    pub de_caen_ceil: String,
    pub refined_lower: Option<String>,
    pub refined_lower_approx: Option<f64>,
    pub greedy_upper_u: String,
    pub sidorenko_u: Option<u64>,
    pub trivial_upper_complete: String,
}

pub fn bounds_report(n: usize, r: usize) -> Result<BoundsReport> {
    let de_caen = de_caen_bound(n, r)?;
    let refined = refined_lower_bound(n, r).ok();
    Ok(BoundsReport {
        n,
        r,
        de_caen_approx: to_f64(&de_caen),
        de_caen: rational_string(&de_caen),
        de_caen_ceil: ceil_u(&de_caen).to_string(),
        refined_lower_approx: refined.as_ref().map(to_f64),
        refined_lower: refined.as_ref().map(rational_string),
        greedy_upper_u: greedy_upper_estimate_u(n, r)?.to_string(),
        sidorenko_u: sidorenko_reference(n, r),
        trivial_upper_complete: binomial(2 * r as u64 - 1, r as u64).to_string(),
    })
}

impl BoundsReport {
    pub fn table(&self) -> String {
        let mut rows = vec![
            ("n".to_string(), self.n.to_string()),
            ("r".to_string(), self.r.to_string()),
            ("de Caen ratio".to_string(), format!("{} (~{:.4})", self.de_caen, self.de_caen_approx)),
            ("de Caen ceiling".to_string(), self.de_caen_ceil.clone()),
        ];
        rows.push((
            "refined lower bound".to_string(),
            match (&self.refined_lower, self.refined_lower_approx) {
                (Some(s), Some(f)) => format!("{s} (~{f:.4})"),
                _ => "n/a (needs n < r^2)".to_string(),
            },
        ));
        rows.push(("greedy upper bound on U".to_string(), self.greedy_upper_u.clone()));
        rows.push(("closed-form U".to_string(), self.sidorenko_u.map_or_else(|| "n/a".to_string(), |v| v.to_string())));
        rows.push(("C(2r-1, r)".to_string(), self.trivial_upper_complete.clone()));
        let width = rows.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
        rows.iter().map(|(k, v)| format!("{k:<width$}  {v}\n")).collect()
    }
}
