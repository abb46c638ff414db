//! Closed-form dimensions and cardinality bounds for subspaces free of
//! low-depth product states, plus the combinatorial facts behind them.
//!
//! Dimension-valued formulas return [`BigUint`] so no parameter range can
//! overflow. The small counting helpers ([`f_w`], [`s_value`],
//! [`guaranteed_box_total`]) are generic over any unsigned-safe integer type.

use num_bigint::BigUint;
use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Equal-local-dimension setting: `n` parties of dimension `d`, and a depth
/// threshold `k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Scenario {
    pub d: u32,
    pub n: u32,
    pub k: u32,
}

impl Scenario {
    /// Validates `d >= 2`, `n >= 3` and `2 <= k <= n`.
    pub fn new(d: u32, n: u32, k: u32) -> Result<Self> {
        if d < 2 {
            return Err(Error::InvalidScenario(format!(
                "local dimension d = {d} must be at least 2"
            )));
        }
        if n < 3 {
            return Err(Error::InvalidScenario(format!(
                "party count n = {n} must be at least 3"
            )));
        }
        if k < 2 || k > n {
            return Err(Error::InvalidScenario(format!(
                "depth threshold k = {k} must satisfy 2 <= k <= n = {n}"
            )));
        }
        Ok(Self { d, n, k })
    }

    /// `floor(n / (k - 1))`: the number of full blocks of `k - 1` parties.
    pub fn t(&self) -> u32 {
        self.n / (self.k - 1)
    }

    /// Parties left over after the `t` full blocks.
    pub fn remainder(&self) -> u32 {
        self.n - self.t() * (self.k - 1)
    }

    /// Total dimension `d^n`.
    pub fn total_dim(&self) -> BigUint {
        pow(self.d, self.n)
    }
}

/// Integer sequence, e.g. block sizes of a partition of the parties.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Composition(pub Vec<u32>);

impl Composition {
    pub fn total(&self) -> u64 {
        self.0.iter().map(|&x| u64::from(x)).sum()
    }

    /// Parts sorted non-increasing with zeros dropped.
    pub fn canonical(&self) -> Composition {
        let mut parts: Vec<u32> = self.0.iter().copied().filter(|&x| x > 0).collect();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Composition(parts)
    }

    /// `sum_i (d^{x_i} - 1)`.
    pub fn convex_sum(&self, d: u32) -> BigUint {
        self.0.iter().map(|&x| pow(d, x) - 1u32).sum()
    }
}

fn pow(base: u32, exp: u32) -> BigUint {
    num_traits::pow(BigUint::from(base), exp as usize)
}

/// Largest dimension of a subspace all of whose vectors have depth `>= k`:
/// `d^n - (t d^{k-1} + d^{n-(k-1)t} - t)`.
pub fn max_kces_dim(s: Scenario) -> BigUint {
    s.total_dim() - spanning_threshold(s)
}

/// `t d^{k-1} + d^{n-(k-1)t} - t`, the complement of [`max_kces_dim`].
pub(crate) fn spanning_threshold(s: Scenario) -> BigUint {
    let t = BigUint::from(s.t());
    &t * pow(s.d, s.k - 1) + pow(s.d, s.remainder()) - t
}

/// Block sizes of the coarse-graining that attains [`max_kces_dim`]:
/// `k-1` repeated `t` times, then the remainder if it is nonzero.
pub fn optimal_partition_shape(s: Scenario) -> Composition {
    let mut parts = vec![s.k - 1; s.t() as usize];
    if s.remainder() > 0 {
        parts.push(s.remainder());
    }
    Composition(parts)
}

fn check_dims(dims: &[u64], min_len: usize) -> Result<()> {
    if dims.len() < min_len {
        return Err(Error::Precondition(format!("need at least {min_len} local dimensions")));
    }
    if let Some(d) = dims.iter().find(|&&d| d < 2) {
        return Err(Error::Precondition(format!("local dimension {d} is below 2")));
    }
    Ok(())
}

/// Largest completely entangled subspace of `C^{d_1} (x) ... (x) C^{d_n}`:
/// `prod d_i - (sum (d_i - 1) + 1)`.
pub fn max_ces_dim_hetero(dims: &[u64]) -> Result<BigUint> {
    check_dims(dims, 2)?;
    let prod: BigUint = dims.iter().map(|&d| BigUint::from(d)).product();
    Ok(prod - min_unextendible_size(dims)?)
}

/// Fewest product vectors that can be unextendible: `sum (d_i - 1) + 1`.
pub fn min_unextendible_size(dims: &[u64]) -> Result<BigUint> {
    check_dims(dims, 1)?;
    Ok(dims.iter().map(|&d| BigUint::from(d - 1)).sum::<BigUint>() + 1u32)
}

/// Which branch of the trivial minimal-cardinality formula applies.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TrivialCase {
    /// `d = 2` and `k = n`: the value is `d^n`.
    QubitGenuine,
    /// Base value `t (d^{k-1} - 1) + d^{n-(k-1)t}`.
    Base,
    /// Base value plus one.
    BasePlusOne,
}

pub fn trivial_case(s: Scenario) -> TrivialCase {
    if s.d == 2 && s.k == s.n {
        return TrivialCase::QubitGenuine;
    }
    let divides = s.remainder() == 0;
    let t_odd = s.t() % 2 == 1;
    let odd_d = s.d % 2 == 1;
    if odd_d || (divides && t_odd) || (!divides && !t_odd) {
        TrivialCase::Base
    } else {
        TrivialCase::BasePlusOne
    }
}

/// Minimal cardinality of an unextendible product basis on the optimal
/// coarse-grained space (the "trivial" lower bound for bases unextendible by
/// `(k-1)`-producible vectors).
pub fn min_upb_trivial(s: Scenario) -> BigUint {
    let base = BigUint::from(s.t()) * (pow(s.d, s.k - 1) - 1u32) + pow(s.d, s.remainder());
    match trivial_case(s) {
        TrivialCase::QubitGenuine => s.total_dim(),
        TrivialCase::Base => base,
        TrivialCase::BasePlusOne => base + 1u32,
    }
}

/// Pigeonhole lower bound on the size of a product basis unextendible by
/// `(k-1)`-producible vectors:
/// `d^{k-1} + (n-k+1) (floor((d^{k-1} - 2)/(k-1)) + 1)`.
pub fn pigeonhole_bound(s: Scenario) -> BigUint {
    let local = pow(s.d, s.k - 1);
    let step = (&local - 2u32) / (s.k - 1) + 1u32;
    local + BigUint::from(s.n - s.k + 1) * step
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CombinedBound {
    pub trivial: BigUint,
    pub pigeonhole: BigUint,
    pub value: BigUint,
    /// Whether the pigeonhole bound strictly improves on the trivial one.
    pub pigeonhole_strict: bool,
}

pub fn combined_lower_bound(s: Scenario) -> CombinedBound {
    let trivial = min_upb_trivial(s);
    let pigeonhole = pigeonhole_bound(s);
    let pigeonhole_strict = pigeonhole > trivial;
    let value = if pigeonhole_strict {
        pigeonhole.clone()
    } else {
        trivial.clone()
    };
    CombinedBound {
        trivial,
        pigeonhole,
        value,
        pigeonhole_strict,
    }
}

/// `(n - w) floor((m-1)/n) + max(m - w - n floor((m-1)/n), 1)`.
///
/// Requires `m >= 1` and `1 <= w <= n - 1`.
pub fn f_w<T: Integer + Clone>(m: T, n: T, w: T) -> T {
    let q = (m.clone() - T::one()).div_floor(&n);
    let used = w.clone() + n.clone() * q.clone();
    let tail = if m > used.clone() + T::one() {
        m - used
    } else {
        T::one()
    };
    (n - w) * q + tail
}

/// Guaranteed number of set members orthogonal to a fixed one on its best
/// `w` sites: `w floor((m-1)/n) + min(w, m - 1 - n floor((m-1)/n))`.
pub fn s_value<T: Integer + Clone>(m: T, n: T, w: T) -> T {
    let (q, r) = (m - T::one()).div_mod_floor(&n);
    w.clone() * q + w.min(r)
}

/// Generalized pigeonhole: with `p q + r` objects in `q` boxes, some `s` boxes
/// hold at least `p s + min(r, s)` objects.
pub fn guaranteed_box_total<T: Integer + Clone>(p: T, _q: T, r: T, s: T) -> T {
    p * s.clone() + r.min(s)
}

/// Upper limit on `n` for [`brute_force_partition_optimum`].
pub const BRUTE_FORCE_MAX_PARTIES: u32 = 12;

/// Maximizes `sum_i (d^{n_i} - 1) + 1` over all compositions of `n` with parts
/// at most `k - 1`, by enumerating every composition. Returns the maximum and
/// a maximizer in canonical (non-increasing) order.
pub fn brute_force_partition_optimum(s: Scenario) -> Result<(BigUint, Composition)> {
    if s.n > BRUTE_FORCE_MAX_PARTIES {
        return Err(Error::TooLarge {
            what: "party count",
            value: s.n as usize,
            limit: BRUTE_FORCE_MAX_PARTIES as usize,
        });
    }
    let cap = s.k - 1;
    let mut best: Option<(BigUint, Vec<u32>)> = None;
    let mut parts = Vec::new();
    visit_compositions(s.n, cap, &mut parts, &mut |c| {
        let value = Composition(c.to_vec()).convex_sum(s.d) + 1u32;
        if best.as_ref().is_none_or(|(b, _)| value > *b) {
            best = Some((value, c.to_vec()));
        }
    });
    let (value, parts) = best.expect("every n has a composition into parts of size 1");
    Ok((value, Composition(parts).canonical()))
}

// Ordered compositions of `remaining` into positive parts <= cap. Zero parts
// contribute d^0 - 1 = 0, so they never change the objective.
fn visit_compositions(remaining: u32, cap: u32, parts: &mut Vec<u32>, f: &mut impl FnMut(&[u32])) {
    if remaining == 0 {
        f(parts);
        return;
    }
    for part in 1..=cap.min(remaining) {
        parts.push(part);
        visit_compositions(remaining - part, cap, parts, f);
        parts.pop();
    }
}

/// True iff `x` is majorized by `y`: after sorting both non-increasing and
/// zero-padding to equal length, every prefix sum of `y` dominates the
/// corresponding prefix sum of `x`, and the totals agree. Unequal totals give
/// `false`.
pub fn majorizes(x: &Composition, y: &Composition) -> bool {
    if x.total() != y.total() {
        return false;
    }
    let mut xs = x.0.clone();
    let mut ys = y.0.clone();
    let len = xs.len().max(ys.len());
    xs.resize(len, 0);
    ys.resize(len, 0);
    xs.sort_unstable_by(|a, b| b.cmp(a));
    ys.sort_unstable_by(|a, b| b.cmp(a));
    let (mut px, mut py) = (0u64, 0u64);
    xs.iter().zip(&ys).all(|(&a, &b)| {
        px += u64::from(a);
        py += u64::from(b);
        px <= py
    })
}

/// `d^{n-1} + floor((d^{n-1} - 2)/(n-1)) + 1`, the `k = n` specialization of
/// [`pigeonhole_bound`].
pub fn genuine_pigeonhole_bound(d: u32, n: u32) -> BigUint {
    let local = pow(d, n - 1);
    let step = (&local - 2u32) / (n - 1) + 1u32;
    local + step
}

/// Closed form `t d^{k-1} - t + d^{n-t(k-1)}` of the composition optimum.
pub fn partition_optimum_closed_form(s: Scenario) -> BigUint {
    spanning_threshold(s)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sc(d: u32, n: u32, k: u32) -> Scenario {
        Scenario::new(d, n, k).unwrap()
    }

    fn big(v: u64) -> BigUint {
        BigUint::from(v)
    }

    #[test]
    fn scenario_validation() {
        assert!(Scenario::new(1, 4, 3).is_err());
        assert!(Scenario::new(2, 2, 2).is_err());
        assert!(Scenario::new(2, 4, 1).is_err());
        assert!(Scenario::new(2, 4, 5).is_err());
        assert_eq!(sc(2, 5, 3).t(), 2);
        assert_eq!(sc(2, 5, 3).remainder(), 1);
    }

    #[test]
    fn max_kces_dim_examples() {
        assert_eq!(max_kces_dim(sc(2, 4, 3)), big(9));
        assert_eq!(max_kces_dim(sc(2, 4, 2)), big(11));
        assert_eq!(max_kces_dim(sc(2, 4, 4)), big(7));
        assert_eq!(max_kces_dim(sc(3, 3, 2)), big(20));
        assert_eq!(max_kces_dim(sc(2, 3, 3)), big(3));
    }

    #[test]
    fn partition_shape_examples() {
        assert_eq!(optimal_partition_shape(sc(2, 4, 3)), Composition(vec![2, 2]));
        assert_eq!(optimal_partition_shape(sc(2, 5, 3)), Composition(vec![2, 2, 1]));
        for n in 3..9 {
            assert_eq!(optimal_partition_shape(sc(3, n, n)), Composition(vec![n - 1, 1]));
        }
    }

    #[test]
    fn hetero_examples() {
        assert_eq!(max_ces_dim_hetero(&[2, 2, 2]).unwrap(), big(4));
        assert_eq!(max_ces_dim_hetero(&[3, 3]).unwrap(), big(4));
        assert_eq!(max_ces_dim_hetero(&[2, 2]).unwrap(), big(1));
        assert!(max_ces_dim_hetero(&[2]).is_err());
        assert!(max_ces_dim_hetero(&[2, 1]).is_err());

        assert_eq!(min_unextendible_size(&[2, 2, 2]).unwrap(), big(4));
        assert_eq!(min_unextendible_size(&[3, 3, 3]).unwrap(), big(7));
        assert_eq!(min_unextendible_size(&[2, 2]).unwrap(), big(3));
    }

    #[test]
    fn trivial_bound_branches() {
        assert_eq!(trivial_case(sc(2, 4, 4)), TrivialCase::QubitGenuine);
        assert_eq!(min_upb_trivial(sc(2, 4, 4)), big(16));

        // even d, k-1 | n, even t
        assert_eq!(trivial_case(sc(2, 4, 3)), TrivialCase::BasePlusOne);
        assert_eq!(min_upb_trivial(sc(2, 4, 3)), big(8));

        // even d, k-1 | n, odd t
        assert_eq!(trivial_case(sc(2, 3, 2)), TrivialCase::Base);
        assert_eq!(min_upb_trivial(sc(2, 3, 2)), big(4));

        // odd d always takes the base value
        assert_eq!(trivial_case(sc(3, 4, 3)), TrivialCase::Base);
        assert_eq!(min_upb_trivial(sc(3, 4, 3)), big(17));

        // even d, k-1 does not divide n, even t: n=5, k=3 -> t=2, remainder 1
        assert_eq!(trivial_case(sc(2, 5, 3)), TrivialCase::Base);
        assert_eq!(min_upb_trivial(sc(2, 5, 3)), big(2 * 3 + 2));

        // even d, k-1 does not divide n, odd t: n=4, k=4 with d=4 -> t=1
        assert_eq!(trivial_case(sc(4, 4, 4)), TrivialCase::BasePlusOne);
        assert_eq!(min_upb_trivial(sc(4, 4, 4)), big(63 + 4 + 1));
    }

    #[test]
    fn pigeonhole_examples() {
        assert_eq!(pigeonhole_bound(sc(2, 4, 3)), big(8));
        assert_eq!(pigeonhole_bound(sc(2, 4, 4)), big(11));
        assert_eq!(pigeonhole_bound(sc(2, 3, 2)), big(4));
        assert_eq!(pigeonhole_bound(sc(3, 4, 3)), big(17));
        assert_eq!(genuine_pigeonhole_bound(2, 4), big(11));
    }

    #[test]
    fn combined_examples() {
        let c = combined_lower_bound(sc(2, 4, 3));
        assert_eq!((c.value, c.pigeonhole_strict), (big(8), false));
        let c = combined_lower_bound(sc(2, 4, 4));
        assert_eq!((c.value, c.pigeonhole_strict), (big(16), false));
        let c = combined_lower_bound(sc(3, 4, 3));
        assert_eq!((c.value, c.pigeonhole_strict), (big(17), false));
        // d = 3, n = 5, k = 3: trivial 2*8 + 3 = 19, pigeonhole 9 + 3*(3+1) = 21
        let c = combined_lower_bound(sc(3, 5, 3));
        assert_eq!((c.trivial.clone(), c.pigeonhole.clone()), (big(19), big(21)));
        assert_eq!((c.value, c.pigeonhole_strict), (big(21), true));
    }

    #[test]
    fn f_w_and_s_examples() {
        assert_eq!(f_w(8u64, 4, 2), 4);
        for n in 2..6u64 {
            for w in 1..n {
                assert_eq!(f_w(1u64, n, w), 1);
                assert_eq!(s_value(1u64, n, w), 0);
            }
        }
        assert_eq!(s_value(8u64, 4, 2), 4);
        // one step of the recurrence: 8 is divisible by 4, so f grows by one
        assert_eq!(f_w(9u64, 4, 2), f_w(8u64, 4, 2) + 1);
        assert_eq!(f_w(BigUint::from(8u32), big(4), big(2)), big(4));
    }

    #[test]
    fn box_total_examples() {
        assert_eq!(guaranteed_box_total(1u64, 4, 3, 2), 4);
        assert_eq!(guaranteed_box_total(5u64, 4, 3, 0), 0);
        assert_eq!(guaranteed_box_total(5u64, 4, 0, 4), 20);
    }

    #[test]
    fn brute_force_examples() {
        assert_eq!(
            brute_force_partition_optimum(sc(2, 4, 3)).unwrap(),
            (big(7), Composition(vec![2, 2]))
        );
        assert_eq!(
            brute_force_partition_optimum(sc(2, 3, 2)).unwrap(),
            (big(4), Composition(vec![1, 1, 1]))
        );
        let (v, arg) = brute_force_partition_optimum(sc(3, 5, 3)).unwrap();
        assert_eq!(v, big(19));
        assert_eq!(arg, Composition(vec![2, 2, 1]));
        assert!(brute_force_partition_optimum(sc(2, 13, 3)).is_err());
    }

    #[test]
    fn majorization_examples() {
        let c = |v: &[u32]| Composition(v.to_vec());
        assert!(majorizes(&c(&[2, 2, 1]), &c(&[2, 2, 1])));
        assert!(majorizes(&c(&[1, 1, 1, 1]), &c(&[2, 2])));
        assert!(!majorizes(&c(&[3, 1]), &c(&[2, 2])));
        assert!(majorizes(&c(&[2, 2]), &c(&[3, 1])));
        assert!(!majorizes(&c(&[2, 2]), &c(&[2, 1])));
    }
}
