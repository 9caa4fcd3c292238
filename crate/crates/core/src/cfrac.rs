//! Truncated expansion of S-, J- and T-type continued fractions with
//! polynomial coefficients, and Flajolet path-sum evaluation, each
//! computed by independent algorithms:
//!
//! * `expand` — dynamic programming over height-bounded path prefixes
//!   (pure polynomial arithmetic, no series division);
//! * `expand_recurrence` — the bottom-up truncated continued-fraction
//!   recursion, with series division by the standard inverse recurrence;
//! * `path_sum` / `path_sum_labelled` — literal enumeration of (labelled)
//!   paths with step weights.
//!
//! The cross-checks between these are part of the test suite.

use num_bigint::BigInt;

use crate::paths::{
    enumerate_labelled, enumerate_paths, enumerate_schroder_general, LabelRuleset, PathKind, Step,
};
use crate::poly::{MultiPoly, SeriesT};

/// Coefficients of one continued fraction, stored from depth-indexed
/// closures: `alpha(k)` is `α_k` (`k ≥ 1`), `gamma(n)` is `γ_n` (`n ≥ 0`),
/// `beta(n)` is `β_n` (`n ≥ 1`), `delta(n)` is `δ_n` (`n ≥ 1`).
#[derive(Clone, Debug)]
pub enum CfSpec {
    S { alpha: Vec<MultiPoly> },
    J { gamma: Vec<MultiPoly>, beta: Vec<MultiPoly> },
    T { alpha: Vec<MultiPoly>, delta: Vec<MultiPoly> },
}

impl CfSpec {
    pub fn s(depth: usize, alpha: impl Fn(usize) -> MultiPoly) -> CfSpec {
        CfSpec::S {
            alpha: (1..=depth).map(alpha).collect(),
        }
    }

    pub fn j(
        depth: usize,
        gamma: impl Fn(usize) -> MultiPoly,
        beta: impl Fn(usize) -> MultiPoly,
    ) -> CfSpec {
        CfSpec::J {
            gamma: (0..=depth).map(gamma).collect(),
            beta: (1..=depth).map(beta).collect(),
        }
    }

    pub fn t(
        depth: usize,
        alpha: impl Fn(usize) -> MultiPoly,
        delta: impl Fn(usize) -> MultiPoly,
    ) -> CfSpec {
        CfSpec::T {
            alpha: (1..=depth).map(alpha).collect(),
            delta: (1..=depth).map(delta).collect(),
        }
    }

    /// Depth to which coefficients are available.
    pub fn depth(&self) -> usize {
        match self {
            CfSpec::S { alpha } => alpha.len(),
            CfSpec::J { beta, .. } => beta.len(),
            CfSpec::T { alpha, .. } => alpha.len(),
        }
    }

    /// `α_k`, 1-indexed (S- and T-fractions).
    pub fn alpha(&self, k: usize) -> &MultiPoly {
        match self {
            CfSpec::S { alpha } | CfSpec::T { alpha, .. } => &alpha[k - 1],
            CfSpec::J { .. } => panic!("J-fractions have no α coefficients"),
        }
    }

    /// `γ_n`, 0-indexed (J-fractions).
    pub fn gamma(&self, n: usize) -> &MultiPoly {
        match self {
            CfSpec::J { gamma, .. } => &gamma[n],
            _ => panic!("only J-fractions have γ coefficients"),
        }
    }

    /// `β_n`, 1-indexed (J-fractions).
    pub fn beta(&self, n: usize) -> &MultiPoly {
        match self {
            CfSpec::J { beta, .. } => &beta[n - 1],
            _ => panic!("only J-fractions have β coefficients"),
        }
    }

    /// `δ_n`, 1-indexed (T-fractions).
    pub fn delta(&self, n: usize) -> &MultiPoly {
        match self {
            CfSpec::T { delta, .. } => &delta[n - 1],
            _ => panic!("only T-fractions have δ coefficients"),
        }
    }
}

/// Coefficients of `t^0..t^N` of the continued fraction, computed by
/// dynamic programming over the corresponding path model: Dyck paths for
/// S-fractions (fall from height `h` weighs `α_h`), Motzkin paths for
/// J-fractions (fall `β_h`, level `γ_h`), Schröder paths for T-fractions
/// (fall `α_h`, long level at `h` weighs `δ_{h+1}`).
pub fn expand(cf: &CfSpec, n: usize) -> SeriesT {
    assert!(
        cf.depth() > n,
        "need coefficients to depth {} for order {n}",
        n + 1
    );
    let mut series = SeriesT::zero(n);
    match cf {
        CfSpec::S { .. } => {
            // abscissa 0..2n, heights 0..n
            let mut dp = vec![vec![MultiPoly::zero(); n + 2]; 2 * n + 1];
            dp[0][0] = MultiPoly::one();
            for j in 0..2 * n {
                for h in 0..=n {
                    if dp[j][h].is_zero() {
                        continue;
                    }
                    let here = dp[j][h].clone();
                    dp[j + 1][h + 1].add_assign(&here);
                    if h >= 1 {
                        let weighted = here.mul(cf.alpha(h));
                        dp[j + 1][h - 1].add_assign(&weighted);
                    }
                }
            }
            for k in 0..=n {
                series.set_coeff(k, dp[2 * k][0].clone());
            }
        }
        CfSpec::J { .. } => {
            let mut dp = vec![vec![MultiPoly::zero(); n + 2]; n + 1];
            dp[0][0] = MultiPoly::one();
            for j in 0..n {
                for h in 0..=n {
                    if dp[j][h].is_zero() {
                        continue;
                    }
                    let here = dp[j][h].clone();
                    dp[j + 1][h + 1].add_assign(&here);
                    if h >= 1 {
                        let weighted = here.mul(cf.beta(h));
                        dp[j + 1][h - 1].add_assign(&weighted);
                    }
                    let levelled = here.mul(cf.gamma(h));
                    dp[j + 1][h].add_assign(&levelled);
                }
            }
            for (k, row) in dp.iter().enumerate() {
                series.set_coeff(k, row[0].clone());
            }
        }
        CfSpec::T { .. } => {
            let mut dp = vec![vec![MultiPoly::zero(); n + 2]; 2 * n + 1];
            dp[0][0] = MultiPoly::one();
            for j in 0..2 * n {
                for h in 0..=n {
                    if dp[j][h].is_zero() {
                        continue;
                    }
                    let here = dp[j][h].clone();
                    dp[j + 1][h + 1].add_assign(&here);
                    if h >= 1 {
                        let weighted = here.mul(cf.alpha(h));
                        dp[j + 1][h - 1].add_assign(&weighted);
                    }
                    if j + 2 <= 2 * n {
                        let levelled = here.mul(cf.delta(h + 1));
                        dp[j + 2][h].add_assign(&levelled);
                    }
                }
            }
            for k in 0..=n {
                series.set_coeff(k, dp[2 * k][0].clone());
            }
        }
    }
    series
}

/// The same expansion through the bottom-up truncated continued-fraction
/// recursion `T_k = 1 / (1 - c_k - d_k T_{k+1})`, starting from `T_depth
/// = 1`. Truncation at `depth = N+1` levels is already exact for the
/// coefficients through `t^N`; this is asserted by comparing with depth
/// `N+2`.
pub fn expand_recurrence(cf: &CfSpec, n: usize) -> SeriesT {
    let once = expand_recurrence_at_depth(cf, n, n + 1);
    let deeper = expand_recurrence_at_depth(cf, n, n + 2);
    assert_eq!(once, deeper, "truncation depth N+1 must already be exact");
    once
}

fn expand_recurrence_at_depth(cf: &CfSpec, n: usize, depth: usize) -> SeriesT {
    assert!(cf.depth() >= depth, "need coefficients to depth {depth}");
    // Level k sits behind k fraction bars, each worth at least one power
    // of t (two for J-fractions), so its series only needs order n - k
    // (resp. n - 2k). Without this the tail coefficients blow up.
    let step = match cf {
        CfSpec::J { .. } => 2,
        _ => 1,
    };
    let order_of = |k: usize| n.saturating_sub(step * k);
    let mut level = SeriesT::one(order_of(depth));
    for k in (0..depth).rev() {
        let order = order_of(k);
        // c_k, d_k for level k of the fraction
        let mut denom = SeriesT::one(order);
        match cf {
            CfSpec::S { .. } => {
                // d_k = α_{k+1} t
                let shifted = shift_mul(&level, cf.alpha(k + 1), 1, order);
                denom = denom.sub(&shifted);
            }
            CfSpec::J { .. } => {
                let mut c = SeriesT::zero(order);
                if order >= 1 {
                    c.set_coeff(1, cf.gamma(k).clone());
                }
                denom = denom.sub(&c);
                let shifted = shift_mul(&level, cf.beta(k + 1), 2, order);
                denom = denom.sub(&shifted);
            }
            CfSpec::T { .. } => {
                let mut c = SeriesT::zero(order);
                if order >= 1 {
                    c.set_coeff(1, cf.delta(k + 1).clone());
                }
                denom = denom.sub(&c);
                let shifted = shift_mul(&level, cf.alpha(k + 1), 1, order);
                denom = denom.sub(&shifted);
            }
        }
        level = denom.invert();
    }
    level
}

/// `series * poly * t^shift`, truncated at order `n`.
fn shift_mul(series: &SeriesT, poly: &MultiPoly, shift: usize, n: usize) -> SeriesT {
    let mut out = SeriesT::zero(n);
    for k in 0..=n {
        if k + shift > n {
            break;
        }
        out.set_coeff(k + shift, series.coeff(k).mul(poly));
    }
    out
}

/// Height-dependent step weights for plain paths. Steps with no entry
/// weigh zero, which forbids them.
pub struct WeightScheme {
    rise: Box<dyn Fn(i64) -> MultiPoly>,
    fall: Box<dyn Fn(i64) -> MultiPoly>,
    level: Box<dyn Fn(u8, i64) -> MultiPoly>,
    long_level: Box<dyn Fn(i64) -> MultiPoly>,
}

impl WeightScheme {
    pub fn dyck(
        rise: impl Fn(i64) -> MultiPoly + 'static,
        fall: impl Fn(i64) -> MultiPoly + 'static,
    ) -> WeightScheme {
        WeightScheme {
            rise: Box::new(rise),
            fall: Box::new(fall),
            level: Box::new(|_, _| MultiPoly::zero()),
            long_level: Box::new(|_| MultiPoly::zero()),
        }
    }

    pub fn motzkin(
        rise: impl Fn(i64) -> MultiPoly + 'static,
        fall: impl Fn(i64) -> MultiPoly + 'static,
        level: impl Fn(u8, i64) -> MultiPoly + 'static,
    ) -> WeightScheme {
        WeightScheme {
            rise: Box::new(rise),
            fall: Box::new(fall),
            level: Box::new(level),
            long_level: Box::new(|_| MultiPoly::zero()),
        }
    }

    pub fn schroder(
        rise: impl Fn(i64) -> MultiPoly + 'static,
        fall: impl Fn(i64) -> MultiPoly + 'static,
        long_level: impl Fn(i64) -> MultiPoly + 'static,
    ) -> WeightScheme {
        WeightScheme {
            rise: Box::new(rise),
            fall: Box::new(fall),
            level: Box::new(|_, _| MultiPoly::zero()),
            long_level: Box::new(long_level),
        }
    }

    /// The path-model weights of a continued fraction: rises weigh 1 and
    /// the fraction coefficients sit on falls and (long) level steps.
    pub fn from_cf(cf: &CfSpec) -> (PathKind, WeightScheme) {
        match cf.clone() {
            CfSpec::S { alpha } => (
                PathKind::Dyck,
                WeightScheme::dyck(
                    |_| MultiPoly::one(),
                    move |h| alpha[(h - 1) as usize].clone(),
                ),
            ),
            CfSpec::J { gamma, beta } => (
                PathKind::Motzkin,
                WeightScheme::motzkin(
                    |_| MultiPoly::one(),
                    move |h| beta[(h - 1) as usize].clone(),
                    move |_, h| gamma[h as usize].clone(),
                ),
            ),
            CfSpec::T { alpha, delta } => (
                PathKind::Schroder,
                WeightScheme::schroder(
                    |_| MultiPoly::one(),
                    move |h| alpha[(h - 1) as usize].clone(),
                    move |h| delta[h as usize].clone(),
                ),
            ),
        }
    }

    /// Weight of one step starting at height `h`.
    pub fn step_weight(&self, step: Step, h: i64) -> MultiPoly {
        match step {
            Step::Rise => (self.rise)(h),
            Step::Fall => (self.fall)(h),
            Step::Level(colour) => (self.level)(colour, h),
            Step::LongLevel => (self.long_level)(h),
        }
    }
}

/// Sum over all paths of the step-weight product, collected by length
/// (semi-length for Dyck and Schröder paths): literal path enumeration.
pub fn path_sum(kind: PathKind, weights: &WeightScheme, n: usize) -> SeriesT {
    let mut series = SeriesT::zero(n);
    for k in 0..=n {
        let length = match kind {
            PathKind::Motzkin | PathKind::ColouredMotzkin => k,
            PathKind::Dyck | PathKind::Schroder | PathKind::AlmostDyck => 2 * k,
        };
        let paths = if kind == PathKind::Schroder {
            enumerate_schroder_general(length)
        } else {
            enumerate_paths(kind, length)
        };
        let mut total = MultiPoly::zero();
        for path in paths {
            let heights = path.heights();
            let mut weight = MultiPoly::one();
            for (idx, &step) in path.steps().iter().enumerate() {
                weight = weight.mul(&weights.step_weight(step, heights[idx]));
                if weight.is_zero() {
                    break;
                }
            }
            total.add_assign(&weight);
        }
        series.set_coeff(k, total);
    }
    series
}

/// Per-label step weights `a_{h,ξ}`, `b_{h,ξ}`, `c_{h,ξ}` over a label
/// ruleset. `c` refers to coloured level steps on Motzkin paths and to
/// long level steps on Schröder paths.
pub struct LabelledWeightScheme {
    pub ruleset: LabelRuleset,
    rise: Box<dyn Fn(i64, usize) -> MultiPoly>,
    fall: Box<dyn Fn(i64, usize) -> MultiPoly>,
    level: Box<dyn Fn(u8, i64, usize) -> MultiPoly>,
    long_level: Box<dyn Fn(i64, usize) -> MultiPoly>,
}

impl LabelledWeightScheme {
    pub fn new(
        ruleset: LabelRuleset,
        rise: impl Fn(i64, usize) -> MultiPoly + 'static,
        fall: impl Fn(i64, usize) -> MultiPoly + 'static,
        level: impl Fn(u8, i64, usize) -> MultiPoly + 'static,
    ) -> LabelledWeightScheme {
        LabelledWeightScheme {
            ruleset,
            rise: Box::new(rise),
            fall: Box::new(fall),
            level: Box::new(level),
            long_level: Box::new(|_, _| MultiPoly::zero()),
        }
    }

    /// Schröder-path variant: per-label weights on long level steps.
    pub fn new_schroder(
        ruleset: LabelRuleset,
        rise: impl Fn(i64, usize) -> MultiPoly + 'static,
        fall: impl Fn(i64, usize) -> MultiPoly + 'static,
        long_level: impl Fn(i64, usize) -> MultiPoly + 'static,
    ) -> LabelledWeightScheme {
        LabelledWeightScheme {
            ruleset,
            rise: Box::new(rise),
            fall: Box::new(fall),
            level: Box::new(|_, _, _| MultiPoly::zero()),
            long_level: Box::new(long_level),
        }
    }

    pub fn step_weight(&self, step: Step, h: i64, label: usize) -> MultiPoly {
        match step {
            Step::Rise => (self.rise)(h, label),
            Step::Fall => (self.fall)(h, label),
            Step::Level(colour) => (self.level)(colour, h, label),
            Step::LongLevel => (self.long_level)(h, label),
        }
    }

    /// Aggregate the per-label weights into plain step weights,
    /// `a_h = Σ_{ξ} a_{h,ξ}` and likewise for falls and (long) level
    /// steps.
    pub fn aggregate(self) -> WeightScheme {
        fn sum(bound: Option<usize>, mut weight: impl FnMut(usize) -> MultiPoly) -> MultiPoly {
            let mut acc = MultiPoly::zero();
            if let Some(b) = bound {
                for label in 0..=b {
                    acc.add_assign(&weight(label));
                }
            }
            acc
        }
        let ruleset = self.ruleset;
        let LabelledWeightScheme { rise, fall, level, long_level, .. } = self;
        WeightScheme {
            rise: Box::new(move |h| sum(ruleset.bound(Step::Rise, h), |l| rise(h, l))),
            fall: Box::new(move |h| sum(ruleset.bound(Step::Fall, h), |l| fall(h, l))),
            level: Box::new(move |colour, h| {
                sum(ruleset.bound(Step::Level(colour), h), |l| level(colour, h, l))
            }),
            long_level: Box::new(move |h| {
                sum(ruleset.bound(Step::LongLevel, h), |l| long_level(h, l))
            }),
        }
    }
}

/// Sum over all labelled paths of the per-label step-weight product.
pub fn path_sum_labelled(kind: PathKind, weights: &LabelledWeightScheme, n: usize) -> SeriesT {
    let mut series = SeriesT::zero(n);
    for k in 0..=n {
        let length = match kind {
            PathKind::Motzkin | PathKind::ColouredMotzkin => k,
            PathKind::Dyck | PathKind::Schroder | PathKind::AlmostDyck => 2 * k,
        };
        let mut total = MultiPoly::zero();
        for lp in enumerate_labelled(kind, length, weights.ruleset) {
            let heights = lp.path.heights();
            let mut weight = MultiPoly::one();
            for (idx, (&step, &label)) in lp.path.steps().iter().zip(&lp.labels).enumerate() {
                weight = weight.mul(&weights.step_weight(step, heights[idx], label));
                if weight.is_zero() {
                    break;
                }
            }
            total.add_assign(&weight);
        }
        series.set_coeff(k, total);
    }
    series
}

/// If every coefficient of the series is a constant, those integers.
pub fn integer_coeffs(series: &SeriesT) -> Option<Vec<BigInt>> {
    series.coeffs().iter().map(|p| p.constant_value()).collect()
}

fn int_series(cf: &CfSpec, n: usize) -> Vec<BigInt> {
    integer_coeffs(&expand(cf, n)).expect("integer continued fraction")
}

/// The factorials via the S-fraction with `α_{2k-1} = α_{2k} = k`.
pub fn factorials(n: usize) -> Vec<BigInt> {
    let cf = CfSpec::s(n + 2, |k| MultiPoly::constant((k as i64 + 1) / 2));
    int_series(&cf, n)
}

/// The Genocchi numbers via the S-fraction with `α_{2k-1} = k²`,
/// `α_{2k} = k(k+1)`.
pub fn genocchi(n: usize) -> Vec<BigInt> {
    let cf = CfSpec::s(n + 2, |k| {
        let half = (k as i64 + 1) / 2;
        if k % 2 == 1 {
            MultiPoly::constant(half * half)
        } else {
            MultiPoly::constant(half * (half + 1))
        }
    });
    int_series(&cf, n)
}

/// The median Genocchi numbers via the S-fraction with
/// `α_{2k-1} = α_{2k} = k²`.
pub fn median_genocchi(n: usize) -> Vec<BigInt> {
    let cf = CfSpec::s(n + 2, |k| {
        let half = (k as i64 + 1) / 2;
        MultiPoly::constant(half * half)
    });
    int_series(&cf, n)
}

/// Median Genocchi numbers from the Genocchi numbers through the
/// alternating binomial sum `h_n = Σ_{i} (-1)^i C(n, 2i+1) g_{n-1-i}`
/// (`h_0 = 1` by convention).
pub fn median_from_genocchi(n: usize) -> Vec<BigInt> {
    let g = genocchi(n);
    let mut out = Vec::with_capacity(n + 1);
    for m in 0..=n {
        if m == 0 {
            out.push(BigInt::from(1));
            continue;
        }
        let mut h = BigInt::from(0);
        for i in 0..m {
            if 2 * i + 1 > m {
                break;
            }
            let term = binomial(m, 2 * i + 1) * &g[m - 1 - i];
            if i % 2 == 0 {
                h += term;
            } else {
                h -= term;
            }
        }
        out.push(h);
    }
    out
}

fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::from(0);
    }
    let mut num = BigInt::from(1);
    for i in 0..k {
        num *= BigInt::from(n - i);
        num /= BigInt::from(i + 1);
    }
    num
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::vars;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn factorial_s_fraction() {
        assert_eq!(factorials(7), ints(&[1, 1, 2, 6, 24, 120, 720, 5040]));
    }

    #[test]
    fn genocchi_sequences() {
        assert_eq!(genocchi(6), ints(&[1, 1, 3, 17, 155, 2073, 38227]));
        assert_eq!(median_genocchi(6), ints(&[1, 1, 2, 8, 56, 608, 9440]));
        assert_eq!(median_from_genocchi(6), median_genocchi(6));
        assert_eq!(median_from_genocchi(3)[3], BigInt::from(8));
    }

    #[test]
    fn geometric_j_fraction() {
        // all β = 0, γ_n = γ_0 constant: series is geometric in γ_0.
        let g = MultiPoly::var(vars::x());
        let cf = CfSpec::j(8, |_| g.clone(), |_| MultiPoly::zero());
        let series = expand(&cf, 5);
        for k in 0..=5 {
            assert_eq!(series.coeff(k), &g.pow(k as u32));
        }
    }

    #[test]
    fn t_fraction_with_only_delta_1() {
        let d = MultiPoly::var(vars::y());
        let cf = CfSpec::t(
            8,
            |_| MultiPoly::zero(),
            |n| if n == 1 { d.clone() } else { MultiPoly::zero() },
        );
        let series = expand(&cf, 4);
        for k in 0..=4 {
            assert_eq!(series.coeff(k), &d.pow(k as u32));
        }
    }

    #[test]
    fn expand_matches_recurrence() {
        let cf = CfSpec::s(8, |k| MultiPoly::constant((k as i64 + 1) / 2));
        assert_eq!(expand(&cf, 6), expand_recurrence(&cf, 6));

        let cf = CfSpec::j(
            8,
            |n| MultiPoly::var(vars::w(n as u32)),
            |n| MultiPoly::var(vars::a(n as u32)),
        );
        assert_eq!(expand(&cf, 5), expand_recurrence(&cf, 5));

        let cf = CfSpec::t(
            8,
            |k| MultiPoly::var(vars::a(k as u32)),
            |n| MultiPoly::var(vars::e(n as u32)),
        );
        assert_eq!(expand(&cf, 5), expand_recurrence(&cf, 5));
    }

    #[test]
    fn unit_weight_path_sums() {
        let ones = WeightScheme::motzkin(
            |_| MultiPoly::one(),
            |_| MultiPoly::one(),
            |_, _| MultiPoly::one(),
        );
        assert_eq!(
            integer_coeffs(&path_sum(PathKind::Motzkin, &ones, 5)).unwrap(),
            ints(&[1, 1, 2, 4, 9, 21])
        );

        let ones = WeightScheme::dyck(|_| MultiPoly::one(), |_| MultiPoly::one());
        assert_eq!(
            integer_coeffs(&path_sum(PathKind::Dyck, &ones, 4)).unwrap(),
            ints(&[1, 1, 2, 5, 14])
        );

        let ones = WeightScheme::schroder(
            |_| MultiPoly::one(),
            |_| MultiPoly::one(),
            |_| MultiPoly::one(),
        );
        assert_eq!(
            integer_coeffs(&path_sum(PathKind::Schroder, &ones, 3)).unwrap(),
            ints(&[1, 2, 6, 22])
        );
    }

    #[test]
    fn path_sum_agrees_with_expand() {
        let cf = CfSpec::j(
            8,
            |n| MultiPoly::var(vars::w(n as u32)),
            |n| MultiPoly::var(vars::a(n as u32)),
        );
        let (kind, scheme) = WeightScheme::from_cf(&cf);
        assert_eq!(path_sum(kind, &scheme, 5), expand(&cf, 5));

        let cf = CfSpec::t(
            8,
            |k| MultiPoly::var(vars::a(k as u32)),
            |n| MultiPoly::var(vars::e(n as u32)),
        );
        let (kind, scheme) = WeightScheme::from_cf(&cf);
        assert_eq!(path_sum(kind, &scheme, 4), expand(&cf, 4));
    }

    #[test]
    fn labelled_schroder_sum_matches_almost_dyck_sum() {
        // The ψ transform replaces each (fall, rise) dip through height -1
        // by one long level step at height 0; with the long-level weight
        // chosen as the product of the dip's step weights, the labelled
        // sums over the two path families coincide, and each agrees with
        // its aggregated plain sum.
        fn rise(h: i64, label: usize) -> MultiPoly {
            if h >= 0 {
                MultiPoly::var(vars::a(label as u32))
            } else {
                MultiPoly::var(vars::y())
            }
        }
        fn fall(h: i64, label: usize) -> MultiPoly {
            if h >= 1 {
                MultiPoly::var(vars::b(h as u32, label as u32))
            } else {
                MultiPoly::var(vars::x())
            }
        }
        fn dip(_: i64, _: usize) -> MultiPoly {
            MultiPoly::var(vars::x()).mul(&MultiPoly::var(vars::y()))
        }
        let almost = LabelledWeightScheme::new(LabelRuleset::DPermutation, rise, fall, |_, _, _| {
            MultiPoly::zero()
        });
        let schroder = LabelledWeightScheme::new_schroder(LabelRuleset::DPermutation, rise, fall, dip);
        let lhs = path_sum_labelled(PathKind::AlmostDyck, &almost, 4);
        let rhs = path_sum_labelled(PathKind::Schroder, &schroder, 4);
        assert_eq!(lhs, rhs);
        assert_eq!(lhs, path_sum(PathKind::AlmostDyck, &almost.aggregate(), 4));
        assert_eq!(rhs, path_sum(PathKind::Schroder, &schroder.aggregate(), 4));
    }

    #[test]
    fn labelled_sums_aggregate_to_plain_sums() {
        // a_{h,ξ} = a_ξ, b_{h,ξ} = b_{h-1-ξ,ξ}, colour-wise c/d/e weights:
        // the aggregated scheme must give the same series.
        let labelled = LabelledWeightScheme::new(
            LabelRuleset::Permutation,
            |_, label| MultiPoly::var(vars::a(label as u32)),
            |h, label| MultiPoly::var(vars::b((h - 1 - label as i64) as u32, label as u32)),
            |colour, h, label| match colour {
                1 => MultiPoly::var(vars::c((h - 1 - label as i64) as u32, label as u32)),
                2 => MultiPoly::var(vars::d((h - 1 - label as i64) as u32, label as u32)),
                _ => MultiPoly::var(vars::e(h as u32)),
            },
        );
        let lhs = path_sum_labelled(PathKind::ColouredMotzkin, &labelled, 4);
        let rhs = path_sum(PathKind::ColouredMotzkin, &labelled.aggregate(), 4);
        assert_eq!(lhs, rhs);
    }
}
