//! The prime pair `(p, q)`, its four weights and the closed-form statements
//! about their Frobenius number.
//!
//! Notation: `p_half = (p-1)/2`, `q_half = (q-1)/2`,
//! `q = kappa*p + lambda` and `q_half = kappa_p*p_half + lambda_p`.
//! The weights are `d0 = pq`, `d1 = p_half*q`, `d2 = p*q_half`,
//! `d3 = (pq-1)/2` and a quadruple `(x, y, z, w)` stands for
//! `x*d0 + y*d1 + z*d2 + w*d3`.

use std::fmt;
use std::ops::{Add, Neg, Sub};

use crate::arith::{self, add, mul, sub};
use crate::error::{Error, Result};

/// An odd prime pair `2 < p < q` together with its division data.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PrimePair {
    pub p: i64,
    pub q: i64,
    pub p_half: i64,
    pub q_half: i64,
    pub kappa: i64,
    pub lambda: i64,
    pub kappa_p: i64,
    pub lambda_p: i64,
}

impl PrimePair {
    /// Validates `(p, q)` and derives every quotient and remainder.
    pub fn new(p: i64, q: i64) -> Result<Self> {
        for v in [p, q] {
            if v <= 2 || !arith::is_prime(v as u64) {
                return Err(Error::input(format!("{v} is not an odd prime")));
            }
        }
        if p >= q {
            return Err(Error::input(format!("need p < q, got p = {p}, q = {q}")));
        }
        // Landmarks are of order p^2 q; reject pairs whose weights would
        // already be out of range before any further work.
        mul(mul(p, p, "p^2 q")?, q, "p^2 q")?;

        let p_half = (p - 1) / 2;
        let q_half = (q - 1) / 2;
        let pair = PrimePair {
            p,
            q,
            p_half,
            q_half,
            kappa: q / p,
            lambda: q % p,
            kappa_p: q_half / p_half,
            lambda_p: q_half % p_half,
        };
        debug_assert!(pair.invariant_violations().is_empty());
        Ok(pair)
    }

    pub fn is_twin(&self) -> bool {
        self.q == self.p + 2
    }

    /// `kappa + lambda >= p`, the region where `g = ga`.
    pub fn kappa_lambda_large(&self) -> bool {
        self.kappa + self.lambda >= self.p
    }

    pub fn n(&self) -> i64 {
        self.p * self.q
    }

    /// Checks every structural identity relating the derived quantities.
    /// Returns a description of each violated identity; empty means sound.
    pub fn invariant_violations(&self) -> Vec<String> {
        let PrimePair {
            p,
            q,
            p_half,
            q_half,
            kappa,
            lambda,
            kappa_p,
            lambda_p,
        } = *self;
        let mut bad = Vec::new();
        let mut check = |ok: bool, what: &str| {
            if !ok {
                bad.push(format!("({p},{q}): {what}"));
            }
        };
        check(2 < p && p < q, "2 < p < q");
        check(
            q == kappa * p + lambda && (1..p).contains(&lambda),
            "q = kappa p + lambda",
        );
        check(
            q_half == kappa_p * p_half + lambda_p && (0..p_half).contains(&lambda_p),
            "q' = kappa' p' + lambda'",
        );
        check(
            (kappa + lambda) % 2 == 1,
            "kappa, lambda of opposite parity",
        );
        check(kappa_p >= kappa, "kappa' >= kappa");
        check(
            lambda_p == (kappa + lambda - 1) / 2 - (kappa_p - kappa) * p_half,
            "lambda' = (kappa+lambda-1)/2 - (kappa'-kappa) p'",
        );
        if kappa + lambda < p {
            check(kappa_p == kappa, "kappa' = kappa when kappa+lambda < p");
            check(
                lambda_p == (kappa + lambda - 1) / 2 && lambda_p >= 1,
                "lambda' = (kappa+lambda-1)/2 >= 1 when kappa+lambda < p",
            );
            check(lambda <= p - 3, "lambda <= p-3 when kappa+lambda < p");
            // p'/lambda' < p/lambda
            check(p_half * lambda < p * lambda_p, "p'/lambda' < p/lambda");
        }
        if p == 3 {
            check(kappa + lambda >= p, "p = 3 forces kappa+lambda >= 3");
        }
        bad
    }
}

impl fmt::Display for PrimePair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.p, self.q)
    }
}

/// Convenience alias for [`PrimePair::new`].
pub fn make_pair(p: i64, q: i64) -> Result<PrimePair> {
    PrimePair::new(p, q)
}

/// The four generators attached to a prime pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Weights {
    pub d0: i64,
    pub d1: i64,
    pub d2: i64,
    pub d3: i64,
}

impl Weights {
    pub fn of(pair: &PrimePair) -> Result<Self> {
        let d0 = mul(pair.p, pair.q, "d0")?;
        Ok(Weights {
            d0,
            d1: mul(pair.p_half, pair.q, "d1")?,
            d2: mul(pair.p, pair.q_half, "d2")?,
            d3: (d0 - 1) / 2,
        })
    }

    pub fn as_array(&self) -> [i64; 4] {
        [self.d0, self.d1, self.d2, self.d3]
    }
}

pub fn weights(pair: &PrimePair) -> Result<Weights> {
    Weights::of(pair)
}

/// Integer coefficients of the four weights. Entries may be negative.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Quadruple {
    pub x: i64,
    pub y: i64,
    pub z: i64,
    pub w: i64,
}

impl Quadruple {
    pub const ZERO: Quadruple = Quadruple::new(0, 0, 0, 0);

    pub const fn new(x: i64, y: i64, z: i64, w: i64) -> Self {
        Quadruple { x, y, z, w }
    }

    pub fn as_array(&self) -> [i64; 4] {
        [self.x, self.y, self.z, self.w]
    }

    pub fn is_nonnegative(&self) -> bool {
        self.as_array().iter().all(|&c| c >= 0)
    }

    pub fn checked_add(self, other: Quadruple) -> Result<Self> {
        Ok(Quadruple {
            x: add(self.x, other.x, "quadruple sum")?,
            y: add(self.y, other.y, "quadruple sum")?,
            z: add(self.z, other.z, "quadruple sum")?,
            w: add(self.w, other.w, "quadruple sum")?,
        })
    }

    pub fn checked_scale(self, k: i64) -> Result<Self> {
        Ok(Quadruple {
            x: mul(self.x, k, "quadruple scaling")?,
            y: mul(self.y, k, "quadruple scaling")?,
            z: mul(self.z, k, "quadruple scaling")?,
            w: mul(self.w, k, "quadruple scaling")?,
        })
    }
}

impl From<[i64; 4]> for Quadruple {
    fn from([x, y, z, w]: [i64; 4]) -> Self {
        Quadruple { x, y, z, w }
    }
}

// Unchecked operators are convenient for the small constant offsets in the
// constructions; anything that scales with the pair goes through the checked
// methods.
impl Add for Quadruple {
    type Output = Quadruple;
    fn add(self, o: Quadruple) -> Quadruple {
        Quadruple::new(self.x + o.x, self.y + o.y, self.z + o.z, self.w + o.w)
    }
}

impl Sub for Quadruple {
    type Output = Quadruple;
    fn sub(self, o: Quadruple) -> Quadruple {
        Quadruple::new(self.x - o.x, self.y - o.y, self.z - o.z, self.w - o.w)
    }
}

impl Neg for Quadruple {
    type Output = Quadruple;
    fn neg(self) -> Quadruple {
        Quadruple::new(-self.x, -self.y, -self.z, -self.w)
    }
}

impl fmt::Display for Quadruple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {}, {})", self.x, self.y, self.z, self.w)
    }
}

/// The linear form `x*d0 + y*d1 + z*d2 + w*d3`.
pub fn frak_f(weights: &Weights, quad: Quadruple) -> Result<i64> {
    arith::dot(&quad.as_array(), &weights.as_array(), "linear form")
}

/// The three closed-form candidates `ga >= gb`, `ga >= gc` for `g`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Landmarks {
    pub g_a: i64,
    pub g_b: i64,
    pub g_c: i64,
}

pub fn landmarks(pair: &PrimePair) -> Result<Landmarks> {
    let w = Weights::of(pair)?;
    let g_a = frak_f(
        &w,
        Quadruple::new(pair.p_half - 1, pair.p - 1, pair.kappa, -1),
    )?;
    let g_b = sub(g_a, mul(pair.lambda, w.d3, "gb")?, "gb")?;
    let g_c = sub(g_a, mul(pair.p - 3, w.d3, "gc")?, "gc")?;
    Ok(Landmarks { g_a, g_b, g_c })
}

/// Position of a pair in the classification grid. `tau` is only defined
/// when `kappa + lambda < p`, so [`PairClass::KappaLambdaLarge`] carries none.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PairClass {
    /// `kappa + lambda >= p`.
    KappaLambdaLarge,
    /// Type II, `kappa + lambda <= p - lambda`.
    TypeTwoSmall { tau: i64 },
    /// Type II, `kappa + lambda > p - lambda`.
    TypeTwoLarge { tau: i64 },
    /// Type I, `kappa + lambda <= p - lambda`.
    TypeOneSmall { tau: i64 },
    /// Type I, `kappa + lambda > p - lambda`; no closed form is known.
    TypeOneLarge { tau: i64 },
}

impl PairClass {
    pub const NAMES: [&'static str; 5] = [
        "KappaLambdaLarge",
        "TypeTwoSmall",
        "TypeTwoLarge",
        "TypeOneSmall",
        "TypeOneLarge",
    ];

    pub fn tau(&self) -> Option<i64> {
        match *self {
            PairClass::KappaLambdaLarge => None,
            PairClass::TypeTwoSmall { tau }
            | PairClass::TypeTwoLarge { tau }
            | PairClass::TypeOneSmall { tau }
            | PairClass::TypeOneLarge { tau } => Some(tau),
        }
    }

    pub fn name(&self) -> &'static str {
        Self::NAMES[self.index()]
    }

    /// Stable index into [`PairClass::NAMES`].
    pub fn index(&self) -> usize {
        match self {
            PairClass::KappaLambdaLarge => 0,
            PairClass::TypeTwoSmall { .. } => 1,
            PairClass::TypeTwoLarge { .. } => 2,
            PairClass::TypeOneSmall { .. } => 3,
            PairClass::TypeOneLarge { .. } => 4,
        }
    }

    /// Label used in the classification grid CSV; the unresolved region is
    /// called `white`.
    pub fn grid_label(&self) -> &'static str {
        match self {
            PairClass::TypeOneLarge { .. } => "white",
            other => other.name(),
        }
    }

    pub fn is_type_one(&self) -> bool {
        matches!(
            self,
            PairClass::TypeOneSmall { .. } | PairClass::TypeOneLarge { .. }
        )
    }

    pub fn is_type_two(&self) -> bool {
        matches!(
            self,
            PairClass::TypeTwoSmall { .. } | PairClass::TypeTwoLarge { .. }
        )
    }
}

impl fmt::Display for PairClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// `floor(lambda / (p - lambda))`.
pub fn tau(pair: &PrimePair) -> Option<i64> {
    (!pair.kappa_lambda_large()).then(|| pair.lambda / (pair.p - pair.lambda))
}

pub fn classify(pair: &PrimePair) -> PairClass {
    let Some(tau) = tau(pair) else {
        return PairClass::KappaLambdaLarge;
    };
    let small = pair.kappa + pair.lambda <= pair.p - pair.lambda;
    // Type II iff p'/lambda' <= (tau+2)/(tau+1); lambda' >= 1 here.
    let type_two = pair.p_half * (tau + 1) <= (tau + 2) * pair.lambda_p;
    match (type_two, small) {
        (true, true) => PairClass::TypeTwoSmall { tau },
        (true, false) => PairClass::TypeTwoLarge { tau },
        (false, true) => PairClass::TypeOneSmall { tau },
        (false, false) => PairClass::TypeOneLarge { tau },
    }
}

/// Which closed-form statement a prediction comes from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Reason {
    /// `kappa + lambda >= p` gives `g = ga`.
    GaAttained,
    /// Twin pairs and `p = 3` give `g = gc`.
    TwinOrThree,
    /// Type II with `kappa + lambda <= p - lambda` gives `g = gb`.
    GbAttained,
    /// Type II with `kappa + lambda > p - lambda` gives `gb < g < ga`.
    StrictlyBetweenGbGa,
    /// Type I with `kappa + lambda <= p - lambda` gives `gc <= g < gb`.
    BelowGb,
    /// The universal bracket `gc <= g < ga` for `kappa + lambda < p`.
    GeneralBounds,
}

impl Reason {
    pub fn name(&self) -> &'static str {
        match self {
            Reason::GaAttained => "ga-attained",
            Reason::TwinOrThree => "twin-or-three",
            Reason::GbAttained => "gb-attained",
            Reason::StrictlyBetweenGbGa => "between-gb-ga",
            Reason::BelowGb => "below-gb",
            Reason::GeneralBounds => "general-bounds",
        }
    }
}

/// What the closed forms assert about `g` for a pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Prediction {
    Exact {
        value: i64,
        source: Reason,
    },
    Interval {
        lo: i64,
        lo_inclusive: bool,
        hi: i64,
        hi_inclusive: bool,
        source: Reason,
    },
}

impl Prediction {
    pub fn contains(&self, g: i64) -> bool {
        match *self {
            Prediction::Exact { value, .. } => g == value,
            Prediction::Interval {
                lo,
                lo_inclusive,
                hi,
                hi_inclusive,
                ..
            } => {
                let above = if lo_inclusive { g >= lo } else { g > lo };
                let below = if hi_inclusive { g <= hi } else { g < hi };
                above && below
            }
        }
    }

    pub fn source(&self) -> Reason {
        match *self {
            Prediction::Exact { source, .. } | Prediction::Interval { source, .. } => source,
        }
    }

    /// `(lo, hi)`; both equal the value for an exact prediction.
    pub fn bounds(&self) -> (i64, i64) {
        match *self {
            Prediction::Exact { value, .. } => (value, value),
            Prediction::Interval { lo, hi, .. } => (lo, hi),
        }
    }

    /// `exact`, or the interval shape: `closed`, `half_open` (`[lo, hi)`),
    /// `open_closed` (`(lo, hi]`) or `open`.
    pub fn kind(&self) -> &'static str {
        match *self {
            Prediction::Exact { .. } => "exact",
            Prediction::Interval {
                lo_inclusive,
                hi_inclusive,
                ..
            } => match (lo_inclusive, hi_inclusive) {
                (true, true) => "closed",
                (true, false) => "half_open",
                (false, true) => "open_closed",
                (false, false) => "open",
            },
        }
    }
}

impl fmt::Display for Prediction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Prediction::Exact { value, source } => {
                write!(f, "g = {value} (exact, {})", source.name())
            }
            Prediction::Interval {
                lo,
                lo_inclusive,
                hi,
                hi_inclusive,
                source,
            } => write!(
                f,
                "{lo} {} g {} {hi} ({})",
                if lo_inclusive { "<=" } else { "<" },
                if hi_inclusive { "<=" } else { "<" },
                source.name()
            ),
        }
    }
}

pub fn predict_frobenius(pair: &PrimePair) -> Result<Prediction> {
    let lm = landmarks(pair)?;
    if pair.p == 3 || pair.is_twin() {
        return Ok(Prediction::Exact {
            value: lm.g_c,
            source: Reason::TwinOrThree,
        });
    }
    let interval = |lo, lo_inclusive, hi, source| Prediction::Interval {
        lo,
        lo_inclusive,
        hi,
        hi_inclusive: false,
        source,
    };
    Ok(match classify(pair) {
        PairClass::KappaLambdaLarge => Prediction::Exact {
            value: lm.g_a,
            source: Reason::GaAttained,
        },
        PairClass::TypeTwoSmall { .. } => Prediction::Exact {
            value: lm.g_b,
            source: Reason::GbAttained,
        },
        PairClass::TypeTwoLarge { .. } => {
            interval(lm.g_b, false, lm.g_a, Reason::StrictlyBetweenGbGa)
        }
        PairClass::TypeOneSmall { .. } => interval(lm.g_c, true, lm.g_b, Reason::BelowGb),
        PairClass::TypeOneLarge { .. } => interval(lm.g_c, true, lm.g_a, Reason::GeneralBounds),
    })
}

/// Closed form for the largest non-genus of the cyclic group of order `pq`,
/// where one is known.
pub fn nu_formula(pair: &PrimePair) -> Result<Option<i64>> {
    let (p, q) = (pair.p, pair.q);
    let n = pair.n();
    if p > 3 && pair.kappa_lambda_large() && q != 2 * p - 1 && q != 3 * p - 2 {
        let ga = landmarks(pair)?.g_a;
        return Ok(Some(add(sub(ga, n, "nu")?, 1, "nu")?));
    }
    if p > 3 && pair.is_twin() {
        let w = Weights::of(pair)?;
        let top = frak_f(&w, Quadruple::new(0, p - 1, 1, 0))?;
        return Ok(Some(add(sub(top, n, "nu")?, 1, "nu")?));
    }
    Ok(None)
}

/// `(g - pq + 1, g)`, the bracket on the non-genus given the Frobenius number.
pub fn nu_bounds(pair: &PrimePair, g: i64) -> Result<(i64, i64)> {
    Ok((add(sub(g, pair.n(), "nu bound")?, 1, "nu bound")?, g))
}

/// Whether `q1 + 1 <= q'/p'` for the leading partial quotient `q1` of
/// `q/p`. This is an independent route to `kappa + lambda >= p`.
pub fn leading_quotient_test(pair: &PrimePair) -> Result<bool> {
    let cf = arith::continued_fraction(pair.q as u64, pair.p as u64)?;
    let q1 = cf.partial_quotients[0] as i64;
    Ok((q1 + 1) * pair.p_half <= pair.q_half)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pair(p: i64, q: i64) -> PrimePair {
        PrimePair::new(p, q).unwrap()
    }

    #[test]
    fn derived_quantities() {
        let a = pair(5, 7);
        assert_eq!((a.kappa, a.lambda, a.kappa_p, a.lambda_p), (1, 2, 1, 1));
        let b = pair(5, 17);
        assert_eq!((b.kappa, b.lambda, b.kappa_p, b.lambda_p), (3, 2, 4, 0));
        assert_eq!((b.p_half, b.q_half), (2, 8));
    }

    #[test]
    fn rejects_bad_pairs() {
        assert!(matches!(PrimePair::new(7, 5), Err(Error::Input(_))));
        assert!(matches!(PrimePair::new(5, 5), Err(Error::Input(_))));
        assert!(matches!(PrimePair::new(4, 7), Err(Error::Input(_))));
        assert!(matches!(PrimePair::new(2, 7), Err(Error::Input(_))));
        assert!(matches!(PrimePair::new(5, 9), Err(Error::Input(_))));
        assert!(matches!(PrimePair::new(-3, 5), Err(Error::Input(_))));
        // 4294967291 and 4294967279 are primes near 2^32; p^2 q overflows.
        assert!(matches!(
            PrimePair::new(4_294_967_279, 4_294_967_291),
            Err(Error::Overflow(_))
        ));
    }

    #[test]
    fn weight_examples() {
        let w = |p, q| Weights::of(&pair(p, q)).unwrap().as_array();
        assert_eq!(w(5, 7), [35, 14, 15, 17]);
        assert_eq!(w(3, 5), [15, 5, 6, 7]);
        assert_eq!(w(11, 13), [143, 65, 66, 71]);
    }

    #[test]
    fn linear_form_examples() {
        let w = Weights::of(&pair(5, 7)).unwrap();
        assert_eq!(frak_f(&w, Quadruple::new(0, 3, 2, 1)), Ok(89));
        assert_eq!(frak_f(&w, Quadruple::ZERO), Ok(0));
        assert_eq!(frak_f(&w, Quadruple::new(1, 0, 0, -2)), Ok(1));
        assert_eq!(frak_f(&w, Quadruple::new(0, -1, 0, 1)), Ok(3));
        assert_eq!(frak_f(&w, Quadruple::new(0, 0, -1, 1)), Ok(2));
        assert!(matches!(
            frak_f(&w, Quadruple::new(i64::MAX, 0, 0, 0)),
            Err(Error::Overflow(_))
        ));
    }

    #[test]
    fn landmark_examples() {
        let lm = landmarks(&pair(5, 17)).unwrap();
        assert_eq!((lm.g_a, lm.g_b, lm.g_c), (299, 215, 215));
        let lm = landmarks(&pair(11, 13)).unwrap();
        assert_eq!((lm.g_a, lm.g_b, lm.g_c), (1217, 1075, 649));
        let lm = landmarks(&pair(3, 5)).unwrap();
        assert_eq!((lm.g_a, lm.g_c), (9, 9));
        // gb is negative here and meaningless for prediction.
        assert_eq!(lm.g_b, -5);
    }

    #[test]
    fn classification_examples() {
        assert_eq!(classify(&pair(5, 17)), PairClass::KappaLambdaLarge);
        assert_eq!(classify(&pair(5, 7)), PairClass::TypeTwoSmall { tau: 0 });
        assert_eq!(classify(&pair(11, 17)), PairClass::TypeOneLarge { tau: 1 });
        assert_eq!(classify(&pair(7, 17)), PairClass::TypeTwoLarge { tau: 0 });
        assert_eq!(classify(&pair(11, 13)), PairClass::TypeOneSmall { tau: 0 });
        assert_eq!(classify(&pair(11, 17)).grid_label(), "white");
        for q in [5, 7, 11, 13, 101] {
            assert_eq!(classify(&pair(3, q)), PairClass::KappaLambdaLarge);
        }
    }

    #[test]
    fn prediction_examples() {
        assert_eq!(
            predict_frobenius(&pair(5, 17)).unwrap(),
            Prediction::Exact {
                value: 299,
                source: Reason::GaAttained
            }
        );
        assert_eq!(
            predict_frobenius(&pair(5, 7)).unwrap(),
            Prediction::Exact {
                value: 55,
                source: Reason::TwinOrThree
            }
        );
        let p = predict_frobenius(&pair(7, 17)).unwrap();
        assert_eq!(
            p,
            Prediction::Interval {
                lo: 420,
                lo_inclusive: false,
                hi: 597,
                hi_inclusive: false,
                source: Reason::StrictlyBetweenGbGa
            }
        );
        assert!(p.contains(478));
        assert!(!p.contains(420));
        assert!(!p.contains(597));
        assert_eq!(p.kind(), "open");
        let white = predict_frobenius(&pair(11, 17)).unwrap();
        assert!(white.contains(1033));
        assert!(white.contains(849));
        assert_eq!(white.kind(), "half_open");
    }

    #[test]
    fn nu_formula_examples() {
        assert_eq!(nu_formula(&pair(5, 17)), Ok(Some(215)));
        assert_eq!(nu_formula(&pair(5, 7)), Ok(Some(37)));
        assert_eq!(nu_formula(&pair(11, 13)), Ok(Some(574)));
        assert_eq!(nu_formula(&pair(7, 13)), Ok(None));
        assert_eq!(nu_formula(&pair(3, 5)), Ok(None));
        // q = 3p - 2
        assert_eq!(nu_formula(&pair(7, 19)), Ok(None));
    }

    #[test]
    fn nu_bounds_examples() {
        assert_eq!(nu_bounds(&pair(5, 7), 55), Ok((21, 55)));
        assert_eq!(nu_bounds(&pair(5, 17), 299), Ok((215, 299)));
        assert_eq!(nu_bounds(&pair(3, 5), 9), Ok((-5, 9)));
    }

    fn odd_primes_upto(n: i64) -> Vec<i64> {
        (3..=n).filter(|&v| arith::is_prime(v as u64)).collect()
    }

    #[test]
    fn exhaustive_structure_below_300() {
        let primes = odd_primes_upto(300);
        let mut counts = [0usize; 5];
        for (i, &p) in primes.iter().enumerate() {
            for &q in &primes[i + 1..] {
                let pr = pair(p, q);
                assert!(
                    pr.invariant_violations().is_empty(),
                    "{:?}",
                    pr.invariant_violations()
                );
                let w = Weights::of(&pr).unwrap();
                assert_eq!(arith::gcd_all(&w.as_array().map(|d| d as u64)), Ok(1));
                assert!(w.d1 < w.d2 && w.d2 < w.d3 && w.d3 < w.d0);
                assert_eq!(w.d1 + pr.q_half, w.d3);
                assert_eq!(w.d2 + pr.p_half, w.d3);
                assert_eq!(2 * w.d3 + 1, w.d0);

                let lm = landmarks(&pr).unwrap();
                assert!(lm.g_c <= lm.g_a && lm.g_b <= lm.g_a);
                let class = classify(&pr);
                counts[class.index()] += 1;
                match class.tau() {
                    Some(t) => {
                        assert!(lm.g_c <= lm.g_b);
                        assert!(0 <= t && t < pr.lambda);
                        // (t+2)/(t+1) < p/lambda < (t+1)/t
                        assert!((t + 2) * pr.lambda < pr.p * (t + 1));
                        assert!(t == 0 || pr.p * t < (t + 1) * pr.lambda);
                    }
                    None => assert!(pr.kappa_lambda_large()),
                }
                assert_eq!(leading_quotient_test(&pr).unwrap(), pr.kappa_lambda_large());
                if q >= (p - 3) * p + 3 {
                    assert_eq!(class, PairClass::KappaLambdaLarge);
                }
            }
        }
        assert!(counts.iter().all(|&c| c > 0), "{counts:?}");
    }
}
