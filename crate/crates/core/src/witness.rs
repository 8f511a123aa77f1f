//! Explicit nonnegative representations.
//!
//! Every integer above a landmark is reached by writing the offset
//! `t in [0, d1)` as `t = a*q' + b*p' + c`, starting from a fixed quadruple
//! and adding the unit steps
//!
//! * `(0, -1, 0, 1)` worth `q'`,
//! * `(0, 0, -1, 1)` worth `p'`,
//! * `(1, 0, 0, -2)` worth `1`.
//!
//! When that leaves a negative coordinate, a combination of the kernel
//! vectors `e0, e1, e2` (quadruples with value zero) is added to repair it.
//! Each function here follows the case split of the corresponding argument
//! branch by branch; an output that is not nonnegative, or that misses its
//! target, is reported as [`Error::Logic`] with the branch trace.

use crate::arith::{add, mul};
use crate::error::{Error, Result};
use crate::pairmodel::{classify, frak_f, landmarks, PrimePair, Quadruple, Weights};

/// Three quadruples spanning the integer kernel of the linear form.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct KernelBasis {
    pub e0: Quadruple,
    pub e1: Quadruple,
    pub e2: Quadruple,
}

pub fn kernel_basis(pair: &PrimePair) -> KernelBasis {
    KernelBasis {
        e0: Quadruple::new(pair.p_half, -pair.p, 0, 0),
        e1: Quadruple::new(pair.p_half, 0, 1, -pair.p),
        e2: Quadruple::new(pair.q_half, 1, 0, -pair.q),
    }
}

impl KernelBasis {
    /// `(u - 1) e2 + (v + 1) e1`.
    pub fn e(&self, u: i64, v: i64) -> Result<Quadruple> {
        self.e2
            .checked_scale(u - 1)?
            .checked_add(self.e1.checked_scale(v + 1)?)
    }
}

/// `quad + alpha e0 + beta e1 + gamma e2`; the value of the linear form is
/// unchanged.
pub fn shift(
    quad: Quadruple,
    basis: &KernelBasis,
    alpha: i64,
    beta: i64,
    gamma: i64,
) -> Result<Quadruple> {
    quad.checked_add(basis.e0.checked_scale(alpha)?)?
        .checked_add(basis.e1.checked_scale(beta)?)?
        .checked_add(basis.e2.checked_scale(gamma)?)
}

/// `(-lambda', -1, kappa, lambda)`, worth zero whenever `kappa' = kappa`.
pub fn main_equivalence(pair: &PrimePair) -> Quadruple {
    Quadruple::new(-pair.lambda_p, -1, pair.kappa, pair.lambda)
}

/// `t = a*q' + b*p' + c` with `a` maximal and `0 <= c < p'`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ParamTriple {
    pub a: i64,
    pub b: i64,
    pub c: i64,
}

fn offset_range_check(pair: &PrimePair, t: i64) -> Result<Weights> {
    let w = Weights::of(pair)?;
    if !(0..w.d1).contains(&t) {
        return Err(Error::input(format!(
            "offset t = {t} outside [0, {}) for {pair}",
            w.d1
        )));
    }
    Ok(w)
}

pub fn param_triple(pair: &PrimePair, t: i64) -> Result<ParamTriple> {
    offset_range_check(pair, t)?;
    let a = t / pair.q_half;
    let r = t % pair.q_half;
    Ok(ParamTriple {
        a,
        b: r / pair.p_half,
        c: r % pair.p_half,
    })
}

impl ParamTriple {
    /// The five structural bounds every triple obeys; empty when all hold.
    pub fn bound_violations(&self, pair: &PrimePair) -> Vec<&'static str> {
        let ParamTriple { a, b, c } = *self;
        let mut bad = Vec::new();
        if a > pair.p - 1 {
            bad.push("a <= p-1");
        }
        if a == pair.p - 1 && b != 0 {
            bad.push("a = p-1 => b = 0");
        }
        if b > pair.kappa_p {
            bad.push("b <= kappa'");
        }
        if b == pair.kappa_p && !(c < pair.lambda_p && pair.p > 3) {
            bad.push("b = kappa' => c < lambda' => p > 3");
        }
        if b >= pair.kappa && a > pair.p - 2 {
            bad.push("b >= kappa => a <= p-2");
        }
        if c < 0 || c >= pair.p_half || a < 0 || b < 0 {
            bad.push("a, b >= 0, 0 <= c < p'");
        }
        bad
    }
}

/// Which repair was applied to reach a nonnegative representation above `ga`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GaBranch {
    /// The starting quadruple is already nonnegative.
    Base,
    /// `s < kappa' - kappa - 1`: add `e(1, s)`.
    ShiftBelowBoundary,
    /// `s = kappa' - kappa - 1` and `w >= (s+1) p`: add `e(1, s)`.
    ShiftAtBoundary,
    /// `s = kappa' - kappa - 1` and `w < (s+1) p`: add `e(0, kappa' - 1)`.
    BoundaryFallback,
    /// `s = kappa' - kappa`: add `e(0, kappa')`.
    Top,
}

fn verified(
    w: &Weights,
    quad: Quadruple,
    target: i64,
    trace: impl FnOnce() -> String,
) -> Result<Quadruple> {
    let value = frak_f(w, quad)?;
    if quad.is_nonnegative() && value == target {
        Ok(quad)
    } else {
        Err(Error::Logic(format!(
            "{} produced {quad} worth {value}, wanted a nonnegative quadruple worth {target}",
            trace()
        )))
    }
}

/// `(c, p-1-a, kappa-1-b, p-3-2c+a+b)`, worth `ga + 1 + t`.
fn base_quadruple(pair: &PrimePair, abc: ParamTriple) -> Quadruple {
    let ParamTriple { a, b, c } = abc;
    Quadruple::new(
        c,
        pair.p - 1 - a,
        pair.kappa - 1 - b,
        pair.p - 3 - 2 * c + a + b,
    )
}

/// A nonnegative quadruple worth `ga + 1 + t`, plus the branch taken.
pub fn represent_above_ga_traced(pair: &PrimePair, t: i64) -> Result<(Quadruple, GaBranch)> {
    let w = offset_range_check(pair, t)?;
    let target = add(add(landmarks(pair)?.g_a, 1, "ga target")?, t, "ga target")?;
    let abc = param_triple(pair, t)?;
    let base = base_quadruple(pair, abc);
    let basis = kernel_basis(pair);

    let (quad, branch) = if base.z >= 0 {
        (base, GaBranch::Base)
    } else {
        let s = abc.b - pair.kappa;
        let gap = pair.kappa_p - pair.kappa;
        if s < gap - 1 {
            (
                base.checked_add(basis.e(1, s)?)?,
                GaBranch::ShiftBelowBoundary,
            )
        } else if s == gap - 1 {
            if base.w >= mul(s + 1, pair.p, "boundary test")? {
                (base.checked_add(basis.e(1, s)?)?, GaBranch::ShiftAtBoundary)
            } else {
                (
                    base.checked_add(basis.e(0, pair.kappa_p - 1)?)?,
                    GaBranch::BoundaryFallback,
                )
            }
        } else {
            (base.checked_add(basis.e(0, pair.kappa_p)?)?, GaBranch::Top)
        }
    };
    let q = verified(&w, quad, target, || {
        format!("above-ga {pair} t={t} {abc:?} base={base} branch={branch:?}")
    })?;
    Ok((q, branch))
}

pub fn represent_above_ga(pair: &PrimePair, t: i64) -> Result<Quadruple> {
    represent_above_ga_traced(pair, t).map(|(q, _)| q)
}

/// A nonnegative representation of `ga` itself, which exists exactly when
/// `kappa + lambda < p`.
pub fn witness_ga(pair: &PrimePair) -> Result<Option<Quadruple>> {
    if pair.kappa_lambda_large() {
        return Ok(None);
    }
    let quad = Quadruple::new(
        pair.p_half - 1 - pair.lambda_p,
        pair.p - 2,
        2 * pair.kappa,
        pair.lambda - 1,
    );
    let w = Weights::of(pair)?;
    let ga = landmarks(pair)?.g_a;
    verified(&w, quad, ga, || format!("ga witness {pair}")).map(Some)
}

/// Which repair was applied to reach a nonnegative representation above `gb`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GbBranch {
    Base,
    /// `z >= 0, w < 0`: add the main equivalence once.
    MainOnce,
    /// `z < 0`: top-case quadruple, already nonnegative.
    Top,
    /// `z < 0` and the top-case quadruple has `w < 0`: add the main
    /// equivalence to it.
    TopThenMain,
}

/// A nonnegative quadruple worth `gb + 1 + t`. Only proven (and only
/// offered) for `kappa + lambda <= p - lambda`.
pub fn represent_above_gb_traced(pair: &PrimePair, t: i64) -> Result<(Quadruple, GbBranch)> {
    if pair.kappa + pair.lambda > pair.p - pair.lambda {
        return Err(Error::input(format!(
            "above-gb construction needs kappa + lambda <= p - lambda; {pair} has kappa={} lambda={}",
            pair.kappa, pair.lambda
        )));
    }
    if pair.lambda > pair.p - 3 {
        return Err(Error::Logic(format!("{pair}: lambda > p - 3")));
    }
    let w = offset_range_check(pair, t)?;
    let target = add(add(landmarks(pair)?.g_b, 1, "gb target")?, t, "gb target")?;
    let abc = param_triple(pair, t)?;
    let ParamTriple { a, c, .. } = abc;
    let main = main_equivalence(pair);
    let mut base = base_quadruple(pair, abc);
    base.w -= pair.lambda;

    let (quad, branch) = if base.z >= 0 {
        if base.w >= 0 {
            (base, GbBranch::Base)
        } else {
            (base + main, GbBranch::MainOnce)
        }
    } else {
        // Here b = kappa (= kappa') and c < lambda'.
        let lp = pair.lambda_p;
        let top = Quadruple::new(
            pair.p_half - (lp - c),
            pair.p - 2 - a,
            pair.kappa,
            2 * (lp - c) - 2 + a - pair.lambda,
        );
        if top.w >= 0 {
            (top, GbBranch::Top)
        } else {
            (top + main, GbBranch::TopThenMain)
        }
    };
    let q = verified(&w, quad, target, || {
        format!("above-gb {pair} t={t} {abc:?} base={base} branch={branch:?}")
    })?;
    Ok((q, branch))
}

pub fn represent_above_gb(pair: &PrimePair, t: i64) -> Result<Quadruple> {
    represent_above_gb_traced(pair, t).map(|(q, _)| q)
}

/// A nonnegative representation of `gb`: present exactly for Type I pairs.
pub fn gb_witness(pair: &PrimePair) -> Result<Option<Quadruple>> {
    let class = classify(pair);
    let Some(tau) = class.tau() else {
        return Err(Error::input(format!(
            "{pair} has kappa + lambda >= p; gb is not governed by this construction"
        )));
    };
    if !class.is_type_one() {
        return Ok(None);
    }
    let (p, lambda, lp) = (pair.p, pair.lambda, pair.lambda_p);
    let quad = Quadruple::new(
        pair.p_half - 1 - (tau + 2) * lp + tau * pair.p_half,
        p - tau - 3,
        (tau + 3) * pair.kappa + tau,
        -tau * p + (tau + 1) * lambda - 1,
    );
    let w = Weights::of(pair)?;
    let gb = landmarks(pair)?.g_b;
    verified(&w, quad, gb, || format!("gb witness {pair} tau={tau}")).map(Some)
}

/// A nonnegative quadruple worth `gc + 1 + t` for a twin pair.
///
/// Uses `t = a*q' + r` with `0 <= r <= p'` and the extra unit step
/// `(0, -1, 1, 0)` worth 1. The remainder is first spent entirely on that
/// step; when `a = p' + s` exceeds `p'` and that leaves `y < 0`, part of it
/// moves onto `(1, 0, 0, -2)`.
pub fn represent_above_gc_twin(pair: &PrimePair, t: i64) -> Result<Quadruple> {
    if !pair.is_twin() {
        return Err(Error::input(format!("{pair} is not a twin prime pair")));
    }
    let w = offset_range_check(pair, t)?;
    let target = add(add(landmarks(pair)?.g_c, 1, "gc target")?, t, "gc target")?;
    let ph = pair.p_half;
    let a = t / pair.q_half;
    let r = t % pair.q_half;

    let (b, c) = if a <= ph {
        (r, 0)
    } else {
        let s = a - ph;
        // b = p' - i, c = p' - k with i + k = 2p' - r.
        let (i, k) = (ph - r, ph);
        if i >= s {
            (ph - i, ph - k)
        } else {
            let (i, k) = (s, k - (s - i));
            (ph - i, ph - k)
        }
    };
    let quad = Quadruple::new(c, pair.p - 1 - (a + b), b, a - 2 * c);
    verified(&w, quad, target, || {
        format!("above-gc twin {pair} t={t} a={a} r={r} (b,c)=({b},{c})")
    })
}
