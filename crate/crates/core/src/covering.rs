//! Branching data of cyclic `n`-fold coverings for square-free odd `n`.
//!
//! Divisors of `n = p_1 ... p_s` are indexed by bit masks: bit `i - 1` set
//! means `p_i` (the `i`-th smallest prime factor) divides `n_I`. A tuple of
//! counts `x_I >= 0` realises genus `gamma` when
//! `gamma + n - 1 = sum_I x_I d_I` with `d_0 = n` and
//! `d_I = n (n_I - 1) / (2 n_I)`; `x_0` is the genus of the quotient.
//!
//! A tuple comes from a cyclic group action exactly when, for every prime
//! `i`, the counts over masks containing bit `i` do not sum to 1, and `x_0`
//! plus that sum is not 0.

use crate::arith::{self, add, mul, sub};
use crate::error::{Error, Result};
use crate::oracle::{AperyTable, DEFAULT_MAX_MODULUS};
use crate::pairmodel::{PrimePair, Quadruple};

/// Nested-enumeration budget for a single genus query.
pub const DEFAULT_ENUMERATION_BUDGET: u64 = 100_000_000;

/// Cap on `(largest target + 1) * state words` for the reachability table
/// behind [`nu_cyclic_bruteforce`].
pub const DEFAULT_TABLE_BUDGET: u64 = 100_000_000;

/// A square-free odd degree and its divisor weights.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoveringInstance {
    n: i64,
    primes: Vec<i64>,
    weights: Vec<i64>,
}

impl CoveringInstance {
    pub fn new(n: i64) -> Result<Self> {
        if n < 3 || n % 2 == 0 {
            return Err(Error::input(format!("{n} is not an odd integer >= 3")));
        }
        let mut primes = Vec::new();
        let mut rest = n;
        let mut d = 3;
        while d * d <= rest {
            if rest % d == 0 {
                rest /= d;
                if rest % d == 0 {
                    return Err(Error::input(format!(
                        "{n} is not square-free ({d}^2 divides it)"
                    )));
                }
                primes.push(d);
            }
            d += 2;
        }
        if rest > 1 {
            primes.push(rest);
        }
        if primes.len() > 16 {
            return Err(Error::Resource(format!("{n} has too many prime factors")));
        }
        let s = primes.len();
        let weights = (0..1usize << s)
            .map(|mask| {
                if mask == 0 {
                    return Ok(n);
                }
                let n_i = primes
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask >> i & 1 == 1)
                    .map(|(_, &pi)| pi)
                    .product::<i64>();
                mul(n / n_i, (n_i - 1) / 2, "divisor weight")
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(CoveringInstance { n, primes, weights })
    }

    pub fn n(&self) -> i64 {
        self.n
    }

    /// Prime factors in ascending order; bit `i` of a mask refers to
    /// `primes()[i]`.
    pub fn primes(&self) -> &[i64] {
        &self.primes
    }

    /// Weight per mask; `weights()[0] == n`.
    pub fn weights(&self) -> &[i64] {
        &self.weights
    }

    pub fn prime_count(&self) -> usize {
        self.primes.len()
    }

    pub fn mask_count(&self) -> usize {
        self.weights.len()
    }

    /// Frobenius number of the weights; `-1` when a weight equals 1 (only
    /// for `n = 3`), since then every nonnegative integer is representable.
    pub fn frobenius_number(&self) -> Result<i64> {
        if self.weights.contains(&1) {
            return Ok(-1);
        }
        Ok(AperyTable::build_with_cap(&self.weights, DEFAULT_MAX_MODULUS)?.frobenius_number())
    }
}

pub fn make_covering(n: i64) -> Result<CoveringInstance> {
    CoveringInstance::new(n)
}

/// Counts per divisor mask; `counts[0]` is the quotient genus.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BranchingTuple {
    pub counts: Vec<i64>,
}

impl BranchingTuple {
    pub fn new(counts: Vec<i64>) -> Self {
        BranchingTuple { counts }
    }

    fn check(&self, instance: &CoveringInstance) -> Result<()> {
        if self.counts.len() != instance.mask_count() {
            return Err(Error::input(format!(
                "tuple has {} entries, expected {}",
                self.counts.len(),
                instance.mask_count()
            )));
        }
        if let Some(c) = self.counts.iter().find(|&&c| c < 0) {
            return Err(Error::input(format!("negative branching count {c}")));
        }
        Ok(())
    }

    /// Genus of the covering surface: `sum x_I d_I - n + 1`.
    pub fn genus(&self, instance: &CoveringInstance) -> Result<i64> {
        self.check(instance)?;
        let total = arith::dot(&self.counts, &instance.weights, "genus")?;
        add(sub(total, instance.n, "genus")?, 1, "genus")
    }
}

impl From<Quadruple> for BranchingTuple {
    fn from(q: Quadruple) -> Self {
        BranchingTuple::new(q.as_array().to_vec())
    }
}

fn admissible_counts(counts: &[i64], s: usize) -> bool {
    (0..s).all(|i| {
        let sum: i64 = counts
            .iter()
            .enumerate()
            .filter(|(mask, _)| mask >> i & 1 == 1)
            .map(|(_, &c)| c)
            .sum();
        sum != 1 && counts[0] + sum != 0
    })
}

pub fn admissible(tuple: &BranchingTuple, instance: &CoveringInstance) -> Result<bool> {
    tuple.check(instance)?;
    Ok(admissible_counts(&tuple.counts, instance.prime_count()))
}

/// Admissible with `y + w > 1` in place of `y + w != 1`, so that adding one
/// to `y` keeps the quadruple admissible.
pub fn strongly_admissible(quad: Quadruple, _pair: &PrimePair) -> Result<bool> {
    if !quad.is_nonnegative() {
        return Err(Error::input(format!("{quad} has a negative coordinate")));
    }
    let Quadruple { x, y, z, w } = quad;
    Ok(y + w > 1 && z + w != 1 && x + y + w != 0 && x + z + w != 0)
}

/// First admissible tuple realising genus `gamma`, found by bounded nested
/// enumeration over the non-trivial masks with `x_0` solved last.
pub fn find_admissible(
    gamma: i64,
    instance: &CoveringInstance,
    budget: u64,
) -> Result<Option<BranchingTuple>> {
    if gamma < 0 {
        return Err(Error::input(format!("genus {gamma} is negative")));
    }
    let target = add(gamma, instance.n - 1, "Riemann-Hurwitz target")?;
    let mut counts = vec![0i64; instance.mask_count()];
    let mut spent = 0u64;
    let found = search(
        instance,
        instance.mask_count() - 1,
        target,
        &mut counts,
        &mut spent,
        budget,
    )?;
    Ok(found.then(|| BranchingTuple::new(counts)))
}

fn search(
    inst: &CoveringInstance,
    mask: usize,
    remaining: i64,
    counts: &mut [i64],
    spent: &mut u64,
    budget: u64,
) -> Result<bool> {
    if mask == 0 {
        *spent += 1;
        if *spent > budget {
            return Err(Error::Resource(format!(
                "enumeration budget of {budget} tuples exhausted"
            )));
        }
        if remaining % inst.n != 0 {
            return Ok(false);
        }
        counts[0] = remaining / inst.n;
        return Ok(admissible_counts(counts, inst.prime_count()));
    }
    let d = inst.weights[mask];
    for c in 0..=remaining / d {
        counts[mask] = c;
        if search(inst, mask - 1, remaining - c * d, counts, spent, budget)? {
            return Ok(true);
        }
    }
    counts[mask] = 0;
    Ok(false)
}

pub fn genus_has_admissible(gamma: i64, instance: &CoveringInstance) -> Result<bool> {
    Ok(find_admissible(gamma, instance, DEFAULT_ENUMERATION_BUDGET)?.is_some())
}

/// `g_n - n + 1`: the largest genus with no semi-regular `n`-fold covering.
/// Negative means every genus is attained.
pub fn largest_nongenus_semiregular(n: i64) -> Result<i64> {
    let inst = CoveringInstance::new(n)?;
    add(
        sub(inst.frobenius_number()?, n, "semi-regular non-genus")?,
        1,
        "semi-regular non-genus",
    )
}

/// Largest genus without a cyclic action of order `n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NuOutcome {
    NonGenus(i64),
    /// Every genus `>= 0` admits an action.
    AllGeneraAttained,
}

impl NuOutcome {
    pub fn value(&self) -> Option<i64> {
        match *self {
            NuOutcome::NonGenus(v) => Some(v),
            NuOutcome::AllGeneraAttained => None,
        }
    }
}

/// Compact per-value record of which admissibility classes are reachable.
///
/// A class tracks, per prime, the sum over masks containing it capped at 2
/// (so 0, 1 or "at least 2"), plus whether `x_0 > 0`. Both conditions only
/// look at these, so a value has an admissible tuple iff one of its
/// reachable classes passes them.
struct ClassSpace {
    s: usize,
    count: usize,
    /// `transition[mask][class]`: the class after adding one `x_mask`.
    transition: Vec<Vec<u16>>,
    accepting: Vec<bool>,
}

impl ClassSpace {
    fn new(s: usize) -> Self {
        let count = 2 * 3usize.pow(s as u32);
        let decode = |class: usize| -> (bool, Vec<usize>) {
            let mut digits = Vec::with_capacity(s);
            let mut c = class / 2;
            for _ in 0..s {
                digits.push(c % 3);
                c /= 3;
            }
            (class % 2 == 1, digits)
        };
        let encode = |x0: bool, digits: &[usize]| -> usize {
            digits.iter().rev().fold(0, |acc, &d| acc * 3 + d) * 2 + x0 as usize
        };
        let transition = (0..1usize << s)
            .map(|mask| {
                (0..count)
                    .map(|class| {
                        let (x0, mut digits) = decode(class);
                        if mask == 0 {
                            return encode(true, &digits) as u16;
                        }
                        for (i, d) in digits.iter_mut().enumerate() {
                            if mask >> i & 1 == 1 {
                                *d = (*d + 1).min(2);
                            }
                        }
                        encode(x0, &digits) as u16
                    })
                    .collect()
            })
            .collect();
        let accepting = (0..count)
            .map(|class| {
                let (x0, digits) = decode(class);
                digits.iter().all(|&d| d != 1 && (x0 || d != 0))
            })
            .collect();
        ClassSpace {
            s,
            count,
            transition,
            accepting,
        }
    }
}

/// Largest genus in `[0, g_n]` with no admissible tuple.
///
/// Builds, for every target value up to `g_n + n - 1`, the set of reachable
/// admissibility classes (see [`ClassSpace`]), then scans downward from
/// `g_n`. [`genus_has_admissible`] answers the same question per genus by
/// direct enumeration.
pub fn nu_cyclic_bruteforce(instance: &CoveringInstance) -> Result<NuOutcome> {
    nu_cyclic_with_budget(instance, DEFAULT_TABLE_BUDGET)
}

pub fn nu_cyclic_with_budget(instance: &CoveringInstance, budget: u64) -> Result<NuOutcome> {
    let g_n = instance.frobenius_number()?;
    if g_n < 0 {
        return Ok(NuOutcome::AllGeneraAttained);
    }
    let space = ClassSpace::new(instance.prime_count());
    let words = space.count.div_ceil(64);
    let top = add(g_n, instance.n - 1, "non-genus search range")?;
    let cells = (top as u64 + 1).saturating_mul(words as u64);
    if cells > budget {
        return Err(Error::Resource(format!(
            "reachability table needs {cells} words, budget is {budget}"
        )));
    }
    let top = top as usize;
    let mut reach = vec![0u64; (top + 1) * words];
    // The empty tuple: x_0 = 0 and every prime sum 0, which is class 0.
    reach[0] = 1;
    let weights: Vec<usize> = instance.weights.iter().map(|&d| d as usize).collect();
    for v in 1..=top {
        for (mask, &d) in weights.iter().enumerate() {
            if d > v {
                continue;
            }
            let from = (v - d) * words;
            for word in 0..words {
                let mut bits = reach[from + word];
                while bits != 0 {
                    let class = word * 64 + bits.trailing_zeros() as usize;
                    bits &= bits - 1;
                    let next = space.transition[mask][class] as usize;
                    reach[v * words + next / 64] |= 1 << (next % 64);
                }
            }
        }
    }
    let has_admissible = |value: usize| {
        (0..space.count).any(|class| {
            space.accepting[class] && reach[value * words + class / 64] >> (class % 64) & 1 == 1
        })
    };
    debug_assert_eq!(space.s, instance.prime_count());
    let shift = (instance.n - 1) as usize;
    Ok((0..=g_n as usize)
        .rev()
        .find(|&gamma| !has_admissible(gamma + shift))
        .map_or(NuOutcome::AllGeneraAttained, |gamma| {
            NuOutcome::NonGenus(gamma as i64)
        }))
}

/// Largest non-genus by calling [`genus_has_admissible`] for each genus
/// from `g_n` downward. Much slower than [`nu_cyclic_bruteforce`]; kept as
/// an independent route for cross-checking.
pub fn nu_cyclic_by_enumeration(instance: &CoveringInstance, budget: u64) -> Result<NuOutcome> {
    let g_n = instance.frobenius_number()?;
    for gamma in (0..=g_n).rev() {
        if find_admissible(gamma, instance, budget)?.is_none() {
            return Ok(NuOutcome::NonGenus(gamma));
        }
    }
    Ok(NuOutcome::AllGeneraAttained)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pairmodel::Weights;

    fn inst(n: i64) -> CoveringInstance {
        CoveringInstance::new(n).unwrap()
    }

    #[test]
    fn weight_examples() {
        assert_eq!(inst(35).weights(), &[35, 14, 15, 17]);
        assert_eq!(inst(35).primes(), &[5, 7]);
        let mut w105 = inst(105).weights().to_vec();
        w105.sort_unstable();
        assert_eq!(w105, vec![35, 42, 45, 49, 50, 51, 52, 105]);
        assert_eq!(inst(7).weights(), &[7, 3]);
        assert!(matches!(CoveringInstance::new(45), Err(Error::Input(_))));
        assert!(matches!(CoveringInstance::new(10), Err(Error::Input(_))));
        assert!(matches!(CoveringInstance::new(1), Err(Error::Input(_))));
    }

    #[test]
    fn two_prime_weights_match_pair_weights() {
        for (p, q) in [(3, 5), (5, 7), (5, 17), (11, 13), (29, 103)] {
            let w = Weights::of(&PrimePair::new(p, q).unwrap()).unwrap();
            assert_eq!(inst(p * q).weights(), &w.as_array());
        }
    }

    #[test]
    fn semiregular_examples() {
        assert_eq!(largest_nongenus_semiregular(7), Ok(5));
        assert_eq!(largest_nongenus_semiregular(35), Ok(21));
        assert_eq!(largest_nongenus_semiregular(3), Ok(-3));
        assert_eq!(largest_nongenus_semiregular(5), Ok(-1));
    }

    #[test]
    fn admissibility_examples() {
        let i35 = inst(35);
        let t = |v: &[i64]| BranchingTuple::new(v.to_vec());
        assert_eq!(admissible(&t(&[0, 4, 1, 0]), &i35), Ok(false));
        assert_eq!(admissible(&t(&[0, 3, 2, 0]), &i35), Ok(true));
        assert_eq!(admissible(&t(&[2, 1]), &inst(7)), Ok(false));
        assert!(matches!(
            admissible(&t(&[0, 1, 2]), &i35),
            Err(Error::Input(_))
        ));
        assert_eq!(t(&[0, 4, 1, 0]).genus(&i35), Ok(37));
    }

    #[test]
    fn strong_admissibility_examples() {
        let pr = PrimePair::new(5, 7).unwrap();
        assert_eq!(
            strongly_admissible(Quadruple::new(0, 3, 2, 0), &pr),
            Ok(true)
        );
        assert_eq!(
            strongly_admissible(Quadruple::new(0, 4, 0, 0), &pr),
            Ok(false)
        );
        assert_eq!(
            strongly_admissible(Quadruple::new(1, 1, 0, 0), &pr),
            Ok(false)
        );
        assert!(strongly_admissible(Quadruple::new(-1, 3, 2, 0), &pr).is_err());
    }

    #[test]
    fn genus_query_examples() {
        let i35 = inst(35);
        assert_eq!(genus_has_admissible(37, &i35), Ok(false));
        assert_eq!(genus_has_admissible(38, &i35), Ok(true));
        assert_eq!(genus_has_admissible(0, &i35), Ok(true));
        let w = find_admissible(0, &i35, 1000).unwrap().unwrap();
        assert_eq!(w.counts, vec![0, 0, 0, 2]);
        assert!(matches!(
            find_admissible(10_000, &i35, 10),
            Err(Error::Resource(_))
        ));
    }

    #[test]
    fn nu_examples() {
        assert_eq!(nu_cyclic_bruteforce(&inst(35)), Ok(NuOutcome::NonGenus(37)));
        assert_eq!(nu_cyclic_bruteforce(&inst(7)), Ok(NuOutcome::NonGenus(11)));
        assert_eq!(
            nu_cyclic_bruteforce(&inst(143)),
            Ok(NuOutcome::NonGenus(574))
        );
        assert_eq!(
            nu_cyclic_bruteforce(&inst(85)),
            Ok(NuOutcome::NonGenus(215))
        );
        assert_eq!(
            nu_cyclic_bruteforce(&inst(3)),
            Ok(NuOutcome::AllGeneraAttained)
        );
        assert_eq!(
            nu_cyclic_bruteforce(&inst(105)),
            Ok(NuOutcome::NonGenus(108))
        );
        assert!(matches!(
            nu_cyclic_with_budget(&inst(143), 10),
            Err(Error::Resource(_))
        ));
    }

    #[test]
    fn table_and_enumeration_routes_agree() {
        for n in [5, 7, 11, 13, 15, 21, 33, 35, 39, 51, 55, 65, 85, 105, 143] {
            let i = inst(n);
            assert_eq!(
                nu_cyclic_bruteforce(&i).unwrap(),
                nu_cyclic_by_enumeration(&i, DEFAULT_ENUMERATION_BUDGET).unwrap(),
                "n = {n}"
            );
        }
    }

    #[test]
    fn shift_by_two_full_branches_is_admissible() {
        for n in [15, 35, 105] {
            let i = inst(n);
            let full = i.mask_count() - 1;
            for gamma in 0..60 {
                let Some(any) = find_any(gamma, &i) else {
                    continue;
                };
                let mut lifted = any.clone();
                lifted.counts[full] += 2;
                assert_eq!(lifted.genus(&i), Ok(gamma + n - 1));
                assert_eq!(admissible(&lifted, &i), Ok(true));
            }
        }
    }

    /// Any nonnegative tuple (admissible or not) for genus `gamma`.
    fn find_any(gamma: i64, inst: &CoveringInstance) -> Option<BranchingTuple> {
        let target = gamma + inst.n() - 1;
        let table = AperyTable::build(inst.weights()).ok()?;
        table
            .witness_sorted(target)
            .map(|_| table.witness_for(target, inst.weights()).unwrap())
            .map(BranchingTuple::new)
    }

    #[test]
    fn quotient_genus_monotonicity() {
        let i = inst(105);
        let mut counts = vec![0i64; 8];
        for seed in 0..4000u64 {
            let mut x = seed;
            for c in counts.iter_mut() {
                *c = (x % 3) as i64;
                x /= 3;
            }
            let t = BranchingTuple::new(counts.clone());
            if admissible(&t, &i).unwrap() {
                let mut up = t.clone();
                up.counts[0] += 1;
                assert!(admissible(&up, &i).unwrap());
            }
        }
    }
}
