//! Exact Frobenius numbers for arbitrary generator sets.
//!
//! For the smallest generator `m`, the Apéry table holds for each residue
//! `r mod m` the least representable integer congruent to `r`. It is a
//! single-source shortest path problem on the `m` residues where each
//! generator `g` is an edge `r -> (r + g) mod m` of weight `g`.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use crate::arith::{self, add};
use crate::error::{Error, Result};

/// Largest modulus the table builder accepts by default.
pub const DEFAULT_MAX_MODULUS: i64 = 1 << 26;

const NO_PRED: u32 = u32::MAX;

/// A validated generator set: sorted, deduplicated, all `>= 2`, gcd 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SemigroupInstance {
    generators: Vec<i64>,
}

impl SemigroupInstance {
    pub fn new(generators: &[i64]) -> Result<Self> {
        let mut gens = generators.to_vec();
        gens.sort_unstable();
        gens.dedup();
        if let Some(&g) = gens.iter().find(|&&g| g < 2) {
            return Err(Error::input(format!("generator {g} is below 2")));
        }
        if gens.len() < 2 {
            return Err(Error::input("need at least two distinct generators"));
        }
        let as_u64: Vec<u64> = gens.iter().map(|&g| g as u64).collect();
        let g = arith::gcd_all(&as_u64)?;
        if g != 1 {
            return Err(Error::input(format!("generators share the factor {g}")));
        }
        Ok(SemigroupInstance { generators: gens })
    }

    pub fn generators(&self) -> &[i64] {
        &self.generators
    }

    /// The least generator.
    pub fn modulus(&self) -> i64 {
        self.generators[0]
    }
}

/// Least representable element of every residue class modulo the least
/// generator, with predecessor links for witness reconstruction.
#[derive(Debug, Clone)]
pub struct AperyTable {
    instance: SemigroupInstance,
    least: Vec<i64>,
    predecessor: Vec<u32>,
}

impl AperyTable {
    pub fn build(generators: &[i64]) -> Result<Self> {
        Self::build_with_cap(generators, DEFAULT_MAX_MODULUS)
    }

    pub fn build_with_cap(generators: &[i64], max_modulus: i64) -> Result<Self> {
        let instance = SemigroupInstance::new(generators)?;
        let m = instance.modulus();
        if m > max_modulus {
            return Err(Error::Resource(format!(
                "modulus {m} exceeds the table cap {max_modulus}"
            )));
        }
        let m = m as usize;
        let mut least = vec![i64::MAX; m];
        let mut predecessor = vec![NO_PRED; m];
        let mut done = vec![false; m];
        let steps: Vec<(usize, i64)> = instance.generators[1..]
            .iter()
            .map(|&g| ((g as usize) % m, g))
            .collect();

        least[0] = 0;
        let mut heap = BinaryHeap::new();
        heap.push(Reverse((0i64, 0usize)));
        while let Some(Reverse((dist, r))) = heap.pop() {
            if done[r] {
                continue;
            }
            done[r] = true;
            for (gi, &(step, g)) in steps.iter().enumerate() {
                let next = (r + step) % m;
                if done[next] {
                    continue;
                }
                let cand = add(dist, g, "Apéry table")?;
                if cand < least[next] {
                    least[next] = cand;
                    // Index into the sorted generator list.
                    predecessor[next] = (gi + 1) as u32;
                    heap.push(Reverse((cand, next)));
                }
            }
        }
        debug_assert!(
            done.iter().all(|&d| d),
            "gcd 1 makes every residue reachable"
        );
        Ok(AperyTable {
            instance,
            least,
            predecessor,
        })
    }

    pub fn instance(&self) -> &SemigroupInstance {
        &self.instance
    }

    pub fn least(&self) -> &[i64] {
        &self.least
    }

    pub fn modulus(&self) -> i64 {
        self.instance.modulus()
    }

    /// The sorted generator used last on the recorded path to residue `r`.
    pub fn predecessor_generator(&self, r: usize) -> Option<i64> {
        let idx = *self.predecessor.get(r)?;
        (idx != NO_PRED).then(|| self.instance.generators[idx as usize])
    }

    pub fn is_representable(&self, n: i64) -> bool {
        n >= 0 && self.least[(n % self.modulus()) as usize] <= n
    }

    pub fn frobenius_number(&self) -> i64 {
        self.least.iter().copied().max().unwrap_or(0) - self.modulus()
    }

    /// Number of positive integers that are not representable.
    pub fn gap_count(&self) -> i64 {
        let m = self.modulus();
        self.least
            .iter()
            .enumerate()
            .skip(1)
            .map(|(r, &l)| (l - r as i64) / m)
            .sum()
    }

    /// Coefficients over the sorted generator list, or `None` when `n` is a
    /// gap.
    pub fn witness_sorted(&self, n: i64) -> Option<Vec<i64>> {
        if !self.is_representable(n) {
            return None;
        }
        let m = self.modulus();
        let gens = &self.instance.generators;
        let mut coeffs = vec![0i64; gens.len()];
        let mut r = (n % m) as usize;
        coeffs[0] = (n - self.least[r]) / m;
        while r != 0 {
            let gi = self.predecessor[r] as usize;
            coeffs[gi] += 1;
            let g = gens[gi] as usize % m as usize;
            r = (r + m as usize - g) % m as usize;
        }
        Some(coeffs)
    }

    /// Coefficients aligned with `generators` as the caller listed them
    /// (duplicates get zero after their first occurrence).
    pub fn witness_for(&self, n: i64, generators: &[i64]) -> Option<Vec<i64>> {
        let sorted = self.witness_sorted(n)?;
        let mut out = vec![0i64; generators.len()];
        for (coeff, g) in sorted.into_iter().zip(&self.instance.generators) {
            let pos = generators.iter().position(|x| x == g)?;
            out[pos] = coeff;
        }
        Some(out)
    }
}

pub fn build_apery(generators: &[i64]) -> Result<AperyTable> {
    AperyTable::build(generators)
}

pub fn frobenius_number(generators: &[i64]) -> Result<i64> {
    Ok(AperyTable::build(generators)?.frobenius_number())
}

/// A nonnegative coefficient vector (in the caller's generator order) summing
/// to `n`, or `None` if `n` is not representable.
pub fn represent(n: i64, generators: &[i64]) -> Result<Option<Vec<i64>>> {
    if n < 0 {
        return Err(Error::input(format!("cannot represent negative {n}")));
    }
    Ok(AperyTable::build(generators)?.witness_for(n, generators))
}

pub fn gap_count(generators: &[i64]) -> Result<i64> {
    Ok(AperyTable::build(generators)?.gap_count())
}
