//! Two-level minimization of a single output.
//!
//! Primes come from tabular Quine–McCluskey merging over onset ∪ dc. The
//! cover keeps every essential prime; the remaining cyclic core is solved
//! exactly with Petrick's method when it is small enough, and greedily
//! otherwise.

use std::collections::BTreeSet;

use super::truth_table::{Ternary, TruthTable};

/// Largest cyclic core (primes, uncovered minterms) solved exactly.
pub const PETRICK_MAX_PRIMES: usize = 20;
pub const PETRICK_MAX_MINTERMS: usize = 24;

/// A product term: positions with a set `mask` bit are free, the rest must
/// equal the matching bit of `value`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Implicant {
    pub value: u32,
    pub mask: u32,
}

impl Implicant {
    pub fn new(value: u32, mask: u32) -> Implicant {
        debug_assert_eq!(value & mask, 0);
        Implicant { value, mask }
    }

    pub fn minterm(point: u32) -> Implicant {
        Implicant {
            value: point,
            mask: 0,
        }
    }

    #[inline]
    pub fn covers(self, point: u32) -> bool {
        point & !self.mask == self.value
    }

    pub fn literals(self, width: u32) -> u32 {
        width - self.mask.count_ones()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cover {
    pub output: usize,
    pub implicants: Vec<Implicant>,
    pub literals: u32,
}

impl Cover {
    pub fn new(output: usize, mut implicants: Vec<Implicant>, width: u32) -> Cover {
        implicants.sort();
        implicants.dedup();
        let literals = implicants.iter().map(|i| i.literals(width)).sum();
        Cover {
            output,
            implicants,
            literals,
        }
    }

    pub fn eval(&self, point: u32) -> bool {
        self.implicants.iter().any(|i| i.covers(point))
    }
}

/// All prime implicants of the function whose true set is `points`.
pub fn prime_implicants(width: u32, points: &[u32]) -> Vec<Implicant> {
    let mut level: BTreeSet<Implicant> = points.iter().map(|&p| Implicant::minterm(p)).collect();
    let mut primes = Vec::new();
    while !level.is_empty() {
        let mut next = BTreeSet::new();
        for &imp in &level {
            let mut merged = false;
            for bit in (0..width).map(|b| 1u32 << b).filter(|b| imp.mask & b == 0) {
                let partner = Implicant::new(imp.value ^ bit, imp.mask);
                if level.contains(&partner) {
                    merged = true;
                    next.insert(Implicant::new(imp.value & !bit, imp.mask | bit));
                }
            }
            if !merged {
                primes.push(imp);
            }
        }
        level = next;
    }
    primes.sort();
    primes
}

/// Minimized sum-of-products cover for one output of `table`.
pub fn minimize(table: &TruthTable, output: usize) -> Cover {
    let width = table.width();
    let onset = table.onset(output);
    if onset.is_empty() {
        return Cover::new(output, Vec::new(), width);
    }
    let on_or_dc: Vec<u32> = (0..table.points())
        .filter(|&p| table.get(output, p) != Ternary::Zero)
        .collect();
    let primes: Vec<Implicant> = prime_implicants(width, &on_or_dc)
        .into_iter()
        .filter(|p| onset.iter().any(|&m| p.covers(m)))
        .collect();

    let mut chosen: Vec<Implicant> = Vec::new();
    for &m in &onset {
        let mut covering = primes.iter().filter(|p| p.covers(m));
        if let (Some(&only), None) = (covering.next(), covering.next()) {
            if !chosen.contains(&only) {
                chosen.push(only);
            }
        }
    }
    let uncovered: Vec<u32> = onset
        .iter()
        .copied()
        .filter(|&m| !chosen.iter().any(|p| p.covers(m)))
        .collect();
    if !uncovered.is_empty() {
        let core: Vec<Implicant> = primes
            .iter()
            .copied()
            .filter(|p| !chosen.contains(p) && uncovered.iter().any(|&m| p.covers(m)))
            .collect();
        let extra = if core.len() <= PETRICK_MAX_PRIMES && uncovered.len() <= PETRICK_MAX_MINTERMS {
            petrick(&core, &uncovered, width)
        } else {
            greedy(&core, &uncovered, width)
        };
        chosen.extend(extra);
    }
    Cover::new(output, chosen, width)
}

/// Minimizes every output; outputs are independent and run in parallel.
pub fn minimize_all(table: &TruthTable) -> Vec<Cover> {
    use rayon::prelude::*;
    (0..table.output_count())
        .into_par_iter()
        .map(|k| minimize(table, k))
        .collect()
}

/// Exact selection: expand the product of per-minterm prime sums into a
/// sum of prime sets (with absorption), then pick the cheapest set by
/// literal count, then implicant count, then the sorted implicant list.
fn petrick(core: &[Implicant], minterms: &[u32], width: u32) -> Vec<Implicant> {
    let clauses: Vec<u32> = minterms
        .iter()
        .map(|&m| {
            core.iter()
                .enumerate()
                .filter(|(_, p)| p.covers(m))
                .fold(0u32, |acc, (i, _)| acc | 1 << i)
        })
        .collect();

    let mut terms: Vec<u32> = vec![0];
    for clause in clauses {
        let mut next: Vec<u32> = Vec::new();
        for &t in &terms {
            if t & clause != 0 {
                next.push(t);
                continue;
            }
            let mut rest = clause;
            while rest != 0 {
                let bit = rest & rest.wrapping_neg();
                next.push(t | bit);
                rest &= rest - 1;
            }
        }
        terms = absorb(next);
    }

    let pick = |t: u32| -> Vec<Implicant> {
        let mut v: Vec<Implicant> = (0..core.len())
            .filter(|i| t >> i & 1 == 1)
            .map(|i| core[i])
            .collect();
        v.sort();
        v
    };
    terms
        .into_iter()
        .map(pick)
        .min_by(|a, b| {
            let lits = |v: &[Implicant]| v.iter().map(|i| i.literals(width)).sum::<u32>();
            (lits(a), a.len(), a).cmp(&(lits(b), b.len(), b))
        })
        .unwrap_or_default()
}

/// Drops duplicates and every term that is a superset of another.
fn absorb(mut terms: Vec<u32>) -> Vec<u32> {
    terms.sort_by_key(|t| (t.count_ones(), *t));
    terms.dedup();
    let mut kept: Vec<u32> = Vec::with_capacity(terms.len());
    for t in terms {
        if !kept.iter().any(|&k| k & !t == 0) {
            kept.push(t);
        }
    }
    kept
}

/// Repeatedly takes the prime covering the most uncovered minterms; ties go
/// to fewer literals, then the smaller (value, mask).
fn greedy(core: &[Implicant], minterms: &[u32], width: u32) -> Vec<Implicant> {
    let mut left: Vec<u32> = minterms.to_vec();
    let mut picked = Vec::new();
    while !left.is_empty() {
        let best = core
            .iter()
            .copied()
            .max_by(|a, b| {
                let gain = |p: &Implicant| left.iter().filter(|&&m| p.covers(m)).count();
                gain(a)
                    .cmp(&gain(b))
                    .then(b.literals(width).cmp(&a.literals(width)))
                    .then(b.cmp(a))
            })
            .expect("every onset minterm has a covering prime");
        left.retain(|&m| !best.covers(m));
        picked.push(best);
    }
    picked
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Equivalence {
    Equivalent,
    Counterexample {
        point: u32,
        expected: bool,
        actual: bool,
    },
}

/// Evaluates the cover on every input point and reports the first point
/// where it disagrees with a specified output.
pub fn verify_cover(cover: &Cover, table: &TruthTable) -> Equivalence {
    for point in 0..table.points() {
        let expected = match table.get(cover.output, point) {
            Ternary::One => true,
            Ternary::Zero => false,
            Ternary::DontCare => continue,
        };
        let actual = cover.eval(point);
        if actual != expected {
            return Equivalence::Counterexample {
                point,
                expected,
                actual,
            };
        }
    }
    Equivalence::Equivalent
}
