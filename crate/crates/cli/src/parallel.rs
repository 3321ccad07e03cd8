//! Multi-threaded drivers for the exhaustive checks.
//!
//! Every driver splits the work into independent chunks and merges the chunk
//! results in a fixed order, so output does not depend on scheduling.

use std::collections::BTreeSet;

use anyhow::{bail, Context, Result};
use operad_forge_core::{
    bases, cayley_count, check_associativity_from, check_unit_laws, compose_max, compose_min, degree_bounds,
    degree_spectrum, enumerate_trees, is_indecomposable, trees_by_arity, AxiomReport, FreenessReport, Label, Operad,
    OperationTree, OperationTreeCatalog, Tree,
};
use rayon::prelude::*;

pub const THREADS_VAR: &str = "OPERAD_FORGE_THREADS";

/// Reads `OPERAD_FORGE_THREADS`; `None` when unset.
pub fn threads_from_env() -> Result<Option<usize>> {
    match std::env::var(THREADS_VAR) {
        Err(std::env::VarError::NotPresent) => Ok(None),
        Err(e) => bail!("{THREADS_VAR}: {e}"),
        Ok(v) => {
            let n: usize = v.trim().parse().with_context(|| format!("{THREADS_VAR}={v:?} is not an integer"))?;
            if n == 0 {
                bail!("{THREADS_VAR} must be at least 1");
            }
            Ok(Some(n))
        }
    }
}

/// Runs `f` inside a pool sized by `threads` (rayon's default when `None`).
pub fn with_pool<R: Send>(threads: Option<usize>, f: impl FnOnce() -> R + Send) -> Result<R> {
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(n) = threads {
        builder = builder.num_threads(n);
    }
    Ok(builder.build()?.install(f))
}

/// Parallel form of `check_axioms`: one task per first argument `a`.
pub fn check_axioms<O>(op: &O, max_arity: usize) -> AxiomReport
where
    O: Operad + Sync,
    O::Elem: Send + Sync,
{
    let bases = bases(op, max_arity);
    let firsts: Vec<&O::Elem> = bases.iter().flatten().collect();
    let chunks: Vec<AxiomReport> = firsts.par_iter().map(|a| check_associativity_from(op, a, &bases)).collect();
    chunks.into_iter().fold(check_unit_laws(op, &bases), AxiomReport::merge)
}

/// Unit laws alone, for every element of arity at most `max_arity`.
pub fn check_unit_laws_up_to<O>(op: &O, max_arity: usize) -> AxiomReport
where
    O: Operad + Sync,
    O::Elem: Send + Sync,
{
    let bases = bases(op, max_arity);
    let chunks: Vec<AxiomReport> =
        bases.par_iter().map(|level| check_unit_laws(op, std::slice::from_ref(level))).collect();
    chunks.into_iter().fold(AxiomReport::default(), AxiomReport::merge)
}

/// Parallel form of `verify_freeness`: operation trees are grouped by the
/// arity of their root generator and each group is evaluated separately.
pub fn verify_freeness(n: usize) -> Result<FreenessReport> {
    if n < 2 {
        bail!("freeness needs arity at least 2, got {n}");
    }
    let catalog = OperationTreeCatalog::indecomposable(n);
    let ops = catalog.of_arity(n);
    let groups: Vec<&[OperationTree]> = ops.chunk_by(|x, y| x.generator().arity() == y.generator().arity()).collect();
    let images: Vec<(usize, BTreeSet<Tree>)> =
        groups.par_iter().map(|group| (group.len(), group.iter().map(OperationTree::evaluate).collect())).collect();
    let mut distinct = BTreeSet::new();
    let mut constructions = 0;
    for (len, image) in images {
        constructions += len;
        distinct.extend(image);
    }
    Ok(FreenessReport { n, trees: cayley_count(n), constructions, distinct: distinct.len() })
}

/// Number of indecomposable trees of arity `n`.
pub fn count_indecomposables(n: usize) -> Result<usize> {
    if n < 2 {
        bail!("generators have arity at least 2, got {n}");
    }
    Ok(enumerate_trees(n)?.par_bridge().filter(|x| is_indecomposable(x).expect("standard, n >= 2")).count())
}

/// Number of trees of arity `n`, counted in parallel.
pub fn count_trees(n: usize) -> Result<u128> {
    Ok(enumerate_trees(n)?.par_bridge().map(|_| 1u128).sum())
}

/// Result of checking every composition `T ∘_i S` with both arities bounded.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct MinmaxReport {
    pub compositions: u64,
    pub failures: Vec<String>,
}

impl MinmaxReport {
    pub fn is_ok(&self) -> bool {
        self.failures.is_empty()
    }
}

/// For every `(T, i, S)` with arities at most `max_arity`: the lowest and
/// highest degrees in `T ∘_i S` each occur once, equal the predicted bounds,
/// and belong to the `T_Min` and `T_Max` compositions.
pub fn verify_minmax(max_arity: usize) -> MinmaxReport {
    let trees = trees_by_arity(max_arity);
    let all: Vec<&Tree> = trees.iter().flatten().collect();
    let chunks: Vec<MinmaxReport> = all
        .par_iter()
        .map(|t| {
            let mut report = MinmaxReport::default();
            for i in 1..=t.arity() {
                for s in &all {
                    report.compositions += 1;
                    if let Err(reason) = minmax_instance(t, i, s) {
                        report.failures.push(format!("T={t} i={i} S={s}: {reason}"));
                    }
                }
            }
            report
        })
        .collect();
    chunks.into_iter().fold(MinmaxReport::default(), |mut acc, r| {
        acc.compositions += r.compositions;
        acc.failures.extend(r.failures);
        acc
    })
}

fn minmax_instance(t: &Tree, i: Label, s: &Tree) -> std::result::Result<(), String> {
    let spectrum = degree_spectrum(t, i, s).map_err(|e| e.to_string())?;
    let (lo, hi) = degree_bounds(t, i, s).map_err(|e| e.to_string())?;
    let min = *spectrum.iter().min().expect("at least one term");
    let max = *spectrum.iter().max().expect("at least one term");
    if (min, max) != (lo, hi) {
        return Err(format!("degrees span {min}..{max}, bounds {lo}..{hi}"));
    }
    for (value, name) in [(lo, "minimum"), (hi, "maximum")] {
        let hits = spectrum.iter().filter(|&&d| d == value).count();
        if hits != 1 {
            return Err(format!("{name} {value} attained {hits} times"));
        }
    }
    let lo_tree = compose_min(t, i, s).map_err(|e| e.to_string())?;
    let hi_tree = compose_max(t, i, s).map_err(|e| e.to_string())?;
    if lo_tree.degree() != lo || hi_tree.degree() != hi {
        return Err(format!("set compositions have degrees {} and {}", lo_tree.degree(), hi_tree.degree()));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use operad_forge_core::{PreLie, SetOperad};

    #[test]
    fn parallel_matches_sequential() {
        for kind in SetOperad::ALL {
            let seq = operad_forge_core::check_axioms(&kind, 3);
            assert_eq!(check_axioms(&kind, 3), seq);
        }
        assert_eq!(check_axioms(&PreLie, 2), operad_forge_core::check_axioms(&PreLie, 2));
        for n in 2..=5 {
            assert_eq!(verify_freeness(n).unwrap(), operad_forge_core::verify_freeness(n).unwrap());
            assert_eq!(count_indecomposables(n).unwrap(), operad_forge_core::count_indecomposables(n).unwrap());
        }
    }

    #[test]
    fn pool_sizes() {
        assert_eq!(with_pool(Some(2), rayon::current_num_threads).unwrap(), 2);
        assert_eq!(with_pool(Some(1), || count_trees(4).unwrap()).unwrap(), 64);
    }

    #[test]
    fn minmax_small() {
        let r = verify_minmax(3);
        assert!(r.is_ok(), "{:?}", r.failures);
        // (1 + 2·2 + 9·3)·12 triples
        assert_eq!(r.compositions, 32 * 12);
    }
}
