use chorded_spectra_core::enumerate::{EnumerationLimits, EnumerationMode, Enumerator, GraphClass};
use chorded_spectra_core::lab::{ExtremalAccumulator, ExtremalReport, LabError};
use rayon::prelude::*;

/// Depth (in edges) at which the generation tree is cut into jobs.
pub const SPLIT_DEPTH: usize = 3;

/// Extremal spectral search over the isolate-free `m`-edge graphs of
/// `class`, with subtrees below depth [`SPLIT_DEPTH`] spread over `jobs`
/// threads. The report does not depend on `jobs` or scheduling.
pub fn extremal_spectral_parallel(
    m: usize,
    class: GraphClass,
    limits: EnumerationLimits,
    jobs: usize,
) -> Result<ExtremalReport, LabError> {
    let e = Enumerator::new(EnumerationMode::IsolateFreeSize(m), class, limits)?;
    let split = e.split(SPLIT_DEPTH.min(m));
    let mut acc = ExtremalAccumulator::new();
    for g in &split.emitted {
        acc.add(g)?;
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .expect("thread pool");
    let parts: Vec<Result<ExtremalAccumulator, LabError>> = pool.install(|| {
        split
            .frontier
            .par_iter()
            .map(|node| {
                let mut local = ExtremalAccumulator::new();
                let mut err = None;
                e.for_each_in_subtree(node, &mut |g| {
                    if err.is_none() {
                        err = local.add(g).err();
                    }
                });
                err.map_or(Ok(local), Err)
            })
            .collect()
    });
    for part in parts {
        acc.merge(part?);
    }
    acc.finish(m, &class.name())
}

#[cfg(test)]
mod tests {
    use super::*;
    use chorded_spectra_core::lab::extremal_spectral;

    #[test]
    fn matches_sequential_run() {
        let lim = EnumerationLimits::default();
        for m in [2, 5, 8] {
            let seq = extremal_spectral(m, GraphClass::ChordedCycleFree, lim).unwrap();
            for jobs in [1, 3] {
                assert_eq!(
                    extremal_spectral_parallel(m, GraphClass::ChordedCycleFree, lim, jobs).unwrap(),
                    seq
                );
            }
        }
    }
}
