//! Range-partitioned scans on scoped threads. Results come back in chunk
//! order, so callers that merge them get the same answer for any thread
//! count.

use std::collections::BTreeSet;
use std::ops::Range;

use arglab_core::realisable::{
    realized_families, relation_count, survey_from_realized, SurveyReport,
};
use arglab_core::reduction::{verify_reduction, CnfFormula, GadgetVariant, ReductionReport};
use arglab_core::{ExtensionFamily, Result};

/// `0..total` cut into at most `parts` contiguous, non-empty ranges.
pub fn split(total: u64, parts: usize) -> Vec<Range<u64>> {
    let parts = (parts.max(1) as u64).min(total.max(1));
    let (base, extra) = (total / parts, total % parts);
    let mut start = 0;
    (0..parts)
        .map(|k| {
            let len = base + u64::from(k < extra);
            let r = start..start + len;
            start += len;
            r
        })
        .collect()
}

pub fn map_chunks<T, F>(total: u64, threads: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(Range<u64>) -> T + Sync,
{
    let ranges = split(total, threads);
    if ranges.len() == 1 {
        return ranges.into_iter().map(&f).collect();
    }
    std::thread::scope(|scope| {
        let handles: Vec<_> = ranges
            .into_iter()
            .map(|r| {
                let f = &f;
                scope.spawn(move || f(r))
            })
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("worker panicked"))
            .collect()
    })
}

pub fn survey(n: usize, threads: usize) -> Result<SurveyReport> {
    if n > arglab_core::realisable::SURVEY_MAX_ARGS {
        // let the core produce the cap error before any thread starts
        return arglab_core::realisable::survey(n);
    }
    let mut realized: BTreeSet<ExtensionFamily> = BTreeSet::new();
    for part in map_chunks(relation_count(n), threads, |r| realized_families(n, r)) {
        realized.extend(part?);
    }
    survey_from_realized(n, realized)
}

pub fn verify_corpus(
    corpus: &[CnfFormula],
    variant: GadgetVariant,
    threads: usize,
) -> Result<Vec<ReductionReport>> {
    let parts = map_chunks(corpus.len() as u64, threads, |r| {
        corpus[r.start as usize..r.end as usize]
            .iter()
            .map(|phi| verify_reduction(phi, variant))
            .collect::<Result<Vec<_>>>()
    });
    let mut out = Vec::with_capacity(corpus.len());
    for part in parts {
        out.extend(part?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn split_covers_range() {
        for total in [0u64, 1, 7, 64, 4096] {
            for parts in [1, 2, 3, 8, 100] {
                let rs = split(total, parts);
                assert_eq!(rs.first().unwrap().start, 0);
                assert_eq!(rs.last().unwrap().end, total);
                assert!(rs.windows(2).all(|w| w[0].end == w[1].start));
            }
        }
    }

    #[test]
    fn survey_is_thread_count_independent() {
        let one = survey(3, 1).unwrap();
        for t in [2, 3, 7] {
            assert_eq!(survey(3, t).unwrap(), one);
        }
    }
}
