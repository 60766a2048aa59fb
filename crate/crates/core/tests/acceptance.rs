//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any criterion fails.

use std::collections::BTreeMap;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use burge_core::bijection::{
    multipartition_to_partition, multipartition_to_path, partition_to_multipartition, path_to_multipartition,
};
use burge_core::lattice::{enumerate_paths, from_clusters};
use burge_core::multipartition::{enumerate_multipartitions, minimal_weight};
use burge_core::partition::enumerate_restricted;
use burge_core::qseries::andrews_exponent;
use burge_core::verify;
use burge_core::{BoundaryConfig, Cluster, ClusterSequence, MultiPartition, Partition, PathWord};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn cfg(k: i64, i: i64) -> BoundaryConfig {
    BoundaryConfig::new(k, i).unwrap()
}

fn seq(v: &[(i64, usize)]) -> ClusterSequence {
    ClusterSequence::new(v.iter().map(|&(w, c)| Cluster::new(w, c)).collect())
}

fn mp(c: &[&[u64]]) -> MultiPartition {
    MultiPartition::new(c.iter().map(|v| v.to_vec()).collect()).unwrap()
}

fn part(v: &[u64]) -> Partition {
    Partition::new(v.to_vec()).unwrap()
}

fn equinumerosity_sweep() -> Outcome {
    let report = verify::run(2..=5, 30, 4).map_err(|e| e.to_string())?;
    let bad = report.mismatches();
    if let Some(c) = bad.first() {
        return Err(format!(
            "{} mismatched cells, first k={} i={} n={} m={}: F={} G={} P={} AG={}",
            bad.len(),
            c.cfg.k(),
            c.cfg.i(),
            c.n,
            c.m,
            c.partitions,
            c.multipartitions,
            c.paths,
            c.series
        ));
    }
    let nonzero = report.cells.iter().filter(|c| !c.is_zero()).count();
    let objects: u64 = report.cells.iter().map(|c| c.partitions).sum();
    Ok(format!(
        "{} cells ({nonzero} nonzero, {objects} objects per family) agree",
        report.cells.len()
    ))
}

fn golden_examples() -> Outcome {
    // (a) the worked path
    let c4 = cfg(4, 4);
    let path = PathWord::parse(0, "ABBAABAABBABAABABBBAAA").unwrap();
    path.check(c4).map_err(|e| e.to_string())?;
    let peaks = path.clusters().unwrap();
    let want = seq(&[(19, 3), (15, 1), (12, 1), (10, 2), (6, 1), (3, 2)]);
    ensure(peaks == want, || format!("peaks {peaks}, expected {want}"))?;
    let canon = path_to_multipartition(&path, c4).map_err(|e| e.to_string())?;
    let want = mp(&[&[17, 14, 10], &[12, 7], &[5]]);
    ensure(canon == want, || format!("canonical form {canon}, expected {want}"))?;

    // (b) the worked partition
    let c5 = cfg(5, 5);
    let p = part(&[8, 8, 7, 7, 5, 3, 3, 2, 2, 1, 1]);
    let image = partition_to_multipartition(&p, c5).map_err(|e| e.to_string())?;
    let want = mp(&[&[7], &[10], &[], &[24, 6]]);
    ensure(image == want, || format!("image {image}, expected {want}"))?;
    let back = multipartition_to_partition(&image, c5).map_err(|e| e.to_string())?;
    ensure(back == p, || format!("inverse gives {back}"))?;

    // (c) clusters 7^(2) 8^(4) and the rejected unfoldings
    let got = multipartition_to_partition(&mp(&[&[], &[7], &[], &[8]]), c5).map_err(|e| e.to_string())?;
    ensure(got == part(&[4, 3, 3, 2, 2, 1]), || format!("7^(2) 8^(4) gives {got}"))?;
    for bad in [[4, 3, 2, 2, 2, 2], [3, 3, 3, 3, 2, 1]] {
        let q = part(&bad);
        ensure(!q.satisfies_frequency(c5), || {
            format!("{q} unexpectedly satisfies the frequency condition")
        })?;
    }
    Ok("worked path, worked partition and final example reproduced".into())
}

fn round_trips() -> Outcome {
    let mut checked = 0u64;
    for c in BoundaryConfig::all(2..=5) {
        for n in 0..=25 {
            for p in enumerate_restricted(c, n, None) {
                let x = partition_to_multipartition(&p, c).map_err(|e| format!("{c} {p}: {e}"))?;
                let back = multipartition_to_partition(&x, c).map_err(|e| format!("{c} {x}: {e}"))?;
                ensure(back == p, || format!("{c}: {p} -> {x} -> {back}"))?;
                checked += 1;
            }
            for x in enumerate_multipartitions(c, n, None) {
                let path = multipartition_to_path(&x, c).map_err(|e| format!("{c} {x}: {e}"))?;
                ensure(path.validate(c), || format!("{c}: {x} -> invalid path {path}"))?;
                let back = path_to_multipartition(&path, c).map_err(|e| format!("{c} {path}: {e}"))?;
                ensure(back == x, || format!("{c}: {x} -> {path} -> {back}"))?;
                checked += 1;
            }
        }
    }
    Ok(format!("{checked} round trips, zero failures"))
}

fn interchange_and_energy() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let mut done = 0;
    while done < 10_000 {
        let len = rng.gen_range(2..=8);
        let s = ClusterSequence::new(
            (0..len)
                .map(|_| Cluster::new(rng.gen_range(1..=60), rng.gen_range(1..=4)))
                .collect(),
        );
        let pos = rng.gen_range(0..len - 1);
        let Ok(t) = s.interchange(pos) else {
            continue;
        };
        ensure(t.total_weight() == s.total_weight(), || {
            format!("weight changed: {s} -> {t}")
        })?;
        ensure(t.charge_multiset() == s.charge_multiset(), || {
            format!("charges changed: {s} -> {t}")
        })?;
        let u = t.interchange(pos).map_err(|e| format!("{t}: {e}"))?;
        ensure(u == s, || format!("not an involution: {s} -> {t} -> {u}"))?;
        done += 1;
    }

    let mut paths = 0;
    for c in BoundaryConfig::all(2..=5) {
        for n in 0..=20 {
            for p in enumerate_paths(c, n, None) {
                let s = p.clusters().unwrap();
                ensure(s.total_energy() == 0, || {
                    format!("{c}: path {p} has energy {}", s.total_energy())
                })?;
                paths += 1;
            }
        }
    }

    let c4 = cfg(4, 4);
    let bad = seq(&[(21, 3), (19, 1), (16, 2), (12, 3)]);
    let extremal = bad.pair_energy(0, 3);
    ensure(extremal == 3, || format!("extremal pair energy {extremal}, expected 3"))?;
    ensure(bad.total_energy() > 0, || {
        "21^(3) 19^(1) 16^(2) 12^(3) has zero energy".into()
    })?;
    ensure(from_clusters(c4, &bad).is_err(), || {
        "21^(3) 19^(1) 16^(2) 12^(3) accepted as a path".into()
    })?;
    let good = seq(&[(24, 3), (19, 1), (16, 2), (12, 3)]);
    ensure(good.total_energy() == 0, || {
        format!("24^(3) variant has energy {}", good.total_energy())
    })?;
    let path = from_clusters(c4, &good).map_err(|e| format!("24^(3) variant rejected: {e}"))?;
    ensure(path.clusters().unwrap() == good, || {
        format!("24^(3) variant realized as {path}")
    })?;

    Ok(format!(
        "10000 interchanges; {paths} paths with zero energy; extremal pair energy 3, total {} > 0, rejected; 24^(3) variant accepted",
        bad.total_energy()
    ))
}

/// Length vectors `(m_1, .., m_{k-1})` with `sum j m_j <= bound`.
fn length_vectors(k: usize, bound: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for j in 1..k {
        out = out
            .into_iter()
            .flat_map(|v: Vec<usize>| {
                let used: usize = v.iter().enumerate().map(|(a, m)| (a + 1) * m).sum();
                (0..=(bound - used) / j).map(move |m| {
                    let mut w = v.clone();
                    w.push(m);
                    w
                })
            })
            .collect();
    }
    out
}

fn minimal_weight_formula() -> Outcome {
    const BRUTE_N: u64 = 26;
    let mut vectors = 0;
    let mut brute_checked = 0;
    for c in BoundaryConfig::all(2..=5) {
        // lowest weight at which each length vector occurs, by enumeration
        let mut seen: BTreeMap<Vec<usize>, u64> = BTreeMap::new();
        for n in 0..=BRUTE_N {
            for x in enumerate_multipartitions(c, n, None) {
                seen.entry(x.lengths()).or_insert(n);
            }
        }
        for v in length_vectors(c.k(), 12) {
            let tails: Vec<u64> = (0..v.len()).map(|j| v[j..].iter().sum::<usize>() as u64).collect();
            let formula: u64 = tails.iter().map(|t| t * t).sum::<u64>() + tails[c.i() - 1..].iter().sum::<u64>();
            let got = minimal_weight(c, &v);
            ensure(got == formula, || {
                format!("{c} {v:?}: minimal weight {got}, formula {formula}")
            })?;
            ensure(andrews_exponent(c, &v) == formula, || {
                format!("{c} {v:?}: exponent differs")
            })?;
            match seen.get(&v) {
                Some(&n) => {
                    ensure(n == formula, || {
                        format!("{c} {v:?}: first seen at {n}, formula {formula}")
                    })?;
                    brute_checked += 1;
                }
                None => ensure(formula > BRUTE_N, || {
                    format!("{c} {v:?}: never seen up to {BRUTE_N}, formula {formula}")
                })?,
            }
            vectors += 1;
        }
    }
    Ok(format!(
        "{vectors} length vectors; {brute_checked} also confirmed by enumeration up to n={BRUTE_N}"
    ))
}

fn peak_bounds() -> Outcome {
    let mut peaks_checked = 0;
    let mut pairs_checked = 0;
    for c in BoundaryConfig::all(2..=5) {
        for n in 0..=20 {
            for p in enumerate_paths(c, n, None) {
                let s: Vec<Cluster> = p.clusters().unwrap().clusters().to_vec();
                for q in &s {
                    let j = q.charge as i64;
                    let floor = j + (j - c.i() as i64 + 1).max(0);
                    ensure(q.weight >= floor, || format!("{c} {p}: peak {q} below {floor}"))?;
                    peaks_checked += 1;
                }
                for a in 0..s.len() {
                    for b in a + 1..s.len() {
                        let (x, y) = (&s[a], &s[b]);
                        let low = x.charge.min(y.charge);
                        let mid = &s[a + 1..b];
                        if mid.iter().any(|z| z.charge >= low) {
                            continue;
                        }
                        let between: i64 = mid.iter().map(|z| z.charge as i64).sum();
                        let need = 2 * low as i64 + (x.charge > y.charge) as i64 + 2 * between;
                        ensure(x.weight - y.weight >= need, || {
                            format!("{c} {p}: {x} .. {y} separated by {} < {need}", x.weight - y.weight)
                        })?;
                        pairs_checked += 1;
                    }
                }
            }
        }
    }
    Ok(format!("{peaks_checked} peaks, {pairs_checked} windowed pairs"))
}

fn remark_count() -> Outcome {
    let c = cfg(3, 3);
    let library = enumerate_multipartitions(c, 17, None)
        .into_iter()
        .filter(|x| x.lengths() == vec![1, 2])
        .count();
    let mut triple = 0;
    for p in 0..=17i64 {
        for n1 in 0..=17 {
            for n2 in 0..=17 {
                if p >= 5 && n1 >= n2 + 4 && n2 >= 2 && p + n1 + n2 == 17 {
                    triple += 1;
                }
            }
        }
    }
    ensure(library == triple, || {
        format!("enumeration {library}, triple loop {triple}")
    })?;
    Ok(format!("{library} objects, matching the triple loop"))
}

fn main() {
    let criteria: [Criterion; 7] = [
        ("1 equinumerosity sweep k=2..5, n<=30", equinumerosity_sweep),
        ("2 golden examples", golden_examples),
        ("3 round trips k<=5, n<=25", round_trips),
        ("4 interchange and energy", interchange_and_energy),
        ("5 minimal weight formula", minimal_weight_formula),
        ("6 peak position and separation bounds", peak_bounds),
        ("7 weight-17 count for k=i=3, lengths (1,2)", remark_count),
    ];
    let mut failed = Vec::new();
    for (name, check) in criteria {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|_| Err("panicked".into()));
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS criterion {name}: {detail} [{secs:.1}s]"),
            Err(detail) => {
                println!("FAIL criterion {name}: {detail} [{secs:.1}s]");
                failed.push(name);
            }
        }
    }
    if !failed.is_empty() {
        eprintln!("failed criteria: {failed:?}");
        std::process::exit(1);
    }
    println!("all {} criteria passed", criteria.len());
}
