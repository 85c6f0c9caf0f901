use std::collections::{BTreeMap, BTreeSet};

use hcmod_core::ab_diagram::{diagrams_with_a_count, enumerate_ab_diagrams, ABDiagram};
use hcmod_core::Partition;

/// Every labeling of `tau`, one start letter per row, as sorted row lists.
fn brute_force(tau: &Partition) -> BTreeMap<usize, BTreeSet<Vec<String>>> {
    let rows = tau.parts();
    let mut out: BTreeMap<usize, BTreeSet<Vec<String>>> = BTreeMap::new();
    for mask in 0u32..(1 << rows.len()) {
        let mut labeled: Vec<String> = rows
            .iter()
            .enumerate()
            .map(|(r, &len)| {
                let (x, y) = if mask & (1 << r) != 0 { ('b', 'a') } else { ('a', 'b') };
                (0..len).map(|i| if i % 2 == 0 { x } else { y }).collect()
            })
            .collect();
        labeled.sort();
        let a = labeled.iter().flat_map(|r| r.chars()).filter(|&c| c == 'a').count();
        out.entry(a).or_default().insert(labeled);
    }
    out
}

fn as_sorted_rows(d: &ABDiagram) -> Vec<String> {
    let mut rows = d.rows().to_vec();
    rows.sort();
    rows
}

#[test]
fn enumeration_matches_brute_force() {
    for n in 1..=8 {
        for tau in Partition::all_of(n) {
            let oracle = brute_force(&tau);
            let mut total = 0;
            for k in 0..=n {
                let got: Vec<ABDiagram> = diagrams_with_a_count(&tau, k);
                let set: BTreeSet<Vec<String>> = got.iter().map(as_sorted_rows).collect();
                assert_eq!(set.len(), got.len(), "{tau} k={k}: duplicates");
                assert_eq!(set, oracle.get(&k).cloned().unwrap_or_default(), "{tau} k={k}");
                if 0 < k && k < n {
                    assert_eq!(enumerate_ab_diagrams(&tau, k).unwrap(), got);
                }
                total += got.len();
            }
            assert_eq!(total, oracle.values().map(BTreeSet::len).sum::<usize>());
        }
    }
}

#[test]
fn covers_move_one_box_up() {
    for n in 1..=7 {
        for tau in Partition::all_of(n) {
            for k in 0..=n {
                for d in diagrams_with_a_count(&tau, k) {
                    for c in d.closure_covers() {
                        assert_eq!(c.a_count(), d.a_count(), "{d} -> {c}");
                        assert!(c.shape().dominates(d.shape()) && c.shape() != d.shape(), "{d} -> {c}");
                        let diff: usize = (1..=n)
                            .map(|i| c.shape().part(i).abs_diff(d.shape().part(i)))
                            .sum();
                        assert_eq!(diff, 2, "{d} -> {c}");
                    }
                }
            }
        }
    }
}

#[test]
fn levi_blocks_fill_the_diagram() {
    for n in 1..=8 {
        for tau in Partition::all_of(n) {
            for k in 0..=n {
                for d in diagrams_with_a_count(&tau, k) {
                    let blocks = d.levi_blocks();
                    let total: usize = blocks.iter().map(|(j, (a, b))| j * (a + b)).sum();
                    assert_eq!(total, n);
                }
            }
        }
    }
}

#[test]
fn json_rows() {
    let d: ABDiagram = "ab/a".parse().unwrap();
    let text = serde_json::to_string(&d).unwrap();
    assert_eq!(text, r#"["ab","a"]"#);
    assert_eq!(serde_json::from_str::<ABDiagram>(&text).unwrap(), d);
    assert!(serde_json::from_str::<ABDiagram>(r#"["aa"]"#).is_err());
}
