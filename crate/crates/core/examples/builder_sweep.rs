// Scratch sweep: every even multiset summing <= 40 x odd in {none,3,5,7,9,11}.
use disk_clique::geom::{build_co_cycles_representation, plan_target_graph, BuildPlan};
use disk_clique::geom::intersection_graph;

fn even_multisets(max_sum: usize) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    fn rec(min_part: usize, remaining: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        let mut part = min_part;
        while part <= remaining {
            cur.push(part);
            out.push(cur.clone());
            rec(part, remaining - part, cur, out);
            cur.pop();
            part += 2;
        }
    }
    rec(4, max_sum, &mut vec![], &mut out);
    out
}

fn main() {
    let mut total = 0;
    let mut failed = 0;
    for evens in even_multisets(40) {
        for odd in [None, Some(3), Some(5), Some(7), Some(9), Some(11)] {
            let odds: Vec<usize> = odd.into_iter().collect();
            if evens.is_empty() && odds.is_empty() {
                continue;
            }
            let plan = BuildPlan::new(evens.clone(), odds.clone()).unwrap();
            total += 1;
            match build_co_cycles_representation(&plan) {
                Ok(rep) => {
                    assert_eq!(intersection_graph(&rep), plan_target_graph(&plan));
                }
                Err(e) => {
                    failed += 1;
                    println!("FAIL {evens:?} + {odds:?}: {e}");
                }
            }
        }
    }
    println!("{total} plans, {failed} failures");
}
