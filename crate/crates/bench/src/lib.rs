//! Inputs shared by the criterion benchmarks in `benches/`.

use whalg::groups::{standard_cocycle, FiniteGroup, ThreeCocycle};

/// Trivial cocycles on the catalog groups plus every nontrivial standard
/// cocycle on the cyclic ones, optionally capped by group order.
pub fn sweep_inputs(max_order: usize) -> Vec<(String, ThreeCocycle)> {
    let mut out = Vec::new();
    for g in FiniteGroup::standard_catalog().into_iter().filter(|g| g.order() <= max_order) {
        out.push((format!("{}/trivial", g.name()), ThreeCocycle::trivial(&g)));
        if let Some(n) = g.cyclic_order() {
            for p in 1..n {
                out.push((format!("{}/p={p}", g.name()), standard_cocycle(n, p).expect("p < n")));
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_three_inputs() {
        let names: Vec<_> = sweep_inputs(3).into_iter().map(|(n, _)| n).collect();
        assert_eq!(names, ["z2/trivial", "z2/p=1", "z3/trivial", "z3/p=1", "z3/p=2"]);
    }
}
