//! Walk against exhaustive search beyond the default bound. Slow in debug
//! builds; run with `cargo test --release -- --ignored`.

use cembed_core::rootsys::SimpleType::*;
use cembed_core::{tangent, RootSystem};

#[test]
#[ignore]
fn walk_matches_oracle_through_rank_eight() {
    for n in 5..=8 {
        for t in [A, B, C, D, E] {
            if !t.admits_rank(n) {
                continue;
            }
            let s = RootSystem::simple(t, n).unwrap();
            for levi in s.all_nodes().subsets().filter(|&l| l != s.all_nodes()) {
                let walk = tangent::removal_set(&s, levi).unwrap();
                assert_eq!(walk, tangent::removal_set_oracle(&s, levi, 8).unwrap(), "{t}{n} levi {levi}");
            }
        }
    }
}
