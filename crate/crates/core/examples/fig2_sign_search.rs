//! Re-runs the face-sign search for the bundled fig2 fixture and prints the
//! selected incidences in `.cw` syntax together with the example sums.
//!
//!     cargo run -p hyperlap-core --example fig2_sign_search

use hyperlap_core::enumerate::walk_sign;
use hyperlap_core::formats::{fig2_example_lower_walk, fig2_example_upper_walk, search_fig2_signs, serialize_cw};
use hyperlap_core::walkcount::signed_count;
use hyperlap_core::WalkQuery;

fn main() {
    let search = search_fig2_signs();
    let x = &search.chosen;
    println!("# {} of 512 assignments satisfy the hard constraints", search.feasible);
    println!("# {} of those give +1 for the length-1 upper sum e1^2 -> e3^2", search.preferred);
    println!("# {} of them give +1 for the length-2 upper sum", search.length_two_plus);
    println!("# lower example walk sign: {}", walk_sign(x, &fig2_example_lower_walk()).unwrap());
    println!("# upper example walk sign: {}", walk_sign(x, &fig2_example_upper_walk()).unwrap());
    for (label, q) in [
        ("lower e1^1 -> e6^1, k=4", WalkQuery::lower(1, 0, 5, 4)),
        ("upper e1^2 -> e3^2, k=1", WalkQuery::upper(1, 0, 2, 1)),
        ("upper e1^2 -> e3^2, k=2", WalkQuery::upper(1, 0, 2, 2)),
    ] {
        println!("# {label}: {}", signed_count(x, q).unwrap().value);
    }
    print!("{}", serialize_cw(x));
}
