//! Shared inputs for the benchmarks.

use p4surf_core::SearchBox;

/// Default oracle box with the degree floor lowered so every sieve pair is hit.
pub fn full_box() -> SearchBox {
    SearchBox::default().with_d_min(1)
}

/// A box roughly four times the default in `b` and `r`.
pub fn wide_box() -> SearchBox {
    SearchBox { b: 0..=240, r: 0..=480, ..full_box() }
}
