//! Fixtures shared by the benchmarks.

use schubcurve::shapes::parse_partition_list;
use schubcurve::{Partition, Rectangle};

/// The four-point problem in `G(3,8)` with types `2;2,1;3,1;3,2`.
pub fn g38() -> (Vec<Partition>, Rectangle) {
    (
        parse_partition_list("2;2,1;3,1;3,2").unwrap(),
        Rectangle::new(3, 5).unwrap(),
    )
}

/// `(α, β, γ)` in `4x5` with `c = 12`, `k = 13`.
pub fn g49() -> (Partition, Partition, Partition, Rectangle) {
    let a: Partition = "3,2,1".parse().unwrap();
    (
        a.clone(),
        "4,2,1".parse().unwrap(),
        a,
        Rectangle::new(4, 5).unwrap(),
    )
}
