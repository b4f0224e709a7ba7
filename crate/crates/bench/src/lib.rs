//! Benchmarks for `subtuple-core`; see `benches/tail.rs`.

/// Instances swept by the scaling benchmark, `(n, x, y, z)`.
pub const SCALING: [(u64, u64, u64, u64); 4] = [
    (100, 50, 10, 3),
    (200, 100, 25, 5),
    (500, 200, 50, 10),
    (800, 300, 80, 20),
];
