//! Fixture builders shared by the benchmarks.

use friezetile::{Mat2, Quiddity, Triple};

/// The worked (4,5) example: q = (1,2,2,1,3), q' = (2,1,2,1), M = [[2,5],[7,18]].
pub fn small_triple() -> Triple {
    Triple::new(
        Quiddity::from_i64s(&[1, 2, 2, 1, 3]).unwrap(),
        Quiddity::from_i64s(&[2, 1, 2, 1]).unwrap(),
        Mat2::from_i64(2, 5, 7, 18),
    )
    .unwrap()
}

/// Fan quiddities of order 8 on both axes with a fast-growing seed matrix.
pub fn large_triple() -> Triple {
    let fan = Quiddity::from_i64s(&[6, 1, 2, 2, 2, 2, 2, 1]).unwrap();
    Triple::new(fan.clone(), fan, Mat2::from_i64(1, 7, 7, 50)).unwrap()
}

pub fn heptagon_quiddity() -> Quiddity {
    Quiddity::from_i64s(&[1, 3, 2, 2, 1, 4, 2]).unwrap()
}
