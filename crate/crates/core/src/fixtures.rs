// Reference matrices transcribed entrywise from published displays. Used only
// by tests; integration tests include this file with `#[path]`.
#![allow(dead_code)]

use crate::matrix::IntMatrix;

fn m<const N: usize>(rows: [[i64; N]; N]) -> IntMatrix {
    IntMatrix::from_rows(&rows).unwrap()
}

/// The 5x5 idempotent `E1`.
pub fn e1() -> IntMatrix {
    m([
        [0, 0, 1, 0, 0],
        [0, 1, -1, 0, 1],
        [0, 0, 1, 0, 0],
        [1, 0, -1, 1, 0],
        [0, 0, 1, 0, 0],
    ])
}

/// The 5x5 order-2 ASM with square `E1`.
pub fn sa5_a() -> IntMatrix {
    m([
        [0, 0, 1, 0, 0],
        [1, 0, -1, 1, 0],
        [0, 0, 1, 0, 0],
        [0, 1, -1, 0, 1],
        [0, 0, 1, 0, 0],
    ])
}

/// Permutation matrix of (1 2)(4 5).
pub fn sa5_p() -> IntMatrix {
    m([
        [0, 1, 0, 0, 0],
        [1, 0, 0, 0, 0],
        [0, 0, 1, 0, 0],
        [0, 0, 0, 0, 1],
        [0, 0, 0, 1, 0],
    ])
}

/// Nonsingular lift `A + (I - E1)`.
pub fn sa5_a_lift() -> IntMatrix {
    m([
        [1, 0, 0, 0, 0],
        [1, 0, 0, 1, -1],
        [0, 0, 1, 0, 0],
        [-1, 1, 0, 0, 1],
        [0, 0, 0, 0, 1],
    ])
}

/// Permutation matrix of the transposition (2 4).
pub fn sa5_q() -> IntMatrix {
    m([
        [1, 0, 0, 0, 0],
        [0, 0, 0, 1, 0],
        [0, 0, 1, 0, 0],
        [0, 1, 0, 0, 0],
        [0, 0, 0, 0, 1],
    ])
}

/// Transpose of `E1` as displayed in the nullity-2 classification.
pub fn e1_transpose_display() -> IntMatrix {
    m([
        [0, 0, 0, 1, 0],
        [0, 1, 0, 0, 0],
        [1, -1, 1, -1, 1],
        [0, 0, 0, 1, 0],
        [0, 1, 0, 0, 0],
    ])
}

pub mod klein6 {
    use super::*;

    pub fn e() -> IntMatrix {
        m([
            [0, 0, 0, 1, 0, 0],
            [0, 1, 0, -1, 0, 1],
            [0, 0, 1, 0, 0, 0],
            [0, 0, 0, 1, 0, 0],
            [1, 0, 0, -1, 1, 0],
            [0, 0, 0, 1, 0, 0],
        ])
    }

    pub fn a() -> IntMatrix {
        m([
            [0, 0, 0, 1, 0, 0],
            [1, 0, 0, -1, 1, 0],
            [0, 0, 1, 0, 0, 0],
            [0, 0, 0, 1, 0, 0],
            [0, 1, 0, -1, 0, 1],
            [0, 0, 0, 1, 0, 0],
        ])
    }

    pub fn b() -> IntMatrix {
        m([
            [0, 0, 1, 0, 0, 0],
            [0, 1, -1, 0, 0, 1],
            [0, 0, 0, 1, 0, 0],
            [0, 0, 1, 0, 0, 0],
            [1, 0, -1, 0, 1, 0],
            [0, 0, 1, 0, 0, 0],
        ])
    }

    pub fn c() -> IntMatrix {
        m([
            [0, 0, 1, 0, 0, 0],
            [1, 0, -1, 0, 1, 0],
            [0, 0, 0, 1, 0, 0],
            [0, 0, 1, 0, 0, 0],
            [0, 1, -1, 0, 0, 1],
            [0, 0, 1, 0, 0, 0],
        ])
    }

    pub fn d() -> IntMatrix {
        m([
            [0, 0, 0, 1, 0, 0],
            [0, 0, 1, 0, 0, 0],
            [0, 1, 0, -1, 0, 1],
            [0, 0, 0, 1, 0, 0],
            [1, 0, 0, -1, 1, 0],
            [0, 0, 0, 1, 0, 0],
        ])
    }

    /// Lifts `A + T`, `B + T`, `C + T` with `T = I - E`.
    pub fn lifts() -> [IntMatrix; 3] {
        [
            m([
                [1, 0, 0, 0, 0, 0],
                [1, 0, 0, 0, 1, -1],
                [0, 0, 1, 0, 0, 0],
                [0, 0, 0, 1, 0, 0],
                [-1, 1, 0, 0, 0, 1],
                [0, 0, 0, 0, 0, 1],
            ]),
            m([
                [1, 0, 1, -1, 0, 0],
                [0, 1, -1, 1, 0, 0],
                [0, 0, 0, 1, 0, 0],
                [0, 0, 1, 0, 0, 0],
                [0, 0, -1, 1, 1, 0],
                [0, 0, 1, -1, 0, 1],
            ]),
            m([
                [1, 0, 1, -1, 0, 0],
                [1, 0, -1, 1, 1, -1],
                [0, 0, 0, 1, 0, 0],
                [0, 0, 1, 0, 0, 0],
                [-1, 1, -1, 1, 0, 1],
                [0, 0, 1, -1, 0, 1],
            ]),
        ]
    }

    /// Non-permutation matrix `P` with `B = P E`.
    pub fn theta_p() -> IntMatrix {
        m([
            [0, 0, 1, 0, 0, 0],
            [1, 1, -1, 0, 0, 0],
            [1, 0, 0, 0, 0, 0],
            [-1, 0, 1, 1, 0, 0],
            [1, 0, -1, 0, 1, 0],
            [0, 0, 1, 1, 0, -1],
        ])
    }
}

/// 7x7 pair generating a non-abelian group of order 6.
pub mod s3_7 {
    use super::*;

    pub fn e() -> IntMatrix {
        m([
            [0, 0, 1, 0, 0, 0, 0],
            [0, 1, -1, 0, 0, 0, 1],
            [0, 0, 1, 0, 0, 0, 0],
            [0, 0, 0, 1, 0, 0, 0],
            [0, 0, 0, 0, 1, 0, 0],
            [1, 0, -1, 0, 0, 1, 0],
            [0, 0, 1, 0, 0, 0, 0],
        ])
    }

    pub fn a() -> IntMatrix {
        m([
            [0, 0, 0, 0, 1, 0, 0],
            [0, 1, 0, 0, -1, 0, 1],
            [0, 0, 0, 0, 1, 0, 0],
            [0, 0, 1, 0, 0, 0, 0],
            [0, 0, 0, 1, 0, 0, 0],
            [1, 0, 0, 0, -1, 1, 0],
            [0, 0, 0, 0, 1, 0, 0],
        ])
    }

    pub fn b() -> IntMatrix {
        m([
            [0, 0, 0, 0, 1, 0, 0],
            [0, 1, 0, 0, -1, 0, 1],
            [0, 0, 0, 0, 1, 0, 0],
            [0, 0, 0, 1, 0, 0, 0],
            [0, 0, 1, 0, 0, 0, 0],
            [1, 0, 0, 0, -1, 1, 0],
            [0, 0, 0, 0, 1, 0, 0],
        ])
    }
}

/// 7x7 pair (orders 4 and 2) generating a non-abelian group of order 8.
pub mod d8_7 {
    use super::*;

    pub fn e() -> IntMatrix {
        m([
            [0, 0, 0, 1, 0, 0, 0],
            [0, 1, 0, -1, 0, 0, 1],
            [0, 0, 1, 0, 0, 0, 0],
            [0, 0, 0, 1, 0, 0, 0],
            [1, 0, 0, -1, 1, 0, 0],
            [0, 0, 0, 0, 0, 1, 0],
            [0, 0, 0, 1, 0, 0, 0],
        ])
    }

    pub fn a() -> IntMatrix {
        m([
            [0, 0, 0, 1, 0, 0, 0],
            [0, 0, 0, 0, 0, 1, 0],
            [0, 1, 0, -1, 0, 0, 1],
            [0, 0, 0, 1, 0, 0, 0],
            [0, 0, 1, 0, 0, 0, 0],
            [1, 0, 0, -1, 1, 0, 0],
            [0, 0, 0, 1, 0, 0, 0],
        ])
    }

    pub fn b() -> IntMatrix {
        m([
            [0, 0, 0, 1, 0, 0, 0],
            [1, 0, 0, -1, 1, 0, 0],
            [0, 0, 1, 0, 0, 0, 0],
            [0, 0, 0, 1, 0, 0, 0],
            [0, 1, 0, -1, 0, 0, 1],
            [0, 0, 0, 0, 0, 1, 0],
            [0, 0, 0, 1, 0, 0, 0],
        ])
    }
}

/// 7x7 pair (orders 6 and 2) generating a non-abelian group of order 12.
pub mod g12_7 {
    use super::*;

    pub fn e() -> IntMatrix {
        m([
            [0, 0, 0, 0, 1, 0, 0],
            [0, 1, 0, 0, -1, 0, 1],
            [0, 0, 1, 0, 0, 0, 0],
            [0, 0, 0, 1, 0, 0, 0],
            [0, 0, 0, 0, 1, 0, 0],
            [1, 0, 0, 0, -1, 1, 0],
            [0, 0, 0, 0, 1, 0, 0],
        ])
    }

    pub fn a() -> IntMatrix {
        m([
            [0, 0, 0, 1, 0, 0, 0],
            [1, 0, 0, -1, 0, 1, 0],
            [0, 0, 0, 0, 1, 0, 0],
            [0, 0, 1, 0, 0, 0, 0],
            [0, 0, 0, 1, 0, 0, 0],
            [0, 1, 0, -1, 0, 0, 1],
            [0, 0, 0, 1, 0, 0, 0],
        ])
    }

    pub fn b() -> IntMatrix {
        m([
            [0, 0, 0, 0, 1, 0, 0],
            [1, 0, 0, 0, -1, 1, 0],
            [0, 0, 0, 1, 0, 0, 0],
            [0, 0, 1, 0, 0, 0, 0],
            [0, 0, 0, 0, 1, 0, 0],
            [0, 1, 0, 0, -1, 0, 1],
            [0, 0, 0, 0, 1, 0, 0],
        ])
    }
}

/// 7x7 order-2 ASM with three negative entries, and its square.
pub mod three_neg_7 {
    use super::*;

    pub fn a() -> IntMatrix {
        m([
            [0, 0, 0, 0, 1, 0, 0],
            [0, 0, 1, 0, -1, 1, 0],
            [0, 0, 0, 0, 1, 0, 0],
            [1, 0, -1, 1, 0, 0, 0],
            [0, 0, 1, 0, 0, 0, 0],
            [0, 1, 0, 0, -1, 0, 1],
            [0, 0, 0, 0, 1, 0, 0],
        ])
    }

    pub fn e() -> IntMatrix {
        m([
            [0, 0, 1, 0, 0, 0, 0],
            [0, 1, -1, 0, 0, 0, 1],
            [0, 0, 1, 0, 0, 0, 0],
            [1, 0, -1, 1, 0, 0, 0],
            [0, 0, 0, 0, 1, 0, 0],
            [0, 0, 0, 0, 0, 1, 0],
            [0, 0, 1, 0, 0, 0, 0],
        ])
    }
}

/// 7x7 frames of order 3 (variant A) and 6 (variant B) on a 3-cycle.
pub mod frame7 {
    use super::*;

    pub fn a() -> IntMatrix {
        m([
            [0, 0, 0, 0, 1, 0, 0],
            [0, 1, 0, 0, -1, 0, 1],
            [0, 0, 0, 0, 1, 0, 0],
            [0, 0, 1, 0, 0, 0, 0],
            [0, 0, 0, 1, 0, 0, 0],
            [1, 0, 0, 0, -1, 1, 0],
            [0, 0, 0, 0, 1, 0, 0],
        ])
    }

    pub fn b() -> IntMatrix {
        m([
            [0, 0, 0, 0, 1, 0, 0],
            [1, 0, 0, 0, -1, 1, 0],
            [0, 0, 0, 0, 1, 0, 0],
            [0, 0, 1, 0, 0, 0, 0],
            [0, 0, 0, 1, 0, 0, 0],
            [0, 1, 0, 0, -1, 0, 1],
            [0, 0, 0, 0, 1, 0, 0],
        ])
    }
}

/// 8x8 generators of a copy of S4 (orders 4 and 2).
pub mod s4_8 {
    use super::*;

    pub fn a() -> IntMatrix {
        m([
            [0, 0, 0, 0, 0, 1, 0, 0],
            [0, 1, 0, 0, 0, -1, 0, 1],
            [0, 0, 0, 0, 0, 1, 0, 0],
            [0, 0, 1, 0, 0, 0, 0, 0],
            [0, 0, 0, 1, 0, 0, 0, 0],
            [0, 0, 0, 0, 1, 0, 0, 0],
            [1, 0, 0, 0, 0, -1, 1, 0],
            [0, 0, 0, 0, 0, 1, 0, 0],
        ])
    }

    pub fn b() -> IntMatrix {
        m([
            [0, 0, 0, 0, 0, 1, 0, 0],
            [0, 1, 0, 0, 0, -1, 0, 1],
            [0, 0, 0, 0, 0, 1, 0, 0],
            [0, 0, 0, 1, 0, 0, 0, 0],
            [0, 0, 0, 0, 1, 0, 0, 0],
            [0, 0, 1, 0, 0, 0, 0, 0],
            [1, 0, 0, 0, 0, -1, 1, 0],
            [0, 0, 0, 0, 0, 1, 0, 0],
        ])
    }
}

/// 9x9 matrices built from `E_2`.
pub mod theta9 {
    use super::*;

    /// Order 3; also the generator `S` of the S3 copy in SA_9.
    pub fn order3() -> IntMatrix {
        m([
            [0, 0, 0, 0, 1, 0, 0, 0, 0],
            [1, 0, 0, 0, -1, 1, 0, 0, 0],
            [0, 0, 0, 0, 1, 0, 0, 0, 0],
            [0, 1, 0, 0, -1, 0, 1, 0, 0],
            [0, 0, 0, 0, 1, 0, 0, 0, 0],
            [0, 0, 0, 1, -1, 0, 0, 0, 1],
            [0, 0, 0, 0, 1, 0, 0, 0, 0],
            [0, 0, 1, 0, -1, 0, 0, 1, 0],
            [0, 0, 0, 0, 1, 0, 0, 0, 0],
        ])
    }

    /// Order 4.
    pub fn order4() -> IntMatrix {
        m([
            [0, 0, 0, 0, 1, 0, 0, 0, 0],
            [0, 0, 1, 0, -1, 0, 0, 1, 0],
            [0, 0, 0, 0, 1, 0, 0, 0, 0],
            [0, 1, 0, 0, -1, 0, 1, 0, 0],
            [0, 0, 0, 0, 1, 0, 0, 0, 0],
            [0, 0, 0, 1, -1, 0, 0, 0, 1],
            [0, 0, 0, 0, 1, 0, 0, 0, 0],
            [1, 0, 0, 0, -1, 1, 0, 0, 0],
            [0, 0, 0, 0, 1, 0, 0, 0, 0],
        ])
    }

    /// Generator `T` of the S3 copy in SA_9.
    pub fn s3_t() -> IntMatrix {
        m([
            [0, 0, 0, 0, 1, 0, 0, 0, 0],
            [0, 0, 0, 1, -1, 0, 0, 0, 1],
            [0, 0, 0, 0, 1, 0, 0, 0, 0],
            [0, 1, 0, 0, -1, 0, 1, 0, 0],
            [0, 0, 0, 0, 1, 0, 0, 0, 0],
            [1, 0, 0, 0, -1, 1, 0, 0, 0],
            [0, 0, 0, 0, 1, 0, 0, 0, 0],
            [0, 0, 1, 0, -1, 0, 0, 1, 0],
            [0, 0, 0, 0, 1, 0, 0, 0, 0],
        ])
    }
}

/// The 5x5 permutation matrix of the 5-cycle (1 2 3 4 5).
pub fn five_cycle_p() -> IntMatrix {
    m([
        [0, 0, 0, 0, 1],
        [1, 0, 0, 0, 0],
        [0, 1, 0, 0, 0],
        [0, 0, 1, 0, 0],
        [0, 0, 0, 1, 0],
    ])
}

/// The 13x13 order-20 matrix obtained by expanding the center of
/// `theta9::order4` with the 5-cycle.
pub fn expanded13() -> IntMatrix {
    m([
        [0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0],
        [0, 0, 1, 0, 0, 0, 0, 0, -1, 0, 0, 1, 0],
        [0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0],
        [0, 1, 0, 0, 0, 0, 0, 0, -1, 0, 1, 0, 0],
        [0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0],
        [0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0],
        [0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0],
        [0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0],
        [0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0],
        [0, 0, 0, 1, 0, 0, 0, 0, -1, 0, 0, 0, 1],
        [0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0],
        [1, 0, 0, 0, 0, 0, 0, 0, -1, 1, 0, 0, 0],
        [0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0],
    ])
}
