//! Multiplication tables of the commutative embedding algebras.
//!
//! Entry `[i][j] = (k, s)` means `e_i e_j = s * e_k`. Both algebras are
//! generated by commuting elements squaring to one, so every sign is `+1`;
//! the sign column is kept so that the product routine does not depend on
//! that fact.

use crate::number::Number;

pub(crate) type Table<const D: usize> = [[(usize, i8); D]; D];

/// Basis `(1, i1, i2, i12)`.
pub(crate) const TABLE4: Table<4> = [
    [(0, 1), (1, 1), (2, 1), (3, 1)],
    [(1, 1), (0, 1), (3, 1), (2, 1)],
    [(2, 1), (3, 1), (0, 1), (1, 1)],
    [(3, 1), (2, 1), (1, 1), (0, 1)],
];

/// Generator bitmask of each basis element of the 4-dimensional algebra.
pub(crate) const BLADES4: [u8; 4] = [0b00, 0b01, 0b10, 0b11];

/// Basis `(1, i1, i2, i3, i1i2, i1i3, i2i3, i1i2i3)`.
pub(crate) const TABLE8: Table<8> = [
    [(0, 1), (1, 1), (2, 1), (3, 1), (4, 1), (5, 1), (6, 1), (7, 1)],
    [(1, 1), (0, 1), (4, 1), (5, 1), (2, 1), (3, 1), (7, 1), (6, 1)],
    [(2, 1), (4, 1), (0, 1), (6, 1), (1, 1), (7, 1), (3, 1), (5, 1)],
    [(3, 1), (5, 1), (6, 1), (0, 1), (7, 1), (1, 1), (2, 1), (4, 1)],
    [(4, 1), (2, 1), (1, 1), (7, 1), (0, 1), (6, 1), (5, 1), (3, 1)],
    [(5, 1), (3, 1), (7, 1), (1, 1), (6, 1), (0, 1), (4, 1), (2, 1)],
    [(6, 1), (7, 1), (3, 1), (2, 1), (5, 1), (4, 1), (0, 1), (1, 1)],
    [(7, 1), (6, 1), (5, 1), (4, 1), (3, 1), (2, 1), (1, 1), (0, 1)],
];

pub(crate) const BLADES8: [u8; 8] = [0b000, 0b001, 0b010, 0b100, 0b011, 0b101, 0b110, 0b111];

pub(crate) fn table_product<N: Number, const D: usize>(x: &[N; D], y: &[N; D], table: &Table<D>) -> [N; D] {
    let mut out: [N; D] = std::array::from_fn(|_| N::zero());
    for (i, xi) in x.iter().enumerate() {
        if xi.is_zero() {
            continue;
        }
        for (j, yj) in y.iter().enumerate() {
            let (k, sign) = table[i][j];
            let term = xi.clone() * yj.clone();
            out[k] = if sign < 0 {
                out[k].clone() - term
            } else {
                out[k].clone() + term
            };
        }
    }
    out
}
