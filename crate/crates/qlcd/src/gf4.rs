//! The field with four elements.
//!
//! `GF(4) = {0, 1, ω, ϖ}` with `ϖ = 1 + ω = ω²` and `ω³ = 1`.  Elements are
//! stored as two bits (`0, 1, 2, 3`), the same digits used by the `qmat`
//! file format.  Addition is carry-less (XOR of the two-bit codes), so the
//! hot enumeration loops can add whole packed rows with machine XORs.
//! The conjugation is the Frobenius map `x ↦ x²`, which swaps ω and ϖ.

use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Mul, MulAssign};

/// An element of GF(4), stored as a digit in `0..=3` (`2 = ω`, `3 = ϖ`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Gf4(u8);

const MUL_TABLE: [[u8; 4]; 4] = [
    [0, 0, 0, 0],
    [0, 1, 2, 3],
    [0, 2, 3, 1], // ω·ω = ϖ, ω·ϖ = 1
    [0, 3, 1, 2],
];

impl Gf4 {
    pub const ZERO: Gf4 = Gf4(0);
    pub const ONE: Gf4 = Gf4(1);
    pub const OMEGA: Gf4 = Gf4(2);
    pub const OMEGABAR: Gf4 = Gf4(3);

    /// All four elements in digit order.
    pub const ALL: [Gf4; 4] = [Gf4(0), Gf4(1), Gf4(2), Gf4(3)];

    /// Builds an element from its digit; values are taken mod 4.
    #[inline]
    pub const fn from_digit(d: u8) -> Gf4 {
        Gf4(d & 3)
    }

    #[inline]
    pub const fn digit(self) -> u8 {
        self.0
    }

    #[inline]
    pub const fn is_zero(self) -> bool {
        self.0 == 0
    }

    /// Frobenius conjugation `x ↦ x²`; fixes 0 and 1, swaps ω and ϖ.
    #[inline]
    pub const fn conj(self) -> Gf4 {
        // digit 2 <-> 3
        Gf4([0u8, 1, 3, 2][self.0 as usize])
    }

    /// Multiplicative inverse; `None` for zero.
    #[inline]
    pub const fn inv(self) -> Option<Gf4> {
        match self.0 {
            0 => None,
            1 => Some(Gf4(1)),
            2 => Some(Gf4(3)),
            _ => Some(Gf4(2)),
        }
    }
}

impl Add for Gf4 {
    type Output = Gf4;
    #[inline]
    fn add(self, rhs: Gf4) -> Gf4 {
        // characteristic 2: addition is xor of the two-bit codes
        Gf4(self.0 ^ rhs.0)
    }
}

impl AddAssign for Gf4 {
    #[inline]
    fn add_assign(&mut self, rhs: Gf4) {
        self.0 ^= rhs.0;
    }
}

impl Mul for Gf4 {
    type Output = Gf4;
    #[inline]
    fn mul(self, rhs: Gf4) -> Gf4 {
        Gf4(MUL_TABLE[self.0 as usize][rhs.0 as usize])
    }
}

impl MulAssign for Gf4 {
    #[inline]
    fn mul_assign(&mut self, rhs: Gf4) {
        *self = *self * rhs;
    }
}

impl Sum for Gf4 {
    fn sum<I: Iterator<Item = Gf4>>(iter: I) -> Gf4 {
        iter.fold(Gf4::ZERO, |a, b| a + b)
    }
}

impl fmt::Display for Gf4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}
