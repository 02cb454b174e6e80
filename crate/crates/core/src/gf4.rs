//! GF(4) scalars and bit-packed vectors.
//!
//! GF(4) = {0, 1, w, W} with W = w^2 = w + 1. A length-n vector is stored as
//! two parallel bitstrings `a`, `b` with coordinate i equal to a_i + w*b_i,
//! so vector addition is a pair of XORs and the symbol maps used throughout
//! (scaling by w or W, conjugation) are two or three word operations.
//!
//! Addition table (characteristic 2, x + x = 0):
//!
//! ```text
//!   +  | 0  1  w  W          *  | 0  1  w  W
//!   ---+------------         ---+------------
//!   0  | 0  1  w  W          0  | 0  0  0  0
//!   1  | 1  0  W  w          1  | 0  1  w  W
//!   w  | w  W  0  1          w  | 0  w  W  1
//!   W  | W  w  1  0          W  | 0  W  1  w
//! ```

use crate::error::{Error, Result};
use std::fmt;

/// A GF(4) scalar. `Omega` is w, `OmegaSq` is W = w + 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GF4 {
    Zero,
    One,
    Omega,
    OmegaSq,
}

impl GF4 {
    pub const ALL: [GF4; 4] = [GF4::Zero, GF4::One, GF4::Omega, GF4::OmegaSq];

    /// Builds the element a + w*b from its two bits.
    pub fn from_bits(a: bool, b: bool) -> GF4 {
        match (a, b) {
            (false, false) => GF4::Zero,
            (true, false) => GF4::One,
            (false, true) => GF4::Omega,
            (true, true) => GF4::OmegaSq,
        }
    }

    /// The bits (a, b) with self = a + w*b.
    pub fn bits(self) -> (bool, bool) {
        match self {
            GF4::Zero => (false, false),
            GF4::One => (true, false),
            GF4::Omega => (false, true),
            GF4::OmegaSq => (true, true),
        }
    }

    /// Conjugation x -> x^2, the nontrivial field automorphism.
    pub fn conj(self) -> GF4 {
        match self {
            GF4::Omega => GF4::OmegaSq,
            GF4::OmegaSq => GF4::Omega,
            x => x,
        }
    }

    /// Trace to GF(2): tr(x) = x + x^2. Zero on {0, 1}, one on {w, W}.
    pub fn trace(self) -> bool {
        matches!(self, GF4::Omega | GF4::OmegaSq)
    }

    pub fn to_char(self) -> char {
        match self {
            GF4::Zero => '0',
            GF4::One => '1',
            GF4::Omega => 'w',
            GF4::OmegaSq => 'W',
        }
    }

    pub fn from_char(c: char) -> Result<GF4> {
        match c {
            '0' => Ok(GF4::Zero),
            '1' => Ok(GF4::One),
            'w' => Ok(GF4::Omega),
            'W' => Ok(GF4::OmegaSq),
            other => Err(Error::GeneratorText(format!(
                "invalid symbol '{other}' (expected one of 0, 1, w, W)"
            ))),
        }
    }
}

impl std::ops::Add for GF4 {
    type Output = GF4;
    fn add(self, rhs: GF4) -> GF4 {
        let (a, b) = self.bits();
        let (c, d) = rhs.bits();
        GF4::from_bits(a ^ c, b ^ d)
    }
}

impl std::ops::Mul for GF4 {
    type Output = GF4;
    fn mul(self, rhs: GF4) -> GF4 {
        // (a + wb)(c + wd) = ac + bd + w(ad + bc + bd), using w^2 = w + 1.
        let (a, b) = self.bits();
        let (c, d) = rhs.bits();
        GF4::from_bits((a & c) ^ (b & d), (a & d) ^ (b & c) ^ (b & d))
    }
}

/// A GF(4) vector of length n <= 64, packed as two bit-planes.
///
/// Coordinate i is `a` bit i plus w times `b` bit i. Bits at or above `n`
/// are kept zero, which makes equality, hashing and ordering structural.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GF4Vector {
    n: u8,
    a: u64,
    b: u64,
}

impl GF4Vector {
    pub const MAX_LEN: usize = 64;

    pub fn zero(n: usize) -> Result<GF4Vector> {
        if n > Self::MAX_LEN {
            return Err(Error::TooLong(n));
        }
        Ok(GF4Vector {
            n: n as u8,
            a: 0,
            b: 0,
        })
    }

    /// Builds a vector from raw bit-planes; bits above n must be clear.
    pub fn from_planes(n: usize, a: u64, b: u64) -> Result<GF4Vector> {
        if n > Self::MAX_LEN {
            return Err(Error::TooLong(n));
        }
        let mask = Self::len_mask(n);
        if a & !mask != 0 || b & !mask != 0 {
            return Err(Error::InvalidInput(format!(
                "bit-plane has bits set beyond length {n}"
            )));
        }
        Ok(GF4Vector { n: n as u8, a, b })
    }

    pub fn from_symbols(symbols: &[GF4]) -> Result<GF4Vector> {
        let mut v = GF4Vector::zero(symbols.len())?;
        for (i, &s) in symbols.iter().enumerate() {
            v.set(i, s);
        }
        Ok(v)
    }

    fn len_mask(n: usize) -> u64 {
        if n == 64 {
            u64::MAX
        } else {
            (1u64 << n) - 1
        }
    }

    pub fn len(&self) -> usize {
        self.n as usize
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn is_zero(&self) -> bool {
        self.a == 0 && self.b == 0
    }

    /// The (a, b) bit-planes.
    pub fn planes(&self) -> (u64, u64) {
        (self.a, self.b)
    }

    pub fn get(&self, i: usize) -> GF4 {
        debug_assert!(i < self.len());
        GF4::from_bits(self.a >> i & 1 != 0, self.b >> i & 1 != 0)
    }

    pub fn set(&mut self, i: usize, x: GF4) {
        debug_assert!(i < self.len());
        let (a, b) = x.bits();
        self.a = self.a & !(1 << i) | (a as u64) << i;
        self.b = self.b & !(1 << i) | (b as u64) << i;
    }

    pub fn iter(&self) -> impl Iterator<Item = GF4> + '_ {
        (0..self.len()).map(|i| self.get(i))
    }

    pub fn add(&self, rhs: &GF4Vector) -> Result<GF4Vector> {
        if self.n != rhs.n {
            return Err(Error::LengthMismatch(self.len(), rhs.len()));
        }
        Ok(GF4Vector {
            n: self.n,
            a: self.a ^ rhs.a,
            b: self.b ^ rhs.b,
        })
    }

    /// Number of nonzero coordinates.
    pub fn weight(&self) -> usize {
        (self.a | self.b).count_ones() as usize
    }

    /// Scales every coordinate by a fixed nonzero scalar.
    pub fn scale(&self, s: GF4) -> GF4Vector {
        let (a, b) = (self.a, self.b);
        let (a2, b2) = match s {
            GF4::Zero => (0, 0),
            GF4::One => (a, b),
            // w * (a + wb) = b + w(a + b)
            GF4::Omega => (b, a ^ b),
            // W * (a + wb) = (a + b) + wa
            GF4::OmegaSq => (a ^ b, a),
        };
        GF4Vector {
            n: self.n,
            a: a2,
            b: b2,
        }
    }

    /// Conjugates every coordinate selected by `mask`: x -> x^2 there.
    pub fn conj_mask(&self, mask: u64) -> GF4Vector {
        // (a, b) -> (a ^ b, b) flips 1 <-> nothing, w <-> W on masked bits.
        GF4Vector {
            n: self.n,
            a: self.a ^ (self.b & mask),
            b: self.b,
        }
    }

    /// Conjugates every coordinate.
    pub fn conj(&self) -> GF4Vector {
        self.conj_mask(Self::len_mask(self.len()))
    }

    /// Hermitian trace inner product: sum of tr(u_i * conj(v_i)) over GF(2).
    ///
    /// Bit identity: with u = (A, B) and v = (C, D) this is the parity of
    /// (A AND D) XOR (B AND C); verified exhaustively against the field
    /// formula in the tests.
    pub fn trace_inner_product(&self, rhs: &GF4Vector) -> Result<bool> {
        if self.n != rhs.n {
            return Err(Error::LengthMismatch(self.len(), rhs.len()));
        }
        Ok(((self.a & rhs.b) ^ (self.b & rhs.a)).count_ones() % 2 == 1)
    }
}

impl fmt::Display for GF4Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for x in self.iter() {
            write!(f, "{}", x.to_char())?;
        }
        Ok(())
    }
}

impl fmt::Debug for GF4Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl std::str::FromStr for GF4Vector {
    type Err = Error;
    fn from_str(s: &str) -> Result<GF4Vector> {
        let symbols: Vec<GF4> = s.chars().map(GF4::from_char).collect::<Result<_>>()?;
        GF4Vector::from_symbols(&symbols)
    }
}
