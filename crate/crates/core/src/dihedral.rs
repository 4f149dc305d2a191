//! The symmetry group of an ordered pair of oriented hyperplanes.
//!
//! The group has order 8 and is generated by three involutions: `a`
//! reverses the orientation of the first hyperplane, `b` the second,
//! and `g` exchanges the two hyperplanes. Exchanging conjugates the
//! orientation flips into each other, which is the whole semidirect
//! twist: `a·g = g·b` and `b·g = g·a`.
//!
//! Composition is written with the **right factor acting first**, so
//! `compose(g, a)` means "flip the first orientation, then swap".
//! Every downstream module cites this convention.
//!
//! The module also hard-codes the two first-homology groups that carry
//! obstruction values: `Z/2 ⊕ Z/2` with basis `{X, Y}` for trivial
//! integer coefficients, and `Z/4` generated by `Xca` for the twisted
//! ones, with `Xab = 2·Xca` the unique element of order 2.

use crate::Error;
use alloc::vec::Vec;
use core::fmt;

/// One of the eight symmetries of an oriented hyperplane pair.
///
/// The canonical decomposition is "swap first, then flip": the element
/// `(flip1, flip2, swap)` conjugates/swaps when `swap` is set and then
/// negates the first/second orientation sign per the flip bits.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct DihedralElement {
    /// Negate the first orientation sign (after any swap).
    pub flip1: bool,
    /// Negate the second orientation sign (after any swap).
    pub flip2: bool,
    /// Exchange the two hyperplanes (conjugate letters, swap signs).
    pub swap: bool,
}

impl DihedralElement {
    pub const IDENTITY: Self = Self::new(false, false, false);
    /// Reverses the first orientation ("a", the presentation's first
    /// reflection).
    pub const FLIP1: Self = Self::new(true, false, false);
    /// Reverses the second orientation ("b").
    pub const FLIP2: Self = Self::new(false, true, false);
    /// Exchanges the two hyperplanes ("g").
    pub const SWAP: Self = Self::new(false, false, true);
    /// The 90-degree rotation `g∘a` (flip first, then swap); order 4.
    pub const ROTATION: Self = Self::compose(Self::SWAP, Self::FLIP1);

    pub const fn new(flip1: bool, flip2: bool, swap: bool) -> Self {
        Self { flip1, flip2, swap }
    }

    /// All eight elements in canonical token order
    /// `e, a, b, ab, g, ga, gb, gab`.
    pub fn all() -> [Self; 8] {
        let mut out = [Self::IDENTITY; 8];
        for (i, e) in out.iter_mut().enumerate() {
            *e = Self::from_index(i as u8);
        }
        out
    }

    /// Composition with the right factor acting first: the result acts
    /// as "apply `rhs`, then `self`" on any sign-pair or word state.
    pub const fn compose(self, rhs: Self) -> Self {
        // Pushing rhs's flips past self's swap exchanges them.
        let (r1, r2) = if self.swap {
            (rhs.flip2, rhs.flip1)
        } else {
            (rhs.flip1, rhs.flip2)
        };
        Self::new(self.flip1 ^ r1, self.flip2 ^ r2, self.swap ^ rhs.swap)
    }

    pub const fn inverse(self) -> Self {
        // Involution unless it is one of the two order-4 rotations,
        // whose inverse is the opposite rotation.
        if self.swap && (self.flip1 ^ self.flip2) {
            Self::new(self.flip2, self.flip1, true)
        } else {
            self
        }
    }

    pub fn order(self) -> u32 {
        if self == Self::IDENTITY {
            1
        } else if self.compose(self) == Self::IDENTITY {
            2
        } else {
            4
        }
    }

    /// Index in canonical token order; also the `Ord` key.
    pub const fn index(self) -> u8 {
        // e a b ab | g ga gb gab. Under "swap first, then flip", the
        // swap-half tokens carry the conjugated flip bits: ga = g∘a has
        // flip2 set, gb = g∘b has flip1 set.
        let (x, y) = if self.swap {
            (self.flip2, self.flip1)
        } else {
            (self.flip1, self.flip2)
        };
        (self.swap as u8) << 2 | (y as u8) << 1 | x as u8
    }

    pub const fn from_index(i: u8) -> Self {
        let swap = i & 4 != 0;
        let (x, y) = (i & 1 != 0, i & 2 != 0);
        if swap {
            Self::new(y, x, true)
        } else {
            Self::new(x, y, false)
        }
    }

    /// Canonical short token, `e`, `a`, `b`, `ab`, `g`, `ga`, `gb` or
    /// `gab`; letters compose right-to-left like the group notation, so
    /// `ga` is "flip first orientation, then swap".
    pub const fn token(self) -> &'static str {
        const TOKENS: [&str; 8] = ["e", "a", "b", "ab", "g", "ga", "gb", "gab"];
        TOKENS[self.index() as usize]
    }

    pub fn from_token(token: &str) -> Result<Self, Error> {
        const TOKENS: [&str; 8] = ["e", "a", "b", "ab", "g", "ga", "gb", "gab"];
        TOKENS
            .iter()
            .position(|t| *t == token)
            .map(|i| Self::from_index(i as u8))
            .ok_or(Error::Parse("unknown group element token"))
    }

    /// Image in the abelianization `Z/2 ⊕ Z/2`: the `X` coordinate is
    /// the flip parity, the `Y` coordinate the swap bit. Both
    /// orientation reversals map to `X`, the swap to `Y`, the four
    /// rotatory reflections to `Z = X + Y`, and `e`, `ab` to zero.
    pub const fn abelianized(self) -> TrivialClass {
        TrivialClass {
            x: self.flip1 ^ self.flip2,
            y: self.swap,
        }
    }
}

impl PartialOrd for DihedralElement {
    fn partial_cmp(&self, other: &Self) -> Option<core::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for DihedralElement {
    fn cmp(&self, other: &Self) -> core::cmp::Ordering {
        self.index().cmp(&other.index())
    }
}

impl fmt::Display for DihedralElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.token())
    }
}

/// A subgroup of the order-8 group, stored as a sorted element list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subgroup {
    elements: Vec<DihedralElement>,
}

impl Subgroup {
    /// Smallest subgroup containing the generators (the identity for an
    /// empty generating set).
    pub fn generated(generators: &[DihedralElement]) -> Self {
        let mut members = [false; 8];
        members[DihedralElement::IDENTITY.index() as usize] = true;
        loop {
            let mut grew = false;
            for i in 0..8u8 {
                if !members[i as usize] {
                    continue;
                }
                let x = DihedralElement::from_index(i);
                for &g in generators {
                    let y = g.compose(x);
                    if !members[y.index() as usize] {
                        members[y.index() as usize] = true;
                        grew = true;
                    }
                }
            }
            if !grew {
                break;
            }
        }
        let elements = (0..8u8)
            .filter(|&i| members[i as usize])
            .map(DihedralElement::from_index)
            .collect();
        Self { elements }
    }

    /// Builds a subgroup from an arbitrary element set, verifying
    /// closure under composition and inverse.
    pub fn from_elements(elements: &[DihedralElement]) -> Result<Self, Error> {
        let sub = Self::generated(elements);
        if sub.order() == elements.len() {
            Ok(sub)
        } else {
            Err(Error::Inconsistency("element set is not a subgroup"))
        }
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, g: DihedralElement) -> bool {
        self.elements.binary_search(&g).is_ok()
    }

    pub fn elements(&self) -> &[DihedralElement] {
        &self.elements
    }

    /// Conjugate subgroup `h S h⁻¹`.
    pub fn conjugated(&self, h: DihedralElement) -> Self {
        let mut elements: Vec<_> = self
            .elements
            .iter()
            .map(|&s| h.compose(s).compose(h.inverse()))
            .collect();
        elements.sort_unstable();
        Self { elements }
    }
}

impl fmt::Display for Subgroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, e) in self.elements.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{e}")?;
        }
        f.write_str("}")
    }
}

/// Element of the first homology group with trivial integer
/// coefficients, `Z/2 ⊕ Z/2` in the basis `{X, Y}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, PartialOrd, Ord, Hash)]
pub struct TrivialClass {
    pub x: bool,
    pub y: bool,
}

impl TrivialClass {
    pub const ZERO: Self = Self { x: false, y: false };
    pub const X: Self = Self { x: true, y: false };
    pub const Y: Self = Self { x: false, y: true };
    /// `Z = X + Y`.
    pub const Z: Self = Self { x: true, y: true };

    pub const fn is_zero(self) -> bool {
        !self.x && !self.y
    }

    pub const fn token(self) -> &'static str {
        match (self.x, self.y) {
            (false, false) => "0",
            (true, false) => "X",
            (false, true) => "Y",
            (true, true) => "Z",
        }
    }
}

impl core::ops::Add for TrivialClass {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Self {
            x: self.x ^ rhs.x,
            y: self.y ^ rhs.y,
        }
    }
}

impl core::iter::Sum for TrivialClass {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::ZERO, |acc, c| acc + c)
    }
}

impl fmt::Display for TrivialClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.token())
    }
}

/// Element of the first homology group with twisted integer
/// coefficients, `Z/4` in units of the generator `Xca`.
///
/// `Xab` is the residue 2, so `Xab + Xab = 0`; `-Xca` is the residue 3.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, PartialOrd, Ord, Hash)]
pub struct TwistedClass(u8);

impl TwistedClass {
    pub const ZERO: Self = Self(0);
    pub const XCA: Self = Self(1);
    /// The third cycle class coincides with `XCA` in homology.
    pub const XBC: Self = Self(1);
    pub const XAB: Self = Self(2);
    pub const NEG_XCA: Self = Self(3);

    pub const fn new(residue: i64) -> Self {
        Self(residue.rem_euclid(4) as u8)
    }

    /// Residue in `0..4`, units of `Xca`.
    pub const fn residue(self) -> u8 {
        self.0
    }

    pub const fn is_zero(self) -> bool {
        self.0 == 0
    }

    pub const fn token(self) -> &'static str {
        match self.0 {
            0 => "0",
            1 => "+Xca",
            2 => "Xab",
            _ => "-Xca",
        }
    }
}

impl core::ops::Add for TwistedClass {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Self((self.0 + rhs.0) % 4)
    }
}

impl core::ops::Neg for TwistedClass {
    type Output = Self;
    fn neg(self) -> Self {
        Self((4 - self.0) % 4)
    }
}

impl core::iter::Sum for TwistedClass {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::ZERO, |acc, c| acc + c)
    }
}

impl fmt::Display for TwistedClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.token())
    }
}

/// Obstruction value in whichever coefficient module the case selects.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum HomologyClass {
    Trivial(TrivialClass),
    Twisted(TwistedClass),
}

impl HomologyClass {
    pub fn is_zero(self) -> bool {
        match self {
            HomologyClass::Trivial(c) => c.is_zero(),
            HomologyClass::Twisted(c) => c.is_zero(),
        }
    }

    pub fn token(self) -> &'static str {
        match self {
            HomologyClass::Trivial(c) => c.token(),
            HomologyClass::Twisted(c) => c.token(),
        }
    }
}

impl fmt::Display for HomologyClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.token())
    }
}
