//! Sparse multivariate polynomials over the two-element field and the
//! ideal-membership admissibility route.
//!
//! A polynomial is a set of exponent vectors; insertion cancels in
//! pairs, multiplication distributes with symmetric-difference merge,
//! and squaring is the Frobenius (every exponent doubles, term count
//! unchanged), which binary exponentiation exploits.
//!
//! The invariant polynomial of rank `k` is the permutation expansion
//! assigning the exponents `2^{k-1}, 2^{k-2}, ..., 1` to the variables
//! in every order; it equals the product of all nonzero linear forms. If the `j`-th power keeps
//! a term with every exponent at most `d`, so that membership in the
//! ideal generated by the `x_i^{d+1}` fails, the triple `(d, j, k)` is
//! admissible. Reduction modulo that ideal is plain monomial
//! filtering; nothing fancier is needed for a monomial ideal.

use crate::Error;
use alloc::collections::BTreeSet;
use core::fmt;

/// Default cap on monomial products per multiplication step.
pub const DEFAULT_MONOMIAL_BUDGET: u64 = 10_000_000;

/// Most variables a polynomial can carry.
pub const MAX_VARS: usize = 6;

/// Exponent vector, padded with zeros beyond the polynomial's rank.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial {
    exponents: [u16; MAX_VARS],
}

impl Monomial {
    pub fn new(exponents: &[u16]) -> Self {
        assert!(exponents.len() <= MAX_VARS);
        let mut padded = [0u16; MAX_VARS];
        padded[..exponents.len()].copy_from_slice(exponents);
        Self { exponents: padded }
    }

    pub fn exponent(&self, var: usize) -> u16 {
        self.exponents[var]
    }

    pub fn exponents(&self, vars: usize) -> &[u16] {
        &self.exponents[..vars]
    }

    fn product(&self, rhs: &Self) -> Self {
        let mut out = [0u16; MAX_VARS];
        for (o, (a, b)) in out
            .iter_mut()
            .zip(self.exponents.iter().zip(rhs.exponents.iter()))
        {
            *o = a.checked_add(*b).expect("exponent overflow");
        }
        Self { exponents: out }
    }

    fn doubled(&self) -> Self {
        let mut out = [0u16; MAX_VARS];
        for (o, a) in out.iter_mut().zip(self.exponents.iter()) {
            *o = a.checked_mul(2).expect("exponent overflow");
        }
        Self { exponents: out }
    }

    fn max_exponent(&self) -> u16 {
        self.exponents.iter().copied().max().unwrap()
    }
}

/// Polynomial over the two-element field with set semantics: a
/// monomial is present exactly when its coefficient is 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SparsePolyF2 {
    vars: usize,
    monomials: BTreeSet<Monomial>,
}

impl SparsePolyF2 {
    pub fn zero(vars: usize) -> Self {
        assert!((1..=MAX_VARS).contains(&vars));
        Self {
            vars,
            monomials: BTreeSet::new(),
        }
    }

    pub fn one(vars: usize) -> Self {
        let mut p = Self::zero(vars);
        p.toggle(Monomial::new(&[]));
        p
    }

    /// The single variable `x_{var}` (0-based).
    pub fn variable(vars: usize, var: usize) -> Self {
        assert!(var < vars);
        let mut exp = [0u16; MAX_VARS];
        exp[var] = 1;
        let mut p = Self::zero(vars);
        p.toggle(Monomial { exponents: exp });
        p
    }

    pub fn from_monomials<I: IntoIterator<Item = Monomial>>(vars: usize, monomials: I) -> Self {
        let mut p = Self::zero(vars);
        for m in monomials {
            p.toggle(m);
        }
        p
    }

    pub fn vars(&self) -> usize {
        self.vars
    }

    pub fn term_count(&self) -> usize {
        self.monomials.len()
    }

    pub fn is_zero(&self) -> bool {
        self.monomials.is_empty()
    }

    pub fn monomials(&self) -> impl Iterator<Item = &Monomial> {
        self.monomials.iter()
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.monomials.contains(m)
    }

    /// Characteristic-2 insertion: duplicates cancel pairwise.
    pub fn toggle(&mut self, m: Monomial) {
        if !self.monomials.remove(&m) {
            self.monomials.insert(m);
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        assert_eq!(self.vars, rhs.vars);
        let mut out = self.clone();
        for m in &rhs.monomials {
            out.toggle(*m);
        }
        out
    }

    /// Exact product with pairwise cancellation. The `budget` caps the
    /// number of monomial products formed; exceeding it is an explicit
    /// resource error, never a silent truncation.
    pub fn mul(&self, rhs: &Self, budget: u64) -> Result<Self, Error> {
        assert_eq!(self.vars, rhs.vars);
        let products = self.monomials.len() as u64 * rhs.monomials.len() as u64;
        if products > budget {
            return Err(Error::MonomialBudgetExceeded { budget });
        }
        let mut out = Self::zero(self.vars);
        for a in &self.monomials {
            for b in &rhs.monomials {
                out.toggle(a.product(b));
            }
        }
        Ok(out)
    }

    /// Frobenius square: doubles every exponent vector; no cross terms
    /// survive in characteristic 2, so the term count is unchanged.
    pub fn squared(&self) -> Self {
        Self {
            vars: self.vars,
            monomials: self.monomials.iter().map(Monomial::doubled).collect(),
        }
    }

    /// Binary exponentiation riding on the Frobenius square.
    pub fn pow(&self, e: u32, budget: u64) -> Result<Self, Error> {
        if e == 0 {
            return Ok(Self::one(self.vars));
        }
        let mut acc = self.clone();
        for bit in (0..31 - e.leading_zeros()).rev() {
            acc = acc.squared();
            if e >> bit & 1 == 1 {
                acc = acc.mul(self, budget)?;
            }
        }
        Ok(acc)
    }

    /// Discards every monomial lying in the ideal generated by the
    /// `x_i^{d+1}`, i.e. keeps exactly the monomials with all exponents
    /// at most `d`.
    pub fn reduced_mod_power_ideal(&self, d: u16) -> Self {
        Self {
            vars: self.vars,
            monomials: self
                .monomials
                .iter()
                .filter(|m| m.max_exponent() <= d)
                .copied()
                .collect(),
        }
    }

    /// Smallest `d` such that some monomial survives reduction: the
    /// minimum over monomials of the maximum exponent.
    pub fn min_max_exponent(&self) -> Option<u16> {
        self.monomials.iter().map(Monomial::max_exponent).min()
    }
}

impl fmt::Display for SparsePolyF2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, m) in self.monomials.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            let mut wrote = false;
            for (var, &e) in m.exponents(self.vars).iter().enumerate() {
                if e == 0 {
                    continue;
                }
                if wrote {
                    f.write_str("*")?;
                }
                write!(f, "x{}", var + 1)?;
                if e > 1 {
                    write!(f, "^{e}")?;
                }
                wrote = true;
            }
            if !wrote {
                f.write_str("1")?;
            }
        }
        Ok(())
    }
}

/// The rank-`k` invariant polynomial as its `k!`-term permutation
/// expansion: exponents `2^{k-1}, ..., 2, 1` distributed over the
/// variables in every order. Distinct permutations give distinct
/// exponent vectors, so nothing cancels.
pub fn dickson(k: usize) -> SparsePolyF2 {
    assert!((1..=MAX_VARS).contains(&k));
    let mut poly = SparsePolyF2::zero(k);
    let mut exp = [0u16; MAX_VARS];
    let mut used = [false; MAX_VARS];
    fill_slot(k, 0, &mut exp, &mut used, &mut poly);
    poly
}

/// Assigns the exponent `2^{k-1-slot}` to every unused variable in
/// turn; each complete assignment is one permutation's monomial.
fn fill_slot(
    k: usize,
    slot: usize,
    exp: &mut [u16; MAX_VARS],
    used: &mut [bool; MAX_VARS],
    poly: &mut SparsePolyF2,
) {
    if slot == k {
        poly.toggle(Monomial { exponents: *exp });
        return;
    }
    for var in 0..k {
        if !used[var] {
            used[var] = true;
            exp[var] = 1 << (k - 1 - slot);
            fill_slot(k, slot + 1, exp, used, poly);
            exp[var] = 0;
            used[var] = false;
        }
    }
}

/// The same polynomial as the expanded product of all nonzero linear
/// forms; an independent construction used to cross-check `dickson`.
pub fn dickson_product_form(k: usize, budget: u64) -> Result<SparsePolyF2, Error> {
    assert!((1..=MAX_VARS).contains(&k));
    let mut poly = SparsePolyF2::one(k);
    for subset in 1u32..1 << k {
        let form = SparsePolyF2::from_monomials(
            k,
            (0..k).filter(|&v| subset >> v & 1 == 1).map(|v| {
                let mut exp = [0u16; MAX_VARS];
                exp[v] = 1;
                Monomial { exponents: exp }
            }),
        );
        poly = poly.mul(&form, budget)?;
    }
    Ok(poly)
}

/// Ideal-membership admissibility test: `(d, j, k)` is admissible when
/// the `j`-th power of the rank-`k` invariant polynomial keeps a term
/// outside the ideal generated by the `x_i^{d+1}`. A `false` certifies
/// nothing.
pub fn admissible_fh(d: u32, j: u32, k: u32, budget: u64) -> Result<bool, Error> {
    assert!(d >= 1 && j >= 1 && k >= 1);
    let power = dickson(k as usize).pow(j, budget)?;
    Ok(power
        .min_max_exponent()
        .is_some_and(|least| u32::from(least) <= d))
}

/// The least `d` the ideal-membership test certifies for `(j, k)`:
/// the smallest maximum exponent over the terms of the `j`-th power.
pub fn minimal_d_star(j: u32, k: u32, budget: u64) -> Result<u32, Error> {
    assert!(j >= 1 && k >= 1);
    let power = dickson(k as usize).pow(j, budget)?;
    Ok(u32::from(
        power
            .min_max_exponent()
            .expect("powers of a nonzero polynomial are nonzero"),
    ))
}

/// Closed-form upper bound `Delta(2^q + r, k) <= 2^{k+q-1} + r`, where
/// `j = 2^q + r` with `0 <= r < 2^q`.
pub fn index_formula_bound(j: u64, k: u32) -> u64 {
    assert!(j >= 1 && k >= 1);
    let q = 63 - j.leading_zeros() as u64;
    let r = j - (1 << q);
    (1u64 << (k as u64 + q - 1)) + r
}

/// Moment-curve lower bound `Delta(j, k) >= ceil(j (2^k - 1) / k)`.
pub fn lower_bound(j: u64, k: u32) -> u64 {
    assert!(j >= 1 && k >= 1);
    let numerator = j * ((1u64 << k) - 1);
    numerator.div_ceil(k as u64)
}
