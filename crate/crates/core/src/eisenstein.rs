//! Eisenstein triples, the twin map, and the Gilder parameterization.
//!
//! A triple `(a, b, c)` is Eisenstein when the triangle with those sides has
//! a 60° angle opposite `a`, i.e. `a² = b² + c² − bc`. Primitive triples are
//! written with `b > c`; the only exception is the equilateral `(1,1,1)`.
//!
//! Every primitive non-equilateral triple comes from exactly one coprime pair
//! `0 < n < m` with `m ≢ n (mod 3)`, either as the *tree form*
//! `(n²+nm+m², m²+2nm, n²+2nm)` or as its *twin* `(n²+nm+m², m²+2nm, m²−n²)`.

use std::fmt;

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::matrix::{Vec2, Vec3};

/// Side lengths of an integer triangle, `a` opposite the 60° angle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Triple {
    pub a: i128,
    pub b: i128,
    pub c: i128,
}

/// The fraction `n/m` parameterizing a pair of twin triples.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Pair {
    pub n: i128,
    pub m: i128,
}

/// Which Gilder branch a triple belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TwinForm {
    /// `c = n² + 2nm`, the representative generated by the forest.
    TreeForm,
    /// `c = m² − n²`, the twin of a tree-form triple.
    TwinOfTreeForm,
}

/// The two triples produced by one pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct TwinTriples {
    pub tree: Triple,
    pub twin: Triple,
}

impl Triple {
    pub const EQUILATERAL: Triple = Triple { a: 1, b: 1, c: 1 };

    pub const fn new(a: i128, b: i128, c: i128) -> Self {
        Triple { a, b, c }
    }

    pub fn is_equilateral(&self) -> bool {
        *self == Self::EQUILATERAL
    }

    pub fn to_vec(self) -> Vec3 {
        Vec3([self.a, self.b, self.c])
    }

    pub fn from_vec(v: Vec3) -> Self {
        let [a, b, c] = v.0;
        Triple { a, b, c }
    }
}

impl Pair {
    pub const fn new(n: i128, m: i128) -> Self {
        Pair { n, m }
    }

    pub fn to_vec(self) -> Vec2 {
        Vec2([self.n, self.m])
    }

    pub fn from_vec(v: Vec2) -> Self {
        let [n, m] = v.0;
        Pair { n, m }
    }

    /// `0 < n < m`, `gcd(n, m) = 1` and `m − n` not divisible by 3.
    pub fn is_valid(&self) -> bool {
        0 < self.n && self.n < self.m && self.n.gcd(&self.m) == 1 && (self.m - self.n) % 3 != 0
    }

    pub(crate) fn validate(self) -> Result<Self> {
        if self.is_valid() {
            Ok(self)
        } else {
            Err(Error::InvalidPair(self))
        }
    }
}

impl fmt::Display for Triple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.a, self.b, self.c)
    }
}

impl fmt::Display for Pair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.n, self.m)
    }
}

/// Full 256-bit product of two `u128`s as `(high, low)`.
fn wide_mul(x: u128, y: u128) -> (u128, u128) {
    const MASK: u128 = u64::MAX as u128;
    let (x1, x0) = (x >> 64, x & MASK);
    let (y1, y0) = (y >> 64, y & MASK);
    let p00 = x0 * y0;
    let p01 = x0 * y1;
    let p10 = x1 * y0;
    let p11 = x1 * y1;
    let mid = (p00 >> 64) + (p01 & MASK) + (p10 & MASK);
    let lo = (p00 & MASK) | (mid << 64);
    let hi = p11 + (p01 >> 64) + (p10 >> 64) + (mid >> 64);
    (hi, lo)
}

fn wide_add((h1, l1): (u128, u128), (h2, l2): (u128, u128)) -> (u128, u128) {
    let (lo, carry) = l1.overflowing_add(l2);
    (h1 + h2 + carry as u128, lo)
}

/// `a² = b² + c² − bc`, decided exactly for any positive sides.
pub fn is_eisenstein(t: &Triple) -> bool {
    if t.a < 1 || t.b < 1 || t.c < 1 {
        return false;
    }
    let (a, b, c) = (t.a as u128, t.b as u128, t.c as u128);
    // compared as a² + bc = b² + c² so no term goes negative
    wide_add(wide_mul(a, a), wide_mul(b, c)) == wide_add(wide_mul(b, b), wide_mul(c, c))
}

pub fn is_primitive_eisenstein(t: &Triple) -> bool {
    is_eisenstein(t) && t.a.gcd(&t.b).gcd(&t.c) == 1 && (t.b > t.c || t.is_equilateral())
}

/// Classify why `t` fails to be an ordered primitive non-equilateral triple.
pub(crate) fn check_primitive_non_equilateral(t: &Triple) -> Result<()> {
    if !is_eisenstein(t) {
        return Err(Error::NotEisenstein(*t));
    }
    if t.a.gcd(&t.b).gcd(&t.c) != 1 {
        return Err(Error::NotPrimitive(*t));
    }
    if t.is_equilateral() {
        return Err(Error::Equilateral);
    }
    if t.b <= t.c {
        return Err(Error::Unordered(*t));
    }
    Ok(())
}

/// The companion triple `(a, b, b − c)`.
pub fn twin(t: &Triple) -> Result<Triple> {
    match check_primitive_non_equilateral(t) {
        Err(Error::Equilateral) => Err(Error::DegenerateTwin),
        Err(e) => Err(e),
        Ok(()) => Ok(Triple::new(t.a, t.b, t.b - t.c)),
    }
}

/// Tree-form and twin triples of a forest pair.
pub fn triple_from_pair(p: &Pair) -> Result<TwinTriples> {
    let Pair { n, m } = p.validate()?;
    let sq = |x: i128| x.checked_mul(x).ok_or(Error::Overflow);
    let nn = sq(n)?;
    let mm = sq(m)?;
    let nm = n.checked_mul(m).ok_or(Error::Overflow)?;
    let nm2 = nm.checked_mul(2).ok_or(Error::Overflow)?;
    let sum = |x: i128, y: i128| x.checked_add(y).ok_or(Error::Overflow);

    let a = sum(sum(nn, nm)?, mm)?;
    let b = sum(mm, nm2)?;
    let c_tree = sum(nn, nm2)?;
    let c_twin = mm - nn;
    Ok(TwinTriples {
        tree: Triple::new(a, b, c_tree),
        twin: Triple::new(a, b, c_twin),
    })
}

/// Recover the unique pair behind a primitive triple and which branch it is on.
pub fn pair_from_triple(t: &Triple) -> Result<(Pair, TwinForm)> {
    check_primitive_non_equilateral(t)?;
    if let Some(p) = tree_pair_candidate(t) {
        return Ok((p, TwinForm::TreeForm));
    }
    let other = twin(t)?;
    if let Some(p) = tree_pair_candidate(&other) {
        return Ok((p, TwinForm::TwinOfTreeForm));
    }
    Err(Error::Invariant(
        "neither a triple nor its twin reconstructs from a pair",
    ))
}

/// For tree form `a − c = m(m − n)` and `b − a = n(m − n)`, so the reduced
/// ratio `(a − c)/(b − a)` is `m/n`. Accept it only if it reproduces `t`.
fn tree_pair_candidate(t: &Triple) -> Option<Pair> {
    let num = t.a - t.c;
    let den = t.b - t.a;
    if num <= 0 || den <= 0 {
        return None;
    }
    let g = num.gcd(&den);
    let p = Pair::new(den / g, num / g);
    match triple_from_pair(&p) {
        Ok(tt) if tt.tree == *t => Some(p),
        _ => None,
    }
}
