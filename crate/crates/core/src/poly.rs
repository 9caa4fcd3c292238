//! Sparse multivariate polynomials with arbitrary-precision integer
//! coefficients, over a fixed catalogue of variable families, plus truncated
//! power series in `t` with polynomial coefficients.
//!
//! Coefficients are `BigInt`: the polynomials produced by brute-force
//! enumeration have coefficients that grow combinatorially, so fixed-width
//! integers would overflow silently.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::hash::{BuildHasherDefault, Hasher};
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

/// Multiplicative word hasher (the rustc "Fx" scheme); monomial keys hash
/// a handful of `u64`s, where SipHash would dominate the profile.
#[derive(Default)]
struct FxHasher {
    hash: u64,
}

impl FxHasher {
    #[inline]
    fn add(&mut self, word: u64) {
        self.hash = (self.hash.rotate_left(5) ^ word).wrapping_mul(0x51_7c_c1_b7_27_22_0a_95);
    }
}

impl Hasher for FxHasher {
    #[inline]
    fn finish(&self) -> u64 {
        self.hash
    }

    fn write(&mut self, bytes: &[u8]) {
        for &b in bytes {
            self.add(b as u64);
        }
    }

    #[inline]
    fn write_u64(&mut self, n: u64) {
        self.add(n);
    }

    #[inline]
    fn write_usize(&mut self, n: usize) {
        self.add(n as u64);
    }
}

type FxHashMap<K, V> = HashMap<K, V, BuildHasherDefault<FxHasher>>;

/// Variable families. Families `a`, `e`, `f`, `w` carry one index,
/// `b`, `c`, `d` carry two, all others none.
///
/// The derived `Ord` (declaration order) fixes the canonical term order.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Family {
    Lambda,
    X1,
    X2,
    Y1,
    Y2,
    U1,
    U2,
    V1,
    V2,
    We,
    Wo,
    Ze,
    Zo,
    Yt1,
    Vt1,
    Pp1,
    Pp2,
    Pm1,
    Pm2,
    Qp1,
    Qp2,
    Qm1,
    Qm2,
    S,
    Se,
    So,
    X,
    Y,
    Xbar,
    Ybar,
    A,
    B,
    C,
    D,
    E,
    F,
    W,
}

impl Family {
    const ALL: [Family; 37] = [
        Family::Lambda,
        Family::X1,
        Family::X2,
        Family::Y1,
        Family::Y2,
        Family::U1,
        Family::U2,
        Family::V1,
        Family::V2,
        Family::We,
        Family::Wo,
        Family::Ze,
        Family::Zo,
        Family::Yt1,
        Family::Vt1,
        Family::Pp1,
        Family::Pp2,
        Family::Pm1,
        Family::Pm2,
        Family::Qp1,
        Family::Qp2,
        Family::Qm1,
        Family::Qm2,
        Family::S,
        Family::Se,
        Family::So,
        Family::X,
        Family::Y,
        Family::Xbar,
        Family::Ybar,
        Family::A,
        Family::B,
        Family::C,
        Family::D,
        Family::E,
        Family::F,
        Family::W,
    ];

    /// Number of integer indices this family carries.
    pub fn arity(self) -> usize {
        match self {
            Family::A | Family::E | Family::F | Family::W => 1,
            Family::B | Family::C | Family::D => 2,
            _ => 0,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Family::Lambda => "λ",
            Family::X1 => "x1",
            Family::X2 => "x2",
            Family::Y1 => "y1",
            Family::Y2 => "y2",
            Family::U1 => "u1",
            Family::U2 => "u2",
            Family::V1 => "v1",
            Family::V2 => "v2",
            Family::We => "w_e",
            Family::Wo => "w_o",
            Family::Ze => "z_e",
            Family::Zo => "z_o",
            Family::Yt1 => "yt1",
            Family::Vt1 => "vt1",
            Family::Pp1 => "pp1",
            Family::Pp2 => "pp2",
            Family::Pm1 => "pm1",
            Family::Pm2 => "pm2",
            Family::Qp1 => "qp1",
            Family::Qp2 => "qp2",
            Family::Qm1 => "qm1",
            Family::Qm2 => "qm2",
            Family::S => "s",
            Family::Se => "s_e",
            Family::So => "s_o",
            Family::X => "x",
            Family::Y => "y",
            Family::Xbar => "xbar",
            Family::Ybar => "ybar",
            Family::A => "a",
            Family::B => "b",
            Family::C => "c",
            Family::D => "d",
            Family::E => "e",
            Family::F => "f",
            Family::W => "w",
        }
    }

    pub fn from_name(name: &str) -> Option<Family> {
        let f = match name {
            "λ" | "lambda" => Family::Lambda,
            "x1" => Family::X1,
            "x2" => Family::X2,
            "y1" => Family::Y1,
            "y2" => Family::Y2,
            "u1" => Family::U1,
            "u2" => Family::U2,
            "v1" => Family::V1,
            "v2" => Family::V2,
            "w_e" => Family::We,
            "w_o" => Family::Wo,
            "z_e" => Family::Ze,
            "z_o" => Family::Zo,
            "yt1" => Family::Yt1,
            "vt1" => Family::Vt1,
            "pp1" => Family::Pp1,
            "pp2" => Family::Pp2,
            "pm1" => Family::Pm1,
            "pm2" => Family::Pm2,
            "qp1" => Family::Qp1,
            "qp2" => Family::Qp2,
            "qm1" => Family::Qm1,
            "qm2" => Family::Qm2,
            "s" => Family::S,
            "s_e" => Family::Se,
            "s_o" => Family::So,
            "x" => Family::X,
            "y" => Family::Y,
            "xbar" => Family::Xbar,
            "ybar" => Family::Ybar,
            "a" => Family::A,
            "b" => Family::B,
            "c" => Family::C,
            "d" => Family::D,
            "e" => Family::E,
            "f" => Family::F,
            "w" => Family::W,
            _ => return None,
        };
        Some(f)
    }
}

/// An indeterminate: a family plus the indices its arity requires.
/// Unused index slots are always zero, so derived `Ord`/`Eq` give the
/// canonical (family, indices) order.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Variable {
    family: Family,
    indices: [u32; 2],
}

impl Variable {
    pub fn scalar(family: Family) -> Variable {
        assert_eq!(family.arity(), 0, "family {} expects indices", family.name());
        Variable { family, indices: [0, 0] }
    }

    pub fn indexed1(family: Family, i: u32) -> Variable {
        assert_eq!(family.arity(), 1, "family {} has arity {}", family.name(), family.arity());
        assert!(i <= MAX_INDEX, "index {i} out of range");
        Variable { family, indices: [i, 0] }
    }

    pub fn indexed2(family: Family, i: u32, j: u32) -> Variable {
        assert_eq!(family.arity(), 2, "family {} has arity {}", family.name(), family.arity());
        assert!(i <= MAX_INDEX && j <= MAX_INDEX, "index out of range");
        Variable { family, indices: [i, j] }
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn indices(&self) -> &[u32] {
        &self.indices[..self.family.arity()]
    }

    /// Packed order-preserving code: family, then the two indices.
    fn code(&self) -> u64 {
        ((self.family as u64) << 32)
            | ((self.indices[0] as u64) << 16)
            | self.indices[1] as u64
    }

    fn from_code(code: u64) -> Variable {
        Variable {
            family: Family::ALL[(code >> 32) as usize],
            indices: [((code >> 16) & 0xffff) as u32, (code & 0xffff) as u32],
        }
    }
}

/// Variable indices are packed into 16 bits; far beyond desk scale.
const MAX_INDEX: u32 = u16::MAX as u32;

impl fmt::Display for Variable {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(out, "{}", self.family.name())?;
        match self.family.arity() {
            0 => Ok(()),
            1 => write!(out, "[{}]", self.indices[0]),
            _ => write!(out, "[{},{}]", self.indices[0], self.indices[1]),
        }
    }
}

/// Short constructors for the variables used throughout.
pub mod vars {
    use super::{Family, MultiPoly, Variable};

    macro_rules! scalar_var {
        ($($fn_name:ident => $fam:ident),* $(,)?) => {
            $(pub fn $fn_name() -> Variable { Variable::scalar(Family::$fam) })*
        };
    }

    scalar_var! {
        lambda => Lambda,
        x1 => X1, x2 => X2, y1 => Y1, y2 => Y2,
        u1 => U1, u2 => U2, v1 => V1, v2 => V2,
        w_e => We, w_o => Wo, z_e => Ze, z_o => Zo,
        yt1 => Yt1, vt1 => Vt1,
        pp1 => Pp1, pp2 => Pp2, pm1 => Pm1, pm2 => Pm2,
        qp1 => Qp1, qp2 => Qp2, qm1 => Qm1, qm2 => Qm2,
        s => S, s_e => Se, s_o => So,
        x => X, y => Y, xbar => Xbar, ybar => Ybar,
    }

    pub fn a(l: u32) -> Variable {
        Variable::indexed1(Family::A, l)
    }
    pub fn e(l: u32) -> Variable {
        Variable::indexed1(Family::E, l)
    }
    pub fn f(l: u32) -> Variable {
        Variable::indexed1(Family::F, l)
    }
    pub fn w(l: u32) -> Variable {
        Variable::indexed1(Family::W, l)
    }
    pub fn b(l: u32, lp: u32) -> Variable {
        Variable::indexed2(Family::B, l, lp)
    }
    pub fn c(l: u32, lp: u32) -> Variable {
        Variable::indexed2(Family::C, l, lp)
    }
    pub fn d(l: u32, lp: u32) -> Variable {
        Variable::indexed2(Family::D, l, lp)
    }

    /// The polynomial consisting of the single variable `v`.
    pub fn poly(v: Variable) -> MultiPoly {
        MultiPoly::var(v)
    }
}

/// A power product of variables: sorted, exponents strictly positive.
///
/// Each factor is packed into one `u64` — variable code in the high bits,
/// exponent in the low 24 — so the derived `Ord` is the canonical
/// (family, indices, exponent) order and comparisons/hashes stay cheap in
/// the polynomial inner loops.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct Monomial(Vec<u64>);

const EXP_BITS: u32 = 24;
const EXP_MASK: u64 = (1 << EXP_BITS) - 1;

fn pack(code: u64, exp: u32) -> u64 {
    debug_assert!((exp as u64) <= EXP_MASK);
    (code << EXP_BITS) | exp as u64
}

impl Monomial {
    pub fn unit() -> Monomial {
        Monomial(Vec::new())
    }

    pub fn var(v: Variable) -> Monomial {
        Monomial(vec![pack(v.code(), 1)])
    }

    pub fn is_unit(&self) -> bool {
        self.0.is_empty()
    }

    pub fn factors(&self) -> impl Iterator<Item = (Variable, u32)> + '_ {
        self.0
            .iter()
            .map(|&f| (Variable::from_code(f >> EXP_BITS), (f & EXP_MASK) as u32))
    }

    /// Exponent of `v` in this monomial.
    pub fn exponent_of(&self, v: &Variable) -> u32 {
        let code = v.code();
        self.0
            .binary_search_by(|f| (f >> EXP_BITS).cmp(&code))
            .map(|i| (self.0[i] & EXP_MASK) as u32)
            .unwrap_or(0)
    }

    pub fn mul_var(&self, v: Variable, k: u32) -> Monomial {
        if k == 0 {
            return self.clone();
        }
        assert!((k as u64) <= EXP_MASK, "exponent {k} out of range");
        let code = v.code();
        let mut out = self.0.clone();
        match out.binary_search_by(|f| (f >> EXP_BITS).cmp(&code)) {
            Ok(i) => {
                assert!((out[i] & EXP_MASK) + k as u64 <= EXP_MASK, "exponent overflow");
                out[i] += k as u64;
            }
            Err(i) => out.insert(i, pack(code, k)),
        }
        Monomial(out)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut out = Vec::with_capacity(self.0.len() + other.0.len());
        let (mut i, mut j) = (0, 0);
        while i < self.0.len() && j < other.0.len() {
            match (self.0[i] >> EXP_BITS).cmp(&(other.0[j] >> EXP_BITS)) {
                Ordering::Less => {
                    out.push(self.0[i]);
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(other.0[j]);
                    j += 1;
                }
                Ordering::Equal => {
                    // same variable: exponents add in the low bits
                    let sum = (self.0[i] & EXP_MASK) + (other.0[j] & EXP_MASK);
                    assert!(sum <= EXP_MASK, "exponent overflow");
                    out.push((self.0[i] & !EXP_MASK) | sum);
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.0[i..]);
        out.extend_from_slice(&other.0[j..]);
        Monomial(out)
    }

    /// Monomial with the factor `v^k` removed entirely (any exponent).
    fn without(&self, v: &Variable) -> Monomial {
        let code = v.code();
        Monomial(
            self.0
                .iter()
                .copied()
                .filter(|f| (f >> EXP_BITS) != code)
                .collect(),
        )
    }
}

/// A sparse multivariate polynomial in canonical form: no zero coefficients,
/// no duplicate monomials, terms ordered by `Monomial`'s `Ord`.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct MultiPoly {
    terms: BTreeMap<Monomial, BigInt>,
}

impl MultiPoly {
    pub fn zero() -> MultiPoly {
        MultiPoly::default()
    }

    pub fn one() -> MultiPoly {
        MultiPoly::constant(1)
    }

    pub fn constant(c: i64) -> MultiPoly {
        MultiPoly::constant_big(BigInt::from(c))
    }

    pub fn constant_big(c: BigInt) -> MultiPoly {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Monomial::unit(), c);
        }
        MultiPoly { terms }
    }

    pub fn var(v: Variable) -> MultiPoly {
        MultiPoly::from_term(Monomial::var(v), BigInt::one())
    }

    pub fn from_term(m: Monomial, coeff: BigInt) -> MultiPoly {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(m, coeff);
        }
        MultiPoly { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .get(&Monomial::unit())
                .map(|c| c.is_one())
                .unwrap_or(false)
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    /// If the polynomial is constant, its value.
    pub fn constant_value(&self) -> Option<BigInt> {
        if self.terms.is_empty() {
            return Some(BigInt::zero());
        }
        if self.terms.len() == 1 {
            if let Some(c) = self.terms.get(&Monomial::unit()) {
                return Some(c.clone());
            }
        }
        None
    }

    pub fn add_term(&mut self, m: Monomial, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += coeff;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        out.add_assign(other);
        out
    }

    pub fn add_assign(&mut self, other: &MultiPoly) {
        for (m, c) in &other.terms {
            self.add_term(m.clone(), c.clone());
        }
    }

    pub fn negate(&self) -> MultiPoly {
        MultiPoly {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }

    pub fn sub(&self, other: &MultiPoly) -> MultiPoly {
        self.add(&other.negate())
    }

    pub fn mul(&self, other: &MultiPoly) -> MultiPoly {
        if self.terms.is_empty() || other.terms.is_empty() {
            return MultiPoly::zero();
        }
        // Accumulate into a hash map and canonicalize once at the end;
        // products of large polynomials merge most of their term pairs.
        let capacity = self.terms.len().max(other.terms.len()) * 2;
        let mut acc: FxHashMap<Monomial, BigInt> =
            FxHashMap::with_capacity_and_hasher(capacity, Default::default());
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                let prod = c1 * c2;
                match acc.entry(m1.mul(m2)) {
                    std::collections::hash_map::Entry::Occupied(mut e) => {
                        *e.get_mut() += prod;
                    }
                    std::collections::hash_map::Entry::Vacant(e) => {
                        e.insert(prod);
                    }
                }
            }
        }
        let mut terms = BTreeMap::new();
        for (m, c) in acc {
            if !c.is_zero() {
                terms.insert(m, c);
            }
        }
        MultiPoly { terms }
    }

    pub fn mul_var(&self, v: Variable, k: u32) -> MultiPoly {
        MultiPoly {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.mul_var(v, k), c.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, c: &BigInt) -> MultiPoly {
        if c.is_zero() {
            return MultiPoly::zero();
        }
        MultiPoly {
            terms: self.terms.iter().map(|(m, k)| (m.clone(), k * c)).collect(),
        }
    }

    pub fn pow(&self, n: u32) -> MultiPoly {
        let mut out = MultiPoly::one();
        for _ in 0..n {
            out = out.mul(self);
        }
        out
    }

    /// Homomorphic image under `assignment`; variables mapped to `None`
    /// are kept as themselves.
    pub fn substitute<A>(&self, assignment: A) -> MultiPoly
    where
        A: Fn(&Variable) -> Option<MultiPoly>,
    {
        let mut out = MultiPoly::zero();
        for (m, c) in &self.terms {
            let mut term = MultiPoly::constant_big(c.clone());
            for (v, k) in m.factors() {
                match assignment(&v) {
                    Some(image) => term = term.mul(&image.pow(k)),
                    None => term = term.mul_var(v, k),
                }
            }
            out.add_assign(&term);
        }
        out
    }

    /// The polynomial multiplying `v^k` (with that power of `v` removed).
    pub fn coefficient_of(&self, v: &Variable, k: u32) -> MultiPoly {
        let mut out = MultiPoly::zero();
        for (m, c) in &self.terms {
            if m.exponent_of(v) == k {
                out.add_term(m.without(v), c.clone());
            }
        }
        out
    }

    /// Largest exponent of `v` appearing in any term.
    pub fn degree_in(&self, v: &Variable) -> u32 {
        self.terms.keys().map(|m| m.exponent_of(v)).max().unwrap_or(0)
    }
}

impl Add for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, other: Self) -> MultiPoly {
        MultiPoly::add(self, other)
    }
}

impl Sub for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, other: Self) -> MultiPoly {
        MultiPoly::sub(self, other)
    }
}

impl Mul for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, other: Self) -> MultiPoly {
        MultiPoly::mul(self, other)
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        self.negate()
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(out, "0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            if i == 0 {
                if neg {
                    write!(out, "-")?;
                }
            } else if neg {
                write!(out, " - ")?;
            } else {
                write!(out, " + ")?;
            }
            let abs = c.abs();
            if m.is_unit() {
                write!(out, "{}", abs)?;
            } else {
                let mut lead = true;
                if !abs.is_one() {
                    write!(out, "{}", abs)?;
                    lead = false;
                }
                for (v, k) in m.factors() {
                    if !lead {
                        write!(out, "*")?;
                    }
                    lead = false;
                    write!(out, "{}", v)?;
                    if k > 1 {
                        write!(out, "^{}", k)?;
                    }
                }
            }
        }
        Ok(())
    }
}

/// Error from parsing the polynomial text form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyParseError(pub String);

impl fmt::Display for PolyParseError {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(out, "polynomial parse error: {}", self.0)
    }
}

impl std::error::Error for PolyParseError {}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Token {
    Int(BigInt),
    Name(String),
    LBracket,
    RBracket,
    Comma,
    Caret,
    Star,
    Plus,
    Minus,
}

fn tokenize(s: &str) -> Result<Vec<Token>, PolyParseError> {
    let mut tokens = Vec::new();
    let mut chars = s.chars().peekable();
    while let Some(&ch) = chars.peek() {
        match ch {
            ' ' | '\t' => {
                chars.next();
            }
            '[' => {
                chars.next();
                tokens.push(Token::LBracket);
            }
            ']' => {
                chars.next();
                tokens.push(Token::RBracket);
            }
            ',' => {
                chars.next();
                tokens.push(Token::Comma);
            }
            '^' => {
                chars.next();
                tokens.push(Token::Caret);
            }
            '*' => {
                chars.next();
                tokens.push(Token::Star);
            }
            '+' => {
                chars.next();
                tokens.push(Token::Plus);
            }
            '-' => {
                chars.next();
                tokens.push(Token::Minus);
            }
            '0'..='9' => {
                let mut digits = String::new();
                while let Some(&c) = chars.peek() {
                    if c.is_ascii_digit() {
                        digits.push(c);
                        chars.next();
                    } else {
                        break;
                    }
                }
                let n = BigInt::from_str(&digits)
                    .map_err(|e| PolyParseError(format!("bad integer {digits}: {e}")))?;
                tokens.push(Token::Int(n));
            }
            c if c.is_alphabetic() || c == '_' || c == 'λ' => {
                let mut name = String::new();
                while let Some(&c) = chars.peek() {
                    if c.is_alphanumeric() || c == '_' || c == 'λ' {
                        name.push(c);
                        chars.next();
                    } else {
                        break;
                    }
                }
                tokens.push(Token::Name(name));
            }
            other => return Err(PolyParseError(format!("unexpected character {other:?}"))),
        }
    }
    Ok(tokens)
}

struct Parser {
    tokens: Vec<Token>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn next(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.pos).cloned();
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn expect(&mut self, t: Token) -> Result<(), PolyParseError> {
        match self.next() {
            Some(found) if found == t => Ok(()),
            other => Err(PolyParseError(format!("expected {t:?}, found {other:?}"))),
        }
    }

    fn parse_index(&mut self) -> Result<u32, PolyParseError> {
        match self.next() {
            Some(Token::Int(n)) => n
                .try_into()
                .map_err(|_| PolyParseError("index out of range".into())),
            other => Err(PolyParseError(format!("expected index, found {other:?}"))),
        }
    }

    fn parse_factor(&mut self) -> Result<MultiPoly, PolyParseError> {
        match self.next() {
            Some(Token::Int(n)) => Ok(MultiPoly::constant_big(n)),
            Some(Token::Name(name)) => {
                let family = Family::from_name(&name)
                    .ok_or_else(|| PolyParseError(format!("unknown variable {name:?}")))?;
                let var = match family.arity() {
                    0 => Variable::scalar(family),
                    arity => {
                        self.expect(Token::LBracket)?;
                        let i = self.parse_index()?;
                        let var = if arity == 2 {
                            self.expect(Token::Comma)?;
                            let j = self.parse_index()?;
                            Variable::indexed2(family, i, j)
                        } else {
                            Variable::indexed1(family, i)
                        };
                        self.expect(Token::RBracket)?;
                        var
                    }
                };
                let mut exp = 1;
                if self.peek() == Some(&Token::Caret) {
                    self.next();
                    match self.next() {
                        Some(Token::Int(n)) => {
                            exp = n
                                .try_into()
                                .map_err(|_| PolyParseError("exponent out of range".into()))?;
                        }
                        other => {
                            return Err(PolyParseError(format!(
                                "expected exponent, found {other:?}"
                            )))
                        }
                    }
                }
                Ok(MultiPoly::var(var).pow(exp))
            }
            other => Err(PolyParseError(format!("expected factor, found {other:?}"))),
        }
    }

    fn parse_term(&mut self) -> Result<MultiPoly, PolyParseError> {
        let mut term = self.parse_factor()?;
        while self.peek() == Some(&Token::Star) {
            self.next();
            term = term.mul(&self.parse_factor()?);
        }
        Ok(term)
    }

    fn parse_poly(&mut self) -> Result<MultiPoly, PolyParseError> {
        let mut negate = false;
        if self.peek() == Some(&Token::Minus) {
            self.next();
            negate = true;
        }
        let mut poly = self.parse_term()?;
        if negate {
            poly = poly.negate();
        }
        loop {
            match self.peek() {
                Some(Token::Plus) => {
                    self.next();
                    poly.add_assign(&self.parse_term()?);
                }
                Some(Token::Minus) => {
                    self.next();
                    let t = self.parse_term()?;
                    poly.add_assign(&t.negate());
                }
                None => return Ok(poly),
                other => return Err(PolyParseError(format!("unexpected token {other:?}"))),
            }
        }
    }
}

impl FromStr for MultiPoly {
    type Err = PolyParseError;

    fn from_str(s: &str) -> Result<MultiPoly, PolyParseError> {
        let mut parser = Parser {
            tokens: tokenize(s)?,
            pos: 0,
        };
        if parser.tokens.is_empty() {
            return Err(PolyParseError("empty input".into()));
        }
        parser.parse_poly()
    }
}

#[derive(Serialize)]
struct FactorJson {
    family: &'static str,
    indices: Vec<u32>,
    exponent: u32,
}

#[derive(Serialize)]
struct TermJson {
    coefficient: String,
    monomial: Vec<FactorJson>,
}

impl Serialize for MultiPoly {
    fn serialize<Ser: Serializer>(&self, serializer: Ser) -> Result<Ser::Ok, Ser::Error> {
        let mut seq = serializer.serialize_seq(Some(self.terms.len()))?;
        for (m, c) in &self.terms {
            let term = TermJson {
                coefficient: c.to_string(),
                monomial: m
                    .factors()
                    .map(|(v, k)| FactorJson {
                        family: v.family().name(),
                        indices: v.indices().to_vec(),
                        exponent: k,
                    })
                    .collect(),
            };
            seq.serialize_element(&term)?;
        }
        seq.end()
    }
}

/// A power series in `t` truncated at order `N`: coefficients of
/// `t^0 .. t^N`, each an exact polynomial.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SeriesT {
    coeffs: Vec<MultiPoly>,
}

impl SeriesT {
    /// Zero series of the given truncation order.
    pub fn zero(order: usize) -> SeriesT {
        SeriesT {
            coeffs: vec![MultiPoly::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> SeriesT {
        let mut s = SeriesT::zero(order);
        s.coeffs[0] = MultiPoly::one();
        s
    }

    pub fn from_coeffs(coeffs: Vec<MultiPoly>) -> SeriesT {
        assert!(!coeffs.is_empty());
        SeriesT { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, k: usize) -> &MultiPoly {
        &self.coeffs[k]
    }

    pub fn coeffs(&self) -> &[MultiPoly] {
        &self.coeffs
    }

    pub fn set_coeff(&mut self, k: usize, p: MultiPoly) {
        self.coeffs[k] = p;
    }

    pub fn add(&self, other: &SeriesT) -> SeriesT {
        let order = self.order().min(other.order());
        let mut out = SeriesT::zero(order);
        for k in 0..=order {
            out.coeffs[k] = self.coeffs[k].add(&other.coeffs[k]);
        }
        out
    }

    pub fn sub(&self, other: &SeriesT) -> SeriesT {
        let order = self.order().min(other.order());
        let mut out = SeriesT::zero(order);
        for k in 0..=order {
            out.coeffs[k] = self.coeffs[k].sub(&other.coeffs[k]);
        }
        out
    }

    pub fn mul(&self, other: &SeriesT) -> SeriesT {
        let order = self.order().min(other.order());
        let mut out = SeriesT::zero(order);
        for i in 0..=order {
            if self.coeffs[i].is_zero() {
                continue;
            }
            for j in 0..=(order - i) {
                if other.coeffs[j].is_zero() {
                    continue;
                }
                let prod = self.coeffs[i].mul(&other.coeffs[j]);
                out.coeffs[i + j].add_assign(&prod);
            }
        }
        out
    }

    /// Multiplicative inverse; requires constant term 1.
    /// Standard recurrence: c_0 = 1, c_n = -sum_{k=1}^{n} a_k c_{n-k}.
    pub fn invert(&self) -> SeriesT {
        assert!(
            self.coeffs[0].is_one(),
            "series inverse requires constant term 1"
        );
        let order = self.order();
        let mut out = SeriesT::zero(order);
        out.coeffs[0] = MultiPoly::one();
        for n in 1..=order {
            let mut acc = MultiPoly::zero();
            for k in 1..=n {
                if self.coeffs[k].is_zero() {
                    continue;
                }
                acc.add_assign(&self.coeffs[k].mul(&out.coeffs[n - k]));
            }
            out.coeffs[n] = acc.negate();
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(s: &str) -> MultiPoly {
        s.parse().unwrap()
    }

    #[test]
    fn mul_by_zero_annihilates() {
        let lhs = p("x1 + λ");
        assert!(lhs.mul(&MultiPoly::zero()).is_zero());
    }

    #[test]
    fn binomial_square() {
        let sum = p("a[0] + b[0,0]");
        assert_eq!(sum.mul(&sum), p("a[0]^2 + 2*a[0]*b[0,0] + b[0,0]^2"));
    }

    #[test]
    fn substitute_collapses_variables() {
        let prod = p("x1*y1");
        let image = prod.substitute(|v| (*v == vars::x1()).then(|| MultiPoly::var(vars::y1())));
        assert_eq!(image, p("y1^2"));

        let with_lambda = p("λ^2*e[0] + λ*x1");
        let dropped = with_lambda.substitute(|v| (*v == vars::lambda()).then(MultiPoly::one));
        assert_eq!(dropped, p("e[0] + x1"));
    }

    #[test]
    fn coefficient_extraction() {
        let q = p("λ^2*e[0]*f[0] + λ*a[0]*b[0,0]");
        assert_eq!(q.coefficient_of(&vars::lambda(), 1), p("a[0]*b[0,0]"));
        assert_eq!(p("x1").coefficient_of(&vars::lambda(), 0), p("x1"));
    }

    #[test]
    fn display_signs_and_units() {
        assert_eq!(MultiPoly::zero().to_string(), "0");
        assert_eq!(p("0").to_string(), "0");
        assert_eq!(p("x1 - y1").to_string(), "x1 - y1");
        assert_eq!(p("-3*λ^2").to_string(), "-3*λ^2");
        assert_eq!(p("2 + w[3]").to_string(), "2 + w[3]");
    }

    #[test]
    fn series_inverse_of_one_minus_t() {
        // 1/(1-t) = 1 + t + t^2 + ...
        let mut s = SeriesT::one(5);
        s.set_coeff(1, MultiPoly::constant(-1));
        let inv = s.invert();
        for k in 0..=5 {
            assert!(inv.coeff(k).is_one(), "coeff {k}");
        }
        assert_eq!(s.mul(&inv), SeriesT::one(5));
    }

    // Small random polynomials over a handful of variables.
    fn arb_poly() -> impl Strategy<Value = MultiPoly> {
        let var = prop_oneof![
            Just(vars::lambda()),
            Just(vars::x1()),
            Just(vars::y1()),
            (0u32..3).prop_map(vars::a),
            (0u32..2, 0u32..2).prop_map(|(i, j)| vars::b(i, j)),
        ];
        let term = (proptest::collection::vec((var, 1u32..3), 0..3), -4i64..5).prop_map(
            |(factors, coeff)| {
                let mut m = Monomial::unit();
                for (v, k) in factors {
                    m = m.mul_var(v, k);
                }
                MultiPoly::from_term(m, BigInt::from(coeff))
            },
        );
        proptest::collection::vec(term, 0..5).prop_map(|terms| {
            let mut acc = MultiPoly::zero();
            for t in terms {
                acc.add_assign(&t);
            }
            acc
        })
    }

    proptest! {
        #[test]
        fn ring_axioms(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
            prop_assert_eq!(a.add(&b), b.add(&a));
            prop_assert_eq!(a.mul(&b), b.mul(&a));
            prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
            prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
            prop_assert_eq!(a.sub(&a), MultiPoly::zero());
            prop_assert_eq!(a.mul(&MultiPoly::one()), a.clone());
        }

        #[test]
        fn substitution_is_a_homomorphism(a in arb_poly(), b in arb_poly()) {
            let assign = |v: &Variable| {
                (*v == vars::x1()).then(|| p("y1 + 1"))
                    .or_else(|| (*v == vars::a(0)).then(|| p("2*b[1,1]")))
            };
            let lhs = a.mul(&b).substitute(assign);
            let rhs = a.substitute(assign).mul(&b.substitute(assign));
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn parse_print_round_trip(a in arb_poly()) {
            let text = a.to_string();
            let back: MultiPoly = text.parse().unwrap();
            prop_assert_eq!(back, a);
        }
    }
}
