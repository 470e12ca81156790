use alloc::string::String;
use core::fmt;
use core::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use core::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// The ground field a computation runs over.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Field {
    Rational,
    /// Integers modulo a prime `p` (primality is checked on construction).
    Prime(u64),
}

impl Field {
    pub fn prime(p: u64) -> Option<Field> {
        if is_prime(p) {
            Some(Field::Prime(p))
        } else {
            None
        }
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            Field::Rational => 0,
            Field::Prime(p) => *p,
        }
    }

    /// True when `n` is invertible in this field.
    pub fn inverts(&self, n: u64) -> bool {
        match self {
            Field::Rational => n != 0,
            Field::Prime(p) => n % p != 0,
        }
    }

    pub fn from_i64(&self, n: i64) -> Scalar {
        self.coerce(&Scalar::from(n))
    }

    /// Brings a scalar into this field. Returns `None` when a rational
    /// denominator vanishes modulo the characteristic.
    pub fn try_coerce(&self, s: &Scalar) -> Option<Scalar> {
        match (self, s) {
            (Field::Rational, Scalar::Rat(_)) => Some(s.clone()),
            (Field::Rational, Scalar::Mod { .. }) => None,
            (Field::Prime(p), Scalar::Mod { p: q, .. }) if p == q => Some(s.clone()),
            (Field::Prime(_), Scalar::Mod { .. }) => None,
            (Field::Prime(p), Scalar::Rat(r)) => rat_mod(r, *p).map(|v| Scalar::Mod { v, p: *p }),
        }
    }

    pub fn coerce(&self, s: &Scalar) -> Scalar {
        self.try_coerce(s)
            .unwrap_or_else(|| panic!("scalar {} has no image in {}", s, self))
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rational => write!(f, "Q"),
            Field::Prime(p) => write!(f, "F_{}", p),
        }
    }
}

impl FromStr for Field {
    type Err = String;
    /// Accepts `q` or `fp:<p>`, in any case.
    fn from_str(s: &str) -> Result<Self, String> {
        let t = s.trim().to_ascii_lowercase();
        if t == "q" {
            return Ok(Field::Rational);
        }
        if let Some(rest) = t.strip_prefix("fp:") {
            let p: u64 = rest
                .parse()
                .map_err(|_| alloc::format!("bad prime in field spec `{}`", s))?;
            return Field::prime(p).ok_or_else(|| alloc::format!("{} is not prime", p));
        }
        Err(alloc::format!("unknown field `{}` (expected q or fp:<p>)", s))
    }
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn powmod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1 % p;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = mulmod(r, a, p);
        }
        a = mulmod(a, a, p);
        e >>= 1;
    }
    r
}

fn bigint_mod(n: &BigInt, p: u64) -> u64 {
    let m = n.mod_floor(&BigInt::from(p));
    m.to_u64().expect("residue fits in u64")
}

fn rat_mod(r: &BigRational, p: u64) -> Option<u64> {
    let num = bigint_mod(r.numer(), p);
    let den = bigint_mod(r.denom(), p);
    if den == 0 {
        return None;
    }
    Some(mulmod(num, powmod(den, p - 2, p), p))
}

/// An exact field element: a rational number or a residue modulo a prime.
///
/// Rationals mix freely into residues (so small constants such as `-1` or
/// `1/2` can be written once); mixing two different primes is a bug.
#[derive(Clone, Debug)]
pub enum Scalar {
    Rat(BigRational),
    Mod { v: u64, p: u64 },
}

impl Scalar {
    pub fn zero() -> Scalar {
        Scalar::Rat(BigRational::zero())
    }

    pub fn one() -> Scalar {
        Scalar::Rat(BigRational::one())
    }

    pub fn ratio(n: i64, d: i64) -> Scalar {
        Scalar::Rat(BigRational::new(BigInt::from(n), BigInt::from(d)))
    }

    pub fn sign(odd: bool) -> Scalar {
        Scalar::from(if odd { -1 } else { 1 })
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rat(r) => r.is_zero(),
            Scalar::Mod { v, .. } => *v == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rat(r) => r.is_one(),
            Scalar::Mod { v, .. } => *v == 1,
        }
    }

    pub fn field(&self) -> Field {
        match self {
            Scalar::Rat(_) => Field::Rational,
            Scalar::Mod { p, .. } => Field::Prime(*p),
        }
    }

    pub fn inv(&self) -> Option<Scalar> {
        if self.is_zero() {
            return None;
        }
        Some(match self {
            Scalar::Rat(r) => Scalar::Rat(r.recip()),
            Scalar::Mod { v, p } => Scalar::Mod { v: powmod(*v, p - 2, *p), p: *p },
        })
    }

    /// Negates when `odd` holds; the workhorse for Koszul signs.
    pub fn signed(self, odd: bool) -> Scalar {
        if odd {
            -self
        } else {
            self
        }
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            Scalar::Rat(r) => Some(r),
            Scalar::Mod { .. } => None,
        }
    }

    fn lift(a: &Scalar, b: &Scalar) -> (Scalar, Scalar) {
        match (a, b) {
            (Scalar::Rat(_), Scalar::Mod { p, .. }) => (Field::Prime(*p).coerce(a), b.clone()),
            (Scalar::Mod { p, .. }, Scalar::Rat(_)) => (a.clone(), Field::Prime(*p).coerce(b)),
            (Scalar::Mod { p, .. }, Scalar::Mod { p: q, .. }) if p != q => {
                panic!("mixing residues modulo {} and {}", p, q)
            }
            _ => (a.clone(), b.clone()),
        }
    }

    fn binop(
        &self,
        rhs: &Scalar,
        fr: impl Fn(&BigRational, &BigRational) -> BigRational,
        fm: impl Fn(u64, u64, u64) -> u64,
    ) -> Scalar {
        match (self, rhs) {
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(fr(a, b)),
            (Scalar::Mod { v: a, p }, Scalar::Mod { v: b, p: q }) if p == q => {
                Scalar::Mod { v: fm(*a, *b, *p), p: *p }
            }
            _ => {
                let (a, b) = Scalar::lift(self, rhs);
                a.binop(&b, fr, fm)
            }
        }
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Scalar {
        Scalar::Rat(BigRational::from_integer(BigInt::from(n)))
    }
}

impl From<BigRational> for Scalar {
    fn from(r: BigRational) -> Scalar {
        Scalar::Rat(r)
    }
}

impl PartialEq for Scalar {
    fn eq(&self, other: &Scalar) -> bool {
        match (self, other) {
            (Scalar::Rat(a), Scalar::Rat(b)) => a == b,
            (Scalar::Mod { v: a, p }, Scalar::Mod { v: b, p: q }) => p == q && a == b,
            _ => {
                let (a, b) = Scalar::lift(self, other);
                a == b
            }
        }
    }
}

impl Eq for Scalar {}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        self.binop(rhs, |a, b| a + b, |a, b, p| (a + b) % p)
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        self.binop(rhs, |a, b| a - b, |a, b, p| (a + p - b) % p)
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        self.binop(rhs, |a, b| a * b, mulmod)
    }
}

impl Add for Scalar {
    type Output = Scalar;
    fn add(self, rhs: Scalar) -> Scalar {
        &self + &rhs
    }
}

impl Sub for Scalar {
    type Output = Scalar;
    fn sub(self, rhs: Scalar) -> Scalar {
        &self - &rhs
    }
}

impl Mul for Scalar {
    type Output = Scalar;
    fn mul(self, rhs: Scalar) -> Scalar {
        &self * &rhs
    }
}

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        *self = &*self + rhs;
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        *self = &*self - rhs;
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Rat(r) => Scalar::Rat(-r),
            Scalar::Mod { v, p } => Scalar::Mod { v: (p - v) % p, p },
        }
    }
}

impl fmt::Display for Scalar {
    /// Rationals print as `n` or `n/d` in lowest terms; residues as their
    /// least non-negative representative.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rat(r) => {
                if r.is_integer() {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
            Scalar::Mod { v, .. } => write!(f, "{}", v),
        }
    }
}

impl FromStr for Scalar {
    type Err = String;
    /// Parses `n` or `n/d`; the result is always rational.
    fn from_str(s: &str) -> Result<Scalar, String> {
        let t = s.trim();
        let bad = || alloc::format!("bad scalar `{}`", s);
        let (n, d) = match t.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (t, "1"),
        };
        let n: BigInt = n.parse().map_err(|_| bad())?;
        let d: BigInt = d.parse().map_err(|_| bad())?;
        if d.is_zero() {
            return Err(alloc::format!("zero denominator in `{}`", s));
        }
        if d.is_negative() {
            return Err(bad());
        }
        Ok(Scalar::Rat(BigRational::new(n, d)))
    }
}
