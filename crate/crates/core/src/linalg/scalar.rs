//! Exact scalars: arbitrary-precision integers, rationals, and prime fields.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// The active coefficient ring.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Ring {
    /// Arbitrary-precision integers.
    Int,
    /// Exact rationals.
    Rat,
    /// The prime field `F_p`.
    Fp(u32),
}

impl Ring {
    pub fn zero(self) -> Scalar {
        Scalar::from_i64(self, 0)
    }

    pub fn one(self) -> Scalar {
        Scalar::from_i64(self, 1)
    }

    pub fn is_field(self) -> bool {
        !matches!(self, Ring::Int)
    }

    /// True when 2 has a multiplicative inverse.
    pub fn two_invertible(self) -> bool {
        match self {
            Ring::Int => false,
            Ring::Rat => true,
            Ring::Fp(p) => p != 2,
        }
    }

    pub fn characteristic(self) -> u32 {
        match self {
            Ring::Int | Ring::Rat => 0,
            Ring::Fp(p) => p,
        }
    }
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Ring::Int => write!(f, "Z"),
            Ring::Rat => write!(f, "Q"),
            Ring::Fp(p) => write!(f, "F{p}"),
        }
    }
}

/// An element of the active coefficient ring.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Scalar {
    Int(BigInt),
    Rat(BigRational),
    Fp { p: u32, val: u64 },
}

impl Scalar {
    pub fn ring(&self) -> Ring {
        match self {
            Scalar::Int(_) => Ring::Int,
            Scalar::Rat(_) => Ring::Rat,
            Scalar::Fp { p, .. } => Ring::Fp(*p),
        }
    }

    pub fn from_i64(ring: Ring, v: i64) -> Scalar {
        match ring {
            Ring::Int => Scalar::Int(BigInt::from(v)),
            Ring::Rat => Scalar::Rat(BigRational::from(BigInt::from(v))),
            Ring::Fp(p) => {
                let m = v.rem_euclid(p as i64) as u64;
                Scalar::Fp { p, val: m }
            }
        }
    }

    /// `a/b` in rings where this makes sense (`b` must be invertible).
    pub fn from_ratio(ring: Ring, a: i64, b: i64) -> Scalar {
        assert!(b != 0, "zero denominator");
        match ring {
            Ring::Int => {
                assert!(a % b == 0, "non-integer ratio over Z");
                Scalar::from_i64(ring, a / b)
            }
            Ring::Rat => Scalar::Rat(BigRational::new(BigInt::from(a), BigInt::from(b))),
            Ring::Fp(_) => {
                let bi = Scalar::from_i64(ring, b)
                    .inverse()
                    .expect("denominator not invertible in F_p");
                &Scalar::from_i64(ring, a) * &bi
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Int(v) => v.is_zero(),
            Scalar::Rat(v) => v.is_zero(),
            Scalar::Fp { val, .. } => *val == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Int(v) => v.is_one(),
            Scalar::Rat(v) => v.is_one(),
            Scalar::Fp { val, .. } => *val == 1,
        }
    }

    pub fn inverse(&self) -> Option<Scalar> {
        match self {
            Scalar::Int(v) => {
                if v.is_one() {
                    Some(self.clone())
                } else if (-v).is_one() {
                    Some(self.clone())
                } else {
                    None
                }
            }
            Scalar::Rat(v) => {
                if v.is_zero() {
                    None
                } else {
                    Some(Scalar::Rat(v.recip()))
                }
            }
            Scalar::Fp { p, val } => {
                if *val == 0 {
                    None
                } else {
                    // Fermat: val^(p-2) mod p.
                    let mut acc: u64 = 1;
                    let mut base = *val % *p as u64;
                    let mut e = *p as u64 - 2;
                    while e > 0 {
                        if e & 1 == 1 {
                            acc = acc * base % *p as u64;
                        }
                        base = base * base % *p as u64;
                        e >>= 1;
                    }
                    Some(Scalar::Fp { p: *p, val: acc })
                }
            }
        }
    }

    /// Exact scalar division; `None` when the quotient does not exist in the ring.
    pub fn divide(&self, by: &Scalar) -> Option<Scalar> {
        self.check_ring(by);
        match (self, by) {
            (Scalar::Int(a), Scalar::Int(b)) => {
                if b.is_zero() {
                    None
                } else {
                    let (q, r) = a.div_rem(b);
                    if r.is_zero() {
                        Some(Scalar::Int(q))
                    } else {
                        None
                    }
                }
            }
            _ => by.inverse().map(|i| self * &i),
        }
    }

    fn check_ring(&self, other: &Scalar) {
        assert_eq!(self.ring(), other.ring(), "scalar ring mismatch");
    }

    /// Integer content as `BigInt` (only over `Z`).
    pub fn as_bigint(&self) -> &BigInt {
        match self {
            Scalar::Int(v) => v,
            _ => panic!("as_bigint on non-integer scalar"),
        }
    }

    pub fn abs(&self) -> Scalar {
        match self {
            Scalar::Int(v) => Scalar::Int(v.abs()),
            Scalar::Rat(v) => Scalar::Rat(v.abs()),
            Scalar::Fp { .. } => self.clone(),
        }
    }

    /// Serializes exactly: integers in decimal, rationals as `p/q`.
    pub fn to_exact_string(&self) -> String {
        match self {
            Scalar::Int(v) => v.to_string(),
            Scalar::Rat(v) => {
                if v.denom().is_one() {
                    v.numer().to_string()
                } else {
                    format!("{}/{}", v.numer(), v.denom())
                }
            }
            Scalar::Fp { val, .. } => val.to_string(),
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_exact_string())
    }
}

impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        self.check_ring(rhs);
        match (self, rhs) {
            (Scalar::Int(a), Scalar::Int(b)) => Scalar::Int(a + b),
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a + b),
            (Scalar::Fp { p, val: a }, Scalar::Fp { val: b, .. }) => Scalar::Fp {
                p: *p,
                val: (a + b) % *p as u64,
            },
            _ => unreachable!(),
        }
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        self + &(-rhs)
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        self.check_ring(rhs);
        match (self, rhs) {
            (Scalar::Int(a), Scalar::Int(b)) => Scalar::Int(a * b),
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a * b),
            (Scalar::Fp { p, val: a }, Scalar::Fp { val: b, .. }) => Scalar::Fp {
                p: *p,
                val: a * b % *p as u64,
            },
            _ => unreachable!(),
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Int(v) => Scalar::Int(-v),
            Scalar::Rat(v) => Scalar::Rat(-v),
            Scalar::Fp { p, val } => Scalar::Fp {
                p: *p,
                val: if *val == 0 { 0 } else { *p as u64 - val },
            },
        }
    }
}
