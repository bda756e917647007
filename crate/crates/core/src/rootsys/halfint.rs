use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use serde::{Serialize, Serializer};

/// An exact element of `½ℤ`, stored as its double.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HalfInt {
    doubled: BigInt,
}

impl HalfInt {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn from_doubled(doubled: impl Into<BigInt>) -> Self {
        Self {
            doubled: doubled.into(),
        }
    }

    pub fn from_int(n: impl Into<BigInt>) -> Self {
        Self {
            doubled: n.into() * 2,
        }
    }

    /// `1/2`
    pub fn half() -> Self {
        Self::from_doubled(1)
    }

    pub fn doubled(&self) -> &BigInt {
        &self.doubled
    }

    pub fn is_integer(&self) -> bool {
        self.doubled.is_even()
    }

    pub fn is_zero(&self) -> bool {
        self.doubled.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.doubled.is_negative()
    }

    /// The integer value, if there is one.
    pub fn to_integer(&self) -> Option<BigInt> {
        self.is_integer().then(|| &self.doubled / 2)
    }

    pub fn abs(&self) -> Self {
        Self {
            doubled: self.doubled.abs(),
        }
    }

    pub fn scale(&self, factor: impl Into<BigInt>) -> Self {
        Self {
            doubled: &self.doubled * factor.into(),
        }
    }

    /// `self - other` is an integer.
    pub fn same_coset(&self, other: &Self) -> bool {
        (&self.doubled - &other.doubled).is_even()
    }
}

impl fmt::Display for HalfInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            write!(f, "{}", &self.doubled / 2)
        } else {
            write!(f, "{}/2", self.doubled)
        }
    }
}

impl fmt::Debug for HalfInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for HalfInt {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl From<i64> for HalfInt {
    fn from(n: i64) -> Self {
        Self::from_int(n)
    }
}

impl From<BigInt> for HalfInt {
    fn from(n: BigInt) -> Self {
        Self::from_int(n)
    }
}

macro_rules! impl_binop {
    ($trait:ident, $method:ident, $op:tt) => {
        impl $trait<&HalfInt> for &HalfInt {
            type Output = HalfInt;
            fn $method(self, rhs: &HalfInt) -> HalfInt {
                HalfInt { doubled: &self.doubled $op &rhs.doubled }
            }
        }
        impl $trait<HalfInt> for HalfInt {
            type Output = HalfInt;
            fn $method(self, rhs: HalfInt) -> HalfInt {
                HalfInt { doubled: self.doubled $op rhs.doubled }
            }
        }
        impl $trait<&HalfInt> for HalfInt {
            type Output = HalfInt;
            fn $method(self, rhs: &HalfInt) -> HalfInt {
                HalfInt { doubled: self.doubled $op &rhs.doubled }
            }
        }
    };
}

impl_binop!(Add, add, +);
impl_binop!(Sub, sub, -);

impl AddAssign<&HalfInt> for HalfInt {
    fn add_assign(&mut self, rhs: &HalfInt) {
        self.doubled += &rhs.doubled;
    }
}

impl SubAssign<&HalfInt> for HalfInt {
    fn sub_assign(&mut self, rhs: &HalfInt) {
        self.doubled -= &rhs.doubled;
    }
}

impl Neg for HalfInt {
    type Output = HalfInt;
    fn neg(self) -> HalfInt {
        HalfInt {
            doubled: -self.doubled,
        }
    }
}

impl Neg for &HalfInt {
    type Output = HalfInt;
    fn neg(self) -> HalfInt {
        HalfInt {
            doubled: -&self.doubled,
        }
    }
}

impl Mul<i64> for &HalfInt {
    type Output = HalfInt;
    fn mul(self, rhs: i64) -> HalfInt {
        self.scale(rhs)
    }
}

impl Mul<i64> for HalfInt {
    type Output = HalfInt;
    fn mul(self, rhs: i64) -> HalfInt {
        self.scale(rhs)
    }
}
