use std::fmt;
use std::ops::Mul;

use serde::{Deserialize, Serialize};

use crate::error::Error;

/// A sign `+1` or `-1`, used for form discriminants, torus splitness,
/// central characters and extension data.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn as_i8(self) -> i8 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn from_i8(v: i8) -> Sign {
        if v >= 0 {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }

    /// Sign of `(-1)^k`.
    pub fn from_parity(k: u64) -> Sign {
        if k.is_multiple_of(2) {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    pub fn is_plus(self) -> bool {
        self == Sign::Plus
    }
}

impl Mul for Sign {
    type Output = Sign;

    fn mul(self, rhs: Sign) -> Sign {
        if self == rhs {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Sign::Plus => write!(f, "+"),
            Sign::Minus => write!(f, "-"),
        }
    }
}

impl std::str::FromStr for Sign {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s.trim() {
            "+" | "+1" | "1" => Ok(Sign::Plus),
            "-" | "-1" => Ok(Sign::Minus),
            other => Err(Error::ParseError(format!("expected sign, got {other:?}"))),
        }
    }
}

impl From<Sign> for String {
    fn from(s: Sign) -> String {
        s.to_string()
    }
}

impl TryFrom<String> for Sign {
    type Error = Error;

    fn try_from(s: String) -> Result<Self, Error> {
        s.parse()
    }
}
