//! Group specifications and their exact invariants: orders split into a
//! `q`-power and a prime-to-`q` polynomial, Langlands-style duality, Witt
//! indices, and the orders of maximal parabolic quotients (isotropic
//! Grassmannians).

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::qpoly::q_binomial;
use crate::sign::Sign;
use crate::QPoly;

/// A classical group over `F_q`, a (possibly twisted) general-linear factor
/// over an extension field, or a finite product of such.
///
/// Rank parameters follow the matrix sizes: `Sp { n }` is `Sp_{2n}`,
/// `SOOdd { m }` is `SO_{2m+1}`, `SOEven { m, sign }` is `SO_{2m}^sign`, and
/// `Glu { n, twist: Plus, field_degree: d }` is `GL_n(F_{q^d})` while
/// `twist: Minus` gives the unitary group `U_n(F_{q^d})`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub enum GroupSpec {
    Sp {
        n: u32,
    },
    SOOdd {
        m: u32,
    },
    SOEven {
        m: u32,
        sign: Sign,
    },
    OOdd {
        m: u32,
        disc: Sign,
    },
    OEven {
        m: u32,
        sign: Sign,
    },
    Glu {
        n: u32,
        twist: Sign,
        field_degree: u32,
    },
    Product(Vec<GroupSpec>),
}

impl GroupSpec {
    pub fn sp(n: u32) -> Self {
        GroupSpec::Sp { n }
    }

    pub fn so_odd(m: u32) -> Self {
        GroupSpec::SOOdd { m }
    }

    /// `SO_{2m}^sign`; the zero-rank group is always stored with sign `+`.
    pub fn so_even(m: u32, sign: Sign) -> Self {
        if m == 0 {
            GroupSpec::SOEven {
                m,
                sign: Sign::Plus,
            }
        } else {
            GroupSpec::SOEven { m, sign }
        }
    }

    pub fn o_odd(m: u32, disc: Sign) -> Self {
        GroupSpec::OOdd { m, disc }
    }

    pub fn o_even(m: u32, sign: Sign) -> Self {
        if m == 0 {
            GroupSpec::OEven {
                m,
                sign: Sign::Plus,
            }
        } else {
            GroupSpec::OEven { m, sign }
        }
    }

    pub fn glu(n: u32, twist: Sign, field_degree: u32) -> Self {
        GroupSpec::Glu {
            n,
            twist,
            field_degree,
        }
    }

    /// Flattens nested products.
    pub fn product(factors: Vec<GroupSpec>) -> Self {
        let mut flat = Vec::new();
        for f in factors {
            match f {
                GroupSpec::Product(inner) => flat.extend(inner),
                other => flat.push(other),
            }
        }
        GroupSpec::Product(flat)
    }

    /// Dimension of the underlying space for the groups that have one.
    pub fn space_dim(&self) -> Option<u32> {
        match *self {
            GroupSpec::Sp { n } => Some(2 * n),
            GroupSpec::SOOdd { m } | GroupSpec::OOdd { m, .. } => Some(2 * m + 1),
            GroupSpec::SOEven { m, .. } | GroupSpec::OEven { m, .. } => Some(2 * m),
            _ => None,
        }
    }

    /// Maximal dimension of an isotropic subspace.
    pub fn witt_index(&self) -> Option<u32> {
        match *self {
            GroupSpec::Sp { n } => Some(n),
            GroupSpec::SOOdd { m } | GroupSpec::OOdd { m, .. } => Some(m),
            GroupSpec::SOEven { m, sign } | GroupSpec::OEven { m, sign } => match sign {
                Sign::Plus => Some(m),
                Sign::Minus => Some(m.saturating_sub(1)),
            },
            _ => None,
        }
    }
}

/// An exact group order, split as `q^{q_exponent} * prime_to_q(q)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupOrder {
    pub q_exponent: u64,
    pub prime_to_q: QPoly,
}

impl GroupOrder {
    fn trivial() -> Self {
        GroupOrder {
            q_exponent: 0,
            prime_to_q: QPoly::one(),
        }
    }

    fn combine(self, other: GroupOrder) -> GroupOrder {
        GroupOrder {
            q_exponent: self.q_exponent + other.q_exponent,
            prime_to_q: self.prime_to_q * other.prime_to_q,
        }
    }

    /// The full order evaluated at a numeric `q`.
    pub fn eval_at_u64(&self, q0: u64) -> BigInt {
        BigInt::from(q0).pow(self.q_exponent as u32) * self.prime_to_q.eval_at_u64(q0)
    }
}

/// The exact order of `g(F_q)` as a function of `q`.
pub fn order(g: &GroupSpec) -> GroupOrder {
    match g {
        // |Sp_{2n}| = |SO_{2n+1}| = q^{n^2} prod_{i=1}^{n} (q^{2i} - 1)
        GroupSpec::Sp { n } | GroupSpec::SOOdd { m: n } => GroupOrder {
            q_exponent: u64::from(*n) * u64::from(*n),
            prime_to_q: QPoly::geom_range_product(2, 1, i64::from(*n), Sign::Minus),
        },
        // |SO_{2m}^+-| = q^{m(m-1)} (q^m -+ 1) prod_{i=1}^{m-1} (q^{2i} - 1)
        GroupSpec::SOEven { m, sign } => {
            if *m == 0 {
                return GroupOrder::trivial();
            }
            let head = QPoly::two_term(u64::from(*m), sign.flip(), 0);
            GroupOrder {
                q_exponent: u64::from(*m) * (u64::from(*m) - 1),
                prime_to_q: head * QPoly::geom_range_product(2, 1, i64::from(*m) - 1, Sign::Minus),
            }
        }
        // full orthogonal groups have twice the special orthogonal order
        GroupSpec::OOdd { m, .. } => {
            let so = order(&GroupSpec::so_odd(*m));
            GroupOrder {
                q_exponent: so.q_exponent,
                prime_to_q: so.prime_to_q.scale(&BigInt::from(2)),
            }
        }
        GroupSpec::OEven { m, sign } => {
            if *m == 0 {
                // the orthogonal group of a zero-dimensional space is trivial
                return GroupOrder::trivial();
            }
            let so = order(&GroupSpec::so_even(*m, *sign));
            GroupOrder {
                q_exponent: so.q_exponent,
                prime_to_q: so.prime_to_q.scale(&BigInt::from(2)),
            }
        }
        // |GL_n(F_{q^d})| resp. |U_n(F_{q^d})|:
        // q^{d n(n-1)/2} prod_{u=1}^{n} (q^{du} - (+-1)^u)
        GroupSpec::Glu {
            n,
            twist,
            field_degree,
        } => {
            let n64 = u64::from(*n);
            let d = u64::from(*field_degree);
            let mut prime = QPoly::one();
            for u in 1..=n64 {
                let unit_sign = match twist {
                    Sign::Plus => Sign::Plus,
                    Sign::Minus => Sign::from_parity(u),
                };
                // q^{du} - (+-1)^u: subtract +1 or subtract -1
                let factor = match unit_sign {
                    Sign::Plus => QPoly::two_term(d * u, Sign::Minus, 0),
                    Sign::Minus => QPoly::two_term(d * u, Sign::Plus, 0),
                };
                prime = prime * factor;
            }
            GroupOrder {
                q_exponent: d * n64 * (n64 - 1) / 2,
                prime_to_q: prime,
            }
        }
        GroupSpec::Product(factors) => factors
            .iter()
            .map(order)
            .fold(GroupOrder::trivial(), GroupOrder::combine),
    }
}

/// The dual group: `Sp_{2r}` and `SO_{2r+1}` swap, even special orthogonal
/// and general-linear factors are self-dual, products map factor-wise.
///
/// Full orthogonal groups are disconnected and have no dual.
pub fn dual(g: &GroupSpec) -> Result<GroupSpec> {
    match g {
        GroupSpec::Sp { n } => Ok(GroupSpec::so_odd(*n)),
        GroupSpec::SOOdd { m } => Ok(GroupSpec::sp(*m)),
        GroupSpec::SOEven { .. } | GroupSpec::Glu { .. } => Ok(g.clone()),
        GroupSpec::Product(factors) => {
            let duals: Result<Vec<_>> = factors.iter().map(dual).collect();
            Ok(GroupSpec::Product(duals?))
        }
        GroupSpec::OOdd { .. } | GroupSpec::OEven { .. } => Err(Error::NoDual(g.to_string())),
    }
}

/// The index `|G / P_k|` of the maximal parabolic stabilizing a
/// `k`-dimensional isotropic subspace, as a polynomial in `q`; equivalently
/// the number of such subspaces.
pub fn isotropic_parabolic_quotient_order(g: &GroupSpec, k: u32) -> Result<QPoly> {
    let witt = g
        .witt_index()
        .ok_or_else(|| Error::DomainError(format!("{g} has no isotropic subspaces")))?;
    if k > witt {
        return Err(Error::DomainError(format!(
            "corank {k} exceeds the Witt index {witt} of {g}"
        )));
    }
    if k == 0 {
        return Ok(QPoly::one());
    }
    let k64 = u64::from(k);
    Ok(match *g {
        // binom(n,k)_q prod_{j=n-k+1}^{n} (q^j + 1)
        GroupSpec::Sp { n } => {
            let n64 = u64::from(n);
            q_binomial::<BigInt>(n64, k64, 1)?
                * QPoly::geom_range_product(1, (n64 - k64 + 1) as i64, n64 as i64, Sign::Plus)
        }
        // binom(m,k)_q prod_{j=m-k+1}^{m} (q^j + 1)
        GroupSpec::SOOdd { m } | GroupSpec::OOdd { m, .. } => {
            let m64 = u64::from(m);
            q_binomial::<BigInt>(m64, k64, 1)?
                * QPoly::geom_range_product(1, (m64 - k64 + 1) as i64, m64 as i64, Sign::Plus)
        }
        GroupSpec::SOEven { m, sign } | GroupSpec::OEven { m, sign } => {
            let m64 = u64::from(m);
            match sign {
                // binom(m,k)_q prod_{j=m-k}^{m-1} (q^j + 1)
                Sign::Plus => {
                    q_binomial::<BigInt>(m64, k64, 1)?
                        * QPoly::geom_range_product(
                            1,
                            (m64 - k64) as i64,
                            m64 as i64 - 1,
                            Sign::Plus,
                        )
                }
                // binom(m-1,k)_q prod_{j=m-k+1}^{m} (q^j + 1)
                Sign::Minus => {
                    q_binomial::<BigInt>(m64 - 1, k64, 1)?
                        * QPoly::geom_range_product(
                            1,
                            (m64 - k64 + 1) as i64,
                            m64 as i64,
                            Sign::Plus,
                        )
                }
            }
        }
        _ => unreachable!("witt_index filtered other kinds"),
    })
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupSpec::Sp { n } => write!(f, "Sp({})", 2 * n),
            GroupSpec::SOOdd { m } => write!(f, "SO({})", 2 * m + 1),
            GroupSpec::SOEven { m, sign } => write!(f, "SO{sign}({})", 2 * m),
            GroupSpec::OOdd { m, disc } => write!(f, "O({},disc={}1)", 2 * m + 1, disc),
            GroupSpec::OEven { m, sign } => write!(f, "O{sign}({})", 2 * m),
            GroupSpec::Glu {
                n,
                twist,
                field_degree,
            } => {
                let name = if twist.is_plus() { "GL" } else { "U" };
                write!(f, "{name}({n};d={field_degree})")
            }
            GroupSpec::Product(factors) => {
                if factors.is_empty() {
                    return write!(f, "1");
                }
                let parts: Vec<String> = factors.iter().map(|g| g.to_string()).collect();
                write!(f, "{}", parts.join(" x "))
            }
        }
    }
}

impl FromStr for GroupSpec {
    type Err = Error;

    /// Parses the CLI name grammar: `Sp(6)`, `SO(7)`, `SO+(4)`, `SO-(6)`,
    /// `O(5,disc=-1)`, `O+(4)`, `GL(2;d=1)`, `U(2;d=1)`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::ParseError(format!("unrecognized group name {s:?}"));
        let (head, rest) = s.split_once('(').ok_or_else(bad)?;
        let body = rest.strip_suffix(')').ok_or_else(bad)?;
        let parse_dim = |t: &str| -> Result<u32> { t.trim().parse().map_err(|_| bad()) };
        match head {
            "Sp" => {
                let dim = parse_dim(body)?;
                if dim % 2 != 0 {
                    return Err(Error::ParseError(format!(
                        "symplectic dimension must be even, got {dim}"
                    )));
                }
                Ok(GroupSpec::sp(dim / 2))
            }
            "SO" | "SO+" | "SO-" | "O+" | "O-" => {
                let dim = parse_dim(body)?;
                match head {
                    "SO" => {
                        if dim % 2 == 0 {
                            return Err(Error::ParseError(
                                "even special orthogonal groups need a sign, e.g. SO+(4)".into(),
                            ));
                        }
                        Ok(GroupSpec::so_odd(dim / 2))
                    }
                    "SO+" => Ok(GroupSpec::so_even(half_even(dim)?, Sign::Plus)),
                    "SO-" => Ok(GroupSpec::so_even(half_even(dim)?, Sign::Minus)),
                    "O+" => Ok(GroupSpec::o_even(half_even(dim)?, Sign::Plus)),
                    "O-" => Ok(GroupSpec::o_even(half_even(dim)?, Sign::Minus)),
                    _ => unreachable!(),
                }
            }
            "O" => {
                // O(5,disc=-1) or O(5) with split discriminant understood
                let (dim_part, disc) = match body.split_once(',') {
                    None => (body, Sign::Plus),
                    Some((d, opts)) => {
                        let opts = opts.trim();
                        let val = opts
                            .strip_prefix("disc=")
                            .ok_or_else(bad)?
                            .parse::<Sign>()?;
                        (d, val)
                    }
                };
                let dim = parse_dim(dim_part)?;
                if dim % 2 == 0 {
                    return Err(Error::ParseError(
                        "even orthogonal groups are written with a sign, e.g. O+(4)".into(),
                    ));
                }
                Ok(GroupSpec::o_odd(dim / 2, disc))
            }
            "GL" | "U" => {
                let (n_part, d_part) = body.split_once(';').ok_or_else(bad)?;
                let d = d_part.trim().strip_prefix("d=").ok_or_else(bad)?;
                Ok(GroupSpec::glu(
                    parse_dim(n_part)?,
                    if head == "GL" {
                        Sign::Plus
                    } else {
                        Sign::Minus
                    },
                    d.trim().parse().map_err(|_| bad())?,
                ))
            }
            _ => Err(bad()),
        }
    }
}

fn half_even(dim: u32) -> Result<u32> {
    if !dim.is_multiple_of(2) {
        return Err(Error::ParseError(format!(
            "even orthogonal dimension expected, got {dim}"
        )));
    }
    Ok(dim / 2)
}

impl From<GroupSpec> for String {
    fn from(g: GroupSpec) -> String {
        g.to_string()
    }
}

impl TryFrom<String> for GroupSpec {
    type Error = Error;

    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}
