//! Semisimple conjugacy-class data for the symplectic and (special)
//! orthogonal groups: eigenvalue blocks over extension tori, the `(p, l)`
//! bookkeeping of `+1`/`-1` eigenvalues, centralizer shapes, the
//! quadratic-character sign, block surgery, and exhaustive enumeration at a
//! numeric odd prime power `q`.
//!
//! An eigenvalue block of field degree `r` lives in the cyclic torus of
//! order `q^r - 1` (split, torus sign `+`) or `q^r + 1` (non-split, torus
//! sign `-`) and is stored as an exponent with respect to a generator. Two
//! exponents describe the same block exactly when they differ by inversion
//! or by multiplication by `q` (Frobenius), so the canonical representative
//! is the smallest member of that orbit. Exponent `0` and the half-order
//! exponent are reserved: those are the `+1` and `-1` eigenvalues, which are
//! tracked structurally by the multiplicities `p` and `ell` instead.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::groups::GroupSpec;
use crate::sign::Sign;

/// A nontrivial eigenvalue block, valid relative to a numeric `q`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Eigenvalue {
    #[serde(rename = "r")]
    pub field_degree: u32,
    pub torus_sign: Sign,
    pub exponent: u64,
}

impl Eigenvalue {
    /// Torus order `q^r -+ 1` at a numeric `q`.
    pub fn torus_order(&self, q0: u64) -> u64 {
        let power = q0.pow(self.field_degree);
        match self.torus_sign {
            Sign::Plus => power - 1,
            Sign::Minus => power + 1,
        }
    }

    /// Reduce the exponent to the canonical orbit representative at `q0`:
    /// the minimum over inversion and Frobenius.
    pub fn canonicalize(&self, q0: u64) -> Eigenvalue {
        let modulus = self.torus_order(q0);
        let mut best = self.exponent % modulus;
        let mut x = self.exponent % modulus;
        for _ in 0..self.field_degree {
            best = best.min(x).min((modulus - x) % modulus);
            x = x * (q0 % modulus) % modulus;
        }
        Eigenvalue {
            exponent: best,
            ..*self
        }
    }
}

/// An eigenvalue block with its multiplicity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Block {
    #[serde(flatten)]
    pub eigenvalue: Eigenvalue,
    pub mult: u32,
}

impl Block {
    /// Contribution of this block to the splitness sign of an even
    /// orthogonal ambient: split tori contribute `+` per copy, non-split
    /// tori `-`.
    fn splitness(&self) -> Sign {
        match self.eigenvalue.torus_sign {
            Sign::Plus => Sign::Plus,
            Sign::Minus => Sign::from_parity(u64::from(self.mult)),
        }
    }
}

/// A semisimple conjugacy class, presented by its eigenvalue data.
///
/// `ambient` is the group the class lives in (`Sp`, odd `SO`, or even `SO`;
/// for classification purposes this is the *dual* of the group being
/// classified). `p` and `ell` count the `+1` and `-1` eigenvalue blocks;
/// the forced extra `+1` eigenvalue of an odd special orthogonal group is a
/// property of the ambient kind and is never stored.
///
/// `minus_one_sign` records where the `-1` block sits when the ambient
/// admits two non-conjugate placements: for an odd `SO` ambient it is a
/// free choice, for an even `SO` ambient it is the splitness of the form on
/// the `-1` eigenspace (and the `+1` eigenspace sign is then determined by
/// the total sign). It is present exactly when `ell > 0` in those ambients.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawClass")]
pub struct SemisimpleClass {
    ambient: GroupSpec,
    p: u32,
    ell: u32,
    #[serde(rename = "alpha", skip_serializing_if = "Option::is_none")]
    minus_one_sign: Option<Sign>,
    blocks: Vec<Block>,
}

#[derive(Deserialize)]
struct RawClass {
    ambient: GroupSpec,
    p: u32,
    ell: u32,
    #[serde(rename = "alpha", default)]
    minus_one_sign: Option<Sign>,
    #[serde(default)]
    blocks: Vec<Block>,
}

impl TryFrom<RawClass> for SemisimpleClass {
    type Error = Error;

    fn try_from(raw: RawClass) -> Result<SemisimpleClass> {
        SemisimpleClass::new(raw.ambient, raw.p, raw.ell, raw.minus_one_sign, raw.blocks)
    }
}

impl SemisimpleClass {
    pub fn new(
        ambient: GroupSpec,
        p: u32,
        ell: u32,
        minus_one_sign: Option<Sign>,
        mut blocks: Vec<Block>,
    ) -> Result<SemisimpleClass> {
        let rank = match ambient {
            GroupSpec::Sp { n } => n,
            GroupSpec::SOOdd { m } => m,
            GroupSpec::SOEven { m, .. } => m,
            ref other => {
                return Err(Error::DomainError(format!(
                    "semisimple classes live in Sp, SO(odd) or SO(even) ambients, not {other}"
                )))
            }
        };
        blocks.retain(|b| b.mult > 0);
        blocks.sort();
        for b in &blocks {
            if b.eigenvalue.field_degree == 0 {
                return Err(Error::DomainError(
                    "eigenvalue field degree must be positive".into(),
                ));
            }
            if b.eigenvalue.exponent == 0 {
                return Err(Error::DomainError(
                    "exponent 0 is the eigenvalue +1; store it via p, not as a block".into(),
                ));
            }
        }
        for w in blocks.windows(2) {
            if w[0].eigenvalue == w[1].eigenvalue {
                return Err(Error::DomainError(format!(
                    "duplicate eigenvalue block {:?}",
                    w[0].eigenvalue
                )));
            }
        }
        let weight: u64 = blocks
            .iter()
            .map(|b| u64::from(b.eigenvalue.field_degree) * u64::from(b.mult))
            .sum();
        if u64::from(p) + u64::from(ell) + weight != u64::from(rank) {
            return Err(Error::RankMismatch(format!(
                "p + ell + block weight = {} does not fill ambient rank {rank}",
                u64::from(p) + u64::from(ell) + weight
            )));
        }
        let needs_sign = ell > 0 && !matches!(ambient, GroupSpec::Sp { .. });
        if needs_sign != minus_one_sign.is_some() {
            return Err(Error::DomainError(format!(
                "the -1-block placement sign must be present iff ell > 0 in a (special) \
                 orthogonal ambient (ell = {ell}, ambient {ambient})"
            )));
        }
        let class = SemisimpleClass {
            ambient,
            p,
            ell,
            minus_one_sign,
            blocks,
        };
        // even ambient: the block signs must multiply to the total form sign
        if let GroupSpec::SOEven { sign: total, .. } = class.ambient {
            if class.p == 0 {
                let derived = class.blocks_splitness() * class.minus_one_sign.unwrap_or(Sign::Plus);
                if derived != total {
                    return Err(Error::DomainError(format!(
                        "block signs multiply to {derived}, not the total sign {total}"
                    )));
                }
            }
        }
        Ok(class)
    }

    /// The identity class of the given ambient.
    pub fn identity(ambient: GroupSpec) -> Result<SemisimpleClass> {
        let rank = match ambient {
            GroupSpec::Sp { n } => n,
            GroupSpec::SOOdd { m } | GroupSpec::SOEven { m, .. } => m,
            ref other => {
                return Err(Error::DomainError(format!(
                    "no semisimple classes in {other}"
                )))
            }
        };
        SemisimpleClass::new(ambient, rank, 0, None, vec![])
    }

    pub fn ambient(&self) -> &GroupSpec {
        &self.ambient
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn ell(&self) -> u32 {
        self.ell
    }

    pub fn minus_one_sign(&self) -> Option<Sign> {
        self.minus_one_sign
    }

    pub fn blocks(&self) -> &[Block] {
        &self.blocks
    }

    fn blocks_splitness(&self) -> Sign {
        self.blocks
            .iter()
            .fold(Sign::Plus, |acc, b| acc * b.splitness())
    }

    /// For an even `SO` ambient: the splitness signs of the `-1` and `+1`
    /// eigenspace factors (absent when the multiplicity is zero).
    pub fn even_factor_signs(&self) -> (Option<Sign>, Option<Sign>) {
        let GroupSpec::SOEven { sign: total, .. } = self.ambient else {
            return (None, None);
        };
        let minus = (self.ell > 0).then(|| self.minus_one_sign.expect("validated"));
        let plus =
            (self.p > 0).then(|| total * self.blocks_splitness() * minus.unwrap_or(Sign::Plus));
        (minus, plus)
    }
}

/// A general-linear or unitary centralizer factor: `U_mult^twist(F_{q^d})`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GluFactor {
    pub mult: u32,
    pub twist: Sign,
    pub field_degree: u32,
}

impl GluFactor {
    pub fn group(&self) -> GroupSpec {
        GroupSpec::glu(self.mult, self.twist, self.field_degree)
    }
}

/// The identity component of the centralizer of a semisimple class, split
/// into the factors the unipotent data attaches to, plus the order of the
/// full centralizer's component group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Centralizer {
    pub glu_factors: Vec<GluFactor>,
    /// Classical factor on the `-1` eigenspace.
    pub minus_factor: GroupSpec,
    /// Classical factor on the `+1` eigenspace.
    pub plus_factor: GroupSpec,
    pub component_order: u32,
}

impl Centralizer {
    /// The identity-component shape as a flat product.
    pub fn shape(&self) -> GroupSpec {
        let mut factors: Vec<GroupSpec> = self.glu_factors.iter().map(GluFactor::group).collect();
        factors.push(self.minus_factor.clone());
        factors.push(self.plus_factor.clone());
        GroupSpec::product(factors)
    }
}

/// Identity-component shape and component-group order of the centralizer.
pub fn centralizer(s: &SemisimpleClass) -> Centralizer {
    let glu_factors = s
        .blocks
        .iter()
        .map(|b| GluFactor {
            mult: b.mult,
            twist: b.eigenvalue.torus_sign,
            field_degree: b.eigenvalue.field_degree,
        })
        .collect();
    match s.ambient {
        GroupSpec::Sp { .. } => Centralizer {
            glu_factors,
            minus_factor: GroupSpec::sp(s.ell),
            plus_factor: GroupSpec::sp(s.p),
            component_order: 1,
        },
        GroupSpec::SOOdd { .. } => Centralizer {
            glu_factors,
            minus_factor: GroupSpec::so_even(s.ell, s.minus_one_sign.unwrap_or(Sign::Plus)),
            plus_factor: GroupSpec::so_odd(s.p),
            component_order: if s.ell > 0 { 2 } else { 1 },
        },
        GroupSpec::SOEven { .. } => {
            let (minus_sign, plus_sign) = s.even_factor_signs();
            Centralizer {
                glu_factors,
                minus_factor: GroupSpec::so_even(s.ell, minus_sign.unwrap_or(Sign::Plus)),
                plus_factor: GroupSpec::so_even(s.p, plus_sign.unwrap_or(Sign::Plus)),
                component_order: (1 + u32::from(s.ell > 0)) * (1 + u32::from(s.p > 0)),
            }
        }
        _ => unreachable!("constructor restricts the ambient kind"),
    }
}

/// The product of quadratic-character values over all torus coordinates of
/// the class at a numeric odd `q`.
///
/// A generic block contributes `(-1)^(exponent * mult)`; a `+1` eigenvalue
/// contributes nothing; each `-1` eigenvalue is the half-order element of a
/// split torus and contributes `(-1)^((q-1)/2)`.
pub fn epsilon_sign(s: &SemisimpleClass, q0: u64) -> Sign {
    let mut parity = u64::from(s.ell) * ((q0 - 1) / 2);
    for b in &s.blocks {
        parity += b.eigenvalue.exponent * u64::from(b.mult);
    }
    Sign::from_parity(parity)
}

/// Enumeration limits for numeric-`q` operations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Bounds {
    pub max_rank: u32,
    pub max_q: u64,
}

impl Default for Bounds {
    fn default() -> Bounds {
        Bounds {
            max_rank: 3,
            max_q: 13,
        }
    }
}

impl Bounds {
    pub fn with_max_rank(max_rank: u32) -> Bounds {
        Bounds {
            max_rank,
            ..Bounds::default()
        }
    }
}

fn is_odd_prime_power(q0: u64) -> bool {
    if q0 < 3 || q0.is_multiple_of(2) {
        return false;
    }
    let mut n = q0;
    let mut p = 3u64;
    while p * p <= n {
        if n.is_multiple_of(p) {
            while n.is_multiple_of(p) {
                n /= p;
            }
            return n == 1;
        }
        p += 2;
    }
    true // n itself prime
}

fn check_numeric_q(q0: u64, bounds: &Bounds) -> Result<()> {
    if !is_odd_prime_power(q0) {
        return Err(Error::DomainError(format!(
            "q = {q0} is not an odd prime power"
        )));
    }
    if q0 > bounds.max_q {
        return Err(Error::BoundExceeded(format!(
            "q = {q0} exceeds the bound {}",
            bounds.max_q
        )));
    }
    Ok(())
}

/// Canonical exponent representatives of the degree-`d` eigenvalue orbits
/// in the torus of order `q^d -+ 1`.
///
/// An exponent survives when it is nonzero, not the half-order, minimal in
/// its orbit under inversion and Frobenius, and not fixed (up to inversion)
/// by any proper Frobenius power — the latter would make the block one of
/// smaller field degree.
pub fn eigenvalue_orbit_representatives(field_degree: u32, torus_sign: Sign, q0: u64) -> Vec<u64> {
    let template = Eigenvalue {
        field_degree,
        torus_sign,
        exponent: 1,
    };
    let modulus = template.torus_order(q0);
    let mut reps = Vec::new();
    'outer: for e in 1..modulus {
        if 2 * e == modulus {
            continue;
        }
        let mut x = e;
        for j in 0..field_degree {
            if j > 0 {
                if x == e || modulus - x == e {
                    continue 'outer; // proper field degree is smaller
                }
                if x < e {
                    continue 'outer; // not the orbit minimum
                }
            }
            if modulus - x < e {
                continue 'outer; // the inverse is smaller
            }
            x = x * (q0 % modulus) % modulus;
        }
        // after d Frobenius steps the orbit must close up
        debug_assert!(x == e || modulus - x == e);
        reps.push(e);
    }
    reps
}

/// All semisimple conjugacy classes of the ambient group at a numeric `q`.
///
/// Odd `SO` ambients include both placements of the `-1` eigenvalue when it
/// occurs; even `SO` ambients enumerate classes up to conjugacy in the full
/// orthogonal group (the notion entering even orthogonal classification
/// data), with both splitness splits when `+1` and `-1` both occur.
pub fn enumerate_semisimple_classes(
    ambient: &GroupSpec,
    q0: u64,
    bounds: &Bounds,
) -> Result<Vec<SemisimpleClass>> {
    check_numeric_q(q0, bounds)?;
    let rank = match *ambient {
        GroupSpec::Sp { n } => n,
        GroupSpec::SOOdd { m } | GroupSpec::SOEven { m, .. } => m,
        ref other => {
            return Err(Error::DomainError(format!(
                "no semisimple classes in {other}"
            )))
        }
    };
    if rank > bounds.max_rank {
        return Err(Error::BoundExceeded(format!(
            "ambient rank {rank} exceeds the bound {}",
            bounds.max_rank
        )));
    }

    // all available generic blocks, heaviest field degrees first
    let mut available: Vec<Eigenvalue> = Vec::new();
    for d in 1..=rank {
        for torus_sign in [Sign::Plus, Sign::Minus] {
            for e in eigenvalue_orbit_representatives(d, torus_sign, q0) {
                available.push(Eigenvalue {
                    field_degree: d,
                    torus_sign,
                    exponent: e,
                });
            }
        }
    }

    let mut multisets: Vec<Vec<Block>> = Vec::new();
    fn assign(
        available: &[Eigenvalue],
        idx: usize,
        budget: u32,
        current: &mut Vec<Block>,
        out: &mut Vec<Vec<Block>>,
    ) {
        if idx == available.len() {
            out.push(current.clone());
            return;
        }
        let ev = available[idx];
        let max_mult = budget / ev.field_degree;
        for mult in 0..=max_mult {
            if mult > 0 {
                current.push(Block {
                    eigenvalue: ev,
                    mult,
                });
            }
            assign(
                available,
                idx + 1,
                budget - mult * ev.field_degree,
                current,
                out,
            );
            if mult > 0 {
                current.pop();
            }
        }
    }
    assign(&available, 0, rank, &mut Vec::new(), &mut multisets);

    let mut classes = Vec::new();
    for blocks in multisets {
        let weight: u32 = blocks
            .iter()
            .map(|b| b.eigenvalue.field_degree * b.mult)
            .sum();
        for ell in 0..=(rank - weight) {
            let p = rank - weight - ell;
            match *ambient {
                GroupSpec::Sp { .. } => {
                    classes.push(SemisimpleClass::new(
                        ambient.clone(),
                        p,
                        ell,
                        None,
                        blocks.clone(),
                    )?);
                }
                GroupSpec::SOOdd { .. } => {
                    if ell == 0 {
                        classes.push(SemisimpleClass::new(
                            ambient.clone(),
                            p,
                            ell,
                            None,
                            blocks.clone(),
                        )?);
                    } else {
                        for alpha in [Sign::Plus, Sign::Minus] {
                            classes.push(SemisimpleClass::new(
                                ambient.clone(),
                                p,
                                ell,
                                Some(alpha),
                                blocks.clone(),
                            )?);
                        }
                    }
                }
                GroupSpec::SOEven { sign: total, .. } => {
                    let splitness = blocks.iter().fold(Sign::Plus, |acc, b| acc * b.splitness());
                    if ell == 0 && p == 0 {
                        if splitness == total {
                            classes.push(SemisimpleClass::new(
                                ambient.clone(),
                                p,
                                ell,
                                None,
                                blocks.clone(),
                            )?);
                        }
                    } else if ell == 0 {
                        classes.push(SemisimpleClass::new(
                            ambient.clone(),
                            p,
                            ell,
                            None,
                            blocks.clone(),
                        )?);
                    } else if p == 0 {
                        classes.push(SemisimpleClass::new(
                            ambient.clone(),
                            p,
                            ell,
                            Some(total * splitness),
                            blocks.clone(),
                        )?);
                    } else {
                        for sign in [Sign::Plus, Sign::Minus] {
                            classes.push(SemisimpleClass::new(
                                ambient.clone(),
                                p,
                                ell,
                                Some(sign),
                                blocks.clone(),
                            )?);
                        }
                    }
                }
                _ => unreachable!(),
            }
        }
    }
    classes.sort();
    Ok(classes)
}

/// Block surgery: the semisimple transport underlying the eta and zeta
/// constructions.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BlockSurgery {
    /// Add `count` eigenvalue `-1` blocks. Entering an odd `SO` ambient
    /// (from a symplectic one) requires the placement sign of the combined
    /// `-1` eigenspace; leaving one (to a symplectic ambient) drops it.
    MinusOnes { count: u32, placement: Option<Sign> },
    /// Add a `(2 count + 1)`-dimensional identity: moves an even `SO`
    /// ambient class into the odd `SO` ambient of the enlarged rank.
    IdentityOdd { count: u32 },
    /// Add a `2 count`-dimensional identity inside an even orthogonal space
    /// of the given total sign.
    IdentityEven { count: u32, total_sign: Sign },
}

/// Apply block surgery, producing the class in the enlarged ambient.
pub fn add_blocks(s: &SemisimpleClass, surgery: BlockSurgery) -> Result<SemisimpleClass> {
    match (s.ambient.clone(), surgery) {
        // Sp -> odd SO: the eta transport for odd-dimensional W
        (GroupSpec::Sp { n: m }, BlockSurgery::MinusOnes { count, placement }) => {
            let ell = s.ell + count;
            let sign = if ell > 0 {
                Some(placement.ok_or_else(|| {
                    Error::DomainError(
                        "a placement sign is required to enter an odd SO ambient".into(),
                    )
                })?)
            } else {
                None
            };
            SemisimpleClass::new(
                GroupSpec::so_odd(m + count),
                s.p,
                ell,
                sign,
                s.blocks.clone(),
            )
        }
        // even SO -> odd SO: the eta transport for even-dimensional W
        (GroupSpec::SOEven { m, .. }, BlockSurgery::IdentityOdd { count }) => {
            let (minus_sign, _) = s.even_factor_signs();
            SemisimpleClass::new(
                GroupSpec::so_odd(m + count),
                s.p + count,
                s.ell,
                minus_sign,
                s.blocks.clone(),
            )
        }
        // odd SO -> Sp: the zeta transport for odd-dimensional W; the forced
        // +1 eigenvalue disappears with the odd ambient
        (GroupSpec::SOOdd { m: n }, BlockSurgery::MinusOnes { count, .. }) => SemisimpleClass::new(
            GroupSpec::sp(n + count),
            s.p,
            s.ell + count,
            None,
            s.blocks.clone(),
        ),
        // odd SO -> even SO: the zeta transport for even-dimensional W
        (GroupSpec::SOOdd { m: n }, BlockSurgery::IdentityEven { count, total_sign }) => {
            SemisimpleClass::new(
                GroupSpec::so_even(n + count, total_sign),
                s.p + count,
                s.ell,
                s.minus_one_sign,
                s.blocks.clone(),
            )
        }
        // even SO -> even SO: growing the identity inside the same family
        (GroupSpec::SOEven { m, sign }, BlockSurgery::IdentityEven { count, total_sign }) => {
            if total_sign != sign && m > 0 {
                return Err(Error::RankMismatch(format!(
                    "cannot change the total sign {sign} to {total_sign} by adding identity blocks"
                )));
            }
            SemisimpleClass::new(
                GroupSpec::so_even(m + count, total_sign),
                s.p + count,
                s.ell,
                s.minus_one_sign,
                s.blocks.clone(),
            )
        }
        (ambient, surgery) => Err(Error::RankMismatch(format!(
            "surgery {surgery:?} does not apply to the ambient {ambient}"
        ))),
    }
}
