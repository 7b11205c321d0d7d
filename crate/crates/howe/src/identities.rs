//! The combinatorial layer: closed-form dimensions of the top part of a
//! restricted oscillator representation, their decompositions into levels
//! indexed by the multiplicity of the transported eigenvalue, the parabolic
//! recursion they satisfy, the Gaussian-multinomial identities underlying
//! the closed forms, and the end-to-end verification harnesses that match
//! everything against full enumerations of classification data.
//!
//! All identities here live in `Z[q]` and are checked by exact polynomial
//! arithmetic; the harnesses additionally evaluate at a numeric odd prime
//! power.

use num_bigint::BigInt;

use crate::classify::{enumerate_irreps, irrep_dimension, ClassificationData};
use crate::correspond::{DualPairSpec, StableRange};
use crate::error::{Error, Result};
use crate::groups::{isotropic_parabolic_quotient_order, GroupSpec};
use crate::qpoly::q_binomial;
use crate::semisimple::Bounds;
use crate::sign::Sign;
use crate::QPoly;

/// The top-part dimension computed three independent ways, with the
/// per-level summands of the leveled form exposed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TopDimReport {
    pub closed_form: QPoly,
    pub leveled_form: QPoly,
    pub recursive_form: QPoly,
    pub per_level_terms: Vec<QPoly>,
}

impl TopDimReport {
    fn from_parts(closed_form: QPoly, per_level_terms: Vec<QPoly>, recursive_form: QPoly) -> Self {
        let leveled_form = per_level_terms
            .iter()
            .fold(QPoly::zero(), |acc, t| acc + t.clone());
        TopDimReport {
            closed_form,
            leveled_form,
            recursive_form,
            per_level_terms,
        }
    }

    pub fn all_equal(&self) -> bool {
        self.closed_form == self.leveled_form && self.closed_form == self.recursive_form
    }
}

fn choose2(n: u64) -> u64 {
    if n < 2 {
        0
    } else {
        n * (n - 1) / 2
    }
}

fn signed(sign_parity: u64, p: QPoly) -> QPoly {
    if sign_parity.is_multiple_of(2) {
        p
    } else {
        -p
    }
}

/// `prod_{j=0}^{count-1} (q^{2(top-j)} - 1)`.
fn descending_even_product(top: u64, count: u64) -> QPoly {
    let mut acc = QPoly::one();
    for j in 0..count {
        acc = acc * QPoly::two_term(2 * (top - j), Sign::Minus, 0);
    }
    acc
}

// ---------------------------------------------------------------------------
// symplectic stable range: the top part over O(W,B), summed against Sp(2N)
// ---------------------------------------------------------------------------

fn closed_sym_odd(n: u64, m: u64) -> QPoly {
    let mut acc = QPoly::zero();
    for i in 0..=m {
        let term = QPoly::q_power(choose2(m - i) as usize)
            * q_binomial::<BigInt>(m, i, 1).expect("i <= m")
            * QPoly::geom_range_product(1, (i + 1) as i64, m as i64, Sign::Plus)
            * QPoly::q_power(((2 * i + 1) * n) as usize);
        acc = acc + signed(m - i, term);
    }
    acc
}

fn leveled_sym_odd(n: u64, m: u64) -> Vec<QPoly> {
    (0..=m)
        .map(|l| {
            let exp = n + (m - l) * (m - l).saturating_sub(1) + l * l;
            let term = QPoly::q_power(exp as usize)
                * q_binomial::<BigInt>(m, l, 2).expect("l <= m")
                * descending_even_product(n, m - l);
            signed(l, term)
        })
        .collect()
}

fn closed_sym_even_split(n: u64, m: u64) -> QPoly {
    let mut acc = QPoly::zero();
    for i in 0..=m {
        let term = QPoly::q_power(choose2(m - i) as usize)
            * q_binomial::<BigInt>(m, i, 1).expect("i <= m")
            * QPoly::geom_range_product(1, i as i64, m as i64 - 1, Sign::Plus)
            * QPoly::q_power((2 * i * n) as usize);
        acc = acc + signed(m - i, term);
    }
    acc
}

fn closed_sym_even_nonsplit(n: u64, m: u64) -> QPoly {
    let mut acc = QPoly::zero();
    for i in 1..=m {
        let term = QPoly::q_power(choose2(m - i) as usize)
            * q_binomial::<BigInt>(m - 1, i - 1, 1).expect("i <= m")
            * QPoly::geom_range_product(1, (i + 1) as i64, m as i64, Sign::Plus)
            * QPoly::q_power((2 * i * n) as usize);
        acc = acc + signed(m - i, term);
    }
    acc
}

/// Leveled form for even-dimensional `W`; the `(q^{m-l} +- q^l)/(q^m +- 1)`
/// coefficient of each term is an exact polynomial division.
fn leveled_sym_even(n: u64, m: u64, total_sign: Sign) -> Vec<QPoly> {
    (0..=m)
        .map(|l| {
            let exp = l * l.saturating_sub(1) + (m - l) * (m - l).saturating_sub(1);
            let numerator = q_binomial::<BigInt>(m, l, 2).expect("l <= m")
                * QPoly::two_term(m - l, total_sign, l)
                * descending_even_product(n, m - l);
            let denominator = QPoly::two_term(m, total_sign, 0);
            let quotient = numerator
                .exact_div(&denominator)
                .expect("the leveled coefficients divide exactly");
            signed(l, QPoly::q_power(exp as usize) * quotient)
        })
        .collect()
}

/// Parabolic recursion for the symplectic stable range: the oscillator
/// dimension, minus the lower-corank top parts weighted by isotropic
/// parabolic quotient orders of the orthogonal member.
fn recursive_sym(n: u64, w: &GroupSpec) -> Result<QPoly> {
    let corank_space = |j: u32| match *w {
        GroupSpec::OOdd { disc, .. } => GroupSpec::o_odd(j, disc),
        GroupSpec::OEven { sign, .. } => GroupSpec::o_even(j, sign),
        _ => unreachable!("callers pass orthogonal groups"),
    };
    let m = match *w {
        GroupSpec::OOdd { m, .. } | GroupSpec::OEven { m, .. } => m,
        _ => unreachable!(),
    };
    let nonsplit_even = matches!(
        *w,
        GroupSpec::OEven {
            sign: Sign::Minus,
            ..
        }
    );
    let mut tops: Vec<QPoly> = Vec::with_capacity(m as usize + 1);
    for j in 0..=m {
        if j == 0 && nonsplit_even {
            tops.push(QPoly::zero()); // O_0^- does not exist; never referenced
            continue;
        }
        let space = corank_space(j);
        let witt = space.witt_index().expect("orthogonal");
        let w_dim = u64::from(space.space_dim().expect("orthogonal"));
        let mut x = QPoly::q_power((w_dim * n) as usize);
        for k in 1..=witt {
            let quot = isotropic_parabolic_quotient_order(&space, k)?;
            x = x - quot * tops[(j - k) as usize].clone();
        }
        tops.push(x);
    }
    Ok(tops.pop().expect("nonempty"))
}

/// Top-part dimension of the oscillator representation restricted to
/// `(Sp(2N), O(W,B))`, paired against the full orthogonal member: the
/// sum over the orthogonal group's representations of
/// `dim(rho) dim(phi(rho))`, in closed, leveled and recursive form.
///
/// The three forms are exact polynomial identities valid for all `N >= m`,
/// which covers the symplectic stable range with room to spare.
pub fn top_dim_symplectic(n: u32, w: &GroupSpec) -> Result<TopDimReport> {
    let n64 = u64::from(n);
    match *w {
        GroupSpec::OOdd { m, .. } => {
            if n < m {
                return Err(Error::RangeViolation(format!(
                    "N = {n} is too small for dim W = {}",
                    2 * m + 1
                )));
            }
            let m64 = u64::from(m);
            Ok(TopDimReport::from_parts(
                closed_sym_odd(n64, m64),
                leveled_sym_odd(n64, m64),
                recursive_sym(n64, w)?,
            ))
        }
        GroupSpec::OEven { m, sign } => {
            if n < m || (sign == Sign::Minus && m == 0) {
                return Err(Error::RangeViolation(format!(
                    "N = {n} is too small for dim W = {}",
                    2 * m
                )));
            }
            let m64 = u64::from(m);
            let closed = match sign {
                Sign::Plus => closed_sym_even_split(n64, m64),
                Sign::Minus => closed_sym_even_nonsplit(n64, m64),
            };
            Ok(TopDimReport::from_parts(
                closed,
                leveled_sym_even(n64, m64, sign),
                recursive_sym(n64, w)?,
            ))
        }
        ref other => Err(Error::DomainError(format!(
            "the orthogonal member of the pair must be O(odd) or O(even), got {other}"
        ))),
    }
}

// ---------------------------------------------------------------------------
// orthogonal stable range: the top part over Sp(2N), summed against O(W,B)
// ---------------------------------------------------------------------------

fn closed_orth(n: u64, w_dim: u64) -> QPoly {
    let mut acc = QPoly::zero();
    for i in 0..=n {
        let term = QPoly::q_power(choose2(n - i) as usize)
            * q_binomial::<BigInt>(n, i, 1).expect("i <= n")
            * QPoly::geom_range_product(1, (i + 1) as i64, n as i64, Sign::Plus)
            * QPoly::q_power((i * w_dim) as usize);
        acc = acc + signed(n - i, term);
    }
    acc
}

/// Level term for odd-dimensional `W`: vanishing order `(N-l)^2 + l(l-1)`
/// in `q`, a base-`q^2` binomial, and a descending even product in `m`.
pub fn x_level_term(l: u32, n: u32, m: u32) -> QPoly {
    let (l, n, m) = (u64::from(l), u64::from(n), u64::from(m));
    let exp = (n - l) * (n - l) + l * l.saturating_sub(1);
    signed(
        l,
        QPoly::q_power(exp as usize)
            * q_binomial::<BigInt>(n, l, 2).expect("l <= n")
            * descending_even_product(m, n - l),
    )
}

/// Level term for even-dimensional `W`.
pub fn y_level_term(l: u32, n: u32, m: u32) -> QPoly {
    let (l, n, m) = (u64::from(l), u64::from(n), u64::from(m));
    let exp = l * l + (n - l) * (n - l).saturating_sub(1);
    let mut product = QPoly::one();
    for i in 1..=(n - l) {
        product = product * QPoly::two_term(2 * (m - n + l + i), Sign::Minus, 0);
    }
    signed(
        l,
        QPoly::q_power(exp as usize) * q_binomial::<BigInt>(n, l, 2).expect("l <= n") * product,
    )
}

/// Parabolic recursion over symplectic coranks.
fn recursive_orth(n: u32, w_dim: u64) -> Result<QPoly> {
    let mut tops: Vec<QPoly> = Vec::with_capacity(n as usize + 1);
    for j in 0..=n {
        let mut x = QPoly::q_power((w_dim * u64::from(j)) as usize);
        for k in 1..=j {
            let quot = isotropic_parabolic_quotient_order(&GroupSpec::sp(j), k)?;
            x = x - quot * tops[(j - k) as usize].clone();
        }
        tops.push(x);
    }
    Ok(tops.pop().expect("nonempty"))
}

/// Top-part dimension of the oscillator representation restricted to
/// `(Sp(2N), O(W,B))`, paired against the symplectic member: the sum of
/// `dim(rho) dim(psi(rho))` over the symplectic group's representations.
///
/// Valid as a polynomial identity for all `m >= N`; the orthogonal stable
/// range sits inside that.
pub fn top_dim_orthogonal(n: u32, w: &GroupSpec) -> Result<TopDimReport> {
    let (m, w_dim, per_level): (u32, u64, Vec<QPoly>) = match *w {
        GroupSpec::OOdd { m, .. } => (
            m,
            2 * u64::from(m) + 1,
            (0..=n).map(|l| x_level_term(l, n, m)).collect(),
        ),
        GroupSpec::OEven { m, .. } => (
            m,
            2 * u64::from(m),
            (0..=n).map(|l| y_level_term(l, n, m)).collect(),
        ),
        ref other => {
            return Err(Error::DomainError(format!(
                "the orthogonal member of the pair must be O(odd) or O(even), got {other}"
            )))
        }
    };
    if m < n {
        return Err(Error::RangeViolation(format!(
            "dim W = {w_dim} is too small for N = {n}"
        )));
    }
    Ok(TopDimReport::from_parts(
        closed_orth(u64::from(n), w_dim),
        per_level,
        recursive_orth(n, w_dim)?,
    ))
}

// ---------------------------------------------------------------------------
// Gaussian multinomial identities
// ---------------------------------------------------------------------------

fn compositions(total: u32) -> Vec<Vec<u32>> {
    if total == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for first in 1..=total {
        for mut rest in compositions(total - first) {
            let mut c = vec![first];
            c.append(&mut rest);
            out.push(c);
        }
    }
    out
}

/// First identity family: the alternating sum of Gaussian multinomials over
/// compositions of `m` collapses to a single power of `q`,
/// `sum_c (-1)^{len(c)-1} [m]_q! / prod_k [c_k]_q! = (-1)^{m-1} q^{m(m-1)/2}`.
fn chain_identity_holds(m: u32, perturb: bool) -> bool {
    let m64 = u64::from(m);
    let full = QPoly::geom_range_product(1, 1, m64 as i64, Sign::Minus);
    let mut acc = QPoly::zero();
    for c in compositions(m) {
        let mut den = QPoly::one();
        for &part in &c {
            den = den * QPoly::geom_range_product(1, 1, i64::from(part), Sign::Minus);
        }
        let term = full
            .exact_div(&den)
            .expect("Gaussian multinomials are polynomials");
        acc = acc + signed(c.len() as u64 + 1, term);
    }
    let exponent = choose2(m64) + u64::from(perturb);
    acc == signed(m64 + 1, QPoly::q_power(exponent as usize))
}

/// Second identity family: resummation of the binomial-pair coefficients,
/// `sum_k q^{k^2 + (l-k)(l-k-1)} (m over k)_{q^2} (m-k over l-k)_{q^2}
///  = q^{l(l-1)/2} (m over l)_{q^2} prod_{j=1}^{l} (q^j + 1)`.
fn pair_identity_holds(m: u32, l: u32, perturb: bool) -> bool {
    let (m64, l64) = (u64::from(m), u64::from(l));
    let mut lhs = QPoly::zero();
    for k in 0..=l64 {
        let exp = k * k + (l64 - k) * (l64 - k).saturating_sub(1);
        lhs = lhs
            + QPoly::q_power(exp as usize)
                * q_binomial::<BigInt>(m64, k, 2).expect("k <= m")
                * q_binomial::<BigInt>(m64 - k, l64 - k, 2).expect("l <= m");
    }
    let exponent = choose2(l64) + u64::from(perturb);
    let rhs = QPoly::q_power(exponent as usize)
        * q_binomial::<BigInt>(m64, l64, 2).expect("l <= m")
        * QPoly::geom_range_product(1, 1, l64 as i64, Sign::Plus);
    lhs == rhs
}

/// Both Gaussian-multinomial identity families, verified symbolically for
/// every sub-index up to `m`.
pub fn check_q_multinomial(m: u32) -> bool {
    (0..=m).all(|k| chain_identity_holds(k, false))
        && (0..=m).all(|mm| (0..=mm).all(|l| pair_identity_holds(mm, l, false)))
}

/// Negative control: the same identities with an off-by-one exponent on the
/// right-hand side, which must fail for every `m >= 1`.
pub fn check_q_multinomial_perturbed(m: u32) -> bool {
    (1..=m).all(|k| chain_identity_holds(k, true))
        && (1..=m).all(|mm| (1..=mm).all(|l| pair_identity_holds(mm, l, true)))
}

// ---------------------------------------------------------------------------
// verification harnesses
// ---------------------------------------------------------------------------

/// One summand of the correspondence identity.
#[derive(Debug, Clone)]
pub struct WitnessRow {
    pub input: ClassificationData,
    pub image: ClassificationData,
    pub dim_input: BigInt,
    pub dim_image: BigInt,
}

/// Result of matching a top-part dimension against a full enumeration.
#[derive(Debug, Clone)]
pub struct CorrespondenceReport {
    pub lhs: BigInt,
    pub rhs: BigInt,
    pub equal: bool,
    pub witnesses: Vec<WitnessRow>,
}

/// Check `dim(top part) = sum_rho dim(rho) dim(transfer(rho))` at a numeric
/// odd prime power, enumerating the source side in full.
pub fn verify_correspondence_identity(
    pair: &DualPairSpec,
    q0: u64,
    bounds: &Bounds,
) -> Result<CorrespondenceReport> {
    let range = pair.stable_range().ok_or_else(|| {
        Error::RangeViolation(format!(
            "(Sp({}), {}) is in neither stable range",
            2 * pair.n_half,
            pair.w
        ))
    })?;
    let (lhs_poly, source) = match range {
        StableRange::Symplectic => (
            top_dim_symplectic(pair.n_half, &pair.w)?.closed_form,
            pair.w.clone(),
        ),
        StableRange::Orthogonal => (
            top_dim_orthogonal(pair.n_half, &pair.w)?.closed_form,
            GroupSpec::sp(pair.n_half),
        ),
    };
    let lhs = lhs_poly.eval_at_u64(q0);
    let mut rhs = BigInt::from(0);
    let mut witnesses = Vec::new();
    for input in enumerate_irreps(&source, q0, bounds)? {
        let image = match range {
            StableRange::Symplectic => crate::correspond::phi(pair, &input, q0)?,
            StableRange::Orthogonal => crate::correspond::psi(pair, &input, q0)?,
        };
        let dim_input = irrep_dimension(&input)?.eval_at_u64_integer(q0)?;
        let dim_image = irrep_dimension(&image)?.eval_at_u64_integer(q0)?;
        rhs += &dim_input * &dim_image;
        witnesses.push(WitnessRow {
            input,
            image,
            dim_input,
            dim_image,
        });
    }
    Ok(CorrespondenceReport {
        equal: lhs == rhs,
        lhs,
        rhs,
        witnesses,
    })
}

/// Result of summing all coranks of the decomposition.
#[derive(Debug, Clone)]
pub struct DecompositionReport {
    pub total: BigInt,
    pub expected: BigInt,
    pub equal: bool,
}

/// Check that the top parts of all coranks, each weighted by the isotropic
/// parabolic quotient order, sum to the full oscillator dimension
/// `q^{N dim W}`.
pub fn verify_full_decomposition(pair: &DualPairSpec, q0: u64) -> Result<DecompositionReport> {
    let range = pair.stable_range().ok_or_else(|| {
        Error::RangeViolation(format!(
            "(Sp({}), {}) is in neither stable range",
            2 * pair.n_half,
            pair.w
        ))
    })?;
    let mut total = BigInt::from(0);
    match range {
        StableRange::Symplectic => {
            let witt = pair.witt_index();
            for k in 0..=witt {
                let quot = isotropic_parabolic_quotient_order(&pair.w, k)?.eval_at_u64(q0);
                let smaller = match pair.w {
                    GroupSpec::OOdd { m, disc } => GroupSpec::o_odd(m - k, disc),
                    GroupSpec::OEven { m, sign } => GroupSpec::o_even(m - k, sign),
                    _ => unreachable!(),
                };
                let top = top_dim_symplectic(pair.n_half, &smaller)?
                    .closed_form
                    .eval_at_u64(q0);
                total += quot * top;
            }
        }
        StableRange::Orthogonal => {
            for k in 0..=pair.n_half {
                let quot = isotropic_parabolic_quotient_order(&GroupSpec::sp(pair.n_half), k)?
                    .eval_at_u64(q0);
                let top = top_dim_orthogonal(pair.n_half - k, &pair.w)?
                    .closed_form
                    .eval_at_u64(q0);
                total += quot * top;
            }
        }
    }
    let expected = BigInt::from(q0).pow(pair.n_half * pair.w_dim());
    Ok(DecompositionReport {
        equal: total == expected,
        total,
        expected,
    })
}
