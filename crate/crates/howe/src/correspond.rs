//! The transfer maps between classification data of orthogonal and
//! symplectic groups inside a reductive dual pair, in the two stable
//! ranges: `phi` carries orthogonal data to symplectic data (the eta
//! correspondence), `psi` carries symplectic data to orthogonal data (the
//! zeta correspondence).
//!
//! Both maps follow the same pattern: enlarge the semisimple class by `-1`
//! eigenvalues (odd-dimensional `W`) or `+1` eigenvalues (even-dimensional
//! `W`), then append one coordinate to the symbol of the affected unipotent
//! factor, in the row selected by the input's sign data; the remaining sign
//! is transported through the quadratic-character sign of the class and the
//! discriminant or total sign of the form.

use num_bigint::BigInt;

use crate::classify::{irrep_dimension, ClassificationData, UnipotentDatum};
use crate::error::{Error, Result};
use crate::groups::{order, GroupSpec};
use crate::semisimple::{add_blocks, epsilon_sign, BlockSurgery};
use crate::sign::Sign;
use crate::symbols::Symbol;
use crate::{QPoly, QRatPoly};

/// Which of the two stable ranges a pair sits in.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StableRange {
    /// `dim W <= dim V / 2`.
    Symplectic,
    /// `dim V <=` the Witt index of `W`.
    Orthogonal,
}

/// A reductive dual pair `(Sp(2N), O(W,B))`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DualPairSpec {
    /// Half the symplectic dimension, `dim V = 2N`.
    pub n_half: u32,
    /// The orthogonal group of `(W, B)`: odd with a discriminant, or even
    /// with a total sign.
    pub w: GroupSpec,
}

impl DualPairSpec {
    pub fn new(n_half: u32, w: GroupSpec) -> Result<DualPairSpec> {
        match w {
            GroupSpec::OOdd { .. } | GroupSpec::OEven { .. } => Ok(DualPairSpec { n_half, w }),
            other => Err(Error::DomainError(format!(
                "the orthogonal member of a dual pair must be a full orthogonal group, got {other}"
            ))),
        }
    }

    pub fn w_dim(&self) -> u32 {
        self.w
            .space_dim()
            .expect("orthogonal groups act on a space")
    }

    pub fn witt_index(&self) -> u32 {
        self.w
            .witt_index()
            .expect("orthogonal groups have a Witt index")
    }

    pub fn is_symplectic_stable(&self) -> bool {
        self.w_dim() <= self.n_half
    }

    pub fn is_orthogonal_stable(&self) -> bool {
        2 * self.n_half <= self.witt_index()
    }

    pub fn stable_range(&self) -> Option<StableRange> {
        if self.is_symplectic_stable() {
            Some(StableRange::Symplectic)
        } else if self.is_orthogonal_stable() {
            Some(StableRange::Orthogonal)
        } else {
            None
        }
    }

    fn require_symplectic_stable(&self) -> Result<()> {
        if self.is_symplectic_stable() {
            Ok(())
        } else {
            Err(Error::RangeViolation(format!(
                "dim W = {} exceeds N = {}",
                self.w_dim(),
                self.n_half
            )))
        }
    }

    fn require_orthogonal_stable(&self) -> Result<()> {
        if self.is_orthogonal_stable() {
            Ok(())
        } else {
            Err(Error::RangeViolation(format!(
                "dim V = {} exceeds the Witt index {} of W",
                2 * self.n_half,
                self.witt_index()
            )))
        }
    }
}

/// Append `value` to the oriented rows, bottom for `+` and top for `-`.
fn append_by_sign(
    mut top: Vec<u32>,
    mut bottom: Vec<u32>,
    sign: Sign,
    value: u32,
) -> Result<Symbol> {
    let row = match sign {
        Sign::Plus => &mut bottom,
        Sign::Minus => &mut top,
    };
    if let Some(&last) = row.last() {
        if value <= last {
            return Err(Error::OrderViolation(format!(
                "coordinate {value} does not exceed the last entry {last}"
            )));
        }
    }
    row.push(value);
    Symbol::new(top, bottom)
}

/// Degenerate symbols take the new coordinate on the top row.
fn append_degenerate(symbol: &Symbol, value: u32) -> Result<Symbol> {
    let mut top = symbol.top().to_vec();
    if let Some(&last) = top.last() {
        if value <= last {
            return Err(Error::OrderViolation(format!(
                "coordinate {value} does not exceed the last entry {last}"
            )));
        }
    }
    top.push(value);
    Symbol::new(top, symbol.bottom().to_vec())
}

/// The eta-side transfer: classification data of `O(W,B)` to classification
/// data of `Sp(2N)`, for pairs in the symplectic stable range.
///
/// The numeric `q` only enters through the quadratic-character sign of the
/// input class; everything else is symbolic.
pub fn phi(pair: &DualPairSpec, d: &ClassificationData, q0: u64) -> Result<ClassificationData> {
    if d.group() != &pair.w {
        return Err(Error::TypeMismatch(format!(
            "datum belongs to {}, not to the pair's {}",
            d.group(),
            pair.w
        )));
    }
    pair.require_symplectic_stable()?;
    let n = pair.n_half;
    match pair.w {
        GroupSpec::OOdd { m, disc } => {
            let gamma = d.extension_signs()[0];
            let class = add_blocks(
                d.semisimple(),
                BlockSurgery::MinusOnes {
                    count: n - m,
                    placement: Some(gamma),
                },
            )?;
            let (lam, mu) = d.unipotent().minus_symbol.rows_defect_one_mod_four()?;
            let rows = (lam.len() + mu.len()) as u32;
            let coordinate = n - m + (rows - 1) / 2;
            let minus_symbol = append_by_sign(lam, mu, gamma, coordinate)?;
            let central = disc * epsilon_sign(d.semisimple(), q0);
            ClassificationData::new(
                GroupSpec::sp(n),
                class,
                UnipotentDatum {
                    glu: d.unipotent().glu.clone(),
                    minus_symbol,
                    plus_symbol: d.unipotent().plus_symbol.clone(),
                },
                Some(central),
                vec![],
            )
        }
        GroupSpec::OEven { m, .. } => {
            let class = add_blocks(d.semisimple(), BlockSurgery::IdentityOdd { count: n - m })?;
            let plus = &d.unipotent().plus_symbol;
            let rows = (plus.top().len() + plus.bottom().len()) as u32;
            let coordinate = n - m + rows / 2;
            let (alpha, beta) = split_even_signs(d);
            let plus_symbol = if plus.is_degenerate() {
                append_degenerate(plus, coordinate)?
            } else {
                let alpha = alpha.expect("non-degenerate +1 symbol carries a sign");
                append_by_sign(
                    plus.top().to_vec(),
                    plus.bottom().to_vec(),
                    alpha,
                    coordinate,
                )?
            };
            ClassificationData::new(
                GroupSpec::sp(n),
                class,
                UnipotentDatum {
                    glu: d.unipotent().glu.clone(),
                    minus_symbol: d.unipotent().minus_symbol.clone(),
                    plus_symbol,
                },
                beta,
                vec![],
            )
        }
        _ => unreachable!("DualPairSpec::new restricts the orthogonal member"),
    }
}

/// Split the extension data of an even orthogonal datum into the sign for
/// the `+1` eigenvalues and the sign for the `-1` eigenvalues.
fn split_even_signs(d: &ClassificationData) -> (Option<Sign>, Option<Sign>) {
    let signs = d.extension_signs();
    let a = d.a_s() as usize;
    let b = d.b_s() as usize;
    let alpha = (a == 1).then(|| signs[0]);
    let beta = (b == 1).then(|| signs[a]);
    (alpha, beta)
}

/// The zeta-side transfer: classification data of `Sp(2N)` to extended
/// classification data of `O(W,B)`, for pairs in the orthogonal stable
/// range.
pub fn psi(pair: &DualPairSpec, d: &ClassificationData, q0: u64) -> Result<ClassificationData> {
    let n = pair.n_half;
    if d.group() != &GroupSpec::sp(n) {
        return Err(Error::TypeMismatch(format!(
            "datum belongs to {}, not to the pair's Sp({})",
            d.group(),
            2 * n
        )));
    }
    pair.require_orthogonal_stable()?;
    match pair.w {
        GroupSpec::OOdd { m, disc } => {
            let class = add_blocks(
                d.semisimple(),
                BlockSurgery::MinusOnes {
                    count: m - n,
                    placement: None,
                },
            )?;
            let minus = &d.unipotent().minus_symbol;
            let rows = (minus.top().len() + minus.bottom().len()) as u32;
            let coordinate = m - n + rows / 2;
            let minus_symbol = if minus.is_degenerate() {
                append_degenerate(minus, coordinate)?
            } else {
                let sign = d.central_sign().expect("non-degenerate -1 symbol splits");
                append_by_sign(
                    minus.top().to_vec(),
                    minus.bottom().to_vec(),
                    sign,
                    coordinate,
                )?
            };
            let extension = epsilon_sign(d.semisimple(), q0) * disc;
            ClassificationData::new(
                pair.w.clone(),
                class,
                UnipotentDatum {
                    glu: d.unipotent().glu.clone(),
                    minus_symbol,
                    plus_symbol: d.unipotent().plus_symbol.clone(),
                },
                None,
                vec![extension],
            )
        }
        GroupSpec::OEven { m, sign: total } => {
            let class = add_blocks(
                d.semisimple(),
                BlockSurgery::IdentityEven {
                    count: m - n,
                    total_sign: total,
                },
            )?;
            // the sign of the grown +1 factor is determined by the total sign
            let beta = class
                .even_factor_signs()
                .1
                .expect("the stable range forces +1 eigenvalues");
            let (lam, mu) = d.unipotent().plus_symbol.rows_defect_one_mod_four()?;
            let rows = (lam.len() + mu.len()) as u32;
            let coordinate = m - n + (rows - 1) / 2;
            let plus_symbol = append_by_sign(lam, mu, beta, coordinate)?;
            let datum = UnipotentDatum {
                glu: d.unipotent().glu.clone(),
                minus_symbol: d.unipotent().minus_symbol.clone(),
                plus_symbol,
            };
            // extension data: the +1-eigenvalue sign is always +1 in the
            // stable range; the -1 sign is the input central character
            let mut signs = Vec::new();
            if class.p() > 0 && !datum.plus_symbol.is_degenerate() {
                signs.push(Sign::Plus);
            }
            if let Some(central) = d.central_sign() {
                signs.push(central);
            }
            ClassificationData::new(pair.w.clone(), class, datum, None, signs)
        }
        _ => unreachable!(),
    }
}

/// Closed form for the dimension of `phi(d)` in the odd symplectic stable
/// case, as a function of `N` evaluated exactly: the input dimension times
/// `prod_{i=N'+1}^{N} (q^{2i}-1) prod_a (q^{N'} + a q^{lambda_i})
/// prod_b (q^{N'} - a q^{mu_i})` over
/// `2 q^{((rows-1)/2)^2} |SO_{2m+1}|_{q'}`, where `rows` counts the entries
/// of the `-1`-factor symbol of the input.
pub fn phi_dimension_closed_form(pair: &DualPairSpec, d: &ClassificationData) -> Result<QRatPoly> {
    let GroupSpec::OOdd { m, .. } = pair.w else {
        return Err(Error::DomainError(
            "the closed form covers odd-dimensional W only".into(),
        ));
    };
    if d.group() != &pair.w {
        return Err(Error::TypeMismatch(format!(
            "datum belongs to {}, not to the pair's {}",
            d.group(),
            pair.w
        )));
    }
    pair.require_symplectic_stable()?;
    let n = pair.n_half;
    let alpha = d.extension_signs()[0];
    let (lam, mu) = d.unipotent().minus_symbol.rows_defect_one_mod_four()?;
    let rows = (lam.len() + mu.len()) as u64;
    let coordinate = u64::from(n - m) + (rows - 1) / 2;

    let mut numerator = irrep_dimension(d)?;
    numerator = numerator
        * QPoly::geom_range_product(2, coordinate as i64 + 1, i64::from(n), Sign::Minus)
            .to_rational();
    for &x in &lam {
        numerator = numerator * QPoly::two_term(coordinate, alpha, u64::from(x)).to_rational();
    }
    for &x in &mu {
        numerator =
            numerator * QPoly::two_term(coordinate, alpha.flip(), u64::from(x)).to_rational();
    }

    // the q-power downstairs is the square of c = (rows - 1)/2, the shift
    // in the alternating exponent sum when one coordinate is appended
    let c = (rows - 1) / 2;
    let denominator = QPoly::q_power((c * c) as usize).scale(&BigInt::from(2))
        * order(&GroupSpec::so_odd(m)).prime_to_q;
    numerator.exact_div(&denominator.to_rational())
}

/// Dimension of the image under whichever map the stable range selects;
/// a convenience used by the verification harnesses.
pub fn image_dimension(pair: &DualPairSpec, d: &ClassificationData, q0: u64) -> Result<QRatPoly> {
    let image = match pair.stable_range() {
        Some(StableRange::Symplectic) => phi(pair, d, q0)?,
        Some(StableRange::Orthogonal) => psi(pair, d, q0)?,
        None => {
            return Err(Error::RangeViolation(format!(
                "(Sp({}), {}) is in neither stable range",
                2 * pair.n_half,
                pair.w
            )))
        }
    };
    irrep_dimension(&image)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classify::{enumerate_irreps, n_rank, oscillator_datum};
    use crate::semisimple::Bounds;
    use num_rational::BigRational;
    use std::collections::HashSet;

    fn half(p: QPoly) -> QRatPoly {
        p.to_rational()
            .scale(&BigRational::new(BigInt::from(1), BigInt::from(2)))
    }

    fn sym(top: &[u32], bottom: &[u32]) -> Symbol {
        Symbol::new(top.to_vec(), bottom.to_vec()).unwrap()
    }

    /// The trivial representation of O_3 with the given extension sign.
    fn o3_trivial(disc: Sign, extension: Sign) -> ClassificationData {
        let all = enumerate_irreps(&GroupSpec::o_odd(1, disc), 3, &Bounds::default()).unwrap();
        all.into_iter()
            .find(|d| {
                d.extension_signs() == [extension]
                    && d.semisimple().p() == 1
                    && irrep_dimension(d).unwrap().is_one()
            })
            .expect("the trivial representation occurs")
    }

    #[test]
    fn phi_on_the_trivial_o3_representation() {
        let pair = DualPairSpec::new(3, GroupSpec::o_odd(1, Sign::Plus)).unwrap();
        // extension sign +1: the -1 block is split and the new coordinate
        // goes on the bottom row
        let image = phi(&pair, &o3_trivial(Sign::Plus, Sign::Plus), 3).unwrap();
        assert_eq!(image.group(), &GroupSpec::sp(3));
        assert_eq!(image.semisimple().ell(), 2);
        assert_eq!(image.semisimple().minus_one_sign(), Some(Sign::Plus));
        assert_eq!(image.unipotent().minus_symbol, sym(&[0], &[2]));
        assert_eq!(image.central_sign(), Some(Sign::Plus));
        let dim = irrep_dimension(&image).unwrap();
        // (q^6-1)(q^2+1) / (2 (q^2-1))
        let expected = (QPoly::two_term(6, Sign::Minus, 0) * QPoly::from_i64_coeffs(&[1, 0, 1]))
            .to_rational()
            .exact_div(&QPoly::from_i64_coeffs(&[-2, 0, 2]).to_rational())
            .unwrap();
        assert_eq!(dim, expected);
        // and the closed form agrees
        let closed = phi_dimension_closed_form(&pair, &o3_trivial(Sign::Plus, Sign::Plus)).unwrap();
        assert_eq!(closed, expected);

        // extension sign -1: top row, non-split block
        let image = phi(&pair, &o3_trivial(Sign::Plus, Sign::Minus), 3).unwrap();
        assert_eq!(image.unipotent().minus_symbol, sym(&[0, 2], &[]));
        assert_eq!(image.semisimple().minus_one_sign(), Some(Sign::Minus));
        let closed =
            phi_dimension_closed_form(&pair, &o3_trivial(Sign::Plus, Sign::Minus)).unwrap();
        // (q^6-1)/2
        assert_eq!(closed, half(QPoly::two_term(6, Sign::Minus, 0)));
        assert_eq!(irrep_dimension(&image).unwrap(), closed);
    }

    #[test]
    fn phi_range_gate() {
        let d = o3_trivial(Sign::Plus, Sign::Plus);
        // the boundary N = dim W succeeds
        let pair = DualPairSpec::new(3, GroupSpec::o_odd(1, Sign::Plus)).unwrap();
        assert!(phi(&pair, &d, 3).is_ok());
        // one short of it is a range violation
        let pair = DualPairSpec::new(2, GroupSpec::o_odd(1, Sign::Plus)).unwrap();
        assert!(matches!(phi(&pair, &d, 3), Err(Error::RangeViolation(_))));
    }

    #[test]
    fn psi_matches_the_rank_one_zeta_table() {
        // input: the four half-dimension data of Sp_2 over the sigma_1^+-
        // classes; images in O_{2m+1} carry the concatenated symbols with
        // the displayed dimensions
        for m in 2..=4u32 {
            let pair = DualPairSpec::new(1, GroupSpec::o_odd(m, Sign::Plus)).unwrap();
            let qm = u64::from(m);

            let plus_plus = psi(
                &pair,
                &oscillator_datum(1, Sign::Plus, Sign::Plus).unwrap(),
                3,
            )
            .unwrap();
            assert_eq!(plus_plus.unipotent().minus_symbol, sym(&[1], &[0, m]));
            // (q^m - 1)(q^m + q) / (2 (q - 1))
            let expected = (QPoly::two_term(qm, Sign::Minus, 0)
                * QPoly::two_term(qm, Sign::Plus, 1))
            .to_rational()
            .exact_div(&QPoly::from_i64_coeffs(&[-2, 2]).to_rational())
            .unwrap();
            assert_eq!(
                irrep_dimension(&plus_plus).unwrap(),
                expected,
                "m={m} (+,+)"
            );

            let plus_minus = psi(
                &pair,
                &oscillator_datum(1, Sign::Plus, Sign::Minus).unwrap(),
                3,
            )
            .unwrap();
            assert_eq!(plus_minus.unipotent().minus_symbol, sym(&[1, m], &[0]));
            // (q^m + 1)(q^m - q) / (2 (q - 1))
            let expected = (QPoly::two_term(qm, Sign::Plus, 0)
                * QPoly::two_term(qm, Sign::Minus, 1))
            .to_rational()
            .exact_div(&QPoly::from_i64_coeffs(&[-2, 2]).to_rational())
            .unwrap();
            assert_eq!(
                irrep_dimension(&plus_minus).unwrap(),
                expected,
                "m={m} (+,-)"
            );

            let minus_plus = psi(
                &pair,
                &oscillator_datum(1, Sign::Minus, Sign::Plus).unwrap(),
                3,
            )
            .unwrap();
            assert_eq!(minus_plus.unipotent().minus_symbol, sym(&[0, 1], &[m]));
            // (q^m + 1)(q^m + q) / (2 (q + 1))
            let expected = (QPoly::two_term(qm, Sign::Plus, 0)
                * QPoly::two_term(qm, Sign::Plus, 1))
            .to_rational()
            .exact_div(&QPoly::from_i64_coeffs(&[2, 2]).to_rational())
            .unwrap();
            assert_eq!(
                irrep_dimension(&minus_plus).unwrap(),
                expected,
                "m={m} (-,+)"
            );

            let minus_minus = psi(
                &pair,
                &oscillator_datum(1, Sign::Minus, Sign::Minus).unwrap(),
                3,
            )
            .unwrap();
            assert_eq!(minus_minus.unipotent().minus_symbol, sym(&[0, 1, m], &[]));
            // (q^m - 1)(q^m - q) / (2 (q + 1))
            let expected = (QPoly::two_term(qm, Sign::Minus, 0)
                * QPoly::two_term(qm, Sign::Minus, 1))
            .to_rational()
            .exact_div(&QPoly::from_i64_coeffs(&[2, 2]).to_rational())
            .unwrap();
            assert_eq!(
                irrep_dimension(&minus_minus).unwrap(),
                expected,
                "m={m} (-,-)"
            );
        }
    }

    #[test]
    fn psi_level_zero_scales_by_the_induction_factor() {
        // data over classes without -1 eigenvalues gain a trivial factor
        // and scale by (q^{2m} - 1)/(q^2 - 1) when N = 1
        let m = 3u32;
        let pair = DualPairSpec::new(1, GroupSpec::o_odd(m, Sign::Minus)).unwrap();
        let ratio = QPoly::two_term(2 * u64::from(m), Sign::Minus, 0)
            .to_rational()
            .exact_div(&QPoly::from_i64_coeffs(&[-1, 0, 1]).to_rational())
            .unwrap();
        for d in enumerate_irreps(&GroupSpec::sp(1), 3, &Bounds::default()).unwrap() {
            if d.semisimple().ell() != 0 {
                continue;
            }
            let image = psi(&pair, &d, 3).unwrap();
            let out_dim = irrep_dimension(&image).unwrap();
            let in_dim = irrep_dimension(&d).unwrap();
            assert_eq!(out_dim, in_dim * ratio.clone());
        }
    }

    #[test]
    fn psi_range_gate() {
        let d = oscillator_datum(1, Sign::Plus, Sign::Plus).unwrap();
        assert!(psi(
            &DualPairSpec::new(1, GroupSpec::o_odd(1, Sign::Plus)).unwrap(),
            &d,
            3
        )
        .is_err());
        assert!(psi(
            &DualPairSpec::new(1, GroupSpec::o_even(2, Sign::Plus)).unwrap(),
            &d,
            3
        )
        .is_ok());
        // the non-split even form needs one more hyperbolic plane
        assert!(psi(
            &DualPairSpec::new(1, GroupSpec::o_even(2, Sign::Minus)).unwrap(),
            &d,
            3
        )
        .is_err());
        assert!(psi(
            &DualPairSpec::new(1, GroupSpec::o_even(3, Sign::Minus)).unwrap(),
            &d,
            3
        )
        .is_ok());
    }

    #[test]
    fn psi_even_emits_plus_one_extension_sign() {
        let pair = DualPairSpec::new(1, GroupSpec::o_even(3, Sign::Plus)).unwrap();
        for d in enumerate_irreps(&GroupSpec::sp(1), 3, &Bounds::default()).unwrap() {
            let image = psi(&pair, &d, 3).unwrap();
            if image.a_s() == 1 {
                assert_eq!(image.extension_signs()[0], Sign::Plus);
            }
        }
    }

    #[test]
    fn closed_form_matches_the_construction() {
        // symbolic agreement of the generic closed form with the composed
        // dimension, across all O_3 and O_5 inputs within reach
        for (m, n_range) in [(1u32, 3..=5u32), (2, 5..=5)] {
            for disc in [Sign::Plus, Sign::Minus] {
                let w = GroupSpec::o_odd(m, disc);
                let inputs = enumerate_irreps(&w, 3, &Bounds::default()).unwrap();
                for n in n_range.clone() {
                    let pair = DualPairSpec::new(n, w.clone()).unwrap();
                    for d in &inputs {
                        let composed = irrep_dimension(&phi(&pair, d, 3).unwrap()).unwrap();
                        let closed = phi_dimension_closed_form(&pair, d).unwrap();
                        assert_eq!(composed, closed, "m={m} N={n} d={d:?}");
                    }
                }
            }
        }
    }

    #[test]
    fn phi_is_injective_with_disjoint_images_across_forms() {
        let b = Bounds::default();
        for (n_w, q0) in [(1u32, 3u64), (1, 5), (2, 3), (2, 5), (3, 3), (3, 5)] {
            for big_n in n_w..=(2 * n_w) {
                let forms: Vec<GroupSpec> = if n_w % 2 == 1 {
                    [Sign::Plus, Sign::Minus]
                        .iter()
                        .map(|&s| GroupSpec::o_odd((n_w - 1) / 2, s))
                        .collect()
                } else {
                    [Sign::Plus, Sign::Minus]
                        .iter()
                        .map(|&s| GroupSpec::o_even(n_w / 2, s))
                        .collect()
                };
                let mut seen: HashSet<ClassificationData> = HashSet::new();
                for w in forms {
                    let pair = DualPairSpec::new(big_n, w.clone()).unwrap();
                    for d in enumerate_irreps(&w, q0, &b).unwrap() {
                        let image = phi(&pair, &d, q0).unwrap();
                        assert!(
                            seen.insert(image),
                            "collision at dim W = {n_w}, N = {big_n}, q = {q0}, input {d:?}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn phi_images_have_the_right_n_rank() {
        // with N = 3 dim W, every image has N-rank equal to dim W
        for n_w in 1..=2u32 {
            let big_n = 3 * n_w;
            let forms: Vec<GroupSpec> = if n_w % 2 == 1 {
                vec![GroupSpec::o_odd((n_w - 1) / 2, Sign::Plus)]
            } else {
                vec![GroupSpec::o_even(n_w / 2, Sign::Minus)]
            };
            for w in forms {
                let pair = DualPairSpec::new(big_n, w.clone()).unwrap();
                for d in enumerate_irreps(&w, 3, &Bounds::default()).unwrap() {
                    let dim = irrep_dimension(&phi(&pair, &d, 3).unwrap()).unwrap();
                    assert_eq!(n_rank(&dim, big_n).unwrap(), n_w);
                }
            }
        }
    }

    #[test]
    fn phi_semisimple_transport_depends_only_on_class_and_sign() {
        let w = GroupSpec::o_odd(1, Sign::Plus);
        let pair = DualPairSpec::new(3, w.clone()).unwrap();
        let inputs = enumerate_irreps(&w, 3, &Bounds::default()).unwrap();
        for a in &inputs {
            for b in &inputs {
                if a.semisimple() == b.semisimple() && a.extension_signs() == b.extension_signs() {
                    let ia = phi(&pair, a, 3).unwrap();
                    let ib = phi(&pair, b, 3).unwrap();
                    assert_eq!(ia.semisimple(), ib.semisimple());
                }
            }
        }
    }
}
