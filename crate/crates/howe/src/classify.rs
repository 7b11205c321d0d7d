//! Full classification data for irreducible representations of the finite
//! symplectic and orthogonal groups: a semisimple class in the appropriate
//! ambient, unipotent data on the factors of its centralizer, and the sign
//! data resolving central characters and orthogonal extensions.
//!
//! Dimensions come out as exact polynomials in `q` with (at worst) powers
//! of two in the denominator. Enumeration at a numeric odd prime power `q`
//! is complete and canonically ordered; the fundamental consistency check,
//! run by the acceptance suite, is that the dimension squares over a full
//! enumeration sum to the group order.

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::groups::{order, GroupSpec};
use crate::semisimple::{
    centralizer, enumerate_semisimple_classes, Bounds, Centralizer, SemisimpleClass,
};
use crate::sign::Sign;
use crate::symbols::{
    enumerate_partitions, enumerate_symbols_complete, partition_generic_degree,
    symbol_generic_degree, Partition, Symbol, SymbolType,
};
use crate::QRatPoly;

/// Unipotent data attached to the centralizer of a semisimple class: one
/// partition per general-linear/unitary factor (aligned with the class's
/// block list) and one symbol for each of the two classical factors.
///
/// Degenerate type-`D` symbols are carried unsplit; the splitting or
/// merging they cause is resolved by the sign data of the full
/// classification datum.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct UnipotentDatum {
    pub glu: Vec<Partition>,
    pub minus_symbol: Symbol,
    pub plus_symbol: Symbol,
}

/// Classification data of one irreducible representation.
///
/// `group` may be a symplectic group, an odd special orthogonal group, or a
/// full orthogonal group. The semisimple class lives in the dual group
/// (`SO_{2N+1}` for `Sp_{2N}`, `Sp_{2m}` for `SO_{2m+1}`/`O_{2m+1}`) or in
/// the group itself for the self-dual even orthogonal case.
///
/// `central_sign` is the symplectic central character, present exactly when
/// the class has `-1` eigenvalues and the `-1`-factor symbol is
/// non-degenerate. `extension_signs` hold the orthogonal extension data:
/// one sign for an odd orthogonal group, and `a(s) + b(s)` signs for an
/// even one, the sign attached to the `+1` eigenvalues listed first.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawData")]
pub struct ClassificationData {
    group: GroupSpec,
    semisimple: SemisimpleClass,
    unipotent: UnipotentDatum,
    #[serde(skip_serializing_if = "Option::is_none")]
    central_sign: Option<Sign>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    extension_signs: Vec<Sign>,
}

#[derive(Deserialize)]
struct RawData {
    group: GroupSpec,
    semisimple: SemisimpleClass,
    unipotent: UnipotentDatum,
    #[serde(default)]
    central_sign: Option<Sign>,
    #[serde(default)]
    extension_signs: Vec<Sign>,
}

impl TryFrom<RawData> for ClassificationData {
    type Error = Error;

    fn try_from(raw: RawData) -> Result<ClassificationData> {
        ClassificationData::new(
            raw.group,
            raw.semisimple,
            raw.unipotent,
            raw.central_sign,
            raw.extension_signs,
        )
    }
}

/// Symbol type demanded by a classical centralizer factor, for dimension
/// purposes (a factor and its dual carry the same generic degrees).
fn factor_symbol_type(factor: &GroupSpec) -> (SymbolType, u32) {
    match *factor {
        GroupSpec::Sp { n } => (SymbolType::BC, n),
        GroupSpec::SOOdd { m } => (SymbolType::BC, m),
        GroupSpec::SOEven { m, sign } => (
            if sign.is_plus() {
                SymbolType::D
            } else {
                SymbolType::TwoD
            },
            m,
        ),
        _ => unreachable!("classical centralizer factors only"),
    }
}

impl ClassificationData {
    pub fn new(
        group: GroupSpec,
        semisimple: SemisimpleClass,
        unipotent: UnipotentDatum,
        central_sign: Option<Sign>,
        extension_signs: Vec<Sign>,
    ) -> Result<ClassificationData> {
        // the ambient of the semisimple class must be the dual side
        let expected_ambient = match group {
            GroupSpec::Sp { n } => GroupSpec::so_odd(n),
            GroupSpec::SOOdd { m } | GroupSpec::OOdd { m, .. } => GroupSpec::sp(m),
            GroupSpec::OEven { m, sign } => GroupSpec::so_even(m, sign),
            ref other => {
                return Err(Error::DomainError(format!(
                    "classification data exists for Sp, SO(odd), O(odd) and O(even), not {other}"
                )))
            }
        };
        if semisimple.ambient() != &expected_ambient {
            return Err(Error::TypeMismatch(format!(
                "class of {} cannot classify representations of {group}",
                semisimple.ambient()
            )));
        }

        let z = centralizer(&semisimple);
        if unipotent.glu.len() != z.glu_factors.len() {
            return Err(Error::RankMismatch(format!(
                "{} partitions supplied for {} linear factors",
                unipotent.glu.len(),
                z.glu_factors.len()
            )));
        }
        for (partition, factor) in unipotent.glu.iter().zip(&z.glu_factors) {
            if partition.size() != factor.mult {
                return Err(Error::RankMismatch(format!(
                    "partition {partition:?} does not have size {}",
                    factor.mult
                )));
            }
        }
        for (symbol, factor) in [
            (&unipotent.minus_symbol, &z.minus_factor),
            (&unipotent.plus_symbol, &z.plus_factor),
        ] {
            let (want_type, want_rank) = factor_symbol_type(factor);
            // rank-0 factors carry exactly the conventional trivial symbol
            let fits = if want_rank == 0 {
                match want_type {
                    SymbolType::BC => *symbol == Symbol::bc_rank_zero(),
                    _ => *symbol == Symbol::d_rank_zero(),
                }
            } else {
                let data = symbol.invariants()?;
                data.stype == want_type && data.rank == want_rank
            };
            if !fits {
                return Err(Error::TypeMismatch(format!(
                    "symbol {symbol} does not fit the centralizer factor {factor}"
                )));
            }
        }

        let datum = ClassificationData {
            group,
            semisimple,
            unipotent,
            central_sign,
            extension_signs,
        };

        match datum.group {
            GroupSpec::Sp { .. } => {
                if datum.central_sign.is_some() != datum.splits_centrally() {
                    return Err(Error::DomainError(
                        "a symplectic central sign is present iff the class has -1 eigenvalues \
                         and the -1-factor symbol is non-degenerate"
                            .into(),
                    ));
                }
                if !datum.extension_signs.is_empty() {
                    return Err(Error::DomainError(
                        "symplectic data carry no extension signs".into(),
                    ));
                }
            }
            GroupSpec::SOOdd { .. } => {
                if datum.central_sign.is_some() || !datum.extension_signs.is_empty() {
                    return Err(Error::DomainError(
                        "odd special orthogonal data carry no sign data".into(),
                    ));
                }
            }
            GroupSpec::OOdd { .. } => {
                if datum.central_sign.is_some() || datum.extension_signs.len() != 1 {
                    return Err(Error::DomainError(
                        "odd orthogonal data carry exactly one extension sign".into(),
                    ));
                }
            }
            GroupSpec::OEven { .. } => {
                let expected = datum.a_s() + datum.b_s();
                if datum.central_sign.is_some() || datum.extension_signs.len() != expected as usize
                {
                    return Err(Error::DomainError(format!(
                        "even orthogonal data need a(s)+b(s) = {expected} extension signs"
                    )));
                }
            }
            _ => unreachable!(),
        }
        Ok(datum)
    }

    pub fn group(&self) -> &GroupSpec {
        &self.group
    }

    pub fn semisimple(&self) -> &SemisimpleClass {
        &self.semisimple
    }

    pub fn unipotent(&self) -> &UnipotentDatum {
        &self.unipotent
    }

    pub fn central_sign(&self) -> Option<Sign> {
        self.central_sign
    }

    pub fn extension_signs(&self) -> &[Sign] {
        &self.extension_signs
    }

    /// Whether a symplectic datum over this class and unipotent choice
    /// splits into two central-character halves.
    fn splits_centrally(&self) -> bool {
        self.semisimple.ell() > 0 && !self.unipotent.minus_symbol.is_degenerate()
    }

    /// `1` when `+1` is an eigenvalue and its symbol is non-degenerate.
    pub fn a_s(&self) -> u32 {
        u32::from(self.semisimple.p() > 0 && !self.unipotent.plus_symbol.is_degenerate())
    }

    /// `1` when `-1` is an eigenvalue and its symbol is non-degenerate.
    pub fn b_s(&self) -> u32 {
        u32::from(self.semisimple.ell() > 0 && !self.unipotent.minus_symbol.is_degenerate())
    }

    /// Dimension of the unipotent datum: the product of the generic degrees
    /// of all factors.
    pub fn unipotent_dimension(&self) -> Result<QRatPoly> {
        let z = centralizer(&self.semisimple);
        let mut dim = QRatPoly::one();
        for (partition, factor) in self.unipotent.glu.iter().zip(&z.glu_factors) {
            let deg =
                partition_generic_degree(partition, !factor.twist.is_plus(), factor.field_degree);
            dim = dim * deg.to_rational();
        }
        dim = dim * symbol_generic_degree(&self.unipotent.minus_symbol, &z.minus_factor)?;
        dim = dim * symbol_generic_degree(&self.unipotent.plus_symbol, &z.plus_factor)?;
        Ok(dim)
    }

    /// The prime-to-`q` index of the centralizer in the group, the
    /// `|G|_{q'} / |Z(s)|_{q'}` factor of every dimension formula.
    pub fn index_factor(&self) -> Result<QRatPoly> {
        let connected = match self.group {
            GroupSpec::Sp { n } => GroupSpec::sp(n),
            GroupSpec::SOOdd { m } | GroupSpec::OOdd { m, .. } => GroupSpec::so_odd(m),
            GroupSpec::OEven { m, sign } => GroupSpec::so_even(m, sign),
            _ => unreachable!(),
        };
        let g_order = order(&connected).prime_to_q;
        let z_order = order(&centralizer(&self.semisimple).shape()).prime_to_q;
        g_order.to_rational().exact_div(&z_order.to_rational())
    }
}

/// Exact dimension polynomial of the irreducible representation the datum
/// describes.
pub fn irrep_dimension(d: &ClassificationData) -> Result<QRatPoly> {
    let index = d.index_factor()?;
    let dim_u = d.unipotent_dimension()?;
    let base = index * dim_u;
    let half = BigRational::new(BigInt::from(1), BigInt::from(2));
    Ok(match d.group {
        GroupSpec::Sp { .. } => {
            if d.central_sign.is_some() {
                base.scale(&half)
            } else {
                // over a degenerate -1-factor symbol the two halves merge
                // into a single representation of the plain index-times-
                // unipotent dimension; the square-sum oracle pins this down
                base
            }
        }
        // an odd orthogonal representation restricts irreducibly
        GroupSpec::SOOdd { .. } | GroupSpec::OOdd { .. } => base,
        // induction doubles, then splits into 2^{a(s)+b(s)} equal pieces
        GroupSpec::OEven { .. } => {
            let pieces = d.a_s() + d.b_s();
            let scale = BigRational::new(BigInt::from(2), BigInt::from(2).pow(pieces));
            base.scale(&scale)
        }
        _ => unreachable!(),
    })
}

/// `N`-rank of a dimension polynomial: the ceiling of its `q`-degree over
/// `n`.
pub fn n_rank(dim: &QRatPoly, n: u32) -> Result<u32> {
    let deg = dim
        .q_degree()
        .ok_or_else(|| Error::DomainError("the zero polynomial has no rank".into()))?;
    Ok(((deg as u64) + u64::from(n) - 1).div_euclid(u64::from(n)) as u32)
}

fn symbol_choices(factor: &GroupSpec) -> Vec<Symbol> {
    let (stype, rank) = factor_symbol_type(factor);
    enumerate_symbols_complete(rank, stype)
}

/// The complete, canonically ordered list of classification data for the
/// irreducible representations of `g` over `F_q`.
pub fn enumerate_irreps(
    g: &GroupSpec,
    q0: u64,
    bounds: &Bounds,
) -> Result<Vec<ClassificationData>> {
    let ambient = match *g {
        GroupSpec::Sp { n } => GroupSpec::so_odd(n),
        GroupSpec::SOOdd { m } | GroupSpec::OOdd { m, .. } => GroupSpec::sp(m),
        GroupSpec::OEven { m, sign } => GroupSpec::so_even(m, sign),
        ref other => {
            return Err(Error::DomainError(format!(
                "irreducible representations are enumerated for Sp, SO(odd), O(odd) and \
                 O(even), not {other}"
            )))
        }
    };
    let classes = enumerate_semisimple_classes(&ambient, q0, bounds)?;
    let mut out = Vec::new();
    for class in classes {
        let z = centralizer(&class);
        for unipotent in unipotent_choices(&z) {
            push_with_signs(g, &class, unipotent, &mut out)?;
        }
    }
    out.sort();
    Ok(out)
}

fn unipotent_choices(z: &Centralizer) -> Vec<UnipotentDatum> {
    let mut glu_choices: Vec<Vec<Partition>> = vec![vec![]];
    for factor in &z.glu_factors {
        let parts = enumerate_partitions(factor.mult);
        glu_choices = glu_choices
            .into_iter()
            .flat_map(|prefix| {
                parts.iter().map(move |p| {
                    let mut next = prefix.clone();
                    next.push(p.clone());
                    next
                })
            })
            .collect();
    }
    let minus_options = symbol_choices(&z.minus_factor);
    let plus_options = symbol_choices(&z.plus_factor);
    let mut out = Vec::new();
    for glu in &glu_choices {
        for minus in &minus_options {
            for plus in &plus_options {
                out.push(UnipotentDatum {
                    glu: glu.clone(),
                    minus_symbol: minus.clone(),
                    plus_symbol: plus.clone(),
                });
            }
        }
    }
    out
}

fn push_with_signs(
    g: &GroupSpec,
    class: &SemisimpleClass,
    unipotent: UnipotentDatum,
    out: &mut Vec<ClassificationData>,
) -> Result<()> {
    match *g {
        GroupSpec::Sp { .. } => {
            let splits = class.ell() > 0 && !unipotent.minus_symbol.is_degenerate();
            if splits {
                for sign in [Sign::Plus, Sign::Minus] {
                    out.push(ClassificationData::new(
                        g.clone(),
                        class.clone(),
                        unipotent.clone(),
                        Some(sign),
                        vec![],
                    )?);
                }
            } else {
                out.push(ClassificationData::new(
                    g.clone(),
                    class.clone(),
                    unipotent,
                    None,
                    vec![],
                )?);
            }
        }
        GroupSpec::SOOdd { .. } => {
            out.push(ClassificationData::new(
                g.clone(),
                class.clone(),
                unipotent,
                None,
                vec![],
            )?);
        }
        GroupSpec::OOdd { .. } => {
            for sign in [Sign::Plus, Sign::Minus] {
                out.push(ClassificationData::new(
                    g.clone(),
                    class.clone(),
                    unipotent.clone(),
                    None,
                    vec![sign],
                )?);
            }
        }
        GroupSpec::OEven { .. } => {
            let a = class.p() > 0 && !unipotent.plus_symbol.is_degenerate();
            let b = class.ell() > 0 && !unipotent.minus_symbol.is_degenerate();
            let mut sign_tuples: Vec<Vec<Sign>> = vec![vec![]];
            for _ in 0..(u32::from(a) + u32::from(b)) {
                sign_tuples = sign_tuples
                    .into_iter()
                    .flat_map(|prefix| {
                        [Sign::Plus, Sign::Minus].into_iter().map(move |s| {
                            let mut next = prefix.clone();
                            next.push(s);
                            next
                        })
                    })
                    .collect();
            }
            for signs in sign_tuples {
                out.push(ClassificationData::new(
                    g.clone(),
                    class.clone(),
                    unipotent.clone(),
                    None,
                    signs,
                )?);
            }
        }
        _ => unreachable!(),
    }
    Ok(())
}

/// Sum of squared dimensions over a complete enumeration at numeric `q`,
/// which must reproduce the group order exactly.
pub fn dimension_square_sum(g: &GroupSpec, q0: u64, bounds: &Bounds) -> Result<BigInt> {
    let mut total = BigInt::from(0);
    for datum in enumerate_irreps(g, q0, bounds)? {
        let dim = irrep_dimension(&datum)?.eval_at_u64_integer(q0)?;
        total += &dim * &dim;
    }
    Ok(total)
}

/// Convenience: the half-dimension oscillator data of `Sp_{2N}`, the two
/// central-sign pieces over the all-minus-ones class of the given
/// splitness.
pub fn oscillator_datum(n: u32, splitness: Sign, central: Sign) -> Result<ClassificationData> {
    let class = SemisimpleClass::new(GroupSpec::so_odd(n), 0, n, Some(splitness), vec![])?;
    let minus_symbol = match splitness {
        Sign::Plus => Symbol::new(vec![n], vec![0])?,
        Sign::Minus => Symbol::new(vec![0, n], vec![])?,
    };
    ClassificationData::new(
        GroupSpec::sp(n),
        class,
        UnipotentDatum {
            glu: vec![],
            minus_symbol,
            plus_symbol: Symbol::bc_rank_zero(),
        },
        Some(central),
        vec![],
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::order;
    use crate::QPoly;

    fn bounds() -> Bounds {
        Bounds::default()
    }

    fn rat(p: QPoly) -> QRatPoly {
        p.to_rational()
    }

    fn half(p: QPoly) -> QRatPoly {
        p.to_rational()
            .scale(&BigRational::new(BigInt::from(1), BigInt::from(2)))
    }

    #[test]
    fn oscillator_halves_have_dimension_q_n_pm_1_over_2() {
        for n in 1..=6u32 {
            for splitness in [Sign::Plus, Sign::Minus] {
                let mut sum = QRatPoly::zero();
                for central in [Sign::Plus, Sign::Minus] {
                    let datum = oscillator_datum(n, splitness, central).unwrap();
                    let dim = irrep_dimension(&datum).unwrap();
                    // (q^n +- 1)/2
                    let expected = half(QPoly::two_term(u64::from(n), splitness, 0));
                    assert_eq!(dim, expected, "n={n} splitness={splitness}");
                    sum = sum + dim;
                }
                assert_eq!(sum, rat(QPoly::two_term(u64::from(n), splitness, 0)));
            }
        }
    }

    #[test]
    fn sl2_dimensions() {
        let all = enumerate_irreps(&GroupSpec::sp(1), 3, &bounds()).unwrap();
        assert_eq!(all.len(), 7, "SL_2(F_3) has exactly 7 irreducibles");
        let mut dims: Vec<BigInt> = all
            .iter()
            .map(|d| irrep_dimension(d).unwrap().eval_at_u64_integer(3).unwrap())
            .collect();
        dims.sort();
        // at q = 3: 1 and q = 3 over the identity, (q+1)/2 = 2 twice over
        // the split -1 class, (q-1)/2 = 1 twice over the non-split one, and
        // q - 1 = 2 for the single generic class
        let expected: Vec<BigInt> = [1, 1, 1, 2, 2, 2, 3]
            .into_iter()
            .map(BigInt::from)
            .collect();
        assert_eq!(dims, expected);
    }

    #[test]
    fn so3_dimensions() {
        // SO_3(F_q): trivial and Steinberg over the identity, dimension q+1
        // for each split generic class, q-1 for each non-split one, plus
        // q +- 1 over the two -1 classes (no central splitting here: the
        // dual-side centralizers in Sp_2 are connected)
        let all = enumerate_irreps(&GroupSpec::so_odd(1), 5, &bounds()).unwrap();
        for d in &all {
            let dim = irrep_dimension(d).unwrap();
            if d.semisimple().p() == 0 && d.semisimple().ell() == 0 {
                let expected = match d.semisimple().blocks()[0].eigenvalue.torus_sign {
                    Sign::Plus => rat(QPoly::from_i64_coeffs(&[1, 1])),
                    Sign::Minus => rat(QPoly::from_i64_coeffs(&[-1, 1])),
                };
                assert_eq!(dim, expected);
            }
        }
        let total = dimension_square_sum(&GroupSpec::so_odd(1), 3, &bounds()).unwrap();
        assert_eq!(total, order(&GroupSpec::so_odd(1)).eval_at_u64(3));
    }

    #[test]
    fn dihedral_table_for_o2() {
        // O_2^+(F_5) is dihedral of order 8: four linear characters and one
        // 2-dimensional representation
        let g = GroupSpec::o_even(1, Sign::Plus);
        let all = enumerate_irreps(&g, 5, &bounds()).unwrap();
        let mut dims: Vec<BigInt> = all
            .iter()
            .map(|d| irrep_dimension(d).unwrap().eval_at_u64_integer(5).unwrap())
            .collect();
        dims.sort();
        let expected: Vec<BigInt> = [1, 1, 1, 1, 2].into_iter().map(BigInt::from).collect();
        assert_eq!(dims, expected);
        assert_eq!(all.len(), 5);
    }

    #[test]
    fn odd_orthogonal_doubles_the_special_orthogonal_list() {
        let so = enumerate_irreps(&GroupSpec::so_odd(1), 3, &bounds()).unwrap();
        let o = enumerate_irreps(&GroupSpec::o_odd(1, Sign::Plus), 3, &bounds()).unwrap();
        assert_eq!(o.len(), 2 * so.len());
        // dimensions are those of the restrictions
        let mut so_dims: Vec<QRatPoly> = so.iter().map(|d| irrep_dimension(d).unwrap()).collect();
        let mut o_dims: Vec<QRatPoly> = o.iter().map(|d| irrep_dimension(d).unwrap()).collect();
        so_dims.extend(so_dims.clone());
        so_dims.sort();
        o_dims.sort();
        assert_eq!(so_dims, o_dims);
    }

    #[test]
    fn central_sign_pieces_halve_the_unsigned_dimension() {
        for datum in enumerate_irreps(&GroupSpec::sp(2), 3, &bounds()).unwrap() {
            if datum.central_sign() != Some(Sign::Plus) {
                continue;
            }
            let partner = ClassificationData::new(
                datum.group().clone(),
                datum.semisimple().clone(),
                datum.unipotent().clone(),
                Some(Sign::Minus),
                vec![],
            )
            .unwrap();
            let a = irrep_dimension(&datum).unwrap();
            let b = irrep_dimension(&partner).unwrap();
            assert_eq!(a, b);
            let unsigned = datum.index_factor().unwrap() * datum.unipotent_dimension().unwrap();
            assert_eq!(&a + &b, unsigned);
        }
    }

    #[test]
    fn square_sums_recover_small_group_orders() {
        for (g, q0) in [
            (GroupSpec::sp(1), 3u64),
            (GroupSpec::sp(1), 5),
            (GroupSpec::so_odd(1), 5),
            (GroupSpec::o_even(1, Sign::Plus), 3),
            (GroupSpec::o_even(1, Sign::Minus), 3),
            (GroupSpec::o_odd(1, Sign::Minus), 3),
        ] {
            let total = dimension_square_sum(&g, q0, &bounds()).unwrap();
            assert_eq!(total, order(&g).eval_at_u64(q0), "{g} at q={q0}");
        }
    }

    #[test]
    fn dimensions_are_positive_integers() {
        for g in [
            GroupSpec::sp(2),
            GroupSpec::so_odd(2),
            GroupSpec::o_even(2, Sign::Minus),
        ] {
            for datum in enumerate_irreps(&g, 3, &bounds()).unwrap() {
                let v = irrep_dimension(&datum)
                    .unwrap()
                    .eval_at_u64_integer(3)
                    .unwrap();
                assert!(v > BigInt::from(0), "{datum:?}");
            }
        }
    }

    #[test]
    fn n_rank_examples() {
        let dim = rat(QPoly::from_i64_coeffs(&[1, 1])); // q + 1
        assert_eq!(n_rank(&dim, 1).unwrap(), 1);
        let dim = rat(QPoly::q_power(6));
        assert_eq!(n_rank(&dim, 3).unwrap(), 2);
        for n in 1..=5u32 {
            let datum = oscillator_datum(n, Sign::Plus, Sign::Plus).unwrap();
            let dim = irrep_dimension(&datum).unwrap();
            assert_eq!(n_rank(&dim, n).unwrap(), 1);
        }
        assert!(n_rank(&QRatPoly::zero(), 2).is_err());
    }

    #[test]
    fn enumeration_is_sorted_and_duplicate_free() {
        let all = enumerate_irreps(&GroupSpec::sp(2), 3, &bounds()).unwrap();
        let mut sorted = all.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(all, sorted);
    }

    #[test]
    fn datum_json_round_trip() {
        let datum = oscillator_datum(2, Sign::Minus, Sign::Plus).unwrap();
        let json = serde_json::to_string(&datum).unwrap();
        let back: ClassificationData = serde_json::from_str(&json).unwrap();
        assert_eq!(back, datum);
        // malformed sign data is rejected on the way in
        let mut v: serde_json::Value = serde_json::from_str(&json).unwrap();
        v["central_sign"] = serde_json::Value::Null;
        assert!(serde_json::from_value::<ClassificationData>(v).is_err());
    }
}
