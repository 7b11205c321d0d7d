//! Two-row symbols and integer partitions: the combinatorial indices of
//! unipotent representations of the classical groups, together with their
//! generic degrees (dimension polynomials).
//!
//! A symbol is a pair of strictly increasing rows of nonnegative integers,
//! up to swapping the rows, with the normalization that the two rows do not
//! both start with `0`. The row-length difference (defect) decides which
//! series the symbol belongs to: odd defect for types `B`/`C`, defect
//! `0 mod 4` for type `D`, defect `2 mod 4` for type `2D`. A type-`D`
//! symbol with equal rows is *degenerate* and indexes a pair of
//! equal-dimensional representations of the split even orthogonal group.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::groups::{order, GroupSpec};
use crate::sign::Sign;
use crate::{QPoly, QRatPoly};

/// The three series of symbols.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum SymbolType {
    /// Odd defect: unipotent data of `Sp_{2r}` and `SO_{2r+1}`.
    BC,
    /// Defect `0 mod 4`: unipotent data of `SO_{2r}^+`.
    D,
    /// Defect `2 mod 4`: unipotent data of `SO_{2r}^-`.
    TwoD,
}

impl SymbolType {
    /// Symbol type carried by a classical factor of a centralizer.
    pub fn for_factor(g: &GroupSpec) -> Result<SymbolType> {
        match g {
            GroupSpec::Sp { .. } | GroupSpec::SOOdd { .. } => Ok(SymbolType::BC),
            GroupSpec::SOEven {
                sign: Sign::Plus, ..
            } => Ok(SymbolType::D),
            GroupSpec::SOEven {
                sign: Sign::Minus, ..
            } => Ok(SymbolType::TwoD),
            other => Err(Error::TypeMismatch(format!(
                "{other} does not carry symbol-indexed unipotent data"
            ))),
        }
    }
}

/// Which row of a (canonically ordered) symbol an operation refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RowPosition {
    Top,
    Bottom,
}

/// A two-row symbol in canonical form.
///
/// Canonical form puts the longer row on top; for equal lengths the row
/// that is larger at the last position where the rows differ goes on top.
/// Equality and hashing therefore agree with equality of symbols as
/// row-swap classes.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub struct Symbol {
    top: Vec<u32>,
    bottom: Vec<u32>,
}

/// Rank, defect, series and degeneracy of a symbol.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SymbolData {
    pub rank: u32,
    /// `|a - b|` for row lengths `a`, `b`.
    pub defect: u32,
    pub stype: SymbolType,
    pub degenerate: bool,
}

fn strictly_increasing(row: &[u32]) -> bool {
    row.windows(2).all(|w| w[0] < w[1])
}

/// True when `x` should be placed above `y` in canonical form (or the rows
/// are equal).
fn row_on_top(x: &[u32], y: &[u32]) -> bool {
    if x.len() != y.len() {
        return x.len() > y.len();
    }
    for (a, b) in x.iter().rev().zip(y.iter().rev()) {
        if a != b {
            return a > b;
        }
    }
    true
}

impl Symbol {
    pub fn new(row_a: Vec<u32>, row_b: Vec<u32>) -> Result<Symbol> {
        if !strictly_increasing(&row_a) || !strictly_increasing(&row_b) {
            return Err(Error::InvalidSymbol(format!(
                "rows must be strictly increasing: {row_a:?}, {row_b:?}"
            )));
        }
        if row_a.first() == Some(&0) && row_b.first() == Some(&0) {
            return Err(Error::InvalidSymbol(
                "the two rows may not both start with 0".into(),
            ));
        }
        let (top, bottom) = if row_on_top(&row_a, &row_b) {
            (row_a, row_b)
        } else {
            (row_b, row_a)
        };
        Ok(Symbol { top, bottom })
    }

    /// Rank-0 symbol of type `B`/`C`, the trivial representation.
    pub fn bc_rank_zero() -> Symbol {
        Symbol {
            top: vec![0],
            bottom: vec![],
        }
    }

    /// Rank-0 symbol of type `D`: the empty symbol.
    pub fn d_rank_zero() -> Symbol {
        Symbol {
            top: vec![],
            bottom: vec![],
        }
    }

    pub fn top(&self) -> &[u32] {
        &self.top
    }

    pub fn bottom(&self) -> &[u32] {
        &self.bottom
    }

    /// Both rows match.
    pub fn is_degenerate(&self) -> bool {
        self.top == self.bottom
    }

    fn entry_sum(&self) -> u64 {
        self.top
            .iter()
            .chain(&self.bottom)
            .map(|&x| u64::from(x))
            .sum()
    }

    /// Rank, defect, series and degeneracy, solved from the defining rank
    /// equation of the series the defect selects.
    pub fn invariants(&self) -> Result<SymbolData> {
        let a = self.top.len() as u64;
        let b = self.bottom.len() as u64;
        let defect = a - b; // canonical form has a >= b
        let total = a + b;
        let sum = self.entry_sum();
        let (stype, threshold) = if defect % 2 == 1 {
            (SymbolType::BC, (total - 1) * (total - 1) / 4)
        } else {
            let stype = if defect.is_multiple_of(4) {
                SymbolType::D
            } else {
                SymbolType::TwoD
            };
            (
                stype,
                if total == 0 {
                    0
                } else {
                    total * (total - 2) / 4
                },
            )
        };
        if sum < threshold {
            return Err(Error::InvalidSymbol(format!(
                "{self} has no nonnegative rank: entry sum {sum} below threshold {threshold}"
            )));
        }
        Ok(SymbolData {
            rank: (sum - threshold) as u32,
            defect: defect as u32,
            stype,
            degenerate: self.is_degenerate(),
        })
    }

    /// The canonical representative of the row-swap class. Symbols are
    /// stored canonically, so this is the identity; it exists as the
    /// explicit operation for callers.
    pub fn canonicalize(&self) -> Symbol {
        self.clone()
    }

    /// Rows `(lambda, mu)` ordered so the defect `a - b` is `1 mod 4`.
    /// Only meaningful for odd-defect (type `B`/`C`) symbols.
    pub fn rows_defect_one_mod_four(&self) -> Result<(Vec<u32>, Vec<u32>)> {
        let a = self.top.len() as i64;
        let b = self.bottom.len() as i64;
        if (a - b) % 2 == 0 {
            return Err(Error::TypeMismatch(format!(
                "{self} has even defect; no odd-defect orientation exists"
            )));
        }
        if (a - b).rem_euclid(4) == 1 {
            Ok((self.top.clone(), self.bottom.clone()))
        } else {
            Ok((self.bottom.clone(), self.top.clone()))
        }
    }

    /// Append `value` to the chosen row of the canonical form.
    ///
    /// `value` must strictly exceed the last entry of that row; violation
    /// signals inputs outside the stable range.
    pub fn concat_coordinate(&self, row: RowPosition, value: u32) -> Result<Symbol> {
        let (mut target, other) = match row {
            RowPosition::Top => (self.top.clone(), self.bottom.clone()),
            RowPosition::Bottom => (self.bottom.clone(), self.top.clone()),
        };
        if let Some(&last) = target.last() {
            if value <= last {
                return Err(Error::OrderViolation(format!(
                    "cannot append {value} after {last} in {self}"
                )));
            }
        }
        target.push(value);
        Symbol::new(target, other)
    }
}

/// Rank, defect, series and degeneracy of a symbol (free-function form).
pub fn symbol_invariants(s: &Symbol) -> Result<SymbolData> {
    s.invariants()
}

/// All strictly increasing rows of length `len` with entry sum `sum` and
/// entries in `min..=cap`.
fn rows_with_sum(len: usize, sum: u64, min: u32, cap: u32) -> Vec<Vec<u32>> {
    if len == 0 {
        return if sum == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    // remaining entries exceed the first, so first <= (sum - (0+1+..+len-1)) / len
    let mut first = min;
    while u64::from(first) <= sum {
        // minimal completion: first+1, first+2, ...
        let min_rest: u64 = (1..len as u64).map(|i| u64::from(first) + i).sum();
        if u64::from(first) + min_rest > sum {
            break;
        }
        if first <= cap {
            for mut rest in rows_with_sum(len - 1, sum - u64::from(first), first + 1, cap) {
                let mut row = vec![first];
                row.append(&mut rest);
                out.push(row);
            }
        }
        first += 1;
    }
    out
}

/// All canonical symbols of the given rank and series with entries bounded
/// by `max_entry`. The bound `rank + ((defect bound)+1)^2` always suffices
/// for completeness; [`enumerate_symbols_complete`] picks it automatically.
pub fn enumerate_symbols(rank: u32, stype: SymbolType, max_entry: u32) -> Vec<Symbol> {
    let mut out = Vec::new();
    let defects: Vec<u64> = match stype {
        SymbolType::BC => (0..)
            .map(|i| 2 * i + 1)
            .take_while(|d| d * d <= 4 * u64::from(rank) + 1)
            .collect(),
        SymbolType::D => (0..)
            .map(|i| 4 * i)
            .take_while(|d| d * d <= 4 * u64::from(rank) + 4)
            .collect(),
        SymbolType::TwoD => (0..)
            .map(|i| 4 * i + 2)
            .take_while(|d| d * d <= 4 * u64::from(rank) + 4)
            .collect(),
    };
    for defect in defects {
        let mut b = 0u64;
        loop {
            let a = b + defect;
            let total = a + b;
            if total == 0 {
                // the empty symbol: rank 0 of type D
                if rank == 0 && stype == SymbolType::D {
                    out.push(Symbol::d_rank_zero());
                }
                b += 1;
                continue;
            }
            let threshold = match stype {
                SymbolType::BC => (total - 1) * (total - 1) / 4,
                _ => total * (total - 2) / 4,
            };
            let target = u64::from(rank) + threshold;
            let min_sum = a * (a.saturating_sub(1)) / 2
                + b * (b.saturating_sub(1)) / 2
                + if a > 0 && b > 0 { b.min(a) } else { 0 };
            if min_sum > target {
                break;
            }
            for top_sum in 0..=target {
                let bottom_sum = target - top_sum;
                for top in rows_with_sum(a as usize, top_sum, 0, max_entry) {
                    for bottom in rows_with_sum(b as usize, bottom_sum, 0, max_entry) {
                        if top.first() == Some(&0) && bottom.first() == Some(&0) {
                            continue;
                        }
                        if a == b && !row_on_top(&top, &bottom) {
                            continue; // keep one representative per swap class
                        }
                        let sym = Symbol {
                            top: top.clone(),
                            bottom,
                        };
                        debug_assert_eq!(sym.invariants().unwrap().rank, rank);
                        out.push(sym);
                    }
                }
            }
            b += 1;
        }
    }
    out.sort();
    out.dedup();
    out
}

/// [`enumerate_symbols`] with an entry bound large enough to be complete.
pub fn enumerate_symbols_complete(rank: u32, stype: SymbolType) -> Vec<Symbol> {
    // any entry is at most the full target sum rank + (a+b-1)^2/4, and
    // a+b is bounded by 2 sqrt(rank) + 2
    let spread = 2 * (rank as f64).sqrt() as u32 + 3;
    enumerate_symbols(rank, stype, rank + spread * spread)
}

fn choose2(n: u64) -> u64 {
    if n < 2 {
        0
    } else {
        n * (n - 1) / 2
    }
}

/// Power of `q` in the denominator of the symbol dimension formula.
fn c_exponent(a: u64, b: u64) -> u64 {
    let total = a + b;
    (1..=total / 2).map(|i| choose2(total - 2 * i)).sum()
}

/// Generic degree of the unipotent representation indexed by `s` inside the
/// ambient group: `Sp_{2r}` or `SO_{2r+1}` for type `B`/`C`, `SO_{2r}^+`
/// for type `D`, `SO_{2r}^-` for type `2D`.
///
/// For a degenerate type-`D` symbol this is the dimension of *one* of the
/// two equal halves.
pub fn symbol_generic_degree(s: &Symbol, ambient: &GroupSpec) -> Result<QRatPoly> {
    let data = s.invariants()?;
    let (want_type, want_rank) = match *ambient {
        GroupSpec::Sp { n } => (SymbolType::BC, n),
        GroupSpec::SOOdd { m } => (SymbolType::BC, m),
        GroupSpec::SOEven {
            m,
            sign: Sign::Plus,
        } => (SymbolType::D, m),
        GroupSpec::SOEven {
            m,
            sign: Sign::Minus,
        } => (SymbolType::TwoD, m),
        ref other => {
            return Err(Error::TypeMismatch(format!(
                "{other} does not index unipotent data by symbols"
            )))
        }
    };
    // the zero-rank group stores sign +, but the empty symbol also stands
    // for the trivial representation of the (trivial) SO_0^- factor
    let type_ok = data.stype == want_type
        || (want_rank == 0 && matches!(*ambient, GroupSpec::SOEven { .. }) && data.rank == 0);
    if !type_ok || data.rank != want_rank {
        return Err(Error::TypeMismatch(format!(
            "symbol {s} (rank {}, {:?}) does not match ambient {ambient}",
            data.rank, data.stype
        )));
    }

    let lam = &s.top;
    let mu = &s.bottom;
    let a = lam.len() as u64;
    let b = mu.len() as u64;

    let mut num = QPoly::one();
    for j in 1..lam.len() {
        for i in 0..j {
            num = num * QPoly::two_term(u64::from(lam[j]), Sign::Minus, u64::from(lam[i]));
        }
    }
    for j in 1..mu.len() {
        for i in 0..j {
            num = num * QPoly::two_term(u64::from(mu[j]), Sign::Minus, u64::from(mu[i]));
        }
    }
    for &x in lam.iter() {
        for &y in mu.iter() {
            num = num * QPoly::two_term(u64::from(x), Sign::Plus, u64::from(y));
        }
    }

    let mut den = QPoly::q_power(c_exponent(a, b) as usize);
    for &x in lam.iter().chain(mu.iter()) {
        den = den * QPoly::geom_range_product(2, 1, i64::from(x), Sign::Minus);
    }

    let two_exp = match (data.stype, data.degenerate) {
        (SymbolType::BC, _) => (a + b - 1) / 2,
        (SymbolType::D, true) => (a + b) / 2,
        // non-degenerate type D / 2D
        _ => (a + b).saturating_sub(2) / 2,
    };
    den = den.scale(&BigInt::from(2).pow(two_exp as u32));

    let multiplier = order(ambient).prime_to_q;
    (num * multiplier)
        .to_rational()
        .exact_div(&den.to_rational())
}

impl fmt::Display for Symbol {
    /// Textual notation `(0<1 | 1)`, with `∅` for an empty row.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let row = |r: &[u32]| -> String {
            if r.is_empty() {
                "∅".to_string()
            } else {
                r.iter()
                    .map(|x| x.to_string())
                    .collect::<Vec<_>>()
                    .join("<")
            }
        };
        write!(f, "({} | {})", row(&self.top), row(&self.bottom))
    }
}

impl FromStr for Symbol {
    type Err = Error;

    fn from_str(s: &str) -> Result<Symbol> {
        let t = s.trim();
        let inner = t
            .strip_prefix('(')
            .and_then(|x| x.strip_suffix(')'))
            .ok_or_else(|| Error::ParseError(format!("symbol must be parenthesized: {s:?}")))?;
        let (left, right) = inner
            .split_once('|')
            .ok_or_else(|| Error::ParseError(format!("symbol needs two rows: {s:?}")))?;
        let parse_row = |r: &str| -> Result<Vec<u32>> {
            let r = r.trim();
            if r == "∅" || r.is_empty() {
                return Ok(vec![]);
            }
            r.split('<')
                .map(|x| {
                    x.trim()
                        .parse::<u32>()
                        .map_err(|_| Error::ParseError(format!("bad symbol entry {x:?}")))
                })
                .collect()
        };
        Symbol::new(parse_row(left)?, parse_row(right)?)
    }
}

impl From<Symbol> for String {
    fn from(s: Symbol) -> String {
        s.to_string()
    }
}

impl TryFrom<String> for Symbol {
    type Error = Error;

    fn try_from(s: String) -> Result<Symbol> {
        s.parse()
    }
}

/// An integer partition: weakly decreasing positive parts.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>")]
pub struct Partition(Vec<u32>);

impl TryFrom<Vec<u32>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<u32>) -> Result<Partition> {
        Partition::new(parts)
    }
}

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Partition> {
        if parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::DomainError(format!(
                "partition parts must be positive and weakly decreasing: {parts:?}"
            )));
        }
        Ok(Partition(parts))
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    fn conjugate(&self) -> Vec<u32> {
        let cols = self.0.first().copied().unwrap_or(0) as usize;
        (1..=cols)
            .map(|j| self.0.iter().filter(|&&p| p as usize >= j).count() as u32)
            .collect()
    }
}

/// All partitions of `n` in lexicographically decreasing order.
pub fn enumerate_partitions(n: u32) -> Vec<Partition> {
    fn rec(n: u32, max: u32, prefix: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if n == 0 {
            out.push(Partition(prefix.clone()));
            return;
        }
        let mut part = max.min(n);
        while part >= 1 {
            prefix.push(part);
            rec(n - part, part, prefix, out);
            prefix.pop();
            part -= 1;
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

/// Generic degree of the unipotent representation of `GL_n(F_{q^d})`
/// (`twisted = false`) or `U_n(F_{q^d})` (`twisted = true`) indexed by the
/// partition, as a polynomial in `q` with `q -> q^d` applied.
///
/// The untwisted value is the `q`-analog hook-length formula
/// `q^{n(p)} prod_i (q^i - 1) / prod_cells (q^hook - 1)`; the twisted value
/// substitutes `q -> -q` and normalizes the overall sign to be positive.
pub fn partition_generic_degree(p: &Partition, twisted: bool, field_degree: u32) -> QPoly {
    let n = p.size() as u64;
    if n == 0 {
        return QPoly::one();
    }
    let n_stat: u64 =
        p.0.iter()
            .enumerate()
            .map(|(i, &part)| i as u64 * u64::from(part))
            .sum();
    let conj = p.conjugate();
    let mut num =
        QPoly::q_power(n_stat as usize) * QPoly::geom_range_product(1, 1, n as i64, Sign::Minus);
    let mut den = QPoly::one();
    for (i, &row) in p.0.iter().enumerate() {
        for j in 1..=row as usize {
            let hook = u64::from(row) - j as u64 + u64::from(conj[j - 1]) - i as u64 - 1 + 1;
            den = den * QPoly::two_term(hook, Sign::Minus, 0);
        }
    }
    if twisted {
        num = num.substitute_neg_q();
        den = den.substitute_neg_q();
    }
    let mut deg = num
        .exact_div(&den)
        .expect("hook-length quotients are polynomials");
    if deg
        .leading_coeff()
        .is_some_and(num_traits::Signed::is_negative)
    {
        deg = -deg;
    }
    debug_assert!(deg.leading_coeff().is_some_and(|c| c > &BigInt::from(0)));
    deg.substitute_q_power(field_degree as usize)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    fn sym(top: &[u32], bottom: &[u32]) -> Symbol {
        Symbol::new(top.to_vec(), bottom.to_vec()).unwrap()
    }

    fn rat(p: QPoly) -> QRatPoly {
        p.to_rational()
    }

    #[test]
    fn invariants_examples() {
        let d = sym(&[1], &[]).invariants().unwrap();
        assert_eq!(
            (d.rank, d.defect, d.stype, d.degenerate),
            (1, 1, SymbolType::BC, false)
        );

        let d = sym(&[0, 1], &[1]).invariants().unwrap();
        assert_eq!(
            (d.rank, d.defect, d.stype, d.degenerate),
            (1, 1, SymbolType::BC, false)
        );

        let d = sym(&[1], &[0]).invariants().unwrap();
        assert_eq!(
            (d.rank, d.defect, d.stype, d.degenerate),
            (1, 0, SymbolType::D, false)
        );

        let d = sym(&[1], &[1]).invariants().unwrap();
        assert_eq!(
            (d.rank, d.defect, d.stype, d.degenerate),
            (2, 0, SymbolType::D, true)
        );

        let d = sym(&[0, 1], &[]).invariants().unwrap();
        assert_eq!((d.rank, d.defect, d.stype), (1, 2, SymbolType::TwoD));
    }

    #[test]
    fn validation_rejects_bad_rows() {
        assert!(Symbol::new(vec![1, 1], vec![]).is_err());
        assert!(Symbol::new(vec![0], vec![0]).is_err());
        assert!(Symbol::new(vec![], vec![]).is_ok());
    }

    #[test]
    fn canonical_form() {
        // row swap puts the larger row on top
        assert_eq!(sym(&[0], &[1]), sym(&[1], &[0]));
        assert_eq!(sym(&[1], &[0]).top(), &[1]);
        // degenerate fixed point
        assert_eq!(sym(&[1], &[1]).canonicalize(), sym(&[1], &[1]));
        // longer row on top
        let s = sym(&[2], &[0, 1]);
        assert_eq!(s.top(), &[0, 1]);
        assert_eq!(s.bottom(), &[2]);
        // equal length: larger-from-the-end on top
        let s = sym(&[0, 3], &[1, 2]);
        assert_eq!(s.top(), &[0, 3]);
    }

    #[test]
    fn defect_orientation() {
        // defect 1 stays put
        let (l, m) = sym(&[1], &[]).rows_defect_one_mod_four().unwrap();
        assert_eq!((l, m), (vec![1], vec![]));
        // defect 3 swaps to defect -3 = 1 mod 4
        let (l, m) = sym(&[0, 1, 2], &[]).rows_defect_one_mod_four().unwrap();
        assert_eq!((l, m), (vec![], vec![0, 1, 2]));
        assert!(sym(&[1], &[0]).rows_defect_one_mod_four().is_err());
    }

    #[test]
    fn enumerate_small_ranks() {
        // rank 0 conventions
        assert_eq!(
            enumerate_symbols_complete(0, SymbolType::BC),
            vec![Symbol::bc_rank_zero()]
        );
        assert_eq!(
            enumerate_symbols_complete(0, SymbolType::D),
            vec![Symbol::d_rank_zero()]
        );

        // rank 1 BC: exactly the two unipotent characters of SL_2
        let r1 = enumerate_symbols_complete(1, SymbolType::BC);
        assert_eq!(r1, vec![sym(&[0, 1], &[1]), sym(&[1], &[])]);

        // rank 2 BC: six unipotent characters of Sp_4
        assert_eq!(enumerate_symbols_complete(2, SymbolType::BC).len(), 6);

        // rank 1 D and 2D
        assert_eq!(
            enumerate_symbols_complete(1, SymbolType::D),
            vec![sym(&[1], &[0])]
        );
        assert_eq!(
            enumerate_symbols_complete(1, SymbolType::TwoD),
            vec![sym(&[0, 1], &[])]
        );

        // rank 2 D contains the degenerate pair-index once
        let d2 = enumerate_symbols_complete(2, SymbolType::D);
        assert!(d2.contains(&sym(&[1], &[1])));
        assert_eq!(d2.len(), 3);
    }

    #[test]
    fn enumerate_has_no_duplicates() {
        for rank in 0..=4 {
            for stype in [SymbolType::BC, SymbolType::D, SymbolType::TwoD] {
                let all = enumerate_symbols_complete(rank, stype);
                let set: std::collections::HashSet<_> = all.iter().cloned().collect();
                assert_eq!(set.len(), all.len(), "rank {rank} {stype:?}");
                for s in &all {
                    let d = s.invariants().unwrap();
                    assert_eq!((d.rank, d.stype), (rank, stype));
                }
            }
        }
    }

    #[test]
    fn generic_degrees_rank_one() {
        let so3 = GroupSpec::so_odd(1);
        assert_eq!(
            symbol_generic_degree(&sym(&[1], &[]), &so3).unwrap(),
            rat(QPoly::one())
        );
        assert_eq!(
            symbol_generic_degree(&sym(&[0, 1], &[1]), &so3).unwrap(),
            rat(QPoly::q_power(1))
        );

        let so2p = GroupSpec::so_even(1, Sign::Plus);
        assert_eq!(
            symbol_generic_degree(&sym(&[1], &[0]), &so2p).unwrap(),
            rat(QPoly::one())
        );
        let so2m = GroupSpec::so_even(1, Sign::Minus);
        assert_eq!(
            symbol_generic_degree(&sym(&[0, 1], &[]), &so2m).unwrap(),
            rat(QPoly::one())
        );
    }

    #[test]
    fn degenerate_degree_is_half_of_the_pair() {
        // the degenerate rank-2 pair: each half has dimension q, and the
        // four unipotent characters of SO_4^+ have dimensions 1, q, q, q^2
        let so4p = GroupSpec::so_even(2, Sign::Plus);
        let half = symbol_generic_degree(&sym(&[1], &[1]), &so4p).unwrap();
        assert_eq!(half, rat(QPoly::q_power(1)));
        let dims: Vec<QRatPoly> = enumerate_symbols_complete(2, SymbolType::D)
            .iter()
            .map(|s| symbol_generic_degree(s, &so4p).unwrap())
            .collect();
        assert!(dims.contains(&rat(QPoly::one())));
        assert!(dims.contains(&rat(QPoly::q_power(2))));
    }

    #[test]
    fn type_mismatch_is_rejected() {
        assert!(symbol_generic_degree(&sym(&[1], &[0]), &GroupSpec::so_odd(1)).is_err());
        assert!(
            symbol_generic_degree(&sym(&[1], &[]), &GroupSpec::so_even(1, Sign::Plus)).is_err()
        );
        // right type, wrong rank
        assert!(symbol_generic_degree(&sym(&[1], &[]), &GroupSpec::so_odd(2)).is_err());
    }

    #[test]
    fn sp4_unipotent_degrees() {
        // the six unipotent characters of Sp_4: 1, q(q+1)^2/2, q(q^2+1)/2
        // twice, q(q-1)^2/2, q^4
        let sp4 = GroupSpec::sp(2);
        let mut dims: Vec<QRatPoly> = enumerate_symbols_complete(2, SymbolType::BC)
            .iter()
            .map(|s| symbol_generic_degree(s, &sp4).unwrap())
            .collect();
        dims.sort();
        let half = BigRational::new(BigInt::from(1), BigInt::from(2));
        let mut expected = vec![
            rat(QPoly::one()),
            rat(QPoly::q_power(4)),
            rat(QPoly::q_power(1) * QPoly::from_i64_coeffs(&[1, 1]).pow(2)).scale(&half),
            rat(QPoly::q_power(1) * QPoly::from_i64_coeffs(&[-1, 1]).pow(2)).scale(&half),
            rat(QPoly::q_power(1) * QPoly::from_i64_coeffs(&[1, 0, 1])).scale(&half),
            rat(QPoly::q_power(1) * QPoly::from_i64_coeffs(&[1, 0, 1])).scale(&half),
        ];
        expected.sort();
        assert_eq!(dims, expected);
    }

    #[test]
    fn degrees_are_positive_integers_at_small_q() {
        for rank in 0..=3u32 {
            for (stype, ambient) in [
                (SymbolType::BC, GroupSpec::sp(rank)),
                (SymbolType::D, GroupSpec::so_even(rank, Sign::Plus)),
                (SymbolType::TwoD, GroupSpec::so_even(rank, Sign::Minus)),
            ] {
                if stype == SymbolType::TwoD && rank == 0 {
                    continue;
                }
                for s in enumerate_symbols_complete(rank, stype) {
                    let deg = symbol_generic_degree(&s, &ambient).unwrap();
                    for q0 in [2u64, 3, 5] {
                        let v = deg.eval_at_u64_integer(q0).unwrap();
                        assert!(v > BigInt::from(0), "{s} at q={q0}");
                    }
                }
            }
        }
    }

    #[test]
    fn concat_examples() {
        let s = sym(&[1], &[0]);
        assert_eq!(
            s.concat_coordinate(RowPosition::Bottom, 4).unwrap(),
            sym(&[1], &[0, 4])
        );
        let s = sym(&[0, 1], &[]);
        assert_eq!(
            s.concat_coordinate(RowPosition::Top, 4).unwrap(),
            sym(&[0, 1, 4], &[])
        );
        let s = Symbol::bc_rank_zero();
        assert_eq!(
            s.concat_coordinate(RowPosition::Bottom, 2).unwrap(),
            sym(&[0], &[2])
        );
        // appending a non-larger value is an order violation; the canonical
        // top row of this symbol is (0, 4)
        assert!(matches!(
            sym(&[1], &[0, 4]).concat_coordinate(RowPosition::Top, 3),
            Err(Error::OrderViolation(_))
        ));
    }

    #[test]
    fn concat_rank_bookkeeping_is_consistent() {
        // appending v to a symbol with a+b entries changes the rank by
        // v - (a+b-1)/2 for odd defect and by v - (a+b)/2 for even defect
        for rank in 0..=3u32 {
            for stype in [SymbolType::BC, SymbolType::D, SymbolType::TwoD] {
                for s in enumerate_symbols_complete(rank, stype) {
                    let total = (s.top().len() + s.bottom().len()) as i64;
                    for row in [RowPosition::Top, RowPosition::Bottom] {
                        for v in 0..=8u32 {
                            let Ok(bigger) = s.concat_coordinate(row, v) else {
                                continue;
                            };
                            let Ok(data) = bigger.invariants() else {
                                continue;
                            };
                            let shift = match stype {
                                SymbolType::BC => (total - 1) / 2,
                                _ => total / 2,
                            };
                            assert_eq!(
                                i64::from(data.rank),
                                i64::from(rank) + i64::from(v) - shift,
                                "{s} + {v}"
                            );
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn partition_degrees() {
        // trivial representation for the one-row partition, any twist
        for n in 1..=4u32 {
            let p = Partition::new(vec![n]).unwrap();
            assert_eq!(partition_generic_degree(&p, false, 1), QPoly::one());
            assert_eq!(partition_generic_degree(&p, true, 1), QPoly::one());
        }
        // Steinberg of GL_2 / U_2
        let p = Partition::new(vec![1, 1]).unwrap();
        assert_eq!(partition_generic_degree(&p, false, 1), QPoly::q_power(1));
        assert_eq!(partition_generic_degree(&p, true, 1), QPoly::q_power(1));
        // field extension substitutes q -> q^d
        assert_eq!(partition_generic_degree(&p, false, 2), QPoly::q_power(2));
        // GL_3 and U_3 middle representations: q(q+1) and q(q-1)
        let p = Partition::new(vec![2, 1]).unwrap();
        assert_eq!(
            partition_generic_degree(&p, false, 1),
            QPoly::from_i64_coeffs(&[0, 1, 1])
        );
        assert_eq!(
            partition_generic_degree(&p, true, 1),
            QPoly::from_i64_coeffs(&[0, -1, 1])
        );
    }

    #[test]
    fn partition_degrees_positive_at_small_q() {
        for n in 1..=4u32 {
            for p in enumerate_partitions(n) {
                for twisted in [false, true] {
                    for d in 1..=2u32 {
                        let deg = partition_generic_degree(&p, twisted, d);
                        for q0 in [2u64, 3, 5] {
                            assert!(
                                deg.eval_at_u64(q0) > BigInt::from(0),
                                "{p:?} twisted={twisted} d={d} q={q0}"
                            );
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn partition_enumeration_counts() {
        assert_eq!(enumerate_partitions(0).len(), 1);
        assert_eq!(enumerate_partitions(4).len(), 5);
        assert_eq!(enumerate_partitions(6).len(), 11);
    }

    #[test]
    fn display_and_parse() {
        let s = sym(&[0, 1], &[1]);
        assert_eq!(s.to_string(), "(0<1 | 1)");
        assert_eq!("(0<1 | 1)".parse::<Symbol>().unwrap(), s);
        assert_eq!(sym(&[1], &[]).to_string(), "(1 | ∅)");
        assert_eq!("(1 | ∅)".parse::<Symbol>().unwrap(), sym(&[1], &[]));
        assert_eq!("(∅ | ∅)".parse::<Symbol>().unwrap(), Symbol::d_rank_zero());
        // parsing canonicalizes
        assert_eq!("(0 | 1)".parse::<Symbol>().unwrap().to_string(), "(1 | 0)");
    }
}
