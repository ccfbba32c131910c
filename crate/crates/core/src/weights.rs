//! Eligible weights of the block-diagonal presentation of gl(∞), the roots
//! of the ambient algebra, the gradings φ and ψ, ρ-shifts and the dominance
//! order, plus a text grammar for weights.
//!
//! Index bookkeeping: basis vectors are indexed by pairs `(i, k)` with
//! `i ∈ ℤ \ {0}` a position and `k ∈ 1..=n` a block. Positions are ordered
//! `1 ≺ 2 ≺ ⋯ ≺ -2 ≺ -1` within a block, blocks in increasing order.
//!
//! Only integer coefficients are supported: Kazhdan-Lusztig multiplicities
//! and linkage are implemented for integral weights, where the theory
//! applies verbatim.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// An exact half-integer, the codomain of ψ. Stored as twice its value.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize, Deserialize)]
pub struct Half(i64);

impl Half {
    pub const ZERO: Half = Half(0);

    pub fn from_int(v: i64) -> Half {
        Half(2 * v)
    }

    pub fn from_twice(twice: i64) -> Half {
        Half(twice)
    }

    pub fn twice(self) -> i64 {
        self.0
    }

    pub fn is_integer(self) -> bool {
        self.0 % 2 == 0
    }

    /// The integer value, if integral.
    pub fn to_int(self) -> Option<i64> {
        if self.is_integer() {
            Some(self.0 / 2)
        } else {
            None
        }
    }
}

impl Add for Half {
    type Output = Half;
    fn add(self, rhs: Half) -> Half {
        Half(self.0 + rhs.0)
    }
}

impl Sub for Half {
    type Output = Half;
    fn sub(self, rhs: Half) -> Half {
        Half(self.0 - rhs.0)
    }
}

impl Neg for Half {
    type Output = Half;
    fn neg(self) -> Half {
        Half(-self.0)
    }
}

impl fmt::Display for Half {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0 % 2 == 0 {
            write!(f, "{}", self.0 / 2)
        } else {
            write!(f, "{}/2", self.0)
        }
    }
}

impl std::str::FromStr for Half {
    type Err = Error;
    fn from_str(s: &str) -> Result<Half> {
        let t = s.trim();
        if let Some(num) = t.strip_suffix("/2") {
            let v: i64 = num.trim().parse().map_err(|_| Error::Parse {
                pos: 0,
                msg: format!("bad half-integer {t:?}"),
            })?;
            Ok(Half(v))
        } else {
            let v: i64 = t.parse().map_err(|_| Error::Parse {
                pos: 0,
                msg: format!("bad integer {t:?}"),
            })?;
            Ok(Half(2 * v))
        }
    }
}

/// A basis index `(i, k)`: position `i ∈ ℤ^×` in block `k ∈ 1..=n`.
///
/// The derived order is the total order `≺`: by block, then positions
/// `1 ≺ 2 ≺ ⋯ ≺ -2 ≺ -1`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct WeightIndex {
    pub i: i64,
    pub k: u32,
}

impl WeightIndex {
    pub fn new(i: i64, k: u32) -> WeightIndex {
        assert!(i != 0, "position index must be nonzero");
        assert!(k >= 1, "block index is 1-based");
        WeightIndex { i, k }
    }

    fn order_key(self) -> (u32, u8, i64) {
        (self.k, u8::from(self.i < 0), self.i)
    }

    /// Sign part of ψ: +1 for positive positions, -1 for negative ones.
    pub fn sg(self) -> i64 {
        if self.i > 0 {
            1
        } else {
            -1
        }
    }
}

impl PartialOrd for WeightIndex {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for WeightIndex {
    fn cmp(&self, other: &Self) -> Ordering {
        self.order_key().cmp(&other.order_key())
    }
}

impl fmt::Debug for WeightIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.i, self.k)
    }
}

/// A root `ε_p − ε_q` of the ambient algebra, `p ≠ q`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize, Deserialize)]
pub struct Root {
    /// Index carrying the `+1` coefficient.
    pub plus: WeightIndex,
    /// Index carrying the `-1` coefficient.
    pub minus: WeightIndex,
}

impl Root {
    pub fn new(plus: WeightIndex, minus: WeightIndex) -> Root {
        assert!(plus != minus, "a root has two distinct indices");
        Root { plus, minus }
    }

    /// Positive roots are `ε_p − ε_q` with `p ≺ q`.
    pub fn is_positive(&self) -> bool {
        self.plus < self.minus
    }

    pub fn negated(&self) -> Root {
        Root {
            plus: self.minus,
            minus: self.plus,
        }
    }

    /// ψ of the root; always an integer.
    pub fn psi(&self, n: u32) -> i64 {
        (psi_point(n, self.plus) - psi_point(n, self.minus))
            .to_int()
            .expect("psi is integral on roots")
    }

    /// Finite roots are those in the span of the simple roots, i.e. ψ = 0.
    pub fn is_finite(&self, n: u32) -> bool {
        self.psi(n) == 0
    }

    pub fn as_weight(&self, n: u32) -> EligibleWeight {
        let mut w = EligibleWeight::zero(n);
        w.add_finite(self.plus, 1);
        w.add_finite(self.minus, -1);
        w
    }
}

/// ψ on a single basis functional `ε_{(i,k)}`: `(n + 1 − 2k + sg(i)) / 2`.
/// ω-functionals are sent to zero.
pub fn psi_point(n: u32, p: WeightIndex) -> Half {
    debug_assert!(p.k <= n);
    Half::from_twice(n as i64 + 1 - 2 * p.k as i64 + p.sg())
}

/// The ψ-class of a basis index: positions of equal ψ-value. Class `c`
/// consists of the negative positions of block `c` together with the
/// positive positions of block `c+1`, for `c ∈ 0..=n`.
pub fn psi_class(p: WeightIndex) -> u32 {
    if p.i > 0 {
        p.k - 1
    } else {
        p.k
    }
}

/// The members of ψ-class `c` with positions `|i| ≤ rank`, in ≺ order.
pub fn class_members(n: u32, c: u32, rank: i64) -> Vec<WeightIndex> {
    assert!(c <= n);
    let mut out = Vec::new();
    if c >= 1 {
        for i in -rank..=-1 {
            out.push(WeightIndex::new(i, c));
        }
    }
    if c < n {
        for i in 1..=rank {
            out.push(WeightIndex::new(i, c + 1));
        }
    }
    out
}

/// An eligible weight: integer level coefficients `a_k` of the ω-functionals
/// plus a finite-support integer correction on the ε-basis.
///
/// The full coefficient at `(i, k)` is `level[k] + finite[(i,k)]`; entries
/// with value 0 are never stored, so equality of the representation is
/// equality of weights.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct EligibleWeight {
    n: u32,
    level: Vec<i64>,
    finite: BTreeMap<WeightIndex, i64>,
}

impl EligibleWeight {
    pub fn zero(n: u32) -> EligibleWeight {
        assert!(n >= 1);
        EligibleWeight {
            n,
            level: vec![0; n as usize],
            finite: BTreeMap::new(),
        }
    }

    /// The weight `ω^{(k)}`.
    pub fn omega(n: u32, k: u32) -> EligibleWeight {
        let mut w = EligibleWeight::zero(n);
        w.add_level(k, 1);
        w
    }

    /// The weight `ε_i^{(k)}`.
    pub fn epsilon(n: u32, i: i64, k: u32) -> EligibleWeight {
        let mut w = EligibleWeight::zero(n);
        w.add_finite(WeightIndex::new(i, k), 1);
        w
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn level(&self) -> &[i64] {
        &self.level
    }

    pub fn finite_support(&self) -> impl Iterator<Item = (&WeightIndex, &i64)> {
        self.finite.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.level.iter().all(|&a| a == 0) && self.finite.is_empty()
    }

    pub fn add_level(&mut self, k: u32, c: i64) {
        assert!(k >= 1 && k <= self.n, "block index out of range");
        self.level[(k - 1) as usize] += c;
    }

    pub fn add_finite(&mut self, p: WeightIndex, c: i64) {
        assert!(p.k >= 1 && p.k <= self.n, "block index out of range");
        let e = self.finite.entry(p).or_insert(0);
        *e += c;
        if *e == 0 {
            self.finite.remove(&p);
        }
    }

    pub fn finite_coeff(&self, p: WeightIndex) -> i64 {
        self.finite.get(&p).copied().unwrap_or(0)
    }

    /// The pairing `(λ, ε_p)`: full coefficient `level[k] + finite[(i,k)]`.
    pub fn pairing(&self, p: WeightIndex) -> i64 {
        assert!(p.k >= 1 && p.k <= self.n, "block index out of range");
        self.level[(p.k - 1) as usize] + self.finite_coeff(p)
    }

    /// The ρ-shifted coefficient `(λ + ρ, ε_p) = pairing(λ, p) − i`,
    /// with `ρ = Σ −i ε_i^{(k)}`.
    pub fn rho_shift(&self, p: WeightIndex) -> i64 {
        self.pairing(p) - p.i
    }

    /// Least `r` such that the weight is r-eligible (finite support within
    /// positions `|i| ≤ r`).
    pub fn eligibility_rank(&self) -> i64 {
        self.finite.keys().map(|p| p.i.abs()).max().unwrap_or(0)
    }

    pub fn is_r_eligible(&self, r: i64) -> bool {
        self.eligibility_rank() <= r
    }

    /// ψ extended linearly; half-integral in general.
    pub fn psi(&self) -> Half {
        let mut acc = 0i64;
        for (p, &c) in &self.finite {
            acc += c * psi_point(self.n, *p).twice();
        }
        Half::from_twice(acc)
    }

    /// φ: component `k` is `level[k] + Σ_i finite[(i,k)]`.
    pub fn phi(&self) -> Vec<i64> {
        let mut out = self.level.clone();
        for (p, &c) in &self.finite {
            out[(p.k - 1) as usize] += c;
        }
        out
    }

    /// Total finite coefficient sum; with the level vector this classifies
    /// the block of the weight.
    pub fn finite_total(&self) -> i64 {
        self.finite.values().sum()
    }

    pub fn checked_add(&self, other: &EligibleWeight) -> EligibleWeight {
        assert_eq!(self.n, other.n, "block counts differ");
        let mut out = self.clone();
        for (k, &c) in other.level.iter().enumerate() {
            out.level[k] += c;
        }
        for (p, &c) in &other.finite {
            out.add_finite(*p, c);
        }
        out
    }

    pub fn add_root(&self, root: &Root) -> EligibleWeight {
        let mut out = self.clone();
        out.add_finite(root.plus, 1);
        out.add_finite(root.minus, -1);
        out
    }

    /// Renders the weight in the text grammar; `parse_weight` inverts this.
    pub fn render(&self) -> String {
        let mut terms: Vec<(i64, String)> = Vec::new();
        for (k, &a) in self.level.iter().enumerate() {
            if a != 0 {
                terms.push((a, format!("w[{}]", k + 1)));
            }
        }
        for (p, &c) in &self.finite {
            terms.push((c, format!("e[{},{}]", p.i, p.k)));
        }
        if terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (idx, (c, atom)) in terms.iter().enumerate() {
            let mag = c.abs();
            if idx == 0 {
                if *c < 0 {
                    out.push('-');
                }
            } else if *c < 0 {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            if mag != 1 {
                out.push_str(&format!("{mag}*"));
            }
            out.push_str(atom);
        }
        out
    }
}

impl Add for &EligibleWeight {
    type Output = EligibleWeight;
    fn add(self, rhs: &EligibleWeight) -> EligibleWeight {
        self.checked_add(rhs)
    }
}

impl Sub for &EligibleWeight {
    type Output = EligibleWeight;
    fn sub(self, rhs: &EligibleWeight) -> EligibleWeight {
        self.checked_add(&(-rhs))
    }
}

impl Neg for &EligibleWeight {
    type Output = EligibleWeight;
    fn neg(self) -> EligibleWeight {
        let mut out = EligibleWeight::zero(self.n);
        for (k, &c) in self.level.iter().enumerate() {
            out.level[k] = -c;
        }
        for (p, &c) in &self.finite {
            out.finite.insert(*p, -c);
        }
        out
    }
}

impl fmt::Display for EligibleWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render())
    }
}

impl fmt::Debug for EligibleWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render())
    }
}

/// θ of a root at truncation rank `r`: `(α, ρ_r) + (φ(α), ρ_n)`, where ρ_r
/// is the sum of positive roots of the rank-r finite factor and ρ_n the
/// half-sum of positive gl(n) roots.
pub fn theta(root: &Root, n: u32, r: i64) -> i64 {
    let a = rho_r_coeff(n, r, root.plus) - rho_r_coeff(n, r, root.minus);
    // (e_a − e_b, ρ_n) = b − a for the standard ρ_n
    let b = root.minus.k as i64 - root.plus.k as i64;
    a + b
}

/// Coefficient of the sum of positive roots of the rank-r finite factor at
/// basis index `p`: zero outside the rank-r box, `m + 1 − 2t` at the t-th of
/// the m box members of p's ψ-class otherwise.
pub fn rho_r_coeff(n: u32, r: i64, p: WeightIndex) -> i64 {
    if p.i.abs() > r || p.k > n {
        return 0;
    }
    let members = class_members(n, psi_class(p), r);
    let m = members.len() as i64;
    let t = members
        .iter()
        .position(|&q| q == p)
        .expect("index is a member of its own class") as i64
        + 1;
    m + 1 - 2 * t
}

/// Pairing of a zero-level weight difference with the sum of positive roots
/// of the rank-r finite factor. Used for the chain-length bound on the
/// interval-finite order.
pub fn rho_r_pairing(delta: &EligibleWeight, r: i64) -> i64 {
    delta
        .finite_support()
        .map(|(p, &c)| c * rho_r_coeff(delta.n(), r, *p))
        .sum()
}

/// Dominance: `λ ⪰ μ` iff `λ − μ` is a nonnegative integer combination of
/// positive roots. Equivalent to: equal levels, total finite sum zero, and
/// every ≺-prefix partial sum of the difference nonnegative.
pub fn dominance_geq(lambda: &EligibleWeight, mu: &EligibleWeight) -> bool {
    assert_eq!(lambda.n(), mu.n(), "block counts differ");
    if lambda.level() != mu.level() {
        return false;
    }
    let delta = lambda - mu;
    let mut running = 0i64;
    // Support is finite, so only the breakpoints matter; iterate in ≺ order.
    for (_, &c) in delta.finite_support() {
        running += c;
        if running < 0 {
            return false;
        }
    }
    running == 0
}

/// Parses the weight grammar:
///
/// ```text
/// weight := ["-"] term (("+"|"-") term)* | "0"
/// term   := [coeff "*"?] atom
/// atom   := "w[" K "]" | "e[" I "," K "]"
/// ```
///
/// Whitespace is insignificant. Reports the byte position of errors.
pub fn parse_weight(text: &str, n: u32) -> Result<EligibleWeight> {
    assert!(n >= 1);
    let bytes = text.as_bytes();
    let mut pos = 0usize;
    let mut weight = EligibleWeight::zero(n);

    fn skip_ws(bytes: &[u8], pos: &mut usize) {
        while *pos < bytes.len() && bytes[*pos].is_ascii_whitespace() {
            *pos += 1;
        }
    }

    fn parse_int(bytes: &[u8], pos: &mut usize) -> Result<i64> {
        skip_ws(bytes, pos);
        let start = *pos;
        if *pos < bytes.len() && (bytes[*pos] == b'-' || bytes[*pos] == b'+') {
            *pos += 1;
        }
        let digits_start = *pos;
        while *pos < bytes.len() && bytes[*pos].is_ascii_digit() {
            *pos += 1;
        }
        if *pos == digits_start {
            return Err(Error::Parse {
                pos: start,
                msg: "expected an integer".into(),
            });
        }
        std::str::from_utf8(&bytes[start..*pos])
            .unwrap()
            .parse()
            .map_err(|_| Error::Parse {
                pos: start,
                msg: "integer out of range".into(),
            })
    }

    fn expect(bytes: &[u8], pos: &mut usize, ch: u8) -> Result<()> {
        skip_ws(bytes, pos);
        if *pos < bytes.len() && bytes[*pos] == ch {
            *pos += 1;
            Ok(())
        } else {
            Err(Error::Parse {
                pos: *pos,
                msg: format!("expected {:?}", ch as char),
            })
        }
    }

    // term := [coeff "*"?] atom, with `sign` applied to the coefficient
    fn parse_term(
        bytes: &[u8],
        pos: &mut usize,
        sign: i64,
        n: u32,
        weight: &mut EligibleWeight,
    ) -> Result<()> {
        skip_ws(bytes, pos);
        let mut coeff = 1i64;
        if *pos < bytes.len() && (bytes[*pos].is_ascii_digit() || bytes[*pos] == b'-') {
            coeff = parse_int(bytes, pos)?;
            skip_ws(bytes, pos);
            if *pos < bytes.len() && bytes[*pos] == b'*' {
                *pos += 1;
                skip_ws(bytes, pos);
            }
        }
        let coeff = sign * coeff;
        if *pos >= bytes.len() {
            return Err(Error::Parse {
                pos: *pos,
                msg: "expected an atom".into(),
            });
        }
        match bytes[*pos] {
            b'w' => {
                *pos += 1;
                expect(bytes, pos, b'[')?;
                let kpos = *pos;
                let k = parse_int(bytes, pos)?;
                expect(bytes, pos, b']')?;
                if k < 1 || k > n as i64 {
                    return Err(Error::Parse {
                        pos: kpos,
                        msg: format!("block index {k} outside 1..={n}"),
                    });
                }
                weight.add_level(k as u32, coeff);
                Ok(())
            }
            b'e' => {
                *pos += 1;
                expect(bytes, pos, b'[')?;
                let ipos = *pos;
                let i = parse_int(bytes, pos)?;
                expect(bytes, pos, b',')?;
                let kpos = *pos;
                let k = parse_int(bytes, pos)?;
                expect(bytes, pos, b']')?;
                if i == 0 {
                    return Err(Error::Parse {
                        pos: ipos,
                        msg: "position index must be nonzero".into(),
                    });
                }
                if k < 1 || k > n as i64 {
                    return Err(Error::Parse {
                        pos: kpos,
                        msg: format!("block index {k} outside 1..={n}"),
                    });
                }
                weight.add_finite(WeightIndex::new(i, k as u32), coeff);
                Ok(())
            }
            other => Err(Error::Parse {
                pos: *pos,
                msg: format!("expected 'w' or 'e', got {:?}", other as char),
            }),
        }
    }

    skip_ws(bytes, &mut pos);
    if pos >= bytes.len() {
        return Err(Error::Parse {
            pos,
            msg: "empty weight".into(),
        });
    }
    // the literal zero weight
    if bytes[pos] == b'0' {
        let mut end = pos + 1;
        skip_ws(bytes, &mut end);
        if end == bytes.len() {
            return Ok(weight);
        }
        return Err(Error::Parse {
            pos: end,
            msg: "trailing input after 0".into(),
        });
    }

    let mut sign = 1i64;
    if bytes[pos] == b'-' && {
        // a leading '-' binds to the first term unless it starts a signed coeff
        let mut q = pos + 1;
        skip_ws(bytes, &mut q);
        q < bytes.len() && !bytes[q].is_ascii_digit()
    } {
        sign = -1;
        pos += 1;
    }
    parse_term(bytes, &mut pos, sign, n, &mut weight)?;
    loop {
        skip_ws(bytes, &mut pos);
        if pos >= bytes.len() {
            break;
        }
        let sign = match bytes[pos] {
            b'+' => 1,
            b'-' => -1,
            other => {
                return Err(Error::Parse {
                    pos,
                    msg: format!("expected '+' or '-', got {:?}", other as char),
                })
            }
        };
        pos += 1;
        parse_term(bytes, &mut pos, sign, n, &mut weight)?;
    }
    Ok(weight)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(text: &str, n: u32) -> EligibleWeight {
        parse_weight(text, n).unwrap()
    }

    #[test]
    fn index_order_matches_the_unusual_order() {
        let n = 2;
        let ordered = [
            WeightIndex::new(1, 1),
            WeightIndex::new(2, 1),
            WeightIndex::new(-2, 1),
            WeightIndex::new(-1, 1),
            WeightIndex::new(1, 2),
            WeightIndex::new(-1, 2),
        ];
        for pair in ordered.windows(2) {
            assert!(pair[0] < pair[1], "{:?} should precede {:?}", pair[0], pair[1]);
        }
        let _ = n;
    }

    #[test]
    fn parse_examples() {
        let z = w("0", 1);
        assert!(z.is_zero());

        let a = w("w[1] - e[1,1]", 2);
        assert_eq!(a.level(), &[1, 0]);
        assert_eq!(a.finite_coeff(WeightIndex::new(1, 1)), -1);

        let b = w("e[1,1] + e[1,1]", 1);
        assert_eq!(b.finite_coeff(WeightIndex::new(1, 1)), 2);

        let c = w("-2*w[1] + 3*e[-2,1]", 1);
        assert_eq!(c.level(), &[-2]);
        assert_eq!(c.finite_coeff(WeightIndex::new(-2, 1)), 3);
    }

    #[test]
    fn parse_errors_carry_positions() {
        match parse_weight("e[0,1]", 1) {
            Err(Error::Parse { pos, .. }) => assert_eq!(pos, 2),
            other => panic!("expected parse error, got {other:?}"),
        }
        assert!(parse_weight("w[2]", 1).is_err());
        assert!(parse_weight("e[1,1] +", 1).is_err());
        assert!(parse_weight("x", 1).is_err());
        assert!(parse_weight("0 junk", 1).is_err());
    }

    #[test]
    fn render_round_trips() {
        let samples = [
            ("0", 1),
            ("w[1] - e[1,1]", 2),
            ("2*e[1,1]", 1),
            ("-w[1] + 3*e[-2,2] - e[1,1]", 2),
        ];
        for (s, n) in samples {
            let parsed = w(s, n);
            let again = parse_weight(&parsed.render(), n).unwrap();
            assert_eq!(parsed, again, "render/parse round trip for {s:?}");
        }
    }

    #[test]
    fn pairing_values() {
        let n = 1;
        let zero = EligibleWeight::zero(n);
        assert_eq!(zero.pairing(WeightIndex::new(5, 1)), 0);

        let om = EligibleWeight::omega(1, 1);
        assert_eq!(om.pairing(WeightIndex::new(5, 1)), 1);

        let mut om5 = om.clone();
        om5.add_finite(WeightIndex::new(5, 1), -1);
        assert_eq!(om5.pairing(WeightIndex::new(5, 1)), 0);
    }

    #[test]
    fn psi_on_roots_and_weights() {
        // ε_1^{(k)} − ε_{−1}^{(k)} is sent to +1 for every n and k
        for n in 1..=3 {
            for k in 1..=n {
                let root = Root::new(WeightIndex::new(1, k), WeightIndex::new(-1, k));
                assert_eq!(root.psi(n), 1, "n={n} k={k}");
            }
        }
        // finite roots vanish: within-block same-sign pairs and the
        // block-crossing simple roots
        let root = Root::new(WeightIndex::new(2, 1), WeightIndex::new(5, 1));
        assert_eq!(root.psi(1), 0);
        let crossing = Root::new(WeightIndex::new(-1, 1), WeightIndex::new(1, 2));
        assert_eq!(crossing.psi(2), 0);
        // ε_{−1}^{(1)} − ε_1^{(2)} at n = 2 → 0 (same ψ-class)
        assert_eq!(crossing.psi(2), 0);
        // ω has ψ = 0
        assert_eq!(EligibleWeight::omega(2, 1).psi(), Half::ZERO);
    }

    #[test]
    fn phi_values() {
        assert_eq!(EligibleWeight::zero(2).phi(), vec![0, 0]);
        assert_eq!(EligibleWeight::omega(2, 2).phi(), vec![0, 1]);
        let d = &EligibleWeight::epsilon(2, 1, 1) - &EligibleWeight::epsilon(2, 1, 2);
        assert_eq!(d.phi(), vec![1, -1]);
    }

    #[test]
    fn theta_values() {
        // finite root with both indices outside the box: θ = 0
        let far = Root::new(WeightIndex::new(7, 1), WeightIndex::new(9, 1));
        assert_eq!(theta(&far, 1, 2), 0);
        // simple root ε_1 − ε_2 at rank ≥ 2 is θ-positive
        let simple = Root::new(WeightIndex::new(1, 1), WeightIndex::new(2, 1));
        assert!(theta(&simple, 1, 2) > 0);
        assert_eq!(theta(&simple.negated(), 1, 2), -theta(&simple, 1, 2));
    }

    #[test]
    fn rho_shift_values() {
        let zero = EligibleWeight::zero(1);
        assert_eq!(zero.rho_shift(WeightIndex::new(3, 1)), -3);
        assert_eq!(zero.rho_shift(WeightIndex::new(-1, 1)), 1);
        let e1 = EligibleWeight::epsilon(1, 1, 1);
        assert_eq!(e1.rho_shift(WeightIndex::new(1, 1)), 0);
    }

    #[test]
    fn dominance_cases() {
        let n = 1;
        let lam = w("e[1,1]", n);
        assert!(dominance_geq(&lam, &lam));
        // ε_1 − ε_2 is a (simple) positive root
        let mu = w("e[2,1]", n);
        assert!(dominance_geq(&lam, &mu));
        assert!(!dominance_geq(&mu, &lam));
        // level mismatch
        let shifted = &lam + &EligibleWeight::omega(n, 1);
        assert!(!dominance_geq(&lam, &shifted));
        // adding any positive root raises
        let pos = Root::new(WeightIndex::new(2, 1), WeightIndex::new(-2, 1));
        assert!(pos.is_positive());
        assert!(dominance_geq(&lam.add_root(&pos), &lam));
    }

    #[test]
    fn dominance_crossing_blocks() {
        // ε_{-1}^{(1)} − ε_1^{(2)} is a positive (simple) root at n = 2
        let r = Root::new(WeightIndex::new(-1, 1), WeightIndex::new(1, 2));
        assert!(r.is_positive());
        let z = EligibleWeight::zero(2);
        assert!(dominance_geq(&z.add_root(&r), &z));
        assert!(!dominance_geq(&z, &z.add_root(&r)));
    }

    #[test]
    fn class_members_are_ordered_segments() {
        // classes partition the box and appear in ≺ order
        let n = 2;
        let rank = 2;
        let mut all: Vec<WeightIndex> = Vec::new();
        for c in 0..=n {
            all.extend(class_members(n, c, rank));
        }
        let mut sorted = all.clone();
        sorted.sort();
        assert_eq!(all, sorted);
        assert_eq!(all.len(), (2 * rank * n as i64) as usize);
    }
}
