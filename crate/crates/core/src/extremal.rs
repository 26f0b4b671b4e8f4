//! Closed-form extremal quantities of HL-networks.
//!
//! For `g = 2^{t_0} + ... + 2^{t_s}` with `t_0 > ... > t_s`, the largest number
//! of edges induced by `g` vertices of any `n`-dimensional HL-network is
//!
//! ```text
//! e_g = sum_i t_i * 2^(t_i - 1) + sum_i i * 2^(t_i)
//! ```
//!
//! and, for `n >= 8` and `g <= 2^ceil(n/2)`, the `(g+1)`-component edge
//! connectivity is `n*g - e_g`. The `check_*` functions evaluate the
//! inequalities the proofs rest on, so they can be swept exhaustively.
//!
//! All arithmetic is 64-bit and checked; overflow surfaces as
//! [`HlError::Overflow`].

use alloc::format;
use alloc::vec::Vec;

use crate::error::{domain, HlError, Result};

/// Largest ambient dimension accepted by [`c_lambda`] and [`check_slack`].
pub const MAX_FORMULA_DIM: u32 = 62;

/// The binary expansion of a positive integer as strictly decreasing exponents.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Decomposition {
    exponents: Vec<u32>,
}

impl Decomposition {
    /// Validates strict decrease.
    pub fn from_exponents(exponents: Vec<u32>) -> Result<Self> {
        if exponents.is_empty() {
            return Err(domain("a decomposition needs at least one exponent"));
        }
        if exponents.iter().any(|&t| t > 63) {
            return Err(HlError::Overflow);
        }
        if exponents.windows(2).any(|w| w[0] <= w[1]) {
            return Err(domain(format!("exponents {exponents:?} are not strictly decreasing")));
        }
        Ok(Decomposition { exponents })
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exponents
    }

    /// Index of the last exponent.
    pub fn s(&self) -> usize {
        self.exponents.len() - 1
    }

    pub fn len(&self) -> usize {
        self.exponents.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Reconstructs the integer.
    pub fn value(&self) -> u64 {
        self.exponents.iter().map(|&t| 1u64 << t).sum()
    }
}

/// Greedy binary expansion: `t_i = floor(log2(g - sum_{r<i} 2^{t_r}))`.
pub fn decompose(g: u64) -> Result<Decomposition> {
    if g == 0 {
        return Err(domain("decompose requires g >= 1"));
    }
    let mut rest = g;
    let mut exponents = Vec::with_capacity(rest.count_ones() as usize);
    while rest > 0 {
        let t = rest.ilog2();
        exponents.push(t);
        rest -= 1 << t;
    }
    Ok(Decomposition { exponents })
}

/// Maximum number of edges induced by `g` vertices; `e_g(0) = 0`.
///
/// Walks the set bits of `g` from the top, which is the greedy expansion of
/// [`decompose`] without allocating.
pub fn e_g(g: u64) -> Result<u64> {
    let mut total = 0u64;
    let mut rest = g;
    let mut i = 0u64;
    while rest > 0 {
        let t = rest.ilog2();
        rest -= 1 << t;
        let inner = if t == 0 { 0 } else { (t as u64).checked_mul(1 << (t - 1)).ok_or(HlError::Overflow)? };
        let cross = i.checked_mul(1 << t).ok_or(HlError::Overflow)?;
        total = total
            .checked_add(inner)
            .and_then(|x| x.checked_add(cross))
            .ok_or(HlError::Overflow)?;
        i += 1;
    }
    Ok(total)
}

/// `e_{i+1} - e_i`, computed from the decomposition of `i` as `s + 1`.
pub fn delta_e(i: u64) -> Result<u64> {
    if i == 0 {
        return Err(domain("delta_e requires i >= 1"));
    }
    Ok(decompose(i)?.len() as u64)
}

/// `2^ceil(n/2)`, the upper end of the proven range of `g`.
pub fn proven_g_max(n: u32) -> u64 {
    1u64 << n.div_ceil(2)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CLambdaMode {
    /// Only inside the proven range `n >= 8`, `g <= 2^ceil(n/2)`.
    Strict,
    /// Any `1 <= g < 2^n`; outside the proven range the value is only an
    /// upper bound (the construction still achieves it).
    Permissive,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CLambda {
    pub value: u64,
    /// Whether `value` is the exact connectivity rather than an upper bound.
    pub proven: bool,
}

/// `(g+1)`-component edge connectivity `n*g - e_g`; `c_lambda(n, 0) = 0`.
pub fn c_lambda(n: u32, g: u64, mode: CLambdaMode) -> Result<CLambda> {
    if n == 0 || n > MAX_FORMULA_DIM {
        return Err(domain(format!("c_lambda requires 1 <= n <= {MAX_FORMULA_DIM}, got n = {n}")));
    }
    if g == 0 {
        return Ok(CLambda { value: 0, proven: true });
    }
    if g >= 1u64 << n {
        return Err(domain(format!("c_lambda requires g < 2^n = {}, got g = {g}", 1u64 << n)));
    }
    let proven = n >= 8 && g <= proven_g_max(n);
    if mode == CLambdaMode::Strict && !proven {
        return Err(domain(format!(
            "strict mode requires n >= 8 and g <= 2^ceil(n/2) = {}, got n = {n}, g = {g}",
            proven_g_max(n)
        )));
    }
    let value = (n as u64)
        .checked_mul(g)
        .and_then(|ng| ng.checked_sub(e_g(g).ok()?))
        .ok_or(HlError::Overflow)?;
    Ok(CLambda { value, proven })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Relation {
    Ge,
    Le,
    Gt,
}

/// Both sides of an inequality, for reporting.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Inequality {
    pub lhs: u64,
    pub relation: Relation,
    pub rhs: u64,
}

impl Inequality {
    pub fn holds(&self) -> bool {
        match self.relation {
            Relation::Ge => self.lhs >= self.rhs,
            Relation::Le => self.lhs <= self.rhs,
            Relation::Gt => self.lhs > self.rhs,
        }
    }
}

impl core::fmt::Display for Inequality {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        let op = match self.relation {
            Relation::Ge => ">=",
            Relation::Le => "<=",
            Relation::Gt => ">",
        };
        write!(f, "{} {op} {}", self.lhs, self.rhs)
    }
}

fn add3(a: u64, b: u64, c: u64) -> Result<u64> {
    a.checked_add(b).and_then(|x| x.checked_add(c)).ok_or(HlError::Overflow)
}

/// `e_{g0+g1} >= e_{g0} + e_{g1} + g0` for `1 <= g0 <= g1`.
pub fn superadditive_sides(g0: u64, g1: u64) -> Result<Inequality> {
    if g0 == 0 || g0 > g1 {
        return Err(domain(format!("superadditivity requires 1 <= g0 <= g1, got ({g0}, {g1})")));
    }
    let sum = g0.checked_add(g1).ok_or(HlError::Overflow)?;
    Ok(Inequality { lhs: e_g(sum)?, relation: Relation::Ge, rhs: add3(e_g(g0)?, e_g(g1)?, g0)? })
}

pub fn check_superadditive(g0: u64, g1: u64) -> Result<bool> {
    superadditive_sides(g0, g1).map(|c| c.holds())
}

/// `(n-2) g >= 2 e_g` for `g <= 2^(n-2)`.
pub fn slack_sides(n: u32, g: u64) -> Result<Inequality> {
    if !(2..=MAX_FORMULA_DIM).contains(&n) || g > 1u64 << (n - 2) {
        return Err(domain(format!("slack requires 2 <= n <= {MAX_FORMULA_DIM} and g <= 2^(n-2), got n = {n}, g = {g}")));
    }
    let lhs = ((n - 2) as u64).checked_mul(g).ok_or(HlError::Overflow)?;
    let rhs = e_g(g)?.checked_mul(2).ok_or(HlError::Overflow)?;
    Ok(Inequality { lhs, relation: Relation::Ge, rhs })
}

pub fn check_slack(n: u32, g: u64) -> Result<bool> {
    slack_sides(n, g).map(|c| c.holds())
}

/// `e_{i+1} + e_j <= e_{i+j}` for `1 <= i <= j`.
pub fn merge_sides(i: u64, j: u64) -> Result<Inequality> {
    if i == 0 || i > j {
        return Err(domain(format!("merge requires 1 <= i <= j, got ({i}, {j})")));
    }
    let lhs = e_g(i + 1)?.checked_add(e_g(j)?).ok_or(HlError::Overflow)?;
    Ok(Inequality { lhs, relation: Relation::Le, rhs: e_g(i.checked_add(j).ok_or(HlError::Overflow)?)? })
}

pub fn check_merge(i: u64, j: u64) -> Result<bool> {
    merge_sides(i, j).map(|c| c.holds())
}

/// `n(g+1) - e_{g+1} > n g - e_g` for `1 <= g < 2^ceil(n/2)`, `2 <= n <= 64`.
pub fn strict_increase_sides(n: u32, g: u64) -> Result<Inequality> {
    if !(2..=64).contains(&n) || g == 0 || g >= proven_g_max(n) {
        return Err(domain(format!(
            "strict increase requires 2 <= n <= 64 and 1 <= g < 2^ceil(n/2), got n = {n}, g = {g}"
        )));
    }
    let at = |x: u64| -> Result<u64> {
        (n as u64).checked_mul(x).and_then(|v| v.checked_sub(e_g(x).ok()?)).ok_or(HlError::Overflow)
    };
    Ok(Inequality { lhs: at(g + 1)?, relation: Relation::Gt, rhs: at(g)? })
}

pub fn check_strict_increase(n: u32, g: u64) -> Result<bool> {
    strict_increase_sides(n, g).map(|c| c.holds())
}
