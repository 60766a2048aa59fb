//! Dense truncated series in `z` and `q` with exact coefficients, the
//! inverse q-Pochhammer symbol, and the Andrews multiple sum
//!
//! ```text
//!   sum over (m_1..m_{k-1}) of  z^(N_1+..+N_{k-1}) q^(N_1^2+..+N_{k-1}^2 + N_i+..+N_{k-1})
//!                               / ((q)_{m_1} ... (q)_{m_{k-1}}),     N_j = m_j + .. + m_{k-1}
//! ```

use std::collections::{BTreeMap, HashMap};
use std::fmt::{Display, Write};

use num_bigint::BigInt;
use num_traits::{CheckedAdd, CheckedMul, CheckedSub, One, Zero};

use crate::config::BoundaryConfig;
use crate::error::{Error, Result};

/// Coefficient ring. Every operation is checked; overflow is an error.
pub trait Coeff: Clone + PartialEq + Zero + One + CheckedAdd + CheckedSub + CheckedMul + Display + Send + Sync {
    fn from_u64(v: u64) -> Self;
}

impl Coeff for i64 {
    fn from_u64(v: u64) -> Self {
        i64::try_from(v).expect("count fits in i64")
    }
}

impl Coeff for BigInt {
    fn from_u64(v: u64) -> Self {
        BigInt::from(v)
    }
}

/// Coefficients of `z^m q^n` for `m <= z_order`, `n <= q_order`.
#[derive(Debug, Clone, PartialEq)]
pub struct TruncatedSeries<C = i64> {
    q_order: usize,
    z_order: usize,
    coeffs: Vec<C>,
}

fn add<C: Coeff>(a: &C, b: &C) -> Result<C> {
    a.checked_add(b).ok_or(Error::Overflow)
}

impl<C: Coeff> TruncatedSeries<C> {
    pub fn zero(q_order: usize, z_order: usize) -> Self {
        Self {
            q_order,
            z_order,
            coeffs: vec![C::zero(); (q_order + 1) * (z_order + 1)],
        }
    }

    pub fn one(q_order: usize, z_order: usize) -> Self {
        let mut s = Self::zero(q_order, z_order);
        s.coeffs[0] = C::one();
        s
    }

    pub fn q_order(&self) -> usize {
        self.q_order
    }

    pub fn z_order(&self) -> usize {
        self.z_order
    }

    fn idx(&self, m: usize, n: usize) -> usize {
        m * (self.q_order + 1) + n
    }

    /// Coefficient of `z^m q^n`; zero beyond the truncation.
    pub fn get(&self, m: usize, n: usize) -> C {
        if m > self.z_order || n > self.q_order {
            return C::zero();
        }
        self.coeffs[self.idx(m, n)].clone()
    }

    pub fn set(&mut self, m: usize, n: usize, value: C) {
        assert!(m <= self.z_order && n <= self.q_order, "({m}, {n}) beyond truncation");
        let at = self.idx(m, n);
        self.coeffs[at] = value;
    }

    fn check_shape(&self, other: &Self) {
        assert!(
            self.q_order == other.q_order && self.z_order == other.z_order,
            "series truncations differ"
        );
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check_shape(other);
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| add(a, b))
            .collect::<Result<_>>()?;
        Ok(Self { coeffs, ..*self })
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.check_shape(other);
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a.checked_sub(b).ok_or(Error::Overflow))
            .collect::<Result<_>>()?;
        Ok(Self { coeffs, ..*self })
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check_shape(other);
        let mut out = Self::zero(self.q_order, self.z_order);
        for m1 in 0..=self.z_order {
            for n1 in 0..=self.q_order {
                let a = &self.coeffs[self.idx(m1, n1)];
                if a.is_zero() {
                    continue;
                }
                for m2 in 0..=self.z_order - m1 {
                    for n2 in 0..=self.q_order - n1 {
                        let b = &other.coeffs[other.idx(m2, n2)];
                        if b.is_zero() {
                            continue;
                        }
                        let at = out.idx(m1 + m2, n1 + n2);
                        let prod = a.checked_mul(b).ok_or(Error::Overflow)?;
                        out.coeffs[at] = add(&out.coeffs[at], &prod)?;
                    }
                }
            }
        }
        Ok(out)
    }

    /// Multiply by `z^dz q^dq`, dropping what falls off the end.
    pub fn shifted(&self, dz: usize, dq: usize) -> Self {
        let mut out = Self::zero(self.q_order, self.z_order);
        for m in 0..=self.z_order.saturating_sub(dz) {
            for n in 0..=self.q_order.saturating_sub(dq) {
                if m + dz <= self.z_order && n + dq <= self.q_order {
                    let at = out.idx(m + dz, n + dq);
                    out.coeffs[at] = self.get(m, n);
                }
            }
        }
        out
    }

    /// `sum_m c[m][n]` for each `n`.
    pub fn z_summed(&self) -> Result<Vec<C>> {
        (0..=self.q_order)
            .map(|n| (0..=self.z_order).try_fold(C::zero(), |acc, m| add(&acc, &self.coeffs[self.idx(m, n)])))
            .collect()
    }

    /// Nonzero `(m, n, coeff)` sorted by `(m, n)`.
    pub fn nonzero(&self) -> Vec<(usize, usize, C)> {
        let mut out = Vec::new();
        for m in 0..=self.z_order {
            for n in 0..=self.q_order {
                let c = &self.coeffs[self.idx(m, n)];
                if !c.is_zero() {
                    out.push((m, n, c.clone()));
                }
            }
        }
        out
    }

    /// CSV rows `m,n,coeff` for every nonzero coefficient.
    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        for (m, n, c) in self.nonzero() {
            let _ = writeln!(out, "{m},{n},{c}");
        }
        out
    }
}

/// `1 / (q)_m` in `q` alone, truncated at `q^q_order`.
pub fn inv_pochhammer<C: Coeff>(m: usize, q_order: usize) -> Result<TruncatedSeries<C>> {
    let mut s = TruncatedSeries::<C>::one(q_order, 0);
    for part in 1..=m {
        // times 1/(1 - q^part): running sum with stride `part`
        for n in part..=q_order {
            let v = add(&s.coeffs[n], &s.coeffs[n - part])?;
            s.coeffs[n] = v;
        }
    }
    Ok(s)
}

/// `(q)_m = (1 - q)(1 - q^2)...(1 - q^m)`, truncated.
pub fn pochhammer<C: Coeff>(m: usize, q_order: usize) -> Result<TruncatedSeries<C>> {
    let mut s = TruncatedSeries::<C>::one(q_order, 0);
    for part in 1..=m {
        for n in (part..=q_order).rev() {
            let v = s.coeffs[n].checked_sub(&s.coeffs[n - part]).ok_or(Error::Overflow)?;
            s.coeffs[n] = v;
        }
    }
    Ok(s)
}

/// `N_1^2 + .. + N_{k-1}^2 + N_i + .. + N_{k-1}` for component lengths `m_j`.
pub fn andrews_exponent(cfg: BoundaryConfig, lengths: &[usize]) -> u64 {
    let tails = suffix_sums(cfg, lengths);
    let squares: u64 = tails.iter().map(|&t| (t * t) as u64).sum();
    let linear: u64 = tails.iter().skip(cfg.i() - 1).map(|&t| t as u64).sum();
    squares + linear
}

/// `N_1 + .. + N_{k-1}`, the `z` degree of a summand.
pub fn andrews_z_degree(cfg: BoundaryConfig, lengths: &[usize]) -> usize {
    suffix_sums(cfg, lengths).iter().sum()
}

fn suffix_sums(cfg: BoundaryConfig, lengths: &[usize]) -> Vec<usize> {
    let mut tails = vec![0; cfg.max_charge()];
    let mut acc = 0;
    for j in (0..cfg.max_charge()).rev() {
        acc += lengths.get(j).copied().unwrap_or(0);
        tails[j] = acc;
    }
    tails
}

/// Length vectors whose summand reaches below `q^(q_order+1)` and `z^(z_order+1)`.
pub fn andrews_terms(cfg: BoundaryConfig, q_order: usize, z_order: usize) -> Vec<Vec<usize>> {
    let mut search = TermSearch {
        cfg,
        q_order,
        z_order,
        cur: Vec::new(),
        out: Vec::new(),
    };
    search.go(cfg.max_charge(), 0, 0, 0);
    let mut out = search.out;
    out.sort();
    out
}

struct TermSearch {
    cfg: BoundaryConfig,
    q_order: usize,
    z_order: usize,
    cur: Vec<usize>,
    out: Vec<Vec<usize>>,
}

impl TermSearch {
    /// Choose `m_j`, then recurse on `j - 1`; `tail` is `N_{j+1}`.
    fn go(&mut self, j: usize, tail: usize, exp: usize, deg: usize) {
        if j == 0 {
            let mut v = self.cur.clone();
            v.reverse();
            self.out.push(v);
            return;
        }
        for mj in 0.. {
            let big_n = tail + mj;
            let e = exp + big_n * big_n + if j >= self.cfg.i() { big_n } else { 0 };
            let d = deg + big_n;
            // N_1..N_{j-1} are all at least N_j
            let (floor_e, floor_d) = (e + (j - 1) * big_n * big_n, d + (j - 1) * big_n);
            if floor_e > self.q_order || floor_d > self.z_order {
                break;
            }
            self.cur.push(mj);
            self.go(j - 1, big_n, e, d);
            self.cur.pop();
        }
    }
}

pub fn andrews_sum(cfg: BoundaryConfig, q_order: usize, z_order: usize) -> Result<TruncatedSeries<i64>> {
    andrews_sum_in(cfg, q_order, z_order)
}

/// [`andrews_sum`] over any coefficient ring, e.g. `BigInt`.
pub fn andrews_sum_in<C: Coeff>(cfg: BoundaryConfig, q_order: usize, z_order: usize) -> Result<TruncatedSeries<C>> {
    let mut inv: HashMap<usize, TruncatedSeries<C>> = HashMap::new();
    let mut total = TruncatedSeries::zero(q_order, z_order);
    for lengths in andrews_terms(cfg, q_order, z_order) {
        let exp = andrews_exponent(cfg, &lengths) as usize;
        let deg = andrews_z_degree(cfg, &lengths);
        let mut q_part = TruncatedSeries::<C>::one(q_order, 0);
        for &m in &lengths {
            if m == 0 {
                continue;
            }
            if let std::collections::hash_map::Entry::Vacant(e) = inv.entry(m) {
                e.insert(inv_pochhammer(m, q_order)?);
            }
            q_part = q_part.checked_mul(&inv[&m])?;
        }
        for n in 0..=q_order - exp {
            let at = total.idx(deg, n + exp);
            total.coeffs[at] = add(&total.coeffs[at], &q_part.coeffs[n])?;
        }
    }
    Ok(total)
}

/// Series with `counts[(n, m)]` as the coefficient of `z^m q^n`. Every cell
/// with `n <= q_order`, `m <= z_order` must be present.
pub fn gf_from_counts(
    counts: &BTreeMap<(usize, usize), u64>,
    q_order: usize,
    z_order: usize,
) -> Result<TruncatedSeries<i64>> {
    let mut s = TruncatedSeries::zero(q_order, z_order);
    for n in 0..=q_order {
        for m in 0..=z_order {
            let c = counts.get(&(n, m)).ok_or(Error::IncompleteCounts { n, m })?;
            s.set(m, n, i64::from_u64(*c));
        }
    }
    Ok(s)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mismatch<C = i64> {
    pub n: usize,
    pub m: usize,
    pub left: C,
    pub right: C,
}

/// Every `(n, m)` within both truncations where the coefficients differ.
pub fn compare<C: Coeff>(a: &TruncatedSeries<C>, b: &TruncatedSeries<C>) -> Vec<Mismatch<C>> {
    let mut out = Vec::new();
    for m in 0..=a.z_order.min(b.z_order) {
        for n in 0..=a.q_order.min(b.q_order) {
            let (x, y) = (a.get(m, n), b.get(m, n));
            if x != y {
                out.push(Mismatch {
                    n,
                    m,
                    left: x,
                    right: y,
                });
            }
        }
    }
    out
}
