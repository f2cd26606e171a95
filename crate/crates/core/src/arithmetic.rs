//! Exact degree and index arithmetic.
//!
//! Everything here is integer bookkeeping: derived constants of a prime
//! context, residue classes modulo the period `2(p^n - 1)` and modulo
//! `e(n) = (p^n - 1)/(p - 1)`, epsilon-vector negation identities,
//! Lambda-sets indexing the cells of dualized generalized Moore spectra,
//! Greek-letter degrees and Moore-dual degree shifts.

use serde::Serialize;

use crate::{Error, Result};

/// Fixed `(p, n)` together with every derived constant the other modules
/// consume.
///
/// * `q = 2p - 2`
/// * `e(i) = (p^i - 1)/(p - 1)`, so `e(0) = 0`, `e(i+1) = p e(i) + 1`
/// * `period = q * e(n) = 2(p^n - 1)`, the degree of `v_n`
/// * `cond_ok`: the collapse condition `n^2 <= 2p - 1` and `n <= p - 2`
/// * `pn_ok`: `p = 3 mod 4`, or `n` even
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimeContext {
    p: u64,
    n: u32,
    q: u64,
    e: Vec<u64>,
    period: u64,
    cond_ok: bool,
    pn_ok: bool,
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl PrimeContext {
    /// Builds the context, rejecting `p = 2`, composite `p`, and `n >= p`.
    pub fn new(p: u64, n: u32) -> Result<Self> {
        if p == 2 || !is_prime(p) {
            return Err(Error::NotOddPrime(p));
        }
        if n < 1 || u64::from(n) >= p {
            return Err(Error::HeightOutOfRange { p, n });
        }
        let mut e = Vec::with_capacity(n as usize + 1);
        e.push(0u64);
        for i in 0..n as usize {
            let next = e[i]
                .checked_mul(p)
                .and_then(|x| x.checked_add(1))
                .ok_or(Error::ContextTooLarge)?;
            e.push(next);
        }
        let q = 2 * p - 2;
        let period = q.checked_mul(e[n as usize]).ok_or(Error::ContextTooLarge)?;
        if period >= (1 << 62) {
            return Err(Error::ContextTooLarge);
        }
        let nn = u64::from(n);
        let cond_ok = nn * nn < 2 * p && nn + 2 <= p;
        let pn_ok = p % 4 == 3 || n.is_multiple_of(2);
        Ok(PrimeContext {
            p,
            n,
            q,
            e,
            period,
            cond_ok,
            pn_ok,
        })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    /// `e(i)` for `0 <= i <= n`.
    pub fn e(&self, i: u32) -> u64 {
        self.e[i as usize]
    }

    /// `e(n)`, the reduced-degree modulus.
    pub fn e_n(&self) -> u64 {
        self.e[self.n as usize]
    }

    /// `2(p^n - 1)`, the internal-degree modulus.
    pub fn period(&self) -> u64 {
        self.period
    }

    pub fn cond_ok(&self) -> bool {
        self.cond_ok
    }

    pub fn pn_ok(&self) -> bool {
        self.pn_ok
    }

    /// Number of exterior generators, `n^2`.
    pub fn generator_count(&self) -> u32 {
        self.n * self.n
    }

    /// Canonicalizes an integer internal degree into `[0, period)`,
    /// recording the reduced class `raw / q` when defined.
    pub fn internal_degree(&self, t: i64) -> InternalDegree {
        let raw = t.rem_euclid(self.period as i64) as u64;
        let reduced = raw.is_multiple_of(self.q).then(|| raw / self.q);
        InternalDegree { raw, reduced }
    }

    /// Canonical residue of `t` modulo `e(n)`.
    pub fn reduced_class(&self, t: i64) -> u64 {
        t.rem_euclid(self.e_n() as i64) as u64
    }

    /// `p^j mod m` by repeated multiplication.
    pub(crate) fn pow_p_mod(&self, j: u32, m: u64) -> u64 {
        let mut acc = 1u64 % m;
        for _ in 0..j {
            acc = mulmod(acc, self.p, m);
        }
        acc
    }
}

pub(crate) fn mulmod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

/// Representative of `value mod modulus` in `(-modulus/2, modulus/2]`.
pub fn signed_rep(value: u64, modulus: u64) -> i64 {
    let v = value % modulus;
    if 2 * v > modulus {
        v as i64 - modulus as i64
    } else {
        v as i64
    }
}

/// An internal degree: canonical residue mod the period, plus the reduced
/// class mod `e(n)` whenever the residue is divisible by `q`.  Every degree
/// occurring in the complex is divisible by `q`, so `reduced` is always
/// present there.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct InternalDegree {
    pub raw: u64,
    pub reduced: Option<u64>,
}

/// A vector of bits `eps_0 .. eps_{n-1}`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct EpsilonVector(Vec<u8>);

impl EpsilonVector {
    pub fn new(bits: Vec<u8>) -> Self {
        assert!(bits.iter().all(|&b| b <= 1), "epsilon entries must be 0/1");
        EpsilonVector(bits)
    }

    /// Bit `i` of `mask` becomes `eps_i`.
    pub fn from_mask(mask: u32, len: u32) -> Self {
        EpsilonVector((0..len).map(|i| ((mask >> i) & 1) as u8).collect())
    }

    /// All `2^len` vectors, in ascending mask order.
    pub fn all(len: u32) -> impl Iterator<Item = EpsilonVector> {
        (0u32..1 << len).map(move |mask| EpsilonVector::from_mask(mask, len))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn get(&self, i: usize) -> u8 {
        self.0[i]
    }

    pub fn iter(&self) -> impl Iterator<Item = u8> + '_ {
        self.0.iter().copied()
    }

    /// `sum eps_i`.
    pub fn sum(&self) -> u32 {
        self.0.iter().map(|&b| u32::from(b)).sum()
    }
}

impl std::fmt::Display for EpsilonVector {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "(")?;
        for (k, b) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{b}")?;
        }
        write!(f, ")")
    }
}

/// Output of [`lemma_int_negate`]: the class `a = sum eps_i e(i)` mod
/// `e(n)`, its negative computed through the epsilon formula, and the
/// digit expansion `a = sum a_k p^k`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LemmaIntWitness {
    pub a: u64,
    pub neg_a: u64,
    /// `a_0 .. a_{n-1}` with `a_k = sum_{i > k} eps_i`.
    pub digits: Vec<u64>,
}

/// Negation identities for `a = sum eps_i e(i)` in `Z/e(n)`:
/// `-a = n + sum (p - 1 - eps_i) e(i)` and, through the digit expansion,
/// `-a = sum_{k <= n-2} (p - a_k) p^k + 1`.
pub fn lemma_int_negate(ctx: &PrimeContext, eps: &EpsilonVector) -> Result<LemmaIntWitness> {
    let n = ctx.n() as usize;
    if eps.len() != n {
        return Err(Error::EpsilonLength {
            expected: ctx.n(),
            got: eps.len(),
        });
    }
    let en = ctx.e_n();
    let a = (0..n)
        .map(|i| u64::from(eps.get(i)) * ctx.e(i as u32))
        .sum::<u64>()
        % en;
    let mut neg = u64::from(ctx.n());
    for i in 0..n {
        neg = (neg + (ctx.p() - 1 - u64::from(eps.get(i))) % en * (ctx.e(i as u32) % en)) % en;
    }
    let digits = (0..n)
        .map(|k| (k + 1..n).map(|i| u64::from(eps.get(i))).sum())
        .collect();
    Ok(LemmaIntWitness {
        a,
        neg_a: neg,
        digits,
    })
}

/// One element of a Lambda-set: `u = sum eps_i (e_i (2 p^i - 2) + 1)`,
/// with `s(u) = sum eps_i` and `u_bar = u - s(u)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LambdaElement {
    pub u: u64,
    pub s_of_u: u32,
    pub u_bar: u64,
    pub eps: EpsilonVector,
}

/// The `2^k` elements of `Lambda(J_k)` for the regular ideal with the given
/// exponents `(e_0, .., e_{k-1})`, sorted by `u`.  All exponents `1` gives
/// `Lambda_k` of the prime ideal `I_k`, where the summands are `e(i) q + 1`.
pub fn lambda_set(ctx: &PrimeContext, exponents: &[u64]) -> Result<Vec<LambdaElement>> {
    let k = exponents.len();
    if k > ctx.n() as usize {
        return Err(Error::LambdaTooLong { n: ctx.n(), got: k });
    }
    if exponents.contains(&0) {
        return Err(Error::ZeroExponent);
    }
    let mut summands = Vec::with_capacity(k);
    for (i, &ei) in exponents.iter().enumerate() {
        // |v_i^{e_i}| + 1 = e_i (2 p^i - 2) + 1; the i = 0 term is always 1.
        let vi = 2
            * (ctx
                .p()
                .checked_pow(i as u32)
                .ok_or(Error::ContextTooLarge)?
                - 1);
        let s = ei
            .checked_mul(vi)
            .and_then(|x| x.checked_add(1))
            .ok_or(Error::ContextTooLarge)?;
        summands.push(s);
    }
    let mut out = Vec::with_capacity(1 << k);
    for mask in 0u32..1 << k {
        let eps = EpsilonVector::from_mask(mask, k as u32);
        let mut u = 0u64;
        for (i, &summand) in summands.iter().enumerate() {
            if eps.get(i) == 1 {
                u = u.checked_add(summand).ok_or(Error::ContextTooLarge)?;
            }
        }
        let s_of_u = eps.sum();
        out.push(LambdaElement {
            u,
            s_of_u,
            u_bar: u - u64::from(s_of_u),
            eps,
        });
    }
    out.sort_by(|a, b| a.u.cmp(&b.u).then(a.eps.cmp(&b.eps)));
    Ok(out)
}

/// Degree data of the `n`-th Greek letter element with suffix `s`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct GreekDegree {
    /// Family index (`n`): alpha = 1, beta = 2, gamma = 3, delta = 4, ...
    pub family: u32,
    pub suffix: i64,
    /// Internal degree `t = 2s(p^n - 1) - 2 sum_{k=1}^{n-1} (p^k - 1)`.
    pub t: i64,
    /// Stem `t - n`.
    pub stem: i64,
}

/// The Greek-letter internal degree as a plain formula of `(p, n, s)`.
pub fn greek_internal_degree(p: u64, n: u32, s: i64) -> Result<i64> {
    if s == 0 {
        return Err(Error::ZeroSuffix);
    }
    let pn = (p as i128).checked_pow(n).ok_or(Error::ContextTooLarge)?;
    let mut t = 2i128 * s as i128 * (pn - 1);
    for k in 1..n {
        t -= 2 * ((p as i128).pow(k) - 1);
    }
    i64::try_from(t).map_err(|_| Error::ContextTooLarge)
}

/// [`greek_internal_degree`] packaged with the family index and stem.
pub fn greek_degree(ctx: &PrimeContext, s: i64) -> Result<GreekDegree> {
    let t = greek_internal_degree(ctx.p(), ctx.n(), s)?;
    Ok(GreekDegree {
        family: ctx.n(),
        suffix: s,
        t,
        stem: t - i64::from(ctx.n()),
    })
}

/// Degree shift `d_J = n + sum_{i=1}^{n-1} e_i (2 p^i - 2)` of the dual of a
/// generalized Moore spectrum with exponents `(e_0, .., e_{n-1})`.  With all
/// exponents `1` this is `d_{I_n} = 2(e(n) - n) + n`.
pub fn moore_dual_shift(ctx: &PrimeContext, exponents: &[u64]) -> Result<u64> {
    let n = ctx.n() as usize;
    if exponents.len() != n {
        return Err(Error::ExponentLength {
            expected: ctx.n(),
            got: exponents.len(),
        });
    }
    if exponents.contains(&0) {
        return Err(Error::ZeroExponent);
    }
    let mut d = u64::from(ctx.n());
    for (i, &ei) in exponents.iter().enumerate().skip(1) {
        let vi = 2
            * (ctx
                .p()
                .checked_pow(i as u32)
                .ok_or(Error::ContextTooLarge)?
                - 1);
        d = ei
            .checked_mul(vi)
            .and_then(|x| x.checked_add(d))
            .ok_or(Error::ContextTooLarge)?;
    }
    Ok(d)
}

/// The degree reduction used to trade an Ext bidegree for a complex slice:
/// writing `t = aq + b` for `t` in `Lambda_n`, the target cohomological
/// degree is `q + e - a_0 - eps_0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ExtReduction {
    /// `a = sum eps_i e(i)`.
    pub a: u64,
    /// `b = sum eps_i`, the residue of `t` mod `q`.
    pub b: u32,
    /// Leading digit `a_0 = sum_{i >= 1} eps_i` of `a`.
    pub a0: u32,
    pub eps0: u8,
    /// `m = q - b`, so `m + t = (a + 1) q`.
    pub m: u64,
    /// `q + e - a_0 - eps_0`.
    pub target_s: u64,
}

/// Reduction arithmetic for `t` in `Lambda_n` (prime-ideal exponents) and a
/// connecting shift `e` of 1 or 2.  The identities `m + t = (a+1)q` and
/// `b - a_0 = eps_0` are asserted.
pub fn ext_reduction(ctx: &PrimeContext, elem: &LambdaElement, e: u32) -> Result<ExtReduction> {
    if !(1..=2).contains(&e) {
        return Err(Error::InvalidExtShift(e));
    }
    let n = ctx.n() as usize;
    if elem.eps.len() != n {
        return Err(Error::EpsilonLength {
            expected: ctx.n(),
            got: elem.eps.len(),
        });
    }
    // Membership in Lambda_n for I_n: u must match its own epsilon vector.
    let expected_u: u64 = (0..n)
        .map(|i| u64::from(elem.eps.get(i)) * (ctx.e(i as u32) * ctx.q() + 1))
        .sum();
    if expected_u != elem.u {
        return Err(Error::NotInLambdaN(elem.u));
    }
    let b = elem.eps.sum();
    let a: u64 = (0..n)
        .map(|i| u64::from(elem.eps.get(i)) * ctx.e(i as u32))
        .sum();
    let a0: u32 = (1..n).map(|i| u32::from(elem.eps.get(i))).sum();
    let eps0 = elem.eps.get(0);
    let m = ctx.q() - u64::from(b);
    assert_eq!(m + elem.u, (a + 1) * ctx.q(), "m + t = (a+1)q failed");
    assert_eq!(b - a0, u32::from(eps0), "b - a_0 = eps_0 failed");
    let target_s = ctx.q() + u64::from(e) - u64::from(a0) - u64::from(eps0);
    Ok(ExtReduction {
        a,
        b,
        a0,
        eps0,
        m,
        target_s,
    })
}
