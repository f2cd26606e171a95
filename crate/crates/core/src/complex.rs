//! The exterior complex `E(h_{i,j})_n`.
//!
//! Monomials are square-free products of the `n^2` generators, stored as a
//! bitmask indexed by `(i-1)*n + j` in the lexicographic order of `(i, j)`.
//! Products carry the Koszul sign of the merge, the differential
//! `d(h_{i,j}) = sum_{s=1}^{i-1} h_{s,j} h_{i-s,s+j}` extends as a graded
//! derivation, and duality sends a monomial to its complement, normalized
//! so that `dual(m) * m = +g_n` on the nose.

use std::collections::BTreeMap;

use crate::arithmetic::{mulmod, InternalDegree, PrimeContext};
use crate::{Error, Result};

/// One exterior generator `h_{i,j}` with `1 <= i <= n` and `j` in `Z/n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GeneratorId {
    pub i: u32,
    pub j: u32,
}

impl GeneratorId {
    pub fn new(i: u32, j: u32, n: u32) -> Result<Self> {
        if i < 1 || i > n || j >= n {
            return Err(Error::InvalidGenerator { i, j, n });
        }
        Ok(GeneratorId { i, j })
    }

    /// Position in the lexicographic order of `(i, j)`.
    pub fn index(self, n: u32) -> u32 {
        (self.i - 1) * n + self.j
    }

    pub fn from_index(idx: u32, n: u32) -> Self {
        GeneratorId {
            i: idx / n + 1,
            j: idx % n,
        }
    }

    /// `"i,j"`, the wire form used in reports.
    pub fn label(self) -> String {
        format!("{},{}", self.i, self.j)
    }
}

impl std::fmt::Display for GeneratorId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "h{}{}", self.i, self.j)
    }
}

/// A square-free monomial as a bitmask over the generator indices.  The
/// ascending bit order is exactly the sorted lexicographic order of the
/// factors, and comparing masks numerically is the canonical (colex)
/// ordering used for bases.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial {
    bits: u64,
}

impl Monomial {
    /// The empty product.
    pub const ONE: Monomial = Monomial { bits: 0 };

    pub fn from_bits(bits: u64) -> Self {
        Monomial { bits }
    }

    pub fn bits(self) -> u64 {
        self.bits
    }

    /// Cohomological degree: the number of factors.
    pub fn s(self) -> u32 {
        self.bits.count_ones()
    }

    pub fn is_one(self) -> bool {
        self.bits == 0
    }

    pub fn contains(self, g: GeneratorId, n: u32) -> bool {
        self.bits >> g.index(n) & 1 == 1
    }

    /// Factors in ascending lexicographic order.
    pub fn members(self, n: u32) -> Vec<GeneratorId> {
        let mut out = Vec::with_capacity(self.s() as usize);
        let mut bb = self.bits;
        while bb != 0 {
            out.push(GeneratorId::from_index(bb.trailing_zeros(), n));
            bb &= bb - 1;
        }
        out
    }

    /// `"i,j"` labels of the factors, sorted.
    pub fn labels(self, n: u32) -> Vec<String> {
        self.members(n).iter().map(|g| g.label()).collect()
    }

    pub fn display(self, n: u32) -> String {
        if self.is_one() {
            return "1".to_string();
        }
        self.members(n)
            .iter()
            .map(|g| g.to_string())
            .collect::<Vec<_>>()
            .join(" ")
    }
}

/// A monomial with a unit sign.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SignedMonomial {
    pub monomial: Monomial,
    pub sign: i8,
}

/// Koszul sign of concatenating the sorted factor lists `a` then `b`:
/// `(-1)^{#\{(x,y) : x in a, y in b, x > y\}}`.
fn merge_sign(a: u64, b: u64) -> i8 {
    let mut inv = 0u32;
    let mut bb = b;
    while bb != 0 {
        let y = bb.trailing_zeros();
        inv += (a >> y >> 1).count_ones();
        bb &= bb - 1;
    }
    if inv.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// An `F_p`-linear combination of monomials in one bidegree.  The zero
/// cochain keeps its bidegree tag.  Coefficients lie in `1..p`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cochain {
    terms: BTreeMap<Monomial, u64>,
    s: u32,
    t_raw: u64,
}

impl Cochain {
    pub fn zero(s: u32, t_raw: u64) -> Self {
        Cochain {
            terms: BTreeMap::new(),
            s,
            t_raw,
        }
    }

    pub fn s(&self) -> u32 {
        self.s
    }

    /// Canonical internal degree in `[0, period)`.
    pub fn t_raw(&self) -> u64 {
        self.t_raw
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: Monomial) -> u64 {
        self.terms.get(&m).copied().unwrap_or(0)
    }

    /// Terms in canonical monomial order.
    pub fn terms(&self) -> impl Iterator<Item = (Monomial, u64)> + '_ {
        self.terms.iter().map(|(&m, &c)| (m, c))
    }

    pub fn support(&self) -> Vec<Monomial> {
        self.terms.keys().copied().collect()
    }

    /// `([labels of factors], coefficient)` pairs for serialization.
    pub fn terms_labeled(&self, n: u32) -> Vec<(Vec<String>, u64)> {
        self.terms().map(|(m, c)| (m.labels(n), c)).collect()
    }

    fn insert(&mut self, p: u64, m: Monomial, c: u64) {
        let entry = self.terms.entry(m).or_insert(0);
        *entry = (*entry + c) % p;
        if *entry == 0 {
            self.terms.remove(&m);
        }
    }
}

/// The exterior complex at a fixed context, with per-generator degree
/// tables precomputed.
#[derive(Debug, Clone)]
pub struct ExteriorComplex {
    ctx: PrimeContext,
    gen_raw: Vec<u64>,
    gen_reduced: Vec<u64>,
}

impl ExteriorComplex {
    pub fn new(ctx: PrimeContext) -> Result<Self> {
        let nn = ctx.generator_count();
        if nn > 63 {
            return Err(Error::TooManyGenerators(nn));
        }
        let n = ctx.n();
        let en = ctx.e_n();
        let mut gen_raw = Vec::with_capacity(nn as usize);
        let mut gen_reduced = Vec::with_capacity(nn as usize);
        for i in 1..=n {
            for j in 0..n {
                // |h_ij| = 2 p^j (p^i - 1) = q * (p^j e(i)); reduced degree
                // is p^j e(i) mod e(n).
                let red = mulmod(ctx.pow_p_mod(j, en), ctx.e(i) % en, en);
                gen_reduced.push(red);
                gen_raw.push(red * ctx.q() % ctx.period());
            }
        }
        Ok(ExteriorComplex {
            ctx,
            gen_raw,
            gen_reduced,
        })
    }

    pub fn ctx(&self) -> &PrimeContext {
        &self.ctx
    }

    pub fn generator_count(&self) -> u32 {
        self.ctx.generator_count()
    }

    /// All generators in lexicographic order.
    pub fn generators(&self) -> Vec<GeneratorId> {
        let n = self.ctx.n();
        (0..self.generator_count())
            .map(|idx| GeneratorId::from_index(idx, n))
            .collect()
    }

    /// Internal degree of `h_{i,j}`: raw mod the period, reduced mod `e(n)`.
    pub fn generator_degree(&self, g: GeneratorId) -> InternalDegree {
        let idx = g.index(self.ctx.n()) as usize;
        InternalDegree {
            raw: self.gen_raw[idx],
            reduced: Some(self.gen_reduced[idx]),
        }
    }

    pub fn monomial_from_generators(&self, gens: &[(u32, u32)]) -> Result<Monomial> {
        let n = self.ctx.n();
        let mut bits = 0u64;
        for &(i, j) in gens {
            let g = GeneratorId::new(i, j, n)?;
            let bit = 1u64 << g.index(n);
            if bits & bit != 0 {
                return Err(Error::DuplicateGenerator);
            }
            bits |= bit;
        }
        Ok(Monomial { bits })
    }

    pub fn monomial_degree(&self, m: Monomial) -> InternalDegree {
        InternalDegree {
            raw: self.fold_mask(m.bits, &self.gen_raw, self.ctx.period()),
            reduced: Some(self.monomial_reduced_degree(m)),
        }
    }

    /// Sum of the factors' reduced degrees mod `e(n)`.
    pub fn monomial_reduced_degree(&self, m: Monomial) -> u64 {
        self.fold_mask(m.bits, &self.gen_reduced, self.ctx.e_n())
    }

    fn fold_mask(&self, mask: u64, table: &[u64], modulus: u64) -> u64 {
        let mut acc = 0u64;
        let mut bb = mask;
        while bb != 0 {
            acc += table[bb.trailing_zeros() as usize];
            if acc >= modulus {
                acc -= modulus;
            }
            bb &= bb - 1;
        }
        acc
    }

    /// The top class `g_n`, the product of all `n^2` generators.
    pub fn top_class(&self) -> Monomial {
        Monomial {
            bits: (1u64 << self.generator_count()) - 1,
        }
    }

    /// Exterior product of monomials: `None` when a factor repeats,
    /// otherwise the union with the Koszul merge sign.
    pub fn multiply_monomials(&self, a: Monomial, b: Monomial) -> Option<SignedMonomial> {
        if a.bits & b.bits != 0 {
            return None;
        }
        Some(SignedMonomial {
            monomial: Monomial {
                bits: a.bits | b.bits,
            },
            sign: merge_sign(a.bits, b.bits),
        })
    }

    /// A monomial as a cochain with coefficient 1.
    pub fn cochain(&self, m: Monomial) -> Cochain {
        let mut c = Cochain::zero(m.s(), self.monomial_degree(m).raw);
        c.insert(self.ctx.p(), m, 1);
        c
    }

    pub fn cochain_from_terms<I>(&self, s: u32, t_raw: u64, terms: I) -> Cochain
    where
        I: IntoIterator<Item = (Monomial, u64)>,
    {
        let mut c = Cochain::zero(s, t_raw);
        for (m, coeff) in terms {
            debug_assert_eq!(m.s(), s);
            debug_assert_eq!(self.monomial_degree(m).raw, t_raw);
            c.insert(self.ctx.p(), m, coeff % self.ctx.p());
        }
        c
    }

    /// Bilinear product; bidegrees add.
    pub fn multiply(&self, x: &Cochain, y: &Cochain) -> Cochain {
        let p = self.ctx.p();
        let mut out = Cochain::zero(x.s + y.s, (x.t_raw + y.t_raw) % self.ctx.period());
        for (mx, cx) in x.terms() {
            for (my, cy) in y.terms() {
                if let Some(sm) = self.multiply_monomials(mx, my) {
                    let mut c = cx * cy % p;
                    if sm.sign < 0 {
                        c = (p - c) % p;
                    }
                    out.insert(p, sm.monomial, c);
                }
            }
        }
        out
    }

    /// Raw differential terms of a monomial, repeated monomials not yet
    /// collected: each factor `g_r` (position `r`) contributes
    /// `(-1)^{r-1} d(g_r) * (m \ g_r)`.
    fn differential_terms(&self, m: Monomial) -> Vec<(u64, i8)> {
        let n = self.ctx.n();
        let mut out = Vec::new();
        let mut bb = m.bits;
        let mut pos = 0u32;
        while bb != 0 {
            let g = bb.trailing_zeros();
            let leib: i8 = if pos.is_multiple_of(2) { 1 } else { -1 };
            let rest = m.bits & !(1u64 << g);
            let i = g / n + 1;
            let j = g % n;
            for s in 1..i {
                let a = (s - 1) * n + j;
                let b = (i - s - 1) * n + (s + j) % n;
                let pair = (1u64 << a) | (1u64 << b);
                if pair & rest != 0 {
                    continue;
                }
                let pair_sign: i8 = if a < b { 1 } else { -1 };
                let sign = leib * pair_sign * merge_sign(pair, rest);
                out.push((rest | pair, sign));
            }
            pos += 1;
            bb &= bb - 1;
        }
        out
    }

    /// Differential of a single monomial, collected mod `p`.
    pub fn differential_monomial(&self, m: Monomial) -> Cochain {
        let p = self.ctx.p();
        let mut out = Cochain::zero(m.s() + 1, self.monomial_degree(m).raw);
        for (bits, sign) in self.differential_terms(m) {
            let c = if sign < 0 { p - 1 } else { 1 };
            out.insert(p, Monomial { bits }, c);
        }
        out
    }

    /// Linear extension of the differential; output bidegree `(s+1, t)`.
    pub fn differential(&self, x: &Cochain) -> Cochain {
        let p = self.ctx.p();
        let mut out = Cochain::zero(x.s + 1, x.t_raw);
        for (m, coeff) in x.terms() {
            for (bits, sign) in self.differential_terms(m) {
                let c = if sign < 0 { (p - coeff) % p } else { coeff };
                out.insert(p, Monomial { bits }, c);
            }
        }
        out
    }

    /// Complement duality, normalized so that `dual(m) * m = +g_n` exactly.
    /// Bidegrees map `(s, t)` to `(n^2 - s, -t)`.
    pub fn dual(&self, m: Monomial) -> SignedMonomial {
        let comp = Monomial {
            bits: self.top_class().bits & !m.bits,
        };
        SignedMonomial {
            monomial: comp,
            sign: merge_sign(comp.bits, m.bits),
        }
    }

    /// Ordered basis of `C^{s, t}`: all `s`-subsets of the generators with
    /// reduced degree `t_reduced`, in ascending mask (colex) order.
    pub fn basis(&self, s: u32, t_reduced: i64) -> Result<Vec<Monomial>> {
        let nn = self.generator_count();
        if s > nn {
            return Err(Error::DegreeOutOfRange {
                max: nn,
                got: i64::from(s),
            });
        }
        let t = self.ctx.reduced_class(t_reduced);
        if s == 0 {
            return Ok(if t == 0 { vec![Monomial::ONE] } else { vec![] });
        }
        let mut out = Vec::new();
        let limit = 1u64 << nn;
        let mut mask = (1u64 << s) - 1;
        while mask < limit {
            if self.fold_mask(mask, &self.gen_reduced, self.ctx.e_n()) == t {
                out.push(Monomial { bits: mask });
            }
            // Gosper's hack: next mask with the same popcount.
            let c = mask & mask.wrapping_neg();
            let r = mask + c;
            mask = (((r ^ mask) >> 2) / c) | r;
        }
        Ok(out)
    }

    /// All bases at once, bucketed by `(s, reduced degree)`.  One pass over
    /// the `2^{n^2}` masks; only sensible for small contexts.
    pub fn enumerate_all(&self) -> Result<BasisBuckets> {
        let nn = self.generator_count();
        if nn > 24 {
            return Err(Error::TooManyGenerators(nn));
        }
        let en = self.ctx.e_n() as usize;
        let mut buckets = vec![vec![Vec::new(); en]; nn as usize + 1];
        for mask in 0..1u64 << nn {
            let s = mask.count_ones() as usize;
            let t = self.fold_mask(mask, &self.gen_reduced, self.ctx.e_n()) as usize;
            buckets[s][t].push(Monomial { bits: mask });
        }
        Ok(BasisBuckets { buckets })
    }
}

/// Precomputed bases for every bidegree of a small context.
#[derive(Debug, Clone)]
pub struct BasisBuckets {
    // buckets[s][t_reduced]
    buckets: Vec<Vec<Vec<Monomial>>>,
}

impl BasisBuckets {
    pub fn basis(&self, s: u32, t_reduced: u64) -> &[Monomial] {
        &self.buckets[s as usize][t_reduced as usize]
    }

    pub fn count(&self, s: u32, t_reduced: u64) -> usize {
        self.basis(s, t_reduced).len()
    }
}
