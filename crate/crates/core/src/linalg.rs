//! Dense exact linear algebra over `F_p` and per-slice cohomology.
//!
//! Slice dimensions at the supported contexts stay in the low hundreds, so
//! plain dense Gaussian elimination is the right tool.  Entries are kept in
//! `[0, p)` with `p < 2^16`; intermediate products fit in 64 bits with a
//! single reduction.

use std::collections::HashMap;

use rayon::prelude::*;

use crate::complex::{BasisBuckets, Cochain, ExteriorComplex, Monomial};
use crate::{Error, Result};

/// Dense row-major matrix over `F_p`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FpMatrix {
    p: u64,
    rows: usize,
    cols: usize,
    data: Vec<u64>,
}

fn mod_pow(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}

fn mod_inv(a: u64, p: u64) -> u64 {
    mod_pow(a, p - 2, p)
}

impl FpMatrix {
    pub fn zeros(p: u64, rows: usize, cols: usize) -> Self {
        FpMatrix {
            p,
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn from_rows(p: u64, rows: &[Vec<u64>]) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        let mut m = FpMatrix::zeros(p, nrows, ncols);
        for (r, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), ncols, "ragged rows");
            for (c, &v) in row.iter().enumerate() {
                m.set(r, c, v);
            }
        }
        m
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> u64 {
        self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: u64) {
        self.data[r * self.cols + c] = v % self.p;
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&v| v == 0)
    }

    /// `self * rhs`.
    pub fn mul(&self, rhs: &FpMatrix) -> FpMatrix {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch");
        let mut out = FpMatrix::zeros(self.p, self.rows, rhs.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a == 0 {
                    continue;
                }
                for c in 0..rhs.cols {
                    let v = (out.get(r, c) + a * rhs.get(k, c)) % self.p;
                    out.set(r, c, v);
                }
            }
        }
        out
    }

    /// In-place reduced row echelon form; returns the pivot columns.
    pub fn rref_in_place(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut rank = 0;
        for col in 0..self.cols {
            let Some(piv) = (rank..self.rows).find(|&r| self.get(r, col) != 0) else {
                continue;
            };
            self.swap_rows(rank, piv);
            let inv = mod_inv(self.get(rank, col), self.p);
            for c in col..self.cols {
                let v = self.get(rank, c) * inv % self.p;
                self.set(rank, c, v);
            }
            for r in 0..self.rows {
                if r != rank && self.get(r, col) != 0 {
                    let f = self.get(r, col);
                    for c in col..self.cols {
                        let v = (self.get(r, c) + (self.p - f) * self.get(rank, c)) % self.p;
                        self.set(r, c, v);
                    }
                }
            }
            pivots.push(col);
            rank += 1;
            if rank == self.rows {
                break;
            }
        }
        pivots
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    /// Rank over `F_p`; the input is left untouched.
    pub fn rank(&self) -> usize {
        self.clone().rref_in_place().len()
    }

    /// Basis of the null space `{v : self v = 0}`, one vector per free
    /// column, in ascending column order.
    pub fn kernel_basis(&self) -> Vec<Vec<u64>> {
        let mut rref = self.clone();
        let pivots = rref.rref_in_place();
        let pivot_set: Vec<Option<usize>> = {
            let mut v = vec![None; self.cols];
            for (r, &c) in pivots.iter().enumerate() {
                v[c] = Some(r);
            }
            v
        };
        let mut out = Vec::with_capacity(self.cols - pivots.len());
        for free in 0..self.cols {
            if pivot_set[free].is_some() {
                continue;
            }
            let mut v = vec![0u64; self.cols];
            v[free] = 1;
            for (r, &c) in pivots.iter().enumerate() {
                let coeff = rref.get(r, free);
                if coeff != 0 {
                    v[c] = self.p - coeff;
                }
            }
            out.push(v);
        }
        out
    }

    /// A particular solution of `self x = rhs`, free variables set to zero.
    pub fn solve(&self, rhs: &[u64]) -> Option<Vec<u64>> {
        assert_eq!(rhs.len(), self.rows, "rhs length mismatch");
        // augmented elimination
        let mut aug = FpMatrix::zeros(self.p, self.rows, self.cols + 1);
        for (r, &b) in rhs.iter().enumerate() {
            for c in 0..self.cols {
                aug.set(r, c, self.get(r, c));
            }
            aug.set(r, self.cols, b);
        }
        let pivots = aug.rref_in_place();
        if pivots.contains(&self.cols) {
            return None; // inconsistent
        }
        let mut x = vec![0u64; self.cols];
        for (r, &c) in pivots.iter().enumerate() {
            x[c] = aug.get(r, self.cols);
        }
        Some(x)
    }
}

/// One bidegree `(s, t)` of the complex: ordered bases in degrees `s-1`,
/// `s`, `s+1` at the fixed reduced class, and the two differential
/// matrices.
#[derive(Debug, Clone)]
pub struct BidegreeSlice {
    s: u32,
    t_reduced: u64,
    t_raw: u64,
    basis_in: Vec<Monomial>,
    basis_mid: Vec<Monomial>,
    basis_out: Vec<Monomial>,
    /// `d: C^{s-1} -> C^s`, `|mid| x |in|`.
    d_in: FpMatrix,
    /// `d: C^s -> C^{s+1}`, `|out| x |mid|`.
    d_out: FpMatrix,
}

impl BidegreeSlice {
    pub fn s(&self) -> u32 {
        self.s
    }

    pub fn t_reduced(&self) -> u64 {
        self.t_reduced
    }

    pub fn t_raw(&self) -> u64 {
        self.t_raw
    }

    pub fn basis_in(&self) -> &[Monomial] {
        &self.basis_in
    }

    pub fn basis_mid(&self) -> &[Monomial] {
        &self.basis_mid
    }

    pub fn basis_out(&self) -> &[Monomial] {
        &self.basis_out
    }

    pub fn d_in(&self) -> &FpMatrix {
        &self.d_in
    }

    pub fn d_out(&self) -> &FpMatrix {
        &self.d_out
    }
}

fn diff_matrix(complex: &ExteriorComplex, src: &[Monomial], dst: &[Monomial]) -> FpMatrix {
    let p = complex.ctx().p();
    let index: HashMap<u64, usize> = dst.iter().enumerate().map(|(k, m)| (m.bits(), k)).collect();
    let mut out = FpMatrix::zeros(p, dst.len(), src.len());
    for (col, &m) in src.iter().enumerate() {
        for (tm, c) in complex.differential_monomial(m).terms() {
            let row = *index
                .get(&tm.bits())
                .expect("differential image escaped the target basis");
            out.set(row, col, c);
        }
    }
    out
}

fn slice_from_bases(
    complex: &ExteriorComplex,
    s: u32,
    t_reduced: u64,
    basis_in: Vec<Monomial>,
    basis_mid: Vec<Monomial>,
    basis_out: Vec<Monomial>,
) -> BidegreeSlice {
    let d_in = diff_matrix(complex, &basis_in, &basis_mid);
    let d_out = diff_matrix(complex, &basis_mid, &basis_out);
    BidegreeSlice {
        s,
        t_reduced,
        t_raw: t_reduced * complex.ctx().q() % complex.ctx().period(),
        basis_in,
        basis_mid,
        basis_out,
        d_in,
        d_out,
    }
}

/// Assembles the slice at `(s, t_reduced)` by enumerating the three bases.
pub fn build_slice(complex: &ExteriorComplex, s: u32, t_reduced: i64) -> Result<BidegreeSlice> {
    let nn = complex.generator_count();
    if s > nn {
        return Err(Error::DegreeOutOfRange {
            max: nn,
            got: i64::from(s),
        });
    }
    let t = complex.ctx().reduced_class(t_reduced);
    let basis_in = if s == 0 {
        Vec::new()
    } else {
        complex.basis(s - 1, t as i64)?
    };
    let basis_mid = complex.basis(s, t as i64)?;
    let basis_out = if s == nn {
        Vec::new()
    } else {
        complex.basis(s + 1, t as i64)?
    };
    Ok(slice_from_bases(
        complex, s, t, basis_in, basis_mid, basis_out,
    ))
}

/// Same as [`build_slice`], reading the bases from precomputed buckets.
pub fn build_slice_cached(
    complex: &ExteriorComplex,
    buckets: &BasisBuckets,
    s: u32,
    t_reduced: u64,
) -> BidegreeSlice {
    let nn = complex.generator_count();
    let basis_in = if s == 0 {
        Vec::new()
    } else {
        buckets.basis(s - 1, t_reduced).to_vec()
    };
    let basis_mid = buckets.basis(s, t_reduced).to_vec();
    let basis_out = if s == nn {
        Vec::new()
    } else {
        buckets.basis(s + 1, t_reduced).to_vec()
    };
    slice_from_bases(complex, s, t_reduced, basis_in, basis_mid, basis_out)
}

/// Cohomology of one slice.
#[derive(Debug, Clone)]
pub struct CohomologyResult {
    pub dim: usize,
    /// Cocycles spanning `H` modulo coboundaries, in reduced row echelon
    /// form over the middle basis (pivot coefficient 1), so reports are
    /// reproducible bit for bit.
    pub representatives: Vec<Cochain>,
    pub rank_in: usize,
    pub dim_ker_out: usize,
}

/// `dim H^{s,t} = dim ker(d_out) - rank(d_in)`, with representatives
/// reduced against the image.  Fails if `d_out * d_in != 0`.
pub fn cohomology(complex: &ExteriorComplex, slice: &BidegreeSlice) -> Result<CohomologyResult> {
    let p = complex.ctx().p();
    if slice.basis_mid.is_empty() {
        return Ok(CohomologyResult {
            dim: 0,
            representatives: Vec::new(),
            rank_in: 0,
            dim_ker_out: 0,
        });
    }
    if !slice.basis_in.is_empty()
        && !slice.basis_out.is_empty()
        && !slice.d_out.mul(&slice.d_in).is_zero()
    {
        return Err(Error::NotAComplex {
            s: slice.s,
            t: slice.t_reduced,
        });
    }
    let rank_in = slice.d_in.rank();
    let kernel = slice.d_out.kernel_basis();
    let dim_ker_out = kernel.len();

    // Image of d_in as an RREF row space over the middle basis.
    let image_rows: Vec<Vec<u64>> = (0..slice.d_in.cols())
        .map(|c| {
            (0..slice.d_in.rows())
                .map(|r| slice.d_in.get(r, c))
                .collect()
        })
        .collect();
    let mut image = FpMatrix::from_rows(p, &image_rows);
    let pivots = if image.rows() > 0 {
        image.rref_in_place()
    } else {
        Vec::new()
    };

    // Reduce each kernel vector modulo the image, keep the nonzero ones.
    let mut reduced: Vec<Vec<u64>> = Vec::new();
    for mut v in kernel {
        for (r, &c) in pivots.iter().enumerate() {
            let f = v[c];
            if f != 0 {
                for (k, x) in v.iter_mut().enumerate() {
                    *x = (*x + (p - f) * image.get(r, k)) % p;
                }
            }
        }
        if v.iter().any(|&x| x != 0) {
            reduced.push(v);
        }
    }
    let mut quotient = FpMatrix::from_rows(p, &reduced);
    let qpivots = if quotient.rows() > 0 {
        quotient.rref_in_place()
    } else {
        Vec::new()
    };
    let dim = qpivots.len();
    assert_eq!(
        dim,
        dim_ker_out - rank_in,
        "quotient dimension disagrees with rank count"
    );
    let representatives = (0..dim)
        .map(|r| {
            complex.cochain_from_terms(
                slice.s,
                slice.t_raw,
                slice.basis_mid.iter().enumerate().filter_map(|(c, &m)| {
                    let v = quotient.get(r, c);
                    (v != 0).then_some((m, v))
                }),
            )
        })
        .collect();
    Ok(CohomologyResult {
        dim,
        representatives,
        rank_in,
        dim_ker_out,
    })
}

/// Coboundary membership: `Some(witness)` with `d(witness) = x` when `x`
/// lies in the image of `d_in`, `None` otherwise.
pub fn in_image(
    complex: &ExteriorComplex,
    slice: &BidegreeSlice,
    x: &Cochain,
) -> Result<Option<Cochain>> {
    if x.s() != slice.s || x.t_raw() != slice.t_raw {
        return Err(Error::BidegreeMismatch {
            s: x.s(),
            t: x.t_raw(),
            slice_s: slice.s,
            slice_t: slice.t_raw,
        });
    }
    let index: HashMap<u64, usize> = slice
        .basis_mid
        .iter()
        .enumerate()
        .map(|(k, m)| (m.bits(), k))
        .collect();
    let mut rhs = vec![0u64; slice.basis_mid.len()];
    for (m, c) in x.terms() {
        let Some(&k) = index.get(&m.bits()) else {
            return Err(Error::BidegreeMismatch {
                s: x.s(),
                t: x.t_raw(),
                slice_s: slice.s,
                slice_t: slice.t_raw,
            });
        };
        rhs[k] = c;
    }
    let Some(y) = slice.d_in.solve(&rhs) else {
        return Ok(None);
    };
    let witness_t = slice.t_raw;
    let witness_s = slice.s.saturating_sub(1);
    let witness = complex.cochain_from_terms(
        witness_s,
        witness_t,
        slice
            .basis_in
            .iter()
            .enumerate()
            .filter_map(|(c, &m)| (y[c] != 0).then_some((m, y[c]))),
    );
    debug_assert_eq!(&complex.differential(&witness), x);
    Ok(Some(witness))
}

/// Dimension table `dim H^{s, t}` for `s` in `s_min..=s_max` and every
/// reduced class `t`.  Rows ordered by `s`, columns by `t`.  Slices are
/// independent, so classes are processed on the rayon pool.
pub fn cohomology_scan(
    complex: &ExteriorComplex,
    s_min: u32,
    s_max: u32,
    buckets: &BasisBuckets,
) -> Result<Vec<Vec<usize>>> {
    let nn = complex.generator_count();
    if s_max > nn || s_min > s_max {
        return Err(Error::DegreeOutOfRange {
            max: nn,
            got: i64::from(s_max),
        });
    }
    let en = complex.ctx().e_n();
    (s_min..=s_max)
        .map(|s| {
            (0..en)
                .into_par_iter()
                .map(|t| {
                    let slice = build_slice_cached(complex, buckets, s, t);
                    cohomology(complex, &slice).map(|r| r.dim)
                })
                .collect::<Result<Vec<_>>>()
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arithmetic::PrimeContext;

    fn complex(p: u64, n: u32) -> ExteriorComplex {
        ExteriorComplex::new(PrimeContext::new(p, n).unwrap()).unwrap()
    }

    #[test]
    fn rank_examples() {
        assert_eq!(FpMatrix::zeros(5, 3, 3).rank(), 0);
        let mut id = FpMatrix::zeros(7, 4, 4);
        for k in 0..4 {
            id.set(k, k, 1);
        }
        assert_eq!(id.rank(), 4);
        let m = FpMatrix::from_rows(5, &[vec![1, 2], vec![2, 4]]);
        assert_eq!(m.rank(), 1);
    }

    #[test]
    fn kernel_examples() {
        let mut id = FpMatrix::zeros(7, 4, 4);
        for k in 0..4 {
            id.set(k, k, 1);
        }
        assert!(id.kernel_basis().is_empty());

        let z = FpMatrix::zeros(5, 3, 3);
        let kb = z.kernel_basis();
        assert_eq!(kb.len(), 3);
        for (k, v) in kb.iter().enumerate() {
            let mut expected = vec![0; 3];
            expected[k] = 1;
            assert_eq!(*v, expected);
        }

        let m = FpMatrix::from_rows(5, &[vec![1, 2], vec![2, 4]]);
        let kb = m.kernel_basis();
        assert_eq!(kb, vec![vec![3, 1]]);
        let v = &kb[0];
        assert_eq!((m.get(0, 0) * v[0] + m.get(0, 1) * v[1]) % 5, 0);
    }

    #[test]
    fn solve_examples() {
        let m = FpMatrix::from_rows(5, &[vec![1, 2], vec![2, 4]]);
        assert_eq!(m.solve(&[1, 2]), Some(vec![1, 0]));
        assert_eq!(m.solve(&[1, 3]), None);
    }

    #[test]
    fn slice_shapes() {
        let cx = complex(5, 3);
        let slice = build_slice(&cx, 9, 0).unwrap();
        assert_eq!(slice.basis_mid(), &[cx.top_class()]);
        assert!(slice.basis_out().is_empty());
        assert_eq!((slice.d_out().rows(), slice.d_out().cols()), (0, 1));

        let slice = build_slice(&cx, 0, 0).unwrap();
        assert_eq!(slice.basis_mid(), &[Monomial::ONE]);
        assert!(slice.basis_in().is_empty());

        let cx = complex(7, 4);
        let slice = build_slice(&cx, 13, 1).unwrap();
        assert_eq!(slice.basis_mid().len(), 21);
    }

    #[test]
    fn cohomology_examples() {
        // Lemma-zero instance: H^{13, reduced 1} = 0 at (7,4)
        let cx = complex(7, 4);
        let slice = build_slice(&cx, 13, 1).unwrap();
        let h = cohomology(&cx, &slice).unwrap();
        assert_eq!(h.dim, 0);
        assert_eq!(h.dim_ker_out - h.rank_in, 0);

        // top class at (5,3)
        let cx = complex(5, 3);
        let slice = build_slice(&cx, 9, 0).unwrap();
        let h = cohomology(&cx, &slice).unwrap();
        assert_eq!(h.dim, 1);
        assert_eq!(h.representatives.len(), 1);
        assert_eq!(h.representatives[0].support(), vec![cx.top_class()]);

        // height 1: zero differential on one generator
        let cx = complex(3, 1);
        let slice = build_slice(&cx, 1, 0).unwrap();
        let h = cohomology(&cx, &slice).unwrap();
        assert_eq!(h.dim, 1);
        let rep = &h.representatives[0];
        assert_eq!(rep.support().len(), 1);
        assert_eq!(rep.support()[0].s(), 1);
    }

    #[test]
    fn image_membership() {
        let cx = complex(7, 4);
        let slice = build_slice(&cx, 13, 1).unwrap();
        // each a_{k,l} = (h31 h4k h4l)^* is a coboundary
        for k in 0..4u32 {
            for l in k + 1..4 {
                let m = cx
                    .monomial_from_generators(&[(3, 1), (4, k), (4, l)])
                    .unwrap();
                let a = cx.cochain(cx.dual(m).monomial);
                let witness = in_image(&cx, &slice, &a).unwrap();
                let witness = witness.expect("a_{k,l} must be a coboundary");
                assert_eq!(cx.differential(&witness), a);
            }
        }
        // the zero cochain is a coboundary with witness zero
        let zero = Cochain::zero(13, 12);
        let w = in_image(&cx, &slice, &zero).unwrap().unwrap();
        assert!(w.is_zero());

        // g_3 at (9, 0) is not a coboundary
        let cx = complex(5, 3);
        let slice = build_slice(&cx, 9, 0).unwrap();
        let g = cx.cochain(cx.top_class());
        assert!(in_image(&cx, &slice, &g).unwrap().is_none());

        // bidegree mismatch is an error
        let bad = Cochain::zero(8, 0);
        assert!(matches!(
            in_image(&cx, &slice, &bad),
            Err(Error::BidegreeMismatch { .. })
        ));
    }
}
