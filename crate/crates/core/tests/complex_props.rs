//! Algebraic invariants of the complex: d squared zero, graded
//! commutativity and associativity, duality, degree divisibility.

use proptest::prelude::*;

use morava::{ExteriorComplex, Monomial, PrimeContext};

fn complex(p: u64, n: u32) -> ExteriorComplex {
    ExteriorComplex::new(PrimeContext::new(p, n).unwrap()).unwrap()
}

#[test]
fn d_squared_vanishes_exhaustively_at_small_heights() {
    // every monomial at (3,2) and (5,2): 2^4 and 2^4 masks
    for (p, n) in [(3u64, 2u32), (5, 2), (3, 1)] {
        let cx = complex(p, n);
        let top = cx.top_class().bits();
        for mask in 0..=top {
            let m = Monomial::from_bits(mask);
            let dd = cx.differential(&cx.differential_monomial(m));
            assert!(dd.is_zero(), "d^2 != 0 at ({p},{n}) on {mask:b}");
        }
    }
}

#[test]
fn differential_raises_s_and_preserves_t() {
    for (p, n) in [(5u64, 3u32), (7, 4)] {
        let cx = complex(p, n);
        let top = cx.top_class().bits();
        let mut state = 0xDEADBEEFu64 | 1;
        for _ in 0..500 {
            state ^= state >> 12;
            state ^= state << 25;
            state ^= state >> 27;
            let m = Monomial::from_bits(state.wrapping_mul(0x2545F4914F6CDD1D) & top);
            let d = cx.differential_monomial(m);
            assert_eq!(d.s(), m.s() + 1);
            assert_eq!(d.t_raw(), cx.monomial_degree(m).raw);
            for (tm, _) in d.terms() {
                assert_eq!(tm.s(), m.s() + 1);
                assert_eq!(cx.monomial_degree(tm).raw, d.t_raw());
            }
        }
    }
}

#[test]
fn cochain_dimension_duality() {
    for (p, n) in [(5u64, 3u32), (7, 4)] {
        let cx = complex(p, n);
        let nn = cx.generator_count();
        let en = cx.ctx().e_n();
        let buckets = cx.enumerate_all().unwrap();
        for s in 0..=nn {
            for t in 0..en {
                assert_eq!(
                    buckets.count(s, t),
                    buckets.count(nn - s, (en - t) % en),
                    "duality at ({p},{n}) bidegree ({s},{t})"
                );
            }
        }
    }
}

#[test]
fn monomial_degrees_divisible_by_q() {
    for (p, n) in [(5u64, 3u32), (7, 4), (11, 2)] {
        let cx = complex(p, n);
        let top = cx.top_class().bits();
        let step = (top / 997).max(1);
        let mut mask = 0u64;
        while mask <= top {
            let d = cx.monomial_degree(Monomial::from_bits(mask & top));
            assert!(d.reduced.is_some(), "degree not divisible by q");
            mask += step;
        }
    }
}

/// Brute-force sign oracle: concatenate the two sorted factor lists and
/// bubble-sort the result, counting transpositions.
fn bubble_sort_sign(a: Monomial, b: Monomial, n: u32) -> i32 {
    let mut seq: Vec<u32> = a
        .members(n)
        .iter()
        .chain(b.members(n).iter())
        .map(|g| g.index(n))
        .collect();
    let mut swaps = 0u32;
    let len = seq.len();
    for i in 0..len {
        for j in 0..len.saturating_sub(1 + i) {
            if seq[j] > seq[j + 1] {
                seq.swap(j, j + 1);
                swaps += 1;
            }
        }
    }
    if swaps.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

#[test]
fn product_sign_matches_the_sorting_oracle() {
    let cx = complex(7, 4);
    let top = cx.top_class().bits();
    let mut state = 0xABCDEFu64;
    let mut checked = 0;
    while checked < 2000 {
        state ^= state >> 12;
        state ^= state << 25;
        state ^= state >> 27;
        let r = state.wrapping_mul(0x2545F4914F6CDD1D);
        let a = Monomial::from_bits(r & top);
        let b = Monomial::from_bits((r >> 16) & top);
        if a.bits() & b.bits() != 0 {
            continue;
        }
        let sm = cx.multiply_monomials(a, b).unwrap();
        assert_eq!(
            i32::from(sm.sign),
            bubble_sort_sign(a, b, 4),
            "sign mismatch for {:b} * {:b}",
            a.bits(),
            b.bits()
        );
        checked += 1;
    }
    // the worked three-factor instance: (h10 h20) * h11 = -(h10 h11 h20)
    let left = cx.monomial_from_generators(&[(1, 0), (2, 0)]).unwrap();
    let right = cx.monomial_from_generators(&[(1, 1)]).unwrap();
    assert_eq!(bubble_sort_sign(left, right, 4), -1);
}

fn arb_mask(top: u64) -> impl Strategy<Value = u64> {
    (0..=top).prop_map(move |m| m & top)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn product_is_associative_7_4(a in arb_mask((1u64 << 16) - 1),
                                  b in arb_mask((1u64 << 16) - 1),
                                  c in arb_mask((1u64 << 16) - 1)) {
        let cx = complex(7, 4);
        let (x, y, z) = (
            cx.cochain(Monomial::from_bits(a)),
            cx.cochain(Monomial::from_bits(b)),
            cx.cochain(Monomial::from_bits(c)),
        );
        let lhs = cx.multiply(&cx.multiply(&x, &y), &z);
        let rhs = cx.multiply(&x, &cx.multiply(&y, &z));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn product_is_graded_commutative_5_3(a in arb_mask((1u64 << 9) - 1),
                                         b in arb_mask((1u64 << 9) - 1)) {
        let cx = complex(5, 3);
        let (x, y) = (
            Monomial::from_bits(a),
            Monomial::from_bits(b),
        );
        let xy = cx.multiply_monomials(x, y);
        let yx = cx.multiply_monomials(y, x);
        match (xy, yx) {
            (None, None) => {}
            (Some(f), Some(g)) => {
                prop_assert_eq!(f.monomial, g.monomial);
                let koszul = if x.s() * y.s() % 2 == 0 { 1 } else { -1 };
                prop_assert_eq!(i32::from(f.sign), koszul * i32::from(g.sign));
            }
            _ => prop_assert!(false, "one order vanished, the other did not"),
        }
    }

    #[test]
    fn dual_is_an_involution_up_to_sign(a in arb_mask((1u64 << 16) - 1)) {
        let cx = complex(7, 4);
        let m = Monomial::from_bits(a);
        let dd = cx.dual(cx.dual(m).monomial);
        prop_assert_eq!(dd.monomial, m);
    }

    #[test]
    fn dual_flips_bidegree(a in arb_mask((1u64 << 9) - 1)) {
        let cx = complex(5, 3);
        let m = Monomial::from_bits(a);
        let d = cx.dual(m).monomial;
        let nn = cx.generator_count();
        let en = cx.ctx().e_n();
        prop_assert_eq!(d.s(), nn - m.s());
        let mt = cx.monomial_reduced_degree(m);
        let dt = cx.monomial_reduced_degree(d);
        prop_assert_eq!((dt + mt) % en, 0);
    }

    #[test]
    fn dual_normalization(a in arb_mask((1u64 << 16) - 1)) {
        let cx = complex(7, 4);
        let m = Monomial::from_bits(a);
        let d = cx.dual(m);
        let prod = cx.multiply_monomials(d.monomial, m).unwrap();
        prop_assert_eq!(prod.monomial, cx.top_class());
        prop_assert_eq!(i32::from(prod.sign) * i32::from(d.sign), 1);
    }

    #[test]
    fn d_squared_on_random_monomials(a in arb_mask((1u64 << 16) - 1)) {
        let cx = complex(7, 4);
        let m = Monomial::from_bits(a);
        let dd = cx.differential(&cx.differential_monomial(m));
        prop_assert!(dd.is_zero());
    }

    #[test]
    fn greek_degree_is_affine_in_s(s1 in -1000i64..1000, s2 in -1000i64..1000) {
        prop_assume!(s1 != 0 && s2 != 0);
        let ctx = PrimeContext::new(5, 3).unwrap();
        let g1 = morava::greek_degree(&ctx, s1).unwrap();
        let g2 = morava::greek_degree(&ctx, s2).unwrap();
        prop_assert_eq!(g2.t - g1.t, 2 * (s2 - s1) * (5i64.pow(3) - 1));
    }
}
