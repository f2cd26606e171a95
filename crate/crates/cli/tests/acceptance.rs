//! Acceptance suite: one test per criterion, each printing a single
//! PASS/FAIL line.  Run with
//! `cargo test -p morava-cli --test acceptance -- --nocapture`.
//!
//! Criteria 4 and 5 are encoded exactly as the classical vanishing
//! statements assert them.  The engine disproves one sub-claim of each
//! (see the README), so those two tests fail by design, carrying the
//! counterexamples in their panic messages; the other criteria pass.

use std::process::Command;
use std::time::{Duration, Instant};

use serde_json::Value;

use morava::{
    build_slice, cohomology, cohomology_scan, greek_degree, verify_d_squared, verify_e2ex,
    verify_ext_reduction, verify_hs_bound, verify_int, verify_lan, ExteriorComplex, Monomial,
    PrimeContext, Status,
};

fn ctx(p: u64, n: u32) -> PrimeContext {
    PrimeContext::new(p, n).unwrap()
}

fn complex(p: u64, n: u32) -> ExteriorComplex {
    ExteriorComplex::new(ctx(p, n)).unwrap()
}

fn morava_bin(args: &[&str]) -> (Option<i32>, Value) {
    let out = Command::new(env!("CARGO_BIN_EXE_morava"))
        .args(args)
        .output()
        .expect("binary runs");
    let doc = serde_json::from_slice(&out.stdout).unwrap_or(Value::Null);
    (out.status.code(), doc)
}

fn report(criterion: u32, name: &str, pass: bool, detail: &str) {
    println!(
        "CRITERION {criterion} ({name}): {} — {detail}",
        if pass { "PASS" } else { "FAIL" }
    );
}

struct Xorshift(u64);

impl Xorshift {
    fn next(&mut self) -> u64 {
        self.0 ^= self.0 >> 12;
        self.0 ^= self.0 << 25;
        self.0 ^= self.0 >> 27;
        self.0.wrapping_mul(0x2545F4914F6CDD1D)
    }
}

#[test]
fn criterion_1_lemma_zero_reproduction() {
    let start = Instant::now();
    let (code, doc) = morava_bin(&["verify", "lemma-zero", "--p", "7", "--n", "4"]);
    let elapsed = start.elapsed();
    let payload = &doc["payload"];
    let details = payload["details"].as_array().cloned().unwrap_or_default();
    let sub_a = details
        .iter()
        .any(|d| d["case"] == "basis of C^{3,-12}" && d["ok"] == true);
    let sub_b = details
        .iter()
        .any(|d| d["case"] == "duals generate C^{13,12}" && d["ok"] == true);
    let identities: Vec<_> = details
        .iter()
        .filter(|d| d["case"].as_str().unwrap_or("").starts_with("d("))
        .collect();
    // sixteen displayed identities, families expanded to 27 instances
    let sub_c = identities.len() == 27 && identities.iter().all(|d| d["ok"] == true);
    let sub_d = details
        .iter()
        .any(|d| d["case"] == "dim H^{13,12}" && d["ok"] == true);
    let pass = code == Some(0)
        && payload["status"] == "pass"
        && sub_a
        && sub_b
        && sub_c
        && sub_d
        && elapsed < Duration::from_secs(5);
    report(
        1,
        "lemma-zero reproduction",
        pass,
        &format!("exit={code:?} a={sub_a} b={sub_b} c={sub_c} d={sub_d} in {elapsed:.2?}"),
    );
    assert!(pass);
}

#[test]
fn criterion_2_degree_table() {
    let (code, doc) = morava_bin(&["table", "--p", "7", "--n", "4"]);
    let rows = doc["payload"]["rows"]
        .as_array()
        .cloned()
        .unwrap_or_default();
    let signed: Vec<i64> = rows
        .iter()
        .filter(|r| r["i"].as_u64().unwrap() <= 3)
        .map(|r| r["signed"].as_i64().unwrap())
        .collect();
    let top_zero = rows
        .iter()
        .filter(|r| r["i"] == 4)
        .all(|r| r["signed"] == 0);
    let expected = vec![1i64, 7, 49, -57, 8, 56, -8, -56, 57, -1, -7, -49];
    let pass = code == Some(0) && signed == expected && top_zero;
    report(
        2,
        "degree table",
        pass,
        &format!("signed={signed:?} h4a-zero={top_zero}"),
    );
    assert!(pass);
}

#[test]
fn criterion_3_gamma_critical_vanishing() {
    let start = Instant::now();
    let cx = complex(5, 3);
    // internal degree 8 is the reduced class 1
    let slice = build_slice(&cx, 9, 1).unwrap();
    let dim = cohomology(&cx, &slice).unwrap().dim;
    let elapsed = start.elapsed();
    let pass = dim == 0 && elapsed < Duration::from_secs(1);
    report(
        3,
        "gamma-critical vanishing",
        pass,
        &format!("dim H^(9, internal 8) = {dim} in {elapsed:.2?}"),
    );
    assert!(pass);
}

#[test]
fn criterion_4_lan_sweep() {
    let start = Instant::now();
    let mut failures = Vec::new();
    for (p, n) in [(5u64, 3u32), (7, 4), (11, 4)] {
        let rep = verify_lan(&ctx(p, n)).unwrap();
        if rep.status != Status::Pass {
            let cases: Vec<String> = rep
                .counterexamples
                .iter()
                .map(|c| format!("{} -> dim {}", c.input, c.got))
                .collect();
            failures.push(format!(
                "({p},{n}): {} targeted slices with dim H != 0: {}",
                rep.counterexamples.len(),
                cases.join("; ")
            ));
        }
    }
    let elapsed = start.elapsed();
    let pass = failures.is_empty() && elapsed < Duration::from_secs(30);
    report(
        4,
        "lan sweep at (5,3), (7,4), (11,4)",
        pass,
        &format!(
            "{} in {elapsed:.2?}",
            if pass {
                "all slices vanish".into()
            } else {
                failures.join(" | ")
            }
        ),
    );
    assert!(
        pass,
        "the sweep is stated for all three pairs, but at (7,4) the vanishing \
         hypothesis n^2 <= 2p-1 fails (16 > 13) and the computation finds \
         honest nonzero slices: {}",
        failures.join(" | ")
    );
}

#[test]
fn criterion_5_e2ex_classification() {
    let start = Instant::now();
    let rep = verify_e2ex(&ctx(5, 3), 512).unwrap();
    let elapsed = start.elapsed();
    // the classified entries themselves
    let classified_ok = rep
        .details
        .iter()
        .filter(|d| d.case.contains("top-class") || d.case.contains("class of h1"))
        .all(|d| d.ok);
    let extras: Vec<String> = rep
        .counterexamples
        .iter()
        .map(|c| format!("{} = {}", c.input, c.got))
        .collect();
    let pass = rep.status == Status::Pass && classified_ok && elapsed < Duration::from_secs(5);
    report(
        5,
        "E_2-classification at (5,3)",
        pass,
        &format!(
            "classified entries ok={classified_ok}; entries outside the list: [{}] in {elapsed:.2?}",
            extras.join(", ")
        ),
    );
    assert!(
        pass,
        "the classification misses dim H^(8,0) = 1, dual to the cocycle \
         h30 + h31 + h32 that the single-generator cancellation argument \
         overlooks: {}",
        extras.join(", ")
    );
}

#[test]
fn criterion_6_top_cohomology() {
    let mut pass = true;
    let mut notes = Vec::new();
    for (p, n) in [(5u64, 3u32), (7, 4)] {
        let rep = verify_hs_bound(&ctx(p, n), 512).unwrap();
        let ok = rep.status == Status::Pass;
        notes.push(format!(
            "({p},{n}): {}",
            if ok { "delta_(t,0)" } else { "FAIL" }
        ));
        pass &= ok;
        // direct spot checks
        let cx = complex(p, n);
        let nn = cx.generator_count();
        let top = cohomology(&cx, &build_slice(&cx, nn, 0).unwrap()).unwrap();
        pass &= top.dim == 1 && top.representatives[0].support() == vec![cx.top_class()];
    }
    report(6, "top cohomology", pass, &notes.join(", "));
    assert!(pass);
}

#[test]
fn criterion_7_property_suite() {
    let mut pass = true;
    let mut notes = Vec::new();

    // d^2 = 0: all generators plus 1000 sampled monomials per context
    for (p, n) in [(5u64, 3u32), (7, 4), (11, 4)] {
        let rep = verify_d_squared(&ctx(p, n), 1000).unwrap();
        pass &= rep.status == Status::Pass;
    }
    notes.push("d^2=0".to_string());

    // graded commutativity and associativity on random triples
    for (p, n) in [(5u64, 3u32), (7, 4)] {
        let cx = complex(p, n);
        let top = cx.top_class().bits();
        let mut rng = Xorshift(0xC0FFEE ^ (p << 8) ^ u64::from(n));
        for _ in 0..300 {
            let (a, b, c) = (
                Monomial::from_bits(rng.next() & top),
                Monomial::from_bits(rng.next() & top),
                Monomial::from_bits(rng.next() & top),
            );
            let (x, y, z) = (cx.cochain(a), cx.cochain(b), cx.cochain(c));
            pass &= cx.multiply(&cx.multiply(&x, &y), &z) == cx.multiply(&x, &cx.multiply(&y, &z));
            match (cx.multiply_monomials(a, b), cx.multiply_monomials(b, a)) {
                (None, None) => {}
                (Some(f), Some(g)) => {
                    let koszul: i32 = if a.s() * b.s() % 2 == 0 { 1 } else { -1 };
                    pass &=
                        f.monomial == g.monomial && i32::from(f.sign) == koszul * i32::from(g.sign);
                }
                _ => pass = false,
            }
            // duality involution up to sign
            pass &= cx.dual(cx.dual(a).monomial).monomial == a;
        }
    }
    notes.push("products+duality".to_string());

    // cochain-dimension duality over every bidegree at both contexts
    for (p, n) in [(5u64, 3u32), (7, 4)] {
        let cx = complex(p, n);
        let nn = cx.generator_count();
        let en = cx.ctx().e_n();
        let buckets = cx.enumerate_all().unwrap();
        for s in 0..=nn {
            for t in 0..en {
                pass &= buckets.count(s, t) == buckets.count(nn - s, (en - t) % en);
            }
        }
    }
    notes.push("|C| duality".to_string());

    // Euler characteristic identity per internal class at (5,3)
    let cx = complex(5, 3);
    let buckets = cx.enumerate_all().unwrap();
    let dims = cohomology_scan(&cx, 0, 9, &buckets).unwrap();
    for t in 0..31u64 {
        let mut chain = 0i64;
        let mut coh = 0i64;
        for s in 0..=9u32 {
            let sign = if s % 2 == 0 { 1 } else { -1 };
            chain += sign * buckets.count(s, t) as i64;
            coh += sign * dims[s as usize][t as usize] as i64;
        }
        pass &= chain == coh;
    }
    notes.push("Euler".to_string());

    report(7, "property suite", pass, &notes.join(", "));
    assert!(pass);
}

#[test]
fn criterion_8_arithmetic_suite() {
    let mut pass = true;
    for (p, n) in [(5u64, 3u32), (7, 4), (11, 4), (13, 5)] {
        pass &= verify_int(&ctx(p, n)).unwrap().status == Status::Pass;
        pass &= verify_ext_reduction(&ctx(p, n)).unwrap().status == Status::Pass;
    }
    let gamma = greek_degree(&ctx(5, 3), 1).unwrap();
    let delta = greek_degree(&ctx(7, 4), 1).unwrap();
    pass &= gamma.stem == 189 && delta.stem == 4004;
    report(
        8,
        "arithmetic suite",
        pass,
        &format!("gamma_1 stem {}, delta_1 stem {}", gamma.stem, delta.stem),
    );
    assert!(pass);
}

#[test]
fn criterion_9_scale_note() {
    // The permanence and spectrum-existence theorems are homotopy-theoretic
    // statements with no finite computational content; the artifact covers
    // every finite calculation those arguments rest on (criteria 1-8).
    report(
        9,
        "scale note",
        true,
        "theorem-level permanence/existence claims are out of computational reach by design",
    );
}
