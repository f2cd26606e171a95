//! `morava` — bidegree queries, charts, and lemma verification for the
//! exterior model of Morava stabilizer cohomology.
//!
//! Every invocation writes exactly one JSON document (the default) or a
//! TSV table to standard output.  Exit codes: 0 success / verification
//! pass, 1 verification failure (counterexamples present), 2 usage or
//! parameter error.

use std::collections::BTreeMap;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use morava::{
    build_slice, cohomology, cohomology_scan, degree_table, greek_degree, lambda_set,
    moore_dual_shift, ph_element, signed_rep, verify_d_squared, verify_degree_table,
    verify_diff_list, verify_duality, verify_e2ex, verify_ext_reduction, verify_gen_e,
    verify_hs_bound, verify_htpy, verify_int, verify_lan, verify_lanc, verify_lemma_zero,
    verify_ph_shift, ExteriorComplex, LemmaId, LemmaReport, PrimeContext, Status,
};

#[derive(Debug, Parser)]
#[command(
    name = "morava",
    version,
    about = "Exact F_p cohomology of the exterior model for Morava stabilizer algebras"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Tsv,
}

#[derive(Debug, Args)]
struct Common {
    /// Odd prime p
    #[arg(long)]
    p: u64,
    /// Height n (1 <= n < p)
    #[arg(long)]
    n: u32,
    /// Output format; TSV is available for the tabular subcommands
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Interpret --t as a full internal degree instead of units of q
    #[arg(long)]
    raw: bool,
    /// Largest e(n) a full scan may sweep
    #[arg(long, default_value_t = 512)]
    scan_limit: u64,
    /// Worker threads for scans (0 = available parallelism)
    #[arg(long, default_value_t = 0)]
    jobs: usize,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Cohomology dimension and representatives in one bidegree
    Cohomology {
        #[command(flatten)]
        common: Common,
        /// Cohomological degree
        #[arg(long)]
        s: u32,
        /// Internal degree, reduced (units of q) unless --raw
        #[arg(long, allow_hyphen_values = true)]
        t: i64,
    },
    /// Monomial basis of one cochain bidegree
    Basis {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        s: u32,
        #[arg(long, allow_hyphen_values = true)]
        t: i64,
    },
    /// Reduced-degree table of the generators
    Table {
        #[command(flatten)]
        common: Common,
    },
    /// Chart of dim H^{s,t} over every reduced class
    Scan {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value_t = 0)]
        s_min: u32,
        /// Defaults to n^2
        #[arg(long)]
        s_max: Option<u32>,
    },
    /// Run one verification; exits 0 on pass, 1 on counterexamples
    Verify {
        #[command(flatten)]
        common: Common,
        /// One of: lemma-zero, lan, lanc, e2ex, hs-bound, int,
        /// ext-reduction, degree-table, gen-e, diff-list, htpy, ph-shift,
        /// d-squared, duality
        name: String,
        /// Ideal exponents for htpy / ph-shift (default all ones)
        #[arg(long, value_delimiter = ',')]
        exponents: Option<Vec<u64>>,
        /// Sample count for d-squared
        #[arg(long, default_value_t = 1000)]
        samples: u32,
    },
    /// Greek-letter element degrees
    Greek {
        #[command(flatten)]
        common: Common,
        /// Nonzero suffix
        #[arg(long, allow_hyphen_values = true)]
        s: i64,
    },
    /// Lambda-set of a generalized Moore ideal
    Lambda {
        #[command(flatten)]
        common: Common,
        /// Ideal exponents (default all ones, the prime ideal)
        #[arg(long, value_delimiter = ',')]
        exponents: Option<Vec<u64>>,
    },
    /// Moore-dual degree shifts d_J, d_I and the V_J element
    Shift {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_delimiter = ',')]
        exponents: Option<Vec<u64>>,
    },
}

/// What a subcommand hands back to `main`.
struct Outcome {
    /// Rendered document (JSON envelope or TSV block).
    text: String,
    code: u8,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(outcome) => {
            println!("{}", outcome.text);
            ExitCode::from(outcome.code)
        }
        Err(err) => {
            eprintln!("error: {err}");
            eprintln!("run `morava --help` for usage");
            ExitCode::from(2)
        }
    }
}

fn init_jobs(jobs: usize) {
    if jobs > 0 {
        // best effort: a second init in the same process is harmless
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global();
    }
}

fn envelope(params: BTreeMap<String, Value>, payload: Value, code: u8) -> Outcome {
    let doc = json!({
        "tool_version": env!("CARGO_PKG_VERSION"),
        "params": params,
        "payload": payload,
        "status": code,
    });
    Outcome {
        text: serde_json::to_string_pretty(&doc).expect("serializable"),
        code,
    }
}

fn base_params(common: &Common, subcommand: &str) -> BTreeMap<String, Value> {
    let mut params = BTreeMap::new();
    params.insert("subcommand".into(), json!(subcommand));
    params.insert("p".into(), json!(common.p));
    params.insert("n".into(), json!(common.n));
    params.insert(
        "format".into(),
        json!(match common.format {
            Format::Json => "json",
            Format::Tsv => "tsv",
        }),
    );
    params.insert("raw".into(), json!(common.raw));
    params.insert("scan_limit".into(), json!(common.scan_limit));
    params.insert("jobs".into(), json!(common.jobs));
    params
}

fn context(common: &Common) -> anyhow::Result<PrimeContext> {
    Ok(PrimeContext::new(common.p, common.n)?)
}

/// Resolves `--t`: reduced units of q by default, a full internal degree
/// with `--raw`.  Returns the reduced class when the degree is sparse.
fn resolve_t(ctx: &PrimeContext, t: i64, raw: bool) -> Option<u64> {
    if raw {
        ctx.internal_degree(t).reduced
    } else {
        Some(ctx.reduced_class(t))
    }
}

/// Both canonical and signed forms of a reduced class and its internal
/// degree.
fn degree_fields(ctx: &PrimeContext, reduced: Option<u64>) -> Value {
    match reduced {
        Some(t) => {
            let raw = t * ctx.q() % ctx.period();
            json!({
                "t_reduced": t,
                "t_reduced_signed": signed_rep(t, ctx.e_n()),
                "t_internal": raw,
                "t_internal_signed": signed_rep(raw, ctx.period()),
            })
        }
        None => json!({
            "t_reduced": Value::Null,
            "t_reduced_signed": Value::Null,
            "t_internal": Value::Null,
            "t_internal_signed": Value::Null,
        }),
    }
}

fn merge(base: Value, extra: Value) -> Value {
    let (Value::Object(mut a), Value::Object(b)) = (base, extra) else {
        unreachable!("merge takes objects");
    };
    a.extend(b);
    Value::Object(a)
}

fn run(command: Command) -> anyhow::Result<Outcome> {
    match command {
        Command::Cohomology { common, s, t } => cmd_cohomology(common, s, t),
        Command::Basis { common, s, t } => cmd_basis(common, s, t),
        Command::Table { common } => cmd_table(common),
        Command::Scan {
            common,
            s_min,
            s_max,
        } => cmd_scan(common, s_min, s_max),
        Command::Verify {
            common,
            name,
            exponents,
            samples,
        } => cmd_verify(common, &name, exponents, samples),
        Command::Greek { common, s } => cmd_greek(common, s),
        Command::Lambda { common, exponents } => cmd_lambda(common, exponents),
        Command::Shift { common, exponents } => cmd_shift(common, exponents),
    }
}

fn reject_tsv(common: &Common, what: &str) -> anyhow::Result<()> {
    if common.format == Format::Tsv {
        anyhow::bail!("{what} output is not tabular; use --format json");
    }
    Ok(())
}

fn cmd_cohomology(common: Common, s: u32, t: i64) -> anyhow::Result<Outcome> {
    reject_tsv(&common, "cohomology")?;
    let ctx = context(&common)?;
    let cx = ExteriorComplex::new(ctx.clone())?;
    let mut params = base_params(&common, "cohomology");
    params.insert("s".into(), json!(s));
    params.insert("t".into(), json!(t));
    let reduced = resolve_t(&ctx, t, common.raw);
    let payload = match reduced {
        Some(t_red) => {
            let slice = build_slice(&cx, s, t_red as i64)?;
            let h = cohomology(&cx, &slice)?;
            let reps: Vec<Vec<(Vec<String>, u64)>> = h
                .representatives
                .iter()
                .map(|c| c.terms_labeled(ctx.n()))
                .collect();
            merge(
                degree_fields(&ctx, Some(t_red)),
                json!({
                    "p": ctx.p(),
                    "n": ctx.n(),
                    "s": s,
                    "cochain_dim": slice.basis_mid().len(),
                    "dim": h.dim,
                    "rank_in": h.rank_in,
                    "dim_ker_out": h.dim_ker_out,
                    "representatives": reps,
                }),
            )
        }
        None => merge(
            degree_fields(&ctx, None),
            json!({
                "p": ctx.p(),
                "n": ctx.n(),
                "s": s,
                "cochain_dim": 0,
                "dim": 0,
                "rank_in": 0,
                "dim_ker_out": 0,
                "representatives": Value::Array(vec![]),
                "note": "internal degree not divisible by q; the cochain group is zero",
            }),
        ),
    };
    Ok(envelope(params, payload, 0))
}

fn cmd_basis(common: Common, s: u32, t: i64) -> anyhow::Result<Outcome> {
    let ctx = context(&common)?;
    let cx = ExteriorComplex::new(ctx.clone())?;
    let reduced = resolve_t(&ctx, t, common.raw);
    let monomials = match reduced {
        Some(t_red) => cx.basis(s, t_red as i64)?,
        None => Vec::new(),
    };
    if common.format == Format::Tsv {
        let mut lines = Vec::with_capacity(monomials.len());
        for m in &monomials {
            lines.push(m.labels(ctx.n()).join("\t"));
        }
        return Ok(Outcome {
            text: lines.join("\n"),
            code: 0,
        });
    }
    let mut params = base_params(&common, "basis");
    params.insert("s".into(), json!(s));
    params.insert("t".into(), json!(t));
    let labels: Vec<Vec<String>> = monomials.iter().map(|m| m.labels(ctx.n())).collect();
    let payload = merge(
        degree_fields(&ctx, reduced),
        json!({
            "p": ctx.p(),
            "n": ctx.n(),
            "s": s,
            "count": monomials.len(),
            "monomials": labels,
        }),
    );
    Ok(envelope(params, payload, 0))
}

fn cmd_table(common: Common) -> anyhow::Result<Outcome> {
    let ctx = context(&common)?;
    let table = degree_table(&ctx);
    if common.format == Format::Tsv {
        let lines: Vec<String> = table
            .rows
            .iter()
            .map(|r| format!("{}\t{}\t{}\t{}", r.i, r.j, r.reduced, r.signed))
            .collect();
        return Ok(Outcome {
            text: lines.join("\n"),
            code: 0,
        });
    }
    let params = base_params(&common, "table");
    let payload = json!({
        "p": ctx.p(),
        "n": ctx.n(),
        "q": ctx.q(),
        "e": (0..=ctx.n()).map(|i| ctx.e(i)).collect::<Vec<_>>(),
        "period": ctx.period(),
        "modulus": ctx.e_n(),
        "rows": serde_json::to_value(&table.rows)?,
    });
    Ok(envelope(params, payload, 0))
}

fn cmd_scan(common: Common, s_min: u32, s_max: Option<u32>) -> anyhow::Result<Outcome> {
    init_jobs(common.jobs);
    let ctx = context(&common)?;
    let cx = ExteriorComplex::new(ctx.clone())?;
    let nn = ctx.generator_count();
    let s_max = s_max.unwrap_or(nn);
    if ctx.e_n() > common.scan_limit {
        anyhow::bail!(
            "scan limit {} exceeded: e(n) = {}; query single classes with `cohomology --t` or raise --scan-limit",
            common.scan_limit,
            ctx.e_n()
        );
    }
    let buckets = cx.enumerate_all()?;
    let rows = cohomology_scan(&cx, s_min, s_max, &buckets)?;
    if common.format == Format::Tsv {
        let lines: Vec<String> = rows
            .iter()
            .map(|row| {
                row.iter()
                    .map(ToString::to_string)
                    .collect::<Vec<_>>()
                    .join("\t")
            })
            .collect();
        return Ok(Outcome {
            text: lines.join("\n"),
            code: 0,
        });
    }
    let mut params = base_params(&common, "scan");
    params.insert("s_min".into(), json!(s_min));
    params.insert("s_max".into(), json!(s_max));
    let payload = json!({
        "p": ctx.p(),
        "n": ctx.n(),
        "classes": ctx.e_n(),
        "s_min": s_min,
        "s_max": s_max,
        "rows": rows,
    });
    Ok(envelope(params, payload, 0))
}

fn run_verification(
    ctx: &PrimeContext,
    id: LemmaId,
    exponents: &[u64],
    samples: u32,
    scan_limit: u64,
) -> anyhow::Result<LemmaReport> {
    let report = match id {
        LemmaId::Zero => verify_lemma_zero(ctx)?,
        LemmaId::Lan => verify_lan(ctx)?,
        LemmaId::Lanc => verify_lanc(ctx)?,
        LemmaId::E2ex => verify_e2ex(ctx, scan_limit)?,
        LemmaId::HsBound => verify_hs_bound(ctx, scan_limit)?,
        LemmaId::Int => verify_int(ctx)?,
        LemmaId::ExtReduction => verify_ext_reduction(ctx)?,
        LemmaId::DegreeTable => verify_degree_table(ctx),
        LemmaId::GenE => verify_gen_e(ctx)?,
        LemmaId::DiffList => verify_diff_list(ctx)?,
        LemmaId::Htpy => verify_htpy(ctx, exponents)?,
        LemmaId::PhShift => verify_ph_shift(ctx, exponents)?,
        LemmaId::DSquared => verify_d_squared(ctx, samples)?,
        LemmaId::Duality => verify_duality(ctx, scan_limit)?,
    };
    Ok(report)
}

fn cmd_verify(
    common: Common,
    name: &str,
    exponents: Option<Vec<u64>>,
    samples: u32,
) -> anyhow::Result<Outcome> {
    reject_tsv(&common, "verify")?;
    init_jobs(common.jobs);
    let Some(id) = LemmaId::from_kebab(name) else {
        anyhow::bail!(
            "unknown verification `{name}`; expected one of: {}",
            LemmaId::ALL
                .iter()
                .map(|id| id.kebab())
                .collect::<Vec<_>>()
                .join(", ")
        );
    };
    let ctx = context(&common)?;
    let exponents = exponents.unwrap_or_else(|| vec![1; ctx.n() as usize]);
    let report = run_verification(&ctx, id, &exponents, samples, common.scan_limit)?;
    let code = u8::from(report.status != Status::Pass);
    let mut params = base_params(&common, "verify");
    params.insert("name".into(), json!(name));
    params.insert("exponents".into(), json!(exponents));
    params.insert("samples".into(), json!(samples));
    Ok(envelope(params, serde_json::to_value(&report)?, code))
}

fn cmd_greek(common: Common, s: i64) -> anyhow::Result<Outcome> {
    reject_tsv(&common, "greek")?;
    let ctx = context(&common)?;
    let g = greek_degree(&ctx, s)?;
    let canonical = ctx.internal_degree(g.t);
    let mut params = base_params(&common, "greek");
    params.insert("s".into(), json!(s));
    let payload = json!({
        "p": ctx.p(),
        "n": ctx.n(),
        "family": g.family,
        "cohomological": g.family,
        "suffix": g.suffix,
        "t": g.t,
        "stem": g.stem,
        "t_canonical": canonical.raw,
        "t_signed": signed_rep(canonical.raw, ctx.period()),
        "t_reduced": canonical.reduced,
    });
    Ok(envelope(params, payload, 0))
}

fn cmd_lambda(common: Common, exponents: Option<Vec<u64>>) -> anyhow::Result<Outcome> {
    reject_tsv(&common, "lambda")?;
    let ctx = context(&common)?;
    let exponents = exponents.unwrap_or_else(|| vec![1; ctx.n() as usize]);
    let elements = lambda_set(&ctx, &exponents)?;
    let mut params = base_params(&common, "lambda");
    params.insert("exponents".into(), json!(exponents));
    let list: Vec<Value> = elements
        .iter()
        .map(|e| {
            json!({
                "u": e.u,
                "s_of_u": e.s_of_u,
                "u_bar": e.u_bar,
                "eps": e.eps.iter().collect::<Vec<u8>>(),
            })
        })
        .collect();
    let payload = json!({
        "p": ctx.p(),
        "n": ctx.n(),
        "count": list.len(),
        "elements": list,
    });
    Ok(envelope(params, payload, 0))
}

fn cmd_shift(common: Common, exponents: Option<Vec<u64>>) -> anyhow::Result<Outcome> {
    reject_tsv(&common, "shift")?;
    let ctx = context(&common)?;
    let exponents = exponents.unwrap_or_else(|| vec![1; ctx.n() as usize]);
    let d_j = moore_dual_shift(&ctx, &exponents)?;
    let ones = vec![1u64; ctx.n() as usize];
    let d_i = moore_dual_shift(&ctx, &ones)?;
    let v = ph_element(&ctx, &exponents)?;
    let mut params = base_params(&common, "shift");
    params.insert("exponents".into(), json!(exponents));
    let payload = json!({
        "p": ctx.p(),
        "n": ctx.n(),
        "d_j": d_j,
        "d_i": d_i,
        "v_exponents": v.v_exponents,
        "v_degree": v.degree,
    });
    Ok(envelope(params, payload, 0))
}
