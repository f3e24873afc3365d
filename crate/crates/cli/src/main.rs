//! `polycyclic` command-line front end.
//!
//! Exit codes: 0 ok, 1 verification failure, 2 input error, 3 budget exceeded.

use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use polycyclic::code::{count_codes, enumerate_codes};
use polycyclic::corpus::{self, compute, parse_corpus, verify, Expect, Flag, Record};
use polycyclic::factor::factor;
use polycyclic::gray::gray_image;
use polycyclic::lincode::{classify, DEFAULT_DISTANCE_BUDGET};
use polycyclic::linalg::{self, Matrix};
use polycyclic::quantum::quantum_from_polycyclic;
use polycyclic::{Error, Field, GraySpec, LinearCode, Poly, PolycyclicCode};

#[derive(Parser)]
#[command(name = "polycyclic", version, about = "Polycyclic codes over F_q^l and their Gray images")]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args)]
struct Global {
    /// Field order (prime power)
    #[arg(long, global = true)]
    q: Option<u32>,
    /// Field characteristic, used with --m
    #[arg(long, global = true)]
    p: Option<u32>,
    /// Extension degree, used with --p
    #[arg(long, global = true)]
    m: Option<u32>,
    /// Enumeration budget (codewords times length)
    #[arg(long, global = true, default_value_t = DEFAULT_DISTANCE_BUDGET)]
    budget: u128,
    /// Seed for randomized factorization
    #[arg(long, global = true, default_value_t = 0x5eed)]
    seed: u64,
    /// Machine-readable output
    #[arg(long, global = true)]
    json: bool,
    /// Include long-running corpus rows
    #[arg(long, global = true)]
    all: bool,
}

#[derive(Args)]
struct RecordArgs {
    /// Corpus file holding one record or an array, or a shipped table name (table1..table4)
    record: String,
    /// Record id when the file holds several records
    #[arg(long)]
    id: Option<String>,
    /// Override the record's Gray matrix, rows separated by ';' (e.g. "1,1;0,1")
    #[arg(long)]
    matrix: Option<String>,
}

#[derive(Subcommand)]
enum Cmd {
    /// Factor a polynomial over F_q
    Factor {
        /// Polynomial such as "x^7+1" or "x^2+(u+1)x+u"
        poly: String,
    },
    /// Components, duality predicates and Gray-image parameters of a record
    CodeInfo(RecordArgs),
    /// Annihilator dual of a record's code
    Dual(RecordArgs),
    /// Generator matrix of the Gray image
    Gray(RecordArgs),
    /// Minimum distance of a record's Gray image or of explicit generator rows
    Distance {
        record: Option<String>,
        #[arg(long)]
        id: Option<String>,
        #[arg(long)]
        matrix: Option<String>,
        /// Generator rows over F_q, separated by ';'
        #[arg(long, conflicts_with = "record")]
        generator: Option<String>,
    },
    /// Every polycyclic code of an ambient ring, with computed parameters
    Enumerate {
        #[arg(long)]
        n: usize,
        /// Component count; a single --a is replicated l times
        #[arg(long)]
        l: Option<usize>,
        /// Component a^(i)(x); repeat per component
        #[arg(long, required = true)]
        a: Vec<String>,
        #[arg(long)]
        matrix: Option<String>,
        /// Keep annihilator LCD codes only
        #[arg(long)]
        lcd: bool,
        /// Keep annihilator dual-containing codes only
        #[arg(long)]
        dual_containing: bool,
        #[arg(long)]
        min_k: Option<usize>,
        #[arg(long)]
        min_d: Option<usize>,
    },
    /// CSS parameters from a dual-containing record
    Quantum(RecordArgs),
    /// Recompute every expectation of a corpus
    Verify {
        /// Corpus file, or a shipped table name (table1..table4)
        corpus: String,
    },
}

/// A failure with its exit code.
struct Fail(u8, String);

impl From<Error> for Fail {
    fn from(e: Error) -> Fail {
        let code = if matches!(e, Error::BudgetExceeded { .. }) { 3 } else { 2 };
        let name = format!("{e:?}");
        let name = name.split([' ', '(']).next().unwrap_or_default().to_string();
        Fail(code, format!("{name}: {e}"))
    }
}

type Out = Result<(String, u8), Fail>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok((text, code)) => {
            print!("{text}");
            ExitCode::from(code)
        }
        Err(Fail(code, msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(code)
        }
    }
}

fn run(cli: &Cli) -> Out {
    let g = &cli.global;
    match &cli.cmd {
        Cmd::Factor { poly } => cmd_factor(g, poly),
        Cmd::CodeInfo(r) => cmd_code_info(g, r),
        Cmd::Dual(r) => cmd_dual(g, r),
        Cmd::Gray(r) => cmd_gray(g, r),
        Cmd::Distance { record, id, matrix, generator } => cmd_distance(g, record.as_deref(), id, matrix, generator),
        Cmd::Enumerate { n, l, a, matrix, lcd, dual_containing, min_k, min_d } => {
            let filter = Filter { lcd: *lcd, dual_containing: *dual_containing, min_k: *min_k, min_d: *min_d };
            cmd_enumerate(g, *n, *l, a, matrix.as_deref(), &filter)
        }
        Cmd::Quantum(r) => cmd_quantum(g, r),
        Cmd::Verify { corpus } => cmd_verify(g, corpus),
    }
}

fn input(msg: impl Into<String>) -> Fail {
    Fail(2, msg.into())
}

fn field(g: &Global) -> Result<Field, Fail> {
    let f = match (g.q, g.p, g.m) {
        (Some(q), None, None) => Field::of_order(q)?,
        (q, Some(p), m) => {
            let f = Field::new(p, m.unwrap_or(1), None)?;
            if q.is_some_and(|q| q != f.q()) {
                return Err(input(format!("--q {} differs from p^m = {}", q.unwrap(), f.q())));
            }
            f
        }
        _ => return Err(input("give the field with --q or with --p and --m")),
    };
    Ok(f)
}

fn builtin(name: &str) -> Option<&'static str> {
    match name.trim_end_matches(".json") {
        "table1" => Some(corpus::TABLE1),
        "table2" => Some(corpus::TABLE2),
        "table3" => Some(corpus::TABLE3),
        "table4" => Some(corpus::TABLE4),
        _ => None,
    }
}

fn load_records(source: &str) -> Result<Vec<Record>, Fail> {
    let path = PathBuf::from(source);
    let text = if path.exists() {
        std::fs::read_to_string(&path).map_err(|e| input(format!("{}: {e}", path.display())))?
    } else if let Some(t) = builtin(source) {
        t.to_string()
    } else {
        return Err(input(format!("{source}: no such file or shipped table")));
    };
    let value: Value = serde_json::from_str(&text).map_err(|e| Fail::from(Error::Parse(format!("{source}: {e}"))))?;
    let array = if value.is_array() { value } else { Value::Array(vec![value]) };
    Ok(parse_corpus(&array.to_string())?)
}

fn select(source: &str, id: Option<&str>) -> Result<Record, Fail> {
    let records = load_records(source)?;
    match id {
        Some(id) => records.into_iter().find(|r| r.id == id).ok_or_else(|| input(format!("{source}: no record `{id}`"))),
        None if records.len() == 1 => Ok(records.into_iter().next().unwrap()),
        None => Err(input(format!("{source} holds {} records, pick one with --id", records.len()))),
    }
}

fn parse_matrix(f: &Field, s: &str) -> Result<Matrix, Fail> {
    s.split(';')
        .map(|row| {
            row.split(',')
                .map(|c| Ok(f.parse_element(c.trim())?))
                .collect::<Result<Vec<u32>, Fail>>()
        })
        .collect()
}

/// The record's code and Gray spec, with `--matrix` replacing `M`.
fn load(r: &RecordArgs) -> Result<(Record, PolycyclicCode, GraySpec), Fail> {
    let mut rec = select(&r.record, r.id.as_deref())?;
    let field = rec.field()?;
    if let Some(m) = &r.matrix {
        rec.gray = parse_matrix(&field, m)?;
    }
    let code = rec.code()?;
    let gs = rec.gray_spec()?;
    Ok((rec, code, gs))
}

fn polys(ps: &[Poly]) -> Vec<String> {
    ps.iter().map(Poly::to_human).collect()
}

fn codes_of(ps: &[Poly]) -> Vec<Vec<u32>> {
    ps.iter().map(|p| p.coeffs().to_vec()).collect()
}

fn finish(g: &Global, value: Value, text: String) -> Out {
    if g.json {
        Ok((format!("{}\n", serde_json::to_string_pretty(&value).expect("json")), 0))
    } else {
        Ok((text, 0))
    }
}

fn cmd_factor(g: &Global, poly: &str) -> Out {
    let f = field(g)?;
    let p = Poly::parse(&f, poly)?;
    let fac = factor(&p, g.seed)?;
    let factors: Vec<Value> = fac
        .factors
        .iter()
        .map(|(h, m)| json!({ "factor": h.to_human(), "coeffs": h.coeffs(), "multiplicity": m }))
        .collect();
    let value = json!({ "field": f.to_string(), "poly": p.to_human(), "unit": fac.unit, "factors": factors });
    let mut parts: Vec<String> = fac
        .factors
        .iter()
        .map(|(h, m)| if *m == 1 { format!("({h})") } else { format!("({h})^{m}") })
        .collect();
    if fac.unit != 1 || parts.is_empty() {
        parts.insert(0, f.format_element(fac.unit));
    }
    let text = format!("{p} = {}\nmonic divisors: {}\n", parts.join(" "), fac.divisor_count());
    finish(g, value, text)
}

fn predicates(code: &PolycyclicCode) -> Value {
    json!({
        "self_orthogonal": code.is_ann_self_orthogonal(),
        "self_dual": code.is_ann_self_dual(),
        "dual_containing": code.is_ann_dual_containing(),
        "lcd": code.is_ann_lcd(),
    })
}

fn predicate_text(code: &PolycyclicCode) -> String {
    let yes = |b: bool| if b { "yes" } else { "no" };
    format!(
        "annihilator: self-orthogonal {}, self-dual {}, dual-containing {}, LCD {}\n",
        yes(code.is_ann_self_orthogonal()),
        yes(code.is_ann_self_dual()),
        yes(code.is_ann_dual_containing()),
        yes(code.is_ann_lcd())
    )
}

/// `[n,k,d] LCD A-MDS` style summary of a linear code.
fn summary(c: &LinearCode, budget: u128) -> Result<(String, Value), Fail> {
    let d = c.min_distance(budget)?;
    let class = classify(c.n(), c.k(), d).ok();
    let mut s = format!("[{},{},{d}]", c.n(), c.k());
    if c.is_lcd() {
        s.push_str(" LCD");
    }
    if let Some(cl) = class.filter(|cl| cl.to_string() != "-") {
        let _ = write!(s, " {cl}");
    }
    let value = json!({
        "n": c.n(), "k": c.k(), "d": d.value(), "d_exact": d.is_exact(),
        "lcd": c.is_lcd(), "class": class.map(|c| c.to_string()),
    });
    Ok((s, value))
}

fn cmd_code_info(g: &Global, r: &RecordArgs) -> Out {
    let (rec, code, gs) = load(r)?;
    let f = code.field();
    let img = gray_image(&code, &gs, &code.ring().standard_basis());
    let (line, params) = summary(&img, g.budget)?;
    let moduli = polys(code.mod_comps());
    let mut text = format!("{}: {f}, l = {}, n = {}\n", rec.id, code.l(), code.n());
    for i in 0..code.l() {
        let _ = writeln!(
            text,
            "  component {}: modulus {}, g = {}, h = {}",
            i + 1,
            moduli[i],
            code.gen_comps()[i],
            code.check_comps()[i]
        );
    }
    let rank = code.rank().map_or("-".to_string(), |r| r.to_string());
    let _ = writeln!(text, "|C| = {}^{}, monic {}, rank {rank}", f.q(), code.dimension(), code.is_monic());
    text.push_str(&predicate_text(&code));
    let _ = writeln!(text, "Psi(C): [{},{},{}] over {f}", img.n(), img.k(), params["d"]);
    let _ = writeln!(text, "{line}");
    let value = json!({
        "id": rec.id, "field": f.to_string(), "l": code.l(), "n": code.n(),
        "moduli": moduli, "g": polys(code.gen_comps()), "h": polys(code.check_comps()),
        "dimension": code.dimension(), "monic": code.is_monic(), "rank": code.rank(),
        "annihilator": predicates(&code), "gray_image": params,
    });
    finish(g, value, text)
}

fn cmd_dual(g: &Global, r: &RecordArgs) -> Out {
    let (rec, code, _) = load(r)?;
    let dual = code.ann_dual();
    let mut text = format!("{}: annihilator dual generators\n", rec.id);
    for (i, h) in dual.gen_comps().iter().enumerate() {
        let _ = writeln!(text, "  component {}: {h}", i + 1);
    }
    let _ = writeln!(text, "dimension {} over {}", dual.dimension(), code.field());
    text.push_str(&predicate_text(&code));
    let value = json!({
        "id": rec.id, "dual_g": polys(dual.gen_comps()), "dual_g_coeffs": codes_of(dual.gen_comps()),
        "dimension": dual.dimension(), "annihilator": predicates(&code),
    });
    finish(g, value, text)
}

fn matrix_text(m: &Matrix) -> String {
    m.iter().map(|r| r.iter().map(u32::to_string).collect::<Vec<_>>().join(" ") + "\n").collect()
}

fn cmd_gray(g: &Global, r: &RecordArgs) -> Out {
    let (rec, code, gs) = load(r)?;
    let img = gray_image(&code, &gs, &code.ring().standard_basis());
    let text = format!("{}: Psi(C) = [{},{}] over {}\n{}", rec.id, img.n(), img.k(), code.field(), matrix_text(img.generator()));
    let value = json!({ "id": rec.id, "M": gs.matrix(), "n": img.n(), "k": img.k(), "generator": img.generator() });
    finish(g, value, text)
}

fn cmd_distance(g: &Global, record: Option<&str>, id: &Option<String>, matrix: &Option<String>, generator: &Option<String>) -> Out {
    let code = match (record, generator) {
        (Some(src), None) => {
            let args = RecordArgs { record: src.to_string(), id: id.clone(), matrix: matrix.clone() };
            let (_, code, gs) = load(&args)?;
            gray_image(&code, &gs, &code.ring().standard_basis())
        }
        (None, Some(rows)) => {
            let f = field(g)?;
            let rows = parse_matrix(&f, rows)?;
            let n = rows[0].len();
            LinearCode::from_rows_with_len(&f, n, &rows)?
        }
        _ => return Err(input("give a record or --generator")),
    };
    let (line, value) = summary(&code, g.budget)?;
    let mut text = format!("{line}\n");
    if value["d_exact"] == false {
        let _ = writeln!(text, "distance is a lower bound; q^k * n exceeds --budget {}", g.budget);
    }
    finish(g, value, text)
}

struct Filter {
    lcd: bool,
    dual_containing: bool,
    min_k: Option<usize>,
    min_d: Option<usize>,
}

fn cmd_enumerate(g: &Global, n: usize, l: Option<usize>, a: &[String], matrix: Option<&str>, filter: &Filter) -> Out {
    let f = field(g)?;
    let mut a_comps = a.iter().map(|s| Poly::parse(&f, s)).collect::<Result<Vec<_>, _>>()?;
    match l {
        Some(l) if a_comps.len() == 1 => a_comps = vec![a_comps[0].clone(); l],
        Some(l) if l != a_comps.len() => return Err(input(format!("--l {l} but {} --a values", a_comps.len()))),
        _ => {}
    }
    let l = a_comps.len();
    let total = count_codes(&f, n, &a_comps)?;
    if total > g.budget {
        return Err(Error::BudgetExceeded { needed: total, budget: g.budget }.into());
    }
    let gray = match matrix {
        Some(m) => parse_matrix(&f, m)?,
        None => linalg::identity(l),
    };
    let mut records = Vec::new();
    for (idx, code) in enumerate_codes(&f, n, &a_comps)?.enumerate() {
        if filter.lcd && !code.is_ann_lcd() {
            continue;
        }
        if filter.dual_containing && !code.is_ann_dual_containing() {
            continue;
        }
        if filter.min_k.is_some_and(|k| code.dimension() < k) {
            continue;
        }
        let mut rec = Record {
            id: format!("c{idx:04}"),
            q: f.q() as u64,
            p: f.p() as u64,
            m: f.m(),
            modulus: (f.m() > 1).then(|| f.modulus().to_vec()),
            l,
            n,
            a: codes_of(&a_comps),
            g: codes_of(code.gen_comps()),
            gray: gray.clone(),
            expect: Expect { params: [n * l, code.dimension(), 0], flags: Vec::new(), quantum: None },
            long: false,
        };
        let c = compute(&rec, g.budget)?;
        if filter.min_d.is_some_and(|d| c.d < d) {
            continue;
        }
        rec.expect.params[2] = c.d;
        rec.long = !c.d_exact;
        let flags = [
            (c.lcd, Flag::Lcd),
            (c.class.as_deref() == Some("MDS"), Flag::Mds),
            (c.class.as_deref() == Some("A-MDS"), Flag::Amds),
            (c.quasicyclic, Flag::Quasicyclic),
            (c.dual_containing, Flag::Dualcontaining),
        ];
        rec.expect.flags = flags.into_iter().filter(|(b, _)| *b).map(|(_, fl)| fl).collect();
        records.push(rec);
    }
    let mut text = String::new();
    for r in &records {
        let gs: Vec<String> = r.g.iter().map(|g| Poly::new(&f, g.clone()).to_human()).collect();
        let [nn, k, d] = r.expect.params;
        let rel = if r.long { ">=" } else { "" };
        let flags: Vec<String> = r.expect.flags.iter().map(|fl| format!("{fl:?}").to_lowercase()).collect();
        let _ = writeln!(text, "{} g=({}) [{nn},{k},{rel}{d}] {}", r.id, gs.join(", "), flags.join(" "));
    }
    let _ = writeln!(text, "{} of {total} codes", records.len());
    if g.json {
        return Ok((corpus::to_json(&records) + "\n", 0));
    }
    Ok((text, 0))
}

fn cmd_quantum(g: &Global, r: &RecordArgs) -> Out {
    let (rec, code, gs) = load(r)?;
    let qp = quantum_from_polycyclic(&code, &gs, g.budget)?;
    let value = json!({ "id": rec.id, "N": qp.n, "K": qp.k, "D_lb": qp.d_lb, "exact": qp.exact, "lambda": qp.lambda });
    finish(g, value, format!("{}: {qp}\n", rec.id))
}

fn cmd_verify(g: &Global, source: &str) -> Out {
    let records = load_records(source)?;
    let report = verify(&records, g.budget, g.all);
    let code = if report.all_passed() { 0 } else { 1 };
    if g.json {
        return Ok((serde_json::to_string_pretty(&report).expect("json") + "\n", code));
    }
    Ok((report.render(), code))
}
