use std::io::{self, Read, Write};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use tb_core::braid::{bn_equal, classify_pair, BraidWord, HalfTwist};
use tb_core::gn::{Gn, GnElement};
use tb_core::primes::{check_prime_frame, check_prop71, CheckOptions, GnInstance, PrimeReport, Verdict};
use tb_core::quotient::Tbn;
use tb_core::verify::{run_suite, SuiteReport, VerifyConfig, SUITES};
use tb_core::Error;

/// Braid groups modulo commutators of transversal half-twists.
///
/// Words are whitespace-separated signed integers (`"1 -2 3"`, `""` is the
/// identity, `-` reads stdin). Elements of G(n) are written `bit;v0,v1,..`
/// and half-twists `i|word|+` or `i|word|-`.
#[derive(Parser, Debug)]
#[command(name = "tb", version)]
struct Cli {
    /// number of strands
    #[arg(long = "n", global = true, default_value_t = 4)]
    n: usize,
    /// emit a single JSON document
    #[arg(long, global = true)]
    json: bool,
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// size of randomized suites
    #[arg(long, global = true, default_value_t = 100)]
    cases: usize,
    /// orbit bound for prop71-check
    #[arg(long, global = true, default_value_t = 3)]
    bound: usize,
    /// print s_ij and action tables to stderr
    #[arg(long, global = true)]
    dump_tables: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// normal form of a word in B~_n
    Nf { word: String },
    /// compare two words
    Eq {
        #[arg(long, value_enum, default_value_t = Group::Tbn)]
        group: Group,
        left: String,
        right: String,
    },
    /// is the word trivial in B~_n
    Kernel { word: String },
    /// right action of a word on an element of G(n)
    Act { elem: String, word: String },
    /// a pure word with the given Lambda
    Lift { elem: String },
    /// linking matrix of a pure braid
    Lk { word: String },
    /// algebraic relation between two half-twists
    Classify { first: String, second: String },
    /// frame criterion for ELEM supported on X_1 with central element TAU
    PrimeCheck { elem: String, tau: String },
    /// orbit criterion on the subgroup generated by the orbit of ELEM
    #[command(name = "prop71-check")]
    Prop71Check {
        elem: String,
        #[arg(long, value_enum, default_value_t = Subgroup::G0)]
        subgroup: Subgroup,
    },
    /// run the verification suites
    Verify {
        #[arg(default_value = "all")]
        suite: String,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum Group {
    Bn,
    Tbn,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum Subgroup {
    G0,
    Full,
}

struct Output {
    json: Value,
    human: String,
    ok: bool,
}

impl Output {
    fn new(json: Value, human: impl Into<String>) -> Self {
        Output { json, human: human.into(), ok: true }
    }

    fn verdict(ok: bool, yes: &str, no: &str) -> Self {
        let word = if ok { yes } else { no };
        Output { json: json!(word), human: word.to_string(), ok }
    }
}

struct Input {
    stdin: Option<String>,
}

impl Input {
    fn text(&mut self, arg: &str) -> Result<String, Error> {
        if arg != "-" {
            return Ok(arg.to_string());
        }
        if let Some(s) = &self.stdin {
            return Ok(s.clone());
        }
        let mut buf = String::new();
        io::stdin().read_to_string(&mut buf).map_err(|e| Error::Parse { what: "stdin", token: e.to_string() })?;
        self.stdin = Some(buf.clone());
        Ok(buf)
    }

    fn word(&mut self, n: usize, arg: &str) -> Result<BraidWord, Error> {
        BraidWord::parse(n, &self.text(arg)?)
    }
}

fn elem_json(g: &GnElement) -> Value {
    json!({ "bit": g.bit, "vec": g.vec })
}

fn report_output(r: &PrimeReport) -> Output {
    let mut human = verdict_name(r.verdict).to_string();
    if let Some(b) = r.bound {
        human.push_str(&format!(" (bound {b})"));
    }
    for (id, ok) in &r.conditions {
        human.push_str(&format!("\n  {id}: {}", if *ok { "ok" } else { "FAIL" }));
    }
    if let Some(w) = &r.witness {
        human.push_str(&format!("\nwitness [{}]: {}", w.condition, w.detail));
    }
    let json = serde_json::to_value(r).expect("report serializes");
    Output { json, human, ok: r.passed() }
}

fn verdict_name(v: Verdict) -> &'static str {
    match v {
        Verdict::Pass => "pass",
        Verdict::Fail => "fail",
        Verdict::PassUpToBound => "pass-up-to-bound",
    }
}

fn verify(name: &str, cfg: VerifyConfig) -> Result<Output, Error> {
    let names: Vec<&str> = if name == "all" { SUITES.to_vec() } else { vec![name] };
    let results: Vec<Result<Vec<SuiteReport>, Error>> = std::thread::scope(|s| {
        let handles: Vec<_> = names.iter().map(|n| s.spawn(move || run_suite(n, &cfg))).collect();
        handles.into_iter().map(|h| h.join().expect("suite thread panicked")).collect()
    });
    let mut suites = Vec::new();
    for r in results {
        suites.extend(r?);
    }
    let ok = suites.iter().all(SuiteReport::passed);
    let mut human = String::new();
    for s in &suites {
        for c in &s.checks {
            let mark = if c.passed { "PASS" } else { "FAIL" };
            human.push_str(&format!("{mark} [{}] {} ({} cases)\n", s.suite, c.name, c.cases));
            if let Some(d) = &c.detail {
                human.push_str(&format!("     {d}\n"));
            }
        }
    }
    let total: usize = suites.iter().map(|s| s.checks.len()).sum();
    let failed: usize = suites.iter().map(|s| s.checks.iter().filter(|c| !c.passed).count()).sum();
    human.push_str(&format!("{}: {} checks, {} failed", if ok { "pass" } else { "fail" }, total, failed));
    let json = json!({
        "result": if ok { "pass" } else { "fail" },
        "n": cfg.n,
        "seed": cfg.seed,
        "cases": cfg.cases,
        "suites": suites,
    });
    Ok(Output { json, human, ok })
}

fn dump_tables(n: usize) -> Result<(), Error> {
    let gn = Gn::new(n)?;
    for j in 2..=n {
        for i in 1..j {
            eprintln!("s_{i}{j} = {}", gn.s_ij(i, j)?);
        }
    }
    let (fwd, bwd) = gn.action_tables();
    for (label, table) in [("", fwd), ("^-1", bwd)] {
        for (i, row) in table.iter().enumerate() {
            let images: Vec<String> = row.iter().map(|g| g.to_string()).collect();
            eprintln!("X_{}{label}: {}", i + 1, images.join("  "));
        }
    }
    Ok(())
}

fn run(cli: &Cli) -> Result<Output, Error> {
    let n = cli.n;
    let mut input = Input { stdin: None };
    if cli.dump_tables {
        dump_tables(n)?;
    }
    let out = match &cli.command {
        Command::Nf { word } => {
            let w = input.word(n, word)?;
            let record = Tbn::new(n)?.normal_form(&w)?.record(false);
            let text = serde_json::to_string(&record).expect("record serializes");
            Output::new(serde_json::to_value(&record).expect("record serializes"), text)
        }
        Command::Eq { group, left, right } => {
            let a = input.word(n, left)?;
            let b = input.word(n, right)?;
            let equal = match group {
                Group::Bn => bn_equal(&a, &b)?,
                Group::Tbn => Tbn::new(n)?.tbn_equal(&a, &b)?,
            };
            Output::verdict(equal, "equal", "not-equal")
        }
        Command::Kernel { word } => {
            let w = input.word(n, word)?;
            Output::verdict(Tbn::new(n)?.in_kernel(&w)?, "yes", "no")
        }
        Command::Act { elem, word } => {
            let gn = Gn::new(n)?;
            let g = GnElement::parse(n, &input.text(elem)?)?;
            let w = input.word(n, word)?;
            let got = gn.act_word(&g, &w)?;
            Output::new(elem_json(&got), got.to_string())
        }
        Command::Lift { elem } => {
            let g = GnElement::parse(n, &input.text(elem)?)?;
            let w = Tbn::new(n)?.lift(&g)?;
            Output::new(json!(w.letters()), w.to_string())
        }
        Command::Lk { word } => {
            let m = input.word(n, word)?.linking_matrix()?;
            let rows: Vec<String> =
                m.iter().map(|r| r.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" ")).collect();
            Output::new(json!(m), rows.join("\n"))
        }
        Command::Classify { first, second } => {
            let a = HalfTwist::parse(n, &input.text(first)?)?;
            let b = HalfTwist::parse(n, &input.text(second)?)?;
            let r = classify_pair(&a, &b)?;
            let human = format!(
                "commute={} triple={} common_endpoints={} label={}",
                r.commute,
                r.triple,
                r.common_endpoints,
                r.label().unwrap_or("none")
            );
            let json = json!({
                "commute": r.commute,
                "triple": r.triple,
                "common_endpoints": r.common_endpoints,
                "label": r.label(),
            });
            Output::new(json, human)
        }
        Command::PrimeCheck { elem, tau } => {
            let g = GnInstance::full(n)?;
            let u = GnElement::parse(n, &input.text(elem)?)?;
            let t = GnElement::parse(n, &input.text(tau)?)?;
            let opts = CheckOptions { seed: cli.seed, ..CheckOptions::default() };
            report_output(&check_prime_frame(&g, &u, &t, &opts)?)
        }
        Command::Prop71Check { elem, subgroup } => {
            let g = match subgroup {
                Subgroup::G0 => GnInstance::g0(n)?,
                Subgroup::Full => GnInstance::full(n)?,
            };
            let s = GnElement::parse(n, &input.text(elem)?)?;
            let opts = CheckOptions { seed: cli.seed, ..CheckOptions::default() };
            report_output(&check_prop71(&g, &s, cli.bound, &opts)?)
        }
        Command::Verify { suite } => verify(suite, VerifyConfig { n, cases: cli.cases, seed: cli.seed })?,
    };
    Ok(out)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            let text = if cli.json { out.json.to_string() } else { out.human };
            // a closed pipe downstream is not an error of ours
            let _ = writeln!(io::stdout(), "{text}");
            if out.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("tb: {e}");
            ExitCode::from(2)
        }
    }
}
