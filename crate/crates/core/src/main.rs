use std::fmt::Write as _;
use std::io::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use ordseq::cache::Cache;
use ordseq::catalog::{self, ENTRIES};
use ordseq::classify::classify;
use ordseq::error::{Error, Result};
use ordseq::expr::parse;
use ordseq::fixtures::{self, Fixture};
use ordseq::order_sequence::*;
use ordseq::poset::{build_poset, to_csv, to_dot, to_text, Corpus, CorpusEntry};
use ordseq::verify::{self, Suite, VerifyOptions};

/// Order sequences of finite groups.
///
/// Operands are group expressions such as `C(5) x A(5)`, `Cat(C3^2:D8)` or
/// `PSL2(64)`. Where a sequence is expected, the operand may also be a
/// sequence literal (`n=12; (1,1)(2,3)(3,8)` or `(1,1)(2,3)(3,8)`) or
/// `fixture:<label>`.
#[derive(Parser, Debug)]
#[command(name = "ordseq", version)]
struct Cli {
    /// Fixture file (defaults to the built-in one).
    #[arg(long, global = true)]
    fixtures: Option<PathBuf>,
    /// Append-only cache of computed sequences.
    #[arg(long, global = true)]
    cache: Option<PathBuf>,
    /// Recompute every cached entry and compare.
    #[arg(long, global = true)]
    check_cache: bool,
    /// Optional features to enable at run time (`sz8`).
    #[arg(long, global = true, value_delimiter = ',')]
    features: Vec<String>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, Debug, ValueEnum)]
enum Emit {
    Dot,
    Csv,
    Text,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the order sequence of a group.
    Os { expr: String },
    /// Compare two sequences of equal total.
    Compare { left: String, right: String },
    /// Nilpotent, supersolvable and solvable, with witnesses.
    Classify { expr: String },
    /// Sum of element orders.
    Psi { operand: String },
    /// Formal product of two sequences.
    Product { left: String, right: String },
    /// Domination poset of fixtures of one order, or of a list of operands.
    Poset {
        /// Use the fixtures of this order.
        #[arg(long)]
        order: Option<u64>,
        #[arg(long, value_enum, default_value = "text")]
        emit: Emit,
        operands: Vec<String>,
    },
    /// Run a verification suite, or all of them.
    Verify {
        /// table1, table2, table3, thm23, thm25, thm29, simple, props or all.
        suite: String,
        #[arg(long, value_delimiter = ',')]
        primes: Option<Vec<u32>>,
    },
    /// List catalog names, or print the sequence of one entry.
    Catalog {
        name: Option<String>,
        #[arg(long)]
        p: Option<u32>,
    },
    /// List and validate fixtures.
    Fixtures {
        #[arg(long)]
        order: Option<u64>,
    },
}

struct Ctx {
    fixtures: Vec<Fixture>,
    cache: Option<Cache>,
    sz8: bool,
}

impl Ctx {
    fn group_sequence(&mut self, text: &str) -> Result<OrderSequence> {
        let expr = parse(text)?;
        let key = expr.to_string();
        if let Some(s) = self.cache.as_ref().and_then(|c| c.get(&key)) {
            return Ok(s.clone());
        }
        let s = os_of_group(&*expr.eval()?);
        if let Some(c) = self.cache.as_mut() {
            c.put(&key, &s)?;
        }
        Ok(s)
    }

    fn operand(&mut self, text: &str) -> Result<(String, OrderSequence)> {
        let t = text.trim();
        if let Some(label) = t.strip_prefix("fixture:") {
            let f = fixtures::find(&self.fixtures, label)?;
            return Ok((f.label.clone(), f.sequence.clone()));
        }
        if t.starts_with("n=") {
            return Ok((t.to_string(), t.parse()?));
        }
        if t.starts_with('(')
            && t[1..]
                .trim_start()
                .starts_with(|c: char| c.is_ascii_digit() || c == '(')
        {
            return Ok((t.to_string(), OrderSequence::parse_pairs(t)?));
        }
        let s = self.group_sequence(t)?;
        Ok((parse(t)?.to_string(), s))
    }
}

fn check_cache(cache: &Cache, out: &mut String) -> Result<bool> {
    let mut ok = true;
    for (key, cached) in cache.entries() {
        let fresh = os_of_group(&*parse(key)?.eval()?);
        if &fresh != cached {
            let _ = writeln!(out, "FAIL cache {key}: cached {cached} | computed {fresh}");
            ok = false;
        } else {
            let _ = writeln!(out, "PASS cache {key}");
        }
    }
    Ok(ok)
}

fn run(cli: Cli, out: &mut String) -> Result<ExitCode> {
    let mut sz8 = false;
    for f in &cli.features {
        match f.as_str() {
            "sz8" if cfg!(feature = "sz8") => sz8 = true,
            "sz8" => return Err(Error::FeatureDisabled("sz8")),
            other => {
                return Err(Error::InvalidParameter {
                    name: "features",
                    reason: format!("unknown feature `{other}`"),
                })
            }
        }
    }
    let fixtures = match &cli.fixtures {
        Some(p) => fixtures::load_fixtures(p)?,
        None => fixtures::builtin_fixtures(),
    };
    let cache = cli.cache.as_ref().map(Cache::open).transpose()?;
    if cli.check_cache {
        let c = cache.as_ref().ok_or_else(|| Error::InvalidParameter {
            name: "check-cache",
            reason: "needs --cache <path>".into(),
        })?;
        if !check_cache(c, out)? {
            return Ok(ExitCode::from(3));
        }
    }
    let mut ctx = Ctx {
        fixtures,
        cache,
        sz8,
    };

    match cli.command {
        Command::Os { expr } => {
            let _ = writeln!(out, "{}", ctx.group_sequence(&expr)?);
        }
        Command::Compare { left, right } => {
            let (_, a) = ctx.operand(&left)?;
            let (_, b) = ctx.operand(&right)?;
            let _ = writeln!(out, "{}", compare(&a, &b)?);
        }
        Command::Classify { expr } => {
            let g = parse(&expr)?.eval()?;
            let r = classify(&g)?;
            let series: Vec<String> = r.derived_series.iter().map(|n| n.to_string()).collect();
            let chain: Vec<String> = r
                .supersolvable_witness
                .iter()
                .map(|p| p.to_string())
                .collect();
            let _ = writeln!(out, "order: {}", r.order);
            let _ = writeln!(out, "nilpotent: {}", r.nilpotent);
            let _ = writeln!(out, "supersolvable: {}", r.supersolvable);
            let _ = writeln!(out, "solvable: {}", r.solvable);
            let _ = writeln!(out, "derived series orders: {}", series.join(" > "));
            if r.supersolvable {
                let _ = writeln!(out, "prime-order normal chain: {}", chain.join(" "));
            }
        }
        Command::Psi { operand } => {
            let _ = writeln!(out, "{}", psi(&ctx.operand(&operand)?.1));
        }
        Command::Product { left, right } => {
            let (_, a) = ctx.operand(&left)?;
            let (_, b) = ctx.operand(&right)?;
            let p = os_product(&a, &b);
            let _ = writeln!(out, "{p}");
            let check = is_plausible(&p, p.total());
            if !check.plausible {
                eprintln!(
                    "note: not the sequence of any group: {}",
                    check.reason.unwrap_or_default()
                );
            }
        }
        Command::Poset {
            order,
            emit,
            operands,
        } => {
            let corpus = match order {
                Some(n) => {
                    if !operands.is_empty() {
                        return Err(Error::InvalidParameter {
                            name: "poset",
                            reason: "give either --order or operands".into(),
                        });
                    }
                    Corpus::from_fixtures(&ctx.fixtures, n)?
                }
                None => {
                    let mut entries = Vec::new();
                    for o in &operands {
                        let (label, s) = ctx.operand(o)?;
                        entries.push(CorpusEntry::new(label, s));
                    }
                    Corpus::new(entries)?
                }
            };
            let p = build_poset(&corpus)?;
            out.push_str(&match emit {
                Emit::Dot => to_dot(&p),
                Emit::Csv => to_csv(&p),
                Emit::Text => to_text(&p),
            });
        }
        Command::Verify { suite, primes } => {
            let suites: Vec<Suite> = if suite == "all" {
                Suite::ALL.to_vec()
            } else {
                vec![suite.parse()?]
            };
            if primes.is_some() && suites.iter().any(|s| !s.takes_primes()) {
                return Err(Error::InvalidParameter {
                    name: "primes",
                    reason: format!("suite {suite} takes no primes"),
                });
            }
            let opts = VerifyOptions {
                fixtures: ctx.fixtures.clone(),
                primes,
                sz8: ctx.sz8,
            };
            let mut ok = true;
            for s in suites {
                let report = verify::run(s, &opts)?;
                out.push_str(&report.render());
                ok &= report.passed();
            }
            if !ok {
                return Ok(ExitCode::from(3));
            }
        }
        Command::Catalog { name: None, p } => {
            if p.is_some() {
                return Err(Error::InvalidParameter {
                    name: "catalog",
                    reason: "--p needs a name".into(),
                });
            }
            for e in ENTRIES {
                let alias = if e.aliases.is_empty() {
                    String::new()
                } else {
                    format!(" (alias {})", e.aliases.join(", "))
                };
                let param = if e.parametrized { " [p]" } else { "" };
                let _ = writeln!(out, "{}{param}{alias}: {}", e.name, e.structure);
            }
        }
        Command::Catalog {
            name: Some(name),
            p,
        } => {
            let g = catalog::catalog(&name, p)?;
            let _ = writeln!(out, "{}", os_of_group(&g));
        }
        Command::Fixtures { order } => {
            for f in ctx
                .fixtures
                .iter()
                .filter(|f| order.is_none_or(|n| f.n == n))
            {
                let _ = writeln!(out, "{}", f.to_line());
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    let mut out = String::new();
    let code = match run(cli, &mut out) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    };
    match std::io::stdout().lock().write_all(out.as_bytes()) {
        Err(e) if e.kind() != std::io::ErrorKind::BrokenPipe => ExitCode::from(1),
        _ => code,
    }
}
