use std::env;
use std::process::ExitCode;
use std::time::Duration;

use clap::{Parser, Subcommand, ValueEnum};
use diagmon::monoid::{
    enumerate_brauer_bounded, enumerate_jones_bounded, DEFAULT_BRAUER_BOUND, DEFAULT_JONES_BOUND,
};
use diagmon::rees::{nfb_submatrix_classify, AbelianGroup, SandwichMatrix};
use diagmon::render::{render_ascii, render_svg};
use diagmon::structure::Involution;
use diagmon::words::{
    evaluate, first_counterexample, isoterm_witnesses, refute_identity, zimin, Assignment,
};
use diagmon::{Chip, Error, FiniteSemigroup, Identity, InvWord};
use diagmon_verify::{run_many, Scenario, SCENARIOS};

mod target;

use target::{kauffman_assignment, parse_target, table_assignment, Target};

const JONES_BOUND_VAR: &str = "DIAGMON_JONES_BOUND";
const BRAUER_BOUND_VAR: &str = "DIAGMON_BRAUER_BOUND";

/// Exact arithmetic in wire, Brauer, Jones and Kauffman monoids.
#[derive(Parser)]
#[command(name = "diagmon", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    Jones,
    Brauer,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Ascii,
    Svg,
}

#[derive(Clone, Copy, ValueEnum)]
enum InvolutionArg {
    Reflection,
    Rotation,
}

impl From<InvolutionArg> for Involution {
    fn from(a: InvolutionArg) -> Self {
        match a {
            InvolutionArg::Reflection => Involution::Reflection,
            InvolutionArg::Rotation => Involution::Rotation,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Product of two chips.
    Mul { a: String, b: String },
    /// Reflection `ξ*`.
    Star { chip: String },
    /// Rotation by 180 degrees.
    Rotate { chip: String },
    /// Exit 0 if the chip is planar, 1 otherwise.
    Planar { chip: String },
    /// List the Jones or Brauer monoid of degree N. Bounds can be raised
    /// with DIAGMON_JONES_BOUND and DIAGMON_BRAUER_BOUND.
    Enumerate {
        family: Family,
        n: usize,
        /// Print only the number of elements.
        #[arg(long)]
        count: bool,
    },
    /// The Zimin word Z_N.
    Zimin {
        #[arg(value_parser = clap::value_parser!(u32).range(1..=24))]
        n: u32,
    },
    /// Evaluate WORD under `x1=V,x2=V,...` in k<N>, b21, a2, tsl or `table FILE`.
    Eval {
        word: String,
        #[arg(value_parser = ["with"], hide = true)]
        with: String,
        assign: String,
        #[arg(value_parser = ["in"], hide = true)]
        in_: String,
        #[arg(required = true, num_args = 1..=2)]
        target: Vec<String>,
        /// Involution used for starred letters in k<N>.
        #[arg(long, value_enum)]
        involution: Option<InvolutionArg>,
    },
    /// Exhaustively check `IDENT` (e.g. "x1 x2 = x2 x1") in a finite table.
    CheckIdentity {
        ident: String,
        #[arg(value_parser = ["in"], hide = true)]
        in_: String,
        #[arg(required = true, num_args = 1..=2)]
        table: Vec<String>,
    },
    /// Search products of generators up to length L for a counterexample.
    Refute {
        ident: String,
        #[arg(value_parser = ["in"], hide = true)]
        in_: String,
        target: String,
        #[arg(value_parser = ["depth"], hide = true)]
        depth_kw: String,
        depth: usize,
        #[arg(long, value_enum)]
        involution: Option<InvolutionArg>,
    },
    /// Words of length at most L that WORD can be replaced by in a table.
    Isoterm {
        word: String,
        #[arg(value_parser = ["in"], hide = true)]
        in_: String,
        table: String,
        #[arg(value_parser = ["maxlen"], hide = true)]
        maxlen_kw: String,
        maxlen: usize,
    },
    /// Rees matrix tools.
    Rees {
        #[command(subcommand)]
        command: ReesCommand,
    },
    /// Run a named verification scenario, or `all`.
    Verify {
        #[arg(required_unless_present = "list")]
        scenario: Option<String>,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        /// Per-scenario time budget in seconds.
        #[arg(long, default_value_t = 60)]
        budget: u64,
        /// List the scenario names.
        #[arg(long)]
        list: bool,
    },
    /// Draw a chip.
    Render {
        chip: String,
        #[arg(long, value_enum, default_value = "ascii")]
        format: Format,
    },
    /// Print b21, a2 or tsl in the table text format.
    Export { name: String },
}

#[derive(Subcommand)]
enum ReesCommand {
    /// Find a 2x2 submatrix certificate in `MATRIX` (rows `;`, entries `,`).
    Classify {
        matrix: String,
        #[arg(value_parser = ["over"], hide = true)]
        over: String,
        group: String,
    },
}

/// An outcome other than plain success: a mathematical negative (exit 1)
/// or bad input (exit 2).
#[derive(Debug)]
pub struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn negative(message: impl Into<String>) -> Self {
        Failure { code: 1, message: message.into() }
    }

    pub fn usage(message: impl Into<String>) -> Self {
        Failure { code: 2, message: message.into() }
    }

    /// Wraps a library error; parse errors in `source` get a caret line.
    pub fn input(e: Error, source: Option<&str>) -> Self {
        let mut message = e.to_string();
        if let (Error::Parse { line: 1, column, .. }, Some(src)) = (&e, source) {
            if !src.contains('\n') {
                message.push_str(&format!("\n  {src}\n  {}^", " ".repeat(column.saturating_sub(1))));
            }
        }
        Failure { code: 2, message }
    }
}

fn chip(text: &str) -> Result<Chip, Failure> {
    text.parse().map_err(|e| Failure::input(e, Some(text)))
}

fn word(text: &str) -> Result<InvWord, Failure> {
    text.parse().map_err(|e| Failure::input(e, Some(text)))
}

fn identity(text: &str) -> Result<Identity, Failure> {
    text.parse().map_err(|e| Failure::input(e, Some(text)))
}

fn lib<T>(r: diagmon::Result<T>) -> Result<T, Failure> {
    r.map_err(|e| Failure::input(e, None))
}

fn bound(var: &str, default: usize) -> Result<usize, Failure> {
    match env::var(var) {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| Failure::usage(format!("{var}={v} is not a non-negative integer"))),
        Err(_) => Ok(default),
    }
}

fn show_assignment<E>(a: &Assignment<E>, show: impl Fn(&E) -> String) -> String {
    a.iter()
        .map(|(l, v)| format!("{l} -> {}", show(v)))
        .collect::<Vec<_>>()
        .join(", ")
}

fn table_involution(s: &FiniteSemigroup, involution: Option<InvolutionArg>) -> Result<(), Failure> {
    if involution.is_some() {
        return Err(Failure::usage(format!(
            "--involution applies to k<N> only; this table {} its own",
            if s.involution_table().is_some() { "carries" } else { "has no involution of" }
        )));
    }
    Ok(())
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Mul { a, b } => println!("{}", lib(chip(&a)?.multiply(&chip(&b)?))?),
        Command::Star { chip: c } => println!("{}", chip(&c)?.star()),
        Command::Rotate { chip: c } => println!("{}", chip(&c)?.rotate()),
        Command::Planar { chip: c } => {
            if chip(&c)?.is_planar() {
                println!("planar");
            } else {
                return Err(Failure::negative("not planar"));
            }
        }
        Command::Enumerate { family, n, count } => {
            let listed: Vec<String> = match family {
                Family::Jones => lib(enumerate_jones_bounded(n, bound(JONES_BOUND_VAR, DEFAULT_JONES_BOUND)?))?,
                Family::Brauer => lib(enumerate_brauer_bounded(n, bound(BRAUER_BOUND_VAR, DEFAULT_BRAUER_BOUND)?))?,
            }
            .into_iter()
            .map(|m| Chip::from_matching(m, 0).to_string())
            .collect();
            if !count {
                for line in &listed {
                    println!("{line}");
                }
            }
            println!("count: {}", listed.len());
        }
        Command::Zimin { n } => println!("{}", zimin(n)),
        Command::Eval { word: w, assign, target, involution, .. } => {
            let w = word(&w)?;
            match parse_target(&target, involution.map(Into::into))? {
                Target::Kauffman(k) => {
                    let a = kauffman_assignment(k.degree, &assign)?;
                    println!("{}", lib(evaluate(&k, &w, &a))?);
                }
                Target::Table(s) => {
                    table_involution(&s, involution)?;
                    let a = table_assignment(&s, &assign)?;
                    println!("{}", s.label(lib(evaluate(&s, &w, &a))?));
                }
            }
        }
        Command::CheckIdentity { ident, table, .. } => {
            let id = identity(&ident)?;
            let Target::Table(s) = parse_target(&table, None)? else {
                return Err(Failure::usage("check-identity needs a finite table; use refute for k<N>"));
            };
            match lib(first_counterexample(&s, &id))? {
                None => println!("holds: {id}"),
                Some(a) => {
                    return Err(Failure::negative(format!(
                        "fails: {id} at {}",
                        show_assignment(&a, |&v| s.label(v).to_string())
                    )))
                }
            }
        }
        Command::Refute { ident, target, depth, involution, .. } => {
            let id = identity(&ident)?;
            let found = match parse_target(&[target], involution.map(Into::into))? {
                Target::Kauffman(k) => {
                    let gens = k.kauffman_generators();
                    lib(refute_identity(&k, &gens, &id, depth))?.map(|a| show_assignment(&a, Chip::to_string))
                }
                Target::Table(s) => {
                    table_involution(&s, involution)?;
                    let gens: Vec<usize> = (0..s.size()).collect();
                    lib(refute_identity(&s, &gens, &id, depth))?
                        .map(|a| show_assignment(&a, |&v| s.label(v).to_string()))
                }
            };
            match found {
                None => println!("no counterexample up to depth {depth}: {id}"),
                Some(a) => return Err(Failure::negative(format!("refuted: {id} at {a}"))),
            }
        }
        Command::Isoterm { word: w, table, maxlen, .. } => {
            let w = word(&w)?;
            let Target::Table(s) = parse_target(&[table], None)? else {
                return Err(Failure::usage("isoterm needs a finite table"));
            };
            let found = lib(isoterm_witnesses(&s, &w, maxlen))?;
            if found.is_empty() {
                println!("no partner of {w} up to length {maxlen}");
            } else {
                for v in &found {
                    println!("{w} = {v}");
                }
                return Err(Failure::negative(format!("{} partners found", found.len())));
            }
        }
        Command::Rees { command: ReesCommand::Classify { matrix, group, .. } } => {
            let g: AbelianGroup = group.parse().map_err(|e| Failure::input(e, Some(&group)))?;
            let p = SandwichMatrix::parse(&matrix, &g).map_err(|e| Failure::input(e, Some(&matrix)))?;
            match nfb_submatrix_classify(&p, &g) {
                Some(c) => println!("{c}"),
                None => return Err(Failure::negative("no certificate")),
            }
        }
        Command::Verify { scenario, jobs, budget, list } => {
            if list {
                for s in SCENARIOS {
                    println!("{:<20} criterion {:>2}  {}", s.name, s.criterion, s.title);
                }
                return Ok(());
            }
            let scenario = scenario.unwrap_or_default();
            let chosen: Vec<&'static Scenario> = if scenario == "all" {
                SCENARIOS.iter().collect()
            } else {
                let s = diagmon_verify::find(&scenario).ok_or_else(|| {
                    Failure::usage(format!(
                        "unknown scenario '{scenario}'; known: all, {}",
                        SCENARIOS.iter().map(|s| s.name).collect::<Vec<_>>().join(", ")
                    ))
                })?;
                vec![s]
            };
            let outcomes = run_many(&chosen, jobs, Duration::from_secs(budget));
            for o in &outcomes {
                print!("{}", o.render());
            }
            if chosen.len() > 1 {
                println!();
                println!("{:<20} {:>9} {:>7} {:>10}", "scenario", "criterion", "status", "seconds");
                for o in &outcomes {
                    println!(
                        "{:<20} {:>9} {:>7} {:>10.2}",
                        o.scenario.name,
                        o.scenario.criterion,
                        o.status.word(),
                        o.elapsed.as_secs_f64()
                    );
                }
            }
            let failed = outcomes.iter().filter(|o| !o.passed()).count();
            if failed > 0 {
                return Err(Failure::negative(format!("{failed} of {} scenarios did not pass", outcomes.len())));
            }
        }
        Command::Render { chip: c, format } => {
            let c = chip(&c)?;
            match format {
                Format::Ascii => print!("{}", render_ascii(&c)),
                Format::Svg => print!("{}", render_svg(&c)),
            }
        }
        Command::Export { name } => match parse_target(&[name], None)? {
            Target::Table(s) => print!("{}", s.to_text()),
            Target::Kauffman(_) => return Err(Failure::usage("K_n is infinite and has no table")),
        },
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            if f.code == 1 {
                println!("{}", f.message);
            } else {
                eprintln!("error: {}", f.message);
            }
            ExitCode::from(f.code)
        }
    }
}
