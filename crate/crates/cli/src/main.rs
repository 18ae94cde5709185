use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use schubcurve::catalog::{self, EXAMPLES};
use schubcurve::dual::enumerate_chains;
use schubcurve::growth::promotion;
use schubcurve::ktheory::{
    k_coeff, k_coeff_pieri, k_promotion_count, lr_coeff, lr_oracle, parity_check, parity_scan,
    promotion_sign,
};
use schubcurve::monodromy::{
    build_covering, ordering_orbits, with_box, CircularOrdering, OrbitReport, OrderingPreset,
};
use schubcurve::osculating::minor_identity_check;
use schubcurve::shapes::parse_partition_list;
use schubcurve::tableau::enumerate_standard;
use schubcurve::{Generator, MonodromyWord, Partition, Rectangle, SkewShape};

#[derive(Parser)]
#[command(
    name = "schubcurve",
    version,
    about = "Schubert curve combinatorics: monodromy, orbits and K-theory checks"
)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, global = true, default_value_t = Format::Text)]
    format: Format,

    /// Worker threads for parallel scans (default: all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
    Dot,
}

#[derive(Subcommand)]
enum Command {
    /// List the chains of dual equivalence classes with the given types.
    EnumerateChains {
        #[arg(long, value_parser = parse_rect)]
        rect: Rectangle,
        #[arg(long, value_parser = parse_list)]
        types: Types,
        /// Inner shape (defaults to the empty partition).
        #[arg(long, value_parser = parse_partition, default_value = "")]
        inner: Partition,
        /// Outer shape (defaults to the full rectangle).
        #[arg(long, value_parser = parse_partition)]
        outer: Option<Partition>,
    },
    /// Orbits of the loop word for a circular ordering.
    Orbits(LoopArgs),
    /// Number of orbits, i.e. real connected components.
    Components(LoopArgs),
    /// Check the parity identities for every first-order triple in a rectangle.
    ParityScan {
        #[arg(long, value_parser = parse_rect)]
        rect: Rectangle,
        /// Also list every triple, not only failures.
        #[arg(long)]
        all: bool,
    },
    /// First-order K-theoretic coefficient of a triple.
    Kcoeff {
        #[arg(long, value_parser = parse_rect)]
        rect: Rectangle,
        #[arg(long, value_parser = parse_partition)]
        alpha: Partition,
        #[arg(long, value_parser = parse_partition)]
        beta: Partition,
        #[arg(long, value_parser = parse_partition)]
        gamma: Partition,
        /// Print the full parity report for the triple.
        #[arg(long)]
        parity: bool,
        /// Use the closed form for a horizontal strip (beta must be one row).
        #[arg(long)]
        pieri: bool,
    },
    /// Littlewood-Richardson number counting chains with the given types.
    Lrcoeff {
        #[arg(long, value_parser = parse_rect)]
        rect: Option<Rectangle>,
        #[arg(long, value_parser = parse_partition, default_value = "")]
        inner: Partition,
        #[arg(long, value_parser = parse_partition)]
        outer: Partition,
        #[arg(long, value_parser = parse_list)]
        types: Types,
        /// Compare against the lattice-word count (single type only).
        #[arg(long)]
        oracle: bool,
    },
    /// Run a worked example and compare against its known values.
    VerifyExample {
        /// Example id, or `all`.
        id: String,
    },
    /// Export the covering graph over the caterpillar curve.
    ExportCovering {
        #[arg(long, value_parser = parse_rect)]
        rect: Rectangle,
        #[arg(long, value_parser = parse_list)]
        types: Types,
    },
    /// Exact check of the osculating-flag minor identity at random points.
    OsculatingCheck {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 100)]
        trials: usize,
    },
    /// Orbits of promotion on standard tableaux of a rectangle.
    PromotionOrbits {
        #[arg(long, value_parser = parse_rect)]
        rect: Rectangle,
    },
}

#[derive(Args)]
struct LoopArgs {
    #[arg(long, value_parser = parse_rect)]
    rect: Rectangle,
    /// Types of the marked points, e.g. "2;2,1;3,1;3,2".
    #[arg(long, value_parser = parse_list)]
    types: Types,
    /// Circular ordering of the marked points, e.g. 1324.
    #[arg(long)]
    ordering: Option<String>,
    /// box-first, box-second or swap-first-two.
    #[arg(long, default_value = "box-second")]
    preset: String,
    /// Explicit word such as "sh_2,esh_3"; acts on the box-second set.
    #[arg(long, conflicts_with = "preset")]
    word: Option<String>,
}

#[derive(Clone)]
struct Types(Vec<Partition>);

fn parse_rect(s: &str) -> Result<Rectangle, String> {
    s.parse().map_err(|e: schubcurve::Error| e.to_string())
}

fn parse_partition(s: &str) -> Result<Partition, String> {
    s.parse().map_err(|e: schubcurve::Error| e.to_string())
}

fn parse_list(s: &str) -> Result<Types, String> {
    parse_partition_list(s)
        .map(Types)
        .map_err(|e| e.to_string())
}

enum Failure {
    Usage(String),
    Verification,
}

impl From<schubcurve::Error> for Failure {
    fn from(e: schubcurve::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

type Outcome = Result<(), Failure>;

fn print_json(value: &impl serde::Serialize) {
    println!(
        "{}",
        serde_json::to_string_pretty(value).expect("reports serialize")
    );
}

fn verdict(ok: bool) -> Outcome {
    if ok {
        Ok(())
    } else {
        Err(Failure::Verification)
    }
}

fn loop_report(args: &LoopArgs) -> Result<OrbitReport, Failure> {
    let total: usize = args.types.0.iter().map(Partition::size).sum();
    if total + 1 != args.rect.area() {
        return Err(Failure::Usage(format!(
            "types have {total} boxes in total; {} needs {}",
            args.rect,
            args.rect.area() - 1
        )));
    }
    let preset = match &args.word {
        Some(w) => OrderingPreset::User(w.parse::<MonodromyWord>()?),
        None => args.preset.parse()?,
    };
    let ordering = match &args.ordering {
        Some(o) => o.parse()?,
        None => CircularOrdering::identity(args.types.0.len()),
    };
    Ok(ordering_orbits(
        &args.types.0,
        args.rect,
        &ordering,
        &preset,
    )?)
}

fn run(cli: Cli) -> Outcome {
    let format = cli.format;
    match cli.command {
        Command::EnumerateChains {
            rect,
            types,
            inner,
            outer,
        } => {
            rect.check_fits(&inner)?;
            let outer = outer.unwrap_or_else(|| rect.full());
            rect.check_fits(&outer)?;
            let chains = enumerate_chains(&inner, &outer, &types.0);
            match format {
                Format::Json => print_json(&chains),
                _ => {
                    for (k, c) in chains.iter().enumerate() {
                        println!("{k}: {}", c.tableau());
                    }
                    println!("{} chains", chains.len());
                }
            }
            Ok(())
        }
        Command::Orbits(args) => {
            let rep = loop_report(&args)?;
            match format {
                Format::Json => print_json(&rep),
                _ => {
                    println!("set size {}", rep.set_size);
                    println!("orbit sizes {:?}", rep.orbit_sizes());
                    for orbit in &rep.orbits {
                        println!("  {orbit:?}");
                    }
                    println!("sign {}", rep.sign);
                }
            }
            Ok(())
        }
        Command::Components(args) => {
            let rep = loop_report(&args)?;
            match format {
                Format::Json => {
                    print_json(&json!({"set_size": rep.set_size, "eta": rep.orbit_count()}))
                }
                _ => println!("eta={}", rep.orbit_count()),
            }
            Ok(())
        }
        Command::ParityScan { rect, all } => {
            let scan = parity_scan(rect)?;
            match format {
                Format::Json => {
                    let mut value = serde_json::to_value(&scan).expect("reports serialize");
                    if all {
                        value["reports"] =
                            serde_json::to_value(&scan.reports).expect("reports serialize");
                    }
                    print_json(&value);
                }
                _ => {
                    let shown = if all { &scan.reports } else { &scan.failures };
                    for r in shown {
                        println!(
                            "{} {} {}: c={} k={} eta={} sign={} {}",
                            r.alpha,
                            r.beta,
                            r.gamma,
                            r.c,
                            r.k,
                            r.eta,
                            r.sign,
                            if r.ok { "ok" } else { "FAIL" }
                        );
                    }
                    println!(
                        "{rect}: {} triples, {} failures, {} with eta != c - k",
                        scan.triples,
                        scan.failures.len(),
                        scan.integer_mismatches
                    );
                }
            }
            verdict(scan.failures.is_empty())
        }
        Command::Kcoeff {
            rect,
            alpha,
            beta,
            gamma,
            parity,
            pieri,
        } => {
            if parity {
                let rep = parity_check(&alpha, &beta, &gamma, rect)?;
                match format {
                    Format::Json => print_json(&rep),
                    _ => println!(
                        "c={} k={} eta={} sign={} chi={} {}",
                        rep.c,
                        rep.k,
                        rep.eta,
                        rep.sign,
                        rep.chi,
                        if rep.ok { "ok" } else { "FAIL" }
                    ),
                }
                return verdict(rep.ok);
            }
            let k = if pieri {
                if beta.len() > 1 {
                    return Err(Failure::Usage("--pieri needs a one-row beta".into()));
                }
                k_coeff_pieri(&alpha, beta.size(), &gamma, rect)?
            } else {
                k_coeff(&alpha, &beta, &gamma, rect)?
            };
            match format {
                Format::Json => print_json(&json!({"k": k})),
                _ => println!("{k}"),
            }
            Ok(())
        }
        Command::Lrcoeff {
            rect,
            inner,
            outer,
            types,
            oracle,
        } => {
            if let Some(r) = rect {
                r.check_fits(&outer)?;
            }
            if !outer.contains(&inner) {
                return Err(Failure::Usage(format!(
                    "{inner} is not contained in {outer}"
                )));
            }
            let c = lr_coeff(&inner, &types.0, &outer);
            let check = if oracle {
                match types.0.as_slice() {
                    [lam] => Some(lr_oracle(&inner, lam, &outer)),
                    _ => return Err(Failure::Usage("--oracle needs exactly one type".into())),
                }
            } else {
                None
            };
            match format {
                Format::Json => print_json(&json!({"c": c, "oracle": check})),
                _ => match check {
                    Some(o) => println!("{c} (lattice words: {o})"),
                    None => println!("{c}"),
                },
            }
            verdict(check.is_none_or(|o| o == c))
        }
        Command::VerifyExample { id } => {
            let examples: Vec<_> = if id == "all" {
                EXAMPLES.iter().collect()
            } else {
                vec![catalog::find(&id)?]
            };
            let reports = examples
                .iter()
                .map(|e| e.run())
                .collect::<schubcurve::Result<Vec<_>>>()?;
            match format {
                Format::Json => print_json(&reports),
                _ => {
                    for rep in &reports {
                        println!("{}: {}", rep.id, rep.description);
                        for c in &rep.checks {
                            let mark = if c.ok { "ok" } else { "FAIL" };
                            println!(
                                "  {mark:<4} {}: expected {}, got {}",
                                c.name, c.expected, c.actual
                            );
                        }
                    }
                }
            }
            verdict(reports.iter().all(|r| r.ok))
        }
        Command::ExportCovering { rect, types } => {
            let model = build_covering(&types.0, rect)?;
            match format {
                Format::Json => print_json(&model.to_json()),
                Format::Dot => print!("{}", model.to_dot()),
                Format::Text => {
                    for (k, fiber) in model.fibers().iter().enumerate() {
                        println!("fiber {k} (box at {}): {} chains", k + 1, fiber.len());
                    }
                    for i in 1..=types.0.len() {
                        println!("sh_{i}: {:?}", model.sh_map(i));
                        println!("esh_{i}: {:?}", model.esh_map(i));
                    }
                }
            }
            Ok(())
        }
        Command::OsculatingCheck { n, seed, trials } => {
            if n == 0 || n > 20 {
                return Err(Failure::Usage("--n must be between 1 and 20".into()));
            }
            let rep = minor_identity_check(n, seed, trials);
            match format {
                Format::Json => print_json(&rep),
                _ => println!(
                    "n={} checked={} failures={}",
                    rep.n, rep.checked, rep.failures
                ),
            }
            verdict(rep.ok())
        }
        Command::PromotionOrbits { rect } => {
            let tableaux = enumerate_standard(&SkewShape::straight(rect.full()));
            let index: std::collections::HashMap<_, _> =
                tableaux.iter().enumerate().map(|(k, t)| (t, k)).collect();
            let perm: Vec<usize> = tableaux.iter().map(|t| index[&promotion(t)]).collect();
            let word = MonodromyWord::new((1..rect.area()).map(Generator::Sh).collect());
            let rep = OrbitReport::from_permutation(word, perm);
            let via_chains = {
                let boxes = vec![Partition::row(1); rect.area() - 1];
                let chains =
                    enumerate_chains(&Partition::empty(), &rect.full(), &with_box(&boxes, 1));
                let rep = schubcurve::monodromy::orbits(
                    &schubcurve::monodromy::omega_word(&OrderingPreset::BoxFirst, boxes.len()),
                    &chains,
                )?;
                let mut sizes = rep.orbit_sizes();
                sizes.sort_unstable();
                sizes
            };
            let mut sizes = rep.orbit_sizes();
            sizes.sort_unstable();
            let k = k_promotion_count(rect);
            let ok = sizes == via_chains && u64::from(promotion_sign(rect)) == k % 2;
            match format {
                Format::Json => print_json(&json!({
                    "rect": rect,
                    "set_size": rep.set_size,
                    "orbit_sizes": sizes,
                    "sign": rep.sign,
                    "k": k,
                    "ok": ok,
                })),
                _ => {
                    println!(
                        "{} tableaux, {} orbits, sizes {:?}",
                        rep.set_size,
                        sizes.len(),
                        sizes
                    );
                    println!(
                        "sign {} k {} {}",
                        rep.sign,
                        k,
                        if ok { "ok" } else { "FAIL" }
                    );
                }
            }
            verdict(ok)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    if let Some(jobs) = cli.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global()
        {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
