use std::fs;
use std::io::{self, BufWriter, Write};
use std::process::ExitCode;

use brauer::enumerate::{all_diagrams, bounded_closure, count_diagrams, idempotents};
use brauer::green::{self, PreOrder, Relation};
use brauer::ideals::{self, GeneratingSet, IdealSpec};
use brauer::structure;
use brauer::{parse_twisted, star_chain, BrauerDiagram, Error, TwistedElement};
use clap::{Args, Parser, Subcommand, ValueEnum};

mod verify;

/// Exact computations in the Brauer monoid and the twisted Brauer monoid.
#[derive(Parser)]
#[command(name = "brauer", version)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, global = true, default_value_t = Format::Text)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Jsonl,
    Dot,
}

#[derive(Args, Clone)]
struct Degree {
    /// Degree of the diagrams.
    #[arg(long)]
    n: usize,
}

#[derive(Subcommand)]
enum Command {
    /// Multiply two elements and report the floating-component count.
    Mul {
        #[command(flatten)]
        degree: Degree,
        left: String,
        right: String,
    },
    /// Apply the involution.
    Star {
        #[command(flatten)]
        degree: Degree,
        element: String,
    },
    /// Green's relations and factorization witnesses.
    Green {
        #[command(subcommand)]
        command: GreenCommand,
    },
    /// Ideals of the twisted monoid.
    Ideal {
        #[command(subcommand)]
        command: IdealCommand,
    },
    /// List diagrams of one degree.
    Enumerate {
        #[command(flatten)]
        degree: Degree,
        /// Restrict to one rank.
        #[arg(long)]
        rank: Option<usize>,
        /// Restrict to idempotents.
        #[arg(long, value_enum)]
        idempotents: Option<IdempotentKind>,
        /// Allow degrees above 10.
        #[arg(long)]
        force: bool,
    },
    /// Twist-bounded closure of a generating set read from a JSON-lines file.
    Closure {
        #[arg(long)]
        gens: String,
        #[arg(long)]
        bound: u64,
    },
    /// Graham–Houghton graph of the D-class of rank r.
    GhGraph {
        #[command(flatten)]
        degree: Degree,
        #[arg(long)]
        r: usize,
        /// Emit DOT (same as --format dot).
        #[arg(long)]
        dot: bool,
    },
    /// Factor a singular diagram into twisted idempotents.
    Factor {
        #[command(flatten)]
        degree: Degree,
        /// Required; idempotent factorization is the only mode.
        #[arg(long)]
        idempotents: bool,
        element: String,
    },
    /// Run a theorem check and print a JSON report line.
    Verify {
        /// Theorem id, or `all`.
        theorem: String,
        #[command(flatten)]
        degree: Degree,
        #[arg(long)]
        r: Option<usize>,
        #[arg(long)]
        k: Option<u64>,
        #[arg(long)]
        bound: Option<u64>,
        #[arg(long)]
        exhaustive: bool,
        #[arg(long)]
        samples: Option<usize>,
        #[arg(long)]
        seed: Option<u64>,
        /// Allow exhaustive sweeps above degree 6.
        #[arg(long)]
        force: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum IdempotentKind {
    Plain,
    Twisted,
}

#[derive(Clone, Copy, ValueEnum)]
enum Side {
    Right,
    Left,
    TwoSided,
}

#[derive(Subcommand)]
enum GreenCommand {
    /// Decide x ≤ y for R, L or J.
    Leq {
        #[command(flatten)]
        degree: Degree,
        #[arg(long)]
        rel: String,
        x: String,
        y: String,
    },
    /// Describe the R, L, H, D or J class of x.
    Class {
        #[command(flatten)]
        degree: Degree,
        #[arg(long)]
        rel: String,
        x: String,
    },
    /// Witness for α ≤ β with no floating components.
    Factor {
        #[command(flatten)]
        degree: Degree,
        #[arg(long, value_enum, default_value_t = Side::Right)]
        side: Side,
        alpha: String,
        beta: String,
    },
}

#[derive(Subcommand)]
enum IdealCommand {
    Contains {
        #[command(flatten)]
        degree: Degree,
        /// Ideal in text form, e.g. `I(5;4) + I(3;2)`, or JSON.
        #[arg(long)]
        ideal: String,
        x: String,
    },
    Normalize {
        #[command(flatten)]
        degree: Degree,
        #[arg(long)]
        ideal: String,
    },
    Rank {
        #[command(flatten)]
        degree: Degree,
        #[arg(long)]
        r: usize,
        #[arg(long)]
        k: u64,
    },
    Gens {
        #[command(flatten)]
        degree: Degree,
        #[arg(long)]
        r: usize,
        #[arg(long)]
        k: u64,
        /// List every generator instead of the D-class summary.
        #[arg(long)]
        materialize: bool,
    },
}

enum Failure {
    Domain(Error),
    Usage(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse(msg) => Failure::Usage(msg),
            other => Failure::Domain(other),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

type CmdResult = Result<(), Failure>;

fn element(degree: &Degree, text: &str) -> Result<TwistedElement, Failure> {
    let x = parse_twisted(text)?;
    if x.degree() != degree.n {
        return Err(Failure::Usage(format!(
            "`{text}` has degree {}, expected {}",
            x.degree(),
            degree.n
        )));
    }
    Ok(x)
}

fn ideal_arg(degree: &Degree, text: &str) -> Result<IdealSpec, Failure> {
    let spec = if text.trim_start().starts_with('{') {
        IdealSpec::from_json(text)?
    } else {
        IdealSpec::parse(degree.n, text)?
    };
    if spec.degree() != degree.n {
        return Err(Failure::Usage(format!(
            "ideal has degree {}, expected {}",
            spec.degree(),
            degree.n
        )));
    }
    Ok(spec)
}

struct Printer {
    format: Format,
    out: BufWriter<io::Stdout>,
}

impl Printer {
    fn line(&mut self, text: impl AsRef<str>) -> io::Result<()> {
        writeln!(self.out, "{}", text.as_ref())
    }

    fn diagram(&mut self, d: &BrauerDiagram) -> io::Result<()> {
        match self.format {
            Format::Jsonl => self.line(d.to_json()),
            _ => self.line(d.to_string()),
        }
    }

    fn twisted(&mut self, x: &TwistedElement) -> io::Result<()> {
        match self.format {
            Format::Jsonl => self.line(x.to_json()),
            _ => self.line(x.to_string()),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut printer = Printer {
        format: cli.format,
        out: BufWriter::new(io::stdout()),
    };
    let result = dispatch(cli.command, &mut printer);
    let flushed = printer.out.flush();
    match result.and(flushed.map_err(Failure::from)) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Domain(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("usage error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn dispatch(command: Command, p: &mut Printer) -> CmdResult {
    match command {
        Command::Mul {
            degree,
            left,
            right,
        } => {
            let (x, y) = (element(&degree, &left)?, element(&degree, &right)?);
            let product = x.diagram.multiply(&y.diagram)?;
            let z = x.star(&y)?;
            match p.format {
                Format::Jsonl => p.line(
                    serde_json::json!({ "product": z, "tau": product.floating }).to_string(),
                )?,
                _ => {
                    if x.twist > 0 || y.twist > 0 {
                        p.twisted(&z)?;
                    } else {
                        p.diagram(&z.diagram)?;
                    }
                    p.line(format!("tau={}", product.floating))?;
                }
            }
        }
        Command::Star {
            degree,
            element: text,
        } => {
            let x = element(&degree, &text)?;
            p.twisted(&x.involution())?;
        }
        Command::Green { command } => green_cmd(command, p)?,
        Command::Ideal { command } => ideal_cmd(command, p)?,
        Command::Enumerate {
            degree,
            rank,
            idempotents: kind,
            force,
        } => {
            if degree.n > 10 && !force {
                return Err(Failure::Usage(format!(
                    "B_{} has {} elements; pass --force to enumerate",
                    degree.n,
                    count_diagrams(degree.n)
                )));
            }
            let source: Box<dyn Iterator<Item = BrauerDiagram>> = match kind {
                None => Box::new(all_diagrams(degree.n)),
                Some(IdempotentKind::Plain) => Box::new(idempotents(degree.n, false)),
                Some(IdempotentKind::Twisted) => Box::new(idempotents(degree.n, true)),
            };
            for d in source.filter(|d| rank.is_none_or(|r| d.rank() == r)) {
                p.diagram(&d)?;
            }
        }
        Command::Closure { gens, bound } => {
            let text = fs::read_to_string(&gens)?;
            let generators = text
                .lines()
                .filter(|l| !l.trim().is_empty())
                .map(parse_twisted)
                .collect::<brauer::Result<Vec<_>>>()?;
            let closure = bounded_closure(&generators, bound)?;
            for x in &closure.elements {
                p.twisted(x)?;
            }
            if p.format == Format::Text {
                p.line(format!(
                    "elements={} saturated={}",
                    closure.elements.len(),
                    closure.saturated_within_bound
                ))?;
            }
        }
        Command::GhGraph { degree, r, dot } => {
            let g = structure::build_gh_graph(degree.n, r)?;
            if dot || p.format == Format::Dot {
                write!(p.out, "{}", g.to_dot())?;
            } else {
                let cert = structure::verify_rank_idrank(degree.n, r)?;
                match p.format {
                    Format::Jsonl => p.line(serde_json::to_string(&cert).expect("serializable"))?,
                    _ => {
                        p.line(format!(
                            "vertices={}+{} edges={} degree={}",
                            cert.left,
                            cert.right,
                            cert.edges,
                            cert.regular_degree
                                .map_or("irregular".to_string(), |d| d.to_string())
                        ))?;
                        p.line(format!(
                            "balanced={} connected={} strong_hall={}",
                            cert.balanced, cert.connected, cert.strong_hall
                        ))?;
                        if let Some(rank) = cert.certified_rank {
                            p.line(format!("rank=idrank={rank}"))?;
                        }
                    }
                }
            }
        }
        Command::Factor {
            degree,
            idempotents,
            element: text,
        } => {
            if !idempotents {
                return Err(Failure::Usage(
                    "only --idempotents factorization is available".into(),
                ));
            }
            let x = element(&degree, &text)?;
            if x.twist != 0 {
                return Err(Failure::Domain(Error::Precondition(
                    "twisted idempotents have twist 0".into(),
                )));
            }
            let chain = structure::factor_into_idempotents(&x.diagram)?;
            let replay = star_chain(&chain)?;
            if replay != x {
                return Err(Failure::Domain(Error::Precondition(format!(
                    "factorization replays to {replay}, not the input"
                ))));
            }
            for e in &chain {
                p.diagram(e)?;
            }
            if p.format == Format::Text {
                p.line(format!("factors={} twist={}", chain.len(), replay.twist))?;
            }
        }
        Command::Verify {
            theorem,
            degree,
            r,
            k,
            bound,
            exhaustive,
            samples,
            seed,
            force,
        } => {
            if exhaustive && degree.n > 6 && !force {
                return Err(Failure::Usage(
                    "exhaustive sweeps above n = 6 need --force".into(),
                ));
            }
            let ids: Vec<&str> = if theorem == "all" {
                verify::THEOREMS.to_vec()
            } else {
                vec![theorem.as_str()]
            };
            let mut any_fail = false;
            for id in ids {
                let params = verify::Params {
                    n: degree.n,
                    r,
                    k,
                    bound,
                    exhaustive,
                    samples,
                    seed,
                };
                let report = verify::run(id, params)?;
                any_fail |= report.status == verify::Status::Fail;
                p.line(serde_json::to_string(&report).expect("serializable"))?;
            }
            if any_fail {
                return Err(Failure::Domain(Error::Precondition(
                    "verification failed".into(),
                )));
            }
        }
    }
    Ok(())
}

fn green_cmd(command: GreenCommand, p: &mut Printer) -> CmdResult {
    match command {
        GreenCommand::Leq { degree, rel, x, y } => {
            let rel: PreOrder = rel.parse()?;
            let (x, y) = (element(&degree, &x)?, element(&degree, &y)?);
            p.line(green::twisted_leq(rel, &x, &y)?.to_string())?;
        }
        GreenCommand::Class { degree, rel, x } => {
            let rel: Relation = rel.parse()?;
            let x = element(&degree, &x)?;
            let class = green::green_class(rel, &x);
            let size = class.size()?;
            match p.format {
                Format::Jsonl => p.line(
                    serde_json::json!({
                        "relation": rel.to_string(),
                        "twist": class.twist,
                        "rank": class.rank,
                        "kernel": class.kernel.as_ref().map(|k| k.to_string()),
                        "cokernel": class.cokernel.as_ref().map(|k| k.to_string()),
                        "size": size as u64,
                        "regular": green::is_regular(&x),
                    })
                    .to_string(),
                )?,
                _ => {
                    p.line(format!("{class} size={size}"))?;
                    p.line(format!("regular={}", green::is_regular(&x)))?;
                }
            }
        }
        GreenCommand::Factor {
            degree,
            side,
            alpha,
            beta,
        } => {
            let (a, b) = (
                element(&degree, &alpha)?.diagram,
                element(&degree, &beta)?.diagram,
            );
            match side {
                Side::Right => p.diagram(&green::factor_right(&a, &b)?)?,
                Side::Left => p.diagram(&green::factor_left(&a, &b)?)?,
                Side::TwoSided => {
                    let (g, d) = green::factor_two_sided(&a, &b)?;
                    p.diagram(&g)?;
                    p.diagram(&d)?;
                }
            }
        }
    }
    Ok(())
}

fn ideal_cmd(command: IdealCommand, p: &mut Printer) -> CmdResult {
    match command {
        IdealCommand::Contains { degree, ideal, x } => {
            let spec = ideal_arg(&degree, &ideal)?;
            let x = element(&degree, &x)?;
            p.line(spec.contains(&x).to_string())?;
        }
        IdealCommand::Normalize { degree, ideal } => {
            let spec = ideal_arg(&degree, &ideal)?;
            match p.format {
                Format::Jsonl => p.line(spec.to_json())?,
                _ => p.line(spec.to_string())?,
            }
        }
        IdealCommand::Rank { degree, r, k } => {
            let rank = ideals::rank_of_ideal(degree.n, r, k)?;
            match p.format {
                Format::Jsonl => p.line(serde_json::to_string(&rank).expect("serializable"))?,
                _ => {
                    let idrank = rank.idrank.map_or("-".to_string(), |x| x.to_string());
                    p.line(format!(
                        "rank={} idempotent_generated={} idrank={idrank}",
                        rank.rank, rank.idempotent_generated
                    ))?;
                }
            }
        }
        IdealCommand::Gens {
            degree,
            r,
            k,
            materialize,
        } => {
            let set = ideals::generating_set(&IdealSpec::principal(degree.n, r, k)?)?;
            match (&set, materialize) {
                (GeneratingSet::DClasses { classes, .. }, false) => {
                    for c in classes {
                        p.line(format!("D(rank={};twist={})", c.rank, c.twist))?;
                    }
                }
                _ => {
                    for x in set.materialize() {
                        p.twisted(&x)?;
                    }
                }
            }
            if p.format == Format::Text {
                p.line(format!("size={}", set.size()?))?;
            }
        }
    }
    Ok(())
}
