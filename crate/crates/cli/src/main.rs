use clap::{Parser, Subcommand, ValueEnum};
use p1orbits::enum_divisors::{divisors_up_to_pgl2, stream_divisors};
use p1orbits::enum_places::{places_up_to_pgl2, stream_places};
use p1orbits::format::{to_jsonl, to_text, Record};
use p1orbits::oracle::counting_formulas;
use p1orbits::projgeom::HomPoly;
use p1orbits::stream::ResumeState;
use p1orbits::verify::{self, Kind, Report};
use p1orbits::{Ctx, Error};
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

#[derive(Parser)]
#[command(name = "p1orbits", version, about = "PGL2(F_q)-orbit representatives of places and divisors on P^1")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Jsonl,
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Oracle,
    Mass,
    Cosets,
}

#[derive(Clone, Copy, ValueEnum)]
enum KindArg {
    Places,
    Divisors,
}

#[derive(clap::Args)]
struct Budget {
    /// Refuse inputs with q^n above this bound.
    #[arg(long, default_value_t = 1u128 << 40)]
    max_size: u128,
}

impl Budget {
    fn check(&self, q: u64, n: u32) -> Result<(), Error> {
        match (q as u128).checked_pow(n) {
            Some(s) if s <= self.max_size => Ok(()),
            _ => Err(Error::ResourceLimit(format!("{q}^{n} exceeds --max-size {}", self.max_size))),
        }
    }
}

#[derive(clap::Args)]
struct StreamArgs {
    #[arg(long)]
    q: u64,
    #[arg(long)]
    n: u32,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    /// Seed for the randomized factorization; output does not depend on it.
    #[arg(long, default_value_t = 1)]
    seed: u64,
    /// Continue from the state in FILE (if present) and save it back.
    #[arg(long, value_name = "FILE")]
    resume: Option<PathBuf>,
    /// Stop after this many new items.
    #[arg(long)]
    limit: Option<u64>,
    #[command(flatten)]
    budget: Budget,
}

#[derive(Subcommand)]
enum Cmd {
    /// Stream place representatives of degree n.
    Places(StreamArgs),
    /// Stream effective divisor representatives of degree n as monic forms.
    Divisors(StreamArgs),
    /// Check the enumeration against the oracle, mass formulas or coset machinery.
    Verify {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        n: u32,
        #[arg(long, value_enum)]
        mode: Mode,
        #[arg(long, value_enum, default_value = "places")]
        kind: KindArg,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
    /// Print counting formulas and enumerated orbit counts.
    Count {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        n: u32,
        #[command(flatten)]
        budget: Budget,
    },
    /// Time place enumeration for each q and write a CSV.
    Bench {
        #[arg(long)]
        n: u32,
        #[arg(long, value_delimiter = ',', required = true)]
        q_list: Vec<u64>,
        #[arg(long, value_name = "FILE")]
        csv: PathBuf,
        #[command(flatten)]
        budget: Budget,
    },
    /// Run the desk-scale verification grid.
    Selftest,
}

enum Failure {
    Lib(Error),
    Io(io::Error),
    Mismatch,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    match run(cli.cmd) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Mismatch) => ExitCode::from(2),
        Err(Failure::Lib(e @ Error::ResourceLimit(_))) => {
            eprintln!("error: {e}");
            ExitCode::from(3)
        }
        Err(Failure::Lib(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
        Err(Failure::Io(e)) if e.kind() == io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(Failure::Io(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}

fn run(cmd: Cmd) -> Result<(), Failure> {
    match cmd {
        Cmd::Places(a) => stream(Kind::Places, a),
        Cmd::Divisors(a) => stream(Kind::Divisors, a),
        Cmd::Verify { q, n, mode, kind, seed } => {
            let kind = match kind {
                KindArg::Places => Kind::Places,
                KindArg::Divisors => Kind::Divisors,
            };
            let report = match mode {
                Mode::Oracle => verify::oracle_check(kind, q, n, seed)?,
                Mode::Mass => verify::mass_check(kind, q, n, seed)?,
                Mode::Cosets => verify::coset_check(q, 100, q <= 3, seed)?,
            };
            finish(&[report])
        }
        Cmd::Count { q, n, budget } => {
            budget.check(q, n)?;
            let c = counting_formulas(q, n);
            let ctx = Ctx::new(q, n as usize, 1)?;
            let places = places_up_to_pgl2(&ctx, n as usize)?.len();
            let divisors = divisors_up_to_pgl2(&ctx, n as usize)?.len();
            println!("q={q} n={n}");
            println!("places {}", c.places);
            println!("divisors {}", c.divisors);
            println!("group_order {}", c.group_order);
            println!("coset_index {}", c.coset_index);
            println!("place_orbits {places}");
            println!("divisor_orbits {divisors}");
            Ok(())
        }
        Cmd::Bench { n, q_list, csv, budget } => bench(n, &q_list, &csv, &budget),
        Cmd::Selftest => selftest(),
    }
}

fn stream(kind: Kind, a: StreamArgs) -> Result<(), Failure> {
    a.budget.check(a.q, a.n)?;
    let ctx = Ctx::new(a.q, a.n as usize, a.seed)?;
    let mut state = match &a.resume {
        Some(path) if path.exists() => ResumeState::from_bytes(&std::fs::read(path)?)?,
        _ => ResumeState::new(&kind.to_string(), a.q, a.n, a.seed),
    };
    let mut out = BufWriter::new(io::stdout().lock());
    let mut write_err = None;
    let emit = |p: &HomPoly| {
        let line = match a.format {
            Format::Text => to_text(ctx.f(), p),
            Format::Jsonl => to_jsonl(&Record::new(ctx.f(), p)),
        };
        writeln!(out, "{line}").map_err(|e| {
            let msg = e.to_string();
            write_err = Some(e);
            Error::InvalidArgument(msg)
        })
    };
    let n = a.n as usize;
    let r = match kind {
        Kind::Places => stream_places(&ctx, n, &mut state, a.limit, emit),
        Kind::Divisors => stream_divisors(&ctx, n, &mut state, a.limit, emit),
    };
    if let Some(e) = write_err {
        return Err(e.into());
    }
    r?;
    out.flush()?;
    if let Some(path) = &a.resume {
        save_state(path, &state)?;
    }
    Ok(())
}

fn save_state(path: &Path, state: &ResumeState) -> io::Result<()> {
    let tmp = path.with_extension("tmp");
    std::fs::write(&tmp, state.to_bytes())?;
    std::fs::rename(tmp, path)
}

fn bench(n: u32, qs: &[u64], csv: &Path, budget: &Budget) -> Result<(), Failure> {
    let mut w = BufWriter::new(std::fs::File::create(csv)?);
    writeln!(w, "q,n,count,elapsed_ns,peak_state_bytes")?;
    for &q in qs {
        budget.check(q, n)?;
        let start = Instant::now();
        let ctx = Ctx::new(q, n as usize, 1)?;
        let mut state = ResumeState::new("places", q, n, 1);
        let mut peak = state.to_bytes().len();
        loop {
            let done = stream_places(&ctx, n as usize, &mut state, Some(64), |_| Ok(()))?;
            peak = peak.max(state.to_bytes().len());
            if done {
                break;
            }
        }
        let elapsed = start.elapsed().as_nanos();
        writeln!(w, "{q},{n},{},{elapsed},{peak}", state.emitted)?;
        let (quartics, partners) = ctx.base_list_sizes();
        eprintln!("q={q} n={n}: base lists {quartics} quartics, {partners} partners");
    }
    w.flush()?;
    Ok(())
}

fn selftest() -> Result<(), Failure> {
    let mut reports = Vec::new();
    for &(q, n) in verify::PLACE_ORACLE_GRID {
        reports.push(verify::oracle_check(Kind::Places, q, n, 1)?);
    }
    for &q in verify::DIVISOR_ORACLE_QS {
        for &n in verify::DIVISOR_ORACLE_NS {
            reports.push(verify::oracle_check(Kind::Divisors, q, n, 1)?);
        }
    }
    for &q in verify::PLACE_MASS_QS {
        for &n in verify::PLACE_MASS_NS {
            reports.push(verify::mass_check(Kind::Places, q, n, 1)?);
        }
    }
    for &q in verify::DIVISOR_MASS_QS {
        for &n in verify::DIVISOR_MASS_NS {
            reports.push(verify::mass_check(Kind::Divisors, q, n, 1)?);
        }
    }
    for &q in verify::COSET_QS {
        reports.push(verify::coset_check(q, 100, q <= 3, 1)?);
    }
    finish(&reports)
}

fn finish(reports: &[Report]) -> Result<(), Failure> {
    for r in reports {
        println!("{r}");
    }
    if reports.iter().all(Report::passed) {
        Ok(())
    } else {
        Err(Failure::Mismatch)
    }
}
