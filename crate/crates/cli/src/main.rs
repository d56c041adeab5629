use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use hextile::bfile::{self, BFileEntry};
use hextile::dihedral::{Rational, SubgroupLattice};
use hextile::oracle::{self, CensusOptions, Hexagon, OracleLimits, DEFAULT_MAX_N, MAX_N_ENV};
use hextile::sequence::SequenceRegistry;
use hextile::{svg, verify};
use num_bigint::BigInt;
use num_traits::{One, Zero};

#[derive(Parser)]
#[command(name = "hextile", version, about = "Lozenge tilings of a hexagon, counted up to symmetry")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(clap::Args, Clone, Copy)]
struct OracleArgs {
    /// Largest hexagon side the brute-force enumerator will accept.
    #[arg(long, env = MAX_N_ENV, default_value_t = DEFAULT_MAX_N)]
    max_oracle_n: u32,
    /// Worker threads for enumeration.
    #[arg(long, default_value_t = 1)]
    jobs: usize,
}

impl OracleArgs {
    fn options(self) -> CensusOptions {
        CensusOptions {
            limits: OracleLimits::new(self.max_oracle_n),
            jobs: self.jobs.max(1),
            ..CensusOptions::default()
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Print a sequence as an OEIS b-file.
    Seq {
        first: u32,
        last: u32,
        /// Sequence name; see `hextile list`.
        #[arg(long, default_value = "distinct")]
        class: String,
    },
    /// List the available sequences.
    List,
    /// Print every subgroup with its orbit-count weight.
    Weights,
    /// Check formulas against brute-force enumeration for sides 0..=MAX_N.
    Verify {
        max_n: u32,
        #[command(flatten)]
        oracle: OracleArgs,
    },
    /// Print the brute-force census of one side as JSON.
    Census {
        n: u32,
        #[command(flatten)]
        oracle: OracleArgs,
    },
    /// Recompute every entry of a b-file and report mismatches.
    Compare {
        path: PathBuf,
        #[arg(long, default_value = "distinct")]
        class: String,
        /// Added to each file index to obtain the hexagon side.
        #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
        offset: i64,
    },
    /// Draw one tiling, in enumeration order, as SVG.
    Render {
        n: u32,
        index: u64,
        out: PathBuf,
        #[command(flatten)]
        oracle: OracleArgs,
    },
}

enum Failure {
    Check(String),
    Usage(String),
    Io(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Check(_) => 1,
            Failure::Usage(_) => 2,
            Failure::Io(_) => 3,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Check(m) | Failure::Usage(m) | Failure::Io(m) => m,
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = stdout.lock();
    let result = match cli.command {
        Command::Seq { first, last, class } => cmd_seq(&mut out, first, last, &class),
        Command::List => cmd_list(&mut out),
        Command::Weights => cmd_weights(&mut out),
        Command::Verify { max_n, oracle } => cmd_verify(&mut out, max_n, oracle),
        Command::Census { n, oracle } => cmd_census(&mut out, n, oracle),
        Command::Compare {
            path,
            class,
            offset,
        } => cmd_compare(&mut out, &path, &class, offset),
        Command::Render {
            n,
            index,
            out: path,
            oracle,
        } => cmd_render(n, index, &path, oracle),
    };
    let _ = out.flush();
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("hextile: {}", f.message());
            ExitCode::from(f.code())
        }
    }
}

fn io_err(e: io::Error) -> Failure {
    Failure::Io(e.to_string())
}

fn cmd_seq(out: &mut impl Write, first: u32, last: u32, class: &str) -> Result<(), Failure> {
    if first > last {
        return Err(Failure::Usage(format!("empty range {first}..={last}")));
    }
    let registry = SequenceRegistry::standard();
    let seq = registry
        .get(class)
        .map_err(|e| Failure::Usage(e.to_string()))?;
    for n in first..=last {
        writeln!(out, "{} {}", n, seq.term(n)).map_err(io_err)?;
    }
    Ok(())
}

fn cmd_list(out: &mut impl Write) -> Result<(), Failure> {
    let registry = SequenceRegistry::standard();
    for name in registry.names() {
        let seq = registry.get(name).expect("listed name");
        writeln!(out, "{:<18} {}", name, seq.description()).map_err(io_err)?;
    }
    Ok(())
}

fn cmd_weights(out: &mut impl Write) -> Result<(), Failure> {
    let lattice = SubgroupLattice::d12();
    writeln!(out, "{:<10} {:>5} {:>5} {:>5} {:>7}", "subgroup", "order", "index", "class", "weight")
        .map_err(io_err)?;
    let mut sum = Rational::zero();
    for id in lattice.ids() {
        let s = lattice.get(id);
        let w = lattice.weight(id);
        sum += w;
        writeln!(
            out,
            "{:<10} {:>5} {:>5} {:>5} {:>7}",
            s.label(),
            s.order(),
            s.index(),
            lattice.class_of(id),
            w
        )
        .map_err(io_err)?;
    }
    if !sum.is_one() {
        return Err(Failure::Check(format!("weights sum to {sum}, not 1")));
    }
    writeln!(out, "sum {sum}").map_err(io_err)?;
    Ok(())
}

fn cmd_verify(out: &mut impl Write, max_n: u32, oracle: OracleArgs) -> Result<(), Failure> {
    let report = verify::verify(max_n, oracle.options()).map_err(|e| Failure::Usage(e.to_string()))?;
    for check in &report.checks {
        writeln!(out, "{check}").map_err(io_err)?;
    }
    match report.first_failure() {
        None => {
            writeln!(out, "all {} checks passed", report.checks.len()).map_err(io_err)?;
            Ok(())
        }
        Some(c) => Err(Failure::Check(format!(
            "first failure: n={} check {:?} expected {} actual {}",
            c.n, c.name, c.expected, c.actual
        ))),
    }
}

fn cmd_census(out: &mut impl Write, n: u32, oracle: OracleArgs) -> Result<(), Failure> {
    let census = oracle::census_with(n, oracle.options()).map_err(|e| Failure::Usage(e.to_string()))?;
    let json = census.to_json(SubgroupLattice::d12());
    serde_json::to_writer_pretty(&mut *out, &json).map_err(|e| Failure::Io(e.to_string()))?;
    writeln!(out).map_err(io_err)?;
    Ok(())
}

fn cmd_compare(out: &mut impl Write, path: &PathBuf, class: &str, offset: i64) -> Result<(), Failure> {
    let registry = SequenceRegistry::standard();
    let seq = registry
        .get(class)
        .map_err(|e| Failure::Usage(e.to_string()))?;
    let text = fs::read_to_string(path).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))?;
    let entries = bfile::parse(&text).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))?;

    let mut mismatches = Vec::new();
    for BFileEntry { index, value } in &entries {
        let n = *index as i64 + offset;
        let Ok(n) = u32::try_from(n) else {
            writeln!(out, "{index} {value} no term at side {n} MISMATCH").map_err(io_err)?;
            mismatches.push(*index);
            continue;
        };
        let expected = BigInt::from(seq.term(n));
        if &expected == value {
            writeln!(out, "{index} {value} ok").map_err(io_err)?;
        } else {
            writeln!(out, "{index} {value} expected {expected} MISMATCH").map_err(io_err)?;
            mismatches.push(*index);
        }
    }
    writeln!(
        out,
        "{} of {} entries match",
        entries.len() - mismatches.len(),
        entries.len()
    )
    .map_err(io_err)?;
    if mismatches.is_empty() {
        Ok(())
    } else {
        let list: Vec<String> = mismatches.iter().map(u64::to_string).collect();
        Err(Failure::Check(format!("mismatch at index {}", list.join(", "))))
    }
}

fn cmd_render(n: u32, index: u64, path: &PathBuf, oracle: OracleArgs) -> Result<(), Failure> {
    let hex = Hexagon::new(n);
    let limits = OracleLimits::new(oracle.max_oracle_n);
    let tiling = oracle::nth_tiling(&hex, limits, index)
        .map_err(|e| Failure::Usage(e.to_string()))?
        .ok_or_else(|| {
            let total = hextile::counting::count_any(n);
            Failure::Usage(format!(
                "tiling index {index} out of range: side {n} has {total} tilings"
            ))
        })?;
    fs::write(path, svg::render(&hex, &tiling))
        .map_err(|e| Failure::Io(format!("{}: {e}", path.display())))
}
