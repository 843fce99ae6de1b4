use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use latflag::catalog;
use latflag::complex::CoefficientSpec;
use latflag::corpus::{enumerate_graded_lattices, CorpusSpec};
use latflag::flag::{alpha, beta, flag_f, flag_h, RankSubset};
use latflag::format;
use latflag::topology::{is_cohen_macaulay, mobius, proper_part_homology, top_betti};
use latflag::verifier::{run_suite, Check};
use latflag::Poset;

#[derive(Parser)]
#[command(
    name = "latflag",
    version,
    about = "Flag vectors, order-complex homology and lower-bound checks for graded lattices"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the flag f- and h-vectors as CSV with Boolean reference columns.
    Flag {
        /// Poset file or catalog name such as @B4, @Pi4, @chain3.
        input: String,
    },
    /// Print the reduced homology of the proper part.
    Homology {
        input: String,
        #[arg(long, default_value = "q")]
        coeff: CoefficientSpec,
    },
    /// Run named checks on poset files or an enumerated corpus.
    Verify {
        inputs: Vec<String>,
        /// Corpus spec, e.g. rank=3,max-level=4.
        #[arg(long)]
        corpus: Option<String>,
        /// Check name or `all`; repeatable.
        #[arg(long = "check", default_value = "all")]
        checks: Vec<String>,
        /// Shorthand for `--check all`.
        #[arg(long)]
        all: bool,
        #[arg(long, default_value = "q")]
        coeff: CoefficientSpec,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        budget: Option<u64>,
        /// Directory for counterexample files.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Print `-` in the millis column so output is reproducible.
        #[arg(long)]
        no_timing: bool,
    },
    /// Enumerate graded lattices into a directory of poset files.
    Enumerate {
        spec: String,
        #[arg(long)]
        out: PathBuf,
        #[arg(long)]
        budget: Option<u64>,
        #[arg(long)]
        coeff: Option<CoefficientSpec>,
    },
}

fn load(input: &str) -> latflag::Result<Poset> {
    if input.starts_with('@') {
        catalog::by_name(input)
    } else {
        format::read_file(Path::new(input))
    }
}

fn marker(ok: bool) -> &'static str {
    if ok {
        "yes"
    } else {
        "no"
    }
}

fn cmd_flag(input: &str) -> latflag::Result<u8> {
    let p = load(input)?;
    let n = p.rank();
    let f = flag_f(&p);
    let h = flag_h(&f)?;
    let mut out = String::from("subset,f,h,alpha,beta,f>=alpha,h>=beta\n");
    for s in RankSubset::all(n) {
        let (a, b) = (alpha(n, s), beta(n, s));
        out.push_str(&format!(
            "{s},{},{},{a},{b},{},{}\n",
            f.get(s),
            h.get(s),
            marker(f.get(s) >= &a),
            marker(h.get(s) >= &b)
        ));
    }
    print!("{out}");
    Ok(0)
}

fn cmd_homology(input: &str, coeff: CoefficientSpec) -> latflag::Result<u8> {
    let p = load(input)?;
    print!("{}", proper_part_homology(&p, coeff));
    Ok(0)
}

#[allow(clippy::too_many_arguments)]
fn cmd_verify(
    inputs: &[String],
    corpus: Option<&str>,
    checks: &[String],
    all: bool,
    coeff: CoefficientSpec,
    seed: u64,
    budget: Option<u64>,
    out: Option<&Path>,
    timing: bool,
) -> latflag::Result<u8> {
    let selected: Vec<Check> = if all || checks.iter().any(|c| c == "all") {
        Check::ALL.to_vec()
    } else {
        checks
            .iter()
            .map(|c| c.parse())
            .collect::<latflag::Result<_>>()?
    };
    let mut subjects = inputs
        .iter()
        .map(|i| load(i))
        .collect::<latflag::Result<Vec<_>>>()?;
    if let Some(spec) = corpus {
        let mut spec = CorpusSpec::parse(spec)?;
        if let Some(b) = budget {
            spec.budget = b;
        }
        subjects.extend(enumerate_graded_lattices(&spec)?.into_result()?);
    }
    let suite = run_suite(&subjects, &selected, coeff, seed);
    print!("{}", suite.to_tsv(timing));
    eprintln!("{}", suite.summary());
    for r in suite.failures() {
        if let Some(text) = &r.counterexample {
            match out {
                Some(dir) => {
                    fs::create_dir_all(dir)?;
                    let path = dir.join(format!("counterexample-{}-{}.poset", r.check, r.subject));
                    fs::write(&path, text)?;
                    eprintln!("counterexample written to {}", path.display());
                }
                None => eprint!("# counterexample for {} on {}\n{text}", r.check, r.subject),
            }
        }
    }
    Ok(suite.exit_code() as u8)
}

fn cmd_enumerate(
    spec: &str,
    out: &Path,
    budget: Option<u64>,
    coeff: Option<CoefficientSpec>,
) -> latflag::Result<u8> {
    let mut spec = CorpusSpec::parse(spec)?;
    if let Some(b) = budget {
        spec.budget = b;
    }
    if let Some(k) = coeff {
        spec.coefficients = k;
    }
    let run = enumerate_graded_lattices(&spec)?;
    fs::create_dir_all(out)?;
    let mut manifest = String::new();
    if !run.complete {
        manifest.push_str(&format!(
            "# partial: budget of {} nodes exhausted; {} posets found\n",
            spec.budget,
            run.posets.len()
        ));
    }
    manifest.push_str("name\telement-count\tlevel-sizes\tis-lattice\ttop-betti\tmobius\tis-CM\n");
    for p in &run.posets {
        format::write_file(&out.join(format!("{}.poset", p.name())), p)?;
        let sizes: Vec<String> = p.level_sizes().iter().map(ToString::to_string).collect();
        manifest.push_str(&format!(
            "{}\t{}\t{}\t{}\t{}\t{}\t{}\n",
            p.name(),
            p.element_count(),
            sizes.join(":"),
            p.is_lattice(),
            top_betti(p, spec.coefficients),
            mobius(p, p.bottom(), p.top())?,
            is_cohen_macaulay(p, spec.coefficients)
        ));
    }
    fs::write(out.join("manifest.tsv"), manifest)?;
    if run.complete {
        eprintln!("{} posets written to {}", run.posets.len(), out.display());
        Ok(0)
    } else {
        eprintln!(
            "budget exhausted after {} nodes; partial manifest written",
            run.nodes
        );
        Ok(2)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Flag { input } => cmd_flag(input),
        Command::Homology { input, coeff } => cmd_homology(input, *coeff),
        Command::Verify {
            inputs,
            corpus,
            checks,
            all,
            coeff,
            seed,
            budget,
            out,
            no_timing,
        } => cmd_verify(
            inputs,
            corpus.as_deref(),
            checks,
            *all,
            *coeff,
            *seed,
            *budget,
            out.as_deref(),
            !no_timing,
        ),
        Command::Enumerate {
            spec,
            out,
            budget,
            coeff,
        } => cmd_enumerate(spec, out, *budget, *coeff),
    };
    let _ = std::io::stdout().flush();
    match result {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
