use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use parity_complex::axioms::{Axiom, AxiomReport};
use parity_complex::cells::{self, enumerate_cells, Cell, RankMode};
use parity_complex::excision::{
    self, CompositionTree, ExcisionError, ExcisionOptions, Step1Rule, TightnessMode,
};
use parity_complex::generators::{generate, Family};
use parity_complex::io::{parse_complex, parse_document, render_reports, serialize_complex};
use parity_complex::Complex;

mod diagram;

const USAGE: u8 = 1;
const PARSE: u8 = 2;
const VALIDATION: u8 = 3;
const ALARM: u8 = 4;

#[derive(Debug)]
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn new(code: u8, message: impl ToString) -> Failure {
        Failure {
            code,
            message: message.to_string(),
        }
    }
}

type Outcome = Result<u8, Failure>;

#[derive(Parser)]
#[command(
    name = "parity",
    version,
    about = "Check, enumerate and decompose parity complexes"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(clap::Args)]
struct CellArgs {
    /// The cell as two comma-separated id lists, M then P.
    #[arg(long, num_args = 2, value_names = ["M-IDS", "P-IDS"], required = true)]
    cell: Vec<String>,
}

#[derive(clap::Args)]
struct ExcisionArgs {
    /// Skip the tightness check on the elements of the cell.
    #[arg(long)]
    assume_tight: bool,
    /// Split at the largest level where M and P meet.
    #[arg(long)]
    alt_step1: bool,
    /// Rank that must strictly drop at each step.
    #[arg(long, value_enum, default_value_t = Measure::Union)]
    measure: Measure,
}

#[derive(Clone, Copy, ValueEnum)]
enum Measure {
    Union,
    Intersection,
}

#[derive(Clone, Copy, ValueEnum)]
enum DiagramFormat {
    Dot,
}

#[derive(Subcommand)]
enum Command {
    /// Emit a generator complex document.
    Gen {
        family: Family,
        n: usize,
        #[arg(short, long, default_value = "-")]
        output: PathBuf,
    },
    /// Run axiom checkers; exit 0 iff all pass.
    Check {
        file: PathBuf,
        /// Comma-separated subset of pre,1,2,3a,3b,r1,r2,as.
        #[arg(long, value_delimiter = ',')]
        axioms: Option<Vec<Axiom>>,
        /// Print the reports as JSON.
        #[arg(long)]
        json: bool,
    },
    /// List elements with their atoms.
    Atoms {
        file: PathBuf,
        #[arg(long)]
        element: Option<String>,
        /// Fail if any listed element is not relevant.
        #[arg(long)]
        require_all: bool,
    },
    /// Enumerate every cell by brute force.
    Cells {
        file: PathBuf,
        #[arg(long, default_value_t = cells::DEFAULT_ENUMERATION_LIMIT)]
        max_universe: usize,
    },
    /// Perform one excision step.
    Excise {
        file: PathBuf,
        #[command(flatten)]
        cell: CellArgs,
        #[command(flatten)]
        excision: ExcisionArgs,
    },
    /// Factor a cell into a composition tree of atoms.
    Decompose {
        file: PathBuf,
        #[command(flatten)]
        cell: CellArgs,
        #[command(flatten)]
        excision: ExcisionArgs,
        /// Recompose the tree and compare with the input.
        #[arg(long)]
        verify: bool,
    },
    /// Evaluate a tree and compare it with a cell.
    Verify {
        file: PathBuf,
        #[arg(long)]
        tree: PathBuf,
        #[command(flatten)]
        cell: CellArgs,
    },
    /// Draw the 1-skeleton.
    Diagram {
        file: PathBuf,
        #[arg(long, num_args = 2, value_names = ["M-IDS", "P-IDS"])]
        cell: Option<Vec<String>>,
        #[arg(long, value_enum)]
        format: DiagramFormat,
    },
}

fn read_input(path: &PathBuf) -> Result<String, Failure> {
    let mut text = String::new();
    let result = if path.as_os_str() == "-" {
        io::stdin().read_to_string(&mut text).map(|_| ())
    } else {
        fs::read_to_string(path).map(|t| text = t)
    };
    result.map_err(|e| Failure::new(PARSE, format!("{}: {e}", path.display())))?;
    Ok(text)
}

fn write_output(path: &PathBuf, text: &str) -> Result<(), Failure> {
    let result = if path.as_os_str() == "-" {
        io::stdout().write_all(text.as_bytes())
    } else {
        fs::write(path, text)
    };
    result.map_err(|e| Failure::new(USAGE, format!("{}: {e}", path.display())))
}

fn load(path: &PathBuf) -> Result<Complex, Failure> {
    let text = read_input(path)?;
    parse_complex(&text)
        .map_err(|e| Failure::new(code_of_io(&e), format!("{}: {e}", path.display())))
}

fn code_of_io(e: &parity_complex::io::IoError) -> u8 {
    match e {
        parity_complex::io::IoError::Validation(_) => VALIDATION,
        _ => PARSE,
    }
}

fn split_ids(list: &str) -> Vec<&str> {
    list.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .collect()
}

fn parse_cell(c: &Complex, ids: &[String]) -> Result<Cell, Failure> {
    let (m, p) = (split_ids(&ids[0]), split_ids(&ids[1]));
    Cell::from_names(c, &m, &p).map_err(|e| Failure::new(VALIDATION, format!("invalid cell: {e}")))
}

fn options(args: &ExcisionArgs) -> ExcisionOptions {
    ExcisionOptions {
        tightness: if args.assume_tight {
            TightnessMode::Assume
        } else {
            TightnessMode::Check
        },
        step1: if args.alt_step1 {
            Step1Rule::NonEmptyIntersection
        } else {
            Step1Rule::Atomicity
        },
        measure: match args.measure {
            Measure::Union => RankMode::Union,
            Measure::Intersection => RankMode::Intersection,
        },
    }
}

fn excision_failure(e: ExcisionError) -> Failure {
    match e {
        ExcisionError::Alarm(_) => Failure::new(ALARM, e),
        _ => Failure::new(VALIDATION, e),
    }
}

fn check(file: &PathBuf, selected: Option<Vec<Axiom>>, json: bool) -> Outcome {
    let text = read_input(file)?;
    let c = parse_document(&text)
        .map_err(|e| Failure::new(PARSE, format!("{}: {e}", file.display())))?;
    let mut selected = selected.unwrap_or_else(|| Axiom::ALL.to_vec());
    selected.sort();
    selected.dedup();
    let reports: Vec<AxiomReport> = selected.iter().map(|a| a.check(&c)).collect();
    let mut out = String::new();
    if json {
        out = render_reports(&reports);
    } else {
        for r in &reports {
            out.push_str(&format!("{r}\n"));
            for w in r.witnesses() {
                out.push_str(&format!(
                    "  {}\n",
                    serde_json::to_string(w).expect("witnesses serialize")
                ));
            }
        }
    }
    print!("{out}");
    Ok(if reports.iter().all(AxiomReport::passed) {
        0
    } else {
        VALIDATION
    })
}

fn atoms(file: &PathBuf, element: Option<String>, require_all: bool) -> Outcome {
    let c = load(file)?;
    let ids: Vec<_> = match element {
        Some(name) => vec![c
            .id(&name)
            .ok_or_else(|| Failure::new(VALIDATION, format!("unknown element `{name}`")))?],
        None => c.ids().collect(),
    };
    let mut irrelevant = 0;
    for x in ids {
        match cells::atom(&c, x) {
            Ok(a) => println!("{}: {}", c.name(x), a.display(&c)),
            Err(e) => {
                irrelevant += 1;
                println!("{}: not relevant ({e})", c.name(x));
            }
        }
    }
    Ok(if require_all && irrelevant > 0 {
        VALIDATION
    } else {
        0
    })
}

fn enumerate(file: &PathBuf, limit: usize) -> Outcome {
    let c = load(file)?;
    let all = enumerate_cells(&c, limit)
        .map_err(|e| Failure::new(USAGE, format!("{e}; raise --max-universe")))?;
    println!("{} cells", all.len());
    for cell in &all {
        println!("{}", cell.display(&c));
    }
    Ok(0)
}

fn excise(file: &PathBuf, cell: &CellArgs, args: &ExcisionArgs) -> Outcome {
    let c = load(file)?;
    let input = parse_cell(&c, &cell.cell)?;
    match excision::excise(&c, &input, &options(args)).map_err(excision_failure)? {
        None => println!(
            "atom {}",
            c.name(cells::atomic_element(&c, &input).expect("atomic"))
        ),
        Some(step) => {
            println!("level {}", step.level);
            println!("{}-case pivot {}", step.case, c.name(step.pivot));
            println!("order {}", step.order);
            println!("early {}", step.early.display(&c));
            println!("late {}", step.late.display(&c));
        }
    }
    Ok(0)
}

fn decompose(file: &PathBuf, cell: &CellArgs, args: &ExcisionArgs, verify: bool) -> Outcome {
    let c = load(file)?;
    let input = parse_cell(&c, &cell.cell)?;
    let tree = excision::decompose(&c, &input, &options(args)).map_err(excision_failure)?;
    println!("{}", tree.display(&c));
    if verify {
        let back = excision::evaluate(&c, &tree).map_err(|e| Failure::new(ALARM, e))?;
        if back != input {
            return Err(Failure::new(
                ALARM,
                format!("tree evaluates to {}", back.display(&c)),
            ));
        }
        eprintln!("verified");
    }
    Ok(0)
}

fn verify(file: &PathBuf, tree: &PathBuf, cell: &CellArgs) -> Outcome {
    let c = load(file)?;
    let input = parse_cell(&c, &cell.cell)?;
    let text = read_input(tree)?;
    let tree = CompositionTree::parse(&c, text.trim())
        .map_err(|e| Failure::new(PARSE, format!("{}: {e}", "tree")))?;
    let back = excision::evaluate(&c, &tree).map_err(|e| Failure::new(VALIDATION, e))?;
    if back != input {
        return Err(Failure::new(
            VALIDATION,
            format!(
                "tree evaluates to {}, not {}",
                back.display(&c),
                input.display(&c)
            ),
        ));
    }
    println!("ok");
    Ok(0)
}

fn run(cli: Cli) -> Outcome {
    match cli.command {
        Command::Gen { family, n, output } => {
            let c = generate(family, n).map_err(|e| Failure::new(USAGE, e))?;
            write_output(&output, &serialize_complex(&c))?;
            Ok(0)
        }
        Command::Check { file, axioms, json } => check(&file, axioms, json),
        Command::Atoms {
            file,
            element,
            require_all,
        } => atoms(&file, element, require_all),
        Command::Cells { file, max_universe } => enumerate(&file, max_universe),
        Command::Excise {
            file,
            cell,
            excision,
        } => excise(&file, &cell, &excision),
        Command::Decompose {
            file,
            cell,
            excision,
            verify,
        } => decompose(&file, &cell, &excision, verify),
        Command::Verify { file, tree, cell } => verify(&file, &tree, &cell),
        Command::Diagram { file, cell, format } => {
            let c = load(&file)?;
            let highlight = cell.map(|ids| parse_cell(&c, &ids)).transpose()?;
            match format {
                DiagramFormat::Dot => print!("{}", diagram::dot(&c, highlight.as_ref())),
            }
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { USAGE } else { 0 });
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
