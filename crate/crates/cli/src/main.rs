use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use tabij_core::ew::{cornersupport_mask_fast, enumerate_ew, enumerate_mew, eta, sort_to_staircase, validate_marked};
use tabij_core::format::{parse_json, parse_text_stream, to_json, to_text, Document};
use tabij_core::guard::DEFAULT_MAX_CELLS;
use tabij_core::poly::{
    bounce, decompose, enumerate_lpara, enumerate_lrib, enumerate_para, enumerate_rib, expand, validate_para,
};
use tabij_core::render::{render, RenderFormat};
use tabij_core::verify::{golden_checks, run_suite};
use tabij_core::{
    big_phi_direct, big_phi_inverse, big_phi_zeta, phi, psi, validate_ew, validate_lpara, validate_lrib, Labelling,
    SizeGuard,
};

#[derive(Parser, Debug)]
#[command(name = "tabij", version, about = "EW-tableaux, parallelogram polyominoes and the bijections between them")]
struct Cli {
    /// Enumeration budget; EW families allow (m-1)*n <= N, polyomino families m+n <= N/2
    #[arg(long, global = true, env = "TABIJ_MAX_CELLS", default_value_t = DEFAULT_MAX_CELLS)]
    max_cells: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List every member of a family
    Enumerate {
        #[arg(long, value_enum)]
        family: Family,
        #[arg(short)]
        m: usize,
        #[arg(short)]
        n: usize,
        /// Print only the number of objects
        #[arg(long)]
        count_only: bool,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Apply a map to each object of the input
    Map {
        #[arg(long, value_enum)]
        op: Op,
        /// Input file, `-` for stdin
        #[arg(long = "in", default_value = "-")]
        input: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Print the cornersupport mask and eta vector of an EW-tableau
    Annotate {
        #[arg(long = "in", default_value = "-")]
        input: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check every invariant exhaustively for one box size
    Verify {
        #[arg(short)]
        m: usize,
        #[arg(short)]
        n: usize,
    },
    /// Draw the input grids
    Render {
        #[arg(long = "in", default_value = "-")]
        input: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Ascii)]
        format: Format,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Family {
    Ew,
    Mew,
    Para,
    Rib,
    Lpara,
    Lrib,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Op {
    Phi,
    Psi,
    BigPhi,
    BigPhiDirect,
    BigPhiInv,
    Bounce,
    Decompose,
    Expand,
    Sort,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Ascii,
    Svg,
}

enum Failure {
    Domain(String),
    Io(String),
}

impl From<tabij_core::Error> for Failure {
    fn from(e: tabij_core::Error) -> Self {
        Failure::Domain(e.to_string())
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e.to_string())
    }
}

type CmdResult = Result<(), Failure>;

fn read_input(path: &PathBuf) -> Result<String, Failure> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s)?;
        Ok(s)
    } else {
        fs::read_to_string(path).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))
    }
}

fn write_output(path: &Option<PathBuf>, text: &str) -> CmdResult {
    match path {
        Some(p) => fs::write(p, text).map_err(|e| Failure::Io(format!("{}: {e}", p.display()))),
        None => {
            let mut out = io::stdout().lock();
            out.write_all(text.as_bytes())?;
            out.flush()?;
            Ok(())
        }
    }
}

/// Text input is a blank-line separated stream; JSON input has one object
/// per line.
fn parse_documents(text: &str) -> Result<Vec<Document>, Failure> {
    if text.trim_start().starts_with('{') {
        Ok(text.lines().filter(|l| !l.trim().is_empty()).map(parse_json).collect::<Result<_, _>>()?)
    } else {
        Ok(parse_text_stream(text)?)
    }
}

fn show(doc: &Document, format: Format) -> String {
    match format {
        Format::Text => to_text(doc),
        Format::Json => to_json(doc) + "\n",
        Format::Ascii => render(&doc.grid, doc.labels.as_ref(), RenderFormat::Ascii),
        Format::Svg => render(&doc.grid, doc.labels.as_ref(), RenderFormat::Svg),
    }
}

/// Documents separated the way [`parse_documents`] reads them back.
fn show_all(docs: &[Document], format: Format) -> String {
    let sep = if format == Format::Json { "" } else { "\n" };
    docs.iter().map(|d| show(d, format)).collect::<Vec<_>>().join(sep)
}

fn labels_or_canonical(doc: &Document) -> Labelling {
    doc.labels.clone().unwrap_or_else(|| Labelling::canonical(doc.grid.m(), doc.grid.n()))
}

fn canonical_only(doc: &Document) -> CmdResult {
    match &doc.labels {
        Some(l) if !l.is_canonical() => {
            Err(Failure::Domain("an EW-tableau carries the canonical labels; drop the rows/cols lines".into()))
        }
        _ => Ok(()),
    }
}

fn apply(op: Op, doc: &Document) -> Result<Document, Failure> {
    let out = match op {
        Op::Phi => {
            canonical_only(doc)?;
            let d = phi(&validate_ew(doc.grid.clone())?);
            Document::new(d.grid().clone()).with_labels(d.labels().clone())
        }
        Op::Psi => {
            let d = validate_lrib(doc.grid.clone(), labels_or_canonical(doc))?;
            Document::new(psi(&d).into_grid())
        }
        Op::BigPhi | Op::BigPhiDirect => {
            canonical_only(doc)?;
            let a = doc.decoration.clone().ok_or_else(|| Failure::Domain("input needs a decoration line".into()))?;
            let mt = validate_marked(validate_ew(doc.grid.clone())?, a)?;
            let d = if op == Op::BigPhi { big_phi_zeta(&mt)? } else { big_phi_direct(&mt)? };
            Document::new(d.grid().clone()).with_labels(d.labels().clone())
        }
        Op::BigPhiInv => {
            let mt = big_phi_inverse(&validate_lpara(doc.grid.clone(), labels_or_canonical(doc))?)?;
            Document::new(mt.tableau().grid().clone()).with_decoration(mt.decoration().clone())
        }
        Op::Bounce => Document::new(bounce(&validate_para(doc.grid.clone())?).grid().clone()),
        Op::Decompose => {
            let (r, z) = decompose(&validate_lpara(doc.grid.clone(), labels_or_canonical(doc))?);
            Document::new(r.grid().clone()).with_labels(r.labels().clone()).with_surplus(z)
        }
        Op::Expand => {
            let z = doc.surplus.clone().ok_or_else(|| Failure::Domain("input needs a surplus line".into()))?;
            let d = expand(&validate_lrib(doc.grid.clone(), labels_or_canonical(doc))?, &z)?;
            Document::new(d.grid().clone()).with_labels(d.labels().clone())
        }
        Op::Sort => {
            canonical_only(doc)?;
            let s = sort_to_staircase(&validate_ew(doc.grid.clone())?);
            Document::new(s.grid).with_labels(s.labels)
        }
    };
    Ok(out)
}

fn enumerate(family: Family, m: usize, n: usize, guard: &SizeGuard) -> Result<Vec<Document>, Failure> {
    let docs = match family {
        Family::Ew => enumerate_ew(m, n, guard)?.map(|t| Document::new(t.into_grid())).collect(),
        Family::Mew => enumerate_mew(m, n, guard)?
            .map(|mt| Document::new(mt.tableau().grid().clone()).with_decoration(mt.decoration().clone()))
            .collect(),
        Family::Para => enumerate_para(m, n, guard)?.into_iter().map(|p| Document::new(p.grid().clone())).collect(),
        Family::Rib => enumerate_rib(m, n, guard)?.into_iter().map(|r| Document::new(r.grid().clone())).collect(),
        Family::Lpara => enumerate_lpara(m, n, guard)?
            .into_iter()
            .map(|d| Document::new(d.grid().clone()).with_labels(d.labels().clone()))
            .collect(),
        Family::Lrib => enumerate_lrib(m, n, guard)?
            .into_iter()
            .map(|d| Document::new(d.grid().clone()).with_labels(d.labels().clone()))
            .collect(),
    };
    Ok(docs)
}

fn annotate(doc: &Document) -> Result<String, Failure> {
    canonical_only(doc)?;
    let t = validate_ew(doc.grid.clone())?;
    let mut out = cornersupport_mask_fast(&t).to_text();
    out.push_str(&format!("eta: {}\n", eta(&t)));
    Ok(out)
}

fn verify(m: usize, n: usize, guard: &SizeGuard) -> CmdResult {
    let report = run_suite(m, n, guard)?;
    let goldens = golden_checks();
    let mut text = String::from("built-in examples\n");
    for c in &goldens {
        let status = if c.passed { "PASS" } else { "FAIL" };
        text.push_str(&format!("{status}  {}  {}\n", c.name, c.detail));
    }
    text.push_str(&report.to_table());
    write_output(&None, &text)?;

    if let Some(c) = goldens.iter().find(|c| !c.passed) {
        return Err(Failure::Domain(format!("{}: {}", c.name, c.detail)));
    }
    if let Some(c) = report.first_failure() {
        let mut msg = format!("{}: {}", c.name, c.detail);
        if let Some(x) = &c.counterexample {
            msg.push_str(&format!("\n{x}"));
        }
        return Err(Failure::Domain(msg));
    }
    Ok(())
}

fn run(cli: Cli) -> CmdResult {
    let guard = SizeGuard::new(cli.max_cells);
    match cli.command {
        Command::Enumerate { family, m, n, count_only, format, out } => {
            let docs = enumerate(family, m, n, &guard)?;
            if count_only {
                write_output(&out, &format!("{}\n", docs.len()))
            } else {
                write_output(&out, &show_all(&docs, format))
            }
        }
        Command::Map { op, input, out, format } => {
            let docs = parse_documents(&read_input(&input)?)?;
            let mapped = docs.iter().map(|d| apply(op, d)).collect::<Result<Vec<_>, _>>()?;
            write_output(&out, &show_all(&mapped, format))
        }
        Command::Annotate { input, out } => {
            let docs = parse_documents(&read_input(&input)?)?;
            let text = docs.iter().map(annotate).collect::<Result<Vec<_>, _>>()?;
            write_output(&out, &text.join("\n"))
        }
        Command::Verify { m, n } => verify(m, n, &guard),
        Command::Render { input, out, format } => {
            let docs = parse_documents(&read_input(&input)?)?;
            write_output(&out, &show_all(&docs, format))
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Domain(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Io(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
