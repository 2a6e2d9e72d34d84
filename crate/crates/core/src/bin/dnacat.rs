use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};

use dnacat::diagram::format;
use dnacat::dotbracket::{self, DotBracketError};
use dnacat::fold::{self, FoldConfig};
use dnacat::pregroup::{self, Lexicon, PregroupType, ReductionProof};
use dnacat::render::{self, RenderStyle};
use dnacat::{bend, compose, unbend, zip_and_transfer, Diagram, LoopReport, SecondaryStructure, Word};

/// DNA diagrams: composition, bending, folding and grammatical meaning.
#[derive(Parser)]
#[command(name = "dnacat", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the reverse complement of a word.
    Revcomp { word: String },
    /// Check a .ddna or dot-bracket file and list every violation.
    Validate { path: PathBuf },
    /// Stack two diagrams: first F, then G.
    Compose {
        f: PathBuf,
        g: PathBuf,
        /// Append the loop report as `#` comment lines.
        #[arg(long)]
        loop_report: bool,
    },
    /// Turn a diagram x → y into a structure on x∨·y.
    Bend { path: PathBuf },
    /// Reinterpret a structure as a diagram with the given source length.
    Unbend {
        path: PathBuf,
        #[arg(long)]
        source_len: usize,
    },
    /// Compose two bent states through their shared interface.
    Zip {
        fhat: PathBuf,
        ghat: PathBuf,
        /// The interface word y.
        #[arg(long)]
        interface: String,
        #[arg(long)]
        loop_report: bool,
    },
    /// Stream every structure on a word as dot-bracket records.
    Enumerate {
        word: String,
        #[command(flatten)]
        theta: Theta,
    },
    /// Count the structures on a word.
    Count {
        word: String,
        #[command(flatten)]
        theta: Theta,
    },
    /// Print the maximum bond count, then every structure attaining it.
    Fold {
        word: String,
        #[command(flatten)]
        theta: Theta,
    },
    /// Print the reduction proof of a sentence.
    Parse {
        #[command(flatten)]
        sentence: Sentence,
    },
    /// Print the structure a sentence denotes on F(goal).
    Meaning {
        #[command(flatten)]
        sentence: Sentence,
    },
    /// Draw a structure or diagram.
    Render {
        path: PathBuf,
        #[arg(long, value_enum, default_value_t = RenderFormat::Svg)]
        format: RenderFormat,
        #[arg(long, default_value = "red")]
        at_color: String,
        #[arg(long, default_value = "blue")]
        cg_color: String,
        #[arg(long, default_value_t = 24.0)]
        spacing: f64,
        #[arg(long, default_value_t = 14.0)]
        arc_increment: f64,
        #[arg(long)]
        arrows: bool,
        /// Write here instead of standard output.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

#[derive(clap::Args)]
struct Theta {
    /// Minimum number of unpaired positions inside every arc.
    #[arg(long, env = "DNACAT_THETA", default_value_t = 0)]
    theta: usize,
}

#[derive(clap::Args)]
struct Sentence {
    #[arg(long)]
    lexicon: PathBuf,
    #[arg(long, default_value = "s")]
    goal: String,
    /// List every proof instead of the canonical one.
    #[arg(long)]
    all_proofs: bool,
    #[arg(required = true)]
    words: Vec<String>,
}

#[derive(Clone, Copy, ValueEnum)]
enum RenderFormat {
    Svg,
    Text,
}

enum Input {
    Diagram(Diagram),
    Structure(SecondaryStructure),
}

fn read_text(path: &Path) -> Result<String> {
    if path.as_os_str() == "-" {
        let mut text = String::new();
        io::stdin().read_to_string(&mut text)?;
        return Ok(text);
    }
    fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))
}

fn looks_like_dotbracket(path: &Path, text: &str) -> bool {
    match path.extension().and_then(|e| e.to_str()) {
        Some("ddna") => false,
        Some("db" | "dbn") => true,
        _ => {
            let lines: Vec<&str> = text.lines().collect();
            lines.len() == 2 && lines[1].chars().all(|c| matches!(c, '.' | '(' | ')'))
        }
    }
}

/// Reads either format without rejecting invariant violations in diagrams.
fn load(path: &Path) -> Result<Input> {
    let text = read_text(path)?;
    if looks_like_dotbracket(path, &text) {
        let s = dotbracket::parse(&text).with_context(|| format!("in {}", path.display()))?;
        Ok(Input::Structure(s))
    } else {
        let d = format::parse(&text).with_context(|| format!("in {}", path.display()))?;
        Ok(Input::Diagram(d))
    }
}

fn load_diagram(path: &Path) -> Result<Diagram> {
    match load(path)? {
        Input::Diagram(d) => {
            let violations = d.validate();
            if !violations.is_empty() {
                for v in &violations {
                    eprintln!("{}: {v}", path.display());
                }
                bail!("{} is not a valid diagram", path.display());
            }
            Ok(d)
        }
        Input::Structure(s) => Ok(Diagram::from_structure(&s)),
    }
}

fn load_structure(path: &Path) -> Result<SecondaryStructure> {
    match load(path)? {
        Input::Structure(s) => Ok(s),
        Input::Diagram(_) => bail!("{} is a diagram; expected a dot-bracket structure", path.display()),
    }
}

fn parse_word(text: &str) -> Result<Word> {
    Word::parse_boundary(text).with_context(|| format!("invalid word {text:?}"))
}

fn report_comment(report: &LoopReport) -> String {
    report.to_string().lines().map(|l| format!("# {l}\n")).collect()
}

fn proof_line(proof: &ReductionProof) -> String {
    let links: Vec<String> = proof.links.iter().map(|(p, q)| format!("({p},{q})")).collect();
    let survivors: Vec<String> = proof.survivors.iter().map(|s| s.to_string()).collect();
    let list = |v: Vec<String>| if v.is_empty() { "-".to_string() } else { v.join(" ") };
    format!("links {}; survivors {}", list(links), list(survivors))
}

fn load_sentence(s: &Sentence) -> Result<(Lexicon, PregroupType)> {
    let text = read_text(&s.lexicon)?;
    let lex = Lexicon::from_toml_str(&text).with_context(|| format!("in {}", s.lexicon.display()))?;
    let goal: PregroupType = s.goal.parse().with_context(|| format!("invalid goal {:?}", s.goal))?;
    Ok((lex, goal))
}

fn validate(path: &Path) -> Result<bool> {
    let text = read_text(path)?;
    let problems: Vec<String> = if looks_like_dotbracket(path, &text) {
        match dotbracket::parse(&text) {
            Ok(_) => Vec::new(),
            Err(DotBracketError::Invalid(inv)) => inv.0.iter().map(|v| v.to_string()).collect(),
            Err(e) => vec![e.to_string()],
        }
    } else {
        let d = format::parse(&text).with_context(|| format!("in {}", path.display()))?;
        d.validate().iter().map(|v| v.to_string()).collect()
    };
    for p in &problems {
        eprintln!("{}: {p}", path.display());
    }
    Ok(problems.is_empty())
}

fn run(cli: Cli, out: &mut impl Write) -> Result<bool> {
    match cli.command {
        Command::Revcomp { word } => {
            let w: Word = word.parse().with_context(|| format!("invalid word {word:?}"))?;
            writeln!(out, "{}", w.reverse_complement())?;
        }
        Command::Validate { path } => {
            if !validate(&path)? {
                return Ok(false);
            }
            writeln!(out, "ok")?;
        }
        Command::Compose { f, g, loop_report } => {
            let (f, g) = (load_diagram(&f)?, load_diagram(&g)?);
            let (composite, report) = compose(&f, &g)?;
            write!(out, "{}", format::emit(&composite))?;
            if loop_report {
                write!(out, "{}", report_comment(&report))?;
            }
        }
        Command::Bend { path } => {
            let f = load_diagram(&path)?;
            write!(out, "{}", dotbracket::emit(&bend(&f)))?;
        }
        Command::Unbend { path, source_len } => {
            let s = load_structure(&path)?;
            write!(out, "{}", format::emit(&unbend(&s, source_len)?))?;
        }
        Command::Zip {
            fhat,
            ghat,
            interface,
            loop_report,
        } => {
            let (fhat, ghat) = (load_structure(&fhat)?, load_structure(&ghat)?);
            let y = parse_word(&interface)?;
            let (s, report) = zip_and_transfer(&fhat, &ghat, &y)?;
            write!(out, "{}", dotbracket::emit(&s))?;
            if loop_report {
                // Keep the stream parseable: the report goes to stderr here.
                eprintln!("{report}");
            }
        }
        Command::Enumerate { word, theta } => {
            let w = parse_word(&word)?;
            for s in fold::enumerate(&w, &FoldConfig::new(theta.theta)) {
                write!(out, "{}", dotbracket::emit(&s))?;
            }
        }
        Command::Count { word, theta } => {
            let w = parse_word(&word)?;
            writeln!(out, "{}", fold::count(&w, &FoldConfig::new(theta.theta)))?;
        }
        Command::Fold { word, theta } => {
            let w = parse_word(&word)?;
            let (best, witnesses) = fold::max_bond(&w, &FoldConfig::new(theta.theta));
            writeln!(out, "{best}")?;
            for s in &witnesses {
                write!(out, "{}", dotbracket::emit(s))?;
            }
        }
        Command::Parse { sentence } => {
            let (lex, goal) = load_sentence(&sentence)?;
            let words: Vec<&str> = sentence.words.iter().map(String::as_str).collect();
            let types = words
                .iter()
                .map(|w| {
                    lex.entry(w)
                        .map(|e| e.ty.clone())
                        .ok_or_else(|| pregroup::PregroupError::UnknownWord(w.to_string()))
                })
                .collect::<Result<Vec<_>, _>>()?;
            let proofs = if sentence.all_proofs {
                pregroup::reduce_all(&types, &goal)
            } else {
                pregroup::reduce(&types, &goal).into_iter().collect()
            };
            if proofs.is_empty() {
                bail!("{:?} does not reduce to {goal}", sentence.words.join(" "));
            }
            for p in &proofs {
                writeln!(out, "{}", proof_line(p))?;
            }
        }
        Command::Meaning { sentence } => {
            let (lex, goal) = load_sentence(&sentence)?;
            let words: Vec<&str> = sentence.words.iter().map(String::as_str).collect();
            let meanings = if sentence.all_proofs {
                pregroup::meaning_all(&words, &goal, &lex)?
            } else {
                pregroup::meaning(&words, &goal, &lex)?.into_iter().collect()
            };
            if meanings.is_empty() {
                bail!("{:?} does not reduce to {goal}", sentence.words.join(" "));
            }
            for m in &meanings {
                write!(out, "{}", dotbracket::emit(&m.structure))?;
            }
        }
        Command::Render {
            path,
            format: fmt,
            at_color,
            cg_color,
            spacing,
            arc_increment,
            arrows,
            output,
        } => {
            let style = RenderStyle {
                at_color,
                cg_color,
                spacing,
                arc_increment,
                show_direction_arrows: arrows,
            };
            let text = match (load(&path)?, fmt) {
                (Input::Structure(s), RenderFormat::Svg) => render::render_structure_svg(&s, &style),
                (Input::Structure(s), RenderFormat::Text) => render::render_structure_text(&s),
                (Input::Diagram(d), RenderFormat::Svg) => render::render_diagram_svg(&d, &style),
                (Input::Diagram(d), RenderFormat::Text) => render::render_diagram_text(&d),
            };
            match output {
                Some(p) => fs::write(&p, text).with_context(|| format!("cannot write {}", p.display()))?,
                None => write!(out, "{text}")?,
            }
        }
    }
    Ok(true)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = stdout.lock();
    match run(cli, &mut out) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::FAILURE,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}
