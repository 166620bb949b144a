//! Command-line front-end for the posbraid library.

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use posbraid::{
    build_tree, classify3, conjugation_normal_form3, gram_matrix, hecke_decompose,
    homfly_positive_closure, inner_product_def, mfw_report, sharpness_certificate, BraidWord,
    CertStep, Error, RelationKind, ResolutionTree, ThreeStrandFamily,
};

#[derive(Parser)]
#[command(
    name = "posbraid",
    version,
    about = "Exact HOMFLYPT polynomials and braid-index bounds for positive braid closures",
    arg_required_else_help = true
)]
struct Cli {
    /// Strand count; may only raise the inferred max-letter-plus-one
    #[arg(long, global = true)]
    strands: Option<usize>,

    /// Output format (dot applies to `tree` only)
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Dot,
}

#[derive(Subcommand)]
enum Command {
    /// HOMFLYPT polynomial of the closure of a positive word
    Homfly { word: String },
    /// Deterministic first-descent resolution tree of a word
    Tree { word: String },
    /// Degree bounds and the braid-index lower bound
    Mfw { word: String },
    /// Sharpness of the upper bound, with a replayable certificate
    Sharp { word: String },
    /// Inner product of two positive words on a common strand count
    Inner { a: String, b: String },
    /// Gram matrix of all simple braids on n strands
    Gram { n: usize },
    /// Braid-index classification of a positive 3-strand word
    Classify3 { word: String },
    /// Whether a word is simple, and its permutation
    Simple { word: String },
    /// Decomposition of a word over the simple-braid basis
    Basis { word: String },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err((code, message)) => {
            eprintln!("error: {message}");
            ExitCode::from(code)
        }
    }
}

/// Parse failures exit with 2, precondition violations with 3.
fn exit_code(err: &Error) -> u8 {
    match err {
        Error::WordSyntax(_)
        | Error::LetterOutOfRange { .. }
        | Error::StrandsTooSmall { .. }
        | Error::InvalidStrandCount => 2,
        Error::NotThreeStrands(_) | Error::StrandMismatch(..) => 3,
        _ => 1,
    }
}

type CliResult = Result<(), (u8, String)>;

fn fail(err: Error) -> (u8, String) {
    (exit_code(&err), err.to_string())
}

fn parse_word(text: &str, strands: Option<usize>) -> Result<BraidWord, (u8, String)> {
    BraidWord::parse_with_strands(text, strands).map_err(fail)
}

fn run(cli: &Cli) -> CliResult {
    if cli.format == Format::Dot && !matches!(cli.command, Command::Tree { .. }) {
        return Err((2, "dot output is only available for `tree`".into()));
    }
    match &cli.command {
        Command::Homfly { word } => {
            let w = parse_word(word, cli.strands)?;
            let p = homfly_positive_closure(&w);
            match cli.format {
                Format::Json => println!("{}", serde_json::to_string(&p).expect("serializable")),
                _ => println!("{p}"),
            }
            Ok(())
        }
        Command::Tree { word } => {
            let w = parse_word(word, cli.strands)?;
            let tree = build_tree(&w);
            match cli.format {
                Format::Dot => print!("{}", tree.to_dot()),
                Format::Json => {
                    println!("{}", serde_json::to_string(&tree.to_json()).expect("serializable"))
                }
                Format::Text => print!("{}", tree_text(&tree)),
            }
            Ok(())
        }
        Command::Mfw { word } => {
            let w = parse_word(word, cli.strands)?;
            let r = mfw_report(&w);
            match cli.format {
                Format::Json => println!("{}", serde_json::to_string(&r).expect("serializable")),
                _ => println!(
                    "lower={} upper={} dv_min={} dv_max={} mfw={} sharp={}",
                    r.lower, r.upper, r.dv_min, r.dv_max, r.mfw, r.sharp
                ),
            }
            Ok(())
        }
        Command::Sharp { word } => {
            let w = parse_word(word, cli.strands)?;
            let cert = sharpness_certificate(&w);
            match cli.format {
                Format::Json => {
                    let json = match &cert {
                        None => serde_json::json!({ "sharp": false }),
                        Some(c) => serde_json::json!({ "sharp": true, "certificate": c }),
                    };
                    println!("{json}");
                }
                _ => match cert {
                    None => println!("sharp=false"),
                    Some(c) => {
                        println!("sharp=true");
                        for step in &c.steps {
                            println!("{}", step_text(step));
                        }
                    }
                },
            }
            Ok(())
        }
        Command::Inner { a, b } => {
            // The two words share one strand count: the largest of both
            // inferences and the flag.
            let wa = parse_word(a, cli.strands)?;
            let wb = parse_word(b, cli.strands)?;
            let n = wa.strands().max(wb.strands());
            let wa = wa.widened(n).map_err(fail)?;
            let wb = wb.widened(n).map_err(fail)?;
            let p = inner_product_def(&wa, &wb).map_err(fail)?;
            match cli.format {
                Format::Json => println!("{}", serde_json::to_string(&p).expect("serializable")),
                _ => println!("{p}"),
            }
            Ok(())
        }
        Command::Gram { n } => {
            if *n == 0 {
                return Err(fail(Error::InvalidStrandCount));
            }
            let g = gram_matrix(*n);
            match cli.format {
                Format::Json => println!("{}", serde_json::to_string(&g).expect("serializable")),
                _ => println!("n={} size={} identity={}", g.strands(), g.len(), g.is_identity()),
            }
            Ok(())
        }
        Command::Classify3 { word } => {
            let w = parse_word(word, cli.strands)?;
            let c = classify3(&w).map_err(fail)?;
            let normal_form = conjugation_normal_form3(&w).map_err(fail)?;
            match cli.format {
                Format::Json => {
                    let json = serde_json::json!({
                        "index": c.index,
                        "family": c.family,
                        "normal_form": normal_form,
                    });
                    println!("{json}");
                }
                _ => match (c.family, normal_form) {
                    (Some(family), Some(p)) => println!(
                        "index={} family={} normal_form={}",
                        c.index,
                        family_text(&family),
                        normal_form_text(p)
                    ),
                    _ => println!("index={} family=none", c.index),
                },
            }
            Ok(())
        }
        Command::Simple { word } => {
            let w = parse_word(word, cli.strands)?;
            let a = w.permutation();
            match cli.format {
                Format::Json => {
                    let json = serde_json::json!({
                        "simple": w.is_simple(),
                        "permutation": a,
                    });
                    println!("{json}");
                }
                _ => println!("simple={} permutation={}", w.is_simple(), a),
            }
            Ok(())
        }
        Command::Basis { word } => {
            let w = parse_word(word, cli.strands)?;
            let dec = hecke_decompose(&w);
            match cli.format {
                Format::Json => {
                    let entries: Vec<serde_json::Value> = dec
                        .coeffs()
                        .iter()
                        .map(|(a, c)| {
                            serde_json::json!({ "permutation": a, "coefficient": c })
                        })
                        .collect();
                    let json = serde_json::json!({
                        "strands": dec.strands(),
                        "entries": entries,
                    });
                    println!("{json}");
                }
                _ => {
                    for (a, c) in dec.coeffs() {
                        println!("{a}: {c}");
                    }
                }
            }
            Ok(())
        }
    }
}

fn word_text(w: &BraidWord) -> String {
    if w.is_empty() {
        "e".into()
    } else {
        w.to_string()
    }
}

fn tree_text(tree: &ResolutionTree) -> String {
    fn render(node: &ResolutionTree, depth: usize, label: Option<&str>, out: &mut String) {
        out.push_str(&"  ".repeat(depth));
        if let Some(label) = label {
            out.push_str(&format!("[{label}] "));
        }
        out.push_str(&word_text(node.word()));
        out.push('\n');
        if let Some(split) = node.split() {
            render(&split.left, depth + 1, Some("v^2"), out);
            render(&split.right, depth + 1, Some("v*z"), out);
        }
    }
    let mut out = String::new();
    render(tree, 0, None, &mut out);
    out
}

fn step_text(step: &CertStep) -> String {
    match step {
        CertStep::InsertSquare { letter, position } => {
            format!("InsertSquare(letter={letter}, position={position})")
        }
        CertStep::DoubleLetter { position } => format!("DoubleLetter(position={position})"),
        CertStep::BraidRelation { position, kind } => {
            let kind = match kind {
                RelationKind::Commute => "Commute",
                RelationKind::BraidMove => "BraidMove",
            };
            format!("BraidRelation(position={position}, kind={kind})")
        }
    }
}

fn family_text(family: &ThreeStrandFamily) -> String {
    match family {
        ThreeStrandFamily::Family1 { p } => format!("Family1(p={p})"),
        ThreeStrandFamily::Family2 { p, q } => format!("Family2(p={p}, q={q})"),
    }
}

/// Renders `sigma_1^p sigma_2` compactly: `s1^2 s2`, `s1 s2`, or `s2`.
fn normal_form_text(p: usize) -> String {
    match p {
        0 => "s2".into(),
        1 => "s1 s2".into(),
        _ => format!("s1^{p} s2"),
    }
}
