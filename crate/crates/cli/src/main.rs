//! Command-line front end: expansions between bases, products with
//! automatic rule selection, immaculate tableau enumeration, and the
//! exhaustive verification suites.
//!
//! Exit codes: 0 on success, 1 when a verification suite finds a
//! counterexample, 2 on usage or parse errors.

use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};

use immaculata::json::{mn_raw_element, ElementJson};
use immaculata::nsym::{self, NSymBasis};
use immaculata::qsym::{self, QSymBasis};
use immaculata::sym;
use immaculata::tableau;
use immaculata::verify::{run_suite, Suite, SuiteReport};
use immaculata::{Composition, Int, NSymElement, Partition, SymElement};

use immaculata_cli::parse::{parse_operand, parse_target, Operand, Target};
use immaculata_cli::render;
use immaculata_cli::report::Report;

#[derive(Clone, Copy, PartialEq, Eq, Debug, Default, ValueEnum)]
enum Format {
    #[default]
    Text,
    Json,
    Latex,
}

#[derive(Parser)]
#[command(
    name = "immaculata",
    version,
    about = "Exact computer algebra for the immaculate basis of NSym, its dual in QSym, and the projection to Sym"
)]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Expand a basis element in another basis, e.g. `expand S:2,3 --to H`.
    Expand {
        /// Operand of the form `<Basis>:<index>`, e.g. S:2,3 or s:2,2,2,1.
        expr: String,
        /// Target basis: one of H, R, Psi, S, M, F, Sstar, s, h.
        #[arg(long)]
        to: String,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Multiply two elements, selecting the Pieri, Littlewood-Richardson,
    /// power-sum, concatenation, or quasi-shuffle rule from the operands.
    Product {
        left: String,
        right: String,
        /// Output basis (defaults to the basis the selected rule produces).
        #[arg(long)]
        out: Option<String>,
        /// For the power-sum rule: print the raw zero-padded immaculate
        /// indices instead of re-expanding them over compositions.
        #[arg(long)]
        no_normalize: bool,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Enumerate immaculate tableaux of a shape.
    Tableaux {
        /// Shape as comma-separated parts, e.g. 4,2,3.
        #[arg(long)]
        shape: String,
        /// Content as comma-separated counts (zeros allowed).
        #[arg(long, conflicts_with = "standard")]
        content: Option<String>,
        /// Enumerate standard tableaux (content 1^n).
        #[arg(long)]
        standard: bool,
        /// With --standard: print each tableau's descent composition.
        #[arg(long, requires = "standard")]
        descents: bool,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Run a verification suite: pieri, jacobi-trudi, kostka, ribbon,
    /// duality, lr, mn, projection, or all.
    Verify {
        suite: String,
        /// Degree bound (default 6; the IMMACULATA_MAX_N environment
        /// variable overrides the default).
        #[arg(long)]
        max_n: Option<u32>,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, String> {
    let started = Instant::now();
    match cli.command {
        Cmd::Expand { expr, to, format } => {
            let operand = parse_operand(&expr)?;
            let target = parse_target(&to)?;
            let element = expand(&operand, target)?;
            let mut report = Report::new(format!("expand {expr} --to {to}"), vec![expr]);
            report.output = Some(element);
            report.elapsed_ms = started.elapsed().as_millis() as u64;
            emit_element(&report, format);
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Product {
            left,
            right,
            out,
            no_normalize,
            format,
        } => {
            let left_op = parse_operand(&left)?;
            let right_op = parse_operand(&right)?;
            let out_target = out.as_deref().map(parse_target).transpose()?;
            let (rule, element) = product(&left_op, &right_op, out_target, no_normalize)?;
            let mut echo = format!("product {left} {right}");
            if let Some(out) = &out {
                echo.push_str(&format!(" --out {out}"));
            }
            if no_normalize {
                echo.push_str(" --no-normalize");
            }
            let mut report = Report::new(echo, vec![left, right]);
            report.rule = Some(rule.to_string());
            report.output = Some(element);
            report.elapsed_ms = started.elapsed().as_millis() as u64;
            if format != Format::Json {
                eprintln!("rule: {rule}");
            }
            emit_element(&report, format);
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Tableaux {
            shape,
            content,
            standard,
            descents,
            format,
        } => {
            let shape_comp: Composition = shape
                .parse()
                .map_err(|e| format!("invalid shape {shape:?}: {e}"))?;
            if content.is_none() && !standard {
                return Err("pass either --content or --standard".into());
            }
            let (rows, descent_strings, echo_tail) = match (&content, standard) {
                (Some(text), false) => {
                    let counts = parse_content(text)?;
                    let ts = tableau::enumerate_immaculate_tableaux(&shape_comp, &counts)
                        .map_err(|e| e.to_string())?;
                    let rows: Vec<Vec<Vec<u32>>> =
                        ts.iter().map(|t| t.rows().to_vec()).collect();
                    (rows, None, format!(" --content {text}"))
                }
                _ => {
                    let ts = tableau::standard_immaculate_tableaux(&shape_comp);
                    let rows: Vec<Vec<Vec<u32>>> =
                        ts.iter().map(|t| t.rows().to_vec()).collect();
                    let descent_strings = descents.then(|| {
                        ts.iter()
                            .map(|t| t.descent_composition().to_string())
                            .collect::<Vec<_>>()
                    });
                    let mut tail = " --standard".to_string();
                    if descents {
                        tail.push_str(" --descents");
                    }
                    (rows, descent_strings, tail)
                }
            };
            let mut report = Report::new(
                format!("tableaux --shape {shape}{echo_tail}"),
                vec![shape],
            );
            report.count = Some(rows.len());
            report.tableaux = Some(rows);
            report.descents = descent_strings;
            report.elapsed_ms = started.elapsed().as_millis() as u64;
            emit_tableaux(&report, format);
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Verify {
            suite,
            max_n,
            format,
        } => {
            let max_n = resolve_max_n(max_n)?;
            let reports = if suite == "all" {
                immaculata::verify::run_all(max_n)
            } else {
                let s = Suite::from_name(&suite)
                    .ok_or_else(|| format!("unknown suite {suite:?} (expected pieri, jacobi-trudi, kostka, ribbon, duality, lr, mn, projection, or all)"))?;
                vec![run_suite(s, max_n)]
            };
            let passed = reports.iter().all(SuiteReport::passed);
            let instances: usize = reports.iter().map(|r| r.instances).sum();
            let listed: Vec<String> = reports
                .iter()
                .flat_map(|r| r.failures.iter().cloned())
                .take(10)
                .collect();
            if format != Format::Json {
                for r in &reports {
                    println!(
                        "suite={} max-n={} instances={} failures={} {}",
                        r.suite,
                        r.max_n,
                        r.instances,
                        r.failures.len(),
                        if r.passed() { "PASS" } else { "FAIL" }
                    );
                }
                for counterexample in &listed {
                    println!("  counterexample: {counterexample}");
                }
            }
            let mut report = Report::new(
                format!("verify {suite} --max-n {max_n}"),
                vec![suite.clone()],
            );
            report.suite = Some(suite);
            report.max_n = Some(max_n);
            report.instances = Some(instances);
            report.failures = Some(listed);
            report.elapsed_ms = started.elapsed().as_millis() as u64;
            if format == Format::Json {
                println!("{}", serde_json::to_string(&report).expect("serializable"));
            }
            Ok(if passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
    }
}

fn resolve_max_n(flag: Option<u32>) -> Result<u32, String> {
    if let Some(v) = flag {
        return Ok(v);
    }
    match std::env::var("IMMACULATA_MAX_N") {
        Ok(text) => text
            .trim()
            .parse()
            .map_err(|_| format!("invalid IMMACULATA_MAX_N value {text:?}")),
        Err(_) => Ok(6),
    }
}

fn parse_content(text: &str) -> Result<Vec<u32>, String> {
    if text.is_empty() {
        return Ok(Vec::new());
    }
    text.split(',')
        .map(|piece| {
            piece
                .trim()
                .parse::<u32>()
                .map_err(|_| format!("invalid content entry {piece:?}"))
        })
        .collect()
}

fn emit_element(report: &Report, format: Format) {
    match format {
        Format::Text => println!(
            "{}",
            render::element_text(report.output.as_ref().expect("expansion output"))
        ),
        Format::Latex => println!(
            "{}",
            render::element_latex(report.output.as_ref().expect("expansion output"))
        ),
        Format::Json => println!("{}", serde_json::to_string(report).expect("serializable")),
    }
}

fn emit_tableaux(report: &Report, format: Format) {
    let rows = report.tableaux.as_ref().expect("tableau listing");
    match format {
        Format::Text => {
            for (i, t) in rows.iter().enumerate() {
                println!("{}", render::tableau_text(t));
                if let Some(descents) = &report.descents {
                    println!("descent composition: {}", descents[i]);
                }
                println!();
            }
            println!("count: {}", report.count.expect("count"));
        }
        Format::Latex => {
            for (i, t) in rows.iter().enumerate() {
                println!("{}", render::tableau_latex(t));
                if let Some(descents) = &report.descents {
                    println!("% descent composition: {}", descents[i]);
                }
            }
            println!("% count: {}", report.count.expect("count"));
        }
        Format::Json => println!("{}", serde_json::to_string(report).expect("serializable")),
    }
}

fn no_path(from: &str, to: &str) -> String {
    format!("no conversion path from {from} to {to}")
}

fn expand(operand: &Operand, target: Target) -> Result<ElementJson, String> {
    match (operand, target) {
        (Operand::NSym { basis, index }, Target::NSym(t)) => {
            let f = NSymElement::basis_element(*basis, index.clone());
            nsym::change_basis(&f, t)
                .map(|g| ElementJson::from(&g))
                .map_err(|e| e.to_string())
        }
        (Operand::Immaculate(tuple), Target::NSym(t)) => {
            let f = match tuple.to_composition() {
                Some(index) => NSymElement::basis_element(NSymBasis::S, index),
                // Tuples with zero or negative entries are evaluated through
                // the creation operators first.
                None => nsym::immaculate_to_h::<Int>(tuple),
            };
            nsym::change_basis(&f, t)
                .map(|g| ElementJson::from(&g))
                .map_err(|e| e.to_string())
        }
        (Operand::QSym { basis, index }, Target::QSym(t)) => {
            let f = immaculata::QSymElement::basis_element(*basis, index.clone());
            qsym::change_basis(&f, t)
                .map(|g| ElementJson::from(&g))
                .map_err(|e| e.to_string())
        }
        (Operand::Schur(tuple), Target::SymH) => {
            Ok(ElementJson::from(&sym::schur_to_h::<Int>(tuple)))
        }
        (Operand::Schur(tuple), Target::QSym(QSymBasis::Sstar)) => {
            let partition = tuple
                .to_composition()
                .and_then(|c| Partition::new(c.parts().iter().copied()).ok())
                .ok_or_else(|| {
                    format!("the dual immaculate decomposition needs a partition index, got \"{tuple}\"")
                })?;
            Ok(ElementJson::from(&qsym::schur_to_dual_immaculate::<Int>(
                &partition,
            )))
        }
        (Operand::Schur(tuple), Target::Schur) => {
            let f = match sym::schur_straighten(tuple) {
                sym::Straightened::Zero => SymElement::zero(sym::SymBasis::S),
                sym::Straightened::NonZero { sign, partition } => {
                    SymElement::from_terms(sym::SymBasis::S, [(partition, Int::from(sign))])
                }
            };
            Ok(ElementJson::from(&f))
        }
        (Operand::SymH(partition), Target::SymH) => Ok(ElementJson::from(
            &SymElement::basis_element(sym::SymBasis::H, partition.clone()),
        )),
        _ => Err(no_path(operand.basis_tag(), target.tag())),
    }
}

/// The `H` expansion of an NSym-side operand, `None` for QSym/Sym operands.
fn operand_to_h(op: &Operand) -> Option<NSymElement> {
    match op {
        Operand::NSym { basis, index } => {
            let f = NSymElement::basis_element(*basis, index.clone());
            Some(nsym::change_basis(&f, NSymBasis::H).expect("H is always reachable"))
        }
        Operand::Immaculate(tuple) => Some(nsym::immaculate_to_h::<Int>(tuple)),
        _ => None,
    }
}

fn convert_nsym(f: &NSymElement, out: Target) -> Result<ElementJson, String> {
    match out {
        Target::NSym(t) => nsym::change_basis(f, t)
            .map(|g| ElementJson::from(&g))
            .map_err(|e| e.to_string()),
        other => Err(format!(
            "cannot express a noncommutative product in basis {}",
            other.tag()
        )),
    }
}

fn product(
    left: &Operand,
    right: &Operand,
    out: Option<Target>,
    no_normalize: bool,
) -> Result<(&'static str, ElementJson), String> {
    // Special rules first.
    if let (Operand::Immaculate(a), Operand::NSym { basis: NSymBasis::H, index }) = (left, right) {
        if let (Some(alpha), 1) = (a.to_composition(), index.len()) {
            if no_normalize {
                return Err("--no-normalize only applies to the power-sum product".into());
            }
            let s = index.parts()[0];
            let result = nsym::pieri_multiply::<Int>(&alpha, s);
            let element = convert_nsym(&result, out.unwrap_or(Target::NSym(NSymBasis::S)))?;
            return Ok(("pieri", element));
        }
    }
    if let (Operand::Immaculate(a), Operand::Immaculate(l)) = (left, right) {
        let lambda = l
            .to_composition()
            .and_then(|c| Partition::new(c.parts().iter().copied()).ok());
        if let (Some(alpha), Some(lambda)) = (a.to_composition(), lambda) {
            if no_normalize {
                return Err("--no-normalize only applies to the power-sum product".into());
            }
            let result = nsym::lr_multiply::<Int>(&alpha, &lambda);
            let element = convert_nsym(&result, out.unwrap_or(Target::NSym(NSymBasis::S)))?;
            return Ok(("littlewood-richardson", element));
        }
    }
    if let (Operand::Immaculate(a), Operand::NSym { basis: NSymBasis::Psi, index }) = (left, right)
    {
        if let (Some(alpha), 1) = (a.to_composition(), index.len()) {
            let k = index.parts()[0];
            let out = out.unwrap_or(Target::NSym(NSymBasis::S));
            if no_normalize {
                if out != Target::NSym(NSymBasis::S) {
                    return Err("--no-normalize output is in the immaculate basis; drop --out or pass --out S".into());
                }
                let raw = nsym::mn_multiply_raw(&alpha, k);
                return Ok(("murnaghan-nakayama", mn_raw_element(&raw)));
            }
            let result = nsym::mn_multiply::<Int>(&alpha, k);
            return Ok(("murnaghan-nakayama", convert_nsym(&result, out)?));
        }
    }
    if let (
        Operand::NSym { basis: NSymBasis::H, index: a },
        Operand::NSym { basis: NSymBasis::H, index: b },
    ) = (left, right)
    {
        if no_normalize {
            return Err("--no-normalize only applies to the power-sum product".into());
        }
        let product = nsym::h_multiply(
            &NSymElement::basis_element(NSymBasis::H, a.clone()),
            &NSymElement::basis_element(NSymBasis::H, b.clone()),
        )
        .expect("both operands in H");
        let element = convert_nsym(&product, out.unwrap_or(Target::NSym(NSymBasis::H)))?;
        return Ok(("h-concatenation", element));
    }
    if let (
        Operand::QSym { basis: QSymBasis::M, index: a },
        Operand::QSym { basis: QSymBasis::M, index: b },
    ) = (left, right)
    {
        if no_normalize {
            return Err("--no-normalize only applies to the power-sum product".into());
        }
        let result = qsym::quasi_shuffle::<Int>(a, b);
        let out = out.unwrap_or(Target::QSym(QSymBasis::M));
        let element = match out {
            Target::QSym(t) => qsym::change_basis(&result, t)
                .map(|g| ElementJson::from(&g))
                .map_err(|e| e.to_string())?,
            other => {
                return Err(format!(
                    "cannot express a quasi-symmetric product in basis {}",
                    other.tag()
                ))
            }
        };
        return Ok(("quasi-shuffle", element));
    }
    // Generic fallback: any two NSym-side operands multiply through H.
    if let (Some(a), Some(b)) = (operand_to_h(left), operand_to_h(right)) {
        if no_normalize {
            return Err("--no-normalize only applies to the power-sum product".into());
        }
        eprintln!(
            "warning: no special rule applies to {} * {}; multiplying through the H basis",
            left.basis_tag(),
            right.basis_tag()
        );
        let product = nsym::h_multiply(&a, &b).expect("both expanded in H");
        let element = convert_nsym(&product, out.unwrap_or(Target::NSym(NSymBasis::H)))?;
        return Ok(("h-product", element));
    }
    Err(format!(
        "unsupported product combination {} * {}",
        left.basis_tag(),
        right.basis_tag()
    ))
}
