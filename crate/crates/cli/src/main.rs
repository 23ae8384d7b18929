//! `schurkit` command-line front end.

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use schurkit::branching::{deformed_product, BranchingOperator};
use schurkit::clifford::{circle_product, gauged_circle_product, nl_product, variant_product, Flavor, Reading};
use schurkit::cohomology::{classify1, classify2, Cochain};
use schurkit::expr::{
    format_rational, parse_cochain, parse_expression_verbose, parse_partition, symfunc_to_json, tensor_to_json,
};
use schurkit::inner_alg::{inner_coproduct, inner_product, sn_character};
use schurkit::outer_hopf::{antipode, check_case, outer_coproduct, outer_product, skew, Case};
use schurkit::partition::{partitions_of, Partition};
use schurkit::series::{series, SeriesId};
use schurkit::symfunc::{kostka, schur_scalar, transition_matrix, Basis, SymFunc, TensorExp};
use schurkit::verify::run_all;
use schurkit::Error;

#[derive(Parser)]
#[command(name = "schurkit", version, about = "Exact computations with symmetric functions")]
struct Cli {
    /// Largest weight accepted as input, and the truncation of infinite objects.
    #[arg(long, global = true, default_value_t = 10, env = "SCHURKIT_MAX_WEIGHT")]
    max_weight: usize,

    /// Print JSON instead of text.
    #[arg(long, global = true)]
    json: bool,

    /// Basis for printed expansions: s, h, e, m or p.
    #[arg(long, global = true, value_parser = parse_basis)]
    basis: Option<Basis>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Pair {
    /// Left operand, e.g. `s[2,1] - 1/2*p[2]`.
    left: String,
    /// Right operand.
    right: String,
}

#[derive(Args)]
struct LeftRight {
    #[arg(long)]
    left: String,
    #[arg(long)]
    right: String,
}

#[derive(Subcommand)]
enum Command {
    /// Outer product f·g.
    Prod(Pair),
    /// Inner (Kronecker) product f⋆g.
    Inner(Pair),
    /// Outer coproduct Δ(f).
    Coprod { expr: String },
    /// Inner coproduct δ(f).
    Icoprod { expr: String },
    /// Skew f/g.
    Skew(Pair),
    /// Antipode S(f).
    Antipode { expr: String },
    /// Schur scalar product (f|g).
    Scalar(Pair),
    /// Kostka number K(shape, content).
    Kostka { shape: String, content: String },
    /// Transition matrix between two bases at one weight.
    Transition {
        #[arg(long, value_parser = parse_basis)]
        from: Basis,
        #[arg(long, value_parser = parse_basis)]
        to: Basis,
        #[arg(long)]
        n: usize,
    },
    /// Schur expansion of a named series.
    Series {
        #[arg(long)]
        id: String,
        /// Truncation weight; defaults to --max-weight.
        #[arg(long)]
        cap: Option<usize>,
    },
    /// Branching f/Φ by a series or a 1-cochain.
    Branch {
        #[arg(long, conflicts_with = "def", required_unless_present = "def")]
        series: Option<String>,
        /// 1-cochain spec, e.g. `table:{[1]:2}`.
        #[arg(long)]
        def: Option<String>,
        #[arg(long)]
        input: String,
        /// Apply the inverse operator.
        #[arg(long)]
        inverse: bool,
    },
    /// Deformed product Φ⁻¹(Φf·Φg).
    Dprod {
        #[arg(long, conflicts_with = "def", required_unless_present = "def")]
        series: Option<String>,
        #[arg(long)]
        def: Option<String>,
        #[command(flatten)]
        operands: LeftRight,
    },
    /// Cliffordized product with a 2-cochain pairing.
    Circle {
        /// `schur`, `schur-inv` or any 2-cochain spec.
        #[arg(long, default_value = "schur")]
        pairing: String,
        /// Product variant 1..8.
        #[arg(long)]
        variant: Option<u8>,
        /// Reading of the variants 7 and 8: literal or second.
        #[arg(long, default_value = "literal")]
        reading: String,
        /// Gauge the pairing by ∂φ for this 1-cochain spec.
        #[arg(long, conflicts_with = "variant")]
        gauge: Option<String>,
        #[command(flatten)]
        operands: LeftRight,
    },
    /// Newell-Littlewood product of universal characters.
    Nl {
        #[arg(long, default_value = "o")]
        flavor: String,
        #[arg(long)]
        left: String,
        #[arg(long)]
        right: String,
    },
    /// Classify a cochain as trivial, cocycle, coboundary or generic.
    ClassifyCochain {
        #[arg(long)]
        arity: usize,
        #[arg(long)]
        def: String,
    },
    /// Check a product/coproduct compatibility case (I, II, III or IV).
    CheckCase { case: String },
    /// Symmetric group character χ^λ(ρ).
    Char { lambda: String, rho: String },
    /// Run the acceptance criteria and print a pass/fail table.
    Selftest,
}

fn parse_basis(s: &str) -> Result<Basis, String> {
    Basis::from_letter(s).map_err(|e| e.to_string())
}

fn usage_error(e: &Error) -> bool {
    matches!(
        e,
        Error::Parse { .. } | Error::UnknownBasis(_) | Error::NonCanonicalPartition(_)
    )
}

struct Ctx {
    max_weight: usize,
    json: bool,
    basis: Option<Basis>,
    warnings: Vec<String>,
}

impl Ctx {
    fn expr(&mut self, text: &str) -> schurkit::Result<SymFunc> {
        let parsed = parse_expression_verbose(text)?;
        self.warnings.extend(parsed.warnings());
        let f = parsed.value;
        if let Some(w) = f.max_weight() {
            if w > self.max_weight {
                return Err(Error::BeyondCap {
                    weight: w,
                    cap: self.max_weight,
                });
            }
        }
        Ok(f)
    }

    fn partition(&self, text: &str) -> schurkit::Result<Partition> {
        let p = parse_partition(text)?;
        if p.weight() > self.max_weight {
            return Err(Error::BeyondCap {
                weight: p.weight(),
                cap: self.max_weight,
            });
        }
        Ok(p)
    }

    fn cochain(&self, text: &str, arity: usize) -> schurkit::Result<Cochain> {
        parse_cochain(text, arity)
    }

    fn series_cochain(&self, series: &Option<String>, def: &Option<String>) -> schurkit::Result<Cochain> {
        match (series, def) {
            (Some(id), _) => Ok(Cochain::series(id.parse::<SeriesId>()?)),
            (None, Some(d)) => self.cochain(d, 1),
            (None, None) => Err(Error::Domain("a series or a cochain is required".into())),
        }
    }

    fn with_warnings(&self, mut v: Value) -> Value {
        if let Value::Object(map) = &mut v {
            map.insert("warnings".into(), json!(self.warnings));
        }
        v
    }

    fn emit_symfunc(&self, f: &SymFunc) -> String {
        let f = match self.basis {
            Some(b) => f.convert(b),
            None => f.clone(),
        };
        if self.json {
            self.with_warnings(symfunc_to_json(&f)).to_string()
        } else {
            f.to_string()
        }
    }

    fn emit_tensor(&self, t: &TensorExp) -> String {
        let t = match self.basis {
            Some(b) => t.convert_slots(&vec![b; t.arity()]),
            None => t.clone(),
        };
        if self.json {
            self.with_warnings(tensor_to_json(&t)).to_string()
        } else {
            t.to_string()
        }
    }

    fn emit_value(&self, text: String, value: Value) -> String {
        if self.json {
            self.with_warnings(json!({ "value": value })).to_string()
        } else {
            text
        }
    }
}

fn run(cli: Cli) -> schurkit::Result<(String, bool)> {
    let mut ctx = Ctx {
        max_weight: cli.max_weight,
        json: cli.json,
        basis: cli.basis,
        warnings: Vec::new(),
    };
    let out = match cli.command {
        Command::Prod(p) => {
            let (f, g) = (ctx.expr(&p.left)?, ctx.expr(&p.right)?);
            ctx.emit_symfunc(&outer_product(&f, &g))
        }
        Command::Inner(p) => {
            let (f, g) = (ctx.expr(&p.left)?, ctx.expr(&p.right)?);
            ctx.emit_symfunc(&inner_product(&f, &g))
        }
        Command::Coprod { expr } => {
            let f = ctx.expr(&expr)?;
            ctx.emit_tensor(&outer_coproduct(&f))
        }
        Command::Icoprod { expr } => {
            let f = ctx.expr(&expr)?;
            ctx.emit_tensor(&inner_coproduct(&f))
        }
        Command::Skew(p) => {
            let (f, g) = (ctx.expr(&p.left)?, ctx.expr(&p.right)?);
            ctx.emit_symfunc(&skew(&f, &g))
        }
        Command::Antipode { expr } => {
            let f = ctx.expr(&expr)?;
            ctx.emit_symfunc(&antipode(&f))
        }
        Command::Scalar(p) => {
            let (f, g) = (ctx.expr(&p.left)?, ctx.expr(&p.right)?);
            let v = schur_scalar(&f, &g);
            ctx.emit_value(format_rational(&v), json!(format_rational(&v)))
        }
        Command::Kostka { shape, content } => {
            let (mu, lambda) = (ctx.partition(&shape)?, ctx.partition(&content)?);
            let k = kostka(&mu, &lambda);
            ctx.emit_value(k.to_string(), json!(k))
        }
        Command::Transition { from, to, n } => {
            if n > ctx.max_weight {
                return Err(Error::BeyondCap {
                    weight: n,
                    cap: ctx.max_weight,
                });
            }
            let labels = partitions_of(n);
            let m = transition_matrix(from, to, n);
            let rows = m.to_rows();
            if ctx.json {
                let text_rows: Vec<Vec<String>> =
                    rows.iter().map(|r| r.iter().map(format_rational).collect()).collect();
                let parts: Vec<&[usize]> = labels.iter().map(Partition::parts).collect();
                ctx.with_warnings(json!({
                    "from": from.letter().to_string(),
                    "to": to.letter().to_string(),
                    "n": n,
                    "partitions": parts,
                    "matrix": text_rows,
                }))
                .to_string()
            } else {
                transition_text(from, to, &labels, &rows)
            }
        }
        Command::Series { id, cap } => {
            let id: SeriesId = id.parse()?;
            let cap = cap.unwrap_or(ctx.max_weight);
            ctx.emit_symfunc(&series(id, cap).expansion)
        }
        Command::Branch {
            series,
            def,
            input,
            inverse,
        } => {
            let f = ctx.expr(&input)?;
            let mut op = BranchingOperator::new(ctx.series_cochain(&series, &def)?)?;
            if inverse {
                op = op.inverse();
            }
            ctx.emit_symfunc(&op.apply(&f))
        }
        Command::Dprod { series, def, operands } => {
            let phi = ctx.series_cochain(&series, &def)?;
            let (f, g) = (ctx.expr(&operands.left)?, ctx.expr(&operands.right)?);
            ctx.emit_symfunc(&deformed_product(&phi, &f, &g)?)
        }
        Command::Circle {
            pairing,
            variant,
            reading,
            gauge,
            operands,
        } => {
            let pi = ctx.cochain(&pairing, 2)?;
            let (f, g) = (ctx.expr(&operands.left)?, ctx.expr(&operands.right)?);
            let reading: Reading = reading.parse()?;
            let h = match (variant, gauge) {
                (Some(k), _) => variant_product(k, &f, &g, &pi, reading)?,
                (None, Some(phi)) => gauged_circle_product(&f, &g, &pi, &ctx.cochain(&phi, 1)?)?,
                (None, None) => circle_product(&f, &g, &pi)?,
            };
            ctx.emit_symfunc(&h)
        }
        Command::Nl { flavor, left, right } => {
            let flavor: Flavor = flavor.parse()?;
            let (l, r) = (ctx.partition(&left)?, ctx.partition(&right)?);
            let product = nl_product(&l, &r, flavor);
            if ctx.json {
                let mut v = symfunc_to_json(&product.expansion);
                v["flavor"] = json!(match flavor {
                    Flavor::O => "o",
                    Flavor::Sp => "sp",
                });
                ctx.with_warnings(v).to_string()
            } else {
                product.to_string()
            }
        }
        Command::ClassifyCochain { arity, def } => {
            let c = ctx.cochain(&def, arity)?;
            let (class, text) = match arity {
                1 => {
                    let v = classify1(&c, ctx.max_weight)?;
                    (class1_name(&v.class), v.to_string())
                }
                2 => {
                    let v = classify2(&c, ctx.max_weight)?;
                    (v.class.name(), v.to_string())
                }
                k => return Err(Error::UnsupportedArity(k)),
            };
            if ctx.json {
                ctx.with_warnings(json!({
                    "arity": arity,
                    "class": class,
                    "max_weight": ctx.max_weight,
                    "detail": text,
                }))
                .to_string()
            } else {
                text
            }
        }
        Command::CheckCase { case } => {
            let case: Case = case.parse()?;
            let report = check_case(case, ctx.max_weight.min(6));
            let text = report.to_string().trim_end().to_string();
            if ctx.json {
                let ratios: Vec<Value> = report
                    .ratios
                    .iter()
                    .map(|(n, r)| json!({"n": n, "ratio": format_rational(r)}))
                    .collect();
                ctx.with_warnings(json!({
                    "case": format!("{case:?}"),
                    "holds": report.holds,
                    "checked": report.checked,
                    "max_weight": report.max_weight,
                    "witnesses": report.witnesses,
                    "ratios": ratios,
                }))
                .to_string()
            } else {
                text
            }
        }
        Command::Char { lambda, rho } => {
            let (l, r) = (ctx.partition(&lambda)?, ctx.partition(&rho)?);
            if l.weight() != r.weight() {
                return Err(Error::Domain(format!("{l} and {r} have different weights")));
            }
            let v = sn_character(&l, &r);
            ctx.emit_value(v.to_string(), json!(v))
        }
        Command::Selftest => {
            let reports = run_all(ctx.max_weight);
            let passed = reports.iter().all(|r| r.passed);
            let out = if ctx.json {
                let rows: Vec<Value> = reports
                    .iter()
                    .map(|r| {
                        json!({
                            "id": r.id,
                            "title": r.title,
                            "passed": r.passed,
                            "checks": r.checks,
                            "notes": r.notes,
                            "seconds": r.elapsed.as_secs_f64(),
                        })
                    })
                    .collect();
                json!({"max_weight": ctx.max_weight, "passed": passed, "criteria": rows}).to_string()
            } else {
                let mut lines: Vec<String> = reports.iter().map(|r| r.to_string()).collect();
                let n = reports.iter().filter(|r| r.passed).count();
                lines.push(format!("{n}/{} criteria passed", reports.len()));
                lines.join("\n")
            };
            return Ok((out, passed));
        }
    };
    Ok((out, true))
}

fn class1_name(c: &schurkit::cohomology::Class1) -> &'static str {
    use schurkit::cohomology::Class1;
    match c {
        Class1::Trivial => "trivial",
        Class1::Cocycle => "cocycle",
        Class1::Generic { .. } => "generic",
    }
}

fn transition_text(from: Basis, to: Basis, labels: &[Partition], rows: &[Vec<schurkit::Rational>]) -> String {
    let head: Vec<String> = labels.iter().map(|p| format!("{}{p}", to.letter())).collect();
    let body: Vec<Vec<String>> = rows.iter().map(|r| r.iter().map(format_rational).collect()).collect();
    let label_w = labels
        .iter()
        .map(|p| format!("{}{p}", from.letter()).chars().count())
        .max()
        .unwrap_or(1);
    let col_w = head
        .iter()
        .map(|h| h.chars().count())
        .chain(body.iter().flatten().map(|c| c.chars().count()))
        .max()
        .unwrap_or(1);
    let mut out = format!("{:label_w$}", "");
    for h in &head {
        out.push_str(&format!("  {h:>col_w$}"));
    }
    for (p, row) in labels.iter().zip(&body) {
        out.push('\n');
        out.push_str(&format!("{:<label_w$}", format!("{}{p}", from.letter())));
        for c in row {
            out.push_str(&format!("  {c:>col_w$}"));
        }
    }
    out
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let json = cli.json;
    match run(cli) {
        Ok((out, ok)) => {
            println!("{out}");
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            if json {
                println!("{}", json!({"error": e.to_string()}));
            }
            eprintln!("error: {e}");
            ExitCode::from(if usage_error(&e) { 2 } else { 1 })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cli_definition_is_consistent() {
        use clap::CommandFactory;
        Cli::command().debug_assert();
    }

    #[test]
    fn transition_table_layout() {
        let labels = partitions_of(2);
        let rows = transition_matrix(Basis::Complete, Basis::Schur, 2).to_rows();
        let text = transition_text(Basis::Complete, Basis::Schur, &labels, &rows);
        assert_eq!(
            text,
            "          s[2]  s[1,1]\nh[2]         1       0\nh[1,1]       1       1"
        );
    }

    #[test]
    fn parse_errors_are_usage_errors() {
        assert!(usage_error(&Error::Parse {
            position: 0,
            message: String::new()
        }));
        assert!(!usage_error(&Error::Domain(String::new())));
    }
}
