//! The `eisen` command line.
//!
//! Exit status is 0 on success, 1 when the library rejects the input
//! (non-invertible class, non-prime, bound exceeded) and 2 on usage errors,
//! including malformed literals.

use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::eint::EInt;
use crate::error::Error;
use crate::euclid;
use crate::groups;
use crate::literal::parse;
use crate::primes::{self, Factorization};
use crate::render::{self, PlotKind, PlotSpec};
use crate::residues::{self, Modulus};
use crate::totient;

#[derive(Parser, Debug)]
#[command(name = "eisen", version, about = "Arithmetic in the Eisenstein integers Z[p], p^2 = -1 - p")]
struct Cli {
    /// Print results as JSON.
    #[arg(long, global = true)]
    json: bool,

    /// Modulus for residue operations.
    #[arg(long = "mod", global = true, value_name = "ETA", allow_hyphen_values = true)]
    modulus: Option<String>,

    /// Trial-division bound for factoring norms.
    #[arg(long, global = true, default_value_t = crate::integer::DEFAULT_TRIAL_BOUND)]
    bound: u64,

    /// How factorizations write the even prime.
    #[arg(long, global = true, value_enum, default_value_t = UnitStyle::Canonical)]
    unit_style: UnitStyle,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
enum UnitStyle {
    /// `2+p`
    Canonical,
    /// `1-p`
    Beta,
}

// Plain negative integers work positionally; other literals starting with `-`
// go through `--lit` or after `--`.
#[derive(Args, Debug)]
struct Operands {
    /// Eisenstein integer literals such as 3, -4, 2+p, 5-2p
    #[arg(allow_negative_numbers = true, value_name = "LITERAL")]
    values: Vec<String>,

    /// Extra literal, needed for values like -1-p; appended after the positional ones
    #[arg(long = "lit", value_name = "LITERAL", allow_hyphen_values = true)]
    lit: Vec<String>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// x + y (reduced when --mod is given)
    Add(Operands),
    /// x * y (reduced when --mod is given)
    Mul(Operands),
    /// Complex conjugate
    Conj(Operands),
    /// N(x) = a^2 - ab + b^2
    Norm(Operands),
    /// Even, Odd1 or Odd2
    Parity(Operands),
    /// Quotient and remainder of x by d
    Divrem(Operands),
    /// Canonical greatest common divisor
    Gcd(Operands),
    /// g, s, t with s*x + t*y = g
    Extgcd(Operands),
    /// Unit times canonical prime powers
    Factor(Operands),
    /// Primality and prime category
    IsPrime(Operands),
    /// Split a rational prime q = 1 mod 3 as psi * conj(psi)
    SplitPrime(Operands),
    /// Complete residue system of gamma^n
    Residues(Operands),
    /// Canonical representative of x modulo --mod
    Reduce(Operands),
    /// Unit classes modulo --mod
    Units(Operands),
    /// Multiplicative inverse modulo --mod
    Inverse(Operands),
    /// x^k modulo --mod
    Powmod(Operands),
    /// Euler totient with per-prime-power breakdown
    Phi(Operands),
    /// Check x^phi(eta) = 1 modulo --mod
    EulerFermat(Operands),
    /// Multiplicative order of x modulo --mod
    Order(Operands),
    /// Invariant factors of the unit group modulo eta
    Group(Operands),
    /// Generators of the unit group modulo eta, if cyclic
    PrimitiveRoots(Operands),
    /// Totient values of every canonical eta up to --max-norm
    ScanPhi(ScanArgs),
    /// Check gcd(c, d) = 1 for psi^n = c + d p
    CoprimeParts(Operands),
    /// Write an SVG figure
    Plot(PlotArgs),
}

#[derive(Args, Debug)]
struct ScanArgs {
    #[arg(long)]
    max_norm: u64,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum KindArg {
    Parity,
    Primes,
    Lattice,
}

#[derive(Args, Debug)]
struct PlotArgs {
    #[arg(long, value_enum)]
    kind: KindArg,
    #[arg(long)]
    max_norm: u64,
    /// Output file; standard output when omitted.
    #[arg(long)]
    out: Option<std::path::PathBuf>,
    #[arg(long, default_value_t = 600)]
    width: u32,
    #[arg(long, default_value_t = 600)]
    height: u32,
}

enum Failure {
    Usage(String),
    Domain(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse { .. } => Failure::Usage(e.to_string()),
            other => Failure::Domain(other),
        }
    }
}

type Outcome = std::result::Result<Output, Failure>;

/// Text and JSON renderings of one result.
struct Output {
    text: String,
    json: Value,
}

fn out(text: impl Into<String>, json: Value) -> Outcome {
    Ok(Output { text: text.into(), json })
}

fn literal(text: &str) -> std::result::Result<EInt, Failure> {
    parse(text).map_err(|e| Failure::Usage(format!("literal {text:?}: {e}")))
}

impl Operands {
    fn take(&self, expected: usize, what: &str) -> std::result::Result<Vec<String>, Failure> {
        let all: Vec<String> = self.values.iter().chain(&self.lit).cloned().collect();
        if all.len() != expected {
            return Err(Failure::Usage(format!("expected {expected} operand(s): {what}; got {}", all.len())));
        }
        Ok(all)
    }

    fn eints(&self, expected: usize, what: &str) -> std::result::Result<Vec<EInt>, Failure> {
        self.take(expected, what)?.iter().map(|s| literal(s)).collect()
    }
}

fn integer_arg<T: std::str::FromStr>(text: &str, what: &str) -> std::result::Result<T, Failure> {
    text.parse().map_err(|_| Failure::Usage(format!("{what} must be a non-negative integer, got {text:?}")))
}

fn list(values: &[EInt]) -> (String, Value) {
    let text = values.iter().map(|z| z.to_string()).collect::<Vec<_>>().join("\n");
    (text, json!(values))
}

fn factorization_json(f: &Factorization) -> Value {
    json!({
        "unit": f.unit.to_eint(),
        "factors": f.factors.iter().map(|pp| json!({"prime": pp.prime, "exponent": pp.exponent})).collect::<Vec<_>>(),
    })
}

fn structure_text(s: &groups::GroupStructure) -> String {
    if s.invariant_factors.is_empty() {
        return "trivial (order 1)".into();
    }
    let parts: Vec<String> = s.invariant_factors.iter().map(|d| format!("Z{d}")).collect();
    let shape = if s.cyclic { "cyclic" } else { "not cyclic" };
    format!("{} (order {}, {shape})", parts.join(" x "), s.order)
}

struct Context {
    json: bool,
    modulus: Option<String>,
    bound: u64,
    unit_style: UnitStyle,
}

impl Context {
    fn modulus(&self) -> std::result::Result<Modulus, Failure> {
        let text = self.modulus.as_deref().ok_or_else(|| Failure::Usage("this command needs --mod".into()))?;
        Ok(Modulus::new(literal(text)?)?)
    }

    fn maybe_reduce(&self, z: EInt) -> std::result::Result<EInt, Failure> {
        match self.modulus {
            Some(_) => Ok(self.modulus()?.reduce(z)),
            None => Ok(z),
        }
    }
}

fn execute(ctx: &Context, command: Command, stdout: &mut dyn Write) -> Outcome {
    match command {
        Command::Add(ops) => {
            let v = ops.eints(2, "x y")?;
            let z = match ctx.modulus {
                Some(_) => ctx.modulus()?.add(v[0], v[1]),
                None => v[0].try_add(v[1])?,
            };
            out(z.to_string(), json!(z))
        }
        Command::Mul(ops) => {
            let v = ops.eints(2, "x y")?;
            let z = match ctx.modulus {
                Some(_) => ctx.modulus()?.mul(v[0], v[1]),
                None => v[0].try_mul(v[1])?,
            };
            out(z.to_string(), json!(z))
        }
        Command::Conj(ops) => {
            let x = ops.eints(1, "x")?[0];
            let z = ctx.maybe_reduce(x.checked_conj().ok_or(Error::Overflow("conj"))?)?;
            out(z.to_string(), json!(z))
        }
        Command::Norm(ops) => {
            let n = ops.eints(1, "x")?[0].norm();
            // norms past u64 are emitted as strings
            let json = u64::try_from(n).map(Value::from).unwrap_or_else(|_| json!(n.to_string()));
            out(n.to_string(), json)
        }
        Command::Parity(ops) => {
            let p = ops.eints(1, "x")?[0].parity();
            out(p.name(), json!(p.name()))
        }
        Command::Divrem(ops) => {
            let v = ops.eints(2, "x d")?;
            let (q, r) = euclid::div_rem(v[0], v[1])?;
            out(format!("{q} {r}"), json!({"quotient": q, "remainder": r}))
        }
        Command::Gcd(ops) => {
            let v = ops.eints(2, "x y")?;
            let g = euclid::gcd(v[0], v[1])?;
            out(g.to_string(), json!(g))
        }
        Command::Extgcd(ops) => {
            let v = ops.eints(2, "x y")?;
            let (g, s, t) = euclid::ext_gcd(v[0], v[1])?;
            out(format!("{g} {s} {t}"), json!({"gcd": g, "s": s, "t": t}))
        }
        Command::Factor(ops) => {
            let x = ops.eints(1, "x")?[0];
            let mut f = primes::factor_with_bound(x, ctx.bound)?;
            if ctx.unit_style == UnitStyle::Beta {
                f = f.with_beta_convention();
            }
            out(f.to_string(), factorization_json(&f))
        }
        Command::IsPrime(ops) => {
            let x = ops.eints(1, "x")?[0];
            let category = primes::categorize_prime(x).ok();
            let text = match category {
                Some(c) => format!("true {c}"),
                None => "false".into(),
            };
            out(text, json!({"prime": category.is_some(), "category": category.map(|c| c.to_string())}))
        }
        Command::SplitPrime(ops) => {
            let q: u128 = integer_arg(&ops.take(1, "q")?[0], "q")?;
            let (psi, psi_bar) = primes::split_rational_prime(q)?;
            out(format!("{psi} {psi_bar}"), json!([psi, psi_bar]))
        }
        Command::Residues(ops) => {
            let args = ops.take(2, "gamma n")?;
            let gamma = literal(&args[0])?;
            let n: u32 = integer_arg(&args[1], "n")?;
            let system: Vec<EInt> = residues::residue_system(gamma, n)?.collect();
            let (text, json) = list(&system);
            out(text, json)
        }
        Command::Reduce(ops) => {
            let x = ops.eints(1, "x")?[0];
            let z = ctx.modulus()?.reduce(x);
            out(z.to_string(), json!(z))
        }
        Command::Units(ops) => {
            ops.take(0, "none (use --mod)")?;
            let units = residues::unit_classes(&ctx.modulus()?)?;
            let (text, json) = list(&units);
            out(text, json)
        }
        Command::Inverse(ops) => {
            let x = ops.eints(1, "x")?[0];
            let z = residues::inverse_mod(x, &ctx.modulus()?)?;
            out(z.to_string(), json!(z))
        }
        Command::Powmod(ops) => {
            let args = ops.take(2, "x k")?;
            let x = literal(&args[0])?;
            let k: u128 = integer_arg(&args[1], "k")?;
            let z = residues::pow_mod(x, k, &ctx.modulus()?);
            out(z.to_string(), json!(z))
        }
        Command::Phi(ops) => {
            let eta = ops.eints(1, "eta")?[0];
            let v = totient::phi(eta)?;
            let parity = totient::phi_parity(eta)?;
            let breakdown: Vec<Value> = v
                .breakdown
                .iter()
                .map(|(pp, c)| json!({"prime": pp.prime, "exponent": pp.exponent, "contribution": *c as u64}))
                .collect();
            out(v.value.to_string(), json!({"value": v.value as u64, "breakdown": breakdown, "parity": parity}))
        }
        Command::EulerFermat(ops) => {
            let x = ops.eints(1, "x")?[0];
            let m = ctx.modulus()?;
            let holds = totient::euler_fermat_check(x, m.eta())?;
            out(holds.to_string(), json!(holds))
        }
        Command::Order(ops) => {
            let x = ops.eints(1, "x")?[0];
            let m = ctx.modulus()?;
            let order = groups::element_order(x, m.eta())?;
            out(order.to_string(), json!(order as u64))
        }
        Command::Group(ops) => {
            let eta = ops.eints(1, "eta")?[0];
            let s = groups::group_structure(eta)?;
            out(structure_text(&s), serde_json::to_value(&s).expect("structure serializes"))
        }
        Command::PrimitiveRoots(ops) => {
            let eta = ops.eints(1, "eta")?[0];
            let roots = groups::primitive_roots(eta)?;
            let (text, json) = list(&roots);
            out(if roots.is_empty() { "none (not cyclic)".into() } else { text }, json)
        }
        Command::ScanPhi(args) => {
            let scan = totient::totient_value_scan(args.max_norm)?;
            let mut lines: Vec<String> = scan
                .attained
                .iter()
                .map(|(v, etas)| {
                    let etas: Vec<String> = etas.iter().map(|z| z.to_string()).collect();
                    format!("{v}: {}", etas.join(" "))
                })
                .collect();
            let missing: Vec<String> = scan.missing_even.iter().map(|v| v.to_string()).collect();
            lines.push(format!("missing even: {}", missing.join(" ")));
            out(lines.join("\n"), serde_json::to_value(&scan).expect("scan serializes"))
        }
        Command::CoprimeParts(ops) => {
            let args = ops.take(2, "psi n")?;
            let psi = literal(&args[0])?;
            let n: u32 = integer_arg(&args[1], "n")?;
            let holds = groups::coprime_parts_check(psi, n)?;
            let power = psi.try_pow(n)?;
            out(format!("{holds} {power}"), json!({"coprime": holds, "power": power}))
        }
        Command::Plot(args) => {
            let kind = match args.kind {
                KindArg::Parity => PlotKind::ParityMap,
                KindArg::Primes => PlotKind::PrimeMap,
                KindArg::Lattice => PlotKind::Lattice,
            };
            let mut spec = PlotSpec::new(kind, args.max_norm);
            spec.width = args.width;
            spec.height = args.height;
            let svg = render::render_svg(&spec)?;
            match args.out {
                Some(path) => {
                    std::fs::write(&path, &svg)
                        .map_err(|e| Failure::Usage(format!("cannot write {}: {e}", path.display())))?;
                    let shown = path.display().to_string();
                    out(shown.clone(), json!({"written": shown, "bytes": svg.len()}))
                }
                None => {
                    let _ = stdout.write_all(svg.as_bytes());
                    Ok(Output { text: String::new(), json: Value::Null })
                }
            }
        }
    }
}

/// Runs the command line `args` (including the program name), writing
/// results to `stdout` and diagnostics to `stderr`. Returns the exit status.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let target: &mut dyn Write = if e.use_stderr() { stderr } else { stdout };
            let _ = write!(target, "{}", e.render());
            return code;
        }
    };
    let ctx = Context { json: cli.json, modulus: cli.modulus, bound: cli.bound, unit_style: cli.unit_style };
    match execute(&ctx, cli.command, stdout) {
        Ok(output) => {
            if ctx.json {
                if !output.json.is_null() {
                    let _ = writeln!(stdout, "{}", output.json);
                }
            } else if !output.text.is_empty() {
                let _ = writeln!(stdout, "{}", output.text);
            }
            0
        }
        Err(Failure::Usage(message)) => {
            let _ = writeln!(stderr, "error: {message}");
            2
        }
        Err(Failure::Domain(e)) => {
            let _ = writeln!(stderr, "error: {e}");
            1
        }
    }
}
