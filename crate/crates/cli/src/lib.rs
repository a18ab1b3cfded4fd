//! Command-line front end for `urcode-core`.
//!
//! Exit codes: 0 success, 1 axiom suite mismatch, 2 parse or usage error,
//! 3 domain error.

use std::io::Write;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand};
use num_bigint::BigUint;
use serde_json::{json, Value};

use urcode_core::axiomlab::{self, AxiomId, SampleConfig, Target};
use urcode_core::markov::{self, Cut, Mat2};
use urcode_core::rings::{parse_poly, ModelElem, ModelId};
use urcode_core::tcstrings::{self, Partition};
use urcode_core::{beta, dyadic, Error, Nat, Word};

#[derive(Parser, Debug)]
#[command(name = "urcode", version, about = "Sequence and ur-string codings over weak arithmetic models")]
struct Cli {
    /// Print line-delimited JSON records instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Dyadic (bijective base 2) coding of {a,b} words.
    #[command(subcommand)]
    Dyadic(DyadicCmd),
    /// Ur-strings coded by dyadic pairs.
    #[command(subcommand)]
    Urs(UrsCmd),
    /// β-function sequence coding.
    #[command(subcommand)]
    Beta(BetaCmd),
    /// Strings as determinant-one matrices.
    Markov(MarkovArgs),
    /// Partitions of a word.
    #[command(subcommand)]
    Tc(TcCmd),
    /// The rewrite system abc → b.
    #[command(subcommand)]
    Srs(SrsCmd),
    /// Axiom checks and the counterexample registry.
    #[command(subcommand)]
    Axioms(AxiomsCmd),
}

#[derive(Subcommand, Debug)]
enum DyadicCmd {
    Encode { word: String },
    Decode { n: String },
    Concat { m: String, n: String },
}

#[derive(Subcommand, Debug)]
enum UrsCmd {
    #[command(subcommand)]
    Sm(SmCmd),
}

#[derive(Subcommand, Debug)]
enum SmCmd {
    Encode { xs: Vec<String> },
    Decode { mask: String, payload: String },
}

#[derive(Subcommand, Debug)]
enum BetaCmd {
    Encode { xs: Vec<String> },
    /// β(w, i) for a pair code w = ⟨u, v⟩.
    Get { w: String, i: String },
    Decode { s: String },
    Append { s: String, x: String },
}

#[derive(Args, Debug)]
struct MarkovArgs {
    #[arg(long, env = "URCODE_MODEL", default_value = "nat", global = true)]
    model: String,
    #[command(subcommand)]
    command: MarkovCmd,
}

#[derive(Subcommand, Debug)]
enum MarkovCmd {
    Encode { word: String },
    Decode { matrix: String },
    Nf { matrix: String },
    Profile { matrix: String },
    /// Prefix at a cut of the normal form, and whether it lies in a model.
    Cut {
        matrix: String,
        run: usize,
        offset: String,
        #[arg(long = "in", default_value = "M0")]
        target: String,
    },
    UrsEncode { xs: Vec<String> },
    UrsDecode { matrix: String },
}

#[derive(Subcommand, Debug)]
enum TcCmd {
    Refine { word: String, alpha: String, beta: String },
}

#[derive(Subcommand, Debug)]
enum SrsCmd {
    Nf { word: String },
    Concat { x: String, y: String },
}

#[derive(Args, Debug)]
struct SuiteArgs {
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long)]
    count: Option<usize>,
}

#[derive(Subcommand, Debug)]
enum AxiomsCmd {
    Check {
        #[arg(long)]
        target: String,
        #[arg(long)]
        axiom: String,
        #[command(flatten)]
        sampling: SuiteArgs,
    },
    Suite {
        #[command(flatten)]
        sampling: SuiteArgs,
    },
    Registry,
}

enum Failure {
    Parse(String),
    Domain(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        if e.is_parse() {
            Failure::Parse(e.to_string())
        } else {
            Failure::Domain(e)
        }
    }
}

/// Output records: one text line and one JSON value each.
struct Reply {
    records: Vec<(String, Value)>,
    code: i32,
}

impl Reply {
    fn one(text: impl Into<String>, value: Value) -> Reply {
        Reply { records: vec![(text.into(), value)], code: 0 }
    }
}

type Outcome = Result<Reply, Failure>;

fn nat(s: &str) -> Result<Nat, Failure> {
    BigUint::from_str(s.trim()).map_err(|_| Failure::Parse(format!("expected a natural number, got {s:?}")))
}

fn nats(xs: &[String]) -> Result<Vec<Nat>, Failure> {
    xs.iter().map(|x| nat(x)).collect()
}

fn join<T: ToString>(xs: &[T]) -> String {
    xs.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")
}

fn strs<T: ToString>(xs: &[T]) -> Vec<String> {
    xs.iter().map(ToString::to_string).collect()
}

fn model(s: &str) -> Result<ModelId, Failure> {
    Ok(s.parse::<ModelId>()?)
}

fn dyadic_cmd(c: DyadicCmd) -> Outcome {
    Ok(match c {
        DyadicCmd::Encode { word } => {
            let n = dyadic::sm_encode(&word.parse::<Word>()?);
            Reply::one(n.to_string(), json!({ "word": word, "code": n.to_string() }))
        }
        DyadicCmd::Decode { n } => {
            let w = dyadic::sm_decode(&nat(&n)?).to_string();
            Reply::one(w.clone(), json!({ "code": n, "word": w }))
        }
        DyadicCmd::Concat { m, n } => {
            let r = dyadic::dyad_concat(&nat(&m)?, &nat(&n)?);
            Reply::one(r.to_string(), json!({ "code": r.to_string(), "word": dyadic::sm_decode(&r).to_string() }))
        }
    })
}

fn urs_cmd(c: UrsCmd) -> Outcome {
    let UrsCmd::Sm(c) = c;
    Ok(match c {
        SmCmd::Encode { xs } => {
            let u = dyadic::urs_encode(&nats(&xs)?);
            Reply::one(format!("{} {}", u.mask(), u.payload()), json!(u))
        }
        SmCmd::Decode { mask, payload } => {
            let u = dyadic::SmUrString::new(nat(&mask)?, nat(&payload)?)?;
            let xs = dyadic::urs_decode(&u)?;
            Reply::one(join(&xs), json!({ "elements": strs(&xs) }))
        }
    })
}

fn beta_cmd(c: BetaCmd) -> Outcome {
    let code = |s: Nat| Reply::one(s.to_string(), json!({ "code": s.to_string() }));
    Ok(match c {
        BetaCmd::Encode { xs } => code(beta::beta_encode(&nats(&xs)?)),
        BetaCmd::Get { w, i } => {
            let x = beta::beta_get(&nat(&w)?, &nat(&i)?)?;
            Reply::one(x.to_string(), json!({ "value": x.to_string() }))
        }
        BetaCmd::Decode { s } => {
            let xs = beta::beta_decode(&nat(&s)?)?;
            Reply::one(join(&xs), json!({ "elements": strs(&xs) }))
        }
        BetaCmd::Append { s, x } => code(beta::beta_append(&nat(&s)?, &nat(&x)?)?),
    })
}

fn matrix_reply(m: &Mat2) -> Reply {
    Reply::one(m.to_string(), json!(m))
}

fn markov_cmd(a: MarkovArgs) -> Outcome {
    let m = model(&a.model)?;
    let mat = |s: &str| markov::parse_mat(m, s);
    Ok(match a.command {
        MarkovCmd::Encode { word } => matrix_reply(&markov::encode_string(m, &word.parse()?)),
        MarkovCmd::Decode { matrix } => {
            let w = markov::decode_word(&mat(&matrix)?)?.to_string();
            Reply::one(w.clone(), json!({ "word": w }))
        }
        MarkovCmd::Nf { matrix } => {
            let nf = markov::normal_form(&mat(&matrix)?)?;
            Reply::one(nf.to_string(), json!(nf))
        }
        MarkovCmd::Profile { matrix } => {
            let p = markov::profile(&markov::normal_form(&mat(&matrix)?)?);
            Reply::one(join(&p), json!({ "profile": strs(&p) }))
        }
        MarkovCmd::Cut { matrix, run, offset, target } => {
            let nf = markov::normal_form(&mat(&matrix)?)?;
            let cut = Cut { run_index: run, offset: parse_poly(&offset)? };
            let prefix = markov::prefix_at_cut(&nf, &cut)?;
            let target = model(&target)?;
            let inside = markov::cut_in_model(&nf, &cut, target)?;
            Reply::one(
                format!("{prefix} {}in {target}", if inside { "" } else { "not " }),
                json!({ "prefix": prefix, "target": target, "member": inside }),
            )
        }
        MarkovCmd::UrsEncode { xs } => {
            let xs: Vec<ModelElem> = xs.iter().map(|x| ModelElem::parse(m, x)).collect::<Result<_, _>>()?;
            matrix_reply(&markov::urs_encode(m, &xs)?)
        }
        MarkovCmd::UrsDecode { matrix } => {
            let xs = markov::urs_decode(&mat(&matrix)?)?;
            Reply::one(join(&xs), json!({ "elements": strs(&xs) }))
        }
    })
}

fn tc_cmd(c: TcCmd) -> Outcome {
    let TcCmd::Refine { word, alpha, beta } = c;
    let (alpha, beta): (Partition, Partition) = (alpha.parse()?, beta.parse()?);
    if alpha.base() != word || beta.base() != word {
        return Err(Failure::Domain(Error::BaseMismatch));
    }
    let (gamma, f, g) = tcstrings::common_refinement(&alpha, &beta)?;
    Ok(Reply::one(
        format!("{gamma} f={} g={}", join(&f), join(&g)),
        json!({ "refinement": gamma.to_string(), "parts": gamma.parts(), "f": f, "g": g }),
    ))
}

fn srs_cmd(c: SrsCmd) -> Outcome {
    let w = match c {
        SrsCmd::Nf { word } => tcstrings::srs_normalize(&word)?,
        SrsCmd::Concat { x, y } => tcstrings::srs_concat(&tcstrings::srs_normalize(&x)?, &tcstrings::srs_normalize(&y)?)?,
    };
    Ok(Reply::one(w.clone(), json!({ "word": w })))
}

fn config(s: &SuiteArgs) -> SampleConfig {
    let base = SampleConfig { seed: s.seed, ..SampleConfig::default() };
    SampleConfig { count: s.count.unwrap_or(base.count), ..base }
}

fn axioms_cmd(c: AxiomsCmd) -> Outcome {
    match c {
        AxiomsCmd::Check { target, axiom, sampling } => {
            let (t, a): (Target, AxiomId) = (target.parse()?, axiom.parse()?);
            let r = axiomlab::check_axiom(t, a, &config(&sampling))?;
            let mut text = format!("{t} {a} {} ({} samples)", r.status.label(), r.samples);
            match &r.status {
                axiomlab::Status::Refuted(w) => text.push_str(&format!(": {}", w.render().join(", "))),
                axiomlab::Status::Unknown(why) => text.push_str(&format!(": {why}")),
                axiomlab::Status::Holds => {}
            }
            Ok(Reply::one(text, json!(r)))
        }
        AxiomsCmd::Suite { sampling } => {
            let report = axiomlab::run_suite(&config(&sampling));
            let mut records: Vec<(String, Value)> = report
                .entries
                .iter()
                .map(|e| {
                    let status = match (&e.report, &e.error) {
                        (Some(r), _) => r.status.label().to_string(),
                        (None, Some(err)) => format!("error: {err}"),
                        (None, None) => "error".into(),
                    };
                    let mark = if e.ok { "ok" } else { "MISMATCH" };
                    let expected = json!(e.expected);
                    let expected = expected.as_str().unwrap_or_default();
                    (format!("{mark} {} {} expected={expected} got={status}", e.target, e.axiom), json!(e))
                })
                .collect();
            records.push((
                format!("{} entries, {} mismatches, {} unknown", report.entries.len(), report.mismatches, report.unknowns),
                json!({ "entries": report.entries.len(), "mismatches": report.mismatches, "unknowns": report.unknowns }),
            ));
            Ok(Reply { records, code: if report.passed() { 0 } else { 1 } })
        }
        AxiomsCmd::Registry => {
            let mut records = Vec::new();
            for c in axiomlab::known_counterexamples() {
                let verified = c.verify()?;
                let mut v = json!(c);
                v["verified"] = json!(verified);
                records.push((format!("{}: {} [{}]", c.name, c.summary, if verified { "verified" } else { "FAILED" }), v));
            }
            Ok(Reply { records, code: 0 })
        }
    }
}

/// Run the CLI on `args` (including the program name), writing to `out` and
/// `err`. Returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let target: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(target, "{}", e.render());
            return code;
        }
    };
    let result = match cli.command {
        Command::Dyadic(c) => dyadic_cmd(c),
        Command::Urs(c) => urs_cmd(c),
        Command::Beta(c) => beta_cmd(c),
        Command::Markov(a) => markov_cmd(a),
        Command::Tc(c) => tc_cmd(c),
        Command::Srs(c) => srs_cmd(c),
        Command::Axioms(c) => axioms_cmd(c),
    };
    match result {
        Ok(reply) => {
            for (text, value) in &reply.records {
                let _ = if cli.json { writeln!(out, "{value}") } else { writeln!(out, "{text}") };
            }
            reply.code
        }
        Err(Failure::Parse(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
        Err(Failure::Domain(e)) => {
            if cli.json {
                let _ = writeln!(out, "{}", json!({ "error": e.to_string() }));
            }
            let _ = writeln!(err, "error: {e}");
            3
        }
    }
}
