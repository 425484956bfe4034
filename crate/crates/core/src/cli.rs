//! Command-line front end.
//!
//! Exit codes: 0 success, 1 usage or parse error, 2 failed mathematical
//! precondition, 3 failed verification suite.

use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::bicyclic::{
    obstruction_closed, profile_from_character, total_sw_oracle, total_sw_reduced, BicyclicRep,
    CharacterQuadruple, ParityProfile, Regime,
};
use crate::cyclic::CyclicRep;
use crate::error::{Error, Result};
use crate::gl2::{
    discrepancy_report, emit_table, parse_descriptor, Discrepancy, FieldParam, Table,
};
use crate::ring::{Mod2Class, Obstruction};
use crate::verify::{self, Suite, VerifyReport};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_PRECONDITION: i32 = 2;
pub const EXIT_VERIFY: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "swclass",
    version,
    about = "Stiefel-Whitney and obstruction classes of real representations"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Highest degree kept in total classes.
    #[arg(long, global = true)]
    cap: Option<u64>,

    /// Write the output document to this file instead of standard output.
    #[arg(long, global = true)]
    out: Option<std::path::PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Representation of C_n.
    Cyclic(CyclicArgs),
    /// Representation of C_n x C_n.
    Bicyclic(BicyclicArgs),
    /// Orthogonal representation of GL2(F_q), or one of its tables.
    Gl2(Gl2Args),
    /// Run the verification suites.
    Verify(VerifyArgs),
}

#[derive(Debug, Args)]
struct CyclicArgs {
    #[arg(long)]
    n: u64,
    /// Multiplicity of the trivial character.
    #[arg(long, default_value_t = 0)]
    m0: u64,
    /// Multiplicity of the sign character.
    #[arg(long, default_value_t = 0)]
    ms: u64,
    /// Two-dimensional summands as "j:mult,...".
    #[arg(long, default_value = "")]
    mj: String,
}

#[derive(Debug, Args)]
#[command(group = clap::ArgGroup::new("input").required(true).args(["m", "char"]))]
struct BicyclicArgs {
    #[arg(long)]
    n: u64,
    /// One-dimensional multiplicities "m0,m1,m2,m3".
    #[arg(long)]
    m: Option<String>,
    /// Two-dimensional summands as "(j1,j2):mult,...".
    #[arg(long = "M", requires = "m")]
    big_m: Option<String>,
    /// Character values "c00,cN0,c0N,cNN" at the 2-torsion elements.
    #[arg(long = "char")]
    char: Option<String>,
}

#[derive(Debug, Args)]
#[command(group = clap::ArgGroup::new("what").required(true).args(["rep", "table"]))]
struct Gl2Args {
    #[arg(long)]
    q: u64,
    /// Representation descriptor, e.g. "ps(1,sgn)" or "2*triv + S(cusp(1))".
    #[arg(long)]
    rep: Option<String>,
    #[arg(long, value_parser = ["1", "2", "4"])]
    table: Option<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SuiteArg {
    Arith,
    Ring,
    Cyclic,
    Bicyclic,
    Gl2,
    All,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    #[arg(long, value_enum, default_value_t = SuiteArg::All)]
    suite: SuiteArg,
    #[arg(long, default_value_t = 42)]
    seed: u64,
    #[arg(long, default_value_t = 64)]
    samples: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ObstructionDoc {
    pub degree: u64,
    pub class: String,
    pub k: Option<u64>,
}

impl From<&Obstruction> for ObstructionDoc {
    fn from(o: &Obstruction) -> Self {
        ObstructionDoc {
            degree: o.degree,
            class: o.class.render(),
            k: o.k,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ProfileDoc {
    pub m10: String,
    pub m01: String,
    pub m11: String,
    pub regime: String,
}

impl From<&ParityProfile> for ProfileDoc {
    fn from(p: &ParityProfile) -> Self {
        ProfileDoc {
            m10: p.m10.to_string(),
            m01: p.m01.to_string(),
            m11: p.m11.to_string(),
            regime: p.regime.name().to_string(),
        }
    }
}

/// Result of a `cyclic`, `bicyclic` or `gl2` query.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OutputDocument {
    pub query: String,
    pub ring: String,
    pub w1: Option<String>,
    pub w2: Option<String>,
    pub total: Option<String>,
    pub obstruction: Option<ObstructionDoc>,
    pub profile: Option<ProfileDoc>,
    pub discrepancies: Vec<Discrepancy>,
    /// Quantities the input does not determine.
    pub undetermined: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TableDocument {
    pub query: String,
    pub table: Table,
    pub discrepancies: Vec<Discrepancy>,
}

enum Output {
    Query(OutputDocument),
    Table(TableDocument),
    Verify(VerifyReport),
}

/// Run with `argv` (program name first), writing the document to `out`
/// (unless `--out` is given) and diagnostics to `err`.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => EXIT_OK,
                _ => EXIT_USAGE,
            };
            let _ = if code == EXIT_OK {
                write!(out, "{e}")
            } else {
                write!(err, "{e}")
            };
            return code;
        }
    };
    let output = match execute(&cli) {
        Ok(o) => o,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return match e {
                Error::Precondition(_) => EXIT_PRECONDITION,
                _ => EXIT_USAGE,
            };
        }
    };
    let text = match cli.format {
        Format::Json => {
            let json = match &output {
                Output::Query(d) => serde_json::to_string_pretty(d),
                Output::Table(d) => serde_json::to_string_pretty(d),
                Output::Verify(d) => serde_json::to_string_pretty(d),
            };
            json.expect("documents serialize") + "\n"
        }
        Format::Text => match &output {
            Output::Query(d) => render_query(d),
            Output::Table(d) => render_table(d),
            Output::Verify(d) => render_verify(d),
        },
    };
    let written = match &cli.out {
        Some(path) => std::fs::write(path, &text),
        None => out.write_all(text.as_bytes()),
    };
    if let Err(e) = written {
        let _ = writeln!(err, "error: cannot write output: {e}");
        return EXIT_USAGE;
    }
    match output {
        Output::Verify(r) if !r.passed() => EXIT_VERIFY,
        _ => EXIT_OK,
    }
}

fn execute(cli: &Cli) -> Result<Output> {
    match &cli.command {
        Command::Cyclic(a) => cyclic(a, cli.cap).map(Output::Query),
        Command::Bicyclic(a) => bicyclic(a, cli.cap).map(Output::Query),
        Command::Gl2(a) => match (&a.rep, &a.table) {
            (Some(rep), _) => gl2_rep(a.q, rep, cli.cap).map(Output::Query),
            (None, Some(which)) => gl2_table(a.q, which).map(Output::Table),
            (None, None) => unreachable!("clap requires one of --rep, --table"),
        },
        Command::Verify(a) => {
            let suites: Vec<Suite> = match a.suite {
                SuiteArg::Arith => vec![Suite::Arith],
                SuiteArg::Ring => vec![Suite::Ring],
                SuiteArg::Cyclic => vec![Suite::Cyclic],
                SuiteArg::Bicyclic => vec![Suite::Bicyclic],
                SuiteArg::Gl2 => vec![Suite::Gl2],
                SuiteArg::All => Suite::ALL.to_vec(),
            };
            Ok(Output::Verify(verify::run(&suites, a.seed, a.samples)))
        }
    }
}

fn parse_u64(token: &str, pos: usize) -> Result<u64> {
    token.trim().parse().map_err(|_| {
        Error::parse(
            pos,
            format!("expected a nonnegative integer, found '{}'", token.trim()),
        )
    })
}

fn parse_i64(token: &str, pos: usize) -> Result<i64> {
    token.trim().parse().map_err(|_| {
        Error::parse(
            pos,
            format!("expected an integer, found '{}'", token.trim()),
        )
    })
}

/// Comma-separated items with their byte offsets; empty input gives none.
fn items(s: &str) -> Vec<(usize, &str)> {
    if s.trim().is_empty() {
        return Vec::new();
    }
    let mut pos = 0;
    s.split(',')
        .map(|item| {
            let at = pos;
            pos += item.len() + 1;
            (at, item)
        })
        .collect()
}

/// `"j:mult,..."`.
fn parse_mj(s: &str) -> Result<Vec<(u64, u64)>> {
    items(s)
        .into_iter()
        .map(|(at, item)| {
            let (j, m) = item.split_once(':').ok_or_else(|| {
                Error::parse(at, format!("expected 'j:mult', found '{}'", item.trim()))
            })?;
            Ok((parse_u64(j, at)?, parse_u64(m, at + j.len() + 1)?))
        })
        .collect()
}

/// `"(j1,j2):mult,..."`.
fn parse_pairs(s: &str) -> Result<Vec<((u64, u64), u64)>> {
    let mut out = Vec::new();
    let mut rest = s;
    let mut pos = 0;
    let bad = |pos: usize, rest: &str| {
        let token: String = rest.trim().chars().take_while(|&c| c != ',').collect();
        Error::parse(pos, format!("expected '(j1,j2):mult', found '{token}'"))
    };
    loop {
        let trimmed = rest.trim_start();
        pos += rest.len() - trimmed.len();
        rest = trimmed;
        if rest.is_empty() {
            return Ok(out);
        }
        if !rest.starts_with('(') {
            return Err(bad(pos, rest));
        }
        let close = rest.find(')').ok_or_else(|| bad(pos, rest))?;
        let (a, b) = rest[1..close]
            .split_once(',')
            .ok_or_else(|| bad(pos, rest))?;
        let j1 = parse_u64(a, pos + 1)?;
        let j2 = parse_u64(b, pos + 2 + a.len())?;
        let after = &rest[close + 1..];
        let after_trim = after.trim_start();
        let colon_at = pos + close + 1 + (after.len() - after_trim.len());
        let mult_src = after_trim.strip_prefix(':').ok_or_else(|| bad(pos, rest))?;
        let (mult, tail) = match mult_src.find(',') {
            Some(i) => (&mult_src[..i], Some(&mult_src[i + 1..])),
            None => (mult_src, None),
        };
        out.push(((j1, j2), parse_u64(mult, colon_at + 1)?));
        match tail {
            Some(t) => {
                pos = colon_at + 1 + mult.len() + 1;
                rest = t;
            }
            None => return Ok(out),
        }
    }
}

fn fixed<const N: usize, T>(
    s: &str,
    what: &str,
    parse: fn(&str, usize) -> Result<T>,
) -> Result<[T; N]> {
    let parts = items(s);
    if parts.len() != N {
        return Err(Error::parse(
            0,
            format!(
                "{what} needs {N} comma-separated values, got {}",
                parts.len()
            ),
        ));
    }
    let values: Vec<T> = parts
        .into_iter()
        .map(|(at, t)| parse(t, at))
        .collect::<Result<_>>()?;
    Ok(values
        .try_into()
        .unwrap_or_else(|_| unreachable!("length checked")))
}

fn split_w(total: &Mod2Class) -> (Option<String>, Option<String>) {
    (
        Some(total.homogeneous(1).render()),
        Some(total.homogeneous(2).render()),
    )
}

fn cyclic(a: &CyclicArgs, cap: Option<u64>) -> Result<OutputDocument> {
    let rep = CyclicRep::new(a.n, a.m0, a.ms, parse_mj(&a.mj)?)?;
    let cap = cap.unwrap_or(2 * rep.dim());
    let total = rep.total_sw(Some(cap));
    let (w1, w2) = split_w(&total);
    Ok(OutputDocument {
        query: format!("cyclic n={} m0={} ms={} mj=\"{}\"", a.n, a.m0, a.ms, a.mj),
        ring: rep.ring().name().to_string(),
        w1,
        w2,
        total: Some(total.render()),
        obstruction: rep.obstruction().as_ref().map(ObstructionDoc::from),
        profile: None,
        discrepancies: Vec::new(),
        undetermined: Vec::new(),
    })
}

fn bicyclic(a: &BicyclicArgs, cap: Option<u64>) -> Result<OutputDocument> {
    if let Some(m) = &a.m {
        let m: [u64; 4] = fixed(m, "--m", parse_u64)?;
        let pairs = parse_pairs(a.big_m.as_deref().unwrap_or(""))?;
        let rep = BicyclicRep::new(a.n, m, pairs)?;
        let cap = cap.unwrap_or(2 * rep.dim());
        let total = total_sw_oracle(&rep, cap);
        let (w1, w2) = split_w(&total);
        return Ok(OutputDocument {
            query: format!(
                "bicyclic n={} m=\"{}\" M=\"{}\"",
                a.n,
                a.m.as_deref().unwrap_or(""),
                a.big_m.as_deref().unwrap_or("")
            ),
            ring: rep.ring().name().to_string(),
            w1,
            w2,
            total: Some(total.render()),
            obstruction: rep.obstruction()?.as_ref().map(ObstructionDoc::from),
            profile: Some(ProfileDoc::from(&rep.profile())),
            discrepancies: Vec::new(),
            undetermined: Vec::new(),
        });
    }
    let src = a.char.as_deref().expect("clap requires --m or --char");
    let [c00, cn0, c0n, cnn] = fixed(src, "--char", parse_i64)?;
    let profile = profile_from_character(a.n, &CharacterQuadruple::new(c00, cn0, c0n, cnn))?;
    let query = format!("bicyclic n={} char=\"{src}\"", a.n);
    let dim = u64::try_from(c00).unwrap_or(0);
    let cap = cap.unwrap_or(2 * dim);
    let mut doc = OutputDocument {
        query,
        ring: profile.ring().name().to_string(),
        w1: None,
        w2: None,
        total: None,
        obstruction: None,
        profile: Some(ProfileDoc::from(&profile)),
        discrepancies: Vec::new(),
        undetermined: Vec::new(),
    };
    match profile.regime {
        Regime::Mod2 => {
            // the 2-torsion restriction determines everything here
            let total = total_sw_reduced(&profile, cap);
            (doc.w1, doc.w2) = split_w(&total);
            doc.total = Some(total.render());
            doc.obstruction = Obstruction::from_total(&total_sw_reduced(&profile, 2 * dim))
                .as_ref()
                .map(ObstructionDoc::from);
        }
        Regime::Mod4 => {
            doc.undetermined = vec![
                "w1, w2 and the total class need the full decomposition".into(),
                "obstruction assumes w1 = w2 = 0".into(),
            ];
            doc.obstruction = obstruction_closed(&profile)?
                .as_ref()
                .map(ObstructionDoc::from);
        }
    }
    Ok(doc)
}

fn gl2_rep(q: u64, desc: &str, cap: Option<u64>) -> Result<OutputDocument> {
    let field = FieldParam::new(q)?;
    let rep = parse_descriptor(field, desc)?;
    let profile = rep.profile()?;
    let o = rep.obstruction(None)?;
    let (w1, w2, notes) = rep.w1_w2_classes(None)?;
    let mut undetermined = o.undetermined;
    for n in notes {
        if !undetermined.contains(&n) {
            undetermined.push(n);
        }
    }
    let spinorial = !rep.w1() && rep.is_spinorial()?;
    let known_total = field.regime() == Regime::Mod2 || spinorial;
    let total = if known_total {
        let dim = u64::try_from(rep.dim()).unwrap_or(u64::MAX);
        let window = o.obstruction.as_ref().map_or(dim, |o| o.degree);
        Some(total_sw_reduced(&profile, cap.unwrap_or(2 * window.min(dim))).render())
    } else {
        undetermined.push("total class needs more than the diagonal character values".into());
        None
    };
    Ok(OutputDocument {
        query: format!("gl2 q={q} rep=\"{desc}\""),
        ring: field.ring().name().to_string(),
        w1: Some(w1.render()),
        w2: Some(w2.render()),
        total,
        obstruction: o.obstruction.as_ref().map(ObstructionDoc::from),
        profile: Some(ProfileDoc::from(&profile)),
        discrepancies: Vec::new(),
        undetermined,
    })
}

fn gl2_table(q: u64, which: &str) -> Result<TableDocument> {
    let which: u8 = which
        .parse()
        .map_err(|_| Error::Invalid(format!("no table {which}")))?;
    let table = emit_table(q, which)?;
    let discrepancies = discrepancy_report(q)?
        .into_iter()
        .filter(|d| d.table == which)
        .collect();
    Ok(TableDocument {
        query: format!("gl2 q={q} table={which}"),
        table,
        discrepancies,
    })
}

fn render_query(d: &OutputDocument) -> String {
    let mut s = String::new();
    let line = |s: &mut String, k: &str, v: &str| s.push_str(&format!("{k:<12} {v}\n"));
    line(&mut s, "query", &d.query);
    line(&mut s, "ring", &d.ring);
    let or_dash = |v: &Option<String>| v.clone().unwrap_or_else(|| "-".into());
    line(&mut s, "w1", &or_dash(&d.w1));
    line(&mut s, "w2", &or_dash(&d.w2));
    line(&mut s, "total", &or_dash(&d.total));
    if let Some(p) = &d.profile {
        line(
            &mut s,
            "profile",
            &format!("m10={} m01={} m11={} ({})", p.m10, p.m01, p.m11, p.regime),
        );
    }
    let o = match &d.obstruction {
        Some(o) => {
            let k = o.k.map_or(String::new(), |k| format!(", k={k}"));
            format!("w_{} = {}{k}", o.degree, o.class)
        }
        None => "none (total class is 1)".into(),
    };
    line(&mut s, "obstruction", &o);
    for u in &d.undetermined {
        line(&mut s, "undetermined", u);
    }
    s
}

fn render_table(d: &TableDocument) -> String {
    let t = &d.table;
    let mut header = vec!["family".to_string(), "variant".into(), "count".into()];
    header.extend(t.columns.iter().cloned());
    header.push("verified".into());
    let mut rows: Vec<Vec<String>> = vec![header];
    for r in &t.rows {
        let mut row = vec![r.family.clone(), r.variant.clone(), r.count.to_string()];
        row.extend(
            t.columns
                .iter()
                .map(|c| r.cells.get(c).cloned().unwrap_or_default()),
        );
        row.push(if r.verified { "yes" } else { "NO" }.into());
        rows.push(row);
    }
    let widths: Vec<usize> = (0..rows[0].len())
        .map(|i| rows.iter().map(|r| r[i].chars().count()).max().unwrap_or(0))
        .collect();
    let mut s = format!("table {} for q = {}\n", t.which, t.q);
    for r in &rows {
        let cells: Vec<String> = r
            .iter()
            .zip(&widths)
            .map(|(c, w)| format!("{c:<w$}"))
            .collect();
        s.push_str(cells.join("  ").trim_end());
        s.push('\n');
    }
    if d.discrepancies.is_empty() {
        s.push_str("no discrepancies with the printed table\n");
    } else {
        s.push_str("discrepancies:\n");
        for x in &d.discrepancies {
            s.push_str(&format!(
                "  [{:?}] {} {} {}: printed {}, computed {} ({} instance(s), e.g. {})\n",
                x.kind, x.family, x.variant, x.column, x.printed, x.computed, x.count, x.example
            ));
        }
    }
    s
}

fn render_verify(r: &VerifyReport) -> String {
    let mut s = format!("seed {} samples {}\n", r.seed, r.samples);
    for c in &r.checks {
        let status = if c.failed == 0 { "ok  " } else { "FAIL" };
        s.push_str(&format!(
            "{status} {:<9} {} ({} cases)\n",
            c.suite.name(),
            c.name,
            c.cases
        ));
        for f in &c.failures {
            s.push_str(&format!("       {f}\n"));
        }
    }
    let failed: usize = r.checks.iter().filter(|c| c.failed > 0).count();
    s.push_str(&format!("{} checks, {failed} failed\n", r.checks.len()));
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn multiplicity_lists() {
        assert_eq!(parse_mj("1:2, 3:1").unwrap(), vec![(1, 2), (3, 1)]);
        assert_eq!(parse_mj("").unwrap(), vec![]);
        assert!(matches!(
            parse_mj("1:2,x:1"),
            Err(Error::Parse { pos: 4, .. })
        ));
        assert_eq!(
            parse_pairs("(1,2):3, (0,1):1").unwrap(),
            vec![((1, 2), 3), ((0, 1), 1)]
        );
        assert!(matches!(
            parse_pairs("(1,2):3,(1;2):1"),
            Err(Error::Parse { pos: 8, .. })
        ));
        assert!(matches!(
            parse_pairs("(1,2):z"),
            Err(Error::Parse { pos: 6, .. })
        ));
    }
}
