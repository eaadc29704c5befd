//! The `dihedral` command line.
//!
//! Every subcommand prints `key=value` records (or CSV with `--format csv`)
//! so that output can be compared byte for byte.

use std::fmt::Write as _;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::dual::{
    artin_to_dual, dual_normal_form, dual_negg, dual_poss, dual_to_artin, is_geodesic_dual,
};
use crate::dual_horo::{dual_approach_element, dual_detour, dual_psi, DualOmegaPoint, DualZWord};
use crate::error::Error;
use crate::extended::{parse_coordinates, ExtendedInt};
use crate::garside::{is_geodesic_artin, negg, normal_form, poss};
use crate::growth::{build_acceptor, closed_form_counts, count_geodesics_enumeration};
use crate::horo::{approach_element, density_element, detour_upper, is_busemann, psi, Membership, OmegaPoint, ZWord};
use crate::oracle::{verify_distance_formula, verify_geodesic_criterion, verify_length_axioms, Artin, CayleyBall, Dual, Presentation, Report};
use crate::words::{ArtinWord, DualWord, Gens, GroupParams, Letter, Word};

#[derive(Debug, Parser)]
#[command(name = "dihedral", version, about = "Word metrics, horofunctions and growth in dihedral Artin groups")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum GensArg {
    Artin,
    Dual,
}

impl From<GensArg> for Gens {
    fn from(g: GensArg) -> Gens {
        match g {
            GensArg::Artin => Gens::Artin,
            GensArg::Dual => Gens::Dual,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Plain,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Closed,
    Enum,
    Automaton,
    All,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Check {
    Dist,
    Geo,
    Axioms,
    All,
}

#[derive(Debug, Args)]
struct Common {
    /// Coxeter parameter of the group, at least 3.
    #[arg(long, value_parser = clap::value_parser!(u32).range(3..))]
    k: u32,
    #[arg(long, value_enum, default_value = "artin")]
    gens: GensArg,
    #[arg(long, value_enum, default_value = "plain")]
    format: Format,
}

#[derive(Debug, Args)]
struct WordArgs {
    #[command(flatten)]
    common: Common,
    /// Letters `abAB` for the Artin generators, tokens `s1 S2 …` for the dual ones.
    /// Omitted or `e` means the identity.
    #[arg(allow_hyphen_values = true)]
    word: Vec<String>,
}

#[derive(Debug, Args)]
struct PointArgs {
    /// Comma-separated coordinates, `inf` and `-inf` allowed.
    #[arg(long, allow_hyphen_values = true)]
    p: String,
    /// Positive word; `prefix(cycle)` repeats the cycle forever.
    #[arg(long, default_value = "")]
    z: String,
    /// Treat `z` as a truncated prefix of an infinite word.
    #[arg(long)]
    infinite: bool,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Left normal form and its π vector.
    Nf(WordArgs),
    /// Word length of an element, or distance to it from `--from`.
    Dist {
        #[command(flatten)]
        args: WordArgs,
        #[arg(long)]
        from: Option<String>,
    },
    /// Whether a word is geodesic.
    Geo(WordArgs),
    /// A geodesic representative of an element.
    Rep(WordArgs),
    /// Rewrites a word in the other generating set.
    Convert(WordArgs),
    /// Evaluates the horofunction of a point at a word.
    Psi {
        #[command(flatten)]
        args: WordArgs,
        #[command(flatten)]
        point: PointArgs,
    },
    /// Classifies a point and prints its approach sequence and detour values.
    Busemann {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        point: PointArgs,
        /// Number of approach elements.
        #[arg(long, default_value_t = 30)]
        n: usize,
    },
    /// Coefficients of the dual geodesic growth series.
    Growth {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value = "all")]
        method: Method,
    },
    /// Checks formulas against breadth-first search.
    Verify {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        radius: u32,
        #[arg(long, value_enum, default_value = "all")]
        what: Check,
    },
}

/// Exit status and the text for each stream.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

type Record = Vec<(&'static str, String)>;

enum Output {
    Record(Record),
    Table(Vec<Record>),
    Both(Record, Vec<Record>),
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn render_record(r: &Record, format: Format, out: &mut String) {
    match format {
        Format::Plain => {
            for (k, v) in r {
                let _ = writeln!(out, "{k}={v}");
            }
        }
        Format::Csv => render_table(std::slice::from_ref(r), format, out),
    }
}

fn render_table(rows: &[Record], format: Format, out: &mut String) {
    match format {
        Format::Plain => {
            for r in rows {
                let line: Vec<String> = r.iter().map(|(k, v)| format!("{k}={v}")).collect();
                let _ = writeln!(out, "{}", line.join(" "));
            }
        }
        Format::Csv => {
            if let Some(first) = rows.first() {
                let header: Vec<&str> = first.iter().map(|(k, _)| *k).collect();
                let _ = writeln!(out, "{}", header.join(","));
            }
            for r in rows {
                let line: Vec<String> = r.iter().map(|(_, v)| csv_field(v)).collect();
                let _ = writeln!(out, "{}", line.join(","));
            }
        }
    }
}

fn show<L: Letter + std::fmt::Display>(w: &Word<L>) -> String {
    if w.is_empty() {
        "e".into()
    } else {
        w.to_string()
    }
}

fn join<T: ToString>(xs: impl IntoIterator<Item = T>) -> String {
    xs.into_iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

fn params_of(c: &Common) -> GroupParams {
    GroupParams::new(c.k as usize).expect("k validated by the parser")
}

fn artin_word(tokens: &[String]) -> Result<ArtinWord, Error> {
    let text = tokens.concat();
    if text == "e" {
        return Ok(ArtinWord::new());
    }
    ArtinWord::parse(&text)
}

fn dual_word(tokens: &[String], params: GroupParams) -> Result<DualWord, Error> {
    let text = tokens.join(" ");
    if text.trim() == "e" {
        return Ok(DualWord::new());
    }
    DualWord::parse(&text, params)
}

fn nf(a: &WordArgs) -> Result<Output, Error> {
    let params = params_of(&a.common);
    Ok(Output::Record(match a.common.gens {
        GensArg::Artin => {
            let x = normal_form(&artin_word(&a.word)?, params);
            vec![
                ("r", x.delta_exponent().to_string()),
                ("factors", join(x.factors())),
                ("pi", join(x.pi())),
            ]
        }
        GensArg::Dual => {
            let x = dual_normal_form(&dual_word(&a.word, params)?, params);
            vec![
                ("r", x.delta_exponent().to_string()),
                ("factors", join(x.factors().iter().map(|i| format!("s{i}")))),
                ("pi", join(x.pi())),
            ]
        }
    }))
}

fn dist(a: &WordArgs, from: Option<&str>) -> Result<Output, Error> {
    let params = params_of(&a.common);
    let from: Vec<String> = from.map(|s| vec![s.to_string()]).unwrap_or_default();
    let d = match a.common.gens {
        GensArg::Artin => {
            let y = artin_word(&from)?;
            normal_form(&y.inverse().concat(&artin_word(&a.word)?), params).distance()
        }
        GensArg::Dual => {
            let y = dual_word(&from, params)?;
            dual_normal_form(&y.inverse().concat(&dual_word(&a.word, params)?), params).distance()
        }
    };
    Ok(Output::Record(vec![("dist", d.to_string())]))
}

fn geo(a: &WordArgs) -> Result<Output, Error> {
    let params = params_of(&a.common);
    let (g, p, n, len, d) = match a.common.gens {
        GensArg::Artin => {
            let w = artin_word(&a.word)?;
            let d = normal_form(&w, params).distance();
            (is_geodesic_artin(&w, params), poss(&w, params), negg(&w, params), w.len(), d)
        }
        GensArg::Dual => {
            let w = dual_word(&a.word, params)?;
            let d = dual_normal_form(&w, params).distance();
            (is_geodesic_dual(&w, params), dual_poss(&w, params), dual_negg(&w, params), w.len(), d)
        }
    };
    Ok(Output::Record(vec![
        ("geodesic", g.to_string()),
        ("poss", p.to_string()),
        ("negg", n.to_string()),
        ("length", len.to_string()),
        ("dist", d.to_string()),
    ]))
}

fn rep(a: &WordArgs) -> Result<Output, Error> {
    let params = params_of(&a.common);
    let (w, len) = match a.common.gens {
        GensArg::Artin => {
            let r = normal_form(&artin_word(&a.word)?, params).geodesic_representative();
            (show(&r), r.len())
        }
        GensArg::Dual => {
            let r = dual_normal_form(&dual_word(&a.word, params)?, params).geodesic_representative();
            (show(&r), r.len())
        }
    };
    Ok(Output::Record(vec![("word", w), ("length", len.to_string())]))
}

fn convert(a: &WordArgs) -> Result<Output, Error> {
    let params = params_of(&a.common);
    let w = match a.common.gens {
        GensArg::Artin => show(&artin_to_dual(&artin_word(&a.word)?)),
        GensArg::Dual => show(&dual_to_artin(&dual_word(&a.word, params)?)),
    };
    Ok(Output::Record(vec![("word", w)]))
}

fn coordinates(p: &str) -> Result<Vec<ExtendedInt>, Error> {
    parse_coordinates(p).map_err(|msg| Error::Syntax { pos: 0, msg })
}

fn psi_cmd(a: &WordArgs, pt: &PointArgs) -> Result<Output, Error> {
    let params = params_of(&a.common);
    let p = coordinates(&pt.p)?;
    let value = match a.common.gens {
        GensArg::Artin => {
            let point = OmegaPoint::new(p, ZWord::parse(&pt.z, pt.infinite, params)?)?;
            psi(&point, &artin_word(&a.word)?)?
        }
        GensArg::Dual => {
            let point = DualOmegaPoint::new(p, DualZWord::parse(&pt.z, pt.infinite, params)?)?;
            dual_psi(&point, &dual_word(&a.word, params)?)?
        }
    };
    Ok(Output::Record(vec![("psi", value.to_string())]))
}

fn busemann_cmd(c: &Common, pt: &PointArgs, n: usize) -> Result<Output, Error> {
    let params = params_of(c);
    let p = coordinates(&pt.p)?;
    let mut rows = Vec::new();
    let head = match c.gens {
        GensArg::Artin => {
            let point = OmegaPoint::new(p, ZWord::parse(&pt.z, pt.infinite, params)?)?;
            let b = is_busemann(&point);
            if point.membership() == Membership::Boundary {
                for i in 1..=n {
                    let x = if b { approach_element(&point, i)? } else { density_element(&point, i)? };
                    rows.push(vec![
                        ("n", i.to_string()),
                        ("element", show(&x)),
                        ("detour", detour_upper(&point, i)?.to_string()),
                    ]);
                }
            }
            vec![
                ("membership", point.membership().to_string()),
                ("class", point.class().to_string()),
                ("busemann", b.to_string()),
            ]
        }
        GensArg::Dual => {
            let point = DualOmegaPoint::new(p, DualZWord::parse(&pt.z, pt.infinite, params)?)?;
            let boundary = point.membership() == Membership::Boundary;
            if boundary {
                for i in 1..=n {
                    rows.push(vec![
                        ("n", i.to_string()),
                        ("element", show(&dual_approach_element(&point, i)?)),
                        ("detour", dual_detour(&point, i)?.to_string()),
                    ]);
                }
            }
            vec![
                ("membership", point.membership().to_string()),
                ("class", point.class().to_string()),
                ("busemann", boundary.to_string()),
            ]
        }
    };
    Ok(if rows.is_empty() { Output::Record(head) } else { Output::Both(head, rows) })
}

fn growth_cmd(c: &Common, n: usize, method: Method) -> Result<Output, Error> {
    let params = params_of(c);
    let want = |m| method == m || method == Method::All;
    let closed = want(Method::Closed).then(|| closed_form_counts(params, n));
    let automaton = want(Method::Automaton).then(|| build_acceptor(params).counts(n));
    let mut rows = Vec::with_capacity(n + 1);
    for i in 0..=n {
        let mut values: Vec<(&'static str, String)> = Vec::new();
        if let Some(c) = &closed {
            values.push(("closed", c[i].to_string()));
        }
        if want(Method::Enum) {
            values.push(("enum", count_geodesics_enumeration(params, i).to_string()));
        }
        if let Some(a) = &automaton {
            values.push(("automaton", a[i].to_string()));
        }
        let agree = values.windows(2).all(|w| w[0].1 == w[1].1);
        let mut row = vec![("n", i.to_string()), ("a_n", values[0].1.clone())];
        row.extend(values);
        row.push(("agree", agree.to_string()));
        rows.push(row);
    }
    Ok(Output::Table(rows))
}

fn verify_with<P: Presentation>(params: GroupParams, radius: u32, what: Check) -> Result<Vec<Report>, Error> {
    let ball = CayleyBall::<P>::build(params, radius)?;
    let mut reports = Vec::new();
    if matches!(what, Check::Dist | Check::All) {
        reports.push(verify_distance_formula(&ball));
    }
    if matches!(what, Check::Geo | Check::All) {
        reports.push(verify_geodesic_criterion(&ball));
    }
    if matches!(what, Check::Axioms | Check::All) {
        reports.push(verify_length_axioms(&ball));
    }
    Ok(reports)
}

fn verify_cmd(c: &Common, radius: u32, what: Check) -> Result<(Output, bool), Error> {
    let params = params_of(c);
    let reports = match c.gens {
        GensArg::Artin => verify_with::<Artin>(params, radius, what)?,
        GensArg::Dual => verify_with::<Dual>(params, radius, what)?,
    };
    let ok = reports.iter().all(Report::passed);
    let rows = reports
        .iter()
        .map(|r| {
            vec![
                ("check", r.check.to_string()),
                ("checked", r.checked.to_string()),
                ("failures", r.failures.len().to_string()),
                ("result", if r.passed() { "PASS" } else { "FAIL" }.to_string()),
            ]
        })
        .collect();
    Ok((Output::Table(rows), ok))
}

fn is_usage(e: &Error) -> bool {
    matches!(e, Error::InvalidK(_) | Error::Syntax { .. } | Error::IndexOutOfRange { .. })
}

/// Parses `args` (including the program name) and runs the subcommand.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let (stdout, stderr) = if code == 0 { (text, String::new()) } else { (String::new(), text) };
            return Outcome { code, stdout, stderr };
        }
    };
    let format = match &cli.command {
        Command::Nf(a) | Command::Geo(a) | Command::Rep(a) | Command::Convert(a) => a.common.format,
        Command::Dist { args, .. } | Command::Psi { args, .. } => args.common.format,
        Command::Busemann { common, .. } | Command::Growth { common, .. } | Command::Verify { common, .. } => {
            common.format
        }
    };
    let result = match &cli.command {
        Command::Nf(a) => nf(a).map(|o| (o, true)),
        Command::Dist { args, from } => dist(args, from.as_deref()).map(|o| (o, true)),
        Command::Geo(a) => geo(a).map(|o| (o, true)),
        Command::Rep(a) => rep(a).map(|o| (o, true)),
        Command::Convert(a) => convert(a).map(|o| (o, true)),
        Command::Psi { args, point } => psi_cmd(args, point).map(|o| (o, true)),
        Command::Busemann { common, point, n } => busemann_cmd(common, point, *n).map(|o| (o, true)),
        Command::Growth { common, n, method } => growth_cmd(common, *n, *method).map(|o| (o, true)),
        Command::Verify { common, radius, what } => verify_cmd(common, *radius, *what),
    };
    match result {
        Ok((output, ok)) => {
            let mut stdout = String::new();
            match output {
                Output::Record(r) => render_record(&r, format, &mut stdout),
                Output::Table(t) => render_table(&t, format, &mut stdout),
                Output::Both(r, t) => {
                    render_record(&r, format, &mut stdout);
                    if format == Format::Csv {
                        stdout.push('\n');
                    }
                    render_table(&t, format, &mut stdout);
                }
            }
            Outcome { code: if ok { 0 } else { 1 }, stdout, stderr: String::new() }
        }
        Err(e) => Outcome {
            code: if is_usage(&e) { 2 } else { 1 },
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        },
    }
}
