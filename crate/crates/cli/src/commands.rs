use std::fmt::Write as _;
use std::io::Read;

use serde::Serialize;
use serde_json::{json, Value};

use gn3_core::cancellability::{analyze, Certificate};
use gn3_core::explorer::{bfs_connect, is_locally_rigid, verify_chain, SearchConfig, SearchOutcome};
use gn3_core::homomorphisms::{f_ijk, phi, pi, pr, tilde_phi};
use gn3_core::invariants::{
    crossing_indices, occurrence_indices, reduce, w_invariant, IndexConvention, TripleSelector,
};
use gn3_core::presentations::{pb_relators, Rewritable};
use gn3_core::words::{BraidWord, FreeProductWord, Gn3Word, Index, TildeWord, Triple, Word};
use gn3_core::Error;

use crate::{Bounds, Cli, Command, Explore, Kind, RewriteKind, Through, Via};

pub struct Report {
    pub text: String,
    pub json: Value,
}

#[derive(Debug)]
pub enum CliError {
    /// Malformed input or flags.
    Usage(String),
    /// Well-formed input the computation rejects.
    Domain(Error),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Domain(_) => 1,
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Usage(m) => f.write_str(m),
            CliError::Domain(e) => write!(f, "{e}"),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Domain(e)
    }
}

type Result<T> = std::result::Result<T, CliError>;

fn read_stdin() -> Result<String> {
    let mut s = String::new();
    std::io::stdin().read_to_string(&mut s).map_err(|e| CliError::Usage(format!("reading stdin: {e}")))?;
    Ok(s)
}

fn word_text(arg: &str) -> Result<String> {
    if arg == "-" {
        read_stdin()
    } else {
        Ok(arg.to_string())
    }
}

/// Parse errors are reported as usage errors, with the byte position.
fn parse<L: gn3_core::words::Letter + gn3_core::words::ParseLetter>(arg: &str, n: Index) -> Result<Word<L>> {
    let text = word_text(arg)?;
    Word::parse(text.trim(), n).map_err(|e| CliError::Usage(format!("invalid word: {e}")))
}

fn selector(t: [Index; 3], bound: Index) -> Result<TripleSelector> {
    TripleSelector::new(t[0], t[1], t[2], bound).map_err(|e| CliError::Usage(format!("invalid --triple: {e}")))
}

fn widened(n: Index) -> Result<Index> {
    n.checked_add(1).ok_or_else(|| CliError::Usage("--n too large".into()))
}

fn fp_strings(w: &FreeProductWord) -> Vec<String> {
    w.letters().iter().map(ToString::to_string).collect()
}

fn to_json<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("serializable")
}

pub fn run(cli: &Cli) -> Result<Report> {
    let conv: IndexConvention = cli.index_convention.into();
    match &cli.command {
        Command::Map { via, n, triple, word } => map(*via, *n, *triple, word),
        Command::Invariant { n, triple, kind, through, word } => invariant(*n, *triple, *kind, *through, word, conv),
        Command::Cancellable { n, word } => cancellable(*n, word, conv),
        Command::Explore { action } => explore(action),
        Command::Relators { n } => Ok(relators(*n)),
        Command::Indices { n, triple, kind, word } => indices(*n, *triple, *kind, word, conv),
    }
}

fn map(via: Via, n: Index, triple: Option<[Index; 3]>, word: &str) -> Result<Report> {
    let (name, input, image) = match via {
        Via::Phi => {
            let w: BraidWord = parse(word, n)?;
            ("phi", w.to_string(), phi(&w).to_string())
        }
        Via::TildePhi => {
            let w: BraidWord = parse(word, n)?;
            ("tilde-phi", w.to_string(), tilde_phi(&w).to_string())
        }
        Via::F => {
            let t = triple.ok_or_else(|| CliError::Usage("--via f needs --triple i,j,k".into()))?;
            let t = Triple::new(t[0], t[1], t[2]).map_err(|e| CliError::Usage(format!("invalid --triple: {e}")))?;
            let w: BraidWord = parse(word, n)?;
            ("f", w.to_string(), f_ijk(&w, t).to_string())
        }
        Via::Pr => {
            let w: TildeWord = parse(word, n)?;
            ("pr", w.to_string(), pr(&w).to_string())
        }
        Via::Pi => {
            let w: TildeWord = parse(word, n)?;
            widened(n)?;
            ("pi", w.to_string(), pi(&w).to_string())
        }
    };
    Ok(Report { json: json!({ "via": name, "input": input, "image": image }), text: image })
}

fn invariant_report(sel: &TripleSelector, raw: FreeProductWord) -> Report {
    let reduced = reduce(&raw);
    let trivial = reduced.is_empty();
    let text = format!("selector {sel}\nraw      {raw}\nreduced  {reduced}\ntrivial  {trivial}");
    let json = json!({
        "selector": sel.to_string(),
        "bound": sel.bound,
        "letters": fp_strings(&raw),
        "reduced": fp_strings(&reduced),
        "trivial": trivial,
    });
    Report { text, json }
}

/// The `G_m^3` word whose selected letters are read, with its index bound.
fn gn3_image(n: Index, kind: Kind, through: Through, word: &str) -> Result<Gn3Word> {
    Ok(match (kind, through) {
        (Kind::Braid, Through::TildePhi) => {
            widened(n)?;
            pi(&tilde_phi(&parse(word, n)?))
        }
        (Kind::Braid, Through::Phi) => phi(&parse(word, n)?),
        (Kind::Gn3, _) => parse(word, n)?,
        (Kind::Tilde, _) => {
            widened(n)?;
            pi(&parse(word, n)?)
        }
    })
}

fn invariant(n: Index, t: [Index; 3], kind: Kind, through: Through, word: &str, conv: IndexConvention) -> Result<Report> {
    let image = gn3_image(n, kind, through, word)?;
    let sel = selector(t, image.bound())?;
    Ok(invariant_report(&sel, w_invariant(&image, &sel, conv)?))
}

fn cancellable(n: Index, word: &str, conv: IndexConvention) -> Result<Report> {
    let w: BraidWord = parse(word, n)?;
    widened(n)?;
    let reports = analyze(&w, conv);
    let mut text = String::new();
    if reports.is_empty() {
        text.push_str("no b_ij ... b_ij^-1 pairs");
    }
    for r in &reports {
        let p = &r.pair;
        let verdict = to_json(&r.verdict);
        let _ = write!(text, "pair b[{},{}] at {}..{}: {}", p.i, p.j, p.left, p.right, verdict.as_str().unwrap_or(""));
        for c in &r.certificates {
            match c {
                Certificate::Parity { k } => {
                    let _ = write!(text, "\n  parity k={k}");
                }
                Certificate::InvariantObstruction { selector, reduced } => {
                    let _ = write!(text, "\n  invariant-obstruction {selector} reduced {reduced}");
                }
                Certificate::Inconclusive => {
                    let _ = write!(text, "\n  inconclusive");
                }
            }
        }
        text.push('\n');
    }
    Ok(Report { text: text.trim_end().to_string(), json: to_json(&reports) })
}

fn config(b: &Bounds) -> Result<SearchConfig> {
    let cfg = SearchConfig {
        max_length: b.max_length,
        max_states: b.max_states,
        max_depth: b.max_depth,
        allow_insertions: b.allow_insertions,
    };
    cfg.validate().map_err(|e| CliError::Usage(e.to_string()))?;
    Ok(cfg)
}

fn explore(action: &Explore) -> Result<Report> {
    match action {
        Explore::Connect { n, kind, bounds, from, to } => {
            let cfg = config(bounds)?;
            match kind {
                RewriteKind::Gn3 => connect::<Gn3Word>(&parse(from, *n)?, &parse(to, *n)?, &cfg),
                RewriteKind::Tilde => connect::<TildeWord>(&parse(from, *n)?, &parse(to, *n)?, &cfg),
            }
        }
        Explore::Chain { n, kind, words } => {
            let texts: Vec<String> = if words.len() == 1 && words[0] == "-" {
                read_stdin()?.lines().map(str::trim).filter(|l| !l.is_empty()).map(String::from).collect()
            } else {
                words.clone()
            };
            match kind {
                RewriteKind::Gn3 => chain::<Gn3Word>(&texts, *n),
                RewriteKind::Tilde => chain::<TildeWord>(&texts, *n),
            }
        }
        Explore::Rigid { n, kind, word } => match kind {
            RewriteKind::Gn3 => Ok(rigid::<Gn3Word>(&parse(word, *n)?)),
            RewriteKind::Tilde => Ok(rigid::<TildeWord>(&parse(word, *n)?)),
        },
    }
}

fn connect<W>(from: &W, to: &W, cfg: &SearchConfig) -> Result<Report>
where
    W: Rewritable + Serialize,
    W::Rule: Serialize,
{
    let outcome = bfs_connect(from, to, cfg)?;
    let text = match &outcome {
        SearchOutcome::Found { path, stats } => {
            let mut t = format!("found path of {} steps ({} states explored)\n0: {}", path.steps.len(), stats.explored_states, path.start);
            for (k, s) in path.steps.iter().enumerate() {
                let _ = write!(t, "\n{}: {}   [rule {} {:?} at {}]", k + 1, s.result, s.rule, s.direction, s.position);
            }
            t
        }
        SearchOutcome::NotFoundWithinBounds { stats } => format!(
            "not found within bounds ({} states explored, depth {}, {})",
            stats.explored_states,
            stats.depth_reached,
            if stats.exhausted { "search space exhausted" } else { "bounds hit" }
        ),
    };
    Ok(Report { text, json: to_json(&outcome) })
}

fn chain<W>(texts: &[String], n: Index) -> Result<Report>
where
    W: Rewritable,
    W: TryParse,
    W::Rule: Serialize,
{
    if texts.len() < 2 {
        return Err(CliError::Usage("a chain needs at least two words".into()));
    }
    let words = texts.iter().map(|t| W::try_parse(t, n)).collect::<Result<Vec<W>>>()?;
    let report = verify_chain(&words)?;
    let mut text = String::new();
    for l in &report.links {
        match &l.step {
            Some(s) => {
                let _ = writeln!(text, "pair {}: rule {} {:?} at {}", l.pair, s.rule, s.direction, s.position);
            }
            None => {
                let _ = writeln!(text, "pair {}: identical", l.pair);
            }
        }
    }
    match report.broken_at {
        Some(k) => {
            let _ = write!(text, "broken at pair {k}");
        }
        None => text.push_str("verified"),
    }
    Ok(Report { text, json: to_json(&report) })
}

pub trait TryParse: Sized {
    fn try_parse(text: &str, n: Index) -> Result<Self>;
}

impl<L: gn3_core::words::Letter + gn3_core::words::ParseLetter> TryParse for Word<L> {
    fn try_parse(text: &str, n: Index) -> Result<Self> {
        parse(text, n)
    }
}

fn rigid<W>(w: &W) -> Report
where
    W: Rewritable,
    W::Rule: Serialize,
{
    let report = is_locally_rigid(w);
    let mut text = format!("rigid {}", report.rigid);
    for a in &report.applicable {
        let _ = write!(text, "\n  rule {} {:?} at {}", a.rule, a.direction, a.position);
    }
    Report { text, json: to_json(&report) }
}

fn relators(n: Index) -> Report {
    let rels = pb_relators(n);
    let text = rels
        .iter()
        .map(|r| {
            let (i, j, rr, s) = r.parameters;
            format!("{} (i,j,r,s)=({i},{j},{rr},{s}): {}", to_json(&r.family).as_str().unwrap_or(""), r.word)
        })
        .collect::<Vec<_>>()
        .join("\n");
    Report { text, json: to_json(&rels) }
}

fn indices(n: Index, t: [Index; 3], kind: Kind, word: &str, conv: IndexConvention) -> Result<Report> {
    if kind == Kind::Braid {
        let w: BraidWord = parse(word, n)?;
        let sel = selector(t, widened(n)?)?;
        let rows = crossing_indices(&w, &sel, conv)?;
        let text = rows
            .iter()
            .map(|r| format!("crossing {} ({}) position {}: {}", r.crossing, w.letters()[r.crossing], r.position, r.index))
            .collect::<Vec<_>>()
            .join("\n");
        return Ok(Report { text, json: json!({ "selector": sel.to_string(), "occurrences": to_json(&rows) }) });
    }
    let image = gn3_image(n, kind, Through::TildePhi, word)?;
    let sel = selector(t, image.bound())?;
    let rows = occurrence_indices(&image, &sel, conv)?;
    let text = rows.iter().map(|r| format!("position {}: {}", r.position, r.index)).collect::<Vec<_>>().join("\n");
    Ok(Report { text, json: json!({ "selector": sel.to_string(), "occurrences": to_json(&rows) }) })
}
