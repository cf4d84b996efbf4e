use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use symset::io::{format_multiset, parse_multiset};
use symset::perm::{conjugacy_class, d_class, inverse_j_class, shifted_shuffle, shuffle, Word};
use symset::qsym::{f_to_m, q_of, Classification};
use symset::tableau::{inverse_promote, knuth_class, promote, promote_v, rs};
use symset::verifier::campaign::{run_campaign, CampaignConfig, CampaignReport, Mode};
use symset::verifier::{check_theorem, Check, ConditionReport};
use symset::{Partition, PermMultiset, Permutation, StandardTableau, Subset};

#[derive(Parser)]
#[command(name = "symset", version, about = "Descent statistics and symmetry checks for multisets of permutations")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write output to a file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Print Q(B) in the F and M bases.
    Qsym { file: PathBuf },
    /// Classify B as not_symmetric, symmetric_not_fine or fine.
    Classify { file: PathBuf },
    /// Check the five equivalent conditions on a multiset, or run a campaign.
    Verify {
        file: Option<PathBuf>,
        /// JSON campaign configuration; the flags below override its fields.
        #[arg(long)]
        campaign: Option<PathBuf>,
        #[arg(long)]
        mode: Option<String>,
        #[arg(long)]
        degree: Option<usize>,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long)]
        samples: Option<usize>,
        #[arg(long = "max-mult")]
        max_mult: Option<u64>,
        /// Number of instances re-run through the generic checkers.
        #[arg(long)]
        crosscheck: Option<usize>,
    },
    /// Apply a window promotion `A B`, or a promotion set `--set v1,v2,...`.
    Promote {
        file: PathBuf,
        a: Option<usize>,
        b: Option<usize>,
        #[arg(long, value_delimiter = ',', conflicts_with_all = ["a", "b"])]
        set: Option<Vec<usize>>,
        /// Apply the inverse of the window promotion.
        #[arg(long, conflicts_with = "set")]
        inverse: bool,
    },
    /// Robinson-Schensted insertion and recording tableaux.
    Rs { permutation: String },
    /// All permutations whose insertion tableau is the given one.
    Knuth { file: PathBuf },
    /// The conjugacy class of cycle type LAMBDA in S_N.
    Conj { n: usize, lambda: String },
    /// Shuffle of two permutations, the second shifted above the first.
    Shuffle {
        pi: String,
        tau: String,
        /// Treat the arguments as words on disjoint alphabets and do not shift.
        #[arg(long)]
        plain: bool,
    },
    /// Inverses of the permutations with descent set exactly J (`-` for empty).
    Dclass { n: usize, j: String },
    /// Inverses of the permutations with descent set inside J (`-` for empty).
    Jclass { n: usize, j: String },
}

enum CliError {
    Core(symset::Error),
    Io(PathBuf, std::io::Error),
    Usage(String),
    /// Output was produced but reports an internal inconsistency.
    Inconsistent(Output, String),
}

impl From<symset::Error> for CliError {
    fn from(e: symset::Error) -> Self {
        CliError::Core(e)
    }
}

struct Output {
    text: String,
    json: Value,
}

type CliResult = Result<Output, CliError>;

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|e| CliError::Io(path.to_path_buf(), e))
}

fn read_multiset(path: &Path) -> Result<PermMultiset, CliError> {
    Ok(parse_multiset(&read(path)?, None)?)
}

fn read_tableau(path: &Path) -> Result<StandardTableau, CliError> {
    Ok(read(path)?.parse()?)
}

fn parse_subset(n: usize, text: &str) -> Result<Subset, CliError> {
    let t = text.trim().trim_start_matches('{').trim_end_matches('}');
    let elems = if t.is_empty() || t == "-" {
        Vec::new()
    } else {
        t.split(',')
            .map(|x| x.trim().parse::<usize>().map_err(|_| CliError::Usage(format!("invalid subset element {x:?}"))))
            .collect::<Result<Vec<_>, _>>()?
    };
    if let Some(&bad) = elems.iter().find(|&&e| e == 0 || e >= n) {
        return Err(CliError::Usage(format!("{bad} is not in [1, {}]", n.saturating_sub(1))));
    }
    Ok(Subset::from_elements(elems)?)
}

fn parse_partition(n: usize, text: &str) -> Result<Partition, CliError> {
    let parts: Vec<usize> = if text.contains(',') {
        text.split(',')
            .map(|x| x.trim().parse().map_err(|_| CliError::Usage(format!("invalid part {x:?}"))))
            .collect::<Result<_, _>>()?
    } else {
        text.chars()
            .map(|c| c.to_digit(10).map(|d| d as usize).ok_or_else(|| CliError::Usage(format!("invalid part {c:?}"))))
            .collect::<Result<_, _>>()?
    };
    let lambda = Partition::from_unsorted(parts)?;
    if lambda.size() != n {
        return Err(CliError::Usage(format!("{lambda} is not a partition of {n}")));
    }
    Ok(lambda)
}

fn perm_list(n: usize, perms: Vec<Permutation>) -> CliResult {
    let b = PermMultiset::from_perms(n, perms.iter().cloned())?;
    Ok(Output {
        text: format_multiset(&b),
        json: json!({ "degree": n, "count": perms.len(), "permutations": perms }),
    })
}

fn cmd_qsym(file: &Path) -> CliResult {
    let b = read_multiset(file)?;
    let f = q_of(&b);
    let m = f_to_m(&f)?;
    Ok(Output {
        text: format!("{f}{m}"),
        json: json!({ "degree": b.degree(), "size": b.size(), "F": f, "M": m }),
    })
}

fn cmd_classify(file: &Path) -> CliResult {
    let b = read_multiset(file)?;
    let c = symset::qsym::classify(&b);
    let mut text = format!("{}\n", c.label());
    let json = match &c {
        Classification::NotSymmetric { witness } => {
            let _ = writeln!(
                text,
                "M[{}] : {} but M[{}] : {}",
                join(&witness.alpha),
                witness.alpha_coeff,
                join(&witness.beta),
                witness.beta_coeff
            );
            json!({ "classification": c.label(), "witness": witness })
        }
        Classification::SymmetricNotFine { schur } | Classification::Fine { schur } => {
            text.push_str(&schur.to_string());
            json!({ "classification": c.label(), "schur": schur })
        }
    };
    Ok(Output { text, json })
}

fn join(parts: &[usize]) -> String {
    let p: Vec<String> = parts.iter().map(|x| x.to_string()).collect();
    format!("({})", p.join(","))
}

fn check_line(name: &str, c: &Check, secs: f64) -> String {
    match &c.witness {
        Some(w) => format!("{name}: {} ({secs:.3}s) witness {}\n", c.holds, serde_json::to_string(w).unwrap_or_default()),
        None => format!("{name}: {} ({secs:.3}s)\n", c.holds),
    }
}

fn report_text(r: &ConditionReport) -> String {
    let checks = [
        ("a_d_symmetric", &r.a_d_symmetric),
        ("b_d_commutative", &r.b_d_commutative),
        ("c_right_invariant", &r.c_right_invariant),
        ("d_left_invariant", &r.d_left_invariant),
        ("e_symmetric", &r.e_symmetric),
    ];
    let mut text: String = checks.iter().zip(r.timings).map(|((n, c), t)| check_line(n, c, t)).collect();
    let _ = writeln!(text, "agree: {}", r.agree());
    text
}

fn campaign_text(r: &CampaignReport) -> String {
    let mut t = String::new();
    let _ = writeln!(t, "mode: {:?}  degree: {}  seed: {:?}", r.config.mode, r.config.degree, r.seed);
    let p = &r.population;
    let _ = writeln!(
        t,
        "instances: {}  symmetric: {}  fine: {}  symmetric_not_fine: {}",
        p.instances, p.symmetric, p.fine, p.symmetric_not_fine
    );
    for (k, v) in &p.families {
        let _ = writeln!(t, "  family {k}: {v}");
    }
    let _ = writeln!(t, "all five agree: {}", r.agreement.all_agree);
    for (pattern, count) in &r.agreement.patterns {
        let _ = writeln!(t, "  pattern {pattern}: {count}");
    }
    let v = &r.violations;
    let _ = writeln!(
        t,
        "disagreements: {}  closure violations: {}  D-class commutation violations on fine sets: {}",
        v.disagreements, v.closure, v.er_on_fine
    );
    let _ = writeln!(t, "crosschecked: {}  mismatches: {}", r.crosschecks.checked, v.crosscheck_mismatches);
    for f in &r.disagreements {
        let _ = writeln!(t, "  disagreement {} [{}]", f.multiset, f.flags);
    }
    for f in &r.specimens.symmetric_not_fine {
        let _ = writeln!(t, "  symmetric_not_fine {}", f.multiset);
    }
    let _ = writeln!(t, "wall time: {:.2}s", r.wall_time_secs);
    t
}

#[allow(clippy::too_many_arguments)]
fn cmd_verify(
    file: Option<&Path>,
    campaign: Option<&Path>,
    mode: Option<&str>,
    degree: Option<usize>,
    seed: Option<u64>,
    samples: Option<usize>,
    max_mult: Option<u64>,
    crosscheck: Option<usize>,
) -> CliResult {
    let campaign_requested = campaign.is_some() || mode.is_some();
    match (file, campaign_requested) {
        (Some(_), true) => return Err(CliError::Usage("give either a multiset file or a campaign, not both".into())),
        (None, false) => return Err(CliError::Usage("give a multiset file, --campaign or --mode".into())),
        (Some(path), false) => {
            let b = read_multiset(path)?;
            let r = check_theorem(&b)?;
            let out = Output {
                text: report_text(&r),
                json: serde_json::to_value(&r).expect("report serializes"),
            };
            if !r.agree() {
                return Err(CliError::Inconsistent(out, "the five conditions disagree".into()));
            }
            return Ok(out);
        }
        (None, true) => {}
    }
    let mut cfg: CampaignConfig = match campaign {
        Some(path) => serde_json::from_str(&read(path)?)
            .map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))?,
        None => CampaignConfig::new(
            degree.ok_or_else(|| CliError::Usage("--degree is required without --campaign".into()))?,
            Mode::Structured,
        ),
    };
    if let Some(m) = mode {
        cfg.mode = m.parse()?;
    }
    if let Some(d) = degree {
        cfg.degree = d;
    }
    if seed.is_some() {
        cfg.seed = seed;
    }
    if let Some(s) = samples {
        cfg.samples = s;
    }
    if let Some(m) = max_mult {
        cfg.max_multiplicity = m;
    }
    if let Some(c) = crosscheck {
        cfg.crosscheck = c;
    }
    let r = run_campaign(&cfg)?;
    let out = Output {
        text: campaign_text(&r),
        json: serde_json::to_value(&r).expect("report serializes"),
    };
    if !r.consistent() {
        return Err(CliError::Inconsistent(out, "campaign found disagreements or checker mismatches".into()));
    }
    Ok(out)
}

fn cmd_promote(file: &Path, a: Option<usize>, b: Option<usize>, set: Option<&[usize]>, inverse: bool) -> CliResult {
    let t = read_tableau(file)?;
    match (a, b, set) {
        (_, _, Some(v)) => {
            let r = promote_v(&t, v)?;
            Ok(Output {
                text: r.to_string(),
                json: json!({ "input": t, "set": v, "result": r }),
            })
        }
        (Some(a), Some(b), None) if inverse => {
            let r = inverse_promote(&t, a, b)?;
            Ok(Output {
                text: r.to_string(),
                json: json!({ "input": t, "window": [a, b], "inverse": true, "result": r }),
            })
        }
        (Some(a), Some(b), None) => {
            let (r, trace) = promote(&t, a, b)?;
            let path: Vec<String> = trace.path.iter().map(|(r, c)| format!("({r},{c})")).collect();
            Ok(Output {
                text: format!("{r}# path {}\n", path.join(" ")),
                json: json!({ "input": t, "window": [a, b], "result": r, "path": trace.path }),
            })
        }
        _ => Err(CliError::Usage("give a window `A B` or `--set`".into())),
    }
}

fn cmd_rs(text: &str) -> CliResult {
    let pi: Permutation = text.parse()?;
    let pair = rs(&pi);
    Ok(Output {
        text: format!("P:\n{}Q:\n{}", pair.p, pair.q),
        json: json!({ "permutation": pi, "p": pair.p, "q": pair.q }),
    })
}

fn cmd_knuth(file: &Path) -> CliResult {
    let t = read_tableau(file)?;
    perm_list(t.size(), knuth_class(&t).to_vec())
}

fn parse_word(text: &str) -> Result<Word, CliError> {
    let letters: Vec<u32> = if text.contains(',') {
        text.split(',')
            .map(|x| x.trim().parse().map_err(|_| CliError::Usage(format!("invalid letter {x:?}"))))
            .collect::<Result<_, _>>()?
    } else {
        text.chars()
            .map(|c| c.to_digit(10).ok_or_else(|| CliError::Usage(format!("invalid letter {c:?}"))))
            .collect::<Result<_, _>>()?
    };
    Ok(Word::new(letters)?)
}

fn cmd_shuffle(pi: &str, tau: &str, plain: bool) -> CliResult {
    if plain {
        let (u, v) = (parse_word(pi)?, parse_word(tau)?);
        let words = shuffle(&u, &v)?;
        let text: String = words.iter().map(|w| format!("{w}\n")).collect();
        let letters: Vec<&[u32]> = words.iter().map(Word::letters).collect();
        return Ok(Output {
            text,
            json: json!({ "count": words.len(), "words": letters }),
        });
    }
    let (p, t): (Permutation, Permutation) = (pi.parse()?, tau.parse()?);
    perm_list(p.degree() + t.degree(), shifted_shuffle(&p, &t))
}

fn emit(cli: &Cli, out: &Output) -> Result<(), CliError> {
    let body = match cli.format {
        Format::Text => out.text.clone(),
        Format::Json => format!("{}\n", serde_json::to_string_pretty(&out.json).expect("json")),
    };
    match &cli.out {
        Some(path) => fs::write(path, body).map_err(|e| CliError::Io(path.clone(), e)),
        None => {
            print!("{body}");
            Ok(())
        }
    }
}

fn run(cli: &Cli) -> CliResult {
    match &cli.command {
        Command::Qsym { file } => cmd_qsym(file),
        Command::Classify { file } => cmd_classify(file),
        Command::Verify {
            file,
            campaign,
            mode,
            degree,
            seed,
            samples,
            max_mult,
            crosscheck,
        } => cmd_verify(
            file.as_deref(),
            campaign.as_deref(),
            mode.as_deref(),
            *degree,
            *seed,
            *samples,
            *max_mult,
            *crosscheck,
        ),
        Command::Promote { file, a, b, set, inverse } => cmd_promote(file, *a, *b, set.as_deref(), *inverse),
        Command::Rs { permutation } => cmd_rs(permutation),
        Command::Knuth { file } => cmd_knuth(file),
        Command::Conj { n, lambda } => perm_list(*n, conjugacy_class(*n, &parse_partition(*n, lambda)?)?),
        Command::Shuffle { pi, tau, plain } => cmd_shuffle(pi, tau, *plain),
        Command::Dclass { n, j } => perm_list(*n, d_class(*n, parse_subset(*n, j)?)?),
        Command::Jclass { n, j } => perm_list(*n, inverse_j_class(*n, parse_subset(*n, j)?)?),
    }
}

fn exit_code(e: &symset::Error) -> u8 {
    match e {
        symset::Error::Infeasible(_) => 3,
        e if e.is_internal() => 4,
        _ => 2,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let failure = match run(&cli) {
        Ok(out) => match emit(&cli, &out) {
            Ok(()) => return ExitCode::SUCCESS,
            Err(e) => e,
        },
        Err(e) => e,
    };
    let (code, message) = match failure {
        CliError::Core(e) => (exit_code(&e), e.to_string()),
        CliError::Io(path, e) => (2, format!("{}: {e}", path.display())),
        CliError::Usage(m) => (2, m),
        CliError::Inconsistent(out, m) => {
            if let Err(CliError::Io(path, e)) = emit(&cli, &out) {
                eprintln!("error: {}: {e}", path.display());
            }
            (4, m)
        }
    };
    eprintln!("error: {message}");
    ExitCode::from(code)
}
