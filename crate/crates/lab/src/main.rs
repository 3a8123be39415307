use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use arglab::formats::{
    parse_af, parse_alpha, parse_dimacs, parse_family, read_bytes, read_container, read_text,
    write_af, write_alpha, write_container, write_file,
};
use arglab::report::{attack_names, set_names, system_family, CorpusJson, SizeRowJson, SurveyJson};
use arglab::{parallel, LabError, LabResult};
use arglab_core::decisions::{
    compute_alpha, decide_pref_ext, decide_pref_ext_inf, decide_stab_ext, decide_stab_ext_inf,
};
use arglab_core::encodings::{
    decide, encode_adjacency, encode_tab, min_formula_length, preferred_function, size_report,
    truth_table, TruthTable, DEFAULT_LITERAL_CAP,
};
use arglab_core::generators::{gen_cycle, gen_isolated, gen_k3, gen_random};
use arglab_core::realisable::{
    condition_existential, condition_literal, prefilter, realise_bruteforce, PrefilterReason,
};
use arglab_core::reduction::{build_h_psi, random_corpus, GadgetVariant};
use arglab_core::semantics::{
    credulous, enumerate, is_coherent, is_preferred, oracle_extensions, sceptical,
};
use arglab_core::{ArgumentSystem, Semantics};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

#[derive(Parser)]
#[command(
    name = "arglab",
    version,
    about = "Experiments on preferred and stable extensions"
)]
struct Cli {
    /// Worker threads for survey and corpus runs.
    #[arg(long, global = true, default_value_t = 1)]
    threads: usize,
    /// Indent JSON output.
    #[arg(long, global = true)]
    pretty: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Test one set against a semantics.
    Check {
        #[arg(long)]
        af: PathBuf,
        #[arg(long, default_value = "")]
        set: String,
        #[arg(long, value_enum)]
        semantics: CheckSemantics,
    },
    /// List all preferred or stable extensions.
    Enumerate {
        #[arg(long)]
        af: PathBuf,
        #[arg(long, value_enum, default_value = "preferred")]
        semantics: ExtSemantics,
        #[arg(long, value_enum, default_value = "search")]
        method: Method,
    },
    /// Credulous or sceptical acceptance of one argument.
    Accept {
        #[arg(long)]
        af: PathBuf,
        #[arg(long)]
        arg: String,
        #[arg(long, value_enum, default_value = "credulous")]
        mode: Mode,
    },
    /// Whether every preferred extension is stable.
    Coherent {
        #[arg(long)]
        af: PathBuf,
    },
    /// Write the credulous-acceptance vector as an alpha file.
    Alpha {
        #[arg(long)]
        af: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// PREF-EXT or STAB-EXT.
    Decide {
        #[arg(long)]
        af: PathBuf,
        #[arg(long, default_value = "")]
        set: String,
        #[arg(long, value_enum)]
        problem: Problem,
    },
    /// PREF-EXT-INF or STAB-EXT-INF, given an acceptance vector.
    DecideInf {
        #[arg(long)]
        af: PathBuf,
        #[arg(long, default_value = "")]
        set: String,
        #[arg(long)]
        alpha: PathBuf,
        /// Skip validating the vector.
        #[arg(long)]
        trust: bool,
        #[arg(long, value_enum, default_value = "pref-ext")]
        problem: Problem,
    },
    /// Build the argument system for a 3-CNF formula.
    Reduce {
        #[arg(long)]
        cnf: PathBuf,
        #[arg(long)]
        out_af: PathBuf,
        #[arg(long)]
        out_alpha: PathBuf,
        #[arg(long)]
        out_query: PathBuf,
        #[arg(long, value_enum, default_value = "published")]
        variant: Variant,
    },
    /// Check the reduction's claims on one formula or a seeded corpus.
    VerifyReduction {
        #[command(flatten)]
        input: CnfInput,
        #[arg(long, value_enum, default_value = "published")]
        variant: Variant,
    },
    /// Write an encoding container.
    Encode {
        #[arg(long)]
        af: PathBuf,
        #[arg(long, value_enum)]
        scheme: SchemeArg,
        /// Defaults to preferred, or stable for adjacency.
        #[arg(long, value_enum)]
        semantics: Option<ExtSemantics>,
        #[arg(long)]
        out: PathBuf,
    },
    /// Decide membership from an encoding container alone.
    EncodeQuery {
        #[arg(long)]
        enc: PathBuf,
        #[arg(long, default_value = "")]
        set: String,
        /// Take argument names from this system instead of x1..xn.
        #[arg(long)]
        af: Option<PathBuf>,
    },
    /// Exact minimal formula length of a preferred-extension function.
    Minlen {
        #[command(flatten)]
        input: MinlenInput,
        /// Variable count for --table; inferred from its length otherwise.
        #[arg(long)]
        vars: Option<usize>,
        #[arg(long, default_value_t = DEFAULT_LITERAL_CAP)]
        cap: usize,
    },
    /// Realisability of a candidate family.
    Realisable {
        #[arg(long)]
        sets: PathBuf,
        #[arg(long, value_enum, default_value = "brute")]
        method: RealiseMethod,
        /// Permit the slow five-argument brute-force scan.
        #[arg(long)]
        allow_n5: bool,
    },
    /// Exhaustive realisability survey over all systems on n arguments.
    Survey {
        #[arg(long)]
        n: usize,
    },
    /// Write a generated system in AF format.
    Gen {
        #[command(flatten)]
        params: GenParams,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Encoding sizes and query costs, sweeping the family's size
    /// parameter up to the given value.
    Bench {
        #[command(flatten)]
        params: GenParams,
    },
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct CnfInput {
    #[arg(long)]
    cnf: Option<PathBuf>,
    /// "count,vars,clauses,seed"
    #[arg(long)]
    corpus: Option<String>,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct MinlenInput {
    #[arg(long)]
    af: Option<PathBuf>,
    /// Truth table in hex, most significant point first.
    #[arg(long)]
    table: Option<String>,
}

#[derive(Args)]
struct GenParams {
    #[arg(long, value_enum)]
    family: GenFamily,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    t: Option<usize>,
    #[arg(long, default_value_t = 0.5)]
    p: f64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Clone, Copy, ValueEnum)]
enum CheckSemantics {
    Preferred,
    Stable,
    Admissible,
    ConflictFree,
}

#[derive(Clone, Copy, ValueEnum)]
enum ExtSemantics {
    Preferred,
    Stable,
}

impl From<ExtSemantics> for Semantics {
    fn from(s: ExtSemantics) -> Self {
        match s {
            ExtSemantics::Preferred => Semantics::Preferred,
            ExtSemantics::Stable => Semantics::Stable,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    Search,
    Oracle,
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Credulous,
    Sceptical,
}

#[derive(Clone, Copy, ValueEnum)]
enum Problem {
    #[value(alias = "pref-ext-inf")]
    PrefExt,
    #[value(alias = "stab-ext-inf")]
    StabExt,
}

#[derive(Clone, Copy, ValueEnum)]
enum Variant {
    Published,
    Reversed,
    Repaired,
}

impl From<Variant> for GadgetVariant {
    fn from(v: Variant) -> Self {
        match v {
            Variant::Published => GadgetVariant::Published,
            Variant::Reversed => GadgetVariant::Reversed,
            Variant::Repaired => GadgetVariant::Repaired,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum SchemeArg {
    Tab,
    Truthtable,
    Adjacency,
}

#[derive(Clone, Copy, ValueEnum)]
enum RealiseMethod {
    Brute,
    Literal,
    Existential,
}

#[derive(Clone, Copy, ValueEnum)]
enum GenFamily {
    K3,
    Isolated,
    Cycle,
    Random,
}

fn main() -> ExitCode {
    let text = match run(Cli::parse()) {
        Ok(t) => t,
        Err(e) => {
            eprintln!("arglab: {e}");
            return ExitCode::from(e.exit_code() as u8);
        }
    };
    let mut out = std::io::stdout().lock();
    match out.write_all(text.as_bytes()).and_then(|()| out.flush()) {
        Err(e) if e.kind() != std::io::ErrorKind::BrokenPipe => {
            eprintln!("arglab: writing output: {e}");
            ExitCode::from(2)
        }
        _ => ExitCode::SUCCESS,
    }
}

/// One JSON document per run. Structs keep their field order; `json!`
/// maps come out with sorted keys.
fn render<T: Serialize>(v: &T, pretty: bool) -> String {
    let mut t = if pretty {
        serde_json::to_string_pretty(v)
    } else {
        serde_json::to_string(v)
    }
    .expect("reports always serialize");
    t.push('\n');
    t
}

fn load_af(path: &Path) -> LabResult<ArgumentSystem> {
    parse_af(&read_text(path)?)
}

fn usage(msg: impl Into<String>) -> LabError {
    LabError::Usage(msg.into())
}

fn run(cli: Cli) -> LabResult<String> {
    let threads = cli.threads.max(1);
    let pretty = cli.pretty;
    let json = |v: Value| render(&v, pretty);
    Ok(match cli.command {
        Command::Check { af, set, semantics } => {
            let sys = load_af(&af)?;
            let s = sys.parse_set(&set)?;
            let answer = match semantics {
                CheckSemantics::Preferred => is_preferred(&sys, s)?,
                CheckSemantics::Stable => sys.is_stable(s)?,
                CheckSemantics::Admissible => sys.is_admissible(s)?,
                CheckSemantics::ConflictFree => sys.is_conflict_free(s)?,
            };
            json(json!({ "answer": answer }))
        }
        Command::Enumerate {
            af,
            semantics,
            method,
        } => {
            let sys = load_af(&af)?;
            let family = match method {
                Method::Search => enumerate(&sys, semantics.into())?,
                Method::Oracle => oracle_extensions(&sys, semantics.into())?,
            };
            json(json!({
                "count": family.len(),
                "extensions": system_family(&sys, &family),
            }))
        }
        Command::Accept { af, arg, mode } => {
            let sys = load_af(&af)?;
            let x = sys
                .index_of(&arg)
                .ok_or_else(|| usage(format!("unknown argument `{arg}`")))?;
            let answer = match mode {
                Mode::Credulous => credulous(&sys, x)?,
                Mode::Sceptical => sceptical(&sys, x)?,
            };
            json(json!({ "answer": answer }))
        }
        Command::Coherent { af } => json(json!({ "answer": is_coherent(&load_af(&af)?)? })),
        Command::Alpha { af, out } => {
            let sys = load_af(&af)?;
            let text = write_alpha(&sys, &compute_alpha(&sys)?);
            match out {
                Some(path) => {
                    write_file(&path, text)?;
                    String::new()
                }
                None => text,
            }
        }
        Command::Decide { af, set, problem } => {
            let sys = load_af(&af)?;
            let s = sys.parse_set(&set)?;
            let answer = match problem {
                Problem::PrefExt => decide_pref_ext(&sys, s)?,
                Problem::StabExt => decide_stab_ext(&sys, s)?,
            };
            json(json!({ "answer": answer }))
        }
        Command::DecideInf {
            af,
            set,
            alpha,
            trust,
            problem,
        } => {
            let sys = load_af(&af)?;
            let s = sys.parse_set(&set)?;
            let alpha = parse_alpha(&sys, &read_text(&alpha)?)?;
            let r = match problem {
                Problem::PrefExt => decide_pref_ext_inf(&sys, s, &alpha, trust)?,
                Problem::StabExt => decide_stab_ext_inf(&sys, s, &alpha, trust)?,
            };
            json(json!({ "answer": r.answer, "path": r.path.name() }))
        }
        Command::Reduce {
            cnf,
            out_af,
            out_alpha,
            out_query,
            variant,
        } => {
            let phi = parse_dimacs(&read_text(&cnf)?)?;
            let inst = build_h_psi(&phi, variant.into())?;
            write_file(&out_af, write_af(&inst.system))?;
            write_file(&out_alpha, write_alpha(&inst.system, &inst.alpha))?;
            let query = inst.system.format_set(inst.query);
            write_file(&out_query, format!("{query}\n"))?;
            json(json!({
                "arguments": inst.system.len(),
                "attacks": inst.system.attack_count(),
                "clauses": phi.clause_count(),
                "query": query,
                "variant": inst.variant.name(),
                "vars": phi.var_count(),
            }))
        }
        Command::VerifyReduction { input, variant } => {
            let corpus = match (input.cnf, input.corpus) {
                (Some(path), _) => vec![parse_dimacs(&read_text(&path)?)?],
                (None, Some(params)) => {
                    let (count, vars, clauses, seed) = parse_corpus_arg(&params)?;
                    random_corpus(count, vars, clauses, seed)?
                }
                (None, None) => unreachable!("clap requires one input"),
            };
            let variant: GadgetVariant = variant.into();
            let reports = parallel::verify_corpus(&corpus, variant, threads)?;
            render(&CorpusJson::new(variant.name(), &reports), pretty)
        }
        Command::Encode {
            af,
            scheme,
            semantics,
            out,
        } => {
            let sys = load_af(&af)?;
            let e = match (scheme, semantics) {
                (SchemeArg::Adjacency, Some(ExtSemantics::Preferred)) => {
                    return Err(usage("the adjacency scheme encodes stable semantics only"))
                }
                (SchemeArg::Adjacency, _) => encode_adjacency(&sys),
                (SchemeArg::Tab, s) => {
                    encode_tab(&sys, s.unwrap_or(ExtSemantics::Preferred).into())?
                }
                (SchemeArg::Truthtable, s) => {
                    truth_table(&sys, s.unwrap_or(ExtSemantics::Preferred).into())?
                }
            };
            let bytes = write_container(&e)?;
            write_file(&out, &bytes)?;
            json(json!({
                "bits": e.size_bits(),
                "bytes": bytes.len(),
                "n": e.n,
                "rows": e.rows,
                "scheme": e.scheme.name(),
                "semantics": e.semantics.name(),
            }))
        }
        Command::EncodeQuery { enc, set, af } => {
            let e = read_container(&read_bytes(&enc)?)?;
            let names = match af {
                Some(path) => {
                    let sys = load_af(&path)?;
                    if sys.len() != e.n {
                        return Err(usage(format!(
                            "system has {} arguments, encoding has {}",
                            sys.len(),
                            e.n
                        )));
                    }
                    sys
                }
                None => ArgumentSystem::with_default_names(e.n, [])?,
            };
            let s = names.parse_set(&set)?;
            json(json!({
                "answer": decide(&e, s)?,
                "scheme": e.scheme.name(),
                "semantics": e.semantics.name(),
            }))
        }
        Command::Minlen { input, vars, cap } => {
            let f = match (input.af, input.table) {
                (Some(path), _) => preferred_function(&load_af(&path)?)?,
                (None, Some(hex)) => parse_table(&hex, vars)?,
                (None, None) => unreachable!("clap requires one input"),
            };
            let length = min_formula_length(f, cap)?;
            json(json!({
                "cap": cap,
                "constant": f.is_constant(),
                "length": length,
                "n": f.n(),
                "table": format!("{:x}", f.table()),
            }))
        }
        Command::Realisable {
            sets,
            method,
            allow_n5,
        } => {
            let family = parse_family(&read_text(&sets)?)?;
            let n = family.n();
            match method {
                RealiseMethod::Brute => {
                    let pre = prefilter(&family);
                    let found = realise_bruteforce(&family, allow_n5)?;
                    json(json!({
                        "answer": found.is_some(),
                        "prefilter": {
                            "pass": pre.pass(),
                            "reasons": pre.reasons.iter().map(|r| reason_name(r)).collect::<Vec<_>>(),
                        },
                        "witness": found.as_ref().map(attack_names),
                    }))
                }
                RealiseMethod::Literal => {
                    let w = condition_literal(&family);
                    json(json!({
                        "answer": w.is_none(),
                        "witness": w.map(|w| json!({
                            "member": set_names(n, w.member),
                            "pair": set_names(n, arglab_core::ArgSet::from_indices([w.pair.0, w.pair.1])),
                            "superset": set_names(n, w.superset),
                        })),
                    }))
                }
                RealiseMethod::Existential => {
                    let w = condition_existential(&family);
                    json(json!({
                        "answer": w.is_none(),
                        "witness": w.map(|t| json!({ "superset": set_names(n, t) })),
                    }))
                }
            }
        }
        Command::Survey { n } => render(&SurveyJson::from(&parallel::survey(n, threads)?), pretty),
        Command::Gen { params, out } => {
            let sys = generate(&params, None)?;
            let text = write_af(&sys);
            match out {
                Some(path) => {
                    write_file(&path, text)?;
                    String::new()
                }
                None => text,
            }
        }
        Command::Bench { params } => {
            let (lo, hi) = match params.family {
                GenFamily::K3 => (1, required(params.t, "--t")?),
                GenFamily::Cycle => (2, required(params.n, "--n")?),
                GenFamily::Isolated | GenFamily::Random => (1, required(params.n, "--n")?),
            };
            let systems = (lo..=hi)
                .map(|size| Ok((label(&params, size), generate(&params, Some(size))?)))
                .collect::<LabResult<Vec<_>>>()?;
            let rows = size_report(&systems)?;
            render(
                &rows.iter().map(SizeRowJson::from).collect::<Vec<_>>(),
                pretty,
            )
        }
    })
}

fn reason_name(r: &PrefilterReason) -> &'static str {
    match r {
        PrefilterReason::Empty => "empty",
        PrefilterReason::NotAntichain { .. } => "not-antichain",
        PrefilterReason::EmptySetAmongOthers => "empty-set-among-others",
    }
}

fn required(v: Option<usize>, flag: &str) -> LabResult<usize> {
    v.ok_or_else(|| usage(format!("{flag} is required for this family")))
}

fn label(params: &GenParams, size: usize) -> String {
    match params.family {
        GenFamily::K3 => format!("k3(t={size})"),
        GenFamily::Isolated => format!("isolated(n={size})"),
        GenFamily::Cycle => format!("cycle(n={size})"),
        GenFamily::Random => format!("random(n={size},p={},seed={})", params.p, params.seed),
    }
}

/// `size` overrides the family's size flag.
fn generate(params: &GenParams, size: Option<usize>) -> LabResult<ArgumentSystem> {
    Ok(match params.family {
        GenFamily::K3 => gen_k3(size.map_or_else(|| required(params.t, "--t"), Ok)?)?,
        GenFamily::Isolated => gen_isolated(size.map_or_else(|| required(params.n, "--n"), Ok)?)?,
        GenFamily::Cycle => gen_cycle(size.map_or_else(|| required(params.n, "--n"), Ok)?)?,
        GenFamily::Random => gen_random(
            size.map_or_else(|| required(params.n, "--n"), Ok)?,
            params.p,
            params.seed,
        )?,
    })
}

fn parse_corpus_arg(params: &str) -> LabResult<(usize, usize, usize, u64)> {
    let parts: Vec<&str> = params.split(',').map(str::trim).collect();
    let bad = || {
        usage(format!(
            "--corpus expects count,vars,clauses,seed, got `{params}`"
        ))
    };
    let [count, vars, clauses, seed] = parts[..] else {
        return Err(bad());
    };
    Ok((
        count.parse().map_err(|_| bad())?,
        vars.parse().map_err(|_| bad())?,
        clauses.parse().map_err(|_| bad())?,
        seed.parse().map_err(|_| bad())?,
    ))
}

/// Hex digits, most significant first; `n` is inferred from the digit
/// count (1 → 2 vars, 2 → 3, 4 → 4) unless given.
fn parse_table(hex: &str, vars: Option<usize>) -> LabResult<TruthTable> {
    let digits = hex.trim().trim_start_matches("0x");
    let table = u16::from_str_radix(digits, 16)
        .map_err(|_| usage(format!("`{hex}` is not a 16-bit hex table")))?;
    let n = match (vars, digits.len()) {
        (Some(n), _) => n,
        (None, 1) => 2,
        (None, 2) => 3,
        (None, 4) => 4,
        (None, k) => {
            return Err(usage(format!(
                "cannot infer the variable count from {k} digits; pass --vars"
            )))
        }
    };
    Ok(TruthTable::new(n, table)?)
}
