//! Command-line front end for `osp-core`.
//!
//! [`run`] takes the argument vector and two output streams and returns the
//! process exit code: 0 on success, 1 on a verification mismatch, 2 on a
//! usage or precondition error.

pub mod cache;

use std::io::Write;
use std::path::PathBuf;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use osp_core::cat_o::{bbw, bgg_resolution, global_dim, projective_dimensions, BbwAnswer};
use osp_core::chains::ChainComplex;
use osp_core::charlib::simple_character;
use osp_core::error::Error;
use osp_core::exec::Exec;
use osp_core::homology::{homology_of, laplacian_kernel, verify_decomposition};
use osp_core::liealg::{realize, Realization};
use osp_core::rootsys::{Parity, RootKind, RootSystem, Weight};
use osp_core::verify::{check_case, check_rank, prepare_from_module, Check};
use osp_core::verma::SimpleModule;
use osp_core::weyl::enumerate_weyl;
use serde_json::{json, Value};

#[derive(Parser, Debug)]
#[command(name = "osp", version, about = "Exact homological computations for osp(1|2n)")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Table,
}

#[derive(Args, Debug, Clone)]
struct Common {
    /// Rank n of osp(1|2n).
    #[arg(long)]
    n: usize,
    /// Weight as comma-separated rationals; defaults to zero.
    #[arg(long, allow_hyphen_values = true)]
    lambda: Option<String>,
    /// Highest chain degree; defaults to n²+1.
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    kmax: Option<u64>,
    #[arg(long, value_enum, default_value = "table")]
    format: Format,
    /// Directory for cached simple modules; falls back to OSP_CACHE_DIR.
    #[arg(long, env = "OSP_CACHE_DIR")]
    cache_dir: Option<PathBuf>,
    /// Run block-level work on one thread.
    #[arg(long)]
    sequential: bool,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Positive roots in the global order.
    Roots(Common),
    /// Weyl group elements with lengths and reduced words.
    Weyl(Common),
    /// Character of L(λ).
    Character(Common),
    /// n̄-homology of L(λ) by weight block.
    Homology(Common),
    /// Laplacian kernel dimensions per degree.
    Laplacian(Common),
    /// Chain-space decomposition C_k = A ⊕ δ*A ⊕ R.
    Decompose(Common),
    /// BGG resolution terms of L(λ).
    Bgg(Common),
    /// Bott-Borel-Weil answer for a line-bundle weight.
    Bbw(Common),
    /// Projective dimensions in the block of λ.
    Projdim(Common),
    /// Every acceptance check for one λ.
    VerifyAll(Common),
}

enum Failure {
    Usage(String),
    Mismatch,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Decomposition(_) => Failure::Mismatch,
            other => Failure::Usage(other.to_string()),
        }
    }
}

type Outcome = Result<(), Failure>;

struct Config {
    n: usize,
    lambda: Weight,
    k_max: usize,
    format: Format,
    cache_dir: Option<PathBuf>,
    exec: Exec,
}

impl Config {
    fn from_common(c: &Common) -> Result<Self, Failure> {
        let rs = RootSystem::new(c.n)?;
        let lambda = match &c.lambda {
            Some(s) => s.parse::<Weight>()?,
            None => Weight::zero(c.n),
        };
        if lambda.rank() != rs.rank() {
            return Err(Error::RankMismatch {
                expected: c.n,
                found: lambda.rank(),
            }
            .into());
        }
        Ok(Config {
            n: c.n,
            lambda,
            k_max: c.kmax.map_or(c.n * c.n + 1, |k| k as usize),
            format: c.format,
            cache_dir: c.cache_dir.clone(),
            exec: if c.sequential { Exec::Sequential } else { Exec::Parallel },
        })
    }

    fn algebra(&self) -> Result<Arc<Realization>, Failure> {
        Ok(Arc::new(realize(self.n)?))
    }

    fn module(&self) -> Result<Arc<SimpleModule>, Failure> {
        let g = self.algebra()?;
        Ok(Arc::new(cache::load_or_build(g, &self.lambda, self.cache_dir.as_deref())?))
    }

    fn complex(&self) -> Result<ChainComplex, Failure> {
        Ok(ChainComplex::new(self.module()?, self.k_max + 1, self.exec))
    }
}

/// Runs the CLI on `argv` (including the program name).
pub fn run<I, S>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(err, "{text}");
                2
            } else {
                let _ = write!(out, "{text}");
                0
            };
        }
    };
    let result = dispatch(&cli.command, out);
    let _ = out.flush();
    match result {
        Ok(()) => 0,
        Err(Failure::Mismatch) => 1,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
    }
}

fn dispatch(cmd: &Command, out: &mut dyn Write) -> Outcome {
    match cmd {
        Command::Roots(c) => roots(&Config::from_common(c)?, out),
        Command::Weyl(c) => weyl(&Config::from_common(c)?, out),
        Command::Character(c) => character(&Config::from_common(c)?, out),
        Command::Homology(c) => homology(&Config::from_common(c)?, out),
        Command::Laplacian(c) => laplacian(&Config::from_common(c)?, out),
        Command::Decompose(c) => decompose(&Config::from_common(c)?, out),
        Command::Bgg(c) => bgg(&Config::from_common(c)?, out),
        Command::Bbw(c) => bbw_cmd(&Config::from_common(c)?, out),
        Command::Projdim(c) => projdim(&Config::from_common(c)?, out),
        Command::VerifyAll(c) => verify_all(&Config::from_common(c)?, out),
    }
}

fn emit(out: &mut dyn Write, text: &str) -> Outcome {
    out.write_all(text.as_bytes())
        .map_err(|e| Failure::Usage(format!("write failed: {e}")))
}

fn emit_json(out: &mut dyn Write, v: &Value) -> Outcome {
    let text = serde_json::to_string_pretty(v).map_err(|e| Failure::Usage(e.to_string()))?;
    emit(out, &format!("{text}\n"))
}

/// Left-aligned columns separated by two spaces.
fn table(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = header.iter().map(|h| h.chars().count()).collect();
    for r in rows {
        for (w, cell) in widths.iter_mut().zip(r) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let line = |cells: Vec<&str>| {
        let mut s = String::new();
        for (i, (c, w)) in cells.iter().zip(&widths).enumerate() {
            if i > 0 {
                s.push_str("  ");
            }
            s.push_str(c);
            if i + 1 < cells.len() {
                s.push_str(&" ".repeat(w - c.chars().count()));
            }
        }
        s.push('\n');
        s
    };
    let mut s = line(header.to_vec());
    for r in rows {
        s.push_str(&line(r.iter().map(String::as_str).collect()));
    }
    s
}

fn root_label(kind: RootKind) -> String {
    match kind {
        RootKind::Minus(i, j) => format!("d{}-d{}", i + 1, j + 1),
        RootKind::Plus(i, j) => format!("d{}+d{}", i + 1, j + 1),
        RootKind::Long(i) => format!("2d{}", i + 1),
        RootKind::Short(i) => format!("d{}", i + 1),
    }
}

fn roots(cfg: &Config, out: &mut dyn Write) -> Outcome {
    let rs = RootSystem::new(cfg.n)?;
    let rows: Vec<(usize, String, String, &str, i64)> = (0..rs.len())
        .map(|id| {
            let parity = if rs.parity(id) == Parity::Odd { "odd" } else { "even" };
            (id, root_label(rs.kind(id)), rs.root(id).weight.to_string(), parity, rs.height(id))
        })
        .collect();
    match cfg.format {
        Format::Json => emit_json(
            out,
            &json!({
                "n": cfg.n,
                "rho": rs.rho().to_string(),
                "roots": rows.iter().map(|(id, l, w, p, h)| json!({
                    "id": id, "root": l, "weight": w, "parity": p, "height": h
                })).collect::<Vec<_>>(),
            }),
        ),
        Format::Table => {
            let body: Vec<Vec<String>> = rows
                .iter()
                .map(|(id, l, w, p, h)| vec![id.to_string(), l.clone(), w.clone(), p.to_string(), h.to_string()])
                .collect();
            emit(out, &format!("rho = {}\n", rs.rho()))?;
            emit(out, &table(&["id", "root", "weight", "parity", "height"], &body))
        }
    }
}

fn weyl(cfg: &Config, out: &mut dyn Write) -> Outcome {
    let mut elements = enumerate_weyl(cfg.n)?;
    elements.sort_by(|a, b| a.length().cmp(&b.length()).then_with(|| a.to_string().cmp(&b.to_string())));
    let word = |w: &osp_core::weyl::WeylElement| {
        w.reduced_word()
            .iter()
            .map(|i| format!("s{}", i + 1))
            .collect::<Vec<_>>()
            .join(" ")
    };
    match cfg.format {
        Format::Json => emit_json(
            out,
            &json!({
                "n": cfg.n,
                "order": elements.len(),
                "elements": elements.iter().map(|w| json!({
                    "w": w.to_string(), "length": w.length(), "word": word(w)
                })).collect::<Vec<_>>(),
            }),
        ),
        Format::Table => {
            let body: Vec<Vec<String>> = elements
                .iter()
                .map(|w| vec![w.to_string(), w.length().to_string(), word(w)])
                .collect();
            emit(out, &format!("|W| = {}\n", elements.len()))?;
            emit(out, &table(&["w", "length", "reduced word"], &body))
        }
    }
}

fn character(cfg: &Config, out: &mut dyn Write) -> Outcome {
    let ch = simple_character(&cfg.lambda)?;
    let mut terms: Vec<(Weight, u64)> = ch.iter().map(|(w, m)| (w.clone(), m)).collect();
    terms.sort_by(|a, b| a.0.coords().cmp(b.0.coords()));
    match cfg.format {
        Format::Json => emit_json(
            out,
            &Value::Array(
                terms
                    .iter()
                    .map(|(w, m)| json!({"weight": w.to_string(), "mult": m}))
                    .collect(),
            ),
        ),
        Format::Table => {
            let body: Vec<Vec<String>> = terms.iter().map(|(w, m)| vec![w.to_string(), m.to_string()]).collect();
            emit(out, &format!("dim L({}) = {}\n", cfg.lambda, ch.dim()))?;
            emit(out, &table(&["weight", "mult"], &body))
        }
    }
}

fn homology(cfg: &Config, out: &mut dyn Write) -> Outcome {
    let cc = cfg.complex()?;
    let report = homology_of(&cc, cfg.k_max, cfg.exec);
    match cfg.format {
        Format::Json => emit_json(
            out,
            &json!({
                "lambda": report.lambda.to_string(),
                "k": (0..=report.k_max).collect::<Vec<_>>(),
                "blocks": report.blocks.iter().map(|b| json!({
                    "k": b.k, "mu": b.mu.to_string(), "dimC": b.dim_c, "dimH": b.dim_h
                })).collect::<Vec<_>>(),
                "predicted": report.predicted.iter().map(|(k, mu)| json!({
                    "k": k, "mu": mu.to_string()
                })).collect::<Vec<_>>(),
                "match": report.matches,
            }),
        )?,
        Format::Table => {
            let body: Vec<Vec<String>> = report
                .blocks
                .iter()
                .filter(|b| b.dim_h > 0)
                .map(|b| vec![b.k.to_string(), b.mu.to_string(), b.dim_c.to_string(), b.dim_h.to_string()])
                .collect();
            emit(out, &format!("L({}), k <= {}\n", report.lambda, report.k_max))?;
            emit(out, &table(&["k", "mu", "dimC", "dimH"], &body))?;
            let totals: Vec<String> = (0..=report.k_max).map(|k| report.total(k).to_string()).collect();
            emit(out, &format!("dim H_k: {}\n", totals.join(" ")))?;
            emit(out, &format!("match: {}\n", report.matches))?;
        }
    }
    if report.matches {
        Ok(())
    } else {
        Err(Failure::Mismatch)
    }
}

fn laplacian(cfg: &Config, out: &mut dyn Write) -> Outcome {
    let cc = cfg.complex()?;
    let report = homology_of(&cc, cfg.k_max, cfg.exec);
    let rows: Vec<(usize, usize, usize)> = (0..=cfg.k_max)
        .map(|k| (k, laplacian_kernel(&cc, k).total, report.total(k)))
        .collect();
    match cfg.format {
        Format::Json => emit_json(
            out,
            &json!({
                "lambda": cfg.lambda.to_string(),
                "degrees": rows.iter().map(|(k, ker, h)| json!({
                    "k": k, "kernel": ker, "dimH": h
                })).collect::<Vec<_>>(),
            }),
        ),
        Format::Table => {
            let body: Vec<Vec<String>> = rows
                .iter()
                .map(|(k, ker, h)| vec![k.to_string(), ker.to_string(), h.to_string()])
                .collect();
            emit(out, &table(&["k", "dim ker", "dim H"], &body))
        }
    }
}

fn decompose(cfg: &Config, out: &mut dyn Write) -> Outcome {
    let cc = cfg.complex()?;
    let reports: Vec<_> = (0..=cfg.k_max).map(|k| verify_decomposition(&cc, k, cfg.exec)).collect();
    let all = reports.iter().all(|r| r.holds());
    match cfg.format {
        Format::Json => emit_json(
            out,
            &json!({
                "lambda": cfg.lambda.to_string(),
                "degrees": reports.iter().map(|r| {
                    let (a, da, rr) = r.totals();
                    json!({
                        "k": r.k,
                        "dimA": a,
                        "dimDeltaA": da,
                        "dimR": rr,
                        "holds": r.holds(),
                        "blocks": r.blocks.iter().map(|b| json!({
                            "mu": b.mu.to_string(),
                            "dimC": b.dim_c,
                            "dimA": b.dim_a,
                            "dimDeltaA": b.dim_delta_a,
                            "dimR": b.dim_r,
                            "dimB": b.dim_b,
                            "holds": b.holds(),
                        })).collect::<Vec<_>>(),
                    })
                }).collect::<Vec<_>>(),
                "holds": all,
            }),
        )?,
        Format::Table => {
            let body: Vec<Vec<String>> = reports
                .iter()
                .map(|r| {
                    let (a, da, rr) = r.totals();
                    let c: usize = r.blocks.iter().map(|b| b.dim_c).sum();
                    vec![
                        r.k.to_string(),
                        c.to_string(),
                        a.to_string(),
                        da.to_string(),
                        rr.to_string(),
                        r.holds().to_string(),
                    ]
                })
                .collect();
            emit(out, &table(&["k", "dim C", "dim A", "dim δ*A", "dim R", "holds"], &body))?;
        }
    }
    if all {
        Ok(())
    } else {
        Err(Failure::Mismatch)
    }
}

fn bgg(cfg: &Config, out: &mut dyn Write) -> Outcome {
    let res = bgg_resolution(&cfg.lambda)?;
    match cfg.format {
        Format::Json => emit_json(
            out,
            &json!({
                "lambda": res.lambda.to_string(),
                "terms": res.terms.iter().map(|t| t.iter().map(|(w, mu)| json!({
                    "w": w.to_string(), "weight": mu.to_string()
                })).collect::<Vec<_>>()).collect::<Vec<_>>(),
            }),
        ),
        Format::Table => {
            let body: Vec<Vec<String>> = res
                .terms
                .iter()
                .enumerate()
                .flat_map(|(k, t)| t.iter().map(move |(w, mu)| vec![k.to_string(), w.to_string(), mu.to_string()]))
                .collect();
            emit(out, &table(&["k", "w", "w·λ"], &body))
        }
    }
}

fn bbw_cmd(cfg: &Config, out: &mut dyn Write) -> Outcome {
    let answer = bbw(&cfg.lambda)?;
    match cfg.format {
        Format::Json => emit_json(
            out,
            &match &answer {
                BbwAnswer::Zero => json!({"kind": "zero"}),
                BbwAnswer::Cohomology { k, highest_weight } => json!({
                    "kind": "cohomology", "k": k, "weight": highest_weight.to_string()
                }),
            },
        ),
        Format::Table => emit(
            out,
            &match &answer {
                BbwAnswer::Zero => format!("H^*({}) = 0\n", cfg.lambda),
                BbwAnswer::Cohomology { k, highest_weight } => {
                    format!("H^{k}({}) = L({highest_weight})^*, all other degrees 0\n", cfg.lambda)
                }
            },
        ),
    }
}

fn projdim(cfg: &Config, out: &mut dyn Write) -> Outcome {
    let rows = projective_dimensions(&cfg.lambda)?;
    match cfg.format {
        Format::Json => emit_json(
            out,
            &json!({
                "lambda": cfg.lambda.to_string(),
                "rows": rows.iter().map(|r| json!({
                    "w": r.w.to_string(),
                    "weight": r.weight.to_string(),
                    "length": r.length,
                    "pdVerma": r.pd_verma,
                    "pdSimple": r.pd_simple,
                })).collect::<Vec<_>>(),
                "globalDim": global_dim(cfg.n),
            }),
        ),
        Format::Table => {
            let body: Vec<Vec<String>> = rows
                .iter()
                .map(|r| {
                    vec![
                        r.w.to_string(),
                        r.weight.to_string(),
                        r.length.to_string(),
                        r.pd_verma.to_string(),
                        r.pd_simple.to_string(),
                    ]
                })
                .collect();
            emit(out, &table(&["w", "w·λ", "length", "pd M", "pd L"], &body))?;
            emit(out, &format!("global dimension: {}\n", global_dim(cfg.n)))
        }
    }
}

fn verify_all(cfg: &Config, out: &mut dyn Write) -> Outcome {
    let case = prepare_from_module(cfg.module()?, cfg.exec);
    let mut checks: Vec<Check> = check_case(&case, cfg.exec)?;
    checks.extend(check_rank(cfg.n)?);
    let pass = checks.iter().all(|c| c.pass);
    match cfg.format {
        Format::Json => emit_json(
            out,
            &json!({
                "lambda": cfg.lambda.to_string(),
                "checks": checks.iter().map(|c| json!({
                    "criterion": c.criterion, "name": c.name, "pass": c.pass, "detail": c.detail
                })).collect::<Vec<_>>(),
                "pass": pass,
            }),
        )?,
        Format::Table => {
            let body: Vec<Vec<String>> = checks
                .iter()
                .map(|c| {
                    vec![
                        c.criterion.to_string(),
                        if c.pass { "PASS" } else { "FAIL" }.to_string(),
                        c.name.clone(),
                        c.detail.clone(),
                    ]
                })
                .collect();
            emit(out, &table(&["crit", "result", "check", "detail"], &body))?;
        }
    }
    if pass {
        Ok(())
    } else {
        Err(Failure::Mismatch)
    }
}
