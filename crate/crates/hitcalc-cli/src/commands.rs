//! Command implementations. Results go to stdout; progress and cache
//! status notes go to stderr, keeping stdout machine-clean.

use std::io::{BufRead, Write};
use std::path::PathBuf;

use hitcalc_core::arith::kameko_iso;
use hitcalc_core::error::Error as CoreError;
use hitcalc_core::invariant::{invariant_dim, invariant_dim_omega, GroupKind};
use hitcalc_core::linalg::composition_count;
use hitcalc_core::maps::{p_project, psi, q_insert, verify_sum_conjecture, PsiMode, PsiSpec};
use hitcalc_core::monomial::{Monomial, WeightVector};
use hitcalc_core::poly::Polynomial;
use hitcalc_core::quotient::{HitCalc, QuotientBasis, SupportPart};
use serde_json::json;
use thiserror::Error;

use crate::cache::{ArtifactKind, Cache, CacheError, CacheKey};
use crate::cli::{CacheAction, GroupArg, MapOp, EXIT_RESOURCE, EXIT_USAGE};

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] CoreError),
    #[error(transparent)]
    Cache(#[from] CacheError),
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
    #[error("{0}")]
    Usage(String),
    #[error("estimated memory {need} MiB exceeds --max-mem {cap} MiB")]
    MemoryGuard { need: u64, cap: u64 },
}

pub fn exit_code_for(e: &CliError) -> i32 {
    match e {
        CliError::Core(CoreError::ResourceLimit { .. }) | CliError::MemoryGuard { .. } => {
            EXIT_RESOURCE
        }
        _ => EXIT_USAGE,
    }
}

pub struct Context {
    pub engine: HitCalc,
    pub cache: Cache,
    pub max_mem_bytes: u64,
}

impl Context {
    /// Retained-state estimate for the blocked elimination at `(t, n)`:
    /// one bit matrix per active variable count, plus the trace factor.
    fn guard_memory(&self, t: usize, n: u64, traced: bool) -> Result<(), CliError> {
        let mut bytes: u64 = 0;
        for s in 1..=t {
            if (s as u64) > n {
                continue;
            }
            let cols = composition_count(s, n - s as u64).unwrap_or(u64::MAX);
            bytes = bytes.saturating_add(cols.saturating_mul(cols.div_ceil(64) * 8));
        }
        if traced {
            bytes = bytes.saturating_mul(2);
        }
        if bytes > self.max_mem_bytes {
            return Err(CliError::MemoryGuard {
                need: bytes / (1024 * 1024),
                cap: self.max_mem_bytes / (1024 * 1024),
            });
        }
        Ok(())
    }

    fn basis_of(&self, t: usize, n: u64) -> Result<std::sync::Arc<QuotientBasis>, CliError> {
        self.guard_memory(t, n, false)?;
        eprintln!("computing basis t={t} n={n} ...");
        let qb = self.engine.quotient_basis(t, n)?;
        eprintln!(
            "t={t} n={n}: hit rank {} of {} columns, dim {}",
            qb.trace().hit_rank,
            qb.columns(),
            qb.dim()
        );
        Ok(qb)
    }

    fn traced_basis_of(
        &self,
        t: usize,
        n: u64,
    ) -> Result<std::sync::Arc<QuotientBasis>, CliError> {
        self.guard_memory(t, n, true)?;
        eprintln!("computing traced basis t={t} n={n} ...");
        let qb = self.engine.quotient_basis_traced(t, n)?;
        eprintln!(
            "t={t} n={n}: hit rank {} of {} columns, dim {}",
            qb.trace().hit_rank,
            qb.columns(),
            qb.dim()
        );
        Ok(qb)
    }
}

fn parse_omega(s: &str) -> Result<WeightVector, CliError> {
    s.parse()
        .map_err(|_| CliError::Usage(format!("invalid weight vector {s:?}")))
}

fn trace_json(qb: &QuotientBasis) -> serde_json::Value {
    let t = qb.trace();
    json!({
        "schema": "hitcalc/1",
        "command": "trace",
        "t": qb.vars(),
        "n": qb.degree(),
        "squares": t.families.iter().map(|f| f.square).collect::<Vec<_>>(),
        "source_counts": t.families.iter().map(|f| f.source_count).collect::<Vec<_>>(),
        "standalone_ranks": t.families.iter().map(|f| f.standalone_rank).collect::<Vec<_>>(),
        "cumulative_ranks": t.families.iter().map(|f| f.cumulative_rank).collect::<Vec<_>>(),
        "columns": t.columns,
        "hit_rank": t.hit_rank,
        "dim": t.dim,
    })
}

pub fn dim(ctx: &Context, t: usize, n: u64, trace: bool, json_out: bool) -> Result<(), CliError> {
    if trace {
        let qb = ctx.traced_basis_of(t, n)?;
        if json_out {
            println!("{}", trace_json(&qb));
        } else {
            print!("{}", qb.trace().echo().expect("traced"));
        }
        return Ok(());
    }
    let key = CacheKey::new(t, n, ArtifactKind::Dims);
    if let Some(record) = ctx.cache.load_json(&key)? {
        eprintln!("cache hit: {key}");
        if json_out {
            println!("{record}");
        } else {
            println!("{}", record["dim"]);
        }
        return Ok(());
    }
    let qb = ctx.basis_of(t, n)?;
    let record = json!({
        "schema": "hitcalc/1",
        "command": "dim",
        "t": t,
        "n": n,
        "monomials": qb.columns(),
        "hit_rank": qb.trace().hit_rank,
        "dim": qb.dim(),
    });
    ctx.cache.store_json(&key, &record)?;
    eprintln!("cache store: {key}");
    if json_out {
        println!("{record}");
    } else {
        println!("{}", qb.dim());
    }
    Ok(())
}

pub fn basis(
    ctx: &Context,
    t: usize,
    n: u64,
    omega: Option<String>,
    part: Option<SupportPart>,
    out: Option<PathBuf>,
) -> Result<(), CliError> {
    let omega = omega.map(|s| parse_omega(&s)).transpose()?;
    let key = CacheKey::new(t, n, ArtifactKind::Basis)
        .with_omega(omega.clone())
        .with_part(part);
    let listing = match ctx.cache.load_basis(&key)? {
        Some(listing) => {
            eprintln!("cache hit: {key}");
            listing
        }
        None => {
            let qb = ctx.basis_of(t, n)?;
            let part = part.unwrap_or(SupportPart::All);
            if let Some(w) = &omega {
                // Surfaces the degree check.
                qb.dim_omega(w, part)?;
            }
            let filtered: Vec<Monomial> = qb
                .admissible()
                .iter()
                .filter(|m| match part {
                    SupportPart::All => true,
                    SupportPart::Zero => !m.has_full_support(),
                    SupportPart::Positive => m.has_full_support(),
                })
                .filter(|m| omega.as_ref().is_none_or(|w| &m.weight() == w))
                .cloned()
                .collect();
            ctx.cache.store_basis(&key, &filtered)?;
            eprintln!("cache store: {key}");
            filtered
        }
    };
    let text = Cache::render_basis(t, n, &listing);
    match out {
        Some(path) => {
            std::fs::write(&path, text)?;
            println!("{}", listing.len());
            eprintln!("wrote {}", path.display());
        }
        None => {
            print!("{text}");
            println!("{}", listing.len());
        }
    }
    Ok(())
}

pub fn kameko(
    ctx: &Context,
    t: usize,
    n_low: u64,
    split: bool,
    json_out: bool,
) -> Result<(), CliError> {
    let n_high = t as u64 + 2 * n_low;
    if kameko_iso(t, n_low) {
        if json_out {
            println!(
                "{}",
                json!({
                    "schema": "hitcalc/1",
                    "command": "kameko",
                    "t": t,
                    "n_low": n_low,
                    "n_high": n_high,
                    "isomorphism": true,
                    "kernel": 0,
                })
            );
        } else {
            println!("kameko map t={t}: degree {n_high} -> {n_low} is an isomorphism (kernel 0); no elimination attempted");
        }
        return Ok(());
    }
    let high = ctx.basis_of(t, n_high)?;
    let low = ctx.basis_of(t, n_low)?;
    let kernel = high.dim() as u64 - low.dim() as u64;
    let split_record = if split {
        // Kernel classes: admissible monomials of the source degree that
        // die downstairs, broken out by support and weight.
        let mut zero = 0u64;
        let mut positive: Vec<(WeightVector, u64)> = Vec::new();
        for m in high.admissible() {
            let dies = match hitcalc_core::quotient::kameko_down(m) {
                None => true,
                Some(img) => low
                    .reduce_to_admissible(&Polynomial::from_monomial(img))?
                    .is_zero(),
            };
            if !dies {
                continue;
            }
            if !m.has_full_support() {
                zero += 1;
            } else {
                let w = m.weight();
                match positive.iter_mut().find(|(pw, _)| pw == &w) {
                    Some((_, c)) => *c += 1,
                    None => positive.push((w, 1)),
                }
            }
        }
        positive.sort_by(|a, b| a.0.cmp(&b.0));
        Some((zero, positive))
    } else {
        None
    };
    if json_out {
        let mut record = json!({
            "schema": "hitcalc/1",
            "command": "kameko",
            "t": t,
            "n_low": n_low,
            "n_high": n_high,
            "isomorphism": false,
            "dim_high": high.dim(),
            "dim_low": low.dim(),
            "kernel": kernel,
        });
        if let Some((zero, positive)) = &split_record {
            record["kernel_zero_support"] = json!(zero);
            record["kernel_positive_by_weight"] = json!(positive
                .iter()
                .map(|(w, c)| json!({"omega": w.to_string(), "dim": c}))
                .collect::<Vec<_>>());
        }
        println!("{record}");
    } else {
        println!("dim Q(t={t}, n={n_high}) = {}", high.dim());
        println!("dim Q(t={t}, n={n_low}) = {}", low.dim());
        println!("kernel = {kernel}");
        if let Some((zero, positive)) = &split_record {
            println!("kernel zero-support part: {zero}");
            for (w, c) in positive {
                println!("kernel positive part at {w}: {c}");
            }
        }
    }
    Ok(())
}

pub fn invariants(
    ctx: &Context,
    t: usize,
    n: u64,
    group: GroupArg,
    omega: Option<String>,
    json_out: bool,
) -> Result<(), CliError> {
    let kind = match group {
        GroupArg::Sym => GroupKind::Symmetric,
        GroupArg::Gl => GroupKind::GeneralLinear,
    };
    ctx.guard_memory(t, n, false)?;
    let group_tag = match group {
        GroupArg::Sym => "sym",
        GroupArg::Gl => "gl",
    };
    match omega {
        Some(w) => {
            let w = parse_omega(&w)?;
            let dim = invariant_dim_omega(&ctx.engine, t, n, &w, kind)?;
            if json_out {
                println!(
                    "{}",
                    json!({
                        "schema": "hitcalc/1",
                        "command": "invariants",
                        "t": t,
                        "n": n,
                        "group": group_tag,
                        "omega": w.to_string(),
                        "dim": dim,
                    })
                );
            } else {
                println!("{dim}");
            }
        }
        None => {
            let qb = ctx.basis_of(t, n)?;
            let (dim, basis) = invariant_dim(&ctx.engine, t, n, kind)?;
            let vectors: Vec<Vec<String>> = basis
                .iter()
                .map(|v| {
                    v.iter_bits()
                        .map(|i| qb.admissible()[i].to_string())
                        .collect()
                })
                .collect();
            let record = json!({
                "schema": "hitcalc/1",
                "command": "invariants",
                "t": t,
                "n": n,
                "group": group_tag,
                "omega": null,
                "dim": dim,
                "basis": vectors,
            });
            let key = CacheKey::new(t, n, ArtifactKind::Invariants).with_detail(group_tag);
            ctx.cache.store_json(&key, &record)?;
            if json_out {
                println!("{record}");
            } else {
                println!("{dim}");
                for v in &vectors {
                    println!("{}", v.join(" ; "));
                }
            }
        }
    }
    Ok(())
}

pub fn maps(
    op: MapOp,
    l: usize,
    list: &str,
    t: usize,
    lenient: bool,
) -> Result<(), CliError> {
    let ls: Vec<usize> = if list.trim().is_empty() {
        Vec::new()
    } else {
        list.split(',')
            .map(|s| {
                s.trim()
                    .parse()
                    .map_err(|_| CliError::Usage(format!("invalid index {s:?} in -L")))
            })
            .collect::<Result<_, _>>()?
    };
    let stdin = std::io::stdin();
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    for line in stdin.lock().lines() {
        let line = line?;
        if line.trim().is_empty() {
            continue;
        }
        let m: Monomial = line
            .trim()
            .parse()
            .map_err(|_| CliError::Usage(format!("invalid monomial {line:?}")))?;
        match op {
            MapOp::Q => {
                let img = q_insert(l, t, &m)?;
                writeln!(out, "{img}")?;
            }
            MapOp::Psi => {
                let spec = PsiSpec::new(l, ls.clone(), t)?;
                let mode = if lenient {
                    PsiMode::Lenient
                } else {
                    PsiMode::Strict
                };
                match psi(&spec, &m, mode)? {
                    Some(img) => writeln!(out, "{img}")?,
                    None => writeln!(out, "0")?,
                }
            }
            MapOp::P => {
                let img = p_project(l, &ls, &Polynomial::from_monomial(m))?;
                writeln!(out, "{img}")?;
            }
        }
    }
    Ok(())
}

pub fn conjecture(ctx: &Context, t: usize, n: u64, omega: &str) -> Result<(), CliError> {
    let w = parse_omega(omega)?;
    ctx.guard_memory(t, n, false)?;
    let report = verify_sum_conjecture(&ctx.engine, t, n, &w)?;
    if report.holds() {
        let note = if report.vacuous { " (vacuously: empty source)" } else { "" };
        println!(
            "holds{note}: {} source monomials, {} images, all admissible",
            report.source_count, report.images_checked
        );
    } else {
        println!(
            "counterexamples: {} of {} images are not admissible",
            report.failures.len(),
            report.images_checked
        );
        for m in &report.failures {
            println!("{m}");
        }
    }
    Ok(())
}

pub fn trace(ctx: &Context, t: usize, n: u64, json_out: bool) -> Result<(), CliError> {
    let qb = ctx.traced_basis_of(t, n)?;
    let key = CacheKey::new(t, n, ArtifactKind::Trace);
    let record = trace_json(&qb);
    ctx.cache.store_json(&key, &record)?;
    if json_out {
        println!("{record}");
    } else {
        print!("{}", qb.trace().echo().expect("traced"));
    }
    Ok(())
}

pub fn cache_cmd(ctx: &Context, action: CacheAction) -> Result<(), CliError> {
    match action {
        CacheAction::Inspect => {
            println!("dir: {}", ctx.cache.dir().display());
            for name in ctx.cache.entries()? {
                println!("{name}");
            }
        }
        CacheAction::Clear => {
            let n = ctx.cache.clear()?;
            println!("removed {n} entries");
        }
    }
    Ok(())
}
