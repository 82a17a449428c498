//! On-disk result cache: basis listings as validated text files, scalar
//! results as JSON records. Writes are atomic (temp file + rename), so
//! concurrent invocations never observe torn files.

use std::fmt;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::sync::atomic::{AtomicU32, Ordering};

use hitcalc_core::monomial::{Monomial, WeightVector};
use hitcalc_core::quotient::SupportPart;
use thiserror::Error;

pub const BASIS_MAGIC: &str = "hitcalc-basis";
pub const BASIS_VERSION: &str = "v1";
pub const BASIS_ORDER: &str = "weight-then-exponent-leftlex";

/// What kind of artifact a cache entry holds.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArtifactKind {
    Basis,
    Dims,
    Trace,
    Invariants,
}

impl ArtifactKind {
    fn tag(self) -> &'static str {
        match self {
            ArtifactKind::Basis => "basis",
            ArtifactKind::Dims => "dims",
            ArtifactKind::Trace => "trace",
            ArtifactKind::Invariants => "invariants",
        }
    }

    fn extension(self) -> &'static str {
        match self {
            ArtifactKind::Basis => "txt",
            _ => "json",
        }
    }
}

/// Identifies one logical cached result; the canonical string form is the
/// file name.
#[derive(Debug, Clone)]
pub struct CacheKey {
    pub vars: usize,
    pub degree: u64,
    pub omega: Option<WeightVector>,
    pub part: Option<SupportPart>,
    pub kind: ArtifactKind,
    /// Extra discriminator (e.g. the group for invariants).
    pub detail: Option<String>,
}

impl CacheKey {
    pub fn new(vars: usize, degree: u64, kind: ArtifactKind) -> Self {
        CacheKey {
            vars,
            degree,
            omega: None,
            part: None,
            kind,
            detail: None,
        }
    }

    pub fn with_omega(mut self, omega: Option<WeightVector>) -> Self {
        self.omega = omega;
        self
    }

    pub fn with_part(mut self, part: Option<SupportPart>) -> Self {
        self.part = part;
        self
    }

    pub fn with_detail(mut self, detail: impl Into<String>) -> Self {
        self.detail = Some(detail.into());
        self
    }

    pub fn file_name(&self) -> String {
        format!("{self}.{}", self.kind.extension())
    }
}

impl fmt::Display for CacheKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "t{}_n{}", self.vars, self.degree)?;
        if let Some(w) = &self.omega {
            let parts: Vec<String> = w.entries().iter().map(u32::to_string).collect();
            write!(f, "_w{}", parts.join("-"))?;
        }
        if let Some(p) = self.part {
            let tag = match p {
                SupportPart::All => "all",
                SupportPart::Zero => "zero",
                SupportPart::Positive => "positive",
            };
            write!(f, "_{tag}")?;
        }
        if let Some(d) = &self.detail {
            write!(f, "_{d}")?;
        }
        write!(f, "_{}", self.kind.tag())
    }
}

#[derive(Debug, Error)]
pub enum CacheError {
    #[error("corrupt cache file {path}: {reason}")]
    Corrupt { path: PathBuf, reason: String },
    #[error("cache io error: {0}")]
    Io(#[from] std::io::Error),
}

/// A cache directory with a hit counter.
#[derive(Debug)]
pub struct Cache {
    dir: PathBuf,
    hits: AtomicU32,
}

impl Cache {
    /// Uses `HITCALC_CACHE_DIR`, defaulting to `./.hitcalc-cache`.
    pub fn from_env() -> Self {
        let dir = std::env::var_os("HITCALC_CACHE_DIR")
            .map(PathBuf::from)
            .unwrap_or_else(|| PathBuf::from(".hitcalc-cache"));
        Cache {
            dir,
            hits: AtomicU32::new(0),
        }
    }

    pub fn at(dir: impl Into<PathBuf>) -> Self {
        Cache {
            dir: dir.into(),
            hits: AtomicU32::new(0),
        }
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    pub fn hits(&self) -> u32 {
        self.hits.load(Ordering::Relaxed)
    }

    fn path_of(&self, key: &CacheKey) -> PathBuf {
        self.dir.join(key.file_name())
    }

    fn write_atomic(&self, path: &Path, contents: &str) -> Result<(), CacheError> {
        fs::create_dir_all(&self.dir)?;
        let mut tmp = tempfile::NamedTempFile::new_in(&self.dir)?;
        tmp.write_all(contents.as_bytes())?;
        tmp.persist(path).map_err(|e| CacheError::Io(e.error))?;
        Ok(())
    }

    /// Renders a basis listing: the versioned header, then one exponent
    /// tuple per line, ascending under the monomial order.
    pub fn render_basis(vars: usize, degree: u64, monomials: &[Monomial]) -> String {
        let mut out = format!(
            "{BASIS_MAGIC} {BASIS_VERSION} t={vars} n={degree} order={BASIS_ORDER}\n"
        );
        for m in monomials {
            out.push_str(&m.to_string());
            out.push('\n');
        }
        out
    }

    /// Parses and validates a basis listing; errors on header mismatch,
    /// wrong arity or degree, or out-of-order rows. The returned list is
    /// re-sorted after validation as a second guard on the order.
    pub fn parse_basis(
        text: &str,
        vars: usize,
        degree: u64,
        path: &Path,
    ) -> Result<Vec<Monomial>, CacheError> {
        let corrupt = |reason: String| CacheError::Corrupt {
            path: path.to_path_buf(),
            reason,
        };
        let mut lines = text.lines();
        let header = lines.next().ok_or_else(|| corrupt("empty file".into()))?;
        let expected = format!(
            "{BASIS_MAGIC} {BASIS_VERSION} t={vars} n={degree} order={BASIS_ORDER}"
        );
        if header != expected {
            return Err(corrupt(format!(
                "header mismatch: got {header:?}, want {expected:?}"
            )));
        }
        let mut monomials = Vec::new();
        for (i, line) in lines.enumerate() {
            if line.trim().is_empty() {
                continue;
            }
            let m: Monomial = line
                .parse()
                .map_err(|e| corrupt(format!("line {}: {e}", i + 2)))?;
            if m.vars() != vars {
                return Err(corrupt(format!("line {}: wrong variable count", i + 2)));
            }
            if m.degree() != degree {
                return Err(corrupt(format!(
                    "line {}: degree {} instead of {degree}",
                    i + 2,
                    m.degree()
                )));
            }
            if let Some(prev) = monomials.last() {
                if m.order_cmp(prev) != std::cmp::Ordering::Greater {
                    return Err(corrupt(format!("line {}: rows out of order", i + 2)));
                }
            }
            monomials.push(m);
        }
        monomials.sort_by(|a, b| a.order_cmp(b));
        Ok(monomials)
    }

    pub fn store_basis(
        &self,
        key: &CacheKey,
        monomials: &[Monomial],
    ) -> Result<PathBuf, CacheError> {
        let path = self.path_of(key);
        self.write_atomic(&path, &Self::render_basis(key.vars, key.degree, monomials))?;
        Ok(path)
    }

    pub fn load_basis(&self, key: &CacheKey) -> Result<Option<Vec<Monomial>>, CacheError> {
        let path = self.path_of(key);
        let text = match fs::read_to_string(&path) {
            Ok(t) => t,
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(None),
            Err(e) => return Err(e.into()),
        };
        let parsed = Self::parse_basis(&text, key.vars, key.degree, &path)?;
        self.hits.fetch_add(1, Ordering::Relaxed);
        Ok(Some(parsed))
    }

    pub fn store_json(
        &self,
        key: &CacheKey,
        value: &serde_json::Value,
    ) -> Result<PathBuf, CacheError> {
        let path = self.path_of(key);
        let mut text = serde_json::to_string_pretty(value).expect("serializable");
        text.push('\n');
        self.write_atomic(&path, &text)?;
        Ok(path)
    }

    pub fn load_json(&self, key: &CacheKey) -> Result<Option<serde_json::Value>, CacheError> {
        let path = self.path_of(key);
        let text = match fs::read_to_string(&path) {
            Ok(t) => t,
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(None),
            Err(e) => return Err(e.into()),
        };
        let value = serde_json::from_str(&text).map_err(|e| CacheError::Corrupt {
            path: path.clone(),
            reason: e.to_string(),
        })?;
        self.hits.fetch_add(1, Ordering::Relaxed);
        Ok(Some(value))
    }

    /// File names currently present, sorted.
    pub fn entries(&self) -> std::io::Result<Vec<String>> {
        let mut names = Vec::new();
        match fs::read_dir(&self.dir) {
            Ok(iter) => {
                for entry in iter {
                    names.push(entry?.file_name().to_string_lossy().into_owned());
                }
            }
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => {}
            Err(e) => return Err(e),
        }
        names.sort();
        Ok(names)
    }

    pub fn clear(&self) -> std::io::Result<usize> {
        let names = self.entries()?;
        let count = names.len();
        for name in names {
            fs::remove_file(self.dir.join(name))?;
        }
        Ok(count)
    }
}
