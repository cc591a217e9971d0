use std::fs;
use std::io;
use std::path::{Path, PathBuf};

use super::DimReport;

/// On-disk store of dimension reports keyed by `(n, l)` and the crate
/// version. Unreadable or inconsistent entries count as misses.
#[derive(Clone, Debug)]
pub struct DimCache {
    dir: PathBuf,
}

impl DimCache {
    pub fn new(dir: impl Into<PathBuf>) -> Self {
        DimCache { dir: dir.into() }
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    fn path(&self, n: usize, l: usize) -> PathBuf {
        self.dir.join(format!(
            "dims-n{n}-l{l}-v{}.json",
            env!("CARGO_PKG_VERSION")
        ))
    }

    pub fn load(&self, n: usize, l: usize) -> Option<DimReport> {
        let text = fs::read_to_string(self.path(n, l)).ok()?;
        let report: DimReport = serde_json::from_str(&text).ok()?;
        (report.n == n && report.l == l && report.is_consistent()).then_some(report)
    }

    pub fn store(&self, report: &DimReport) -> io::Result<()> {
        fs::create_dir_all(&self.dir)?;
        let json = serde_json::to_string_pretty(report).map_err(io::Error::other)?;
        let path = self.path(report.n, report.l);
        let tmp = path.with_extension("json.tmp");
        fs::write(&tmp, json)?;
        fs::rename(tmp, path)
    }
}
