//! On-disk cache for the expensive commands, keyed by a SHA-256 digest of
//! the command, its parameters, and the tool version.

use std::fs;
use std::io;
use std::path::PathBuf;

use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use crate::commands::{Outcome, Request};
use crate::TOOL_VERSION;

pub struct Cache {
    dir: PathBuf,
}

impl Cache {
    pub fn new(dir: PathBuf) -> Self {
        Self { dir }
    }

    fn identity(request: &Request) -> Value {
        json!({
            "command": request.name(),
            "parameters": request.parameters(),
            "tool_version": TOOL_VERSION,
        })
    }

    fn path(&self, request: &Request) -> PathBuf {
        let digest = Sha256::digest(Self::identity(request).to_string().as_bytes());
        self.dir.join(format!("{}-{}.json", request.name(), hex::encode(digest)))
    }

    /// A stored outcome for exactly this request, if one can be read.
    /// Unreadable or mismatched entries count as misses.
    pub fn load(&self, request: &Request) -> Option<Outcome> {
        let text = fs::read_to_string(self.path(request)).ok()?;
        let entry: Value = serde_json::from_str(&text).ok()?;
        if entry.get("key")? != &Self::identity(request) {
            return None;
        }
        Some(Outcome { result: entry.get("result")?.clone(), passed: entry.get("passed")?.as_bool()? })
    }

    pub fn store(&self, request: &Request, outcome: &Outcome) -> io::Result<()> {
        fs::create_dir_all(&self.dir)?;
        let entry = json!({
            "key": Self::identity(request),
            "result": outcome.result,
            "passed": outcome.passed,
        });
        let path = self.path(request);
        // write then rename so a concurrent reader never sees half a file
        let tmp = path.with_extension(format!("tmp{}", std::process::id()));
        fs::write(&tmp, entry.to_string())?;
        fs::rename(&tmp, &path)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip_and_isolation() {
        let dir = tempfile::tempdir().unwrap();
        let cache = Cache::new(dir.path().join("nested"));
        let a = Request::Enumerate { n: 6, max_weight: 6 };
        let b = Request::Enumerate { n: 6, max_weight: 3 };
        assert!(cache.load(&a).is_none());
        let outcome = Outcome { result: json!({ "count": 2 }), passed: true };
        cache.store(&a, &outcome).unwrap();
        assert_eq!(cache.load(&a), Some(outcome));
        assert!(cache.load(&b).is_none());
        assert_ne!(cache.path(&a), cache.path(&b));
        assert_eq!(fs::read_dir(&cache.dir).unwrap().count(), 1);
    }

    #[test]
    fn corrupt_entries_are_misses() {
        let dir = tempfile::tempdir().unwrap();
        let cache = Cache::new(dir.path().to_path_buf());
        let r = Request::Search { n: 6, max_degree: 5, min_terms: 3 };
        fs::write(cache.path(&r), "{ not json").unwrap();
        assert!(cache.load(&r).is_none());
    }
}
