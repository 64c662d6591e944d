//! Run manifests: what was run, with which inputs, and a digest of the
//! result.

use std::time::{SystemTime, UNIX_EPOCH};

use serde::Serialize;
use serde_json::Value;
use sha2::{Digest, Sha256};

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RunManifest {
    pub command: String,
    pub parameters: Value,
    pub seed: u64,
    /// Seconds since the Unix epoch.
    pub started: u64,
    pub finished: u64,
    /// SHA-256 over command, parameters, seed and result text.
    pub digest: String,
}

fn now() -> u64 {
    SystemTime::now()
        .duration_since(UNIX_EPOCH)
        .map(|d| d.as_secs())
        .unwrap_or(0)
}

/// Hex SHA-256 of the inputs and the result; timestamps are excluded.
pub fn result_digest(command: &str, parameters: &Value, seed: u64, result: &str) -> String {
    let mut h = Sha256::new();
    for part in [
        command.as_bytes(),
        parameters.to_string().as_bytes(),
        &seed.to_le_bytes(),
        result.as_bytes(),
    ] {
        h.update((part.len() as u64).to_le_bytes());
        h.update(part);
    }
    hex::encode(h.finalize())
}

/// Times `run` and records its output.
pub fn record<E>(
    command: &str,
    parameters: Value,
    seed: u64,
    run: impl FnOnce() -> Result<String, E>,
) -> Result<(String, RunManifest), E> {
    let started = now();
    let result = run()?;
    let digest = result_digest(command, &parameters, seed, &result);
    let manifest = RunManifest {
        command: command.to_string(),
        parameters,
        seed,
        started,
        finished: now(),
        digest,
    };
    Ok((result, manifest))
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn digest_depends_on_inputs_not_time() {
        let p = json!({ "n": 22, "k": 4 });
        let (_, a) = record::<()>("bounds", p.clone(), 1, || Ok("x".into())).unwrap();
        let (_, b) = record::<()>("bounds", p.clone(), 1, || Ok("x".into())).unwrap();
        assert_eq!(a.digest, b.digest);
        assert_ne!(a.digest, result_digest("bounds", &p, 2, "x"));
        assert_ne!(a.digest, result_digest("bounds", &p, 1, "y"));
        assert_eq!(a.digest.len(), 64);
    }
}
