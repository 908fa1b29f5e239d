//! JSON problem files: a `{"command": ..., ...}` object carrying the same
//! fields as the matching subcommand's flags, with the same string
//! micro-syntax for groups, points, and parabolics. Parsing is strict —
//! unknown fields are rejected so a typo cannot silently change a run.

use std::fs;
use std::io::Read;

use anyhow::{anyhow, Context, Result};
use serde::Deserialize;
use serde_json::Value;

use crate::exec;

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct PolygonReq {
    group: String,
    point: String,
    #[serde(default)]
    at: Option<String>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct StatsReq {
    group: String,
    point: String,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct PositivityReq {
    group: String,
    point: String,
    parabolic: String,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct BruhatReq {
    group: String,
    q: String,
    p: String,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct FiberCodimReq {
    group: String,
    point: String,
    q: String,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct BoundReq {
    group: String,
    point: String,
    n: u64,
    #[serde(default)]
    dim_centralizer: Option<u64>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct N0Req {
    family: String,
    point: String,
    n: u64,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct HodgeCheckReq {
    d: u32,
    g: u64,
    chi_top_bar: i64,
    chi_o_bar: i64,
    #[serde(default)]
    symmetric: bool,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct LvReq {
    d: u32,
    #[serde(default)]
    h: Option<String>,
    #[serde(default)]
    chis: Option<String>,
    #[serde(default)]
    symmetric: bool,
    dim_base: u64,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct SurfaceReq {
    c2: u64,
}

fn parse_req<T: serde::de::DeserializeOwned>(command: &str, body: Value) -> Result<T> {
    serde_json::from_value(body).map_err(|e| anyhow!("invalid {command} problem file: {e}"))
}

/// Reads and executes one problem file; `path == "-"` reads standard input.
/// Returns `(command, inputs, results)` for the output envelope.
pub fn run(path: &str) -> Result<(String, Value, Value)> {
    let text = if path == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .context("reading standard input")?;
        buf
    } else {
        fs::read_to_string(path).with_context(|| format!("reading problem file {path}"))?
    };
    let mut value: Value =
        serde_json::from_str(&text).map_err(|e| anyhow!("problem file is not valid JSON: {e}"))?;
    let obj = value
        .as_object_mut()
        .ok_or_else(|| anyhow!("problem file must be a JSON object"))?;
    let command = match obj.remove("command") {
        Some(Value::String(s)) => s,
        Some(_) => return Err(anyhow!("\"command\" must be a string")),
        None => return Err(anyhow!("problem file needs a \"command\" field")),
    };
    let (inputs, results) = match command.as_str() {
        "polygon" => {
            let req: PolygonReq = parse_req(&command, value)?;
            exec::polygon(&req.group, &req.point, req.at.as_deref())?
        }
        "stats" => {
            let req: StatsReq = parse_req(&command, value)?;
            exec::stats(&req.group, &req.point)?
        }
        "positivity" => {
            let req: PositivityReq = parse_req(&command, value)?;
            exec::positivity(&req.group, &req.point, &req.parabolic)?
        }
        "bruhat" => {
            let req: BruhatReq = parse_req(&command, value)?;
            exec::bruhat(&req.group, &req.q, &req.p)?
        }
        "fiber-codim" => {
            let req: FiberCodimReq = parse_req(&command, value)?;
            exec::fiber_codim(&req.group, &req.point, &req.q)?
        }
        "bound" => {
            let req: BoundReq = parse_req(&command, value)?;
            exec::bound(&req.group, &req.point, req.n, req.dim_centralizer)?
        }
        "n0" => {
            let req: N0Req = parse_req(&command, value)?;
            exec::n0(&req.family, &req.point, req.n)?
        }
        "hodge-check" => {
            let req: HodgeCheckReq = parse_req(&command, value)?;
            exec::hodge_check(req.d, req.g, req.chi_top_bar, req.chi_o_bar, req.symmetric)?
        }
        "lv-pipeline" => {
            let req: LvReq = parse_req(&command, value)?;
            exec::lv(
                req.d,
                req.h.as_deref(),
                req.chis.as_deref(),
                req.symmetric,
                req.dim_base,
            )?
        }
        "surface-hilbert" => {
            let req: SurfaceReq = parse_req(&command, value)?;
            exec::surfaces(req.c2)?
        }
        other => {
            return Err(anyhow!(
                "unknown command {other:?} in problem file (expected one of polygon, stats, \
                 positivity, bruhat, fiber-codim, bound, n0, hodge-check, lv-pipeline, \
                 surface-hilbert)"
            ))
        }
    };
    Ok((command, inputs, results))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn write_temp(contents: &str) -> tempfile_path::TempPath {
        tempfile_path::write(contents)
    }

    /// Minimal scoped temp-file helper so tests need no extra dependency.
    mod tempfile_path {
        use std::path::PathBuf;
        use std::sync::atomic::{AtomicU64, Ordering};

        pub struct TempPath(pub PathBuf);

        impl Drop for TempPath {
            fn drop(&mut self) {
                let _ = std::fs::remove_file(&self.0);
            }
        }

        static COUNTER: AtomicU64 = AtomicU64::new(0);

        pub fn write(contents: &str) -> TempPath {
            let n = COUNTER.fetch_add(1, Ordering::Relaxed);
            let path = std::env::temp_dir().join(format!(
                "redcomb-runfile-{}-{}.json",
                std::process::id(),
                n
            ));
            std::fs::write(&path, contents).unwrap();
            TempPath(path)
        }
    }

    #[test]
    fn polygon_file_runs() {
        let f = write_temp(r#"{"command":"polygon","group":"gl:3","point":"1,0,0","at":"2"}"#);
        let (command, inputs, results) = run(f.0.to_str().unwrap()).unwrap();
        assert_eq!(command, "polygon");
        assert_eq!(inputs["group"], "gl:3");
        assert_eq!(results["value"], "2");
    }

    #[test]
    fn unknown_fields_are_rejected() {
        let f = write_temp(r#"{"command":"stats","group":"gl:2","point":"1,0","extra":true}"#);
        let err = run(f.0.to_str().unwrap()).unwrap_err().to_string();
        assert!(err.contains("extra"), "diagnostic names the field: {err}");
    }

    #[test]
    fn unknown_command_is_rejected() {
        let f = write_temp(r#"{"command":"frobnicate"}"#);
        let err = run(f.0.to_str().unwrap()).unwrap_err().to_string();
        assert!(err.contains("frobnicate"));
    }

    #[test]
    fn missing_command_is_rejected() {
        let f = write_temp(r#"{"group":"gl:2"}"#);
        let err = run(f.0.to_str().unwrap()).unwrap_err().to_string();
        assert!(err.contains("command"));
    }

    #[test]
    fn n0_file_matches_direct_call() {
        let f = write_temp(r#"{"command":"n0","family":"gl:2","point":"1,0","n":3}"#);
        let (_, _, results) = run(f.0.to_str().unwrap()).unwrap();
        assert_eq!(results["n0"], 5);
    }

    #[test]
    fn bound_file_defaults_centralizer() {
        let f = write_temp(r#"{"command":"bound","group":"gl:2","point":"1,0","n":1}"#);
        let (_, inputs, results) = run(f.0.to_str().unwrap()).unwrap();
        assert_eq!(inputs["dim_centralizer"], 4);
        assert_eq!(results["inequalities"], true);
    }
}
