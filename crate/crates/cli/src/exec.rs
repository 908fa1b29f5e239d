//! Command executors: each takes the raw request fields, runs the library,
//! and returns the `(inputs, results)` pair of JSON objects.

use anyhow::{anyhow, Result};
use serde_json::{json, Value};

use redcomb::bounds::{
    codim_conclusion, default_centralizer_bound, n0_search, theorem_inequalities, BoundProblem,
    N0Result, UniformProblem,
};
use redcomb::bruhat::{bruhat_reps, fiber_codimension, CodimBound};
use redcomb::building::{parabolic_stats, ParabolicStats};
use redcomb::hodge::{
    lv_pipeline, numerical_condition, profile_from_chis, surface_hilbert, ConditionInput,
    HodgeProfile,
};
use redcomb::polygon::adjoint_polygon;
use redcomb::positivity::{is_positive, positivity_pairing};
use redcomb::rat::{format_rational, parse_rational, rat, Rational};
use redcomb::root_data::WeylElement;

use crate::parse::{parse_group, parse_i64_list, parse_parabolic, parse_point, parse_u64_list};

fn rationals_json(values: &[Rational]) -> Value {
    Value::Array(values.iter().map(|v| json!(format_rational(v))).collect())
}

fn stats_json(stats: &ParabolicStats) -> Value {
    json!({
        "dim_p": stats.dim_p,
        "dim_p_ss": stats.dim_p_ss,
        "dim_rad_p": stats.dim_rad_p,
        "dim_flag": stats.dim_flag,
        "rank": stats.rank,
    })
}

fn weyl_json(w: &WeylElement) -> Value {
    json!({ "perm": w.perm(), "signs": w.signs() })
}

pub fn polygon(group: &str, point: &str, at: Option<&str>) -> Result<(Value, Value)> {
    let datum = parse_group(group)?;
    let x = parse_point(&datum, point)?;
    let poly = adjoint_polygon(&datum, &x)?;
    let mut inputs = json!({ "group": group, "point": rationals_json(x.entries()) });
    let results = match at {
        Some(t) => {
            let arg = parse_rational(t)?;
            inputs["at"] = json!(format_rational(&arg));
            let value = poly.evaluate(&arg)?;
            json!({ "value": format_rational(&value) })
        }
        None => json!({
            "dim": poly.dim(),
            "max": format_rational(&poly.max_value()),
            "integer_values": rationals_json(poly.integer_values()),
        }),
    };
    Ok((inputs, results))
}

pub fn stats(group: &str, point: &str) -> Result<(Value, Value)> {
    let datum = parse_group(group)?;
    let x = parse_point(&datum, point)?;
    let stats = parabolic_stats(&datum, &x)?;
    let inputs = json!({ "group": group, "point": rationals_json(x.entries()) });
    Ok((inputs, stats_json(&stats)))
}

pub fn positivity(group: &str, point: &str, parabolic: &str) -> Result<(Value, Value)> {
    let datum = parse_group(group)?;
    let x = parse_point(&datum, point)?;
    let q = parse_parabolic(&datum, parabolic)?;
    let value = positivity_pairing(&datum, &q, &x)?;
    let positive = is_positive(&datum, &q, &x)?;
    let inputs = json!({
        "group": group,
        "point": rationals_json(x.entries()),
        "parabolic": parabolic,
    });
    let results = json!({
        "delta": q.delta(),
        "pairing": format_rational(&value),
        "positive": positive,
    });
    Ok((inputs, results))
}

pub fn bruhat(group: &str, q_spec: &str, p_spec: &str) -> Result<(Value, Value)> {
    let datum = parse_group(group)?;
    let q = parse_parabolic(&datum, q_spec)?;
    let p = parse_parabolic(&datum, p_spec)?;
    let reps = bruhat_reps(&datum, &q, &p)?;
    let inputs = json!({ "group": group, "q": q_spec, "p": p_spec });
    let results = json!({
        "count": reps.len(),
        "elements": reps.iter().map(weyl_json).collect::<Vec<_>>(),
    });
    Ok((inputs, results))
}

pub fn fiber_codim(group: &str, point: &str, q_spec: &str) -> Result<(Value, Value)> {
    let datum = parse_group(group)?;
    let x = parse_point(&datum, point)?;
    let q = parse_parabolic(&datum, q_spec)?;
    let bound = fiber_codimension(&datum, &x, &q)?;
    let inputs = json!({
        "group": group,
        "point": rationals_json(x.entries()),
        "q": q_spec,
    });
    let results = match bound {
        CodimBound::Finite(c) => json!({ "codimension": c }),
        CodimBound::Infinite => json!({ "codimension": "infinite" }),
    };
    Ok((inputs, results))
}

pub fn bound(
    group: &str,
    point: &str,
    n: u64,
    dim_centralizer: Option<u64>,
) -> Result<(Value, Value)> {
    let datum = parse_group(group)?;
    let x = parse_point(&datum, point)?;
    let stats = parabolic_stats(&datum, &x)?;
    let dim_c = dim_centralizer.unwrap_or_else(|| default_centralizer_bound(datum.dim_group()));
    let problem = BoundProblem {
        polygon: adjoint_polygon(&datum, &x)?,
        dim_flag_bar: stats.dim_flag,
        dim_p_ss_bar: stats.dim_p_ss,
        rank_bar: stats.rank,
        n,
        dim_centralizer: dim_c,
    };
    let holds = theorem_inequalities(&problem)?;
    let inputs = json!({
        "group": group,
        "point": rationals_json(x.entries()),
        "n": n,
        "dim_centralizer": dim_c,
    });
    let results = if holds {
        json!({ "inequalities": true, "codimension": codim_conclusion(&problem)? })
    } else {
        json!({ "inequalities": false })
    };
    Ok((inputs, results))
}

pub fn n0(family: &str, point: &str, n: u64) -> Result<(Value, Value)> {
    let datum = parse_group(family)?;
    let x = parse_point(&datum, point)?;
    let stats = parabolic_stats(&datum, &x)?;
    let mut allowed: Vec<Rational> = vec![rat(0)];
    for v in x.entries() {
        allowed.push(v.clone());
        allowed.push(-v.clone());
    }
    let up = UniformProblem {
        slopes_allowed: allowed,
        n,
        dim_h: datum.dim_group(),
        h_polygon: adjoint_polygon(&datum, &x)?,
        h_flag_dim: stats.dim_flag,
        h_p_ss: stats.dim_p_ss,
        h_rank: stats.rank,
    };
    let inputs = json!({
        "family": family,
        "point": rationals_json(x.entries()),
        "n": n,
    });
    let results = match n0_search(&up)? {
        N0Result::Finite(n0) => json!({ "n0": n0 }),
        N0Result::NoFiniteN(reason) => json!({ "n0": null, "reason": reason.to_string() }),
    };
    Ok((inputs, results))
}

pub fn hodge_check(
    d: u32,
    g: u64,
    chi_top_bar: i64,
    chi_o_bar: i64,
    symmetric: bool,
) -> Result<(Value, Value)> {
    let verdict = numerical_condition(&ConditionInput {
        d,
        g,
        chi_top_bar,
        chi_o_bar,
        symmetric,
    });
    let inputs = json!({
        "d": d,
        "g": g,
        "chi_top_bar": chi_top_bar,
        "chi_o_bar": chi_o_bar,
        "symmetric": symmetric,
    });
    let results = match verdict.violated_case {
        Some(case) => json!({ "verdict": verdict.verdict, "case": case }),
        None => json!({ "verdict": verdict.verdict }),
    };
    Ok((inputs, results))
}

pub fn lv(
    d: u32,
    h_spec: Option<&str>,
    chis_spec: Option<&str>,
    symmetric: bool,
    dim_base: u64,
) -> Result<(Value, Value)> {
    let profile: HodgeProfile = match (h_spec, chis_spec) {
        (Some(h), None) => HodgeProfile::new(d, parse_u64_list(h)?, symmetric)?,
        (None, Some(chis)) => profile_from_chis(d, &parse_i64_list(chis)?, symmetric)?,
        _ => return Err(anyhow!("provide exactly one of --h and --chis")),
    };
    let report = lv_pipeline(&profile, dim_base)?;
    let mut inputs = json!({
        "d": d,
        "h": profile.h(),
        "symmetric": symmetric,
        "dim_base": dim_base,
    });
    if let Some(chis) = chis_spec {
        inputs["chis"] = json!(parse_i64_list(chis)?);
    }
    let q_value = i64::try_from(report.skull.q_value)
        .map(|v| json!(v))
        .unwrap_or_else(|_| json!(report.skull.q_value.to_string()));
    let mut results = json!({
        "family": report.family.to_string(),
        "y": rationals_json(report.y.entries()),
        "dim_h": report.dim_h,
        "stats": stats_json(&report.stats),
        "skull": { "verdict": report.skull.verdict, "q_value": q_value },
        "ss": report.ss,
        "implication_ok": report.implication_ok,
        "n": report.n,
    });
    match report.n0 {
        Some(N0Result::Finite(n0)) => results["n0"] = json!(n0),
        Some(N0Result::NoFiniteN(reason)) => {
            results["n0"] = Value::Null;
            results["n0_reason"] = json!(reason.to_string());
        }
        None => results["n0"] = Value::Null,
    }
    Ok((inputs, results))
}

pub fn surfaces(c2: u64) -> Result<(Value, Value)> {
    let entries = surface_hilbert(c2)?;
    let inputs = json!({ "c2": c2 });
    let results = json!({
        "entries": entries
            .iter()
            .map(|s| {
                json!({
                    "c1sq": s.c1sq,
                    "chi_o": s.chi_o,
                    "hilbert": rationals_json(&s.hilbert),
                })
            })
            .collect::<Vec<_>>(),
    });
    Ok((inputs, results))
}
