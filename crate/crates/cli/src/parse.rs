//! Micro-syntax parsers shared by the command line and the JSON problem
//! files.
//!
//! * group: `gl:3`, `gsp:4`, `go:7`
//! * point: comma-separated canonical rationals, e.g. `1,1/2,-3`
//! * parabolic: `none` (Borel), `all` (the full group), a comma list of
//!   0-based simple-root indices like `0,2`, or `blocks:2,1` for a `GL`
//!   block composition.

use anyhow::{anyhow, Result};
use redcomb::building::ApartmentPoint;
use redcomb::positivity::{gl_blocks_subset, standard_parabolic, StandardParabolic};
use redcomb::rat::{parse_rational, Rational};
use redcomb::root_data::{build_root_datum, GroupFamily, RootDatum};

pub fn parse_group(s: &str) -> Result<RootDatum> {
    let family = GroupFamily::parse(s)?;
    Ok(build_root_datum(family)?)
}

pub fn parse_rational_list(s: &str) -> Result<Vec<Rational>> {
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|part| Ok(parse_rational(part)?))
        .collect()
}

pub fn parse_point(datum: &RootDatum, s: &str) -> Result<ApartmentPoint> {
    let entries = parse_rational_list(s)?;
    Ok(ApartmentPoint::new(datum, entries)?)
}

pub fn parse_u64_list(s: &str) -> Result<Vec<u64>> {
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|part| {
            part.parse::<u64>()
                .map_err(|_| anyhow!("malformed nonnegative integer `{part}`"))
        })
        .collect()
}

pub fn parse_i64_list(s: &str) -> Result<Vec<i64>> {
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|part| {
            part.parse::<i64>()
                .map_err(|_| anyhow!("malformed integer `{part}`"))
        })
        .collect()
}

pub fn parse_usize_list(s: &str) -> Result<Vec<usize>> {
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|part| {
            part.parse::<usize>()
                .map_err(|_| anyhow!("malformed index `{part}`"))
        })
        .collect()
}

pub fn parse_parabolic(datum: &RootDatum, s: &str) -> Result<StandardParabolic> {
    let subset = match s {
        "" => return Err(anyhow!("empty parabolic spec; use `none`, `all`, indices, or blocks:…")),
        "none" => Default::default(),
        "all" => (0..datum.simple_roots().len()).collect(),
        _ => {
            if let Some(blocks) = s.strip_prefix("blocks:") {
                let sizes = parse_u64_list(blocks)?;
                gl_blocks_subset(datum, &sizes)?
            } else {
                parse_usize_list(s)?.into_iter().collect()
            }
        }
    };
    Ok(standard_parabolic(datum, &subset)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use redcomb::rat::{format_rational, rat, ratio};

    #[test]
    fn group_and_point_syntax() {
        let d = parse_group("gl:3").unwrap();
        let x = parse_point(&d, "1,1/2,-3").unwrap();
        assert_eq!(x.entries(), &[rat(1), ratio(1, 2), rat(-3)]);
        assert!(parse_point(&d, "1,0").is_err());
        assert!(parse_point(&d, "1,0,x").is_err());
        assert!(parse_group("gsp:5").is_err());

        // A rank-zero coordinate system takes the empty point.
        let tiny = parse_group("go:1").unwrap();
        assert!(parse_point(&tiny, "").unwrap().entries().is_empty());
    }

    #[test]
    fn parabolic_syntax() {
        let d = parse_group("gl:3").unwrap();
        assert!(parse_parabolic(&d, "none").unwrap().is_borel());
        assert!(parse_parabolic(&d, "all").unwrap().is_full());
        assert_eq!(
            parse_parabolic(&d, "1").unwrap().simple_subset(),
            parse_parabolic(&d, "blocks:1,2").unwrap().simple_subset()
        );
        assert!(parse_parabolic(&d, "5").is_err());
        assert!(parse_parabolic(&d, "").is_err());
        assert!(parse_parabolic(&d, "blocks:1,1").is_err());
        let gsp = parse_group("gsp:4").unwrap();
        assert!(parse_parabolic(&gsp, "blocks:2").is_err());
    }

    proptest! {
        #[test]
        fn rational_round_trip(n in -10_000i64..10_000, d in 1i64..500) {
            let r = ratio(n, d);
            let s = format_rational(&r);
            let back = parse_rational(&s).unwrap();
            prop_assert_eq!(back, r);
        }

        #[test]
        fn point_round_trip(values in proptest::collection::vec((-100i64..100, 1i64..40), 1..6)) {
            let entries: Vec<_> = values.iter().map(|&(n, d)| ratio(n, d)).collect();
            let joined = entries.iter().map(format_rational).collect::<Vec<_>>().join(",");
            let parsed = parse_rational_list(&joined).unwrap();
            prop_assert_eq!(parsed, entries);
        }
    }
}
