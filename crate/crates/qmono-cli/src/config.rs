//! Optional key=value configuration file.
//!
//! The environment variable `QMONO_CONFIG` may point at a file supplying
//! defaults for the verification cutoffs and the output format. Flags
//! always override config values. Recognized keys:
//!
//! ```text
//! nmax   = 3        # bundle-degree cutoff
//! jmax   = 5/2      # spin cutoff (integer or half-integer)
//! seed   = 42       # RNG seed for randomized checks
//! format = md       # md | csv | json
//! ```
//!
//! Blank lines and lines starting with `#` are ignored.

use std::fs;

/// Defaults loaded from the config file; every field optional.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Config {
    pub nmax: Option<i64>,
    pub jmax2: Option<i64>,
    pub seed: Option<u64>,
    pub format: Option<String>,
}

/// Parse "J" or "p/2" into twice the spin.
pub fn parse_half_int(text: &str) -> Result<i64, String> {
    let t = text.trim();
    if let Some((num, den)) = t.split_once('/') {
        if den.trim() != "2" {
            return Err(format!(
                "half-integer {} must use denominator 2",
                text
            ));
        }
        num.trim()
            .parse::<i64>()
            .map_err(|_| format!("bad half-integer {}", text))
    } else {
        t.parse::<i64>()
            .map(|j| 2 * j)
            .map_err(|_| format!("bad half-integer {}", text))
    }
}

fn parse_contents(contents: &str, origin: &str) -> Result<Config, String> {
    let mut cfg = Config::default();
    for (lineno, raw) in contents.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (key, value) = line.split_once('=').ok_or_else(|| {
            format!("{}:{}: expected key=value", origin, lineno + 1)
        })?;
        let key = key.trim();
        let value = value.trim();
        match key {
            "nmax" => {
                cfg.nmax = Some(value.parse::<i64>().map_err(|_| {
                    format!("{}:{}: bad nmax {}", origin, lineno + 1, value)
                })?);
            }
            "jmax" => {
                cfg.jmax2 = Some(parse_half_int(value).map_err(|e| {
                    format!("{}:{}: {}", origin, lineno + 1, e)
                })?);
            }
            "seed" => {
                cfg.seed = Some(value.parse::<u64>().map_err(|_| {
                    format!("{}:{}: bad seed {}", origin, lineno + 1, value)
                })?);
            }
            "format" => match value {
                "md" | "csv" | "json" => cfg.format = Some(value.to_string()),
                _ => {
                    return Err(format!(
                        "{}:{}: bad format {} (expected md, csv, or json)",
                        origin,
                        lineno + 1,
                        value
                    ))
                }
            },
            _ => {
                return Err(format!(
                    "{}:{}: unknown key {}",
                    origin,
                    lineno + 1,
                    key
                ))
            }
        }
    }
    Ok(cfg)
}

/// Load the config named by QMONO_CONFIG, or defaults when unset.
pub fn load() -> Result<Config, String> {
    match std::env::var_os("QMONO_CONFIG") {
        None => Ok(Config::default()),
        Some(path) => {
            let text = fs::read_to_string(&path).map_err(|e| {
                format!("cannot read QMONO_CONFIG {}: {}", path.to_string_lossy(), e)
            })?;
            parse_contents(&text, &path.to_string_lossy())
        }
    }
}

// ---- tests ----

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_keys_and_comments() {
        let cfg = parse_contents(
            "# defaults\n\nnmax = 4\njmax = 5/2\nseed=7\nformat = json\n",
            "test",
        )
        .unwrap();
        assert_eq!(
            cfg,
            Config {
                nmax: Some(4),
                jmax2: Some(5),
                seed: Some(7),
                format: Some("json".into()),
            }
        );
    }

    #[test]
    fn rejects_bad_lines() {
        assert!(parse_contents("nmax 4", "t").is_err());
        assert!(parse_contents("depth = 4", "t").is_err());
        assert!(parse_contents("jmax = 1/3", "t").is_err());
        assert!(parse_contents("format = yaml", "t").is_err());
    }

    #[test]
    fn half_ints() {
        assert_eq!(parse_half_int("3").unwrap(), 6);
        assert_eq!(parse_half_int("5/2").unwrap(), 5);
        assert_eq!(parse_half_int("-1/2").unwrap(), -1);
        assert!(parse_half_int("x").is_err());
    }
}
