//! Scenario files and small argument parsers.

use std::fs;
use std::path::{Path, PathBuf};

use maxwell_core::scenario::FieldScenario;
use nalgebra::Matrix3;

use crate::error::{CliError, CliResult};

/// Reads a scenario; schema errors name the offending key path.
pub fn load_scenario(path: &Path) -> CliResult<FieldScenario> {
    let text = fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    parse_scenario(&text).map_err(|message| CliError::Input {
        path: path.to_path_buf(),
        message,
    })
}

/// Parses scenario JSON, reporting the key path of the first error.
pub fn parse_scenario(text: &str) -> Result<FieldScenario, String> {
    let de = &mut serde_json::Deserializer::from_str(text);
    serde_path_to_error::deserialize(de).map_err(|e| {
        let path = e.path().to_string();
        if path == "." {
            e.inner().to_string()
        } else {
            format!("{path}: {}", e.inner())
        }
    })
}

pub fn scenario_json(scenario: &FieldScenario) -> String {
    let mut text = serde_json::to_string_pretty(scenario).expect("scenario serializes");
    text.push('\n');
    text
}

pub fn save_scenario(scenario: &FieldScenario, path: &Path) -> CliResult<()> {
    fs::write(path, scenario_json(scenario)).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })
}

/// Reads a 3x3 real matrix stored as row-major JSON `[[..], [..], [..]]`.
pub fn load_matrix(path: &Path) -> CliResult<Matrix3<f64>> {
    let text = fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    let de = &mut serde_json::Deserializer::from_str(&text);
    let rows: [[f64; 3]; 3] = serde_path_to_error::deserialize(de).map_err(|e| CliError::Input {
        path: PathBuf::from(path),
        message: format!("expected a 3x3 matrix of rows ({}: {})", e.path(), e.inner()),
    })?;
    Ok(Matrix3::from_fn(|i, j| rows[i][j]))
}

/// Comma-separated list of exactly `N` numbers.
pub fn parse_list<const N: usize>(text: &str) -> Result<[f64; N], String> {
    let parts: Vec<&str> = text.split(',').map(str::trim).collect();
    if parts.len() != N {
        return Err(format!("expected {N} comma-separated numbers, got {}", parts.len()));
    }
    let mut out = [0.0; N];
    for (slot, p) in out.iter_mut().zip(&parts) {
        *slot = p.parse::<f64>().map_err(|_| format!("not a number: {p:?}"))?;
        if !slot.is_finite() {
            return Err(format!("not a finite number: {p:?}"));
        }
    }
    Ok(out)
}

/// Decimal or `0x`-prefixed hexadecimal seed.
pub fn parse_seed(text: &str) -> Result<u64, String> {
    let t = text.trim();
    let parsed = match t.strip_prefix("0x").or_else(|| t.strip_prefix("0X")) {
        Some(hex) => u64::from_str_radix(hex, 16),
        None => t.parse(),
    };
    parsed.map_err(|_| format!("invalid seed {text:?}"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lists_and_seeds() {
        assert_eq!(parse_list::<3>("1, 0,-2.5").unwrap(), [1.0, 0.0, -2.5]);
        assert!(parse_list::<3>("1,0").is_err());
        assert!(parse_list::<3>("1,x,0").is_err());
        assert!(parse_list::<2>("1,inf").is_err());
        assert_eq!(parse_seed("0xC0FFEE").unwrap(), 0xC0FFEE);
        assert_eq!(parse_seed("7").unwrap(), 7);
        assert!(parse_seed("-1").is_err());
    }

    #[test]
    fn schema_errors_name_the_key() {
        let err = parse_scenario(r#"{"E": [1, 0, 0], "B": [0, 0]}"#).unwrap_err();
        assert!(err.starts_with("B"), "{err}");
        let err = parse_scenario(r#"{"media": {"kind": "uniform", "eps": "x", "mu": 1}}"#).unwrap_err();
        assert!(err.contains("media"), "{err}");
    }
}
