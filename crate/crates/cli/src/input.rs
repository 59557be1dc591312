//! Coefficient file parsing: one complex number per line as two
//! whitespace-separated decimals "re im". Blank lines are skipped.

use std::fs;
use std::path::Path;

use cesaro_core::{Complex64, TaylorSeries};

use crate::CliError;

pub fn read_coefficients(path: &Path) -> Result<TaylorSeries, CliError> {
    let text = fs::read_to_string(path).map_err(|e| CliError::Io {
        path: path.display().to_string(),
        source: e,
    })?;
    let mut coeffs = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() {
            continue;
        }
        let mut fields = trimmed.split_whitespace();
        let (re, im) = match (fields.next(), fields.next(), fields.next()) {
            (Some(re), Some(im), None) => (re, im),
            _ => {
                return Err(CliError::Parse {
                    line,
                    msg: "expected exactly two fields: re im".into(),
                })
            }
        };
        let re: f64 = re.parse().map_err(|_| CliError::Parse {
            line,
            msg: format!("bad real part {re:?}"),
        })?;
        let im: f64 = im.parse().map_err(|_| CliError::Parse {
            line,
            msg: format!("bad imaginary part {im:?}"),
        })?;
        if !re.is_finite() || !im.is_finite() {
            return Err(CliError::Parse {
                line,
                msg: "coefficient is not finite".into(),
            });
        }
        coeffs.push(Complex64::new(re, im));
    }
    if coeffs.is_empty() {
        return Err(CliError::Parse {
            line: 1,
            msg: "no coefficients in file".into(),
        });
    }
    TaylorSeries::new(coeffs).map_err(|e| CliError::Parse {
        line: 1,
        msg: e.to_string(),
    })
}
