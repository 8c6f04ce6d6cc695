//! Text parsers for complex numbers and period lists.

use num_complex::Complex;
use qbm_core::{Nome, Periods};

/// Parses `"a"`, `"bi"`, `"a+bi"`, `"a-bi"`, `"i"`, `"-i"` (also with `j`).
pub fn parse_complex(text: &str) -> Result<Complex<f64>, String> {
    let t: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    if t.is_empty() {
        return Err("empty complex number".into());
    }
    let bad = || format!("malformed complex number '{}'", text);
    let value = if let Some(body) = t.strip_suffix('i').or_else(|| t.strip_suffix('j')) {
        // Split at the last sign that is not part of an exponent.
        let bytes = body.as_bytes();
        let split = (1..bytes.len())
            .rev()
            .find(|&k| (bytes[k] == b'+' || bytes[k] == b'-') && !matches!(bytes[k - 1], b'e' | b'E'));
        let (re, im) = match split {
            Some(k) => (&body[..k], &body[k..]),
            None => ("0", body),
        };
        let im = match im {
            "" | "+" => 1.0,
            "-" => -1.0,
            s => s.parse::<f64>().map_err(|_| bad())?,
        };
        let re = re.parse::<f64>().map_err(|_| bad())?;
        Complex::new(re, im)
    } else {
        Complex::new(t.parse::<f64>().map_err(|_| bad())?, 0.0)
    };
    if !value.re.is_finite() || !value.im.is_finite() {
        return Err(format!("non-finite complex number '{}'", text));
    }
    Ok(value)
}

/// Comma-separated complex numbers; the empty string is the empty list.
pub fn parse_complex_list(text: &str) -> Result<Vec<Complex<f64>>, String> {
    if text.trim().is_empty() {
        return Ok(Vec::new());
    }
    text.split(',').map(parse_complex).collect()
}

pub fn parse_real_list(text: &str) -> Result<Vec<f64>, String> {
    text.split(',')
        .map(|s| {
            let v = s.trim().parse::<f64>().map_err(|_| format!("malformed number '{}'", s))?;
            if v.is_finite() {
                Ok(v)
            } else {
                Err(format!("non-finite number '{}'", s))
            }
        })
        .collect()
}

pub fn parse_periods(text: &str) -> Result<Periods<f64>, String> {
    Periods::new(parse_complex_list(text)?).map_err(|e| e.to_string())
}

/// A nome given as `q`; requires `0 < |q| < 1`.
pub fn parse_nome(text: &str) -> Result<Nome<f64>, String> {
    Nome::new(parse_complex(text)?).map_err(|e| e.to_string())
}

pub fn parse_finite(text: &str) -> Result<f64, String> {
    let v = text.trim().parse::<f64>().map_err(|_| format!("malformed number '{}'", text))?;
    if v.is_finite() {
        Ok(v)
    } else {
        Err(format!("non-finite number '{}'", text))
    }
}
