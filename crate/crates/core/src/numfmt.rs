//! Locale-independent number formatting shared by every text output.

/// Formats with 6 significant digits, keeping trailing zeros (C's `%#.6g`):
/// `0.5 -> "0.500000"`, `4.289 -> "4.28900"`, `1e-7 -> "1.00000e-7"`.
pub fn sig6(x: f64) -> String {
    if x == 0.0 {
        return "0.00000".to_string();
    }
    if !x.is_finite() {
        return x.to_string();
    }
    let sci = format!("{x:.5e}");
    let exp: i32 = sci
        .rsplit_once('e')
        .and_then(|(_, e)| e.parse().ok())
        .expect("rust float exponent");
    if (-5..6).contains(&exp) {
        format!("{:.*}", (5 - exp) as usize, x)
    } else {
        sci
    }
}

/// `x` rounded to the value [`sig6`] prints, for structured outputs.
pub fn round6(x: f64) -> f64 {
    sig6(x).parse().unwrap_or(x)
}
