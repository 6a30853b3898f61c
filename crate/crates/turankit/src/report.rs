//! Deterministic, locale-independent formatting for report files.

/// 17 significant digits, scientific notation. Enough to round-trip any
/// binary64 value, so identical configs yield byte-identical files.
pub fn fmt_float(v: f64) -> String {
    format!("{v:.16e}")
}

/// Render rows as CSV with a header, all floats through [`fmt_float`].
pub fn csv_table(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut out = header.join(",");
    out.push('\n');
    for row in rows {
        out.push_str(&row.join(","));
        out.push('\n');
    }
    out
}
