//! Small text/JSON rendering helpers shared by the subcommands.

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::Serialize;

/// Prints aligned `key   value` lines.
pub fn key_values<K: AsRef<str>, V: AsRef<str>>(rows: &[(K, V)]) {
    let width = rows
        .iter()
        .map(|(k, _)| k.as_ref().len())
        .max()
        .unwrap_or(0);
    for (key, value) in rows {
        println!("{:<width$}  {}", key.as_ref(), value.as_ref());
    }
}

/// Prints a left-aligned table with a header row. Widths are measured in
/// characters so entries like `Z/2 ⊕ Z/6` stay aligned.
pub fn table(header: &[&str], rows: &[Vec<String>]) {
    let cols = header.len();
    let text_width = |s: &str| s.chars().count();
    let mut widths: Vec<usize> = header.iter().map(|h| text_width(h)).collect();
    for row in rows {
        for (i, cell) in row.iter().enumerate() {
            widths[i] = widths[i].max(text_width(cell));
        }
    }
    let render_row = |cells: &[String]| {
        let mut line = String::new();
        for (i, cell) in cells.iter().enumerate() {
            if i + 1 == cols {
                line.push_str(cell);
            } else {
                line.push_str(cell);
                line.push_str(&" ".repeat(widths[i] - text_width(cell) + 2));
            }
        }
        line.trim_end().to_string()
    };
    let header_cells: Vec<String> = header.iter().map(ToString::to_string).collect();
    println!("{}", render_row(&header_cells));
    for row in rows {
        println!("{}", render_row(row));
    }
}

/// Serializes one value as a single JSON line.
pub fn json_line<T: Serialize>(value: &T) {
    println!(
        "{}",
        serde_json::to_string(value).expect("report serializes")
    );
}

/// A JSON number when the value fits in `i64`, else a decimal string.
pub fn bigint_json(value: &BigInt) -> serde_json::Value {
    match value.to_i64() {
        Some(v) => serde_json::Value::from(v),
        None => serde_json::Value::from(value.to_string()),
    }
}
