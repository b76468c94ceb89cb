use crate::failure::{Classify, Failure};
use anyhow::Context;
use std::path::Path;

/// Writes a CSV file with a leading `# config ...` provenance comment, a
/// header row, then the data rows. Floats use shortest round-trip decimal
/// formatting, so reruns with identical inputs are byte-identical.
pub fn write_csv(
    path: &Path,
    config: &serde_json::Value,
    header: &str,
    rows: impl IntoIterator<Item = String>,
) -> Result<(), Failure> {
    let mut text = String::new();
    text.push_str(&format!("# config {config}\n"));
    text.push_str(header);
    text.push('\n');
    for row in rows {
        text.push_str(&row);
        text.push('\n');
    }
    std::fs::write(path, text)
        .with_context(|| format!("cannot write {}", path.display()))
        .or_runtime()
}

/// Writes a pretty-printed JSON document.
pub fn write_json(path: &Path, value: &serde_json::Value) -> Result<(), Failure> {
    let text = serde_json::to_string_pretty(value).or_runtime()?;
    std::fs::write(path, text + "\n")
        .with_context(|| format!("cannot write {}", path.display()))
        .or_runtime()
}
