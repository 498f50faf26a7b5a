use std::fs::File;
use std::io::{self, BufRead, BufReader};
use std::path::PathBuf;

use crate::Failure;

/// A non-blank, non-comment input line with its 1-based position.
pub struct Line {
    pub source: String,
    pub number: usize,
    pub text: String,
}

impl Line {
    pub fn location(&self) -> String {
        format!("{}:{}", self.source, self.number)
    }

    /// The leading whitespace-separated fields.
    pub fn fields(&self) -> Vec<&str> {
        self.text.split_whitespace().collect()
    }
}

/// Lines from the given files in order, or from standard input. Blank lines
/// and lines starting with `#` are skipped.
pub fn read_lines(files: &[PathBuf]) -> Result<Vec<Line>, Failure> {
    let mut out = Vec::new();
    if files.is_empty() {
        collect("<stdin>", io::stdin().lock(), &mut out)?;
    }
    for path in files {
        let f = File::open(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
        collect(&path.display().to_string(), BufReader::new(f), &mut out)?;
    }
    Ok(out)
}

fn collect(source: &str, reader: impl BufRead, out: &mut Vec<Line>) -> Result<(), Failure> {
    for (i, line) in reader.lines().enumerate() {
        let text = line.map_err(|e| Failure::Input(format!("{source}: {e}")))?;
        let trimmed = text.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        out.push(Line { source: source.to_string(), number: i + 1, text: trimmed.to_string() });
    }
    Ok(())
}
