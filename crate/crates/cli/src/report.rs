use std::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    Info,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Info => "INFO",
        })
    }
}

/// One `CHECK <id> <STATUS> key=value ...` line.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Line {
    pub id: String,
    pub status: Status,
    pub details: Vec<(String, String)>,
}

impl Line {
    pub fn new(id: impl Into<String>, status: Status) -> Self {
        Self { id: id.into(), status, details: Vec::new() }
    }

    pub fn check(id: impl Into<String>, ok: bool) -> Self {
        Self::new(id, if ok { Status::Pass } else { Status::Fail })
    }

    pub fn info(id: impl Into<String>) -> Self {
        Self::new(id, Status::Info)
    }

    pub fn kv(mut self, key: &str, value: impl fmt::Display) -> Self {
        self.details.push((key.to_owned(), value.to_string()));
        self
    }

    /// Adds `key=value` only when the check failed (the witness).
    pub fn witness(self, key: &str, value: impl FnOnce() -> String) -> Self {
        if self.status == Status::Fail {
            self.kv(key, value())
        } else {
            self
        }
    }
}

impl fmt::Display for Line {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CHECK {} {}", self.id, self.status)?;
        for (k, v) in &self.details {
            if v.is_empty() || v.contains(char::is_whitespace) {
                write!(f, " {k}={v:?}")?;
            } else {
                write!(f, " {k}={v}")?;
            }
        }
        Ok(())
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Report {
    pub lines: Vec<Line>,
}

impl Report {
    pub fn push(&mut self, line: Line) {
        self.lines.push(line);
    }

    pub fn extend(&mut self, other: Report) {
        self.lines.extend(other.lines);
    }

    pub fn failures(&self) -> usize {
        self.lines.iter().filter(|l| l.status == Status::Fail).count()
    }

    pub fn passed(&self) -> bool {
        self.failures() == 0
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for line in &self.lines {
            writeln!(f, "{line}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn formatting() {
        let l = Line::check("lie.so8.dim", true).kv("dim", 28);
        assert_eq!(l.to_string(), "CHECK lie.so8.dim PASS dim=28");
        let l = Line::info("descent.scope").kv("note", "two words");
        assert_eq!(l.to_string(), "CHECK descent.scope INFO note=\"two words\"");
        let l = Line::check("x", false).witness("at", || "e1".into());
        assert_eq!(l.to_string(), "CHECK x FAIL at=e1");
        assert_eq!(Line::check("x", true).witness("at", || "e1".into()).to_string(), "CHECK x PASS");
    }
}
