//! Vertex labelings for the two domination parameters.

use std::fmt;

use crate::error::{Error, Result};
use crate::graph::VertexSet;

/// Which parameter a labeling is for; fixes the admissible value range.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Parameter {
    /// Values in `{0, 1, 2}`, weight written `gamma_r`.
    Roman,
    /// Values in `{0, 1, 2, 3}`, weight written `gamma_dr`.
    DoubleRoman,
}

impl Parameter {
    pub fn max_value(self) -> u8 {
        match self {
            Parameter::Roman => 2,
            Parameter::DoubleRoman => 3,
        }
    }

    /// Stable wire name used in solver output and CLI flags.
    pub fn token(self) -> &'static str {
        match self {
            Parameter::Roman => "gamma_r",
            Parameter::DoubleRoman => "gamma_dr",
        }
    }
}

impl fmt::Display for Parameter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.token())
    }
}

/// A total assignment of values to the vertices `0..n` of some graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Assignment {
    kind: Parameter,
    values: Vec<u8>,
}

impl Assignment {
    /// Wraps a value vector, rejecting values above the parameter's range.
    pub fn new(kind: Parameter, values: Vec<u8>) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::ShapeMismatch("assignment needs at least one vertex".into()));
        }
        if let Some((v, &val)) = values.iter().enumerate().find(|(_, &v)| v > kind.max_value()) {
            return Err(Error::Range(format!(
                "value {val} at vertex {v} exceeds the maximum {} for {kind}",
                kind.max_value()
            )));
        }
        Ok(Assignment { kind, values })
    }

    /// Parses `index value` lines covering each of `0..n` exactly once.
    /// Blank lines and `#` comments are skipped; errors carry the 1-based
    /// line number counting every line of the input.
    pub fn parse(kind: Parameter, text: &str, n: usize) -> Result<Self> {
        if n < 1 {
            return Err(Error::ShapeMismatch("assignment needs at least one vertex".into()));
        }
        let mut values = vec![u8::MAX; n];
        let mut filled = 0usize;
        let mut total_lines = 0usize;
        for (i, raw) in text.lines().enumerate() {
            total_lines = i + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let line_no = i + 1;
            let mut fields = line.split_ascii_whitespace();
            let idx_tok = fields
                .next()
                .ok_or_else(|| Error::parse(line_no, "missing vertex index"))?;
            let idx: usize = idx_tok
                .parse()
                .map_err(|_| Error::parse(line_no, format!("bad vertex index `{idx_tok}`")))?;
            let val_tok = fields
                .next()
                .ok_or_else(|| Error::parse(line_no, "missing value"))?;
            let val: u8 = val_tok
                .parse()
                .map_err(|_| Error::parse(line_no, format!("bad value `{val_tok}`")))?;
            if fields.next().is_some() {
                return Err(Error::parse(line_no, "trailing tokens after `index value`"));
            }
            if idx >= n {
                return Err(Error::parse(line_no, format!("vertex {idx} outside 0..{n}")));
            }
            if val > kind.max_value() {
                return Err(Error::parse(
                    line_no,
                    format!("value {val} exceeds the maximum {} for {kind}", kind.max_value()),
                ));
            }
            if values[idx] != u8::MAX {
                return Err(Error::parse(line_no, format!("vertex {idx} assigned twice")));
            }
            values[idx] = val;
            filled += 1;
        }
        if filled < n {
            let missing = values.iter().position(|&v| v == u8::MAX).unwrap();
            return Err(Error::parse(
                total_lines.max(1),
                format!("vertex {missing} has no value"),
            ));
        }
        Ok(Assignment { kind, values })
    }

    /// Renders `index value` lines in ascending vertex order.
    /// `parse(kind, emit(a), n) == a`.
    pub fn emit(&self) -> String {
        let mut out = String::new();
        for (v, &val) in self.values.iter().enumerate() {
            if v > 0 {
                out.push('\n');
            }
            out.push_str(&format!("{v} {val}"));
        }
        out
    }

    pub fn kind(&self) -> Parameter {
        self.kind
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn values(&self) -> &[u8] {
        &self.values
    }

    pub fn value(&self, v: usize) -> u8 {
        self.values[v]
    }

    /// Total weight, summed wide enough for any graph this crate can build.
    pub fn weight(&self) -> u64 {
        self.values.iter().map(|&v| u64::from(v)).sum()
    }

    /// The vertices assigned exactly `value`.
    pub fn class(&self, value: u8) -> VertexSet {
        VertexSet::from_iter(
            self.values
                .iter()
                .enumerate()
                .filter(|(_, &v)| v == value)
                .map(|(i, _)| i),
        )
    }

    /// All classes `V_0 ..= V_max` in value order; a partition of the
    /// vertex set.
    pub fn partition(&self) -> Vec<VertexSet> {
        (0..=self.kind.max_value()).map(|v| self.class(v)).collect()
    }

    /// Reinterprets the labeling for the smaller parameter by capping
    /// values at 2. Capping any valid double Roman labeling yields a valid
    /// Roman one, which is what makes `gamma_r <= gamma_dr` immediate.
    pub fn capped_at_two(&self) -> Assignment {
        Assignment {
            kind: Parameter::Roman,
            values: self.values.iter().map(|&v| v.min(2)).collect(),
        }
    }
}

impl fmt::Display for Assignment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.emit())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(members: impl IntoIterator<Item = usize>) -> VertexSet {
        VertexSet::from_iter(members)
    }

    #[test]
    fn new_validates_range() {
        assert!(Assignment::new(Parameter::Roman, vec![0, 1, 2]).is_ok());
        assert!(Assignment::new(Parameter::Roman, vec![0, 3]).is_err());
        assert!(Assignment::new(Parameter::DoubleRoman, vec![3, 0]).is_ok());
        assert!(Assignment::new(Parameter::DoubleRoman, vec![4]).is_err());
        assert!(Assignment::new(Parameter::Roman, vec![]).is_err());
    }

    #[test]
    fn parse_and_emit_round_trip() {
        let a = Assignment::parse(Parameter::Roman, "0 2\n1 0\n2 0", 3).unwrap();
        assert_eq!(a.values(), &[2, 0, 0]);
        assert_eq!(a.emit(), "0 2\n1 0\n2 0");
        let again = Assignment::parse(Parameter::Roman, &a.emit(), 3).unwrap();
        assert_eq!(again, a);

        // Order in the file does not matter; comments and blanks skipped.
        let b = Assignment::parse(Parameter::DoubleRoman, "# witness\n2 3\n\n0 0\n1 2", 3).unwrap();
        assert_eq!(b.values(), &[0, 2, 3]);
    }

    #[test]
    fn parse_errors_carry_line_numbers() {
        let dup = Assignment::parse(Parameter::Roman, "0 1\n1 0\n0 2", 3).unwrap_err();
        assert!(matches!(dup, Error::Parse { line: 3, .. }), "{dup}");

        let range = Assignment::parse(Parameter::Roman, "0 3", 1).unwrap_err();
        assert!(matches!(range, Error::Parse { line: 1, .. }), "{range}");

        let oob = Assignment::parse(Parameter::Roman, "0 1\n5 0", 2).unwrap_err();
        assert!(matches!(oob, Error::Parse { line: 2, .. }), "{oob}");

        let missing = Assignment::parse(Parameter::Roman, "# header\n0 1", 2).unwrap_err();
        match missing {
            Error::Parse { line, msg } => {
                assert_eq!(line, 2);
                assert!(msg.contains("vertex 1"), "{msg}");
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn weight_and_classes() {
        let a = Assignment::new(Parameter::DoubleRoman, vec![3, 0, 0]).unwrap();
        assert_eq!(a.weight(), 3);

        let b = Assignment::new(Parameter::Roman, vec![2, 0, 1]).unwrap();
        assert_eq!(b.class(2), set([0]));
        assert_eq!(b.class(0), set([1]));
        assert_eq!(b.class(1), set([2]));
        let parts = b.partition();
        assert_eq!(parts.len(), 3);
        assert_eq!(parts.iter().map(VertexSet::len).sum::<usize>(), 3);
    }

    #[test]
    fn capping_produces_a_roman_labeling() {
        let a = Assignment::new(Parameter::DoubleRoman, vec![3, 0, 2]).unwrap();
        let capped = a.capped_at_two();
        assert_eq!(capped.kind(), Parameter::Roman);
        assert_eq!(capped.values(), &[2, 0, 2]);
        assert_eq!(capped.weight(), 4);
    }
}
