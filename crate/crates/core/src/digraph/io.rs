use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

use super::Digraph;

#[derive(Serialize, Deserialize)]
struct Wire {
    n: usize,
    edges: Vec<[usize; 2]>,
}

impl Digraph {
    /// Text form: the vertex count on the first line, then one `u v` pair
    /// per line, 1-indexed, in lexicographic order.
    pub fn to_text(&self) -> String {
        let mut s = format!("{}\n", self.n);
        for (u, v) in self.edges() {
            s.push_str(&format!("{} {}\n", u + 1, v + 1));
        }
        s
    }

    /// Parses the text form. Blank lines and `#` comments are ignored.
    pub fn parse_text(text: &str) -> Result<Digraph> {
        let mut lines = text
            .lines()
            .map(|l| l.split('#').next().unwrap_or("").trim())
            .enumerate()
            .filter(|(_, l)| !l.is_empty());
        let (_, first) = lines.next().ok_or_else(|| Error::Parse("missing vertex count".into()))?;
        let n: usize = first
            .parse()
            .map_err(|_| Error::Parse(format!("bad vertex count `{first}`")))?;
        let mut edges = Vec::new();
        for (lineno, line) in lines {
            let nums: Vec<&str> = line.split_whitespace().collect();
            let parsed: Vec<usize> = nums.iter().filter_map(|t| t.parse().ok()).collect();
            if nums.len() != 2 || parsed.len() != 2 {
                return Err(Error::Parse(format!("line {}: expected `u v`, got `{line}`", lineno + 1)));
            }
            let (u, v) = (parsed[0], parsed[1]);
            if u == 0 || v == 0 || u > n || v > n {
                return Err(Error::Parse(format!("line {}: vertex out of range 1..={n}", lineno + 1)));
            }
            edges.push((u, v));
        }
        Digraph::from_one_based(n, &edges).map_err(|e| Error::Parse(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("digraph serializes")
    }

    pub fn parse_json(text: &str) -> Result<Digraph> {
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
    }

    /// Parses either format, choosing JSON when the input starts with `{`.
    pub fn parse(text: &str) -> Result<Digraph> {
        if text.trim_start().starts_with('{') {
            Digraph::parse_json(text)
        } else {
            Digraph::parse_text(text)
        }
    }
}

impl Serialize for Digraph {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        Wire {
            n: self.n,
            edges: self.edges().into_iter().map(|(u, v)| [u + 1, v + 1]).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Digraph {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let w = Wire::deserialize(d)?;
        let edges: Vec<_> = w.edges.iter().map(|e| (e[0], e[1])).collect();
        Digraph::from_one_based(w.n, &edges).map_err(D::Error::custom)
    }
}
