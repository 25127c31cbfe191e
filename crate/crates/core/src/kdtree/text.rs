//! Line-based text dump of a tree, for debugging and golden tests.
//!
//! ```text
//! srkd-kdtree 1
//! mode <batch|incremental-classic|incremental-lie>
//! root <id|->
//! vertices <count>
//! <id> <index> <depth> <x> <y> <theta> <n0> <n1> <n2> <left|-> <right|->
//! ...
//! ```
//!
//! Vertex ids are positions in the vertex list. Floats use Rust's shortest
//! round-trip formatting, so a dump parses back to an identical tree.

use std::fmt::Write as _;

use super::{BuildMode, KdTree, Splitting, Vertex};
use crate::error::{Error, Result};
use crate::geometry::Se2Point;

const MAGIC: &str = "srkd-kdtree 1";

fn opt(id: Option<u32>) -> String {
    id.map_or_else(|| "-".to_string(), |i| i.to_string())
}

impl KdTree {
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "{MAGIC}");
        let _ = writeln!(s, "mode {}", self.mode.name());
        let _ = writeln!(s, "root {}", opt(self.root));
        let _ = writeln!(s, "vertices {}", self.vertices.len());
        for (id, v) in self.vertices.iter().enumerate() {
            let [x, y, t] = v.point.coords();
            let [a, b, c] = v.normal;
            let _ = writeln!(
                s,
                "{id} {} {} {x} {y} {t} {a} {b} {c} {} {}",
                v.index,
                v.depth,
                opt(v.left),
                opt(v.right)
            );
        }
        s
    }

    pub fn from_text(text: &str) -> Result<Self> {
        let err = |line: usize, msg: &str| Error::Parse { line, msg: msg.to_string() };
        let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l.trim()));

        let mut header = |key: &str| -> Result<(usize, String)> {
            let (n, l) = lines.next().ok_or_else(|| err(0, "unexpected end of input"))?;
            if key.is_empty() {
                return Ok((n, l.to_string()));
            }
            l.strip_prefix(key)
                .map(|rest| (n, rest.trim().to_string()))
                .ok_or_else(|| err(n, &format!("expected `{key}`")))
        };

        let (n, magic) = header("")?;
        if magic != MAGIC {
            return Err(err(n, "bad magic line"));
        }
        let (n, mode) = header("mode")?;
        let mode = match mode.as_str() {
            "batch" => BuildMode::Batch,
            "incremental-classic" => BuildMode::Incremental(Splitting::Classic),
            "incremental-lie" => BuildMode::Incremental(Splitting::Lie),
            _ => return Err(err(n, "unknown mode")),
        };
        let (n, root) = header("root")?;
        let root = parse_opt(&root).ok_or_else(|| err(n, "bad root id"))?;
        let (n, count) = header("vertices")?;
        let count: usize = count.parse().map_err(|_| err(n, "bad vertex count"))?;

        let mut vertices = Vec::with_capacity(count);
        for expected in 0..count {
            let (n, l) = lines.next().ok_or_else(|| err(0, "missing vertex lines"))?;
            let f: Vec<&str> = l.split_whitespace().collect();
            if f.len() != 11 {
                return Err(err(n, "expected 11 fields"));
            }
            let id: usize = f[0].parse().map_err(|_| err(n, "bad id"))?;
            if id != expected {
                return Err(err(n, "vertex ids must be consecutive"));
            }
            let num = |i: usize| f[i].parse::<f64>().map_err(|_| err(n, "bad number"));
            let child = |i: usize| parse_opt(f[i]).ok_or_else(|| err(n, "bad child id"));
            vertices.push(Vertex {
                index: f[1].parse().map_err(|_| err(n, "bad index"))?,
                depth: f[2].parse().map_err(|_| err(n, "bad depth"))?,
                point: Se2Point::try_new(num(3)?, num(4)?, num(5)?).map_err(|e| err(n, &e.to_string()))?,
                normal: [num(6)?, num(7)?, num(8)?],
                left: child(9)?,
                right: child(10)?,
            });
        }
        let in_range = |c: Option<u32>| c.is_none_or(|c| (c as usize) < count);
        if !in_range(root) || (root.is_none() && count > 0) || vertices.iter().any(|v| !in_range(v.left) || !in_range(v.right)) {
            return Err(err(0, "dangling vertex reference"));
        }
        Ok(KdTree { vertices, root, mode })
    }
}

fn parse_opt(s: &str) -> Option<Option<u32>> {
    if s == "-" {
        Some(None)
    } else {
        s.parse().ok().map(Some)
    }
}
