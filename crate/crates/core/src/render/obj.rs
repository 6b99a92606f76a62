//! Wavefront OBJ with `v` and `f` records only.

use std::fmt::Write as _;

use thiserror::Error;

use super::fmt_num;
use crate::geom::Vec3;
use crate::model::Prismatoid;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum ObjError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct ObjMesh {
    pub vertices: Vec<Vec3>,
    /// Zero-based vertex indices.
    pub faces: Vec<Vec<usize>>,
}

impl ObjMesh {
    pub fn edge_count(&self) -> usize {
        let mut edges: Vec<(usize, usize)> = self
            .faces
            .iter()
            .flat_map(|f| (0..f.len()).map(move |i| (f[i], f[(i + 1) % f.len()])))
            .map(|(a, b)| (a.min(b), a.max(b)))
            .collect();
        edges.sort_unstable();
        edges.dedup();
        edges.len()
    }

    /// `V − E + F`.
    pub fn euler_characteristic(&self) -> i64 {
        self.vertices.len() as i64 - self.edge_count() as i64 + self.faces.len() as i64
    }
}

/// Twelve vertices (`a_0..a_5` then `b_0..b_5`) and eight faces, each
/// counter-clockwise seen from outside.
pub fn export_obj(p: &Prismatoid) -> String {
    let mut out = String::new();
    for id in 0..12 {
        let v = p.vertex(id);
        let _ = writeln!(out, "v {} {} {}", fmt_num(v.x), fmt_num(v.y), fmt_num(v.z));
    }
    for face in p.faces() {
        let idx: Vec<String> = face.iter().map(|i| (i + 1).to_string()).collect();
        let _ = writeln!(out, "f {}", idx.join(" "));
    }
    out
}

pub fn parse_obj(text: &str) -> Result<ObjMesh, ObjError> {
    let mut mesh = ObjMesh::default();
    for (n, raw) in text.lines().enumerate() {
        let line = n + 1;
        let err = |message: String| ObjError::Parse { line, message };
        let mut parts = raw.split_whitespace();
        match parts.next() {
            None => continue,
            Some(t) if t.starts_with('#') => continue,
            Some("v") => {
                let c: Vec<f64> = parts
                    .map(|s| {
                        s.parse::<f64>()
                            .map_err(|e| err(format!("bad coordinate `{s}`: {e}")))
                    })
                    .collect::<Result<_, _>>()?;
                if c.len() < 3 {
                    return Err(err("vertex needs three coordinates".into()));
                }
                mesh.vertices.push(Vec3::new(c[0], c[1], c[2]));
            }
            Some("f") => {
                let mut face = Vec::new();
                for s in parts {
                    // `i`, `i/t`, `i/t/n` or `i//n`
                    let head = s.split('/').next().unwrap_or(s);
                    let i: usize = head
                        .parse()
                        .map_err(|_| err(format!("bad face index `{s}`")))?;
                    if i == 0 || i > mesh.vertices.len() {
                        return Err(err(format!("face index {i} out of range")));
                    }
                    face.push(i - 1);
                }
                if face.len() < 3 {
                    return Err(err("face needs three vertices".into()));
                }
                mesh.faces.push(face);
            }
            Some(other) => return Err(err(format!("unsupported record `{other}`"))),
        }
    }
    Ok(mesh)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::{build_prismatoid, PrismatoidParams};

    #[test]
    fn structure_and_euler() {
        let p = build_prismatoid(PrismatoidParams::default()).unwrap();
        let text = export_obj(&p);
        assert_eq!(text.lines().filter(|l| l.starts_with("v ")).count(), 12);
        assert_eq!(text.lines().filter(|l| l.starts_with("f ")).count(), 8);
        let mesh = parse_obj(&text).unwrap();
        assert_eq!(mesh.edge_count(), 18);
        assert_eq!(mesh.euler_characteristic(), 2);
        for (id, v) in mesh.vertices.iter().enumerate() {
            assert!(v.distance(p.vertex(id)) < 1e-8);
        }
    }

    #[test]
    fn parse_errors() {
        assert!(parse_obj("v 1 2\n").is_err());
        assert!(parse_obj("v 0 0 0\nf 1 2 3\n").is_err());
        assert!(parse_obj("vt 0 0\n").is_err());
        assert!(parse_obj("# comment\n\nv 0 0 0\nv 1 0 0\nv 0 1 0\nf 1/1 2//2 3\n").is_ok());
    }
}
