//! JSON file formats: polytopes, cones, fans and class records.
//!
//! Single objects are plain JSON; lists are line-delimited, one object per
//! line. Writers sort everything so output is byte-stable.

use serde::{Deserialize, Serialize};

use crate::classify::{ClassEntry, ClassificationResult};
use crate::cones::{is_smooth, is_very_ample, Fan, RationalCone};
use crate::equivalence::CanonicalForm;
use crate::error::{Error, Result};
use crate::lattice::IntVector;
use crate::polytope::LatticePolytope;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolytopeFile {
    pub dim: usize,
    pub vertices: Vec<IntVector>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConeFile {
    pub generators: Vec<IntVector>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FanFile {
    pub rays: Vec<IntVector>,
    pub cones: Vec<Vec<usize>>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RecordFlags {
    pub smooth: bool,
    pub very_ample: bool,
    /// `None` when no search was run.
    pub flag_triangulation_found: Option<bool>,
}

/// One integral equivalence class.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassRecord {
    pub id: String,
    pub dim: usize,
    pub num_vertices: usize,
    pub num_lattice_points: usize,
    pub vertices: Vec<IntVector>,
    pub source_fan: Option<String>,
    pub flags: RecordFlags,
}

fn parse_err(line: usize, e: impl std::fmt::Display) -> Error {
    Error::Parse { line, message: e.to_string() }
}

fn check_dims(dim: usize, vs: &[IntVector], line: usize) -> Result<()> {
    if let Some(v) = vs.iter().find(|v| v.dim() != dim) {
        return Err(parse_err(line, format!("vertex {v} does not have dimension {dim}")));
    }
    Ok(())
}

impl PolytopeFile {
    pub fn from_polytope(p: &LatticePolytope) -> PolytopeFile {
        PolytopeFile { dim: p.ambient_dim(), vertices: p.vertices().to_vec() }
    }

    pub fn to_polytope(&self) -> Result<LatticePolytope> {
        check_dims(self.dim, &self.vertices, 1)?;
        LatticePolytope::hull_from_points(&self.vertices)
    }
}

pub fn polytope_to_json(p: &LatticePolytope) -> String {
    serde_json::to_string(&PolytopeFile::from_polytope(p)).expect("serializable")
}

pub fn read_polytope(text: &str) -> Result<LatticePolytope> {
    let f: PolytopeFile = serde_json::from_str(text).map_err(|e| parse_err(e.line(), e))?;
    f.to_polytope()
}

/// Line-delimited polytopes; blank lines are skipped, errors carry the line.
pub fn read_polytope_list(text: &str) -> Result<Vec<LatticePolytope>> {
    let mut out = Vec::new();
    for (i, line) in text.lines().enumerate() {
        if line.trim().is_empty() {
            continue;
        }
        let f: PolytopeFile = serde_json::from_str(line).map_err(|e| parse_err(i + 1, e))?;
        check_dims(f.dim, &f.vertices, i + 1)?;
        out.push(LatticePolytope::hull_from_points(&f.vertices).map_err(|e| parse_err(i + 1, e))?);
    }
    Ok(out)
}

pub fn write_polytope_list(ps: &[LatticePolytope]) -> String {
    ps.iter().map(|p| polytope_to_json(p) + "\n").collect()
}

pub fn read_cone(text: &str) -> Result<RationalCone> {
    let f: ConeFile = serde_json::from_str(text).map_err(|e| parse_err(e.line(), e))?;
    RationalCone::new(&f.generators)
}

pub fn fan_to_json(f: &Fan) -> String {
    let n = f.normalized();
    serde_json::to_string(&FanFile { rays: n.rays().to_vec(), cones: n.cones().to_vec() }).expect("serializable")
}

pub fn read_fan(text: &str) -> Result<Fan> {
    let f: FanFile = serde_json::from_str(text).map_err(|e| parse_err(e.line(), e))?;
    Fan::new(f.rays, f.cones)
}

/// Fans given either as a JSON array or one object per line.
pub fn read_fan_list(text: &str) -> Result<Vec<Fan>> {
    if text.trim_start().starts_with('[') {
        let fs: Vec<FanFile> = serde_json::from_str(text).map_err(|e| parse_err(e.line(), e))?;
        return fs.into_iter().map(|f| Fan::new(f.rays, f.cones)).collect();
    }
    let mut out = Vec::new();
    for (i, line) in text.lines().enumerate() {
        if line.trim().is_empty() {
            continue;
        }
        let f: FanFile = serde_json::from_str(line).map_err(|e| parse_err(i + 1, e))?;
        out.push(Fan::new(f.rays, f.cones).map_err(|e| parse_err(i + 1, e))?);
    }
    Ok(out)
}

impl ClassRecord {
    pub fn new(form: &CanonicalForm, source_fan: Option<String>, flag_triangulation_found: Option<bool>) -> ClassRecord {
        let p = form.polytope();
        ClassRecord {
            id: form.id(),
            dim: form.dim,
            num_vertices: p.vertices().len(),
            num_lattice_points: p.num_lattice_points(),
            vertices: form.vertices.clone(),
            source_fan,
            flags: RecordFlags {
                smooth: is_smooth(&p),
                very_ample: is_very_ample(&p).unwrap_or(false),
                flag_triangulation_found,
            },
        }
    }

    pub fn from_entry(e: &ClassEntry) -> ClassRecord {
        ClassRecord::new(&e.form, Some(e.source_fan.clone()), None)
    }

    fn sort_key(&self) -> (usize, usize, &str) {
        (self.num_lattice_points, self.num_vertices, &self.id)
    }
}

pub fn records_from_result(r: &ClassificationResult) -> Vec<ClassRecord> {
    let mut recs: Vec<ClassRecord> = r.classes.iter().map(ClassRecord::from_entry).collect();
    sort_records(&mut recs);
    recs
}

pub fn sort_records(recs: &mut [ClassRecord]) {
    recs.sort_by(|a, b| a.sort_key().cmp(&b.sort_key()));
}

pub fn write_records(recs: &[ClassRecord]) -> String {
    recs.iter().map(|r| serde_json::to_string(r).expect("serializable") + "\n").collect()
}

pub fn read_records(text: &str) -> Result<Vec<ClassRecord>> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(i, l)| serde_json::from_str(l).map_err(|e| parse_err(i + 1, e)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::equivalence::canonical_form;

    #[test]
    fn polytope_round_trip_sorts_vertices() {
        let p = read_polytope(r#"{"dim":2,"vertices":[[1,1],[0,0],[1,0],[0,1]]}"#).unwrap();
        assert_eq!(polytope_to_json(&p), r#"{"dim":2,"vertices":[[0,0],[0,1],[1,0],[1,1]]}"#);
    }

    #[test]
    fn list_errors_carry_line_numbers() {
        let text = "{\"dim\":2,\"vertices\":[[0,0],[1,0],[0,1]]}\n\n{\"dim\":2,\"vertices\":[[0,0],[1,0,0]]}\n";
        match read_polytope_list(text).unwrap_err() {
            Error::Parse { line, .. } => assert_eq!(line, 3),
            e => panic!("{e}"),
        }
        assert!(matches!(read_polytope_list("{oops").unwrap_err(), Error::Parse { line: 1, .. }));
    }

    #[test]
    fn fan_formats() {
        let text = r#"{"rays":[[0,1],[1,0],[-1,-1]],"cones":[[1,0],[1,2],[0,2]]}"#;
        let f = read_fan(text).unwrap();
        assert_eq!(fan_to_json(&f), r#"{"rays":[[-1,-1],[0,1],[1,0]],"cones":[[0,1],[0,2],[1,2]]}"#);
        assert_eq!(read_fan_list(&format!("[{text},{text}]")).unwrap().len(), 2);
        assert_eq!(read_fan_list(&format!("{text}\n{text}\n")).unwrap().len(), 2);
    }

    #[test]
    fn cone_file() {
        let c = read_cone(r#"{"generators":[[1,0],[1,2]]}"#).unwrap();
        assert_eq!(c.hilbert_basis().len(), 3);
    }

    #[test]
    fn records_round_trip_byte_for_byte() {
        let forms = [
            canonical_form(&LatticePolytope::from_coords(&[[0, 0], [2, 0], [0, 1], [2, 1]]).unwrap()).unwrap(),
            canonical_form(&LatticePolytope::from_coords(&[[0, 0], [1, 0], [0, 1]]).unwrap()).unwrap(),
        ];
        let mut recs: Vec<ClassRecord> = forms.iter().map(|f| ClassRecord::new(f, None, Some(true))).collect();
        sort_records(&mut recs);
        assert_eq!(recs[0].num_lattice_points, 3);
        let text = write_records(&recs);
        assert_eq!(write_records(&read_records(&text).unwrap()), text);
    }
}
