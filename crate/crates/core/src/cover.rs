//! Facet and ridge covers, self-antipodality, and the cover text format.
//!
//! Text format:
//!
//! ```text
//! d=3 codim=2 sets=3
//! 00X,0X0,X00,...
//! 11X,1X1,X11,...
//! -
//! ```
//!
//! The header is followed by one line per set, faces separated by commas.
//! A lone `-` is an empty set.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::face::{faces_of_codim, Face};

/// One set of a cover: faces of a single codimension, sorted canonically,
/// without duplicates. May be empty.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CoverSet {
    d: u32,
    codim: u32,
    faces: Vec<Face>,
}

impl CoverSet {
    /// Rejects faces from another cube, of another codimension, or repeated.
    pub fn new(d: u32, codim: u32, mut faces: Vec<Face>) -> Result<Self> {
        for f in &faces {
            if f.ambient_dim() != d {
                return Err(Error::DimensionMismatch(d, f.ambient_dim()));
            }
            if f.codim() != codim {
                return Err(Error::CodimensionMismatch {
                    face: f.to_string(),
                    found: f.codim(),
                    expected: codim,
                });
            }
        }
        faces.sort_unstable();
        if let Some(w) = faces.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateFace(w[0].to_string()));
        }
        Ok(CoverSet { d, codim, faces })
    }

    pub(crate) fn from_sorted(d: u32, codim: u32, faces: Vec<Face>) -> Self {
        debug_assert!(faces.windows(2).all(|w| w[0] < w[1]));
        CoverSet { d, codim, faces }
    }

    pub fn empty(d: u32, codim: u32) -> Self {
        CoverSet {
            d,
            codim,
            faces: Vec::new(),
        }
    }

    pub fn faces(&self) -> &[Face] {
        &self.faces
    }

    pub fn len(&self) -> usize {
        self.faces.len()
    }

    pub fn is_empty(&self) -> bool {
        self.faces.is_empty()
    }

    pub fn ambient_dim(&self) -> u32 {
        self.d
    }

    pub fn codim(&self) -> u32 {
        self.codim
    }

    pub fn contains(&self, face: &Face) -> bool {
        self.faces.binary_search(face).is_ok()
    }

    /// A copy with `face` removed (no-op if absent).
    pub fn without(&self, face: &Face) -> CoverSet {
        CoverSet {
            faces: self.faces.iter().copied().filter(|f| f != face).collect(),
            ..self.clone()
        }
    }

    /// Maximum antipodality degree over ordered pairs of members, with the
    /// first maximising pair as witness. -1 (and no witness) for empty or
    /// antipode-free sets.
    pub fn self_antipodality(&self) -> (i32, Option<AntipodalPair>) {
        let mut best = -1;
        let mut best_pair = None;
        for a in &self.faces {
            for b in &self.faces {
                let k = a.degree_unchecked(b);
                if k > best {
                    best = k;
                    best_pair = Some((*a, *b));
                }
            }
        }
        let witness = best_pair.map(|(a, b)| {
            let (sub_a, sub_b) = a
                .antipodal_subfaces_unchecked(&b)
                .expect("positive degree has a realizing pair");
            AntipodalPair {
                face_a: a,
                face_b: b,
                k: best,
                sub_a,
                sub_b,
            }
        });
        (best, witness)
    }

    fn render(&self) -> String {
        if self.faces.is_empty() {
            "-".to_string()
        } else {
            self.faces
                .iter()
                .map(|f| f.to_string())
                .collect::<Vec<_>>()
                .join(",")
        }
    }
}

impl Serialize for CoverSet {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.faces.serialize(s)
    }
}

pub fn set_self_antipodality(set: &CoverSet) -> (i32, Option<AntipodalPair>) {
    set.self_antipodality()
}

/// A realizing antipodal pair inside one set: `sub_a ⊆ face_a`,
/// `sub_b ⊆ face_b`, `sub_b = antipode(sub_a)`, `dim(sub_a) = k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct AntipodalPair {
    pub face_a: Face,
    pub face_b: Face,
    pub k: i32,
    pub sub_a: Face,
    pub sub_b: Face,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct AntipodalWitness {
    pub set_index: usize,
    #[serde(flatten)]
    pub pair: AntipodalPair,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Cover {
    d: u32,
    codim: u32,
    sets: Vec<CoverSet>,
}

impl Cover {
    pub fn new(d: u32, codim: u32, sets: Vec<CoverSet>) -> Result<Self> {
        if codim == 0 || codim > d {
            return Err(Error::InvalidCover(format!(
                "codimension {codim} must lie in 1..={d}"
            )));
        }
        if sets.is_empty() {
            return Err(Error::InvalidCover("a cover needs at least one set".into()));
        }
        for (i, s) in sets.iter().enumerate() {
            if s.d != d || s.codim != codim {
                return Err(Error::InvalidCover(format!(
                    "set {} has d={} codim={}, cover has d={d} codim={codim}",
                    i + 1,
                    s.d,
                    s.codim
                )));
            }
        }
        Ok(Cover { d, codim, sets })
    }

    pub fn ambient_dim(&self) -> u32 {
        self.d
    }

    pub fn codim(&self) -> u32 {
        self.codim
    }

    pub fn sets(&self) -> &[CoverSet] {
        &self.sets
    }

    pub fn nonempty_sets(&self) -> usize {
        self.sets.iter().filter(|s| !s.is_empty()).count()
    }

    /// Appends empty sets until the cover has `n` sets.
    pub fn padded_to(mut self, n: usize) -> Self {
        while self.sets.len() < n {
            self.sets.push(CoverSet::empty(self.d, self.codim));
        }
        self
    }

    /// Faces of the cover's codimension not lying in any set.
    pub fn uncovered(&self) -> Vec<Face> {
        faces_of_codim(self.d, self.codim)
            .expect("cover dimensions validated at construction")
            .into_iter()
            .filter(|f| !self.sets.iter().any(|s| s.contains(f)))
            .collect()
    }

    pub fn is_complete(&self) -> (bool, Vec<Face>) {
        let uncovered = self.uncovered();
        (uncovered.is_empty(), uncovered)
    }

    pub fn to_text(&self) -> String {
        self.to_string()
    }

    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty());
        let (hline, header) = lines.next().ok_or(Error::CoverFormat {
            line: 1,
            message: "missing header".into(),
        })?;
        let (d, codim, n) = parse_header(header).map_err(|message| Error::CoverFormat {
            line: hline,
            message,
        })?;
        if d == 0 || d > crate::face::MAX_DIM {
            return Err(Error::UnsupportedDimension(d));
        }
        let mut sets = Vec::with_capacity(n);
        for (line, body) in lines {
            let faces = if body == "-" {
                Vec::new()
            } else {
                body.split(',')
                    .map(|tok| Face::parse(tok.trim(), d))
                    .collect::<Result<Vec<_>>>()
                    .map_err(|e| Error::CoverFormat {
                        line,
                        message: e.to_string(),
                    })?
            };
            let set = CoverSet::new(d, codim, faces).map_err(|e| Error::CoverFormat {
                line,
                message: e.to_string(),
            })?;
            sets.push(set);
        }
        if sets.len() != n {
            return Err(Error::CoverFormat {
                line: hline,
                message: format!("header announces {n} sets, found {}", sets.len()),
            });
        }
        Cover::new(d, codim, sets)
    }
}

fn parse_header(header: &str) -> std::result::Result<(u32, u32, usize), String> {
    let mut d = None;
    let mut codim = None;
    let mut n = None;
    for part in header.split_whitespace() {
        let (key, val) = part
            .split_once('=')
            .ok_or_else(|| format!("expected key=value, got {part:?}"))?;
        let num = |v: &str| v.parse::<u64>().map_err(|e| format!("{key}: {e}"));
        match key {
            "d" => d = Some(num(val)? as u32),
            "codim" => codim = Some(num(val)? as u32),
            "sets" => n = Some(num(val)? as usize),
            _ => return Err(format!("unknown header key {key:?}")),
        }
    }
    match (d, codim, n) {
        (Some(d), Some(c), Some(n)) => Ok((d, c, n)),
        _ => Err("header must be \"d=<d> codim=<c> sets=<n>\"".into()),
    }
}

impl fmt::Display for Cover {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "d={} codim={} sets={}",
            self.d,
            self.codim,
            self.sets.len()
        )?;
        for s in &self.sets {
            writeln!(f, "{}", s.render())?;
        }
        Ok(())
    }
}

/// Guaranteed antipodality dimension for `d`-set ridge covers of the
/// `d`-cube.
pub fn k_of_d(d: u32) -> Result<i32> {
    let di = d as i32;
    match d {
        0 => Err(Error::DimensionTooSmall("k(d)", 1, d)),
        1 => Ok(di - 2),
        2..=4 => Ok(di - 3),
        _ => Ok(di - 4),
    }
}

/// The antipodality dimension a `d`-set cover of the given codimension is
/// guaranteed to reach: `k(d)` for ridge covers, `d - 2` for facet covers.
pub fn expected_k(d: u32, codim: u32) -> Option<i32> {
    match codim {
        1 => Some(d as i32 - 2),
        2 => k_of_d(d).ok(),
        _ => None,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub d: u32,
    pub codim: u32,
    pub n_sets: usize,
    pub is_complete: bool,
    pub uncovered: Vec<Face>,
    pub per_set_self_antipodality: Vec<i32>,
    pub max_self_antipodality: i32,
    pub witness: Option<AntipodalWitness>,
    pub expected_k: Option<i32>,
}

impl VerificationReport {
    /// Complete and no set reaches a `forbid_k`-antipodal pair.
    pub fn avoids(&self, forbid_k: i32) -> bool {
        self.is_complete && self.max_self_antipodality < forbid_k
    }
}

pub fn cover_report(cover: &Cover) -> VerificationReport {
    let (is_complete, uncovered) = cover.is_complete();
    let mut per_set = Vec::with_capacity(cover.sets.len());
    let mut witness: Option<AntipodalWitness> = None;
    for (i, s) in cover.sets.iter().enumerate() {
        let (k, pair) = s.self_antipodality();
        per_set.push(k);
        if let Some(pair) = pair {
            if witness.is_none_or(|w| k > w.pair.k) {
                witness = Some(AntipodalWitness { set_index: i, pair });
            }
        }
    }
    let max = per_set.iter().copied().max().unwrap_or(-1);
    VerificationReport {
        d: cover.d,
        codim: cover.codim,
        n_sets: cover.sets.len(),
        is_complete,
        uncovered,
        per_set_self_antipodality: per_set,
        max_self_antipodality: max,
        witness,
        expected_k: expected_k(cover.d, cover.codim),
    }
}

/// Asterisk set of a vertex: every ridge through it.
pub fn asterisk_set(v: &Face) -> Result<CoverSet> {
    if v.is_empty() || v.dim() != 0 {
        return Err(Error::NotAVertex(v.to_string()));
    }
    let d = v.ambient_dim();
    if d < 2 {
        return Err(Error::DimensionTooSmall("asterisk set", 2, d));
    }
    let ridges: Vec<Face> = faces_of_codim(d, 2)?
        .into_iter()
        .filter(|r| r.contains_unchecked(v))
        .collect();
    Ok(CoverSet::from_sorted(d, 2, ridges))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "shape", content = "face")]
pub enum SixRidgeShape {
    FacetBoundary(Face),
    Asterisk(Face),
    Other,
}

/// Classifies six ridges of the 4-cube as the ridges of one facet, an
/// asterisk set, or neither.
pub fn classify_six_ridge_set(set: &CoverSet) -> Result<SixRidgeShape> {
    if set.d != 4 || set.codim != 2 || set.len() != 6 {
        return Err(Error::InvalidCover(format!(
            "expected 6 ridges of the 4-cube, got {} faces of codim {} in d={}",
            set.len(),
            set.codim,
            set.d
        )));
    }
    for facet in faces_of_codim(4, 1)? {
        if set.faces.iter().all(|r| facet.contains_unchecked(r)) {
            // A facet of the 4-cube has exactly six ridges.
            return Ok(SixRidgeShape::FacetBoundary(facet));
        }
    }
    let common = set
        .faces
        .iter()
        .skip(1)
        .fold(set.faces[0], |acc, r| acc.intersect_unchecked(r));
    if !common.is_empty() && common.dim() == 0 {
        return Ok(SixRidgeShape::Asterisk(common));
    }
    Ok(SixRidgeShape::Other)
}
