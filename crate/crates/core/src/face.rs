//! Faces of the d-cube in `{0,1,X}` coordinate representation.
//!
//! A non-empty face is stored as two `d`-bit masks: `fixed` marks the
//! coordinate positions that are fixed, and `value` carries the fixed
//! values (always zero outside `fixed`). Coordinate position 1, the leftmost
//! character of the text form, is the most significant of the `d` used bits:
//! position `p` lives at bit `d - p`. With this layout the canonical face
//! order, ascending `(fixed, value)`, is a plain integer comparison.
//!
//! The empty face (dimension -1) is an explicit sentinel. It sorts before
//! every non-empty face of the same cube.

use std::cmp::Ordering;
use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

pub const MAX_DIM: u32 = 32;

/// Text token for the empty face.
pub const EMPTY_TOKEN: &str = "EMPTY";

#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Face {
    d: u8,
    empty: bool,
    fixed: u32,
    value: u32,
}

#[inline]
fn full_mask(d: u32) -> u32 {
    if d == 32 {
        u32::MAX
    } else {
        (1u32 << d) - 1
    }
}

fn check_dim(d: u32) -> Result<()> {
    if d == 0 || d > MAX_DIM {
        Err(Error::UnsupportedDimension(d))
    } else {
        Ok(())
    }
}

/// Spreads the low bits of `bits` over the set bits of `mask`, lowest first.
#[inline]
fn deposit(mut bits: u32, mask: u32) -> u32 {
    let mut out = 0;
    let mut m = mask;
    while m != 0 {
        let low = m & m.wrapping_neg();
        if bits & 1 == 1 {
            out |= low;
        }
        bits >>= 1;
        m &= m - 1;
    }
    out
}

/// Binomial coefficient, exact for the small arguments used here.
pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u64 = 1;
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// Iterates `d`-bit masks with exactly `ones` set bits in ascending order.
fn masks_with_popcount(d: u32, ones: u32) -> impl Iterator<Item = u32> {
    let limit: u64 = 1u64 << d;
    let first: u64 = if ones == 0 { 0 } else { (1u64 << ones) - 1 };
    let mut next = Some(first);
    std::iter::from_fn(move || {
        let cur = next?;
        if cur >= limit {
            return None;
        }
        next = if cur == 0 {
            None
        } else {
            // Gosper's hack
            let c = cur & cur.wrapping_neg();
            let r = cur + c;
            Some((((r ^ cur) >> 2) / c) | r)
        };
        Some(cur as u32)
    })
}

impl Face {
    /// Builds a face from raw masks. `value` bits outside `fixed` are cleared.
    pub fn new(d: u32, fixed: u32, value: u32) -> Result<Self> {
        check_dim(d)?;
        let full = full_mask(d);
        if fixed & !full != 0 {
            return Err(Error::InvalidCover(format!(
                "fixed mask {fixed:#b} has bits beyond d={d}"
            )));
        }
        Ok(Self::from_masks(d, fixed, value & fixed))
    }

    #[inline]
    pub(crate) fn from_masks(d: u32, fixed: u32, value: u32) -> Self {
        Face {
            d: d as u8,
            empty: false,
            fixed,
            value,
        }
    }

    pub fn whole(d: u32) -> Result<Self> {
        check_dim(d)?;
        Ok(Self::from_masks(d, 0, 0))
    }

    pub fn empty(d: u32) -> Result<Self> {
        check_dim(d)?;
        Ok(Face {
            d: d as u8,
            empty: true,
            fixed: 0,
            value: 0,
        })
    }

    /// The facet with 1-based coordinate `position` fixed at `value`.
    pub fn facet(d: u32, position: u32, value: bool) -> Result<Self> {
        check_dim(d)?;
        if position == 0 || position > d {
            return Err(Error::FaceDimensionOutOfRange {
                k: position as i32,
                context: format!("coordinate position in d={d}"),
            });
        }
        let bit = 1u32 << (d - position);
        Ok(Self::from_masks(d, bit, if value { bit } else { 0 }))
    }

    /// The vertex whose coordinates are the low `d` bits of `bits`
    /// (position 1 = most significant).
    pub fn vertex(d: u32, bits: u32) -> Result<Self> {
        check_dim(d)?;
        let full = full_mask(d);
        Ok(Self::from_masks(d, full, bits & full))
    }

    /// Parses the coordinate representation, e.g. `"XX1"`. `X` is
    /// case-insensitive; `"EMPTY"` (or `"∅"`) denotes the empty face.
    pub fn parse(text: &str, d: u32) -> Result<Self> {
        check_dim(d)?;
        let t = text.trim();
        if t.eq_ignore_ascii_case(EMPTY_TOKEN) || t == "∅" {
            return Self::empty(d);
        }
        let len = t.chars().count();
        if len != d as usize {
            return Err(Error::LengthMismatch {
                text: t.to_string(),
                len,
                expected: d,
            });
        }
        let mut fixed = 0u32;
        let mut value = 0u32;
        for (i, ch) in t.chars().enumerate() {
            let bit = 1u32 << (d as usize - 1 - i);
            match ch {
                '0' => fixed |= bit,
                '1' => {
                    fixed |= bit;
                    value |= bit;
                }
                'X' | 'x' => {}
                _ => {
                    return Err(Error::IllegalCharacter {
                        text: t.to_string(),
                        ch,
                    })
                }
            }
        }
        Ok(Self::from_masks(d, fixed, value))
    }

    #[inline]
    pub fn ambient_dim(&self) -> u32 {
        self.d as u32
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.empty
    }

    #[inline]
    pub fn fixed_mask(&self) -> u32 {
        self.fixed
    }

    #[inline]
    pub fn value_mask(&self) -> u32 {
        self.value
    }

    /// Face dimension; -1 for the empty face.
    #[inline]
    pub fn dim(&self) -> i32 {
        if self.empty {
            -1
        } else {
            self.d as i32 - self.fixed.count_ones() as i32
        }
    }

    /// `d - dim`; the empty face has codimension `d + 1`.
    #[inline]
    pub fn codim(&self) -> u32 {
        (self.d as i32 - self.dim()) as u32
    }

    /// Whether 1-based coordinate `position` is fixed.
    pub fn is_fixed_at(&self, position: u32) -> bool {
        !self.empty && position >= 1 && position <= self.ambient_dim() && {
            self.fixed & (1 << (self.ambient_dim() - position)) != 0
        }
    }

    /// Same fixed positions, fixed values complemented. The empty face is
    /// its own antipode.
    #[inline]
    pub fn antipode(&self) -> Face {
        if self.empty {
            return *self;
        }
        Face {
            value: !self.value & self.fixed,
            ..*self
        }
    }

    fn same_cube(&self, other: &Face) -> Result<()> {
        if self.d != other.d {
            Err(Error::DimensionMismatch(
                self.ambient_dim(),
                other.ambient_dim(),
            ))
        } else {
            Ok(())
        }
    }

    pub fn is_antipodal(&self, other: &Face) -> Result<bool> {
        self.same_cube(other)?;
        Ok(other == &self.antipode())
    }

    /// Subface test: `inner ⊆ self`.
    pub fn contains(&self, inner: &Face) -> Result<bool> {
        self.same_cube(inner)?;
        Ok(self.contains_unchecked(inner))
    }

    #[inline]
    pub(crate) fn contains_unchecked(&self, inner: &Face) -> bool {
        if inner.empty {
            return true;
        }
        if self.empty {
            return false;
        }
        self.fixed & !inner.fixed == 0 && (self.value ^ inner.value) & self.fixed == 0
    }

    /// Largest face contained in both; empty on a conflicting fixed value.
    pub fn intersect(&self, other: &Face) -> Result<Face> {
        self.same_cube(other)?;
        Ok(self.intersect_unchecked(other))
    }

    #[inline]
    pub(crate) fn intersect_unchecked(&self, other: &Face) -> Face {
        if self.empty || other.empty || (self.value ^ other.value) & self.fixed & other.fixed != 0 {
            return Face {
                empty: true,
                fixed: 0,
                value: 0,
                ..*self
            };
        }
        Face::from_masks(
            self.ambient_dim(),
            self.fixed | other.fixed,
            self.value | other.value,
        )
    }

    /// Largest `k` such that `self` contains a `k`-face whose antipode lies
    /// in `other`; -1 when only the empty face qualifies.
    ///
    /// A subface `G ⊆ self` with `antipode(G) ⊆ other` must fix every
    /// position fixed in either face, and positions fixed in both must
    /// carry different values. When that holds the unique maximal `G`
    /// varies exactly where both faces vary.
    pub fn antipodality_degree(&self, other: &Face) -> Result<i32> {
        self.same_cube(other)?;
        Ok(self.degree_unchecked(other))
    }

    #[inline]
    pub(crate) fn degree_unchecked(&self, other: &Face) -> i32 {
        if self.empty || other.empty {
            return -1;
        }
        let both = self.fixed & other.fixed;
        if (self.value ^ other.value) & both != both {
            return -1;
        }
        self.d as i32 - (self.fixed | other.fixed).count_ones() as i32
    }

    /// The maximal antipodal subface pair `(G, antipode(G))` with
    /// `G ⊆ self` and `antipode(G) ⊆ other`, if one exists.
    pub fn antipodal_subfaces(&self, other: &Face) -> Result<Option<(Face, Face)>> {
        self.same_cube(other)?;
        Ok(self.antipodal_subfaces_unchecked(other))
    }

    pub(crate) fn antipodal_subfaces_unchecked(&self, other: &Face) -> Option<(Face, Face)> {
        if self.degree_unchecked(other) < 0 {
            return None;
        }
        let fixed = self.fixed | other.fixed;
        let only_other = other.fixed & !self.fixed;
        let value = self.value | (!other.value & only_other);
        let g = Face::from_masks(self.ambient_dim(), fixed, value);
        Some((g, g.antipode()))
    }

    /// A face is spanning when its last coordinate varies, i.e. it meets
    /// both the top and the bottom facet.
    pub fn is_spanning(&self) -> bool {
        !self.empty && self.fixed & 1 == 0
    }

    /// All `k`-dimensional subfaces in canonical order.
    pub fn subfaces(&self, k: i32) -> Result<Vec<Face>> {
        let dim = self.dim();
        if k < -1 || k > dim {
            return Err(Error::FaceDimensionOutOfRange {
                k,
                context: format!("subfaces of {self}"),
            });
        }
        let d = self.ambient_dim();
        if k == -1 {
            return Ok(vec![Face::empty(d)?]);
        }
        let free = full_mask(d) & !self.fixed;
        let extra = (dim - k) as u32;
        let mut out = Vec::with_capacity((binomial(dim as u64, extra as u64) as usize) << extra);
        for pick in masks_with_popcount(dim as u32, extra) {
            let newly = deposit(pick, free);
            for v in 0..(1u32 << extra) {
                out.push(Face::from_masks(
                    d,
                    self.fixed | newly,
                    self.value | deposit(v, newly),
                ));
            }
        }
        out.sort_unstable();
        Ok(out)
    }

    /// Vertices of this face in canonical order.
    pub fn vertices(&self) -> Vec<Face> {
        if self.empty {
            return Vec::new();
        }
        self.subfaces(0).unwrap_or_default()
    }

    fn order_key(&self) -> (u8, bool, u32, u32) {
        (self.d, !self.empty, self.fixed, self.value)
    }
}

impl Ord for Face {
    fn cmp(&self, other: &Self) -> Ordering {
        self.order_key().cmp(&other.order_key())
    }
}

impl PartialOrd for Face {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Face {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.empty {
            return f.write_str(EMPTY_TOKEN);
        }
        let d = self.ambient_dim();
        let mut s = String::with_capacity(d as usize);
        for p in 1..=d {
            let bit = 1u32 << (d - p);
            s.push(if self.fixed & bit == 0 {
                'X'
            } else if self.value & bit == 0 {
                '0'
            } else {
                '1'
            });
        }
        f.write_str(&s)
    }
}

impl fmt::Debug for Face {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Face({self})")
    }
}

impl Serialize for Face {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// A pair of faces together with their antipodality degree.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct FacePair {
    pub first: Face,
    pub second: Face,
    pub degree: i32,
}

impl FacePair {
    pub fn new(first: Face, second: Face) -> Result<Self> {
        let degree = first.antipodality_degree(&second)?;
        Ok(FacePair {
            first,
            second,
            degree,
        })
    }
}

pub fn parse_face(text: &str, d: u32) -> Result<Face> {
    Face::parse(text, d)
}

pub fn format_face(face: &Face) -> String {
    face.to_string()
}

/// Number of `k`-faces of the `d`-cube: `2^(d-k) * C(d, k)`.
pub fn count_faces(d: u32, k: i32) -> Result<u64> {
    check_dim(d)?;
    if k < 0 || k > d as i32 {
        return Err(Error::FaceDimensionOutOfRange {
            k,
            context: format!("count_faces with d={d}"),
        });
    }
    let codim = d - k as u32;
    Ok((1u64 << codim) * binomial(d as u64, k as u64))
}

/// All `k`-faces of the `d`-cube in canonical order. `k = -1` yields the
/// empty face alone.
pub fn enumerate_faces(d: u32, k: i32) -> Result<Vec<Face>> {
    check_dim(d)?;
    if k < -1 || k > d as i32 {
        return Err(Error::FaceDimensionOutOfRange {
            k,
            context: format!("enumerate_faces with d={d}"),
        });
    }
    if k == -1 {
        return Ok(vec![Face::empty(d)?]);
    }
    let codim = d - k as u32;
    let mut out = Vec::with_capacity(count_faces(d, k)? as usize);
    for fixed in masks_with_popcount(d, codim) {
        for v in 0..(1u64 << codim) {
            out.push(Face::from_masks(d, fixed, deposit(v as u32, fixed)));
        }
    }
    Ok(out)
}

/// Faces of codimension `codim` (facets for 1, ridges for 2, ...).
pub fn faces_of_codim(d: u32, codim: u32) -> Result<Vec<Face>> {
    enumerate_faces(d, d as i32 - codim as i32)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(s: &str) -> Face {
        Face::parse(s, s.len() as u32).unwrap()
    }

    #[test]
    fn parse_reads_positions_left_to_right() {
        let face = f("XX1");
        assert_eq!(face.dim(), 2);
        assert!(face.is_fixed_at(3));
        assert!(!face.is_fixed_at(1));
        assert_eq!(face.fixed_mask(), 0b001);
        assert_eq!(face.value_mask(), 0b001);

        assert_eq!(f("XXX").dim(), 3);
        let g = f("X00X");
        assert!(g.is_fixed_at(2) && g.is_fixed_at(3));
        assert_eq!(g.value_mask(), 0);
        assert_eq!(g.dim(), 2);
        assert_eq!(Face::parse("xx1", 3).unwrap(), face);
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(
            Face::parse("XX", 3),
            Err(Error::LengthMismatch { .. })
        ));
        assert!(matches!(
            Face::parse("X2X", 3),
            Err(Error::IllegalCharacter { ch: '2', .. })
        ));
        assert!(Face::parse("X", 0).is_err());
        assert!(Face::parse("X", 33).is_err());
    }

    #[test]
    fn format_round_trips() {
        assert_eq!(Face::new(3, 0b001, 0b001).unwrap().to_string(), "XX1");
        assert_eq!(Face::whole(4).unwrap().to_string(), "XXXX");
        let e = Face::empty(4).unwrap();
        assert_eq!(e.to_string(), "EMPTY");
        assert_eq!(Face::parse("EMPTY", 4).unwrap(), e);
        assert_eq!(Face::parse("∅", 4).unwrap(), e);
        assert_eq!(e.dim(), -1);
    }

    #[test]
    fn antipode_examples() {
        assert_eq!(f("XXX00").antipode(), f("XXX11"));
        assert_eq!(f("XXXX").antipode(), f("XXXX"));
        assert_eq!(f("0010").antipode(), f("1101"));
        let e = Face::empty(3).unwrap();
        assert_eq!(e.antipode(), e);
    }

    #[test]
    fn antipodal_examples() {
        assert!(f("XXX00").is_antipodal(&f("XXX11")).unwrap());
        assert!(!f("XXX00").is_antipodal(&f("XXX01")).unwrap());
        let e = Face::empty(5).unwrap();
        assert!(e.is_antipodal(&e).unwrap());
        assert!(matches!(
            f("XX0").is_antipodal(&f("XX00")),
            Err(Error::DimensionMismatch(3, 4))
        ));
    }

    #[test]
    fn contains_examples() {
        assert!(f("XX1").contains(&f("001")).unwrap());
        assert!(!f("XX1").contains(&f("000")).unwrap());
        assert!(f("X0X").contains(&f("X0X")).unwrap());
        assert!(f("X0X").contains(&Face::empty(3).unwrap()).unwrap());
        assert!(!Face::empty(3).unwrap().contains(&f("000")).unwrap());
    }

    #[test]
    fn intersect_examples() {
        let meet = f("0XXX").intersect(&f("XXX1")).unwrap();
        assert_eq!(meet, f("0XX1"));
        assert_eq!(meet.dim(), 2);
        assert!(f("XXX0").intersect(&f("XXX1")).unwrap().is_empty());
        let ridges = f("XXX00").intersect(&f("XX0X0")).unwrap();
        assert_eq!(ridges, f("XX000"));
        assert_eq!(ridges.dim(), 2);
    }

    #[test]
    fn degree_examples() {
        assert_eq!(f("XXX10").antipodality_degree(&f("XX0X1")).unwrap(), 2);
        let (g, h) = f("XXX10").antipodal_subfaces(&f("XX0X1")).unwrap().unwrap();
        assert_eq!((g, h), (f("XX110"), f("XX001")));
        assert_eq!(f("XXX10").antipodality_degree(&f("XX1X0")).unwrap(), -1);
        assert_eq!(f("XXX10").antipodality_degree(&f("X11XX")).unwrap(), 1);
        let r = f("X01X0");
        assert_eq!(r.antipodality_degree(&r.antipode()).unwrap(), r.dim());
        assert_eq!(r.antipodality_degree(&r).unwrap(), -1);
        let e = Face::empty(5).unwrap();
        assert_eq!(e.antipodality_degree(&r).unwrap(), -1);
    }

    #[test]
    fn enumerate_examples() {
        assert_eq!(enumerate_faces(3, 1).unwrap().len(), 12);
        assert_eq!(enumerate_faces(4, 2).unwrap().len(), 24);
        assert_eq!(
            enumerate_faces(5, 5).unwrap(),
            vec![Face::whole(5).unwrap()]
        );
        assert_eq!(
            enumerate_faces(3, -1).unwrap(),
            vec![Face::empty(3).unwrap()]
        );
        assert!(enumerate_faces(3, 4).is_err());
        assert!(enumerate_faces(3, -2).is_err());
    }

    #[test]
    fn enumeration_is_canonically_sorted() {
        for d in 1..=6 {
            for k in 0..=d as i32 {
                let faces = enumerate_faces(d, k).unwrap();
                assert!(faces.windows(2).all(|w| w[0] < w[1]), "d={d} k={k}");
                assert!(faces.iter().all(|x| x.dim() == k));
            }
        }
    }

    #[test]
    fn subface_examples() {
        let verts: Vec<String> = f("XX1")
            .subfaces(0)
            .unwrap()
            .iter()
            .map(|v| v.to_string())
            .collect();
        let mut expected = vec!["001", "101", "011", "111"];
        expected.sort();
        let mut got = verts.clone();
        got.sort();
        assert_eq!(got, expected);

        let r = f("X0X1");
        assert_eq!(r.subfaces(r.dim()).unwrap(), vec![r]);
        let ridges = f("XXX1").subfaces(2).unwrap();
        assert_eq!(ridges.len(), 6);
        assert_eq!(ridges.len() as u64, 2 * binomial(3, 2));
        assert!(f("XX1").subfaces(3).is_err());
        assert_eq!(
            f("XX1").subfaces(-1).unwrap(),
            vec![Face::empty(3).unwrap()]
        );
    }

    #[test]
    fn count_examples() {
        for d in 2..=10 {
            assert_eq!(
                count_faces(d, d as i32 - 2).unwrap(),
                2 * d as u64 * (d as u64 - 1)
            );
        }
        assert_eq!(count_faces(4, 1).unwrap(), 32);
        assert_eq!(count_faces(3, 0).unwrap(), 8);
        assert!(count_faces(3, -1).is_err());
        assert!(count_faces(3, 4).is_err());
    }

    #[test]
    fn spanning_examples() {
        assert!(f("X00X").is_spanning());
        assert!(!f("XXX0").is_spanning());
        assert!(f("10XX").is_spanning());
    }

    #[test]
    fn ordering_matches_masks() {
        let a = f("0X1");
        let b = f("01X");
        // fixed masks 101 < 110
        assert!(a < b);
        assert!(Face::empty(3).unwrap() < f("XXX"));
    }

    #[test]
    fn works_at_max_dimension() {
        let whole = Face::whole(32).unwrap();
        assert_eq!(whole.dim(), 32);
        let v = Face::vertex(32, 0xdead_beef).unwrap();
        assert_eq!(v.antipode().value_mask(), !0xdead_beefu32);
        assert_eq!(v.antipodality_degree(&v.antipode()).unwrap(), 0);
        assert_eq!(count_faces(32, 30).unwrap(), 2 * 32 * 31);
    }
}
