//! Brute-force reference implementations.
//!
//! Everything here works from the definitions by enumeration: subfaces are
//! listed explicitly and tested with `contains`. None of it shares code with
//! the closed-form degree or the bitset search, so agreement between the two
//! is meaningful. Only suitable for small cubes.

use itertools::Itertools;
use rand::Rng;

use crate::cover::CoverSet;
use crate::face::{faces_of_codim, Face};

/// `max { dim G : G ⊆ a, antipode(G) ⊆ b }`, -1 when only the empty face
/// qualifies.
pub fn degree_by_enumeration(a: &Face, b: &Face) -> i32 {
    if a.is_empty() || b.is_empty() {
        return -1;
    }
    for k in (0..=a.dim()).rev() {
        let hit = a
            .subfaces(k)
            .expect("k within 0..=dim")
            .iter()
            .any(|g| b.contains(&g.antipode()).expect("same cube"));
        if hit {
            return k;
        }
    }
    -1
}

/// Self-antipodality of a set of faces by enumerating every subface of every
/// member.
pub fn self_antipodality_by_enumeration(faces: &[Face]) -> i32 {
    let mut best = -1;
    for a in faces {
        for b in faces {
            best = best.max(degree_by_enumeration(a, b));
        }
    }
    best
}

/// A uniformly random face: each coordinate is `X`, `0` or `1` with equal
/// probability.
pub fn random_face<R: Rng>(rng: &mut R, d: u32) -> Face {
    let mut fixed = 0u32;
    let mut value = 0u32;
    for bit in 0..d {
        match rng.gen_range(0..3) {
            0 => {}
            1 => fixed |= 1 << bit,
            _ => {
                fixed |= 1 << bit;
                value |= 1 << bit;
            }
        }
    }
    Face::new(d, fixed, value).expect("valid dimension")
}

/// Whether some assignment of every codim-`codim` face to one of `n_sets`
/// sets keeps each set free of antipodal `forbid_k`-pairs. Enumerates all
/// `n_sets^faces` assignments; `None` when that exceeds `limit`.
pub fn naive_cover_exists(
    d: u32,
    n_sets: u32,
    codim: u32,
    forbid_k: i32,
    limit: u64,
) -> Option<bool> {
    let faces = faces_of_codim(d, codim).ok()?;
    let f = faces.len();
    let total = (n_sets as u64).checked_pow(f as u32)?;
    if total > limit {
        return None;
    }
    let bad: Vec<Vec<bool>> = faces
        .iter()
        .map(|a| {
            faces
                .iter()
                .map(|b| degree_by_enumeration(a, b) >= forbid_k)
                .collect()
        })
        .collect();
    let n = n_sets as u64;
    let mut assign = vec![0usize; f];
    for code in 0..total {
        let mut c = code;
        for slot in assign.iter_mut() {
            *slot = (c % n) as usize;
            c /= n;
        }
        let ok = (0..f).all(|i| (i..f).all(|j| assign[i] != assign[j] || !bad[i][j]));
        if ok {
            return Some(true);
        }
    }
    Some(false)
}

/// All `size`-subsets of codim-`codim` faces with self-antipodality below
/// `forbid_k`, found by scanning every combination. Returns the sets and
/// the number of candidates scanned.
pub fn free_sets_by_full_scan(
    d: u32,
    codim: u32,
    forbid_k: i32,
    size: usize,
) -> (Vec<CoverSet>, u64) {
    let faces = faces_of_codim(d, codim).expect("valid dimension");
    let bad: Vec<Vec<bool>> = faces
        .iter()
        .map(|a| {
            faces
                .iter()
                .map(|b| degree_by_enumeration(a, b) >= forbid_k)
                .collect()
        })
        .collect();
    let mut scanned = 0;
    let mut out = Vec::new();
    for combo in (0..faces.len()).combinations(size) {
        scanned += 1;
        let clean = combo.iter().all(|&i| !bad[i][i])
            && combo.iter().tuple_combinations().all(|(&i, &j)| !bad[i][j]);
        if clean {
            let members = combo.iter().map(|&i| faces[i]).collect();
            out.push(CoverSet::new(d, codim, members).expect("distinct faces"));
        }
    }
    (out, scanned)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(s: &str) -> Face {
        Face::parse(s, s.len() as u32).unwrap()
    }

    #[test]
    fn oracle_examples() {
        assert_eq!(degree_by_enumeration(&f("XXX10"), &f("XX0X1")), 2);
        assert_eq!(degree_by_enumeration(&f("XXX10"), &f("XX1X0")), -1);
        assert_eq!(degree_by_enumeration(&f("XXX10"), &f("X11XX")), 1);
        assert_eq!(degree_by_enumeration(&f("XXXX"), &f("XXXX")), 4);
    }

    #[test]
    fn oracle_asterisk_value() {
        let v = f("1011");
        let ast = crate::cover::asterisk_set(&v).unwrap();
        assert_eq!(self_antipodality_by_enumeration(ast.faces()), 0);
    }

    #[test]
    fn naive_respects_limit() {
        assert_eq!(naive_cover_exists(4, 4, 2, 1, 1000), None);
        assert_eq!(naive_cover_exists(2, 2, 2, 0, 1000), Some(true));
        assert_eq!(naive_cover_exists(2, 1, 2, 0, 1000), Some(false));
    }
}
