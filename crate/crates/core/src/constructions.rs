//! Explicit covers that keep antipodality low.
//!
//! - [`sharp_facet_cover`]: `d` sets of two facets each, no antipodal facets.
//! - [`pair_split_ridge_cover`]: every antipodal ridge pair split across two
//!   sets, padded to `d` sets.
//! - [`asterisk_ridge_cover`]: four asterisk sets on block-structured
//!   vertices plus `ceil(d/3)` leftover sets; no set holds antipodal peaks.

use serde::Serialize;

use crate::cover::{asterisk_set, Cover, CoverSet};
use crate::error::{Error, Result};
use crate::face::{faces_of_codim, Face};

fn require(op: &'static str, min: u32, d: u32) -> Result<()> {
    if d < min {
        Err(Error::DimensionTooSmall(op, min, d))
    } else if d > crate::face::MAX_DIM {
        Err(Error::UnsupportedDimension(d))
    } else {
        Ok(())
    }
}

/// `A_i = { x_i = 0, x_{i+1} = 1 }` with indices taken cyclically.
pub fn sharp_facet_cover(d: u32) -> Result<Cover> {
    require("sharp_facet_cover", 2, d)?;
    let sets = (1..=d)
        .map(|i| {
            let next = i % d + 1;
            CoverSet::new(
                d,
                1,
                vec![Face::facet(d, i, false)?, Face::facet(d, next, true)?],
            )
        })
        .collect::<Result<Vec<_>>>()?;
    Cover::new(d, 1, sets)
}

/// Two sets, one ridge of every antipodal pair in each (the canonically
/// smaller one goes first), then `d - 2` empty sets.
pub fn pair_split_ridge_cover(d: u32) -> Result<Cover> {
    require("pair_split_ridge_cover", 2, d)?;
    let mut first = Vec::new();
    let mut second = Vec::new();
    for r in faces_of_codim(d, 2)? {
        let a = r.antipode();
        if r < a {
            first.push(r);
            second.push(a);
        }
    }
    let sets = vec![CoverSet::new(d, 2, first)?, CoverSet::new(d, 2, second)?];
    Ok(Cover::new(d, 2, sets)?.padded_to(d as usize))
}

/// Lengths of the three coordinate blocks, longest first.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct BlockLengths {
    pub alpha: u32,
    pub beta: u32,
    pub gamma: u32,
}

impl BlockLengths {
    pub fn as_array(&self) -> [u32; 3] {
        [self.alpha, self.beta, self.gamma]
    }

    /// 0-based start offset of each block.
    fn starts(&self) -> [u32; 3] {
        [0, self.alpha, self.alpha + self.beta]
    }
}

pub fn block_lengths(d: u32) -> Result<BlockLengths> {
    require("block_lengths", 4, d)?;
    let (lo, hi) = (d / 3, d.div_ceil(3));
    let (alpha, beta, gamma) = match d % 3 {
        0 => (lo, lo, lo),
        1 => (hi, lo, lo),
        _ => (hi, hi, lo),
    };
    Ok(BlockLengths { alpha, beta, gamma })
}

/// `v1 = αβγ`, `v2 = ᾱβ̄γ`, `v3 = αβ̄γ̄`, `v4 = ᾱβγ̄` with every unbarred
/// block all zeros.
pub fn asterisk_vertices(d: u32) -> Result<[Face; 4]> {
    const BARRED: [[bool; 3]; 4] = [
        [false, false, false],
        [true, true, false],
        [false, true, true],
        [true, false, true],
    ];
    let blocks = block_lengths(d)?;
    let lens = blocks.as_array();
    let starts = blocks.starts();
    let mut out = [Face::whole(d)?; 4];
    for (slot, barred) in out.iter_mut().zip(BARRED) {
        let mut bits = 0u32;
        for b in 0..3 {
            if barred[b] {
                for p in starts[b]..starts[b] + lens[b] {
                    // position p+1 lives at bit d-1-p
                    bits |= 1 << (d - 1 - p);
                }
            }
        }
        *slot = Face::vertex(d, bits)?;
    }
    Ok(out)
}

/// Number of ridges lying in two of the four asterisk sets (which is also
/// the number lying in none of them).
pub fn doubly_covered_count(d: u32) -> Result<u64> {
    require("doubly_covered_count", 4, d)?;
    let d = d as u64;
    Ok(if d.is_multiple_of(3) {
        d * (d - 3) / 3
    } else {
        (d - 1) * (d - 2) / 3
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConstructionReport {
    pub cover: Cover,
    pub nonempty_sets: usize,
    /// Ridges found in exactly two asterisk sets.
    pub doubly_covered: u64,
    /// Ridges outside every asterisk set, all placed in leftover sets.
    pub leftover_count: u64,
    /// Whether the construction fits in `d` sets (true iff `d >= 6`).
    pub is_d_set_cover: bool,
}

/// Leftover ridges: both fixed positions inside one block, one fixed at 0
/// and the other at 1. Leftover set `i` (1-based) takes the ridges whose 0
/// sits at block-local position `i`, across all three blocks.
pub fn leftover_sets(d: u32) -> Result<Vec<CoverSet>> {
    let blocks = block_lengths(d)?;
    let lens = blocks.as_array();
    let starts = blocks.starts();
    let n = blocks.alpha as usize;
    let mut sets: Vec<Vec<Face>> = vec![Vec::new(); n];
    for b in 0..3 {
        for zero in 0..lens[b] {
            for one in 0..lens[b] {
                if zero == one {
                    continue;
                }
                let zbit = 1u32 << (d - 1 - (starts[b] + zero));
                let obit = 1u32 << (d - 1 - (starts[b] + one));
                sets[zero as usize].push(Face::from_masks(d, zbit | obit, obit));
            }
        }
    }
    sets.into_iter()
        .map(|faces| CoverSet::new(d, 2, faces))
        .collect()
}

pub fn asterisk_ridge_cover(d: u32) -> Result<ConstructionReport> {
    let vertices = asterisk_vertices(d)?;
    let asterisks = vertices
        .iter()
        .map(asterisk_set)
        .collect::<Result<Vec<_>>>()?;
    let leftovers = leftover_sets(d)?;

    let mut doubly = 0u64;
    for r in faces_of_codim(d, 2)? {
        if asterisks.iter().filter(|s| s.contains(&r)).count() == 2 {
            doubly += 1;
        }
    }
    let leftover_count = leftovers.iter().map(|s| s.len() as u64).sum();

    let mut sets = asterisks;
    sets.extend(leftovers);
    let nonempty = sets.len();
    let cover = Cover::new(d, 2, sets)?.padded_to(d as usize);
    Ok(ConstructionReport {
        nonempty_sets: nonempty,
        doubly_covered: doubly,
        leftover_count,
        is_d_set_cover: cover.sets().len() == d as usize,
        cover,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cover::cover_report;

    fn strs(s: &CoverSet) -> Vec<String> {
        s.faces().iter().map(|f| f.to_string()).collect()
    }

    fn sorted(d: u32, list: &[&str]) -> Vec<String> {
        let mut v: Vec<Face> = list.iter().map(|s| Face::parse(s, d).unwrap()).collect();
        v.sort();
        v.iter().map(|f| f.to_string()).collect()
    }

    #[test]
    fn facet_cover_d3() {
        let c = sharp_facet_cover(3).unwrap();
        let sets: Vec<_> = c.sets().iter().map(strs).collect();
        assert_eq!(sets[0], sorted(3, &["0XX", "X1X"]));
        assert_eq!(sets[1], sorted(3, &["X0X", "XX1"]));
        assert_eq!(sets[2], sorted(3, &["XX0", "1XX"]));
        assert!(sharp_facet_cover(1).is_err());
    }

    #[test]
    fn facet_cover_uses_every_facet_once() {
        for d in 2..=10 {
            let c = sharp_facet_cover(d).unwrap();
            let mut all: Vec<Face> = c.sets().iter().flat_map(|s| s.faces().to_vec()).collect();
            all.sort();
            all.dedup();
            assert_eq!(all.len(), 2 * d as usize);
        }
        let r = cover_report(&sharp_facet_cover(4).unwrap());
        assert!(r.is_complete);
        assert_eq!(r.max_self_antipodality, 2);
    }

    #[test]
    fn pair_split_small() {
        let c = pair_split_ridge_cover(3).unwrap();
        assert_eq!(c.sets().len(), 3);
        assert_eq!(c.sets()[0].len(), 6);
        assert_eq!(c.sets()[1].len(), 6);
        let r = cover_report(&c);
        assert!(r.is_complete);
        assert!(r.per_set_self_antipodality.iter().all(|&k| k < 1));

        let r2 = cover_report(&pair_split_ridge_cover(2).unwrap());
        assert_eq!(r2.per_set_self_antipodality, vec![-1, -1]);
        let r5 = cover_report(&pair_split_ridge_cover(5).unwrap());
        assert!(r5.max_self_antipodality <= 2);
    }

    #[test]
    fn block_table() {
        let b = |d| block_lengths(d).unwrap().as_array();
        assert_eq!(b(8), [3, 3, 2]);
        assert_eq!(b(6), [2, 2, 2]);
        assert_eq!(b(7), [3, 2, 2]);
        assert_eq!(b(4), [2, 1, 1]);
        assert!(block_lengths(3).is_err());
        for d in 4..=30 {
            let [a, be, g] = b(d);
            assert_eq!(a + be + g, d);
            assert!(a >= be && be >= g && a - g <= 1);
        }
    }

    #[test]
    fn vertices_d8_and_d6() {
        let v: Vec<String> = asterisk_vertices(8)
            .unwrap()
            .iter()
            .map(|f| f.to_string())
            .collect();
        assert_eq!(v, ["00000000", "11111100", "00011111", "11100011"]);
        let v6 = asterisk_vertices(6).unwrap();
        assert_eq!(v6[0].to_string(), "000000");
        assert_eq!(v6[1].to_string(), "111100");
    }

    #[test]
    fn vertex_agreements_d8() {
        let v = asterisk_vertices(8).unwrap();
        let agree = |i: usize, j: usize| 8 - (v[i].value_mask() ^ v[j].value_mask()).count_ones();
        // k13 = k24 = |α|, k14 = k23 = |β|, k12 = k34 = |γ|
        assert_eq!((agree(0, 2), agree(1, 3)), (3, 3));
        assert_eq!((agree(0, 3), agree(1, 2)), (3, 3));
        assert_eq!((agree(0, 1), agree(2, 3)), (2, 2));
    }

    #[test]
    fn doubly_covered_formula() {
        assert_eq!(doubly_covered_count(6).unwrap(), 6);
        assert_eq!(doubly_covered_count(8).unwrap(), 14);
        assert_eq!(doubly_covered_count(9).unwrap(), 18);
        assert!(doubly_covered_count(3).is_err());
    }

    #[test]
    fn asterisk_cover_d8_leftovers() {
        let rep = asterisk_ridge_cover(8).unwrap();
        assert_eq!(rep.doubly_covered, 14);
        assert_eq!(rep.leftover_count, 14);
        assert_eq!(rep.nonempty_sets, 7);
        let sets = rep.cover.sets();
        assert_eq!(
            strs(&sets[4]),
            sorted(
                8,
                &["01XXXXXX", "0X1XXXXX", "XXX01XXX", "XXX0X1XX", "XXXXXX01"]
            )
        );
        assert_eq!(
            strs(&sets[5]),
            sorted(
                8,
                &["10XXXXXX", "X01XXXXX", "XXX10XXX", "XXXX01XX", "XXXXXX10"]
            )
        );
        assert_eq!(
            strs(&sets[6]),
            sorted(8, &["1X0XXXXX", "X10XXXXX", "XXX1X0XX", "XXXX10XX"])
        );
        assert!(sets[7].is_empty());
    }

    #[test]
    fn asterisk_cover_d6() {
        let rep = asterisk_ridge_cover(6).unwrap();
        assert_eq!(rep.nonempty_sets, 6);
        assert_eq!(rep.cover.sets().len(), 6);
        assert_eq!(rep.leftover_count, 6);
        assert!(rep.is_d_set_cover);
        let r = cover_report(&rep.cover);
        assert!(r.is_complete);
        assert!(r.max_self_antipodality <= 2);
    }

    #[test]
    fn asterisk_cover_small_d_is_flagged() {
        for d in [4, 5] {
            let rep = asterisk_ridge_cover(d).unwrap();
            assert!(!rep.is_d_set_cover);
            assert_eq!(rep.nonempty_sets, 4 + d.div_ceil(3) as usize);
            assert!(cover_report(&rep.cover).is_complete);
        }
    }
}
