//! Arrows between frozen vertices that close the extreme faces of each strip.
//!
//! A strip is the region between two adjacent strings. Its rungs are the
//! arrows joining the two strings. Below the lowest rung and above the highest
//! one the boundary runs along the strings to the frozen end vertices; if that
//! boundary is a directed path, a single arrow between the two end vertices
//! closes it into an oriented cycle.

use serde::Serialize;

use crate::cartan_graph::{CartanMatrix, Label};
use crate::coxeter_words::{Index, ShuffledWord, SuccessorMap};

use super::direct::edge_rule;
use super::quiver::Quiver;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum RegionKind {
    Bottom,
    Top,
    /// A strip with no rungs at all.
    Whole,
}

/// A strip region whose boundary is not a directed path, so no closing arrow
/// is forced.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Ambiguity {
    pub strings: (Label, Label),
    pub region: RegionKind,
    pub boundary: Vec<Index>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Completion {
    pub quiver: Quiver,
    pub added: Vec<(Index, Index)>,
    pub ambiguities: Vec<Ambiguity>,
}

/// +1 if `seq[0] -> ... -> seq[last]`, -1 if the reverse, 0 otherwise.
fn path_direction(q: &Quiver, seq: &[Index]) -> i32 {
    if seq.windows(2).all(|p| q.has_arrow(p[0], p[1])) {
        1
    } else if seq.windows(2).all(|p| q.has_arrow(p[1], p[0])) {
        -1
    } else {
        0
    }
}

pub fn add_frozen_completion_arrows(
    q: &Quiver,
    w: &ShuffledWord,
    s: &SuccessorMap,
    c: &CartanMatrix,
) -> Completion {
    let mut out = q.clone();
    let mut added = Vec::new();
    let mut ambiguities = Vec::new();
    let strings = w.strings();
    let bottoms: Vec<Index> = strings.values().map(|st| st[0]).collect();
    let tops: Vec<Index> = strings.values().map(|st| *st.last().unwrap()).collect();

    let mut add = |out: &mut Quiver, x: Index, y: Index| {
        if !out.has_arrow(x, y) {
            out.add_arrow(x, y);
            added.push((x, y));
        }
    };

    // Frozen pairs follow the ordinary edge rules, except that two bottom
    // vertices, or two top vertices of strings with more than one vertex,
    // are never joined.
    let idx = w.indices();
    for (i, &k) in idx.iter().enumerate() {
        for &l in &idx[i + 1..] {
            if s.is_exchangeable(k) || s.is_exchangeable(l) {
                continue;
            }
            let both_bottom = bottoms.contains(&k) && bottoms.contains(&l);
            let both_top = tops.contains(&k)
                && tops.contains(&l)
                && !bottoms.contains(&k)
                && !bottoms.contains(&l);
            if both_bottom || both_top {
                continue;
            }
            if let Some((x, y)) = edge_rule(w, s, c, k, l) {
                add(&mut out, x, y);
            }
        }
    }

    for (&a, sa) in &strings {
        for (&b, sb) in strings.range(a + 1..) {
            if c.get(a, b) >= 0 || (sa.len() == 1 && sb.len() == 1) {
                continue;
            }
            let pos_a = |x: Index| sa.iter().position(|&y| y == x);
            let pos_b = |x: Index| sb.iter().position(|&y| y == x);
            let mut rungs: Vec<(usize, usize)> = Vec::new();
            for (x, y, _) in out.arrows() {
                if let (Some(i), Some(j)) = (pos_a(x), pos_b(y)) {
                    rungs.push((i, j));
                } else if let (Some(i), Some(j)) = (pos_a(y), pos_b(x)) {
                    rungs.push((i, j));
                }
            }
            rungs.sort_unstable();
            rungs.dedup();

            if rungs.is_empty() {
                if sa.len() > 1 && sb.len() > 1 {
                    let (da, db) = (path_direction(&out, sa), path_direction(&out, sb));
                    if da != 0 && da == -db {
                        let (ta, tb, ba, bb) =
                            (*sa.last().unwrap(), *sb.last().unwrap(), sa[0], sb[0]);
                        if da == 1 {
                            add(&mut out, ta, tb);
                            add(&mut out, bb, ba);
                        } else {
                            add(&mut out, tb, ta);
                            add(&mut out, ba, bb);
                        }
                    } else {
                        let mut boundary = sa.clone();
                        boundary.extend(sb.iter().rev());
                        ambiguities.push(Ambiguity {
                            strings: (a, b),
                            region: RegionKind::Whole,
                            boundary,
                        });
                    }
                    continue;
                }
                let (chain, single) = if sb.len() == 1 {
                    (sa, sb[0])
                } else {
                    (sb, sa[0])
                };
                match path_direction(&out, chain) {
                    1 => {
                        add(&mut out, *chain.last().unwrap(), single);
                        add(&mut out, single, chain[0]);
                    }
                    -1 => {
                        add(&mut out, chain[0], single);
                        add(&mut out, single, *chain.last().unwrap());
                    }
                    _ => {
                        let mut boundary = chain.clone();
                        boundary.push(single);
                        ambiguities.push(Ambiguity {
                            strings: (a, b),
                            region: RegionKind::Whole,
                            boundary,
                        });
                    }
                }
                continue;
            }

            for region in [RegionKind::Bottom, RegionKind::Top] {
                let (chain_a, chain_b): (Vec<Index>, Vec<Index>) = match region {
                    RegionKind::Bottom => {
                        let (i, j) = rungs[0];
                        (sa[..=i].to_vec(), sb[..=j].to_vec())
                    }
                    _ => {
                        let (i, j) = *rungs.last().unwrap();
                        (
                            sa[i..].iter().rev().copied().collect(),
                            sb[j..].iter().rev().copied().collect(),
                        )
                    }
                };
                if chain_a.len() == 1 && chain_b.len() == 1 {
                    continue;
                }
                // a0 .. x, y .. b0
                let (a0, b0) = (chain_a[0], chain_b[0]);
                let mut boundary = chain_a.clone();
                boundary.extend(chain_b.iter().rev());
                match path_direction(&out, &boundary) {
                    1 => add(&mut out, b0, a0),
                    -1 => add(&mut out, a0, b0),
                    _ => ambiguities.push(Ambiguity {
                        strings: (a, b),
                        region,
                        boundary,
                    }),
                }
            }
        }
    }
    Completion {
        quiver: out,
        added,
        ambiguities,
    }
}
