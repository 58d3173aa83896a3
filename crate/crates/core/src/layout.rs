//! Point sets on three parallel lines: points on the outer lines l1 and l3
//! at integer positions, and blockers on the middle line l2 cutting every
//! l1–l3 pair that is not meant to be an edge.

use std::collections::HashSet;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::Rational;

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Line {
    #[serde(rename = "l1")]
    L1,
    #[serde(rename = "l2")]
    L2,
    #[serde(rename = "l3")]
    L3,
}

impl fmt::Display for Line {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Line::L1 => "l1",
            Line::L2 => "l2",
            Line::L3 => "l3",
        })
    }
}

/// One entry of the JSON sidecar written next to a three-line point set.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PointMeta {
    pub index: usize,
    pub line: Line,
    pub role: String,
    /// Position along the line, 0 at the top (vertical lines) or the left
    /// (horizontal lines).
    pub rank: usize,
}

pub fn metadata_json(meta: &[PointMeta]) -> String {
    serde_json::to_string_pretty(meta).expect("metadata serializes")
}

/// Largest denominator tried for the l2 position.
const MAX_DENOMINATOR: i64 = 1 << 16;

/// Distance between l1 and l3.
pub(crate) const SPAN: i64 = 2;

#[derive(Clone, Debug)]
pub(crate) struct Blocker {
    pub l1: usize,
    pub l3: usize,
    /// Position along l2.
    pub along: Rational,
}

#[derive(Clone, Debug)]
pub(crate) struct Layout {
    /// Offset of l2 from l1, strictly between 0 and `SPAN`.
    pub across: Rational,
    /// Sorted in the direction in which the `l1` positions are listed.
    pub blockers: Vec<Blocker>,
}

/// Chooses the l2 offset `k/q` so that the segments of all l1–l3 pairs meet
/// l2 at pairwise distinct points, then places one blocker per pair for
/// which `joined` is false. Positions along the lines are integers; `l1`
/// and `l3` list them in rank order.
pub(crate) fn place_blockers(l1: &[i64], l3: &[i64], joined: impl Fn(usize, usize) -> bool) -> Result<Layout> {
    let pairs = l1.len() * l3.len();
    let mut seen = HashSet::with_capacity(pairs);
    for q in 1..=MAX_DENOMINATOR {
        'k: for k in 1..SPAN * q {
            if k.gcd(&q) != 1 {
                continue;
            }
            // Along-position of the crossing, scaled by SPAN * q.
            seen.clear();
            for &a in l1 {
                for &b in l3 {
                    let scaled = i128::from(a) * i128::from(SPAN * q) + i128::from(b - a) * i128::from(k);
                    if !seen.insert(scaled) {
                        continue 'k;
                    }
                }
            }
            let denom = BigInt::from(SPAN * q);
            let mut blockers = Vec::new();
            for (i, &a) in l1.iter().enumerate() {
                for (j, &b) in l3.iter().enumerate() {
                    if !joined(i, j) {
                        let scaled = BigInt::from(a) * SPAN * q + BigInt::from(b - a) * k;
                        blockers.push(Blocker {
                            l1: i,
                            l3: j,
                            along: Rational::new(scaled, denom.clone()),
                        });
                    }
                }
            }
            let ascending = l1.len() < 2 || l1[0] < l1[1];
            blockers.sort_by(|x, y| if ascending { x.along.cmp(&y.along) } else { y.along.cmp(&x.along) });
            return Ok(Layout {
                across: Rational::new(k.into(), q.into()),
                blockers,
            });
        }
    }
    Err(Error::GeometryDegeneracy(format!(
        "no l2 position with denominator up to {MAX_DENOMINATOR} separates all {pairs} crossings"
    )))
}
