//! Exhaustive desk-scale generation: triangulations of the labeled n-gon,
//! quiddities and their cyclic classes, the semigroup of totally positive
//! unimodular matrices, and streams of valid triples. Bounds are hard
//! preconditions so that exhaustiveness claims stay honest.

use std::collections::BTreeMap;
use std::collections::BTreeSet;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::farey::{Mat2, Triangulation};
use crate::frieze::{quiddity_from_triangulation, Quiddity};
use crate::tiling::{check_triple, Triple};

const MAX_POLYGON_ORDER: usize = 12;
const MAX_S_BOUND: u64 = 500;
const MAX_TRIPLE_ORDER: usize = 8;
const MAX_TRIPLE_ENTRY: u64 = 200;

/// All triangulations of the labeled convex n-gon, 3 <= n <= 12, enumerated
/// by choosing the apex of the triangle over the chord (lo, hi) and recursing
/// on the two sub-polygons. Duplicate-free; the count is Catalan(n-2).
pub fn enumerate_triangulations(n: usize) -> Result<Vec<Triangulation>> {
    if !(3..=MAX_POLYGON_ORDER).contains(&n) {
        return Err(Error::BoundExceeded {
            what: "polygon order (3..=12)",
            max: MAX_POLYGON_ORDER as u64,
            got: n as u64,
        });
    }
    Ok(divisions(0, n - 1)
        .into_iter()
        .map(|diagonals| {
            Triangulation::new(n, diagonals).expect("recursion yields valid triangulations")
        })
        .collect())
}

fn divisions(lo: usize, hi: usize) -> Vec<BTreeSet<(usize, usize)>> {
    if hi - lo < 2 {
        return vec![BTreeSet::new()];
    }
    let mut out = Vec::new();
    for apex in lo + 1..hi {
        for left in divisions(lo, apex) {
            for right in divisions(apex, hi) {
                let mut set = left.clone();
                set.extend(right.iter().copied());
                if apex - lo >= 2 {
                    set.insert((lo, apex));
                }
                if hi - apex >= 2 {
                    set.insert((apex, hi));
                }
                out.push(set);
            }
        }
    }
    out
}

/// The quiddities of all labeled triangulations, in enumeration order.
/// The map triangulation -> quiddity is a bijection at every order.
pub fn enumerate_quiddities(n: usize) -> Result<Vec<Quiddity>> {
    Ok(enumerate_triangulations(n)?
        .iter()
        .map(quiddity_from_triangulation)
        .collect())
}

/// Lexicographically minimal cyclic rotation; reflections are not quotiented.
pub fn canonical_rotation(q: &Quiddity) -> Quiddity {
    (0..q.order())
        .map(|k| q.rotate_left(k))
        .min_by(|a, b| a.entries().cmp(b.entries()))
        .expect("quiddities are nonempty")
}

/// One cyclic class of quiddities.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct QuiddityClass {
    pub representative: Quiddity,
    pub orbit: usize,
}

/// Cyclic classes at order n, each with its orbit size, sorted by
/// representative. Orbit sizes sum to Catalan(n-2).
pub fn quiddity_classes(n: usize) -> Result<Vec<QuiddityClass>> {
    let mut classes: BTreeMap<Vec<BigInt>, usize> = BTreeMap::new();
    for q in enumerate_quiddities(n)? {
        let rep = canonical_rotation(&q);
        *classes.entry(rep.entries().to_vec()).or_insert(0) += 1;
    }
    Ok(classes
        .into_iter()
        .map(|(entries, orbit)| QuiddityClass {
            representative: Quiddity::new(entries).expect("class representatives are quiddities"),
            orbit,
        })
        .collect())
}

/// All members of the positivity semigroup with d <= bound (d is the largest
/// entry of a member), ordered by (d, c, b, a).
pub fn enumerate_s_matrices(bound: u64) -> Result<Vec<Mat2>> {
    if bound > MAX_S_BOUND {
        return Err(Error::BoundExceeded {
            what: "semigroup entry",
            max: MAX_S_BOUND,
            got: bound,
        });
    }
    let mut out = Vec::new();
    for d in 1..=bound {
        for c in 1..d {
            for b in 1..d {
                let bc1 = b * c + 1;
                if bc1 % d == 0 {
                    let a = bc1 / d;
                    if a >= 1 && a < b && a < c {
                        out.push(Mat2::from_i64(a as i64, b as i64, c as i64, d as i64));
                    }
                }
            }
        }
    }
    Ok(out)
}

/// All unimodular matrices with entries in 1..=bound, ordered by (a, b, c, d).
pub fn enumerate_unimodular(bound: u64) -> Vec<Mat2> {
    let mut out = Vec::new();
    for a in 1..=bound {
        for b in 1..=bound {
            for c in 1..=bound {
                let bc1 = b * c + 1;
                if bc1 % a == 0 {
                    let d = bc1 / a;
                    if d <= bound {
                        out.push(Mat2::from_i64(a as i64, b as i64, c as i64, d as i64));
                    }
                }
            }
        }
    }
    out
}

/// Deterministic stream of every valid triple with quiddity orders (n, m) and
/// matrix entries <= entry_bound. Orders run over quiddities in enumeration
/// order (the single degenerate quiddity at order 2) and matrices in
/// (a, b, c, d) order.
pub fn enumerate_triples(n: usize, m: usize, entry_bound: u64) -> Result<TripleStream> {
    for order in [n, m] {
        if !(2..=MAX_TRIPLE_ORDER).contains(&order) {
            return Err(Error::BoundExceeded {
                what: "triple order (2..=8)",
                max: MAX_TRIPLE_ORDER as u64,
                got: order as u64,
            });
        }
    }
    if entry_bound == 0 || entry_bound > MAX_TRIPLE_ENTRY {
        return Err(Error::BoundExceeded {
            what: "triple entry",
            max: MAX_TRIPLE_ENTRY,
            got: entry_bound,
        });
    }
    let order_quiddities = |order: usize| -> Result<Vec<Quiddity>> {
        if order == 2 {
            Ok(vec![Quiddity::degenerate()])
        } else {
            enumerate_quiddities(order)
        }
    };
    Ok(TripleStream {
        qs: order_quiddities(n)?,
        qps: order_quiddities(m)?,
        mats: enumerate_unimodular(entry_bound),
        qi: 0,
        qpi: 0,
        mi: 0,
    })
}

pub struct TripleStream {
    qs: Vec<Quiddity>,
    qps: Vec<Quiddity>,
    mats: Vec<Mat2>,
    qi: usize,
    qpi: usize,
    mi: usize,
}

impl Iterator for TripleStream {
    type Item = Triple;

    fn next(&mut self) -> Option<Triple> {
        while self.qi < self.qs.len() {
            let q = &self.qs[self.qi];
            let qp = &self.qps[self.qpi];
            while self.mi < self.mats.len() {
                let mat = &self.mats[self.mi];
                self.mi += 1;
                let diag = check_triple(q.entries(), qp.entries(), mat);
                if diag.is_valid() {
                    return Some(
                        Triple::new(q.clone(), qp.clone(), mat.clone())
                            .expect("stream candidates are checked"),
                    );
                }
            }
            self.mi = 0;
            self.qpi += 1;
            if self.qpi == self.qps.len() {
                self.qpi = 0;
                self.qi += 1;
            }
        }
        None
    }
}
