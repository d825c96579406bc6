//! Coxeter-Conway frieze patterns of positive integers and the bijections
//! quiddity <-> triangulation <-> frieze <-> normalized Farey polygon.
//!
//! Index convention, fixed once for the whole crate: rows of the frieze are
//! 1-based, the bounding entries are c(i, i-2) = 0, c(i, i-1) = 1,
//! c(i, i+n-3) = 1, c(i, i+n-2) = 0, and the diagonal carries the quiddity
//! as c(i, i) = q_{i-1}. Diagonals are n-periodic, c(i+n, j+n) = c(i, j),
//! and each row extends n-antiperiodically.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::farey::{farey_distance, ExtendedRational, FareyPolygon, Triangulation};
use crate::hill::HillEquation;
use crate::tiling::SL2Tiling;

/// A cyclic sequence counting the triangles incident at each vertex of a
/// triangulated polygon. The degenerate order-2 quiddity is (0, 0).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Quiddity {
    entries: Vec<BigInt>,
}

impl Quiddity {
    pub fn new(entries: Vec<BigInt>) -> Result<Self> {
        if !is_quiddity(&entries) {
            return Err(Error::NotAQuiddity(format!(
                "{} is not a quiddity",
                join(&entries)
            )));
        }
        Ok(Quiddity { entries })
    }

    pub fn from_i64s(entries: &[i64]) -> Result<Self> {
        Self::new(entries.iter().map(|&e| BigInt::from(e)).collect())
    }

    /// The order-2 quiddity (0, 0).
    pub fn degenerate() -> Self {
        Quiddity {
            entries: vec![BigInt::zero(), BigInt::zero()],
        }
    }

    pub fn order(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[BigInt] {
        &self.entries
    }

    /// Entry by cyclic index.
    pub fn get(&self, i: i64) -> &BigInt {
        let n = self.entries.len() as i64;
        &self.entries[i.rem_euclid(n) as usize]
    }

    /// Cyclic left rotation by k: (q_k, q_{k+1}, ..., q_{k-1}).
    pub fn rotate_left(&self, k: usize) -> Quiddity {
        let n = self.entries.len();
        let k = k % n;
        let mut entries = Vec::with_capacity(n);
        entries.extend_from_slice(&self.entries[k..]);
        entries.extend_from_slice(&self.entries[..k]);
        // Rotations of a quiddity are quiddities.
        Quiddity { entries }
    }
}

impl fmt::Display for Quiddity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", join(&self.entries))
    }
}

impl fmt::Debug for Quiddity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", join(&self.entries))
    }
}

impl FromStr for Quiddity {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let entries = s
            .split(',')
            .map(|t| {
                BigInt::from_str(t.trim()).map_err(|e| Error::Parse {
                    what: "quiddity",
                    detail: format!("bad entry {t:?}: {e}"),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Quiddity::new(entries)
    }
}

fn join(entries: &[BigInt]) -> String {
    entries
        .iter()
        .map(|e| e.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

/// Tests the quiddity property of an arbitrary integer sequence: for order 2
/// only (0, 0) qualifies; for order >= 3 the monodromy over one period must
/// be minus the identity and the generated frieze must be positive. The two
/// conditions are checked by independent routes (companion-matrix product
/// and explicit row construction).
pub fn is_quiddity(entries: &[BigInt]) -> bool {
    match entries.len() {
        0 | 1 => false,
        2 => entries[0].is_zero() && entries[1].is_zero(),
        _ => {
            let eq = HillEquation::new(entries.to_vec()).expect("length checked");
            eq.monodromy().is_neg_identity() && build_rows(entries).is_ok()
        }
    }
}

/// A positive integer frieze pattern of width n-3, stored as the n
/// fundamental rows of non-boundary entries.
#[derive(Clone, PartialEq, Eq)]
pub struct FriezePattern {
    n: usize,
    /// rows[i-1] holds c(i, i), ..., c(i, i+n-4); empty when n = 3.
    rows: Vec<Vec<BigInt>>,
}

/// Builds the fundamental rows from raw quiddity entries. Rows 1 and 2 come
/// from the three-term recurrence c(i, j+1) = q_j c(i, j) - c(i, j-1); the
/// rest from Coxeter's bilinear identity
/// c(i, j) = c(1, i-2) c(2, j) - c(1, j) c(2, i-2).
fn build_rows(q: &[BigInt]) -> Result<FriezePattern> {
    let n = q.len();
    debug_assert!(n >= 3);
    let one = BigInt::one();

    // Row 1 over j = -1..=n-1, row 2 over j = 0..=n.
    let mut row1 = Vec::with_capacity(n + 1);
    row1.push(BigInt::zero());
    row1.push(one.clone());
    for j in 0..n - 1 {
        let next = &q[j] * &row1[j + 1] - &row1[j];
        row1.push(next);
    }
    if row1[n - 1] != one || !row1[n].is_zero() {
        return Err(Error::NotAQuiddity(
            "first row fails the boundary conditions".into(),
        ));
    }

    let mut row2 = Vec::with_capacity(n + 1);
    row2.push(BigInt::zero());
    row2.push(one.clone());
    for j in 1..n {
        let next = &q[j] * &row2[j] - &row2[j - 1];
        row2.push(next);
    }
    if row2[n - 1] != one || !row2[n].is_zero() {
        return Err(Error::NotAQuiddity(
            "second row fails the boundary conditions".into(),
        ));
    }

    // Antiperiodic row extensions, indexed by the true column j.
    let c1 = |j: usize| -> BigInt {
        // valid for j in -1..=2n-1; only j >= 0 is needed here
        if j < n {
            row1[j + 1].clone()
        } else {
            -row1[j + 1 - n].clone()
        }
    };
    let c2 = |j: usize| -> BigInt {
        if j <= n {
            row2[j].clone()
        } else {
            -row2[j - n].clone()
        }
    };

    let mut rows = Vec::with_capacity(n);
    for i in 1..=n {
        let mut row = Vec::with_capacity(n.saturating_sub(3));
        for j in i..=i + n - 4 {
            let value = if i == 1 {
                c1(j)
            } else if i == 2 {
                c2(j)
            } else {
                c1(i - 2) * c2(j) - c1(j) * c2(i - 2)
            };
            if value < one {
                return Err(Error::NotAQuiddity(format!(
                    "entry c({i}, {j}) = {value} is not positive"
                )));
            }
            row.push(value);
        }
        rows.push(row);
    }
    Ok(FriezePattern { n, rows })
}

impl FriezePattern {
    /// Periodic order n; the width is n - 3.
    pub fn order(&self) -> usize {
        self.n
    }

    pub fn width(&self) -> usize {
        self.n - 3
    }

    /// Entry of the extended bi-infinite pattern at any index pair:
    /// diagonal-periodic across rows, antiperiodic along rows.
    pub fn entry(&self, i: i64, j: i64) -> BigInt {
        let n = self.n as i64;
        let k = (i - 1).div_euclid(n);
        let i0 = i - k * n; // 1..=n
        let j0 = j - k * n;
        let r = j0 - (i0 - 2);
        let flip = r.div_euclid(n).rem_euclid(2) == 1;
        let pos = r.rem_euclid(n);
        let value = if pos == 0 {
            BigInt::zero()
        } else if pos == 1 || pos == n - 1 {
            BigInt::one()
        } else {
            self.rows[(i0 - 1) as usize][(pos - 2) as usize].clone()
        };
        if flip {
            -value
        } else {
            value
        }
    }

    /// Entry restricted to the fundamental triangle 1 <= i <= n,
    /// i-1 <= j <= i+n-3.
    pub fn fundamental_entry(&self, i: i64, j: i64) -> Result<BigInt> {
        let n = self.n as i64;
        if i < 1 || i > n || j < i - 1 || j > i + n - 3 {
            return Err(Error::IndexOutOfDomain { i, j });
        }
        Ok(self.entry(i, j))
    }

    /// Reads the quiddity back off the diagonal: q_{i-1} = c(i, i).
    pub fn quiddity(&self) -> Quiddity {
        let entries = (1..=self.n as i64).map(|i| self.entry(i, i)).collect();
        Quiddity::new(entries).expect("the diagonal of a frieze is its quiddity")
    }

    /// Staircase rendering: row i holds the 1-bounded row
    /// c(i, i-1), ..., c(i, i+n-3), shifted one cell right per row.
    pub fn staircase(&self) -> String {
        let n = self.n as i64;
        let rows: Vec<Vec<BigInt>> = (1..=n)
            .map(|i| (i - 1..=i + n - 3).map(|j| self.entry(i, j)).collect())
            .collect();
        let cell = rows
            .iter()
            .flatten()
            .map(|e| e.to_string().len())
            .max()
            .unwrap_or(1);
        let mut out = String::new();
        for (r, row) in rows.iter().enumerate() {
            let mut line = " ".repeat(r * (cell + 1));
            for (k, e) in row.iter().enumerate() {
                if k > 0 {
                    line.push(' ');
                }
                line.push_str(&format!("{e:>cell$}"));
            }
            out.push_str(line.trim_end());
            out.push('\n');
        }
        out
    }

    /// Parses a staircase rendering back; the text must reproduce one period.
    pub fn parse_staircase(s: &str) -> Result<FriezePattern> {
        let grid: Vec<Vec<&str>> = s
            .lines()
            .filter(|l| !l.trim().is_empty())
            .map(|l| l.split_whitespace().collect())
            .collect();
        let n = grid.len();
        if n < 3 {
            return Err(Error::Parse {
                what: "frieze",
                detail: format!("expected at least 3 rows, got {n}"),
            });
        }
        let mut q = Vec::with_capacity(n);
        for row in &grid {
            if row.len() != n - 1 {
                return Err(Error::Parse {
                    what: "frieze",
                    detail: format!("row has {} entries, expected {}", row.len(), n - 1),
                });
            }
            // q_{i-1} = c(i, i) is the second entry of the bounded row; for
            // width 0 the row is just "1 1" and the quiddity entry is 1.
            let token = if n == 3 { "1" } else { row[1] };
            q.push(BigInt::from_str(token).map_err(|e| Error::Parse {
                what: "frieze",
                detail: format!("bad entry {token:?}: {e}"),
            })?);
        }
        let frieze = build_rows(&q).map_err(|e| Error::Parse {
            what: "frieze",
            detail: format!("rows do not form a frieze: {e}"),
        })?;
        // The remaining entries must agree with the reconstruction.
        for (r, row) in grid.iter().enumerate() {
            let i = (r + 1) as i64;
            for (k, token) in row.iter().enumerate() {
                let expected = frieze.entry(i, i - 1 + k as i64);
                if BigInt::from_str(token) != Ok(expected.clone()) {
                    return Err(Error::Parse {
                        what: "frieze",
                        detail: format!(
                            "entry {token:?} at row {i} column {k} should be {expected}"
                        ),
                    });
                }
            }
        }
        Ok(frieze)
    }
}

impl fmt::Debug for FriezePattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "FriezePattern(order {}, quiddity {:?})",
            self.n,
            self.quiddity()
        )
    }
}

/// The unique positive frieze with the given quiddity on its diagonal.
/// Rejects the degenerate order 2.
pub fn frieze_from_quiddity(q: &Quiddity) -> Result<FriezePattern> {
    if q.order() == 2 {
        return Err(Error::DegenerateOrder { n: 2 });
    }
    build_rows(q.entries())
}

/// Triangles incident at each vertex, taken cyclically.
pub fn quiddity_from_triangulation(t: &Triangulation) -> Quiddity {
    let entries = t.incidence_counts().into_iter().map(BigInt::from).collect();
    Quiddity::new(entries).expect("incidence counts of a triangulation form a quiddity")
}

/// Inverse of `quiddity_from_triangulation` by ear cutting: repeatedly remove
/// the lowest-indexed vertex with exactly one incident triangle, joining its
/// neighbours by a diagonal.
pub fn triangulation_from_quiddity(q: &Quiddity) -> Result<Triangulation> {
    let n = q.order();
    if n == 2 {
        return Err(Error::DegenerateOrder { n: 2 });
    }
    let one = BigInt::one();
    let mut counts = q.entries().to_vec();
    let mut live: Vec<usize> = (0..n).collect();
    let mut diagonals = BTreeSet::new();
    while live.len() > 3 {
        let pos = live
            .iter()
            .position(|&v| counts[v] == one)
            .ok_or_else(|| Error::NotAQuiddity("no ear to cut".into()))?;
        let len = live.len();
        let prev = live[(pos + len - 1) % len];
        let next = live[(pos + 1) % len];
        diagonals.insert((prev.min(next), prev.max(next)));
        counts[prev] -= 1;
        counts[next] -= 1;
        live.remove(pos);
    }
    for &v in &live {
        if counts[v] != one {
            return Err(Error::NotAQuiddity(
                "ear cutting did not terminate on a triangle".into(),
            ));
        }
    }
    Triangulation::new(n, diagonals)
}

/// The normalized Farey polygon whose vertices are the ratios of the first
/// two frieze rows: v_j = c(1, j) / c(2, j), from v_0 = 1/0 to v_{n-1} = 0/1.
pub fn polygon_from_quiddity(q: &Quiddity) -> Result<FareyPolygon> {
    let frieze = frieze_from_quiddity(q)?;
    let vertices = (0..q.order() as i64)
        .map(|j| {
            ExtendedRational::new(frieze.entry(1, j), frieze.entry(2, j))
                .expect("consecutive frieze rows are coprime")
        })
        .collect();
    FareyPolygon::new(vertices)
}

/// Frieze entries as Farey distances: c(i, j) = d(v_{i-2}, v_j) on the
/// polygon of the quiddity, indices cyclic. Must agree with
/// `frieze_from_quiddity` on the whole fundamental triangle.
pub fn frieze_entry_by_distance(q: &Quiddity, i: i64, j: i64) -> Result<BigInt> {
    let n = q.order() as i64;
    if i < 1 || i > n || j < i - 1 || j > i + n - 3 {
        return Err(Error::IndexOutOfDomain { i, j });
    }
    let polygon = polygon_from_quiddity(q)?;
    Ok(farey_distance(polygon.vertex(i - 2), polygon.vertex(j)))
}

/// Extends a frieze to the unique (n,n)-antiperiodic tame SL2-tiling that
/// restricts to it: the fundamental window is read straight off the extended
/// pattern. The window necessarily contains the frieze's zero diagonals, so
/// the result has no positive rectangular domain.
pub fn frieze_to_square_tiling(f: &FriezePattern) -> SL2Tiling {
    let n = f.order();
    let domain = (0..n as i64)
        .map(|i| (0..n as i64).map(|j| f.entry(i, j)).collect())
        .collect();
    SL2Tiling::from_domain(domain).expect("an n x n window is a valid domain")
}
