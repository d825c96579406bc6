//! The Farey graph on Q ∪ {∞}: exact rational vertices, the distance
//! d(a/b, c/d) = |ad - bc|, Farey series, polygons and their canonical
//! triangulations, and the SL2(Z) action used for renormalization.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::frieze::Quiddity;

/// An irreducible fraction p/q with q >= 0, where 1/0 stands for ∞.
///
/// Values are kept canonical at all times: gcd(|p|, q) = 1, (p, q) != (0, 0),
/// and q = 0 forces p = 1.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ExtendedRational {
    num: BigInt,
    den: BigInt,
}

impl ExtendedRational {
    /// Strict constructor: rejects anything that is not already canonical.
    pub fn new(num: BigInt, den: BigInt) -> Result<Self> {
        if den.is_negative() {
            return Err(Error::NonCanonicalFraction(format!("{num}/{den}")));
        }
        if den.is_zero() {
            if num != BigInt::one() {
                return Err(Error::NonCanonicalFraction(format!("{num}/{den}")));
            }
            return Ok(Self::infinity());
        }
        if num.gcd(&den) != BigInt::one() {
            return Err(Error::NonCanonicalFraction(format!("{num}/{den}")));
        }
        Ok(ExtendedRational { num, den })
    }

    /// Canonicalizes homogeneous coordinates: fixes the sign of the
    /// denominator, reduces by the gcd, and maps (x, 0) to 1/0.
    pub fn from_homogeneous(num: BigInt, den: BigInt) -> Result<Self> {
        if num.is_zero() && den.is_zero() {
            return Err(Error::NonCanonicalFraction("0/0".into()));
        }
        if den.is_zero() {
            return Ok(Self::infinity());
        }
        let g = num.gcd(&den);
        let (mut num, mut den) = (num / &g, den / g);
        if den.is_negative() {
            num = -num;
            den = -den;
        }
        Ok(ExtendedRational { num, den })
    }

    pub fn from_i64(num: i64, den: i64) -> Result<Self> {
        Self::new(BigInt::from(num), BigInt::from(den))
    }

    pub fn infinity() -> Self {
        ExtendedRational {
            num: BigInt::one(),
            den: BigInt::zero(),
        }
    }

    pub fn zero() -> Self {
        ExtendedRational {
            num: BigInt::zero(),
            den: BigInt::one(),
        }
    }

    pub fn is_infinity(&self) -> bool {
        self.den.is_zero()
    }

    pub fn num(&self) -> &BigInt {
        &self.num
    }

    pub fn den(&self) -> &BigInt {
        &self.den
    }
}

impl Ord for ExtendedRational {
    fn cmp(&self, other: &Self) -> Ordering {
        // ∞ is strictly greater than every finite rational.
        match (self.is_infinity(), other.is_infinity()) {
            (true, true) => Ordering::Equal,
            (true, false) => Ordering::Greater,
            (false, true) => Ordering::Less,
            (false, false) => (&self.num * &other.den).cmp(&(&other.num * &self.den)),
        }
    }
}

impl PartialOrd for ExtendedRational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for ExtendedRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

impl fmt::Debug for ExtendedRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for ExtendedRational {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (p, q) = s.split_once('/').ok_or_else(|| Error::Parse {
            what: "rational",
            detail: format!("expected p/q, got {s:?}"),
        })?;
        let num = BigInt::from_str(p.trim()).map_err(|e| Error::Parse {
            what: "rational",
            detail: format!("bad numerator {p:?}: {e}"),
        })?;
        let q = q.trim();
        if q.starts_with(['+', '-']) {
            return Err(Error::Parse {
                what: "rational",
                detail: format!("denominator must be unsigned, got {q:?}"),
            });
        }
        let den = BigInt::from_str(q).map_err(|e| Error::Parse {
            what: "rational",
            detail: format!("bad denominator {q:?}: {e}"),
        })?;
        ExtendedRational::new(num, den)
    }
}

/// Farey distance d(a1/b1, a2/b2) = |a1 b2 - a2 b1|. Symmetric, zero exactly
/// on the diagonal, and not a metric (no triangle inequality).
pub fn farey_distance(v1: &ExtendedRational, v2: &ExtendedRational) -> BigInt {
    (v1.num() * v2.den() - v2.num() * v1.den()).abs()
}

/// Two vertices are joined by an edge of the Farey graph iff their distance is 1.
pub fn is_farey_edge(v1: &ExtendedRational, v2: &ExtendedRational) -> bool {
    farey_distance(v1, v2).is_one()
}

/// The mediant (a1+a2)/(b1+b2) of two Farey neighbours: the third vertex of
/// the unique triangle over the edge (v1, v2).
pub fn mediant(v1: &ExtendedRational, v2: &ExtendedRational) -> Result<ExtendedRational> {
    let distance = farey_distance(v1, v2);
    if !distance.is_one() {
        return Err(Error::NotAnEdge { distance });
    }
    // Distance 1 makes the component sums coprime already.
    ExtendedRational::new(v1.num() + v2.num(), v1.den() + v2.den())
}

/// A 2x2 integer matrix acting projectively on the Farey graph.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Mat2 {
    pub a: BigInt,
    pub b: BigInt,
    pub c: BigInt,
    pub d: BigInt,
}

impl Mat2 {
    pub fn new(a: BigInt, b: BigInt, c: BigInt, d: BigInt) -> Self {
        Mat2 { a, b, c, d }
    }

    pub fn from_i64(a: i64, b: i64, c: i64, d: i64) -> Self {
        Mat2::new(a.into(), b.into(), c.into(), d.into())
    }

    pub fn identity() -> Self {
        Mat2::from_i64(1, 0, 0, 1)
    }

    pub fn det(&self) -> BigInt {
        &self.a * &self.d - &self.b * &self.c
    }

    pub fn is_unimodular(&self) -> bool {
        self.det().is_one()
    }

    pub fn is_neg_identity(&self) -> bool {
        let minus_one = -BigInt::one();
        self.a == minus_one && self.d == minus_one && self.b.is_zero() && self.c.is_zero()
    }

    /// adj(M) with M * adj(M) = det(M) * I; the projective inverse.
    pub fn adjugate(&self) -> Self {
        Mat2::new(
            self.d.clone(),
            -self.b.clone(),
            -self.c.clone(),
            self.a.clone(),
        )
    }

    pub fn mul(&self, rhs: &Mat2) -> Self {
        Mat2::new(
            &self.a * &rhs.a + &self.b * &rhs.c,
            &self.a * &rhs.b + &self.b * &rhs.d,
            &self.c * &rhs.a + &self.d * &rhs.c,
            &self.c * &rhs.b + &self.d * &rhs.d,
        )
    }
}

impl fmt::Display for Mat2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {} {} {}", self.a, self.b, self.c, self.d)
    }
}

impl fmt::Debug for Mat2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[[{}, {}], [{}, {}]]", self.a, self.b, self.c, self.d)
    }
}

impl FromStr for Mat2 {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parts: Vec<_> = s.split_whitespace().collect();
        if parts.len() != 4 {
            return Err(Error::Parse {
                what: "matrix",
                detail: format!("expected 4 entries `a b c d`, got {}", parts.len()),
            });
        }
        let mut entries = Vec::with_capacity(4);
        for p in parts {
            entries.push(BigInt::from_str(p).map_err(|e| Error::Parse {
                what: "matrix",
                detail: format!("bad entry {p:?}: {e}"),
            })?);
        }
        let d = entries.pop().unwrap();
        let c = entries.pop().unwrap();
        let b = entries.pop().unwrap();
        let a = entries.pop().unwrap();
        Ok(Mat2::new(a, b, c, d))
    }
}

/// Homogeneous action (p, q) -> (a p + b q, c p + d q), re-canonicalized.
/// Requires det g = ±1; such maps preserve the Farey distance.
pub fn apply_moebius(g: &Mat2, v: &ExtendedRational) -> ExtendedRational {
    assert!(
        g.det().abs().is_one(),
        "apply_moebius requires a matrix of determinant ±1"
    );
    let num = &g.a * v.num() + &g.b * v.den();
    let den = &g.c * v.num() + &g.d * v.den();
    ExtendedRational::from_homogeneous(num, den)
        .expect("determinant ±1 maps canonical vertices to canonical vertices")
}

/// A cycle in the Farey graph, stored as the decreasing vertex list
/// ∞ >= v0 > v1 > ... > v_{n-1} >= 0 with every consecutive pair (and the
/// closing pair) at distance 1.
#[derive(Clone, PartialEq, Eq)]
pub struct FareyPolygon {
    vertices: Vec<ExtendedRational>,
}

impl FareyPolygon {
    pub fn new(vertices: Vec<ExtendedRational>) -> Result<Self> {
        let n = vertices.len();
        if n < 3 {
            return Err(Error::InvalidPolygon(format!(
                "need at least 3 vertices, got {n}"
            )));
        }
        if vertices.last().unwrap() < &ExtendedRational::zero() {
            return Err(Error::InvalidPolygon(
                "vertices must be >= 0 (with ∞ allowed only first)".into(),
            ));
        }
        for i in 0..n {
            let v = &vertices[i];
            let w = &vertices[(i + 1) % n];
            if i + 1 < n && v <= w {
                return Err(Error::InvalidPolygon(format!(
                    "vertices not strictly decreasing at position {i}: {v} <= {w}"
                )));
            }
            let distance = farey_distance(v, w);
            if !distance.is_one() {
                return Err(Error::InvalidPolygon(format!(
                    "consecutive pair ({v}, {w}) has distance {distance}"
                )));
            }
        }
        Ok(FareyPolygon { vertices })
    }

    /// Number of vertices; always at least 3.
    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertices(&self) -> &[ExtendedRational] {
        &self.vertices
    }

    /// Vertex by cyclic index.
    pub fn vertex(&self, i: i64) -> &ExtendedRational {
        let n = self.vertices.len() as i64;
        &self.vertices[i.rem_euclid(n) as usize]
    }

    /// Normalized means running from ∞ down to 0.
    pub fn is_normalized(&self) -> bool {
        self.vertices[0].is_infinity() && self.vertices.last().unwrap() == &ExtendedRational::zero()
    }
}

impl fmt::Display for FareyPolygon {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.vertices.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for FareyPolygon {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for FareyPolygon {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let vertices = s
            .split(',')
            .map(|t| t.trim().parse())
            .collect::<Result<Vec<_>>>()?;
        FareyPolygon::new(vertices)
    }
}

/// All irreducible fractions in [0, 1] with denominator <= order, in
/// decreasing order from 1/1 to 0/1. Computed by direct enumeration and an
/// exact sort.
pub fn farey_series(order: u32) -> Vec<ExtendedRational> {
    assert!(order >= 1, "farey_series requires order >= 1");
    let mut terms = vec![(0i64, 1i64), (1, 1)];
    for q in 2..=order as i64 {
        for p in 1..q {
            if p.gcd(&q) == 1 {
                terms.push((p, q));
            }
        }
    }
    // Exact comparison by cross-multiplication; denominators are positive.
    terms.sort_by(|(a, b), (c, d)| (c * b).cmp(&(a * d)));
    terms
        .into_iter()
        .map(|(p, q)| ExtendedRational::from_i64(p, q).unwrap())
        .collect()
}

/// The Farey series as a polygon (its closing pair (0/1, 1/1) is an edge).
/// Needs order >= 2 so that there are at least three vertices.
pub fn farey_series_polygon(order: u32) -> Result<FareyPolygon> {
    FareyPolygon::new(farey_series(order))
}

/// A triangulation of the convex n-gon by non-crossing diagonals.
#[derive(Clone, PartialEq, Eq)]
pub struct Triangulation {
    n: usize,
    diagonals: BTreeSet<(usize, usize)>,
}

impl Triangulation {
    pub fn new(n: usize, diagonals: BTreeSet<(usize, usize)>) -> Result<Self> {
        if n < 3 {
            return Err(Error::Inconsistent(format!("polygon order {n} < 3")));
        }
        if diagonals.len() != n - 3 {
            return Err(Error::Inconsistent(format!(
                "expected {} diagonals for an {n}-gon, got {}",
                n - 3,
                diagonals.len()
            )));
        }
        for &(i, j) in &diagonals {
            if i >= j || j >= n {
                return Err(Error::Inconsistent(format!(
                    "diagonal ({i}, {j}) is not an ordered pair inside the {n}-gon"
                )));
            }
            if j - i < 2 || (i == 0 && j == n - 1) {
                return Err(Error::Inconsistent(format!(
                    "({i}, {j}) is a polygon side, not a diagonal"
                )));
            }
        }
        // Diagonals cross iff their endpoints strictly interleave.
        let list: Vec<_> = diagonals.iter().copied().collect();
        for (k, &(a, b)) in list.iter().enumerate() {
            for &(c, d) in &list[k + 1..] {
                let crossing = (a < c && c < b && b < d) || (c < a && a < d && d < b);
                if crossing {
                    return Err(Error::Inconsistent(format!(
                        "diagonals ({a}, {b}) and ({c}, {d}) cross"
                    )));
                }
            }
        }
        Ok(Triangulation { n, diagonals })
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn diagonals(&self) -> &BTreeSet<(usize, usize)> {
        &self.diagonals
    }

    fn connected(&self, i: usize, j: usize) -> bool {
        let (i, j) = if i < j { (i, j) } else { (j, i) };
        j - i == 1 || (i == 0 && j == self.n - 1) || self.diagonals.contains(&(i, j))
    }

    /// The n-2 triangles, found by recursively locating the apex over each
    /// base chord.
    pub fn triangles(&self) -> Vec<[usize; 3]> {
        let mut out = Vec::with_capacity(self.n - 2);
        let mut stack = vec![(0usize, self.n - 1)];
        while let Some((lo, hi)) = stack.pop() {
            debug_assert!(hi - lo >= 2);
            let apex = (lo + 1..hi)
                .find(|&k| self.connected(lo, k) && self.connected(k, hi))
                .expect("a validated triangulation always has an apex over each chord");
            out.push([lo, apex, hi]);
            if apex - lo >= 2 {
                stack.push((lo, apex));
            }
            if hi - apex >= 2 {
                stack.push((apex, hi));
            }
        }
        out
    }

    /// Number of triangles incident at each vertex, taken cyclically.
    pub fn incidence_counts(&self) -> Vec<usize> {
        let mut counts = vec![0usize; self.n];
        for t in self.triangles() {
            for v in t {
                counts[v] += 1;
            }
        }
        counts
    }
}

impl fmt::Display for Triangulation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.n)?;
        for (i, j) in &self.diagonals {
            write!(f, " {i}-{j}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Triangulation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Triangulation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut parts = s.split_whitespace();
        let n: usize = parts
            .next()
            .ok_or_else(|| Error::Parse {
                what: "triangulation",
                detail: "empty input".into(),
            })?
            .parse()
            .map_err(|e| Error::Parse {
                what: "triangulation",
                detail: format!("bad order: {e}"),
            })?;
        let mut diagonals = BTreeSet::new();
        for pair in parts {
            let (i, j) = pair.split_once('-').ok_or_else(|| Error::Parse {
                what: "triangulation",
                detail: format!("expected i-j, got {pair:?}"),
            })?;
            let parse = |t: &str| -> Result<usize> {
                t.parse().map_err(|e| Error::Parse {
                    what: "triangulation",
                    detail: format!("bad vertex index {t:?}: {e}"),
                })
            };
            let (i, j) = (parse(i)?, parse(j)?);
            diagonals.insert((i.min(j), i.max(j)));
        }
        Triangulation::new(n, diagonals)
    }
}

/// The canonical triangulation of a Farey polygon: its diagonals are exactly
/// the non-adjacent vertex pairs at Farey distance 1.
pub fn triangulate_farey_polygon(p: &FareyPolygon) -> Result<Triangulation> {
    let n = p.len();
    let mut diagonals = BTreeSet::new();
    for i in 0..n {
        for j in i + 2..n {
            if i == 0 && j == n - 1 {
                continue;
            }
            if is_farey_edge(&p.vertices()[i], &p.vertices()[j]) {
                diagonals.insert((i, j));
            }
        }
    }
    Triangulation::new(n, diagonals)
}

/// q_i = d(v_{i-1}, v_{i+1}), cyclically; coincides with the number of
/// triangles incident at v_i in the canonical triangulation.
pub fn polygon_quiddity(p: &FareyPolygon) -> Quiddity {
    let n = p.len() as i64;
    let entries: Vec<BigInt> = (0..n)
        .map(|i| farey_distance(p.vertex(i - 1), p.vertex(i + 1)))
        .collect();
    Quiddity::new(entries).expect("the quiddity of a Farey polygon is always valid")
}

/// Rotates a normalized polygon one step: (v1, ..., v_{n-1}, v0) renormalized
/// so that v1 lands on ∞ and v0 on 0. The quiddity shifts cyclically by one.
pub fn cyclic_rotate_normalized(p: &FareyPolygon) -> Result<FareyPolygon> {
    if !p.is_normalized() {
        return Err(Error::NotNormalized);
    }
    let n = p.len();
    let v0 = &p.vertices()[0];
    let v1 = &p.vertices()[1];
    // Projective inverse of the matrix with columns (v1, v0); it sends
    // v1 to ∞ and v0 to 0. Composing with x -> -x (negating the first row)
    // is the only remaining freedom, and exactly one choice restores the
    // decreasing order.
    let columns = Mat2::new(
        v1.num().clone(),
        v0.num().clone(),
        v1.den().clone(),
        v0.den().clone(),
    );
    let g = columns.adjugate();
    let g_flipped = Mat2::new(-g.a.clone(), -g.b.clone(), g.c.clone(), g.d.clone());

    for candidate in [g, g_flipped] {
        let mapped: Vec<ExtendedRational> = (1..=n as i64)
            .map(|i| apply_moebius(&candidate, p.vertex(i)))
            .collect();
        if let Ok(polygon) = FareyPolygon::new(mapped) {
            if polygon.is_normalized() {
                return Ok(polygon);
            }
        }
    }
    Err(Error::NormalizationFailed)
}
