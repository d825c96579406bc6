//! (n,m)-antiperiodic SL2-tilings stored as an m x n fundamental window plus
//! the block sign rule, their validation (positive window, unimodular rule,
//! antiperiodicity, tameness), and the classification by triples (q, q', M).

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};
use crate::farey::Mat2;
use crate::frieze::Quiddity;

/// A doubly antiperiodic bi-infinite integer array, determined by the window
/// a_{0..m-1, 0..n-1}. The full array is
/// a(i, j) = (-1)^(floor(i/m) + floor(j/n)) * P[i mod m][j mod n].
#[derive(Clone, PartialEq, Eq)]
pub struct SL2Tiling {
    domain: Vec<Vec<BigInt>>,
}

impl SL2Tiling {
    /// Wraps a rectangular window. Structural checks only; the tiling
    /// properties are examined by [`SL2Tiling::validate`].
    pub fn from_domain(domain: Vec<Vec<BigInt>>) -> Result<Self> {
        if domain.is_empty() || domain[0].is_empty() {
            return Err(Error::Parse {
                what: "tiling",
                detail: "empty fundamental domain".into(),
            });
        }
        let cols = domain[0].len();
        if domain.iter().any(|row| row.len() != cols) {
            return Err(Error::Parse {
                what: "tiling",
                detail: "ragged fundamental domain".into(),
            });
        }
        Ok(SL2Tiling { domain })
    }

    /// Row period m.
    pub fn rows(&self) -> usize {
        self.domain.len()
    }

    /// Column period n.
    pub fn cols(&self) -> usize {
        self.domain[0].len()
    }

    pub fn domain(&self) -> &[Vec<BigInt>] {
        &self.domain
    }

    /// Entry of the bi-infinite array at any index pair.
    pub fn entry(&self, i: i64, j: i64) -> BigInt {
        let m = self.rows() as i64;
        let n = self.cols() as i64;
        let value = &self.domain[i.rem_euclid(m) as usize][j.rem_euclid(n) as usize];
        if (i.div_euclid(m) + j.div_euclid(n)).rem_euclid(2) == 1 {
            -value
        } else {
            value.clone()
        }
    }

    fn minor2(&self, i: i64, j: i64) -> BigInt {
        self.entry(i, j) * self.entry(i + 1, j + 1) - self.entry(i, j + 1) * self.entry(i + 1, j)
    }

    fn minor3(&self, i: i64, j: i64) -> BigInt {
        let e = |r: i64, c: i64| self.entry(i + r, j + c);
        e(0, 0) * (e(1, 1) * e(2, 2) - e(1, 2) * e(2, 1))
            - e(0, 1) * (e(1, 0) * e(2, 2) - e(1, 2) * e(2, 0))
            + e(0, 2) * (e(1, 0) * e(2, 1) - e(1, 1) * e(2, 0))
    }

    /// Checks all tiling properties over one period plus a one-step overlap
    /// band; antiperiodicity makes that band sufficient for the whole array.
    pub fn validate(&self) -> TilingReport {
        let m = self.rows() as i64;
        let n = self.cols() as i64;
        let one = BigInt::one();

        let mut positive = Check::pass();
        'pos: for (i, row) in self.domain.iter().enumerate() {
            for (j, v) in row.iter().enumerate() {
                if *v < one {
                    positive = Check::fail(i as i64, j as i64);
                    break 'pos;
                }
            }
        }

        let mut unimodular = Check::pass();
        'uni: for i in -1..=m {
            for j in -1..=n {
                if self.minor2(i, j) != one {
                    unimodular = Check::fail(i, j);
                    break 'uni;
                }
            }
        }

        let mut antiperiodic = Check::pass();
        'anti: for i in 0..m {
            for j in 0..n {
                let v = self.entry(i, j);
                if self.entry(i, j + n) != -&v || self.entry(i + m, j) != -v {
                    antiperiodic = Check::fail(i, j);
                    break 'anti;
                }
            }
        }

        let mut tame = Check::pass();
        'tame: for i in -1..=m {
            for j in -1..=n {
                if !num_traits::Zero::is_zero(&self.minor3(i, j)) {
                    tame = Check::fail(i, j);
                    break 'tame;
                }
            }
        }

        TilingReport {
            positive_domain: positive,
            unimodular,
            antiperiodic,
            tame,
        }
    }

    /// The signed (2m) x (2n) window from the origin, right-aligned columns.
    pub fn render_window(&self) -> String {
        let m = 2 * self.rows() as i64;
        let n = 2 * self.cols() as i64;
        let cells: Vec<Vec<String>> = (0..m)
            .map(|i| (0..n).map(|j| self.entry(i, j).to_string()).collect())
            .collect();
        let width = cells.iter().flatten().map(String::len).max().unwrap();
        let mut out = String::new();
        for row in cells {
            let line: Vec<String> = row.into_iter().map(|c| format!("{c:>width$}")).collect();
            out.push_str(line.join(" ").trim_end());
            out.push('\n');
        }
        out
    }

    /// File form: "m n" header, then the window rows.
    pub fn to_file_string(&self) -> String {
        let mut out = format!("{} {}\n", self.rows(), self.cols());
        for row in &self.domain {
            let line: Vec<String> = row.iter().map(|v| v.to_string()).collect();
            out.push_str(&line.join(" "));
            out.push('\n');
        }
        out
    }

    /// Parses the file form; the declared format carries positive integers.
    pub fn from_file_str(s: &str) -> Result<Self> {
        let mut lines = s.lines().filter(|l| !l.trim().is_empty());
        let header = lines.next().ok_or_else(|| Error::Parse {
            what: "tiling file",
            detail: "empty file".into(),
        })?;
        let dims: Vec<&str> = header.split_whitespace().collect();
        if dims.len() != 2 {
            return Err(Error::Parse {
                what: "tiling file",
                detail: format!("header must be `m n`, got {header:?}"),
            });
        }
        let parse_dim = |t: &str| -> Result<usize> {
            t.parse().map_err(|e| Error::Parse {
                what: "tiling file",
                detail: format!("bad dimension {t:?}: {e}"),
            })
        };
        let (m, n) = (parse_dim(dims[0])?, parse_dim(dims[1])?);
        let mut domain = Vec::with_capacity(m);
        for _ in 0..m {
            let line = lines.next().ok_or_else(|| Error::Parse {
                what: "tiling file",
                detail: format!("expected {m} rows"),
            })?;
            let row = line
                .split_whitespace()
                .map(|t| {
                    let v = BigInt::from_str(t).map_err(|e| Error::Parse {
                        what: "tiling file",
                        detail: format!("bad entry {t:?}: {e}"),
                    })?;
                    if v < BigInt::one() || t.starts_with('+') {
                        return Err(Error::Parse {
                            what: "tiling file",
                            detail: format!("entries must be positive decimal integers, got {t:?}"),
                        });
                    }
                    Ok(v)
                })
                .collect::<Result<Vec<_>>>()?;
            if row.len() != n {
                return Err(Error::Parse {
                    what: "tiling file",
                    detail: format!("row has {} entries, expected {n}", row.len()),
                });
            }
            domain.push(row);
        }
        if lines.next().is_some() {
            return Err(Error::Parse {
                what: "tiling file",
                detail: "trailing content after the window rows".into(),
            });
        }
        SL2Tiling::from_domain(domain)
    }
}

impl fmt::Debug for SL2Tiling {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SL2Tiling({}x{})", self.rows(), self.cols())
    }
}

/// Outcome of a single validation property.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Check {
    pub passed: bool,
    pub first_failure: Option<(i64, i64)>,
}

impl Check {
    fn pass() -> Self {
        Check {
            passed: true,
            first_failure: None,
        }
    }

    fn fail(i: i64, j: i64) -> Self {
        Check {
            passed: false,
            first_failure: Some((i, j)),
        }
    }
}

/// Per-property report of [`SL2Tiling::validate`].
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TilingReport {
    pub positive_domain: Check,
    pub unimodular: Check,
    pub antiperiodic: Check,
    pub tame: Check,
}

impl TilingReport {
    pub fn all_pass(&self) -> bool {
        self.positive_domain.passed
            && self.unimodular.passed
            && self.antiperiodic.passed
            && self.tame.passed
    }

    /// The SL2 structure without the positivity requirement; this is what a
    /// frieze extension satisfies.
    pub fn is_tame_sl2(&self) -> bool {
        self.unimodular.passed && self.antiperiodic.passed && self.tame.passed
    }
}

impl fmt::Display for TilingReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let line = |name: &str, check: &Check| match check.first_failure {
            None => format!("{name}: ok"),
            Some((i, j)) => format!("{name}: FAIL at ({i}, {j})"),
        };
        writeln!(f, "{}", line("positive domain", &self.positive_domain))?;
        writeln!(f, "{}", line("unimodular rule", &self.unimodular))?;
        writeln!(f, "{}", line("antiperiodicity", &self.antiperiodic))?;
        write!(f, "{}", line("tame (3x3 minors)", &self.tame))
    }
}

/// The classification data of a positive-window tiling: quiddities of the
/// column and row recurrences and the seed matrix a_{0..1, 0..1}.
#[derive(Clone, PartialEq, Eq)]
pub struct Triple {
    q: Quiddity,
    qprime: Quiddity,
    mat: Mat2,
}

impl Triple {
    pub fn new(q: Quiddity, qprime: Quiddity, mat: Mat2) -> Result<Self> {
        let diagnostics = check_triple(q.entries(), qprime.entries(), &mat);
        if let Some(name) = diagnostics.first_failure() {
            return Err(Error::InvalidTriple(name.into()));
        }
        Ok(Triple { q, qprime, mat })
    }

    /// Column quiddity, of order n.
    pub fn q(&self) -> &Quiddity {
        &self.q
    }

    /// Row quiddity, of order m.
    pub fn qprime(&self) -> &Quiddity {
        &self.qprime
    }

    pub fn mat(&self) -> &Mat2 {
        &self.mat
    }

    pub fn cols(&self) -> usize {
        self.q.order()
    }

    pub fn rows(&self) -> usize {
        self.qprime.order()
    }

    /// File form: quiddity, quiddity, matrix, one per line.
    pub fn to_file_string(&self) -> String {
        format!("{}\n{}\n{}\n", self.q, self.qprime, self.mat)
    }

    /// One-line form used by streaming enumeration.
    pub fn to_line(&self) -> String {
        format!("{}\t{}\t{}", self.q, self.qprime, self.mat)
    }

    pub fn from_file_str(s: &str) -> Result<Self> {
        let lines: Vec<&str> = s.lines().filter(|l| !l.trim().is_empty()).collect();
        if lines.len() != 3 {
            return Err(Error::Parse {
                what: "triple file",
                detail: format!("expected 3 lines (q, q', matrix), got {}", lines.len()),
            });
        }
        let q = parse_int_list(lines[0])?;
        let qprime = parse_int_list(lines[1])?;
        let mat: Mat2 = lines[2].parse()?;
        let diagnostics = check_triple(&q, &qprime, &mat);
        if let Some(name) = diagnostics.first_failure() {
            return Err(Error::InvalidTriple(name.into()));
        }
        Ok(Triple {
            q: Quiddity::new(q).expect("checked"),
            qprime: Quiddity::new(qprime).expect("checked"),
            mat,
        })
    }
}

impl fmt::Debug for Triple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Triple(q={}, q'={}, M={})",
            self.q, self.qprime, self.mat
        )
    }
}

fn parse_int_list(s: &str) -> Result<Vec<BigInt>> {
    s.split(',')
        .map(|t| {
            BigInt::from_str(t.trim()).map_err(|e| Error::Parse {
                what: "quiddity",
                detail: format!("bad entry {t:?}: {e}"),
            })
        })
        .collect()
}

/// Named results of every triple invariant.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct TripleDiagnostics {
    pub det_is_one: bool,
    pub entries_positive: bool,
    pub q_is_quiddity: bool,
    pub qprime_is_quiddity: bool,
    /// q_0 a < b; vacuous at order 2.
    pub row_inequality: bool,
    /// q'_0 a < c; vacuous at order 2.
    pub column_inequality: bool,
    /// q_0 < d/c and q'_0 < d/b; follows from the primary inequalities.
    pub derived_inequalities: bool,
}

impl TripleDiagnostics {
    pub fn is_valid(&self) -> bool {
        self.first_failure().is_none()
    }

    pub fn first_failure(&self) -> Option<&'static str> {
        if !self.det_is_one {
            Some("matrix determinant is not 1")
        } else if !self.entries_positive {
            Some("matrix entries are not all positive")
        } else if !self.q_is_quiddity {
            Some("q is not a quiddity")
        } else if !self.qprime_is_quiddity {
            Some("q' is not a quiddity")
        } else if !self.row_inequality {
            Some("inequality q_0 a < b fails")
        } else if !self.column_inequality {
            Some("inequality q'_0 a < c fails")
        } else if !self.derived_inequalities {
            Some("derived inequalities q_0 c < d, q'_0 b < d fail")
        } else {
            None
        }
    }
}

/// Checks determinant, positivity, both quiddity properties and the two
/// defining inequalities, plus the derived pair as a cross-check.
pub fn check_triple(q: &[BigInt], qprime: &[BigInt], mat: &Mat2) -> TripleDiagnostics {
    let one = BigInt::one();
    let det_is_one = mat.det() == one;
    let entries_positive = mat.a >= one && mat.b >= one && mat.c >= one && mat.d >= one;
    let q_is_quiddity = crate::frieze::is_quiddity(q);
    let qprime_is_quiddity = crate::frieze::is_quiddity(qprime);
    let row_inequality = q.len() == 2 || q.is_empty() || &q[0] * &mat.a < mat.b;
    let column_inequality = qprime.len() == 2 || qprime.is_empty() || &qprime[0] * &mat.a < mat.c;
    let derived_inequalities = (q.len() == 2 || q.is_empty() || &q[0] * &mat.c < mat.d)
        && (qprime.len() == 2 || qprime.is_empty() || &qprime[0] * &mat.b < mat.d);
    // The derived pair must follow whenever everything else holds.
    let diagnostics = TripleDiagnostics {
        det_is_one,
        entries_positive,
        q_is_quiddity,
        qprime_is_quiddity,
        row_inequality,
        column_inequality,
        derived_inequalities,
    };
    if det_is_one
        && entries_positive
        && q_is_quiddity
        && qprime_is_quiddity
        && row_inequality
        && column_inequality
    {
        debug_assert!(derived_inequalities, "derived inequalities must follow");
    }
    diagnostics
}

/// Fills the m x n window from the seed block M by the two recurrences
/// a_{i,j+1} = q_j a_{i,j} - a_{i,j-1} and a_{i+1,j} = q'_i a_{i,j} - a_{i-1,j}.
/// No positivity is required of the result; both fill orders are computed and
/// compared.
pub fn from_recurrence_data(q: &[BigInt], qprime: &[BigInt], mat: &Mat2) -> Result<SL2Tiling> {
    let n = q.len();
    let m = qprime.len();
    if n < 2 || m < 2 {
        return Err(Error::InvalidTriple(format!(
            "recurrence orders must be at least 2, got n={n}, m={m}"
        )));
    }

    // Rows first: top two rows by the column recurrence, the rest row by row.
    let mut by_rows: Vec<Vec<BigInt>> = vec![Vec::with_capacity(n); m];
    by_rows[0].extend([mat.a.clone(), mat.b.clone()]);
    by_rows[1].extend([mat.c.clone(), mat.d.clone()]);
    for row in by_rows.iter_mut().take(2) {
        for j in 1..n - 1 {
            let next = &q[j] * &row[j] - &row[j - 1];
            row.push(next);
        }
    }
    for i in 1..m - 1 {
        let (done, rest) = by_rows.split_at_mut(i + 1);
        let filled: Vec<BigInt> = (0..n)
            .map(|j| &qprime[i] * &done[i][j] - &done[i - 1][j])
            .collect();
        rest[0] = filled;
    }

    // Columns first, then rows; must agree with the first fill.
    let mut by_cols: Vec<Vec<BigInt>> = vec![Vec::with_capacity(n); m];
    by_cols[0].extend([mat.a.clone(), mat.b.clone()]);
    by_cols[1].extend([mat.c.clone(), mat.d.clone()]);
    for i in 1..m - 1 {
        let next0 = &qprime[i] * &by_cols[i][0] - &by_cols[i - 1][0];
        let next1 = &qprime[i] * &by_cols[i][1] - &by_cols[i - 1][1];
        by_cols[i + 1].extend([next0, next1]);
    }
    for row in by_cols.iter_mut() {
        for j in 1..n - 1 {
            let next = &q[j] * &row[j] - &row[j - 1];
            row.push(next);
        }
    }
    if by_rows != by_cols {
        return Err(Error::InvalidTriple(
            "row-first and column-first recurrences disagree".into(),
        ));
    }

    SL2Tiling::from_domain(by_rows)
}

/// The positive-window tiling of a valid triple (the window entries are
/// positive exactly because the triple inequalities hold).
pub fn tiling_from_triple(triple: &Triple) -> Result<SL2Tiling> {
    let tiling = from_recurrence_data(
        triple.q().entries(),
        triple.qprime().entries(),
        triple.mat(),
    )?;
    let one = BigInt::one();
    for (i, row) in tiling.domain().iter().enumerate() {
        for (j, v) in row.iter().enumerate() {
            if *v < one {
                return Err(Error::InvalidTriple(format!(
                    "window entry a({i}, {j}) = {v} is not positive"
                )));
            }
        }
    }
    Ok(tiling)
}

/// Recovers the recurrence coefficients and the seed block from any tiling
/// whose columns and rows satisfy three-term recurrences (unimodular + tame).
/// The coefficient q_j is read off at the top row and re-checked at every
/// other row, and symmetrically for q'_i.
pub fn extract_recurrence_data(t: &SL2Tiling) -> Result<(Vec<BigInt>, Vec<BigInt>, Mat2)> {
    let m = t.rows() as i64;
    let n = t.cols() as i64;

    let mut q = Vec::with_capacity(n as usize);
    for j in 0..n {
        let lambda = t.entry(0, j - 1) * t.entry(1, j + 1) - t.entry(0, j + 1) * t.entry(1, j - 1);
        for i in 1..m {
            let other = t.entry(i, j - 1) * t.entry(i + 1, j + 1)
                - t.entry(i, j + 1) * t.entry(i + 1, j - 1);
            if other != lambda {
                return Err(Error::NotTame(format!(
                    "column coefficient at j={j} varies between rows 0 and {i}"
                )));
            }
        }
        q.push(lambda);
    }

    let mut qprime = Vec::with_capacity(m as usize);
    for i in 0..m {
        let mu = t.entry(i - 1, 0) * t.entry(i + 1, 1) - t.entry(i + 1, 0) * t.entry(i - 1, 1);
        for j in 1..n {
            let other = t.entry(i - 1, j) * t.entry(i + 1, j + 1)
                - t.entry(i + 1, j) * t.entry(i - 1, j + 1);
            if other != mu {
                return Err(Error::NotTame(format!(
                    "row coefficient at i={i} varies between columns 0 and {j}"
                )));
            }
        }
        qprime.push(mu);
    }

    let mat = Mat2::new(t.entry(0, 0), t.entry(0, 1), t.entry(1, 0), t.entry(1, 1));
    Ok((q, qprime, mat))
}

/// Inverse of [`tiling_from_triple`] on validated tilings.
pub fn triple_from_tiling(t: &SL2Tiling) -> Result<Triple> {
    let (q, qprime, mat) = extract_recurrence_data(t)?;
    if !crate::frieze::is_quiddity(&q) {
        return Err(Error::NotAQuiddity(format!(
            "extracted column coefficients {q:?} fail the quiddity test"
        )));
    }
    if !crate::frieze::is_quiddity(&qprime) {
        return Err(Error::NotAQuiddity(format!(
            "extracted row coefficients {qprime:?} fail the quiddity test"
        )));
    }
    Triple::new(
        Quiddity::new(q).expect("checked"),
        Quiddity::new(qprime).expect("checked"),
        mat,
    )
}

/// Membership in the semigroup of totally positive unimodular matrices:
/// det M = 1, 0 < a < b and a < c (then b < d and c < d follow).
pub fn in_semigroup_s(mat: &Mat2) -> bool {
    let positive = mat.a > BigInt::from(0);
    let member = mat.det().is_one() && positive && mat.a < mat.b && mat.a < mat.c;
    if member {
        debug_assert!(mat.b < mat.d && mat.c < mat.d);
    }
    member
}

/// Exact monotonicity of the boundary ratios of a positive window:
/// a_{0,j}/a_{1,j} strictly decreases along the top two rows, and
/// a_{i,0}/a_{i,1} strictly decreases down the left two columns.
pub fn ratio_monotonicity(t: &SL2Tiling) -> bool {
    let p = t.domain();
    let (m, n) = (t.rows(), t.cols());
    let rows_ok = (0..n - 1).all(|j| &p[0][j] * &p[1][j + 1] > &p[0][j + 1] * &p[1][j]);
    let cols_ok = (0..m - 1).all(|i| &p[i][0] * &p[i + 1][1] > &p[i + 1][0] * &p[i][1]);
    rows_ok && cols_ok
}

/// Re-anchors the fundamental window at (di, dj) and classifies the result.
/// Only translations landing on an all-positive window produce a triple.
pub fn translated_triple(t: &SL2Tiling, di: i64, dj: i64) -> Result<Triple> {
    let one = BigInt::one();
    let mut window = Vec::with_capacity(t.rows());
    for i in 0..t.rows() as i64 {
        let mut row = Vec::with_capacity(t.cols());
        for j in 0..t.cols() as i64 {
            let v = t.entry(di + i, dj + j);
            if v < one {
                return Err(Error::InvalidTriple(format!(
                    "translated window is not positive at ({i}, {j})"
                )));
            }
            row.push(v);
        }
        window.push(row);
    }
    triple_from_tiling(&SL2Tiling::from_domain(window)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn quiddity(entries: &[i64]) -> Quiddity {
        Quiddity::from_i64s(entries).unwrap()
    }

    fn triple(q: &[i64], qprime: &[i64], mat: [i64; 4]) -> Triple {
        Triple::new(
            quiddity(q),
            quiddity(qprime),
            Mat2::from_i64(mat[0], mat[1], mat[2], mat[3]),
        )
        .unwrap()
    }

    fn worked_triple() -> Triple {
        triple(&[1, 2, 2, 1, 3], &[2, 1, 2, 1], [2, 5, 7, 18])
    }

    const WORKED_DOMAIN: [[i64; 5]; 4] = [
        [2, 5, 8, 11, 3],
        [7, 18, 29, 40, 11],
        [5, 13, 21, 29, 8],
        [3, 8, 13, 18, 5],
    ];

    fn domain_of(t: &SL2Tiling) -> Vec<Vec<i64>> {
        t.domain()
            .iter()
            .map(|row| row.iter().map(|v| i64::try_from(v).unwrap()).collect())
            .collect()
    }

    #[test]
    fn worked_example_window() {
        let t = tiling_from_triple(&worked_triple()).unwrap();
        let expected: Vec<Vec<i64>> = WORKED_DOMAIN.iter().map(|r| r.to_vec()).collect();
        assert_eq!(domain_of(&t), expected);
        assert!(t.validate().all_pass());
    }

    #[test]
    fn worked_example_signs() {
        let t = tiling_from_triple(&worked_triple()).unwrap();
        assert_eq!(t.entry(0, 5), BigInt::from(-2));
        assert_eq!(t.entry(4, 0), BigInt::from(-2));
        assert_eq!(t.entry(4, 5), BigInt::from(2));
        assert_eq!(t.entry(-1, -1), t.entry(3, 4));
    }

    #[test]
    fn degenerate_two_by_two() {
        let t = tiling_from_triple(&triple(&[0, 0], &[0, 0], [1, 1, 1, 2])).unwrap();
        assert_eq!(domain_of(&t), vec![vec![1, 1], vec![1, 2]]);
        assert!(t.validate().all_pass());
        assert!(ratio_monotonicity(&t));
        let back = triple_from_tiling(&t).unwrap();
        assert_eq!(back, triple(&[0, 0], &[0, 0], [1, 1, 1, 2]));
    }

    #[test]
    fn mixed_degenerate_orders() {
        let t = tiling_from_triple(&triple(&[0, 0], &[1, 1, 1], [1, 1, 2, 3])).unwrap();
        assert_eq!(domain_of(&t), vec![vec![1, 1], vec![2, 3], vec![1, 2]]);
        assert!(t.validate().all_pass());
    }

    #[test]
    fn three_by_three_closed_form() {
        let mat = Mat2::from_i64(1, 2, 2, 5);
        assert!(in_semigroup_s(&mat));
        let t = tiling_from_triple(&triple(&[1, 1, 1], &[1, 1, 1], [1, 2, 2, 5])).unwrap();
        // (a, b, b-a / c, d, d-c / c-a, d-b, d-b-c+a)
        assert_eq!(
            domain_of(&t),
            vec![vec![1, 2, 1], vec![2, 5, 3], vec![1, 3, 2]]
        );
    }

    #[test]
    fn single_cell_window_is_not_a_tiling() {
        let t = SL2Tiling::from_domain(vec![vec![BigInt::one()]]).unwrap();
        let report = t.validate();
        assert!(report.positive_domain.passed);
        assert!(!report.unimodular.passed);
    }

    #[test]
    fn validation_catches_a_perturbed_entry() {
        let mut domain: Vec<Vec<BigInt>> = WORKED_DOMAIN
            .iter()
            .map(|r| r.iter().map(|&v| BigInt::from(v)).collect())
            .collect();
        domain[2][3] += 1;
        let t = SL2Tiling::from_domain(domain).unwrap();
        let report = t.validate();
        assert!(report.positive_domain.passed);
        assert!(!report.unimodular.passed);
        assert!(report.unimodular.first_failure.is_some());
    }

    #[test]
    fn check_triple_diagnostics() {
        let good = check_triple(
            &[1.into(), 2.into(), 2.into(), 1.into(), 3.into()],
            &[2.into(), 1.into(), 2.into(), 1.into()],
            &Mat2::from_i64(2, 5, 7, 18),
        );
        assert!(good.is_valid());

        // q_0 a = 1 is not < b = 1.
        let boundary = check_triple(
            &[1.into(), 1.into(), 1.into()],
            &[1.into(), 1.into(), 1.into()],
            &Mat2::from_i64(1, 1, 1, 2),
        );
        assert!(!boundary.row_inequality);
        assert_eq!(boundary.first_failure(), Some("inequality q_0 a < b fails"));

        let ok = check_triple(
            &[1.into(), 1.into(), 1.into()],
            &[1.into(), 1.into(), 1.into()],
            &Mat2::from_i64(1, 2, 2, 5),
        );
        assert!(ok.is_valid());
    }

    #[test]
    fn semigroup_examples() {
        assert!(in_semigroup_s(&Mat2::from_i64(1, 2, 2, 5)));
        assert!(in_semigroup_s(&Mat2::from_i64(2, 5, 7, 18)));
        assert!(!in_semigroup_s(&Mat2::from_i64(1, 1, 1, 2)));
        assert!(!in_semigroup_s(&Mat2::from_i64(1, 2, 2, 4)));
    }

    #[test]
    fn ratio_monotonicity_on_the_worked_example() {
        let t = tiling_from_triple(&worked_triple()).unwrap();
        assert!(ratio_monotonicity(&t));
    }

    #[test]
    fn worked_example_round_trip() {
        let tr = worked_triple();
        let t = tiling_from_triple(&tr).unwrap();
        assert_eq!(triple_from_tiling(&t).unwrap(), tr);
    }

    #[test]
    fn extraction_rejects_non_recurrent_windows() {
        // No three-term column recurrence fits this window.
        let domain: Vec<Vec<BigInt>> = [[1, 1, 1], [1, 2, 1], [1, 1, 5]]
            .iter()
            .map(|r| r.iter().map(|&v| BigInt::from(v)).collect())
            .collect();
        let t = SL2Tiling::from_domain(domain).unwrap();
        assert!(!t.validate().is_tame_sl2());
        assert!(matches!(
            extract_recurrence_data(&t),
            Err(Error::NotTame(_))
        ));
        assert!(matches!(triple_from_tiling(&t), Err(Error::NotTame(_))));
    }

    #[test]
    fn window_translation() {
        let tr = worked_triple();
        let t = tiling_from_triple(&tr).unwrap();
        // Whole-period translations with even sign land on the same window.
        assert_eq!(translated_triple(&t, 4, 5).unwrap(), tr);
        assert_eq!(translated_triple(&t, 8, 0).unwrap(), tr);
        // A one-step shift crosses a sign boundary.
        assert!(translated_triple(&t, 1, 0).is_err());
    }

    #[test]
    fn tiling_file_round_trip() {
        let t = tiling_from_triple(&worked_triple()).unwrap();
        let text = t.to_file_string();
        assert_eq!(SL2Tiling::from_file_str(&text).unwrap(), t);
        assert!(SL2Tiling::from_file_str("2 2\n1 0\n1 1\n").is_err());
        assert!(SL2Tiling::from_file_str("2 2\n1 1\n1\n").is_err());
    }

    #[test]
    fn triple_file_round_trip() {
        let tr = worked_triple();
        let text = tr.to_file_string();
        assert_eq!(text, "1,2,2,1,3\n2,1,2,1\n2 5 7 18\n");
        assert_eq!(Triple::from_file_str(&text).unwrap(), tr);

        let bad = "1,1,1\n1,1,1\n1 1 1 2\n";
        assert!(matches!(
            Triple::from_file_str(bad),
            Err(Error::InvalidTriple(_))
        ));
    }

    #[test]
    fn render_window_shape() {
        let t = tiling_from_triple(&triple(&[0, 0], &[0, 0], [1, 1, 1, 2])).unwrap();
        assert_eq!(
            t.render_window(),
            " 1  1 -1 -1\n 1  2 -1 -2\n-1 -1  1  1\n-1 -2  1  2\n"
        );
    }
}
