//! Discrete Hill (Sturm-Liouville) equations V_{i+1} = c_i V_i - V_{i-1}
//! with n-periodic integer coefficients: solution windows, the monodromy
//! over one period, and the non-oscillation test.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::farey::Mat2;

/// An n-periodic coefficient sequence (c_0, ..., c_{n-1}), n >= 2.
#[derive(Clone, PartialEq, Eq)]
pub struct HillEquation {
    coeffs: Vec<BigInt>,
}

/// A finite window of one solution, together with the index of its first
/// value.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct HillSolution {
    origin: i64,
    values: Vec<BigInt>,
}

impl HillSolution {
    pub fn origin(&self) -> i64 {
        self.origin
    }

    pub fn values(&self) -> &[BigInt] {
        &self.values
    }

    /// Value at an absolute index inside the window.
    pub fn value(&self, i: i64) -> &BigInt {
        &self.values[(i - self.origin) as usize]
    }
}

impl HillEquation {
    pub fn new(coeffs: Vec<BigInt>) -> Result<Self> {
        if coeffs.len() < 2 {
            return Err(Error::Parse {
                what: "hill equation",
                detail: format!("need at least 2 coefficients, got {}", coeffs.len()),
            });
        }
        Ok(HillEquation { coeffs })
    }

    pub fn from_i64s(coeffs: &[i64]) -> Result<Self> {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn period(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient by cyclic index.
    pub fn coeff(&self, i: i64) -> &BigInt {
        let n = self.coeffs.len() as i64;
        &self.coeffs[i.rem_euclid(n) as usize]
    }

    /// Fills the window [from, from + len) from the seed values
    /// V_from = v0, V_{from+1} = v1 by running the recurrence forward.
    pub fn solve(&self, v0: BigInt, v1: BigInt, from: i64, len: usize) -> HillSolution {
        assert!(len >= 2, "a solution window needs at least the two seeds");
        let mut values = Vec::with_capacity(len);
        values.push(v0);
        values.push(v1);
        for k in 2..len {
            let i = from + k as i64 - 1; // recurrence at index i produces V_{i+1}
            let next = self.coeff(i) * &values[k - 1] - &values[k - 2];
            values.push(next);
        }
        HillSolution {
            origin: from,
            values,
        }
    }

    /// Ordered product of the companion matrices [[c_i, -1], [1, 0]] over one
    /// period; every solution is n-antiperiodic iff this equals -identity.
    pub fn monodromy(&self) -> Mat2 {
        let mut m = Mat2::identity();
        for c in &self.coeffs {
            let companion = Mat2::new(c.clone(), -BigInt::one(), BigInt::one(), BigInt::zero());
            m = companion.mul(&m);
        }
        m
    }

    /// Non-oscillation: the monodromy is -identity and every one of the n
    /// shifted basis solutions (seeded 0, 1) stays strictly positive strictly
    /// between its zeros, which sit one period apart.
    pub fn is_non_oscillating(&self) -> bool {
        if !self.monodromy().is_neg_identity() {
            return false;
        }
        let n = self.coeffs.len();
        let one = BigInt::one();
        (0..n as i64).all(|k| {
            let window = self.solve(BigInt::zero(), one.clone(), k, n + 1);
            window.values()[1..n].iter().all(|v| *v >= one)
        })
    }
}

impl std::fmt::Debug for HillEquation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let list: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        write!(f, "HillEquation({})", list.join(","))
    }
}

impl std::str::FromStr for HillEquation {
    type Err = Error;

    /// Coefficients in the comma-separated quiddity text format; arbitrary
    /// integers are allowed here.
    fn from_str(s: &str) -> Result<Self> {
        let coeffs = s
            .split(',')
            .map(|t| {
                t.trim().parse::<BigInt>().map_err(|e| Error::Parse {
                    what: "hill equation",
                    detail: format!("bad coefficient {t:?}: {e}"),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        HillEquation::new(coeffs)
    }
}

impl std::fmt::Display for HillSolution {
    /// One signed integer row.
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let row: Vec<String> = self.values.iter().map(|v| v.to_string()).collect();
        write!(f, "{}", row.join(" "))
    }
}

/// Sign changes of a window, counted over the nonzero entries: each adjacent
/// pair of nearest nonzero values with opposite signs contributes one.
pub fn sign_changes(values: &[BigInt]) -> usize {
    let mut changes = 0;
    let mut last: Option<bool> = None;
    for v in values {
        if v.is_zero() {
            continue;
        }
        let positive = v.is_positive();
        if let Some(prev) = last {
            if prev != positive {
                changes += 1;
            }
        }
        last = Some(positive);
    }
    changes
}
