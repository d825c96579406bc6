//! Farey-geometric reading of a positive-window tiling: the triple (q, q', M)
//! produces an n-gon and an m-gon in the Farey graph, the window entries are
//! the pairwise distances a_{i,j} = d(v'_{i-1}, v_j), and the two polygons
//! embed in a common N-gon.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::farey::{
    apply_moebius, farey_distance, is_farey_edge, ExtendedRational, FareyPolygon, Mat2,
};
use crate::frieze::polygon_from_quiddity;
use crate::tiling::Triple;

/// The two polygons of a triple: the n-gon v of top-row ratios and the
/// normalized m-gon v'. They are separated: v'_{m-2} > v_0 > ... > v_{n-1} >
/// v'_{m-1} = 0/1, with v'_{m-2} = 1/q'_0.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PolygonPair {
    ngon: FareyPolygon,
    mgon: FareyPolygon,
}

impl PolygonPair {
    /// The n-gon v built from the tiling's first two rows.
    pub fn ngon(&self) -> &FareyPolygon {
        &self.ngon
    }

    /// The normalized m-gon v'.
    pub fn mgon(&self) -> &FareyPolygon {
        &self.mgon
    }
}

/// Builds the polygon pair of a triple. The n-gon comes from the homogeneous
/// recurrence w_{j+1} = q_j w_j - w_{j-1} seeded with the columns (a, c) and
/// (b, d); the m-gon is the normalized polygon of q' shifted one step.
pub fn polygons_from_triple(triple: &Triple) -> Result<PolygonPair> {
    let n = triple.cols();
    let m = triple.rows();
    if n < 3 || m < 3 {
        return Err(Error::DegenerateOrder { n: n.min(m) });
    }
    let q = triple.q();
    let mat = triple.mat();

    let mut coords: Vec<(BigInt, BigInt)> = Vec::with_capacity(n);
    coords.push((mat.a.clone(), mat.c.clone()));
    coords.push((mat.b.clone(), mat.d.clone()));
    for j in 1..n - 1 {
        let qj = q.get(j as i64);
        let num = qj * &coords[j].0 - &coords[j - 1].0;
        let den = qj * &coords[j].1 - &coords[j - 1].1;
        coords.push((num, den));
    }
    let vertices = coords
        .into_iter()
        .map(|(num, den)| {
            ExtendedRational::new(num, den)
                .map_err(|_| Error::InvalidTriple("n-gon vertex is not canonical".into()))
        })
        .collect::<Result<Vec<_>>>()?;
    let ngon = FareyPolygon::new(vertices)
        .map_err(|e| Error::InvalidTriple(format!("top rows do not form a Farey polygon: {e}")))?;

    let mgon = polygon_from_quiddity(&triple.qprime().rotate_left(1))?;

    // Separation around the n-gon; the left bound is v'_{m-2} = 1/q'_0.
    let left = &mgon.vertices()[m - 2];
    let expected_left = ExtendedRational::new(BigInt::one(), triple.qprime().get(0).clone())
        .expect("1/q'_0 is canonical");
    debug_assert_eq!(*left, expected_left);
    let right = &mgon.vertices()[m - 1];
    debug_assert!(right == &ExtendedRational::zero());
    if left <= &ngon.vertices()[0] || &ngon.vertices()[n - 1] <= right {
        return Err(Error::SeparationViolated);
    }

    Ok(PolygonPair { ngon, mgon })
}

/// Window entries as Farey distances: a_{i,j} = d(v'_{i-1}, v_j), the
/// m-gon index taken cyclically (so row 0 measures from v'_{m-1} = 0/1).
pub fn entry_by_distance(pair: &PolygonPair, i: i64, j: i64) -> Result<BigInt> {
    let m = pair.mgon.len() as i64;
    let n = pair.ngon.len() as i64;
    if i < 0 || i >= m || j < 0 || j >= n {
        return Err(Error::IndexOutOfDomain { i, j });
    }
    Ok(farey_distance(
        pair.mgon.vertex(i - 1),
        &pair.ngon.vertices()[j as usize],
    ))
}

/// The vertices strictly between hi and lo on the minimal decreasing chain of
/// Farey edges joining them. Empty when (hi, lo) is already an edge.
///
/// hi is moved to ∞ by a unimodular map; there the chain is the convergent
/// sequence of the ceiling (minus-sign) continued fraction of the image of
/// lo, which descends from the larger endpoint through successive mediants.
pub fn mediant_chain(
    hi: &ExtendedRational,
    lo: &ExtendedRational,
) -> Result<Vec<ExtendedRational>> {
    if hi <= lo {
        return Err(Error::InvalidPolygon(format!(
            "chain endpoints must decrease, got {hi} <= {lo}"
        )));
    }
    if is_farey_edge(hi, lo) {
        return Ok(Vec::new());
    }

    let g = if hi.is_infinity() {
        Mat2::identity()
    } else {
        // p x + q y = 1 gives [[x, y], [-q, p]] of determinant 1 sending hi to ∞.
        let egcd = hi.num().extended_gcd(hi.den());
        debug_assert!(egcd.gcd.is_one());
        Mat2::new(egcd.x, egcd.y, -hi.den().clone(), hi.num().clone())
    };
    let g_inv = g.adjugate();
    let target = apply_moebius(&g, lo);

    // Ceiling continued-fraction digits of the target.
    let mut digits = Vec::new();
    let mut t = target.num().clone();
    let mut u = target.den().clone();
    while !u.is_zero() {
        let k = Integer::div_ceil(&t, &u);
        let next = &k * &u - &t;
        digits.push(k);
        t = std::mem::replace(&mut u, next);
    }

    // Convergents by the same three-term recurrence; all but the last are
    // the inserted vertices.
    let mut chain = Vec::new();
    let mut prev = (BigInt::one(), BigInt::zero());
    let mut cur = (digits[0].clone(), BigInt::one());
    for k in &digits[1..] {
        let next = (k * &cur.0 - &prev.0, k * &cur.1 - &prev.1);
        chain.push(apply_moebius(
            &g_inv,
            &ExtendedRational::from_homogeneous(cur.0.clone(), cur.1.clone())
                .expect("convergents are canonical"),
        ));
        prev = cur;
        cur = next;
    }
    debug_assert_eq!(cur.0, *target.num());
    debug_assert_eq!(cur.1, *target.den());
    Ok(chain)
}

/// Embeds both polygons of a pair into one Farey N-gon: the m-gon is opened
/// at its final vertex 0/1, the n-gon is spliced in between, and the two
/// junction gaps are filled with minimal mediant chains.
pub fn merge_into_common_polygon(pair: &PolygonPair) -> FareyPolygon {
    let v = pair.ngon.vertices();
    let vp = pair.mgon.vertices();
    let m = vp.len();
    let n = v.len();

    let mut vertices: Vec<ExtendedRational> = vp[..m - 1].to_vec();
    vertices.extend(mediant_chain(&vp[m - 2], &v[0]).expect("separated endpoints admit a chain"));
    vertices.extend(v.iter().cloned());
    vertices
        .extend(mediant_chain(&v[n - 1], &vp[m - 1]).expect("separated endpoints admit a chain"));
    vertices.push(vp[m - 1].clone());

    FareyPolygon::new(vertices).expect("gap-filled vertex list is a Farey polygon")
}
