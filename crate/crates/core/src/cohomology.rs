//! Cochain complexes of deformation maps.
//!
//! `C^n = Hom(S^{⊗n}, T)` with `(S,T) = (A,A')` for a right map `D` and
//! `(A',A)` for a left map `B`; `C^0 = T`. Basis order of `C^n`: domain basis
//! tuples in lexicographic order (first slot most significant), crossed with
//! the codomain index, i.e. the coefficient layout of [`MultilinearMap`].

use crate::cochain::{MultilinearMap, Signature};
use crate::deformation::{twist_left, twist_right, Side, TwistResult};
use crate::error::{Error, Result};
use crate::linalg::{row_reduce, ExactMatrix};
use crate::linfty::{block_signature, twist_linfty, CurvedLInftyStructure};
use crate::quasi_twilled::QuasiTwilledAlgebra;
use crate::scalar::one;

/// Hard ceiling on cochain degrees.
pub const MAX_DEGREE: usize = 5;

fn twisted(q: &QuasiTwilledAlgebra, map: &MultilinearMap, side: Side) -> Result<TwistResult> {
    let t = match side {
        Side::Right => twist_right(q, map)?,
        Side::Left => twist_left(q, map)?,
    };
    if let Some(w) = t.residual().witness() {
        return Err(Error::NotDeformationMap { side: side.name(), witness: w.to_string() });
    }
    Ok(t)
}

fn ins(f: &MultilinearMap, slot: usize, g: &MultilinearMap) -> MultilinearMap {
    f.insert(slot, g).expect("cochain signatures")
}

fn signed(sign_odd: bool, m: MultilinearMap) -> MultilinearMap {
    if sign_odd {
        -&m
    } else {
        m
    }
}

/// `ρ^D(x_1)f(..) + Σ(-1)^i f(.., π^D(x_i,x_{i+1}), ..) + (-1)^{n+1} μ^D(x_{n+1})f(..)`
/// on the right side and the same pattern with `η^B, β^B, ξ^B` on the left.
fn compact(t: &TwistResult, f: &MultilinearMap) -> MultilinearMap {
    let n = f.arity();
    let (left_act, product, right_act) = match t.side {
        Side::Right => (&t.rho, &t.pi, &t.mu),
        Side::Left => (&t.eta, &t.beta, &t.xi),
    };
    let mut out = ins(left_act, 1, f);
    for i in 1..=n {
        out += &signed(i % 2 == 1, ins(f, i - 1, product));
    }
    out += &signed((n + 1) % 2 == 1, ins(right_act, 0, f));
    out
}

/// The same coboundary written with the original components and the map.
fn expanded(q: &QuasiTwilledAlgebra, m: &MultilinearMap, side: Side, f: &MultilinearMap) -> MultilinearMap {
    let n = f.arity();
    let mut out;
    let mut middle: Vec<MultilinearMap> = Vec::new();
    let last;
    match side {
        Side::Right => {
            let d = m;
            out = &(&ins(q.rho(), 1, f) + &ins(&ins(q.beta(), 0, d), 1, f)) - &ins(d, 0, &ins(q.xi(), 1, f));
            middle.push(q.pi().clone());
            middle.push(ins(q.eta(), 0, d));
            middle.push(ins(q.xi(), 1, d));
            last = &(&ins(q.mu(), 0, f) + &ins(&ins(q.beta(), 1, d), 0, f)) - &ins(d, 0, &ins(q.eta(), 0, f));
        }
        Side::Left => {
            let b = m;
            out = &(&(&ins(q.eta(), 1, f) + &ins(&ins(q.pi(), 0, b), 1, f)) - &ins(b, 0, &ins(q.mu(), 1, f)))
                - &ins(b, 0, &ins(&ins(q.theta(), 0, b), 1, f));
            middle.push(q.beta().clone());
            middle.push(ins(q.rho(), 0, b));
            middle.push(ins(q.mu(), 1, b));
            middle.push(ins(&ins(q.theta(), 0, b), 1, b));
            last = &(&(&ins(q.xi(), 0, f) + &ins(&ins(q.pi(), 1, b), 0, f)) - &ins(b, 0, &ins(q.rho(), 0, f)))
                - &ins(b, 0, &ins(&ins(q.theta(), 1, b), 0, f));
        }
    }
    for i in 1..=n {
        for g in &middle {
            out += &signed(i % 2 == 1, ins(f, i - 1, g));
        }
    }
    out += &signed((n + 1) % 2 == 1, last);
    out
}

fn basis_cochain(sig: &Signature, split: crate::Split, j: usize) -> MultilinearMap {
    let mut coeffs = MultilinearMap::zero(split, sig).into_coeffs();
    coeffs[j] = one();
    MultilinearMap::from_coeffs(split, sig, coeffs).expect("basis cochain")
}

fn check_degree(n: usize) -> Result<()> {
    if n > MAX_DEGREE {
        return Err(Error::Dimension(format!("cochain degree {n} exceeds the cap {MAX_DEGREE}")));
    }
    Ok(())
}

/// `d f` for a cochain `f ∈ C^n`, via the twisted components; also evaluates
/// the expanded form and fails with `Inconsistent` if they differ.
pub fn coboundary(
    q: &QuasiTwilledAlgebra,
    map: &MultilinearMap,
    side: Side,
    f: &MultilinearMap,
) -> Result<MultilinearMap> {
    let t = twisted(q, map, side)?;
    coboundary_with(&t, q, map, f)
}

fn coboundary_with(
    t: &TwistResult,
    q: &QuasiTwilledAlgebra,
    map: &MultilinearMap,
    f: &MultilinearMap,
) -> Result<MultilinearMap> {
    let side = t.side;
    if f.signature() != block_signature(side, f.arity()) || f.split() != q.split() {
        return Err(Error::Dimension(format!("{} is not a {side} cochain", f.signature())));
    }
    let c = compact(t, f);
    let e = expanded(q, map, side, f);
    if c != e {
        return Err(Error::Inconsistent(format!(
            "compact and expanded coboundaries differ on a degree-{} cochain",
            f.arity()
        )));
    }
    Ok(c)
}

/// Matrix of `d: C^n → C^{n+1}`; column `j` is `d` of the `j`-th basis cochain.
pub fn coboundary_matrix(q: &QuasiTwilledAlgebra, map: &MultilinearMap, side: Side, n: usize) -> Result<ExactMatrix> {
    check_degree(n)?;
    let t = twisted(q, map, side)?;
    coboundary_matrix_with(&t, q, map, n)
}

fn coboundary_matrix_with(
    t: &TwistResult,
    q: &QuasiTwilledAlgebra,
    map: &MultilinearMap,
    n: usize,
) -> Result<ExactMatrix> {
    let split = q.split();
    let sig = block_signature(t.side, n);
    let dim = MultilinearMap::zero(split, &sig).coeffs().len();
    let rows = MultilinearMap::zero(split, &block_signature(t.side, n + 1)).coeffs().len();
    let columns: Vec<_> = (0..dim)
        .map(|j| coboundary_with(t, q, map, &basis_cochain(&sig, split, j)).map(MultilinearMap::into_coeffs))
        .collect::<Result<_>>()?;
    ExactMatrix::from_columns(rows, &columns)
}

/// Coboundary matrices `d_0 .. d_N` of a deformation map.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CochainComplex {
    pub side: Side,
    pub map: MultilinearMap,
    /// `dims[n] = dim C^n` for `n = 0..=N+1`.
    pub dims: Vec<usize>,
    /// `differentials[n]: C^n → C^{n+1}`.
    pub differentials: Vec<ExactMatrix>,
}

impl CochainComplex {
    /// Builds `d_0 .. d_top` and checks `d_{n+1} d_n = 0`.
    pub fn new(q: &QuasiTwilledAlgebra, map: &MultilinearMap, side: Side, top: usize) -> Result<Self> {
        check_degree(top)?;
        let t = twisted(q, map, side)?;
        let split = q.split();
        let dims =
            (0..=top + 1).map(|n| MultilinearMap::zero(split, &block_signature(side, n)).coeffs().len()).collect();
        let differentials: Vec<ExactMatrix> =
            (0..=top).map(|n| coboundary_matrix_with(&t, q, map, n)).collect::<Result<_>>()?;
        for (n, pair) in differentials.windows(2).enumerate() {
            if !pair[1].mul(&pair[0])?.is_zero() {
                return Err(Error::Inconsistent(format!("d_{} d_{n} is nonzero", n + 1)));
            }
        }
        Ok(Self { side, map: map.clone(), dims, differentials })
    }

    /// `dim H^n = dim ker d_n − rank d_{n−1}` for `n = 0..=top`.
    pub fn cohomology_dims(&self) -> Vec<usize> {
        let ranks: Vec<usize> = self.differentials.iter().map(ExactMatrix::rank).collect();
        (0..self.differentials.len())
            .map(|n| {
                let kernel = self.dims[n] - ranks[n];
                kernel - if n == 0 { 0 } else { ranks[n - 1] }
            })
            .collect()
    }

    /// Cocycle and coboundary spaces at degree `n` as column bases.
    pub fn cycles_and_boundaries(&self, n: usize) -> Result<(ExactMatrix, ExactMatrix)> {
        let d = self.differentials.get(n).ok_or_else(|| Error::Dimension(format!("degree {n} not computed")))?;
        let z = ExactMatrix::from_columns(self.dims[n], &row_reduce(d).kernel_basis)?;
        let b = if n == 0 {
            ExactMatrix::zeros(self.dims[0], 0)
        } else {
            ExactMatrix::from_columns(self.dims[n], &row_reduce(&self.differentials[n - 1]).image_basis)?
        };
        Ok((z, b))
    }
}

pub fn cohomology_dims(q: &QuasiTwilledAlgebra, map: &MultilinearMap, side: Side, max_n: usize) -> Result<Vec<usize>> {
    Ok(CochainComplex::new(q, map, side, max_n)?.cohomology_dims())
}

/// Whether `l_1^{map}(f) = (-1)^{m-1} d f` for `f` of arity `m ≥ 1`.
pub fn l1_vs_d(q: &QuasiTwilledAlgebra, map: &MultilinearMap, side: Side, f: &MultilinearMap) -> Result<bool> {
    let d = coboundary(q, map, side, f)?;
    let s = CurvedLInftyStructure::from_algebra(q, side)?;
    let t = twist_linfty(&s, map)?;
    let l1 = t.bracket(std::slice::from_ref(f))?;
    let expected = signed(f.arity().is_multiple_of(2), d);
    Ok(l1 == expected)
}
