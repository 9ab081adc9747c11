//! Multilinear maps between tensor powers of the labeled spaces `A`, `A'`
//! and `A ⊕ A'`, with lifts, insertion (circle) products and the
//! Gerstenhaber bracket.
//!
//! Storage is dense. Coefficients are laid out with the domain basis tuple in
//! row-major order (first slot most significant) followed by the codomain
//! index, so `coeffs[tuple_index * codim + k]` is the coefficient of the
//! `k`-th codomain basis vector in the image of the tuple. The same order is
//! used for cochain-space bases in coboundary matrices.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::linalg::ExactMatrix;
use crate::scalar::{one, zero, Scalar};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Space {
    A,
    Aprime,
    /// `A ⊕ A'`, basis = the `A` basis followed by the `A'` basis.
    Total,
}

impl Space {
    /// Whether a slot of this space can be restricted to `other`.
    pub fn contains(self, other: Space) -> bool {
        self == other || self == Space::Total
    }

    fn offset(self, split: Split) -> usize {
        match self {
            Space::Aprime => split.a,
            _ => 0,
        }
    }
}

impl fmt::Display for Space {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Space::A => "A",
            Space::Aprime => "A'",
            Space::Total => "T",
        })
    }
}

/// Dimensions of the two summands.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Split {
    pub a: usize,
    pub aprime: usize,
}

impl Split {
    pub fn new(a: usize, aprime: usize) -> Self {
        Self { a, aprime }
    }

    pub fn dim(&self, s: Space) -> usize {
        match s {
            Space::A => self.a,
            Space::Aprime => self.aprime,
            Space::Total => self.a + self.aprime,
        }
    }
}

/// Domain labels plus codomain label of a multilinear map.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Signature {
    pub domain: Vec<Space>,
    pub codomain: Space,
}

impl Signature {
    pub fn new(domain: &[Space], codomain: Space) -> Self {
        Self { domain: domain.to_vec(), codomain }
    }

    /// `n` copies of `from` into `to`.
    pub fn uniform(from: Space, n: usize, to: Space) -> Self {
        Self { domain: vec![from; n], codomain: to }
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let dom: Vec<String> = self.domain.iter().map(ToString::to_string).collect();
        write!(f, "{}->{}", dom.join(","), self.codomain)
    }
}

/// Row-major index of a basis tuple.
pub fn tuple_index(dims: &[usize], tuple: &[usize]) -> usize {
    tuple.iter().zip(dims).fold(0, |acc, (&t, &d)| acc * d + t)
}

/// Inverse of [`tuple_index`].
pub fn index_tuple(dims: &[usize], mut index: usize) -> Vec<usize> {
    let mut out = vec![0; dims.len()];
    for (slot, &d) in dims.iter().enumerate().rev() {
        out[slot] = index % d;
        index /= d;
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultilinearMap {
    split: Split,
    domain: Vec<Space>,
    codomain: Space,
    coeffs: Vec<Scalar>,
}

/// A nonzero coefficient located by domain tuple and codomain index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub tuple: Vec<usize>,
    pub output: usize,
    pub value: Scalar,
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?} -> e{}: {}", self.tuple, self.output, self.value)
    }
}

impl MultilinearMap {
    pub fn zero(split: Split, sig: &Signature) -> Self {
        let size = sig.domain.iter().map(|&s| split.dim(s)).product::<usize>() * split.dim(sig.codomain);
        Self { split, domain: sig.domain.clone(), codomain: sig.codomain, coeffs: vec![zero(); size] }
    }

    /// Builds a map from a coefficient function `(tuple, output) -> value`.
    pub fn from_fn(split: Split, sig: &Signature, mut f: impl FnMut(&[usize], usize) -> Scalar) -> Self {
        let mut m = Self::zero(split, sig);
        let dims = m.dims();
        let codim = m.codim();
        for t in 0..m.tuple_count() {
            let tuple = index_tuple(&dims, t);
            for k in 0..codim {
                m.coeffs[t * codim + k] = f(&tuple, k);
            }
        }
        m
    }

    pub fn from_coeffs(split: Split, sig: &Signature, coeffs: Vec<Scalar>) -> Result<Self> {
        let m = Self::zero(split, sig);
        if coeffs.len() != m.coeffs.len() {
            return Err(Error::Dimension(format!("{sig} needs {} coefficients, got {}", m.coeffs.len(), coeffs.len())));
        }
        Ok(Self { coeffs, ..m })
    }

    pub fn identity(split: Split, space: Space) -> Self {
        Self::from_fn(split, &Signature::new(&[space], space), |t, k| if t[0] == k { one() } else { zero() })
    }

    /// A linear map from a matrix whose column `j` is the image of the `j`-th
    /// basis vector of `from`.
    pub fn from_matrix(split: Split, from: Space, to: Space, m: &ExactMatrix) -> Result<Self> {
        if m.rows() != split.dim(to) || m.cols() != split.dim(from) {
            return Err(Error::Dimension(format!(
                "matrix {}x{} does not fit {from}->{to} ({}x{})",
                m.rows(),
                m.cols(),
                split.dim(to),
                split.dim(from)
            )));
        }
        Ok(Self::from_fn(split, &Signature::new(&[from], to), |t, k| m.get(k, t[0]).clone()))
    }

    /// Matrix of an arity-1 map (column `j` = image of basis vector `j`).
    pub fn to_matrix(&self) -> Result<ExactMatrix> {
        if self.arity() != 1 {
            return Err(Error::Arity(format!("to_matrix needs arity 1, got {}", self.arity())));
        }
        let mut m = ExactMatrix::zeros(self.codim(), self.dims()[0]);
        for (t, k, v) in self.nonzeros() {
            m.set(k, t, v.clone());
        }
        Ok(m)
    }

    /// Binary map from a structure-constant table: `table[i][j][k]` is the
    /// coefficient of the `k`-th codomain basis vector in the image of the
    /// pair of basis vectors `(i, j)`.
    pub fn from_binary_table(split: Split, sig: &Signature, table: &[Vec<Vec<Scalar>>]) -> Result<Self> {
        if sig.domain.len() != 2 {
            return Err(Error::Arity(format!("{sig} is not binary")));
        }
        let (d0, d1, dc) = (split.dim(sig.domain[0]), split.dim(sig.domain[1]), split.dim(sig.codomain));
        let shape_ok =
            table.len() == d0 && table.iter().all(|row| row.len() == d1 && row.iter().all(|v| v.len() == dc));
        if !shape_ok {
            return Err(Error::Dimension(format!("table shape does not match {sig} ({d0}x{d1}x{dc})")));
        }
        Ok(Self::from_fn(split, sig, |t, k| table[t[0]][t[1]][k].clone()))
    }

    /// Inverse of [`MultilinearMap::from_binary_table`].
    pub fn to_binary_table(&self) -> Result<Vec<Vec<Vec<Scalar>>>> {
        if self.arity() != 2 {
            return Err(Error::Arity(format!("{} is not binary", self.signature())));
        }
        let d = self.dims();
        Ok((0..d[0]).map(|i| (0..d[1]).map(|j| self.eval_basis(&[i, j]).to_vec()).collect()).collect())
    }

    /// The same coefficient array read under new labels and splitting; each
    /// slot must keep its dimension.
    pub fn reinterpret(&self, split: Split, sig: &Signature) -> Result<Self> {
        let same_shape = sig.domain.len() == self.arity()
            && split.dim(sig.codomain) == self.codim()
            && sig.domain.iter().zip(self.dims()).all(|(&s, d)| split.dim(s) == d);
        if !same_shape {
            return Err(Error::Dimension(format!("cannot read {} as {sig} under {split:?}", self.signature())));
        }
        Ok(Self { split, domain: sig.domain.clone(), codomain: sig.codomain, coeffs: self.coeffs.clone() })
    }

    /// Moves the map into another splitting with the same dimensions on the
    /// labels it uses.
    pub fn with_split(&self, split: Split) -> Result<Self> {
        self.reinterpret(split, &self.signature())
    }

    pub fn split(&self) -> Split {
        self.split
    }

    pub fn domain(&self) -> &[Space] {
        &self.domain
    }

    pub fn codomain(&self) -> Space {
        self.codomain
    }

    pub fn signature(&self) -> Signature {
        Signature { domain: self.domain.clone(), codomain: self.codomain }
    }

    pub fn arity(&self) -> usize {
        self.domain.len()
    }

    /// Degree in the graded Lie algebra: arity `n + 1` has degree `n`.
    pub fn degree(&self) -> i64 {
        self.arity() as i64 - 1
    }

    pub fn dims(&self) -> Vec<usize> {
        self.domain.iter().map(|&s| self.split.dim(s)).collect()
    }

    pub fn codim(&self) -> usize {
        self.split.dim(self.codomain)
    }

    pub fn tuple_count(&self) -> usize {
        self.dims().iter().product()
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Scalar> {
        self.coeffs
    }

    pub fn get(&self, tuple: &[usize], output: usize) -> &Scalar {
        &self.coeffs[tuple_index(&self.dims(), tuple) * self.codim() + output]
    }

    pub fn set(&mut self, tuple: &[usize], output: usize, value: Scalar) {
        let idx = tuple_index(&self.dims(), tuple) * self.codim() + output;
        self.coeffs[idx] = value;
    }

    /// Image of a basis tuple as a coefficient vector.
    pub fn eval_basis(&self, tuple: &[usize]) -> &[Scalar] {
        let c = self.codim();
        let t = tuple_index(&self.dims(), tuple);
        &self.coeffs[t * c..(t + 1) * c]
    }

    /// Evaluation on arbitrary vectors by multilinear expansion.
    pub fn apply(&self, args: &[&[Scalar]]) -> Result<Vec<Scalar>> {
        let dims = self.dims();
        if args.len() != dims.len() || args.iter().zip(&dims).any(|(a, &d)| a.len() != d) {
            return Err(Error::Dimension(format!("arguments do not match {}", self.signature())));
        }
        let codim = self.codim();
        let mut out = vec![zero(); codim];
        for t in 0..self.tuple_count() {
            let tuple = index_tuple(&dims, t);
            let mut w = one();
            for (slot, &i) in tuple.iter().enumerate() {
                if args[slot][i].is_zero() {
                    w = zero();
                    break;
                }
                w *= &args[slot][i];
            }
            if w.is_zero() {
                continue;
            }
            for (o, c) in out.iter_mut().zip(&self.coeffs[t * codim..(t + 1) * codim]) {
                if !c.is_zero() {
                    *o += &w * c;
                }
            }
        }
        Ok(out)
    }

    /// Iterates `(tuple_index, output, coefficient)` over nonzero entries.
    pub fn nonzeros(&self) -> impl Iterator<Item = (usize, usize, &Scalar)> {
        let codim = self.codim().max(1);
        self.coeffs.iter().enumerate().filter(|(_, v)| !v.is_zero()).map(move |(i, v)| (i / codim, i % codim, v))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// First nonzero coefficient in storage order.
    pub fn witness(&self) -> Option<Witness> {
        let dims = self.dims();
        self.nonzeros().next().map(|(t, k, v)| Witness { tuple: index_tuple(&dims, t), output: k, value: v.clone() })
    }

    pub fn scaled(&self, c: &Scalar) -> Self {
        let mut m = self.clone();
        for v in &mut m.coeffs {
            *v *= c;
        }
        m
    }

    fn check_same_signature(&self, other: &Self) {
        assert!(
            self.split == other.split && self.domain == other.domain && self.codomain == other.codomain,
            "signature mismatch: {} vs {}",
            self.signature(),
            other.signature()
        );
    }

    /// `self` with `g` substituted into slot `slot`:
    /// `(x_1..x_{slot}, y_1..y_n, ...) ↦ f(x_1.., g(y_1..y_n), ...)`.
    pub fn insert(&self, slot: usize, g: &MultilinearMap) -> Result<Self> {
        if slot >= self.arity() {
            return Err(Error::Arity(format!("slot {slot} out of range for arity {}", self.arity())));
        }
        if self.split != g.split {
            return Err(Error::Dimension("maps over different splittings".into()));
        }
        if self.domain[slot] != g.codomain {
            return Err(Error::Dimension(format!(
                "cannot insert {} into slot {slot} of {}",
                g.signature(),
                self.signature()
            )));
        }
        let fd = self.dims();
        let k_dim = fd[slot];
        let post: usize = fd[slot + 1..].iter().product();
        let g_count = g.tuple_count();

        let mut by_output: Vec<Vec<(usize, &Scalar)>> = vec![Vec::new(); k_dim];
        for (t, k, v) in g.nonzeros() {
            by_output[k].push((t, v));
        }

        let mut domain = self.domain[..slot].to_vec();
        domain.extend_from_slice(&g.domain);
        domain.extend_from_slice(&self.domain[slot + 1..]);
        let mut out = Self::zero(self.split, &Signature { domain, codomain: self.codomain });
        let codim = self.codim();
        for (fi, o, c) in self.nonzeros() {
            let pre = fi / (k_dim * post);
            let k = (fi / post) % k_dim;
            let rest = fi % post;
            for &(t, gc) in &by_output[k] {
                let ri = (pre * g_count + t) * post + rest;
                out.coeffs[ri * codim + o] += c * gc;
            }
        }
        Ok(out)
    }

    /// Extension to `A ⊕ A'` in every slot and the codomain, zero outside the
    /// block the map is defined on.
    pub fn lift(&self) -> Self {
        let split = self.split;
        let mut out = Self::zero(split, &Signature::uniform(Space::Total, self.arity(), Space::Total));
        let dims = self.dims();
        let total_dims = out.dims();
        let total_codim = out.codim();
        let out_offset = self.codomain.offset(split);
        for (t, k, v) in self.nonzeros() {
            let local = index_tuple(&dims, t);
            let global: Vec<usize> = local.iter().zip(&self.domain).map(|(&i, s)| i + s.offset(split)).collect();
            let gi = tuple_index(&total_dims, &global);
            out.coeffs[gi * total_codim + k + out_offset] = v.clone();
        }
        out
    }

    /// Restriction to the block `sig`; each requested label must be contained
    /// in the corresponding label of `self`.
    pub fn project(&self, sig: &Signature) -> Result<Self> {
        if sig.domain.len() != self.arity() {
            return Err(Error::Arity(format!("cannot project arity {} onto {sig}", self.arity())));
        }
        let fits =
            self.codomain.contains(sig.codomain) && self.domain.iter().zip(&sig.domain).all(|(s, r)| s.contains(*r));
        if !fits {
            return Err(Error::Dimension(format!("{sig} is not a block of {}", self.signature())));
        }
        let split = self.split;
        let shift = |outer: Space, inner: Space| {
            if outer == inner {
                0
            } else {
                inner.offset(split)
            }
        };
        let dims = self.dims();
        let codim = self.codim();
        let out_shift = shift(self.codomain, sig.codomain);
        Ok(Self::from_fn(split, sig, |t, k| {
            let global: Vec<usize> = t
                .iter()
                .zip(self.domain.iter().zip(&sig.domain))
                .map(|(&i, (&outer, &inner))| i + shift(outer, inner))
                .collect();
            self.coeffs[tuple_index(&dims, &global) * codim + k + out_shift].clone()
        }))
    }

    /// Label shared by every slot and the codomain, if any.
    fn uniform_space(&self) -> Option<Space> {
        self.domain.iter().all(|&s| s == self.codomain).then_some(self.codomain)
    }
}

impl fmt::Display for MultilinearMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} [", self.signature())?;
        let dims = self.dims();
        let mut first = true;
        for (t, k, v) in self.nonzeros() {
            if !first {
                f.write_str(", ")?;
            }
            first = false;
            write!(f, "{:?}->{}: {}", index_tuple(&dims, t), k, v)?;
        }
        f.write_str("]")
    }
}

impl AddAssign<&MultilinearMap> for MultilinearMap {
    /// Panics if the signatures differ.
    fn add_assign(&mut self, rhs: &MultilinearMap) {
        self.check_same_signature(rhs);
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            if !b.is_zero() {
                *a += b;
            }
        }
    }
}

impl Add for &MultilinearMap {
    type Output = MultilinearMap;
    fn add(self, rhs: &MultilinearMap) -> MultilinearMap {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub for &MultilinearMap {
    type Output = MultilinearMap;
    fn sub(self, rhs: &MultilinearMap) -> MultilinearMap {
        let mut out = self.clone();
        out += &-rhs;
        out
    }
}

impl Neg for &MultilinearMap {
    type Output = MultilinearMap;
    fn neg(self) -> MultilinearMap {
        let mut out = self.clone();
        for v in &mut out.coeffs {
            *v = -std::mem::take(v);
        }
        out
    }
}

impl Mul<&MultilinearMap> for &Scalar {
    type Output = MultilinearMap;
    fn mul(self, rhs: &MultilinearMap) -> MultilinearMap {
        rhs.scaled(self)
    }
}

fn check_uniform_pair(f: &MultilinearMap, g: &MultilinearMap) -> Result<()> {
    match (f.uniform_space(), g.uniform_space()) {
        (Some(a), Some(b)) if a == b && f.arity() >= 1 && g.arity() >= 1 => Ok(()),
        _ => Err(Error::Arity(format!(
            "circle product needs maps on one space of arity >= 1, got {} and {}",
            f.signature(),
            g.signature()
        ))),
    }
}

/// `f ∘ g = Σ_i (-1)^{(i-1)(n-1)} f(x_1, .., g(x_i, .., x_{i+n-1}), ..)`.
pub fn circle(f: &MultilinearMap, g: &MultilinearMap) -> Result<MultilinearMap> {
    check_uniform_pair(f, g)?;
    let n = g.arity() as i64;
    let mut acc: Option<MultilinearMap> = None;
    for i in 0..f.arity() {
        let mut term = f.insert(i, g)?;
        if (i as i64 * (n - 1)) % 2 != 0 {
            term = -&term;
        }
        match &mut acc {
            Some(a) => *a += &term,
            None => acc = Some(term),
        }
    }
    Ok(acc.expect("arity >= 1"))
}

/// The two halves of `f ∘ g` for binary maps:
/// `(f(g(x_1,x_2),x_3), f(x_1,g(x_2,x_3)))`.
pub fn circle_parts(f: &MultilinearMap, g: &MultilinearMap) -> Result<(MultilinearMap, MultilinearMap)> {
    if f.arity() != 2 || g.arity() != 2 {
        return Err(Error::Arity(format!(
            "circle_parts needs binary maps, got arities {} and {}",
            f.arity(),
            g.arity()
        )));
    }
    check_uniform_pair(f, g)?;
    Ok((f.insert(0, g)?, f.insert(1, g)?))
}

/// `[f, g]_G = f ∘ g - (-1)^{(m-1)(n-1)} g ∘ f`.
pub fn gerstenhaber(f: &MultilinearMap, g: &MultilinearMap) -> Result<MultilinearMap> {
    let fg = circle(f, g)?;
    let gf = circle(g, f)?;
    if (f.degree() * g.degree()) % 2 == 0 {
        Ok(&fg - &gf)
    } else {
        Ok(&fg + &gf)
    }
}

/// Koszul sign of the rearrangement placing item `sigma[p]` at position `p`,
/// where item `i` has degree `degrees[i]`.
///
/// Each inverted pair of items with degrees `p, q` contributes `(-1)^{pq}`.
pub fn koszul_sign(sigma: &[usize], degrees: &[i64]) -> Result<i64> {
    let n = sigma.len();
    if degrees.len() != n {
        return Err(Error::Arity(format!("permutation of {n} items with {} degrees", degrees.len())));
    }
    let mut seen = vec![false; n];
    for &s in sigma {
        if s >= n || std::mem::replace(&mut seen[s], true) {
            return Err(Error::Arity(format!("{sigma:?} is not a permutation")));
        }
    }
    let mut exponent = 0i64;
    for p in 0..n {
        for q in p + 1..n {
            if sigma[p] > sigma[q] {
                exponent += degrees[sigma[p]] * degrees[sigma[q]];
            }
        }
    }
    Ok(if exponent.rem_euclid(2) == 0 { 1 } else { -1 })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::int;

    fn one_dim() -> (Split, MultilinearMap) {
        let split = Split::new(1, 1);
        let pi = MultilinearMap::from_fn(split, &Signature::uniform(Space::A, 2, Space::A), |_, _| int(1));
        (split, pi)
    }

    #[test]
    fn lift_of_product_on_one_dim() {
        let (_, pi) = one_dim();
        let hat = pi.lift();
        assert_eq!(hat.eval_basis(&[0, 0]), &[int(1), int(0)]);
        for t in [[0, 1], [1, 0], [1, 1]] {
            assert!(hat.eval_basis(&t).iter().all(Zero::is_zero));
        }
    }

    #[test]
    fn lift_of_mixed_block_is_exact() {
        let split = Split::new(1, 1);
        let sig = Signature::new(&[Space::Aprime, Space::A], Space::Aprime);
        let f = MultilinearMap::from_fn(split, &sig, |_, _| int(5));
        let hat = f.lift();
        for a in 0..2 {
            for b in 0..2 {
                let expected = if (a, b) == (1, 0) { vec![int(0), int(5)] } else { vec![int(0), int(0)] };
                assert_eq!(hat.eval_basis(&[a, b]), expected.as_slice());
            }
        }
        assert_eq!(hat.project(&sig).unwrap(), f);
    }

    #[test]
    fn zero_lifts_to_zero() {
        let split = Split::new(2, 1);
        let z = MultilinearMap::zero(split, &Signature::new(&[Space::A, Space::Aprime], Space::A));
        assert!(z.lift().is_zero());
    }

    #[test]
    fn circle_of_one_dim_product_vanishes() {
        let (_, pi) = one_dim();
        assert!(circle(&pi, &pi).unwrap().is_zero());
        let (p1, p2) = circle_parts(&pi, &pi).unwrap();
        assert_eq!(p1.eval_basis(&[0, 0, 0]), &[int(1)]);
        assert_eq!(p2.eval_basis(&[0, 0, 0]), &[int(1)]);
    }

    #[test]
    fn circle_with_identity_counts_slots() {
        let split = Split::new(2, 0);
        let f = MultilinearMap::from_fn(split, &Signature::uniform(Space::A, 3, Space::A), |t, k| {
            int((t[0] + 2 * t[1] + 3 * t[2] + k) as i64 - 2)
        });
        let id = MultilinearMap::identity(split, Space::A);
        assert_eq!(circle(&f, &id).unwrap(), f.scaled(&int(3)));
    }

    #[test]
    fn arity_one_after_binary_is_composition() {
        let split = Split::new(2, 0);
        let f = MultilinearMap::from_fn(split, &Signature::uniform(Space::A, 1, Space::A), |t, k| {
            int((t[0] * 2 + k) as i64)
        });
        let g = MultilinearMap::from_fn(split, &Signature::uniform(Space::A, 2, Space::A), |t, k| {
            int((t[0] + t[1] * k) as i64 - 1)
        });
        let fg = circle(&f, &g).unwrap();
        for a in 0..2 {
            for b in 0..2 {
                let inner = g.eval_basis(&[a, b]).to_vec();
                assert_eq!(fg.eval_basis(&[a, b]), f.apply(&[&inner]).unwrap().as_slice());
            }
        }
    }

    #[test]
    fn circle_parts_needs_binary() {
        let split = Split::new(1, 0);
        let id = MultilinearMap::identity(split, Space::A);
        assert!(matches!(circle_parts(&id, &id), Err(Error::Arity(_))));
    }

    #[test]
    fn koszul_examples() {
        assert_eq!(koszul_sign(&[0, 1, 2], &[1, 1, 1]).unwrap(), 1);
        assert_eq!(koszul_sign(&[1, 0], &[1, 1]).unwrap(), -1);
        assert_eq!(koszul_sign(&[1, 0], &[2, 1]).unwrap(), 1);
        assert!(koszul_sign(&[0, 0], &[1, 1]).is_err());
        assert!(koszul_sign(&[0], &[1, 1]).is_err());
    }

    #[test]
    fn project_rejects_foreign_block() {
        let (_, pi) = one_dim();
        assert!(pi.project(&Signature::uniform(Space::Aprime, 2, Space::A)).is_err());
    }
}
