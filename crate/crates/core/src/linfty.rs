//! Derived-bracket (curved) L∞-algebras whose Maurer-Cartan elements are
//! deformation maps.
//!
//! The graded space is `F = ⊕_n Hom(S^{⊗n+1}, T)` with `(S,T) = (A,A')` on the
//! right side and `(A',A)` on the left side; a cochain of arity `n+1` has
//! degree `n`. Brackets are `l_k(x_1..x_k) = P[..[[Δ,x_1]_G,x_2]_G..,x_k]_G`
//! with `Δ = Ω` and `P` the restriction to the block of `F`. They are graded
//! symmetric of degree 1.

use crate::cochain::{gerstenhaber, koszul_sign, MultilinearMap, Signature, Space};
use crate::deformation::Side;
use crate::error::{Error, Result};
use crate::quasi_twilled::{total_product, validate, QuasiTwilledAlgebra};
use crate::scalar::Scalar;

/// Domain and codomain labels of the cochains in `F` on one side.
pub fn block_spaces(side: Side) -> (Space, Space) {
    side.map_spaces()
}

/// `Hom(S^{⊗arity}, T)` for the side's `(S, T)`.
pub fn block_signature(side: Side, arity: usize) -> Signature {
    let (s, t) = block_spaces(side);
    Signature::uniform(s, arity, t)
}

/// Ambient algebra `L` of total cochains, `Δ = Ω`, and the block `F`.
#[derive(Debug, Clone)]
pub struct VData {
    q: QuasiTwilledAlgebra,
    side: Side,
    delta: MultilinearMap,
}

impl VData {
    pub fn new(q: &QuasiTwilledAlgebra, side: Side) -> Result<Self> {
        if let Some(w) = validate(q).witness() {
            return Err(Error::InvalidQta(format!("[Omega,Omega]_G nonzero at {w}")));
        }
        Ok(Self { q: q.clone(), side, delta: total_product(q) })
    }

    pub fn side(&self) -> Side {
        self.side
    }

    pub fn algebra(&self) -> &QuasiTwilledAlgebra {
        &self.q
    }

    pub fn delta(&self) -> &MultilinearMap {
        &self.delta
    }

    /// `P`: restriction of a total cochain to the block of `F`.
    pub fn project(&self, total: &MultilinearMap) -> MultilinearMap {
        total.project(&block_signature(self.side, total.arity())).expect("total cochain")
    }

    /// Whether `f` lies in the abelian block `F`.
    pub fn check_in_block(&self, f: &MultilinearMap) -> Result<()> {
        if f.arity() == 0 || f.signature() != block_signature(self.side, f.arity()) || f.split() != self.q.split() {
            return Err(Error::Block(format!(
                "{} is not in Hom({}^n, {})",
                f.signature(),
                block_spaces(self.side).0,
                block_spaces(self.side).1
            )));
        }
        Ok(())
    }

    /// Highest `k` with `l_k` possibly nonzero.
    pub fn top_bracket(&self) -> usize {
        match self.side {
            Side::Right => 2,
            Side::Left => 3,
        }
    }

    /// The residuals behind the V-data axioms: `[Δ,Δ]_G`, `P(Δ)` on the
    /// left side, and `[f,g]_G` for the given block cochains.
    pub fn axiom_residuals(&self, samples: &[MultilinearMap]) -> Result<Vec<(String, MultilinearMap)>> {
        let mut out = vec![("[Delta,Delta]_G".to_string(), gerstenhaber(&self.delta, &self.delta)?)];
        if self.side == Side::Left {
            out.push(("P(Delta)".to_string(), self.project(&self.delta)));
        }
        for (i, f) in samples.iter().enumerate() {
            self.check_in_block(f)?;
            for (j, g) in samples.iter().enumerate().skip(i) {
                out.push((format!("[f{i},f{j}]_G"), gerstenhaber(&f.lift(), &g.lift())?));
            }
        }
        Ok(out)
    }
}

pub fn vdata(q: &QuasiTwilledAlgebra, side: Side) -> Result<VData> {
    VData::new(q, side)
}

/// Arity of `l_k(x_1..x_k)`: degree `Σ|x_i| + 1`.
fn output_arity(args: &[MultilinearMap]) -> usize {
    2 + args.iter().map(|a| a.arity() - 1).sum::<usize>()
}

/// `P([..[[Δ, x_1]_G, x_2]_G .., x_k]_G)`, computed for any `k`.
pub fn derived_bracket(v: &VData, args: &[MultilinearMap]) -> Result<MultilinearMap> {
    for a in args {
        v.check_in_block(a)?;
    }
    let mut acc = v.delta.clone();
    for a in args {
        acc = gerstenhaber(&acc, &a.lift())?;
    }
    Ok(v.project(&acc))
}

/// The L∞-structure of a V-data, optionally twisted by a Maurer-Cartan
/// element `x`: `l_k^x(y..) = Σ_n 1/n! l_{k+n}(x,..,x, y..)`.
#[derive(Debug, Clone)]
pub struct CurvedLInftyStructure {
    vdata: VData,
    twist: Option<MultilinearMap>,
}

impl CurvedLInftyStructure {
    pub fn new(vdata: VData) -> Self {
        Self { vdata, twist: None }
    }

    pub fn from_algebra(q: &QuasiTwilledAlgebra, side: Side) -> Result<Self> {
        Ok(Self::new(VData::new(q, side)?))
    }

    pub fn vdata(&self) -> &VData {
        &self.vdata
    }

    pub fn side(&self) -> Side {
        self.vdata.side
    }

    pub fn twist_element(&self) -> Option<&MultilinearMap> {
        self.twist.as_ref()
    }

    pub fn top_bracket(&self) -> usize {
        self.vdata.top_bracket()
    }

    fn zero_output(&self, args: &[MultilinearMap]) -> MultilinearMap {
        MultilinearMap::zero(self.vdata.q.split(), &block_signature(self.side(), output_arity(args)))
    }

    fn base_bracket(&self, args: &[MultilinearMap]) -> Result<MultilinearMap> {
        if args.len() > self.top_bracket() {
            for a in args {
                self.vdata.check_in_block(a)?;
            }
            return Ok(self.zero_output(args));
        }
        derived_bracket(&self.vdata, args)
    }

    /// `l_k(args)` with `k = args.len()`.
    pub fn bracket(&self, args: &[MultilinearMap]) -> Result<MultilinearMap> {
        let Some(x) = &self.twist else {
            return self.base_bracket(args);
        };
        let mut acc = self.zero_output(args);
        let mut factorial = Scalar::from_integer(1.into());
        let mut full: Vec<MultilinearMap> = args.to_vec();
        for n in 0..=self.top_bracket().saturating_sub(args.len()) {
            if n > 0 {
                factorial *= Scalar::from_integer((n as i64).into());
                full.insert(0, x.clone());
            }
            let term = self.base_bracket(&full)?;
            acc += &term.scaled(&(Scalar::from_integer(1.into()) / &factorial));
        }
        for a in args {
            self.vdata.check_in_block(a)?;
        }
        Ok(acc)
    }
}

/// `Σ_k 1/k! l_k(x,..,x)` for a degree-0 cochain `x`.
pub fn mc_residual(s: &CurvedLInftyStructure, x: &MultilinearMap) -> Result<MultilinearMap> {
    if x.arity() != 1 {
        return Err(Error::Degree(x.arity()));
    }
    s.vdata.check_in_block(x)?;
    let mut acc = s.bracket(&[])?;
    let mut factorial = Scalar::from_integer(1.into());
    let mut args = Vec::new();
    for k in 1..=s.top_bracket() {
        factorial *= Scalar::from_integer((k as i64).into());
        args.push(x.clone());
        acc += &s.bracket(&args)?.scaled(&(Scalar::from_integer(1.into()) / &factorial));
    }
    Ok(acc)
}

/// The structure twisted by a Maurer-Cartan element `x`; its curvature is zero.
pub fn twist_linfty(s: &CurvedLInftyStructure, x: &MultilinearMap) -> Result<CurvedLInftyStructure> {
    if !mc_residual(s, x)?.is_zero() {
        return Err(Error::NotMaurerCartan);
    }
    let x = match &s.twist {
        Some(prev) => prev + x,
        None => x.clone(),
    };
    Ok(CurvedLInftyStructure { vdata: s.vdata.clone(), twist: Some(x) })
}

/// All `(i, n-i)` unshuffles of `0..n` as permutations.
pub fn unshuffles(n: usize, i: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut chosen = Vec::with_capacity(i);
    fn rec(n: usize, i: usize, start: usize, chosen: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if chosen.len() == i {
            let mut sigma = chosen.clone();
            sigma.extend((0..n).filter(|k| !chosen.contains(k)));
            out.push(sigma);
            return;
        }
        for k in start..n {
            chosen.push(k);
            rec(n, i, k + 1, chosen, out);
            chosen.pop();
        }
    }
    rec(n, i, 0, &mut chosen, &mut out);
    out
}

/// `Σ_{i=0}^{n} Σ_{σ ∈ S(i,n-i)} ε(σ) l_{n-i+1}(l_i(x_σ(1)..x_σ(i)), x_σ(i+1)..x_σ(n))`.
pub fn jacobi_residual(s: &CurvedLInftyStructure, args: &[MultilinearMap]) -> Result<MultilinearMap> {
    let n = args.len();
    let degrees: Vec<i64> = args.iter().map(MultilinearMap::degree).collect();
    let mut acc: Option<MultilinearMap> = None;
    for i in 0..=n {
        for sigma in unshuffles(n, i) {
            let eps = koszul_sign(&sigma, &degrees)?;
            let inner_args: Vec<MultilinearMap> = sigma[..i].iter().map(|&k| args[k].clone()).collect();
            let inner = s.bracket(&inner_args)?;
            if inner.is_zero() {
                continue;
            }
            let mut outer_args = vec![inner];
            outer_args.extend(sigma[i..].iter().map(|&k| args[k].clone()));
            let mut term = s.bracket(&outer_args)?;
            if eps < 0 {
                term = -&term;
            }
            match &mut acc {
                Some(a) => *a += &term,
                None => acc = Some(term),
            }
        }
    }
    Ok(acc
        .unwrap_or_else(|| MultilinearMap::zero(s.vdata.q.split(), &block_signature(s.side(), output_arity(args) + 1))))
}

/// `⟦f, g⟧ = (-1)^{m-1} l_2(f, g)` for `f` of arity `m`.
pub fn suspended_bracket(s: &CurvedLInftyStructure, f: &MultilinearMap, g: &MultilinearMap) -> Result<MultilinearMap> {
    let l2 = s.bracket(&[f.clone(), g.clone()])?;
    Ok(if f.arity().is_multiple_of(2) { -&l2 } else { l2 })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{regular_representation, AssociativeAlgebra};
    use crate::deformation::{left_residual, linear_map, right_residual};
    use crate::linalg::ExactMatrix;
    use crate::quasi_twilled::{build_standard, Ingredients};
    use crate::scalar::int;

    fn modified(lambda: i64) -> QuasiTwilledAlgebra {
        build_standard(&Ingredients::ModifiedDirectSum {
            algebra: AssociativeAlgebra::one_dim(Space::A),
            lambda: int(lambda),
        })
        .unwrap()
    }

    fn scalar(q: &QuasiTwilledAlgebra, side: Side, c: i64) -> MultilinearMap {
        linear_map(q.split(), side, &ExactMatrix::from_rows(vec![vec![int(c)]]).unwrap()).unwrap()
    }

    #[test]
    fn unshuffle_counts() {
        assert_eq!(unshuffles(4, 2).len(), 6);
        assert_eq!(unshuffles(3, 0), vec![vec![0, 1, 2]]);
        assert_eq!(unshuffles(3, 1)[1], vec![1, 0, 2]);
    }

    #[test]
    fn right_mc_matches_residual() {
        let q = modified(4);
        let s = CurvedLInftyStructure::from_algebra(&q, Side::Right).unwrap();
        assert_eq!(s.bracket(&[]).unwrap(), *q.theta());
        for c in [-2, 1, 2, 3] {
            let d = scalar(&q, Side::Right, c);
            assert_eq!(mc_residual(&s, &d).unwrap(), right_residual(&q, &d).unwrap());
        }
        assert_eq!(mc_residual(&s, &scalar(&q, Side::Right, 1)).unwrap().get(&[0, 0], 0), &int(3));
    }

    #[test]
    fn left_mc_matches_residual() {
        let q = build_standard(&Ingredients::Semidirect {
            rep: regular_representation(&AssociativeAlgebra::one_dim(Space::A)),
        })
        .unwrap();
        let s = CurvedLInftyStructure::from_algebra(&q, Side::Left).unwrap();
        assert!(s.bracket(&[]).unwrap().is_zero());
        let b = scalar(&q, Side::Left, 1);
        assert_eq!(mc_residual(&s, &b).unwrap().get(&[0, 0], 0), &int(-1));
        assert_eq!(mc_residual(&s, &b).unwrap(), left_residual(&q, &b).unwrap());
    }

    #[test]
    fn degree_and_block_errors() {
        let q = modified(4);
        let s = CurvedLInftyStructure::from_algebra(&q, Side::Right).unwrap();
        let wrong = scalar(&q, Side::Left, 1);
        assert!(matches!(derived_bracket(s.vdata(), &[wrong]), Err(Error::Block(_))));
        let two = MultilinearMap::zero(q.split(), &block_signature(Side::Right, 2));
        assert_eq!(mc_residual(&s, &two).unwrap_err(), Error::Degree(2));
        assert_eq!(twist_linfty(&s, &scalar(&q, Side::Right, 1)).unwrap_err(), Error::NotMaurerCartan);
    }

    #[test]
    fn jacobi_low_arity() {
        let q = modified(4);
        let s = CurvedLInftyStructure::from_algebra(&q, Side::Right).unwrap();
        assert!(jacobi_residual(&s, &[]).unwrap().is_zero());
        let f = MultilinearMap::from_fn(q.split(), &block_signature(Side::Right, 2), |t, _| int(t[0] as i64 + 2));
        assert!(jacobi_residual(&s, std::slice::from_ref(&f)).unwrap().is_zero());
        assert!(jacobi_residual(&s, &[f.clone(), scalar(&q, Side::Right, 3)]).unwrap().is_zero());
    }

    #[test]
    fn twisted_structure_has_no_curvature() {
        let q = modified(4);
        let s = CurvedLInftyStructure::from_algebra(&q, Side::Right).unwrap();
        let t = twist_linfty(&s, &scalar(&q, Side::Right, 2)).unwrap();
        assert!(t.bracket(&[]).unwrap().is_zero());
        // D + D' = -2 is again a deformation map, D' = -4
        assert!(mc_residual(&t, &scalar(&q, Side::Right, -4)).unwrap().is_zero());
        assert!(!mc_residual(&t, &scalar(&q, Side::Right, 1)).unwrap().is_zero());
    }
}
