//! Right deformation maps `D: A → A'` and left deformation maps `B: A' → A`
//! of a quasi-twilled algebra, twisting, duality and the induced structures.
//!
//! Linear maps are arity-1 [`MultilinearMap`]s over the algebra's splitting.

use std::fmt;
use std::str::FromStr;

use crate::algebra::{AssociativeAlgebra, RepresentationPair};
use crate::cochain::{MultilinearMap, Signature, Space, Split};
use crate::error::{Error, Result};
use crate::linalg::ExactMatrix;
use crate::quasi_twilled::{total_product, BuilderKind, Component, QuasiTwilledAlgebra};
use crate::scalar::Scalar;

use Space::{Aprime as P, A};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Side {
    /// `D: A → A'`
    Right,
    /// `B: A' → A`
    Left,
}

impl Side {
    pub fn name(self) -> &'static str {
        match self {
            Side::Right => "right",
            Side::Left => "left",
        }
    }

    /// Domain and codomain of a deformation map on this side.
    pub fn map_spaces(self) -> (Space, Space) {
        match self {
            Side::Right => (A, P),
            Side::Left => (P, A),
        }
    }
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Side {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "right" => Ok(Side::Right),
            "left" => Ok(Side::Left),
            other => Err(Error::Dimension(format!("unknown side {other:?}"))),
        }
    }
}

/// A linear map between the summands, from a matrix whose column `j` is the
/// image of the `j`-th basis vector of the domain.
pub fn linear_map(split: Split, side: Side, m: &ExactMatrix) -> Result<MultilinearMap> {
    let (from, to) = side.map_spaces();
    MultilinearMap::from_matrix(split, from, to, m)
}

fn check_map(q: &QuasiTwilledAlgebra, f: &MultilinearMap, side: Side) -> Result<()> {
    let (from, to) = side.map_spaces();
    let sig = Signature::new(&[from], to);
    if f.signature() != sig || f.split() != q.split() {
        return Err(Error::Dimension(format!(
            "{side} deformation maps are {sig} over {:?}, got {} over {:?}",
            q.split(),
            f.signature(),
            f.split()
        )));
    }
    Ok(())
}

fn ins(f: &MultilinearMap, slot: usize, g: &MultilinearMap) -> MultilinearMap {
    f.insert(slot, g).expect("signatures checked")
}

/// `f(g(·), ·)`-style substitution of a linear map into both slots.
fn both(f: &MultilinearMap, g: &MultilinearMap) -> MultilinearMap {
    ins(&ins(f, 0, g), 1, g)
}

/// `ρ(x,Dy) + μ(Dx,y) + β(Dx,Dy) + θ(x,y) − D(π(x,y) + ξ(x,Dy) + η(Dx,y))`.
pub fn right_residual(q: &QuasiTwilledAlgebra, d: &MultilinearMap) -> Result<MultilinearMap> {
    check_map(q, d, Side::Right)?;
    let inner = &(q.pi() + &ins(q.xi(), 1, d)) + &ins(q.eta(), 0, d);
    let outer = &(&(&ins(q.rho(), 1, d) + &ins(q.mu(), 0, d)) + &both(q.beta(), d)) + q.theta();
    Ok(&outer - &ins(d, 0, &inner))
}

/// `A'`-part minus `D` of the `A`-part of `Ω((x,Dx),(y,Dy))`, computed by
/// evaluating the total product on graph vectors.
pub fn graph_residual(q: &QuasiTwilledAlgebra, d: &MultilinearMap) -> Result<MultilinearMap> {
    check_map(q, d, Side::Right)?;
    let split = q.split();
    let (na, np) = (split.a, split.aprime);
    let omega = total_product(q);
    let graph = |i: usize| -> Vec<Scalar> {
        let mut v = vec![Scalar::default(); na + np];
        v[i] = Scalar::from_integer(1.into());
        v[na..].clone_from_slice(d.eval_basis(&[i]));
        v
    };
    let graphs: Vec<Vec<Scalar>> = (0..na).map(graph).collect();
    let mut out = MultilinearMap::zero(split, &Signature::new(&[A, A], P));
    for i in 0..na {
        for j in 0..na {
            let w = omega.apply(&[&graphs[i], &graphs[j]])?;
            let dw = d.apply(&[&w[..na]])?;
            for k in 0..np {
                out.set(&[i, j], k, &w[na + k] - &dw[k]);
            }
        }
    }
    Ok(out)
}

/// `π(Bu,Bv) + ξ(Bu,v) + η(u,Bv) − B(β(u,v) + ρ(Bu,v) + μ(u,Bv) + θ(Bu,Bv))`.
pub fn left_residual(q: &QuasiTwilledAlgebra, b: &MultilinearMap) -> Result<MultilinearMap> {
    check_map(q, b, Side::Left)?;
    let inner = &(&(q.beta() + &ins(q.rho(), 0, b)) + &ins(q.mu(), 1, b)) + &both(q.theta(), b);
    let outer = &(&both(q.pi(), b) + &ins(q.xi(), 0, b)) + &ins(q.eta(), 1, b);
    Ok(&outer - &ins(b, 0, &inner))
}

/// Components of a twisted product. `gamma: A'⊗A'→A` is zero for right
/// twists; the twisted algebra is quasi-twilled iff it vanishes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwistResult {
    pub side: Side,
    pub pi: MultilinearMap,
    pub xi: MultilinearMap,
    pub eta: MultilinearMap,
    pub beta: MultilinearMap,
    pub rho: MultilinearMap,
    pub mu: MultilinearMap,
    pub theta: MultilinearMap,
    pub gamma: MultilinearMap,
}

impl TwistResult {
    pub fn component(&self, c: Component) -> &MultilinearMap {
        match c {
            Component::Pi => &self.pi,
            Component::Xi => &self.xi,
            Component::Eta => &self.eta,
            Component::Beta => &self.beta,
            Component::Rho => &self.rho,
            Component::Mu => &self.mu,
            Component::Theta => &self.theta,
        }
    }

    /// Sum of the lifts of all eight components.
    pub fn total(&self) -> MultilinearMap {
        [&self.pi, &self.xi, &self.eta, &self.beta, &self.rho, &self.mu, &self.theta, &self.gamma]
            .iter()
            .map(|m| m.lift())
            .reduce(|a, b| &a + &b)
            .expect("eight components")
    }

    /// The deformation residual carried by the twist: `θ^D` or `γ^B`.
    pub fn residual(&self) -> &MultilinearMap {
        match self.side {
            Side::Right => &self.theta,
            Side::Left => &self.gamma,
        }
    }

    /// The twisted algebra, when `gamma` vanishes.
    pub fn quasi_twilled(&self) -> Result<QuasiTwilledAlgebra> {
        if let Some(w) = self.gamma.witness() {
            return Err(Error::InvalidQta(format!("gamma nonzero at {w}")));
        }
        QuasiTwilledAlgebra::from_components(self.pi.split(), Component::ALL.map(|c| self.component(c).clone()))
    }
}

/// Closed component formulas for `Ω^D = e^{-D̂} ∘ Ω ∘ (e^{D̂} ⊗ e^{D̂})`.
pub fn twist_right(q: &QuasiTwilledAlgebra, d: &MultilinearMap) -> Result<TwistResult> {
    check_map(q, d, Side::Right)?;
    let pi = &(q.pi() + &ins(q.eta(), 0, d)) + &ins(q.xi(), 1, d);
    let rho = &(q.rho() + &ins(q.beta(), 0, d)) - &ins(d, 0, q.xi());
    let mu = &(q.mu() + &ins(q.beta(), 1, d)) - &ins(d, 0, q.eta());
    Ok(TwistResult {
        side: Side::Right,
        pi,
        xi: q.xi().clone(),
        eta: q.eta().clone(),
        beta: q.beta().clone(),
        rho,
        mu,
        theta: right_residual(q, d)?,
        gamma: MultilinearMap::zero(q.split(), &Signature::new(&[P, P], A)),
    })
}

/// Closed component formulas for `Ω^B = e^{-B̂} ∘ Ω ∘ (e^{B̂} ⊗ e^{B̂})`.
pub fn twist_left(q: &QuasiTwilledAlgebra, b: &MultilinearMap) -> Result<TwistResult> {
    check_map(q, b, Side::Left)?;
    let pi = q.pi() - &ins(b, 0, q.theta());
    let xi = &(&(q.xi() + &ins(q.pi(), 1, b)) - &ins(b, 0, q.rho())) - &ins(b, 0, &ins(q.theta(), 1, b));
    let eta = &(&(q.eta() + &ins(q.pi(), 0, b)) - &ins(b, 0, q.mu())) - &ins(b, 0, &ins(q.theta(), 0, b));
    let beta = &(&(q.beta() + &ins(q.rho(), 0, b)) + &ins(q.mu(), 1, b)) + &both(q.theta(), b);
    let rho = q.rho() + &ins(q.theta(), 1, b);
    let mu = q.mu() + &ins(q.theta(), 0, b);
    Ok(TwistResult {
        side: Side::Left,
        pi,
        xi,
        eta,
        beta,
        rho,
        mu,
        theta: q.theta().clone(),
        gamma: left_residual(q, b)?,
    })
}

/// `(Id − f̂) ∘ Ω ∘ ((Id + f̂) ⊗ (Id + f̂))` for a binary map `Ω` on `A ⊕ A'`
/// and a linear map `f` between the summands.
pub fn conjugate_total(omega: &MultilinearMap, f: &MultilinearMap) -> Result<MultilinearMap> {
    if f.arity() != 1 || f.domain()[0] == f.codomain() || f.codomain() == Space::Total {
        return Err(Error::Dimension(format!("expected A->A' or A'->A, got {}", f.signature())));
    }
    let id = MultilinearMap::identity(omega.split(), Space::Total);
    let fhat = f.lift();
    let exp = &id + &fhat;
    let exp_neg = &id - &fhat;
    let inner = omega.insert(0, &exp)?.insert(1, &exp)?;
    exp_neg.insert(0, &inner)
}

/// Twisting by conjugation with `e^{f̂}`; `f` is `A→A'` for the right side
/// and `A'→A` for the left side.
pub fn conjugation_twist(q: &QuasiTwilledAlgebra, f: &MultilinearMap, side: Side) -> Result<MultilinearMap> {
    check_map(q, f, side)?;
    conjugate_total(&total_product(q), f)
}

/// Whether `D` is a right deformation map exactly when `D⁻¹` is a left one.
pub fn duality_check(q: &QuasiTwilledAlgebra, d: &MultilinearMap) -> Result<bool> {
    check_map(q, d, Side::Right)?;
    let split = q.split();
    if split.a != split.aprime {
        return Err(Error::Dimension(format!("duality needs dim A = dim A', got {} and {}", split.a, split.aprime)));
    }
    let inv = d.to_matrix()?.inverse().ok_or(Error::SingularMap)?;
    let b = linear_map(split, Side::Left, &inv)?;
    Ok(right_residual(q, d)?.is_zero() == left_residual(q, &b)?.is_zero())
}

fn require_zero(residual: &MultilinearMap, side: Side) -> Result<()> {
    match residual.witness() {
        Some(w) => Err(Error::NotDeformationMap { side: side.name(), witness: w.to_string() }),
        None => Ok(()),
    }
}

/// `(A, π^D)` and its representation `(A'; ρ^D, μ^D)`.
pub fn induced_right_structures(
    q: &QuasiTwilledAlgebra,
    d: &MultilinearMap,
) -> Result<(AssociativeAlgebra, RepresentationPair)> {
    let t = twist_right(q, d)?;
    require_zero(&t.theta, Side::Right)?;
    let alg = AssociativeAlgebra::new(t.pi)?;
    let rep = RepresentationPair::new(alg.clone(), t.rho, t.mu)?;
    Ok((alg, rep))
}

/// `(A', β^B)` and its representation `(A; η^B, ξ^B)`.
pub fn induced_left_structures(
    q: &QuasiTwilledAlgebra,
    b: &MultilinearMap,
) -> Result<(AssociativeAlgebra, RepresentationPair)> {
    let t = twist_left(q, b)?;
    require_zero(&t.gamma, Side::Left)?;
    let alg = AssociativeAlgebra::new(t.beta)?;
    let rep = RepresentationPair::new(alg.clone(), t.eta, t.xi)?;
    Ok((alg, rep))
}

pub const NOT_A_DEFORMATION_MAP: &str = "not a deformation map";

/// Name of the operator a deformation map specializes to for the builder
/// that produced `q`.
pub fn classify_operator(q: &QuasiTwilledAlgebra, f: &MultilinearMap, side: Side) -> Result<&'static str> {
    let kind = q.kind().ok_or(Error::UnknownKind)?;
    let residual = match side {
        Side::Right => right_residual(q, f)?,
        Side::Left => left_residual(q, f)?,
    };
    if !residual.is_zero() {
        return Ok(NOT_A_DEFORMATION_MAP);
    }
    Ok(match (side, kind) {
        (Side::Right, BuilderKind::ModifiedDirectSum) => "modified Rota-Baxter operator of weight λ",
        (Side::Right, BuilderKind::Semidirect) => "derivation",
        (Side::Right, BuilderKind::SemidirectAssoc) => "crossed homomorphism",
        (Side::Right, BuilderKind::DirectProduct) => "associative algebra homomorphism",
        (Side::Left, BuilderKind::Semidirect) => "relative Rota-Baxter operator of weight 0",
        (Side::Left, BuilderKind::AbelianExtension) => "twisted Rota-Baxter operator",
        (Side::Left, BuilderKind::Reynolds) => "Reynolds operator",
        (Side::Left, BuilderKind::MatchedPair) => "deformation map of a matched pair",
        (Side::Right, _) => "right deformation map",
        (Side::Left, _) => "left deformation map",
    })
}
