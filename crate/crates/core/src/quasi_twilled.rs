//! Quasi-twilled associative algebras `(𝒜, A, A')`: the seven product
//! components, the structure equations equivalent to `[Ω, Ω]_G = 0`, and
//! builders for the standard constructions.

use std::fmt;

use crate::algebra::{
    check_associative, check_associative_representation, check_cocycle, check_matched_pair, check_representation,
    regular_representation, AssociativeAlgebra, AssociativeRepresentation, Cocycle2, MatchedPairData,
    RepresentationPair,
};
use crate::cochain::{circle, circle_parts, gerstenhaber, MultilinearMap, Signature, Space, Split};
use crate::error::{Error, Result};
use crate::scalar::{frac, Scalar};

use Space::{Aprime as P, A};

/// The seven components of the product on `A ⊕ A'`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Component {
    Pi,
    Xi,
    Eta,
    Beta,
    Rho,
    Mu,
    Theta,
}

impl Component {
    pub const ALL: [Component; 7] = [
        Component::Pi,
        Component::Xi,
        Component::Eta,
        Component::Beta,
        Component::Rho,
        Component::Mu,
        Component::Theta,
    ];

    pub fn signature(self) -> Signature {
        let (d, c): (&[Space], Space) = match self {
            Component::Pi => (&[A, A], A),
            Component::Xi => (&[A, P], A),
            Component::Eta => (&[P, A], A),
            Component::Beta => (&[P, P], P),
            Component::Rho => (&[A, P], P),
            Component::Mu => (&[P, A], P),
            Component::Theta => (&[A, A], P),
        };
        Signature::new(d, c)
    }

    pub fn name(self) -> &'static str {
        match self {
            Component::Pi => "pi",
            Component::Xi => "xi",
            Component::Eta => "eta",
            Component::Beta => "beta",
            Component::Rho => "rho",
            Component::Mu => "mu",
            Component::Theta => "theta",
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|c| c.name() == name)
    }
}

/// Which standard construction produced an algebra.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BuilderKind {
    ModifiedDirectSum,
    Semidirect,
    SemidirectAssoc,
    DirectProduct,
    AbelianExtension,
    Reynolds,
    MatchedPair,
}

impl BuilderKind {
    pub const ALL: [BuilderKind; 7] = [
        BuilderKind::ModifiedDirectSum,
        BuilderKind::Semidirect,
        BuilderKind::SemidirectAssoc,
        BuilderKind::DirectProduct,
        BuilderKind::AbelianExtension,
        BuilderKind::Reynolds,
        BuilderKind::MatchedPair,
    ];

    pub fn name(self) -> &'static str {
        match self {
            BuilderKind::ModifiedDirectSum => "modified_direct_sum",
            BuilderKind::Semidirect => "semidirect",
            BuilderKind::SemidirectAssoc => "semidirect_assoc",
            BuilderKind::DirectProduct => "direct_product",
            BuilderKind::AbelianExtension => "abelian_extension",
            BuilderKind::Reynolds => "reynolds",
            BuilderKind::MatchedPair => "matched_pair",
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|k| k.name() == name)
    }
}

impl fmt::Display for BuilderKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Inputs of [`build_standard`].
#[derive(Debug, Clone)]
pub enum Ingredients {
    /// `(x,u)·(y,v) = (xv + uy, λxy + uv)` on `A ⊕ A`.
    ModifiedDirectSum {
        algebra: AssociativeAlgebra,
        lambda: Scalar,
    },
    Semidirect {
        rep: RepresentationPair,
    },
    SemidirectAssoc {
        rep: AssociativeRepresentation,
    },
    DirectProduct {
        a: AssociativeAlgebra,
        aprime: AssociativeAlgebra,
    },
    AbelianExtension {
        cocycle: Cocycle2,
    },
    /// Abelian extension of the regular representation by `ω(x,y) = xy`.
    Reynolds {
        algebra: AssociativeAlgebra,
    },
    MatchedPair {
        data: MatchedPairData,
    },
}

impl Ingredients {
    pub fn kind(&self) -> BuilderKind {
        match self {
            Ingredients::ModifiedDirectSum { .. } => BuilderKind::ModifiedDirectSum,
            Ingredients::Semidirect { .. } => BuilderKind::Semidirect,
            Ingredients::SemidirectAssoc { .. } => BuilderKind::SemidirectAssoc,
            Ingredients::DirectProduct { .. } => BuilderKind::DirectProduct,
            Ingredients::AbelianExtension { .. } => BuilderKind::AbelianExtension,
            Ingredients::Reynolds { .. } => BuilderKind::Reynolds,
            Ingredients::MatchedPair { .. } => BuilderKind::MatchedPair,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Provenance {
    pub kind: BuilderKind,
    /// Weight of the modified direct sum.
    pub lambda: Option<Scalar>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuasiTwilledAlgebra {
    split: Split,
    components: [MultilinearMap; 7],
    provenance: Option<Provenance>,
}

impl QuasiTwilledAlgebra {
    /// Assembles an algebra from its components in [`Component::ALL`] order.
    /// Validity is not checked; see [`validate`].
    pub fn from_components(split: Split, components: [MultilinearMap; 7]) -> Result<Self> {
        for (c, m) in Component::ALL.iter().zip(&components) {
            if m.signature() != c.signature() || m.split() != split {
                return Err(Error::Dimension(format!(
                    "component {} must be {} over {split:?}, got {} over {:?}",
                    c.name(),
                    c.signature(),
                    m.signature(),
                    m.split()
                )));
            }
        }
        Ok(Self { split, components, provenance: None })
    }

    /// All components zero.
    pub fn zero(split: Split) -> Self {
        Self {
            split,
            components: Component::ALL.map(|c| MultilinearMap::zero(split, &c.signature())),
            provenance: None,
        }
    }

    /// Decomposes a product on `A ⊕ A'`; fails if it has an `A'⊗A'→A` part.
    pub fn from_total(total: &MultilinearMap) -> Result<Self> {
        let split = total.split();
        let stray = total.project(&Signature::new(&[P, P], A))?;
        if let Some(w) = stray.witness() {
            return Err(Error::InvalidQta(format!("A' is not a subalgebra: A',A'->A nonzero at {w}")));
        }
        let mut components = Vec::with_capacity(7);
        for c in Component::ALL {
            components.push(total.project(&c.signature())?);
        }
        Self::from_components(split, components.try_into().expect("seven components"))
    }

    pub fn split(&self) -> Split {
        self.split
    }

    pub fn component(&self, c: Component) -> &MultilinearMap {
        &self.components[c as usize]
    }

    pub fn set_component(&mut self, c: Component, m: MultilinearMap) -> Result<()> {
        if m.signature() != c.signature() || m.split() != self.split {
            return Err(Error::Dimension(format!("component {} has the wrong shape", c.name())));
        }
        self.components[c as usize] = m;
        Ok(())
    }

    pub fn pi(&self) -> &MultilinearMap {
        self.component(Component::Pi)
    }
    pub fn xi(&self) -> &MultilinearMap {
        self.component(Component::Xi)
    }
    pub fn eta(&self) -> &MultilinearMap {
        self.component(Component::Eta)
    }
    pub fn beta(&self) -> &MultilinearMap {
        self.component(Component::Beta)
    }
    pub fn rho(&self) -> &MultilinearMap {
        self.component(Component::Rho)
    }
    pub fn mu(&self) -> &MultilinearMap {
        self.component(Component::Mu)
    }
    pub fn theta(&self) -> &MultilinearMap {
        self.component(Component::Theta)
    }

    pub fn provenance(&self) -> Option<&Provenance> {
        self.provenance.as_ref()
    }

    pub fn kind(&self) -> Option<BuilderKind> {
        self.provenance.as_ref().map(|p| p.kind)
    }

    /// Drops the builder provenance, e.g. after editing components by hand.
    pub fn forget_provenance(mut self) -> Self {
        self.provenance = None;
        self
    }

    pub fn with_provenance(mut self, provenance: Provenance) -> Self {
        self.provenance = Some(provenance);
        self
    }
}

/// `Ω = π̂ + ξ̂ + η̂ + β̂ + ρ̂ + μ̂ + θ̂` as one binary map on `A ⊕ A'`.
pub fn total_product(q: &QuasiTwilledAlgebra) -> MultilinearMap {
    q.components.iter().map(MultilinearMap::lift).reduce(|a, b| &a + &b).expect("seven components")
}

/// `½[Ω, Ω]_G`; zero iff `q` is a quasi-twilled associative algebra.
pub fn validate(q: &QuasiTwilledAlgebra) -> MultilinearMap {
    let omega = total_product(q);
    gerstenhaber(&omega, &omega).expect("total binary map").scaled(&frac(1, 2))
}

#[derive(Debug, Clone, Copy)]
enum Op {
    /// `½[f, f]_G`
    HalfBracket,
    Bracket,
    Circle,
    /// `(f ∘ g)_1`
    First,
    /// `(f ∘ g)_2`
    Second,
}

struct Term(i64, Op, Component, Component);

struct Row {
    label: &'static str,
    domain: [Space; 3],
    codomain: Space,
    terms: &'static [Term],
}

use Component::{Beta as B, Eta as E, Mu as M, Pi as Pp, Rho as R, Theta as Th, Xi as X};
use Op::{Bracket as Br, Circle as Ci, First as F1, HalfBracket as Hb, Second as F2};

/// The structure equations, one per block of `Hom(⊗³(A⊕A'), A⊕A')`. The
/// `A',A',A'->A` block has no terms because there is no `A'⊗A'→A` component.
const ROWS: [Row; 16] = [
    Row {
        label: "1/2[pi,pi] - (xi o theta)_2 + (eta o theta)_1",
        domain: [A, A, A],
        codomain: A,
        terms: &[Term(1, Hb, Pp, Pp), Term(-1, F2, X, Th), Term(1, F1, E, Th)],
    },
    Row {
        label: "(rho o pi)_1 + 1/2[rho,rho] - (theta o xi)_2 + (beta o theta)_1",
        domain: [A, A, P],
        codomain: P,
        terms: &[Term(1, F1, R, Pp), Term(1, Hb, R, R), Term(-1, F2, Th, X), Term(1, F1, B, Th)],
    },
    Row {
        label: "-(mu o pi)_2 + 1/2[mu,mu] + (theta o eta)_1 - (beta o theta)_2",
        domain: [P, A, A],
        codomain: P,
        terms: &[Term(-1, F2, M, Pp), Term(1, Hb, M, M), Term(1, F1, Th, E), Term(-1, F2, B, Th)],
    },
    Row {
        label: "(pi o xi)_1 - (pi o eta)_2 + (eta o rho)_1 - (xi o mu)_2",
        domain: [A, P, A],
        codomain: A,
        terms: &[Term(1, F1, Pp, X), Term(-1, F2, Pp, E), Term(1, F1, E, R), Term(-1, F2, X, M)],
    },
    Row {
        label: "-(pi o xi)_2 + (xi o pi)_1 - (xi o rho)_2",
        domain: [A, A, P],
        codomain: A,
        terms: &[Term(-1, F2, Pp, X), Term(1, F1, X, Pp), Term(-1, F2, X, R)],
    },
    Row {
        label: "(pi o eta)_1 - (eta o pi)_2 + (eta o mu)_1",
        domain: [P, A, A],
        codomain: A,
        terms: &[Term(1, F1, Pp, E), Term(-1, F2, E, Pp), Term(1, F1, E, M)],
    },
    Row {
        label: "theta o pi - (rho o theta)_2 + (mu o theta)_1",
        domain: [A, A, A],
        codomain: P,
        terms: &[Term(1, Ci, Th, Pp), Term(-1, F2, R, Th), Term(1, F1, M, Th)],
    },
    Row {
        label: "[rho,mu] + (theta o xi)_1 - (theta o eta)_2",
        domain: [A, P, A],
        codomain: P,
        terms: &[Term(1, Br, R, M), Term(1, F1, Th, X), Term(-1, F2, Th, E)],
    },
    Row {
        label: "(rho o xi)_1 + (beta o rho)_1 - (rho o beta)_2",
        domain: [A, P, P],
        codomain: P,
        terms: &[Term(1, F1, R, X), Term(1, F1, B, R), Term(-1, F2, R, B)],
    },
    Row {
        label: "(rho o eta)_1 - (beta o rho)_2 - (mu o xi)_2 + (beta o mu)_1",
        domain: [P, A, P],
        codomain: P,
        terms: &[Term(1, F1, R, E), Term(-1, F2, B, R), Term(-1, F2, M, X), Term(1, F1, B, M)],
    },
    Row {
        label: "-(mu o eta)_2 + (mu o beta)_1 - (beta o mu)_2",
        domain: [P, P, A],
        codomain: P,
        terms: &[Term(-1, F2, M, E), Term(1, F1, M, B), Term(-1, F2, B, M)],
    },
    Row {
        label: "1/2[xi,xi] - (xi o beta)_2",
        domain: [A, P, P],
        codomain: A,
        terms: &[Term(1, Hb, X, X), Term(-1, F2, X, B)],
    },
    Row { label: "[xi,eta]", domain: [P, A, P], codomain: A, terms: &[Term(1, Br, X, E)] },
    Row {
        label: "1/2[eta,eta] + (eta o beta)_1",
        domain: [P, P, A],
        codomain: A,
        terms: &[Term(1, Hb, E, E), Term(1, F1, E, B)],
    },
    Row { label: "[beta,beta]", domain: [P, P, P], codomain: P, terms: &[Term(1, Br, B, B)] },
    Row { label: "0 (no A'(x)A'->A component)", domain: [P, P, P], codomain: A, terms: &[] },
];

/// One evaluated structure equation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructureResidual {
    pub label: &'static str,
    pub block: Signature,
    /// The left-hand side restricted to `block`.
    pub map: MultilinearMap,
    /// The left-hand side as a map on `A ⊕ A'` before restriction.
    pub total: MultilinearMap,
}

/// Evaluates the sixteen structure equations on lifted components.
///
/// Each row is supported on its own block. Row `[beta,beta]` is twice the
/// corresponding block of [`validate`]; every other row equals its block.
pub fn structure_residuals(q: &QuasiTwilledAlgebra) -> Vec<StructureResidual> {
    let lifts: Vec<MultilinearMap> = q.components.iter().map(MultilinearMap::lift).collect();
    let lift = |c: Component| &lifts[c as usize];
    let total_sig = Signature::uniform(Space::Total, 3, Space::Total);
    ROWS.iter()
        .map(|row| {
            let mut total = MultilinearMap::zero(q.split, &total_sig);
            for Term(coef, op, f, g) in row.terms {
                let (f, g) = (lift(*f), lift(*g));
                let value = match op {
                    Op::HalfBracket => gerstenhaber(f, g).map(|m| m.scaled(&frac(1, 2))),
                    Op::Bracket => gerstenhaber(f, g),
                    Op::Circle => circle(f, g),
                    Op::First => circle_parts(f, g).map(|p| p.0),
                    Op::Second => circle_parts(f, g).map(|p| p.1),
                }
                .expect("lifted binary maps");
                total += &value.scaled(&Scalar::from_integer((*coef).into()));
            }
            let block = Signature::new(&row.domain, row.codomain);
            let map = total.project(&block).expect("block of a total map");
            StructureResidual { label: row.label, block, map, total }
        })
        .collect()
}

fn ingredient(what: &str, ok: bool) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::Ingredient(what.to_string()))
    }
}

fn placed(m: &MultilinearMap, split: Split, c: Component) -> Result<MultilinearMap> {
    m.reinterpret(split, &c.signature())
}

/// Builds one of the standard quasi-twilled algebras after checking that the
/// ingredients satisfy their axioms.
pub fn build_standard(ingredients: &Ingredients) -> Result<QuasiTwilledAlgebra> {
    let mut lambda = None;
    let q = match ingredients {
        Ingredients::ModifiedDirectSum { algebra, lambda: l } => {
            ingredient("algebra is not associative", check_associative(algebra).is_zero())?;
            let n = algebra.dim();
            let split = Split::new(n, n);
            let p = algebra.product();
            let mut q = QuasiTwilledAlgebra::zero(split);
            q.set_component(Component::Xi, placed(p, split, Component::Xi)?)?;
            q.set_component(Component::Eta, placed(p, split, Component::Eta)?)?;
            q.set_component(Component::Beta, placed(p, split, Component::Beta)?)?;
            q.set_component(Component::Theta, placed(p, split, Component::Theta)?.scaled(l))?;
            lambda = Some(l.clone());
            q
        }
        Ingredients::Semidirect { rep } => {
            check_rep(rep)?;
            semidirect(rep)?
        }
        Ingredients::SemidirectAssoc { rep } => {
            check_rep(&rep.pair)?;
            ingredient("module algebra is not associative", check_associative(&rep.module).is_zero())?;
            ingredient(
                "associative representation compatibilities fail",
                check_associative_representation(rep).is_zero(),
            )?;
            let mut q = semidirect(&rep.pair)?;
            q.set_component(Component::Beta, placed(rep.module.product(), q.split, Component::Beta)?)?;
            q
        }
        Ingredients::DirectProduct { a, aprime } => {
            ingredient("first algebra is not associative", check_associative(a).is_zero())?;
            ingredient("second algebra is not associative", check_associative(aprime).is_zero())?;
            let split = Split::new(a.dim(), aprime.dim());
            let mut q = QuasiTwilledAlgebra::zero(split);
            q.set_component(Component::Pi, placed(a.product(), split, Component::Pi)?)?;
            q.set_component(Component::Beta, placed(aprime.product(), split, Component::Beta)?)?;
            q
        }
        Ingredients::AbelianExtension { cocycle } => {
            check_rep(&cocycle.rep)?;
            ingredient("omega is not a 2-cocycle", check_cocycle(cocycle).is_zero())?;
            let mut q = semidirect(&cocycle.rep)?;
            q.set_component(Component::Theta, placed(&cocycle.omega, q.split, Component::Theta)?)?;
            q
        }
        Ingredients::Reynolds { algebra } => {
            ingredient("algebra is not associative", check_associative(algebra).is_zero())?;
            let rep = regular_representation(algebra);
            let mut q = semidirect(&rep)?;
            q.set_component(Component::Theta, placed(algebra.product(), q.split, Component::Theta)?)?;
            q
        }
        Ingredients::MatchedPair { data } => {
            ingredient("A is not associative", check_associative(&data.a).is_zero())?;
            ingredient("A' is not associative", check_associative(&data.aprime).is_zero())?;
            let report = check_matched_pair(data);
            if let Some((name, w)) = report.first_failure() {
                return Err(Error::Ingredient(format!("matched pair identity {name:?} fails at {w}")));
            }
            let split = data.split();
            let mut q = QuasiTwilledAlgebra::zero(split);
            q.set_component(Component::Pi, placed(data.a.product(), split, Component::Pi)?)?;
            q.set_component(Component::Beta, placed(data.aprime.product(), split, Component::Beta)?)?;
            q.set_component(Component::Rho, data.rho.clone())?;
            q.set_component(Component::Mu, data.mu.clone())?;
            q.set_component(Component::Eta, data.eta.clone())?;
            q.set_component(Component::Xi, data.xi.clone())?;
            q
        }
    };
    Ok(q.with_provenance(Provenance { kind: ingredients.kind(), lambda }))
}

fn check_rep(rep: &RepresentationPair) -> Result<()> {
    ingredient("algebra is not associative", check_associative(&rep.algebra).is_zero())?;
    let report = check_representation(rep);
    if let Some((name, w)) = report.first_failure() {
        return Err(Error::Ingredient(format!("representation identity {name:?} fails at {w}")));
    }
    Ok(())
}

fn semidirect(rep: &RepresentationPair) -> Result<QuasiTwilledAlgebra> {
    if rep.algebra.space() != A || rep.module_space() != P {
        return Err(Error::Ingredient(format!(
            "semidirect products need the algebra on A and the module on A', got {} and {}",
            rep.algebra.space(),
            rep.module_space()
        )));
    }
    let split = rep.rho.split();
    let mut q = QuasiTwilledAlgebra::zero(split);
    q.set_component(Component::Pi, rep.algebra.product().clone())?;
    q.set_component(Component::Rho, rep.rho.clone())?;
    q.set_component(Component::Mu, rep.mu.clone())?;
    Ok(q)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::int;

    fn modified(lambda: i64) -> QuasiTwilledAlgebra {
        build_standard(&Ingredients::ModifiedDirectSum { algebra: AssociativeAlgebra::one_dim(A), lambda: int(lambda) })
            .unwrap()
    }

    #[test]
    fn zero_components_are_valid() {
        let q = QuasiTwilledAlgebra::zero(Split::new(2, 1));
        assert!(validate(&q).is_zero());
        assert!(total_product(&q).is_zero());
        assert_eq!(structure_residuals(&q).len(), 16);
    }

    #[test]
    fn modified_total_product() {
        let omega = total_product(&modified(4));
        // Ω((e,0),(e,0)) = (0, 4e)
        assert_eq!(omega.eval_basis(&[0, 0]), &[int(0), int(4)]);
        // (x,u)(y,v) = (xv + uy, λxy + uv)
        assert_eq!(omega.eval_basis(&[0, 1]), &[int(1), int(0)]);
        assert_eq!(omega.eval_basis(&[1, 0]), &[int(1), int(0)]);
        assert_eq!(omega.eval_basis(&[1, 1]), &[int(0), int(1)]);
    }

    #[test]
    fn modified_lambda_one_rows_vanish() {
        let q = modified(1);
        assert!(validate(&q).is_zero());
        assert!(structure_residuals(&q).iter().all(|r| r.map.is_zero()));
    }

    #[test]
    fn total_roundtrip() {
        let q = modified(3);
        let back = QuasiTwilledAlgebra::from_total(&total_product(&q)).unwrap();
        assert_eq!(back, q.clone().forget_provenance());
    }

    #[test]
    fn direct_product_rows() {
        let q = build_standard(&Ingredients::DirectProduct {
            a: AssociativeAlgebra::dual_numbers(A),
            aprime: AssociativeAlgebra::one_dim(P),
        })
        .unwrap();
        let omega = total_product(&q);
        // (x·y, u·v): (t,0)(t,0) = 0, (1,0)(t,0) = (t,0), (0,e)(0,e) = (0,e)
        assert!(omega.eval_basis(&[1, 1]).iter().all(num_traits::Zero::is_zero));
        assert_eq!(omega.eval_basis(&[0, 1]), &[int(0), int(1), int(0)]);
        assert_eq!(omega.eval_basis(&[2, 2]), &[int(0), int(0), int(1)]);
        assert_eq!(omega.eval_basis(&[0, 2]), &[int(0), int(0), int(0)]);
        for r in structure_residuals(&q) {
            assert!(r.map.is_zero(), "{}", r.label);
        }
    }

    #[test]
    fn corrupted_semidirect_is_rejected() {
        let q = build_standard(&Ingredients::Semidirect {
            rep: regular_representation(&AssociativeAlgebra::dual_numbers(A)),
        })
        .unwrap();
        let mut bad = q.clone();
        let mut mu = q.mu().clone();
        mu.set(&[1, 0], 1, int(2));
        bad.set_component(Component::Mu, mu).unwrap();
        assert!(!validate(&bad).is_zero());
        assert!(structure_residuals(&bad).iter().any(|r| !r.map.is_zero()));
    }

    #[test]
    fn bad_ingredients_are_reported() {
        let reg = regular_representation(&AssociativeAlgebra::one_dim(A));
        let broken = RepresentationPair::new(reg.algebra.clone(), reg.rho.scaled(&int(2)), reg.mu.clone()).unwrap();
        let err = build_standard(&Ingredients::Semidirect { rep: broken }).unwrap_err();
        assert!(matches!(err, Error::Ingredient(_)));
    }

    #[test]
    fn stray_block_is_not_quasi_twilled() {
        let split = Split::new(1, 1);
        let mut omega = MultilinearMap::zero(split, &Signature::uniform(Space::Total, 2, Space::Total));
        omega.set(&[1, 1], 0, int(1));
        assert!(matches!(QuasiTwilledAlgebra::from_total(&omega), Err(Error::InvalidQta(_))));
    }
}
