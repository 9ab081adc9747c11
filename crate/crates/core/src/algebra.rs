//! Finite-dimensional associative algebras, bimodule representations,
//! associative representations, 2-cocycles and matched pairs.
//!
//! Every check returns the offending multilinear maps rather than a boolean,
//! so callers can assert exact zeroness or report a witness tuple. Actions are
//! stored as component maps: `rho(x, v) = ρ(x)v` and `mu(v, x) = μ(x)v`.

use crate::cochain::{circle, MultilinearMap, Signature, Space, Split, Witness};
use crate::error::{Error, Result};
use crate::scalar::{int, Scalar};

/// One named residual map.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Residual {
    pub name: String,
    pub map: MultilinearMap,
}

/// A list of named residual maps; the checked structure is valid iff all vanish.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ResidualReport {
    pub entries: Vec<Residual>,
}

impl ResidualReport {
    pub fn push(&mut self, name: impl Into<String>, map: MultilinearMap) {
        self.entries.push(Residual { name: name.into(), map });
    }

    pub fn extend(&mut self, prefix: &str, other: ResidualReport) {
        for r in other.entries {
            self.push(format!("{prefix}{}", r.name), r.map);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|r| r.map.is_zero())
    }

    /// Names of the nonzero entries.
    pub fn failing(&self) -> Vec<&str> {
        self.entries.iter().filter(|r| !r.map.is_zero()).map(|r| r.name.as_str()).collect()
    }

    /// First nonzero entry with its witness.
    pub fn first_failure(&self) -> Option<(&str, Witness)> {
        self.entries.iter().find_map(|r| r.map.witness().map(|w| (r.name.as_str(), w)))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AssociativeAlgebra {
    basis: Vec<String>,
    product: MultilinearMap,
}

impl AssociativeAlgebra {
    /// Wraps a binary product on a single space. Associativity is not
    /// enforced here; see [`check_associative`].
    pub fn new(product: MultilinearMap) -> Result<Self> {
        let space = product.codomain();
        if product.signature() != Signature::uniform(space, 2, space) {
            return Err(Error::Arity(format!(
                "an algebra product must be {space},{space}->{space}, got {}",
                product.signature()
            )));
        }
        let basis = (0..product.codim()).map(|i| format!("e{}", i + 1)).collect();
        Ok(Self { basis, product })
    }

    pub fn with_basis(mut self, basis: Vec<String>) -> Result<Self> {
        if basis.len() != self.dim() {
            return Err(Error::Dimension(format!(
                "{} basis labels for an algebra of dimension {}",
                basis.len(),
                self.dim()
            )));
        }
        self.basis = basis;
        Ok(self)
    }

    /// Algebra on `space` from structure constants `table[i][j][k]`.
    pub fn from_table(space: Space, table: &[Vec<Vec<Scalar>>]) -> Result<Self> {
        let split = lone_split(space, table.len());
        Self::new(MultilinearMap::from_binary_table(split, &Signature::uniform(space, 2, space), table)?)
    }

    /// The 1-dimensional algebra `e·e = e`.
    pub fn one_dim(space: Space) -> Self {
        Self::from_table(space, &[vec![vec![int(1)]]])
            .expect("static table")
            .with_basis(vec!["e".into()])
            .expect("one label")
    }

    /// Dual numbers `𝕂[t]/(t²)` with basis `{1, t}`.
    pub fn dual_numbers(space: Space) -> Self {
        let (o, i) = (int(0), int(1));
        let table = vec![
            vec![vec![i.clone(), o.clone()], vec![o.clone(), i.clone()]],
            vec![vec![o.clone(), i.clone()], vec![o.clone(), o.clone()]],
        ];
        Self::from_table(space, &table)
            .expect("static table")
            .with_basis(vec!["1".into(), "t".into()])
            .expect("two labels")
    }

    /// The zero product on a space of dimension `dim`.
    pub fn zero_product(space: Space, dim: usize) -> Self {
        Self::new(MultilinearMap::zero(lone_split(space, dim), &Signature::uniform(space, 2, space)))
            .expect("uniform signature")
    }

    pub fn space(&self) -> Space {
        self.product.codomain()
    }

    pub fn dim(&self) -> usize {
        self.product.codim()
    }

    pub fn basis(&self) -> &[String] {
        &self.basis
    }

    pub fn product(&self) -> &MultilinearMap {
        &self.product
    }

    /// The same structure constants placed on another label and splitting.
    pub fn placed(&self, space: Space, split: Split) -> Result<Self> {
        Ok(Self {
            basis: self.basis.clone(),
            product: self.product.reinterpret(split, &Signature::uniform(space, 2, space))?,
        })
    }
}

/// Splitting in which only `space` carries dimension.
pub fn lone_split(space: Space, dim: usize) -> Split {
    match space {
        Space::Aprime => Split::new(0, dim),
        _ => Split::new(dim, 0),
    }
}

/// `½[π, π]_G = π ∘ π`; zero iff the product is associative.
pub fn check_associative(alg: &AssociativeAlgebra) -> MultilinearMap {
    circle(alg.product(), alg.product()).expect("uniform binary product")
}

/// `π(π(x,y),z) - π(x,π(y,z))` by direct evaluation on basis triples.
pub fn associator(alg: &AssociativeAlgebra) -> MultilinearMap {
    let p = alg.product();
    let space = alg.space();
    MultilinearMap::from_fn(p.split(), &Signature::uniform(space, 3, space), |t, k| {
        let xy = p.eval_basis(&[t[0], t[1]]).to_vec();
        let yz = p.eval_basis(&[t[1], t[2]]).to_vec();
        let e = |i: usize| unit(alg.dim(), i);
        let left = p.apply(&[&xy, &e(t[2])]).expect("dims");
        let right = p.apply(&[&e(t[0]), &yz]).expect("dims");
        &left[k] - &right[k]
    })
}

pub(crate) fn unit(dim: usize, i: usize) -> Vec<Scalar> {
    let mut v = vec![int(0); dim];
    v[i] = int(1);
    v
}

/// A bimodule `(V; ρ, μ)` over an associative algebra.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RepresentationPair {
    pub algebra: AssociativeAlgebra,
    /// `X ⊗ V → V`, `rho(x, v) = ρ(x)v`.
    pub rho: MultilinearMap,
    /// `V ⊗ X → V`, `mu(v, x) = μ(x)v`.
    pub mu: MultilinearMap,
}

impl RepresentationPair {
    pub fn new(algebra: AssociativeAlgebra, rho: MultilinearMap, mu: MultilinearMap) -> Result<Self> {
        let x = algebra.space();
        let v = rho.codomain();
        if rho.signature() != Signature::new(&[x, v], v) || mu.signature() != Signature::new(&[v, x], v) {
            return Err(Error::Dimension(format!(
                "actions must be {x},V->V and V,{x}->V, got {} and {}",
                rho.signature(),
                mu.signature()
            )));
        }
        let split = rho.split();
        if mu.split() != split || algebra.product().split() != split {
            return Err(Error::Dimension("representation data over different splittings".into()));
        }
        Ok(Self { algebra, rho, mu })
    }

    pub fn module_space(&self) -> Space {
        self.rho.codomain()
    }

    pub fn module_dim(&self) -> usize {
        self.rho.codim()
    }

    /// The zero actions on a module of dimension `dim` labeled `space`.
    pub fn trivial(algebra: &AssociativeAlgebra, space: Space, dim: usize) -> Result<Self> {
        let x = algebra.space();
        let split = match x {
            Space::A => Split::new(algebra.dim(), dim),
            _ => Split::new(dim, algebra.dim()),
        };
        let alg = algebra.placed(x, split)?;
        Self::new(
            alg,
            MultilinearMap::zero(split, &Signature::new(&[x, space], space)),
            MultilinearMap::zero(split, &Signature::new(&[space, x], space)),
        )
    }
}

/// `(A; L, R)` placed on the complementary label so it can serve as the
/// module of a semidirect product.
pub fn regular_representation(alg: &AssociativeAlgebra) -> RepresentationPair {
    let x = alg.space();
    let v = match x {
        Space::Aprime => Space::A,
        _ => Space::Aprime,
    };
    let n = alg.dim();
    let split = Split::new(n, n);
    let algebra = alg.placed(x, split).expect("same dimension");
    let rho = alg.product().reinterpret(split, &Signature::new(&[x, v], v)).expect("same shape");
    let mu = alg.product().reinterpret(split, &Signature::new(&[v, x], v)).expect("same shape");
    RepresentationPair { algebra, rho, mu }
}

/// Residuals of `ρ(xy) = ρ(x)ρ(y)`, `μ(xy) = μ(y)μ(x)`, `ρ(x)μ(y) = μ(y)ρ(x)`.
pub fn check_representation(rep: &RepresentationPair) -> ResidualReport {
    let pi = rep.algebra.product();
    let (rho, mu) = (&rep.rho, &rep.mu);
    let ins = |f: &MultilinearMap, i, g| f.insert(i, g).expect("labels checked at construction");
    let mut report = ResidualReport::default();
    report.push("rho(xy) = rho(x)rho(y)", &ins(rho, 0, pi) - &ins(rho, 1, rho));
    report.push("mu(xy) = mu(y)mu(x)", &ins(mu, 1, pi) - &ins(mu, 0, mu));
    report.push("rho(x)mu(y) = mu(y)rho(x)", &ins(rho, 1, mu) - &ins(mu, 0, rho));
    report
}

/// A representation whose module carries its own product.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AssociativeRepresentation {
    pub pair: RepresentationPair,
    pub module: AssociativeAlgebra,
}

impl AssociativeRepresentation {
    pub fn new(pair: RepresentationPair, module: AssociativeAlgebra) -> Result<Self> {
        if module.space() != pair.module_space() || module.dim() != pair.module_dim() {
            return Err(Error::Dimension("module product does not live on the module".into()));
        }
        let module = module.placed(module.space(), pair.rho.split())?;
        Ok(Self { pair, module })
    }
}

/// Representation residuals plus the three compatibilities with the module
/// product.
pub fn check_associative_representation(ar: &AssociativeRepresentation) -> ResidualReport {
    let mut report = check_representation(&ar.pair);
    let beta = ar.module.product();
    let (rho, mu) = (&ar.pair.rho, &ar.pair.mu);
    let ins = |f: &MultilinearMap, i, g| f.insert(i, g).expect("labels checked at construction");
    report.push("rho(x)(uv) = (rho(x)u)v", &ins(rho, 1, beta) - &ins(beta, 0, rho));
    report.push("u(rho(x)v) = (mu(x)u)v", &ins(beta, 1, rho) - &ins(beta, 0, mu));
    report.push("u(mu(x)v) = mu(x)(uv)", &ins(beta, 1, mu) - &ins(mu, 0, beta));
    report
}

/// `ω: A ⊗ A → V` attached to a representation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cocycle2 {
    pub rep: RepresentationPair,
    pub omega: MultilinearMap,
}

impl Cocycle2 {
    pub fn new(rep: RepresentationPair, omega: MultilinearMap) -> Result<Self> {
        let x = rep.algebra.space();
        let v = rep.module_space();
        if x == v || omega.signature() != Signature::new(&[x, x], v) || omega.split() != rep.rho.split() {
            return Err(Error::Dimension(format!("cocycle must be {x},{x}->{v} over the representation's splitting")));
        }
        Ok(Self { rep, omega })
    }

    /// `(x,u)·(y,v) = (xy, ρ(x)v + μ(y)u + ω(x,y))` on the total space.
    pub fn extension_product(&self) -> MultilinearMap {
        [self.rep.algebra.product(), &self.rep.rho, &self.rep.mu, &self.omega]
            .iter()
            .map(|m| m.lift())
            .reduce(|a, b| &a + &b)
            .expect("nonempty")
    }
}

/// Operational cocycle condition: associativity defect of the extension.
pub fn check_cocycle(c: &Cocycle2) -> MultilinearMap {
    let ext = c.extension_product();
    circle(&ext, &ext).expect("total binary map")
}

/// Matched pair `(A, A', ρ, μ, η, ξ)` with component conventions
/// `rho: A⊗A'→A'`, `mu: A'⊗A→A'`, `eta(u, x) = η(u)x: A'⊗A→A` and
/// `xi(x, u) = ξ(u)x: A⊗A'→A`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatchedPairData {
    pub a: AssociativeAlgebra,
    pub aprime: AssociativeAlgebra,
    pub rho: MultilinearMap,
    pub mu: MultilinearMap,
    pub eta: MultilinearMap,
    pub xi: MultilinearMap,
}

impl MatchedPairData {
    pub fn new(
        a: &AssociativeAlgebra,
        aprime: &AssociativeAlgebra,
        rho: MultilinearMap,
        mu: MultilinearMap,
        eta: MultilinearMap,
        xi: MultilinearMap,
    ) -> Result<Self> {
        use Space::{Aprime as P, A};
        let split = Split::new(a.dim(), aprime.dim());
        let a = a.placed(A, split)?;
        let aprime = aprime.placed(P, split)?;
        let expect = [
            (&rho, Signature::new(&[A, P], P)),
            (&mu, Signature::new(&[P, A], P)),
            (&eta, Signature::new(&[P, A], A)),
            (&xi, Signature::new(&[A, P], A)),
        ];
        for (m, sig) in &expect {
            if m.signature() != *sig {
                return Err(Error::Dimension(format!("expected {sig}, got {}", m.signature())));
            }
        }
        let rho = rho.with_split(split)?;
        let mu = mu.with_split(split)?;
        let eta = eta.with_split(split)?;
        let xi = xi.with_split(split)?;
        Ok(Self { a, aprime, rho, mu, eta, xi })
    }

    pub fn split(&self) -> Split {
        self.rho.split()
    }

    /// `(A'; ρ, μ)` as a representation of `A`.
    pub fn rep_on_aprime(&self) -> RepresentationPair {
        RepresentationPair::new(self.a.clone(), self.rho.clone(), self.mu.clone()).expect("labels")
    }

    /// `(A; η, ξ)` as a representation of `A'`.
    pub fn rep_on_a(&self) -> RepresentationPair {
        RepresentationPair::new(self.aprime.clone(), self.eta.clone(), self.xi.clone()).expect("labels")
    }

    /// `(x,u)·(y,v) = (xy + ξ(v)x + η(u)y, uv + ρ(x)v + μ(y)u)`.
    pub fn bicrossed_product(&self) -> AssociativeAlgebra {
        let total = [self.a.product(), self.aprime.product(), &self.rho, &self.mu, &self.eta, &self.xi]
            .iter()
            .map(|m| m.lift())
            .reduce(|a, b| &a + &b)
            .expect("nonempty");
        AssociativeAlgebra::new(total).expect("uniform total product")
    }
}

/// Both representation reports plus the six compatibility identities.
pub fn check_matched_pair(mp: &MatchedPairData) -> ResidualReport {
    let (pi, beta) = (mp.a.product(), mp.aprime.product());
    let (rho, mu, eta, xi) = (&mp.rho, &mp.mu, &mp.eta, &mp.xi);
    let ins = |f: &MultilinearMap, i, g| f.insert(i, g).expect("labels checked at construction");
    let mut report = ResidualReport::default();
    report.extend("A' over A: ", check_representation(&mp.rep_on_aprime()));
    report.extend("A over A': ", check_representation(&mp.rep_on_a()));
    report
        .push("rho(x)(uv) = rho(xi(u)x)v + (rho(x)u)v", &(&ins(rho, 1, beta) - &ins(rho, 0, xi)) - &ins(beta, 0, rho));
    report.push("mu(x)(uv) = mu(eta(v)x)u + u(mu(x)v)", &(&ins(mu, 0, beta) - &ins(mu, 1, eta)) - &ins(beta, 1, mu));
    report.push("eta(u)(xy) = eta(mu(x)u)y + (eta(u)x)y", &(&ins(eta, 1, pi) - &ins(eta, 0, mu)) - &ins(pi, 0, eta));
    report.push("xi(u)(xy) = xi(rho(y)u)x + x(xi(u)y)", &(&ins(xi, 0, pi) - &ins(xi, 1, rho)) - &ins(pi, 1, xi));
    report.push(
        "rho(eta(u)x)v + (mu(x)u)v = mu(xi(v)x)u + u(rho(x)v)",
        &(&(&ins(rho, 0, eta) + &ins(beta, 0, mu)) - &ins(mu, 1, xi)) - &ins(beta, 1, rho),
    );
    report.push(
        "eta(rho(x)u)y + (xi(u)x)y = xi(mu(y)u)x + x(eta(u)y)",
        &(&(&ins(eta, 0, rho) + &ins(pi, 0, xi)) - &ins(xi, 1, mu)) - &ins(pi, 1, eta),
    );
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::int;

    fn table(rows: &[[[i64; 2]; 2]; 2]) -> Vec<Vec<Vec<Scalar>>> {
        rows.iter().map(|r| r.iter().map(|v| v.iter().map(|&x| int(x)).collect()).collect()).collect()
    }

    #[test]
    fn one_dim_is_associative() {
        let alg = AssociativeAlgebra::one_dim(Space::A);
        assert!(check_associative(&alg).is_zero());
        assert!(associator(&alg).is_zero());
    }

    #[test]
    fn square_zero_pattern_is_associative() {
        // e1e1 = e2, everything else zero
        let alg = AssociativeAlgebra::from_table(Space::A, &table(&[[[0, 1], [0, 0]], [[0, 0], [0, 0]]])).unwrap();
        assert!(check_associative(&alg).is_zero());
    }

    #[test]
    fn left_unit_pattern_is_associative() {
        // e1e1=e1, e1e2=e2, e2e1=e1, e2e2=e2 is x·y = ε(x)y with ε(e_i) = 1
        let alg = AssociativeAlgebra::from_table(Space::A, &table(&[[[1, 0], [0, 1]], [[1, 0], [0, 1]]])).unwrap();
        assert!(check_associative(&alg).is_zero());
        assert!(associator(&alg).is_zero());
    }

    #[test]
    fn broken_product_is_flagged() {
        // e1e1 = e2, e2e1 = e1: (e1e1)e1 = e1 but e1(e1e1) = e1e2 = 0
        let alg = AssociativeAlgebra::from_table(Space::A, &table(&[[[0, 1], [0, 0]], [[1, 0], [0, 0]]])).unwrap();
        let res = check_associative(&alg);
        assert_eq!(res, associator(&alg));
        assert_eq!(res.eval_basis(&[0, 0, 0]), &[int(1), int(0)]);
    }

    #[test]
    fn regular_representation_of_valid_algebras() {
        for alg in [
            AssociativeAlgebra::one_dim(Space::A),
            AssociativeAlgebra::dual_numbers(Space::A),
            AssociativeAlgebra::zero_product(Space::A, 2),
        ] {
            let reg = regular_representation(&alg);
            assert!(check_representation(&reg).is_zero());
        }
    }

    #[test]
    fn left_multiplication_by_t() {
        let reg = regular_representation(&AssociativeAlgebra::dual_numbers(Space::A));
        // L_t(1) = t, L_t(t) = 0
        assert_eq!(reg.rho.eval_basis(&[1, 0]), &[int(0), int(1)]);
        assert_eq!(reg.rho.eval_basis(&[1, 1]), &[int(0), int(0)]);
        let zero = regular_representation(&AssociativeAlgebra::zero_product(Space::A, 2));
        assert!(zero.rho.is_zero() && zero.mu.is_zero());
    }

    #[test]
    fn scaled_left_action_breaks_representation() {
        let reg = regular_representation(&AssociativeAlgebra::one_dim(Space::A));
        let bad = RepresentationPair::new(
            reg.algebra.clone(),
            reg.rho.scaled(&int(2)),
            MultilinearMap::zero(reg.mu.split(), &reg.mu.signature()),
        )
        .unwrap();
        let report = check_representation(&bad);
        // ρ(e·e) = 2 but ρ(e)ρ(e) = 4
        assert_eq!(report.entries[0].map.eval_basis(&[0, 0, 0]), &[int(-2)]);
        assert!(report.entries[1].map.is_zero());
    }

    #[test]
    fn trivial_actions_pass() {
        let alg = AssociativeAlgebra::dual_numbers(Space::A);
        let rep = RepresentationPair::trivial(&alg, Space::Aprime, 3).unwrap();
        assert!(check_representation(&rep).is_zero());
    }

    #[test]
    fn associative_representation_checks() {
        let alg = AssociativeAlgebra::one_dim(Space::A);
        let reg = regular_representation(&alg);
        let module = AssociativeAlgebra::one_dim(Space::Aprime);
        let ar = AssociativeRepresentation::new(reg.clone(), module.clone()).unwrap();
        assert!(check_associative_representation(&ar).is_zero());

        let zero_module = AssociativeAlgebra::zero_product(Space::Aprime, 1);
        let trivial = RepresentationPair::trivial(&alg, Space::Aprime, 1).unwrap();
        let extras = check_associative_representation(&AssociativeRepresentation::new(trivial, zero_module).unwrap());
        assert!(extras.entries[3..].iter().all(|r| r.map.is_zero()));

        let scaled = RepresentationPair::new(reg.algebra.clone(), reg.rho.scaled(&int(2)), reg.mu.clone()).unwrap();
        let report = check_associative_representation(&AssociativeRepresentation::new(scaled, module).unwrap());
        // ρ(e)(u·v) = 2 and (ρ(e)u)·v = 2 agree; u·(ρ(e)v) = 2 but (μ(e)u)·v = 1
        assert!(report.entries[3].map.is_zero());
        assert_eq!(report.entries[4].map.eval_basis(&[0, 0, 0]), &[int(1)]);
        assert!(!report.is_zero());
    }

    #[test]
    fn trivial_matched_pair() {
        let a = AssociativeAlgebra::zero_product(Space::A, 1);
        let p = AssociativeAlgebra::zero_product(Space::Aprime, 1);
        let split = Split::new(1, 1);
        use Space::{Aprime as P, A};
        let z = |d: &[Space], c| MultilinearMap::zero(split, &Signature::new(d, c));
        let mp = MatchedPairData::new(&a, &p, z(&[A, P], P), z(&[P, A], P), z(&[P, A], A), z(&[A, P], A)).unwrap();
        assert!(check_matched_pair(&mp).is_zero());
    }

    #[test]
    fn regular_matched_pair_on_one_dim() {
        let a = AssociativeAlgebra::one_dim(Space::A);
        let p = AssociativeAlgebra::one_dim(Space::Aprime);
        let reg = regular_representation(&a);
        let split = reg.rho.split();
        use Space::{Aprime as P, A};
        let z = |d: &[Space], c| MultilinearMap::zero(split, &Signature::new(d, c));
        let mp = MatchedPairData::new(&a, &p, reg.rho.clone(), reg.mu.clone(), z(&[P, A], A), z(&[A, P], A)).unwrap();
        let report = check_matched_pair(&mp);
        assert!(report.is_zero(), "{:?}", report.failing());
        assert!(check_associative(&mp.bicrossed_product()).is_zero());
    }

    #[test]
    fn reynolds_cocycle_is_accepted() {
        let alg = AssociativeAlgebra::one_dim(Space::A);
        let reg = regular_representation(&alg);
        let omega =
            alg.product().reinterpret(reg.rho.split(), &Signature::new(&[Space::A, Space::A], Space::Aprime)).unwrap();
        let c = Cocycle2::new(reg, omega).unwrap();
        assert!(check_cocycle(&c).is_zero());
    }
}
