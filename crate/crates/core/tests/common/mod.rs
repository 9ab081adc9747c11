#![allow(dead_code)]

use qta_core::algebra::{
    regular_representation, AssociativeAlgebra, AssociativeRepresentation, Cocycle2, MatchedPairData,
};
use qta_core::deformation::{linear_map, Side};
use qta_core::linfty::block_signature;
use qta_core::quasi_twilled::{build_standard, Ingredients};
use qta_core::scalar::int;
use qta_core::{ExactMatrix, MultilinearMap, QuasiTwilledAlgebra, Scalar, Signature, Space, Split};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn small(rng: &mut ChaCha8Rng) -> Scalar {
    int(rng.gen_range(-2..=2))
}

pub fn table(dim: usize, entries: &[(usize, usize, usize)]) -> Vec<Vec<Vec<Scalar>>> {
    let mut t = vec![vec![vec![int(0); dim]; dim]; dim];
    for &(i, j, k) in entries {
        t[i][j][k] = int(1);
    }
    t
}

/// Upper triangular 2x2 matrices, basis `e11, e12, e22`.
pub fn upper_triangular(space: Space) -> AssociativeAlgebra {
    AssociativeAlgebra::from_table(space, &table(3, &[(0, 0, 0), (0, 1, 1), (1, 2, 1), (2, 2, 2)])).unwrap()
}

/// `x·y = ε(x) y` with `ε(e_i) = 1` on a 2-dimensional space.
pub fn left_unit(space: Space) -> AssociativeAlgebra {
    AssociativeAlgebra::from_table(space, &table(2, &[(0, 0, 0), (0, 1, 1), (1, 0, 0), (1, 1, 1)])).unwrap()
}

pub fn algebras(space: Space) -> Vec<AssociativeAlgebra> {
    vec![
        AssociativeAlgebra::one_dim(space),
        AssociativeAlgebra::dual_numbers(space),
        left_unit(space),
        AssociativeAlgebra::zero_product(space, 2),
        upper_triangular(space),
    ]
}

pub fn random_map(split: Split, sig: &Signature, rng: &mut ChaCha8Rng) -> MultilinearMap {
    MultilinearMap::from_fn(split, sig, |_, _| small(rng))
}

/// `ω = δh`: `ω(x,y) = ρ(x)h(y) − h(xy) + μ(y)h(x)` for a random `h: A → V`.
pub fn coboundary_cocycle(alg: &AssociativeAlgebra, rng: &mut ChaCha8Rng) -> Cocycle2 {
    let rep = regular_representation(alg);
    let split = rep.rho.split();
    let h = random_map(split, &Signature::new(&[Space::A], Space::Aprime), rng);
    let omega = &(&rep.rho.insert(1, &h).unwrap() - &h.insert(0, rep.algebra.product()).unwrap())
        + &rep.mu.insert(0, &h).unwrap();
    Cocycle2::new(rep, omega).unwrap()
}

/// `A = span{e11, e12}` and `A' = span{e22}` inside upper triangular matrices.
pub fn triangular_matched_pair() -> MatchedPairData {
    let a = AssociativeAlgebra::from_table(Space::A, &table(2, &[(0, 0, 0), (0, 1, 1)])).unwrap();
    let ap = AssociativeAlgebra::one_dim(Space::Aprime);
    let split = Split::new(2, 1);
    let zero = |d: &[Space], c| MultilinearMap::zero(split, &Signature::new(d, c));
    let mut xi = zero(&[Space::A, Space::Aprime], Space::A);
    xi.set(&[1, 0], 1, int(1));
    MatchedPairData::new(
        &a,
        &ap,
        zero(&[Space::A, Space::Aprime], Space::Aprime),
        zero(&[Space::Aprime, Space::A], Space::Aprime),
        zero(&[Space::Aprime, Space::A], Space::A),
        xi,
    )
    .unwrap()
}

/// One valid quasi-twilled algebra per builder and base algebra.
pub fn standard_algebras(seed: u64) -> Vec<QuasiTwilledAlgebra> {
    let mut rng = rng(seed);
    let mut out = Vec::new();
    for alg in algebras(Space::A) {
        let lambda = small(&mut rng);
        out.push(build_standard(&Ingredients::ModifiedDirectSum { algebra: alg.clone(), lambda }).unwrap());
        let rep = regular_representation(&alg);
        out.push(build_standard(&Ingredients::Semidirect { rep: rep.clone() }).unwrap());
        let module = alg.placed(Space::Aprime, rep.rho.split()).unwrap();
        let assoc = AssociativeRepresentation::new(rep, module).unwrap();
        out.push(build_standard(&Ingredients::SemidirectAssoc { rep: assoc }).unwrap());
        out.push(
            build_standard(&Ingredients::DirectProduct {
                a: alg.clone(),
                aprime: AssociativeAlgebra::dual_numbers(Space::Aprime),
            })
            .unwrap(),
        );
        let cocycle = coboundary_cocycle(&alg, &mut rng);
        out.push(build_standard(&Ingredients::AbelianExtension { cocycle }).unwrap());
        out.push(build_standard(&Ingredients::Reynolds { algebra: alg }).unwrap());
    }
    out.push(build_standard(&Ingredients::MatchedPair { data: triangular_matched_pair() }).unwrap());
    out
}

pub fn random_linear(q: &QuasiTwilledAlgebra, side: Side, rng: &mut ChaCha8Rng) -> MultilinearMap {
    random_map(q.split(), &block_signature(side, 1), rng)
}

pub fn random_cochain(q: &QuasiTwilledAlgebra, side: Side, arity: usize, rng: &mut ChaCha8Rng) -> MultilinearMap {
    random_map(q.split(), &block_signature(side, arity), rng)
}

pub fn scalar_map(q: &QuasiTwilledAlgebra, side: Side, c: Scalar) -> MultilinearMap {
    linear_map(q.split(), side, &ExactMatrix::from_rows(vec![vec![c]]).unwrap()).unwrap()
}
