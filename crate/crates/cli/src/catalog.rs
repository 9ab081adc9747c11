//! Built-in example documents on 1- and 2-dimensional algebras.

use std::collections::BTreeMap;

use qta_core::algebra::AssociativeAlgebra;
use qta_core::scalar::{frac, int};
use qta_core::{Scalar, Side, Space};

use crate::document::{map_to_table, Builder, Document, Frac, MapDecl, SpaceDecl, SpaceName, Spaces, Table};
use crate::error::{CliError, CliResult};

use SpaceName::{Aprime as P, A};

pub struct Example {
    pub name: &'static str,
    pub summary: &'static str,
    build: fn() -> Document,
}

impl Example {
    pub fn document(&self) -> Document {
        (self.build)()
    }
}

pub const CATALOG: &[Example] = &[
    Example {
        name: "modified-lambda4-dim1",
        summary: "modified direct sum of e·e = e with weight 4; D = 2·id, B = D^-1",
        build: modified_lambda4_dim1,
    },
    Example {
        name: "modified-lambda1-dual-numbers",
        summary: "modified direct sum of K[t]/(t^2) with weight 1; D = B = id",
        build: modified_lambda1_dual_numbers,
    },
    Example {
        name: "semidirect-regular-dim1",
        summary: "semidirect product of e·e = e with its regular bimodule; D = 0, B = 0",
        build: semidirect_regular_dim1,
    },
    Example {
        name: "euler-derivation-dual-numbers",
        summary: "semidirect product of K[t]/(t^2) with its regular bimodule; D: 1 -> 0, t -> t",
        build: euler_derivation_dual_numbers,
    },
    Example {
        name: "crossed-homomorphism-dual-numbers",
        summary: "K[t]/(t^2) acting on a copy of itself as an algebra; D = -id",
        build: crossed_homomorphism_dual_numbers,
    },
    Example {
        name: "homomorphism-dual-numbers",
        summary: "direct product of two copies of K[t]/(t^2); D = id, D2: t -> 2t, B = id",
        build: homomorphism_dual_numbers,
    },
    Example {
        name: "twisted-rota-baxter-dim1",
        summary: "abelian extension of e·e = e by w(e,e) = 3; B = -1/3",
        build: twisted_rota_baxter_dim1,
    },
    Example { name: "reynolds-dim1", summary: "Reynolds builder on e·e = e; B = -id", build: reynolds_dim1 },
    Example {
        name: "matched-pair-upper-triangular",
        summary: "span{e11,e12} and span{e22} inside upper triangular 2x2 matrices",
        build: matched_pair_upper_triangular,
    },
];

pub fn names() -> Vec<&'static str> {
    CATALOG.iter().map(|e| e.name).collect()
}

pub fn example(name: &str) -> CliResult<Document> {
    CATALOG
        .iter()
        .find(|e| e.name == name)
        .map(Example::document)
        .ok_or_else(|| CliError::UnknownExample(name.to_string()))
}

/// Side implied by a map's direction.
pub fn side_of(m: &MapDecl) -> Side {
    match m.from {
        SpaceName::A => Side::Right,
        SpaceName::Aprime => Side::Left,
    }
}

fn space(dim: usize, basis: &[&str]) -> SpaceDecl {
    SpaceDecl { dim, basis: Some(basis.iter().map(|s| s.to_string()).collect()) }
}

fn table(from: [SpaceName; 2], to: SpaceName, alg: &AssociativeAlgebra) -> Table {
    Table { from: from.to_vec(), to, values: map_to_table(alg.product()) }
}

fn map(from: SpaceName, to: SpaceName, rows: Vec<Vec<Scalar>>) -> MapDecl {
    MapDecl { from, to, matrix: rows.into_iter().map(|r| r.into_iter().map(Frac).collect()).collect() }
}

fn doc(
    a: SpaceDecl,
    aprime: SpaceDecl,
    tables: Vec<(&str, Table)>,
    builder: Builder,
    maps: Vec<(&str, MapDecl)>,
) -> Document {
    Document {
        field: "rational".into(),
        spaces: Spaces { a, aprime },
        tables: tables.into_iter().map(|(n, t)| (n.to_string(), t)).collect(),
        builder: Some(builder),
        components: BTreeMap::new(),
        maps: maps.into_iter().map(|(n, m)| (n.to_string(), m)).collect(),
    }
}

fn builder(kind: &str) -> Builder {
    Builder { kind: kind.into(), product: "product".into(), ..Builder::default() }
}

/// Tables for `(A; L, R)` acting on a copy of itself.
fn regular(alg: &AssociativeAlgebra) -> Vec<(&'static str, Table)> {
    vec![("product", table([A, A], A, alg)), ("left", table([A, P], P, alg)), ("right", table([P, A], P, alg))]
}

fn regular_builder(kind: &str) -> Builder {
    Builder { left: Some("left".into()), right: Some("right".into()), ..builder(kind) }
}

fn one_dim() -> AssociativeAlgebra {
    AssociativeAlgebra::one_dim(Space::A)
}

fn dual() -> AssociativeAlgebra {
    AssociativeAlgebra::dual_numbers(Space::A)
}

fn id2() -> Vec<Vec<Scalar>> {
    vec![vec![int(1), int(0)], vec![int(0), int(1)]]
}

fn modified_lambda4_dim1() -> Document {
    doc(
        space(1, &["e"]),
        space(1, &["e'"]),
        vec![("product", table([A, A], A, &one_dim()))],
        Builder { lambda: Some(Frac(int(4))), ..builder("modified_direct_sum") },
        vec![("D", map(A, P, vec![vec![int(2)]])), ("B", map(P, A, vec![vec![frac(1, 2)]]))],
    )
}

fn modified_lambda1_dual_numbers() -> Document {
    doc(
        space(2, &["1", "t"]),
        space(2, &["1'", "t'"]),
        vec![("product", table([A, A], A, &dual()))],
        Builder { lambda: Some(Frac(int(1))), ..builder("modified_direct_sum") },
        vec![("D", map(A, P, id2())), ("B", map(P, A, id2()))],
    )
}

fn semidirect_regular_dim1() -> Document {
    doc(
        space(1, &["e"]),
        space(1, &["e'"]),
        regular(&one_dim()),
        regular_builder("semidirect"),
        vec![("D", map(A, P, vec![vec![int(0)]])), ("B", map(P, A, vec![vec![int(0)]]))],
    )
}

fn euler_derivation_dual_numbers() -> Document {
    doc(
        space(2, &["1", "t"]),
        space(2, &["1'", "t'"]),
        regular(&dual()),
        regular_builder("semidirect"),
        vec![("D", map(A, P, vec![vec![int(0), int(0)], vec![int(0), int(1)]]))],
    )
}

fn crossed_homomorphism_dual_numbers() -> Document {
    let mut tables = regular(&dual());
    tables.push(("module_product", table([P, P], P, &dual())));
    doc(
        space(2, &["1", "t"]),
        space(2, &["1'", "t'"]),
        tables,
        Builder { aprime_product: Some("module_product".into()), ..regular_builder("semidirect_assoc") },
        vec![("D", map(A, P, vec![vec![int(-1), int(0)], vec![int(0), int(-1)]]))],
    )
}

fn homomorphism_dual_numbers() -> Document {
    doc(
        space(2, &["1", "t"]),
        space(2, &["1'", "t'"]),
        vec![("product", table([A, A], A, &dual())), ("aprime_product", table([P, P], P, &dual()))],
        Builder { aprime_product: Some("aprime_product".into()), ..builder("direct_product") },
        vec![
            ("D", map(A, P, id2())),
            ("D2", map(A, P, vec![vec![int(1), int(0)], vec![int(0), int(2)]])),
            ("B", map(P, A, id2())),
        ],
    )
}

fn twisted_rota_baxter_dim1() -> Document {
    let mut tables = regular(&one_dim());
    tables.push(("omega", Table { from: vec![A, A], to: P, values: vec![vec![vec![Frac(int(3))]]] }));
    doc(
        space(1, &["e"]),
        space(1, &["e'"]),
        tables,
        Builder { cocycle: Some("omega".into()), ..regular_builder("abelian_extension") },
        vec![("B", map(P, A, vec![vec![frac(-1, 3)]]))],
    )
}

fn reynolds_dim1() -> Document {
    doc(
        space(1, &["e"]),
        space(1, &["e'"]),
        vec![("product", table([A, A], A, &one_dim()))],
        builder("reynolds"),
        vec![("B", map(P, A, vec![vec![int(-1)]]))],
    )
}

fn matched_pair_upper_triangular() -> Document {
    let z = || Frac(int(0));
    let o = || Frac(int(1));
    let product = Table {
        from: vec![A, A],
        to: A,
        values: vec![vec![vec![o(), z()], vec![z(), o()]], vec![vec![z(), z()], vec![z(), z()]]],
    };
    let e22 = Table { from: vec![P, P], to: P, values: vec![vec![vec![o()]]] };
    let zero = |from: [SpaceName; 2], to: SpaceName| {
        let dim = |s| if s == A { 2 } else { 1 };
        Table { from: from.to_vec(), to, values: vec![vec![vec![z(); dim(to)]; dim(from[1])]; dim(from[0])] }
    };
    // xi(e12, e22) = e12
    let xi = Table { from: vec![A, P], to: A, values: vec![vec![vec![z(), z()]], vec![vec![z(), o()]]] };
    doc(
        space(2, &["e11", "e12"]),
        space(1, &["e22"]),
        vec![
            ("product", product),
            ("aprime_product", e22),
            ("left", zero([A, P], P)),
            ("right", zero([P, A], P)),
            ("eta", zero([P, A], A)),
            ("xi", xi),
        ],
        Builder {
            aprime_product: Some("aprime_product".into()),
            left: Some("left".into()),
            right: Some("right".into()),
            eta: Some("eta".into()),
            xi: Some("xi".into()),
            ..builder("matched_pair")
        },
        vec![
            ("D", map(A, P, vec![vec![int(1), int(1)]])),
            ("B", map(P, A, vec![vec![int(0)], vec![int(1)]])),
            ("B1", map(P, A, vec![vec![int(1)], vec![int(0)]])),
        ],
    )
}
