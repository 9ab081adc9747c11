//! JSON input documents.
//!
//! Rationals are strings `"p/q"`. A binary table `values[i][j][k]` is the
//! coefficient of the `k`-th codomain basis vector in the image of the pair
//! `(i, j)`; a map matrix has one row per codomain basis vector, so column
//! `j` is the image of the `j`-th domain basis vector.

use std::collections::BTreeMap;
use std::fmt;

use qta_core::algebra::{AssociativeAlgebra, AssociativeRepresentation, Cocycle2, MatchedPairData, RepresentationPair};
use qta_core::scalar::{format_scalar, parse_scalar};
use qta_core::{
    build_standard, BuilderKind, Component, ExactMatrix, Ingredients, MultilinearMap, QuasiTwilledAlgebra, Scalar,
    Side, Signature, Space, Split,
};
use serde::{de, Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{CliError, CliResult};

const BAD_FRACTION: &str = "invalid fraction";

/// An exact rational carried as canonical `"p/q"` text.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Frac(pub Scalar);

impl Serialize for Frac {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&format_scalar(&self.0))
    }
}

impl<'de> Deserialize<'de> for Frac {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let text = String::deserialize(d)?;
        parse_scalar(&text).map(Frac).map_err(|_| de::Error::custom(format!("{BAD_FRACTION} {text:?}")))
    }
}

impl From<Scalar> for Frac {
    fn from(x: Scalar) -> Self {
        Frac(x)
    }
}

pub type TableValues = Vec<Vec<Vec<Frac>>>;
pub type MatrixValues = Vec<Vec<Frac>>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub enum SpaceName {
    A,
    Aprime,
}

impl SpaceName {
    pub fn space(self) -> Space {
        match self {
            SpaceName::A => Space::A,
            SpaceName::Aprime => Space::Aprime,
        }
    }

    pub fn of(space: Space) -> Self {
        match space {
            Space::Aprime => SpaceName::Aprime,
            _ => SpaceName::A,
        }
    }
}

impl fmt::Display for SpaceName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SpaceName::A => "A",
            SpaceName::Aprime => "Aprime",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SpaceDecl {
    pub dim: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub basis: Option<Vec<String>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Spaces {
    #[serde(rename = "A")]
    pub a: SpaceDecl,
    #[serde(rename = "Aprime")]
    pub aprime: SpaceDecl,
}

/// A named bilinear map used as a builder ingredient.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Table {
    pub from: Vec<SpaceName>,
    pub to: SpaceName,
    pub values: TableValues,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MapDecl {
    pub from: SpaceName,
    pub to: SpaceName,
    pub matrix: MatrixValues,
}

/// Builds Ω from named tables. Which references are used depends on `kind`:
/// `product` (A,A→A) always; `aprime_product` (A',A'→A'); `left` (A,A'→A');
/// `right` (A',A→A'); `cocycle` (A,A→A'); `eta` (A',A→A); `xi` (A,A'→A).
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Builder {
    pub kind: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lambda: Option<Frac>,
    pub product: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub aprime_product: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub left: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub right: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cocycle: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub eta: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub xi: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Document {
    pub field: String,
    pub spaces: Spaces,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub tables: BTreeMap<String, Table>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub builder: Option<Builder>,
    /// Hand-written components keyed by `pi`, `xi`, ..., `theta`; missing ones are zero.
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub components: BTreeMap<String, TableValues>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub maps: BTreeMap<String, MapDecl>,
}

/// Parses and checks a document.
pub fn parse(text: &str) -> CliResult<Document> {
    let de = &mut serde_json::Deserializer::from_str(text);
    let doc: Document = serde_path_to_error::deserialize(de).map_err(|e| {
        let path = e.path().to_string();
        let inner = e.into_inner();
        match inner.classify() {
            serde_json::error::Category::Data => {
                let message = inner.to_string();
                if message.starts_with(BAD_FRACTION) {
                    CliError::Value { path, message }
                } else {
                    CliError::Schema { path, message }
                }
            }
            _ => CliError::Parse(inner.to_string()),
        }
    })?;
    doc.check()?;
    Ok(doc)
}

/// Pretty JSON text of a document.
pub fn print(doc: &Document) -> String {
    serde_json::to_string_pretty(doc).expect("documents serialize")
}

fn shape_error(path: String, sig: &Signature, split: Split) -> CliError {
    let dims: Vec<String> = sig.domain.iter().chain([&sig.codomain]).map(|&s| split.dim(s).to_string()).collect();
    CliError::schema(path, format!("expected a {} array for {sig}", dims.join("x")))
}

pub fn table_to_map(split: Split, sig: &Signature, values: &TableValues, path: String) -> CliResult<MultilinearMap> {
    let scalars: Vec<Vec<Vec<Scalar>>> =
        values.iter().map(|r| r.iter().map(|v| v.iter().map(|x| x.0.clone()).collect()).collect()).collect();
    MultilinearMap::from_binary_table(split, sig, &scalars).map_err(|_| shape_error(path, sig, split))
}

pub fn map_to_table(m: &MultilinearMap) -> TableValues {
    m.to_binary_table()
        .expect("binary map")
        .into_iter()
        .map(|r| r.into_iter().map(|v| v.into_iter().map(Frac).collect()).collect())
        .collect()
}

pub fn matrix_values(m: &ExactMatrix) -> MatrixValues {
    (0..m.rows()).map(|i| (0..m.cols()).map(|j| Frac(m.get(i, j).clone())).collect()).collect()
}

fn used_refs(kind: BuilderKind) -> &'static [&'static str] {
    match kind {
        BuilderKind::ModifiedDirectSum | BuilderKind::Reynolds => &[],
        BuilderKind::Semidirect => &["left", "right"],
        BuilderKind::SemidirectAssoc => &["left", "right", "aprime_product"],
        BuilderKind::DirectProduct => &["aprime_product"],
        BuilderKind::AbelianExtension => &["left", "right", "cocycle"],
        BuilderKind::MatchedPair => &["aprime_product", "left", "right", "eta", "xi"],
    }
}

impl Builder {
    fn reference(&self, field: &str) -> Option<&String> {
        match field {
            "aprime_product" => self.aprime_product.as_ref(),
            "left" => self.left.as_ref(),
            "right" => self.right.as_ref(),
            "cocycle" => self.cocycle.as_ref(),
            "eta" => self.eta.as_ref(),
            "xi" => self.xi.as_ref(),
            _ => Some(&self.product),
        }
    }
}

fn ref_signature(field: &str) -> Signature {
    use Space::{Aprime as P, A};
    match field {
        "aprime_product" => Signature::new(&[P, P], P),
        "left" => Signature::new(&[A, P], P),
        "right" => Signature::new(&[P, A], P),
        "cocycle" => Signature::new(&[A, A], P),
        "eta" => Signature::new(&[P, A], A),
        "xi" => Signature::new(&[A, P], A),
        _ => Signature::new(&[A, A], A),
    }
}

impl Document {
    pub fn split(&self) -> Split {
        Split::new(self.spaces.a.dim, self.spaces.aprime.dim)
    }

    pub fn kind(&self) -> Option<BuilderKind> {
        self.builder.as_ref().and_then(|b| BuilderKind::from_name(&b.kind))
    }

    /// Structural checks beyond what the JSON schema enforces.
    pub fn check(&self) -> CliResult<()> {
        if self.field != "rational" {
            return Err(CliError::schema("field", format!("only \"rational\" is supported, got {:?}", self.field)));
        }
        for (name, decl) in [("A", &self.spaces.a), ("Aprime", &self.spaces.aprime)] {
            if let Some(basis) = &decl.basis {
                if basis.len() != decl.dim {
                    return Err(CliError::schema(
                        format!("spaces.{name}.basis"),
                        format!("{} labels for dimension {}", basis.len(), decl.dim),
                    ));
                }
            }
        }
        let split = self.split();
        for (name, t) in &self.tables {
            if t.from.len() != 2 {
                return Err(CliError::schema(format!("tables.{name}.from"), "tables are bilinear: give two spaces"));
            }
            let sig = self.table_signature(t);
            table_to_map(split, &sig, &t.values, format!("tables.{name}.values"))?;
        }
        for name in self.maps.keys() {
            self.map_by_name(name).map_err(|e| match e {
                CliError::Core(_) => CliError::schema(format!("maps.{name}"), e.to_string()),
                other => other,
            })?;
        }
        match (&self.builder, self.components.is_empty()) {
            (Some(_), false) => Err(CliError::schema("builder", "give either a builder or components, not both")),
            (Some(b), true) => self.check_builder(b),
            (None, _) => {
                for (name, values) in &self.components {
                    let c = Component::from_name(name)
                        .ok_or_else(|| CliError::schema(format!("components.{name}"), "unknown component"))?;
                    table_to_map(split, &c.signature(), values, format!("components.{name}"))?;
                }
                Ok(())
            }
        }
    }

    fn table_signature(&self, t: &Table) -> Signature {
        let domain: Vec<Space> = t.from.iter().map(|s| s.space()).collect();
        Signature::new(&domain, t.to.space())
    }

    fn check_builder(&self, b: &Builder) -> CliResult<()> {
        let kind = BuilderKind::from_name(&b.kind)
            .ok_or_else(|| CliError::schema("builder.kind", format!("unknown builder kind {:?}", b.kind)))?;
        let used = used_refs(kind);
        for field in ["aprime_product", "left", "right", "cocycle", "eta", "xi"] {
            match (b.reference(field).is_some(), used.contains(&field)) {
                (true, false) => {
                    return Err(CliError::schema(format!("builder.{field}"), format!("not used by kind {kind}")))
                }
                (false, true) => {
                    return Err(CliError::schema(format!("builder.{field}"), format!("required by kind {kind}")))
                }
                _ => {}
            }
        }
        match (kind == BuilderKind::ModifiedDirectSum, b.lambda.is_some()) {
            (true, false) => return Err(CliError::schema("builder.lambda", "required by kind modified_direct_sum")),
            (false, true) => return Err(CliError::schema("builder.lambda", format!("not used by kind {kind}"))),
            _ => {}
        }
        for field in std::iter::once("product").chain(used.iter().copied()) {
            self.ingredient_map(b, field)?;
        }
        if matches!(kind, BuilderKind::ModifiedDirectSum | BuilderKind::Reynolds)
            && self.spaces.a.dim != self.spaces.aprime.dim
        {
            return Err(CliError::schema("spaces.Aprime.dim", format!("kind {kind} needs dim A' = dim A")));
        }
        Ok(())
    }

    fn ingredient_map(&self, b: &Builder, field: &str) -> CliResult<MultilinearMap> {
        let name = b.reference(field).expect("presence checked");
        let t = self
            .tables
            .get(name)
            .ok_or_else(|| CliError::schema(format!("builder.{field}"), format!("no table named {name:?}")))?;
        let expected = ref_signature(field);
        if self.table_signature(t) != expected {
            return Err(CliError::schema(format!("tables.{name}"), format!("{field} must be {expected}")));
        }
        table_to_map(self.split(), &expected, &t.values, format!("tables.{name}.values"))
    }

    fn ingredients(&self, b: &Builder) -> CliResult<Ingredients> {
        let kind = BuilderKind::from_name(&b.kind).expect("checked");
        let get = |field| self.ingredient_map(b, field);
        let algebra = AssociativeAlgebra::new(get("product")?)?;
        let pair = || -> CliResult<RepresentationPair> {
            Ok(RepresentationPair::new(algebra.clone(), get("left")?, get("right")?)?)
        };
        let aprime = || -> CliResult<AssociativeAlgebra> { Ok(AssociativeAlgebra::new(get("aprime_product")?)?) };
        Ok(match kind {
            BuilderKind::ModifiedDirectSum => {
                Ingredients::ModifiedDirectSum { algebra, lambda: b.lambda.clone().expect("checked").0 }
            }
            BuilderKind::Semidirect => Ingredients::Semidirect { rep: pair()? },
            BuilderKind::SemidirectAssoc => {
                Ingredients::SemidirectAssoc { rep: AssociativeRepresentation::new(pair()?, aprime()?)? }
            }
            BuilderKind::DirectProduct => Ingredients::DirectProduct { a: algebra, aprime: aprime()? },
            BuilderKind::AbelianExtension => {
                Ingredients::AbelianExtension { cocycle: Cocycle2::new(pair()?, get("cocycle")?)? }
            }
            BuilderKind::Reynolds => Ingredients::Reynolds { algebra },
            BuilderKind::MatchedPair => Ingredients::MatchedPair {
                data: MatchedPairData::new(&algebra, &aprime()?, get("left")?, get("right")?, get("eta")?, get("xi")?)?,
            },
        })
    }

    /// The quasi-twilled algebra described by the document. Failing builder
    /// ingredient checks surface as `Core(Ingredient(..))`.
    pub fn algebra(&self) -> CliResult<QuasiTwilledAlgebra> {
        let split = self.split();
        let q = match &self.builder {
            Some(b) => build_standard(&self.ingredients(b)?)?,
            None => {
                let components = Component::ALL.map(|c| match self.components.get(c.name()) {
                    Some(values) => table_to_map(split, &c.signature(), values, format!("components.{}", c.name())),
                    None => Ok(MultilinearMap::zero(split, &c.signature())),
                });
                let mut out = Vec::with_capacity(7);
                for c in components {
                    out.push(c?);
                }
                QuasiTwilledAlgebra::from_components(split, out.try_into().expect("seven components"))?
            }
        };
        if q.split() != split {
            return Err(CliError::schema("spaces", format!("builder produces dims {:?}", q.split())));
        }
        Ok(q)
    }

    fn map_by_name(&self, name: &str) -> CliResult<MultilinearMap> {
        let m = self.maps.get(name).ok_or_else(|| CliError::Usage(format!("no map named {name:?}")))?;
        let split = self.split();
        let rows: Vec<Vec<Scalar>> = m.matrix.iter().map(|r| r.iter().map(|x| x.0.clone()).collect()).collect();
        let (r, c) = (split.dim(m.to.space()), split.dim(m.from.space()));
        if rows.len() != r || rows.iter().any(|row| row.len() != c) {
            return Err(CliError::schema(
                format!("maps.{name}.matrix"),
                format!("expected {r}x{c} for {}->{}", m.from, m.to),
            ));
        }
        let matrix = if r == 0 || c == 0 { ExactMatrix::zeros(r, c) } else { ExactMatrix::from_rows(rows)? };
        Ok(MultilinearMap::from_matrix(split, m.from.space(), m.to.space(), &matrix)?)
    }

    /// A named map, checked against the direction required by `side`.
    pub fn map(&self, name: &str, side: Side) -> CliResult<MultilinearMap> {
        let m = self.map_by_name(name)?;
        let (from, to) = side.map_spaces();
        let decl = &self.maps[name];
        if decl.from.space() != from || decl.to.space() != to {
            return Err(CliError::Usage(format!(
                "map {name:?} goes {}->{}, a {side} deformation map goes {}->{}",
                decl.from,
                decl.to,
                SpaceName::of(from),
                SpaceName::of(to)
            )));
        }
        Ok(m)
    }
}

impl Document {
    /// A components document for `q`; zero components are omitted.
    pub fn from_algebra(q: &QuasiTwilledAlgebra) -> Self {
        let split = q.split();
        Document {
            field: "rational".into(),
            spaces: Spaces {
                a: SpaceDecl { dim: split.a, basis: None },
                aprime: SpaceDecl { dim: split.aprime, basis: None },
            },
            tables: BTreeMap::new(),
            builder: None,
            components: Component::ALL
                .iter()
                .filter(|&&c| !q.component(c).is_zero())
                .map(|&c| (c.name().to_string(), map_to_table(q.component(c))))
                .collect(),
            maps: BTreeMap::new(),
        }
    }

    /// Adds a linear map between the summands under `name`.
    pub fn insert_map(&mut self, name: &str, m: &MultilinearMap) -> CliResult<()> {
        let matrix = m.to_matrix()?;
        let from = SpaceName::of(m.domain()[0]);
        let to = SpaceName::of(m.codomain());
        self.maps.insert(name.to_string(), MapDecl { from, to, matrix: matrix_values(&matrix) });
        Ok(())
    }
}
