//! JSON input formats for algebras, extensions, (weak) Hopf algebras and
//! Hopf subalgebras.
//!
//! Scalars are strings `"p/q"` or `"p"` (plain integers are accepted too).
//! Omitted structure constants are zero. In `iota` and `antipode`, row `i` is
//! the image of basis element `i`.

use serde::{Deserialize, Serialize};

use crate::algebra::{Extension, StructureAlgebra};
use crate::error::{Error, Result};
use crate::field::{Field, Scalar};
use crate::hopf::{Bialgebra, HopfSubalgebra};
use crate::matrix::Matrix;
use crate::subspace::Subspace;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Lit {
    Str(String),
    Int(i64),
}

impl Lit {
    pub fn parse(&self, f: Field) -> Result<Scalar> {
        match self {
            Lit::Str(s) => f.parse(s),
            Lit::Int(n) => Ok(f.from_i64(*n)),
        }
    }

    pub fn of(f: Field, x: &Scalar) -> Lit {
        Lit::Str(f.format(x))
    }
}

fn parse_vec(f: Field, v: &[Lit]) -> Result<Vec<Scalar>> {
    v.iter().map(|x| x.parse(f)).collect()
}

fn lit_vec(f: Field, v: &[Scalar]) -> Vec<Lit> {
    v.iter().map(|x| Lit::of(f, x)).collect()
}

/// Rows are images of basis elements; returned matrix has them as columns.
fn parse_images(f: Field, rows: &[Vec<Lit>], dim: usize, what: &str) -> Result<Matrix> {
    let cols = rows
        .iter()
        .map(|r| {
            let v = parse_vec(f, r)?;
            if v.len() != dim {
                return Err(Error::Input(format!("{what}: row has length {}, expected {dim}", v.len())));
            }
            Ok(v)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Matrix::from_columns(f, dim, &cols))
}

fn image_rows(f: Field, m: &Matrix) -> Vec<Vec<Lit>> {
    m.columns().iter().map(|c| lit_vec(f, c)).collect()
}

fn sparse(f: Field, entries: &[(usize, usize, usize, Lit)]) -> Result<Vec<(usize, usize, usize, Scalar)>> {
    entries.iter().map(|(i, j, k, c)| Ok((*i, *j, *k, c.parse(f)?))).collect()
}

/// Uses the override when given, then the document's field, then the rationals.
pub fn choose_field(document: Option<Field>, over: Option<Field>) -> Field {
    over.or(document).unwrap_or_default()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebraJson {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub field: Option<Field>,
    pub dim: usize,
    pub unit: Vec<Lit>,
    #[serde(default)]
    pub mul: Vec<(usize, usize, usize, Lit)>,
}

impl AlgebraJson {
    pub fn build(&self, over: Option<Field>) -> Result<StructureAlgebra> {
        let f = choose_field(self.field, over);
        let unit = parse_vec(f, &self.unit)?;
        let a = StructureAlgebra::from_triples(f, self.dim, unit, &sparse(f, &self.mul)?)?;
        if let Some(d) = a.validate().first() {
            return Err(Error::InvalidAlgebra(format!("{} fails at {:?}", d.identity, d.indices)));
        }
        Ok(a)
    }

    pub fn from_algebra(a: &StructureAlgebra) -> Self {
        let f = a.field();
        AlgebraJson {
            field: Some(f),
            dim: a.dim(),
            unit: lit_vec(f, a.unit()),
            mul: a.triples().into_iter().map(|(i, j, k, c)| (i, j, k, Lit::of(f, &c))).collect(),
        }
    }
}

/// An inline algebra or a registry name.
#[derive(Clone, Debug, Deserialize)]
#[serde(untagged)]
pub enum AlgebraRef {
    Name(String),
    Inline(AlgebraJson),
}

impl AlgebraRef {
    pub fn build(&self, f: Field) -> Result<StructureAlgebra> {
        match self {
            AlgebraRef::Name(n) => crate::registry::algebra(n, f),
            AlgebraRef::Inline(a) => a.build(Some(f)),
        }
    }
}

#[derive(Clone, Debug, Deserialize)]
pub struct ExtensionJson {
    #[serde(default)]
    pub field: Option<Field>,
    #[serde(rename = "B")]
    pub b: AlgebraRef,
    #[serde(rename = "A")]
    pub a: AlgebraRef,
    pub iota: Vec<Vec<Lit>>,
}

impl ExtensionJson {
    pub fn build(&self, over: Option<Field>) -> Result<Extension> {
        let f = choose_field(self.field, over);
        let b = self.b.build(f)?;
        let a = self.a.build(f)?;
        if self.iota.len() != b.dim() {
            return Err(Error::Input(format!("iota has {} rows, B has dimension {}", self.iota.len(), b.dim())));
        }
        let iota = parse_images(f, &self.iota, a.dim(), "iota")?;
        Extension::new(b, a, iota)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HopfJson {
    #[serde(flatten)]
    pub algebra: AlgebraJson,
    pub comul: Vec<(usize, usize, usize, Lit)>,
    pub counit: Vec<Lit>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub antipode: Option<Vec<Vec<Lit>>>,
}

impl HopfJson {
    pub fn build(&self, over: Option<Field>) -> Result<Bialgebra> {
        let f = choose_field(self.algebra.field, over);
        let alg = self.algebra.build(Some(f))?;
        let n = alg.dim();
        let counit = parse_vec(f, &self.counit)?;
        let antipode = match &self.antipode {
            Some(rows) if rows.len() != n => return Err(Error::Input(format!("antipode has {} rows, expected {n}", rows.len()))),
            Some(rows) => Some(parse_images(f, rows, n, "antipode")?),
            None => None,
        };
        Bialgebra::from_triples(alg, &sparse(f, &self.comul)?, counit, antipode)
    }

    pub fn from_bialgebra(h: &Bialgebra) -> Self {
        let f = h.field();
        let n = h.dim();
        let mut comul = Vec::new();
        for i in 0..n {
            for (c, j, k) in h.terms(&h.comul.column(i)) {
                comul.push((i, j, k, Lit::of(f, &c)));
            }
        }
        HopfJson {
            algebra: AlgebraJson::from_algebra(&h.algebra),
            comul,
            counit: lit_vec(f, &h.counit),
            antipode: h.antipode.as_ref().map(|s| image_rows(f, s)),
        }
    }
}

/// A Hopf subalgebra given by spanning vectors.
#[derive(Clone, Debug, Deserialize)]
pub struct SubJson {
    pub span: Vec<Vec<Lit>>,
}

impl SubJson {
    pub fn build(&self, h: &Bialgebra) -> Result<HopfSubalgebra> {
        let f = h.field();
        let vs = self
            .span
            .iter()
            .map(|r| {
                let v = parse_vec(f, r)?;
                if v.len() != h.dim() {
                    return Err(Error::Input(format!("spanning vector has length {}, expected {}", v.len(), h.dim())));
                }
                Ok(v)
            })
            .collect::<Result<Vec<_>>>()?;
        HopfSubalgebra::new(h, Subspace::span(f, h.dim(), &vs))
    }
}

pub fn parse_extension(text: &str, over: Option<Field>) -> Result<Extension> {
    serde_json::from_str::<ExtensionJson>(text)?.build(over)
}

pub fn parse_hopf(text: &str, over: Option<Field>) -> Result<Bialgebra> {
    serde_json::from_str::<HopfJson>(text)?.build(over)
}

pub fn parse_sub(text: &str, h: &Bialgebra) -> Result<HopfSubalgebra> {
    serde_json::from_str::<SubJson>(text)?.build(h)
}

/// Matrix rows as images of basis elements, formatted.
pub fn format_images(f: Field, m: &Matrix) -> Vec<Vec<String>> {
    m.columns().iter().map(|c| f.format_vec(c)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::Group;

    #[test]
    fn algebra_round_trip() {
        let h = Bialgebra::sweedler(Field::Rationals);
        let text = serde_json::to_string(&HopfJson::from_bialgebra(&h)).unwrap();
        let back = parse_hopf(&text, None).unwrap();
        assert_eq!(back.algebra, h.algebra);
        assert_eq!(back.comul, h.comul);
        assert_eq!(back.antipode, h.antipode);
    }

    #[test]
    fn extension_by_names() {
        let text = r#"{"B": "group:C2", "A": "group:C4", "iota": [["1","0","0","0"], [0,0,1,0]]}"#;
        let ext = parse_extension(text, None).unwrap();
        assert_eq!(ext.b().dim(), 2);
        assert_eq!(ext.image(1), Field::Rationals.unit_vector(4, 2));
    }

    #[test]
    fn malformed_inputs() {
        assert!(matches!(parse_hopf("{", None), Err(Error::Json(_))));
        let bad = r#"{"dim": 1, "unit": ["x"], "comul": [], "counit": ["1"]}"#;
        assert!(matches!(parse_hopf(bad, None), Err(Error::Input(_))));
        let text = r#"{"B": "group:C3", "A": "group:C4", "iota": [["1","0","0","0"]]}"#;
        assert!(parse_extension(text, None).is_err());
    }

    #[test]
    fn subalgebra_from_span() {
        let h = Bialgebra::group(Field::Rationals, &Group::cyclic(4));
        let k = parse_sub(r#"{"span": [[1,0,0,0],[0,0,1,0]]}"#, &h).unwrap();
        assert_eq!(k.dim(), 2);
        assert!(parse_sub(r#"{"span": [[0,1,0,0]]}"#, &h).is_err());
    }

    #[test]
    fn field_override_reduces_scalars() {
        let text = r#"{"field": {"kind": "rationals"}, "dim": 1, "unit": ["1"], "mul": [[0,0,0,"1"]]}"#;
        let a: AlgebraJson = serde_json::from_str(text).unwrap();
        let f = Field::prime(3).unwrap();
        assert_eq!(a.build(Some(f)).unwrap().field(), f);
    }
}
