//! Named built-in examples.
//!
//! Names: `matrix:<n>`, `group:<G>` and `group:<G>/<H>` for `G` in `C<n>`,
//! `S3`, `groupoid:pair:<n>` and `groupoid:pair:<n>xC<m>`, `sweedler4` and
//! `sweedler4/k[g]`, and `trivial:<algebra>` (`B = A`) or
//! `scalars:<algebra>` (`k ⊆ A`) for extensions.

use crate::algebra::{subgroup_extension, Extension, StructureAlgebra};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::groups::{Group, Groupoid};
use crate::hopf::{Bialgebra, HopfSubalgebra};

/// The names listed by the CLI.
pub const LISTED: &[&str] = &[
    "matrix:2",
    "matrix:3",
    "group:C2",
    "group:C3",
    "group:C4",
    "group:C4/C2",
    "group:S3",
    "group:S3/A3",
    "group:S3/C2",
    "group:C3/1",
    "group:S3/S3",
    "groupoid:pair:2xC2",
    "sweedler4",
    "sweedler4/k[g]",
    "trivial:matrix:2",
    "scalars:matrix:2",
];

fn unknown(name: &str) -> Error {
    Error::UnknownName(name.to_string())
}

fn group(name: &str, full: &str) -> Result<Group> {
    if name == "S3" {
        return Ok(Group::symmetric3());
    }
    match name.strip_prefix('C').and_then(|n| n.parse::<usize>().ok()) {
        Some(n) if n >= 1 => Ok(Group::cyclic(n)),
        _ => Err(unknown(full)),
    }
}

/// Elements of the named subgroup of `g`.
fn subgroup(g: &Group, gname: &str, sub: &str, full: &str) -> Result<Vec<usize>> {
    if sub == "1" {
        return Ok(vec![g.identity()]);
    }
    if sub == gname {
        return Ok((0..g.order()).collect());
    }
    if gname == "S3" {
        let gen = match sub {
            "A3" | "C3" => "(123)",
            "C2" => "(12)",
            _ => return Err(unknown(full)),
        };
        return Ok(g.closure(&[g.index_of(gen).expect("S3 element")]));
    }
    match sub.strip_prefix('C').and_then(|d| d.parse::<usize>().ok()) {
        Some(d) if d >= 1 && g.order().is_multiple_of(d) => Ok(g.closure(&[g.order() / d % g.order()])),
        _ => Err(unknown(full)),
    }
}

fn groupoid(desc: &str, full: &str) -> Result<Groupoid> {
    let rest = desc.strip_prefix("pair:").ok_or_else(|| unknown(full))?;
    let (n, m) = match rest.split_once("xC") {
        Some((n, m)) => (n.parse::<usize>(), m.parse::<usize>()),
        None => (rest.parse::<usize>(), Ok(1)),
    };
    match (n, m) {
        (Ok(n), Ok(m)) if n >= 1 && m >= 1 => Ok(Groupoid::pair_times_cyclic(n, m)),
        _ => Err(unknown(full)),
    }
}

/// A (weak) Hopf algebra by name.
pub fn hopf(name: &str, f: Field) -> Result<Bialgebra> {
    if name == "sweedler4" {
        return Ok(Bialgebra::sweedler(f));
    }
    if let Some(n) = name.strip_prefix("matrix:") {
        return match n.parse::<usize>() {
            Ok(n) if n >= 1 => Ok(Bialgebra::matrix(f, n)),
            _ => Err(unknown(name)),
        };
    }
    if let Some(g) = name.strip_prefix("group:") {
        return Ok(Bialgebra::group(f, &group(g, name)?));
    }
    if let Some(desc) = name.strip_prefix("groupoid:") {
        return Ok(Bialgebra::groupoid(f, &groupoid(desc, name)?));
    }
    Err(unknown(name))
}

pub fn algebra(name: &str, f: Field) -> Result<StructureAlgebra> {
    Ok(hopf(name, f)?.algebra)
}

/// A Hopf algebra with a Hopf subalgebra, `<hopf>/<sub>`.
pub fn hopf_pair(name: &str, f: Field) -> Result<(Bialgebra, HopfSubalgebra)> {
    if name == "sweedler4/k[g]" {
        let h = Bialgebra::sweedler(f);
        let k = HopfSubalgebra::from_basis(&h, &[0, 1])?;
        return Ok((h, k));
    }
    let rest = name.strip_prefix("group:").ok_or_else(|| unknown(name))?;
    let (gname, sub) = rest.split_once('/').ok_or_else(|| unknown(name))?;
    let g = group(gname, name)?;
    let elems = subgroup(&g, gname, sub, name)?;
    let h = Bialgebra::group(f, &g);
    let k = HopfSubalgebra::from_basis(&h, &elems)?;
    Ok((h, k))
}

/// Extensions: subgroup inclusions, `trivial:<algebra>`, `scalars:<algebra>`,
/// and a Hopf pair `H ⊇ K` read as an algebra extension.
pub fn extension(name: &str, f: Field) -> Result<Extension> {
    if let Some(a) = name.strip_prefix("trivial:") {
        return Extension::trivial(algebra(a, f)?);
    }
    if let Some(a) = name.strip_prefix("scalars:") {
        return Extension::over_scalars(algebra(a, f)?);
    }
    if let Some(rest) = name.strip_prefix("group:") {
        if let Some((gname, sub)) = rest.split_once('/') {
            let g = group(gname, name)?;
            return subgroup_extension(f, &g, &subgroup(&g, gname, sub, name)?);
        }
    }
    let (h, k) = hopf_pair(name, f)?;
    Extension::from_subalgebra(h.algebra.clone(), &k.subalgebra(&h)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: Field = Field::Rationals;

    #[test]
    fn listed_names_resolve() {
        for name in LISTED {
            let ok = hopf(name, Q).is_ok() || hopf_pair(name, Q).is_ok() || extension(name, Q).is_ok();
            assert!(ok, "{name}");
        }
    }

    #[test]
    fn dimensions() {
        assert_eq!(hopf("matrix:3", Q).unwrap().dim(), 9);
        assert_eq!(hopf("groupoid:pair:2xC2", Q).unwrap().dim(), 8);
        let (h, k) = hopf_pair("group:C4/C2", Q).unwrap();
        assert_eq!((h.dim(), k.dim()), (4, 2));
        let (_, k) = hopf_pair("group:S3/C2", Q).unwrap();
        assert_eq!(k.dim(), 2);
        assert_eq!(extension("group:S3/A3", Q).unwrap().b().dim(), 3);
        assert_eq!(extension("trivial:matrix:2", Q).unwrap().b().dim(), 4);
        assert_eq!(extension("sweedler4/k[g]", Q).unwrap().b().dim(), 2);
    }

    #[test]
    fn unknown_names() {
        for name in ["matrix:x", "group:D4", "group:C4/C3", "groupoid:cube", "nothing"] {
            assert!(matches!(hopf(name, Q).and(Ok(())).or_else(|_| extension(name, Q).map(|_| ())), Err(Error::UnknownName(_))), "{name}");
        }
    }
}
