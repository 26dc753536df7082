//! Catalog files of permutation groups, one group per line:
//! `degree;label;gen1,gen2,...` with generators in cycle notation.
//! Blank lines and lines starting with `#` are ignored.

use super::group::GroupDesc;
use crate::error::{Error, Result};

const DEGREE4: &str = include_str!("../../data/degree4.cat");
const DEGREE6: &str = include_str!("../../data/degree6.cat");
const DEGREE8: &str = include_str!("../../data/degree8.cat");

/// Bundled transitive-group catalogs, keyed by degree.
pub fn bundled_catalog_text(degree: usize) -> Option<&'static str> {
    match degree {
        4 => Some(DEGREE4),
        6 => Some(DEGREE6),
        8 => Some(DEGREE8),
        _ => None,
    }
}

pub const BUNDLED_DEGREES: [usize; 3] = [4, 6, 8];

pub fn bundled_catalog(degree: usize) -> Option<Vec<GroupDesc>> {
    bundled_catalog_text(degree).map(|t| parse_catalog(t).expect("bundled catalog parses"))
}

pub fn parse_catalog(text: &str) -> Result<Vec<GroupDesc>> {
    let mut out = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let ctx = |e: Error| Error::Parse(format!("catalog line {}: {e}", lineno + 1));
        let mut parts = line.splitn(3, ';');
        let (Some(deg), Some(label), Some(gens)) = (parts.next(), parts.next(), parts.next())
        else {
            return Err(ctx(Error::Parse(
                "expected `degree;label;generators`".into(),
            )));
        };
        let degree: usize = deg
            .trim()
            .parse()
            .map_err(|_| ctx(Error::Parse(format!("bad degree `{deg}`"))))?;
        out.push(GroupDesc::parse(gens.trim(), Some(degree), label.trim()).map_err(ctx)?);
    }
    Ok(out)
}

pub fn format_catalog(groups: &[GroupDesc]) -> String {
    groups.iter().map(|g| format!("{g}\n")).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bundled_sizes() {
        assert_eq!(bundled_catalog(4).unwrap().len(), 5);
        assert_eq!(bundled_catalog(6).unwrap().len(), 16);
        assert_eq!(bundled_catalog(8).unwrap().len(), 50);
        assert!(bundled_catalog(10).is_none());
    }

    #[test]
    fn line_format() {
        let g = parse_catalog("# comment\n4;D4;(1 2 3 4),(1 3)\n\n").unwrap();
        assert_eq!(g.len(), 1);
        assert_eq!(g[0].label, "D4");
        assert_eq!(format_catalog(&g), "4;D4;(1 2 3 4),(1 3)\n");
        assert!(parse_catalog("4;D4").is_err());
        assert!(parse_catalog("x;D4;(1 2)").is_err());
        assert!(parse_catalog("4;D4;(1 5)").is_err());
    }
}
