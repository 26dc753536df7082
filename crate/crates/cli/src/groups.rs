use std::path::Path;

use clap::Subcommand;
use serde_json::json;

use crate::io::read_file;
use crate::outcome::{Outcome, SUCCESS};
use crate::Globals;
use sosq_core::permgroup::catalog::bundled_catalog_text;
use sosq_core::permgroup::perm::max_point;
use sosq_core::permgroup::{
    char_number, classify, classify_catalog, parse_catalog, GroupDesc, Perm, TableRow,
};
use sosq_core::{Error, Result};

#[derive(Subcommand, Debug)]
pub enum GroupsCmd {
    /// Classify one group, or every group of a catalog.
    Classify {
        /// Generators in cycle notation, e.g. "(1 2 3 4),(1 3)".
        #[arg(long, conflicts_with = "catalog")]
        gens: Option<String>,
        /// Degree; defaults to the largest point named.
        #[arg(long)]
        degree: Option<usize>,
        #[arg(long, default_value = "G")]
        label: String,
        /// Catalog file `degree;label;gens` per line.
        #[arg(long)]
        catalog: Option<String>,
    },
    /// The characteristic number c(G, X, t) and conditions (*), (**).
    CharNumber {
        #[arg(long)]
        gens: Option<String>,
        /// The fixed-point-free involution t.
        #[arg(long)]
        inv: String,
        #[arg(long)]
        degree: Option<usize>,
    },
    /// Column counts of the transitive groups of each degree.
    ///
    /// `--catalog degreeN.cat` falls back to the bundled catalog for
    /// N = 4, 6, 8 when no such file exists. Without `--catalog` all bundled
    /// degrees are tabulated.
    Table {
        #[arg(long)]
        catalog: Option<String>,
        /// Structured records instead of aligned text.
        #[arg(long)]
        json: bool,
    },
}

pub fn run(cmd: GroupsCmd, g: Globals) -> Result<Outcome> {
    match cmd {
        GroupsCmd::Classify {
            gens,
            degree,
            label,
            catalog,
        } => {
            let groups = match (gens, catalog) {
                (Some(gens), _) => vec![GroupDesc::parse(&gens, degree, &label)?],
                (None, Some(c)) => load_catalog(&c)?,
                (None, None) => return Err(Error::Parse("give --gens or --catalog".into())),
            };
            let mut out = Vec::new();
            for grp in &groups {
                out.push(classify(grp, g.enum_bound)?.to_string());
            }
            Ok(Outcome::new(SUCCESS, out.join("\n\n")))
        }
        GroupsCmd::CharNumber { gens, inv, degree } => {
            let deg =
                degree.unwrap_or_else(|| max_point(&inv).max(gens.as_deref().map_or(0, max_point)));
            let t = Perm::parse(&inv, deg)?;
            if !t.is_involution() {
                return Err(Error::NotInvolution);
            }
            let gens = gens.ok_or_else(|| Error::Parse("--gens is required".into()))?;
            let group = GroupDesc::parse(&gens, Some(deg), "G")?;
            Ok(Outcome::new(
                SUCCESS,
                char_number(&group, &t, g.enum_bound)?.to_string(),
            ))
        }
        GroupsCmd::Table { catalog, json } => {
            let catalogs = match catalog {
                Some(c) => vec![load_catalog(&c)?],
                None => [4, 6, 8]
                    .iter()
                    .map(|&d| parse_catalog(bundled_catalog_text(d).unwrap()))
                    .collect::<Result<_>>()?,
            };
            let mut rows = Vec::new();
            for cat in &catalogs {
                let mut degrees: Vec<usize> = cat.iter().map(|grp| grp.degree).collect();
                degrees.sort_unstable();
                degrees.dedup();
                for d in degrees {
                    let row = classify_catalog(cat, d, g.enum_bound);
                    if let Some((label, e)) = row.failures.first() {
                        return Err(Error::Parse(format!("{label}: {e}")));
                    }
                    rows.push(row);
                }
            }
            Ok(Outcome::new(
                SUCCESS,
                if json {
                    table_json(&rows)
                } else {
                    table_text(&rows)
                },
            ))
        }
    }
}

fn load_catalog(arg: &str) -> Result<Vec<GroupDesc>> {
    if !Path::new(arg).exists() {
        let name = Path::new(arg)
            .file_name()
            .and_then(|s| s.to_str())
            .unwrap_or("");
        let bundled = name
            .strip_prefix("degree")
            .and_then(|s| s.strip_suffix(".cat"))
            .and_then(|s| s.parse().ok())
            .and_then(bundled_catalog_text);
        if let Some(text) = bundled {
            return parse_catalog(text);
        }
    }
    parse_catalog(&read_file(arg)?)
}

fn table_text(rows: &[TableRow]) -> String {
    let mut out = vec![" n  (1) (2) (3) (4)".to_string()];
    out.extend(rows.iter().map(TableRow::aligned));
    for row in rows {
        out.push(String::new());
        out.push(format!(
            "degree {}: {} ({} catalog entries)",
            row.degree, row, row.entries
        ));
        for (k, labels) in row.labels.iter().enumerate().skip(2) {
            if !labels.is_empty() {
                out.push(format!("  column ({}): {}", k + 1, labels.join(", ")));
            }
        }
        if !row.intransitive.is_empty() {
            out.push(format!(
                "  intransitive entries: {}",
                row.intransitive.join(", ")
            ));
        }
    }
    out.join("\n")
}

fn table_json(rows: &[TableRow]) -> String {
    let records: Vec<_> = rows
        .iter()
        .map(|r| {
            json!({
                "degree": r.degree,
                "counts": r.counts,
                "labels": r.labels,
                "entries": r.entries,
            })
        })
        .collect();
    serde_json::to_string_pretty(&records).expect("serializable")
}
