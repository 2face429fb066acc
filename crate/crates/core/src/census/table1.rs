//! The involutions of Aut(D8) with their ω and Ω columns.

use crate::automorphism::involutory_automorphisms;
use crate::catalog::build_str;
use crate::error::{Error, Result};
use crate::gcs::alpha_partition;
use crate::group::{ElementSet, FiniteGroup};
use crate::notation::parse_alpha;

pub const TABLE1_GOLDEN: &str = include_str!("../../golden/table1.txt");

/// Row keys, in table order.
const ROWS: [&str; 5] =
    ["a->a, b->a^2b", "a->a^-1, b->b", "a->a^-1, b->ab", "a->a^-1, b->a^2b", "a->a^-1, b->a^3b"];

fn cell(g: &FiniteGroup, s: &ElementSet) -> String {
    if s.is_empty() {
        "∅".into()
    } else {
        g.format_set(s)
    }
}

/// Computes the table. Every non-identity involution must match exactly one
/// row key.
pub fn render_table1() -> Result<String> {
    let g = build_str("D8")?;
    let involutions = involutory_automorphisms(&g, false)?;
    let keyed = ROWS.iter().map(|k| parse_alpha(&g, k)).collect::<Result<Vec<_>>>()?;
    if involutions.len() != ROWS.len() || involutions.iter().any(|a| !keyed.contains(a)) {
        return Err(Error::Inconsistent(format!(
            "D8 has {} involutions, which do not match the {} table rows",
            involutions.len(),
            ROWS.len()
        )));
    }
    let mut out = String::from("involution | omega | Omega\n");
    for (key, alpha) in ROWS.iter().zip(&keyed) {
        let part = alpha_partition(&g, alpha)?;
        out += &format!("{key} | {} | {}\n", cell(&g, &part.omega), cell(&g, &part.big_omega));
    }
    Ok(out)
}

/// Renders the table and byte-compares it with the golden file.
pub fn reproduce_table1() -> Result<String> {
    let table = render_table1()?;
    if table == TABLE1_GOLDEN {
        return Ok(table);
    }
    let diff: Vec<String> = table
        .lines()
        .zip(TABLE1_GOLDEN.lines())
        .filter(|(a, b)| a != b)
        .map(|(a, b)| format!("computed `{a}`, golden `{b}`"))
        .collect();
    Err(Error::MismatchAgainstGolden(if diff.is_empty() { "line count differs".into() } else { diff.join("; ") }))
}
