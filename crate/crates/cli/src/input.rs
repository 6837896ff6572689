use std::fs;
use std::path::Path;

use chorded_spectra_core::enumerate::EnumerationLimits;
use chorded_spectra_core::families::{family, FamilySpec};
use chorded_spectra_core::graph6::graph6_decode;
use chorded_spectra_core::Graph;

use crate::commands::CliError;

/// Environment variable overriding the enumeration caps: either a bare edge
/// cap (`14`) or `edges=14,order=11`.
pub const CAP_ENV: &str = "CHORDED_SPECTRA_CAP";

pub fn graph_from_family(text: &str) -> Result<Graph, CliError> {
    let spec = FamilySpec::parse(text).map_err(|e| CliError::Usage(e.to_string()))?;
    family(&spec).map_err(|e| CliError::Usage(e.to_string()))
}

pub fn graph_from_graph6(text: &str) -> Result<Graph, CliError> {
    graph6_decode(text.trim()).map_err(|e| CliError::Usage(format!("bad graph6 {text:?}: {e}")))
}

/// Edge-list text: one `u v` pair per line, `#` starts a comment. A line
/// with a single integer `n` makes the graph have at least `n` vertices.
pub fn parse_edge_list(text: &str) -> Result<Graph, CliError> {
    let mut edges = Vec::new();
    let mut order = 0usize;
    for (lineno, line) in text.lines().enumerate() {
        let line = line.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let nums: Result<Vec<usize>, _> =
            line.split_whitespace().map(str::parse::<usize>).collect();
        let bad = || {
            CliError::Usage(format!(
                "edge list line {}: expected `u v` or `n`, got {line:?}",
                lineno + 1
            ))
        };
        match nums.map_err(|_| bad())?.as_slice() {
            [n] => order = order.max(*n),
            [u, v] => {
                order = order.max(u.max(v) + 1);
                edges.push((*u, *v));
            }
            _ => return Err(bad()),
        }
    }
    Graph::from_edges(order, &edges).map_err(|e| CliError::Usage(e.to_string()))
}

pub fn graph_from_edge_file(path: &Path) -> Result<Graph, CliError> {
    let text = fs::read_to_string(path)
        .map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))?;
    parse_edge_list(&text)
}

pub fn parse_caps(
    value: &str,
    mut limits: EnumerationLimits,
) -> Result<EnumerationLimits, CliError> {
    let bad = || {
        CliError::Usage(format!(
            "{CAP_ENV}: expected `N` or `edges=N,order=N`, got {value:?}"
        ))
    };
    let value = value.trim();
    if let Ok(edges) = value.parse::<usize>() {
        limits.max_edges = edges;
        return Ok(limits);
    }
    for part in value.split(',') {
        let (key, num) = part.split_once('=').ok_or_else(bad)?;
        let num: usize = num.trim().parse().map_err(|_| bad())?;
        match key.trim() {
            "edges" => limits.max_edges = num,
            "order" => limits.max_order = num,
            _ => return Err(bad()),
        }
    }
    Ok(limits)
}

/// Default caps, overridden by the environment when set.
pub fn limits_from_env() -> Result<EnumerationLimits, CliError> {
    match std::env::var(CAP_ENV) {
        Ok(v) => parse_caps(&v, EnumerationLimits::default()),
        Err(_) => Ok(EnumerationLimits::default()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn edge_lists() {
        let g = parse_edge_list("# triangle\n0 1\n1 2\n2 0\n\n5\n").unwrap();
        assert_eq!((g.order(), g.size()), (5, 3));
        assert!(parse_edge_list("0 1 2").is_err());
        assert!(parse_edge_list("0 0").is_err());
        assert!(parse_edge_list("a b").is_err());
    }

    #[test]
    fn caps() {
        let d = EnumerationLimits::default();
        assert_eq!(parse_caps("14", d).unwrap().max_edges, 14);
        let l = parse_caps("edges=13, order=11", d).unwrap();
        assert_eq!((l.max_edges, l.max_order), (13, 11));
        assert!(parse_caps("lots", d).is_err());
    }
}
