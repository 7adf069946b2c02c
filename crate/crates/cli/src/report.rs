use std::collections::BTreeMap;
use std::fmt::Write;

/// Vertex counts shown as table columns, up to the largest one present.
/// Simple 3-polytopes have an even number of vertices, so odd columns are
/// dropped there.
fn columns(dim: usize, hist: &BTreeMap<usize, usize>) -> Vec<usize> {
    let last = hist.keys().next_back().copied().unwrap_or(dim + 1);
    (dim + 1..=last).filter(|v| dim != 3 || v % 2 == 0).collect()
}

/// Two-row table of class counts per vertex count, closed by a `>=` column.
pub fn histogram_table(dim: usize, hist: &BTreeMap<usize, usize>) -> String {
    let cols = columns(dim, hist);
    let label = if dim == 2 { "Polygons" } else { "Polytopes" };
    let overflow = cols.last().map_or(dim + 1, |&c| c + if dim == 3 { 2 } else { 1 });
    let beyond: usize = hist.range(overflow..).map(|(_, n)| n).sum();

    let mut head = vec!["Vertices".to_string()];
    let mut body = vec![label.to_string()];
    for c in &cols {
        head.push(c.to_string());
        body.push(hist.get(c).copied().unwrap_or(0).to_string());
    }
    head.push(format!(">={overflow}"));
    body.push(beyond.to_string());

    let widths: Vec<usize> = head.iter().zip(&body).map(|(a, b)| a.len().max(b.len())).collect();
    let mut out = String::new();
    for row in [&head, &body] {
        let cells: Vec<String> = row.iter().zip(&widths).enumerate().map(|(i, (s, w))| {
            if i == 0 { format!("{s:<w$}") } else { format!("{s:>w$}") }
        }).collect();
        writeln!(out, "{} | {}", cells[0], cells[1..].join(" ")).unwrap();
    }
    out
}

/// `v:count` pairs from the smallest to the largest vertex count present,
/// skipping odd counts in dimension 3.
pub fn histogram_line(dim: usize, hist: &BTreeMap<usize, usize>) -> String {
    hist.iter()
        .filter(|(v, _)| dim != 3 || *v % 2 == 0)
        .map(|(v, n)| format!("{v}:{n}"))
        .collect::<Vec<_>>()
        .join(" ")
}

pub fn yes_no(b: bool) -> &'static str {
    if b { "yes" } else { "no" }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn polygon_table_shape() {
        let hist: BTreeMap<usize, usize> = [(3, 3), (4, 30), (5, 3), (6, 4), (7, 0), (8, 1)].into_iter().collect();
        assert_eq!(histogram_line(2, &hist), "3:3 4:30 5:3 6:4 7:0 8:1");
        let t = histogram_table(2, &hist);
        assert_eq!(t, "Vertices | 3  4 5 6 7 8 >=9\nPolygons | 3 30 3 4 0 1   0\n");
    }

    #[test]
    fn polytope_table_drops_odd_columns() {
        let hist: BTreeMap<usize, usize> = [(4, 2), (5, 0), (6, 25), (7, 0), (8, 6)].into_iter().collect();
        assert_eq!(histogram_line(3, &hist), "4:2 6:25 8:6");
        let t = histogram_table(3, &hist);
        assert_eq!(t, "Vertices  | 4  6 8 >=10\nPolytopes | 2 25 6    0\n");
    }
}
