use std::collections::BTreeSet;
use std::fmt::Write as _;

use crate::{TdError, TreeDecomposition};

/// Parses the PACE 2017 `.td` format. Bag `1` becomes the root.
pub fn parse_td(text: &str) -> Result<TreeDecomposition, TdError> {
    let mut header: Option<(usize, usize, u32)> = None;
    let mut bags: Vec<Option<BTreeSet<u32>>> = Vec::new();
    let mut edges = Vec::new();

    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('c') {
            continue;
        }
        let tokens: Vec<&str> = line.split_whitespace().collect();
        let nums = |from: usize| -> Result<Vec<usize>, TdError> {
            tokens[from..]
                .iter()
                .map(|t| {
                    t.parse::<usize>().map_err(|_| TdError::Syntax {
                        line: line_no,
                        reason: format!("expected a number, found `{t}`"),
                    })
                })
                .collect()
        };
        match tokens[0] {
            "s" => {
                if tokens.len() != 5 || tokens[1] != "td" || header.is_some() {
                    return Err(TdError::Syntax {
                        line: line_no,
                        reason: "expected a single `s td <bags> <width+1> <vertices>`".into(),
                    });
                }
                let v = nums(2)?;
                header = Some((v[0], v[1], v[2] as u32));
                bags = vec![None; v[0]];
            }
            "b" => {
                let (count, max_size, num_vertices) = header.ok_or_else(|| TdError::Syntax {
                    line: line_no,
                    reason: "bag before header".into(),
                })?;
                let v = nums(1)?;
                let id = *v.first().ok_or_else(|| TdError::Syntax {
                    line: line_no,
                    reason: "missing bag id".into(),
                })?;
                if id == 0 || id > count {
                    return Err(TdError::BagOutOfRange { id, count });
                }
                let mut bag = BTreeSet::new();
                for &x in &v[1..] {
                    let x = x as u32;
                    if x == 0 || x > num_vertices {
                        return Err(TdError::VertexOutOfRange { vertex: x, count: num_vertices });
                    }
                    bag.insert(x);
                }
                if bag.len() > max_size {
                    return Err(TdError::Header(format!(
                        "bag {id} has {} vertices, header allows {max_size}",
                        bag.len()
                    )));
                }
                if bags[id - 1].replace(bag).is_some() {
                    return Err(TdError::Syntax { line: line_no, reason: format!("bag {id} repeated") });
                }
            }
            _ => {
                let (count, _, _) = header.ok_or_else(|| TdError::Syntax {
                    line: line_no,
                    reason: "edge before header".into(),
                })?;
                let v = nums(0)?;
                if v.len() != 2 {
                    return Err(TdError::Syntax { line: line_no, reason: "edge needs two ids".into() });
                }
                for &id in &v {
                    if id == 0 || id > count {
                        return Err(TdError::BagOutOfRange { id, count });
                    }
                }
                edges.push((v[0] - 1, v[1] - 1));
            }
        }
    }

    let Some((count, _, _)) = header else {
        return Err(TdError::Header("missing `s td` line".into()));
    };
    let bags: Vec<BTreeSet<u32>> = bags
        .into_iter()
        .enumerate()
        .map(|(i, b)| b.ok_or_else(|| TdError::Header(format!("bag {} of {count} missing", i + 1))))
        .collect::<Result<_, _>>()?;
    TreeDecomposition::from_edges(bags, &edges, 0)
}

/// Writes PACE `.td` text. Node `t` becomes bag `t+1`; `num_vertices` is the
/// vertex count of the decomposed graph.
pub fn emit_td(td: &TreeDecomposition, num_vertices: u32) -> String {
    let mut out = format!("s td {} {} {}\n", td.len(), td.max_bag_size(), num_vertices);
    for (t, bag) in td.bags().iter().enumerate() {
        let _ = write!(out, "b {}", t + 1);
        for v in bag {
            let _ = write!(out, " {v}");
        }
        out.push('\n');
    }
    let mut edges = td.edges();
    edges.sort_unstable();
    for (p, c) in edges {
        let _ = writeln!(out, "{} {}", p + 1, c + 1);
    }
    out
}
