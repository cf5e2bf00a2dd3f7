use crate::{CnfError, CnfFormula, Lit};

/// Parses DIMACS CNF text. Comment lines start with `c`; a `%` line (as found
/// in some benchmark sets) ends the input.
pub fn parse_dimacs(text: &str) -> Result<CnfFormula, CnfError> {
    let mut header: Option<(u32, usize)> = None;
    let mut clauses: Vec<Vec<Lit>> = Vec::new();
    let mut current: Vec<Lit> = Vec::new();
    let mut open = false;

    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('c') {
            continue;
        }
        if line.starts_with('%') {
            break;
        }
        if line.starts_with('p') {
            if header.is_some() {
                return Err(header_err(line_no, "duplicate header"));
            }
            header = Some(parse_header(line, line_no)?);
            continue;
        }
        let Some((num_vars, _)) = header else {
            return Err(CnfError::MissingHeader { line: line_no });
        };
        for token in line.split_whitespace() {
            let lit: Lit = token
                .parse()
                .map_err(|_| CnfError::BadLiteral { line: line_no, token: token.to_string() })?;
            if lit == 0 {
                clauses.push(std::mem::take(&mut current));
                open = false;
            } else {
                if lit.unsigned_abs() > num_vars {
                    return Err(CnfError::LiteralOutOfRange { lit, num_vars });
                }
                current.push(lit);
                open = true;
            }
        }
    }

    let Some((num_vars, declared)) = header else {
        return Err(header_err(0, "no `p cnf` line"));
    };
    if open {
        return Err(CnfError::MissingTerminator { index: clauses.len() });
    }
    if clauses.len() != declared {
        return Err(CnfError::ClauseCount { declared, found: clauses.len() });
    }
    CnfFormula::new(num_vars, clauses)
}

fn header_err(line: usize, reason: &str) -> CnfError {
    CnfError::Header { line, reason: reason.to_string() }
}

fn parse_header(line: &str, line_no: usize) -> Result<(u32, usize), CnfError> {
    let parts: Vec<&str> = line.split_whitespace().collect();
    if parts.len() != 4 || parts[0] != "p" || parts[1] != "cnf" {
        return Err(header_err(line_no, "expected `p cnf <vars> <clauses>`"));
    }
    let vars = parts[2].parse().map_err(|_| header_err(line_no, "bad variable count"))?;
    let clauses = parts[3].parse().map_err(|_| header_err(line_no, "bad clause count"))?;
    Ok((vars, clauses))
}
