//! Input parsing: the edge-list file format and the family DSL.
//!
//! Edge-list grammar: the first non-comment line is `n m`, followed by m
//! lines `u v` with 0-based labels; `#` starts a comment anywhere on a
//! line; tokens are whitespace-separated.
//!
//! Family DSL: `P(7)`, `C(9)`, `W(6)`, `K(5)`, `S(3)`, `Kb(2,5)`,
//! `Km(2,2,2)`, `CP(3)`, `F(4)`, `B(3)`, `E(4)`, `M(3)`, and the operator
//! forms `join(A,B)`, `corona(A,B)`, `cart(A,B)`, `union(A,B)`,
//! `comp(A)`. Whitespace-insensitive, tags case-sensitive.

use std::fmt;

use sdstab_core::{FamilySpec, Graph};

#[derive(Debug, PartialEq, Eq)]
pub struct EdgeListError {
    pub line: usize,
    pub message: String,
}

impl fmt::Display for EdgeListError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}: {}", self.line, self.message)
    }
}

fn edge_err(line: usize, message: impl Into<String>) -> EdgeListError {
    EdgeListError {
        line,
        message: message.into(),
    }
}

pub fn parse_edge_list(input: &str) -> Result<Graph, EdgeListError> {
    // (1-based line number, content with comments stripped)
    let mut rows = input
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());

    let (header_line, header) = rows
        .next()
        .ok_or_else(|| edge_err(1, "missing header line \"n m\""))?;
    let mut parts = header.split_whitespace();
    let n: usize = parts
        .next()
        .and_then(|t| t.parse().ok())
        .ok_or_else(|| edge_err(header_line, "malformed header: expected \"n m\""))?;
    let m: usize = parts
        .next()
        .and_then(|t| t.parse().ok())
        .ok_or_else(|| edge_err(header_line, "malformed header: expected \"n m\""))?;
    if parts.next().is_some() {
        return Err(edge_err(header_line, "malformed header: trailing tokens"));
    }
    if n == 0 {
        return Err(edge_err(header_line, "graph must have at least one vertex"));
    }

    let mut edges = Vec::with_capacity(m);
    let mut last_line = header_line;
    for (line, row) in rows {
        if edges.len() == m {
            return Err(edge_err(line, format!("more than {m} edge lines")));
        }
        let mut toks = row.split_whitespace();
        let u: usize = toks
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| edge_err(line, "malformed edge: expected \"u v\""))?;
        let v: usize = toks
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| edge_err(line, "malformed edge: expected \"u v\""))?;
        if toks.next().is_some() {
            return Err(edge_err(line, "malformed edge: trailing tokens"));
        }
        if u >= n || v >= n {
            return Err(edge_err(
                line,
                format!("label out of range: {} not in 0..{n}", u.max(v)),
            ));
        }
        if u == v {
            return Err(edge_err(line, format!("self-loop ({u},{v}) is not allowed")));
        }
        edges.push((u, v));
        last_line = line;
    }
    if edges.len() != m {
        return Err(edge_err(
            last_line,
            format!("expected {m} edge lines, found {}", edges.len()),
        ));
    }
    Graph::new(n, &edges).map_err(|e| edge_err(header_line, e.to_string()))
}

/// Renders a graph back into the edge-list format (edges sorted, u < v).
pub fn render_edge_list(g: &Graph) -> String {
    let edges = g.edges();
    let mut out = format!("{} {}\n", g.order(), edges.len());
    for (u, v) in edges {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

#[derive(Debug, PartialEq, Eq)]
pub struct DslError {
    pub position: usize,
    pub message: String,
}

impl fmt::Display for DslError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "parse error at position {}: {}", self.position, self.message)
    }
}

struct DslParser<'a> {
    input: &'a [u8],
    pos: usize,
}

impl<'a> DslParser<'a> {
    fn err(&self, message: impl Into<String>) -> DslError {
        DslError {
            position: self.pos,
            message: message.into(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.input.len() && self.input[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.input.get(self.pos).copied()
    }

    fn expect(&mut self, c: u8) -> Result<(), DslError> {
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.err(format!("expected '{}'", c as char)))
        }
    }

    fn ident(&mut self) -> Result<&'a str, DslError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.input.len() && self.input[self.pos].is_ascii_alphabetic() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected a family or operator tag"));
        }
        Ok(std::str::from_utf8(&self.input[start..self.pos]).expect("ascii"))
    }

    fn number(&mut self) -> Result<usize, DslError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.input.len() && self.input[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected a number"));
        }
        std::str::from_utf8(&self.input[start..self.pos])
            .expect("ascii")
            .parse()
            .map_err(|_| self.err("number too large"))
    }

    fn numbers(&mut self) -> Result<Vec<usize>, DslError> {
        let mut out = vec![self.number()?];
        while self.peek() == Some(b',') {
            self.pos += 1;
            out.push(self.number()?);
        }
        Ok(out)
    }

    fn spec(&mut self) -> Result<FamilySpec, DslError> {
        let tag_pos = self.pos;
        let tag = self.ident()?;
        self.expect(b'(')?;
        let spec = match tag {
            "P" => FamilySpec::Path(self.number()?),
            "C" => FamilySpec::Cycle(self.number()?),
            "W" => FamilySpec::Wheel(self.number()?),
            "K" => FamilySpec::Complete(self.number()?),
            "S" => FamilySpec::Star(self.number()?),
            "E" => FamilySpec::Empty(self.number()?),
            "M" => FamilySpec::Matching(self.number()?),
            "F" => FamilySpec::Friendship(self.number()?),
            "B" => FamilySpec::Book(self.number()?),
            "CP" => FamilySpec::CocktailParty(self.number()?),
            "Kb" => {
                let m = self.number()?;
                self.expect(b',')?;
                let n = self.number()?;
                FamilySpec::CompleteBipartite(m, n)
            }
            "Km" => FamilySpec::CompleteMultipartite(self.numbers()?),
            "join" => {
                let (a, b) = self.spec_pair()?;
                FamilySpec::Join(Box::new(a), Box::new(b))
            }
            "corona" => {
                let (a, b) = self.spec_pair()?;
                FamilySpec::Corona(Box::new(a), Box::new(b))
            }
            "cart" => {
                let (a, b) = self.spec_pair()?;
                FamilySpec::Cartesian(Box::new(a), Box::new(b))
            }
            "union" => {
                let (a, b) = self.spec_pair()?;
                FamilySpec::Union(Box::new(a), Box::new(b))
            }
            "comp" => FamilySpec::Complement(Box::new(self.spec()?)),
            other => {
                return Err(DslError {
                    position: tag_pos,
                    message: format!("unknown tag {other:?} (tags are case-sensitive)"),
                })
            }
        };
        self.expect(b')')?;
        Ok(spec)
    }

    fn spec_pair(&mut self) -> Result<(FamilySpec, FamilySpec), DslError> {
        let a = self.spec()?;
        self.expect(b',')?;
        let b = self.spec()?;
        Ok((a, b))
    }
}

pub fn parse_family_dsl(input: &str) -> Result<FamilySpec, DslError> {
    let mut p = DslParser {
        input: input.as_bytes(),
        pos: 0,
    };
    let spec = p.spec()?;
    if p.peek().is_some() {
        return Err(p.err("unexpected trailing input"));
    }
    Ok(spec)
}

#[cfg(test)]
mod tests {
    use super::*;
    use sdstab_core::build;

    #[test]
    fn edge_list_p3() {
        let g = parse_edge_list("3 2\n0 1\n1 2").unwrap();
        assert_eq!(g.order(), 3);
        assert_eq!(g.edges(), vec![(0, 1), (1, 2)]);
    }

    #[test]
    fn edge_list_k1() {
        let g = parse_edge_list("1 0").unwrap();
        assert_eq!((g.order(), g.edge_count()), (1, 0));
    }

    #[test]
    fn edge_list_self_loop_reports_line() {
        let e = parse_edge_list("2 1\n0 0").unwrap_err();
        assert_eq!(e.line, 2);
        assert!(e.message.contains("self-loop"));
    }

    #[test]
    fn edge_list_errors() {
        assert!(parse_edge_list("").unwrap_err().message.contains("header"));
        assert!(parse_edge_list("x y").unwrap_err().message.contains("malformed header"));
        let e = parse_edge_list("3 2\n0 1").unwrap_err();
        assert!(e.message.contains("expected 2 edge lines"));
        let e = parse_edge_list("3 1\n0 1\n1 2").unwrap_err();
        assert_eq!(e.line, 3);
        let e = parse_edge_list("2 1\n0 5").unwrap_err();
        assert!(e.message.contains("out of range"));
    }

    #[test]
    fn edge_list_comments_and_blanks() {
        let g = parse_edge_list("# a graph\n3 2 # header\n\n0 1\n# middle\n1 2\n").unwrap();
        assert_eq!(g.edge_count(), 2);
    }

    #[test]
    fn edge_list_round_trip() {
        let text = "4 3\n0 1\n1 2\n2 3\n";
        let g = parse_edge_list(text).unwrap();
        assert_eq!(render_edge_list(&g), text);
        let again = parse_edge_list(&render_edge_list(&g)).unwrap();
        assert!(again.same_edges(&g));
    }

    #[test]
    fn dsl_wheel_as_join() {
        let spec = parse_family_dsl("join(K(1),C(5))").unwrap();
        let g = build(&spec).unwrap();
        let w6 = build(&parse_family_dsl("W(6)").unwrap()).unwrap();
        assert!(g.same_edges(&w6));
    }

    #[test]
    fn dsl_book_as_product() {
        let spec = parse_family_dsl("cart(S(2),P(2))").unwrap();
        let g = build(&spec).unwrap();
        let b2 = build(&parse_family_dsl("B(2)").unwrap()).unwrap();
        assert!(g.same_edges(&b2));
    }

    #[test]
    fn dsl_whitespace_insensitive() {
        let a = parse_family_dsl("  corona( P(2) , E(2) ) ").unwrap();
        let b = parse_family_dsl("corona(P(2),E(2))").unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn dsl_case_sensitive_tags() {
        assert!(parse_family_dsl("p(3)").is_err());
        assert!(parse_family_dsl("cp(3)").is_err());
        assert!(parse_family_dsl("CP(3)").is_ok());
    }

    #[test]
    fn dsl_multipartite() {
        let spec = parse_family_dsl("Km(2,2,2)").unwrap();
        assert_eq!(spec, FamilySpec::CompleteMultipartite(vec![2, 2, 2]));
    }

    #[test]
    fn dsl_validity_error_surfaces_from_build() {
        let spec = parse_family_dsl("C(2)").unwrap();
        assert!(build(&spec).is_err());
    }

    #[test]
    fn dsl_error_positions() {
        let e = parse_family_dsl("join(K(1)C(5))").unwrap_err();
        assert!(e.position > 0 && e.message.contains("','"));
        assert!(parse_family_dsl("P(3) extra").is_err());
        assert!(parse_family_dsl("P()").is_err());
    }
}
