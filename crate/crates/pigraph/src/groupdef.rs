//! The group-definition language and cycle-notation parsing.
//!
//! A definition file holds one definition matching the grammar
//!
//! ```text
//! def  := "cyclic" N | "abelian" N+ | "sym" N | "alt" N | "dihedral" N
//!       | "quaternion8" | "psl2" P
//!       | "product" "{" def ";" def "}"
//!       | "perm" N ":" gen ("," gen)*
//! gen  := cycle+                      one permutation, disjoint cycles
//! cycle := "(" point* ")"             points are 1-based, "( )" is allowed
//! ```
//!
//! Lines whose first non-blank character is `#` are comments; `#` also starts
//! a comment anywhere in a line. Points are 1-based in text and 0-based in
//! [`Permutation`] values.

use std::fmt;
use std::str::FromStr;

use crate::arith::is_prime;
use crate::perm::Permutation;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ParseError {
    #[error("{line}:{col}: {message}")]
    Syntax {
        line: usize,
        col: usize,
        message: String,
    },
    #[error("{line}:{col}: point {point} out of range 1..={degree}")]
    PointOutOfRange {
        line: usize,
        col: usize,
        point: usize,
        degree: usize,
    },
    #[error("{line}:{col}: point {point} repeated within one permutation")]
    RepeatedPoint {
        line: usize,
        col: usize,
        point: usize,
    },
    #[error("{line}:{col}: psl2 parameter {value} is not prime")]
    NotPrime {
        line: usize,
        col: usize,
        value: usize,
    },
    #[error("{line}:{col}: parameter must be at least 1")]
    ZeroParameter { line: usize, col: usize },
}

/// Constructor specification for a finite group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GroupSpec {
    Cyclic(usize),
    Abelian(Vec<usize>),
    Sym(usize),
    Alt(usize),
    Dihedral(usize),
    Quaternion8,
    Psl2(usize),
    Product(Box<GroupSpec>, Box<GroupSpec>),
    Perm {
        degree: usize,
        generators: Vec<Permutation>,
    },
}

impl fmt::Display for GroupSpec {
    /// The canonical printer; `parse ∘ print` is the identity.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupSpec::Cyclic(n) => write!(f, "cyclic {n}"),
            GroupSpec::Abelian(factors) => {
                write!(f, "abelian")?;
                for n in factors {
                    write!(f, " {n}")?;
                }
                Ok(())
            }
            GroupSpec::Sym(n) => write!(f, "sym {n}"),
            GroupSpec::Alt(n) => write!(f, "alt {n}"),
            GroupSpec::Dihedral(n) => write!(f, "dihedral {n}"),
            GroupSpec::Quaternion8 => write!(f, "quaternion8"),
            GroupSpec::Psl2(p) => write!(f, "psl2 {p}"),
            GroupSpec::Product(a, b) => write!(f, "product {{ {a} ; {b} }}"),
            GroupSpec::Perm { degree, generators } => {
                write!(f, "perm {degree} :")?;
                for (i, g) in generators.iter().enumerate() {
                    write!(f, "{}{g}", if i == 0 { " " } else { ", " })?;
                }
                Ok(())
            }
        }
    }
}

impl FromStr for GroupSpec {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, ParseError> {
        parse_group_definition(s)
    }
}

/// Parses a whole definition file (one definition, `#` comments allowed).
pub fn parse_group_definition(text: &str) -> Result<GroupSpec, ParseError> {
    let tokens = lex(text)?;
    let mut parser = Parser { tokens, pos: 0 };
    let spec = parser.definition()?;
    parser.expect_end()?;
    Ok(spec)
}

/// Parses one permutation in cycle notation over points `1..=degree`.
pub fn parse_permutation(text: &str, degree: usize) -> Result<Permutation, ParseError> {
    let tokens = lex(text)?;
    let mut parser = Parser { tokens, pos: 0 };
    let perm = parser.permutation(degree)?;
    parser.expect_end()?;
    Ok(perm)
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Word(String),
    Num(usize),
    LParen,
    RParen,
    LBrace,
    RBrace,
    Comma,
    Semi,
    Colon,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Word(w) => write!(f, "`{w}`"),
            Tok::Num(n) => write!(f, "`{n}`"),
            Tok::LParen => write!(f, "`(`"),
            Tok::RParen => write!(f, "`)`"),
            Tok::LBrace => write!(f, "`{{`"),
            Tok::RBrace => write!(f, "`}}`"),
            Tok::Comma => write!(f, "`,`"),
            Tok::Semi => write!(f, "`;`"),
            Tok::Colon => write!(f, "`:`"),
        }
    }
}

struct Spanned {
    tok: Tok,
    line: usize,
    col: usize,
}

fn lex(text: &str) -> Result<Vec<Spanned>, ParseError> {
    let mut out = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let line_no = lineno + 1;
        let mut chars = line.char_indices().peekable();
        while let Some(&(idx, c)) = chars.peek() {
            let col = idx + 1;
            match c {
                '#' => break,
                c if c.is_whitespace() => {
                    chars.next();
                }
                '(' | ')' | '{' | '}' | ',' | ';' | ':' => {
                    chars.next();
                    let tok = match c {
                        '(' => Tok::LParen,
                        ')' => Tok::RParen,
                        '{' => Tok::LBrace,
                        '}' => Tok::RBrace,
                        ',' => Tok::Comma,
                        ';' => Tok::Semi,
                        _ => Tok::Colon,
                    };
                    out.push(Spanned {
                        tok,
                        line: line_no,
                        col,
                    });
                }
                c if c.is_ascii_digit() => {
                    let mut text = String::new();
                    while let Some(&(_, d)) = chars.peek() {
                        if d.is_ascii_digit() {
                            text.push(d);
                            chars.next();
                        } else {
                            break;
                        }
                    }
                    let value = text.parse::<usize>().map_err(|_| ParseError::Syntax {
                        line: line_no,
                        col,
                        message: format!("number `{text}` is too large"),
                    })?;
                    out.push(Spanned {
                        tok: Tok::Num(value),
                        line: line_no,
                        col,
                    });
                }
                c if c.is_ascii_alphabetic() => {
                    let mut word = String::new();
                    while let Some(&(_, d)) = chars.peek() {
                        if d.is_ascii_alphanumeric() {
                            word.push(d);
                            chars.next();
                        } else {
                            break;
                        }
                    }
                    out.push(Spanned {
                        tok: Tok::Word(word),
                        line: line_no,
                        col,
                    });
                }
                c => {
                    return Err(ParseError::Syntax {
                        line: line_no,
                        col,
                        message: format!("unexpected character `{c}`"),
                    })
                }
            }
        }
    }
    Ok(out)
}

struct Parser {
    tokens: Vec<Spanned>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Spanned> {
        self.tokens.get(self.pos)
    }

    fn next(&mut self) -> Option<&Spanned> {
        let t = self.tokens.get(self.pos);
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn end_position(&self) -> (usize, usize) {
        self.tokens
            .last()
            .map(|t| (t.line, t.col + 1))
            .unwrap_or((1, 1))
    }

    fn syntax_here(&self, message: String) -> ParseError {
        let (line, col) = match self.peek() {
            Some(t) => (t.line, t.col),
            None => self.end_position(),
        };
        ParseError::Syntax { line, col, message }
    }

    fn expect(&mut self, want: Tok) -> Result<(), ParseError> {
        match self.peek() {
            Some(t) if t.tok == want => {
                self.pos += 1;
                Ok(())
            }
            Some(t) => Err(ParseError::Syntax {
                line: t.line,
                col: t.col,
                message: format!("expected {want}, found {}", t.tok),
            }),
            None => Err(self.syntax_here(format!("expected {want}, found end of input"))),
        }
    }

    fn expect_end(&self) -> Result<(), ParseError> {
        match self.peek() {
            None => Ok(()),
            Some(t) => Err(ParseError::Syntax {
                line: t.line,
                col: t.col,
                message: format!("unexpected trailing {}", t.tok),
            }),
        }
    }

    /// A number that must be at least 1.
    fn parameter(&mut self) -> Result<usize, ParseError> {
        match self.peek() {
            Some(t) => {
                if let Tok::Num(n) = t.tok {
                    let (line, col) = (t.line, t.col);
                    self.pos += 1;
                    if n == 0 {
                        Err(ParseError::ZeroParameter { line, col })
                    } else {
                        Ok(n)
                    }
                } else {
                    Err(ParseError::Syntax {
                        line: t.line,
                        col: t.col,
                        message: format!("expected a number, found {}", t.tok),
                    })
                }
            }
            None => Err(self.syntax_here("expected a number, found end of input".into())),
        }
    }

    fn definition(&mut self) -> Result<GroupSpec, ParseError> {
        let head = match self.next() {
            Some(t) => t,
            None => return Err(self.syntax_here("expected a group definition".into())),
        };
        let (line, col) = (head.line, head.col);
        let word = match &head.tok {
            Tok::Word(w) => w.clone(),
            other => {
                return Err(ParseError::Syntax {
                    line,
                    col,
                    message: format!("expected a definition keyword, found {other}"),
                })
            }
        };
        match word.as_str() {
            "cyclic" => Ok(GroupSpec::Cyclic(self.parameter()?)),
            "sym" => Ok(GroupSpec::Sym(self.parameter()?)),
            "alt" => Ok(GroupSpec::Alt(self.parameter()?)),
            "dihedral" => Ok(GroupSpec::Dihedral(self.parameter()?)),
            "quaternion8" => Ok(GroupSpec::Quaternion8),
            "abelian" => {
                let mut factors = vec![self.parameter()?];
                while matches!(self.peek(), Some(t) if matches!(t.tok, Tok::Num(_))) {
                    factors.push(self.parameter()?);
                }
                Ok(GroupSpec::Abelian(factors))
            }
            "psl2" => {
                let at = self.peek().map(|t| (t.line, t.col));
                let p = self.parameter()?;
                if !is_prime(p) {
                    let (line, col) = at.unwrap();
                    return Err(ParseError::NotPrime {
                        line,
                        col,
                        value: p,
                    });
                }
                Ok(GroupSpec::Psl2(p))
            }
            "product" => {
                self.expect(Tok::LBrace)?;
                let a = self.definition()?;
                self.expect(Tok::Semi)?;
                let b = self.definition()?;
                self.expect(Tok::RBrace)?;
                Ok(GroupSpec::Product(Box::new(a), Box::new(b)))
            }
            "perm" => {
                let degree = self.parameter()?;
                self.expect(Tok::Colon)?;
                let mut generators = vec![self.permutation(degree)?];
                while matches!(self.peek(), Some(t) if t.tok == Tok::Comma) {
                    self.pos += 1;
                    generators.push(self.permutation(degree)?);
                }
                Ok(GroupSpec::Perm { degree, generators })
            }
            other => Err(ParseError::Syntax {
                line,
                col,
                message: format!("unknown definition keyword `{other}`"),
            }),
        }
    }

    /// One permutation: a run of parenthesized cycles with disjoint points.
    fn permutation(&mut self, degree: usize) -> Result<Permutation, ParseError> {
        let mut cycles: Vec<Vec<usize>> = Vec::new();
        let mut seen = vec![false; degree];
        self.expect(Tok::LParen)?;
        loop {
            let mut cycle = Vec::new();
            loop {
                match self.peek() {
                    Some(t) => match t.tok {
                        Tok::Num(point) => {
                            let (line, col) = (t.line, t.col);
                            self.pos += 1;
                            if point == 0 || point > degree {
                                return Err(ParseError::PointOutOfRange {
                                    line,
                                    col,
                                    point,
                                    degree,
                                });
                            }
                            if seen[point - 1] {
                                return Err(ParseError::RepeatedPoint { line, col, point });
                            }
                            seen[point - 1] = true;
                            cycle.push(point - 1);
                        }
                        Tok::RParen => {
                            self.pos += 1;
                            break;
                        }
                        ref other => {
                            return Err(ParseError::Syntax {
                                line: t.line,
                                col: t.col,
                                message: format!("expected a point or `)`, found {other}"),
                            })
                        }
                    },
                    None => {
                        return Err(self.syntax_here("unclosed cycle: expected `)`".into()));
                    }
                }
            }
            if !cycle.is_empty() {
                cycles.push(cycle);
            }
            if matches!(self.peek(), Some(t) if t.tok == Tok::LParen) {
                self.pos += 1;
            } else {
                break;
            }
        }
        Ok(Permutation::from_cycles(degree, &cycles))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_single_transposition() {
        let p = parse_permutation("(1 2)", 3).unwrap();
        assert_eq!(p.images(), &[1, 0, 2]);
    }

    #[test]
    fn parses_disjoint_cycle_product() {
        let p = parse_permutation("(1 2 3)(4 5)", 5).unwrap();
        assert_eq!(p.images(), &[1, 2, 0, 4, 3]);
        // Order is lcm(3, 2) = 6: composing repeatedly returns to identity.
        let mut q = p.clone();
        let mut order = 1;
        while !q.is_identity() {
            q = q.compose(&p);
            order += 1;
        }
        assert_eq!(order, 6);
    }

    #[test]
    fn empty_cycle_is_identity() {
        let p = parse_permutation("()", 4).unwrap();
        assert!(p.is_identity());
        assert_eq!(p.degree(), 4);
    }

    #[test]
    fn rejects_bad_points() {
        assert!(matches!(
            parse_permutation("(1 4)", 3),
            Err(ParseError::PointOutOfRange { point: 4, .. })
        ));
        assert!(matches!(
            parse_permutation("(0 1)", 3),
            Err(ParseError::PointOutOfRange { point: 0, .. })
        ));
        assert!(matches!(
            parse_permutation("(1 2)(2 3)", 3),
            Err(ParseError::RepeatedPoint { point: 2, .. })
        ));
        assert!(matches!(
            parse_permutation("(1 2", 3),
            Err(ParseError::Syntax { .. })
        ));
    }

    #[test]
    fn parses_simple_definitions() {
        assert_eq!(
            parse_group_definition("cyclic 12").unwrap(),
            GroupSpec::Cyclic(12)
        );
        assert_eq!(parse_group_definition("alt 6").unwrap(), GroupSpec::Alt(6));
        assert_eq!(
            parse_group_definition("abelian 2 3 4").unwrap(),
            GroupSpec::Abelian(vec![2, 3, 4])
        );
        assert_eq!(
            parse_group_definition("product { cyclic 2 ; cyclic 2 }").unwrap(),
            GroupSpec::Product(
                Box::new(GroupSpec::Cyclic(2)),
                Box::new(GroupSpec::Cyclic(2))
            )
        );
    }

    #[test]
    fn parses_perm_definition_with_comments() {
        let text = "# the Klein four-group on 4 points\nperm 4 : (1 2), (3 4)\n";
        let spec = parse_group_definition(text).unwrap();
        match &spec {
            GroupSpec::Perm { degree, generators } => {
                assert_eq!(*degree, 4);
                assert_eq!(generators.len(), 2);
            }
            other => panic!("unexpected spec {other}"),
        }
    }

    #[test]
    fn trivial_group_via_empty_cycle() {
        let spec = parse_group_definition("perm 1 : ()").unwrap();
        match spec {
            GroupSpec::Perm { degree, generators } => {
                assert_eq!(degree, 1);
                assert!(generators[0].is_identity());
            }
            other => panic!("unexpected spec {other}"),
        }
    }

    #[test]
    fn reports_positions() {
        let err = parse_group_definition("product { cyclic 2 ;\n  cyclic }").unwrap_err();
        match err {
            ParseError::Syntax { line, col, .. } => {
                assert_eq!(line, 2);
                assert_eq!(col, 10);
            }
            other => panic!("unexpected error {other}"),
        }
    }

    #[test]
    fn validates_parameters() {
        assert!(matches!(
            parse_group_definition("cyclic 0"),
            Err(ParseError::ZeroParameter { .. })
        ));
        assert!(matches!(
            parse_group_definition("psl2 6"),
            Err(ParseError::NotPrime { value: 6, .. })
        ));
        assert!(matches!(
            parse_group_definition("abelian"),
            Err(ParseError::Syntax { .. })
        ));
    }

    #[test]
    fn printer_round_trips() {
        for text in [
            "cyclic 12",
            "abelian 2 3 4",
            "sym 5",
            "alt 6",
            "dihedral 7",
            "quaternion8",
            "psl2 7",
            "product { sym 3 ; cyclic 4 }",
            "product { product { cyclic 2 ; cyclic 3 } ; alt 4 }",
            "perm 5 : (1 2 3)(4 5), (1 4)",
            "perm 1 : ()",
        ] {
            let spec = parse_group_definition(text).unwrap();
            let printed = spec.to_string();
            assert_eq!(parse_group_definition(&printed).unwrap(), spec);
        }
    }
}
