//! Recursive-descent parser for scenario text. Deterministic, no partial
//! results: the first error aborts the parse. Expression nesting is capped
//! at depth 64.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::algebra_core::rat::Rat;

use super::ast::{
    Assertion, BoolExpr, ClassDef, ConeDef, ConeExpr, Expr, Pos, RingDef, SConeExpr, SExpr,
    SName, ScenarioAst, Spanned, Statement,
};
use super::lex::{is_keyword, lex, TokKind, Token};
use super::ParseError;

const MAX_DEPTH: usize = 64;

/// Parses a full scenario.
pub fn parse(text: &str) -> Result<ScenarioAst, ParseError> {
    let tokens = lex(text)?;
    let mut parser = Parser {
        tokens,
        index: 0,
        depth: 0,
    };
    let mut statements = Vec::new();
    while parser.peek().is_some() {
        statements.push(parser.statement()?);
    }
    Ok(ScenarioAst { statements })
}

/// Parses a standalone expression (the whole input must be consumed).
pub fn parse_expr_text(text: &str) -> Result<SExpr, ParseError> {
    let tokens = lex(text)?;
    let mut parser = Parser {
        tokens,
        index: 0,
        depth: 0,
    };
    let expr = parser.expr()?;
    if parser.peek().is_some() {
        return Err(parser.err_here("end of the expression"));
    }
    Ok(expr)
}

/// Parses a standalone cone expression (the whole input must be consumed).
pub fn parse_cone_text(text: &str) -> Result<SConeExpr, ParseError> {
    let tokens = lex(text)?;
    let mut parser = Parser {
        tokens,
        index: 0,
        depth: 0,
    };
    let cone = parser.cone_expr()?;
    if parser.peek().is_some() {
        return Err(parser.err_here("end of the cone expression"));
    }
    Ok(cone)
}

struct Parser {
    tokens: Vec<Token>,
    index: usize,
    depth: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.index)
    }

    fn peek2(&self) -> Option<&Token> {
        self.tokens.get(self.index + 1)
    }

    /// Position for "here": the current token, or just past the last one.
    fn here(&self) -> Pos {
        match self.peek() {
            Some(t) => t.pos,
            None => self
                .tokens
                .last()
                .map(|t| t.pos)
                .unwrap_or(Pos { line: 1, col: 1 }),
        }
    }

    fn err_here(&self, expected: &str) -> ParseError {
        let (pos, found) = match self.peek() {
            Some(t) => (t.pos, t.kind.describe()),
            None => (self.here(), "end of input".to_owned()),
        };
        ParseError {
            line: pos.line,
            col: pos.col,
            expected: expected.to_owned(),
            found,
        }
    }

    fn expect(&mut self, kind: &TokKind, expected: &str) -> Result<Pos, ParseError> {
        match self.peek() {
            Some(t) if &t.kind == kind => {
                let pos = t.pos;
                self.index += 1;
                Ok(pos)
            }
            _ => Err(self.err_here(expected)),
        }
    }

    fn at_keyword(&self, kw: &str) -> bool {
        matches!(self.peek(), Some(Token { kind: TokKind::Ident(s), .. }) if s == kw)
    }

    fn expect_keyword(&mut self, kw: &str) -> Result<Pos, ParseError> {
        if self.at_keyword(kw) {
            let pos = self.peek().unwrap().pos;
            self.index += 1;
            Ok(pos)
        } else {
            Err(self.err_here(&format!("'{kw}'")))
        }
    }

    /// A non-keyword identifier.
    fn name(&mut self, what: &str) -> Result<SName, ParseError> {
        match self.peek() {
            Some(Token {
                kind: TokKind::Ident(s),
                pos,
            }) if !is_keyword(s) => {
                let out = Spanned::new(s.clone(), *pos);
                self.index += 1;
                Ok(out)
            }
            _ => Err(self.err_here(what)),
        }
    }

    fn int_u32(&mut self, what: &str) -> Result<u32, ParseError> {
        match self.peek() {
            Some(Token {
                kind: TokKind::Int(s),
                ..
            }) => {
                let parsed = s.parse::<u32>().map_err(|_| self.err_here(what))?;
                self.index += 1;
                Ok(parsed)
            }
            _ => Err(self.err_here(what)),
        }
    }

    fn int_big(&mut self, what: &str) -> Result<BigInt, ParseError> {
        match self.peek() {
            Some(Token {
                kind: TokKind::Int(s),
                ..
            }) => {
                let parsed = s.parse::<BigInt>().map_err(|_| self.err_here(what))?;
                self.index += 1;
                Ok(parsed)
            }
            _ => Err(self.err_here(what)),
        }
    }

    /// A signed rational literal: `[-] INT [/ INT]`.
    fn rat_literal(&mut self) -> Result<Rat, ParseError> {
        let negative = if matches!(self.peek(), Some(t) if t.kind == TokKind::Minus) {
            self.index += 1;
            true
        } else {
            false
        };
        let numer = self.int_big("an integer or fraction")?;
        let denom = if matches!(self.peek(), Some(t) if t.kind == TokKind::Slash) {
            self.index += 1;
            let pos = self.here();
            let d = self.int_big("a denominator")?;
            if d.is_zero() {
                return Err(ParseError {
                    line: pos.line,
                    col: pos.col,
                    expected: "a nonzero denominator".to_owned(),
                    found: "'0'".to_owned(),
                });
            }
            d
        } else {
            BigInt::from(1)
        };
        let value = Rat::new(numer, denom);
        Ok(if negative { -value } else { value })
    }

    fn statement(&mut self) -> Result<Statement, ParseError> {
        if self.at_keyword("ring") {
            return Ok(Statement::Ring(self.ring_def()?));
        }
        if self.at_keyword("class") {
            return Ok(Statement::Class(self.class_def()?));
        }
        if self.at_keyword("cone") {
            return Ok(Statement::Cone(self.cone_def()?));
        }
        if self.at_keyword("assert") {
            return Ok(Statement::Assert(self.assertion()?));
        }
        Err(self.err_here("'ring', 'class', 'cone', or 'assert'"))
    }

    fn ring_def(&mut self) -> Result<RingDef, ParseError> {
        let pos = self.expect_keyword("ring")?;
        let name = self.name("a ring name")?;
        self.expect(&TokKind::LBrace, "'{'")?;

        self.expect_keyword("gens")?;
        let mut gens = Vec::new();
        loop {
            let g = self.name("a generator name")?;
            self.expect(&TokKind::Colon, "':'")?;
            let degree = self.int_u32("a positive degree")?;
            gens.push((g.node, degree));
            if matches!(self.peek(), Some(t) if t.kind == TokKind::Comma) {
                self.index += 1;
            } else {
                break;
            }
        }
        self.expect(&TokKind::Semi, "',' or ';'")?;

        let mut rels = Vec::new();
        if self.at_keyword("rels") {
            self.index += 1;
            loop {
                rels.push(self.expr()?);
                if matches!(self.peek(), Some(t) if t.kind == TokKind::Comma) {
                    self.index += 1;
                } else {
                    break;
                }
            }
            self.expect(&TokKind::Semi, "',' or ';'")?;
        }

        self.expect_keyword("top")?;
        let top = self.int_u32("a top degree")?;
        self.expect(&TokKind::Semi, "';'")?;

        self.expect_keyword("integral")?;
        let integral_monomial = self.expr()?;
        self.expect(&TokKind::Assign, "'='")?;
        let integral_value = self.rat_literal()?;
        self.expect(&TokKind::Semi, "';'")?;

        let scale = if self.at_keyword("scale") {
            self.index += 1;
            let s = self.rat_literal()?;
            self.expect(&TokKind::Semi, "';'")?;
            Some(s)
        } else {
            None
        };

        self.expect(&TokKind::RBrace, "'}'")?;
        Ok(RingDef {
            name: name.node,
            gens,
            rels,
            top,
            integral_monomial,
            integral_value,
            scale,
            pos,
        })
    }

    fn class_def(&mut self) -> Result<ClassDef, ParseError> {
        let pos = self.expect_keyword("class")?;
        let name = self.name("a class name")?;
        self.expect_keyword("on")?;
        let space = self.name("a space name")?;
        self.expect(&TokKind::Assign, "'='")?;
        let expr = self.expr()?;
        self.expect(&TokKind::Semi, "';'")?;
        Ok(ClassDef {
            name: name.node,
            space,
            expr,
            pos,
        })
    }

    fn cone_def(&mut self) -> Result<ConeDef, ParseError> {
        let pos = self.expect_keyword("cone")?;
        let name = self.name("a cone name")?;
        self.expect(&TokKind::Assign, "'='")?;
        self.expect_keyword("cone")?;
        self.expect(&TokKind::LParen, "'('")?;
        let members = self.name_list()?;
        self.expect(&TokKind::RParen, "')'")?;
        let under = if self.at_keyword("under") {
            self.index += 1;
            Some(self.name("a space name")?)
        } else {
            None
        };
        self.expect(&TokKind::Semi, "';'")?;
        Ok(ConeDef {
            name: name.node,
            members,
            under,
            pos,
        })
    }

    fn name_list(&mut self) -> Result<Vec<SName>, ParseError> {
        let mut names = vec![self.name("a class name")?];
        while matches!(self.peek(), Some(t) if t.kind == TokKind::Comma) {
            self.index += 1;
            names.push(self.name("a class name")?);
        }
        Ok(names)
    }

    fn assertion(&mut self) -> Result<Assertion, ParseError> {
        let pos = self.expect_keyword("assert")?;
        // `assert SPACE: …` — a non-keyword identifier followed by a colon.
        let space = match (self.peek(), self.peek2()) {
            (
                Some(Token {
                    kind: TokKind::Ident(s),
                    pos,
                }),
                Some(Token {
                    kind: TokKind::Colon,
                    ..
                }),
            ) if !is_keyword(s) => {
                let label = Spanned::new(s.clone(), *pos);
                self.index += 2;
                Some(label)
            }
            _ => None,
        };
        let claim = self.bool_expr()?;
        self.expect(&TokKind::Semi, "';'")?;
        Ok(Assertion { space, claim, pos })
    }

    fn bool_expr(&mut self) -> Result<BoolExpr, ParseError> {
        let negated = if self.at_keyword("not") {
            self.index += 1;
            true
        } else {
            false
        };
        if self.at_keyword("member") {
            self.index += 1;
            let element = self.expr()?;
            self.expect_keyword("in")?;
            let cone = self.cone_expr()?;
            return Ok(BoolExpr::Member {
                negated,
                element,
                cone,
            });
        }
        if self.at_keyword("extremal") {
            self.index += 1;
            let element = self.expr()?;
            self.expect_keyword("in")?;
            let cone = self.cone_expr()?;
            return Ok(BoolExpr::Extremal {
                negated,
                element,
                cone,
            });
        }
        if self.at_keyword("simplicial") {
            self.index += 1;
            let cone = self.cone_expr()?;
            return Ok(BoolExpr::Simplicial { negated, cone });
        }
        if negated {
            return Err(self.err_here("'member', 'extremal', or 'simplicial' after 'not'"));
        }
        if self.at_keyword("cone") || self.at_keyword("dual") {
            let left = self.cone_expr()?;
            self.expect(&TokKind::EqEq, "'=='")?;
            let right = self.cone_expr()?;
            return Ok(BoolExpr::EqCone(left, right));
        }
        let left = self.expr()?;
        self.expect(&TokKind::EqEq, "'=='")?;
        let right = self.expr()?;
        Ok(BoolExpr::EqExpr(left, right))
    }

    fn cone_expr(&mut self) -> Result<SConeExpr, ParseError> {
        self.enter_depth()?;
        let out = if self.at_keyword("dual") {
            let pos = self.expect_keyword("dual")?;
            self.expect(&TokKind::LParen, "'('")?;
            let inner = self.cone_expr()?;
            self.expect(&TokKind::RParen, "')'")?;
            Spanned::new(ConeExpr::Dual(Box::new(inner)), pos)
        } else if self.at_keyword("cone") {
            let pos = self.expect_keyword("cone")?;
            self.expect(&TokKind::LParen, "'('")?;
            let members = self.name_list()?;
            self.expect(&TokKind::RParen, "')'")?;
            let under = if self.at_keyword("under") {
                self.index += 1;
                Some(self.name("a space name")?)
            } else {
                None
            };
            Spanned::new(ConeExpr::Literal { members, under }, pos)
        } else {
            let name = self.name("a cone expression")?;
            let pos = name.pos;
            Spanned::new(ConeExpr::Named(name), pos)
        };
        self.depth -= 1;
        Ok(out)
    }

    fn enter_depth(&mut self) -> Result<(), ParseError> {
        self.depth += 1;
        if self.depth > MAX_DEPTH {
            let pos = self.here();
            return Err(ParseError {
                line: pos.line,
                col: pos.col,
                expected: format!("nesting within depth {MAX_DEPTH}"),
                found: "deeper nesting".to_owned(),
            });
        }
        Ok(())
    }

    // expr := term (("+"|"-") term)*
    fn expr(&mut self) -> Result<SExpr, ParseError> {
        let mut left = self.term()?;
        loop {
            let op = match self.peek() {
                Some(t) if t.kind == TokKind::Plus => TokKind::Plus,
                Some(t) if t.kind == TokKind::Minus => TokKind::Minus,
                _ => break,
            };
            self.index += 1;
            let right = self.term()?;
            let pos = left.pos;
            let node = if op == TokKind::Plus {
                Expr::Add(Box::new(left), Box::new(right))
            } else {
                Expr::Sub(Box::new(left), Box::new(right))
            };
            left = Spanned::new(node, pos);
        }
        Ok(left)
    }

    // term := factor ("*" factor)*
    fn term(&mut self) -> Result<SExpr, ParseError> {
        let mut left = self.factor()?;
        while matches!(self.peek(), Some(t) if t.kind == TokKind::Star) {
            self.index += 1;
            let right = self.factor()?;
            let pos = left.pos;
            left = Spanned::new(Expr::Mul(Box::new(left), Box::new(right)), pos);
        }
        Ok(left)
    }

    // factor := "-" factor | power
    fn factor(&mut self) -> Result<SExpr, ParseError> {
        if matches!(self.peek(), Some(t) if t.kind == TokKind::Minus) {
            let pos = self.peek().unwrap().pos;
            self.index += 1;
            self.enter_depth()?;
            let inner = self.factor()?;
            self.depth -= 1;
            return Ok(Spanned::new(Expr::Neg(Box::new(inner)), pos));
        }
        self.power()
    }

    // power := atom ("^" INT)?
    fn power(&mut self) -> Result<SExpr, ParseError> {
        let base = self.atom()?;
        if matches!(self.peek(), Some(t) if t.kind == TokKind::Caret) {
            self.index += 1;
            let exponent = self.int_u32("a nonnegative integer exponent")?;
            let pos = base.pos;
            return Ok(Spanned::new(Expr::Pow(Box::new(base), exponent), pos));
        }
        Ok(base)
    }

    // atom := "(" expr ")" | NAME | INT ("/" INT)?
    fn atom(&mut self) -> Result<SExpr, ParseError> {
        match self.peek().cloned() {
            Some(Token {
                kind: TokKind::LParen,
                pos,
            }) => {
                self.index += 1;
                self.enter_depth()?;
                let inner = self.expr()?;
                self.depth -= 1;
                self.expect(&TokKind::RParen, "')'")?;
                Ok(Spanned::new(inner.node, pos))
            }
            Some(Token {
                kind: TokKind::Ident(s),
                pos,
            }) if !is_keyword(&s) => {
                self.index += 1;
                Ok(Spanned::new(Expr::Name(s), pos))
            }
            Some(Token {
                kind: TokKind::Int(_),
                pos,
            }) => {
                let numer = self.int_big("an integer")?;
                let value = if matches!(self.peek(), Some(t) if t.kind == TokKind::Slash) {
                    self.index += 1;
                    let dpos = self.here();
                    let denom = self.int_big("a denominator")?;
                    if denom.is_zero() {
                        return Err(ParseError {
                            line: dpos.line,
                            col: dpos.col,
                            expected: "a nonzero denominator".to_owned(),
                            found: "'0'".to_owned(),
                        });
                    }
                    Rat::new(numer, denom)
                } else {
                    Rat::from(numer)
                };
                Ok(Spanned::new(Expr::Num(value), pos))
            }
            _ => Err(self.err_here("a name, number, or '('")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra_core::rat::rat;

    #[test]
    fn ring_definition_parses() {
        let ast = parse(
            "ring W { gens L:1, Z:1; rels L^2, Z^2 + L*Z; top 2; integral L*Z = 1/24; }",
        )
        .unwrap();
        assert_eq!(ast.statements.len(), 1);
        let Statement::Ring(ring) = &ast.statements[0] else {
            panic!("expected a ring definition");
        };
        assert_eq!(ring.name, "W");
        assert_eq!(ring.gens, vec![("L".into(), 1), ("Z".into(), 1)]);
        assert_eq!(ring.rels.len(), 2);
        assert_eq!(ring.top, 2);
        assert_eq!(ring.integral_value, rat(1, 24));
        assert!(ring.scale.is_none());
    }

    #[test]
    fn assertion_with_space_label_parses() {
        let ast = parse("assert X1: (Z+L)*(Z+L) == 1/24;").unwrap();
        let Statement::Assert(a) = &ast.statements[0] else {
            panic!("expected an assertion");
        };
        assert_eq!(a.space.as_ref().unwrap().node, "X1");
        let BoolExpr::EqExpr(left, right) = &a.claim else {
            panic!("expected an equality");
        };
        assert!(matches!(left.node, Expr::Mul(_, _)));
        assert_eq!(right.node, Expr::Num(rat(1, 24)));
    }

    #[test]
    fn missing_semicolon_is_reported_at_the_offending_token() {
        let err = parse("ring Bad { gens L:1 rels L^2; }").unwrap_err();
        assert_eq!((err.line, err.col), (1, 21));
        assert_eq!(err.found, "'rels'");
        assert_eq!(err.expected, "',' or ';'");
    }

    #[test]
    fn cone_assertions_parse() {
        let ast = parse(
            "cone eff = cone(SA, SF, SD, C4, K31) under A3_H4;\n\
             assert dual(eff) == cone(L2, LM, M2, F1, F2);\n\
             assert not member R in eff;\n\
             assert extremal SA in eff;\n\
             assert not simplicial eff;",
        )
        .unwrap();
        assert_eq!(ast.statements.len(), 5);
        let Statement::Assert(a) = &ast.statements[1] else {
            panic!();
        };
        assert!(matches!(a.claim, BoolExpr::EqCone(_, _)));
        let Statement::Assert(m) = &ast.statements[2] else {
            panic!();
        };
        assert!(matches!(m.claim, BoolExpr::Member { negated: true, .. }));
    }

    #[test]
    fn depth_guard_rejects_pathological_nesting() {
        let mut text = String::from("assert ");
        for _ in 0..80 {
            text.push('(');
        }
        text.push('1');
        for _ in 0..80 {
            text.push(')');
        }
        text.push_str(" == 1;");
        let err = parse(&text).unwrap_err();
        assert!(err.expected.contains("depth 64"), "{err}");
    }

    #[test]
    fn rational_literals_reject_zero_denominators() {
        let err = parse("assert 1/0 == 1;").unwrap_err();
        assert_eq!(err.expected, "a nonzero denominator");
    }

    #[test]
    fn division_is_only_a_literal_separator() {
        let err = parse("assert L/2 == 1;").unwrap_err();
        assert_eq!((err.line, err.col), (1, 9));
        assert_eq!(err.found, "'/'");
    }
}
