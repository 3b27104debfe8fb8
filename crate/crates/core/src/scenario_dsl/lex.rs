//! Tokenizer for scenario text: identifiers, integers, punctuation, with
//! `#` line comments and exact 1-based positions.

use super::ast::Pos;
use super::ParseError;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TokKind {
    Ident(String),
    /// Unsigned digit string; numeric conversion happens in the parser.
    Int(String),
    LBrace,
    RBrace,
    LParen,
    RParen,
    Comma,
    Semi,
    Colon,
    /// `=`
    Assign,
    /// `==`
    EqEq,
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
}

impl TokKind {
    /// Human-readable form used in error messages.
    pub fn describe(&self) -> String {
        match self {
            TokKind::Ident(s) => format!("'{s}'"),
            TokKind::Int(s) => format!("'{s}'"),
            TokKind::LBrace => "'{'".to_owned(),
            TokKind::RBrace => "'}'".to_owned(),
            TokKind::LParen => "'('".to_owned(),
            TokKind::RParen => "')'".to_owned(),
            TokKind::Comma => "','".to_owned(),
            TokKind::Semi => "';'".to_owned(),
            TokKind::Colon => "':'".to_owned(),
            TokKind::Assign => "'='".to_owned(),
            TokKind::EqEq => "'=='".to_owned(),
            TokKind::Plus => "'+'".to_owned(),
            TokKind::Minus => "'-'".to_owned(),
            TokKind::Star => "'*'".to_owned(),
            TokKind::Caret => "'^'".to_owned(),
            TokKind::Slash => "'/'".to_owned(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Token {
    pub kind: TokKind,
    pub pos: Pos,
}

/// Reserved words; these can never be used as names.
pub const KEYWORDS: [&str; 17] = [
    "ring",
    "class",
    "cone",
    "assert",
    "in",
    "gens",
    "rels",
    "top",
    "integral",
    "scale",
    "on",
    "under",
    "member",
    "extremal",
    "simplicial",
    "dual",
    "not",
];

pub fn is_keyword(s: &str) -> bool {
    KEYWORDS.contains(&s)
}

pub fn lex(text: &str) -> Result<Vec<Token>, ParseError> {
    let mut tokens = Vec::new();
    let mut line: u32 = 1;
    let mut col: u32 = 1;
    let mut chars = text.chars().peekable();
    while let Some(&c) = chars.peek() {
        let pos = Pos { line, col };
        match c {
            '\n' => {
                chars.next();
                line += 1;
                col = 1;
            }
            _ if c.is_whitespace() => {
                chars.next();
                col += 1;
            }
            '#' => {
                // Comment to end of line.
                while let Some(&c) = chars.peek() {
                    if c == '\n' {
                        break;
                    }
                    chars.next();
                    col += 1;
                }
            }
            _ if c.is_ascii_alphabetic() || c == '_' => {
                let mut s = String::new();
                while let Some(&c) = chars.peek() {
                    if c.is_ascii_alphanumeric() || c == '_' {
                        s.push(c);
                        chars.next();
                        col += 1;
                    } else {
                        break;
                    }
                }
                tokens.push(Token {
                    kind: TokKind::Ident(s),
                    pos,
                });
            }
            _ if c.is_ascii_digit() => {
                let mut s = String::new();
                while let Some(&c) = chars.peek() {
                    if c.is_ascii_digit() {
                        s.push(c);
                        chars.next();
                        col += 1;
                    } else {
                        break;
                    }
                }
                tokens.push(Token {
                    kind: TokKind::Int(s),
                    pos,
                });
            }
            '=' => {
                chars.next();
                col += 1;
                if chars.peek() == Some(&'=') {
                    chars.next();
                    col += 1;
                    tokens.push(Token {
                        kind: TokKind::EqEq,
                        pos,
                    });
                } else {
                    tokens.push(Token {
                        kind: TokKind::Assign,
                        pos,
                    });
                }
            }
            _ => {
                let kind = match c {
                    '{' => TokKind::LBrace,
                    '}' => TokKind::RBrace,
                    '(' => TokKind::LParen,
                    ')' => TokKind::RParen,
                    ',' => TokKind::Comma,
                    ';' => TokKind::Semi,
                    ':' => TokKind::Colon,
                    '+' => TokKind::Plus,
                    '-' => TokKind::Minus,
                    '*' => TokKind::Star,
                    '^' => TokKind::Caret,
                    '/' => TokKind::Slash,
                    other => {
                        return Err(ParseError {
                            line: pos.line,
                            col: pos.col,
                            expected: "a token".to_owned(),
                            found: format!("'{other}'"),
                        })
                    }
                };
                chars.next();
                col += 1;
                tokens.push(Token { kind, pos });
            }
        }
    }
    Ok(tokens)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn positions_are_one_based_and_exact() {
        let toks = lex("ring X {\n  gens L:1;\n}").unwrap();
        assert_eq!(toks[0].pos, Pos { line: 1, col: 1 });
        assert_eq!(toks[1].pos, Pos { line: 1, col: 6 });
        assert_eq!(toks[3].pos, Pos { line: 2, col: 3 }); // gens
        assert_eq!(toks.last().unwrap().pos, Pos { line: 3, col: 1 });
    }

    #[test]
    fn comments_and_double_equals_lex() {
        let toks = lex("a == b # trailing == ignored\nc = d").unwrap();
        let kinds: Vec<_> = toks.iter().map(|t| t.kind.clone()).collect();
        assert_eq!(
            kinds,
            vec![
                TokKind::Ident("a".into()),
                TokKind::EqEq,
                TokKind::Ident("b".into()),
                TokKind::Ident("c".into()),
                TokKind::Assign,
                TokKind::Ident("d".into()),
            ]
        );
    }

    #[test]
    fn unknown_characters_are_rejected_with_position() {
        let err = lex("assert 1 @ 2;").unwrap_err();
        assert_eq!((err.line, err.col), (1, 10));
        assert_eq!(err.found, "'@'");
    }
}
