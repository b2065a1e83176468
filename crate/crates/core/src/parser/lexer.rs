use num_bigint::BigInt;

use crate::error::{Error, Position, Result};

#[derive(Debug, Clone, PartialEq)]
pub enum Token {
    Int(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    End,
}

impl Token {
    pub fn describe(&self) -> String {
        match self {
            Token::Int(n) => format!("number {n}"),
            Token::Ident(s) => format!("identifier {s:?}"),
            Token::Plus => "'+'".into(),
            Token::Minus => "'-'".into(),
            Token::Star => "'*'".into(),
            Token::Slash => "'/'".into(),
            Token::Caret => "'^'".into(),
            Token::LParen => "'('".into(),
            Token::RParen => "')'".into(),
            Token::End => "end of input".into(),
        }
    }
}

pub fn syntax(position: Position, message: impl Into<String>) -> Error {
    Error::Syntax {
        position,
        message: message.into(),
    }
}

pub fn tokenize(src: &str) -> Result<Vec<(Token, Position)>> {
    let mut out = Vec::new();
    let mut chars = src.chars().peekable();
    let (mut line, mut column) = (1, 1);
    while let Some(&c) = chars.peek() {
        let pos = Position { line, column };
        if c == '\n' {
            chars.next();
            line += 1;
            column = 1;
            continue;
        }
        if c.is_whitespace() {
            chars.next();
            column += 1;
            continue;
        }
        if c.is_ascii_digit() {
            let mut digits = String::new();
            while let Some(&d) = chars.peek() {
                if !d.is_ascii_digit() {
                    break;
                }
                digits.push(d);
                chars.next();
                column += 1;
            }
            if matches!(chars.peek(), Some('.') | Some('e') | Some('E')) {
                return Err(syntax(pos, "floating-point literals are not accepted; use p/q"));
            }
            out.push((Token::Int(digits.parse().expect("ascii digits")), pos));
            continue;
        }
        if c.is_ascii_alphabetic() || c == '_' {
            let mut ident = String::new();
            while let Some(&d) = chars.peek() {
                if !(d.is_ascii_alphanumeric() || d == '_') {
                    break;
                }
                ident.push(d);
                chars.next();
                column += 1;
            }
            out.push((Token::Ident(ident), pos));
            continue;
        }
        let tok = match c {
            '+' => Token::Plus,
            '-' => Token::Minus,
            '*' => Token::Star,
            '/' => Token::Slash,
            '^' => Token::Caret,
            '(' => Token::LParen,
            ')' => Token::RParen,
            '.' => return Err(syntax(pos, "floating-point literals are not accepted; use p/q")),
            other => return Err(syntax(pos, format!("unexpected character {other:?}"))),
        };
        chars.next();
        column += 1;
        out.push((tok, pos));
    }
    out.push((Token::End, Position { line, column }));
    Ok(out)
}
