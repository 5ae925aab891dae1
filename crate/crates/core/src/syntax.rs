//! Ground programs and goals: abstract syntax, parser and canonical printer.
//!
//! Concrete grammar:
//!
//! ```text
//! program  := { clause } ;
//! clause   := atom ( ":-" body )? "." ;
//! goal     := "?-" ( body )? "." ;
//! body     := literal { "," literal } ;
//! literal  := ( "not" | "~w" | "~s" )? atom ;
//! atom     := ident ( "(" ident { "," ident } ")" )? ;
//! ident    := [a-z][a-zA-Z0-9_]* ;
//! ```
//!
//! `%` starts a comment that runs to the end of the line. A clause written
//! `p :- .` is accepted as the fact `p.`.

use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A ground propositional atom. Equality and ordering are by name.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Atom(Arc<str>);

pub type AtomSet = BTreeSet<Atom>;

impl Atom {
    /// Builds an atom from its textual name, e.g. `p` or `approved(a)`.
    pub fn new(name: &str) -> Result<Atom> {
        let mut parser = Parser::new(name)?;
        let atom = parser.atom()?;
        parser.expect_eof()?;
        Ok(atom)
    }

    pub fn name(&self) -> &str {
        &self.0
    }
}

impl fmt::Debug for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl Serialize for Atom {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.0)
    }
}

impl<'de> Deserialize<'de> for Atom {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let name = String::deserialize(deserializer)?;
        Atom::new(&name).map_err(serde::de::Error::custom)
    }
}

/// Parses a comma separated list of atom names. Blank input gives the empty set.
pub fn parse_atom_list(text: &str) -> Result<AtomSet> {
    let mut parser = Parser::new(text)?;
    let mut set = AtomSet::new();
    if parser.peek() == &Token::Eof {
        return Ok(set);
    }
    loop {
        set.insert(parser.atom()?);
        if parser.peek() == &Token::Comma {
            parser.bump();
        } else {
            break;
        }
    }
    parser.expect_eof()?;
    Ok(set)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum LiteralKind {
    Pos,
    Not,
    Weak,
    Strict,
}

impl LiteralKind {
    pub const ALL: [LiteralKind; 4] = [
        LiteralKind::Pos,
        LiteralKind::Not,
        LiteralKind::Weak,
        LiteralKind::Strict,
    ];

    fn prefix(self) -> &'static str {
        match self {
            LiteralKind::Pos => "",
            LiteralKind::Not => "not ",
            LiteralKind::Weak => "~w ",
            LiteralKind::Strict => "~s ",
        }
    }
}

/// An atom, possibly under exactly one negation.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Literal {
    pub atom: Atom,
    pub kind: LiteralKind,
}

impl Literal {
    pub fn new(kind: LiteralKind, atom: Atom) -> Literal {
        Literal { atom, kind }
    }

    pub fn pos(atom: Atom) -> Literal {
        Literal::new(LiteralKind::Pos, atom)
    }

    pub fn is_positive(&self) -> bool {
        self.kind == LiteralKind::Pos
    }
}

impl fmt::Display for Literal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.kind.prefix(), self.atom)
    }
}

fn write_body(f: &mut fmt::Formatter<'_>, body: &[Literal]) -> fmt::Result {
    for (i, lit) in body.iter().enumerate() {
        if i > 0 {
            f.write_str(", ")?;
        }
        write!(f, "{lit}")?;
    }
    Ok(())
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Clause {
    pub head: Atom,
    pub body: Vec<Literal>,
}

impl Clause {
    pub fn new(head: Atom, body: Vec<Literal>) -> Clause {
        Clause { head, body }
    }

    pub fn fact(head: Atom) -> Clause {
        Clause::new(head, Vec::new())
    }

    /// Every atom mentioned by the clause, head first.
    pub fn atoms(&self) -> impl Iterator<Item = &Atom> {
        std::iter::once(&self.head).chain(self.body.iter().map(|l| &l.atom))
    }

    /// Atoms occurring under the given literal kind in the body.
    pub fn body_atoms(&self, kind: LiteralKind) -> impl Iterator<Item = &Atom> {
        self.body
            .iter()
            .filter(move |l| l.kind == kind)
            .map(|l| &l.atom)
    }
}

impl fmt::Display for Clause {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.head)?;
        if !self.body.is_empty() {
            f.write_str(" :- ")?;
            write_body(f, &self.body)?;
        }
        f.write_str(".")
    }
}

/// A finite, duplicate-free set of ground clauses together with its Herbrand base.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Program {
    clauses: Vec<Clause>,
    base: AtomSet,
}

impl Program {
    pub fn new(clauses: impl IntoIterator<Item = Clause>) -> Program {
        let mut clauses: Vec<Clause> = clauses.into_iter().collect();
        clauses.sort();
        clauses.dedup();
        let base = clauses.iter().flat_map(Clause::atoms).cloned().collect();
        Program { clauses, base }
    }

    /// Clauses in canonical order: by head, then body.
    pub fn clauses(&self) -> &[Clause] {
        &self.clauses
    }

    pub fn base(&self) -> &AtomSet {
        &self.base
    }

    pub fn clauses_for<'a>(&'a self, head: &'a Atom) -> impl Iterator<Item = &'a Clause> + 'a {
        let start = self.clauses.partition_point(|c| &c.head < head);
        self.clauses[start..]
            .iter()
            .take_while(move |c| &c.head == head)
    }

    pub fn has_clause_for(&self, head: &Atom) -> bool {
        self.clauses_for(head).next().is_some()
    }

    /// No clause has a negative literal.
    pub fn is_definite(&self) -> bool {
        self.clauses
            .iter()
            .all(|c| c.body.iter().all(Literal::is_positive))
    }

    /// Only positive and default-negated literals occur.
    pub fn is_general(&self) -> bool {
        self.first_non_general().is_none()
    }

    pub(crate) fn first_non_general(&self) -> Option<&Clause> {
        self.clauses.iter().find(|c| {
            c.body
                .iter()
                .any(|l| matches!(l.kind, LiteralKind::Weak | LiteralKind::Strict))
        })
    }

    /// `base` minus `set`.
    pub fn complement(&self, set: &AtomSet) -> AtomSet {
        self.base.difference(set).cloned().collect()
    }
}

impl fmt::Display for Program {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for clause in &self.clauses {
            writeln!(f, "{clause}")?;
        }
        Ok(())
    }
}

/// A goal `?- L1, ..., Ln.`; the empty goal is written `?- .`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Goal {
    pub body: Vec<Literal>,
}

impl Goal {
    pub fn new(body: Vec<Literal>) -> Goal {
        Goal { body }
    }

    pub fn is_empty(&self) -> bool {
        self.body.is_empty()
    }
}

impl fmt::Display for Goal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.body.is_empty() {
            return f.write_str("?- .");
        }
        f.write_str("?- ")?;
        write_body(f, &self.body)?;
        f.write_str(".")
    }
}

pub fn parse_program(text: &str) -> Result<Program> {
    let mut parser = Parser::new(text)?;
    let mut clauses = Vec::new();
    while parser.peek() != &Token::Eof {
        clauses.push(parser.clause()?);
    }
    Ok(Program::new(clauses))
}

pub fn parse_goal(text: &str) -> Result<Goal> {
    let mut parser = Parser::new(text)?;
    parser.expect(&Token::Query, "`?-`")?;
    let body = if parser.peek() == &Token::Dot {
        Vec::new()
    } else {
        parser.body()?
    };
    parser.expect(&Token::Dot, "`.`")?;
    parser.expect_eof()?;
    Ok(Goal::new(body))
}

/// Parses a bare literal sequence such as `p, not q` (no `?-`, optional final `.`).
pub fn parse_body(text: &str) -> Result<Vec<Literal>> {
    let mut parser = Parser::new(text)?;
    if parser.peek() == &Token::Eof {
        return Ok(Vec::new());
    }
    let body = parser.body()?;
    if parser.peek() == &Token::Dot {
        parser.bump();
    }
    parser.expect_eof()?;
    Ok(body)
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Token {
    Ident(String),
    Var(String),
    If,
    Query,
    Comma,
    Dot,
    LParen,
    RParen,
    Neg(LiteralKind),
    Eof,
}

impl fmt::Display for Token {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Token::Ident(s) | Token::Var(s) => write!(f, "`{s}`"),
            Token::If => f.write_str("`:-`"),
            Token::Query => f.write_str("`?-`"),
            Token::Comma => f.write_str("`,`"),
            Token::Dot => f.write_str("`.`"),
            Token::LParen => f.write_str("`(`"),
            Token::RParen => f.write_str("`)`"),
            Token::Neg(kind) => write!(f, "`{}`", kind.prefix().trim_end()),
            Token::Eof => f.write_str("end of input"),
        }
    }
}

#[derive(Debug, Clone, Copy)]
struct Pos {
    line: usize,
    column: usize,
}

fn is_ident_char(c: char) -> bool {
    c.is_ascii_alphanumeric() || c == '_'
}

fn lex(text: &str) -> Result<Vec<(Token, Pos)>> {
    let chars: Vec<char> = text.chars().collect();
    let mut tokens = Vec::new();
    let (mut i, mut line, mut column) = (0, 1, 1);
    let advance = |i: &mut usize, column: &mut usize, n: usize| {
        *i += n;
        *column += n;
    };
    while i < chars.len() {
        let c = chars[i];
        let pos = Pos { line, column };
        match c {
            '\n' => {
                i += 1;
                line += 1;
                column = 1;
            }
            c if c.is_whitespace() => advance(&mut i, &mut column, 1),
            '%' => {
                while i < chars.len() && chars[i] != '\n' {
                    i += 1;
                }
            }
            ',' | '.' | '(' | ')' => {
                let tok = match c {
                    ',' => Token::Comma,
                    '.' => Token::Dot,
                    '(' => Token::LParen,
                    _ => Token::RParen,
                };
                tokens.push((tok, pos));
                advance(&mut i, &mut column, 1);
            }
            ':' | '?' if chars.get(i + 1) == Some(&'-') => {
                let tok = if c == ':' { Token::If } else { Token::Query };
                tokens.push((tok, pos));
                advance(&mut i, &mut column, 2);
            }
            '~' => {
                let kind = match chars.get(i + 1) {
                    Some('w') => Some(LiteralKind::Weak),
                    Some('s') => Some(LiteralKind::Strict),
                    _ => None,
                };
                let bounded = !chars.get(i + 2).copied().is_some_and(is_ident_char);
                match kind {
                    Some(kind) if bounded => {
                        tokens.push((Token::Neg(kind), pos));
                        advance(&mut i, &mut column, 2);
                    }
                    _ => {
                        let end = (i + 1..chars.len())
                            .find(|&j| !is_ident_char(chars[j]))
                            .unwrap_or(chars.len());
                        return Err(syntax(
                            pos,
                            chars[i..end].iter().collect::<String>(),
                            "expected `~w` or `~s`",
                        ));
                    }
                }
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                let start = i;
                while i < chars.len() && is_ident_char(chars[i]) {
                    i += 1;
                }
                let word: String = chars[start..i].iter().collect();
                column += i - start;
                let tok = if word == "not" {
                    Token::Neg(LiteralKind::Not)
                } else if c.is_ascii_lowercase() {
                    Token::Ident(word)
                } else {
                    Token::Var(word)
                };
                tokens.push((tok, pos));
            }
            other => return Err(syntax(pos, format!("`{other}`"), "unexpected character")),
        }
    }
    tokens.push((Token::Eof, Pos { line, column }));
    Ok(tokens)
}

fn syntax(pos: Pos, found: impl Into<String>, message: impl Into<String>) -> Error {
    Error::Syntax {
        line: pos.line,
        column: pos.column,
        found: found.into(),
        message: message.into(),
    }
}

struct Parser {
    tokens: Vec<(Token, Pos)>,
    at: usize,
}

impl Parser {
    fn new(text: &str) -> Result<Parser> {
        Ok(Parser {
            tokens: lex(text)?,
            at: 0,
        })
    }

    fn peek(&self) -> &Token {
        &self.tokens[self.at].0
    }

    fn pos(&self) -> Pos {
        self.tokens[self.at].1
    }

    fn bump(&mut self) -> Token {
        let tok = self.tokens[self.at].0.clone();
        if tok != Token::Eof {
            self.at += 1;
        }
        tok
    }

    fn error(&self, expected: &str) -> Error {
        syntax(
            self.pos(),
            self.peek().to_string(),
            format!("expected {expected}"),
        )
    }

    fn expect(&mut self, tok: &Token, expected: &str) -> Result<()> {
        if self.peek() == tok {
            self.bump();
            Ok(())
        } else {
            Err(self.error(expected))
        }
    }

    fn expect_eof(&mut self) -> Result<()> {
        self.expect(&Token::Eof, "end of input")
    }

    fn ident(&mut self) -> Result<String> {
        let pos = self.pos();
        match self.peek() {
            Token::Ident(_) => match self.bump() {
                Token::Ident(name) => Ok(name),
                _ => unreachable!(),
            },
            Token::Var(name) => Err(Error::VariablesUnsupported {
                line: pos.line,
                column: pos.column,
                name: name.clone(),
            }),
            _ => Err(self.error("an atom")),
        }
    }

    fn atom(&mut self) -> Result<Atom> {
        let mut name = self.ident()?;
        if self.peek() == &Token::LParen {
            self.bump();
            name.push('(');
            name.push_str(&self.ident()?);
            while self.peek() == &Token::Comma {
                self.bump();
                name.push(',');
                name.push_str(&self.ident()?);
            }
            self.expect(&Token::RParen, "`,` or `)`")?;
            name.push(')');
        }
        Ok(Atom(name.into()))
    }

    fn literal(&mut self) -> Result<Literal> {
        if let Token::Neg(kind) = *self.peek() {
            self.bump();
            if let Token::Neg(_) = self.peek() {
                return Err(self.error("an atom (nested negation unsupported)"));
            }
            return Ok(Literal::new(kind, self.atom()?));
        }
        Ok(Literal::pos(self.atom()?))
    }

    fn body(&mut self) -> Result<Vec<Literal>> {
        let mut body = vec![self.literal()?];
        while self.peek() == &Token::Comma {
            self.bump();
            body.push(self.literal()?);
        }
        Ok(body)
    }

    fn clause(&mut self) -> Result<Clause> {
        let head = self.atom()?;
        let body = if self.peek() == &Token::If {
            self.bump();
            if self.peek() == &Token::Dot {
                Vec::new()
            } else {
                self.body()?
            }
        } else {
            Vec::new()
        };
        if self.peek() != &Token::Dot {
            let expected = if body.is_empty() {
                "`:-` or `.`"
            } else {
                "`,` or `.`"
            };
            return Err(self.error(expected));
        }
        self.bump();
        Ok(Clause::new(head, body))
    }
}
