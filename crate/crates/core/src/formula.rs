//! Formula syntax: AST, parser and canonical printer.
//!
//! Grammar (highest precedence first):
//!
//! ```text
//! atom   := number | "text" | ref | range | FN(args) | ( expr )
//! unary  := "-" unary | atom
//! pow    := unary [ "^" pow ]            right-associative, unary binds the base
//! term   := pow { ("*" | "/") pow }
//! arith  := term { ("+" | "-") term }
//! expr   := arith { cmp-op arith }
//! ```
//!
//! Printing an AST and re-parsing it yields an equal AST, provided number
//! literals are non-negative and finite (negative constants are `Neg` nodes).

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::addr::{is_valid_sheet_name, parse_a1, parse_col_letters, CellAddress};
use crate::error::FormulaError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum UnaryOp {
    Neg,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum BinaryOp {
    Add,
    Sub,
    Mul,
    Div,
    Pow,
    Eq,
    Ne,
    Lt,
    Le,
    Gt,
    Ge,
}

impl BinaryOp {
    pub fn symbol(self) -> &'static str {
        match self {
            BinaryOp::Add => "+",
            BinaryOp::Sub => "-",
            BinaryOp::Mul => "*",
            BinaryOp::Div => "/",
            BinaryOp::Pow => "^",
            BinaryOp::Eq => "=",
            BinaryOp::Ne => "<>",
            BinaryOp::Lt => "<",
            BinaryOp::Le => "<=",
            BinaryOp::Gt => ">",
            BinaryOp::Ge => ">=",
        }
    }

    pub fn is_arithmetic(self) -> bool {
        matches!(
            self,
            BinaryOp::Add | BinaryOp::Sub | BinaryOp::Mul | BinaryOp::Div | BinaryOp::Pow
        )
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Function {
    Sum,
    Count,
    Average,
    Min,
    Max,
    If,
}

impl Function {
    pub fn name(self) -> &'static str {
        match self {
            Function::Sum => "SUM",
            Function::Count => "COUNT",
            Function::Average => "AVERAGE",
            Function::Min => "MIN",
            Function::Max => "MAX",
            Function::If => "IF",
        }
    }

    fn from_name(name: &str) -> Option<Function> {
        match name.to_ascii_uppercase().as_str() {
            "SUM" => Some(Function::Sum),
            "COUNT" => Some(Function::Count),
            "AVERAGE" => Some(Function::Average),
            "MIN" => Some(Function::Min),
            "MAX" => Some(Function::Max),
            "IF" => Some(Function::If),
            _ => None,
        }
    }
}

/// A parsed formula expression.
///
/// `Range` endpoints always lie on one sheet and are normalized so the first
/// endpoint is the top-left corner.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub enum FormulaAst {
    Number(f64),
    Text(String),
    Ref(CellAddress),
    Range(CellAddress, CellAddress),
    Unary(UnaryOp, Box<FormulaAst>),
    Binary(BinaryOp, Box<FormulaAst>, Box<FormulaAst>),
    Call(Function, Vec<FormulaAst>),
}

impl FormulaAst {
    pub fn number(n: f64) -> Self {
        FormulaAst::Number(n)
    }

    pub fn reference(addr: CellAddress) -> Self {
        FormulaAst::Ref(addr)
    }

    pub fn binary(op: BinaryOp, lhs: FormulaAst, rhs: FormulaAst) -> Self {
        FormulaAst::Binary(op, Box::new(lhs), Box::new(rhs))
    }

    pub fn neg(expr: FormulaAst) -> Self {
        FormulaAst::Unary(UnaryOp::Neg, Box::new(expr))
    }

    pub fn call(f: Function, args: Vec<FormulaAst>) -> Self {
        FormulaAst::Call(f, args)
    }

    /// Every cell address the formula references, ranges expanded per cell.
    pub fn referenced_addresses(&self) -> Vec<CellAddress> {
        let mut out = Vec::new();
        self.visit_refs(&mut |addr| out.push(addr));
        out
    }

    fn visit_refs(&self, f: &mut impl FnMut(CellAddress)) {
        match self {
            FormulaAst::Number(_) | FormulaAst::Text(_) => {}
            FormulaAst::Ref(a) => f(a.clone()),
            FormulaAst::Range(a, b) => {
                for row in a.row..=b.row {
                    for col in a.col..=b.col {
                        f(CellAddress::new(a.sheet.clone(), col, row));
                    }
                }
            }
            FormulaAst::Unary(_, e) => e.visit_refs(f),
            FormulaAst::Binary(_, l, r) => {
                l.visit_refs(f);
                r.visit_refs(f);
            }
            FormulaAst::Call(_, args) => {
                for a in args {
                    a.visit_refs(f);
                }
            }
        }
    }

    /// Ref and Range nodes in source order, ranges unexpanded.
    pub fn ref_nodes(&self) -> Vec<&FormulaAst> {
        let mut out = Vec::new();
        self.collect_ref_nodes(&mut out);
        out
    }

    fn collect_ref_nodes<'a>(&'a self, out: &mut Vec<&'a FormulaAst>) {
        match self {
            FormulaAst::Number(_) | FormulaAst::Text(_) => {}
            FormulaAst::Ref(_) | FormulaAst::Range(_, _) => out.push(self),
            FormulaAst::Unary(_, e) => e.collect_ref_nodes(out),
            FormulaAst::Binary(_, l, r) => {
                l.collect_ref_nodes(out);
                r.collect_ref_nodes(out);
            }
            FormulaAst::Call(_, args) => {
                for a in args {
                    a.collect_ref_nodes(out);
                }
            }
        }
    }

    /// Canonical source text beginning with `=`. Refs on `host_sheet` print
    /// without a sheet prefix.
    pub fn print(&self, host_sheet: &str) -> String {
        let mut s = String::from("=");
        self.print_prec(host_sheet, 0, &mut s);
        s
    }

    // Precedence levels: 1 comparisons, 2 +/-, 3 *//, 4 ^, 5 unary, 6 atoms.
    fn precedence(&self) -> u8 {
        match self {
            FormulaAst::Binary(op, _, _) => match op {
                BinaryOp::Eq
                | BinaryOp::Ne
                | BinaryOp::Lt
                | BinaryOp::Le
                | BinaryOp::Gt
                | BinaryOp::Ge => 1,
                BinaryOp::Add | BinaryOp::Sub => 2,
                BinaryOp::Mul | BinaryOp::Div => 3,
                BinaryOp::Pow => 4,
            },
            FormulaAst::Unary(_, _) => 5,
            _ => 6,
        }
    }

    fn print_prec(&self, host: &str, min_prec: u8, out: &mut String) {
        let prec = self.precedence();
        let parens = prec < min_prec;
        if parens {
            out.push('(');
        }
        match self {
            FormulaAst::Number(n) => out.push_str(&format_number(*n)),
            FormulaAst::Text(t) => {
                out.push('"');
                out.push_str(t);
                out.push('"');
            }
            FormulaAst::Ref(a) => out.push_str(&print_ref(a, host)),
            FormulaAst::Range(a, b) => {
                out.push_str(&print_ref(a, host));
                out.push(':');
                out.push_str(&b.a1());
            }
            FormulaAst::Unary(UnaryOp::Neg, e) => {
                out.push('-');
                e.print_prec(host, 5, out);
            }
            FormulaAst::Binary(op, l, r) => {
                // Left-associative operators need parens around an
                // equal-precedence right child; `^` is the mirror case.
                let (lp, rp) = if *op == BinaryOp::Pow {
                    (prec + 1, prec)
                } else {
                    (prec, prec + 1)
                };
                l.print_prec(host, lp, out);
                out.push_str(op.symbol());
                r.print_prec(host, rp, out);
            }
            FormulaAst::Call(f, args) => {
                out.push_str(f.name());
                out.push('(');
                for (i, a) in args.iter().enumerate() {
                    if i > 0 {
                        out.push(',');
                    }
                    a.print_prec(host, 0, out);
                }
                out.push(')');
            }
        }
        if parens {
            out.push(')');
        }
    }
}

fn print_ref(a: &CellAddress, host: &str) -> String {
    if a.sheet == host {
        a.a1()
    } else {
        a.qualified()
    }
}

/// Shortest round-trip decimal form of a finite float.
pub fn format_number(n: f64) -> String {
    format!("{n}")
}

// ---------------------------------------------------------------------------
// Lexer
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Number(f64),
    Text(String),
    Ident(String),
    Op(BinaryOp),
    Minus, // '-' doubles as Sub and unary negation
    Plus,
    LParen,
    RParen,
    Comma,
    Colon,
    Bang,
}

struct Lexer<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Lexer<'a> {
    fn new(src: &'a str) -> Self {
        Lexer {
            src: src.as_bytes(),
            pos: 0,
        }
    }

    fn tokens(mut self) -> Result<Vec<(usize, Token)>, FormulaError> {
        let mut out = Vec::new();
        while self.pos < self.src.len() {
            let start = self.pos;
            let b = self.src[self.pos];
            match b {
                b' ' | b'\t' => {
                    self.pos += 1;
                    continue;
                }
                b'(' => self.push_single(&mut out, Token::LParen),
                b')' => self.push_single(&mut out, Token::RParen),
                b',' => self.push_single(&mut out, Token::Comma),
                b':' => self.push_single(&mut out, Token::Colon),
                b'!' => self.push_single(&mut out, Token::Bang),
                b'+' => self.push_single(&mut out, Token::Plus),
                b'-' => self.push_single(&mut out, Token::Minus),
                b'*' => self.push_single(&mut out, Token::Op(BinaryOp::Mul)),
                b'/' => self.push_single(&mut out, Token::Op(BinaryOp::Div)),
                b'^' => self.push_single(&mut out, Token::Op(BinaryOp::Pow)),
                b'=' => self.push_single(&mut out, Token::Op(BinaryOp::Eq)),
                b'<' => {
                    self.pos += 1;
                    let op = match self.src.get(self.pos) {
                        Some(b'=') => {
                            self.pos += 1;
                            BinaryOp::Le
                        }
                        Some(b'>') => {
                            self.pos += 1;
                            BinaryOp::Ne
                        }
                        _ => BinaryOp::Lt,
                    };
                    out.push((start, Token::Op(op)));
                }
                b'>' => {
                    self.pos += 1;
                    let op = match self.src.get(self.pos) {
                        Some(b'=') => {
                            self.pos += 1;
                            BinaryOp::Ge
                        }
                        _ => BinaryOp::Gt,
                    };
                    out.push((start, Token::Op(op)));
                }
                b'"' => {
                    self.pos += 1;
                    let text_start = self.pos;
                    while self.pos < self.src.len() && self.src[self.pos] != b'"' {
                        self.pos += 1;
                    }
                    if self.pos >= self.src.len() {
                        return Err(FormulaError::new(start, "unterminated text literal"));
                    }
                    let text = std::str::from_utf8(&self.src[text_start..self.pos])
                        .map_err(|_| FormulaError::new(start, "invalid utf-8 in text literal"))?
                        .to_string();
                    self.pos += 1;
                    out.push((start, Token::Text(text)));
                }
                b'0'..=b'9' | b'.' => {
                    let mut end = self.pos;
                    while end < self.src.len()
                        && (self.src[end].is_ascii_digit() || self.src[end] == b'.')
                    {
                        end += 1;
                    }
                    // exponent suffix: 1e9, 2.5e-3
                    if end < self.src.len() && (self.src[end] | 0x20) == b'e' {
                        let mut e = end + 1;
                        if e < self.src.len() && (self.src[e] == b'+' || self.src[e] == b'-') {
                            e += 1;
                        }
                        if e < self.src.len() && self.src[e].is_ascii_digit() {
                            while e < self.src.len() && self.src[e].is_ascii_digit() {
                                e += 1;
                            }
                            end = e;
                        }
                    }
                    let lit = std::str::from_utf8(&self.src[self.pos..end]).expect("ascii");
                    let n: f64 = lit
                        .parse()
                        .map_err(|_| FormulaError::new(start, "malformed number"))?;
                    self.pos = end;
                    out.push((start, Token::Number(n)));
                }
                b'A'..=b'Z' | b'a'..=b'z' | b'_' => {
                    let mut end = self.pos;
                    while end < self.src.len()
                        && (self.src[end].is_ascii_alphanumeric() || self.src[end] == b'_')
                    {
                        end += 1;
                    }
                    let ident = std::str::from_utf8(&self.src[self.pos..end]).expect("ascii");
                    self.pos = end;
                    out.push((start, Token::Ident(ident.to_string())));
                }
                _ => {
                    return Err(FormulaError::new(
                        start,
                        format!("unexpected character '{}'", b as char),
                    ))
                }
            }
        }
        Ok(out)
    }

    fn push_single(&mut self, out: &mut Vec<(usize, Token)>, t: Token) {
        out.push((self.pos, t));
        self.pos += 1;
    }
}

// ---------------------------------------------------------------------------
// Parser
// ---------------------------------------------------------------------------

struct Parser<'a> {
    tokens: Vec<(usize, Token)>,
    pos: usize,
    host_sheet: &'a str,
    len: usize,
}

/// Parses formula source text (starting with `=`) into an AST.
///
/// Unprefixed cell references resolve onto `host_sheet`.
pub fn parse_formula(source: &str, host_sheet: &str) -> Result<FormulaAst, FormulaError> {
    let body = source
        .strip_prefix('=')
        .ok_or_else(|| FormulaError::new(0, "formula must begin with '='"))?;
    let tokens = Lexer::new(body).tokens().map_err(|e| e.shift(1))?;
    let mut p = Parser {
        tokens,
        pos: 0,
        host_sheet,
        len: body.len(),
    };
    // Token positions are relative to the body; shift past the '='.
    let ast = p.expr().map_err(|e| e.shift(1))?;
    if p.pos < p.tokens.len() {
        let at = p.tokens[p.pos].0;
        return Err(FormulaError::new(at + 1, "trailing input after expression"));
    }
    Ok(ast)
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos).map(|(_, t)| t)
    }

    fn here(&self) -> usize {
        self.tokens
            .get(self.pos)
            .map(|(p, _)| *p)
            .unwrap_or(self.len)
    }

    fn bump(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.pos).map(|(_, t)| t.clone());
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn expect(&mut self, want: &Token, what: &str) -> Result<(), FormulaError> {
        let at = self.here();
        match self.bump() {
            Some(ref t) if t == want => Ok(()),
            _ => Err(FormulaError::new(at, format!("expected {what}"))),
        }
    }

    fn expr(&mut self) -> Result<FormulaAst, FormulaError> {
        let mut lhs = self.arith()?;
        while let Some(Token::Op(op)) = self.peek() {
            let op = *op;
            if op.is_arithmetic() {
                break;
            }
            self.bump();
            let rhs = self.arith()?;
            lhs = FormulaAst::binary(op, lhs, rhs);
        }
        Ok(lhs)
    }

    fn arith(&mut self) -> Result<FormulaAst, FormulaError> {
        let mut lhs = self.term()?;
        loop {
            let op = match self.peek() {
                Some(Token::Plus) => BinaryOp::Add,
                Some(Token::Minus) => BinaryOp::Sub,
                _ => break,
            };
            self.bump();
            let rhs = self.term()?;
            lhs = FormulaAst::binary(op, lhs, rhs);
        }
        Ok(lhs)
    }

    fn term(&mut self) -> Result<FormulaAst, FormulaError> {
        let mut lhs = self.power()?;
        while let Some(Token::Op(op)) = self.peek() {
            let op = *op;
            if op != BinaryOp::Mul && op != BinaryOp::Div {
                break;
            }
            self.bump();
            let rhs = self.power()?;
            lhs = FormulaAst::binary(op, lhs, rhs);
        }
        Ok(lhs)
    }

    // Right-associative; the base is a unary expression so -2^2 == (-2)^2.
    fn power(&mut self) -> Result<FormulaAst, FormulaError> {
        let base = self.unary()?;
        if let Some(Token::Op(BinaryOp::Pow)) = self.peek() {
            self.bump();
            let exp = self.power()?;
            return Ok(FormulaAst::binary(BinaryOp::Pow, base, exp));
        }
        Ok(base)
    }

    fn unary(&mut self) -> Result<FormulaAst, FormulaError> {
        if let Some(Token::Minus) = self.peek() {
            self.bump();
            let e = self.unary()?;
            return Ok(FormulaAst::neg(e));
        }
        self.atom()
    }

    fn atom(&mut self) -> Result<FormulaAst, FormulaError> {
        let at = self.here();
        match self.bump() {
            Some(Token::Number(n)) => Ok(FormulaAst::Number(n)),
            Some(Token::Text(t)) => Ok(FormulaAst::Text(t)),
            Some(Token::LParen) => {
                let inner = self.expr()?;
                self.expect(&Token::RParen, "')'")?;
                Ok(inner)
            }
            Some(Token::Ident(name)) => self.ident_tail(at, name),
            _ => Err(FormulaError::new(at, "expected a value, reference or '('")),
        }
    }

    /// Resolves an identifier into a function call, a cell reference, or a
    /// range, depending on what follows it.
    fn ident_tail(&mut self, at: usize, name: String) -> Result<FormulaAst, FormulaError> {
        match self.peek() {
            Some(Token::LParen) => {
                let f = Function::from_name(&name)
                    .ok_or_else(|| FormulaError::new(at, format!("unknown function '{name}'")))?;
                self.bump();
                let mut args = Vec::new();
                if self.peek() == Some(&Token::RParen) {
                    self.bump();
                } else {
                    loop {
                        args.push(self.expr()?);
                        match self.bump() {
                            Some(Token::Comma) => continue,
                            Some(Token::RParen) => break,
                            _ => return Err(FormulaError::new(self.here(), "expected ',' or ')'")),
                        }
                    }
                }
                check_arity(f, args.len(), at)?;
                Ok(FormulaAst::Call(f, args))
            }
            Some(Token::Bang) => {
                if !is_valid_sheet_name(&name) {
                    return Err(FormulaError::new(at, format!("invalid sheet name '{name}'")));
                }
                self.bump();
                let cell_at = self.here();
                let cell = match self.bump() {
                    Some(Token::Ident(c)) => c,
                    _ => return Err(FormulaError::new(cell_at, "expected cell after '!'")),
                };
                let (col, row) = parse_a1(&cell).ok_or_else(|| {
                    FormulaError::new(cell_at, format!("invalid cell reference '{cell}'"))
                })?;
                let start = CellAddress::new(name, col, row);
                self.maybe_range(start)
            }
            _ => {
                let (col, row) = parse_a1(&name).ok_or_else(|| {
                    FormulaError::new(at, format!("invalid cell reference '{name}'"))
                })?;
                let start = CellAddress::new(self.host_sheet, col, row);
                self.maybe_range(start)
            }
        }
    }

    fn maybe_range(&mut self, start: CellAddress) -> Result<FormulaAst, FormulaError> {
        if self.peek() != Some(&Token::Colon) {
            return Ok(FormulaAst::Ref(start));
        }
        self.bump();
        let at = self.here();
        let end_tok = match self.bump() {
            Some(Token::Ident(c)) => c,
            _ => return Err(FormulaError::new(at, "expected cell after ':'")),
        };
        // An optional sheet prefix on the second endpoint must match.
        let end = if self.peek() == Some(&Token::Bang) {
            self.bump();
            let cell_at = self.here();
            let cell = match self.bump() {
                Some(Token::Ident(c)) => c,
                _ => return Err(FormulaError::new(cell_at, "expected cell after '!'")),
            };
            if end_tok != start.sheet {
                return Err(FormulaError::new(at, "range endpoints on different sheets"));
            }
            let (col, row) = parse_a1(&cell)
                .ok_or_else(|| FormulaError::new(cell_at, format!("invalid cell '{cell}'")))?;
            CellAddress::new(start.sheet.clone(), col, row)
        } else {
            let (col, row) = parse_a1(&end_tok)
                .ok_or_else(|| FormulaError::new(at, format!("invalid cell '{end_tok}'")))?;
            CellAddress::new(start.sheet.clone(), col, row)
        };
        Ok(normalize_range(start, end))
    }
}

fn check_arity(f: Function, n: usize, at: usize) -> Result<(), FormulaError> {
    match f {
        Function::If if n != 3 => Err(FormulaError::new(at, "IF takes exactly 3 arguments")),
        Function::If => Ok(()),
        _ if n == 0 => Err(FormulaError::new(
            at,
            format!("{} needs at least 1 argument", f.name()),
        )),
        _ => Ok(()),
    }
}

/// Normalizes range endpoints so the first is the top-left corner.
pub fn normalize_range(a: CellAddress, b: CellAddress) -> FormulaAst {
    debug_assert_eq!(a.sheet, b.sheet);
    let sheet = a.sheet.clone();
    let (r1, r2) = (a.row.min(b.row), a.row.max(b.row));
    let (c1, c2) = (a.col.min(b.col), a.col.max(b.col));
    FormulaAst::Range(
        CellAddress::new(sheet.clone(), c1, r1),
        CellAddress::new(sheet, c2, r2),
    )
}

impl fmt::Display for FormulaAst {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        // Display uses an impossible sheet name so every ref prints qualified.
        write!(f, "{}", self.print("\u{0}"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(s: &str) -> FormulaAst {
        parse_formula(s, "S").unwrap()
    }

    fn addr(col: u32, row: u32) -> CellAddress {
        CellAddress::new("S", col, row)
    }

    #[test]
    fn single_operator() {
        assert_eq!(
            parse("=1+2"),
            FormulaAst::binary(BinaryOp::Add, FormulaAst::Number(1.0), FormulaAst::Number(2.0))
        );
    }

    #[test]
    fn precedence_mul_over_add() {
        assert_eq!(
            parse("=2+3*4"),
            FormulaAst::binary(
                BinaryOp::Add,
                FormulaAst::Number(2.0),
                FormulaAst::binary(BinaryOp::Mul, FormulaAst::Number(3.0), FormulaAst::Number(4.0)),
            )
        );
    }

    #[test]
    fn sum_over_range() {
        assert_eq!(
            parse("=SUM(A1:A3)"),
            FormulaAst::Call(
                Function::Sum,
                vec![FormulaAst::Range(addr(1, 1), addr(1, 3))]
            )
        );
    }

    #[test]
    fn pow_right_associative() {
        assert_eq!(
            parse("=2^3^2"),
            FormulaAst::binary(
                BinaryOp::Pow,
                FormulaAst::Number(2.0),
                FormulaAst::binary(BinaryOp::Pow, FormulaAst::Number(3.0), FormulaAst::Number(2.0)),
            )
        );
    }

    #[test]
    fn unary_minus_binds_the_base() {
        assert_eq!(
            parse("=-2^2"),
            FormulaAst::binary(
                BinaryOp::Pow,
                FormulaAst::neg(FormulaAst::Number(2.0)),
                FormulaAst::Number(2.0),
            )
        );
        assert_eq!(
            parse("=2^-3"),
            FormulaAst::binary(
                BinaryOp::Pow,
                FormulaAst::Number(2.0),
                FormulaAst::neg(FormulaAst::Number(3.0)),
            )
        );
    }

    #[test]
    fn comparisons_bind_loosest() {
        assert_eq!(
            parse("=A1+1>B1"),
            FormulaAst::binary(
                BinaryOp::Gt,
                FormulaAst::binary(BinaryOp::Add, FormulaAst::Ref(addr(1, 1)), FormulaAst::Number(1.0)),
                FormulaAst::Ref(addr(2, 1)),
            )
        );
    }

    #[test]
    fn range_is_normalized() {
        assert_eq!(parse("=SUM(B3:A1)"), parse("=SUM(A1:B3)"));
    }

    #[test]
    fn sheet_prefix_resolves() {
        assert_eq!(
            parse("=Data!C2"),
            FormulaAst::Ref(CellAddress::new("Data", 3, 2))
        );
    }

    #[test]
    fn if_arity_enforced() {
        assert!(parse_formula("=IF(1,2)", "S").is_err());
        assert!(parse_formula("=SUM()", "S").is_err());
        assert!(parse_formula("=IF(A1>0,1,0)", "S").is_ok());
    }

    #[test]
    fn syntax_errors_carry_positions() {
        let err = parse_formula("=1+", "S").unwrap_err();
        assert!(err.position > 0);
        assert!(parse_formula("1+2", "S").is_err());
        assert!(parse_formula("=FOO(1)", "S").is_err());
    }

    #[test]
    fn print_round_trips_spec_examples() {
        for src in [
            "=1+2",
            "=2+3*4",
            "=SUM(A1:A3)",
            "=2^3^2",
            "=-2^2",
            "=A1+1>B1",
            "=IF(A1>0,A1,-A1)",
            "=(1+2)*3",
            "=1-(2-3)",
            "=(2^3)^2",
            "=Data!C2+A1",
            "=AVERAGE(A1,B2,Data!C3:D4)",
        ] {
            let ast = parse(src);
            let printed = ast.print("S");
            assert_eq!(parse(&printed), ast, "round trip failed for {src}");
        }
    }
}
