//! Tokenizer shared by the Turtle loader, the RDF pattern parser and the
//! SELECT query parser.

use std::fmt;

#[derive(Debug, Clone, PartialEq)]
pub(crate) enum Tok {
    IriRef(String),
    PName {
        prefix: String,
        local: String,
    },
    Var(String),
    BNode(String),
    Str(String),
    /// `@word`, either a language tag or a Turtle directive.
    At(String),
    Integer(String),
    Decimal(String),
    Double(String),
    /// Bare word: keywords, `a`, `true`, function names.
    Word(String),
    Punct(&'static str),
}

impl Tok {
    pub fn is_punct(&self, p: &str) -> bool {
        matches!(self, Tok::Punct(q) if *q == p)
    }

    pub fn is_word(&self, w: &str) -> bool {
        matches!(self, Tok::Word(x) if x.eq_ignore_ascii_case(w))
    }
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::IriRef(i) => write!(f, "<{i}>"),
            Tok::PName { prefix, local } => write!(f, "{prefix}:{local}"),
            Tok::Var(v) => write!(f, "?{v}"),
            Tok::BNode(b) => write!(f, "_:{b}"),
            Tok::Str(s) => write!(f, "\"{s}\""),
            Tok::At(s) => write!(f, "@{s}"),
            Tok::Integer(s) | Tok::Decimal(s) | Tok::Double(s) | Tok::Word(s) => f.write_str(s),
            Tok::Punct(p) => f.write_str(p),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub(crate) struct Spanned {
    pub tok: Tok,
    pub line: usize,
    pub col: usize,
}

#[derive(Debug, Clone, PartialEq)]
pub(crate) struct LexError {
    pub line: usize,
    pub col: usize,
    pub message: String,
}

const PUNCTS: &[&str] = &[
    "^^", "!=", "<=", ">=", "&&", "||", ".", ";", ",", "{", "}", "(", ")", "[", "]", "/", "=", "*",
    "|", "+", "?", "^", "!", "<", ">", "-",
];

pub(crate) fn tokenize(src: &str) -> Result<Vec<Spanned>, LexError> {
    Lexer {
        chars: src.chars().collect(),
        pos: 0,
        line: 1,
        col: 1,
    }
    .run()
}

struct Lexer {
    chars: Vec<char>,
    pos: usize,
    line: usize,
    col: usize,
}

fn is_name_start(c: char) -> bool {
    c.is_alphabetic() || c == '_'
}

fn is_name_char(c: char) -> bool {
    c.is_alphanumeric() || c == '_' || c == '-' || c == '\u{b7}'
}

impl Lexer {
    fn peek(&self, ahead: usize) -> Option<char> {
        self.chars.get(self.pos + ahead).copied()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek(0)?;
        self.pos += 1;
        if c == '\n' {
            self.line += 1;
            self.col = 1;
        } else {
            self.col += 1;
        }
        Some(c)
    }

    fn err(&self, line: usize, col: usize, message: impl Into<String>) -> LexError {
        LexError {
            line,
            col,
            message: message.into(),
        }
    }

    fn run(mut self) -> Result<Vec<Spanned>, LexError> {
        let mut out = Vec::new();
        while let Some(c) = self.peek(0) {
            if c.is_whitespace() {
                self.bump();
                continue;
            }
            if c == '#' {
                while self.peek(0).is_some_and(|c| c != '\n') {
                    self.bump();
                }
                continue;
            }
            let (line, col) = (self.line, self.col);
            let tok = self.token(c)?;
            out.push(Spanned { tok, line, col });
        }
        Ok(out)
    }

    fn token(&mut self, c: char) -> Result<Tok, LexError> {
        let (line, col) = (self.line, self.col);
        match c {
            '<' => {
                if let Some(iri) = self.try_iri()? {
                    return Ok(Tok::IriRef(iri));
                }
            }
            '"' | '\'' => return self.string(c),
            '@' => {
                self.bump();
                let mut tag = String::new();
                while let Some(c) = self.peek(0) {
                    if c.is_ascii_alphanumeric() || (c == '-' && !tag.is_empty()) {
                        tag.push(c);
                        self.bump();
                    } else {
                        break;
                    }
                }
                if tag.is_empty() || tag.ends_with('-') {
                    return Err(self.err(line, col, "malformed language tag"));
                }
                return Ok(Tok::At(tag));
            }
            '?' | '$'
                if self
                    .peek(1)
                    .is_some_and(|c| c.is_alphanumeric() || c == '_') =>
            {
                self.bump();
                let mut name = String::new();
                while let Some(c) = self.peek(0).filter(|c| c.is_alphanumeric() || *c == '_') {
                    name.push(c);
                    self.bump();
                }
                return Ok(Tok::Var(name));
            }
            '_' if self.peek(1) == Some(':') => {
                self.bump();
                self.bump();
                let label = self.local_part();
                if label.is_empty() {
                    return Err(self.err(line, col, "empty blank node label"));
                }
                return Ok(Tok::BNode(label));
            }
            ':' => {
                self.bump();
                return Ok(Tok::PName {
                    prefix: String::new(),
                    local: self.local_part(),
                });
            }
            c if c.is_ascii_digit() => return Ok(self.number()),
            '+' | '-' if self.peek(1).is_some_and(|c| c.is_ascii_digit()) => {
                return Ok(self.number())
            }
            c if is_name_start(c) => {
                let mut word = String::new();
                while let Some(c) = self.peek(0) {
                    let dot_inside = c == '.' && self.peek(1).is_some_and(is_name_char);
                    if is_name_char(c) || dot_inside {
                        word.push(c);
                        self.bump();
                    } else {
                        break;
                    }
                }
                if self.peek(0) == Some(':') {
                    self.bump();
                    return Ok(Tok::PName {
                        prefix: word,
                        local: self.local_part(),
                    });
                }
                return Ok(Tok::Word(word));
            }
            _ => {}
        }
        for p in PUNCTS {
            if p.chars()
                .enumerate()
                .all(|(i, pc)| self.peek(i) == Some(pc))
            {
                for _ in 0..p.chars().count() {
                    self.bump();
                }
                return Ok(Tok::Punct(p));
            }
        }
        Err(self.err(line, col, format!("unexpected character '{c}'")))
    }

    /// At `<`: an IRI reference if a `>` follows with no whitespace or
    /// forbidden character in between; otherwise leaves the input alone.
    fn try_iri(&mut self) -> Result<Option<String>, LexError> {
        let mut i = 1;
        loop {
            match self.peek(i) {
                Some('>') => break,
                Some(c)
                    if c.is_whitespace()
                        || matches!(c, '<' | '"' | '{' | '}' | '|' | '^' | '`') =>
                {
                    return Ok(None)
                }
                Some(_) => i += 1,
                None => return Ok(None),
            }
        }
        let (line, col) = (self.line, self.col);
        self.bump();
        let mut iri = String::new();
        loop {
            match self.bump() {
                Some('>') => break,
                Some('\\') => {
                    let c = self.unicode_escape(line, col)?;
                    iri.push(c);
                }
                Some(c) => iri.push(c),
                None => unreachable!("closing '>' was seen"),
            }
        }
        Ok(Some(iri))
    }

    fn unicode_escape(&mut self, line: usize, col: usize) -> Result<char, LexError> {
        let len = match self.bump() {
            Some('u') => 4,
            Some('U') => 8,
            _ => return Err(self.err(line, col, "invalid escape sequence")),
        };
        let mut hex = String::new();
        for _ in 0..len {
            match self.bump() {
                Some(c) if c.is_ascii_hexdigit() => hex.push(c),
                _ => return Err(self.err(line, col, "invalid unicode escape")),
            }
        }
        u32::from_str_radix(&hex, 16)
            .ok()
            .and_then(char::from_u32)
            .ok_or_else(|| self.err(line, col, "invalid unicode code point"))
    }

    fn string(&mut self, quote: char) -> Result<Tok, LexError> {
        let (line, col) = (self.line, self.col);
        let long = self.peek(1) == Some(quote) && self.peek(2) == Some(quote);
        for _ in 0..(if long { 3 } else { 1 }) {
            self.bump();
        }
        let mut s = String::new();
        loop {
            match self.peek(0) {
                None => return Err(self.err(line, col, "unterminated string literal")),
                Some('\n') | Some('\r') if !long => {
                    return Err(self.err(line, col, "unterminated string literal"))
                }
                Some(c) if c == quote => {
                    if !long {
                        self.bump();
                        break;
                    }
                    if self.peek(1) == Some(quote) && self.peek(2) == Some(quote) {
                        self.bump();
                        self.bump();
                        self.bump();
                        break;
                    }
                    s.push(c);
                    self.bump();
                }
                Some('\\') => {
                    let (el, ec) = (self.line, self.col);
                    self.bump();
                    let c = match self.peek(0) {
                        Some('t') => '\t',
                        Some('b') => '\u{8}',
                        Some('n') => '\n',
                        Some('r') => '\r',
                        Some('f') => '\u{c}',
                        Some('"') => '"',
                        Some('\'') => '\'',
                        Some('\\') => '\\',
                        Some('u') | Some('U') => {
                            s.push(self.unicode_escape(el, ec)?);
                            continue;
                        }
                        _ => return Err(self.err(el, ec, "invalid escape sequence")),
                    };
                    self.bump();
                    s.push(c);
                }
                Some(c) => {
                    s.push(c);
                    self.bump();
                }
            }
        }
        Ok(Tok::Str(s))
    }

    fn local_part(&mut self) -> String {
        let mut local = String::new();
        while let Some(c) = self.peek(0) {
            let dot_inside = c == '.' && self.peek(1).is_some_and(|n| is_name_char(n) || n == ':');
            if is_name_char(c) || c == ':' || c == '%' || dot_inside {
                local.push(c);
                self.bump();
            } else if c == '\\'
                && self
                    .peek(1)
                    .is_some_and(|n| "_~.-!$&'()*+,;=/?#@%".contains(n))
            {
                self.bump();
                local.push(self.bump().unwrap());
            } else {
                break;
            }
        }
        local
    }

    fn number(&mut self) -> Tok {
        let mut s = String::new();
        if let Some(c @ ('+' | '-')) = self.peek(0) {
            s.push(c);
            self.bump();
        }
        let digits = |lx: &mut Lexer, s: &mut String| {
            while let Some(c) = lx.peek(0).filter(char::is_ascii_digit) {
                s.push(c);
                lx.bump();
            }
        };
        digits(self, &mut s);
        let mut decimal = false;
        if self.peek(0) == Some('.') && self.peek(1).is_some_and(|c| c.is_ascii_digit()) {
            decimal = true;
            s.push('.');
            self.bump();
            digits(self, &mut s);
        }
        let exp_follows = matches!(self.peek(0), Some('e' | 'E'))
            && (self.peek(1).is_some_and(|c| c.is_ascii_digit())
                || (matches!(self.peek(1), Some('+' | '-'))
                    && self.peek(2).is_some_and(|c| c.is_ascii_digit())));
        if exp_follows {
            s.push(self.bump().unwrap());
            if let Some(c @ ('+' | '-')) = self.peek(0) {
                s.push(c);
                self.bump();
            }
            digits(self, &mut s);
            return Tok::Double(s);
        }
        if decimal {
            Tok::Decimal(s)
        } else {
            Tok::Integer(s)
        }
    }
}
