//! Words over the generators and the textual element format.
//!
//! ```text
//! word := term { term }
//! term := atom [ '^' nat ]
//! atom := 'a' | 'b' | 'I' | 'Z' | eps | '(' word ')'
//! eps  := 'eps' '(' 'A' '=' set ';' 'n0' '=' nat ')' '[' nat ')'
//! set  := '{' [ nat { ',' nat } ] '}'
//! ```
//!
//! `a` is `α`, `b` is `β`, `I` the unit, `Z` the adjoined zero and
//! `eps(A=..;n0=..)[i)` the identity of `i + A[n0)`. Juxtaposition is
//! composition, read left to right. Whitespace may appear between any two
//! tokens.

use std::fmt;

use thiserror::Error;

use crate::isometry::{Coset, Isometry, IsometryError};
use crate::zerotop::ZElem;

/// Largest natural accepted in a literal.
pub const MAX_LITERAL: u64 = u32::MAX as u64;

/// Evaluation stops once an intermediate value reaches this magnitude.
const MAX_MAGNITUDE: u64 = 1 << 44;
/// ... or once a domain lists this many isolated points.
const MAX_FINITE_PART: usize = 1 << 20;

fn guard(g: Isometry) -> Result<Isometry, IsometryError> {
    if g.tail_ran().max(g.tail_dom()) > MAX_MAGNITUDE
        || g.dom().finite_part().len() > MAX_FINITE_PART
    {
        return Err(IsometryError::Overflow(format!(
            "domain tail {} with shift {}",
            g.tail_dom(),
            g.shift()
        )));
    }
    Ok(g)
}

fn guarded_pow(g: &Isometry, mut k: u64) -> Result<Isometry, IsometryError> {
    let mut acc = Isometry::identity();
    let mut base = g.clone();
    while k > 0 {
        if k & 1 == 1 {
            acc = guard(acc.compose(&base))?;
        }
        k >>= 1;
        if k > 0 {
            base = guard(base.compose(&base))?;
        }
    }
    Ok(acc)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GenWord {
    Alpha,
    Beta,
    Identity,
    Zero,
    Eps { a: Vec<u64>, n0: u64, i: u64 },
    Product(Vec<GenWord>),
    Pow(Box<GenWord>, u64),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WordError {
    #[error("syntax error at position {pos}: expected {}", expected.join(" or "))]
    Syntax {
        pos: usize,
        expected: Vec<&'static str>,
    },
    #[error("invalid literal at position {pos}: {reason}")]
    Constraint { pos: usize, reason: String },
}

impl WordError {
    pub fn position(&self) -> usize {
        match self {
            WordError::Syntax { pos, .. } | WordError::Constraint { pos, .. } => *pos,
        }
    }
}

const ATOM_START: [&str; 6] = ["a", "b", "I", "Z", "eps", "("];

struct Parser<'s> {
    src: &'s [u8],
    pos: usize,
}

impl<'s> Parser<'s> {
    fn skip_ws(&mut self) {
        while self.src.get(self.pos).is_some_and(u8::is_ascii_whitespace) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn syntax(&self, expected: &[&'static str]) -> WordError {
        WordError::Syntax {
            pos: self.pos,
            expected: expected.to_vec(),
        }
    }

    fn expect(&mut self, token: &'static str) -> Result<(), WordError> {
        self.skip_ws();
        if self.src[self.pos..].starts_with(token.as_bytes()) {
            self.pos += token.len();
            Ok(())
        } else {
            Err(self.syntax(&[token]))
        }
    }

    fn nat(&mut self) -> Result<u64, WordError> {
        self.skip_ws();
        let start = self.pos;
        while self.src.get(self.pos).is_some_and(u8::is_ascii_digit) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.syntax(&["natural number"]));
        }
        let digits = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        match digits.parse::<u64>() {
            Ok(n) if n <= MAX_LITERAL => Ok(n),
            _ => Err(WordError::Constraint {
                pos: start,
                reason: format!("{digits} exceeds the literal limit {MAX_LITERAL}"),
            }),
        }
    }

    fn at_atom_start(&mut self) -> bool {
        match self.peek() {
            Some(b'a' | b'b' | b'I' | b'Z' | b'(') => true,
            Some(b'e') => self.src[self.pos..].starts_with(b"eps"),
            _ => false,
        }
    }

    fn word(&mut self) -> Result<GenWord, WordError> {
        let mut terms = vec![self.term()?];
        while self.at_atom_start() {
            terms.push(self.term()?);
        }
        Ok(if terms.len() == 1 {
            terms.pop().expect("one term")
        } else {
            GenWord::Product(terms)
        })
    }

    fn term(&mut self) -> Result<GenWord, WordError> {
        let atom = self.atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            let k = self.nat()?;
            Ok(GenWord::Pow(Box::new(atom), k))
        } else {
            Ok(atom)
        }
    }

    fn atom(&mut self) -> Result<GenWord, WordError> {
        let simple = match self.peek() {
            Some(b'a') => Some(GenWord::Alpha),
            Some(b'b') => Some(GenWord::Beta),
            Some(b'I') => Some(GenWord::Identity),
            Some(b'Z') => Some(GenWord::Zero),
            _ => None,
        };
        if let Some(atom) = simple {
            self.pos += 1;
            return Ok(atom);
        }
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.word()?;
                self.skip_ws();
                if self.peek() != Some(b')') {
                    let mut expected = ATOM_START.to_vec();
                    expected.extend(["^", ")"]);
                    return Err(self.syntax(&expected));
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(b'e') if self.src[self.pos..].starts_with(b"eps") => self.eps(),
            _ => Err(self.syntax(&ATOM_START)),
        }
    }

    fn eps(&mut self) -> Result<GenWord, WordError> {
        let start = self.pos;
        self.expect("eps")?;
        self.expect("(")?;
        self.expect("A")?;
        self.expect("=")?;
        self.expect("{")?;
        let mut a = Vec::new();
        if self.peek() != Some(b'}') {
            a.push(self.nat()?);
            while self.peek() == Some(b',') {
                self.pos += 1;
                a.push(self.nat()?);
            }
        }
        self.expect("}")?;
        self.expect(";")?;
        self.expect("n0")?;
        self.expect("=")?;
        let n0 = self.nat()?;
        self.expect(")")?;
        self.expect("[")?;
        let i = self.nat()?;
        self.expect(")")?;
        Coset::new(a.clone(), n0).map_err(|e| WordError::Constraint {
            pos: start,
            reason: e.to_string(),
        })?;
        Ok(GenWord::Eps { a, n0, i })
    }
}

pub fn parse(text: &str) -> Result<GenWord, WordError> {
    let mut p = Parser {
        src: text.as_bytes(),
        pos: 0,
    };
    let w = p.word()?;
    p.skip_ws();
    if p.pos != p.src.len() {
        let mut expected = ATOM_START.to_vec();
        expected.push("^");
        expected.push("end of input");
        return Err(p.syntax(&expected));
    }
    Ok(w)
}

pub fn eval_word(w: &GenWord) -> Result<ZElem, IsometryError> {
    Ok(match w {
        GenWord::Alpha => ZElem::Elem(Isometry::alpha()),
        GenWord::Beta => ZElem::Elem(Isometry::beta()),
        GenWord::Identity => ZElem::Elem(Isometry::identity()),
        GenWord::Zero => ZElem::Zero,
        GenWord::Eps { a, n0, i } => ZElem::Elem(Isometry::epsilon(a, *n0, *i)?),
        GenWord::Product(terms) => {
            let mut acc = ZElem::Elem(Isometry::identity());
            for t in terms {
                acc = match (acc, eval_word(t)?) {
                    (ZElem::Elem(g), ZElem::Elem(d)) => ZElem::Elem(guard(g.compose(&d))?),
                    _ => ZElem::Zero,
                };
            }
            acc
        }
        GenWord::Pow(base, k) => match (base.as_ref(), *k) {
            (_, 0) => ZElem::Elem(Isometry::identity()),
            (GenWord::Alpha, k) => ZElem::Elem(guard(Isometry::alpha_pow(k))?),
            (GenWord::Beta, k) => ZElem::Elem(guard(Isometry::beta_pow(k))?),
            (other, k) => match eval_word(other)? {
                ZElem::Zero => ZElem::Zero,
                ZElem::Elem(g) => ZElem::Elem(guarded_pow(&g, k)?),
            },
        },
    })
}

/// Parses and evaluates in one go.
pub fn eval_str(text: &str) -> Result<ZElem, WordError> {
    let w = parse(text)?;
    eval_word(&w).map_err(|e| WordError::Constraint {
        pos: 0,
        reason: e.to_string(),
    })
}

/// The canonical word of an element; `Z` for zero.
pub fn format(x: &ZElem) -> String {
    x.to_string()
}

impl fmt::Display for GenWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GenWord::Alpha => write!(f, "a"),
            GenWord::Beta => write!(f, "b"),
            GenWord::Identity => write!(f, "I"),
            GenWord::Zero => write!(f, "Z"),
            GenWord::Eps { a, n0, i } => {
                let a: Vec<String> = a.iter().map(u64::to_string).collect();
                write!(f, "eps(A={{{}}};n0={n0})[{i})", a.join(","))
            }
            GenWord::Product(terms) => {
                for (k, t) in terms.iter().enumerate() {
                    if k > 0 {
                        write!(f, " ")?;
                    }
                    match t {
                        GenWord::Product(_) => write!(f, "({t})")?,
                        _ => write!(f, "{t}")?,
                    }
                }
                Ok(())
            }
            GenWord::Pow(base, k) => match base.as_ref() {
                GenWord::Product(_) | GenWord::Pow(..) => write!(f, "({base})^{k}"),
                _ => write!(f, "{base}^{k}"),
            },
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cofinite::CofiniteSet;
    use crate::equations::{enumerate_elements, EnumBounds};

    fn elem(text: &str) -> Isometry {
        match eval_str(text).unwrap() {
            ZElem::Elem(g) => g,
            ZElem::Zero => panic!("{text} evaluated to zero"),
        }
    }

    #[test]
    fn parse_shapes() {
        assert_eq!(
            parse("b^2 a^3").unwrap(),
            GenWord::Product(vec![
                GenWord::Pow(Box::new(GenWord::Beta), 2),
                GenWord::Pow(Box::new(GenWord::Alpha), 3),
            ])
        );
        assert_eq!(
            parse("eps(A={1};n0=3)[1) b a^3").unwrap(),
            GenWord::Product(vec![
                GenWord::Eps {
                    a: vec![1],
                    n0: 3,
                    i: 1
                },
                GenWord::Beta,
                GenWord::Pow(Box::new(GenWord::Alpha), 3),
            ])
        );
        assert_eq!(parse("(a b)^2").unwrap().to_string(), "(a b)^2");
        assert_eq!(
            parse(" eps ( A = { 1 , 2 } ; n0 = 4 ) [ 0 ) ")
                .unwrap()
                .to_string(),
            "eps(A={1,2};n0=4)[0)"
        );
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(parse("a^"), Err(WordError::Syntax { pos: 2, .. })));
        assert!(matches!(parse(""), Err(WordError::Syntax { pos: 0, .. })));
        assert!(matches!(parse("a)"), Err(WordError::Syntax { pos: 1, .. })));
        assert!(matches!(
            parse("(a b"),
            Err(WordError::Syntax { pos: 4, .. })
        ));
        assert!(matches!(parse("x"), Err(WordError::Syntax { pos: 0, .. })));
        assert!(matches!(
            parse("eps(A={1,2};n0=3)[0)"),
            Err(WordError::Constraint { pos: 0, .. })
        ));
        assert!(matches!(
            parse("a^99999999999"),
            Err(WordError::Constraint { pos: 2, .. })
        ));
        assert!(matches!(parse("ep"), Err(WordError::Syntax { pos: 0, .. })));
    }

    #[test]
    fn evaluation() {
        assert_eq!(eval_str("a b").unwrap(), ZElem::Elem(Isometry::identity()));
        assert_eq!(elem("b a"), Isometry::identity_of(CofiniteSet::ray(2)));
        assert!((1..=10).all(|n| elem("b a").eval(n) == (n >= 2).then_some(n)));
        assert_eq!(eval_str("Z a^5").unwrap(), ZElem::Zero);
        assert_eq!(eval_str("Z^0").unwrap(), ZElem::Elem(Isometry::identity()));
        assert_eq!(elem("a^0"), Isometry::identity());
        assert_eq!(elem("b^0"), Isometry::identity());
        assert_eq!(elem("(b a^2)^3"), elem("b a^2 b a^2 b a^2"));
        assert!(matches!(
            eval_str("(a^4294967295)^4294967295"),
            Err(WordError::Constraint { .. })
        ));
        assert_eq!(elem("(a^3)^5"), Isometry::alpha_pow(15));
    }

    #[test]
    fn formatting() {
        assert_eq!(format(&ZElem::Elem(Isometry::identity())), "I");
        assert_eq!(format(&ZElem::Elem(Isometry::bicyclic(2, 4))), "b^2 a^4");
        let g = Isometry::new(CofiniteSet::new([2], 4).unwrap(), 2).unwrap();
        assert_eq!(format(&ZElem::Elem(g)), "eps(A={1};n0=3)[1) b^1 a^3");
        assert_eq!(format(&ZElem::Zero), "Z");
    }

    #[test]
    fn format_round_trip() {
        for g in enumerate_elements(EnumBounds::new(2, 3)) {
            let x = ZElem::Elem(g);
            assert_eq!(eval_str(&format(&x)).unwrap(), x);
        }
        assert_eq!(eval_str(&format(&ZElem::Zero)).unwrap(), ZElem::Zero);
    }

    #[test]
    fn word_display_round_trips_through_parse() {
        for text in [
            "a b^2 (b a)^3",
            "eps(A={1};n0=3)[2) (a^2 b)^0 Z",
            "((a))",
            "(a^2)^3",
        ] {
            let w = parse(text).unwrap();
            assert_eq!(parse(&w.to_string()).unwrap(), w, "{text}");
        }
    }
}
