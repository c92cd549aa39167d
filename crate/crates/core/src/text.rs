//! Text and JSON forms of scalars, elements and algebra definitions.
//!
//! Scalars: integers, `q`, `+ - * /`, `^` with an integer (possibly
//! negative) exponent, parentheses, and juxtaposition as multiplication
//! (`2q^3`, `(1+q)(1-q)`).
//!
//! Elements: a sum of terms, each an optional coefficient followed by an
//! optional word `e1|e2|e3`. A term without a word is a multiple of the
//! empty word, so `1` is the unit. Letters may be written `e`, `t` or `c`
//! followed by the index.
//!
//! Rendering is canonical: terms in word order, coefficients in reduced
//! form, e.g. `(1+q) e1|e1 + e2` or `e1|e2 + q^2 e2|e1 + e3`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::braided::{BraidedAlgebra, Braiding, DiagonalQ, LetterSet, Multiplication};
use crate::error::{Error, Result};
use crate::linear::{Element, Element2, Letter, LinearV, VectorInV2, Word};
use crate::scalar::Scalar;

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Num(BigInt),
    Q,
    Letter(u32),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    Bar,
}

fn tokenize(s: &str) -> Result<Vec<(usize, Tok)>> {
    let err = |pos: usize, msg: &str| Error::Parse { pos, msg: msg.to_string() };
    let chars: Vec<(usize, char)> = s.char_indices().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let (pos, c) = chars[i];
        let digits_from = |start: usize| {
            let mut end = start;
            while end < chars.len() && chars[end].1.is_ascii_digit() {
                end += 1;
            }
            end
        };
        match c {
            _ if c.is_whitespace() => i += 1,
            '0'..='9' => {
                let end = digits_from(i);
                let text: String = chars[i..end].iter().map(|&(_, c)| c).collect();
                out.push((pos, Tok::Num(text.parse().expect("digits"))));
                i = end;
            }
            'q' => {
                out.push((pos, Tok::Q));
                i += 1;
            }
            'e' | 't' | 'c' => {
                let end = digits_from(i + 1);
                if end == i + 1 {
                    return Err(err(pos, "expected a letter index after the letter prefix"));
                }
                let text: String = chars[i + 1..end].iter().map(|&(_, c)| c).collect();
                let id = text.parse().map_err(|_| err(pos, "letter index too large"))?;
                out.push((pos, Tok::Letter(id)));
                i = end;
            }
            '+' => {
                out.push((pos, Tok::Plus));
                i += 1;
            }
            '-' | '−' => {
                out.push((pos, Tok::Minus));
                i += 1;
            }
            '*' => {
                out.push((pos, Tok::Star));
                i += 1;
            }
            '/' => {
                out.push((pos, Tok::Slash));
                i += 1;
            }
            '^' => {
                out.push((pos, Tok::Caret));
                i += 1;
            }
            '(' => {
                out.push((pos, Tok::LParen));
                i += 1;
            }
            ')' => {
                out.push((pos, Tok::RParen));
                i += 1;
            }
            '|' | '⊗' => {
                out.push((pos, Tok::Bar));
                i += 1;
            }
            _ => return Err(err(pos, &format!("unexpected character '{c}'"))),
        }
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    at: usize,
    end: usize,
}

impl Parser {
    fn new(s: &str) -> Result<Self> {
        Ok(Parser {
            toks: tokenize(s)?,
            at: 0,
            end: s.len(),
        })
    }

    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.at).map(|(_, t)| t)
    }

    fn pos(&self) -> usize {
        self.toks.get(self.at).map_or(self.end, |&(p, _)| p)
    }

    fn err(&self, msg: &str) -> Error {
        Error::Parse {
            pos: self.pos(),
            msg: msg.to_string(),
        }
    }

    fn eat(&mut self, t: &Tok) -> bool {
        if self.peek() == Some(t) {
            self.at += 1;
            true
        } else {
            false
        }
    }

    fn finish(&self) -> Result<()> {
        if self.at < self.toks.len() {
            Err(self.err("unexpected trailing input"))
        } else {
            Ok(())
        }
    }

    /// expr := ['+'|'-'] term (('+'|'-') term)*
    fn scalar_expr(&mut self) -> Result<Scalar> {
        let mut acc = if self.eat(&Tok::Minus) {
            -self.scalar_term()?
        } else {
            self.eat(&Tok::Plus);
            self.scalar_term()?
        };
        loop {
            if self.eat(&Tok::Plus) {
                acc += self.scalar_term()?;
            } else if self.eat(&Tok::Minus) {
                acc = acc - self.scalar_term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn starts_factor(&self) -> bool {
        matches!(self.peek(), Some(Tok::Num(_) | Tok::Q | Tok::LParen))
    }

    /// term := power (('*' | '/' | juxtaposition) power)*
    fn scalar_term(&mut self) -> Result<Scalar> {
        let mut acc = self.scalar_power()?;
        loop {
            if self.eat(&Tok::Star) {
                acc = acc * self.scalar_power()?;
            } else if self.eat(&Tok::Slash) {
                let pos = self.pos();
                let d = self.scalar_power()?;
                acc = acc.checked_div(&d).map_err(|_| Error::Parse {
                    pos,
                    msg: "division by zero".into(),
                })?;
            } else if self.starts_factor() {
                acc = acc * self.scalar_power()?;
            } else {
                return Ok(acc);
            }
        }
    }

    /// power := atom ['^' ['-'] integer]
    fn scalar_power(&mut self) -> Result<Scalar> {
        let base = self.scalar_atom()?;
        if !self.eat(&Tok::Caret) {
            return Ok(base);
        }
        let neg = self.eat(&Tok::Minus);
        let pos = self.pos();
        let e = match self.peek().cloned() {
            Some(Tok::Num(n)) => {
                self.at += 1;
                i64::try_from(n).map_err(|_| self.err("exponent too large"))?
            }
            _ => return Err(self.err("expected an integer exponent")),
        };
        base.pow(if neg { -e } else { e }).map_err(|_| Error::Parse {
            pos,
            msg: "negative power of zero".into(),
        })
    }

    fn scalar_atom(&mut self) -> Result<Scalar> {
        match self.peek().cloned() {
            Some(Tok::Num(n)) => {
                self.at += 1;
                Ok(Scalar::from_int(n))
            }
            Some(Tok::Q) => {
                self.at += 1;
                Ok(Scalar::q())
            }
            Some(Tok::LParen) => {
                self.at += 1;
                let s = self.scalar_expr()?;
                if !self.eat(&Tok::RParen) {
                    return Err(self.err("expected ')'"));
                }
                Ok(s)
            }
            Some(Tok::Minus) => {
                self.at += 1;
                Ok(-self.scalar_atom()?)
            }
            _ => Err(self.err("expected a number, q or '('")),
        }
    }

    fn word(&mut self) -> Result<Word> {
        let mut letters = Vec::new();
        loop {
            match self.peek().cloned() {
                Some(Tok::Letter(id)) => {
                    self.at += 1;
                    letters.push(Letter(id));
                }
                _ => return Err(self.err("expected a letter such as e1")),
            }
            if !self.eat(&Tok::Bar) {
                return Ok(Word::new(letters));
            }
        }
    }

    /// term := [coefficient] [word], not both empty
    fn element_term(&mut self) -> Result<Element> {
        let coeff = if self.starts_factor() {
            Some(self.scalar_term()?)
        } else {
            None
        };
        let word = match self.peek() {
            Some(Tok::Letter(_)) => Some(self.word()?),
            _ => None,
        };
        match (coeff, word) {
            (None, None) => Err(self.err("expected a term")),
            (c, w) => Ok(Element::term(w.unwrap_or_default(), c.unwrap_or_else(Scalar::one))),
        }
    }

    fn element(&mut self) -> Result<Element> {
        let mut acc = if self.eat(&Tok::Minus) {
            -&self.element_term()?
        } else {
            self.eat(&Tok::Plus);
            self.element_term()?
        };
        loop {
            if self.eat(&Tok::Plus) {
                acc += self.element_term()?;
            } else if self.eat(&Tok::Minus) {
                acc = &acc - &self.element_term()?;
            } else {
                return Ok(acc);
            }
        }
    }
}

pub fn parse_scalar(s: &str) -> Result<Scalar> {
    let mut p = Parser::new(s)?;
    let v = p.scalar_expr()?;
    p.finish()?;
    Ok(v)
}

pub fn parse_element(s: &str) -> Result<Element> {
    let mut p = Parser::new(s)?;
    let v = p.element()?;
    p.finish()?;
    Ok(v)
}

/// A single word such as `e1|e2`, or `1` for the empty word.
pub fn parse_word(s: &str) -> Result<Word> {
    if s.trim() == "1" {
        return Ok(Word::empty());
    }
    let mut p = Parser::new(s)?;
    let w = p.word()?;
    p.finish()?;
    Ok(w)
}

pub fn render_word(w: &Word) -> String {
    if w.is_empty() {
        return "1".into();
    }
    let parts: Vec<String> = w.iter().map(|l| format!("e{}", l.0)).collect();
    parts.join("|")
}

/// Coefficient text and whether it is a negated single monomial, so that
/// the sum can be written with ` - `.
fn render_coeff(c: &Scalar) -> (bool, String) {
    let is_monomial = c.is_polynomial() && c.numerator().is_monomial();
    if is_monomial {
        let text = c.to_string();
        match text.strip_prefix('-') {
            Some(rest) => (true, rest.to_string()),
            None => (false, text),
        }
    } else if c.is_polynomial() {
        (false, format!("({c})"))
    } else {
        (false, c.to_string())
    }
}

fn render_term(c: &Scalar, w: &Word) -> (bool, String) {
    let (neg, coeff) = render_coeff(c);
    let text = if w.is_empty() {
        coeff
    } else if coeff == "1" {
        render_word(w)
    } else {
        format!("{coeff} {}", render_word(w))
    };
    (neg, text)
}

pub fn render_element(x: &Element) -> String {
    let mut out = String::new();
    for (i, (w, c)) in x.iter().enumerate() {
        let (neg, text) = render_term(c, w);
        match (i, neg) {
            (0, false) => {}
            (0, true) => out.push('-'),
            (_, false) => out.push_str(" + "),
            (_, true) => out.push_str(" - "),
        }
        out.push_str(&text);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// `x ⊗̲ y` terms rendered as `(coeff) u ⊗ v`.
pub fn render_element2(x: &Element2) -> String {
    let mut out = String::new();
    for (i, ((u, v), c)) in x.iter().enumerate() {
        let (neg, coeff) = render_coeff(c);
        match (i, neg) {
            (0, false) => {}
            (0, true) => out.push('-'),
            (_, false) => out.push_str(" + "),
            (_, true) => out.push_str(" - "),
        }
        if coeff != "1" {
            out.push_str(&coeff);
            out.push(' ');
        }
        out.push_str(&format!("{} ⊗ {}", render_word(u), render_word(v)));
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

pub fn render_linear(x: &LinearV, var: &str) -> String {
    let e: Element = x.map_keys(|&l| Word::letter(l));
    render_element(&e).replace('e', var)
}

/// One term of the JSON element form.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct JsonTerm {
    pub coeff: String,
    pub word: Vec<u32>,
}

/// `{"terms":[{"coeff":"...","word":[1,2]},...]}` in canonical order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct JsonElement {
    pub terms: Vec<JsonTerm>,
}

impl JsonElement {
    pub fn from_element(x: &Element) -> Self {
        JsonElement {
            terms: x
                .iter()
                .map(|(w, c)| JsonTerm {
                    coeff: c.to_string(),
                    word: w.ids(),
                })
                .collect(),
        }
    }

    pub fn to_element(&self) -> Result<Element> {
        let mut out = Element::zero();
        for t in &self.terms {
            out.add_term(Word::from_ids(&t.word), parse_scalar(&t.coeff)?);
        }
        Ok(out)
    }
}

pub fn element_to_json(x: &Element) -> serde_json::Value {
    serde_json::to_value(JsonElement::from_element(x)).expect("serializable")
}

pub fn element_from_json(v: &serde_json::Value) -> Result<Element> {
    let j: JsonElement = serde_json::from_value(v.clone()).map_err(|e| Error::Invalid(e.to_string()))?;
    j.to_element()
}

/// A coefficient on a letter.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct LetterTerm {
    pub coeff: String,
    pub letter: u32,
}

/// A coefficient on a letter pair.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct PairTerm {
    pub coeff: String,
    pub pair: [u32; 2],
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ProductEntry {
    pub left: u32,
    pub right: u32,
    pub terms: Vec<LetterTerm>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct BraidEntry {
    pub left: u32,
    pub right: u32,
    pub terms: Vec<PairTerm>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct DiagonalEntry {
    pub left: u32,
    pub right: u32,
    pub coeff: String,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct DegreeEntry {
    pub letter: u32,
    pub degree: u32,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum BraidingSpec {
    Flip,
    /// `q_ij = base^{ij}`.
    DiagonalPower { base: String },
    /// Every ordered pair must be listed.
    Diagonal { entries: Vec<DiagonalEntry> },
    GradedFlip { base: String, degrees: Vec<DegreeEntry> },
    /// Every ordered pair must be listed in both tables.
    General {
        forward: Vec<BraidEntry>,
        backward: Vec<BraidEntry>,
    },
}

/// A finite braided algebra given by explicit tables.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct AlgebraFile {
    pub name: String,
    pub letters: Vec<u32>,
    #[serde(default)]
    pub unit: Option<u32>,
    /// Missing pairs multiply to zero.
    #[serde(default)]
    pub multiplication: Vec<ProductEntry>,
    pub braiding: BraidingSpec,
}

impl AlgebraFile {
    pub fn from_json_str(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::Invalid(format!("algebra file: {e}")))
    }

    pub fn build(&self) -> Result<BraidedAlgebra> {
        let letters: std::collections::BTreeSet<Letter> = self.letters.iter().copied().map(Letter).collect();
        if letters.is_empty() {
            return Err(Error::Invalid("algebra file: no letters".into()));
        }
        let known = |id: u32| {
            if letters.contains(&Letter(id)) {
                Ok(Letter(id))
            } else {
                Err(Error::UnknownLetter(id))
            }
        };
        let mut table: BTreeMap<(Letter, Letter), LinearV> = BTreeMap::new();
        for e in &self.multiplication {
            let mut v = LinearV::zero();
            for t in &e.terms {
                v.add_term(known(t.letter)?, parse_scalar(&t.coeff)?);
            }
            table.insert((known(e.left)?, known(e.right)?), v);
        }
        let pairs_table = |entries: &[BraidEntry]| -> Result<BTreeMap<(Letter, Letter), VectorInV2>> {
            let mut out = BTreeMap::new();
            for e in entries {
                let mut v = VectorInV2::zero();
                for t in &e.terms {
                    v.add_term((known(t.pair[0])?, known(t.pair[1])?), parse_scalar(&t.coeff)?);
                }
                out.insert((known(e.left)?, known(e.right)?), v);
            }
            Ok(out)
        };
        let braiding = match &self.braiding {
            BraidingSpec::Flip => Braiding::Flip,
            BraidingSpec::DiagonalPower { base } => Braiding::diagonal_power(parse_scalar(base)?),
            BraidingSpec::Diagonal { entries } => {
                let mut t = BTreeMap::new();
                for e in entries {
                    let c = parse_scalar(&e.coeff)?;
                    if c.is_zero() {
                        return Err(Error::Invalid(format!("q_{{{},{}}} must be nonzero", e.left, e.right)));
                    }
                    t.insert((known(e.left)?, known(e.right)?), c);
                }
                Braiding::Diagonal(DiagonalQ::Table(t))
            }
            BraidingSpec::GradedFlip { base, degrees } => Braiding::GradedFlip {
                base: parse_scalar(base)?,
                degrees: degrees
                    .iter()
                    .map(|d| Ok((known(d.letter)?, d.degree)))
                    .collect::<Result<_>>()?,
            },
            BraidingSpec::General { forward, backward } => Braiding::General {
                forward: pairs_table(forward)?,
                backward: pairs_table(backward)?,
            },
        };
        let mut alg = BraidedAlgebra::new(
            self.name.clone(),
            LetterSet::Finite(letters.clone()),
            Multiplication::Table(table),
            braiding,
        );
        if let Some(u) = self.unit {
            alg.unit = Some(known(u)?);
        }
        Ok(alg)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(k: i64) -> Scalar {
        Scalar::q_pow(k)
    }

    #[test]
    fn scalars() {
        assert_eq!(parse_scalar("1+q").unwrap(), Scalar::one() + q(1));
        assert_eq!(parse_scalar("2q^3").unwrap(), q(3) * Scalar::from(2));
        assert_eq!(parse_scalar("q^-2").unwrap(), q(-2));
        assert_eq!(parse_scalar("(1+q)(1-q)").unwrap(), Scalar::one() - q(2));
        assert_eq!(
            parse_scalar("(-1)/(-1+q)").unwrap(),
            Scalar::one().checked_div(&(Scalar::one() - q(1))).unwrap()
        );
        assert_eq!(parse_scalar("-q").unwrap(), -q(1));
        assert_eq!(parse_scalar("2*3 - 1").unwrap(), Scalar::from(5));
    }

    #[test]
    fn scalar_errors_carry_positions() {
        assert_eq!(
            parse_scalar("1 + x"),
            Err(Error::Parse {
                pos: 4,
                msg: "unexpected character 'x'".into()
            })
        );
        assert!(matches!(parse_scalar("1/0"), Err(Error::Parse { pos: 2, .. })));
        assert!(matches!(parse_scalar("(1+q"), Err(Error::Parse { pos: 4, .. })));
        assert!(matches!(parse_scalar("q^"), Err(Error::Parse { .. })));
    }

    #[test]
    fn elements() {
        let x = parse_element("(1+q) e1|e1 + e2").unwrap();
        let mut expected = Element::term(Word::from_ids(&[1, 1]), Scalar::one() + q(1));
        expected.add_term(Word::from_ids(&[2]), Scalar::one());
        assert_eq!(x, expected);
        assert_eq!(parse_element("1").unwrap(), Element::one());
        assert_eq!(parse_element("3").unwrap(), Element::one().scale(&Scalar::from(3)));
        assert_eq!(parse_element("t2|t1").unwrap(), Element::word(&[2, 1]));
        assert_eq!(parse_element("- q e1 + e1").unwrap(), Element::term(Word::from_ids(&[1]), Scalar::one() - q(1)));
        assert!(parse_element("e1 +").is_err());
        assert!(parse_element("e1|").is_err());
        assert!(parse_element("").is_err());
    }

    #[test]
    fn rendering() {
        let x = parse_element("e2 + (1+q) e1|e1").unwrap();
        assert_eq!(render_element(&x), "(1+q) e1|e1 + e2");
        let y = parse_element("e1|e2 + q^2 e2|e1 + e3").unwrap();
        assert_eq!(render_element(&y), "e1|e2 + q^2 e2|e1 + e3");
        assert_eq!(render_element(&Element::zero()), "0");
        assert_eq!(render_element(&parse_element("-e1 - 2q e2").unwrap()), "-e1 - 2q e2");
        let f = parse_element("q/(1-q) e1").unwrap();
        assert_eq!(render_element(&f), "(-q)/(-1+q) e1");
        assert_eq!(parse_element(&render_element(&f)).unwrap(), f);
        assert_eq!(render_element(&Element::one()), "1");
    }

    #[test]
    fn json_round_trip() {
        let x = parse_element("(1+q) e1|e1 + e2").unwrap();
        let v = element_to_json(&x);
        assert_eq!(
            v,
            serde_json::json!({"terms":[{"coeff":"1+q","word":[1,1]},{"coeff":"1","word":[2]}]})
        );
        assert_eq!(element_from_json(&v).unwrap(), x);
    }

    #[test]
    fn algebra_file() {
        let text = r#"{
            "name": "two-letter",
            "letters": [1, 2],
            "multiplication": [{"left": 1, "right": 1, "terms": [{"coeff": "1", "letter": 2}]}],
            "braiding": {"kind": "diagonal_power", "base": "q"}
        }"#;
        let a = AlgebraFile::from_json_str(text).unwrap().build().unwrap();
        assert_eq!(a.multiply(Letter(1), Letter(1)).unwrap(), LinearV::basis(Letter(2)));
        assert_eq!(a.multiply(Letter(1), Letter(2)).unwrap(), LinearV::zero());
        let bad = text.replace("\"letter\": 2", "\"letter\": 7");
        assert_eq!(AlgebraFile::from_json_str(&bad).unwrap().build().unwrap_err(), Error::UnknownLetter(7));
    }
}
