//! LaTeX rendering of polynomials and prefactors, and a forgiving reader
//! that turns hand-written or emitted LaTeX back into a [`Poly`].

use std::fmt::Write as _;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use torsionlab_core::exactalg::{Poly, Rational, Var};
use torsionlab_core::torsion::{SymbolicConstant, DUAL_FACTOR_VOLUME};

fn rational_latex(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("\\frac{{{}}}{{{}}}", r.numer(), r.denom())
    }
}

/// `\frac{2}{9} m^{3} + m^{2} - \frac{1}{3}`.
pub fn poly_to_latex(p: &Poly) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let var = p.var().name();
    let mut out = String::new();
    for (d, c) in p.coeffs().iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        if out.is_empty() {
            if c.is_negative() {
                out.push('-');
            }
        } else {
            out.push_str(if c.is_negative() { " - " } else { " + " });
        }
        let a = c.abs();
        let show_coeff = d == 0 || !a.is_one();
        if show_coeff {
            out.push_str(&rational_latex(&a));
        }
        if d > 0 {
            if show_coeff {
                out.push(' ');
            }
            out.push_str(var);
            if d > 1 {
                let _ = write!(out, "^{{{d}}}");
            }
        }
    }
    out
}

fn symbol_latex(label: &str) -> String {
    if label == DUAL_FACTOR_VOLUME {
        "\\mathrm{vol}(\\widetilde{X}_{0,d})".into()
    } else {
        format!("\\mathrm{{{}}}", label.replace('_', "\\_"))
    }
}

fn power(sym: &str, e: i32) -> String {
    if e == 1 {
        sym.into()
    } else {
        format!("{sym}^{{{e}}}")
    }
}

/// `-\frac{6 \pi \mathrm{vol}(X)}{\mathrm{vol}(\widetilde{X}_d)}` and similar.
pub fn prefactor_to_latex(c: &SymbolicConstant) -> String {
    if c.rational.is_zero() {
        return "0".into();
    }
    let mut num: Vec<String> = Vec::new();
    let mut den: Vec<String> = Vec::new();
    let r = c.rational.abs();
    if !r.numer().is_one() {
        num.push(r.numer().to_string());
    }
    if !r.denom().is_one() {
        den.push(r.denom().to_string());
    }
    let mut place = |sym: String, e: i32| match e.signum() {
        1 => num.push(power(&sym, e)),
        -1 => den.push(power(&sym, -e)),
        _ => {}
    };
    place("\\pi".into(), c.pi_exp);
    place("\\mathrm{vol}(X)".into(), c.vol_x_exp);
    place("\\mathrm{vol}(\\widetilde{X}_d)".into(), c.vol_dual_exp);
    for (label, e) in &c.extra_factors {
        place(symbol_latex(label), *e);
    }
    let sign = if c.rational.is_negative() { "-" } else { "" };
    let top = if num.is_empty() { "1".into() } else { num.join(" ") };
    if den.is_empty() {
        format!("{sign}{top}")
    } else {
        format!("{sign}\\frac{{{top}}}{{{}}}", den.join(" "))
    }
}

/// `prefactor \cdot \left( P(m) \right)`.
pub fn torsion_to_latex(prefactor: &SymbolicConstant, poly: &Poly) -> String {
    if poly.is_zero() {
        return "0".into();
    }
    format!("{} \\cdot \\left( {} \\right)", prefactor_to_latex(prefactor), poly_to_latex(poly))
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("latex parse error at byte {pos}: {msg}")]
pub struct LatexError {
    pub pos: usize,
    pub msg: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Num(String),
    Var(char),
    Frac,
    Mul,
    Plus,
    Minus,
    Slash,
    Caret,
    Open(char),
    Close(char),
}

fn tokenize(src: &str) -> Result<Vec<(usize, Tok)>, LatexError> {
    let bytes = src.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    let err = |pos: usize, msg: String| LatexError { pos, msg };
    while i < bytes.len() {
        let c = bytes[i] as char;
        let start = i;
        match c {
            c if c.is_ascii_whitespace() || c == '~' => i += 1,
            '0'..='9' => {
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                out.push((start, Tok::Num(src[start..i].to_string())));
            }
            'a'..='z' | 'A'..='Z' => {
                out.push((start, Tok::Var(c)));
                i += 1;
            }
            '\\' => {
                i += 1;
                let name_start = i;
                while i < bytes.len() && bytes[i].is_ascii_alphabetic() {
                    i += 1;
                }
                let name = &src[name_start..i];
                if name.is_empty() {
                    // `\,`, `\;`, `\!`, `\ ` spacing
                    if i < bytes.len() && matches!(bytes[i], b',' | b';' | b'!' | b' ' | b':') {
                        i += 1;
                        continue;
                    }
                    return Err(err(start, "dangling backslash".into()));
                }
                match name {
                    "frac" | "tfrac" | "dfrac" => out.push((start, Tok::Frac)),
                    "cdot" | "times" => out.push((start, Tok::Mul)),
                    "left" | "right" | "big" | "Big" | "bigl" | "bigr" | "Bigl" | "Bigr" | "quad" | "qquad" => {}
                    _ => return Err(err(start, format!("unsupported command \\{name}"))),
                }
            }
            '+' => {
                out.push((start, Tok::Plus));
                i += 1;
            }
            '-' => {
                out.push((start, Tok::Minus));
                i += 1;
            }
            '*' => {
                out.push((start, Tok::Mul));
                i += 1;
            }
            '/' => {
                out.push((start, Tok::Slash));
                i += 1;
            }
            '^' => {
                out.push((start, Tok::Caret));
                i += 1;
            }
            '(' | '{' | '[' => {
                out.push((start, Tok::Open(c)));
                i += 1;
            }
            ')' | '}' | ']' => {
                out.push((start, Tok::Close(c)));
                i += 1;
            }
            _ => {
                let ch = src[start..].chars().next().expect("in bounds");
                return Err(err(start, format!("unexpected character `{ch}`")));
            }
        }
    }
    Ok(out)
}

struct Parser<'a> {
    toks: &'a [(usize, Tok)],
    at: usize,
    var: Var,
    end: usize,
}

fn closing(open: char) -> char {
    match open {
        '(' => ')',
        '{' => '}',
        _ => ']',
    }
}

fn int_lit(s: &str) -> Rational {
    Rational::from_integer(s.parse::<BigInt>().expect("digits only"))
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.at).map(|(_, t)| t)
    }

    fn pos(&self) -> usize {
        self.toks.get(self.at).map_or(self.end, |(p, _)| *p)
    }

    fn fail<T>(&self, msg: impl Into<String>) -> Result<T, LatexError> {
        Err(LatexError { pos: self.pos(), msg: msg.into() })
    }

    fn next(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.at).map(|(_, t)| t.clone());
        self.at += 1;
        t
    }

    fn expr(&mut self) -> Result<Poly, LatexError> {
        let mut acc = Poly::zero(self.var);
        let mut sign = match self.peek() {
            Some(Tok::Minus) => {
                self.at += 1;
                -Rational::one()
            }
            Some(Tok::Plus) => {
                self.at += 1;
                Rational::one()
            }
            _ => Rational::one(),
        };
        loop {
            let term = self.term()?;
            acc = &acc + &term.scale(&sign);
            sign = match self.peek() {
                Some(Tok::Plus) => Rational::one(),
                Some(Tok::Minus) => -Rational::one(),
                _ => return Ok(acc),
            };
            self.at += 1;
        }
    }

    fn starts_atom(&self) -> bool {
        matches!(self.peek(), Some(Tok::Num(_) | Tok::Var(_) | Tok::Frac | Tok::Open(_)))
    }

    fn term(&mut self) -> Result<Poly, LatexError> {
        let mut acc = self.power()?;
        loop {
            match self.peek() {
                Some(Tok::Mul) => {
                    self.at += 1;
                    acc = &acc * &self.power()?;
                }
                Some(Tok::Slash) => {
                    self.at += 1;
                    let d = self.power()?;
                    acc = acc.scale(&(Rational::one() / self.constant(&d)?));
                }
                _ if self.starts_atom() => acc = &acc * &self.power()?,
                _ => return Ok(acc),
            }
        }
    }

    fn constant(&self, p: &Poly) -> Result<Rational, LatexError> {
        match p.degree() {
            Some(0) => Ok(p.coeff(0)),
            None => self.fail("division by zero"),
            Some(_) => self.fail("division by a non-constant polynomial"),
        }
    }

    fn power(&mut self) -> Result<Poly, LatexError> {
        let base = self.atom()?;
        if self.peek() != Some(&Tok::Caret) {
            return Ok(base);
        }
        self.at += 1;
        let exp = match self.next() {
            Some(Tok::Num(s)) => s,
            Some(Tok::Open(o)) => {
                let Some(Tok::Num(s)) = self.next() else { return self.fail("exponent must be an integer") };
                if self.next() != Some(Tok::Close(closing(o))) {
                    return self.fail("unclosed exponent");
                }
                s
            }
            _ => return self.fail("exponent must be an integer"),
        };
        let e: u32 = exp.parse().map_err(|_| LatexError { pos: self.pos(), msg: "exponent too large".into() })?;
        Ok(base.pow(e))
    }

    fn group(&mut self) -> Result<Poly, LatexError> {
        match self.next() {
            Some(Tok::Open(o)) => {
                let inner = self.expr()?;
                if self.next() != Some(Tok::Close(closing(o))) {
                    return self.fail(format!("expected `{}`", closing(o)));
                }
                Ok(inner)
            }
            Some(Tok::Num(s)) if s.len() == 1 => Ok(Poly::constant(self.var, int_lit(&s))),
            Some(Tok::Var(c)) => self.variable(c),
            _ => self.fail("expected a braced argument"),
        }
    }

    fn variable(&self, c: char) -> Result<Poly, LatexError> {
        if c.to_string() == self.var.name() {
            Ok(Poly::x(self.var))
        } else {
            self.fail(format!("unexpected symbol `{c}`, expected `{}`", self.var.name()))
        }
    }

    fn atom(&mut self) -> Result<Poly, LatexError> {
        match self.next() {
            Some(Tok::Num(s)) => Ok(Poly::constant(self.var, int_lit(&s))),
            Some(Tok::Var(c)) => self.variable(c),
            Some(Tok::Frac) => {
                // `\frac12` packs both single-digit arguments into one token
                if let Some(Tok::Num(s)) = self.peek() {
                    if s.len() == 2 {
                        let (a, b) = s.split_at(1);
                        let (a, b) = (int_lit(a), int_lit(b));
                        self.at += 1;
                        if b.is_zero() {
                            return self.fail("division by zero");
                        }
                        return Ok(Poly::constant(self.var, a / b));
                    }
                }
                let num = self.group()?;
                let den = self.group()?;
                let d = self.constant(&den)?;
                Ok(num.scale(&(Rational::one() / d)))
            }
            Some(Tok::Open(o)) => {
                let inner = self.expr()?;
                if self.next() != Some(Tok::Close(closing(o))) {
                    return self.fail(format!("expected `{}`", closing(o)));
                }
                Ok(inner)
            }
            Some(Tok::Minus) => Ok(-&self.power()?),
            _ => {
                self.at -= 1;
                self.fail("expected a number, variable, fraction or bracket")
            }
        }
    }
}

/// Reads a polynomial in `var`. Accepts `\frac`, `\tfrac`, `\dfrac`,
/// `a/b`, `m^{k}` and `m^k`, `\cdot`, `*`, implicit products, and
/// `\left( … \right)` brackets.
pub fn parse_poly(src: &str, var: Var) -> Result<Poly, LatexError> {
    let toks = tokenize(src)?;
    let mut p = Parser { toks: &toks, at: 0, var, end: src.len() };
    let out = p.expr()?;
    if p.at < toks.len() {
        return p.fail("trailing input");
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use torsionlab_core::exactalg::{int, rat};
    use torsionlab_core::torsion::prefactor_constant;

    fn m(c: &[(i64, i64)]) -> Poly {
        Poly::from_coeffs(Var::M, c.iter().map(|&(n, d)| rat(n, d)).collect())
    }

    #[test]
    fn emits_descending_terms() {
        let p = m(&[(-1, 3), (0, 1), (1, 1), (2, 9)]);
        assert_eq!(poly_to_latex(&p), "\\frac{2}{9} m^{3} + m^{2} - \\frac{1}{3}");
        assert_eq!(poly_to_latex(&m(&[(0, 1), (-1, 1)])), "-m");
        assert_eq!(poly_to_latex(&Poly::zero(Var::M)), "0");
    }

    #[test]
    fn reads_common_spellings() {
        let want = m(&[(9, 18), (24, 18), (18, 18), (4, 18)]);
        for src in [
            "\\frac{4m^3+18m^2+24m+9}{18}",
            "\\tfrac{2}{9} m^{3} + m^2 + \\dfrac43 m + \\frac12",
            "2/9 \\cdot m^{3} + m^{2} + 4/3 m + 1/2",
            "\\frac{1}{18}\\left(4m^{3} + 18 m^{2} + 24 m + 9\\right)",
            "(2m+3)(2m^2 + 6m + 3)/18",
        ] {
            assert_eq!(parse_poly(src, Var::M).unwrap(), want, "{src}");
        }
        assert_eq!(parse_poly("-(m+1)^2", Var::M).unwrap(), m(&[(-1, 1), (-2, 1), (-1, 1)]));
    }

    #[test]
    fn rejects_garbage() {
        assert!(parse_poly("m + t", Var::M).is_err());
        assert!(parse_poly("\\frac{1}{m}", Var::M).is_err());
        assert!(parse_poly("m^{", Var::M).is_err());
        assert!(parse_poly("\\sqrt{2}", Var::M).is_err());
        assert!(parse_poly("1/0", Var::M).is_err());
    }

    #[test]
    fn prefactor_rendering() {
        let c = prefactor_constant(5, 3).unwrap();
        assert_eq!(prefactor_to_latex(&c), "-\\frac{6 \\pi}{\\mathrm{vol}(\\widetilde{X}_d)}");
        let half = SymbolicConstant::rational(rat(1, 2)).with_extra(DUAL_FACTOR_VOLUME, -1);
        assert_eq!(prefactor_to_latex(&half), "\\frac{1}{2 \\mathrm{vol}(\\widetilde{X}_{0,d})}");
        assert_eq!(prefactor_to_latex(&SymbolicConstant::rational(int(3))), "3");
    }
}
