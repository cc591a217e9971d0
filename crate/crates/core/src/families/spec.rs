use std::fmt;
use std::str::FromStr;

use super::FamilyError;

/// A named diagram, diagram combination, or list, as addressed by text such
/// as `omega:4`, `t^2*omega:2`, `(D:2,0,0#omega:2)@3` or `M:4,2`.
///
/// Grammar, loosest first:
///
/// ```text
/// sum     := prefix ('#' prefix)*
/// prefix  := ('t' ('^' int)? '*' | 'x3' '*') prefix | postfix
/// postfix := primary ('@' int)*
/// primary := atom | '(' sum ')'
/// ```
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum FamilySpec {
    Omega(usize),
    L(usize),
    C(usize),
    T(usize),
    Psi,
    Omega3,
    Circle,
    D(usize, usize, usize),
    E(usize),
    TTemplate,
    X3Template,
    Sigma(usize),
    M(usize, usize),
    /// `t^k` applied at the first internal vertex.
    Tpow(usize, Box<FamilySpec>),
    /// `x3` applied at the first internal vertex.
    X3(Box<FamilySpec>),
    /// Connected sum along the last circle of the left and the first of the right.
    Sum(Box<FamilySpec>, Box<FamilySpec>),
    /// Disjoint union with bare circles up to the given total.
    Pad(Box<FamilySpec>, usize),
}

impl FamilySpec {
    pub fn t_pow(k: usize, inner: FamilySpec) -> Self {
        match inner {
            _ if k == 0 => inner,
            FamilySpec::Tpow(j, x) => FamilySpec::Tpow(j + k, x),
            other => FamilySpec::Tpow(k, Box::new(other)),
        }
    }

    pub fn x3(inner: FamilySpec) -> Self {
        FamilySpec::X3(Box::new(inner))
    }

    pub fn sum(a: FamilySpec, b: FamilySpec) -> Self {
        FamilySpec::Sum(Box::new(a), Box::new(b))
    }

    pub fn pad(inner: FamilySpec, l: usize) -> Self {
        FamilySpec::Pad(Box::new(inner), l)
    }

    /// Parses one or more specs separated by `;`.
    pub fn parse_many(s: &str) -> Result<Vec<FamilySpec>, FamilyError> {
        s.split(';')
            .filter(|p| !p.trim().is_empty())
            .map(str::parse)
            .collect()
    }

    fn precedence(&self) -> u8 {
        match self {
            FamilySpec::Sum(..) => 0,
            FamilySpec::Tpow(..) | FamilySpec::X3(..) => 1,
            _ => 2,
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let wrap = |f: &mut fmt::Formatter<'_>, x: &FamilySpec, min: u8| {
            if x.precedence() < min {
                write!(f, "({x})")
            } else {
                write!(f, "{x}")
            }
        };
        match self {
            FamilySpec::Omega(k) => write!(f, "omega:{k}"),
            FamilySpec::L(k) => write!(f, "L:{k}"),
            FamilySpec::C(k) => write!(f, "C:{k}"),
            FamilySpec::T(k) => write!(f, "T:{k}"),
            FamilySpec::Psi => f.write_str("psi"),
            FamilySpec::Omega3 => f.write_str("Omega3"),
            FamilySpec::Circle => f.write_str("S1"),
            FamilySpec::D(i, j, k) => write!(f, "D:{i},{j},{k}"),
            FamilySpec::E(n) => write!(f, "E:{n}"),
            FamilySpec::TTemplate => f.write_str("t_template"),
            FamilySpec::X3Template => f.write_str("x3_template"),
            FamilySpec::Sigma(n) => write!(f, "Sigma:{n}"),
            FamilySpec::M(n, l) => write!(f, "M:{n},{l}"),
            FamilySpec::Tpow(k, x) => {
                if *k == 1 {
                    f.write_str("t*")?;
                } else {
                    write!(f, "t^{k}*")?;
                }
                wrap(f, x, 1)
            }
            FamilySpec::X3(x) => {
                f.write_str("x3*")?;
                wrap(f, x, 1)
            }
            FamilySpec::Sum(a, b) => {
                wrap(f, a, 0)?;
                f.write_str("#")?;
                wrap(f, b, 1)
            }
            FamilySpec::Pad(x, l) => {
                wrap(f, x, 2)?;
                write!(f, "@{l}")
            }
        }
    }
}

impl FromStr for FamilySpec {
    type Err = FamilyError;
    fn from_str(s: &str) -> Result<Self, FamilyError> {
        let mut p = Parser {
            src: s.as_bytes(),
            pos: 0,
        };
        let spec = p.sum()?;
        p.skip_ws();
        if p.pos != p.src.len() {
            return Err(p.err("unexpected trailing input"));
        }
        Ok(spec)
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn err(&self, msg: &str) -> FamilyError {
        FamilyError::Parse {
            pos: self.pos,
            msg: msg.to_string(),
        }
    }

    fn skip_ws(&mut self) {
        while self.src.get(self.pos).is_some_and(u8::is_ascii_whitespace) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: u8) -> Result<(), FamilyError> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.err(&format!("expected '{}'", c as char)))
        }
    }

    fn int(&mut self) -> Result<usize, FamilyError> {
        self.skip_ws();
        let start = self.pos;
        while self.src.get(self.pos).is_some_and(u8::is_ascii_digit) {
            self.pos += 1;
        }
        std::str::from_utf8(&self.src[start..self.pos])
            .unwrap()
            .parse()
            .map_err(|_| {
                self.pos = start;
                self.err("expected a non-negative integer")
            })
    }

    fn ident(&mut self) -> String {
        self.skip_ws();
        let start = self.pos;
        while self
            .src
            .get(self.pos)
            .is_some_and(|c| c.is_ascii_alphanumeric() || *c == b'_')
        {
            self.pos += 1;
        }
        String::from_utf8_lossy(&self.src[start..self.pos]).into_owned()
    }

    fn sum(&mut self) -> Result<FamilySpec, FamilyError> {
        let mut acc = self.prefix()?;
        while self.eat(b'#') {
            let rhs = self.prefix()?;
            acc = FamilySpec::sum(acc, rhs);
        }
        Ok(acc)
    }

    fn prefix(&mut self) -> Result<FamilySpec, FamilyError> {
        self.skip_ws();
        let save = self.pos;
        let name = self.ident();
        match name.as_str() {
            "t" if matches!(self.peek(), Some(b'*') | Some(b'^')) => {
                let k = if self.eat(b'^') { self.int()? } else { 1 };
                self.expect(b'*')?;
                Ok(FamilySpec::t_pow(k, self.prefix()?))
            }
            "x3" if self.peek() == Some(b'*') => {
                self.pos += 1;
                Ok(FamilySpec::x3(self.prefix()?))
            }
            _ => {
                self.pos = save;
                self.postfix()
            }
        }
    }

    fn postfix(&mut self) -> Result<FamilySpec, FamilyError> {
        let mut x = self.primary()?;
        while self.eat(b'@') {
            x = FamilySpec::pad(x, self.int()?);
        }
        Ok(x)
    }

    fn primary(&mut self) -> Result<FamilySpec, FamilyError> {
        if self.eat(b'(') {
            let x = self.sum()?;
            self.expect(b')')?;
            return Ok(x);
        }
        let start = self.pos;
        let name = self.ident();
        let params = |p: &mut Self, n: usize| -> Result<Vec<usize>, FamilyError> {
            p.expect(b':')?;
            let mut v = vec![p.int()?];
            while v.len() < n {
                p.expect(b',')?;
                v.push(p.int()?);
            }
            Ok(v)
        };
        Ok(match name.as_str() {
            "omega" => FamilySpec::Omega(params(self, 1)?[0]),
            "L" => FamilySpec::L(params(self, 1)?[0]),
            "C" => FamilySpec::C(params(self, 1)?[0]),
            "T" => FamilySpec::T(params(self, 1)?[0]),
            "E" => FamilySpec::E(params(self, 1)?[0]),
            "Sigma" => FamilySpec::Sigma(params(self, 1)?[0]),
            "D" => {
                let v = params(self, 3)?;
                FamilySpec::D(v[0], v[1], v[2])
            }
            "M" => {
                let v = params(self, 2)?;
                FamilySpec::M(v[0], v[1])
            }
            "psi" => FamilySpec::Psi,
            "Omega3" => FamilySpec::Omega3,
            "S1" => FamilySpec::Circle,
            "t_template" => FamilySpec::TTemplate,
            "x3_template" => FamilySpec::X3Template,
            "" => {
                self.pos = start;
                return Err(self.err("expected a family name"));
            }
            other => {
                self.pos = start;
                return Err(FamilyError::Unknown(other.to_string()));
            }
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rt(s: &str) {
        let spec: FamilySpec = s.parse().unwrap();
        assert_eq!(spec.to_string(), s);
        assert_eq!(spec.to_string().parse::<FamilySpec>().unwrap(), spec);
    }

    #[test]
    fn round_trips() {
        for s in [
            "omega:4",
            "t*omega:3",
            "t^5*omega:2",
            "x3*omega:4",
            "omega:2#t^2*omega:2",
            "D:1,0,2@3",
            "(D:2,0,0#omega:2)@3",
            "E:4@2",
            "Sigma:7",
            "M:4,2",
            "t*(omega:2#omega:2)",
            "psi",
            "Omega3@3",
        ] {
            rt(s);
        }
    }

    #[test]
    fn nested_t_collapses() {
        let s: FamilySpec = "t*t^2*omega:2".parse().unwrap();
        assert_eq!(s, FamilySpec::Tpow(3, Box::new(FamilySpec::Omega(2))));
    }

    #[test]
    fn errors() {
        assert!(matches!(
            "omega".parse::<FamilySpec>(),
            Err(FamilyError::Parse { .. })
        ));
        assert!(matches!(
            "foo:3".parse::<FamilySpec>(),
            Err(FamilyError::Unknown(_))
        ));
        assert!("omega:2 extra".parse::<FamilySpec>().is_err());
        assert_eq!(FamilySpec::parse_many("omega:2; psi").unwrap().len(), 2);
    }
}
