//! Recursive-descent parser for ℚ(s, c) expressions such as
//! `(s^2 - 1)/(s)`, `2*s*c^-2 + 1/2` or `q^2 - t`.

use num_bigint::BigInt;

use super::{CoeffError, Param, RatFunc};

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

pub fn parse_ratfunc(text: &str) -> Result<RatFunc, CoeffError> {
    let mut p = Parser { src: text.as_bytes(), pos: 0 };
    let v = p.expr()?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return Err(p.err("trailing input"));
    }
    Ok(v)
}

impl Parser<'_> {
    fn err(&self, what: &str) -> CoeffError {
        CoeffError::Parse(format!("{what} at byte {}", self.pos))
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<RatFunc, CoeffError> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    acc = acc.add(&self.term()?);
                }
                Some(b'-') => {
                    self.pos += 1;
                    acc = acc.sub(&self.term()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<RatFunc, CoeffError> {
        let mut acc = self.unary()?;
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    acc = acc.mul(&self.unary()?);
                }
                Some(b'/') => {
                    self.pos += 1;
                    acc = acc.div(&self.unary()?)?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> Result<RatFunc, CoeffError> {
        match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                Ok(self.unary()?.neg())
            }
            Some(b'+') => {
                self.pos += 1;
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<RatFunc, CoeffError> {
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            let neg = match self.peek() {
                Some(b'-') => {
                    self.pos += 1;
                    true
                }
                _ => false,
            };
            let e = self.integer()?;
            let e: i32 = e.try_into().map_err(|_| self.err("exponent too large"))?;
            return base.pow(if neg { -e } else { e });
        }
        Ok(base)
    }

    fn integer(&mut self) -> Result<BigInt, CoeffError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected integer"));
        }
        let digits = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
        digits.parse::<BigInt>().map_err(|e| CoeffError::Parse(e.to_string()))
    }

    fn atom(&mut self) -> Result<RatFunc, CoeffError> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let v = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.err("expected `)`"));
                }
                self.pos += 1;
                Ok(v)
            }
            Some(ch) if ch.is_ascii_digit() => Ok(RatFunc::from_bigint(self.integer()?)),
            Some(ch) if ch.is_ascii_alphabetic() => {
                let start = self.pos;
                while self.pos < self.src.len()
                    && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
                {
                    self.pos += 1;
                }
                let name = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
                match name {
                    "s" => Ok(RatFunc::s()),
                    "c" => Ok(RatFunc::c()),
                    other => other
                        .parse::<Param>()
                        .map(RatFunc::param)
                        .map_err(|_| CoeffError::Parse(format!("unknown symbol `{other}`"))),
                }
            }
            _ => Err(self.err("expected operand")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_rendered_forms() {
        for text in ["(s^2 - 1)/(s)", "s^2 + 3*s*c - 2*c^2 - 1", "1/2*s", "(1)/(c^2 + 1)", "0"] {
            let r = parse_ratfunc(text).unwrap();
            assert_eq!(parse_ratfunc(&r.to_string()).unwrap(), r, "{text}");
        }
    }

    #[test]
    fn params_resolve() {
        assert_eq!(parse_ratfunc("q").unwrap(), RatFunc::monomial(0, -2));
        assert_eq!(parse_ratfunc("t^-1").unwrap(), RatFunc::monomial(-2, 0));
        assert_eq!(parse_ratfunc("-s^2").unwrap(), RatFunc::monomial(2, 0).neg());
    }

    #[test]
    fn rejects_garbage() {
        assert!(parse_ratfunc("s +").is_err());
        assert!(parse_ratfunc("x1").is_err());
        assert!(parse_ratfunc("1/0").is_err());
    }
}
