//! Expression grammar: variables `x1..xN`, integer literals, `+ - * / ^`
//! (`^` takes a possibly negative integer exponent) and parentheses.
//! Whitespace is insignificant.

use num_bigint::BigInt;

use super::rational::RationalFunction;
use super::AlgebraError;

/// Parses `input` as an element of `Q(x1, ..., x_nvars)`.
pub fn parse_expression(input: &str, nvars: usize) -> Result<RationalFunction, AlgebraError> {
    let tokens = tokenize(input)?;
    let mut p = Parser { tokens, pos: 0, nvars };
    let value = p.expr()?;
    if p.pos != p.tokens.len() {
        return Err(p.error("unexpected trailing input"));
    }
    Ok(value)
}

/// Largest variable index mentioned in `input` (0 if none).
pub fn max_variable_index(input: &str) -> Result<usize, AlgebraError> {
    Ok(tokenize(input)?
        .into_iter()
        .filter_map(|t| match t {
            Token::Var(i) => Some(i),
            _ => None,
        })
        .max()
        .unwrap_or(0))
}

#[derive(Clone, Debug, PartialEq)]
enum Token {
    Int(BigInt),
    Var(usize),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

fn tokenize(input: &str) -> Result<Vec<Token>, AlgebraError> {
    let chars: Vec<char> = input.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let ch = chars[i];
        match ch {
            c if c.is_whitespace() => i += 1,
            '+' => {
                out.push(Token::Plus);
                i += 1
            }
            '-' => {
                out.push(Token::Minus);
                i += 1
            }
            '*' => {
                out.push(Token::Star);
                i += 1
            }
            '/' => {
                out.push(Token::Slash);
                i += 1
            }
            '^' => {
                out.push(Token::Caret);
                i += 1
            }
            '(' => {
                out.push(Token::LParen);
                i += 1
            }
            ')' => {
                out.push(Token::RParen);
                i += 1
            }
            'x' => {
                let start = i + 1;
                let mut j = start;
                while j < chars.len() && chars[j].is_ascii_digit() {
                    j += 1;
                }
                if j == start {
                    return Err(AlgebraError::Parse { pos: i, msg: "variable needs an index".into() });
                }
                let s: String = chars[start..j].iter().collect();
                let idx: usize = s
                    .parse()
                    .map_err(|_| AlgebraError::Parse { pos: i, msg: "bad variable index".into() })?;
                if idx == 0 {
                    return Err(AlgebraError::Parse { pos: i, msg: "variables start at x1".into() });
                }
                out.push(Token::Var(idx));
                i = j;
            }
            c if c.is_ascii_digit() => {
                let mut j = i;
                while j < chars.len() && chars[j].is_ascii_digit() {
                    j += 1;
                }
                let s: String = chars[i..j].iter().collect();
                out.push(Token::Int(s.parse().expect("digits")));
                i = j;
            }
            other => {
                return Err(AlgebraError::Parse { pos: i, msg: format!("unexpected character '{other}'") })
            }
        }
    }
    Ok(out)
}

struct Parser {
    tokens: Vec<Token>,
    pos: usize,
    nvars: usize,
}

impl Parser {
    fn error(&self, msg: &str) -> AlgebraError {
        AlgebraError::Parse { pos: self.pos, msg: msg.to_string() }
    }

    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn bump(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.pos).cloned();
        self.pos += 1;
        t
    }

    fn expr(&mut self) -> Result<RationalFunction, AlgebraError> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(Token::Plus) => {
                    self.pos += 1;
                    acc = acc.add(&self.term()?);
                }
                Some(Token::Minus) => {
                    self.pos += 1;
                    acc = acc.sub(&self.term()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<RationalFunction, AlgebraError> {
        let mut acc = self.unary()?;
        loop {
            match self.peek() {
                Some(Token::Star) => {
                    self.pos += 1;
                    acc = acc.mul(&self.unary()?);
                }
                Some(Token::Slash) => {
                    self.pos += 1;
                    acc = acc.div(&self.unary()?)?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> Result<RationalFunction, AlgebraError> {
        if self.peek() == Some(&Token::Minus) {
            self.pos += 1;
            return Ok(self.unary()?.neg());
        }
        if self.peek() == Some(&Token::Plus) {
            self.pos += 1;
            return self.unary();
        }
        self.power()
    }

    fn power(&mut self) -> Result<RationalFunction, AlgebraError> {
        let base = self.atom()?;
        if self.peek() != Some(&Token::Caret) {
            return Ok(base);
        }
        self.pos += 1;
        let negative = match self.peek() {
            Some(Token::Minus) => {
                self.pos += 1;
                true
            }
            Some(Token::Plus) => {
                self.pos += 1;
                false
            }
            _ => false,
        };
        let e = match self.bump() {
            Some(Token::Int(k)) => {
                i64::try_from(&k).map_err(|_| self.error("exponent too large"))?
            }
            _ => return Err(self.error("exponent must be an integer literal")),
        };
        base.pow(if negative { -e } else { e })
    }

    fn atom(&mut self) -> Result<RationalFunction, AlgebraError> {
        match self.bump() {
            Some(Token::Int(k)) => Ok(RationalFunction::constant(self.nvars, k)),
            Some(Token::Var(i)) => {
                if i > self.nvars {
                    return Err(AlgebraError::VariableOutOfRange { index: i, nvars: self.nvars });
                }
                Ok(RationalFunction::var(self.nvars, i - 1))
            }
            Some(Token::LParen) => {
                let inner = self.expr()?;
                match self.bump() {
                    Some(Token::RParen) => Ok(inner),
                    _ => Err(self.error("expected ')'")),
                }
            }
            _ => {
                self.pos = self.pos.saturating_sub(1);
                Err(self.error("expected a number, variable or '('"))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_fraction() {
        let f = parse_expression("(1 + x1 + x2)/(x1*x2)", 2).unwrap();
        assert_eq!(f.to_string(), "(x1 + x2 + 1)/(x1*x2)");
    }

    #[test]
    fn negative_exponents() {
        let f = parse_expression("x1^-2 * x1^3", 1).unwrap();
        assert_eq!(f, RationalFunction::var(1, 0));
        let g = parse_expression("-x1^2", 1).unwrap();
        assert_eq!(g.to_string(), "-x1^2");
    }

    #[test]
    fn rejects_out_of_range_variable() {
        assert!(matches!(
            parse_expression("x3", 2),
            Err(AlgebraError::VariableOutOfRange { index: 3, nvars: 2 })
        ));
    }

    #[test]
    fn rejects_garbage() {
        assert!(parse_expression("x1 +", 1).is_err());
        assert!(parse_expression("(x1", 1).is_err());
        assert!(parse_expression("x1 $ 2", 1).is_err());
        assert!(parse_expression("x1/0", 1).is_err());
        assert!(parse_expression("x1 x2", 2).is_err());
    }

    #[test]
    fn max_index() {
        assert_eq!(max_variable_index("x1 + x12/x3").unwrap(), 12);
        assert_eq!(max_variable_index("7").unwrap(), 0);
    }
}
