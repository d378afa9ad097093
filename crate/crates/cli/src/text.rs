//! Text syntax for words (`t1 t2 z(1,2)`), monomials
//! (`y[1,1,2]*y[2,2,2]^2`) and integer vectors (`2,3`).

use equivhilb::language::{Letter, Word, YMonomial, YVar};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("cannot parse {what} {input:?}: {msg}")]
pub struct TextError {
    what: &'static str,
    input: String,
    msg: String,
}

fn err(what: &'static str, input: &str, msg: impl Into<String>) -> TextError {
    TextError {
        what,
        input: input.to_string(),
        msg: msg.into(),
    }
}

/// Comma-separated non-negative integers.
pub fn parse_vec(s: &str) -> Result<Vec<u32>, TextError> {
    s.split(',')
        .map(|part| {
            part.trim()
                .parse::<u32>()
                .map_err(|_| err("vector", s, format!("{:?} is not a non-negative integer", part.trim())))
        })
        .collect()
}

fn parse_index_list(what: &'static str, whole: &str, inner: &str) -> Result<Vec<u32>, TextError> {
    inner
        .split(',')
        .map(|p| {
            let p = p.trim();
            match p.parse::<u32>() {
                Ok(v) if v >= 1 => Ok(v),
                _ => Err(err(what, whole, format!("index {p:?} must be a positive integer"))),
            }
        })
        .collect()
}

/// `t3` or `z(1,2)`.
pub fn parse_letter(s: &str) -> Result<Letter, TextError> {
    if let Some(rest) = s.strip_prefix('t') {
        return match rest.parse::<u32>() {
            Ok(j) if j >= 1 => Ok(Letter::Tau(j)),
            _ => Err(err("letter", s, "expected t<j> with j ≥ 1")),
        };
    }
    if let Some(inner) = s.strip_prefix("z(").and_then(|r| r.strip_suffix(')')) {
        return Ok(Letter::Zeta(parse_index_list("letter", s, inner)?.into()));
    }
    Err(err("letter", s, "expected t<j> or z(i1,...,iq)"))
}

/// Whitespace-separated letters; an empty string or `ε` is the empty word.
pub fn parse_word(s: &str) -> Result<Word, TextError> {
    let trimmed = s.trim();
    if trimmed.is_empty() || trimmed == "ε" {
        return Ok(Word::empty());
    }
    trimmed
        .split_whitespace()
        .map(parse_letter)
        .collect::<Result<Vec<_>, _>>()
        .map(Word)
}

/// `*`-separated factors `y[j,i,k]` with optional `^e`; `1` is the unit.
pub fn parse_monomial(s: &str) -> Result<YMonomial, TextError> {
    let trimmed = s.trim();
    let mut out = YMonomial::one();
    if trimmed == "1" {
        return Ok(out);
    }
    for factor in trimmed.split('*') {
        let factor = factor.trim();
        let (base, exp) = match factor.split_once('^') {
            Some((b, e)) => (
                b,
                e.trim()
                    .parse::<u32>()
                    .map_err(|_| err("monomial", s, format!("bad exponent in {factor:?}")))?,
            ),
            None => (factor, 1),
        };
        let inner = base
            .trim()
            .strip_prefix("y[")
            .and_then(|r| r.strip_suffix(']'))
            .ok_or_else(|| err("monomial", s, format!("{factor:?} is not of the form y[j,i,k]")))?;
        let idx = parse_index_list("monomial", s, inner)?;
        let [j, i, k] = idx[..] else {
            return Err(err("monomial", s, format!("{factor:?} needs exactly three indices")));
        };
        out.mul_var(YVar { j, i, k }, exp);
    }
    Ok(out)
}
