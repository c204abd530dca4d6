//! Text grammar for words.
//!
//! Letters are whitespace separated:
//!
//! ```text
//! b[i,j]   b[i,j]^-1     pure braid generator, i < j
//! a[i,j,k]               involution, three distinct indices
//! s[i,j]   s[i,j]^-1     sigma letter, ordered pair, i != j
//! ```

use crate::error::{Error, Result};

use super::letter::{BraidLetter, Index, Letter, SigmaLetter, Sign, Triple, TildeLetter};

/// A syntactically valid letter before any semantic checks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RawLetter {
    pub pos: usize,
    pub tag: char,
    pub indices: Vec<usize>,
    pub inverted: bool,
}

pub fn tokenize(text: &str) -> Result<Vec<RawLetter>> {
    let mut out = Vec::new();
    let mut start = None;
    for (pos, ch) in text.char_indices().chain(std::iter::once((text.len(), ' '))) {
        match (ch.is_whitespace(), start) {
            (false, None) => start = Some(pos),
            (true, Some(s)) => {
                out.push(parse_token(&text[s..pos], s)?);
                start = None;
            }
            _ => {}
        }
    }
    Ok(out)
}

fn parse_token(tok: &str, base: usize) -> Result<RawLetter> {
    let syntax = |off: usize, msg: &str| Error::Syntax { pos: base + off, msg: msg.to_string() };
    let bytes = tok.as_bytes();

    let tag = bytes[0] as char;
    if !matches!(tag, 'a' | 'b' | 's') {
        return Err(syntax(0, "expected letter tag 'a', 'b' or 's'"));
    }
    if bytes.get(1) != Some(&b'[') {
        return Err(syntax(1, "expected '['"));
    }

    let mut indices = Vec::new();
    let mut i = 2;
    loop {
        let digits_start = i;
        while i < bytes.len() && bytes[i].is_ascii_digit() {
            i += 1;
        }
        if i == digits_start {
            return Err(syntax(i, "expected an index"));
        }
        let value: usize = tok[digits_start..i]
            .parse()
            .map_err(|_| syntax(digits_start, "index too large"))?;
        indices.push(value);
        match bytes.get(i) {
            Some(b',') => i += 1,
            Some(b']') => {
                i += 1;
                break;
            }
            _ => return Err(syntax(i, "expected ',' or ']'")),
        }
    }

    let inverted = match &tok[i..] {
        "" => false,
        "^-1" => true,
        _ => return Err(syntax(i, "expected end of letter or '^-1'")),
    };

    Ok(RawLetter { pos: base, tag, indices, inverted })
}

fn check_range(raw: &RawLetter, bound: Index) -> Result<Vec<Index>> {
    raw.indices
        .iter()
        .map(|&x| {
            if x == 0 || x > bound as usize {
                Err(Error::IndexOutOfRange { pos: raw.pos, index: x, bound })
            } else {
                Ok(x as Index)
            }
        })
        .collect()
}

fn arity(raw: &RawLetter, n: usize) -> Result<()> {
    if raw.indices.len() != n {
        return Err(Error::Syntax {
            pos: raw.pos,
            msg: format!("letter '{}' takes {} indices, got {}", raw.tag, n, raw.indices.len()),
        });
    }
    Ok(())
}

fn sign_of(raw: &RawLetter) -> Sign {
    if raw.inverted {
        Sign::Minus
    } else {
        Sign::Plus
    }
}

fn with_pos(e: Error, pos: usize) -> Error {
    match e {
        Error::RepeatedIndex { .. } => Error::RepeatedIndex { pos },
        Error::Unordered { .. } => Error::Unordered { pos },
        other => other,
    }
}

/// Letters that can be read from the word grammar.
pub trait ParseLetter: Letter + Sized {
    fn from_raw(raw: &RawLetter, bound: Index) -> Result<Self>;
}

impl ParseLetter for BraidLetter {
    fn from_raw(raw: &RawLetter, bound: Index) -> Result<Self> {
        if raw.tag != 'b' {
            return Err(Error::UnexpectedLetter { pos: raw.pos, kind: Self::KIND });
        }
        arity(raw, 2)?;
        let ix = check_range(raw, bound)?;
        BraidLetter::new(ix[0], ix[1], sign_of(raw)).map_err(|e| with_pos(e, raw.pos))
    }
}

fn triple_from_raw(raw: &RawLetter, bound: Index) -> Result<Triple> {
    arity(raw, 3)?;
    if raw.inverted {
        return Err(Error::Syntax { pos: raw.pos, msg: "a-letters carry no exponent".into() });
    }
    let ix = check_range(raw, bound)?;
    Triple::new(ix[0], ix[1], ix[2]).map_err(|e| with_pos(e, raw.pos))
}

impl ParseLetter for Triple {
    fn from_raw(raw: &RawLetter, bound: Index) -> Result<Self> {
        if raw.tag != 'a' {
            return Err(Error::UnexpectedLetter { pos: raw.pos, kind: Self::KIND });
        }
        triple_from_raw(raw, bound)
    }
}

impl ParseLetter for TildeLetter {
    fn from_raw(raw: &RawLetter, bound: Index) -> Result<Self> {
        match raw.tag {
            'a' => triple_from_raw(raw, bound).map(TildeLetter::A),
            's' => {
                arity(raw, 2)?;
                let ix = check_range(raw, bound)?;
                SigmaLetter::new(ix[0], ix[1], sign_of(raw))
                    .map(TildeLetter::Sigma)
                    .map_err(|e| with_pos(e, raw.pos))
            }
            _ => Err(Error::UnexpectedLetter { pos: raw.pos, kind: Self::KIND }),
        }
    }
}
