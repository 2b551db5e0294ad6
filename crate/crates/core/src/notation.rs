//! Text forms of partitions: `6^2,2` means `(6,6,2)`, the empty string (or
//! `()`) is the empty partition.

use crate::error::{Error, Result};
use crate::partition::{DeltaSet, Partition};

fn syntax(position: usize, reason: impl Into<String>) -> Error {
    Error::Syntax {
        position,
        reason: reason.into(),
    }
}

fn number(text: &str, position: usize) -> Result<usize> {
    let t = text.trim();
    if t.is_empty() {
        return Err(syntax(position, "missing number"));
    }
    t.parse()
        .map_err(|_| syntax(position, format!("`{t}` is not a non-negative integer")))
}

/// Comma-separated non-negative integers, each optionally followed by
/// `^count`. Positions in errors are byte offsets into `text`.
pub fn parse_parts(text: &str) -> Result<Vec<usize>> {
    let (body, offset) = strip_parens(text)?;
    if body.trim().is_empty() {
        return Ok(Vec::new());
    }
    let mut parts = Vec::new();
    let mut start = offset;
    for token in body.split(',') {
        match token.split_once('^') {
            Some((value, count)) => {
                let v = number(value, start)?;
                let c = number(count, start + value.len() + 1)?;
                parts.extend(std::iter::repeat_n(v, c));
            }
            None => parts.push(number(token, start)?),
        }
        start += token.len() + 1;
    }
    Ok(parts)
}

fn strip_parens(text: &str) -> Result<(&str, usize)> {
    let trimmed = text.trim_start();
    let lead = text.len() - trimmed.len();
    let trimmed = trimmed.trim_end();
    match (trimmed.strip_prefix('('), trimmed.ends_with(')')) {
        (Some(inner), true) => Ok((&inner[..inner.len() - 1], lead + 1)),
        (Some(_), false) => Err(syntax(lead, "unclosed `(`")),
        (None, true) => Err(syntax(lead + trimmed.len() - 1, "unmatched `)`")),
        (None, false) => Ok((trimmed, lead)),
    }
}

/// Parses and validates a partition.
pub fn parse_partition(text: &str) -> Result<Partition> {
    Partition::new(parse_parts(text)?)
}

/// Parses a list of diagonal hook lengths.
pub fn parse_delta(text: &str) -> Result<DeltaSet> {
    DeltaSet::new(parse_parts(text)?)
}

/// Compact form using exponents for repeated parts, e.g. `3^2,2^4`.
pub fn format_partition(lambda: &Partition) -> String {
    let mut out = Vec::new();
    let parts = lambda.parts();
    let mut i = 0;
    while i < parts.len() {
        let run = parts[i..].iter().take_while(|&&x| x == parts[i]).count();
        if run == 1 {
            out.push(parts[i].to_string());
        } else {
            out.push(format!("{}^{run}", parts[i]));
        }
        i += run;
    }
    out.join(",")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn plain_and_exponent_forms() {
        assert_eq!(parse_parts("6^2,2").unwrap(), vec![6, 6, 2]);
        assert_eq!(parse_parts("3,2,1").unwrap(), vec![3, 2, 1]);
        assert_eq!(parse_parts(" (3^2, 2^4) ").unwrap(), vec![3, 3, 2, 2, 2, 2]);
        assert_eq!(parse_parts("").unwrap(), Vec::<usize>::new());
        assert_eq!(parse_parts("()").unwrap(), Vec::<usize>::new());
        assert_eq!(parse_parts("1^0,1").unwrap(), vec![1]);
    }

    #[test]
    fn errors_carry_positions() {
        match parse_parts("3,x,1") {
            Err(Error::Syntax { position, .. }) => assert_eq!(position, 2),
            other => panic!("unexpected {other:?}"),
        }
        match parse_parts("3,2^") {
            Err(Error::Syntax { position, .. }) => assert_eq!(position, 4),
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(
            parse_parts("(3,2"),
            Err(Error::Syntax { position: 0, .. })
        ));
        assert!(matches!(
            parse_parts("3,,2"),
            Err(Error::Syntax { position: 2, .. })
        ));
        assert!(matches!(parse_parts("-1"), Err(Error::Syntax { .. })));
    }

    #[test]
    fn validation_after_expansion() {
        assert_eq!(
            parse_partition("2,3"),
            Err(Error::NonMonotonic { index: 1 })
        );
        assert_eq!(
            parse_partition("2,0"),
            Err(Error::NonPositivePart { index: 1 })
        );
        assert!(parse_delta("7,4").is_err());
        assert_eq!(parse_delta("15,5").unwrap().lengths(), &[15, 5]);
    }

    #[test]
    fn compact_form() {
        let l = parse_partition("3^2,2^4").unwrap();
        assert_eq!(format_partition(&l), "3^2,2^4");
        assert_eq!(format_partition(&Partition::empty()), "");
        assert_eq!(parse_partition(&format_partition(&l)).unwrap(), l);
    }
}
