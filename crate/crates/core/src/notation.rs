//! Reading elements, element lists and automorphisms from text.
//!
//! Accepted element forms depend on the group: display names (always),
//! words in the named generators (`a^-1b`, `B^2A^3B`), integers for cyclic
//! groups, cycle notation for permutation groups (`(12)(34)`), and tuples
//! over the direct factors of a product (`(a^-1,0)`).

use crate::automorphism::automorphism_from_images;
use crate::error::{Error, Result};
use crate::group::{ElementSet, FiniteGroup, GroupMap, Notation};

fn strip_ws(text: &str) -> String {
    text.chars().filter(|c| !c.is_whitespace()).collect()
}

/// Splits on commas that are not nested inside `()`, `[]` or `{}`.
pub fn split_top_level(text: &str) -> Vec<&str> {
    let mut parts = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, c) in text.char_indices() {
        match c {
            '(' | '[' | '{' => depth += 1,
            ')' | ']' | '}' => depth -= 1,
            ',' if depth == 0 => {
                parts.push(&text[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    parts.push(&text[start..]);
    parts
}

fn parse_error(offset: usize, expected: &str) -> Error {
    Error::Parse { offset, expected: expected.to_string() }
}

/// Parses an exponent after `^`: `3`, `-1`, `{-1}` or `(-1)`.
fn parse_exponent(s: &[u8], pos: &mut usize) -> Result<i64> {
    let close = match s.get(*pos) {
        Some(b'{') => Some(b'}'),
        Some(b'(') => Some(b')'),
        _ => None,
    };
    if close.is_some() {
        *pos += 1;
    }
    let start = *pos;
    if s.get(*pos) == Some(&b'-') {
        *pos += 1;
    }
    while s.get(*pos).is_some_and(u8::is_ascii_digit) {
        *pos += 1;
    }
    let text = std::str::from_utf8(&s[start..*pos]).expect("ascii");
    let value = text.parse::<i64>().map_err(|_| parse_error(start, "integer exponent"))?;
    if let Some(c) = close {
        if s.get(*pos) != Some(&c) {
            return Err(parse_error(*pos, &format!("`{}`", c as char)));
        }
        *pos += 1;
    }
    Ok(value)
}

/// Parses a word over `letters` into `(letter index, exponent)` factors.
pub fn parse_free_word(text: &str, letters: &[&str]) -> Result<Vec<(usize, i64)>> {
    let s = strip_ws(text);
    let bytes = s.as_bytes();
    let mut pos = 0;
    let mut out = Vec::new();
    while pos < bytes.len() {
        let letter = letters
            .iter()
            .position(|l| s[pos..].starts_with(l))
            .ok_or_else(|| parse_error(pos, &format!("one of {letters:?}")))?;
        pos += letters[letter].len();
        let k = if bytes.get(pos) == Some(&b'^') {
            pos += 1;
            parse_exponent(bytes, &mut pos)?
        } else {
            1
        };
        out.push((letter, k));
    }
    Ok(out)
}

/// Evaluates a word in the group's named generators. Supports parenthesized
/// sub-words with exponents, e.g. `(ab)^2a^-1`.
fn eval_word(g: &FiniteGroup, s: &str) -> Result<usize> {
    fn product(g: &FiniteGroup, s: &[u8], pos: &mut usize, depth: usize) -> Result<usize> {
        let mut acc = 0;
        while *pos < s.len() {
            if s[*pos] == b')' {
                if depth == 0 {
                    return Err(parse_error(*pos, "generator"));
                }
                return Ok(acc);
            }
            let base = if s[*pos] == b'(' {
                *pos += 1;
                let inner = product(g, s, pos, depth + 1)?;
                if s.get(*pos) != Some(&b')') {
                    return Err(parse_error(*pos, "`)`"));
                }
                *pos += 1;
                inner
            } else {
                let rest = std::str::from_utf8(&s[*pos..]).expect("ascii");
                let (name, x) = g
                    .generators()
                    .iter()
                    .filter(|(name, _)| rest.starts_with(name.as_str()))
                    .max_by_key(|(name, _)| name.len())
                    .map(|(name, x)| (name.clone(), *x))
                    .or_else(|| {
                        ["e", "E"].iter().find(|id| rest.starts_with(*id)).map(|id| (id.to_string(), 0))
                    })
                    .ok_or_else(|| {
                        let names: Vec<&str> = g.generators().iter().map(|(n, _)| n.as_str()).collect();
                        parse_error(*pos, &format!("one of {names:?}"))
                    })?;
                *pos += name.len();
                x
            };
            let k = if s.get(*pos) == Some(&b'^') {
                *pos += 1;
                parse_exponent(s, pos)?
            } else {
                1
            };
            acc = g.mul(acc, g.pow(base, k));
        }
        if depth > 0 {
            return Err(parse_error(*pos, "`)`"));
        }
        Ok(acc)
    }
    let bytes = s.as_bytes();
    let mut pos = 0;
    product(g, bytes, &mut pos, 0)
}

/// Cycle notation on `1..=degree`, composed left to right.
fn eval_cycles(g: &FiniteGroup, degree: usize, s: &str) -> Result<usize> {
    let mut perm: Vec<usize> = (0..degree).collect();
    let mut rest = s;
    let mut offset = 0;
    while !rest.is_empty() {
        if !rest.starts_with('(') {
            return Err(parse_error(offset, "`(`"));
        }
        let end = rest.find(')').ok_or_else(|| parse_error(offset, "`)`"))?;
        let body = &rest[1..end];
        let points: Vec<usize> = if body.contains(',') {
            body.split(',').map(|p| p.parse::<usize>().map_err(|_| parse_error(offset, "point"))).collect::<Result<_>>()?
        } else {
            body.chars()
                .map(|c| c.to_digit(10).map(|d| d as usize).ok_or_else(|| parse_error(offset, "digit")))
                .collect::<Result<_>>()?
        };
        if points.iter().any(|&p| p == 0 || p > degree) {
            return Err(parse_error(offset, &format!("points in 1..={degree}")));
        }
        let mut cycle = vec![usize::MAX; degree];
        for (k, &p) in points.iter().enumerate() {
            cycle[p - 1] = points[(k + 1) % points.len()] - 1;
        }
        perm = perm.iter().map(|&x| if cycle[x] == usize::MAX { x } else { cycle[x] }).collect();
        offset += end + 1;
        rest = &rest[end + 1..];
    }
    let name = crate::catalog::permutation_name(&perm);
    g.names().iter().position(|n| *n == name).ok_or(Error::UnknownElement(s.to_string()))
}

/// Parses one element of `g`.
pub fn parse_element(g: &FiniteGroup, text: &str) -> Result<usize> {
    let s = strip_ws(text);
    if s.is_empty() {
        return Err(parse_error(0, "element"));
    }
    if let Some(i) = g.names().iter().position(|n| strip_ws(n) == s) {
        return Ok(i);
    }
    if matches!(s.as_str(), "e" | "E" | "id" | "()") {
        return Ok(0);
    }
    match g.notation() {
        Notation::Product => {
            if s.starts_with('(') && s.ends_with(')') {
                let parts = split_top_level(&s[1..s.len() - 1]);
                if parts.len() == g.components().len() {
                    let mut index = 0;
                    for (part, comp) in parts.iter().zip(g.components()) {
                        index = index * comp.order() + parse_element(comp, part)?;
                    }
                    return Ok(index);
                }
            }
            Err(Error::UnknownElement(text.trim().to_string()))
        }
        Notation::Cyclic => {
            if let Ok(k) = s.parse::<i64>() {
                return Ok(k.rem_euclid(g.order() as i64) as usize);
            }
            eval_word(g, &s).map_err(|_| Error::UnknownElement(text.trim().to_string()))
        }
        Notation::Permutation { degree } => eval_cycles(g, degree, &s),
        Notation::Words | Notation::Matrix => {
            eval_word(g, &s).map_err(|_| Error::UnknownElement(text.trim().to_string()))
        }
    }
}

/// Parses a comma-separated element list, optionally wrapped in braces.
pub fn parse_element_set(g: &FiniteGroup, text: &str) -> Result<ElementSet> {
    let t = text.trim();
    let t = t.strip_prefix('{').and_then(|x| x.strip_suffix('}')).unwrap_or(t);
    let mut set = g.empty_set();
    if t.trim().is_empty() {
        return Ok(set);
    }
    for part in split_top_level(t) {
        set.insert(parse_element(g, part)?);
    }
    Ok(set)
}

/// Parses an automorphism specification:
///
/// - `id`, `inv` (the inversion map, abelian groups only), `conj:<elem>`;
/// - comma-separated images `x->y` whose sources generate the group.
pub fn parse_alpha(g: &FiniteGroup, text: &str) -> Result<GroupMap> {
    let t = text.trim();
    match t {
        "id" => return Ok(GroupMap::identity(g.order())),
        "inv" | "iota" => return GroupMap::inversion(g),
        _ => {}
    }
    if let Some(c) = t.strip_prefix("conj:") {
        return Ok(GroupMap::conjugation(g, parse_element(g, c)?));
    }
    let mut pairs = Vec::new();
    for part in split_top_level(t) {
        let (lhs, rhs) = part
            .split_once("->")
            .or_else(|| part.split_once('↦'))
            .ok_or_else(|| parse_error(0, "`source->image` pairs"))?;
        pairs.push((parse_element(g, lhs)?, parse_element(g, rhs)?));
    }
    automorphism_from_images(g, &pairs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::build_str;

    #[test]
    fn words_and_names() {
        let d8 = build_str("D8").unwrap();
        assert_eq!(parse_element(&d8, "a^2b").unwrap(), 6);
        assert_eq!(parse_element(&d8, "a^2 b").unwrap(), 6);
        assert_eq!(parse_element(&d8, "a^-1").unwrap(), 3);
        assert_eq!(parse_element(&d8, "a^{-1}b").unwrap(), 7);
        assert_eq!(parse_element(&d8, "(ab)^2").unwrap(), 0);
        assert_eq!(parse_element(&d8, "e").unwrap(), 0);
        assert!(parse_element(&d8, "c").is_err());
    }

    #[test]
    fn cyclic_integers_and_powers() {
        let z = build_str("Z14").unwrap();
        assert_eq!(parse_element(&z, "g^3").unwrap(), 3);
        assert_eq!(parse_element(&z, "-1").unwrap(), 13);
        assert_eq!(parse_element_set(&z, "g,g^3,g^5").unwrap().to_vec(), vec![1, 3, 5]);
    }

    #[test]
    fn tuples_in_products() {
        let g = build_str("Z2^2 x Z6").unwrap();
        let x = parse_element(&g, "(1,0,2)").unwrap();
        assert_eq!(g.element_name(x), "(1,0,2)");
        let q = build_str("Q8 x Z3").unwrap();
        let y = parse_element(&q, "(a^-1, 2)").unwrap();
        assert_eq!(q.element_name(y), "(a^3,2)");
        assert_eq!(parse_element(&q, "(e,1)").unwrap(), 1);
    }

    #[test]
    fn cycle_notation() {
        let s4 = build_str("S4").unwrap();
        let x = parse_element(&s4, "(1 2)(3 4)").unwrap();
        assert_eq!(s4.element_name(x), "(12)(34)");
        // left-to-right composition: (12)(13) = (123)
        let y = parse_element(&s4, "(12)(13)").unwrap();
        assert_eq!(s4.element_name(y), "(123)");
    }

    #[test]
    fn alpha_specs() {
        let d8 = build_str("D8").unwrap();
        let a = parse_alpha(&d8, "a->a^-1, b->a^2b").unwrap();
        assert!(a.is_involutory());
        assert_eq!(a.describe(&d8), "a->a^3, b->a^2b");
        assert!(parse_alpha(&d8, "inv").is_err());
        assert!(parse_alpha(&d8, "a->a^2,b->b").is_err());
        let c = parse_alpha(&d8, "conj:b").unwrap();
        assert_eq!(c.apply(1), 3);
    }

    #[test]
    fn free_words() {
        let w = parse_free_word("a^-1ba b^{2}", &["a", "b"]).unwrap();
        assert_eq!(w, vec![(0, -1), (1, 1), (0, 1), (1, 2)]);
        assert!(parse_free_word("ac", &["a", "b"]).is_err());
    }
}
