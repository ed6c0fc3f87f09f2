//! The brace-list encoding of collections of cells, e.g.
//! `{{{1, 1}, {2, 2}}, {{2, 1}, {3, 2}}}`, and the same structure as a JSON
//! array of arrays. Each cell is its lower left and upper right corner.

use std::fmt::Write;

use polyideal_core::geometry::{Cell, CellCollection, GridPoint};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ParseError {
    #[error("malformed encoding: {0}")]
    Malformed(String),
    #[error(transparent)]
    Invalid(#[from] polyideal_core::Error),
}

/// A collection read from text, together with the number of cells listed
/// (which exceeds the collection size when duplicates were dropped).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Parsed {
    pub collection: CellCollection,
    pub listed: usize,
}

/// Drops an assignment prefix such as `Q=` and a trailing `;`.
fn strip_session_noise(text: &str) -> &str {
    let mut t = text.trim();
    if let Some(s) = t.strip_suffix(';') {
        t = s.trim_end();
    }
    if let Some(eq) = t.find('=') {
        let name = t[..eq].trim();
        if !name.is_empty() && name.chars().all(|c| c.is_ascii_alphanumeric() || c == '_') {
            t = t[eq + 1..].trim_start();
        }
    }
    t
}

/// Brace syntax becomes JSON by swapping the brackets; mixing is refused.
fn to_json_syntax(text: &str) -> Result<String, ParseError> {
    let braces = text.contains(['{', '}']);
    let brackets = text.contains(['[', ']']);
    match (braces, brackets) {
        (true, true) => Err(ParseError::Malformed("mixes braces and brackets".into())),
        (true, false) => Ok(text.replace('{', "[").replace('}', "]")),
        _ => Ok(text.to_string()),
    }
}

fn malformed(e: serde_json::Error) -> ParseError {
    ParseError::Malformed(e.to_string())
}

pub fn parse_corner_pairs(text: &str) -> Result<Vec<[[i64; 2]; 2]>, ParseError> {
    let json = to_json_syntax(strip_session_noise(text))?;
    serde_json::from_str(&json).map_err(malformed)
}

/// Builds the collection from corner pairs; duplicates are an error unless
/// `dedupe` is set.
pub fn collection_from_pairs(pairs: &[[[i64; 2]; 2]], dedupe: bool) -> Result<Parsed, ParseError> {
    let cells = pairs
        .iter()
        .map(|[a, b]| Cell::from_corners(GridPoint::new(a[0], a[1]), GridPoint::new(b[0], b[1])))
        .collect::<Result<Vec<_>, _>>()?;
    let collection = if dedupe {
        CellCollection::new_dedup(cells)?
    } else {
        CellCollection::new(cells)?
    };
    Ok(Parsed {
        collection,
        listed: pairs.len(),
    })
}

/// Parses either syntax. Whitespace is insignificant.
pub fn parse_encoding(text: &str, dedupe: bool) -> Result<Parsed, ParseError> {
    collection_from_pairs(&parse_corner_pairs(text)?, dedupe)
}

/// Hole corners as `{{2,3},{5,5}}` or `[[2,3],[5,5]]`; `auto` means
/// detect them.
pub fn parse_holes(text: &str) -> Result<Option<Vec<GridPoint>>, ParseError> {
    let t = text.trim();
    if t.eq_ignore_ascii_case("auto") {
        return Ok(None);
    }
    let json = to_json_syntax(t)?;
    let pts: Vec<[i64; 2]> = serde_json::from_str(&json).map_err(malformed)?;
    Ok(Some(
        pts.into_iter().map(|[i, j]| GridPoint::new(i, j)).collect(),
    ))
}

/// `{{{1, 1}, {2, 2}}, ...}` with cells sorted by lower left corner.
pub fn render_braces(p: &CellCollection) -> String {
    let mut s = String::from("{");
    for (n, c) in p.cells().enumerate() {
        if n > 0 {
            s.push_str(", ");
        }
        let (a, b) = (c.lower_left(), c.upper_right());
        write!(s, "{{{{{}, {}}}, {{{}, {}}}}}", a.i, a.j, b.i, b.j).unwrap();
    }
    s.push('}');
    s
}

/// `[[[1,1],[2,2]],...]`.
pub fn render_json(p: &CellCollection) -> String {
    let pairs: Vec<[[i64; 2]; 2]> = p
        .cells()
        .map(|c| {
            let (a, b) = (c.lower_left(), c.upper_right());
            [[a.i, a.j], [b.i, b.j]]
        })
        .collect();
    serde_json::to_string(&pairs).expect("plain integers serialize")
}

#[cfg(test)]
mod tests {
    use super::*;
    use polyideal_core::Error;

    #[test]
    fn session_input_with_prefix() {
        let q = "Q={{{1, 1}, {2, 2}}, {{2, 1}, {3, 2}}, {{3, 1}, {4, 2}}, {{2, 2}, {3, 3}}, \n{{3, 2}, {4, 3}}, {{2, 3}, {3, 4}}};";
        let p = parse_encoding(q, false).unwrap();
        assert_eq!(p.collection.cells().len(), 6);
        assert_eq!(p.listed, 6);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(matches!(
            parse_encoding("[[[1,1],[2,3]]]", false),
            Err(ParseError::Invalid(Error::NotUnitCell(..)))
        ));
        assert!(matches!(
            parse_encoding("{{{1,1},{2,2}}", false),
            Err(ParseError::Malformed(_))
        ));
        assert!(matches!(
            parse_encoding("{[[1,1],[2,2]]}", false),
            Err(ParseError::Malformed(_))
        ));
        assert!(matches!(
            parse_encoding("{}", false),
            Err(ParseError::Invalid(Error::EmptyCollection))
        ));
        let dup = "{{{1,1},{2,2}},{{1,1},{2,2}}}";
        assert!(matches!(
            parse_encoding(dup, false),
            Err(ParseError::Invalid(Error::DuplicateCell(_)))
        ));
        assert_eq!(
            parse_encoding(dup, true).unwrap().collection.cells().len(),
            1
        );
    }

    #[test]
    fn holes() {
        assert_eq!(parse_holes("auto").unwrap(), None);
        assert_eq!(
            parse_holes("{{2,3}}").unwrap(),
            Some(vec![GridPoint::new(2, 3)])
        );
        assert_eq!(parse_holes("[]").unwrap(), Some(vec![]));
        assert!(parse_holes("{{2}}").is_err());
    }

    #[test]
    fn renders_sorted() {
        let p = parse_encoding("[[[2,1],[3,2]],[[1,1],[2,2]]]", false)
            .unwrap()
            .collection;
        assert_eq!(render_braces(&p), "{{{1, 1}, {2, 2}}, {{2, 1}, {3, 2}}}");
        assert_eq!(render_json(&p), "[[[1,1],[2,2]],[[2,1],[3,2]]]");
    }
}
