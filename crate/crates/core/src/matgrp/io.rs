//! Text export of matrix groups.
//!
//! ```text
//! dim 2
//! gen [[0, 1], [1, 0]]
//! elements 2
//! elem [[1, 0], [0, 1]]
//! elem [[0, 1], [1, 0]]
//! ```
//!
//! The `elements` block is optional. Tensor products use the left factor as
//! the most significant index, so row `2a + b` of `A ⊗ B` belongs to `(a, b)`.

use super::group::{closure, MatrixGroup};
use super::matrix::UnitaryMatrix;
use crate::error::{Error, Result};

pub fn export(g: &MatrixGroup, with_elements: bool) -> String {
    let mut s = format!("dim {}\n", g.dim());
    for m in g.gens() {
        s.push_str(&format!("gen {}\n", m.to_text()));
    }
    if with_elements {
        s.push_str(&format!("elements {}\n", g.order()));
        for m in g.elements() {
            s.push_str(&format!("elem {}\n", m.to_text()));
        }
    }
    s
}

/// Parses an exported group. Without an element list the group is rebuilt by
/// closure under `budget`; with one, the list is taken as given (after checks)
/// so indices survive the round trip.
pub fn import(text: &str, budget: usize) -> Result<MatrixGroup> {
    let mut dim = None;
    let mut gens = Vec::new();
    let mut declared = None;
    let mut elems = Vec::new();
    for (ln, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let perr = |msg: String| Error::Parse { line: ln + 1, msg };
        let (key, rest) = line.split_once(' ').unwrap_or((line, ""));
        let matrix = |rest: &str| {
            UnitaryMatrix::parse_text(rest).map_err(|e| match e {
                Error::Parse { msg, .. } | Error::InvalidArgument(msg) => perr(msg),
                other => other,
            })
        };
        match key {
            "dim" => {
                dim = Some(
                    rest.trim()
                        .parse::<usize>()
                        .map_err(|_| perr(format!("bad dimension {rest:?}")))?,
                )
            }
            "gen" => gens.push(matrix(rest)?),
            "elements" => {
                declared = Some(
                    rest.trim()
                        .parse::<usize>()
                        .map_err(|_| perr(format!("bad element count {rest:?}")))?,
                )
            }
            "elem" => elems.push(matrix(rest)?),
            _ => return Err(perr(format!("unknown directive {key:?}"))),
        }
    }
    let dim = dim.ok_or(Error::Parse {
        line: 0,
        msg: "missing 'dim' line".into(),
    })?;
    if let Some(m) = gens.iter().chain(&elems).find(|m| m.dim() != dim) {
        return Err(Error::InvalidArgument(format!(
            "matrix of dim {} in a dim {dim} file",
            m.dim()
        )));
    }
    match declared {
        None if elems.is_empty() => closure(&gens, budget),
        None => Err(Error::Parse {
            line: 0,
            msg: "'elem' lines without an 'elements' count".into(),
        }),
        Some(n) if n != elems.len() => Err(Error::Parse {
            line: 0,
            msg: format!("declared {n} elements, found {}", elems.len()),
        }),
        Some(_) => MatrixGroup::from_elements(gens, elems),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cyclo::Cyclotomic;

    #[test]
    fn round_trip_is_exact() {
        let h = UnitaryMatrix::new(
            2,
            vec![
                Cyclotomic::sqrt2() / Cyclotomic::from_int(2),
                Cyclotomic::sqrt2() / Cyclotomic::from_int(2),
                Cyclotomic::sqrt2() / Cyclotomic::from_int(2),
                -(Cyclotomic::sqrt2() / Cyclotomic::from_int(2)),
            ],
        )
        .unwrap();
        let p = UnitaryMatrix::diag(&[Cyclotomic::one(), Cyclotomic::i()]);
        let g = closure(&[h, p], 1000).unwrap();
        for with in [false, true] {
            let text = export(&g, with);
            let back = import(&text, 1000).unwrap();
            assert_eq!(back.order(), 192);
            assert_eq!(export(&back, with), text);
        }
    }

    #[test]
    fn errors_carry_line_numbers() {
        let e = import("dim 2\ngen [[1, 0], [0, 1]]\nbogus 3\n", 10).unwrap_err();
        assert!(matches!(e, Error::Parse { line: 3, .. }));
        let e = import("dim 2\nelements 2\nelem [[1, 0], [0, 1]]\n", 10).unwrap_err();
        assert!(matches!(e, Error::Parse { .. }));
    }
}
