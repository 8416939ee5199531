//! Hand-transcribed reference data: printed multiplication tables, the
//! printed `M_x`/`M_y` sign patterns, and the printed grading vectors.
//!
//! Nothing in the algebra modules reads these; they exist so the derived
//! tables can be compared against them.

use crate::clifford::Sign;

/// Rows of the printed 8×8 octonion-like table, header column included.
const OCTONION_TABLE: [&str; 8] = [
    "1 u1 u2 u3 u4 u5 u6 u7",
    "u1 -1 u3 -u2 -u5 u4 u7 -u6",
    "u2 -u3 -1 u1 u6 u7 -u4 -u5",
    "u3 u2 -u1 -1 u7 -u6 u5 -u4",
    "u4 u5 -u6 u7 -1 -u1 u2 -u3",
    "u5 -u4 u7 u6 u1 -1 -u3 -u2",
    "u6 u7 u4 -u5 -u2 u3 -1 -u1",
    "u7 -u6 -u5 -u4 -u3 -u2 -u1 1",
];

const LEFT_MATRIX: [&str; 8] = [
    "x0 -x1 -x2 -x3 -x4 -x5 -x6 x7",
    "x1 x0 -x3 x2 x5 -x4 -x7 -x6",
    "x2 x3 x0 -x1 -x6 -x7 x4 -x5",
    "x3 -x2 x1 x0 -x7 x6 -x5 -x4",
    "x4 -x5 x6 -x7 x0 x1 -x2 -x3",
    "x5 x4 -x7 -x6 -x1 x0 x3 -x2",
    "x6 -x7 -x4 x5 x2 -x3 x0 -x1",
    "x7 x6 x5 x4 x3 x2 x1 x0",
];

const RIGHT_MATRIX: [&str; 8] = [
    "y0 -y1 -y2 -y3 -y4 -y5 -y6 y7",
    "y1 y0 y3 -y2 -y5 y4 -y7 -y6",
    "y2 -y3 y0 y1 y6 -y7 -y4 -y5",
    "y3 y2 -y1 y0 -y7 -y6 y5 -y4",
    "y4 y5 -y6 -y7 y0 -y1 y2 -y3",
    "y5 -y4 -y7 y6 y1 y0 -y3 -y2",
    "y6 -y7 y4 -y5 -y2 y3 y0 -y1",
    "y7 y6 y5 y4 y3 y2 y1 y0",
];

/// Subscript keys of the sixteen sedenion-like units, in basis order.
pub const SEDENION_KEYS: [&str; 16] = [
    "", "01", "02", "03", "12", "31", "23", "0123", "04", "14", "24", "34", "0214", "0134", "0324", "1234",
];

/// The printed 15×15 sedenion-like table (units 1..15; no scalar row or
/// column). Entries are subscript keys, `1` is the scalar.
const SEDENION_TABLE: [&str; 15] = [
    "-1 -12 31 02 -03 0123 -23 -14 04 -0214 0134 24 -34 1234 -0324",
    "12 -1 -23 -01 0123 03 -31 -24 0214 04 -0324 -14 1234 34 -0134",
    "-31 23 -1 0123 01 -02 -12 -34 -0134 0324 04 1234 14 -24 -0214",
    "-02 01 0123 -1 23 -31 -03 -0214 -24 14 1234 04 0324 -0134 -34",
    "03 0123 -01 -23 -1 12 -02 -0134 34 1234 -14 -0324 04 0214 -24",
    "0123 -03 02 31 -12 -1 01 -0324 1234 -34 24 0134 -0214 04 -14",
    "-23 -31 -12 -03 -02 -01 1 -1234 -0324 -0134 -0214 -34 -24 -14 -04",
    "14 24 34 -0214 -0134 -0324 1234 -1 -01 -02 -03 12 31 23 -0123",
    "-04 0214 -0134 24 -34 1234 0324 01 -1 -12 31 -02 03 -0123 -23",
    "-0214 -04 0324 -14 1234 34 0134 02 12 -1 -23 01 -0123 -03 -31",
    "0134 -0324 -04 1234 14 -24 0214 03 -31 23 -1 -0123 -01 02 -12",
    "24 -14 -1234 04 0324 -0134 34 12 -02 01 0123 1 -23 31 -03",
    "-34 -1234 14 -0324 04 0214 24 31 03 0123 -01 23 1 -12 -02",
    "-1234 34 -24 0134 -0214 04 14 23 0123 -03 02 -31 12 1 -01",
    "0324 0134 0214 -34 -24 -14 04 0123 -23 -31 -12 03 02 01 1",
];

/// Printed octonion-like degrees `|u_0|..|u_7|`, leftmost bit first.
pub const OCTONION_GRADING: [[u8; 4]; 8] = [
    [0, 0, 0, 0],
    [0, 0, 1, 1],
    [0, 1, 0, 1],
    [0, 1, 1, 0],
    [1, 0, 0, 1],
    [1, 0, 1, 0],
    [1, 1, 0, 0],
    [1, 1, 1, 1],
];

/// Printed sedenion-like degrees, in the order they are listed.
pub const SEDENION_GRADING: [(&str, [u8; 5]); 16] = [
    ("", [0, 0, 0, 0, 0]),
    ("01", [0, 0, 0, 1, 1]),
    ("02", [0, 0, 1, 0, 1]),
    ("03", [0, 1, 0, 0, 1]),
    ("12", [0, 0, 1, 1, 0]),
    ("31", [0, 1, 0, 1, 0]),
    ("04", [1, 0, 0, 0, 1]),
    ("14", [1, 0, 0, 1, 0]),
    ("24", [1, 0, 1, 0, 0]),
    ("34", [1, 1, 0, 0, 0]),
    ("23", [0, 1, 1, 0, 0]),
    ("0123", [0, 1, 1, 1, 1]),
    ("0214", [1, 0, 1, 1, 1]),
    ("0134", [1, 1, 0, 1, 1]),
    ("0324", [1, 1, 1, 0, 1]),
    ("1234", [1, 1, 1, 1, 0]),
];

fn split_sign(token: &str) -> (Sign, &str) {
    match token.strip_prefix('-') {
        Some(rest) => (Sign::Minus, rest),
        None => (Sign::Plus, token.trim_start_matches('+')),
    }
}

fn parse_grid<const N: usize>(rows: &[&str; N], parse: impl Fn(&str) -> usize) -> [[(usize, Sign); N]; N] {
    std::array::from_fn(|r| {
        let cells: Vec<&str> = rows[r].split_whitespace().collect();
        assert_eq!(cells.len(), N, "row {r} has {} cells", cells.len());
        std::array::from_fn(|c| {
            let (sign, body) = split_sign(cells[c]);
            (parse(body), sign)
        })
    })
}

/// Printed table as `(k, sign)` with `u_i u_j = sign · u_k`.
pub fn octonion_table() -> [[(usize, Sign); 8]; 8] {
    parse_grid(&OCTONION_TABLE, |body| if body == "1" { 0 } else { body[1..].parse().expect("u index") })
}

/// Printed `M_x`: entry `(k, sign)` means `sign · x_k`.
pub fn left_matrix_pattern() -> [[(usize, Sign); 8]; 8] {
    parse_grid(&LEFT_MATRIX, |body| body[1..].parse().expect("x index"))
}

/// Printed `M_y`: entry `(k, sign)` means `sign · y_k`.
pub fn right_matrix_pattern() -> [[(usize, Sign); 8]; 8] {
    parse_grid(&RIGHT_MATRIX, |body| body[1..].parse().expect("y index"))
}

pub fn sedenion_index(key: &str) -> Option<usize> {
    if key == "1" {
        return Some(0);
    }
    SEDENION_KEYS.iter().position(|k| *k == key)
}

/// Printed sedenion-like table; `table[r][c]` is the entry for units
/// `r + 1` and `c + 1`.
pub fn sedenion_table() -> [[(usize, Sign); 15]; 15] {
    parse_grid(&SEDENION_TABLE, |body| sedenion_index(body).expect("known sedenion key"))
}
