#![allow(dead_code)]

//! Session inputs exactly as typed at the Macaulay2 prompt.

pub const SIX_CELL: &str =
    "Q={{{1, 1}, {2, 2}}, {{2, 1}, {3, 2}}, {{3, 1}, {4, 2}}, {{2, 2}, {3, 3}}, 
{{3, 2}, {4, 3}}, {{2, 3}, {3, 4}}};";

pub const SEVEN_CELL: &str =
    "Q={{{1, 1}, {2, 2}}, {{2, 2}, {3, 3}}, {{2, 1}, {3, 2}},{{3, 2}, {4, 3}}, 
{{2, 3}, {3, 4}}, {{4, 1}, {5, 2}}, {{3, 4}, {4, 5}}};";

pub const CLOSED_PATH: &str =
    "Q={{{2, 1}, {3, 2}}, {{2, 2}, {3, 3}}, {{1, 2}, {2, 3}}, {{1, 3}, {2, 4}}, 
{{1, 4}, {2, 5}}, {{2, 4}, {3, 5}}, {{2, 5}, {3, 6}}, {{3, 5}, {4, 6}},
{{4, 5}, {5, 6}}, {{4, 4}, {5, 5}}, {{5, 4}, {6, 5}}, {{5, 3}, {6, 4}}, 
{{5, 2}, {6, 3}}, {{4, 2}, {5, 3}}, {{4, 1}, {5, 2}}, {{3, 1}, {4, 2}}};";

pub const STAIRCASE: &str = "Q={{{1,1},{2,2}},{{2,2},{3,3}},{{3,3},{4,4}}};";

pub const CONVEX12: &str =
    "Q={{{1, 3}, {2, 4}}, {{2, 2}, {3, 3}}, {{2, 3}, {3, 4}}, {{2, 4}, {3, 5}}, 
{{3, 4}, {4, 5}}, {{3, 3}, {4, 4}}, {{3, 2}, {4, 3}}, {{3, 1}, {4, 2}}, 
{{3, 5}, {4, 6}}, {{4, 4}, {5, 5}}, {{4, 3}, {5, 4}}, {{5, 4}, {6, 5}}};";

pub const NONCONVEX12: &str =
    "Q={{{3, 1}, {4, 2}}, {{3, 2}, {4, 3}}, {{4, 2}, {5, 3}}, {{4, 3}, {5, 4}},
{{4, 4}, {5, 5}}, {{5, 3}, {6, 4}}, {{3, 4}, {4, 5}}, {{2, 4}, {3, 5}},
{{2, 3}, {3, 4}}, {{2, 2}, {3, 3}}, {{1, 3}, {2, 4}}, {{3, 5}, {4, 6}}};";

pub const ALL: [(&str, &str, usize); 6] = [
    ("six_cell", SIX_CELL, 6),
    ("seven_cell", SEVEN_CELL, 7),
    ("closed_path", CLOSED_PATH, 16),
    ("staircase", STAIRCASE, 3),
    ("convex12", CONVEX12, 12),
    ("nonconvex12", NONCONVEX12, 12),
];

pub const SIX_CELL_BINOMIALS: [&str; 15] = [
    "x_(4,3)x_(3,2)-x_(4,2)x_(3,3)",
    "x_(2,2)x_(1,1)-x_(2,1)x_(1,2)",
    "x_(4,3)x_(2,1)-x_(4,1)x_(2,3)",
    "x_(3,2)x_(2,1)-x_(3,1)x_(2,2)",
    "x_(4,3)x_(2,2)-x_(4,2)x_(2,3)",
    "x_(3,3)x_(2,1)-x_(3,1)x_(2,3)",
    "x_(4,2)x_(1,1)-x_(4,1)x_(1,2)",
    "x_(3,4)x_(2,1)-x_(3,1)x_(2,4)",
    "x_(3,3)x_(2,2)-x_(3,2)x_(2,3)",
    "x_(4,2)x_(3,1)-x_(4,1)x_(3,2)",
    "x_(3,4)x_(2,2)-x_(3,2)x_(2,4)",
    "x_(3,2)x_(1,1)-x_(3,1)x_(1,2)",
    "x_(4,3)x_(3,1)-x_(4,1)x_(3,3)",
    "x_(3,4)x_(2,3)-x_(3,3)x_(2,4)",
    "x_(4,2)x_(2,1)-x_(4,1)x_(2,2)",
];

pub const QUARTIC: &str = "x_(6,5)x_(5,1)x_(2,6)x_(1,2)-x_(6,2)x_(5,6)x_(2,1)x_(1,5)";

/// The serialized response with its trailing `timing` member cut off; the
/// remaining bytes are compared verbatim.
pub fn without_timing(json: &str) -> &str {
    let json = json.trim_end();
    let at = json
        .rfind(",\"timing\":")
        .expect("timing is the last member");
    &json[..at]
}
