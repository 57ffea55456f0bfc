//! Published GF(9) multiplication and GF(16) addition tables, and their
//! cell-by-cell comparison with [`Field`] arithmetic.

use std::time::Instant;

use crate::report::{Case, Provenance, Report};

use super::field::{Elem, Field};

/// Row and column labels of the GF(9) multiplication table.
pub const GF9_LABELS: [&str; 8] = ["1", "2", "x", "1+x", "2+x", "2x", "1+2x", "2+2x"];

/// Products `GF9_LABELS[i] * GF9_LABELS[j]`, as printed.
pub const GF9_PRODUCTS: [[&str; 8]; 8] = [
    ["1", "2", "x", "1+x", "2+x", "2x", "1+2x", "2+2x"],
    ["2", "1", "2x", "2+2x", "1+2x", "x", "2+x", "1+x"],
    ["x", "2x", "2", "2+x", "2+2x", "1", "1+x", "1+2x"],
    ["1+x", "2+2x", "2+x", "2x", "1", "1+2x", "2", "x"],
    ["2+x", "1+2x", "2+2x", "1", "x", "1+x", "2x", "2"],
    ["2x", "x", "1", "1+2x", "1+x", "2", "2+2x", "2+x"],
    ["1+2x", "2+x", "1+x", "2", "2x", "2+2x", "x", "1"],
    ["2+2x", "1+x", "1+2x", "x", "2", "2+x", "1", "2x"],
];

/// Sums `λ^i + λ^j` for row `i` in `0..15` and column `j` in `-1..15`,
/// where `-1` stands for the zero element; entries use the same encoding.
pub const GF16_SUMS: [[i8; 16]; 15] = [
    [0, -1, 4, 8, 14, 1, 10, 13, 9, 2, 7, 5, 12, 11, 6, 3],
    [1, 4, -1, 5, 9, 0, 2, 11, 14, 10, 3, 8, 6, 13, 12, 7],
    [2, 8, 5, -1, 6, 10, 1, 3, 12, 0, 11, 4, 9, 7, 14, 13],
    [3, 14, 9, 6, -1, 7, 11, 2, 4, 13, 1, 12, 5, 10, 8, 0],
    [4, 1, 0, 10, 7, -1, 8, 12, 3, 5, 14, 2, 13, 6, 11, 9],
    [5, 10, 2, 1, 11, 8, -1, 9, 13, 4, 6, 0, 3, 14, 7, 12],
    [6, 13, 11, 3, 2, 12, 9, -1, 10, 14, 5, 7, 1, 4, 0, 8],
    [7, 9, 14, 12, 4, 3, 13, 10, -1, 11, 0, 6, 8, 2, 5, 1],
    [8, 2, 10, 0, 13, 5, 4, 14, 11, -1, 12, 1, 7, 9, 3, 6],
    [9, 7, 3, 11, 1, 14, 6, 5, 0, 12, -1, 13, 2, 8, 10, 4],
    [10, 5, 8, 4, 12, 2, 0, 7, 6, 1, 13, -1, 14, 3, 9, 11],
    [11, 12, 6, 9, 5, 13, 3, 1, 8, 7, 2, 14, -1, 0, 4, 10],
    [12, 11, 13, 7, 10, 6, 14, 4, 2, 9, 8, 3, 0, -1, 1, 5],
    [13, 6, 12, 14, 8, 11, 7, 0, 5, 3, 10, 9, 4, 1, -1, 2],
    [14, 3, 7, 13, 0, 9, 12, 8, 1, 6, 4, 11, 10, 5, 2, -1],
];

fn lambda_power(f: &Field, e: i8) -> Elem {
    if e < 0 {
        0
    } else {
        f.pow(f.generator(), e as u64)
    }
}

/// Cells of the GF(9) table that disagree with the field, as
/// `(row, column, computed)`.
pub fn gf9_mismatches(f: &Field) -> Vec<(usize, usize, String)> {
    let elems: Vec<Elem> = GF9_LABELS.iter().map(|s| f.parse(s).expect("table label parses")).collect();
    let mut bad = Vec::new();
    for (i, &a) in elems.iter().enumerate() {
        for (j, &b) in elems.iter().enumerate() {
            let printed = f.parse(GF9_PRODUCTS[i][j]).expect("table cell parses");
            let got = f.mul(a, b);
            if got != printed {
                bad.push((i, j, f.format(got)));
            }
        }
    }
    bad
}

/// Cells of the GF(16) table that disagree with the field, as
/// `(row exponent, column exponent, computed exponent)`.
pub fn gf16_mismatches(f: &Field) -> Vec<(i8, i8, i8)> {
    let log = |a: Elem| -> i8 { (0..15).find(|&e| lambda_power(f, e) == a).unwrap_or(-1) };
    let mut bad = Vec::new();
    for (i, row) in GF16_SUMS.iter().enumerate() {
        for (j, &printed) in row.iter().enumerate() {
            let (ri, cj) = (i as i8, j as i8 - 1);
            let got = f.add(lambda_power(f, ri), lambda_power(f, cj));
            if got != lambda_power(f, printed) {
                bad.push((ri, cj, log(got)));
            }
        }
    }
    bad
}

/// Field table verification: one case per table plus the two spot checks.
pub fn verify_field_tables() -> Report {
    let mut r = Report::new("field-tables");
    let t = Instant::now();
    let f9 = Field::gf(9).expect("GF(9)");
    let bad = gf9_mismatches(&f9);
    r.push(
        Case::new("gf9-multiplication", "gf9-multiplication-table")
            .computed(64 - bad.len())
            .expected(64, Provenance::Published)
            .compare()
            .detail(if bad.is_empty() { String::new() } else { format!("mismatched cells {bad:?}") })
            .runtime(t),
    );
    let x = f9.parse("x").expect("x");
    r.push(
        Case::new("gf9-x-times-x", "gf9-multiplication-table")
            .computed(f9.format(f9.mul(x, x)))
            .expected("2", Provenance::Published)
            .compare(),
    );
    let t = Instant::now();
    let f16 = Field::gf(16).expect("GF(16)");
    let bad = gf16_mismatches(&f16);
    r.push(
        Case::new("gf16-addition", "gf16-addition-table")
            .computed(240 - bad.len())
            .expected(240, Provenance::Published)
            .compare()
            .detail(if bad.is_empty() { String::new() } else { format!("mismatched cells {bad:?}") })
            .runtime(t),
    );
    let s = f16.add(lambda_power(&f16, 3), lambda_power(&f16, 7));
    r.push(
        Case::new("gf16-l3-plus-l7", "gf16-addition-table")
            .computed(f16.format(s))
            .expected(f16.format(lambda_power(&f16, 4)), Provenance::Published)
            .compare(),
    );
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::report::Status;

    #[test]
    fn tables_match() {
        let r = verify_field_tables();
        assert_eq!(r.worst(), Status::Pass, "{r}");
    }

    #[test]
    fn sum_table_is_symmetric() {
        for i in 0..15 {
            for j in 0..15 {
                assert_eq!(GF16_SUMS[i][j + 1], GF16_SUMS[j][i + 1]);
            }
        }
    }
}
