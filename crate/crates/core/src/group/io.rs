//! Text format for generating sets:
//!
//! ```text
//! # optional comments
//! degree 7
//! (0,1,2,3,4,5,6)
//! img: 0 2 4 6 1 3 5
//! ```
//!
//! Each non-comment line after the header is one generator, either in cycle
//! notation or as an explicit image list.

use std::path::Path;

use crate::error::{Error, Result};
use crate::perm::Permutation;

use super::PermGroup;

pub fn parse_generators(text: &str) -> Result<(usize, Vec<Permutation>)> {
    let mut degree = None;
    let mut gens = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line_no = lineno + 1;
        let line = raw.split('#').next().unwrap().trim();
        if line.is_empty() {
            continue;
        }
        match degree {
            None => {
                let rest = line
                    .strip_prefix("degree")
                    .ok_or_else(|| Error::parse(line_no, "expected 'degree <n>' header"))?;
                let n = rest.trim().parse::<usize>().map_err(|_| Error::parse(line_no, "bad degree"))?;
                degree = Some(n);
            }
            Some(n) => {
                let g = if let Some(rest) = line.strip_prefix("img:") {
                    let imgs = rest
                        .split_whitespace()
                        .map(|t| t.parse::<usize>().map_err(|_| Error::parse(line_no, format!("bad image {t:?}"))))
                        .collect::<Result<Vec<_>>>()?;
                    if imgs.len() != n {
                        return Err(Error::parse(line_no, format!("expected {n} images, got {}", imgs.len())));
                    }
                    Permutation::from_images(imgs).map_err(|e| Error::parse(line_no, e.to_string()))?
                } else {
                    Permutation::parse_cycles(n, line).map_err(|e| Error::parse(line_no, e.to_string()))?
                };
                gens.push(g);
            }
        }
    }
    let degree = degree.ok_or_else(|| Error::parse(0, "missing 'degree <n>' header"))?;
    Ok((degree, gens))
}

/// Canonical text: header plus one generator per line in cycle notation.
pub fn format_generators(degree: usize, gens: &[Permutation]) -> String {
    let mut s = format!("degree {degree}\n");
    for g in gens {
        s.push_str(&g.to_string());
        s.push('\n');
    }
    s
}

pub fn read_group(path: &Path) -> Result<PermGroup> {
    let text = std::fs::read_to_string(path)?;
    let (n, gens) = parse_generators(&text)?;
    PermGroup::new(n, gens)
}

pub fn write_group(path: &Path, group: &PermGroup) -> Result<()> {
    std::fs::write(path, format_generators(group.degree(), group.generators()))?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_both_styles() {
        let text = "# heptagon\ndegree 7\n(0,1,2,3,4,5,6)\nimg: 0 6 5 4 3 2 1  # reflection\n";
        let (n, gens) = parse_generators(text).unwrap();
        assert_eq!(n, 7);
        assert_eq!(gens.len(), 2);
        assert_eq!(PermGroup::new(n, gens).unwrap().order(), 14);
    }

    #[test]
    fn canonical_round_trip() {
        let text = "degree 5\n(0,1,2,3,4)\n(1,4)(2,3)\n()\n";
        let (n, gens) = parse_generators(text).unwrap();
        assert_eq!(format_generators(n, &gens), text);
    }

    #[test]
    fn errors_carry_line_numbers() {
        let err = parse_generators("degree 3\n(0,1)\n(0,5)\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 3, .. }));
        assert!(parse_generators("(0,1)\n").is_err());
    }
}
