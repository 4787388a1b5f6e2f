//! Plain-text triangulation format.
//!
//! ```text
//! tets <count>
//! t<i>: n0 n1 n2 n3 | p0 p1 p2 p3 | c0 c1 c2 c3
//! ```
//!
//! `nk` is the neighbour across face `k` (opposite vertex `k`), `pk` the
//! four-digit vertex permutation into that neighbour, `ck` the cusp class of
//! vertex `k`.

use std::fmt::Write;

use crate::error::{Error, Result};

use super::tets::{IdealTriangulation, Perm4, Tetrahedron};

pub fn to_tri_text(t: &IdealTriangulation) -> String {
    let mut out = format!("tets {}\n", t.len());
    for (i, tet) in t.tetrahedra.iter().enumerate() {
        let [n0, n1, n2, n3] = tet.neighbors;
        let [p0, p1, p2, p3] = tet.perms;
        let [c0, c1, c2, c3] = tet.cusps;
        writeln!(
            out,
            "t{i}: {n0} {n1} {n2} {n3} | {p0} {p1} {p2} {p3} | {c0} {c1} {c2} {c3}"
        )
        .expect("write to string");
    }
    out
}

struct Cursor<'a> {
    line: usize,
    text: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn err(&self, message: impl Into<String>) -> Error {
        Error::Parse {
            line: self.line,
            column: self.pos + 1,
            message: message.into(),
        }
    }

    fn expect(&mut self, lit: &str) -> Result<()> {
        if self.text[self.pos..].starts_with(lit) {
            self.pos += lit.len();
            Ok(())
        } else {
            Err(self.err(format!("expected {lit:?}")))
        }
    }

    fn word(&mut self) -> Result<&'a str> {
        let rest = &self.text[self.pos..];
        let len = rest.find(|c: char| !c.is_ascii_digit()).unwrap_or(rest.len());
        if len == 0 {
            return Err(self.err("expected a number"));
        }
        self.pos += len;
        Ok(&rest[..len])
    }

    fn number(&mut self) -> Result<usize> {
        let start = self.pos;
        let w = self.word()?;
        w.parse().map_err(|_| Error::Parse {
            line: self.line,
            column: start + 1,
            message: format!("number {w:?} out of range"),
        })
    }

    fn end(&self) -> Result<()> {
        if self.pos == self.text.len() {
            Ok(())
        } else {
            Err(self.err("trailing characters"))
        }
    }
}

pub fn parse_tri_text(text: &str) -> Result<IdealTriangulation> {
    let mut lines = text.split_inclusive('\n').enumerate();
    let mut next_line = |expected: &str| -> Result<(usize, &str)> {
        match lines.next() {
            Some((i, l)) => match l.strip_suffix('\n') {
                Some(body) => Ok((i + 1, body)),
                None => Err(Error::Parse {
                    line: i + 1,
                    column: l.len() + 1,
                    message: "missing final newline".into(),
                }),
            },
            None => Err(Error::Parse {
                line: text.lines().count() + 1,
                column: 1,
                message: format!("unexpected end of input, expected {expected}"),
            }),
        }
    };

    let (line, header) = next_line("header")?;
    let mut c = Cursor {
        line,
        text: header,
        pos: 0,
    };
    c.expect("tets ")?;
    let count = c.number()?;
    c.end()?;

    let mut tetrahedra = Vec::with_capacity(count);
    for i in 0..count {
        let (line, body) = next_line(&format!("tetrahedron {i}"))?;
        let mut c = Cursor {
            line,
            text: body,
            pos: 0,
        };
        c.expect("t")?;
        let at = c.pos;
        if c.number()? != i {
            return Err(Error::Parse {
                line,
                column: at + 1,
                message: format!("expected tetrahedron index {i}"),
            });
        }
        c.expect(":")?;
        let mut neighbors = [0; 4];
        for n in &mut neighbors {
            c.expect(" ")?;
            *n = c.number()?;
            if *n >= count {
                return Err(c.err(format!("neighbour {n} out of range")));
            }
        }
        c.expect(" |")?;
        let mut perms = [Perm4::IDENTITY; 4];
        for p in &mut perms {
            c.expect(" ")?;
            let at = c.pos;
            let w = c.word()?;
            *p = Perm4::try_from(w.to_string()).map_err(|m| Error::Parse {
                line,
                column: at + 1,
                message: m,
            })?;
        }
        c.expect(" |")?;
        let mut cusps = [0; 4];
        for k in &mut cusps {
            c.expect(" ")?;
            *k = c.number()?;
        }
        c.end()?;
        tetrahedra.push(Tetrahedron {
            neighbors,
            perms,
            cusps,
        });
    }
    if let Some((i, _)) = lines.next() {
        return Err(Error::Parse {
            line: i + 1,
            column: 1,
            message: "content after the last tetrahedron".into(),
        });
    }
    Ok(IdealTriangulation { tetrahedra })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> IdealTriangulation {
        IdealTriangulation {
            tetrahedra: vec![Tetrahedron {
                neighbors: [0; 4],
                perms: [
                    Perm4([1, 0, 2, 3]),
                    Perm4([1, 0, 2, 3]),
                    Perm4([0, 1, 3, 2]),
                    Perm4([0, 1, 3, 2]),
                ],
                cusps: [0, 0, 1, 1],
            }],
        }
    }

    #[test]
    fn roundtrip() {
        let text = to_tri_text(&sample());
        assert_eq!(text, "tets 1\nt0: 0 0 0 0 | 1023 1023 0132 0132 | 0 0 1 1\n");
        assert_eq!(parse_tri_text(&text).unwrap(), sample());
    }

    #[test]
    fn errors_carry_positions() {
        let err = parse_tri_text("tets 1\nt0: 0 0 0 0 | 1023 1023 0132\n").unwrap_err();
        assert_eq!(
            err,
            Error::Parse {
                line: 2,
                column: 29,
                message: "expected \" \"".into()
            }
        );
        let err = parse_tri_text("tets 2\nt0: 0 0 0 0 | 1023 1023 0132 0132 | 0 0 1 1\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 3, .. }));
        assert!(matches!(
            parse_tri_text("tets x\n"),
            Err(Error::Parse { line: 1, column: 6, .. })
        ));
        assert!(matches!(parse_tri_text("tets 0"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(
            parse_tri_text("tets 1\nt0: 0 0 0 0 | 1023 1023 0132 0133 | 0 0 1 1\n"),
            Err(Error::Parse {
                line: 2,
                column: 30,
                ..
            })
        ));
    }
}
