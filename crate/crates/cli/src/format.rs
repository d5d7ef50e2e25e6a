//! Plain-text game files.
//!
//! ```text
//! # optional comments
//! 2 3
//! 1 0 -1/2
//! 0 2 0.25
//!
//! 3 3 1
//! 0 1 2
//! ```
//!
//! The header gives `m n`; the next `m` rows hold the row player's payoffs
//! (block A) and the following `m` rows the column player's (block B).
//! Blank lines are ignored and `#` starts a comment that runs to the end of
//! the line. Tokens are integers, `p/q` fractions or finite decimals.

use std::fmt::Write as _;

use stratzero::exactnum::rational_from_text;
use stratzero::{BimatrixGame, GameMatrix, Rational};
use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Block {
    A,
    B,
}

impl std::fmt::Display for Block {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Block::A => "A",
            Block::B => "B",
        })
    }
}

#[derive(Debug, Error, PartialEq)]
pub enum FormatError {
    #[error("empty game file: expected a header line \"m n\"")]
    MissingHeader,
    #[error("line {line}: header must be two positive integers \"m n\", found {found:?}")]
    BadHeader { line: usize, found: String },
    #[error("line {line}: block {block} row {row} has {found} tokens, expected {expected}")]
    TokenCount {
        line: usize,
        block: Block,
        row: usize,
        found: usize,
        expected: usize,
    },
    #[error("line {line}: block {block} row {row} column {col}: {source}")]
    BadToken {
        line: usize,
        block: Block,
        row: usize,
        col: usize,
        source: stratzero::Error,
    },
    #[error("block {block} is missing")]
    MissingBlock { block: Block },
    #[error("block {block} has {found} rows, expected {expected}")]
    ShortBlock {
        block: Block,
        found: usize,
        expected: usize,
    },
    #[error("line {line}: unexpected content after block B")]
    TrailingContent { line: usize },
}

/// Parses a game file into an exact bimatrix game.
pub fn parse_game_file(text: &str) -> Result<BimatrixGame, FormatError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(idx, raw)| {
            let content = raw.split_once('#').map_or(raw, |(before, _)| before);
            (idx + 1, content.trim())
        })
        .filter(|(_, content)| !content.is_empty());

    let (header_line, header) = lines.next().ok_or(FormatError::MissingHeader)?;
    let (m, n) = parse_header(header).ok_or_else(|| FormatError::BadHeader {
        line: header_line,
        found: header.to_string(),
    })?;

    let a = parse_block(&mut lines, Block::A, m, n)?;
    let b = parse_block(&mut lines, Block::B, m, n)?;
    if let Some((line, _)) = lines.next() {
        return Err(FormatError::TrailingContent { line });
    }
    Ok(BimatrixGame::new(a, b).expect("blocks share the header shape"))
}

fn parse_header(header: &str) -> Option<(usize, usize)> {
    let mut parts = header.split_whitespace();
    let m = parts.next()?.parse::<usize>().ok()?;
    let n = parts.next()?.parse::<usize>().ok()?;
    if parts.next().is_some() || m == 0 || n == 0 {
        return None;
    }
    Some((m, n))
}

fn parse_block<'a>(
    lines: &mut impl Iterator<Item = (usize, &'a str)>,
    block: Block,
    m: usize,
    n: usize,
) -> Result<GameMatrix, FormatError> {
    let mut data: Vec<Rational> = Vec::with_capacity(m * n);
    for row in 1..=m {
        let Some((line, content)) = lines.next() else {
            return Err(if row == 1 {
                FormatError::MissingBlock { block }
            } else {
                FormatError::ShortBlock {
                    block,
                    found: row - 1,
                    expected: m,
                }
            });
        };
        let tokens: Vec<&str> = content.split_whitespace().collect();
        if tokens.len() != n {
            return Err(FormatError::TokenCount {
                line,
                block,
                row,
                found: tokens.len(),
                expected: n,
            });
        }
        for (col, token) in tokens.into_iter().enumerate() {
            let value = rational_from_text(token).map_err(|source| FormatError::BadToken {
                line,
                block,
                row,
                col: col + 1,
                source,
            })?;
            data.push(value);
        }
    }
    Ok(GameMatrix::from_vec(m, n, data).expect("block has m*n entries"))
}

/// Renders a game with every entry as `p/q`, so parsing the output gives
/// back the same game.
pub fn render_game_file(game: &BimatrixGame) -> String {
    let mut out = format!("{} {}\n", game.m(), game.n());
    write_block(&mut out, game.a());
    out.push('\n');
    write_block(&mut out, game.b());
    out
}

fn write_block(out: &mut String, f: &GameMatrix) {
    for row in f.row_iter() {
        let tokens: Vec<String> = row.iter().map(Rational::to_fraction_string).collect();
        writeln!(out, "{}", tokens.join(" ")).expect("writing to a String");
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const TRANSFORMED_RPS: &str = "3 3\n-1 6 2\n1 8 -2\n-3 10 0\n\n9 13 5\n-1 3 7\n14 6 10\n";

    #[test]
    fn parses_the_transformed_rps_game() {
        let g = parse_game_file(TRANSFORMED_RPS).unwrap();
        assert_eq!((g.m(), g.n()), (3, 3));
        assert_eq!(*g.a().get(1, 1), Rational::from(-1));
        assert_eq!(*g.b().get(3, 1), Rational::from(14));
    }

    #[test]
    fn one_by_one_zero_game() {
        let g = parse_game_file("1 1\n0\n0").unwrap();
        assert!(g.a().is_zero() && g.b().is_zero());
    }

    #[test]
    fn comments_and_blank_lines() {
        let text = "# header next\n\n2 1  # m n\n1/2\n# between\n.5\n\n\n3\n-4 # tail\n";
        let g = parse_game_file(text).unwrap();
        assert_eq!(g.a().get(1, 1), g.a().get(2, 1));
        assert_eq!(*g.b().get(2, 1), Rational::from(-4));
    }

    #[test]
    fn short_row_names_row_and_block() {
        let text = "2 2\n1 2\n3 4\n5 6\n7\n";
        let err = parse_game_file(text).unwrap_err();
        assert_eq!(
            err,
            FormatError::TokenCount {
                line: 5,
                block: Block::B,
                row: 2,
                found: 1,
                expected: 2
            }
        );
        assert!(err.to_string().contains("block B row 2"));
    }

    #[test]
    fn rejections() {
        assert_eq!(parse_game_file("  \n# only\n"), Err(FormatError::MissingHeader));
        assert!(matches!(parse_game_file("0 2\n"), Err(FormatError::BadHeader { .. })));
        assert!(matches!(parse_game_file("2\n"), Err(FormatError::BadHeader { .. })));
        assert!(matches!(parse_game_file("1 1 1\n"), Err(FormatError::BadHeader { .. })));
        assert!(matches!(parse_game_file("-1 2\n"), Err(FormatError::BadHeader { .. })));
        assert_eq!(
            parse_game_file("1 2\n1 2\n"),
            Err(FormatError::MissingBlock { block: Block::B })
        );
        assert_eq!(
            parse_game_file("2 1\n1\n2\n3\n"),
            Err(FormatError::ShortBlock {
                block: Block::B,
                found: 1,
                expected: 2
            })
        );
        assert!(matches!(
            parse_game_file("1 2\n1 x\n1 2\n"),
            Err(FormatError::BadToken { row: 1, col: 2, block: Block::A, .. })
        ));
        assert!(matches!(
            parse_game_file("1 1\n1/0\n1\n"),
            Err(FormatError::BadToken { .. })
        ));
        assert_eq!(
            parse_game_file("1 1\n1\n1\n1\n"),
            Err(FormatError::TrailingContent { line: 4 })
        );
    }

    #[test]
    fn render_uses_fractions() {
        let g = parse_game_file("1 2\n0.5 3\n-2/4 0\n").unwrap();
        assert_eq!(render_game_file(&g), "1 2\n1/2 3/1\n\n-1/2 0/1\n");
        assert_eq!(parse_game_file(&render_game_file(&g)).unwrap(), g);
    }
}
