//! Text and SVG drawings of chips.
//!
//! The ASCII form puts pin `j` and pin `j'` on row `j`. Every wire that is
//! not a straight `j`–`j'` line gets its own vertical lane: ℓ-wires on the
//! left (narrow ones nearest the pins), t-wires in the middle, r-wires on
//! the right. A final line reports the circle count.

use std::fmt::Write as _;

use crate::diagram::{Chip, Pin};

const MAX_GLYPHS: u64 = 32;

const UP: u8 = 1;
const DOWN: u8 = 2;
const LEFT: u8 = 4;
const RIGHT: u8 = 8;
const DOUBLE: u8 = 16;

fn glyph(mask: u8) -> char {
    if mask & DOUBLE != 0 {
        return '═';
    }
    match mask {
        0 => ' ',
        m if m == LEFT | RIGHT || m == LEFT || m == RIGHT => '─',
        m if m == UP | DOWN || m == UP || m == DOWN => '│',
        m if m == LEFT | DOWN => '┐',
        m if m == RIGHT | DOWN => '┌',
        m if m == LEFT | UP => '┘',
        m if m == RIGHT | UP => '└',
        m if m == LEFT | RIGHT | DOWN => '┬',
        m if m == LEFT | RIGHT | UP => '┴',
        m if m == UP | DOWN | RIGHT => '├',
        m if m == UP | DOWN | LEFT => '┤',
        _ => '┼',
    }
}

struct Canvas {
    cells: Vec<Vec<u8>>,
}

impl Canvas {
    fn horizontal(&mut self, row: usize, from: usize, to: usize) {
        let (a, b) = (from.min(to), from.max(to));
        for c in a..=b {
            let mut m = 0;
            if c > a || a == 0 {
                m |= LEFT;
            }
            if c < b || b + 1 == self.cells[row].len() {
                m |= RIGHT;
            }
            let cell = &mut self.cells[row][c];
            if *cell & (LEFT | RIGHT) != 0 && *cell & (UP | DOWN) == 0 && m & LEFT != 0 && m & RIGHT != 0 {
                *cell |= DOUBLE;
            }
            *cell |= m;
        }
    }

    fn vertical(&mut self, col: usize, from: usize, to: usize) {
        let (a, b) = (from.min(to), from.max(to));
        for r in a..=b {
            let cell = &mut self.cells[r][col];
            if r > a {
                *cell |= UP;
            }
            if r < b {
                *cell |= DOWN;
            }
        }
    }
}

/// Box-drawing picture of a chip, one row per pin, ending with a
/// `circles: d` line followed by up to 32 circle glyphs.
pub fn render_ascii(chip: &Chip) -> String {
    let n = chip.degree();
    let mut left = Vec::new();
    let mut through = Vec::new();
    let mut right = Vec::new();
    let mut straight = Vec::new();
    for (p, q) in chip.matching().pin_pairs() {
        match (p, q) {
            (Pin::Left(a), Pin::Left(b)) => left.push((a, b)),
            (Pin::Right(a), Pin::Right(b)) => right.push((a, b)),
            (Pin::Left(a), Pin::Right(b)) | (Pin::Right(b), Pin::Left(a)) => {
                if a == b {
                    straight.push(a);
                } else {
                    through.push((a, b));
                }
            }
        }
    }
    let span = |&(a, b): &(usize, usize)| a.abs_diff(b);
    left.sort_by_key(span);
    right.sort_by_key(|w| std::cmp::Reverse(span(w)));
    through.sort();

    let lanes = left.len() + through.len() + right.len();
    let width = (2 * lanes + 1).max(3);
    let lane = |k: usize| 2 * k + 1;
    let mut canvas = Canvas {
        cells: vec![vec![0; width]; n],
    };
    for &j in &straight {
        canvas.horizontal(j - 1, 0, width - 1);
    }
    for (k, &(a, b)) in left.iter().enumerate() {
        canvas.horizontal(a - 1, 0, lane(k));
        canvas.horizontal(b - 1, 0, lane(k));
        canvas.vertical(lane(k), a - 1, b - 1);
    }
    for (k, &(a, b)) in through.iter().enumerate() {
        let c = lane(left.len() + k);
        canvas.horizontal(a - 1, 0, c);
        canvas.vertical(c, a - 1, b - 1);
        canvas.horizontal(b - 1, c, width - 1);
    }
    for (k, &(a, b)) in right.iter().enumerate() {
        let c = lane(left.len() + through.len() + k);
        canvas.horizontal(a - 1, c, width - 1);
        canvas.horizontal(b - 1, c, width - 1);
        canvas.vertical(c, a - 1, b - 1);
    }

    let label = n.to_string().len();
    let mut out = String::new();
    for (j, row) in canvas.cells.iter().enumerate() {
        let line: String = row.iter().map(|&m| glyph(m)).collect();
        writeln!(out, "{:>label$} {line} {}'", j + 1, j + 1).unwrap();
    }
    let d = chip.circles();
    write!(out, "circles: {d}").unwrap();
    if d > 0 {
        out.push(' ');
        out.extend(std::iter::repeat_n('○', d.min(MAX_GLYPHS) as usize));
        if d > MAX_GLYPHS {
            out.push('…');
        }
    }
    out.push('\n');
    out
}

/// SVG picture: a rectangle with pins on both sides, one cubic curve per
/// wire, and the circles drawn below the rectangle.
pub fn render_svg(chip: &Chip) -> String {
    const STEP: f64 = 40.0;
    const LEFT_X: f64 = 40.0;
    const RIGHT_X: f64 = 200.0;
    let n = chip.degree();
    let y = |j: usize| STEP * j as f64;
    let d = chip.circles();
    let shown = d.min(MAX_GLYPHS);
    let height = y(n) + STEP + if d > 0 { STEP } else { 0.0 };
    let mut out = String::new();
    writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{}" height="{height}" viewBox="0 0 {} {height}">"#,
        RIGHT_X + LEFT_X,
        RIGHT_X + LEFT_X
    )
    .unwrap();
    writeln!(
        out,
        r##"  <rect x="{LEFT_X}" y="{}" width="{}" height="{}" fill="none" stroke="#888"/>"##,
        STEP / 2.0,
        RIGHT_X - LEFT_X,
        y(n)
    )
    .unwrap();
    for j in 1..=n {
        for x in [LEFT_X, RIGHT_X] {
            writeln!(out, r#"  <circle cx="{x}" cy="{}" r="3" fill="black"/>"#, y(j)).unwrap();
        }
    }
    for (p, q) in chip.matching().pin_pairs() {
        let path = match (p, q) {
            (Pin::Left(a), Pin::Left(b)) => {
                let bulge = LEFT_X + 12.0 * a.abs_diff(b) as f64 + 8.0;
                format!("M {LEFT_X} {} C {bulge} {}, {bulge} {}, {LEFT_X} {}", y(a), y(a), y(b), y(b))
            }
            (Pin::Right(a), Pin::Right(b)) => {
                let bulge = RIGHT_X - 12.0 * a.abs_diff(b) as f64 - 8.0;
                format!("M {RIGHT_X} {} C {bulge} {}, {bulge} {}, {RIGHT_X} {}", y(a), y(a), y(b), y(b))
            }
            (Pin::Left(a), Pin::Right(b)) | (Pin::Right(b), Pin::Left(a)) => {
                let mid = (LEFT_X + RIGHT_X) / 2.0;
                format!("M {LEFT_X} {} C {mid} {}, {mid} {}, {RIGHT_X} {}", y(a), y(a), y(b), y(b))
            }
        };
        writeln!(out, r#"  <path d="{path}" fill="none" stroke="black"/>"#).unwrap();
    }
    for k in 0..shown {
        writeln!(
            out,
            r#"  <circle cx="{}" cy="{}" r="5" fill="none" stroke="black"/>"#,
            LEFT_X + 6.0 + 14.0 * k as f64,
            y(n) + STEP
        )
        .unwrap();
    }
    writeln!(
        out,
        r#"  <text x="{LEFT_X}" y="{}" font-size="10">circles: {d}</text>"#,
        y(n) + STEP * if d > 0 { 1.6 } else { 0.8 }
    )
    .unwrap();
    out.push_str("</svg>\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hook_picture() {
        let h = Chip::hook(3, 1).unwrap();
        assert_eq!(render_ascii(&h), "1 ─┐ ┌─ 1'\n2 ─┘ └─ 2'\n3 ───── 3'\ncircles: 0\n");
    }

    #[test]
    fn identity_and_circle() {
        let one = render_ascii(&Chip::identity(2));
        assert_eq!(one, "1 ─── 1'\n2 ─── 2'\ncircles: 0\n");
        let c = render_ascii(&Chip::circle(3));
        assert_eq!(c.lines().filter(|l| l.contains("───")).count(), 3);
        assert!(c.ends_with("circles: 1 ○\n"));
    }

    #[test]
    fn svg_has_one_path_per_wire() {
        let svg = render_svg(&Chip::hook(4, 2).unwrap().with_circles(2));
        assert_eq!(svg.matches("<path").count(), 4);
        assert_eq!(svg.matches(r#"r="5""#).count(), 2);
    }
}
