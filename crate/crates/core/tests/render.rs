use diagmon::render::{render_ascii, render_svg};
use diagmon::{parse_chip, Chip};

#[test]
fn figure_one_picture() {
    let xi = parse_chip("W9:1-5',2-4,3-5,6-9',7-9,8-8',1'-2',3'-4',6'-7';3").unwrap();
    let text = render_ascii(&xi);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 10);
    assert_eq!(lines[9], "circles: 3 ○○○");
    for (j, line) in lines[..9].iter().enumerate() {
        assert!(line.starts_with(&format!("{} ", j + 1)));
        assert!(line.ends_with(&format!(" {}'", j + 1)));
    }
    // the straight wire 8-8' runs across
    assert!(!lines[7][2..lines[7].len() - 3].contains(' '));
    let svg = render_svg(&xi);
    assert_eq!(svg.matches("<path").count(), 9);
    assert_eq!(svg.matches(r#"r="5""#).count(), 3);
}

#[test]
fn simple_pictures() {
    assert_eq!(render_ascii(&Chip::identity(2)), "1 ─── 1'\n2 ─── 2'\ncircles: 0\n");
    let c = render_ascii(&Chip::circle(3));
    assert_eq!(c, "1 ─── 1'\n2 ─── 2'\n3 ─── 3'\ncircles: 1 ○\n");
    let many = render_ascii(&Chip::identity(1).with_circles(40));
    assert!(many.ends_with("…\n"));
    assert_eq!(many.matches('○').count(), 32);
}

#[test]
fn crossing_wires_are_drawn() {
    let text = render_ascii(&Chip::alpha(2));
    assert_eq!(text.lines().count(), 3);
    assert!(text.contains('┼') || text.contains('═'));
}
