//! Lattice-path picture of `H3(Z)`: a word draws a path in `Z²`, the endpoint
//! gives `(a, b)` and the algebraic area of the path closed by `x^-a y^-b`
//! gives `c`.

use alloc::vec;
use alloc::vec::Vec;

use crate::heis::{Letter, Word};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Step {
    Right,
    Left,
    Up,
    Down,
}

impl Step {
    pub fn delta(self) -> (i64, i64) {
        match self {
            Step::Right => (1, 0),
            Step::Left => (-1, 0),
            Step::Up => (0, 1),
            Step::Down => (0, -1),
        }
    }

    fn from_delta(d: (i64, i64)) -> Option<Step> {
        match d {
            (1, 0) => Some(Step::Right),
            (-1, 0) => Some(Step::Left),
            (0, 1) => Some(Step::Up),
            (0, -1) => Some(Step::Down),
            _ => None,
        }
    }
}

/// A path starting at the origin.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LatticePath {
    pub steps: Vec<Step>,
}

impl LatticePath {
    pub fn endpoint(&self) -> (i64, i64) {
        self.steps.iter().fold((0, 0), |(x, y), s| {
            let (dx, dy) = s.delta();
            (x + dx, y + dy)
        })
    }

    /// Vertices visited, starting with the origin.
    pub fn vertices(&self) -> Vec<(i64, i64)> {
        let mut out = Vec::with_capacity(self.steps.len() + 1);
        let mut p = (0, 0);
        out.push(p);
        for s in &self.steps {
            let (dx, dy) = s.delta();
            p = (p.0 + dx, p.1 + dy);
            out.push(p);
        }
        out
    }

    /// The path followed by the closing segment `x^-a y^-b`.
    pub fn closed(&self) -> LatticePath {
        let (a, b) = self.endpoint();
        let mut steps = self.steps.clone();
        let horiz = if a > 0 { Step::Left } else { Step::Right };
        steps.extend(core::iter::repeat_n(horiz, a.unsigned_abs() as usize));
        let vert = if b > 0 { Step::Down } else { Step::Up };
        steps.extend(core::iter::repeat_n(vert, b.unsigned_abs() as usize));
        LatticePath { steps }
    }
}

/// Draws `w`. Letters of `x` move horizontally while an even number of `t`
/// has been read and vertically otherwise; `y` letters do the opposite.
pub fn word_to_path(w: &Word) -> LatticePath {
    let mut flipped = false;
    let mut steps = Vec::new();
    for &l in w.letters() {
        if l == Letter::T {
            flipped = !flipped;
            continue;
        }
        let (dx, dy) = l.step();
        let d = if flipped { (dy, dx) } else { (dx, dy) };
        if let Some(s) = Step::from_delta(d) {
            steps.push(s);
        }
    }
    LatticePath { steps }
}

/// Signed area of the closed curve, as the sum over vertical moves of the
/// current abscissa. The closing segment contributes nothing since its
/// vertical part runs along the axis.
pub fn algebraic_area(p: &LatticePath) -> i64 {
    let mut x = 0i64;
    let mut area = 0i64;
    for s in &p.steps {
        match s {
            Step::Right => x += 1,
            Step::Left => x -= 1,
            Step::Up => area += x,
            Step::Down => area -= x,
        }
    }
    area
}

/// Winding numbers of a closed curve around each unit square of a box.
/// The box is the bounding box of the curve padded by one cell on each side.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WindingGrid {
    /// Lower-left corner of the lower-left cell.
    pub x_min: i64,
    pub y_min: i64,
    pub width: usize,
    pub height: usize,
    /// Row-major, row 0 is the bottom row.
    pub cells: Vec<i64>,
}

impl WindingGrid {
    /// Winding number of the cell `[x, x+1] × [y, y+1]`; zero outside the box.
    pub fn at(&self, x: i64, y: i64) -> i64 {
        let (cx, cy) = (x - self.x_min, y - self.y_min);
        if cx < 0 || cy < 0 || cx as usize >= self.width || cy as usize >= self.height {
            return 0;
        }
        self.cells[cy as usize * self.width + cx as usize]
    }

    pub fn sum(&self) -> i64 {
        self.cells.iter().sum()
    }

    /// Rows from top to bottom, as they appear in a picture.
    pub fn rows_top_down(&self) -> impl Iterator<Item = &[i64]> {
        self.cells.chunks(self.width.max(1)).rev()
    }
}

/// Winding numbers by horizontal ray casting: the winding number of a cell is
/// the signed count of vertical edges crossing the ray from its centre to the
/// right, upward edges counting `+1`.
pub fn winding_grid(p: &LatticePath) -> WindingGrid {
    let closed = p.closed();
    let verts = closed.vertices();
    let (mut x_lo, mut x_hi, mut y_lo, mut y_hi) = (0i64, 0i64, 0i64, 0i64);
    for &(x, y) in &verts {
        x_lo = x_lo.min(x);
        x_hi = x_hi.max(x);
        y_lo = y_lo.min(y);
        y_hi = y_hi.max(y);
    }
    let x_min = x_lo - 1;
    let y_min = y_lo - 1;
    let width = (x_hi - x_lo + 2) as usize;
    let height = (y_hi - y_lo + 2) as usize;

    // Signed vertical edges bucketed by row: (abscissa, sign).
    let mut rows: Vec<Vec<(i64, i64)>> = vec![Vec::new(); height];
    for w in verts.windows(2) {
        let ((x0, y0), (_, y1)) = (w[0], w[1]);
        if y1 != y0 {
            let (row, sign) = if y1 > y0 { (y0, 1) } else { (y1, -1) };
            rows[(row - y_min) as usize].push((x0, sign));
        }
    }

    let mut cells = vec![0i64; width * height];
    for (r, edges) in rows.iter().enumerate() {
        for c in 0..width {
            let centre_x = x_min + c as i64;
            cells[r * width + c] = edges
                .iter()
                .filter(|&&(ex, _)| ex > centre_x)
                .map(|&(_, s)| s)
                .sum();
        }
    }
    WindingGrid {
        x_min,
        y_min,
        width,
        height,
        cells,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::heis::eval_word;
    use num_bigint::BigInt;

    fn path(s: &str) -> LatticePath {
        word_to_path(&s.parse().unwrap())
    }

    #[test]
    fn ten_segment_word() {
        let w: Word = "x^2 y^4 x^4 y^-2 x^-2 y^6 x^-2 y^-3 x^6 y^4".parse().unwrap();
        let p = word_to_path(&w);
        assert_eq!(p.endpoint(), (8, 9));
        assert_eq!(algebraic_area(&p), 46);
        let g = winding_grid(&p);
        assert_eq!(g.sum(), 46);
        for v in [1, 2, -1] {
            assert!(g.cells.contains(&v), "missing winding number {v}");
        }
        assert_eq!(eval_word(&w).h.c, BigInt::from(46));
    }

    #[test]
    fn toggled_path() {
        let p = path("x t x t x");
        assert_eq!(p.steps, vec![Step::Right, Step::Up, Step::Right]);
        assert_eq!(p.endpoint(), (2, 1));
        assert_eq!(path("").endpoint(), (0, 0));
        assert!(path("").steps.is_empty());
    }

    #[test]
    fn unit_squares() {
        let ccw = path("x y X Y");
        assert_eq!(algebraic_area(&ccw), 1);
        let g = winding_grid(&ccw);
        assert_eq!(g.at(0, 0), 1);
        assert_eq!(g.cells.iter().filter(|&&v| v != 0).count(), 1);
        assert_eq!(algebraic_area(&path("y x Y X")), -1);
    }

    #[test]
    fn padded_border_is_zero() {
        let g = winding_grid(&path("x^3 y^2 X^3 Y^2"));
        assert_eq!(g.sum(), 6);
        for c in 0..g.width {
            assert_eq!(g.cells[c], 0);
            assert_eq!(g.cells[(g.height - 1) * g.width + c], 0);
        }
        for r in 0..g.height {
            assert_eq!(g.cells[r * g.width], 0);
            assert_eq!(g.cells[r * g.width + g.width - 1], 0);
        }
    }
}
