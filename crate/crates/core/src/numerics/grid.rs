use std::fmt;

/// Traversal direction of a radial grid during initial-value integration.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    /// Integrate from the first (smallest) point toward the last.
    Outward,
    /// Integrate from the last (largest) point toward the first.
    Inward,
}

/// Errors from grid construction.
#[derive(Debug, Clone, PartialEq)]
pub enum GridError {
    /// Fewer than two points.
    TooShort,
    /// Points are not strictly increasing, or contain non-finite values.
    NotMonotone,
    /// An inward grid reaches rho = 0 or below; the origin is a singular
    /// point of every radial system solved here.
    NonPositiveInnerRadius,
}

impl fmt::Display for GridError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::TooShort => write!(f, "grid needs at least 2 points"),
            Self::NotMonotone => write!(f, "grid points must be strictly increasing and finite"),
            Self::NonPositiveInnerRadius => {
                write!(f, "inward grid must keep a strictly positive inner radius")
            }
        }
    }
}

impl std::error::Error for GridError {}

/// Strictly increasing radial coordinates with a traversal direction.
///
/// Points are stored in ascending order regardless of direction; the tag
/// only selects which end integration starts from.
#[derive(Debug, Clone)]
pub struct RadialGrid {
    points: Vec<f64>,
    direction: Direction,
}

impl RadialGrid {
    pub fn new(points: Vec<f64>, direction: Direction) -> Result<Self, GridError> {
        if points.len() < 2 {
            return Err(GridError::TooShort);
        }
        if points.windows(2).any(|w| !(w[0] < w[1])) || points.iter().any(|p| !p.is_finite()) {
            return Err(GridError::NotMonotone);
        }
        if direction == Direction::Inward && points[0] <= 0.0 {
            return Err(GridError::NonPositiveInnerRadius);
        }
        Ok(Self { points, direction })
    }

    /// Uniformly spaced grid over `[lo, hi]` with `n` points.
    pub fn linspace(lo: f64, hi: f64, n: usize, direction: Direction) -> Result<Self, GridError> {
        if n < 2 {
            return Err(GridError::TooShort);
        }
        let step = (hi - lo) / (n - 1) as f64;
        let mut points: Vec<f64> = (0..n).map(|i| lo + step * i as f64).collect();
        points[n - 1] = hi;
        Self::new(points, direction)
    }

    /// Log-uniform grid over `[lo, hi]`; `lo` must be positive.
    pub fn logspace(lo: f64, hi: f64, n: usize, direction: Direction) -> Result<Self, GridError> {
        if n < 2 {
            return Err(GridError::TooShort);
        }
        if lo <= 0.0 || hi <= lo {
            return Err(GridError::NotMonotone);
        }
        let (llo, lhi) = (lo.ln(), hi.ln());
        let step = (lhi - llo) / (n - 1) as f64;
        let mut points: Vec<f64> = (0..n).map(|i| (llo + step * i as f64).exp()).collect();
        points[0] = lo;
        points[n - 1] = hi;
        Self::new(points, direction)
    }

    pub fn points(&self) -> &[f64] {
        &self.points
    }

    pub fn direction(&self) -> Direction {
        self.direction
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        false // a constructed grid always has >= 2 points
    }

    /// First point visited during integration.
    pub fn start(&self) -> f64 {
        match self.direction {
            Direction::Outward => self.points[0],
            Direction::Inward => self.points[self.points.len() - 1],
        }
    }

    /// Last point visited during integration.
    pub fn end(&self) -> f64 {
        match self.direction {
            Direction::Outward => self.points[self.points.len() - 1],
            Direction::Inward => self.points[0],
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_short_and_non_monotone() {
        assert_eq!(
            RadialGrid::new(vec![1.0], Direction::Outward).unwrap_err(),
            GridError::TooShort
        );
        assert_eq!(
            RadialGrid::new(vec![1.0, 1.0], Direction::Outward).unwrap_err(),
            GridError::NotMonotone
        );
        assert_eq!(
            RadialGrid::new(vec![2.0, 1.0], Direction::Outward).unwrap_err(),
            GridError::NotMonotone
        );
    }

    #[test]
    fn inward_grid_needs_positive_inner_radius() {
        assert_eq!(
            RadialGrid::new(vec![0.0, 1.0], Direction::Inward).unwrap_err(),
            GridError::NonPositiveInnerRadius
        );
        let g = RadialGrid::new(vec![1e-4, 1.0, 30.0], Direction::Inward).unwrap();
        assert_eq!(g.start(), 30.0);
        assert_eq!(g.end(), 1e-4);
    }

    #[test]
    fn linspace_and_logspace_hit_endpoints() {
        let g = RadialGrid::linspace(0.0, 1.0, 11, Direction::Outward).unwrap();
        assert_eq!(g.points()[0], 0.0);
        assert_eq!(g.points()[10], 1.0);
        let g = RadialGrid::logspace(1e-4, 30.0, 100, Direction::Inward).unwrap();
        assert_eq!(g.points()[0], 1e-4);
        assert_eq!(g.points()[99], 30.0);
    }
}
