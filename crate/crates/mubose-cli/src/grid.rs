//! Momentum-grid construction for the scan command.

/// Upper bound on grid size: keeps a mistyped `--steps` from allocating
/// gigabytes (each point also costs an exact-arithmetic evaluation).
pub const MAX_STEPS: usize = 1_000_000;

/// Build a grid of `steps` points from `kmin` to `kmax`, linearly spaced
/// or geometrically with `log`. Both endpoints are emitted exactly.
pub fn build(kmin: f64, kmax: f64, steps: usize, log: bool) -> Result<Vec<f64>, String> {
    if !kmin.is_finite() || !kmax.is_finite() {
        return Err("kmin and kmax must be finite".into());
    }
    if kmin < 0.0 {
        return Err("kmin must be non-negative".into());
    }
    if steps == 0 {
        return Err("steps must be at least 1".into());
    }
    if steps > MAX_STEPS {
        return Err(format!("steps must be at most {MAX_STEPS}"));
    }
    if steps == 1 {
        if kmin != kmax {
            return Err("a single-point grid needs kmin == kmax".into());
        }
        return Ok(vec![kmin]);
    }
    if kmax <= kmin {
        return Err("kmax must exceed kmin".into());
    }
    if log && kmin <= 0.0 {
        return Err("--log needs kmin > 0".into());
    }
    let n = steps - 1;
    let mut grid = Vec::with_capacity(steps);
    for i in 0..steps {
        let f = i as f64 / n as f64;
        grid.push(if log {
            kmin * (kmax / kmin).powf(f)
        } else {
            kmin + (kmax - kmin) * f
        });
    }
    grid[0] = kmin;
    grid[n] = kmax;
    Ok(grid)
}

#[cfg(test)]
mod tests {
    use super::build;

    #[test]
    fn linear_grid_hits_round_points_exactly() {
        assert_eq!(build(100.0, 500.0, 5, false).unwrap(), vec![100.0, 200.0, 300.0, 400.0, 500.0]);
        let g = build(0.0, 600.0, 61, false).unwrap();
        assert_eq!(g.len(), 61);
        assert_eq!(g[0], 0.0);
        assert_eq!(g[60], 600.0);
        assert!(g.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn log_grid_is_geometric_with_exact_endpoints() {
        let g = build(1.0, 100.0, 3, true).unwrap();
        assert_eq!(g[0], 1.0);
        assert!((g[1] - 10.0).abs() < 1e-12);
        assert_eq!(g[2], 100.0);
    }

    #[test]
    fn degenerate_grids_are_rejected() {
        assert_eq!(build(300.0, 300.0, 1, false).unwrap(), vec![300.0]);
        assert!(build(100.0, 500.0, 1, false).is_err());
        assert!(build(0.0, 600.0, 0, false).is_err());
        assert!(build(0.0, 600.0, super::MAX_STEPS + 1, false).is_err());
        assert!(build(500.0, 100.0, 5, false).is_err());
        assert!(build(0.0, 600.0, 5, true).is_err());
        assert!(build(-1.0, 600.0, 5, false).is_err());
        assert!(build(f64::NAN, 600.0, 5, false).is_err());
    }
}
