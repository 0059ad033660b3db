//! Composite Gauss–Legendre quadrature on rectangles.

use std::f64::consts::PI;

#[derive(Debug, Clone)]
pub struct GaussLegendre {
    nodes: Vec<f64>,
    weights: Vec<f64>,
}

impl GaussLegendre {
    /// Nodes and weights on `[-1, 1]` from Newton iteration on `P_n`.
    pub fn new(order: usize) -> Self {
        assert!(order >= 1, "quadrature order must be positive");
        let n = order;
        let mut nodes = vec![0.0; n];
        let mut weights = vec![0.0; n];
        for i in 0..n.div_ceil(2) {
            let mut t = (PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
            for _ in 0..100 {
                let (p, d) = legendre_with_derivative(n, t);
                let step = p / d;
                t -= step;
                if step.abs() < 1e-16 {
                    break;
                }
            }
            let (_, dp) = legendre_with_derivative(n, t);
            let w = 2.0 / ((1.0 - t * t) * dp * dp);
            nodes[i] = -t;
            nodes[n - 1 - i] = t;
            weights[i] = w;
            weights[n - 1 - i] = w;
        }
        Self { nodes, weights }
    }

    pub fn integrate<F: Fn(f64) -> f64>(&self, f: F, a: f64, b: f64, panels: usize) -> f64 {
        let h = (b - a) / panels as f64;
        let mut total = 0.0;
        for k in 0..panels {
            let mid = a + (k as f64 + 0.5) * h;
            let half = h / 2.0;
            let panel: f64 = self
                .nodes
                .iter()
                .zip(&self.weights)
                .map(|(t, w)| w * f(mid + half * t))
                .sum();
            total += half * panel;
        }
        total
    }

    /// Tensor-product rule over `[ax, bx] × [ay, by]`.
    pub fn integrate_2d<F: Fn(f64, f64) -> f64>(
        &self,
        f: F,
        (ax, bx): (f64, f64),
        (ay, by): (f64, f64),
        panels: usize,
    ) -> f64 {
        self.integrate(|x| self.integrate(|y| f(x, y), ay, by, panels), ax, bx, panels)
    }
}

fn legendre_with_derivative(n: usize, t: f64) -> (f64, f64) {
    let (mut p0, mut p1) = (1.0, t);
    for k in 2..=n {
        let kf = k as f64;
        let p2 = ((2.0 * kf - 1.0) * t * p1 - (kf - 1.0) * p0) / kf;
        p0 = p1;
        p1 = p2;
    }
    if n == 0 {
        return (1.0, 0.0);
    }
    let d = n as f64 * (t * p1 - p0) / (t * t - 1.0);
    (p1, d)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn exact_for_polynomials_up_to_degree_2n_minus_1() {
        let q = GaussLegendre::new(5);
        let v = q.integrate(|x| x.powi(9) + 3.0 * x.powi(8), -1.0, 1.0, 1);
        assert_relative_eq!(v, 6.0 / 9.0, max_relative = 1e-14);
        assert_relative_eq!(q.weights.iter().sum::<f64>(), 2.0, max_relative = 1e-14);
    }

    #[test]
    fn gaussian_integral() {
        let q = GaussLegendre::new(20);
        let v = q.integrate(|x| (-x * x).exp(), -10.0, 10.0, 8);
        assert_relative_eq!(v, PI.sqrt(), max_relative = 1e-13);
        let v2 = q.integrate_2d(|x, y| (-(x * x + y * y)).exp(), (-8.0, 8.0), (-8.0, 8.0), 6);
        assert_relative_eq!(v2, PI, max_relative = 1e-12);
    }
}
