/// A multilinear polynomial over binary variables, evaluated on basis-state
/// indices (variable `v` reads bit `v`). Carries at most quadratic terms,
/// which covers PBS cost functions and QUBO objectives.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct CostPolynomial {
    num_vars: usize,
    constant: f64,
    linear: Vec<(usize, f64)>,
    quadratic: Vec<(usize, usize, f64)>,
}

impl CostPolynomial {
    pub fn new(num_vars: usize) -> Self {
        CostPolynomial {
            num_vars,
            ..Default::default()
        }
    }

    pub fn constant(value: f64) -> Self {
        CostPolynomial {
            num_vars: 0,
            constant: value,
            ..Default::default()
        }
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn add_constant(&mut self, value: f64) {
        self.constant += value;
    }

    pub fn add_linear(&mut self, var: usize, coeff: f64) {
        self.num_vars = self.num_vars.max(var + 1);
        self.linear.push((var, coeff));
    }

    pub fn add_quadratic(&mut self, a: usize, b: usize, coeff: f64) {
        self.num_vars = self.num_vars.max(a.max(b) + 1);
        self.quadratic.push((a, b, coeff));
    }

    /// The largest variable index used, if any.
    pub fn max_variable(&self) -> Option<usize> {
        let lin = self.linear.iter().map(|&(v, _)| v).max();
        let quad = self.quadratic.iter().map(|&(a, b, _)| a.max(b)).max();
        lin.into_iter().chain(quad).max()
    }

    /// Evaluates with variable `v` bound to bit `v` of `index`.
    #[inline]
    pub fn evaluate_bits(&self, index: usize) -> f64 {
        let mut value = self.constant;
        for &(v, c) in &self.linear {
            if index >> v & 1 == 1 {
                value += c;
            }
        }
        for &(a, b, c) in &self.quadratic {
            if index >> a & 1 == 1 && index >> b & 1 == 1 {
                value += c;
            }
        }
        value
    }
}
