use alloc::vec::Vec;

/// `N(t)/(1-t)^nvars = h(t)/(1-t)^dim`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HilbertSeries {
    pub numerator: Vec<i64>,
    pub nvars: usize,
    pub hvector: Vec<i64>,
    pub dim: usize,
}

impl HilbertSeries {
    /// Deflates a nonzero numerator by `(1 - t)` while it vanishes at `t = 1`.
    pub fn from_numerator(numerator: Vec<i64>, nvars: usize) -> Self {
        assert!(!numerator.is_empty(), "zero numerator");
        let mut h = numerator.clone();
        let mut roots = 0;
        while h.iter().sum::<i64>() == 0 {
            h = divide_one_minus_t(&h);
            roots += 1;
        }
        HilbertSeries {
            numerator,
            nvars,
            hvector: h,
            dim: nvars - roots,
        }
    }

    /// `e = h(1)`.
    pub fn multiplicity(&self) -> i64 {
        self.hvector.iter().sum()
    }

    /// Hilbert function values `H(0..=up_to)`.
    pub fn values(&self, up_to: usize) -> Vec<i64> {
        let mut c: Vec<i64> = (0..=up_to).map(|i| self.hvector.get(i).copied().unwrap_or(0)).collect();
        for _ in 0..self.dim {
            for i in 1..c.len() {
                c[i] += c[i - 1];
            }
        }
        c
    }

    pub fn value(&self, d: usize) -> i64 {
        self.values(d)[d]
    }
}

/// Exact quotient by `(1 - t)`; the caller guarantees `p(1) = 0`.
pub(crate) fn divide_one_minus_t(p: &[i64]) -> Vec<i64> {
    let mut q = Vec::with_capacity(p.len().saturating_sub(1));
    let mut acc = 0;
    for c in &p[..p.len() - 1] {
        acc += c;
        q.push(acc);
    }
    q
}
