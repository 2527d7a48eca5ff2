use std::ops::{Add, Mul, Sub};

use super::{AlgebraError, Field};

/// Univariate polynomial, coefficients lowest degree first.
///
/// The leading coefficient is never zero; the zero polynomial has no
/// coefficients at all.
#[derive(Debug, Clone, PartialEq)]
pub struct Poly<F: Field> {
    coeffs: Vec<F>,
}

impl<F: Field> Poly<F> {
    pub fn new(mut coeffs: Vec<F>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn constant(c: F) -> Self {
        Self::new(vec![c])
    }

    /// `c * x^degree`
    pub fn monomial(c: F, degree: usize) -> Self {
        let zero = F::zero_in(&c.context());
        let mut coeffs = vec![zero; degree];
        coeffs.push(c);
        Self::new(coeffs)
    }

    /// The polynomial `x`.
    pub fn x(ctx: &F::Context) -> Self {
        Self::monomial(F::one_in(ctx), 1)
    }

    pub fn coeffs(&self) -> &[F] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&F> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(|c| c.is_one())
    }

    pub fn eval(&self, x: &F) -> F {
        let mut acc = F::zero_in(&x.context());
        for c in self.coeffs.iter().rev() {
            acc = acc * x.clone() + c.clone();
        }
        acc
    }

    pub fn scale(&self, c: &F) -> Self {
        Self::new(self.coeffs.iter().map(|a| a.clone() * c.clone()).collect())
    }

    /// Monic polynomial whose roots are exactly `points`: `prod (x - a)`.
    pub fn annihilator(points: &[F]) -> Result<Self, AlgebraError> {
        let first = points.first().ok_or(AlgebraError::EmptyPointSet)?;
        check_distinct(points.iter())?;
        let ctx = first.context();
        let mut acc = Self::constant(F::one_in(&ctx));
        for a in points {
            acc = &acc * &Self::new(vec![-a.clone(), F::one_in(&ctx)]);
        }
        Ok(acc)
    }

    /// Lagrange interpolation: the unique polynomial of degree `< points.len()`
    /// through every `(x, y)` pair.
    pub fn interpolate(points: &[(F, F)]) -> Result<Self, AlgebraError> {
        let Some((x0, _)) = points.first() else {
            return Ok(Self::zero());
        };
        check_distinct(points.iter().map(|(x, _)| x))?;
        let ctx = x0.context();
        let mut acc = Self::zero();
        for (i, (xi, yi)) in points.iter().enumerate() {
            if yi.is_zero() {
                continue;
            }
            let mut basis = Self::constant(F::one_in(&ctx));
            let mut denom = F::one_in(&ctx);
            for (j, (xj, _)) in points.iter().enumerate() {
                if i != j {
                    basis = &basis * &Self::new(vec![-xj.clone(), F::one_in(&ctx)]);
                    denom = denom * (xi.clone() - xj.clone());
                }
            }
            let scale = yi.clone() * denom.inverse().expect("distinct nodes");
            acc = &acc + &basis.scale(&scale);
        }
        Ok(acc)
    }
}

fn check_distinct<'a, F: Field + 'a>(
    items: impl Iterator<Item = &'a F> + Clone,
) -> Result<(), AlgebraError> {
    for (i, a) in items.clone().enumerate() {
        if items.clone().skip(i + 1).any(|b| b == a) {
            return Err(AlgebraError::DuplicatePoint(format!("{a:?}")));
        }
    }
    Ok(())
}

impl<F: Field> Add for &Poly<F> {
    type Output = Poly<F>;
    fn add(self, rhs: &Poly<F>) -> Poly<F> {
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut out = long.coeffs.clone();
        for (o, c) in out.iter_mut().zip(&short.coeffs) {
            *o = o.clone() + c.clone();
        }
        Poly::new(out)
    }
}

impl<F: Field> Sub for &Poly<F> {
    type Output = Poly<F>;
    fn sub(self, rhs: &Poly<F>) -> Poly<F> {
        let neg = Poly::new(rhs.coeffs.iter().map(|c| -c.clone()).collect());
        self + &neg
    }
}

impl<F: Field> Mul for &Poly<F> {
    type Output = Poly<F>;
    fn mul(self, rhs: &Poly<F>) -> Poly<F> {
        let (Some(a0), false) = (self.coeffs.first(), rhs.is_zero()) else {
            return Poly::zero();
        };
        let zero = F::zero_in(&a0.context());
        let mut out = vec![zero; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Poly::new(out)
    }
}
