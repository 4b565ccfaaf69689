//! Bivariate series: polynomials in `x` whose coefficients are truncated
//! q-series.

use num_bigint::BigInt;
use num_traits::One;

use super::truncated::{SeriesError, TruncatedSeries};

/// A polynomial in `x` of degree at most `L` whose `x^l` coefficient is a
/// [`TruncatedSeries`] of a common q-order `N`.
///
/// Truncation in both variables follows the same contract as the univariate
/// type: results carry the minimum of the operand orders, and reading past
/// either order panics.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct XQSeries {
    layers: Vec<TruncatedSeries>,
}

impl XQSeries {
    /// Builds a bivariate series from the `x^0 ..= x^L` layers.
    ///
    /// Layers are truncated to the smallest q-order among them so the result
    /// is rectangular.
    pub fn from_layers(layers: Vec<TruncatedSeries>) -> Self {
        assert!(
            !layers.is_empty(),
            "a bivariate series has at least the x^0 layer"
        );
        let q_order = layers.iter().map(TruncatedSeries::order).min().unwrap();
        let layers = layers
            .into_iter()
            .map(|layer| {
                if layer.order() == q_order {
                    layer
                } else {
                    layer.truncate_to(q_order)
                }
            })
            .collect();
        Self { layers }
    }

    pub fn zero(x_order: usize, q_order: usize) -> Self {
        Self {
            layers: vec![TruncatedSeries::zero(q_order); x_order + 1],
        }
    }

    pub fn one(x_order: usize, q_order: usize) -> Self {
        let mut layers = vec![TruncatedSeries::zero(q_order); x_order + 1];
        layers[0] = TruncatedSeries::one(q_order);
        Self { layers }
    }

    /// The truncation order `L` in `x`.
    pub fn x_order(&self) -> usize {
        self.layers.len() - 1
    }

    /// The common truncation order `N` in `q`.
    pub fn q_order(&self) -> usize {
        self.layers[0].order()
    }

    /// The `x^l` layer. Panics above the x-order.
    pub fn layer(&self, l: usize) -> &TruncatedSeries {
        assert!(
            l <= self.x_order(),
            "layer x^{} requested from a series of x-order {}",
            l,
            self.x_order()
        );
        &self.layers[l]
    }

    /// The coefficient of `x^l q^n`.
    pub fn coeff(&self, l: usize, n: usize) -> &BigInt {
        self.layer(l).coeff(n)
    }

    /// Layer-wise Cauchy product, truncated at the minimum orders.
    pub fn mul(&self, other: &Self) -> Self {
        let x_order = self.x_order().min(other.x_order());
        let q_order = self.q_order().min(other.q_order());
        let mut layers = Vec::with_capacity(x_order + 1);
        for l in 0..=x_order {
            let mut acc = TruncatedSeries::zero(q_order);
            for i in 0..=l {
                let a = &self.layers[i];
                let b = &other.layers[l - i];
                if a.is_zero() || b.is_zero() {
                    continue;
                }
                acc = acc.add(&a.mul(b));
            }
            layers.push(acc);
        }
        Self { layers }
    }

    /// Multiplicative inverse up to `(L, N)`.
    ///
    /// Requires the `x^0` layer to be invertible as a q-series, i.e. its
    /// constant term must be 1 or -1.
    pub fn invert(&self) -> Result<Self, SeriesError> {
        let a0_inv = self.layers[0].invert()?;
        let q_order = self.q_order();
        let mut out: Vec<TruncatedSeries> = Vec::with_capacity(self.layers.len());
        out.push(a0_inv.clone());
        for l in 1..=self.x_order() {
            let mut acc = TruncatedSeries::zero(q_order);
            for k in 1..=l {
                if !self.layers[k].is_zero() {
                    acc = acc.add(&self.layers[k].mul(&out[l - k]));
                }
            }
            out.push(acc.mul(&a0_inv).neg());
        }
        Ok(Self { layers: out })
    }

    /// Substitutes the integer `x0` for `x`, exactly.
    pub fn eval_x(&self, x0: i64) -> TruncatedSeries {
        let x0 = BigInt::from(x0);
        let mut acc = TruncatedSeries::zero(self.q_order());
        let mut power = BigInt::one();
        for layer in &self.layers {
            if !layer.is_zero() {
                acc = acc.add(&layer.scale(&power));
            }
            power *= &x0;
        }
        acc
    }

    /// Substitutes `-x` for `x` by negating the odd layers.
    pub fn negate_x(&self) -> Self {
        let layers = self
            .layers
            .iter()
            .enumerate()
            .map(|(l, layer)| {
                if l % 2 == 1 {
                    layer.neg()
                } else {
                    layer.clone()
                }
            })
            .collect();
        Self { layers }
    }

    /// True when the series equals 1 at every stored coefficient.
    pub fn is_one(&self) -> bool {
        self.layers[0].is_one() && self.layers[1..].iter().all(TruncatedSeries::is_zero)
    }

    /// The first `(x-power, degree)` at which two series disagree, comparing
    /// up to the minimum orders.
    pub fn first_difference(&self, other: &Self) -> Option<(usize, usize)> {
        let x_order = self.x_order().min(other.x_order());
        let q_order = self.q_order().min(other.q_order());
        for l in 0..=x_order {
            let a = self.layers[l].truncate_to(q_order);
            let b = other.layers[l].truncate_to(q_order);
            if let Some(n) = a.first_difference(&b) {
                return Some((l, n));
            }
        }
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn one_plus_xq(q_order: usize) -> XQSeries {
        XQSeries::from_layers(vec![
            TruncatedSeries::one(q_order),
            TruncatedSeries::monomial(1, q_order),
        ])
    }

    #[test]
    fn eval_substitutes() {
        // 1 + x*q at x = -1 gives 1 - q.
        assert_eq!(
            one_plus_xq(3).eval_x(-1),
            TruncatedSeries::from_ints(&[1, -1, 0, 0])
        );
    }

    #[test]
    fn invert_one_is_one() {
        assert!(XQSeries::one(4, 4).invert().unwrap().is_one());
    }

    #[test]
    fn mul_by_inverse_is_one() {
        let a = one_plus_xq(5);
        assert!(a.mul(&a.invert().unwrap()).is_one());
    }

    #[test]
    fn negate_x_flips_odd_layers() {
        let a = one_plus_xq(2);
        let b = a.negate_x();
        assert_eq!(b.layer(0), a.layer(0));
        assert_eq!(b.layer(1), &a.layer(1).neg());
        assert_eq!(b.negate_x(), a);
    }

    #[test]
    fn mul_takes_min_orders() {
        let a = XQSeries::one(3, 7);
        let b = XQSeries::one(5, 4);
        let p = a.mul(&b);
        assert_eq!(p.x_order(), 3);
        assert_eq!(p.q_order(), 4);
    }

    #[test]
    fn eval_tracks_geometric_layers() {
        // sum_l x^l q^l at x = 1 is sum_l q^l.
        let layers = (0..=3).map(|l| TruncatedSeries::monomial(l, 3)).collect();
        let s = XQSeries::from_layers(layers);
        assert_eq!(s.eval_x(1), TruncatedSeries::from_ints(&[1, 1, 1, 1]));
        assert_eq!(s.eval_x(-1), TruncatedSeries::from_ints(&[1, -1, 1, -1]));
    }
}
