use super::poly::UniPolyF2;

/// Sylvester resultant of `f = Σ f_i y^i` and `g = Σ g_i y^i` with respect
/// to `y`, where the coefficients lie in F_2[x]. Formal degrees are the
/// slice lengths minus one, so a vanishing leading coefficient is allowed.
pub fn sylvester_resultant(f: &[UniPolyF2], g: &[UniPolyF2]) -> UniPolyF2 {
    let m = f.len().saturating_sub(1);
    let n = g.len().saturating_sub(1);
    if f.is_empty() || g.is_empty() {
        return UniPolyF2::zero();
    }
    let size = m + n;
    if size == 0 {
        return UniPolyF2::one();
    }
    let mut mat = vec![vec![UniPolyF2::zero(); size]; size];
    for r in 0..n {
        for (i, c) in f.iter().enumerate() {
            mat[r][r + m - i] = c.clone();
        }
    }
    for r in 0..m {
        for (i, c) in g.iter().enumerate() {
            mat[n + r][r + n - i] = c.clone();
        }
    }
    determinant(mat)
}

/// Determinant over F_2[x] by fraction-free (Bareiss) elimination.
pub fn determinant(mut mat: Vec<Vec<UniPolyF2>>) -> UniPolyF2 {
    let n = mat.len();
    if n == 0 {
        return UniPolyF2::one();
    }
    let mut prev = UniPolyF2::one();
    for k in 0..n - 1 {
        if mat[k][k].is_zero() {
            let Some(swap) = (k + 1..n).find(|&i| !mat[i][k].is_zero()) else {
                return UniPolyF2::zero();
            };
            // row swaps only flip the sign, which is invisible in characteristic 2
            mat.swap(k, swap);
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&mat[k][k] * &mat[i][j]) + &(&mat[i][k] * &mat[k][j]);
                mat[i][j] = num.div_exact(&prev);
            }
        }
        prev = mat[k][k].clone();
    }
    mat[n - 1][n - 1].clone()
}

/// Binary form of degree `degree` in `(X:Y)`; bit `i` of `coeffs` is the
/// coefficient of `X^i Y^(degree-i)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BinaryForm {
    pub degree: usize,
    pub coeffs: UniPolyF2,
}

impl BinaryForm {
    pub fn new(degree: usize, coeffs: UniPolyF2) -> Self {
        debug_assert!(coeffs.degree().is_none_or(|d| d <= degree));
        BinaryForm { degree, coeffs }
    }

    /// Coefficients as a polynomial in `Y` over F_2[X].
    fn y_coeffs(&self) -> Vec<UniPolyF2> {
        (0..=self.degree)
            .map(|j| {
                let i = self.degree - j;
                if self.coeffs.coeff(i) {
                    UniPolyF2::monomial(i)
                } else {
                    UniPolyF2::zero()
                }
            })
            .collect()
    }
}

/// `Res_Y(F, G)` as a polynomial in `X` (homogeneous of degree `deg F · deg G`).
pub fn binary_form_resultant(f: &BinaryForm, g: &BinaryForm) -> UniPolyF2 {
    sylvester_resultant(&f.y_coeffs(), &g.y_coeffs())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(bits: u64) -> UniPolyF2 {
        UniPolyF2::from_u64(bits)
    }

    #[test]
    fn examples() {
        // F = X, G = Y
        let f = BinaryForm::new(1, x(0b10));
        let g = BinaryForm::new(1, x(0b01));
        assert_eq!(binary_form_resultant(&f, &g), UniPolyF2::monomial(1));
        // X^2 + Y^2 and XY
        let f = BinaryForm::new(2, x(0b101));
        let g = BinaryForm::new(2, x(0b010));
        assert_eq!(binary_form_resultant(&f, &g), UniPolyF2::monomial(4));
        // common factor X + Y
        let h = x(0b11);
        let f = BinaryForm::new(2, &h * &x(0b10));
        let g = BinaryForm::new(2, &h * &x(0b01));
        assert!(binary_form_resultant(&f, &g).is_zero());
    }

    #[test]
    fn univariate_resultant_detects_common_roots() {
        // constant coefficients: y^2 + y + 1 and y^3 + 1 share y^2+y+1
        let one = UniPolyF2::one();
        let zero = UniPolyF2::zero();
        let f = vec![one.clone(), one.clone(), one.clone()];
        let g = vec![one.clone(), zero.clone(), zero.clone(), one.clone()];
        assert!(sylvester_resultant(&f, &g).is_zero());
        let g = vec![one.clone(), one.clone()];
        assert!(sylvester_resultant(&f, &g).is_one());
    }
}
