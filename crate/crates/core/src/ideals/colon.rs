use super::GradedIdeal;
use crate::error::{Error, Result};
use crate::polycore::{monomial_basis, rank, Polynomial, Rational, SparseMatrix, Subspace};

/// Matrix of `g -> class of g f` from `R_d` to `(R/I)_{d+e}`, one row per dual
/// basis vector of the target.
fn multiplication_by(ideal: &GradedIdeal, f: &Polynomial, d: u32) -> Result<SparseMatrix> {
    if f.nvars() != ideal.nvars() {
        return Err(Error::NvarsMismatch {
            left: ideal.nvars(),
            right: f.nvars(),
        });
    }
    let e = f.homogeneous_degree()?.ok_or(Error::Inhomogeneous)?;
    let source = monomial_basis(ideal.nvars(), d);
    let target = ideal.quotient_piece(d + e);
    let images: Vec<Vec<(usize, Rational)>> = source
        .iter()
        .map(|mu| {
            f.mul_monomial(mu)
                .terms()
                .map(|(m, c)| (m.index(), c.clone()))
                .collect()
        })
        .collect();
    let mut m = SparseMatrix::new(source.len());
    for w in target.dual_basis() {
        m.push(
            images
                .iter()
                .enumerate()
                .map(|(j, img)| (j, img.iter().map(|(i, c)| c * &w[*i]).sum()))
                .collect(),
        );
    }
    Ok(m)
}

/// `(I : f)_d = { g in R_d : g f in I }`.
pub fn colon_graded(ideal: &GradedIdeal, f: &Polynomial, d: u32) -> Result<Subspace> {
    Ok(Subspace::kernel_of(&multiplication_by(ideal, f, d)?))
}

/// `dim (R / (I : f))_d`, the rank of multiplication by `f` into `R/I`.
pub fn colon_hilbert_function(ideal: &GradedIdeal, f: &Polynomial, d: u32) -> Result<usize> {
    Ok(rank(&multiplication_by(ideal, f, d)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polycore::linear_form_power_int;

    #[test]
    fn colon_by_one_is_the_piece() {
        let i = GradedIdeal::new(
            3,
            vec![
                linear_form_power_int(&[1, 1, 0], 2),
                linear_form_power_int(&[0, 0, 1], 3),
            ],
        )
        .unwrap();
        let one = Polynomial::one(3);
        for d in 0..6 {
            assert_eq!(colon_graded(&i, &one, d).unwrap(), i.graded_piece(d));
        }
    }

    #[test]
    fn colon_of_monomial_ideal() {
        // (x^2 y) : x = (x y)
        let i = GradedIdeal::new(
            2,
            vec![linear_form_power_int(&[1, 0], 2).mul_monomial(&crate::Monomial::var(2, 1))],
        )
        .unwrap();
        let c = colon_graded(&i, &Polynomial::var(2, 0), 2).unwrap();
        assert_eq!(c.dim(), 1);
        assert_eq!(
            colon_hilbert_function(&i, &Polynomial::var(2, 0), 2).unwrap(),
            2
        );
    }
}
