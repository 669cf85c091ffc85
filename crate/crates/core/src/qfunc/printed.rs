//! Tabulated closed forms of `Q`, transcribed term by term so they can be
//! compared structurally against the generated forms.

use num_traits::One;

use super::{PPoly, QForm};
use crate::exact::Ring;

fn pp(c: &[i64]) -> PPoly {
    PPoly::from_i64s(c)
}

/// Builds `sum_j coeffs[j] var^j` from coefficient lists in `p` (ascending).
fn form(coeffs: &[&[i64]]) -> QForm {
    QForm::new(coeffs.iter().map(|c| pp(c)).collect())
}

/// `Q(n)` for `n = 0..=4` as tabulated, in `t = 1/(1+y)`.
pub fn printed_q_row(n: u32) -> Option<QForm> {
    Some(match n {
        0 => form(&[&[], &[1]]),
        1 => form(&[&[], &[0, 1], &[0, -1]]),
        2 => form(&[&[], &[0, 1, 1], &[0, -1, -3], &[0, 0, 2]]),
        3 => form(&[
            &[],
            &[0, 2, 3, 1],
            &[0, -2, -9, -7],
            &[0, 0, 6, 12],
            &[0, 0, 0, -6],
        ]),
        4 => form(&[
            &[],
            &[0, 6, 11, 6, 1],
            &[0, -6, -33, -42, -15],
            &[0, 0, 22, 72, 50],
            &[0, 0, 0, -36, -60],
            &[0, 0, 0, 0, 24],
        ]),
        _ => return None,
    })
}

/// The z-forms for `n = 1..=5`, in `z = 1+y` over `Q[p]`.
///
/// The cubic in the `n = 4` and `n = 5` rows is `z^3 - 14z^2 + 36z - 24`;
/// the tabulated `-14z` is a typo (the generated forms disagree with it).
pub fn printed_zform_row(n: u32) -> Option<QForm> {
    let z = QForm::x();
    let p = QForm::constant(PPoly::x());
    let c = |v: i64| QForm::from_i64(v);
    let zp = |e: u32| z.pow(e);
    let lin = z.clone() - c(2);
    let quad = zp(2) - z.scale(&PPoly::from_i64(6)) + c(6);
    let cubic = zp(3) - zp(2).scale(&PPoly::from_i64(14)) + z.scale(&PPoly::from_i64(36)) - c(24);
    let quartic = zp(4) - zp(3).scale(&PPoly::from_i64(30)) + zp(2).scale(&PPoly::from_i64(150))
        - z.scale(&PPoly::from_i64(240))
        + c(120);
    Some(match n {
        1 => QForm::one(),
        2 => z.clone() + p.clone() * lin,
        3 => c(2) * zp(2) + c(3) * p.clone() * z.clone() * lin + p.pow(2) * quad,
        4 => {
            c(6) * zp(3)
                + c(11) * p.clone() * zp(2) * lin
                + c(6) * p.pow(2) * z.clone() * quad
                + p.pow(3) * cubic
        }
        5 => {
            c(24) * zp(4)
                + c(50) * p.clone() * zp(3) * lin
                + c(35) * p.pow(2) * zp(2) * quad
                + c(10) * p.pow(3) * z.clone() * cubic
                + p.pow(4) * quartic
        }
        _ => return None,
    })
}
