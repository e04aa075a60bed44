use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::poly::{Coeff, Poly, Var};

use super::{GeneralIdealSpec, IdealError, IdealSpec};

fn require_polynomial(p: &Poly) -> Result<(), IdealError> {
    if p.is_polynomial() {
        Ok(())
    } else {
        Err(IdealError::Laurent)
    }
}

/// Monomialwise test for `(a,b)^d1 ∩ (c,d)^d2`.
pub fn member_m(p: &Poly, spec: IdealSpec) -> Result<bool, IdealError> {
    require_polynomial(p)?;
    let (d1, d2) = (spec.d1 as i32, spec.d2 as i32);
    Ok(p.terms().all(|(m, _)| {
        m.exp(Var::A) + m.exp(Var::B) >= d1 && m.exp(Var::C) + m.exp(Var::D) >= d2
    }))
}

fn linear_coefficients(form: &Poly) -> Result<BTreeMap<Var, Coeff>, IdealError> {
    let mut out = BTreeMap::new();
    for (m, c) in form.terms() {
        let mut it = m.iter();
        match (it.next(), it.next()) {
            (Some((v, 1)), None) => {
                out.insert(v, c.clone());
            }
            _ => return Err(IdealError::NotLinear(form.to_string())),
        }
    }
    Ok(out)
}

/// Test `p ∈ (l1, l2)^k` for independent linear forms.
///
/// Solves `l1 = u`, `l2 = v` for two of the variables, substitutes, and
/// checks that every monomial has combined `(u, v)`-degree at least `k`.
/// In the coordinates `(u, v, rest)` the ideal is monomial, so the test is
/// exact.
pub fn member_linear_power(p: &Poly, l1: &Poly, l2: &Poly, k: u32) -> Result<bool, IdealError> {
    require_polynomial(p)?;
    let c = linear_coefficients(l1)?;
    let e = linear_coefficients(l2)?;
    for clash in [Var::U, Var::V] {
        if p.variables().contains(&clash) || c.contains_key(&clash) || e.contains_key(&clash) {
            return Err(IdealError::VariableClash(clash));
        }
    }
    let (&xp, cp) = c.iter().next().ok_or(IdealError::DependentForms)?;
    let ep = e.get(&xp).cloned().unwrap_or_else(Coeff::zero);
    let ratio = &ep / cp;
    // l2 rewritten in (u, x_i for i != p): ratio*u + sum f_i x_i
    let mut f: BTreeMap<Var, Coeff> = BTreeMap::new();
    for v in c.keys().chain(e.keys()) {
        if *v == xp {
            continue;
        }
        let ci = c.get(v).cloned().unwrap_or_else(Coeff::zero);
        let ei = e.get(v).cloned().unwrap_or_else(Coeff::zero);
        let fi = ei - &ratio * ci;
        if !fi.is_zero() {
            f.insert(*v, fi);
        }
    }
    let (&xr, fr) = f.iter().next().ok_or(IdealError::DependentForms)?;
    if k == 0 {
        return Ok(true);
    }
    let u = Poly::var(Var::U);
    let v = Poly::var(Var::V);
    let mut xr_image = &v - &u.scale(&ratio);
    for (w, fw) in &f {
        if *w != xr {
            xr_image -= &Poly::var(*w).scale(fw);
        }
    }
    let xr_image = xr_image.scale(&(Coeff::one() / fr));
    let cr = c.get(&xr).cloned().unwrap_or_else(Coeff::zero);
    let mut xp_image = &u - &xr_image.scale(&cr);
    for (w, cw) in &c {
        if *w != xp && *w != xr {
            xp_image -= &Poly::var(*w).scale(cw);
        }
    }
    let xp_image = xp_image.scale(&(Coeff::one() / cp));
    let map = BTreeMap::from([(xp, xp_image), (xr, xr_image)]);
    let rewritten = p.substitute(&map);
    let k = k as i32;
    let ok = rewritten.terms().all(|(m, _)| m.exp(Var::U) + m.exp(Var::V) >= k);
    Ok(ok)
}

fn diff(x: Var, y: Var) -> Poly {
    &Poly::var(x) - &Poly::var(y)
}

/// Membership in `J(d1, d2)`.
pub fn member_j(p: &Poly, spec: IdealSpec) -> Result<bool, IdealError> {
    if !member_m(p, spec)? {
        return Ok(false);
    }
    member_linear_power(p, &diff(Var::A, Var::C), &diff(Var::B, Var::D), spec.d1)
}

/// Membership in `∩_{i<j} (t_i - t_j, x_i - x_j)^{d_ij}` over `t_i, x_i`.
pub fn member_j_general(p: &Poly, gspec: &GeneralIdealSpec) -> Result<bool, IdealError> {
    require_polynomial(p)?;
    for (i, j, k) in gspec.pairs() {
        let (ti, tj) = (Var::Tn(i as u8 + 1), Var::Tn(j as u8 + 1));
        let (xi, xj) = (Var::Xn(i as u8 + 1), Var::Xn(j as u8 + 1));
        if !member_linear_power(p, &diff(ti, tj), &diff(xi, xj), k)? {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(x: Var) -> Poly {
        Poly::var(x)
    }

    fn det() -> Poly {
        &(&v(Var::A) * &v(Var::D)) - &(&v(Var::B) * &v(Var::C))
    }

    #[test]
    fn monomial_part() {
        let s = IdealSpec::new(1, 1).unwrap();
        let a2b = v(Var::A).pow(2) * v(Var::B);
        assert!(member_m(&a2b, IdealSpec { d1: 3, d2: 0 }).unwrap());
        assert!(member_m(&det(), s).unwrap());
        assert!(!member_m(&(&v(Var::A) + &v(Var::C)), s).unwrap());
        let laurent = Poly::mono(crate::poly::Mono::from_pairs([(Var::A, -1)]));
        assert_eq!(member_m(&laurent, s), Err(IdealError::Laurent));
    }

    #[test]
    fn linear_power() {
        let l1 = diff(Var::A, Var::C);
        let l2 = diff(Var::B, Var::D);
        assert!(member_linear_power(&l1, &l1, &l2, 1).unwrap());
        assert!(member_linear_power(&det(), &l1, &l2, 1).unwrap());
        assert!(!member_linear_power(&v(Var::B), &l1, &l2, 1).unwrap());
        assert!(!member_linear_power(&det(), &l1, &l2, 2).unwrap());
        assert_eq!(
            member_linear_power(&det(), &l1, &l1.scale(&crate::poly::int(2)), 1),
            Err(IdealError::DependentForms)
        );
    }

    #[test]
    fn linear_power_with_general_forms() {
        // (a + 2b, c - b)^2 contains (a + 2b)(c - b) but not a + 2b
        let l1 = &v(Var::A) + &v(Var::B).scale(&crate::poly::int(2));
        let l2 = diff(Var::C, Var::B);
        assert!(member_linear_power(&(&l1 * &l2), &l1, &l2, 2).unwrap());
        assert!(!member_linear_power(&l1, &l1, &l2, 2).unwrap());
    }

    #[test]
    fn ideal_membership() {
        let s = IdealSpec::new(1, 1).unwrap();
        let (a, c) = (v(Var::A), v(Var::C));
        let ac = &a * &c;
        assert!(member_j(&det(), s).unwrap());
        assert!(member_j(&(&ac * &(&a - &c)), s).unwrap());
        assert!(!member_j(&ac, s).unwrap());
    }
}
