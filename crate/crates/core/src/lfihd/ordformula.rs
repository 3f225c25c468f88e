use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::funcfield::{binomial_in_field, multinomial_bigint, Fe};

/// Compositions of `total` into `parts` nonnegative summands.
fn compositions(total: u64, parts: usize) -> Vec<Vec<u64>> {
    if parts == 0 {
        return if total == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    for k in 0..=total {
        for mut rest in compositions(total - k, parts - 1) {
            rest.insert(0, k);
            out.push(rest);
        }
    }
    out
}

/// Coefficient of `t^{ℓ-i} x^{i q_1}` in `(t + Σ_j λ_j x^{q_j})^ℓ`, summed over
/// the multinomial expansion.
pub fn multinomial_oracle(steps: &[(u64, Fe)], i: u64, ell: u64) -> Fe {
    let field = steps[0].1.field();
    let target = i * steps[0].0;
    let mut acc = field.zero();
    if i > ell {
        return acc;
    }
    for ks in compositions(i, steps.len()) {
        let weight: u64 = ks.iter().zip(steps).map(|(k, (q, _))| k * q).sum();
        if weight != target {
            continue;
        }
        let mut all = vec![ell - i];
        all.extend(&ks);
        let mut term = field.from_bigint(&BigInt::from(multinomial_bigint(&all)));
        for (k, (_, l)) in ks.iter().zip(steps) {
            term = &term * &l.pow(*k);
        }
        acc = &acc + &term;
    }
    acc
}

/// `λ_1^i C(ℓ, i)`, the `t^{ℓ-i}` part of `∂^{(i p^{s_1})}(t^ℓ)` for
/// `e^{x∂}(t) = t + Σ λ_j x^{p^{s_j}}`, checked against [`multinomial_oracle`].
pub fn ord_formula_check(steps: &[(u32, Fe)], i: u64, ell: u64) -> Result<Fe> {
    let Some((s1, l1)) = steps.first() else {
        return Err(Error::InvalidSpec("at least one step is required".into()));
    };
    let field = l1.field();
    let base = field.exponent_base();
    let q: Vec<(u64, Fe)> = steps.iter().map(|(s, l)| (base.pow(*s), l.clone())).collect();
    if ell < i * q[0].0 {
        return Err(Error::Precondition(format!("l = {ell} is smaller than i p^s1 = {}", i * q[0].0)));
    }
    if steps.windows(2).any(|w| w[0].0 >= w[1].0) {
        return Err(Error::InvalidSpec("the s_i must be strictly increasing".into()));
    }
    let formula = &l1.pow(i) * &binomial_in_field(ell, i, field);
    let oracle = multinomial_oracle(&q, i, ell);
    if formula != oracle {
        return Err(Error::OracleMismatch(format!(
            "steps starting at s1 = {s1}, i = {i}, l = {ell}: formula {formula}, expansion {oracle}"
        )));
    }
    Ok(formula)
}
