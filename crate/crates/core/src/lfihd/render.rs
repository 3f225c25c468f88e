use crate::convexlat::linalg::rref;
use crate::convexlat::{qi, Q};
use crate::funcfield::Fe;
use crate::graded::GradedElement;

use super::series::ExpSeries;

const FREE_LIMIT: i64 = 64;

/// Renders elements and exponentials in terms of named generators, e.g.
/// `y + α^64 x^11 z^4` for `x = t^{-1}χ^5`, `z = χ`.
#[derive(Clone, Debug, Default)]
pub struct Renderer {
    names: Vec<(String, GradedElement)>,
}

/// `c·t^j·χ^m` of a named monomial generator.
struct Mono {
    coeff: Fe,
    exps: Vec<i64>,
}

impl Renderer {
    pub fn new(names: Vec<(String, GradedElement)>) -> Renderer {
        Renderer { names }
    }

    fn monos(&self) -> Vec<(usize, Mono)> {
        self.names
            .iter()
            .enumerate()
            .filter_map(|(k, (_, g))| {
                let m = g.homogeneous_degree()?;
                let (c, j) = g.terms()[m].as_laurent_monomial()?;
                let mut exps = vec![j];
                exps.extend(m.coords());
                Some((k, Mono { coeff: c, exps }))
            })
            .collect()
    }

    /// Nonnegative exponents `n_k` with `Π g_k^{n_k} = c t^j χ^m` up to a scalar.
    fn solve(&self, target: &[i64]) -> Option<(Vec<(usize, i64)>, Fe)> {
        let monos = self.monos();
        if monos.is_empty() {
            return None;
        }
        let rows = target.len();
        let cols = monos.len();
        let matrix = |extra: &[i64]| -> Vec<Vec<Q>> {
            (0..rows)
                .map(|r| {
                    let mut row: Vec<Q> = monos.iter().map(|(_, mo)| qi(mo.exps[r])).collect();
                    row.push(qi(extra[r]));
                    row
                })
                .collect()
        };
        let (red, pivots) = rref(&matrix(target), cols + 1);
        if pivots.contains(&cols) {
            return None;
        }
        let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
        let total = (FREE_LIMIT + 1).checked_pow(free.len() as u32)?;
        if total > 200_000 {
            return None;
        }
        'outer: for idx in 0..total {
            let mut vals = vec![qi(0); cols];
            let mut rest = idx;
            for &f in &free {
                vals[f] = qi(rest % (FREE_LIMIT + 1));
                rest /= FREE_LIMIT + 1;
            }
            for (r, &p) in pivots.iter().enumerate() {
                let mut x = red[r][cols].clone();
                for &f in &free {
                    x -= &red[r][f] * &vals[f];
                }
                if !x.is_integer() || x < qi(0) {
                    continue 'outer;
                }
                vals[p] = x;
            }
            let ns: Vec<(usize, i64)> = monos
                .iter()
                .zip(&vals)
                .map(|((k, _), v)| (*k, num_traits::ToPrimitive::to_i64(&v.to_integer()).expect("small")))
                .collect();
            let mut c = monos[0].1.coeff.field().one();
            for ((_, mo), (_, n)) in monos.iter().zip(&ns) {
                c = &c * &mo.coeff.pow(*n as u64);
            }
            return Some((ns, c));
        }
        None
    }

    fn word(&self, ns: &[(usize, i64)]) -> String {
        let parts: Vec<String> = ns
            .iter()
            .filter(|(_, n)| *n > 0)
            .map(|(k, n)| if *n == 1 { self.names[*k].0.clone() } else { format!("{}^{n}", self.names[*k].0) })
            .collect();
        parts.join(" ")
    }

    /// Terms of `a` as `(scalar, word)` pairs.
    fn terms(&self, a: &GradedElement) -> Vec<(Fe, String)> {
        if let Some((name, _)) = self.names.iter().find(|(_, g)| g == a) {
            return vec![(a.field().one(), name.clone())];
        }
        let mut out = Vec::new();
        for (m, f) in a.terms() {
            let mono = (a.cover() == 1).then(|| f.as_laurent_monomial()).flatten();
            let solved = mono.as_ref().and_then(|(c, j)| {
                let mut target = vec![*j];
                target.extend(m.coords());
                self.solve(&target).map(|(ns, g)| (c / &g, self.word(&ns)))
            });
            match solved {
                Some((c, w)) if !w.is_empty() => out.push((c, w)),
                Some((c, _)) => out.push((c, "1".into())),
                None => {
                    let g = GradedElement::monomial(f.clone(), m.clone()).with_cover(a.cover());
                    out.push((a.field().one(), g.to_string()));
                }
            }
        }
        out
    }

    /// `a` in terms of the generators.
    pub fn element(&self, a: &GradedElement) -> String {
        if a.is_zero() {
            return "0".into();
        }
        join(self.terms(a).into_iter().map(|(c, w)| (c, String::new(), w)).collect())
    }

    /// `e^{α∂}(a)` written as a polynomial in the formal variable `alpha`.
    pub fn series(&self, s: &ExpSeries, alpha: &str) -> String {
        let mut parts = Vec::new();
        for (i, c) in s.nonzero() {
            let a = match *i {
                0 => String::new(),
                1 => alpha.to_string(),
                i => format!("{alpha}^{i}"),
            };
            for (k, w) in self.terms(c) {
                parts.push((k, a.clone(), w));
            }
        }
        let mut out = if parts.is_empty() { "0".into() } else { join(parts) };
        if !s.is_complete() {
            out.push_str(&format!(" + O({alpha}^{})", s.order() + 1));
        }
        out
    }
}

fn join(parts: Vec<(Fe, String, String)>) -> String {
    let mut out = String::new();
    for (n, (c, a, w)) in parts.into_iter().enumerate() {
        let neg = c.is_negative();
        let c = if neg { -c } else { c };
        let mut body: Vec<String> = Vec::new();
        if !c.is_one() {
            body.push(c.to_string());
        }
        if !a.is_empty() {
            body.push(a);
        }
        if w != "1" || body.is_empty() {
            body.push(w);
        }
        let body = body.join(" ");
        match (n, neg) {
            (0, false) => out.push_str(&body),
            (0, true) => out.push_str(&format!("-{body}")),
            (_, false) => out.push_str(&format!(" + {body}")),
            (_, true) => out.push_str(&format!(" - {body}")),
        }
    }
    out
}
