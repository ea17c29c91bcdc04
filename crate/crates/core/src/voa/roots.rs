//! Root systems of simple Lie algebras, the highest-weight dimension `N_k`
//! and its degree in `k`.

use crate::error::{Error, Result};
use crate::exactalg::{q, qf, Rational};
use num_traits::{One, ToPrimitive, Zero};
use serde::Serialize;
use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum RootType {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl FromStr for RootType {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Ok(match s.trim().to_ascii_uppercase().as_str() {
            "A" => RootType::A,
            "B" => RootType::B,
            "C" => RootType::C,
            "D" => RootType::D,
            "E" => RootType::E,
            "F" => RootType::F,
            "G" => RootType::G,
            other => return Err(Error::Unsupported(other.to_string())),
        })
    }
}

impl fmt::Display for RootType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

/// Simple roots in orthonormal `ε`-coordinates, before normalisation.
fn simple_roots(t: RootType, l: usize) -> Result<Vec<Vec<Rational>>> {
    let unsupported = || Err(Error::Unsupported(format!("{t}{l}")));
    let e = |dim: usize, coeffs: &[(usize, Rational)]| {
        let mut v = vec![Rational::zero(); dim];
        for (i, c) in coeffs {
            v[*i] += c;
        }
        v
    };
    let chain = |dim: usize, count: usize| -> Vec<Vec<Rational>> {
        (0..count).map(|i| e(dim, &[(i, q(1)), (i + 1, q(-1))])).collect()
    };
    Ok(match t {
        RootType::A if l >= 1 => chain(l + 1, l),
        RootType::B if l >= 2 => {
            let mut r = chain(l, l - 1);
            r.push(e(l, &[(l - 1, q(1))]));
            r
        }
        RootType::C if l >= 2 => {
            let mut r = chain(l, l - 1);
            r.push(e(l, &[(l - 1, q(2))]));
            r
        }
        RootType::D if l >= 3 => {
            let mut r = chain(l, l - 1);
            r.push(e(l, &[(l - 2, q(1)), (l - 1, q(1))]));
            r
        }
        RootType::E if (6..=8).contains(&l) => {
            let h = qf(1, 2);
            let mut a1 = vec![-h.clone(); 8];
            a1[0] = h.clone();
            a1[7] = h;
            let mut r = vec![a1, e(8, &[(0, q(1)), (1, q(1))])];
            for i in 0..6 {
                r.push(e(8, &[(i + 1, q(1)), (i, q(-1))]));
            }
            r.truncate(l);
            r
        }
        RootType::F if l == 4 => {
            let h = qf(1, 2);
            vec![
                e(4, &[(1, q(1)), (2, q(-1))]),
                e(4, &[(2, q(1)), (3, q(-1))]),
                e(4, &[(3, q(1))]),
                vec![h.clone(), -h.clone(), -h.clone(), -h],
            ]
        }
        RootType::G if l == 2 => vec![e(3, &[(0, q(1)), (1, q(-1))]), e(3, &[(0, q(-2)), (1, q(1)), (2, q(1))])],
        _ => return unsupported(),
    })
}

/// Root system with roots in simple-root coordinates.
#[derive(Clone, Debug, Serialize)]
pub struct RootSystem {
    pub root_type: RootType,
    pub rank: usize,
    /// Gram matrix of the simple roots; long roots have `(α, α) = 2`.
    #[serde(skip)]
    pub gram: Vec<Vec<Rational>>,
    pub positive_roots: Vec<Vec<i64>>,
    pub theta: Vec<i64>,
    pub dual_coxeter: i64,
}

impl RootSystem {
    pub fn new(root_type: RootType, rank: usize) -> Result<Self> {
        let simple = simple_roots(root_type, rank)?;
        let dot = |a: &[Rational], b: &[Rational]| a.iter().zip(b).fold(Rational::zero(), |s, (x, y)| s + x * y);
        let mut gram: Vec<Vec<Rational>> = simple.iter().map(|a| simple.iter().map(|b| dot(a, b)).collect()).collect();
        let long = (0..rank).map(|i| gram[i][i].clone()).max().expect("rank >= 1");
        let scale = q(2) / long;
        for row in gram.iter_mut() {
            for x in row.iter_mut() {
                *x *= &scale;
            }
        }
        let mut rs = RootSystem { root_type, rank, gram, positive_roots: Vec::new(), theta: Vec::new(), dual_coxeter: 0 };
        rs.positive_roots = rs.generate_positive_roots();
        rs.theta = rs.positive_roots.last().expect("non-empty").clone();
        let h = rs.rho_pair(&rs.theta) + Rational::one();
        rs.dual_coxeter = h.to_integer().to_i64().expect("small");
        if rs.inner(&rs.theta, &rs.theta) != q(2) {
            return Err(Error::Internal("highest root is not long".into()));
        }
        Ok(rs)
    }

    /// `⟨β, α_i^∨⟩ = 2(β, α_i)/(α_i, α_i)`.
    fn pairing(&self, beta: &[i64], i: usize) -> i64 {
        let mut e = vec![0; self.rank];
        e[i] = 1;
        let v = q(2) * self.inner(beta, &e) / &self.gram[i][i];
        v.to_integer().to_i64().expect("integral pairing")
    }

    /// Positive roots sorted by height, via simple root strings.
    fn generate_positive_roots(&self) -> Vec<Vec<i64>> {
        let n = self.rank;
        let mut all: Vec<Vec<i64>> = (0..n)
            .map(|i| {
                let mut v = vec![0; n];
                v[i] = 1;
                v
            })
            .collect();
        let mut known: HashSet<Vec<i64>> = all.iter().cloned().collect();
        let mut layer = all.clone();
        while !layer.is_empty() {
            let mut next = Vec::new();
            for beta in &layer {
                for i in 0..n {
                    let mut p = 0;
                    let mut down = beta.clone();
                    loop {
                        down[i] -= 1;
                        if known.contains(&down) {
                            p += 1;
                        } else {
                            break;
                        }
                    }
                    let qv = p - self.pairing(beta, i);
                    if qv > 0 {
                        let mut up = beta.clone();
                        up[i] += 1;
                        if known.insert(up.clone()) {
                            next.push(up);
                        }
                    }
                }
            }
            next.sort();
            all.extend(next.iter().cloned());
            layer = next;
        }
        all.sort_by_key(|r| (r.iter().sum::<i64>(), r.clone()));
        all
    }

    pub fn inner(&self, a: &[i64], b: &[i64]) -> Rational {
        let mut s = Rational::zero();
        for i in 0..self.rank {
            for j in 0..self.rank {
                if a[i] != 0 && b[j] != 0 {
                    s += &self.gram[i][j] * q(a[i] * b[j]);
                }
            }
        }
        s
    }

    /// `(ρ, α) = Σ n_i (α_i, α_i)/2`.
    pub fn rho_pair(&self, a: &[i64]) -> Rational {
        (0..self.rank).fold(Rational::zero(), |s, i| s + q(a[i]) * &self.gram[i][i] / q(2))
    }

    pub fn dim(&self) -> usize {
        self.rank + 2 * self.positive_roots.len()
    }

    pub fn cartan_integer(&self, i: usize, j: usize) -> i64 {
        let mut e = vec![0; self.rank];
        e[i] = 1;
        self.pairing(&e, j)
    }

    /// `Π_{α>0} ((k+1)(θ,α)/(ρ,α) + 1)`.
    pub fn weyl_nk(&self, k: u64) -> Rational {
        let k1 = q(k as i64 + 1);
        self.positive_roots
            .iter()
            .map(|a| &k1 * self.inner(&self.theta, a) / self.rho_pair(a) + Rational::one())
            .fold(Rational::one(), |p, x| p * x)
    }

    /// Coefficients (constant term first) of `N_k` as a polynomial in `k`.
    pub fn nk_polynomial(&self) -> Vec<Rational> {
        let mut poly = vec![Rational::one()];
        for a in &self.positive_roots {
            let c = self.inner(&self.theta, a) / self.rho_pair(a);
            if c.is_zero() {
                continue;
            }
            // c (k + 1) + 1 = c k + (c + 1)
            let lin = [&c + Rational::one(), c];
            let mut next = vec![Rational::zero(); poly.len() + 1];
            for (i, p) in poly.iter().enumerate() {
                next[i] += p * &lin[0];
                next[i + 1] += p * &lin[1];
            }
            poly = next;
        }
        poly
    }

    /// `#{α > 0 : (θ, α) > 0}`, cross-checked against the classical table and `2h∨ − 3`.
    pub fn nk_degree(&self) -> Result<usize> {
        let count = self.positive_roots.iter().filter(|a| self.inner(&self.theta, a) > Rational::zero()).count();
        let table = nk_degree_table(self.root_type, self.rank);
        let from_h = 2 * self.dual_coxeter - 3;
        if count as i64 != table || table != from_h {
            return Err(Error::Internal(format!(
                "{}{}: degree {count}, table {table}, 2h∨-3 = {from_h}",
                self.root_type, self.rank
            )));
        }
        Ok(count)
    }
}

/// Classical degrees of `N_k` in `k`.
pub fn nk_degree_table(t: RootType, l: usize) -> i64 {
    let l = l as i64;
    match t {
        RootType::A => 2 * l - 1,
        RootType::B => 4 * l - 5,
        RootType::C => 2 * l - 1,
        RootType::D => 4 * l - 7,
        RootType::E => match l {
            6 => 21,
            7 => 33,
            _ => 57,
        },
        RootType::F => 15,
        RootType::G => 5,
    }
}

pub fn dual_coxeter_table(t: RootType, l: usize) -> i64 {
    let l = l as i64;
    match t {
        RootType::A => l + 1,
        RootType::B => 2 * l - 1,
        RootType::C => l + 1,
        RootType::D => 2 * l - 2,
        RootType::E => match l {
            6 => 12,
            7 => 18,
            _ => 30,
        },
        RootType::F => 9,
        RootType::G => 4,
    }
}

/// `N_k` numerically and symbolically.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WeylNk {
    pub value: Option<String>,
    pub polynomial: Vec<String>,
    pub text: String,
}

pub fn weyl_nk(rs: &RootSystem, k: Option<u64>) -> WeylNk {
    let poly = rs.nk_polynomial();
    let mut text = String::new();
    for (i, c) in poly.iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let neg = c < &Rational::zero();
        let a = if neg { -c.clone() } else { c.clone() };
        if text.is_empty() {
            if neg {
                text.push('-');
            }
        } else {
            text.push_str(if neg { " - " } else { " + " });
        }
        let mon = match i {
            0 => String::new(),
            1 => "k".into(),
            _ => format!("k^{i}"),
        };
        if mon.is_empty() {
            text.push_str(&a.to_string());
        } else if a.is_one() {
            text.push_str(&mon);
        } else {
            text.push_str(&format!("{a}*{mon}"));
        }
    }
    WeylNk {
        value: k.map(|k| rs.weyl_nk(k).to_string()),
        polynomial: poly.iter().map(|c| c.to_string()).collect(),
        text,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rs(t: RootType, l: usize) -> RootSystem {
        RootSystem::new(t, l).unwrap()
    }

    #[test]
    fn classical_root_counts() {
        let cases = [
            (RootType::A, 3, 6),
            (RootType::B, 3, 9),
            (RootType::C, 3, 9),
            (RootType::D, 4, 12),
            (RootType::E, 6, 36),
            (RootType::E, 7, 63),
            (RootType::E, 8, 120),
            (RootType::F, 4, 24),
            (RootType::G, 2, 6),
        ];
        for (t, l, n) in cases {
            let r = rs(t, l);
            assert_eq!(r.positive_roots.len(), n, "{t}{l}");
            assert_eq!(r.dual_coxeter, dual_coxeter_table(t, l), "{t}{l}");
        }
    }

    #[test]
    fn nk_values() {
        let a1 = rs(RootType::A, 1);
        assert_eq!(a1.weyl_nk(2), q(7));
        assert_eq!(weyl_nk(&a1, None).text, "2*k + 3");
        let a2 = rs(RootType::A, 2);
        assert_eq!(a2.weyl_nk(1), q(27));
        // (k+2)^3
        assert_eq!(a2.nk_polynomial(), vec![q(8), q(12), q(6), q(1)]);
        assert_eq!(rs(RootType::G, 2).weyl_nk(0), q(14));
        assert_eq!(rs(RootType::B, 2).weyl_nk(0), q(10));
    }

    #[test]
    fn printed_rank_two_factorizations() {
        // B2: (2(k+1)+1)(k+2)(2/3(k+1)+1);
        // G2: (k+2)(3/4(k+1)+1)(3/5(k+1)+1)(1/2(k+1)+1)(2/3(k+1)+1).
        // Agreement at six points pins down polynomials of degree <= 5.
        let (b2, g2) = (rs(RootType::B, 2), rs(RootType::G, 2));
        let lin = |c: Rational, k: &Rational| c * (k + q(1)) + q(1);
        for k in 0..6u64 {
            let kk = q(k as i64);
            let b = lin(q(2), &kk) * (&kk + q(2)) * lin(qf(2, 3), &kk);
            assert_eq!(b2.weyl_nk(k), b, "B2 at k = {k}");
            let g = (&kk + q(2)) * lin(qf(3, 4), &kk) * lin(qf(3, 5), &kk) * lin(qf(1, 2), &kk) * lin(qf(2, 3), &kk);
            assert_eq!(g2.weyl_nk(k), g, "G2 at k = {k}");
        }
        assert_eq!(b2.nk_degree().unwrap(), 3);
        assert_eq!(g2.nk_degree().unwrap(), 5);
    }

    #[test]
    fn cartan_integers_g2() {
        let g = rs(RootType::G, 2);
        assert_eq!(g.cartan_integer(0, 1), -1);
        assert_eq!(g.cartan_integer(1, 0), -3);
        assert_eq!(g.theta, vec![3, 2]);
    }

    #[test]
    fn unsupported_ranks() {
        assert!(RootSystem::new(RootType::E, 5).is_err());
        assert!(RootSystem::new(RootType::G, 3).is_err());
        assert!(RootSystem::new(RootType::A, 0).is_err());
    }
}
