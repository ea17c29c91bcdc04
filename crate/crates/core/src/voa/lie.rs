//! Concrete Chevalley-type bases for small simple Lie algebras, realised by
//! matrices and checked against the root system on construction.

use super::roots::{RootSystem, RootType};
use crate::error::{Error, Result};
use crate::exactalg::{q, LinearSolver, MatrixQ, Rational};
use num_traits::Zero;

type Mat = Vec<Vec<Rational>>;

fn unit(n: usize, entries: &[(usize, usize, i64)]) -> Mat {
    let mut m = vec![vec![Rational::zero(); n]; n];
    for &(i, j, c) in entries {
        m[i - 1][j - 1] += q(c);
    }
    m
}

fn bracket(a: &Mat, b: &Mat) -> Mat {
    let n = a.len();
    let mut out = vec![vec![Rational::zero(); n]; n];
    for i in 0..n {
        for k in 0..n {
            if a[i][k].is_zero() && b[i][k].is_zero() {
                continue;
            }
            for j in 0..n {
                if !a[i][k].is_zero() && !b[k][j].is_zero() {
                    out[i][j] += &a[i][k] * &b[k][j];
                }
                if !b[i][k].is_zero() && !a[k][j].is_zero() {
                    out[i][j] -= &b[i][k] * &a[k][j];
                }
            }
        }
    }
    out
}

fn flatten(m: &Mat) -> Vec<Rational> {
    m.iter().flatten().cloned().collect()
}

/// `(e_i, f_i)` matrices for each simple root, in root-system order.
fn simple_generators(t: RootType, rank: usize) -> Result<Vec<(Mat, Mat)>> {
    Ok(match (t, rank) {
        (RootType::A, 1) => vec![(unit(2, &[(1, 2, 1)]), unit(2, &[(2, 1, 1)]))],
        (RootType::A, 2) => vec![
            (unit(3, &[(1, 2, 1)]), unit(3, &[(2, 1, 1)])),
            (unit(3, &[(2, 3, 1)]), unit(3, &[(3, 2, 1)])),
        ],
        // so(5) preserving the antidiagonal form; α1 long, α2 short.
        (RootType::B, 2) => vec![
            (unit(5, &[(1, 2, 1), (4, 5, -1)]), unit(5, &[(2, 1, 1), (5, 4, -1)])),
            (unit(5, &[(2, 3, 1), (3, 4, -1)]), unit(5, &[(3, 2, 2), (4, 3, -2)])),
        ],
        // 7-dimensional representation; weights 2α1+α2, α1+α2, α1, 0, -α1, -α1-α2, -2α1-α2.
        (RootType::G, 2) => vec![
            (unit(7, &[(1, 2, 1), (3, 4, 2), (4, 5, 1), (6, 7, 1)]), unit(7, &[(2, 1, 1), (4, 3, 1), (5, 4, 2), (7, 6, 1)])),
            (unit(7, &[(2, 3, 1), (5, 6, 1)]), unit(7, &[(3, 2, 1), (6, 5, 1)])),
        ],
        _ => return Err(Error::Unsupported(format!("concrete Lie algebra {t}{rank}"))),
    })
}

/// Basis `e_α (α > 0, by height), h_i, f_α (α > 0, by height)` with structure constants.
#[derive(Clone, Debug)]
pub struct LieAlgebraBasis {
    pub root_system: RootSystem,
    pub names: Vec<String>,
    /// `brackets[a][b]` = coordinates of `[x_a, x_b]`.
    pub brackets: Vec<Vec<Vec<Rational>>>,
    pub e_theta: usize,
    /// Indices of `f_{α_i}`.
    pub lowering: Vec<usize>,
    /// Indices of `e_{α_i}`.
    pub raising: Vec<usize>,
}

impl LieAlgebraBasis {
    pub fn new(t: RootType, rank: usize) -> Result<Self> {
        let rs = RootSystem::new(t, rank)?;
        let gens = simple_generators(t, rank)?;
        let roots = rs.positive_roots.clone();
        let index_of = |r: &[i64]| roots.iter().position(|x| x == r);
        let mut es: Vec<Mat> = Vec::new();
        let mut fs: Vec<Mat> = Vec::new();
        for (k, root) in roots.iter().enumerate() {
            if let Some(i) = (0..rank).find(|&i| root[i] == 1 && root.iter().sum::<i64>() == 1) {
                es.push(gens[i].0.clone());
                fs.push(gens[i].1.clone());
                continue;
            }
            let (i, prev) = (0..rank)
                .find_map(|i| {
                    let mut r = root.clone();
                    r[i] -= 1;
                    index_of(&r).filter(|&p| p < k).map(|p| (i, p))
                })
                .ok_or_else(|| Error::Internal("root without predecessor".into()))?;
            es.push(bracket(&gens[i].0, &es[prev]));
            fs.push(bracket(&gens[i].1, &fs[prev]));
        }
        let hs: Vec<Mat> = gens.iter().map(|(e, f)| bracket(e, f)).collect();
        let mut mats: Vec<Mat> = es.clone();
        mats.extend(hs);
        mats.extend(fs);
        let digits = |r: &[i64]| r.iter().map(|x| x.to_string()).collect::<String>();
        let names: Vec<String> = if rank == 1 {
            vec!["e".into(), "h".into(), "f".into()]
        } else {
            roots
                .iter()
                .map(|r| format!("e{}", digits(r)))
                .chain((1..=rank).map(|i| format!("h{i}")))
                .chain(roots.iter().map(|r| format!("f{}", digits(r))))
                .collect()
        };
        let n = mats.len();
        if n != rs.dim() {
            return Err(Error::Internal(format!("basis has {n} elements, expected {}", rs.dim())));
        }
        let flat: Vec<Vec<Rational>> = mats.iter().map(flatten).collect();
        let basis_matrix = MatrixQ::from_columns(flat[0].len(), &flat);
        let solver = LinearSolver::new(&basis_matrix);
        if solver.rank() != n {
            return Err(Error::Internal("matrix basis is linearly dependent".into()));
        }
        let mut brackets = vec![vec![Vec::new(); n]; n];
        for a in 0..n {
            for b in 0..n {
                brackets[a][b] = solver
                    .solve(&flatten(&bracket(&mats[a], &mats[b])))
                    .ok_or_else(|| Error::Internal("matrices do not close under the bracket".into()))?;
            }
        }
        let np = roots.len();
        let lie = LieAlgebraBasis {
            e_theta: np - 1,
            lowering: (0..rank).map(|i| np + rank + index_of(&unit_root(rank, i)).expect("simple")).collect(),
            raising: (0..rank).map(|i| index_of(&unit_root(rank, i)).expect("simple")).collect(),
            root_system: rs,
            names,
            brackets,
        };
        lie.validate()?;
        Ok(lie)
    }

    pub fn dim(&self) -> usize {
        self.names.len()
    }

    /// Antisymmetry, Jacobi, and `[h_i, e_j] = ⟨α_j, α_i^∨⟩ e_j`, `[h_i, f_j] = -⟨α_j, α_i^∨⟩ f_j`.
    pub fn validate(&self) -> Result<()> {
        let n = self.dim();
        for a in 0..n {
            for b in 0..n {
                if self.brackets[a][b].iter().zip(&self.brackets[b][a]).any(|(x, y)| x != &-y) {
                    return Err(Error::Internal(format!("antisymmetry fails for {}, {}", self.names[a], self.names[b])));
                }
            }
        }
        let br = |x: &[Rational], y: &[Rational]| -> Vec<Rational> {
            let mut out = vec![Rational::zero(); n];
            for (a, xa) in x.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
                for (b, yb) in y.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
                    for (c, z) in self.brackets[a][b].iter().enumerate() {
                        if !z.is_zero() {
                            out[c] += xa * yb * z;
                        }
                    }
                }
            }
            out
        };
        let basis = |a: usize| {
            let mut v = vec![Rational::zero(); n];
            v[a] = q(1);
            v
        };
        for a in 0..n {
            for b in a + 1..n {
                for c in b + 1..n {
                    let t1 = br(&basis(a), &self.brackets[b][c]);
                    let t2 = br(&basis(b), &self.brackets[c][a]);
                    let t3 = br(&basis(c), &self.brackets[a][b]);
                    if (0..n).any(|k| !(&t1[k] + &t2[k] + &t3[k]).is_zero()) {
                        return Err(Error::Internal(format!(
                            "Jacobi identity fails for {}, {}, {}",
                            self.names[a], self.names[b], self.names[c]
                        )));
                    }
                }
            }
        }
        let rank = self.root_system.rank;
        let np = self.root_system.positive_roots.len();
        for i in 0..rank {
            let h = np + i;
            for j in 0..rank {
                let c = q(self.root_system.cartan_integer(j, i));
                let (e, f) = (self.raising[j], self.lowering[j]);
                let mut want_e = vec![Rational::zero(); n];
                want_e[e] = c.clone();
                let mut want_f = vec![Rational::zero(); n];
                want_f[f] = -c;
                if self.brackets[h][e] != want_e || self.brackets[h][f] != want_f {
                    return Err(Error::Internal(format!("Cartan integers disagree at ({i}, {j})")));
                }
            }
        }
        Ok(())
    }
}

fn unit_root(rank: usize, i: usize) -> Vec<i64> {
    let mut v = vec![0; rank];
    v[i] = 1;
    v
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn supported_algebras_validate() {
        for (t, l, dim) in [(RootType::A, 1, 3), (RootType::A, 2, 8), (RootType::B, 2, 10), (RootType::G, 2, 14)] {
            let lie = LieAlgebraBasis::new(t, l).unwrap();
            assert_eq!(lie.dim(), dim);
        }
    }

    #[test]
    fn sl2_brackets() {
        let lie = LieAlgebraBasis::new(RootType::A, 1).unwrap();
        assert_eq!(lie.names, ["e", "h", "f"]);
        assert_eq!(lie.brackets[0][2], vec![q(0), q(1), q(0)]);
        assert_eq!(lie.brackets[1][0], vec![q(2), q(0), q(0)]);
        assert_eq!(lie.e_theta, 0);
        assert_eq!(lie.lowering, [2]);
    }

    #[test]
    fn unsupported_concrete_type() {
        assert!(matches!(LieAlgebraBasis::new(RootType::A, 3), Err(Error::Unsupported(_))));
    }
}
