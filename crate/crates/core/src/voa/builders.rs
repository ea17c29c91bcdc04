//! C2-algebras of affine and Virasoro vertex operator algebras, and their
//! tensor products and direct sums.

use super::lie::LieAlgebraBasis;
use super::roots::RootType;
use crate::error::{Error, Result};
use crate::exactalg::{q, IncrementalSpan, Rational};
use crate::gradedquot::GradedQuotient;
use crate::polyring::{Monomial, Polynomial, Ring, RingSpec};
use num_integer::Integer;
use num_traits::Zero;
use serde::Serialize;
use std::collections::{HashMap, VecDeque};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Provenance {
    Affine { root_type: RootType, rank: usize, level: u64 },
    Virasoro { p: u64, q: u64, central_charge: String },
    VirasoroGeneric,
    Tensor { left: Box<Provenance>, right: Box<Provenance>, renamed: Vec<(String, String)> },
    Document { label: String },
}

impl Provenance {
    pub fn describe(&self) -> String {
        match self {
            Provenance::Affine { root_type, rank, level } => format!("affine {root_type}{rank} level {level}"),
            Provenance::Virasoro { p, q, central_charge } => format!("virasoro minimal ({p},{q}) c = {central_charge}"),
            Provenance::VirasoroGeneric => "virasoro generic c".into(),
            Provenance::Tensor { left, right, .. } => format!("({}) ⊗ ({})", left.describe(), right.describe()),
            Provenance::Document { label } => label.clone(),
        }
    }
}

/// `S / (generators)` together with where it came from.
#[derive(Clone, Debug)]
pub struct C2Presentation {
    pub ring: Ring,
    pub generators: Vec<Polynomial>,
    pub provenance: Provenance,
}

impl C2Presentation {
    pub fn quotient(&self, truncation: u32) -> Result<GradedQuotient> {
        GradedQuotient::new(&self.ring, self.generators.clone(), truncation)
    }
}

/// `Sym(g) / ⟨U(g) e_θ^{k+1}⟩`, with the orbit spanned by lowering operators.
pub fn affine_c2(lie: &LieAlgebraBasis, k: u64) -> Result<C2Presentation> {
    let n = lie.dim();
    let ring = RingSpec::new(lie.names.iter().map(|s| (s.clone(), 1)))?;
    let deg = u32::try_from(k + 1).map_err(|_| Error::InvalidBounds("level too large".into()))?;
    let monos = ring.monomials_of_degree(deg);
    let index: HashMap<Monomial, usize> = monos.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
    let ad = |x: usize, v: &[Rational]| -> Vec<Rational> {
        let mut out = vec![Rational::zero(); monos.len()];
        for (mi, c) in v.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            let m = &monos[mi];
            for i in 0..n {
                let e = m.0[i];
                if e == 0 {
                    continue;
                }
                let coeff = c * q(e as i64);
                for (t, s) in lie.brackets[x][i].iter().enumerate().filter(|(_, s)| !s.is_zero()) {
                    let mut w = m.clone();
                    w.0[i] -= 1;
                    w.0[t] += 1;
                    out[index[&w]] += &coeff * s;
                }
            }
        }
        out
    };
    let mut top = vec![0; n];
    top[lie.e_theta] = deg;
    let mut start = vec![Rational::zero(); monos.len()];
    start[index[&Monomial(top)]] = q(1);
    let mut span = IncrementalSpan::new(monos.len());
    span.insert(&start);
    let mut queue = VecDeque::from([start]);
    let mut steps = 0;
    while let Some(v) = queue.pop_front() {
        steps += 1;
        if steps > monos.len() {
            break;
        }
        for &f in &lie.lowering {
            let w = ad(f, &v);
            if span.insert(&w) {
                queue.push_back(w);
            }
        }
    }
    let expected = lie.root_system.weyl_nk(k).to_integer();
    let expected: usize = expected.try_into().map_err(|_| Error::Internal("N_k out of range".into()))?;
    if span.rank() != expected {
        return Err(Error::SpanDimension { found: span.rank(), expected });
    }
    let generators = span
        .basis()
        .into_iter()
        .map(|row| Polynomial::from_terms(&ring, row.into_iter().enumerate().map(|(i, c)| (monos[i].clone(), c))))
        .collect();
    Ok(C2Presentation {
        ring,
        generators,
        provenance: Provenance::Affine { root_type: lie.root_system.root_type, rank: lie.root_system.rank, level: k },
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VirasoroMode {
    Minimal { p: u64, q: u64 },
    Generic,
}

fn check_pq(p: u64, q: u64) -> Result<()> {
    if p < 2 || q <= p || p.gcd(&q) != 1 {
        return Err(Error::InvalidMinimalModel { p, q });
    }
    Ok(())
}

/// Central charge `1 - 6(p-q)^2/(pq)`.
pub fn cpq(p: u64, qq: u64) -> Result<Rational> {
    check_pq(p, qq)?;
    let d = p as i64 - qq as i64;
    Ok(q(1) - q(6 * d * d) / q((p * qq) as i64))
}

/// `Q[x]/(x^{(p-1)(q-1)/2})` with `|x| = 2`, or `Q[x]` for generic central charge.
pub fn virasoro_c2(mode: VirasoroMode) -> Result<C2Presentation> {
    let ring = RingSpec::new([("x", 2)])?;
    match mode {
        VirasoroMode::Generic => {
            Ok(C2Presentation { ring, generators: Vec::new(), provenance: Provenance::VirasoroGeneric })
        }
        VirasoroMode::Minimal { p, q: qq } => {
            let c = cpq(p, qq)?;
            let r = u32::try_from((p - 1) * (qq - 1) / 2).map_err(|_| Error::InvalidMinimalModel { p, q: qq })?;
            let g = Polynomial::var(&ring, 0).pow(r);
            Ok(C2Presentation {
                ring,
                generators: vec![g],
                provenance: Provenance::Virasoro { p, q: qq, central_charge: c.to_string() },
            })
        }
    }
}

/// `R(V1 ⊗ V2) = R(V1) ⊗ R(V2)`; clashing variables of `b` are renamed.
pub fn tensor_c2(a: &C2Presentation, b: &C2Presentation) -> Result<C2Presentation> {
    let mut vars: Vec<(String, u32)> = a.ring.names().iter().cloned().zip(a.ring.weights().iter().copied()).collect();
    let mut renamed = Vec::new();
    for (name, w) in b.ring.names().iter().zip(b.ring.weights()) {
        let taken = |s: &str, vars: &[(String, u32)]| {
            vars.iter().any(|(n, _)| n == s) || b.ring.names().iter().any(|n| n == s && n != name)
        };
        let mut new = name.clone();
        let mut k = 2;
        while taken(&new, &vars) {
            new = format!("{name}_{k}");
            k += 1;
        }
        if &new != name {
            renamed.push((name.clone(), new.clone()));
        }
        vars.push((new, *w));
    }
    let ring = RingSpec::new(vars)?;
    let na = a.ring.nvars();
    let map_a: Vec<usize> = (0..na).collect();
    let map_b: Vec<usize> = (na..na + b.ring.nvars()).collect();
    let generators = a
        .generators
        .iter()
        .map(|g| g.embed(&ring, &map_a))
        .chain(b.generators.iter().map(|g| g.embed(&ring, &map_b)))
        .collect();
    Ok(C2Presentation {
        ring,
        generators,
        provenance: Provenance::Tensor {
            left: Box::new(a.provenance.clone()),
            right: Box::new(b.provenance.clone()),
            renamed,
        },
    })
}

/// `R(V1 ⊕ V2) = R(V1) ⊕ R(V2)`: the spectrum is a disjoint union, and
/// cohomology at a point of one branch is that branch's.
#[derive(Clone, Debug)]
pub struct DirectSum {
    pub branches: [C2Presentation; 2],
}

impl DirectSum {
    pub fn branch(&self, i: usize) -> &C2Presentation {
        &self.branches[i]
    }
}

pub fn direct_sum_c2(a: &C2Presentation, b: &C2Presentation) -> DirectSum {
    DirectSum { branches: [a.clone(), b.clone()] }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::qf;
    use crate::gradedquot::{is_complete_intersection, minimal_generator_count};

    #[test]
    fn central_charges() {
        assert_eq!(cpq(2, 3).unwrap(), q(0));
        assert_eq!(cpq(2, 5).unwrap(), qf(-22, 5));
        assert_eq!(cpq(3, 4).unwrap(), qf(1, 2));
        assert!(cpq(2, 4).is_err());
        assert!(cpq(3, 2).is_err());
        assert!(cpq(1, 2).is_err());
    }

    #[test]
    fn virasoro_presentations() {
        let v = virasoro_c2(VirasoroMode::Minimal { p: 2, q: 5 }).unwrap();
        assert_eq!(v.generators[0].to_string(), "x^2");
        assert_eq!(v.generators[0].degree(), Some(4));
        let v = virasoro_c2(VirasoroMode::Minimal { p: 2, q: 3 }).unwrap();
        assert_eq!(v.quotient(4).unwrap().hilbert(), [1, 0, 0, 0, 0]);
        assert!(virasoro_c2(VirasoroMode::Generic).unwrap().generators.is_empty());
    }

    #[test]
    fn sl2_levels() {
        let lie = LieAlgebraBasis::new(RootType::A, 1).unwrap();
        let c = affine_c2(&lie, 0).unwrap();
        let gens: Vec<String> = c.generators.iter().map(|g| g.to_string()).collect();
        assert_eq!(gens, ["e", "h", "f"]);
        assert_eq!(c.quotient(3).unwrap().hilbert(), [1, 0, 0, 0]);
        let c = affine_c2(&lie, 1).unwrap();
        assert_eq!(c.generators.len(), 5);
        assert!(c.generators.iter().all(|g| g.degree() == Some(2)));
        let mg = minimal_generator_count(&c.ring, &c.generators, 2).unwrap();
        assert_eq!(mg.count, 5);
        assert!(!is_complete_intersection(&c.quotient(4).unwrap()).unwrap().is_yes());
    }

    #[test]
    fn tensor_renames_and_convolves() {
        let a = virasoro_c2(VirasoroMode::Minimal { p: 2, q: 5 }).unwrap();
        let b = virasoro_c2(VirasoroMode::Minimal { p: 3, q: 4 }).unwrap();
        let t = tensor_c2(&a, &b).unwrap();
        assert_eq!(t.ring.names(), ["x", "x_2"]);
        assert_eq!(t.generators[1].to_string(), "x_2^3");
        let (ha, hb, ht) = (a.quotient(12).unwrap().hilbert(), b.quotient(12).unwrap().hilbert(), t.quotient(12).unwrap().hilbert());
        for d in 0..=12 {
            let conv: usize = (0..=d).map(|i| ha[i] * hb[d - i]).sum();
            assert_eq!(ht[d], conv);
        }
        match &t.provenance {
            Provenance::Tensor { renamed, .. } => assert_eq!(renamed, &[("x".to_string(), "x_2".to_string())]),
            other => panic!("unexpected provenance {other:?}"),
        }
    }
}
