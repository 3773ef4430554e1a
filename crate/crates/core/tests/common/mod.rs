//! Independent oracles shared by the integration tests. Nothing here calls
//! the (co)equalizer constructions it is used to check.

#![allow(dead_code)]

use std::collections::BTreeMap;

use hopfgc::{Field, Matrix, Morphism, TMorphism, ZMorphism};

/// Classes of `0..n` under the relation generated by `a[i] ~ b[i]`, each
/// class sorted, by naive relabelling.
pub fn classes(n: usize, a: &[usize], b: &[usize]) -> Vec<Vec<usize>> {
    let mut label: Vec<usize> = (0..n).collect();
    let mut changed = true;
    while changed {
        changed = false;
        for (&x, &y) in a.iter().zip(b) {
            let (lx, ly) = (label[x], label[y]);
            if lx != ly {
                let (keep, drop) = (lx.min(ly), lx.max(ly));
                for l in label.iter_mut() {
                    if *l == drop {
                        *l = keep;
                    }
                }
                changed = true;
            }
        }
    }
    let mut out: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for (i, l) in label.into_iter().enumerate() {
        out.entry(l).or_default().push(i);
    }
    out.into_values().collect()
}

fn zero_block(f: Field, r: usize, c: usize) -> Matrix {
    Matrix::zeros(f, r, c)
}

/// Horizontal placement of `m` at column offset `at` in a row of width `w`.
fn placed(f: Field, m: &Matrix, at: usize, w: usize) -> Matrix {
    let left = zero_block(f, m.rows(), at);
    let right = zero_block(f, m.rows(), w - at - m.cols());
    Matrix::hstack(&[&left, m, &right], f, m.rows()).unwrap()
}

/// Equalizer of a T_k pair: class (as sorted source indices) ↦ fiber
/// dimension, from `dim ∏ M_x − rank` of the stacked constraints.
pub fn t_equalizer_dims(phi: &TMorphism, psi: &TMorphism) -> BTreeMap<Vec<usize>, usize> {
    let s = phi.source();
    let t = phi.target();
    let f = s.field();
    let cls = classes(s.len(), phi.index_map(), psi.index_map());
    let mut out = BTreeMap::new();
    for c in cls {
        let mut offset = BTreeMap::new();
        let mut w = 0;
        for &x in &c {
            offset.insert(x, w);
            w += s.dim(x);
        }
        let mut rows: Vec<Matrix> = Vec::new();
        for y in 0..t.len() {
            let (a, b) = (phi.index_map()[y], psi.index_map()[y]);
            if !c.contains(&a) {
                continue;
            }
            let l = placed(f, phi.map(y), offset[&a], w);
            let r = placed(f, psi.map(y), offset[&b], w);
            rows.push(l.sub(&r).unwrap());
        }
        let refs: Vec<&Matrix> = rows.iter().collect();
        let rank = if refs.is_empty() {
            0
        } else {
            Matrix::vstack(&refs, f, w).unwrap().rank()
        };
        out.insert(c, w - rank);
    }
    out
}

/// Coequalizer of a T_k pair: agreeing target index ↦ cokernel dimension.
pub fn t_coequalizer_dims(phi: &TMorphism, psi: &TMorphism) -> BTreeMap<usize, usize> {
    let t = phi.target();
    (0..t.len())
        .filter(|&u| phi.index_map()[u] == psi.index_map()[u])
        .map(|u| (u, t.dim(u) - phi.map(u).sub(psi.map(u)).unwrap().rank()))
        .collect()
}

/// Equalizer of a Z_k pair: agreeing source index ↦ kernel dimension.
pub fn z_equalizer_dims(phi: &ZMorphism, psi: &ZMorphism) -> BTreeMap<usize, usize> {
    let s = phi.source();
    (0..s.len())
        .filter(|&x| phi.index_map()[x] == psi.index_map()[x])
        .map(|x| (x, s.dim(x) - phi.map(x).sub(psi.map(x)).unwrap().rank()))
        .collect()
}

/// Coequalizer of a Z_k pair: class of target indices ↦ dimension of
/// `⊕ N_y` modulo the relations.
pub fn z_coequalizer_dims(phi: &ZMorphism, psi: &ZMorphism) -> BTreeMap<Vec<usize>, usize> {
    let s = phi.source();
    let t = phi.target();
    let f = s.field();
    let cls = classes(t.len(), phi.index_map(), psi.index_map());
    let mut out = BTreeMap::new();
    for c in cls {
        let mut offset = BTreeMap::new();
        let mut h = 0;
        for &y in &c {
            offset.insert(y, h);
            h += t.dim(y);
        }
        let mut cols: Vec<Matrix> = Vec::new();
        for x in 0..s.len() {
            let (a, b) = (phi.index_map()[x], psi.index_map()[x]);
            if !c.contains(&a) {
                continue;
            }
            let l = placed(f, &phi.map(x).transpose(), offset[&a], h).transpose();
            let r = placed(f, &psi.map(x).transpose(), offset[&b], h).transpose();
            cols.push(l.sub(&r).unwrap());
        }
        let refs: Vec<&Matrix> = cols.iter().collect();
        let rank = if refs.is_empty() {
            0
        } else {
            Matrix::hstack(&refs, f, h).unwrap().rank()
        };
        out.insert(c, h - rank);
    }
    out
}
