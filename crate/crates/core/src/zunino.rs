//! The Zunino category: same objects as the Turaev category, but a morphism
//! `(X, M) → (Y, N)` carries a forward map `f: X → Y` with linear maps
//! `φ_x: M_x → N_{f(x)}`. Also the duality functors between the two.

use crate::category::{Family, Morphism};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::matrix::Matrix;
use crate::setcat::set_coequalizer;
use crate::turaev::{class_label, Mediation, TMorphism};

#[derive(Clone, Debug, PartialEq)]
pub struct ZMorphism {
    source: Family,
    target: Family,
    /// `index_map[x]` is the target index receiving source index `x`.
    index_map: Vec<usize>,
    /// `maps[x]: M_x → N_{f(x)}`.
    maps: Vec<Matrix>,
}

impl ZMorphism {
    pub fn new(
        source: Family,
        target: Family,
        index_map: Vec<usize>,
        maps: Vec<Matrix>,
    ) -> Result<ZMorphism> {
        if source.field() != target.field() {
            return Err(Error::FieldMismatch(source.field(), target.field()));
        }
        if index_map.len() != source.len() || maps.len() != source.len() {
            return Err(Error::Invariant(format!(
                "index map and maps must cover all {} source indices",
                source.len()
            )));
        }
        for (x, (&y, m)) in index_map.iter().zip(&maps).enumerate() {
            if y >= target.len() {
                return Err(Error::Invariant(format!(
                    "index {} maps outside the target",
                    source.label(x)
                )));
            }
            if m.field() != source.field() {
                return Err(Error::FieldMismatch(source.field(), m.field()));
            }
            if m.shape() != (target.dim(y), source.dim(x)) {
                return Err(Error::Shape {
                    op: "fiber map",
                    lhs_rows: target.dim(y),
                    lhs_cols: source.dim(x),
                    rhs_rows: m.rows(),
                    rhs_cols: m.cols(),
                });
            }
        }
        Ok(ZMorphism {
            source,
            target,
            index_map,
            maps,
        })
    }

    pub fn linear(m: Matrix) -> ZMorphism {
        let f = m.field();
        ZMorphism::new(
            Family::new(f, vec!["*".into()], vec![m.cols()]),
            Family::new(f, vec!["*".into()], vec![m.rows()]),
            vec![0],
            vec![m],
        )
        .expect("well-formed linear map")
    }

    pub fn field(&self) -> Field {
        self.source.field()
    }

    pub fn index_map(&self) -> &[usize] {
        &self.index_map
    }

    pub fn maps(&self) -> &[Matrix] {
        &self.maps
    }

    pub fn map(&self, x: usize) -> &Matrix {
        &self.maps[x]
    }
}

impl Morphism for ZMorphism {
    fn source(&self) -> &Family {
        &self.source
    }

    fn target(&self) -> &Family {
        &self.target
    }

    fn identity(object: &Family) -> ZMorphism {
        ZMorphism {
            source: object.clone(),
            target: object.clone(),
            index_map: (0..object.len()).collect(),
            maps: object
                .dims()
                .iter()
                .map(|&d| Matrix::identity(object.field(), d))
                .collect(),
        }
    }

    fn compose(&self, first: &ZMorphism) -> Result<ZMorphism> {
        if first.target != self.source {
            return Err(Error::ObjectMismatch(format!(
                "target of the first morphism {} is not the source of the second {}",
                first.target, self.source
            )));
        }
        let mut index_map = Vec::with_capacity(first.source.len());
        let mut maps = Vec::with_capacity(first.source.len());
        for (x, &y) in first.index_map.iter().enumerate() {
            index_map.push(self.index_map[y]);
            maps.push(self.maps[y].mul(&first.maps[x])?);
        }
        Ok(ZMorphism {
            source: first.source.clone(),
            target: self.target.clone(),
            index_map,
            maps,
        })
    }

    fn tensor(&self, other: &ZMorphism) -> ZMorphism {
        let source = self.source.tensor(&other.source);
        let target = self.target.tensor(&other.target);
        let m = other.target.len();
        let mut index_map = Vec::with_capacity(source.len());
        let mut maps = Vec::with_capacity(source.len());
        for (a, &y) in self.index_map.iter().enumerate() {
            for (b, &y2) in other.index_map.iter().enumerate() {
                index_map.push(y * m + y2);
                maps.push(self.maps[a].kron(&other.maps[b]));
            }
        }
        ZMorphism {
            source,
            target,
            index_map,
            maps,
        }
    }

    fn symmetry(a: &Family, b: &Family) -> ZMorphism {
        let source = a.tensor(b);
        let target = b.tensor(a);
        let f = a.field();
        let mut index_map = Vec::with_capacity(source.len());
        let mut maps = Vec::with_capacity(source.len());
        for i in 0..a.len() {
            for j in 0..b.len() {
                index_map.push(j * a.len() + i);
                maps.push(Matrix::swap(f, a.dim(i), b.dim(j)));
            }
        }
        ZMorphism {
            source,
            target,
            index_map,
            maps,
        }
    }

    fn first_difference(&self, other: &ZMorphism) -> Option<String> {
        for x in 0..self.source.len().min(other.source.len()) {
            let label = self.source.label(x);
            if self.index_map[x] != other.index_map[x] {
                return Some(format!(
                    "index {label}: index map gives {} vs {}",
                    self.target.label(self.index_map[x]),
                    other.target.label(other.index_map[x])
                ));
            }
            if let Some(c) = self.maps[x].first_difference(&other.maps[x]) {
                return Some(format!(
                    "index {label}, basis vector {c}: {} vs {}",
                    self.maps[x].column_string(c),
                    other.maps[x].column_string(c)
                ));
            }
        }
        None
    }
}

fn check_parallel(a: &ZMorphism, b: &ZMorphism) -> Result<()> {
    if a.source != b.source || a.target != b.target {
        return Err(Error::NotParallel(format!(
            "{} → {} vs {} → {}",
            a.source, a.target, b.source, b.target
        )));
    }
    Ok(())
}

#[derive(Clone, Debug)]
pub struct ZEqualizer {
    pub object: Family,
    /// Inclusion `(Z, ker) → (X, M)`.
    pub inclusion: ZMorphism,
    /// Source indices on which the index maps agree.
    pub agreeing: Vec<usize>,
}

/// Index set `{x : f(x) = g(x)}`, fibers `ker(φ_x − ψ_x)`.
pub fn z_equalizer(phi: &ZMorphism, psi: &ZMorphism) -> Result<ZEqualizer> {
    check_parallel(phi, psi)?;
    let src = &phi.source;
    let agreeing: Vec<usize> = (0..src.len())
        .filter(|&x| phi.index_map[x] == psi.index_map[x])
        .collect();
    let mut maps = Vec::with_capacity(agreeing.len());
    for &x in &agreeing {
        maps.push(phi.maps[x].sub(&psi.maps[x])?.kernel_matrix());
    }
    let labels = agreeing.iter().map(|&x| src.label(x).to_string()).collect();
    let dims = maps.iter().map(Matrix::cols).collect();
    let object = Family::new(src.field(), labels, dims);
    let inclusion = ZMorphism::new(object.clone(), src.clone(), agreeing.clone(), maps)?;
    Ok(ZEqualizer {
        object,
        inclusion,
        agreeing,
    })
}

#[derive(Clone, Debug)]
pub struct ZCoequalizer {
    pub object: Family,
    /// Projection `(Y, N) → (Ȳ, N̄)`.
    pub projection: ZMorphism,
    pub classes: Vec<Vec<usize>>,
    pub class_of: Vec<usize>,
    /// Quotient map `⊕_{y∈ȳ} N_y → N̄_ȳ` per class.
    pub quotients: Vec<Matrix>,
}

/// Index set is the set coequalizer of `f, g`; the fiber over a class is
/// `⊕ N_y` modulo the span of `i_{f(x)} φ_x(m) − i_{g(x)} ψ_x(m)`.
pub fn z_coequalizer(phi: &ZMorphism, psi: &ZMorphism) -> Result<ZCoequalizer> {
    check_parallel(phi, psi)?;
    let src = &phi.source;
    let tgt = &phi.target;
    let field = tgt.field();
    let (classes, class_of) = set_coequalizer(tgt.len(), &phi.index_map, &psi.index_map);
    let mut quotients = Vec::with_capacity(classes.len());
    let mut dims = Vec::with_capacity(classes.len());
    let mut labels = Vec::with_capacity(classes.len());
    let mut maps = vec![Matrix::zeros(field, 0, 0); tgt.len()];
    for (c, class) in classes.iter().enumerate() {
        let mut offs = Vec::with_capacity(class.len());
        let mut total = 0;
        for &y in class {
            offs.push(total);
            total += tgt.dim(y);
        }
        let pos = |y: usize| offs[class.iter().position(|&m| m == y).expect("member")];
        let relations: Vec<usize> = (0..src.len())
            .filter(|&x| class_of[phi.index_map[x]] == c)
            .collect();
        let cols: usize = relations.iter().map(|&x| src.dim(x)).sum();
        let mut rel = Matrix::zeros(field, total, cols);
        let mut c0 = 0;
        for &x in &relations {
            let (fa, fb) = (phi.index_map[x], psi.index_map[x]);
            let (pa, pb) = (pos(fa), pos(fb));
            for k in 0..src.dim(x) {
                for r in 0..tgt.dim(fa) {
                    let mut v = rel.get(pa + r, c0 + k).clone();
                    v.add_assign_ref(phi.maps[x].get(r, k));
                    rel.set(pa + r, c0 + k, v);
                }
                for r in 0..tgt.dim(fb) {
                    let v = rel.get(pb + r, c0 + k).sub_ref(psi.maps[x].get(r, k));
                    rel.set(pb + r, c0 + k, v);
                }
            }
            c0 += src.dim(x);
        }
        let (q, d) = rel.cokernel();
        for (i, &y) in class.iter().enumerate() {
            maps[y] = q.block(0, d, offs[i], tgt.dim(y));
        }
        dims.push(d);
        labels.push(class_label(tgt.labels(), class));
        quotients.push(q);
    }
    let object = Family::new(field, labels, dims);
    let projection = ZMorphism::new(tgt.clone(), object.clone(), class_of.clone(), maps)?;
    Ok(ZCoequalizer {
        object,
        projection,
        classes,
        class_of,
        quotients,
    })
}

/// Factors an equalizing probe `π: P → (X, M)` through the equalizer.
pub fn z_equalizer_mediate(
    phi: &ZMorphism,
    psi: &ZMorphism,
    eq: &ZEqualizer,
    probe: &ZMorphism,
) -> Result<Mediation<ZMorphism>> {
    let a = phi.compose(probe)?;
    let b = psi.compose(probe)?;
    if let Some(diff) = a.first_difference(&b) {
        return Err(Error::NotEqualizing {
            kind: "equalize",
            index: diff,
        });
    }
    let mut index_map = Vec::with_capacity(probe.source.len());
    let mut maps = Vec::with_capacity(probe.source.len());
    let mut unique = true;
    for (p, &x) in probe.index_map.iter().enumerate() {
        let z = eq.agreeing.iter().position(|&v| v == x).ok_or_else(|| {
            Error::Invariant(format!(
                "equalizing probe lands on {} outside the agreement set",
                phi.source.label(x)
            ))
        })?;
        let k = &eq.inclusion.maps[z];
        let u = k
            .solve(&probe.maps[p])
            .ok_or_else(|| Error::Invariant("equalizing probe does not factor".into()))?;
        unique &= k.rank() == k.cols();
        index_map.push(z);
        maps.push(u);
    }
    let mediating = ZMorphism::new(probe.source.clone(), eq.object.clone(), index_map, maps)?;
    if eq.inclusion.compose(&mediating)? != *probe {
        return Err(Error::Invariant(
            "mediating morphism does not factor the probe".into(),
        ));
    }
    Ok(Mediation {
        morphism: mediating,
        unique,
    })
}

/// Factors a coequalizing probe `ρ: (Y, N) → Q` through the coequalizer.
pub fn z_coequalizer_mediate(
    phi: &ZMorphism,
    psi: &ZMorphism,
    coeq: &ZCoequalizer,
    probe: &ZMorphism,
) -> Result<Mediation<ZMorphism>> {
    let a = probe.compose(phi)?;
    let b = probe.compose(psi)?;
    if let Some(diff) = a.first_difference(&b) {
        return Err(Error::NotEqualizing {
            kind: "coequalize",
            index: diff,
        });
    }
    let field = probe.field();
    let mut index_map = Vec::with_capacity(coeq.classes.len());
    let mut maps = Vec::with_capacity(coeq.classes.len());
    let mut unique = true;
    for (c, class) in coeq.classes.iter().enumerate() {
        let k = probe.index_map[class[0]];
        if let Some(&y) = class.iter().find(|&&y| probe.index_map[y] != k) {
            return Err(Error::IllDefined {
                class: coeq.object.label(c).to_string(),
                first: probe.target.label(k).to_string(),
                second: probe.target.label(probe.index_map[y]).to_string(),
            });
        }
        let parts: Vec<&Matrix> = class.iter().map(|&y| &probe.maps[y]).collect();
        let stacked = Matrix::hstack(&parts, field, probe.target.dim(k))?;
        let q = &coeq.quotients[c];
        let vt = q
            .transpose()
            .solve(&stacked.transpose())
            .ok_or_else(|| Error::Invariant("coequalizing probe does not factor".into()))?;
        unique &= q.rank() == q.rows();
        index_map.push(k);
        maps.push(vt.transpose());
    }
    let mediating = ZMorphism::new(coeq.object.clone(), probe.target.clone(), index_map, maps)?;
    if mediating.compose(&coeq.projection)? != *probe {
        return Err(Error::Invariant(
            "mediating morphism does not factor the probe".into(),
        ));
    }
    Ok(Mediation {
        morphism: mediating,
        unique,
    })
}

/// Dual of a Turaev morphism `(f, φ_y): (X, M) → (Y, N)`: the Zunino
/// morphism `(Y, N*) → (X, M*)` with the same index map and transposed
/// fiber maps.
pub fn dualize_t(phi: &TMorphism) -> ZMorphism {
    ZMorphism {
        source: phi.target().clone(),
        target: phi.source().clone(),
        index_map: phi.index_map().to_vec(),
        maps: phi.maps().iter().map(Matrix::transpose).collect(),
    }
}

/// Dual of a Zunino morphism `(f, φ_x): (X, M) → (Y, N)`: the Turaev
/// morphism `(Y, N*) → (X, M*)`.
pub fn dualize_z(phi: &ZMorphism) -> TMorphism {
    TMorphism::new(
        phi.target.clone(),
        phi.source.clone(),
        phi.index_map.clone(),
        phi.maps.iter().map(Matrix::transpose).collect(),
    )
    .expect("transposes have the dual shapes")
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: Field = Field::Rationals;

    #[test]
    fn collapsing_two_targets_quotients_by_the_relation() {
        // X = {x} with M_x = k, Y = {y1, y2} with N = k^2, k^1.
        let x = Family::new(Q, vec!["x".into()], vec![1]);
        let y = Family::new(Q, vec!["y1".into(), "y2".into()], vec![2, 1]);
        let phi = ZMorphism::new(
            x.clone(),
            y.clone(),
            vec![0],
            vec![Matrix::from_rows_i64(Q, &[vec![1], vec![0]])],
        )
        .unwrap();
        let psi =
            ZMorphism::new(x, y, vec![1], vec![Matrix::from_rows_i64(Q, &[vec![1]])]).unwrap();
        let c = z_coequalizer(&phi, &psi).unwrap();
        assert_eq!(c.classes, vec![vec![0, 1]]);
        // 2 + 1 - rank of the single relation column
        assert_eq!(c.object.dims(), &[2]);
        assert_eq!(
            c.projection.compose(&phi).unwrap(),
            c.projection.compose(&psi).unwrap()
        );
    }

    #[test]
    fn disjoint_index_maps_give_empty_equalizer() {
        let x = Family::new(Q, vec!["a".into()], vec![2]);
        let y = Family::new(Q, vec!["p".into(), "q".into()], vec![1, 1]);
        let z = Matrix::zeros(Q, 1, 2);
        let phi = ZMorphism::new(x.clone(), y.clone(), vec![0], vec![z.clone()]).unwrap();
        let psi = ZMorphism::new(x, y, vec![1], vec![z]).unwrap();
        assert!(z_equalizer(&phi, &psi).unwrap().object.is_empty());
    }

    #[test]
    fn double_dual_is_identity() {
        let x = Family::new(Q, vec!["a".into(), "b".into()], vec![2, 1]);
        let y = Family::new(Q, vec!["p".into()], vec![2]);
        let phi = TMorphism::new(
            x,
            y,
            vec![1],
            vec![Matrix::from_rows_i64(Q, &[vec![4], vec![5]])],
        )
        .unwrap();
        assert_eq!(dualize_z(&dualize_t(&phi)), phi);
        let sym = TMorphism::symmetry(phi.source(), phi.target());
        assert_eq!(dualize_t(&sym).maps()[0], sym.maps()[0].transpose());
    }

    #[test]
    fn tau_is_self_inverse() {
        let a = Family::new(Q, vec!["a".into(), "b".into()], vec![2, 3]);
        let b = Family::new(Q, vec!["p".into()], vec![2]);
        let t = ZMorphism::symmetry(&a, &b);
        assert_eq!(
            ZMorphism::symmetry(&b, &a).compose(&t).unwrap(),
            ZMorphism::identity(&a.tensor(&b))
        );
    }
}
