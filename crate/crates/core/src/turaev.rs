//! The Turaev category: a morphism `(X, M) → (Y, N)` is a map of index
//! sets `f: Y → X` together with linear maps `φ_y: M_{f(y)} → N_y`.

use crate::category::{Family, Morphism};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::matrix::Matrix;
use crate::setcat::set_coequalizer;

#[derive(Clone, Debug, PartialEq)]
pub struct TMorphism {
    source: Family,
    target: Family,
    /// `index_map[y]` is the source index feeding target index `y`.
    index_map: Vec<usize>,
    /// `maps[y]: M_{f(y)} → N_y`.
    maps: Vec<Matrix>,
}

impl TMorphism {
    pub fn new(
        source: Family,
        target: Family,
        index_map: Vec<usize>,
        maps: Vec<Matrix>,
    ) -> Result<TMorphism> {
        if source.field() != target.field() {
            return Err(Error::FieldMismatch(source.field(), target.field()));
        }
        if index_map.len() != target.len() || maps.len() != target.len() {
            return Err(Error::Invariant(format!(
                "index map and maps must cover all {} target indices",
                target.len()
            )));
        }
        for (y, (&x, m)) in index_map.iter().zip(&maps).enumerate() {
            if x >= source.len() {
                return Err(Error::Invariant(format!(
                    "index {} maps outside the source",
                    target.label(y)
                )));
            }
            if m.field() != target.field() {
                return Err(Error::FieldMismatch(target.field(), m.field()));
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
        Ok(TMorphism {
            source,
            target,
            index_map,
            maps,
        })
    }

    /// Morphism between one-index objects: a plain linear map.
    pub fn linear(m: Matrix) -> TMorphism {
        let f = m.field();
        TMorphism::new(
            Family::new(f, vec!["*".into()], vec![m.cols()]),
            Family::new(f, vec!["*".into()], vec![m.rows()]),
            vec![0],
            vec![m],
        )
        .expect("well-formed linear map")
    }

    pub fn zero(source: &Family, target: &Family, index_map: Vec<usize>) -> Result<TMorphism> {
        let maps = index_map
            .iter()
            .enumerate()
            .map(|(y, &x)| Matrix::zeros(target.field(), target.dim(y), source.dim(x)))
            .collect();
        TMorphism::new(source.clone(), target.clone(), index_map, maps)
    }

    pub fn field(&self) -> Field {
        self.target.field()
    }

    pub fn index_map(&self) -> &[usize] {
        &self.index_map
    }

    pub fn maps(&self) -> &[Matrix] {
        &self.maps
    }

    pub fn map(&self, y: usize) -> &Matrix {
        &self.maps[y]
    }

    pub fn with_objects(&self, source: Family, target: Family) -> Result<TMorphism> {
        TMorphism::new(source, target, self.index_map.clone(), self.maps.clone())
    }
}

impl Morphism for TMorphism {
    fn source(&self) -> &Family {
        &self.source
    }

    fn target(&self) -> &Family {
        &self.target
    }

    fn identity(object: &Family) -> TMorphism {
        TMorphism {
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

    fn compose(&self, first: &TMorphism) -> Result<TMorphism> {
        if first.target != self.source {
            return Err(Error::ObjectMismatch(format!(
                "target of the first morphism {} is not the source of the second {}",
                first.target, self.source
            )));
        }
        let mut index_map = Vec::with_capacity(self.target.len());
        let mut maps = Vec::with_capacity(self.target.len());
        for (z, &y) in self.index_map.iter().enumerate() {
            index_map.push(first.index_map[y]);
            maps.push(self.maps[z].mul(&first.maps[y])?);
        }
        Ok(TMorphism {
            source: first.source.clone(),
            target: self.target.clone(),
            index_map,
            maps,
        })
    }

    fn tensor(&self, other: &TMorphism) -> TMorphism {
        let source = self.source.tensor(&other.source);
        let target = self.target.tensor(&other.target);
        let m = other.source.len();
        let mut index_map = Vec::with_capacity(target.len());
        let mut maps = Vec::with_capacity(target.len());
        for (a, &x) in self.index_map.iter().enumerate() {
            for (b, &x2) in other.index_map.iter().enumerate() {
                index_map.push(x * m + x2);
                maps.push(self.maps[a].kron(&other.maps[b]));
            }
        }
        TMorphism {
            source,
            target,
            index_map,
            maps,
        }
    }

    fn symmetry(a: &Family, b: &Family) -> TMorphism {
        let source = a.tensor(b);
        let target = b.tensor(a);
        let f = a.field();
        let mut index_map = Vec::with_capacity(target.len());
        let mut maps = Vec::with_capacity(target.len());
        for j in 0..b.len() {
            for i in 0..a.len() {
                index_map.push(i * b.len() + j);
                maps.push(Matrix::swap(f, a.dim(i), b.dim(j)));
            }
        }
        TMorphism {
            source,
            target,
            index_map,
            maps,
        }
    }

    fn first_difference(&self, other: &TMorphism) -> Option<String> {
        for y in 0..self.target.len().min(other.target.len()) {
            let label = self.target.label(y);
            if self.index_map[y] != other.index_map[y] {
                return Some(format!(
                    "index {label}: index map gives {} vs {}",
                    self.source.label(self.index_map[y]),
                    other.source.label(other.index_map[y])
                ));
            }
            if let Some(c) = self.maps[y].first_difference(&other.maps[y]) {
                return Some(format!(
                    "index {label}, basis vector {c}: {} vs {}",
                    self.maps[y].column_string(c),
                    other.maps[y].column_string(c)
                ));
            }
        }
        None
    }
}

/// Equalizer of a parallel pair, with the data used to build it.
#[derive(Clone, Debug)]
pub struct TEqualizer {
    pub object: Family,
    /// Inclusion `(X̄, M̄) → (X, M)`.
    pub inclusion: TMorphism,
    /// Equivalence classes of source indices, ordered by least element.
    pub classes: Vec<Vec<usize>>,
    /// Class of each source index.
    pub class_of: Vec<usize>,
    /// Basis of each equalizer fiber inside `∏_{x∈x̄} M_x`.
    pub bases: Vec<Matrix>,
}

fn check_parallel<M: Morphism>(a: &M, b: &M) -> Result<()> {
    if a.source() != b.source() || a.target() != b.target() {
        return Err(Error::NotParallel(format!(
            "{} → {} vs {} → {}",
            a.source(),
            a.target(),
            b.source(),
            b.target()
        )));
    }
    Ok(())
}

pub(crate) fn class_label(labels: &[String], class: &[usize]) -> String {
    if class.len() == 1 {
        labels[class[0]].clone()
    } else {
        let parts: Vec<&str> = class.iter().map(|&i| labels[i].as_str()).collect();
        format!("[{}]", parts.join("|"))
    }
}

/// Offsets of each member's block inside the stacked product space.
fn offsets(obj: &Family, class: &[usize]) -> (Vec<usize>, usize) {
    let mut out = Vec::with_capacity(class.len());
    let mut total = 0;
    for &x in class {
        out.push(total);
        total += obj.dim(x);
    }
    (out, total)
}

/// Indices get identified by the equivalence relation generated by
/// `f(y) ~ g(y)`; the fiber over a class is the space of families
/// `(m_x)` with `φ_y(m_{f(y)}) = ψ_y(m_{g(y)})` for every `y`.
pub fn t_equalizer(phi: &TMorphism, psi: &TMorphism) -> Result<TEqualizer> {
    check_parallel(phi, psi)?;
    let src = &phi.source;
    let tgt = &phi.target;
    let field = src.field();
    let (classes, class_of) = set_coequalizer(src.len(), &phi.index_map, &psi.index_map);
    let mut constraints: Vec<Vec<usize>> = vec![Vec::new(); classes.len()];
    for y in 0..tgt.len() {
        constraints[class_of[phi.index_map[y]]].push(y);
    }
    let mut bases = Vec::with_capacity(classes.len());
    let mut dims = Vec::with_capacity(classes.len());
    let mut labels = Vec::with_capacity(classes.len());
    for (c, class) in classes.iter().enumerate() {
        let (offs, total) = offsets(src, class);
        let pos = |x: usize| offs[class.iter().position(|&m| m == x).expect("same class")];
        let rows: usize = constraints[c].iter().map(|&y| tgt.dim(y)).sum();
        let mut stacked = Matrix::zeros(field, rows, total);
        let mut r0 = 0;
        for &y in &constraints[c] {
            let (fa, fb) = (phi.index_map[y], psi.index_map[y]);
            let (pa, pb) = (pos(fa), pos(fb));
            for r in 0..tgt.dim(y) {
                for k in 0..src.dim(fa) {
                    let mut v = stacked.get(r0 + r, pa + k).clone();
                    v.add_assign_ref(phi.maps[y].get(r, k));
                    stacked.set(r0 + r, pa + k, v);
                }
                for k in 0..src.dim(fb) {
                    let v = stacked.get(r0 + r, pb + k).sub_ref(psi.maps[y].get(r, k));
                    stacked.set(r0 + r, pb + k, v);
                }
            }
            r0 += tgt.dim(y);
        }
        let basis = stacked.kernel_matrix();
        dims.push(basis.cols());
        labels.push(class_label(src.labels(), class));
        bases.push(basis);
    }
    let object = Family::new(field, labels, dims);
    let mut maps = Vec::with_capacity(src.len());
    for x in 0..src.len() {
        let c = class_of[x];
        let (offs, _) = offsets(src, &classes[c]);
        let at = offs[classes[c].iter().position(|&m| m == x).expect("member")];
        maps.push(bases[c].block(at, src.dim(x), 0, bases[c].cols()));
    }
    let inclusion = TMorphism::new(object.clone(), src.clone(), class_of.clone(), maps)?;
    Ok(TEqualizer {
        object,
        inclusion,
        classes,
        class_of,
        bases,
    })
}

/// Coequalizer of a parallel pair.
#[derive(Clone, Debug)]
pub struct TCoequalizer {
    pub object: Family,
    /// Projection `(Y, N) → (U, P)`.
    pub projection: TMorphism,
    /// Target indices on which the two index maps agree.
    pub agreeing: Vec<usize>,
}

/// The index set is `U = {u : f(u) = g(u)}` and the fiber over `u` is
/// `coker(φ_u − ψ_u)`.
pub fn t_coequalizer(phi: &TMorphism, psi: &TMorphism) -> Result<TCoequalizer> {
    check_parallel(phi, psi)?;
    let tgt = &phi.target;
    let field = tgt.field();
    let agreeing: Vec<usize> = (0..tgt.len())
        .filter(|&u| phi.index_map[u] == psi.index_map[u])
        .collect();
    let mut maps = Vec::with_capacity(agreeing.len());
    let mut dims = Vec::with_capacity(agreeing.len());
    for &u in &agreeing {
        let (q, d) = phi.maps[u].sub(&psi.maps[u])?.cokernel();
        maps.push(q);
        dims.push(d);
    }
    let labels = agreeing.iter().map(|&u| tgt.label(u).to_string()).collect();
    let object = Family::new(field, labels, dims);
    let projection = TMorphism::new(tgt.clone(), object.clone(), agreeing.clone(), maps)?;
    Ok(TCoequalizer {
        object,
        projection,
        agreeing,
    })
}

/// A factorization through a universal object.
#[derive(Clone, Debug)]
pub struct Mediation<M> {
    pub morphism: M,
    /// Whether the factorization system had exactly one solution.
    pub unique: bool,
}

/// Factors an equalizing probe `π: P → (X, M)` through the equalizer.
pub fn t_equalizer_mediate(
    phi: &TMorphism,
    psi: &TMorphism,
    eq: &TEqualizer,
    probe: &TMorphism,
) -> Result<Mediation<TMorphism>> {
    let a = phi.compose(probe)?;
    let b = psi.compose(probe)?;
    if let Some(diff) = a.first_difference(&b) {
        return Err(Error::NotEqualizing {
            kind: "equalize",
            index: diff,
        });
    }
    let field = probe.field();
    let p_obj = &probe.source;
    let mut index_map = Vec::with_capacity(eq.classes.len());
    let mut maps = Vec::with_capacity(eq.classes.len());
    let mut unique = true;
    for (c, class) in eq.classes.iter().enumerate() {
        let h = probe.index_map[class[0]];
        if let Some(&x) = class.iter().find(|&&x| probe.index_map[x] != h) {
            return Err(Error::IllDefined {
                class: eq.object.label(c).to_string(),
                first: probe.source.label(h).to_string(),
                second: probe.source.label(probe.index_map[x]).to_string(),
            });
        }
        let parts: Vec<&Matrix> = class.iter().map(|&x| &probe.maps[x]).collect();
        let rows: usize = parts.iter().map(|m| m.rows()).sum();
        let stacked = Matrix::vstack(&parts, field, p_obj.dim(h))?;
        debug_assert_eq!(stacked.rows(), rows);
        let basis = &eq.bases[c];
        let u = basis.solve(&stacked).ok_or_else(|| {
            Error::Invariant(format!(
                "equalizing probe does not factor through class {}",
                eq.object.label(c)
            ))
        })?;
        unique &= basis.rank() == basis.cols();
        index_map.push(h);
        maps.push(u);
    }
    let mediating = TMorphism::new(p_obj.clone(), eq.object.clone(), index_map, maps)?;
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
pub fn t_coequalizer_mediate(
    phi: &TMorphism,
    psi: &TMorphism,
    coeq: &TCoequalizer,
    probe: &TMorphism,
) -> Result<Mediation<TMorphism>> {
    let a = probe.compose(phi)?;
    let b = probe.compose(psi)?;
    if let Some(diff) = a.first_difference(&b) {
        return Err(Error::NotEqualizing {
            kind: "coequalize",
            index: diff,
        });
    }
    let mut index_map = Vec::with_capacity(probe.target.len());
    let mut maps = Vec::with_capacity(probe.target.len());
    let mut unique = true;
    for (q, &y) in probe.index_map.iter().enumerate() {
        let u = coeq.agreeing.iter().position(|&v| v == y).ok_or_else(|| {
            Error::Invariant(format!(
                "coequalizing probe reads index {} outside the agreement set",
                phi.target.label(y)
            ))
        })?;
        let proj = &coeq.projection.maps[u];
        // v · proj = probe  ⇔  projᵀ · vᵀ = probeᵀ
        let vt = proj
            .transpose()
            .solve(&probe.maps[q].transpose())
            .ok_or_else(|| Error::Invariant("coequalizing probe does not factor".into()))?;
        unique &= proj.rank() == proj.rows();
        index_map.push(u);
        maps.push(vt.transpose());
    }
    let mediating = TMorphism::new(coeq.object.clone(), probe.target.clone(), index_map, maps)?;
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

#[cfg(test)]
mod tests {
    use super::*;

    const Q: Field = Field::Rationals;

    fn m(rows: &[Vec<i64>]) -> Matrix {
        Matrix::from_rows_i64(Q, rows)
    }

    #[test]
    fn singleton_composition_is_matrix_product() {
        let a = TMorphism::linear(m(&[vec![1, 2], vec![0, 1]]));
        let b = TMorphism::linear(m(&[vec![3, 0], vec![1, 1]]));
        let ab = a.compose(&b).unwrap();
        assert_eq!(
            ab.map(0),
            &m(&[vec![1, 2], vec![0, 1]])
                .mul(&m(&[vec![3, 0], vec![1, 1]]))
                .unwrap()
        );
    }

    #[test]
    fn identity_laws_and_unit_tensor() {
        let x = Family::new(Q, vec!["a".into(), "b".into()], vec![2, 1]);
        let y = Family::new(Q, vec!["p".into()], vec![2]);
        let phi = TMorphism::new(
            x.clone(),
            y.clone(),
            vec![0],
            vec![m(&[vec![1, 0], vec![2, 3]])],
        )
        .unwrap();
        assert_eq!(TMorphism::identity(&y).compose(&phi).unwrap(), phi);
        assert_eq!(phi.compose(&TMorphism::identity(&x)).unwrap(), phi);
        let unit = TMorphism::identity(&Family::unit(Q));
        assert_eq!(phi.tensor(&unit), phi);
        assert_eq!(x.tensor(&Family::unit(Q)), x);
    }

    #[test]
    fn symmetry_is_self_inverse() {
        let a = Family::new(Q, vec!["a".into(), "b".into()], vec![2, 1]);
        let b = Family::new(Q, vec!["p".into(), "q".into(), "r".into()], vec![1, 3, 0]);
        let t = TMorphism::symmetry(&a, &b);
        let back = TMorphism::symmetry(&b, &a);
        assert_eq!(
            back.compose(&t).unwrap(),
            TMorphism::identity(&a.tensor(&b))
        );
    }

    #[test]
    fn singleton_equalizer_is_kernel_of_difference() {
        let phi = TMorphism::linear(m(&[vec![1, 1]]));
        let psi = TMorphism::linear(m(&[vec![0, 0]]));
        let eq = t_equalizer(&phi, &psi).unwrap();
        assert_eq!(eq.object.dims(), &[1]);
        assert_eq!(eq.inclusion.map(0), &m(&[vec![-1], vec![1]]));
        let mediated = t_equalizer_mediate(&phi, &psi, &eq, &eq.inclusion).unwrap();
        assert!(mediated.unique);
        assert_eq!(mediated.morphism, TMorphism::identity(&eq.object));
    }

    #[test]
    fn coequalizer_with_disagreeing_index_maps_is_empty() {
        let x = Family::new(Q, vec!["a".into(), "b".into()], vec![1, 1]);
        let y = Family::new(Q, vec!["p".into()], vec![1]);
        let phi = TMorphism::new(x.clone(), y.clone(), vec![0], vec![m(&[vec![1]])]).unwrap();
        let psi = TMorphism::new(x, y, vec![1], vec![m(&[vec![1]])]).unwrap();
        let c = t_coequalizer(&phi, &psi).unwrap();
        assert!(c.object.is_empty());
    }

    #[test]
    fn non_equalizing_probe_is_rejected() {
        let phi = TMorphism::linear(m(&[vec![1, 0]]));
        let psi = TMorphism::linear(m(&[vec![0, 1]]));
        let eq = t_equalizer(&phi, &psi).unwrap();
        let probe = TMorphism::linear(m(&[vec![1], vec![0]]));
        assert!(matches!(
            t_equalizer_mediate(&phi, &psi, &eq, &probe),
            Err(Error::NotEqualizing { .. })
        ));
    }
}
