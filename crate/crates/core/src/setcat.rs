//! Finite sets, monoids, groups and G-sets, with the set-level Hopf theory:
//! groups as Hopf algebras in Sets, the structure theorems for Hopf modules
//! over a group, and half-braidings coming from crossed G-sets.
//!
//! Elements are interned: every set is `0..n` with a parallel label list.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::report::{idx, Report};

/// Union-find with path compression.
#[derive(Clone, Debug)]
pub struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub fn new(n: usize) -> UnionFind {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    pub fn find(&mut self, x: usize) -> usize {
        let mut root = x;
        while self.parent[root] != root {
            root = self.parent[root];
        }
        let mut cur = x;
        while self.parent[cur] != root {
            let next = self.parent[cur];
            self.parent[cur] = root;
            cur = next;
        }
        root
    }

    pub fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            // keep the smaller element as root so class order is stable
            let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
            self.parent[hi] = lo;
        }
    }

    /// Classes ordered by their least element, each sorted.
    pub fn classes(&mut self) -> (Vec<Vec<usize>>, Vec<usize>) {
        let n = self.parent.len();
        let mut class_of_root: HashMap<usize, usize> = HashMap::new();
        let mut classes: Vec<Vec<usize>> = Vec::new();
        let mut projection = vec![0; n];
        for x in 0..n {
            let r = self.find(x);
            let c = *class_of_root.entry(r).or_insert_with(|| {
                classes.push(Vec::new());
                classes.len() - 1
            });
            classes[c].push(x);
            projection[x] = c;
        }
        (classes, projection)
    }
}

/// Quotient of `0..n` by the equivalence relation generated by
/// `f(y) ~ g(y)`. Returns the classes and the projection.
pub fn set_coequalizer(n: usize, f: &[usize], g: &[usize]) -> (Vec<Vec<usize>>, Vec<usize>) {
    let mut uf = UnionFind::new(n);
    for (&a, &b) in f.iter().zip(g) {
        uf.union(a, b);
    }
    uf.classes()
}

/// Finite monoid given by its Cayley table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Monoid {
    name: String,
    labels: Vec<String>,
    table: Vec<Vec<usize>>,
    unit: usize,
    inverses: Option<Vec<usize>>,
}

impl Monoid {
    /// Validates closure, associativity and the unit, and detects inverses.
    pub fn new(name: &str, labels: Vec<String>, table: Vec<Vec<usize>>) -> Result<Monoid> {
        let n = labels.len();
        if n == 0 {
            return Err(Error::Precondition(
                "a monoid needs at least one element".into(),
            ));
        }
        let mut seen = HashMap::new();
        for (i, l) in labels.iter().enumerate() {
            if seen.insert(l.clone(), i).is_some() {
                return Err(Error::Parse(format!("duplicate element label {l:?}")));
            }
        }
        if table.len() != n
            || table
                .iter()
                .any(|r| r.len() != n || r.iter().any(|&v| v >= n))
        {
            return Err(Error::Parse(format!(
                "Cayley table of {name} must be {n}x{n} with entries among the elements"
            )));
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if table[table[a][b]][c] != table[a][table[b][c]] {
                        return Err(Error::Precondition(format!(
                            "{name} is not associative at ({}, {}, {})",
                            labels[a], labels[b], labels[c]
                        )));
                    }
                }
            }
        }
        let unit = (0..n)
            .find(|&e| (0..n).all(|x| table[e][x] == x && table[x][e] == x))
            .ok_or_else(|| Error::Precondition(format!("{name} has no unit element")))?;
        let inverses: Option<Vec<usize>> = (0..n)
            .map(|x| (0..n).find(|&y| table[x][y] == unit && table[y][x] == unit))
            .collect();
        Ok(Monoid {
            name: name.to_string(),
            labels,
            table,
            unit,
            inverses,
        })
    }

    pub fn from_fn(
        name: &str,
        labels: Vec<String>,
        mul: impl Fn(usize, usize) -> usize,
    ) -> Result<Monoid> {
        let n = labels.len();
        let table = (0..n)
            .map(|a| (0..n).map(|b| mul(a, b)).collect())
            .collect();
        Monoid::new(name, labels, table)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn order(&self) -> usize {
        self.labels.len()
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, g: usize) -> &str {
        &self.labels[g]
    }

    pub fn table(&self) -> &[Vec<usize>] {
        &self.table
    }

    pub fn find(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn unit(&self) -> usize {
        self.unit
    }

    pub fn is_group(&self) -> bool {
        self.inverses.is_some()
    }

    pub fn inverse(&self, g: usize) -> Option<usize> {
        self.inverses.as_ref().map(|inv| inv[g])
    }

    /// Inverse in a group; call only after checking [`Monoid::is_group`].
    pub fn inv(&self, g: usize) -> usize {
        self.inverse(g).expect("inverse requested in a monoid")
    }

    pub fn require_group(&self) -> Result<()> {
        if self.is_group() {
            Ok(())
        } else {
            Err(Error::Precondition(format!(
                "{} is a monoid, not a group",
                self.name
            )))
        }
    }

    pub fn conjugate(&self, h: usize, k: usize) -> usize {
        // h k h^{-1}
        self.mul(self.mul(h, k), self.inv(h))
    }

    pub fn is_abelian(&self) -> bool {
        self.elements()
            .all(|a| self.elements().all(|b| self.mul(a, b) == self.mul(b, a)))
    }
}

pub type Group = Monoid;

pub fn trivial_group() -> Group {
    cyclic(1, "g")
}

/// Cyclic group of order `n` with generator label `gen`: `1, gen, gen^2, ...`.
pub fn cyclic(n: usize, gen: &str) -> Group {
    let labels = (0..n)
        .map(|i| match i {
            0 => "1".to_string(),
            1 => gen.to_string(),
            _ => format!("{gen}^{i}"),
        })
        .collect();
    let name = format!("C{n}");
    Monoid::from_fn(&name, labels, |a, b| (a + b) % n).expect("cyclic group")
}

/// The symmetric group on three letters, elements in cycle notation, with
/// `(gh)(i) = g(h(i))`.
pub fn s3() -> Group {
    let perms: [[usize; 3]; 6] = [
        [0, 1, 2],
        [1, 0, 2],
        [2, 1, 0],
        [0, 2, 1],
        [1, 2, 0],
        [2, 0, 1],
    ];
    let labels = ["1", "(12)", "(13)", "(23)", "(123)", "(132)"]
        .map(String::from)
        .to_vec();
    Monoid::from_fn("S3", labels, |a, b| {
        let comp = [0, 1, 2].map(|i| perms[a][perms[b][i]]);
        perms.iter().position(|p| *p == comp).expect("closed")
    })
    .expect("S3")
}

/// The built-in groups, in a fixed order.
pub fn builtin_groups() -> Vec<Group> {
    vec![cyclic(2, "s"), cyclic(3, "g"), cyclic(4, "g"), s3()]
}

pub fn builtin_group(name: &str) -> Option<Group> {
    match name {
        "C1" | "1" | "trivial" => Some(trivial_group()),
        "C2" => Some(cyclic(2, "s")),
        "C3" => Some(cyclic(3, "g")),
        "C4" => Some(cyclic(4, "g")),
        "S3" => Some(s3()),
        _ => None,
    }
}

/// The multiplicative monoid `{0, 1}`.
pub fn two_element_monoid() -> Monoid {
    Monoid::from_fn("({0,1},*)", vec!["0".into(), "1".into()], |a, b| a * b).expect("monoid")
}

/// Monoid homomorphism given by images of elements.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Homomorphism {
    pub source: Group,
    pub target: Group,
    pub map: Vec<usize>,
}

impl Homomorphism {
    pub fn new(source: Group, target: Group, map: Vec<usize>) -> Result<Homomorphism> {
        if map.len() != source.order() || map.iter().any(|&v| v >= target.order()) {
            return Err(Error::Parse("homomorphism table has the wrong size".into()));
        }
        for a in source.elements() {
            for b in source.elements() {
                if map[source.mul(a, b)] != target.mul(map[a], map[b]) {
                    return Err(Error::Precondition(format!(
                        "map is not multiplicative at ({}, {})",
                        source.label(a),
                        source.label(b)
                    )));
                }
            }
        }
        if map[source.unit()] != target.unit() {
            return Err(Error::Precondition("map does not preserve the unit".into()));
        }
        Ok(Homomorphism {
            source,
            target,
            map,
        })
    }

    /// Map to the trivial group.
    pub fn to_trivial(source: Group) -> Homomorphism {
        let n = source.order();
        Homomorphism::new(source, trivial_group(), vec![0; n]).expect("trivial map")
    }

    /// Sign of a permutation in S3, onto C2.
    pub fn sign() -> Homomorphism {
        let s3 = s3();
        let c2 = cyclic(2, "s");
        let map = vec![0, 1, 1, 1, 0, 0];
        Homomorphism::new(s3, c2, map).expect("sign")
    }

    /// Reduction `C4 -> C2`.
    pub fn c4_to_c2() -> Homomorphism {
        Homomorphism::new(cyclic(4, "g"), cyclic(2, "s"), vec![0, 1, 0, 1]).expect("quotient")
    }

    pub fn apply(&self, g: usize) -> usize {
        self.map[g]
    }
}

/// Checks that Δ(x) = (x, x), ε(x) = *, the multiplication and the given
/// antipode make `m` a Hopf algebra in Sets.
pub fn check_set_hopf_axioms(m: &Monoid, antipode: &[usize]) -> Report {
    let mut r = Report::new(format!("Hopf algebra in Sets on {}", m.name()));
    let l = |g: usize| m.label(g).to_string();
    for a in m.elements() {
        for b in m.elements() {
            for c in m.elements() {
                let lhs = m.mul(m.mul(a, b), c);
                let rhs = m.mul(a, m.mul(b, c));
                let w = (lhs != rhs).then(|| format!("{} vs {}", l(lhs), l(rhs)));
                r.record("associativity", "(ab)c = a(bc)", idx([l(a), l(b), l(c)]), w);
            }
            // Δ(ab) = (ab, ab) and (Δa)(Δb) = (ab, ab) agree by construction;
            // recorded so every bialgebra law has an entry.
            let prod = m.mul(a, b);
            let diag = (m.mul(a, b), m.mul(a, b));
            let w = (diag != (prod, prod)).then(|| "diagonal not multiplicative".to_string());
            r.record("bialgebra Δ∘μ", "Δ(ab) = Δ(a)Δ(b)", idx([l(a), l(b)]), w);
            r.pass("bialgebra ε∘μ", "ε(ab) = ε(a)ε(b)", idx([l(a), l(b)]));
        }
        let w = (m.mul(m.unit(), a) != a || m.mul(a, m.unit()) != a).then(|| l(a));
        r.record("unit", "1a = a = a1", idx([l(a)]), w);
        r.pass("coassociativity", "(Δ×1)Δ(a) = (1×Δ)Δ(a)", idx([l(a)]));
        r.pass("counit", "(ε×1)Δ(a) = a = (1×ε)Δ(a)", idx([l(a)]));
        let left = m.mul(antipode[a], a);
        let right = m.mul(a, antipode[a]);
        let w = (left != m.unit()).then(|| format!("s({0}){0} = {1}", l(a), l(left)));
        r.record("antipode S*id", "s(a)a = 1", idx([l(a)]), w);
        let w = (right != m.unit()).then(|| format!("{0}s({0}) = {1}", l(a), l(right)));
        r.record("antipode id*S", "a s(a) = 1", idx([l(a)]), w);
    }
    r.pass("bialgebra Δ∘η", "Δ(1) = (1, 1)", vec![]);
    r.pass("bialgebra ε∘η", "ε(1) = *", vec![]);
    r
}

/// Group Hopf-algebra check with s = inverse.
pub fn check_group_hopf_axioms(g: &Group) -> Result<Report> {
    g.require_group()?;
    let s: Vec<usize> = g.elements().map(|x| g.inv(x)).collect();
    Ok(check_set_hopf_axioms(g, &s))
}

/// Convolution of two maps `X -> G` with the diagonal of `X`: the pointwise
/// product.
pub fn set_convolution(g: &Monoid, f1: &[usize], f2: &[usize]) -> Vec<usize> {
    f1.iter().zip(f2).map(|(&a, &b)| g.mul(a, b)).collect()
}

/// Right G-set with action table `action[x][g] = x·g`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RightGSet {
    group: Group,
    labels: Vec<String>,
    action: Vec<Vec<usize>>,
}

impl RightGSet {
    pub fn new(group: Group, labels: Vec<String>, action: Vec<Vec<usize>>) -> Result<RightGSet> {
        let n = labels.len();
        if action.len() != n
            || action
                .iter()
                .any(|row| row.len() != group.order() || row.iter().any(|&y| y >= n))
        {
            return Err(Error::Parse("action table has the wrong shape".into()));
        }
        for x in 0..n {
            if action[x][group.unit()] != x {
                return Err(Error::Precondition(format!(
                    "{}·1 ≠ {}",
                    labels[x], labels[x]
                )));
            }
            for g in group.elements() {
                for h in group.elements() {
                    if action[action[x][g]][h] != action[x][group.mul(g, h)] {
                        return Err(Error::Precondition(format!(
                            "action not associative at ({}, {}, {})",
                            labels[x],
                            group.label(g),
                            group.label(h)
                        )));
                    }
                }
            }
        }
        Ok(RightGSet {
            group,
            labels,
            action,
        })
    }

    pub fn from_fn(
        group: Group,
        labels: Vec<String>,
        act: impl Fn(usize, usize) -> usize,
    ) -> Result<RightGSet> {
        let action = (0..labels.len())
            .map(|x| group.elements().map(|g| act(x, g)).collect())
            .collect();
        RightGSet::new(group, labels, action)
    }

    pub fn regular(group: &Group) -> RightGSet {
        let g = group.clone();
        RightGSet::from_fn(group.clone(), group.labels().to_vec(), |x, h| g.mul(x, h))
            .expect("regular action")
    }

    pub fn trivial(group: &Group, labels: &[&str]) -> RightGSet {
        let labels = labels.iter().map(|s| s.to_string()).collect();
        RightGSet::from_fn(group.clone(), labels, |x, _| x).expect("trivial action")
    }

    /// Conjugation action `v·g = g⁻¹ v g` on the conjugacy class of `c`.
    pub fn conjugacy_class(group: &Group, c: usize) -> Result<(RightGSet, Vec<usize>)> {
        group.require_group()?;
        let mut class: Vec<usize> = group
            .elements()
            .map(|g| group.mul(group.mul(group.inv(g), c), g))
            .collect();
        class.sort_unstable();
        class.dedup();
        let labels = class.iter().map(|&v| group.label(v).to_string()).collect();
        let gr = group.clone();
        let cls = class.clone();
        let set = RightGSet::from_fn(group.clone(), labels, |i, g| {
            let w = gr.mul(gr.mul(gr.inv(g), cls[i]), g);
            cls.iter().position(|&u| u == w).expect("class closed")
        })?;
        Ok((set, class))
    }

    pub fn disjoint_union(&self, other: &RightGSet) -> RightGSet {
        let n = self.len();
        let mut labels = self.labels.clone();
        labels.extend(other.labels.iter().cloned());
        let mut action = self.action.clone();
        action.extend(
            other
                .action
                .iter()
                .map(|row| row.iter().map(|&y| y + n).collect::<Vec<_>>()),
        );
        RightGSet::new(self.group.clone(), labels, action).expect("union of G-sets")
    }

    /// Cartesian product with the diagonal action; pair `(x, y)` sits at
    /// `x * |Y| + y`.
    pub fn product(&self, other: &RightGSet) -> RightGSet {
        let m = other.len();
        let labels = self
            .labels
            .iter()
            .flat_map(|a| other.labels.iter().map(move |b| format!("{a},{b}")))
            .collect();
        RightGSet::from_fn(self.group.clone(), labels, |p, g| {
            self.act(p / m, g) * m + other.act(p % m, g)
        })
        .expect("product of G-sets")
    }

    pub fn group(&self) -> &Group {
        &self.group
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, x: usize) -> &str {
        &self.labels[x]
    }

    pub fn action_table(&self) -> &[Vec<usize>] {
        &self.action
    }

    pub fn act(&self, x: usize, g: usize) -> usize {
        self.action[x][g]
    }

    /// Orbit partition, classes ordered by least element.
    pub fn orbits(&self) -> Vec<Vec<usize>> {
        let mut uf = UnionFind::new(self.len());
        for x in 0..self.len() {
            for g in self.group.elements() {
                uf.union(x, self.act(x, g));
            }
        }
        uf.classes().0
    }

    /// The orbit set as the coequalizer of the action `X×G → X` and the
    /// projection `X×G → X`.
    pub fn orbits_by_coequalizer(&self) -> Vec<Vec<usize>> {
        let n = self.group.order();
        let mut f = Vec::new();
        let mut g = Vec::new();
        for x in 0..self.len() {
            for h in 0..n {
                f.push(self.act(x, h));
                g.push(x);
            }
        }
        set_coequalizer(self.len(), &f, &g).0
    }

    /// Whether `map: self -> other` commutes with the actions.
    pub fn is_equivariant(&self, other: &RightGSet, map: &[usize]) -> bool {
        (0..self.len()).all(|x| {
            self.group
                .elements()
                .all(|g| map[self.act(x, g)] == other.act(map[x], g))
        })
    }
}

/// Right G-set with a weight `ν: V → G` satisfying `g ν(v·g) = ν(v) g`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrossedGSet {
    pub base: RightGSet,
    pub nu: Vec<usize>,
}

impl CrossedGSet {
    /// Stores the data without validation; see [`CrossedGSet::check`].
    pub fn new(base: RightGSet, nu: Vec<usize>) -> Result<CrossedGSet> {
        if nu.len() != base.len() || nu.iter().any(|&g| g >= base.group().order()) {
            return Err(Error::Parse("weight map has the wrong size".into()));
        }
        Ok(CrossedGSet { base, nu })
    }

    /// The conjugacy class of `c` with adjoint action and inclusion weight.
    pub fn conjugacy_class(group: &Group, c: usize) -> Result<CrossedGSet> {
        let (base, class) = RightGSet::conjugacy_class(group, c)?;
        CrossedGSet::new(base, class)
    }

    /// Any G-set with weight identically 1.
    pub fn with_unit_weight(base: RightGSet) -> CrossedGSet {
        let nu = vec![base.group().unit(); base.len()];
        CrossedGSet { base, nu }
    }

    pub fn group(&self) -> &Group {
        self.base.group()
    }

    pub fn check(&self) -> Report {
        let g = self.group();
        let mut r = Report::new("crossed G-set");
        for v in 0..self.base.len() {
            for h in g.elements() {
                let lhs = g.mul(h, self.nu[self.base.act(v, h)]);
                let rhs = g.mul(self.nu[v], h);
                let w = (lhs != rhs).then(|| format!("{} vs {}", g.label(lhs), g.label(rhs)));
                r.record(
                    "crossed",
                    "g ν(v·g) = ν(v) g",
                    idx([self.base.label(v), g.label(h)]),
                    w,
                );
            }
        }
        r
    }

    /// The same condition written with inverses, for groups.
    pub fn check_with_inverses(&self) -> Result<bool> {
        let g = self.group();
        g.require_group()?;
        Ok((0..self.base.len()).all(|v| {
            g.elements()
                .all(|h| self.nu[self.base.act(v, h)] == g.mul(g.mul(g.inv(h), self.nu[v]), h))
        }))
    }
}

/// Right G-set with an equivariant weight `f: X → G`, `f(x·g) = f(x) g`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SetHopfModule {
    pub base: RightGSet,
    pub weight: Vec<usize>,
}

impl SetHopfModule {
    pub fn new(base: RightGSet, weight: Vec<usize>) -> Result<SetHopfModule> {
        if weight.len() != base.len() || weight.iter().any(|&g| g >= base.group().order()) {
            return Err(Error::Parse("weight map has the wrong size".into()));
        }
        let m = SetHopfModule { base, weight };
        let report = m.check();
        if let Some(bad) = report.failures().next() {
            return Err(Error::Precondition(format!(
                "weight not equivariant at ({})",
                bad.index.join(", ")
            )));
        }
        Ok(m)
    }

    /// `G` acting on itself with `f = id`.
    pub fn regular(group: &Group) -> SetHopfModule {
        SetHopfModule::new(RightGSet::regular(group), group.elements().collect()).expect("regular")
    }

    /// `G × T` with action on the first factor and `f` the first projection.
    pub fn free(group: &Group, tags: &[&str]) -> SetHopfModule {
        let t = tags.len();
        let labels = group
            .labels()
            .iter()
            .flat_map(|g| tags.iter().map(move |s| format!("{g},{s}")))
            .collect();
        let base = RightGSet::from_fn(group.clone(), labels, |p, h| {
            group.mul(p / t, h) * t + p % t
        })
        .expect("free G-set");
        let weight = (0..group.order() * t).map(|p| p / t).collect();
        SetHopfModule::new(base, weight).expect("free module")
    }

    /// `G × G` with the diagonal action and `f` the second projection.
    pub fn diagonal(group: &Group) -> SetHopfModule {
        let reg = RightGSet::regular(group);
        let base = reg.product(&reg);
        let n = group.order();
        let weight = (0..n * n).map(|p| p % n).collect();
        SetHopfModule::new(base, weight).expect("diagonal module")
    }

    pub fn group(&self) -> &Group {
        self.base.group()
    }

    pub fn check(&self) -> Report {
        let g = self.group();
        let mut r = Report::new("Hopf module in Sets");
        for x in 0..self.base.len() {
            for h in g.elements() {
                let lhs = self.weight[self.base.act(x, h)];
                let rhs = g.mul(self.weight[x], h);
                let w = (lhs != rhs).then(|| format!("{} vs {}", g.label(lhs), g.label(rhs)));
                r.record(
                    "equivariance",
                    "f(x·g) = f(x) g",
                    idx([self.base.label(x), g.label(h)]),
                    w,
                );
            }
        }
        r
    }

    /// Elements of weight 1.
    pub fn coinvariants(&self) -> Vec<usize> {
        let e = self.group().unit();
        (0..self.base.len())
            .filter(|&x| self.weight[x] == e)
            .collect()
    }
}

/// The bijection `X^co × G → X`, `(x, g) ↦ x·g`, with its inverse.
#[derive(Clone, Debug)]
pub struct CoinvariantBijection {
    /// Domain enumerated as coinvariant-major pairs.
    pub domain: Vec<(usize, usize)>,
    pub phi: Vec<usize>,
    pub phi_inv: Vec<usize>,
    pub verified: bool,
    pub report: Report,
}

pub fn coinvariant_bijection(m: &SetHopfModule) -> Result<CoinvariantBijection> {
    let g = m.group();
    g.require_group()?;
    let co = m.coinvariants();
    let domain: Vec<(usize, usize)> = co
        .iter()
        .flat_map(|&x| g.elements().map(move |h| (x, h)))
        .collect();
    let phi: Vec<usize> = domain.iter().map(|&(x, h)| m.base.act(x, h)).collect();
    let mut report = Report::new("coinvariants times G is X");
    let mut phi_inv = Vec::with_capacity(m.base.len());
    for x in 0..m.base.len() {
        let fx = m.weight[x];
        let pre = (m.base.act(x, g.inv(fx)), fx);
        match domain.iter().position(|&d| d == pre) {
            Some(p) => {
                phi_inv.push(p);
                report.pass(
                    "inverse lands in coinvariants",
                    "f(x f(x)⁻¹) = 1",
                    idx([m.base.label(x)]),
                );
            }
            None => {
                report.fail(
                    "inverse lands in coinvariants",
                    "f(x f(x)⁻¹) = 1",
                    idx([m.base.label(x)]),
                    format!("{} is not coinvariant", m.base.label(pre.0)),
                );
                phi_inv.push(usize::MAX);
            }
        }
    }
    if report.all_passed() {
        for (p, &(x, h)) in domain.iter().enumerate() {
            let back = phi_inv[phi[p]];
            let w = (back != p).then(|| format!("returns to position {back}"));
            report.record(
                "φ⁻¹∘φ = id",
                "φ⁻¹(x g) = (x, g)",
                idx([m.base.label(x), g.label(h)]),
                w,
            );
        }
        for x in 0..m.base.len() {
            let back = phi[phi_inv[x]];
            let w = (back != x).then(|| m.base.label(back).to_string());
            report.record("φ∘φ⁻¹ = id", "x f(x)⁻¹ f(x) = x", idx([m.base.label(x)]), w);
        }
    }
    Ok(CoinvariantBijection {
        verified: report.all_passed(),
        domain,
        phi,
        phi_inv,
        report,
    })
}

/// The bijection `X → X_G × G`, `x ↦ (x̄, f(x))`, with its inverse
/// `(x̄, g) ↦ x f(x)⁻¹ g`.
#[derive(Clone, Debug)]
pub struct OrbitBijection {
    pub orbits: Vec<Vec<usize>>,
    /// `psi[x] = (orbit, g)`.
    pub psi: Vec<(usize, usize)>,
    /// Indexed by `orbit * |G| + g`.
    pub psi_inv: Vec<usize>,
    pub verified: bool,
    pub report: Report,
}

pub fn orbit_bijection(m: &SetHopfModule) -> Result<OrbitBijection> {
    let g = m.group();
    g.require_group()?;
    let orbits = m.base.orbits();
    let mut class_of = vec![0; m.base.len()];
    for (c, orbit) in orbits.iter().enumerate() {
        for &x in orbit {
            class_of[x] = c;
        }
    }
    let psi: Vec<(usize, usize)> = (0..m.base.len())
        .map(|x| (class_of[x], m.weight[x]))
        .collect();
    let mut report = Report::new("X is orbits times G");
    let n = g.order();
    let mut psi_inv = vec![0; orbits.len() * n];
    for (c, orbit) in orbits.iter().enumerate() {
        for h in g.elements() {
            let value = |x: usize| m.base.act(m.base.act(x, g.inv(m.weight[x])), h);
            let first = value(orbit[0]);
            let clash = orbit.iter().find(|&&x| value(x) != first);
            let w = clash.map(|&x| {
                format!(
                    "representatives {} and {} give {} and {}",
                    m.base.label(orbit[0]),
                    m.base.label(x),
                    m.base.label(first),
                    m.base.label(value(x))
                )
            });
            report.record(
                "well-defined",
                "x f(x)⁻¹ g independent of x in its orbit",
                idx([format!("orbit {c}"), g.label(h).to_string()]),
                w,
            );
            psi_inv[c * n + h] = first;
        }
    }
    for x in 0..m.base.len() {
        let (c, h) = psi[x];
        let back = psi_inv[c * n + h];
        let w = (back != x).then(|| m.base.label(back).to_string());
        report.record("ψ⁻¹∘ψ = id", "ψ⁻¹(x̄, f(x)) = x", idx([m.base.label(x)]), w);
    }
    for c in 0..orbits.len() {
        for h in g.elements() {
            let y = psi_inv[c * n + h];
            let w = (psi[y] != (c, h)).then(|| {
                let (c2, h2) = psi[y];
                format!("orbit {c2}, {}", g.label(h2))
            });
            report.record(
                "ψ∘ψ⁻¹ = id",
                "ψ(x f(x)⁻¹ g) = (x̄, g)",
                idx([format!("orbit {c}"), g.label(h).to_string()]),
                w,
            );
        }
    }
    Ok(OrbitBijection {
        verified: report.all_passed(),
        orbits,
        psi,
        psi_inv,
        report,
    })
}

/// A G-set equivariant map between two registered G-sets.
#[derive(Clone, Debug)]
pub struct GSetMorphism {
    pub name: String,
    pub source: usize,
    pub target: usize,
    pub map: Vec<usize>,
}

/// Finite family of probe G-sets and morphisms among them.
#[derive(Clone, Debug)]
pub struct GSetRegistry {
    pub objects: Vec<(String, RightGSet)>,
    pub morphisms: Vec<GSetMorphism>,
}

impl GSetRegistry {
    /// Regular G-set, a one-point and a two-point trivial G-set, and
    /// `G ⊔ {pt}`; morphisms are the left translations of `G`, the maps
    /// `g ↦ x·g` out of the regular G-set, the collapse maps, and the swap
    /// of the two trivial points.
    pub fn standard(group: &Group) -> GSetRegistry {
        let reg = RightGSet::regular(group);
        let pt = RightGSet::trivial(group, &["pt"]);
        let two = RightGSet::trivial(group, &["a", "b"]);
        let mixed = reg.disjoint_union(&pt);
        let objects = vec![
            ("regular".to_string(), reg.clone()),
            ("point".to_string(), pt.clone()),
            ("two points".to_string(), two.clone()),
            ("regular+point".to_string(), mixed.clone()),
        ];
        let mut morphisms = Vec::new();
        for a in group.elements() {
            morphisms.push(GSetMorphism {
                name: format!("left translation by {}", group.label(a)),
                source: 0,
                target: 0,
                map: group.elements().map(|g| group.mul(a, g)).collect(),
            });
        }
        for (t, (tname, target)) in objects.iter().enumerate() {
            for x in 0..target.len() {
                morphisms.push(GSetMorphism {
                    name: format!("g ↦ {}·g into {tname}", target.label(x)),
                    source: 0,
                    target: t,
                    map: group.elements().map(|g| target.act(x, g)).collect(),
                });
            }
        }
        for (s, (sname, source)) in objects.iter().enumerate() {
            morphisms.push(GSetMorphism {
                name: format!("collapse {sname}"),
                source: s,
                target: 1,
                map: vec![0; source.len()],
            });
        }
        morphisms.push(GSetMorphism {
            name: "swap two points".into(),
            source: 2,
            target: 2,
            map: vec![1, 0],
        });
        let n = group.order();
        morphisms.push(GSetMorphism {
            name: "include regular into regular+point".into(),
            source: 0,
            target: 3,
            map: (0..n).collect(),
        });
        morphisms.push(GSetMorphism {
            name: "include point into regular+point".into(),
            source: 1,
            target: 3,
            map: vec![n],
        });
        GSetRegistry { objects, morphisms }
    }
}

/// `s_X(v, x) = (x·ν(v), v)`, as a map `V×X → X×V` on pair positions.
pub fn half_braiding_gsets(v: &CrossedGSet, x: &RightGSet) -> Vec<usize> {
    let nv = v.base.len();
    let nx = x.len();
    (0..nv * nx)
        .map(|p| {
            let (a, b) = (p / nx, p % nx);
            x.act(b, v.nu[a]) * nv + a
        })
        .collect()
}

/// Center axioms for the G-set half-braiding over a registry: G-linearity
/// of each `s_X`, naturality over the registered morphisms, the tensor
/// condition on pairs and the unit condition.
pub fn check_center_gsets(v: &CrossedGSet, registry: &GSetRegistry) -> Report {
    let g = v.group();
    let nv = v.base.len();
    let mut r = Report::new("half-braiding on G-sets");
    for (name, x) in &registry.objects {
        let s = half_braiding_gsets(v, x);
        let nx = x.len();
        for a in 0..nv {
            for b in 0..nx {
                for h in g.elements() {
                    let moved = s[v.base.act(a, h) * nx + x.act(b, h)];
                    let before = s[a * nx + b];
                    let after = x.act(before / nv, h) * nv + v.base.act(before % nv, h);
                    let w = (moved != after)
                        .then(|| format!("({}, {})·{}", v.base.label(a), x.label(b), g.label(h)));
                    r.record(
                        "G-linearity",
                        "s_X((v, x)·g) = s_X(v, x)·g",
                        idx([name.as_str(), v.base.label(a), x.label(b), g.label(h)]),
                        w,
                    );
                }
            }
        }
    }
    for m in &registry.morphisms {
        let xs = &registry.objects[m.source].1;
        let ys = &registry.objects[m.target].1;
        let sx = half_braiding_gsets(v, xs);
        let sy = half_braiding_gsets(v, ys);
        for a in 0..nv {
            for b in 0..xs.len() {
                let p = sx[a * xs.len() + b];
                let lhs = m.map[p / nv] * nv + p % nv;
                let rhs = sy[a * ys.len() + m.map[b]];
                let w = (lhs != rhs).then(|| format!("({}, {})", v.base.label(a), xs.label(b)));
                r.record(
                    "naturality",
                    "(a × V)∘s_X = s_Y∘(V × a)",
                    idx([m.name.as_str(), v.base.label(a), xs.label(b)]),
                    w,
                );
            }
        }
    }
    for (xname, x) in &registry.objects {
        for (yname, y) in &registry.objects {
            let xy = x.product(y);
            let sx = half_braiding_gsets(v, x);
            let sy = half_braiding_gsets(v, y);
            let sxy = half_braiding_gsets(v, &xy);
            let (nx, ny) = (x.len(), y.len());
            for a in 0..nv {
                for b in 0..nx {
                    for c in 0..ny {
                        // (s_X × Y): (v, x, y) ↦ (x', v', y)
                        let p = sx[a * nx + b];
                        let (x1, v1) = (p / nv, p % nv);
                        // (X × s_Y): (x', v', y) ↦ (x', y', v'')
                        let q = sy[v1 * ny + c];
                        let (y1, v2) = (q / nv, q % nv);
                        let lhs = (x1 * ny + y1) * nv + v2;
                        let rhs = sxy[a * (nx * ny) + b * ny + c];
                        let w = (lhs != rhs).then(|| {
                            format!("({}, {}, {})", v.base.label(a), x.label(b), y.label(c))
                        });
                        r.record(
                            "tensor",
                            "(X ⊗ s_Y)∘(s_X ⊗ Y) = s_{X⊗Y}",
                            idx([
                                xname.as_str(),
                                yname.as_str(),
                                v.base.label(a),
                                x.label(b),
                                y.label(c),
                            ]),
                            w,
                        );
                    }
                }
            }
        }
    }
    let unit = RightGSet::trivial(g, &["*"]);
    let su = half_braiding_gsets(v, &unit);
    for a in 0..nv {
        let w = (su[a] != a).then(|| v.base.label(su[a] % nv).to_string());
        r.record("unit", "s_* = id", idx([v.base.label(a)]), w);
    }
    let nu = nu_from_half_braiding(v);
    for a in 0..nv {
        let w = (nu[a] != v.nu[a]).then(|| format!("{} vs {}", g.label(nu[a]), g.label(v.nu[a])));
        r.record(
            "weight recovered",
            "s_G(v, 1) = (ν(v), v)",
            idx([v.base.label(a)]),
            w,
        );
    }
    r
}

/// Recovers ν from the half-braiding on the regular G-set: `s_G(v, 1) = (ν(v), v)`.
pub fn nu_from_half_braiding(v: &CrossedGSet) -> Vec<usize> {
    let g = v.group();
    let reg = RightGSet::regular(g);
    let s = half_braiding_gsets(v, &reg);
    let nv = v.base.len();
    (0..nv).map(|a| s[a * g.order() + g.unit()] / nv).collect()
}

/// A set over `G`: a comodule of the group in Sets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SetComodule {
    pub labels: Vec<String>,
    pub weight: Vec<usize>,
}

impl SetComodule {
    pub fn new(labels: &[&str], weight: Vec<usize>) -> SetComodule {
        SetComodule {
            labels: labels.iter().map(|s| s.to_string()).collect(),
            weight,
        }
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    /// Product with pointwise product weight.
    pub fn tensor(&self, other: &SetComodule, g: &Group) -> SetComodule {
        let mut labels = Vec::new();
        let mut weight = Vec::new();
        for (a, &fa) in self.labels.iter().zip(&self.weight) {
            for (b, &fb) in other.labels.iter().zip(&other.weight) {
                labels.push(format!("{a},{b}"));
                weight.push(g.mul(fa, fb));
            }
        }
        SetComodule { labels, weight }
    }
}

#[derive(Clone, Debug)]
pub struct ComoduleRegistry {
    pub objects: Vec<(String, SetComodule)>,
    /// `(name, source, target, map)`, each preserving weights.
    pub morphisms: Vec<(String, usize, usize, Vec<usize>)>,
}

impl ComoduleRegistry {
    /// `(G, id)`, the unit `({*}, 1)`, two points of a common weight, and
    /// `G × {a, b}` with the first projection, plus weight-preserving maps.
    pub fn standard(group: &Group) -> ComoduleRegistry {
        let n = group.order();
        let g0 = if n > 1 { 1 } else { 0 };
        let reg = SetComodule {
            labels: group.labels().to_vec(),
            weight: group.elements().collect(),
        };
        let unit = SetComodule::new(&["*"], vec![group.unit()]);
        let two = SetComodule::new(&["a", "b"], vec![g0, g0]);
        let free = SetComodule {
            labels: group
                .labels()
                .iter()
                .flat_map(|g| [format!("{g},a"), format!("{g},b")])
                .collect(),
            weight: (0..2 * n).map(|p| p / 2).collect(),
        };
        let objects = vec![
            ("regular".to_string(), reg),
            ("unit".to_string(), unit),
            ("two points".to_string(), two),
            ("G x {a,b}".to_string(), free),
        ];
        let morphisms = vec![
            ("unit into regular".to_string(), 1, 0, vec![group.unit()]),
            ("two points into regular".to_string(), 2, 0, vec![g0, g0]),
            ("swap two points".to_string(), 2, 2, vec![1, 0]),
            (
                "project G x {a,b}".to_string(),
                3,
                0,
                (0..2 * n).map(|p| p / 2).collect(),
            ),
            (
                "regular into G x {a,b}".to_string(),
                0,
                3,
                (0..n).map(|g| 2 * g).collect(),
            ),
        ];
        ComoduleRegistry { objects, morphisms }
    }
}

/// `s_X(v, x) = (x, v·f(x))`, as a map `V×X → X×V` on pair positions.
pub fn half_braiding_comodule_sets(v: &CrossedGSet, x: &SetComodule) -> Vec<usize> {
    let nv = v.base.len();
    let nx = x.len();
    (0..nv * nx)
        .map(|p| {
            let (a, b) = (p / nx, p % nx);
            b * nv + v.base.act(a, x.weight[b])
        })
        .collect()
}

/// Center axioms on sets over G: each `s_X` preserves weights, naturality,
/// tensor and unit conditions.
pub fn check_center_comodule_sets(v: &CrossedGSet, registry: &ComoduleRegistry) -> Report {
    let g = v.group();
    let nv = v.base.len();
    let mut r = Report::new("half-braiding on sets over G");
    for (name, x) in &registry.objects {
        let s = half_braiding_comodule_sets(v, x);
        let nx = x.len();
        for a in 0..nv {
            for b in 0..nx {
                let p = s[a * nx + b];
                let source_weight = g.mul(v.nu[a], x.weight[b]);
                let target_weight = g.mul(x.weight[p / nv], v.nu[p % nv]);
                let w = (source_weight != target_weight)
                    .then(|| format!("{} vs {}", g.label(source_weight), g.label(target_weight)));
                r.record(
                    "comodule map",
                    "ν(v) f(x) = f(x) ν(v·f(x))",
                    idx([name.as_str(), v.base.label(a), x.labels[b].as_str()]),
                    w,
                );
            }
        }
    }
    for (mname, s_id, t_id, map) in &registry.morphisms {
        let xs = &registry.objects[*s_id].1;
        let ys = &registry.objects[*t_id].1;
        let sx = half_braiding_comodule_sets(v, xs);
        let sy = half_braiding_comodule_sets(v, ys);
        for a in 0..nv {
            for b in 0..xs.len() {
                let p = sx[a * xs.len() + b];
                let lhs = map[p / nv] * nv + p % nv;
                let rhs = sy[a * ys.len() + map[b]];
                let w = (lhs != rhs).then(|| format!("({}, {})", v.base.label(a), xs.labels[b]));
                r.record(
                    "naturality",
                    "(a × V)∘s_X = s_Y∘(V × a)",
                    idx([mname.as_str(), v.base.label(a), xs.labels[b].as_str()]),
                    w,
                );
            }
        }
    }
    for (xname, x) in &registry.objects {
        for (yname, y) in &registry.objects {
            let xy = x.tensor(y, g);
            let sx = half_braiding_comodule_sets(v, x);
            let sy = half_braiding_comodule_sets(v, y);
            let sxy = half_braiding_comodule_sets(v, &xy);
            let (nx, ny) = (x.len(), y.len());
            for a in 0..nv {
                for b in 0..nx {
                    for c in 0..ny {
                        let p = sx[a * nx + b];
                        let (x1, v1) = (p / nv, p % nv);
                        let q = sy[v1 * ny + c];
                        let (y1, v2) = (q / nv, q % nv);
                        let lhs = (x1 * ny + y1) * nv + v2;
                        let rhs = sxy[a * (nx * ny) + b * ny + c];
                        let w = (lhs != rhs).then(|| {
                            format!("({}, {}, {})", v.base.label(a), x.labels[b], y.labels[c])
                        });
                        r.record(
                            "tensor",
                            "(X ⊗ s_Y)∘(s_X ⊗ Y) = s_{X⊗Y}",
                            idx([
                                xname.as_str(),
                                yname.as_str(),
                                v.base.label(a),
                                &x.labels[b],
                                &y.labels[c],
                            ]),
                            w,
                        );
                    }
                }
            }
        }
    }
    let unit = SetComodule::new(&["*"], vec![g.unit()]);
    let su = half_braiding_comodule_sets(v, &unit);
    for a in 0..nv {
        let w = (su[a] != a).then(|| v.base.label(su[a] % nv).to_string());
        r.record("unit", "s_* = id", idx([v.base.label(a)]), w);
    }
    let action = action_from_comodule_half_braiding(v);
    for a in 0..nv {
        for h in g.elements() {
            let (got, want) = (action[a][h], v.base.act(a, h));
            let w =
                (got != want).then(|| format!("{} vs {}", v.base.label(got), v.base.label(want)));
            r.record(
                "action recovered",
                "s_G(v, g) = (g, v·g)",
                idx([v.base.label(a), g.label(h)]),
                w,
            );
        }
    }
    r
}

/// Recovers the action from the half-braiding on `(G, id)`:
/// `s_G(v, g) = (g, v·g)`.
pub fn action_from_comodule_half_braiding(v: &CrossedGSet) -> Vec<Vec<usize>> {
    let g = v.group();
    let reg = SetComodule {
        labels: g.labels().to_vec(),
        weight: g.elements().collect(),
    };
    let s = half_braiding_comodule_sets(v, &reg);
    let nv = v.base.len();
    let n = g.order();
    (0..nv)
        .map(|a| g.elements().map(|h| s[a * n + h] % nv).collect())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtin_groups_are_groups() {
        for g in builtin_groups() {
            assert!(g.is_group(), "{}", g.name());
        }
        let s3 = s3();
        assert!(!s3.is_abelian());
        assert_eq!(s3.inv(4), 5);
    }

    #[test]
    fn two_element_monoid_fails_antipode_at_zero() {
        let m = two_element_monoid();
        assert!(!m.is_group());
        let r = check_set_hopf_axioms(&m, &[0, 1]);
        let fails: Vec<_> = r
            .failures()
            .map(|c| (c.law.as_str(), c.index[0].as_str()))
            .collect();
        assert_eq!(fails, [("antipode S*id", "0"), ("antipode id*S", "0")]);
    }

    #[test]
    fn coequalizer_examples() {
        let (classes, _) = set_coequalizer(3, &[0, 1, 2], &[0, 1, 2]);
        assert_eq!(classes.len(), 3);
        let (classes, proj) = set_coequalizer(3, &[0], &[1]);
        assert_eq!(classes, vec![vec![0, 1], vec![2]]);
        assert_eq!(proj, vec![0, 0, 1]);
    }

    #[test]
    fn orbit_examples() {
        let c2 = cyclic(2, "s");
        assert_eq!(RightGSet::regular(&c2).orbits().len(), 1);
        assert_eq!(RightGSet::trivial(&c2, &["a", "b", "c"]).orbits().len(), 3);
        let x = RightGSet::new(
            c2,
            vec!["a".into(), "b".into(), "c".into()],
            vec![vec![0, 1], vec![1, 0], vec![2, 2]],
        )
        .unwrap();
        assert_eq!(x.orbits(), vec![vec![0, 1], vec![2]]);
    }

    #[test]
    fn coinvariant_examples() {
        let c3 = cyclic(3, "g");
        assert_eq!(SetHopfModule::regular(&c3).coinvariants(), vec![0]);
        let free = SetHopfModule::free(&c3, &["a", "b"]);
        let co: Vec<_> = free
            .coinvariants()
            .iter()
            .map(|&x| free.base.label(x).to_string())
            .collect();
        assert_eq!(co, ["1,a", "1,b"]);
        // a constant weight 1 is equivariant only over the trivial group
        assert!(SetHopfModule::new(RightGSet::trivial(&c3, &["p", "q"]), vec![0, 0]).is_err());
        let one = trivial_group();
        let constant =
            SetHopfModule::new(RightGSet::trivial(&one, &["p", "q"]), vec![0, 0]).unwrap();
        assert_eq!(constant.coinvariants(), vec![0, 1]);
    }

    #[test]
    fn broken_weight_is_refused() {
        let c2 = cyclic(2, "s");
        assert!(SetHopfModule::new(RightGSet::regular(&c2), vec![0, 0]).is_err());
    }

    #[test]
    fn bijection_over_monoid_is_a_precondition_error() {
        let m = two_element_monoid();
        let base = RightGSet::regular(&m);
        let module = SetHopfModule {
            base,
            weight: vec![0, 1],
        };
        assert!(matches!(
            coinvariant_bijection(&module),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn trivial_nu_braiding_is_the_swap() {
        let s3 = s3();
        let v = CrossedGSet::with_unit_weight(RightGSet::trivial(&s3, &["u", "w"]));
        let x = RightGSet::regular(&s3);
        let s = half_braiding_gsets(&v, &x);
        for a in 0..2 {
            for b in 0..6 {
                assert_eq!(s[a * 6 + b], b * 2 + a);
            }
        }
    }
}
