//! Finite permutation groups materialized as full multiplication tables.

use std::collections::{HashMap, VecDeque};
use std::sync::Arc;

use crate::error::{Error, Result};

/// Default bound on the order of a generated group.
pub const DEFAULT_ORDER_BOUND: usize = 10_000;

/// A finite group given by an element list and a multiplication table.
///
/// Elements are enumerated breadth-first from the identity over the generator
/// list (right multiplication), so the identity sits at index 0 and the
/// enumeration is reproducible. Permutations compose right to left:
/// `(a * b)(x) = a(b(x))`.
#[derive(Clone, Debug)]
pub struct GroupData {
    degree: usize,
    perms: Vec<Vec<u32>>,
    labels: Vec<String>,
    table: Vec<u32>,
    inverse: Vec<usize>,
    generators: Vec<usize>,
    parent: Vec<Option<(usize, usize)>>,
}

impl PartialEq for GroupData {
    fn eq(&self, other: &Self) -> bool {
        self.degree == other.degree && self.perms == other.perms && self.generators == other.generators
    }
}

impl Eq for GroupData {}

/// Parses a permutation of `{1, .., degree}` written as disjoint cycles.
pub fn permutation_from_cycles(degree: usize, cycles: &[Vec<usize>]) -> Result<Vec<u32>> {
    let mut image: Vec<u32> = (0..degree as u32).collect();
    let mut seen = vec![false; degree];
    for cycle in cycles {
        if cycle.is_empty() {
            return Err(Error::DegeneratePermutation("empty cycle".into()));
        }
        for &pt in cycle {
            if pt == 0 || pt > degree {
                return Err(Error::DegeneratePermutation(format!(
                    "point {pt} outside 1..={degree}"
                )));
            }
            if std::mem::replace(&mut seen[pt - 1], true) {
                return Err(Error::DegeneratePermutation(format!("point {pt} repeated")));
            }
        }
        for (k, &pt) in cycle.iter().enumerate() {
            let next = cycle[(k + 1) % cycle.len()];
            image[pt - 1] = (next - 1) as u32;
        }
    }
    Ok(image)
}

fn compose(a: &[u32], b: &[u32]) -> Vec<u32> {
    b.iter().map(|&x| a[x as usize]).collect()
}

impl GroupData {
    /// Generates the group from permutation images (0-based) with the default order bound.
    pub fn from_permutations(generators: &[Vec<u32>]) -> Result<Self> {
        Self::from_permutations_bounded(generators, DEFAULT_ORDER_BOUND)
    }

    /// Generates the group from generators written in cycle notation on `1..=n`.
    /// The degree is the largest point mentioned.
    pub fn from_cycles(generators: &[Vec<Vec<usize>>]) -> Result<Self> {
        let degree = generators.iter().flatten().flatten().copied().max().unwrap_or(0);
        let perms = generators
            .iter()
            .map(|g| permutation_from_cycles(degree, g))
            .collect::<Result<Vec<_>>>()?;
        Self::from_permutations(&perms)
    }

    pub fn from_permutations_bounded(generators: &[Vec<u32>], bound: usize) -> Result<Self> {
        let degree = generators.first().map_or(0, Vec::len);
        for g in generators {
            if g.len() != degree {
                return Err(Error::DegeneratePermutation(format!(
                    "generators act on {} and {} points",
                    degree,
                    g.len()
                )));
            }
            let mut hit = vec![false; degree];
            for &x in g {
                if x as usize >= degree || std::mem::replace(&mut hit[x as usize], true) {
                    return Err(Error::DegeneratePermutation(format!("{g:?} is not a bijection")));
                }
            }
        }

        let identity: Vec<u32> = (0..degree as u32).collect();
        let mut index: HashMap<Vec<u32>, usize> = HashMap::new();
        let mut perms = vec![identity.clone()];
        let mut labels = vec!["e".to_string()];
        let mut parent = vec![None];
        index.insert(identity, 0);
        // right[x * ngens + s] = index of x * gen_s
        let mut right: Vec<usize> = Vec::new();
        let mut queue = VecDeque::from([0usize]);
        while let Some(x) = queue.pop_front() {
            for (s, gen) in generators.iter().enumerate() {
                let y = compose(&perms[x], gen);
                let idx = match index.get(&y) {
                    Some(&i) => i,
                    None => {
                        let i = perms.len();
                        if i >= bound {
                            return Err(Error::OrderBoundExceeded(bound));
                        }
                        labels.push(if x == 0 {
                            format!("g{s}")
                        } else {
                            format!("{}*g{s}", labels[x])
                        });
                        parent.push(Some((x, s)));
                        index.insert(y.clone(), i);
                        perms.push(y);
                        queue.push_back(i);
                        i
                    }
                };
                right.push(idx);
            }
        }
        let n = perms.len();
        let ngens = generators.len();
        let gen_index: Vec<usize> = generators.iter().map(|g| index[g]).collect();

        // table[a][b] from the BFS tree of b: a * b = (a * parent(b)) * gen
        let mut table = vec![0u32; n * n];
        for a in 0..n {
            table[a * n] = a as u32;
            for b in 1..n {
                let (pb, s) = parent[b].expect("non-identity element has a parent");
                let ab_parent = table[a * n + pb] as usize;
                table[a * n + b] = right[ab_parent * ngens + s] as u32;
            }
        }
        let mut inverse = vec![usize::MAX; n];
        for a in 0..n {
            for b in 0..n {
                if table[a * n + b] == 0 {
                    inverse[a] = b;
                    break;
                }
            }
        }

        let group = GroupData { degree, perms, labels, table, inverse, generators: gen_index, parent };
        group.validate()?;
        Ok(group)
    }

    fn validate(&self) -> Result<()> {
        let n = self.order();
        for a in 0..n {
            if self.mul(0, a) != a || self.mul(a, 0) != a {
                return Err(Error::InvalidGroup(format!("identity law fails at {a}")));
            }
            let inv = self.inverse[a];
            if inv == usize::MAX || self.mul(inv, a) != 0 {
                return Err(Error::InvalidGroup(format!("inverse of {a} inconsistent")));
            }
        }
        // exhaustive up to 128 elements, a fixed stride sample beyond
        let step = if n <= 128 { 1 } else { n / 37 + 1 };
        for a in (0..n).step_by(step) {
            for b in (0..n).step_by(step) {
                for c in (0..n).step_by(step) {
                    if self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c)) {
                        return Err(Error::InvalidGroup(format!("associativity fails at ({a},{b},{c})")));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn order(&self) -> usize {
        self.perms.len()
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order() + b] as usize
    }

    pub fn inverse(&self, a: usize) -> usize {
        self.inverse[a]
    }

    /// Element indices of the generators, in input order.
    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    pub fn label(&self, a: usize) -> &str {
        &self.labels[a]
    }

    pub fn permutation(&self, a: usize) -> &[u32] {
        &self.perms[a]
    }

    /// Index of a permutation given by its images, if it lies in the group.
    pub fn find(&self, perm: &[u32]) -> Option<usize> {
        self.perms.iter().position(|q| q == perm)
    }

    /// Breadth-first tree edge `(parent, generator position)` with `a = parent * gen`.
    pub fn tree_parent(&self, a: usize) -> Option<(usize, usize)> {
        self.parent[a]
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != 0 {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }
}

/// A subgroup `H` of a [`GroupData`] together with its left coset decomposition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubgroupData {
    group: Arc<GroupData>,
    elements: Vec<usize>,
    generators: Vec<usize>,
    reps: Vec<usize>,
    coset_of: Vec<usize>,
    h_part: Vec<usize>,
}

impl SubgroupData {
    /// Smallest subgroup containing `elements`.
    ///
    /// Generators are the inputs that enlarge the running closure, in input
    /// order. Coset representatives are chosen greedily as the smallest
    /// unassigned element index.
    pub fn closure(group: Arc<GroupData>, elements: &[usize]) -> Result<Self> {
        let n = group.order();
        if let Some(&bad) = elements.iter().find(|&&e| e >= n) {
            return Err(Error::InvalidGroup(format!("element index {bad} out of range 0..{n}")));
        }
        let mut member = vec![false; n];
        member[0] = true;
        let mut members = vec![0usize];
        let mut generators = Vec::new();
        for &e in elements {
            if member[e] {
                continue;
            }
            generators.push(e);
            // re-close: BFS from every current member over all generators
            let mut queue: VecDeque<usize> = members.iter().copied().collect();
            while let Some(x) = queue.pop_front() {
                for &s in &generators {
                    let y = group.mul(x, s);
                    if !member[y] {
                        member[y] = true;
                        members.push(y);
                        queue.push_back(y);
                    }
                }
            }
        }
        members.sort_unstable();

        let mut coset_of = vec![usize::MAX; n];
        let mut h_part = vec![usize::MAX; n];
        let mut reps = Vec::new();
        for g in 0..n {
            if coset_of[g] != usize::MAX {
                continue;
            }
            let c = reps.len();
            reps.push(g);
            for &h in &members {
                let x = group.mul(g, h);
                coset_of[x] = c;
                h_part[x] = h;
            }
        }
        Ok(SubgroupData { group, elements: members, generators, reps, coset_of, h_part })
    }

    pub fn trivial(group: Arc<GroupData>) -> Self {
        Self::closure(group, &[]).expect("trivial subgroup")
    }

    pub fn whole(group: Arc<GroupData>) -> Self {
        let gens = group.generators().to_vec();
        Self::closure(group, &gens).expect("whole group")
    }

    pub fn group(&self) -> &Arc<GroupData> {
        &self.group
    }

    /// Sorted element indices (in the parent group).
    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, g: usize) -> bool {
        self.elements.binary_search(&g).is_ok()
    }

    /// Generators as parent-group element indices.
    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    pub fn index(&self) -> usize {
        self.reps.len()
    }

    pub fn coset_reps(&self) -> &[usize] {
        &self.reps
    }

    /// `(c, h)` with `g = reps[c] * h` and `h` in the subgroup.
    pub fn coset_lookup(&self, g: usize) -> (usize, usize) {
        (self.coset_of[g], self.h_part[g])
    }
}
