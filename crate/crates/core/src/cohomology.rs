//! Brute-force group cohomology `H¹(G, Z/2^N)` for subgroups `G` of
//! `(Z/2^N)^× = Aut(Z/2^N)` acting by multiplication.
//!
//! This module is the independent oracle for the Galois-side verdicts: it
//! shares no reasoning with the place-splitting criterion. Cocycles are
//! enumerated directly — values are assigned on a generating set, propagated
//! through `c(xg) = c(x) + x·c(g)`, and checked on every pair — coboundaries
//! are listed, and quotients, restrictions, and restricted kernels are
//! computed on explicit representatives.

use std::collections::HashMap;

/// Failure modes of the cohomology computations.
#[derive(Clone, PartialEq, Eq, Debug, thiserror::Error)]
pub enum CohomologyError {
    #[error("group of order {order} exceeds the enumeration bound 128")]
    TooLarge { order: usize },
    #[error("the claimed subgroup is not contained in the group (or exponents differ)")]
    NotASubgroup,
    #[error("element {element} is not an odd residue modulo 2^{exponent}")]
    InvalidElement { element: u32, exponent: u32 },
}

/// A multiplicatively closed set of odd residues modulo `2^N`, i.e. a
/// subgroup of `(Z/2^N)^×`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct UnitSubgroup {
    exponent: u32,
    elements: Vec<u32>,
}

impl UnitSubgroup {
    /// The closure of `generators` inside `(Z/2^N)^×`.
    pub fn generated_by(exponent: u32, generators: &[u32]) -> Result<UnitSubgroup, CohomologyError> {
        assert!((1..=16).contains(&exponent), "exponent out of range");
        let modulus = 1u32 << exponent;
        for &g in generators {
            if g % 2 == 0 || g >= modulus {
                return Err(CohomologyError::InvalidElement { element: g, exponent });
            }
        }
        let mut elements = vec![1u32];
        let mut frontier = vec![1u32];
        while let Some(x) = frontier.pop() {
            for &g in generators {
                let y = (x * g) % modulus;
                if !elements.contains(&y) {
                    elements.push(y);
                    frontier.push(y);
                }
            }
        }
        elements.sort_unstable();
        Ok(UnitSubgroup { exponent, elements })
    }

    /// All of `(Z/2^N)^×`.
    pub fn full_units(exponent: u32) -> UnitSubgroup {
        let modulus = 1u32 << exponent;
        let generators: Vec<u32> = (1..modulus).step_by(2).collect();
        UnitSubgroup::generated_by(exponent, &generators).expect("odd residues are valid")
    }

    /// The trivial subgroup {1}.
    pub fn trivial(exponent: u32) -> UnitSubgroup {
        UnitSubgroup::generated_by(exponent, &[]).expect("empty generating set is valid")
    }

    /// Every subgroup of `(Z/2^N)^×`, sorted by order then by element list.
    ///
    /// `(Z/2^N)^×` is abelian of rank ≤ 2, so closures of element pairs
    /// exhaust the subgroups.
    pub fn all_subgroups(exponent: u32) -> Vec<UnitSubgroup> {
        let units = UnitSubgroup::full_units(exponent);
        let mut found: Vec<UnitSubgroup> = Vec::new();
        for &a in &units.elements {
            for &b in &units.elements {
                let g = UnitSubgroup::generated_by(exponent, &[a, b])
                    .expect("unit elements are valid generators");
                if !found.contains(&g) {
                    found.push(g);
                }
            }
        }
        found.sort_by(|x, y| (x.order(), &x.elements).cmp(&(y.order(), &y.elements)));
        found
    }

    pub fn exponent(&self) -> u32 {
        self.exponent
    }

    /// The modulus `2^N` of the module acted on.
    pub fn modulus(&self) -> u32 {
        1u32 << self.exponent
    }

    /// Elements in increasing order, starting with 1.
    pub fn elements(&self) -> &[u32] {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, x: u32) -> bool {
        self.elements.binary_search(&x).is_ok()
    }

    pub fn is_subgroup_of(&self, other: &UnitSubgroup) -> bool {
        self.exponent == other.exponent && self.elements.iter().all(|&x| other.contains(x))
    }

    pub fn contains_minus_one(&self) -> bool {
        self.contains(self.modulus() - 1)
    }

    /// Whether some element generates the whole subgroup.
    pub fn is_cyclic(&self) -> bool {
        self.elements.iter().any(|&g| {
            UnitSubgroup::generated_by(self.exponent, &[g])
                .expect("elements are valid")
                .order()
                == self.order()
        })
    }

    /// A minimal generating set, chosen greedily over the sorted elements.
    fn generating_set(&self) -> Vec<u32> {
        let mut generators = Vec::new();
        let mut span = UnitSubgroup::trivial(self.exponent);
        for &g in &self.elements {
            if !span.contains(g) {
                generators.push(g);
                span = UnitSubgroup::generated_by(self.exponent, &generators)
                    .expect("elements are valid");
            }
        }
        generators
    }
}

/// A 1-cocycle `c: G → Z/2^N`, stored as values aligned with the group's
/// sorted element list and validated on every pair at construction.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Cocycle {
    group: UnitSubgroup,
    values: Vec<u32>,
}

impl Cocycle {
    /// Validate `c(gh) = c(g) + g·c(h)` on all pairs (so in particular
    /// `c(1) = 0`) and package the map.
    pub fn new(group: UnitSubgroup, values: Vec<u32>) -> Option<Cocycle> {
        if values.len() != group.order() {
            return None;
        }
        let modulus = group.modulus();
        if values.iter().any(|&v| v >= modulus) {
            return None;
        }
        let index: HashMap<u32, usize> =
            group.elements.iter().enumerate().map(|(i, &g)| (g, i)).collect();
        for (i, &g) in group.elements.iter().enumerate() {
            for (j, &h) in group.elements.iter().enumerate() {
                let gh = (g * h) % modulus;
                let expected = (values[i] + g * values[j]) % modulus;
                if values[index[&gh]] != expected {
                    return None;
                }
            }
        }
        Some(Cocycle { group, values })
    }

    /// The coboundary `g ↦ (g − 1)·m`.
    pub fn coboundary(group: UnitSubgroup, m: u32) -> Cocycle {
        let modulus = group.modulus();
        let values = group.elements.iter().map(|&g| ((g - 1) * m) % modulus).collect();
        Cocycle::new(group, values).expect("coboundaries satisfy the cocycle identity")
    }

    pub fn group(&self) -> &UnitSubgroup {
        &self.group
    }

    /// Values aligned with `group().elements()`.
    pub fn values(&self) -> &[u32] {
        &self.values
    }

    pub fn value_at(&self, g: u32) -> u32 {
        let i = self
            .group
            .elements
            .binary_search(&g)
            .expect("element must belong to the group");
        self.values[i]
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(|&v| v == 0)
    }

    /// Whether the cocycle is a coboundary, by scanning all `m`.
    pub fn is_coboundary(&self) -> bool {
        let modulus = self.group.modulus();
        (0..modulus).any(|m| {
            self.group
                .elements
                .iter()
                .zip(&self.values)
                .all(|(&g, &v)| v == ((g - 1) * m) % modulus)
        })
    }

    /// Restrict to a subgroup.
    pub fn restrict(&self, subgroup: &UnitSubgroup) -> Result<Cocycle, CohomologyError> {
        if !subgroup.is_subgroup_of(&self.group) {
            return Err(CohomologyError::NotASubgroup);
        }
        let values = subgroup.elements.iter().map(|&g| self.value_at(g)).collect();
        Ok(Cocycle::new(subgroup.clone(), values)
            .expect("a restricted cocycle satisfies the identity"))
    }

    fn add(&self, other: &Cocycle) -> Cocycle {
        debug_assert_eq!(self.group, other.group);
        let modulus = self.group.modulus();
        let values = self
            .values
            .iter()
            .zip(&other.values)
            .map(|(&a, &b)| (a + b) % modulus)
            .collect();
        Cocycle { group: self.group.clone(), values }
    }

    fn scale(&self, k: u32) -> Cocycle {
        let modulus = self.group.modulus();
        let values = self.values.iter().map(|&v| (v * k) % modulus).collect();
        Cocycle { group: self.group.clone(), values }
    }
}

/// `H¹(G, Z/2^N)` with explicit data: the order, one representative cocycle
/// per cohomology class (lexicographically minimal in its class, sorted), and
/// the cyclic factor decomposition.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct H1Result {
    order: u64,
    representatives: Vec<Cocycle>,
    structure: Vec<u64>,
}

impl H1Result {
    pub fn order(&self) -> u64 {
        self.order
    }

    /// One cocycle per class; the zero cocycle (trivial class) comes first.
    pub fn representatives(&self) -> &[Cocycle] {
        &self.representatives
    }

    /// Cyclic factor orders, largest first; empty for the trivial group.
    pub fn structure(&self) -> &[u64] {
        &self.structure
    }
}

/// Compute `H¹(G, Z/2^N)` by direct enumeration.
///
/// `Z¹` is produced by assigning arbitrary values on a minimal generating
/// set and propagating `c(xg) = c(x) + x·c(g)` with consistency checks;
/// every surviving assignment is re-validated on all pairs. The quotient by
/// the coboundaries keeps the lexicographically least vector of each class.
pub fn h1_compute(group: &UnitSubgroup) -> Result<H1Result, CohomologyError> {
    if group.order() > 128 {
        return Err(CohomologyError::TooLarge { order: group.order() });
    }
    let modulus = group.modulus();
    let generators = group.generating_set();
    let index: HashMap<u32, usize> =
        group.elements.iter().enumerate().map(|(i, &g)| (g, i)).collect();

    // Enumerate all generator assignments; propagate each to a full map.
    let mut cocycles = Vec::new();
    let mut assignment = vec![0u32; generators.len()];
    loop {
        if let Some(values) = propagate(group, &generators, &assignment, &index) {
            let cocycle = Cocycle::new(group.clone(), values)
                .expect("propagated assignments satisfy the identity on all pairs");
            cocycles.push(cocycle);
        }
        // Odometer over assignments in M^generators.
        let mut pos = 0;
        loop {
            if pos == assignment.len() {
                break;
            }
            assignment[pos] += 1;
            if assignment[pos] < modulus {
                break;
            }
            assignment[pos] = 0;
            pos += 1;
        }
        if pos == assignment.len() {
            break;
        }
    }

    let coboundaries: Vec<Cocycle> = (0..modulus)
        .map(|m| Cocycle::coboundary(group.clone(), m))
        .collect();

    // Quotient: canonical (lex-least) vector per class.
    let mut representatives: Vec<Cocycle> = Vec::new();
    let mut seen: Vec<Vec<u32>> = Vec::new();
    for z in &cocycles {
        let canon = coboundaries
            .iter()
            .map(|b| z.add(b).values)
            .min()
            .expect("at least the zero coboundary exists");
        if !seen.contains(&canon) {
            seen.push(canon.clone());
            representatives.push(
                Cocycle::new(group.clone(), canon).expect("class representative is a cocycle"),
            );
        }
    }
    representatives.sort_by(|a, b| a.values.cmp(&b.values));
    let order = representatives.len() as u64;
    let structure = cyclic_structure(&representatives);
    Ok(H1Result { order, representatives, structure })
}

/// Propagate a generator assignment to all of `G`; `None` on conflict.
fn propagate(
    group: &UnitSubgroup,
    generators: &[u32],
    assignment: &[u32],
    index: &HashMap<u32, usize>,
) -> Option<Vec<u32>> {
    let modulus = group.modulus();
    let mut values: Vec<Option<u32>> = vec![None; group.order()];
    values[index[&1]] = Some(0);
    let mut frontier = vec![1u32];
    while let Some(x) = frontier.pop() {
        let cx = values[index[&x]].expect("frontier elements are assigned");
        for (g, &cg) in generators.iter().zip(assignment) {
            let y = (x * g) % modulus;
            let candidate = (cx + x * cg) % modulus;
            match values[index[&y]] {
                Some(known) if known != candidate => return None,
                Some(_) => {}
                None => {
                    values[index[&y]] = Some(candidate);
                    frontier.push(y);
                }
            }
        }
    }
    values.into_iter().collect()
}

/// Cyclic factor orders of the (finite abelian 2-group) quotient, largest
/// first, recovered from the counts of classes killed by each power of 2.
fn cyclic_structure(representatives: &[Cocycle]) -> Vec<u64> {
    let total = representatives.len() as u64;
    if total <= 1 {
        return Vec::new();
    }
    // killed[i] = #classes annihilated by 2^i; s_i = #cyclic factors of
    // order ≥ 2^i is the log₂ of each successive ratio.
    let mut ranks = Vec::new();
    let mut prev = 1u64;
    for i in 1.. {
        let killed = representatives
            .iter()
            .filter(|r| r.scale(1 << i).is_coboundary())
            .count() as u64;
        let ratio = killed / prev;
        debug_assert_eq!(killed % prev, 0, "2-group order counts divide");
        ranks.push(ratio.trailing_zeros() as u64);
        prev = killed;
        if killed == total {
            break;
        }
    }
    // ranks[i-1] = #factors of order ≥ 2^i; read the partition off its
    // conjugate.
    let mut factors = Vec::new();
    for (i, &count) in ranks.iter().enumerate() {
        let deeper = ranks.get(i + 1).copied().unwrap_or(0);
        for _ in 0..(count - deeper) {
            factors.push(1u64 << (i + 1));
        }
    }
    factors.sort_unstable_by(|a, b| b.cmp(a));
    debug_assert_eq!(factors.iter().product::<u64>(), total);
    factors
}

/// The restriction map `H¹(G, M) → H¹(G′, M)` described on representatives.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Restriction {
    /// For each source representative, the index of the target representative
    /// cohomologous to its restriction.
    images: Vec<usize>,
    kernel_order: u64,
}

impl Restriction {
    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn kernel_order(&self) -> u64 {
        self.kernel_order
    }

    /// Whether every class restricts to the trivial class.
    pub fn is_zero(&self) -> bool {
        self.images.iter().all(|&i| i == 0)
    }
}

/// Describe the restriction `H¹(G, M) → H¹(G′, M)` on representatives.
pub fn h1_restrict(
    group: &UnitSubgroup,
    subgroup: &UnitSubgroup,
) -> Result<Restriction, CohomologyError> {
    if !subgroup.is_subgroup_of(group) {
        return Err(CohomologyError::NotASubgroup);
    }
    let source = h1_compute(group)?;
    let target = h1_compute(subgroup)?;
    let mut images = Vec::with_capacity(source.representatives.len());
    for rep in &source.representatives {
        let restricted = rep.restrict(subgroup)?;
        let position = target
            .representatives
            .iter()
            .position(|t| restricted.add(&negate(t)).is_coboundary())
            .expect("every restriction lands in some class");
        images.push(position);
    }
    let kernel_order = images.iter().filter(|&&i| i == 0).count() as u64;
    Ok(Restriction { images, kernel_order })
}

/// The everywhere-locally-trivial classes: the kernel of the simultaneous
/// restriction of `H¹(G, M)` to every subgroup in `family`, returned with the
/// same explicit data as [`h1_compute`].
pub fn sha1_kernel(
    group: &UnitSubgroup,
    family: &[UnitSubgroup],
) -> Result<H1Result, CohomologyError> {
    for member in family {
        if !member.is_subgroup_of(group) {
            return Err(CohomologyError::NotASubgroup);
        }
    }
    let h1 = h1_compute(group)?;
    let representatives: Vec<Cocycle> = h1
        .representatives
        .iter()
        .filter(|rep| {
            family.iter().all(|member| {
                rep.restrict(member).expect("family members are subgroups").is_coboundary()
            })
        })
        .cloned()
        .collect();
    let order = representatives.len() as u64;
    let structure = cyclic_structure(&representatives);
    Ok(H1Result { order, representatives, structure })
}

fn negate(c: &Cocycle) -> Cocycle {
    let modulus = c.group.modulus();
    c.scale(modulus - 1)
}

/// One row of the exhaustive survey: a subgroup, its brute-force `H¹` order,
/// and the closed-form prediction "2 iff `N ≥ 3` and `−1 ∈ G`, else 1",
/// together with the proper-subgroup restriction check.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct H1TableRow {
    pub exponent: u32,
    pub elements: Vec<u32>,
    pub computed_order: u64,
    pub predicted_order: u64,
    pub cyclic: bool,
    pub has_minus_one: bool,
    /// Restriction to every proper subgroup is the zero map.
    pub proper_restrictions_zero: bool,
    /// Brute force agrees with the closed form.
    pub agrees: bool,
}

/// Survey every subgroup of `(Z/2^N)^×` for `1 ≤ N ≤ n_max ≤ 6`, comparing
/// brute force against the closed form. Disagreements are reported, not
/// asserted away: the row's `agrees` flag carries the verdict.
pub fn h1_table(n_max: u32) -> Result<Vec<H1TableRow>, CohomologyError> {
    assert!((1..=6).contains(&n_max), "survey exponent capped at 6");
    let mut rows = Vec::new();
    for exponent in 1..=n_max {
        let subgroups = UnitSubgroup::all_subgroups(exponent);
        for group in &subgroups {
            let computed = h1_compute(group)?;
            let has_minus_one = group.contains_minus_one();
            let predicted = if exponent >= 3 && has_minus_one { 2 } else { 1 };
            let proper_restrictions_zero = subgroups
                .iter()
                .filter(|sub| sub.is_subgroup_of(group) && sub.order() < group.order())
                .map(|sub| h1_restrict(group, sub).map(|r| r.is_zero()))
                .collect::<Result<Vec<bool>, _>>()?
                .into_iter()
                .all(|zero| zero);
            rows.push(H1TableRow {
                exponent,
                elements: group.elements.clone(),
                computed_order: computed.order(),
                predicted_order: predicted,
                cyclic: group.is_cyclic(),
                has_minus_one,
                proper_restrictions_zero,
                agrees: computed.order() == predicted,
            });
        }
    }
    Ok(rows)
}
