use std::collections::BTreeMap;
use std::fmt;

use super::FiniteGroupTable;

/// Isomorphism invariants used to identify small groups.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Fingerprint {
    pub order: usize,
    pub abelian: bool,
    /// element order -> number of elements of that order
    pub order_histogram: BTreeMap<usize, usize>,
    pub exponent: usize,
    pub center_order: usize,
    pub derived_order: usize,
    /// Invariant factors of the abelianization, largest first.
    pub abelianization: Vec<usize>,
}

impl fmt::Display for Fingerprint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let hist: Vec<String> = self.order_histogram.iter().map(|(o, c)| format!("{o}:{c}")).collect();
        let ab: Vec<String> = self.abelianization.iter().map(usize::to_string).collect();
        write!(
            f,
            "order={} abelian={} orders={{{}}} exponent={} center={} derived={} abelianization=({})",
            self.order,
            self.abelian,
            hist.join(","),
            self.exponent,
            self.center_order,
            self.derived_order,
            ab.join(",")
        )
    }
}

pub fn fingerprint(t: &FiniteGroupTable) -> Fingerprint {
    let n = t.order();
    let orders: Vec<usize> = (0..n).map(|g| t.element_order(g)).collect();
    let mut order_histogram = BTreeMap::new();
    for &o in &orders {
        *order_histogram.entry(o).or_insert(0) += 1;
    }
    let exponent = orders.iter().fold(1, |acc, &o| num_integer::lcm(acc, o));
    let center_order = (0..n).filter(|&z| (0..n).all(|g| t.mul(z, g) == t.mul(g, z))).count();
    let derived = derived_subgroup(t);
    let abelianization = abelianization_invariants(t, &derived);
    Fingerprint {
        order: n,
        abelian: center_order == n,
        order_histogram,
        exponent,
        center_order,
        derived_order: derived.iter().filter(|&&b| b).count(),
        abelianization,
    }
}

/// Membership mask of the subgroup generated by all commutators.
fn derived_subgroup(t: &FiniteGroupTable) -> Vec<bool> {
    let n = t.order();
    let mut gens = Vec::new();
    for a in 0..n {
        for b in 0..n {
            let c = t.mul(t.mul(a, b), t.mul(t.inv(a), t.inv(b)));
            gens.push(c);
        }
    }
    gens.sort_unstable();
    gens.dedup();
    let mut member = vec![false; n];
    member[t.identity()] = true;
    let mut stack = vec![t.identity()];
    while let Some(g) = stack.pop() {
        for &c in &gens {
            let h = t.mul(g, c);
            if !member[h] {
                member[h] = true;
                stack.push(h);
            }
        }
    }
    member
}

/// Invariant factors of `G/N` for normal `N`, from counts of elements of
/// prime-power order in the quotient.
fn abelianization_invariants(t: &FiniteGroupTable, normal: &[bool]) -> Vec<usize> {
    let n = t.order();
    // one representative per coset gN
    let mut coset_of = vec![usize::MAX; n];
    let mut reps = Vec::new();
    for g in 0..n {
        if coset_of[g] != usize::MAX {
            continue;
        }
        let id = reps.len();
        reps.push(g);
        for (h, &inn) in normal.iter().enumerate() {
            if inn {
                coset_of[t.mul(g, h)] = id;
            }
        }
    }
    let q = reps.len();
    let quotient_order = |g: usize| {
        let mut k = 1;
        let mut x = g;
        while !normal[x] {
            x = t.mul(x, g);
            k += 1;
        }
        k
    };
    let qorders: Vec<usize> = reps.iter().map(|&g| quotient_order(g)).collect();
    // primary decomposition: for each p, exponents a_1 >= a_2 >= ...
    let mut primary: BTreeMap<usize, Vec<u32>> = BTreeMap::new();
    for p in prime_factors(q) {
        let full = log_exact(p_part(q, p), p);
        let mut counts = Vec::new(); // counts[k] = log_p #{x : x^{p^k} = 1}
        let mut k = 0u32;
        loop {
            let pk = p.pow(k);
            let c = qorders.iter().filter(|&&o| pk % o == 0).count();
            let log = log_exact(c, p);
            counts.push(log);
            if log == full {
                break;
            }
            k += 1;
        }
        // number of cyclic factors of order >= p^k is counts[k] - counts[k-1]
        let mut exps = Vec::new();
        for k in 1..counts.len() {
            let ge_k = counts[k] - counts[k - 1];
            let ge_next = if k + 1 < counts.len() { counts[k + 1] - counts[k] } else { 0 };
            for _ in 0..(ge_k - ge_next) {
                exps.push(k as u32);
            }
        }
        exps.sort_unstable_by(|a, b| b.cmp(a));
        primary.insert(p, exps);
    }
    let len = primary.values().map(Vec::len).max().unwrap_or(0);
    (0..len)
        .map(|i| primary.iter().map(|(&p, e)| e.get(i).map_or(1, |&k| p.pow(k))).product())
        .collect()
}

fn prime_factors(mut n: usize) -> Vec<usize> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            out.push(p);
            while n.is_multiple_of(p) {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

fn p_part(mut n: usize, p: usize) -> usize {
    let mut out = 1;
    while n.is_multiple_of(p) {
        n /= p;
        out *= p;
    }
    out
}

fn log_exact(mut c: usize, p: usize) -> usize {
    let mut k = 0;
    while c > 1 {
        assert_eq!(c % p, 0, "subgroup of a p-group has p-power order");
        c /= p;
        k += 1;
    }
    k
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::direct_product;

    #[test]
    fn quaternion_fingerprint() {
        let f = fingerprint(&FiniteGroupTable::quaternion());
        assert_eq!(f.order, 8);
        assert!(!f.abelian);
        assert_eq!(f.order_histogram, BTreeMap::from([(1, 1), (2, 1), (4, 6)]));
        assert_eq!(f.center_order, 2);
        assert_eq!(f.derived_order, 2);
        assert_eq!(f.abelianization, vec![2, 2]);
    }

    #[test]
    fn abelian_invariants() {
        let c6xc2 = direct_product(&FiniteGroupTable::cyclic(6), &FiniteGroupTable::cyclic(2));
        assert_eq!(fingerprint(&c6xc2).abelianization, vec![6, 2]);
        let c2xc3 = direct_product(&FiniteGroupTable::cyclic(2), &FiniteGroupTable::cyclic(3));
        let f = fingerprint(&c2xc3);
        assert!(f.abelian);
        assert_eq!(f.abelianization, vec![6]);
        assert_eq!(fingerprint(&FiniteGroupTable::cyclic(1)).abelianization, Vec::<usize>::new());
        let c4xc2xc2 = direct_product(&c6xc2, &FiniteGroupTable::cyclic(1));
        assert_eq!(fingerprint(&c4xc2xc2).abelianization, vec![6, 2]);
    }

    #[test]
    fn symmetric_group_invariants() {
        let s3 = FiniteGroupTable::from_permutations(&[("a", vec![1, 0, 2]), ("b", vec![0, 2, 1])]).unwrap();
        let f = fingerprint(&s3);
        assert_eq!(f.derived_order, 3);
        assert_eq!(f.abelianization, vec![2]);
        assert_eq!(f.center_order, 1);
        let trivial = direct_product(&s3, &FiniteGroupTable::cyclic(1));
        assert_eq!(fingerprint(&trivial), f);
    }
}
