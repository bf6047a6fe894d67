//! Group tables from fixed presentations.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::table::{Magma, PointedMagma};

/// Largest group order [`build_group`] will tabulate.
pub const GROUP_LIMIT: usize = 64;

/// A group given by a named presentation.
///
/// Element numbering is fixed so that tables are reproducible:
/// * `Cyclic(n)`: residues `0..n` under addition.
/// * `Dihedral(n)`: rotations `r^i` are `0..n`, reflections `s·r^i` are
///   `n + i`, with `r^i·s r^j = s r^(j−i)` and `s r^i·s r^j = r^(j−i)`.
/// * `Sym3`: the same table as `Dihedral(3)`.
/// * `Quaternion8`: `1, −1, i, −i, j, −j, k, −k`.
/// * `DirectProduct`: mixed radix, the first factor most significant.
///
/// The identity is always element 0.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum GroupSpec {
    Cyclic(usize),
    DirectProduct(Vec<GroupSpec>),
    Dihedral(usize),
    Sym3,
    Quaternion8,
}

impl GroupSpec {
    /// The Klein four-group `Z₂ × Z₂`.
    pub fn klein() -> GroupSpec {
        GroupSpec::DirectProduct(vec![GroupSpec::Cyclic(2), GroupSpec::Cyclic(2)])
    }

    /// The group order, saturating on overflow.
    pub fn order(&self) -> usize {
        match self {
            GroupSpec::Cyclic(n) => *n,
            GroupSpec::DirectProduct(factors) => factors
                .iter()
                .fold(1usize, |acc, f| acc.saturating_mul(f.order())),
            GroupSpec::Dihedral(n) => n.saturating_mul(2),
            GroupSpec::Sym3 => 6,
            GroupSpec::Quaternion8 => 8,
        }
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupSpec::Cyclic(n) => write!(f, "cyclic:{n}"),
            GroupSpec::Dihedral(n) => write!(f, "dihedral:{n}"),
            GroupSpec::Sym3 => write!(f, "sym3"),
            GroupSpec::Quaternion8 => write!(f, "q8"),
            GroupSpec::DirectProduct(factors) => {
                let parts: Vec<String> = factors.iter().map(|g| g.to_string()).collect();
                write!(f, "{}", parts.join("x"))
            }
        }
    }
}

impl FromStr for GroupSpec {
    type Err = Error;

    /// Accepts `cyclic:N`, `dihedral:N`, `sym3`, `q8`, `klein`, and direct
    /// products of these joined by `x` (e.g. `cyclic:2xcyclic:4`).
    fn from_str(s: &str) -> Result<Self> {
        let invalid = || Error::InvalidGroupSpec(s.to_string());
        let factors: Vec<&str> = s.trim().split('x').map(str::trim).collect();
        if factors.len() > 1 {
            let parsed = factors
                .iter()
                .map(|f| f.parse::<GroupSpec>())
                .collect::<Result<Vec<_>>>()
                .map_err(|_| invalid())?;
            return Ok(GroupSpec::DirectProduct(parsed));
        }
        let lower = s.trim().to_ascii_lowercase();
        let sized = |prefix: &str| -> Option<Result<usize>> {
            lower.strip_prefix(prefix).map(|rest| {
                rest.parse::<usize>()
                    .ok()
                    .filter(|&n| n > 0)
                    .ok_or_else(invalid)
            })
        };
        if let Some(n) = sized("cyclic:") {
            return Ok(GroupSpec::Cyclic(n?));
        }
        if let Some(n) = sized("dihedral:") {
            return Ok(GroupSpec::Dihedral(n?));
        }
        match lower.as_str() {
            "sym3" | "s3" => Ok(GroupSpec::Sym3),
            "q8" => Ok(GroupSpec::Quaternion8),
            "klein" => Ok(GroupSpec::klein()),
            _ => Err(invalid()),
        }
    }
}

/// Tabulates the group, pointed at its identity 0.
pub fn build_group(spec: &GroupSpec) -> Result<PointedMagma> {
    let order = spec.order();
    Error::guard("group construction", order, GROUP_LIMIT)?;
    if order == 0 {
        return Err(Error::InvalidGroupSpec(spec.to_string()));
    }
    let table = match spec {
        GroupSpec::Cyclic(n) => Magma::from_fn(*n, |x, y| (x + y) % n),
        GroupSpec::Dihedral(n) => dihedral(*n),
        GroupSpec::Sym3 => dihedral(3),
        GroupSpec::Quaternion8 => quaternion8(),
        GroupSpec::DirectProduct(factors) => {
            let tables = factors
                .iter()
                .map(|f| build_group(f).map(PointedMagma::into_magma))
                .collect::<Result<Vec<_>>>()?;
            direct_product(&tables)
        }
    };
    PointedMagma::new(table, 0)
}

fn dihedral(n: usize) -> Magma {
    Magma::from_fn(2 * n, |a, b| {
        let (sa, i) = (a >= n, a % n);
        let (sb, j) = (b >= n, b % n);
        match (sa, sb) {
            (false, false) => (i + j) % n,
            (false, true) => n + (j + n - i) % n,
            (true, false) => n + (i + j) % n,
            (true, true) => (j + n - i) % n,
        }
    })
}

fn quaternion8() -> Magma {
    // units 1, i, j, k as 0..4; element 2u + s carries sign (−1)^s
    const UNIT_PRODUCT: [[(usize, usize); 4]; 4] = [
        [(0, 0), (1, 0), (2, 0), (3, 0)],
        [(1, 0), (0, 1), (3, 0), (2, 1)],
        [(2, 0), (3, 1), (0, 1), (1, 0)],
        [(3, 0), (2, 0), (1, 1), (0, 1)],
    ];
    Magma::from_fn(8, |a, b| {
        let (u, s) = UNIT_PRODUCT[a / 2][b / 2];
        2 * u + (s + a % 2 + b % 2) % 2
    })
}

fn direct_product(tables: &[Magma]) -> Magma {
    let order: usize = tables.iter().map(Magma::order).product();
    let digits = |mut x: usize| -> Vec<usize> {
        let mut d = vec![0; tables.len()];
        for (slot, t) in d.iter_mut().zip(tables).rev() {
            *slot = x % t.order();
            x /= t.order();
        }
        d
    };
    Magma::from_fn(order, |x, y| {
        let (dx, dy) = (digits(x), digits(y));
        tables
            .iter()
            .zip(dx.iter().zip(&dy))
            .fold(0, |acc, (t, (&a, &b))| acc * t.order() + t.op(a, b))
    })
}

fn factorize(mut n: usize) -> Vec<(usize, u32)> {
    let mut factors = Vec::new();
    let mut p = 2;
    while p * p <= n {
        let mut e = 0;
        while n.is_multiple_of(p) {
            n /= p;
            e += 1;
        }
        if e > 0 {
            factors.push((p, e));
        }
        p += 1;
    }
    if n > 1 {
        factors.push((n, 1));
    }
    factors
}

/// Partitions of `n` into non-increasing parts.
fn partitions(n: u32) -> Vec<Vec<u32>> {
    fn go(rest: u32, max: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if rest == 0 {
            out.push(prefix.clone());
            return;
        }
        for part in (1..=rest.min(max)).rev() {
            prefix.push(part);
            go(rest - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// One representative of every abelian group of order `n`, as products of
/// cyclic groups of prime-power order (a single cyclic group when possible).
pub fn abelian_groups(n: usize) -> Vec<GroupSpec> {
    if n == 1 {
        return vec![GroupSpec::Cyclic(1)];
    }
    let mut combos: Vec<Vec<usize>> = vec![Vec::new()];
    for (p, e) in factorize(n) {
        let mut next = Vec::new();
        for combo in &combos {
            for parts in partitions(e) {
                let mut c = combo.clone();
                c.extend(parts.iter().map(|&k| p.pow(k)));
                next.push(c);
            }
        }
        combos = next;
    }
    combos
        .into_iter()
        .map(|orders| {
            if orders.len() == 1 {
                GroupSpec::Cyclic(orders[0])
            } else if orders.iter().all(|&q| q == orders[0]) || !pairwise_coprime(&orders) {
                GroupSpec::DirectProduct(orders.into_iter().map(GroupSpec::Cyclic).collect())
            } else {
                GroupSpec::Cyclic(orders.iter().product())
            }
        })
        .collect()
}

fn pairwise_coprime(orders: &[usize]) -> bool {
    fn gcd(a: usize, b: usize) -> usize {
        if b == 0 {
            a
        } else {
            gcd(b, a % b)
        }
    }
    orders
        .iter()
        .enumerate()
        .all(|(i, &a)| orders[i + 1..].iter().all(|&b| gcd(a, b) == 1))
}

/// The named groups used as instance families, in a fixed order: cyclic
/// groups of order 1–12, the Klein group, `Z₂³`, `Z₂ × Z₄`, `Z₃ × Z₃`,
/// `Z₂ × Z₆`, dihedral groups of degree 3–6, `S₃` and `Q₈`. Only groups
/// of order at most `max_order` are returned.
pub fn group_catalog(max_order: usize) -> Vec<GroupSpec> {
    use GroupSpec::*;
    let mut all: Vec<GroupSpec> = (1..=12).map(Cyclic).collect();
    all.extend([
        GroupSpec::klein(),
        DirectProduct(vec![Cyclic(2), Cyclic(2), Cyclic(2)]),
        DirectProduct(vec![Cyclic(2), Cyclic(4)]),
        DirectProduct(vec![Cyclic(3), Cyclic(3)]),
        DirectProduct(vec![Cyclic(2), Cyclic(6)]),
        Dihedral(3),
        Dihedral(4),
        Dihedral(5),
        Dihedral(6),
        Sym3,
        Quaternion8,
    ]);
    all.retain(|g| g.order() <= max_order);
    all
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::props::{classify_group, has, BasicProperty};

    #[test]
    fn catalog_groups_are_groups() {
        for spec in group_catalog(GROUP_LIMIT) {
            let g = build_group(&spec).unwrap();
            let info = classify_group(g.magma());
            assert!(info.is_group, "{spec}");
            assert_eq!(info.unit, Some(0), "{spec}");
        }
    }

    #[test]
    fn named_examples() {
        let z3 = build_group(&GroupSpec::Cyclic(3)).unwrap();
        assert_eq!(
            z3.magma(),
            &Magma::from_rows(&[[0, 1, 2], [1, 2, 0], [2, 0, 1]]).unwrap()
        );
        let klein = build_group(&GroupSpec::klein()).unwrap();
        assert!(classify_group(klein.magma()).is_boolean_group());
        let s3 = build_group(&GroupSpec::Sym3).unwrap();
        assert!(!has(s3.magma(), BasicProperty::Commutative));
        let q8 = build_group(&GroupSpec::Quaternion8).unwrap();
        let info = classify_group(q8.magma());
        assert_eq!(info.is_abelian, Some(false));
        // i·i = −1, i·j = k, j·i = −k
        assert_eq!(q8.magma().op(2, 2), 1);
        assert_eq!(q8.magma().op(2, 4), 6);
        assert_eq!(q8.magma().op(4, 2), 7);
        // exactly one element of order 2
        let involutions = (1..8).filter(|&x| q8.magma().op(x, x) == 0).count();
        assert_eq!(involutions, 1);
        let d4 = build_group(&GroupSpec::Dihedral(4)).unwrap();
        let involutions = (1..8).filter(|&x| d4.magma().op(x, x) == 0).count();
        assert_eq!(involutions, 5);
    }

    #[test]
    fn parse_and_print() {
        for text in ["cyclic:5", "dihedral:4", "sym3", "q8", "cyclic:2xcyclic:4"] {
            let spec: GroupSpec = text.parse().unwrap();
            assert_eq!(spec.to_string(), text);
        }
        assert_eq!("klein".parse::<GroupSpec>().unwrap(), GroupSpec::klein());
        assert!("cyclic:0".parse::<GroupSpec>().is_err());
        assert!("tetra".parse::<GroupSpec>().is_err());
        assert!(matches!(
            build_group(&GroupSpec::Cyclic(65)),
            Err(Error::CostGuard { .. })
        ));
    }

    #[test]
    fn abelian_group_lists() {
        let names = |n| -> Vec<String> {
            abelian_groups(n).iter().map(|g| g.to_string()).collect()
        };
        assert_eq!(names(1), ["cyclic:1"]);
        assert_eq!(names(4), ["cyclic:4", "cyclic:2xcyclic:2"]);
        assert_eq!(names(6), ["cyclic:6"]);
        assert_eq!(names(8).len(), 3);
        assert_eq!(names(12), ["cyclic:12", "cyclic:2xcyclic:2xcyclic:3"]);
        for n in 1..=16 {
            for g in abelian_groups(n) {
                assert_eq!(g.order(), n);
                let info = classify_group(build_group(&g).unwrap().magma());
                assert!(info.is_abelian_group());
            }
        }
    }
}
