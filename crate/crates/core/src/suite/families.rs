//! Instance generators. Exhaustive enumerations are cached per order, since
//! several entries filter the same quasigroups.

use std::collections::BTreeSet;
use std::sync::OnceLock;

use super::Instance;
use crate::classes::{double_ward_points, right_modular_left_unit, ward_point};
use crate::constructions::enumerate::{all_magmas, enumerate_quasigroups};
use crate::constructions::groups::{abelian_groups, build_group, group_catalog, GroupSpec};
use crate::constructions::ward;
use crate::iso::permutations;
use crate::props::{has, units, unipotency, BasicProperty};
use crate::table::{Magma, PointedMagma};

pub(crate) type Instances = Box<dyn Iterator<Item = Instance>>;

/// A labelled pointed table.
pub(crate) type Member = (String, Magma, usize);

/// Orders up to which class members come from exhaustive enumeration;
/// above it they come from the group catalog.
pub(crate) const ENUMERATED: usize = 4;

/// The quasigroups of one order, sorted into the classes the checks use.
#[derive(Default)]
pub(crate) struct Quasigroups {
    /// Every quasigroup; left empty for order 5, which is streamed instead.
    pub all: Vec<Magma>,
    pub ward: Vec<(Magma, usize)>,
    /// One entry per double Ward point.
    pub dward: Vec<(Magma, usize)>,
    /// Right modular with a left unit.
    pub rmlu: Vec<(Magma, usize)>,
    /// Two-sided unit.
    pub loops: Vec<(Magma, usize)>,
}

static QUASIGROUPS: [OnceLock<Quasigroups>; 6] = [const { OnceLock::new() }; 6];

pub(crate) fn quasigroups(n: usize) -> &'static Quasigroups {
    QUASIGROUPS[n].get_or_init(|| {
        let mut out = Quasigroups::default();
        if n == 0 {
            return out;
        }
        for q in enumerate_quasigroups(n).expect("order within the Latin square limit") {
            if let Some(e) = ward_point(&q) {
                out.ward.push((q.clone(), e));
            }
            for e in double_ward_points(&q) {
                out.dward.push((q.clone(), e));
            }
            if let Some(l) = right_modular_left_unit(&q) {
                out.rmlu.push((q.clone(), l));
            }
            if let Some(u) = units(&q).two_sided() {
                out.loops.push((q.clone(), u));
            }
            if n <= ENUMERATED {
                out.all.push(q);
            }
        }
        out
    })
}

/// Every quasigroup of order `n`, streamed for order 5.
pub(crate) fn all_quasigroups(n: usize) -> Box<dyn Iterator<Item = Magma>> {
    if n <= ENUMERATED {
        Box::new(quasigroups(n).all.iter().cloned())
    } else {
        Box::new(enumerate_quasigroups(n).expect("order within the Latin square limit"))
    }
}

/// Classes among all magmas of order at most 3.
#[derive(Default)]
pub(crate) struct SmallMagmas {
    /// Two-sided unit.
    pub unital: Vec<(Magma, usize)>,
    pub idempotent: Vec<Magma>,
    /// Right modular, unipotent, with a left unit.
    pub rm_unipotent: Vec<(Magma, usize)>,
}

static SMALL_MAGMAS: [OnceLock<SmallMagmas>; 4] = [const { OnceLock::new() }; 4];

pub(crate) fn small_magmas(n: usize) -> &'static SmallMagmas {
    SMALL_MAGMAS[n].get_or_init(|| {
        let mut out = SmallMagmas::default();
        for m in all_magmas(n).expect("order within the magma limit") {
            if let Some(u) = units(&m).two_sided() {
                out.unital.push((m.clone(), u));
            }
            if let Some(l) = right_modular_left_unit(&m) {
                if unipotency(&m).is_some() {
                    out.rm_unipotent.push((m.clone(), l));
                }
            }
            if has(&m, BasicProperty::Idempotent) {
                out.idempotent.push(m);
            }
        }
        out
    })
}

/// Groups of order `n` up to isomorphism; complete for `n ≤ 7`.
fn groups_of_order(n: usize) -> Vec<GroupSpec> {
    let mut specs = abelian_groups(n);
    if n == 6 {
        specs.push(GroupSpec::Sym3);
    }
    specs
}

static GROUP_TABLES: [OnceLock<Vec<(Magma, usize)>>; 7] = [const { OnceLock::new() }; 7];

/// Every group table on `0..n` (all labelings), with its identity.
pub(crate) fn group_tables(n: usize) -> &'static [(Magma, usize)] {
    GROUP_TABLES[n].get_or_init(|| {
        let mut seen = BTreeSet::new();
        let mut out = Vec::new();
        if n == 0 {
            return out;
        }
        for spec in groups_of_order(n) {
            let g = build_group(&spec).expect("catalog group");
            for sigma in permutations(n) {
                let h = g.relabel(&sigma);
                if seen.insert(h.magma().cells().to_vec()) {
                    out.push((h.magma().clone(), h.point()));
                }
            }
        }
        out
    })
}

/// The classes whose members the checks range over.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Class {
    Group,
    Ward,
    WardDual,
    DoubleWard,
    /// Unipotent, right modular, left unital quasigroups.
    Rmulu,
}

impl Class {
    fn instance_for(self, g: &PointedMagma) -> Option<PointedMagma> {
        match self {
            Class::Group => Some(g.clone()),
            Class::Ward => ward::der(g).ok(),
            Class::WardDual => ward::der(g).ok().map(|w| w.dual()),
            Class::DoubleWard => ward::double_der(g).ok(),
            Class::Rmulu => ward::derbar(g).ok(),
        }
    }

    fn construction(self) -> &'static str {
        match self {
            Class::Group => "",
            Class::Ward => "der",
            Class::WardDual => "dual der",
            Class::DoubleWard => "Der",
            Class::Rmulu => "derbar",
        }
    }

    fn enumerated(self, n: usize) -> Vec<(Magma, usize)> {
        if self == Class::Group {
            return group_tables(n).to_vec();
        }
        let q = quasigroups(n);
        match self {
            Class::Group => unreachable!(),
            Class::Ward => q.ward.clone(),
            Class::WardDual => q.ward.iter().map(|(m, e)| (m.dual(), *e)).collect(),
            Class::DoubleWard => q.dward.clone(),
            Class::Rmulu => q
                .rmlu
                .iter()
                .filter(|(m, l)| unipotency(m) == Some(*l))
                .cloned()
                .collect(),
        }
    }
}

/// Members of a class: every one of order at most `enumerate_to` from
/// exhaustive enumeration, then the catalog-induced ones of larger order up
/// to `max`.
pub(crate) fn members(class: Class, max: usize, enumerate_to: usize) -> Vec<Member> {
    let low = max.min(enumerate_to);
    let mut out = Vec::new();
    for n in 1..=low {
        for (i, (m, p)) in class.enumerated(n).into_iter().enumerate() {
            out.push((format!("order {n} #{i} (point {p})"), m, p));
        }
    }
    for spec in group_catalog(max) {
        if spec.order() <= low {
            continue;
        }
        let g = build_group(&spec).expect("catalog group");
        if let Some(m) = class.instance_for(&g) {
            let label = match class.construction() {
                "" => spec.to_string(),
                c => format!("{c}({spec})"),
            };
            let p = m.point();
            out.push((label, m.into_magma(), p));
        }
    }
    out
}

pub(crate) fn singles(members: Vec<Member>) -> Instances {
    Box::new(
        members
            .into_iter()
            .map(|(label, m, p)| Instance::new(label, vec![m], vec![p])),
    )
}

/// Ordered pairs of members with equal order.
pub(crate) fn pairs(left: Vec<Member>, right: Vec<Member>) -> Instances {
    Box::new(left.into_iter().flat_map(move |(la, a, pa)| {
        let n = a.order();
        let right = right.clone();
        right
            .into_iter()
            .filter(|(_, b, _)| b.order() == n)
            .map(move |(lb, b, pb)| {
                Instance::new(format!("{la} with {lb}"), vec![a.clone(), b], vec![pa, pb])
            })
            .collect::<Vec<_>>()
    }))
}

/// Pairs built lazily from two borrowed lists.
pub(crate) fn cross(
    left: &'static [(Magma, usize)],
    right: &'static [(Magma, usize)],
    label: &'static str,
) -> Instances {
    Box::new(left.iter().enumerate().flat_map(move |(i, (a, pa))| {
        right.iter().enumerate().map(move |(j, (b, pb))| {
            Instance::new(
                format!("{label} #{i} with #{j}"),
                vec![a.clone(), b.clone()],
                vec![*pa, *pb],
            )
        })
    }))
}

/// Every magma of order at most `min(max, 3)`, then every quasigroup of
/// order 4 when `max ≥ 4`.
pub(crate) fn magma_sweep(max: usize) -> Instances {
    let magmas = (1..=max.min(3)).flat_map(|n| {
        all_magmas(n)
            .expect("order within the magma limit")
            .enumerate()
            .map(move |(i, m)| Instance::new(format!("order {n} magma #{i}"), vec![m], vec![]))
    });
    let quasi = (4..=max.min(4)).flat_map(|n| {
        all_quasigroups(n)
            .enumerate()
            .map(move |(i, m)| Instance::new(format!("order {n} quasigroup #{i}"), vec![m], vec![]))
    });
    Box::new(magmas.chain(quasi))
}

/// Every quasigroup of order at most `max`.
pub(crate) fn quasigroup_sweep(max: usize) -> Instances {
    Box::new((1..=max).flat_map(|n| {
        all_quasigroups(n)
            .enumerate()
            .map(move |(i, m)| Instance::new(format!("order {n} quasigroup #{i}"), vec![m], vec![]))
    }))
}

/// Distinct tables among pointed members, keeping the first point.
pub(crate) fn distinct_tables(list: &[(Magma, usize)]) -> Vec<(Magma, usize)> {
    let mut seen = BTreeSet::new();
    list.iter()
        .filter(|(m, _)| seen.insert(m.cells().to_vec()))
        .cloned()
        .collect()
}
