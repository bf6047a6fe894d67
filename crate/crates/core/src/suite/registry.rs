//! The ordered list of checks.

use super::families::Instances;
use super::{sec2, sec3, sec4, sec5, sec6, sec7, Instance, Quantifier, Step};

pub(crate) struct Entry {
    pub id: &'static str,
    pub description: &'static str,
    pub family: &'static str,
    /// Largest order the family is generated up to, whatever the
    /// configured maximum.
    pub cap: usize,
    pub quantifier: Quantifier,
    /// The statement is known to be wrong as printed.
    pub discrepancy: bool,
    pub notes: &'static [&'static str],
    pub extended_only: bool,
    pub instances: fn(usize, bool) -> Instances,
    pub check: fn(&Instance) -> Step,
}

const fn entry(
    id: &'static str,
    description: &'static str,
    family: &'static str,
    cap: usize,
    instances: fn(usize, bool) -> Instances,
    check: fn(&Instance) -> Step,
) -> Entry {
    Entry {
        id,
        description,
        family,
        cap,
        quantifier: Quantifier::Universal,
        discrepancy: false,
        notes: &[],
        extended_only: false,
        instances,
        check,
    }
}

impl Entry {
    const fn discrepancy(mut self, notes: &'static [&'static str]) -> Self {
        self.discrepancy = true;
        self.notes = notes;
        self
    }

    const fn notes(mut self, notes: &'static [&'static str]) -> Self {
        self.notes = notes;
        self
    }
}

const ALL_MAGMAS: &str = "all magmas of order ≤ 3, all quasigroups of order 4";
const WARDS: &str = "Ward quasigroups: enumerated to order 4, then induced by catalog groups";
const DWARDS: &str = "double Ward quasigroups: enumerated to order 4, then induced by catalog groups";

pub(crate) static REGISTRY: &[Entry] = &[
    entry("L2_3_1", "(Q,·,dual) is a double magma iff (Q,·) is medial", ALL_MAGMAS, 4, sec2::magmas, sec2::dual_plain_iff_medial),
    entry("L2_3_2", "(Q,·,dual) always satisfies the reversible interchange law", ALL_MAGMAS, 4, sec2::magmas, sec2::dual_always_reversible),
    entry("L2_3_3", "(Q,·,dual) is lateral iff (Q², ·) is commutative", ALL_MAGMAS, 4, sec2::magmas, sec2::dual_lateral_iff_square_commutative),
    entry("L2_3_4", "(·,∗) is a double magma iff the duals are", "magma pairs of order ≤ 2, quasigroup pairs of order 3, seeded random pairs of order 4", 4, sec2::dualizing_pairs, sec2::dualizing_plain),
    entry("L2_3_5", "(·,∗) is lateral iff the duals are", "magma pairs of order ≤ 2, quasigroup pairs of order 3, seeded random pairs of order 4", 4, sec2::dualizing_pairs, sec2::dualizing_lateral),
    entry("L2_3_6", "(·,∗) is reversible iff the duals are", "magma pairs of order ≤ 2, quasigroup pairs of order 3, seeded random pairs of order 4", 4, sec2::dualizing_pairs, sec2::dualizing_reversible),
    entry("L2_3_7", "(·,·) satisfies the interchange law iff (Q,·) is medial", ALL_MAGMAS, 4, sec2::magmas, sec2::self_plain_iff_medial),
    entry("L2_4_1", "a Ward quasigroup is medial iff left modular iff its retract is abelian", WARDS, 12, sec2::wards, sec2::ward_medial),
    entry("L2_4_2", "a Ward quasigroup is commutative iff its retract is boolean", WARDS, 12, sec2::wards, sec2::ward_commutative),
    entry("L2_4_3", "a quasigroup is Ward iff xy = y⁻¹⋆x for a group ⋆", "all quasigroups of order ≤ 4, catalog Ward quasigroups of order 5 and 6", 6, sec2::ward_representation_family, sec2::ward_representation),
    entry("P2_5", "a unique left unit of a Ward partner is the Ward point", "Ward quasigroups × magmas with a unique left unit, order ≤ 3", 3, sec2::ward_with_left_unital, sec2::unique_left_unit_is_point),
    entry("T2_6", "unital double magmas are commutative monoids with equal operations", "pairs of unital magmas of order ≤ 3", 3, sec2::unital_pairs, sec2::eckmann_hilton_holds),
    entry("T3_1", "five equivalent conditions for a Ward double magma", "pairs of Ward quasigroups: enumerated to order 4, then catalog-induced", 8, sec3::ward_pairs, sec3::five_conditions),
    entry("T3_2", "the dual of a medial Ward quasigroup is unipotent, left unital, right modular and a partner", WARDS, 12, sec3::wards, sec3::medial_dual),
    entry("T3_3", "(Q,·,dual) is proper iff the retract is not boolean", WARDS, 12, sec3::wards, sec3::proper_iff_not_boolean),
    entry("T3_4", "a medial Ward quasigroup with its retract: Eq (3); Eq (4) iff Eq (5) iff boolean", WARDS, 12, sec3::wards, sec3::retract_laws),
    entry("T3_5", "a unital partner of a Ward quasigroup is its retract; a partner of the retract is the quasigroup", "Ward quasigroups × unital magmas (order ≤ 3) or loops (order 4); medial Ward × all magmas (≤ 3) or quasigroups (4)", 4, sec3::ward_partners, sec3::partner_is_retract),
    entry("L4_1", "identities (1)–(7) of double Ward quasigroups", DWARDS, 12, sec4::dwards, sec4::lemma_identities),
    entry("CEX4", "x·y = b−x−y satisfies the weak law everywhere, Eq (2) only where 3e = b", "affine b−x−y over Z_n, 1 ≤ b < n", 7, sec4::weak_family, sec4::weak_law_everywhere),
    entry("CEX4_TABLE", "the printed order-6 table satisfies the weak law without being double Ward", "the printed 6×6 table", 6, sec4::printed_table, sec4::printed_table_claim)
        .discrepancy(&["the printed table is not a Latin square, so it is not a quasigroup"]),
    entry("P4_2", "D of a Ward quasigroup is double Ward", WARDS, 12, sec4::wards, sec4::d_of_ward_is_dward),
    entry("P4_3", "D of a double Ward quasigroup is Ward", DWARDS, 12, sec4::dwards, sec4::d_of_dward_is_ward),
    entry("T4_4", "D(D(q)) = q", "Ward and double Ward quasigroups", 12, sec4::wards_and_dwards, sec4::d_involution),
    entry("T4_5", "ret(D(q)) = Ret(q)", DWARDS, 12, sec4::dwards, sec4::ret_of_d),
    entry("T4_6", "(q, Ret q) is lateral, and a lateral group partner with identity e is Ret q", DWARDS, 12, sec4::dwards, sec4::lateral_with_ret),
    entry("T4_6n", "(Z6, −x−y, +) is lateral and double Ward at 2, with + different from Ret", "the single Z6 instance", 6, sec4::remark_instance, sec4::remark_z6)
        .notes(&["∗ equals the table of Der(Z6, +, 0), but as a pointed object at 2 its Ret is not +"]),
    entry("C4_7", "Ret(D(w)) = ret(w) = x·ey, lateral with D(w)", WARDS, 12, sec4::wards, sec4::d_with_ret),
    entry("C4_8", "a double Ward quasigroup is commutative iff medial iff D is medial iff Ret is commutative", DWARDS, 12, sec4::dwards, sec4::dward_commutative),
    entry("T4_9", "the dual of a double Ward quasigroup is double Ward", DWARDS, 12, sec4::dwards, sec4::dual_is_dward),
    entry("T4_10", "cancellative with Eq (2) iff double Ward", ALL_MAGMAS, 4, sec4::magmas, sec4::cancellative_dw_law),
    entry("C4_11", "with the dual: double magma iff lateral iff commutative iff medial", DWARDS, 12, sec4::dwards, sec4::with_dual),
    entry("C4_12", "cancellative with the weak law at an idempotent iff double Ward", ALL_MAGMAS, 4, sec4::magmas, sec4::idempotent_weak),
    entry("T4_14", "a translatable double Ward quasigroup of order n has k = n−1", "double Ward tables of order ≤ 5 under every ordering; Der(Z_n) under the natural ordering", 30, sec4::translatable_dwards, sec4::dward_k),
    entry("C4_15", "a double Ward quasigroup is translatable iff induced by a cyclic group", "double Ward tables of order ≤ 5 under every ordering", 30, sec4::translatable_dwards, sec4::dward_translatable_iff_cyclic),
    entry("T4_17", "a translatable Ward quasigroup has k = 1", "Ward tables of order ≤ 5 under every ordering; der(Z_n) under the natural ordering; der(S3)", 30, sec4::translatable_wards, sec4::ward_k),
    entry("C4_18", "a Ward quasigroup is translatable iff induced by a cyclic group", "Ward tables of order ≤ 5 under every ordering", 30, sec4::translatable_wards, sec4::ward_translatable_iff_cyclic),
    entry("ISO4", "double Ward quasigroups are isotopic iff isomorphic", "pairs of distinct double Ward tables of order ≤ 5", 5, sec4::dward_table_pairs, sec4::isotopic_iff_isomorphic),
    entry("T5_1", "(rmlu, rmlu) is a double magma iff x∗y = αx·y for an involutive automorphism α", "pairs of right modular, left unital quasigroups of order ≤ 4", 4, sec5::rmlu_pairs, sec5::left_characterization),
    entry("C5_2", "with x·y = αx∗y = βx⋆y: (∗,⋆) double magma iff α, β commute iff (x∗e)⋆e = (x⋆e)∗e", "triples of right modular, left unital quasigroups of order ≤ 4", 4, sec5::rmlu_triples, sec5::left_commuting),
    entry("C5_3", "a right modular, left unital magma forms a double magma with its dual", "right modular, left unital magmas of order ≤ 3 and quasigroups of order 4", 4, sec5::rmlu_magmas, sec5::double_with_dual),
    entry("T5_4", "(lmru, rmlu) is a double magma iff x∗y = y·αx for an involutive automorphism α", "left modular right unital × right modular left unital quasigroups of order ≤ 4", 4, sec5::lmru_rmlu_pairs, sec5::right_characterization),
    entry("C5_5", "with x∗y = αy·x, x⋆y = βy·x: (∗,⋆) double magma iff α, β commute", "right modular, left unital quasigroups with dual partners, order ≤ 4", 4, sec5::rmlu_lmru_triples, sec5::right_commuting)
        .discrepancy(&["e is a right unit of ∗ and ⋆, so (x∗e)⋆e = (x⋆e)∗e holds for every pair and cannot be equivalent to α and β commuting; the first equivalence holds"]),
    entry("EX5", "idempotent magmas: lateral iff equal; reversible iff dual", "pairs of idempotent magmas of order ≤ 3", 3, sec5::idempotent_pairs, sec5::idempotent_laws)
        .discrepancy(&["the lateral law also holds for unequal idempotent pairs, e.g. a left projection with another operation"]),
    entry("L6_1", "a group partner's identity equals a unit of the partner under clauses (i)–(iv)", "group tables × all magmas of order ≤ 3", 3, sec6::group_magma_pairs, sec6::unit_clauses),
    entry("T6_2", "a unipotent, right modular, left unital group partner makes the group abelian and is derbar", "group tables × unipotent right modular left unital magmas (≤ 3) or quasigroups (4); catalog above", 8, sec6::group_rm_pairs, sec6::group_partner_is_derbar),
    entry("L6_3", "a unital magma forming a double magma with a quasigroup is commutative", "unital magmas (≤ 3) or loops (4) × quasigroups", 4, sec6::unital_quasigroup_pairs, sec6::unital_partner_commutative),
    entry("L6_4", "a magma is Ward iff cancellative with Eq (1)", ALL_MAGMAS, 4, sec2::magmas, sec6::ward_iff_cancellative_eq1),
    entry("T6_5", "a group partner of a cancellative (z·x)(z·y) = x·y magma is a boolean group equal to it", "group tables × quasigroups of order ≤ 4", 4, sec6::group_quasigroup_pairs, sec6::group_with_left_ward)
        .discrepancy(&["(Z3, +) with x·y = y−x is a counterexample: · is cancellative, satisfies (z·x)(z·y) = x·y and forms a double magma with +"]),
    entry("T6_6", "a unipotent, right modular, left unital quasigroup with retbar: Eq (3); Eq (4) iff Eq (5) iff boolean", "unipotent right modular left unital quasigroups: enumerated to order 4, then catalog derbar", 12, sec6::rmulus, sec6::retbar_laws),
    entry("T6_7", "a unital partner of a Ward-dual quasigroup is retbar; a partner of retbar is the quasigroup", "Ward-dual quasigroups × unital magmas (≤ 3) or loops (4); medial ones × all magmas (≤ 3) or quasigroups (4)", 4, sec6::ward_dual_partners, sec6::partner_is_retbar),
    entry("T7_1", "a quasigroup is medial iff every pair of its parastrophes satisfies Eq (3)", "all quasigroups of order ≤ 4 (order 5 in extended mode)", 5, sec7::quasigroups_for_pairs, sec7::medial_iff_parastrophe_pairs),
    entry("TBL7", "the parastrophe table of the five classes", "group, Ward, Ward-dual, double Ward and unipotent right modular left unital members", 8, sec7::table_columns, sec7::table_cells),
    entry("CNT7", "numbers and coincidence patterns of distinct parastrophes", "group, Ward, Ward-dual, double Ward and unipotent right modular left unital members", 8, sec7::table_columns, sec7::parastrophe_counts),
    entry("T7_2", "∘1 Ward at r iff ∘ = (r∘1y)∘1(r∘1x) is Ward at r", "all quasigroups of order ≤ 5, catalog members above", 5, sec7::characterization_family, sec7::t7_2),
    entry("T7_3", "∘2 Ward at r iff ∘ = x∘2(r∘2y) = ret(∘2, r)", "all quasigroups of order ≤ 5, catalog members above", 5, sec7::characterization_family, sec7::t7_3),
    entry("T7_4", "∘3 Ward at r iff ∘ = (r∘3x)∘3(r∘3y) is Ward-dual at r", "all quasigroups of order ≤ 5, catalog members above", 5, sec7::characterization_family, sec7::t7_4),
    entry("T7_5", "∘4 Ward at r iff ∘ = y∘4(r∘4x) is the group dual to ret(∘4, r)", "all quasigroups of order ≤ 5, catalog members above", 5, sec7::characterization_family, sec7::t7_5),
    entry("T7_6", "∘1 Ward-dual at r iff ∘ = (x∘1r)∘1y = retbar(∘1, r)", "all quasigroups of order ≤ 5, catalog members above", 5, sec7::characterization_family, sec7::t7_6),
    entry("T7_7", "∘2 Ward-dual at r iff ∘ = (y∘2r)∘2(x∘2r) is Ward-dual at r", "all quasigroups of order ≤ 5, catalog members above", 5, sec7::characterization_family, sec7::t7_7),
    entry("T7_8", "∘3 Ward-dual at r iff ∘ = (y∘3r)∘3x is the group dual to retbar(∘3, r)", "all quasigroups of order ≤ 5, catalog members above", 5, sec7::characterization_family, sec7::t7_8),
    entry("T7_9", "∘4 Ward-dual at r iff ∘ = (x∘4r)∘4(y∘4r) is Ward at r", "all quasigroups of order ≤ 5, catalog members above", 5, sec7::characterization_family, sec7::t7_9),
    entry("T7_10", "∘1 unipotent right modular left unital at l iff ∘ = (y∘1l)∘1x is an abelian group", "all quasigroups of order ≤ 5, catalog members above", 5, sec7::characterization_family, sec7::t7_10),
    entry("T7_11", "∘i double Ward iff ∘ double Ward, and then ∘i is ∘ or its dual", "all quasigroups of order ≤ 5, catalog members above", 5, sec7::characterization_family, sec7::t7_11),
    entry("E2_1", "affine pairs ax+by, cx+dy over Z_n satisfy Eq (3)", "all affine pairs over Z_n, n ≤ 6", 6, sec2::affine_pairs, sec2::affine_interchange),
    entry("E2_1b", "affine pairs with a = b, c = d form a commutative double semigroup", "the a = b, c = d affine pairs over Z_n, n ≤ 6", 6, sec2::affine_diagonal_pairs, sec2::affine_double_semigroup)
        .discrepancy(&["x·y = ax+ay is associative only when a² ≡ a (mod n)"]),
    entry("E6_10", "Eqs (6)–(10) hold in Ward quasigroups at their point", WARDS, 12, sec7::wards, sec7::ward_identities),
    Entry {
        quantifier: Quantifier::Existential,
        extended_only: true,
        notes: &["searches all quasigroups of order ≤ 5 and the affine quasigroups over Z6"],
        ..entry("DW_WEAK6", "a quasigroup satisfying the weak law at a non-idempotent e without Eq (2)", "all quasigroups of order ≤ 5, affine quasigroups over Z6", 6, sec4::weak_search_family, sec4::weak_without_dw)
    },
];

pub(crate) fn lookup(id: &str) -> Option<&'static Entry> {
    REGISTRY.iter().find(|e| e.id == id)
}

/// Every check id, in registry order.
pub fn registry_ids() -> Vec<&'static str> {
    REGISTRY.iter().map(|e| e.id).collect()
}
