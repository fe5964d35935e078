//! Exhaustive censuses of both families and the formula-against-oracle
//! verifier built on them.

use std::collections::HashMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::arith::{isqrt, prime_powers_in};
use crate::curve::{CubicCurve, IsoWitness};
use crate::doubling::{self, DoublingParam};
use crate::family::{Family, FamilyError, Inexact};
use crate::field::{Elem, FieldError, FiniteField};
use crate::tripling::{self, PartitionLabel, TriplingParam};

pub const CENSUS_BOUND: u64 = 10_000;

/// Largest q for which `verify` also runs the exhaustive `(alpha, r)` checks.
pub const EXHAUSTIVE_BOUND: u64 = 101;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CensusError {
    #[error(transparent)]
    Family(#[from] FamilyError),
    #[error("census is limited to q <= {bound}, got q = {q}")]
    Bound { q: u64, bound: u64 },
    #[error("j-class {j} over F_{q} splits into {blocks} F_q-classes")]
    TooManyBlocks { q: u64, j: String, blocks: usize },
    #[error("empty range: q_min = {q_min} > q_max = {q_max}")]
    EmptyRange { q_min: u64, q_max: u64 },
    #[error("could not start the worker pool: {0}")]
    Pool(String),
}

impl From<FieldError> for CensusError {
    fn from(e: FieldError) -> Self {
        CensusError::Family(e.into())
    }
}

impl From<crate::curve::CurveError> for CensusError {
    fn from(e: crate::curve::CurveError) -> Self {
        CensusError::Family(e.into())
    }
}

/// A field element in serialized form: a plain integer over a prime field,
/// a coefficient list (constant term first) over an extension.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ElemValue {
    Int(u32),
    Coeffs(Vec<u32>),
}

impl ElemValue {
    pub fn of(e: Elem<'_>) -> Self {
        if e.field().degree() == 1 {
            ElemValue::Int(e.index())
        } else {
            ElemValue::Coeffs(e.coeffs())
        }
    }

    /// Reads the value back into `field`.
    pub fn to_elem<'f>(&self, field: &'f FiniteField) -> Result<Elem<'f>, FieldError> {
        match self {
            ElemValue::Int(n) => field.from_coeffs(&[*n]),
            ElemValue::Coeffs(c) => field.from_coeffs(c),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusClass {
    pub j: ElemValue,
    pub members: Vec<ElemValue>,
    pub blocks: Vec<Vec<ElemValue>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusReport {
    pub family: Family,
    pub q: u64,
    pub p: u64,
    pub k: u32,
    pub modulus: Vec<u32>,
    pub classes: Vec<CensusClass>,
    pub jbar_count: u64,
    pub fq_count: u64,
}

/// Family-independent view of a parameter.
pub(crate) fn admissible<'f>(
    family: Family,
    field: &'f FiniteField,
) -> Result<Vec<Elem<'f>>, FamilyError> {
    Ok(match family {
        Family::Tripling => tripling::params(field)?.iter().map(|t| t.u()).collect(),
        Family::Doubling => doubling::params(field)?.iter().map(|d| d.u()).collect(),
    })
}

pub(crate) fn family_curve(family: Family, u: Elem<'_>) -> CubicCurve<'_> {
    match family {
        Family::Tripling => TriplingParam::new(u).expect("admissible").curve(),
        Family::Doubling => DoublingParam::new(u).expect("admissible").curve(),
    }
}

fn family_j(family: Family, u: Elem<'_>) -> Elem<'_> {
    match family {
        Family::Tripling => TriplingParam::new(u).expect("admissible").j(),
        Family::Doubling => DoublingParam::new(u).expect("admissible").j(),
    }
}

/// The parameter whose family curve has exactly these coefficients, if any.
fn family_member<'f>(family: Family, c: &CubicCurve<'f>) -> Option<Elem<'f>> {
    let f = c.field();
    let v = match family {
        Family::Tripling => {
            if c.a4() != c.a2() * 2 || c.a6() != c.a2() {
                return None;
            }
            c.a2() / f.int(3)
        }
        Family::Doubling => {
            if c.a4() != c.a2() * 16 || !c.a6().is_zero() {
                return None;
            }
            c.a2()
        }
    };
    match family {
        Family::Tripling => TriplingParam::new(v).ok().map(|t| t.u()),
        Family::Doubling => DoublingParam::new(v).ok().map(|d| d.u()),
    }
}

/// Classes as lists of parameters: j-value, members, F_q-blocks.
pub(crate) type RawClass<'f> = (Elem<'f>, Vec<Elem<'f>>, Vec<Vec<Elem<'f>>>);

pub(crate) fn raw_census<'f>(
    family: Family,
    field: &'f FiniteField,
) -> Result<Vec<RawClass<'f>>, CensusError> {
    let q = field.order();
    if q > CENSUS_BOUND {
        return Err(CensusError::Bound {
            q,
            bound: CENSUS_BOUND,
        });
    }
    let params = admissible(family, field)?;
    let mut order: Vec<Elem<'f>> = Vec::new();
    let mut groups: HashMap<Elem<'f>, Vec<Elem<'f>>> = HashMap::new();
    for u in params {
        let j = family_j(family, u);
        groups
            .entry(j)
            .or_insert_with(|| {
                order.push(j);
                Vec::new()
            })
            .push(u);
    }
    let mut classes = Vec::with_capacity(order.len());
    for j in order {
        let members = groups.remove(&j).expect("grouped");
        let blocks = crate::family::fq_blocks(&members, |v| family_curve(family, v))?;
        if blocks.len() > 2 {
            return Err(CensusError::TooManyBlocks {
                q,
                j: j.to_string(),
                blocks: blocks.len(),
            });
        }
        classes.push((j, members, blocks));
    }
    Ok(classes)
}

/// Groups every admissible parameter by j-invariant, then splits each group
/// into F_q-isomorphism classes.
pub fn brute_census(family: Family, field: &FiniteField) -> Result<CensusReport, CensusError> {
    let raw = raw_census(family, field)?;
    let vals = |xs: &[Elem<'_>]| xs.iter().map(|&x| ElemValue::of(x)).collect::<Vec<_>>();
    let classes: Vec<CensusClass> = raw
        .iter()
        .map(|(j, members, blocks)| CensusClass {
            j: ElemValue::of(*j),
            members: vals(members),
            blocks: blocks.iter().map(|b| vals(b)).collect(),
        })
        .collect();
    let fq_count = classes.iter().map(|c| c.blocks.len() as u64).sum();
    Ok(CensusReport {
        family,
        q: field.order(),
        p: field.characteristic(),
        k: field.degree(),
        modulus: field.modulus().to_vec(),
        jbar_count: classes.len() as u64,
        fq_count,
        classes,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Relation {
    /// formula and oracle must be equal
    Eq,
    /// oracle must not exceed formula
    Le,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    /// `None` when the closed form failed to be an integer.
    pub formula: Option<i64>,
    pub oracle: i64,
    pub relation: Relation,
    pub pass: bool,
}

impl Check {
    pub fn eq(name: impl Into<String>, formula: Option<i64>, oracle: i64) -> Self {
        Check {
            name: name.into(),
            pass: formula == Some(oracle),
            formula,
            oracle,
            relation: Relation::Eq,
        }
    }

    pub fn le(name: impl Into<String>, bound: i64, oracle: i64) -> Self {
        Check {
            name: name.into(),
            pass: oracle <= bound,
            formula: Some(bound),
            oracle,
            relation: Relation::Le,
        }
    }
}

/// Per-q values worth reporting next to the checks.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Quantities {
    pub jbar_formula: Option<i64>,
    pub jbar_oracle: i64,
    pub fq_formula: Option<i64>,
    pub fq_oracle: i64,
    pub n1: Option<u64>,
    pub n2: Option<u64>,
    pub n: Option<u64>,
    pub c3: Option<u64>,
    pub n_q: Option<u64>,
    pub nbar: Option<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationRecord {
    pub family: Family,
    pub q: u64,
    pub p: u64,
    pub k: u32,
    pub checks: Vec<Check>,
    pub pass: bool,
    pub quantities: Quantities,
}

impl VerificationRecord {
    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.pass)
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }
}

fn ok(r: Result<i64, Inexact>) -> Option<i64> {
    r.ok()
}

fn hasse(name: &str, q: u64, n: u64) -> Check {
    // |N - (q + 1)| <= 2 sqrt(q)  <=>  (N - q - 1)^2 <= 4q
    let dev = (n as i64 - q as i64 - 1).abs();
    Check::le(format!("hasse.{name}"), isqrt(4 * q) as i64, dev)
}

/// Runs every applicable check for `family` over `field`. Mismatches are
/// recorded in the result, never raised.
pub fn verify(family: Family, field: &FiniteField) -> Result<VerificationRecord, CensusError> {
    let raw = raw_census(family, field)?;
    let q = field.order();
    let jbar_oracle = raw.len() as i64;
    let fq_oracle: i64 = raw.iter().map(|c| c.2.len() as i64).sum();
    let mut checks = Vec::new();
    let mut quantities = Quantities {
        jbar_oracle,
        fq_oracle,
        ..Quantities::default()
    };

    // j-classes from the closed description against the census grouping
    let mut class_of: HashMap<Elem<'_>, &Vec<Elem<'_>>> = HashMap::new();
    for (_, members, _) in &raw {
        for &m in members {
            class_of.insert(m, members);
        }
    }
    let class_mismatch = |predicted: &dyn Fn(Elem<'_>) -> Vec<Elem<'_>>| -> i64 {
        class_of
            .iter()
            .filter(|(u, members)| {
                let mut sorted: Vec<Elem<'_>> = members.to_vec();
                sorted.sort_unstable();
                predicted(**u) != sorted
            })
            .count() as i64
    };

    match family {
        Family::Tripling => {
            let (n1, n2) = tripling::auxiliary_counts(field)?;
            quantities.n1 = n1;
            quantities.n2 = n2;
            let jbar_formula = tripling::count_jbar_formula(q) as i64;
            let fq_formula = ok(tripling::count_fq_from(q, n1, n2));
            quantities.jbar_formula = Some(jbar_formula);
            quantities.fq_formula = fq_formula;
            checks.push(Check::eq("jbar_count", Some(jbar_formula), jbar_oracle));
            checks.push(Check::eq("fq_count", fq_formula, fq_oracle));

            let labels: HashMap<Elem<'_>, PartitionLabel> = class_of
                .keys()
                .map(|&u| (u, TriplingParam::new(u).expect("admissible").label()))
                .collect();
            let by_label = |pred: &dyn Fn(Elem<'_>) -> bool| -> [i64; 5] {
                let mut out = [0i64; 5];
                for (&u, &l) in &labels {
                    if pred(u) {
                        out[l as usize] += 1;
                    }
                }
                out
            };
            let names = ["A1", "A2", "A3", "B1", "B2"];
            let partition = by_label(&|_| true);
            if let Some(t1) = tripling::table1(q) {
                for (i, name) in names.iter().enumerate() {
                    checks.push(Check::eq(
                        format!("table1.{name}"),
                        Some(t1.as_array()[i]),
                        partition[i],
                    ));
                }
            }
            let split: HashMap<Elem<'_>, bool> = raw
                .iter()
                .flat_map(|(_, m, b)| m.iter().map(move |&u| (u, b.len() == 1)))
                .collect();
            let tilde = by_label(&|u| split[&u]);
            let t2 = tripling::table2(q, n1, n2);
            for (i, name) in names.iter().enumerate() {
                checks.push(Check::eq(
                    format!("table2.{name}"),
                    t2.ok().map(|t| t.as_array()[i]),
                    tilde[i],
                ));
            }
            let expected_size = |l: PartitionLabel| match l {
                PartitionLabel::A1 | PartitionLabel::B1 => 1,
                PartitionLabel::A2 | PartitionLabel::B2 => 2,
                PartitionLabel::A3 => 4,
            };
            let size_violations = class_of
                .iter()
                .filter(|(u, m)| m.len() != expected_size(labels[u]))
                .count() as i64;
            checks.push(Check::eq("class_size_by_label", Some(0), size_violations));
            checks.push(Check::eq(
                "jbar_class_vs_census",
                Some(0),
                class_mismatch(&|u| TriplingParam::new(u).expect("admissible").jbar_class()),
            ));
            let mut criterion = 0i64;
            for &u in class_of.keys() {
                criterion += TriplingParam::new(u)
                    .expect("admissible")
                    .isomorphism_criterion_disagreements()? as i64;
            }
            checks.push(Check::eq("iso_criterion_vs_direct", Some(0), criterion));
            if let Some(n2) = n2 {
                checks.push(hasse("N2", q, n2));
            }
        }
        Family::Doubling => {
            let n = doubling::auxiliary_count(field)?;
            quantities.n = n;
            let jbar_formula = doubling::count_jbar_formula(q) as i64;
            let fq_formula = ok(doubling::count_fq_from(
                q,
                field.characteristic(),
                field.degree(),
                n,
            ));
            quantities.jbar_formula = Some(jbar_formula);
            quantities.fq_formula = fq_formula;
            checks.push(Check::eq("jbar_count", Some(jbar_formula), jbar_oracle));
            checks.push(Check::eq("fq_count", fq_formula, fq_oracle));

            let count_size = |s: usize| raw.iter().filter(|c| c.1.len() == s).count() as i64;
            let c3 = doubling::c3_formula(q);
            quantities.c3 = Some(c3);
            checks.push(Check::eq("c3", Some(c3 as i64), count_size(3)));
            checks.push(Check::eq(
                "c1",
                Some(doubling::c1_formula(q) as i64),
                count_size(1),
            ));
            checks.push(Check::eq(
                "class_size_other",
                Some(0),
                raw.iter()
                    .filter(|c| c.1.len() != 1 && c.1.len() != 3)
                    .count() as i64,
            ));
            checks.push(Check::eq(
                "jbar_class_vs_census",
                Some(0),
                class_mismatch(&|u| DoublingParam::new(u).expect("admissible").jbar_class()),
            ));

            let n_q = doubling::n_q_direct(field)?;
            let nbar = doubling::nbar(q);
            quantities.n_q = Some(n_q);
            quantities.nbar = Some(nbar);
            let pairs = |s: usize| (s * (s.saturating_sub(1))) as i64;
            let n_q_census: i64 = raw
                .iter()
                .flat_map(|c| &c.2)
                .map(|b| 2 * pairs(b.len()))
                .sum();
            let nbar_census: i64 = raw.iter().map(|c| 2 * pairs(c.1.len())).sum();
            checks.push(Check::eq(
                "n_q_closed",
                Some(doubling::n_q_closed(field)? as i64),
                n_q as i64,
            ));
            checks.push(Check::eq("n_q_census", Some(n_q as i64), n_q_census));
            checks.push(Check::eq("nbar_census", Some(nbar as i64), nbar_census));
            checks.push(Check::eq(
                "fq_chain",
                ok(doubling::count_fq_from_chain(q, n_q)),
                fq_oracle,
            ));
            if let Some(n) = n {
                checks.push(hasse("N", q, n));
            }
        }
    }

    if q <= EXHAUSTIVE_BOUND {
        checks.extend(exhaustive_checks(family, field)?);
    }

    let pass = checks.iter().all(|c| c.pass);
    Ok(VerificationRecord {
        family,
        q,
        p: field.characteristic(),
        k: field.degree(),
        checks,
        pass,
        quantities,
    })
}

/// For each ordered pair `(u, v)` of parameters, the number of changes of
/// variables `(alpha, r)` over F_q taking `E_u` to `E_v`.
pub fn orbit_table<'f>(
    family: Family,
    field: &'f FiniteField,
) -> Result<HashMap<(Elem<'f>, Elem<'f>), u64>, CensusError> {
    let mut table = HashMap::new();
    for u in admissible(family, field)? {
        let c = family_curve(family, u);
        for alpha in field.units() {
            for r in field.elements() {
                if let Some(v) = family_member(family, &c.apply(&IsoWitness { alpha, r })) {
                    *table.entry((u, v)).or_insert(0) += 1;
                }
            }
        }
    }
    Ok(table)
}

/// Checks that need the full `(alpha, r)` enumeration.
pub fn exhaustive_checks(family: Family, field: &FiniteField) -> Result<Vec<Check>, CensusError> {
    let table = orbit_table(family, field)?;
    let params = admissible(family, field)?;
    let mut checks = Vec::new();

    // structured isomorphism test against the enumeration, every ordered pair
    let mut disagree = 0i64;
    for &u in &params {
        let cu = family_curve(family, u);
        for &v in &params {
            let cv = family_curve(family, v);
            let w = cu.isomorphic_fq(&cv)?;
            let valid = w.is_none_or(|w| cu.apply(&w) == cv);
            if w.is_some() != table.contains_key(&(u, v)) || !valid {
                disagree += 1;
            }
        }
    }
    checks.push(Check::eq("isomorphic_fq_vs_exhaustive", Some(0), disagree));

    let distinct: Vec<(Elem<'_>, Elem<'_>)> =
        table.keys().copied().filter(|(u, v)| u != v).collect();
    match family {
        Family::Tripling => {
            let mut predicted = std::collections::HashSet::new();
            for w in field.elements() {
                if let Ok(Some(pair)) = tripling::iso_pair_from_w(w) {
                    if !pair.degenerate {
                        predicted.insert((pair.u, pair.v));
                    }
                }
            }
            let brute: std::collections::HashSet<_> = distinct.iter().copied().collect();
            let mismatch = predicted.symmetric_difference(&brute).count() as i64;
            checks.push(Check::eq(
                "iso_pair_from_w_vs_exhaustive",
                Some(0),
                mismatch,
            ));
        }
        Family::Doubling => {
            let mut predicted = std::collections::HashSet::new();
            for b in field.elements() {
                if let Ok(Some(s)) = doubling::pair_from_b(b) {
                    if s.fq_isomorphic() && s.u != s.v {
                        predicted.insert((s.u, s.v));
                    }
                }
            }
            let brute: std::collections::HashSet<_> = distinct.iter().copied().collect();
            let mismatch = predicted.symmetric_difference(&brute).count() as i64;
            checks.push(Check::eq("pair_from_b_vs_exhaustive", Some(0), mismatch));
            let isomorphisms: u64 = distinct.iter().map(|k| table[k]).sum();
            checks.push(Check::eq(
                "n_q_exhaustive",
                Some(doubling::n_q_direct(field)? as i64),
                isomorphisms as i64,
            ));
            checks.push(Check::eq(
                "n_q_pairs_exhaustive",
                Some(2 * distinct.len() as i64),
                isomorphisms as i64,
            ));
        }
    }
    Ok(checks)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Selection {
    Tripling,
    Doubling,
    Both,
}

impl Selection {
    pub fn families(self) -> &'static [Family] {
        match self {
            Selection::Tripling => &[Family::Tripling],
            Selection::Doubling => &[Family::Doubling],
            Selection::Both => &[Family::Tripling, Family::Doubling],
        }
    }
}

/// The `(family, q, p, k)` tasks a sweep will run, in output order.
pub fn sweep_plan(
    selection: Selection,
    q_min: u64,
    q_max: u64,
) -> Result<Vec<(Family, u64, u64, u32)>, CensusError> {
    if q_min > q_max {
        return Err(CensusError::EmptyRange { q_min, q_max });
    }
    let mut plan = Vec::new();
    for (q, p, k) in prime_powers_in(q_min, q_max) {
        for &family in selection.families() {
            if p >= family.min_characteristic() {
                plan.push((family, q, p, k));
            }
        }
    }
    Ok(plan)
}

/// Verifies every admissible `(family, q)` in the range on `jobs` workers.
/// Records come back in plan order regardless of scheduling.
pub fn sweep(
    selection: Selection,
    q_min: u64,
    q_max: u64,
    jobs: usize,
) -> Result<Vec<VerificationRecord>, CensusError> {
    let plan = sweep_plan(selection, q_min, q_max)?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
        .map_err(|e| CensusError::Pool(e.to_string()))?;
    pool.install(|| {
        plan.par_iter()
            .map(|&(family, _, p, k)| {
                let field = FiniteField::with_bound(p, k, CENSUS_BOUND)?;
                verify(family, &field)
            })
            .collect()
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fq(q: u64) -> FiniteField {
        FiniteField::of_order(q).unwrap()
    }

    #[test]
    fn census_examples() {
        let r = brute_census(Family::Tripling, &fq(7)).unwrap();
        assert_eq!((r.jbar_count, r.fq_count), (5, 5));
        let r = brute_census(Family::Doubling, &fq(5)).unwrap();
        assert_eq!((r.jbar_count, r.fq_count), (3, 3));
        let mut js: Vec<_> = r.classes.iter().map(|c| c.j.clone()).collect();
        js.sort();
        assert_eq!(
            js,
            vec![ElemValue::Int(0), ElemValue::Int(1), ElemValue::Int(3)]
        );
        let r = brute_census(Family::Tripling, &fq(5)).unwrap();
        assert_eq!((r.jbar_count, r.fq_count), (2, 2));
        let big = r.classes.iter().find(|c| c.members.len() == 2).unwrap();
        assert_eq!(big.blocks, vec![vec![ElemValue::Int(3), ElemValue::Int(4)]]);
    }

    #[test]
    fn census_rejects_bad_fields() {
        assert!(matches!(
            brute_census(Family::Tripling, &fq(3)),
            Err(CensusError::Family(FamilyError::Characteristic { .. }))
        ));
        let f = FiniteField::new(10007, 1).unwrap();
        assert!(matches!(
            brute_census(Family::Doubling, &f),
            Err(CensusError::Bound { .. })
        ));
    }

    #[test]
    fn census_is_deterministic_and_round_trips() {
        let f = fq(25);
        let a = brute_census(Family::Tripling, &f).unwrap();
        let b = brute_census(Family::Tripling, &f).unwrap();
        let ja = serde_json::to_string(&a).unwrap();
        assert_eq!(ja, serde_json::to_string(&b).unwrap());
        let back: CensusReport = serde_json::from_str(&ja).unwrap();
        assert_eq!(back, a);
    }

    #[test]
    fn verify_examples() {
        let r = verify(Family::Doubling, &fq(9)).unwrap();
        assert!(r.pass, "{:?}", r.failures().collect::<Vec<_>>());
        assert_eq!(r.quantities.jbar_oracle, 5);
        assert_eq!(r.quantities.fq_oracle, 6);
        let r = verify(Family::Tripling, &fq(13)).unwrap();
        assert_eq!(r.check("jbar_count").unwrap().formula, Some(10));
        assert!(r.pass, "{:?}", r.failures().collect::<Vec<_>>());
        let r = verify(Family::Tripling, &fq(7)).unwrap();
        assert_eq!(r.quantities.n1, Some(25));
        assert_eq!(r.check("fq_count").unwrap().formula, Some(5));
        assert!(r.pass);
    }

    #[test]
    fn sweep_plans() {
        let qs = |sel, lo, hi| {
            sweep_plan(sel, lo, hi)
                .unwrap()
                .into_iter()
                .map(|(f, q, _, _)| (f, q))
                .collect::<Vec<_>>()
        };
        let d = Family::Doubling;
        let t = Family::Tripling;
        assert_eq!(
            qs(Selection::Doubling, 3, 10),
            vec![(d, 3), (d, 5), (d, 7), (d, 9)]
        );
        assert_eq!(
            qs(Selection::Tripling, 5, 13),
            vec![(t, 5), (t, 7), (t, 11), (t, 13)]
        );
        assert_eq!(qs(Selection::Both, 3, 3), vec![(d, 3)]);
        assert!(matches!(
            sweep_plan(Selection::Both, 10, 9),
            Err(CensusError::EmptyRange { .. })
        ));
    }

    #[test]
    fn sweep_order_ignores_worker_count() {
        let one = sweep(Selection::Both, 3, 30, 1).unwrap();
        let four = sweep(Selection::Both, 3, 30, 4).unwrap();
        assert_eq!(one, four);
        assert!(one.iter().all(|r| r.pass));
    }
}
