use super::andrianov::{andrianov_terms, evaluate_terms, SourceTerm};
use super::HeckeIndex;
use crate::fourier::SiegelExpansion;
use crate::par::{self, Strategy};
use crate::quadform::{canonical_forms, HalfIntegralForm};

fn covered(f: &SiegelExpansion, terms: &[SourceTerm]) -> bool {
    terms.iter().all(|t| f.missing_trace(&t.source).is_none())
}

/// Demand analysis for every candidate class: `(class, terms, covered)`.
fn plan(f: &SiegelExpansion, idx: &HeckeIndex, strategy: Strategy) -> (u64, Vec<(HalfIntegralForm, Vec<SourceTerm>)>) {
    // a(p^delta N) is always demanded, so nothing beyond T / p^delta can work.
    let limit = f.max_trace() / idx.value();
    let classes = canonical_forms(limit);
    let planned = par::map(strategy, &classes, |n| {
        let terms = andrianov_terms(idx, n);
        let ok = covered(f, &terms);
        (*n, terms, ok)
    });
    let out_trace = planned
        .iter()
        .find(|(_, _, ok)| !ok)
        .map(|(n, _, _)| n.trace() - 1)
        .unwrap_or(limit);
    let kept = planned
        .into_iter()
        .filter(|(n, _, _)| n.trace() <= out_trace)
        .map(|(n, terms, _)| (n, terms))
        .collect();
    (out_trace, kept)
}

/// The largest `T'` such that every class of trace `<= T'` has all of its
/// source coefficients in `f`.
pub fn hecke_output_trace(f: &SiegelExpansion, idx: &HeckeIndex) -> u64 {
    plan(f, idx, Strategy::default()).0
}

/// `T(p^delta) F`, truncated at [`hecke_output_trace`].
pub fn apply_hecke(f: &SiegelExpansion, idx: &HeckeIndex) -> SiegelExpansion {
    apply_hecke_with(f, idx, Strategy::default())
}

pub fn apply_hecke_with(f: &SiegelExpansion, idx: &HeckeIndex, strategy: Strategy) -> SiegelExpansion {
    let (out_trace, planned) = plan(f, idx, strategy);
    let values = par::map(strategy, &planned, |(_, terms)| {
        evaluate_terms(f, idx.p(), terms).expect("demand checked in plan")
    });
    SiegelExpansion::from_class_values(f.weight(), out_trace, values).expect("one value per class")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::int;
    use crate::fourier::{cusp_form_10, eisenstein};

    #[test]
    fn eisenstein_is_an_eigenform() {
        let e4 = eisenstein(4, 16).unwrap();
        let t2 = apply_hecke(&e4, &HeckeIndex::new(2, 1).unwrap());
        assert!(t2.max_trace() >= 4);
        assert_eq!(t2, e4.truncate(t2.max_trace()).scale(&int(45)));
    }

    #[test]
    fn zero_maps_to_zero() {
        let z = SiegelExpansion::zero(6, 10);
        let t = apply_hecke(&z, &HeckeIndex::new(3, 1).unwrap());
        assert!(t.is_zero());
        assert_eq!(t.weight(), 6);
    }

    #[test]
    fn output_trace_is_tight() {
        let e4 = eisenstein(4, 13).unwrap();
        let idx = HeckeIndex::new(2, 1).unwrap();
        let t = hecke_output_trace(&e4, &idx);
        for n in canonical_forms(t) {
            assert!(covered(&e4, &andrianov_terms(&idx, &n)));
        }
        let beyond = canonical_forms(t + 1);
        assert!(beyond
            .iter()
            .filter(|n| n.trace() == t + 1)
            .any(|n| !covered(&e4, &andrianov_terms(&idx, n))));
    }

    #[test]
    fn operators_commute() {
        let chi = cusp_form_10(14).unwrap();
        let (t2, t3) = (HeckeIndex::new(2, 1).unwrap(), HeckeIndex::new(3, 1).unwrap());
        let a = apply_hecke(&apply_hecke(&chi, &t2), &t3);
        let b = apply_hecke(&apply_hecke(&chi, &t3), &t2);
        let t = a.max_trace().min(b.max_trace());
        assert_eq!(a.truncate(t), b.truncate(t));
        assert!(!a.truncate(t).is_zero());
    }

    #[test]
    fn strategies_agree() {
        let e6 = eisenstein(6, 12).unwrap();
        let idx = HeckeIndex::new(3, 1).unwrap();
        assert_eq!(
            apply_hecke_with(&e6, &idx, Strategy::Sequential),
            apply_hecke_with(&e6, &idx, Strategy::Parallel)
        );
    }
}
