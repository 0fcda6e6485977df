mod common;

use common::{
    boolean_saturation, from_mask, rational_entries, rational_rank, rng, sample_vector,
    vector_strategy, Sample,
};
use proptest::prelude::*;
use rand::Rng;
use upto_core::congruence::{in_congruence_ring, Mode, RewriteSystem, Strategy as RewriteStrategy};
use upto_core::{Boolean, LMonoid, MaxTimes, Rational, TropicalNat, Vector};

const STRATEGIES: [RewriteStrategy; 4] = [
    RewriteStrategy::RoundRobin,
    RewriteStrategy::ReverseRoundRobin,
    RewriteStrategy::RandomFair(17),
    RewriteStrategy::Greedy,
];

fn small_tropical() -> impl Strategy<Value = TropicalNat> {
    prop_oneof![1 => Just(TropicalNat::INF), 3 => (0u64..=5).prop_map(TropicalNat::fin)]
}

fn tropical_vec(dim: usize) -> impl Strategy<Value = Vector<TropicalNat>> {
    proptest::collection::vec(small_tropical(), dim).prop_map(Vector::new)
}

type Pairs = Vec<(Vector<TropicalNat>, Vector<TropicalNat>)>;

/// A dimension, up to four generating pairs and two probe vectors.
fn tropical_system(
) -> impl Strategy<Value = (usize, Pairs, Vector<TropicalNat>, Vector<TropicalNat>)> {
    (1usize..=4).prop_flat_map(|d| {
        (
            Just(d),
            proptest::collection::vec((tropical_vec(d), tropical_vec(d)), 0..=4),
            tropical_vec(d),
            tropical_vec(d),
        )
    })
}

fn system<S: LMonoid>(d: usize, pairs: &[(Vector<S>, Vector<S>)], mode: Mode) -> RewriteSystem<S> {
    RewriteSystem::from_relation(d, pairs, mode).unwrap()
}

proptest! {
    #[test]
    fn normal_forms_do_not_depend_on_strategy((d, pairs, v, _) in tropical_system()) {
        let nfs: Vec<_> = STRATEGIES
            .iter()
            .map(|&s| system(d, &pairs, Mode::Symmetric).with_strategy(s).normal_form(&v).unwrap())
            .collect();
        for nf in &nfs[1..] {
            prop_assert_eq!(nf, &nfs[0]);
        }
    }

    #[test]
    fn normal_form_is_an_extensive_idempotent_closure((d, pairs, v, w) in tropical_system()) {
        let mut rs = system(d, &pairs, Mode::Symmetric);
        let nv = rs.normal_form(&v).unwrap();
        prop_assert!(v.leq(&nv));
        prop_assert_eq!(rs.normal_form(&nv).unwrap(), nv.clone());
        // monotone
        let joined = v.combine(&w);
        prop_assert!(nv.leq(&rs.normal_form(&joined).unwrap()));
        // every generating pair is identified
        for (a, b) in &pairs {
            prop_assert_eq!(rs.normal_form(a).unwrap(), rs.normal_form(b).unwrap());
        }
    }

    #[test]
    fn directed_normal_forms_are_closures((d, pairs, v, w) in tropical_system()) {
        let mut rs = system(d, &pairs, Mode::Directed);
        let nv = rs.normal_form(&v).unwrap();
        prop_assert!(v.leq(&nv));
        prop_assert_eq!(rs.normal_form(&nv).unwrap(), nv.clone());
        prop_assert!(nv.leq(&rs.normal_form(&v.combine(&w)).unwrap()));
        for (a, b) in &pairs {
            prop_assert!(rs.in_precongruence(a, b).unwrap());
        }
    }

    /// Each rewriting step `v ⇝ v ⊔ r·(l → v)` stays within the class of
    /// `v`: the join of `v` with a multiple of `r` below the multiple of `l`
    /// that `v` contains.
    #[test]
    fn each_step_is_sound((d, pairs, v, _) in tropical_system()) {
        let rs = system(d, &pairs, Mode::Symmetric);
        for rule in rs.rules() {
            let c = rule.lhs.residuum(&v);
            prop_assert!(rule.lhs.scale(&c).leq(&v));
            if let Some(next) = upto_core::congruence::rewrite_step(&v, rule) {
                prop_assert_eq!(next.clone(), v.combine(&rule.rhs.scale(&c)));
                prop_assert!(v.leq(&next) && v != next);
            }
        }
    }

    #[test]
    fn maxtimes_rewriting_terminates_on_unit_pairs(
        (d, i, j, v) in (1usize..=4).prop_flat_map(|d| (Just(d), 0..d, 0..d, vector_strategy::<MaxTimes>(d)))
    ) {
        let pairs = [(Vector::<MaxTimes>::unit(d, i), Vector::unit(d, j))];
        let mut rs = system(d, &pairs, Mode::Symmetric);
        prop_assert!(rs.normal_form(&v).is_ok());
    }

    #[test]
    fn ring_congruence_is_closed_under_linear_operations(
        (pairs, z, s) in (1usize..=4).prop_flat_map(|d| (
            proptest::collection::vec((vector_strategy::<Rational>(d), vector_strategy::<Rational>(d)), 1..=3),
            vector_strategy::<Rational>(d),
            Rational::strategy(),
        ))
    ) {
        let (a, b) = &pairs[0];
        prop_assert!(in_congruence_ring(&a.combine(&z), &b.combine(&z), &pairs));
        prop_assert!(in_congruence_ring(&a.scale(&s), &b.scale(&s), &pairs));
        prop_assert!(in_congruence_ring(b, a, &pairs));
        if let Some((c, e)) = pairs.get(1) {
            prop_assert!(in_congruence_ring(&a.combine(c), &b.combine(e), &pairs));
        }
    }

    #[test]
    fn ring_congruence_matches_rank(
        (pairs, v, w) in (1usize..=4).prop_flat_map(|d| (
            proptest::collection::vec((vector_strategy::<Rational>(d), vector_strategy::<Rational>(d)), 0..=3),
            vector_strategy::<Rational>(d),
            vector_strategy::<Rational>(d),
        ))
    ) {
        let diff = |a: &Vector<Rational>, b: &Vector<Rational>| -> Vec<_> {
            rational_entries(a).into_iter().zip(rational_entries(b)).map(|(x, y)| x - y).collect()
        };
        let mut gens: Vec<_> = pairs.iter().map(|(a, b)| diff(a, b)).collect();
        let before = rational_rank(&gens);
        gens.push(diff(&v, &w));
        let expected = rational_rank(&gens) == before;
        prop_assert_eq!(in_congruence_ring(&v, &w, &pairs), expected);
    }
}

/// Boolean congruence membership against saturation of `c(R)` on every
/// vector pair.
#[test]
fn boolean_congruence_matches_saturation() {
    let mut r = rng(3);
    for _ in 0..64 {
        let d = r.random_range(1..=3);
        let n_pairs = r.random_range(0..=3);
        let masks: Vec<(u32, u32)> = (0..n_pairs)
            .map(|_| (r.random_range(0..1 << d), r.random_range(0..1 << d)))
            .collect();
        let closure = boolean_saturation(d, &masks);
        let pairs: Vec<_> = masks
            .iter()
            .map(|&(a, b)| (from_mask(a, d), from_mask(b, d)))
            .collect();
        let mut rs = RewriteSystem::<Boolean>::from_relation(d, &pairs, Mode::Symmetric).unwrap();
        for v in 0..1u32 << d {
            for w in 0..1u32 << d {
                let got = rs
                    .in_congruence(&from_mask(v, d), &from_mask(w, d))
                    .unwrap();
                assert_eq!(
                    got,
                    closure.contains(&(v, w)),
                    "R={masks:?} v={v:b} w={w:b}"
                );
            }
        }
    }
}

#[test]
fn random_fair_strategy_is_reproducible() {
    let mut r = rng(9);
    for _ in 0..50 {
        let d = r.random_range(1..=4);
        let pairs: Vec<(Vector<TropicalNat>, Vector<TropicalNat>)> = (0..3)
            .map(|_| (sample_vector(&mut r, d), sample_vector(&mut r, d)))
            .collect();
        let v: Vector<TropicalNat> = sample_vector(&mut r, d);
        let nf = |seed| {
            RewriteSystem::from_relation(d, &pairs, Mode::Symmetric)
                .unwrap()
                .with_strategy(RewriteStrategy::RandomFair(seed))
                .normal_form(&v)
                .unwrap()
        };
        assert_eq!(nf(1), nf(2));
    }
}

#[test]
fn tropical_rewriting_never_needs_much_fuel() {
    let mut r = rng(21);
    for _ in 0..200 {
        let d = r.random_range(1..=4);
        let pairs: Vec<(Vector<TropicalNat>, Vector<TropicalNat>)> = (0..r.random_range(1..=4))
            .map(|_| (sample_vector(&mut r, d), sample_vector(&mut r, d)))
            .collect();
        let mut rs = RewriteSystem::from_relation(d, &pairs, Mode::Symmetric)
            .unwrap()
            .with_fuel(100_000);
        let v: Vector<TropicalNat> = sample_vector(&mut r, d);
        assert!(rs.normal_form(&v).is_ok());
        assert!(v.leq(&rs.normal_form(&v).unwrap()));
    }
}
