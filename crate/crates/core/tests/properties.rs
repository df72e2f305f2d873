use num_rational::BigRational;
use proptest::prelude::*;

use tl_markov::diagrams::{
    apply_quad, contract, enumerate, insert_arc, leq, matching_to_seq, quad_sites, seq_to_matching,
    Matching,
};
use tl_markov::markov::{gram, pair_diagrams, pair_vectors, DiagramVector};
use tl_markov::qpoly::chebyshev;
use tl_markov::{Polynomial, RationalFunction, RestrictedSequence};

fn seq_strategy(max_n: usize) -> impl Strategy<Value = RestrictedSequence> {
    (1..=max_n)
        .prop_flat_map(|n| prop::collection::vec(any::<u32>(), n - 1))
        .prop_map(|raw| {
            let mut entries = vec![1u32];
            for r in raw {
                let prev = *entries.last().unwrap();
                entries.push(1 + r % (prev + 1));
            }
            RestrictedSequence::new(entries).unwrap()
        })
}

fn pair_strategy(max_n: usize) -> impl Strategy<Value = (RestrictedSequence, RestrictedSequence)> {
    (1..=max_n).prop_flat_map(|n| (seq_strategy_exact(n), seq_strategy_exact(n)))
}

fn seq_strategy_exact(n: usize) -> impl Strategy<Value = RestrictedSequence> {
    prop::collection::vec(any::<u32>(), n - 1).prop_map(|raw| {
        let mut entries = vec![1u32];
        for r in raw {
            let prev = *entries.last().unwrap();
            entries.push(1 + r % (prev + 1));
        }
        RestrictedSequence::new(entries).unwrap()
    })
}

fn poly_strategy() -> impl Strategy<Value = Polynomial> {
    prop::collection::vec(-6i64..=6, 0..5).prop_map(|c| Polynomial::from_ints(&c))
}

fn ratfun_strategy() -> impl Strategy<Value = RationalFunction> {
    (poly_strategy(), poly_strategy(), 1i64..=4).prop_filter_map("nonzero denominator", |(n, d, s)| {
        let n = n.scale(&BigRational::new(1.into(), s.into()));
        RationalFunction::new(n, d).ok()
    })
}

fn vector_strategy(n: usize) -> impl Strategy<Value = DiagramVector> {
    let basis = enumerate(n);
    let max_terms = basis.len().min(3);
    (
        prop::sample::subsequence(basis, 1..=max_terms),
        prop::collection::vec(ratfun_strategy(), max_terms),
    )
        .prop_map(move |(keys, cs)| DiagramVector::from_terms(n, keys.into_iter().zip(cs)).unwrap())
}

fn assert_normal(x: &RationalFunction) {
    assert!(x.den().is_monic(), "denominator of {x} is not monic");
    assert!(x.num().gcd(x.den()).unwrap().is_one(), "{x} is not reduced");
}

fn quad_successors(m: &Matching) -> Vec<RestrictedSequence> {
    quad_sites(m)
        .into_iter()
        .map(|s| apply_quad(m, s).unwrap().to_sequence())
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn ratfun_field_laws(a in ratfun_strategy(), b in ratfun_strategy(), c in ratfun_strategy()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert!((&a - &a).is_zero());
        if !a.is_zero() {
            prop_assert!((&a * &a.inv().unwrap()).is_one());
        }
        for x in [&a + &b, &a - &b, &a * &b, -&c] {
            assert_normal(&x);
        }
        if !b.is_zero() {
            assert_normal(&a.checked_div(&b).unwrap());
        }
    }

    #[test]
    fn div_rem_identity(a in poly_strategy(), b in poly_strategy()) {
        prop_assume!(!b.is_zero());
        let (quot, rem) = a.div_rem(&b).unwrap();
        prop_assert_eq!(&(&quot * &b) + &rem, a.clone());
        prop_assert!(rem.is_zero() || rem.degree() < b.degree());
        let g = a.gcd(&b).unwrap();
        prop_assert!(g.is_monic());
        prop_assert!(a.div_rem(&g).unwrap().1.is_zero());
        prop_assert!(b.div_rem(&g).unwrap().1.is_zero());
    }

    #[test]
    fn sequence_round_trips(s in seq_strategy(9)) {
        let m = seq_to_matching(&s);
        prop_assert_eq!(matching_to_seq(&m), s.clone());
        let text = s.to_string();
        prop_assert_eq!(text.parse::<RestrictedSequence>().unwrap(), s.clone());
        let json = serde_json::to_string(&s).unwrap();
        prop_assert_eq!(serde_json::from_str::<RestrictedSequence>(&json).unwrap(), s);
    }

    #[test]
    fn insert_and_contract_stay_valid(s in seq_strategy(8), k in any::<usize>(), j in any::<usize>()) {
        let m = s.to_matching();
        let n = m.size();
        let k = 1 + k % (2 * n + 1);
        let lifted = insert_arc(&m, k).unwrap();
        // re-validation through the checked constructor
        prop_assert_eq!(&Matching::from_arcs(&lifted.arcs()).unwrap(), &lifted);
        prop_assert_eq!(lifted.partner(k), k + 1);
        if n >= 1 {
            let j = 1 + j % (2 * n - 1);
            let (down, c) = contract(&m, j).unwrap();
            prop_assert_eq!(&Matching::from_arcs(&down.arcs()).unwrap(), &down);
            prop_assert_eq!(c, u32::from(m.partner(j) == j + 1));
            prop_assert_eq!(down.size(), n - 1);
        }
    }

    #[test]
    fn pairing_is_symmetric_and_bounded((a, b) in pair_strategy(8)) {
        let (ma, mb) = (a.to_matching(), b.to_matching());
        let ab = pair_diagrams(&ma, &mb).unwrap();
        prop_assert_eq!(ab, pair_diagrams(&mb, &ma).unwrap());
        prop_assert!(ab.exponent() >= 1 && ab.exponent() as usize <= a.len());
        prop_assert_eq!(pair_diagrams(&ma, &ma).unwrap().exponent() as usize, a.len());
    }

    #[test]
    fn fund_and_adjoint_random((a, b) in pair_strategy(8), k in any::<usize>()) {
        let (ma, mb) = (a.to_matching(), b.to_matching());
        let n = ma.size();
        let e = pair_diagrams(&ma, &mb).unwrap().exponent();
        let k = 1 + k % (2 * n + 1);
        let la = insert_arc(&ma, k).unwrap();
        let lb = insert_arc(&mb, k).unwrap();
        prop_assert_eq!(pair_diagrams(&la, &lb).unwrap().exponent(), e + 1);
        if k <= 2 * n {
            let la1 = insert_arc(&ma, k + 1).unwrap();
            prop_assert_eq!(pair_diagrams(&la1, &lb).unwrap().exponent(), e);
        }
        // adjoint with α = l_k(a) of size n+1 and β = b
        let alpha = la;
        for j in 1..=(2 * n + 1) {
            let (t, c) = contract(&alpha, j).unwrap();
            let lhs = c + pair_diagrams(&t, &mb).unwrap().exponent();
            let rhs = pair_diagrams(&alpha, &insert_arc(&mb, j).unwrap()).unwrap().exponent();
            prop_assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn contraction_inverts_insertion(s in seq_strategy(8), k in any::<usize>()) {
        let m = s.to_matching();
        let n = m.size();
        let k = 1 + k % (2 * n + 1);
        let lifted = insert_arc(&m, k).unwrap();
        for j in [k.wrapping_sub(1), k, k + 1] {
            if (1..=2 * n + 1).contains(&j) {
                prop_assert_eq!(&contract(&lifted, j).unwrap().0, &m);
            }
        }
    }

    #[test]
    fn littleprop(s in seq_strategy(9), j in any::<usize>()) {
        prop_assume!(s.len() >= 2);
        let m = s.to_matching();
        let n = m.size();
        let j = 1 + j % (2 * n - 1);
        let b = s.leading().unwrap() as usize;
        prop_assume!(j + 1 < b || j > b + 1);
        let lead = contract(&m, j).unwrap().0.to_sequence().leading().unwrap() as usize;
        if j + 1 < b {
            prop_assert_eq!(lead, b - 2);
        } else {
            prop_assert!(lead <= b);
        }
    }

    #[test]
    fn quad_moves_decrease(s in seq_strategy(9)) {
        for t in quad_successors(&s.to_matching()) {
            prop_assert!(leq(&t, &s).unwrap());
            prop_assert_ne!(&t, &s);
        }
    }

}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn pairing_is_bilinear(
        (v, w, u) in (1usize..=4).prop_flat_map(|n| (vector_strategy(n), vector_strategy(n), vector_strategy(n))),
        a in ratfun_strategy(),
    ) {
        let g = gram(v.size());
        let lhs = pair_vectors(&v.scale(&a).add(&w).unwrap(), &u, &g).unwrap();
        let rhs = &(&a * &pair_vectors(&v, &u, &g).unwrap()) + &pair_vectors(&w, &u, &g).unwrap();
        prop_assert_eq!(&lhs, &rhs);
        let lhs = pair_vectors(&u, &v.scale(&a).add(&w).unwrap(), &g).unwrap();
        prop_assert_eq!(lhs, rhs);
        prop_assert!(pair_vectors(&DiagramVector::zero(v.size()), &u, &g).unwrap().is_zero());
    }

    #[test]
    fn embedding_scales_by_q(
        (v, w) in (1usize..=4).prop_flat_map(|n| (vector_strategy(n), vector_strategy(n))),
    ) {
        let n = v.size();
        let lifted = pair_vectors(&v.insert_arc(1).unwrap(), &w.insert_arc(1).unwrap(), &gram(n + 1)).unwrap();
        prop_assert_eq!(lifted, &RationalFunction::q() * &pair_vectors(&v, &w, &gram(n)).unwrap());
    }
}

#[test]
fn chebyshev_recursion_degree_and_roots() {
    let q = Polynomial::q();
    for k in 1..=30 {
        let lhs = chebyshev(k).unwrap();
        let rhs = &(&q * &chebyshev(k - 1).unwrap()) - &chebyshev(k - 2).unwrap();
        assert_eq!(lhs, rhs);
    }
    for k in 0..=30 {
        let d = chebyshev(k).unwrap();
        assert_eq!(d.degree(), Some(k as usize));
        assert!(d.is_monic());
    }
    for m in 1..=8_i64 {
        let root = 2.0 * (std::f64::consts::PI / (m + 1) as f64).cos();
        assert!(chebyshev(m).unwrap().eval_f64(root).abs() < 1e-9);
    }
}

#[test]
fn round_trip_exhaustive_to_seven() {
    for n in 0..=7 {
        for s in enumerate(n) {
            assert_eq!(matching_to_seq(&seq_to_matching(&s)), s);
        }
    }
}

#[test]
fn insertion_preserves_and_reflects_order() {
    for n in 1..=5 {
        let all = enumerate(n);
        for k in 1..=2 * n + 1 {
            let lifted: Vec<RestrictedSequence> = all
                .iter()
                .map(|s| insert_arc(&s.to_matching(), k).unwrap().to_sequence())
                .collect();
            for (a, la) in all.iter().zip(&lifted) {
                for (b, lb) in all.iter().zip(&lifted) {
                    assert_eq!(leq(a, b).unwrap(), leq(la, lb).unwrap(), "k={k} a={a} b={b}");
                }
            }
        }
    }
}

#[test]
fn littleprop_exhaustive() {
    for n in 2..=6 {
        for s in enumerate(n) {
            let m = s.to_matching();
            let b = s.leading().unwrap() as usize;
            for j in (1..=2 * n - 1).filter(|&j| j + 1 < b || j > b + 1) {
                let lead = contract(&m, j).unwrap().0.to_sequence().leading().unwrap() as usize;
                if j + 1 < b {
                    assert_eq!(lead, b - 2, "{s} j={j}");
                } else {
                    assert!(lead <= b, "{s} j={j}");
                }
            }
        }
    }
}
