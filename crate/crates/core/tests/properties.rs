use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use specht::garnir::{eta, h_c, standard_tabloid, RelationFamily, Straightener};
use specht::json::{emit_vector, parse_vector, to_string};
use specht::lanke::{canonicalize_bracket, lanke_ambient, omega, phi};
use specht::linalg::{echelonize, subspace_equal, Ambient, ModuleVector, Rational};
use specht::maps::alpha;
use specht::partition::{syt_count, syt_enumerate, Partition};
use specht::tabloid::{act, canonicalize_column, Filling, Permutation};

fn partition(max_size: usize) -> impl Strategy<Value = Partition> {
    prop::collection::vec(1..=4usize, 1..=4)
        .prop_filter("size", move |parts| parts.iter().sum::<usize>() <= max_size)
        .prop_map(|mut parts| {
            parts.sort_unstable_by(|a, b| b.cmp(a));
            Partition::new(parts).unwrap()
        })
}

fn two_columns() -> impl Strategy<Value = Partition> {
    (1..=4usize).prop_flat_map(|n| (Just(n), 1..=n)).prop_map(|(n, m)| Partition::two_column(n, m).unwrap())
}

fn perm(size: usize, seed: u64) -> Permutation {
    Permutation::random(size, &mut ChaCha8Rng::seed_from_u64(seed))
}

fn vector(ambient: Ambient, terms: Vec<(usize, i64)>) -> ModuleVector {
    let dim = ambient.dim();
    ModuleVector::from_terms(
        ambient,
        terms.into_iter().map(|(i, c)| (i % dim, Rational::from_integer(c.into()))),
    )
}

fn terms() -> impl Strategy<Value = Vec<(usize, i64)>> {
    prop::collection::vec((0..10_000usize, -4..=4i64), 0..5)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn action_is_a_left_action(shape in partition(7), a in any::<u64>(), b in any::<u64>(), t in terms()) {
        let (s, u) = (perm(shape.size(), a), perm(shape.size(), b));
        for amb in [Ambient::Column(shape.clone()), Ambient::Row(shape.clone())] {
            let v = vector(amb, t.clone());
            prop_assert_eq!(act(&s.compose(&u), &v).unwrap(), act(&s, &act(&u, &v).unwrap()).unwrap());
        }
    }

    #[test]
    fn column_swaps_negate(shape in partition(7), seed in any::<u64>()) {
        let s = perm(shape.size(), seed);
        let mut next = 0;
        let cols: Vec<Vec<usize>> = shape.column_lengths().iter().map(|&l| {
            let c = s.images()[next..next + l].to_vec();
            next += l;
            c
        }).collect();
        let f = Filling::with_shape(&shape, cols.clone()).unwrap();
        if cols[0].len() >= 2 {
            let mut swapped = cols;
            swapped[0].swap(0, 1);
            let g = Filling::with_shape(&shape, swapped).unwrap();
            prop_assert_eq!(canonicalize_column(&g).to_vector(), -&canonicalize_column(&f).to_vector());
        }
    }

    #[test]
    fn alpha_and_h_are_equivariant(shape in partition(6), seed in any::<u64>(), t in terms()) {
        let s = perm(shape.size(), seed);
        let v = vector(Ambient::Column(shape.clone()), t);
        let sv = act(&s, &v).unwrap();
        prop_assert_eq!(alpha(&sv).unwrap(), act(&s, &alpha(&v).unwrap()).unwrap());
        for c in 1..shape.num_columns() {
            prop_assert_eq!(h_c(&sv, c).unwrap(), act(&s, &h_c(&v, c).unwrap()).unwrap());
        }
    }

    #[test]
    fn eta_is_equivariant(shape in two_columns(), seed in any::<u64>(), t in terms()) {
        let s = perm(shape.size(), seed);
        let v = vector(Ambient::Column(shape), t);
        prop_assert_eq!(eta(&act(&s, &v).unwrap()).unwrap(), act(&s, &eta(&v).unwrap()).unwrap());
    }

    #[test]
    fn phi_is_equivariant(n in 2..=4usize, seed in any::<u64>(), t in terms()) {
        let s = perm(2 * n - 1, seed);
        let v = vector(lanke_ambient(n).unwrap(), t);
        prop_assert_eq!(phi(&act(&s, &v).unwrap()).unwrap(), act(&s, &phi(&v).unwrap()).unwrap());
    }

    #[test]
    fn omega_commutes_with_relabelling(n in 2..=4usize, a in any::<u64>(), b in any::<u64>()) {
        let labels = perm(2 * n - 1, a);
        let s = perm(2 * n - 1, b);
        let (x, y) = labels.images().split_at(n);
        let moved_x: Vec<usize> = x.iter().map(|&l| s.apply(l)).collect();
        let moved_y: Vec<usize> = y.iter().map(|&l| s.apply(l)).collect();
        let lhs = omega(&canonicalize_bracket(&moved_x, &moved_y).unwrap());
        let rhs = act(&s, &omega(&canonicalize_bracket(x, y).unwrap())).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn echelon_form_is_idempotent(shape in partition(6), rows in prop::collection::vec(terms(), 0..6)) {
        let amb = Ambient::Column(shape);
        let vs: Vec<ModuleVector> = rows.into_iter().map(|t| vector(amb.clone(), t)).collect();
        let once = echelonize(&amb, &vs).unwrap();
        let twice = echelonize(&amb, once.rows()).unwrap();
        prop_assert!(subspace_equal(&once, &twice).unwrap());
        prop_assert_eq!(once.rows(), twice.rows());
        for v in &vs {
            prop_assert!(once.contains(v).unwrap());
        }
    }

    #[test]
    fn hook_length_matches_enumeration(shape in partition(8)) {
        prop_assert_eq!(syt_enumerate(&shape).len() as u128, syt_count(&shape));
    }

    #[test]
    fn vector_json_round_trips(shape in partition(6), t in terms()) {
        let v = vector(Ambient::Column(shape.clone()), t);
        let text = to_string(&emit_vector(&v));
        let back = parse_vector(&specht::json::parse_str(&text).unwrap(), &Ambient::Column(shape)).unwrap();
        prop_assert_eq!(&back, &v);
        prop_assert_eq!(to_string(&emit_vector(&back)), text);
    }
}

#[test]
fn standard_tabloids_straighten_to_themselves() {
    for parts in [vec![2, 1], vec![2, 2, 1], vec![3, 2], vec![3, 1, 1]] {
        let shape = Partition::new(parts).unwrap();
        for family in RelationFamily::ALL {
            let st = Straightener::new(&shape, family).unwrap();
            for t in syt_enumerate(&shape) {
                let got = st.straighten(&standard_tabloid(&t).to_vector()).unwrap();
                assert_eq!(got, vec![(t.clone(), Rational::from_integer(1.into()))]);
            }
        }
    }
}
