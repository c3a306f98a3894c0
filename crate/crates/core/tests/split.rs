mod oracle;

use knotpoly::factor::mignotte_bound;
use knotpoly::split::{conant_check, kawauchi_split, solve_system, SplitError};
use knotpoly::IntPoly;
use num_bigint::BigInt;
use num_traits::ToPrimitive;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn from_i128(c: &[i128]) -> IntPoly {
    IntPoly::new(c.iter().map(|&x| BigInt::from(x)).collect())
}

fn random_f(rng: &mut ChaCha8Rng) -> Vec<i128> {
    let deg = rng.gen_range(0..=6);
    let mut f = vec![1i128];
    f.extend((0..deg).map(|_| rng.gen_range(-5..=5)));
    oracle::trim(f)
}

#[test]
fn constructed_products_split_with_exact_witness() {
    let mut rng = ChaCha8Rng::seed_from_u64(99);
    for _ in 0..100 {
        let f = random_f(&mut rng);
        let c = from_i128(&oracle::mul(&f, &oracle::negate_var(&f)));
        let v = kawauchi_split(&c).unwrap();
        assert!(v.splits, "{c}");
        let w = v.witness.clone().unwrap();
        assert_eq!(&w * &w.substitute_neg(), c);
        assert_eq!(w.constant_term(), BigInt::from(1));
        assert!(v.obstructions.is_empty());
        assert!(conant_check(&c).unwrap().holds, "congruence fails for {c}");
    }
}

// C = 1 + a z^2 + b z^4 splits iff some F = 1 + u z + v z^2 has
// F(z) F(-z) = 1 + (2v - u^2) z^2 + v^2 z^4.
fn brute_split(a: i128, b: i128, bound: i128) -> bool {
    (-bound..=bound).any(|u| (-bound..=bound).any(|v| 2 * v - u * u == a && v * v == b))
}

#[test]
fn small_even_polynomials_agree_with_brute_force() {
    for a in -3i128..=3 {
        for b in -3i128..=3 {
            let c = from_i128(&[1, 0, a, 0, b]);
            let bound = mignotte_bound(&c).to_i128().unwrap();
            let v = kawauchi_split(&c).unwrap();
            assert_eq!(v.splits, brute_split(a, b, bound), "{c}");
            if v.splits {
                let w = v.witness.unwrap();
                assert_eq!(&w * &w.substitute_neg(), c);
            }
        }
    }
}

#[test]
fn obstruction_entries_are_even_with_odd_exponent() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..50 {
        // F(z)F(-z) times a random even factor g(z^2)^e
        let f = random_f(&mut rng);
        let g: Vec<i128> = [1, 0, rng.gen_range(-3..=3), 0, rng.gen_range(-3..=3)].to_vec();
        let e = rng.gen_range(1..=2);
        let mut c = oracle::mul(&f, &oracle::negate_var(&f));
        for _ in 0..e {
            c = oracle::mul(&c, &g);
        }
        let c = from_i128(&c);
        let v = kawauchi_split(&c).unwrap();
        for (p, exp) in &v.obstructions {
            assert!(p.is_even() && exp % 2 == 1);
        }
        for (p, exp) in &v.even_factors {
            assert!(p.is_even() && exp % 2 == 0);
        }
        for (q, partner, _) in &v.paired_factors {
            assert!(!q.is_even());
            assert_eq!(q.substitute_neg().primitive_part(), partner.primitive_part());
        }
        if let Some(w) = &v.witness {
            assert_eq!(&(w * &w.substitute_neg()), &c);
        }
    }
}

#[test]
fn diophantine_negative_control_and_precondition() {
    assert_eq!(solve_system((0, 0, 0), 16).unwrap().solutions, vec![(0, 0, 0)]);
    assert!(matches!(solve_system((16, 16, 16), 3), Err(SplitError::BoundTooSmall(3))));
}
