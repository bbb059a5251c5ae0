use partition_asymptotics::exact_partition::partition_pentagonal;
use partition_asymptotics::expansion::{
    expansion_term, mu, prefactor, r_hat, remainder_exact, t_bracket_simple, theta,
};
use partition_asymptotics::numerics::const_pi;
use partition_asymptotics::{PrecisionContext, Real};

fn ctx() -> PrecisionContext {
    PrecisionContext::new(80).unwrap()
}

// π√(2n/3)
fn hardy_ramanujan_exponent(n: usize, c: PrecisionContext) -> Real {
    const_pi(c) * (Real::from_i64(2 * n as i64, c) / 3).sqrt().unwrap()
}

#[test]
fn reconstruction_recovers_p() {
    let c = ctx();
    let table = partition_pentagonal(1000).unwrap();
    let tol = Real::parse(&format!("1e-{}", c.digits() - 12), c).unwrap();
    let points = (1..=1000).step_by(37).chain([999, 1000]);
    for n in points {
        let p = Real::from_integer(table.get(n).unwrap(), c);
        for terms in 0..=14 {
            let r = remainder_exact(n, terms, &table, c).unwrap();
            let back = prefactor(n, c) * (&r.partial_sum + &r.remainder);
            assert!(((back - &p) / &p).abs() < tol, "n={n} N={terms}");
            assert!(((r.reconstruct() - &p) / &p).abs() < tol);
        }
    }
}

#[test]
fn mediant_identity() {
    let c = ctx();
    let table = partition_pentagonal(500).unwrap();
    let tol = Real::parse("1e-60", c).unwrap();
    for n in (1..=500).step_by(7) {
        let rh = r_hat(n, &table, c).unwrap();
        for terms in 0..=12 {
            let r = remainder_exact(n, terms, &table, c).unwrap();
            let th = theta(n, terms, c).unwrap();
            assert!(th.is_positive() && th < Real::one(c), "n={n} N={terms}");
            let lhs = &r.remainder - &rh;
            let rhs = &th * expansion_term(n, terms, c);
            assert!((lhs - rhs).abs() < tol, "n={n} N={terms}");
            assert_eq!(r.theta.as_ref(), Some(&th));
        }
    }
}

#[test]
fn lemma3_chain() {
    let c = ctx();
    let one = Real::one(c);
    let pi = const_pi(c);
    let factor = Real::parse("0.97", c).unwrap();
    for n in 1..=1000usize {
        let n24 = 24 * n as i64;
        let first = Real::from_i64(n24, c) / Real::from_i64(n24 - 1, c)
            * (mu(n, c) - hardy_ramanujan_exponent(n, c)).exp().unwrap();
        assert!(first <= one, "(a) n={n}");
        let gap =
            Real::from_i64(n24 - 1, c).sqrt().unwrap() + Real::from_i64(n24, c).sqrt().unwrap();
        let last = &factor * ((&pi / 12) / gap).exp().unwrap();
        assert!(last < one, "(c) n={n}");
    }
    for k in 1..=1000 {
        let x = Real::from_i64(k, c) / 4000;
        let v = (-(&pi * &x / 12)).exp().unwrap() / (&one - &x * &x);
        assert!(v <= one, "(b) x={x}");
    }
}

#[test]
fn t_bracket_crosses_below_097_at_432() {
    let c = ctx();
    let limit = Real::parse("0.97", c).unwrap();
    assert!(t_bracket_simple(432, c) < limit);
    assert!(t_bracket_simple(431, c) >= limit);
}

#[test]
fn growth_rate() {
    // log p(n) / (π√(2n/3)) approaches 1 from below, slowly: the next term of
    // log p(n) is -log(4√3 n)
    let c = ctx();
    let table = partition_pentagonal(2000).unwrap();
    let mut prev = Real::zero(c);
    for n in (500..=2000).step_by(100) {
        let g = hardy_ramanujan_exponent(n, c);
        let ratio = Real::from_integer(table.get(n).unwrap(), c).ln().unwrap() / &g;
        let refined = (&g
            - (Real::from_i64(4 * n as i64, c) * Real::from_i64(3, c).sqrt().unwrap())
                .ln()
                .unwrap())
            / &g;
        assert!(ratio > prev && ratio < Real::one(c), "n={n}");
        assert!(
            (&ratio - &refined).abs() < Real::parse("1e-3", c).unwrap(),
            "n={n}"
        );
        prev = ratio;
    }
    assert_eq!(prev.to_sci_string(10), "9.167811188e-1");
}
