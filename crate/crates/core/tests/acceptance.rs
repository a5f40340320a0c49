//! Acceptance suite: one line per criterion, nonzero exit if any fails.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use redei::combinatorics::{character, partitions_of, Partition, Permutation};
use redei::digraph::{
    all_digraphs, all_tournaments, enumerate_cycle_covers, random_acyclic_digraph, random_digraph,
    random_tournament, random_two_cycle_free_digraph, Digraph,
};
use redei::hamilton::{ham_bruteforce, ham_cycles, ham_detper, ham_dp, parity_suite, CycleRoute};
use redei::matrix::{
    det_bareiss, geometric_series, matrix_series, permanent_ryser, MultilinearPoly, Ring, RingMatrix, SeriesKind,
};
use redei::redei::{
    applicable_routes, chow_xi, compute_u, hook_coefficient, schur_coeff_jt, u_tournament, u_via_immanant_lr,
    u_via_path_covers, u_via_powersum_gs, ChowRoute,
};
use redei::verify::{verify_corpus, Corpus};
use redei::walks::verify_walk_identity;
use redei::{Basis, Rational, SymFun, TwoAlphabetSymFun};

fn sf(basis: Basis, terms: &[(&[u32], i64)]) -> SymFun {
    SymFun::from_int_terms(basis, terms.iter().map(|(l, c)| (l.to_vec(), *c)))
}

fn int(v: impl Into<BigInt>) -> Rational {
    Rational::from_integer(v.into())
}

fn fig1() -> Digraph {
    Digraph::from_one_based(3, &[(1, 1), (1, 3), (3, 2)]).unwrap()
}

fn within(limit: Duration, start: Instant) {
    assert!(start.elapsed() <= limit, "took {:?}, budget {limit:?}", start.elapsed());
}

fn criterion_1() -> String {
    let start = Instant::now();
    let d = fig1();
    let mt = sf(Basis::MTilde, &[(&[1, 1, 1], 1), (&[2, 1], 4), (&[3], 3)]);
    let p = sf(Basis::P, &[(&[1, 1, 1], 1), (&[2, 1], 1), (&[3], 1)]);
    let s = sf(Basis::S, &[(&[1, 1, 1], 1), (&[2, 1], 1), (&[3], 3)]);
    let routes = applicable_routes(&d);
    for &route in &routes {
        let u = compute_u(&d, route).unwrap().value;
        assert_eq!(u.convert(Basis::MTilde).unwrap(), mt, "{route}");
        assert_eq!(u.convert(Basis::P).unwrap(), p, "{route}");
        assert_eq!(u.convert(Basis::S).unwrap(), s, "{route}");
    }
    let c = d.complement();
    let mt_bar = sf(Basis::MTilde, &[(&[1, 1, 1], 1), (&[2, 1], 2), (&[3], 1)]);
    let p_bar = sf(Basis::P, &[(&[1, 1, 1], 1), (&[2, 1], -1), (&[3], 1)]);
    let routes_bar = applicable_routes(&c);
    for &route in &routes_bar {
        let u = compute_u(&c, route).unwrap().value;
        assert_eq!(u.convert(Basis::MTilde).unwrap(), mt_bar, "{route}");
        assert_eq!(u.convert(Basis::P).unwrap(), p_bar, "{route}");
    }
    within(Duration::from_secs(1), start);
    format!("{} + {} routes reproduce all goldens", routes.len(), routes_bar.len())
}

fn criterion_2() -> String {
    let start = Instant::now();
    let d = Digraph::from_one_based(4, &[(4, 3), (3, 2), (3, 1)]).unwrap();
    let want = sf(Basis::S, &[(&[4], 10), (&[3, 1], 4), (&[2, 2], -2), (&[2, 1, 1], 2)]);
    for lambda in partitions_of(4).unwrap() {
        assert_eq!(int(schur_coeff_jt(&d, &lambda).unwrap()), want.coeff(&lambda), "{lambda}");
    }
    assert_eq!(u_via_immanant_lr(&d).unwrap(), want);
    within(Duration::from_secs(1), start);
    "Jacobi-Trudi and immanant expansions match".into()
}

fn criterion_3() -> String {
    let start = Instant::now();
    let mtilde_p = |terms: &[(&[u32], &[u32], i64)]| {
        let mut out = TwoAlphabetSymFun::zero();
        for (z, y, c) in terms {
            let m = SymFun::basis_element(Basis::MTilde, Partition::new(z.to_vec()));
            let t = TwoAlphabetSymFun::from_z(&m)
                .unwrap()
                .mul(&TwoAlphabetSymFun::pure(Partition::empty(), Partition::new(y.to_vec())));
            out.add_assign(&t.scale(&int(*c)));
        }
        out
    };
    let d = fig1();
    let xi = mtilde_p(&[(&[1, 1, 1], &[], 1), (&[2, 1], &[], 2), (&[3], &[], 1), (&[1, 1], &[1], 1), (&[2], &[1], 1)]);
    let xi_bar = mtilde_p(&[
        (&[1, 1, 1], &[], 1),
        (&[2, 1], &[], 4),
        (&[3], &[], 3),
        (&[1], &[1, 1], 1),
        (&[2], &[1], 3),
        (&[1, 1], &[1], 2),
        (&[], &[2, 1], 1),
        (&[1], &[2], 1),
        (&[], &[3], 1),
    ]);
    for route in [ChowRoute::Direct, ChowRoute::Powersum] {
        assert_eq!(chow_xi(&d, route).unwrap(), xi);
        assert_eq!(chow_xi(&d.complement(), route).unwrap(), xi_bar);
    }
    assert_eq!(xi_bar.set_y_zero(), u_via_powersum_gs(&d).unwrap());
    assert_eq!(xi_bar.set_y_zero(), u_via_path_covers(&d).unwrap().convert(Basis::P).unwrap());
    within(Duration::from_secs(1), start);
    "both expansions and the y = 0 specialization match".into()
}

const CORPUS_IDENTITIES: [&str; 5] =
    ["u-routes-agree", "u-omega-complement", "u-opposite", "chow-direct-powersum", "chow-identities"];

fn criterion_4() -> String {
    let start = Instant::now();
    let mut total = 0;
    for corpus in [Corpus::Exhaustive(3), Corpus::Random { n: 4, count: 200 }, Corpus::Random { n: 5, count: 200 }] {
        let summary = verify_corpus(corpus, 2024, 0).unwrap();
        for name in CORPUS_IDENTITIES {
            let t = summary.tallies[name];
            assert_eq!((t.passed, t.checked), (summary.digraphs, summary.digraphs), "{corpus}: {name}");
        }
        assert!(summary.passed(), "{corpus}: {:?}", summary.failures.first());
        total += summary.digraphs;
    }
    within(Duration::from_secs(300), start);
    format!("{total} digraphs, {} identities each", CORPUS_IDENTITIES.len())
}

fn criterion_5() -> String {
    let start = Instant::now();
    let mut checked = 0;
    for n in 0..=3 {
        for d in all_digraphs(n).unwrap() {
            let b = ham_bruteforce(&d).unwrap();
            assert_eq!(ham_detper(&d).unwrap(), b, "{d}");
            assert_eq!(ham_dp(&d).unwrap(), b, "{d}");
            checked += 1;
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for k in 0..300 {
        let d = random_digraph(1 + k % 8, rng.gen_range(0.2..0.9), rng.gen()).unwrap();
        let b = ham_bruteforce(&d).unwrap();
        assert_eq!(ham_detper(&d).unwrap(), b, "{d}");
        assert_eq!(ham_dp(&d).unwrap(), b, "{d}");
        checked += 1;
    }
    for k in 0..100 {
        let d = random_digraph(1 + k % 7, rng.gen_range(0.3..0.9), rng.gen()).unwrap();
        let b = ham_cycles(&d, CycleRoute::BruteForce).unwrap();
        assert_eq!(ham_cycles(&d, CycleRoute::FormulaB).unwrap(), b, "{d}");
        for i in 0..d.n() {
            assert_eq!(ham_cycles(&d, CycleRoute::FormulaA(i)).unwrap(), b, "{d}, i = {i}");
        }
    }
    assert_eq!(ham_detper(&Digraph::new(0).unwrap()).unwrap(), 1.into());
    let mut one = Digraph::new(1).unwrap();
    assert_eq!(ham_cycles(&one, CycleRoute::FormulaA(0)).unwrap(), 0.into());
    one.add_edge(0, 0).unwrap();
    assert_eq!(ham_cycles(&one, CycleRoute::FormulaB).unwrap(), 1.into());
    within(Duration::from_secs(120), start);
    format!("{checked} path counts, 100 cycle counts agree")
}

fn criterion_6() -> String {
    let start = Instant::now();
    let mut berge = 0;
    let mut corpus: Vec<Digraph> = Corpus::Exhaustive(3).digraphs(0).unwrap();
    for n in [4, 5] {
        corpus.extend(Corpus::Random { n, count: 200 }.digraphs(2024).unwrap());
    }
    for d in &corpus {
        assert!(parity_suite(d).unwrap().berge, "{d}");
        berge += 1;
    }
    let mut tournaments = 0;
    for n in 1..=4 {
        for t in all_tournaments(n).unwrap() {
            assert_eq!(parity_suite(&t).unwrap().redei, Some(true), "{t}");
            tournaments += 1;
        }
    }
    for n in 5..=10 {
        for seed in 0..50 {
            let t = random_tournament(n, seed).unwrap();
            assert_eq!(parity_suite(&t).unwrap().redei, Some(true), "{t}");
            tournaments += 1;
        }
    }
    within(Duration::from_secs(120), start);
    format!("Berge on {berge} digraphs, Rédei on {tournaments} tournaments")
}

fn criterion_7() -> String {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for k in 0..100 {
        let n = 1 + k % 6;
        let acyclic = random_acyclic_digraph(n, rng.gen_range(0.2..0.9), false, rng.gen()).unwrap();
        let u = u_via_powersum_gs(&acyclic).unwrap();
        assert!(u.is_nonnegative(), "{acyclic}: {u}");
        let free = random_two_cycle_free_digraph(n, rng.gen_range(0.2..0.9), rng.gen()).unwrap();
        let u = u_via_powersum_gs(&free).unwrap();
        assert!(u.is_nonnegative(), "{free}: {u}");
    }
    let mut tournaments = 0;
    for n in 1..=4 {
        for t in all_tournaments(n).unwrap() {
            let ut = u_tournament(&t).unwrap();
            assert_eq!(ut, u_via_powersum_gs(&t).unwrap(), "{t}");
            for (lambda, c) in ut.terms() {
                // products of p_1 and 2·p_odd: odd parts, coefficient divisible by 2^{#parts > 1}
                let nontrivial = lambda.parts().iter().filter(|&&k| k > 1).count();
                assert!(lambda.all_odd(), "{t}: {lambda}");
                assert!((c / int(1u64 << nontrivial)).is_integer(), "{t}: {lambda} has {c}");
            }
            let spec = ut.eval_at_single_one().unwrap();
            assert_eq!(spec, int(ham_bruteforce(&t.complement()).unwrap()), "{t}");
            tournaments += 1;
        }
    }
    within(Duration::from_secs(180), start);
    format!("200 positive expansions, {tournaments} tournament forms")
}

fn criterion_8() -> String {
    let start = Instant::now();
    let mut corpus: Vec<Digraph> = Vec::new();
    for n in 1..=4 {
        corpus.extend(all_digraphs(n).unwrap());
    }
    // 2^25 digraphs on five vertices: sample instead
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    for _ in 0..1000 {
        corpus.push(random_digraph(5, rng.gen_range(0.1..0.9), rng.gen()).unwrap());
    }
    for d in &corpus {
        let n = d.n();
        for i in 1..=n {
            let h = hook_coefficient(d, i).unwrap();
            assert_eq!(h.schur, BigInt::from(h.descent_count), "{d}, i = {i}");
        }
        assert_eq!(hook_coefficient(d, 1).unwrap().schur, ham_dp(d).unwrap(), "{d}");
        assert_eq!(hook_coefficient(d, n).unwrap().schur, ham_dp(&d.complement()).unwrap(), "{d}");
    }
    within(Duration::from_secs(60), start);
    format!("{} digraphs, every hook", corpus.len())
}

fn random_matrix(n: usize, rng: &mut ChaCha8Rng) -> RingMatrix<i64> {
    RingMatrix::from_fn(n, |_, _| rng.gen_range(-2..=2))
}

fn criterion_9() -> String {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let big = |v: i64| BigInt::from(v);
    for n in 1..=5 {
        let a = random_matrix(n, &mut rng);
        // det(I + XA) and det (I - XA)^{-1} in the multilinear quotient
        let i_plus = RingMatrix::from_fn(n, |i, j| {
            let e = MultilinearPoly::monomial(1 << i, big(*a.get(i, j)));
            if i == j {
                e.add(&MultilinearPoly::constant(big(1)))
            } else {
                e
            }
        });
        let det_plus = i_plus.determinant();
        let det_inv = geometric_series(&a).determinant();
        let dh = matrix_series(&a, SeriesKind::H).unwrap().determinant();
        let de = matrix_series(&a, SeriesKind::E).unwrap().determinant();
        for s in 0..1u64 << n {
            let sub = a.principal(s);
            assert_eq!(det_plus.coeff_extract(s), det_bareiss(&sub), "MacMahon det, S = {s:b}");
            assert_eq!(det_inv.coeff_extract(s), permanent_ryser(&sub).unwrap(), "MacMahon per, S = {s:b}");
            let mut want_h = SymFun::zero(Basis::P);
            let mut want_e = SymFun::zero(Basis::P);
            for sigma in Permutation::all_on(n, s) {
                let w: i64 = (0..n).filter(|&i| s >> i & 1 == 1).map(|i| *a.get(i, sigma.apply(i))).product();
                want_h.add_term(sigma.cycle_type(), int(w));
                want_e.add_term(sigma.cycle_type(), int(w * sigma.sign()));
            }
            assert_eq!(dh.coeff_extract(s), want_h, "extraction (a)");
            assert_eq!(de.coeff_extract(s), want_e, "extraction (b)");
        }
    }
    // cycle covers of induced subgraphs
    for seed in 0..10 {
        let d = random_digraph(4, 0.5, seed).unwrap();
        let dh = matrix_series(&RingMatrix::adjacency(&d), SeriesKind::H).unwrap().determinant();
        for s in 0..16u64 {
            let mut want = SymFun::zero(Basis::P);
            for cover in enumerate_cycle_covers(&d.induced(s).unwrap().digraph).unwrap() {
                want.add_term(cover.cycle_partition(), int(1));
            }
            assert_eq!(dh.coeff_extract(s), want, "{d}, S = {s:b}");
        }
    }
    // rank one: det(I + u vᵀ) = 1 + vᵀu
    for n in 1..=6 {
        let u: Vec<i64> = (0..n).map(|_| rng.gen_range(-5..=5)).collect();
        let v: Vec<i64> = (0..n).map(|_| rng.gen_range(-5..=5)).collect();
        let m = RingMatrix::from_fn(n, |i, j| (i == j) as i64 + u[i] * v[j]);
        let dot: i64 = u.iter().zip(&v).map(|(a, b)| a * b).sum();
        assert_eq!(det_bareiss(&m), big(1 + dot));
    }
    // orthogonality of characters
    for n in 1..=6 {
        let parts = partitions_of(n).unwrap();
        for lambda in &parts {
            for nu in &parts {
                let mut sum = int(0);
                for mu in &parts {
                    let c = character(lambda, mu).unwrap() * character(nu, mu).unwrap();
                    sum += Rational::new(c.into(), mu.z_lambda());
                }
                assert_eq!(sum, int((lambda == nu) as i64), "{lambda} {nu}");
            }
        }
    }
    // the walk generating function
    for seed in 0..10 {
        let d = random_digraph(1 + seed as usize % 5, 0.5, seed).unwrap();
        let r = verify_walk_identity(&d, 2 * d.n() + 1, 10, seed).unwrap();
        assert!(r.passed, "{d}: {:?}", r.failure);
    }
    within(Duration::from_secs(60), start);
    "MacMahon, extraction (a)/(b), cycle covers, rank one, orthogonality, walks".into()
}

fn criterion_10() -> String {
    let d = random_digraph(16, 0.5, 10).unwrap();
    let start = Instant::now();
    let ham = ham_detper(&d).unwrap();
    let detper = start.elapsed();
    assert_eq!(ham, ham_dp(&d).unwrap());
    let m = RingMatrix::adjacency(&random_digraph(18, 0.5, 10).unwrap());
    let start = Instant::now();
    permanent_ryser(&m).unwrap();
    let ryser = start.elapsed();
    let note = if detper <= Duration::from_secs(300) && ryser <= Duration::from_secs(120) {
        "within budget"
    } else {
        "over budget (informational)"
    };
    format!("det-per n=16 in {detper:.2?}, Ryser n=18 in {ryser:.2?}: {note}")
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> String); 10] = [
        ("figure-one goldens", criterion_1),
        ("directed-tree Schur expansion", criterion_2),
        ("Chow goldens", criterion_3),
        ("route-equivalence corpus", criterion_4),
        ("Hamiltonian counting", criterion_5),
        ("parity theorems", criterion_6),
        ("positivity properties", criterion_7),
        ("hook coefficients", criterion_8),
        ("kernel identities", criterion_9),
        ("performance smoke", criterion_10),
    ];
    // failures are reported through the summary lines below
    std::panic::set_hook(Box::new(|_| {}));
    let mut failed = 0;
    for (k, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        match catch_unwind(AssertUnwindSafe(run)) {
            Ok(detail) => println!("criterion {:>2} PASS  {name}: {detail} ({:.2?})", k + 1, start.elapsed()),
            Err(e) => {
                let msg = e
                    .downcast_ref::<String>()
                    .cloned()
                    .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                    .unwrap_or_default();
                println!("criterion {:>2} FAIL  {name}: {msg}", k + 1);
                failed += 1;
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} criteria failed");
        ExitCode::FAILURE
    }
}
