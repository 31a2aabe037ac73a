//! End-to-end acceptance suite. Each test exercises one acceptance
//! criterion and prints a single PASS/FAIL line; run with
//! `cargo test --test acceptance -- --nocapture` to see the lines.

use std::collections::BTreeSet;
use std::panic::{catch_unwind, resume_unwind, UnwindSafe};
use std::process::Command;
use std::time::{Duration, Instant};

use evoclass::classify::{classify, iso, iso_dim1};
use evoclass::evalg::{BasisChange, EvolutionAlgebra, Perm};
use evoclass::graph::{digraph_isomorphic, graph_of};
use evoclass::moduli::{curve_member, family_curve, lim2mod3_equal, orbit};
use evoclass::ring::{DomainHandle, RingElem};
use evoclass::{Family, Verdict};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn criterion<F: FnOnce() + UnwindSafe>(number: usize, name: &str, body: F) {
    match catch_unwind(body) {
        Ok(()) => println!("ACCEPTANCE {number} {name}: PASS"),
        Err(cause) => {
            println!("ACCEPTANCE {number} {name}: FAIL");
            resume_unwind(cause);
        }
    }
}

fn within(limit: Duration, start: Instant, what: &str) {
    let elapsed = start.elapsed();
    assert!(elapsed < limit, "{what} took {elapsed:?}, limit {limit:?}");
}

fn int_matrices(bound: i64) -> Vec<[[i64; 2]; 2]> {
    let mut out = Vec::new();
    for a in -bound..=bound {
        for b in -bound..=bound {
            for c in -bound..=bound {
                for d in -bound..=bound {
                    out.push([[a, b], [c, d]]);
                }
            }
        }
    }
    out
}

fn all_changes(domain: &DomainHandle) -> Vec<BasisChange> {
    let one = domain.one();
    let minus = one.neg();
    let mut out = Vec::new();
    for perm in [Perm::Id, Perm::Swap] {
        for k1 in [&one, &minus] {
            for k2 in [&one, &minus] {
                out.push(BasisChange {
                    perm,
                    units: [k1.clone(), k2.clone()],
                });
            }
        }
    }
    out
}

fn brute_force_witness(a: &EvolutionAlgebra, b: &EvolutionAlgebra) -> Option<BasisChange> {
    all_changes(a.domain())
        .into_iter()
        .find(|change| a.apply_basis_change(change).unwrap().matrix() == b.matrix())
}

#[test]
fn acceptance_1_perfection_criterion() {
    criterion(1, "perfection criterion over Z at bound 3", || {
        let start = Instant::now();
        let z = DomainHandle::integers();
        for m in int_matrices(3) {
            let alg = EvolutionAlgebra::from_int_matrix(&z, m);
            let det = m[0][0] * m[1][1] - m[0][1] * m[1][0];
            assert_eq!(alg.det(), z.from_i64(det), "{m:?}");
            assert_eq!(alg.is_perfect(), det == 1 || det == -1, "{m:?}");
            assert_eq!(alg.is_quasiperfect(), det != 0, "{m:?}");
        }
        within(Duration::from_secs(5), start, "bound-3 perfection scan");
    });
}

#[test]
fn acceptance_2_basis_change_invariance() {
    criterion(2, "basis-change invariance over Z at bound 3", || {
        let start = Instant::now();
        let z = DomainHandle::integers();
        let changes = all_changes(&z);
        for m in int_matrices(3) {
            let alg = EvolutionAlgebra::from_int_matrix(&z, m);
            if !alg.is_quasiperfect() {
                continue;
            }
            let counts = alg.invariant_counts().unwrap();
            let graph = graph_of(&alg).unwrap();
            let class = alg.is_perfect().then(|| classify(&alg).unwrap());
            for change in &changes {
                let moved = alg.apply_basis_change(change).unwrap();
                assert_eq!(moved.invariant_counts().unwrap(), counts, "{m:?}");
                assert!(
                    digraph_isomorphic(&graph, &graph_of(&moved).unwrap()),
                    "{m:?}"
                );
                assert_eq!(moved.is_perfect(), alg.is_perfect(), "{m:?}");
                if let Some(class) = &class {
                    assert_eq!(&classify(&moved).unwrap(), class, "{m:?} {change:?}");
                }
            }
        }
        within(Duration::from_secs(30), start, "bound-3 invariance scan");
    });
}

fn check_iso_against_brute_force(a: &EvolutionAlgebra, b: &EvolutionAlgebra) {
    let answer = iso(a, b).unwrap();
    let brute = brute_force_witness(a, b);
    match answer.verdict {
        Verdict::Yes => {
            assert!(brute.is_some(), "{:?} vs {:?}", a.matrix(), b.matrix());
            let witness = answer.witness.expect("yes carries a witness");
            assert_eq!(
                a.apply_basis_change(&witness).unwrap().matrix(),
                b.matrix(),
                "witness must replay"
            );
        }
        Verdict::No => {
            assert!(brute.is_none(), "{:?} vs {:?}", a.matrix(), b.matrix());
        }
        Verdict::Unknown => panic!("unknown verdict over the integers"),
    }
}

fn perfect_pool(bound: i64) -> Vec<EvolutionAlgebra> {
    let z = DomainHandle::integers();
    int_matrices(bound)
        .into_iter()
        .map(|m| EvolutionAlgebra::from_int_matrix(&z, m))
        .filter(EvolutionAlgebra::is_perfect)
        .collect()
}

#[test]
fn acceptance_3_iso_matches_brute_force() {
    criterion(3, "isomorphism agrees with brute force", || {
        let start = Instant::now();
        let pool2 = perfect_pool(2);
        for a in &pool2 {
            for b in &pool2 {
                check_iso_against_brute_force(a, b);
            }
        }
        let pool3 = perfect_pool(3);
        let mut rng = ChaCha8Rng::seed_from_u64(0x0EC0C1A5);
        for _ in 0..10_000 {
            let a = &pool3[rng.gen_range(0..pool3.len())];
            let b = &pool3[rng.gen_range(0..pool3.len())];
            check_iso_against_brute_force(a, b);
        }
        within(Duration::from_secs(60), start, "oracle equivalence");
    });
}

#[test]
fn acceptance_4_worked_examples() {
    criterion(4, "worked examples reproduce exactly", || {
        let z = DomainHandle::integers();

        // Perfect B(1,1,lambda,mu) with lambda a unit and mu a nonzero
        // nonunit: exactly the two stated matrices, mutually non-isomorphic.
        let mut pool = Vec::new();
        for lambda in [-1i64, 1] {
            for mu in -10i64..=10 {
                if mu == 0 || mu == 1 || mu == -1 || (lambda - mu).abs() != 1 {
                    continue;
                }
                pool.push((lambda, mu));
            }
        }
        assert_eq!(pool, vec![(-1, -2), (1, 2)]);
        let first = EvolutionAlgebra::from_int_matrix(&z, [[1, 1], [1, 2]]);
        let second = EvolutionAlgebra::from_int_matrix(&z, [[1, 1], [-1, -2]]);
        assert_eq!(iso(&first, &second).unwrap().verdict, Verdict::No);
        assert_eq!(iso(&first, &first).unwrap().verdict, Verdict::Yes);
        assert_eq!(iso(&second, &second).unwrap().verdict, Verdict::Yes);

        // The four-element orbit of B(2,3,3,5).
        let class = classify(&EvolutionAlgebra::from_int_matrix(&z, [[2, 3], [3, 5]])).unwrap();
        let got: BTreeSet<Vec<RingElem>> =
            orbit(&class).unwrap().iter().map(|c| c.values()).collect();
        let want: BTreeSet<Vec<RingElem>> = [
            [2, 3, 3, 5],
            [-2, 3, -3, 5],
            [2, -3, 3, -5],
            [-2, -3, -3, -5],
        ]
        .iter()
        .map(|t| t.iter().map(|&v| z.from_i64(v)).collect())
        .collect();
        assert_eq!(got, want);

        // The two-element class of B(1,3,2,5).
        let class = classify(&EvolutionAlgebra::from_int_matrix(&z, [[1, 3], [2, 5]])).unwrap();
        let got: BTreeSet<Vec<RingElem>> =
            orbit(&class).unwrap().iter().map(|c| c.values()).collect();
        let want: BTreeSet<Vec<RingElem>> = [[3, 2, 5], [-3, 2, -5]]
            .iter()
            .map(|t| t.iter().map(|&v| z.from_i64(v)).collect())
            .collect();
        assert_eq!(got, want);

        // Laurent-polynomial isomorphism with the stated witness.
        let l = DomainHandle::laurent_int("x").unwrap();
        let parse = |s: &str| l.parse_elem(s).unwrap();
        let big = EvolutionAlgebra::new(
            l.clone(),
            [
                [parse("7*x^3+4*x^2"), parse("4*x")],
                [parse("5*x^5+3*x^4"), parse("3*x^3")],
            ],
        )
        .unwrap();
        let small = EvolutionAlgebra::new(
            l.clone(),
            [[parse("7*x+4"), parse("4")], [parse("5*x+3"), parse("3")]],
        )
        .unwrap();
        let answer = iso(&big, &small).unwrap();
        assert_eq!(answer.verdict, Verdict::Yes);
        let witness = answer.witness.unwrap();
        assert_eq!(witness.perm, Perm::Id);
        assert_eq!(witness.units[0], parse("x^-2"));
        assert_eq!(witness.units[1], parse("x^-3"));
        assert_eq!(
            big.apply_basis_change(&witness).unwrap().matrix(),
            small.matrix()
        );

        // One-dimensional classification over Z: |d| = |e| exactly.
        for d in -10i64..=10 {
            for e in -10i64..=10 {
                let answer = iso_dim1(&z.from_i64(d), &z.from_i64(e)).unwrap();
                let expected = if d.abs() == e.abs() { Verdict::Yes } else { Verdict::No };
                assert_eq!(answer.verdict, expected, "d={d} e={e}");
                if d != 0 && answer.verdict == Verdict::Yes {
                    let k = answer.witness.unwrap();
                    assert_eq!(k.mul(&z.from_i64(d)).unwrap(), z.from_i64(e));
                }
            }
        }
    });
}

#[test]
fn acceptance_5_field_specialization() {
    criterion(5, "families over F5 are the field families", || {
        let start = Instant::now();
        let f5 = DomainHandle::prime_field(5).unwrap();
        let allowed = [
            Family::A1,
            Family::A2,
            Family::A3,
            Family::A4a,
            Family::B5I_i,
        ];
        let mut seen = BTreeSet::new();
        for a in 0..5i64 {
            for b in 0..5i64 {
                for c in 0..5i64 {
                    for d in 0..5i64 {
                        let alg = EvolutionAlgebra::from_int_matrix(&f5, [[a, b], [c, d]]);
                        if !alg.is_perfect() {
                            continue;
                        }
                        let class = classify(&alg).unwrap();
                        assert!(
                            allowed.contains(&class.family),
                            "[[{a},{b}],[{c},{d}]] classified as {}",
                            class.family.name()
                        );
                        seen.insert(class.family);
                    }
                }
            }
        }
        assert_eq!(seen.len(), allowed.len(), "every field family occurs");
        within(Duration::from_secs(10), start, "F5 exhaustive scan");
    });
}

#[test]
fn acceptance_6_orbits_stay_on_curves() {
    criterion(6, "orbits satisfy their curve predicates", || {
        let z = DomainHandle::integers();
        let mut pool = perfect_pool(2);
        let pool3 = perfect_pool(3);
        let mut rng = ChaCha8Rng::seed_from_u64(0x0EC0C1A5);
        for _ in 0..10_000 {
            pool.push(pool3[rng.gen_range(0..pool3.len())].clone());
            pool.push(pool3[rng.gen_range(0..pool3.len())].clone());
        }
        // The surface family needs entries beyond bound 3; pin it too.
        pool.push(EvolutionAlgebra::from_int_matrix(&z, [[2, 3], [3, 5]]));
        let mut curves_seen = BTreeSet::new();
        for alg in &pool {
            let class = classify(alg).unwrap();
            let Some(curve) = family_curve(class.family) else {
                continue;
            };
            curves_seen.insert(curve);
            let base = class.values();
            for member in orbit(&class).unwrap() {
                assert!(
                    curve_member(curve, &base, &member.values()).unwrap(),
                    "{:?} left curve {}",
                    alg.matrix(),
                    curve.name()
                );
            }
        }
        assert!(curves_seen.len() >= 3, "pool exercises several curves");
    });
}

#[test]
fn acceptance_7_direct_limit_equality() {
    criterion(7, "direct-limit equality on rational units", || {
        let start = Instant::now();
        let q = DomainHandle::rationals();
        let two = q.from_i64(2);
        let three = q.from_i64(3);
        let signed_power = |base: &RingElem, e: i64| -> RingElem {
            let p = base.pow_u(e.unsigned_abs() as u32);
            if e < 0 { p.inv_unit().unwrap() } else { p }
        };
        let mut pool = Vec::new();
        for a in -3i64..=3 {
            for b in -3i64..=3 {
                for sign in [1i64, -1] {
                    let v = q
                        .from_i64(sign)
                        .mul(&signed_power(&two, a))
                        .unwrap()
                        .mul(&signed_power(&three, b))
                        .unwrap();
                    pool.push(v);
                }
            }
        }
        let mut roots = Vec::new();
        for i in -3i64..=3 {
            for j in -3i64..=3 {
                for sign in [1i64, -1] {
                    roots.push(
                        q.from_i64(sign)
                            .mul(&signed_power(&two, i))
                            .unwrap()
                            .mul(&signed_power(&three, j))
                            .unwrap(),
                    );
                }
            }
        }
        let brute = |lam: &RingElem, mu: &RingElem| -> bool {
            roots.iter().any(|r| {
                let cube = r.pow_u(3);
                *mu == lam.mul(&cube).unwrap() || *mu == lam.pow_u(2).mul(&cube).unwrap()
            })
        };
        let related = |a: &RingElem, b: &RingElem| -> bool {
            match lim2mod3_equal(a, b).unwrap() {
                Verdict::Yes => true,
                Verdict::No => false,
                Verdict::Unknown => panic!("unknown over the rationals"),
            }
        };
        for a in &pool {
            assert!(related(a, a), "reflexive at {a}");
            for b in &pool {
                let ab = related(a, b);
                assert_eq!(ab, brute(a, b), "brute force disagrees at ({a}, {b})");
                assert_eq!(ab, related(b, a), "symmetry at ({a}, {b})");
            }
        }
        // Transitivity over the equivalence classes of the pool.
        for a in &pool {
            for b in &pool {
                if !related(a, b) {
                    continue;
                }
                for c in &pool {
                    if related(b, c) {
                        assert!(related(a, c), "transitivity at ({a}, {b}, {c})");
                    }
                }
            }
        }
        within(Duration::from_secs(5), start, "direct-limit pool scan");
    });
}

#[test]
fn acceptance_8_deterministic_output() {
    criterion(8, "census and DOT output are deterministic", || {
        let exe = env!("CARGO_BIN_EXE_evoclass");
        let run = |args: &[&str]| {
            let out = Command::new(exe).args(args).output().expect("binary runs");
            assert!(out.status.success(), "{args:?}: {:?}", out.status);
            out.stdout
        };
        let census = ["enumerate", "--domain", "Z", "--bound", "2"];
        assert_eq!(run(&census), run(&census), "census must be reproducible");

        let root = std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden");
        for (input, golden) in [
            ("z_b5iii.json", "z_b5iii.graph.dot"),
            ("z_a3_mixed.json", "z_a3_mixed.graph.dot"),
        ] {
            let input = root.join(input);
            let got = run(&["graph", input.to_str().unwrap()]);
            let want = std::fs::read(root.join(golden)).expect("golden DOT file");
            assert_eq!(got, want, "{golden} drifted");
        }
    });
}
