//! Acceptance suite: one PASS/FAIL line per criterion, exact arithmetic
//! throughout. Exits nonzero if any criterion fails.

mod common;

use std::collections::BTreeSet;
use std::panic::{self, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::Instant;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rotschur::cyclic::{
    check_jdt_trace, psi_generator, BoxedTableaux, PermutationRotation, RotatedTableaux,
};
use rotschur::perm::descent_class;
use rotschur::qsym::{
    f_to_m, f_to_polynomial, is_schur_positive, is_symmetric, pieri_s1, q_of, schur_expand,
    schur_in_f,
};
use rotschur::tableau::{a_lambda, enumerate_syt, phi};
use rotschur::{
    cdes_boxed, elementary_step, elementary_step_inv, ijdt, jdt, jdt_inverse, verify_extension,
    CyclicExtension, DescentSet, Partition, PermMultiset, Permutation, QSymF, SchurExpansion,
    Shape, Tableau,
};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn boxed(b: usize, rows: &[&[usize]]) -> Tableau {
    Tableau::boxed(b, rows.iter().map(|r| r.to_vec()).collect()).unwrap()
}

fn perm(s: &str) -> Permutation {
    s.parse().unwrap()
}

fn set(elements: &[usize]) -> Vec<usize> {
    elements.to_vec()
}

fn main_theorem() -> Outcome {
    let mut count = 0;
    for n in 2..=7 {
        for lambda in Partition::all(n - 1) {
            let a = a_lambda(&lambda).unwrap();
            let got = schur_expand(&q_of(&a.horizontal_closure()))
                .map_err(|e| format!("{lambda}: {e}"))?;
            let want = pieri_s1(&SchurExpansion::schur(lambda.clone()));
            ensure!(got == want, "λ={lambda}: got {got}, expected {want}");
            count += 1;
        }
    }
    Ok(format!("{count} shapes, 2 ≤ n ≤ 7"))
}

fn inverse_descent_classes() -> Outcome {
    let mut count = 0;
    for n in 3..=6 {
        for j in common::subsets(n - 1, n - 2) {
            let d = descent_class(n - 1, &j, true).unwrap();
            let q = q_of(&d.horizontal_closure());
            ensure!(
                is_schur_positive(&q),
                "n={n} J={j}: closure not Schur-positive"
            );
            let want = pieri_s1(&schur_expand(&q_of(&d)).map_err(|e| format!("n={n} J={j}: {e}"))?);
            let got = schur_expand(&q).unwrap();
            ensure!(got == want, "n={n} J={j}: got {got}, expected {want}");
            count += 1;
        }
    }
    Ok(format!("{count} descent classes, 3 ≤ n ≤ 6"))
}

fn remark_132() -> Outcome {
    let a = PermMultiset::from_perms(3, [perm("132")]).unwrap();
    let e = schur_expand(&q_of(&a.horizontal_closure())).map_err(|e| e.to_string())?;
    ensure!(e.to_string() == "2*s[2,2]", "got {e}");
    let mut want = SchurExpansion::zero(4);
    want.add_term("2,2".parse().unwrap(), 2.into());
    ensure!(e == want, "got {e}");
    ensure!(!is_symmetric(&q_of(&a)), "Q({{132}}) is symmetric");
    Ok("Q({132}C_4) = 2*s[2,2], Q({132}) not symmetric".into())
}

fn remark_left_closure() -> Outcome {
    let a = PermMultiset::from_perms(4, [perm("3142"), perm("1423")]).unwrap();
    ensure!(is_schur_positive(&q_of(&a)), "Q(A) not Schur-positive");
    ensure!(
        is_schur_positive(&q_of(&a.horizontal_closure())),
        "Q(AC_5) not Schur-positive"
    );
    ensure!(
        !is_symmetric(&q_of(&a.left_closure())),
        "Q(C_5 A) is symmetric"
    );
    Ok("Q(A), Q(AC_5) Schur-positive; Q(C_5 A) not symmetric".into())
}

fn long_cycle() -> Outcome {
    for n in 2..=8 {
        let got = schur_expand(&q_of(&PermMultiset::cyclic_group(n))).map_err(|e| e.to_string())?;
        let mut want = SchurExpansion::schur(Partition::new(vec![n]).unwrap());
        want.add_term(Partition::new(vec![n - 1, 1]).unwrap(), 1.into());
        ensure!(got == want, "n={n}: got {got}");
    }
    Ok("2 ≤ n ≤ 8".into())
}

/// Every `k + T` with `δ(T) = n`, `λ ⊢ n-1 ≤ 6`, grouped by `λ`.
fn sweep() -> Vec<(Partition, Vec<Tableau>, Vec<Tableau>)> {
    (1..=6)
        .flat_map(Partition::all)
        .map(|lambda| {
            let n = lambda.size() + 1;
            let all = enumerate_syt(&Shape::boxed(lambda.clone()).unwrap());
            let tops = all
                .iter()
                .filter(|t| t.delta().unwrap() == n)
                .cloned()
                .collect();
            (lambda, tops, all)
        })
        .collect()
}

fn jdt_bijection() -> Outcome {
    let mut count = 0;
    for (lambda, tops, all) in sweep() {
        let n = lambda.size() + 1;
        for k in 0..n {
            let mut image = BTreeSet::new();
            for t in &tops {
                let r = t.add_mod(k as i64);
                let p = jdt(&r).map_err(|e| format!("{r:?}: {e}"))?.0;
                ensure!(
                    jdt_inverse(&p).as_ref() == Ok(&r),
                    "jdt⁻¹(jdt({r:?})) ≠ {r:?}"
                );
                ensure!(
                    image.insert(p),
                    "λ={lambda} k={k}: jdt not injective at {r:?}"
                );
                count += 1;
            }
            let fiber: BTreeSet<Tableau> = all
                .iter()
                .filter(|p| p.delta().unwrap() % n == k)
                .cloned()
                .collect();
            ensure!(
                image == fiber,
                "λ={lambda} k={k}: image is not {{P : δ(P) = k}}"
            );
        }
    }
    Ok(format!("{count} rotated tableaux, λ ⊢ n-1 ≤ 6"))
}

fn des_preservation() -> Outcome {
    let mut count = 0;
    for (lambda, tops, _) in sweep() {
        let n = lambda.size() + 1;
        for t in &tops {
            for k in 0..n as i64 {
                let r = t.add_mod(k);
                let p = jdt(&r).unwrap().0;
                ensure!(
                    p.descent_set().unwrap() == r.row_descents(),
                    "Des changes under jdt at {r:?}"
                );
                count += 1;
            }
        }
    }
    Ok(format!("{count} rotated tableaux"))
}

fn trace_invariants() -> Outcome {
    let mut steps = 0;
    for (lambda, tops, _) in sweep() {
        let n = lambda.size() + 1;
        for t in &tops {
            for k in 0..n as i64 {
                let r = t.add_mod(k);
                let trace = jdt(&r).unwrap().1;
                check_jdt_trace(&trace).map_err(|e| format!("{r:?}: {e}"))?;
                steps += trace.steps.len();
            }
        }
    }
    Ok(format!("{steps} elementary steps"))
}

fn worked_examples() -> Outcome {
    let t = boxed(6, &[&[1, 3, 5], &[2, 4]]);
    ensure!(
        t.cdes_rot().to_vec() == set(&[1, 3, 6]),
        "cDes_rot(T) = {}",
        t.cdes_rot()
    );
    ensure!(
        t.add_mod(2).cdes_rot().to_vec() == set(&[2, 3, 5]),
        "cDes_rot(2+T)"
    );
    ensure!(
        t.add_mod(3).cdes_rot().to_vec() == set(&[3, 4, 6]),
        "cDes_rot(3+T)"
    );

    let ele = [
        boxed(3, &[&[4, 6, 2], &[5, 1]]),
        boxed(3, &[&[4, 1, 2], &[5, 6]]),
        boxed(3, &[&[1, 4, 2], &[5, 6]]),
        boxed(3, &[&[1, 2, 4], &[5, 6]]),
    ];
    ensure!(t.add_mod(3) == ele[0], "3+T");
    for w in ele.windows(2) {
        ensure!(
            elementary_step(&w[0]).as_ref() == Ok(&w[1]),
            "ele step from {:?}",
            w[0]
        );
    }
    ensure!(
        elementary_step(&ele[3]).is_err(),
        "ele applies to a standard tableau"
    );
    let p = ele[3].clone();
    ensure!(jdt(&ele[0]).unwrap().0 == p, "jdt(3+T)");

    let ele_inv = [
        boxed(6, &[&[4, 5, 1], &[2, 3]]),
        boxed(6, &[&[4, 1, 5], &[2, 3]]),
        boxed(6, &[&[1, 4, 5], &[2, 3]]),
        t.clone(),
    ];
    ensure!(p.add_mod(-3) == ele_inv[0], "-3+P");
    for w in ele_inv.windows(2) {
        ensure!(
            elementary_step_inv(&w[0]).as_ref() == Ok(&w[1]),
            "ele′ step from {:?}",
            w[0]
        );
    }
    ensure!(ijdt(&ele_inv[0]).as_ref() == Ok(&t), "ijdt(-3+P)");

    let tau = perm("256314");
    let shown = phi(&tau, &"3,2".parse().unwrap()).unwrap();
    ensure!(shown == ele[0], "φ(256314) = {shown:?}");
    ensure!(
        shown.to_ascii() == "      3\n4 6 2\n5 1\n",
        "φ(256314) display:\n{}",
        shown.to_ascii()
    );
    ensure!(
        t.add_mod(3).inverse_reading_word() == tau,
        "inverse reading word of 3+T"
    );

    ensure!(
        cdes_boxed(&p).unwrap().to_vec() == set(&[3, 4, 6]),
        "cDes(P)"
    );

    ensure!(
        jdt(&t.add_mod(2)).unwrap().0 == boxed(2, &[&[1, 3, 5], &[4, 6]]),
        "jdt(2+T)"
    );
    ensure!(
        jdt(&t.add_mod(4)).unwrap().0 == boxed(4, &[&[1, 3, 5], &[2, 6]]),
        "jdt(4+T)"
    );
    Ok("cDes_rot of T, 2+T, 3+T; ele and ele′ chains; φ display; cDes(P); jdt table".into())
}

fn cyclic_action() -> Outcome {
    let mut count = 0;
    for lambda in (1..=6).flat_map(Partition::all) {
        let n = lambda.size() + 1;
        for p in enumerate_syt(&Shape::boxed(lambda.clone()).unwrap()) {
            let c = cdes_boxed(&p).unwrap();
            ensure!(
                c.truncate(n - 1) == p.descent_set().unwrap(),
                "cDes ∩ [n-1] ≠ Des at {p:?}"
            );
            let one = psi_generator(&p).unwrap();
            ensure!(
                cdes_boxed(&one).unwrap() == c.rotate(1),
                "cDes(ψ(P,1)) ≠ 1+cDes(P) at {p:?}"
            );
            let mut q = one;
            for _ in 1..n {
                q = psi_generator(&q).unwrap();
            }
            ensure!(q == p, "ψ(·,n) moves {p:?}");
            count += 1;
        }
    }
    Ok(format!("{count} tableaux, λ ⊢ n-1 ≤ 6"))
}

fn check<W: CyclicExtension>(w: &W, label: &str) -> Result<usize, String> {
    let report = verify_extension(w).map_err(|e| format!("{label}: {e}"))?;
    ensure!(
        report.is_valid(),
        "{label}: {:?}",
        report.violations.first()
    );
    Ok(report.objects)
}

fn extension_axioms() -> Outcome {
    let mut objects = 0;
    for n in 2..=6 {
        objects += check(&PermutationRotation { n }, &format!("S_{n}"))?;
    }
    for lambda in (2..=7).flat_map(Partition::all) {
        objects += check(
            &RotatedTableaux {
                shape: Shape::straight(lambda.clone()),
            },
            &format!("rotated {lambda}"),
        )?;
    }
    for lambda in (1..=6).flat_map(Partition::all) {
        objects += check(
            &BoxedTableaux {
                lambda: lambda.clone(),
            },
            &format!("boxed {lambda}"),
        )?;
    }
    Ok(format!("{objects} objects over three witnesses"))
}

fn random_pair(rng: &mut ChaCha8Rng) -> (QSymF, QSymF, bool) {
    let n = rng.gen_range(1..=6);
    let a = common::random_qsym(rng, n);
    if rng.gen_bool(0.5) {
        // same function, assembled in a different order with a cancelling pair
        let mut terms: Vec<(DescentSet, i64)> = a
            .terms()
            .map(|(d, c)| (*d, i64::try_from(c.clone()).unwrap()))
            .collect();
        terms.shuffle(rng);
        let extra = DescentSet::from_mask(n, rng.gen_range(0..1u64 << (n - 1)));
        let mut b = QSymF::zero(n);
        b.add_term(extra, 5.into());
        for (d, c) in terms {
            b.add_term(d, c.into());
        }
        b.add_term(extra, (-5).into());
        (a, b, true)
    } else {
        let b = common::random_qsym(rng, n);
        let same = a == b;
        (a, b, same)
    }
}

fn oracle_coherence() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let mut equal_pairs = 0;
    for i in 0..1000 {
        let (a, b, same) = random_pair(&mut rng);
        let m = a.n();
        let by_m = f_to_m(&a) == f_to_m(&b);
        let by_poly = f_to_polynomial(&a, m).unwrap() == f_to_polynomial(&b, m).unwrap();
        ensure!(
            by_m == by_poly && by_m == same,
            "pair {i}: M says {by_m}, polynomial says {by_poly}: {a} vs {b}"
        );
        equal_pairs += usize::from(same);
    }

    let mut shapes = 0;
    for n in 1..=7 {
        for lambda in Partition::all(n) {
            let q = schur_in_f(&Shape::straight(lambda.clone()));
            let e = schur_expand(&q).map_err(|e| format!("{lambda}: {e}"))?;
            ensure!(
                e == SchurExpansion::schur(lambda.clone()),
                "s_{lambda} expands to {e}"
            );
            ensure!(e.to_qsym() == q, "s_{lambda} does not round-trip");
            shapes += 1;
        }
    }

    for n in 1..=8 {
        for lambda in Partition::all(n) {
            let found = enumerate_syt(&Shape::straight(lambda.clone())).len() as u128;
            let hooks = common::hook_length_count(&lambda);
            ensure!(
                found == hooks,
                "f^{lambda}: enumerated {found}, hook formula {hooks}"
            );
        }
    }
    Ok(format!(
        "1000 pairs ({equal_pairs} equal), {shapes} round-trips, hook counts to n = 8"
    ))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 12] = [
        ("main theorem: Q(A_λ C_n) = s_λ s_1", main_theorem),
        (
            "inverse descent classes stay Schur-positive",
            inverse_descent_classes,
        ),
        ("{132}C_4 gives 2 s_(2,2)", remark_132),
        ("left closure can break symmetry", remark_left_closure),
        ("Q(C_n) = s_(n) + s_(n-1,1)", long_cycle),
        ("jdt bijection and inverse", jdt_bijection),
        ("jdt preserves descents", des_preservation),
        ("straightening trace invariants", trace_invariants),
        ("worked examples", worked_examples),
        ("Z_n action rotates cDes", cyclic_action),
        ("cyclic extension axioms", extension_axioms),
        ("oracle coherence", oracle_coherence),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = panic::catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|e| {
            let msg = e
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Err(format!("panicked: {msg}"))
        });
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("criterion {:>2} PASS  {name}: {detail} ({secs:.2}s)", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name}: {why} ({secs:.2}s)", i + 1);
            }
        }
    }
    println!(
        "acceptance: {} passed, {failed} failed",
        criteria.len() - failed
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
