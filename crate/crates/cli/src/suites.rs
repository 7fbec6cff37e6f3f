//! Named verification sweeps. Work items run in parallel; results keep the
//! enumeration order, so reports are identical across runs.

use std::fmt::Display;

use clap::ValueEnum;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
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
    cdes_boxed, jdt, jdt_inverse, psi_direct, psi_orbits, rsk, verify_extension, CyclicExtension,
    DescentSet, Partition, PermMultiset, Permutation, QSymF, SchurExpansion, Shape,
};
use serde::Serialize;

use crate::format::tableau_compact;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    MainTheorem,
    ErTheorem,
    JdtBijection,
    DesPreservation,
    ExtensionAxioms,
    Remarks,
    Oracles,
    All,
}

impl Suite {
    pub const EACH: [Suite; 7] = [
        Suite::MainTheorem,
        Suite::ErTheorem,
        Suite::JdtBijection,
        Suite::DesPreservation,
        Suite::ExtensionAxioms,
        Suite::Remarks,
        Suite::Oracles,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::MainTheorem => "main-theorem",
            Suite::ErTheorem => "er-theorem",
            Suite::JdtBijection => "jdt-bijection",
            Suite::DesPreservation => "des-preservation",
            Suite::ExtensionAxioms => "extension-axioms",
            Suite::Remarks => "remarks",
            Suite::Oracles => "oracles",
            Suite::All => "all",
        }
    }

    /// The statement the suite checks, for the report header.
    pub fn statement(self) -> &'static str {
        match self {
            Suite::MainTheorem => {
                "for every Schur-positive multiset A of S_{n-1}, Q(A C_n) = Q(A) s_1, so A C_n is Schur-positive"
            }
            Suite::ErTheorem => "for every J in [n-2], the rotated inverse descent class D_{n-1,J}^{-1} C_n is Schur-positive",
            Suite::JdtBijection => {
                "jdt maps {k+T : δ(T) = n} bijectively onto {P : δ(P) = k}, inverted by δ + ijdt(-δ + P), \
                 and each elementary step switches a moving and a non-moving entry"
            }
            Suite::DesPreservation => "jdt and φ preserve descent sets",
            Suite::ExtensionAxioms => {
                "rotation of permutations, k + T on rotated tableaux and the jdt action on SYT(λ^□) \
                 are cyclic extensions of Des"
            }
            Suite::Remarks => {
                "{132}C_4 has Q = 2 s_(2,2) although {132} is not Schur-positive; C_n A need not be symmetric; \
                 Q(C_n) = s_(n) + s_(n-1,1); cDes_rot and cDes'_rot can differ"
            }
            Suite::Oracles => {
                "F-to-M conversion agrees with polynomial expansion; Gessel's expansion of s_λ round-trips; \
                 SYT counts follow the hook length formula; RSK switches P and Q under inversion"
            }
            Suite::All => "every suite above",
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Check {
    pub name: String,
    pub scope: String,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

impl Check {
    fn new(name: impl Into<String>, scope: impl Into<String>, outcome: Result<(), String>) -> Self {
        let (pass, counterexample) = match outcome {
            Ok(()) => (true, None),
            Err(c) => (false, Some(c)),
        };
        Check {
            name: name.into(),
            scope: scope.into(),
            pass,
            counterexample,
            witness: None,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub suite: &'static str,
    pub statement: &'static str,
    pub nmax: usize,
    pub seed: u64,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }
}

pub fn run(suite: Suite, nmax: usize, seed: u64) -> Vec<Report> {
    let suites: Vec<Suite> = if suite == Suite::All {
        Suite::EACH.to_vec()
    } else {
        vec![suite]
    };
    suites
        .into_iter()
        .map(|s| {
            let checks = match s {
                Suite::MainTheorem => main_theorem(nmax, seed),
                Suite::ErTheorem => er_theorem(nmax),
                Suite::JdtBijection => jdt_bijection(nmax),
                Suite::DesPreservation => des_preservation(nmax),
                Suite::ExtensionAxioms => extension_axioms(nmax),
                Suite::Remarks => remarks(nmax),
                Suite::Oracles => oracles(nmax, seed),
                Suite::All => unreachable!(),
            };
            Report {
                suite: s.name(),
                statement: s.statement(),
                nmax,
                seed,
                checks,
            }
        })
        .collect()
}

fn require(cond: bool, what: impl Display) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(what.to_string())
    }
}

/// `(n, λ)` for every `λ ⊢ n-1`, `2 ≤ n ≤ nmax`.
fn boxed_shapes(nmax: usize) -> Vec<(usize, Partition)> {
    (2..=nmax)
        .flat_map(|n| Partition::all(n - 1).into_iter().map(move |l| (n, l)))
        .collect()
}

/// `(n, J)` for every `J ⊆ [n-2]`, `3 ≤ n ≤ nmax`.
fn j_classes(nmax: usize) -> Vec<(usize, DescentSet)> {
    (3..=nmax)
        .flat_map(|n| (0..1u64 << (n - 2)).map(move |mask| (n, DescentSet::from_mask(n - 1, mask))))
        .collect()
}

fn closure_equals_pieri(a: &PermMultiset) -> Result<(), String> {
    let base = schur_expand(&q_of(a)).map_err(|e| format!("Q(A): {e}"))?;
    let rotated =
        schur_expand(&q_of(&a.horizontal_closure())).map_err(|e| format!("Q(A C_n): {e}"))?;
    let want = pieri_s1(&base);
    require(
        rotated == want,
        format_args!("Q(A C_n) = {rotated}, Q(A) s_1 = {want}"),
    )?;
    require(
        rotated.is_nonnegative(),
        format_args!("Q(A C_n) = {rotated}"),
    )
}

fn main_theorem(nmax: usize, seed: u64) -> Vec<Check> {
    let mut checks: Vec<Check> = boxed_shapes(nmax)
        .par_iter()
        .map(|(n, lambda)| {
            let outcome = a_lambda(lambda)
                .map_err(|e| e.to_string())
                .and_then(|a| closure_equals_pieri(&a));
            Check::new("Q(A_λ C_n) = s_λ s_1", format!("n={n} λ={lambda}"), outcome)
        })
        .collect();
    checks.par_extend(j_classes(nmax).par_iter().map(|(n, j)| {
        let outcome = descent_class(n - 1, j, true)
            .map_err(|e| e.to_string())
            .and_then(|d| closure_equals_pieri(&d));
        Check::new(
            "Q(D_J^{-1} C_n) = Q(D_J^{-1}) s_1",
            format!("n={n} J={j}"),
            outcome,
        )
    }));
    let samples: Vec<(usize, usize, u64)> = (2..=nmax)
        .flat_map(|n| (0..4).map(move |i| (n, i, seed ^ ((n as u64) << 32 | i as u64))))
        .collect();
    checks.par_extend(samples.par_iter().map(|&(n, i, s)| {
        let mut rng = ChaCha8Rng::seed_from_u64(s);
        let mut a = PermMultiset::new(n - 1);
        for lambda in Partition::all(n - 1) {
            let m = rng.gen_range(0..=2);
            let al = a_lambda(&lambda).expect("valid shape");
            for _ in 0..m {
                a.extend(&al).expect("same size");
            }
        }
        Check::new(
            "Q(A C_n) = Q(A) s_1 for a random union of A_λ",
            format!("n={n} sample={i}"),
            closure_equals_pieri(&a),
        )
    }));
    checks
}

fn er_theorem(nmax: usize) -> Vec<Check> {
    j_classes(nmax)
        .par_iter()
        .map(|(n, j)| {
            let outcome = descent_class(n - 1, j, true)
                .map_err(|e| e.to_string())
                .and_then(|d| {
                    let q = q_of(&d.horizontal_closure());
                    require(is_schur_positive(&q), format_args!("Q = {q}"))
                });
            Check::new(
                "D_J^{-1} C_n is Schur-positive",
                format!("n={n} J={j}"),
                outcome,
            )
        })
        .collect()
}

fn jdt_bijection(nmax: usize) -> Vec<Check> {
    boxed_shapes(nmax)
        .par_iter()
        .flat_map_iter(|(n, lambda)| {
            let n = *n;
            let all = enumerate_syt(&Shape::boxed(lambda.clone()).expect("valid shape"));
            let tops: Vec<_> = all.iter().filter(|t| t.delta() == Ok(n)).cloned().collect();
            let scope = format!("n={n} λ={lambda}");
            let bijection = (0..n).try_for_each(|k| {
                let mut image = std::collections::BTreeSet::new();
                for t in &tops {
                    let r = t.add_mod(k as i64);
                    let p = jdt(&r)
                        .map_err(|e| format!("jdt({}): {e}", tableau_compact(&r)))?
                        .0;
                    require(
                        jdt_inverse(&p).as_ref() == Ok(&r),
                        format_args!("jdt⁻¹ fails at {}", tableau_compact(&r)),
                    )?;
                    require(
                        image.insert(p),
                        format_args!("k={k}: two tableaux map to the same P"),
                    )?;
                }
                let fiber = all
                    .iter()
                    .filter(|p| p.delta().map(|d| d % n) == Ok(k))
                    .count();
                require(
                    image.len() == fiber,
                    format_args!("k={k}: image has {} of {fiber} tableaux", image.len()),
                )
            });
            let traces = (0..n).try_for_each(|k| {
                tops.iter().try_for_each(|t| {
                    let r = t.add_mod(k as i64);
                    let trace = jdt(&r).map_err(|e| e.to_string())?.1;
                    check_jdt_trace(&trace).map_err(|e| format!("{}: {e}", tableau_compact(&r)))
                })
            });
            [
                Check::new(
                    "jdt is a bijection per shift with inverse δ + ijdt(-δ + P)",
                    scope.clone(),
                    bijection,
                ),
                Check::new("straightening trace invariants", scope, traces),
            ]
        })
        .collect()
}

fn des_preservation(nmax: usize) -> Vec<Check> {
    boxed_shapes(nmax)
        .par_iter()
        .flat_map_iter(|(n, lambda)| {
            let n = *n;
            let scope = format!("n={n} λ={lambda}");
            let tops: Vec<_> = enumerate_syt(&Shape::boxed(lambda.clone()).expect("valid shape"))
                .into_iter()
                .filter(|t| t.delta() == Ok(n))
                .collect();
            let jdt_des = tops.iter().try_for_each(|t| {
                (0..n as i64).try_for_each(|k| {
                    let r = t.add_mod(k);
                    let p = jdt(&r).map_err(|e| e.to_string())?.0;
                    require(
                        p.descent_set() == Ok(r.row_descents()),
                        format_args!("{}", tableau_compact(&r)),
                    )
                })
            });
            let phi_des = a_lambda(lambda).map_err(|e| e.to_string()).and_then(|a| {
                a.iter().try_for_each(|(sigma, _)| {
                    let pi = sigma.embed();
                    (0..n as i64).try_for_each(|k| {
                        let tau = pi.rotate(-k);
                        let r = phi(&tau, lambda).map_err(|e| format!("φ({tau}): {e}"))?;
                        let p = jdt(&r).map_err(|e| e.to_string())?.0;
                        require(
                            r.row_descents() == tau.descent_set()
                                && p.descent_set() == Ok(tau.descent_set()),
                            format_args!("τ={tau}"),
                        )
                    })
                })
            });
            [
                Check::new("Des(jdt(k+T)) = Des(k+T)", scope.clone(), jdt_des),
                Check::new("Des(jdt(φ(τ))) = Des(φ(τ)) = Des(τ)", scope, phi_des),
            ]
        })
        .collect()
}

fn extension_check<W: CyclicExtension + Sync>(name: &str, scope: String, w: &W) -> Check {
    let outcome = verify_extension(w)
        .map_err(|e| e.to_string())
        .and_then(|report| match report.violations.first() {
            None => Ok(()),
            Some(v) => Err(format!("{v:?}")),
        });
    Check::new(name, scope, outcome)
}

fn extension_axioms(nmax: usize) -> Vec<Check> {
    let mut checks: Vec<Check> = (2..=nmax)
        .into_par_iter()
        .map(|n| {
            extension_check(
                "permutations under rotation",
                format!("n={n}"),
                &PermutationRotation { n },
            )
        })
        .collect();
    let straight: Vec<Partition> = (2..=nmax).flat_map(Partition::all).collect();
    checks.par_extend(straight.par_iter().map(|lambda| {
        let w = RotatedTableaux {
            shape: Shape::straight(lambda.clone()),
        };
        extension_check("rotated tableaux under k + T", format!("λ={lambda}"), &w)
    }));
    checks.par_extend(boxed_shapes(nmax).par_iter().flat_map_iter(|(n, lambda)| {
        let n = *n;
        let scope = format!("n={n} λ={lambda}");
        let axioms = extension_check(
            "SYT(λ^□) under ψ",
            scope.clone(),
            &BoxedTableaux {
                lambda: lambda.clone(),
            },
        );
        let orbits = psi_orbits(lambda)
            .map_err(|e| e.to_string())
            .and_then(|orbits| {
                let f = enumerate_syt(&Shape::straight(lambda.clone())).len();
                let total: usize = orbits.iter().map(Vec::len).sum();
                require(
                    total == n * f,
                    format_args!("orbits cover {total} of {} tableaux", n * f),
                )?;
                orbits.iter().try_for_each(|o| {
                    require(n % o.len() == 0, format_args!("orbit of size {}", o.len()))
                })
            });
        let agree = enumerate_syt(&Shape::boxed(lambda.clone()).expect("valid shape"))
            .iter()
            .try_for_each(|p| {
                let mut q = p.clone();
                for k in 1..=n as i64 {
                    q = psi_generator(&q).map_err(|e| e.to_string())?;
                    let direct = psi_direct(p, k).map_err(|e| e.to_string())?;
                    require(direct == q, format_args!("P={} k={k}", tableau_compact(p)))?;
                    require(
                        cdes_boxed(&q) == cdes_boxed(p).map(|c| c.rotate(k)),
                        format_args!("P={} k={k}", tableau_compact(p)),
                    )?;
                }
                require(
                    q == *p,
                    format_args!("ψ(P,n) ≠ P for P={}", tableau_compact(p)),
                )
            });
        [
            axioms,
            Check::new(
                "ψ-orbit sizes divide n and cover n f^λ tableaux",
                scope.clone(),
                orbits,
            ),
            Check::new("ψ(P,k) = jdt(k + jdt⁻¹(P)) and rotates cDes", scope, agree),
        ]
    }));
    checks
}

fn perms(n: usize, words: &[&str]) -> PermMultiset {
    PermMultiset::from_perms(
        n,
        words
            .iter()
            .map(|w| w.parse::<Permutation>().expect("literal")),
    )
    .expect("literal")
}

fn remarks(nmax: usize) -> Vec<Check> {
    let mut checks = Vec::new();
    let a = perms(3, &["132"]);
    let rotated = schur_expand(&q_of(&a.horizontal_closure()));
    checks.push(Check::new(
        "Q({132}C_4) = 2 s_(2,2) while Q({132}) is not symmetric",
        "n=4",
        require(
            rotated.as_ref().map(ToString::to_string).as_deref() == Ok("2*s[2,2]")
                && !is_symmetric(&q_of(&a)),
            format_args!("{rotated:?}"),
        ),
    ));
    let a = perms(4, &["3142", "1423"]);
    checks.push(Check::new(
        "A and A C_5 Schur-positive, C_5 A not symmetric",
        "A={3142,1423}",
        require(
            is_schur_positive(&q_of(&a))
                && is_schur_positive(&q_of(&a.horizontal_closure()))
                && !is_symmetric(&q_of(&a.left_closure())),
            "left closure unexpectedly symmetric or a set not Schur-positive",
        ),
    ));
    for n in 2..=nmax.max(2) {
        let got = schur_expand(&q_of(&PermMultiset::cyclic_group(n)));
        let mut want = SchurExpansion::schur(Partition::new(vec![n]).expect("single part"));
        want.add_term(Partition::new(vec![n - 1, 1]).expect("hook"), 1.into());
        checks.push(Check::new(
            "Q(C_n) = s_(n) + s_(n-1,1)",
            format!("n={n}"),
            require(got.as_ref() == Ok(&want), format_args!("{got:?}")),
        ));
    }
    let witness = (2..=nmax).flat_map(Partition::all).find_map(|lambda| {
        let n = lambda.size() as i64;
        enumerate_syt(&Shape::straight(lambda))
            .into_iter()
            .find_map(|t| {
                (1..n)
                    .map(|k| t.add_mod(k))
                    .find(|r| r.cdes_rot() != r.cdes_rot_prime())
            })
    });
    let mut search = Check::new(
        "cDes_rot and cDes'_rot differ on some rotated SYT",
        format!("straight shapes, n ≤ {nmax}"),
        require(witness.is_some(), "no rotated SYT separates them"),
    );
    search.witness = witness.map(|r| {
        format!(
            "{}: cDes_rot {} vs cDes'_rot {}",
            tableau_compact(&r),
            r.cdes_rot(),
            r.cdes_rot_prime()
        )
    });
    checks.push(search);
    checks
}

fn hook_length_count(lambda: &Partition) -> u128 {
    let parts = lambda.parts();
    let mut hooks: u128 = 1;
    for (r, &len) in parts.iter().enumerate() {
        for c in 0..len {
            let leg = parts[r + 1..].iter().filter(|&&l| l > c).count();
            hooks *= (len - c + leg) as u128;
        }
    }
    (1..=lambda.size() as u128).product::<u128>() / hooks
}

fn random_qsym(rng: &mut ChaCha8Rng, n: usize) -> QSymF {
    let mut q = QSymF::zero(n);
    for _ in 0..rng.gen_range(0..=4) {
        let c: i64 = rng.gen_range(-3..=3);
        q.add_term(
            DescentSet::from_mask(n, rng.gen_range(0..1u64 << (n - 1))),
            c.into(),
        );
    }
    q
}

fn oracles(nmax: usize, seed: u64) -> Vec<Check> {
    let sizes: Vec<usize> = (1..=nmax.min(6)).collect();
    let mut checks: Vec<Check> = sizes
        .par_iter()
        .map(|&n| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed ^ n as u64);
            let outcome = (0..100).try_for_each(|_| {
                let a = random_qsym(&mut rng, n);
                let b = if rng.gen_bool(0.5) {
                    a.clone()
                } else {
                    random_qsym(&mut rng, n)
                };
                let by_m = f_to_m(&a) == f_to_m(&b);
                let pa = f_to_polynomial(&a, n).map_err(|e| e.to_string())?;
                let pb = f_to_polynomial(&b, n).map_err(|e| e.to_string())?;
                require(by_m == (pa == pb), format_args!("{a} vs {b}"))
            });
            Check::new(
                "M-basis and polynomial equality agree",
                format!("n={n}, 100 pairs"),
                outcome,
            )
        })
        .collect();
    let shapes: Vec<Partition> = (1..=nmax).flat_map(Partition::all).collect();
    checks.par_extend(shapes.par_iter().flat_map_iter(|lambda| {
        let q = schur_in_f(&Shape::straight(lambda.clone()));
        let expanded = schur_expand(&q);
        let count = enumerate_syt(&Shape::straight(lambda.clone())).len() as u128;
        let hooks = hook_length_count(lambda);
        [
            Check::new(
                "schur_expand(s_λ in F) = s_λ",
                format!("λ={lambda}"),
                require(
                    expanded == Ok(SchurExpansion::schur(lambda.clone())),
                    format_args!("{expanded:?}"),
                ),
            ),
            Check::new(
                "SYT count equals hook length formula",
                format!("λ={lambda}"),
                require(
                    count == hooks,
                    format_args!("enumerated {count}, hooks {hooks}"),
                ),
            ),
        ]
    }));
    checks.par_extend((1..=nmax.min(7)).into_par_iter().map(|n| {
        let outcome = Permutation::all(n).try_for_each(|pi| {
            let (p, q) = rsk(&pi);
            require(rsk(&pi.inverse()) == (q.clone(), p), format_args!("π={pi}"))?;
            require(
                q.descent_set() == Ok(pi.descent_set()),
                format_args!("Des(Q) at π={pi}"),
            )
        });
        Check::new(
            "RSK switches P and Q under inversion; Des(Q) = Des(π)",
            format!("n={n}"),
            outcome,
        )
    }));
    checks
}
