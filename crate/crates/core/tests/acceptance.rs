//! End-to-end acceptance criteria. Every comparison is exact. Runs without
//! the libtest harness: each criterion prints one `pass`/`FAIL` line and the
//! process exits nonzero if any fails.

use std::process::ExitCode;
use std::time::Instant;

use whalg::builders::{build_a_g_omega, build_a_m_c, build_b_g_omega, closed_form_r_matrix};
use whalg::double::{build_drinfeld_double, build_pairing, sharp_iso, PairingForm, PairingLaw};
use whalg::exactmath::{Cyclotomic, SparseMatrix, SparseTensor3, SparseVec};
use whalg::groups::{standard_cocycle, validate_cocycle, validate_group, FiniteGroup, GroupViolation, ThreeCocycle};
use whalg::repcat::{
    coherence_check, k_module, modules_isomorphic, reduced_r_roundtrip, tensor_product, validate_module,
    ModuleViolation, WhaModule,
};
use whalg::skeleton::{
    boxtimes_rev_skeleton, fib_fusion_ring, left_regular_module, pointed_ring, pointed_skeleton, regular_right_module,
    validate_module_pentagon, validate_pentagon,
};
use whalg::tube::{build_tube, chi_iso, verify_morita_section, weak_bialgebra_obstruction, Candidate};
use whalg::wha::{
    base_algebras, center_dim, verify_antipode, verify_quasitriangular, verify_weak_bialgebra, verify_yang_baxter, Law,
    RMatrixCandidate, WeakHopfAlgebra,
};

type Outcome = Result<String, String>;

fn record(n: usize, title: &str, run: impl FnOnce() -> Outcome) -> bool {
    let start = Instant::now();
    let outcome = std::panic::catch_unwind(std::panic::AssertUnwindSafe(run)).unwrap_or_else(|_| Err("panicked".into()));
    let secs = start.elapsed().as_secs_f64();
    match &outcome {
        Ok(note) => println!("criterion {n:2} {title}: pass ({note}; {secs:.1}s)"),
        Err(why) => println!("criterion {n:2} {title}: FAIL ({why})"),
    }
    outcome.is_ok()
}

fn ensure(cond: bool, why: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(why())
    }
}

/// Trivial cocycles on the catalog plus every standard cocycle on its cyclic groups.
fn catalog() -> Vec<(String, ThreeCocycle)> {
    let mut out = Vec::new();
    for g in FiniteGroup::standard_catalog() {
        out.push((format!("{} trivial", g.name()), ThreeCocycle::trivial(&g)));
        if let Some(n) = g.cyclic_order() {
            for p in 1..n {
                out.push((format!("{} p={p}", g.name()), standard_cocycle(n, p).unwrap()));
            }
        }
    }
    out
}

/// Every standard cocycle on Z2 and Z3, `p = 0` being the trivial one.
fn small_cyclic() -> Vec<(String, ThreeCocycle)> {
    [2, 3].into_iter().flat_map(|n| (0..n).map(move |p| (format!("z{n} p={p}"), standard_cocycle(n, p).unwrap()))).collect()
}

fn hopf_failure(a: &WeakHopfAlgebra) -> Option<String> {
    let wb = verify_weak_bialgebra(a);
    if !wb.passed {
        return Some(format!("{}", wb.violation.unwrap()));
    }
    let s = verify_antipode(a);
    (!s.passed).then(|| format!("{}", s.violation.unwrap()))
}

fn same_structure(x: &WeakHopfAlgebra, y: &WeakHopfAlgebra) -> Option<&'static str> {
    if x.dim() != y.dim() {
        return Some("dimension");
    }
    if x.mu() != y.mu() {
        return Some("multiplication");
    }
    if x.unit() != y.unit() {
        return Some("unit");
    }
    if x.delta() != y.delta() {
        return Some("comultiplication");
    }
    if x.counit() != y.counit() {
        return Some("counit");
    }
    (x.antipode() != y.antipode()).then_some("antipode")
}

fn criterion_01_weak_hopf_axioms() -> bool {
    record(1, "weak Hopf axiom suite", || {
        let mut count = 0;
        for (name, w) in catalog() {
            let b = build_b_g_omega(&w).map_err(|e| format!("B {name}: {e}"))?;
            let (a, _) = build_a_g_omega(&w).map_err(|e| format!("A {name}: {e}"))?;
            for (kind, alg) in [("B", &b), ("A", &a)] {
                if let Some(why) = hopf_failure(alg) {
                    return Err(format!("{kind} {name}: {why}"));
                }
                count += 1;
            }
        }
        Ok(format!("{count} algebras"))
    })
}

fn criterion_02_quasitriangular_and_yang_baxter() -> bool {
    record(2, "quasi-triangularity and Yang-Baxter", || {
        let cases = catalog();
        for (name, w) in &cases {
            let (a, r) = build_a_g_omega(w).map_err(|e| format!("{name}: {e}"))?;
            let qt = verify_quasitriangular(&a, &r);
            ensure(qt.passed, || format!("{name}: {}", qt.violation.clone().unwrap()))?;
            let ybe = verify_yang_baxter(&a, &r.r);
            ensure(ybe.passed, || format!("{name}: {}", ybe.violation.clone().unwrap()))?;
        }
        Ok(format!("{} R-matrices", cases.len()))
    })
}

fn criterion_03_closed_forms_reproduced() -> bool {
    record(3, "closed-form reproduction", || {
        for (name, w) in small_cyclic() {
            let m = regular_right_module(&pointed_skeleton(&w));
            let general = build_a_m_c(m.category(), &m).map_err(|e| e.to_string())?;
            if let Some(what) = same_structure(&general, &build_b_g_omega(&w).unwrap()) {
                return Err(format!("B {name}: {what} differs"));
            }
            let (c, m) = boxtimes_rev_skeleton(&w);
            let general = build_a_m_c(&c, &m).map_err(|e| e.to_string())?;
            if let Some(what) = same_structure(&general, &build_a_g_omega(&w).unwrap().0) {
                return Err(format!("A {name}: {what} differs"));
            }
        }
        Ok("Z2, Z3, all p, entrywise".into())
    })
}

fn criterion_04_dimensions_and_base_algebras() -> bool {
    record(4, "dimensions and base algebras", || {
        for (name, w) in catalog() {
            let g = w.group();
            let n = g.order();
            let b = build_b_g_omega(&w).unwrap();
            let (a, _) = build_a_g_omega(&w).unwrap();
            ensure(b.dim() == n.pow(3), || format!("{name}: dim B = {}", b.dim()))?;
            ensure(a.dim() == n.pow(4), || format!("{name}: dim A = {}", a.dim()))?;
            for (kind, alg) in [("B", &b), ("A", &a)] {
                let base = base_algebras(alg);
                ensure(base.passed, || format!("{kind} {name}: {:?}", base.failures))?;
                ensure(base.dim_left == n, || format!("{kind} {name}: dim A^l = {}", base.dim_left))?;
            }
            let zb = center_dim(&b);
            ensure(zb == n, || format!("{name}: center of B has dimension {zb}"))?;
            if w.is_trivial() && g.is_abelian() {
                let za = center_dim(&a);
                ensure(za == n * n, || format!("{name}: center of A has dimension {za}"))?;
            }
        }
        Ok("catalog".into())
    })
}

fn criterion_05_fusion_of_k_modules() -> bool {
    record(5, "representation fusion and coherence", || {
        let mut checks = 0;
        for (name, w) in small_cyclic() {
            let b = build_b_g_omega(&w).unwrap();
            let g = w.group();
            let k: Vec<WhaModule> = g.elements().map(|x| k_module(&w, x)).collect();
            for x in g.elements() {
                ensure(validate_module(&b, &k[x]).passed, || format!("{name}: K({x}) is not a module"))?;
                for y in g.elements() {
                    let t = tensor_product(&b, &k[x], &k[y]);
                    ensure(modules_isomorphic(&b, &t.module, &k[g.mul(x, y)]), || {
                        format!("{name}: K({x}) ⊠ K({y}) is not K({})", g.mul(x, y))
                    })?;
                    checks += 1;
                }
            }
            for x in g.elements() {
                for y in g.elements() {
                    for z in g.elements() {
                        let rep = coherence_check(&b, &k[x], &k[y], &k[z]);
                        ensure(rep.passed, || format!("{name}: ({x},{y},{z}) fails {:?}", rep.failures))?;
                        checks += 1;
                    }
                }
            }
        }
        Ok(format!("{checks} instances"))
    })
}

fn criterion_06_braiding_roundtrip() -> bool {
    record(6, "braiding roundtrip", || {
        for (name, w) in small_cyclic() {
            let (a, _) = build_a_g_omega(&w).unwrap();
            ensure(reduced_r_roundtrip(&a, &closed_form_r_matrix(&w)), || format!("{name}: roundtrip differs"))?;
        }
        Ok("Z2, Z3, all p".into())
    })
}

fn criterion_07_tube_bridge() -> bool {
    record(7, "tube bridge", || {
        for (name, w) in small_cyclic() {
            let c = pointed_skeleton(&w);
            let (_, chi) = chi_iso(&c).map_err(|e| format!("{name}: {e}"))?;
            ensure(chi.passed, || format!("{name}: χ fails {chi:?}"))?;
            for (m, n) in [(1, 1), (1, 2), (2, 1), (2, 2)] {
                let rep = verify_morita_section(&c, m, n).map_err(|e| e.to_string())?;
                ensure(rep.passed, || format!("{name}: section ({m},{n}) fails at {:?}", rep.failure))?;
            }
        }
        let tube = build_tube(&pointed_skeleton(&ThreeCocycle::trivial(&FiniteGroup::cyclic(2)))).unwrap();
        ensure(tube.dim() == 4 && tube.center_dim() == 4, || format!("Vec_Z2 tube: dim {}, center {}", tube.dim(), tube.center_dim()))?;
        Ok("χ and Morita sections on Z2, Z3".into())
    })
}

fn criterion_08_obstruction() -> bool {
    record(8, "obstruction", || {
        let fib = fib_fusion_ring();
        let rep = weak_bialgebra_obstruction(&fib, &[Candidate { simples: vec!["t".into()], j_dim: 1 }]).map_err(|e| e.to_string())?;
        ensure(rep.obstructed, || "Fibonacci not obstructed".into())?;
        let pair = &rep.pairs[0];
        ensure((pair.left, pair.right, pair.product_dim, pair.bound) == (0, 0, 2, 1), || format!("unexpected pair {pair:?}"))?;
        for g in FiniteGroup::standard_catalog() {
            let ring = pointed_ring(&g);
            let singles: Vec<Candidate> = ring.labels().iter().map(|l| Candidate { simples: vec![l.clone()], j_dim: 1 }).collect();
            let rep = weak_bialgebra_obstruction(&ring, &singles).map_err(|e| e.to_string())?;
            ensure(!rep.obstructed, || format!("{}: pointed ring obstructed", g.name()))?;
        }
        Ok("(z,z) with 2 > 1; pointed rings clear".into())
    })
}

fn criterion_09_drinfeld_double() -> bool {
    record(9, "Drinfeld double", || {
        for (name, w) in small_cyclic() {
            let n = w.group().order();
            let c = pointed_skeleton(&w);
            let pairing = build_pairing(&c).map_err(|e| format!("{name}: {e}"))?;
            let rep = pairing.verify();
            ensure(rep.passed && rep.rank == n.pow(3), || format!("{name}: pairing {rep:?}"))?;
            let dbl = build_drinfeld_double(&pairing).map_err(|e| format!("{name}: {e}"))?;
            let d = dbl.algebra();
            ensure(d.dim() == n.pow(4), || format!("{name}: dim D = {}", d.dim()))?;
            if let Some(why) = hopf_failure(d) {
                return Err(format!("{name}: {why}"));
            }
            let qt = verify_quasitriangular(d, dbl.r_matrix());
            ensure(qt.passed, || format!("{name}: {:?}", qt.violation))?;
            let (_, sharp) = sharp_iso(&c).map_err(|e| format!("{name}: {e}"))?;
            ensure(sharp.passed && sharp.r_matched, || format!("{name}: ♯ {sharp:?}"))?;
        }
        Ok("Z2, Z3, all p".into())
    })
}

fn negate(v: &Cyclotomic) -> Cyclotomic {
    v * &Cyclotomic::from_int(v.conductor(), -1)
}

fn permuted_mu(a: &WeakHopfAlgebra, perm: &[usize]) -> Vec<(usize, usize, usize, Cyclotomic)> {
    let mut t: Vec<_> = a.mu().entries().map(|(i, e)| (perm[i], perm[e.j], perm[e.k], e.value.clone())).collect();
    t.sort_by_key(|e| (e.0, e.1, e.2));
    t
}

fn criterion_10_negative_controls() -> bool {
    record(10, "negative controls", || {
        let mut caught = Vec::new();

        // group table with one associativity violation
        let mut t: Vec<Vec<usize>> = (0..3).map(|a| (0..3).map(|b| (a + b) % 3).collect()).collect();
        t[1][1] = 0;
        t[1][2] = 2;
        let rep = validate_group(&t, 0).map_err(|e| e.to_string())?;
        ensure(matches!(rep.violation, Some(GroupViolation::Associativity { .. })), || "group table accepted".into())?;
        caught.push("group");

        // trivial ω with one value set to ζ₃
        let z3 = FiniteGroup::cyclic(3);
        let bad = ThreeCocycle::trivial(&z3).embed(3).unwrap().with_exponent(1, 1, 1, 1);
        let rep = validate_cocycle(&bad);
        ensure(!rep.passed && rep.violation.is_some(), || "cocycle accepted".into())?;
        caught.push("cocycle");

        // one F entry negated, one L entry negated
        let w = standard_cocycle(3, 1).unwrap();
        let c = pointed_skeleton(&w);
        let (key, v) = c.entries().into_iter().find(|(k, _)| k[..3].iter().all(|&x| x != 0)).unwrap();
        let rep = validate_pentagon(&c.with_entry(key, negate(&v)).unwrap());
        ensure(!rep.passed && rep.violation.is_some(), || "negated F accepted".into())?;
        let m = left_regular_module(&c);
        let (key, v) = m.entries().into_iter().find(|(k, _)| k[..3].iter().all(|&x| x != 0)).unwrap();
        let rep = validate_module_pentagon(&m.with_entry(key, negate(&v)).unwrap());
        ensure(!rep.passed && rep.violation.is_some(), || "negated L accepted".into())?;
        caught.push("pentagons");

        // B_Z2 with a zero counit, with S = id, with one μ entry changed
        let b = build_b_g_omega(&ThreeCocycle::trivial(&FiniteGroup::cyclic(2))).unwrap();
        let rep = verify_weak_bialgebra(&b.with_counit(SparseVec::new()).unwrap());
        let law = rep.violation.as_ref().map(|v| v.law);
        ensure(!rep.passed && matches!(law, Some(Law::Counit | Law::CounitFirstLeg | Law::CounitSecondLeg)), || format!("zero counit: {law:?}"))?;
        let rep = verify_antipode(&b.with_antipode(SparseMatrix::identity(b.dim(), b.conductor())).unwrap());
        ensure(rep.violation.as_ref().map(|v| v.law) == Some(Law::AntipodeTarget), || format!("S = id: {:?}", rep.violation))?;
        let two = Cyclotomic::from_int(b.conductor(), 2);
        let entries = b.mu().entries().enumerate().map(|(n, (i, e))| (i, e.j, e.k, if n == 1 { &e.value * &two } else { e.value.clone() }));
        let tampered = b.with_mu(SparseTensor3::from_triples((8, 8, 8), b.conductor(), entries).unwrap()).unwrap();
        let rep = verify_weak_bialgebra(&tampered);
        ensure(rep.violation.as_ref().is_some_and(|v| !v.indices.is_empty()), || "tampered μ accepted".into())?;
        caught.push("wha");

        // R = Δ(1), flipped R, 2R on A_Z2
        let (a, r) = build_a_g_omega(&ThreeCocycle::trivial(&FiniteGroup::cyclic(2))).unwrap();
        let rep = verify_quasitriangular(&a, &RMatrixCandidate::new(a.delta_one().clone()));
        ensure(rep.violation.is_some(), || "R = Δ(1) accepted".into())?;
        let rep = verify_quasitriangular(&a, &r.flipped());
        ensure(rep.violation.is_some(), || "flipped R accepted".into())?;
        let doubled: Vec<_> = r.r.iter().map(|(k, v)| (*k, v * &Cyclotomic::from_int(v.conductor(), 2))).collect();
        let rep = verify_quasitriangular(&a, &RMatrixCandidate::new(doubled.clone()));
        ensure(rep.violation.is_some(), || "2R accepted".into())?;
        ensure(!reduced_r_roundtrip(&a, &doubled), || "2R roundtrip accepted".into())?;
        caught.push("R-matrices");

        // K(1) of B_Z2^ω with the ω factor dropped
        let w2 = standard_cocycle(2, 1).unwrap();
        let b2 = build_b_g_omega(&w2).unwrap();
        let action = (0..2).flat_map(|a| (0..2).map(move |x| ((a * 2 + (1 + x) % 2) * 2 + x, x, (x + a) % 2, Cyclotomic::one(2))));
        let rep = validate_module(&b2, &WhaModule::from_action(8, 2, 2, action).unwrap());
        ensure(matches!(rep.violation, Some(ModuleViolation::Product { .. })), || "dropped ω factor accepted".into())?;
        caught.push("module");

        // general builder against the closed form with two labels transposed
        let m = regular_right_module(&pointed_skeleton(&w2));
        let general = build_a_m_c(m.category(), &m).unwrap();
        let mut perm: Vec<usize> = (0..8).collect();
        perm.swap(1, 2);
        let identity: Vec<usize> = (0..8).collect();
        ensure(permuted_mu(&general, &identity) == permuted_mu(&b2, &identity), || "identity map differs".into())?;
        ensure(permuted_mu(&general, &perm) != permuted_mu(&b2, &identity), || "transposed labels accepted".into())?;
        caught.push("label map");

        // a rescaled pairing
        let p = build_pairing(&pointed_skeleton(&w2)).unwrap();
        let scaled = PairingForm::from_parts(p.b().clone(), p.a().clone(), p.matrix().scale(&Cyclotomic::from_int(p.conductor(), 2))).unwrap();
        let rep = scaled.verify();
        ensure(matches!(rep.violation, Some((PairingLaw::Multiplicative, _))), || format!("scaled pairing: {:?}", rep.violation))?;
        caught.push("pairing");

        Ok(caught.join(", "))
    })
}

fn main() -> ExitCode {
    let criteria: [fn() -> bool; 10] = [
        criterion_01_weak_hopf_axioms,
        criterion_02_quasitriangular_and_yang_baxter,
        criterion_03_closed_forms_reproduced,
        criterion_04_dimensions_and_base_algebras,
        criterion_05_fusion_of_k_modules,
        criterion_06_braiding_roundtrip,
        criterion_07_tube_bridge,
        criterion_08_obstruction,
        criterion_09_drinfeld_double,
        criterion_10_negative_controls,
    ];
    let failed = criteria.iter().filter(|c| !c()).count();
    println!("acceptance: {} of {} criteria pass", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
