//! The acceptance criteria, one PASS/FAIL line each.
//!
//! Arithmetic is exact, so every comparison is equality; runtime limits are
//! pinned per criterion. Exits nonzero if any criterion fails.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use hochlie::assoc::{
    block_decomposition, group_algebra, ideal_power, is_local, is_symmetric, ot_criterion, radical, radical_chop,
    radical_frobenius,
};
use hochlie::deriv::{hh1_module_socle, is_derivation, socle_maps};
use hochlie::lie::{is_simple, replay_verdict, witt, witt_isomorphism};
use hochlie::verify::{catalog, run_suite, Family, Status, SuiteConfig, SuiteId};
use hochlie::{hh1, AssocAlgebra, GroupSpec, Matrix, PrimeField, Scalar, SimplicityVerdict, Subspace};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const PRIMES: [u32; 4] = [2, 3, 5, 7];
const PROPERTY_CASES: usize = 500;
const SECOND: Duration = Duration::from_secs(1);
const LIMIT_CYCLIC: Duration = Duration::from_secs(5);
const LIMIT_WITT: Duration = Duration::from_secs(600);
const LIMIT_DICHOTOMY: Duration = Duration::from_secs(600);
const LIMIT_S3: Duration = SECOND;
/// Criteria without a stated budget still get one, generous enough for a debug build.
const LIMIT_DEFAULT: Duration = Duration::from_secs(900);

type Outcome = Result<String, String>;

fn kg(spec: GroupSpec, p: u32) -> AssocAlgebra {
    group_algebra(&spec.build().unwrap(), PrimeField::new(p).unwrap()).unwrap()
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn cyclic_dims() -> Outcome {
    let mut dims = Vec::new();
    for p in PRIMES {
        let a = kg(GroupSpec::Cyclic { n: p as usize }, p);
        let d = hh1(&a).map_err(|e| e.to_string())?.dim();
        ensure(d == p as usize, || format!("dim HH¹(kC{p}) = {d}"))?;
        dims.push(d.to_string());
    }
    Ok(format!("dims {}", dims.join(", ")))
}

fn witt_dims() -> Outcome {
    let mut out = Vec::new();
    for (p, n) in [(2u32, 2u32), (2, 3), (3, 2), (3, 3)] {
        let a = kg(GroupSpec::ElemAbelian { p, n }, p);
        let h = hh1(&a).map_err(|e| e.to_string())?;
        let want = n as usize * (p as usize).pow(n);
        ensure(h.dim() == want, || format!("(p,n)=({p},{n}): dim {} ≠ {want}", h.dim()))?;
        ensure(witt(n, p).map_err(|e| e.to_string())?.dim() == want, || "Witt dimension".into())?;
        let iso = witt_isomorphism(&a, &h, n, p).map_err(|e| format!("(p,n)=({p},{n}): {e}"))?;
        ensure(iso.map.rank() == want, || format!("(p,n)=({p},{n}): map not bijective"))?;
        out.push(format!("({p},{n})→{want}"));
    }
    Ok(format!("isomorphic to W(n;1): {}", out.join(" ")))
}

fn dichotomy() -> Outcome {
    let simple = [
        (GroupSpec::ElemAbelian { p: 3, n: 1 }, 3),
        (GroupSpec::ElemAbelian { p: 2, n: 2 }, 2),
        (GroupSpec::ElemAbelian { p: 5, n: 1 }, 5),
        (GroupSpec::ElemAbelian { p: 7, n: 1 }, 7),
        (GroupSpec::ElemAbelian { p: 2, n: 3 }, 2),
        (GroupSpec::ElemAbelian { p: 3, n: 2 }, 3),
    ];
    let not_simple = [
        (GroupSpec::Cyclic { n: 2 }, 2),
        (GroupSpec::Cyclic { n: 4 }, 2),
        (GroupSpec::Cyclic { n: 8 }, 2),
        (GroupSpec::Cyclic { n: 9 }, 3),
        (GroupSpec::DirectProduct { factors: vec![GroupSpec::Cyclic { n: 2 }, GroupSpec::Cyclic { n: 4 }] }, 2),
    ];
    for (spec, p) in simple {
        let l = hh1(&kg(spec.clone(), p)).map_err(|e| e.to_string())?.lie;
        let v = is_simple(&l, 0);
        ensure(v.is_simple() == Some(true), || format!("{spec}: {}", v.label()))?;
        ensure(replay_verdict(&l, &v), || format!("{spec}: certificate does not replay"))?;
    }
    for (spec, p) in not_simple {
        let l = hh1(&kg(spec.clone(), p)).map_err(|e| e.to_string())?.lie;
        let v = is_simple(&l, 0);
        let SimplicityVerdict::NotSimple { witness: Some(w), .. } = &v else {
            return Err(format!("{spec}: {} without a witness ideal", v.label()));
        };
        ensure(w.dim() > 0 && w.dim() < l.dim() && l.is_ideal(w), || format!("{spec}: witness is not a proper ideal"))?;
        ensure(replay_verdict(&l, &v), || format!("{spec}: witness does not replay"))?;
    }
    Ok("6 simple with replayed certificates, 5 not simple with proper ideal witnesses".into())
}

fn s3_dim() -> Outcome {
    let a = kg(GroupSpec::SemidirectCpCm { p: 3, m: 2, d: 2 }, 3);
    let d = hh1(&a).map_err(|e| e.to_string())?.dim();
    ensure(d == 1, || format!("dim HH¹(kS3) = {d}"))?;
    Ok("dim 1".into())
}

fn radical_generated_by_center() -> Outcome {
    let cfg = SuiteConfig {
        families: vec![Family::Cyclic, Family::ElemAbelian, Family::Product],
        max_group_order: 27,
        ..SuiteConfig::default()
    };
    let abelian = catalog(&cfg).map_err(|e| e.to_string())?;
    for e in &abelian {
        let a = e.build().map_err(|e| e.to_string())?;
        ensure(ot_criterion(&a).map_err(|e| e.to_string())?, || format!("{}: criterion false", e.id))?;
    }
    for (name, spec) in [("kD8", GroupSpec::Dihedral { order: 8 }), ("kQ8", GroupSpec::Quaternion8)] {
        ensure(!ot_criterion(&kg(spec, 2)).map_err(|e| e.to_string())?, || format!("{name}: criterion true"))?;
    }
    let s3 = kg(GroupSpec::SemidirectCpCm { p: 3, m: 2, d: 2 }, 3);
    let blocks = block_decomposition(&s3).map_err(|e| e.to_string())?;
    ensure(blocks.len() == 1, || format!("kS3 has {} blocks over GF(3)", blocks.len()))?;
    ensure(!ot_criterion(&blocks[0].sub.algebra).map_err(|e| e.to_string())?, || "block of kS3: criterion true".into())?;
    Ok(format!("true on {} abelian group algebras, false on kD8, kQ8, B0(kS3)", abelian.len()))
}

fn local_symmetric_list() -> Vec<(&'static str, AssocAlgebra)> {
    vec![
        ("kC4", kg(GroupSpec::Cyclic { n: 4 }, 2)),
        ("kC8", kg(GroupSpec::Cyclic { n: 8 }, 2)),
        ("kC9", kg(GroupSpec::Cyclic { n: 9 }, 3)),
        ("k(C2)^2", kg(GroupSpec::ElemAbelian { p: 2, n: 2 }, 2)),
        ("k(C2)^3", kg(GroupSpec::ElemAbelian { p: 2, n: 3 }, 2)),
        ("k(C3)^2", kg(GroupSpec::ElemAbelian { p: 3, n: 2 }, 3)),
        ("kD8", kg(GroupSpec::Dihedral { order: 8 }, 2)),
        ("kQ8", kg(GroupSpec::Quaternion8, 2)),
        ("k[3^(1+2)]", kg(GroupSpec::ExtraspecialP3ExponentP { p: 3 }, 3)),
    ]
}

fn socle_inequality() -> Outcome {
    let mut parts = Vec::new();
    for (name, a) in local_symmetric_list() {
        let err = |e: hochlie::Error| format!("{name}: {e}");
        ensure(is_local(&a).map_err(err)?, || format!("{name}: not local"))?;
        ensure(is_symmetric(&a).map_err(err)?.is_symmetric(), || format!("{name}: not symmetric"))?;
        let h = hh1(&a).map_err(err)?;
        let j = radical(&a).map_err(err)?.clone();
        let top = j.dim() - ideal_power(&a, &j, 2).map_err(err)?.dim();
        let soc = hh1_module_socle(&a, &h).map_err(err)?.dim();
        ensure(top <= soc, || format!("{name}: dim J/J² = {top} > {soc}"))?;
        let maps = socle_maps(&a, &h).map_err(err)?;
        for m in maps.space.matrices() {
            ensure(is_derivation(&a, &m), || format!("{name}: socle map violates Leibniz"))?;
        }
        // outer when nonzero: no nonzero combination is inner
        let inner = maps.space.space().intersect(h.ider.space()).map_err(err)?;
        ensure(inner.is_zero(), || format!("{name}: a nonzero socle map is inner"))?;
        ensure(maps.space.dim() > 0, || format!("{name}: no socle maps"))?;
        parts.push(format!("{name} {top}≤{soc}"));
    }
    Ok(parts.join(", "))
}

fn lower_bound() -> Outcome {
    let mut parts = Vec::new();
    for (name, a) in local_symmetric_list() {
        let d = hh1(&a).map_err(|e| format!("{name}: {e}"))?.dim();
        ensure(d >= 2, || format!("{name}: dim HH¹ = {d}"))?;
        parts.push(format!("{name} {d}"));
    }
    Ok(parts.join(", "))
}

fn lemma_suites() -> Outcome {
    let cfg = SuiteConfig { suites: vec![SuiteId::P35Filtration, SuiteId::L31L34Lemmas], ..SuiteConfig::default() };
    let algebras = catalog(&cfg).map_err(|e| e.to_string())?.len();
    let r = run_suite(&cfg).map_err(|e| e.to_string())?;
    if let Some(bad) = r.records.iter().find(|x| x.status != Status::Pass) {
        return Err(format!("{} / {}: {}", bad.algebra, bad.claim, bad.computed));
    }
    let nilpotent = r.records.iter().filter(|x| x.claim.starts_with("(iv)")).count();
    ensure(nilpotent == algebras, || format!("Der_2 nilpotency checked on {nilpotent} of {algebras} algebras"))?;
    Ok(format!("{} records on {algebras} algebras, Der_2 nilpotent on all", r.records.len()))
}

fn random_vec(p: u32, n: usize, rng: &mut ChaCha8Rng) -> Vec<Scalar> {
    (0..n).map(|_| rng.gen_range(0..p)).collect()
}

fn combination(f: PrimeField, n: usize, of: &[Vec<Scalar>], rng: &mut ChaCha8Rng) -> Vec<Scalar> {
    let mut v = vec![0; n];
    for w in of {
        f.axpy(&mut v, rng.gen_range(0..f.p()), w);
    }
    v
}

fn oracles() -> Outcome {
    let cfg = SuiteConfig::default();
    let mut commutative = 0;
    let mut groups = 0;
    for e in catalog(&cfg).map_err(|e| e.to_string())? {
        let a = e.build().map_err(|e| e.to_string())?;
        let chop = radical_chop(&a, 0).map_err(|e| e.to_string())?;
        if a.is_commutative() {
            let frob = radical_frobenius(&a).map_err(|e| e.to_string())?;
            ensure(chop == frob, || format!("{}: chop ≠ Frobenius kernel", e.id))?;
            commutative += 1;
        }
        if let Some(spec) = &e.group {
            let g = spec.build().map_err(|e| e.to_string())?;
            if g.p_group_prime() == Some(e.p) {
                let f = a.field();
                let aug = (0..a.dim()).filter(|&x| x != g.identity()).map(|x| {
                    let mut v = vec![0; a.dim()];
                    v[x] = 1;
                    v[g.identity()] = f.neg(1);
                    v
                });
                ensure(chop == Subspace::from_vectors(f, a.dim(), aug.collect()), || format!("{}: chop ≠ augmentation", e.id))?;
                groups += 1;
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0);
    for p in PRIMES {
        let f = PrimeField::new(p).unwrap();
        for case in 0..PROPERTY_CASES {
            let (rows, cols) = (rng.gen_range(1..10), rng.gen_range(1..10));
            let data = (0..rows * cols).map(|_| rng.gen_range(0..p)).collect();
            let m = Matrix::from_data(f, rows, cols, data).unwrap();
            let k = m.kernel();
            ensure(m.rank() + k.dim() == cols, || format!("rank–nullity fails, p={p} case {case}"))?;
            ensure(k.vectors().all(|v| m.mul_vec(v).iter().all(|&x| x == 0)), || format!("kernel wrong, p={p} case {case}"))?;

            let n = rng.gen_range(1..9);
            let basis: Vec<Vec<Scalar>> = (0..3).map(|_| random_vec(p, n, &mut rng)).collect();
            let cv: Vec<Vec<Scalar>> = (0..rng.gen_range(1..5)).map(|_| combination(f, n, &basis, &mut rng)).collect();
            let c = Subspace::from_vectors(f, n, cv.clone());
            let a = Subspace::from_vectors(f, n, (0..rng.gen_range(0..4)).map(|_| combination(f, n, &cv, &mut rng)).collect());
            let bv = (0..rng.gen_range(0..5))
                .map(|i| if i % 2 == 0 { combination(f, n, &basis, &mut rng) } else { random_vec(p, n, &mut rng) })
                .collect();
            let b = Subspace::from_vectors(f, n, bv);
            let lhs = a.sum(&b).unwrap().intersect(&c).unwrap();
            let rhs = a.sum(&b.intersect(&c).unwrap()).unwrap();
            ensure(lhs == rhs, || format!("modular law fails, p={p} case {case}"))?;
        }
    }
    Ok(format!(
        "chop = Frobenius on {commutative} commutative, = augmentation on {groups} kP; {PROPERTY_CASES} cases per prime"
    ))
}

fn determinism() -> Outcome {
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let mut reports = Vec::new();
    for name in ["first.json", "second.json"] {
        let path = dir.path().join(name);
        let o = Command::new(env!("CARGO_BIN_EXE_hochlie"))
            .args(["verify", "--suite", "all", "--seed", "0", "--report"])
            .arg(&path)
            .output()
            .map_err(|e| e.to_string())?;
        ensure(o.status.success(), || format!("verify exited with {:?}: {}", o.status.code(), String::from_utf8_lossy(&o.stderr)))?;
        reports.push(std::fs::read(&path).map_err(|e| e.to_string())?);
    }
    ensure(reports[0] == reports[1], || "reports differ".into())?;
    Ok(format!("two runs, {} identical bytes", reports[0].len()))
}

struct Criterion {
    id: u32,
    name: &'static str,
    limit: Duration,
    run: fn() -> Outcome,
}

const CRITERIA: [Criterion; 10] = [
    Criterion { id: 1, name: "dim HH¹(kC_p) = p", limit: LIMIT_CYCLIC, run: cyclic_dims },
    Criterion { id: 2, name: "HH¹(k(C_p)^n) ≅ W(n;1)", limit: LIMIT_WITT, run: witt_dims },
    Criterion { id: 3, name: "simplicity dichotomy", limit: LIMIT_DICHOTOMY, run: dichotomy },
    Criterion { id: 4, name: "dim HH¹(kS3) over GF(3) = 1", limit: LIMIT_S3, run: s3_dim },
    Criterion { id: 5, name: "J = J(Z)A criterion", limit: LIMIT_DEFAULT, run: radical_generated_by_center },
    Criterion { id: 6, name: "dim J/J² ≤ dim soc_Z(HH¹), socle maps", limit: LIMIT_DEFAULT, run: socle_inequality },
    Criterion { id: 7, name: "dim HH¹ ≥ 2 on local test algebras", limit: LIMIT_DEFAULT, run: lower_bound },
    Criterion { id: 8, name: "lemma and filtration suites", limit: LIMIT_DEFAULT, run: lemma_suites },
    Criterion { id: 9, name: "oracle agreement and property suites", limit: LIMIT_DEFAULT, run: oracles },
    Criterion { id: 10, name: "verify reports are byte-identical", limit: LIMIT_DEFAULT, run: determinism },
];

fn main() -> ExitCode {
    let mut failed = 0;
    for c in &CRITERIA {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(c.run)).unwrap_or_else(|_| Err("panicked".into()));
        let took = start.elapsed();
        let outcome = match outcome {
            Ok(detail) if took > c.limit => Err(format!("{detail}; over the {:?} limit", c.limit)),
            other => other,
        };
        let (tag, detail) = match &outcome {
            Ok(d) => ("PASS", d),
            Err(d) => ("FAIL", d),
        };
        if outcome.is_err() {
            failed += 1;
        }
        println!("criterion {:>2} {tag}  {}  [{:.2} s]  {detail}", c.id, c.name, took.as_secs_f64());
    }
    println!("acceptance: {} of {} criteria pass", CRITERIA.len() - failed, CRITERIA.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
